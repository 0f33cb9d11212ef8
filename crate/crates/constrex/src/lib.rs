//! Command-line front end for constrained regular expressions.
//!
//! [`run`] parses arguments, dispatches one subcommand and returns the exit
//! status with the text destined for standard output and standard error.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use constrex_core::derivation::{derive_expr_word, simplify};
use constrex_core::logic::{membership_general, satisfiable_free, SatConfig, Witness};
use constrex_core::nullability::indicator_set;
use constrex_core::oracle::{
    brute_membership_fixed_I, brute_membership_fixed_r, brute_satisfiable_free, builtin_interpretations,
    oracle_eval_formula, Bound, Verdict,
};
use constrex_core::semantics::{
    membership_fixed, regularize, FuncBuiltin, FuncDef, Interpretation, PredBuiltin, PredDef, Realization,
    Regex,
};
use constrex_core::syntax::{
    parse_environment, parse_expression, parse_formula, show_expr, show_formula, show_subst, Env, Expr,
    Formula, SWord, Sym, Term,
};

/// Accepted, SAT, or a completed dump.
pub const EXIT_ACCEPT: i32 = 0;
/// Rejected or UNSAT.
pub const EXIT_REJECT: i32 = 1;
/// Usage, parse or evaluation error.
pub const EXIT_USAGE: i32 = 2;
/// The brute-force oracle disagrees with the engine.
pub const EXIT_DISAGREE: i32 = 3;

/// Environment variable overriding the truth-table atom limit.
pub const MAX_PROPS_VAR: &str = "CONSTREX_MAX_PROPS";

#[derive(Parser, Debug)]
#[command(name = "constrex", version, about = "Constrained regular expressions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide w ∈ L_{I,r}(E) for the given interpretation and realization.
    CheckFixed(Common),
    /// Decide w ∈ L(E) over all interpretations and realizations.
    CheckFree(Common),
    /// Print the constrained derivative of E by a word.
    Derive(Common),
    /// Print the ε-indicator set of E.
    Indicator(Common),
    /// Decide satisfiability of a formula in the free interpretation.
    Sat(Common),
    /// Print the regular expression obtained under fixed bindings.
    Regularize(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Environment file.
    #[arg(long)]
    env: PathBuf,
    /// Expression text.
    #[arg(long, conflicts_with = "expr_file")]
    expr: Option<String>,
    /// File holding the expression text.
    #[arg(long)]
    expr_file: Option<PathBuf>,
    /// Word over the alphabet; `eps` or empty for ε.
    #[arg(long)]
    word: Option<String>,
    /// Formula text for `sat`.
    #[arg(long)]
    formula: Option<String>,
    /// Bindings `name=builtin`, comma separated, e.g. `lt=lenleq,f=projA`.
    #[arg(long)]
    interp: Option<String>,
    /// Bindings `var=word`, comma separated, e.g. `x=aba,y=eps`.
    #[arg(long)]
    real: Option<String>,
    /// Simplify derivative sets before printing.
    #[arg(long)]
    simplify: bool,
    /// Cross-check the answer with the brute-force oracle.
    #[arg(long)]
    oracle: bool,
    /// Oracle bound on word length.
    #[arg(long, default_value_t = 4)]
    max_word_len: usize,
    /// Oracle bound on realization image length.
    #[arg(long, default_value_t = 2)]
    max_real_len: usize,
}

/// Exit status and output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Outcome {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

struct Report {
    code: i32,
    out: String,
}

impl Report {
    fn new(code: i32) -> Report {
        Report { code, out: String::new() }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn oracle(&mut self, agree: bool) {
        self.line(if agree { "oracle: agree" } else { "oracle: disagree" });
        if !agree {
            self.code = EXIT_DISAGREE;
        }
    }
}

type CliResult<T> = Result<T, String>;

fn core<T>(r: constrex_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| e.to_string())
}

/// Runs the command line `args`, whose first element is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_ACCEPT,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome::usage(text),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(r) => Outcome {
            code: r.code,
            stdout: r.out,
            stderr: String::new(),
        },
        Err(msg) => Outcome::usage(format!("error: {}", msg)),
    }
}

fn dispatch(cmd: Command) -> CliResult<Report> {
    match cmd {
        Command::CheckFixed(c) => check_fixed(&c),
        Command::CheckFree(c) => check_free(&c),
        Command::Derive(c) => derive(&c),
        Command::Indicator(c) => indicator(&c),
        Command::Sat(c) => sat(&c),
        Command::Regularize(c) => regularize_cmd(&c),
    }
}

// ------------------------------------------------------------------ inputs

fn load_env(c: &Common) -> CliResult<Env> {
    let text = std::fs::read_to_string(&c.env)
        .map_err(|e| format!("cannot read environment file {}: {}", c.env.display(), e))?;
    core(parse_environment(&text))
}

fn load_expr(c: &Common, env: &Env) -> CliResult<Expr> {
    let text = match (&c.expr, &c.expr_file) {
        (Some(t), _) => t.clone(),
        (None, Some(p)) => std::fs::read_to_string(p)
            .map_err(|e| format!("cannot read expression file {}: {}", p.display(), e))?,
        (None, None) => return Err("an expression is required (--expr or --expr-file)".into()),
    };
    core(parse_expression(&text, env))
}

fn load_word(c: &Common, env: &Env, required: bool) -> CliResult<SWord> {
    match &c.word {
        Some(w) => core(env.parse_sword(w)),
        None if required => Err("a word is required (--word)".into()),
        None => Ok(Vec::new()),
    }
}

fn load_formula(c: &Common, env: &Env) -> CliResult<Formula> {
    match &c.formula {
        Some(t) => core(parse_formula(t, env)),
        None => Err("a formula is required (--formula)".into()),
    }
}

fn bindings(text: &str) -> impl Iterator<Item = CliResult<(&str, &str)>> {
    text.split(',').filter(|s| !s.trim().is_empty()).map(|b| {
        b.split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| format!("binding '{}' is not of the form name=value", b.trim()))
    })
}

/// Parses `--interp`. Every predicate and function of the environment must be
/// bound to a builtin.
pub fn parse_interp(env: &Env, text: &str) -> Result<Interpretation, String> {
    let mut i = Interpretation::new();
    for b in bindings(text) {
        let (name, builtin) = b?;
        if env.predicate_arity(name).is_some() {
            let p = PredBuiltin::from_name(builtin)
                .ok_or_else(|| format!("unknown predicate builtin '{}'", builtin))?;
            i = i.with_pred(name, PredDef::Builtin(p));
        } else if env.function_arity(name).is_some() {
            let f = FuncBuiltin::from_name(builtin)
                .ok_or_else(|| format!("unknown function builtin '{}'", builtin))?;
            i = i.with_func(name, FuncDef::Builtin(f));
        } else {
            return Err(format!("'{}' is not a predicate or function of the environment", name));
        }
    }
    for (p, _) in env.predicates() {
        if !i.predicates.contains_key(p) {
            return Err(format!("predicate '{}' is not bound by --interp", p));
        }
    }
    for (f, _) in env.functions() {
        if !i.functions.contains_key(f) {
            return Err(format!("function '{}' is not bound by --interp", f));
        }
    }
    Ok(i)
}

/// Parses `--real`. Unlisted variables denote ε.
pub fn parse_real(env: &Env, text: &str) -> Result<Realization, String> {
    let mut r = Realization::new();
    for b in bindings(text) {
        let (name, w) = b?;
        let mut cs = name.chars();
        let x = match (cs.next(), cs.next()) {
            (Some(c), None) => env.var(c),
            _ => None,
        }
        .ok_or_else(|| format!("'{}' is not a variable of the environment", name))?;
        r.set(x, core(env.parse_sword(w))?);
    }
    Ok(r)
}

fn fixed_bindings(c: &Common, env: &Env) -> CliResult<(Interpretation, Realization)> {
    let i = parse_interp(env, c.interp.as_deref().ok_or("an interpretation is required (--interp)")?)?;
    let r = parse_real(env, c.real.as_deref().ok_or("a realization is required (--real)")?)?;
    Ok((i, r))
}

fn sat_config() -> CliResult<SatConfig> {
    match std::env::var(MAX_PROPS_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|max_props| SatConfig { max_props })
            .map_err(|_| format!("{} must be a nonnegative integer, found '{}'", MAX_PROPS_VAR, v)),
        Err(_) => Ok(SatConfig::default()),
    }
}

fn bound(c: &Common) -> Bound {
    Bound {
        max_word_len: c.max_word_len,
        max_realization_len: c.max_real_len,
        interpretation_samples: None,
    }
}

// ---------------------------------------------------------------- commands

fn verdict(accept: bool) -> (i32, &'static str) {
    if accept {
        (EXIT_ACCEPT, "ACCEPT")
    } else {
        (EXIT_REJECT, "REJECT")
    }
}

fn check_fixed(c: &Common) -> CliResult<Report> {
    let env = load_env(c)?;
    let e = load_expr(c, &env)?;
    let w = load_word(c, &env, false)?;
    let (i, r) = fixed_bindings(c, &env)?;
    let accept = core(membership_fixed(&i, &r, &e, &w))?;
    let (code, text) = verdict(accept);
    let mut rep = Report::new(code);
    rep.line(text);
    if c.oracle {
        if w.len() > c.max_word_len {
            rep.line("oracle: skipped (word longer than --max-word-len)");
        } else {
            rep.oracle(core(brute_membership_fixed_r(&i, &r, &e, &w))? == accept);
        }
    }
    Ok(rep)
}

fn check_free(c: &Common) -> CliResult<Report> {
    let env = load_env(c)?;
    let e = load_expr(c, &env)?;
    let w = load_word(c, &env, false)?;
    let found = core(membership_general(&env, &e, &w, &sat_config()?))?;
    let (code, text) = verdict(found.is_some());
    let mut rep = Report::new(code);
    rep.line(text);
    if let Some(wit) = &found {
        dump_witness(&env, wit, &mut rep);
    }
    if c.oracle {
        let agree = match &found {
            Some(wit) => core(brute_membership_fixed_r(&wit.interpretation, &wit.realization, &e, &w))?,
            None => {
                let (preds, funcs) = symbols_of_expr(&e);
                let b = bound(c);
                let mut none = true;
                for i in builtin_interpretations(&preds, &funcs) {
                    if core(brute_membership_fixed_I(&env, &i, &e, &w, &b))?.is_yes() {
                        none = false;
                        break;
                    }
                }
                none
            }
        };
        rep.oracle(agree);
    }
    Ok(rep)
}

fn derive(c: &Common) -> CliResult<Report> {
    let env = load_env(c)?;
    let e = load_expr(c, &env)?;
    let w = load_word(c, &env, true)?;
    let mut d = core(derive_expr_word(&e, &w))?;
    if c.simplify {
        d = simplify(&d);
    }
    let lines: BTreeSet<(String, String)> =
        d.iter().map(|(e, xs)| (show_expr(&env, e), show_subst(&env, xs))).collect();
    let mut rep = Report::new(EXIT_ACCEPT);
    for (e, xs) in lines {
        rep.line(format!("{}\t{}", e, xs));
    }
    Ok(rep)
}

fn indicator(c: &Common) -> CliResult<Report> {
    let env = load_env(c)?;
    let e = load_expr(c, &env)?;
    let s = core(indicator_set(&e))?;
    let lines: BTreeSet<String> = s
        .iter()
        .map(|p| {
            let xs: Vec<String> = p.erased.iter().map(|&v| env.var_char(v).to_string()).collect();
            format!("{{{}}} :: {}", xs.join(","), show_formula(&env, &p.constraint))
        })
        .collect();
    let mut rep = Report::new(EXIT_ACCEPT);
    for l in lines {
        rep.line(l);
    }
    Ok(rep)
}

fn sat(c: &Common) -> CliResult<Report> {
    let env = load_env(c)?;
    let phi = load_formula(c, &env)?;
    let found = core(satisfiable_free(&env, &phi, &sat_config()?))?;
    let mut rep = Report::new(if found.is_some() { EXIT_ACCEPT } else { EXIT_REJECT });
    match &found {
        Some(wit) => {
            rep.line("SAT");
            dump_witness(&env, wit, &mut rep);
        }
        None => rep.line("UNSAT"),
    }
    if c.oracle {
        let agree = match &found {
            Some(wit) => core(oracle_eval_formula(&wit.interpretation, &wit.realization, &phi))?,
            None => core(brute_satisfiable_free(&env, &phi, &bound(c)))? == Verdict::NoWithinBound,
        };
        rep.oracle(agree);
    }
    Ok(rep)
}

fn regularize_cmd(c: &Common) -> CliResult<Report> {
    let env = load_env(c)?;
    let e = load_expr(c, &env)?;
    let (i, r) = fixed_bindings(c, &env)?;
    let reg = core(regularize(&i, &r, &e))?;
    let mut rep = Report::new(EXIT_ACCEPT);
    rep.line(show_regex(&env, &reg));
    Ok(rep)
}

// -------------------------------------------------------------- formatting

fn symbols_of_expr(e: &Expr) -> (BTreeSet<String>, BTreeSet<String>) {
    fn term(t: &Term, fs: &mut BTreeSet<String>) {
        match t {
            Term::Cat(a, b) => {
                term(a, fs);
                term(b, fs);
            }
            Term::App(f, args) => {
                fs.insert(f.clone());
                args.iter().for_each(|a| term(a, fs));
            }
            _ => {}
        }
    }
    fn formula(phi: &Formula, ps: &mut BTreeSet<String>, fs: &mut BTreeSet<String>) {
        match phi {
            Formula::True | Formula::False => {}
            Formula::Atom(p, args) => {
                ps.insert(p.clone());
                args.iter().for_each(|a| term(a, fs));
            }
            Formula::Not(a) => formula(a, ps, fs),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                formula(a, ps, fs);
                formula(b, ps, fs);
            }
            Formula::Ite(a, b, d) => {
                formula(a, ps, fs);
                formula(b, ps, fs);
                formula(d, ps, fs);
            }
        }
    }
    fn walk(e: &Expr, ps: &mut BTreeSet<String>, fs: &mut BTreeSet<String>) {
        match e {
            Expr::Word(_) | Expr::Empty => {}
            Expr::Bool(_, cs) => cs.iter().for_each(|c| walk(c, ps, fs)),
            Expr::Cat(a, b) => {
                walk(a, ps, fs);
                walk(b, ps, fs);
            }
            Expr::Star(a) | Expr::Match(_, a) => walk(a, ps, fs),
            Expr::Constraint(a, phi) => {
                walk(a, ps, fs);
                formula(phi, ps, fs);
            }
        }
    }
    let (mut ps, mut fs) = (BTreeSet::new(), BTreeSet::new());
    walk(e, &mut ps, &mut fs);
    (ps, fs)
}

/// Writes a word for witness dumps: runs of the separator filler letter (the
/// second symbol) of length ≥ 2 are shortened to `b2`, `b3`, ….
pub fn show_compact(env: &Env, w: &[Sym]) -> String {
    let digits = env.symbols().iter().any(|c| c.is_ascii_digit());
    if w.is_empty() || digits || env.spaced() || env.symbols().len() < 2 {
        return env.show_sword(w);
    }
    let filler = Sym(1);
    let mut out = String::new();
    let mut k = 0;
    while k < w.len() {
        let s = w[k];
        let mut n = 1;
        while s == filler && k + n < w.len() && w[k + n] == filler {
            n += 1;
        }
        out.push(env.sym_char(s));
        if n > 1 {
            let _ = write!(out, "{}", n);
        }
        k += n;
    }
    out
}

fn show_tuple(env: &Env, ws: &[SWord]) -> String {
    ws.iter().map(|w| show_compact(env, w)).collect::<Vec<_>>().join(",")
}

/// Realization lines `x = w`, function table lines `f(args) = w` and
/// predicate table lines `p(args)`; an empty predicate table prints `p = {}`.
fn dump_witness(env: &Env, wit: &Witness, rep: &mut Report) {
    for (&x, w) in &wit.realization.0 {
        rep.line(format!("{} = {}", env.var_char(x), show_compact(env, w)));
    }
    for (name, def) in &wit.interpretation.functions {
        if let FuncDef::Table { entries, .. } = def {
            for (args, w) in entries {
                rep.line(format!("{}({}) = {}", name, show_tuple(env, args), show_compact(env, w)));
            }
        }
    }
    for (name, def) in &wit.interpretation.predicates {
        if let PredDef::Table { entries, .. } = def {
            let trues: Vec<_> = entries.iter().filter(|(_, &v)| v).collect();
            if trues.is_empty() {
                rep.line(format!("{} = {{}}", name));
            }
            for (args, _) in trues {
                rep.line(format!("{}({})", name, show_tuple(env, args)));
            }
        }
    }
}

const R_SUM: u8 = 0;
const R_INTER: u8 = 1;
const R_CAT: u8 = 2;
const R_ATOM: u8 = 3;

fn regex_prec(r: &Regex) -> u8 {
    match r {
        Regex::Union(..) => R_SUM,
        Regex::Inter(..) => R_INTER,
        Regex::Cat(..) => R_CAT,
        Regex::Lit(w) if w.len() > 1 => R_CAT,
        _ => R_ATOM,
    }
}

fn write_regex(env: &Env, r: &Regex, min: u8, out: &mut String) {
    let paren = regex_prec(r) < min;
    if paren {
        out.push('(');
    }
    match r {
        Regex::Lit(w) => out.push_str(&env.show_sword(w)),
        Regex::Empty => out.push_str("empty"),
        Regex::Union(a, b) => {
            write_regex(env, a, R_SUM, out);
            out.push_str(" + ");
            write_regex(env, b, R_SUM, out);
        }
        Regex::Inter(a, b) => {
            write_regex(env, a, R_INTER, out);
            out.push_str(" & ");
            write_regex(env, b, R_INTER, out);
        }
        Regex::Cat(a, b) => {
            write_regex(env, a, R_CAT, out);
            out.push(' ');
            write_regex(env, b, R_CAT, out);
        }
        Regex::Star(a) => {
            write_regex(env, a, R_ATOM, out);
            out.push('*');
        }
    }
    if paren {
        out.push(')');
    }
}

/// Writes a regular expression in the expression syntax: `+` for union, `&`
/// for intersection, juxtaposition for catenation.
pub fn show_regex(env: &Env, r: &Regex) -> String {
    let mut out = String::new();
    write_regex(env, r, R_SUM, &mut out);
    out
}
