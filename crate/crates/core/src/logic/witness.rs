use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::normal::{normalize_formula, normalize_term};
use super::prop::{propositionalize, sat_truth_table, terms_of_formula, Assignment, PropSymbol, SatConfig};
use crate::derivation::derive_expr_word_history;
use crate::error::{Error, Result};
use crate::nullability::indicator_set;
use crate::semantics::{eval_term, FuncBuiltin, FuncDef, Interpretation, PredDef, Realization};
use crate::syntax::{Env, Expr, Formula, Replacement, SWord, Sym, Term};

/// A concrete interpretation and realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub interpretation: Interpretation,
    pub realization: Realization,
}

/// Left, right and middle words of a term.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Skeletons {
    pub left: BTreeSet<SWord>,
    pub right: BTreeSet<SWord>,
    pub middle: BTreeSet<SWord>,
}

fn product(l: &BTreeSet<SWord>, r: &BTreeSet<SWord>) -> BTreeSet<SWord> {
    let mut out = BTreeSet::new();
    for u in l {
        for v in r {
            let mut w = u.clone();
            w.extend_from_slice(v);
            out.insert(w);
        }
    }
    out
}

fn single(w: SWord) -> BTreeSet<SWord> {
    let mut s = BTreeSet::new();
    s.insert(w);
    s
}

/// LeftWord, RightWord and MiddleWords by mutual induction. Variables and
/// constants outside Σ contribute ε in the base case.
pub fn word_skeletons(t: &Term) -> Skeletons {
    match t {
        Term::Sym(a) => Skeletons {
            left: single(vec![*a]),
            right: single(vec![*a]),
            middle: single(vec![*a]),
        },
        Term::Eps | Term::Var(_) => Skeletons {
            left: single(Vec::new()),
            right: single(Vec::new()),
            middle: single(Vec::new()),
        },
        Term::App(_, args) if args.is_empty() => word_skeletons(&Term::Eps),
        Term::App(_, args) => Skeletons {
            left: BTreeSet::new(),
            right: BTreeSet::new(),
            middle: args.iter().flat_map(|a| word_skeletons(a).middle).collect(),
        },
        Term::Cat(t1, t2) => {
            let s1 = word_skeletons(t1);
            let s2 = word_skeletons(t2);
            let g1 = t1.is_ground_word();
            let g2 = t2.is_ground_word();
            let left = if !g1 || s2.left.is_empty() {
                s1.left.clone()
            } else {
                product(&s1.left, &s2.left)
            };
            let right = if !g2 || s1.right.is_empty() {
                s2.right.clone()
            } else {
                product(&s1.right, &s2.right)
            };
            let mut middle = product(&s1.right, &s2.left);
            if !g1 {
                middle.extend(s1.middle);
            }
            if !g2 {
                middle.extend(s2.middle);
            }
            Skeletons { left, right, middle }
        }
    }
}

/// Every factor, ε included, of every middle word of the terms.
pub fn factors<'a>(ts: impl IntoIterator<Item = &'a Term>) -> BTreeSet<SWord> {
    let mut out = BTreeSet::new();
    out.insert(Vec::new());
    for t in ts {
        for v in word_skeletons(t).middle {
            for i in 0..v.len() {
                for j in i + 1..=v.len() {
                    out.insert(v[i..j].to_vec());
                }
            }
        }
    }
    out
}

fn longest_run(w: &[Sym], b: Sym) -> usize {
    let mut best = 0;
    let mut cur = 0;
    for &s in w {
        cur = if s == b { cur + 1 } else { 0 };
        best = best.max(cur);
    }
    best
}

/// a·b^p·a with p one more than the longest run of `b` in a factor.
pub fn separator_word<'a>(ts: impl IntoIterator<Item = &'a Term>, a: Sym, b: Sym) -> Result<SWord> {
    if a == b {
        return Err(Error::UnsupportedAlphabet(
            "a separator word needs two distinct symbols".into(),
        ));
    }
    let mut run = 0;
    for t in ts {
        for v in word_skeletons(t).middle {
            run = run.max(longest_run(&v, b));
        }
    }
    let mut w = vec![a];
    w.extend(core::iter::repeat_n(b, run + 1));
    w.push(a);
    Ok(w)
}

fn require_binary(env: &Env) -> Result<(Sym, Sym)> {
    if env.symbols().len() < 2 {
        return Err(Error::UnsupportedAlphabet(
            "free-interpretation satisfiability needs at least two symbols".into(),
        ));
    }
    Ok((Sym(0), Sym(1)))
}

fn innermost_app(ts: &BTreeSet<Term>) -> Option<Term> {
    ts.iter()
        .flat_map(Term::subterms)
        .filter(|t| matches!(t, Term::App(_, args) if args.iter().all(Term::is_ground_word)))
        .min()
}

fn for_each_atom(phi: &Formula, f: &mut impl FnMut(&str, &[Term])) {
    match phi {
        Formula::True | Formula::False => {}
        Formula::Atom(p, args) => f(p, args),
        Formula::Not(a) => for_each_atom(a, f),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            for_each_atom(a, f);
            for_each_atom(b, f);
        }
        Formula::Ite(c, t, e) => {
            for_each_atom(c, f);
            for_each_atom(t, f);
            for_each_atom(e, f);
        }
    }
}

/// An (I,r) under which the normalized terms of φ evaluate injectively and
/// every atom takes the value the assignment gives its propositional symbol.
///
/// Variables are bound smallest first to fresh separator words; then each
/// innermost application over ground words receives a table entry mapping its
/// arguments to a fresh separator. Function symbols default to catenation and
/// predicate tables list only the tuples the assignment makes true.
pub fn build_witness(env: &Env, phi: &Formula, assignment: &Assignment) -> Result<Witness> {
    let (a, b) = require_binary(env)?;
    let phi = normalize_formula(phi);
    let mut cur: BTreeSet<Term> = terms_of_formula(&phi).iter().map(normalize_term).collect();
    let mut r = Realization::new();
    let mut tables: BTreeMap<String, BTreeMap<Vec<SWord>, SWord>> = BTreeMap::new();
    loop {
        let vars: BTreeSet<_> = cur.iter().flat_map(Term::variables).collect();
        if let Some(&x) = vars.first() {
            let w = separator_word(&cur, a, b)?;
            let wt = Term::of_sword(&w);
            r.set(x, w);
            cur = cur.iter().map(|t| normalize_term(&t.substitute(x, &wt))).collect();
            continue;
        }
        let Some(app) = innermost_app(&cur) else { break };
        let Term::App(f, args) = &app else { unreachable!() };
        let key: Vec<SWord> = args.iter().filter_map(Term::ground_word).collect();
        let w = separator_word(&cur, a, b)?;
        let wt = Term::of_sword(&w);
        if tables.entry(f.clone()).or_default().insert(key, w).is_some() {
            return Err(Error::Invariant(format!("function table entry for '{}' redefined", f)));
        }
        cur = cur.iter().map(|t| normalize_term(&t.replace(&app, &wt))).collect();
    }
    let mut interp = Interpretation::new();
    let names: BTreeSet<String> = env
        .functions()
        .map(|(n, _)| n.into())
        .chain(tables.keys().cloned())
        .collect();
    for name in names {
        let entries = tables.remove(&name).unwrap_or_default();
        interp = interp.with_func(
            &name,
            FuncDef::Table {
                entries,
                default: FuncBuiltin::Cat,
            },
        );
    }
    let mut preds: BTreeMap<String, BTreeMap<Vec<SWord>, bool>> = env
        .predicates()
        .map(|(n, _)| (String::from(n), BTreeMap::new()))
        .collect();
    let mut failure = None;
    for_each_atom(&phi, &mut |p, args| {
        let sym = PropSymbol {
            pred: p.into(),
            args: args.to_vec(),
        };
        let table = preds.entry(p.into()).or_default();
        if !assignment.get(&sym) {
            return;
        }
        match args.iter().map(|t| eval_term(&interp, &r, t)).collect::<Result<Vec<_>>>() {
            Ok(vals) => {
                table.insert(vals, true);
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    for (name, entries) in preds {
        interp = interp.with_pred(
            &name,
            PredDef::Table {
                entries,
                default: false,
            },
        );
    }
    Ok(Witness {
        interpretation: interp,
        realization: r,
    })
}

/// Some (I,r) with eval_{I,r}(φ) = 1, or `None` when φ is a contradiction.
pub fn satisfiable_free(env: &Env, phi: &Formula, cfg: &SatConfig) -> Result<Option<Witness>> {
    require_binary(env)?;
    let phi = normalize_formula(phi);
    match sat_truth_table(&propositionalize(&phi), cfg)? {
        None => Ok(None),
        Some(assignment) => build_witness(env, &phi, &assignment).map(Some),
    }
}

/// Some (I,r) with ε ∈ L_{I,r}(E), scanning S^ε(E) in order.
pub fn null_general(env: &Env, e: &Expr, cfg: &SatConfig) -> Result<Option<Witness>> {
    require_binary(env)?;
    for pair in indicator_set(e)? {
        if let Some(mut w) = satisfiable_free(env, &pair.constraint, cfg)? {
            for &x in &pair.erased {
                w.realization.set(x, Vec::new());
            }
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Some (I,r) with w ∈ L_{I,r}(E). The realization is given for E itself:
/// it is rebuilt from the residual one by undoing the assumptions of each
/// derivation step, last step first.
pub fn membership_general(env: &Env, e: &Expr, w: &[Sym], cfg: &SatConfig) -> Result<Option<Witness>> {
    require_binary(env)?;
    if w.is_empty() {
        return null_general(env, e, cfg);
    }
    for (residual, history) in derive_expr_word_history(e, w)? {
        let Some(mut wit) = null_general(env, &residual, cfg)? else {
            continue;
        };
        let r = &mut wit.realization;
        for xs in history.iter().rev() {
            for asm in xs.iter() {
                match asm.repl {
                    Replacement::Prefix(s) => {
                        let mut v = vec![s];
                        v.extend_from_slice(r.get(asm.var));
                        r.set(asm.var, v);
                    }
                    Replacement::Eps => r.set(asm.var, Vec::new()),
                }
            }
        }
        return Ok(Some(wit));
    }
    Ok(None)
}
