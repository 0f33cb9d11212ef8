//! Brute-force reference implementations for differential testing.
//!
//! Nothing here calls regularization, derivatives, nullability or the logic
//! pipeline: languages and formulas are evaluated straight from their
//! definitions with bounded enumeration.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::semantics::{FuncBuiltin, FuncDef, Interpretation, PredBuiltin, PredDef, Realization, Regex};
use crate::syntax::{BoolOp, Env, Expr, Formula, Letter, MixedWord, SWord, Sym, Term, Var};

/// Search bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub max_word_len: usize,
    /// Longest word tried as the image of a variable.
    pub max_realization_len: usize,
    /// Interpretations to try; `None` means every combination of builtins for
    /// the symbols that occur.
    pub interpretation_samples: Option<Vec<Interpretation>>,
}

impl Default for Bound {
    fn default() -> Bound {
        Bound {
            max_word_len: 4,
            max_realization_len: 2,
            interpretation_samples: None,
        }
    }
}

/// Outcome of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<T> {
    Yes(T),
    NoWithinBound,
}

impl<T> Verdict<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }
}

/// All words over `syms` of length at most `n`, shortest first.
pub fn words_up_to(syms: &[Sym], n: usize) -> Vec<SWord> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for &s in syms {
                let mut v: SWord = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn concat_bounded(l: &BTreeSet<SWord>, r: &BTreeSet<SWord>, n: usize) -> BTreeSet<SWord> {
    let mut out = BTreeSet::new();
    for u in l {
        for v in r {
            if u.len() + v.len() <= n {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.insert(w);
            }
        }
    }
    out
}

/// L(R) ∩ Σ^{≤n}, built bottom-up from the operands' bounded languages.
pub fn enumerate_language(r: &Regex, n: usize) -> BTreeSet<SWord> {
    match r {
        Regex::Lit(w) => {
            let mut s = BTreeSet::new();
            if w.len() <= n {
                s.insert(w.clone());
            }
            s
        }
        Regex::Empty => BTreeSet::new(),
        Regex::Union(a, b) => {
            let mut s = enumerate_language(a, n);
            s.extend(enumerate_language(b, n));
            s
        }
        Regex::Inter(a, b) => {
            let s = enumerate_language(a, n);
            let t = enumerate_language(b, n);
            s.intersection(&t).cloned().collect()
        }
        Regex::Cat(a, b) => concat_bounded(&enumerate_language(a, n), &enumerate_language(b, n), n),
        Regex::Star(a) => {
            let base = enumerate_language(a, n);
            let mut acc: BTreeSet<SWord> = BTreeSet::new();
            acc.insert(Vec::new());
            loop {
                let next = concat_bounded(&acc, &base, n);
                let before = acc.len();
                acc.extend(next);
                if acc.len() == before {
                    return acc;
                }
            }
        }
    }
}

fn realize(r: &Realization, alpha: &MixedWord) -> SWord {
    alpha
        .letters()
        .iter()
        .flat_map(|l| match *l {
            Letter::Sym(s) => vec![s],
            Letter::Var(x) => r.get(x).to_vec(),
        })
        .collect()
}

/// Direct term evaluation.
pub fn oracle_eval_term(i: &Interpretation, r: &Realization, t: &Term) -> Result<SWord> {
    Ok(match t {
        Term::Var(x) => r.get(*x).to_vec(),
        Term::Sym(s) => vec![*s],
        Term::Eps => Vec::new(),
        Term::Cat(a, b) => [oracle_eval_term(i, r, a)?, oracle_eval_term(i, r, b)?].concat(),
        Term::App(f, args) => {
            let mut vals = Vec::new();
            for a in args {
                vals.push(oracle_eval_term(i, r, a)?);
            }
            i.func(f)?.apply(&vals)
        }
    })
}

/// Direct formula evaluation.
pub fn oracle_eval_formula(i: &Interpretation, r: &Realization, phi: &Formula) -> Result<bool> {
    let ev = |f: &Formula| oracle_eval_formula(i, r, f);
    Ok(match phi {
        Formula::True => true,
        Formula::False => false,
        Formula::Atom(p, args) => {
            let mut vals = Vec::new();
            for a in args {
                vals.push(oracle_eval_term(i, r, a)?);
            }
            i.pred(p)?.holds(&vals)
        }
        Formula::Not(a) => !ev(a)?,
        Formula::And(a, b) => ev(a)? & ev(b)?,
        Formula::Or(a, b) => ev(a)? | ev(b)?,
        Formula::Implies(a, b) => !ev(a)? | ev(b)?,
        Formula::Ite(c, t, e) => {
            if ev(c)? {
                ev(t)?
            } else {
                ev(e)?
            }
        }
    })
}

/// w ∈ L_{I,r}(E) by structural recursion on E and splits of w.
///
/// A star is unrolled with nonempty leading factors only: any decomposition
/// of w into factors of L(F) can drop its ε factors, so at most |w| factors
/// are needed and |w|+1 unrollings bound the search.
pub fn brute_membership_fixed_r(i: &Interpretation, r: &Realization, e: &Expr, w: &[Sym]) -> Result<bool> {
    Ok(match e {
        Expr::Word(alpha) => realize(r, alpha) == w,
        Expr::Empty => false,
        Expr::Bool(op, cs) => {
            let mut vals = Vec::new();
            for c in cs {
                vals.push(brute_membership_fixed_r(i, r, c, w)?);
            }
            match op {
                BoolOp::Sum => vals.iter().any(|&v| v),
                BoolOp::Inter => vals.iter().all(|&v| v),
                BoolOp::Compl => !vals[0],
            }
        }
        Expr::Cat(a, b) => {
            for k in 0..=w.len() {
                if brute_membership_fixed_r(i, r, a, &w[..k])? && brute_membership_fixed_r(i, r, b, &w[k..])? {
                    return Ok(true);
                }
            }
            false
        }
        Expr::Star(f) => star_member(i, r, f, w, w.len() + 1)?,
        Expr::Constraint(a, phi) => oracle_eval_formula(i, r, phi)? && brute_membership_fixed_r(i, r, a, w)?,
        Expr::Match(alpha, a) => realize(r, alpha) == w && brute_membership_fixed_r(i, r, a, w)?,
    })
}

fn star_member(i: &Interpretation, r: &Realization, f: &Expr, w: &[Sym], fuel: usize) -> Result<bool> {
    if w.is_empty() {
        return Ok(true);
    }
    if fuel == 0 {
        return Ok(false);
    }
    for k in 1..=w.len() {
        if brute_membership_fixed_r(i, r, f, &w[..k])? && star_member(i, r, f, &w[k..], fuel - 1)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every realization of `vars` with images of length at most `n`.
pub fn realizations(vars: &BTreeSet<Var>, syms: &[Sym], n: usize) -> Vec<Realization> {
    let words = words_up_to(syms, n);
    let mut out = vec![Realization::new()];
    for &x in vars {
        let mut next = Vec::new();
        for r in &out {
            for w in &words {
                next.push(r.clone().with(x, w.clone()));
            }
        }
        out = next;
    }
    out
}

/// Some realization r with w ∈ L_{I,r}(E), trying images up to the bound.
#[allow(non_snake_case)]
pub fn brute_membership_fixed_I(
    env: &Env,
    i: &Interpretation,
    e: &Expr,
    w: &[Sym],
    bound: &Bound,
) -> Result<Verdict<Realization>> {
    let syms: Vec<Sym> = env.all_syms().collect();
    for r in realizations(&e.variables(), &syms, bound.max_realization_len) {
        if brute_membership_fixed_r(i, &r, e, w)? {
            return Ok(Verdict::Yes(r));
        }
    }
    Ok(Verdict::NoWithinBound)
}

fn symbols_of(phi: &Formula) -> (BTreeSet<String>, BTreeSet<String>) {
    fn walk_term(t: &Term, fs: &mut BTreeSet<String>) {
        match t {
            Term::Cat(a, b) => {
                walk_term(a, fs);
                walk_term(b, fs);
            }
            Term::App(f, args) => {
                fs.insert(f.clone());
                args.iter().for_each(|a| walk_term(a, fs));
            }
            _ => {}
        }
    }
    fn walk(phi: &Formula, ps: &mut BTreeSet<String>, fs: &mut BTreeSet<String>) {
        match phi {
            Formula::True | Formula::False => {}
            Formula::Atom(p, args) => {
                ps.insert(p.clone());
                args.iter().for_each(|t| walk_term(t, fs));
            }
            Formula::Not(a) => walk(a, ps, fs),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                walk(a, ps, fs);
                walk(b, ps, fs);
            }
            Formula::Ite(c, t, e) => {
                walk(c, ps, fs);
                walk(t, ps, fs);
                walk(e, ps, fs);
            }
        }
    }
    let mut ps = BTreeSet::new();
    let mut fs = BTreeSet::new();
    walk(phi, &mut ps, &mut fs);
    (ps, fs)
}

/// Every interpretation binding each listed symbol to a builtin.
pub fn builtin_interpretations(preds: &BTreeSet<String>, funcs: &BTreeSet<String>) -> Vec<Interpretation> {
    let mut out = vec![Interpretation::new()];
    for p in preds {
        out = out
            .iter()
            .flat_map(|i| PredBuiltin::ALL.iter().map(move |&b| i.clone().with_pred(p, PredDef::Builtin(b))))
            .collect();
    }
    for f in funcs {
        out = out
            .iter()
            .flat_map(|i| FuncBuiltin::ALL.iter().map(move |&b| i.clone().with_func(f, FuncDef::Builtin(b))))
            .collect();
    }
    out
}

/// Some (I,r) with eval_{I,r}(φ) = 1 among the sampled interpretations and
/// the bounded realizations.
pub fn brute_satisfiable_free(
    env: &Env,
    phi: &Formula,
    bound: &Bound,
) -> Result<Verdict<(Interpretation, Realization)>> {
    let samples = match &bound.interpretation_samples {
        Some(s) => s.clone(),
        None => {
            let (ps, fs) = symbols_of(phi);
            builtin_interpretations(&ps, &fs)
        }
    };
    let syms: Vec<Sym> = env.all_syms().collect();
    let rs = realizations(&phi.variables(), &syms, bound.max_realization_len);
    for i in &samples {
        for r in &rs {
            if oracle_eval_formula(i, r, phi)? {
                return Ok(Verdict::Yes((i.clone(), r.clone())));
            }
        }
    }
    Ok(Verdict::NoWithinBound)
}
