//! Shared environments, worked fixtures and seeded random generators.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use constrex_core::derivation::derive_expr;
use constrex_core::nullability::null_fixed;
use constrex_core::semantics::{FuncBuiltin, FuncDef, Interpretation, PredBuiltin, PredDef, Realization};
use constrex_core::syntax::*;
use constrex_core::{Error, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Σ={a,b,c}, Γ={x,y,z}, ⋖ and ∼ as `lt` and `sim`.
pub fn env_abc() -> Env {
    parse_environment("alphabet: a b c\nvariables: x y z\npredicates: sim/2 lt/2\nfunctions: f/1 g/2")
        .unwrap()
}

/// The environment of the evaluation example.
pub fn env_eval() -> Env {
    parse_environment("alphabet: a b\nvariables: x y z\npredicates: P/1 Q/2 R/2\nfunctions: f/1 g/2 h/2")
        .unwrap()
}

/// The environment of the random corpora.
pub fn env_small() -> Env {
    parse_environment("alphabet: a b\nvariables: x y\npredicates: p/1 q/2\nfunctions: f/1 g/2").unwrap()
}

pub fn word(env: &Env, s: &str) -> SWord {
    env.parse_sword(s).unwrap()
}

pub fn expr(env: &Env, s: &str) -> Expr {
    parse_expression(s, env).unwrap()
}

pub fn formula(env: &Env, s: &str) -> Formula {
    parse_formula(s, env).unwrap()
}

pub fn realization(env: &Env, binds: &[(char, &str)]) -> Realization {
    let mut r = Realization::new();
    for &(x, w) in binds {
        r.set(env.var(x).unwrap(), word(env, w));
    }
    r
}

pub fn interp(preds: &[(&str, PredBuiltin)], funcs: &[(&str, FuncBuiltin)]) -> Interpretation {
    let mut i = Interpretation::new();
    for &(n, b) in preds {
        i = i.with_pred(n, PredDef::Builtin(b));
    }
    for &(n, b) in funcs {
        i = i.with_func(n, FuncDef::Builtin(b));
    }
    i
}

pub const E1: &str = "x b* y | sim(f(x), f(y))";
pub const ANBNCN: &str = "((x -| a*)((y -| b*)(z -| c*))) | sim(x,y) && sim(y,z)";
pub const PHI1: &str = "lt(g(a b,x),a b x) && !sim(a b x,g(a,b x))";
pub const PHI2: &str = "lt((a b) x,a b x) && !lt(a b x,a (b x))";

/// The canonical form of a derivative set: simplified, printed and sorted.
pub fn canon(env: &Env, d: &BTreeSet<(Expr, SubstSet)>) -> BTreeSet<(String, String)> {
    constrex_core::derivation::simplify(d)
        .iter()
        .map(|(e, xs)| (show_expr(env, e), show_subst(env, xs)))
        .collect()
}

/// Pairs written as (expression text, substitution text), canonicalized the
/// same way as [`canon`].
pub fn canon_expected(env: &Env, pairs: &[(&str, &[(char, &str)])]) -> BTreeSet<(String, String)> {
    let d: BTreeSet<(Expr, SubstSet)> = pairs
        .iter()
        .map(|(e, xs)| {
            let mut set = SubstSet::new();
            for &(x, w) in xs.iter() {
                let v = env.var(x).unwrap();
                let a = match w {
                    "eps" => Assumption::eps(v),
                    s => Assumption::prefix(v, env.sym(s.chars().next().unwrap()).unwrap()),
                };
                set = set.with(a);
            }
            (expr(env, e), set)
        })
        .collect();
    canon(env, &d)
}

// ---------------------------------------------------------------- generators

fn syms(env: &Env) -> Vec<Sym> {
    env.all_syms().collect()
}

fn vars(env: &Env) -> Vec<Var> {
    env.all_vars().collect()
}

pub fn random_sword(rng: &mut StdRng, env: &Env, max_len: usize) -> SWord {
    let s = syms(env);
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| s[rng.gen_range(0..s.len())]).collect()
}

pub fn random_mixed_word(rng: &mut StdRng, env: &Env, max_len: usize) -> MixedWord {
    let s = syms(env);
    let v = vars(env);
    let n = rng.gen_range(0..=max_len);
    MixedWord(
        (0..n)
            .map(|_| {
                if !v.is_empty() && rng.gen_bool(0.5) {
                    Letter::Var(v[rng.gen_range(0..v.len())])
                } else {
                    Letter::Sym(s[rng.gen_range(0..s.len())])
                }
            })
            .collect(),
    )
}

/// A random term over the environment's functions.
pub fn random_term(rng: &mut StdRng, env: &Env, depth: usize) -> Term {
    let s = syms(env);
    let v = vars(env);
    let funcs: Vec<(String, usize)> = env.functions().map(|(n, k)| (n.to_string(), k)).collect();
    let leaf = |rng: &mut StdRng| match rng.gen_range(0..6) {
        0 => Term::Eps,
        1 | 2 if !v.is_empty() => Term::Var(v[rng.gen_range(0..v.len())]),
        _ => Term::Sym(s[rng.gen_range(0..s.len())]),
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..5) {
        0 => leaf(rng),
        1 | 2 => Term::cat(random_term(rng, env, depth - 1), random_term(rng, env, depth - 1)),
        _ if !funcs.is_empty() => {
            let (f, k) = &funcs[rng.gen_range(0..funcs.len())];
            Term::app(f, (0..*k).map(|_| random_term(rng, env, depth - 1)).collect())
        }
        _ => leaf(rng),
    }
}

/// A random formula whose atoms draw their arguments from `pool` when given.
pub fn random_formula_with(
    rng: &mut StdRng,
    env: &Env,
    depth: usize,
    term: &mut dyn FnMut(&mut StdRng) -> Term,
) -> Formula {
    let preds: Vec<(String, usize)> = env.predicates().map(|(n, k)| (n.to_string(), k)).collect();
    let atom = |rng: &mut StdRng, term: &mut dyn FnMut(&mut StdRng) -> Term| {
        let (p, k) = &preds[rng.gen_range(0..preds.len())];
        Formula::atom(p, (0..*k).map(|_| term(rng)).collect())
    };
    if depth == 0 {
        return match rng.gen_range(0..12) {
            0 => Formula::True,
            1 => Formula::False,
            _ => atom(rng, term),
        };
    }
    match rng.gen_range(0..7) {
        0 | 1 => atom(rng, term),
        2 => Formula::not(random_formula_with(rng, env, depth - 1, term)),
        3 => Formula::and(
            random_formula_with(rng, env, depth - 1, term),
            random_formula_with(rng, env, depth - 1, term),
        ),
        4 => Formula::or(
            random_formula_with(rng, env, depth - 1, term),
            random_formula_with(rng, env, depth - 1, term),
        ),
        5 => Formula::implies(
            random_formula_with(rng, env, depth - 1, term),
            random_formula_with(rng, env, depth - 1, term),
        ),
        _ => Formula::ite(
            random_formula_with(rng, env, depth - 1, term),
            random_formula_with(rng, env, depth - 1, term),
            random_formula_with(rng, env, depth - 1, term),
        ),
    }
}

pub fn random_formula(rng: &mut StdRng, env: &Env, depth: usize) -> Formula {
    random_formula_with(rng, env, depth, &mut |rng| random_term(rng, env, 1))
}

/// A random sum-only constrained expression of depth at most `depth`.
pub fn random_expr(rng: &mut StdRng, env: &Env, depth: usize) -> Expr {
    if depth == 0 {
        return match rng.gen_range(0..10) {
            0 => Expr::Empty,
            _ => Expr::Word(random_mixed_word(rng, env, 2)),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..12) {
        0 | 1 => Expr::Word(random_mixed_word(rng, env, 2)),
        2 | 3 => Expr::sum(random_expr(rng, env, d), random_expr(rng, env, d)),
        4..=6 => Expr::cat(random_expr(rng, env, d), random_expr(rng, env, d)),
        7 | 8 => Expr::star(random_expr(rng, env, d)),
        9 | 10 => Expr::constraint(random_expr(rng, env, d), random_formula(rng, env, 1)),
        _ => Expr::matching(random_mixed_word(rng, env, 2), random_expr(rng, env, d)),
    }
}

/// Every predicate and function symbol bound to a random builtin.
pub fn random_interp(rng: &mut StdRng, env: &Env) -> Interpretation {
    let mut i = Interpretation::new();
    for (p, _) in env.predicates() {
        let b = PredBuiltin::ALL[rng.gen_range(0..PredBuiltin::ALL.len())];
        i = i.with_pred(p, PredDef::Builtin(b));
    }
    for (f, _) in env.functions() {
        let b = FuncBuiltin::ALL[rng.gen_range(0..FuncBuiltin::ALL.len())];
        i = i.with_func(f, FuncDef::Builtin(b));
    }
    i
}

pub fn random_realization(rng: &mut StdRng, env: &Env, max_len: usize) -> Realization {
    let mut r = Realization::new();
    for x in env.all_vars() {
        r.set(x, random_sword(rng, env, max_len));
    }
    r
}

/// All words over Σ up to length `n`.
pub fn all_words(env: &Env, n: usize) -> Vec<SWord> {
    constrex_core::oracle::words_up_to(&syms(env), n)
}

// ------------------------------------------------- derivative-based membership

/// True when r agrees with every assumption of X.
pub fn compatible(r: &Realization, xs: &SubstSet) -> bool {
    xs.iter().all(|asm| match asm.repl {
        Replacement::Prefix(a) => r.get(asm.var).first() == Some(&a),
        Replacement::Eps => r.get(asm.var).is_empty(),
    })
}

/// The X-associated realization of a compatible r.
pub fn associated(r: &Realization, xs: &SubstSet) -> Realization {
    let mut out = r.clone();
    for asm in xs.iter() {
        match asm.repl {
            Replacement::Prefix(_) => out.set(asm.var, r.get(asm.var)[1..].to_vec()),
            Replacement::Eps => out.set(asm.var, Vec::new()),
        }
    }
    out
}

/// Statistics gathered while exploring derivatives.
#[derive(Default, Debug)]
pub struct DeriveStats {
    pub sets: usize,
    pub bad_sets: usize,
    pub invariant_errors: usize,
}

/// Words of length ≤ n accepted under (I,r) by iterated constrained
/// derivatives followed by the fixed nullability test.
pub fn derivative_language(
    i: &Interpretation,
    r: &Realization,
    e: &Expr,
    syms: &[Sym],
    n: usize,
    memo: &mut BTreeMap<(Expr, Sym), Vec<(Expr, SubstSet)>>,
    stats: &mut DeriveStats,
) -> Result<BTreeSet<SWord>> {
    let mut out = BTreeSet::new();
    let mut stack = vec![(e.clone(), r.clone(), Vec::new())];
    let mut seen = BTreeSet::new();
    while let Some((e, r, prefix)) = stack.pop() {
        if !seen.insert((e.clone(), r.clone(), prefix.clone())) {
            continue;
        }
        if null_fixed(i, &r, &e)? {
            out.insert(prefix.clone());
        }
        if prefix.len() == n {
            continue;
        }
        for &a in syms {
            let key = (e.clone(), a);
            if !memo.contains_key(&key) {
                let d = match derive_expr(&e, a) {
                    Ok(d) => d,
                    Err(Error::Invariant(_)) => {
                        stats.invariant_errors += 1;
                        Default::default()
                    }
                    Err(err) => return Err(err),
                };
                for (_, xs) in &d {
                    stats.sets += 1;
                    if !(xs.is_functional() && xs.is_non_crossing()) {
                        stats.bad_sets += 1;
                    }
                }
                memo.insert(key.clone(), d.into_iter().collect());
            }
            for (e2, xs) in &memo[&key] {
                if compatible(&r, xs) {
                    let mut p = prefix.clone();
                    p.push(a);
                    stack.push((e2.clone(), associated(&r, xs), p));
                }
            }
        }
    }
    Ok(out)
}
