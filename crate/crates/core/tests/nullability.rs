//! ε-membership with fixed bindings and through indicator sets.

mod common;

use std::collections::BTreeSet;

use common::*;
use constrex_core::nullability::*;
use constrex_core::semantics::*;
use constrex_core::syntax::{show_expr, show_formula, Env, Expr, Formula, Var};
use constrex_core::Error;
use rand::Rng;

fn vars(env: &Env, s: &str) -> BTreeSet<Var> {
    s.chars().map(|c| env.var(c).unwrap()).collect()
}

fn show_set(env: &Env, s: &IndicatorSet) -> BTreeSet<(String, String)> {
    s.iter()
        .map(|p| {
            let xs: String = p.erased.iter().map(|&v| env.var_char(v)).collect();
            (xs, show_formula(env, &p.constraint))
        })
        .collect()
}

#[test]
fn null_fixed_examples() {
    let env = env_abc();
    let i = Interpretation::new();
    let r = Realization::new();
    assert!(null_fixed(&i, &r, &expr(&env, "(a b)*")).unwrap());
    assert!(!null_fixed(&i, &r, &Expr::Empty).unwrap());
    assert!(null_fixed(&i, &r, &expr(&env, "x")).unwrap());
    let rx = realization(&env, &[('x', "a")]);
    assert!(!null_fixed(&i, &rx, &expr(&env, "x")).unwrap());
    assert!(null_fixed(&i, &rx, &expr(&env, "~x")).unwrap());
    assert!(null_fixed(&i, &r, &expr(&env, "x & eps")).unwrap());
}

#[test]
fn null_fixed_constraint_needs_bindings() {
    let env = env_abc();
    let err = null_fixed(&Interpretation::new(), &Realization::new(), &expr(&env, E1)).unwrap_err();
    assert!(matches!(err, Error::Config(_)));
}

#[test]
fn erase_vars_examples() {
    let env = env_abc();
    let show = |f: &Formula| show_formula(&env, f);
    let phi = formula(&env, "sim(f(x),f(y))");
    assert_eq!(show(&erase_vars(&phi, &vars(&env, "xy"))), "sim(f(eps),f(eps))");
    assert_eq!(erase_vars(&phi, &BTreeSet::new()), phi);
    let psi = formula(&env, "sim(f(a b x),f(y))");
    assert_eq!(show(&erase_vars(&psi, &vars(&env, "xy"))), show(&formula(&env, "sim(f(a b),f(eps))")));
}

#[test]
fn indicator_set_examples() {
    let env = env_abc();
    let s = |t: &str| show_set(&env, &indicator_set(&expr(&env, t)).unwrap());
    let expect = |pairs: &[(&str, &str)]| -> BTreeSet<(String, String)> {
        pairs
            .iter()
            .map(|&(xs, f)| (xs.to_string(), show_formula(&env, &formula(&env, f))))
            .collect()
    };
    assert_eq!(s("x b* y"), expect(&[("xy", "true")]));
    assert_eq!(s("x b* y | sim(f(a b x),f(y))"), expect(&[("xy", "sim(f(a b),f(eps))")]));
    assert!(s("empty").is_empty());
    assert!(s("a").is_empty());
    assert_eq!(s("a*"), expect(&[("", "true")]));
    assert_eq!(s("x + y"), expect(&[("x", "true"), ("y", "true")]));
    assert_eq!(s("x -| y*"), expect(&[("x", "true")]));
}

#[test]
fn indicator_set_rejects_non_sums() {
    let env = env_abc();
    let err = indicator_set(&expr(&env, "x & y")).unwrap_err();
    assert!(matches!(err, Error::UnsupportedOperator(_)));
}

#[test]
fn otimes_erases_the_union() {
    let env = env_abc();
    let s1 = indicator_set(&expr(&env, "x | sim(x,y)")).unwrap();
    let s2 = indicator_set(&expr(&env, "y")).unwrap();
    let s = otimes(&s1, &s2);
    assert_eq!(s.len(), 1);
    for p in s {
        assert_eq!(p.erased, vars(&env, "xy"));
        assert!(p.constraint.variables().is_empty());
    }
}

#[test]
fn via_indicator_examples() {
    let env = env_abc();
    let i = interp(&[("sim", PredBuiltin::LenEq)], &[("f", FuncBuiltin::ProjA)]);
    let r = Realization::new();
    assert!(null_fixed_via_indicator(&i, &r, &expr(&env, "(a b)*")).unwrap());
    assert!(!null_fixed_via_indicator(&i, &r, &expr(&env, "a")).unwrap());
    assert!(null_fixed_via_indicator(&i, &r, &expr(&env, E1)).unwrap());
    let rx = realization(&env, &[('x', "a")]);
    assert!(!null_fixed_via_indicator(&i, &rx, &expr(&env, E1)).unwrap());
}

#[test]
fn nullability_triangle() {
    let env = env_small();
    let mut rng = rng(51);
    for _ in 0..500 {
        let depth = rng.gen_range(1..=4);
        let e = random_expr(&mut rng, &env, depth);
        let i = random_interp(&mut rng, &env);
        let r = random_realization(&mut rng, &env, 2);
        let a = null_fixed(&i, &r, &e).unwrap();
        assert_eq!(a, regex_null(&regularize(&i, &r, &e).unwrap()), "{}", show_expr(&env, &e));
        assert_eq!(a, null_fixed_via_indicator(&i, &r, &e).unwrap(), "{}", show_expr(&env, &e));
    }
}

#[test]
fn erased_variables_do_not_survive() {
    let env = env_small();
    let mut rng = rng(52);
    for _ in 0..500 {
        let depth = rng.gen_range(1..=4);
        let e = random_expr(&mut rng, &env, depth);
        for p in indicator_set(&e).unwrap() {
            assert!(p.constraint.variables().is_disjoint(&p.erased), "{}", show_expr(&env, &e));
        }
    }
}
