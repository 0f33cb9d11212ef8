use alloc::vec::Vec;

use crate::syntax::{Formula, Term};

fn collect_factors(t: &Term, out: &mut Vec<Term>) {
    match t {
        Term::Cat(l, r) => {
            collect_factors(l, out);
            collect_factors(r, out);
        }
        Term::Eps => {}
        other => out.push(normalize_term(other)),
    }
}

/// t′: catenations right-associated with every ε factor removed.
///
/// The rewriting rules `(ε·t)′ = t′`, `(t·ε)′ = t′`, `(s·u)·t → s·(u·t)` are
/// confluent, so the result is the right-nested catenation of the non-ε,
/// non-catenation factors read left to right.
pub fn normalize_term(t: &Term) -> Term {
    match t {
        Term::Var(_) | Term::Sym(_) | Term::Eps => t.clone(),
        Term::App(f, args) => Term::App(f.clone(), args.iter().map(normalize_term).collect()),
        Term::Cat(..) => {
            let mut parts = Vec::new();
            collect_factors(t, &mut parts);
            match parts.pop() {
                None => Term::Eps,
                Some(last) => parts.into_iter().rev().fold(last, |acc, p| Term::cat(p, acc)),
            }
        }
    }
}

/// ldl(t): the number of catenations along the leftmost spine.
pub fn left_dot_level(t: &Term) -> usize {
    match t {
        Term::Cat(l, _) => 1 + left_dot_level(l),
        _ => 0,
    }
}

/// True when no catenation has an ε child or a catenation as left child.
pub fn is_normalized(t: &Term) -> bool {
    match t {
        Term::Cat(l, r) => {
            !matches!(**l, Term::Eps | Term::Cat(..))
                && **r != Term::Eps
                && is_normalized(l)
                && is_normalized(r)
        }
        Term::App(_, args) => args.iter().all(is_normalized),
        _ => true,
    }
}

/// φ′: every argument term normalized.
pub fn normalize_formula(phi: &Formula) -> Formula {
    phi.map_terms(&mut normalize_term)
}
