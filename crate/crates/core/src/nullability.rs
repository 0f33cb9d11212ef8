//! ε-membership: the fixed (I,r) predicate and the indicator set S^ε.

use alloc::collections::BTreeSet;
use alloc::format;

use crate::error::{Error, Result};
use crate::semantics::{eval_formula, realize_word, Interpretation, Realization};
use crate::syntax::{BoolOp, Expr, Formula, MixedWord, Var};

/// A set of variables to erase and the formula left to satisfy.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndicatorPair {
    pub erased: BTreeSet<Var>,
    pub constraint: Formula,
}

/// S^ε(E).
pub type IndicatorSet = BTreeSet<IndicatorPair>;

/// Null_{I,r}(E).
pub fn null_fixed(i: &Interpretation, r: &Realization, e: &Expr) -> Result<bool> {
    Ok(match e {
        Expr::Word(alpha) => realize_word(r, alpha).is_empty(),
        Expr::Empty => false,
        Expr::Match(alpha, inner) => realize_word(r, alpha).is_empty() && null_fixed(i, r, inner)?,
        Expr::Bool(op, cs) => {
            let mut vals = alloc::vec::Vec::with_capacity(cs.len());
            for c in cs {
                vals.push(null_fixed(i, r, c)?);
            }
            op.truth(&vals)
        }
        Expr::Cat(a, b) => {
            let x = null_fixed(i, r, a)?;
            let y = null_fixed(i, r, b)?;
            x && y
        }
        Expr::Star(_) => true,
        Expr::Constraint(inner, phi) => {
            let x = null_fixed(i, r, inner)?;
            let y = eval_formula(i, r, phi)?;
            x && y
        }
    })
}

/// φ_{X←ε}.
pub fn erase_vars(phi: &Formula, xs: &BTreeSet<Var>) -> Formula {
    phi.erase_vars(xs)
}

fn word_pair(alpha: &MixedWord) -> Option<IndicatorPair> {
    alpha.is_variable_only().then(|| IndicatorPair {
        erased: alpha.variables(),
        constraint: Formula::True,
    })
}

/// S₁ ⊗ S₂.
pub fn otimes(s1: &IndicatorSet, s2: &IndicatorSet) -> IndicatorSet {
    let mut out = IndicatorSet::new();
    for p in s1 {
        for q in s2 {
            let erased: BTreeSet<Var> = p.erased.union(&q.erased).copied().collect();
            let phi = Formula::and_simplified(p.constraint.clone(), q.constraint.clone());
            out.insert(IndicatorPair {
                constraint: phi.erase_vars(&erased),
                erased,
            });
        }
    }
    out
}

/// S^ε(E).
pub fn indicator_set(e: &Expr) -> Result<IndicatorSet> {
    let mut out = IndicatorSet::new();
    match e {
        Expr::Word(alpha) => out.extend(word_pair(alpha)),
        Expr::Empty => {}
        Expr::Match(alpha, inner) => {
            if let Some(p) = word_pair(alpha) {
                let mut s = IndicatorSet::new();
                s.insert(p);
                out = otimes(&s, &indicator_set(inner)?);
            }
        }
        Expr::Bool(BoolOp::Sum, cs) => {
            for c in cs {
                out.extend(indicator_set(c)?);
            }
        }
        Expr::Bool(op, _) => {
            return Err(Error::UnsupportedOperator(format!(
                "indicator sets are defined for sums only, found {:?}",
                op
            )))
        }
        Expr::Cat(a, b) => out = otimes(&indicator_set(a)?, &indicator_set(b)?),
        Expr::Star(_) => {
            out.insert(IndicatorPair {
                erased: BTreeSet::new(),
                constraint: Formula::True,
            });
        }
        Expr::Constraint(inner, phi) => {
            for p in indicator_set(inner)? {
                let f = Formula::and_simplified(phi.clone(), p.constraint);
                out.insert(IndicatorPair {
                    constraint: f.erase_vars(&p.erased),
                    erased: p.erased,
                });
            }
        }
    }
    Ok(out)
}

/// Null_{I,r}(E) through S^ε(E).
pub fn null_fixed_via_indicator(i: &Interpretation, r: &Realization, e: &Expr) -> Result<bool> {
    for p in indicator_set(e)? {
        if p.erased.iter().all(|&x| r.get(x).is_empty()) && eval_formula(i, r, &p.constraint)? {
            return Ok(true);
        }
    }
    Ok(false)
}
