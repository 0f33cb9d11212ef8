use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::interp::{eval_formula, realize_word, Interpretation, Realization};
use crate::error::{Error, Result};
use crate::syntax::{BoolOp, Expr, SWord, Sym};

/// A variable-free regular expression with intersection.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regex {
    Lit(SWord),
    Empty,
    Union(Box<Regex>, Box<Regex>),
    Inter(Box<Regex>, Box<Regex>),
    Cat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn eps() -> Regex {
        Regex::Lit(Vec::new())
    }

    pub fn union(l: Regex, r: Regex) -> Regex {
        Regex::Union(Box::new(l), Box::new(r))
    }

    pub fn inter(l: Regex, r: Regex) -> Regex {
        Regex::Inter(Box::new(l), Box::new(r))
    }

    pub fn cat(l: Regex, r: Regex) -> Regex {
        Regex::Cat(Box::new(l), Box::new(r))
    }

    pub fn star(e: Regex) -> Regex {
        Regex::Star(Box::new(e))
    }

    /// Catenation with ε on the left dropped.
    fn cat_light(l: Regex, r: Regex) -> Regex {
        match l {
            Regex::Lit(w) if w.is_empty() => r,
            l => Regex::cat(l, r),
        }
    }
}

/// True iff ε ∈ L(R).
pub fn regex_null(r: &Regex) -> bool {
    match r {
        Regex::Lit(w) => w.is_empty(),
        Regex::Empty => false,
        Regex::Union(a, b) => regex_null(a) || regex_null(b),
        Regex::Inter(a, b) | Regex::Cat(a, b) => regex_null(a) && regex_null(b),
        Regex::Star(_) => true,
    }
}

/// Antimirov partial derivative; intersection derives pairwise.
pub fn regex_derivative(r: &Regex, a: Sym) -> BTreeSet<Regex> {
    let mut out = BTreeSet::new();
    match r {
        Regex::Lit(w) => {
            if w.first() == Some(&a) {
                out.insert(Regex::Lit(w[1..].to_vec()));
            }
        }
        Regex::Empty => {}
        Regex::Union(l, rr) => {
            out.extend(regex_derivative(l, a));
            out.extend(regex_derivative(rr, a));
        }
        Regex::Inter(l, rr) => {
            let dl = regex_derivative(l, a);
            let dr = regex_derivative(rr, a);
            for x in &dl {
                for y in &dr {
                    out.insert(Regex::inter(x.clone(), y.clone()));
                }
            }
        }
        Regex::Cat(l, rr) => {
            for x in regex_derivative(l, a) {
                out.insert(Regex::cat_light(x, (**rr).clone()));
            }
            if regex_null(l) {
                out.extend(regex_derivative(rr, a));
            }
        }
        Regex::Star(f) => {
            for x in regex_derivative(f, a) {
                out.insert(Regex::cat_light(x, r.clone()));
            }
        }
    }
    out
}

/// Variable-free check used by tests.
pub fn regex_matches(r: &Regex, w: &[Sym]) -> bool {
    let mut cur = BTreeSet::new();
    cur.insert(r.clone());
    for &a in w {
        let mut next = BTreeSet::new();
        for e in &cur {
            next.extend(regex_derivative(e, a));
        }
        if next.is_empty() {
            return false;
        }
        cur = next;
    }
    cur.iter().any(regex_null)
}

/// reg_{I,r}(E).
pub fn regularize(i: &Interpretation, r: &Realization, e: &Expr) -> Result<Regex> {
    Ok(match e {
        Expr::Word(alpha) => Regex::Lit(realize_word(r, alpha)),
        Expr::Empty => Regex::Empty,
        Expr::Bool(BoolOp::Sum, cs) => {
            let mut it = cs.iter();
            let first = match it.next() {
                Some(c) => regularize(i, r, c)?,
                None => Regex::Empty,
            };
            let mut acc = first;
            for c in it {
                acc = Regex::union(acc, regularize(i, r, c)?);
            }
            acc
        }
        Expr::Bool(BoolOp::Inter, cs) if cs.len() == 2 => {
            Regex::inter(regularize(i, r, &cs[0])?, regularize(i, r, &cs[1])?)
        }
        Expr::Bool(op, _) => {
            return Err(Error::UnsupportedOperator(format!(
                "boolean operator {:?} has no regular counterpart",
                op
            )))
        }
        Expr::Cat(a, b) => Regex::cat(regularize(i, r, a)?, regularize(i, r, b)?),
        Expr::Star(a) => Regex::star(regularize(i, r, a)?),
        Expr::Constraint(a, phi) => {
            if eval_formula(i, r, phi)? {
                regularize(i, r, a)?
            } else {
                Regex::Empty
            }
        }
        Expr::Match(alpha, a) => {
            Regex::inter(Regex::Lit(realize_word(r, alpha)), regularize(i, r, a)?)
        }
    })
}

/// w ∈ L_{I,r}(E), decided on the regularized expression.
pub fn membership_fixed(i: &Interpretation, r: &Realization, e: &Expr, w: &[Sym]) -> Result<bool> {
    Ok(regex_matches(&regularize(i, r, e)?, w))
}
