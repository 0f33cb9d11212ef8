use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::env::{Sym, Var};
use super::expr::Expr;
use super::formula::Formula;
use super::term::Term;
use super::word::{Letter, MixedWord};
use crate::error::{Error, Result};

/// The replacement word of an assumption on `x`: either `a·x` or ε.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Replacement {
    Prefix(Sym),
    Eps,
}

/// An assumption `(x, ax)` or `(x, ε)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assumption {
    pub var: Var,
    pub repl: Replacement,
}

impl Assumption {
    pub fn prefix(var: Var, a: Sym) -> Assumption {
        Assumption {
            var,
            repl: Replacement::Prefix(a),
        }
    }

    pub fn eps(var: Var) -> Assumption {
        Assumption {
            var,
            repl: Replacement::Eps,
        }
    }

    /// The replacement as a mixed word.
    pub fn word(&self) -> MixedWord {
        match self.repl {
            Replacement::Prefix(a) => MixedWord(alloc::vec![Letter::Sym(a), Letter::Var(self.var)]),
            Replacement::Eps => MixedWord::eps(),
        }
    }
}

/// A finite set of assumptions. Any set can be represented so that invariant
/// violations are observable; application checks them.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubstSet(pub BTreeSet<Assumption>);

impl SubstSet {
    pub fn new() -> SubstSet {
        SubstSet(BTreeSet::new())
    }

    pub fn singleton(a: Assumption) -> SubstSet {
        let mut s = BTreeSet::new();
        s.insert(a);
        SubstSet(s)
    }

    pub fn with(&self, a: Assumption) -> SubstSet {
        let mut s = self.0.clone();
        s.insert(a);
        SubstSet(s)
    }

    pub fn union(&self, other: &SubstSet) -> SubstSet {
        SubstSet(self.0.union(&other.0).copied().collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Assumption> {
        self.0.iter()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.0.iter().map(|a| a.var).collect()
    }

    pub fn get(&self, x: Var) -> Option<Replacement> {
        self.0.iter().find(|a| a.var == x).map(|a| a.repl)
    }

    /// No two distinct members share a variable.
    pub fn is_functional(&self) -> bool {
        let vars: Vec<Var> = self.0.iter().map(|a| a.var).collect();
        vars.windows(2).all(|w| w[0] != w[1])
    }

    /// No member's variable occurs in another member's replacement.
    pub fn is_non_crossing(&self) -> bool {
        self.0.iter().all(|a| {
            self.0
                .iter()
                .filter(|b| *b != a)
                .all(|b| !b.word().contains_var(a.var))
        })
    }

    pub fn check(&self) -> Result<()> {
        if !self.is_functional() {
            return Err(Error::Precondition(format!(
                "substitution set {:?} is not functional",
                self.0
            )));
        }
        if !self.is_non_crossing() {
            return Err(Error::Precondition(format!(
                "substitution set {:?} is crossing",
                self.0
            )));
        }
        Ok(())
    }
}

/// Entities supporting `(x, w)` substitution.
pub trait Substitute: Sized + Clone {
    /// Replaces every occurrence of `x` by `w`.
    fn substitute(&self, x: Var, w: &MixedWord) -> Self;

    /// Applies the members of `xs` in ascending order.
    fn apply(&self, xs: &SubstSet) -> Result<Self> {
        xs.check()?;
        Ok(self.apply_unchecked(xs))
    }

    /// Applies the members of `xs` in ascending order without checking it.
    fn apply_unchecked(&self, xs: &SubstSet) -> Self {
        xs.iter()
            .fold(self.clone(), |e, a| e.substitute(a.var, &a.word()))
    }
}

impl Substitute for MixedWord {
    fn substitute(&self, x: Var, w: &MixedWord) -> MixedWord {
        let mut out = Vec::with_capacity(self.len() + w.len());
        for &l in self.letters() {
            if l == Letter::Var(x) {
                out.extend_from_slice(w.letters());
            } else {
                out.push(l);
            }
        }
        MixedWord(out)
    }
}

impl Substitute for Term {
    fn substitute(&self, x: Var, w: &MixedWord) -> Term {
        Term::substitute(self, x, &Term::of_word(w))
    }
}

impl Substitute for Formula {
    fn substitute(&self, x: Var, w: &MixedWord) -> Formula {
        Formula::substitute(self, x, &Term::of_word(w))
    }
}

impl Substitute for Expr {
    fn substitute(&self, x: Var, w: &MixedWord) -> Expr {
        if !self.contains_var(x) {
            return self.clone();
        }
        match self {
            Expr::Word(a) => Expr::Word(a.substitute(x, w)),
            Expr::Empty => Expr::Empty,
            Expr::Bool(op, cs) => Expr::Bool(*op, cs.iter().map(|c| c.substitute(x, w)).collect()),
            Expr::Cat(l, r) => Expr::cat(l.substitute(x, w), r.substitute(x, w)),
            Expr::Star(e) => Expr::star(e.substitute(x, w)),
            Expr::Constraint(e, phi) => {
                Expr::constraint(e.substitute(x, w), Substitute::substitute(phi, x, w))
            }
            Expr::Match(a, e) => Expr::matching(a.substitute(x, w), e.substitute(x, w)),
        }
    }
}

/// `entity_(x,w)`.
pub fn substitute<T: Substitute>(entity: &T, x: Var, w: &MixedWord) -> T {
    entity.substitute(x, w)
}

/// `entity_X`, with `X` checked to be functional and non-crossing.
pub fn apply_substitution_set<T: Substitute>(entity: &T, xs: &SubstSet) -> Result<T> {
    entity.apply(xs)
}
