use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::env::Var;
use super::term::Term;

/// A boolean formula over predicate atoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    True,
    False,
    Atom(String, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Ite(Box<Formula>, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str, args: Vec<Term>) -> Formula {
        Formula::Atom(name.into(), args)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn ite(c: Formula, t: Formula, e: Formula) -> Formula {
        Formula::Ite(Box::new(c), Box::new(t), Box::new(e))
    }

    /// Conjunction with ⊤ absorbed on either side.
    pub fn and_simplified(l: Formula, r: Formula) -> Formula {
        match (l, r) {
            (Formula::True, r) => r,
            (l, Formula::True) => l,
            (l, r) => Formula::and(l, r),
        }
    }

    /// Rebuilds the formula with every argument term mapped by `f`.
    pub fn map_terms(&self, f: &mut impl FnMut(&Term) -> Term) -> Formula {
        match self {
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(&mut *f).collect()),
            Formula::Not(a) => Formula::not(a.map_terms(f)),
            Formula::And(a, b) => Formula::and(a.map_terms(f), b.map_terms(f)),
            Formula::Or(a, b) => Formula::or(a.map_terms(f), b.map_terms(f)),
            Formula::Implies(a, b) => Formula::implies(a.map_terms(f), b.map_terms(f)),
            Formula::Ite(c, t, e) => Formula::ite(c.map_terms(f), t.map_terms(f), e.map_terms(f)),
        }
    }

    /// Calls `f` on every atom argument term.
    pub fn for_each_term(&self, f: &mut impl FnMut(&Term)) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(_, args) => args.iter().for_each(&mut *f),
            Formula::Not(a) => a.for_each_term(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.for_each_term(f);
                b.for_each_term(f);
            }
            Formula::Ite(c, t, e) => {
                c.for_each_term(f);
                t.for_each_term(f);
                e.for_each_term(f);
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.for_each_term(&mut |t| out.extend(t.variables()));
        out
    }

    pub fn contains_var(&self, x: Var) -> bool {
        let mut found = false;
        self.for_each_term(&mut |t| found |= t.contains_var(x));
        found
    }

    /// φ_{x←t}.
    pub fn substitute(&self, x: Var, t: &Term) -> Formula {
        if !self.contains_var(x) {
            return self.clone();
        }
        self.map_terms(&mut |u| u.substitute(x, t))
    }

    /// φ_{X←ε}: erases every listed variable, smallest first.
    pub fn erase_vars(&self, xs: &BTreeSet<Var>) -> Formula {
        xs.iter().fold(self.clone(), |f, &x| f.substitute(x, &Term::Eps))
    }
}

/// φ_{X←ε}.
pub fn erase_vars(phi: &Formula, xs: &BTreeSet<Var>) -> Formula {
    phi.erase_vars(xs)
}
