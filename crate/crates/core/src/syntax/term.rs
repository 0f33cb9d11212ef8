use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::env::{Sym, Var};
use super::word::{Letter, MixedWord};

/// A term over the function symbols and the variables.
///
/// Letters of Σ, the ε constant and binary catenation `·` have dedicated
/// variants; all other function symbols are applications.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(Var),
    Sym(Sym),
    Eps,
    Cat(Box<Term>, Box<Term>),
    App(String, Vec<Term>),
}

impl Term {
    pub fn cat(l: Term, r: Term) -> Term {
        Term::Cat(Box::new(l), Box::new(r))
    }

    pub fn app(name: &str, args: Vec<Term>) -> Term {
        Term::App(name.into(), args)
    }

    /// The right-nested catenation term of a mixed word.
    pub fn of_word(w: &MixedWord) -> Term {
        let leaf = |l: &Letter| match *l {
            Letter::Sym(s) => Term::Sym(s),
            Letter::Var(v) => Term::Var(v),
        };
        let letters = w.letters();
        match letters.split_last() {
            None => Term::Eps,
            Some((last, init)) => init
                .iter()
                .rev()
                .fold(leaf(last), |acc, l| Term::cat(leaf(l), acc)),
        }
    }

    /// The right-nested catenation term of a Σ-word.
    pub fn of_sword(w: &[Sym]) -> Term {
        Term::of_word(&MixedWord::from_syms(w))
    }

    pub fn subterms(&self) -> BTreeSet<Term> {
        let mut out = BTreeSet::new();
        self.collect_subterms(&mut out);
        out
    }

    fn collect_subterms(&self, out: &mut BTreeSet<Term>) {
        out.insert(self.clone());
        match self {
            Term::Cat(l, r) => {
                l.collect_subterms(out);
                r.collect_subterms(out);
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_subterms(out)),
            _ => {}
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Var(v) => {
                out.insert(*v);
            }
            Term::Cat(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
            _ => {}
        }
    }

    pub fn contains_var(&self, x: Var) -> bool {
        match self {
            Term::Var(v) => *v == x,
            Term::Cat(l, r) => l.contains_var(x) || r.contains_var(x),
            Term::App(_, args) => args.iter().any(|a| a.contains_var(x)),
            _ => false,
        }
    }

    /// Replaces every occurrence of `x` by `t`. When `t` is ε, a catenation
    /// node whose child was such an occurrence collapses to its other child, so
    /// `·(a,x)` with `x ← ε` becomes `a`. Nodes untouched by the replacement are
    /// kept as written.
    pub fn substitute(&self, x: Var, t: &Term) -> Term {
        match self {
            Term::Var(v) if *v == x => t.clone(),
            Term::Cat(l, r) => {
                let l2 = l.substitute(x, t);
                let r2 = r.substitute(x, t);
                if *t == Term::Eps {
                    if **l == Term::Var(x) {
                        return r2;
                    }
                    if **r == Term::Var(x) {
                        return l2;
                    }
                }
                Term::cat(l2, r2)
            }
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
            other => other.clone(),
        }
    }

    /// Replaces every occurrence of the subterm `from` by `to`.
    pub fn replace(&self, from: &Term, to: &Term) -> Term {
        if self == from {
            return to.clone();
        }
        match self {
            Term::Cat(l, r) => Term::cat(l.replace(from, to), r.replace(from, to)),
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| a.replace(from, to)).collect())
            }
            other => other.clone(),
        }
    }

    /// True for terms built from Σ, ε and `·` only.
    pub fn is_ground_word(&self) -> bool {
        match self {
            Term::Sym(_) | Term::Eps => true,
            Term::Cat(l, r) => l.is_ground_word() && r.is_ground_word(),
            _ => false,
        }
    }

    /// The word denoted by a term built from Σ, ε and `·`.
    pub fn ground_word(&self) -> Option<Vec<Sym>> {
        let mut out = Vec::new();
        self.push_ground(&mut out).then_some(out)
    }

    fn push_ground(&self, out: &mut Vec<Sym>) -> bool {
        match self {
            Term::Sym(s) => {
                out.push(*s);
                true
            }
            Term::Eps => true,
            Term::Cat(l, r) => l.push_ground(out) && r.push_ground(out),
            _ => false,
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Cat(l, r) => 1 + l.size() + r.size(),
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
            _ => 1,
        }
    }
}

/// The right-nested catenation term of a mixed word.
pub fn term_of_word(w: &MixedWord) -> Term {
    Term::of_word(w)
}

/// The set of subterms.
pub fn subterms(t: &Term) -> BTreeSet<Term> {
    t.subterms()
}
