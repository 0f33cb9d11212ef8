use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::syntax::{Formula, Term};

/// P_{(t₁,…,t_k)}: a propositional symbol indexed by a predicate and its exact
/// argument terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropSymbol {
    pub pred: String,
    pub args: Vec<Term>,
}

/// A propositional formula over [`PropSymbol`] atoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropFormula {
    True,
    False,
    Atom(PropSymbol),
    Not(Box<PropFormula>),
    And(Box<PropFormula>, Box<PropFormula>),
    Or(Box<PropFormula>, Box<PropFormula>),
    Implies(Box<PropFormula>, Box<PropFormula>),
    Ite(Box<PropFormula>, Box<PropFormula>, Box<PropFormula>),
}

/// A total map from a finite set of propositional symbols to truth values.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment(pub BTreeMap<PropSymbol, bool>);

impl Assignment {
    /// The value of `p`; symbols outside the domain read as false.
    pub fn get(&self, p: &PropSymbol) -> bool {
        self.0.get(p).copied().unwrap_or(false)
    }
}

/// Limits of the truth-table search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatConfig {
    pub max_props: usize,
}

impl Default for SatConfig {
    fn default() -> SatConfig {
        SatConfig { max_props: 20 }
    }
}

impl PropFormula {
    pub fn eval(&self, a: &Assignment) -> bool {
        match self {
            PropFormula::True => true,
            PropFormula::False => false,
            PropFormula::Atom(p) => a.get(p),
            PropFormula::Not(f) => !f.eval(a),
            PropFormula::And(l, r) => l.eval(a) && r.eval(a),
            PropFormula::Or(l, r) => l.eval(a) || r.eval(a),
            PropFormula::Implies(l, r) => !l.eval(a) || r.eval(a),
            PropFormula::Ite(c, t, e) => {
                if c.eval(a) {
                    t.eval(a)
                } else {
                    e.eval(a)
                }
            }
        }
    }

    pub fn atoms(&self) -> BTreeSet<PropSymbol> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<PropSymbol>) {
        match self {
            PropFormula::True | PropFormula::False => {}
            PropFormula::Atom(p) => {
                out.insert(p.clone());
            }
            PropFormula::Not(f) => f.collect_atoms(out),
            PropFormula::And(l, r) | PropFormula::Or(l, r) | PropFormula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            PropFormula::Ite(c, t, e) => {
                c.collect_atoms(out);
                t.collect_atoms(out);
                e.collect_atoms(out);
            }
        }
    }
}

/// T(φ).
pub fn propositionalize(phi: &Formula) -> PropFormula {
    let b = |f: &Formula| Box::new(propositionalize(f));
    match phi {
        Formula::True => PropFormula::True,
        Formula::False => PropFormula::False,
        Formula::Atom(p, args) => PropFormula::Atom(PropSymbol {
            pred: p.clone(),
            args: args.clone(),
        }),
        Formula::Not(f) => PropFormula::Not(b(f)),
        Formula::And(l, r) => PropFormula::And(b(l), b(r)),
        Formula::Or(l, r) => PropFormula::Or(b(l), b(r)),
        Formula::Implies(l, r) => PropFormula::Implies(b(l), b(r)),
        Formula::Ite(c, t, e) => PropFormula::Ite(b(c), b(t), b(e)),
    }
}

/// P′(φ).
pub fn prop_alphabet(phi: &Formula) -> BTreeSet<PropSymbol> {
    propositionalize(phi).atoms()
}

/// Term(φ): the argument terms of all atoms.
pub fn terms_of_formula(phi: &Formula) -> BTreeSet<Term> {
    let mut out = BTreeSet::new();
    phi.for_each_term(&mut |t| {
        out.insert(t.clone());
    });
    out
}

/// The first satisfying assignment in lexicographic order, atoms sorted and
/// the first atom most significant, or `None` for a contradiction.
pub fn sat_truth_table(psi: &PropFormula, cfg: &SatConfig) -> Result<Option<Assignment>> {
    let atoms: Vec<PropSymbol> = psi.atoms().into_iter().collect();
    let n = atoms.len();
    if n > cfg.max_props || n >= 64 {
        return Err(Error::Resource(format!(
            "{} propositional symbols exceed the limit of {}",
            n, cfg.max_props
        )));
    }
    for code in 0u64..(1u64 << n) {
        let a = Assignment(
            atoms
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), (code >> (n - 1 - i)) & 1 == 1))
                .collect(),
        );
        if psi.eval(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}
