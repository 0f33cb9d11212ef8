use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::env::Var;
use super::formula::Formula;
use super::word::MixedWord;

/// Boolean operators allowed in expressions. Only `Sum` is supported by
/// derivation and indicator sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoolOp {
    /// Binary union, written `+`.
    Sum,
    /// Binary intersection, written `&`.
    Inter,
    /// Unary complement, written `~`.
    Compl,
}

impl BoolOp {
    pub fn arity(self) -> usize {
        match self {
            BoolOp::Sum | BoolOp::Inter => 2,
            BoolOp::Compl => 1,
        }
    }

    /// The truth function used for ε-membership.
    pub fn truth(self, args: &[bool]) -> bool {
        match self {
            BoolOp::Sum => args.iter().any(|&b| b),
            BoolOp::Inter => args.iter().all(|&b| b),
            BoolOp::Compl => !args[0],
        }
    }
}

/// A constrained expression.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Expr {
    Word(MixedWord),
    Empty,
    Bool(BoolOp, Vec<Expr>),
    Cat(Box<Expr>, Box<Expr>),
    Star(Box<Expr>),
    /// `E | φ`
    Constraint(Box<Expr>, Formula),
    /// `α -| E`
    Match(MixedWord, Box<Expr>),
}

impl Expr {
    pub fn eps() -> Expr {
        Expr::Word(MixedWord::eps())
    }

    pub fn sum(l: Expr, r: Expr) -> Expr {
        Expr::Bool(BoolOp::Sum, alloc::vec![l, r])
    }

    pub fn inter(l: Expr, r: Expr) -> Expr {
        Expr::Bool(BoolOp::Inter, alloc::vec![l, r])
    }

    pub fn compl(e: Expr) -> Expr {
        Expr::Bool(BoolOp::Compl, alloc::vec![e])
    }

    pub fn cat(l: Expr, r: Expr) -> Expr {
        Expr::Cat(Box::new(l), Box::new(r))
    }

    pub fn star(e: Expr) -> Expr {
        Expr::Star(Box::new(e))
    }

    pub fn constraint(e: Expr, phi: Formula) -> Expr {
        Expr::Constraint(Box::new(e), phi)
    }

    pub fn matching(alpha: MixedWord, e: Expr) -> Expr {
        Expr::Match(alpha, Box::new(e))
    }

    /// True iff every boolean node is a binary sum.
    pub fn is_sum_only(&self) -> bool {
        match self {
            Expr::Word(_) | Expr::Empty => true,
            Expr::Bool(op, cs) => {
                *op == BoolOp::Sum && cs.len() == 2 && cs.iter().all(Expr::is_sum_only)
            }
            Expr::Cat(l, r) => l.is_sum_only() && r.is_sum_only(),
            Expr::Star(e) | Expr::Constraint(e, _) | Expr::Match(_, e) => e.is_sum_only(),
        }
    }

    /// Variables occurring in words and formulas.
    pub fn variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Expr::Word(w) => out.extend(w.variables()),
            Expr::Empty => {}
            Expr::Bool(_, cs) => cs.iter().for_each(|c| c.collect_vars(out)),
            Expr::Cat(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Expr::Star(e) => e.collect_vars(out),
            Expr::Constraint(e, phi) => {
                e.collect_vars(out);
                out.extend(phi.variables());
            }
            Expr::Match(a, e) => {
                out.extend(a.variables());
                e.collect_vars(out);
            }
        }
    }

    pub fn contains_var(&self, x: Var) -> bool {
        match self {
            Expr::Word(w) => w.contains_var(x),
            Expr::Empty => false,
            Expr::Bool(_, cs) => cs.iter().any(|c| c.contains_var(x)),
            Expr::Cat(l, r) => l.contains_var(x) || r.contains_var(x),
            Expr::Star(e) => e.contains_var(x),
            Expr::Constraint(e, phi) => e.contains_var(x) || phi.contains_var(x),
            Expr::Match(a, e) => a.contains_var(x) || e.contains_var(x),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Expr::Word(_) | Expr::Empty => 1,
            Expr::Bool(_, cs) => 1 + cs.iter().map(Expr::size).sum::<usize>(),
            Expr::Cat(l, r) => 1 + l.size() + r.size(),
            Expr::Star(e) | Expr::Constraint(e, _) | Expr::Match(_, e) => 1 + e.size(),
        }
    }
}
