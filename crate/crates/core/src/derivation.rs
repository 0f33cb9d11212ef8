//! Constrained partial derivatives of mixed words and expressions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::syntax::{
    Assumption, BoolOp, Expr, Letter, MixedWord, SubstSet, Substitute, Sym,
};

/// Pairs (mixed word, substitution set).
pub type DerivedWordSet = BTreeSet<(MixedWord, SubstSet)>;

/// Pairs (expression, substitution set).
pub type DerivativeSet = BTreeSet<(Expr, SubstSet)>;

/// ∂_a(α).
pub fn derive_word(alpha: &MixedWord, a: Sym) -> DerivedWordSet {
    let mut out = DerivedWordSet::new();
    let letters = alpha.letters();
    let Some((&first, rest)) = letters.split_first() else {
        return out;
    };
    let rest = MixedWord(rest.to_vec());
    match first {
        Letter::Sym(s) if s == a => {
            out.insert((rest, SubstSet::new()));
        }
        Letter::Sym(_) => {}
        Letter::Var(x) => {
            let grow = Assumption::prefix(x, a);
            out.insert((
                MixedWord::var(x).concat(&rest.substitute(x, &grow.word())),
                SubstSet::singleton(grow),
            ));
            let erased = rest.substitute(x, &MixedWord::eps());
            for (w, xs) in derive_word(&erased, a) {
                out.insert((w, xs.with(Assumption::eps(x))));
            }
        }
    }
    out
}

fn apply(e: &Expr, xs: &SubstSet) -> Result<Expr> {
    e.apply(xs).map_err(|err| match err {
        Error::Precondition(m) => Error::Invariant(m),
        other => other,
    })
}

/// ∂_a(αE₂) where the left operand of the catenation is the word α. The first
/// letter is consumed as in the word derivative, with the assumption on a
/// leading variable also applied to E₂.
fn derive_word_cat(alpha: &MixedWord, e2: &Expr, a: Sym) -> Result<DerivativeSet> {
    let mut out = DerivativeSet::new();
    let letters = alpha.letters();
    let Some((&first, rest)) = letters.split_first() else {
        return derive_expr(e2, a);
    };
    let rest = MixedWord(rest.to_vec());
    match first {
        Letter::Sym(s) if s == a => {
            out.insert((Expr::cat(Expr::Word(rest), e2.clone()), SubstSet::new()));
        }
        Letter::Sym(_) => {}
        Letter::Var(x) => {
            let grow = Assumption::prefix(x, a);
            let gw = grow.word();
            out.insert((
                Expr::cat(
                    Expr::Word(MixedWord::var(x).concat(&rest.substitute(x, &gw))),
                    e2.substitute(x, &gw),
                ),
                SubstSet::singleton(grow),
            ));
            let eps = MixedWord::eps();
            let erased_rest = rest.substitute(x, &eps);
            let erased_e2 = e2.substitute(x, &eps);
            for (e, xs) in derive_word_cat(&erased_rest, &erased_e2, a)? {
                out.insert((e, xs.with(Assumption::eps(x))));
            }
        }
    }
    Ok(out)
}

/// ∂_a(E). Only binary sums are accepted as boolean operators.
pub fn derive_expr(e: &Expr, a: Sym) -> Result<DerivativeSet> {
    let mut out = DerivativeSet::new();
    match e {
        Expr::Word(alpha) => {
            for (w, xs) in derive_word(alpha, a) {
                out.insert((Expr::Word(w), xs));
            }
        }
        Expr::Empty => {}
        Expr::Bool(BoolOp::Sum, cs) => {
            for c in cs {
                out.extend(derive_expr(c, a)?);
            }
        }
        Expr::Bool(op, _) => {
            return Err(Error::UnsupportedOperator(format!(
                "derivation is defined for sums only, found {:?}",
                op
            )))
        }
        Expr::Cat(l, r) => {
            if let Expr::Word(alpha) = &**l {
                return derive_word_cat(alpha, r, a);
            }
            for (l2, xs) in derive_expr(l, a)? {
                out.insert((Expr::cat(l2, apply(r, &xs)?), xs));
            }
            let guard = Expr::matching(MixedWord::eps(), (**l).clone());
            for (r2, xs) in derive_expr(r, a)? {
                out.insert((Expr::cat(apply(&guard, &xs)?, r2), xs));
            }
        }
        Expr::Star(inner) => {
            for (e2, xs) in derive_expr(inner, a)? {
                out.insert((Expr::cat(e2, apply(e, &xs)?), xs));
            }
        }
        Expr::Constraint(inner, phi) => {
            for (e2, xs) in derive_expr(inner, a)? {
                let phi2 = phi.apply(&xs).map_err(|m| Error::Invariant(format!("{}", m)))?;
                out.insert((Expr::constraint(e2, phi2), xs));
            }
        }
        Expr::Match(alpha, inner) => {
            for (alpha2, x1) in derive_word(alpha, a) {
                let inner1 = apply(inner, &x1)?;
                for (e2, x2) in derive_expr(&inner1, a)? {
                    let v1 = x1.variables();
                    if let Some(v) = x2.variables().intersection(&v1).next() {
                        return Err(Error::Invariant(format!(
                            "variable {:?} fixed twice while deriving a match",
                            v
                        )));
                    }
                    let alpha3 = alpha2.apply(&x2).map_err(|m| Error::Invariant(format!("{}", m)))?;
                    out.insert((Expr::matching(alpha3, e2), x1.union(&x2)));
                }
            }
        }
    }
    Ok(out)
}

/// ∂_w(E) for a nonempty word; later steps do not inherit earlier sets.
pub fn derive_expr_word(e: &Expr, w: &[Sym]) -> Result<DerivativeSet> {
    Ok(derive_expr_word_history(e, w)?
        .into_iter()
        .map(|(e, mut hist)| {
            let last = hist.pop().unwrap_or_default();
            (e, last)
        })
        .collect())
}

/// ∂_w(E) keeping, for each branch, the substitution set of every step.
pub fn derive_expr_word_history(e: &Expr, w: &[Sym]) -> Result<BTreeSet<(Expr, Vec<SubstSet>)>> {
    if w.is_empty() {
        return Err(Error::Precondition(
            "derivative with respect to the empty word".into(),
        ));
    }
    let mut cur: BTreeSet<(Expr, Vec<SubstSet>)> = BTreeSet::new();
    cur.insert((e.clone(), Vec::new()));
    for &a in w {
        let mut next = BTreeSet::new();
        for (e, hist) in &cur {
            for (e2, xs) in derive_expr(e, a)? {
                let mut h = hist.clone();
                h.push(xs);
                next.insert((e2, h));
            }
        }
        cur = next;
    }
    Ok(cur)
}

fn is_eps(e: &Expr) -> bool {
    matches!(e, Expr::Word(w) if w.is_empty())
}

/// Nullability of a variable-free, constraint-free expression.
fn closed_null(e: &Expr) -> Option<bool> {
    match e {
        Expr::Word(w) => w.variables().is_empty().then(|| w.is_empty()),
        Expr::Empty => Some(false),
        Expr::Bool(op, cs) => {
            let vals = cs.iter().map(closed_null).collect::<Option<Vec<_>>>()?;
            Some(op.truth(&vals))
        }
        Expr::Cat(l, r) => Some(closed_null(l)? && closed_null(r)?),
        Expr::Star(inner) => closed_null(inner).map(|_| true),
        Expr::Constraint(..) => None,
        Expr::Match(alpha, inner) => {
            let n = closed_null(inner)?;
            alpha.variables().is_empty().then(|| alpha.is_empty() && n)
        }
    }
}

fn simplify_step(e: &Expr) -> Expr {
    match e {
        Expr::Word(_) | Expr::Empty => e.clone(),
        Expr::Bool(op, cs) => {
            let cs: Vec<Expr> = cs.iter().map(simplify_step).collect();
            if *op == BoolOp::Sum && cs.len() == 2 {
                if cs[0] == Expr::Empty {
                    return cs[1].clone();
                }
                if cs[1] == Expr::Empty {
                    return cs[0].clone();
                }
            }
            Expr::Bool(*op, cs)
        }
        Expr::Cat(l, r) => {
            let l = simplify_step(l);
            let r = simplify_step(r);
            if l == Expr::Empty || r == Expr::Empty {
                return Expr::Empty;
            }
            if is_eps(&l) {
                return r;
            }
            if is_eps(&r) {
                return l;
            }
            if let Expr::Cat(a, b) = l {
                return Expr::cat(*a, Expr::cat(*b, r));
            }
            Expr::cat(l, r)
        }
        Expr::Star(inner) => Expr::star(simplify_step(inner)),
        Expr::Constraint(inner, phi) => {
            let inner = simplify_step(inner);
            if inner == Expr::Empty {
                return Expr::Empty;
            }
            Expr::constraint(inner, phi.clone())
        }
        Expr::Match(alpha, inner) => {
            let inner = simplify_step(inner);
            if inner == Expr::Empty {
                return Expr::Empty;
            }
            if alpha.is_empty() {
                if let Some(n) = closed_null(&inner) {
                    return if n { Expr::eps() } else { Expr::Empty };
                }
                if let Expr::Match(beta, _) = &inner {
                    if beta.is_empty() {
                        return inner;
                    }
                }
            }
            if let (Some(u), Expr::Word(w)) = (alpha.as_sword(), &inner) {
                if let Some(v) = w.as_sword() {
                    return if u == v { Expr::Word(alpha.clone()) } else { Expr::Empty };
                }
            }
            Expr::matching(alpha.clone(), inner)
        }
    }
}

/// Language-preserving rewriting: removes ∅ operands and ε factors, collapses
/// ground matches and right-associates catenations.
pub fn simplify_expr(e: &Expr) -> Expr {
    let mut cur = e.clone();
    loop {
        let next = simplify_step(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Simplifies every expression and drops the pairs that become ∅.
pub fn simplify(d: &DerivativeSet) -> DerivativeSet {
    d.iter()
        .map(|(e, xs)| (simplify_expr(e), xs.clone()))
        .filter(|(e, _)| *e != Expr::Empty)
        .collect()
}

