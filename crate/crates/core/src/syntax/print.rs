//! Printer producing text that parses back to the same tree.

use alloc::string::String;
use alloc::vec::Vec;

use super::env::Env;
use super::expr::{BoolOp, Expr};
use super::formula::Formula;
use super::subst::{Replacement, SubstSet};
use super::term::Term;
use super::word::{Letter, MixedWord};

const P_CONSTRAINT: u8 = 0;
const P_MATCH: u8 = 1;
const P_SUM: u8 = 2;
const P_INTER: u8 = 3;
const P_CAT: u8 = 4;
const P_UNARY: u8 = 5;
const P_ATOM: u8 = 6;

fn letter_char(env: &Env, l: Letter) -> char {
    match l {
        Letter::Sym(s) => env.sym_char(s),
        Letter::Var(v) => env.var_char(v),
    }
}

/// Prints a mixed word, `eps` for ε.
pub fn show_word(env: &Env, w: &MixedWord) -> String {
    if w.is_empty() {
        return "eps".into();
    }
    let mut out = String::new();
    for (i, &l) in w.letters().iter().enumerate() {
        if i > 0 && env.spaced() {
            out.push(' ');
        }
        out.push(letter_char(env, l));
    }
    out
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Word(w) => {
            if w.len() <= 1 {
                P_ATOM
            } else {
                P_CAT
            }
        }
        Expr::Empty => P_ATOM,
        Expr::Bool(BoolOp::Sum, _) => P_SUM,
        Expr::Bool(BoolOp::Inter, _) => P_INTER,
        Expr::Bool(BoolOp::Compl, _) => P_UNARY,
        Expr::Cat(..) => P_CAT,
        Expr::Star(_) => P_UNARY,
        Expr::Constraint(..) => P_CONSTRAINT,
        Expr::Match(..) => P_MATCH,
    }
}

fn leftmost_unit(e: &Expr) -> &Expr {
    match e {
        Expr::Cat(l, _) => leftmost_unit(l),
        other => other,
    }
}

fn write_expr(env: &Env, e: &Expr, ctx: u8, out: &mut String) {
    if prec(e) < ctx {
        out.push('(');
        write_expr(env, e, P_CONSTRAINT, out);
        out.push(')');
        return;
    }
    match e {
        Expr::Word(w) => out.push_str(&show_word(env, w)),
        Expr::Empty => out.push_str("empty"),
        Expr::Bool(op, cs) => match (op, cs.as_slice()) {
            (BoolOp::Sum, [l, r]) => {
                write_expr(env, l, P_SUM, out);
                out.push_str(" + ");
                write_expr(env, r, P_INTER, out);
            }
            (BoolOp::Inter, [l, r]) => {
                write_expr(env, l, P_INTER, out);
                out.push_str(" & ");
                write_expr(env, r, P_CAT, out);
            }
            (BoolOp::Compl, [c]) => {
                out.push('~');
                write_expr(env, c, P_UNARY, out);
            }
            _ => {
                // Malformed arity: print a sum-shaped fallback.
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" + ");
                    }
                    write_expr(env, c, P_ATOM, out);
                }
            }
        },
        Expr::Cat(l, r) => {
            let wrap_word = matches!(&**l, Expr::Word(w) if !w.is_empty())
                && matches!(leftmost_unit(r), Expr::Word(w) if !w.is_empty());
            if wrap_word || matches!(&**l, Expr::Cat(..)) || prec(l) < P_CAT {
                out.push('(');
                write_expr(env, l, P_CONSTRAINT, out);
                out.push(')');
            } else {
                write_expr(env, l, P_CAT, out);
            }
            out.push(' ');
            write_expr(env, r, P_CAT, out);
        }
        Expr::Star(c) => {
            write_expr(env, c, P_ATOM, out);
            out.push('*');
        }
        Expr::Constraint(c, phi) => {
            write_expr(env, c, P_CONSTRAINT, out);
            out.push_str(" | ");
            write_formula(env, phi, 0, out);
        }
        Expr::Match(alpha, c) => {
            out.push_str(&show_word(env, alpha));
            out.push_str(" -| ");
            write_expr(env, c, P_MATCH, out);
        }
    }
}

/// Prints a constrained expression.
pub fn show_expr(env: &Env, e: &Expr) -> String {
    let mut out = String::new();
    write_expr(env, e, P_CONSTRAINT, &mut out);
    out
}

fn formula_prec(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => 0,
        Formula::Or(..) => 1,
        Formula::And(..) => 2,
        Formula::Not(_) => 3,
        _ => 4,
    }
}

fn write_formula(env: &Env, f: &Formula, ctx: u8, out: &mut String) {
    if formula_prec(f) < ctx {
        out.push('(');
        write_formula(env, f, 0, out);
        out.push(')');
        return;
    }
    match f {
        Formula::True => out.push_str("true"),
        Formula::False => out.push_str("false"),
        Formula::Atom(p, args) => {
            out.push_str(p);
            write_args(env, args, out);
        }
        Formula::Not(a) => {
            out.push('!');
            write_formula(env, a, 3, out);
        }
        Formula::And(a, b) => {
            write_formula(env, a, 2, out);
            out.push_str(" && ");
            write_formula(env, b, 3, out);
        }
        Formula::Or(a, b) => {
            write_formula(env, a, 1, out);
            out.push_str(" || ");
            write_formula(env, b, 2, out);
        }
        Formula::Implies(a, b) => {
            write_formula(env, a, 1, out);
            out.push_str(" -> ");
            write_formula(env, b, 0, out);
        }
        Formula::Ite(c, t, e) => {
            out.push_str("ite(");
            write_formula(env, c, 0, out);
            out.push(',');
            write_formula(env, t, 0, out);
            out.push(',');
            write_formula(env, e, 0, out);
            out.push(')');
        }
    }
}

/// Prints a boolean formula.
pub fn show_formula(env: &Env, f: &Formula) -> String {
    let mut out = String::new();
    write_formula(env, f, 0, &mut out);
    out
}

fn write_args(env: &Env, args: &[Term], out: &mut String) {
    out.push('(');
    for (i, t) in args.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_term(env, t, out);
    }
    out.push(')');
}

fn is_letter(t: &Term) -> bool {
    matches!(t, Term::Var(_) | Term::Sym(_))
}

fn write_term(env: &Env, t: &Term, out: &mut String) {
    match t {
        Term::Var(v) => out.push(env.var_char(*v)),
        Term::Sym(s) => out.push(env.sym_char(*s)),
        Term::Eps => out.push_str("eps"),
        Term::App(f, args) => {
            out.push_str(f);
            write_args(env, args, out);
        }
        Term::Cat(..) => {
            let mut items: Vec<&Term> = Vec::new();
            let mut cur = t;
            while let Term::Cat(l, r) = cur {
                items.push(l);
                cur = r;
            }
            items.push(cur);
            for (i, item) in items.iter().enumerate() {
                if i > 0 && (env.spaced() || !is_letter(items[i - 1]) || !is_letter(item)) {
                    out.push(' ');
                }
                if matches!(item, Term::Cat(..)) {
                    out.push('(');
                    write_term(env, item, out);
                    out.push(')');
                } else {
                    write_term(env, item, out);
                }
            }
        }
    }
}

/// Prints a term; catenation is juxtaposition.
pub fn show_term(env: &Env, t: &Term) -> String {
    let mut out = String::new();
    write_term(env, t, &mut out);
    out
}

/// Prints a substitution set as `{(x,ax),(y,eps)}`.
pub fn show_subst(env: &Env, xs: &SubstSet) -> String {
    let mut out = String::from("{");
    for (i, a) in xs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let x = env.var_char(a.var);
        out.push('(');
        out.push(x);
        out.push(',');
        match a.repl {
            Replacement::Prefix(s) => {
                out.push(env.sym_char(s));
                out.push(x);
            }
            Replacement::Eps => out.push_str("eps"),
        }
        out.push(')');
    }
    out.push('}');
    out
}
