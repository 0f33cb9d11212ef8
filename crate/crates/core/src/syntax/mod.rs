//! Environments, words, terms, formulas, constrained expressions and their
//! substitution operators.

mod env;
mod expr;
mod formula;
mod parse;
mod print;
mod subst;
mod term;
mod word;

pub use env::{parse_environment, Env, SWord, Sym, Var, KEYWORDS};
pub use expr::{BoolOp, Expr};
pub use formula::{erase_vars, Formula};
pub use parse::{parse_expression, parse_formula, parse_term, parse_word};
pub use print::{show_expr, show_formula, show_subst, show_term, show_word};
pub use subst::{
    apply_substitution_set, substitute, Assumption, Replacement, SubstSet, Substitute,
};
pub use term::{subterms, term_of_word, Term};
pub use word::{variables_of, Letter, MixedWord};

#[cfg(test)]
mod tests;
