//! Evaluation under an interpretation and a realization, regularization and a
//! partial-derivative engine for variable-free regular expressions.

mod interp;
mod regex;

pub use interp::{
    eval_formula, eval_term, realize_word, FuncBuiltin, FuncDef, Interpretation, PredBuiltin,
    PredDef, Realization,
};
pub use regex::{
    membership_fixed, regex_derivative, regex_matches, regex_null, regularize, Regex,
};
