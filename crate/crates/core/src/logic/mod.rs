//! Satisfiability of constraint formulas when the interpretation is free:
//! term normalization, propositionalisation, truth tables and witness
//! synthesis, assembled into the general ε-membership and membership tests.

mod normal;
mod prop;
mod witness;

pub use normal::{is_normalized, left_dot_level, normalize_formula, normalize_term};
pub use prop::{
    prop_alphabet, propositionalize, sat_truth_table, terms_of_formula, Assignment, PropFormula,
    PropSymbol, SatConfig,
};
pub use witness::{
    build_witness, factors, membership_general, null_general, satisfiable_free, separator_word,
    word_skeletons, Skeletons, Witness,
};
