use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::env::{Sym, Var};

/// A letter of a mixed word. Symbols order before variables, each in
/// declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Sym(Sym),
    Var(Var),
}

/// A word over Σ ∪ Γ.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedWord(pub Vec<Letter>);

impl MixedWord {
    pub fn eps() -> MixedWord {
        MixedWord(Vec::new())
    }

    pub fn from_syms(w: &[Sym]) -> MixedWord {
        MixedWord(w.iter().map(|&s| Letter::Sym(s)).collect())
    }

    pub fn var(x: Var) -> MixedWord {
        MixedWord(alloc::vec![Letter::Var(x)])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// The variables occurring in the word.
    pub fn variables(&self) -> BTreeSet<Var> {
        self.0
            .iter()
            .filter_map(|l| match l {
                Letter::Var(v) => Some(*v),
                Letter::Sym(_) => None,
            })
            .collect()
    }

    pub fn contains_var(&self, x: Var) -> bool {
        self.0.contains(&Letter::Var(x))
    }

    /// True when every letter is a variable (ε included).
    pub fn is_variable_only(&self) -> bool {
        self.0.iter().all(|l| matches!(l, Letter::Var(_)))
    }

    /// The Σ-word spelled by the letters, if no variable occurs.
    pub fn as_sword(&self) -> Option<Vec<Sym>> {
        self.0
            .iter()
            .map(|l| match l {
                Letter::Sym(s) => Some(*s),
                Letter::Var(_) => None,
            })
            .collect()
    }

    pub fn concat(&self, other: &MixedWord) -> MixedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MixedWord(v)
    }
}

/// Variables of a mixed word.
pub fn variables_of(alpha: &MixedWord) -> BTreeSet<Var> {
    alpha.variables()
}
