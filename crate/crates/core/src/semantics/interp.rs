use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::syntax::{Formula, Letter, MixedWord, SWord, Sym, Term, Var};

/// Named predicate builtins. Each is defined for every arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PredBuiltin {
    /// All arguments are equal.
    Eq,
    /// All arguments have the same length.
    LenEq,
    /// Argument lengths are non-decreasing.
    LenLeq,
    /// Every argument is nonempty.
    NonEmpty,
    /// Each argument is the reverse of the next one.
    RevEq,
}

/// Named function builtins. Each is defined for every arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FuncBuiltin {
    /// Reverse of the catenated arguments.
    Rev,
    /// `a^n` where `a` is the first symbol and `n` counts its occurrences.
    ProjA,
    /// Left-to-right catenation.
    Cat,
    /// Catenation of the arguments in reverse order.
    RevCat,
    /// The first argument twice, then the others.
    DupCat,
}

impl PredBuiltin {
    pub const ALL: [PredBuiltin; 5] = [
        PredBuiltin::Eq,
        PredBuiltin::LenEq,
        PredBuiltin::LenLeq,
        PredBuiltin::NonEmpty,
        PredBuiltin::RevEq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PredBuiltin::Eq => "eq",
            PredBuiltin::LenEq => "leneq",
            PredBuiltin::LenLeq => "lenleq",
            PredBuiltin::NonEmpty => "nonempty",
            PredBuiltin::RevEq => "reveq",
        }
    }

    pub fn from_name(name: &str) -> Option<PredBuiltin> {
        PredBuiltin::ALL.into_iter().find(|b| b.name() == name)
    }

    pub fn holds(self, args: &[SWord]) -> bool {
        match self {
            PredBuiltin::Eq => args.windows(2).all(|w| w[0] == w[1]),
            PredBuiltin::LenEq => args.windows(2).all(|w| w[0].len() == w[1].len()),
            PredBuiltin::LenLeq => args.windows(2).all(|w| w[0].len() <= w[1].len()),
            PredBuiltin::NonEmpty => args.iter().all(|w| !w.is_empty()),
            PredBuiltin::RevEq => args
                .windows(2)
                .all(|w| w[0].iter().eq(w[1].iter().rev())),
        }
    }
}

impl FuncBuiltin {
    pub const ALL: [FuncBuiltin; 5] = [
        FuncBuiltin::Rev,
        FuncBuiltin::ProjA,
        FuncBuiltin::Cat,
        FuncBuiltin::RevCat,
        FuncBuiltin::DupCat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FuncBuiltin::Rev => "rev",
            FuncBuiltin::ProjA => "projA",
            FuncBuiltin::Cat => "cat",
            FuncBuiltin::RevCat => "revcat",
            FuncBuiltin::DupCat => "dupcat",
        }
    }

    pub fn from_name(name: &str) -> Option<FuncBuiltin> {
        FuncBuiltin::ALL.into_iter().find(|b| b.name() == name)
    }

    pub fn apply(self, args: &[SWord]) -> SWord {
        match self {
            FuncBuiltin::Rev => {
                let mut w: SWord = args.concat();
                w.reverse();
                w
            }
            FuncBuiltin::ProjA => {
                let n = args.iter().flatten().filter(|s| **s == Sym(0)).count();
                alloc::vec![Sym(0); n]
            }
            FuncBuiltin::Cat => args.concat(),
            FuncBuiltin::RevCat => args.iter().rev().flatten().copied().collect(),
            FuncBuiltin::DupCat => match args.split_first() {
                None => Vec::new(),
                Some((first, rest)) => {
                    let mut w = first.clone();
                    w.extend_from_slice(first);
                    for r in rest {
                        w.extend_from_slice(r);
                    }
                    w
                }
            },
        }
    }
}

/// The relation bound to a predicate symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PredDef {
    Builtin(PredBuiltin),
    /// Explicit truth values on listed tuples, `default` elsewhere.
    Table {
        entries: BTreeMap<Vec<SWord>, bool>,
        default: bool,
    },
}

impl PredDef {
    pub fn holds(&self, args: &[SWord]) -> bool {
        match self {
            PredDef::Builtin(b) => b.holds(args),
            PredDef::Table { entries, default } => entries.get(args).copied().unwrap_or(*default),
        }
    }
}

/// The total function bound to a function symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FuncDef {
    Builtin(FuncBuiltin),
    /// Listed images take priority over the default function.
    Table {
        entries: BTreeMap<Vec<SWord>, SWord>,
        default: FuncBuiltin,
    },
}

impl FuncDef {
    pub fn apply(&self, args: &[SWord]) -> SWord {
        match self {
            FuncDef::Builtin(b) => b.apply(args),
            FuncDef::Table { entries, default } => entries
                .get(args)
                .cloned()
                .unwrap_or_else(|| default.apply(args)),
        }
    }
}

/// An interpretation over the domain Σ*. Letters, ε and catenation are fixed
/// and need no binding.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Interpretation {
    pub predicates: BTreeMap<String, PredDef>,
    pub functions: BTreeMap<String, FuncDef>,
}

impl Interpretation {
    pub fn new() -> Interpretation {
        Interpretation::default()
    }

    pub fn with_pred(mut self, name: &str, def: PredDef) -> Interpretation {
        self.predicates.insert(name.into(), def);
        self
    }

    pub fn with_func(mut self, name: &str, def: FuncDef) -> Interpretation {
        self.functions.insert(name.into(), def);
        self
    }

    pub fn pred(&self, name: &str) -> Result<&PredDef> {
        self.predicates
            .get(name)
            .ok_or_else(|| Error::Config(format!("predicate '{}' has no interpretation", name)))
    }

    pub fn func(&self, name: &str) -> Result<&FuncDef> {
        self.functions
            .get(name)
            .ok_or_else(|| Error::Config(format!("function '{}' has no interpretation", name)))
    }
}

/// A realization; unassigned variables denote ε.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Realization(pub BTreeMap<Var, SWord>);

impl Realization {
    pub fn new() -> Realization {
        Realization::default()
    }

    pub fn with(mut self, x: Var, w: SWord) -> Realization {
        self.0.insert(x, w);
        self
    }

    pub fn set(&mut self, x: Var, w: SWord) {
        self.0.insert(x, w);
    }

    pub fn get(&self, x: Var) -> &[Sym] {
        self.0.get(&x).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// r(α): the homomorphic image of a mixed word.
pub fn realize_word(r: &Realization, alpha: &MixedWord) -> SWord {
    let mut out = Vec::new();
    for &l in alpha.letters() {
        match l {
            Letter::Sym(s) => out.push(s),
            Letter::Var(x) => out.extend_from_slice(r.get(x)),
        }
    }
    out
}

/// eval_{I,r}(t).
pub fn eval_term(i: &Interpretation, r: &Realization, t: &Term) -> Result<SWord> {
    match t {
        Term::Var(x) => Ok(r.get(*x).to_vec()),
        Term::Sym(s) => Ok(alloc::vec![*s]),
        Term::Eps => Ok(Vec::new()),
        Term::Cat(a, b) => {
            let mut w = eval_term(i, r, a)?;
            w.extend(eval_term(i, r, b)?);
            Ok(w)
        }
        Term::App(f, args) => {
            let def = i.func(f)?;
            let vals = args
                .iter()
                .map(|a| eval_term(i, r, a))
                .collect::<Result<Vec<_>>>()?;
            Ok(def.apply(&vals))
        }
    }
}

/// eval_{I,r}(φ).
pub fn eval_formula(i: &Interpretation, r: &Realization, phi: &Formula) -> Result<bool> {
    Ok(match phi {
        Formula::True => true,
        Formula::False => false,
        Formula::Atom(p, args) => {
            let def = i.pred(p)?;
            let vals = args
                .iter()
                .map(|a| eval_term(i, r, a))
                .collect::<Result<Vec<_>>>()?;
            def.holds(&vals)
        }
        Formula::Not(a) => !eval_formula(i, r, a)?,
        Formula::And(a, b) => {
            let x = eval_formula(i, r, a)?;
            let y = eval_formula(i, r, b)?;
            x && y
        }
        Formula::Or(a, b) => {
            let x = eval_formula(i, r, a)?;
            let y = eval_formula(i, r, b)?;
            x || y
        }
        Formula::Implies(a, b) => {
            let x = eval_formula(i, r, a)?;
            let y = eval_formula(i, r, b)?;
            !x || y
        }
        Formula::Ite(c, t, e) => {
            let c = eval_formula(i, r, c)?;
            let t = eval_formula(i, r, t)?;
            let e = eval_formula(i, r, e)?;
            (!c || t) && (c || e)
        }
    })
}
