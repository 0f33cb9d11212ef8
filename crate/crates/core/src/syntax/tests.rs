use alloc::vec;

use super::*;

#[test]
fn mixed_word_queries() {
    let w = MixedWord(vec![Letter::Sym(Sym(0)), Letter::Var(Var(1))]);
    assert_eq!(w.len(), 2);
    assert!(!w.is_variable_only());
    assert_eq!(w.as_sword(), None);
    assert!(w.contains_var(Var(1)));
    assert_eq!(MixedWord::from_syms(&[Sym(0)]).as_sword(), Some(vec![Sym(0)]));
    assert!(MixedWord::eps().is_variable_only());
}

#[test]
fn subst_set_conditions() {
    let x = Var(0);
    let y = Var(1);
    let ok = SubstSet::singleton(Assumption::prefix(x, Sym(0))).with(Assumption::eps(y));
    assert!(ok.is_functional() && ok.is_non_crossing());
    assert!(ok.check().is_ok());
    let clash = SubstSet::singleton(Assumption::prefix(x, Sym(0))).with(Assumption::eps(x));
    assert!(!clash.is_functional());
    assert!(clash.check().is_err());
    assert_eq!(ok.get(y), Some(Replacement::Eps));
    assert_eq!(ok.get(Var(2)), None);
}

#[test]
fn formula_erasure_reaches_nested_terms() {
    let x = Var(0);
    let phi = Formula::atom("p", vec![Term::app("f", vec![Term::cat(Term::Sym(Sym(0)), Term::Var(x))])]);
    let erased = phi.erase_vars(&[x].into());
    assert!(erased.variables().is_empty());
}
