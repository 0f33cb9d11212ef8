//! Recursive-descent parser for expressions, formulas and terms.
//!
//! Expression precedence, loosest first: `|` (constraint, left-chaining),
//! `-|` (match, right-nested), `+`, `&`, juxtaposition, prefix `~`, postfix
//! `*`. A `-|` whose left operand is not a mixed word denotes intersection.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::env::Env;
use super::expr::Expr;
use super::formula::Formula;
use super::term::Term;
use super::word::{Letter, MixedWord};
use crate::error::{Error, Result};

struct Parser<'a> {
    env: &'a Env,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(env: &'a Env, text: &str) -> Parser<'a> {
        Parser {
            env,
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn error_at(&self, pos: usize, message: String) -> Error {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse {
            line,
            column,
            message,
        }
    }

    fn error(&mut self, message: String) -> Error {
        self.skip_ws();
        self.error_at(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn at_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        s.chars().enumerate().all(|(k, c)| self.chars.get(self.pos + k) == Some(&c))
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.at_str(s) {
            self.pos += s.chars().count();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat_str(s) {
            Ok(())
        } else {
            let found = self.found();
            Err(self.error(format!("expected '{}'{}", s, found)))
        }
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!(", found '{}'", c),
            None => ", found end of input".to_string(),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            let found = self.peek().unwrap_or(' ');
            Err(self.error(format!("unexpected '{}'", found)))
        }
    }

    /// The identifier starting at the current position, without consuming it.
    fn ident_here(&mut self) -> String {
        self.skip_ws();
        let mut i = self.pos;
        let mut s = String::new();
        while let Some(&c) = self.chars.get(i) {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                i += 1;
            } else {
                break;
            }
        }
        s
    }

    /// An identifier immediately followed by `(`.
    fn call_here(&mut self) -> Option<String> {
        let id = self.ident_here();
        if id.is_empty() {
            return None;
        }
        let after = self.pos + id.chars().count();
        (self.chars.get(after) == Some(&'(')).then_some(id)
    }

    fn letter_here(&mut self) -> Option<Letter> {
        let c = self.peek()?;
        if let Some(s) = self.env.sym(c) {
            Some(Letter::Sym(s))
        } else {
            self.env.var(c).map(Letter::Var)
        }
    }

    fn next_is_star(&self, from: usize) -> bool {
        let mut i = from;
        while i < self.chars.len() && self.chars[i].is_whitespace() {
            i += 1;
        }
        self.chars.get(i) == Some(&'*')
    }

    // ---- expressions ----

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.matchx()?;
        while self.at_str("|") && !self.at_str("||") {
            self.pos += 1;
            let phi = self.formula()?;
            e = Expr::constraint(e, phi);
        }
        Ok(e)
    }

    fn matchx(&mut self) -> Result<Expr> {
        let lhs = self.sum()?;
        if self.eat_str("-|") {
            let rhs = self.matchx()?;
            return Ok(match lhs {
                Expr::Word(alpha) => Expr::matching(alpha, rhs),
                other => Expr::inter(other, rhs),
            });
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.inter()?;
        while self.eat_str("+") {
            let r = self.inter()?;
            e = Expr::sum(e, r);
        }
        Ok(e)
    }

    fn inter(&mut self) -> Result<Expr> {
        let mut e = self.cat()?;
        while self.at_str("&") && !self.at_str("&&") {
            self.pos += 1;
            let r = self.cat()?;
            e = Expr::inter(e, r);
        }
        Ok(e)
    }

    fn starts_unit(&mut self) -> bool {
        match self.peek() {
            None => false,
            Some('(') | Some('~') => true,
            Some(_) => self.at_str("eps") || self.at_str("empty") || self.letter_here().is_some(),
        }
    }

    fn cat(&mut self) -> Result<Expr> {
        let mut units = Vec::new();
        while self.starts_unit() {
            units.push(self.unit()?);
        }
        if units.is_empty() {
            let found = self.found();
            return Err(self.error(format!("expected an expression{}", found)));
        }
        let last = units.pop().unwrap_or(Expr::Empty);
        Ok(units.into_iter().rev().fold(last, |acc, u| Expr::cat(u, acc)))
    }

    fn unit(&mut self) -> Result<Expr> {
        if self.eat_str("~") {
            return Ok(Expr::compl(self.unit()?));
        }
        let mut e = self.atom()?;
        while self.eat_str("*") {
            e = Expr::star(e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        if self.eat_str("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        if self.eat_str("empty") {
            return Ok(Expr::Empty);
        }
        if self.eat_str("eps") {
            return Ok(Expr::eps());
        }
        let mut letters = Vec::new();
        while !self.at_str("eps") && !self.at_str("empty") {
            let Some(l) = self.letter_here() else { break };
            let starred = self.next_is_star(self.pos + 1);
            if starred && !letters.is_empty() {
                break;
            }
            letters.push(l);
            self.pos += 1;
            if starred {
                break;
            }
        }
        if letters.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("unknown symbol or variable '{}'", c)),
                None => self.error("expected an expression, found end of input".into()),
            });
        }
        Ok(Expr::Word(MixedWord(letters)))
    }

    // ---- formulas ----

    fn formula(&mut self) -> Result<Formula> {
        let l = self.or()?;
        if self.eat_str("->") {
            let r = self.formula()?;
            return Ok(Formula::implies(l, r));
        }
        Ok(l)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut f = self.and()?;
        while self.eat_str("||") {
            let r = self.and()?;
            f = Formula::or(f, r);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while self.eat_str("&&") {
            let r = self.unary()?;
            f = Formula::and(f, r);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat_str("!") {
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula> {
        if self.eat_str("(") {
            let f = self.formula()?;
            self.expect(")")?;
            return Ok(f);
        }
        let start = self.pos;
        if let Some(name) = self.call_here() {
            if name == "ite" {
                self.pos += 3;
                self.expect("(")?;
                let c = self.formula()?;
                self.expect(",")?;
                let t = self.formula()?;
                self.expect(",")?;
                let e = self.formula()?;
                self.expect(")")?;
                return Ok(Formula::ite(c, t, e));
            }
            let Some(arity) = self.env.predicate_arity(&name) else {
                let msg = if self.env.function_arity(&name).is_some() {
                    format!("'{}' is a function, expected a predicate", name)
                } else {
                    format!("unknown predicate '{}'", name)
                };
                return Err(self.error(msg));
            };
            self.pos += name.chars().count();
            let args = self.args()?;
            if args.len() != arity {
                return Err(self.error_at(
                    start,
                    format!("predicate '{}' expects {} arguments, found {}", name, arity, args.len()),
                ));
            }
            return Ok(Formula::Atom(name, args));
        }
        let id = self.ident_here();
        match id.as_str() {
            "true" => {
                self.pos += 4;
                Ok(Formula::True)
            }
            "false" => {
                self.pos += 5;
                Ok(Formula::False)
            }
            "" => {
                let found = self.found();
                Err(self.error(format!("expected a formula{}", found)))
            }
            other => Err(self.error(format!("expected a formula, found '{}'", other))),
        }
    }

    fn args(&mut self) -> Result<Vec<Term>> {
        self.expect("(")?;
        let mut args = Vec::new();
        if self.eat_str(")") {
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            if self.eat_str(")") {
                return Ok(args);
            }
            self.expect(",")?;
        }
    }

    // ---- terms ----

    fn starts_term_atom(&mut self) -> bool {
        match self.peek() {
            None => false,
            Some('(') => true,
            Some(_) => {
                self.call_here().is_some() || self.at_str("eps") || self.letter_here().is_some()
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut atoms = Vec::new();
        while self.starts_term_atom() {
            atoms.push(self.term_atom()?);
        }
        let Some(last) = atoms.pop() else {
            let found = self.found();
            return Err(self.error(format!("expected a term{}", found)));
        };
        Ok(atoms.into_iter().rev().fold(last, |acc, t| Term::cat(t, acc)))
    }

    fn term_atom(&mut self) -> Result<Term> {
        if self.eat_str("(") {
            let t = self.term()?;
            self.expect(")")?;
            return Ok(t);
        }
        let start = self.pos;
        if let Some(name) = self.call_here() {
            let Some(arity) = self.env.function_arity(&name) else {
                let msg = if self.env.predicate_arity(&name).is_some() {
                    format!("'{}' is a predicate, expected a function", name)
                } else {
                    format!("unknown function '{}'", name)
                };
                return Err(self.error(msg));
            };
            self.pos += name.chars().count();
            let args = self.args()?;
            if args.len() != arity {
                return Err(self.error_at(
                    start,
                    format!("function '{}' expects {} arguments, found {}", name, arity, args.len()),
                ));
            }
            return Ok(Term::App(name, args));
        }
        if self.eat_str("eps") {
            return Ok(Term::Eps);
        }
        match self.letter_here() {
            Some(Letter::Sym(s)) => {
                self.pos += 1;
                Ok(Term::Sym(s))
            }
            Some(Letter::Var(v)) => {
                self.pos += 1;
                Ok(Term::Var(v))
            }
            None => {
                let found = self.found();
                Err(self.error(format!("expected a term{}", found)))
            }
        }
    }

    fn word(&mut self) -> Result<MixedWord> {
        let mut letters = Vec::new();
        loop {
            if self.eat_str("eps") {
                continue;
            }
            match self.letter_here() {
                Some(l) => {
                    letters.push(l);
                    self.pos += 1;
                }
                None => break,
            }
        }
        Ok(MixedWord(letters))
    }
}

/// Parses a constrained expression.
pub fn parse_expression(text: &str, env: &Env) -> Result<Expr> {
    let mut p = Parser::new(env, text);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a boolean formula.
pub fn parse_formula(text: &str, env: &Env) -> Result<Formula> {
    let mut p = Parser::new(env, text);
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a term.
pub fn parse_term(text: &str, env: &Env) -> Result<Term> {
    let mut p = Parser::new(env, text);
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parses a mixed word; `eps` stands for ε.
pub fn parse_word(text: &str, env: &Env) -> Result<MixedWord> {
    let mut p = Parser::new(env, text);
    let w = p.word()?;
    p.finish()?;
    Ok(w)
}
