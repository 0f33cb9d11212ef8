use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Index of a letter of the symbol alphabet, in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(pub u8);

/// Index of a variable, in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u8);

/// A word over the symbol alphabet.
pub type SWord = Vec<Sym>;

/// Reserved words of the concrete syntax.
pub const KEYWORDS: [&str; 5] = ["eps", "empty", "true", "false", "ite"];

/// Expression environment: symbol alphabet, variable alphabet, predicate and
/// function symbols with their arities.
///
/// The constants of the symbol alphabet, the ε constant and the binary
/// catenation are built into [`Term`](super::Term) and need no declaration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Env {
    symbols: Vec<char>,
    variables: Vec<char>,
    predicates: BTreeMap<String, usize>,
    functions: BTreeMap<String, usize>,
    spaced: bool,
}

fn config(msg: String) -> Error {
    Error::Config(msg)
}

fn valid_letter(c: char) -> bool {
    c.is_ascii_alphanumeric()
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Env {
    pub fn new(
        symbols: &[char],
        variables: &[char],
        predicates: &[(&str, usize)],
        functions: &[(&str, usize)],
    ) -> Result<Env> {
        if symbols.is_empty() {
            return Err(config("the symbol alphabet must be nonempty".into()));
        }
        if symbols.len() > 255 || variables.len() > 255 {
            return Err(config("alphabets are limited to 255 letters".into()));
        }
        let mut seen: Vec<char> = Vec::new();
        for &c in symbols.iter().chain(variables) {
            if !valid_letter(c) {
                return Err(config(format!("invalid letter '{}'", c)));
            }
            if seen.contains(&c) {
                let msg = if symbols.contains(&c) && variables.contains(&c) {
                    format!("'{}' is both a symbol and a variable", c)
                } else {
                    format!("duplicate letter '{}'", c)
                };
                return Err(config(msg));
            }
            seen.push(c);
        }
        let mut preds = BTreeMap::new();
        let mut funcs = BTreeMap::new();
        for (table, entries, kind) in [
            (&mut preds, predicates, "predicate"),
            (&mut funcs, functions, "function"),
        ] {
            for &(name, arity) in entries {
                if !valid_name(name) {
                    return Err(config(format!("invalid {} name '{}'", kind, name)));
                }
                if KEYWORDS.contains(&name) {
                    return Err(config(format!("{} name '{}' is reserved", kind, name)));
                }
                let mut cs = name.chars();
                if let (Some(c), None) = (cs.next(), cs.next()) {
                    if seen.contains(&c) {
                        return Err(config(format!(
                            "{} name '{}' collides with a letter",
                            kind, name
                        )));
                    }
                }
                if table.insert(name.to_string(), arity).is_some() {
                    return Err(config(format!("duplicate {} '{}'", kind, name)));
                }
            }
        }
        if let Some(name) = preds.keys().find(|n| funcs.contains_key(*n)) {
            return Err(config(format!(
                "'{}' is both a predicate and a function",
                name
            )));
        }
        let spelled = |w: &str| w.chars().all(|c| seen.contains(&c));
        let spaced = KEYWORDS.iter().any(|k| spelled(k))
            || preds.keys().chain(funcs.keys()).any(|n| spelled(n));
        Ok(Env {
            symbols: symbols.to_vec(),
            variables: variables.to_vec(),
            predicates: preds,
            functions: funcs,
            spaced,
        })
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn variables(&self) -> &[char] {
        &self.variables
    }

    pub fn all_syms(&self) -> impl Iterator<Item = Sym> + '_ {
        (0..self.symbols.len()).map(|i| Sym(i as u8))
    }

    pub fn all_vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.variables.len()).map(|i| Var(i as u8))
    }

    pub fn sym(&self, c: char) -> Option<Sym> {
        self.symbols.iter().position(|&s| s == c).map(|i| Sym(i as u8))
    }

    pub fn var(&self, c: char) -> Option<Var> {
        self.variables.iter().position(|&s| s == c).map(|i| Var(i as u8))
    }

    pub fn sym_char(&self, s: Sym) -> char {
        self.symbols[s.0 as usize]
    }

    pub fn var_char(&self, v: Var) -> char {
        self.variables[v.0 as usize]
    }

    pub fn predicate_arity(&self, name: &str) -> Option<usize> {
        self.predicates.get(name).copied()
    }

    pub fn function_arity(&self, name: &str) -> Option<usize> {
        self.functions.get(name).copied()
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.predicates.iter().map(|(n, &k)| (n.as_str(), k))
    }

    pub fn functions(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.functions.iter().map(|(n, &k)| (n.as_str(), k))
    }

    /// True when some keyword or declared name can be spelled with letters, so
    /// printed words separate their letters by spaces.
    pub fn spaced(&self) -> bool {
        self.spaced
    }

    /// Reads a Σ-word written with this environment's symbols; `eps` or the empty
    /// string denote ε.
    pub fn parse_sword(&self, text: &str) -> Result<SWord> {
        let text = text.trim();
        if text == "eps" {
            return Ok(Vec::new());
        }
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                self.sym(c)
                    .ok_or_else(|| config(format!("'{}' is not a symbol", c)))
            })
            .collect()
    }

    /// Writes a Σ-word, `eps` for the empty word.
    pub fn show_sword(&self, w: &[Sym]) -> String {
        if w.is_empty() {
            return "eps".into();
        }
        let mut out = String::new();
        for (i, &s) in w.iter().enumerate() {
            if i > 0 && self.spaced {
                out.push(' ');
            }
            out.push(self.sym_char(s));
        }
        out
    }
}

/// Parses the line-oriented environment format.
///
/// ```text
/// alphabet: a b c
/// variables: x y z
/// predicates: sim/2 lt/2
/// functions: f/1
/// ```
///
/// `#` starts a comment. A ` / ` separator may stand in for a line break.
pub fn parse_environment(text: &str) -> Result<Env> {
    let mut symbols: Option<Vec<char>> = None;
    let mut variables: Option<Vec<char>> = None;
    let mut predicates: Vec<(String, usize)> = Vec::new();
    let mut functions: Vec<(String, usize)> = Vec::new();
    let mut letter_pos: Vec<(char, usize, usize, bool)> = Vec::new();
    let mut name_pos: Vec<(String, usize, usize)> = Vec::new();
    let perr = |line: usize, column: usize, message: String| Error::Parse {
        line,
        column,
        message,
    };
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for part in content.split(" / ") {
            let start = offset;
            offset += part.len() + 3;
            let lead = part.len() - part.trim_start().len();
            let trimmed = part.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col = start + lead + 1;
            let Some(colon) = trimmed.find(':') else {
                return Err(perr(line_no, col, "expected 'header: entries'".into()));
            };
            let header = trimmed[..colon].trim();
            let body = &trimmed[colon + 1..];
            let body_col = col + colon + 1;
            match header {
                "alphabet" | "variables" => {
                    let slot = if header == "alphabet" {
                        &mut symbols
                    } else {
                        &mut variables
                    };
                    if slot.is_some() {
                        return Err(perr(line_no, col, format!("duplicate '{}' line", header)));
                    }
                    let mut letters = Vec::new();
                    let mut search = 0;
                    for tok in body.split_whitespace() {
                        let rel = search + body[search..].find(tok).unwrap_or(0);
                        search = rel + tok.len();
                        let mut cs = tok.chars();
                        match (cs.next(), cs.next()) {
                            (Some(c), None) => {
                                let is_var = header == "variables";
                                if let Some(&(_, _, _, prev_var)) =
                                    letter_pos.iter().find(|(p, ..)| *p == c)
                                {
                                    let message = if prev_var != is_var {
                                        format!("'{}' is both a symbol and a variable", c)
                                    } else {
                                        format!("duplicate letter '{}'", c)
                                    };
                                    return Err(perr(line_no, body_col + rel, message));
                                }
                                letter_pos.push((c, line_no, body_col + rel, is_var));
                                letters.push(c)
                            }
                            _ => {
                                let pos = body.find(tok).unwrap_or(0);
                                return Err(perr(
                                    line_no,
                                    body_col + pos,
                                    format!("letters must be single characters, found '{}'", tok),
                                ));
                            }
                        }
                    }
                    *slot = Some(letters);
                }
                "predicates" | "functions" => {
                    for tok in body.split_whitespace() {
                        let pos = body_col + body.find(tok).unwrap_or(0);
                        let Some((name, arity)) = tok.split_once('/') else {
                            return Err(perr(line_no, pos, format!("expected name/arity, found '{}'", tok)));
                        };
                        let arity: usize = arity.parse().map_err(|_| {
                            perr(line_no, pos, format!("malformed arity in '{}'", tok))
                        })?;
                        if name_pos.iter().any(|(n, ..)| n == name) {
                            return Err(perr(line_no, pos, format!("duplicate name '{}'", name)));
                        }
                        name_pos.push((name.to_string(), line_no, pos));
                        let list = if header == "predicates" {
                            &mut predicates
                        } else {
                            &mut functions
                        };
                        list.push((name.to_string(), arity));
                    }
                }
                other => {
                    return Err(perr(line_no, col, format!("unknown header '{}'", other)));
                }
            }
        }
    }
    let Some(symbols) = symbols else {
        return Err(perr(1, 1, "missing 'alphabet' line".into()));
    };
    let variables = variables.unwrap_or_default();
    let preds: Vec<(&str, usize)> = predicates.iter().map(|(n, k)| (n.as_str(), *k)).collect();
    let funcs: Vec<(&str, usize)> = functions.iter().map(|(n, k)| (n.as_str(), *k)).collect();
    Env::new(&symbols, &variables, &preds, &funcs).map_err(|e| match e {
        Error::Config(message) => {
            let (line, column) = name_pos
                .iter()
                .find(|(n, ..)| message.contains(&format!("'{}'", n)))
                .map(|&(_, l, c)| (l, c))
                .or_else(|| letter_pos.first().map(|&(_, l, c, _)| (l, c)))
                .unwrap_or((1, 1));
            perr(line, column, message)
        }
        other => other,
    })
}
