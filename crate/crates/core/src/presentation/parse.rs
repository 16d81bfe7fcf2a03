//! Recursive-descent parser for the group-spec language.
//!
//! ```text
//! spec     := term (("x" | "*") term)*          left-associative
//! term     := "Z" ["!"] ["^" INT] | "Z[" INT "]" | "F" INT ["!"]
//!           | "<" genlist "|" relators ">" | "(" spec ")"
//! genlist  := NAME ["!"] ("," NAME ["!"])*
//! relators := word ("," word)* | empty
//! word     := (NAME ["^" ["-"] INT])+
//! ```

use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::spec::{GroupExpr, GroupSpec, NormalizerHint, Presented};
use super::word::{GeneratorSymbol, Word};

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser::new(text);
    let expr = p.spec()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(Error::syntax(p.pos, format!("unexpected `{c}`")));
    }
    match p.mark {
        Some((idx, _)) => GroupSpec::new(expr, Some(idx)),
        None => GroupSpec::with_default_distinguished(expr),
    }
}

/// Parse a single word such as `a b a^-1 b^-1` or `b^6` over the given names.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word> {
    let mut p = Parser::new(text);
    let w = p.word(names)?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(Error::syntax(p.pos, format!("unexpected `{c}`")));
    }
    Ok(w)
}

/// Parse a comma-separated list of words.
pub fn parse_words(text: &str, names: &[String]) -> Result<Vec<Word>> {
    let mut p = Parser::new(text);
    let mut out = Vec::new();
    p.skip_ws();
    if p.peek().is_none() {
        return Ok(out);
    }
    loop {
        out.push(p.word(names)?);
        p.skip_ws();
        match p.peek() {
            Some(',') => p.pos += 1,
            None => return Ok(out),
            Some(c) => return Err(Error::syntax(p.pos, format!("unexpected `{c}`"))),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    next_index: usize,
    mark: Option<(usize, usize)>,
    names: BTreeSet<String>,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            next_index: 0,
            mark: None,
            names: BTreeSet::new(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::syntax(self.pos, format!("expected `{c}`")))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::syntax(start, "expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::syntax(start, "integer out of range"))
    }

    fn name(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .peek()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        {
            return Err(Error::syntax(start, "expected a generator name"));
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn set_mark(&mut self, index: usize, pos: usize) -> Result<()> {
        if self.mark.is_some() {
            return Err(Error::syntax(pos, "more than one distinguished marker `!`"));
        }
        self.mark = Some((index, pos));
        Ok(())
    }

    fn spec(&mut self) -> Result<GroupExpr> {
        let mut left = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('x') => {
                    self.pos += 1;
                    let right = self.term()?;
                    left = GroupExpr::direct(left, right);
                }
                Some('*') => {
                    self.pos += 1;
                    let right = self.term()?;
                    left = GroupExpr::free(left, right);
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<GroupExpr> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.spec()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('Z') => {
                self.pos += 1;
                if self.eat('[') {
                    let m = self.int()?;
                    self.expect(']')?;
                    if m < 2 {
                        return Err(Error::syntax(start, "cyclic order must be at least 2"));
                    }
                    self.skip_ws();
                    if self.peek() == Some('!') {
                        return Err(Error::FiniteOrderDistinguished(self.pos));
                    }
                    self.next_index += 1;
                    return Ok(GroupExpr::Cyclic(m));
                }
                let first = self.next_index;
                if self.eat('!') {
                    self.set_mark(first, self.pos - 1)?;
                }
                let mut k = 1;
                if self.eat('^') {
                    k = self.int()? as usize;
                    if k == 0 {
                        return Err(Error::syntax(start, "rank must be at least 1"));
                    }
                }
                self.next_index += k;
                Ok(GroupExpr::FreeAbelian(k))
            }
            Some('F') => {
                self.pos += 1;
                let k = self.int()? as usize;
                if k == 0 {
                    return Err(Error::syntax(start, "rank must be at least 1"));
                }
                let first = self.next_index;
                if self.eat('!') {
                    self.set_mark(first, self.pos - 1)?;
                }
                self.next_index += k;
                Ok(GroupExpr::FreeGroup(k))
            }
            Some('<') => {
                self.pos += 1;
                self.presented()
            }
            Some(c) => Err(Error::syntax(start, format!("unexpected `{c}`"))),
            None => Err(Error::syntax(start, "unexpected end of input")),
        }
    }

    fn presented(&mut self) -> Result<GroupExpr> {
        let mut names: Vec<String> = Vec::new();
        loop {
            let name = self.name()?;
            if names.contains(&name) || self.names.contains(&name) {
                return Err(Error::DuplicateGenerator(name));
            }
            let index = self.next_index + names.len();
            names.push(name);
            if self.eat('!') {
                self.set_mark(index, self.pos - 1)?;
            }
            if !self.eat(',') {
                break;
            }
        }
        self.expect('|')?;
        let mut relators = Vec::new();
        if !self.eat('>') {
            loop {
                relators.push(self.word(&names)?);
                if self.eat(',') {
                    continue;
                }
                self.expect('>')?;
                break;
            }
        }
        self.next_index += names.len();
        self.names.extend(names.iter().cloned());
        Ok(GroupExpr::Presented(Presented {
            names,
            relators,
            hint: NormalizerHint::Auto,
        }))
    }

    fn word(&mut self, names: &[String]) -> Result<Word> {
        let mut w = Word::empty();
        let mut factors = 0;
        loop {
            self.skip_ws();
            if !self
                .peek()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            {
                break;
            }
            let at = self.pos;
            let name = self.name()?;
            let index = names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| Error::syntax(at, format!("unknown generator `{name}`")))?;
            let mut k: i64 = 1;
            if self.eat('^') {
                let neg = self.eat('-');
                let v = self.int()? as i64;
                k = if neg { -v } else { v };
            }
            let sym = if k >= 0 {
                GeneratorSymbol::pos(index)
            } else {
                GeneratorSymbol::neg(index)
            };
            for _ in 0..k.unsigned_abs() {
                w.push(sym);
            }
            factors += 1;
        }
        if factors == 0 {
            return Err(Error::syntax(self.pos, "expected a word"));
        }
        Ok(w)
    }
}
