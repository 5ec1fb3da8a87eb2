//! Recursive-descent parser for species expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | '·') factor)*
//! factor  := primary "'"*
//! primary := atom "'"* ['(' expr ')']
//!          | '(' expr ')' "'"* ['(' expr ')']
//! atom    := '0' | '1' | 'X' | 'Y' | 'E' | 'E_' INT | 'Eplus' | 'E⁺'
//! ```
//!
//! Whitespace is ignored. Positions in errors are byte offsets.

use super::expr::{Sort, SpeciesExpr};
use crate::error::{Error, Result};

pub fn parse_species(text: &str) -> Result<SpeciesExpr> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(format!("unexpected `{}`", p.peek().unwrap())));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    /// Consumes `c` (after whitespace) if it is next.
    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(match self.peek() {
                Some(found) => self.error(format!("expected `{c}`, found `{found}`")),
                None => self.error(format!("expected `{c}`, found end of input")),
            })
        }
    }

    fn expr(&mut self) -> Result<SpeciesExpr> {
        let mut left = self.term()?;
        loop {
            if self.eat('+') {
                left = SpeciesExpr::sum(left, self.term()?);
            } else if self.eat('-') {
                left = SpeciesExpr::difference(left, self.term()?);
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<SpeciesExpr> {
        let mut left = self.factor()?;
        while self.eat('*') || self.eat('·') {
            left = SpeciesExpr::product(left, self.factor()?);
        }
        Ok(left)
    }

    fn primes(&mut self) -> usize {
        let mut n = 0;
        while self.eat('\'') {
            n += 1;
        }
        n
    }

    fn factor(&mut self) -> Result<SpeciesExpr> {
        let e = self.primary()?;
        let order = self.primes();
        Ok(SpeciesExpr::derivative(e, order))
    }

    fn argument(&mut self, outer: SpeciesExpr) -> Result<SpeciesExpr> {
        if self.eat('(') {
            let inner = self.expr()?;
            self.expect(')')?;
            Ok(SpeciesExpr::compose(outer, inner))
        } else {
            Ok(outer)
        }
    }

    fn primary(&mut self) -> Result<SpeciesExpr> {
        self.skip_ws();
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            let order = self.primes();
            return self.argument(SpeciesExpr::derivative(e, order));
        }
        let atom = self.atom()?;
        let order = self.primes();
        self.argument(SpeciesExpr::derivative(atom, order))
    }

    fn atom(&mut self) -> Result<SpeciesExpr> {
        self.skip_ws();
        let start = self.pos;
        let word: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '⁺')
            .collect();
        if word.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected a species atom, found `{c}`")),
                None => self.error("expected a species atom, found end of input"),
            });
        }
        let atom = match word.as_str() {
            "0" => SpeciesExpr::Zero,
            "1" => SpeciesExpr::One,
            "X" => SpeciesExpr::x(),
            "Y" => SpeciesExpr::Singleton { sort: Sort::Y },
            "E" => SpeciesExpr::Sets,
            "Eplus" | "E⁺" => SpeciesExpr::NonemptySets,
            w if w.starts_with("E_") => {
                let digits = &w[2..];
                if digits.is_empty() {
                    return Err(Error::Parse {
                        pos: start + 2,
                        msg: "`E_` must be followed by an integer".into(),
                    });
                }
                match digits.parse::<usize>() {
                    Ok(k) => SpeciesExpr::sets_of_size(k),
                    Err(_) => {
                        return Err(Error::Parse {
                            pos: start + 2,
                            msg: format!("`E_` must be followed by an integer, found `{digits}`"),
                        })
                    }
                }
            }
            w => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unknown atom `{w}`"),
                })
            }
        };
        self.pos = start + word.len();
        Ok(atom)
    }
}
