//! Text format for Puiseux series.
//!
//! ```text
//! series   := "0" | [sign] term (sign term)*
//! term     := [coeff ["*"]] "x" ["^" exponent] | coeff
//! exponent := int | "(" int ["/" int] ")"
//! coeff    := number ["i"] | "i" | "(" gauss ")" ["/" int]
//! gauss    := [sign] part (sign part)*
//! part     := number ["i"] | "i"
//! number   := int ["/" int]
//! ```
//!
//! Whitespace is allowed between tokens. Positions in errors are character
//! offsets into the input.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::series::{PuiseuxSeries, Term};
use super::PuiseuxError;
use crate::exactnum::{GaussRat, Rational};

pub fn parse_series(text: &str) -> Result<PuiseuxSeries, PuiseuxError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let terms = p.series()?;
    PuiseuxSeries::new(terms)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PuiseuxError> {
        Err(PuiseuxError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), PuiseuxError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn series(&mut self) -> Result<Vec<Term>, PuiseuxError> {
        let start = self.pos;
        if self.peek() == Some('0') {
            let save = self.pos;
            self.pos += 1;
            if self.peek().is_none() {
                return Ok(Vec::new());
            }
            self.pos = save;
        }
        if self.peek().is_none() {
            self.pos = start;
            return self.err("empty series");
        }
        let mut terms = Vec::new();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.sign() {
                Some(neg) => negative = neg,
                None => break,
            }
        }
        if let Some(c) = self.peek() {
            return self.err(format!("unexpected '{c}'"));
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term, PuiseuxError> {
        let coeff = match self.peek() {
            Some('x') => GaussRat::from_int(1),
            Some(_) => {
                let c = self.coeff()?;
                self.eat('*');
                if self.peek() != Some('x') {
                    // a bare constant is the term x^0
                    return Ok(Term::new(Rational::zero(), c));
                }
                c
            }
            None => return self.err("expected a term, found end of input"),
        };
        self.expect('x')?;
        let exponent = if self.eat('^') {
            self.exponent()?
        } else {
            Rational::one()
        };
        Ok(Term::new(exponent, coeff))
    }

    fn exponent(&mut self) -> Result<Rational, PuiseuxError> {
        if self.eat('(') {
            let r = self.number()?;
            self.expect(')')?;
            Ok(r)
        } else {
            Ok(Rational::from_integer(self.integer()?))
        }
    }

    fn coeff(&mut self) -> Result<GaussRat, PuiseuxError> {
        if self.eat('(') {
            let g = self.gauss()?;
            self.expect(')')?;
            if self.eat('/') {
                let at = self.pos;
                let d = self.integer()?;
                if d.is_zero() {
                    self.pos = at;
                    return self.err("division by zero");
                }
                return Ok(g.scale(&Rational::new(BigInt::one(), d)));
            }
            return Ok(g);
        }
        self.part()
    }

    fn gauss(&mut self) -> Result<GaussRat, PuiseuxError> {
        let mut acc = GaussRat::zero();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let p = self.part()?;
            acc = if negative { acc - p } else { acc + p };
            match self.sign() {
                Some(neg) => negative = neg,
                None => return Ok(acc),
            }
        }
    }

    fn part(&mut self) -> Result<GaussRat, PuiseuxError> {
        if self.eat('i') {
            return Ok(GaussRat::i());
        }
        let r = self.number()?;
        if self.eat('i') {
            Ok(GaussRat::new(Rational::zero(), r))
        } else {
            Ok(GaussRat::real(r))
        }
    }

    fn number(&mut self) -> Result<Rational, PuiseuxError> {
        let n = self.integer()?;
        if self.eat('/') {
            let at = self.pos;
            let d = self.integer()?;
            if d.is_zero() {
                self.pos = at;
                return self.err("division by zero");
            }
            return Ok(Rational::new(n, d));
        }
        Ok(Rational::from_integer(n))
    }

    fn integer(&mut self) -> Result<BigInt, PuiseuxError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.chars.get(self.pos) {
                Some(c) => self.err(format!("expected a number, found '{c}'")),
                None => self.err("expected a number, found end of input"),
            };
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}
