//! Textual form of Laurent polynomials.
//!
//! Terms are printed in descending lexicographic order as
//! `c*t1^a1*...*tmu^amu`; half powers print as `t1^(1/2)` and negative
//! powers as `t1^-2`. With a single variable the name is plain `t`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

fn var_name(nvars: usize, i: usize) -> String {
    if nvars == 1 {
        "t".to_string()
    } else {
        format!("t{}", i + 1)
    }
}

fn format_power(name: &str, doubled: i32) -> String {
    if doubled % 2 == 0 {
        match doubled / 2 {
            1 => name.to_string(),
            k => format!("{name}^{k}"),
        }
    } else {
        format!("{name}^({doubled}/2)")
    }
}

fn format_monomial(nvars: usize, doubled: &[i32]) -> Option<String> {
    let factors: Vec<String> = doubled
        .iter()
        .enumerate()
        .filter(|(_, d)| **d != 0)
        .map(|(i, d)| format_power(&var_name(nvars, i), *d))
        .collect();
    (!factors.is_empty()).then(|| factors.join("*"))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match format_monomial(self.nvars(), e) {
                None => write!(f, "{abs}")?,
                Some(m) if abs.is_one() => write!(f, "{m}")?,
                Some(m) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    /// Parses the textual form produced by `Display`. Whitespace is ignored;
    /// exponents may be integers or halves written `(k/2)`.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, nvars }.poly()
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
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

    fn poly(&mut self) -> Result<LaurentPoly> {
        if self.chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut acc = LaurentPoly::zero(self.nvars);
        let mut first = true;
        while self.peek().is_some() {
            let negative = self.eat('-');
            if !negative && !self.eat('+') && !first {
                return Err(self.err("expected '+' or '-'"));
            }
            let term = self.term()?;
            acc += &(if negative { -term } else { term });
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::one(self.nvars);
        loop {
            let factor = self.factor()?;
            acc = &acc * &factor;
            if !self.eat('*') {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(LaurentPoly::constant(self.nvars, self.integer()?)),
            Some('t') => {
                self.pos += 1;
                let idx = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    let k = self.integer()?;
                    let k: usize = k.try_into().map_err(|_| self.err("variable index too large"))?;
                    if k == 0 || k > self.nvars {
                        return Err(self.err(&format!("variable t{k} outside t1..t{}", self.nvars)));
                    }
                    k - 1
                } else if self.nvars == 1 {
                    0
                } else {
                    return Err(self.err("bare 't' needs a single-variable polynomial"));
                };
                let doubled = if self.eat('^') { self.exponent()? } else { 2 };
                let mut e = vec![0; self.nvars];
                e[idx] = doubled;
                Ok(LaurentPoly::monomial_doubled(self.nvars, e, 1))
            }
            _ => Err(self.err("expected a coefficient or variable")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("bad integer"))
    }

    fn small_int(&mut self) -> Result<i32> {
        let neg = self.eat('-');
        let v = self.integer()?;
        let v: i32 = v.try_into().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// Returns the doubled exponent.
    fn exponent(&mut self) -> Result<i32> {
        if self.eat('(') {
            let num = self.small_int()?;
            let den = if self.eat('/') { self.small_int()? } else { 1 };
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            match den {
                1 => num.checked_mul(2).ok_or_else(|| self.err("exponent out of range")),
                2 if num % 2 != 0 => Ok(num),
                2 => Err(self.err("half exponent not in lowest terms")),
                _ => Err(self.err("only integer and half-integer exponents are supported")),
            }
        } else {
            self.small_int()?.checked_mul(2).ok_or_else(|| self.err("exponent out of range"))
        }
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    /// Infers the variable count: `t` alone means one variable, otherwise
    /// the largest index `tk` that appears.
    fn from_str(s: &str) -> Result<Self> {
        let mut max = 0usize;
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if chars[i] == 't' {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let k = if j == i + 1 {
                    1
                } else {
                    chars[i + 1..j].iter().collect::<String>().parse().unwrap_or(usize::MAX)
                };
                max = max.max(k);
                i = j;
            } else {
                i += 1;
            }
        }
        Self::parse(s, max.max(1))
    }
}
