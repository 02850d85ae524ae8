//! Generator expressions in the notation of printed code tables.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ['-'] factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer | 'u' | 'v' | 'w' | 'x' | 'g' | constant | '(' expr ')'
//! ```
//!
//! Letters multiply implicitly, so `uvwg^3` is `u·v·w·(x−1)³`. Constants are
//! `c` followed by an optional prime and an index (`c0`, `c_3`, `c'_2`) and
//! must be bound before evaluation.

use std::collections::{BTreeMap, BTreeSet};

use ringcodes::gfpoly::{FpPoly, PrimeField};
use ringcodes::ring::Monomial;
use ringcodes::rpoly::RPoly;
use ringcodes::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Number { value: u64, pos: usize },
    Monomial(Monomial),
    X,
    /// `g = x − 1`.
    G,
    Const { name: String, pos: usize },
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

/// Canonical spelling of a constant name: `c_0` and `c0` are the same.
pub fn normalize_constant(name: &str) -> String {
    name.replace('_', "")
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Option<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![(false, self.term()?)];
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            terms.push((c == b'-', self.term()?));
        }
        Ok(if terms.len() == 1 && !terms[0].0 {
            terms.pop().expect("one term").1
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Sum(vec![(true, self.term()?)]));
        }
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                Some(c) if starts_atom(c) => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer().ok_or_else(|| self.err("expected an exponent"))?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let value = self.integer().ok_or_else(|| self.err("number too large"))?;
                Ok(Expr::Number { value, pos })
            }
            Some(c) => {
                self.pos += 1;
                match c {
                    b'u' => Ok(Expr::Monomial(Monomial::U)),
                    b'v' => Ok(Expr::Monomial(Monomial::V)),
                    b'w' => Ok(Expr::Monomial(Monomial::W)),
                    b'x' => Ok(Expr::X),
                    b'g' => Ok(Expr::G),
                    b'c' => self.constant(pos),
                    _ => {
                        self.pos -= 1;
                        Err(self.err(format!("unexpected character '{}'", c as char)))
                    }
                }
            }
        }
    }

    fn constant(&mut self, pos: usize) -> Result<Expr> {
        let mut name = String::from("c");
        if self.src.get(self.pos) == Some(&b'\'') {
            name.push('\'');
            self.pos += 1;
        }
        if self.src.get(self.pos) == Some(&b'_') {
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("constant needs a numeric index"));
        }
        name.push_str(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"));
        Ok(Expr::Const { name, pos })
    }
}

fn starts_atom(c: u8) -> bool {
    c == b'(' || c.is_ascii_digit() || b"uvwxgc".contains(&c)
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }

    pub fn constants(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_constants(&mut out);
        out
    }

    fn collect_constants(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Const { name, .. } => {
                out.insert(name.clone());
            }
            Expr::Sum(ts) => ts.iter().for_each(|(_, e)| e.collect_constants(out)),
            Expr::Product(fs) => fs.iter().for_each(|e| e.collect_constants(out)),
            Expr::Pow(b, _) => b.collect_constants(out),
            _ => {}
        }
    }

    /// Expands into `R_n`; every constant must appear in `bindings`.
    pub fn eval(&self, field: PrimeField, n: usize, bindings: &BTreeMap<String, u64>) -> Result<RPoly> {
        let missing: Vec<String> = self
            .constants()
            .into_iter()
            .filter(|c| !bindings.contains_key(c))
            .collect();
        if !missing.is_empty() {
            return Err(Error::UnboundConstants(missing));
        }
        for (name, &value) in bindings {
            if value >= field.p() as u64 {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("binding {name}={value} is outside [0, {})", field.p()),
                });
            }
        }
        self.eval_inner(field, n, bindings)
    }

    fn eval_inner(&self, field: PrimeField, n: usize, b: &BTreeMap<String, u64>) -> Result<RPoly> {
        let constant = |c: u64| {
            RPoly::from_component(Monomial::One, &FpPoly::constant(field, c as i64), n)
        };
        Ok(match self {
            Expr::Number { value, pos } => {
                if *value >= field.p() as u64 {
                    return Err(Error::Parse {
                        pos: *pos,
                        msg: format!("coefficient {value} is outside [0, {})", field.p()),
                    });
                }
                constant(*value)
            }
            Expr::Monomial(m) => RPoly::from_component(*m, &FpPoly::one(field), n),
            Expr::X => RPoly::from_component(Monomial::One, &FpPoly::x(field), n),
            Expr::G => RPoly::from_component(Monomial::One, &FpPoly::from_coeffs(field, &[-1, 1]), n),
            Expr::Const { name, .. } => constant(b[name]),
            Expr::Sum(ts) => {
                let mut acc = RPoly::zero(field, n);
                for (neg, t) in ts {
                    let v = t.eval_inner(field, n, b)?;
                    acc = if *neg { acc.sub(&v) } else { acc.add(&v) };
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = RPoly::one(field, n);
                for f in fs {
                    acc = acc.mul(&f.eval_inner(field, n, b)?);
                }
                acc
            }
            Expr::Pow(base, e) => {
                let base = base.eval_inner(field, n, b)?;
                let mut acc = RPoly::one(field, n);
                for _ in 0..*e {
                    acc = acc.mul(&base);
                }
                acc
            }
        })
    }
}

/// Splits a generator list on top-level commas or semicolons.
pub fn split_generators(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ';' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}

/// Parses and expands one generator given as text.
pub fn parse_generator(
    text: &str,
    field: PrimeField,
    n: usize,
    bindings: &BTreeMap<String, u64>,
) -> Result<RPoly> {
    Expr::parse(text)?.eval(field, n, bindings)
}

/// Parses `name=value` bindings as given to `--set`.
pub fn parse_bindings<'a, I: IntoIterator<Item = &'a str>>(items: I) -> Result<BTreeMap<String, u64>> {
    let mut out = BTreeMap::new();
    for item in items {
        let (name, value) = item.split_once('=').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("binding '{item}' is not name=value"),
        })?;
        let value: u64 = value.trim().parse().map_err(|_| Error::Parse {
            pos: name.len() + 1,
            msg: format!("binding '{item}' has a non-integer value"),
        })?;
        out.insert(normalize_constant(name.trim()), value);
    }
    Ok(out)
}
