//! Text syntax for homogeneous polynomials.
//!
//! ```text
//! poly   := ["+" | "-"] term (("+" | "-") term)*
//! term   := coef ["*"] factor ("*"? factor)* | coef | factor ("*"? factor)*
//! coef   := int ["/" int]
//! factor := "x" digit ["^" int]
//! ```
//!
//! Whitespace is allowed between tokens. Rendering a [`HomogeneousPoly`] with `Display`
//! produces text this parser reads back to the same polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{HomogeneousPoly, Monomial, Rational};
use crate::error::{Error, Result};

/// Highest variable index the syntax accepts.
pub const MAX_VAR: usize = 9;

/// Parses `text`; the number of variables is one more than the highest index used,
/// or `n_vars` when given (which must cover every index that appears).
pub fn parse_poly(text: &str, n_vars: Option<usize>) -> Result<HomogeneousPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let terms = p.poly()?;
    let used = terms
        .iter()
        .flat_map(|(_, exps)| exps.iter().map(|&(v, _)| v + 1))
        .max()
        .unwrap_or(1);
    let n = match n_vars {
        Some(n) if n < used => {
            return Err(Error::Parse {
                position: 0,
                message: format!("--nvars {n} is smaller than the {used} variables used"),
            })
        }
        Some(n) if n > MAX_VAR + 1 => return Err(Error::TooManyVariables(n)),
        Some(n) => n,
        None => used,
    };
    HomogeneousPoly::from_terms(
        n,
        terms.into_iter().map(|(c, exps)| {
            let mut e = vec![0u32; n];
            for (v, k) in exps {
                e[v] += k;
            }
            (Monomial::new(e), c)
        }),
    )
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

type Term = (Rational, Vec<(usize, u32)>);

impl Parser<'_> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
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

    fn poly(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            None => return self.error("empty polynomial"),
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (c, exps) = self.term()?;
            terms.push((if sign < 0 { -c } else { c }, exps));
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(ch) => return self.error(format!("expected `+` or `-`, found `{}`", ch as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut coef = Rational::one();
        let mut exps = Vec::new();
        match self.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                coef = self.coefficient()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    exps.push(self.factor()?);
                }
            }
            Some(b'x') => exps.push(self.factor()?),
            Some(ch) => return self.error(format!("expected a coefficient or variable, found `{}`", ch as char)),
            None => return self.error("expected a term"),
        }
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    exps.push(self.factor()?);
                }
                Some(b'x') => exps.push(self.factor()?),
                _ => return Ok((coef, exps)),
            }
        }
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let numer = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let denom = self.integer()?;
            if denom.is_zero() {
                self.pos = at;
                return self.error("zero denominator");
            }
            return Ok(Rational::new(numer, denom));
        }
        Ok(Rational::from_integer(numer))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("non-empty digit string"))
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        if self.peek() != Some(b'x') {
            return self.error("expected a variable x0..x9");
        }
        self.pos += 1;
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let var = match &self.src[start..self.pos] {
            [d] => (d - b'0') as usize,
            [] => {
                self.pos = start;
                return self.error("expected a variable index after `x`");
            }
            _ => {
                self.pos = start;
                return self.error("variable index must be a single digit (x0..x9)");
            }
        };
        let mut exp = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            exp = u32::try_from(self.integer()?).or_else(|_| {
                self.pos = at;
                self.error("exponent too large")
            })?;
        }
        Ok((var, exp))
    }
}
