//! Text syntax for monomials, monomial ideals and polynomials.
//!
//! ```text
//! ideal      := "0" | monomial ("," monomial)*
//! monomial   := "1" | factor ("*"? factor)*
//! factor     := var ("^" digits)?
//! var        := "x" digits | "x" | "y" | "z" | "w"
//! polynomial := sign? term (sign term)*
//! term       := coeff ("*"? monomial)? | monomial
//! coeff      := digits ("/" digits)?
//! ```
//!
//! Both `x1, x2, ...` and the aliases `x, y, z, w` are accepted, but not in the
//! same input. Whitespace is free between tokens. Error offsets count
//! characters from 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Indexed,
    Alias,
}

/// Exponents keyed by 0-based variable index.
type Sparse = Vec<(usize, u32)>;

struct Parser {
    chars: Vec<char>,
    pos: usize,
    style: Option<Style>,
    max_var: usize,
}

impl Parser {
    fn new(s: &str) -> Self {
        Parser {
            chars: s.chars().collect(),
            pos: 0,
            style: None,
            max_var: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos + 1,
            message: message.into(),
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

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn unexpected<T>(&mut self, expected: &str) -> Result<T> {
        match self.peek() {
            Some(c) => self.err(format!("unexpected '{c}', expected {expected}")),
            None => self.err(format!("unexpected end of input, expected {expected}")),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        match self.digits() {
            Some(s) => s.parse().or_else(|_| {
                self.pos = start;
                self.err(format!("{what} {s} is too large"))
            }),
            None => self.unexpected(what),
        }
    }

    fn is_var_start(c: char) -> bool {
        matches!(c, 'x' | 'y' | 'z' | 'w')
    }

    fn var(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let c = match self.chars.get(self.pos) {
            Some(&c) if Self::is_var_start(c) => c,
            _ => return self.unexpected("a variable"),
        };
        self.pos += 1;
        let (style, index) = if c == 'x' && self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            let digits = self.digits().expect("checked digit");
            let i: usize = match digits.parse() {
                Ok(i) if i >= 1 => i,
                _ => {
                    self.pos = start;
                    return self.err(format!("invalid variable index x{digits}"));
                }
            };
            (Style::Indexed, i)
        } else {
            let i = match c {
                'x' => 1,
                'y' => 2,
                'z' => 3,
                _ => 4,
            };
            (Style::Alias, i)
        };
        match self.style {
            Some(s) if s != style => {
                self.pos = start;
                return self.err("inconsistent variable names: x1, x2, ... and x, y, z, w are mixed");
            }
            _ => self.style = Some(style),
        }
        self.max_var = self.max_var.max(index);
        Ok(index - 1)
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let v = self.var()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number("an exponent")?;
            Ok((v, e))
        } else {
            Ok((v, 1))
        }
    }

    /// Parses a monomial body after any coefficient; `"1"` is handled by callers.
    fn monomial_factors(&mut self) -> Result<Sparse> {
        let mut out = vec![self.factor()?];
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    out.push(self.factor()?);
                }
                Some(c) if Self::is_var_start(c) => out.push(self.factor()?),
                _ => return Ok(out),
            }
        }
    }

    fn monomial(&mut self) -> Result<Sparse> {
        if self.peek() == Some('1') {
            let save = self.pos;
            self.pos += 1;
            if !self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                return Ok(Vec::new());
            }
            self.pos = save;
            return self.unexpected("a monomial");
        }
        self.monomial_factors()
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        self.skip_ws();
        let num: BigInt = self.digits().expect("caller checked a digit").parse().expect("digits");
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let Some(den) = self.digits() else {
                return self.unexpected("a denominator");
            };
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                self.pos -= 1;
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn term(&mut self) -> Result<(BigRational, Sparse)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coefficient()?;
                match self.peek() {
                    Some('*') => {
                        self.pos += 1;
                        Ok((coeff, self.monomial_factors()?))
                    }
                    Some(c) if Self::is_var_start(c) => Ok((coeff, self.monomial_factors()?)),
                    _ => Ok((coeff, Vec::new())),
                }
            }
            Some(c) if Self::is_var_start(c) => Ok((BigRational::one(), self.monomial_factors()?)),
            _ => self.unexpected("a term"),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.unexpected("end of input")
        }
    }
}

fn build(sparse: &Sparse, n: usize) -> Result<Monomial> {
    let mut e = vec![0u32; n];
    for &(v, p) in sparse {
        if v >= n {
            return Err(Error::VariableCount {
                expected: n,
                found: v + 1,
            });
        }
        e[v] = e[v]
            .checked_add(p)
            .ok_or_else(|| Error::InvalidParameters("exponent overflow".into()))?;
    }
    Ok(Monomial::new(e))
}

enum IdealText {
    Zero,
    Gens(Vec<Sparse>),
}

fn parse_ideal_raw(s: &str) -> Result<(IdealText, usize)> {
    let mut p = Parser::new(s);
    if p.peek() == Some('0') {
        p.pos += 1;
        p.finish()?;
        return Ok((IdealText::Zero, 0));
    }
    let mut gens = vec![p.monomial()?];
    while p.peek() == Some(',') {
        p.pos += 1;
        gens.push(p.monomial()?);
    }
    p.finish()?;
    Ok((IdealText::Gens(gens), p.max_var))
}

/// Parses an ideal; the number of variables is the largest index used
/// (at least 1).
pub fn parse_ideal(s: &str) -> Result<MonomialIdeal> {
    let (text, max_var) = parse_ideal_raw(s)?;
    ideal_from(text, max_var.max(1))
}

/// Parses an ideal in a ring with exactly `n` variables.
pub fn parse_ideal_with_n(s: &str, n: usize) -> Result<MonomialIdeal> {
    let (text, max_var) = parse_ideal_raw(s)?;
    if max_var > n {
        return Err(Error::VariableCount {
            expected: n,
            found: max_var,
        });
    }
    ideal_from(text, n)
}

fn ideal_from(text: IdealText, n: usize) -> Result<MonomialIdeal> {
    match text {
        IdealText::Zero => Ok(MonomialIdeal::zero(n)),
        IdealText::Gens(gens) => {
            let mons = gens.iter().map(|g| build(g, n)).collect::<Result<Vec<_>>>()?;
            MonomialIdeal::new(mons, n)
        }
    }
}

/// Parses one monomial in `n` variables.
pub fn parse_monomial(s: &str, n: usize) -> Result<Monomial> {
    let mut p = Parser::new(s);
    let m = p.monomial()?;
    p.finish()?;
    build(&m, n)
}

/// Parses a signed rational constant such as `-3/2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let mut p = Parser::new(s);
    let negative = match p.peek() {
        Some(c @ ('-' | '+')) => {
            p.pos += 1;
            c == '-'
        }
        _ => false,
    };
    p.skip_ws();
    if !p.peek().is_some_and(|c| c.is_ascii_digit()) {
        return p.unexpected("a number");
    }
    let c = p.coefficient()?;
    p.finish()?;
    Ok(if negative { -c } else { c })
}

fn parse_polynomial_raw(p: &mut Parser) -> Result<Vec<(BigRational, Sparse)>> {
    let mut terms = Vec::new();
    let mut sign = match p.peek() {
        Some('-') => {
            p.pos += 1;
            -BigRational::one()
        }
        Some('+') => {
            p.pos += 1;
            BigRational::one()
        }
        _ => BigRational::one(),
    };
    loop {
        let (c, m) = p.term()?;
        terms.push((c * &sign, m));
        sign = match p.peek() {
            Some('+') => BigRational::one(),
            Some('-') => -BigRational::one(),
            _ => return Ok(terms),
        };
        p.pos += 1;
    }
}

/// Parses a polynomial in `n` variables.
pub fn parse_polynomial(s: &str, n: usize) -> Result<Polynomial> {
    let mut p = Parser::new(s);
    let terms = parse_polynomial_raw(&mut p)?;
    p.finish()?;
    let terms = terms
        .iter()
        .map(|(c, m)| Ok((c.clone(), build(m, n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_terms(n, terms))
}

/// Comma-separated polynomials; the number of variables is inferred as for
/// [`parse_ideal`].
pub fn parse_polynomials(s: &str) -> Result<(usize, Vec<Polynomial>)> {
    let mut p = Parser::new(s);
    let mut raw = vec![parse_polynomial_raw(&mut p)?];
    while p.peek() == Some(',') {
        p.pos += 1;
        raw.push(parse_polynomial_raw(&mut p)?);
    }
    p.finish()?;
    let n = p.max_var.max(1);
    let polys = raw
        .iter()
        .map(|terms| {
            let terms = terms
                .iter()
                .map(|(c, m)| Ok((c.clone(), build(m, n)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Polynomial::from_terms(n, terms))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((n, polys))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases_and_indices() {
        let a = parse_ideal("x^3, y^3, z^3, xyz").unwrap();
        let b = parse_ideal("x1^3, x2^3, x3^3, x1*x2*x3").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.nvars(), 3);
        assert_eq!(parse_ideal("x, z").unwrap().nvars(), 3);
        assert_eq!(parse_ideal(" x ^ 2 * y , y^3 ").unwrap().to_string(), "x^2*y, y^3");
    }

    #[test]
    fn special_ideals() {
        assert!(parse_ideal("0").unwrap().is_zero());
        assert!(parse_ideal("1").unwrap().is_unit());
        assert!(parse_ideal("x^2, 1").unwrap().is_unit());
        assert_eq!(parse_ideal_with_n("0", 3).unwrap().nvars(), 3);
    }

    #[test]
    fn error_offsets() {
        let e = parse_ideal("x^^2").unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 3, .. }), "{e}");
        let e = parse_ideal("x^2,").unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 5, .. }), "{e}");
        let e = parse_ideal("x, x2").unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 4, .. }), "{e}");
        assert!(e.to_string().contains("inconsistent"));
        let e = parse_ideal("x0").unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 1, .. }), "{e}");
        assert!(parse_ideal("q").is_err());
        assert!(parse_ideal("x^99999999999").is_err());
        assert!(matches!(
            parse_ideal_with_n("x1, x4", 3).unwrap_err(),
            Error::VariableCount { expected: 3, found: 4 }
        ));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/2").unwrap(), BigRational::new((-3).into(), 2.into()));
        assert_eq!(parse_rational(" 4 ").unwrap(), BigRational::from_integer(4.into()));
        assert!(matches!(parse_rational("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_rational("x"), Err(Error::Syntax { offset: 1, .. })));
    }

    #[test]
    fn polynomials() {
        let p = parse_polynomial("x^3 + y*z^2", 3).unwrap();
        assert_eq!(p.to_string(), "x^3 + y*z^2");
        let q = parse_polynomial("-3/2*x^2 + 3/2 y^2 - 1", 2).unwrap();
        assert_eq!(q.to_string(), "-3/2*x^2 + 3/2*y^2 - 1");
        assert_eq!(parse_polynomial(&q.to_string(), 2).unwrap(), q);
        assert!(parse_polynomial("x + x - 2x", 1).unwrap().is_zero());
        assert!(parse_polynomial("1/0*x", 1).is_err());
        let (n, ps) = parse_polynomials("x^2 + y^2, y^2, x").unwrap();
        assert_eq!((n, ps.len()), (2, 3));
    }
}
