use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{fmt_rational, int, parse_rational, LaurentParseError, Rational};

/// Finitely supported Laurent polynomial in `q` with rational coefficients.
///
/// No zero coefficient is ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    /// `c q^e`
    pub fn monomial(c: Rational, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i32) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplies by `q^r`.
    pub fn shift(&self, r: i32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + r, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, c)| (*e, c * s)))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// True if every coefficient is a non-negative integer.
    pub fn is_natural(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer() && !c.is_negative())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = abs.is_one();
            if *e == 0 {
                write!(f, "{}", fmt_rational(&abs))?;
                continue;
            }
            if !unit {
                if abs.is_integer() {
                    write!(f, "{}", fmt_rational(&abs))?;
                } else {
                    write!(f, "({})", fmt_rational(&abs))?;
                }
            }
            if *e == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{}", e)?;
            }
        }
        Ok(())
    }
}

impl From<LaurentPoly> for String {
    fn from(p: LaurentPoly) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for LaurentPoly {
    type Error = LaurentParseError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentParseError;

    /// Parses the output of `Display`, e.g. `q^-1 + 2 + q^3` or `-(1/2)q - 3q^2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let mut out = LaurentPoly::zero();
        let err = |pos: usize, msg: &str| LaurentParseError {
            pos,
            msg: msg.to_string(),
        };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos] == b' ' {
                *pos += 1;
            }
        };
        let read_int = |pos: &mut usize| -> Option<String> {
            let start = *pos;
            if *pos < bytes.len() && bytes[*pos] == b'-' {
                *pos += 1;
            }
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let t = &s[start..*pos];
            if t.is_empty() || t == "-" {
                None
            } else {
                Some(t.to_string())
            }
        };
        skip_ws(&mut pos);
        if s.trim() == "0" {
            return Ok(out);
        }
        let mut first = true;
        while pos < bytes.len() {
            skip_ws(&mut pos);
            let mut negative = false;
            if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                negative = bytes[pos] == b'-';
                pos += 1;
                skip_ws(&mut pos);
            } else if !first {
                return Err(err(pos, "expected '+' or '-'"));
            }
            first = false;
            // coefficient
            let mut coeff: Option<Rational> = None;
            if pos < bytes.len() && bytes[pos] == b'(' {
                let close = s[pos..]
                    .find(')')
                    .ok_or_else(|| err(pos, "unclosed '('"))?;
                coeff = Some(
                    parse_rational(&s[pos + 1..pos + close])
                        .ok_or_else(|| err(pos, "bad rational"))?,
                );
                pos += close + 1;
            } else if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                let start = pos;
                while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                    pos += 1;
                }
                coeff = Some(parse_rational(&s[start..pos]).ok_or_else(|| err(start, "bad number"))?);
            }
            let mut exp = 0;
            if pos < bytes.len() && bytes[pos] == b'q' {
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let t = read_int(&mut pos).ok_or_else(|| err(pos, "bad exponent"))?;
                    exp = t.parse().map_err(|_| err(pos, "exponent out of range"))?;
                }
            } else if coeff.is_none() {
                return Err(err(pos, "expected coefficient or 'q'"));
            }
            let mut c = coeff.unwrap_or_else(|| int(1));
            if negative {
                c = -c;
            }
            out.add_term(exp, c);
            skip_ws(&mut pos);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn display_matches_report_style() {
        let p = LaurentPoly::from_terms([(-1, int(1)), (0, int(2)), (3, int(1))]);
        assert_eq!(p.to_string(), "q^-1 + 2 + q^3");
        let p = LaurentPoly::from_terms([(1, int(-1)), (2, rat(-1, 2))]);
        assert_eq!(p.to_string(), "-q - (1/2)q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["q^-1 + 2 + q^3", "-q - (1/2)q^2", "0", "3q^-4 - 1", "q"] {
            let p: LaurentPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("2 q".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn products() {
        let one_plus_q = LaurentPoly::from_terms([(0, int(1)), (1, int(1))]);
        let one_minus_q = LaurentPoly::from_terms([(0, int(1)), (1, int(-1))]);
        let expected = LaurentPoly::from_terms([(0, int(1)), (2, int(-1))]);
        assert_eq!(&one_plus_q * &one_minus_q, expected);
        assert_eq!(&LaurentPoly::q_pow(1) * &LaurentPoly::q_pow(-1), LaurentPoly::one());
    }
}
