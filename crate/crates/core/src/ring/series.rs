use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, Rational, SeriesError};

/// Which direction the series is infinite in.
///
/// Complexes bounded in the `D^<` sense have Euler characteristics in
/// `Z[q^-1][[q]]`; those bounded in the `D^>` sense land in `Z[q][[q^-1]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Expansion {
    /// Powers of `q` grow without bound.
    Q,
    /// Powers of `q^-1` grow without bound.
    QInv,
}

impl Expansion {
    /// Exponent of `q` for the expansion variable `t^e`.
    fn q_exp(self, e: i32) -> i32 {
        match self {
            Expansion::Q => e,
            Expansion::QInv => -e,
        }
    }
}

/// Formal Laurent series with finite principal part, known exactly through
/// a stated order.
///
/// Internally the series is written in the expansion variable `t` (`q` or
/// `q^-1`). Coefficient `coeffs[i]` multiplies `t^(min_exp + i)`, and every
/// coefficient of `t^e` with `e <= order` is exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    expansion: Expansion,
    min_exp: i32,
    #[serde(with = "super::rational_serde::vec")]
    coeffs: Vec<Rational>,
    order: i32,
}

impl TruncatedSeries {
    pub fn zero(expansion: Expansion, order: i32) -> Self {
        Self {
            expansion,
            min_exp: order + 1,
            coeffs: Vec::new(),
            order,
        }
    }

    /// Truncates an exact Laurent polynomial to the given order.
    pub fn from_poly(p: &LaurentPoly, expansion: Expansion, order: i32) -> Self {
        let mut s = Self::zero(expansion, order);
        for (e, c) in p.terms() {
            let t = expansion.q_exp(e);
            s.add_coeff(t, c.clone());
        }
        s.normalize();
        s
    }

    pub fn expansion(&self) -> Expansion {
        self.expansion
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    /// Lowest `t`-exponent with a nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<i32> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.min_exp + i as i32)
    }

    /// Coefficient of `t^e`; `None` beyond the order.
    pub fn coeff_t(&self, e: i32) -> Option<Rational> {
        if e > self.order {
            return None;
        }
        if e < self.min_exp {
            return Some(Rational::zero());
        }
        Some(
            self.coeffs
                .get((e - self.min_exp) as usize)
                .cloned()
                .unwrap_or_else(Rational::zero),
        )
    }

    /// Coefficient of `q^e`; `None` beyond the order.
    pub fn coeff_q(&self, e: i32) -> Option<Rational> {
        self.coeff_t(self.expansion.q_exp(e))
    }

    fn add_coeff(&mut self, e: i32, c: Rational) {
        if e > self.order || c.is_zero() {
            return;
        }
        if self.coeffs.is_empty() {
            self.min_exp = e;
            self.coeffs.push(c);
            return;
        }
        if e < self.min_exp {
            let pad = (self.min_exp - e) as usize;
            let mut v = vec![Rational::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.min_exp = e;
        }
        let idx = (e - self.min_exp) as usize;
        if idx >= self.coeffs.len() {
            self.coeffs.resize(idx + 1, Rational::zero());
        }
        self.coeffs[idx] += c;
    }

    fn normalize(&mut self) {
        while self.coeffs.first().is_some_and(|c| c.is_zero()) {
            self.coeffs.remove(0);
            self.min_exp += 1;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.min_exp = self.order + 1;
        }
    }

    fn check(&self, other: &Self) -> Result<(), SeriesError> {
        if self.expansion != other.expansion {
            return Err(SeriesError::Expansion);
        }
        if let (Some(a_lo), Some(b_lo)) = (self.valuation(), other.valuation()) {
            if self.order < b_lo || other.order < a_lo {
                return Err(SeriesError::Window(a_lo, self.order, b_lo, other.order));
            }
        }
        Ok(())
    }

    fn is_exactly_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.expansion, order);
        for s in [self, other] {
            for (i, c) in s.coeffs.iter().enumerate() {
                out.add_coeff(s.min_exp + i as i32, c.clone());
            }
        }
        out.normalize();
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = c.clone() * s;
        }
        out.normalize();
        out
    }

    /// Multiplies by `q^r` (exact, the order moves with it).
    pub fn shift_q(&self, r: i32) -> Self {
        let t = self.expansion.q_exp(r);
        let mut out = self.clone();
        out.min_exp += t;
        out.order += t;
        out
    }

    /// Product; exact through `min(order_x + val_y, order_y + val_x)`.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        let (vx, vy) = match (self.valuation(), other.valuation()) {
            (Some(vx), Some(vy)) => (vx, vy),
            _ => {
                let order = (self.order + other.valuation().unwrap_or(other.order))
                    .min(other.order + self.valuation().unwrap_or(self.order));
                return Ok(Self::zero(self.expansion, order));
            }
        };
        let order = (self.order + vy).min(other.order + vx);
        let mut out = Self::zero(self.expansion, order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.add_coeff(self.min_exp + i as i32 + other.min_exp + j as i32, a * b);
            }
        }
        out.normalize();
        Ok(out)
    }

    /// Multiplicative inverse, exact through `order - 2 * valuation`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let v = self.valuation().ok_or(SeriesError::NoInverse(self.order))?;
        let lead = self.coeff_t(v).unwrap();
        // u = x t^-v = lead + u1 t + ..., known through order - v.
        let u_order = self.order - v;
        let n = u_order.max(0) as usize;
        let u: Vec<Rational> = (0..=n)
            .map(|k| self.coeff_t(v + k as i32).unwrap_or_else(Rational::zero))
            .collect();
        let inv_lead = Rational::one() / &lead;
        let mut w = vec![Rational::zero(); n + 1];
        w[0] = inv_lead.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &u[j] * &w[k - j];
            }
            w[k] = -(acc * &inv_lead);
        }
        let out_order = u_order - v;
        let mut out = Self::zero(self.expansion, out_order);
        for (k, c) in w.into_iter().enumerate() {
            out.add_coeff(k as i32 - v, c);
        }
        out.normalize();
        Ok(out)
    }

    /// Forgets every coefficient past `order` (no-op if already coarser).
    pub fn truncate(&self, order: i32) -> Self {
        let order = order.min(self.order);
        let mut out = Self::zero(self.expansion, order);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.add_coeff(self.min_exp + i as i32, c.clone());
        }
        out.normalize();
        out
    }

    /// Coefficientwise equality on the common window.
    pub fn agrees_with(&self, other: &Self) -> Result<bool, SeriesError> {
        let d = self.sub(other)?;
        Ok(d.is_exactly_zero())
    }

    /// Highest order through which both are known and equal, or `None` if they
    /// disagree somewhere in the common window.
    pub fn agreement_order(&self, other: &Self) -> Option<i32> {
        match self.agrees_with(other) {
            Ok(true) => Some(self.order.min(other.order)),
            _ => None,
        }
    }

    /// Terms as `(q-exponent, coefficient)`.
    pub fn q_terms(&self) -> Vec<(i32, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.expansion.q_exp(self.min_exp + i as i32), c.clone()))
            .collect()
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.q_terms())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        let big_o = match self.expansion {
            Expansion::Q => format!("O(q^{})", self.order + 1),
            Expansion::QInv => format!("O(q^{})", -(self.order + 1)),
        };
        if p.is_zero() {
            write!(f, "{}", big_o)
        } else {
            write!(f, "{} + {}", p, big_o)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn poly(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|(e, c)| (*e, int(*c))))
    }

    fn series(terms: &[(i32, i64)], order: i32) -> TruncatedSeries {
        TruncatedSeries::from_poly(&poly(terms), Expansion::Q, order)
    }

    /// Brute-force partial sums of `sum_k (-1)^k q^(2k+1)`.
    fn alternating_odd(order: i32) -> TruncatedSeries {
        let terms: Vec<(i32, i64)> = (0..)
            .map(|k| (2 * k + 1, if k % 2 == 0 { 1 } else { -1 }))
            .take_while(|(e, _)| *e <= order)
            .collect();
        series(&terms, order)
    }

    #[test]
    fn polynomial_identities() {
        let a = series(&[(0, 1), (1, 1)], 10);
        let b = series(&[(0, 1), (1, -1)], 10);
        assert_eq!(a.mul(&b).unwrap().to_poly(), poly(&[(0, 1), (2, -1)]));
        let q = series(&[(1, 1)], 10);
        let qi = series(&[(-1, 1)], 10);
        assert_eq!(q.mul(&qi).unwrap().to_poly(), LaurentPoly::one());
    }

    #[test]
    fn geometric_series_telescopes() {
        let n = 21;
        let g = alternating_odd(n);
        let two = series(&[(-1, 1), (1, 1)], n + 5);
        let prod = g.mul(&two).unwrap();
        assert_eq!(prod.to_poly(), LaurentPoly::one());
        assert_eq!(prod.order(), n - 1);
    }

    #[test]
    fn invert_quantum_two() {
        let two = series(&[(-1, 1), (1, 1)], 40);
        let inv = two.invert().unwrap();
        assert_eq!(inv.valuation(), Some(1));
        let oracle = alternating_odd(inv.order());
        assert!(inv.agrees_with(&oracle).unwrap());
        assert!(inv.order() >= 33);
    }

    #[test]
    fn invert_monomials() {
        assert_eq!(series(&[(0, 1)], 5).invert().unwrap().to_poly(), LaurentPoly::one());
        assert_eq!(series(&[(2, 1)], 5).invert().unwrap().to_poly(), poly(&[(-2, 1)]));
        assert!(TruncatedSeries::zero(Expansion::Q, 4).invert().is_err());
    }

    #[test]
    fn expansion_mismatch_and_disjoint_windows() {
        let a = series(&[(0, 1)], 3);
        let b = TruncatedSeries::from_poly(&poly(&[(0, 1)]), Expansion::QInv, 3);
        assert_eq!(a.add(&b), Err(SeriesError::Expansion));
        let lo = series(&[(0, 1)], 2);
        let hi = series(&[(10, 1)], 12);
        assert!(matches!(lo.add(&hi), Err(SeriesError::Window(..))));
    }

    #[test]
    fn inverse_expansion_display() {
        let s = TruncatedSeries::from_poly(&poly(&[(0, 1), (-2, -1)]), Expansion::QInv, 3);
        assert_eq!(s.coeff_q(-2), Some(int(-1)));
        assert_eq!(s.coeff_q(-4), None);
        assert_eq!(s.to_string(), "-q^-2 + 1 + O(q^-4)");
    }
}
