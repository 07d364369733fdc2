//! Double complexes of projectives and their total complexes.
//!
//! Squares commute (`d_v d_h = d_h d_v`); the sign enters when totalising,
//! where the differential on `X^{h,v}` is `d_h + (−1)^h d_v`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::GradedAlgebra;
use crate::proj::{check_entries, ComplexError, EMatrix, ProjComplex, ProjMap, Regime, Summand};
use crate::ring::sign;

#[derive(Clone, Debug)]
pub struct Bicomplex {
    pub alg: Arc<GradedAlgebra>,
    /// Keyed by `(h, v)`.
    pub terms: BTreeMap<(i32, i32), Vec<Summand>>,
    /// `dh[(h, v)]: X^{h,v} → X^{h+1,v}`
    pub dh: BTreeMap<(i32, i32), EMatrix>,
    /// `dv[(h, v)]: X^{h,v} → X^{h,v+1}`
    pub dv: BTreeMap<(i32, i32), EMatrix>,
}

impl Bicomplex {
    pub fn new(alg: &Arc<GradedAlgebra>) -> Self {
        Self {
            alg: alg.clone(),
            terms: BTreeMap::new(),
            dh: BTreeMap::new(),
            dv: BTreeMap::new(),
        }
    }

    pub fn term(&self, h: i32, v: i32) -> &[Summand] {
        self.terms.get(&(h, v)).map_or(&[], Vec::as_slice)
    }

    fn get(map: &BTreeMap<(i32, i32), EMatrix>, key: (i32, i32), rows: usize, cols: usize) -> EMatrix {
        map.get(&key).cloned().unwrap_or_else(|| EMatrix::zeros(rows, cols))
    }

    pub fn horizontal(&self, h: i32, v: i32) -> EMatrix {
        Self::get(&self.dh, (h, v), self.term(h + 1, v).len(), self.term(h, v).len())
    }

    pub fn vertical(&self, h: i32, v: i32) -> EMatrix {
        Self::get(&self.dv, (h, v), self.term(h, v + 1).len(), self.term(h, v).len())
    }

    /// `d_h² = 0`, `d_v² = 0`, squares commute, and every entry has the right
    /// vertices and degree.
    pub fn check(&self) -> Result<(), ComplexError> {
        let alg = &self.alg;
        for &(h, v) in self.terms.keys() {
            let n = h + v;
            let dh = self.horizontal(h, v);
            let dv = self.vertical(h, v);
            check_entries(alg, self.term(h, v), self.term(h + 1, v), &dh, n)?;
            check_entries(alg, self.term(h, v), self.term(h, v + 1), &dv, n)?;
            if !self.horizontal(h + 1, v).mul(alg, &dh).is_zero() || !self.vertical(h, v + 1).mul(alg, &dv).is_zero() {
                return Err(ComplexError::NotComplex(n));
            }
            let a = self.vertical(h + 1, v).mul(alg, &dh);
            let b = self.horizontal(h, v + 1).mul(alg, &dv);
            if a != b {
                return Err(ComplexError::Other(format!("square at ({h}, {v}) does not commute")));
            }
        }
        Ok(())
    }

    /// Positions `(h, v)` contributing to total degree `n`, by increasing `h`.
    fn antidiagonal(&self, n: i32) -> Vec<(i32, i32)> {
        self.terms.keys().filter(|(h, v)| h + v == n).copied().collect()
    }

    /// Offsets of each `(h, v)` block inside the total term of degree `n`.
    pub fn block_offsets(&self, n: i32) -> BTreeMap<(i32, i32), usize> {
        let mut acc = 0;
        let mut out = BTreeMap::new();
        for key in self.antidiagonal(n) {
            out.insert(key, acc);
            acc += self.term(key.0, key.1).len();
        }
        out
    }

    /// Total complex with differential `d_h + (−1)^h d_v`. The result is
    /// bounded; callers set its regime and trusted range.
    pub fn total(&self) -> ProjComplex {
        let mut out = ProjComplex::zero(&self.alg);
        let degrees: Vec<i32> = self.terms.keys().map(|(h, v)| h + v).collect();
        for &n in &degrees {
            let mut t = Vec::new();
            for (h, v) in self.antidiagonal(n) {
                t.extend_from_slice(self.term(h, v));
            }
            out.set_term(n, t);
        }
        for &n in &degrees {
            let src = self.block_offsets(n);
            let dst = self.block_offsets(n + 1);
            let mut d = EMatrix::zeros(out.term(n + 1).len(), out.term(n).len());
            for (&(h, v), &c0) in &src {
                let place = |d: &mut EMatrix, key: (i32, i32), m: &EMatrix, s: i64| {
                    if let Some(&r0) = dst.get(&key) {
                        let sg = sign(s);
                        for i in 0..m.rows {
                            for j in 0..m.cols {
                                let x = m.get(i, j);
                                if !x.is_zero() {
                                    d.add_at(r0 + i, c0 + j, &x.scale(&sg));
                                }
                            }
                        }
                    }
                };
                place(&mut d, (h + 1, v), &self.horizontal(h, v), 0);
                place(&mut d, (h, v + 1), &self.vertical(h, v), h as i64);
            }
            out.set_diff(n, d);
        }
        out.regime = Regime::Bounded;
        out
    }
}

/// Map of bicomplexes given by one matrix per position, totalised blockwise.
pub fn total_map(
    x: &Bicomplex,
    y: &Bicomplex,
    maps: &BTreeMap<(i32, i32), EMatrix>,
    tx: &ProjComplex,
    ty: &ProjComplex,
) -> ProjMap {
    let mut out = ProjMap::zero(0);
    for &n in tx.terms.keys() {
        let src = x.block_offsets(n);
        let dst = y.block_offsets(n);
        let mut m = EMatrix::zeros(ty.term(n).len(), tx.term(n).len());
        for (key, &c0) in &src {
            let (Some(&r0), Some(f)) = (dst.get(key), maps.get(key)) else {
                continue;
            };
            for i in 0..f.rows {
                for j in 0..f.cols {
                    m.set(r0 + i, c0 + j, f.get(i, j).clone());
                }
            }
        }
        out.set(n, m);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;
    use crate::proj::Summand;
    use proptest::prelude::*;

    fn el(b: &GradedAlgebra, s: &str) -> crate::algebra::Element {
        b.parse_element(s).unwrap()
    }

    #[test]
    fn single_row_is_unchanged() {
        let b = Arc::new(zigzag());
        let mut bc = Bicomplex::new(&b);
        bc.terms.insert((0, 0), vec![Summand::new(0, 0)]);
        bc.terms.insert((1, 0), vec![Summand::new(1, -1)]);
        let mut d = EMatrix::zeros(1, 1);
        d.set(0, 0, el(&b, "a"));
        bc.dh.insert((0, 0), d.clone());
        bc.check().unwrap();
        let t = bc.total();
        assert_eq!(t.diff(0), d);
        assert_eq!(t.term(1), &[Summand::new(1, -1)]);
    }

    fn square(b: &Arc<GradedAlgebra>, x: i64, y: i64) -> Bicomplex {
        // P(2)<2> --x--> P(2)<2>
        //    |c            |c
        // P(2)    --y--> P(2)     commuting only when x = y
        let mut bc = Bicomplex::new(b);
        for key in [(0, 0), (1, 0)] {
            bc.terms.insert(key, vec![Summand::new(1, 2)]);
        }
        for key in [(0, 1), (1, 1)] {
            bc.terms.insert(key, vec![Summand::new(1, 0)]);
        }
        let scalar = |k: i64| {
            let mut m = EMatrix::zeros(1, 1);
            m.set(0, 0, b.e(1).scale(&crate::ring::int(k)));
            m
        };
        let mut c = EMatrix::zeros(1, 1);
        c.set(0, 0, el(b, "c"));
        bc.dh.insert((0, 0), scalar(x));
        bc.dh.insert((0, 1), scalar(y));
        bc.dv.insert((0, 0), c.clone());
        bc.dv.insert((1, 0), c);
        bc
    }

    proptest! {
        #[test]
        fn totalisation_squares_to_zero(x in -5i64..5, y in -5i64..5) {
            let b = Arc::new(zigzag());
            let bc = square(&b, x, y);
            let t = bc.total();
            let ok = t.check().is_ok();
            prop_assert_eq!(ok, x == y);
            prop_assert_eq!(bc.check().is_ok(), x == y);
        }
    }
}
