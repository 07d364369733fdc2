//! Gaussian elimination of complexes of projectives.
//!
//! An entry of a differential between two copies of the same `P(v)⟨j⟩` has
//! degree zero, so it is a scalar multiple of `e(v)`. Whenever that scalar is
//! nonzero the pair of summands is split off as a contractible piece. Writing
//! `d^i = [[φ, δ], [γ, ε]]` with `φ` the unit entry, the new differential is
//! `ε − γφ⁻¹δ` and the comparison maps are
//!
//! ```text
//! f^i = (0, 1)          f^{i+1} = (−γφ⁻¹, 1)
//! g^i = (−φ⁻¹δ; 1)      g^{i+1} = (0; 1)
//! h^{i+1} = [[φ⁻¹, 0], [0, 0]]
//! ```
//!
//! with `f g = 1` and `1 − g f = d h + h d`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::Element;
use crate::proj::{EMatrix, ProjComplex, ProjMap, Regime};
use crate::ring::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("reduction did not terminate within {0} steps")]
    Budget(usize),
}

/// A reduced complex together with the homotopy equivalence to the input.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub original: ProjComplex,
    pub reduced: ProjComplex,
    /// original → reduced
    pub f: ProjMap,
    /// reduced → original
    pub g: ProjMap,
    /// homotopy on the original with `1 − g∘f = d h + h d`
    pub h: ProjMap,
    pub steps: usize,
}

fn find_unit(c: &ProjComplex) -> Option<(i32, usize, usize, Rational)> {
    for (&i, d) in &c.diffs {
        let (src, dst) = (c.term(i), c.term(i + 1));
        for (col, s) in src.iter().enumerate() {
            for (row, t) in dst.iter().enumerate() {
                if s != t {
                    continue;
                }
                let x = d.get(row, col);
                let lam = x.coeff(c.alg.idempotent_index(s.vertex));
                if !lam.is_zero() {
                    return Some((i, row, col, lam));
                }
            }
        }
    }
    None
}

fn without(n: usize, skip: usize) -> Vec<usize> {
    (0..n).filter(|&k| k != skip).collect()
}

/// Reduces `c` to a minimal complex. With `track` false the comparison maps
/// are left empty, which is much cheaper.
pub fn gaussian_reduce(c: &ProjComplex, track: bool) -> Result<Reduction, ReduceError> {
    let alg = c.alg.clone();
    let mut cur = c.clone();
    let mut f = ProjMap::identity(c);
    let mut g = ProjMap::identity(c);
    let mut h = ProjMap::zero(-1);
    let budget = c.rank() + 1;
    let mut steps = 0;
    while let Some((i, k, j, lam)) = find_unit(&cur) {
        steps += 1;
        if steps > budget {
            return Err(ReduceError::Budget(budget));
        }
        let d = cur.diff(i);
        let (ni, nk) = (cur.term(i).len(), cur.term(i + 1).len());
        let rest_i = without(ni, j);
        let rest_k = without(nk, k);
        let inv = Rational::one() / &lam;
        let v = cur.term(i)[j].vertex;
        let phi_inv = Element::scalar_basis(alg.idempotent_index(v), inv.clone());
        let delta = d.select(&[k], &rest_i); // 1 × (ni−1)
        let gamma = d.select(&rest_k, &[j]); // (nk−1) × 1
        let eps = d.select(&rest_k, &rest_i);
        let gpd = gamma.mul(&alg, &delta).scale(&inv);
        let new_d = eps.sub(&gpd);

        if track {
            // f^i = (0, 1) drops row j; f^{i+1} = (−γφ⁻¹, 1)
            let mut fi = EMatrix::zeros(ni - 1, ni);
            for (r, &c0) in rest_i.iter().enumerate() {
                fi.set(r, c0, alg.e(cur.term(i)[c0].vertex));
            }
            let mut fk = EMatrix::zeros(nk - 1, nk);
            for (r, &c0) in rest_k.iter().enumerate() {
                fk.set(r, c0, alg.e(cur.term(i + 1)[c0].vertex));
                fk.set(r, k, gamma.get(r, 0).scale(&-inv.clone()));
            }
            // g^i = (−φ⁻¹δ; 1); g^{i+1} = (0; 1)
            let mut gi = EMatrix::zeros(ni, ni - 1);
            for (c1, &r0) in rest_i.iter().enumerate() {
                gi.set(r0, c1, alg.e(cur.term(i)[r0].vertex));
                gi.set(j, c1, delta.get(0, c1).scale(&-inv.clone()));
            }
            let mut gk = EMatrix::zeros(nk, nk - 1);
            for (c1, &r0) in rest_k.iter().enumerate() {
                gk.set(r0, c1, alg.e(cur.term(i + 1)[r0].vertex));
            }
            // h^{i+1}: X^{i+1} → X^i sends summand k to summand j via φ⁻¹
            let mut hk = EMatrix::zeros(ni, nk);
            hk.set(j, k, phi_inv.clone());
            let old_g_i = g.component(&cur, c, i).clone();
            let old_f_k = f.component(c, &cur, i + 1).clone();
            // H += G^i h F^{i+1}, placed at degree i+1 of the original
            let add = old_g_i.mul(&alg, &hk).mul(&alg, &old_f_k);
            let prev = h.maps.get(&(i + 1)).cloned();
            let sum = match prev {
                Some(p) => p.add(&add),
                None => add,
            };
            h.set(i + 1, sum);
            let fi_new = fi.mul(&alg, &f.component(c, &cur, i));
            let fk_new = fk.mul(&alg, &old_f_k);
            f.set(i, fi_new);
            f.set(i + 1, fk_new);
            let gi_new = old_g_i.mul(&alg, &gi);
            let gk_new = g.component(&cur, c, i + 1).mul(&alg, &gk);
            g.set(i, gi_new);
            g.set(i + 1, gk_new);
        }

        // rebuild the complex
        let prev_d = cur.diff(i - 1);
        let next_d = cur.diff(i + 1);
        let ti: Vec<_> = rest_i.iter().map(|&x| cur.term(i)[x]).collect();
        let tk: Vec<_> = rest_k.iter().map(|&x| cur.term(i + 1)[x]).collect();
        let n_prev = cur.term(i - 1).len();
        let n_next = cur.term(i + 2).len();
        cur.set_term(i, ti);
        cur.set_term(i + 1, tk);
        cur.set_diff(i, new_d);
        cur.set_diff(i - 1, prev_d.select(&rest_i, &(0..n_prev).collect::<Vec<_>>()));
        cur.set_diff(i + 1, next_d.select(&(0..n_next).collect::<Vec<_>>(), &rest_k));
    }
    let (lo, hi) = c.trusted;
    cur.trusted = match c.regime {
        Regime::Bounded => (lo, hi),
        Regime::Left => (lo.saturating_add(1), hi),
        Regime::Right => (lo, hi.saturating_sub(1)),
    };
    if !track {
        f = ProjMap::zero(0);
        g = ProjMap::zero(0);
    }
    Ok(Reduction {
        original: c.clone(),
        reduced: cur,
        f,
        g,
        h,
        steps,
    })
}

impl Reduction {
    /// Verifies `f`, `g` are chain maps, `f g = 1` and `1 − g f = d h + h d`
    /// on every degree of the original complex.
    pub fn verify(&self) -> Result<(), String> {
        let (x, y) = (&self.original, &self.reduced);
        let alg = &x.alg;
        let Some((lo, hi)) = x.span() else {
            return Ok(());
        };
        self.f
            .check_chain_map(x, y, lo - 1, hi + 1)
            .map_err(|e| format!("f: {e}"))?;
        self.g
            .check_chain_map(y, x, lo - 1, hi + 1)
            .map_err(|e| format!("g: {e}"))?;
        let fg = self.f.compose(&self.g, y, x, y);
        if fg != ProjMap::identity(y) {
            return Err("f∘g is not the identity".into());
        }
        let gf = self.g.compose(&self.f, x, y, x);
        for i in lo..=hi {
            let id = EMatrix::identity(alg, x.term(i));
            let lhs = id.sub(&gf.component(x, x, i));
            let dh = x.diff(i - 1).mul(alg, &self.h.component(x, x, i));
            let hd = self.h.component(x, x, i + 1).mul(alg, &x.diff(i));
            if lhs != dh.add(&hd) {
                return Err(format!("homotopy fails at degree {i}"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;
    use crate::proj::Summand;
    use std::sync::Arc;

    fn el(b: &crate::algebra::GradedAlgebra, s: &str) -> Element {
        b.parse_element(s).unwrap()
    }

    #[test]
    fn identity_cone_contracts() {
        let b = Arc::new(zigzag());
        let mut c = ProjComplex::zero(&b);
        c.set_term(0, vec![Summand::new(1, 0)]);
        c.set_term(1, vec![Summand::new(1, 0)]);
        let mut d = EMatrix::zeros(1, 1);
        d.set(0, 0, el(&b, "e(2)"));
        c.set_diff(0, d);
        let r = gaussian_reduce(&c, true).unwrap();
        assert!(r.reduced.is_zero());
        r.verify().unwrap();
    }

    #[test]
    fn mixed_complex_reduces_with_valid_homotopy() {
        // P(2)<2> → P(2)<2> ⊕ P(2) → P(2), with d0 = (e, c)ᵀ, d1 = (−c, e)
        let b = Arc::new(zigzag());
        let mut c = ProjComplex::zero(&b);
        c.set_term(0, vec![Summand::new(1, 2)]);
        c.set_term(1, vec![Summand::new(1, 2), Summand::new(1, 0)]);
        c.set_term(2, vec![Summand::new(1, 0)]);
        let mut d0 = EMatrix::zeros(2, 1);
        d0.set(0, 0, el(&b, "e(2)"));
        d0.set(1, 0, el(&b, "c"));
        let mut d1 = EMatrix::zeros(1, 2);
        d1.set(0, 0, el(&b, "-c"));
        d1.set(0, 1, el(&b, "e(2)"));
        c.set_diff(0, d0);
        c.set_diff(1, d1);
        c.check().unwrap();
        let r = gaussian_reduce(&c, true).unwrap();
        assert!(r.reduced.is_zero());
        r.verify().unwrap();
    }

    #[test]
    fn minimal_complex_is_untouched() {
        let b = Arc::new(zigzag());
        let mut c = ProjComplex::zero(&b);
        c.set_term(0, vec![Summand::new(1, 1)]);
        c.set_term(1, vec![Summand::new(0, 0)]);
        let mut d = EMatrix::zeros(1, 1);
        d.set(0, 0, el(&b, "b"));
        c.set_diff(0, d);
        let r = gaussian_reduce(&c, true).unwrap();
        assert_eq!(r.steps, 0);
        assert_eq!(r.reduced, c);
        r.verify().unwrap();
    }
}
