//! Minimal projective resolutions of complexes of modules, built one
//! homological degree at a time, and lifting of chain maps through them.
//!
//! Suppose `φ: P^{>i} → X` has been built so that its mapping cone is exact
//! above degree `i`. The cone in degree `i` is `P^{i+1} ⊕ X^i`, and its cycles
//! `Z` must be hit by `P^i ⊕ X^{i−1}`. The new summands of `P^i` are free on
//! a basis of a complement of `Z·rad + (0, d X^{i−1})` in `Z`; a generator
//! `(z_P, z_X)` gets `d_P = −z_P` and `φ = z_X`. Choosing a complement is what
//! makes the result minimal.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::GradedAlgebra;
use crate::complex::{mapping_cone, ModChainMap, ModComplex};
use crate::linalg::Matrix;
use crate::module::GradedModule;
use crate::proj::{
    coords_element, layout, realize_map, realize_term, ComplexError, EMatrix, ProjComplex, ProjMap, Regime,
    Summand,
};
use crate::ring::Rational;

/// A projective complex with a quasi-isomorphism onto a module complex.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub target: ModComplex,
    pub complex: ProjComplex,
    /// `phi[i]` is the realised map `P^i → X^i`.
    pub phi: BTreeMap<i32, Matrix>,
}

/// Rank-revealing accumulator for a growing set of vectors of fixed length.
struct Span {
    width: usize,
    rows: Vec<Vec<Rational>>,
    rank: usize,
}

impl Span {
    fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            rank: 0,
        }
    }

    fn push(&mut self, v: Vec<Rational>) {
        debug_assert_eq!(v.len(), self.width);
        if v.iter().all(Zero::is_zero) {
            return;
        }
        self.rows.push(v);
        self.rank = Matrix::from_rows(self.rows.clone()).rank();
    }

    /// Adds `v` if it is independent of the span; reports whether it was.
    fn try_extend(&mut self, v: &[Rational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return false;
        }
        let mut trial = self.rows.clone();
        trial.push(v.to_vec());
        let r = Matrix::from_rows(trial).rank();
        if r > self.rank {
            self.rows.push(v.to_vec());
            self.rank = r;
            true
        } else {
            false
        }
    }
}

fn weight_blocks(m: &GradedModule) -> BTreeMap<(i32, usize), Vec<usize>> {
    let mut blocks: BTreeMap<(i32, usize), Vec<usize>> = BTreeMap::new();
    for k in 0..m.dim() {
        blocks.entry((m.degrees[k], m.vertices[k])).or_default().push(k);
    }
    blocks
}

fn embed(n: usize, idx: &[usize], v: &[Rational]) -> Vec<Rational> {
    let mut full = vec![Rational::zero(); n];
    for (t, &k) in idx.iter().enumerate() {
        full[k] = v[t].clone();
    }
    full
}

fn column_block(m: &Matrix, cols: &[usize]) -> Matrix {
    let rows: Vec<usize> = (0..m.rows()).collect();
    m.select(&rows, cols)
}

/// Element entries of a realised vector of `⊕ summands`, one per summand.
fn split_vector(alg: &GradedAlgebra, summands: &[Summand], v: &[Rational]) -> Vec<crate::algebra::Element> {
    let (offsets, paths) = layout(alg, summands);
    summands
        .iter()
        .enumerate()
        .map(|(t, s)| coords_element(alg, s.vertex, &v[offsets[t]..offsets[t] + paths[t].len()]))
        .collect()
}

/// Realised matrix of the module map `⊕ P(v_j)⟨d_j⟩ → M` sending the
/// generator of summand `j` to `images[j]`.
fn free_map(alg: &GradedAlgebra, summands: &[Summand], target: &GradedModule, images: &[Vec<Rational>]) -> Matrix {
    let (offsets, paths) = layout(alg, summands);
    let n = offsets.last().map_or(0, |o| o + paths.last().map_or(0, Vec::len));
    let mut out = Matrix::zeros(target.dim(), n);
    for (j, img) in images.iter().enumerate() {
        for (k, &p) in paths[j].iter().enumerate() {
            let col = target.path_action(p).apply(img);
            for (r, x) in col.into_iter().enumerate() {
                if !x.is_zero() {
                    out.set(r, offsets[j] + k, x);
                }
            }
        }
    }
    out
}

/// Resolves `x` down to homological degree `min_degree` (inclusive).
///
/// Inputs in the `D^>` regime are rejected, since every term of the
/// resolution depends on all higher terms of the input.
pub fn resolve(x: &ModComplex, min_degree: i32) -> Result<Resolution, ComplexError> {
    if x.regime == Regime::Right {
        return Err(ComplexError::Regime);
    }
    let alg = x.alg.clone();
    let mut p = ProjComplex::zero(&alg);
    let mut phi: BTreeMap<i32, Matrix> = BTreeMap::new();
    let Some((lo, hi)) = x.span() else {
        return Ok(Resolution {
            target: x.clone(),
            complex: p,
            phi,
        });
    };
    let mut truncated = false;
    let mut i = hi;
    loop {
        let (summands, d, images) = resolve_step(&alg, x, &p, &phi, i);
        if summands.is_empty() && i < lo {
            break;
        }
        if i < min_degree {
            // one step past the requested depth tells whether anything was cut
            truncated = true;
            break;
        }
        let realized = realize_term(&alg, &summands);
        let xi = x.term(i);
        let mut f = Matrix::zeros(xi.dim(), realized.dim());
        if !summands.is_empty() {
            f = free_map(&alg, &summands, &xi, &images);
        }
        p.set_term(i, summands);
        p.set_diff(i, d);
        if !f.is_zero() {
            phi.insert(i, f);
        }
        i -= 1;
    }
    // The cone convention gives d_P = −z_P; flipping the sign of every other
    // degree (keeping the top one) makes the differentials the cycles
    // themselves, which is how resolutions are usually written.
    for d in p.diffs.values_mut() {
        *d = d.scale(&-Rational::one());
    }
    for (&k, f) in phi.iter_mut() {
        if (hi - k) % 2 != 0 {
            *f = f.scale(&-Rational::one());
        }
    }
    let mut lo_trust = p.trusted.0;
    if truncated {
        p.regime = Regime::Left;
        lo_trust = min_degree;
    }
    if x.regime == Regime::Left {
        p.regime = Regime::Left;
        lo_trust = lo_trust.max(x.trusted.0.saturating_add(1));
    }
    p.trusted = (lo_trust, p.trusted.1);
    Ok(Resolution {
        target: x.clone(),
        complex: p,
        phi,
    })
}

/// One degree of the construction: the new summands, the differential out of
/// them, and the images of their generators under `φ`.
fn resolve_step(
    alg: &Arc<GradedAlgebra>,
    x: &ModComplex,
    p: &ProjComplex,
    phi: &BTreeMap<i32, Matrix>,
    i: i32,
) -> (Vec<Summand>, EMatrix, Vec<Vec<Rational>>) {
    let p1 = realize_term(alg, p.term(i + 1));
    let xi = x.term(i);
    let cone = p1.direct_sum(&xi);
    let (na, nx) = (p1.dim(), xi.dim());
    let nb = realize_term(alg, p.term(i + 2)).dim();
    let nxb = x.dim(i + 1);
    let dp = realize_map(alg, p.term(i + 1), p.term(i + 2), &p.diff(i + 1));
    let f1 = phi.get(&(i + 1)).cloned().unwrap_or_else(|| Matrix::zeros(nxb, na));
    let dx = x.diff(i);
    let mut big = Matrix::zeros(nb + nxb, na + nx);
    for r in 0..nb {
        for c in 0..na {
            big.set(r, c, -dp.get(r, c).clone());
        }
    }
    for r in 0..nxb {
        for c in 0..na {
            big.set(nb + r, c, f1.get(r, c).clone());
        }
        for c in 0..nx {
            big.set(nb + r, na + c, dx.get(r, c).clone());
        }
    }
    let n = na + nx;
    let blocks = weight_blocks(&cone);
    let mut cycles: Vec<((i32, usize), Vec<Rational>)> = Vec::new();
    for (key, idx) in &blocks {
        for v in column_block(&big, idx).kernel() {
            cycles.push((*key, embed(n, idx, &v)));
        }
    }
    // the part of the cycles already hit: Z·rad and d X^{i−1}
    let mut hit = Span::new(n);
    for (_, z) in &cycles {
        for a in &cone.actions {
            hit.push(a.apply(z));
        }
    }
    let dprev = x.diff(i - 1);
    for c in 0..dprev.cols() {
        let col = dprev.column(c);
        let mut v = vec![Rational::zero(); na];
        v.extend(col);
        hit.push(v);
    }
    let mut summands = Vec::new();
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for ((deg, v), z) in &cycles {
        if hit.try_extend(z) {
            summands.push(Summand::new(*v, *deg));
            chosen.push(z.clone());
        }
    }
    let target = p.term(i + 1).to_vec();
    let mut d = EMatrix::zeros(target.len(), summands.len());
    let mut images = Vec::new();
    for (j, z) in chosen.iter().enumerate() {
        let zp: Vec<Rational> = z[..na].iter().map(|c| -c.clone()).collect();
        for (t, e) in split_vector(alg, &target, &zp).into_iter().enumerate() {
            d.set(t, j, e);
        }
        images.push(z[na..].to_vec());
    }
    (summands, d, images)
}

impl Resolution {
    /// The resolution as a module chain map `P → X`.
    pub fn chain_map(&self) -> ModChainMap {
        ModChainMap {
            maps: self.phi.clone(),
        }
    }

    /// Checks that `P` is a complex, `φ` a chain map, and the mapping cone is
    /// exact on every degree where the resolution is trusted.
    pub fn check(&self) -> Result<(), ComplexError> {
        self.complex.check()?;
        let real = self.complex.realize();
        let phi = self.chain_map();
        phi.check(&real, &self.target)?;
        let cone = mapping_cone(&real, &self.target, &phi);
        let Some((lo, hi)) = cone.span() else {
            return Ok(());
        };
        let lo = lo.max(self.complex.trusted.0);
        for i in lo..=hi {
            if cone.homology_dim(i) != 0 {
                return Err(ComplexError::Other(format!("mapping cone has homology in degree {i}")));
            }
        }
        Ok(())
    }
}

/// Lifts `f: X → X'` (realised matrices, missing degrees zero) to a chain map
/// `F: P → P'` between resolutions, with `φ' F ≃ f φ`.
///
/// Generators are handled from the top degree down. For a generator `e` of
/// `P^i` the unknowns are `F(e) ∈ P'^i` and a homotopy value `K(e) ∈ X'^{i−1}`
/// subject to
///
/// ```text
/// d' F(e) = F(d e)        φ' F(e) − d K(e) = f φ(e) + K(d e)
/// ```
///
/// Lifting stops at the lowest degree where `P'` is known.
pub fn lift_map(src: &Resolution, dst: &Resolution, f: &BTreeMap<i32, Matrix>) -> Result<ProjMap, ComplexError> {
    let alg = src.complex.alg.clone();
    let (p, q) = (&src.complex, &dst.complex);
    let (x, y) = (&src.target, &dst.target);
    let mut out = ProjMap::zero(0);
    let Some((lo, hi)) = p.span() else {
        return Ok(out);
    };
    let floor = if q.regime == Regime::Left { q.trusted.0 } else { i32::MIN };
    // realised F^{i+1}: P^{i+1} → P'^{i+1} and K^{i+1}: P^{i+1} → X'^i
    let mut f_next = Matrix::zeros(0, 0);
    let mut k_next = Matrix::zeros(0, 0);
    for i in (lo..=hi).rev() {
        if i < floor {
            break;
        }
        let src_terms = p.term(i);
        let (offsets, paths) = layout(&alg, src_terms);
        let pi_dim = realize_term(&alg, src_terms).dim();
        let qi = realize_term(&alg, q.term(i));
        let yprev = y.term(i - 1);
        let dq = realize_map(&alg, q.term(i), q.term(i + 1), &q.diff(i));
        let dp = realize_map(&alg, src_terms, p.term(i + 1), &p.diff(i));
        let phi_q = dst
            .phi
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(y.dim(i), qi.dim()));
        let phi_p = src
            .phi
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(x.dim(i), pi_dim));
        let fi = f.get(&i).cloned().unwrap_or_else(|| Matrix::zeros(y.dim(i), x.dim(i)));
        let dy = y.diff(i - 1);
        let qblocks = weight_blocks(&qi);
        let yblocks = weight_blocks(&yprev);
        let mut f_images = Vec::new();
        let mut k_images = Vec::new();
        let mut entries = EMatrix::zeros(q.term(i).len(), src_terms.len());
        for (j, s) in src_terms.iter().enumerate() {
            let key = (s.shift, s.vertex);
            let wf = qblocks.get(&key).cloned().unwrap_or_default();
            let wk = yblocks.get(&key).cloned().unwrap_or_default();
            let col = offsets[j] + paths[j].iter().position(|&t| t == alg.idempotent_index(s.vertex)).expect("idempotent path");
            let de = dp.column(col);
            let rhs_a = if f_next.cols() == de.len() && !de.is_empty() {
                f_next.apply(&de)
            } else {
                vec![Rational::zero(); dq.rows()]
            };
            let mut rhs_b = fi.apply(&phi_p.column(col));
            if k_next.cols() == de.len() && !de.is_empty() {
                for (r, v) in k_next.apply(&de).into_iter().enumerate() {
                    rhs_b[r] += v;
                }
            }
            let (na, nb) = (dq.rows(), phi_q.rows());
            let mut sys = Matrix::zeros(na + nb, wf.len() + wk.len());
            for (c, &w) in wf.iter().enumerate() {
                for r in 0..na {
                    sys.set(r, c, dq.get(r, w).clone());
                }
                for r in 0..nb {
                    sys.set(na + r, c, phi_q.get(r, w).clone());
                }
            }
            for (c, &w) in wk.iter().enumerate() {
                for r in 0..nb {
                    sys.set(na + r, wf.len() + c, -dy.get(r, w).clone());
                }
            }
            let rhs: Vec<Rational> = rhs_a.into_iter().chain(rhs_b).collect();
            let sol = sys
                .solve(&rhs)
                .ok_or_else(|| ComplexError::Other(format!("cannot lift map in degree {i}")))?;
            let fe = embed(qi.dim(), &wf, &sol[..wf.len()]);
            let ke = embed(yprev.dim(), &wk, &sol[wf.len()..]);
            for (t, e) in split_vector(&alg, q.term(i), &fe).into_iter().enumerate() {
                entries.set(t, j, e);
            }
            f_images.push(fe);
            k_images.push(ke);
        }
        f_next = free_map(&alg, src_terms, &qi, &f_images);
        k_next = free_map(&alg, src_terms, &yprev, &k_images);
        out.set(i, entries);
    }
    Ok(out)
}

/// Resolution of a single module; `depth` is the number of homological
/// degrees computed, starting from 0 and going down.
pub fn resolve_module(m: &GradedModule, depth: usize) -> Resolution {
    let x = ModComplex::single(m, 0);
    resolve(&x, 1 - depth as i32).expect("a single module is bounded")
}

/// Minimal projective resolution over the zig-zag algebra.
#[allow(non_snake_case)]
pub fn projective_resolution_B(m: &GradedModule, depth: usize) -> ProjComplex {
    resolve_module(m, depth).complex
}

/// Minimal free resolution over the dual numbers.
#[allow(non_snake_case)]
pub fn projective_resolution_C(m: &GradedModule, depth: usize) -> ProjComplex {
    resolve_module(m, depth).complex
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers, zigzag};
    use crate::module::is_isomorphic;

    fn el(b: &GradedAlgebra, s: &str) -> crate::algebra::Element {
        b.parse_element(s).unwrap()
    }

    #[test]
    fn resolution_of_l1() {
        let b = Arc::new(zigzag());
        let r = resolve_module(&GradedModule::simple(&b, 0), 3);
        r.check().unwrap();
        let c = &r.complex;
        assert_eq!(c.term(0), &[Summand::new(0, 0)]);
        assert_eq!(c.term(-1), &[Summand::new(1, 1)]);
        assert_eq!(c.term(-2), &[Summand::new(0, 2)]);
        assert!(c.term(-3).is_empty());
        assert_eq!(c.regime, Regime::Bounded);
        assert_eq!(c.diff(-1).get(0, 0), &el(&b, "b"));
        assert_eq!(c.diff(-2).get(0, 0), &el(&b, "a"));
        let h = c.realize().homology(0);
        assert!(is_isomorphic(&h, &GradedModule::simple(&b, 0)));
    }

    #[test]
    fn resolution_of_l2_has_length_one() {
        let b = Arc::new(zigzag());
        let r = resolve_module(&GradedModule::simple(&b, 1), 4);
        r.check().unwrap();
        let c = &r.complex;
        assert_eq!(c.term(0), &[Summand::new(1, 0)]);
        assert_eq!(c.term(-1), &[Summand::new(0, 1)]);
        assert_eq!(c.span(), Some((-1, 0)));
    }

    #[test]
    fn projective_is_its_own_resolution() {
        let b = Arc::new(zigzag());
        let c = projective_resolution_B(&GradedModule::projective(&b, 1), 5);
        assert_eq!(c.span(), Some((0, 0)));
        assert_eq!(c.term(0), &[Summand::new(1, 0)]);
    }

    #[test]
    fn trivial_module_over_dual_numbers_is_periodic() {
        let cc = Arc::new(dual_numbers());
        let r = resolve_module(&GradedModule::simple(&cc, 0), 6);
        r.check().unwrap();
        let c = &r.complex;
        assert_eq!(c.regime, Regime::Left);
        assert_eq!(c.trusted.0, -5);
        for k in 0..6 {
            assert_eq!(c.term(-k), &[Summand::new(0, 2 * k)]);
            if k > 0 {
                let x = c.diff(-k).get(0, 0).clone();
                assert_eq!(x.terms.len(), 1);
                assert_eq!(cc.homogeneous_degree(&x), Some(2));
            }
        }
    }

    #[test]
    fn lifting_c_between_resolutions() {
        let b = Arc::new(zigzag());
        let p2 = GradedModule::projective(&b, 1);
        let src = resolve_module(&p2.shift(2), 2);
        let dst = resolve_module(&p2, 2);
        let f = realize_map(&b, &[Summand::new(1, 2)], &[Summand::new(1, 0)], &{
            let mut m = EMatrix::zeros(1, 1);
            m.set(0, 0, el(&b, "c"));
            m
        });
        let lifted = lift_map(&src, &dst, &BTreeMap::from([(0, f)])).unwrap();
        assert_eq!(lifted.component(&src.complex, &dst.complex, 0).get(0, 0), &el(&b, "c"));
        lifted
            .check_chain_map(&src.complex, &dst.complex, -2, 1)
            .unwrap();
    }

    #[test]
    fn lifting_through_a_nontrivial_resolution() {
        // the quotient P(1) → L(1) lifts to the inclusion of degree-0 terms
        let b = Arc::new(zigzag());
        let p1 = GradedModule::projective(&b, 0);
        let l1 = GradedModule::simple(&b, 0);
        let src = resolve_module(&p1, 3);
        let dst = resolve_module(&l1, 3);
        let mut proj = Matrix::zeros(1, 2);
        proj.set(0, 0, Rational::from_integer(1.into()));
        let lifted = lift_map(&src, &dst, &BTreeMap::from([(0, proj)])).unwrap();
        lifted
            .check_chain_map(&src.complex, &dst.complex, -3, 1)
            .unwrap();
        assert_eq!(lifted.component(&src.complex, &dst.complex, 0).get(0, 0), &b.e(0));
    }
}
