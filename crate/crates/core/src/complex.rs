//! Complexes of explicit graded modules and their homology.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::GradedAlgebra;
use crate::linalg::Matrix;
use crate::module::{GradedModule, ModuleHom};
use crate::proj::{ComplexError, Regime};
use crate::ring::{sign, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModComplex {
    pub alg: Arc<GradedAlgebra>,
    pub terms: BTreeMap<i32, GradedModule>,
    /// `diffs[i]: X^i → X^{i+1}` as a matrix on the module bases.
    pub diffs: BTreeMap<i32, Matrix>,
    pub regime: Regime,
    pub trusted: (i32, i32),
}

impl ModComplex {
    pub fn zero(alg: &Arc<GradedAlgebra>) -> Self {
        Self {
            alg: alg.clone(),
            terms: BTreeMap::new(),
            diffs: BTreeMap::new(),
            regime: Regime::Bounded,
            trusted: (i32::MIN / 4, i32::MAX / 4),
        }
    }

    /// A module placed in a single homological degree.
    pub fn single(m: &GradedModule, degree: i32) -> Self {
        let mut c = Self::zero(&m.alg);
        if !m.is_zero() {
            c.terms.insert(degree, m.clone());
        }
        c
    }

    pub fn term(&self, i: i32) -> GradedModule {
        self.terms
            .get(&i)
            .cloned()
            .unwrap_or_else(|| GradedModule::zero(&self.alg))
    }

    pub fn dim(&self, i: i32) -> usize {
        self.terms.get(&i).map_or(0, GradedModule::dim)
    }

    pub fn diff(&self, i: i32) -> Matrix {
        self.diffs
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(i + 1), self.dim(i)))
    }

    pub fn span(&self) -> Option<(i32, i32)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    /// Every term is a module, every differential a degree-0 module map, and
    /// `d∘d = 0`.
    pub fn check(&self) -> Result<(), ComplexError> {
        let Some((lo, hi)) = self.span() else {
            return Ok(());
        };
        for (i, m) in &self.terms {
            m.check().map_err(|e| ComplexError::Other(format!("term {i}: {e}")))?;
        }
        for i in lo..hi {
            let d = self.diff(i);
            if d.rows() != self.dim(i + 1) || d.cols() != self.dim(i) {
                return Err(ComplexError::Shape(i));
            }
            ModuleHom {
                source: self.term(i),
                target: self.term(i + 1),
                degree: 0,
                matrix: d.clone(),
            }
            .check()
            .map_err(|e| ComplexError::Other(format!("differential {i}: {e}")))?;
            if !(&self.diff(i + 1) * &d).is_zero() {
                return Err(ComplexError::NotComplex(i));
            }
        }
        Ok(())
    }

    /// `X⟨r⟩[s]` with the sign `(−1)^s` on the differential.
    pub fn shift(&self, r: i32, s: i32) -> Self {
        let sg = sign(s as i64);
        Self {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(&i, m)| (i - s, m.shift(r))).collect(),
            diffs: self.diffs.iter().map(|(&i, d)| (i - s, d.scale(&sg))).collect(),
            regime: self.regime,
            trusted: (self.trusted.0.saturating_sub(s), self.trusted.1.saturating_sub(s)),
        }
    }

    /// Homology `ker d^i / im d^{i−1}` as a graded module.
    pub fn homology(&self, i: i32) -> GradedModule {
        let x = self.term(i);
        if x.is_zero() {
            return x;
        }
        let d = self.diff(i);
        // kernel vectors, computed per (degree, vertex) block so they are homogeneous
        let mut blocks: BTreeMap<(i32, usize), Vec<usize>> = BTreeMap::new();
        for k in 0..x.dim() {
            blocks.entry((x.degrees[k], x.vertices[k])).or_default().push(k);
        }
        let mut gens = Vec::new();
        for idx in blocks.values() {
            let rows: Vec<usize> = (0..d.rows()).collect();
            let sub = d.select(&rows, idx);
            for v in sub.kernel() {
                let mut full = vec![Rational::zero(); x.dim()];
                for (t, &k) in idx.iter().enumerate() {
                    full[k] = v[t].clone();
                }
                gens.push(full);
            }
        }
        let (ker, incl) = x.submodule(&gens);
        let prev = self.diff(i - 1);
        let mut rel = Vec::new();
        for c in 0..prev.cols() {
            let col = prev.column(c);
            if col.iter().all(|v| v.is_zero()) {
                continue;
            }
            let coords = incl.solve(&col).expect("image lies in the kernel");
            rel.push(coords);
        }
        ker.quotient(&rel).0
    }

    /// Total dimension of homology in degree `i`.
    pub fn homology_dim(&self, i: i32) -> usize {
        let n = self.dim(i);
        let r_out = self.diff(i).rank();
        let r_in = self.diff(i - 1).rank();
        n - r_out - r_in
    }
}

/// The mapping cone of `phi: P → X`, with `Cone^i = P^{i+1} ⊕ X^i` and
/// differential `[[−d_P, 0], [phi, d_X]]`. It is acyclic exactly when `phi`
/// is a quasi-isomorphism.
pub fn mapping_cone(p: &ModComplex, x: &ModComplex, phi: &ModChainMap) -> ModComplex {
    let mut out = ModComplex::zero(&x.alg);
    let keys: Vec<i32> = p
        .terms
        .keys()
        .map(|i| i - 1)
        .chain(x.terms.keys().copied())
        .collect();
    for &i in &keys {
        let t = p.term(i + 1).direct_sum(&x.term(i));
        if !t.is_zero() {
            out.terms.insert(i, t);
        }
    }
    for &i in &keys {
        let (pa, xa) = (p.dim(i + 1), x.dim(i));
        let (pb, xb) = (p.dim(i + 2), x.dim(i + 1));
        let mut d = Matrix::zeros(pb + xb, pa + xa);
        let dp = p.diff(i + 1).scale(&-Rational::one());
        let f = phi.component(p, x, i + 1);
        let dx = x.diff(i);
        for r in 0..pb {
            for c in 0..pa {
                d.set(r, c, dp.get(r, c).clone());
            }
        }
        for r in 0..xb {
            for c in 0..pa {
                d.set(pb + r, c, f.get(r, c).clone());
            }
            for c in 0..xa {
                d.set(pb + r, pa + c, dx.get(r, c).clone());
            }
        }
        if !d.is_zero() {
            out.diffs.insert(i, d);
        }
    }
    out
}

/// Degreewise module maps between two module complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModChainMap {
    pub maps: BTreeMap<i32, Matrix>,
}

impl ModChainMap {
    pub fn component(&self, x: &ModComplex, y: &ModComplex, i: i32) -> Matrix {
        self.maps
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(y.dim(i), x.dim(i)))
    }

    pub fn check(&self, x: &ModComplex, y: &ModComplex) -> Result<(), ComplexError> {
        let keys: Vec<i32> = x.terms.keys().chain(y.terms.keys()).copied().collect();
        for &i in &keys {
            let f = self.component(x, y, i);
            ModuleHom {
                source: x.term(i),
                target: y.term(i),
                degree: 0,
                matrix: f.clone(),
            }
            .check()
            .map_err(|e| ComplexError::Other(format!("component {i}: {e}")))?;
            let lhs = &y.diff(i) * &f;
            let rhs = &self.component(x, y, i + 1) * &x.diff(i);
            if lhs != rhs {
                return Err(ComplexError::NotChainMap(i));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;
    use crate::module::is_isomorphic;
    use crate::proj::{EMatrix, ProjComplex, Summand};

    #[test]
    fn homology_of_resolution_is_simple() {
        let b = Arc::new(zigzag());
        let mut c = ProjComplex::zero(&b);
        c.set_term(-2, vec![Summand::new(0, 2)]);
        c.set_term(-1, vec![Summand::new(1, 1)]);
        c.set_term(0, vec![Summand::new(0, 0)]);
        let mut d = EMatrix::zeros(1, 1);
        d.set(0, 0, b.parse_element("a").unwrap());
        c.set_diff(-2, d);
        let mut d = EMatrix::zeros(1, 1);
        d.set(0, 0, b.parse_element("b").unwrap());
        c.set_diff(-1, d);
        let m = c.realize();
        m.check().unwrap();
        assert!(is_isomorphic(&m.homology(0), &GradedModule::simple(&b, 0)));
        assert!(m.homology(-1).is_zero());
        assert!(m.homology(-2).is_zero());
        assert_eq!(m.homology_dim(0), 1);
    }
}
