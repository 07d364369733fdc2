//! Finite-dimensional graded right modules over a [`GradedAlgebra`].
//!
//! A module is a list of basis vectors, each homogeneous of some internal
//! degree and concentrated at one vertex, together with one matrix per arrow
//! giving the right action. Column `j` of the matrix for `α` is `m_j · α`.
//! Shifts follow `(M⟨r⟩)_j = M_{j−r}`: every degree goes up by `r`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Element, GradedAlgebra};
use crate::linalg::{LinearSystem, Matrix};
use crate::ring::{int, LaurentPoly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("modules are over different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),
    #[error("module axiom fails: {0}")]
    Axiom(String),
    #[error("malformed module description: {0}")]
    Malformed(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct GradedModule {
    pub alg: Arc<GradedAlgebra>,
    pub degrees: Vec<i32>,
    pub vertices: Vec<usize>,
    pub labels: Vec<String>,
    pub actions: Vec<Matrix>,
}

impl GradedModule {
    pub fn zero(alg: &Arc<GradedAlgebra>) -> Self {
        Self {
            alg: alg.clone(),
            degrees: Vec::new(),
            vertices: Vec::new(),
            labels: Vec::new(),
            actions: vec![Matrix::zeros(0, 0); alg.quiver.arrows.len()],
        }
    }

    /// `P(v) = e(v)A`, with basis the paths ending at `v`.
    pub fn projective(alg: &Arc<GradedAlgebra>, v: usize) -> Self {
        let basis: Vec<usize> = (0..alg.dim()).filter(|&i| alg.path(i).target == v).collect();
        let pos: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let n = basis.len();
        let actions = (0..alg.quiver.arrows.len())
            .map(|arrow| {
                let ai = alg.arrow_index(arrow);
                let mut m = Matrix::zeros(n, n);
                for (col, &p) in basis.iter().enumerate() {
                    if let Some(r) = alg.mul_basis(p, ai) {
                        m.set(pos[&r], col, Rational::one());
                    }
                }
                m
            })
            .collect();
        Self {
            alg: alg.clone(),
            degrees: basis.iter().map(|&i| alg.degree(i)).collect(),
            vertices: basis.iter().map(|&i| alg.path(i).source).collect(),
            labels: basis.iter().map(|&i| alg.basis_name(i)).collect(),
            actions,
        }
    }

    pub fn projective_named(alg: &Arc<GradedAlgebra>, v: &str) -> Result<Self, ModuleError> {
        let v = alg
            .quiver
            .vertex(v)
            .map_err(|_| ModuleError::UnknownVertex(v.to_string()))?;
        Ok(Self::projective(alg, v))
    }

    /// The simple module `L(v)`, one-dimensional in degree 0.
    pub fn simple(alg: &Arc<GradedAlgebra>, v: usize) -> Self {
        Self {
            alg: alg.clone(),
            degrees: vec![0],
            vertices: vec![v],
            labels: vec![format!("e({})", alg.quiver.vertices[v])],
            actions: vec![Matrix::zeros(1, 1); alg.quiver.arrows.len()],
        }
    }

    pub fn simple_named(alg: &Arc<GradedAlgebra>, v: &str) -> Result<Self, ModuleError> {
        let v = alg
            .quiver
            .vertex(v)
            .map_err(|_| ModuleError::UnknownVertex(v.to_string()))?;
        Ok(Self::simple(alg, v))
    }

    /// The injective hull of `L(2)` over the zig-zag algebra, realised as
    /// `P(2)⟨−2⟩` since `P(2)` is self-dual up to that shift.
    pub fn injective2(alg: &Arc<GradedAlgebra>) -> Self {
        Self::projective(alg, 1).shift(-2)
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn shift(&self, r: i32) -> Self {
        let mut m = self.clone();
        for d in &mut m.degrees {
            *d += r;
        }
        m
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.alg.name, other.alg.name, "direct sum over different algebras");
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| block_diag(a, b))
            .collect();
        Self {
            alg: self.alg.clone(),
            degrees: [self.degrees.clone(), other.degrees.clone()].concat(),
            vertices: [self.vertices.clone(), other.vertices.clone()].concat(),
            labels: [self.labels.clone(), other.labels.clone()].concat(),
            actions,
        }
    }

    pub fn direct_sum_all(alg: &Arc<GradedAlgebra>, parts: &[GradedModule]) -> Self {
        parts
            .iter()
            .fold(Self::zero(alg), |acc, m| acc.direct_sum(m))
    }

    /// Matrix of the right action of a basis path (`m ↦ m·p`).
    pub fn path_action(&self, i: usize) -> Matrix {
        let p = self.alg.path(i);
        if p.arrows.is_empty() {
            return self.idempotent(p.source);
        }
        // m·(α₁α₂⋯α_l) = ((m·α₁)·α₂)⋯, so the matrices compose as A_l ⋯ A_1.
        let mut acc = self.actions[p.arrows[0]].clone();
        for &a in &p.arrows[1..] {
            acc = &self.actions[a] * &acc;
        }
        acc
    }

    pub fn act(&self, x: &Element) -> Matrix {
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (&i, c) in &x.terms {
            out = &out + &self.path_action(i).scale(c);
        }
        out
    }

    pub fn idempotent(&self, v: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, &w) in self.vertices.iter().enumerate() {
            if w == v {
                m.set(i, i, Rational::one());
            }
        }
        m
    }

    /// Graded dimension of the vertex-`v` weight space.
    pub fn graded_dim_at(&self, v: usize) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.degrees
                .iter()
                .zip(&self.vertices)
                .filter(|(_, &w)| w == v)
                .map(|(&d, _)| (d, Rational::one())),
        )
    }

    pub fn graded_dim(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.degrees.iter().map(|&d| (d, Rational::one())))
    }

    /// Checks the module axioms: arrows respect vertices and degrees, and
    /// every relation acts as zero.
    pub fn check(&self) -> Result<(), ModuleError> {
        let n = self.dim();
        if self.vertices.len() != n || self.labels.len() != n {
            return Err(ModuleError::Malformed("basis data lengths differ".into()));
        }
        if self.actions.len() != self.alg.quiver.arrows.len() {
            return Err(ModuleError::Malformed("one action matrix per arrow expected".into()));
        }
        for (ai, arrow) in self.alg.quiver.arrows.iter().enumerate() {
            let m = &self.actions[ai];
            if m.rows() != n || m.cols() != n {
                return Err(ModuleError::Malformed(format!("action of {} has wrong shape", arrow.name)));
            }
            for j in 0..n {
                for i in 0..n {
                    if m.get(i, j).is_zero() {
                        continue;
                    }
                    let ok = self.vertices[j] == arrow.target
                        && self.vertices[i] == arrow.source
                        && self.degrees[i] == self.degrees[j] + arrow.degree;
                    if !ok {
                        return Err(ModuleError::Axiom(format!(
                            "{}·{} lands outside its weight space",
                            self.labels[j], arrow.name
                        )));
                    }
                }
            }
        }
        for &[x, y] in &self.alg.relations {
            // the path xy acts as A_y · A_x
            if !(&self.actions[y] * &self.actions[x]).is_zero() {
                return Err(ModuleError::Axiom(format!(
                    "relation {}{} does not act as zero",
                    self.alg.quiver.arrows[x].name, self.alg.quiver.arrows[y].name
                )));
            }
        }
        Ok(())
    }

    /// Quotient by the submodule spanned by `relations`. Each vector must be
    /// supported on basis vectors of a single degree and vertex, and their span
    /// must be closed under the action.
    pub fn quotient(&self, relations: &[Vec<Rational>]) -> (Self, Matrix) {
        let n = self.dim();
        if relations.is_empty() {
            return (self.clone(), Matrix::identity(n));
        }
        let r = Matrix::from_rows(relations.to_vec());
        let (rref, pivots) = r.rref();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        // projection: kept vectors map to themselves, pivot e_p ≡ −Σ_free R[row][j] e_j
        let mut proj = Matrix::zeros(keep.len(), n);
        for &j in &keep {
            proj.set(pos[&j], j, Rational::one());
        }
        for (row, &p) in pivots.iter().enumerate() {
            for &j in &keep {
                let v = rref.get(row, j);
                if !v.is_zero() {
                    proj.set(pos[&j], p, -v.clone());
                }
            }
        }
        let incl = proj_inclusion(n, &keep);
        let actions = self
            .actions
            .iter()
            .map(|a| &(&proj * a) * &incl)
            .collect();
        let q = Self {
            alg: self.alg.clone(),
            degrees: keep.iter().map(|&j| self.degrees[j]).collect(),
            vertices: keep.iter().map(|&j| self.vertices[j]).collect(),
            labels: keep.iter().map(|&j| self.labels[j].clone()).collect(),
            actions,
        };
        (q, proj)
    }

    /// Submodule spanned by the given vectors, closed under the action.
    /// Returns the submodule and its inclusion matrix. The vectors must be
    /// homogeneous (single degree and vertex).
    pub fn submodule(&self, gens: &[Vec<Rational>]) -> (Self, Matrix) {
        let n = self.dim();
        let mut span: Vec<Vec<Rational>> = Vec::new();
        let mut frontier: Vec<Vec<Rational>> = gens.to_vec();
        while let Some(v) = frontier.pop() {
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            let mut trial = span.clone();
            trial.push(v.clone());
            if Matrix::from_rows(trial).rank() > span.len() {
                for a in &self.actions {
                    frontier.push(a.apply(&v));
                }
                span.push(v);
            }
        }
        // Choose a basis adapted to degree and vertex blocks.
        let mut basis: Vec<(i32, usize, Vec<Rational>)> = Vec::new();
        let mut blocks: BTreeMap<(i32, usize), Vec<Vec<Rational>>> = BTreeMap::new();
        for v in span {
            let j = v.iter().position(|x| !x.is_zero()).expect("nonzero");
            blocks
                .entry((self.degrees[j], self.vertices[j]))
                .or_default()
                .push(v);
        }
        for ((d, w), vs) in blocks {
            let (rref, piv) = Matrix::from_rows(vs).rref();
            for row in 0..piv.len() {
                basis.push((d, w, rref.row(row).to_vec()));
            }
        }
        let k = basis.len();
        let mut incl = Matrix::zeros(n, k);
        for (c, (_, _, v)) in basis.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    incl.set(i, c, x.clone());
                }
            }
        }
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let image = a * &incl;
                let mut m = Matrix::zeros(k, k);
                for c in 0..k {
                    let col = image.column(c);
                    let coords = incl.solve(&col).expect("span is closed under the action");
                    for (r, x) in coords.into_iter().enumerate() {
                        if !x.is_zero() {
                            m.set(r, c, x);
                        }
                    }
                }
                m
            })
            .collect();
        let sub = Self {
            alg: self.alg.clone(),
            degrees: basis.iter().map(|b| b.0).collect(),
            vertices: basis.iter().map(|b| b.1).collect(),
            labels: (0..k).map(|i| format!("s{i}")).collect(),
            actions,
        };
        (sub, incl)
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            algebra: self.alg.name.clone(),
            degrees: self.degrees.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|&v| self.alg.quiver.vertices[v].clone())
                .collect(),
            labels: self.labels.clone(),
            actions: self
                .alg
                .quiver
                .arrows
                .iter()
                .zip(&self.actions)
                .map(|(a, m)| (a.name.clone(), m.clone()))
                .collect(),
        }
    }

    pub fn from_json(alg: &Arc<GradedAlgebra>, j: &ModuleJson) -> Result<Self, ModuleError> {
        if j.algebra != alg.name {
            return Err(ModuleError::AlgebraMismatch(j.algebra.clone(), alg.name.clone()));
        }
        let vertices = j
            .vertices
            .iter()
            .map(|v| {
                alg.quiver
                    .vertex(v)
                    .map_err(|_| ModuleError::UnknownVertex(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let actions = alg
            .quiver
            .arrows
            .iter()
            .map(|a| {
                j.actions
                    .get(&a.name)
                    .cloned()
                    .ok_or_else(|| ModuleError::Malformed(format!("missing action of {}", a.name)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let m = Self {
            alg: alg.clone(),
            degrees: j.degrees.clone(),
            vertices,
            labels: j.labels.clone(),
            actions,
        };
        m.check()?;
        Ok(m)
    }
}

fn proj_inclusion(n: usize, keep: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(n, keep.len());
    for (k, &j) in keep.iter().enumerate() {
        m.set(j, k, Rational::one());
    }
    m
}

pub(crate) fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m.set(a.rows() + i, a.cols() + j, b.get(i, j).clone());
        }
    }
    m
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedModule over {} {{", self.alg.name)?;
        for i in 0..self.dim() {
            write!(
                f,
                " {}@({}, v{})",
                self.labels[i], self.degrees[i], self.alg.quiver.vertices[self.vertices[i]]
            )?;
        }
        write!(f, " }}")
    }
}

/// JSON form of a module: degrees, vertex names, labels and one action matrix
/// per arrow name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: String,
    pub degrees: Vec<i32>,
    pub vertices: Vec<String>,
    pub labels: Vec<String>,
    pub actions: BTreeMap<String, Matrix>,
}

/// Homogeneous module homomorphism of internal degree `degree`
/// (sending `M_d` to `N_{d+degree}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    pub source: GradedModule,
    pub target: GradedModule,
    pub degree: i32,
    pub matrix: Matrix,
}

impl ModuleHom {
    pub fn identity(m: &GradedModule) -> Self {
        Self {
            source: m.clone(),
            target: m.clone(),
            degree: 0,
            matrix: Matrix::identity(m.dim()),
        }
    }

    /// Checks homogeneity, vertex compatibility and commutation with every arrow.
    pub fn check(&self) -> Result<(), ModuleError> {
        let (m, n) = (&self.source, &self.target);
        for j in 0..m.dim() {
            for i in 0..n.dim() {
                if self.matrix.get(i, j).is_zero() {
                    continue;
                }
                if n.vertices[i] != m.vertices[j] || n.degrees[i] != m.degrees[j] + self.degree {
                    return Err(ModuleError::Axiom(format!(
                        "{} ↦ {} is not homogeneous",
                        m.labels[j], n.labels[i]
                    )));
                }
            }
        }
        for (a, (am, an)) in m.actions.iter().zip(&n.actions).enumerate() {
            if &self.matrix * am != an * &self.matrix {
                return Err(ModuleError::Axiom(format!(
                    "does not commute with {}",
                    m.alg.quiver.arrows[a].name
                )));
            }
        }
        Ok(())
    }

    pub fn compose(&self, first: &ModuleHom) -> ModuleHom {
        ModuleHom {
            source: first.source.clone(),
            target: self.target.clone(),
            degree: self.degree + first.degree,
            matrix: &self.matrix * &first.matrix,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// Basis of the space of homogeneous homomorphisms `M → N` of a fixed degree.
pub fn hom_space_degree(m: &GradedModule, n: &GradedModule, degree: i32) -> Vec<ModuleHom> {
    // unknowns: entries (i, j) with matching vertex and degree
    let mut vars = Vec::new();
    for j in 0..m.dim() {
        for i in 0..n.dim() {
            if n.vertices[i] == m.vertices[j] && n.degrees[i] == m.degrees[j] + degree {
                vars.push((i, j));
            }
        }
    }
    if vars.is_empty() {
        return Vec::new();
    }
    let mut sys: LinearSystem<(usize, usize, usize)> = LinearSystem::new(vars.len());
    for (a, (am, an)) in m.actions.iter().zip(&n.actions).enumerate() {
        // (F·A^M − A^N·F)[i][k] = Σ_j F[i][j] A^M[j][k] − Σ_l A^N[i][l] F[l][k]
        for (v, &(i, j)) in vars.iter().enumerate() {
            for k in 0..m.dim() {
                let x = am.get(j, k);
                if !x.is_zero() {
                    sys.add_lhs(&(a, i, k), v, x.clone());
                }
            }
            for r in 0..n.dim() {
                let x = an.get(r, i);
                if !x.is_zero() {
                    sys.add_lhs(&(a, r, j), v, -x.clone());
                }
            }
        }
    }
    sys.kernel()
        .into_iter()
        .map(|sol| {
            let mut f = Matrix::zeros(n.dim(), m.dim());
            for (v, &(i, j)) in vars.iter().enumerate() {
                f.set(i, j, sol[v].clone());
            }
            ModuleHom {
                source: m.clone(),
                target: n.clone(),
                degree,
                matrix: f,
            }
        })
        .collect()
}

/// All homogeneous homomorphisms `M → N`, as `(degree, basis)` pairs with
/// nonempty bases.
pub fn hom_space(m: &GradedModule, n: &GradedModule) -> Vec<(i32, Vec<ModuleHom>)> {
    if m.is_zero() || n.is_zero() {
        return Vec::new();
    }
    let lo = n.degrees.iter().min().unwrap() - m.degrees.iter().max().unwrap();
    let hi = n.degrees.iter().max().unwrap() - m.degrees.iter().min().unwrap();
    (lo..=hi)
        .map(|d| (d, hom_space_degree(m, n, d)))
        .filter(|(_, b)| !b.is_empty())
        .collect()
}

/// Graded dimension of `Hom(M, N)`.
pub fn hom_dimension(m: &GradedModule, n: &GradedModule) -> LaurentPoly {
    LaurentPoly::from_terms(
        hom_space(m, n)
            .into_iter()
            .map(|(d, b)| (d, int(b.len() as i64))),
    )
}

/// Random linear combination of homs (same source, target and degree).
pub(crate) fn random_combination(basis: &[Matrix], rng: &mut ChaCha8Rng) -> Matrix {
    let mut acc = basis[0].scale(&Rational::zero());
    for b in basis {
        let c: i64 = rng.gen_range(-40..=40);
        acc = &acc + &b.scale(&int(c));
    }
    acc
}

/// Searches for a degree-0 isomorphism `M → N` among random combinations of
/// the hom-space basis. Over an infinite field a generic combination is
/// invertible whenever any element is, so a few tries suffice.
pub fn find_isomorphism(m: &GradedModule, n: &GradedModule) -> Option<ModuleHom> {
    if m.alg.name != n.alg.name || m.dim() != n.dim() {
        return None;
    }
    let mut dm: Vec<_> = m.degrees.iter().zip(&m.vertices).collect();
    let mut dn: Vec<_> = n.degrees.iter().zip(&n.vertices).collect();
    dm.sort();
    dn.sort();
    if dm != dn {
        return None;
    }
    if m.dim() == 0 {
        return Some(ModuleHom::identity(m));
    }
    let basis = hom_space_degree(m, n, 0);
    if basis.is_empty() {
        return None;
    }
    let mats: Vec<Matrix> = basis.iter().map(|h| h.matrix.clone()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a77);
    for _ in 0..8 {
        let f = random_combination(&mats, &mut rng);
        if f.is_invertible() {
            return Some(ModuleHom {
                source: m.clone(),
                target: n.clone(),
                degree: 0,
                matrix: f,
            });
        }
    }
    None
}

pub fn is_isomorphic(m: &GradedModule, n: &GradedModule) -> bool {
    find_isomorphism(m, n).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;

    fn b() -> Arc<GradedAlgebra> {
        Arc::new(zigzag())
    }

    #[test]
    fn standard_modules() {
        let b = b();
        let p1 = GradedModule::projective(&b, 0);
        let p2 = GradedModule::projective(&b, 1);
        assert_eq!(p1.graded_dim().to_string(), "1 + q");
        assert_eq!(p2.graded_dim().to_string(), "1 + q + q^2");
        assert_eq!(p2.labels, vec!["e(2)", "a", "c"]);
        for m in [&p1, &p2, &GradedModule::simple(&b, 0), &GradedModule::injective2(&b)] {
            m.check().unwrap();
        }
    }

    #[test]
    fn shifts_compose() {
        let b = b();
        let l1 = GradedModule::simple(&b, 0);
        assert_eq!(l1.shift(2).degrees, vec![2]);
        let p = GradedModule::projective(&b, 1);
        assert_eq!(p.shift(3).shift(-3), p);
        assert_eq!(p.shift(0), p);
    }

    #[test]
    fn hom_spaces_between_projectives() {
        let b = b();
        let p1 = GradedModule::projective(&b, 0);
        let p2 = GradedModule::projective(&b, 1);
        assert_eq!(hom_dimension(&p2, &p2).to_string(), "1 + q^2");
        assert_eq!(hom_dimension(&p1, &p2).to_string(), "q");
        assert_eq!(hom_dimension(&p2, &p1).to_string(), "q");
        let l1 = GradedModule::simple(&b, 0);
        let l2 = GradedModule::simple(&b, 1);
        assert!(hom_dimension(&l1, &l2).is_zero());
        for (_, basis) in hom_space(&p1, &p2) {
            for h in basis {
                h.check().unwrap();
            }
        }
    }

    #[test]
    fn quotient_gives_simple_top() {
        let b = b();
        let p1 = GradedModule::projective(&b, 0);
        // radical of P(1) is spanned by b
        let (top, proj) = p1.quotient(&[vec![int(0), int(1)]]);
        top.check().unwrap();
        assert!(is_isomorphic(&top, &GradedModule::simple(&b, 0)));
        assert_eq!(proj.rows(), 1);
    }

    #[test]
    fn submodule_of_p2() {
        let b = b();
        let p2 = GradedModule::projective(&b, 1);
        // a generates the radical {a, c}
        let (rad, incl) = p2.submodule(&[vec![int(0), int(1), int(0)]]);
        rad.check().unwrap();
        assert_eq!(rad.graded_dim().to_string(), "q + q^2");
        assert_eq!(incl.cols(), 2);
    }

    #[test]
    fn json_round_trip() {
        let b = b();
        let p2 = GradedModule::projective(&b, 1).shift(-1);
        let j = serde_json::to_string(&p2.to_json()).unwrap();
        let back: ModuleJson = serde_json::from_str(&j).unwrap();
        assert_eq!(GradedModule::from_json(&b, &back).unwrap(), p2);
    }
}
