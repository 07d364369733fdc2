//! Graded bimodules, bimodule maps, and tensoring a right module with a
//! bimodule over the middle algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Element, GradedAlgebra};
use crate::linalg::Matrix;
use crate::module::{GradedModule, ModuleError};
use crate::ring::Rational;

/// `(A, A')`-bimodule. Basis vector `w` sits in degree `degrees[w]`, with
/// `e(left)·w·e(right) = w`. Column `j` of `left_actions[α]` is `α·w_j`, and of
/// `right_actions[β]` is `w_j·β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub left: Arc<GradedAlgebra>,
    pub right: Arc<GradedAlgebra>,
    pub degrees: Vec<i32>,
    pub left_vertices: Vec<usize>,
    pub right_vertices: Vec<usize>,
    pub labels: Vec<String>,
    pub left_actions: Vec<Matrix>,
    pub right_actions: Vec<Matrix>,
}

impl Bimodule {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn shift(&self, r: i32) -> Self {
        let mut w = self.clone();
        for d in &mut w.degrees {
            *d += r;
        }
        w
    }

    /// `A` as a bimodule over itself.
    pub fn regular(alg: &Arc<GradedAlgebra>) -> Self {
        let n = alg.dim();
        let action = |left: bool| -> Vec<Matrix> {
            (0..alg.quiver.arrows.len())
                .map(|arrow| {
                    let ai = alg.arrow_index(arrow);
                    let mut m = Matrix::zeros(n, n);
                    for p in 0..n {
                        let prod = if left { alg.mul_basis(ai, p) } else { alg.mul_basis(p, ai) };
                        if let Some(r) = prod {
                            m.set(r, p, Rational::one());
                        }
                    }
                    m
                })
                .collect()
        };
        Self {
            left: alg.clone(),
            right: alg.clone(),
            degrees: (0..n).map(|i| alg.degree(i)).collect(),
            left_vertices: (0..n).map(|i| alg.path(i).target).collect(),
            right_vertices: (0..n).map(|i| alg.path(i).source).collect(),
            labels: (0..n).map(|i| alg.basis_name(i)).collect(),
            left_actions: action(true),
            right_actions: action(false),
        }
    }

    /// `θ = Ae(v) ⊗ e(v)A ⟨−1⟩`, the tensor product over the ground field.
    /// Basis vectors are pairs `(p, q)` of paths with `source(p) = v = target(q)`.
    pub fn theta(alg: &Arc<GradedAlgebra>, v: usize) -> Self {
        let ps: Vec<usize> = (0..alg.dim()).filter(|&i| alg.path(i).source == v).collect();
        let qs: Vec<usize> = (0..alg.dim()).filter(|&i| alg.path(i).target == v).collect();
        let pairs: Vec<(usize, usize)> = ps
            .iter()
            .flat_map(|&p| qs.iter().map(move |&q| (p, q)))
            .collect();
        let pos: BTreeMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(k, &pq)| (pq, k)).collect();
        let n = pairs.len();
        let mut left_actions = Vec::new();
        let mut right_actions = Vec::new();
        for arrow in 0..alg.quiver.arrows.len() {
            let ai = alg.arrow_index(arrow);
            let mut l = Matrix::zeros(n, n);
            let mut r = Matrix::zeros(n, n);
            for (k, &(p, q)) in pairs.iter().enumerate() {
                if let Some(ap) = alg.mul_basis(ai, p) {
                    l.set(pos[&(ap, q)], k, Rational::one());
                }
                if let Some(qa) = alg.mul_basis(q, ai) {
                    r.set(pos[&(p, qa)], k, Rational::one());
                }
            }
            left_actions.push(l);
            right_actions.push(r);
        }
        Self {
            left: alg.clone(),
            right: alg.clone(),
            degrees: pairs
                .iter()
                .map(|&(p, q)| alg.degree(p) + alg.degree(q) - 1)
                .collect(),
            left_vertices: pairs.iter().map(|&(p, _)| alg.path(p).target).collect(),
            right_vertices: pairs.iter().map(|&(_, q)| alg.path(q).source).collect(),
            labels: pairs
                .iter()
                .map(|&(p, q)| format!("{}⊗{}", alg.basis_name(p), alg.basis_name(q)))
                .collect(),
            left_actions,
            right_actions,
        }
    }

    /// The projective `e(v)B` viewed as an `(End(P(v)), B)`-bimodule, where the
    /// one-vertex algebra `c_alg` acts on the left through `generator_images`
    /// (one element of `e(v)Be(v)` per arrow of `c_alg`).
    pub fn projective_over_endomorphisms(
        b: &Arc<GradedAlgebra>,
        v: usize,
        c_alg: &Arc<GradedAlgebra>,
        generator_images: &[Element],
    ) -> Self {
        let p = GradedModule::projective(b, v);
        let basis: Vec<usize> = (0..b.dim()).filter(|&i| b.path(i).target == v).collect();
        let pos: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let n = basis.len();
        let left_actions = generator_images
            .iter()
            .map(|x| {
                let mut m = Matrix::zeros(n, n);
                for (col, &q) in basis.iter().enumerate() {
                    for (&i, c) in &x.terms {
                        if let Some(r) = b.mul_basis(i, q) {
                            m.add_at(pos[&r], col, c);
                        }
                    }
                }
                m
            })
            .collect();
        assert_eq!(c_alg.num_vertices(), 1, "endomorphism algebra has one vertex");
        Self {
            left: c_alg.clone(),
            right: b.clone(),
            degrees: p.degrees.clone(),
            left_vertices: vec![0; n],
            right_vertices: p.vertices.clone(),
            labels: p.labels.clone(),
            left_actions,
            right_actions: p.actions.clone(),
        }
    }

    /// Matrix of `w ↦ x·w`.
    pub fn left_act(&self, x: &Element) -> Matrix {
        self.act_generic(x, &self.left, &self.left_actions, &self.left_vertices, true)
    }

    /// Matrix of `w ↦ w·x`.
    pub fn right_act(&self, x: &Element) -> Matrix {
        self.act_generic(x, &self.right, &self.right_actions, &self.right_vertices, false)
    }

    fn act_generic(
        &self,
        x: &Element,
        alg: &GradedAlgebra,
        actions: &[Matrix],
        vertices: &[usize],
        left: bool,
    ) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (&i, c) in &x.terms {
            let p = alg.path(i);
            let m = if p.arrows.is_empty() {
                let mut e = Matrix::zeros(n, n);
                for (k, &w) in vertices.iter().enumerate() {
                    if w == p.source {
                        e.set(k, k, Rational::one());
                    }
                }
                e
            } else {
                // left: (α₁⋯α_l)·w = α₁·(⋯(α_l·w)); right: w·(α₁⋯α_l) = ((w·α₁)⋯)·α_l
                let order: Vec<usize> = if left {
                    p.arrows.iter().rev().copied().collect()
                } else {
                    p.arrows.clone()
                };
                let mut acc = actions[order[0]].clone();
                for &a in &order[1..] {
                    acc = &actions[a] * &acc;
                }
                acc
            };
            out = &out + &m.scale(c);
        }
        out
    }

    /// Checks that both actions are homogeneous, respect vertex labels,
    /// kill the relations, and commute with each other.
    pub fn check(&self) -> Result<(), ModuleError> {
        let n = self.dim();
        for (side, alg, actions) in [
            ("left", &self.left, &self.left_actions),
            ("right", &self.right, &self.right_actions),
        ] {
            let (from, to) = if side == "left" {
                (&self.left_vertices, &self.left_vertices)
            } else {
                (&self.right_vertices, &self.right_vertices)
            };
            for (ai, arrow) in alg.quiver.arrows.iter().enumerate() {
                let m = &actions[ai];
                for j in 0..n {
                    for i in 0..n {
                        if m.get(i, j).is_zero() {
                            continue;
                        }
                        // left: α·w needs left vertex of w = source(α), lands at target(α);
                        // right: w·α needs right vertex of w = target(α), lands at source(α).
                        let (need, land) = if side == "left" {
                            (arrow.source, arrow.target)
                        } else {
                            (arrow.target, arrow.source)
                        };
                        if from[j] != need || to[i] != land || self.degrees[i] != self.degrees[j] + arrow.degree {
                            return Err(ModuleError::Axiom(format!(
                                "{side} action of {} on {} is not homogeneous",
                                arrow.name, self.labels[j]
                            )));
                        }
                    }
                }
            }
            for &[x, y] in &alg.relations {
                let prod = if side == "left" {
                    &actions[x] * &actions[y]
                } else {
                    &actions[y] * &actions[x]
                };
                if !prod.is_zero() {
                    return Err(ModuleError::Axiom(format!("{side} relation does not act as zero")));
                }
            }
        }
        for l in &self.left_actions {
            for r in &self.right_actions {
                if l * r != r * l {
                    return Err(ModuleError::Axiom("left and right actions do not commute".into()));
                }
            }
        }
        Ok(())
    }
}

/// Homogeneous bimodule homomorphism of internal degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleHom {
    pub degree: i32,
    pub matrix: Matrix,
}

impl BimoduleHom {
    /// Extends `g ↦ ψ(g)` on bimodule generators to all of `src` by
    /// `l·g·r ↦ l·ψ(g)·r` for basis paths `l`, `r`. Fails if the resulting
    /// assignment is not well defined or the generators do not span.
    pub fn from_generators(
        src: &Bimodule,
        dst: &Bimodule,
        degree: i32,
        images: &[(Vec<Rational>, Vec<Rational>)],
    ) -> Result<Self, ModuleError> {
        let mut src_cols = Vec::new();
        let mut dst_cols = Vec::new();
        for l in 0..src.left.dim() {
            let ls = src.left_act(&Element::basis(l));
            let ld = dst.left_act(&Element::basis(l));
            for r in 0..src.right.dim() {
                let rs = src.right_act(&Element::basis(r));
                let rd = dst.right_act(&Element::basis(r));
                for (g, h) in images {
                    src_cols.push(rs.apply(&ls.apply(g)));
                    dst_cols.push(rd.apply(&ld.apply(h)));
                }
            }
        }
        // Solve F · S = D row by row: Sᵀ Fᵀ = Dᵀ.
        let s = Matrix::from_rows(src_cols).transpose();
        let d = Matrix::from_rows(dst_cols).transpose();
        if s.rank() < src.dim() {
            return Err(ModuleError::Axiom("generators do not span the source".into()));
        }
        let st = s.transpose();
        let mut f = Matrix::zeros(dst.dim(), src.dim());
        for i in 0..dst.dim() {
            let row = st
                .solve(d.row(i))
                .ok_or_else(|| ModuleError::Axiom("assignment is not well defined".into()))?;
            for (j, x) in row.into_iter().enumerate() {
                if !x.is_zero() {
                    f.set(i, j, x);
                }
            }
        }
        let h = Self { degree, matrix: f };
        h.check(src, dst)?;
        Ok(h)
    }

    pub fn check(&self, src: &Bimodule, dst: &Bimodule) -> Result<(), ModuleError> {
        for j in 0..src.dim() {
            for i in 0..dst.dim() {
                if self.matrix.get(i, j).is_zero() {
                    continue;
                }
                if dst.degrees[i] != src.degrees[j] + self.degree
                    || dst.left_vertices[i] != src.left_vertices[j]
                    || dst.right_vertices[i] != src.right_vertices[j]
                {
                    return Err(ModuleError::Axiom(format!(
                        "{} ↦ {} is not homogeneous",
                        src.labels[j], dst.labels[i]
                    )));
                }
            }
        }
        for (a, b) in src.left_actions.iter().zip(&dst.left_actions) {
            if &self.matrix * a != b * &self.matrix {
                return Err(ModuleError::Axiom("does not commute with the left action".into()));
            }
        }
        for (a, b) in src.right_actions.iter().zip(&dst.right_actions) {
            if &self.matrix * a != b * &self.matrix {
                return Err(ModuleError::Axiom("does not commute with the right action".into()));
            }
        }
        Ok(())
    }

    pub fn compose(&self, first: &BimoduleHom) -> BimoduleHom {
        BimoduleHom {
            degree: self.degree + first.degree,
            matrix: &self.matrix * &first.matrix,
        }
    }
}

/// `M ⊗_A W` for a right `A`-module `M` and an `(A, A')`-bimodule `W`,
/// computed as the quotient of `⊕_v Me(v) ⊗ e(v)W` by the balancing
/// relations `mα ⊗ w − m ⊗ αw`.
pub fn tensor_with_bimodule(m: &GradedModule, w: &Bimodule) -> Result<GradedModule, ModuleError> {
    if m.alg.name != w.left.name {
        return Err(ModuleError::AlgebraMismatch(m.alg.name.clone(), w.left.name.clone()));
    }
    let pairs: Vec<(usize, usize)> = (0..m.dim())
        .flat_map(|i| (0..w.dim()).map(move |j| (i, j)))
        .filter(|&(i, j)| m.vertices[i] == w.left_vertices[j])
        .collect();
    let pos: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let n = pairs.len();
    let right_actions: Vec<Matrix> = w
        .right_actions
        .iter()
        .map(|r| {
            let mut a = Matrix::zeros(n, n);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                for l in 0..w.dim() {
                    let x = r.get(l, j);
                    if !x.is_zero() {
                        a.set(pos[&(i, l)], k, x.clone());
                    }
                }
            }
            a
        })
        .collect();
    let full = GradedModule {
        alg: w.right.clone(),
        degrees: pairs.iter().map(|&(i, j)| m.degrees[i] + w.degrees[j]).collect(),
        vertices: pairs.iter().map(|&(_, j)| w.right_vertices[j]).collect(),
        labels: pairs
            .iter()
            .map(|&(i, j)| format!("{}⊗{}", m.labels[i], w.labels[j]))
            .collect(),
        actions: right_actions,
    };
    let mut relations = Vec::new();
    for (ai, arrow) in m.alg.quiver.arrows.iter().enumerate() {
        let am = &m.actions[ai];
        let aw = &w.left_actions[ai];
        for i in (0..m.dim()).filter(|&i| m.vertices[i] == arrow.target) {
            for j in (0..w.dim()).filter(|&j| w.left_vertices[j] == arrow.source) {
                let mut v = vec![Rational::zero(); n];
                for k in 0..m.dim() {
                    let x = am.get(k, i);
                    if !x.is_zero() {
                        v[pos[&(k, j)]] += x;
                    }
                }
                for l in 0..w.dim() {
                    let x = aw.get(l, j);
                    if !x.is_zero() {
                        v[pos[&(i, l)]] -= x;
                    }
                }
                if v.iter().any(|x| !x.is_zero()) {
                    relations.push(v);
                }
            }
        }
    }
    Ok(full.quotient(&relations).0)
}

/// The three structure maps of the Cooper–Krushkal complex over the zig-zag
/// algebra: `α: B → θ⟨−1⟩`, and `β, γ: θ → θ⟨−2⟩`.
pub struct CkMaps {
    pub regular: Bimodule,
    pub theta: Bimodule,
    pub alpha: BimoduleHom,
    pub beta: BimoduleHom,
    pub gamma: BimoduleHom,
}

fn theta_vector(theta: &Bimodule, alg: &GradedAlgebra, terms: &[(i64, &str, &str)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); theta.dim()];
    for &(c, p, q) in terms {
        let label = format!(
            "{}⊗{}",
            alg.basis_name(alg.parse_path(p).unwrap()),
            alg.basis_name(alg.parse_path(q).unwrap())
        );
        let k = theta.labels.iter().position(|l| l == &label).expect("theta basis label");
        v[k] += crate::ring::int(c);
    }
    v
}

pub fn ck_maps(b: &Arc<GradedAlgebra>) -> Result<CkMaps, ModuleError> {
    let v2 = b.quiver.vertex("2").map_err(|_| ModuleError::UnknownVertex("2".into()))?;
    let v1 = b.quiver.vertex("1").map_err(|_| ModuleError::UnknownVertex("1".into()))?;
    let regular = Bimodule::regular(b);
    let theta = Bimodule::theta(b, v2);
    let unit = |v: usize| {
        let mut x = vec![Rational::zero(); regular.dim()];
        x[b.idempotent_index(v)] = Rational::one();
        x
    };
    // degrees: α has internal degree +1 from B into θ (θ⟨−1⟩ shifts it back to 0)
    let alpha = BimoduleHom::from_generators(
        &regular,
        &theta,
        1,
        &[
            (unit(v1), theta_vector(&theta, b, &[(1, "b", "a")])),
            (
                unit(v2),
                theta_vector(&theta, b, &[(1, "c", "e(2)"), (1, "e(2)", "c")]),
            ),
        ],
    )?;
    let gen = theta_vector(&theta, b, &[(1, "e(2)", "e(2)")]);
    let beta = BimoduleHom::from_generators(
        &theta,
        &theta,
        2,
        &[(gen.clone(), theta_vector(&theta, b, &[(1, "c", "e(2)"), (-1, "e(2)", "c")]))],
    )?;
    let gamma = BimoduleHom::from_generators(
        &theta,
        &theta,
        2,
        &[(gen, theta_vector(&theta, b, &[(1, "c", "e(2)"), (1, "e(2)", "c")]))],
    )?;
    Ok(CkMaps {
        regular,
        theta,
        alpha,
        beta,
        gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers, zigzag};
    use crate::module::is_isomorphic;

    #[test]
    fn theta_shape() {
        let b = Arc::new(zigzag());
        let t = Bimodule::theta(&b, 1);
        assert_eq!(t.dim(), 9);
        t.check().unwrap();
        let lowest = t.degrees.iter().min().unwrap();
        assert_eq!(*lowest, -1);
        let at_lowest: Vec<_> = (0..9).filter(|&k| t.degrees[k] == -1).map(|k| t.labels[k].clone()).collect();
        assert_eq!(at_lowest, vec!["e(2)⊗e(2)"]);
        let bb = b.parse_element("b").unwrap();
        let gen = theta_vector(&t, &b, &[(1, "e(2)", "e(2)")]);
        assert_eq!(t.left_act(&bb).apply(&gen), theta_vector(&t, &b, &[(1, "b", "e(2)")]));
    }

    #[test]
    fn regular_bimodule_is_valid() {
        let b = Arc::new(zigzag());
        Bimodule::regular(&b).check().unwrap();
    }

    #[test]
    fn structure_maps_compose_to_zero() {
        let b = Arc::new(zigzag());
        let ck = ck_maps(&b).unwrap();
        assert!(ck.beta.compose(&ck.alpha).matrix.is_zero());
        assert!(ck.gamma.compose(&ck.beta).matrix.is_zero());
        assert!(ck.beta.compose(&ck.gamma).matrix.is_zero());
        assert!(!ck.gamma.compose(&ck.alpha).matrix.is_zero());
    }

    #[test]
    fn theta_on_projectives() {
        let b = Arc::new(zigzag());
        let t = Bimodule::theta(&b, 1);
        let p1 = GradedModule::projective(&b, 0);
        let p2 = GradedModule::projective(&b, 1);
        let tp1 = tensor_with_bimodule(&p1, &t).unwrap();
        tp1.check().unwrap();
        assert!(is_isomorphic(&tp1, &p2));
        let tp2 = tensor_with_bimodule(&p2, &t).unwrap();
        assert!(is_isomorphic(&tp2, &p2.shift(-1).direct_sum(&p2.shift(1))));
        let z = tensor_with_bimodule(&GradedModule::zero(&b), &t).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn tensor_with_regular_is_identity() {
        let b = Arc::new(zigzag());
        let reg = Bimodule::regular(&b);
        for m in [GradedModule::projective(&b, 0), GradedModule::simple(&b, 1)] {
            assert!(is_isomorphic(&tensor_with_bimodule(&m, &reg).unwrap(), &m));
        }
    }

    #[test]
    fn projective_as_bimodule_over_endomorphisms() {
        let b = Arc::new(zigzag());
        let c = Arc::new(dual_numbers());
        let w = Bimodule::projective_over_endomorphisms(&b, 1, &c, &[b.parse_element("c").unwrap()]);
        w.check().unwrap();
    }
}
