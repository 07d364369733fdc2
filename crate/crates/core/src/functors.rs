//! The functors on complexes over the zig-zag algebra `B`:
//!
//! * `π̃ = Hom(P(2), −)⟨−1⟩` to modules over `C = End(P(2))`, and its partner
//!   `ι̃ = − ⊗_C P(2)⟨1⟩` (exact on free modules);
//! * `ℙ = Lι̃ ∘ π̃`, computed with free resolutions over `C`;
//! * Koszul duality `𝔻`, taking a basis vector `m ∈ M^r_s` at vertex `v` to a
//!   summand `P(σv)⟨−s⟩` in homological degree `r + s` (`σ` swaps the two
//!   vertices);
//! * the Cooper–Krushkal functor `ℂ𝕂`, tensoring with
//!   `B → θ⟨−1⟩ → θ⟨−3⟩ → ⋯` (maps `α, β, γ, β, γ, …`) and totalising.
//!
//! Vertex `2` of `B` has index 1 throughout.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::algebra::{dual_numbers, Element, GradedAlgebra};
use crate::bicomplex::{total_map, Bicomplex};
use crate::complex::{ModChainMap, ModComplex};
use crate::linalg::Matrix;
use crate::module::GradedModule;
use crate::proj::{realize_map, ComplexError, EMatrix, ProjComplex, ProjMap, Regime, Summand};
use crate::resolution::{lift_map, resolve, Resolution};
use crate::ring::{sign, Rational};

const V2: usize = 1;

/// The shared copy of `C`.
pub fn c_algebra() -> Arc<GradedAlgebra> {
    static C: OnceLock<Arc<GradedAlgebra>> = OnceLock::new();
    C.get_or_init(|| Arc::new(dual_numbers())).clone()
}

fn element(alg: &GradedAlgebra, s: &str) -> Element {
    alg.parse_element(s).expect("standard element")
}

// ---------------------------------------------------------------- π̃ and ι̃

/// Basis indices of `M` at vertex 2; these span `Hom(P(2), M) = M e(2)`.
fn vertex2_indices(m: &GradedModule) -> Vec<usize> {
    (0..m.dim()).filter(|&k| m.vertices[k] == V2).collect()
}

/// `π̃(M) = Hom(P(2), M)⟨−1⟩`. A hom is determined by the image of `e(2)`,
/// and `x` acts by precomposition with `c`, i.e. by the right action of `c`.
pub fn apply_pi(m: &GradedModule) -> GradedModule {
    let c_alg = c_algebra();
    let idx = vertex2_indices(m);
    let c = m.act(&element(&m.alg, "c"));
    GradedModule {
        alg: c_alg,
        degrees: idx.iter().map(|&k| m.degrees[k] - 1).collect(),
        vertices: vec![0; idx.len()],
        labels: idx.iter().map(|&k| m.labels[k].clone()).collect(),
        actions: vec![c.select(&idx, &idx)],
    }
}

/// `π̃` applied termwise to a module complex.
pub fn apply_pi_complex(x: &ModComplex) -> ModComplex {
    let mut out = ModComplex::zero(&c_algebra());
    out.regime = x.regime;
    out.trusted = x.trusted;
    for (&i, m) in &x.terms {
        let t = apply_pi(m);
        if !t.is_zero() {
            out.terms.insert(i, t);
        }
    }
    for (&i, d) in &x.diffs {
        let rows = vertex2_indices(&x.term(i + 1));
        let cols = vertex2_indices(&x.term(i));
        let r = d.select(&rows, &cols);
        if !r.is_zero() {
            out.diffs.insert(i, r);
        }
    }
    out
}

/// `π̃` on a module chain map.
pub fn apply_pi_map(f: &BTreeMap<i32, Matrix>, x: &ModComplex, y: &ModComplex) -> BTreeMap<i32, Matrix> {
    f.iter()
        .map(|(&i, m)| {
            let rows = vertex2_indices(&y.term(i));
            let cols = vertex2_indices(&x.term(i));
            (i, m.select(&rows, &cols))
        })
        .collect()
}

/// `λ·1 + μ·x ↦ λ·e(2) + μ·c`.
pub fn iota_element(b: &GradedAlgebra, x: &Element) -> Element {
    let c_alg = c_algebra();
    let mut out = Element::zero();
    for (&i, coeff) in &x.terms {
        let target = if c_alg.degree(i) == 0 {
            b.idempotent_index(V2)
        } else {
            b.parse_path("c").expect("c")
        };
        out.add_term(target, coeff.clone());
    }
    out
}

fn iota_matrix(b: &GradedAlgebra, m: &EMatrix) -> EMatrix {
    EMatrix {
        rows: m.rows,
        cols: m.cols,
        entries: m.entries.iter().map(|x| iota_element(b, x)).collect(),
    }
}

/// `ι̃` on a complex of free `C`-modules: `C⟨k⟩ ↦ P(2)⟨k+1⟩`.
pub fn apply_iota_free(b: &Arc<GradedAlgebra>, c: &ProjComplex) -> ProjComplex {
    let mut out = ProjComplex::zero(b);
    out.regime = c.regime;
    out.trusted = c.trusted;
    for (&i, t) in &c.terms {
        out.set_term(i, t.iter().map(|s| Summand::new(V2, s.shift + 1)).collect());
    }
    for (&i, d) in &c.diffs {
        out.set_diff(i, iota_matrix(b, d));
    }
    out
}

pub fn apply_iota_free_map(b: &GradedAlgebra, f: &ProjMap) -> ProjMap {
    let mut out = ProjMap::zero(f.degree);
    for (&i, m) in &f.maps {
        out.set(i, iota_matrix(b, m));
    }
    out
}

/// `ι̃(M)` for an arbitrary `C`-module, as the cokernel of `ι̃` applied to a
/// free presentation of `M`.
pub fn apply_iota(b: &Arc<GradedAlgebra>, m: &GradedModule) -> GradedModule {
    let res = resolve(&ModComplex::single(m, 0), -1).expect("bounded input");
    let pres = apply_iota_free(b, &res.complex);
    let f0 = crate::proj::realize_term(b, pres.term(0));
    let d = realize_map(b, pres.term(-1), pres.term(0), &pres.diff(-1));
    let rel: Vec<Vec<Rational>> = (0..d.cols())
        .map(|j| d.column(j))
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    f0.quotient(&rel).0
}

// ---------------------------------------------------------------- ℙ

/// `ℙ(X)` before reduction, with the resolution used to build it.
#[derive(Clone, Debug)]
pub struct PImage {
    pub source: ProjComplex,
    pub resolution: Resolution,
    pub complex: ProjComplex,
}

/// `ℙ(X) = ι̃(free resolution of π̃X)`. `depth` is the number of homological
/// degrees computed below the lowest degree of `X`.
pub fn p_on_object(x: &ProjComplex, depth: usize) -> Result<PImage, ComplexError> {
    if x.regime == Regime::Right {
        return Err(ComplexError::Regime);
    }
    let b = x.alg.clone();
    let pi = apply_pi_complex(&x.realize());
    let lo = x.span().map_or(0, |s| s.0);
    let res = resolve(&pi, lo - depth as i32 + 1)?;
    let complex = apply_iota_free(&b, &res.complex);
    Ok(PImage {
        source: x.clone(),
        resolution: res,
        complex,
    })
}

/// `ℙ(f)` for a chain map `f: X → Y`, lifted through the resolutions.
pub fn p_on_map(f: &ProjMap, px: &PImage, py: &PImage) -> Result<ProjMap, ComplexError> {
    let (x, y) = (&px.source, &py.source);
    let fr = f.realize(x, y);
    let pif = apply_pi_map(&fr, &x.realize(), &y.realize());
    let lifted = lift_map(&px.resolution, &py.resolution, &pif)?;
    Ok(apply_iota_free_map(&x.alg, &lifted))
}

// ---------------------------------------------------------------- 𝔻

/// Position of each summand of `𝔻X`: homological degree `p` and index, keyed
/// by the input basis vector `(r, k)`.
fn koszul_layout(x: &ModComplex) -> BTreeMap<(i32, usize), (i32, usize)> {
    let mut by_p: BTreeMap<i32, Vec<(i32, usize)>> = BTreeMap::new();
    // r descending within each p
    for (&r, m) in x.terms.iter().rev() {
        for k in 0..m.dim() {
            by_p.entry(r + m.degrees[k]).or_default().push((r, k));
        }
    }
    let mut out = BTreeMap::new();
    for (p, list) in by_p {
        for (idx, key) in list.into_iter().enumerate() {
            out.insert(key, (p, idx));
        }
    }
    out
}

fn swap(v: usize) -> usize {
    1 - v
}

/// Highest homological degree of `𝔻X` that is unaffected by truncation of a
/// `D^<` input: the lowest stored term contributes nothing below
/// `r + min s`, and lower terms start later still.
fn koszul_trust(x: &ModComplex) -> i32 {
    if x.regime != Regime::Left {
        return i32::MAX / 4;
    }
    let lo = x.trusted.0;
    let m = x.term(lo);
    m.degrees.iter().map(|s| lo + s).min().unwrap_or(i32::MAX / 4)
}

/// Koszul dual of a complex of modules (in `D^<` or bounded).
pub fn koszul_d(x: &ModComplex) -> Result<ProjComplex, ComplexError> {
    if x.regime == Regime::Right {
        return Err(ComplexError::Regime);
    }
    let alg = x.alg.clone();
    let layout = koszul_layout(x);
    let mut out = ProjComplex::zero(&alg);
    let mut terms: BTreeMap<i32, Vec<Summand>> = BTreeMap::new();
    for &(p, idx) in layout.values() {
        let t = terms.entry(p).or_default();
        t.resize(t.len().max(idx + 1), Summand::new(0, 0));
    }
    for (&(r, k), &(p, idx)) in &layout {
        let m = &x.terms[&r];
        terms.get_mut(&p).expect("sized above")[idx] = Summand::new(swap(m.vertices[k]), -m.degrees[k]);
    }
    for (p, t) in terms {
        out.set_term(p, t);
    }
    let mut diffs: BTreeMap<i32, EMatrix> = BTreeMap::new();
    for (&(r, k), &(p, col)) in &layout {
        let m = &x.terms[&r];
        let s = m.degrees[k];
        let rows = out.term(p + 1).len();
        let cols = out.term(p).len();
        // internal differential: scalar entries
        let d = x.diff(r);
        for k2 in 0..d.rows() {
            let lam = d.get(k2, k);
            if lam.is_zero() {
                continue;
            }
            let (_, row) = layout[&(r + 1, k2)];
            let e = alg.e(swap(m.vertices[k])).scale(lam);
            diffs
                .entry(p)
                .or_insert_with(|| EMatrix::zeros(rows, cols))
                .add_at(row, col, &e);
        }
        // arrows: m·α contributes (−1)^{r+s} α
        for (arrow, act) in m.actions.iter().enumerate() {
            let img = act.column(k);
            let entry = alg.basis_element(alg.arrow_index(arrow));
            for (k2, lam) in img.iter().enumerate() {
                if lam.is_zero() {
                    continue;
                }
                let (_, row) = layout[&(r, k2)];
                let e = entry.scale(&(lam * sign((r + s) as i64)));
                diffs
                    .entry(p)
                    .or_insert_with(|| EMatrix::zeros(rows, cols))
                    .add_at(row, col, &e);
            }
        }
    }
    for (p, d) in diffs {
        out.set_diff(p, d);
    }
    if x.regime == Regime::Left {
        out.regime = Regime::Right;
        out.trusted = (out.trusted.0, koszul_trust(x));
    }
    Ok(out)
}

/// `𝔻f`: `m ⊗ g ↦ f(m) ⊗ g`, i.e. the scalar matrix of `f` placed between
/// the matching summands.
pub fn koszul_d_map(f: &ModChainMap, x: &ModComplex, y: &ModComplex) -> ProjMap {
    let alg = &x.alg;
    let (lx, ly) = (koszul_layout(x), koszul_layout(y));
    let mut sizes: BTreeMap<i32, (usize, usize)> = BTreeMap::new();
    for &(p, _) in ly.values() {
        sizes.entry(p).or_default().0 += 1;
    }
    for &(p, _) in lx.values() {
        sizes.entry(p).or_default().1 += 1;
    }
    let mut comps: BTreeMap<i32, EMatrix> = BTreeMap::new();
    for (&(r, k), &(p, col)) in &lx {
        let fr = f.component(x, y, r);
        let v = x.terms[&r].vertices[k];
        for k2 in 0..fr.rows() {
            let lam = fr.get(k2, k);
            if lam.is_zero() {
                continue;
            }
            let (_, row) = ly[&(r, k2)];
            let (nr, nc) = sizes[&p];
            comps
                .entry(p)
                .or_insert_with(|| EMatrix::zeros(nr, nc))
                .add_at(row, col, &alg.e(swap(v)).scale(lam));
        }
    }
    let mut out = ProjMap::zero(0);
    for (p, m) in comps {
        out.set(p, m);
    }
    out
}

/// `𝔻` on a complex of projectives, via its realisation.
pub fn koszul_d_proj(x: &ProjComplex) -> Result<ProjComplex, ComplexError> {
    koszul_d(&x.realize())
}

pub fn koszul_d_proj_map(f: &ProjMap, x: &ProjComplex, y: &ProjComplex) -> ProjMap {
    let m = ModChainMap { maps: f.realize(x, y) };
    koszul_d_map(&m, &x.realize(), &y.realize())
}

// ---------------------------------------------------------------- θ and ℂ𝕂

/// Internal shift of `ℂ𝕂^v = θ⟨−(2v−1)⟩` for `v ≥ 1`.
fn ck_shift(v: i32) -> i32 {
    -(2 * v - 1)
}

/// `P(u)⟨j⟩ ⊗ θ⟨s⟩ = ⊕_{p ∈ e(u)Be(2)} P(2)⟨j + s − 1 + deg p⟩`, one summand
/// per basis path `p`.
pub fn theta_summands(alg: &GradedAlgebra, s: Summand, shift: i32) -> Vec<(usize, Summand)> {
    alg.paths_between(s.vertex, V2)
        .into_iter()
        .map(|p| (p, Summand::new(V2, s.shift + shift - 1 + alg.degree(p))))
        .collect()
}

/// `θ` applied to a map between sums of projectives: `p ⊗ q ↦ x p ⊗ q`.
pub fn theta_on_matrix(alg: &GradedAlgebra, src: &[Summand], dst: &[Summand], m: &EMatrix) -> EMatrix {
    let sp: Vec<Vec<usize>> = src.iter().map(|s| alg.paths_between(s.vertex, V2)).collect();
    let dp: Vec<Vec<usize>> = dst.iter().map(|s| alg.paths_between(s.vertex, V2)).collect();
    let col_off: Vec<usize> = offsets(&sp);
    let row_off: Vec<usize> = offsets(&dp);
    let mut out = EMatrix::zeros(dp.iter().map(Vec::len).sum(), sp.iter().map(Vec::len).sum());
    for (j, ps) in sp.iter().enumerate() {
        for (i, qs) in dp.iter().enumerate() {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            for (a, &p) in ps.iter().enumerate() {
                let xp = alg.mul(x, &Element::basis(p));
                for (b, &q) in qs.iter().enumerate() {
                    let lam = xp.coeff(q);
                    if !lam.is_zero() {
                        out.add_at(row_off[i] + b, col_off[j] + a, &alg.e(V2).scale(&lam));
                    }
                }
            }
        }
    }
    out
}

fn offsets(groups: &[Vec<usize>]) -> Vec<usize> {
    let mut acc = 0;
    groups
        .iter()
        .map(|g| {
            let o = acc;
            acc += g.len();
            o
        })
        .collect()
}

/// A bimodule map out of `B` or `θ`, given by the image of its generator as
/// a sum of `p ⊗ q` terms.
#[derive(Clone, Debug)]
pub struct CkGenerator {
    pub name: &'static str,
    pub terms: Vec<(Element, Element)>,
}

/// `α(1) = b⊗a + c⊗e(2) + e(2)⊗c`, `β(e(2)⊗e(2)) = c⊗e(2) − e(2)⊗c` and
/// `γ(e(2)⊗e(2)) = c⊗e(2) + e(2)⊗c`.
pub fn ck_generators(alg: &GradedAlgebra) -> [CkGenerator; 3] {
    let e = |s: &str| element(alg, s);
    [
        CkGenerator {
            name: "alpha",
            terms: vec![(e("b"), e("a")), (e("c"), e("e(2)")), (e("e(2)"), e("c"))],
        },
        CkGenerator {
            name: "beta",
            terms: vec![(e("c"), e("e(2)")), (e("e(2)"), e("-c"))],
        },
        CkGenerator {
            name: "gamma",
            terms: vec![(e("c"), e("e(2)")), (e("e(2)"), e("c"))],
        },
    ]
}

/// The differential `ℂ𝕂^v → ℂ𝕂^{v+1}`.
pub fn ck_differential(alg: &GradedAlgebra, v: i32) -> CkGenerator {
    let [alpha, beta, gamma] = ck_generators(alg);
    match v {
        0 => alpha,
        v if v % 2 == 1 => beta,
        _ => gamma,
    }
}

/// `P(u)⟨j⟩ ⊗ ℂ𝕂^v` as a list of summands, paired with the path indexing
/// each (the idempotent for `v = 0`).
fn ck_column(alg: &GradedAlgebra, s: Summand, v: i32) -> Vec<(usize, Summand)> {
    if v == 0 {
        vec![(alg.idempotent_index(s.vertex), s)]
    } else {
        theta_summands(alg, s, ck_shift(v))
    }
}

/// The vertical map `P(u)⟨j⟩ ⊗ ℂ𝕂^v → P(u)⟨j⟩ ⊗ ℂ𝕂^{v+1}`: a generator
/// `t ⊗ e` goes to `Σ (t p_i) ⊗ q_i`.
fn ck_vertical(alg: &GradedAlgebra, s: Summand, v: i32) -> EMatrix {
    let src = ck_column(alg, s, v);
    let dst = ck_column(alg, s, v + 1);
    let g = ck_differential(alg, v);
    let mut m = EMatrix::zeros(dst.len(), src.len());
    for (j, (t, _)) in src.iter().enumerate() {
        for (p, q) in &g.terms {
            let tp = alg.mul(&Element::basis(*t), p);
            for (i, (d, _)) in dst.iter().enumerate() {
                let lam = tp.coeff(*d);
                if !lam.is_zero() {
                    m.add_at(i, j, &q.scale(&lam));
                }
            }
        }
    }
    m
}

fn block_diagonal(blocks: &[EMatrix]) -> EMatrix {
    let rows = blocks.iter().map(|b| b.rows).sum();
    let cols = blocks.iter().map(|b| b.cols).sum();
    let mut out = EMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
        r0 += b.rows;
        c0 += b.cols;
    }
    out
}

/// `X ⊗_B ℂ𝕂` as a double complex, with `ℂ𝕂` cut off after `depth` copies
/// of `θ`.
pub fn ck_bicomplex(x: &ProjComplex, depth: usize) -> Bicomplex {
    let alg = x.alg.clone();
    let mut bc = Bicomplex::new(&alg);
    let depth = depth as i32;
    for (&h, t) in &x.terms {
        for v in 0..=depth {
            let col: Vec<Summand> = t.iter().flat_map(|&s| ck_column(&alg, s, v)).map(|p| p.1).collect();
            bc.terms.insert((h, v), col);
        }
    }
    for (&h, t) in &x.terms {
        for v in 0..=depth {
            let d = x.diff(h);
            let dh = if v == 0 {
                d
            } else {
                theta_on_matrix(&alg, t, x.term(h + 1), &d)
            };
            if !dh.is_zero() {
                bc.dh.insert((h, v), dh);
            }
            if v < depth {
                let blocks: Vec<EMatrix> = t.iter().map(|&s| ck_vertical(&alg, s, v)).collect();
                bc.dv.insert((h, v), block_diagonal(&blocks));
            }
        }
    }
    bc
}

/// `ℂ𝕂(X)` before reduction. Inputs must be bounded or in `D^>`.
pub fn ck_on_object(x: &ProjComplex, depth: usize) -> Result<(Bicomplex, ProjComplex), ComplexError> {
    if x.regime == Regime::Left {
        return Err(ComplexError::Regime);
    }
    let bc = ck_bicomplex(x, depth);
    let mut t = bc.total();
    t.regime = Regime::Right;
    let lo = x.span().map_or(0, |s| s.0);
    let hi = (lo + depth as i32).min(x.trusted.1);
    t.trusted = (i32::MIN / 4, hi);
    Ok((bc, t))
}

/// `ℂ𝕂(f)`: `f ⊗ id` on every position, totalised.
pub fn ck_on_map(
    f: &ProjMap,
    x: &ProjComplex,
    y: &ProjComplex,
    cx: &(Bicomplex, ProjComplex),
    cy: &(Bicomplex, ProjComplex),
) -> ProjMap {
    let alg = &x.alg;
    let mut maps = BTreeMap::new();
    for &(h, v) in cx.0.terms.keys() {
        let m = f.component(x, y, h);
        let img = if v == 0 {
            m
        } else {
            theta_on_matrix(alg, x.term(h), y.term(h), &m)
        };
        maps.insert((h, v), img);
    }
    total_map(&cx.0, &cy.0, &maps, &cx.1, &cy.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;
    use crate::module::is_isomorphic;
    use crate::reduce::gaussian_reduce;

    fn b() -> Arc<GradedAlgebra> {
        Arc::new(zigzag())
    }

    fn single(b: &Arc<GradedAlgebra>, v: usize, s: i32) -> ProjComplex {
        ProjComplex::single(b, vec![Summand::new(v, s)], 0)
    }

    #[test]
    fn pi_on_standard_modules() {
        let b = b();
        let c = c_algebra();
        let p2 = apply_pi(&GradedModule::projective(&b, 1));
        assert!(is_isomorphic(&p2, &GradedModule::projective(&c, 0).shift(-1)));
        let p1 = apply_pi(&GradedModule::projective(&b, 0));
        assert!(is_isomorphic(&p1, &GradedModule::simple(&c, 0)));
        assert!(apply_pi(&GradedModule::simple(&b, 0)).is_zero());
    }

    #[test]
    fn iota_on_standard_modules() {
        let b = b();
        let c = c_algebra();
        let free = apply_iota(&b, &GradedModule::projective(&c, 0));
        assert!(is_isomorphic(&free, &GradedModule::projective(&b, 1).shift(1)));
        let triv = apply_iota(&b, &GradedModule::simple(&c, 0));
        assert_eq!(triv.dim(), 2);
        let mut degs = triv.degrees.clone();
        degs.sort();
        assert_eq!(degs, vec![1, 2]);
        triv.check().unwrap();
    }

    #[test]
    fn p_on_projectives() {
        let b = b();
        let p2 = p_on_object(&single(&b, 1, 0), 6).unwrap();
        assert_eq!(p2.complex.span(), Some((0, 0)));
        assert_eq!(p2.complex.term(0), &[Summand::new(1, 0)]);
        let p1 = p_on_object(&single(&b, 0, 0), 6).unwrap();
        p1.complex.check().unwrap();
        assert_eq!(p1.complex.regime, Regime::Left);
        for k in 0..6 {
            assert_eq!(p1.complex.term(-k), &[Summand::new(1, 2 * k + 1)]);
            if k > 0 {
                let x = p1.complex.diff(-k).get(0, 0).clone();
                assert_eq!(b.homogeneous_degree(&x), Some(2));
            }
        }
    }

    #[test]
    fn koszul_dual_of_simples_and_injective() {
        let b = b();
        let d1 = koszul_d(&ModComplex::single(&GradedModule::simple(&b, 0), 0)).unwrap();
        assert_eq!(d1.term(0), &[Summand::new(1, 0)]);
        let d2 = koszul_d(&ModComplex::single(&GradedModule::simple(&b, 1), 0)).unwrap();
        assert_eq!(d2.term(0), &[Summand::new(0, 0)]);
        let di = koszul_d(&ModComplex::single(&GradedModule::injective2(&b), 0)).unwrap();
        di.check().unwrap();
        let h = di.realize();
        assert!(is_isomorphic(&h.homology(0), &GradedModule::simple(&b, 0)));
        assert_eq!(h.homology_dim(-1) + h.homology_dim(-2), 0);
    }

    #[test]
    fn koszul_dual_of_p1_is_two_terms() {
        let b = b();
        let d = koszul_d(&ModComplex::single(&GradedModule::projective(&b, 0), 0)).unwrap();
        d.check().unwrap();
        assert_eq!(d.term(0), &[Summand::new(1, 0)]);
        assert_eq!(d.term(1), &[Summand::new(0, -1)]);
        assert_eq!(d.diff(0).get(0, 0), &element(&b, "b"));
    }

    #[test]
    fn ck_of_p2_is_contractible() {
        let b = b();
        let (bc, t) = ck_on_object(&single(&b, 1, 0), 8).unwrap();
        bc.check().unwrap();
        t.check().unwrap();
        let r = gaussian_reduce(&t, true).unwrap();
        // everything up to the truncation seam cancels
        let top = r.reduced.trusted.1;
        assert!(r.reduced.terms.keys().all(|&i| i > top));
    }

    #[test]
    fn ck_of_p1_is_the_expected_column() {
        let b = b();
        let (_, t) = ck_on_object(&single(&b, 0, 0), 6).unwrap();
        t.check().unwrap();
        assert_eq!(t.term(0), &[Summand::new(0, 0)]);
        assert_eq!(t.diff(0).get(0, 0), &element(&b, "a"));
        for v in 1..=6 {
            assert_eq!(t.term(v), &[Summand::new(1, -(2 * v - 1))]);
        }
        assert_eq!(t.diff(1).get(0, 0), &element(&b, "-c"));
        assert_eq!(t.diff(2).get(0, 0), &element(&b, "c"));
        assert_eq!(t.diff(3).get(0, 0), &element(&b, "-c"));
    }

    #[test]
    fn ck_consecutive_maps_compose_to_zero() {
        let b = b();
        for v in [0usize, 1] {
            for depth in 3..5 {
                let (bc, _) = ck_on_object(&single(&b, v, 0), depth).unwrap();
                bc.check().unwrap();
            }
        }
    }
}
