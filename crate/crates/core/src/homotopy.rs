//! Isomorphism and homotopy questions in the homotopy category, answered by
//! exact linear algebra on a finite window of homological degrees.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Element, GradedAlgebra};
use crate::linalg::{LinearSystem, Matrix};
use crate::proj::{EMatrix, ProjComplex, ProjMap, Regime, Summand};
use crate::reduce::gaussian_reduce;
use crate::ring::{int, Rational};

/// Smallest window (in homological degrees) on which a comparison of
/// unbounded complexes is reported as conclusive.
pub const MIN_WINDOW: i32 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

type EqKey = (i32, usize, usize, usize);

/// One unknown scalar: the coefficient of basis path `path` in entry
/// `(row, col)` of the component at homological degree `degree`.
#[derive(Clone, Debug)]
struct Var {
    degree: i32,
    row: usize,
    col: usize,
    path: usize,
}

struct Builder<'a> {
    alg: &'a GradedAlgebra,
    vars: Vec<Var>,
    eqs: Vec<(EqKey, usize, Rational)>,
    rhs: Vec<(EqKey, Rational)>,
}

impl<'a> Builder<'a> {
    fn new(alg: &'a GradedAlgebra) -> Self {
        Self {
            alg,
            vars: Vec::new(),
            eqs: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Declares unknown entries for a map `⊕src → ⊕dst` at `degree`.
    fn declare(&mut self, degree: i32, src: &[Summand], dst: &[Summand]) -> Vec<usize> {
        let mut ids = Vec::new();
        for (row, t) in dst.iter().enumerate() {
            for (col, s) in src.iter().enumerate() {
                for p in self.alg.paths_between(t.vertex, s.vertex) {
                    if self.alg.degree(p) == s.shift - t.shift {
                        ids.push(self.vars.len());
                        self.vars.push(Var { degree, row, col, path: p });
                    }
                }
            }
        }
        ids
    }

    /// Adds `coeff · left · V` to the equations tagged `tag`.
    fn left_times(&mut self, tag: i32, left: &EMatrix, ids: &[usize], coeff: &Rational) {
        for &v in ids {
            let var = self.vars[v].clone();
            for r in 0..left.rows {
                let x = left.get(r, var.row);
                for (&xi, c) in &x.terms {
                    if let Some(k) = self.alg.mul_basis(xi, var.path) {
                        self.eqs.push(((tag, r, var.col, k), v, c * coeff));
                    }
                }
            }
        }
    }

    /// Adds `coeff · V · right` to the equations tagged `tag`.
    fn times_right(&mut self, tag: i32, ids: &[usize], right: &EMatrix, coeff: &Rational) {
        for &v in ids {
            let var = self.vars[v].clone();
            for col in 0..right.cols {
                let x = right.get(var.col, col);
                for (&xi, c) in &x.terms {
                    if let Some(k) = self.alg.mul_basis(var.path, xi) {
                        self.eqs.push(((tag, var.row, col, k), v, c * coeff));
                    }
                }
            }
        }
    }

    /// Adds a variable-free matrix to the right-hand side of tag `tag`.
    fn constant(&mut self, tag: i32, m: &EMatrix) {
        for r in 0..m.rows {
            for c in 0..m.cols {
                for (&p, x) in &m.get(r, c).terms {
                    self.rhs.push(((tag, r, c, p), x.clone()));
                }
            }
        }
    }

    /// Extra unknown standing for a free scalar.
    fn scalar_var(&mut self) -> usize {
        self.vars.push(Var {
            degree: i32::MIN,
            row: 0,
            col: 0,
            path: 0,
        });
        self.vars.len() - 1
    }

    /// Adds `t · m` to tag `tag` for the scalar unknown `t`.
    fn scalar_times(&mut self, tag: i32, t: usize, m: &EMatrix, coeff: &Rational) {
        for r in 0..m.rows {
            for c in 0..m.cols {
                for (&p, x) in &m.get(r, c).terms {
                    self.eqs.push(((tag, r, c, p), t, x * coeff));
                }
            }
        }
    }

    fn system(&self) -> LinearSystem<EqKey> {
        let mut sys = LinearSystem::new(self.vars.len());
        for (k, v, c) in &self.eqs {
            sys.add_lhs(k, *v, c.clone());
        }
        for (k, c) in &self.rhs {
            sys.add_rhs(k, c.clone());
        }
        sys
    }

    fn decode(&self, sol: &[Rational], degree: i32, x: &ProjComplex, y: &ProjComplex) -> ProjMap {
        let mut comps: BTreeMap<i32, EMatrix> = BTreeMap::new();
        for (v, var) in self.vars.iter().enumerate() {
            if var.degree == i32::MIN || sol[v].is_zero() {
                continue;
            }
            let m = comps.entry(var.degree).or_insert_with(|| {
                EMatrix::zeros(y.term(var.degree + degree).len(), x.term(var.degree).len())
            });
            m.add_at(var.row, var.col, &Element::scalar_basis(var.path, sol[v].clone()));
        }
        let mut out = ProjMap::zero(degree);
        for (i, m) in comps {
            out.set(i, m);
        }
        out
    }
}

/// Basis of the space of chain maps `X → Y` on the window `lo..=hi`
/// (components on the window, commuting squares between window degrees).
pub fn chain_map_space(x: &ProjComplex, y: &ProjComplex, lo: i32, hi: i32) -> Vec<ProjMap> {
    let alg = &x.alg;
    let mut b = Builder::new(alg);
    let ids: BTreeMap<i32, Vec<usize>> = (lo..=hi)
        .map(|i| (i, b.declare(i, x.term(i), y.term(i))))
        .collect();
    let one = Rational::one();
    for i in lo..hi {
        b.left_times(i, &y.diff(i), &ids[&i], &one);
        b.times_right(i, &ids[&(i + 1)], &x.diff(i), &-one.clone());
    }
    let sys = b.system();
    sys.kernel()
        .into_iter()
        .map(|sol| b.decode(&sol, 0, x, y))
        .collect()
}

/// Scalar part of a map between minimal terms: entries between equal
/// summands reduced modulo the radical.
pub fn scalar_matrix(alg: &GradedAlgebra, src: &[Summand], dst: &[Summand], m: &EMatrix) -> Matrix {
    let mut out = Matrix::zeros(dst.len(), src.len());
    for (i, t) in dst.iter().enumerate() {
        for (j, s) in src.iter().enumerate() {
            if s == t {
                out.set(i, j, m.get(i, j).coeff(alg.idempotent_index(s.vertex)));
            }
        }
    }
    out
}

fn invertible_on(alg: &GradedAlgebra, x: &ProjComplex, y: &ProjComplex, f: &ProjMap, lo: i32, hi: i32) -> bool {
    (lo..=hi).all(|i| {
        let (s, t) = (x.term(i), y.term(i));
        s.len() == t.len() && scalar_matrix(alg, s, t, &f.component(x, y, i)).is_invertible()
    })
}

/// Outcome of a homotopy-category comparison.
#[derive(Clone, Debug)]
pub struct IsoResult {
    pub verdict: Verdict,
    pub window: Option<(i32, i32)>,
    pub reduced_x: ProjComplex,
    pub reduced_y: ProjComplex,
    /// Invertible chain map between the reduced complexes.
    pub witness: Option<ProjMap>,
    pub note: String,
}

/// Window on which two (reduced) complexes are both known exactly.
pub fn comparison_window(x: &ProjComplex, y: &ProjComplex) -> Option<(i32, i32)> {
    let spans: Vec<(i32, i32)> = [x.span(), y.span()].into_iter().flatten().collect();
    let lo_span = spans.iter().map(|s| s.0).min()?;
    let hi_span = spans.iter().map(|s| s.1).max()?;
    let lo = x.trusted.0.max(y.trusted.0).max(lo_span - 1);
    let hi = x.trusted.1.min(y.trusted.1).min(hi_span + 1);
    (lo <= hi).then_some((lo, hi))
}

fn is_open(c: &ProjComplex) -> bool {
    c.regime != Regime::Bounded
}

/// Decides whether `x ≅ y` in the homotopy category: both are reduced to
/// minimal complexes, which are isomorphic exactly when an invertible chain
/// map exists. That map is searched for among random combinations of a basis
/// of the chain-map space; a generic combination is invertible whenever any
/// element is.
pub fn iso_in_homotopy_category(x: &ProjComplex, y: &ProjComplex) -> IsoResult {
    let rx = gaussian_reduce(x, false).expect("reduction terminates").reduced;
    let ry = gaussian_reduce(y, false).expect("reduction terminates").reduced;
    iso_of_minimal(&rx, &ry)
}

/// As [`iso_in_homotopy_category`] for complexes that are already minimal.
pub fn iso_of_minimal(rx: &ProjComplex, ry: &ProjComplex) -> IsoResult {
    let alg = rx.alg.clone();
    let mut res = IsoResult {
        verdict: Verdict::Inconclusive,
        window: None,
        reduced_x: rx.clone(),
        reduced_y: ry.clone(),
        witness: None,
        note: String::new(),
    };
    if rx.is_zero() && ry.is_zero() {
        res.verdict = Verdict::Pass;
        res.witness = Some(ProjMap::zero(0));
        res.note = "both complexes are contractible".into();
        return res;
    }
    let Some((lo, hi)) = comparison_window(rx, ry) else {
        res.note = "no common window of exactness".into();
        return res;
    };
    res.window = Some((lo, hi));
    let open = is_open(rx) || is_open(ry);
    if open && hi - lo + 1 < MIN_WINDOW {
        res.note = format!("window {lo}..{hi} is too small to certify");
        return res;
    }
    for i in lo..=hi {
        let (mut a, mut b) = (rx.term(i).to_vec(), ry.term(i).to_vec());
        a.sort();
        b.sort();
        if a != b {
            res.verdict = Verdict::Fail;
            res.note = format!(
                "minimal terms differ in degree {i}: {} vs {}",
                rx.term_name(i),
                ry.term_name(i)
            );
            return res;
        }
    }
    let basis = chain_map_space(rx, ry, lo, hi);
    if basis.is_empty() {
        res.verdict = Verdict::Fail;
        res.note = "no nonzero chain maps".into();
        return res;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..8 {
        let mut f = ProjMap::zero(0);
        for m in &basis {
            let c: i64 = rng.gen_range(-30..=30);
            f = f.add(&m.scale(&int(c)), rx, ry);
        }
        if invertible_on(&alg, rx, ry, &f, lo, hi) {
            res.verdict = Verdict::Pass;
            res.witness = Some(f);
            res.note = format!("invertible chain map on degrees {lo}..{hi}");
            return res;
        }
    }
    res.verdict = Verdict::Fail;
    res.note = "no invertible chain map found".into();
    res
}

/// Outcome of a homotopy search.
#[derive(Clone, Debug)]
pub struct HomotopyResult {
    pub verdict: Verdict,
    pub homotopy: Option<ProjMap>,
    /// Scalar `t` with `a − t·b ≃ 0`, when one was requested.
    pub scalar: Option<Rational>,
    pub strict: bool,
    pub note: String,
}

fn homotopy_system(
    x: &ProjComplex,
    y: &ProjComplex,
    lo: i32,
    hi: i32,
    a: &ProjMap,
    b: Option<&ProjMap>,
) -> (Option<ProjMap>, Option<Rational>) {
    let alg = &x.alg;
    let mut bld = Builder::new(alg);
    let ids: BTreeMap<i32, Vec<usize>> = (lo..=hi + 1)
        .map(|i| (i, bld.declare(i, x.term(i), y.term(i - 1))))
        .collect();
    let one = Rational::one();
    let t = b.map(|_| bld.scalar_var());
    for i in lo..=hi {
        // d_Y^{i−1} H^i + H^{i+1} d_X^i (+ t·b^i) = a^i
        bld.left_times(i, &y.diff(i - 1), &ids[&i], &one);
        bld.times_right(i, &ids[&(i + 1)], &x.diff(i), &one);
        if let (Some(t), Some(b)) = (t, b) {
            bld.scalar_times(i, t, &b.component(x, y, i), &one);
        }
        bld.constant(i, &a.component(x, y, i));
    }
    match bld.system().solve() {
        None => (None, None),
        Some(sol) => {
            let h = bld.decode(&sol, -1, x, y);
            (Some(h), t.map(|t| sol[t].clone()))
        }
    }
}

/// Window for comparing two maps `X → Y`.
fn map_window(x: &ProjComplex, y: &ProjComplex) -> Option<(i32, i32)> {
    comparison_window(x, y)
}

/// Decides whether `f ≃ g` as chain maps `X → Y`, first testing strict
/// equality, then solving `f − g = dh + hd` on the common window.
pub fn chain_maps_homotopic(f: &ProjMap, g: &ProjMap, x: &ProjComplex, y: &ProjComplex) -> HomotopyResult {
    let Some((lo, hi)) = map_window(x, y) else {
        return HomotopyResult {
            verdict: Verdict::Pass,
            homotopy: Some(ProjMap::zero(-1)),
            scalar: None,
            strict: true,
            note: "both complexes are zero".into(),
        };
    };
    let diff = f.sub(g, x, y);
    if diff.is_zero_on(lo, hi) {
        return HomotopyResult {
            verdict: Verdict::Pass,
            homotopy: Some(ProjMap::zero(-1)),
            scalar: None,
            strict: true,
            note: format!("maps agree strictly on degrees {lo}..{hi}"),
        };
    }
    if (is_open(x) || is_open(y)) && hi - lo + 1 < MIN_WINDOW {
        return HomotopyResult {
            verdict: Verdict::Inconclusive,
            homotopy: None,
            scalar: None,
            strict: false,
            note: format!("window {lo}..{hi} is too small to certify"),
        };
    }
    let (h, _) = homotopy_system(x, y, lo, hi, &diff, None);
    match h {
        Some(h) => HomotopyResult {
            verdict: Verdict::Pass,
            homotopy: Some(h),
            scalar: None,
            strict: false,
            note: format!("homotopic on degrees {lo}..{hi}"),
        },
        None => HomotopyResult {
            verdict: Verdict::Fail,
            homotopy: None,
            scalar: None,
            strict: false,
            note: format!("f − g = dh + hd has no solution on degrees {lo}..{hi}"),
        },
    }
}

/// Finds a scalar `t` and homotopy `h` with `a − t·b = dh + hd`, for
/// comparing two maps that are only determined up to a unit.
pub fn proportional_up_to_homotopy(
    a: &ProjMap,
    b: &ProjMap,
    x: &ProjComplex,
    y: &ProjComplex,
) -> HomotopyResult {
    let Some((lo, hi)) = map_window(x, y) else {
        return HomotopyResult {
            verdict: Verdict::Pass,
            homotopy: Some(ProjMap::zero(-1)),
            scalar: Some(Rational::one()),
            strict: true,
            note: "both complexes are zero".into(),
        };
    };
    let (h, t) = homotopy_system(x, y, lo, hi, a, Some(b));
    match (h, t) {
        (Some(h), Some(t)) => HomotopyResult {
            verdict: Verdict::Pass,
            strict: h.is_zero_on(lo, hi + 1),
            homotopy: Some(h),
            scalar: Some(t),
            note: format!("proportional up to homotopy on degrees {lo}..{hi}"),
        },
        _ => HomotopyResult {
            verdict: Verdict::Fail,
            homotopy: None,
            scalar: None,
            strict: false,
            note: format!("no scalar relation on degrees {lo}..{hi}"),
        },
    }
}

/// Verifies `a − b = d h + h d` on `lo..=hi`.
pub fn check_homotopy(
    a: &ProjMap,
    b: &ProjMap,
    h: &ProjMap,
    x: &ProjComplex,
    y: &ProjComplex,
    lo: i32,
    hi: i32,
) -> bool {
    let alg = &x.alg;
    (lo..=hi).all(|i| {
        let lhs = a.component(x, y, i).sub(&b.component(x, y, i));
        let dh = y.diff(i - 1).mul(alg, &h.component(x, y, i));
        let hd = h.component(x, y, i + 1).mul(alg, &x.diff(i));
        lhs == dh.add(&hd)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;
    use std::sync::Arc;

    fn one_term(b: &Arc<GradedAlgebra>, v: usize, s: i32) -> ProjComplex {
        ProjComplex::single(b, vec![Summand::new(v, s)], 0)
    }

    #[test]
    fn reflexive_and_distinguishing() {
        let b = Arc::new(zigzag());
        let p1 = one_term(&b, 0, 0);
        let p2 = one_term(&b, 1, 0);
        assert_eq!(iso_in_homotopy_category(&p1, &p1).verdict, Verdict::Pass);
        assert_eq!(iso_in_homotopy_category(&p1, &p2).verdict, Verdict::Fail);
    }

    #[test]
    fn c_is_not_nullhomotopic_in_one_degree() {
        let b = Arc::new(zigzag());
        let x = one_term(&b, 1, 2);
        let y = one_term(&b, 1, 0);
        let mut c = EMatrix::zeros(1, 1);
        c.set(0, 0, b.parse_element("c").unwrap());
        let mut f = ProjMap::zero(0);
        f.set(0, c);
        let r = chain_maps_homotopic(&f, &ProjMap::zero(0), &x, &y);
        assert_eq!(r.verdict, Verdict::Fail);
        let same = chain_maps_homotopic(&f, &f, &x, &y);
        assert_eq!(same.verdict, Verdict::Pass);
        assert!(same.strict);
    }

    #[test]
    fn scalar_relation_is_found() {
        let b = Arc::new(zigzag());
        let x = one_term(&b, 1, 2);
        let y = one_term(&b, 1, 0);
        let mut c = EMatrix::zeros(1, 1);
        c.set(0, 0, b.parse_element("c").unwrap());
        let mut f = ProjMap::zero(0);
        f.set(0, c);
        let g = f.scale(&int(3));
        let r = proportional_up_to_homotopy(&g, &f, &x, &y);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.scalar, Some(int(3)));
    }
}
