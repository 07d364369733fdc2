//! Explicit chain models of the zig-zag algebra used as reference data, and
//! a matcher that compares complexes up to a diagonal change of signs.
//!
//! The largest model is the three-column diagram of complexes whose middle
//! column splits as the direct sum of the other two:
//!
//! ```text
//!  left (A_n)      middle (B_n)        right (C_n)
//!      0           P(1)<2>             P(1)<2>
//!      P(1)        P(2)<1> ⊕ P(1)      P(2)<1>
//!      ...         ...                 ...
//! ```
//!
//! Row `n` sits in homological degree `n - 2`. The maps `J, L` connect the
//! left column to the middle one and `M, K` the right column.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Element, GradedAlgebra};
use crate::proj::{ComplexError, EMatrix, ProjComplex, ProjMap, Regime, Summand};
use crate::ring::sign;

/// Homological degree of row 0.
pub const FIRST_ROW_DEGREE: i32 = -2;

fn p1(shift: i32) -> Summand {
    Summand::new(0, shift)
}

fn p2(shift: i32) -> Summand {
    Summand::new(1, shift)
}

/// Builds a matrix from entry strings; `1` and `-1` stand for the idempotent
/// of the source summand.
pub fn matrix(b: &GradedAlgebra, src: &[Summand], dst: &[Summand], rows: &[&[&str]]) -> EMatrix {
    let mut m = EMatrix::zeros(dst.len(), src.len());
    assert_eq!(rows.len(), dst.len(), "row count");
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), src.len(), "column count");
        for (j, s) in row.iter().enumerate() {
            let x = match *s {
                "1" => b.e(src[j].vertex),
                "-1" => b.e(src[j].vertex).neg(),
                other => b.parse_element(other).expect("fixture entry"),
            };
            m.set(i, j, x);
        }
    }
    m
}

pub fn middle_term(n: i32) -> Vec<Summand> {
    match n {
        0 => vec![p1(2)],
        1 => vec![p2(1), p1(0)],
        _ => vec![p1(-2 * n + 4), p2(-2 * n + 3), p1(-2 * n + 2)],
    }
}

pub fn left_term(n: i32) -> Vec<Summand> {
    match n {
        0 => vec![],
        1 => vec![p1(0)],
        _ => vec![p1(-2 * n + 4), p1(-2 * n + 2)],
    }
}

pub fn right_term(n: i32) -> Vec<Summand> {
    match n {
        0 => vec![p1(2)],
        _ => vec![p2(-2 * n + 3)],
    }
}

/// `A_n: left(n) → left(n+1)`
pub fn a_matrix(b: &GradedAlgebra, n: i32) -> EMatrix {
    let (s, t) = (left_term(n), left_term(n + 1));
    match n {
        0 => EMatrix::zeros(1, 0),
        1 => matrix(b, &s, &t, &[&["1"], &["0"]]),
        _ => matrix(b, &s, &t, &[&["0", "1"], &["0", "0"]]),
    }
}

/// `B_n: middle(n) → middle(n+1)`
pub fn b_matrix(b: &GradedAlgebra, n: i32) -> EMatrix {
    let (s, t) = (middle_term(n), middle_term(n + 1));
    match n {
        0 => matrix(b, &s, &t, &[&["a"], &["0"]]),
        1 => matrix(b, &s, &t, &[&["b", "1"], &["0", "-a"], &["0", "0"]]),
        _ => matrix(b, &s, &t, &[&["0", "b", "1"], &["0", "0", "-a"], &["0", "0", "0"]]),
    }
}

/// `C_n: right(n) → right(n+1)`
pub fn c_matrix(b: &GradedAlgebra, n: i32) -> EMatrix {
    let (s, t) = (right_term(n), right_term(n + 1));
    match n {
        0 => matrix(b, &s, &t, &[&["a"]]),
        _ => matrix(b, &s, &t, &[&["c"]]),
    }
}

/// `J_n: left(n) → middle(n)`
pub fn j_matrix(b: &GradedAlgebra, n: i32) -> EMatrix {
    let (s, t) = (left_term(n), middle_term(n));
    match n {
        0 => EMatrix::zeros(1, 0),
        1 => matrix(b, &s, &t, &[&["0"], &["1"]]),
        _ => matrix(b, &s, &t, &[&["1", "0"], &["-a", "0"], &["0", "1"]]),
    }
}

/// `K_n: middle(n) → right(n)`
pub fn k_matrix(b: &GradedAlgebra, n: i32) -> EMatrix {
    let (s, t) = (middle_term(n), right_term(n));
    match n {
        0 => matrix(b, &s, &t, &[&["1"]]),
        1 => matrix(b, &s, &t, &[&["1", "0"]]),
        _ => matrix(b, &s, &t, &[&["a", "1", "0"]]),
    }
}

/// `L_n: middle(n) → left(n)`
pub fn l_matrix(b: &GradedAlgebra, n: i32) -> EMatrix {
    let (s, t) = (middle_term(n), left_term(n));
    match n {
        0 => EMatrix::zeros(0, 1),
        1 => matrix(b, &s, &t, &[&["b", "1"]]),
        _ => matrix(b, &s, &t, &[&["1", "0", "0"], &["0", "b", "1"]]),
    }
}

/// `M_n: right(n) → middle(n)`
pub fn m_matrix(b: &GradedAlgebra, n: i32) -> EMatrix {
    let (s, t) = (right_term(n), middle_term(n));
    match n {
        0 => matrix(b, &s, &t, &[&["1"]]),
        1 => matrix(b, &s, &t, &[&["1"], &["-b"]]),
        _ => matrix(b, &s, &t, &[&["0"], &["1"], &["-b"]]),
    }
}

/// The three columns and the four maps, truncated after `rows` rows.
#[derive(Clone, Debug)]
pub struct Sl2Diagram {
    pub rows: i32,
    pub left: ProjComplex,
    pub middle: ProjComplex,
    pub right: ProjComplex,
    pub j: ProjMap,
    pub k: ProjMap,
    pub l: ProjMap,
    pub m: ProjMap,
}

fn column(
    b: &Arc<GradedAlgebra>,
    rows: i32,
    term: fn(i32) -> Vec<Summand>,
    diff: fn(&GradedAlgebra, i32) -> EMatrix,
) -> ProjComplex {
    let mut c = ProjComplex::zero(b);
    for n in 0..rows {
        c.set_term(n + FIRST_ROW_DEGREE, term(n));
    }
    for n in 0..rows - 1 {
        c.set_diff(n + FIRST_ROW_DEGREE, diff(b, n));
    }
    c.regime = Regime::Right;
    c.trusted = (i32::MIN / 4, rows - 1 + FIRST_ROW_DEGREE);
    c
}

fn rows_map(b: &GradedAlgebra, rows: i32, f: fn(&GradedAlgebra, i32) -> EMatrix) -> ProjMap {
    let mut m = ProjMap::zero(0);
    for n in 0..rows {
        m.set(n + FIRST_ROW_DEGREE, f(b, n));
    }
    m
}

pub fn sl2_diagram(b: &Arc<GradedAlgebra>, rows: i32) -> Sl2Diagram {
    Sl2Diagram {
        rows,
        left: column(b, rows, left_term, a_matrix),
        middle: column(b, rows, middle_term, b_matrix),
        right: column(b, rows, right_term, c_matrix),
        j: rows_map(b, rows, j_matrix),
        k: rows_map(b, rows, k_matrix),
        l: rows_map(b, rows, l_matrix),
        m: rows_map(b, rows, m_matrix),
    }
}

impl Sl2Diagram {
    fn last(&self) -> i32 {
        self.rows - 1 + FIRST_ROW_DEGREE
    }

    /// Named identity checks: the columns are complexes, `J, K, L, M` are
    /// chain maps, and `LJ = 1`, `KM = 1`, `KJ = 0`, `LM = 0`, `JL + MK = 1`.
    pub fn splitting_checks(&self) -> Vec<(String, bool)> {
        let (lo, hi) = (FIRST_ROW_DEGREE, self.last());
        let mut out = Vec::new();
        for (name, c) in [("left", &self.left), ("middle", &self.middle), ("right", &self.right)] {
            out.push((format!("{name} column is a complex"), c.check().is_ok()));
        }
        let maps = [
            ("J", &self.j, &self.left, &self.middle),
            ("K", &self.k, &self.middle, &self.right),
            ("L", &self.l, &self.middle, &self.left),
            ("M", &self.m, &self.right, &self.middle),
        ];
        for (name, f, x, y) in maps {
            out.push((format!("{name} is a chain map"), f.check_chain_map(x, y, lo, hi).is_ok()));
        }
        let (l, m, mid, r) = (&self.left, &self.middle, &self.middle, &self.right);
        let lj = self.l.compose(&self.j, l, m, l);
        let km = self.k.compose(&self.m, r, m, r);
        let kj = self.k.compose(&self.j, l, m, r);
        let lm = self.l.compose(&self.m, r, m, l);
        let jl = self.j.compose(&self.l, mid, l, mid);
        let mk = self.m.compose(&self.k, mid, r, mid);
        let jl_mk = jl.add(&mk, mid, mid);
        let eq = |f: &ProjMap, g: &ProjMap, x: &ProjComplex, y: &ProjComplex| {
            (lo..=hi).all(|i| f.component(x, y, i) == g.component(x, y, i))
        };
        out.push(("LJ = 1".into(), eq(&lj, &ProjMap::identity(l), l, l)));
        out.push(("KM = 1".into(), eq(&km, &ProjMap::identity(r), r, r)));
        out.push(("KJ = 0".into(), kj.is_zero_on(lo, hi)));
        out.push(("LM = 0".into(), lm.is_zero_on(lo, hi)));
        out.push(("JL + MK = 1".into(), eq(&jl_mk, &ProjMap::identity(mid), mid, mid)));
        out
    }
}

/// `P(1) →a→ P(2)<-1> →-c→ P(2)<-3> →c→ P(2)<-5> → ⋯` in degrees `0..=len`.
pub fn ck_p1_model(b: &Arc<GradedAlgebra>, len: i32) -> ProjComplex {
    let mut c = ProjComplex::zero(b);
    c.set_term(0, vec![p1(0)]);
    for k in 1..=len {
        c.set_term(k, vec![p2(-2 * k + 1)]);
    }
    c.set_diff(0, matrix(b, &[p1(0)], &[p2(-1)], &[&["a"]]));
    for k in 1..len {
        let x = if k % 2 == 1 { "-c" } else { "c" };
        c.set_diff(k, matrix(b, &[p2(-2 * k + 1)], &[p2(-2 * k - 1)], &[&[x]]));
    }
    c.regime = Regime::Right;
    c.trusted = (i32::MIN / 4, len);
    c
}

/// `0 → P(2) →b→ P(1)<-1> → 0` in degrees 0 and 1.
pub fn dual_p1_model(b: &Arc<GradedAlgebra>) -> ProjComplex {
    let mut c = ProjComplex::zero(b);
    c.set_term(0, vec![p2(0)]);
    c.set_term(1, vec![p1(-1)]);
    c.set_diff(0, matrix(b, &[p2(0)], &[p1(-1)], &[&["b"]]));
    c
}

/// `⋯ → P(2)<5> →c→ P(2)<3> →c→ P(2)<1> → 0`, with `P(2)<2k+1>` in degree `-k`
/// for `k = 0..=len`.
pub fn p_p1_model(b: &Arc<GradedAlgebra>, len: i32) -> ProjComplex {
    let mut c = ProjComplex::zero(b);
    for k in 0..=len {
        c.set_term(-k, vec![p2(2 * k + 1)]);
    }
    for k in 1..=len {
        c.set_diff(-k, matrix(b, &[p2(2 * k + 1)], &[p2(2 * k - 1)], &[&["c"]]));
    }
    c.regime = Regime::Left;
    c.trusted = (-len, i32::MAX / 4);
    c
}

/// `P(1)<2> →a→ P(2)<1> →b→ P(1)` in degrees `-2..=0`, resolving `L(1)`.
pub fn l1_resolution_model(b: &Arc<GradedAlgebra>) -> ProjComplex {
    let mut c = ProjComplex::zero(b);
    c.set_term(-2, vec![p1(2)]);
    c.set_term(-1, vec![p2(1)]);
    c.set_term(0, vec![p1(0)]);
    c.set_diff(-2, matrix(b, &[p1(2)], &[p2(1)], &[&["a"]]));
    c.set_diff(-1, matrix(b, &[p2(1)], &[p1(0)], &[&["b"]]));
    c
}

/// Outcome of a comparison up to diagonal signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignMatch {
    /// `signs[i][k]` multiplies summand `k` of degree `i` of the computed complex.
    pub signs: BTreeMap<i32, Vec<i8>>,
    /// Degrees compared.
    pub window: (i32, i32),
}

impl SignMatch {
    pub fn is_trivial(&self) -> bool {
        self.signs.values().flatten().all(|&s| s == 1)
    }

    pub fn render(&self) -> String {
        self.signs
            .iter()
            .map(|(i, v)| {
                let s: Vec<&str> = v.iter().map(|&x| if x > 0 { "+" } else { "-" }).collect();
                format!("{i}:[{}]", s.join(""))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

struct ParityUnion {
    parent: Vec<usize>,
    /// Parity relative to the parent.
    parity: Vec<bool>,
}

impl ParityUnion {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.parity[x] ^= p;
        (root, self.parity[x])
    }

    /// Records `s(x) · s(y) = (-1)^odd`; false on contradiction.
    fn relate(&mut self, x: usize, y: usize, odd: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return (px ^ py) == odd;
        }
        self.parent[rx] = ry;
        self.parity[rx] = px ^ py ^ odd;
        true
    }
}

/// Looks for signs `s` with `s_{i+1} · d_computed = d_reference · s_i` on
/// degrees `lo..=hi`, requiring equal terms there.
pub fn match_up_to_signs(
    computed: &ProjComplex,
    reference: &ProjComplex,
    lo: i32,
    hi: i32,
) -> Result<SignMatch, ComplexError> {
    let mut index = BTreeMap::new();
    for i in lo..=hi {
        if computed.term(i) != reference.term(i) {
            return Err(ComplexError::Other(format!(
                "degree {i}: computed {} but expected {}",
                computed.term_name(i),
                reference.term_name(i)
            )));
        }
        for k in 0..computed.term(i).len() {
            let n = index.len();
            index.insert((i, k), n);
        }
    }
    let mut uf = ParityUnion::new(index.len());
    for i in lo..hi {
        let (dc, dr) = (computed.diff(i), reference.diff(i));
        for r in 0..dc.rows {
            for c in 0..dc.cols {
                let (x, y) = (dc.get(r, c), dr.get(r, c));
                let odd = if x == y && x.is_zero() {
                    continue;
                } else if x == y {
                    false
                } else if *x == y.neg() {
                    true
                } else {
                    return Err(ComplexError::Other(format!(
                        "degree {i}, entry ({r}, {c}): computed {} but expected ±{}",
                        computed.alg.display(x),
                        computed.alg.display(y)
                    )));
                };
                if !uf.relate(index[&(i + 1, r)], index[&(i, c)], odd) {
                    return Err(ComplexError::Other(format!("inconsistent signs at degree {i}")));
                }
            }
        }
    }
    let mut signs = BTreeMap::new();
    for i in lo..=hi {
        let v: Vec<i8> = (0..computed.term(i).len())
            .map(|k| if uf.find(index[&(i, k)]).1 { -1 } else { 1 })
            .collect();
        signs.insert(i, v);
    }
    Ok(SignMatch { signs, window: (lo, hi) })
}

/// Applies a sign normalisation: returns `S ∘ d ∘ S^{-1}`.
pub fn apply_signs(c: &ProjComplex, s: &SignMatch) -> ProjComplex {
    let mut out = c.clone();
    let get = |i: i32, k: usize| -> i64 { s.signs.get(&i).and_then(|v| v.get(k)).map_or(1, |&x| x as i64) };
    for (&i, d) in &c.diffs {
        let mut m = d.clone();
        for r in 0..m.rows {
            for col in 0..m.cols {
                let f = sign((1 - get(i + 1, r) * get(i, col)) / 2);
                let x: Element = m.get(r, col).scale(&f);
                m.set(r, col, x);
            }
        }
        out.set_diff(i, m);
    }
    out
}

/// Names accepted by [`show_fixture`].
pub const FIXTURE_NAMES: &[&str] = &[
    "algebra",
    "dual-algebra",
    "sl2-left",
    "sl2-middle",
    "sl2-right",
    "p-p1",
    "ck-p1",
    "dual-p1",
    "l1-resolution",
];

/// A printable rendering of a named fixture, with `rows` rows for the
/// infinite ones.
pub fn show_fixture(b: &Arc<GradedAlgebra>, name: &str, rows: i32) -> Option<String> {
    let out = match name {
        "algebra" => b.to_string(),
        "dual-algebra" => b.koszul_dual().map_or_else(|e| e.to_string(), |d| d.to_string()),
        "sl2-left" => sl2_diagram(b, rows).left.to_string(),
        "sl2-middle" => sl2_diagram(b, rows).middle.to_string(),
        "sl2-right" => sl2_diagram(b, rows).right.to_string(),
        "p-p1" => p_p1_model(b, rows).to_string(),
        "ck-p1" => ck_p1_model(b, rows).to_string(),
        "dual-p1" => dual_p1_model(b).to_string(),
        "l1-resolution" => l1_resolution_model(b).to_string(),
        _ => return None,
    };
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;
    use crate::reduce::gaussian_reduce;

    fn b() -> Arc<GradedAlgebra> {
        Arc::new(zigzag())
    }

    #[test]
    fn every_fixture_renders() {
        let b = crate::pipeline::zigzag_arc();
        for name in FIXTURE_NAMES {
            assert!(show_fixture(&b, name, 4).is_some_and(|s| !s.is_empty()), "{name}");
        }
        assert!(show_fixture(&b, "nope", 4).is_none());
    }

    #[test]
    fn diagram_splits() {
        let d = sl2_diagram(&b(), 12);
        for (name, ok) in d.splitting_checks() {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn middle_reduces_to_right() {
        let d = sl2_diagram(&b(), 10);
        let r = gaussian_reduce(&d.middle, false).unwrap();
        let hi = r.reduced.trusted.1.min(d.right.trusted.1);
        let m = match_up_to_signs(&r.reduced, &d.right, FIRST_ROW_DEGREE, hi).unwrap();
        assert!(m.window.1 >= 5);
    }

    #[test]
    fn models_are_complexes() {
        let b = b();
        for c in [ck_p1_model(&b, 9), dual_p1_model(&b), p_p1_model(&b, 9), l1_resolution_model(&b)] {
            c.check().unwrap();
        }
    }

    #[test]
    fn sign_matching_detects_and_undoes_flips() {
        let b = b();
        let c = ck_p1_model(&b, 6);
        let flipped = c.shift(0, 1).shift(0, -1);
        let mut neg = flipped.clone();
        neg.set_diff(2, flipped.diff(2).scale(&-crate::ring::one()));
        let m = match_up_to_signs(&neg, &c, 0, 6).unwrap();
        assert!(!m.is_trivial());
        assert_eq!(apply_signs(&neg, &m).diffs, c.diffs);
        let mut bad = c.clone();
        bad.set_diff(1, matrix(&b, &[p2(-1)], &[p2(-3)], &[&["2c"]]));
        assert!(match_up_to_signs(&bad, &c, 0, 6).is_err());
    }
}
