//! Complexes of graded projective modules, written with matrices of algebra
//! elements.
//!
//! A term is a list of summands `P(v)⟨j⟩`. A differential entry `x` from
//! `P(u)⟨j⟩` to `P(v)⟨k⟩` is left multiplication by `x ∈ e(v)Ae(u)` with
//! `deg x = j − k`. Rows index target summands, columns source summands, and
//! composition is the matrix product using the algebra multiplication.
//! Differentials raise the homological degree.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Element, GradedAlgebra};
use crate::complex::ModComplex;
use crate::linalg::Matrix;
use crate::module::GradedModule;
use crate::ring::{sign, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("d∘d ≠ 0 at homological degree {0}")]
    NotComplex(i32),
    #[error("entry ({row}, {col}) of the map at degree {degree} is not homogeneous of the right type")]
    BadEntry { degree: i32, row: usize, col: usize },
    #[error("shape mismatch at degree {0}")]
    Shape(i32),
    #[error("map does not commute with differentials at degree {0}")]
    NotChainMap(i32),
    #[error("complexes are in different regimes")]
    Regime,
    #[error("{0}")]
    Other(String),
}

/// `P(vertex)⟨shift⟩`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub vertex: usize,
    pub shift: i32,
}

impl Summand {
    pub fn new(vertex: usize, shift: i32) -> Self {
        Self { vertex, shift }
    }

    pub fn shifted(self, r: i32) -> Self {
        Self {
            vertex: self.vertex,
            shift: self.shift + r,
        }
    }
}

/// Which ends of the complex are unbounded. `Left` is the `D^<` regime
/// (terms vanish for large homological degree), `Right` is `D^>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    #[serde(rename = "bounded")]
    Bounded,
    #[serde(rename = "D<")]
    Left,
    #[serde(rename = "D>")]
    Right,
}

/// Dense matrix of algebra elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Element>,
}

impl EMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Element::zero(); rows * cols],
        }
    }

    pub fn identity(alg: &GradedAlgebra, summands: &[Summand]) -> Self {
        let n = summands.len();
        let mut m = Self::zeros(n, n);
        for (i, s) in summands.iter().enumerate() {
            m.set(i, i, alg.e(s.vertex));
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Element) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &Element) {
        let e = &mut self.entries[i * self.cols + j];
        *e = e.add(x);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Element::is_zero)
    }

    pub fn mul(&self, alg: &GradedAlgebra, rhs: &EMatrix) -> EMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = EMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let p = alg.mul(a, b);
                        out.add_at(i, j, &p);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &EMatrix) -> EMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        EMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &EMatrix) -> EMatrix {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> EMatrix {
        EMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> EMatrix {
        let mut m = EMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn render(&self, alg: &GradedAlgebra) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| alg.display(self.get(i, j)))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

/// Checks that `m` is a homogeneous map `⊕ src → ⊕ dst` of internal degree 0.
pub fn check_entries(
    alg: &GradedAlgebra,
    src: &[Summand],
    dst: &[Summand],
    m: &EMatrix,
    degree: i32,
) -> Result<(), ComplexError> {
    if m.rows != dst.len() || m.cols != src.len() {
        return Err(ComplexError::Shape(degree));
    }
    for (i, t) in dst.iter().enumerate() {
        for (j, s) in src.iter().enumerate() {
            let x = m.get(i, j);
            for &p in x.terms.keys() {
                let path = alg.path(p);
                if path.target != t.vertex || path.source != s.vertex || alg.degree(p) != s.shift - t.shift {
                    return Err(ComplexError::BadEntry { degree, row: i, col: j });
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    pub alg: Arc<GradedAlgebra>,
    pub terms: BTreeMap<i32, Vec<Summand>>,
    /// `diffs[i]` is `d^i : X^i → X^{i+1}`; missing keys mean zero.
    pub diffs: BTreeMap<i32, EMatrix>,
    pub regime: Regime,
    /// Inclusive range of homological degrees whose terms and differentials
    /// agree with the untruncated complex.
    pub trusted: (i32, i32),
}

impl ProjComplex {
    pub fn zero(alg: &Arc<GradedAlgebra>) -> Self {
        Self {
            alg: alg.clone(),
            terms: BTreeMap::new(),
            diffs: BTreeMap::new(),
            regime: Regime::Bounded,
            trusted: (i32::MIN / 4, i32::MAX / 4),
        }
    }

    /// A single module `⊕ summands` placed in homological degree `degree`.
    pub fn single(alg: &Arc<GradedAlgebra>, summands: Vec<Summand>, degree: i32) -> Self {
        let mut c = Self::zero(alg);
        c.set_term(degree, summands);
        c
    }

    pub fn set_term(&mut self, i: i32, summands: Vec<Summand>) {
        if summands.is_empty() {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, summands);
        }
    }

    pub fn set_diff(&mut self, i: i32, m: EMatrix) {
        if m.is_zero() {
            self.diffs.remove(&i);
        } else {
            self.diffs.insert(i, m);
        }
    }

    pub fn term(&self, i: i32) -> &[Summand] {
        self.terms.get(&i).map_or(&[], Vec::as_slice)
    }

    pub fn diff(&self, i: i32) -> EMatrix {
        self.diffs
            .get(&i)
            .cloned()
            .unwrap_or_else(|| EMatrix::zeros(self.term(i + 1).len(), self.term(i).len()))
    }

    /// Lowest and highest homological degree with a nonzero term.
    pub fn span(&self) -> Option<(i32, i32)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    /// Checks homogeneity of every differential and `d∘d = 0`.
    pub fn check(&self) -> Result<(), ComplexError> {
        let Some((lo, hi)) = self.span() else {
            return Ok(());
        };
        for i in lo - 1..=hi {
            let d = self.diff(i);
            check_entries(&self.alg, self.term(i), self.term(i + 1), &d, i)?;
        }
        for i in lo..hi {
            if !self.diff(i + 1).mul(&self.alg, &self.diff(i)).is_zero() {
                return Err(ComplexError::NotComplex(i));
            }
        }
        Ok(())
    }

    /// `X⟨r⟩[s]`: summand shifts go up by `r`, `(X[s])^i = X^{i+s}`, and the
    /// differential picks up the sign `(−1)^s`.
    pub fn shift(&self, r: i32, s: i32) -> Self {
        let sg = sign(s as i64);
        Self {
            alg: self.alg.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&i, t)| (i - s, t.iter().map(|x| x.shifted(r)).collect()))
                .collect(),
            diffs: self.diffs.iter().map(|(&i, d)| (i - s, d.scale(&sg))).collect(),
            regime: self.regime,
            trusted: (
                self.trusted.0.saturating_sub(s),
                self.trusted.1.saturating_sub(s),
            ),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.alg);
        out.regime = merge_regime(self.regime, other.regime);
        out.trusted = (
            self.trusted.0.max(other.trusted.0),
            self.trusted.1.min(other.trusted.1),
        );
        let degrees: Vec<i32> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        for &i in &degrees {
            let t = [self.term(i), other.term(i)].concat();
            out.set_term(i, t);
        }
        for &i in &degrees {
            let (a, b) = (self.diff(i), other.diff(i));
            out.set_diff(i, block_diag(&a, &b));
        }
        out
    }

    /// Realises the complex as a complex of explicit graded modules.
    pub fn realize(&self) -> ModComplex {
        let mut out = ModComplex::zero(&self.alg);
        out.regime = self.regime;
        out.trusted = self.trusted;
        for (&i, t) in &self.terms {
            out.terms.insert(i, realize_term(&self.alg, t));
        }
        for (&i, d) in &self.diffs {
            out.diffs
                .insert(i, realize_map(&self.alg, self.term(i), self.term(i + 1), d));
        }
        out
    }

    /// Summands of each degree as a sorted multiset.
    pub fn summand_profile(&self) -> BTreeMap<i32, Vec<Summand>> {
        self.terms
            .iter()
            .map(|(&i, t)| {
                let mut t = t.clone();
                t.sort();
                (i, t)
            })
            .collect()
    }

    /// Restriction to homological degrees `lo..=hi` (brutal truncation).
    pub fn restrict(&self, lo: i32, hi: i32) -> Self {
        let mut out = Self::zero(&self.alg);
        out.regime = self.regime;
        out.trusted = (self.trusted.0.max(lo), self.trusted.1.min(hi));
        for (&i, t) in self.terms.range(lo..=hi) {
            out.set_term(i, t.clone());
        }
        for (&i, d) in self.diffs.range(lo..hi) {
            out.set_diff(i, d.clone());
        }
        out
    }

    /// True if every differential entry lies in the radical.
    pub fn is_minimal(&self) -> bool {
        self.diffs
            .values()
            .all(|d| d.entries.iter().all(|x| self.alg.in_radical(x)))
    }

    pub fn summand_name(&self, s: &Summand) -> String {
        let v = &self.alg.quiver.vertices[s.vertex];
        let base = if self.alg.num_vertices() == 1 {
            self.alg.name.clone()
        } else {
            format!("P({v})")
        };
        if s.shift == 0 {
            base
        } else {
            format!("{base}<{}>", s.shift)
        }
    }

    pub fn term_name(&self, i: i32) -> String {
        let t = self.term(i);
        if t.is_empty() {
            "0".into()
        } else {
            t.iter()
                .map(|s| self.summand_name(s))
                .collect::<Vec<_>>()
                .join(" ⊕ ")
        }
    }

    pub fn to_json(&self) -> ProjComplexJson {
        ProjComplexJson {
            algebra: self.alg.name.clone(),
            regime: self.regime,
            trusted: self.trusted,
            terms: self
                .terms
                .iter()
                .map(|(&i, t)| {
                    (
                        i,
                        t.iter()
                            .map(|s| (self.alg.quiver.vertices[s.vertex].clone(), s.shift))
                            .collect(),
                    )
                })
                .collect(),
            differentials: self
                .diffs
                .iter()
                .map(|(&i, d)| {
                    (
                        i,
                        (0..d.rows)
                            .map(|r| (0..d.cols).map(|c| self.alg.display(d.get(r, c))).collect())
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn from_json(alg: &Arc<GradedAlgebra>, j: &ProjComplexJson) -> Result<Self, ComplexError> {
        if j.algebra != alg.name {
            return Err(ComplexError::Other(format!("complex is over {}", j.algebra)));
        }
        let mut c = Self::zero(alg);
        c.regime = j.regime;
        c.trusted = j.trusted;
        for (&i, t) in &j.terms {
            let summands = t
                .iter()
                .map(|(v, s)| {
                    alg.quiver
                        .vertex(v)
                        .map(|v| Summand::new(v, *s))
                        .map_err(|e| ComplexError::Other(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            c.set_term(i, summands);
        }
        for (&i, rows) in &j.differentials {
            let (r, k) = (c.term(i + 1).len(), c.term(i).len());
            if rows.len() != r || rows.iter().any(|row| row.len() != k) {
                return Err(ComplexError::Shape(i));
            }
            let mut m = EMatrix::zeros(r, k);
            for (a, row) in rows.iter().enumerate() {
                for (b, text) in row.iter().enumerate() {
                    let x = alg
                        .parse_element(text)
                        .map_err(|e| ComplexError::Other(e.to_string()))?;
                    m.set(a, b, x);
                }
            }
            c.set_diff(i, m);
        }
        c.check()?;
        Ok(c)
    }
}

pub(crate) fn merge_regime(a: Regime, b: Regime) -> Regime {
    match (a, b) {
        (Regime::Bounded, x) | (x, Regime::Bounded) => x,
        (x, y) if x == y => x,
        _ => Regime::Bounded,
    }
}

pub fn block_diag(a: &EMatrix, b: &EMatrix) -> EMatrix {
    let mut m = EMatrix::zeros(a.rows + b.rows, a.cols + b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows {
        for j in 0..b.cols {
            m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
        }
    }
    m
}

pub fn realize_term(alg: &Arc<GradedAlgebra>, t: &[Summand]) -> GradedModule {
    let parts: Vec<GradedModule> = t
        .iter()
        .map(|s| GradedModule::projective(alg, s.vertex).shift(s.shift))
        .collect();
    GradedModule::direct_sum_all(alg, &parts)
}

/// Offsets of each summand's basis inside the realised direct sum, and the
/// basis paths of each projective.
pub fn layout(alg: &GradedAlgebra, t: &[Summand]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut offsets = Vec::new();
    let mut paths = Vec::new();
    let mut acc = 0;
    for s in t {
        let ps: Vec<usize> = (0..alg.dim()).filter(|&i| alg.path(i).target == s.vertex).collect();
        offsets.push(acc);
        acc += ps.len();
        paths.push(ps);
    }
    (offsets, paths)
}

/// Coordinates of `x ∈ e(summand.vertex)A` inside the realised summand.
pub fn element_coords(alg: &GradedAlgebra, vertex: usize, x: &Element) -> Vec<Rational> {
    (0..alg.dim())
        .filter(|&i| alg.path(i).target == vertex)
        .map(|i| x.coeff(i))
        .collect()
}

/// Inverse of [`element_coords`].
pub fn coords_element(alg: &GradedAlgebra, vertex: usize, v: &[Rational]) -> Element {
    let mut x = Element::zero();
    for (k, i) in (0..alg.dim()).filter(|&i| alg.path(i).target == vertex).enumerate() {
        x.add_term(i, v[k].clone());
    }
    x
}

/// Matrix of the module map given by left multiplication entries.
pub fn realize_map(alg: &Arc<GradedAlgebra>, src: &[Summand], dst: &[Summand], m: &EMatrix) -> Matrix {
    let (so, sp) = layout(alg, src);
    let (to, tp) = layout(alg, dst);
    let rows = to.last().map_or(0, |o| o + tp.last().unwrap().len());
    let cols = so.last().map_or(0, |o| o + sp.last().unwrap().len());
    let mut out = Matrix::zeros(rows, cols);
    for (j, sps) in sp.iter().enumerate() {
        for (i, tps) in tp.iter().enumerate() {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            for (k, &p) in sps.iter().enumerate() {
                for (&xi, c) in &x.terms {
                    if let Some(r) = alg.mul_basis(xi, p) {
                        let l = tps.iter().position(|&q| q == r).expect("path in target projective");
                        out.add_at(to[i] + l, so[j] + k, c);
                    }
                }
            }
        }
    }
    out
}

/// Degreewise maps between two complexes of projectives, of homological
/// degree `degree` (0 for chain maps, −1 for homotopies).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub degree: i32,
    /// `maps[i]: X^i → Y^{i+degree}`; missing keys mean zero.
    pub maps: BTreeMap<i32, EMatrix>,
}

impl ProjMap {
    pub fn zero(degree: i32) -> Self {
        Self {
            degree,
            maps: BTreeMap::new(),
        }
    }

    pub fn identity(x: &ProjComplex) -> Self {
        Self {
            degree: 0,
            maps: x
                .terms
                .iter()
                .map(|(&i, t)| (i, EMatrix::identity(&x.alg, t)))
                .collect(),
        }
    }

    pub fn component(&self, x: &ProjComplex, y: &ProjComplex, i: i32) -> EMatrix {
        self.maps
            .get(&i)
            .cloned()
            .unwrap_or_else(|| EMatrix::zeros(y.term(i + self.degree).len(), x.term(i).len()))
    }

    pub fn set(&mut self, i: i32, m: EMatrix) {
        if m.is_zero() {
            self.maps.remove(&i);
        } else {
            self.maps.insert(i, m);
        }
    }

    /// `self ∘ first` for `first: X → Y`, `self: Y → Z`.
    pub fn compose(
        &self,
        first: &ProjMap,
        x: &ProjComplex,
        y: &ProjComplex,
        z: &ProjComplex,
    ) -> ProjMap {
        let mut out = ProjMap::zero(self.degree + first.degree);
        for &i in x.terms.keys() {
            let f = first.component(x, y, i);
            let g = self.component(y, z, i + first.degree);
            out.set(i, g.mul(&x.alg, &f));
        }
        out
    }

    pub fn add(&self, other: &ProjMap, x: &ProjComplex, y: &ProjComplex) -> ProjMap {
        assert_eq!(self.degree, other.degree);
        let mut out = ProjMap::zero(self.degree);
        for &i in x.terms.keys() {
            out.set(i, self.component(x, y, i).add(&other.component(x, y, i)));
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> ProjMap {
        ProjMap {
            degree: self.degree,
            maps: self
                .maps
                .iter()
                .map(|(&i, m)| (i, m.scale(c)))
                .filter(|(_, m)| !m.is_zero())
                .collect(),
        }
    }

    pub fn sub(&self, other: &ProjMap, x: &ProjComplex, y: &ProjComplex) -> ProjMap {
        self.add(&other.scale(&-Rational::one()), x, y)
    }

    /// Checks homogeneity and `d_Y f = f d_X` on degrees `lo..=hi`.
    pub fn check_chain_map(
        &self,
        x: &ProjComplex,
        y: &ProjComplex,
        lo: i32,
        hi: i32,
    ) -> Result<(), ComplexError> {
        assert_eq!(self.degree, 0);
        for i in lo..=hi {
            let f = self.component(x, y, i);
            check_entries(&x.alg, x.term(i), y.term(i), &f, i)?;
            if i < hi {
                let lhs = y.diff(i).mul(&x.alg, &f);
                let rhs = self.component(x, y, i + 1).mul(&x.alg, &x.diff(i));
                if lhs != rhs {
                    return Err(ComplexError::NotChainMap(i));
                }
            }
        }
        Ok(())
    }

    pub fn is_zero_on(&self, lo: i32, hi: i32) -> bool {
        self.maps.range(lo..=hi).all(|(_, m)| m.is_zero())
    }

    /// Realises the map between the realised complexes.
    pub fn realize(&self, x: &ProjComplex, y: &ProjComplex) -> BTreeMap<i32, Matrix> {
        x.terms
            .keys()
            .map(|&i| {
                let f = self.component(x, y, i);
                (i, realize_map(&x.alg, x.term(i), y.term(i + self.degree), &f))
            })
            .collect()
    }

    /// Shifts a map along with `X⟨r⟩[s]`; chain maps need no sign.
    pub fn shift(&self, s: i32) -> ProjMap {
        ProjMap {
            degree: self.degree,
            maps: self.maps.iter().map(|(&i, m)| (i - s, m.clone())).collect(),
        }
    }

    pub fn render(&self, x: &ProjComplex) -> String {
        self.maps
            .iter()
            .map(|(&i, m)| format!("  degree {i}: {}", m.render(&x.alg)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// JSON form: summands as `[vertex name, shift]`, entries as element strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjComplexJson {
    pub algebra: String,
    pub regime: Regime,
    pub trusted: (i32, i32),
    pub terms: BTreeMap<i32, Vec<(String, i32)>>,
    pub differentials: BTreeMap<i32, Vec<Vec<String>>>,
}

impl fmt::Display for ProjComplex {
    /// Arrow notation, e.g. `0 → P(1) --[a]--> P(2)<-1> → 0`, with the
    /// homological degree of each term listed underneath.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some((lo, hi)) = self.span() else {
            return write!(f, "0");
        };
        let mut line = String::new();
        if self.regime != Regime::Left {
            line.push_str("0 → ");
        } else {
            line.push_str("⋯ → ");
        }
        for i in lo..=hi {
            line.push_str(&self.term_name(i));
            if i < hi {
                line.push_str(&format!(" --{}--> ", self.diff(i).render(&self.alg)));
            }
        }
        if self.regime != Regime::Right {
            line.push_str(" → 0");
        } else {
            line.push_str(" → ⋯");
        }
        writeln!(f, "{line}")?;
        write!(f, "(degrees {lo}..{hi}")?;
        if self.regime != Regime::Bounded {
            write!(f, ", exact on {}..{}", self.trusted.0.max(lo), self.trusted.1.min(hi))?;
        }
        write!(f, ")")
    }
}

/// Scalar (degree-0) part of an element: its coefficients on idempotents.
pub fn scalar_part(alg: &GradedAlgebra, x: &Element) -> Rational {
    x.terms
        .iter()
        .filter(|(&i, _)| alg.degree(i) == 0)
        .map(|(_, c)| c.clone())
        .fold(Rational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;

    fn resolution_of_l1(b: &Arc<GradedAlgebra>) -> ProjComplex {
        let mut c = ProjComplex::zero(b);
        c.set_term(-2, vec![Summand::new(0, 2)]);
        c.set_term(-1, vec![Summand::new(1, 1)]);
        c.set_term(0, vec![Summand::new(0, 0)]);
        let mut d = EMatrix::zeros(1, 1);
        d.set(0, 0, b.parse_element("a").unwrap());
        c.set_diff(-2, d);
        let mut d = EMatrix::zeros(1, 1);
        d.set(0, 0, b.parse_element("b").unwrap());
        c.set_diff(-1, d);
        c
    }

    #[test]
    fn resolution_is_a_complex() {
        let b = Arc::new(zigzag());
        let c = resolution_of_l1(&b);
        c.check().unwrap();
        assert!(c.is_minimal());
        c.realize().check().unwrap();
    }

    #[test]
    fn non_complex_is_rejected() {
        let b = Arc::new(zigzag());
        let mut c = resolution_of_l1(&b);
        let mut d = EMatrix::zeros(1, 1);
        d.set(0, 0, b.parse_element("a").unwrap());
        c.set_term(1, vec![Summand::new(1, -1)]);
        c.set_diff(0, d);
        assert!(matches!(c.check(), Err(ComplexError::NotComplex(-1))));
    }

    #[test]
    fn shifts() {
        let b = Arc::new(zigzag());
        let c = resolution_of_l1(&b);
        assert_eq!(c.shift(0, 0), c);
        assert_eq!(c.shift(1, 2).shift(2, 3), c.shift(3, 5));
        let s = c.shift(0, 1);
        assert_eq!(s.term(-3), c.term(-2));
        assert_eq!(b.display(s.diff(-3).get(0, 0)), "-a");
        s.check().unwrap();
    }

    #[test]
    fn json_round_trip() {
        let b = Arc::new(zigzag());
        let c = resolution_of_l1(&b);
        let j = serde_json::to_string(&c.to_json()).unwrap();
        let back: ProjComplexJson = serde_json::from_str(&j).unwrap();
        assert_eq!(ProjComplex::from_json(&b, &back).unwrap(), c);
    }

    #[test]
    fn display_uses_arrow_notation() {
        let b = Arc::new(zigzag());
        let text = resolution_of_l1(&b).to_string();
        assert!(text.starts_with("0 → P(1)<2> --[a]--> P(2)<1> --[b]--> P(1) → 0"), "{text}");
    }
}
