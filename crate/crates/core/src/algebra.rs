//! Quivers and graded path algebras with monomial relations.
//!
//! A path `α₁α₂⋯α_l` is read right to left: the source of `α_i` is the target
//! of `α_{i+1}`, so `pq` means "first q, then p". With the arrows of the
//! zig-zag quiver this forces `a = e(2)·a·e(1)` and `b = e(1)·b·e(2)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{fmt_rational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate name `{0}` in quiver")]
    DuplicateName(String),
    #[error("relation `{0}` is not a composable path of length 2")]
    BadRelation(String),
    #[error("algebra has nonzero paths of length {0}; raise the length bound")]
    NotFinite(usize),
    #[error("unsupported algebra shape: {0}")]
    Unsupported(String),
    #[error("cannot parse algebra element `{0}`")]
    Parse(String),
    #[error("map is not an algebra isomorphism: {0}")]
    NotIsomorphism(String),
    #[error("multiplication fails {0}")]
    Axiom(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub degree: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from `(name, source, target)` triples with unit arrow degrees.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self, AlgebraError> {
        let weighted: Vec<_> = arrows.iter().map(|&(n, s, t)| (n, s, t, 1)).collect();
        Self::weighted(vertices, &weighted)
    }

    pub fn weighted(
        vertices: &[&str],
        arrows: &[(&str, &str, &str, i32)],
    ) -> Result<Self, AlgebraError> {
        let mut q = Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
        };
        for v in vertices {
            if q.vertices.iter().any(|w| w == v) {
                return Err(AlgebraError::DuplicateName(v.to_string()));
            }
            q.vertices.push(v.to_string());
        }
        for &(name, s, t, degree) in arrows {
            if q.arrows.iter().any(|a| a.name == name) {
                return Err(AlgebraError::DuplicateName(name.to_string()));
            }
            q.arrows.push(Arrow {
                name: name.to_string(),
                source: q.vertex(s)?,
                target: q.vertex(t)?,
                degree,
            });
        }
        Ok(q)
    }

    pub fn vertex(&self, name: &str) -> Result<usize, AlgebraError> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVertex(name.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize, AlgebraError> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| AlgebraError::UnknownArrow(name.to_string()))
    }
}

/// A path of the quiver; `arrows` is empty for the trivial path `e(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

/// Finite-dimensional graded quotient of a path algebra by quadratic monomial
/// relations, with an enumerated basis of surviving paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub name: String,
    pub quiver: Quiver,
    /// Forbidden words `[α, β]` meaning the path `αβ`.
    pub relations: Vec<[usize; 2]>,
    basis: Vec<Path>,
    degrees: Vec<i32>,
    index: HashMap<Path, usize>,
    aliases: BTreeMap<usize, String>,
}

/// Default bound on path length when enumerating the basis.
pub const DEFAULT_MAX_LENGTH: usize = 4;

impl GradedAlgebra {
    /// Quotient of the path algebra by the listed length-2 monomials. Each
    /// relation is a pair of arrow names `(α, β)` standing for the path `αβ`.
    pub fn build(
        name: &str,
        quiver: Quiver,
        relations: &[(&str, &str)],
        max_length: usize,
    ) -> Result<Self, AlgebraError> {
        let mut rels = Vec::new();
        for &(x, y) in relations {
            let (i, j) = (quiver.arrow(x)?, quiver.arrow(y)?);
            if quiver.arrows[i].source != quiver.arrows[j].target {
                return Err(AlgebraError::BadRelation(format!("{x}{y}")));
            }
            rels.push([i, j]);
        }
        Self::from_indices(name, quiver, rels, max_length)
    }

    fn from_indices(
        name: &str,
        quiver: Quiver,
        relations: Vec<[usize; 2]>,
        max_length: usize,
    ) -> Result<Self, AlgebraError> {
        let mut layer: Vec<Path> = (0..quiver.vertices.len())
            .map(|v| Path {
                source: v,
                target: v,
                arrows: Vec::new(),
            })
            .collect();
        let mut basis = layer.clone();
        for len in 1..=max_length + 1 {
            let mut next = Vec::new();
            for p in &layer {
                for (ai, arrow) in quiver.arrows.iter().enumerate() {
                    // prepend arrow: new path is `arrow · p`
                    if arrow.source != p.target {
                        continue;
                    }
                    if let Some(&first) = p.arrows.first() {
                        if relations.contains(&[ai, first]) {
                            continue;
                        }
                    }
                    let mut arrows = vec![ai];
                    arrows.extend(&p.arrows);
                    next.push(Path {
                        source: p.source,
                        target: arrow.target,
                        arrows,
                    });
                }
            }
            if next.is_empty() {
                break;
            }
            if len == max_length + 1 {
                return Err(AlgebraError::NotFinite(len));
            }
            basis.extend(next.iter().cloned());
            layer = next;
        }
        let degrees = basis
            .iter()
            .map(|p| p.arrows.iter().map(|&a| quiver.arrows[a].degree).sum())
            .collect();
        let mut alg = GradedAlgebra {
            name: name.to_string(),
            quiver,
            relations,
            basis,
            degrees,
            index: HashMap::new(),
            aliases: BTreeMap::new(),
        };
        alg.rebuild_index();
        Ok(alg)
    }

    fn rebuild_index(&mut self) {
        self.index = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
    }

    /// Gives basis path `path` (a word of arrow names) a display name.
    pub fn with_alias(mut self, path: &str, alias: &str) -> Result<Self, AlgebraError> {
        let i = self.parse_path(path)?;
        self.aliases.insert(i, alias.to_string());
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn idempotent_index(&self, v: usize) -> usize {
        v
    }

    pub fn arrow_index(&self, arrow: usize) -> usize {
        let a = &self.quiver.arrows[arrow];
        self.index[&Path {
            source: a.source,
            target: a.target,
            arrows: vec![arrow],
        }]
    }

    /// Dimension of the degree-d part, for d = 0..=max degree.
    pub fn graded_dimensions(&self) -> Vec<usize> {
        let top = self.degrees.iter().copied().max().unwrap_or(0).max(0) as usize;
        let mut dims = vec![0; top + 1];
        for &d in &self.degrees {
            dims[d as usize] += 1;
        }
        dims
    }

    /// Basis indices of `e(target) · A · e(source)`.
    pub fn paths_between(&self, target: usize, source: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].target == target && self.basis[i].source == source)
            .collect()
    }

    /// Product of basis paths `p_i · p_j` ("p_i after p_j").
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<usize> {
        let (p, q) = (&self.basis[i], &self.basis[j]);
        if p.source != q.target {
            return None;
        }
        if let (Some(&last), Some(&first)) = (p.arrows.last(), q.arrows.first()) {
            if self.relations.contains(&[last, first]) {
                return None;
            }
        }
        let mut arrows = p.arrows.clone();
        arrows.extend(&q.arrows);
        self.index
            .get(&Path {
                source: q.source,
                target: p.target,
                arrows,
            })
            .copied()
    }

    /// Checks associativity on every triple of basis paths and that the
    /// idempotents form a unit. Returns the number of triples checked.
    pub fn check_axioms(&self) -> Result<usize, AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                for k in 0..n {
                    let lhs = ij.and_then(|ij| self.mul_basis(ij, k));
                    let rhs = self.mul_basis(j, k).and_then(|jk| self.mul_basis(i, jk));
                    if lhs != rhs {
                        return Err(AlgebraError::Axiom(format!(
                            "associativity on ({}, {}, {})",
                            self.basis_name(i),
                            self.basis_name(j),
                            self.basis_name(k)
                        )));
                    }
                }
            }
        }
        let one = self.one();
        for i in 0..n {
            let x = self.basis_element(i);
            if self.mul(&one, &x) != x || self.mul(&x, &one) != x {
                return Err(AlgebraError::Axiom(format!("unit law on {}", self.basis_name(i))));
            }
        }
        Ok(n * n * n)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (&i, ci) in &x.terms {
            for (&j, cj) in &y.terms {
                if let Some(k) = self.mul_basis(i, j) {
                    out.add_term(k, ci * cj);
                }
            }
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(i)
    }

    pub fn e(&self, v: usize) -> Element {
        Element::basis(v)
    }

    pub fn one(&self) -> Element {
        let mut out = Element::zero();
        for v in 0..self.num_vertices() {
            out.add_term(v, Rational::one());
        }
        out
    }

    /// Looks up a basis path from a word of arrow names, `e(v)` or an alias.
    pub fn parse_path(&self, s: &str) -> Result<usize, AlgebraError> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("e(").and_then(|r| r.strip_suffix(')')) {
            return self.quiver.vertex(inner);
        }
        if let Some((&i, _)) = self.aliases.iter().find(|(_, a)| a.as_str() == s) {
            return Ok(i);
        }
        // Greedy longest-match tokenisation of arrow names.
        let mut rest = s;
        let mut arrows = Vec::new();
        while !rest.is_empty() {
            let best = self
                .quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, a)| rest.starts_with(a.name.as_str()))
                .max_by_key(|(_, a)| a.name.len())
                .ok_or_else(|| AlgebraError::Parse(s.to_string()))?;
            arrows.push(best.0);
            rest = &rest[best.1.name.len()..];
        }
        if arrows.is_empty() {
            return Err(AlgebraError::Parse(s.to_string()));
        }
        let mut acc = self.arrow_index(arrows[arrows.len() - 1]);
        for &a in arrows.iter().rev().skip(1) {
            acc = self
                .mul_basis(self.arrow_index(a), acc)
                .ok_or_else(|| AlgebraError::Parse(format!("{s} is zero or not composable")))?;
        }
        Ok(acc)
    }

    /// Parses a linear combination such as `e(2) + c` or `-b` or `2a - (1/2)c`.
    pub fn parse_element(&self, s: &str) -> Result<Element, AlgebraError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Element::zero());
        }
        let mut out = Element::zero();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut depth = 0;
        let mut cur = String::new();
        let mut neg = false;
        for ch in s.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    cur.push(ch);
                }
                ')' => {
                    depth -= 1;
                    cur.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if !cur.trim().is_empty() {
                        chunks.push((neg, cur.trim().to_string()));
                    }
                    cur.clear();
                    neg = ch == '-';
                }
                _ => cur.push(ch),
            }
        }
        if !cur.trim().is_empty() {
            chunks.push((neg, cur.trim().to_string()));
        }
        if chunks.is_empty() {
            return Err(AlgebraError::Parse(s.to_string()));
        }
        for (neg, chunk) in chunks {
            let (coeff, path) = split_coefficient(&chunk);
            let c = match coeff {
                Some(text) => crate::ring::parse_rational(&text)
                    .ok_or_else(|| AlgebraError::Parse(chunk.clone()))?,
                None => Rational::one(),
            };
            let i = self.parse_path(path.trim())?;
            out.add_term(i, if neg { -c } else { c });
        }
        Ok(out)
    }

    pub fn basis_name(&self, i: usize) -> String {
        if let Some(a) = self.aliases.get(&i) {
            return a.clone();
        }
        let p = &self.basis[i];
        if p.arrows.is_empty() {
            format!("e({})", self.quiver.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.quiver.arrows[a].name.as_str())
                .collect()
        }
    }

    pub fn display(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (&i, c)) in x.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                if abs.is_integer() {
                    s.push_str(&fmt_rational(&abs));
                } else {
                    s.push_str(&format!("({})", fmt_rational(&abs)));
                }
            }
            s.push_str(&self.basis_name(i));
        }
        s
    }

    /// True if every basis path in `x` has positive degree.
    pub fn in_radical(&self, x: &Element) -> bool {
        x.terms.keys().all(|&i| self.degrees[i] > 0)
    }

    /// If `x` is homogeneous, its degree.
    pub fn homogeneous_degree(&self, x: &Element) -> Option<i32> {
        let mut degs = x.terms.keys().map(|&i| self.degrees[i]);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Quadratic dual for monomial relations: arrows are reversed and starred,
    /// and the relations are the length-2 paths not dual to a relation.
    ///
    /// The pairing matches the path `αβ` with `β*α*`, the unique composable
    /// reversal.
    pub fn koszul_dual(&self) -> Result<GradedAlgebra, AlgebraError> {
        if self.quiver.arrows.iter().any(|a| a.degree != 1) {
            return Err(AlgebraError::Unsupported(
                "arrows must all have degree one".into(),
            ));
        }
        let names: Vec<&str> = self.quiver.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(String, &str, &str)> = self
            .quiver
            .arrows
            .iter()
            .map(|a| {
                (
                    format!("{}*", a.name),
                    names[a.target],
                    names[a.source],
                )
            })
            .collect();
        let arrow_refs: Vec<(&str, &str, &str)> = arrows
            .iter()
            .map(|(n, s, t)| (n.as_str(), *s, *t))
            .collect();
        let quiver = Quiver::new(&names, &arrow_refs)?;
        let mut relations = Vec::new();
        for (i, x) in self.quiver.arrows.iter().enumerate() {
            for (j, y) in self.quiver.arrows.iter().enumerate() {
                // path x y exists in the original when source(x) = target(y)
                if x.source != y.target {
                    continue;
                }
                if !self.relations.contains(&[i, j]) {
                    // dual of the surviving path xy is y* x*, which becomes a relation
                    relations.push([j, i]);
                }
            }
        }
        let max_len = self.basis.iter().map(|p| p.arrows.len()).max().unwrap_or(0);
        Self::from_indices(
            &format!("{}!", self.name),
            quiver,
            relations,
            max_len.max(DEFAULT_MAX_LENGTH),
        )
    }

    pub fn to_fixture(&self) -> AlgebraFixture {
        AlgebraFixture {
            name: self.name.clone(),
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| FixtureArrow {
                    name: a.name.clone(),
                    source: self.quiver.vertices[a.source].clone(),
                    target: self.quiver.vertices[a.target].clone(),
                    degree: a.degree,
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&a| self.quiver.arrows[a].name.clone())
                        .collect()
                })
                .collect(),
            aliases: self
                .aliases
                .iter()
                .map(|(&i, a)| {
                    let p = &self.basis[i];
                    let word = p
                        .arrows
                        .iter()
                        .map(|&x| self.quiver.arrows[x].name.as_str())
                        .collect();
                    (a.clone(), word)
                })
                .collect(),
            graded_dimensions: Some(self.graded_dimensions()),
        }
    }
}

fn split_coefficient(chunk: &str) -> (Option<String>, &str) {
    if let Some(rest) = chunk.strip_prefix('(') {
        if let Some(close) = rest.find(')') {
            let inner = &rest[..close];
            if inner.chars().all(|c| c.is_ascii_digit() || c == '/') {
                return (Some(inner.to_string()), &rest[close + 1..]);
            }
        }
    }
    let end = chunk
        .find(|c: char| !(c.is_ascii_digit() || c == '/'))
        .unwrap_or(chunk.len());
    if end == 0 {
        (None, chunk)
    } else {
        (Some(chunk[..end].to_string()), &chunk[end..])
    }
}

/// Element of a graded algebra as a finitely supported combination of basis
/// paths. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    pub terms: BTreeMap<usize, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::scalar_basis(i, Rational::one())
    }

    pub fn scalar_basis(i: usize, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(i, c);
        e
    }

    pub fn add_term(&mut self, i: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(i).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.terms.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&i, v) in &self.terms {
            out.add_term(i, v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, v) in &other.terms {
            out.add_term(i, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }
}

/// Algebra homomorphism determined by images of vertices and arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl AlgebraMap {
    /// Image of a basis path; arrows go to arrows, so paths go to paths.
    pub fn apply_basis(&self, src: &GradedAlgebra, dst: &GradedAlgebra, i: usize) -> Option<usize> {
        let p = src.path(i);
        let q = Path {
            source: self.vertex_map[p.source],
            target: self.vertex_map[p.target],
            arrows: p.arrows.iter().map(|&a| self.arrow_map[a]).collect(),
        };
        dst.index_of(&q)
    }

    pub fn apply(&self, src: &GradedAlgebra, dst: &GradedAlgebra, x: &Element) -> Element {
        let mut out = Element::zero();
        for (&i, c) in &x.terms {
            if let Some(j) = self.apply_basis(src, dst, i) {
                out.add_term(j, c.clone());
            }
        }
        out
    }

    /// Checks bijectivity on bases, degree preservation and multiplicativity
    /// on every pair of basis paths.
    pub fn check_isomorphism(&self, src: &GradedAlgebra, dst: &GradedAlgebra) -> Result<(), AlgebraError> {
        if src.dim() != dst.dim() {
            return Err(AlgebraError::NotIsomorphism("dimensions differ".into()));
        }
        let mut seen = vec![false; dst.dim()];
        for i in 0..src.dim() {
            let j = self.apply_basis(src, dst, i).ok_or_else(|| {
                AlgebraError::NotIsomorphism(format!("{} maps to zero", src.basis_name(i)))
            })?;
            if src.degree(i) != dst.degree(j) {
                return Err(AlgebraError::NotIsomorphism(format!(
                    "{} changes degree",
                    src.basis_name(i)
                )));
            }
            if std::mem::replace(&mut seen[j], true) {
                return Err(AlgebraError::NotIsomorphism("not injective".into()));
            }
        }
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = src
                    .mul_basis(i, j)
                    .and_then(|k| self.apply_basis(src, dst, k));
                let rhs = dst.mul_basis(
                    self.apply_basis(src, dst, i).unwrap(),
                    self.apply_basis(src, dst, j).unwrap(),
                );
                if lhs != rhs {
                    return Err(AlgebraError::NotIsomorphism(format!(
                        "product {}·{} not preserved",
                        src.basis_name(i),
                        src.basis_name(j)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The zig-zag algebra `B`: vertices 1, 2, arrows `a: 1 → 2`, `b: 2 → 1`,
/// relation `ba = 0`, with `c = ab` the loop at vertex 2.
pub fn zigzag() -> GradedAlgebra {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).expect("valid quiver");
    GradedAlgebra::build("B", q, &[("b", "a")], DEFAULT_MAX_LENGTH)
        .and_then(|b| b.with_alias("ab", "c"))
        .expect("zig-zag algebra")
}

/// `C = ℂ[x]/(x²)` with `x` in degree 2, the endomorphism algebra of `P(2)`.
pub fn dual_numbers() -> GradedAlgebra {
    let q = Quiver::weighted(&["*"], &[("x", "*", "*", 2)]).expect("valid quiver");
    GradedAlgebra::build("C", q, &[("x", "x")], DEFAULT_MAX_LENGTH).expect("dual numbers")
}

/// The isomorphism `B → B^!` swapping the vertices and sending each arrow to
/// its starred partner.
pub fn zigzag_phi(b: &GradedAlgebra, dual: &GradedAlgebra) -> Result<AlgebraMap, AlgebraError> {
    let vertex_map = vec![dual.quiver.vertex("2")?, dual.quiver.vertex("1")?];
    let arrow_map = b
        .quiver
        .arrows
        .iter()
        .map(|a| dual.quiver.arrow(&format!("{}*", a.name)))
        .collect::<Result<Vec<_>, _>>()?;
    let phi = AlgebraMap {
        vertex_map,
        arrow_map,
    };
    phi.check_isomorphism(b, dual)?;
    Ok(phi)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureArrow {
    pub name: String,
    pub source: String,
    pub target: String,
    #[serde(default = "unit_degree")]
    pub degree: i32,
}

fn unit_degree() -> i32 {
    1
}

/// On-disk description of an algebra: quiver, relations (as arrow-name
/// words), optional display aliases and the expected graded dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFixture {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<FixtureArrow>,
    pub relations: Vec<Vec<String>>,
    #[serde(default)]
    pub aliases: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graded_dimensions: Option<Vec<usize>>,
}

impl AlgebraFixture {
    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture serializes")
    }

    /// Builds the algebra and checks the recorded graded dimensions.
    pub fn build(&self) -> Result<GradedAlgebra, AlgebraError> {
        let vs: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str, i32)> = self
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str(), a.degree))
            .collect();
        let q = Quiver::weighted(&vs, &arrows)?;
        let mut rels = Vec::new();
        for r in &self.relations {
            match r.as_slice() {
                [x, y] => rels.push((x.as_str(), y.as_str())),
                _ => return Err(AlgebraError::BadRelation(r.concat())),
            }
        }
        let mut alg = GradedAlgebra::build(&self.name, q, &rels, DEFAULT_MAX_LENGTH)?;
        for (alias, word) in &self.aliases {
            alg = alg.with_alias(word, alias)?;
        }
        if let Some(dims) = &self.graded_dimensions {
            if &alg.graded_dimensions() != dims {
                return Err(AlgebraError::Unsupported(format!(
                    "graded dimensions {:?} differ from recorded {:?}",
                    alg.graded_dimensions(),
                    dims
                )));
            }
        }
        Ok(alg)
    }
}

impl fmt::Display for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.dim()).map(|i| self.basis_name(i)).collect();
        write!(
            f,
            "{} (graded dimensions {:?}; basis {})",
            self.name,
            self.graded_dimensions(),
            names.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zigzag_basis_and_products() {
        let b = zigzag();
        assert_eq!(b.graded_dimensions(), vec![2, 2, 1]);
        let (a, bb, c) = (
            b.parse_path("a").unwrap(),
            b.parse_path("b").unwrap(),
            b.parse_path("c").unwrap(),
        );
        assert_eq!(b.mul_basis(a, bb), Some(c));
        assert_eq!(b.mul_basis(bb, a), None);
        assert_eq!(b.mul_basis(0, 0), Some(0));
        assert_eq!(b.basis_name(c), "c");
        assert_eq!(b.path(a).source, 0);
        assert_eq!(b.path(a).target, 1);
    }

    #[test]
    fn parse_and_display_elements() {
        let b = zigzag();
        let x = b.parse_element("e(2) - 2c + (1/2)b").unwrap();
        assert_eq!(b.display(&x), "e(2) + (1/2)b - 2c");
        assert_eq!(b.parse_element("ab").unwrap(), b.parse_element("c").unwrap());
        assert!(b.parse_element("ba").is_err());
        assert!(b.parse_element("z").is_err());
    }

    #[test]
    fn trivial_quiver_is_ground_field() {
        let q = Quiver::new(&["1"], &[]).unwrap();
        let k = GradedAlgebra::build("k", q, &[], 4).unwrap();
        assert_eq!(k.graded_dimensions(), vec![1]);
    }

    #[test]
    fn bad_relation_and_infinite_algebra() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        assert!(matches!(
            GradedAlgebra::build("x", q.clone(), &[("a", "a")], 4),
            Err(AlgebraError::BadRelation(_))
        ));
        assert!(matches!(
            GradedAlgebra::build("x", q, &[], 4),
            Err(AlgebraError::NotFinite(_))
        ));
    }

    #[test]
    fn dual_and_phi() {
        let b = zigzag();
        let d = b.koszul_dual().unwrap();
        assert_eq!(d.graded_dimensions(), vec![2, 2, 1]);
        let phi = zigzag_phi(&b, &d).unwrap();
        let a = b.parse_element("a").unwrap();
        assert_eq!(d.display(&phi.apply(&b, &d, &a)), "a*");
        let c = b.parse_element("c").unwrap();
        assert_eq!(d.display(&phi.apply(&b, &d, &c)), "a*b*");
        assert_eq!(d.relations.len(), 1);
        assert_eq!(d.basis_name(d.parse_path("a*b*").unwrap()), "a*b*");
        assert!(d.parse_path("b*a*").is_err());
    }

    #[test]
    fn dual_numbers_grading() {
        let c = dual_numbers();
        assert_eq!(c.graded_dimensions(), vec![1, 0, 1]);
    }

    #[test]
    fn fixture_round_trip() {
        let fx = zigzag().to_fixture();
        let json = fx.to_json();
        let back = AlgebraFixture::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.build().unwrap(), zigzag());
    }
}
