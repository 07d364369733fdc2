//! A small expression language for building complexes at the command line.
//!
//! ```text
//! expr    := atom postfix*
//! atom    := P(v) | L(v) | I(2)              standard modules, v in {1, 2}
//!          | D(expr) | P(expr) | CK(expr)    the functors 𝔻, ℙ and ℂ𝕂
//!          | (expr)
//! postfix := <r> | [s]                       internal and homological shift
//! ```
//!
//! `P(1)` is the projective module; `P(P(1))` applies the functor. The
//! symbols `𝔻`, `ℙ` and `ℂ𝕂` are accepted as spellings of `D`, `P` and `CK`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::GradedAlgebra;
use crate::complex::ModComplex;
use crate::decat::{euler_exact, expansion_for, Basis, KClass, RationalClass};
use crate::functors::{ck_on_object, koszul_d, koszul_d_proj, p_on_object};
use crate::module::GradedModule;
use crate::proj::{ComplexError, ProjComplex};
use crate::reduce::gaussian_reduce;
use crate::resolution::resolve;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Projective(usize),
    Simple(usize),
    Injective,
    Dual(Box<Expr>),
    Projector(Box<Expr>),
    Ck(Box<Expr>),
    Shift { inner: Box<Expr>, internal: i32, homological: i32 },
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Projective(v) => write!(f, "P({})", v + 1),
            Expr::Simple(v) => write!(f, "L({})", v + 1),
            Expr::Injective => write!(f, "I(2)"),
            Expr::Dual(e) => write!(f, "D({e})"),
            Expr::Projector(e) => write!(f, "P({e})"),
            Expr::Ck(e) => write!(f, "CK({e})"),
            Expr::Shift { inner, internal, homological } => {
                write!(f, "{inner}")?;
                if *internal != 0 {
                    write!(f, "<{internal}>")?;
                }
                if *homological != 0 {
                    write!(f, "[{homological}]")?;
                }
                Ok(())
            }
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            match self.peek() {
                Some(c) => self.error(format!("expected `{s}`, found `{c}`")),
                None => self.error(format!("expected `{s}`, found end of input")),
            }
        }
    }

    fn integer(&mut self) -> Result<i32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-' | '+' | '−')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return self.error("expected an integer");
        }
        let text: String = self.chars[start..self.pos].iter().map(|&c| if c == '−' { '-' } else { c }).collect();
        text.parse().or_else(|_| {
            self.pos = start;
            self.error("integer out of range")
        })
    }

    /// A vertex label `1` or `2` if one comes next, followed by `)`.
    fn vertex_argument(&mut self) -> Result<Option<usize>, ParseError> {
        let save = self.pos;
        self.skip_ws();
        let at = self.pos;
        match self.chars.get(self.pos) {
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                if self.peek() != Some(')') {
                    self.pos = save;
                    return Ok(None);
                }
                if !(1..=2).contains(&v) {
                    self.pos = at;
                    return self.error(format!("vertex must be 1 or 2, got {v}"));
                }
                Ok(Some(v as usize - 1))
            }
            _ => Ok(None),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.atom()?;
        loop {
            if self.eat("<") || self.eat("⟨") {
                let r = self.integer()?;
                if !self.eat("⟩") {
                    self.expect(">")?;
                }
                e = shift(e, r, 0);
            } else if self.eat("[") {
                let s = self.integer()?;
                self.expect("]")?;
                e = shift(e, 0, s);
            } else {
                return Ok(e);
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        if self.eat("CK") || self.eat("ℂ𝕂") {
            return Ok(Expr::Ck(Box::new(self.argument()?)));
        }
        if self.eat("D") || self.eat("𝔻") {
            return Ok(Expr::Dual(Box::new(self.argument()?)));
        }
        if self.eat("ℙ") {
            return Ok(Expr::Projector(Box::new(self.argument()?)));
        }
        if self.eat("P") {
            self.expect("(")?;
            if let Some(v) = self.vertex_argument()? {
                self.expect(")")?;
                return Ok(Expr::Projective(v));
            }
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(Expr::Projector(Box::new(e)));
        }
        if self.eat("L") {
            self.expect("(")?;
            let Some(v) = self.vertex_argument()? else {
                return self.error("expected vertex 1 or 2");
            };
            self.expect(")")?;
            return Ok(Expr::Simple(v));
        }
        if self.eat("I") {
            self.expect("(")?;
            self.skip_ws();
            let at = self.pos;
            let v = self.integer()?;
            if v != 2 {
                self.pos = at;
                return self.error("only I(2) is available");
            }
            self.expect(")")?;
            return Ok(Expr::Injective);
        }
        self.pos = start;
        match self.peek() {
            Some(c) => self.error(format!("unexpected `{c}`")),
            None => self.error("unexpected end of input"),
        }
    }

    fn argument(&mut self) -> Result<Expr, ParseError> {
        self.expect("(")?;
        let e = self.expr()?;
        self.expect(")")?;
        Ok(e)
    }
}

fn shift(e: Expr, r: i32, s: i32) -> Expr {
    let (inner, internal, homological) = match e {
        Expr::Shift { inner, internal, homological } => (inner, internal + r, homological + s),
        e => (Box::new(e), r, s),
    };
    if internal == 0 && homological == 0 {
        *inner
    } else {
        Expr::Shift { inner, internal, homological }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.error(format!("unexpected `{c}` after expression"));
    }
    Ok(e)
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("reduction failed: {0}")]
    Reduce(String),
}

/// Either a complex of modules or of projectives.
#[derive(Clone, Debug)]
pub enum Value {
    Modules(ModComplex),
    Projectives(ProjComplex),
}

impl Value {
    fn shift(&self, r: i32, s: i32) -> Value {
        match self {
            Value::Modules(m) => Value::Modules(m.shift(r, s)),
            Value::Projectives(p) => Value::Projectives(p.shift(r, s)),
        }
    }

    /// The complex itself, or a projective resolution truncated `depth` below its span.
    pub fn into_projective(self, depth: usize) -> Result<ProjComplex, ComplexError> {
        match self {
            Value::Projectives(p) => Ok(p),
            Value::Modules(m) => {
                let lo = m.span().map_or(0, |s| s.0);
                Ok(resolve(&m, lo - depth as i32)?.complex)
            }
        }
    }
}

pub fn evaluate(b: &Arc<GradedAlgebra>, e: &Expr, depth: usize) -> Result<Value, EvalError> {
    let single = |m: GradedModule| Value::Modules(ModComplex::single(&m, 0));
    Ok(match e {
        Expr::Projective(v) => single(GradedModule::projective(b, *v)),
        Expr::Simple(v) => single(GradedModule::simple(b, *v)),
        Expr::Injective => single(GradedModule::injective2(b)),
        Expr::Shift { inner, internal, homological } => evaluate(b, inner, depth)?.shift(*internal, *homological),
        Expr::Dual(x) => Value::Projectives(match evaluate(b, x, depth)? {
            Value::Modules(m) => koszul_d(&m)?,
            Value::Projectives(p) => koszul_d_proj(&p)?,
        }),
        Expr::Projector(x) => {
            let p = evaluate(b, x, depth)?.into_projective(depth)?;
            Value::Projectives(p_on_object(&p, depth + 1)?.complex)
        }
        Expr::Ck(x) => {
            let p = evaluate(b, x, depth)?.into_projective(depth)?;
            Value::Projectives(ck_on_object(&p, depth + 1)?.1)
        }
    })
}

/// Everything `jwcat eval` prints.
#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub expression: String,
    pub raw: String,
    pub reduced: String,
    pub minimal: bool,
    pub class_projective: Option<String>,
    pub class_simple: Option<String>,
    pub expansion: Option<String>,
    pub note: Option<String>,
}

fn render_class(b: &Arc<GradedAlgebra>, c: &RationalClass, basis: Basis) -> Option<String> {
    c.to_basis(b, basis).ok().map(|c| c.render(b))
}

/// Parses, evaluates, reduces and decategorifies `input`.
pub fn eval_str(b: &Arc<GradedAlgebra>, input: &str, depth: usize, order: i32) -> Result<Evaluation, EvalError> {
    let e = parse(input)?;
    let x = evaluate(b, &e, depth)?.into_projective(depth)?;
    let r = gaussian_reduce(&x, false).map_err(|e| EvalError::Reduce(e.to_string()))?;
    let (class, note) = match euler_exact(&r.reduced) {
        Ok((c, _)) => (Some(c), None),
        Err(err) => (None, Some(format!("no Euler class: {err}"))),
    };
    let expansion: Option<KClass> = class.as_ref().and_then(|c| {
        c.to_basis(b, Basis::Simple)
            .and_then(|c| c.expand(expansion_for(x.regime), order))
            .ok()
    });
    Ok(Evaluation {
        expression: e.to_string(),
        raw: x.to_string(),
        reduced: r.reduced.to_string(),
        minimal: r.reduced.is_minimal(),
        class_projective: class.as_ref().and_then(|c| render_class(b, c, Basis::Projective)),
        class_simple: class.as_ref().and_then(|c| render_class(b, c, Basis::Simple)),
        expansion: expansion.map(|k| k.to_string()),
        note,
    })
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "expression: {}", self.expression)?;
        writeln!(f, "complex:\n  {}", self.raw.replace('\n', "\n  "))?;
        writeln!(
            f,
            "reduced{}:\n  {}",
            if self.minimal { " (minimal)" } else { "" },
            self.reduced.replace('\n', "\n  ")
        )?;
        if let Some(c) = &self.class_projective {
            writeln!(f, "class (projective basis): {c}")?;
        }
        if let Some(c) = &self.class_simple {
            writeln!(f, "class (simple basis): {c}")?;
        }
        if let Some(c) = &self.expansion {
            writeln!(f, "expansion: {c}")?;
        }
        if let Some(n) = &self.note {
            writeln!(f, "{n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::zigzag_arc;
    use proptest::prelude::*;

    #[test]
    fn parses_vertices_and_functors() {
        assert_eq!(parse("P(1)").unwrap(), Expr::Projective(0));
        assert_eq!(parse("P(P(1))").unwrap(), Expr::Projector(Box::new(Expr::Projective(0))));
        assert_eq!(
            parse("D(L(2))<3>[-1]").unwrap(),
            Expr::Shift {
                inner: Box::new(Expr::Dual(Box::new(Expr::Simple(1)))),
                internal: 3,
                homological: -1
            }
        );
        assert_eq!(parse("ℂ𝕂(𝔻(P(2)))").unwrap(), parse("CK(D(P(2)))").unwrap());
        assert_eq!(parse(" I( 2 ) ").unwrap(), Expr::Injective);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("P(3)").unwrap_err().position, 2);
        assert_eq!(parse("D(L(1)").unwrap_err().position, 6);
        assert_eq!(parse("X").unwrap_err().position, 0);
        assert_eq!(parse("P(1)<x>").unwrap_err().position, 5);
        assert_eq!(parse("P(1) P(2)").unwrap_err().position, 5);
        assert_eq!(parse("I(1)").unwrap_err().position, 2);
    }

    #[test]
    fn dual_of_simple_is_projective() {
        let b = zigzag_arc();
        let ev = eval_str(&b, "D(L(1))", 4, 5).unwrap();
        let want = RationalClass::basis_element(&b, Basis::Projective, 1, 0);
        assert_eq!(ev.class_projective, render_class(&b, &want, Basis::Projective), "{ev}");
        assert!(ev.minimal);
    }

    #[test]
    fn projector_on_p1_has_jones_wenzl_class() {
        let b = zigzag_arc();
        let ev = eval_str(&b, "P(P(1))", 6, 9).unwrap();
        let want = crate::decat::apply_p2(&b, &RationalClass::basis_element(&b, Basis::Projective, 0, 0)).unwrap();
        assert_eq!(ev.class_projective, render_class(&b, &want, Basis::Projective));
    }

    proptest! {
        #[test]
        fn display_round_trips(r in -5i32..5, s in -5i32..5, f in 0usize..3, v in 0usize..2) {
            let base = if v == 0 { "P(1)" } else { "L(2)" };
            let src = match f { 0 => format!("D({base})<{r}>[{s}]"), 1 => format!("CK({base}[{s}])"), _ => format!("P({base}<{r}>)") };
            let e = parse(&src).unwrap();
            prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }
}
