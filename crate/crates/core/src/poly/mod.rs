//! Sparse multivariate polynomials over a [`Scalar`] field.
//!
//! A [`Poly`] always lives in a declared [`VarContext`]; arithmetic between
//! polynomials of different contexts is an error. Terms are kept in a
//! `BTreeMap` keyed by [`Mono`], whose order is graded lexicographic: total
//! degree first, then the exponent vectors compared lexicographically in the
//! declared variable order.

mod json;
pub mod parse;
mod vfield;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::scalar::Scalar;

pub use json::{PolyJson, TermJson};
pub use parse::{parse_poly, parse_with_assignments, ParseError};
pub use vfield::VField;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("context mismatch: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },
    #[error("variable `{0}` is not in the context")]
    UnknownVariable(String),
    #[error("variable `{0}` has no image in the substitution")]
    Unmapped(String),
    #[error("duplicate variable `{0}` in context")]
    DuplicateVariable(String),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
}

/// Ordered variable names, optionally with positive integer weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
    weights: Option<Vec<u32>>,
}

pub type Ctx = Arc<VarContext>;

impl VarContext {
    pub fn new<I, T>(names: I) -> Result<Ctx, PolyError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VarContext { names, weights: None }))
    }

    pub fn weighted<I, T>(names: I, weights: Vec<u32>) -> Result<Ctx, PolyError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let base = Self::new(names)?;
        if weights.len() != base.names.len() {
            return Err(PolyError::WeightCount {
                expected: base.names.len(),
                got: weights.len(),
            });
        }
        Ok(Arc::new(VarContext {
            names: base.names.clone(),
            weights: Some(weights),
        }))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn describe(&self) -> String {
        self.names.join(",")
    }
}

/// Exponent vector, one entry per context variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(Vec<u32>);

impl Mono {
    pub fn new(exps: Vec<u32>) -> Self {
        Mono(exps)
    }

    pub fn one(arity: usize) -> Self {
        Mono(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Mono(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Mono) -> Mono {
        Mono(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    /// All monomials in `arity` variables of exactly the given total degree,
    /// in ascending order.
    pub fn all_of_degree(arity: usize, degree: u32) -> Vec<Mono> {
        fn rec(arity: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Mono>) {
            if prefix.len() + 1 == arity {
                prefix.push(left);
                out.push(Mono(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=left {
                prefix.push(e);
                rec(arity, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if arity == 0 {
            if degree == 0 {
                out.push(Mono(Vec::new()));
            }
            return out;
        }
        rec(arity, degree, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Renders the monomial with the given names, e.g. `u^2*w`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (e, n) in self.0.iter().zip(names) {
            match e {
                0 => {}
                1 => parts.push(n.clone()),
                e => parts.push(format!("{n}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with coefficients in `S` over a fixed variable context.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    ctx: Ctx,
    terms: BTreeMap<Mono, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(ctx: &Ctx) -> Self {
        Poly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Ctx, c: S) -> Self {
        Self::monomial(ctx, Mono::one(ctx.arity()), c)
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, S::one())
    }

    pub fn monomial(ctx: &Ctx, mono: Mono, c: S) -> Self {
        assert_eq!(mono.arity(), ctx.arity(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Poly {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn var(ctx: &Ctx, name: &str) -> Result<Self, PolyError> {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ctx, i))
    }

    pub fn var_at(ctx: &Ctx, index: usize) -> Self {
        Self::monomial(ctx, Mono::var(ctx.arity(), index), S::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(ctx: &Ctx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Mono, S)>,
    {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            assert_eq!(m.arity(), ctx.arity(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &S)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&Mono::one(self.ctx.arity()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Mono::is_one)
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    /// Lowest total degree of a nonzero term.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Mono::degree)
    }

    /// Highest exponent of variable `index`.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.0[index]).max().unwrap_or(0)
    }

    /// Lowest exponent of variable `index` (0 for the zero polynomial).
    pub fn low_degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.0[index]).min().unwrap_or(0)
    }

    /// The coefficient of `x_index^power`, as a polynomial free of `x_index`.
    pub fn coefficient_in(&self, index: usize, power: u32) -> Self {
        Self::from_terms(
            &self.ctx,
            self.terms.iter().filter(|(m, _)| m.0[index] == power).map(|(m, c)| {
                let mut e = m.0.clone();
                e[index] = 0;
                (Mono(e), c.clone())
            }),
        )
    }

    pub fn leading_term(&self) -> Option<(&Mono, &S)> {
        self.terms.iter().next_back()
    }

    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The nonzero homogeneous component of least degree (the tangent cone of
    /// a hypersurface at the origin).
    pub fn lowest_homogeneous_part(&self) -> Self {
        match self.low_degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    /// Drops every term of total degree above `max_degree`.
    pub fn truncated(&self, max_degree: u32) -> Self {
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_ctx(&self, other: &Self) -> Result<(), PolyError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch {
                left: self.ctx.describe(),
                right: other.ctx.describe(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        let mut out = Self::zero(&self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_mono(&self, mono: &Mono) -> Self {
        Poly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, index: usize) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[index] -= 1;
            out.add_term(m2, c.clone() * S::from_i64(e as i64));
        }
        out
    }

    pub fn derivative_by(&self, name: &str) -> Result<Self, PolyError> {
        let i = self
            .ctx
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.derivative(i))
    }

    /// Substitutes `images[i]` for the i-th context variable. All images must
    /// share one target context.
    pub fn compose(&self, images: &[Poly<S>]) -> Result<Self, PolyError> {
        if images.len() != self.ctx.arity() {
            return Err(PolyError::ImageCount {
                expected: self.ctx.arity(),
                got: images.len(),
            });
        }
        let Some(first) = images.first() else {
            // Nullary context: only a constant can live here.
            return Err(PolyError::ImageCount { expected: 1, got: 0 });
        };
        let target = first.ctx.clone();
        for img in images {
            first.check_ctx(img)?;
        }
        let powers: Vec<Vec<Poly<S>>> = images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let top = self.degree_in(i) as usize;
                let mut v = Vec::with_capacity(top + 1);
                v.push(Self::one(&target));
                for k in 1..=top {
                    let next = &v[k - 1] * img;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            for (mm, cc) in term.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Substitution by variable name. Every variable of `self` must be mapped.
    pub fn substitute(&self, map: &HashMap<String, Poly<S>>) -> Result<Self, PolyError> {
        let images = self
            .ctx
            .names()
            .iter()
            .map(|n| map.get(n).cloned().ok_or_else(|| PolyError::Unmapped(n.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        self.compose(&images)
    }

    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.ctx.arity(), "point arity");
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Exact multivariate division. `Ok(None)` means `d` does not divide
    /// `self`.
    pub fn exact_divide(&self, d: &Self) -> Result<Option<Self>, PolyError> {
        self.check_ctx(d)?;
        let Some((dm, dc)) = d.leading_term() else {
            return Err(PolyError::DivisionByZero);
        };
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ctx);
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return Ok(None);
            }
            let t = Self::monomial(&self.ctx, dm.quotient_of(rm), rc.clone() / dc.clone());
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Ok(Some(quot))
    }

    /// Same terms, reinterpreted in another context of equal arity.
    pub fn with_context(&self, ctx: &Ctx) -> Self {
        assert_eq!(ctx.arity(), self.ctx.arity(), "context arity");
        Poly {
            ctx: ctx.clone(),
            terms: self.terms.clone(),
        }
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::from_terms(&self.ctx, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Embeds into a larger context, matching variables by name.
    pub fn embed(&self, ctx: &Ctx) -> Result<Self, PolyError> {
        let positions = self
            .ctx
            .names()
            .iter()
            .map(|n| ctx.index_of(n).ok_or_else(|| PolyError::UnknownVariable(n.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_terms(
            ctx,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; ctx.arity()];
                for (k, &p) in positions.iter().enumerate() {
                    e[p] = m.0[k];
                }
                (Mono(e), c.clone())
            }),
        ))
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: Self) -> Poly<S> {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: Self) -> Poly<S> {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: Self) -> Poly<S> {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.ctx.names();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", m.display_with(names))?;
            } else {
                write!(f, "{mag}*{}", m.display_with(names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, Rational};

    fn uvw() -> Ctx {
        VarContext::weighted(["u", "v", "w"], vec![2, 3, 4]).unwrap()
    }

    fn p(ctx: &Ctx, s: &str) -> QPoly {
        parse_poly(ctx, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let c = uvw();
        assert_eq!(&p(&c, "u+v") * &p(&c, "u-v"), p(&c, "u^2-v^2"));
    }

    #[test]
    fn zero_absorbs() {
        let c = uvw();
        let z = QPoly::zero(&c);
        assert!((&z * &p(&c, "u^3 + 7*v*w")).is_zero());
    }

    #[test]
    fn hand_expansion() {
        let c = uvw();
        assert_eq!(&p(&c, "4*w - u^2") * &p(&c, "u"), p(&c, "4*u*w - u^3"));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = p(&uvw(), "u");
        let xy = VarContext::new(["x", "y"]).unwrap();
        let b = p(&xy, "x");
        assert!(matches!(a.checked_add(&b), Err(PolyError::ContextMismatch { .. })));
    }

    #[test]
    fn substitution_into_source() {
        let c = VarContext::new(["u", "v", "a"]).unwrap();
        let xy = VarContext::new(["x", "y", "a"]).unwrap();
        let g = p(&c, "v + a*u^2");
        let map: HashMap<String, QPoly> = [
            ("u".to_string(), p(&xy, "x")),
            ("v".to_string(), p(&xy, "-4*y^3 - 2*x*y")),
            ("a".to_string(), p(&xy, "a")),
        ]
        .into_iter()
        .collect();
        let out = g.substitute(&map).unwrap();
        assert_eq!(out, p(&xy, "-4*y^3 - 2*x*y + a*x^2"));
        let at_one = out.compose(&[p(&xy, "x"), p(&xy, "y"), QPoly::one(&xy)]).unwrap();
        assert_eq!(at_one, p(&xy, "-4*y^3 - 2*x*y + x^2"));
    }

    #[test]
    fn identity_substitution() {
        let c = uvw();
        let g = p(&c, "16*u^4*w - 4*u^3*v^2 + 3");
        let ids: Vec<QPoly> = (0..3).map(|i| QPoly::var_at(&c, i)).collect();
        assert_eq!(g.compose(&ids).unwrap(), g);
    }

    #[test]
    fn unmapped_variable() {
        let c = uvw();
        let map: HashMap<String, QPoly> = [("u".to_string(), p(&c, "u"))].into_iter().collect();
        assert_eq!(p(&c, "u+v").substitute(&map), Err(PolyError::Unmapped("v".into())));
    }

    #[test]
    fn division() {
        let c = uvw();
        let z = QPoly::zero(&c);
        let d = p(&c, "u + w^2");
        assert_eq!(z.exact_divide(&d).unwrap(), Some(z.clone()));
        assert_eq!(p(&c, "u").exact_divide(&p(&c, "v")).unwrap(), None);
        assert_eq!(p(&c, "u").exact_divide(&z), Err(PolyError::DivisionByZero));
        let q = p(&c, "3*u*v - 1/2*w");
        assert_eq!((&q * &d).exact_divide(&d).unwrap(), Some(q));
    }

    #[test]
    fn display_orders_terms_descending() {
        let c = uvw();
        let h = p(
            &c,
            "256*w^3 - 27*v^4 + 144*u*v^2*w - 128*u^2*w^2 - 4*u^3*v^2 + 16*u^4*w",
        );
        assert_eq!(
            h.to_string(),
            "16*u^4*w - 4*u^3*v^2 - 128*u^2*w^2 + 144*u*v^2*w - 27*v^4 + 256*w^3"
        );
        assert_eq!(p(&c, "-u + 1/2").to_string(), "-u + 1/2");
    }

    #[test]
    fn monomial_order_is_graded_then_lex() {
        let mut all = Mono::all_of_degree(3, 2);
        all.sort();
        let shown: Vec<String> = all.iter().map(|m| m.display_with(uvw().names())).collect();
        assert_eq!(shown, ["w^2", "v*w", "v^2", "u*w", "u*v", "u^2"]);
        assert!(Mono::new(vec![0, 0, 1]) < Mono::new(vec![2, 0, 0]));
        assert_eq!(Mono::new(vec![1, 1, 1]).weighted_degree(&[2, 3, 4]), 9);
    }

    #[test]
    fn lowest_part() {
        let c = uvw();
        assert_eq!(p(&c, "u + v^2").lowest_homogeneous_part(), p(&c, "u"));
        let r: Rational = Rational::from_integer(2.into());
        assert_eq!(p(&c, "u").scale(&r), p(&c, "2*u"));
    }

    #[test]
    fn coefficients_in_a_variable() {
        let c = uvw();
        let q = p(&c, "u^2*v + 3*v - w*u^2 + 1");
        assert_eq!(q.coefficient_in(0, 2), p(&c, "v - w"));
        assert_eq!(q.coefficient_in(0, 0), p(&c, "3*v + 1"));
        assert_eq!(q.coefficient_in(0, 1), Poly::zero(&c));
        assert_eq!(q.low_degree_in(0), 0);
        assert_eq!(p(&c, "u*v + u^3").low_degree_in(0), 1);
    }

    #[test]
    fn embed_matches_names() {
        let c = uvw();
        let big = VarContext::new(["u", "v", "w", "a1", "a2"]).unwrap();
        let e = p(&c, "u*w^2").embed(&big).unwrap();
        assert_eq!(e, p(&big, "u*w^2"));
    }
}
