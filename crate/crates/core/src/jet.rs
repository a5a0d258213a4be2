//! Linear algebra in truncated jet spaces `𝓜/𝓜^{N+1}`.
//!
//! A [`JetBasis`] indexes every monomial of total degree `1..=N`; a [`Span`]
//! is a subspace of that coordinate space kept in reduced row echelon form.
//!
//! Columns are ordered by ascending [`Mono`] order, so the pivot of a row is
//! its lowest-degree term (ties broken toward fewer powers of the first
//! variable). The monomials that never become pivots are the standard
//! monomials of the subspace for this local ordering, and they are what
//! [`Span::quotient_basis`] reports.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::poly::{Ctx, Mono, Poly};
use crate::scalar::{format_rational, Scalar};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JetError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("spans live in different jet bases")]
    BasisMismatch,
    #[error("subspace is not contained in the ambient span")]
    NotSubspace,
    #[error("monomial {0} is not in the ambient span; quotient has no monomial basis here")]
    NoMonomialComplement(String),
    #[error("polynomial context does not match the jet basis")]
    ContextMismatch,
}

/// All monomials of degree `1..=order` in a context, in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetBasis {
    ctx: Ctx,
    order: u32,
    monos: Vec<Mono>,
    index: HashMap<Mono, usize>,
}

impl JetBasis {
    pub fn new(ctx: &Ctx, order: u32) -> Arc<Self> {
        let monos: Vec<Mono> = (1..=order).flat_map(|d| Mono::all_of_degree(ctx.arity(), d)).collect();
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Arc::new(JetBasis {
            ctx: ctx.clone(),
            order,
            monos,
            index,
        })
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monos(&self) -> &[Mono] {
        &self.monos
    }

    pub fn column_of(&self, m: &Mono) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coefficient vector of `p` in this basis. Terms above the order are
    /// dropped; a constant term is dropped too and reported.
    pub fn truncate<S: Scalar>(&self, p: &Poly<S>) -> Truncation<S> {
        let mut coeffs = vec![S::zero(); self.len()];
        let mut dropped_constant = false;
        for (m, c) in p.terms() {
            if m.is_one() {
                dropped_constant = true;
            } else if let Some(i) = self.column_of(m) {
                coeffs[i] = c.clone();
            }
        }
        Truncation {
            coeffs,
            dropped_constant,
        }
    }

    pub fn to_poly<S: Scalar>(&self, coeffs: &[S]) -> Poly<S> {
        Poly::from_terms(
            &self.ctx,
            self.monos
                .iter()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Truncation<S> {
    pub coeffs: Vec<S>,
    pub dropped_constant: bool,
}

/// A subspace of a jet space, in reduced row echelon form.
#[derive(Debug, Clone, PartialEq)]
pub struct Span<S> {
    basis: Arc<JetBasis>,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Span<S> {
    pub fn empty(basis: &Arc<JetBasis>) -> Self {
        Span {
            basis: basis.clone(),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole of `𝓜/𝓜^{N+1}`.
    pub fn full(basis: &Arc<JetBasis>) -> Self {
        let n = basis.len();
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![S::zero(); n];
                r[i] = S::one();
                r
            })
            .collect();
        Span {
            basis: basis.clone(),
            rows,
            pivots: (0..n).collect(),
        }
    }

    /// Span of the given monomials (those outside the basis are ignored).
    pub fn of_monomials<'a>(basis: &Arc<JetBasis>, monos: impl IntoIterator<Item = &'a Mono>) -> Self {
        let mut s = Self::empty(basis);
        for m in monos {
            if let Some(i) = basis.column_of(m) {
                let mut v = vec![S::zero(); basis.len()];
                v[i] = S::one();
                s.insert(v);
            }
        }
        s
    }

    /// `𝓜^d / 𝓜^{N+1}` restricted to exactly degree `d`.
    pub fn degree_slice(basis: &Arc<JetBasis>, degree: u32) -> Self {
        let monos = Mono::all_of_degree(basis.context().arity(), degree);
        Self::of_monomials(basis, &monos)
    }

    /// `𝓜^d / 𝓜^{N+1}`.
    pub fn power_of_maximal(basis: &Arc<JetBasis>, degree: u32) -> Self {
        let monos: Vec<Mono> = basis.monos().iter().filter(|m| m.degree() >= degree).cloned().collect();
        Self::of_monomials(basis, &monos)
    }

    pub fn from_polys<'a>(
        basis: &Arc<JetBasis>,
        polys: impl IntoIterator<Item = &'a Poly<S>>,
    ) -> Result<Self, JetError> {
        let mut s = Self::empty(basis);
        for p in polys {
            if p.context() != basis.context() {
                return Err(JetError::ContextMismatch);
            }
            s.insert(basis.truncate(p).coeffs);
        }
        Ok(s)
    }

    /// Truncated span of `{ m·g : g ∈ gens, deg m ≥ min_multiplier_degree }`.
    ///
    /// `min_multiplier_degree = 0` gives `𝓔·gens`, `1` gives `𝓜·gens`.
    pub fn module_span(gens: &[Poly<S>], min_multiplier_degree: u32, basis: &Arc<JetBasis>) -> Result<Self, JetError> {
        if gens.is_empty() {
            return Err(JetError::EmptyGenerators);
        }
        let arity = basis.context().arity();
        let order = basis.order();
        let mut s = Self::empty(basis);
        for g in gens {
            if g.context() != basis.context() {
                return Err(JetError::ContextMismatch);
            }
            let Some(low) = g.low_degree() else { continue };
            if low + min_multiplier_degree > order {
                continue;
            }
            for d in min_multiplier_degree..=(order - low) {
                for m in Mono::all_of_degree(arity, d) {
                    let mut v = vec![S::zero(); basis.len()];
                    for (gm, c) in g.terms() {
                        let prod = gm.mul(&m);
                        if prod.is_one() {
                            continue;
                        }
                        if let Some(i) = basis.column_of(&prod) {
                            v[i] = c.clone();
                        }
                    }
                    s.insert(v);
                }
            }
        }
        Ok(s)
    }

    pub fn basis(&self) -> &Arc<JetBasis> {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn pivot_monos(&self) -> Vec<Mono> {
        self.pivots.iter().map(|&p| self.basis.monos()[p].clone()).collect()
    }

    pub fn row_polys(&self) -> Vec<Poly<S>> {
        self.rows.iter().map(|r| self.basis.to_poly(r)).collect()
    }

    /// Remainder of `v` after elimination against the rows.
    pub fn reduce(&self, mut v: Vec<S>) -> Vec<S> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_negligible() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
            v[p] = S::zero();
        }
        for x in v.iter_mut() {
            if x.is_negligible() {
                *x = S::zero();
            }
        }
        v
    }

    pub fn contains_vector(&self, v: Vec<S>) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Membership of the truncation of `p` (constant term ignored).
    pub fn contains(&self, p: &Poly<S>) -> bool {
        self.contains_vector(self.basis.truncate(p).coeffs)
    }

    /// Adds a vector, keeping the rows in reduced row echelon form. Returns
    /// whether the rank grew.
    pub fn insert(&mut self, v: Vec<S>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() / lead.clone();
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
            row[p] = S::zero();
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn insert_poly(&mut self, p: &Poly<S>) -> bool {
        let v = self.basis.truncate(p).coeffs;
        self.insert(v)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, JetError> {
        if self.basis != other.basis {
            return Err(JetError::BasisMismatch);
        }
        Ok(self.rows.iter().all(|r| other.contains_vector(r.clone())))
    }

    pub fn sum(spans: &[Self]) -> Result<Self, JetError> {
        let first = spans.first().ok_or(JetError::EmptyGenerators)?;
        let mut out = first.clone();
        for s in &spans[1..] {
            if s.basis != first.basis {
                return Err(JetError::BasisMismatch);
            }
            for r in &s.rows {
                out.insert(r.clone());
            }
        }
        Ok(out)
    }

    /// Monomials whose classes form a basis of `ambient / sub`.
    ///
    /// These are the pivots of `ambient` that are not pivots of `sub`; each
    /// one is checked to lie in `ambient` itself.
    pub fn quotient_basis(ambient: &Self, sub: &Self) -> Result<Vec<Mono>, JetError> {
        if !sub.is_subspace_of(ambient)? {
            return Err(JetError::NotSubspace);
        }
        let mut out = Vec::new();
        for &p in &ambient.pivots {
            if sub.pivots.binary_search(&p).is_ok() {
                continue;
            }
            let mut e = vec![S::zero(); ambient.basis.len()];
            e[p] = S::one();
            let m = ambient.basis.monos()[p].clone();
            if !ambient.contains_vector(e) {
                return Err(JetError::NoMonomialComplement(
                    m.display_with(ambient.basis.context().names()),
                ));
            }
            out.push(m);
        }
        debug_assert_eq!(out.len() + sub.rank(), ambient.rank());
        Ok(out)
    }
}

#[derive(Serialize)]
struct SpanJson {
    vars: Vec<String>,
    order: u32,
    rank: usize,
    pivots: Vec<Vec<u32>>,
    rows: Vec<Vec<String>>,
}

impl Serialize for Span<Rational> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        SpanJson {
            vars: self.basis.context().names().to_vec(),
            order: self.basis.order(),
            rank: self.rank(),
            pivots: self.pivot_monos().iter().map(|m| m.exps().to_vec()).collect(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        }
        .serialize(s)
    }
}
