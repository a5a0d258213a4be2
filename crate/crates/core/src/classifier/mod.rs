//! `𝓡(X)`-classification of submersions on the swallowtail.
//!
//! Tangent spaces are computed as truncated module spans of `θᵢ·g`: the
//! `𝓡(X)` tangent space `L𝓡(X)·g = 𝓔₃·{θᵢ·g}` and the `𝓡₁(X)` tangent space,
//! taken as `𝓜₃·{θᵢ·g}`. The second identification is the standard working
//! convention for this surface and is not proved here; reports flag it.

mod jet1;
mod normal_form;
mod table;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::jet::{JetBasis, JetError, Span};
use crate::poly::{Mono, Poly, PolyError};
use crate::scalar::Scalar;
use crate::swallowtail::thetas;

pub use jet1::{reduce_1jet, DiffeoJet1, Jet1, Orbit, Scaling};
pub use normal_form::{classify_form, unfolding_context, FormKind, GermClass, NormalForm};
pub use table::{verify_table1, TableSamples};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error("germ must be a polynomial in three variables")]
    Arity,
    #[error("germ must vanish at the origin")]
    NonzeroConstant,
    #[error("quotient did not stabilise by order {0}")]
    NotStabilized(u32),
    #[error("the 1-jet is zero; not a submersion")]
    ZeroJet,
    #[error("witness needs an irrational scaling")]
    IrrationalScaling,
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Which tangent space: `L𝓡(X)·g` or `L𝓡₁(X)·g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    Full,
    R1,
}

fn check_germ<S: Scalar>(g: &Poly<S>) -> Result<(), ClassifyError> {
    if g.context().arity() != 3 {
        return Err(ClassifyError::Arity);
    }
    if !g.constant_term().is_zero() {
        return Err(ClassifyError::NonzeroConstant);
    }
    Ok(())
}

/// `[θ₁·g, θ₂·g, θ₃·g]`.
pub fn tangent_generators<S: Scalar>(g: &Poly<S>) -> Result<Vec<Poly<S>>, ClassifyError> {
    check_germ(g)?;
    thetas::<S>(g.context())
        .iter()
        .map(|th| th.apply(g).map_err(ClassifyError::from))
        .collect()
}

pub fn tangent_space<S: Scalar>(g: &Poly<S>, variant: Variant, order: u32) -> Result<Span<S>, ClassifyError> {
    let basis = JetBasis::new(g.context(), order);
    tangent_space_in(g, variant, &basis)
}

fn tangent_space_in<S: Scalar>(g: &Poly<S>, variant: Variant, basis: &Arc<JetBasis>) -> Result<Span<S>, ClassifyError> {
    let gens = tangent_generators(g)?;
    let min = match variant {
        Variant::Full => 0,
        Variant::R1 => 1,
    };
    Ok(Span::module_span(&gens, min, basis)?)
}

/// Graded order with `u > v > w` inside each degree: `u, v, u², uv, …`.
pub fn sort_graded(monos: &mut [Mono]) {
    monos.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| y.exps().cmp(x.exps())));
}

/// Minimal monomial set `T` of degree `k + 1` with
/// `𝓜^{k+1} ⊆ L𝓡₁(X)·g + ℝ·T + 𝓜^{k+2}`.
pub fn complete_transversal<S: Scalar>(g: &Poly<S>, k: u32) -> Result<Vec<Mono>, ClassifyError> {
    let basis = JetBasis::new(g.context(), k + 1);
    let sub = tangent_space_in(g, Variant::R1, &basis)?;
    let ambient = Span::sum(&[sub.clone(), Span::degree_slice(&basis, k + 1)])?;
    let mut t = Span::quotient_basis(&ambient, &sub)?;
    sort_graded(&mut t);
    Ok(t)
}

/// The inclusion `𝓜^{k+1} ⊆ L·g + 𝓜^{k+2}` for the chosen tangent space.
///
/// For [`Variant::R1`] this is equivalent to `k`-`𝓡₁(X)`-determinacy; for
/// [`Variant::Full`] it is sufficient for `(k+1)`-`𝓡(X)`-determinacy, since
/// every `θᵢ` vanishes at the origin.
pub fn is_determined<S: Scalar>(g: &Poly<S>, k: u32, variant: Variant) -> Result<bool, ClassifyError> {
    let basis = JetBasis::new(g.context(), k + 1);
    let t = tangent_space_in(g, variant, &basis)?;
    let n = basis.len();
    Ok(basis
        .monos()
        .iter()
        .enumerate()
        .filter(|(_, m)| m.degree() == k + 1)
        .all(|(i, _)| {
            let mut e = vec![S::zero(); n];
            e[i] = S::one();
            t.contains_vector(e)
        }))
}

/// Outcome of a Mather-lemma check along `f0 + s·h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatherOutcome {
    pub samples: Vec<String>,
    /// `h ∈ L𝓡(X)·(f0 + s·h)` at each sample.
    pub tangent: Vec<bool>,
    /// Truncated tangent-space rank at each sample.
    pub ranks: Vec<usize>,
}

impl MatherOutcome {
    pub fn holds(&self) -> bool {
        self.tangent.iter().all(|&b| b) && self.ranks.windows(2).all(|w| w[0] == w[1])
    }
}

/// Checks both Mather conditions along the affine family `f0 + s·h` at the
/// sampled `s`, in `J^N`. A zero direction holds vacuously.
pub fn mather_path_check<S: Scalar>(
    f0: &Poly<S>,
    h: &Poly<S>,
    samples: &[S],
    order: u32,
) -> Result<MatherOutcome, ClassifyError> {
    mather_subspace_check(f0, std::slice::from_ref(h), samples, order)
}

/// Mather check for the affine subspace `f0 + span(dirs)`, sampled along each
/// direction and along their sum.
pub fn mather_subspace_check<S: Scalar>(
    f0: &Poly<S>,
    dirs: &[Poly<S>],
    samples: &[S],
    order: u32,
) -> Result<MatherOutcome, ClassifyError> {
    let dirs: Vec<&Poly<S>> = dirs.iter().filter(|d| !d.is_zero()).collect();
    let mut out = MatherOutcome {
        samples: Vec::new(),
        tangent: Vec::new(),
        ranks: Vec::new(),
    };
    if dirs.is_empty() {
        return Ok(out);
    }
    let basis = JetBasis::new(f0.context(), order);
    let mut lines: Vec<Poly<S>> = dirs.iter().map(|&d| d.clone()).collect();
    if dirs.len() > 1 {
        let total = dirs.iter().fold(Poly::zero(f0.context()), |acc, d| &acc + d);
        lines.push(total);
    }
    for line in &lines {
        for s in samples {
            let point = &(f0.clone()) + &line.scale(s);
            let t = tangent_space_in(&point, Variant::Full, &basis)?;
            out.samples.push(format!("{s}"));
            out.tangent.push(dirs.iter().all(|d| t.contains(d)));
            out.ranks.push(t.rank());
        }
    }
    Ok(out)
}

/// How a determinacy degree was certified.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "route", rename_all = "kebab-case")]
pub enum Certificate {
    /// `𝓜^{k+1} ⊆ L𝓡₁(X)·g + 𝓜^{k+2}`.
    R1Criterion,
    /// `𝓜^k ⊆ L𝓡(X)·g + 𝓜^{k+1}`.
    RCriterion,
    /// Every `(k+1)`-jet over `j^k g` lies in one orbit (Mather conditions
    /// along the complete transversal), and each is `(k+1)`-determined by a
    /// tangent-space criterion.
    Mather {
        transversal: Vec<String>,
        outcome: MatherOutcome,
    },
}

/// Default sample points used for Mather checks.
pub fn mather_samples<S: Scalar>() -> Vec<S> {
    [(0, 1), (1, 2), (-1, 2), (1, 1), (-1, 1), (2, 1)]
        .iter()
        .map(|&(n, d)| S::from_i64(n) / S::from_i64(d))
        .collect()
}

fn direct_certificate<S: Scalar>(g: &Poly<S>, k: u32) -> Result<Option<Certificate>, ClassifyError> {
    if is_determined(g, k, Variant::R1)? {
        return Ok(Some(Certificate::R1Criterion));
    }
    if k >= 1 && is_determined(g, k - 1, Variant::Full)? {
        return Ok(Some(Certificate::RCriterion));
    }
    Ok(None)
}

/// Tries to certify that `g` is `k`-`𝓡(X)`-determined.
///
/// `None` means no certificate was found, not that `g` fails to be
/// `k`-determined.
pub fn certify_determinacy<S: Scalar>(g: &Poly<S>, k: u32) -> Result<Option<Certificate>, ClassifyError> {
    check_germ(g)?;
    if let Some(c) = direct_certificate(g, k)? {
        return Ok(Some(c));
    }
    let f0 = g.truncated(k);
    let transversal = complete_transversal(&f0, k)?;
    if transversal.is_empty() {
        return Ok(None);
    }
    let dirs: Vec<Poly<S>> = transversal
        .iter()
        .map(|m| Poly::monomial(g.context(), m.clone(), S::one()))
        .collect();
    let samples = mather_samples::<S>();
    let outcome = mather_subspace_check(&f0, &dirs, &samples, k + 1)?;
    if !outcome.holds() {
        return Ok(None);
    }
    for d in &dirs {
        for s in &samples {
            let point = &f0 + &d.scale(s);
            if direct_certificate(&point, k + 1)?.is_none() {
                return Ok(None);
            }
        }
    }
    let names = g.context().names();
    Ok(Some(Certificate::Mather {
        transversal: transversal.iter().map(|m| m.display_with(names)).collect(),
        outcome,
    }))
}

/// Smallest `k ≤ k_max` with a determinacy certificate.
pub fn determinacy_degree<S: Scalar>(g: &Poly<S>, k_max: u32) -> Result<Option<(u32, Certificate)>, ClassifyError> {
    for k in 1..=k_max {
        if let Some(c) = certify_determinacy(g, k)? {
            return Ok(Some((k, c)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Codimension {
    /// Truncation order at which the quotient agreed with the next order.
    pub order: u32,
    pub basis: Vec<String>,
    #[serde(skip)]
    pub monomials: Vec<Mono>,
    pub quotient_dim: usize,
    pub moduli_count: usize,
    pub stratum_codim: i64,
}

pub const DEFAULT_MAX_ORDER: u32 = 10;

fn quotient_at<S: Scalar>(g: &Poly<S>, order: u32) -> Result<Vec<Mono>, ClassifyError> {
    let basis = JetBasis::new(g.context(), order);
    let t = tangent_space_in(g, Variant::Full, &basis)?;
    let mut q = Span::quotient_basis(&Span::full(&basis), &t)?;
    sort_graded(&mut q);
    Ok(q)
}

/// Monomial basis of `𝓜₃ / L𝓡(X)·g`, found by raising the truncation order
/// until two consecutive orders give the same basis.
pub fn codimension<S: Scalar>(g: &Poly<S>, moduli_count: usize, max_order: u32) -> Result<Codimension, ClassifyError> {
    check_germ(g)?;
    let start = g.degree().unwrap_or(1).max(2);
    let mut prev = quotient_at(g, start)?;
    for order in start..max_order {
        let next = quotient_at(g, order + 1)?;
        if next == prev {
            let names = g.context().names();
            return Ok(Codimension {
                order,
                basis: prev.iter().map(|m| m.display_with(names)).collect(),
                quotient_dim: prev.len(),
                monomials: prev,
                moduli_count,
                stratum_codim: next.len() as i64 - moduli_count as i64,
            });
        }
        prev = next;
    }
    Err(ClassifyError::NotStabilized(max_order))
}

/// `L𝓡(X)·g + ℝ·{1, Ḟ₁, …, Ḟₛ} + ℝ·{moduli directions}` covers `𝓔₃` at the
/// stabilised order (and one above it).
pub fn versality_check<S: Scalar>(
    g: &Poly<S>,
    deformations: &[Poly<S>],
    moduli_directions: &[Poly<S>],
    max_order: u32,
) -> Result<bool, ClassifyError> {
    let codim = codimension(g, moduli_directions.len(), max_order)?;
    for order in [codim.order, codim.order + 1] {
        let basis = JetBasis::new(g.context(), order);
        let mut t = tangent_space_in(g, Variant::Full, &basis)?;
        for d in deformations.iter().chain(moduli_directions) {
            t.insert_poly(d);
        }
        if t.rank() != basis.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
