use super::{Ctx, Poly, PolyError};
use crate::scalar::Scalar;

/// A polynomial vector field `Σ cᵢ ∂/∂xᵢ` over a context.
#[derive(Clone, Debug, PartialEq)]
pub struct VField<S> {
    ctx: Ctx,
    coeffs: Vec<Poly<S>>,
}

impl<S: Scalar> VField<S> {
    pub fn new(coeffs: Vec<Poly<S>>) -> Result<Self, PolyError> {
        let ctx = coeffs
            .first()
            .ok_or(PolyError::ImageCount { expected: 1, got: 0 })?
            .context()
            .clone();
        if coeffs.len() != ctx.arity() {
            return Err(PolyError::ImageCount {
                expected: ctx.arity(),
                got: coeffs.len(),
            });
        }
        for c in &coeffs[1..] {
            coeffs[0].checked_add(c)?;
        }
        Ok(VField { ctx, coeffs })
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Poly<S>] {
        &self.coeffs
    }

    /// The derivation `ξ·p = Σ ξᵢ ∂p/∂xᵢ`.
    pub fn apply(&self, p: &Poly<S>) -> Result<Poly<S>, PolyError> {
        let mut acc = Poly::zero(&self.ctx);
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc.checked_add(&c.checked_mul(&p.derivative(i))?)?;
        }
        Ok(acc)
    }

    /// `g·ξ` for a function germ `g`.
    pub fn scaled_by(&self, g: &Poly<S>) -> Result<Self, PolyError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(VField {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    /// Whether the field vanishes at the origin.
    pub fn vanishes_at_origin(&self) -> bool {
        self.coeffs.iter().all(|c| c.constant_term().is_zero())
    }

    /// Linear part of each coefficient.
    pub fn linear_part(&self) -> Self {
        VField {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c.homogeneous_part(1)).collect(),
        }
    }
}
