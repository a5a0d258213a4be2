//! Exact computations for functions on the standard swallowtail.
//!
//! Polynomials, jet spaces and tangent spaces are generic over [`Scalar`];
//! the verifiers run over [`Rational`].

pub mod classifier;
pub mod discriminants;
pub mod jet;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod swallowtail;

pub use classifier::{GermClass, NormalForm};
pub use jet::{JetBasis, JetError, Span};
pub use poly::{Ctx, Mono, Poly, PolyError, VField, VarContext};
pub use report::{Check, Report, Status};
pub use scalar::Scalar;
pub use swallowtail::Swallowtail;

pub type Rational = num_rational::BigRational;
pub type QPoly = Poly<Rational>;
pub type QVField = VField<Rational>;
pub type FPoly = Poly<f64>;
pub type QSpan = Span<Rational>;
