//! Orbits of 1-jets `au + bv + cw` under the linear part of `𝓡(X)`.
//!
//! The linear maps used are
//! `h₁ = (r²u, r³v, r⁴w)`, `h₂ = (u + 3βv, v + 4γw, w)`, `h₃ = (u + αw, v, w)`
//! and the reflection `v ↦ −v`, which preserves the discriminant exactly.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::ClassifyError;
use crate::scalar::{format_rational, rational_power, serialize_rational};
use crate::Rational;

/// The linear form `a·u + b·v + c·w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet1 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Jet1 {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Jet1 { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        let r = |n: i64| Rational::from_integer(n.into());
        Jet1::new(r(a), r(b), r(c))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }
}

impl fmt::Display for Jet1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c)
        )
    }
}

/// The five 1-jet orbits of submersions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Orbit {
    PlusU,
    MinusU,
    V,
    PlusW,
    MinusW,
}

impl Orbit {
    pub fn representative(self) -> Jet1 {
        match self {
            Orbit::PlusU => Jet1::from_ints(1, 0, 0),
            Orbit::MinusU => Jet1::from_ints(-1, 0, 0),
            Orbit::V => Jet1::from_ints(0, 1, 0),
            Orbit::PlusW => Jet1::from_ints(0, 0, 1),
            Orbit::MinusW => Jet1::from_ints(0, 0, -1),
        }
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orbit::PlusU => "+u",
            Orbit::MinusU => "-u",
            Orbit::V => "v",
            Orbit::PlusW => "+w",
            Orbit::MinusW => "-w",
        })
    }
}

/// `h₁` with `r^weight = factor`.
///
/// Only `r^weight` is recorded, so a scaling like `r² = 1/2` stays rational.
/// The coefficient of weight `w'` is multiplied by `factor^{w'/weight}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scaling {
    pub weight: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub factor: Rational,
}

/// A linear element of `𝓡(X)`: `h₂`, then `h₃`, then `h₁`, then the
/// reflection, applied by precomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffeoJet1 {
    #[serde(serialize_with = "serialize_rational")]
    pub beta: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub gamma: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub alpha: Rational,
    pub scaling: Option<Scaling>,
    pub reflect_v: bool,
}

impl Default for DiffeoJet1 {
    fn default() -> Self {
        DiffeoJet1 {
            beta: Rational::zero(),
            gamma: Rational::zero(),
            alpha: Rational::zero(),
            scaling: None,
            reflect_v: false,
        }
    }
}

impl DiffeoJet1 {
    pub fn is_identity(&self) -> bool {
        *self == DiffeoJet1::default()
    }

    /// The pulled-back 1-jet `l ∘ h`.
    pub fn apply(&self, jet: &Jet1) -> Result<Jet1, ClassifyError> {
        let three = Rational::from_integer(3.into());
        let four = Rational::from_integer(4.into());
        // h₂
        let a = jet.a.clone();
        let b = &three * &a * &self.beta + &jet.b;
        let c = &four * &jet.b * &self.gamma + &jet.c;
        // h₃
        let c = &a * &self.alpha + c;
        let (mut a, mut b, mut c) = (a, b, c);
        if let Some(s) = &self.scaling {
            let scale = |x: &Rational, w: u32| -> Result<Rational, ClassifyError> {
                if x.is_zero() {
                    return Ok(x.clone());
                }
                rational_power(&s.factor, w, s.weight)
                    .map(|m| x * m)
                    .ok_or(ClassifyError::IrrationalScaling)
            };
            a = scale(&a, 2)?;
            b = scale(&b, 3)?;
            c = scale(&c, 4)?;
        }
        if self.reflect_v {
            b = -b;
        }
        Ok(Jet1 { a, b, c })
    }
}

impl fmt::Display for DiffeoJet1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("identity");
        }
        let mut parts = Vec::new();
        for (name, v) in [("β", &self.beta), ("γ", &self.gamma), ("α", &self.alpha)] {
            if !v.is_zero() {
                parts.push(format!("{name} = {}", format_rational(v)));
            }
        }
        if let Some(s) = &self.scaling {
            parts.push(format!("r^{} = {}", s.weight, format_rational(&s.factor)));
        }
        if self.reflect_v {
            parts.push("v ↦ -v".to_string());
        }
        f.write_str(&parts.join(", "))
    }
}

fn scaling(weight: u32, coeff: &Rational) -> Option<Scaling> {
    let factor = coeff.abs().recip();
    (!factor.is_one()).then_some(Scaling { weight, factor })
}

/// Orbit of a nonzero 1-jet, with a witness carrying it to the representative.
pub fn reduce_1jet(jet: &Jet1) -> Result<(Orbit, DiffeoJet1), ClassifyError> {
    let mut h = DiffeoJet1::default();
    let Jet1 { a, b, c } = jet;
    let orbit = if !a.is_zero() {
        h.beta = -b / (Rational::from_integer(3.into()) * a);
        h.alpha = -c / a;
        h.scaling = scaling(2, a);
        if a.is_positive() {
            Orbit::PlusU
        } else {
            Orbit::MinusU
        }
    } else if !b.is_zero() {
        h.gamma = -c / (Rational::from_integer(4.into()) * b);
        h.scaling = scaling(3, b);
        h.reflect_v = b.is_negative();
        Orbit::V
    } else if !c.is_zero() {
        h.scaling = scaling(4, c);
        if c.is_positive() {
            Orbit::PlusW
        } else {
            Orbit::MinusW
        }
    } else {
        return Err(ClassifyError::ZeroJet);
    };
    Ok((orbit, h))
}
