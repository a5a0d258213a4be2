//! The normal forms of submersions and their invariants.

use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::jet1::Orbit;
use super::{codimension, determinacy_degree, versality_check, Certificate, ClassifyError, DEFAULT_MAX_ORDER};
use crate::poly::parse::parse_poly_with;
use crate::poly::{Ctx, VarContext};
use crate::scalar::{format_rational, serialize_rational};
use crate::swallowtail::{plane_position_of, tangential_contact, target_context, PlanePosition};
use crate::{QPoly, Rational};

/// Shape of a normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FormKind {
    /// `±u`
    U,
    /// `v + a·u^{k+1}`
    V { k: u32 },
    /// `±w + a·u² + b·u³`
    W,
}

/// A normal form with its moduli fixed to rational values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    pub kind: FormKind,
    /// `+1` or `−1`; always `+1` for the `v` family.
    pub sign: i8,
    #[serde(serialize_with = "serialize_rational")]
    pub a: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub b: Rational,
}

/// `(u, v, w, a1, a2)`: the source of an unfolding.
pub fn unfolding_context() -> Ctx {
    VarContext::new(["u", "v", "w", "a1", "a2"]).expect("static context")
}

impl NormalForm {
    pub fn u(sign: i8) -> Self {
        NormalForm {
            kind: FormKind::U,
            sign: sign.signum(),
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }

    pub fn v(k: u32, a: Rational) -> Self {
        NormalForm {
            kind: FormKind::V { k },
            sign: 1,
            a,
            b: Rational::zero(),
        }
    }

    pub fn w(sign: i8, a: Rational, b: Rational) -> Self {
        NormalForm {
            kind: FormKind::W,
            sign: sign.signum(),
            a,
            b,
        }
    }

    pub fn orbit(&self) -> Orbit {
        match (self.kind, self.sign > 0) {
            (FormKind::U, true) => Orbit::PlusU,
            (FormKind::U, false) => Orbit::MinusU,
            (FormKind::V { .. }, _) => Orbit::V,
            (FormKind::W, true) => Orbit::PlusW,
            (FormKind::W, false) => Orbit::MinusW,
        }
    }

    /// The form with symbolic moduli, e.g. `-w + a*u^2 + b*u^3`.
    pub fn template(&self) -> String {
        let s = if self.sign > 0 { "" } else { "-" };
        match self.kind {
            FormKind::U => format!("{s}u"),
            FormKind::V { k } => format!("v + a*u^{}", k + 1),
            FormKind::W => format!("{s}w + a*u^2 + b*u^3"),
        }
    }

    fn symbols(&self) -> HashMap<String, Rational> {
        HashMap::from([("a".to_string(), self.a.clone()), ("b".to_string(), self.b.clone())])
    }

    /// The germ in `(u, v, w)`.
    pub fn germ(&self) -> QPoly {
        parse_poly_with(&target_context(), &self.template(), &self.symbols()).expect("static form")
    }

    pub fn moduli_count(&self) -> usize {
        match self.kind {
            FormKind::U => 0,
            FormKind::V { .. } => 1,
            FormKind::W => 2,
        }
    }

    /// `∂g/∂a` (and `∂g/∂b`).
    pub fn moduli_directions(&self) -> Vec<QPoly> {
        let ctx = target_context();
        let p = |s: &str| parse_poly_with(&ctx, s, &HashMap::new()).expect("static monomial");
        match self.kind {
            FormKind::U => vec![],
            FormKind::V { k } => vec![p(&format!("u^{}", k + 1))],
            FormKind::W => vec![p("u^2"), p("u^3")],
        }
    }

    /// Initial speeds `Ḟᵢ` of the miniversal unfolding.
    pub fn deformation_monomials(&self) -> Vec<QPoly> {
        let ctx = target_context();
        let p = |s: &str| parse_poly_with(&ctx, s, &HashMap::new()).expect("static monomial");
        match self.kind {
            FormKind::U => vec![],
            FormKind::V { k } => (1..=k).map(|i| p(&format!("u^{i}"))).collect(),
            FormKind::W => vec![p("u"), p("v")],
        }
    }

    pub fn expected_determinacy(&self) -> u32 {
        match self.kind {
            FormKind::U => 1,
            FormKind::V { k } => k + 1,
            FormKind::W => 3,
        }
    }

    /// `{u, …, u^{k+1}}`, or `{u, v, u², u³}` for the `w` family.
    pub fn expected_quotient(&self) -> Vec<String> {
        match self.kind {
            FormKind::U => vec![],
            FormKind::V { k } => (1..=k + 1)
                .map(|i| if i == 1 { "u".into() } else { format!("u^{i}") })
                .collect(),
            FormKind::W => ["u", "v", "u^2", "u^3"].map(String::from).to_vec(),
        }
    }

    /// Why the moduli fall outside the classified range, if they do.
    pub fn exclusion(&self) -> Option<String> {
        match self.kind {
            FormKind::U => None,
            FormKind::V { k: 0 } => Some("k must be at least 1".into()),
            FormKind::V { .. } if self.a.is_zero() => Some("a = 0".into()),
            FormKind::V { .. } => None,
            FormKind::W => {
                let abs = self.a.abs();
                if self.a.is_zero() {
                    Some("a = 0".into())
                } else if abs == Rational::new(1.into(), 12.into()) {
                    Some("a = ±1/12".into())
                } else if abs == Rational::new(1.into(), 4.into()) {
                    Some("a = ±1/4".into())
                } else if self.b.is_zero() {
                    Some("b = 0".into())
                } else {
                    None
                }
            }
        }
    }

    /// The miniversal unfolding `F(u, v, w, a1, a2)`.
    pub fn unfolding(&self) -> Result<QPoly, ClassifyError> {
        let src = match self.kind {
            FormKind::U => self.template(),
            FormKind::V { k: 1 } => format!("{} + a1*u", self.template()),
            FormKind::V { k: 2 } => format!("{} + a1*u + a2*u^2", self.template()),
            FormKind::V { k } => {
                return Err(ClassifyError::Unsupported(format!(
                    "v + a*u^{} needs {k} unfolding parameters; only two are modelled",
                    k + 1
                )))
            }
            FormKind::W => format!("{} + a1*u + a2*v", self.template()),
        };
        Ok(parse_poly_with(&unfolding_context(), &src, &self.symbols()).expect("static form"))
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.template())?;
        match self.kind {
            FormKind::U => Ok(()),
            FormKind::V { .. } => write!(f, " (a = {})", format_rational(&self.a)),
            FormKind::W => write!(
                f,
                " (a = {}, b = {})",
                format_rational(&self.a),
                format_rational(&self.b)
            ),
        }
    }
}

/// Everything computed about one normal form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GermClass {
    pub form: NormalForm,
    pub germ: String,
    pub determinacy: u32,
    pub certificate: Certificate,
    /// Whether `determinacy − 1` also has a certificate (it never should).
    pub lower_certified: bool,
    pub quotient_basis: Vec<String>,
    pub quotient_dim: usize,
    pub quotient_order: u32,
    pub moduli_count: usize,
    pub stratum_codim: i64,
    pub versal: bool,
    pub tangential_contact: String,
    pub plane_position: PlanePosition,
}

/// Runs the full pipeline on a normal form with admissible moduli.
pub fn classify_form(form: &NormalForm) -> Result<GermClass, ClassifyError> {
    if let Some(why) = form.exclusion() {
        return Err(ClassifyError::Unsupported(format!("excluded modulus: {why}")));
    }
    let g = form.germ();
    let k_max = form.expected_determinacy() + 2;
    let (determinacy, certificate) = determinacy_degree(&g, k_max)?
        .ok_or_else(|| ClassifyError::Unsupported(format!("no determinacy certificate up to degree {k_max}")))?;
    let lower_certified = determinacy > 1 && super::certify_determinacy(&g, determinacy - 1)?.is_some();
    let codim = codimension(&g, form.moduli_count(), DEFAULT_MAX_ORDER)?;
    let versal = versality_check(
        &g,
        &form.deformation_monomials(),
        &form.moduli_directions(),
        DEFAULT_MAX_ORDER,
    )?;
    let (_, contact) = tangential_contact(&g)?;
    let plane = plane_position_of(&g).map_err(|_| ClassifyError::ZeroJet)?;
    Ok(GermClass {
        germ: g.to_string(),
        form: form.clone(),
        determinacy,
        certificate,
        lower_certified,
        quotient_basis: codim.basis,
        quotient_dim: codim.quotient_dim,
        quotient_order: codim.order,
        moduli_count: codim.moduli_count,
        stratum_codim: codim.stratum_codim,
        versal,
        tangential_contact: contact.to_string(),
        plane_position: plane,
    })
}

impl GermClass {
    /// The linear part of the germ is in the orbit its form claims.
    pub fn sign_of_linear_part(&self) -> bool {
        let g = self.form.germ();
        let lin: Vec<Rational> = (0..3).map(|i| g.coeff(&crate::Mono::var(3, i))).collect();
        let rep = self.form.orbit().representative();
        lin == [rep.a, rep.b, rep.c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn germs_and_unfoldings() {
        assert_eq!(NormalForm::u(-1).germ().to_string(), "-u");
        assert_eq!(NormalForm::v(2, int(2)).germ().to_string(), "2*u^3 + v");
        let w = NormalForm::w(-1, q(1, 18), q(-1, 3));
        assert_eq!(w.germ().to_string(), "-1/3*u^3 + 1/18*u^2 - w");
        let f = w.unfolding().unwrap();
        assert_eq!(f.context().arity(), 5);
        assert_eq!(f.num_terms(), 5);
        assert!(NormalForm::v(3, int(1)).unfolding().is_err());
    }

    #[test]
    fn exclusions() {
        assert!(NormalForm::v(1, int(0)).exclusion().is_some());
        assert!(NormalForm::w(1, q(-1, 12), int(1)).exclusion().is_some());
        assert!(NormalForm::w(1, q(1, 4), int(1)).exclusion().is_some());
        assert!(NormalForm::w(1, int(1), int(0)).exclusion().is_some());
        assert!(NormalForm::w(1, int(1), int(1)).exclusion().is_none());
        assert!(classify_form(&NormalForm::w(1, int(1), int(0))).is_err());
    }

    #[test]
    fn classifies_each_row() {
        let rows = [
            (NormalForm::u(1), 1, 0),
            (NormalForm::v(1, int(1)), 2, 1),
            (NormalForm::v(2, int(-1)), 3, 2),
            (NormalForm::w(-1, int(2), q(-1, 3)), 3, 2),
        ];
        for (form, det, codim) in rows {
            let c = classify_form(&form).unwrap();
            assert_eq!(c.determinacy, det, "{form}");
            assert!(!c.lower_certified, "{form}");
            assert_eq!(c.stratum_codim, codim, "{form}");
            assert_eq!(c.quotient_basis, form.expected_quotient(), "{form}");
            assert!(c.versal, "{form}");
            assert!(c.sign_of_linear_part());
        }
    }
}
