//! Verification of the full classification at sampled moduli.
//!
//! Every check substitutes explicit rational moduli, so agreement across the
//! samples is evidence for the generic statement, not a proof of it.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::jet1::{reduce_1jet, Jet1};
use super::normal_form::{classify_form, FormKind, NormalForm};
use super::{
    codimension, complete_transversal, is_determined, mather_path_check, mather_samples, tangent_generators,
    tangent_space, versality_check, Variant, DEFAULT_MAX_ORDER,
};
use crate::poly::parse::parse_poly_with;
use crate::report::{Check, Report};
use crate::scalar::format_rational;
use crate::swallowtail::{target_context, PlanePosition};
use crate::{Mono, QPoly, Rational};

/// Moduli values at which each row is checked.
#[derive(Debug, Clone, PartialEq)]
pub struct TableSamples {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

impl Default for TableSamples {
    fn default() -> Self {
        TableSamples {
            a: vec![q(1, 1), q(-1, 1), q(1, 18), q(-1, 18), q(2, 1)],
            b: vec![q(1, 1), q(-1, 3)],
        }
    }
}

const NOTE: &str = "sampled moduli";

fn poly(src: &str) -> QPoly {
    parse_poly_with(&target_context(), src, &Default::default()).expect("static polynomial")
}

fn names(ms: &[Mono]) -> Vec<String> {
    ms.iter().map(|m| m.display_with(target_context().names())).collect()
}

fn sign_str(s: i8) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

fn row_check(row: usize, form: &NormalForm, codim: i64, contact: &str, plane: PlanePosition) -> Check {
    let id = match form.kind {
        FormKind::U => format!("row{row}/{}u", sign_str(form.sign)),
        FormKind::V { .. } => format!("row{row}/a={}", format_rational(&form.a)),
        FormKind::W => format!(
            "row{row}/{}w/a={}/b={}",
            sign_str(form.sign),
            format_rational(&form.a),
            format_rational(&form.b)
        ),
    };
    let reference = format!(
        "classification row {row}: {}, determinacy {}, stratum codimension {codim} ({NOTE})",
        form.template(),
        form.expected_determinacy()
    );
    let class = match classify_form(form) {
        Ok(c) => c,
        Err(e) => return Check::new(id, reference, false, json!({ "error": e.to_string() })),
    };
    let g = form.germ();
    let lin = |i| g.coeff(&Mono::var(3, i));
    let jet = Jet1::new(lin(0), lin(1), lin(2));
    let orbit_ok = matches!(reduce_1jet(&jet), Ok((o, h)) if o == form.orbit() && h.is_identity());

    // Dropping any single unfolding monomial must destroy versality.
    let defs = form.deformation_monomials();
    let moduli = form.moduli_directions();
    let drop_one: Vec<bool> = (0..defs.len())
        .map(|i| {
            let rest: Vec<QPoly> = defs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, d)| d.clone())
                .collect();
            versality_check(&g, &rest, &moduli, DEFAULT_MAX_ORDER).unwrap_or(true)
        })
        .collect();

    let ok = class.determinacy == form.expected_determinacy()
        && !class.lower_certified
        && class.quotient_basis == form.expected_quotient()
        && class.stratum_codim == codim
        && class.versal
        && drop_one.iter().all(|&v| !v)
        && class.tangential_contact == contact
        && class.plane_position == plane
        && orbit_ok;
    Check::new(
        id,
        reference,
        ok,
        json!({
            "class": class,
            "one_jet_orbit": orbit_ok,
            "versal_after_dropping_each": drop_one,
        }),
    )
}

fn transversal_check(id: String, reference: String, germ: &QPoly, k: u32, expected: &[&str]) -> Check {
    match complete_transversal(germ, k) {
        Ok(t) => {
            let got = names(&t);
            Check::new(
                id,
                reference,
                got == expected,
                json!({ "germ": germ.to_string(), "level": k + 1, "transversal": got }),
            )
        }
        Err(e) => Check::new(id, reference, false, json!({ "error": e.to_string() })),
    }
}

fn mather_check(sign: i8, a: &Rational) -> Check {
    let f0 = NormalForm::w(sign, a.clone(), q(0, 1)).germ();
    let h = poly("v^2");
    let samples: Vec<Rational> = mather_samples::<Rational>()
        .into_iter()
        .filter(|s| s.numer().magnitude() <= s.denom().magnitude())
        .collect();
    let id = format!("mather/{}w/a={}", sign_str(sign), format_rational(a));
    let reference = format!(
        "{}w + a·u² + c·v² reduces to {}w + a·u² along v² in the 2-jet space ({NOTE})",
        sign_str(sign),
        sign_str(sign)
    );
    match mather_path_check(&f0, &h, &samples, 2) {
        Ok(out) => Check::new(id, reference, out.holds(), json!(out)),
        Err(e) => Check::new(id, reference, false, json!({ "error": e.to_string() })),
    }
}

/// `θ₃g − 8as·u·θ₁g = −3s·v² − (32a²s + 8a)·u³` for `g = s·w + a·u²`.
///
/// Shows `v²` and `u³` are dependent modulo `L𝓡(X)·g`.
pub fn b_zero_dependency(sign: i8, a: &Rational) -> (QPoly, QPoly, bool) {
    let g = NormalForm::w(sign, a.clone(), q(0, 1)).germ();
    let th = tangent_generators(&g).expect("germ in (u, v, w)");
    let s = Rational::from_integer(sign.into());
    let u = poly("u");
    let lhs = &th[2] - &(&u * &th[0]).scale(&(q(8, 1) * a * &s));
    let c3 = q(32, 1) * a * a * &s + q(8, 1) * a;
    let rhs = &poly("v^2").scale(&(q(-3, 1) * &s)) - &poly("u^3").scale(&c3);
    let holds = lhs == rhs;
    (lhs, rhs, holds)
}

fn exclusion_checks(sign: i8) -> Vec<Check> {
    let ss = sign_str(sign);
    let s = Rational::from_integer(sign.into());
    let mut out = Vec::new();

    // The excluded values pair with the sign of w.
    let quarter = -&s * q(1, 4);
    let g = NormalForm::w(sign, quarter.clone(), q(1, 1)).germ();
    let det = is_determined(&g, 3, Variant::R1);
    out.push(Check::new(
        format!("exclusion/{ss}w/a={}", format_rational(&quarter)),
        format!(
            "{ss}w + a·u² + b·u³ is not 3-determined at a = {}",
            format_rational(&quarter)
        ),
        matches!(det, Ok(false)),
        json!({ "germ": g.to_string(), "m4_in_tangent_space": det.ok() }),
    ));
    let other = -quarter;
    let g = NormalForm::w(sign, other.clone(), q(1, 1)).germ();
    let det = is_determined(&g, 3, Variant::R1);
    out.push(Check::new(
        format!("exclusion/{ss}w/a={}/opposite-sign", format_rational(&other)),
        format!(
            "{ss}w + a·u² + b·u³ stays 3-determined at a = {}",
            format_rational(&other)
        ),
        matches!(det, Ok(true)),
        json!({ "germ": g.to_string(), "m4_in_tangent_space": det.ok() }),
    ));

    let twelfth = &s * q(1, 12);
    let g = NormalForm::w(sign, twelfth.clone(), q(0, 1)).germ();
    out.push(transversal_check(
        format!("exclusion/{ss}w/a={}", format_rational(&twelfth)),
        format!(
            "degree-3 transversal of {ss}w + a·u² at a = {} is {{u³, u²v}}",
            format_rational(&twelfth)
        ),
        &g,
        2,
        &["u^3", "u^2*v"],
    ));
    let other = -twelfth;
    let g = NormalForm::w(sign, other.clone(), q(0, 1)).germ();
    out.push(transversal_check(
        format!("exclusion/{ss}w/a={}/opposite-sign", format_rational(&other)),
        format!(
            "degree-3 transversal of {ss}w + a·u² at a = {} is {{u³}}",
            format_rational(&other)
        ),
        &g,
        2,
        &["u^3"],
    ));

    // b = 0: the claimed quotient {u, v, u², u³, v²}.
    let a = q(1, 1);
    let g = NormalForm::w(sign, a.clone(), q(0, 1)).germ();
    let (lhs, rhs, identity) = b_zero_dependency(sign, &a);
    let codim = codimension(&g, 2, DEFAULT_MAX_ORDER);
    let dim = codim.as_ref().map(|c| c.quotient_dim).ok();
    out.push(Check::new(
        format!("exclusion/{ss}w/b=0"),
        format!("{ss}w + a·u² has quotient {{u, v, u², u³, v²}} of dimension 5"),
        dim == Some(5),
        json!({
            "germ": g.to_string(),
            "quotient_dim": dim,
            "quotient_basis": codim.map(|c| c.basis).ok(),
            "dependency": {
                "combination": "θ₃·g − 8as·u·θ₁·g",
                "expanded": lhs.to_string(),
                "expected": rhs.to_string(),
                "identity_holds": identity,
            },
        }),
    ));
    out
}

type Job = Box<dyn Fn() -> Vec<Check> + Send + Sync>;

/// Every row of the classification at the given moduli, the transversals and
/// Mather reductions behind it, and the failure mode at each excluded value.
pub fn verify_table1(samples: &TableSamples) -> Report {
    let mut jobs: Vec<Job> = Vec::new();
    for sign in [1i8, -1] {
        jobs.push(Box::new(move || {
            vec![row_check(1, &NormalForm::u(sign), 0, "A0", PlanePosition::Transverse)]
        }));
    }
    for (row, k, codim, contact) in [(2usize, 1u32, 1i64, "A1"), (3, 2, 2, "A2")] {
        for a in samples.a.clone() {
            jobs.push(Box::new(move || {
                vec![row_check(
                    row,
                    &NormalForm::v(k, a.clone()),
                    codim,
                    contact,
                    PlanePosition::ContainsTangentialLine,
                )]
            }));
        }
    }
    for sign in [1i8, -1] {
        for a in samples.a.clone() {
            for b in samples.b.clone() {
                let a = a.clone();
                jobs.push(Box::new(move || {
                    vec![row_check(
                        4,
                        &NormalForm::w(sign, a.clone(), b.clone()),
                        2,
                        "A1",
                        PlanePosition::EqualsTangentCone,
                    )]
                }));
            }
        }
    }
    jobs.push(Box::new(|| {
        let g = poly("v");
        (1..=4u32)
            .map(|k| {
                let expected = format!("u^{}", k + 1);
                transversal_check(
                    format!("transversal/v/level={}", k + 1),
                    format!("complete {}-transversal of v is {{u^{}}}", k + 1, k + 1),
                    &g,
                    k,
                    &[expected.as_str()],
                )
            })
            .collect()
    }));
    for sign in [1i8, -1] {
        jobs.push(Box::new(move || {
            let ss = sign_str(sign);
            vec![transversal_check(
                format!("transversal/{ss}w/level=2"),
                format!("complete 2-transversal of {ss}w is {{u², uv, v²}}"),
                &poly(&format!("{ss}w")),
                1,
                &["u^2", "u*v", "v^2"],
            )]
        }));
        for a in samples.a.clone() {
            jobs.push(Box::new(move || {
                let ss = sign_str(sign);
                let g = NormalForm::w(sign, a.clone(), q(0, 1)).germ();
                vec![
                    transversal_check(
                        format!("transversal/{ss}w/level=3/a={}", format_rational(&a)),
                        format!("complete 3-transversal of {ss}w + a·u² is {{u³}} ({NOTE})"),
                        &g,
                        2,
                        &["u^3"],
                    ),
                    mather_check(sign, &a),
                ]
            }));
        }
        jobs.push(Box::new(move || exclusion_checks(sign)));
    }
    jobs.push(Box::new(|| {
        let t = tangent_space(&QPoly::zero(&target_context()), Variant::Full, 3);
        vec![Check::new(
            "tangent-space/zero",
            "the zero germ has zero tangent space",
            matches!(t, Ok(ref s) if s.rank() == 0),
            json!(null),
        )]
    }));

    let checks: Vec<Vec<Check>> = jobs.par_iter().map(|job| job()).collect();
    let mut report = Report::new("verify-table1");
    report.extend(checks.into_iter().flatten());
    report.push(Check::skip(
        "convention/r1-tangent-space",
        "the R1 tangent space is taken as 𝓜₃·{θᵢ·g}",
        Value::String("working convention, not verified".into()),
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dependency_identity() {
        for sign in [1, -1] {
            for a in [q(1, 1), q(-1, 18), q(2, 1)] {
                assert!(b_zero_dependency(sign, &a).2);
            }
        }
    }

    #[test]
    fn small_table_run() {
        let samples = TableSamples {
            a: vec![q(1, 1)],
            b: vec![q(1, 1)],
        };
        let r = verify_table1(&samples);
        let failing: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
        assert_eq!(failing, ["exclusion/+w/b=0", "exclusion/-w/b=0"]);
    }
}
