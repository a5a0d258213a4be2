//! Singular sets of two-parameter branches via Jacobian minors.

use num_traits::Zero;
use serde_json::json;

use super::Branch;
use crate::report::{Check, Report};
use crate::scalar::format_rational;
use crate::{QPoly, Rational};

/// A curve `r ↦ domain(r)` in a branch's parameter space, with the image it
/// is claimed to have.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularCurve {
    pub domain: Vec<QPoly>,
    pub image: [QPoly; 3],
}

/// Ten fixed parameter points, starting at `(1, 1)`.
pub fn generic_samples() -> Vec<Vec<Rational>> {
    (0..10i64)
        .map(|i| {
            vec![
                Rational::new((2 * i + 3).into(), (i + 3).into()),
                Rational::new((7 - 3 * i).into(), (2 * i + 7).into()),
            ]
        })
        .collect()
}

/// Minors vanish along each curve, the curve maps onto its claimed image,
/// and at each sample point some minor is nonzero.
pub fn singular_locus(br: &Branch, curves: &[SingularCurve], samples: &[Vec<Rational>]) -> Report {
    let mut r = Report::new(format!("singular-locus {} {}", br.which, br.label));
    let minors = match br.jacobian_minors() {
        Ok(m) => m,
        Err(e) => {
            r.push(Check::new(
                "minors",
                "Jacobian minors of the branch",
                false,
                json!({ "error": e.to_string() }),
            ));
            return r;
        }
    };
    r.push(Check::new(
        "minors",
        "Jacobian minors of the branch",
        true,
        json!(minors.iter().map(|m| m.to_string()).collect::<Vec<_>>()),
    ));
    for (i, c) in curves.iter().enumerate() {
        let on = |p: &QPoly| p.compose(&c.domain);
        let pulled: Result<Vec<QPoly>, _> = minors.iter().map(on).collect();
        let (ok, payload) = match &pulled {
            Ok(ps) => (
                ps.iter().all(QPoly::is_zero),
                json!(ps.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
            ),
            Err(e) => (false, json!({ "error": e.to_string() })),
        };
        r.push(Check::new(
            format!("curve{i}/minors-vanish"),
            "every minor vanishes along the claimed singular curve",
            ok,
            payload,
        ));
        let image: Result<Vec<QPoly>, _> = br.map.iter().map(on).collect();
        let (ok, payload) = match &image {
            Ok(ps) => (
                ps.iter().zip(&c.image).all(|(a, b)| a == b),
                json!({
                    "computed": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "claimed": c.image.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                }),
            ),
            Err(e) => (false, json!({ "error": e.to_string() })),
        };
        r.push(Check::new(
            format!("curve{i}/image"),
            "the curve maps onto the claimed singular set",
            ok,
            payload,
        ));
    }
    let values: Vec<Vec<String>> = samples
        .iter()
        .map(|pt| minors.iter().map(|m| format_rational(&m.eval(pt))).collect())
        .collect();
    let ok = samples.iter().all(|pt| minors.iter().any(|m| !m.eval(pt).is_zero()));
    r.push(Check::new(
        "generic",
        "at generic sample points some minor is nonzero",
        ok,
        json!({ "samples": samples.iter().map(|p| p.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(), "minors": values }),
    ));
    r
}
