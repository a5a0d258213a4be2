//! The standard swallowtail `X = f(ℝ², 0)` with
//! `f(x, y) = (x, −4y³ − 2xy, 3y⁴ + xy²)`, its implicit equation, the vector
//! fields tangent to it, and the curves and contact data derived from them.

use std::fmt;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::poly::{parse_poly, Ctx, Poly, PolyError, VField, VarContext};
use crate::report::{Check, Report};
use crate::scalar::Scalar;
use crate::{QPoly, Rational};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SwallowtailError {
    #[error("θ{0}·h is not divisible by h")]
    NotTangent(usize),
    #[error("the 1-jet is zero; not a submersion")]
    ZeroJet,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

const IMPLICIT: &str = "16*u^4*w - 4*u^3*v^2 - 128*u^2*w^2 + 144*u*v^2*w - 27*v^4 + 256*w^3";

/// Target coordinates `(u, v, w)` with weights `(2, 3, 4)`.
pub fn target_context() -> Ctx {
    VarContext::weighted(["u", "v", "w"], vec![2, 3, 4]).expect("static context")
}

pub fn source_context() -> Ctx {
    VarContext::new(["x", "y"]).expect("static context")
}

pub fn curve_context() -> Ctx {
    VarContext::new(["t"]).expect("static context")
}

fn lit<S: Scalar>(ctx: &Ctx, src: &str) -> Poly<S> {
    parse_poly(ctx, src)
        .expect("static polynomial")
        .map_coeffs(S::from_rational)
}

/// The generators `θ₁, θ₂, θ₃` of the module of vector fields tangent to the
/// standard swallowtail.
pub fn thetas<S: Scalar>(ctx: &Ctx) -> [VField<S>; 3] {
    let field =
        |a: &str, b: &str, c: &str| VField::new(vec![lit(ctx, a), lit(ctx, b), lit(ctx, c)]).expect("static field");
    [
        field("2*u", "3*v", "4*w"),
        field("6*v", "8*w - 2*u^2", "-u*v"),
        field("16*w - 4*u^2", "-8*u*v", "-3*v^2"),
    ]
}

#[derive(Debug, Clone)]
pub struct Swallowtail<S> {
    pub target: Ctx,
    pub source: Ctx,
    pub curve: Ctx,
    /// Components of `f` in `(x, y)`.
    pub param: [Poly<S>; 3],
    /// Implicit equation `h` in `(u, v, w)`.
    pub implicit: Poly<S>,
    pub thetas: [VField<S>; 3],
    /// Singular curve `Σ`, `α(t) = f(−6t², t)`.
    pub sigma: [Poly<S>; 3],
    /// Double point curve `Υ`, `β(t) = f(−2t², t)`.
    pub upsilon: [Poly<S>; 3],
}

impl<S: Scalar> Swallowtail<S> {
    pub fn standard() -> Self {
        let target = target_context();
        let source = source_context();
        let curve = curve_context();
        let param = [
            lit(&source, "x"),
            lit(&source, "-4*y^3 - 2*x*y"),
            lit(&source, "3*y^4 + x*y^2"),
        ];
        let along = |x: &str| -> [Poly<S>; 3] {
            let images = [lit(&curve, x), lit(&curve, "t")];
            param.clone().map(|c| c.compose(&images).expect("curve substitution"))
        };
        let sigma = along("-6*t^2");
        let upsilon = along("-2*t^2");
        Swallowtail {
            implicit: lit(&target, IMPLICIT),
            thetas: thetas(&target),
            target,
            source,
            curve,
            param,
            sigma,
            upsilon,
        }
    }

    /// `g ∘ f` for `g` in the target coordinates.
    pub fn pullback(&self, g: &Poly<S>) -> Result<Poly<S>, PolyError> {
        g.compose(&self.param)
    }

    pub fn eval_param(&self, x: S, y: S) -> [S; 3] {
        let pt = [x, y];
        self.param.clone().map(|c| c.eval(&pt))
    }

    /// `h ∘ f`, which must be the zero polynomial.
    pub fn parametrisation_residual(&self) -> Poly<S> {
        self.pullback(&self.implicit).expect("contexts agree")
    }

    /// Quotients `qᵢ` with `θᵢ·h = qᵢ·h`.
    pub fn tangency_quotients(&self) -> Result<[Poly<S>; 3], SwallowtailError> {
        let mut out = Vec::with_capacity(3);
        for (i, th) in self.thetas.iter().enumerate() {
            let image = th.apply(&self.implicit)?;
            match image.exact_divide(&self.implicit)? {
                Some(q) => out.push(q),
                None => return Err(SwallowtailError::NotTangent(i + 1)),
            }
        }
        Ok(out.try_into().expect("three quotients"))
    }

    pub fn tangent_cone(&self) -> Poly<S> {
        self.implicit.lowest_homogeneous_part()
    }

    /// Columns `∂f/∂x`, `∂f/∂y` of the Jacobian.
    pub fn jacobian(&self) -> [[Poly<S>; 3]; 2] {
        [
            self.param.clone().map(|c| c.derivative(0)),
            self.param.clone().map(|c| c.derivative(1)),
        ]
    }

    /// The three 2×2 minors of the Jacobian, rows `(0,1), (0,2), (1,2)`.
    pub fn jacobian_minors(&self) -> [Poly<S>; 3] {
        let [dx, dy] = self.jacobian();
        let minor = |i: usize, j: usize| &(&dx[i] * &dy[j]) - &(&dx[j] * &dy[i]);
        [minor(0, 1), minor(0, 2), minor(1, 2)]
    }

    /// Minors restricted to `x = −6y²`, expressed in `(x, y)`.
    pub fn minors_on_singular_curve(&self) -> [Poly<S>; 3] {
        let images = [lit(&self.source, "-6*y^2"), lit(&self.source, "y")];
        self.jacobian_minors()
            .map(|m| m.compose(&images).expect("source substitution"))
    }

    pub fn jacobian_rank_at(&self, x: S, y: S) -> usize {
        let pt = [x, y];
        if self.jacobian_minors().iter().any(|m| !m.eval(&pt).is_zero()) {
            return 2;
        }
        let [dx, dy] = self.jacobian();
        if dx.iter().chain(dy.iter()).any(|e| !e.eval(&pt).is_zero()) {
            1
        } else {
            0
        }
    }

    /// `f(−2t², t) − f(−2t², −t)`, componentwise; zero on the double point
    /// curve.
    pub fn double_point_residual(&self) -> [Poly<S>; 3] {
        let other = [lit(&self.curve, "-2*t^2"), lit(&self.curve, "-t")];
        let mirrored = self
            .param
            .clone()
            .map(|c| c.compose(&other).expect("curve substitution"));
        [0, 1, 2].map(|i| &self.upsilon[i] - &mirrored[i])
    }

    /// `h(u, −v, w) − h(u, v, w)`.
    pub fn reflection_residual(&self) -> Poly<S> {
        let t = &self.target;
        let flipped = self
            .implicit
            .compose(&[lit(t, "u"), lit(t, "-v"), lit(t, "w")])
            .expect("reflection");
        &flipped - &self.implicit
    }

    /// `h ∘ α` and `h ∘ β`.
    pub fn curve_residuals(&self) -> [Poly<S>; 2] {
        [
            self.implicit.compose(&self.sigma).expect("sigma"),
            self.implicit.compose(&self.upsilon).expect("upsilon"),
        ]
    }
}

/// Contact type of the tangential line with a fibre `g = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Contact {
    /// `A_k`: `g(f(x, 0))` vanishes to order `k + 1`.
    A(u32),
    /// The tangential line lies inside the fibre.
    Infinite,
}

impl fmt::Display for Contact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Contact::A(k) => write!(f, "A{k}"),
            Contact::Infinite => write!(f, "A∞"),
        }
    }
}

/// Vanishing order of `g(x, 0, 0) = g ∘ f(x, 0)` and its `A`-type.
///
/// `g` must vanish at the origin; an order-1 restriction is reported as `A0`.
pub fn tangential_contact<S: Scalar>(g: &Poly<S>) -> Result<(Option<u32>, Contact), PolyError> {
    let line = curve_context();
    let mut images = vec![lit::<S>(&line, "t")];
    images.extend((1..g.context().arity()).map(|_| Poly::zero(&line)));
    let restricted = g.compose(&images)?;
    Ok(match restricted.low_degree() {
        None => (None, Contact::Infinite),
        Some(m) => (Some(m), Contact::A(m.saturating_sub(1))),
    })
}

/// How the plane `ker(au + bv + cw)` sits relative to the tangential line
/// `span{(1,0,0)}` and the tangent cone `w = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanePosition {
    Transverse,
    ContainsTangentialLine,
    EqualsTangentCone,
}

pub fn plane_position<S: Scalar>(a: &S, b: &S, c: &S) -> Result<PlanePosition, SwallowtailError> {
    match (a.is_zero(), b.is_zero(), c.is_zero()) {
        (true, true, true) => Err(SwallowtailError::ZeroJet),
        (false, _, _) => Ok(PlanePosition::Transverse),
        (true, false, _) => Ok(PlanePosition::ContainsTangentialLine),
        (true, true, false) => Ok(PlanePosition::EqualsTangentCone),
    }
}

/// [`plane_position`] of the linear part of a germ in `(u, v, w)`.
pub fn plane_position_of<S: Scalar>(g: &Poly<S>) -> Result<PlanePosition, SwallowtailError> {
    let n = g.context().arity();
    let coeff = |i| g.coeff(&crate::Mono::var(n, i));
    plane_position(&coeff(0), &coeff(1), &coeff(2))
}

/// Every geometric identity of the standard swallowtail, as a report.
pub fn verify_geometry() -> Report {
    let st = Swallowtail::<Rational>::standard();
    let mut r = Report::new("verify-geometry");
    let q = |n: i64| Rational::from_integer(n.into());

    let residual = st.parametrisation_residual();
    r.push(Check::new(
        "parametrisation",
        "h∘f vanishes identically",
        residual.is_zero(),
        json!({ "residual": residual.to_string(), "implicit": st.implicit.to_string() }),
    ));
    let origin = st.eval_param(q(0), q(0));
    let at = st.eval_param(q(-6), q(1));
    r.push(Check::new(
        "parametrisation-samples",
        "f(0,0) = 0 and f(−6,1) = α(1) = (−6, 8, −3)",
        origin.iter().all(|c| c == &q(0)) && at == [q(-6), q(8), q(-3)],
        json!({ "f(-6,1)": at.iter().map(ToString::to_string).collect::<Vec<_>>() }),
    ));

    match st.tangency_quotients() {
        Ok(qs) => {
            let ok = qs[0] == QPoly::constant(&st.target, q(12));
            r.push(Check::new(
                "tangency",
                "θᵢ·h ∈ ⟨h⟩ for i = 1,2,3 with θ₁·h = 12h",
                ok,
                json!({ "quotients": qs.iter().map(ToString::to_string).collect::<Vec<_>>() }),
            ));
        }
        Err(e) => r.push(Check::new(
            "tangency",
            "θᵢ·h ∈ ⟨h⟩ for i = 1,2,3 with θ₁·h = 12h",
            false,
            json!({ "error": e.to_string() }),
        )),
    }

    let cone = st.tangent_cone();
    r.push(Check::new(
        "tangent-cone",
        "lowest-degree part of h is 256w³",
        cone == parse_poly(&st.target, "256*w^3").expect("static"),
        json!({ "tangent_cone": cone.to_string() }),
    ));

    let reflect = st.reflection_residual();
    r.push(Check::new(
        "reflection",
        "h(u,−v,w) = h(u,v,w)",
        reflect.is_zero(),
        json!({ "residual": reflect.to_string() }),
    ));

    let on_sigma = st.minors_on_singular_curve();
    let generic_rank = st.jacobian_rank_at(q(1), q(1));
    let origin_rank = st.jacobian_rank_at(q(0), q(0));
    r.push(Check::new(
        "singular-curve",
        "Jacobian minors of f vanish on x = −6y²; rank 2 at (1,1), rank 1 at the origin",
        on_sigma.iter().all(Poly::is_zero) && generic_rank == 2 && origin_rank == 1,
        json!({
            "minors": st.jacobian_minors().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rank_at_1_1": generic_rank,
            "rank_at_origin": origin_rank,
        }),
    ));

    let dp = st.double_point_residual();
    let beta_expected = [
        parse_poly(&st.curve, "-2*t^2").expect("static"),
        QPoly::zero(&st.curve),
        parse_poly(&st.curve, "t^4").expect("static"),
    ];
    r.push(Check::new(
        "double-point-curve",
        "f(−2t²,t) = f(−2t²,−t) and β(t) = (−2t², 0, t⁴)",
        dp.iter().all(Poly::is_zero) && st.upsilon == beta_expected,
        json!({ "beta": st.upsilon.iter().map(ToString::to_string).collect::<Vec<_>>() }),
    ));

    let alpha_expected = ["-6*t^2", "8*t^3", "-3*t^4"].map(|s| parse_poly(&st.curve, s).expect("static"));
    let [on_a, on_b] = st.curve_residuals();
    r.push(Check::new(
        "curves-on-surface",
        "α(t) = (−6t², 8t³, −3t⁴); h∘α = h∘β = 0",
        st.sigma == alpha_expected && on_a.is_zero() && on_b.is_zero(),
        json!({ "alpha": st.sigma.iter().map(ToString::to_string).collect::<Vec<_>>() }),
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st() -> Swallowtail<Rational> {
        Swallowtail::standard()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn implicit_equation_vanishes_on_image() {
        assert!(st().parametrisation_residual().is_zero());
    }

    #[test]
    fn sample_points() {
        let s = st();
        assert_eq!(s.eval_param(q(0), q(0)), [q(0), q(0), q(0)]);
        assert_eq!(s.eval_param(q(-6), q(1)), [q(-6), q(8), q(-3)]);
        let beta1 = s.upsilon.clone().map(|c| c.eval(&[q(1)]));
        assert_eq!(beta1, [q(-2), q(0), q(1)]);
        let beta0 = s.upsilon.clone().map(|c| c.eval(&[q(0)]));
        assert_eq!(beta0, [q(0), q(0), q(0)]);
    }

    #[test]
    fn theta_one_quotient_is_twelve() {
        let qs = st().tangency_quotients().unwrap();
        assert_eq!(qs[0], QPoly::constant(&target_context(), q(12)));
    }

    #[test]
    fn theta_actions() {
        let s = st();
        let v = parse_poly(&s.target, "v").unwrap();
        assert_eq!(s.thetas[0].apply(&v).unwrap(), parse_poly(&s.target, "3*v").unwrap());
        assert_eq!(
            s.thetas[1].apply(&v).unwrap(),
            parse_poly(&s.target, "8*w - 2*u^2").unwrap()
        );
        let one = QPoly::one(&s.target);
        for th in &s.thetas {
            assert!(th.apply(&one).unwrap().is_zero());
            assert!(th.vanishes_at_origin());
        }
    }

    #[test]
    fn tangent_cone_and_scaling() {
        let s = st();
        assert_eq!(s.tangent_cone(), parse_poly(&s.target, "256*w^3").unwrap());
        let t = &s.target;
        let scaled = s
            .implicit
            .compose(&["2*u", "2*v", "2*w"].map(|e| parse_poly(t, e).unwrap()))
            .unwrap();
        assert_eq!(scaled.lowest_homogeneous_part(), parse_poly(t, "2048*w^3").unwrap());
    }

    #[test]
    fn singular_curve() {
        let s = st();
        assert!(s.minors_on_singular_curve().iter().all(Poly::is_zero));
        assert_eq!(s.jacobian_rank_at(q(1), q(1)), 2);
        assert_eq!(s.jacobian_rank_at(q(0), q(0)), 1);
    }

    #[test]
    fn double_point_curve() {
        let s = st();
        assert!(s.double_point_residual().iter().all(Poly::is_zero));
        assert!(s.reflection_residual().is_zero());
        assert!(s.curve_residuals().iter().all(Poly::is_zero));
    }

    #[test]
    fn contact_types() {
        let t = target_context();
        let g = |s: &str| parse_poly(&t, s).unwrap();
        assert_eq!(tangential_contact(&g("v + u^2")).unwrap(), (Some(2), Contact::A(1)));
        assert_eq!(tangential_contact(&g("v + u^3")).unwrap(), (Some(3), Contact::A(2)));
        assert_eq!(tangential_contact(&g("v")).unwrap(), (None, Contact::Infinite));
        assert_eq!(Contact::A(2).to_string(), "A2");
    }

    #[test]
    fn plane_positions() {
        let (z, o) = (q(0), q(1));
        assert_eq!(plane_position(&o, &z, &z).unwrap(), PlanePosition::Transverse);
        assert_eq!(
            plane_position(&z, &o, &z).unwrap(),
            PlanePosition::ContainsTangentialLine
        );
        assert_eq!(plane_position(&z, &z, &o).unwrap(), PlanePosition::EqualsTangentCone);
        assert_eq!(plane_position(&z, &z, &z), Err(SwallowtailError::ZeroJet));
    }

    #[test]
    fn float_instance_agrees() {
        let s = Swallowtail::<f64>::standard();
        assert!(s.parametrisation_residual().is_zero());
        assert_eq!(s.eval_param(-6.0, 1.0), [-6.0, 8.0, -3.0]);
    }

    #[test]
    fn geometry_report_passes() {
        let r = verify_geometry();
        assert!(r.passed(), "{}", r.to_table());
    }
}
