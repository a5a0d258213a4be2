//! Discriminants of the versal unfoldings restricted to the swallowtail.
//!
//! For an unfolding `F(u, v, w, a1, a2)` the families are
//! `G = F(f(x, y), a1, a2)`, `H₁ = F(α(t), a1, a2)` and `H₂ = F(β(t), a1, a2)`.
//! `D1` is the critical-value set of `G`, `D2` of `H₁` and `D3` of `H₂`.
//! The solvers only handle the shapes that occur here: everything is affine
//! in `a1`, and `∂G/∂y` splits into factors linear in one variable.

mod golden;
mod mesh;
mod singular;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::classifier::{ClassifyError, FormKind, NormalForm};
use crate::poly::{Ctx, Mono, PolyError, VarContext};
use crate::report::{Check, Report};
use crate::{QPoly, Rational};

pub use golden::{
    bundled_golden, load_golden, parse_golden, GoldenBranch, GoldenCase, GoldenCurve, GoldenDiscriminant, GoldenError,
    GoldenFamily, GoldenFile, GoldenSingular, Instantiated,
};
pub use mesh::{grid, mesh_branch, mesh_map, Mesh, MeshOutput, Polyline};
pub use singular::{generic_samples, singular_locus, SingularCurve};
pub use verify::verify_discriminants;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiscriminantError {
    #[error("unsupported shape: {0}")]
    Unsupported(String),
    #[error("not a boundary form: {0}")]
    NotBoundaryForm(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Which discriminant: `D1` from `G`, `D2` from `H₁`, `D3` from `H₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Which {
    D1,
    D2,
    D3,
}

impl Which {
    pub const ALL: [Which; 3] = [Which::D1, Which::D2, Which::D3];

    /// Context of the family this discriminant comes from.
    pub fn family_context(self) -> Ctx {
        match self {
            Which::D1 => surface_family_context(),
            Which::D2 | Which::D3 => curve_family_context(),
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::D1 => "D1",
            Which::D2 => "D2",
            Which::D3 => "D3",
        })
    }
}

impl FromStr for Which {
    type Err = DiscriminantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "D1" => Ok(Which::D1),
            "D2" => Ok(Which::D2),
            "D3" => Ok(Which::D3),
            _ => Err(DiscriminantError::Invalid(format!("unknown discriminant {s:?}"))),
        }
    }
}

/// `(x, y, a1, a2)`
pub fn surface_family_context() -> Ctx {
    VarContext::new(["x", "y", "a1", "a2"]).expect("static context")
}

/// `(t, a1, a2)`
pub fn curve_family_context() -> Ctx {
    VarContext::new(["t", "a1", "a2"]).expect("static context")
}

fn var(ctx: &Ctx, name: &str) -> QPoly {
    QPoly::var(ctx, name).expect("variable in context")
}

fn lit(ctx: &Ctx, src: &str) -> QPoly {
    crate::poly::parse_poly(ctx, src).expect("static polynomial")
}

/// Case number 1–4 of a normal form, if it has a modelled unfolding.
pub fn case_of(form: &NormalForm) -> Option<u8> {
    match form.kind {
        FormKind::U => Some(1),
        FormKind::V { k: 1 } => Some(2),
        FormKind::V { k: 2 } => Some(3),
        FormKind::V { .. } => None,
        FormKind::W => Some(4),
    }
}

pub fn form_for_case(case: u8, sign: i8, a: Rational, b: Rational) -> Result<NormalForm, DiscriminantError> {
    match case {
        1 => Ok(NormalForm::u(sign)),
        2 => Ok(NormalForm::v(1, a)),
        3 => Ok(NormalForm::v(2, a)),
        4 => Ok(NormalForm::w(sign, a, b)),
        _ => Err(DiscriminantError::Invalid(format!("case must be 1-4, got {case}"))),
    }
}

/// The unfolding and its three pullbacks.
#[derive(Debug, Clone, PartialEq)]
pub struct Family {
    pub case: u8,
    pub form: NormalForm,
    /// `F(u, v, w, a1, a2)`
    pub f: QPoly,
    /// `G(x, y, a1, a2)`
    pub g: QPoly,
    /// `H₁(t, a1, a2)`
    pub h1: QPoly,
    /// `H₂(t, a1, a2)`
    pub h2: QPoly,
}

impl Family {
    /// The family whose critical values give `which`.
    pub fn of(&self, which: Which) -> &QPoly {
        match which {
            Which::D1 => &self.g,
            Which::D2 => &self.h1,
            Which::D3 => &self.h2,
        }
    }
}

pub fn build_family(form: &NormalForm) -> Result<Family, DiscriminantError> {
    let case =
        case_of(form).ok_or_else(|| DiscriminantError::Unsupported(format!("no modelled unfolding for {form}")))?;
    let f = form.unfolding()?;
    let s = surface_family_context();
    let images = [
        var(&s, "x"),
        lit(&s, "-4*y^3 - 2*x*y"),
        lit(&s, "3*y^4 + x*y^2"),
        var(&s, "a1"),
        var(&s, "a2"),
    ];
    let g = f.compose(&images)?;
    let c = curve_family_context();
    let along = |curve: [&str; 3]| -> Result<QPoly, PolyError> {
        let images = [
            lit(&c, curve[0]),
            lit(&c, curve[1]),
            lit(&c, curve[2]),
            var(&c, "a1"),
            var(&c, "a2"),
        ];
        f.compose(&images)
    };
    let h1 = along(["-6*t^2", "8*t^3", "-3*t^4"])?;
    let h2 = along(["-2*t^2", "0", "t^4"])?;
    Ok(Family {
        case,
        form: form.clone(),
        f,
        g,
        h1,
        h2,
    })
}

/// A parametrised piece of a discriminant.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    pub label: String,
    pub which: Which,
    /// Parameter context (one or two variables).
    pub params: Ctx,
    /// The source point: one polynomial in the parameters per variable of
    /// the originating family.
    pub source: Vec<QPoly>,
    /// `(a1, a2, value)`
    pub map: [QPoly; 3],
}

impl Branch {
    pub fn param_names(&self) -> &[String] {
        self.params.names()
    }

    /// Equality up to renaming the parameters positionally.
    pub fn same_as(&self, other: &Branch) -> bool {
        if self.which != other.which
            || self.params.arity() != other.params.arity()
            || self.source.len() != other.source.len()
        {
            return false;
        }
        let rename = |p: &QPoly| p.with_context(&self.params);
        self.source.iter().zip(&other.source).all(|(a, b)| *a == rename(b))
            && self.map.iter().zip(&other.map).all(|(a, b)| *a == rename(b))
    }

    /// Fixes one parameter, leaving a branch in the others.
    pub fn restrict(&self, param: &str, value: &Rational) -> Result<Branch, DiscriminantError> {
        let idx = self
            .params
            .index_of(param)
            .ok_or_else(|| DiscriminantError::Invalid(format!("branch has no parameter {param:?}")))?;
        let rest: Vec<&String> = self.params.names().iter().filter(|n| *n != param).collect();
        if rest.is_empty() {
            return Err(DiscriminantError::Invalid("cannot fix the only parameter".into()));
        }
        let ctx = VarContext::new(rest.iter().map(|s| s.as_str()))?;
        let images: Vec<QPoly> = self
            .params
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| {
                if i == idx {
                    QPoly::constant(&ctx, value.clone())
                } else {
                    var(&ctx, n)
                }
            })
            .collect();
        let sub = |p: &QPoly| p.compose(&images);
        Ok(Branch {
            label: format!("{} ({param} = {})", self.label, crate::scalar::format_rational(value)),
            which: self.which,
            source: self.source.iter().map(sub).collect::<Result<_, _>>()?,
            map: [sub(&self.map[0])?, sub(&self.map[1])?, sub(&self.map[2])?],
            params: ctx,
        })
    }

    /// The three 2×2 minors of the Jacobian of `map`, rows `(0,1), (0,2), (1,2)`.
    pub fn jacobian_minors(&self) -> Result<[QPoly; 3], DiscriminantError> {
        if self.params.arity() != 2 {
            return Err(DiscriminantError::Invalid("minors need a two-parameter branch".into()));
        }
        let d: Vec<[QPoly; 2]> = self.map.iter().map(|p| [p.derivative(0), p.derivative(1)]).collect();
        let minor = |i: usize, j: usize| &(&d[i][0] * &d[j][1]) - &(&d[i][1] * &d[j][0]);
        Ok([minor(0, 1), minor(0, 2), minor(1, 2)])
    }

    pub fn eval(&self, point: &[Rational]) -> [Rational; 3] {
        [
            self.map[0].eval(point),
            self.map[1].eval(point),
            self.map[2].eval(point),
        ]
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: ({}, {}, {})",
            self.label,
            self.params.names().join(", "),
            self.map[0],
            self.map[1],
            self.map[2]
        )
    }
}

/// Images that move a polynomial in `family` variables into `params`
/// variables; variables absent from `params` must not occur.
fn into_params(p: &QPoly, params: &Ctx) -> Result<QPoly, DiscriminantError> {
    let ctx = p.context();
    let mut images = Vec::with_capacity(ctx.arity());
    for (i, name) in ctx.names().iter().enumerate() {
        match params.index_of(name) {
            Some(_) => images.push(var(params, name)),
            None if p.degree_in(i) == 0 => images.push(QPoly::zero(params)),
            None => {
                return Err(DiscriminantError::Unsupported(format!(
                    "{name} survives in {p} but is not a parameter"
                )))
            }
        }
    }
    Ok(p.compose(&images)?)
}

/// `p / x_index^m` for the largest such `m`, and `m`.
fn strip_power(p: &QPoly, index: usize) -> (QPoly, u32) {
    let m = p.low_degree_in(index);
    let q = QPoly::from_terms(
        p.context(),
        p.terms().map(|(mono, c)| {
            let mut e = mono.exps().to_vec();
            e[index] -= m;
            (Mono::new(e), c.clone())
        }),
    );
    (q, m)
}

/// Solves `r = 0` for variable `index`, where `r` is affine in it with a
/// constant leading coefficient or one dividing the rest exactly.
fn solve_affine(r: &QPoly, index: usize) -> Result<Option<QPoly>, DiscriminantError> {
    if r.degree_in(index) != 1 {
        return Ok(None);
    }
    let c1 = r.coefficient_in(index, 1);
    let c0 = r.coefficient_in(index, 0);
    match c0.exact_divide(&c1)? {
        Some(q) => Ok(Some(-&q)),
        None => Err(DiscriminantError::Unsupported(format!(
            "cannot solve {r} = 0 polynomially in {}",
            r.context().names()[index]
        ))),
    }
}

/// Critical values of a one-variable family `H(t, a1, a2)`.
///
/// `∂H/∂t = t^m·R` with `R` affine in `a1`. Emits the plane `t = 0` when
/// `m ≥ 1` and the sheet `a1 = φ(t, a2)` when `R` involves `a1`.
pub fn discriminant_curve(h: &QPoly, which: Which) -> Result<Vec<Branch>, DiscriminantError> {
    let ctx = h.context().clone();
    if ctx.names() != curve_family_context().names() {
        return Err(DiscriminantError::Invalid(
            "expected a polynomial in (t, a1, a2)".into(),
        ));
    }
    let dh = h.derivative(0);
    if dh.is_zero() {
        return Err(DiscriminantError::Unsupported("family does not depend on t".into()));
    }
    let (r, m) = strip_power(&dh, 0);
    let mut out = Vec::new();
    if m >= 1 {
        let params = VarContext::new(["a1", "a2"])?;
        let source = vec![QPoly::zero(&params), var(&params, "a1"), var(&params, "a2")];
        let value = h.compose(&source)?;
        out.push(Branch {
            label: "plane".into(),
            which,
            map: [source[1].clone(), source[2].clone(), value],
            source,
            params,
        });
    }
    match solve_affine(&r, 1)? {
        Some(phi) => {
            let params = VarContext::new(["t", "a2"])?;
            let phi = into_params(&phi, &params)?;
            let source = vec![var(&params, "t"), phi.clone(), var(&params, "a2")];
            let value = h.compose(&source)?;
            out.push(Branch {
                label: "sheet".into(),
                which,
                map: [phi, source[2].clone(), value],
                source,
                params,
            });
        }
        None if r.degree_in(1) > 1 => return Err(DiscriminantError::Unsupported(format!("{r} is not affine in a1"))),
        None if !r.is_constant() => return Err(DiscriminantError::Unsupported(format!("{r} = 0 needs solving in t"))),
        None => {}
    }
    Ok(out)
}

const SOLVE_ORDER: [usize; 3] = [0, 3, 1];

/// Critical values of `G(x, y, a1, a2)`.
pub fn discriminant_surface(g: &QPoly) -> Result<Vec<Branch>, DiscriminantError> {
    let ctx = g.context().clone();
    if ctx.names() != surface_family_context().names() {
        return Err(DiscriminantError::Invalid(
            "expected a polynomial in (x, y, a1, a2)".into(),
        ));
    }
    let gx = g.derivative(0);
    let gy = g.derivative(1);
    if gy.is_zero() {
        return if gx.is_constant() && !gx.is_zero() {
            Ok(vec![])
        } else {
            Err(DiscriminantError::Unsupported(format!("∂G/∂y = 0 with ∂G/∂x = {gx}")))
        };
    }
    let factors = match gy.degree_in(0) {
        0 => vec![gy.clone()],
        1 => {
            let c1 = gy.coefficient_in(0, 1);
            let c0 = gy.coefficient_in(0, 0);
            if c1.is_constant() {
                vec![gy.clone()]
            } else if let Some(q) = c0.exact_divide(&c1)? {
                vec![c1, &var(&ctx, "x") + &q]
            } else {
                return Err(DiscriminantError::Unsupported(format!("cannot factor ∂G/∂y = {gy}")));
            }
        }
        _ => {
            return Err(DiscriminantError::Unsupported(format!(
                "∂G/∂y = {gy} is not linear in x"
            )))
        }
    };
    let mut out = Vec::new();
    for factor in &factors {
        if factor.degree_in(2) > 0 {
            return Err(DiscriminantError::Unsupported(format!("factor {factor} involves a1")));
        }
        let solved = SOLVE_ORDER.iter().find_map(|&i| {
            (factor.degree_in(i) == 1 && factor.coefficient_in(i, 1).is_constant())
                .then(|| solve_affine(factor, i).map(|s| (i, s)))
        });
        let (vi, expr) = match solved {
            Some(Ok((i, Some(e)))) => (i, e),
            Some(Err(e)) => return Err(e),
            _ => return Err(DiscriminantError::Unsupported(format!("cannot solve factor {factor}"))),
        };
        let mut images: Vec<QPoly> = (0..4).map(|i| QPoly::var_at(&ctx, i)).collect();
        images[vi] = expr.clone();
        let gx_on = gx.compose(&images)?;
        let phi = match solve_affine(&gx_on, 2)? {
            Some(phi) => phi,
            None => {
                return Err(DiscriminantError::Unsupported(format!(
                    "∂G/∂x = {gx_on} does not determine a1"
                )))
            }
        };
        let names: Vec<&str> = [0usize, 1, 3]
            .iter()
            .filter(|&&i| i != vi)
            .map(|&i| ctx.names()[i].as_str())
            .collect();
        let params = VarContext::new(names)?;
        let mut source = Vec::with_capacity(4);
        for i in 0..4 {
            let p = match i {
                2 => into_params(&phi, &params)?,
                _ if i == vi => into_params(&expr, &params)?,
                _ => var(&params, &ctx.names()[i]),
            };
            source.push(p);
        }
        let value = g.compose(&source)?;
        let label = format!("{} = {}", ctx.names()[vi], source[vi]);
        out.push(Branch {
            label,
            which: Which::D1,
            map: [source[2].clone(), source[3].clone(), value],
            source,
            params,
        });
    }
    Ok(out)
}

pub fn discriminant(fam: &Family, which: Which) -> Result<Vec<Branch>, DiscriminantError> {
    match which {
        Which::D1 => discriminant_surface(&fam.g),
        Which::D2 => discriminant_curve(&fam.h1, which),
        Which::D3 => discriminant_curve(&fam.h2, which),
    }
}

/// Residual polynomials of a branch against its family; all zero when the
/// branch is correct.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchResiduals {
    /// Critical equations on the branch.
    pub critical: Vec<QPoly>,
    /// `map[0] − a1`, `map[1] − a2` along the source.
    pub coordinates: [QPoly; 2],
    /// `map[2] − family(source)`.
    pub value: QPoly,
}

impl BranchResiduals {
    pub fn all_zero(&self) -> bool {
        self.critical.iter().chain(&self.coordinates).all(QPoly::is_zero) && self.value.is_zero()
    }
}

pub fn branch_residuals(br: &Branch, fam: &Family) -> Result<BranchResiduals, DiscriminantError> {
    let h = fam.of(br.which);
    let arity = h.context().arity();
    if br.source.len() != arity {
        return Err(DiscriminantError::Invalid(format!(
            "branch source has {} entries, family has {arity} variables",
            br.source.len()
        )));
    }
    let on = |p: &QPoly| p.compose(&br.source);
    let critical = match br.which {
        Which::D1 => vec![on(&h.derivative(0))?, on(&h.derivative(1))?],
        _ => vec![on(&h.derivative(0))?],
    };
    let (ia1, ia2) = (arity - 2, arity - 1);
    Ok(BranchResiduals {
        critical,
        coordinates: [
            br.map[0].checked_sub(&br.source[ia1])?,
            br.map[1].checked_sub(&br.source[ia2])?,
        ],
        value: br.map[2].checked_sub(&on(h)?)?,
    })
}

/// Substitutes a branch into its family and checks every residual is zero.
pub fn verify_branch(br: &Branch, fam: &Family) -> Report {
    let mut r = Report::new(format!("verify-branch {} {}", br.which, br.label));
    match branch_residuals(br, fam) {
        Ok(res) => {
            let show = |ps: &[QPoly]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>();
            r.push(Check::new(
                "critical",
                format!("critical equations of {} vanish on the branch", br.which),
                res.critical.iter().all(QPoly::is_zero),
                json!({ "residuals": show(&res.critical) }),
            ));
            r.push(Check::new(
                "coordinates",
                "branch coordinates are (a1, a2) of the source point",
                res.coordinates.iter().all(QPoly::is_zero),
                json!({ "residuals": show(&res.coordinates) }),
            ));
            r.push(Check::new(
                "value",
                "branch value is the family at the source point",
                res.value.is_zero(),
                json!({ "residual": res.value.to_string() }),
            ));
        }
        Err(e) => r.push(Check::new(
            "residuals",
            "branch residuals",
            false,
            json!({ "error": e.to_string() }),
        )),
    }
    r
}

/// `B_k` type of `H₂`: with every parameter at zero it is `c·t^{2k}` plus
/// higher even powers, and no odd power of `t` appears anywhere.
pub fn boundary_singularity_type(h2: &QPoly) -> Result<u32, DiscriminantError> {
    if let Some((m, _)) = h2.terms().find(|(m, _)| m.exps()[0] % 2 == 1) {
        return Err(DiscriminantError::NotBoundaryForm(format!(
            "odd power {} of t",
            m.display_with(h2.context().names())
        )));
    }
    let ctx = h2.context();
    let mut images = vec![QPoly::var_at(ctx, 0)];
    images.extend((1..ctx.arity()).map(|_| QPoly::zero(ctx)));
    let at_zero = h2.compose(&images)?;
    match at_zero.low_degree() {
        Some(d) if d >= 2 => Ok(d / 2),
        _ => Err(DiscriminantError::NotBoundaryForm(format!(
            "{at_zero} has no even leading power"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn curve(src: &str) -> QPoly {
        lit(&curve_family_context(), src)
    }

    fn surf(src: &str) -> QPoly {
        lit(&surface_family_context(), src)
    }

    #[test]
    fn families_of_case_one() {
        let fam = build_family(&NormalForm::u(-1)).unwrap();
        assert_eq!(fam.g, surf("-x"));
        assert_eq!(fam.h1, curve("6*t^2"));
        assert_eq!(fam.h2, curve("2*t^2"));
        assert!(discriminant(&fam, Which::D1).unwrap().is_empty());
        let d3 = discriminant(&fam, Which::D3).unwrap();
        assert_eq!(d3.len(), 1);
        assert_eq!(d3[0].label, "plane");
    }

    #[test]
    fn case_two_families() {
        let fam = build_family(&NormalForm::v(1, q(1, 1))).unwrap();
        assert_eq!(fam.h2, curve("4*t^4 - 2*a1*t^2"));
        let d3 = discriminant(&fam, Which::D3).unwrap();
        assert_eq!(d3.len(), 2);
        let p = &d3[1].params;
        assert_eq!(d3[1].map, [lit(p, "4*t^2"), lit(p, "a2"), lit(p, "-4*t^4")]);
        let d1 = discriminant(&fam, Which::D1).unwrap();
        assert_eq!(d1.len(), 1);
        let p = &d1[0].params;
        assert_eq!(d1[0].map[0], lit(p, "2*y + 12*y^2"));
        for which in Which::ALL {
            for br in discriminant(&fam, which).unwrap() {
                assert!(branch_residuals(&br, &fam).unwrap().all_zero(), "{br}");
            }
        }
    }

    #[test]
    fn case_four_sheets() {
        let fam = build_family(&NormalForm::w(1, q(1, 1), q(1, 1))).unwrap();
        let d1 = discriminant(&fam, Which::D1).unwrap();
        assert_eq!(d1.len(), 2);
        assert_eq!(d1[0].param_names(), ["x", "y"]);
        assert_eq!(d1[0].label, "a2 = y");
        assert_eq!(d1[1].param_names(), ["y", "a2"]);
        assert_eq!(d1[1].label, "x = -6*y^2");
        for br in &d1 {
            assert!(branch_residuals(br, &fam).unwrap().all_zero());
        }
    }

    #[test]
    fn boundary_types() {
        assert_eq!(boundary_singularity_type(&curve("4*t^4 - 2*a1*t^2")), Ok(2));
        assert_eq!(boundary_singularity_type(&curve("-8*t^6 - 2*a1*t^2 + 4*a2*t^4")), Ok(3));
        assert_eq!(boundary_singularity_type(&curve("-2*t^2")), Ok(1));
        assert!(matches!(
            boundary_singularity_type(&curve("t^3 + t^4")),
            Err(DiscriminantError::NotBoundaryForm(_))
        ));
    }

    #[test]
    fn perturbed_branch_is_flagged() {
        let fam = build_family(&NormalForm::v(2, q(1, 1))).unwrap();
        let mut br = discriminant(&fam, Which::D1).unwrap().remove(0);
        assert!(verify_branch(&br, &fam).passed());
        br.map[2] = &br.map[2] + &lit(&br.params, "y^5");
        let r = verify_branch(&br, &fam);
        assert!(!r.passed());
        assert_eq!(r.failures().next().unwrap().id, "value");
    }

    #[test]
    fn restricting_a_parameter() {
        let fam = build_family(&NormalForm::v(1, q(1, 1))).unwrap();
        let br = &discriminant(&fam, Which::D2).unwrap()[1];
        let c = br.restrict("a2", &q(1, 2)).unwrap();
        assert_eq!(c.param_names(), ["t"]);
        assert_eq!(c.map[1], QPoly::constant(&c.params, q(1, 2)));
        assert!(br.restrict("t", &q(0, 1)).unwrap().restrict("a2", &q(0, 1)).is_err());
    }

    #[test]
    fn unsupported_shapes() {
        assert!(discriminant_curve(&curve("t^3*a1^2 + t^2"), Which::D2).is_err());
        assert!(discriminant_surface(&surf("x^2*y^2")).is_err());
    }
}
