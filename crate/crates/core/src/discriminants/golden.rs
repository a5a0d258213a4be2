//! Reference displays of the families and discriminants, stored as data.
//!
//! Polynomials are strings over the family variables and the symbols `a`,
//! `b` (moduli) and `s` (the sign of `±u`, `±w`).

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{curve_family_context, surface_family_context, Branch, Which};
use crate::classifier::{unfolding_context, NormalForm};
use crate::poly::parse::parse_poly_with;
use crate::poly::{Ctx, VarContext};
use crate::{QPoly, Rational};

const BUNDLED: &str = include_str!("../../data/golden.json");

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("golden data line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("golden data {location}: {message}")]
    Poly { location: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenFile {
    pub symbols: Vec<String>,
    pub cases: Vec<GoldenCase>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenCase {
    pub case: u8,
    pub citation: String,
    pub unfolding: String,
    pub family: GoldenFamily,
    pub boundary: Option<String>,
    pub discriminants: Vec<GoldenDiscriminant>,
    pub singular: Vec<GoldenSingular>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenFamily {
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "H1")]
    pub h1: String,
    #[serde(rename = "H2")]
    pub h2: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenDiscriminant {
    pub which: Which,
    pub citation: String,
    pub branches: Vec<GoldenBranch>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenBranch {
    pub label: String,
    pub params: Vec<String>,
    /// Family variable ↦ polynomial in the parameters.
    pub source: BTreeMap<String, String>,
    pub map: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenSingular {
    pub citation: String,
    pub which: Which,
    /// Label of the branch the curves lie on.
    pub branch: String,
    pub curves: Vec<GoldenCurve>,
}

/// A curve in a branch's domain and its claimed image.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenCurve {
    pub param: String,
    /// One entry per branch parameter.
    pub domain: Vec<String>,
    pub image: [String; 3],
}

pub fn bundled_golden() -> GoldenFile {
    parse_golden(BUNDLED).expect("bundled golden data is valid")
}

pub fn load_golden(path: &Path) -> Result<GoldenFile, GoldenError> {
    let text = std::fs::read_to_string(path).map_err(|source| GoldenError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_golden(&text)
}

/// Parses and validates golden data: every polynomial must parse with the
/// symbols set to sample values.
pub fn parse_golden(text: &str) -> Result<GoldenFile, GoldenError> {
    let file: GoldenFile = serde_json::from_str(text).map_err(|e| GoldenError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let probe = NormalForm::w(1, Rational::from_integer(2.into()), Rational::from_integer(3.into()));
    for case in &file.cases {
        case.instantiate_with(&probe)?;
    }
    Ok(file)
}

impl GoldenFile {
    pub fn case(&self, n: u8) -> Option<&GoldenCase> {
        self.cases.iter().find(|c| c.case == n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("golden data serialises")
    }
}

/// A golden case with moduli substituted.
#[derive(Debug, Clone)]
pub struct Instantiated {
    pub unfolding: QPoly,
    pub g: QPoly,
    pub h1: QPoly,
    pub h2: QPoly,
    pub branches: BTreeMap<Which, Vec<Branch>>,
    pub citations: BTreeMap<Which, String>,
    /// `(which, branch label, curves, citation)`
    pub singular: Vec<(Which, String, Vec<super::SingularCurve>, String)>,
}

fn symbols(form: &NormalForm) -> HashMap<String, Rational> {
    HashMap::from([
        ("a".to_string(), form.a.clone()),
        ("b".to_string(), form.b.clone()),
        ("s".to_string(), Rational::from_integer(form.sign.into())),
    ])
}

fn parse_at(ctx: &Ctx, src: &str, syms: &HashMap<String, Rational>, location: &str) -> Result<QPoly, GoldenError> {
    parse_poly_with(ctx, src, syms).map_err(|e| GoldenError::Poly {
        location: location.to_string(),
        message: format!("{e} in {src:?}"),
    })
}

impl GoldenCase {
    /// Substitutes the moduli of `form` (its sign for `s`).
    pub fn instantiate_with(&self, form: &NormalForm) -> Result<Instantiated, GoldenError> {
        let syms = symbols(form);
        let at = |loc: String| format!("case {} {loc}", self.case);
        let surf = surface_family_context();
        let curve = curve_family_context();
        let unfolding = parse_at(&unfolding_context(), &self.unfolding, &syms, &at("unfolding".into()))?;
        let g = parse_at(&surf, &self.family.g, &syms, &at("G".into()))?;
        let h1 = parse_at(&curve, &self.family.h1, &syms, &at("H1".into()))?;
        let h2 = parse_at(&curve, &self.family.h2, &syms, &at("H2".into()))?;

        let mut branches = BTreeMap::new();
        let mut citations = BTreeMap::new();
        for d in &self.discriminants {
            let fam_ctx = d.which.family_context();
            let mut out = Vec::new();
            for b in &d.branches {
                let loc = |what: &str| at(format!("{} {} {what}", d.which, b.label));
                let params = VarContext::new(b.params.iter().map(String::as_str)).map_err(|e| GoldenError::Poly {
                    location: loc("params"),
                    message: e.to_string(),
                })?;
                let mut source = Vec::new();
                for name in fam_ctx.names() {
                    let src = b.source.get(name).ok_or_else(|| GoldenError::Poly {
                        location: loc("source"),
                        message: format!("missing variable {name}"),
                    })?;
                    source.push(parse_at(&params, src, &syms, &loc(&format!("source {name}")))?);
                }
                if let Some(extra) = b.source.keys().find(|k| fam_ctx.index_of(k).is_none()) {
                    return Err(GoldenError::Poly {
                        location: loc("source"),
                        message: format!("unknown variable {extra}"),
                    });
                }
                let map = [
                    parse_at(&params, &b.map[0], &syms, &loc("map"))?,
                    parse_at(&params, &b.map[1], &syms, &loc("map"))?,
                    parse_at(&params, &b.map[2], &syms, &loc("map"))?,
                ];
                out.push(Branch {
                    label: b.label.clone(),
                    which: d.which,
                    params,
                    source,
                    map,
                });
            }
            branches.insert(d.which, out);
            citations.insert(d.which, d.citation.clone());
        }

        let mut singular = Vec::new();
        for s in &self.singular {
            let mut curves = Vec::new();
            for (i, c) in s.curves.iter().enumerate() {
                let loc = at(format!("singular {} curve {i}", s.branch));
                let ctx = VarContext::new([c.param.as_str()]).map_err(|e| GoldenError::Poly {
                    location: loc.clone(),
                    message: e.to_string(),
                })?;
                let domain = c
                    .domain
                    .iter()
                    .map(|d| parse_at(&ctx, d, &syms, &loc))
                    .collect::<Result<Vec<_>, _>>()?;
                let image = [
                    parse_at(&ctx, &c.image[0], &syms, &loc)?,
                    parse_at(&ctx, &c.image[1], &syms, &loc)?,
                    parse_at(&ctx, &c.image[2], &syms, &loc)?,
                ];
                curves.push(super::SingularCurve { domain, image });
            }
            singular.push((s.which, s.branch.clone(), curves, s.citation.clone()));
        }
        Ok(Instantiated {
            unfolding,
            g,
            h1,
            h2,
            branches,
            citations,
            singular,
        })
    }
}
