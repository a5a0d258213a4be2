use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Mono, Poly, VarContext};
use crate::scalar::{format_rational, parse_rational};
use crate::Rational;

/// Wire form of a rational polynomial:
/// `{"vars": [...], "terms": [{"exp": [..], "coef": "p/q"}, ...]}`
/// with terms in ascending graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl From<&Poly<Rational>> for PolyJson {
    fn from(p: &Poly<Rational>) -> Self {
        PolyJson {
            vars: p.context().names().to_vec(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.exps().to_vec(),
                    coef: format_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for Poly<Rational> {
    type Error = String;

    fn try_from(j: PolyJson) -> Result<Self, String> {
        let ctx = VarContext::new(j.vars).map_err(|e| e.to_string())?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            if t.exp.len() != ctx.arity() {
                return Err(format!(
                    "term has {} exponents, context has {} variables",
                    t.exp.len(),
                    ctx.arity()
                ));
            }
            let c = parse_rational(&t.coef).ok_or_else(|| format!("malformed coefficient `{}`", t.coef))?;
            terms.push((Mono::new(t.exp), c));
        }
        Ok(Poly::from_terms(&ctx, terms))
    }
}

impl Serialize for Poly<Rational> {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Poly::try_from(j).map_err(serde::de::Error::custom)
    }
}
