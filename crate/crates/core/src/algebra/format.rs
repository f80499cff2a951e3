use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::mpoly::fmt_coeff_sign;
use super::{MPoly, RationalForm};
use crate::error::{Error, Result};

/// One term of the canonical JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: Vec<u32>,
    pub q: u32,
    pub t: u32,
    /// Decimal coefficient, kept as a string to preserve precision.
    pub c: String,
}

/// Canonical JSON form of an [`MPoly`]; terms in descending graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MPolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub numerator: MPolyJson,
    pub denominator: MPolyJson,
}

impl From<&MPoly> for MPolyJson {
    fn from(p: &MPoly) -> Self {
        let n = p.nvars();
        let terms = p
            .terms()
            .map(|(e, c)| TermJson {
                x: e[..n].to_vec(),
                q: e[n],
                t: e[n + 1],
                c: c.to_string(),
            })
            .collect();
        MPolyJson { nvars: n, terms }
    }
}

impl TryFrom<MPolyJson> for MPoly {
    type Error = Error;

    fn try_from(j: MPolyJson) -> Result<MPoly> {
        let mut p = MPoly::zero(j.nvars);
        let mut seen = std::collections::HashSet::new();
        for term in j.terms {
            if term.x.len() != j.nvars {
                return Err(Error::Parse(format!(
                    "term has {} x-exponents, expected {}",
                    term.x.len(),
                    j.nvars
                )));
            }
            let c =
                BigInt::from_str(&term.c).map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", term.c)))?;
            if c.is_zero() {
                return Err(Error::Parse("zero coefficient".into()));
            }
            let mut e = term.x;
            e.push(term.q);
            e.push(term.t);
            if !seen.insert(e.clone()) {
                return Err(Error::Parse("duplicate exponent vector".into()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MPolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MPolyJson::deserialize(d)?;
        MPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl From<&RationalForm> for RationalJson {
    fn from(r: &RationalForm) -> Self {
        RationalJson {
            numerator: r.numerator().into(),
            denominator: r.denominator().into(),
        }
    }
}

impl Serialize for RationalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RationalJson::deserialize(d)?;
        let num = MPoly::try_from(j.numerator).map_err(serde::de::Error::custom)?;
        let den = MPoly::try_from(j.denominator).map_err(serde::de::Error::custom)?;
        RationalForm::new(num, den).map_err(serde::de::Error::custom)
    }
}

impl MPoly {
    /// Canonical JSON string.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<MPoly> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// LaTeX rendering, e.g. `x_{1}^{2} q - 3 t^{2}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let n = self.nvars();
        let mut out = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            let (sign, abs) = fmt_coeff_sign(c, k == 0);
            out.push_str(&sign);
            let mut factors = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let base = if i < n {
                    format!("x_{{{}}}", i + 1)
                } else if i == n {
                    "q".to_string()
                } else {
                    "t".to_string()
                };
                factors.push(if p == 1 { base } else { format!("{base}^{{{p}}}") });
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push(' ');
                }
                out.push_str(&factors.join(" "));
            }
        }
        out
    }
}

impl RationalForm {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn to_latex(&self) -> String {
        format!(
            "\\frac{{{}}}{{{}}}",
            self.numerator().to_latex(),
            self.denominator().to_latex()
        )
    }
}

impl std::fmt::Display for RationalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", self.numerator(), self.denominator())
    }
}
