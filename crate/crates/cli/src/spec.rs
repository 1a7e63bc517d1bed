use std::fmt;

use serde::{Deserialize, Serialize};
use terwilliger::group::{make_family, D2Group, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    General,
    Dihedral,
    Dicyclic,
    G2,
}

/// `s` is a vector for general groups and a single integer for `g2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SValue {
    Scalar(u64),
    Vector(Vec<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<(u64, u32)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<SValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError(pub String);

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<terwilliger::Error> for SpecError {
    fn from(e: terwilliger::Error) -> Self {
        SpecError(e.to_string())
    }
}

fn missing(kind: Kind, field: &str) -> SpecError {
    SpecError(format!("{} spec needs `{field}`", kind_name(kind)))
}

pub fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::General => "general",
        Kind::Dihedral => "dihedral",
        Kind::Dicyclic => "dicyclic",
        Kind::G2 => "g2",
    }
}

impl GroupSpec {
    pub fn dihedral(factors: Vec<(u64, u32)>) -> Self {
        GroupSpec {
            kind: Kind::Dihedral,
            factors: Some(factors),
            s: None,
            y: None,
            n: None,
            t: None,
        }
    }

    pub fn build(&self) -> Result<D2Group, SpecError> {
        let factors = || {
            self.factors
                .clone()
                .ok_or_else(|| missing(self.kind, "factors"))
        };
        let group = match self.kind {
            Kind::Dihedral => make_family(&FamilySpec::Dihedral {
                factors: factors()?,
            })?,
            Kind::Dicyclic => make_family(&FamilySpec::Dicyclic {
                factors: factors()?,
                y: self.y.clone().ok_or_else(|| missing(self.kind, "y"))?,
            })?,
            Kind::G2 => {
                let s = match &self.s {
                    Some(SValue::Scalar(s)) => *s,
                    Some(SValue::Vector(v)) if v.len() == 1 => v[0],
                    Some(SValue::Vector(_)) => {
                        return Err(SpecError("g2 spec needs a single integer `s`".into()))
                    }
                    None => return Err(missing(self.kind, "s")),
                };
                make_family(&FamilySpec::G2 {
                    n: self.n.ok_or_else(|| missing(self.kind, "n"))?,
                    s,
                    t: self.t.unwrap_or(0),
                })?
            }
            Kind::General => {
                let factors = factors()?;
                let s = match &self.s {
                    Some(SValue::Vector(v)) => v.clone(),
                    Some(SValue::Scalar(s)) => vec![*s],
                    None => return Err(missing(self.kind, "s")),
                };
                let y = self.y.clone().unwrap_or_else(|| vec![0; factors.len()]);
                D2Group::from_parts(&factors, &s, &y)?
            }
        };
        Ok(group)
    }

    /// Compact comma-free name, used as the first CSV column of a sweep.
    pub fn label(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(".");
        let factors = self
            .factors
            .as_deref()
            .unwrap_or_default()
            .iter()
            .map(|(p, e)| format!("{p}^{e}"))
            .collect::<Vec<_>>()
            .join(".");
        match self.kind {
            Kind::Dihedral => format!("dihedral[{factors}]"),
            Kind::Dicyclic => format!(
                "dicyclic[{factors};y={}]",
                join(self.y.as_deref().unwrap_or_default())
            ),
            Kind::G2 => {
                let s = match &self.s {
                    Some(SValue::Scalar(s)) => s.to_string(),
                    Some(SValue::Vector(v)) => join(v),
                    None => String::new(),
                };
                format!("g2[{};{s};{}]", self.n.unwrap_or(0), self.t.unwrap_or(0))
            }
            Kind::General => {
                let s = match &self.s {
                    Some(SValue::Vector(v)) => join(v),
                    Some(SValue::Scalar(s)) => s.to_string(),
                    None => String::new(),
                };
                format!(
                    "general[{factors};s={s};y={}]",
                    join(self.y.as_deref().unwrap_or_default())
                )
            }
        }
    }
}

/// `2^2,3` or `2^2,3^1` into `[(2,2),(3,1)]`.
pub fn parse_factors(text: &str) -> Result<Vec<(u64, u32)>, SpecError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (p, e) = t.split_once('^').unwrap_or((t, "1"));
            let p = p
                .trim()
                .parse()
                .map_err(|_| SpecError(format!("bad prime in factor `{t}`")))?;
            let e = e
                .trim()
                .parse()
                .map_err(|_| SpecError(format!("bad exponent in factor `{t}`")))?;
            Ok((p, e))
        })
        .collect()
}

pub fn parse_list(text: &str) -> Result<Vec<u64>, SpecError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| SpecError(format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}
