//! JSON input formats and their conversion into library types.

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use nexus_core::constraints::{ComponentData, IntMatrix, SingularSetup};
use nexus_core::cyclotomic::CycloProduct;
use nexus_core::{BigInt, BigRational};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// An exact rational: a JSON integer, or a string such as `"-3/4"` or a
/// big integer that does not fit in 64 bits.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rational {
    Int(i64),
    Text(String),
}

impl Rational {
    pub fn to_big(&self) -> Result<BigRational> {
        match self {
            Rational::Int(v) => Ok(BigRational::from_integer((*v).into())),
            Rational::Text(s) => parse_rational(s),
        }
    }

    pub fn from_big(q: &BigRational) -> Self {
        if q.is_integer() {
            if let Some(v) = q.to_integer().to_i64() {
                return Rational::Int(v);
            }
        }
        Rational::Text(q.to_string())
    }

    pub fn from_int(v: &BigInt) -> Self {
        Self::from_big(&BigRational::from_integer(v.clone()))
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|e| anyhow!("bad rational '{}': {}", s, e))?;
    let den = BigInt::from_str(den).map_err(|e| anyhow!("bad rational '{}': {}", s, e))?;
    if den.is_zero() {
        bail!("zero denominator in '{}'", s);
    }
    Ok(BigRational::new(num, den))
}

/// A characteristic polynomial: `"Phi_1^2 * Phi_3"` or `{"1": 2, "3": 1}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CycloJson {
    Text(String),
    Exponents(BTreeMap<String, u64>),
}

impl CycloJson {
    pub fn to_product(&self) -> Result<CycloProduct> {
        match self {
            CycloJson::Text(s) => Ok(CycloProduct::from_str(s)?),
            CycloJson::Exponents(map) => {
                let mut factors = Vec::with_capacity(map.len());
                for (k, c) in map {
                    let k: u64 = k
                        .trim()
                        .parse()
                        .with_context(|| format!("bad cyclotomic index '{}'", k))?;
                    factors.push((k, *c));
                }
                Ok(CycloProduct::from_factors(factors)?)
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ComponentJson {
    pub k: u64,
    pub mu: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char_h: Option<CycloJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_rank: Option<u64>,
}

impl ComponentJson {
    pub fn to_component(&self, index: usize) -> Result<ComponentData> {
        let tau = match &self.tau {
            Some(rows) => {
                let rows: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                    .collect();
                Some(
                    IntMatrix::from_rows(&rows)
                        .with_context(|| format!("components[{}].tau", index))?,
                )
            }
            None => None,
        };
        let char_h = match &self.char_h {
            Some(c) => Some(
                c.to_product()
                    .with_context(|| format!("components[{}].charH", index))?,
            ),
            None => None,
        };
        Ok(ComponentData {
            k: self.k,
            mu: self.mu,
            d: self.d,
            char_h,
            tau,
            fixed_rank: self.fixed_rank,
        })
    }
}

/// Input of the `constraints` command.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SetupJson {
    pub n: u32,
    pub mu0: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d0: Option<u64>,
    #[serde(default, rename = "charH0", skip_serializing_if = "Option::is_none")]
    pub char_h0: Option<CycloJson>,
    #[serde(default)]
    pub components: Vec<ComponentJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda0: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<u64>,
}

impl SetupJson {
    pub fn to_setup(&self) -> Result<SingularSetup> {
        let char_h0 = match &self.char_h0 {
            Some(c) => Some(c.to_product().context("charH0")?),
            None => None,
        };
        Ok(SingularSetup {
            n: self.n,
            mu0: self.mu0,
            char_h0,
            d0: self.d0,
            components: self
                .components
                .iter()
                .enumerate()
                .map(|(i, c)| c.to_component(i))
                .collect::<Result<_>>()?,
            lambda0: self.lambda0,
            omega: self.omega,
        })
    }
}

/// `z₀` as a variable name or as coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SliceJson {
    Variable(String),
    Coefficients(Vec<Rational>),
}

impl SliceJson {
    pub fn coefficients(&self, vars: &[String]) -> Result<Vec<BigRational>> {
        match self {
            SliceJson::Variable(name) => {
                let index = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| anyhow!("z0 names unknown variable '{}'", name))?;
                Ok((0..vars.len())
                    .map(|i| BigRational::from_integer(BigInt::from(u8::from(i == index))))
                    .collect())
            }
            SliceJson::Coefficients(c) => {
                if c.len() != vars.len() {
                    bail!(
                        "z0 has {} coefficients for {} variables",
                        c.len(),
                        vars.len()
                    );
                }
                c.iter().map(Rational::to_big).collect()
            }
        }
    }
}

/// Input of the `analyze` command.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct AnalyzeJson {
    pub poly: String,
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z0: Option<SliceJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d0: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentJson>>,
}

/// Input of the `arrangement` command.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ArrangementJson {
    pub normals: Vec<[Rational; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z0: Option<[Rational; 3]>,
}

pub fn triple(v: &[Rational; 3]) -> Result<[BigRational; 3]> {
    Ok([v[0].to_big()?, v[1].to_big()?, v[2].to_big()?])
}
