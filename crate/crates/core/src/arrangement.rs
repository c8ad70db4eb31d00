//! Central plane arrangements in `ℂ³`.
//!
//! The critical locus of a reduced arrangement is the union of the lines where
//! at least two planes meet. A generic plane section through the origin is
//! `d₀` concurrent lines, so `μ₀ = (d₀−1)²`; at a line where `m` planes meet the
//! transverse singularity is `m` concurrent lines, homogeneous of degree `m`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::constraints::{full_report, ComponentData, ConstraintReport, SingularSetup};
use crate::cyclotomic::{divisors, homogeneous_exponents};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

pub type Vector3 = [BigInt; 3];

/// A reduced central arrangement given by the normals of its planes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralArrangement3 {
    normals: Vec<[BigRational; 3]>,
    primitive: Vec<Vector3>,
}

/// A line of the critical locus and the number of planes through it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiplePoint {
    /// Primitive integer direction, first nonzero entry positive.
    pub line: Vector3,
    pub multiplicity: u64,
}

impl CentralArrangement3 {
    pub fn new(normals: Vec<[BigRational; 3]>) -> Result<Self> {
        if normals.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "an arrangement needs at least 2 planes, found {}",
                normals.len()
            )));
        }
        let mut primitive = Vec::with_capacity(normals.len());
        for (i, n) in normals.iter().enumerate() {
            if n.iter().all(Zero::is_zero) {
                return Err(Error::InvalidArgument(format!("normal {} is zero", i)));
            }
            primitive.push(primitive_integer(n));
        }
        for j in 0..primitive.len() {
            for i in 0..j {
                if is_zero(&cross(&primitive[i], &primitive[j])) {
                    return Err(Error::InvalidArgument(format!(
                        "normals {} and {} define the same plane",
                        i, j
                    )));
                }
            }
        }
        Ok(Self { normals, primitive })
    }

    pub fn from_integers(normals: &[[i64; 3]]) -> Result<Self> {
        Self::new(
            normals
                .iter()
                .map(|n| n.map(|c| BigRational::from_integer(c.into())))
                .collect(),
        )
    }

    pub fn normals(&self) -> &[[BigRational; 3]] {
        &self.normals
    }

    /// `d₀`
    pub fn degree(&self) -> u64 {
        self.normals.len() as u64
    }

    /// Lines where at least two planes meet, sorted by direction.
    pub fn multiple_points(&self) -> Vec<MultiplePoint> {
        let mut lines: BTreeMap<Vector3, BTreeSet<usize>> = BTreeMap::new();
        for j in 0..self.primitive.len() {
            for i in 0..j {
                let line = normalize(cross(&self.primitive[i], &self.primitive[j]));
                let planes = lines.entry(line).or_default();
                planes.insert(i);
                planes.insert(j);
            }
        }
        lines
            .into_iter()
            .map(|(line, planes)| MultiplePoint {
                line,
                multiplicity: planes.len() as u64,
            })
            .collect()
    }

    /// `∏ (a·x + b·y + c·z)`
    pub fn defining_polynomial(&self) -> MultiPoly {
        self.normals.iter().fold(MultiPoly::one(3), |acc, n| {
            let form = MultiPoly::linear_form(n);
            &acc * &form
        })
    }

    /// True when `z₀` vanishes on no line of the critical locus.
    pub fn is_generic_slice(&self, z0: &[BigRational; 3]) -> bool {
        self.multiple_points().iter().all(|p| {
            let value: BigRational = (0..3)
                .map(|i| &z0[i] * BigRational::from_integer(p.line[i].clone()))
                .sum();
            !value.is_zero()
        })
    }

    /// First form `(1, a, a²)`, `a = 0, 1, 2, …`, vanishing on no critical line.
    pub fn default_slice(&self) -> [BigRational; 3] {
        let mut a = 0i64;
        loop {
            let z0 = [1, a, a * a].map(|c| BigRational::from_integer(c.into()));
            if self.is_generic_slice(&z0) {
                return z0;
            }
            a += 1;
        }
    }

    /// The numerical setup: `n = 2`, `μ₀ = (d₀−1)²`, and one homogeneous
    /// component of degree `m` with `k = 1` per multiple point.
    pub fn to_setup(&self) -> SingularSetup {
        let d0 = self.degree();
        SingularSetup {
            d0: Some(d0),
            components: self
                .multiple_points()
                .iter()
                .map(|p| {
                    let m = p.multiplicity;
                    ComponentData::homogeneous(1, (m - 1) * (m - 1), m)
                })
                .collect(),
            ..SingularSetup::new(2, (d0 - 1) * (d0 - 1))
        }
    }
}

/// Admissible exponent of `Φ_k` in `char m₁` for `k | d₀`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ExponentCeiling {
    pub k: u64,
    /// `a₀` for `k = 1`, `b₀` otherwise.
    pub from_h0: u64,
    /// Exponent of `Φ_k` in `∏_ν char h_ν`.
    pub from_components: u64,
    pub ceiling: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArrangementReport {
    pub degree: u64,
    pub z0: [BigRational; 3],
    pub multiple_points: Vec<MultiplePoint>,
    pub setup: SingularSetup,
    pub ceilings: Vec<ExponentCeiling>,
    pub report: ConstraintReport,
}

/// Full constraint report. `z0` defaults to [`CentralArrangement3::default_slice`];
/// a supplied form vanishing on a critical line is rejected.
pub fn arrangement_report(
    arr: &CentralArrangement3,
    z0: Option<&[BigRational; 3]>,
) -> Result<ArrangementReport> {
    let z0 = match z0 {
        Some(z) if !arr.is_generic_slice(z) => {
            return Err(Error::Genericity(
                "z0 vanishes on a line of the critical locus".to_string(),
            ))
        }
        Some(z) => z.clone(),
        None => arr.default_slice(),
    };
    let setup = arr.to_setup();
    let mut report = full_report(&setup, None)?;
    let d0 = arr.degree();
    let (a0, b0) = homogeneous_exponents(2, d0)?;
    let product = setup
        .components
        .iter()
        .map(|c| c.resolved_char(2))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .fold(crate::cyclotomic::CycloProduct::one(), |acc, h| acc.mul(&h));
    let ceilings: Vec<ExponentCeiling> = divisors(d0)
        .into_iter()
        .map(|k| {
            let from_h0 = if k == 1 { a0 } else { b0 };
            let from_components = product.exponent(k);
            ExponentCeiling {
                k,
                from_h0,
                from_components,
                ceiling: from_h0.min(from_components),
            }
        })
        .collect();
    if let Some(bound) = &report.divisor_bound {
        debug_assert!(ceilings.iter().all(|c| bound.exponent(c.k) == c.ceiling));
    }
    let points = arr.multiple_points();
    if points.len() == 1 {
        report.warnings.push(format!(
            "pencil: all {} planes contain one line, so lambda1 = mu0 and the single-component conclusion is visible directly",
            d0
        ));
    }
    Ok(ArrangementReport {
        degree: d0,
        z0,
        multiple_points: points,
        setup,
        ceilings,
        report,
    })
}

fn cross(a: &Vector3, b: &Vector3) -> Vector3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn is_zero(v: &Vector3) -> bool {
    v.iter().all(Zero::is_zero)
}

fn primitive_integer(v: &[BigRational; 3]) -> Vector3 {
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled = v
        .clone()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer());
    normalize(scaled)
}

/// Divides out the content and makes the first nonzero entry positive.
fn normalize(v: Vector3) -> Vector3 {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v;
    }
    let negative = v
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(Signed::is_negative);
    v.map(|c| {
        let q = c / &g;
        if negative {
            -q
        } else {
            q
        }
    })
}

/// Renders a direction vector as `(a, b, c)`.
pub fn format_vector(v: &Vector3) -> String {
    format!("({}, {}, {})", v[0], v[1], v[2])
}
