//! Monodromy constraints from the numerical data around a one-dimensional
//! critical locus.
//!
//! The input is a [`SingularSetup`]: `n`, `μ₀`, the characteristic polynomial
//! of the monodromy `h₀` of `f₀`, and per component `ν` of `Σf` the data
//! `(k_ν, μ_ν)` with an optional characteristic polynomial of `h_ν` and an
//! optional fractional monodromy `τ_ν`. From it [`full_report`] derives
//!
//! - the divisor bound `gcd(char h₀, ∏_ν char h_ν)` for `char m_{n−1}`,
//! - the rank bound for `H̃^{n−1}(F)`,
//! - the non-splitting verdict when `μ₀ = λ¹`,
//! - the feasible values of `s = Σ_ν k_ν` when the rank equals `λ¹`,
//! - trace checks `trace = (−1)ⁿ` on every characteristic polynomial.

mod snf;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

pub use snf::{cyclic_kernel_rank, IntMatrix};

use crate::cyclotomic::CycloProduct;
use crate::error::{Error, Result};
use crate::le::LeInvariants;

/// Data attached to one component `ν` of the critical locus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentData {
    /// `(ν·V(z₀))₀`, the number of points of `ν ∩ H_t`.
    pub k: u64,
    /// Milnor number of `f_t` at each of those points.
    pub mu: u64,
    /// Degree of the transverse singularity when it is homogeneous.
    pub d: Option<u64>,
    /// Characteristic polynomial of `h_ν`.
    pub char_h: Option<CycloProduct>,
    /// Fractional monodromy `τ_ν`, a `μ × μ` matrix.
    pub tau: Option<IntMatrix>,
    /// `rank ker(id − ι_ν)`.
    pub fixed_rank: Option<u64>,
}

impl ComponentData {
    pub fn new(k: u64, mu: u64) -> Self {
        Self {
            k,
            mu,
            d: None,
            char_h: None,
            tau: None,
            fixed_rank: None,
        }
    }

    /// Homogeneous transverse type of degree `d`; `μ` must be `(d−1)ⁿ`.
    pub fn homogeneous(k: u64, mu: u64, d: u64) -> Self {
        Self {
            d: Some(d),
            ..Self::new(k, mu)
        }
    }

    /// The characteristic polynomial, explicit or derived from `d`.
    pub fn resolved_char(&self, n: u32) -> Result<Option<CycloProduct>> {
        resolve_char(n, self.d, self.char_h.as_ref(), self.mu, "component")
    }

    /// Invariant factors above one of `id − τ^k`, when `τ` is given and
    /// they exist.
    pub fn kernel_torsion(&self) -> Result<Option<Vec<BigInt>>> {
        let Some(tau) = &self.tau else {
            return Ok(None);
        };
        let factors: Vec<BigInt> = tau
            .pow(self.k)?
            .identity_minus()?
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        Ok((!factors.is_empty()).then_some(factors))
    }

    /// `rank ker(id − ι_ν)`, explicit or derived from `τ_ν` by the cyclic
    /// kernel identity.
    pub fn resolved_fixed_rank(&self) -> Result<Option<u64>> {
        let derived = match &self.tau {
            Some(tau) => Some(cyclic_kernel_rank(tau, self.k)? as u64),
            None => None,
        };
        match (self.fixed_rank, derived) {
            (Some(a), Some(b)) if a != b => Err(Error::Inconsistent(format!(
                "fixedRank {} disagrees with rank {} derived from tau",
                a, b
            ))),
            (Some(a), _) => Ok(Some(a)),
            (None, b) => Ok(b),
        }
    }

    fn validate(&self, n: u32, index: usize) -> Result<()> {
        let at = |msg: String| Error::Inconsistent(format!("components[{}]: {}", index, msg));
        let wrap = |e: Error| match e {
            Error::Inconsistent(msg) | Error::InvalidArgument(msg) => at(msg),
            other => at(other.to_string()),
        };
        if self.k == 0 {
            return Err(at("k must be >= 1".to_string()));
        }
        if self.mu == 0 {
            return Err(at("mu must be >= 1".to_string()));
        }
        self.resolved_char(n).map_err(wrap)?;
        if let Some(tau) = &self.tau {
            if !tau.is_square() || tau.rows() as u64 != self.mu {
                return Err(at(format!(
                    "tau must be {0}x{0}, found {1}x{2}",
                    self.mu,
                    tau.rows(),
                    tau.cols()
                )));
            }
        }
        if let Some(r) = self.resolved_fixed_rank().map_err(wrap)? {
            if r > self.mu {
                return Err(at(format!("fixedRank {} exceeds mu {}", r, self.mu)));
            }
        }
        Ok(())
    }
}

fn resolve_char(
    n: u32,
    d: Option<u64>,
    explicit: Option<&CycloProduct>,
    mu: u64,
    what: &str,
) -> Result<Option<CycloProduct>> {
    let derived = match d {
        Some(d) if d < 2 => {
            return Err(Error::Inconsistent(format!(
                "{} degree d must be >= 2, found {}",
                what, d
            )))
        }
        Some(d) => Some(CycloProduct::homogeneous_char(n, d)?),
        None => None,
    };
    let chosen = match (explicit, derived) {
        (Some(e), Some(h)) if *e != h => {
            return Err(Error::Inconsistent(format!(
                "{} charH {} disagrees with homogeneous degree {} ({})",
                what,
                e,
                d.unwrap_or(0),
                h
            )))
        }
        (Some(e), _) => Some(e.clone()),
        (None, h) => h,
    };
    if let Some(c) = &chosen {
        if c.degree() != mu {
            return Err(Error::Inconsistent(format!(
                "{} charH {} has degree {} but the Milnor number is {}",
                what,
                c,
                c.degree(),
                mu
            )));
        }
    }
    Ok(chosen)
}

/// Numerical data around the critical locus of `f` on `ℂ^{n+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularSetup {
    pub n: u32,
    pub mu0: u64,
    pub char_h0: Option<CycloProduct>,
    /// Degree of `f₀` when it is homogeneous.
    pub d0: Option<u64>,
    pub components: Vec<ComponentData>,
    pub lambda0: Option<u64>,
    pub omega: Option<u64>,
}

impl SingularSetup {
    pub fn new(n: u32, mu0: u64) -> Self {
        Self {
            n,
            mu0,
            char_h0: None,
            d0: None,
            components: Vec::new(),
            lambda0: None,
            omega: None,
        }
    }

    pub fn resolved_char_h0(&self) -> Result<Option<CycloProduct>> {
        resolve_char(self.n, self.d0, self.char_h0.as_ref(), self.mu0, "charH0")
    }

    /// Checks every stated invariant; errors name the offending field.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Inconsistent("n must be >= 1".to_string()));
        }
        self.resolved_char_h0()?;
        for (i, c) in self.components.iter().enumerate() {
            c.validate(self.n, i)?;
        }
        if let (Some(l0), Some(w)) = (self.lambda0, self.omega) {
            check_omega(l0, w)?;
        }
        Ok(())
    }
}

fn check_omega(lambda0: u64, omega: u64) -> Result<()> {
    if omega < lambda0 || (omega == lambda0 && omega != 0) {
        return Err(Error::Inconsistent(format!(
            "omega = {} and lambda0 = {}: need omega >= lambda0 with equality only when both are 0",
            omega, lambda0
        )));
    }
    Ok(())
}

/// `Σ_ν k_ν·μ_ν`
pub fn lambda1_from_components(setup: &SingularSetup) -> u64 {
    setup.components.iter().map(|c| c.k * c.mu).sum()
}

/// `gcd(char h₀, ∏_ν char h_ν)` with one factor per component, or `None`
/// when a characteristic polynomial is unavailable.
pub fn divisibility_bound(setup: &SingularSetup) -> Result<Option<CycloProduct>> {
    let Some(h0) = setup.resolved_char_h0()? else {
        return Ok(None);
    };
    let mut product = CycloProduct::one();
    for c in &setup.components {
        match c.resolved_char(setup.n)? {
            Some(h) => product = product.mul(&h),
            None => return Ok(None),
        }
    }
    let bound = h0.gcd(&product);
    debug_assert!(bound.divides(&h0) && bound.divides(&product));
    Ok(Some(bound))
}

/// `min(μ₀, λ¹, Σ μ_ν, Σ rank ker(id − ι_ν))`, the last term only when known
/// for every component.
pub fn rank_bound(setup: &SingularSetup) -> Result<u64> {
    let mut bound = setup
        .mu0
        .min(lambda1_from_components(setup))
        .min(setup.components.iter().map(|c| c.mu).sum());
    let mut fixed = 0u64;
    for c in &setup.components {
        match c.resolved_fixed_rank()? {
            Some(r) => fixed += r,
            None => return Ok(bound),
        }
    }
    if !setup.components.is_empty() {
        bound = bound.min(fixed);
    }
    Ok(bound)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum App1Verdict {
    NonSplitting,
    NotApplicable,
}

impl App1Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            App1Verdict::NonSplitting => "NON_SPLITTING",
            App1Verdict::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

/// The case `μ₀ = λ¹`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Application1 {
    pub verdict: App1Verdict,
    pub conclusions: Vec<String>,
    pub warnings: Vec<String>,
}

pub fn application1(mu0: u64, lambda1: u64) -> Result<Application1> {
    if mu0 < lambda1 {
        return Err(Error::Inconsistent(format!(
            "mu0 = {} < lambda1 = {} is impossible",
            mu0, lambda1
        )));
    }
    if mu0 != lambda1 {
        return Ok(Application1 {
            verdict: App1Verdict::NotApplicable,
            conclusions: Vec::new(),
            warnings: Vec::new(),
        });
    }
    let mut warnings = Vec::new();
    if mu0 == 0 {
        warnings
            .push("mu0 = lambda1 = 0: f0 is smooth at 0, the verdict is degenerate".to_string());
    }
    Ok(Application1 {
        verdict: App1Verdict::NonSplitting,
        conclusions: alloc::vec![
            "s = 1: the critical locus is a single smooth component met transversely by V(z0)"
                .to_string(),
            "omega = lambda0 = 0".to_string(),
            "reduced H^n(F) = 0".to_string(),
            format!("reduced H^(n-1)(F) = Z^{}", mu0),
        ],
        warnings,
    })
}

/// Inclusive range of feasible `s = Σ_ν k_ν`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SRange {
    pub min: u64,
    pub max: u64,
}

impl SRange {
    pub fn contains(&self, s: u64) -> bool {
        self.min <= s && s <= self.max
    }

    pub fn values(&self) -> impl Iterator<Item = u64> {
        self.min..=self.max
    }
}

/// Consequences of `rank H̃^{n−1}(F) = λ¹`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Application2 {
    /// `μ₀ − λ¹`
    pub gap: u64,
    pub s: SRange,
    pub notes: Vec<String>,
}

/// Under `rank H̃^{n−1}(F) = λ¹`: every `k_ν = 1`, and `1 ≤ s ≤ μ₀ − λ¹ + 1`
/// with `s = 1` only when `μ₀ = λ¹`.
pub fn application2(n: u32, mu0: u64, lambda1: u64) -> Result<Application2> {
    if mu0 < lambda1 {
        return Err(Error::Inconsistent(format!(
            "mu0 = {} < lambda1 = {} is impossible",
            mu0, lambda1
        )));
    }
    let gap = mu0 - lambda1;
    let s = if gap == 0 {
        SRange { min: 1, max: 1 }
    } else {
        SRange {
            min: 2,
            max: gap + 1,
        }
    };
    let eigen = if n.is_multiple_of(2) { -1 } else { 1 };
    let mut notes = alloc::vec![
        "if rank H^(n-1)(F) = lambda1 then every k_nu = 1: each component is smooth and met transversely by V(z0)".to_string(),
    ];
    if gap > 0 {
        notes.push(format!(
            "if s = {} then h0 has {} eigenvalues equal to {}",
            gap + 1,
            gap,
            eigen
        ));
    }
    Ok(Application2 { gap, s, notes })
}

/// A characteristic polynomial whose trace is not `(−1)ⁿ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceViolation {
    pub name: String,
    pub trace: i64,
    pub expected: i64,
}

/// Every available characteristic polynomial must have trace `(−1)ⁿ`.
pub fn acampo_validate(setup: &SingularSetup) -> Result<Vec<TraceViolation>> {
    let expected = if setup.n.is_multiple_of(2) { 1 } else { -1 };
    let mut out = Vec::new();
    let mut check = |name: String, c: Option<CycloProduct>| {
        if let Some(c) = c {
            let trace = c.trace();
            if trace != expected {
                out.push(TraceViolation {
                    name,
                    trace,
                    expected,
                });
            }
        }
    };
    check("charH0".to_string(), setup.resolved_char_h0()?);
    for (i, c) in setup.components.iter().enumerate() {
        check(
            format!("components[{}].charH", i),
            c.resolved_char(setup.n)?,
        );
    }
    Ok(out)
}

/// Everything derivable from a setup and optionally computed Lê numbers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstraintReport {
    pub n: u32,
    pub mu0: u64,
    pub lambda1: u64,
    pub lambda0: Option<u64>,
    pub omega: Option<u64>,
    pub char_h0: Option<CycloProduct>,
    /// `None` is UNKNOWN.
    pub divisor_bound: Option<CycloProduct>,
    pub rank_bound: u64,
    pub s_bounds: SRange,
    pub application1: Application1,
    pub application2: Application2,
    pub trace_violations: Vec<TraceViolation>,
    pub findings: Vec<String>,
    pub warnings: Vec<String>,
}

/// Warning issued when a setup has no component data.
pub const NO_COMPONENTS_WARNING: &str = "no components: Σf data missing";

/// Assembles every bound and verdict.
///
/// With `le` present its `μ₀` and `λ¹` must match the setup. When the setup
/// lists no components but `le` has `λ¹ > 0`, the component data is treated
/// as not supplied: the divisor bound is UNKNOWN and only `μ₀, λ¹` enter the
/// rank bound.
pub fn full_report(setup: &SingularSetup, le: Option<&LeInvariants>) -> Result<ConstraintReport> {
    setup.validate()?;
    let mut warnings = Vec::new();
    let mut findings = Vec::new();
    let from_components = lambda1_from_components(setup);
    let mut lambda0 = setup.lambda0;
    let mut omega = setup.omega;
    let mut lambda1 = from_components;
    let mut supplied = true;
    if let Some(le) = le {
        let (m, l0, l1, w) = le.values().ok_or_else(|| {
            Error::Genericity("Lê numbers are not all finite; z0 is not generic".to_string())
        })?;
        if m != setup.mu0 {
            return Err(Error::Inconsistent(format!(
                "setup mu0 = {} but computed mu0 = {}",
                setup.mu0, m
            )));
        }
        if !setup.components.is_empty() && l1 != from_components {
            return Err(Error::Inconsistent(format!(
                "component data gives lambda1 = {} but computed lambda1 = {}",
                from_components, l1
            )));
        }
        for (name, given, computed) in [("lambda0", setup.lambda0, l0), ("omega", setup.omega, w)] {
            if given.is_some_and(|g| g != computed) {
                return Err(Error::Inconsistent(format!(
                    "setup {} = {} but computed {} = {}",
                    name,
                    given.unwrap_or(0),
                    name,
                    computed
                )));
            }
        }
        check_omega(l0, w)?;
        lambda0 = Some(l0);
        omega = Some(w);
        lambda1 = l1;
        warnings.extend(le.warnings.iter().cloned());
        // with lambda1 = 0 an empty component list is complete
        supplied = !setup.components.is_empty() || l1 == 0;
    }
    if setup.components.is_empty() {
        warnings.push(NO_COMPONENTS_WARNING.to_string());
    }

    let app1 = application1(setup.mu0, lambda1)?;
    let app2 = application2(setup.n, setup.mu0, lambda1)?;
    warnings.extend(app1.warnings.iter().cloned());

    let (divisor_bound, rank) = if supplied {
        (divisibility_bound(setup)?, rank_bound(setup)?)
    } else {
        (None, setup.mu0.min(lambda1))
    };
    if supplied && divisor_bound.is_none() {
        warnings.push("divisor bound UNKNOWN: a characteristic polynomial is missing".to_string());
    }

    if app1.verdict == App1Verdict::NonSplitting {
        if let (Some(l0), Some(w)) = (lambda0, omega) {
            if l0 != 0 || w != 0 {
                return Err(Error::Inconsistent(format!(
                    "mu0 = lambda1 forces omega = lambda0 = 0, found omega = {} and lambda0 = {}",
                    w, l0
                )));
            }
        }
        if supplied && setup.mu0 > 0 {
            let s: u64 = setup.components.iter().map(|c| c.k).sum();
            if s != 1 {
                return Err(Error::Inconsistent(format!(
                    "mu0 = lambda1 forces a single transverse component, but the components give s = {}",
                    s
                )));
            }
            findings.push("single-component conclusion agrees with the component data".to_string());
        }
    }

    if supplied && !setup.components.is_empty() {
        let s: u64 = setup.components.iter().map(|c| c.k).sum();
        let steep = setup.components.iter().any(|c| c.k > 1);
        if steep || !app2.s.contains(s) {
            findings.push(format!(
                "rank H^(n-1)(F) < lambda1 = {}: s = {} with max k_nu = {} is not allowed when the rank equals lambda1",
                lambda1,
                s,
                setup.components.iter().map(|c| c.k).max().unwrap_or(0)
            ));
        }
    }
    if rank < lambda1 {
        findings.push(format!(
            "rank H^(n-1)(F) <= {} < lambda1 = {}",
            rank, lambda1
        ));
    }
    for (i, c) in setup.components.iter().enumerate() {
        if let Some(torsion) = c.kernel_torsion()? {
            let shown: Vec<String> = torsion.iter().map(|d| format!("Z/{}", d)).collect();
            warnings.push(format!(
                "components[{}]: coker(id - tau^k) has torsion {}; the rank bound does not use it",
                i,
                shown.join(" + ")
            ));
        }
    }

    let trace_violations = acampo_validate(setup)?;
    Ok(ConstraintReport {
        n: setup.n,
        mu0: setup.mu0,
        lambda1,
        lambda0,
        omega,
        char_h0: setup.resolved_char_h0()?,
        divisor_bound,
        rank_bound: rank,
        s_bounds: app2.s,
        application1: app1,
        application2: app2,
        trace_violations,
        findings,
        warnings,
    })
}

#[cfg(test)]
mod tests;
