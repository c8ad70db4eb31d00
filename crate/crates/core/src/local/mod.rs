//! Ideals in the local ring of polynomial functions at the origin.
//!
//! Standard bases use Mora's tangent-cone normal form under an anti-graded
//! order, so units at the origin are absorbed: `(x + x², y)` has colength 1.
//! Ideal quotients are computed globally by elimination and then read locally;
//! localization at the origin commutes with quotients, so the local ideal is
//! the same.

mod groebner;
mod intpoly;
mod mora;
mod order;

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use intpoly::IntPoly;
pub use order::LocalOrder;
use order::TermOrder;

/// Work caps for basis computations. Exceeding a cap is an error, never a
/// silently truncated answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Budget {
    /// S-pairs processed per basis computation and reduction steps per
    /// normal form.
    pub max_pairs: usize,
    /// Terms in any intermediate polynomial, stored basis terms, and
    /// monomials enumerated when counting a staircase.
    pub max_monomials: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_pairs: 100_000,
            max_monomials: 1_000_000,
        }
    }
}

/// Length of a local quotient ring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Colength::Finite(_))
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{}", n),
            Colength::Infinite => f.write_str("infinite"),
        }
    }
}

/// A finite generating set of an ideal. Zero generators are dropped, so the
/// zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<MultiPoly>,
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<MultiPoly>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidArgument(
                "ideal needs at least one variable".to_string(),
            ));
        }
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::VariableCount {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
        }
        Ok(Self {
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    /// The whole ring.
    pub fn unit(nvars: usize) -> Self {
        Self {
            nvars,
            gens: alloc::vec![MultiPoly::one(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[MultiPoly] {
        &self.gens
    }

    /// `I + J`
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCount {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.nvars, gens)
    }

    /// `I + (g)`
    pub fn with(&self, g: &MultiPoly) -> Result<Ideal> {
        self.sum(&Ideal::new(self.nvars, alloc::vec![g.clone()])?)
    }

    fn has_unit_generator(&self) -> bool {
        self.gens.iter().any(|g| !g.constant_term().is_zero())
    }
}

/// A local standard basis together with its staircase (the minimal
/// generators of the leading ideal).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardBasis {
    nvars: usize,
    basis: Vec<IntPoly>,
    staircase: Vec<Monomial>,
    /// Every monomial above this degree lies in the ideal.
    noether: Option<u64>,
}

impl StandardBasis {
    pub fn basis(&self) -> Vec<MultiPoly> {
        self.basis.iter().map(IntPoly::to_multi).collect()
    }

    pub fn order(&self) -> LocalOrder {
        LocalOrder
    }

    /// Minimal leading monomials, in graded-lex order.
    pub fn staircase(&self) -> &[Monomial] {
        &self.staircase
    }

    /// The ideal is the whole local ring.
    pub fn is_unit(&self) -> bool {
        self.staircase.iter().any(Monomial::is_one)
    }

    /// Local membership test.
    pub fn contains(&self, f: &MultiPoly, budget: &Budget) -> Result<bool> {
        if f.nvars() != self.nvars {
            return Err(Error::VariableCount {
                expected: self.nvars,
                found: f.nvars(),
            });
        }
        let h = IntPoly::from_multi(f, TermOrder::LocalDegLex);
        Ok(mora::mora_nf(h, &self.basis, self.noether, budget)?.is_zero())
    }

    /// Number of monomials outside the leading ideal.
    pub fn colength(&self, budget: &Budget) -> Result<Colength> {
        staircase_colength(&self.staircase, self.nvars, budget)
    }
}

/// Counts the standard monomials below a monomial staircase in `nvars`
/// variables; infinite unless every variable has a pure power in `staircase`.
pub fn staircase_colength(
    staircase: &[Monomial],
    nvars: usize,
    budget: &Budget,
) -> Result<Colength> {
    if staircase.iter().any(Monomial::is_one) {
        return Ok(Colength::Finite(0));
    }
    let mut bounds = Vec::with_capacity(nvars);
    for var in 0..nvars {
        let pure = staircase
            .iter()
            .filter(|m| m.pure_power_var() == Some(var))
            .map(|m| m.exponents()[var])
            .min();
        match pure {
            Some(e) => bounds.push(e),
            None => return Ok(Colength::Infinite),
        }
    }
    let volume = bounds
        .iter()
        .try_fold(1usize, |acc, &b| acc.checked_mul(b as usize));
    match volume {
        Some(v) if v <= budget.max_monomials => {}
        _ => {
            return Err(Error::ResourceLimit(format!(
                "staircase box exceeds {} monomials",
                budget.max_monomials
            )))
        }
    }
    let mut count = 0u64;
    let mut exps = alloc::vec![0u32; nvars];
    loop {
        let m = Monomial::new(exps.clone());
        if !staircase.iter().any(|s| s.divides(&m)) {
            count += 1;
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == nvars {
                return Ok(Colength::Finite(count));
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Mora weak normal form of `f` with respect to `reducers`.
///
/// The remainder is determined up to a nonzero constant and a unit of the
/// local ring; it is zero exactly when `f` lies in the local ideal, provided
/// `reducers` is a standard basis.
pub fn mora_reduce(f: &MultiPoly, reducers: &[MultiPoly], budget: &Budget) -> Result<MultiPoly> {
    let order = TermOrder::LocalDegLex;
    let g: Vec<IntPoly> = reducers
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IntPoly::from_multi(g, order))
        .collect();
    Ok(mora::mora_nf(IntPoly::from_multi(f, order), &g, None, budget)?.to_multi())
}

pub fn standard_basis(ideal: &Ideal, budget: &Budget) -> Result<StandardBasis> {
    let order = TermOrder::LocalDegLex;
    let gens: Vec<IntPoly> = ideal
        .gens
        .iter()
        .map(|g| IntPoly::from_multi(g, order))
        .collect();
    let local = mora::local_standard_basis(gens, ideal.nvars, None, budget)?;
    let staircase = mora::minimal_monomials(local.basis.iter().map(|g| g.lm().clone()).collect());
    Ok(StandardBasis {
        nvars: ideal.nvars,
        basis: local.basis,
        staircase,
        noether: local.noether,
    })
}

/// `dim_ℂ O₀ / I`, where `O₀` is the local ring at the origin.
pub fn colength(ideal: &Ideal, budget: &Budget) -> Result<Colength> {
    if ideal.has_unit_generator() {
        return Ok(Colength::Finite(0));
    }
    for cap in TRUNCATION_CAPS {
        if monomials_up_to(ideal.nvars, cap).is_none_or(|n| n > TRUNCATION_MONOMIALS) {
            break;
        }
        if let Some(c) = truncated_colength(ideal, cap, budget)? {
            return Ok(Colength::Finite(c));
        }
    }
    standard_basis(ideal, budget)?.colength(budget)
}

/// Degrees tried by [`colength`] before the untruncated computation.
const TRUNCATION_CAPS: [u64; 3] = [8, 16, 32];
/// Largest monomial count below a truncation degree that is attempted.
const TRUNCATION_MONOMIALS: usize = 20_000;

/// Number of monomials of degree at most `d` in `nvars` variables.
fn monomials_up_to(nvars: usize, d: u64) -> Option<usize> {
    // binomial(d + nvars, nvars)
    let d = usize::try_from(d).ok()?;
    let mut acc: usize = 1;
    for i in 1..=nvars {
        acc = acc.checked_mul(d + i)? / i;
    }
    Some(acc)
}

/// Colength of `ideal` read off a standard basis of `ideal + m^(cap+1)`.
///
/// Both ideals have the same standard monomials up to degree `cap`. If some
/// degree `e ≤ cap` has none, then `m^e ⊆ ideal + m^(e+1)`, so `m^e ⊆ ideal`
/// by Nakayama and the colength is the number of standard monomials below `e`.
/// Returns `None` when every degree up to `cap` has a standard monomial.
fn truncated_colength(ideal: &Ideal, cap: u64, budget: &Budget) -> Result<Option<u64>> {
    let order = TermOrder::LocalDegLex;
    let gens: Vec<IntPoly> = ideal
        .gens
        .iter()
        .map(|g| IntPoly::from_multi(g, order))
        .collect();
    let local = mora::local_standard_basis(gens, ideal.nvars, Some(cap), budget)?;
    let leads = mora::minimal_monomials(local.basis.iter().map(|g| g.lm().clone()).collect());
    let mut per_degree = alloc::vec![0u64; cap as usize + 1];
    let mut exps = alloc::vec![0u32; ideal.nvars];
    count_standard(&leads, &mut exps, 0, 0, cap, &mut per_degree);
    let mut below = 0u64;
    for count in per_degree {
        if count == 0 {
            return Ok(Some(below));
        }
        below += count;
    }
    Ok(None)
}

/// Adds the standard monomials of degree at most `cap` to `per_degree`,
/// enumerating exponents from variable `var` on.
fn count_standard(
    leads: &[Monomial],
    exps: &mut [u32],
    var: usize,
    degree: u64,
    cap: u64,
    per_degree: &mut [u64],
) {
    if var == exps.len() {
        let m = Monomial::new(exps.to_vec());
        if !leads.iter().any(|l| l.divides(&m)) {
            per_degree[degree as usize] += 1;
        }
        return;
    }
    let mut e = 0u32;
    while degree + u64::from(e) <= cap {
        exps[var] = e;
        count_standard(leads, exps, var + 1, degree + u64::from(e), cap, per_degree);
        e += 1;
    }
    exps[var] = 0;
}

/// `I ⊆ J` in the local ring.
pub fn is_contained(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<bool> {
    let sb = standard_basis(j, budget)?;
    for g in &i.gens {
        if !sb.contains(g, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of local ideals by mutual containment.
pub fn same_local_ideal(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<bool> {
    Ok(is_contained(i, j, budget)? && is_contained(j, i, budget)?)
}

/// `(I : g)` in the local ring at the origin.
///
/// Computed as `(I ∩ (g)) / g`, where the intersection comes from eliminating
/// a tag variable `t` from `t·I + (1 − t)·g` over the polynomial ring.
pub fn ideal_quotient_elem(ideal: &Ideal, g: &MultiPoly, budget: &Budget) -> Result<Ideal> {
    check_divisor(ideal, g)?;
    if !g.constant_term().is_zero() {
        return Ok(ideal.clone());
    }
    if ideal.has_unit_generator() {
        return Ok(Ideal::unit(ideal.nvars));
    }
    if ideal.gens.is_empty() {
        return Ok(ideal.clone());
    }
    let n = ideal.nvars;
    let order = TermOrder::Elimination(1);
    let t = MultiPoly::var(n + 1, 0)?;
    let one_minus_t = &MultiPoly::one(n + 1) - &t;
    let lifted_g = g.shift_vars(1);
    let mut gens: Vec<IntPoly> = ideal
        .gens
        .iter()
        .map(|f| IntPoly::from_multi(&(&t * &f.shift_vars(1)), order))
        .collect();
    gens.push(IntPoly::from_multi(&(&one_minus_t * &lifted_g), order));
    let gb = groebner::groebner(gens, order, budget)?;
    let mut quotients = Vec::new();
    for h in gb.iter().filter(|h| h.free_of_first(1)) {
        let h = h.to_multi().restrict_first_var()?;
        quotients.push(divide_exact(&h, g)?);
    }
    Ideal::new(n, quotients)
}

/// `(I : g^∞)` by iterated quotients, stopping once the local ideal stabilizes.
pub fn saturate_elem(ideal: &Ideal, g: &MultiPoly, budget: &Budget) -> Result<Ideal> {
    check_divisor(ideal, g)?;
    if !g.constant_term().is_zero() {
        return Ok(ideal.clone());
    }
    let mut current = ideal.clone();
    loop {
        let next = ideal_quotient_elem(&current, g, budget)?;
        if is_contained(&next, &current, budget)? {
            return Ok(current);
        }
        current = next;
    }
}

fn check_divisor(ideal: &Ideal, g: &MultiPoly) -> Result<()> {
    if g.nvars() != ideal.nvars {
        return Err(Error::VariableCount {
            expected: ideal.nvars,
            found: g.nvars(),
        });
    }
    if g.is_zero() {
        return Err(Error::InvalidArgument(
            "quotient by the zero polynomial".to_string(),
        ));
    }
    Ok(())
}

/// Exact quotient `h / g` in the polynomial ring (graded-lex division).
pub(crate) fn divide_exact(h: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    let n = h.nvars();
    let (lg_m, lg_c) = g
        .terms()
        .next()
        .map(|(m, c)| (m.clone(), c.clone()))
        .ok_or(Error::InexactDivision)?;
    let mut rem = h.clone();
    let mut quot = MultiPoly::zero(n);
    loop {
        let Some((m, c)) = rem.terms().next().map(|(m, c)| (m.clone(), c.clone())) else {
            break;
        };
        let q_m = lg_m.quotient_of(&m).ok_or(Error::InexactDivision)?;
        let q = MultiPoly::term(q_m, c / lg_c.clone());
        rem = &rem - &(&q * g);
        quot = &quot + &q;
    }
    Ok(quot)
}
