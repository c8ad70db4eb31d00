//! Mora's tangent-cone normal form and local standard bases.

use alloc::format;
use alloc::vec::Vec;

use super::intpoly::IntPoly;
use super::order::TermOrder;
use super::Budget;
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Weak normal form of `f` with respect to `basis` in the local ring.
///
/// Returns `h` with `u·f − h ∈ ⟨basis⟩` for a unit `u`, and `h = 0` or
/// `LM(h)` not divisible by any leading monomial of `basis`. Termination
/// comes from the écart rule: reducers are chosen with minimal écart and `h`
/// itself joins the reducer set whenever the chosen reducer has larger écart.
///
/// With `noether = Some(d)` the ideal is known to contain every monomial of
/// degree `d + 1`, and terms above degree `d` are discarded as they appear.
pub(crate) fn mora_nf(
    f: IntPoly,
    basis: &[IntPoly],
    noether: Option<u64>,
    budget: &Budget,
) -> Result<IntPoly> {
    let order = TermOrder::LocalDegLex;
    let mut h = f;
    let mut extra: Vec<IntPoly> = Vec::new();
    let mut steps = 0usize;
    loop {
        if let Some(d) = noether {
            h.truncate(d);
        }
        if h.is_zero() {
            return Ok(h);
        }
        let lm = h.lm();
        let reducer = basis
            .iter()
            .chain(extra.iter())
            .filter(|g| g.lm().divides(lm))
            .min_by_key(|g| g.ecart());
        let Some(g) = reducer else {
            return Ok(h);
        };
        let next = h.reduce_lead_by(g, order);
        if g.ecart() > h.ecart() {
            extra.push(h);
        }
        h = next;
        steps += 1;
        if steps > budget.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "normal form exceeded {} reduction steps",
                budget.max_pairs
            )));
        }
        if h.len() > budget.max_monomials || extra.len() > budget.max_monomials {
            return Err(Error::ResourceLimit(format!(
                "normal form exceeded {} monomials",
                budget.max_monomials
            )));
        }
    }
}

/// `Σ (eᵥ − 1)` over the smallest pure powers `xᵥ^eᵥ` among `leads`, when every
/// variable has one: no monomial above this degree lies outside the leading ideal.
pub(crate) fn noether_bound<'a, I>(leads: I, nvars: usize) -> Option<u64>
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let mut pure: Vec<Option<u32>> = alloc::vec![None; nvars];
    for m in leads {
        if m.is_one() {
            return Some(0);
        }
        if let Some(v) = m.pure_power_var() {
            let e = m.exponents()[v];
            pure[v] = Some(pure[v].map_or(e, |p| p.min(e)));
        }
    }
    pure.into_iter()
        .try_fold(0u64, |acc, e| e.map(|e| acc + u64::from(e) - 1))
}

/// A local standard basis and, when the leading ideal has finite colength,
/// its degree bound from [`noether_bound`].
pub(crate) struct LocalBasis {
    pub(crate) basis: Vec<IntPoly>,
    pub(crate) noether: Option<u64>,
}

/// Completes `gens` to a local standard basis. Pairs are processed by
/// increasing lcm degree, then by index.
///
/// With `cap = Some(c)` the result is a standard basis of `⟨gens⟩ + m^(c+1)`,
/// where `m` is the maximal ideal; nothing above degree `c` is kept.
pub(crate) fn local_standard_basis(
    gens: Vec<IntPoly>,
    nvars: usize,
    cap: Option<u64>,
    budget: &Budget,
) -> Result<LocalBasis> {
    let order = TermOrder::LocalDegLex;
    let unit = |g: IntPoly| LocalBasis {
        basis: alloc::vec![g],
        noether: Some(0),
    };
    let mut basis: Vec<IntPoly> = Vec::new();
    for mut g in gens {
        if let Some(c) = cap {
            g.truncate(c);
        }
        if g.is_zero() {
            continue;
        }
        g.make_lc_positive();
        if g.lm().is_one() {
            return Ok(unit(g));
        }
        basis.push(g);
    }
    let mut noether = cap;
    let mut pairs: Vec<(u64, usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((basis[i].lm().lcm(basis[j].lm()).degree(), i, j));
        }
    }
    tighten(&mut basis, &mut noether, nvars);
    let mut processed = 0usize;
    let mut stored: usize = basis.iter().map(IntPoly::len).sum();
    while !pairs.is_empty() {
        let pick = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| **p)
            .map(|(idx, _)| idx)
            .expect("nonempty");
        let (lcm_degree, i, j) = pairs.swap_remove(pick);
        if noether.is_some_and(|d| lcm_degree > d) {
            continue;
        }
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "standard basis exceeded {} pairs",
                budget.max_pairs
            )));
        }
        let s = IntPoly::spoly(&basis[i], &basis[j], order);
        let mut h = mora_nf(s, &basis, noether, budget)?;
        if h.is_zero() {
            continue;
        }
        h.make_lc_positive();
        if h.lm().is_one() {
            return Ok(unit(h));
        }
        stored += h.len();
        if stored > budget.max_monomials {
            return Err(Error::ResourceLimit(format!(
                "standard basis exceeded {} stored monomials",
                budget.max_monomials
            )));
        }
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pairs.push((g.lm().lcm(h.lm()).degree(), i, k));
        }
        basis.push(h);
        tighten(&mut basis, &mut noether, nvars);
    }
    Ok(LocalBasis { basis, noether })
}

/// Recomputes the noether bound and, when it improves, truncates the basis.
/// Elements already above the bound lie in the ideal and shrink to their
/// leading monomial.
fn tighten(basis: &mut [IntPoly], noether: &mut Option<u64>, nvars: usize) {
    let Some(d) = noether_bound(basis.iter().map(IntPoly::lm), nvars) else {
        return;
    };
    if noether.is_some_and(|old| old <= d) {
        return;
    }
    *noether = Some(d);
    for g in basis.iter_mut() {
        if g.lm().degree() > d {
            *g = g.leading_monomial();
        } else {
            g.truncate(d);
        }
    }
}

/// Minimal generators of the monomial ideal spanned by `monos`, sorted.
pub(crate) fn minimal_monomials(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort();
    monos.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in monos {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}
