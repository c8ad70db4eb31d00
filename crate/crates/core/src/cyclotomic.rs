//! Characteristic polynomials carried as products `∏ Φ_k^{c_k}` of cyclotomic
//! polynomials.
//!
//! Monodromy eigenvalues of isolated hypersurface singularities are roots of
//! unity, so every characteristic polynomial the constraint engine touches is
//! such a product. Keeping it factored turns gcd and divisibility into
//! exponent-wise `min` and `≤`; [`CycloProduct::expand`] produces the integer
//! polynomial only when asked.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::UniPoly;

/// Default size of a [`MobiusTable`].
pub const DEFAULT_MOBIUS_BOUND: u64 = 10_000;

/// Möbius function by trial division.
pub fn mobius(mut k: u64) -> i64 {
    assert!(k >= 1, "mobius is defined for k >= 1");
    let mut sign = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

/// Euler's totient by trial division.
pub fn totient(mut k: u64) -> u64 {
    assert!(k >= 1, "totient is defined for k >= 1");
    let mut out = k;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            while k.is_multiple_of(p) {
                k /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if k > 1 {
        out -= out / k;
    }
    out
}

/// Positive divisors of `d` in increasing order.
pub fn divisors(d: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= d {
        if d.is_multiple_of(i) {
            small.push(i);
            if i != d / i {
                large.push(d / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Precomputed Möbius values up to a bound; larger arguments fall back to
/// trial division.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    values: Vec<i8>,
}

impl MobiusTable {
    pub fn new(bound: u64) -> Self {
        let n = bound as usize;
        let mut values = alloc::vec![1i8; n + 1];
        let mut composite = alloc::vec![false; n + 1];
        if n >= 1 {
            values[0] = 0;
        }
        for p in 2..=n {
            if composite[p] {
                continue;
            }
            for m in (p..=n).step_by(p) {
                if m > p {
                    composite[m] = true;
                }
                values[m] = -values[m];
            }
            if let Some(sq) = p.checked_mul(p) {
                for m in (sq..=n).step_by(sq) {
                    values[m] = 0;
                }
            }
        }
        Self { values }
    }

    pub fn get(&self, k: u64) -> i64 {
        match self.values.get(k as usize) {
            Some(&v) if k >= 1 => i64::from(v),
            _ => mobius(k),
        }
    }
}

impl Default for MobiusTable {
    fn default() -> Self {
        Self::new(DEFAULT_MOBIUS_BOUND)
    }
}

/// The `k`-th cyclotomic polynomial, by exact division of `t^k − 1` by the
/// cyclotomic factors of its proper divisors.
pub fn cyclotomic(k: u64) -> Result<UniPoly> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic index must be >= 1".to_string(),
        ));
    }
    let mut cache = BTreeMap::new();
    Ok(cyclotomic_cached(k, &mut cache))
}

fn cyclotomic_cached(k: u64, cache: &mut BTreeMap<u64, UniPoly>) -> UniPoly {
    if let Some(p) = cache.get(&k) {
        return p.clone();
    }
    let mut acc = UniPoly::unity(k as usize);
    for d in divisors(k) {
        if d == k {
            continue;
        }
        let phi = cyclotomic_cached(d, cache);
        acc = acc
            .div_exact(&phi)
            .expect("cyclotomic factors divide t^k - 1");
    }
    cache.insert(k, acc.clone());
    acc
}

/// Exponents `(a₀, b₀)` of the monodromy characteristic polynomial
/// `(t−1)^{a₀}·((t^d−1)/(t−1))^{b₀}` of a homogeneous isolated singularity of
/// degree `d` in `n` variables, where `b₀ = ((d−1)ⁿ − (−1)ⁿ)/d` and
/// `a₀ = b₀ + (−1)ⁿ`.
pub fn homogeneous_exponents(n: u32, d: u64) -> Result<(u64, u64)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".to_string()));
    }
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "degree must be >= 2, got {}",
            d
        )));
    }
    let overflow = || Error::Overflow(format!("homogeneous exponents for n={}, d={}", n, d));
    let base = i128::from(d) - 1;
    let sign: i128 = if n.is_multiple_of(2) { 1 } else { -1 };
    let power = base.checked_pow(n).ok_or_else(overflow)?;
    let numerator = power - sign;
    let d = i128::from(d);
    assert!(
        numerator % d == 0,
        "b0 must be an integer: ({}^{} - ({})) / {}",
        base,
        n,
        sign,
        d
    );
    let b0 = numerator / d;
    let a0 = b0 + sign;
    assert!(a0 >= 0 && b0 >= 0);
    Ok((
        u64::try_from(a0).map_err(|_| overflow())?,
        u64::try_from(b0).map_err(|_| overflow())?,
    ))
}

/// Product of cyclotomic polynomials `∏ Φ_k^{c_k}`; zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CycloProduct {
    factors: BTreeMap<u64, u64>,
}

impl CycloProduct {
    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn phi(k: u64) -> Result<Self> {
        Self::from_factors([(k, 1)])
    }

    pub fn from_factors<I: IntoIterator<Item = (u64, u64)>>(factors: I) -> Result<Self> {
        let mut out = Self::one();
        for (k, c) in factors {
            if k == 0 {
                return Err(Error::InvalidArgument(
                    "cyclotomic index must be >= 1".to_string(),
                ));
            }
            out.bump(k, c);
        }
        Ok(out)
    }

    fn bump(&mut self, k: u64, c: u64) {
        if c > 0 {
            *self.factors.entry(k).or_insert(0) += c;
        }
    }

    /// `t^d − 1 = ∏_{k | d} Φ_k`.
    pub fn factor_unity(d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("d must be >= 1".to_string()));
        }
        Self::from_factors(divisors(d).into_iter().map(|k| (k, 1)))
    }

    /// Monodromy characteristic polynomial of a homogeneous isolated singularity
    /// of degree `d` in `n` variables: `c₁ = a₀` and `c_k = b₀` for every divisor
    /// `k > 1` of `d`.
    pub fn homogeneous_char(n: u32, d: u64) -> Result<Self> {
        let (a0, b0) = homogeneous_exponents(n, d)?;
        let mut out = Self::one();
        out.bump(1, a0);
        for k in divisors(d).into_iter().filter(|&k| k > 1) {
            out.bump(k, b0);
        }
        Ok(out)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, k: u64) -> u64 {
        self.factors.get(&k).copied().unwrap_or(0)
    }

    /// `(k, c_k)` pairs sorted by `k`.
    pub fn factors(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.factors.iter().map(|(&k, &c)| (k, c))
    }

    /// Degree of the expanded polynomial, `Σ c_k·φ(k)`.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|(&k, &c)| c * totient(k)).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.factors() {
            out.bump(k, c);
        }
        out
    }

    pub fn product<'a, I: IntoIterator<Item = &'a CycloProduct>>(items: I) -> Self {
        items.into_iter().fold(Self::one(), |acc, p| acc.mul(p))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .filter_map(|(&k, &c)| {
                    let m = c.min(other.exponent(k));
                    (m > 0).then_some((k, m))
                })
                .collect(),
        }
    }

    /// `self | other` in `ℤ[t]`.
    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|(&k, &c)| c <= other.exponent(k))
    }

    /// Sum of the roots with multiplicity, `Σ c_k·μ(k)`.
    pub fn trace(&self) -> i64 {
        self.trace_with(&MobiusTable::new(0))
    }

    pub fn trace_with(&self, table: &MobiusTable) -> i64 {
        self.factors
            .iter()
            .map(|(&k, &c)| c as i64 * table.get(k))
            .sum()
    }

    pub fn expand(&self) -> UniPoly {
        let mut cache = BTreeMap::new();
        let mut acc = UniPoly::one();
        for (&k, &c) in &self.factors {
            let phi = cyclotomic_cached(k, &mut cache);
            for _ in 0..c {
                acc = acc.mul(&phi);
            }
        }
        acc
    }
}

impl fmt::Display for CycloProduct {
    /// `Phi_1^2 * Phi_3`, sorted by index; the empty product is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (k, c)) in self.factors().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "Phi_{}", k)?;
            if c > 1 {
                write!(f, "^{}", c)?;
            }
        }
        Ok(())
    }
}

impl FromStr for CycloProduct {
    type Err = Error;

    /// Inverse of the `Display` form; also accepts repeated factors.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed == "1" {
            return Ok(Self::one());
        }
        let bad =
            |piece: &str| Error::InvalidArgument(format!("bad cyclotomic factor '{}'", piece));
        let mut out = Self::one();
        for piece in trimmed.split('*') {
            let piece = piece.trim();
            let rest = piece.strip_prefix("Phi_").ok_or_else(|| bad(piece))?;
            let (k, c) = match rest.split_once('^') {
                Some((k, c)) => (k, c),
                None => (rest, "1"),
            };
            let k: u64 = k.trim().parse().map_err(|_| bad(piece))?;
            let c: u64 = c.trim().parse().map_err(|_| bad(piece))?;
            if k == 0 {
                return Err(bad(piece));
            }
            out.bump(k, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn cp(f: &[(u64, u64)]) -> CycloProduct {
        CycloProduct::from_factors(f.iter().copied()).unwrap()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), UniPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), UniPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), UniPoly::from_i64(&[1, -1, 1]));
        assert_eq!(
            cyclotomic(12).unwrap(),
            UniPoly::from_i64(&[1, 0, -1, 0, 1])
        );
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn unity_factorization() {
        assert_eq!(CycloProduct::factor_unity(1).unwrap(), cp(&[(1, 1)]));
        assert_eq!(
            CycloProduct::factor_unity(4).unwrap(),
            cp(&[(1, 1), (2, 1), (4, 1)])
        );
        assert_eq!(
            CycloProduct::factor_unity(6).unwrap(),
            cp(&[(1, 1), (2, 1), (3, 1), (6, 1)])
        );
        assert_eq!(
            CycloProduct::factor_unity(4).unwrap().expand(),
            UniPoly::unity(4)
        );
    }

    #[test]
    fn homogeneous_formula() {
        assert_eq!(homogeneous_exponents(2, 3).unwrap(), (2, 1));
        assert_eq!(
            CycloProduct::homogeneous_char(2, 3).unwrap(),
            cp(&[(1, 2), (3, 1)])
        );
        assert_eq!(homogeneous_exponents(2, 2).unwrap(), (1, 0));
        assert_eq!(CycloProduct::homogeneous_char(2, 2).unwrap(), cp(&[(1, 1)]));
        assert_eq!(homogeneous_exponents(3, 2).unwrap(), (0, 1));
        assert_eq!(CycloProduct::homogeneous_char(3, 2).unwrap(), cp(&[(2, 1)]));
        assert_eq!(
            CycloProduct::homogeneous_char(2, 4).unwrap(),
            cp(&[(1, 3), (2, 2), (4, 2)])
        );
        assert!(CycloProduct::homogeneous_char(2, 1).is_err());
        assert!(CycloProduct::homogeneous_char(0, 3).is_err());
    }

    #[test]
    fn gcd_product_divides() {
        let x = cp(&[(1, 2), (3, 1)]);
        assert_eq!(x.gcd(&x), x);
        assert_eq!(x.gcd(&cp(&[(1, 3)])), cp(&[(1, 2)]));
        assert_eq!(CycloProduct::product([]), CycloProduct::one());
        assert_eq!(
            CycloProduct::product([&cp(&[(1, 1)]), &cp(&[(1, 2)])]),
            cp(&[(1, 3)])
        );
        let h = CycloProduct::homogeneous_char(2, 2).unwrap();
        assert_eq!(CycloProduct::product([&h, &h, &h]), cp(&[(1, 3)]));
        assert!(CycloProduct::one().divides(&x));
        assert!(cp(&[(1, 2)]).divides(&x));
        assert!(!x.divides(&cp(&[(1, 3)])));
    }

    #[test]
    fn traces() {
        assert_eq!(cp(&[(1, 5)]).trace(), 5);
        assert_eq!(CycloProduct::homogeneous_char(2, 3).unwrap().trace(), 1);
        assert_eq!(cp(&[(2, 1)]).trace(), -1);
        let table = MobiusTable::default();
        for k in 1..200 {
            assert_eq!(table.get(k), mobius(k), "k = {}", k);
        }
    }

    #[test]
    fn expansion() {
        assert_eq!(CycloProduct::one().expand(), UniPoly::one());
        assert_eq!(cp(&[(1, 1), (2, 1)]).expand(), UniPoly::unity(2));
        // (t-1)^2 (t^2+t+1) = (t-1)(t^3-1) = t^4 - t^3 - t + 1
        assert_eq!(
            CycloProduct::homogeneous_char(2, 3).unwrap().expand(),
            UniPoly::from_i64(&[1, -1, 0, -1, 1])
        );
    }

    #[test]
    fn text_form() {
        let x = cp(&[(3, 1), (1, 2)]);
        assert_eq!(x.to_string(), "Phi_1^2 * Phi_3");
        assert_eq!(CycloProduct::one().to_string(), "1");
        assert_eq!("Phi_1^2 * Phi_3".parse::<CycloProduct>().unwrap(), x);
        assert_eq!("1".parse::<CycloProduct>().unwrap(), CycloProduct::one());
        assert!("Phi_0".parse::<CycloProduct>().is_err());
        assert!("t - 1".parse::<CycloProduct>().is_err());
    }
}
