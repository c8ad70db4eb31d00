//! Lê numbers of a function with a one-dimensional critical locus.
//!
//! Given `f` on `ℂ^{n+1}` and a linear form `z₀`, coordinates are changed so
//! that `z₀` becomes variable 0. Then
//!
//! - `μ₀` is the Milnor number of `f₀ = f|V(z₀)`,
//! - the relative polar curve is `V(∂f/∂z₁, …, ∂f/∂zₙ)` with the components
//!   inside `V(f)` removed, realized as the saturation of that ideal by `f`,
//! - `λ⁰`, `ω` and `(Γ·V(z₀))₀` are colengths of the polar ideal plus
//!   `∂f/∂z₀`, `f` and `z₀` respectively,
//! - `λ¹` is the colength of `(∂f/∂z₁, …, ∂f/∂zₙ, z₀)` minus `(Γ·V(z₀))₀`.
//!
//! Intersection numbers are computed as lengths, which agree with intersection
//! multiplicities when the curve is Cohen–Macaulay. Reports carry a warning
//! saying so.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::local::{colength, saturate_elem, Budget, Colength, Ideal};
use crate::poly::{MultiPoly, RationalMatrix};

/// Warning attached to every computed set of invariants.
pub const LENGTH_WARNING: &str =
    "intersection numbers computed as colengths (length assumed equal to multiplicity)";

/// Warning explaining the scope of the genericity checks.
pub const GENERICITY_SCOPE_WARNING: &str =
    "only finiteness of mu0, lambda1 and omega is checked; transversality of V(z0) to the critical locus away from 0 is not certified";

/// `f` written in coordinates where the slice form `z₀` is variable 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SliceSetup {
    f: MultiPoly,
    form: Vec<BigRational>,
}

impl SliceSetup {
    /// Uses variable 0 of `f` as `z₀`.
    pub fn new(f: MultiPoly) -> Result<Self> {
        let mut form = alloc::vec![BigRational::zero(); f.nvars()];
        if let Some(first) = form.first_mut() {
            *first = BigRational::one();
        }
        Self::checked(f.clone(), f, form)
    }

    /// Uses `z₀ = Σ form[i]·x_i`. The other coordinates are the original ones
    /// with the first variable of nonzero coefficient dropped.
    pub fn with_linear_form(f: &MultiPoly, form: &[BigRational]) -> Result<Self> {
        let n = f.nvars();
        if form.len() != n {
            return Err(Error::VariableCount {
                expected: n,
                found: form.len(),
            });
        }
        let pivot = form.iter().position(|c| !c.is_zero()).ok_or_else(|| {
            Error::InvalidArgument("z0 must be a nonzero linear form".to_string())
        })?;
        // rows of A give the new coordinates w = A·x
        let mut a = Vec::with_capacity(n * n);
        a.extend(form.iter().cloned());
        for j in (0..n).filter(|&j| j != pivot) {
            a.extend((0..n).map(|i| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
        }
        let inverse = RationalMatrix::new(n, a)?.inverse()?;
        let g = f.linear_change(&inverse)?;
        Self::checked(f.clone(), g, form.to_vec())
    }

    fn checked(original: MultiPoly, f: MultiPoly, form: Vec<BigRational>) -> Result<Self> {
        if original.nvars() < 2 {
            return Err(Error::InvalidArgument(
                "f needs at least two variables".to_string(),
            ));
        }
        if !original.constant_term().is_zero() {
            return Err(Error::InvalidArgument("f(0) must be 0".to_string()));
        }
        if original.order() == Some(1) {
            return Err(Error::InvalidArgument(
                "f must be singular at the origin (nonzero linear part)".to_string(),
            ));
        }
        if original.is_zero() {
            return Err(Error::InvalidArgument("f must be nonzero".to_string()));
        }
        Ok(Self { f, form })
    }

    /// `f` in the adapted coordinates.
    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    /// Coefficients of `z₀` in the original coordinates.
    pub fn form(&self) -> &[BigRational] {
        &self.form
    }

    /// `f` lives on `ℂ^{n+1}`.
    pub fn n(&self) -> usize {
        self.f.nvars() - 1
    }

    fn nvars(&self) -> usize {
        self.f.nvars()
    }

    /// `(∂f/∂z₁, …, ∂f/∂zₙ)`
    pub fn relative_jacobian(&self) -> Result<Ideal> {
        let gens = (1..self.nvars())
            .map(|i| self.f.partial(i))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.nvars(), gens)
    }

    pub fn mu0(&self, budget: &Budget) -> Result<Colength> {
        let f0 = self.f.restrict_first_var()?;
        colength(&Ideal::new(f0.nvars(), f0.gradient())?, budget)
    }

    /// Ideal of the relative polar curve.
    pub fn polar_ideal(&self, budget: &Budget) -> Result<Ideal> {
        saturate_elem(&self.relative_jacobian()?, &self.f, budget)
    }

    pub fn lambda0(&self, polar: &Ideal, budget: &Budget) -> Result<Colength> {
        colength(&polar.with(&self.f.partial(0)?)?, budget)
    }

    pub fn omega(&self, polar: &Ideal, budget: &Budget) -> Result<Colength> {
        colength(&polar.with(&self.f)?, budget)
    }

    /// `(Γ·V(z₀))₀`
    pub fn polar_multiplicity(&self, polar: &Ideal, budget: &Budget) -> Result<Colength> {
        colength(&polar.with(&self.z0()?)?, budget)
    }

    pub fn lambda1(&self, polar: &Ideal, budget: &Budget) -> Result<Colength> {
        let total = colength(&self.relative_jacobian()?.with(&self.z0()?)?, budget)?;
        let polar_part = self.polar_multiplicity(polar, budget)?;
        Ok(difference(total, polar_part))
    }

    fn z0(&self) -> Result<MultiPoly> {
        MultiPoly::var(self.nvars(), 0)
    }

    /// All invariants with the genericity verdict.
    pub fn compute_all(&self, budget: &Budget) -> Result<LeInvariants> {
        let mu0 = self.mu0(budget)?;
        let polar = self.polar_ideal(budget)?;
        let lambda0 = self.lambda0(&polar, budget)?;
        let omega = self.omega(&polar, budget)?;
        let total = colength(&self.relative_jacobian()?.with(&self.z0()?)?, budget)?;
        let polar_multiplicity = self.polar_multiplicity(&polar, budget)?;
        let lambda1 = difference(total, polar_multiplicity);

        let mut warnings = alloc::vec![
            LENGTH_WARNING.to_string(),
            GENERICITY_SCOPE_WARNING.to_string()
        ];
        let mut failures = Vec::new();
        for (name, value) in [
            ("mu0", mu0),
            ("lambda1", lambda1),
            ("omega", omega),
            ("lambda0", lambda0),
        ] {
            if !value.is_finite() {
                failures.push(name);
            }
        }
        if let (Colength::Finite(l0), Colength::Finite(w)) = (lambda0, omega) {
            if w < l0 || (w == l0 && w != 0) {
                return Err(Error::InvariantViolation(format!(
                    "omega = {} and lambda0 = {} violate omega >= lambda0 with equality only at 0",
                    w, l0
                )));
            }
        }
        let balanced = match (mu0, lambda0, lambda1, omega) {
            (
                Colength::Finite(m),
                Colength::Finite(l0),
                Colength::Finite(l1),
                Colength::Finite(w),
            ) => m + l0 == l1 + w,
            _ => false,
        };
        if !failures.is_empty() {
            warnings.push(format!("z0 not generic: infinite {}", failures.join(", ")));
        } else if !balanced {
            warnings.push(
                "rank balance mu0 + lambda0 = lambda1 + omega fails: z0 is likely not generic"
                    .to_string(),
            );
        }
        Ok(LeInvariants {
            mu0,
            lambda0,
            lambda1,
            omega,
            polar_multiplicity,
            genericity_ok: failures.is_empty(),
            balanced,
            warnings,
        })
    }
}

fn difference(total: Colength, part: Colength) -> Colength {
    match (total, part) {
        (Colength::Finite(t), Colength::Finite(p)) => Colength::Finite(t.saturating_sub(p)),
        _ => Colength::Infinite,
    }
}

/// Output of [`SliceSetup::compute_all`]. Values are `Infinite` when the
/// corresponding length is not finite, which means `z₀` is not generic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeInvariants {
    pub mu0: Colength,
    pub lambda0: Colength,
    pub lambda1: Colength,
    pub omega: Colength,
    /// `(Γ·V(z₀))₀`
    pub polar_multiplicity: Colength,
    /// `μ₀`, `λ¹`, `ω` (and `λ⁰`) are finite.
    pub genericity_ok: bool,
    /// `μ₀ + λ⁰ = λ¹ + ω`, the rank count of the two short exact sequences
    /// through the middle term.
    pub balanced: bool,
    pub warnings: Vec<String>,
}

impl LeInvariants {
    /// `(μ₀, λ⁰, λ¹, ω)` when all are finite.
    pub fn values(&self) -> Option<(u64, u64, u64, u64)> {
        Some((
            self.mu0.finite()?,
            self.lambda0.finite()?,
            self.lambda1.finite()?,
            self.omega.finite()?,
        ))
    }
}

/// Candidate slice forms in search order: the coordinate forms, then
/// seeded pseudo-random forms with coefficients in `[-5, 5]`.
pub fn candidate_forms(nvars: usize, seed: u64, random: usize) -> Vec<Vec<BigRational>> {
    let mut out = Vec::with_capacity(nvars + random);
    for i in 0..nvars {
        out.push(
            (0..nvars)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < nvars + random {
        let v: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-5..=5)).collect();
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        out.push(
            v.into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        );
    }
    out
}

/// Number of random forms tried after the coordinate forms.
pub const DEFAULT_RANDOM_TRIES: usize = 16;

/// Tries the candidate forms in order and returns the first one passing the
/// finiteness checks and the rank balance.
pub fn analyze_generic(
    f: &MultiPoly,
    seed: u64,
    random_tries: usize,
    budget: &Budget,
) -> Result<(SliceSetup, LeInvariants)> {
    let mut last_warning = None;
    for form in candidate_forms(f.nvars(), seed, random_tries) {
        let setup = SliceSetup::with_linear_form(f, &form)?;
        let le = setup.compute_all(budget)?;
        if le.genericity_ok && le.balanced {
            return Ok((setup, le));
        }
        last_warning = le.warnings.last().cloned();
    }
    Err(Error::Genericity(format!(
        "no generic z0 among {} candidates{}",
        f.nvars() + random_tries,
        last_warning
            .map(|w| format!(" (last: {})", w))
            .unwrap_or_default()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn f(text: &str, vars: &[&str]) -> MultiPoly {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        parse(text, &names).unwrap()
    }

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect()
    }

    #[test]
    fn cylinder_over_a_node() {
        let s = SliceSetup::new(f("x^2 + y^2", &["z", "x", "y"])).unwrap();
        let le = s.compute_all(&Budget::default()).unwrap();
        assert_eq!(le.values(), Some((1, 0, 1, 0)));
        assert!(le.genericity_ok && le.balanced);
    }

    #[test]
    fn isolated_morse_point() {
        let s = SliceSetup::new(f("z^2 + x^2 + y^2", &["z", "x", "y"])).unwrap();
        let b = Budget::default();
        let le = s.compute_all(&b).unwrap();
        assert_eq!(le.values(), Some((1, 1, 0, 2)));
        let polar = s.polar_ideal(&b).unwrap();
        assert!(crate::local::same_local_ideal(
            &polar,
            &Ideal::new(
                3,
                alloc::vec![f("x", &["z", "x", "y"]), f("y", &["z", "x", "y"]),]
            )
            .unwrap(),
            &b
        )
        .unwrap());
    }

    #[test]
    fn coordinate_axes() {
        let v = ["x", "y", "z"];
        let s = SliceSetup::with_linear_form(&f("x*y*z", &v), &q(&[1, 1, 1])).unwrap();
        let le = s.compute_all(&Budget::default()).unwrap();
        assert_eq!(le.values(), Some((4, 2, 3, 3)));
        assert!(le.balanced);
    }

    #[test]
    fn non_generic_slice() {
        let s = SliceSetup::new(f("x^2", &["z", "x", "y"])).unwrap();
        let le = s.compute_all(&Budget::default()).unwrap();
        assert!(!le.genericity_ok);
        assert_eq!(le.mu0, Colength::Infinite);
    }

    #[test]
    fn slice_form_moves_to_front() {
        let s = SliceSetup::with_linear_form(&f("x^2 + y^2", &["x", "y", "z"]), &q(&[0, 0, 1]))
            .unwrap();
        assert_eq!(s.f(), &f("x^2 + y^2", &["z", "x", "y"]));
    }

    #[test]
    fn rejects_bad_input() {
        let v = ["x", "y"];
        assert!(SliceSetup::new(f("x + y^2", &v)).is_err());
        assert!(SliceSetup::new(f("1 + x^2", &v)).is_err());
        assert!(SliceSetup::new(f("x^2", &["x"])).is_err());
        assert!(SliceSetup::with_linear_form(&f("x^2", &v), &q(&[0, 0])).is_err());
    }

    #[test]
    fn generic_search_is_deterministic() {
        let g = f("x*y*z", &["x", "y", "z"]);
        let b = Budget::default();
        let (s1, le1) = analyze_generic(&g, 7, DEFAULT_RANDOM_TRIES, &b).unwrap();
        let (s2, le2) = analyze_generic(&g, 7, DEFAULT_RANDOM_TRIES, &b).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(le1, le2);
        assert_eq!(le1.values(), Some((4, 2, 3, 3)));
    }
}
