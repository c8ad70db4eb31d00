//! Sorted integer-coefficient polynomials used inside the basis algorithms.
//!
//! Reductions are fraction-free: `h ← lc(g)·h − lc(h)·m·g`, followed by removal
//! of the content, so basis elements stay primitive.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::order::TermOrder;
use crate::poly::{Monomial, MultiPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct IntPoly {
    /// Leading term first.
    terms: Vec<(Monomial, BigInt)>,
    nvars: usize,
}

impl IntPoly {
    /// Clears denominators; the result is primitive with the sign of `p` kept.
    pub(crate) fn from_multi(p: &MultiPoly, order: TermOrder) -> Self {
        let den = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .map(|(m, c)| {
                (
                    m.clone(),
                    (c * BigRational::from_integer(den.clone())).to_integer(),
                )
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out = Self {
            terms,
            nvars: p.nvars(),
        };
        out.remove_content();
        out
    }

    pub(crate) fn to_multi(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()))),
        )
        .expect("consistent variable count")
    }

    #[inline]
    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub(crate) fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub(crate) fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub(crate) fn max_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    /// `deg(h) − deg(LM(h))`
    pub(crate) fn ecart(&self) -> u64 {
        if self.is_zero() {
            return 0;
        }
        self.max_degree() - self.lm().degree()
    }

    /// True if every monomial avoids variables `0..k`.
    pub(crate) fn free_of_first(&self, k: usize) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
    }

    pub(crate) fn remove_content(&mut self) {
        let g = self
            .terms
            .iter()
            .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return;
        }
        for (_, c) in &mut self.terms {
            *c /= &g;
        }
    }

    /// The leading monomial with coefficient one.
    pub(crate) fn leading_monomial(&self) -> IntPoly {
        IntPoly {
            terms: alloc::vec![(self.lm().clone(), BigInt::one())],
            nvars: self.nvars,
        }
    }

    /// Drops every term of degree above `max`; the result is primitive again.
    pub(crate) fn truncate(&mut self, max: u64) {
        let before = self.terms.len();
        self.terms.retain(|(m, _)| m.degree() <= max);
        if self.terms.len() < before {
            self.remove_content();
        }
    }

    pub(crate) fn make_lc_positive(&mut self) {
        if !self.is_zero() && self.lc().is_negative() {
            for (_, c) in &mut self.terms {
                *c = -core::mem::take(c);
            }
        }
    }

    /// `a·self − b·m·g`, merged in `order`.
    pub(crate) fn combine(
        &self,
        a: &BigInt,
        b: &BigInt,
        m: &Monomial,
        g: &IntPoly,
        order: TermOrder,
    ) -> IntPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = g.terms.iter().map(|(gm, gc)| (m.mul(gm), gc)).peekable();
        loop {
            let which = match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((lm, _)), Some((rm, _))) => order.cmp(lm, rm),
            };
            match which {
                Ordering::Greater => {
                    let (lm, lc) = lhs.next().expect("peeked");
                    out.push((lm.clone(), a * lc));
                }
                Ordering::Less => {
                    let (rm, rc) = rhs.next().expect("peeked");
                    out.push((rm, -(b * rc)));
                }
                Ordering::Equal => {
                    let (lm, lc) = lhs.next().expect("peeked");
                    let (_, rc) = rhs.next().expect("peeked");
                    let c = a * lc - b * rc;
                    if !c.is_zero() {
                        out.push((lm.clone(), c));
                    }
                }
            }
        }
        let mut p = IntPoly {
            terms: out,
            nvars: self.nvars,
        };
        p.remove_content();
        p
    }

    /// Cancels the leading term of `self` against `g`, which must satisfy `LM(g) | LM(self)`.
    pub(crate) fn reduce_lead_by(&self, g: &IntPoly, order: TermOrder) -> IntPoly {
        let m = g
            .lm()
            .quotient_of(self.lm())
            .expect("leading monomial divides");
        let (a, b) = cofactors(self.lc(), g.lc());
        self.combine(&a, &b, &m, g, order)
    }

    /// Cancels the term at `index` against the leading term of `g`.
    pub(crate) fn reduce_term_by(&self, index: usize, g: &IntPoly, order: TermOrder) -> IntPoly {
        let (mono, coeff) = &self.terms[index];
        let m = g.lm().quotient_of(mono).expect("leading monomial divides");
        let (a, b) = cofactors(coeff, g.lc());
        self.combine(&a, &b, &m, g, order)
    }

    /// Fraction-free S-polynomial.
    pub(crate) fn spoly(f: &IntPoly, g: &IntPoly, order: TermOrder) -> IntPoly {
        let l = f.lm().lcm(g.lm());
        let mf = f.lm().quotient_of(&l).expect("lcm");
        let mg = g.lm().quotient_of(&l).expect("lcm");
        let (a, b) = cofactors(f.lc(), g.lc());
        // a·mf·f − b·mg·g
        let scaled_f = f.mul_monomial(&mf);
        scaled_f.combine(&a, &b, &mg, g, order)
    }

    pub(crate) fn mul_monomial(&self, m: &Monomial) -> IntPoly {
        IntPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
            nvars: self.nvars,
        }
    }
}

/// `(a, b)` with `a·lc_h = b·lc_g` and `gcd(a, b) = 1`.
fn cofactors(lc_h: &BigInt, lc_g: &BigInt) -> (BigInt, BigInt) {
    let g = lc_h.gcd(lc_g);
    (lc_g / &g, lc_h / &g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;
    use alloc::string::{String, ToString};

    fn vars() -> Vec<String> {
        ["x", "y"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn spoly_cancels_leads() {
        let o = TermOrder::GrevLex;
        let f = IntPoly::from_multi(&parse("2*x^2 + y", &vars()).unwrap(), o);
        let g = IntPoly::from_multi(&parse("3*x*y - 1", &vars()).unwrap(), o);
        let s = IntPoly::spoly(&f, &g, o);
        // 3y·f − 2x·g = 3y^2 + 2x
        assert_eq!(s.to_multi(), parse("3*y^2 + 2*x", &vars()).unwrap());
    }

    #[test]
    fn denominators_cleared() {
        let p = IntPoly::from_multi(&parse("x/2 + y/3", &vars()).unwrap(), TermOrder::GrevLex);
        assert_eq!(p.to_multi(), parse("3*x + 2*y", &vars()).unwrap());
    }
}
