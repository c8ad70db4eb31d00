use core::cmp::Ordering;

use crate::poly::Monomial;

/// Term orders used internally. `Greater` means "leads".
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum TermOrder {
    /// Local: lower total degree leads, ties broken lexicographically.
    LocalDegLex,
    /// Global graded reverse lex.
    #[cfg_attr(not(test), allow(dead_code))]
    GrevLex,
    /// Global elimination order for the first `k` variables, then grevlex.
    Elimination(usize),
}

impl TermOrder {
    pub(crate) fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::LocalDegLex => LocalOrder.compare(a, b),
            TermOrder::GrevLex => grevlex(a, b),
            TermOrder::Elimination(k) => {
                let da: u64 = a.exponents()[..k].iter().map(|&e| u64::from(e)).sum();
                let db: u64 = b.exponents()[..k].iter().map(|&e| u64::from(e)).sum();
                da.cmp(&db).then_with(|| grevlex(a, b))
            }
        }
    }

    pub(crate) fn is_local(self) -> bool {
        matches!(self, TermOrder::LocalDegLex)
    }
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Anti-graded local term order: the constant monomial is the largest, a lower
/// total degree always leads, and equal degrees compare lexicographically with
/// variable 0 most significant.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct LocalOrder;

impl LocalOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        b.degree()
            .cmp(&a.degree())
            .then_with(|| a.exponents().cmp(b.exponents()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn local_order_prefers_low_degree() {
        let one = Monomial::one(2);
        let x = Monomial::new(vec![1, 0]);
        let y = Monomial::new(vec![0, 1]);
        let x2 = Monomial::new(vec![2, 0]);
        let o = LocalOrder;
        assert_eq!(o.compare(&one, &x), Ordering::Greater);
        assert_eq!(o.compare(&x, &x2), Ordering::Greater);
        assert_eq!(o.compare(&x, &y), Ordering::Greater);
        // multiplicative: x > y implies x*y > y*y
        assert_eq!(o.compare(&x.mul(&y), &y.mul(&y)), Ordering::Greater);
    }

    #[test]
    fn elimination_order() {
        let t = Monomial::new(vec![1, 0, 0]);
        let big = Monomial::new(vec![0, 5, 5]);
        assert_eq!(TermOrder::Elimination(1).cmp(&t, &big), Ordering::Greater);
        assert_eq!(TermOrder::GrevLex.cmp(&t, &big), Ordering::Less);
    }
}
