//! Buchberger's algorithm for global term orders, used for elimination.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::intpoly::IntPoly;
use super::order::TermOrder;
use super::Budget;
use crate::error::{Error, Result};

/// Full reduction of `f` modulo `basis` for a global order.
///
/// Walks the terms from the top with a cursor; terms above the cursor are
/// irreducible and, the order being global, are never touched again except by
/// the common scaling of a fraction-free step.
pub(crate) fn reduce_full(
    f: IntPoly,
    basis: &[IntPoly],
    order: TermOrder,
    budget: &Budget,
) -> Result<IntPoly> {
    debug_assert!(!order.is_local());
    let mut p = f;
    let mut cursor = 0;
    while cursor < p.len() {
        let mono = &p.terms()[cursor].0;
        let Some(g) = basis.iter().find(|g| g.lm().divides(mono)) else {
            cursor += 1;
            continue;
        };
        p = p.reduce_term_by(cursor, g, order);
        if p.len() > budget.max_monomials {
            return Err(Error::ResourceLimit(format!(
                "reduction exceeded {} monomials",
                budget.max_monomials
            )));
        }
    }
    Ok(p)
}

/// Reduced Gröbner basis of `gens` for a global `order`, with the product and
/// chain criteria.
pub(crate) fn groebner(
    gens: Vec<IntPoly>,
    order: TermOrder,
    budget: &Budget,
) -> Result<Vec<IntPoly>> {
    debug_assert!(!order.is_local());
    let mut basis: Vec<IntPoly> = Vec::new();
    for g in gens {
        let mut r = reduce_full(g, &basis, order, budget)?;
        if !r.is_zero() {
            r.make_lc_positive();
            basis.push(r);
        }
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        let &(i, j) = pairs
            .iter()
            .min_by_key(|&&(i, j)| (basis[i].lm().lcm(basis[j].lm()).degree(), i, j))
            .expect("nonempty");
        pairs.remove(&(i, j));
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "Groebner basis exceeded {} pairs",
                budget.max_pairs
            )));
        }
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = IntPoly::spoly(&basis[i], &basis[j], order);
        let mut r = reduce_full(s, &basis, order, budget)?;
        if r.is_zero() {
            continue;
        }
        r.make_lc_positive();
        let k = basis.len();
        for idx in 0..k {
            pairs.insert((idx, k));
        }
        basis.push(r);
    }
    interreduce(basis, order, budget)
}

fn interreduce(basis: Vec<IntPoly>, order: TermOrder, budget: &Budget) -> Result<Vec<IntPoly>> {
    let mut minimal: Vec<IntPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(other, h)| {
            other != idx && h.lm().divides(g.lm()) && (h.lm() != g.lm() || other < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<IntPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = reduce_full(minimal[idx].clone(), &others, order, budget)?;
        r.make_lc_positive();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;
    use alloc::string::{String, ToString};

    fn ip(text: &str, vars: &[&str], order: TermOrder) -> IntPoly {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        IntPoly::from_multi(&parse(text, &names).unwrap(), order)
    }

    #[test]
    fn twisted_cubic_basis_size() {
        // (y - x^2, z - x^3) under grevlex has the reduced basis
        // {y^2 - xz, xy - z, x^2 - y}.
        let o = TermOrder::GrevLex;
        let v = ["x", "y", "z"];
        let gb = groebner(
            alloc::vec![ip("y - x^2", &v, o), ip("z - x^3", &v, o)],
            o,
            &Budget::default(),
        )
        .unwrap();
        let got: Vec<_> = gb.iter().map(|g| g.to_multi()).collect();
        let want = [
            ip("x^2 - y", &v, o).to_multi(),
            ip("x*y - z", &v, o).to_multi(),
            ip("y^2 - x*z", &v, o).to_multi(),
        ];
        assert_eq!(got.len(), 3);
        for w in &want {
            assert!(got.contains(w), "missing {}", w);
        }
    }

    #[test]
    fn elimination_projects() {
        // eliminate t from (x - t^2, y - t^3): y^2 - x^3
        let o = TermOrder::Elimination(1);
        let v = ["t", "x", "y"];
        let gb = groebner(
            alloc::vec![ip("x - t^2", &v, o), ip("y - t^3", &v, o)],
            o,
            &Budget::default(),
        )
        .unwrap();
        let free: Vec<_> = gb.iter().filter(|g| g.free_of_first(1)).collect();
        assert_eq!(free.len(), 1);
        let want = ip("y^2 - x^3", &v, o).to_multi();
        let got = free[0].to_multi();
        assert!(got == want || got == -&want);
    }
}
