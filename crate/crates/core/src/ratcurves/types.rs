//! Splitting types allowed for normal bundles of immersed rational curves.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::p1bundles::SplittingType;

/// Normal bundle type of a generic rational curve of degree `d` in `P^n`:
/// with `2d - n - 1 = q(n-1) + r`, `0 <= r < n-1`, it is
/// `O(d+q+1)^(n-r-1) ⊕ O(d+q+2)^r`.
pub fn generic_splitting(d: usize, n: usize) -> Result<SplittingType> {
    if n < 3 {
        return Err(Error::Input(format!(
            "generic splitting needs n >= 3, got {n}"
        )));
    }
    if d < n {
        return Err(Error::Input(format!(
            "a nondegenerate curve in P^{n} has degree >= {n}, got {d}"
        )));
    }
    let (d, n) = (d as i64, n as i64);
    let m = 2 * d - n - 1;
    let (q, r) = (m / (n - 1), m % (n - 1));
    let mut degrees = vec![d + q + 1; (n - r - 1) as usize];
    degrees.extend(std::iter::repeat_n(d + q + 2, r as usize));
    Ok(SplittingType::new(degrees))
}

/// All `{d + b_i}` with `n - 1` parts `b_i >= 2` summing to `2d - 2`.
pub fn admissible_types(d: usize, n: usize) -> BTreeSet<SplittingType> {
    let mut out = BTreeSet::new();
    if n == 0 {
        return out;
    }
    let parts = n - 1;
    let total = 2 * d as i64 - 2;
    let mut current = Vec::with_capacity(parts);
    partitions(total, parts, total, &mut current, &mut |p| {
        out.insert(SplittingType::new(p.iter().map(|b| d as i64 + b).collect()));
    });
    out
}

/// Nonincreasing sequences of `parts` integers `>= 2`, each at most `max`,
/// summing to `remaining`.
fn partitions(
    remaining: i64,
    parts: usize,
    max: i64,
    current: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    if parts == 0 {
        if remaining == 0 {
            emit(current);
        }
        return;
    }
    let lo = 2;
    let hi = max.min(remaining - 2 * (parts as i64 - 1));
    for b in (lo..=hi).rev() {
        current.push(b);
        partitions(remaining - b, parts - 1, b, current, emit);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[i64]) -> SplittingType {
        SplittingType::new(v.to_vec())
    }

    #[test]
    fn generic_examples() {
        assert_eq!(generic_splitting(6, 5).unwrap(), t(&[9, 9, 8, 8]));
        for n in 3..=8 {
            assert_eq!(
                generic_splitting(n, n).unwrap(),
                SplittingType::balanced(n as i64 + 2, n - 1)
            );
        }
        let g = generic_splitting(7, 3).unwrap();
        assert_eq!(g, t(&[13, 13]));
        assert_eq!(g.c1(), 4 * 7 - 2);
        assert!(generic_splitting(2, 3).is_err());
    }

    #[test]
    fn admissible_examples() {
        let expect = |v: &[&[i64]]| v.iter().map(|x| t(x)).collect::<BTreeSet<_>>();
        assert_eq!(
            admissible_types(6, 5),
            expect(&[&[8, 8, 9, 9], &[8, 8, 8, 10]])
        );
        assert_eq!(admissible_types(3, 3), expect(&[&[5, 5]]));
        assert_eq!(admissible_types(4, 3), expect(&[&[6, 8], &[7, 7]]));
        assert!(admissible_types(3, 5).is_empty());
    }

    /// Brute-force count of compositions, deduplicated as multisets.
    fn brute_force(d: usize, n: usize) -> BTreeSet<SplittingType> {
        let parts = n - 1;
        let total = 2 * d as i64 - 2;
        let mut out = BTreeSet::new();
        let mut idx = vec![2i64; parts];
        loop {
            if idx.iter().sum::<i64>() == total {
                out.insert(SplittingType::new(
                    idx.iter().map(|b| d as i64 + b).collect(),
                ));
            }
            let mut k = 0;
            loop {
                if k == parts {
                    return out;
                }
                idx[k] += 1;
                if idx[k] <= total {
                    break;
                }
                idx[k] = 2;
                k += 1;
            }
        }
    }

    #[test]
    fn admissible_matches_brute_force() {
        for n in 3..=5 {
            for d in n..=8 {
                assert_eq!(
                    admissible_types(d, n),
                    brute_force(d, n),
                    "d = {d}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn generic_is_admissible() {
        for n in 3..=10 {
            for d in n..=10 {
                let g = generic_splitting(d, n).unwrap();
                assert!(admissible_types(d, n).contains(&g), "d = {d}, n = {n}");
                assert_eq!(g.c1(), (n as i64 + 1) * d as i64 - 2);
                assert!(g.is_balanced());
            }
        }
    }
}
