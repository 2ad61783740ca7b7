//! Closed-form quantities and arithmetic arguments: the residue constant
//! `c(n)`, the exact independence formula, chromatic lower bounds, the
//! independence number of the 0/1 restriction, the signplace pigeonhole
//! predicate, and the counting contradiction that pushes the dimension-9
//! chromatic bound to 22. Everything here is exact integer arithmetic.

use serde::Serialize;

use crate::error::{Error, Result};

/// The residue constant: 0, 1, 2, 2 for `n = 0, 1, 2, 3 (mod 4)`.
pub fn c_const(n: usize) -> usize {
    match n % 4 {
        0 => 0,
        1 => 1,
        _ => 2,
    }
}

/// Exact binomial coefficient (panics on overflow in debug builds; callers
/// stay far below u64 range).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

/// The independence number of the dimension-`n` graph:
/// `max(6n - 28, 4n - 4 c(n))`.
pub fn alpha_formula(n: usize) -> usize {
    let quad = 4 * n as i64 - 4 * c_const(n) as i64;
    let cobra = 6 * n as i64 - 28;
    quad.max(cobra).max(0) as usize
}

/// Order, independence number and the resulting chromatic lower bound for
/// one dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChiBound {
    pub n: usize,
    /// `8 * C(n, 3)`, the graph order.
    pub order: u64,
    /// Value of [`alpha_formula`].
    pub alpha: u64,
    /// `ceil(order / alpha)`: a lower bound on the chromatic number of the
    /// graph, hence of rational and real space in that dimension.
    pub bound: u64,
}

/// Chromatic lower bound `ceil(8 C(n,3) / alpha(n))`; requires `n >= 3`.
pub fn chi_lower_bound(n: usize) -> ChiBound {
    assert!(n >= 3, "chromatic bound requires n >= 3");
    let order = 8 * binomial(n, 3);
    let alpha = alpha_formula(n) as u64;
    let bound = order.div_ceil(alpha);
    ChiBound { n, order, alpha, bound }
}

/// Independence number of the 0/1 restriction: `n - c(n)`.
pub fn nagy_alpha(n: usize) -> usize {
    n - c_const(n)
}

/// Outcome of the signplace pigeonhole bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PigeonholeBound {
    /// `ceil(3 (alpha - 2k) / (2n - k))`: the guaranteed maximum signplace
    /// degree after excluding `k` signplaces with at most `2k` vertices.
    pub a_min: i64,
    /// Remaining signplace count `2n - k`.
    pub m: usize,
    /// Whether `a_min >= 5` or `m < 14`.
    pub verdict: bool,
}

/// Pigeonhole bound on the maximum signplace degree after excluding `k`
/// signplaces (each removing at most two vertices) from an independent set of
/// size `alpha_assumed` in dimension `n`.
pub fn pigeonhole_degree_bound(n: usize, k: usize, alpha_assumed: usize) -> Result<PigeonholeBound> {
    if k >= 2 * n {
        return Err(Error::BadExclusionCount { k, bound: 2 * n });
    }
    let numerator = 3 * (alpha_assumed as i64 - 2 * k as i64);
    let denominator = (2 * n - k) as i64;
    let a_min = numerator.div_euclid(denominator)
        + if numerator.rem_euclid(denominator) != 0 { 1 } else { 0 };
    let m = 2 * n - k;
    Ok(PigeonholeBound { a_min, m, verdict: a_min >= 5 || m < 14 })
}

/// Certificate of the dimension-9 counting contradiction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountingContradiction {
    /// Number of bases avoiding a fixed place: `C(8, 3)`.
    pub bases_avoiding_place: u64,
    /// Twice that number; each such base must be covered exactly twice.
    pub double_coverage: u64,
    /// All non-negative `(a, b)` with `8a + 5b = double_coverage`.
    pub solutions: Vec<(u64, u64)>,
    /// The required number of color classes under the assumption.
    pub class_count: u64,
    /// Whether some solution satisfies `a + b = class_count`.
    pub feasible: bool,
    /// The chromatic lower bound certified by infeasibility.
    pub chromatic_bound: u64,
}

/// Arithmetic feasibility check for a 21-coloring in dimension 9.
///
/// If every color class were a pair of disjoint full quads (size 32, the only
/// shape attaining the independence number — taken as an input fact, not
/// re-derived here), classes split by their uncovered place. Counting the
/// `C(8,3) = 56` bases that avoid the first place, covered twice each, forces
/// `8a + 5b = 112` with `a + b = 21` over non-negative integers, which has no
/// solution. Hence at least 22 classes are needed.
pub fn prop9_check() -> CountingContradiction {
    let bases_avoiding_place = binomial(8, 3);
    let double_coverage = 2 * bases_avoiding_place;
    let mut solutions = Vec::new();
    let mut a = 0;
    while 8 * a <= double_coverage {
        let rest = double_coverage - 8 * a;
        if rest.is_multiple_of(5) {
            solutions.push((a, rest / 5));
        }
        a += 1;
    }
    let class_count = 21;
    let feasible = solutions.iter().any(|&(a, b)| a + b == class_count);
    CountingContradiction {
        bases_avoiding_place,
        double_coverage,
        solutions,
        class_count,
        feasible,
        chromatic_bound: if feasible { class_count } else { class_count + 1 },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_const_residues() {
        assert_eq!(c_const(8), 0);
        assert_eq!(c_const(9), 1);
        assert_eq!(c_const(10), 2);
        assert_eq!(c_const(11), 2);
        assert_eq!(c_const(12), 0);
    }

    #[test]
    fn alpha_formula_values() {
        // both branches evaluated by hand: 6n-28 vs 4n-4c(n)
        assert_eq!(alpha_formula(10), 32); // max(32, 32)
        assert_eq!(alpha_formula(12), 48); // max(44, 48)
        assert_eq!(alpha_formula(20), 92); // max(92, 80)
        let expected: [(usize, usize); 12] = [
            (3, 4),
            (4, 16),
            (5, 16),
            (6, 16),
            (7, 20),
            (8, 32),
            (9, 32),
            (10, 32),
            (11, 38),
            (12, 48),
            (13, 50),
            (14, 56),
        ];
        for (n, alpha) in expected {
            assert_eq!(alpha_formula(n), alpha, "n = {n}");
        }
    }

    #[test]
    fn alpha_formula_is_non_decreasing() {
        for n in 3..200 {
            assert!(alpha_formula(n + 1) >= alpha_formula(n), "n = {n}");
        }
    }

    #[test]
    fn branch_switching_thresholds() {
        // 6n - 28 >= 4n exactly from n = 14 on, with equality only at n = 14
        for n in 3..200usize {
            let cobra = 6 * n as i64 - 28;
            let plain_quad = 4 * n as i64;
            assert_eq!(cobra >= plain_quad, n >= 14, "n = {n}");
            assert_eq!(cobra == plain_quad, n == 14, "n = {n}");
        }
        // against the residue-adjusted branch the formula switches for good at 13
        for n in 3..200usize {
            let cobra = 6 * n as i64 - 28;
            let quad = 4 * n as i64 - 4 * c_const(n) as i64;
            assert_eq!(cobra >= quad, n >= 13 || n == 10 || n == 11, "n = {n}");
        }
        assert_eq!(alpha_formula(12), 4 * 12); // quad branch still wins at 12
        assert_eq!(alpha_formula(13), 6 * 13 - 28);
    }

    #[test]
    fn chi_bound_values() {
        assert_eq!(chi_lower_bound(3).bound, 2); // ceil(8 / 4)
        assert_eq!(chi_lower_bound(9).bound, 21);
        assert_eq!(chi_lower_bound(10).bound, 30);
        assert_eq!(chi_lower_bound(11).bound, 35);
        assert_eq!(chi_lower_bound(12).bound, 37);
    }

    #[test]
    fn chi_bound_ceiling_invariants() {
        for n in 3..=50 {
            let b = chi_lower_bound(n);
            assert_eq!(b.order, 8 * binomial(n, 3));
            assert!(b.bound * b.alpha >= b.order, "n = {n}");
            assert!((b.bound - 1) * b.alpha < b.order, "n = {n}");
        }
    }

    #[test]
    fn nagy_alpha_values() {
        assert_eq!(nagy_alpha(4), 4);
        assert_eq!(nagy_alpha(7), 5);
        assert_eq!(nagy_alpha(8), 8);
    }

    #[test]
    fn pigeonhole_examples() {
        // 3(20 - 2) / (14 - 1) = 54/13, rounded up to 5
        let b = pigeonhole_degree_bound(7, 1, 20).unwrap();
        assert_eq!((b.a_min, b.m, b.verdict), (5, 13, true));
        // above 4n vertices the degree bound reaches 6
        let b = pigeonhole_degree_bound(14, 0, 56).unwrap();
        assert_eq!(b.a_min, 6);
        assert!(b.verdict);
        // k = 2 in dimension 7 leaves only 12 signplaces
        let b = pigeonhole_degree_bound(7, 2, 20).unwrap();
        assert_eq!(b.m, 12);
        assert!(b.m < 14);
        assert!(b.verdict);
        assert!(pigeonhole_degree_bound(7, 14, 20).is_err());
    }

    #[test]
    fn counting_contradiction() {
        let r = prop9_check();
        assert_eq!(r.bases_avoiding_place, 56);
        assert_eq!(r.double_coverage, 112);
        assert_eq!(r.solutions, vec![(4, 16), (9, 8), (14, 0)]);
        assert!(!r.feasible);
        assert_eq!(r.chromatic_bound, 22);
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 3), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(40, 3), 9880);
    }
}
