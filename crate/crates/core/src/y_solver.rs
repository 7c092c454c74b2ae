//! The implicit degree quantity `y`, defined by
//!
//! ```text
//! y(y − 1) = Σ_{k ≤ ⌊y⌋} d_k + (y − ⌊y⌋)·d_{⌈y⌉},
//! ```
//!
//! which gives `μ ≤ y − 1`, and its analogue `z` on line-graph degrees,
//! which gives `q ≤ z + 1`.
//!
//! The solve is two-staged. An integer scan finds the first `a'` with
//! `a'(a' − 1) ≥ Σ_{k ≤ a'} d_k`; equality means `y = a'`. Otherwise
//! `a = a' − 1 < y < a + 1` and `y` is the larger root of
//! `y² − (1 + d_{a+1})y − (c − a·d_{a+1}) = 0` with `c = Σ_{k ≤ a} d_k`.

use serde::Serialize;

use crate::graph::{DegreeSequence, LineDegreeSequence};

/// Residual bound every solution satisfies.
pub const RESIDUAL_LIMIT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct YSolution {
    pub y: f64,
    /// Breakpoint: `y = a` or `a < y < a + 1`.
    pub a: usize,
    /// `Σ_{k=1}^{a} d_k`.
    pub c: u64,
    /// `|y(y−1) − Σ_{k≤⌊y⌋} d_k − (y−⌊y⌋) d_{⌈y⌉}|`.
    pub residual: f64,
}

impl YSolution {
    pub fn is_integral(&self) -> bool {
        self.y == self.a as f64
    }
}

pub fn solve_y(ds: &DegreeSequence) -> YSolution {
    solve_sorted(ds.as_slice())
}

pub fn solve_z(lds: &LineDegreeSequence) -> YSolution {
    solve_sorted(lds.as_slice())
}

/// `μ ≤ y − 1`.
pub fn y_upper_bound_mu(ds: &DegreeSequence) -> f64 {
    solve_y(ds).y - 1.0
}

/// `q ≤ z + 1`.
pub fn z_upper_bound_q(lds: &LineDegreeSequence) -> f64 {
    solve_z(lds).y + 1.0
}

/// Left side minus right side of the defining equation at `y`.
pub fn defining_gap(seq: &[usize], y: f64) -> f64 {
    let floor = y.floor() as usize;
    let frac = y - y.floor();
    let prefix: u64 = seq[..floor.min(seq.len())].iter().map(|&d| d as u64).sum();
    let tail = if frac > 0.0 && floor < seq.len() {
        frac * seq[floor] as f64
    } else {
        0.0
    };
    y * (y - 1.0) - prefix as f64 - tail
}

/// Solves the defining equation for a non-increasing sequence.
///
/// Panics on an empty sequence.
pub fn solve_sorted(seq: &[usize]) -> YSolution {
    let n = seq.len();
    assert!(n > 0, "empty degree sequence");
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0u64);
    for &d in seq {
        prefix.push(prefix.last().unwrap() + d as u64);
    }
    let gap = |k: usize| (k as i128) * (k as i128 - 1) - prefix[k] as i128;

    // Start at ⌊d + 1⌋ with d = sum / n. For a non-increasing sequence
    // S(k) ≥ k·d, so gap(k) < 0 for every k < d + 1 and nothing below the
    // start can be the breakpoint.
    let start = ((prefix[n] / n as u64) as usize + 1).clamp(1, n);
    let mut hit = start;
    while hit < n && gap(hit) < 0 {
        hit += 1;
    }

    let finish = |y: f64, a: usize| YSolution {
        y,
        a,
        c: prefix[a],
        residual: defining_gap(seq, y).abs(),
    };
    if gap(hit) == 0 || hit == 1 {
        // gap(1) = −d_1 ≤ 0, so hit == 1 implies gap(1) == 0 here.
        return finish(hit as f64, hit);
    }
    if gap(hit) < 0 {
        // Only possible at hit == n, which cannot happen for a graph since
        // n(n − 1) ≥ 2m; y = n is the clamp.
        return finish(n as f64, n);
    }
    let a = hit - 1;
    let next = seq[a] as i128;
    let c = prefix[a] as i128;
    let disc = (next + 1) * (next + 1) + 4 * (c - a as i128 * next);
    let y = ((next + 1) as f64 + (disc as f64).sqrt()) / 2.0;
    finish(y, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn ds(f: Family) -> DegreeSequence {
        f.build().unwrap().degree_sequence()
    }

    /// Bisection on the defining equation: independent of the scan.
    fn bisect(seq: &[usize]) -> f64 {
        let (mut lo, mut hi) = (1.0f64, seq.len() as f64);
        if defining_gap(seq, lo) >= 0.0 {
            return lo;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if defining_gap(seq, mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        hi
    }

    #[test]
    fn star_and_wheel_closed_forms() {
        let s = solve_y(&ds(Family::Star(10)));
        assert_eq!((s.y, s.a), (4.0, 4));
        for n in [5usize, 26, 101] {
            let y = solve_y(&ds(Family::Star(n))).y;
            assert!((y - (1.0 + ((n - 1) as f64).sqrt())).abs() < 1e-12);
        }
        for n in [4usize, 9, 16, 25, 7] {
            let y = y_upper_bound_mu(&ds(Family::Wheel(n)));
            assert!((y - (1.0 + (n as f64).sqrt())).abs() < 1e-12, "wheel {n}");
        }
    }

    #[test]
    fn k79_hand_solution() {
        // a = 9, c = 77, d_10 = 7: y² − 8y − 14 = 0.
        let s = solve_y(&ds(Family::CompleteBipartite(7, 9)));
        assert_eq!((s.a, s.c), (9, 77));
        assert!((s.y - (4.0 + 30f64.sqrt())).abs() < 1e-12);
        assert!(s.residual <= RESIDUAL_LIMIT);
    }

    #[test]
    fn regular_and_path() {
        let s = solve_y(&ds(Family::Cycle(7)));
        assert_eq!(s.y, 3.0);
        assert!((y_upper_bound_mu(&ds(Family::Complete(6))) - 5.0).abs() < 1e-12);
        assert!((y_upper_bound_mu(&ds(Family::Path(3))) - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn z_examples() {
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(solve_z(&c5.line_degree_sequence().unwrap()).y, 3.0);
        let p3 = Family::Path(3).build().unwrap();
        let z = solve_z(&p3.line_degree_sequence().unwrap());
        assert_eq!(z.y, 2.0);
        let k2 = Family::Complete(2).build().unwrap();
        let lds = k2.line_degree_sequence().unwrap();
        assert_eq!(solve_z(&lds).y, 1.0);
        assert_eq!(z_upper_bound_q(&lds), 2.0);
    }

    #[test]
    fn edgeless_gives_one() {
        let s = solve_y(&ds(Family::Empty(4)));
        assert_eq!((s.y, s.a, s.c), (1.0, 1, 0));
    }

    proptest::proptest! {
        #[test]
        fn agrees_with_bisection(mut seq in proptest::collection::vec(0usize..12, 1..14)) {
            let n = seq.len();
            for d in &mut seq {
                *d %= n;
            }
            seq.sort_unstable_by(|a, b| b.cmp(a));
            let s = solve_sorted(&seq);
            proptest::prop_assert!(s.y >= 1.0 && s.y <= seq.len() as f64);
            proptest::prop_assert!(s.residual <= RESIDUAL_LIMIT);
            proptest::prop_assert!((s.y - bisect(&seq)).abs() < 1e-8, "{:?} {:?}", seq, s);
        }
    }
}
