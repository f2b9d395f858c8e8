//! Circumference lower-bound formulas and their exact decision forms.
//!
//! Every comparison against an integer circumference is done in integer or
//! rational arithmetic (radicals are compared in squared form); floating
//! values exist for display only. Tightness is an exact equality, and floats
//! would misclassify it.

use std::fmt;

use serde::Serialize;

/// Which branch of the three-case path/degree bound applies to `(p, delta)`.
///
/// Exactly one case applies for every `delta >= 2`, `p >= 3`; the middle
/// range `2*delta+1 ..= 3*delta-2` is empty unless `delta >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Theorem1Case {
    ShortPath,
    MidPath,
    LongPath,
}

impl fmt::Display for Theorem1Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem1Case::ShortPath => write!(f, "ShortPath"),
            Theorem1Case::MidPath => write!(f, "MidPath"),
            Theorem1Case::LongPath => write!(f, "LongPath"),
        }
    }
}

pub fn theorem1_case(p: usize, delta: usize) -> Theorem1Case {
    debug_assert!(delta >= 2 && p >= 3);
    if p <= 2 * delta {
        Theorem1Case::ShortPath
    } else if p + 2 <= 3 * delta {
        Theorem1Case::MidPath
    } else {
        Theorem1Case::LongPath
    }
}

/// Degree form of the classical bound: `min(n, 2*delta)`.
pub fn dirac_degree_bound(n: usize, delta: usize) -> usize {
    n.min(2 * delta)
}

/// Path form of the classical bound: `sqrt(2p)`, with the integer form
/// `ceil(sqrt(2p))` for comparisons against an integer circumference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PathBound {
    pub value: f64,
    pub integer: usize,
}

pub fn dirac_path_bound(p: usize) -> PathBound {
    PathBound {
        value: (2.0 * p as f64).sqrt(),
        integer: ceil_sqrt(2 * p as u64) as usize,
    }
}

/// Smallest `k` with `k*k >= x`.
fn ceil_sqrt(x: u64) -> u64 {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// `true` iff `c >= sqrt(2p)`, decided as `c^2 >= 2p`.
pub fn path_bound_satisfied(c: usize, p: usize) -> bool {
    (c as u64) * (c as u64) >= 2 * p as u64
}

/// Exact value of the three-case bound.
///
/// The long-path branch is `((2*delta+1) + sqrt(radicand)) / 2` where
/// `radicand = 8p - 40 + (2*delta-7)^2`; this is the statement's
/// `delta + 1/2 + sqrt(2p - 10 + (delta - 7/2)^2)` with everything scaled
/// into integers. The radicand is nonnegative whenever `p >= 3*delta - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "form")]
pub enum BoundExact {
    Int { value: u64 },
    Radical { half_offset: u64, radicand: u64 },
}

impl BoundExact {
    pub fn approx(&self) -> f64 {
        match *self {
            BoundExact::Int { value } => value as f64,
            BoundExact::Radical {
                half_offset,
                radicand,
            } => (half_offset as f64 + (radicand as f64).sqrt()) / 2.0,
        }
    }

    /// Smallest integer `>=` the bound.
    pub fn ceil(&self) -> usize {
        match *self {
            BoundExact::Int { value } => value as usize,
            BoundExact::Radical {
                half_offset,
                radicand,
            } => {
                let r = radicand.isqrt();
                let root_ceil = if r * r == radicand { r } else { r + 1 };
                ((half_offset + root_ceil).div_ceil(2)) as usize
            }
        }
    }

    /// Exact decision `c >= bound`, radicals compared in squared form.
    pub fn satisfied_by(&self, c: usize) -> bool {
        let c = c as i64;
        match *self {
            BoundExact::Int { value } => c >= value as i64,
            BoundExact::Radical {
                half_offset,
                radicand,
            } => {
                // c >= (s + sqrt(a)) / 2  <=>  2c - s >= sqrt(a)
                let lhs = 2 * c - half_offset as i64;
                lhs >= 0 && lhs * lhs >= radicand as i64
            }
        }
    }

    /// Exact equality `c == bound`.
    pub fn attained_by(&self, c: usize) -> bool {
        let c = c as i64;
        match *self {
            BoundExact::Int { value } => c == value as i64,
            BoundExact::Radical {
                half_offset,
                radicand,
            } => {
                let lhs = 2 * c - half_offset as i64;
                lhs >= 0 && lhs * lhs == radicand as i64
            }
        }
    }
}

impl fmt::Display for BoundExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BoundExact::Int { value } => write!(f, "{value}"),
            BoundExact::Radical {
                half_offset,
                radicand,
            } => {
                write!(f, "({half_offset}+sqrt({radicand}))/2")
            }
        }
    }
}

/// The three-case bound in exact form, together with the case that applied.
pub fn theorem1_bound_exact(p: usize, delta: usize) -> (BoundExact, Theorem1Case) {
    let case = theorem1_case(p, delta);
    let bound = match case {
        Theorem1Case::ShortPath => BoundExact::Int { value: p as u64 },
        Theorem1Case::MidPath => BoundExact::Int {
            value: p as u64 - 1,
        },
        Theorem1Case::LongPath => {
            let s = 2 * delta as i64 + 1;
            let radicand = 8 * p as i64 - 40 + (2 * delta as i64 - 7).pow(2);
            debug_assert!(
                radicand >= 0,
                "radicand nonnegative whenever p >= 3*delta - 1"
            );
            BoundExact::Radical {
                half_offset: s as u64,
                radicand: radicand as u64,
            }
        }
    };
    (bound, case)
}

/// Floating-point view of the three-case bound (display only).
pub fn theorem1_bound(p: usize, delta: usize) -> (f64, Theorem1Case) {
    let (exact, case) = theorem1_bound_exact(p, delta);
    (exact.approx(), case)
}

pub fn theorem1_bound_ceil(p: usize, delta: usize) -> usize {
    theorem1_bound_exact(p, delta).0.ceil()
}

/// Exact decision form of the three-case bound. For the long-path case this
/// is `2c >= 2*delta + 1` and `(2c - 2*delta - 1)^2 >= 8p - 40 + (2*delta-7)^2`,
/// with no floating point involved.
pub fn theorem1_satisfied(c: usize, p: usize, delta: usize) -> bool {
    theorem1_bound_exact(p, delta).0.satisfied_by(c)
}

/// Exact rational with positive denominator, reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        Ratio {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(value: i64) -> Self {
        Ratio { num: value, den: 1 }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `value >= self`, exactly.
    pub fn le_int(&self, value: usize) -> bool {
        value as i64 * self.den >= self.num
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Averaging bound extracted from a vine of `m` paths on a longest path of
/// order `p`: `(2p - 10) / (m + 1) + 4`, as an exact rational.
pub fn lemma2_bound(p: usize, m: usize) -> Ratio {
    debug_assert!(p >= 3 && m >= 1);
    let den = m as i64 + 1;
    Ratio::new(2 * p as i64 - 10 + 4 * den, den)
}

/// Endpoint-degree bound from a vine of `m` paths: `d(x) + d(y) + m - 2`.
pub fn lemma3_bound(dx: usize, dy: usize, m: usize) -> usize {
    debug_assert!(dx >= 1 && dy >= 1 && m >= 1);
    dx + dy + m - 2
}

/// Three-way disjunction: `c >= p-1`, or `c >= 3*delta - 3`, or
/// (`kappa == 2` and `p >= 3*delta - 1`).
pub fn theorem_c_holds(c: usize, p: usize, delta: usize, kappa: usize) -> bool {
    c + 1 >= p || c + 3 >= 3 * delta || (kappa == 2 && p + 1 >= 3 * delta)
}

/// `true` iff the three-case bound strictly exceeds `sqrt(2p)`, decided by
/// repeated squaring in integers.
pub fn theorem1_dominates_b(p: usize, delta: usize) -> bool {
    let (bound, _) = theorem1_bound_exact(p, delta);
    match bound {
        BoundExact::Int { value } => {
            // value > sqrt(2p)  <=>  value^2 > 2p
            let v = value as i64;
            v > 0 && v * v > 2 * p as i64
        }
        BoundExact::Radical {
            half_offset,
            radicand,
        } => {
            // (s + sqrt(a)) / 2 > sqrt(2p)  <=>  s + sqrt(a) > sqrt(8p)
            let s = half_offset as i64;
            let a = radicand as i64;
            let b = 8 * p as i64;
            if a >= b {
                return true; // s > 0 already settles it
            }
            // s + sqrt(a) > sqrt(b)  <=>  b - s^2 - a < 2*s*sqrt(a)
            let rest = b - s * s - a;
            if rest < 0 {
                return true;
            }
            4 * s * s * a > rest * rest
        }
    }
}

/// All bound values and satisfaction flags for one graph, computed from its
/// measured invariants. Pure arithmetic; the census harness supplies the
/// measurements.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub p: usize,
    pub c: usize,
    pub delta: usize,
    pub kappa: usize,
    pub thm_a: usize,
    pub thm_b: f64,
    pub thm_b_int: usize,
    pub thm1: f64,
    pub thm1_case: Theorem1Case,
    pub thm1_exact: BoundExact,
    pub thm1_ceil: usize,
    pub thm1_tight: bool,
    pub thm_a_ok: bool,
    pub thm_b_ok: bool,
    pub thm1_ok: bool,
    pub thm_c_ok: bool,
}

impl BoundReport {
    pub fn from_parts(n: usize, p: usize, c: usize, delta: usize, kappa: usize) -> Self {
        let thm_a = dirac_degree_bound(n, delta);
        let path_bound = dirac_path_bound(p);
        let (thm1_exact, thm1_case) = theorem1_bound_exact(p, delta);
        let thm1_ceil = thm1_exact.ceil();
        BoundReport {
            n,
            p,
            c,
            delta,
            kappa,
            thm_a,
            thm_b: path_bound.value,
            thm_b_int: path_bound.integer,
            thm1: thm1_exact.approx(),
            thm1_case,
            thm1_exact,
            thm1_ceil,
            thm1_tight: c == thm1_ceil,
            thm_a_ok: c >= thm_a,
            thm_b_ok: path_bound_satisfied(c, p),
            thm1_ok: thm1_exact.satisfied_by(c),
            thm_c_ok: theorem_c_holds(c, p, delta, kappa),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_bound_examples() {
        assert_eq!(dirac_degree_bound(8, 3), 6);
        assert_eq!(dirac_degree_bound(4, 3), 4);
        assert_eq!(dirac_degree_bound(7, 3), 6);
    }

    #[test]
    fn path_bound_examples() {
        let b = dirac_path_bound(8);
        assert_eq!(b.value, 4.0);
        assert_eq!(b.integer, 4);

        let b = dirac_path_bound(5);
        assert!((b.value - 3.1623).abs() < 1e-4);
        assert_eq!(b.integer, 4);

        assert_eq!(dirac_path_bound(18).integer, 6);
    }

    #[test]
    fn case_selection() {
        assert_eq!(theorem1_case(6, 3), Theorem1Case::ShortPath);
        assert_eq!(theorem1_case(7, 3), Theorem1Case::MidPath);
        assert_eq!(theorem1_case(8, 3), Theorem1Case::LongPath);
        // the mid range is empty at delta = 2
        assert_eq!(theorem1_case(4, 2), Theorem1Case::ShortPath);
        assert_eq!(theorem1_case(5, 2), Theorem1Case::LongPath);
    }

    #[test]
    fn bound_value_examples() {
        let (v, case) = theorem1_bound(7, 3);
        assert_eq!((v, case), (6.0, Theorem1Case::MidPath));

        // sqrt(16 - 10 + 1/4) + 3.5 = 2.5 + 3.5
        let (v, case) = theorem1_bound(8, 3);
        assert_eq!((v, case), (6.0, Theorem1Case::LongPath));

        let (v, case) = theorem1_bound(6, 3);
        assert_eq!((v, case), (6.0, Theorem1Case::ShortPath));

        // sqrt(0 + 9/4) + 5/2
        let (v, case) = theorem1_bound(5, 2);
        assert_eq!((v, case), (4.0, Theorem1Case::LongPath));
    }

    #[test]
    fn satisfied_examples() {
        // equality: (12-7)^2 = 25 = 64 - 40 + 1
        assert!(theorem1_satisfied(6, 8, 3));
        assert!(theorem1_bound_exact(8, 3).0.attained_by(6));
        // strict: 11^2 = 121 >= 41
        assert!(theorem1_satisfied(9, 10, 3));
        // violation: (10-7)^2 = 9 < 25
        assert!(!theorem1_satisfied(5, 8, 3));
    }

    #[test]
    fn ceil_examples() {
        assert_eq!(theorem1_bound_ceil(8, 3), 6);
        assert_eq!(theorem1_bound_ceil(10, 3), 7); // ceil(6.70..)
        assert_eq!(theorem1_bound_ceil(5, 2), 4);
        assert_eq!(theorem1_bound_ceil(7, 3), 6);
    }

    #[test]
    fn lemma2_bound_examples() {
        assert_eq!(lemma2_bound(5, 1), Ratio::from_int(4));
        assert_eq!(lemma2_bound(8, 1), Ratio::from_int(7));
        assert_eq!(lemma2_bound(8, 3), Ratio::new(11, 2));
        assert_eq!(lemma2_bound(8, 3).as_f64(), 5.5);
        assert!(lemma2_bound(8, 3).le_int(6));
        assert!(!lemma2_bound(8, 3).le_int(5));
    }

    #[test]
    fn lemma3_bound_examples() {
        assert_eq!(lemma3_bound(3, 3, 2), 6);
        assert_eq!(lemma3_bound(2, 2, 1), 3);
        assert_eq!(lemma3_bound(4, 3, 3), 8);
    }

    #[test]
    fn theorem_c_examples() {
        // via (ii) 6 >= 6, and via (iii)
        assert!(theorem_c_holds(6, 8, 3, 2));
        // via (i)
        assert!(theorem_c_holds(5, 5, 2, 2));
        // all three disjuncts fail (synthetic numbers, not a real graph)
        assert!(!theorem_c_holds(4, 8, 3, 3));
    }

    #[test]
    fn dominance_examples() {
        assert!(theorem1_dominates_b(8, 3)); // 6 > 4
        assert!(theorem1_dominates_b(5, 2)); // 4 > sqrt(10)
        assert!(theorem1_dominates_b(6, 3)); // 6 > sqrt(12)
    }

    #[test]
    fn dominance_on_moderate_grid() {
        for delta in 2..=20 {
            for p in 3..=500 {
                assert!(theorem1_dominates_b(p, delta), "p={p} delta={delta}");
            }
        }
    }

    #[test]
    #[allow(clippy::int_plus_one)] // transcribes the case conditions literally
    fn exactly_one_case_applies() {
        for delta in 2..=50 {
            for p in 3..=200 {
                let short = p <= 2 * delta;
                let mid = 2 * delta + 1 <= p && p <= 3 * delta - 2;
                let long = p >= 3 * delta - 1;
                assert_eq!(usize::from(short) + usize::from(mid) + usize::from(long), 1);
                let expected = if short {
                    Theorem1Case::ShortPath
                } else if mid {
                    Theorem1Case::MidPath
                } else {
                    Theorem1Case::LongPath
                };
                assert_eq!(theorem1_case(p, delta), expected);
            }
        }
    }

    #[test]
    fn long_path_value_at_boundary_is_two_delta() {
        // at p = 3*delta - 1 the radicand is (2*delta - 1)^2 exactly
        for delta in 2..=50u64 {
            let p = (3 * delta - 1) as usize;
            let (bound, case) = theorem1_bound_exact(p, delta as usize);
            assert_eq!(case, Theorem1Case::LongPath);
            assert!(bound.attained_by(2 * delta as usize));
            assert_eq!(bound.ceil(), 2 * delta as usize);
            let radicand = 8 * p as i64 - 40 + (2 * delta as i64 - 7).pow(2);
            assert_eq!(radicand, (2 * delta as i64 - 1).pow(2));
        }
    }

    #[test]
    fn bound_is_monotone_in_p_within_each_case() {
        // Across the mid/long boundary the bound genuinely drops for
        // delta >= 4 (p-1 = 3*delta - 3 at the last mid point versus 2*delta
        // at the first long point), so monotonicity holds per case only.
        for delta in 2..=12 {
            let mut prev: Option<(f64, Theorem1Case)> = None;
            for p in 3..=400 {
                let (v, case) = theorem1_bound(p, delta);
                if let Some((prev_v, prev_case)) = prev {
                    if prev_case == case {
                        assert!(v >= prev_v - 1e-12, "p={p} delta={delta}");
                    }
                }
                prev = Some((v, case));
            }
        }
    }

    #[test]
    fn case_boundary_jumps() {
        // short -> mid is seamless; mid -> long steps down by delta - 3
        for delta in 3..=12 {
            let (end_of_short, _) = theorem1_bound(2 * delta, delta);
            let (start_of_mid, _) = theorem1_bound(2 * delta + 1, delta);
            assert_eq!(end_of_short, start_of_mid);
            let (end_of_mid, _) = theorem1_bound(3 * delta - 2, delta);
            let (start_of_long, _) = theorem1_bound(3 * delta - 1, delta);
            assert_eq!(end_of_mid, (3 * delta - 3) as f64);
            assert_eq!(start_of_long, (2 * delta) as f64);
        }
    }

    #[test]
    fn exact_decision_matches_float_comparison() {
        for delta in 2..=50 {
            for p in 3..=2000 {
                let (float_bound, _) = theorem1_bound(p, delta);
                for c in 3..=60 {
                    let exact = theorem1_satisfied(c, p, delta);
                    let approx = c as f64 >= float_bound - 1e-9;
                    // near-equality is decided by the exact test; away from the
                    // boundary both must agree
                    if (c as f64 - float_bound).abs() > 1e-6 {
                        assert_eq!(exact, approx, "c={c} p={p} delta={delta}");
                    }
                }
            }
        }
    }

    #[test]
    fn report_from_parts_flags() {
        // the tight long-path instance: n=8, p=8, c=6, delta=3, kappa=2
        let r = BoundReport::from_parts(8, 8, 6, 3, 2);
        assert_eq!(r.thm_a, 6);
        assert_eq!(r.thm1_case, Theorem1Case::LongPath);
        assert!(r.thm1_tight && r.thm_a_ok && r.thm_b_ok && r.thm1_ok && r.thm_c_ok);
    }
}
