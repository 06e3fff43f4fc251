//! Radial law of the simple walk on the infinite `d`-regular tree.
//!
//! The distance from the root is a walk on `{0, 1, 2, ...}` reflected at 0:
//! from 0 it moves to 1, from `k >= 1` it moves up with probability
//! `(d-1)/d` and down with probability `1/d`.

use crate::scalar::{Field, Real};
use crate::theory::PExponent;

/// One step of the radial recursion. `prev` has length `t + 1`.
pub fn radial_step<F: Field>(d: usize, prev: &[F]) -> Vec<F> {
    let up = F::ratio(d - 1, d);
    let down = F::ratio(1, d);
    let mut next = vec![F::zero(); prev.len() + 1];
    for (k, p) in prev.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if k == 0 {
            next[1] = next[1].clone() + p.clone();
        } else {
            next[k + 1] = next[k + 1].clone() + p.clone() * up.clone();
            next[k - 1] = next[k - 1].clone() + p.clone() * down.clone();
        }
    }
    next
}

/// Rows `P(|X_t| = k)` for `t = 0..=horizon`.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeRadialTable<F> {
    d: usize,
    rows: Vec<Vec<F>>,
}

pub fn tree_radial<F: Field>(d: usize, horizon: usize) -> TreeRadialTable<F> {
    assert!(d >= 3, "tree degree must be at least 3");
    let mut rows = Vec::with_capacity(horizon + 1);
    rows.push(vec![F::one()]);
    for t in 0..horizon {
        let next = radial_step(d, &rows[t]);
        rows.push(next);
    }
    TreeRadialTable { d, rows }
}

impl<F: Field> TreeRadialTable<F> {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn horizon(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, t: usize) -> &[F] {
        &self.rows[t]
    }

    /// `P(|X_t| = k)`, zero for `k > t`.
    pub fn prob(&self, t: usize, k: usize) -> F {
        self.rows[t].get(k).cloned().unwrap_or_else(F::zero)
    }

    /// `Q^{2s}(xi, xi)`.
    pub fn return_probability(&self, s: usize) -> F {
        self.prob(2 * s, 0)
    }
}

impl<T: Real> TreeRadialTable<T> {
    /// `||Q^t(xi, .)||_p` on the tree.
    pub fn lp_norm(&self, t: usize, p: PExponent) -> T {
        radial_lp_norm(self.d, &self.rows[t], p)
    }
}

/// `ln` of the sphere size `d (d-1)^{k-1}` (1 at `k = 0`).
fn ln_sphere<T: Real>(d: usize, k: usize) -> T {
    if k == 0 {
        T::zero()
    } else {
        T::from_count(d).ln() + T::from_count(k - 1) * T::from_count(d - 1).ln()
    }
}

/// `(sum_k S_k^{1-p} P_k^p)^{1/p}` for sphere sizes `S_k`, evaluated in log
/// space.
pub fn radial_lp_norm<T: Real>(d: usize, row: &[T], p: PExponent) -> T {
    // per-vertex log mass on sphere k, and log of sphere size
    let terms: Vec<(T, T)> = row
        .iter()
        .enumerate()
        .filter(|(_, &pk)| pk > T::zero())
        .map(|(k, &pk)| {
            let ls = ln_sphere::<T>(d, k);
            (pk.ln() - ls, ls)
        })
        .collect();
    match p {
        PExponent::Infinite => terms.iter().map(|&(lv, _)| lv).fold(T::neg_infinity(), T::max).exp(),
        PExponent::Finite(p) => {
            let pt = T::lit(p);
            let logs: Vec<T> = terms.iter().map(|&(lv, ls)| ls + pt * lv).collect();
            let m = logs.iter().copied().fold(T::neg_infinity(), T::max);
            let s: T = logs.iter().map(|&l| (l - m).exp()).sum();
            ((m + s.ln()) / pt).exp()
        }
    }
}

/// Row `t` of the radial law, without storing earlier rows.
pub fn radial_row<F: Field>(d: usize, t: usize) -> Vec<F> {
    (0..t).fold(vec![F::one()], |row, _| radial_step(d, &row))
}

/// `||Q^t(xi, .)||_p` on the `d`-regular tree.
pub fn tree_lp_norm<T: Real>(d: usize, t: usize, p: PExponent) -> T {
    radial_lp_norm(d, &radial_row::<T>(d, t), p)
}

/// `Q^{2s}(xi, xi) rho^{-2s}` for `s = 0..=s_max`, with `rho = 2 sqrt(d-1)/d`.
///
/// Uses the tilted chain `P_t(k) (d-1)^{-k/2} rho^{-t}`, whose steps are 1/2
/// up and 1/2 down away from 0 and `d / (2(d-1))` from 0 to 1, so nothing
/// underflows at large `t`.
pub fn tilted_return_ratios(d: usize, s_max: usize) -> Vec<f64> {
    let from_root = d as f64 / (2.0 * (d - 1) as f64);
    let mut row = vec![1.0f64];
    let mut out = vec![1.0];
    for t in 0..2 * s_max {
        let mut next = vec![0.0; row.len() + 1];
        for (k, &v) in row.iter().enumerate() {
            if k == 0 {
                next[1] += v * from_root;
            } else {
                next[k + 1] += 0.5 * v;
                next[k - 1] += 0.5 * v;
            }
        }
        row = next;
        if t % 2 == 1 {
            out.push(row[0]);
        }
    }
    out
}

/// Mean and variance of `|X_t|`.
pub fn radial_moments(d: usize, t: usize) -> (f64, f64) {
    let row = radial_row::<f64>(d, t);
    let mean: f64 = row.iter().enumerate().map(|(k, p)| k as f64 * p).sum();
    let second: f64 = row.iter().enumerate().map(|(k, p)| (k * k) as f64 * p).sum();
    (mean, second - mean * mean)
}

/// Smallest and largest value over `1 <= t <= t_max`, `0 <= k <= t` with
/// `k = t (mod 2)` of
/// `P(|X_t| = k) / ((k+1)/t P(Z_t = (k+t)/2))` with `Z_t ~ Bin(t, (d-1)/d)`.
///
/// Entries whose probabilities underflow double precision are skipped.
pub fn reflection_ratio_range(d: usize, t_max: usize) -> (f64, f64) {
    let ln_up = ((d - 1) as f64 / d as f64).ln();
    let ln_down = (1.0 / d as f64).ln();
    let mut ln_fact = vec![0.0f64; t_max + 1];
    for i in 1..=t_max {
        ln_fact[i] = ln_fact[i - 1] + (i as f64).ln();
    }
    let rho = 2.0 * ((d - 1) as f64).sqrt() / d as f64;
    let half_ln_branch = 0.5 * ((d - 1) as f64).ln();
    let from_root = d as f64 / (2.0 * (d - 1) as f64);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    // tilted row, rescaled to max 1 with the log scale tracked separately
    let mut row = vec![1.0f64];
    let mut ln_scale = 0.0;
    for t in 1..=t_max {
        let mut next = vec![0.0; row.len() + 1];
        for (k, &v) in row.iter().enumerate() {
            if k == 0 {
                next[1] += v * from_root;
            } else {
                next[k + 1] += 0.5 * v;
                next[k - 1] += 0.5 * v;
            }
        }
        let m = next.iter().copied().fold(0.0, f64::max);
        next.iter_mut().for_each(|v| *v /= m);
        ln_scale += m.ln();
        row = next;
        for k in (t % 2..=t).step_by(2) {
            if row[k] < 1e-250 {
                continue;
            }
            let ln_p = row[k].ln() + ln_scale + k as f64 * half_ln_branch + t as f64 * rho.ln();
            let j = (k + t) / 2;
            let ln_binom = ln_fact[t] - ln_fact[j] - ln_fact[t - j] + j as f64 * ln_up + (t - j) as f64 * ln_down;
            let ratio = (ln_p - ln_binom - ((k + 1) as f64 / t as f64).ln()).exp();
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    #[test]
    fn first_rows_for_cubic_tree() {
        let t = tree_radial::<BigRational>(3, 2);
        assert_eq!(t.row(1), &[q(0, 1), q(1, 1)]);
        assert_eq!(t.row(2), &[q(1, 3), q(0, 1), q(2, 3)]);
    }

    #[test]
    fn fourth_return_probability() {
        for d in [3i64, 4, 6, 9] {
            let t = tree_radial::<BigRational>(d as usize, 4);
            assert_eq!(t.return_probability(1), q(1, d));
            assert_eq!(t.return_probability(2), q(2 * d - 1, d * d * d));
        }
    }

    #[test]
    fn rows_sum_to_one_with_parity_zeros() {
        let t = tree_radial::<BigRational>(4, 12);
        for s in 0..=12 {
            let sum = t.row(s).iter().fold(q(0, 1), |a, b| a + b);
            assert_eq!(sum, q(1, 1));
            for k in 0..=s {
                if (k + s) % 2 == 1 {
                    assert_eq!(t.prob(s, k), q(0, 1));
                }
            }
            assert_eq!(t.prob(s, s + 1), q(0, 1));
        }
    }

    #[test]
    fn floating_rows_match_exact() {
        let exact = tree_radial::<BigRational>(5, 20);
        let float = tree_radial::<f64>(5, 20);
        for k in 0..=20 {
            assert!((float.prob(20, k) - exact.prob(20, k).approx_f64()).abs() < 1e-15);
        }
        assert_eq!(radial_row::<f64>(5, 20), float.row(20));
    }

    #[test]
    fn lp_norm_limits() {
        let table = tree_radial::<f64>(3, 10);
        let l1 = table.lp_norm(10, PExponent::Finite(1.0));
        assert!((l1 - 1.0).abs() < 1e-14);
        // L^2 norm squared is the return probability at time 2t.
        let long = tree_radial::<f64>(3, 20);
        let l2 = table.lp_norm(10, PExponent::Finite(2.0));
        assert!((l2 * l2 - long.return_probability(10)).abs() < 1e-15);
        let linf = table.lp_norm(10, PExponent::Infinite);
        let direct = (0..=10)
            .map(|k| table.prob(10, k) / if k == 0 { 1.0 } else { 3.0 * 2f64.powi(k as i32 - 1) })
            .fold(0.0, f64::max);
        assert!((linf - direct).abs() < 1e-15);
    }

    #[test]
    fn tilted_ratios_match_plain_rows() {
        for d in [3, 4, 6] {
            let plain = tree_radial::<f64>(d, 40);
            let rho = 2.0 * ((d - 1) as f64).sqrt() / d as f64;
            let tilted = tilted_return_ratios(d, 20);
            for s in 0..=20 {
                let expected = plain.return_probability(s) / rho.powi(2 * s as i32);
                assert!((tilted[s] - expected).abs() < 1e-12 * expected.max(1.0));
            }
        }
    }

    #[test]
    fn moments_small_t() {
        let (m, v) = radial_moments(3, 2);
        assert!((m - 4.0 / 3.0).abs() < 1e-15);
        assert!((v - (8.0 / 3.0 - 16.0 / 9.0)).abs() < 1e-15);
    }

    #[test]
    fn reflection_ratio_is_bounded() {
        let (lo, hi) = reflection_ratio_range(3, 200);
        assert!(lo > 0.0 && hi.is_finite() && hi / lo < 100.0);
    }
}
