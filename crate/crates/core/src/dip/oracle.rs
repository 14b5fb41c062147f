//! Brute-force dip, independent of the Hartigan iteration.
//!
//! The dip is the smallest half-width `h` of a band around the empirical CDF
//! that still contains the CDF of some unimodal distribution (convex up to a
//! mode, concave after it, with a possible atom at the mode). Taking the mode
//! at each distinct value `v_k` in turn, the minimal width for that mode is the
//! largest of three lower bounds, each in closed form:
//!
//! * the left piece must be convex: half the largest gap between the upper
//!   CDF corners and the greatest convex minorant of the lower corners on
//!   `[v_0, v_k]`;
//! * the right piece must be concave: the mirror image with the least concave
//!   majorant of the upper corners on `[v_k, v_last]`;
//! * the two pieces must meet: the lowest value the convex piece can end at
//!   must not exceed the highest value the concave piece can start at. Both
//!   are envelopes of chord extrapolations that move linearly in `h`, so the
//!   smallest feasible `h` is a ratio of two of those lines.
//!
//! The dip is the minimum over all modes. Cost is cubic in the number of
//! distinct values in the worst case, which is fine for test-sized samples.

use super::{validate, DEGENERATE_DIP};
use crate::error::Result;

/// Brute-force dip of `values`; equals [`super::dip_statistic`] up to
/// rounding.
pub fn dip_oracle(values: &[f64]) -> Result<f64> {
    validate(values)?;
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    if n < 4 || sorted[0] == sorted[n - 1] {
        return Ok(DEGENERATE_DIP);
    }

    // Distinct values with the count of observations strictly below (`below`)
    // and at-or-below (`upto`) each of them.
    let mut v: Vec<f64> = Vec::new();
    let mut below: Vec<f64> = Vec::new();
    let mut upto: Vec<f64> = Vec::new();
    for (i, &x) in sorted.iter().enumerate() {
        if v.last() == Some(&x) {
            *upto.last_mut().unwrap() += 1.0;
        } else {
            v.push(x);
            below.push(i as f64);
            upto.push(i as f64 + 1.0);
        }
    }
    let m = v.len();

    let mut best = f64::INFINITY;
    for k in 0..m {
        let half_width = mode_width(&v, &below, &upto, k, best);
        best = best.min(half_width);
    }
    Ok(best / n as f64)
}

/// Minimal band half-width (in counts) with the mode at distinct value `k`.
/// Returns early with something `>= cutoff` once the mode cannot win.
fn mode_width(v: &[f64], below: &[f64], upto: &[f64], k: usize, cutoff: f64) -> f64 {
    let m = v.len();

    // Convex side. Lower corners (v_j, below_j) for j <= k; upper corners are
    // upto_j for j < k and below_k at the mode (the atom is free).
    let lower: Vec<(f64, f64)> = (0..=k).map(|j| (v[j], below[j])).collect();
    let hull = lower_hull(&lower);
    let mut dev_left = 0.0f64;
    for j in 0..=k {
        let top = if j < k { upto[j] } else { below[k] };
        dev_left = dev_left.max(top - eval_hull(&hull, v[j]));
    }

    // Concave side, mirrored: upper corners for j >= k, lower corners below_j
    // for j > k and upto_k at the mode.
    let upper: Vec<(f64, f64)> = (k..m).map(|j| (v[j], upto[j])).collect();
    let hull = upper_hull(&upper);
    let mut dev_right = 0.0f64;
    for j in k..m {
        let bottom = if j > k { below[j] } else { upto[k] };
        dev_right = dev_right.max(eval_hull(&hull, v[j]) - bottom);
    }

    let mut h = 0.5 * dev_left.max(dev_right);
    if h >= cutoff {
        return h;
    }

    // Meeting condition. The convex piece ends at or above every line
    // `a - alpha*h`; the concave piece starts at or below every `b + beta*h`.
    let mut left_lines = vec![(below[k], 1.0)];
    for j in 0..k {
        for i in 0..j {
            let r = (v[k] - v[j]) / (v[j] - v[i]);
            left_lines.push((upto[j] + r * (upto[j] - below[i]), 1.0 + 2.0 * r));
        }
    }
    let mut right_lines = vec![(upto[k], 1.0)];
    for j in (k + 1)..m {
        for l in (j + 1)..m {
            let s = (v[j] - v[k]) / (v[l] - v[j]);
            right_lines.push((below[j] - s * (upto[l] - below[j]), 1.0 + 2.0 * s));
        }
    }

    // The gap max(left) - min(right) is convex and decreasing in h, so Newton
    // steps from below land exactly on the crossing line pair.
    loop {
        if h >= cutoff {
            return h;
        }
        let (a, alpha) = left_lines
            .iter()
            .copied()
            .max_by(|p, q| (p.0 - p.1 * h).total_cmp(&(q.0 - q.1 * h)))
            .unwrap();
        let (b, beta) = right_lines
            .iter()
            .copied()
            .min_by(|p, q| (p.0 + p.1 * h).total_cmp(&(q.0 + q.1 * h)))
            .unwrap();
        if a - alpha * h <= b + beta * h {
            return h;
        }
        let next = (a - b) / (alpha + beta);
        if next <= h {
            return h;
        }
        h = next;
    }
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Lower convex hull of points sorted by strictly increasing x.
fn lower_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(points.len());
    for &p in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

/// Upper concave hull of points sorted by strictly increasing x.
fn upper_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(points.len());
    for &p in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) >= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

/// Piecewise-linear interpolation of a hull at `x` (inside its x-range).
fn eval_hull(hull: &[(f64, f64)], x: f64) -> f64 {
    if hull.len() == 1 {
        return hull[0].1;
    }
    let seg = hull
        .windows(2)
        .position(|w| x <= w[1].0)
        .unwrap_or(hull.len() - 2);
    let (x0, y0) = hull[seg];
    let (x1, y1) = hull[seg + 1];
    if x == x1 {
        return y1;
    }
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}
