//! Hartigan & Hartigan's linear-time dip computation on sorted data.
//!
//! The algorithm alternates between fitting the greatest convex minorant
//! (left of the current modal interval) and the least concave majorant
//! (right of it), shrinking `[low, high]` until the largest GCM/LCM gap inside
//! the interval no longer exceeds the best deviation found so far.
//!
//! Indices are 1-based internally (slot 0 unused) to keep the hull
//! bookkeeping readable; all deviations are in units of sample counts and
//! divided by `2n` at the end.

pub(crate) struct HartiganFit {
    pub dip: f64,
    /// 0-based index of the modal interval's lower end in the sorted sample.
    pub low: usize,
    /// 0-based index of the modal interval's upper end.
    pub high: usize,
}

/// `sorted` must be ascending, finite and of length ≥ 1.
pub(crate) fn fit(sorted: &[f64]) -> HartiganFit {
    let n = sorted.len();
    let mut x = Vec::with_capacity(n + 1);
    x.push(f64::NAN);
    x.extend_from_slice(sorted);

    let mut low = 1usize;
    let mut high = n;
    // Count-unit deviation; 1 is the smallest achievable (one observation).
    let mut dip = 1.0f64;

    if n < 2 || x[n] == x[1] {
        return finish(dip, n, low, high);
    }

    // mn[j]: predecessor of j on the convex minorant of points 1..=j.
    let mut mn = vec![0usize; n + 1];
    mn[1] = 1;
    for j in 2..=n {
        mn[j] = j - 1;
        loop {
            let mnj = mn[j];
            let mnmnj = mn[mnj];
            if mnj == 1
                || (x[j] - x[mnj]) * ((mnj - mnmnj) as f64)
                    < (x[mnj] - x[mnmnj]) * ((j - mnj) as f64)
            {
                break;
            }
            mn[j] = mnmnj;
        }
    }

    // mj[k]: successor of k on the concave majorant of points k..=n.
    let mut mj = vec![0usize; n + 1];
    mj[n] = n;
    for k in (1..n).rev() {
        mj[k] = k + 1;
        loop {
            let mjk = mj[k];
            let mjmjk = mj[mjk];
            if mjk == n
                || (x[k] - x[mjk]) * ((mjk as f64) - (mjmjk as f64))
                    < (x[mjk] - x[mjmjk]) * ((k as f64) - (mjk as f64))
            {
                break;
            }
            mj[k] = mjmjk;
        }
    }

    let mut gcm = vec![0usize; n + 2];
    let mut lcm = vec![0usize; n + 2];

    loop {
        // Change points of the GCM from high down to low.
        gcm[1] = high;
        let mut i = 1;
        while gcm[i] > low {
            gcm[i + 1] = mn[gcm[i]];
            i += 1;
        }
        let l_gcm = i;
        let mut ig = l_gcm;
        let mut ix = ig - 1;

        // Change points of the LCM from low up to high.
        lcm[1] = low;
        let mut i = 1;
        while lcm[i] < high {
            lcm[i + 1] = mj[lcm[i]];
            i += 1;
        }
        let l_lcm = i;
        let mut ih = l_lcm;
        let mut iv = 2;

        // Largest GCM/LCM distance inside [low, high].
        let mut d = 0.0f64;
        if l_gcm != 2 || l_lcm != 2 {
            loop {
                let gcmix = gcm[ix];
                let lcmiv = lcm[iv];
                if gcmix > lcmiv {
                    let gcmi1 = gcm[ix + 1];
                    let dx = (lcmiv as f64 - gcmi1 as f64 + 1.0)
                        - (x[lcmiv] - x[gcmi1]) * (gcmix as f64 - gcmi1 as f64)
                            / (x[gcmix] - x[gcmi1]);
                    iv += 1;
                    if dx >= d {
                        d = dx;
                        ig = ix + 1;
                        ih = iv - 1;
                    }
                } else {
                    let lcmiv1 = lcm[iv - 1];
                    let dx = (x[gcmix] - x[lcmiv1]) * (lcmiv as f64 - lcmiv1 as f64)
                        / (x[lcmiv] - x[lcmiv1])
                        - (gcmix as f64 - lcmiv1 as f64 - 1.0);
                    ix -= 1;
                    if dx >= d {
                        d = dx;
                        ig = ix + 1;
                        ih = iv;
                    }
                }
                if ix < 1 {
                    ix = 1;
                }
                if iv > l_lcm {
                    iv = l_lcm;
                }
                if gcm[ix] == lcm[iv] {
                    break;
                }
            }
        } else {
            d = 1.0;
        }

        if d < dip {
            break;
        }

        // Deviation of the GCM from the data left of the new modal interval.
        let mut dip_l = 0.0f64;
        for j in ig..l_gcm {
            let mut max_t = 1.0f64;
            let jb = gcm[j + 1];
            let je = gcm[j];
            if je - jb > 1 && x[je] != x[jb] {
                let slope = (je - jb) as f64 / (x[je] - x[jb]);
                for jj in jb..=je {
                    let t = (jj - jb + 1) as f64 - (x[jj] - x[jb]) * slope;
                    if max_t < t {
                        max_t = t;
                    }
                }
            }
            if dip_l < max_t {
                dip_l = max_t;
            }
        }

        // Deviation of the LCM from the data right of it.
        let mut dip_u = 0.0f64;
        for j in ih..l_lcm {
            let mut max_t = 1.0f64;
            let jb = lcm[j];
            let je = lcm[j + 1];
            if je - jb > 1 && x[je] != x[jb] {
                let slope = (je - jb) as f64 / (x[je] - x[jb]);
                for jj in jb..=je {
                    let t = (x[jj] - x[jb]) * slope - (jj as f64 - jb as f64 - 1.0);
                    if max_t < t {
                        max_t = t;
                    }
                }
            }
            if dip_u < max_t {
                dip_u = max_t;
            }
        }

        let dip_new = dip_l.max(dip_u);
        if dip < dip_new {
            dip = dip_new;
        }

        // Without this check the loop can cycle forever on some inputs.
        if low == gcm[ig] && high == lcm[ih] {
            break;
        }
        low = gcm[ig];
        high = lcm[ih];
    }

    finish(dip, n, low, high)
}

fn finish(dip: f64, n: usize, low: usize, high: usize) -> HartiganFit {
    HartiganFit {
        dip: dip / (2 * n) as f64,
        low: low - 1,
        high: high - 1,
    }
}
