//! Cesaro means and sliding-window average extremes.
//!
//! `p_hat[n] = max_j (x_j + ... + x_{j+n-1})/n` and `q_hat[n]` the matching
//! min, over every window that fits in the truncation.  Window sums come
//! from compensated prefix sums, so each scheduled length costs one O(N)
//! pass.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqgen::Truncation;

/// Compensated (Neumaier) prefix sums: `P_0 = 0`, `P_i = x_1 + ... + x_i`.
///
/// The running compensation keeps `|P_i - exact| <= 2 eps sum|x_k|`.
pub fn prefix_sums(values: &[f64]) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(values.len() + 1);
    out.push(0.0);
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for (i, &x) in values.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFinite { index: i + 1, value: x });
        }
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
        out.push(sum + comp);
    }
    Ok(out)
}

/// Extremes of the length-`n` window *sums* over a prefix-sum array.
pub fn window_sum_extremes(prefix: &[f64], n: usize) -> Result<(f64, f64)> {
    let len = prefix.len() - 1;
    if n == 0 || n > len {
        return Err(Error::InvalidArgument(format!(
            "window length {n} outside 1..={len}"
        )));
    }
    let mut max_s = f64::NEG_INFINITY;
    let mut min_s = f64::INFINITY;
    for j in 0..=(len - n) {
        let s = prefix[j + n] - prefix[j];
        if s > max_s {
            max_s = s;
        }
        if s < min_s {
            min_s = s;
        }
    }
    Ok((max_s, min_s))
}

/// `(p_hat_n, q_hat_n)`: exact max/min of the length-`n` window averages.
pub fn window_extremes(t: &Truncation, n: usize) -> Result<(f64, f64)> {
    let prefix = prefix_sums(t.values())?;
    let (max_s, min_s) = window_sum_extremes(&prefix, n)?;
    Ok((max_s / n as f64, min_s / n as f64))
}

/// Raw-value statistics of the late part of a truncation, used by the
/// classifier: extremes over the last half and last quarter, plus the
/// longest runs pinned at the late extremes in each half.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailStats {
    pub half_min: f64,
    pub half_max: f64,
    pub quarter_min: f64,
    pub quarter_max: f64,
    /// Longest run (in the late half) of values pinned at *both* late
    /// extremes: min(longest max-pinned run, longest min-pinned run).
    pub pinned_run_late: usize,
    /// Same statistic measured over the first half, against the late extremes.
    pub pinned_run_first: usize,
}

impl TailStats {
    pub fn measure(values: &[f64]) -> Self {
        let n = values.len();
        let half = &values[n / 2..];
        let quarter = &values[n - n / 4..];
        let (half_min, half_max) = min_max(half);
        let (quarter_min, quarter_max) = if quarter.is_empty() {
            (half_min, half_max)
        } else {
            min_max(quarter)
        };
        let thr = 1e-9 * half_max.abs().max(half_min.abs()).max(1e-300);
        let co = |part: &[f64]| -> usize {
            let top = longest_run(part, |v| v >= half_max - thr);
            let bot = longest_run(part, |v| v <= half_min + thr);
            top.min(bot)
        };
        TailStats {
            half_min,
            half_max,
            quarter_min,
            quarter_max,
            pinned_run_late: co(half),
            pinned_run_first: co(&values[..n / 2]),
        }
    }

    pub fn half_osc(&self) -> f64 {
        self.half_max - self.half_min
    }

    pub fn quarter_osc(&self) -> f64 {
        self.quarter_max - self.quarter_min
    }
}

fn min_max(values: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in values {
        if v < lo {
            lo = v;
        }
        if v > hi {
            hi = v;
        }
    }
    (lo, hi)
}

fn longest_run(values: &[f64], pred: impl Fn(f64) -> bool) -> usize {
    let mut best = 0usize;
    let mut cur = 0usize;
    for &v in values {
        if pred(v) {
            cur += 1;
            if cur > best {
                best = cur;
            }
        } else {
            cur = 0;
        }
    }
    best
}

/// Per-window-length sup/inf averages plus a Cesaro-mean trace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowProfile {
    pub schedule: Vec<usize>,
    pub p_hat: Vec<f64>,
    pub q_hat: Vec<f64>,
    /// Sample indices of the Cesaro trace (ascending).
    pub cesaro_at: Vec<usize>,
    pub cesaro: Vec<f64>,
    #[serde(rename = "N")]
    pub len: usize,
    pub tail: TailStats,
}

impl WindowProfile {
    pub fn gap_trace(&self) -> Vec<f64> {
        self.p_hat
            .iter()
            .zip(&self.q_hat)
            .map(|(p, q)| p - q)
            .collect()
    }

    /// CSV with the documented columns `n,p_hat,q_hat`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,p_hat,q_hat\n");
        for i in 0..self.schedule.len() {
            s.push_str(&format!("{},{},{}\n", self.schedule[i], self.p_hat[i], self.q_hat[i]));
        }
        s
    }

    pub fn cesaro_csv(&self) -> String {
        let mut s = String::from("i,s_i\n");
        for (i, v) in self.cesaro_at.iter().zip(&self.cesaro) {
            s.push_str(&format!("{i},{v}\n"));
        }
        s
    }
}

/// Powers of two up to `len/4` (always at least `[1]`).
pub fn default_schedule(len: usize) -> Vec<usize> {
    let mut out = vec![1usize];
    let mut n = 2usize;
    while n <= len / 4 {
        out.push(n);
        n *= 2;
    }
    out
}

/// Powers of two, the base spec's block boundaries, and `N` itself.
pub fn default_cesaro_points(t: &Truncation) -> Vec<usize> {
    let n = t.len();
    let mut pts: Vec<usize> = Vec::new();
    let mut p = 1usize;
    while p <= n {
        pts.push(p);
        match p.checked_mul(2) {
            Some(next) => p = next,
            None => break,
        }
    }
    if let Some(spec) = t.base_spec() {
        for m in spec.block_boundaries_upto(n as u64) {
            pts.push(m as usize);
        }
    }
    pts.push(n);
    pts.sort_unstable();
    pts.dedup();
    pts
}

fn validate_schedule(schedule: &[usize], len: usize) -> Result<()> {
    if schedule.is_empty() {
        return Err(Error::InvalidArgument("schedule is empty".into()));
    }
    for w in schedule.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::InvalidArgument(
                "schedule must be strictly increasing".into(),
            ));
        }
    }
    if schedule[0] == 0 || *schedule.last().unwrap() > len {
        return Err(Error::InvalidArgument(format!(
            "schedule entries must lie in 1..={len}"
        )));
    }
    Ok(())
}

/// Window extremes at each scheduled length, plus the Cesaro trace at the
/// default sample points.  Scheduled lengths are scanned in parallel over
/// the shared prefix-sum array and merged in schedule order.
pub fn lorentz_profile(t: &Truncation, schedule: &[usize]) -> Result<WindowProfile> {
    lorentz_profile_with(t, schedule, &default_cesaro_points(t))
}

pub fn lorentz_profile_with(
    t: &Truncation,
    schedule: &[usize],
    cesaro_points: &[usize],
) -> Result<WindowProfile> {
    validate_schedule(schedule, t.len())?;
    let prefix = prefix_sums(t.values())?;
    let extremes: Vec<(f64, f64)> = schedule
        .par_iter()
        .map(|&n| {
            let (max_s, min_s) = window_sum_extremes(&prefix, n)
                .expect("schedule validated against truncation length");
            (max_s / n as f64, min_s / n as f64)
        })
        .collect();
    let mut cesaro_at = Vec::with_capacity(cesaro_points.len());
    let mut cesaro = Vec::with_capacity(cesaro_points.len());
    for &i in cesaro_points {
        if i == 0 || i > t.len() {
            return Err(Error::InvalidArgument(format!(
                "cesaro sample point {i} outside 1..={}",
                t.len()
            )));
        }
        cesaro_at.push(i);
        cesaro.push(prefix[i] / i as f64);
    }
    Ok(WindowProfile {
        schedule: schedule.to_vec(),
        p_hat: extremes.iter().map(|e| e.0).collect(),
        q_hat: extremes.iter().map(|e| e.1).collect(),
        cesaro_at,
        cesaro,
        len: t.len(),
        tail: TailStats::measure(t.values()),
    })
}

/// Cesaro means `s_i` at the given sample points, streamed without holding
/// a prefix array.
pub fn cesaro_profile(t: &Truncation, points: &[usize]) -> Result<Vec<f64>> {
    let mut sorted: Vec<usize> = points.to_vec();
    sorted.sort_unstable();
    if sorted.first() == Some(&0) || sorted.last().map_or(false, |&p| p > t.len()) {
        return Err(Error::InvalidArgument(format!(
            "cesaro sample points must lie in 1..={}",
            t.len()
        )));
    }
    let mut by_point = std::collections::HashMap::new();
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut next = sorted.iter().peekable();
    for (i, &x) in t.values().iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFinite { index: i + 1, value: x });
        }
        let tt = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - tt) + x;
        } else {
            comp += (x - tt) + sum;
        }
        sum = tt;
        while next.peek() == Some(&&(i + 1)) {
            by_point.insert(i + 1, (sum + comp) / (i + 1) as f64);
            next.next();
        }
    }
    Ok(points.iter().map(|p| by_point[p]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqgen::SequenceSpec;

    fn custom(values: Vec<f64>) -> Truncation {
        SequenceSpec::Custom { values: values.clone() }
            .generate(values.len())
            .unwrap()
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(
            prefix_sums(&[1.0, 2.0, 3.0]).unwrap(),
            vec![0.0, 1.0, 3.0, 6.0]
        );
        let alt = SequenceSpec::AltSign.generate(4).unwrap();
        assert_eq!(
            prefix_sums(alt.values()).unwrap(),
            vec![0.0, -1.0, 0.0, -1.0, 0.0]
        );
        let c = SequenceSpec::Constant { value: 2.5 }.generate(5).unwrap();
        let p = prefix_sums(c.values()).unwrap();
        for (i, v) in p.iter().enumerate() {
            assert_eq!(*v, 2.5 * i as f64);
        }
    }

    #[test]
    fn prefix_rejects_non_finite() {
        let err = prefix_sums(&[1.0, f64::NAN]).unwrap_err();
        assert!(matches!(err, Error::NonFinite { index: 2, .. }));
    }

    #[test]
    fn window_extremes_constant() {
        let c = SequenceSpec::Constant { value: 0.75 }.generate(64).unwrap();
        for n in [1usize, 7, 64] {
            let (p, q) = window_extremes(&c, n).unwrap();
            assert_eq!((p, q), (0.75, 0.75));
        }
    }

    #[test]
    fn window_extremes_altsign_brute() {
        let alt = SequenceSpec::AltSign.generate(100).unwrap();
        let (p, q) = window_extremes(&alt, 2).unwrap();
        assert_eq!((p, q), (0.0, 0.0));
        // brute force cross-check on a few lengths
        for n in [1usize, 2, 3, 5, 50] {
            let (p, q) = window_extremes(&alt, n).unwrap();
            let v = alt.values();
            let mut bp = f64::NEG_INFINITY;
            let mut bq = f64::INFINITY;
            for j in 0..=(v.len() - n) {
                let avg = v[j..j + n].iter().sum::<f64>() / n as f64;
                bp = bp.max(avg);
                bq = bq.min(avg);
            }
            assert!((p - bp).abs() < 1e-12 && (q - bq).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn window_extremes_zero_one_blocks() {
        // a one-run and a zero-run of length >= 5 both exist in the prefix
        let t = SequenceSpec::ZeroOneBlocks.generate(10_000).unwrap();
        let (p, q) = window_extremes(&t, 5).unwrap();
        assert_eq!((p, q), (1.0, 0.0));
    }

    #[test]
    fn window_length_out_of_range() {
        let t = custom(vec![1.0, 2.0]);
        assert!(window_extremes(&t, 3).is_err());
        assert!(window_extremes(&t, 0).is_err());
    }

    #[test]
    fn altsign_profile_shape() {
        let alt = SequenceSpec::AltSign.generate(1000).unwrap();
        let schedule: Vec<usize> = (1..=9).collect();
        let prof = lorentz_profile(&alt, &schedule).unwrap();
        for (i, &n) in schedule.iter().enumerate() {
            if n % 2 == 1 {
                assert!((prof.p_hat[i] - 1.0 / n as f64).abs() < 1e-15, "p at {n}");
                assert!((prof.q_hat[i] + 1.0 / n as f64).abs() < 1e-15, "q at {n}");
            } else {
                assert_eq!(prof.p_hat[i], 0.0, "p at {n}");
                assert_eq!(prof.q_hat[i], 0.0, "q at {n}");
            }
        }
    }

    #[test]
    fn cesaro_altsign() {
        let alt = SequenceSpec::AltSign.generate(100).unwrap();
        let pts = vec![1usize, 2, 3, 10, 99, 100];
        let s = cesaro_profile(&alt, &pts).unwrap();
        for (p, v) in pts.iter().zip(&s) {
            if p % 2 == 0 {
                assert_eq!(*v, 0.0);
            } else {
                assert!((v + 1.0 / *p as f64).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn cesaro_zero_one_blocks_lower_envelope() {
        // s at m_j stays above (2^j - 2) / (2^j - 2 + (j^2+j)/2)
        let spec = SequenceSpec::ZeroOneBlocks;
        let n = spec.block_boundary(12).unwrap() as usize;
        let t = spec.generate(n).unwrap();
        let pts: Vec<usize> = (1..=12)
            .map(|j| spec.block_boundary(j).unwrap() as usize)
            .collect();
        let s = cesaro_profile(&t, &pts).unwrap();
        for (j, v) in (1..=12u32).zip(&s) {
            let twoj = (1u64 << j) as f64;
            let env = (twoj - 2.0) / (twoj - 2.0 + (j * j + j) as f64 / 2.0);
            assert!(*v >= env - 1e-15, "j={j}: {v} < {env}");
        }
    }

    #[test]
    fn profile_invariants_hold() {
        let t = SequenceSpec::ZeroOneBlocks.generate(4096).unwrap();
        let prof = lorentz_profile(&t, &default_schedule(4096)).unwrap();
        let (vmin, vmax) = min_max(t.values());
        for i in 0..prof.schedule.len() {
            assert!(prof.q_hat[i] <= prof.p_hat[i]);
            assert!(prof.q_hat[i] >= vmin - 1e-12 && prof.p_hat[i] <= vmax + 1e-12);
        }
    }

    #[test]
    fn multiple_window_bracket() {
        // q_hat_n <= (x_1+..+x_{kn})/(kn) <= p_hat_n for every multiple kn <= N
        let t = SequenceSpec::ZeroOneBlocks.generate(2000).unwrap();
        let prefix = prefix_sums(t.values()).unwrap();
        for n in [1usize, 3, 8, 17, 101] {
            let (max_s, min_s) = window_sum_extremes(&prefix, n).unwrap();
            let mut k = 1usize;
            while k * n <= t.len() {
                let s = prefix[k * n];
                // sum form: the kn-prefix is k disjoint n-windows
                assert!(s <= k as f64 * max_s + 1e-9);
                assert!(s >= k as f64 * min_s - 1e-9);
                k += 1;
            }
        }
    }

    #[test]
    fn tail_stats_pinned_runs() {
        // zero-one blocks at m_20: late co-pinned run 20, first-half 19
        let spec = SequenceSpec::ZeroOneBlocks;
        let n = spec.block_boundary(20).unwrap() as usize;
        let t = spec.generate(n).unwrap();
        let tail = TailStats::measure(t.values());
        assert_eq!(tail.half_min, 0.0);
        assert_eq!(tail.half_max, 1.0);
        assert_eq!(tail.pinned_run_late, 20);
        assert_eq!(tail.pinned_run_first, 19);
    }
}
