//! Witness balls realizing strong lower porosity of c in chat, chat in S,
//! and S in l∞.
//!
//! A certificate names a center offset pattern `w` (±1-valued), a radius
//! `r` and a ball fraction `alpha`; the center is `y = x + (r/2) w` and
//! every `z` with `||z - y|| < alpha r/2` violates the smaller space's
//! defining oscillation by at least `r (1 - alpha)` minus measured slack.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, Verdict};
use crate::error::{Error, Result};
use crate::seqgen::SequenceSpec;
use crate::windowstats::{default_schedule, lorentz_profile, prefix_sums, window_sum_extremes};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PorosityPair {
    CInChat,
    ChatInS,
    SInLinf,
}

impl PorosityPair {
    pub fn kebab_name(self) -> &'static str {
        match self {
            PorosityPair::CInChat => "c-in-chat",
            PorosityPair::ChatInS => "chat-in-s",
            PorosityPair::SInLinf => "s-in-linf",
        }
    }

    /// The direction pattern that realizes the exclusion for this pair.
    fn pattern(self) -> SequenceSpec {
        match self {
            // alternating signs: y stays almost convergent while any ball
            // point keeps value-oscillation >= r(1-alpha)
            PorosityPair::CInChat => SequenceSpec::AltSign,
            // ±1 zero-one-blocks: y stays Cesaro-summable while any ball
            // point keeps window gap >= r(1-alpha)
            PorosityPair::ChatInS => SequenceSpec::Affine {
                inner: Box::new(SequenceSpec::ZeroOneBlocks),
                scale: 2.0,
                offset: -1.0,
            },
            // alternating giant sign blocks: Cesaro means of any ball point
            // keep oscillating by >= r(1-alpha)
            PorosityPair::SInLinf => SequenceSpec::SignBlocks,
        }
    }

    fn min_len(self) -> usize {
        match self {
            PorosityPair::CInChat => 16,
            // needs a +run and a -run of useful length: first two blocks
            PorosityPair::ChatInS => 64,
            // needs at least three complete j^j blocks
            PorosityPair::SInLinf => 27,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PorosityCertificate {
    pub pair: PorosityPair,
    pub base: SequenceSpec,
    pub r: f64,
    pub alpha: f64,
    pub pattern: SequenceSpec,
    pub oscillation_bound: f64,
    /// The zero-limit variant (c0 in chat0, ...) uses the identical
    /// construction; the flag is carried for reporting.
    pub zero_limit: bool,
}

/// Construct a certificate for the pair, refusing bases that do not look
/// like members of the smaller space.
pub fn porosity_witness(
    pair: PorosityPair,
    base: SequenceSpec,
    r: f64,
    alpha: f64,
    zero_limit: bool,
    check_len: usize,
) -> Result<PorosityCertificate> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidArgument("radius r must be positive".into()));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument("alpha must lie in (0, 1)".into()));
    }
    let bound = r * (1.0 - alpha);

    // heuristic membership check of the base in the smaller space
    let t = base.generate(check_len)?;
    let profile = lorentz_profile(&t, &default_schedule(check_len))?;
    let tol = (bound / 4.0).max(1e-9);
    let report = classify(&profile, tol)?;
    let smaller = match pair {
        PorosityPair::CInChat => report.verdicts.c,
        PorosityPair::ChatInS => report.verdicts.chat,
        PorosityPair::SInLinf => report.verdicts.s,
    };
    if smaller == Verdict::ConsistentWithNonMember {
        return Err(Error::Refused(format!(
            "base `{}` classifies as non-member of the pair's smaller space at tol {tol} \
             (banach bracket [{:.6}, {:.6}], late oscillation {:.6})",
            base.kebab_name(),
            report.banach_lo,
            report.banach_hi,
            profile.tail.half_osc(),
        )));
    }
    // a drifting base would eat the exclusion margin
    let osc = profile.tail.half_osc();
    if osc >= bound / 2.0 {
        return Err(Error::Refused(format!(
            "base tail oscillation {osc:.6} >= half the exclusion bound {bound:.6}"
        )));
    }

    Ok(PorosityCertificate {
        pair,
        base,
        r,
        alpha,
        pattern: pair.pattern(),
        oscillation_bound: bound,
        zero_limit,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertVerification {
    pub pair: PorosityPair,
    pub pass: bool,
    #[serde(rename = "N")]
    pub len: usize,
    pub samples: usize,
    pub seed: u64,
    /// `||y - x||_inf` re-measured on the truncation; must equal r/2 exactly.
    pub sup_norm_ok: bool,
    pub statistic: String,
    pub required: f64,
    /// Worst (smallest) statistic across samples.
    pub min_stat: f64,
    pub failures: usize,
    /// Window length used by the chat-in-S statistic.
    pub n_star: Option<usize>,
    pub notes: Vec<String>,
}

/// Draw seeded perturbations of the ball center and check the pair's
/// exclusion statistic on every sample.
pub fn verify_certificate(
    cert: &PorosityCertificate,
    len: usize,
    samples: usize,
    seed: u64,
) -> Result<CertVerification> {
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    if len < cert.pair.min_len() {
        return Err(Error::InvalidArgument(format!(
            "{} verification needs N >= {} to contain one full pattern period; got {len}",
            cert.pair.kebab_name(),
            cert.pair.min_len()
        )));
    }
    let x = cert.base.generate(len)?;
    let w = cert.pattern.generate(len)?;
    if let Some(i) = w.values().iter().position(|v| v.abs() != 1.0) {
        return Err(Error::InvalidArgument(format!(
            "pattern is not ±1-valued at index {} (value {})",
            i + 1,
            w.values()[i]
        )));
    }
    let half_r = cert.r / 2.0;
    let y: Vec<f64> = x
        .values()
        .iter()
        .zip(w.values())
        .map(|(xv, wv)| xv + half_r * wv)
        .collect();
    let sup_norm_ok = y
        .iter()
        .zip(x.values())
        .all(|(yv, xv)| (yv - xv).abs() == half_r);

    let mut notes = Vec::new();
    let bound = cert.oscillation_bound;
    let noise = cert.alpha * half_r;

    // pair-specific requirement and per-sample statistic
    let (required, n_star, stat_name): (f64, Option<usize>, &str) = match cert.pair {
        PorosityPair::CInChat => {
            // measured tail oscillation of the base eats into the bound
            let osc = osc_last_half(x.values());
            (bound - osc, None, "min over even n of z_n minus max over odd n of z_n")
        }
        PorosityPair::ChatInS => {
            let (plus, minus) = longest_sign_runs(w.values());
            if plus == 0 || minus == 0 {
                notes.push(format!(
                    "pattern lacks a {} run; window-gap exclusion cannot be exhibited",
                    if plus == 0 { "+1" } else { "-1" }
                ));
                (f64::INFINITY, None, "p_hat - q_hat at the largest run-supported scheduled n")
            } else {
                let support = plus.min(minus);
                let n = default_schedule(len)
                    .into_iter()
                    .filter(|n| *n <= support)
                    .next_back()
                    .unwrap_or(1);
                (bound, Some(n), "p_hat - q_hat at the largest run-supported scheduled n")
            }
        }
        PorosityPair::SInLinf => {
            let boundaries = cert.pattern.block_boundaries_upto(len as u64);
            if boundaries.len() < 2 {
                return Err(Error::InvalidArgument(format!(
                    "need at least two complete blocks inside N = {len}"
                )));
            }
            let top = boundaries.len();
            let max_x = x.values().iter().fold(0.0f64, |a, v| a.max(v.abs()));
            let slack = 2.0 * max_x * boundaries[top - 2] as f64 / boundaries[top - 1] as f64;
            (
                bound - slack,
                None,
                "oscillation of Cesaro means over block boundaries",
            )
        }
    };

    let boundaries: Vec<usize> = cert
        .pattern
        .block_boundaries_upto(len as u64)
        .into_iter()
        .map(|m| m as usize)
        .collect();

    let stats: Vec<f64> = (0..samples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(idx as u64 + 1);
            let z: Vec<f64> = y
                .iter()
                .map(|yv| yv + (rng.gen::<f64>() - 0.5) * 2.0 * noise)
                .collect();
            match cert.pair {
                PorosityPair::CInChat => {
                    let mut min_even = f64::INFINITY;
                    let mut max_odd = f64::NEG_INFINITY;
                    for (i, &v) in z.iter().enumerate() {
                        if (i + 1) % 2 == 0 {
                            min_even = min_even.min(v);
                        } else {
                            max_odd = max_odd.max(v);
                        }
                    }
                    min_even - max_odd
                }
                PorosityPair::ChatInS => match n_star {
                    Some(n) => {
                        let prefix = prefix_sums(&z).expect("finite samples");
                        let (max_s, min_s) =
                            window_sum_extremes(&prefix, n).expect("n <= len");
                        (max_s - min_s) / n as f64
                    }
                    None => f64::NEG_INFINITY,
                },
                PorosityPair::SInLinf => {
                    let mut sum = 0.0f64;
                    let mut comp = 0.0f64;
                    let mut lo = f64::INFINITY;
                    let mut hi = f64::NEG_INFINITY;
                    let mut next = boundaries.iter().peekable();
                    for (i, &v) in z.iter().enumerate() {
                        let t = sum + v;
                        if sum.abs() >= v.abs() {
                            comp += (sum - t) + v;
                        } else {
                            comp += (v - t) + sum;
                        }
                        sum = t;
                        if next.peek() == Some(&&(i + 1)) {
                            let s = (sum + comp) / (i + 1) as f64;
                            lo = lo.min(s);
                            hi = hi.max(s);
                            next.next();
                        }
                    }
                    hi - lo
                }
            }
        })
        .collect();

    let min_stat = stats.iter().cloned().fold(f64::INFINITY, f64::min);
    let failures = stats.iter().filter(|s| **s < required).count();
    let pass = sup_norm_ok && failures == 0;
    if !sup_norm_ok {
        notes.push("center offset does not realize ||y - x|| = r/2 exactly".into());
    }

    Ok(CertVerification {
        pair: cert.pair,
        pass,
        len,
        samples,
        seed,
        sup_norm_ok,
        statistic: stat_name.to_string(),
        required,
        min_stat,
        failures,
        n_star,
        notes,
    })
}

fn osc_last_half(values: &[f64]) -> f64 {
    let half = &values[values.len() / 2..];
    let (lo, hi) = half.iter().fold(
        (f64::INFINITY, f64::NEG_INFINITY),
        |(lo, hi), &v| (lo.min(v), hi.max(v)),
    );
    hi - lo
}

fn longest_sign_runs(values: &[f64]) -> (usize, usize) {
    let mut best_plus = 0usize;
    let mut best_minus = 0usize;
    let mut cur = 0usize;
    let mut sign = 0i8;
    for &v in values {
        let s = if v > 0.0 { 1i8 } else { -1i8 };
        if s == sign {
            cur += 1;
        } else {
            sign = s;
            cur = 1;
        }
        if s > 0 {
            best_plus = best_plus.max(cur);
        } else {
            best_minus = best_minus.max(cur);
        }
    }
    (best_plus, best_minus)
}
