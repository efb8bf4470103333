//! Membership verdicts for the nested spaces c0 ⊂ c ⊂ chat ⊂ S ⊂ l∞ from a
//! window profile, plus the computable bracket of all Banach limits.
//!
//! Verdicts are evidence statements, never proofs: finite data cannot decide
//! membership, so every verdict is Consistent-with or Inconclusive.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::windowstats::WindowProfile;

pub const DEFAULT_TOL: f64 = 1e-2;
pub const DEFAULT_TAIL_FRACTION: f64 = 0.25;

/// Window scale at or above which persistent full-range runs count as
/// non-membership evidence for almost convergence.
const MIN_PIN_SCALE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    ConsistentWithMember,
    ConsistentWithNonMember,
    Inconclusive,
}

impl Verdict {
    fn strength(self) -> u8 {
        match self {
            Verdict::ConsistentWithMember => 2,
            Verdict::Inconclusive => 1,
            Verdict::ConsistentWithNonMember => 0,
        }
    }

    /// The stronger membership claim of the two.
    fn max(self, other: Verdict) -> Verdict {
        if other.strength() > self.strength() {
            other
        } else {
            self
        }
    }

    pub fn is_member(self) -> bool {
        self == Verdict::ConsistentWithMember
    }
}

/// Verdicts for the six spaces, serialized under their usual names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub c0: Verdict,
    pub c: Verdict,
    pub chat0: Verdict,
    pub chat: Verdict,
    #[serde(rename = "S0")]
    pub s0: Verdict,
    #[serde(rename = "S")]
    pub s: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub banach_lo: f64,
    pub banach_hi: f64,
    /// Midpoint of the bracket, reported when the chat verdict is member.
    pub banach_limit: Option<f64>,
    pub cesaro_limit: Option<f64>,
    pub gap_trace: Vec<f64>,
    pub verdicts: Verdicts,
    pub tol: f64,
    pub tail_fraction: f64,
    #[serde(rename = "N")]
    pub len: usize,
    pub notes: Vec<String>,
}

/// Bracket of all Banach limits: `lo = max q_hat`, `hi = min p_hat` over the
/// last `ceil(tail_fraction * |schedule|)` scheduled lengths.
///
/// On a power-of-two schedule the divisibility chain forces `lo <= hi`
/// exactly; a floating inversion below 1e-12 is clamped to the midpoint.
pub fn banach_interval(profile: &WindowProfile, tail_fraction: f64) -> Result<(f64, f64)> {
    let (lo, hi, _) = banach_interval_diag(profile, tail_fraction)?;
    Ok((lo, hi))
}

fn banach_interval_diag(
    profile: &WindowProfile,
    tail_fraction: f64,
) -> Result<(f64, f64, Option<String>)> {
    if !(tail_fraction > 0.0 && tail_fraction <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "tail fraction {tail_fraction} outside (0, 1]"
        )));
    }
    let k = profile.schedule.len();
    if k == 0 {
        return Err(Error::InvalidArgument("profile schedule is empty".into()));
    }
    let take = ((tail_fraction * k as f64).ceil() as usize).clamp(1, k);
    let start = k - take;
    let lo = profile.q_hat[start..]
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    let hi = profile.p_hat[start..]
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    if lo > hi {
        let mid = 0.5 * (lo + hi);
        let note = format!(
            "banach bracket inverted by {:.3e}{}; clamped to midpoint",
            lo - hi,
            if lo - hi < 1e-12 { " (float noise)" } else { "" }
        );
        return Ok((mid, mid, Some(note)));
    }
    Ok((lo, hi, None))
}

/// Endpoint slope of `ys` over the tail quarter of the schedule, per octave
/// of window length.
fn drifting(schedule: &[usize], ys: &[f64], tol: f64) -> bool {
    let k = schedule.len();
    if k < 2 {
        return false;
    }
    let start = k - (k / 4).max(2).min(k);
    let dx = (schedule[k - 1] as f64).log2() - (schedule[start] as f64).log2();
    if dx <= 0.0 {
        return false;
    }
    let slope = (ys[k - 1] - ys[start]) / dx;
    slope.abs() > tol
}

pub fn classify(profile: &WindowProfile, tol: f64) -> Result<ClassificationReport> {
    classify_with(profile, tol, DEFAULT_TAIL_FRACTION)
}

pub fn classify_with(
    profile: &WindowProfile,
    tol: f64,
    tail_fraction: f64,
) -> Result<ClassificationReport> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    let mut notes = Vec::new();
    let (lo, hi, diag) = banach_interval_diag(profile, tail_fraction)?;
    if let Some(d) = diag {
        notes.push(d);
    }
    let gap_trace = profile.gap_trace();
    let tail = &profile.tail;

    if profile.len < 16 {
        notes.push("truncation below 16 terms: all verdicts inconclusive".into());
        let v = Verdicts {
            c0: Verdict::Inconclusive,
            c: Verdict::Inconclusive,
            chat0: Verdict::Inconclusive,
            chat: Verdict::Inconclusive,
            s0: Verdict::Inconclusive,
            s: Verdict::Inconclusive,
        };
        return Ok(ClassificationReport {
            banach_lo: lo,
            banach_hi: hi,
            banach_limit: None,
            cesaro_limit: None,
            gap_trace,
            verdicts: v,
            tol,
            tail_fraction,
            len: profile.len,
            notes,
        });
    }

    // c: raw value oscillation over the late half.
    let value_limit = 0.5 * (tail.half_max + tail.half_min);
    let c = if tail.half_osc() <= tol {
        Verdict::ConsistentWithMember
    } else if tail.quarter_osc() <= 0.5 * tail.half_osc() {
        Verdict::Inconclusive // still shrinking
    } else {
        Verdict::ConsistentWithNonMember
    };

    // chat: persistent full-range runs beat the tail bracket.
    let pin_fires = tail.half_osc() > tol
        && tail.pinned_run_late >= MIN_PIN_SCALE
        && tail.pinned_run_late > tail.pinned_run_first;
    let chat = if pin_fires {
        notes.push(format!(
            "full-range oscillation persists at window scale {} in the late half (grew from {}); gap taken as the late oscillation {:.6}",
            tail.pinned_run_late,
            tail.pinned_run_first,
            tail.half_osc()
        ));
        Verdict::ConsistentWithNonMember
    } else if hi - lo <= tol {
        Verdict::ConsistentWithMember
    } else if drifting(&profile.schedule, &gap_trace, tol) {
        Verdict::Inconclusive
    } else {
        Verdict::ConsistentWithNonMember
    };
    let banach_mid = 0.5 * (lo + hi);

    // S: Cesaro trace oscillation over the tail quarter of the samples.
    let k = profile.cesaro.len();
    let ces_start = k - (k / 4).max(1);
    let ces_tail = &profile.cesaro[ces_start..];
    let (ces_lo, ces_hi) = ces_tail.iter().fold(
        (f64::INFINITY, f64::NEG_INFINITY),
        |(lo, hi), &v| (lo.min(v), hi.max(v)),
    );
    let ces_mid = 0.5 * (ces_lo + ces_hi);
    let ces_xs: Vec<usize> = profile.cesaro_at.clone();
    let s = if ces_hi - ces_lo <= tol {
        Verdict::ConsistentWithMember
    } else if drifting(&ces_xs, &profile.cesaro, tol) {
        Verdict::Inconclusive
    } else {
        Verdict::ConsistentWithNonMember
    };

    // zero variants: membership plus a limit estimate within tol of zero
    let zero_variant = |outer: Verdict, limit: f64| -> Verdict {
        match outer {
            Verdict::ConsistentWithMember => {
                if limit.abs() <= tol {
                    Verdict::ConsistentWithMember
                } else {
                    Verdict::ConsistentWithNonMember
                }
            }
            other => other,
        }
    };
    let c0 = zero_variant(c, value_limit);
    let chat0 = zero_variant(chat, banach_mid);
    let s0 = zero_variant(s, ces_mid);

    // nesting: a report never claims member-of-smaller with
    // non-member-of-larger; propagate the stronger claim outward.
    let c = c.max(c0);
    let chat0 = chat0.max(c0);
    let chat = chat.max(c).max(chat0);
    let s0 = s0.max(chat0);
    let s = s.max(chat).max(s0);

    Ok(ClassificationReport {
        banach_lo: lo,
        banach_hi: hi,
        banach_limit: chat.is_member().then_some(banach_mid),
        cesaro_limit: s.is_member().then_some(ces_mid),
        gap_trace,
        verdicts: Verdicts { c0, c, chat0, chat, s0, s },
        tol,
        tail_fraction,
        len: profile.len,
        notes,
    })
}
