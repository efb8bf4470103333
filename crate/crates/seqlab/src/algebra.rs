//! Exponential-like functions `f(x) = sum_i alpha_i e^{beta_i x}`, their
//! action on truncations, the root-count bound, and the numerical
//! strong-algebrability witness.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, ClassificationReport, Verdict};
use crate::error::{Error, Result};
use crate::seqgen::{Provenance, SequenceSpec, Truncation};
use crate::windowstats::{default_schedule, lorentz_profile};

/// `f(x) = sum alpha_i e^{beta_i x}` with nonzero alphas and distinct
/// nonzero betas; rank = number of terms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpLike {
    terms: Vec<(f64, f64)>, // (alpha, beta), sorted by |beta| ascending
}

impl ExpLike {
    pub fn new(mut terms: Vec<(f64, f64)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidArgument(
                "exponential-like function needs at least one term".into(),
            ));
        }
        for (i, &(alpha, beta)) in terms.iter().enumerate() {
            if !alpha.is_finite() || !beta.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "term {} has non-finite coefficients",
                    i + 1
                )));
            }
            if alpha == 0.0 {
                return Err(Error::InvalidArgument(format!("alpha_{} is zero", i + 1)));
            }
            if beta == 0.0 {
                return Err(Error::InvalidArgument(format!("beta_{} is zero", i + 1)));
            }
        }
        // evaluation order sorted by |beta| ascending, beta as tiebreak
        terms.sort_by(|a, b| {
            (a.1.abs(), a.1)
                .partial_cmp(&(b.1.abs(), b.1))
                .expect("finite betas")
        });
        for w in terms.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(Error::InvalidArgument(format!(
                    "duplicate beta {}",
                    w[0].1
                )));
            }
        }
        Ok(Self { terms })
    }

    pub fn rank_one(exponent: f64) -> Result<Self> {
        Self::new(vec![(1.0, exponent)])
    }

    pub fn rank(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let mut sum = 0.0;
        for (i, &(alpha, beta)) in self.terms.iter().enumerate() {
            let term = alpha * (beta * x).exp();
            if !term.is_finite() {
                return Err(Error::ExpOverflow { term: i + 1, alpha, beta, x });
            }
            sum += term;
        }
        Ok(sum)
    }
}

/// Elementwise image `f(x_1), ..., f(x_N)`, with `f` recorded in the
/// output's provenance.
pub fn explike_apply(f: &ExpLike, t: &Truncation) -> Result<Truncation> {
    let mut values = Vec::with_capacity(t.len());
    for &x in t.values() {
        values.push(f.eval(x)?);
    }
    let provenance = match t.provenance() {
        Provenance::Spec { spec } => Provenance::ExpImage {
            base: spec.clone(),
            terms: f.terms.clone(),
        },
        Provenance::ExpImage { base, .. } => Provenance::Opaque {
            label: format!("exp-like image of an exp-like image of {}", base.kebab_name()),
        },
        Provenance::Opaque { label } => Provenance::Opaque {
            label: format!("exp-like image of {label}"),
        },
    };
    Truncation::new(values, provenance)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PreimageCount {
    pub count: usize,
    pub rank: usize,
    /// Root brackets of width <= (hi - lo)/1e9 (degenerate for exact grid hits).
    pub brackets: Vec<(f64, f64)>,
    /// Would indicate a grid-resolution artifact, not a counterexample.
    pub exceeds_rank: bool,
    pub degenerate: bool,
}

/// Number of solutions of `f(x) = c` seen on `[lo, hi]`: strict sign
/// changes of `f - c` on a uniform grid, each refined by bisection.
pub fn preimage_count(
    f: &ExpLike,
    c: f64,
    lo: f64,
    hi: f64,
    grid: usize,
) -> Result<PreimageCount> {
    if !(lo < hi) {
        return Err(Error::InvalidArgument(format!("need lo < hi, got [{lo}, {hi}]")));
    }
    if grid < 2 {
        return Err(Error::InvalidArgument("grid needs at least 2 points".into()));
    }
    let g = |x: f64| -> Result<f64> { Ok(f.eval(x)? - c) };
    let step = (hi - lo) / (grid - 1) as f64;
    let xs: Vec<f64> = (0..grid)
        .map(|i| if i == grid - 1 { hi } else { lo + i as f64 * step })
        .collect();
    let mut gs = Vec::with_capacity(grid);
    for &x in &xs {
        gs.push(g(x)?);
    }
    let degenerate = gs.iter().all(|v| *v == 0.0);
    let mut brackets = Vec::new();
    if !degenerate {
        let target = (hi - lo) / 1e9;
        for i in 0..grid - 1 {
            if gs[i] == 0.0 {
                brackets.push((xs[i], xs[i]));
            } else if gs[i] * gs[i + 1] < 0.0 {
                brackets.push(bisect(&g, xs[i], xs[i + 1], gs[i], target)?);
            }
        }
        if gs[grid - 1] == 0.0 {
            brackets.push((hi, hi));
        }
    }
    let count = brackets.len();
    Ok(PreimageCount {
        count,
        rank: f.rank(),
        brackets,
        exceeds_rank: count > f.rank(),
        degenerate,
    })
}

fn bisect(
    g: &impl Fn(f64) -> Result<f64>,
    mut a: f64,
    mut b: f64,
    mut ga: f64,
    target: f64,
) -> Result<(f64, f64)> {
    for _ in 0..80 {
        if b - a <= target {
            break;
        }
        let mid = 0.5 * (a + b);
        let gm = g(mid)?;
        if gm == 0.0 {
            return Ok((mid, mid));
        }
        if ga * gm < 0.0 {
            b = mid;
        } else {
            a = mid;
            ga = gm;
        }
    }
    Ok((a, b))
}

/// What set a witness sequence is meant to land in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessTarget {
    /// chat \ c: almost convergent but not convergent.
    ChatMinusC,
    /// S \ chat: Cesaro summable but not almost convergent.
    SMinusChat,
    /// l∞ \ S: bounded but not Cesaro summable.
    LinfMinusS,
}

impl WitnessTarget {
    pub fn for_spec(spec: &SequenceSpec) -> WitnessTarget {
        match spec {
            SequenceSpec::GrowingRuns => WitnessTarget::SMinusChat,
            SequenceSpec::SelfPowerBlocks => WitnessTarget::LinfMinusS,
            SequenceSpec::Shifted { inner, .. } | SequenceSpec::Affine { inner, .. } => {
                WitnessTarget::for_spec(inner)
            }
            _ => WitnessTarget::ChatMinusC,
        }
    }

    fn satisfied_by(self, report: &ClassificationReport) -> bool {
        let v = &report.verdicts;
        match self {
            WitnessTarget::ChatMinusC => v.chat.is_member() && !v.c.is_member(),
            WitnessTarget::SMinusChat => v.s.is_member() && !v.chat.is_member(),
            WitnessTarget::LinfMinusS => !v.s.is_member(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessConfig {
    pub betas: Vec<f64>,
    pub degree: u32,
    pub len: usize,
    /// Independence gate on the smallest eigenvalue of the row-normalized
    /// Gram matrix.
    pub sigma_tol: f64,
    pub combos: usize,
    pub seed: u64,
    /// Membership checks run at tol = this fraction of each image's
    /// late-half oscillation (scale-free, matching classify's scaling
    /// equivariance).
    pub membership_rel_tol: f64,
}

impl WitnessConfig {
    pub fn new(betas: Vec<f64>, degree: u32, len: usize) -> Self {
        WitnessConfig {
            betas,
            degree,
            len,
            sigma_tol: 1e-8,
            combos: 20,
            seed: 1,
            membership_rel_tol: 0.05,
        }
    }

    /// Square roots of the first `count` primes, the default generator
    /// exponents (pairwise-distinct subset sums at desk scale).
    pub fn sqrt_prime_betas(count: usize) -> Result<Vec<f64>> {
        const PRIMES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
        if count == 0 || count > PRIMES.len() {
            return Err(Error::InvalidArgument(format!(
                "supported generator counts: 1..={}",
                PRIMES.len()
            )));
        }
        Ok(PRIMES[..count].iter().map(|p| (*p as f64).sqrt()).collect())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonomialInfo {
    /// Exponent vector over the generators.
    pub powers: Vec<u32>,
    pub exponent_sum: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MembershipCheck {
    pub label: String,
    pub coefficients: Vec<f64>,
    pub tol_used: f64,
    pub chat: Verdict,
    pub c: Verdict,
    #[serde(rename = "S")]
    pub s: Verdict,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessReport {
    pub zspec: SequenceSpec,
    pub target: WitnessTarget,
    pub betas: Vec<f64>,
    pub degree: u32,
    #[serde(rename = "N")]
    pub len: usize,
    pub seed: u64,
    pub monomials: Vec<MonomialInfo>,
    pub sigma_min: f64,
    pub sigma_tol: f64,
    pub sigma_ok: bool,
    pub monomial_checks: Vec<MembershipCheck>,
    pub combo_checks: Vec<MembershipCheck>,
    pub memberships_ok: bool,
    pub pass: bool,
}

impl WitnessReport {
    /// CSV of monomial exponent sums.
    pub fn monomials_csv(&self) -> String {
        let mut s = String::from("powers,exponent_sum\n");
        for m in &self.monomials {
            let p: Vec<String> = m.powers.iter().map(|k| k.to_string()).collect();
            s.push_str(&format!("{},{}\n", p.join(" "), m.exponent_sum));
        }
        s
    }
}

fn enumerate_monomials(gens: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; gens];
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, idx: usize, remaining: u32) {
        if idx == cur.len() {
            if cur.iter().sum::<u32>() >= 1 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=remaining {
            cur[idx] = k;
            rec(out, cur, idx + 1, remaining - k);
        }
        cur[idx] = 0;
    }
    rec(&mut out, &mut cur, 0, degree);
    out.sort();
    out
}

/// Numerical strong-algebrability witness: checks that the monomials in the
/// generators `e^{beta_i z}` are numerically independent on the truncation
/// and that every monomial and seeded random combination lands in the
/// target set.
pub fn algebrability_witness(
    zspec: &SequenceSpec,
    cfg: &WitnessConfig,
) -> Result<WitnessReport> {
    let g = cfg.betas.len();
    if g == 0 {
        return Err(Error::InvalidArgument("need at least one generator".into()));
    }
    for (i, b) in cfg.betas.iter().enumerate() {
        if !b.is_finite() || *b == 0.0 {
            return Err(Error::InvalidArgument(format!("beta_{} must be finite nonzero", i + 1)));
        }
    }
    if cfg.degree == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }

    let powers = enumerate_monomials(g, cfg.degree);
    let sums: Vec<f64> = powers
        .iter()
        .map(|k| k.iter().zip(&cfg.betas).map(|(ki, b)| *ki as f64 * b).sum())
        .collect();
    // coincident or vanishing exponent sums invalidate the construction
    for i in 0..sums.len() {
        if sums[i].abs() <= 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "monomial {:?} has exponent sum {} ~ 0",
                powers[i], sums[i]
            )));
        }
        for k in (i + 1)..sums.len() {
            if (sums[i] - sums[k]).abs() <= 1e-12 {
                return Err(Error::InvalidArgument(format!(
                    "exponent sums clash: {:?} and {:?} both give {}",
                    powers[i], powers[k], sums[i]
                )));
            }
        }
    }

    let z = zspec.generate(cfg.len)?;

    // value classes: z takes few distinct values, so inner products reduce
    // to class-weighted sums; BTreeMap keys keep the order deterministic.
    let mut classes: BTreeMap<u64, u64> = BTreeMap::new();
    for &v in z.values() {
        *classes.entry(v.to_bits()).or_insert(0) += 1;
    }
    let class_vals: Vec<f64> = classes.keys().map(|b| f64::from_bits(*b)).collect();
    let class_cnts: Vec<f64> = classes.values().map(|c| *c as f64).collect();
    let weighted_exp_sum = |t: f64| -> f64 {
        class_vals
            .iter()
            .zip(&class_cnts)
            .map(|(v, c)| c * (t * v).exp())
            .sum()
    };

    let m = sums.len();
    let mut gram = DMatrix::<f64>::zeros(m, m);
    let norms: Vec<f64> = sums.iter().map(|e| weighted_exp_sum(2.0 * e).sqrt()).collect();
    for i in 0..m {
        for k in i..m {
            let ip = weighted_exp_sum(sums[i] + sums[k]) / (norms[i] * norms[k]);
            gram[(i, k)] = ip;
            gram[(k, i)] = ip;
        }
    }
    let sigma_min = gram
        .symmetric_eigenvalues()
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let sigma_ok = sigma_min > cfg.sigma_tol;

    let target = WitnessTarget::for_spec(zspec);

    // per-position class index so each membership image is a table lookup
    let class_index: BTreeMap<u64, usize> = classes
        .keys()
        .enumerate()
        .map(|(i, b)| (*b, i))
        .collect();
    let positions: Vec<u32> = z
        .values()
        .iter()
        .map(|v| class_index[&v.to_bits()] as u32)
        .collect();
    let schedule = default_schedule(cfg.len);

    let check_function = |label: String, coeffs: Vec<f64>, f: &ExpLike| -> Result<MembershipCheck> {
        let mut lut = Vec::with_capacity(class_vals.len());
        for &v in &class_vals {
            lut.push(f.eval(v)?);
        }
        let values: Vec<f64> = positions.iter().map(|&i| lut[i as usize]).collect();
        let image = Truncation::new(
            values,
            Provenance::Opaque { label: label.clone() },
        )?;
        let profile = lorentz_profile(&image, &schedule)?;
        let tol = (cfg.membership_rel_tol * profile.tail.half_osc()).max(1e-9);
        let report = classify(&profile, tol)?;
        let ok = target.satisfied_by(&report);
        Ok(MembershipCheck {
            label,
            coefficients: coeffs,
            tol_used: tol,
            chat: report.verdicts.chat,
            c: report.verdicts.c,
            s: report.verdicts.s,
            ok,
        })
    };

    let monomial_checks: Vec<MembershipCheck> = powers
        .par_iter()
        .zip(&sums)
        .map(|(k, &e)| {
            let f = ExpLike::rank_one(e)?;
            check_function(format!("monomial {:?}", k), vec![1.0], &f)
        })
        .collect::<Result<Vec<_>>>()?;

    let combo_checks: Vec<MembershipCheck> = (0..cfg.combos)
        .into_par_iter()
        .map(|idx| {
            // seeded substream per combination index
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(idx as u64 + 1);
            let coeffs = loop {
                let c: Vec<f64> = (0..m).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
                if c.iter().any(|v| v.abs() >= 1e-3) {
                    break c;
                }
            };
            let terms: Vec<(f64, f64)> = coeffs
                .iter()
                .zip(&sums)
                .filter(|(c, _)| c.abs() > 1e-12)
                .map(|(c, e)| (*c, *e))
                .collect();
            let f = ExpLike::new(terms)?;
            check_function(format!("combo {idx}"), coeffs, &f)
        })
        .collect::<Result<Vec<_>>>()?;

    let memberships_ok =
        monomial_checks.iter().all(|c| c.ok) && combo_checks.iter().all(|c| c.ok);
    let monomials = powers
        .into_iter()
        .zip(sums)
        .map(|(powers, exponent_sum)| MonomialInfo { powers, exponent_sum })
        .collect();

    Ok(WitnessReport {
        zspec: zspec.clone(),
        target,
        betas: cfg.betas.clone(),
        degree: cfg.degree,
        len: cfg.len,
        seed: cfg.seed,
        monomials,
        sigma_min,
        sigma_tol: cfg.sigma_tol,
        sigma_ok,
        monomial_checks,
        combo_checks,
        memberships_ok,
        pass: sigma_ok && memberships_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        let f = ExpLike::new(vec![(1.0, 1.0)]).unwrap();
        assert_eq!(f.eval(0.0).unwrap(), 1.0);

        let f = ExpLike::new(vec![(2.0, 1.0), (-1.0, 2.0)]).unwrap();
        assert!((f.eval(0.0).unwrap() - 1.0).abs() < 1e-15);

        // 2 + 1/2 at x = ln 2
        let f = ExpLike::new(vec![(1.0, 1.0), (1.0, -1.0)]).unwrap();
        assert!((f.eval(2f64.ln()).unwrap() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn eval_overflow_names_term() {
        let f = ExpLike::new(vec![(1.0, 1.0), (1.0, 400.0)]).unwrap();
        match f.eval(10.0).unwrap_err() {
            Error::ExpOverflow { term, beta, .. } => {
                assert_eq!(term, 2);
                assert_eq!(beta, 400.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_terms_rejected() {
        assert!(ExpLike::new(vec![]).is_err());
        assert!(ExpLike::new(vec![(0.0, 1.0)]).is_err());
        assert!(ExpLike::new(vec![(1.0, 0.0)]).is_err());
        assert!(ExpLike::new(vec![(1.0, 2.0), (3.0, 2.0)]).is_err());
    }

    #[test]
    fn apply_examples() {
        let f = ExpLike::new(vec![(1.0, 1.0)]).unwrap();
        let z = SequenceSpec::Custom { values: vec![1.0, 0.0, 1.0] }
            .generate(3)
            .unwrap();
        let img = explike_apply(&f, &z).unwrap();
        let e = std::f64::consts::E;
        assert_eq!(img.values(), &[e, 1.0, e]);

        let c0 = SequenceSpec::Constant { value: 0.0 }.generate(5).unwrap();
        let img = explike_apply(&f, &c0).unwrap();
        assert!(img.values().iter().all(|v| *v == 1.0));

        let one = SequenceSpec::Constant { value: 0.5 }.generate(1).unwrap();
        let img = explike_apply(&f, &one).unwrap();
        assert_eq!(img.len(), 1);
        assert!((img.values()[0] - 0.5f64.exp()).abs() < 1e-15);
    }

    #[test]
    fn preimage_examples() {
        let f = ExpLike::new(vec![(1.0, 1.0)]).unwrap();
        let r = preimage_count(&f, 1.0, -1.0, 3.0, 1024).unwrap();
        assert_eq!(r.count, 1);
        let (a, b) = r.brackets[0];
        assert!(a <= 0.0 && 0.0 <= b + 1e-9, "bracket ({a}, {b})");

        // e^x + e^{-x} = 3 has the two roots +-arccosh(3/2)
        let f = ExpLike::new(vec![(1.0, 1.0), (1.0, -1.0)]).unwrap();
        let r = preimage_count(&f, 3.0, -2.0, 2.0, 1024).unwrap();
        assert_eq!(r.count, 2);
        let root = (1.5f64 + (1.5f64 * 1.5 - 1.0).sqrt()).ln();
        assert!((0.5 * (r.brackets[0].0 + r.brackets[0].1) + root).abs() < 1e-6);
        assert!((0.5 * (r.brackets[1].0 + r.brackets[1].1) - root).abs() < 1e-6);

        let f = ExpLike::new(vec![(1.0, 1.0)]).unwrap();
        let r = preimage_count(&f, -1.0, -5.0, 5.0, 512).unwrap();
        assert_eq!(r.count, 0);
        assert!(!r.exceeds_rank);
    }

    #[test]
    fn preimage_bad_args() {
        let f = ExpLike::new(vec![(1.0, 1.0)]).unwrap();
        assert!(preimage_count(&f, 0.0, 2.0, 1.0, 16).is_err());
        assert!(preimage_count(&f, 0.0, 0.0, 1.0, 1).is_err());
    }

    #[test]
    fn rank_one_products_multiply() {
        // explike_eval(f*g, x) = f(x) * g(x) for rank-1 factors
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let b1 = rng.gen::<f64>() * 4.0 - 2.0;
            let b2 = rng.gen::<f64>() * 4.0 - 2.0;
            let x = rng.gen::<f64>() * 4.0 - 2.0;
            if b1 == 0.0 || b2 == 0.0 || (b1 + b2).abs() < 1e-9 {
                continue;
            }
            let f = ExpLike::rank_one(b1).unwrap();
            let g = ExpLike::rank_one(b2).unwrap();
            let fg = ExpLike::rank_one(b1 + b2).unwrap();
            let lhs = fg.eval(x).unwrap();
            let rhs = f.eval(x).unwrap() * g.eval(x).unwrap();
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
        }
    }

    #[test]
    fn exponent_sum_clash_detected() {
        // betas {1, 2} at degree 2: 1+1 = 2 clashes with the second generator
        let cfg = WitnessConfig::new(vec![1.0, 2.0], 2, 64);
        let err = algebrability_witness(&SequenceSpec::TriangularSpikes, &cfg).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)), "{err}");
        assert!(err.to_string().contains("clash"), "{err}");
    }

    #[test]
    fn degenerate_constant_fails_membership() {
        let mut cfg = WitnessConfig::new(vec![1.0], 1, 1024);
        cfg.combos = 3;
        let rep =
            algebrability_witness(&SequenceSpec::Constant { value: 0.0 }, &cfg).unwrap();
        assert!(!rep.memberships_ok);
        assert!(!rep.pass);
    }

    #[test]
    fn small_witness_on_triangular_spikes() {
        // degree 1 keeps the Gram well-conditioned; membership holds at
        // moderate length
        let spec = SequenceSpec::TriangularSpikes;
        let n = spec.block_boundary(300).unwrap() as usize;
        let mut cfg =
            WitnessConfig::new(WitnessConfig::sqrt_prime_betas(3).unwrap(), 1, n);
        cfg.combos = 5;
        let rep = algebrability_witness(&spec, &cfg).unwrap();
        assert!(rep.sigma_min > 1e-8, "sigma_min = {}", rep.sigma_min);
        assert!(rep.memberships_ok, "{:#?}", rep.combo_checks);
        assert!(rep.pass);
    }

    #[test]
    fn witness_is_deterministic() {
        let spec = SequenceSpec::TriangularSpikes;
        let n = spec.block_boundary(150).unwrap() as usize;
        let mut cfg = WitnessConfig::new(vec![1.0, std::f64::consts::SQRT_2], 1, n);
        cfg.combos = 4;
        let a = algebrability_witness(&spec, &cfg).unwrap();
        let b = algebrability_witness(&spec, &cfg).unwrap();
        assert_eq!(a.sigma_min.to_bits(), b.sigma_min.to_bits());
        for (x, y) in a.combo_checks.iter().zip(&b.combo_checks) {
            assert_eq!(x.coefficients, y.coefficients);
            assert_eq!(x.ok, y.ok);
        }
    }
}
