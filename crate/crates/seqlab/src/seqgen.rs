//! Generators for the block-structured sequence families under study.
//!
//! Every variant defines `x_n` for all `n >= 1` deterministically; the
//! bounded families take values in `{0,1}` or `[1,2]` (exact dyadic
//! rationals), so truncations regenerate bit-identically from their spec.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dyadic enumeration of [1,2]: `1, 2, 3/2, 5/4, 7/4, 9/8, 11/8, 13/8, 15/8, ...`.
///
/// After the first two terms, level `k >= 1` contributes the `2^{k-1}` values
/// `(2^k + 2i - 1)/2^k`, so every odd-numerator dyadic in (1,2) appears
/// exactly once.
pub fn a_term(n: u64) -> f64 {
    assert!(n >= 1, "a_term index starts at 1");
    match n {
        1 => 1.0,
        2 => 2.0,
        _ => {
            // n in [2^{k-1}+2, 2^k+1]  <=>  k = floor(log2(n-2)) + 1
            let k = (n - 2).ilog2() + 1;
            let i = n - ((1u64 << (k - 1)) + 1);
            let denom = (1u64 << k) as f64;
            ((1u64 << k) + 2 * i - 1) as f64 / denom
        }
    }
}

/// Diagonal enumeration of `a`: row `r` lists `a_1..a_r`, flattened.
///
/// Row recovery uses the triangular-number inversion with an exact integer
/// fix-up, so ties never depend on floating point.
pub fn b_term(n: u64) -> f64 {
    assert!(n >= 1, "b_term index starts at 1");
    let mut r = (((8.0 * n as f64 + 1.0).sqrt() - 1.0) / 2.0) as u64;
    while r * (r + 1) / 2 < n {
        r += 1;
    }
    while r > 1 && (r - 1) * r / 2 >= n {
        r -= 1;
    }
    a_term(n - r * (r - 1) / 2)
}

/// Declarative descriptor of an infinite sequence; the single source of
/// truth for generation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum SequenceSpec {
    /// `x_n = value`.
    Constant { value: f64 },
    /// `x_n = (-1)^n`.
    AltSign,
    /// The dyadic enumeration `a_n` of [1,2].
    Dyadic,
    /// The diagonal enumeration `b_n` of the `a` values.
    DyadicDiagonal,
    /// Blocks of `j` zeros followed by `2^j` ones (block boundaries
    /// `m_j = m_{j-1} + j + 2^j`).  Cesaro-summable but the window minima
    /// never lift off zero.
    ZeroOneBlocks,
    /// Zero except `x_{m_j} = b_j` at the triangular indices `m_j = j(j+1)/2`.
    TriangularSpikes,
    /// Runs of `j` copies of `b_j` starting at `m_j`, with
    /// `m_j = m_{j-1} + j - 1 + 2^{j-1}`; zero in between.
    GrowingRuns,
    /// Constant `b_j` on the giant blocks `(m_{j-1}, m_j]`, `m_j = j^j`.
    SelfPowerBlocks,
    /// Alternating `+1`/`-1` on the same `j^j` blocks (block 1 positive).
    SignBlocks,
    /// Drops the first `by` terms of `inner`.
    Shifted { inner: Box<SequenceSpec>, by: u64 },
    /// `scale * inner + offset`, elementwise.
    Affine {
        inner: Box<SequenceSpec>,
        scale: f64,
        offset: f64,
    },
    /// Explicit value list; generation beyond its length is an error.
    Custom { values: Vec<f64> },
}

/// Provenance of a truncation: how to regenerate it bit-identically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Spec { spec: SequenceSpec },
    /// Elementwise image under an exponential-like map with the given
    /// `(alpha, beta)` terms.
    ExpImage {
        base: SequenceSpec,
        terms: Vec<(f64, f64)>,
    },
    /// Not regenerable from a descriptor (e.g. perturbed samples).
    Opaque { label: String },
}

/// A finite prefix of a sequence, with provenance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Truncation {
    values: Vec<f64>,
    provenance: Provenance,
}

impl Truncation {
    pub fn new(values: Vec<f64>, provenance: Provenance) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "truncation must have at least one value".into(),
            ));
        }
        Ok(Self { values, provenance })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The generating spec, for plain generated truncations.
    pub fn spec(&self) -> Option<&SequenceSpec> {
        match &self.provenance {
            Provenance::Spec { spec } => Some(spec),
            _ => None,
        }
    }

    /// The underlying block-structured spec, looking through exp images.
    pub fn base_spec(&self) -> Option<&SequenceSpec> {
        match &self.provenance {
            Provenance::Spec { spec } => Some(spec),
            Provenance::ExpImage { base, .. } => Some(base),
            Provenance::Opaque { .. } => None,
        }
    }
}

impl SequenceSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            SequenceSpec::Constant { value } => {
                if !value.is_finite() {
                    return Err(Error::InvalidArgument("constant value must be finite".into()));
                }
            }
            SequenceSpec::Shifted { inner, .. } => inner.validate()?,
            SequenceSpec::Affine { inner, scale, offset } => {
                if !scale.is_finite() || !offset.is_finite() {
                    return Err(Error::InvalidArgument(
                        "affine scale/offset must be finite".into(),
                    ));
                }
                inner.validate()?;
            }
            SequenceSpec::Custom { values } => {
                if values.is_empty() {
                    return Err(Error::InvalidArgument("custom value list is empty".into()));
                }
                if let Some(i) = values.iter().position(|v| !v.is_finite()) {
                    return Err(Error::NonFinite {
                        index: i + 1,
                        value: values[i],
                    });
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// First `n` terms, streamed in O(n) time with O(1) block state.
    pub fn generate(&self, n: usize) -> Result<Truncation> {
        self.validate()?;
        if n == 0 {
            return Err(Error::InvalidArgument(
                "truncation length must be at least 1".into(),
            ));
        }
        let mut values = Vec::with_capacity(n);
        self.fill(&mut values, n)?;
        debug_assert_eq!(values.len(), n);
        Truncation::new(
            values,
            Provenance::Spec { spec: self.clone() },
        )
    }

    fn fill(&self, out: &mut Vec<f64>, n: usize) -> Result<()> {
        match self {
            SequenceSpec::Constant { value } => out.resize(n, *value),
            SequenceSpec::AltSign => {
                for i in 1..=n {
                    out.push(if i % 2 == 1 { -1.0 } else { 1.0 });
                }
            }
            SequenceSpec::Dyadic => {
                out.push(1.0);
                if n >= 2 {
                    out.push(2.0);
                }
                let mut k = 1u32;
                while out.len() < n {
                    let denom = (1u64 << k) as f64;
                    for i in 1..=(1u64 << (k - 1)) {
                        if out.len() == n {
                            break;
                        }
                        out.push(((1u64 << k) + 2 * i - 1) as f64 / denom);
                    }
                    k += 1;
                }
                out.truncate(n);
            }
            SequenceSpec::DyadicDiagonal => {
                let mut r = 1u64;
                'rows: loop {
                    for c in 1..=r {
                        if out.len() == n {
                            break 'rows;
                        }
                        out.push(a_term(c));
                    }
                    r += 1;
                }
            }
            SequenceSpec::ZeroOneBlocks => {
                let mut j = 1u32;
                while out.len() < n {
                    let zeros = (j as usize).min(n - out.len());
                    out.resize(out.len() + zeros, 0.0);
                    if out.len() == n {
                        break;
                    }
                    let ones = (1usize << j.min(62)).min(n - out.len());
                    out.resize(out.len() + ones, 1.0);
                    j += 1;
                }
            }
            SequenceSpec::TriangularSpikes => {
                out.resize(n, 0.0);
                let mut j = 1u64;
                while j * (j + 1) / 2 <= n as u64 {
                    out[(j * (j + 1) / 2 - 1) as usize] = b_term(j);
                    j += 1;
                }
            }
            SequenceSpec::GrowingRuns => {
                out.resize(n, 0.0);
                let mut m = 1u128; // m_j
                let mut j = 1u32;
                while m <= n as u128 {
                    let v = b_term(j as u64);
                    for t in 0..j as u128 {
                        let idx = m + t;
                        if idx <= n as u128 {
                            out[(idx - 1) as usize] = v;
                        }
                    }
                    m += j as u128 + (1u128 << j); // m_{j+1} = m_j + j + 2^j
                    j += 1;
                }
            }
            SequenceSpec::SelfPowerBlocks | SequenceSpec::SignBlocks => {
                let signs = matches!(self, SequenceSpec::SignBlocks);
                let mut prev = 0u128;
                let mut j = 1u32;
                while (prev as usize) < n {
                    let end = self_power(j)?.min(n as u128);
                    let v = if signs {
                        if j % 2 == 1 {
                            1.0
                        } else {
                            -1.0
                        }
                    } else {
                        b_term(j as u64)
                    };
                    out.resize(end as usize, v);
                    prev = self_power(j)?;
                    j += 1;
                }
            }
            SequenceSpec::Shifted { inner, by } => {
                let by = usize::try_from(*by).map_err(|_| {
                    Error::InvalidArgument("shift offset exceeds addressable range".into())
                })?;
                let full = n.checked_add(by).ok_or_else(|| {
                    Error::InvalidArgument("shifted length overflows usize".into())
                })?;
                let mut tmp = Vec::with_capacity(full);
                inner.fill(&mut tmp, full)?;
                out.extend_from_slice(&tmp[by..]);
            }
            SequenceSpec::Affine { inner, scale, offset } => {
                inner.fill(out, n)?;
                for v in out.iter_mut() {
                    *v = *scale * *v + *offset;
                }
            }
            SequenceSpec::Custom { values } => {
                if n > values.len() {
                    return Err(Error::InvalidArgument(format!(
                        "custom spec holds {} values, cannot generate {}",
                        values.len(),
                        n
                    )));
                }
                out.extend_from_slice(&values[..n]);
            }
        }
        Ok(())
    }

    /// Single term `x_n` (1-based); O(log n) for the block variants.
    pub fn term(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidArgument("term index starts at 1".into()));
        }
        Ok(match self {
            SequenceSpec::Constant { value } => *value,
            SequenceSpec::AltSign => {
                if n % 2 == 1 {
                    -1.0
                } else {
                    1.0
                }
            }
            SequenceSpec::Dyadic => a_term(n),
            SequenceSpec::DyadicDiagonal => b_term(n),
            SequenceSpec::ZeroOneBlocks => {
                let mut m_prev = 0u128;
                let mut j = 1u32;
                loop {
                    let m_j = m_prev + j as u128 + (1u128 << j);
                    if (n as u128) <= m_j {
                        break if (n as u128) - m_prev <= j as u128 { 0.0 } else { 1.0 };
                    }
                    m_prev = m_j;
                    j += 1;
                }
            }
            SequenceSpec::TriangularSpikes => {
                let mut j = 1u64;
                loop {
                    let m = j * (j + 1) / 2;
                    if m == n {
                        break b_term(j);
                    }
                    if m > n {
                        break 0.0;
                    }
                    j += 1;
                }
            }
            SequenceSpec::GrowingRuns => {
                let mut m = 1u128;
                let mut j = 1u32;
                loop {
                    if (n as u128) < m {
                        break 0.0;
                    }
                    if (n as u128) < m + j as u128 {
                        break b_term(j as u64);
                    }
                    m += j as u128 + (1u128 << j);
                    j += 1;
                }
            }
            SequenceSpec::SelfPowerBlocks | SequenceSpec::SignBlocks => {
                let mut j = 1u32;
                while self_power(j)? < n as u128 {
                    j += 1;
                }
                if matches!(self, SequenceSpec::SignBlocks) {
                    if j % 2 == 1 {
                        1.0
                    } else {
                        -1.0
                    }
                } else {
                    b_term(j as u64)
                }
            }
            SequenceSpec::Shifted { inner, by } => inner.term(n + by)?,
            SequenceSpec::Affine { inner, scale, offset } => scale * inner.term(n)? + offset,
            SequenceSpec::Custom { values } => {
                *values
                    .get((n - 1) as usize)
                    .ok_or_else(|| Error::InvalidArgument(format!(
                        "custom spec has no term {}",
                        n
                    )))?
            }
        })
    }

    /// Whether the variant carries block boundaries `m_j`.
    pub fn has_blocks(&self) -> bool {
        match self {
            SequenceSpec::ZeroOneBlocks
            | SequenceSpec::TriangularSpikes
            | SequenceSpec::GrowingRuns
            | SequenceSpec::SelfPowerBlocks
            | SequenceSpec::SignBlocks => true,
            SequenceSpec::Shifted { inner, .. } | SequenceSpec::Affine { inner, .. } => {
                inner.has_blocks()
            }
            _ => false,
        }
    }

    /// Block boundary `m_j` for block-structured variants.
    pub fn block_boundary(&self, j: u32) -> Result<u64> {
        if j == 0 {
            return Err(Error::InvalidArgument("block index starts at 1".into()));
        }
        let m: u128 = match self {
            SequenceSpec::ZeroOneBlocks => {
                // m_j = j(j+1)/2 + 2^{j+1} - 2
                let j = j as u128;
                if j >= 62 {
                    return Err(Error::BlockOverflow(format!(
                        "zero-one-blocks supports j <= 61 (largest N = m_61); got j = {j}"
                    )));
                }
                j * (j + 1) / 2 + (1u128 << (j + 1)) - 2
            }
            SequenceSpec::TriangularSpikes => {
                let j = j as u128;
                j * (j + 1) / 2
            }
            SequenceSpec::GrowingRuns => {
                let j = j as u128;
                if j >= 63 {
                    return Err(Error::BlockOverflow(format!(
                        "growing-runs supports j <= 62 (largest N = m_62); got j = {j}"
                    )));
                }
                j * (j - 1) / 2 + (1u128 << j) - 1
            }
            SequenceSpec::SelfPowerBlocks | SequenceSpec::SignBlocks => self_power(j)?,
            SequenceSpec::Shifted { inner, by } => {
                let m = inner.block_boundary(j)?;
                return m.checked_sub(*by).filter(|m| *m > 0).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "block {j} boundary lies inside the shifted-away prefix"
                    ))
                });
            }
            SequenceSpec::Affine { inner, .. } => return inner.block_boundary(j),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "spec `{}` has no block structure",
                    self.kebab_name()
                )))
            }
        };
        u64::try_from(m).map_err(|_| {
            Error::BlockOverflow(format!(
                "m_{j} exceeds the addressable range (largest supported N = {})",
                u64::MAX
            ))
        })
    }

    /// All block boundaries `m_j <= max`, ascending.
    pub fn block_boundaries_upto(&self, max: u64) -> Vec<u64> {
        if !self.has_blocks() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for j in 1u32.. {
            match self.block_boundary(j) {
                Ok(m) if m <= max => out.push(m),
                _ => break,
            }
        }
        out
    }

    pub fn kebab_name(&self) -> &'static str {
        match self {
            SequenceSpec::Constant { .. } => "constant",
            SequenceSpec::AltSign => "alt-sign",
            SequenceSpec::Dyadic => "dyadic",
            SequenceSpec::DyadicDiagonal => "dyadic-diagonal",
            SequenceSpec::ZeroOneBlocks => "zero-one-blocks",
            SequenceSpec::TriangularSpikes => "triangular-spikes",
            SequenceSpec::GrowingRuns => "growing-runs",
            SequenceSpec::SelfPowerBlocks => "self-power-blocks",
            SequenceSpec::SignBlocks => "sign-blocks",
            SequenceSpec::Shifted { .. } => "shifted",
            SequenceSpec::Affine { .. } => "affine",
            SequenceSpec::Custom { .. } => "custom",
        }
    }

    /// Key-value text block (one `key = value` per line, `inner.` prefixes
    /// for nested specs).
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        self.write_kv("", &mut out);
        out
    }

    fn write_kv(&self, prefix: &str, out: &mut String) {
        out.push_str(&format!("{prefix}variant = {}\n", self.kebab_name()));
        match self {
            SequenceSpec::Constant { value } => {
                out.push_str(&format!("{prefix}value = {value}\n"));
            }
            SequenceSpec::Shifted { inner, by } => {
                out.push_str(&format!("{prefix}by = {by}\n"));
                inner.write_kv(&format!("{prefix}inner."), out);
            }
            SequenceSpec::Affine { inner, scale, offset } => {
                out.push_str(&format!("{prefix}scale = {scale}\n"));
                out.push_str(&format!("{prefix}offset = {offset}\n"));
                inner.write_kv(&format!("{prefix}inner."), out);
            }
            SequenceSpec::Custom { values } => {
                let joined: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("{prefix}values = {}\n", joined.join(",")));
            }
            _ => {}
        }
    }

    pub fn from_kv(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("malformed key-value line: `{line}`"))
            })?;
            pairs.push((k.trim().to_string(), v.trim().to_string()));
        }
        Self::parse_kv(&pairs, "")
    }

    fn parse_kv(pairs: &[(String, String)], prefix: &str) -> Result<Self> {
        let get = |key: &str| -> Option<&str> {
            let full = format!("{prefix}{key}");
            pairs.iter().find(|(k, _)| *k == full).map(|(_, v)| v.as_str())
        };
        let variant = get("variant").ok_or_else(|| {
            Error::InvalidArgument(format!("missing `{prefix}variant` key"))
        })?;
        let parse_f64 = |key: &str| -> Result<f64> {
            get(key)
                .ok_or_else(|| Error::InvalidArgument(format!("missing `{prefix}{key}`")))?
                .parse::<f64>()
                .map_err(|e| Error::InvalidArgument(format!("bad `{prefix}{key}`: {e}")))
        };
        Ok(match variant {
            "constant" => SequenceSpec::Constant { value: parse_f64("value")? },
            "alt-sign" => SequenceSpec::AltSign,
            "dyadic" => SequenceSpec::Dyadic,
            "dyadic-diagonal" => SequenceSpec::DyadicDiagonal,
            "zero-one-blocks" => SequenceSpec::ZeroOneBlocks,
            "triangular-spikes" => SequenceSpec::TriangularSpikes,
            "growing-runs" => SequenceSpec::GrowingRuns,
            "self-power-blocks" => SequenceSpec::SelfPowerBlocks,
            "sign-blocks" => SequenceSpec::SignBlocks,
            "shifted" => {
                let by = get("by")
                    .ok_or_else(|| Error::InvalidArgument(format!("missing `{prefix}by`")))?
                    .parse::<u64>()
                    .map_err(|e| Error::InvalidArgument(format!("bad `{prefix}by`: {e}")))?;
                let inner = Self::parse_kv(pairs, &format!("{prefix}inner."))?;
                SequenceSpec::Shifted { inner: Box::new(inner), by }
            }
            "affine" => {
                let scale = parse_f64("scale")?;
                let offset = parse_f64("offset")?;
                let inner = Self::parse_kv(pairs, &format!("{prefix}inner."))?;
                SequenceSpec::Affine { inner: Box::new(inner), scale, offset }
            }
            "custom" => {
                let raw = get("values")
                    .ok_or_else(|| Error::InvalidArgument(format!("missing `{prefix}values`")))?;
                let values: Result<Vec<f64>> = raw
                    .split(',')
                    .map(|s| {
                        s.trim().parse::<f64>().map_err(|e| {
                            Error::InvalidArgument(format!("bad custom value `{s}`: {e}"))
                        })
                    })
                    .collect();
                SequenceSpec::Custom { values: values? }
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown sequence variant `{other}`"
                )))
            }
        })
    }
}

fn self_power(j: u32) -> Result<u128> {
    (j as u128).checked_pow(j).ok_or_else(|| {
        Error::BlockOverflow(format!(
            "j^j overflows 128-bit arithmetic at j = {j}; largest supported N = 16^16 = {}",
            16u128.pow(16)
        ))
    })
}

/// Drop the first `k` terms: `(x_{k+1}, ..., x_N)`.
pub fn shift(t: &Truncation, k: usize) -> Result<Truncation> {
    if k >= t.len() {
        return Err(Error::InvalidArgument(format!(
            "shift by {k} leaves nothing of a length-{} truncation",
            t.len()
        )));
    }
    let values = t.values()[k..].to_vec();
    let provenance = match t.provenance() {
        Provenance::Spec { spec } => {
            let inner = match spec {
                SequenceSpec::Shifted { inner, by } => SequenceSpec::Shifted {
                    inner: inner.clone(),
                    by: by + k as u64,
                },
                other => SequenceSpec::Shifted {
                    inner: Box::new(other.clone()),
                    by: k as u64,
                },
            };
            Provenance::Spec { spec: inner }
        }
        Provenance::ExpImage { base, terms } => Provenance::ExpImage {
            base: SequenceSpec::Shifted {
                inner: Box::new(base.clone()),
                by: k as u64,
            },
            terms: terms.clone(),
        },
        Provenance::Opaque { label } => Provenance::Opaque {
            label: format!("shift({label}, {k})"),
        },
    };
    Truncation::new(values, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_first_nine() {
        let want = [1.0, 2.0, 1.5, 1.25, 1.75, 1.125, 1.375, 1.625, 1.875];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(a_term(i as u64 + 1), *w, "a_{}", i + 1);
        }
    }

    #[test]
    fn a_values_stay_in_interval_and_are_unique() {
        let mut seen = std::collections::BTreeSet::new();
        for n in 1..=4097u64 {
            let v = a_term(n);
            assert!((1.0..=2.0).contains(&v), "a_{n} = {v}");
            assert!(seen.insert(v.to_bits()), "duplicate a value at n = {n}");
        }
    }

    #[test]
    fn b_first_ten() {
        let want = [1.0, 1.0, 2.0, 1.0, 2.0, 1.5, 1.0, 2.0, 1.5, 1.25];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(b_term(i as u64 + 1), *w, "b_{}", i + 1);
        }
    }

    #[test]
    fn zero_one_blocks_prefix() {
        let t = SequenceSpec::ZeroOneBlocks.generate(10).unwrap();
        assert_eq!(
            t.values(),
            &[0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0]
        );
    }

    #[test]
    fn triangular_spikes_prefix() {
        let t = SequenceSpec::TriangularSpikes.generate(21).unwrap();
        let want = [
            1.0, 0.0, 1.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0,
            0.0, 0.0, 0.0, 0.0, 1.5,
        ];
        assert_eq!(t.values(), &want);
    }

    #[test]
    fn growing_runs_prefix() {
        let t = SequenceSpec::GrowingRuns.generate(12).unwrap();
        assert_eq!(
            t.values(),
            &[1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 2.0, 2.0, 2.0]
        );
    }

    #[test]
    fn constant_prefix() {
        let t = SequenceSpec::Constant { value: 0.25 }.generate(3).unwrap();
        assert_eq!(t.values(), &[0.25, 0.25, 0.25]);
    }

    #[test]
    fn zero_one_block_scan_matches_definition() {
        // block j: exactly j zeros then 2^j ones, for every block inside N
        let n = 5000usize;
        let t = SequenceSpec::ZeroOneBlocks.generate(n).unwrap();
        let v = t.values();
        let mut pos = 0usize;
        let mut j = 1usize;
        loop {
            if pos + j + (1 << j) > n {
                break;
            }
            assert!(v[pos..pos + j].iter().all(|x| *x == 0.0), "block {j} zeros");
            assert!(
                v[pos + j..pos + j + (1 << j)].iter().all(|x| *x == 1.0),
                "block {j} ones"
            );
            pos += j + (1 << j);
            j += 1;
        }
    }

    #[test]
    fn triangular_spikes_nonzero_count() {
        // among indices 1..m_j exactly j entries are nonzero
        let spec = SequenceSpec::TriangularSpikes;
        for j in [3u32, 10, 40] {
            let m = spec.block_boundary(j).unwrap() as usize;
            let t = spec.generate(m).unwrap();
            let nz = t.values().iter().filter(|v| **v != 0.0).count();
            assert_eq!(nz, j as usize);
        }
    }

    #[test]
    fn self_power_blocks_constant_on_blocks() {
        let spec = SequenceSpec::SelfPowerBlocks;
        let n = spec.block_boundary(5).unwrap() as usize;
        let t = spec.generate(n).unwrap();
        let v = t.values();
        let mut prev = 0usize;
        for j in 1..=5u32 {
            let end = spec.block_boundary(j).unwrap() as usize;
            let expect = b_term(j as u64);
            assert!(v[prev..end].iter().all(|x| *x == expect), "block {j}");
            prev = end;
        }
    }

    #[test]
    fn block_boundaries() {
        assert_eq!(SequenceSpec::ZeroOneBlocks.block_boundary(20).unwrap(), 2_097_360);
        assert_eq!(SequenceSpec::TriangularSpikes.block_boundary(2000).unwrap(), 2_001_000);
        assert_eq!(SequenceSpec::GrowingRuns.block_boundary(22).unwrap(), 4_194_534);
        assert_eq!(SequenceSpec::SelfPowerBlocks.block_boundary(8).unwrap(), 16_777_216);
        assert!(SequenceSpec::SelfPowerBlocks.block_boundary(17).is_err());
        assert!(SequenceSpec::AltSign.block_boundary(3).is_err());
    }

    #[test]
    fn prefix_consistency() {
        for spec in [
            SequenceSpec::ZeroOneBlocks,
            SequenceSpec::TriangularSpikes,
            SequenceSpec::GrowingRuns,
            SequenceSpec::SelfPowerBlocks,
            SequenceSpec::SignBlocks,
            SequenceSpec::Dyadic,
            SequenceSpec::DyadicDiagonal,
        ] {
            let long = spec.generate(2000).unwrap();
            let short = spec.generate(700).unwrap();
            assert_eq!(&long.values()[..700], short.values(), "{:?}", spec);
        }
    }

    #[test]
    fn term_matches_generate() {
        for spec in [
            SequenceSpec::ZeroOneBlocks,
            SequenceSpec::TriangularSpikes,
            SequenceSpec::GrowingRuns,
            SequenceSpec::SelfPowerBlocks,
            SequenceSpec::SignBlocks,
            SequenceSpec::AltSign,
        ] {
            let t = spec.generate(800).unwrap();
            for n in [1u64, 2, 3, 27, 256, 500, 800] {
                assert_eq!(
                    spec.term(n).unwrap(),
                    t.values()[(n - 1) as usize],
                    "{:?} term {n}",
                    spec
                );
            }
        }
    }

    #[test]
    fn shift_examples() {
        let t = SequenceSpec::Custom { values: vec![1.0, 2.0, 3.0] }
            .generate(3)
            .unwrap();
        assert_eq!(shift(&t, 1).unwrap().values(), &[2.0, 3.0]);

        let c = SequenceSpec::Constant { value: 7.0 }.generate(4).unwrap();
        assert_eq!(shift(&c, 3).unwrap().values(), &[7.0]);
        assert!(shift(&c, 4).is_err());

        // AltSign has period 2
        let alt = SequenceSpec::AltSign.generate(10).unwrap();
        let shifted = shift(&alt, 2).unwrap();
        let direct = SequenceSpec::AltSign.generate(8).unwrap();
        assert_eq!(shifted.values(), direct.values());
    }

    #[test]
    fn shifted_spec_generates_tail() {
        let spec = SequenceSpec::Shifted {
            inner: Box::new(SequenceSpec::TriangularSpikes),
            by: 2,
        };
        let t = spec.generate(4).unwrap();
        assert_eq!(t.values(), &[1.0, 0.0, 0.0, 2.0]);
    }

    #[test]
    fn kv_round_trip() {
        let specs = [
            SequenceSpec::Constant { value: -0.5 },
            SequenceSpec::ZeroOneBlocks,
            SequenceSpec::Affine {
                inner: Box::new(SequenceSpec::Shifted {
                    inner: Box::new(SequenceSpec::TriangularSpikes),
                    by: 3,
                }),
                scale: 2.0,
                offset: -1.0,
            },
            SequenceSpec::Custom { values: vec![0.1, -2.0, 0.30000000000000004] },
        ];
        for s in specs {
            let kv = s.to_kv();
            let back = SequenceSpec::from_kv(&kv).unwrap();
            assert_eq!(back, s, "kv block:\n{kv}");
        }
    }

    #[test]
    fn custom_generate_bounds() {
        let spec = SequenceSpec::Custom { values: vec![1.0, 2.0] };
        assert!(spec.generate(2).is_ok());
        assert!(spec.generate(3).is_err());
    }
}
