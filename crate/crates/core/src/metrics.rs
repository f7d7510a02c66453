//! Embedding performance: message rate, change density, hiding capacity of
//! a Bernoulli(1/2) cover under Hamming distortion, and hiding redundancy.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stegocode::{CodingTable, StegoMatrix};

/// Spacing of the distortion grid in [`redundancy_curve`].
pub const CURVE_GRID_STEPS: u32 = 100;

/// `-D log2 D - (1-D) log2 (1-D)` with `0 log 0 = 0`.
pub fn binary_entropy(d: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&d) {
        return Err(Error::OutOfDomain(format!("entropy argument {d} outside [0, 1]")));
    }
    let term = |p: f64| if p == 0.0 { 0.0 } else { -p * p.log2() };
    Ok(term(d) + term(1.0 - d))
}

/// Hiding capacity at average distortion `d`: `H(d)` up to 1/2, then 1.
pub fn capacity(d: f64) -> Result<f64> {
    if d.is_nan() || d < 0.0 {
        return Err(Error::OutOfDomain(format!("distortion {d} is negative")));
    }
    if d <= 0.5 {
        binary_entropy(d)
    } else {
        Ok(1.0)
    }
}

/// Average fraction of changed positions over all `q^k` messages, exactly.
pub fn change_density(table: &CodingTable) -> Ratio<u128> {
    let total: u128 = table.entries().iter().map(|z| z.weight() as u128).sum();
    Ratio::new(total, table.len() as u128 * table.n() as u128)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RedundancyReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub message_rate: f64,
    pub change_density: f64,
    pub change_density_numer: u128,
    pub change_density_denom: u128,
    pub capacity: f64,
    pub redundancy: f64,
    pub embedding_efficiency: f64,
}

/// Full report for a binary stego-coding matrix and its table.
pub fn redundancy_report(h: &StegoMatrix, table: &CodingTable) -> Result<RedundancyReport> {
    if h.field().q() != 2 {
        return Err(Error::OutOfDomain(format!(
            "hiding capacity is defined for binary covers, got GF({})",
            h.field().q()
        )));
    }
    if table.k() != h.k() || table.n() != h.n() {
        return Err(Error::LengthMismatch {
            expected: h.n(),
            got: table.n(),
        });
    }
    let density = change_density(table);
    let d = ratio_to_f64(&density);
    let rate = h.k() as f64 / h.n() as f64;
    let cap = capacity(d)?;
    Ok(RedundancyReport {
        n: h.n(),
        k: h.k(),
        t: h.t(),
        message_rate: rate,
        change_density: d,
        change_density_numer: *density.numer(),
        change_density_denom: *density.denom(),
        capacity: cap,
        redundancy: cap - rate,
        embedding_efficiency: rate / d,
    })
}

pub fn ratio_to_f64(r: &Ratio<u128>) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// One row of the rate/distortion comparison: capacity `H(D)`, the plain LSB
/// rate `2D`, and for `D = 1/2^k` the F5 rate `k/(2^k - 1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    pub d: f64,
    pub capacity: f64,
    pub lsb_rate: f64,
    pub f5_rate: Option<f64>,
}

pub fn redundancy_curve(k_max: u32) -> Result<Vec<CurveRow>> {
    if k_max == 0 || k_max > 60 {
        return Err(Error::InvalidRange(format!("k_max = {k_max} must be in 1..=60")));
    }
    // Distortions as exact fractions so grid points and F5 points merge.
    let mut points: Vec<(Ratio<u128>, Option<f64>)> = (0..=CURVE_GRID_STEPS / 2)
        .map(|i| (Ratio::new(i as u128, CURVE_GRID_STEPS as u128), None))
        .collect();
    for k in 1..=k_max {
        let d = Ratio::new(1u128, 1u128 << k);
        let rate = k as f64 / ((1u64 << k) - 1) as f64;
        match points.iter_mut().find(|(p, _)| *p == d) {
            Some(slot) => slot.1 = Some(rate),
            None => points.push((d, Some(rate))),
        }
    }
    points.sort_by_key(|a| a.0);
    points
        .into_iter()
        .map(|(d, f5_rate)| {
            let d = ratio_to_f64(&d);
            Ok(CurveRow {
                d,
                capacity: capacity(d)?,
                lsb_rate: 2.0 * d,
                f5_rate,
            })
        })
        .collect()
}

/// `%.9g`-style rendering.
pub fn format_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.8e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific form");
    let exp: i32 = exp.parse().expect("exponent");
    if (-4..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        trim_zeros(&s)
    } else {
        let m = trim_zeros(mantissa);
        format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub const CURVE_CSV_HEADER: &str = "D,capacity,lsb_rate,f5_rate";

pub fn curve_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from(CURVE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            format_sig9(r.d),
            format_sig9(r.capacity),
            format_sig9(r.lsb_rate),
            r.f5_rate.map(format_sig9).unwrap_or_default()
        ));
    }
    out
}

/// Lower bound on the number of binary MLE codes of length `n = 2^r - 1`,
/// counted from the number of distinct perfect codes of that length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KrotovBound {
    pub n: u64,
    pub log2: f64,
    /// Exact value when it is an integer of at most 2^16 bits.
    pub exact: Option<String>,
}

pub fn krotov_lower_bound(n: u64) -> Result<KrotovBound> {
    let r = (n + 1).trailing_zeros() as u64;
    if n < 3 || (n + 1) != 1u64 << r {
        return Err(Error::InvalidRange(format!("n = {n} is not 2^r - 1 with r >= 2")));
    }
    let a = n.div_ceil(2) - r;
    let b = (n - 3) / 4;
    let c = (n + 5) / 4 - r;
    if a > 60 || b > 60 || c > 60 {
        return Err(Error::Overflow("Krotov bound exponent"));
    }
    let (ea, eb, ec) = (1u64 << a, 1u64 << b, 1u64 << c);
    let log2 = ea as f64 + eb as f64 * 3f64.log2() + ec as f64 - r as f64;
    let exact = (log2 <= 65536.0 && ea + ec >= r).then(|| {
        let three = BigUint::from(3u32).pow(eb as u32);
        (three << (ea + ec - r) as usize).to_string()
    });
    Ok(KrotovBound { n, log2, exact })
}

impl KrotovBound {
    pub fn exact_value(&self) -> Option<BigUint> {
        self.exact.as_ref().and_then(|s| s.parse().ok())
    }

    pub fn at_least_one(&self) -> bool {
        self.exact_value().map_or(self.log2 >= 0.0, |v| v >= BigUint::one())
    }
}
