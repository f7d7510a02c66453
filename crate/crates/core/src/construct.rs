//! Stego-coding matrix constructions and length bounds.
//!
//! The direct-sum construction splits the standard basis of GF(q)^k into `t`
//! blocks and, for each block, takes one representative of every
//! one-dimensional subspace. Any syndrome is a sum of at most one vector per
//! block, and each of those is a scalar multiple of a single column, so `t`
//! changes always suffice.

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, Word};
use crate::metrics::binary_entropy;
use crate::stegocode::{sphere_size, StegoMatrix};

const ENTROPY_TOLERANCE: f64 = 1e-12;

/// One nonzero vector per one-dimensional subspace of GF(q)^k: the vector
/// whose leading nonzero element is 1, in mixed-radix order.
pub fn projective_representatives(k: usize, f: &FieldSpec) -> Vec<Word> {
    f.all_words(k)
        .filter(|w| {
            w.elems()
                .iter()
                .find(|e| !e.is_zero())
                .is_some_and(|&e| e == FieldElement::ONE)
        })
        .collect()
}

/// How the `k` basis vectors are split across the `t` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSumPlan {
    q: u64,
    k: usize,
    t: usize,
    parts: Vec<usize>,
}

impl DirectSumPlan {
    pub fn new(q: u64, k: usize, t: usize, parts: Vec<usize>) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidPlan("t must be at least 1".into()));
        }
        if parts.len() != t {
            return Err(Error::InvalidPlan(format!(
                "{} parts given for t = {t}",
                parts.len()
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPlan("every part must be positive".into()));
        }
        let sum: usize = parts.iter().sum();
        if sum != k {
            return Err(Error::InvalidPlan(format!("parts sum to {sum}, not k = {k}")));
        }
        Ok(DirectSumPlan { q, k, t, parts })
    }

    /// Parts of size `ceil(k/t)` followed by parts of size `floor(k/t)`.
    pub fn balanced(q: u64, k: usize, t: usize) -> Result<Self> {
        if t == 0 || t > k {
            return Err(Error::InvalidPlan(format!("need 1 <= t <= k, got t = {t}, k = {k}")));
        }
        let (base, extra) = (k / t, k % t);
        let parts = (0..t).map(|i| base + usize::from(i < extra)).collect();
        DirectSumPlan::new(q, k, t, parts)
    }

    /// `t - 1` parts of size `floor(k/t)` and one part holding the rest; the
    /// split whose length is the closed-form upper bound.
    pub fn floor_split(q: u64, k: usize, t: usize) -> Result<Self> {
        if t == 0 || t > k {
            return Err(Error::InvalidPlan(format!("need 1 <= t <= k, got t = {t}, k = {k}")));
        }
        let base = k / t;
        let mut parts = vec![base; t - 1];
        parts.push(k - base * (t - 1));
        DirectSumPlan::new(q, k, t, parts)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `sum (q^{k_i} - 1)/(q - 1)`.
    pub fn length(&self) -> Result<usize> {
        self.parts.iter().try_fold(0usize, |acc, &ki| {
            let pts = projective_count(self.q, ki).ok_or(Error::Overflow("plan length"))?;
            acc.checked_add(usize::try_from(pts).map_err(|_| Error::Overflow("plan length"))?)
                .ok_or(Error::Overflow("plan length"))
        })
    }
}

fn projective_count(q: u64, k: usize) -> Option<u128> {
    Some(((q as u128).checked_pow(k as u32)? - 1) / (q as u128 - 1))
}

pub fn direct_sum_construct(plan: &DirectSumPlan) -> Result<StegoMatrix> {
    let f = FieldSpec::new(plan.q)?;
    let mut cols = Vec::with_capacity(plan.length()?);
    let mut offset = 0;
    for &ki in &plan.parts {
        for rep in projective_representatives(ki, &f) {
            let mut col = Word::zero(plan.k);
            for (j, &e) in rep.elems().iter().enumerate() {
                col.set(offset + j, e);
            }
            cols.push(col);
        }
        offset += ki;
    }
    StegoMatrix::from_columns(f, &cols, plan.t)
}

/// The binary `k x (2^k - 1)` matrix whose `i`-th column is `i` in binary,
/// most significant bit in the first row.
pub fn f5_matrix(k: usize) -> Result<StegoMatrix> {
    if k == 0 || k >= 32 {
        return Err(Error::InvalidRange(format!("k = {k} must be in 1..32")));
    }
    let n = (1u64 << k) - 1;
    let rows = (0..k)
        .map(|r| {
            let bit = k - 1 - r;
            Word::from_values((1..=n).map(|i| ((i >> bit) & 1) as u32))
        })
        .collect();
    StegoMatrix::new(FieldSpec::binary(), rows, 1)
}

fn check_bound_args(q: u64, k: usize, t: usize) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidRange(format!("field size {q} is below 2")));
    }
    if t == 0 || t > k {
        return Err(Error::InvalidRange(format!("need 1 <= t <= k, got t = {t}, k = {k}")));
    }
    Ok(())
}

/// Smallest `n` whose radius-`t` sphere holds at least `q^k` words; no
/// `(n, k, t)` stego-code over GF(q) is shorter.
pub fn bound_min_length_eq2(q: u64, k: usize, t: usize) -> Result<usize> {
    check_bound_args(q, k, t)?;
    let target = (q as u128)
        .checked_pow(k as u32)
        .ok_or(Error::Overflow("q^k"))?;
    let mut n = 1;
    loop {
        if sphere_size(n, t.min(n), q)? >= target {
            return Ok(n);
        }
        n += 1;
    }
}

/// `((q^f - 1)(t - 1) + q^{k - f(t-1)} - 1) / (q - 1)` with `f = floor(k/t)`:
/// the length reached by the direct-sum construction, hence an upper bound on
/// the minimal length.
pub fn bound_direct_sum_eq5(q: u64, k: usize, t: usize) -> Result<u128> {
    check_bound_args(q, k, t)?;
    let q = q as u128;
    let f = k / t;
    let pow = |e: usize| q.checked_pow(e as u32).ok_or(Error::Overflow("bound power"));
    let head = (pow(f)? - 1)
        .checked_mul(t as u128 - 1)
        .ok_or(Error::Overflow("bound product"))?;
    let tail = pow(k - f * (t - 1))? - 1;
    let num = head.checked_add(tail).ok_or(Error::Overflow("bound sum"))?;
    Ok(num / (q - 1))
}

/// Whether every vector of GF(q)^k is a combination of at most `t` of `cols`.
/// Grows the reachable set one column at a time; reusing a column never
/// reaches anything new, so after `t` rounds the set is exact.
fn columns_cover(f: &FieldSpec, cols: &[Word], k: usize, t: usize, space: usize) -> bool {
    let mut reached = vec![false; space];
    reached[0] = true;
    let mut frontier = vec![Word::zero(k)];
    let mut count = 1;
    for _ in 0..t {
        let mut next = Vec::new();
        for base in &frontier {
            for c in cols {
                for a in f.nonzero_elements() {
                    let v = f
                        .add_words(base, &f.scale_word(a, c))
                        .expect("equal lengths");
                    let i = f.word_index(&v) as usize;
                    if !reached[i] {
                        reached[i] = true;
                        count += 1;
                        next.push(v);
                    }
                }
            }
        }
        if count == space {
            return true;
        }
        frontier = next;
    }
    count == space
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Smallest `n <= max_n` such that some `n` columns cover GF(q)^k with at
/// most `t` nonzero coefficients. Searches subsets of the projective
/// representatives only: a scalar multiple or repeat of a column never
/// reaches a vector the original does not.
pub fn tth_dimension_bruteforce(
    q: u64,
    k: usize,
    t: usize,
    max_n: usize,
    cfg: &RunConfig,
) -> Result<Option<usize>> {
    check_bound_args(q, k, t)?;
    let f = FieldSpec::new(q)?;
    let space = f.space_size(k).ok_or(Error::Overflow("q^k"))?;
    cfg.check_budget(space)?;
    let reps = projective_representatives(k, &f);
    let mut work: u128 = 0;
    for n in 1..=max_n.min(reps.len()) {
        work = work.saturating_add(binomial(reps.len(), n));
        cfg.check_budget(work)?;
        let mut idx: Vec<usize> = (0..n).collect();
        loop {
            let cols: Vec<Word> = idx.iter().map(|&i| reps[i].clone()).collect();
            if columns_cover(&f, &cols, k, t, space as usize) {
                return Ok(Some(n));
            }
            let mut i = n;
            while i > 0 && idx[i - 1] == reps.len() - n + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..n {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(None)
}

/// Binary rate check `k/n <= H(t/n)`, valid for `t/n <= 1/2`.
pub fn bound_entropy_check(n: usize, k: usize, t: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::OutOfDomain("n must be positive".into()));
    }
    if 2 * t > n {
        return Err(Error::OutOfDomain(format!("t/n = {t}/{n} exceeds 1/2")));
    }
    let rate = k as f64 / n as f64;
    let h = binary_entropy(t as f64 / n as f64)?;
    Ok(rate <= h + ENTROPY_TOLERANCE)
}
