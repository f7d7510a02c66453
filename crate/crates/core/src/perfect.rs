//! Perfect error-correcting codes and the sphere-packing certificate.
//!
//! A code with `M` words of length `n` over GF(q) and minimum distance
//! `d >= 2t + 1` satisfies `M * V(n, t) <= q^n`, where `V` is the sphere size;
//! it is perfect when equality holds. The Golay codes here are built from
//! their generator polynomials and certified on construction.

use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::construct::projective_representatives;
use crate::error::{Error, Result};
use crate::field::{check_len, FieldElement, FieldSpec, Word};
use crate::linalg;
use crate::stegocode::sphere_size;

/// `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1`, constant term first.
const GOLAY_BINARY_GENERATOR: [u32; 12] = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1];

/// `x^5 + x^4 - x^3 + x^2 - 1` over GF(3), constant term first.
const GOLAY_TERNARY_GENERATOR: [u32; 6] = [2, 0, 1, 2, 1, 1];

/// A set of distinct words of equal length over one field, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCode {
    field: FieldSpec,
    n: usize,
    codewords: Vec<Word>,
}

impl BlockCode {
    pub fn new(field: FieldSpec, n: usize, mut codewords: Vec<Word>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRange("code length must be positive".into()));
        }
        for w in &codewords {
            check_len(n, w.len())?;
            field.validate(w)?;
        }
        codewords.sort();
        if let Some(pair) = codewords.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::InvalidRange(format!("duplicate codeword {}", pair[0])));
        }
        if codewords.is_empty() {
            return Err(Error::InvalidRange("code has no codewords".into()));
        }
        Ok(BlockCode {
            field,
            n,
            codewords,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.codewords.len()
    }

    pub fn codewords(&self) -> &[Word] {
        &self.codewords
    }

    pub fn into_codewords(self) -> Vec<Word> {
        self.codewords
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.codewords.binary_search(w).is_ok()
    }

    /// A sum or scalar multiple of codewords that falls outside the code, if
    /// the code is not linear.
    pub fn linearity_witness(&self) -> Option<LinearityWitness> {
        let f = &self.field;
        let zero = Word::zero(self.n);
        if !self.contains(&zero) {
            return Some(LinearityWitness::MissingZero);
        }
        for a in &self.codewords {
            for c in f.nonzero_elements().skip(1) {
                if !self.contains(&f.scale_word(c, a)) {
                    return Some(LinearityWitness::Scalar {
                        scalar: c,
                        word: a.clone(),
                    });
                }
            }
        }
        for (i, a) in self.codewords.iter().enumerate() {
            for b in &self.codewords[i + 1..] {
                if !self.contains(&f.add_words(a, b).expect("equal lengths")) {
                    return Some(LinearityWitness::Sum {
                        a: a.clone(),
                        b: b.clone(),
                    });
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum LinearityWitness {
    MissingZero,
    Scalar { scalar: FieldElement, word: Word },
    Sum { a: Word, b: Word },
}

/// A linear `[n, k]` code given by a full-rank `(n-k) x n` check matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    k: usize,
    check_matrix: Vec<Word>,
    generator: Vec<Word>,
}

impl LinearCode {
    pub fn from_check_matrix(field: FieldSpec, n: usize, check_matrix: Vec<Word>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRange("code length must be positive".into()));
        }
        linalg::validate_rows(&field, &check_matrix, n)?;
        linalg::require_full_rank(&field, &check_matrix)?;
        let generator = linalg::nullspace(&field, &check_matrix, n);
        Ok(LinearCode {
            k: generator.len(),
            field,
            n,
            check_matrix,
            generator,
        })
    }

    pub fn from_generator(field: FieldSpec, n: usize, generator: Vec<Word>) -> Result<Self> {
        linalg::validate_rows(&field, &generator, n)?;
        linalg::require_full_rank(&field, &generator)?;
        let check_matrix = linalg::nullspace(&field, &generator, n);
        LinearCode::from_check_matrix(field, n, check_matrix)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn check_matrix(&self) -> &[Word] {
        &self.check_matrix
    }

    pub fn generator(&self) -> &[Word] {
        &self.generator
    }

    pub fn size(&self) -> Option<u128> {
        self.field.space_size(self.k)
    }

    pub fn syndrome(&self, x: &Word) -> Result<Word> {
        check_len(self.n, x.len())?;
        linalg::mat_vec(&self.field, &self.check_matrix, x)
    }

    pub fn contains(&self, x: &Word) -> Result<bool> {
        Ok(self.syndrome(x)?.is_zero())
    }

    /// All `q^k` codewords, sorted.
    pub fn codewords(&self, cfg: &RunConfig) -> Result<BlockCode> {
        let size = self.size().ok_or(Error::Overflow("code size"))?;
        cfg.check_budget(size)?;
        let f = &self.field;
        let words = (0..size as u64)
            .map(|i| {
                let coeffs = f.word_from_index(i, self.k);
                coeffs
                    .elems()
                    .iter()
                    .zip(&self.generator)
                    .fold(Word::zero(self.n), |acc, (&c, g)| {
                        f.add_words(&acc, &f.scale_word(c, g)).expect("equal lengths")
                    })
            })
            .collect();
        BlockCode::new(f.clone(), self.n, words)
    }

    /// Minimum nonzero codeword weight; `None` for the zero code.
    pub fn min_distance(&self, cfg: &RunConfig) -> Result<Option<usize>> {
        let code = self.codewords(cfg)?;
        Ok(code
            .codewords()
            .iter()
            .map(Word::weight)
            .filter(|&w| w > 0)
            .min())
    }

    /// Sphere-packing certificate with the distance taken from codeword weights.
    pub fn certificate(&self, t: usize, cfg: &RunConfig) -> Result<PerfectnessCertificate> {
        let m = self.size().ok_or(Error::Overflow("code size"))?;
        let d = self.min_distance(cfg)?;
        PerfectnessCertificate::new(self.field.q(), self.n, m, d, t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectnessCertificate {
    pub q: u32,
    pub n: usize,
    pub m: u128,
    /// Minimum distance; `None` when the code has a single word.
    pub d: Option<usize>,
    /// Radius the certificate was requested for.
    pub t: usize,
    /// `floor((d - 1) / 2)`, the radius the distance guarantees.
    pub packing_radius: Option<usize>,
    pub sphere_size: u128,
    pub sphere_packing_lhs: u128,
    pub space_size: u128,
    /// `M * V(n, t) == q^n`.
    pub equal: bool,
    /// `d >= 2t + 1`.
    pub corrects_t: bool,
}

impl PerfectnessCertificate {
    pub fn new(q: u32, n: usize, m: u128, d: Option<usize>, t: usize) -> Result<Self> {
        let sphere = sphere_size(n, t, q as u64)?;
        let lhs = m
            .checked_mul(sphere)
            .ok_or(Error::Overflow("sphere-packing product"))?;
        let space = (q as u128)
            .checked_pow(n as u32)
            .ok_or(Error::Overflow("q^n"))?;
        Ok(PerfectnessCertificate {
            q,
            n,
            m,
            d,
            t,
            packing_radius: d.map(|d| (d - 1) / 2),
            sphere_size: sphere,
            sphere_packing_lhs: lhs,
            space_size: space,
            equal: lhs == space,
            corrects_t: d.is_none_or(|d| d > 2 * t),
        })
    }

    pub fn passes(&self) -> bool {
        self.equal && self.corrects_t
    }
}

/// Exact minimum pairwise distance; needs at least two codewords.
pub fn min_distance(c: &BlockCode, cfg: &RunConfig) -> Result<usize> {
    let m = c.m() as u128;
    if m < 2 {
        return Err(Error::InvalidRange("minimum distance needs two codewords".into()));
    }
    cfg.check_budget(m * (m - 1) / 2)?;
    let words = c.codewords();
    let mut best = usize::MAX;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            let d = a
                .elems()
                .iter()
                .zip(b.elems())
                .filter(|(x, y)| x != y)
                .count();
            best = best.min(d);
            if best == 1 {
                return Ok(1);
            }
        }
    }
    Ok(best)
}

pub fn verify_perfect(c: &BlockCode, t: usize, cfg: &RunConfig) -> Result<PerfectnessCertificate> {
    let d = if c.m() < 2 {
        None
    } else {
        Some(min_distance(c, cfg)?)
    };
    PerfectnessCertificate::new(c.field().q(), c.n(), c.m() as u128, d, t)
}

/// The Hamming code whose check-matrix columns are the projective
/// representatives of GF(q)^r.
pub fn hamming_code(r: usize, f: &FieldSpec) -> Result<LinearCode> {
    if r < 2 {
        return Err(Error::InvalidRange(format!("Hamming codes need r >= 2, got {r}")));
    }
    let cols = projective_representatives(r, f);
    let n = cols.len();
    LinearCode::from_check_matrix(f.clone(), n, linalg::from_columns(&cols, r))
}

fn cyclic_generator_rows(g: &[u32], n: usize) -> Vec<Word> {
    let k = n + 1 - g.len();
    (0..k)
        .map(|shift| {
            let mut row = vec![0u32; n];
            row[shift..shift + g.len()].copy_from_slice(g);
            Word::from_values(row)
        })
        .collect()
}

fn certified(code: LinearCode, t: usize, name: &str) -> Result<LinearCode> {
    let cert = code.certificate(t, &RunConfig::default())?;
    if cert.passes() {
        Ok(code)
    } else {
        Err(Error::Construction(format!("{name} failed its perfectness check: {cert:?}")))
    }
}

/// The `[23, 12, 7]` binary Golay code.
pub fn golay_binary() -> Result<LinearCode> {
    let f = FieldSpec::binary();
    let code = LinearCode::from_generator(
        f,
        23,
        cyclic_generator_rows(&GOLAY_BINARY_GENERATOR, 23),
    )?;
    certified(code, 3, "binary Golay code")
}

/// The `[11, 6, 5]` ternary Golay code.
pub fn golay_ternary() -> Result<LinearCode> {
    let f = FieldSpec::ternary();
    let code = LinearCode::from_generator(
        f,
        11,
        cyclic_generator_rows(&GOLAY_TERNARY_GENERATOR, 11),
    )?;
    certified(code, 2, "ternary Golay code")
}

/// `{0^{2t+1}, 1^{2t+1}}`.
pub fn repetition_code(t: usize) -> BlockCode {
    let n = 2 * t + 1;
    BlockCode::new(
        FieldSpec::binary(),
        n,
        vec![Word::zero(n), Word::from_values(vec![1; n])],
    )
    .expect("two distinct words")
}

/// Nonlinear part of the doubling construction: the product of the first
/// two coordinates. It is quadratic on the Hamming code, so the result is
/// not linear.
fn vasilev_twist(v: &Word) -> u32 {
    v.get(0).value() * v.get(1).value()
}

/// Binary perfect code of length `2^{m+1} - 1` built from the Hamming code
/// `H` of length `n = 2^m - 1`:
/// `{(u, u + v, |u| mod 2 + twist(v)) : u in GF(2)^n, v in H}`.
pub fn vasilev_code(m: usize, cfg: &RunConfig) -> Result<BlockCode> {
    if m < 3 {
        return Err(Error::InvalidRange(format!("doubling needs m >= 3, got {m}")));
    }
    let f = FieldSpec::binary();
    let hamming = hamming_code(m, &f)?;
    let n = hamming.n();
    let size = 1u128
        .checked_shl((n + hamming.k()) as u32)
        .ok_or(Error::Overflow("code size"))?;
    cfg.check_budget(size)?;
    let inner = hamming.codewords(cfg)?;
    let mut words = Vec::with_capacity(size as usize);
    for u in f.all_words(n) {
        let parity = (u.weight() % 2) as u32;
        for v in inner.codewords() {
            let sum = f.add_words(&u, v)?;
            let tail = (parity + vasilev_twist(v)) % 2;
            let word: Vec<u32> = u
                .values()
                .chain(sum.values())
                .chain(std::iter::once(tail))
                .collect();
            words.push(Word::from_values(word));
        }
    }
    BlockCode::new(f, 2 * n + 1, words)
}
