//! Conversions between perfect codes and MLE stego-codes.
//!
//! Translating a perfect `t`-error-correcting code `P` by every word of
//! weight at most `t` gives `V(n, t)` disjoint parts that cover GF(q)^n; the
//! result is an MLE stego-code with `I_0 = P`. Conversely every part of an
//! MLE stego-code is a perfect code.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::field::{prime_power, Word};
use crate::perfect::{verify_perfect, BlockCode, LinearCode, PerfectnessCertificate};
use crate::stegocode::{
    is_mle, is_stego_partition, sphere_size, words_within, PartitionCode, VerificationReport,
    Witness,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MleConversionResult {
    pub partition: PartitionCode,
    /// Always 0: the zero leader comes first, so `I_0` is the input code.
    pub part_index_of_input: usize,
    /// `y_0, ..., y_{M-1}` ordered by weight, then mixed-radix value.
    pub coset_leaders: Vec<Word>,
}

fn require_perfect(cert: PerfectnessCertificate) -> Result<PerfectnessCertificate> {
    if cert.passes() {
        Ok(cert)
    } else {
        Err(Error::NotPerfect(Box::new(cert)))
    }
}

/// Builds `I_i = {y_i + x : x in P}` over all leaders `y_i` of weight `<= t`.
pub fn perfect_to_mle(p: &BlockCode, t: usize, cfg: &RunConfig) -> Result<MleConversionResult> {
    let f = p.field();
    if t > p.n() {
        return Err(Error::InvalidRange(format!("radius {t} exceeds length {}", p.n())));
    }
    cfg.check_budget_opt(f.space_size(p.n()))?;
    require_perfect(verify_perfect(p, t, cfg)?)?;
    let leaders = words_within(f, p.n(), t);
    let parts = leaders
        .iter()
        .map(|y| {
            p.codewords()
                .iter()
                .map(|x| f.add_words(y, x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let partition = PartitionCode::new(f.clone(), p.n(), t, parts)?;
    Ok(MleConversionResult {
        partition,
        part_index_of_input: 0,
        coset_leaders: leaders,
    })
}

/// Certifies every part of an MLE stego-code as a perfect code.
pub fn mle_to_perfect(s: &PartitionCode, cfg: &RunConfig) -> Result<Vec<PerfectnessCertificate>> {
    let report = is_stego_partition(s, cfg);
    if !report.pass {
        return Err(Error::NotStegoPartition(Box::new(report)));
    }
    if !is_mle(s) {
        return Err(Error::NotMle {
            parts: s.m() as u128,
            sphere: sphere_size(s.n(), s.t(), s.field().q() as u64)?,
        });
    }
    s.parts()
        .iter()
        .enumerate()
        .map(|(i, part)| {
            let code = BlockCode::new(s.field().clone(), s.n(), part.clone())?;
            let cert = verify_perfect(&code, s.t(), cfg)?;
            if cert.passes() {
                Ok(cert)
            } else {
                Err(Error::PartCertificateFailure {
                    part: i,
                    certificate: Box::new(cert),
                })
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    Trivial,
    BinaryGolayType,
    TernaryGolayType,
    HammingType,
    Impossible,
}

/// Parameter-level classification of a claimed MLE code `(n, M, t)` over
/// GF(q). The trivial families take precedence, so the binary `(3, 4, 1)`
/// code is `Trivial` rather than `HammingType`.
pub fn classify_mle(n: u64, m: u128, t: u64, q: u64) -> Classification {
    if n == 0 || t > n || prime_power(q.min(u32::MAX as u64) as u32).is_none() {
        return Classification::Impossible;
    }
    match sphere_size(n as usize, t as usize, q) {
        Ok(s) if s == m => {}
        _ => return Classification::Impossible,
    }
    if t == n || t == 0 || (q == 2 && n == 2 * t + 1) {
        return Classification::Trivial;
    }
    if (q, n, t) == (2, 23, 3) {
        return Classification::BinaryGolayType;
    }
    if (q, n, t) == (3, 11, 2) {
        return Classification::TernaryGolayType;
    }
    if t == 1 {
        // n = (q^r - 1)/(q - 1) for some r >= 2, i.e. 1 + n(q - 1) = q^r
        let mut target = 1u128 + n as u128 * (q as u128 - 1);
        let mut r = 0;
        while target.is_multiple_of(q as u128) {
            target /= q as u128;
            r += 1;
        }
        if target == 1 && r >= 2 {
            return Classification::HammingType;
        }
    }
    Classification::Impossible
}

/// MLE stego-code obtained from a perfect linear code without materializing
/// GF(q)^n. Part `i` is the coset `y_i + C`, so `x` lies in part `i` exactly
/// when `x - y_i` has zero syndrome.
#[derive(Debug, Clone)]
pub struct CosetMle {
    code: LinearCode,
    t: usize,
    leaders: Vec<Word>,
    leader_syndromes: Vec<u64>,
    leader_of_syndrome: Vec<u32>,
    certificate: PerfectnessCertificate,
}

pub fn perfect_to_mle_streaming(code: &LinearCode, t: usize, cfg: &RunConfig) -> Result<CosetMle> {
    if t > code.n() {
        return Err(Error::InvalidRange(format!("radius {t} exceeds length {}", code.n())));
    }
    let certificate = require_perfect(code.certificate(t, cfg)?)?;
    let f = code.field();
    let r = code.n() - code.k();
    let syndromes = f.space_size(r).ok_or(Error::Overflow("syndrome space"))?;
    cfg.check_budget(syndromes)?;
    let leaders = words_within(f, code.n(), t);
    let mut leader_of_syndrome = vec![u32::MAX; syndromes as usize];
    let mut leader_syndromes = Vec::with_capacity(leaders.len());
    for (i, y) in leaders.iter().enumerate() {
        let s = f.word_index(&code.syndrome(y)?);
        if leader_of_syndrome[s as usize] != u32::MAX {
            return Err(Error::MalformedPartition(format!(
                "leaders {} and {y} share a coset",
                leaders[leader_of_syndrome[s as usize] as usize]
            )));
        }
        leader_of_syndrome[s as usize] = i as u32;
        leader_syndromes.push(s);
    }
    if let Some(s) = leader_of_syndrome.iter().position(|&l| l == u32::MAX) {
        return Err(Error::MalformedPartition(format!(
            "no leader for syndrome {}",
            f.word_from_index(s as u64, r)
        )));
    }
    Ok(CosetMle {
        code: code.clone(),
        t,
        leaders,
        leader_syndromes,
        leader_of_syndrome,
        certificate,
    })
}

impl CosetMle {
    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn m(&self) -> usize {
        self.leaders.len()
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn leaders(&self) -> &[Word] {
        &self.leaders
    }

    pub fn certificate(&self) -> &PerfectnessCertificate {
        &self.certificate
    }

    pub fn is_mle(&self) -> bool {
        sphere_size(self.n(), self.t, self.code.field().q() as u64)
            .is_ok_and(|s| s == self.m() as u128)
    }

    fn syndrome_index(&self, x: &Word) -> Result<u64> {
        Ok(self.code.field().word_index(&self.code.syndrome(x)?))
    }

    pub fn part_of(&self, x: &Word) -> Result<usize> {
        Ok(self.leader_of_syndrome[self.syndrome_index(x)? as usize] as usize)
    }

    /// `x in I_i`, decided by `x - y_i in C`.
    pub fn contains(&self, i: usize, x: &Word) -> Result<bool> {
        let diff = self.code.field().sub_words(x, &self.leaders[i])?;
        self.code.contains(&diff)
    }

    fn r(&self) -> usize {
        self.code.n() - self.code.k()
    }

    fn sub_syndromes(&self, a: u64, b: u64) -> u64 {
        let f = self.code.field();
        let (wa, wb) = (f.word_from_index(a, self.r()), f.word_from_index(b, self.r()));
        f.word_index(&f.sub_words(&wa, &wb).expect("equal lengths"))
    }

    /// Samples `cfg.sample_count` uniform pairs `(x, i)` and checks that
    /// some change of weight `<= t` moves `x` into part `i`. The candidate
    /// change is the leader of the syndrome `syn(y_i) - syn(x)`; membership of
    /// the moved word is then re-checked against the check matrix.
    pub fn verify_sampled(&self, cfg: &RunConfig) -> Result<VerificationReport> {
        let f = self.code.field();
        let mut rng = cfg.rng();
        let mut witness = None;
        let mut work = 0u64;
        for _ in 0..cfg.sample_count {
            let x = Word::from_values((0..self.n()).map(|_| rng.gen_range(0..f.q())));
            let i = rng.gen_range(0..self.m());
            work += 1;
            let need = self.sub_syndromes(self.leader_syndromes[i], self.syndrome_index(&x)?);
            let z = &self.leaders[self.leader_of_syndrome[need as usize] as usize];
            let moved = f.add_words(&x, z)?;
            if z.weight() > self.t || !self.contains(i, &moved)? {
                witness = Some(Witness::FarFromPart { word: x, part: i });
                break;
            }
        }
        Ok(VerificationReport {
            pass: witness.is_none(),
            witness,
            probabilistic: true,
            work,
            samples: Some(cfg.sample_count),
            seed: Some(cfg.rng_seed),
        })
    }

    /// Exact check over syndrome classes. `Dist(x, I_i)` depends only on
    /// `syn(y_i) - syn(x)`, so checking every (class of `x`, part) pair
    /// against the set of syndromes of weight-`<= t` words decides the whole
    /// space.
    pub fn verify_by_syndromes(&self) -> VerificationReport {
        let f = self.code.field();
        let classes = self.leader_of_syndrome.len();
        let mut reachable = vec![false; classes];
        for z in words_within(f, self.n(), self.t) {
            reachable[self.syndrome_index(&z).expect("length n") as usize] = true;
        }
        let mut work = 0u64;
        for sx in 0..classes as u64 {
            for (i, &sy) in self.leader_syndromes.iter().enumerate() {
                work += 1;
                if !reachable[self.sub_syndromes(sy, sx) as usize] {
                    // the leader of class sx represents it
                    let word = self.leaders[self.leader_of_syndrome[sx as usize] as usize].clone();
                    return VerificationReport {
                        pass: false,
                        witness: Some(Witness::FarFromPart { word, part: i }),
                        probabilistic: false,
                        work,
                        samples: None,
                        seed: None,
                    };
                }
            }
        }
        VerificationReport {
            pass: true,
            witness: None,
            probabilistic: false,
            work,
            samples: None,
            seed: None,
        }
    }

    /// Explicit partition, when `q^n` fits the enumeration cap.
    pub fn materialize(&self, cfg: &RunConfig) -> Result<MleConversionResult> {
        let code = self.code.codewords(cfg)?;
        perfect_to_mle(&code, self.t, cfg)
    }
}
