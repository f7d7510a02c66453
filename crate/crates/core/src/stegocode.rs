//! Stego-coding matrices, coding tables, embedding and extraction, and
//! partition stego-codes.
//!
//! A `k x n` matrix `H` over GF(q) is an `(n, k, t)` stego-coding matrix when
//! every syndrome `y` in GF(q)^k equals `H z^T` for some `z` of weight at most
//! `t`. Embedding a message `y` into a cover `x` then costs at most `t`
//! changes: add the stored solution for `y - H x^T`.
//!
//! Partition stego-codes drop linearity: any partition of GF(q)^n into `M`
//! parts such that every word lies within distance `t` of every part.

use std::collections::HashMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::field::{check_len, FieldSpec, Word};
use crate::linalg;

/// `sum_{i=0..t} (q-1)^i C(n, i)`, the number of words within distance `t`
/// of a fixed word of length `n`.
pub fn sphere_size(n: usize, t: usize, q: u64) -> Result<u128> {
    if t > n {
        return Err(Error::InvalidRange(format!("radius {t} exceeds length {n}")));
    }
    if q < 2 {
        return Err(Error::InvalidRange(format!("field size {q} is below 2")));
    }
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut pow: u128 = 1;
    for i in 0..=t {
        if i > 0 {
            binom = binom
                .checked_mul((n - i + 1) as u128)
                .ok_or(Error::Overflow("binomial coefficient"))?
                / i as u128;
            pow = pow
                .checked_mul(q as u128 - 1)
                .ok_or(Error::Overflow("power of q-1"))?;
        }
        let term = binom
            .checked_mul(pow)
            .ok_or(Error::Overflow("sphere term"))?;
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("sphere size"))?;
    }
    Ok(total)
}

/// All words of length `n` and weight at most `t`, ordered by weight and then
/// by mixed-radix value.
pub fn words_within(f: &FieldSpec, n: usize, t: usize) -> Vec<Word> {
    let mut out = vec![Word::zero(n)];
    for w in 1..=t.min(n) {
        let mut layer = Vec::new();
        let mut positions: Vec<usize> = (0..w).collect();
        loop {
            push_value_assignments(f, n, &positions, &mut layer);
            // next combination
            let mut i = w;
            while i > 0 && positions[i - 1] == n - w + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            positions[i - 1] += 1;
            for j in i..w {
                positions[j] = positions[j - 1] + 1;
            }
        }
        layer.sort();
        out.extend(layer);
    }
    out
}

fn push_value_assignments(f: &FieldSpec, n: usize, positions: &[usize], out: &mut Vec<Word>) {
    let base = f.q() as u64 - 1;
    let count = base.pow(positions.len() as u32);
    for mut code in 0..count {
        let mut word = Word::zero(n);
        for &p in positions.iter().rev() {
            word.set(p, f.element(code % base + 1).expect("nonzero residue"));
            code /= base;
        }
        out.push(word);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    /// A syndrome not reachable with the allowed number of changes.
    UncoveredSyndrome { syndrome: Word },
    /// A word farther than `t` from part `part`.
    FarFromPart { word: Word, part: usize },
}

/// Outcome of a verification predicate. Failures carry the first witness in
/// enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub witness: Option<Witness>,
    pub probabilistic: bool,
    /// Number of candidate words examined.
    pub work: u64,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
}

impl VerificationReport {
    fn exhaustive(witness: Option<Witness>, work: u64) -> Self {
        VerificationReport {
            pass: witness.is_none(),
            witness,
            probabilistic: false,
            work,
            samples: None,
            seed: None,
        }
    }
}

/// A `k x n` matrix over GF(q) with full row rank, paired with a change
/// budget `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StegoMatrix {
    field: FieldSpec,
    k: usize,
    n: usize,
    t: usize,
    rows: Vec<Word>,
    verified: bool,
}

impl StegoMatrix {
    pub fn new(field: FieldSpec, rows: Vec<Word>, t: usize) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidRange("matrix has no rows".into()));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::InvalidRange("matrix has no columns".into()));
        }
        linalg::validate_rows(&field, &rows, n)?;
        linalg::require_full_rank(&field, &rows)?;
        if t > n {
            return Err(Error::InvalidRange(format!("budget {t} exceeds length {n}")));
        }
        Ok(StegoMatrix {
            field,
            k,
            n,
            t,
            rows,
            verified: false,
        })
    }

    pub fn from_columns(field: FieldSpec, cols: &[Word], t: usize) -> Result<Self> {
        let k = cols.first().map_or(0, Word::len);
        for c in cols {
            check_len(k, c.len())?;
        }
        StegoMatrix::new(field, linalg::from_columns(cols, k), t)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Word> {
        linalg::columns(&self.rows)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Same matrix with a different change budget; clears the verified flag.
    pub fn with_t(mut self, t: usize) -> Result<Self> {
        if t > self.n {
            return Err(Error::InvalidRange(format!(
                "budget {t} exceeds length {}",
                self.n
            )));
        }
        self.t = t;
        self.verified = false;
        Ok(self)
    }

    pub fn mat_vec(&self, x: &Word) -> Result<Word> {
        check_len(self.n, x.len())?;
        linalg::mat_vec(&self.field, &self.rows, x)
    }

    /// Runs [`is_stego_matrix`] and marks the matrix verified on a pass.
    pub fn verify(mut self, cfg: &RunConfig) -> Result<Self> {
        let report = is_stego_matrix(&self, cfg)?;
        match report.witness {
            None => {
                self.verified = true;
                Ok(self)
            }
            Some(Witness::UncoveredSyndrome { syndrome }) => Err(Error::NotStegoMatrix {
                witness: syndrome,
                t: self.t,
            }),
            Some(Witness::FarFromPart { .. }) => unreachable!("matrix witnesses are syndromes"),
        }
    }
}

/// Enumerates weight-`<= t` words in canonical order and keeps the first
/// solution seen for each syndrome, which is the minimal-weight,
/// lexicographically smallest one.
fn solve_syndromes(h: &StegoMatrix, cfg: &RunConfig) -> Result<(Vec<Option<Word>>, u64)> {
    let sphere = sphere_size(h.n, h.t, h.field.q() as u64)?;
    let work = sphere
        .checked_mul(h.n as u128)
        .ok_or(Error::Overflow("enumeration size"))?;
    cfg.check_budget(work)?;
    let syndromes = h
        .field
        .space_size(h.k)
        .ok_or(Error::Overflow("syndrome space"))?;
    cfg.check_budget(syndromes)?;
    let mut slots: Vec<Option<Word>> = vec![None; syndromes as usize];
    let mut filled = 0usize;
    let mut examined = 0u64;
    for z in words_within(&h.field, h.n, h.t) {
        examined += 1;
        let s = h.field.word_index(&h.mat_vec(&z)?) as usize;
        if slots[s].is_none() {
            slots[s] = Some(z);
            filled += 1;
            if filled == slots.len() {
                break;
            }
        }
    }
    Ok((slots, examined))
}

/// Checks that every syndrome is a combination of at most `t` columns.
pub fn is_stego_matrix(h: &StegoMatrix, cfg: &RunConfig) -> Result<VerificationReport> {
    let (slots, work) = solve_syndromes(h, cfg)?;
    let witness = slots
        .iter()
        .position(Option::is_none)
        .map(|i| Witness::UncoveredSyndrome {
            syndrome: h.field.word_from_index(i as u64, h.k),
        });
    Ok(VerificationReport::exhaustive(witness, work))
}

/// Lookup from syndrome to a minimal-weight change vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodingTable {
    field: FieldSpec,
    k: usize,
    n: usize,
    entries: Vec<Word>,
}

impl CodingTable {
    /// Builds a table from explicit `(syndrome, change)` pairs, checking
    /// completeness and the syndrome condition against `h`.
    pub fn from_pairs(h: &StegoMatrix, pairs: Vec<(Word, Word)>) -> Result<Self> {
        let size = h.field.space_size(h.k).ok_or(Error::Overflow("table size"))? as usize;
        let mut entries: Vec<Option<Word>> = vec![None; size];
        for (y, z) in pairs {
            check_len(h.k, y.len())?;
            if h.mat_vec(&z)? != y {
                return Err(Error::Parse(format!("table entry {y} -> {z} has wrong syndrome")));
            }
            if z.weight() > h.t {
                return Err(Error::Parse(format!("table entry {y} -> {z} exceeds budget")));
            }
            let i = h.field.word_index(&y) as usize;
            if entries[i].replace(z).is_some() {
                return Err(Error::Parse(format!("duplicate table entry for {y}")));
            }
        }
        let entries = entries
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                e.ok_or_else(|| {
                    Error::Parse(format!(
                        "table has no entry for {}",
                        h.field.word_from_index(i as u64, h.k)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CodingTable {
            field: h.field.clone(),
            k: h.k,
            n: h.n,
            entries,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn get(&self, y: &Word) -> Result<&Word> {
        check_len(self.k, y.len())?;
        Ok(&self.entries[self.field.word_index(y) as usize])
    }

    /// `(syndrome, change)` pairs in mixed-radix syndrome order.
    pub fn iter(&self) -> impl Iterator<Item = (Word, &Word)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, z)| (self.field.word_from_index(i as u64, self.k), z))
    }

    pub fn entries(&self) -> &[Word] {
        &self.entries
    }
}

pub fn build_coding_table(h: &StegoMatrix, cfg: &RunConfig) -> Result<CodingTable> {
    let (slots, _) = solve_syndromes(h, cfg)?;
    let entries = slots
        .into_iter()
        .enumerate()
        .map(|(i, z)| {
            z.ok_or_else(|| Error::NotStegoMatrix {
                witness: h.field.word_from_index(i as u64, h.k),
                t: h.t,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CodingTable {
        field: h.field.clone(),
        k: h.k,
        n: h.n,
        entries,
    })
}

/// Moves cover `x` into the class of message `y`: `x + table[y - H x^T]`.
pub fn embed(h: &StegoMatrix, table: &CodingTable, x: &Word, y: &Word) -> Result<Word> {
    check_len(h.n, x.len())?;
    check_len(h.k, y.len())?;
    check_len(h.n, table.n)?;
    let s = h.field.sub_words(y, &h.mat_vec(x)?)?;
    h.field.add_words(x, table.get(&s)?)
}

pub fn extract(h: &StegoMatrix, x: &Word) -> Result<Word> {
    h.mat_vec(x)
}

/// A partition `{I_0, ..., I_{M-1}}` of GF(q)^n with a distance budget `t`.
/// Construction checks that the parts are non-empty, disjoint and cover the
/// space; whether they form a stego-code is [`is_stego_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCode {
    field: FieldSpec,
    n: usize,
    t: usize,
    parts: Vec<Vec<Word>>,
}

impl PartitionCode {
    pub fn new(field: FieldSpec, n: usize, t: usize, mut parts: Vec<Vec<Word>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedPartition("length must be positive".into()));
        }
        if t > n {
            return Err(Error::MalformedPartition(format!(
                "radius {t} exceeds length {n}"
            )));
        }
        let space = field
            .space_size(n)
            .filter(|&s| s <= usize::MAX as u128)
            .ok_or(Error::Overflow("partition space"))? as usize;
        let mut owner: HashMap<&Word, usize> = HashMap::with_capacity(space);
        for part in parts.iter_mut() {
            part.sort();
        }
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::MalformedPartition(format!("part {i} is empty")));
            }
            for w in part {
                if w.len() != n || !field.contains(w) {
                    return Err(Error::MalformedPartition(format!(
                        "word {w} in part {i} is not in GF({})^{n}",
                        field.q()
                    )));
                }
                if let Some(j) = owner.insert(w, i) {
                    return Err(Error::MalformedPartition(format!(
                        "word {w} appears in parts {j} and {i}"
                    )));
                }
            }
        }
        if owner.len() != space {
            let missing = field
                .all_words(n)
                .find(|w| !owner.contains_key(w))
                .expect("a gap exists");
            return Err(Error::MalformedPartition(format!(
                "word {missing} belongs to no part"
            )));
        }
        Ok(PartitionCode { field, n, t, parts })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Vec<Word>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[Word] {
        &self.parts[i]
    }

    pub fn with_t(mut self, t: usize) -> Result<Self> {
        if t > self.n {
            return Err(Error::InvalidRange(format!("radius {t} exceeds length {}", self.n)));
        }
        self.t = t;
        Ok(self)
    }

    /// Parts as a canonical set of sets, for order-insensitive comparison.
    pub fn canonical_parts(&self) -> Vec<Vec<Word>> {
        let mut parts = self.parts.clone();
        parts.sort();
        parts
    }

    fn owner_index(&self) -> Vec<u32> {
        let mut owner = vec![0u32; self.field.space_size(self.n).unwrap_or(0) as usize];
        for (i, part) in self.parts.iter().enumerate() {
            for w in part {
                owner[self.field.word_index(w) as usize] = i as u32;
            }
        }
        owner
    }

    fn owner_map(&self) -> HashMap<&Word, u32> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.iter().map(move |w| (w, i as u32)))
            .collect()
    }
}

/// The classes `H^{-1}(y)`, indexed by the mixed-radix value of `y`.
pub fn partition_from_matrix(h: &StegoMatrix, cfg: &RunConfig) -> Result<PartitionCode> {
    cfg.check_budget_opt(h.field.space_size(h.n))?;
    let report = is_stego_matrix(h, cfg)?;
    if let Some(Witness::UncoveredSyndrome { syndrome }) = report.witness {
        return Err(Error::NotStegoMatrix {
            witness: syndrome,
            t: h.t,
        });
    }
    let m = h.field.space_size(h.k).ok_or(Error::Overflow("message space"))? as usize;
    let mut parts = vec![Vec::new(); m];
    for x in h.field.all_words(h.n) {
        let y = h.mat_vec(&x)?;
        parts[h.field.word_index(&y) as usize].push(x);
    }
    PartitionCode::new(h.field.clone(), h.n, h.t, parts)
}

/// Checks that every word lies within distance `t` of every part.
/// Exhaustive when `q^n` is within the enumeration cap, otherwise samples
/// `cfg.sample_count` uniform words and reports the result as probabilistic.
pub fn is_stego_partition(s: &PartitionCode, cfg: &RunConfig) -> VerificationReport {
    let f = &s.field;
    let offsets = words_within(f, s.n, s.t);
    let m = s.parts.len();
    let mut reached = vec![false; m];
    let mut work = 0u64;

    let mut first_unreached = |x: &Word, part_of: &dyn Fn(&Word) -> usize, work: &mut u64| {
        reached.iter_mut().for_each(|r| *r = false);
        let mut count = 0;
        for z in &offsets {
            *work += 1;
            let p = part_of(&f.add_words(x, z).expect("equal lengths"));
            if !reached[p] {
                reached[p] = true;
                count += 1;
                if count == m {
                    return None;
                }
            }
        }
        reached.iter().position(|r| !r)
    };

    let exhaustive = f.space_size(s.n).is_some_and(|sz| sz <= cfg.enumeration_cap);
    if exhaustive {
        let owner = s.owner_index();
        let part_of = |w: &Word| owner[f.word_index(w) as usize] as usize;
        for x in f.all_words(s.n) {
            if let Some(part) = first_unreached(&x, &part_of, &mut work) {
                return VerificationReport::exhaustive(
                    Some(Witness::FarFromPart { word: x, part }),
                    work,
                );
            }
        }
        VerificationReport::exhaustive(None, work)
    } else {
        let owner = s.owner_map();
        let part_of = |w: &Word| owner[w] as usize;
        let mut rng = cfg.rng();
        let mut witness = None;
        for _ in 0..cfg.sample_count {
            let x = Word::from_values((0..s.n).map(|_| rng.gen_range(0..f.q())));
            if let Some(part) = first_unreached(&x, &part_of, &mut work) {
                witness = Some(Witness::FarFromPart { word: x, part });
                break;
            }
        }
        VerificationReport {
            pass: witness.is_none(),
            witness,
            probabilistic: true,
            work,
            samples: Some(cfg.sample_count),
            seed: Some(cfg.rng_seed),
        }
    }
}

/// True when the number of parts meets the sphere-size bound with equality.
pub fn is_mle(s: &PartitionCode) -> bool {
    sphere_size(s.n, s.t, s.field.q() as u64).is_ok_and(|sz| sz == s.parts.len() as u128)
}
