//! Arithmetic in GF(q) and vectors over it.
//!
//! Prime fields use modular arithmetic directly. The prime powers 4, 8, 9 and
//! 16 are built from the first monic polynomial (in base-`p` coefficient
//! order) whose quotient ring is a field; elements of an extension field are
//! indexed by their coefficient vector read as a base-`p` number, constant
//! term first.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field size whose axioms are checked exhaustively at construction.
const AXIOM_CHECK_LIMIT: u32 = 16;

/// Extension degrees accepted for non-prime `q`.
const SUPPORTED_PRIME_POWERS: [u32; 4] = [4, 8, 9, 16];

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A vector over GF(q). Ordering is lexicographic by residue, which for
/// words of equal length is the mixed-radix order with the leftmost
/// element most significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<FieldElement>);

impl Word {
    pub fn new(elems: Vec<FieldElement>) -> Self {
        Word(elems)
    }

    pub fn zero(n: usize) -> Self {
        Word(vec![FieldElement::ZERO; n])
    }

    /// Builds a word from raw residues without field validation.
    pub fn from_values<I: IntoIterator<Item = u32>>(values: I) -> Self {
        Word(values.into_iter().map(FieldElement).collect())
    }

    /// The word with a single nonzero `value` at `pos`.
    pub fn unit(n: usize, pos: usize, value: FieldElement) -> Self {
        let mut w = Word::zero(n);
        w.0[pos] = value;
        w
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elems(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn get(&self, i: usize) -> FieldElement {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, v: FieldElement) {
        self.0[i] = v;
    }

    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|e| e.0)
    }

    /// Hamming weight: the number of nonzero positions.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    /// Hamming distance. Equals the weight of the difference in any field,
    /// since `x_i - y_i = 0` exactly when `x_i = y_i`.
    pub fn distance(&self, other: &Word) -> Result<usize> {
        check_len(self.len(), other.len())?;
        Ok(self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count())
    }

    pub fn into_inner(self) -> Vec<FieldElement> {
        self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|e| e.0 < 10) {
            for e in &self.0 {
                write!(f, "{}", e.0)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|e| e.0.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, got })
    }
}

#[derive(Debug)]
struct ExtTables {
    /// Coefficients of the monic modulus, constant term first, leading 1 omitted.
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

#[derive(Debug)]
struct FieldInner {
    q: u32,
    p: u32,
    r: u32,
    ext: Option<ExtTables>,
}

/// The finite field GF(q). Cheap to clone; tables are shared.
#[derive(Debug, Clone)]
pub struct FieldSpec(Arc<FieldInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.0.q == other.0.q
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 || q > u32::MAX as u64 / 2 {
            return Err(Error::UnsupportedField(q));
        }
        let q32 = q as u32;
        let spec = if is_prime(q) {
            FieldSpec(Arc::new(FieldInner {
                q: q32,
                p: q32,
                r: 1,
                ext: None,
            }))
        } else if SUPPORTED_PRIME_POWERS.contains(&q32) {
            let (p, r) = prime_power(q32).ok_or(Error::UnsupportedField(q))?;
            let ext = build_extension(p, r).ok_or(Error::UnsupportedField(q))?;
            FieldSpec(Arc::new(FieldInner {
                q: q32,
                p,
                r,
                ext: Some(ext),
            }))
        } else {
            return Err(Error::UnsupportedField(q));
        };
        if q32 <= AXIOM_CHECK_LIMIT {
            spec.check_axioms()
                .map_err(|e| Error::Construction(format!("GF({q}): {e}")))?;
        }
        Ok(spec)
    }

    pub fn binary() -> Self {
        FieldSpec::new(2).expect("GF(2)")
    }

    pub fn ternary() -> Self {
        FieldSpec::new(3).expect("GF(3)")
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.r
    }

    /// Modulus coefficients (constant term first, monic leading term omitted)
    /// for extension fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.ext.as_ref().map(|t| t.modulus.as_slice())
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value < self.0.q as u64 {
            Ok(FieldElement(value as u32))
        } else {
            Err(Error::InvalidElement {
                value,
                q: self.0.q as u64,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.0.q).map(FieldElement)
    }

    #[inline]
    fn idx(&self, a: FieldElement, b: FieldElement) -> usize {
        a.0 as usize * self.0.q as usize + b.0 as usize
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.0.ext {
            None => FieldElement(((a.0 as u64 + b.0 as u64) % self.0.q as u64) as u32),
            Some(t) => FieldElement(t.add[self.idx(a, b)] as u32),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.0.ext {
            None => {
                if a.0 == 0 {
                    a
                } else {
                    FieldElement(self.0.q - a.0)
                }
            }
            Some(t) => FieldElement(t.neg[a.0 as usize] as u32),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.0.ext {
            None => FieldElement(((a.0 as u64 * b.0 as u64) % self.0.q as u64) as u32),
            Some(t) => FieldElement(t.mul[self.idx(a, b)] as u32),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        match &self.0.ext {
            None => Ok(FieldElement(
                mod_pow(a.0 as u64, self.0.q as u64 - 2, self.0.q as u64) as u32,
            )),
            Some(t) => Ok(FieldElement(t.inv[a.0 as usize] as u32)),
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.0.iter().all(|e| e.0 < self.0.q)
    }

    pub fn validate(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|e| e.0 >= self.0.q) {
            Some(e) => Err(Error::InvalidElement {
                value: e.0 as u64,
                q: self.0.q as u64,
            }),
            None => Ok(()),
        }
    }

    pub fn add_words(&self, x: &Word, y: &Word) -> Result<Word> {
        check_len(x.len(), y.len())?;
        Ok(Word(
            x.0.iter().zip(&y.0).map(|(&a, &b)| self.add(a, b)).collect(),
        ))
    }

    pub fn sub_words(&self, x: &Word, y: &Word) -> Result<Word> {
        check_len(x.len(), y.len())?;
        Ok(Word(
            x.0.iter().zip(&y.0).map(|(&a, &b)| self.sub(a, b)).collect(),
        ))
    }

    pub fn scale_word(&self, c: FieldElement, x: &Word) -> Word {
        Word(x.0.iter().map(|&a| self.mul(c, a)).collect())
    }

    pub fn dot(&self, x: &Word, y: &Word) -> Result<FieldElement> {
        check_len(x.len(), y.len())?;
        Ok(x
            .0
            .iter()
            .zip(&y.0)
            .fold(FieldElement::ZERO, |acc, (&a, &b)| {
                self.add(acc, self.mul(a, b))
            }))
    }

    /// `q^n` if it fits in a `u128`.
    pub fn space_size(&self, n: usize) -> Option<u128> {
        (self.0.q as u128).checked_pow(n.try_into().ok()?)
    }

    /// Mixed-radix value of `w`, leftmost element most significant.
    pub fn word_index(&self, w: &Word) -> u64 {
        let q = self.0.q as u64;
        w.0.iter().fold(0u64, |acc, e| acc * q + e.0 as u64)
    }

    pub fn word_from_index(&self, mut index: u64, n: usize) -> Word {
        let q = self.0.q as u64;
        let mut elems = vec![FieldElement::ZERO; n];
        for slot in elems.iter_mut().rev() {
            *slot = FieldElement((index % q) as u32);
            index /= q;
        }
        Word(elems)
    }

    /// All of GF(q)^n in mixed-radix order.
    pub fn all_words(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        let total = self.space_size(n).unwrap_or(u128::MAX) as u64;
        (0..total).map(move |i| self.word_from_index(i, n))
    }

    /// Text form: a digit string for `q <= 10`, comma-separated integers otherwise.
    pub fn format_word(&self, w: &Word) -> String {
        if self.0.q <= 10 {
            w.0.iter().map(|e| char::from(b'0' + e.0 as u8)).collect()
        } else {
            let parts: Vec<String> = w.0.iter().map(|e| e.0.to_string()).collect();
            parts.join(",")
        }
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        let values: Vec<u64> = if self.0.q <= 10 {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(u64::from)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in word {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|e| Error::Parse(format!("bad element {t:?}: {e}")))
                })
                .collect::<Result<_>>()?
        };
        let elems = values
            .into_iter()
            .map(|v| self.element(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(elems))
    }

    /// Exhaustive check of the field axioms.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let els: Vec<FieldElement> = self.elements().collect();
        let zero = FieldElement::ZERO;
        let one = FieldElement::ONE;
        for &a in &els {
            if self.add(a, zero) != a || self.mul(a, one) != a {
                return Err(format!("identity fails at {a}"));
            }
            if self.add(a, self.neg(a)) != zero {
                return Err(format!("additive inverse fails at {a}"));
            }
            if !a.is_zero() {
                let inv = self.inv(a).map_err(|e| e.to_string())?;
                if self.mul(a, inv) != one {
                    return Err(format!("multiplicative inverse fails at {a}"));
                }
            }
            for &b in &els {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("commutativity fails at ({a}, {b})"));
                }
                for &c in &els {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return Err(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(format!("distributivity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, r)` with `q = p^r` and `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut r) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p, r))
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn digits(mut v: u32, p: u32, r: u32) -> Vec<u32> {
    (0..r)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Product of two residues modulo a monic polynomial of degree `r`.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let r = modulus.len();
    let mut prod = vec![0u32; 2 * r];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // x^r = -(m_0 + m_1 x + ... + m_{r-1} x^{r-1})
    for deg in (r..2 * r).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &m) in modulus.iter().enumerate() {
            let idx = deg - r + i;
            prod[idx] = (prod[idx] + (p - c) * m % p) % p;
        }
    }
    prod.truncate(r);
    prod
}

fn build_extension(p: u32, r: u32) -> Option<ExtTables> {
    let q = p.pow(r);
    let qs = q as usize;
    let add: Vec<u8> = (0..q)
        .flat_map(|a| {
            (0..q).map(move |b| {
                let s: Vec<u32> = digits(a, p, r)
                    .iter()
                    .zip(digits(b, p, r))
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                undigits(&s, p) as u8
            })
        })
        .collect();
    let neg: Vec<u8> = (0..q)
        .map(|a| {
            let s: Vec<u32> = digits(a, p, r).iter().map(|&x| (p - x) % p).collect();
            undigits(&s, p) as u8
        })
        .collect();
    // Candidate moduli in base-p order of their lower coefficients; a zero
    // constant term is always reducible.
    for cand in 0..q {
        let modulus = digits(cand, p, r);
        if modulus[0] == 0 {
            continue;
        }
        let mul: Vec<u8> = (0..q)
            .flat_map(|a| {
                let modulus = &modulus;
                (0..q).map(move |b| {
                    undigits(
                        &poly_mulmod(&digits(a, p, r), &digits(b, p, r), modulus, p),
                        p,
                    ) as u8
                })
            })
            .collect();
        let mut inv = vec![0u8; qs];
        let mut is_field = true;
        for a in 1..qs {
            match (1..qs).find(|&b| mul[a * qs + b] == 1) {
                Some(b) => inv[a] = b as u8,
                None => {
                    is_field = false;
                    break;
                }
            }
        }
        if is_field {
            return Some(ExtTables {
                modulus,
                add,
                mul,
                neg,
                inv,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: u32) -> FieldElement {
        FieldElement(v)
    }

    #[test]
    fn prime_field_products() {
        let f3 = FieldSpec::new(3).unwrap();
        assert_eq!(f3.mul(fe(2), fe(2)), fe(1));
        let f5 = FieldSpec::new(5).unwrap();
        assert_eq!(f5.mul(fe(3), fe(0)), fe(0));
        for a in f5.elements() {
            assert_eq!(f5.mul(a, FieldElement::ONE), a);
        }
    }

    #[test]
    fn gf4_x_squared_is_x_plus_one() {
        // Independent search: x^2 = a*x + b must make {c0 + c1 x} a field.
        let mut found = Vec::new();
        for a in 0..2u32 {
            for b in 0..2u32 {
                let mul = |u: (u32, u32), v: (u32, u32)| {
                    let c0 = u.0 * v.0;
                    let c1 = u.0 * v.1 + u.1 * v.0;
                    let c2 = u.1 * v.1;
                    ((c0 + c2 * b) % 2, (c1 + c2 * a) % 2)
                };
                let nonzero = [(1, 0), (0, 1), (1, 1)];
                let field = nonzero
                    .iter()
                    .all(|&u| nonzero.iter().any(|&v| mul(u, v) == (1, 0)));
                if field {
                    found.push((a, b));
                }
            }
        }
        assert_eq!(found, vec![(1, 1)]);

        let f4 = FieldSpec::new(4).unwrap();
        // x has index 2 (coefficients [0, 1]); x + 1 has index 3.
        assert_eq!(f4.mul(fe(2), fe(2)), fe(3));
        assert_eq!(f4.modulus(), Some(&[1, 1][..]));
    }

    #[test]
    fn inverses() {
        assert_eq!(FieldSpec::new(2).unwrap().inv(fe(1)).unwrap(), fe(1));
        assert_eq!(FieldSpec::new(5).unwrap().inv(fe(2)).unwrap(), fe(3));
        let f7 = FieldSpec::new(7).unwrap();
        let brute = (1..7).find(|b| 3 * b % 7 == 1).unwrap();
        assert_eq!(brute, 5);
        assert_eq!(f7.inv(fe(3)).unwrap(), fe(brute));
        assert_eq!(f7.inv(fe(0)), Err(Error::ZeroInverse));
    }

    #[test]
    fn axioms_hold_for_all_small_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldSpec::new(q).unwrap();
            assert_eq!(f.check_axioms(), Ok(()), "GF({q})");
            let (p, r) = prime_power(q as u32).unwrap();
            assert_eq!((f.characteristic(), f.degree()), (p, r));
        }
    }

    #[test]
    fn unsupported_sizes_rejected() {
        for q in [0u64, 1, 6, 10, 12, 25, 27, 32] {
            assert_eq!(FieldSpec::new(q).unwrap_err(), Error::UnsupportedField(q));
        }
        assert!(FieldSpec::new(10007).is_ok());
    }

    #[test]
    fn weights_and_distances() {
        assert_eq!(Word::zero(3).weight(), 0);
        assert_eq!(Word::from_values([1, 0, 1, 1, 0, 0, 0]).weight(), 3);
        assert_eq!(Word::from_values([0, 2, 1, 0]).weight(), 2);

        let x = Word::from_values([1, 0, 0, 1, 0, 0, 0]);
        let y = Word::from_values([1, 0, 1, 1, 0, 0, 0]);
        assert_eq!(x.distance(&x).unwrap(), 0);
        assert_eq!(x.distance(&y).unwrap(), 1);
        let a = Word::from_values([0, 1, 2]);
        let b = Word::from_values([2, 1, 0]);
        assert_eq!(a.distance(&b).unwrap(), 2);
        assert_eq!(
            a.distance(&x),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 7
            })
        );
    }

    #[test]
    fn distance_is_weight_of_difference() {
        for q in [2u64, 3, 4] {
            let f = FieldSpec::new(q).unwrap();
            let words: Vec<Word> = f.all_words(3).collect();
            for x in &words {
                for y in &words {
                    let d = f.sub_words(x, y).unwrap().weight();
                    assert_eq!(x.distance(y).unwrap(), d);
                }
            }
        }
    }

    #[test]
    fn word_text_forms() {
        let f2 = FieldSpec::binary();
        let w = f2.parse_word("1001000").unwrap();
        assert_eq!(w, Word::from_values([1, 0, 0, 1, 0, 0, 0]));
        assert_eq!(f2.format_word(&w), "1001000");
        assert!(f2.parse_word("102").is_err());

        let f11 = FieldSpec::new(11).unwrap();
        let w = f11.parse_word("10,0,3").unwrap();
        assert_eq!(f11.format_word(&w), "10,0,3");
        assert!(f11.parse_word("11,0").is_err());
    }

    #[test]
    fn mixed_radix_index_round_trips() {
        let f3 = FieldSpec::ternary();
        for i in 0..81u64 {
            let w = f3.word_from_index(i, 4);
            assert_eq!(f3.word_index(&w), i);
        }
        assert_eq!(f3.word_index(&Word::from_values([1, 0, 2])), 11);
        let words: Vec<Word> = f3.all_words(3).collect();
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }
}
