use thiserror::Error;

use crate::field::Word;
use crate::perfect::PerfectnessCertificate;
use crate::stegocode::VerificationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("field of size {0} is not supported (primes and 4, 8, 9, 16 only)")]
    UnsupportedField(u64),

    #[error("element {value} is not valid in GF({q})")]
    InvalidElement { value: u64, q: u64 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("work of {needed} exceeds the enumeration cap {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },

    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },

    #[error("not a stego-coding matrix: syndrome {witness} needs more than {t} changes")]
    NotStegoMatrix { witness: Word, t: usize },

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("partition is not a stego-code: {0:?}")]
    NotStegoPartition(Box<VerificationReport>),

    #[error("code is not perfect at radius {}", .0.t)]
    NotPerfect(Box<PerfectnessCertificate>),

    #[error("partition has {parts} parts but the sphere size is {sphere}; not MLE")]
    NotMle { parts: u128, sphere: u128 },

    #[error("part {part} of the partition is not a perfect code")]
    PartCertificateFailure {
        part: usize,
        certificate: Box<PerfectnessCertificate>,
    },

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    #[error("invalid direct-sum plan: {0}")]
    InvalidPlan(String),

    #[error("constructed code failed self-verification: {0}")]
    Construction(String),

    #[error("parse error: {0}")]
    Parse(String),
}
