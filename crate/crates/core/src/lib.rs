//! Steganographic codes over finite fields.
//!
//! A stego-code hides a message in a cover word by changing at most `t` of
//! its `n` symbols. The crate covers linear codes given by a stego-coding
//! matrix (embedding, extraction and verification), constructions and
//! length bounds, partition stego-codes, their correspondence with perfect
//! error-correcting codes, and rate/distortion measures.

pub mod cli;
pub mod config;
pub mod construct;
pub mod convert;
pub mod error;
pub mod field;
pub mod formats;
pub mod linalg;
pub mod metrics;
pub mod perfect;
pub mod stegocode;

pub use config::RunConfig;
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec, Word};
pub use stegocode::{
    build_coding_table, embed, extract, is_mle, is_stego_matrix, is_stego_partition,
    partition_from_matrix, sphere_size, CodingTable, PartitionCode, StegoMatrix,
    VerificationReport, Witness,
};
