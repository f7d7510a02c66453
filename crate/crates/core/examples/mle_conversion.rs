//! Turning perfect codes into maximum-length-embeddable stego-codes by
//! coset decomposition, and back.

use stegocodes::convert::{mle_to_perfect, perfect_to_mle, perfect_to_mle_streaming};
use stegocodes::formats::render_partition;
use stegocodes::perfect::{golay_binary, hamming_code, repetition_code};
use stegocodes::{is_mle, FieldSpec, Result, RunConfig};

fn main() -> Result<()> {
    let cfg = RunConfig::default();

    let res = perfect_to_mle(&repetition_code(1), 1, &cfg)?;
    println!("repetition code of length 3 as a stego-code:");
    print!("{}", render_partition(&res.partition));

    let hamming = hamming_code(3, &FieldSpec::binary())?.codewords(&cfg)?;
    let res = perfect_to_mle(&hamming, 1, &cfg)?;
    let certs = mle_to_perfect(&res.partition, &cfg)?;
    println!(
        "\nHamming(7,4): {} parts, MLE = {}, every part perfect = {}",
        res.partition.m(),
        is_mle(&res.partition),
        certs.iter().all(|c| c.passes())
    );

    // 2^23 words is too many to list comfortably, so keep the cosets implicit.
    let mle = perfect_to_mle_streaming(&golay_binary()?, 3, &cfg)?;
    let sampled = RunConfig::new(cfg.enumeration_cap, 20_000, 7)?;
    let report = mle.verify_sampled(&sampled)?;
    println!(
        "binary Golay: {} cosets, MLE = {}, sampled check pass = {} ({} samples, seed {:?})",
        mle.m(),
        mle.is_mle(),
        report.pass,
        report.work,
        report.seed
    );
    println!("exact syndrome check pass = {}", mle.verify_by_syndromes().pass);
    Ok(())
}
