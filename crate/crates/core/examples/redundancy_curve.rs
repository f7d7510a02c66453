//! Hiding redundancy of F5 codes and the rate/distortion curve as CSV.
//!
//! `cargo run --example redundancy_curve > curve.csv` keeps only the CSV on
//! stdout; the per-code summary goes to stderr.

use stegocodes::construct::f5_matrix;
use stegocodes::metrics::{curve_csv, redundancy_curve, redundancy_report};
use stegocodes::{build_coding_table, Result, RunConfig};

fn main() -> Result<()> {
    let cfg = RunConfig::default();
    eprintln!("k  n     density    rate       redundancy  efficiency");
    for k in 1..=8 {
        let h = f5_matrix(k)?;
        let table = build_coding_table(&h, &cfg)?;
        let r = redundancy_report(&h, &table)?;
        eprintln!(
            "{k}  {:<4}  {:>3}/{:<5}  {:.6}   {:.6}    {:.4}",
            r.n, r.change_density_numer, r.change_density_denom, r.message_rate, r.redundancy,
            r.embedding_efficiency
        );
    }
    print!("{}", curve_csv(&redundancy_curve(10)?));
    Ok(())
}
