//! Stego-coding matrices for larger radii built as direct sums of
//! projective blocks, compared with the length bounds.

use stegocodes::construct::{
    bound_direct_sum_eq5, bound_min_length_eq2, direct_sum_construct, DirectSumPlan,
};
use stegocodes::{is_stego_matrix, Result, RunConfig};

fn main() -> Result<()> {
    let cfg = RunConfig::default();
    println!("q  k  t  parts        n  lower  upper  verified");
    for (q, k, t) in [(2, 4, 2), (2, 6, 2), (2, 6, 3), (3, 4, 2), (4, 3, 1), (5, 4, 2)] {
        let plan = DirectSumPlan::balanced(q, k, t)?;
        let h = direct_sum_construct(&plan)?;
        let report = is_stego_matrix(&h, &cfg)?;
        println!(
            "{q}  {k}  {t}  {:<11}  {:<2} {:<6} {:<6} {}",
            format!("{:?}", plan.parts()),
            h.n(),
            bound_min_length_eq2(q, k, t)?,
            bound_direct_sum_eq5(q, k, t)?,
            report.pass
        );
    }

    // An explicit split works too.
    let h = direct_sum_construct(&DirectSumPlan::new(2, 5, 2, vec![3, 2])?)?.verify(&cfg)?;
    println!("\nparts [3, 2] give a {}x{} matrix:", h.k(), h.n());
    for row in h.rows() {
        println!("  {}", h.field().format_word(row));
    }
    Ok(())
}
