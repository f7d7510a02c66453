//! Shortest stego-coding matrices found by exhaustive search, sandwiched
//! between the sphere-covering lower bound and the direct-sum length.

use stegocodes::construct::{bound_direct_sum_eq5, bound_min_length_eq2, tth_dimension_bruteforce};
use stegocodes::metrics::krotov_lower_bound;
use stegocodes::{Result, RunConfig};

fn main() -> Result<()> {
    let cfg = RunConfig::default();
    println!("q  k  t  lower  optimum  direct-sum");
    for (q, k, t) in [(2, 2, 1), (2, 3, 1), (2, 3, 2), (2, 4, 1), (2, 4, 2), (3, 2, 1), (3, 3, 2)] {
        let lower = bound_min_length_eq2(q, k, t)?;
        let upper = bound_direct_sum_eq5(q, k, t)?;
        let best = tth_dimension_bruteforce(q, k, t, upper as usize, &cfg)?;
        println!(
            "{q}  {k}  {t}  {lower:<5}  {:<7}  {upper}",
            best.map_or("-".into(), |n| n.to_string())
        );
    }

    println!("\nlower bound on the number of binary perfect codes:");
    for n in [7, 15, 31, 63] {
        let b = krotov_lower_bound(n)?;
        println!("  n={n:<3} log2 >= {:.3}", b.log2);
    }
    Ok(())
}
