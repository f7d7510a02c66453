//! Which (n, M, t) parameters over GF(q) can belong to an MLE stego-code.

use stegocodes::convert::{classify_mle, Classification};
use stegocodes::{sphere_size, Result};

fn main() -> Result<()> {
    for q in [2u64, 3, 4] {
        println!("q = {q}");
        for n in 1..=25u64 {
            for t in 0..=n {
                let m = sphere_size(n as usize, t as usize, q)?;
                match classify_mle(n, m, t, q) {
                    Classification::Impossible | Classification::Trivial => {}
                    class => println!("  n={n:<2} t={t} M={m:<6} {class:?}"),
                }
            }
        }
    }
    println!("\n(7, 9, 1) over GF(2): {:?}", classify_mle(7, 9, 1, 2));
    println!("(5, 16, 2) over GF(2): {:?}", classify_mle(5, 16, 2, 2));
    Ok(())
}
