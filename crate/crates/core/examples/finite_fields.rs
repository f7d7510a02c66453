//! Arithmetic in the supported small fields, including the extension
//! fields GF(4), GF(8), GF(9) and GF(16).
//!
//! Run with `cargo run --example finite_fields`.

use stegocodes::{FieldSpec, Result};

fn main() -> Result<()> {
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let f = FieldSpec::new(q)?;
        f.check_axioms().expect("field axioms");
        let modulus = f
            .modulus()
            .map(|m| format!(" modulus coefficients {m:?}"))
            .unwrap_or_default();
        println!(
            "GF({q}): characteristic {}, degree {}{modulus}",
            f.characteristic(),
            f.degree()
        );
    }

    let f4 = FieldSpec::new(4)?;
    println!("\nGF(4) multiplication (elements 0..3, 2 = x, 3 = x + 1):");
    for a in f4.elements() {
        let row: Vec<String> = f4.elements().map(|b| f4.mul(a, b).value().to_string()).collect();
        println!("  {}", row.join(" "));
    }

    let f11 = FieldSpec::new(11)?;
    let w = f11.parse_word("10,0,3,7")?;
    println!(
        "\nword {} over GF(11) has weight {} and index {}",
        f11.format_word(&w),
        w.weight(),
        f11.word_index(&w)
    );
    Ok(())
}
