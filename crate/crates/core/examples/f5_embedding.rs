//! Matrix embedding with the F5 family: k message bits hidden in
//! 2^k - 1 cover bits with at most one change.

use stegocodes::construct::f5_matrix;
use stegocodes::formats::render_matrix;
use stegocodes::{build_coding_table, embed, extract, Result, RunConfig};

fn main() -> Result<()> {
    let cfg = RunConfig::default();
    let h = f5_matrix(3)?.verify(&cfg)?;
    print!("{}", render_matrix(&h));

    let table = build_coding_table(&h, &cfg)?;
    let f = h.field();
    let cover = f.parse_word("1001000")?;
    for message in ["000", "110", "101", "111"] {
        let y = f.parse_word(message)?;
        let stego = embed(&h, &table, &cover, &y)?;
        let read = extract(&h, &stego)?;
        println!(
            "cover {} message {} -> {} ({} change(s)), extracted {}",
            f.format_word(&cover),
            message,
            f.format_word(&stego),
            cover.distance(&stego)?,
            f.format_word(&read)
        );
    }
    Ok(())
}
