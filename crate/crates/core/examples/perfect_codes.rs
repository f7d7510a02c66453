use stegocodes::perfect::{
    golay_binary, golay_ternary, hamming_code, repetition_code, vasilev_code, verify_perfect,
    LinearityWitness, PerfectnessCertificate,
};
use stegocodes::{FieldSpec, Result, RunConfig};

fn show(name: &str, c: &PerfectnessCertificate) {
    println!(
        "{name:<18} n={:<3} M={:<8} d={:<2} t={} M*V(n,t)={} q^n={} perfect={}",
        c.n,
        c.m,
        c.d.map_or("-".into(), |d| d.to_string()),
        c.t,
        c.sphere_packing_lhs,
        c.space_size,
        c.passes()
    );
}

fn main() -> Result<()> {
    let cfg = RunConfig::default();
    for (r, q) in [(3, 2), (4, 2), (2, 3), (3, 3), (2, 4), (2, 5)] {
        let code = hamming_code(r, &FieldSpec::new(q)?)?;
        show(&format!("Hamming r={r} q={q}"), &code.certificate(1, &cfg)?);
    }
    show("binary Golay", &golay_binary()?.certificate(3, &cfg)?);
    show("ternary Golay", &golay_ternary()?.certificate(2, &cfg)?);
    for t in 1..=3 {
        show(&format!("repetition t={t}"), &verify_perfect(&repetition_code(t), t, &cfg)?);
    }

    let v = vasilev_code(3, &cfg)?;
    show("Vasil'ev m=3", &verify_perfect(&v, 1, &cfg)?);
    if let Some(LinearityWitness::Sum { a, b }) = v.linearity_witness() {
        let f = v.field();
        let sum = f.add_words(&a, &b)?;
        println!(
            "Vasil'ev code is not linear: {} + {} = {} is not a codeword",
            f.format_word(&a),
            f.format_word(&b),
            f.format_word(&sum)
        );
    }
    Ok(())
}
