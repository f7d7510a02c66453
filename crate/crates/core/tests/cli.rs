use std::fs;
use std::path::Path;

use stegocodes::cli::run;
use stegocodes::formats;
use stegocodes::perfect::PerfectnessCertificate;
use stegocodes::VerificationReport;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn stego(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stegocode").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn f5_construct_embed_extract() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.toml");
    let r = stego(&["construct", "--family", "f5", "--k", "3", "--out", p(&h)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("verified=pass") && r.out.contains("n=7"));
    let text = fs::read_to_string(&h).unwrap();
    assert!(text.contains(r#"rows = ["0001111", "0110011", "1010101"]"#));

    let r = stego(&["embed", "--matrix", p(&h), "--cover", "1001000", "--message", "110"]);
    assert_eq!((r.code, r.out.as_str()), (0, "1011000 changes=1\n"));
    let r = stego(&["extract", "--matrix", p(&h), "--stego", "1011000"]);
    assert_eq!((r.code, r.out.as_str()), (0, "110\n"));
    // 1001000 already carries syndrome 101
    let r = stego(&["embed", "--matrix", p(&h), "--cover", "1001000", "--message", "101"]);
    assert_eq!(r.out, "1001000 changes=0\n");

    let r = stego(&["embed", "--matrix", p(&h), "--cover", "100100", "--message", "110"]);
    assert_ne!(r.code, 0);
    assert!(r.err.contains("error"));
}

#[test]
fn construct_direct_sums() {
    let r = stego(&["construct", "--q", "2", "--k", "4", "--t", "2", "--parts", "2,2"]);
    assert_eq!(r.code, 0);
    let h = formats::parse_matrix(&r.out).unwrap();
    assert_eq!((h.k(), h.n(), h.t()), (4, 6, 2));

    let r = stego(&["construct", "--q", "3", "--k", "2", "--t", "1"]);
    assert_eq!(r.code, 0);
    let h = formats::parse_matrix(&r.out).unwrap();
    assert_eq!((h.k(), h.n()), (2, 4));

    let r = stego(&["construct", "--q", "2", "--k", "4", "--t", "2", "--parts", "3,2"]);
    assert_ne!(r.code, 0);
    let r = stego(&["construct", "--q", "6", "--k", "2", "--t", "1"]);
    assert_ne!(r.code, 0);
}

#[test]
fn verify_kinds() {
    let dir = tempfile::tempdir().unwrap();
    let id = dir.path().join("id.toml");
    fs::write(&id, "q = 2\nk = 2\nn = 2\nt = 1\nrows = [\"10\", \"01\"]\n").unwrap();
    let r = stego(&["verify", "--kind", "matrix", "--input", p(&id), "--t", "1"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("pass=false") && r.out.contains("witness_syndrome=11"));
    let r = stego(&["verify", "--kind", "matrix", "--input", p(&id), "--t", "2"]);
    assert_eq!(r.code, 0);

    let part = dir.path().join("part.toml");
    fs::write(
        &part,
        "q = 2\nn = 3\nt = 1\nparts = [[\"000\", \"111\"], [\"001\", \"110\"], [\"010\", \"101\"], [\"100\", \"011\"]]\n",
    )
    .unwrap();
    let r = stego(&["verify", "--kind", "partition", "--input", p(&part), "--json"]);
    assert_eq!(r.code, 0);
    let report: VerificationReport = serde_json::from_str(&r.out).unwrap();
    assert!(report.pass && !report.probabilistic);

    let golay = dir.path().join("golay.txt");
    let r = stego(&["code", "--family", "golay-binary", "--out", p(&golay)]);
    assert_eq!(r.code, 0);
    let r = stego(&["verify", "--kind", "perfect", "--input", p(&golay), "--t", "3", "--json"]);
    assert_eq!(r.code, 0);
    let cert: PerfectnessCertificate = serde_json::from_str(&r.out).unwrap();
    assert!(cert.equal && cert.corrects_t);
    assert_eq!((cert.m, cert.d), (4096, Some(7)));

    let tiny = stego(&["--cap", "1024", "verify", "--kind", "perfect", "--input", p(&golay), "--t", "3"]);
    assert_eq!(tiny.code, 1);
    assert!(tiny.err.contains("1024"), "{}", tiny.err);
}

#[test]
fn convert_both_directions() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("rep.txt");
    let part = dir.path().join("part.toml");
    let leaders = dir.path().join("leaders.txt");
    assert_eq!(stego(&["code", "--family", "repetition", "--t", "1", "--out", p(&rep)]).code, 0);
    let r = stego(&[
        "convert", "--direction", "p2m", "--input", p(&rep), "--t", "1", "--out", p(&part),
        "--leaders", p(&leaders),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let s = formats::parse_partition(&fs::read_to_string(&part).unwrap()).unwrap();
    let expected: Vec<Vec<&str>> = vec![
        vec!["000", "111"],
        vec!["001", "110"],
        vec!["010", "101"],
        vec!["011", "100"],
    ];
    let got: Vec<Vec<String>> = s
        .parts()
        .iter()
        .map(|p| p.iter().map(|w| s.field().format_word(w)).collect())
        .collect();
    assert_eq!(got, expected);
    assert_eq!(fs::read_to_string(&leaders).unwrap(), "000\n001\n010\n100\n");

    let r = stego(&["convert", "--direction", "m2p", "--input", p(&part), "--json"]);
    assert_eq!(r.code, 0);
    let certs: Vec<PerfectnessCertificate> = serde_json::from_str(&r.out).unwrap();
    assert_eq!(certs.len(), 4);
    assert!(certs.iter().all(|c| c.passes()));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "q = 2\nn = 3\n000\n110\n").unwrap();
    let r = stego(&["convert", "--direction", "p2m", "--input", p(&bad), "--t", "1"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("\"corrects_t\": false"));
}

#[test]
fn streaming_golay_conversion() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.toml");
    assert_eq!(stego(&["code", "--family", "golay-binary", "--check-matrix", "--out", p(&g)]).code, 0);
    let args = ["--samples", "2000", "--seed", "3", "convert", "--direction", "p2m", "--streaming", "--input", p(&g), "--t", "3"];
    let first = stego(&args);
    assert_eq!(first.code, 0, "{}", first.err);
    assert!(first.out.contains("parts=2048 mle=true pass=true"));
    assert!(first.out.contains("samples=2000 seed=3"));
    assert_eq!(stego(&args).out, first.out);
}

#[test]
fn metrics_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let h3 = dir.path().join("h3.toml");
    let h1 = dir.path().join("h1.toml");
    stego(&["construct", "--family", "f5", "--k", "3", "--out", p(&h3)]);
    stego(&["construct", "--family", "f5", "--k", "1", "--out", p(&h1)]);

    let r = stego(&["metrics", "--matrix", p(&h3)]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("density=1/8") && r.out.contains("redundancy=0.114993015"));
    let r = stego(&["metrics", "--matrix", p(&h1), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["redundancy"].as_f64(), Some(0.0));

    let csv = dir.path().join("curve.csv");
    let r = stego(&["metrics", "--curve", "--kmax", "5", "--out", p(&csv)]);
    assert_eq!(r.code, 0);
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("D,capacity,lsb_rate,f5_rate\n"));
    assert!(text.contains("\n0.25,0.811278124,0.5,0.666666667\n"));
    assert!(text.contains("\n0.03125,0.200622324,0.0625,0.161290323\n"));
}

#[test]
fn usage_errors() {
    assert_eq!(stego(&[]).code, 2);
    assert_eq!(stego(&["verify", "--kind", "bogus", "--input", "x"]).code, 2);
    assert_eq!(stego(&["--cap", "5", "metrics", "--curve"]).code, 1);
    let r = stego(&["verify", "--kind", "matrix", "--input", "/nonexistent/file.toml"]);
    assert_eq!(r.code, 1);
    assert!(stego(&["--help"]).out.contains("construct"));
}
