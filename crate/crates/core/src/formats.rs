//! Text file formats.
//!
//! * matrix file: TOML with `q`, `k`, `n`, `t` and `rows` (words)
//! * partition file: TOML with `q`, `n`, `t` and `parts` (lists of words)
//! * check-matrix file: TOML with `q`, `n`, `k` and `rows`
//! * code file: `q = <q>` and `n = <n>` lines, then one codeword per line
//! * table file: one `y → z` line per syndrome in mixed-radix order
//! * leaders file: one word per line
//!
//! Words use the text form of [`FieldSpec::format_word`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Word};
use crate::perfect::{BlockCode, LinearCode};
use crate::stegocode::{CodingTable, PartitionCode, StegoMatrix};

fn toml_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

fn parse_words(f: &FieldSpec, words: &[String]) -> Result<Vec<Word>> {
    words.iter().map(|s| f.parse_word(s)).collect()
}

fn format_words(f: &FieldSpec, words: &[Word]) -> Vec<String> {
    words.iter().map(|w| f.format_word(w)).collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixDoc {
    q: u64,
    k: usize,
    n: usize,
    t: usize,
    rows: Vec<String>,
}

pub fn render_matrix(h: &StegoMatrix) -> String {
    let doc = MatrixDoc {
        q: h.field().q() as u64,
        k: h.k(),
        n: h.n(),
        t: h.t(),
        rows: format_words(h.field(), h.rows()),
    };
    toml::to_string(&doc).expect("matrix serializes")
}

pub fn parse_matrix(text: &str) -> Result<StegoMatrix> {
    let doc: MatrixDoc = toml::from_str(text).map_err(toml_err)?;
    let f = FieldSpec::new(doc.q)?;
    let rows = parse_words(&f, &doc.rows)?;
    if rows.len() != doc.k {
        return Err(Error::Parse(format!("k = {} but {} rows", doc.k, rows.len())));
    }
    if let Some(r) = rows.iter().find(|r| r.len() != doc.n) {
        return Err(Error::Parse(format!("row {} does not have n = {} entries", f.format_word(r), doc.n)));
    }
    StegoMatrix::new(f, rows, doc.t)
}

#[derive(Debug, Serialize, Deserialize)]
struct PartitionDoc {
    q: u64,
    n: usize,
    t: usize,
    parts: Vec<Vec<String>>,
}

pub fn render_partition(s: &PartitionCode) -> String {
    let doc = PartitionDoc {
        q: s.field().q() as u64,
        n: s.n(),
        t: s.t(),
        parts: s.parts().iter().map(|p| format_words(s.field(), p)).collect(),
    };
    toml::to_string(&doc).expect("partition serializes")
}

pub fn parse_partition(text: &str) -> Result<PartitionCode> {
    let doc: PartitionDoc = toml::from_str(text).map_err(toml_err)?;
    let f = FieldSpec::new(doc.q)?;
    let parts = doc
        .parts
        .iter()
        .map(|p| parse_words(&f, p))
        .collect::<Result<Vec<_>>>()?;
    PartitionCode::new(f, doc.n, doc.t, parts)
}

#[derive(Debug, Serialize, Deserialize)]
struct CheckMatrixDoc {
    q: u64,
    n: usize,
    k: usize,
    rows: Vec<String>,
}

pub fn render_check_matrix(c: &LinearCode) -> String {
    let doc = CheckMatrixDoc {
        q: c.field().q() as u64,
        n: c.n(),
        k: c.k(),
        rows: format_words(c.field(), c.check_matrix()),
    };
    toml::to_string(&doc).expect("check matrix serializes")
}

pub fn parse_check_matrix(text: &str) -> Result<LinearCode> {
    let doc: CheckMatrixDoc = toml::from_str(text).map_err(toml_err)?;
    let f = FieldSpec::new(doc.q)?;
    let rows = parse_words(&f, &doc.rows)?;
    let code = LinearCode::from_check_matrix(f, doc.n, rows)?;
    if code.k() != doc.k {
        return Err(Error::Parse(format!("k = {} but the check matrix gives {}", doc.k, code.k())));
    }
    Ok(code)
}

pub fn render_code(c: &BlockCode) -> String {
    let f = c.field();
    let mut out = format!("q = {}\nn = {}\n", f.q(), c.n());
    for w in c.codewords() {
        out.push_str(&f.format_word(w));
        out.push('\n');
    }
    out
}

fn header_value(line: Option<&str>, key: &str) -> Result<u64> {
    let line = line.ok_or_else(|| Error::Parse(format!("missing `{key} =` line")))?;
    let (k, v) = line
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("expected `{key} = <value>`, got {line:?}")))?;
    if k.trim() != key {
        return Err(Error::Parse(format!("expected `{key} =`, got {line:?}")));
    }
    v.trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad {key}: {e}")))
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_code(text: &str) -> Result<BlockCode> {
    let mut lines = content_lines(text);
    let q = header_value(lines.next(), "q")?;
    let n = header_value(lines.next(), "n")? as usize;
    let f = FieldSpec::new(q)?;
    let words = lines.map(|l| f.parse_word(l)).collect::<Result<Vec<_>>>()?;
    BlockCode::new(f, n, words)
}

pub fn render_table(table: &CodingTable) -> String {
    let f = table.field();
    table
        .iter()
        .map(|(y, z)| format!("{} → {}\n", f.format_word(&y), f.format_word(z)))
        .collect()
}

pub fn parse_table(h: &StegoMatrix, text: &str) -> Result<CodingTable> {
    let f = h.field();
    let pairs = content_lines(text)
        .map(|l| {
            let (y, z) = l
                .split_once('→')
                .or_else(|| l.split_once("->"))
                .ok_or_else(|| Error::Parse(format!("expected `y → z`, got {l:?}")))?;
            Ok((f.parse_word(y)?, f.parse_word(z)?))
        })
        .collect::<Result<Vec<_>>>()?;
    CodingTable::from_pairs(h, pairs)
}

pub fn render_leaders(f: &FieldSpec, leaders: &[Word]) -> String {
    leaders
        .iter()
        .map(|w| format!("{}\n", f.format_word(w)))
        .collect()
}

pub fn parse_leaders(f: &FieldSpec, text: &str) -> Result<Vec<Word>> {
    content_lines(text).map(|l| f.parse_word(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::RunConfig;
    use crate::construct::f5_matrix;
    use crate::perfect::{golay_ternary, repetition_code};
    use crate::stegocode::{build_coding_table, partition_from_matrix};

    #[test]
    fn matrix_file_layout() {
        let h = f5_matrix(3).unwrap();
        let text = render_matrix(&h);
        assert_eq!(
            text,
            "q = 2\nk = 3\nn = 7\nt = 1\nrows = [\"0001111\", \"0110011\", \"1010101\"]\n"
        );
        assert_eq!(parse_matrix(&text).unwrap(), h);
        assert!(parse_matrix("q = 2\nk = 2\nn = 3\nt = 1\nrows = [\"011\"]\n").is_err());
        assert!(parse_matrix("q = 2\nk = 1\nn = 3\nt = 1\nrows = [\"0112\"]\n").is_err());
    }

    #[test]
    fn partition_file_round_trip() {
        let s = partition_from_matrix(&f5_matrix(2).unwrap(), &RunConfig::default()).unwrap();
        let text = render_partition(&s);
        assert_eq!(parse_partition(&text).unwrap(), s);
        let bad = "q = 2\nn = 2\nt = 1\nparts = [[\"00\", \"01\"], [\"10\"]]\n";
        assert!(matches!(parse_partition(bad), Err(Error::MalformedPartition(_))));
    }

    #[test]
    fn table_file_layout() {
        let h = f5_matrix(2).unwrap();
        let table = build_coding_table(&h, &RunConfig::default()).unwrap();
        let text = render_table(&table);
        assert_eq!(text, "00 → 000\n01 → 100\n10 → 010\n11 → 001\n");
        assert_eq!(parse_table(&h, &text).unwrap(), table);
        let ascii = text.replace('→', "->");
        assert_eq!(parse_table(&h, &ascii).unwrap(), table);
    }

    #[test]
    fn code_files() {
        let c = repetition_code(1);
        let text = render_code(&c);
        assert_eq!(text, "q = 2\nn = 3\n000\n111\n");
        assert_eq!(parse_code(&text).unwrap(), c);
        assert!(parse_code("n = 3\nq = 2\n000\n").is_err());
        assert!(parse_code("q = 2\nn = 3\n000\n11\n").is_err());

        let g = golay_ternary().unwrap();
        assert_eq!(parse_check_matrix(&render_check_matrix(&g)).unwrap(), g);
    }

    #[test]
    fn large_field_words_use_commas() {
        let f = FieldSpec::new(11).unwrap();
        let leaders = vec![Word::from_values([10, 0]), Word::from_values([3, 7])];
        let text = render_leaders(&f, &leaders);
        assert_eq!(text, "10,0\n3,7\n");
        assert_eq!(parse_leaders(&f, &text).unwrap(), leaders);
    }
}
