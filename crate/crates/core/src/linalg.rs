//! Dense linear algebra over GF(q) on row-major `Word` matrices.

use crate::error::{Error, Result};
use crate::field::{check_len, FieldElement, FieldSpec, Word};

/// `M x^T` for a matrix given by its rows.
pub fn mat_vec(f: &FieldSpec, rows: &[Word], x: &Word) -> Result<Word> {
    let cols = rows.first().map_or(x.len(), Word::len);
    check_len(cols, x.len())?;
    rows.iter()
        .map(|r| f.dot(r, x))
        .collect::<Result<Vec<_>>>()
        .map(Word::new)
}

pub fn columns(rows: &[Word]) -> Vec<Word> {
    let n = rows.first().map_or(0, Word::len);
    (0..n)
        .map(|j| Word::new(rows.iter().map(|r| r.get(j)).collect()))
        .collect()
}

pub fn from_columns(cols: &[Word], height: usize) -> Vec<Word> {
    (0..height)
        .map(|i| Word::new(cols.iter().map(|c| c.get(i)).collect()))
        .collect()
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(f: &FieldSpec, rows: &[Word]) -> (Vec<Word>, Vec<usize>) {
    let mut m: Vec<Word> = rows.to_vec();
    let n = m.first().map_or(0, Word::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i].get(c).is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(m[r].get(c)).expect("pivot is nonzero");
        m[r] = f.scale_word(inv, &m[r]);
        for i in 0..m.len() {
            if i != r && !m[i].get(c).is_zero() {
                let factor = m[i].get(c);
                let scaled = f.scale_word(factor, &m[r]);
                m[i] = f.sub_words(&m[i], &scaled).expect("equal lengths");
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(f: &FieldSpec, rows: &[Word]) -> usize {
    rref(f, rows).1.len()
}

/// A basis of `{x : M x^T = 0}`, one vector per free column.
pub fn nullspace(f: &FieldSpec, rows: &[Word], n: usize) -> Vec<Word> {
    let (reduced, pivots) = rref(f, rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = Word::zero(n);
            v.set(fc, FieldElement::ONE);
            for (row, &pc) in reduced.iter().zip(&pivots) {
                v.set(pc, f.neg(row.get(fc)));
            }
            v
        })
        .collect()
}

/// Checks that every row has length `n` and valid elements.
pub fn validate_rows(f: &FieldSpec, rows: &[Word], n: usize) -> Result<()> {
    for r in rows {
        check_len(n, r.len())?;
        f.validate(r)?;
    }
    Ok(())
}

pub fn require_full_rank(f: &FieldSpec, rows: &[Word]) -> Result<()> {
    let rank = rank(f, rows);
    if rank == rows.len() {
        Ok(())
    } else {
        Err(Error::RankDeficient {
            rank,
            rows: rows.len(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        FieldSpec::binary().parse_word(s).unwrap()
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = FieldSpec::ternary();
        let rows = vec![
            Word::from_values([1, 0, 1, 1]),
            Word::from_values([0, 1, 1, 2]),
        ];
        let basis = nullspace(&f, &rows, 4);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(mat_vec(&f, &rows, b).unwrap().is_zero());
        }
        assert_eq!(rank(&f, &basis), 2);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let f = FieldSpec::binary();
        let rows = vec![w("110"), w("011"), w("101")];
        assert_eq!(rank(&f, &rows), 2);
        assert!(matches!(
            require_full_rank(&f, &rows),
            Err(Error::RankDeficient { rank: 2, rows: 3 })
        ));
    }

    #[test]
    fn columns_round_trip() {
        let rows = vec![w("0001111"), w("0110011"), w("1010101")];
        let cols = columns(&rows);
        assert_eq!(cols[2], w("011"));
        assert_eq!(from_columns(&cols, 3), rows);
    }
}
