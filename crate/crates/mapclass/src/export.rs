//! Deterministic JSON export of matrices and block structures.
//!
//! The matrix record is
//! `{ "dim": d, "entries": [ { "row": i, "col": j, "poly": [ { "coeff": "..",
//! "q": [a, b], "t": [e, f] } ] } ] }` with zero entries omitted, 1-based
//! indices, coefficients as decimal strings and exponents as
//! `[numerator, denominator]` in lowest terms. Entries are row-major and
//! polynomial terms follow the canonical term order, so output bytes are
//! identical across runs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::matrix::RingMatrix;
use crate::sphere::BlockPermMatrix;

#[derive(Serialize, Debug, Clone)]
pub struct TermRecord {
    pub coeff: String,
    pub q: [i64; 2],
    pub t: [i64; 2],
}

#[derive(Serialize, Debug, Clone)]
pub struct EntryRecord {
    pub row: usize,
    pub col: usize,
    pub poly: Vec<TermRecord>,
}

#[derive(Serialize, Debug, Clone)]
pub struct MatrixRecord {
    pub dim: usize,
    pub entries: Vec<EntryRecord>,
}

#[derive(Serialize, Debug, Clone)]
pub struct BlockRecord {
    /// 1-based block row of each block column.
    pub block_perm: Vec<usize>,
    /// Column index (1-based, as a string key) to the block sitting there.
    pub blocks: BTreeMap<String, MatrixRecord>,
}

pub fn matrix_record(m: &RingMatrix) -> MatrixRecord {
    let mut entries = Vec::new();
    for row in 0..m.dim() {
        for col in 0..m.dim() {
            let p = m.get(row, col);
            if p.is_zero() {
                continue;
            }
            let poly = p
                .terms()
                .map(|t| TermRecord {
                    coeff: t.coeff.to_string(),
                    q: [t.qexp.numer(), t.qexp.denom()],
                    t: [t.texp.numer(), t.texp.denom()],
                })
                .collect();
            entries.push(EntryRecord { row: row + 1, col: col + 1, poly });
        }
    }
    MatrixRecord { dim: m.dim(), entries }
}

pub fn block_record(b: &BlockPermMatrix) -> BlockRecord {
    let mut blocks = BTreeMap::new();
    let mut block_perm = Vec::with_capacity(b.n_blocks());
    for c in 0..b.n_blocks() {
        block_perm.push(b.block_row_of(c) + 1);
        // zero-pad keys so the BTreeMap order matches the column order
        blocks.insert(format!("{:02}", c + 1), matrix_record(b.block(c)));
    }
    BlockRecord { block_perm, blocks }
}

/// Serializes a record with a trailing newline; bytes are stable across runs.
pub fn to_json_string<T: Serialize>(record: &T) -> String {
    let mut s = serde_json::to_string_pretty(record).expect("serializable record");
    s.push('\n');
    s
}

/// Plain integer rows for a matrix of constant entries (the symplectic
/// part); `None` when any entry involves `q` or `t` or overflows `i64`.
pub fn integer_rows(m: &RingMatrix) -> Option<Vec<Vec<i64>>> {
    use num_traits::ToPrimitive;
    let mut rows = Vec::with_capacity(m.dim());
    for i in 0..m.dim() {
        let mut row = Vec::with_capacity(m.dim());
        for j in 0..m.dim() {
            let p = m.get(i, j);
            if p.is_zero() {
                row.push(0);
                continue;
            }
            if p.term_count() != 1 {
                return None;
            }
            let term = p.terms().next().expect("nonzero");
            if !term.qexp.is_zero() || !term.texp.is_zero() {
                return None;
            }
            row.push(term.coeff.to_i64()?);
        }
        rows.push(row);
    }
    Some(rows)
}
