//! Dense square matrices over the Laurent ring, with exact inversion.
//!
//! Inversion runs Gauss–Jordan elimination over the fraction field with the
//! numerator/denominator bookkeeping folded into cross-multiplication row
//! updates (each row stays a polynomial row; the common denominator cancels
//! in the final pivot division). Pivots are the first nonzero entry in row
//! order, every inverse is verified against its input before being returned,
//! and a non-polynomial quotient at the clearing step reports the input as a
//! non-unit of the matrix ring.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Square matrix over [`LaurentPoly`]; equality is entrywise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>, // row-major
}

impl RingMatrix {
    pub fn zero(dim: usize) -> Self {
        RingMatrix { dim, entries: vec![LaurentPoly::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, LaurentPoly::one())
    }

    /// `s * I`.
    pub fn scalar(dim: usize, s: LaurentPoly) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, s.clone());
        }
        m
    }

    /// Builds from a row-major entry list of length `dim * dim`.
    pub fn from_entries(dim: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(entries.len(), dim * dim));
        }
        Ok(RingMatrix { dim, entries })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        RingMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.dim + col] = value;
    }

    /// Largest number of terms in any entry (the bench statistic).
    pub fn max_term_count(&self) -> usize {
        self.entries.iter().map(LaurentPoly::term_count).max().unwrap_or(0)
    }

    pub fn try_mul(&self, rhs: &RingMatrix) -> Result<RingMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch(self.dim, rhs.dim));
        }
        let n = self.dim;
        let mut out = RingMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let acc = out.get(i, j) + &(a * b);
                    out.set(i, j, acc);
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar().is_some_and(|s| s.is_one())
    }

    /// Returns `λ` when the matrix equals `λ·I` (including `0·I`).
    pub fn is_scalar(&self) -> Option<LaurentPoly> {
        let s = self.get(0, 0).clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.get(i, j);
                if i == j {
                    if *e != s {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(s)
    }

    /// Block-diagonal sum; dimension is the sum of dimensions.
    pub fn direct_sum(&self, other: &RingMatrix) -> RingMatrix {
        let n = self.dim + other.dim;
        let mut out = RingMatrix::zero(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                out.set(self.dim + i, self.dim + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Reads back the `block_dim`-sized block at block position `(row, col)`.
    pub fn block_at(&self, row: usize, col: usize, block_dim: usize) -> RingMatrix {
        assert!((row + 1) * block_dim <= self.dim && (col + 1) * block_dim <= self.dim);
        RingMatrix::from_fn(block_dim, |i, j| {
            self.get(row * block_dim + i, col * block_dim + j).clone()
        })
    }

    /// Exact inverse via fraction-field Gauss–Jordan elimination.
    ///
    /// Errors with [`Error::Singular`] when no pivot exists and with
    /// [`Error::NonPolynomialInverse`] when the cleared inverse fails to have
    /// Laurent-polynomial entries; the verification products `A·B = B·A = I`
    /// run before anything is returned.
    pub fn inverse(&self) -> Result<RingMatrix> {
        let n = self.dim;
        // augmented rows [L | R]; each row is implicitly scaled by an unknown
        // common denominator that cancels in the final division R / pivot
        let mut left: Vec<Vec<LaurentPoly>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut right: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                    .collect()
            })
            .collect();

        for k in 0..n {
            let pivot_row = (k..n).find(|&r| !left[r][k].is_zero()).ok_or(Error::Singular)?;
            left.swap(k, pivot_row);
            right.swap(k, pivot_row);
            let pivot = left[k][k].clone();
            for r in 0..n {
                if r == k || left[r][k].is_zero() {
                    continue;
                }
                let factor = left[r][k].clone();
                // row_r := row_r * pivot - factor * row_k  (both halves)
                let lk: Vec<LaurentPoly> = left[k].clone();
                let rk: Vec<LaurentPoly> = right[k].clone();
                for (entry, pivot_entry) in left[r].iter_mut().zip(&lk) {
                    *entry = &(&*entry * &pivot) - &(&factor * pivot_entry);
                }
                for (entry, pivot_entry) in right[r].iter_mut().zip(&rk) {
                    *entry = &(&*entry * &pivot) - &(&factor * pivot_entry);
                }
                reduce_row_content(&mut left[r], &mut right[r]);
            }
        }

        let mut inv = RingMatrix::zero(n);
        for i in 0..n {
            let pivot = &left[i][i];
            for (j, entry) in right[i].iter().enumerate() {
                let q = entry.div_exact(pivot).ok_or(Error::NonPolynomialInverse)?;
                inv.set(i, j, q);
            }
        }

        if !self.try_mul(&inv)?.is_identity() || !inv.try_mul(self)?.is_identity() {
            return Err(Error::NonPolynomialInverse);
        }
        Ok(inv)
    }
}

/// Strips the integer content and common monomial factor from a row pair;
/// both are unit row scalings, so the elimination invariant is preserved.
fn reduce_row_content(left: &mut [LaurentPoly], right: &mut [LaurentPoly]) {
    let mut content = num_bigint::BigInt::zero();
    for p in left.iter().chain(right.iter()) {
        content = num_integer::Integer::gcd(&content, &p.int_content());
        if content.is_one() {
            break;
        }
    }
    let mut min_q: Option<crate::laurent::Exponent> = None;
    let mut min_t: Option<crate::laurent::Exponent> = None;
    for p in left.iter().chain(right.iter()) {
        if let Some((q, t)) = p.min_exponents() {
            min_q = Some(min_q.map_or(q, |m| m.min(q)));
            min_t = Some(min_t.map_or(t, |m| m.min(t)));
        }
    }
    let (Some(q0), Some(t0)) = (min_q, min_t) else { return };
    let shift_needed = !q0.is_zero() || !t0.is_zero();
    let content_needed = !content.is_zero() && !content.is_one();
    if !shift_needed && !content_needed {
        return;
    }
    let shift = crate::laurent::Monomial::new(1, -q0, -t0);
    for p in left.iter_mut().chain(right.iter_mut()) {
        let mut v = p.clone();
        if content_needed {
            v = v.div_int_exact(&content);
        }
        if shift_needed {
            v = v.mul_monomial(&shift);
        }
        *p = v;
    }
}

/// Assembles an `(n_blocks * block_dim)`-square matrix from placed blocks;
/// unplaced blocks are zero. Block coordinates are 0-based.
pub fn block_assemble(
    n_blocks: usize,
    block_dim: usize,
    placements: &[(usize, usize, RingMatrix)],
) -> Result<RingMatrix> {
    let mut seen = vec![false; n_blocks * n_blocks];
    let mut out = RingMatrix::zero(n_blocks * block_dim);
    for (row, col, block) in placements {
        if *row >= n_blocks || *col >= n_blocks {
            return Err(Error::IndexOutOfRange {
                index: (*row).max(*col),
                context: format!("block grid of size {n_blocks}"),
            });
        }
        if block.dim() != block_dim {
            return Err(Error::DimensionMismatch(block.dim(), block_dim));
        }
        if std::mem::replace(&mut seen[row * n_blocks + col], true) {
            return Err(Error::DuplicateBlock(*row, *col));
        }
        for i in 0..block_dim {
            for j in 0..block_dim {
                out.set(row * block_dim + i, col * block_dim + j, block.get(i, j).clone());
            }
        }
    }
    Ok(out)
}

impl Mul for &RingMatrix {
    type Output = RingMatrix;
    fn mul(self, rhs: &RingMatrix) -> RingMatrix {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{Exponent, Monomial};

    fn poly_m(c: i64, qe: i64, te: i64) -> LaurentPoly {
        LaurentPoly::from(Monomial::new(c, Exponent::from_int(qe), Exponent::from_int(te)))
    }

    #[test]
    fn identity_is_neutral() {
        let a = RingMatrix::from_fn(3, |i, j| poly_m((i + 2 * j) as i64, i as i64, j as i64));
        let id = RingMatrix::identity(3);
        assert_eq!(&id * &a, a);
        assert_eq!(&a * &id, a);
    }

    #[test]
    fn one_by_one_units() {
        let a = RingMatrix::from_entries(1, vec![poly_m(-1, 2, 1)]).unwrap();
        let b = RingMatrix::from_entries(1, vec![poly_m(-1, -2, -1)]).unwrap();
        assert!((&a * &b).is_identity());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = RingMatrix::identity(2);
        let b = RingMatrix::identity(3);
        assert!(matches!(a.try_mul(&b), Err(Error::DimensionMismatch(2, 3))));
    }

    #[test]
    fn inverse_identity_and_unit() {
        assert_eq!(RingMatrix::identity(4).inverse().unwrap(), RingMatrix::identity(4));
        let a = RingMatrix::from_entries(1, vec![poly_m(-1, 2, 1)]).unwrap();
        let ai = a.inverse().unwrap();
        assert_eq!(ai, RingMatrix::from_entries(1, vec![poly_m(-1, -2, -1)]).unwrap());
    }

    #[test]
    fn inverse_rejects_singular() {
        let mut a = RingMatrix::zero(2);
        a.set(0, 0, LaurentPoly::one());
        assert!(matches!(a.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn inverse_rejects_non_unit() {
        // det = q, invertible over the fraction field but not over the ring
        let mut a = RingMatrix::identity(2);
        a.set(0, 0, LaurentPoly::q());
        a.set(0, 1, LaurentPoly::one());
        a.set(1, 0, LaurentPoly::zero());
        a.set(1, 1, &LaurentPoly::q() + &LaurentPoly::one());
        // det = q(q+1): not a unit
        assert!(matches!(a.inverse(), Err(Error::NonPolynomialInverse)));
    }

    #[test]
    fn direct_sum_dims_and_identity() {
        let s = RingMatrix::identity(2).direct_sum(&RingMatrix::identity(3));
        assert_eq!(s, RingMatrix::identity(5));
        let z = RingMatrix::zero(1).direct_sum(&RingMatrix::scalar(1, LaurentPoly::constant(-1)));
        assert_eq!(z.dim(), 2);
        assert!(z.inverse().is_err());
    }

    #[test]
    fn scalar_detection() {
        let q2 = &LaurentPoly::q() * &LaurentPoly::q();
        let m = RingMatrix::scalar(3, q2.clone());
        assert_eq!(m.is_scalar(), Some(q2));
        assert!(!m.is_identity());
        assert!(RingMatrix::identity(3).is_identity());
        let mut off = RingMatrix::identity(2);
        off.set(0, 1, LaurentPoly::one());
        assert_eq!(off.is_scalar(), None);
    }

    #[test]
    fn block_assembly_round_trip() {
        let b = RingMatrix::from_fn(2, |i, j| poly_m((1 + i + j) as i64, j as i64, i as i64));
        let placed = block_assemble(3, 2, &[(0, 0, RingMatrix::identity(2)), (2, 1, b.clone())])
            .unwrap();
        assert_eq!(placed.dim(), 6);
        assert_eq!(placed.block_at(0, 0, 2), RingMatrix::identity(2));
        assert_eq!(placed.block_at(2, 1, 2), b);
        assert_eq!(placed.block_at(1, 1, 2), RingMatrix::zero(2));
    }

    #[test]
    fn block_assembly_rejects_duplicates_and_bad_dims() {
        let i2 = RingMatrix::identity(2);
        let err = block_assemble(2, 2, &[(0, 0, i2.clone()), (0, 0, i2.clone())]);
        assert!(matches!(err, Err(Error::DuplicateBlock(0, 0))));
        let err = block_assemble(2, 2, &[(0, 0, RingMatrix::identity(3))]);
        assert!(matches!(err, Err(Error::DimensionMismatch(3, 2))));
    }

    #[test]
    fn block_permutation_of_identities() {
        let i2 = RingMatrix::identity(2);
        let p = block_assemble(2, 2, &[(1, 0, i2.clone()), (0, 1, i2)]).unwrap();
        let sq = &p * &p;
        assert!(sq.is_identity());
    }
}
