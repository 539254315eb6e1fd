//! The Lawrence–Krammer representation of the braid group and its rescaling.
//!
//! `L_n` maps `B_n` into `GL(C(n,2), Z[q^{±1}, t^{±1}])`, acting on a basis
//! `v_{j,k}` (1 ≤ j < k ≤ n) ordered lexicographically. Images of basis
//! vectors are stored as matrix columns, and a word evaluates to the product
//! of its letter matrices read left to right.
//!
//! The full twist generates the center of `B_n` and is a scalar `q^{2n} t²`
//! under `L_n`. Scaling every generator image by the unit monomial
//! `t^{-1/d} q^{-n/d}` (with `d = C(n,2)`), raised to the signed letter count
//! of the word, yields the rescaled representation `L'_n` whose kernel is
//! exactly the center; that is the representation the punctured-sphere
//! construction induces from.

use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentPoly, Monomial};
use crate::matrix::RingMatrix;
use crate::word::{Context, Letter, Word};

/// Basis index `v_{j,k}` with `1 ≤ j < k ≤ n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BasisIndex {
    pub j: usize,
    pub k: usize,
}

/// The lexicographically ordered basis `v_{1,2}, v_{1,3}, .., v_{n-1,n}`.
pub fn basis(n: usize) -> Vec<BasisIndex> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..=n {
        for k in j + 1..=n {
            out.push(BasisIndex { j, k });
        }
    }
    out
}

/// Position of `v_{j,k}` in the lexicographic basis order.
pub fn basis_index(n: usize, j: usize, k: usize) -> usize {
    debug_assert!(1 <= j && j < k && k <= n);
    // pairs with first coordinate < j, then offset inside row j
    (j - 1) * n - j * (j - 1) / 2 + (k - j - 1)
}

/// Representation dimension `C(n,2)`.
pub fn lk_dim(n: usize) -> usize {
    n * (n - 1) / 2
}

fn q_poly() -> LaurentPoly {
    LaurentPoly::q()
}

/// `L_n(σ_i)`: each column holds the image of the corresponding `v_{j,k}`.
pub fn generator_matrix(n: usize, i: usize) -> Result<RingMatrix> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("braid index must be >= 2, got {n}")));
    }
    if i == 0 || i > n - 1 {
        return Err(Error::IndexOutOfRange { index: i, context: format!("braid({n})") });
    }
    let dim = lk_dim(n);
    let mut m = RingMatrix::zero(dim);
    let q = q_poly();
    let one = LaurentPoly::one();
    let q2_minus_q = &(&q * &q) - &q; // q^2 - q
    let one_minus_q = &one - &q;
    let minus_tq2 = LaurentPoly::from(Monomial::new(
        -1,
        Exponent::from_int(2),
        Exponent::from_int(1),
    ));
    let mut put = |row: (usize, usize), col: (usize, usize), v: &LaurentPoly| {
        let r = basis_index(n, row.0, row.1);
        let c = basis_index(n, col.0, col.1);
        m.set(r, c, v.clone());
    };
    for col in basis(n) {
        let (j, k) = (col.j, col.k);
        if i == j && i == k - 1 {
            put((j, k), (j, k), &minus_tq2);
        } else if i + 1 != j && i != j && i + 1 != k && i != k {
            put((j, k), (j, k), &one);
        } else if i == j - 1 {
            put((i, k), (j, k), &q);
            put((i, j), (j, k), &q2_minus_q);
            put((j, k), (j, k), &one_minus_q);
        } else if i == j {
            put((j + 1, k), (j, k), &one);
        } else if i == k - 1 {
            put((j, i), (j, k), &q);
            put((j, k), (j, k), &one_minus_q);
            // -(q^2 - q) t
            let t = LaurentPoly::t();
            put((i, k), (j, k), &(&(-&q2_minus_q) * &t));
        } else {
            // i == k
            put((j, k + 1), (j, k), &one);
        }
    }
    Ok(m)
}

/// The unit monomial `t^{-1/d} q^{-n/d}` with `d = C(n,2)`; its `ab(β)`-th
/// power rescales `L_n(β)` to `L'_n(β)`.
pub fn rescaling_scalar(n: usize) -> Monomial {
    let d = lk_dim(n) as i64;
    Monomial::new(1, Exponent::new(-(n as i64), d), Exponent::new(-1, d))
}

/// Signed generator count of a braid word (`σ_i ↦ +1`).
pub fn abelianization(w: &Word) -> Result<i64> {
    match w.context() {
        Context::Braid(_) => Ok(w.signed_letter_sum()),
        other => Err(Error::ContextMismatch(other.to_string(), "braid(n)".into())),
    }
}

/// The full twist `Δ² = (σ_1 .. σ_{n-1})^n`, a word of length `n(n-1)`.
pub fn full_twist_word(n: usize) -> Word {
    let base: Vec<Letter> = (1..n).map(Letter::gen).collect();
    let mut letters = Vec::with_capacity(n * (n - 1));
    for _ in 0..n {
        letters.extend_from_slice(&base);
    }
    Word::new(Context::Braid(n), letters).expect("valid indices")
}

/// `L_n` with eagerly built and verified generator and inverse caches.
pub struct LkRep {
    n: usize,
    dim: usize,
    gens: Vec<RingMatrix>,
    invs: Vec<RingMatrix>,
}

impl LkRep {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("braid index must be >= 2, got {n}")));
        }
        let mut gens = Vec::with_capacity(n - 1);
        let mut invs = Vec::with_capacity(n - 1);
        for i in 1..n {
            let g = generator_matrix(n, i)?;
            invs.push(g.inverse()?);
            gens.push(g);
        }
        Ok(LkRep { n, dim: lk_dim(n), gens, invs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator(&self, i: usize) -> Result<&RingMatrix> {
        self.check(i)?;
        Ok(&self.gens[i - 1])
    }

    /// Cached elimination inverse of `L_n(σ_i)`, verified at construction.
    pub fn generator_inverse(&self, i: usize) -> Result<&RingMatrix> {
        self.check(i)?;
        Ok(&self.invs[i - 1])
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n - 1 {
            return Err(Error::IndexOutOfRange { index: i, context: format!("braid({})", self.n) });
        }
        Ok(())
    }

    /// Evaluates a braid word; with `rescaled` the result is `L'_n(w)`.
    pub fn eval(&self, w: &Word, rescaled: bool) -> Result<RingMatrix> {
        if w.context() != Context::Braid(self.n) {
            return Err(Error::ContextMismatch(
                w.context().to_string(),
                format!("braid({})", self.n),
            ));
        }
        let mut acc = RingMatrix::identity(self.dim);
        for l in w.letters() {
            let m = if l.sign > 0 { &self.gens[l.index - 1] } else { &self.invs[l.index - 1] };
            acc = acc.try_mul(m)?;
        }
        if rescaled {
            let scale = rescaling_scalar(self.n).pow(abelianization(w)?)?;
            acc = RingMatrix::from_fn(self.dim, |i, j| acc.get(i, j).mul_monomial(&scale));
        }
        Ok(acc)
    }
}
