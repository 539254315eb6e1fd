//! The induced representation `K_n` of the mapping class group of the
//! `n`-punctured sphere.
//!
//! `B_{n-1}` surjects onto the stabilizer of the puncture `p_n` with kernel
//! the center, so the rescaled Lawrence–Krammer representation `L'_{n-1}`
//! descends faithfully to `Stab(p_n)`. Inducing up along the index-`n` coset
//! decomposition gives `K_n`, of dimension `n·C(n-1,2)`, with one
//! `C(n-1,2)`-dimensional block per coset: the generator `σ_i` carries coset
//! `j` to coset `φ_i(j)` and acts there by `L'_{n-1}` of a fixed factor word.
//!
//! Coset representatives are `c_1 = Id`, `c_2 = σ_{n-1}`, and
//! `c_j = ν_j σ_{n-1} ν_j^{-1}` with `ν_j = σ_{n-j+1} .. σ_{n-2}`, and
//! `φ_i` is the transposition `(n-i, n-i+1)`. With
//! `τ = σ_1 .. σ_{n-2} σ_{n-2} .. σ_1` and `u = σ_1 .. σ_{n-2}`, the factor
//! `c_{φ_i j}^{-1} σ_i c_j` equals
//!
//! ```text
//!   σ_i                                              i ≠ n-1, j ≠ n+1-i
//!   (σ_1..σ_{i-1})^{-1} τ^{-1} (σ_1..σ_{i-1}) σ_i^{-1}   i ≠ n-1, j = n+1-i
//!   Id                                               i = n-1, j = 1
//!   u^{-1} τ^{-1} u                                  i = n-1, j = 2
//!   ν_j σ_{n-2} ν_j^{-1}                             i = n-1, j > 2
//! ```
//!
//! (the `j = 2` row is the word for `σ_{n-1}²` forced by the sphere relation
//! `σ_1..σ_{n-1}σ_{n-1}..σ_1 = 1`). Every row is checked against the
//! free-group oracle by `verify_coset_identity`, and the whole construction
//! is exercised by the braid and sphere relation suites.

use crate::artin::sphere_word_is_trivial;
use crate::error::{Error, Result};
use crate::lk::{lk_dim, LkRep};
use crate::matrix::{block_assemble, RingMatrix};
use crate::word::{Context, Letter, Word};

/// `τ = σ_1 σ_2 .. σ_{n-2} σ_{n-2} .. σ_2 σ_1`, a word in `braid(n-1)`.
pub fn tau_word(n: usize) -> Word {
    let mut letters: Vec<Letter> = (1..=n - 2).map(Letter::gen).collect();
    letters.extend((1..=n - 2).rev().map(Letter::gen));
    Word::new(Context::Braid(n - 1), letters).expect("valid indices")
}

/// `ν_j = σ_{n-j+1} σ_{n-j+2} .. σ_{n-2}` for `3 ≤ j ≤ n`, in `braid(n-1)`.
pub fn nu_word(n: usize, j: usize) -> Result<Word> {
    if !(3..=n).contains(&j) {
        return Err(Error::IndexOutOfRange { index: j, context: format!("nu_word({n})") });
    }
    let letters: Vec<Letter> = (n - j + 1..=n - 2).map(Letter::gen).collect();
    Word::new(Context::Braid(n - 1), letters)
}

/// The coset-factor word `c_{φ_i j}^{-1} σ_i c_j` as an element of
/// `B_{n-1}` (five cases; see the module docs).
pub fn coset_factor(n: usize, i: usize, j: usize) -> Result<Word> {
    check_sphere_rank(n)?;
    if i == 0 || i > n - 1 {
        return Err(Error::IndexOutOfRange { index: i, context: format!("sphere({n})") });
    }
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, context: format!("cosets of sphere({n})") });
    }
    let ctx = Context::Braid(n - 1);
    let tau_inv = tau_word(n).inverse();
    let word = if i != n - 1 {
        if j != n + 1 - i {
            Word::new(ctx, vec![Letter::gen(i)])?
        } else {
            let pre = Word::new(ctx, (1..i).map(Letter::gen).collect())?;
            let si_inv = Word::new(ctx, vec![Letter::inv(i)])?;
            pre.inverse().concat(&tau_inv)?.concat(&pre)?.concat(&si_inv)?
        }
    } else if j == 1 {
        Word::empty(ctx)
    } else if j == 2 {
        let u = Word::new(ctx, (1..=n - 2).map(Letter::gen).collect())?;
        u.inverse().concat(&tau_inv)?.concat(&u)?
    } else {
        let nu = nu_word(n, j)?;
        let mid = Word::new(ctx, vec![Letter::gen(n - 2)])?;
        nu.concat(&mid)?.concat(&nu.inverse())?
    };
    Ok(word)
}

fn check_sphere_rank(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "sphere construction needs n >= 4, got {n}"
        )));
    }
    Ok(())
}

/// Coset bookkeeping: the representative words `c_1..c_n` (as sphere words)
/// and the transpositions `φ_i`.
pub struct CosetSystem {
    n: usize,
    coset_words: Vec<Word>,
}

impl CosetSystem {
    pub fn new(n: usize) -> Result<Self> {
        check_sphere_rank(n)?;
        let ctx = Context::Sphere(n);
        let mut coset_words = vec![Word::empty(ctx)];
        coset_words.push(Word::new(ctx, vec![Letter::gen(n - 1)])?);
        for i in 3..=n {
            let pre = Word::new(ctx, (n - i + 1..=n - 2).map(Letter::gen).collect())?;
            let mid = Word::new(ctx, vec![Letter::gen(n - 1)])?;
            coset_words.push(pre.concat(&mid)?.concat(&pre.inverse())?);
        }
        Ok(CosetSystem { n, coset_words })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The representative `c_j`, `1 ≤ j ≤ n`.
    pub fn coset_word(&self, j: usize) -> &Word {
        &self.coset_words[j - 1]
    }

    /// `φ_i` applied to the coset index `j`: the transposition `(n-i, n-i+1)`.
    pub fn phi(&self, i: usize, j: usize) -> usize {
        let (a, b) = (self.n - i, self.n - i + 1);
        if j == a {
            b
        } else if j == b {
            a
        } else {
            j
        }
    }
}

/// Block-permutation matrix with one invertible block per block row and
/// column: the shape of every `K_n` word image.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockPermMatrix {
    n_blocks: usize,
    block_dim: usize,
    /// `row_of_col[c]` is the block row holding the nonzero block of column `c`.
    row_of_col: Vec<usize>,
    /// `blocks[c]` is that block.
    blocks: Vec<RingMatrix>,
}

impl BlockPermMatrix {
    pub fn identity(n_blocks: usize, block_dim: usize) -> Self {
        BlockPermMatrix {
            n_blocks,
            block_dim,
            row_of_col: (0..n_blocks).collect(),
            blocks: vec![RingMatrix::identity(block_dim); n_blocks],
        }
    }

    fn new(n_blocks: usize, block_dim: usize, row_of_col: Vec<usize>, blocks: Vec<RingMatrix>) -> Self {
        debug_assert_eq!(row_of_col.len(), n_blocks);
        debug_assert_eq!(blocks.len(), n_blocks);
        let mut seen = vec![false; n_blocks];
        for &r in &row_of_col {
            debug_assert!(!seen[r], "block placement is not a permutation");
            seen[r] = true;
        }
        BlockPermMatrix { n_blocks, block_dim, row_of_col, blocks }
    }

    pub fn n_blocks(&self) -> usize {
        self.n_blocks
    }

    pub fn block_dim(&self) -> usize {
        self.block_dim
    }

    pub fn dim(&self) -> usize {
        self.n_blocks * self.block_dim
    }

    /// Block row of column `c` (0-based).
    pub fn block_row_of(&self, c: usize) -> usize {
        self.row_of_col[c]
    }

    /// The block sitting in column `c` (0-based).
    pub fn block(&self, c: usize) -> &RingMatrix {
        &self.blocks[c]
    }

    pub fn try_mul(&self, rhs: &BlockPermMatrix) -> Result<BlockPermMatrix> {
        if self.n_blocks != rhs.n_blocks || self.block_dim != rhs.block_dim {
            return Err(Error::DimensionMismatch(self.dim(), rhs.dim()));
        }
        let mut row_of_col = Vec::with_capacity(self.n_blocks);
        let mut blocks = Vec::with_capacity(self.n_blocks);
        for c in 0..self.n_blocks {
            let mid = rhs.row_of_col[c];
            row_of_col.push(self.row_of_col[mid]);
            blocks.push(self.blocks[mid].try_mul(&rhs.blocks[c])?);
        }
        Ok(BlockPermMatrix::new(self.n_blocks, self.block_dim, row_of_col, blocks))
    }

    pub fn is_identity(&self) -> bool {
        self.row_of_col.iter().enumerate().all(|(c, &r)| r == c)
            && self.blocks.iter().all(RingMatrix::is_identity)
    }

    /// Assembles the full dense matrix.
    pub fn to_matrix(&self) -> RingMatrix {
        let placements: Vec<(usize, usize, RingMatrix)> = (0..self.n_blocks)
            .map(|c| (self.row_of_col[c], c, self.blocks[c].clone()))
            .collect();
        block_assemble(self.n_blocks, self.block_dim, &placements)
            .expect("valid block permutation")
    }
}

/// `K_n` with eagerly built generators and blockwise inverses.
pub struct SphereRep {
    n: usize,
    block_dim: usize,
    lk: LkRep,
    cosets: CosetSystem,
    gens: Vec<BlockPermMatrix>,
    invs: Vec<BlockPermMatrix>,
}

impl SphereRep {
    pub fn new(n: usize) -> Result<Self> {
        check_sphere_rank(n)?;
        let lk = LkRep::new(n - 1)?;
        let cosets = CosetSystem::new(n)?;
        let block_dim = lk_dim(n - 1);
        let mut gens = Vec::with_capacity(n - 1);
        let mut invs = Vec::with_capacity(n - 1);
        for i in 1..n {
            gens.push(induced_blocks(&lk, &cosets, n, i, false)?);
            invs.push(induced_blocks(&lk, &cosets, n, i, true)?);
        }
        Ok(SphereRep { n, block_dim, lk, cosets, gens, invs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n * self.block_dim
    }

    pub fn block_dim(&self) -> usize {
        self.block_dim
    }

    pub fn cosets(&self) -> &CosetSystem {
        &self.cosets
    }

    /// The rescaled `L_{n-1}` the construction induces from.
    pub fn lk(&self) -> &LkRep {
        &self.lk
    }

    pub fn generator_blocks(&self, i: usize) -> Result<&BlockPermMatrix> {
        self.check(i)?;
        Ok(&self.gens[i - 1])
    }

    pub fn generator_inverse_blocks(&self, i: usize) -> Result<&BlockPermMatrix> {
        self.check(i)?;
        Ok(&self.invs[i - 1])
    }

    /// Dense `K_n(σ_i)`.
    pub fn generator_matrix(&self, i: usize) -> Result<RingMatrix> {
        Ok(self.generator_blocks(i)?.to_matrix())
    }

    pub fn generator_inverse_matrix(&self, i: usize) -> Result<RingMatrix> {
        Ok(self.generator_inverse_blocks(i)?.to_matrix())
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n - 1 {
            return Err(Error::IndexOutOfRange {
                index: i,
                context: format!("sphere({})", self.n),
            });
        }
        Ok(())
    }

    /// Evaluates a sphere word in block form.
    pub fn eval_blocks(&self, w: &Word) -> Result<BlockPermMatrix> {
        if w.context() != Context::Sphere(self.n) {
            return Err(Error::ContextMismatch(
                w.context().to_string(),
                format!("sphere({})", self.n),
            ));
        }
        let mut acc = BlockPermMatrix::identity(self.n, self.block_dim);
        for l in w.letters() {
            let m = if l.sign > 0 { &self.gens[l.index - 1] } else { &self.invs[l.index - 1] };
            acc = acc.try_mul(m)?;
        }
        Ok(acc)
    }

    /// Evaluates a sphere word to the dense matrix.
    pub fn eval(&self, w: &Word) -> Result<RingMatrix> {
        Ok(self.eval_blocks(w)?.to_matrix())
    }
}

/// One induced generator (or its blockwise inverse) in block form: the block
/// in column `j` sits at row `φ_i(j)` and is `L'_{n-1}` of the factor word.
fn induced_blocks(
    lk: &LkRep,
    cosets: &CosetSystem,
    n: usize,
    i: usize,
    inverse: bool,
) -> Result<BlockPermMatrix> {
    let mut row_of_col = Vec::with_capacity(n);
    let mut blocks = Vec::with_capacity(n);
    for col in 1..=n {
        // phi_i is an involution, so the inverse has the same block pattern
        row_of_col.push(cosets.phi(i, col) - 1);
        let factor = if inverse {
            coset_factor(n, i, cosets.phi(i, col))?.inverse()
        } else {
            coset_factor(n, i, col)?
        };
        blocks.push(lk.eval(&factor, true)?);
    }
    Ok(BlockPermMatrix::new(n, lk_dim(n - 1), row_of_col, blocks))
}

/// Convenience construction of a single dense `K_n(σ_i)`.
pub fn induced_generator(n: usize, i: usize) -> Result<RingMatrix> {
    let lk = LkRep::new(n - 1)?;
    let cosets = CosetSystem::new(n)?;
    Ok(induced_blocks(&lk, &cosets, n, i, false)?.to_matrix())
}

/// Oracle check of one cell of the coset-factor table: confirms that
/// `c_{φ_i j}^{-1} σ_i c_j` stabilizes the puncture `p_n` and that dividing
/// by the table word leaves the trivial sphere mapping class.
pub fn verify_coset_identity(n: usize, i: usize, j: usize) -> Result<bool> {
    let cosets = CosetSystem::new(n)?;
    let ctx = Context::Sphere(n);
    let si = Word::new(ctx, vec![Letter::gen(i)])?;
    let lhs = cosets
        .coset_word(cosets.phi(i, j))
        .inverse()
        .concat(&si)?
        .concat(cosets.coset_word(j))?;
    // the factor is a braid(n-1) word; reread it over the sphere alphabet
    let factor = coset_factor(n, i, j)?.with_context(ctx)?;
    let perm = lhs.permutation(n);
    if perm[n - 1] != n {
        return Ok(false);
    }
    sphere_word_is_trivial(&lhs.concat(&factor.inverse())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_and_nu_words() {
        assert_eq!(tau_word(6).to_string(), "s1 s2 s3 s4 s4 s3 s2 s1");
        assert_eq!(tau_word(4).to_string(), "s1 s2 s2 s1");
        assert_eq!(tau_word(6).len(), 2 * (6 - 2));
        assert_eq!(nu_word(6, 3).unwrap().to_string(), "s4");
        assert_eq!(nu_word(6, 6).unwrap().to_string(), "s1 s2 s3 s4");
        assert_eq!(nu_word(6, 4).unwrap().to_string(), "s3 s4");
        assert!(nu_word(6, 2).is_err());
        assert!(nu_word(6, 7).is_err());
    }

    #[test]
    fn coset_factor_cases() {
        // i = n-1, j = 1: empty
        assert!(coset_factor(6, 5, 1).unwrap().is_empty());
        // i != n-1, j != n+1-i: sigma_i
        assert_eq!(coset_factor(6, 2, 3).unwrap().to_string(), "s2");
        // i = n-1, j = 2: u^{-1} tau^{-1} u
        assert_eq!(
            coset_factor(6, 5, 2).unwrap().to_string(),
            "s4^-1 s3^-1 s2^-1 s1^-1 s1^-1 s2^-1 s3^-1 s4^-1 s4^-1 s3^-1 s2^-1 s1^-1 s1 s2 s3 s4"
        );
        // i = n-1, j > 2: nu_j s_{n-2} nu_j^{-1}
        assert_eq!(coset_factor(6, 5, 4).unwrap().to_string(), "s3 s4 s4 s4^-1 s3^-1");
        // i != n-1, j = n+1-i
        assert_eq!(
            coset_factor(6, 2, 5).unwrap().to_string(),
            "s1^-1 s1^-1 s2^-1 s3^-1 s4^-1 s4^-1 s3^-1 s2^-1 s1^-1 s1 s2^-1"
        );
    }

    #[test]
    fn phi_is_the_stated_transposition() {
        let cs = CosetSystem::new(6).unwrap();
        assert_eq!(cs.phi(5, 1), 2);
        assert_eq!(cs.phi(5, 2), 1);
        assert_eq!(cs.phi(5, 3), 3);
        assert_eq!(cs.phi(1, 5), 6);
        assert_eq!(cs.phi(1, 6), 5);
        assert_eq!(cs.phi(2, 2), 2);
    }

    #[test]
    fn coset_words_shape() {
        let cs = CosetSystem::new(6).unwrap();
        assert!(cs.coset_word(1).is_empty());
        assert_eq!(cs.coset_word(2).to_string(), "s5");
        assert_eq!(cs.coset_word(3).to_string(), "s4 s5 s4^-1");
        assert_eq!(cs.coset_word(6).to_string(), "s1 s2 s3 s4 s5 s4^-1 s3^-1 s2^-1 s1^-1");
        // c_j moves puncture n to n-j+1
        for j in 1..=6 {
            let perm = cs.coset_word(j).permutation(6);
            assert_eq!(perm[5], 6 - j + 1, "c_{j} must carry p_6 to p_{}", 6 - j + 1);
        }
    }

    #[test]
    fn induced_generator_block_structure() {
        let rep = SphereRep::new(5).unwrap();
        assert_eq!(rep.dim(), 5 * 6);
        for i in 1..=4 {
            let g = rep.generator_blocks(i).unwrap();
            // one block per row and column, enforced by construction;
            // diagonal blocks away from the swapped pair are L'(sigma_i)
            for c in 0..5 {
                let j = c + 1;
                if j != 5 - i && j != 5 - i + 1 {
                    assert_eq!(g.block_row_of(c), c);
                }
            }
        }
    }

    #[test]
    fn sphere_gen_times_inverse_is_identity() {
        let rep = SphereRep::new(5).unwrap();
        for i in 1..=4 {
            let g = rep.generator_blocks(i).unwrap();
            let gi = rep.generator_inverse_blocks(i).unwrap();
            assert!(g.try_mul(gi).unwrap().is_identity());
            assert!(gi.try_mul(g).unwrap().is_identity());
        }
    }

    #[test]
    fn empty_word_is_identity() {
        let rep = SphereRep::new(5).unwrap();
        let m = rep.eval(&Word::empty(Context::Sphere(5))).unwrap();
        assert!(m.is_identity());
        assert_eq!(m.dim(), 30);
    }

    #[test]
    fn smallest_sphere_constructs() {
        // n = 4 is the smallest rank the construction admits
        let rep = SphereRep::new(4).unwrap();
        assert_eq!(rep.dim(), 4 * 3);
        let boundary = Word::parse("s1 s2 s3 s3 s2 s1", Context::Sphere(4)).unwrap();
        assert!(rep.eval_blocks(&boundary).unwrap().is_identity());
        assert!(SphereRep::new(3).is_err());
    }

    #[test]
    fn k6_blocks_for_last_generator() {
        // i = n-1 = 5: block (2,1) is the identity (image of the empty word)
        let rep = SphereRep::new(6).unwrap();
        let g = rep.generator_blocks(5).unwrap();
        assert_eq!(g.block_row_of(0), 1);
        assert!(g.block(0).is_identity());
    }

    #[test]
    fn k6_blocks_for_first_generator() {
        // i = 1: phi_1 = (5,6); away from the swapped pair the diagonal
        // blocks are L'_5(s1)
        let rep = SphereRep::new(6).unwrap();
        let g = rep.generator_blocks(1).unwrap();
        let s1 = Word::parse("s1", Context::Braid(5)).unwrap();
        let expect = rep.lk().eval(&s1, true).unwrap();
        for c in 0..4 {
            assert_eq!(g.block_row_of(c), c);
            assert_eq!(*g.block(c), expect);
        }
        assert_eq!(g.block_row_of(4), 5);
        assert_eq!(g.block_row_of(5), 4);
        assert_eq!(*g.block(4), expect);
    }

    #[test]
    fn verify_coset_identity_all_cells_n5() {
        for i in 1..=4 {
            for j in 1..=5 {
                assert!(verify_coset_identity(5, i, j).unwrap(), "cell i={i} j={j}");
            }
        }
    }

    #[test]
    fn verify_coset_identity_spot_n6() {
        assert!(verify_coset_identity(6, 5, 1).unwrap());
        assert!(verify_coset_identity(6, 2, 3).unwrap());
        assert!(verify_coset_identity(6, 5, 4).unwrap());
        assert!(verify_coset_identity(6, 5, 2).unwrap());
        assert!(verify_coset_identity(6, 2, 5).unwrap());
    }

    #[test]
    fn wrong_factor_fails_oracle() {
        // replacing the j=2 factor with sigma_{n-2} tau^{-1} must fail
        let n = 6;
        let cosets = CosetSystem::new(n).unwrap();
        let ctx = Context::Sphere(n);
        let si = Word::new(ctx, vec![Letter::gen(5)]).unwrap();
        let lhs = cosets.coset_word(1).inverse().concat(&si).unwrap()
            .concat(cosets.coset_word(2)).unwrap();
        let bad = Word::parse("s4", ctx).unwrap()
            .concat(&tau_word(n).with_context(ctx).unwrap().inverse()).unwrap();
        assert!(!sphere_word_is_trivial(&lhs.concat(&bad.inverse()).unwrap()).unwrap());
    }
}
