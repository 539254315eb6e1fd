//! The symplectic representation on first homology, the 64-dimensional
//! representation of the genus-2 mapping class group, and its hyperelliptic
//! generalization.
//!
//! The genus-2 mapping class group is a `Z_2` central extension of the
//! mapping class group of the 6-punctured sphere; the extension kernel is
//! generated by the hyperelliptic involution, which `K_6` cannot see but the
//! symplectic representation sends to `-I`. The direct sum `K_6 ⊕ H` is
//! therefore faithful, of dimension `6·C(5,2) + 4 = 64`. The same assembly
//! for a genus-`g` surface gives a faithful representation of the
//! hyperelliptic mapping class group of dimension `(2g+2)·C(2g+1,2) + 2g`.
//!
//! Dehn twists act on homology as symplectic transvections
//! `T_c(x) = x + ⟨x,c⟩c`. The twist curves form a chain whose homology
//! classes are `a_1, b_1, a_1+a_2, b_2, a_2, ..` in the standard symplectic
//! basis; the chain intersection pattern and `H(involution) = -I` pin the
//! choice down.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::RingMatrix;
use crate::sphere::SphereRep;
use crate::word::{Context, Letter, Word};

/// Integer homology class in the basis `(a_1, b_1, .., a_g, b_g)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyClass {
    coords: Vec<i64>,
}

impl HomologyClass {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if !coords.len().is_multiple_of(2) || coords.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "homology class needs 2g coordinates, got {}",
                coords.len()
            )));
        }
        Ok(HomologyClass { coords })
    }

    pub fn zero(g: usize) -> Self {
        HomologyClass { coords: vec![0; 2 * g] }
    }

    pub fn genus(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Algebraic intersection pairing with `⟨a_i, b_i⟩ = 1`.
    pub fn pairing(&self, other: &HomologyClass) -> i64 {
        assert_eq!(self.coords.len(), other.coords.len());
        let mut s = 0;
        for k in 0..self.genus() {
            s += self.coords[2 * k] * other.coords[2 * k + 1]
                - self.coords[2 * k + 1] * other.coords[2 * k];
        }
        s
    }
}

/// The symplectic transvection `x ↦ x + ⟨x,c⟩c` as an integer matrix.
pub fn transvection(c: &HomologyClass) -> RingMatrix {
    let d = 2 * c.genus();
    RingMatrix::from_fn(d, |row, col| {
        let mut e = vec![0i64; d];
        e[col] = 1;
        let basis_vec = HomologyClass { coords: e };
        let mut value = if row == col { 1 } else { 0 };
        value += basis_vec.pairing(c) * c.coords[row];
        LaurentPoly::constant(value)
    })
}

/// Homology classes of the `2g+1` chain curves whose twists generate:
/// `c_1 = a_1`, `c_{2k} = b_k`, `c_{2k+1} = a_k + a_{k+1}` (`a_{g+1} = 0`).
pub fn lickorish_classes(g: usize) -> Vec<HomologyClass> {
    let mut out = Vec::with_capacity(2 * g + 1);
    for i in 1..=2 * g + 1 {
        let mut v = vec![0i64; 2 * g];
        if i == 1 {
            v[0] = 1;
        } else if i % 2 == 0 {
            let k = i / 2;
            v[2 * k - 1] = 1;
        } else {
            let k = (i - 1) / 2;
            v[2 * k - 2] = 1;
            if k < g {
                v[2 * k] = 1;
            }
        }
        out.push(HomologyClass { coords: v });
    }
    out
}

/// `H(t_i)`: the transvection along the `i`-th chain class, `1 ≤ i ≤ 2g+1`.
pub fn symplectic_generator(g: usize, i: usize) -> Result<RingMatrix> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!("genus must be >= 2, got {g}")));
    }
    if i == 0 || i > 2 * g + 1 {
        return Err(Error::IndexOutOfRange { index: i, context: format!("hyperelliptic({g})") });
    }
    Ok(transvection(&lickorish_classes(g)[i - 1]))
}

/// Dimension of the hyperelliptic representation: `(2g+2)·C(2g+1,2) + 2g`.
pub fn hyperelliptic_dim(g: usize) -> usize {
    (2 * g + 2) * (2 * g + 1) * (2 * g) / 2 + 2 * g
}

/// The hyperelliptic involution as the chain word
/// `t_1 .. t_{2g+1} t_{2g+1} .. t_1`.
pub fn involution_word(g: usize) -> Word {
    let ctx = Context::Hyperelliptic(g);
    let mut letters: Vec<Letter> = (1..=2 * g + 1).map(Letter::gen).collect();
    letters.extend((1..=2 * g + 1).rev().map(Letter::gen));
    Word::new(ctx, letters).expect("valid indices")
}

/// `K_{2g+2} ⊕ H` acting in dimension `(2g+2)·C(2g+1,2) + 2g`.
pub struct HyperellipticRep {
    g: usize,
    sphere: SphereRep,
    twists: Vec<RingMatrix>,
    twist_invs: Vec<RingMatrix>,
}

impl HyperellipticRep {
    pub fn new(g: usize) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidArgument(format!("genus must be >= 2, got {g}")));
        }
        let sphere = SphereRep::new(2 * g + 2)?;
        let mut twists = Vec::with_capacity(2 * g + 1);
        let mut twist_invs = Vec::with_capacity(2 * g + 1);
        for i in 1..=2 * g + 1 {
            let m = symplectic_generator(g, i)?;
            twist_invs.push(m.inverse()?);
            twists.push(m);
        }
        Ok(HyperellipticRep { g, sphere, twists, twist_invs })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        self.sphere.dim() + 2 * self.g
    }

    pub fn sphere_part(&self) -> &SphereRep {
        &self.sphere
    }

    pub fn symplectic_part(&self, i: usize) -> Result<&RingMatrix> {
        self.check(i)?;
        Ok(&self.twists[i - 1])
    }

    pub fn symplectic_part_inverse(&self, i: usize) -> Result<&RingMatrix> {
        self.check(i)?;
        Ok(&self.twist_invs[i - 1])
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > 2 * self.g + 1 {
            return Err(Error::IndexOutOfRange {
                index: i,
                context: format!("hyperelliptic({})", self.g),
            });
        }
        Ok(())
    }

    fn context_ok(&self, ctx: Context) -> bool {
        ctx == Context::Hyperelliptic(self.g) || (self.g == 2 && ctx == Context::Genus2)
    }

    /// Full direct-sum image of a word over `t_1 .. t_{2g+1}`.
    pub fn eval(&self, w: &Word) -> Result<RingMatrix> {
        let (sphere_m, sympl) = self.eval_parts(w)?;
        Ok(sphere_m.direct_sum(&sympl))
    }

    /// The two summands separately (sphere part dense).
    pub fn eval_parts(&self, w: &Word) -> Result<(RingMatrix, RingMatrix)> {
        if !self.context_ok(w.context()) {
            return Err(Error::ContextMismatch(
                w.context().to_string(),
                format!("hyperelliptic({})", self.g),
            ));
        }
        let sphere_word = w.with_context(Context::Sphere(2 * self.g + 2))?;
        let sphere_m = self.sphere.eval(&sphere_word)?;
        let mut sympl = RingMatrix::identity(2 * self.g);
        for l in w.letters() {
            let m = if l.sign > 0 { &self.twists[l.index - 1] } else { &self.twist_invs[l.index - 1] };
            sympl = sympl.try_mul(m)?;
        }
        Ok((sphere_m, sympl))
    }

    /// Dense image of the generator `t_i`.
    pub fn generator_matrix(&self, i: usize) -> Result<RingMatrix> {
        self.check(i)?;
        Ok(self.sphere.generator_matrix(i)?.direct_sum(&self.twists[i - 1]))
    }

    pub fn generator_inverse_matrix(&self, i: usize) -> Result<RingMatrix> {
        self.check(i)?;
        Ok(self
            .sphere
            .generator_inverse_matrix(i)?
            .direct_sum(&self.twist_invs[i - 1]))
    }
}

/// The 64-dimensional faithful representation of the genus-2 mapping class
/// group: `K_6 ⊕ H` with generators `t_1 .. t_5`.
pub struct Genus2Rep {
    rep: HyperellipticRep,
}

impl Genus2Rep {
    pub fn new() -> Result<Self> {
        Ok(Genus2Rep { rep: HyperellipticRep::new(2)? })
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn inner(&self) -> &HyperellipticRep {
        &self.rep
    }

    /// The involution word in the genus-2 context.
    pub fn involution_word() -> Word {
        crate::word::genus2_involution()
    }

    pub fn eval(&self, w: &Word) -> Result<RingMatrix> {
        self.rep.eval(w)
    }

    pub fn eval_parts(&self, w: &Word) -> Result<(RingMatrix, RingMatrix)> {
        self.rep.eval_parts(w)
    }

    pub fn generator_matrix(&self, i: usize) -> Result<RingMatrix> {
        self.rep.generator_matrix(i)
    }

    pub fn generator_inverse_matrix(&self, i: usize) -> Result<RingMatrix> {
        self.rep.generator_inverse_matrix(i)
    }
}

/// Decides word equality through the context's faithful representation:
/// `L_n` for braids (exact, center included), `K_n` for punctured spheres,
/// `K_6 ⊕ H` for genus 2, `K_{2g+2} ⊕ H` for hyperelliptic groups.
pub fn equal_words(w1: &Word, w2: &Word) -> Result<bool> {
    if w1.context() != w2.context() {
        return Err(Error::ContextMismatch(
            w1.context().to_string(),
            w2.context().to_string(),
        ));
    }
    let quotient = w1.concat(&w2.inverse())?;
    match w1.context() {
        Context::Braid(n) => {
            let rep = crate::lk::LkRep::new(n)?;
            Ok(rep.eval(&quotient, false)?.is_identity())
        }
        Context::Sphere(n) => {
            let rep = SphereRep::new(n)?;
            Ok(rep.eval_blocks(&quotient)?.is_identity())
        }
        Context::Genus2 => {
            let rep = Genus2Rep::new()?;
            Ok(rep.eval(&quotient)?.is_identity())
        }
        Context::Hyperelliptic(g) => {
            let rep = HyperellipticRep::new(g)?;
            Ok(rep.eval(&quotient)?.is_identity())
        }
    }
}
