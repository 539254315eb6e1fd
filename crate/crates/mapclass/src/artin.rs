//! Free-group automorphism oracles.
//!
//! The classical Artin action of the braid group on the free group
//! (`σᵢ: xᵢ ↦ xᵢxᵢ₊₁xᵢ⁻¹, xᵢ₊₁ ↦ xᵢ`) is faithful, which makes composed
//! endomorphisms an independent brute-force oracle for braid-word equality.
//! The same action descends to the punctured sphere: the fundamental group of
//! the `n`-punctured sphere is free on `x₁..xₙ₋₁` with `xₙ = (x₁..xₙ₋₁)⁻¹`,
//! and a sphere mapping class is trivial exactly when it acts by an inner
//! automorphism. That quotient oracle validates the coset-factor table used
//! by the induced representation without going through any matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Context, Word};

/// Freely reduced word in the free group on `x1..xr` (letters are
/// `(generator index, sign)` with 1-based indices).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeWord(Vec<(usize, i8)>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        FreeWord(vec![(i, 1)])
    }

    pub fn from_letters(letters: Vec<(usize, i8)>) -> Self {
        let mut out = FreeWord::identity();
        for l in letters {
            out.push(l);
        }
        out
    }

    fn push(&mut self, l: (usize, i8)) {
        match self.0.last() {
            Some(&(g, s)) if g == l.0 && s == -l.1 => {
                self.0.pop();
            }
            _ => self.0.push(l),
        }
    }

    fn extend_reduced(&mut self, other: &FreeWord) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&(g, s)| (g, -s)).collect())
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.extend_reduced(other);
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Splits `self = p · core · p⁻¹` with `core` cyclically reduced.
    fn conjugacy_split(&self) -> (FreeWord, FreeWord) {
        let mut w = self.0.clone();
        let mut prefix = Vec::new();
        while w.len() >= 2 {
            let first = w[0];
            let last = *w.last().expect("len >= 2");
            if first.0 == last.0 && first.1 == -last.1 {
                prefix.push(first);
                w = w[1..w.len() - 1].to_vec();
            } else {
                break;
            }
        }
        (FreeWord(prefix), FreeWord(w))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(g, s) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{g}")?;
            if s < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Endomorphism of a free group, given by the images of its generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeGroupEndo {
    images: Vec<FreeWord>, // images[i] = image of x_{i+1}
}

impl FreeGroupEndo {
    pub fn identity(rank: usize) -> Self {
        FreeGroupEndo { images: (1..=rank).map(FreeWord::generator).collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, generator: usize) -> &FreeWord {
        &self.images[generator - 1]
    }

    /// Substitutes generator images into `w` and reduces.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &(g, s) in &w.0 {
            let img = &self.images[g - 1];
            if s > 0 {
                out.extend_reduced(img);
            } else {
                out.extend_reduced(&img.inverse());
            }
        }
        out
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &FreeGroupEndo) -> FreeGroupEndo {
        FreeGroupEndo { images: other.images.iter().map(|w| self.apply(w)).collect() }
    }

    /// Conjugation `x ↦ g x g⁻¹`.
    pub fn conjugation(rank: usize, g: &FreeWord) -> FreeGroupEndo {
        let gi = g.inverse();
        FreeGroupEndo {
            images: (1..=rank)
                .map(|i| g.concat(&FreeWord::generator(i)).concat(&gi))
                .collect(),
        }
    }

    /// If `self` is conjugation by some `g`, returns `g`.
    pub fn as_inner(&self) -> Option<FreeWord> {
        let rank = self.rank();
        let (p, core) = self.image(1).conjugacy_split();
        if core != FreeWord::generator(1) {
            return None;
        }
        // g = p * x1^k; read k off the image of x2 (rank >= 2 in every use)
        let mut g = p.clone();
        if rank >= 2 {
            let v = p.inverse().concat(self.image(2)).concat(&p);
            let mut k: i64 = 0;
            for &(gen, s) in &v.0 {
                if gen == 1 {
                    k += s as i64;
                } else {
                    break;
                }
            }
            let x1 = FreeWord::generator(1);
            for _ in 0..k.abs() {
                g = if k > 0 { g.concat(&x1) } else { g.concat(&x1.inverse()) };
            }
        }
        if &FreeGroupEndo::conjugation(rank, &g) == self {
            Some(g)
        } else {
            None
        }
    }
}

/// Artin action of a single braid letter on the free group of rank `n`.
fn artin_letter(n: usize, index: usize, sign: i8) -> FreeGroupEndo {
    let mut endo = FreeGroupEndo::identity(n);
    let i = index;
    if sign > 0 {
        endo.images[i - 1] = FreeWord(vec![(i, 1), (i + 1, 1), (i, -1)]);
        endo.images[i] = FreeWord::generator(i);
    } else {
        endo.images[i - 1] = FreeWord::generator(i + 1);
        endo.images[i] = FreeWord(vec![(i + 1, -1), (i, 1), (i + 1, 1)]);
    }
    endo
}

/// Composite Artin automorphism of a braid word on the free group of rank `n`.
pub fn artin_apply(w: &Word) -> Result<FreeGroupEndo> {
    let Context::Braid(n) = w.context() else {
        return Err(Error::ContextMismatch(w.context().to_string(), "braid(n)".into()));
    };
    let mut acc = FreeGroupEndo::identity(n);
    for l in w.letters() {
        acc = acc.compose(&artin_letter(n, l.index, l.sign));
    }
    Ok(acc)
}

/// Action of one sphere letter on `F_{n-1}`; `σ_{n-1}` uses the relation
/// `x_n = (x_1..x_{n-1})^{-1}`.
fn sphere_letter(n: usize, index: usize, sign: i8) -> FreeGroupEndo {
    let m = n - 1;
    if index < m {
        return artin_letter(m, index, sign);
    }
    let mut endo = FreeGroupEndo::identity(m);
    let all: FreeWord = FreeWord::from_letters((1..=m).map(|g| (g, 1)).collect());
    if sign > 0 {
        // x_m -> x_m (x_1..x_m)^{-1} x_m^{-1}
        endo.images[m - 1] = FreeWord::generator(m)
            .concat(&all.inverse())
            .concat(&FreeWord::generator(m).inverse());
    } else {
        // x_m -> (x_1..x_m)^{-1}
        endo.images[m - 1] = all.inverse();
    }
    endo
}

/// Composite action of a sphere word on the free fundamental group `F_{n-1}`.
pub fn sphere_action(w: &Word) -> Result<FreeGroupEndo> {
    let Context::Sphere(n) = w.context() else {
        return Err(Error::ContextMismatch(w.context().to_string(), "sphere(n)".into()));
    };
    let mut acc = FreeGroupEndo::identity(n - 1);
    for l in w.letters() {
        acc = acc.compose(&sphere_letter(n, l.index, l.sign));
    }
    Ok(acc)
}

/// Decides triviality of a sphere word: identity puncture permutation and an
/// inner action on the fundamental group.
pub fn sphere_word_is_trivial(w: &Word) -> Result<bool> {
    let Context::Sphere(n) = w.context() else {
        return Err(Error::ContextMismatch(w.context().to_string(), "sphere(n)".into()));
    };
    if w.permutation(n) != (1..=n).collect::<Vec<_>>() {
        return Ok(false);
    }
    Ok(sphere_action(w)?.as_inner().is_some())
}
