//! Group words: contexts, letters, parsing, free reduction, relator library.

use std::fmt;

use crate::error::{Error, Result};

/// The group a word lives in, determining its generator alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Context {
    /// Braid group on `n` strands, generators `s1..s(n-1)`.
    Braid(usize),
    /// Mapping class group of the `n`-punctured sphere, generators `s1..s(n-1)`.
    Sphere(usize),
    /// Mapping class group of the closed genus-2 surface, generators `t1..t5`.
    Genus2,
    /// Hyperelliptic mapping class group of genus `g`, generators `t1..t(2g+1)`.
    Hyperelliptic(usize),
}

impl Context {
    /// Number of generators in this context's alphabet.
    pub fn generator_count(&self) -> usize {
        match self {
            Context::Braid(n) | Context::Sphere(n) => n - 1,
            Context::Genus2 => 5,
            Context::Hyperelliptic(g) => 2 * g + 1,
        }
    }

    /// Token prefix of the context's generators in the text syntax.
    pub fn token_prefix(&self) -> char {
        match self {
            Context::Braid(_) | Context::Sphere(_) => 's',
            Context::Genus2 | Context::Hyperelliptic(_) => 't',
        }
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.generator_count() {
            return Err(Error::IndexOutOfRange { index, context: self.to_string() });
        }
        Ok(())
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::Braid(n) => write!(f, "braid({n})"),
            Context::Sphere(n) => write!(f, "sphere({n})"),
            Context::Genus2 => write!(f, "genus2"),
            Context::Hyperelliptic(g) => write!(f, "hyperelliptic({g})"),
        }
    }
}

/// Generator letter: a 1-based index with a sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: i8, // +1 or -1
}

impl Letter {
    pub fn gen(index: usize) -> Self {
        Letter { index, sign: 1 }
    }

    pub fn inv(index: usize) -> Self {
        Letter { index, sign: -1 }
    }

    pub fn inverse(&self) -> Self {
        Letter { index: self.index, sign: -self.sign }
    }
}

/// A word in a context's generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    context: Context,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(context: Context, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            context.check_index(l.index)?;
            debug_assert!(l.sign == 1 || l.sign == -1);
        }
        Ok(Word { context, letters })
    }

    pub fn empty(context: Context) -> Self {
        Word { context, letters: Vec::new() }
    }

    /// Parses whitespace-separated tokens `s<k>` / `t<k>`, each with an
    /// optional `^-1` suffix. Token positions are reported 1-based.
    pub fn parse(text: &str, context: Context) -> Result<Self> {
        let prefix = context.token_prefix();
        let mut letters = Vec::new();
        let mut pos = 0usize;
        let bytes = text.as_bytes();
        let n = bytes.len();
        while pos < n {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let start = pos;
            while pos < n && !bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let token = &text[start..pos];
            let (body, sign) = match token.strip_suffix("^-1") {
                Some(b) => (b, -1),
                None => (token, 1),
            };
            let mut chars = body.chars();
            let head = chars.next();
            if head != Some(prefix) {
                return Err(Error::Parse {
                    pos: start + 1,
                    msg: format!("expected generator token starting with '{prefix}', got {token:?}"),
                });
            }
            let digits = chars.as_str();
            let index: usize = digits.parse().map_err(|_| Error::Parse {
                pos: start + 1,
                msg: format!("invalid generator index in token {token:?}"),
            })?;
            context.check_index(index)?;
            letters.push(Letter { index, sign });
        }
        Ok(Word { context, letters })
    }

    pub fn context(&self) -> Context {
        self.context
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Signed letter count (the braid abelianization lives on top of this).
    pub fn signed_letter_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    /// Cancels adjacent inverse pairs to a fixed point.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(last) if last.index == l.index && last.sign == -l.sign => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { context: self.context, letters: out }
    }

    /// The group inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> Word {
        Word {
            context: self.context,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.context != other.context {
            return Err(Error::ContextMismatch(self.context.to_string(), other.context.to_string()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { context: self.context, letters })
    }

    /// `self * self * ... * self`, `k` times.
    pub fn repeat(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word { context: self.context, letters }
    }

    /// Reinterprets the word in another context with the same token alphabet.
    pub fn with_context(&self, context: Context) -> Result<Word> {
        Word::new(context, self.letters.clone())
    }

    /// Underlying permutation of `{1..n}` when each letter `i` acts as the
    /// transposition `(i, i+1)`; `perm[k]` is the image of point `k+1` under
    /// the composite in which the first letter is applied last.
    pub fn permutation(&self, points: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (1..=points).collect();
        for l in &self.letters {
            perm.swap(l.index - 1, l.index);
        }
        perm
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = self.context.token_prefix();
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{prefix}{}", l.index)?;
            if l.sign < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// A named relator word, expected to evaluate to the identity.
#[derive(Clone, Debug)]
pub struct Relator {
    pub name: String,
    pub word: Word,
}

fn braid_style_relators(context: Context) -> Vec<Relator> {
    let k = context.generator_count();
    let mut out = Vec::new();
    for i in 1..k {
        let word = Word::new(
            context,
            vec![
                Letter::gen(i),
                Letter::gen(i + 1),
                Letter::gen(i),
                Letter::inv(i + 1),
                Letter::inv(i),
                Letter::inv(i + 1),
            ],
        )
        .expect("valid indices");
        out.push(Relator { name: format!("braid({i},{})", i + 1), word });
    }
    for i in 1..=k {
        for j in i + 2..=k {
            let word = Word::new(
                context,
                vec![Letter::gen(i), Letter::gen(j), Letter::inv(i), Letter::inv(j)],
            )
            .expect("valid indices");
            out.push(Relator { name: format!("comm({i},{j})"), word });
        }
    }
    out
}

/// Ascending run `g_1 g_2 .. g_k` as a word.
fn ascending(context: Context, upto: usize) -> Word {
    Word::new(context, (1..=upto).map(Letter::gen).collect()).expect("valid indices")
}

/// The relators checked by `verify` for each context. Braid groups have only
/// the braid and far-commutation relators; punctured-sphere and genus-2
/// contexts add their classical extra relators.
pub fn relation_suite(context: Context) -> Vec<Relator> {
    let mut out = braid_style_relators(context);
    match context {
        Context::Braid(_) | Context::Hyperelliptic(_) => {}
        Context::Sphere(n) => {
            let up = ascending(context, n - 1);
            let down = Word::new(context, (1..n).rev().map(Letter::gen).collect()).expect("valid");
            out.push(Relator {
                name: "boundary".into(),
                word: up.concat(&down).expect("same context"),
            });
            out.push(Relator { name: "full_twist".into(), word: up.repeat(n) });
        }
        Context::Genus2 => {
            let up = ascending(context, 5);
            out.push(Relator { name: "chain_power".into(), word: up.repeat(6) });
            let iota = genus2_involution();
            out.push(Relator {
                name: "involution_sq".into(),
                word: iota.concat(&iota).expect("same context"),
            });
            for i in 1..=5 {
                let ti = Word::new(context, vec![Letter::gen(i)]).expect("valid");
                let comm = iota
                    .concat(&ti)
                    .and_then(|w| w.concat(&iota.inverse()))
                    .and_then(|w| w.concat(&ti.inverse()))
                    .expect("same context");
                out.push(Relator { name: format!("involution_central({i})"), word: comm });
            }
        }
    }
    out
}

/// The relation suite as a newline-separated word list.
pub fn relation_suite_text(context: Context) -> String {
    let mut out = String::new();
    for relator in relation_suite(context) {
        out.push_str(&relator.word.to_string());
        out.push('\n');
    }
    out
}

/// The hyperelliptic involution `t1..t5 t5..t1` as a genus-2 word.
pub fn genus2_involution() -> Word {
    let mut letters: Vec<Letter> = (1..=5).map(Letter::gen).collect();
    letters.extend((1..=5).rev().map(Letter::gen));
    Word::new(Context::Genus2, letters).expect("valid indices")
}
