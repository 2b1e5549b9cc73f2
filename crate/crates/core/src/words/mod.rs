//! Free words over a finite alphabet of generators.
//!
//! Conventions used throughout the crate: `[u, v] = u⁻¹v⁻¹uv` and
//! `u^t = t⁻¹ut` (right action).

mod presentation;

pub use presentation::{GeneratorSymbol, ParseError, Presentation, PresentationError};

use std::fmt;

use thiserror::Error;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Column index in a coset table: `2g` for `g`, `2g + 1` for `g⁻¹`.
    pub fn column(self) -> usize {
        2 * self.generator + self.inverse as usize
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator index {index} is outside an alphabet of {rank} generators")]
    UnknownGenerator { index: usize, rank: usize },
    #[error("alphabet mismatch: words over {left} and {right} generators")]
    AlphabetMismatch { left: usize, right: usize },
}

/// A freely reduced word in the free group of rank `rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// The one-letter word `g`.
    ///
    /// Panics if `g >= rank`.
    pub fn generator(rank: usize, g: usize) -> Self {
        assert!(g < rank, "generator {g} outside alphabet of rank {rank}");
        Word {
            rank,
            letters: vec![Letter::new(g, false)],
        }
    }

    /// Freely reduces a letter sequence.
    pub fn reduce<I>(rank: usize, letters: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if l.generator >= rank {
                return Err(WordError::UnknownGenerator {
                    index: l.generator,
                    rank,
                });
            }
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Ok(Word { rank, letters: out })
    }

    /// Builds a word from signed 1-based indices: `k > 0` is generator
    /// `k - 1`, `k < 0` its inverse.
    pub fn from_signed(rank: usize, signed: &[i32]) -> Result<Self, WordError> {
        let letters = signed.iter().map(|&k| {
            assert!(k != 0, "signed letter 0 is not a generator");
            Letter::new(k.unsigned_abs() as usize - 1, k < 0)
        });
        Word::reduce(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    fn check_alphabet(&self, other: &Word) -> Result<(), WordError> {
        if self.rank != other.rank {
            return Err(WordError::AlphabetMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    /// Reduced product `self · other`.
    pub fn product(&self, other: &Word) -> Result<Word, WordError> {
        self.check_alphabet(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            match letters.last() {
                Some(&last) if last.cancels(l) => {
                    letters.pop();
                }
                _ => letters.push(l),
            }
        }
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = Word::identity(self.rank);
        for _ in 0..exponent.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `[u, v] = u⁻¹v⁻¹uv`.
    pub fn commutator(u: &Word, v: &Word) -> Result<Word, WordError> {
        u.check_alphabet(v)?;
        Word::reduce(
            u.rank,
            u.inverse()
                .letters
                .into_iter()
                .chain(v.inverse().letters)
                .chain(u.letters.iter().copied())
                .chain(v.letters.iter().copied()),
        )
    }

    /// `u^t = t⁻¹ut`.
    pub fn conjugate(u: &Word, t: &Word) -> Result<Word, WordError> {
        u.check_alphabet(t)?;
        Word::reduce(
            u.rank,
            t.inverse()
                .letters
                .into_iter()
                .chain(u.letters.iter().copied())
                .chain(t.letters.iter().copied()),
        )
    }

    /// Substitutes `images[g]` for each generator `g`; the images fix the
    /// target alphabet.
    pub fn substitute(&self, images: &[Word]) -> Result<Word, WordError> {
        let target = match images.first() {
            Some(w) => w.rank,
            None if self.rank == 0 => 0,
            None => {
                return Err(WordError::UnknownGenerator {
                    index: 0,
                    rank: 0,
                })
            }
        };
        if images.len() != self.rank {
            return Err(WordError::AlphabetMismatch {
                left: self.rank,
                right: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|w| w.rank != target) {
            return Err(WordError::AlphabetMismatch {
                left: target,
                right: bad.rank,
            });
        }
        let mut letters = Vec::new();
        for l in &self.letters {
            let img = &images[l.generator];
            if l.inverse {
                letters.extend(img.letters.iter().rev().map(|x| x.inv()));
            } else {
                letters.extend(img.letters.iter().copied());
            }
        }
        Word::reduce(target, letters)
    }

    /// Renames generators into a larger alphabet: letter `g` becomes
    /// `offset + g` in an alphabet of `rank` generators.
    pub fn shift(&self, rank: usize, offset: usize) -> Result<Word, WordError> {
        Word::reduce(
            rank,
            self.letters
                .iter()
                .map(|l| Letter::new(l.generator + offset, l.inverse)),
        )
    }

    /// Removes matching letters from both ends.
    pub fn cyclically_reduced(&self) -> Word {
        let mut start = 0;
        let mut end = self.letters.len();
        while end - start >= 2 && self.letters[start].cancels(self.letters[end - 1]) {
            start += 1;
            end -= 1;
        }
        Word {
            rank: self.rank,
            letters: self.letters[start..end].to_vec(),
        }
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for l in &self.letters {
            sums[l.generator] += if l.inverse { -1 } else { 1 };
        }
        sums
    }

    /// Shortlex comparison with letter order `a < a⁻¹ < b < b⁻¹ < …`.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| {
                self.letters
                    .iter()
                    .map(|l| l.column())
                    .cmp(other.letters.iter().map(|l| l.column()))
            })
    }

    /// Renders the word with the given generator names, using `^k` for runs.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl std::ops::Mul<&Word> for &Word {
    type Output = Word;

    /// Panics on alphabet mismatch; use [`Word::product`] to get an error instead.
    fn mul(self, rhs: &Word) -> Word {
        self.product(rhs).expect("word alphabets differ")
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = &self.word.letters;
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let name = self
                .names
                .get(l.generator)
                .map(String::as_str)
                .unwrap_or("?");
            let exp = if l.inverse { -(run as i64) } else { run as i64 };
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}
