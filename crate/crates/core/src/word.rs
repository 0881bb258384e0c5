//! Free group words.
//!
//! A [`Word`] is always freely reduced: every constructor runs the
//! single-pass stack reduction, so no adjacent pair `g g⁻¹` survives.
//! Generators are 1-based indices; text uses one ASCII letter per
//! generator, lowercase for the generator and uppercase for its inverse.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator '{ch}' at position {pos}")]
    UnknownGenerator { ch: char, pos: usize },
    #[error("no image given for generator {gen}")]
    MissingImage { gen: usize },
    #[error("generator {gen} out of range (have {num_gens})")]
    GeneratorOutOfRange { gen: usize, num_gens: usize },
}

/// A generator or its inverse. Stored as `+g` / `-g`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(gen: usize, sign: i8) -> Letter {
        assert!(gen >= 1, "generator indices are 1-based");
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let g = i32::try_from(gen).expect("generator index overflow");
        Letter(if sign > 0 { g } else { -g })
    }

    pub fn pos(gen: usize) -> Letter {
        Letter::new(gen, 1)
    }

    pub fn neg(gen: usize) -> Letter {
        Letter::new(gen, -1)
    }

    #[inline]
    pub fn gen(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    #[inline]
    pub fn sign(self) -> i8 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn to_char(self, names: &[char]) -> char {
        let c = names[self.gen() - 1];
        if self.is_inverse() {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    pub fn parse(ch: char, names: &[char]) -> Option<Letter> {
        let lower = ch.to_ascii_lowercase();
        let idx = names.iter().position(|&n| n == lower)?;
        Some(Letter::new(idx + 1, if ch.is_ascii_uppercase() { -1 } else { 1 }))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "g{}^-1", self.gen())
        } else {
            write!(f, "g{}", self.gen())
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in raw {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Parses the compact text form, e.g. `"XyXYxY"` over `['x', 'y']`.
    pub fn parse(text: &str, names: &[char]) -> Result<Word, WordError> {
        let mut raw = Vec::with_capacity(text.len());
        for (pos, ch) in text.chars().enumerate() {
            let l = Letter::parse(ch, names).ok_or(WordError::UnknownGenerator { ch, pos })?;
            raw.push(l);
        }
        Ok(Word::reduce(raw))
    }

    pub fn format(&self, names: &[char]) -> String {
        self.letters.iter().map(|l| l.to_char(names)).collect()
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

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        // Cancellation only happens at the seam.
        let mut k = 0;
        let (a, b) = (&self.letters, &other.letters);
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[k].inverse() {
            k += 1;
        }
        let mut letters = Vec::with_capacity(a.len() + b.len() - 2 * k);
        letters.extend_from_slice(&a[..a.len() - k]);
        letters.extend_from_slice(&b[k..]);
        Word { letters }
    }

    /// `by · self · by⁻¹`
    pub fn conjugate(&self, by: &Word) -> Word {
        by.concat(self).concat(&by.inverse())
    }

    pub fn pow(&self, k: usize) -> Word {
        let (core, conj) = self.cyclic_reduce();
        let mut raw = Vec::with_capacity(core.len() * k);
        for _ in 0..k {
            raw.extend_from_slice(&core.letters);
        }
        // A cyclically reduced core has no cancellation between copies.
        Word { letters: raw }.conjugate(&conj)
    }

    /// Splits `self = conjugator · core · conjugator⁻¹` with `core`
    /// cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let l = &self.letters;
        let mut k = 0;
        while 2 * k + 1 < l.len() && l[k] == l[l.len() - 1 - k].inverse() {
            k += 1;
        }
        let core = Word {
            letters: l[k..l.len() - k].to_vec(),
        };
        let conj = Word {
            letters: l[..k].to_vec(),
        };
        (core, conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) => self.len() == 1 || a != b.inverse(),
            _ => true,
        }
    }

    /// Rotation moving the first `k` letters to the end. Only meaningful
    /// on cyclically reduced words; the result is reduced anyway.
    pub fn rotate(&self, k: usize) -> Word {
        let k = if self.is_empty() { 0 } else { k % self.len() };
        Word::reduce(
            self.letters[k..]
                .iter()
                .chain(self.letters[..k].iter())
                .copied(),
        )
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word {
            letters: self.letters[..k].to_vec(),
        }
    }

    pub fn suffix_from(&self, k: usize) -> Word {
        Word {
            letters: self.letters[k..].to_vec(),
        }
    }

    pub fn count_gen(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen() == gen).count()
    }

    pub fn max_gen(&self) -> usize {
        self.letters.iter().map(|l| l.gen()).max().unwrap_or(0)
    }

    /// Entry `g - 1` is the exponent sum of generator `g`.
    pub fn exponent_sums(&self, num_gens: usize) -> Result<Vec<i64>, WordError> {
        let mut sums = vec![0i64; num_gens];
        for l in &self.letters {
            let g = l.gen();
            if g > num_gens {
                return Err(WordError::GeneratorOutOfRange { gen: g, num_gens });
            }
            sums[g - 1] += i64::from(l.sign());
        }
        Ok(sums)
    }

    /// Substitutes `images[g - 1]` for every `g` and reduces.
    pub fn apply_endomorphism(&self, images: &[Option<Word>]) -> Result<Word, WordError> {
        let mut raw = Vec::new();
        for l in &self.letters {
            let img = images
                .get(l.gen() - 1)
                .and_then(|w| w.as_ref())
                .ok_or(WordError::MissingImage { gen: l.gen() })?;
            if l.is_inverse() {
                raw.extend(img.letters.iter().rev().map(|m| m.inverse()));
            } else {
                raw.extend_from_slice(&img.letters);
            }
        }
        Ok(Word::reduce(raw))
    }

    /// Some `d` with `self = d · other · d⁻¹`, if the two are conjugate.
    pub fn conjugator_from(&self, other: &Word) -> Option<Word> {
        let (core_t, c_t) = self.cyclic_reduce();
        let (core_s, c_s) = other.cyclic_reduce();
        if core_t.len() != core_s.len() {
            return None;
        }
        if core_t.is_empty() {
            return Some(Word::empty());
        }
        // core_t = a⁻¹ · core_s · a where core_s = a · b.
        let k = (0..core_s.len()).find(|&k| core_s.rotate(k) == core_t)?;
        let a = core_s.prefix(k);
        let d = c_t.concat(&a.inverse()).concat(&c_s.inverse());
        debug_assert_eq!(other.conjugate(&d), *self);
        Some(d)
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Word {
        Word::letter(l)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Debug output assumes the default x, y, z, a, b, ... naming.
        let names = crate::presentation::default_names(self.max_gen());
        write!(f, "Word({:?})", self.format(&names))
    }
}
