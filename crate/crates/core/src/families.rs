//! The presentation families handled by this crate.
//!
//! `F4n1` and `F4n3` are the two-generator presentations attached to the
//! R-links `L(3,2;4/d)` for `d = 4n+1` and `d = 4n+3`; `Ak` is the
//! Akbulut-Kirby family `⟨x,y | xyx = yxy, x^{n+1} = y^n⟩`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family spec {0:?} is not of the form f4n1:<n>, f4n3:<n> or ak:<n>")]
    BadSpec(String),
    #[error("negative parameter n = {0}")]
    Negative(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    F4n1,
    F4n3,
    Ak,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::F4n1 => "f4n1",
            Family::F4n3 => "f4n3",
            Family::Ak => "ak",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyId {
    pub family: Family,
    pub n: u64,
}

impl FamilyId {
    pub fn new(family: Family, n: i64) -> Result<FamilyId, FamilyError> {
        let n = u64::try_from(n).map_err(|_| FamilyError::Negative(n))?;
        Ok(FamilyId { family, n })
    }

    /// `d = 4n+1` or `4n+3`; `None` for the Akbulut-Kirby family.
    pub fn d(&self) -> Option<u64> {
        match self.family {
            Family::F4n1 => Some(4 * self.n + 1),
            Family::F4n3 => Some(4 * self.n + 3),
            Family::Ak => None,
        }
    }

    pub fn presentation(&self) -> Presentation {
        let n = self.n as usize;
        match self.family {
            Family::F4n1 => presentation_4n1(n),
            Family::F4n3 => presentation_4n3(n),
            Family::Ak => ak_presentation(n),
        }
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<FamilyId, FamilyError> {
        let bad = || FamilyError::BadSpec(s.to_string());
        let (tag, n) = s.split_once(':').ok_or_else(bad)?;
        let family = match tag {
            "f4n1" => Family::F4n1,
            "f4n3" => Family::F4n3,
            "ak" => Family::Ak,
            _ => return Err(bad()),
        };
        let n: i64 = n.parse().map_err(|_| bad())?;
        FamilyId::new(family, n)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.tag(), self.n)
    }
}

const XY: [char; 2] = ['x', 'y'];

fn w(text: &str) -> Word {
    Word::parse(text, &XY).expect("literal over x, y")
}

fn chain(parts: &[Word]) -> Word {
    parts.iter().fold(Word::empty(), |acc, p| acc.concat(p))
}

fn two_relators(r: Word, s: Word) -> Presentation {
    Presentation::new(XY.to_vec(), vec![r, s]).expect("two relators over x, y")
}

/// `⟨x,y | x̄(yx̄)ⁿȳ(ȳx)ⁿy, x̄(yx̄)ⁿȳ(xȳ)ⁿ⟩`
pub fn presentation_4n1(n: usize) -> Presentation {
    let r = chain(&[w("X"), w("yX").pow(n), w("Y"), w("Yx").pow(n), w("y")]);
    let s = chain(&[w("X"), w("yX").pow(n), w("Y"), w("xY").pow(n)]);
    two_relators(r, s)
}

/// `⟨x,y | ȳ(x̄ȳx̄)ⁿ(yx²)ⁿyx, x̄(ȳx̄²)ⁿȳx̄ȳ(xyx)ⁿxy⟩`
pub fn presentation_4n3(n: usize) -> Presentation {
    let r = chain(&[w("Y"), w("XYX").pow(n), w("yxx").pow(n), w("yx")]);
    let s = chain(&[w("X"), w("YXX").pow(n), w("YXY"), w("xyx").pow(n), w("xy")]);
    two_relators(r, s)
}

/// `⟨x,y | xyx(yxy)⁻¹, x^{n+1}y^{-n}⟩`
pub fn ak_presentation(n: usize) -> Presentation {
    let r = w("xyx").concat(&w("yxy").inverse());
    let s = w("x").pow(n + 1).concat(&w("Y").pow(n));
    two_relators(r, s)
}
