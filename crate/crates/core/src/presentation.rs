//! Balanced presentations and the Andrews-Curtis move set.

use std::fmt;

use thiserror::Error;

use crate::word::{Letter, Word, WordError};

/// Order in which fresh generator names are handed out.
pub const NAME_ORDER: &str = "xyzabcdefghijklmnopqrstuvw";

/// The first `n` names of [`NAME_ORDER`].
pub fn default_names(n: usize) -> Vec<char> {
    NAME_ORDER.chars().take(n).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("relator index {index} out of range (have {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("multiply needs two distinct relators, got {0} twice")]
    SelfMultiply(usize),
    #[error("conjugating letter references generator {gen}, have {num_gens}")]
    BadLetter { gen: usize, num_gens: usize },
    #[error("destabilize needs the last relator to be the last generator, alone")]
    IllegalDestabilize,
    #[error("no fresh generator name left")]
    NoFreshName,
    #[error("automorphism table must have {expected} images, got {got}")]
    AutomorphismArity { expected: usize, got: usize },
    #[error("automorphism inverse table does not compose to the identity")]
    NotAnAutomorphism,
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("unbalanced presentation: {gens} generators, {relators} relators")]
    Unbalanced { gens: usize, relators: usize },
    #[error("generator name {0:?} is not a lowercase ASCII letter")]
    BadName(char),
    #[error("generator name {0:?} used twice")]
    DuplicateName(char),
    #[error("relator {index} uses generator {gen}, have {num_gens}")]
    RelatorOutOfRange {
        index: usize,
        gen: usize,
        num_gens: usize,
    },
}

/// A balanced presentation `⟨ gens | relators ⟩`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    names: Vec<char>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(names: Vec<char>, relators: Vec<Word>) -> Result<Presentation, PresentationError> {
        if names.len() != relators.len() {
            return Err(PresentationError::Unbalanced {
                gens: names.len(),
                relators: relators.len(),
            });
        }
        for (i, &c) in names.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(PresentationError::BadName(c));
            }
            if names[..i].contains(&c) {
                return Err(PresentationError::DuplicateName(c));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if r.max_gen() > names.len() {
                return Err(PresentationError::RelatorOutOfRange {
                    index: i + 1,
                    gen: r.max_gen(),
                    num_gens: names.len(),
                });
            }
        }
        Ok(Presentation { names, relators })
    }

    /// Parses relator texts over the given generator names.
    pub fn parse(names: &[char], relators: &[&str]) -> Result<Presentation, ParseError> {
        let rels = relators
            .iter()
            .map(|r| Word::parse(r, names))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation::new(names.to_vec(), rels)?)
    }

    /// `⟨x₁…xₙ | x₁…xₙ⟩` with default names.
    pub fn trivial(n: usize) -> Presentation {
        Presentation {
            names: default_names(n),
            relators: (1..=n).map(|g| Word::letter(Letter::pos(g))).collect(),
        }
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn relator(&self, i: usize) -> &Word {
        &self.relators[i - 1]
    }

    pub fn num_gens(&self) -> usize {
        self.names.len()
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    pub fn max_relator_length(&self) -> usize {
        self.relators.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.format(&self.names)
    }

    fn check_index(&self, i: usize) -> Result<(), MoveError> {
        if i == 0 || i > self.relators.len() {
            Err(MoveError::IndexOutOfRange {
                index: i,
                len: self.relators.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn apply(&self, m: &Move) -> Result<Presentation, MoveError> {
        let mut next = self.clone();
        next.apply_in_place(m)?;
        Ok(next)
    }

    pub fn apply_in_place(&mut self, m: &Move) -> Result<(), MoveError> {
        match m {
            Move::Invert(i) => {
                self.check_index(*i)?;
                let r = &mut self.relators[i - 1];
                *r = r.inverse();
            }
            Move::Multiply(i, j) => {
                self.check_index(*i)?;
                self.check_index(*j)?;
                if i == j {
                    return Err(MoveError::SelfMultiply(*i));
                }
                let prod = self.relators[i - 1].concat(&self.relators[j - 1]);
                self.relators[i - 1] = prod;
            }
            Move::Conjugate(i, l) => {
                self.check_index(*i)?;
                if l.gen() > self.num_gens() {
                    return Err(MoveError::BadLetter {
                        gen: l.gen(),
                        num_gens: self.num_gens(),
                    });
                }
                let r = &mut self.relators[i - 1];
                *r = r.conjugate(&Word::letter(*l));
            }
            Move::Stabilize => {
                let name = NAME_ORDER
                    .chars()
                    .find(|c| !self.names.contains(c))
                    .ok_or(MoveError::NoFreshName)?;
                self.names.push(name);
                let g = self.names.len();
                self.relators.push(Word::letter(Letter::pos(g)));
            }
            Move::Destabilize => {
                let g = self.names.len();
                let legal = g > 0
                    && self.relators[g - 1] == Word::letter(Letter::pos(g))
                    && self.relators[..g - 1].iter().all(|r| r.count_gen(g) == 0);
                if !legal {
                    return Err(MoveError::IllegalDestabilize);
                }
                self.names.pop();
                self.relators.pop();
            }
            Move::Automorphism(aut) => {
                aut.check(self.num_gens())?;
                let images: Vec<Option<Word>> = aut.images.iter().cloned().map(Some).collect();
                for r in &mut self.relators {
                    *r = r.apply_endomorphism(&images)?;
                }
            }
        }
        Ok(())
    }

    /// Applies a move list in order.
    pub fn apply_all<'a, I>(&self, moves: I) -> Result<Presentation, MoveError>
    where
        I: IntoIterator<Item = &'a Move>,
    {
        let mut p = self.clone();
        for m in moves {
            p.apply_in_place(m)?;
        }
        Ok(p)
    }

    /// Every relator is a single letter and the letters hit each
    /// generator exactly once, in any order and with either sign.
    pub fn is_trivial(&self) -> bool {
        let mut seen = vec![false; self.num_gens()];
        for r in &self.relators {
            if r.len() != 1 {
                return false;
            }
            let g = r.letters()[0].gen();
            if seen[g - 1] {
                return false;
            }
            seen[g - 1] = true;
        }
        true
    }

    /// Literally `⟨x₁…xₙ | x₁…xₙ⟩`: relator `i` is the positive letter `i`.
    pub fn is_literally_trivial(&self) -> bool {
        self.relators
            .iter()
            .enumerate()
            .all(|(i, r)| *r == Word::letter(Letter::pos(i + 1)))
    }

    /// Key invariant under relator inversion, conjugation and reordering.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut rels: Vec<Vec<u8>> = self
            .relators
            .iter()
            .map(|r| canonical_relator_text(r, &self.names))
            .collect();
        rels.sort_unstable();
        let mut key: Vec<u8> = self.names.iter().map(|&c| c as u8).collect();
        key.push(b'|');
        key.extend_from_slice(&rels.join(&b',')[..]);
        key
    }

    /// The `gens:` / `rel:` text block.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("gens:");
        for c in &self.names {
            out.push(' ');
            out.push(*c);
        }
        out.push('\n');
        for r in &self.relators {
            out.push_str("rel: ");
            out.push_str(&self.format_word(r));
            out.push('\n');
        }
        out
    }

    /// Parses a `gens:` line followed by `rel:` lines; `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Presentation, ParseError> {
        let mut names: Option<Vec<char>> = None;
        let mut rels = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| ParseError::Syntax {
                line: no + 1,
                msg,
            };
            if let Some(rest) = line.strip_prefix("gens:") {
                if names.is_some() {
                    return Err(at("duplicate gens line".into()));
                }
                names = Some(parse_names(rest).map_err(at)?);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let names = names.as_ref().ok_or_else(|| at("rel before gens".into()))?;
                let w = Word::parse(rest.trim(), names).map_err(|e| at(e.to_string()))?;
                rels.push(w);
            } else {
                return Err(at(format!("unexpected line {line:?}")));
            }
        }
        let names = names.ok_or(ParseError::Syntax {
            line: 0,
            msg: "missing gens line".into(),
        })?;
        Ok(Presentation::new(names, rels)?)
    }
}

/// Text of the least rotation over the cyclic core of `r` and of its
/// inverse, compared as ASCII bytes.
pub fn canonical_relator_text(r: &Word, names: &[char]) -> Vec<u8> {
    let (core, _) = r.cyclic_reduce();
    let fwd = least_rotation(core.format(names).into_bytes());
    let back = least_rotation(core.inverse().format(names).into_bytes());
    fwd.min(back)
}

fn least_rotation(s: Vec<u8>) -> Vec<u8> {
    let n = s.len();
    let mut best = 0;
    for k in 1..n {
        let cand = s[k..].iter().chain(&s[..k]);
        let cur = s[best..].iter().chain(&s[..best]);
        if cand.lt(cur) {
            best = k;
        }
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&s[best..]);
    out.extend_from_slice(&s[..best]);
    out
}

pub(crate) fn strip_comment(raw: &str) -> &str {
    match raw.find('#') {
        Some(i) => raw[..i].trim(),
        None => raw.trim(),
    }
}

pub(crate) fn parse_names(rest: &str) -> Result<Vec<char>, String> {
    rest.split_whitespace()
        .map(|tok| {
            let mut cs = tok.chars();
            match (cs.next(), cs.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => Ok(c),
                _ => Err(format!("bad generator name {tok:?}")),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, c) in self.names.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " | ")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s = self.format_word(r);
            write!(f, "{}", if s.is_empty() { "1" } else { &s })?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Images of the generators under a free group automorphism, with the
/// inverse table carried as evidence of bijectivity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    pub images: Vec<Word>,
    pub inverse: Vec<Word>,
}

impl Automorphism {
    pub fn check(&self, num_gens: usize) -> Result<(), MoveError> {
        for table in [&self.images, &self.inverse] {
            if table.len() != num_gens {
                return Err(MoveError::AutomorphismArity {
                    expected: num_gens,
                    got: table.len(),
                });
            }
        }
        let fwd: Vec<Option<Word>> = self.images.iter().cloned().map(Some).collect();
        let back: Vec<Option<Word>> = self.inverse.iter().cloned().map(Some).collect();
        for g in 1..=num_gens {
            let x = Word::letter(Letter::pos(g));
            let there = self.images[g - 1].apply_endomorphism(&back)?;
            let back_again = self.inverse[g - 1].apply_endomorphism(&fwd)?;
            if there != x || back_again != x {
                return Err(MoveError::NotAnAutomorphism);
            }
        }
        Ok(())
    }

    pub fn inverted(&self) -> Automorphism {
        Automorphism {
            images: self.inverse.clone(),
            inverse: self.images.clone(),
        }
    }
}

/// One primitive move. Relator indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// `r_i ← r_i⁻¹`
    Invert(usize),
    /// `r_i ← r_i · r_j`, `i ≠ j`
    Multiply(usize, usize),
    /// `r_i ← l · r_i · l⁻¹`
    Conjugate(usize, Letter),
    /// Append a fresh generator `g` and relator `g`.
    Stabilize,
    /// Drop the last generator together with its trivial relator.
    Destabilize,
    /// Apply a free group automorphism to every relator (Q** only).
    Automorphism(Automorphism),
}

impl Move {
    pub fn is_ac(&self) -> bool {
        !matches!(self, Move::Automorphism(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveClass {
    /// Moves (1)–(4).
    Ac,
    /// Moves (1)–(4) plus automorphisms.
    Qss,
}

impl MoveClass {
    pub fn of<'a, I: IntoIterator<Item = &'a Move>>(moves: I) -> MoveClass {
        if moves.into_iter().all(Move::is_ac) {
            MoveClass::Ac
        } else {
            MoveClass::Qss
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            MoveClass::Ac => "AC",
            MoveClass::Qss => "QSS",
        }
    }
}
