//! Composite moves expanded into primitive [`Move`]s.
//!
//! Every macro returns the transformed presentation together with the
//! primitive move list that produces it; folding the list through
//! [`Presentation::apply`] gives the same presentation.

use thiserror::Error;

use crate::presentation::{Move, MoveError, Presentation};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacroError {
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error("rotation offset {k} exceeds relator length {len}")]
    OffsetOutOfRange { k: usize, len: usize },
    #[error("relator {pivot} does not isolate generator {gen} ({count} occurrences after cyclic reduction)")]
    PivotDoesNotIsolate { pivot: usize, gen: usize, count: usize },
    #[error("generator {gen} out of range (have {num_gens})")]
    GeneratorOutOfRange { gen: usize, num_gens: usize },
}

/// Accumulates primitive moves while applying them.
#[derive(Debug, Clone)]
pub struct Builder {
    current: Presentation,
    moves: Vec<Move>,
}

impl Builder {
    pub fn new(start: Presentation) -> Builder {
        Builder {
            current: start,
            moves: Vec::new(),
        }
    }

    pub fn current(&self) -> &Presentation {
        &self.current
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn push(&mut self, m: Move) -> Result<(), MoveError> {
        self.current.apply_in_place(&m)?;
        self.moves.push(m);
        Ok(())
    }

    pub fn extend(&mut self, (next, moves): (Presentation, Vec<Move>)) {
        self.current = next;
        self.moves.extend(moves);
    }

    pub fn finish(self) -> (Presentation, Vec<Move>) {
        (self.current, self.moves)
    }

    /// `r_i ← by · r_i · by⁻¹` as single-letter conjugations.
    pub fn conjugate(&mut self, i: usize, by: &Word) -> Result<(), MoveError> {
        for &l in by.letters().iter().rev() {
            self.push(Move::Conjugate(i, l))?;
        }
        Ok(())
    }
}

/// `r_i ← by · r_i · by⁻¹`.
pub fn conjugate_relator(
    p: &Presentation,
    i: usize,
    by: &Word,
) -> Result<(Presentation, Vec<Move>), MacroError> {
    let mut b = Builder::new(p.clone());
    b.conjugate(i, by)?;
    Ok(b.finish())
}

/// Moves the first `k` letters of relator `i` to its end.
pub fn cyclic_permute(
    p: &Presentation,
    i: usize,
    k: usize,
) -> Result<(Presentation, Vec<Move>), MacroError> {
    if i == 0 || i > p.relators().len() {
        return Err(MoveError::IndexOutOfRange {
            index: i,
            len: p.relators().len(),
        }
        .into());
    }
    let r = p.relator(i);
    if k > r.len() {
        return Err(MacroError::OffsetOutOfRange { k, len: r.len() });
    }
    let mut b = Builder::new(p.clone());
    for &l in &r.letters()[..k] {
        b.push(Move::Conjugate(i, l.inverse()))?;
    }
    Ok(b.finish())
}

/// The four ways of combining relator `i` with relator `j` into a new `r_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Product {
    /// `r_i · r_j`
    Right,
    /// `r_j · r_i`
    Left,
    /// `r_i · r_j⁻¹`
    RightInverse,
    /// `r_j⁻¹ · r_i`
    LeftInverse,
}

impl Product {
    pub const ALL: [Product; 4] = [
        Product::Right,
        Product::Left,
        Product::RightInverse,
        Product::LeftInverse,
    ];

    /// Primitive expansion. Relator `j` is left as it was.
    pub fn moves(self, i: usize, j: usize) -> Vec<Move> {
        use Move::{Invert, Multiply};
        match self {
            Product::Right => vec![Multiply(i, j)],
            // (r_i⁻¹ r_j⁻¹)⁻¹
            Product::Left => vec![Invert(i), Invert(j), Multiply(i, j), Invert(i), Invert(j)],
            Product::RightInverse => vec![Invert(j), Multiply(i, j), Invert(j)],
            // (r_i⁻¹ r_j)⁻¹
            Product::LeftInverse => vec![Invert(i), Multiply(i, j), Invert(i)],
        }
    }

    pub fn word(self, ri: &Word, rj: &Word) -> Word {
        match self {
            Product::Right => ri.concat(rj),
            Product::Left => rj.concat(ri),
            Product::RightInverse => ri.concat(&rj.inverse()),
            Product::LeftInverse => rj.inverse().concat(ri),
        }
    }
}

/// Removes generator `gen` from every relator other than `pivot`, using the
/// pivot as the definition `gen = w`.
///
/// Each occurrence is handled by rotating the target relator until the
/// occurrence sits at the end and then multiplying by a conjugate of the
/// pivot (or its inverse). The pivot is conjugated into place and restored
/// afterwards. Each target finally gets conjugated to exactly the reduced
/// word obtained by substituting `w` for `gen`.
pub fn eliminate_generator(
    p: &Presentation,
    pivot: usize,
    gen: usize,
) -> Result<(Presentation, Vec<Move>), MacroError> {
    let len = p.relators().len();
    if pivot == 0 || pivot > len {
        return Err(MoveError::IndexOutOfRange { index: pivot, len }.into());
    }
    if gen == 0 || gen > p.num_gens() {
        return Err(MacroError::GeneratorOutOfRange {
            gen,
            num_gens: p.num_gens(),
        });
    }
    let pivot_word = p.relator(pivot).clone();
    let (core, _) = pivot_word.cyclic_reduce();
    let count = core.count_gen(gen);
    if count != 1 {
        return Err(MacroError::PivotDoesNotIsolate { pivot, gen, count });
    }
    let q = core.letters().iter().position(|l| l.gen() == gen).unwrap();
    let rotated = core.rotate(q);
    let lead = rotated.letters()[0];
    let tail = rotated.suffix_from(1);
    // rotated = g^f · tail, so g = tail⁻¹ when f = 1 and g = tail when f = -1.
    let image = if lead.is_inverse() { tail } else { tail.inverse() };

    let mut images: Vec<Option<Word>> = (1..=p.num_gens())
        .map(|g| Some(Word::letter(Letter::pos(g))))
        .collect();
    images[gen - 1] = Some(image.clone());

    let mut b = Builder::new(p.clone());
    for i in (1..=len).filter(|&i| i != pivot) {
        if b.current().relator(i).count_gen(gen) == 0 {
            continue;
        }
        let target = p
            .relator(i)
            .apply_endomorphism(&images)
            .map_err(MoveError::from)?;
        loop {
            let cur = b.current().relator(i).clone();
            let (core, conj) = cur.cyclic_reduce();
            let Some(pos) = core.letters().iter().position(|l| l.gen() == gen) else {
                break;
            };
            // Bring the occurrence to the last slot, going whichever way is shorter.
            let fwd = core.prefix(pos + 1).inverse();
            let back = core.suffix_from(pos + 1);
            let turn = if back.len() < fwd.len() { back } else { fwd };
            b.conjugate(i, &turn.concat(&conj.inverse()))?;
            debug_assert_eq!(b.current().relator(i).last().map(Letter::gen), Some(gen));

            let e = b.current().relator(i).last().unwrap();
            let power = if e.is_inverse() {
                image.inverse()
            } else {
                image.clone()
            };
            let multiplier = Word::letter(e.inverse()).concat(&power);
            multiply_by_pivot_conjugate(&mut b, i, pivot, &pivot_word, &multiplier)?;
        }
        let cur = b.current().relator(i).clone();
        let fix = target
            .conjugator_from(&cur)
            .expect("substitution result is conjugate to the rotated form");
        b.conjugate(i, &fix)?;
        debug_assert_eq!(*b.current().relator(i), target);
    }
    Ok(b.finish())
}

/// `r_i ← r_i · m` where `m` is a conjugate of the pivot or its inverse.
fn multiply_by_pivot_conjugate(
    b: &mut Builder,
    i: usize,
    pivot: usize,
    pivot_word: &Word,
    m: &Word,
) -> Result<(), MoveError> {
    let (invert, d) = match m.conjugator_from(pivot_word) {
        Some(d) => (false, d),
        None => (
            true,
            m.conjugator_from(&pivot_word.inverse())
                .expect("multiplier is a conjugate of the pivot relator"),
        ),
    };
    if invert {
        b.push(Move::Invert(pivot))?;
    }
    b.conjugate(pivot, &d)?;
    b.push(Move::Multiply(i, pivot))?;
    b.conjugate(pivot, &d.inverse())?;
    if invert {
        b.push(Move::Invert(pivot))?;
    }
    Ok(())
}

/// Conjugates every relator to its cyclically reduced core.
pub fn cyclically_reduce_all(p: &Presentation) -> (Presentation, Vec<Move>) {
    let mut b = Builder::new(p.clone());
    for i in 1..=p.relators().len() {
        let (_, conj) = p.relator(i).cyclic_reduce();
        b.conjugate(i, &conj.inverse())
            .expect("indices come from the presentation itself");
    }
    b.finish()
}

/// Cyclically reduces every relator and inverts relators that are a single
/// inverse letter.
pub fn normalize(p: &Presentation) -> (Presentation, Vec<Move>) {
    let mut b = Builder::new(p.clone());
    b.extend(cyclically_reduce_all(p));
    for i in 1..=p.relators().len() {
        let r = b.current().relator(i);
        if r.len() == 1 && r.letters()[0].is_inverse() {
            b.push(Move::Invert(i)).expect("index in range");
        }
    }
    b.finish()
}
