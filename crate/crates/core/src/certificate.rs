//! Trivialization certificates and their replay.

use std::fmt;

use thiserror::Error;

use crate::presentation::{Move, MoveClass, MoveError, Presentation};
use crate::word::Word;

/// An expected relator value at a point of the move sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    /// Number of moves applied before the check.
    pub after_step: usize,
    /// 1-based relator slot.
    pub relator: usize,
    pub expected: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub class: MoveClass,
    pub initial: Presentation,
    pub moves: Vec<Move>,
    /// Sorted by `after_step`.
    pub checkpoints: Vec<Checkpoint>,
    pub claimed_final: Presentation,
}

impl Certificate {
    /// A certificate whose class is derived from its moves and whose
    /// claimed final presentation is the actual endpoint.
    pub fn from_moves(
        initial: Presentation,
        moves: Vec<Move>,
        checkpoints: Vec<Checkpoint>,
    ) -> Result<Certificate, MoveError> {
        let claimed_final = initial.apply_all(&moves)?;
        Ok(Certificate {
            class: MoveClass::of(&moves),
            initial,
            moves,
            checkpoints,
            claimed_final,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {step} ({mv:?}) cannot be applied: {source}")]
    Move {
        step: usize,
        mv: Move,
        #[source]
        source: MoveError,
    },
    #[error("checkpoint after step {after_step} refers to relator {relator}, presentation has {len}")]
    CheckpointRelator {
        after_step: usize,
        relator: usize,
        len: usize,
    },
    #[error("checkpoint after step {after_step} lies beyond the {moves} moves")]
    CheckpointStep { after_step: usize, moves: usize },
    #[error("checkpoints are not ordered by step")]
    CheckpointOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepStat {
    pub total_length: usize,
    pub max_length: usize,
    pub num_gens: usize,
}

impl StepStat {
    fn of(p: &Presentation) -> StepStat {
        StepStat {
            total_length: p.total_length(),
            max_length: p.max_relator_length(),
            num_gens: p.num_gens(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckpointResult {
    pub after_step: usize,
    pub relator: usize,
    /// First letter position where actual and expected differ.
    pub mismatch: Option<usize>,
}

impl CheckpointResult {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayReport {
    /// Entry 0 is the initial presentation, entry `k` the state after move `k`.
    pub steps: Vec<StepStat>,
    pub checkpoints: Vec<CheckpointResult>,
    /// First relator slot where the endpoint differs from the claimed final
    /// presentation; `Some(0)` when the generator lists differ.
    pub final_mismatch: Option<usize>,
    pub trivial: bool,
    pub literally_trivial: bool,
    pub declared_class: MoveClass,
    pub actual_class: MoveClass,
}

impl ReplayReport {
    pub fn final_matches(&self) -> bool {
        self.final_mismatch.is_none()
    }

    pub fn class_ok(&self) -> bool {
        self.declared_class == self.actual_class
    }

    pub fn passed(&self) -> bool {
        self.checkpoints.iter().all(CheckpointResult::passed)
            && self.final_matches()
            && self.trivial
            && self.class_ok()
    }

    /// Triviality only holds up to relator order or sign.
    pub fn relies_on_tolerance(&self) -> bool {
        self.trivial && !self.literally_trivial
    }
}

impl fmt::Display for ReplayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first = self.steps.first().copied();
        let last = self.steps.last().copied();
        writeln!(f, "moves: {}", self.steps.len().saturating_sub(1))?;
        if let (Some(a), Some(b)) = (first, last) {
            let peak = self.steps.iter().map(|s| s.total_length).max().unwrap_or(0);
            writeln!(
                f,
                "length: initial {} final {} peak {}",
                a.total_length, b.total_length, peak
            )?;
        }
        for c in &self.checkpoints {
            match c.mismatch {
                None => writeln!(f, "check step {} rel {}: ok", c.after_step, c.relator)?,
                Some(pos) => writeln!(
                    f,
                    "check step {} rel {}: FAIL at letter {}",
                    c.after_step, c.relator, pos
                )?,
            }
        }
        match self.final_mismatch {
            None => writeln!(f, "final: ok")?,
            Some(0) => writeln!(f, "final: FAIL generators differ")?,
            Some(i) => writeln!(f, "final: FAIL rel {i}")?,
        }
        let triv = if self.literally_trivial {
            "yes"
        } else if self.trivial {
            "yes (up to order/sign)"
        } else {
            "no"
        };
        writeln!(f, "trivial: {triv}")?;
        writeln!(
            f,
            "class: declared {} actual {}{}",
            self.declared_class.tag(),
            self.actual_class.tag(),
            if self.class_ok() { "" } else { " FAIL" }
        )?;
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn first_mismatch(actual: &Word, expected: &Word) -> Option<usize> {
    let (a, e) = (actual.letters(), expected.letters());
    match a.iter().zip(e).position(|(x, y)| x != y) {
        Some(pos) => Some(pos),
        None if a.len() != e.len() => Some(a.len().min(e.len())),
        None => None,
    }
}

/// Replays a certificate exactly, calling `observe(k, p)` with the state
/// after `k` moves (`k = 0` is the initial presentation).
pub fn replay_with<F>(cert: &Certificate, mut observe: F) -> Result<ReplayReport, ReplayError>
where
    F: FnMut(usize, &Presentation),
{
    let mut current = cert.initial.clone();
    let mut steps = Vec::with_capacity(cert.moves.len() + 1);
    let mut checks = Vec::with_capacity(cert.checkpoints.len());
    let mut pending = cert.checkpoints.iter().peekable();

    if cert
        .checkpoints
        .windows(2)
        .any(|w| w[0].after_step > w[1].after_step)
    {
        return Err(ReplayError::CheckpointOrder);
    }
    if let Some(c) = cert.checkpoints.last() {
        if c.after_step > cert.moves.len() {
            return Err(ReplayError::CheckpointStep {
                after_step: c.after_step,
                moves: cert.moves.len(),
            });
        }
    }

    for k in 0..=cert.moves.len() {
        if k > 0 {
            let mv = &cert.moves[k - 1];
            current
                .apply_in_place(mv)
                .map_err(|source| ReplayError::Move {
                    step: k,
                    mv: mv.clone(),
                    source,
                })?;
        }
        steps.push(StepStat::of(&current));
        observe(k, &current);
        while let Some(c) = pending.next_if(|c| c.after_step == k) {
            let len = current.relators().len();
            if c.relator == 0 || c.relator > len {
                return Err(ReplayError::CheckpointRelator {
                    after_step: k,
                    relator: c.relator,
                    len,
                });
            }
            checks.push(CheckpointResult {
                after_step: k,
                relator: c.relator,
                mismatch: first_mismatch(current.relator(c.relator), &c.expected),
            });
        }
    }

    let final_mismatch = if current.names() != cert.claimed_final.names()
        || current.relators().len() != cert.claimed_final.relators().len()
    {
        Some(0)
    } else {
        current
            .relators()
            .iter()
            .zip(cert.claimed_final.relators())
            .position(|(a, b)| a != b)
            .map(|i| i + 1)
    };

    Ok(ReplayReport {
        steps,
        checkpoints: checks,
        final_mismatch,
        trivial: current.is_trivial(),
        literally_trivial: current.is_literally_trivial(),
        declared_class: cert.class,
        actual_class: MoveClass::of(&cert.moves),
    })
}

pub fn replay(cert: &Certificate) -> Result<ReplayReport, ReplayError> {
    replay_with(cert, |_, _| {})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::default_names;

    fn p(rels: &[&str]) -> Presentation {
        Presentation::parse(&default_names(rels.len()), rels).unwrap()
    }

    fn small() -> Certificate {
        // ⟨x,y | X, XY⟩ → invert, rotate, multiply.
        let moves = vec![
            Move::Invert(1),
            Move::Conjugate(2, crate::word::Letter::pos(1)),
            Move::Multiply(2, 1),
        ];
        let checks = vec![Checkpoint {
            after_step: 1,
            relator: 1,
            expected: Word::parse("x", &['x', 'y']).unwrap(),
        }];
        Certificate::from_moves(p(&["X", "XY"]), moves, checks).unwrap()
    }

    #[test]
    fn small_certificate_passes() {
        let report = replay(&small()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.relies_on_tolerance());
        assert_eq!(report.steps.len(), 4);
    }

    #[test]
    fn wrong_final_is_reported() {
        let mut c = small();
        c.claimed_final = p(&["x", "y"]);
        let report = replay(&c).unwrap();
        assert_eq!(report.final_mismatch, Some(2));
        assert!(!report.passed());
    }

    #[test]
    fn wrong_checkpoint_names_position() {
        let mut c = small();
        c.checkpoints[0].expected = Word::parse("xy", &['x', 'y']).unwrap();
        let report = replay(&c).unwrap();
        assert_eq!(report.checkpoints[0].mismatch, Some(1));
        assert!(report.to_string().contains("check step 1 rel 1: FAIL at letter 1"));
    }

    #[test]
    fn bad_index_is_hard_error() {
        let mut c = small();
        c.moves.insert(1, Move::Invert(5));
        match replay(&c) {
            Err(ReplayError::Move { step, .. }) => assert_eq!(step, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mislabelled_class_fails() {
        let mut c = small();
        c.class = MoveClass::Qss;
        let report = replay(&c).unwrap();
        assert!(!report.class_ok());
        assert!(!report.passed());
    }

    #[test]
    fn checkpoint_beyond_end() {
        let mut c = small();
        c.checkpoints[0].after_step = 9;
        assert!(matches!(replay(&c), Err(ReplayError::CheckpointStep { .. })));
    }
}
