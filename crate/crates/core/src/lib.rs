//! Andrews-Curtis moves on balanced group presentations.
//!
//! The crate builds the `L(3,2;4/d)` and Akbulut-Kirby presentation
//! families, emits machine-checkable trivialization certificates for the
//! `d = 4n+1` and `d = 4n+3` families, replays certificates exactly, and
//! runs bounded searches for new trivializations.

pub mod abelian;
pub mod cert_text;
pub mod certificate;
pub mod families;
pub mod macros;
pub mod presentation;
pub mod scripts;
pub mod search;
pub mod word;

pub use abelian::{AbelianError, AbelianMatrix, ExactInt};
pub use certificate::{replay, replay_with, Certificate, Checkpoint, ReplayError, ReplayReport};
pub use families::{ak_presentation, presentation_4n1, presentation_4n3, Family, FamilyId};
pub use presentation::{Automorphism, Move, MoveClass, MoveError, Presentation};
pub use scripts::{script_4n1, script_4n3};
pub use search::{search, SearchConfig, SearchOutcome, Status, Strategy};
pub use word::{Letter, Word, WordError};

/// Exponent-sum matrix over machine integers.
pub type IntMatrix = AbelianMatrix<i64>;
/// Exponent-sum matrix over arbitrary precision integers.
pub type BigIntMatrix = AbelianMatrix<num_bigint::BigInt>;

/// Determinant of the exponent-sum matrix, in `i64`.
pub fn abelian_det(p: &Presentation) -> i64 {
    IntMatrix::of(p)
        .map(|m| m.det())
        .expect("exponent sums fit in i64")
}
