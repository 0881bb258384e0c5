//! Parametric AC-trivializations of the `d = 4n+1` and `d = 4n+3`
//! presentations, emitted as certificates with checkpoints on every
//! displayed intermediate relator.

use crate::certificate::{Certificate, Checkpoint};
use crate::families::{presentation_4n1, presentation_4n3};
use crate::macros::{self, Builder};
use crate::presentation::{Move, MoveClass, Presentation};
use crate::word::{Letter, Word};

const X: usize = 1;
const Y: usize = 2;

fn w(text: &str) -> Word {
    Word::parse(text, &['x', 'y']).expect("literal over x, y")
}

fn chain(parts: &[Word]) -> Word {
    parts.iter().fold(Word::empty(), |acc, p| acc.concat(p))
}

struct Script {
    b: Builder,
    checks: Vec<Checkpoint>,
}

impl Script {
    fn new(start: Presentation) -> Script {
        Script {
            b: Builder::new(start),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, m: Move) {
        self.b.push(m).expect("script moves are in range");
    }

    fn run(&mut self, step: Result<(Presentation, Vec<Move>), macros::MacroError>) {
        self.b.extend(step.expect("script macro preconditions hold"));
    }

    fn check(&mut self, relator: usize, expected: Word) {
        debug_assert_eq!(
            self.b.current().relator(relator),
            &expected,
            "checkpoint on relator {relator} after {} moves",
            self.b.moves().len()
        );
        self.checks.push(Checkpoint {
            after_step: self.b.moves().len(),
            relator,
            expected,
        });
    }

    /// Makes every relator a positive single letter in its own slot.
    fn finish(mut self, initial: Presentation) -> Certificate {
        let (p, moves) = macros::normalize(self.b.current());
        self.b.extend((p, moves));
        let (end, moves) = self.b.finish();
        debug_assert!(end.is_literally_trivial());
        Certificate {
            class: MoveClass::Ac,
            initial,
            moves,
            checkpoints: self.checks,
            claimed_final: Presentation::trivial(2),
        }
    }
}

/// Trivialization of `presentation_4n1(n)`.
///
/// `r₁ = r₀⁻¹`, `r₂ = r₁s₀`, rotate `s₀` to `s₁`, `r₃ = r₂s₁ = ȳ²x̄`; then
/// `x = ȳ²` turns `s₁` into `y`, which in turn turns `r₃` into `x`.
pub fn script_4n1(n: usize) -> Certificate {
    let initial = presentation_4n1(n);
    let mut s = Script::new(initial.clone());

    s.push(Move::Invert(1));
    s.check(1, chain(&[w("Y"), w("Xy").pow(n), w("y"), w("xY").pow(n), w("x")]));

    s.push(Move::Multiply(1, 2));
    s.check(1, chain(&[w("Y"), w("Xy").pow(n), w("xY").pow(n)]));

    // s₀ regrouped as x̄(yx̄)ⁿ(ȳx)ⁿȳ; same word, no move.
    s.check(2, chain(&[w("X"), w("yX").pow(n), w("Yx").pow(n), w("Y")]));

    let rotated = macros::cyclic_permute(s.b.current(), 2, 1);
    s.run(rotated);
    s.check(2, chain(&[w("yX").pow(n), w("Yx").pow(n), w("YX")]));

    s.push(Move::Multiply(1, 2));
    s.check(1, w("YYX"));

    let step = macros::eliminate_generator(s.b.current(), 1, X);
    s.run(step);
    s.check(2, w("y"));

    let step = macros::eliminate_generator(s.b.current(), 2, Y);
    s.run(step);
    s.check(1, w("X"));

    s.finish(initial)
}

/// Trivialization of `presentation_4n3(n)`.
///
/// Rotate `r₀`, `s₀` to `r₁`, `s₁`; `s₂ = s₁r₁`; rotate to `s₃`;
/// `s₄ = s₃r₁ = ȳx`; then `y = x` turns `r₁` into `x`, which turns `s₄`
/// into `ȳ`.
pub fn script_4n3(n: usize) -> Certificate {
    let initial = presentation_4n3(n);
    let mut s = Script::new(initial.clone());
    let xyx = w("xyx").pow(n);
    let xyx_inv = w("XYX").pow(n);

    // Regrouped forms of r₀ and s₀.
    s.check(1, chain(&[w("Y"), xyx_inv.clone(), w("yx"), xyx.clone()]));
    s.check(2, chain(&[xyx_inv.clone(), w("XYXY"), xyx.clone(), w("xy")]));

    s.push(Move::Conjugate(1, Letter::pos(Y)));
    let r1 = chain(&[xyx_inv.clone(), w("yx"), xyx.clone(), w("Y")]);
    s.check(1, r1);

    let rotated = macros::conjugate_relator(s.b.current(), 2, &w("xy"));
    s.run(rotated);
    s.check(2, chain(&[w("xy"), xyx_inv.clone(), w("XYXY"), xyx.clone()]));

    s.push(Move::Multiply(2, 1));
    s.check(2, chain(&[w("xy"), xyx_inv.clone(), w("XY"), xyx.clone(), w("Y")]));

    s.push(Move::Conjugate(2, Letter::neg(Y)));
    s.check(2, chain(&[w("Yxy"), xyx_inv, w("XY"), xyx]));

    s.push(Move::Multiply(2, 1));
    s.check(2, w("Yx"));

    let step = macros::eliminate_generator(s.b.current(), 2, Y);
    s.run(step);
    s.check(1, w("x"));

    let step = macros::eliminate_generator(s.b.current(), 1, X);
    s.run(step);
    s.check(2, w("Y"));

    s.finish(initial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::replay;

    #[test]
    fn f4n1_zero_replays() {
        let c = script_4n1(0);
        assert_eq!(c.initial.to_text(), "gens: x y\nrel: X\nrel: XY\n");
        let report = replay(&c).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.literally_trivial);
    }

    #[test]
    fn f4n1_one_r2_checkpoint() {
        let c = script_4n1(1);
        assert_eq!(c.checkpoints[1].expected, w("YXyxY"));
        assert!(replay(&c).unwrap().passed());
    }

    #[test]
    fn f4n3_one_s2_checkpoint() {
        let c = script_4n3(1);
        let s2 = c
            .checkpoints
            .iter()
            .find(|k| k.expected == w("xyXYXXYxyxY"))
            .expect("s2 checkpoint present");
        assert_eq!(s2.relator, 2);
        assert!(replay(&c).unwrap().passed());
    }

    #[test]
    fn f4n3_zero_replays() {
        let report = replay(&script_4n3(0)).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn scripts_are_ac_class() {
        for n in 0..4 {
            assert!(script_4n1(n).moves.iter().all(Move::is_ac));
            assert!(script_4n3(n).moves.iter().all(Move::is_ac));
        }
    }
}
