mod common;

use ac_core::{abelian_det, BigIntMatrix, IntMatrix, Letter, Move, Presentation, Word};
use common::*;
use proptest::prelude::*;

fn presentation(max_len: usize) -> impl Strategy<Value = Presentation> {
    prop::collection::vec(word(2, max_len), 2)
        .prop_map(|rels| Presentation::new(XY.to_vec(), rels).unwrap())
}

fn ac_move() -> impl Strategy<Value = Move> {
    prop_oneof![
        (1usize..=2).prop_map(Move::Invert),
        (1usize..=2).prop_map(|i| Move::Multiply(i, 3 - i)),
        (1usize..=2, 1usize..=2, any::<bool>())
            .prop_map(|(i, g, neg)| Move::Conjugate(i, Letter::new(g, if neg { -1 } else { 1 }))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn determinant_magnitude_is_invariant(
        p in presentation(12),
        moves in prop::collection::vec(ac_move(), 1..40),
    ) {
        let d0 = abelian_det(&p).abs();
        let mut q = p;
        for m in &moves {
            q.apply_in_place(m).unwrap();
            prop_assert_eq!(abelian_det(&q).abs(), d0);
        }
    }

    #[test]
    fn invert_is_an_involution(p in presentation(12), i in 1usize..=2) {
        prop_assert_eq!(p.apply(&Move::Invert(i)).unwrap().apply(&Move::Invert(i)).unwrap(), p);
    }

    #[test]
    fn conjugation_by_inverse_letter_undoes(p in presentation(12), i in 1usize..=2, g in 1usize..=2, neg: bool) {
        let l = Letter::new(g, if neg { -1 } else { 1 });
        let q = p.apply(&Move::Conjugate(i, l)).unwrap();
        prop_assert_eq!(q.apply(&Move::Conjugate(i, l.inverse())).unwrap(), p);
    }

    #[test]
    fn multiply_by_inverse_undoes(p in presentation(12), i in 1usize..=2) {
        let j = 3 - i;
        let q = p
            .apply_all(&[Move::Multiply(i, j), Move::Invert(j), Move::Multiply(i, j), Move::Invert(j)])
            .unwrap();
        prop_assert_eq!(q, p);
    }

    #[test]
    fn canonical_key_ignores_inversion_and_conjugation(p in presentation(12), i in 1usize..=2, c in word(2, 6)) {
        let key = p.canonical_key();
        prop_assert_eq!(p.apply(&Move::Invert(i)).unwrap().canonical_key(), key.clone());
        let mut rels = p.relators().to_vec();
        rels[i - 1] = rels[i - 1].conjugate(&c);
        rels.swap(0, 1);
        prop_assert_eq!(Presentation::new(XY.to_vec(), rels).unwrap().canonical_key(), key);
    }

    #[test]
    fn text_form_round_trips(p in presentation(16)) {
        prop_assert_eq!(Presentation::from_text(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn machine_and_big_determinants_agree(p in presentation(20)) {
        let small = IntMatrix::of(&p).unwrap().det();
        let big = BigIntMatrix::of(&p).unwrap().det();
        prop_assert_eq!(big, small.into());
    }
}

#[test]
fn relator_literal_words() {
    let w = Word::parse("xyXY", &XY).unwrap();
    let p = Presentation::new(XY.to_vec(), vec![w.clone(), w]).unwrap();
    assert_eq!(abelian_det(&p), 0);
}
