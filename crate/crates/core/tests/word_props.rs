mod common;

use ac_core::Word;
use common::*;
use proptest::prelude::*;

const CASES: u32 = 10_000;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn reduction_matches_naive_deletion(raw in raw_letters(3, 24)) {
        prop_assert_eq!(signed(&word_of(&raw)), naive_reduce(&raw));
    }

    #[test]
    fn reduction_is_idempotent(raw in raw_letters(3, 24)) {
        let w = word_of(&raw);
        prop_assert_eq!(Word::reduce(w.letters().iter().copied()), w);
    }

    #[test]
    fn reduction_preserves_parity(raw in raw_letters(2, 24)) {
        prop_assert_eq!(word_of(&raw).len() % 2, raw.len() % 2);
    }

    #[test]
    fn inverse_reverses_products(u in word(3, 16), v in word(3, 16)) {
        prop_assert_eq!(u.concat(&v).inverse(), v.inverse().concat(&u.inverse()));
        prop_assert!(u.concat(&u.inverse()).is_empty());
    }

    #[test]
    fn conjugation_keeps_cyclic_core_length(w in word(2, 20), g in word(2, 8)) {
        let c = w.conjugate(&g);
        prop_assert_eq!(c.cyclic_reduce().0.len(), w.cyclic_reduce().0.len());
        let d = c.conjugator_from(&w).expect("conjugates are recognised");
        prop_assert_eq!(w.conjugate(&d), c);
    }

    #[test]
    fn cyclic_reduce_decomposes(w in word(2, 24)) {
        let (core, conj) = w.cyclic_reduce();
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(core.conjugate(&conj), w);
    }

    #[test]
    fn endomorphisms_compose(
        w in word(2, 12),
        f in prop::collection::vec(word(2, 5), 2),
        g in prop::collection::vec(word(2, 5), 2),
    ) {
        let fi: Vec<_> = f.iter().cloned().map(Some).collect();
        let gi: Vec<_> = g.iter().cloned().map(Some).collect();
        let fg: Vec<_> = f.iter().map(|x| Some(x.apply_endomorphism(&gi).unwrap())).collect();
        let two_step = w.apply_endomorphism(&fi).unwrap().apply_endomorphism(&gi).unwrap();
        prop_assert_eq!(two_step, w.apply_endomorphism(&fg).unwrap());
    }

    #[test]
    fn text_round_trip(w in word(2, 30)) {
        prop_assert_eq!(Word::parse(&w.format(&XY), &XY).unwrap(), w);
    }

    #[test]
    fn power_is_repeated_product(w in word(2, 10), k in 0usize..6) {
        let naive = (0..k).fold(Word::empty(), |acc, _| acc.concat(&w));
        prop_assert_eq!(w.pow(k), naive);
    }
}
