#![allow(dead_code)]

use ac_core::{Letter, Word};
use proptest::prelude::*;

pub const XY: [char; 2] = ['x', 'y'];

/// Raw unreduced letters over `gens` generators, as signed indices.
pub fn raw_letters(gens: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let g = gens as i32;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(i, neg)| if neg { -i } else { i }).collect())
}

pub fn to_letters(raw: &[i32]) -> Vec<Letter> {
    raw.iter()
        .map(|&l| Letter::new(l.unsigned_abs() as usize, if l < 0 { -1 } else { 1 }))
        .collect()
}

pub fn word_of(raw: &[i32]) -> Word {
    Word::reduce(to_letters(raw))
}

pub fn word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    raw_letters(gens, max_len).prop_map(|r| word_of(&r))
}

/// Free reduction by repeated deletion of the leftmost cancelling pair.
pub fn naive_reduce(raw: &[i32]) -> Vec<i32> {
    let mut v = raw.to_vec();
    loop {
        match v.windows(2).position(|w| w[0] == -w[1]) {
            Some(i) => {
                v.drain(i..i + 2);
            }
            None => return v,
        }
    }
}

pub fn signed(w: &Word) -> Vec<i32> {
    w.letters()
        .iter()
        .map(|l| l.gen() as i32 * l.sign() as i32)
        .collect()
}
