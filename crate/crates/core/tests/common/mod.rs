#![allow(dead_code)]

use msl::random::{ladder, regular, speh, uniform, Shape};
use msl::{Multisegment, Segment};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ms(s: &str) -> Multisegment {
    s.parse().unwrap()
}

pub fn segment(lo: i32, hi: i32) -> impl Strategy<Value = Segment> {
    (lo..=hi, lo..=hi).prop_map(|(x, y)| Segment::new(x.min(y), x.max(y)).unwrap())
}

pub fn multisegment(max: usize, lo: i32, hi: i32) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(segment(lo, hi), 0..=max).prop_map(Multisegment::new)
}

fn seeded(f: fn(&mut ChaCha8Rng, &Shape) -> Multisegment, max: usize, lo: i32, hi: i32) -> impl Strategy<Value = Multisegment> {
    let shape = Shape::new(max, lo, hi).unwrap();
    any::<u64>().prop_map(move |s| f(&mut ChaCha8Rng::seed_from_u64(s), &shape))
}

pub fn ladder_ms(max: usize, lo: i32, hi: i32) -> impl Strategy<Value = Multisegment> {
    seeded(ladder, max, lo, hi)
}

pub fn speh_ms(max: usize, lo: i32, hi: i32) -> impl Strategy<Value = Multisegment> {
    seeded(speh, max, lo, hi)
}

pub fn regular_ms(max: usize, lo: i32, hi: i32) -> impl Strategy<Value = Multisegment> {
    seeded(regular, max, lo, hi)
}

pub fn uniform_ms(max: usize, lo: i32, hi: i32) -> impl Strategy<Value = Multisegment> {
    seeded(uniform, max, lo, hi)
}

/// Every segment with endpoints in `[lo, hi]`.
pub fn all_segments(lo: i32, hi: i32) -> Vec<Segment> {
    (lo..=hi).flat_map(|a| (a..=hi).map(move |b| Segment::new(a, b).unwrap())).collect()
}
