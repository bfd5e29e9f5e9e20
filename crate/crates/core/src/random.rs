//! Seeded random multisegments for sweeps and property batteries.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiseg::{is_ladder, is_regular, is_regular_balanced, is_speh, Multisegment, Segment};

/// Segment count in `[1, max_segments]`, endpoints in `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    pub max_segments: usize,
    pub lo: i32,
    pub hi: i32,
}

impl Shape {
    pub fn new(max_segments: usize, lo: i32, hi: i32) -> Result<Self> {
        if max_segments == 0 {
            return Err(Error::Config("max_segments must be at least 1".into()));
        }
        if lo > hi {
            return Err(Error::Config(format!("empty coordinate range [{lo},{hi}]")));
        }
        Ok(Shape { max_segments, lo, hi })
    }

    fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Filter {
    Ladder,
    Speh,
    Regular,
    Balanced,
}

impl Filter {
    pub fn accepts(self, m: &Multisegment) -> bool {
        match self {
            Filter::Ladder => is_ladder(m),
            Filter::Speh => is_speh(m),
            Filter::Regular => is_regular(m),
            Filter::Balanced => is_regular_balanced(m),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::Ladder => "ladder",
            Filter::Speh => "speh",
            Filter::Regular => "regular",
            Filter::Balanced => "balanced",
        })
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ladder" => Ok(Filter::Ladder),
            "speh" => Ok(Filter::Speh),
            "regular" => Ok(Filter::Regular),
            "balanced" => Ok(Filter::Balanced),
            other => Err(Error::Config(format!("unknown filter {other:?}"))),
        }
    }
}

/// An independent stream for item `index` of a run seeded by `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_segment<R: Rng + ?Sized>(rng: &mut R, shape: &Shape) -> Segment {
    let x = rng.gen_range(shape.lo..=shape.hi);
    let y = rng.gen_range(shape.lo..=shape.hi);
    Segment::new(x.min(y), x.max(y)).unwrap()
}

/// Endpoints uniform in the range, count uniform in `[1, max_segments]`.
pub fn uniform<R: Rng + ?Sized>(rng: &mut R, shape: &Shape) -> Multisegment {
    let k = rng.gen_range(1..=shape.max_segments);
    (0..k).map(|_| random_segment(rng, shape)).collect()
}

fn distinct_desc<R: Rng + ?Sized>(rng: &mut R, shape: &Shape, k: usize) -> Vec<i32> {
    let mut v: Vec<i32> = sample(rng, shape.width(), k).into_iter().map(|x| shape.lo + x as i32).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// A ladder: distinct starts and ends, both strictly decreasing.
pub fn ladder<R: Rng + ?Sized>(rng: &mut R, shape: &Shape) -> Multisegment {
    let k = rng.gen_range(1..=shape.max_segments.min(shape.width()));
    loop {
        let a = distinct_desc(rng, shape, k);
        let b = distinct_desc(rng, shape, k);
        if a.iter().zip(&b).all(|(x, y)| x <= y) {
            return a.iter().zip(&b).map(|(&x, &y)| Segment::new(x, y).unwrap()).collect();
        }
    }
}

/// A Speh multisegment `[a, b] + [a-1, b-1] + ... + [a-k+1, b-k+1]`.
pub fn speh<R: Rng + ?Sized>(rng: &mut R, shape: &Shape) -> Multisegment {
    let w = shape.width() as i32;
    let k = rng.gen_range(1..=(shape.max_segments as i32).min(w));
    let len = rng.gen_range(1..=w - k + 1);
    let bottom = rng.gen_range(shape.lo..=shape.hi - (k - 1) - (len - 1));
    (0..k).map(|t| Segment::new(bottom + t, bottom + t + len - 1).unwrap()).collect()
}

/// A regular multisegment: distinct starts, distinct ends.
pub fn regular<R: Rng + ?Sized>(rng: &mut R, shape: &Shape) -> Multisegment {
    let k = rng.gen_range(1..=shape.max_segments.min(shape.width()));
    loop {
        let a = distinct_desc(rng, shape, k);
        let mut b = distinct_desc(rng, shape, k);
        b.shuffle(rng);
        if a.iter().zip(&b).all(|(x, y)| x <= y) {
            return a.iter().zip(&b).map(|(&x, &y)| Segment::new(x, y).unwrap()).collect();
        }
    }
}

const MAX_ATTEMPTS: usize = 100_000;

/// Draws from the most specific constructive generator matching `filters`
/// and rejects until every filter holds.
pub fn sample_filtered<R: Rng + ?Sized>(rng: &mut R, shape: &Shape, filters: &[Filter]) -> Result<Multisegment> {
    let has = |f| filters.contains(&f);
    for _ in 0..MAX_ATTEMPTS {
        let m = if has(Filter::Speh) {
            speh(rng, shape)
        } else if has(Filter::Ladder) {
            ladder(rng, shape)
        } else if has(Filter::Regular) || has(Filter::Balanced) {
            regular(rng, shape)
        } else {
            uniform(rng, shape)
        };
        if filters.iter().all(|f| f.accepts(&m)) {
            return Ok(m);
        }
    }
    Err(Error::Config(format!("no multisegment satisfying the filters found in {MAX_ATTEMPTS} draws")))
}
