//! Segments, multisegments and dimension vectors on a single cuspidal line,
//! together with the bilinear forms and the combinatorial classification
//! (ladder, Speh, regular, balanced) used throughout the crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer interval `[a,b]` with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    a: i32,
    b: i32,
}

impl Segment {
    pub fn new(a: i32, b: i32) -> Result<Self> {
        if a > b {
            return Err(Error::InvalidSegment { a, b });
        }
        Ok(Segment { a, b })
    }

    /// Single-point segment `[i,i]`.
    pub fn point(i: i32) -> Self {
        Segment { a: i, b: i }
    }

    pub fn a(&self) -> i32 {
        self.a
    }

    pub fn b(&self) -> i32 {
        self.b
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        (self.b - self.a + 1) as usize
    }

    pub fn contains(&self, i: i32) -> bool {
        self.a <= i && i <= self.b
    }

    /// `[a,b] -> [a-1,b-1]`.
    pub fn shift(&self) -> Segment {
        Segment { a: self.a - 1, b: self.b - 1 }
    }

    /// `[a,b] -> [-b,-a]`.
    pub fn dual(&self) -> Segment {
        Segment { a: -self.b, b: -self.a }
    }

    /// `self ≺ other`: `a+1 <= c <= b+1 <= d` for `self = [a,b]`, `other = [c,d]`.
    #[allow(clippy::int_plus_one)]
    pub fn precedes(&self, other: &Segment) -> bool {
        self.a + 1 <= other.a && other.a <= self.b + 1 && self.b + 1 <= other.b
    }

    pub fn unlinked(&self, other: &Segment) -> bool {
        !self.precedes(other) && !other.precedes(self)
    }

    /// Canonical order: descending right endpoint, then descending left endpoint.
    pub fn canonical_cmp(&self, other: &Segment) -> Ordering {
        other.b.cmp(&self.b).then(other.a.cmp(&self.a))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

pub fn precedes(d1: &Segment, d2: &Segment) -> bool {
    d1.precedes(d2)
}

pub fn unlinked(d1: &Segment, d2: &Segment) -> bool {
    d1.unlinked(d2)
}

/// A finite multiset of segments, stored in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multisegment {
    segs: Vec<Segment>,
}

impl Multisegment {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(segs: impl IntoIterator<Item = Segment>) -> Self {
        let mut segs: Vec<Segment> = segs.into_iter().collect();
        segs.sort_by(Segment::canonical_cmp);
        Multisegment { segs }
    }

    /// Build from `(a, b)` pairs; fails on any `a > b`.
    pub fn from_pairs(pairs: &[(i32, i32)]) -> Result<Self> {
        let segs = pairs
            .iter()
            .map(|&(a, b)| Segment::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(segs))
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Segment> {
        self.segs.iter()
    }

    /// Multiset sum.
    pub fn sum(&self, other: &Multisegment) -> Multisegment {
        Multisegment::new(self.segs.iter().chain(other.segs.iter()).copied())
    }

    pub fn shift(&self) -> Multisegment {
        Multisegment::new(self.segs.iter().map(Segment::shift))
    }

    pub fn dual(&self) -> Multisegment {
        Multisegment::new(self.segs.iter().map(Segment::dual))
    }

    /// Translate every segment by `k`.
    pub fn translate(&self, k: i32) -> Multisegment {
        Multisegment::new(self.segs.iter().map(|s| Segment { a: s.a + k, b: s.b + k }))
    }

    /// Total number of points, i.e. the degree of the multisegment.
    pub fn degree(&self) -> usize {
        self.segs.iter().map(Segment::len).sum()
    }

    pub fn grdim(&self) -> DimVector {
        grdim(self)
    }

    /// Smallest and largest covered coordinate.
    pub fn support(&self) -> Option<(i32, i32)> {
        let lo = self.segs.iter().map(|s| s.a).min()?;
        let hi = self.segs.iter().map(|s| s.b).max()?;
        Some((lo, hi))
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.segs.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Multisegment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_multisegment(s)
    }
}

impl Serialize for Multisegment {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Multisegment {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_multisegment(&s).map_err(serde::de::Error::custom)
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Multisegment::new(iter)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn integer(&mut self) -> Result<i32> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.err("expected integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        text.parse::<i32>().map_err(|e| Error::Parse { pos: start, msg: e.to_string() })
    }

    fn segment(&mut self) -> Result<Segment> {
        self.expect(b'[')?;
        let a = self.integer()?;
        self.expect(b',')?;
        let b = self.integer()?;
        self.expect(b']')?;
        Segment::new(a, b)
    }
}

/// Parse `"[a,b]+[c,d]+..."`; whitespace is allowed between tokens and the
/// empty string denotes the empty multisegment.
pub fn parse_multisegment(text: &str) -> Result<Multisegment> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.peek().is_none() {
        return Ok(Multisegment::empty());
    }
    let mut segs = vec![p.segment()?];
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => {
                p.pos += 1;
                segs.push(p.segment()?);
            }
            Some(_) => return Err(p.err("expected '+' or end of input")),
        }
    }
    Ok(Multisegment::new(segs))
}

/// Finitely supported map `Z -> N`. Only strictly positive entries are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimVector {
    entries: BTreeMap<i32, u32>,
}

impl DimVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (i32, u32)>) -> Self {
        let mut d = DimVector::zero();
        for (i, v) in entries {
            d.add_at(i, v);
        }
        d
    }

    pub fn get(&self, i: i32) -> u32 {
        self.entries.get(&i).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, i: i32, v: u32) {
        if v > 0 {
            *self.entries.entry(i).or_insert(0) += v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, u32)> + '_ {
        self.entries.iter().map(|(&i, &v)| (i, v))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().map(|&v| v as u64).sum()
    }

    pub fn support(&self) -> Option<(i32, i32)> {
        let lo = *self.entries.keys().next()?;
        let hi = *self.entries.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        let mut d = self.clone();
        for (i, v) in other.iter() {
            d.add_at(i, v);
        }
        d
    }

    /// Entry at `i` of the result is the entry of `self` at `-i`.
    pub fn reflect(&self) -> DimVector {
        DimVector::from_entries(self.iter().map(|(i, v)| (-i, v)))
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, v)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}:{v}")?;
        }
        f.write_str("}")
    }
}

pub fn grdim(m: &Multisegment) -> DimVector {
    let mut d = DimVector::zero();
    for s in m.iter() {
        for i in s.a..=s.b {
            d.add_at(i, 1);
        }
    }
    d
}

/// Directed Euler form `sum_i d_i e_i - d_i e_{i+1}`.
pub fn euler_plus(d: &DimVector, e: &DimVector) -> i64 {
    d.iter()
        .map(|(i, di)| di as i64 * (e.get(i) as i64 - e.get(i + 1) as i64))
        .sum()
}

/// Symmetrized type-A Cartan form `sum_i 2 d_i e_i - d_i e_{i+1} - d_i e_{i-1}`.
pub fn sym_form(d: &DimVector, e: &DimVector) -> i64 {
    euler_plus(d, e) + euler_plus(e, d)
}

/// A permutation of the segments with no earlier segment preceding a later
/// one. Kahn's algorithm on `≺`, always taking the canonically smallest
/// available segment.
pub fn arranged_form(m: &Multisegment) -> Vec<Segment> {
    let segs = m.segments();
    let n = segs.len();
    // indegree[j] counts i with segs[j] ≺ segs[i]: those must come first
    let mut blockers: Vec<usize> = (0..n)
        .map(|j| (0..n).filter(|&i| segs[j].precedes(&segs[i])).count())
        .collect();
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .find(|&j| !placed[j] && blockers[j] == 0)
            .expect("precedence is acyclic");
        placed[next] = true;
        out.push(segs[next]);
        for (j, b) in blockers.iter_mut().enumerate() {
            if !placed[j] && segs[j].precedes(&segs[next]) {
                *b -= 1;
            }
        }
    }
    out
}

/// Strictly decreasing left and right endpoints in canonical order.
pub fn is_ladder(m: &Multisegment) -> bool {
    m.segments()
        .windows(2)
        .all(|w| w[0].a > w[1].a && w[0].b > w[1].b)
}

/// Each segment is the unit shift of the previous one in canonical order.
pub fn is_speh(m: &Multisegment) -> bool {
    m.segments().windows(2).all(|w| w[1] == w[0].shift())
}

/// All left endpoints distinct and all right endpoints distinct.
pub fn is_regular(m: &Multisegment) -> bool {
    let mut a: Vec<i32> = m.iter().map(|s| s.a).collect();
    let mut b: Vec<i32> = m.iter().map(|s| s.b).collect();
    a.sort_unstable();
    b.sort_unstable();
    a.windows(2).all(|w| w[0] != w[1]) && b.windows(2).all(|w| w[0] != w[1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    #[serde(rename = "4231")]
    P4231,
    #[serde(rename = "3412")]
    P3412,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::P4231 => f.write_str("4231"),
            PatternKind::P3412 => f.write_str("3412"),
        }
    }
}

/// An ordered sub-multisegment `(Δ_1, ..., Δ_k)` exhibiting a forbidden pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub ordered_segments: Vec<Segment>,
}

impl PatternWitness {
    /// Re-evaluate the defining conditions on the stored list.
    pub fn is_valid(&self) -> bool {
        match self.kind {
            PatternKind::P4231 => is_type_4231(&self.ordered_segments),
            PatternKind::P3412 => is_type_3412(&self.ordered_segments),
        }
    }
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:(", self.kind)?;
        for (i, s) in self.ordered_segments.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// Conditions of type 4231 on an ordered list `d[0..k]` (`d[0]` is `Δ_1`):
/// the chain `Δ_k ≺ ... ≺ Δ_2`, `a(Δ_k) < a(Δ_1) < a(Δ_{k-1})` and
/// `b(Δ_3) < b(Δ_1) < b(Δ_2)`.
pub fn is_type_4231(d: &[Segment]) -> bool {
    let k = d.len();
    if k < 4 {
        return false;
    }
    let chain = (2..k).all(|i| d[i].precedes(&d[i - 1]));
    chain
        && d[k - 1].a < d[0].a
        && d[0].a < d[k - 2].a
        && d[2].b < d[0].b
        && d[0].b < d[1].b
}

/// Conditions of type 3412 on an ordered list `d[0..k]`: the chain
/// `Δ_k ≺ ... ≺ Δ_3`, `Δ_2 ≺ Δ_1`, `a(Δ_2) < a(Δ_k) < a(Δ_1) < a(Δ_{k-1})`
/// and `b(Δ_4) < b(Δ_2) < b(Δ_3) < b(Δ_1)`.
pub fn is_type_3412(d: &[Segment]) -> bool {
    let k = d.len();
    if k < 4 {
        return false;
    }
    let chain = (3..k).all(|i| d[i].precedes(&d[i - 1]));
    chain
        && d[1].precedes(&d[0])
        && d[1].a < d[k - 1].a
        && d[k - 1].a < d[0].a
        && d[0].a < d[k - 2].a
        && d[3].b < d[1].b
        && d[1].b < d[2].b
        && d[2].b < d[0].b
}

/// Decide whether a regular multisegment avoids both forbidden patterns.
/// Returns a witness when it does not.
pub fn is_balanced(m: &Multisegment) -> Result<(bool, Option<PatternWitness>)> {
    if !is_regular(m) {
        return Err(Error::NotRegular(m.to_string()));
    }
    let segs = m.segments();
    if let Some(w) = find_4231(segs) {
        return Ok((false, Some(PatternWitness { kind: PatternKind::P4231, ordered_segments: w })));
    }
    if let Some(w) = find_3412(segs) {
        return Ok((false, Some(PatternWitness { kind: PatternKind::P3412, ordered_segments: w })));
    }
    Ok((true, None))
}

/// Regular and balanced; `false` for non-regular input.
pub fn is_regular_balanced(m: &Multisegment) -> bool {
    matches!(is_balanced(m), Ok((true, _)))
}

/// Extend `chain` downward (each new element precedes the last) and call
/// `accept` on every chain of length at least `min_len`.
fn descend<F>(segs: &[Segment], used: &mut [bool], chain: &mut Vec<usize>, min_len: usize, accept: &mut F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if chain.len() >= min_len && accept(chain) {
        return true;
    }
    let last = *chain.last().expect("non-empty chain");
    for j in 0..segs.len() {
        if !used[j] && segs[j].precedes(&segs[last]) {
            used[j] = true;
            chain.push(j);
            let hit = descend(segs, used, chain, min_len, accept);
            chain.pop();
            used[j] = false;
            if hit {
                return true;
            }
        }
    }
    false
}

fn find_4231(segs: &[Segment]) -> Option<Vec<Segment>> {
    let n = segs.len();
    if n < 4 {
        return None;
    }
    let mut used = vec![false; n];
    for first in 0..n {
        let d1 = segs[first];
        used[first] = true;
        for second in 0..n {
            if used[second] || segs[second].b <= d1.b {
                continue;
            }
            used[second] = true;
            let mut chain = vec![second];
            let mut found: Option<Vec<usize>> = None;
            descend(segs, &mut used, &mut chain, 3, &mut |c: &[usize]| {
                // b(Δ_3) < b(Δ_1) is fixed once the chain has length 2
                if segs[c[1]].b >= d1.b {
                    return false;
                }
                let k = c.len();
                if segs[c[k - 1]].a < d1.a && d1.a < segs[c[k - 2]].a {
                    found = Some(c.to_vec());
                    true
                } else {
                    false
                }
            });
            used[second] = false;
            if let Some(c) = found {
                let mut w = vec![d1];
                w.extend(c.into_iter().map(|i| segs[i]));
                debug_assert!(is_type_4231(&w));
                return Some(w);
            }
        }
        used[first] = false;
    }
    None
}

fn find_3412(segs: &[Segment]) -> Option<Vec<Segment>> {
    let n = segs.len();
    if n < 4 {
        return None;
    }
    let mut used = vec![false; n];
    for first in 0..n {
        let d1 = segs[first];
        used[first] = true;
        for second in 0..n {
            if used[second] || !segs[second].precedes(&d1) {
                continue;
            }
            let d2 = segs[second];
            used[second] = true;
            for third in 0..n {
                if used[third] || !(d2.b < segs[third].b && segs[third].b < d1.b) {
                    continue;
                }
                used[third] = true;
                let mut chain = vec![third];
                let mut found: Option<Vec<usize>> = None;
                descend(segs, &mut used, &mut chain, 2, &mut |c: &[usize]| {
                    if segs[c[1]].b >= d2.b {
                        return false;
                    }
                    let k = c.len();
                    let last = segs[c[k - 1]];
                    let before = segs[c[k - 2]];
                    if d2.a < last.a && last.a < d1.a && d1.a < before.a {
                        found = Some(c.to_vec());
                        true
                    } else {
                        false
                    }
                });
                used[third] = false;
                if let Some(c) = found {
                    let mut w = vec![d1, d2];
                    w.extend(c.into_iter().map(|i| segs[i]));
                    debug_assert!(is_type_3412(&w));
                    return Some(w);
                }
            }
            used[second] = false;
        }
        used[first] = false;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    fn seg(a: i32, b: i32) -> Segment {
        Segment::new(a, b).unwrap()
    }

    #[test]
    fn parse_leclerc() {
        let m = ms("[4,5]+[2,4]+[3,3]+[1,2]");
        assert_eq!(m.segments(), &[seg(4, 5), seg(2, 4), seg(3, 3), seg(1, 2)]);
        assert_eq!(m.to_string(), "[4,5]+[2,4]+[3,3]+[1,2]");
    }

    #[test]
    fn parse_canonicalizes_and_allows_whitespace() {
        let m = ms("  [1, 2] + [ -3,-1 ]+[2,3] ");
        assert_eq!(m.to_string(), "[2,3]+[1,2]+[-3,-1]");
        assert_eq!(ms("[0,0]+[0,1]+[0,0]").to_string(), "[0,1]+[0,0]+[0,0]");
    }

    #[test]
    fn parse_empty_and_errors() {
        assert!(ms("").is_empty());
        assert!(ms("   ").is_empty());
        assert_eq!(parse_multisegment("[3,1]"), Err(Error::InvalidSegment { a: 3, b: 1 }));
        for bad in ["[1,2", "[1,2]+", "[1 2]", "1,2", "[a,b]", "[1,2][3,4]", "+[1,2]", "[1,2]x"] {
            assert!(
                matches!(parse_multisegment(bad), Err(Error::Parse { .. })),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(&seg(1, 3), &seg(2, 5)));
        assert!(!precedes(&seg(0, 1), &seg(0, 1)));
        assert!(precedes(&seg(0, 0), &seg(1, 1)));
    }

    #[test]
    fn unlinked_examples() {
        assert!(unlinked(&seg(0, 3), &seg(1, 2)));
        assert!(!unlinked(&seg(1, 3), &seg(2, 5)));
        assert!(unlinked(&seg(0, 0), &seg(2, 2)));
    }

    #[test]
    fn shift_and_dual() {
        assert_eq!(seg(2, 4).shift(), seg(1, 3));
        assert_eq!(seg(1, 2).dual(), seg(-2, -1));
        assert_eq!(seg(3, 7).dual().dual(), seg(3, 7));
        assert_eq!(ms("[1,2]+[3,5]").dual(), ms("[-5,-3]+[-2,-1]"));
    }

    #[test]
    fn grdim_examples() {
        let d = grdim(&ms("[4,5]+[2,4]+[3,3]+[1,2]"));
        assert_eq!(d, DimVector::from_entries([(1, 1), (2, 2), (3, 2), (4, 2), (5, 1)]));
        assert_eq!(grdim(&ms("[0,0]")), DimVector::from_entries([(0, 1)]));
        assert!(grdim(&Multisegment::empty()).is_zero());
    }

    #[test]
    fn form_examples() {
        let p0 = DimVector::from_entries([(0, 1)]);
        let p1 = DimVector::from_entries([(1, 1)]);
        assert_eq!(sym_form(&p0, &p0), 2);
        assert_eq!(sym_form(&p0, &p1), -1);
        let d = grdim(&ms("[4,5]+[2,4]+[3,3]+[1,2]"));
        assert_eq!(sym_form(&d, &d), 4);
        assert_eq!(euler_plus(&p0, &p1), -1);
        assert_eq!(euler_plus(&p1, &p0), 0);
    }

    #[test]
    fn arranged_form_examples() {
        assert_eq!(arranged_form(&ms("[1,2]+[2,3]")), vec![seg(2, 3), seg(1, 2)]);
        assert_eq!(arranged_form(&ms("[2,5]+[1,4]")), vec![seg(2, 5), seg(1, 4)]);
        assert!(arranged_form(&Multisegment::empty()).is_empty());
    }

    #[test]
    fn classification_examples() {
        assert!(is_ladder(&ms("[2,5]+[1,4]")));
        assert!(!is_ladder(&ms("[2,5]+[2,4]")));
        assert!(is_speh(&ms("[2,3]+[1,2]")));
        assert!(!is_speh(&ms("[2,3]+[0,1]")));
        assert!(is_regular(&ms("[4,5]+[2,4]+[3,3]+[1,2]")));
        assert!(!is_regular(&ms("[1,4]+[2,4]")));
    }

    #[test]
    fn leclerc_is_not_balanced() {
        let (ok, w) = is_balanced(&ms("[4,5]+[2,4]+[3,3]+[1,2]")).unwrap();
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.kind, PatternKind::P4231);
        assert_eq!(w.ordered_segments, vec![seg(2, 4), seg(4, 5), seg(3, 3), seg(1, 2)]);
        assert!(w.is_valid());
    }

    #[test]
    fn small_inputs_are_balanced() {
        assert_eq!(is_balanced(&ms("[0,1]")).unwrap(), (true, None));
        assert_eq!(is_balanced(&ms("[5,7]+[3,6]+[2,4]+[0,1]")).unwrap(), (true, None));
        assert!(matches!(is_balanced(&ms("[0,1]+[0,2]")), Err(Error::NotRegular(_))));
    }
}
