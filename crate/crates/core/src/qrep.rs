//! Representations of the linearly oriented quivers `Q+` (arrows `i -> i+1`)
//! and `Q-` (arrows `i -> i-1`): interval modules, explicit Hom/Ext over the
//! path algebra, and the closed-form segment indicators.

use std::collections::BTreeMap;

use crate::linalg::{Matrix, PrimeField, SystemBuilder, Term};
use crate::multiseg::{grdim, sym_form, DimVector, Multisegment, Segment};
use crate::DEFAULT_PRIME;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Arrows `i -> i+1`.
    Plus,
    /// Arrows `i -> i-1`.
    Minus,
}

impl Orientation {
    pub fn step(self) -> i32 {
        match self {
            Orientation::Plus => 1,
            Orientation::Minus => -1,
        }
    }
}

/// A graded vector space with a map of degree `±1`.
///
/// `maps[i]` is the map `V_i -> V_{i±1}`, of shape `dims[i±1] x dims[i]`.
/// Missing entries are zero maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    dims: DimVector,
    orientation: Orientation,
    maps: BTreeMap<i32, Matrix>,
}

impl QuiverRep {
    /// Panics if a map shape disagrees with `dims`.
    pub fn new(dims: DimVector, orientation: Orientation, maps: BTreeMap<i32, Matrix>) -> Self {
        let step = orientation.step();
        let maps: BTreeMap<i32, Matrix> = maps
            .into_iter()
            .filter(|(i, m)| {
                assert_eq!(
                    (m.rows(), m.cols()),
                    (dims.get(i + step) as usize, dims.get(*i) as usize),
                    "map at degree {i} has wrong shape"
                );
                !m.is_zero()
            })
            .collect();
        QuiverRep { dims, orientation, maps }
    }

    pub fn zero(orientation: Orientation) -> Self {
        QuiverRep { dims: DimVector::zero(), orientation, maps: BTreeMap::new() }
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn dim(&self, i: i32) -> usize {
        self.dims.get(i) as usize
    }

    /// The map out of degree `i` (a zero matrix when absent).
    pub fn map(&self, i: i32) -> Matrix {
        self.maps
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(i + self.orientation.step()), self.dim(i)))
    }

    pub fn nonzero_maps(&self) -> impl Iterator<Item = (i32, &Matrix)> {
        self.maps.iter().map(|(&i, m)| (i, m))
    }

    /// Composite of the arrows along the path from degree `from` to degree
    /// `to` (`to >= from` for `Plus`, `to <= from` for `Minus`).
    pub fn path(&self, field: &PrimeField, from: i32, to: i32) -> Matrix {
        let step = self.orientation.step();
        let mut acc = Matrix::identity(self.dim(from));
        let mut i = from;
        while i != to {
            acc = self.map(i).mul(field, &acc);
            i += step;
        }
        acc
    }

    /// Recover the interval decomposition from ranks of path composites.
    pub fn decompose(&self, field: &PrimeField) -> Multisegment {
        let Some((lo, hi)) = self.dims.support() else {
            return Multisegment::empty();
        };
        // rank[(a,b)] = number of summands [a',b'] with a' <= a, b <= b'
        let mut rank: BTreeMap<(i32, i32), i64> = BTreeMap::new();
        for a in lo..=hi {
            for b in a..=hi {
                let r = match self.orientation {
                    Orientation::Plus => self.path(field, a, b).rank(field),
                    Orientation::Minus => self.path(field, b, a).rank(field),
                };
                rank.insert((a, b), r as i64);
            }
        }
        let r = |a: i32, b: i32| rank.get(&(a, b)).copied().unwrap_or(0);
        let mut segs = Vec::new();
        for a in lo..=hi {
            for b in a..=hi {
                let mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
                debug_assert!(mult >= 0);
                for _ in 0..mult {
                    segs.push(Segment::new(a, b).expect("a <= b"));
                }
            }
        }
        Multisegment::new(segs)
    }
}

/// Basis bookkeeping for a direct sum of interval modules: at each degree,
/// the segments covering it in canonical order.
pub(crate) fn interval_basis(m: &Multisegment) -> BTreeMap<i32, Vec<usize>> {
    let mut basis: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for (k, s) in m.iter().enumerate() {
        for i in s.a()..=s.b() {
            basis.entry(i).or_default().push(k);
        }
    }
    basis
}

fn interval_module(m: &Multisegment, orientation: Orientation) -> QuiverRep {
    let basis = interval_basis(m);
    let step = orientation.step();
    let mut maps = BTreeMap::new();
    for (&i, src) in &basis {
        let Some(dst) = basis.get(&(i + step)) else { continue };
        let mut mat = Matrix::zeros(dst.len(), src.len());
        for (c, k) in src.iter().enumerate() {
            if let Some(r) = dst.iter().position(|x| x == k) {
                mat.set(r, c, 1);
            }
        }
        maps.insert(i, mat);
    }
    QuiverRep::new(grdim(m), orientation, maps)
}

/// `⊕ μ₊(Δ)`: each `[a,b]` is one-dimensional in degrees `a..=b` with the
/// identity in degrees `a..b`.
pub fn mu_plus(m: &Multisegment) -> QuiverRep {
    interval_module(m, Orientation::Plus)
}

/// `⊕ μ₋(Δ)`: the identity in degrees `a+1..=b`, mapping down.
pub fn mu_minus(m: &Multisegment) -> QuiverRep {
    interval_module(m, Orientation::Minus)
}

/// `dim Hom(x, y)` over the path algebra, by solving the intertwining equations.
pub fn hom_dim(field: &PrimeField, x: &QuiverRep, y: &QuiverRep) -> usize {
    assert_eq!(x.orientation, y.orientation);
    hom_system(field, x, y).nullity()
}

/// `dim Ext¹(x, y)`, the cokernel of
/// `⊕_i Hom(x_i, y_i) -> ⊕_arrows Hom(x_i, y_{i±1})`.
pub fn ext1_dim(field: &PrimeField, x: &QuiverRep, y: &QuiverRep) -> usize {
    let step = x.orientation.step();
    let arrow_space: usize = x.dims.iter().map(|(i, d)| d as usize * y.dim(i + step)).sum();
    let vertex_space: usize = x.dims.iter().map(|(i, d)| d as usize * y.dim(i)).sum();
    let image = vertex_space - hom_dim(field, x, y);
    arrow_space - image
}

fn hom_system(field: &PrimeField, x: &QuiverRep, y: &QuiverRep) -> SystemBuilder {
    let step = x.orientation.step();
    let mut sys = SystemBuilder::new(*field);
    let mut phi = BTreeMap::new();
    for (i, d) in x.dims.iter() {
        let e = y.dim(i);
        if e > 0 {
            phi.insert(i, sys.block(e, d as usize));
        }
    }
    for (i, d) in x.dims.iter() {
        let j = i + step;
        let rows = y.dim(j);
        if rows == 0 {
            continue;
        }
        // phi_j x_i - y_i phi_i = 0 : x_i -> y_j
        let xi = x.map(i);
        let yi = y.map(i);
        let mut terms = Vec::new();
        if let Some(&pj) = phi.get(&j) {
            terms.push(Term::Right { sign: 1, x: pj, right: &xi });
        }
        if let Some(&pi) = phi.get(&i) {
            terms.push(Term::Left { sign: -1, left: &yi, x: pi });
        }
        sys.equation(rows, d as usize, &terms);
    }
    sys
}

/// `dim Hom_{Q+}(μ₊(Δ), μ₊(Γ))`: 1 iff `shift(Γ) ≺ Δ`.
pub fn hom_qplus_segments(d: &Segment, g: &Segment) -> usize {
    usize::from(g.shift().precedes(d))
}

/// `dim Ext¹_{Q+}(μ₊(Δ), μ₊(Γ))`: 1 iff `Δ ≺ Γ`.
pub fn ext1_qplus_segments(d: &Segment, g: &Segment) -> usize {
    usize::from(d.precedes(g))
}

/// Additive extension of [`hom_qplus_segments`] over all segment pairs.
pub fn hom_qplus(x: &Multisegment, y: &Multisegment) -> usize {
    x.iter()
        .map(|d| y.iter().map(|g| hom_qplus_segments(d, g)).sum::<usize>())
        .sum()
}

pub fn ext1_qplus(x: &Multisegment, y: &Multisegment) -> usize {
    x.iter()
        .map(|d| y.iter().map(|g| ext1_qplus_segments(d, g)).sum::<usize>())
        .sum()
}

/// `α₊(m, n) = dim Hom_{Q+}(m, n) - dim Ext¹_{Q+}(n, m)`.
pub fn alpha_plus(m: &Multisegment, n: &Multisegment) -> i64 {
    hom_qplus(m, n) as i64 - ext1_qplus(n, m) as i64
}

/// Per-segment normalization order: `+1` when only `shift(Δ') ≺ Δ` holds,
/// `-1` when only `Δ' ≺ Δ` holds, `0` otherwise.
pub fn alpha_plus_segment_rule(d: &Segment, d2: &Segment) -> i64 {
    let up = d2.shift().precedes(d);
    let down = d2.precedes(d);
    match (up, down) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

/// `α(m, n) = -(grdim m, grdim n)`.
pub fn alpha(m: &Multisegment, n: &Multisegment) -> i64 {
    -sym_form(&grdim(m), &grdim(n))
}

/// Explicit `Hom_{Q+}` between two multisegments' interval modules.
pub fn hom_qplus_explicit(m: &Multisegment, n: &Multisegment) -> usize {
    hom_dim(&PrimeField::new(DEFAULT_PRIME), &mu_plus(m), &mu_plus(n))
}

pub fn ext1_qplus_explicit(m: &Multisegment, n: &Multisegment) -> usize {
    ext1_dim(&PrimeField::new(DEFAULT_PRIME), &mu_plus(m), &mu_plus(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiseg::euler_plus;

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    fn seg(a: i32, b: i32) -> Segment {
        Segment::new(a, b).unwrap()
    }

    const LEC: &str = "[4,5]+[2,4]+[3,3]+[1,2]";

    #[test]
    fn mu_plus_single_segment() {
        let x = mu_plus(&ms("[0,1]"));
        assert_eq!(x.dims(), &DimVector::from_entries([(0, 1), (1, 1)]));
        let maps: Vec<_> = x.nonzero_maps().collect();
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].0, 0);
        assert_eq!(maps[0].1, &Matrix::identity(1));
    }

    #[test]
    fn mu_plus_empty_and_leclerc() {
        assert_eq!(mu_plus(&Multisegment::empty()), QuiverRep::zero(Orientation::Plus));
        let x = mu_plus(&ms(LEC));
        assert_eq!(x.dims(), &DimVector::from_entries([(1, 1), (2, 2), (3, 2), (4, 2), (5, 1)]));
    }

    #[test]
    fn segment_indicators() {
        assert_eq!(hom_qplus_segments(&seg(1, 4), &seg(0, 2)), 1);
        assert_eq!(hom_qplus_segments(&seg(1, 3), &seg(2, 5)), 0);
        assert_eq!(ext1_qplus_segments(&seg(1, 2), &seg(2, 4)), 1);
        assert_eq!(hom_qplus_explicit(&ms("[1,4]"), &ms("[0,2]")), 1);
        assert_eq!(hom_qplus_explicit(&ms("[1,3]"), &ms("[2,5]")), 0);
        assert_eq!(ext1_qplus_explicit(&ms("[1,2]"), &ms("[2,4]")), 1);
    }

    #[test]
    fn hom_qplus_examples() {
        assert_eq!(hom_qplus(&ms("[0,1]"), &ms("[0,1]")), 1);
        let m = ms(LEC);
        let d = grdim(&m);
        assert_eq!(
            hom_qplus(&m, &m) as i64 - ext1_qplus(&m, &m) as i64,
            euler_plus(&d, &d)
        );
        assert_eq!(hom_qplus(&m, &Multisegment::empty()), 0);
    }

    #[test]
    fn alpha_plus_examples() {
        assert_eq!(alpha_plus(&ms("[1,1]"), &ms("[0,0]")), -1);
        assert_eq!(alpha_plus(&ms("[0,1]"), &ms("[0,1]")), 1);
        assert_eq!(alpha_plus(&ms("[2,3]+[1,2]"), &ms("[2,3]+[1,2]")), 2);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&ms("[0,0]"), &ms("[0,0]")), -2);
        assert_eq!(alpha(&ms("[0,0]"), &ms("[1,1]")), 1);
        assert_eq!(alpha(&ms(LEC), &ms(LEC)), -4);
    }

    #[test]
    fn segment_rule_matches_hom_minus_ext() {
        for a in 0..5 {
            for b in a..5 {
                for c in 0..5 {
                    for d in c..5 {
                        let (x, y) = (seg(a, b), seg(c, d));
                        let direct = hom_qplus_segments(&x, &y) as i64 - ext1_qplus_segments(&y, &x) as i64;
                        assert_eq!(alpha_plus_segment_rule(&x, &y), direct, "{x} {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn decompose_recovers_intervals() {
        let f = PrimeField::new(DEFAULT_PRIME);
        for s in [LEC, "[0,2]+[0,2]+[1,1]+[-1,0]", "", "[3,3]"] {
            let m = ms(s);
            assert_eq!(mu_plus(&m).decompose(&f), m);
            assert_eq!(mu_minus(&m).decompose(&f), m);
        }
    }
}
