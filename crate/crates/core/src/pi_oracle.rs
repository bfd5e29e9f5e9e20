//! Randomized exact oracle over the preprojective algebra `Π` of type `A_∞`.
//!
//! A generic point of the component `C(m)` is `(μ₊(m), T)` with `T` drawn
//! uniformly from the linear fiber `{T : T_{i+1} S_i = S_{i-1} T_i}`. Generic
//! Hom and Ext dimensions between components are minima over independent
//! draws, computed by exact Gaussian elimination over a large prime field.
//! The rank of a random specialization equals the generic rank except with
//! probability `O(size / p)`.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{is_prime, Block, Matrix, PrimeField, SystemBuilder, Term};
use crate::multiseg::{grdim, sym_form, DimVector, Multisegment};
use crate::par;
use crate::qrep::{alpha_plus, mu_plus, Orientation, QuiverRep};
use crate::DEFAULT_PRIME;

/// Sampling parameters for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub prime: u64,
    pub samples: usize,
    pub seed: u64,
    /// Evaluate independent draws on the rayon pool (no effect on results).
    #[serde(default = "par::available")]
    pub parallel: bool,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { prime: DEFAULT_PRIME, samples: 8, seed: 0, parallel: par::available() }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64) -> Self {
        SampleConfig { seed, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.prime <= 1_000_000 {
            return Err(Error::Config(format!("prime {} must exceed 10^6", self.prime)));
        }
        if self.prime >= 1 << 32 {
            return Err(Error::Config(format!("prime {} must be below 2^32", self.prime)));
        }
        if !is_prime(self.prime) {
            return Err(Error::Config(format!("{} is not prime", self.prime)));
        }
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.prime)
    }

    fn rng(&self, draw_index: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(splitmix(self.seed ^ splitmix(draw_index.wrapping_add(0x9e37_79b9))))
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A module over `Π`: a degree `+1` family `S` and a degree `-1` family `T`
/// on the same graded space, satisfying `T_{i+1} S_i = S_{i-1} T_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiModule {
    s: QuiverRep,
    t: QuiverRep,
}

impl PiModule {
    /// Fails when the two families live on different spaces or violate the
    /// moment-map relation.
    pub fn new(field: &PrimeField, s: QuiverRep, t: QuiverRep) -> Result<Self> {
        if s.orientation() != Orientation::Plus || t.orientation() != Orientation::Minus {
            return Err(Error::Precondition("S must have degree +1 and T degree -1".into()));
        }
        if s.dims() != t.dims() {
            return Err(Error::Precondition("S and T live on different graded spaces".into()));
        }
        let x = PiModule { s, t };
        if !x.relation_holds(field) {
            return Err(Error::Precondition("moment-map relation fails".into()));
        }
        Ok(x)
    }

    pub fn dims(&self) -> &DimVector {
        self.s.dims()
    }

    pub fn s(&self) -> &QuiverRep {
        &self.s
    }

    pub fn t(&self) -> &QuiverRep {
        &self.t
    }

    /// `T_{i+1} S_i - S_{i-1} T_i` at each degree of the support.
    pub fn residuals(&self, field: &PrimeField) -> Vec<(i32, Matrix)> {
        self.dims()
            .iter()
            .map(|(i, _)| {
                let lhs = self.t.map(i + 1).mul(field, &self.s.map(i));
                let rhs = self.s.map(i - 1).mul(field, &self.t.map(i));
                (i, lhs.sub(field, &rhs))
            })
            .collect()
    }

    pub fn relation_holds(&self, field: &PrimeField) -> bool {
        self.residuals(field).iter().all(|(_, r)| r.is_zero())
    }

    /// Transport along `g = (g_i)`: `S_i -> g_{i+1} S_i g_i^{-1}`, same for `T`.
    /// Every `g_i` must be invertible of size `dims[i]`.
    pub fn base_change(&self, field: &PrimeField, g: &BTreeMap<i32, Matrix>) -> Option<PiModule> {
        let mut inv = BTreeMap::new();
        for (i, d) in self.dims().iter() {
            let gi = g.get(&i)?;
            if gi.rows() != d as usize {
                return None;
            }
            inv.insert(i, gi.inverse(field)?);
        }
        let conj = |rep: &QuiverRep| {
            let step = rep.orientation().step();
            let maps = rep
                .nonzero_maps()
                .map(|(i, m)| (i, g[&(i + step)].mul(field, m).mul(field, &inv[&i])))
                .collect();
            QuiverRep::new(rep.dims().clone(), rep.orientation(), maps)
        };
        Some(PiModule { s: conj(&self.s), t: conj(&self.t) })
    }
}

/// A seeded generic point `(μ₊(m), T)` of the component `C(m)`.
pub fn generic_point(m: &Multisegment, cfg: &SampleConfig, draw_index: u64) -> PiModule {
    let field = cfg.field();
    let s = mu_plus(m);
    let dims = s.dims().clone();

    let mut sys = SystemBuilder::new(field);
    let mut t_blocks: BTreeMap<i32, Block> = BTreeMap::new();
    for (i, d) in dims.iter() {
        let below = dims.get(i - 1) as usize;
        if below > 0 {
            t_blocks.insert(i, sys.block(below, d as usize));
        }
    }
    for (i, d) in dims.iter() {
        let d = d as usize;
        let s_i = s.map(i);
        let s_prev = s.map(i - 1);
        let mut terms = Vec::new();
        if let Some(&t_next) = t_blocks.get(&(i + 1)) {
            terms.push(Term::Right { sign: 1, x: t_next, right: &s_i });
        }
        if let Some(&t_i) = t_blocks.get(&i) {
            terms.push(Term::Left { sign: -1, left: &s_prev, x: t_i });
        }
        sys.equation(d, d, &terms);
    }

    let basis = sys.kernel_basis();
    let mut rng = cfg.rng(draw_index);
    let mut values = vec![0u64; sys.unknowns()];
    for v in &basis {
        let c = field.random(&mut rng);
        for (acc, &x) in values.iter_mut().zip(v) {
            *acc = field.add(*acc, field.mul(c, x));
        }
    }
    let maps = t_blocks
        .iter()
        .map(|(&i, blk)| {
            let data = values[blk.offset..blk.offset + blk.rows * blk.cols].to_vec();
            (i, Matrix::from_rows(blk.rows, blk.cols, data))
        })
        .collect();
    let t = QuiverRep::new(dims, Orientation::Minus, maps);
    PiModule { s, t }
}

/// Dimension of the linear fiber of `T`'s over `μ₊(m)`.
pub fn fiber_dimension(m: &Multisegment, cfg: &SampleConfig) -> usize {
    let x = generic_point(m, cfg, 0);
    let dims = x.dims();
    let mut sys = SystemBuilder::new(cfg.field());
    let mut t_blocks = BTreeMap::new();
    for (i, d) in dims.iter() {
        let below = dims.get(i - 1) as usize;
        if below > 0 {
            t_blocks.insert(i, sys.block(below, d as usize));
        }
    }
    for (i, d) in dims.iter() {
        let s_i = x.s.map(i);
        let s_prev = x.s.map(i - 1);
        let mut terms = Vec::new();
        if let Some(&t_next) = t_blocks.get(&(i + 1)) {
            terms.push(Term::Right { sign: 1, x: t_next, right: &s_i });
        }
        if let Some(&t_i) = t_blocks.get(&i) {
            terms.push(Term::Left { sign: -1, left: &s_prev, x: t_i });
        }
        sys.equation(d as usize, d as usize, &terms);
    }
    sys.nullity()
}

fn phi_blocks(sys: &mut SystemBuilder, x: &DimVector, y: &DimVector) -> BTreeMap<i32, Block> {
    let mut phi = BTreeMap::new();
    for (i, d) in x.iter() {
        let e = y.get(i) as usize;
        if e > 0 {
            phi.insert(i, sys.block(e, d as usize));
        }
    }
    phi
}

/// Intertwining equations `φ_j X_i - Y_i φ_i = 0` for every arrow of one family.
fn intertwine(sys: &mut SystemBuilder, phi: &BTreeMap<i32, Block>, x: &QuiverRep, y: &QuiverRep) {
    let step = x.orientation().step();
    for (i, d) in x.dims().iter() {
        let j = i + step;
        let rows = y.dim(j);
        if rows == 0 {
            continue;
        }
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
}

fn pairing(x: &DimVector, y: &DimVector) -> usize {
    x.iter().map(|(i, d)| d as usize * y.get(i) as usize).sum()
}

/// `dim Hom_Π(x, y)` over `F_p`.
pub fn hom_pi(field: &PrimeField, x: &PiModule, y: &PiModule) -> usize {
    let mut sys = SystemBuilder::new(*field);
    let phi = phi_blocks(&mut sys, x.dims(), y.dims());
    intertwine(&mut sys, &phi, &x.s, &y.s);
    intertwine(&mut sys, &phi, &x.t, &y.t);
    sys.nullity()
}

/// `dim Ext¹_Π(x, y)` computed directly: extension cocycles `(η^S, η^T)`
/// solving the linearized relation, modulo coboundaries of degree-0 maps.
pub fn ext1_pi(field: &PrimeField, x: &PiModule, y: &PiModule) -> usize {
    let (dx, dy) = (x.dims(), y.dims());
    let mut sys = SystemBuilder::new(*field);
    let mut eta_s = BTreeMap::new();
    let mut eta_t = BTreeMap::new();
    for (i, d) in dx.iter() {
        let up = dy.get(i + 1) as usize;
        if up > 0 {
            eta_s.insert(i, sys.block(up, d as usize));
        }
        let down = dy.get(i - 1) as usize;
        if down > 0 {
            eta_t.insert(i, sys.block(down, d as usize));
        }
    }
    for (i, d) in dx.iter() {
        let rows = dy.get(i) as usize;
        if rows == 0 {
            continue;
        }
        // T'_{i+1} ηS_i + ηT_{i+1} S_i - S'_{i-1} ηT_i - ηS_{i-1} T_i = 0
        let ty_next = y.t.map(i + 1);
        let sx_i = x.s.map(i);
        let sy_prev = y.s.map(i - 1);
        let tx_i = x.t.map(i);
        let mut terms = Vec::new();
        if let Some(&b) = eta_s.get(&i) {
            terms.push(Term::Left { sign: 1, left: &ty_next, x: b });
        }
        if let Some(&b) = eta_t.get(&(i + 1)) {
            terms.push(Term::Right { sign: 1, x: b, right: &sx_i });
        }
        if let Some(&b) = eta_t.get(&i) {
            terms.push(Term::Left { sign: -1, left: &sy_prev, x: b });
        }
        if let Some(&b) = eta_s.get(&(i - 1)) {
            terms.push(Term::Right { sign: -1, x: b, right: &tx_i });
        }
        sys.equation(rows, d as usize, &terms);
    }
    let cocycles = sys.nullity();
    let coboundaries = pairing(dx, dy) - hom_pi(field, x, y);
    cocycles - coboundaries
}

/// `hom_Π(C(m), C(n))`: minimum over `cfg.samples` independent pairs.
pub fn generic_hom(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> usize {
    if m.is_empty() || n.is_empty() {
        return 0;
    }
    let field = cfg.field();
    par::min_indexed(cfg.samples, cfg.parallel, |k| {
        let x = generic_point(m, cfg, 2 * k as u64);
        let y = generic_point(n, cfg, 2 * k as u64 + 1);
        hom_pi(&field, &x, &y)
    })
    .expect("samples >= 1")
}

/// `ext¹_Π(C(m), C(n))` through the Crawley-Boevey identity.
pub fn generic_ext1(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> usize {
    let h = generic_hom(m, n, cfg) as i64 + generic_hom(n, m, cfg) as i64;
    let v = h - sym_form(&grdim(m), &grdim(n));
    debug_assert!(v >= 0);
    v as usize
}

/// `ext¹_Π(C(m), C(n))` as a minimum of directly computed Ext¹ dimensions.
pub fn generic_ext1_direct(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> usize {
    if m.is_empty() || n.is_empty() {
        return 0;
    }
    let field = cfg.field();
    par::min_indexed(cfg.samples, cfg.parallel, |k| {
        let x = generic_point(m, cfg, 2 * k as u64);
        let y = generic_point(n, cfg, 2 * k as u64 + 1);
        ext1_pi(&field, &x, &y)
    })
    .expect("samples >= 1")
}

/// Minimum over single draws `x` of `dim Ext¹(x, x) = 2 hom(x,x) - (d,d)`.
pub fn ext1_diagonal(m: &Multisegment, cfg: &SampleConfig) -> usize {
    if m.is_empty() {
        return 0;
    }
    let field = cfg.field();
    let d = grdim(m);
    let q = sym_form(&d, &d);
    par::min_indexed(cfg.samples, cfg.parallel, |k| {
        let x = generic_point(m, cfg, 2 * k as u64);
        let v = 2 * hom_pi(&field, &x, &x) as i64 - q;
        debug_assert!(v >= 0);
        v as usize
    })
    .expect("samples >= 1")
}

/// Generic cokernel dimension of the Coxeter map `T_{x,y}`.
pub fn coker_coxeter(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> usize {
    let v = generic_hom(m, n, cfg) as i64 - alpha_plus(m, n);
    debug_assert!(v >= 0);
    v as usize
}

pub fn is_rigid_component(m: &Multisegment, cfg: &SampleConfig) -> bool {
    ext1_diagonal(m, cfg) == 0
}

pub fn strongly_commute(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> bool {
    generic_ext1(m, n, cfg) == 0
}

/// The `Q-` part of a generic point of `C(m)`, decomposed into intervals.
pub fn generic_qminus_type(m: &Multisegment, cfg: &SampleConfig) -> Multisegment {
    generic_point(m, cfg, 0).t.decompose(&cfg.field())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiseg::Segment;

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    const LEC: &str = "[4,5]+[2,4]+[3,3]+[1,2]";

    fn cfg() -> SampleConfig {
        SampleConfig::with_seed(11)
    }

    #[test]
    fn config_validation() {
        assert!(SampleConfig::default().validate().is_ok());
        assert!(SampleConfig { prime: 999_983, ..Default::default() }.validate().is_err());
        assert!(SampleConfig { prime: 1_000_001, ..Default::default() }.validate().is_err());
        assert!(SampleConfig { samples: 0, ..Default::default() }.validate().is_err());
        assert!(SampleConfig { prime: 1_000_003, ..Default::default() }.validate().is_ok());
    }

    #[test]
    fn generic_points_satisfy_relation() {
        let c = cfg();
        for s in [LEC, "[0,0]", "[0,0]+[1,1]", "[0,3]+[1,2]+[2,2]+[1,1]", ""] {
            for k in 0..3 {
                let x = generic_point(&ms(s), &c, k);
                assert!(x.relation_holds(&c.field()), "{s}");
                assert_eq!(x.dims(), &grdim(&ms(s)));
            }
        }
    }

    #[test]
    fn fiber_dimensions() {
        let c = cfg();
        assert_eq!(fiber_dimension(&ms("[0,0]"), &c), 0);
        assert!(generic_point(&ms("[0,0]"), &c, 0).t().nonzero_maps().next().is_none());
        assert_eq!(fiber_dimension(&ms("[0,0]+[1,1]"), &c), 1);
    }

    #[test]
    fn hom_pi_basics() {
        let c = cfg();
        let f = c.field();
        let x = generic_point(&ms(LEC), &c, 0);
        assert!(hom_pi(&f, &x, &x) >= 1);
        let p1 = generic_point(&ms("[1,1]"), &c, 0);
        let p0 = generic_point(&ms("[0,0]"), &c, 1);
        assert_eq!(hom_pi(&f, &p1, &p0), 0);
    }

    #[test]
    fn generic_hom_examples() {
        let c = cfg();
        assert_eq!(generic_hom(&ms("[0,1]"), &ms("[0,1]"), &c), 1);
        assert_eq!(generic_hom(&ms(LEC), &ms(LEC), &c), 2);
        assert_eq!(generic_hom(&ms("[1,1]"), &ms("[0,0]"), &c), 0);
        assert_eq!(generic_hom(&ms("[1,1]"), &Multisegment::empty(), &c), 0);
    }

    #[test]
    fn ext_examples() {
        let c = cfg();
        let lec = ms(LEC);
        assert_eq!(generic_ext1(&lec, &lec, &c), 0);
        assert_eq!(generic_ext1_direct(&lec, &lec, &c), 0);
        let diag = ext1_diagonal(&lec, &c);
        assert!(diag >= 2 && diag.is_multiple_of(2), "diagonal ext {diag}");
        let ladder = ms("[3,6]+[1,4]+[0,2]");
        assert_eq!(generic_ext1(&ladder, &ladder, &c), 0);
        assert_eq!(ext1_diagonal(&ladder, &c), 0);
    }

    #[test]
    fn coker_examples() {
        let c = cfg();
        assert_eq!(coker_coxeter(&ms("[1,1]"), &ms("[0,0]"), &c), 1);
        assert_eq!(coker_coxeter(&ms("[0,1]"), &ms("[0,1]"), &c), 0);
        assert_eq!(coker_coxeter(&ms("[0,1]+[2,2]"), &Multisegment::empty(), &c), 0);
    }

    #[test]
    fn rigidity_and_commutation() {
        let c = cfg();
        let lec = ms(LEC);
        assert!(!is_rigid_component(&lec, &c));
        assert!(strongly_commute(&lec, &lec, &c));
        assert!(is_rigid_component(&ms("[2,5]+[1,4]"), &c));
    }

    #[test]
    fn crawley_boevey_pointwise() {
        let c = cfg();
        let f = c.field();
        let cases = [(LEC, "[1,3]+[2,2]"), ("[0,2]+[1,1]", "[0,1]+[1,2]"), ("[0,0]", "[1,1]"), (LEC, LEC)];
        for (a, b) in cases {
            let (m, n) = (ms(a), ms(b));
            let x = generic_point(&m, &c, 3);
            let y = generic_point(&n, &c, 4);
            let lhs = ext1_pi(&f, &x, &y) as i64;
            let rhs = hom_pi(&f, &x, &y) as i64 + hom_pi(&f, &y, &x) as i64
                - sym_form(&grdim(&m), &grdim(&n));
            assert_eq!(lhs, rhs, "{a} vs {b}");
        }
    }

    #[test]
    fn hom_is_invariant_under_base_change() {
        let c = cfg();
        let f = c.field();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = generic_point(&ms(LEC), &c, 0);
        let y = generic_point(&ms("[2,4]+[1,3]+[3,3]"), &c, 1);
        let g: BTreeMap<i32, Matrix> = x
            .dims()
            .iter()
            .map(|(i, d)| (i, Matrix::random(&f, d as usize, d as usize, &mut rng)))
            .collect();
        let xg = x.base_change(&f, &g).unwrap();
        assert!(xg.relation_holds(&f));
        assert_eq!(hom_pi(&f, &xg, &y), hom_pi(&f, &x, &y));
        assert_eq!(hom_pi(&f, &y, &xg), hom_pi(&f, &y, &x));
    }

    #[test]
    fn parallel_and_sequential_sampling_agree() {
        let par = SampleConfig { parallel: true, ..cfg() };
        let seq = SampleConfig { parallel: false, ..cfg() };
        let m = ms("[0,3]+[1,2]+[2,4]");
        let n = ms(LEC);
        assert_eq!(generic_hom(&m, &n, &par), generic_hom(&m, &n, &seq));
        assert_eq!(ext1_diagonal(&n, &par), ext1_diagonal(&n, &seq));
    }

    #[test]
    fn point_module_t_is_zero() {
        let x = generic_point(&Multisegment::new([Segment::point(4)]), &cfg(), 9);
        assert_eq!(x.t().nonzero_maps().count(), 0);
    }
}
