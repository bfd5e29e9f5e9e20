//! Best matching functions between the sets `X` and `Y` of segment pairs.
//! In the ladder case they compute generic Hom and Coxeter-cokernel dimensions.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiseg::{arranged_form, is_ladder, Multisegment, Segment};

/// A 1-based index pair `(i, j)` referring to `(Δ_i, Γ_j)`.
pub type Pair = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingInstance {
    /// `Δ_1, ..., Δ_k` in arranged order.
    pub m_segs: Vec<Segment>,
    /// `Γ_1, ..., Γ_l` in arranged order.
    pub n_segs: Vec<Segment>,
    /// Pairs with `Δ_i ≺ Γ_j`.
    pub x: Vec<Pair>,
    /// Pairs with `shift(Δ_i) ≺ Γ_j`.
    pub y: Vec<Pair>,
    /// `(y, x)` with `y ⇝ x`.
    pub arrows: Vec<(Pair, Pair)>,
}

impl MatchingInstance {
    fn delta(&self, i: usize) -> &Segment {
        &self.m_segs[i - 1]
    }

    fn gamma(&self, j: usize) -> &Segment {
        &self.n_segs[j - 1]
    }

    /// `(r,s) ⇝ (r',s')` iff `r = r'` and `Γ_s ≺ Γ_s'`, or `s = s'` and `Δ_r' ≺ Δ_r`.
    pub fn leads_to(&self, from: Pair, to: Pair) -> bool {
        let (r, s) = from;
        let (r2, s2) = to;
        (r == r2 && self.gamma(s).precedes(self.gamma(s2))) || (s == s2 && self.delta(r2).precedes(self.delta(r)))
    }
}

/// Builds the instance with the `Δ`'s taken from `m` and the `Γ`'s from `n`.
pub fn build_instance(m: &Multisegment, n: &Multisegment) -> MatchingInstance {
    let m_segs = arranged_form(m);
    let n_segs = arranged_form(n);
    let mut x = Vec::new();
    let mut y = Vec::new();
    for (i, d) in m_segs.iter().enumerate() {
        for (j, g) in n_segs.iter().enumerate() {
            if d.precedes(g) {
                x.push((i + 1, j + 1));
            }
            if d.shift().precedes(g) {
                y.push((i + 1, j + 1));
            }
        }
    }
    let mut inst = MatchingInstance { m_segs, n_segs, x, y, arrows: Vec::new() };
    let mut arrows = Vec::new();
    for &to in &inst.x {
        for &from in &inst.y {
            if inst.leads_to(from, to) {
                arrows.push((from, to));
            }
        }
    }
    inst.arrows = arrows;
    inst
}

/// `f : I -> Y` as a list of `(i, f(i))`, sorted by `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestMatching {
    pub pairs: Vec<(Pair, Pair)>,
}

impl BestMatching {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Injective, `f(i) ⇝ i`, domain inside `X`, image inside `Y`.
    pub fn is_valid_for(&self, inst: &MatchingInstance) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.pairs.iter().all(|&(i, fi)| {
            inst.x.contains(&i) && inst.y.contains(&fi) && inst.leads_to(fi, i) && seen.insert(fi)
        }) && self.pairs.windows(2).all(|w| w[0].0 < w[1].0)
    }
}

/// Maximum matching by Hopcroft-Karp over the arrows of the instance.
/// Deterministic: vertices and adjacency are visited in canonical order.
pub fn best_matching(inst: &MatchingInstance) -> BestMatching {
    let p = inst.x.len();
    let q = inst.y.len();
    let adj: Vec<Vec<usize>> = inst
        .x
        .iter()
        .map(|&xi| (0..q).filter(|&k| inst.leads_to(inst.y[k], xi)).collect())
        .collect();
    let mate = hopcroft_karp(p, q, &adj);
    let pairs = mate
        .iter()
        .enumerate()
        .filter_map(|(u, v)| v.map(|v| (inst.x[u], inst.y[v])))
        .collect();
    BestMatching { pairs }
}

const UNSEEN: usize = usize::MAX;

/// Returns the partner of every left vertex.
fn hopcroft_karp(p: usize, q: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut left: Vec<Option<usize>> = vec![None; p];
    let mut right: Vec<Option<usize>> = vec![None; q];
    let mut dist = vec![UNSEEN; p];
    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for u in 0..p {
            if left[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = UNSEEN;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match right[v] {
                    None => found = true,
                    Some(w) if dist[w] == UNSEEN => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..p {
            if left[u].is_none() {
                augment(u, adj, &mut left, &mut right, &mut dist);
            }
        }
    }
    left
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    left: &mut [Option<usize>],
    right: &mut [Option<usize>],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        let ok = match right[v] {
            None => true,
            Some(w) => dist[w] == dist[u] + 1 && augment(w, adj, left, right, dist),
        };
        if ok {
            left[u] = Some(v);
            right[v] = Some(u);
            return true;
        }
    }
    dist[u] = UNSEEN;
    false
}

fn ladder_instance(m: &Multisegment, n: &Multisegment) -> Result<(MatchingInstance, usize)> {
    if !is_ladder(m) && !is_ladder(n) {
        return Err(Error::Precondition(format!("neither {m} nor {n} is a ladder")));
    }
    // Δ's from the second argument, Γ's from the first
    let inst = build_instance(n, m);
    let size = best_matching(&inst).size();
    Ok((inst, size))
}

/// `hom_Π(C(m), C(n)) = #Y - |I|`, valid when `m` or `n` is a ladder.
pub fn hom_via_matching(m: &Multisegment, n: &Multisegment) -> Result<usize> {
    let (inst, size) = ladder_instance(m, n)?;
    Ok(inst.y.len() - size)
}

/// `dim coker T_{C(m), C(n)} = #X - |I|`, valid when `m` or `n` is a ladder.
pub fn coker_via_matching(m: &Multisegment, n: &Multisegment) -> Result<usize> {
    let (inst, size) = ladder_instance(m, n)?;
    Ok(inst.x.len() - size)
}

fn list_pairs(f: &mut fmt::Formatter<'_>, name: &str, pairs: &[Pair]) -> fmt::Result {
    write!(f, "{name} = {{")?;
    for (k, (i, j)) in pairs.iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        write!(f, "({i},{j})")?;
    }
    writeln!(f, "}}")
}

impl fmt::Display for MatchingInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.m_segs.iter().enumerate() {
            writeln!(f, "Δ{} = {d}", k + 1)?;
        }
        for (k, g) in self.n_segs.iter().enumerate() {
            writeln!(f, "Γ{} = {g}", k + 1)?;
        }
        list_pairs(f, "X", &self.x)?;
        list_pairs(f, "Y", &self.y)?;
        for ((a, b), (c, d)) in &self.arrows {
            writeln!(f, "({a},{b}) ⇝ ({c},{d})")?;
        }
        let best = best_matching(self);
        writeln!(f, "|I| = {}", best.size())?;
        for ((a, b), (c, d)) in &best.pairs {
            writeln!(f, "f({a},{b}) = ({c},{d})")?;
        }
        Ok(())
    }
}
