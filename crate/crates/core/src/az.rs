//! The Aubert-Zelevinsky involution `m -> m*` via the Mœglin-Waldspurger
//! chain algorithm.

use crate::multiseg::{Multisegment, Segment};

/// `m*`. Each round starts at a segment ending at the current maximal `e`
/// (maximal `a` among them) and extends downward through segments whose end
/// drops by exactly one and whose start drops strictly, choosing maximal `a`
/// at every step. A chain of length `r` emits `[e-r+1, e]` and every member
/// loses its right endpoint.
pub fn az_involution(m: &Multisegment) -> Multisegment {
    let mut rest: Vec<(i32, i32)> = m.iter().map(|s| (s.a(), s.b())).collect();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let e = rest.iter().map(|&(_, b)| b).max().unwrap();
        let mut chain = Vec::new();
        let mut cur = pick(&rest, &chain, |_, b| b == e);
        while let Some(k) = cur {
            chain.push(k);
            let (ca, cb) = rest[k];
            cur = pick(&rest, &chain, |a, b| b == cb - 1 && a < ca);
        }
        let r = chain.len() as i32;
        out.push(Segment::new(e - r + 1, e).expect("chain of positive length"));
        for &k in &chain {
            rest[k].1 -= 1;
        }
        rest.retain(|&(a, b)| a <= b);
    }
    Multisegment::new(out)
}

fn pick(rest: &[(i32, i32)], used: &[usize], ok: impl Fn(i32, i32) -> bool) -> Option<usize> {
    rest.iter()
        .enumerate()
        .filter(|(k, &(a, b))| !used.contains(k) && ok(a, b))
        .max_by_key(|(_, &(a, _))| a)
        .map(|(k, _)| k)
}

/// `true` iff `m** = m`.
pub fn az_is_involution_check(m: &Multisegment) -> bool {
    az_involution(&az_involution(m)) == *m
}

/// The closed form for a Speh `m = [a_1,b_1] + ... + [a_k,b_k]` (arranged):
/// `m* = [b_k, b_1] + [b_k - 1, b_1 - 1] + ... + [a_k, a_1]`.
pub fn speh_dual(m: &Multisegment) -> Option<Multisegment> {
    if !crate::multiseg::is_speh(m) {
        return None;
    }
    let segs = m.segments();
    let Some(first) = segs.first() else {
        return Some(Multisegment::empty());
    };
    let last = segs.last().unwrap();
    let len = first.len() as i32;
    Some((0..len).map(|t| Segment::new(last.b() - t, first.b() - t).unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    #[test]
    fn single_segment() {
        assert_eq!(az_involution(&ms("[0,2]")), ms("[0,0]+[1,1]+[2,2]"));
        assert_eq!(az_involution(&ms("[0,0]+[1,1]+[2,2]")), ms("[0,2]"));
        assert_eq!(az_involution(&ms("[3,3]")), ms("[3,3]"));
    }

    #[test]
    fn speh_examples() {
        assert_eq!(az_involution(&ms("[2,3]+[1,2]")), ms("[2,3]+[1,2]"));
        let m = ms("[3,6]+[2,5]+[1,4]");
        assert_eq!(az_involution(&m), speh_dual(&m).unwrap());
        assert_eq!(speh_dual(&m).unwrap(), ms("[4,6]+[3,5]+[2,4]+[1,3]"));
    }

    #[test]
    fn chain_needs_strict_drop_in_start() {
        // A weak drop would pair [0,1] with [0,0] and return the input.
        let m = ms("[0,1]+[0,0]");
        assert_eq!(az_involution(&m), ms("[1,1]+[0,0]+[0,0]"));
        assert!(az_is_involution_check(&m));
    }

    #[test]
    fn leclerc_involutive() {
        let m = ms("[4,5]+[2,4]+[3,3]+[1,2]");
        assert!(az_is_involution_check(&m));
        assert_eq!(az_involution(&m).grdim(), m.grdim());
        assert!(az_is_involution_check(&Multisegment::empty()));
    }
}
