use serde::Serialize;

use crate::ring::{Elem, FiniteRing, Subset, SubsetKind, TableCarrier};
use crate::Result;

/// Two-sided Peirce decomposition `R = eRe ⊕ eRf ⊕ fRe ⊕ fRf` for an
/// idempotent e and `f = 1 − e`, read as a Morita context
/// `[[A, M], [N, B]]`.
#[derive(Clone, Debug)]
pub struct Peirce {
    pub e: Elem,
    pub a: Subset,
    pub m: Subset,
    pub n: Subset,
    pub b: Subset,
}

/// Blocks of the ring with respect to `e`. Panics if `e` is not idempotent.
pub fn peirce(ring: &FiniteRing, e: Elem) -> Peirce {
    assert!(ring.is_idempotent(e), "Peirce blocks need an idempotent");
    let f = ring.sub(ring.one(), e);
    let block = |p: Elem, q: Elem| {
        let xs = ring.elements().map(|x| ring.mul(ring.mul(p, x), q));
        Subset::from_members(ring, xs, SubsetKind::Plain)
    };
    Peirce {
        e,
        a: block(e, e),
        m: block(e, f),
        n: block(f, e),
        b: block(f, f),
    }
}

/// A corner `eRe` as a ring in its own right, with identity e. Element i
/// of the result is `members[i]` of the corner subset.
pub fn corner_ring(ring: &FiniteRing, corner: &Subset, e: Elem) -> Result<FiniteRing> {
    let members = corner.members();
    let index = |x: Elem| members.binary_search(&x).expect("corner is closed") as Elem;
    let k = members.len();
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for &a in members {
        for &b in members {
            add.push(index(ring.add(a, b)));
            mul.push(index(ring.mul(a, b)));
        }
    }
    let carrier = TableCarrier::new(k, index(ring.zero()), index(e), add, mul)?;
    Ok(FiniteRing::new(
        carrier,
        format!("{}·{}·{}", ring.label(e), ring.expr(), ring.label(e)),
    ))
}

/// Additive span of a union of subsets.
pub fn subset_sum(ring: &FiniteRing, parts: &[&Subset]) -> Subset {
    ring.additive_span(parts.iter().flat_map(|s| s.members().iter().copied()))
}

/// `S^k` as additive spans of k-fold products.
pub fn subset_power(ring: &FiniteRing, s: &Subset, k: u32) -> Subset {
    let mut p = s.clone();
    for _ in 1..k {
        p = ring.subset_product(&p, s);
    }
    p
}

/// Least l with `S^l = 0`, or `None`.
pub fn subset_nilpotency_index(ring: &FiniteRing, s: &Subset) -> Option<u32> {
    let mut p = s.clone();
    let mut l = 1;
    while p.len() > 1 {
        let next = ring.subset_product(&p, s);
        if next == p || l > ring.order() as u32 {
            return None;
        }
        p = next;
        l += 1;
    }
    Some(l)
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockLawStep {
    pub l: u32,
    pub holds: bool,
    pub k_power_size: usize,
}

/// Trace ideals of a Peirce decomposition and the block law for powers of
/// `K = [[MN, M], [N, NM]]`.
#[derive(Clone, Debug, Serialize)]
pub struct TraceReport {
    pub mn_size: usize,
    pub nm_size: usize,
    pub mn_index: Option<u32>,
    pub nm_index: Option<u32>,
    pub k_size: usize,
    pub k_is_ideal: bool,
    pub k_index: Option<u32>,
    /// `K^{2l}` against `[[(MN)^l, (MN)^l M], [(NM)^l N, (NM)^l]]`.
    pub block_law: Vec<BlockLawStep>,
}

impl TraceReport {
    pub fn block_law_holds(&self) -> bool {
        self.block_law.iter().all(|s| s.holds)
    }
}

pub fn trace_report(ring: &FiniteRing, p: &Peirce) -> TraceReport {
    let mn = ring.subset_product(&p.m, &p.n);
    let nm = ring.subset_product(&p.n, &p.m);
    let k = subset_sum(ring, &[&mn, &p.m, &p.n, &nm]);
    let mn_index = subset_nilpotency_index(ring, &mn);
    let nm_index = subset_nilpotency_index(ring, &nm);
    let k_index = subset_nilpotency_index(ring, &k);
    let last = mn_index.max(nm_index).unwrap_or(1).max(1) + 1;
    let mut block_law = Vec::new();
    let mut k_pow = k.clone();
    let mut exp = 1;
    for l in 1..=last {
        while exp < 2 * l {
            k_pow = ring.subset_product(&k_pow, &k);
            exp += 1;
        }
        let mn_l = subset_power(ring, &mn, l);
        let nm_l = subset_power(ring, &nm, l);
        let predicted = subset_sum(
            ring,
            &[
                &mn_l,
                &ring.subset_product(&mn_l, &p.m),
                &ring.subset_product(&nm_l, &p.n),
                &nm_l,
            ],
        );
        block_law.push(BlockLawStep {
            l,
            holds: predicted == k_pow,
            k_power_size: k_pow.len(),
        });
    }
    TraceReport {
        mn_size: mn.len(),
        nm_size: nm.len(),
        mn_index,
        nm_index,
        k_size: k.len(),
        k_is_ideal: ring.is_ideal(&k),
        k_index,
        block_law,
    }
}

/// The block-diagonal part `S = eRe + fRf` and `K` as above.
pub fn s_and_k(ring: &FiniteRing, p: &Peirce) -> (Subset, Subset) {
    let mn = ring.subset_product(&p.m, &p.n);
    let nm = ring.subset_product(&p.n, &p.m);
    (
        subset_sum(ring, &[&p.a, &p.b]),
        subset_sum(ring, &[&mn, &p.m, &p.n, &nm]),
    )
}
