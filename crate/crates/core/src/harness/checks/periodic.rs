use std::collections::BTreeMap;

use serde_json::json;

use super::{built, labels, Ctx};
use crate::classify::{
    check_remark_2_2, potent_nilpotent_decompose, q_bound, uniform_period, weakly_periodic_witness,
    SplitMode,
};
use crate::classify::{potent_split_with, split_candidates};
use crate::constructions::MatrixCarrier;
use crate::harness::InstanceRecord;
use crate::RingError;

pub fn uniform_split(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let u = uniform_period(&r);
        let (n, k) = (u.index, u.period);
        let bad = r.elements().find(|&x| {
            let d = potent_nilpotent_decompose(&r, x);
            d.verify(&r).is_err()
                || r.pow(d.b, k + 1) != d.b
                || r.pow(d.a, n) != r.zero()
                || !d.annihilate
        });
        let data = json!({"period": u, "elements": r.order()});
        out.push(match bad {
            None => InstanceRecord::pass(text, data),
            Some(x) => InstanceRecord::fail(
                text,
                format!("split of {} fails", r.label(x)),
                json!({"period": u, "element": x, "split": potent_nilpotent_decompose(&r, x)}),
            ),
        });
    }
    out
}

pub fn remark(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let rep = check_remark_2_2(&r);
        out.push(InstanceRecord::verdict(
            text,
            rep.passed(),
            "uniform law has a consequence that fails",
            json!(rep),
        ));
    }
    out
}

pub fn quasi_duo(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let j = r.jacobson_radical().set;
        let j_nil = j.members().iter().all(|&x| r.is_nilpotent(x));
        let q = match r.quotient_by_radical() {
            Ok(q) => q.ring,
            Err(e) => {
                out.push(InstanceRecord::fail(text, e.to_string(), json!(null)));
                continue;
            }
        };
        let potent_mod_j = q.elements().all(|x| q.period_of(x).is_potent());
        let one = j_nil && potent_mod_j;
        let two = !r
            .elements()
            .any(|x| !j.contains(x) && j.contains(r.mul(x, x)));
        let three = r.element_data().nilpotents.is_subset_of(&j);
        out.push(InstanceRecord::verdict(
            text,
            one == two && two == three,
            "the three conditions disagree",
            json!({"nil_and_potent_mod_j": one, "quasi_duo": two, "ni": three}),
        ));
    }
    out
}

pub fn matrix_radical(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let Some(c) = r.carrier::<MatrixCarrier>() else {
            out.push(InstanceRecord::fail(text, "not a matrix ring", json!(null)));
            continue;
        };
        let base = c.base();
        let bj = base.jacobson_radical().set;
        if !base.element_data().nilpotents.is_subset_of(&bj) {
            out.push(InstanceRecord::skipped(
                text,
                "Nil of the base is not an ideal",
            ));
            continue;
        }
        let brute = r.jacobson_radical_brute().set;
        let over_j = r
            .elements()
            .filter(|&x| c.entries(x).iter().all(|&e| bj.contains(e)))
            .count();
        let n = c.size() as u32;
        let quotient = (base.order() / bj.len()).pow(n * n);
        let ok = brute.len() == over_j
            && brute
                .members()
                .iter()
                .all(|&x| c.entries(x).iter().all(|&e| bj.contains(e)))
            && r.order() / brute.len() == quotient;
        out.push(InstanceRecord::verdict(
            text,
            ok,
            "J(M_n(R)) differs from M_n(J(R))",
            json!({"radical_size": brute.len(), "matrices_over_j": over_j, "quotient_order": r.order() / brute.len()}),
        ));
    }
    out
}

pub fn sum_potents(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        for (mode, name) in [
            (SplitMode::Tripotent, "tripotent"),
            (SplitMode::Idempotent, "idempotent"),
        ] {
            let inst = format!("{text} [{name}]");
            let cands = match split_candidates(&r, mode) {
                Ok(c) => c,
                Err(RingError::Precondition(why)) => {
                    if mode == SplitMode::Tripotent {
                        out.push(InstanceRecord::fail(inst, why, json!(null)));
                    } else {
                        out.push(InstanceRecord::skipped(inst, why));
                    }
                    continue;
                }
                Err(e) => {
                    out.push(InstanceRecord::fail(inst, e.to_string(), json!(null)));
                    continue;
                }
            };
            let bad = r
                .elements()
                .find(|&a| match potent_split_with(&r, a, mode, &cands) {
                    None => true,
                    Some(s) => {
                        r.add(s.t, s.p) != a
                            || r.pow(s.t, s.t_exponent) != s.t
                            || r.pow(s.p, s.p_potency) != s.p
                    }
                });
            let data = json!({"matrices": r.order(), "candidates": cands.len()});
            out.push(match bad {
                None => InstanceRecord::pass(inst, data),
                Some(a) => InstanceRecord::fail(
                    inst,
                    format!("no split for {}", r.label(a)),
                    json!({"matrix": a, "label": r.label(a)}),
                ),
            });
        }
    }
    out
}

pub fn q_exponent(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        for &n in &ctx.cfg.n {
            let inst = format!("M({n}, {text})");
            match q_bound(&r, n, ctx.cap) {
                Ok(b) => {
                    let ok = b.violation.is_none();
                    let wit = b.violation;
                    out.push(InstanceRecord::verdict(
                        inst,
                        ok,
                        "A^q − A is not nilpotent",
                        json!({"q": b.q, "field_orders": b.field_orders, "matrices": b.matrices_checked, "violation": wit}),
                    ))
                }
                Err(e @ (RingError::CapExceeded { .. } | RingError::SizeOverflow(_))) => {
                    out.push(InstanceRecord::skipped(inst, e.to_string()))
                }
                Err(RingError::Precondition(why)) => out.push(InstanceRecord::skipped(inst, why)),
                Err(e) => out.push(InstanceRecord::fail(inst, e.to_string(), json!(null))),
            }
        }
    }
    out
}

pub fn weakly_periodic_probe(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let ws = weakly_periodic_witness(&r);
        let mut potency: BTreeMap<u64, usize> = BTreeMap::new();
        let mut nil: BTreeMap<u32, usize> = BTreeMap::new();
        let mut bad = None;
        for w in &ws {
            *potency.entry(w.potency).or_default() += 1;
            let idx = r.nil_index(w.q);
            *nil.entry(idx.unwrap_or(0)).or_default() += 1;
            if r.add(w.p, w.q) != w.x || r.pow(w.p, w.potency) != w.p || idx.is_none() {
                bad.get_or_insert(w.x);
            }
        }
        let data = json!({
            "matrices": r.order(),
            "potency_histogram": potency,
            "nil_index_histogram": nil,
        });
        out.push(match bad {
            None => InstanceRecord::pass(text, data),
            Some(x) => InstanceRecord::fail(text, "witness does not re-verify", labels(&r, &[x])),
        });
    }
    out
}
