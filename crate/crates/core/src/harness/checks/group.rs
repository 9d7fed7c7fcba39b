use serde_json::{json, Value};

use super::{built, max_nil_index, Ctx};
use crate::classify::{potent_nilpotent_decompose, uniform_period};
use crate::constructions::{augmentation_data, group_ring, GroupRingCarrier};
use crate::harness::InstanceRecord;
use crate::ring::{Elem, FiniteRing, Subset, SubsetKind};

fn carrier(r: &FiniteRing) -> &GroupRingCarrier {
    r.carrier::<GroupRingCarrier>()
        .expect("GR(...) builds a group ring")
}

/// Elements of RG whose coefficients all lie in `coef` (a subset of R).
fn with_coefficients(r: &FiniteRing, coef: &Subset) -> Subset {
    let c = carrier(r);
    Subset::from_members(
        r,
        r.elements()
            .filter(|&x| c.coefficients(x).iter().all(|&a| coef.contains(a))),
        SubsetKind::Plain,
    )
}

fn nil_ideal_data(r: &FiniteRing, s: &Subset) -> (bool, bool, Option<u32>) {
    let ideal = r.is_ideal(s);
    let index = max_nil_index(r, s);
    (ideal, index.is_some(), index)
}

pub fn nil_coefficients(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for (_, _, text) in ctx.group_rings() {
        let r = built!(ctx.build(&text), out);
        let base = carrier(&r).base().clone();
        let nil = base.element_data().nilpotents.clone();
        if !base.is_ideal(&nil) {
            out.push(InstanceRecord::skipped(
                text,
                "Nil of the base is not an ideal",
            ));
            continue;
        }
        let s = with_coefficients(&r, &nil);
        let (ideal, is_nil, index) = nil_ideal_data(&r, &s);
        out.push(InstanceRecord::verdict(
            text,
            ideal && is_nil,
            "Nil(R)G is not a nil ideal",
            json!({"size": s.len(), "ideal": ideal, "nil": is_nil, "max_index": index}),
        ));
    }
    out
}

pub fn potency_criterion(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for (_, _, text) in ctx.group_rings() {
        let r = built!(ctx.build(&text), out);
        let c = carrier(&r);
        let base = c.base();
        let g = c.group();
        let base_potent = base.elements().all(|x| base.period_of(x).is_potent());
        let pi = base.characteristic().pi;
        let coprime = pi.iter().all(|&p| !(g.order as u64).is_multiple_of(p));
        let criterion = base_potent && g.abelian && coprime;
        let witness = r.elements().rev().find(|&x| !r.period_of(x).is_potent());
        let oracle = witness.is_none();
        let data = json!({
            "criterion": criterion,
            "oracle": oracle,
            "base_potent": base_potent,
            "abelian": g.abelian,
            "coprime": coprime,
            "witness": witness.map(|x| r.label(x)),
        });
        out.push(InstanceRecord::verdict(
            text,
            criterion == oracle,
            "criterion and potency scan disagree",
            data,
        ));
    }
    out
}

pub fn radical_coefficients(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for (_, _, text) in ctx.group_rings() {
        let r = built!(ctx.build(&text), out);
        let c = carrier(&r);
        let base = c.base();
        let j = base.jacobson_radical().set;
        let jg = with_coefficients(&r, &j);
        let (ideal, is_nil, index) = nil_ideal_data(&r, &jg);
        let q = match base.quotient_by_radical() {
            Ok(q) => q,
            Err(e) => {
                out.push(InstanceRecord::fail(text, e.to_string(), Value::Null));
                continue;
            }
        };
        let target = match group_ring(&q.ring, c.group(), ctx.cap) {
            Ok(t) => t,
            Err(e) => {
                out.push(InstanceRecord::skipped(text, e.to_string()));
                continue;
            }
        };
        let tc = carrier(&target);
        let f: Vec<Elem> = r
            .elements()
            .map(|x| {
                let coefs: Vec<Elem> = c
                    .coefficients(x)
                    .iter()
                    .map(|&a| q.projection[a as usize])
                    .collect();
                tc.encode(&coefs)
            })
            .collect();
        let hom = r.check_homomorphism(&target, &f);
        let kernel = Subset::from_members(
            &r,
            r.elements().filter(|&x| f[x as usize] == target.zero()),
            SubsetKind::Plain,
        );
        let onto = r.order() / kernel.len() == target.order();
        let ok = ideal && is_nil && hom.is_ok() && kernel == jg && onto;
        out.push(InstanceRecord::verdict(
            text,
            ok,
            hom.err()
                .as_deref()
                .unwrap_or("J(R)G is not the kernel of a nil quotient"),
            json!({
                "jg_size": jg.len(),
                "nil": is_nil,
                "max_index": index,
                "quotient": target.expr(),
                "quotient_order": target.order(),
            }),
        ));
    }
    out
}

/// Invariants compared between the two sides of the S3 split.
fn fingerprint(r: &FiniteRing) -> Value {
    let d = r.element_data();
    json!({
        "order": r.order(),
        "radical": r.jacobson_radical().set.len(),
        "units": d.units.len(),
        "idempotents": d.idempotents.len(),
        "nilpotents": d.nilpotents.len(),
        "center": r.center().len(),
        "period": uniform_period(r),
    })
}

pub fn s3_split(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for base in &ctx.cfg.bases {
        let lhs_text = format!("GR({base}, S3)");
        let rhs_text = format!("GR({base}, C(2)) x M(2, {base})");
        let inst = format!("{lhs_text} vs {rhs_text}");
        let lhs = built!(ctx.build(&lhs_text), out);
        if lhs.characteristic().characteristic != 2 {
            out.push(InstanceRecord::skipped(inst, "characteristic is not 2"));
            continue;
        }
        let rhs = built!(ctx.build(&rhs_text), out);
        let (a, b) = (fingerprint(&lhs), fingerprint(&rhs));
        out.push(InstanceRecord::verdict(
            inst,
            a == b,
            "invariants differ",
            json!({"lhs": a, "rhs": b}),
        ));
    }
    out
}

pub fn central_torsion(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for (_, _, text) in ctx.group_rings() {
        let r = built!(ctx.build(&text), out);
        let c = carrier(&r);
        let ch = c.base().characteristic();
        let p = ch.characteristic;
        if ch.pi != [p] {
            out.push(InstanceRecord::skipped(text, "characteristic is not prime"));
            continue;
        }
        let g = c.group();
        let n = g.order as u32;
        let central: Vec<u32> = (0..n)
            .filter(|&a| (0..n).all(|b| g.op(a, b) == g.op(b, a)))
            .collect();
        let mut rows = Vec::new();
        let mut bad = None;
        for &h in &central {
            let x = c.monomial(c.base().one(), h);
            let least = (2..=g.order as u64 + 1)
                .find(|&e| r.is_nilpotent(r.sub(r.pow(x, e), x)))
                .expect("g^(|G|+1) = g");
            let k = r.nil_index(r.sub(r.pow(x, least), x)).unwrap();
            let mut pl = 1u64;
            while pl < k as u64 {
                pl *= p;
            }
            let ok = r.pow(x, (least - 1) * pl) == r.one();
            if !ok {
                bad.get_or_insert(h);
            }
            rows.push(json!({"g": g.labels[h as usize], "n": least, "k": k, "p_l": pl}));
        }
        out.push(InstanceRecord::verdict(
            text,
            bad.is_none(),
            "g^((n−1)p^l) ≠ 1",
            json!({"central": rows}),
        ));
    }
    out
}

/// `Some(p)` when G is a p-group and p·1 is nilpotent in R.
fn augmentation_hypothesis(r: &FiniteRing) -> Result<u64, &'static str> {
    let c = carrier(r);
    let p = c.group().p_group_prime().ok_or("G is not a p-group")?;
    let base = c.base();
    if !base.is_nilpotent(base.int(p as i64)) {
        return Err("p is not nilpotent in R");
    }
    Ok(p)
}

pub fn augmentation_lift(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for (_, _, text) in ctx.group_rings() {
        let r = built!(ctx.build(&text), out);
        if let Err(why) = augmentation_hypothesis(&r) {
            out.push(InstanceRecord::skipped(text, why));
            continue;
        }
        let c = carrier(&r);
        let base = c.base();
        let aug = augmentation_data(&r).unwrap();
        let eps: Vec<Elem> = r.elements().map(|x| c.augmentation(x)).collect();
        let hom = r.check_homomorphism(base, &eps);
        let kernel_ok = r.order() / aug.delta.len() == base.order();
        let bad_split = r.elements().find(|&x| {
            let d = potent_nilpotent_decompose(base, eps[x as usize]);
            let f = c.monomial(d.b, c.group().identity);
            r.pow(f, d.m_potency) != f || !r.is_nilpotent(r.sub(x, f))
        });
        let ok = aug.nil && hom.is_ok() && kernel_ok && bad_split.is_none();
        out.push(InstanceRecord::verdict(
            text,
            ok,
            hom.err().as_deref().unwrap_or("augmentation lift fails"),
            json!({
                "delta_size": aug.delta.len(),
                "delta_nil": aug.nil,
                "element_index": aug.element_index,
                "split_failure": bad_split.map(|x| r.label(x)),
            }),
        ));
    }
    out
}

pub fn augmentation_nilpotent(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for (_, _, text) in ctx.group_rings() {
        let r = built!(ctx.build(&text), out);
        if let Err(why) = augmentation_hypothesis(&r) {
            out.push(InstanceRecord::skipped(text, why));
            continue;
        }
        let c = carrier(&r);
        let aug = augmentation_data(&r).unwrap();
        let eps: Vec<Elem> = r.elements().map(|x| c.augmentation(x)).collect();
        let hom = r.check_homomorphism(c.base(), &eps).is_ok();
        let ok = hom
            && match (aug.ideal_index, aug.element_index) {
                (Some(i), Some(e)) => e <= i,
                _ => false,
            };
        out.push(InstanceRecord::verdict(
            text,
            ok,
            "Δ is not a nilpotent ideal",
            json!({
                "delta_size": aug.delta.len(),
                "ideal_index": aug.ideal_index,
                "element_index": aug.element_index,
            }),
        ));
    }
    out
}
