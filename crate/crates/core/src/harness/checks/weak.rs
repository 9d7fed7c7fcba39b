use serde_json::{json, Value};

use super::{built, Ctx};
use crate::classify::{lift_potent_mod_nil, potent_nilpotent_decompose};
use crate::cli::expr::{parse_expr, RingExpr};
use crate::constructions::tensor::{combined_exponent_check, pure_tensor_coords};
use crate::constructions::{algebra_ring, AlgebraCarrier, AlgebraPresentation};
use crate::harness::InstanceRecord;
use crate::ring::{direct_product, prime_factors, Elem, FiniteRing, ProductCarrier};

struct Tensor {
    a: AlgebraPresentation,
    b: AlgebraPresentation,
    ra: FiniteRing,
    rb: FiniteRing,
    t: FiniteRing,
}

impl Tensor {
    fn pure(&self, u: Elem, v: Elem) -> Elem {
        let ca = self.ra.carrier::<AlgebraCarrier>().unwrap();
        let cb = self.rb.carrier::<AlgebraCarrier>().unwrap();
        let ct = self.t.carrier::<AlgebraCarrier>().unwrap();
        ct.encode(&pure_tensor_coords(
            &ca.coords(u),
            &cb.coords(v),
            self.a.modulus,
        ))
    }
}

fn tensor(ctx: &Ctx, text: &str) -> Result<Tensor, InstanceRecord> {
    let t = ctx.build(text)?;
    let fail = |e: String| InstanceRecord::fail(text, e, Value::Null);
    let Ok(RingExpr::Tensor(a, b)) = parse_expr(text) else {
        return Err(fail("not a TEN(...) expression".into()));
    };
    let a = a.build().map_err(|e| fail(e.to_string()))?;
    let b = b.build().map_err(|e| fail(e.to_string()))?;
    let ra = algebra_ring(&a, ctx.cap).map_err(|e| fail(e.to_string()))?;
    let rb = algebra_ring(&b, ctx.cap).map_err(|e| fail(e.to_string()))?;
    Ok(Tensor { a, b, ra, rb, t })
}

pub fn tensor_exponents(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let x = built!(tensor(ctx, text), out);
        if !x.ra.is_commutative() || !x.rb.is_commutative() {
            out.push(InstanceRecord::skipped(text, "a factor is not commutative"));
            continue;
        }
        let law = match combined_exponent_check(&x.a, &x.b, ctx.cap) {
            Ok(l) => l,
            Err(e) => {
                out.push(InstanceRecord::fail(text, e.to_string(), Value::Null));
                continue;
            }
        };
        let mut bad = None;
        'outer: for u in x.ra.elements() {
            let e = potent_nilpotent_decompose(&x.ra, u).b;
            for v in x.rb.elements() {
                let f = potent_nilpotent_decompose(&x.rb, v).b;
                let diff = x.t.sub(x.pure(u, v), x.pure(e, f));
                if !x.t.is_nilpotent(diff) {
                    bad = Some((u, v));
                    break 'outer;
                }
            }
        }
        let potent = x.t.elements().all(|w| x.t.period_of(w).is_potent());
        out.push(InstanceRecord::verdict(
            text,
            law.failures.is_empty() && bad.is_none(),
            "exponent law or potent-part difference fails",
            json!({
                "order": x.t.order(),
                "idempotents": x.t.element_data().idempotents.len(),
                "potent": potent,
                "pairs_checked": law.pairs_checked,
                "law_failures": law.failures,
                "difference_failure": bad,
            }),
        ));
    }
    out
}

pub fn tensor_nil_ideal(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let x = built!(tensor(ctx, text), out);
        let (na, nb) = (
            x.ra.element_data().nilpotents.clone(),
            x.rb.element_data().nilpotents.clone(),
        );
        if !x.ra.is_ideal(&na) || !x.rb.is_ideal(&nb) {
            out.push(InstanceRecord::skipped(
                text,
                "Nil of a factor is not an ideal",
            ));
            continue;
        }
        let mut gens = Vec::new();
        for u in x.ra.elements() {
            for v in x.rb.elements() {
                if na.contains(u) || nb.contains(v) {
                    gens.push(x.pure(u, v));
                }
            }
        }
        let ideal = x.t.ideal_closure(&gens);
        let nil = ideal.members().iter().all(|&w| x.t.is_nilpotent(w));
        let potent = match x.t.quotient(&ideal) {
            Ok(q) => q.ring.elements().all(|w| q.ring.period_of(w).is_potent()),
            Err(_) => false,
        };
        out.push(InstanceRecord::verdict(
            text,
            nil && potent,
            "generated ideal is not nil or the quotient is not potent",
            json!({"ideal_size": ideal.len(), "nil": nil, "quotient_potent": potent}),
        ));
    }
    out
}

pub fn crt_and_products(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let ch = r.characteristic().characteristic;
        let mut parts = Vec::new();
        let mut factors = Vec::new();
        for p in prime_factors(ch) {
            let mut q = 1;
            while ch % (q * p) == 0 {
                q *= p;
            }
            let ideal = r.ideal_closure(&[r.int(q as i64)]);
            let quot = if ideal.len() == 1 {
                None
            } else {
                match r.quotient(&ideal) {
                    Ok(x) => Some(x),
                    Err(e) => {
                        out.push(InstanceRecord::fail(text, e.to_string(), Value::Null));
                        parts.clear();
                        break;
                    }
                }
            };
            factors.push(json!({"prime_power": q, "order": quot.as_ref().map_or(r.order(), |x| x.ring.order())}));
            parts.push(quot);
        }
        if parts.is_empty() {
            continue;
        }
        let rings: Vec<FiniteRing> = parts
            .iter()
            .map(|q| q.as_ref().map_or(r.clone(), |x| x.ring.clone()))
            .collect();
        let prod = match direct_product(&rings) {
            Ok(p) => p,
            Err(e) => {
                out.push(InstanceRecord::skipped(text, e.to_string()));
                continue;
            }
        };
        let pc = prod.carrier::<ProductCarrier>().unwrap();
        let f: Vec<Elem> = r
            .elements()
            .map(|x| {
                let comps: Vec<Elem> = parts
                    .iter()
                    .map(|q| q.as_ref().map_or(x, |q| q.projection[x as usize]))
                    .collect();
                pc.encode(&comps)
            })
            .collect();
        let iso = r.check_isomorphism(&prod, &f);
        out.push(InstanceRecord::verdict(
            format!("{text} [crt]"),
            iso.is_ok(),
            iso.as_ref().err().map_or("", |e| e.as_str()),
            json!({"characteristic": ch, "factors": factors}),
        ));
    }
    for (i, a) in ctx.cfg.bases.iter().enumerate() {
        for b in &ctx.cfg.bases[i..] {
            let text = format!("{a} x {b}");
            let r = built!(ctx.build(&text), out);
            let pc = r.carrier::<ProductCarrier>().unwrap();
            let (ra, rb) = (&pc.factors()[0], &pc.factors()[1]);
            let mut bad = None;
            'outer: for x in ra.elements() {
                let dx = potent_nilpotent_decompose(ra, x);
                for y in rb.elements() {
                    let dy = potent_nilpotent_decompose(rb, y);
                    let e = pc.encode(&[dx.b, dy.b]);
                    let nil = pc.encode(&[dx.a, dy.a]);
                    let l = (dx.m_potency - 1) * (dy.m_potency - 1) + 1;
                    let idx = dx.nil_index.max(dy.nil_index);
                    if r.pow(e, l) != e
                        || r.nil_index(nil) != Some(idx)
                        || r.add(e, nil) != pc.encode(&[x, y])
                    {
                        bad = Some((x, y));
                        break 'outer;
                    }
                }
            }
            out.push(InstanceRecord::verdict(
                format!("{text} [product]"),
                bad.is_none(),
                "product exponent law fails",
                json!({"order": r.order(), "failure": bad}),
            ));
        }
    }
    out
}

pub fn lift_mod_nil(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let mut ideals = vec![("J", r.jacobson_radical().set)];
        let pi = r.characteristic().pi;
        if let [p] = pi[..] {
            let pr = r.ideal_closure(&[r.int(p as i64)]);
            if r.is_nilpotent(r.int(p as i64)) && pr.len() > 1 {
                ideals.push(("pR", pr));
            }
        }
        for (name, ideal) in ideals {
            let inst = format!("{text} [{name}]");
            if ideal.len() == 1 || ideal.len() == r.order() {
                out.push(InstanceRecord::skipped(inst, "ideal is trivial"));
                continue;
            }
            let q = match r.quotient(&ideal) {
                Ok(q) => q,
                Err(e) => {
                    out.push(InstanceRecord::fail(inst, e.to_string(), Value::Null));
                    continue;
                }
            };
            let mut bad = None;
            let mut max_coset = 0;
            for x in r.elements() {
                let xb = q.projection[x as usize];
                let e_bar = potent_nilpotent_decompose(&q.ring, xb).b;
                let rep = q.representatives[e_bar as usize];
                let ok = match lift_potent_mod_nil(&r, &ideal, rep) {
                    Ok(l) => {
                        max_coset = max_coset.max(l.coset_size);
                        l.f.is_some_and(|f| r.is_nilpotent(r.sub(x, f)))
                    }
                    Err(_) => false,
                };
                if !ok {
                    bad = Some(x);
                    break;
                }
            }
            out.push(InstanceRecord::verdict(
                inst,
                bad.is_none(),
                "no potent lift with nilpotent difference",
                json!({"ideal_size": ideal.len(), "failure": bad.map(|x| r.label(x))}),
            ));
        }
    }
    out
}
