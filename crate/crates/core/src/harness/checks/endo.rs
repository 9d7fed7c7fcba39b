use serde_json::json;

use super::{built, Ctx};
use crate::classify::strongly_m_nil_clean;
use crate::cli::expr::parse_abelian;
use crate::constructions::endo::check_endo_against_oracle;
use crate::constructions::{abelian_p_groups, AbelianGroupSpec};
use crate::harness::InstanceRecord;
use crate::ring::FiniteRing;

/// Endomorphism rings above this order are not compared with the oracle.
const ORACLE_LIMIT: usize = 1024;

fn groups(ctx: &Ctx, out: &mut Vec<InstanceRecord>) -> Vec<AbelianGroupSpec> {
    let mut specs = Vec::new();
    for &(p, max) in &ctx.cfg.p_groups {
        specs.extend(abelian_p_groups(p, max));
    }
    for text in &ctx.cfg.groups {
        match parse_abelian(text) {
            Ok(s) => specs.push(s),
            Err(e) => out.push(InstanceRecord::fail(text, e.to_string(), json!(null))),
        }
    }
    specs
}

/// `(p, max n_j)` for every prime of the group.
fn max_multiplicities(spec: &AbelianGroupSpec) -> Vec<(u64, usize)> {
    spec.prime_components()
        .into_iter()
        .map(|(p, comps)| (p, comps.iter().map(|&(_, n)| n).max().unwrap_or(0)))
        .collect()
}

/// `(p^i − 1) | (m − 1)` for every prime p and `i ≤ max n_j`.
pub fn divisibility_criterion(spec: &AbelianGroupSpec, m: u64) -> bool {
    max_multiplicities(spec).iter().all(|&(p, top)| {
        (1..=top as u32).all(|i| {
            p.checked_pow(i)
                .is_some_and(|q| (m - 1).is_multiple_of(q - 1))
        })
    })
}

/// Every `n_j = 1` and `(p − 1) | (m − 1)`.
pub fn distinct_criterion(spec: &AbelianGroupSpec, m: u64) -> bool {
    max_multiplicities(spec)
        .iter()
        .all(|&(p, top)| top == 1 && (m - 1).is_multiple_of(p - 1))
}

fn oracle(r: &FiniteRing, m: u64) -> (bool, Option<String>) {
    let rep = strongly_m_nil_clean(r, m, false);
    (rep.holds, rep.counterwitness.map(|x| r.label(x)))
}

pub fn semisimple_part(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for spec in groups(ctx, &mut out) {
        let text = format!("END({spec})");
        let r = built!(ctx.build(&text), out);
        let q = match r.quotient_by_radical() {
            Ok(q) => q.ring,
            Err(e) => {
                out.push(InstanceRecord::fail(text, e.to_string(), json!(null)));
                continue;
            }
        };
        let comps = spec.prime_components();
        let predicted: u128 = comps
            .iter()
            .flat_map(|(&p, cs)| {
                cs.iter()
                    .map(move |&(_, n)| (p as u128).pow((n * n) as u32))
            })
            .product();
        let top = comps
            .values()
            .flat_map(|cs| cs.iter().map(|&(_, n)| n))
            .max()
            .unwrap_or(1);
        let in_q = q
            .element_data()
            .nil_index
            .iter()
            .copied()
            .max()
            .unwrap_or(1);
        let single_prime = comps.len() == 1;
        let j_nilpotent = r.jacobson_radical().nilpotency_index > 0;
        let oracle = (r.order() <= ORACLE_LIMIT).then(|| check_endo_against_oracle(&r));
        let ok = q.order() as u128 == predicted
            && (!single_prime || in_q as usize == top)
            && j_nilpotent
            && !matches!(oracle, Some(Err(_)));
        out.push(InstanceRecord::verdict(
            text,
            ok,
            "E/J does not match the matrix prediction",
            json!({
                "order": r.order(),
                "quotient_order": q.order(),
                "predicted": predicted,
                "in_quotient": in_q,
                "max_n": top,
                "oracle": oracle.map(|o| o.err().unwrap_or_else(|| "agrees".into())),
            }),
        ));
    }
    out
}

pub fn divisibility(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    let ms = match ctx.m_range(2..=10) {
        Ok(ms) => ms,
        Err(rec) => return vec![rec],
    };
    for spec in groups(ctx, &mut out) {
        let text = format!("END({spec})");
        let r = built!(ctx.build(&text), out);
        for m in ms.clone() {
            let crit = divisibility_criterion(&spec, m);
            let (holds, wit) = oracle(&r, m);
            let inst = format!("{text}, m={m}");
            let data = json!({"criterion": crit, "oracle": holds, "witness": wit});
            out.push(if crit == holds {
                InstanceRecord::pass(inst, data)
            } else {
                InstanceRecord::finding(inst, "criterion and oracle disagree", data)
            });
        }
    }
    out
}

pub fn distinct_exponents(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    let ms = match ctx.m_range(2..=10) {
        Ok(ms) => ms,
        Err(rec) => return vec![rec],
    };
    let admissible: Vec<u64> = ms.filter(|m| m % 3 != 1 && m % 8 != 1).collect();
    for spec in groups(ctx, &mut out) {
        let text = format!("END({spec})");
        let r = built!(ctx.build(&text), out);
        for &m in &admissible {
            let crit = distinct_criterion(&spec, m);
            let (holds, wit) = oracle(&r, m);
            let inst = format!("{text}, m={m}");
            let data = json!({"criterion": crit, "oracle": holds, "witness": wit});
            out.push(if crit == holds {
                InstanceRecord::pass(inst, data)
            } else {
                InstanceRecord::finding(inst, "criterion and oracle disagree", data)
            });
        }
    }
    out
}

/// Invariants are exactly `2, 4, …, 2^t` in some order.
fn consecutive_two_powers(spec: &AbelianGroupSpec) -> bool {
    let mut inv = spec.invariants.clone();
    inv.sort_unstable();
    inv.iter().enumerate().all(|(j, &d)| d == 1 << (j + 1))
}

pub fn even_m(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    let ms = match ctx.m_range(2..=10) {
        Ok(ms) => ms,
        Err(rec) => return vec![rec],
    };
    let admissible: Vec<u64> = ms.filter(|m| m % 2 == 0 && m % 3 != 1).collect();
    for spec in groups(ctx, &mut out) {
        let text = format!("END({spec})");
        let r = built!(ctx.build(&text), out);
        let comps = spec.prime_components();
        let two_group = comps.len() == 1 && comps.contains_key(&2);
        let distinct = two_group && comps[&2].iter().all(|&(_, n)| n == 1);
        let literal = consecutive_two_powers(&spec);
        let cyclic = two_group && spec.invariants.len() == 1;
        for &m in &admissible {
            let (holds, wit) = oracle(&r, m);
            let inst = format!("{text}, m={m}");
            let mut data = json!({
                "oracle": holds,
                "distinct_exponents": distinct,
                "consecutive_exponents": literal,
                "witness": wit,
            });
            if m == 2 {
                data["cyclic"] = json!(cyclic);
            }
            let mut off = Vec::new();
            if literal != holds {
                off.push("consecutive-exponent reading");
            }
            if m == 2 && cyclic != holds {
                off.push("cyclic 2-group reading");
            }
            out.push(if distinct != holds {
                InstanceRecord::fail(
                    inst,
                    "distinct-exponent reading disagrees with the oracle",
                    data,
                )
            } else if off.is_empty() {
                InstanceRecord::pass(inst, data)
            } else {
                InstanceRecord::finding(
                    inst,
                    format!("oracle disagrees with the {}", off.join(" and the ")),
                    data,
                )
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(inv: &[u64]) -> AbelianGroupSpec {
        AbelianGroupSpec::new(inv.to_vec()).unwrap()
    }

    #[test]
    fn criteria() {
        assert!(!divisibility_criterion(&spec(&[2, 2]), 2));
        assert!(divisibility_criterion(&spec(&[2, 2]), 4));
        assert!(divisibility_criterion(&spec(&[3]), 3));
        assert!(!divisibility_criterion(&spec(&[3]), 2));
        assert!(distinct_criterion(&spec(&[4, 2]), 2));
        assert!(!distinct_criterion(&spec(&[2, 2]), 2));
        assert!(consecutive_two_powers(&spec(&[4, 2])));
        assert!(!consecutive_two_powers(&spec(&[4])));
    }
}
