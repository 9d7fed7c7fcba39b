use serde_json::{json, Value};

use super::{built, radical_paths_agree, Ctx};
use crate::classify::{nil_clean_split, potent_nilpotent_decompose};
use crate::constructions::peirce::{corner_ring, s_and_k};
use crate::constructions::{peirce, trace_report, MatrixCarrier, Peirce, TraceReport, Twist};
use crate::harness::InstanceRecord;
use crate::ring::{Elem, FiniteRing, Subset, SubsetKind};

struct Context {
    peirce: Peirce,
    trace: TraceReport,
}

fn context(r: &FiniteRing) -> Result<Context, String> {
    let e = r
        .corner_idempotent()
        .ok_or("construction has no corner idempotent")?;
    let p = peirce(r, e);
    let trace = trace_report(r, &p);
    Ok(Context { peirce: p, trace })
}

fn nilpotent_traces(t: &TraceReport) -> bool {
    t.mn_index.is_some() && t.nm_index.is_some()
}

/// `J(R)` against `[[J(A), M], [N, J(B)]]` and the order of `R/J`.
fn radical_blocks(r: &FiniteRing, c: &Context) -> Result<(bool, Value), String> {
    let p = &c.peirce;
    let e = p.e;
    let f = r.sub(r.one(), e);
    let a = corner_ring(r, &p.a, e).map_err(|x| x.to_string())?;
    let b = corner_ring(r, &p.b, f).map_err(|x| x.to_string())?;
    let (ja, jb) = (a.jacobson_radical().set, b.jacobson_radical().set);
    let in_j = |corner: &Subset, j: &Subset, x: Elem| {
        j.contains(corner.members().binary_search(&x).unwrap() as Elem)
    };
    let predicted = Subset::from_members(
        r,
        r.elements().filter(|&x| {
            in_j(&p.a, &ja, r.mul(r.mul(e, x), e)) && in_j(&p.b, &jb, r.mul(r.mul(f, x), f))
        }),
        SubsetKind::Plain,
    );
    let brute = r.jacobson_radical_brute().set.with_kind(SubsetKind::Plain);
    let quotient = r.order() / brute.len();
    let product = (a.order() / ja.len()) * (b.order() / jb.len());
    let (paths, _) = radical_paths_agree(r);
    let ok = predicted == brute && quotient == product && paths;
    Ok((
        ok,
        json!({
            "order": r.order(),
            "radical_size": brute.len(),
            "predicted_size": predicted.len(),
            "structural_agrees": paths,
            "quotient_order": quotient,
            "corner_quotients": [a.order() / ja.len(), b.order() / jb.len()],
        }),
    ))
}

pub fn morita_radical(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let c = match context(&r) {
            Ok(c) => c,
            Err(e) => {
                out.push(InstanceRecord::fail(text, e, Value::Null));
                continue;
            }
        };
        if !nilpotent_traces(&c.trace) {
            out.push(InstanceRecord::skipped(text, "MN or NM is not nilpotent"));
            continue;
        }
        out.push(match radical_blocks(&r, &c) {
            Ok((ok, mut data)) => {
                let law = c.trace.block_law_holds() && c.trace.k_is_ideal;
                data["block_law"] = json!(law);
                InstanceRecord::verdict(text, ok && law, "radical blocks differ", data)
            }
            Err(e) => InstanceRecord::fail(text, e, Value::Null),
        });
    }
    out
}

pub fn block_law(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let c = match context(&r) {
            Ok(c) => c,
            Err(e) => {
                out.push(InstanceRecord::fail(text, e, Value::Null));
                continue;
            }
        };
        let t = &c.trace;
        if !nilpotent_traces(t) {
            out.push(InstanceRecord::skipped(text, "MN or NM is not nilpotent"));
            continue;
        }
        let ok = t.k_is_ideal && t.k_index.is_some() && t.block_law_holds();
        out.push(InstanceRecord::verdict(
            text,
            ok,
            "K is not a nilpotent ideal with the block law",
            json!({"order": r.order(), "trace": t}),
        ));
    }
    out
}

pub fn triangular(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let Some(c) = r.carrier::<MatrixCarrier>() else {
            out.push(InstanceRecord::fail(text, "not a matrix ring", Value::Null));
            continue;
        };
        let base = c.base();
        let (paths, mut data) = radical_paths_agree(&r);
        let j = r.jacobson_radical_brute().set.len();
        let bj = base.jacobson_radical().set.len();
        let want = (base.order() / bj).pow(c.size() as u32);
        data["quotient_order"] = json!(r.order() / j);
        out.push(InstanceRecord::verdict(
            text,
            paths && r.order() / j == want,
            "radical of the triangular ring differs",
            data,
        ));
    }
    out
}

/// `{s·r : r ∈ R}`.
fn multiples(base: &FiniteRing, s: Elem) -> Subset {
    Subset::from_members(
        base,
        base.elements().map(|x| base.mul(s, x)),
        SubsetKind::Plain,
    )
}

/// The set of (i, j) entries of the members of `set`, or `None` when some
/// member has a nonzero entry elsewhere.
fn entry_set(
    c: &MatrixCarrier,
    set: &Subset,
    keep: impl Fn(usize, usize) -> bool,
) -> Option<Vec<Vec<Elem>>> {
    let n = c.size();
    let zero = c.base().zero();
    let mut out = Vec::new();
    for &x in set.members() {
        let e = c.entries(x);
        if (0..n * n).any(|i| !keep(i / n, i % n) && e[i] != zero) {
            return None;
        }
        out.push(e);
    }
    Some(out)
}

pub fn formal_k(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let Some(mc) = r.carrier::<MatrixCarrier>() else {
            out.push(InstanceRecord::fail(text, "not a K ring", Value::Null));
            continue;
        };
        let Twist::K { s } = mc.twist() else {
            out.push(InstanceRecord::fail(text, "not a K ring", Value::Null));
            continue;
        };
        let base = mc.base();
        let sr = multiples(base, s);
        let c = match context(&r) {
            Ok(c) => c,
            Err(e) => {
                out.push(InstanceRecord::fail(text, e, Value::Null));
                continue;
            }
        };
        let mn = r.subset_product(&c.peirce.m, &c.peirce.n);
        let nm = r.subset_product(&c.peirce.n, &c.peirce.m);
        let corner = |set: &Subset, i: usize| {
            entry_set(mc, set, |a, b| a == i && b == i).map(|es| {
                Subset::from_members(base, es.iter().map(|e| e[i * 2 + i]), SubsetKind::Plain)
            })
        };
        let (mn_s, nm_s) = (corner(&mn, 0), corner(&nm, 1));
        let traces = mn_s.as_ref() == Some(&sr) && nm_s.as_ref() == Some(&sr);
        let bj = base.jacobson_radical().set;
        let mn_in_j = sr.is_subset_of(&bj);
        let s_in_j = bj.contains(s);
        let mut data = json!({
            "s": base.label(s),
            "s_r_size": sr.len(),
            "mn_is_s_r": mn_s.as_ref() == Some(&sr),
            "nm_is_s_r": nm_s.as_ref() == Some(&sr),
            "mn_in_j": mn_in_j,
            "s_in_j": s_in_j,
        });
        let mut ok = traces && mn_in_j == s_in_j;
        let mut note = "trace ideals differ from sR";
        if base.is_nilpotent(s) {
            match radical_blocks(&r, &c) {
                Ok((blocks, d)) => {
                    data["radical"] = d;
                    ok &= blocks;
                    if !blocks {
                        note = "radical blocks differ";
                    }
                }
                Err(e) => {
                    out.push(InstanceRecord::fail(text, e, Value::Null));
                    continue;
                }
            }
        } else {
            data["radical"] = json!("s is not nilpotent; identities only");
        }
        out.push(InstanceRecord::verdict(text, ok, note, data));
    }
    out
}

/// Every column vector of block M against every row vector of block N in
/// `M_n(R; s)`.
fn column_row_products(r: &FiniteRing, c: &MatrixCarrier, s: Elem) -> Result<usize, String> {
    let n = c.size();
    let base = c.base();
    let k = n - 1;
    let s2 = base.mul(s, s);
    let vectors = crate::ring::Radix::uniform(base.order() as u64, k);
    let total = vectors.total().unwrap() as u64;
    let mut entries = vec![base.zero(); n * n];
    let mut pairs = 0;
    for xv in 0..total {
        let x = vectors.decode(xv);
        entries.fill(base.zero());
        for i in 0..k {
            entries[i * n + k] = x[i];
        }
        let xm = c.encode(&entries).unwrap();
        for yv in 0..total {
            let y = vectors.decode(yv);
            entries.fill(base.zero());
            for j in 0..k {
                entries[k * n + j] = y[j];
            }
            let ym = c.encode(&entries).unwrap();
            let xy = c.entries(r.mul(xm, ym));
            for i in 0..n {
                for j in 0..n {
                    let want = if i < k && j < k {
                        let w = if i == j { s2 } else { s };
                        base.mul(w, base.mul(x[i], y[j]))
                    } else {
                        base.zero()
                    };
                    if xy[i * n + j] != want {
                        return Err(format!("x·y entry ({i}, {j}) for x = {x:?}, y = {y:?}"));
                    }
                }
            }
            let yx = c.entries(r.mul(ym, xm));
            let want = base.mul(s2, base.sum((0..k).map(|t| base.mul(y[t], x[t]))));
            if yx[k * n + k] != want
                || yx
                    .iter()
                    .enumerate()
                    .any(|(i, &v)| i != k * n + k && v != base.zero())
            {
                return Err(format!("y·x for x = {x:?}, y = {y:?}"));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

pub fn formal_ms(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for base in &ctx.cfg.bases {
        for &s in &ctx.cfg.s {
            let ms_text = format!("MS(2, {base}, s={s})");
            let k_text = format!("K({base}, s={})", s * s);
            let inst = format!("{ms_text} = {k_text}");
            let ms = built!(ctx.build(&ms_text), out);
            let k = built!(ctx.build(&k_text), out);
            let (cm, ck) = (
                ms.carrier::<MatrixCarrier>().unwrap(),
                k.carrier::<MatrixCarrier>().unwrap(),
            );
            let f: Vec<Elem> = ms
                .elements()
                .map(|x| ck.encode(&cm.entries(x)).unwrap_or(Elem::MAX))
                .collect();
            let iso = ms.check_isomorphism(&k, &f);
            out.push(InstanceRecord::verdict(
                inst,
                iso.is_ok(),
                iso.as_ref().err().map_or("", |e| e.as_str()),
                json!({"order": ms.order()}),
            ));
        }
    }
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let c = r.carrier::<MatrixCarrier>();
        let Some((c, Twist::Ms { s })) = c.map(|c| (c, c.twist())) else {
            out.push(InstanceRecord::fail(text, "not an MS ring", Value::Null));
            continue;
        };
        let base = c.base();
        let n = c.size();
        let k = n - 1;
        let pairs = match column_row_products(&r, c, s) {
            Ok(p) => p,
            Err(e) => {
                out.push(InstanceRecord::fail(
                    text,
                    format!("product formula fails: {e}"),
                    Value::Null,
                ));
                continue;
            }
        };
        let ctx_r = match context(&r) {
            Ok(x) => x,
            Err(e) => {
                out.push(InstanceRecord::fail(text, e, Value::Null));
                continue;
            }
        };
        let sr = multiples(base, s);
        let s2r = multiples(base, base.mul(s, s));
        let mn = r.subset_product(&ctx_r.peirce.m, &ctx_r.peirce.n);
        let nm = r.subset_product(&ctx_r.peirce.n, &ctx_r.peirce.m);
        let mn_in_sa = mn
            .members()
            .iter()
            .all(|&x| c.entries(x).iter().all(|&v| sr.contains(v)));
        let nm_set = entry_set(c, &nm, |i, j| i == k && j == k).map(|es| {
            Subset::from_members(base, es.iter().map(|e| e[k * n + k]), SubsetKind::Plain)
        });
        let nm_ok = nm_set.as_ref() == Some(&s2r);
        out.push(InstanceRecord::verdict(
            text,
            mn_in_sa && nm_ok,
            "MN ⊄ sA or NM ≠ s²R",
            json!({"pairs": pairs, "mn_in_s_a": mn_in_sa, "nm_is_s2_r": nm_ok, "nm_size": nm.len()}),
        ));
    }
    out
}

/// Largest element with no idempotent e making x − e nilpotent.
fn not_nil_clean(r: &FiniteRing) -> Option<Elem> {
    let idem = r.element_data().idempotents.members().to_vec();
    r.elements()
        .rev()
        .find(|&x| nil_clean_split(r, x, &idem, false, false).is_none())
}

pub fn k2_nil_clean(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for base_text in &ctx.cfg.bases {
        let k_text = format!("K({base_text}, s=2)");
        let base = built!(ctx.build(base_text), out);
        let k = built!(ctx.build(&k_text), out);
        let (wb, wk) = (not_nil_clean(&base), not_nil_clean(&k));
        out.push(InstanceRecord::verdict(
            k_text,
            wb.is_none() == wk.is_none(),
            "nil-clean verdicts differ",
            json!({
                "base_nil_clean": wb.is_none(),
                "k_nil_clean": wk.is_none(),
                "base_witness": wb.map(|x| base.label(x)),
                "k_witness": wk.map(|x| k.label(x)),
            }),
        ));
    }
    out
}

pub fn split_s_plus_k(ctx: &Ctx) -> Vec<InstanceRecord> {
    let mut out = Vec::new();
    for text in &ctx.cfg.rings {
        let r = built!(ctx.build(text), out);
        let c = match context(&r) {
            Ok(c) => c,
            Err(e) => {
                out.push(InstanceRecord::fail(text, e, Value::Null));
                continue;
            }
        };
        let (s, k) = s_and_k(&r, &c.peirce);
        if !k.members().iter().all(|&x| r.is_nilpotent(x)) {
            out.push(InstanceRecord::skipped(text, "K is not nil"));
            continue;
        }
        let ideal = r.is_ideal(&k);
        let bad = r.elements().find(|&t| {
            let Some(&sp) = s.members().iter().find(|&&y| k.contains(r.sub(t, y))) else {
                return true;
            };
            let d = potent_nilpotent_decompose(&r, sp);
            let kp = r.sub(t, sp);
            let cpart = r.add(d.a, kp);
            !s.contains(d.b) || !r.is_nilpotent(cpart) || r.add(d.b, cpart) != t
        });
        out.push(InstanceRecord::verdict(
            text,
            ideal && bad.is_none(),
            "t = a + c split fails",
            json!({
                "order": r.order(),
                "s_size": s.len(),
                "k_size": k.len(),
                "k_ideal": ideal,
                "failure": bad.map(|x| r.label(x)),
            }),
        ));
    }
    out
}
