//! Plain-text table formats for table rings, algebra presentations and
//! Morita data.
//!
//! All three share one layout: `#` starts a comment, blank lines are
//! ignored, a line `key value…` sets a scalar and a line `table NAME` is
//! followed by rows of decimal integers.
//!
//! ```text
//! # table ring
//! order 2
//! zero 0
//! one 1
//! table add
//! 0 1
//! 1 0
//! table mul
//! 0 0
//! 0 1
//! ```
//!
//! An algebra file has `modulus c`, `rank r`, `unit u_0 … u_{r-1}` and
//! `table products` with r² rows; row `i·r + j` holds the coordinates of
//! `e_i e_j`.
//!
//! A Morita file has `ring A <expr>`, `ring B <expr>`, `module M <order>`,
//! `module N <order>` and the tables `M.add` (|M|×|M|), `M.left` (|A|×|M|),
//! `M.right` (|M|×|B|), `N.add` (|N|×|N|), `N.left` (|B|×|N|), `N.right`
//! (|N|×|A|), `phi` (|M|×|N|, values in A) and `psi` (|N|×|M|, values in
//! B). Module element 0 is the zero.

use std::collections::HashMap;

use crate::ring::{Elem, FiniteRing, TableCarrier};
use crate::{Result, RingError};

use super::morita::{Bimodule, MoritaData};
use super::tensor::AlgebraPresentation;

#[derive(Default, Debug)]
struct Doc {
    scalars: HashMap<String, (usize, Vec<String>)>,
    tables: HashMap<String, (usize, Vec<Vec<u64>>)>,
}

fn err(line: usize, msg: impl Into<String>) -> RingError {
    RingError::Parse {
        line,
        col: 1,
        msg: msg.into(),
    }
}

fn parse_doc(text: &str) -> Result<Doc> {
    let mut doc = Doc::default();
    let mut current: Option<String> = None;
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let first = words.next().unwrap();
        if first.chars().all(|c| c.is_ascii_digit()) {
            let Some(name) = &current else {
                return Err(err(line_no, "numbers outside a table"));
            };
            let row = line
                .split_whitespace()
                .map(|w| {
                    w.parse::<u64>()
                        .map_err(|_| err(line_no, format!("bad integer `{w}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            doc.tables.get_mut(name).unwrap().1.push(row);
            continue;
        }
        if first == "table" {
            let name = words
                .next()
                .ok_or_else(|| err(line_no, "table needs a name"))?
                .to_string();
            if doc
                .tables
                .insert(name.clone(), (line_no, Vec::new()))
                .is_some()
            {
                return Err(err(line_no, format!("duplicate table `{name}`")));
            }
            current = Some(name);
            continue;
        }
        current = None;
        let tail = line[first.len()..].trim();
        let rest: Vec<String> = match first {
            // ring expressions may contain spaces
            "ring" => {
                let (name, expr) = tail.split_once(char::is_whitespace).unwrap_or((tail, ""));
                vec![name.to_string(), expr.trim().to_string()]
            }
            "name" => vec![tail.to_string()],
            _ => words.map(str::to_string).collect(),
        };
        let key = if first == "ring" || first == "module" {
            format!("{first} {}", rest.first().cloned().unwrap_or_default())
        } else {
            first.to_string()
        };
        if doc.scalars.insert(key.clone(), (line_no, rest)).is_some() {
            return Err(err(line_no, format!("duplicate entry `{key}`")));
        }
    }
    Ok(doc)
}

impl Doc {
    fn scalar(&self, key: &str) -> Result<(usize, &[String])> {
        self.scalars
            .get(key)
            .map(|(l, v)| (*l, v.as_slice()))
            .ok_or_else(|| err(0, format!("missing `{key}`")))
    }

    fn number(&self, key: &str) -> Result<u64> {
        let (line, v) = self.scalar(key)?;
        let w = v
            .last()
            .ok_or_else(|| err(line, format!("`{key}` needs a value")))?;
        w.parse()
            .map_err(|_| err(line, format!("bad integer `{w}`")))
    }

    fn table(&self, name: &str, rows: usize, cols: usize) -> Result<Vec<u64>> {
        let (line, t) = self
            .tables
            .get(name)
            .ok_or_else(|| err(0, format!("missing table `{name}`")))?;
        if t.len() != rows {
            return Err(err(
                *line,
                format!("table `{name}` has {} rows, expected {rows}", t.len()),
            ));
        }
        if let Some(r) = t.iter().position(|r| r.len() != cols) {
            return Err(err(
                line + r + 1,
                format!(
                    "table `{name}` row {} has {} entries, expected {cols}",
                    r + 1,
                    t[r].len()
                ),
            ));
        }
        Ok(t.iter().flatten().copied().collect())
    }

    fn elem_table(&self, name: &str, rows: usize, cols: usize) -> Result<Vec<Elem>> {
        self.table(name, rows, cols)?
            .into_iter()
            .map(|x| {
                Elem::try_from(x)
                    .map_err(|_| err(0, format!("table `{name}`: entry {x} too large")))
            })
            .collect()
    }
}

pub fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| RingError::Io {
        path: path.to_string(),
        source,
    })
}

/// A ring from explicit tables. Axioms are not checked here.
pub fn parse_table_ring(text: &str, expr: String) -> Result<FiniteRing> {
    let doc = parse_doc(text)?;
    let order = doc.number("order")? as usize;
    if order > crate::ring::BUILD_CAP {
        return Err(RingError::CapExceeded {
            what: expr,
            order: order as u128,
            cap: crate::ring::BUILD_CAP as u128,
        });
    }
    let zero = doc.number("zero")? as Elem;
    let one = doc.number("one")? as Elem;
    let add = doc.elem_table("add", order, order)?;
    let mul = doc.elem_table("mul", order, order)?;
    Ok(FiniteRing::new(
        TableCarrier::new(order, zero, one, add, mul)?,
        expr,
    ))
}

pub fn parse_algebra(text: &str, name: String) -> Result<AlgebraPresentation> {
    let doc = parse_doc(text)?;
    let c = doc.number("modulus")?;
    let r = doc.number("rank")? as usize;
    if r == 0 || r > crate::ring::MAX_SLOTS {
        return Err(err(doc.scalar("rank")?.0, "rank must be between 1 and 32"));
    }
    let (line, unit) = doc.scalar("unit")?;
    let unit = unit
        .iter()
        .map(|w| {
            w.parse::<u64>()
                .map_err(|_| err(line, format!("bad integer `{w}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    let consts = doc.table("products", r * r, r)?;
    AlgebraPresentation::new(c, r, consts, unit, name)
}

/// Morita data; `build` turns the ring expressions into rings.
pub fn parse_morita(text: &str, build: &dyn Fn(&str) -> Result<FiniteRing>) -> Result<MoritaData> {
    let doc = parse_doc(text)?;
    let ring = |name: &str| -> Result<FiniteRing> {
        let (_, v) = doc.scalar(&format!("ring {name}"))?;
        build(&v[1])
    };
    let (a, b) = (ring("A")?, ring("B")?);
    let module_order = |name: &str| -> Result<usize> {
        let (line, v) = doc.scalar(&format!("module {name}"))?;
        v.get(1)
            .and_then(|w| w.parse().ok())
            .filter(|&n: &usize| n >= 1)
            .ok_or_else(|| err(line, format!("module {name} needs a positive order")))
    };
    let (om, on) = (module_order("M")?, module_order("N")?);
    let (oa, ob) = (a.order(), b.order());
    let m = Bimodule::new(
        om,
        doc.elem_table("M.add", om, om)?,
        doc.elem_table("M.left", oa, om)?,
        doc.elem_table("M.right", om, ob)?,
        oa,
        ob,
    )?;
    let n = Bimodule::new(
        on,
        doc.elem_table("N.add", on, on)?,
        doc.elem_table("N.left", ob, on)?,
        doc.elem_table("N.right", on, oa)?,
        ob,
        oa,
    )?;
    Ok(MoritaData {
        a,
        b,
        m,
        n,
        phi: doc.elem_table("phi", om, on)?,
        psi: doc.elem_table("psi", on, om)?,
    })
}

/// Serializes Morita data in the format read by [`parse_morita`].
pub fn write_morita(data: &MoritaData) -> String {
    let mut out = String::new();
    let mut table = |name: &str, t: &[Elem], cols: usize| {
        out.push_str(&format!("table {name}\n"));
        for row in t.chunks(cols.max(1)) {
            let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&r.join(" "));
            out.push('\n');
        }
    };
    let (om, on) = (data.m.order, data.n.order);
    table("M.add", &data.m.add, om);
    table("M.left", &data.m.left, om);
    table("M.right", &data.m.right, data.b.order());
    table("N.add", &data.n.add, on);
    table("N.left", &data.n.left, on);
    table("N.right", &data.n.right, data.a.order());
    table("phi", &data.phi, on);
    table("psi", &data.psi, om);
    format!(
        "ring A {}\nring B {}\nmodule M {om}\nmodule N {on}\n{out}",
        data.a.expr(),
        data.b.expr()
    )
}
