//! Surface syntax for ring constructions.
//!
//! ```text
//! expr    := factor ('x' factor)*
//! factor  := '(' expr ')' | Z(n) | GF(p, k) | M(n, expr) | T(n, expr)
//!          | K(expr, s=S) | MS(n, expr, s=S) | GR(expr, group) | END(abel)
//!          | IDZ(expr, gens) | QUO(expr, gens) | TEN(alg, alg)
//!          | MOR(expr, gens, gens) | MOR("file") | TAB("file")
//! S       := int | '#' index
//! gens    := '[' index (',' index)* ']'
//! group   := gfactor ('x' gfactor)*
//! gfactor := C(n) | D(n) | S3 | '(' group ')'
//! abel    := C(d) ('+' C(d))*
//! alg     := Z(c) | GF(p, k) | TRUNC(c, k) | TEN(alg, alg) | ALG("file")
//! ```
//!
//! Application binds tighter than `x`. Element indices in `gens` and `#i`
//! refer to the index order of the ring they belong to; for `Z(n)` that is
//! the residue itself.

use std::fmt;

use crate::constructions::files::{parse_algebra, parse_morita, parse_table_ring, read_file};
use crate::constructions::{
    cyclic_ring, endo_ring, formal_matrix_s, galois_field, group_ring, group_table, idealization,
    matrix_ring, morita_ring, tensor_product_algebra, AbelianGroupSpec, AlgebraPresentation,
    FormalVariant, GroupSpec, MoritaData, Shape,
};
use crate::ring::{direct_product_capped, Elem, FiniteRing, BUILD_CAP};
use crate::{Result, RingError};

/// The twisting element of `K` and `MS`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scalar {
    /// `k·1`.
    Int(i64),
    /// An element given by index.
    Index(Elem),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(k) => write!(f, "{k}"),
            Scalar::Index(i) => write!(f, "#{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgExpr {
    Cyclic(u64),
    Galois(u64, usize),
    Truncated(u64, usize),
    Tensor(Box<AlgExpr>, Box<AlgExpr>),
    File(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    Cyclic(u64),
    Galois(u64, u32),
    Product(Vec<RingExpr>),
    Matrix(usize, Shape, Box<RingExpr>),
    FormalK(Box<RingExpr>, Scalar),
    FormalMs(usize, Box<RingExpr>, Scalar),
    GroupRing(Box<RingExpr>, GroupSpec),
    Endo(AbelianGroupSpec),
    Idealization(Box<RingExpr>, Vec<Elem>),
    Quotient(Box<RingExpr>, Vec<Elem>),
    Tensor(AlgExpr, AlgExpr),
    Morita(Box<RingExpr>, Vec<Elem>, Vec<Elem>),
    MoritaFile(String),
    Table(String),
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn gens(xs: &[Elem]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for AlgExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgExpr::Cyclic(c) => write!(f, "Z({c})"),
            AlgExpr::Galois(p, k) => write!(f, "GF({p},{k})"),
            AlgExpr::Truncated(c, k) => write!(f, "TRUNC({c},{k})"),
            AlgExpr::Tensor(a, b) => write!(f, "TEN({a}, {b})"),
            AlgExpr::File(p) => write!(f, "ALG({})", quoted(p)),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Cyclic(n) => write!(f, "Z({n})"),
            RingExpr::Galois(p, k) => write!(f, "GF({p},{k})"),
            RingExpr::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    match p {
                        RingExpr::Product(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            RingExpr::Matrix(n, Shape::Full, r) => write!(f, "M({n}, {r})"),
            RingExpr::Matrix(n, Shape::UpperTriangular, r) => write!(f, "T({n}, {r})"),
            RingExpr::FormalK(r, s) => write!(f, "K({r}, s={s})"),
            RingExpr::FormalMs(n, r, s) => write!(f, "MS({n}, {r}, s={s})"),
            RingExpr::GroupRing(r, g) => write!(f, "GR({r}, {g})"),
            RingExpr::Endo(g) => write!(f, "END({g})"),
            RingExpr::Idealization(r, g) => write!(f, "IDZ({r}, {})", gens(g)),
            RingExpr::Quotient(r, g) => write!(f, "QUO({r}, {})", gens(g)),
            RingExpr::Tensor(a, b) => write!(f, "TEN({a}, {b})"),
            RingExpr::Morita(r, m, n) => write!(f, "MOR({r}, {}, {})", gens(m), gens(n)),
            RingExpr::MoritaFile(p) => write!(f, "MOR({})", quoted(p)),
            RingExpr::Table(p) => write!(f, "TAB({})", quoted(p)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Str(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Eq,
    Hash,
    Plus,
    Minus,
    Times,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Str(s) => write!(f, "string {}", quoted(s)),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBrack => f.write_str("`[`"),
            Tok::RBrack => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Hash => f.write_str("`#`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Times => f.write_str("`x`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, col, msg: String| RingError::Parse { line, col, msg };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let mut push = |tok| {
            out.push(Spanned {
                tok,
                line: l0,
                col: c0,
            })
        };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Eq),
            '#' => Some(Tok::Hash),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '×' | '*' => Some(Tok::Times),
            _ => None,
        };
        if let Some(t) = single {
            push(t);
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s
                .parse()
                .map_err(|_| err(l0, c0, format!("integer `{s}` is too large")))?;
            push(Tok::Int(n));
            col += i - start;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            push(if s == "x" { Tok::Times } else { Tok::Ident(s) });
            col += i - start;
            continue;
        }
        if c == '"' {
            let mut s = String::new();
            i += 1;
            col += 1;
            loop {
                match chars.get(i) {
                    None | Some('\n') => return Err(err(l0, c0, "unterminated string".into())),
                    Some('"') => break,
                    Some('\\') if i + 1 < chars.len() => {
                        s.push(chars[i + 1]);
                        i += 2;
                        col += 2;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        i += 1;
                        col += 1;
                    }
                }
            }
            i += 1;
            col += 1;
            push(Tok::Str(s));
            continue;
        }
        return Err(err(l0, c0, format!("unexpected character `{c}`")));
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error(&self, msg: impl Into<String>) -> RingError {
        let t = &self.toks[self.pos];
        RingError::Parse {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        }
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected {want}, found {}", self.peek())))
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.next();
                Ok(n)
            }
            t => Err(self.error(format!("expected an integer, found {t}"))),
        }
    }

    fn small<T: TryFrom<u64>>(&mut self, what: &str) -> Result<T> {
        let before = self.pos;
        let n = self.int()?;
        T::try_from(n).map_err(|_| {
            self.pos = before;
            self.error(format!("{what} {n} is too large"))
        })
    }

    fn string(&mut self) -> Result<String> {
        match self.peek() {
            Tok::Str(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            t => Err(self.error(format!("expected a quoted path, found {t}"))),
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            t => Err(self.error(format!("expected a constructor, found {t}"))),
        }
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let mut parts = vec![self.factor()?];
        while *self.peek() == Tok::Times {
            self.next();
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            RingExpr::Product(parts)
        })
    }

    fn scalar(&mut self) -> Result<Scalar> {
        match self.ident()?.as_str() {
            "s" => {}
            other => return Err(self.error(format!("expected `s=`, found `{other}`"))),
        }
        self.expect(Tok::Eq)?;
        match self.peek() {
            Tok::Hash => {
                self.next();
                Ok(Scalar::Index(self.small("index")?))
            }
            Tok::Minus => {
                self.next();
                let n: i64 = self.small("scalar")?;
                Ok(Scalar::Int(-n))
            }
            _ => Ok(Scalar::Int(self.small("scalar")?)),
        }
    }

    fn gens(&mut self) -> Result<Vec<Elem>> {
        self.expect(Tok::LBrack)?;
        let mut out = Vec::new();
        if *self.peek() != Tok::RBrack {
            loop {
                out.push(self.small("index")?);
                if *self.peek() != Tok::Comma {
                    break;
                }
                self.next();
            }
        }
        self.expect(Tok::RBrack)?;
        Ok(out)
    }

    fn factor(&mut self) -> Result<RingExpr> {
        if *self.peek() == Tok::LParen {
            self.next();
            let e = self.expr()?;
            self.expect(Tok::RParen)?;
            return Ok(e);
        }
        let start = self.pos;
        let name = self.ident()?;
        self.expect(Tok::LParen)?;
        let e = match name.as_str() {
            "Z" => RingExpr::Cyclic(self.int()?),
            "GF" => {
                let p = self.int()?;
                self.expect(Tok::Comma)?;
                RingExpr::Galois(p, self.small("degree")?)
            }
            "M" | "T" => {
                let n = self.small("size")?;
                self.expect(Tok::Comma)?;
                let shape = if name == "M" {
                    Shape::Full
                } else {
                    Shape::UpperTriangular
                };
                RingExpr::Matrix(n, shape, Box::new(self.expr()?))
            }
            "K" => {
                let r = self.expr()?;
                self.expect(Tok::Comma)?;
                RingExpr::FormalK(Box::new(r), self.scalar()?)
            }
            "MS" => {
                let n = self.small("size")?;
                self.expect(Tok::Comma)?;
                let r = self.expr()?;
                self.expect(Tok::Comma)?;
                RingExpr::FormalMs(n, Box::new(r), self.scalar()?)
            }
            "GR" => {
                let r = self.expr()?;
                self.expect(Tok::Comma)?;
                RingExpr::GroupRing(Box::new(r), self.group()?)
            }
            "END" => RingExpr::Endo(self.abelian()?),
            "IDZ" | "QUO" => {
                let r = Box::new(self.expr()?);
                self.expect(Tok::Comma)?;
                let g = self.gens()?;
                if name == "IDZ" {
                    RingExpr::Idealization(r, g)
                } else {
                    RingExpr::Quotient(r, g)
                }
            }
            "TEN" => {
                let a = self.alg()?;
                self.expect(Tok::Comma)?;
                RingExpr::Tensor(a, self.alg()?)
            }
            "MOR" => {
                if let Tok::Str(_) = self.peek() {
                    RingExpr::MoritaFile(self.string()?)
                } else {
                    let r = Box::new(self.expr()?);
                    self.expect(Tok::Comma)?;
                    let m = self.gens()?;
                    self.expect(Tok::Comma)?;
                    RingExpr::Morita(r, m, self.gens()?)
                }
            }
            "TAB" => RingExpr::Table(self.string()?),
            _ => {
                self.pos = start;
                return Err(self.error(format!("unknown constructor `{name}`")));
            }
        };
        self.expect(Tok::RParen)?;
        Ok(e)
    }

    fn group(&mut self) -> Result<GroupSpec> {
        let mut parts = vec![self.group_factor()?];
        while *self.peek() == Tok::Times {
            self.next();
            parts.push(self.group_factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            GroupSpec::Product(parts)
        })
    }

    fn group_factor(&mut self) -> Result<GroupSpec> {
        if *self.peek() == Tok::LParen {
            self.next();
            let g = self.group()?;
            self.expect(Tok::RParen)?;
            return Ok(g);
        }
        let start = self.pos;
        match self.ident()?.as_str() {
            "S3" => Ok(GroupSpec::S3),
            n @ ("C" | "D") => {
                let cyclic = n == "C";
                self.expect(Tok::LParen)?;
                let k = self.int()?;
                self.expect(Tok::RParen)?;
                Ok(if cyclic {
                    GroupSpec::Cyclic(k)
                } else {
                    GroupSpec::Dihedral(k)
                })
            }
            other => {
                self.pos = start;
                Err(self.error(format!("unknown group `{other}`")))
            }
        }
    }

    fn abelian(&mut self) -> Result<AbelianGroupSpec> {
        let mut inv = Vec::new();
        loop {
            let start = self.pos;
            if self.ident()? != "C" {
                self.pos = start;
                return Err(self.error("expected `C(d)`"));
            }
            self.expect(Tok::LParen)?;
            inv.push(self.int()?);
            self.expect(Tok::RParen)?;
            if *self.peek() != Tok::Plus {
                break;
            }
            self.next();
        }
        AbelianGroupSpec::new(inv).map_err(|e| self.error(e.to_string()))
    }

    fn alg(&mut self) -> Result<AlgExpr> {
        let start = self.pos;
        let name = self.ident()?;
        self.expect(Tok::LParen)?;
        let a = match name.as_str() {
            "Z" => AlgExpr::Cyclic(self.int()?),
            "GF" | "TRUNC" => {
                let c = self.int()?;
                self.expect(Tok::Comma)?;
                let k = self.small("degree")?;
                if name == "GF" {
                    AlgExpr::Galois(c, k)
                } else {
                    AlgExpr::Truncated(c, k)
                }
            }
            "TEN" => {
                let a = self.alg()?;
                self.expect(Tok::Comma)?;
                AlgExpr::Tensor(Box::new(a), Box::new(self.alg()?))
            }
            "ALG" => AlgExpr::File(self.string()?),
            _ => {
                self.pos = start;
                return Err(self.error(format!("unknown algebra `{name}`")));
            }
        };
        self.expect(Tok::RParen)?;
        Ok(a)
    }
}

pub fn parse_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(format!("unexpected {} after expression", p.peek())));
    }
    Ok(e)
}

fn checked_pow(base: u128, e: u64) -> Option<u128> {
    let e = u32::try_from(e).ok()?;
    base.checked_pow(e)
}

impl AlgExpr {
    /// `(modulus, rank)` where known without reading files.
    fn shape(&self) -> Option<(u64, u64)> {
        match self {
            AlgExpr::Cyclic(c) => Some((*c, 1)),
            AlgExpr::Galois(p, k) | AlgExpr::Truncated(p, k) => Some((*p, *k as u64)),
            AlgExpr::Tensor(a, b) => {
                let (ca, ra) = a.shape()?;
                let (_, rb) = b.shape()?;
                Some((ca, ra.checked_mul(rb)?))
            }
            AlgExpr::File(_) => None,
        }
    }

    pub fn build(&self) -> Result<AlgebraPresentation> {
        match self {
            AlgExpr::Cyclic(c) => AlgebraPresentation::cyclic(*c),
            AlgExpr::Galois(p, k) => AlgebraPresentation::galois(*p, *k),
            AlgExpr::Truncated(c, k) => AlgebraPresentation::truncated(*c, *k),
            AlgExpr::Tensor(a, b) => a.build()?.tensor(&b.build()?),
            AlgExpr::File(path) => parse_algebra(&read_file(path)?, self.to_string()),
        }
    }
}

impl RingExpr {
    /// Order of the ring this builds, when it is known without building
    /// anything. `Err` only on overflow.
    pub fn size_estimate(&self) -> Result<Option<u128>> {
        let overflow = || RingError::SizeOverflow(self.to_string());
        let sub = |e: &RingExpr| e.size_estimate();
        Ok(match self {
            RingExpr::Cyclic(n) => Some(*n as u128),
            RingExpr::Galois(p, k) => {
                Some(checked_pow(*p as u128, *k as u64).ok_or_else(overflow)?)
            }
            RingExpr::Product(parts) => {
                let mut acc = Some(1u128);
                for p in parts {
                    acc = match (acc, sub(p)?) {
                        (Some(a), Some(b)) => Some(a.checked_mul(b).ok_or_else(overflow)?),
                        _ => None,
                    };
                }
                acc
            }
            RingExpr::Matrix(n, shape, r) => {
                let slots = match shape {
                    Shape::Full => n * n,
                    Shape::UpperTriangular => n * (n + 1) / 2,
                };
                match sub(r)? {
                    Some(o) => Some(checked_pow(o, slots as u64).ok_or_else(overflow)?),
                    None => None,
                }
            }
            RingExpr::FormalK(r, _) => match sub(r)? {
                Some(o) => Some(checked_pow(o, 4).ok_or_else(overflow)?),
                None => None,
            },
            RingExpr::FormalMs(n, r, _) => match sub(r)? {
                Some(o) => Some(checked_pow(o, (n * n) as u64).ok_or_else(overflow)?),
                None => None,
            },
            RingExpr::GroupRing(r, g) => {
                let go = g.order().ok_or_else(overflow)?;
                match sub(r)? {
                    Some(o) => Some(checked_pow(o, go as u64).ok_or_else(overflow)?),
                    None => None,
                }
            }
            RingExpr::Endo(g) => Some(g.endo_order().ok_or_else(overflow)?),
            // |R × I| is at most |R|²
            RingExpr::Idealization(r, _) => match sub(r)? {
                Some(o) => Some(o.checked_mul(o).ok_or_else(overflow)?),
                None => None,
            },
            RingExpr::Quotient(r, _) => sub(r)?,
            RingExpr::Tensor(a, b) => match (a.shape(), b.shape()) {
                (Some((c, ra)), Some((_, rb))) => Some(
                    checked_pow(c as u128, ra.checked_mul(rb).ok_or_else(overflow)?)
                        .ok_or_else(overflow)?,
                ),
                _ => None,
            },
            RingExpr::Morita(r, _, _) => match sub(r)? {
                Some(o) => Some(checked_pow(o, 4).ok_or_else(overflow)?),
                None => None,
            },
            RingExpr::MoritaFile(_) | RingExpr::Table(_) => None,
        })
    }

    fn children(&self) -> Vec<&RingExpr> {
        match self {
            RingExpr::Product(parts) => parts.iter().collect(),
            RingExpr::Matrix(_, _, r)
            | RingExpr::FormalK(r, _)
            | RingExpr::FormalMs(_, r, _)
            | RingExpr::GroupRing(r, _)
            | RingExpr::Idealization(r, _)
            | RingExpr::Quotient(r, _)
            | RingExpr::Morita(r, _, _) => vec![r.as_ref()],
            _ => Vec::new(),
        }
    }

    /// Innermost subexpressions are checked first, so the error names the
    /// smallest offender.
    fn guard(&self, cap: usize) -> Result<()> {
        for c in self.children() {
            c.guard(cap)?;
        }
        if let Some(o) = self.size_estimate()? {
            if o > cap as u128 {
                return Err(RingError::CapExceeded {
                    what: self.to_string(),
                    order: o,
                    cap: cap as u128,
                });
            }
        }
        Ok(())
    }

    fn elements(ring: &FiniteRing, xs: &[Elem]) -> Result<()> {
        match xs.iter().find(|&&x| x as usize >= ring.order()) {
            Some(x) => Err(RingError::InvalidParameter(format!(
                "#{x} is not an element of {} (order {})",
                ring.expr(),
                ring.order()
            ))),
            None => Ok(()),
        }
    }

    /// Builds the ring. Every subexpression is size-checked against `cap`
    /// before anything is constructed; the error names the first offender.
    pub fn build(&self, cap: usize) -> Result<FiniteRing> {
        self.guard(cap)?;
        let ring = self.build_unguarded(cap)?;
        ring.ensure_within(cap, &self.to_string())?;
        Ok(ring)
    }

    fn build_unguarded(&self, cap: usize) -> Result<FiniteRing> {
        let scalar = |r: &FiniteRing, s: &Scalar| -> Result<Elem> {
            match *s {
                Scalar::Int(k) => Ok(r.int(k)),
                Scalar::Index(i) => {
                    Self::elements(r, &[i])?;
                    Ok(i)
                }
            }
        };
        match self {
            RingExpr::Cyclic(n) => cyclic_ring(*n),
            RingExpr::Galois(p, k) => galois_field(*p, *k),
            RingExpr::Product(parts) => {
                let rings = parts
                    .iter()
                    .map(|p| p.build(cap))
                    .collect::<Result<Vec<_>>>()?;
                direct_product_capped(&rings, cap)
            }
            RingExpr::Matrix(n, shape, r) => matrix_ring(*n, &r.build(cap)?, *shape, cap),
            RingExpr::FormalK(r, s) => {
                let base = r.build(cap)?;
                let s = scalar(&base, s)?;
                formal_matrix_s(&base, s, FormalVariant::K, cap)
            }
            RingExpr::FormalMs(n, r, s) => {
                let base = r.build(cap)?;
                let s = scalar(&base, s)?;
                formal_matrix_s(&base, s, FormalVariant::Ms(*n), cap)
            }
            RingExpr::GroupRing(r, g) => {
                let base = r.build(cap)?;
                group_ring(&base, &group_table(g, cap)?, cap)
            }
            RingExpr::Endo(g) => endo_ring(g, cap),
            RingExpr::Idealization(r, g) => {
                let base = r.build(cap)?;
                Self::elements(&base, g)?;
                let ideal = base.ideal_closure(g);
                idealization(&base, &ideal, self.to_string(), cap)
            }
            RingExpr::Quotient(r, g) => {
                let base = r.build(cap)?;
                Self::elements(&base, g)?;
                let ideal = base.ideal_closure(g);
                Ok(base.quotient_with_expr(&ideal, self.to_string())?.ring)
            }
            RingExpr::Tensor(a, b) => tensor_product_algebra(&a.build()?, &b.build()?, cap),
            RingExpr::Morita(r, m, n) => {
                let base = r.build(cap)?;
                Self::elements(&base, m)?;
                Self::elements(&base, n)?;
                let data =
                    MoritaData::from_ideals(&base, &base.ideal_closure(m), &base.ideal_closure(n))?;
                morita_ring(data, self.to_string(), cap)
            }
            RingExpr::MoritaFile(path) => {
                let text = read_file(path)?;
                let build = |s: &str| parse_expr(s)?.build(cap);
                morita_ring(parse_morita(&text, &build)?, self.to_string(), cap)
            }
            RingExpr::Table(path) => {
                let ring = parse_table_ring(&read_file(path)?, self.to_string())?;
                let report = crate::ring::validate_ring_axioms(&ring);
                match report.violation {
                    None => Ok(ring),
                    Some(v) => Err(RingError::Axiom(format!("{path}: {v}"))),
                }
            }
        }
    }
}

/// A group expression such as `C(2) x C(2)` or `S3`.
pub fn parse_group(text: &str) -> Result<GroupSpec> {
    match parse_expr(&format!("GR(Z(2), {text})"))? {
        RingExpr::GroupRing(_, g) => Ok(g),
        _ => Err(RingError::InvalidParameter(format!(
            "`{text}` is not a group"
        ))),
    }
}

/// An abelian group spec such as `C(4)+C(2)`.
pub fn parse_abelian(text: &str) -> Result<AbelianGroupSpec> {
    match parse_expr(&format!("END({text})"))? {
        RingExpr::Endo(g) => Ok(g),
        _ => Err(RingError::InvalidParameter(format!(
            "`{text}` is not an abelian group"
        ))),
    }
}

/// Parses and builds with the construction cap.
pub fn build_ring(text: &str) -> Result<FiniteRing> {
    parse_expr(text)?.build(BUILD_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples_parse() {
        assert_eq!(
            parse_expr("M(2, Z(4))").unwrap(),
            RingExpr::Matrix(2, Shape::Full, Box::new(RingExpr::Cyclic(4)))
        );
        assert_eq!(
            parse_expr("GR(Z(2), S3)").unwrap(),
            RingExpr::GroupRing(Box::new(RingExpr::Cyclic(2)), GroupSpec::S3)
        );
        match parse_expr("K(Z(8), s=2) x Z(3)").unwrap() {
            RingExpr::Product(p) => {
                assert_eq!(p.len(), 2);
                assert_eq!(
                    p[0],
                    RingExpr::FormalK(Box::new(RingExpr::Cyclic(8)), Scalar::Int(2))
                );
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn printing_matches_ring_exprs() {
        for s in [
            "Z(6)",
            "GF(2,2)",
            "M(2, Z(4))",
            "T(2, Z(2))",
            "K(Z(4), s=2)",
            "MS(3, Z(2), s=0)",
            "GR(Z(2), C(2) x C(2))",
            "END(C(4)+C(2))",
            "Z(4) x Z(3)",
            "(Z(2) x Z(2)) x Z(3)",
            "TEN(GF(2,2), GF(2,2))",
            "IDZ(Z(4), [2])",
            "QUO(Z(8), [4])",
            "MOR(Z(4), [2], [2])",
        ] {
            let e = parse_expr(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(e.build(BUILD_CAP).unwrap().expr(), s);
        }
    }

    #[test]
    fn errors_have_positions() {
        match parse_expr("M(2,\n  Q(3))") {
            Err(RingError::Parse { line, col, .. }) => assert_eq!((line, col), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_expr("Z(4) Z(2)"),
            Err(RingError::Parse { .. })
        ));
    }

    #[test]
    fn cap_names_the_subexpression() {
        match parse_expr("Z(2) x M(3, Z(8))").unwrap().build(10_000) {
            Err(RingError::CapExceeded { what, .. }) => assert_eq!(what, "M(3, Z(8))"),
            other => panic!("{:?}", other.map(|r| r.order())),
        }
        assert!(matches!(
            parse_expr("M(40, Z(1000))").unwrap().build(BUILD_CAP),
            Err(RingError::SizeOverflow(_))
        ));
    }
}
