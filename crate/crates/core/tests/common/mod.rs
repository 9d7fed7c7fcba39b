//! Independent reference arithmetic for the integration tests: rings given
//! by explicit operation tables built from hand-written formulas, and the
//! brute-force predicates the library is checked against. Nothing here
//! calls into the library's element data.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use ringlab::FiniteRing;

/// A ring on `0..n` with explicit tables.
pub struct Tab {
    pub n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    pub zero: u32,
    pub one: u32,
}

impl Tab {
    /// Tables for the listed elements under the given operations. The
    /// element at position i gets index i.
    pub fn build<T, A, M>(elems: &[T], add: A, mul: M, zero: &T, one: &T) -> Tab
    where
        T: Clone + Eq + Hash,
        A: Fn(&T, &T) -> T,
        M: Fn(&T, &T) -> T,
    {
        let n = elems.len();
        let pos: HashMap<&T, u32> = elems
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i as u32))
            .collect();
        assert_eq!(pos.len(), n, "duplicate elements");
        let idx = |t: &T| *pos.get(t).expect("operation leaves the element set");
        let mut at = vec![0; n * n];
        let mut mt = vec![0; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                at[i * n + j] = idx(&add(a, b));
                mt[i * n + j] = idx(&mul(a, b));
            }
        }
        let zero = idx(zero);
        let neg = (0..n)
            .map(|a| {
                (0..n as u32)
                    .find(|&b| at[a * n + b as usize] == zero)
                    .unwrap()
            })
            .collect();
        Tab {
            n,
            add: at,
            mul: mt,
            neg,
            zero,
            one: idx(one),
        }
    }

    pub fn elems(&self) -> std::ops::Range<u32> {
        0..self.n as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.n + b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    /// `x^e` by repeated multiplication, `x^0 = 1`.
    pub fn pow(&self, x: u32, e: u64) -> u32 {
        (0..e).fold(self.one, |acc, _| self.mul(acc, x))
    }

    pub fn nil_index(&self, x: u32) -> Option<u32> {
        let mut y = x;
        for i in 1..=self.n as u32 + 1 {
            if y == self.zero {
                return Some(i);
            }
            y = self.mul(y, x);
        }
        None
    }

    pub fn is_nilpotent(&self, x: u32) -> bool {
        self.nil_index(x).is_some()
    }

    pub fn is_unit(&self, x: u32) -> bool {
        self.elems()
            .any(|y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }

    pub fn idempotents(&self) -> Vec<u32> {
        self.elems().filter(|&x| self.mul(x, x) == x).collect()
    }

    /// `{x : 1 − rx is a unit for every r}`.
    pub fn radical(&self) -> BTreeSet<u32> {
        let units: Vec<bool> = self.elems().map(|x| self.is_unit(x)).collect();
        self.elems()
            .filter(|&x| {
                self.elems()
                    .all(|r| units[self.sub(self.one, self.mul(r, x)) as usize])
            })
            .collect()
    }

    /// Least `(n, k)` with `x^(n+k) = x^n`, read off the power sequence.
    pub fn period(&self, x: u32) -> (u64, u64) {
        let mut seen: HashMap<u32, u64> = HashMap::new();
        let mut y = x;
        for i in 1.. {
            if let Some(&j) = seen.get(&y) {
                return (j, i - j);
            }
            seen.insert(y, i);
            y = self.mul(y, x);
        }
        unreachable!()
    }

    /// Lexicographically least `(n, k)` with `x^(n+k) = x^n` for every x,
    /// by direct search.
    pub fn uniform_period(&self, max_n: u64, max_k: u64) -> Option<(u64, u64)> {
        for n in 1..=max_n {
            for k in 1..=max_k {
                if self.elems().all(|x| self.pow(x, n + k) == self.pow(x, n)) {
                    return Some((n, k));
                }
            }
        }
        None
    }

    pub fn is_potent(&self, x: u32) -> bool {
        let mut y = self.mul(x, x);
        for _ in 0..=self.n {
            if y == x {
                return true;
            }
            y = self.mul(y, x);
        }
        false
    }

    /// Additive closure of a set.
    pub fn span(&self, gens: &BTreeSet<u32>) -> BTreeSet<u32> {
        let mut out: BTreeSet<u32> = BTreeSet::from([self.zero]);
        loop {
            let next: BTreeSet<u32> = out
                .iter()
                .flat_map(|&a| gens.iter().map(move |&g| (a, g)))
                .map(|(a, g)| self.add(a, g))
                .chain(out.iter().copied())
                .collect();
            if next.len() == out.len() {
                return out;
            }
            out = next;
        }
    }

    /// Additive span of all products `ab`.
    pub fn product(&self, a: &BTreeSet<u32>, b: &BTreeSet<u32>) -> BTreeSet<u32> {
        let prods = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.mul(x, y))
            .collect();
        self.span(&prods)
    }

    /// Least l with `I^l = 0`.
    pub fn ideal_index(&self, i: &BTreeSet<u32>) -> Option<u32> {
        let zero = BTreeSet::from([self.zero]);
        let mut p = i.clone();
        for l in 1..=self.n as u32 {
            if p == zero {
                return Some(l);
            }
            p = self.product(&p, i);
        }
        None
    }
}

/// All tuples of the given length over `0..base`, first coordinate least
/// significant.
pub fn tuples(base: u32, len: usize) -> Vec<Vec<u32>> {
    let total = (base as usize).pow(len as u32);
    (0..total)
        .map(|mut x| {
            (0..len)
                .map(|_| {
                    let d = (x % base as usize) as u32;
                    x /= base as usize;
                    d
                })
                .collect()
        })
        .collect()
}

pub fn zn(n: u32) -> Tab {
    let e: Vec<u32> = (0..n).collect();
    Tab::build(&e, |a, b| (a + b) % n, |a, b| (a * b) % n, &0, &(1 % n))
}

/// `GF(4)` as pairs `c0 + c1·a` with `a² = a + 1`.
pub fn gf4() -> (Tab, Vec<Vec<u32>>) {
    let e = tuples(2, 2);
    let mul = |x: &Vec<u32>, y: &Vec<u32>| {
        let c0 = x[0] * y[0] + x[1] * y[1];
        let c1 = x[0] * y[1] + x[1] * y[0] + x[1] * y[1];
        vec![c0 % 2, c1 % 2]
    };
    let t = Tab::build(&e, add_mod(2), mul, &vec![0, 0], &vec![1, 0]);
    (t, e)
}

pub fn add_mod(m: u32) -> impl Fn(&Vec<u32>, &Vec<u32>) -> Vec<u32> {
    move |a, b| a.iter().zip(b).map(|(x, y)| (x + y) % m).collect()
}

/// n×n matrices over `Z(m)`, row-major with entry (0,0) first; the term
/// `a_ik b_kj` is weighted by `w(i, k, j)`.
pub fn matrices_mod(
    m: u32,
    n: usize,
    w: impl Fn(usize, usize, usize) -> u32,
) -> (Tab, Vec<Vec<u32>>) {
    let e = tuples(m, n * n);
    let mul = |a: &Vec<u32>, b: &Vec<u32>| {
        let mut c = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for k in 0..n {
                    s += w(i, k, j) * a[i * n + k] * b[k * n + j];
                }
                c[i * n + j] = s % m;
            }
        }
        c
    };
    let mut one = vec![0; n * n];
    for i in 0..n {
        one[i * n + i] = 1 % m;
    }
    let t = Tab::build(&e, add_mod(m), mul, &vec![0; n * n], &one);
    (t, e)
}

/// The group ring of `Z(m)` over the group with multiplication table
/// `g[a][b]`, identity 0; coefficient vectors indexed by group element.
pub fn group_ring_mod(m: u32, g: &[Vec<usize>]) -> (Tab, Vec<Vec<u32>>) {
    let order = g.len();
    let e = tuples(m, order);
    let mul = |a: &Vec<u32>, b: &Vec<u32>| {
        let mut c = vec![0; order];
        for x in 0..order {
            for y in 0..order {
                c[g[x][y]] = (c[g[x][y]] + a[x] * b[y]) % m;
            }
        }
        c
    };
    let mut one = vec![0; order];
    one[0] = 1 % m;
    let t = Tab::build(&e, add_mod(m), mul, &vec![0; order], &one);
    (t, e)
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect()
}

/// S3 as permutations of {0,1,2}, composed right to left, identity first.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let c = [p[q[0]], p[q[1]], p[q[2]]];
                    perms.iter().position(|r| *r == c).unwrap()
                })
                .collect()
        })
        .collect()
}

/// `map[i]` is the library element for reference element i. Checks that it
/// is a bijection preserving both operations and the identity.
pub fn same_ring(lib: &FiniteRing, tab: &Tab, map: &[u32]) -> Result<(), String> {
    if lib.order() != tab.n {
        return Err(format!("orders {} vs {}", lib.order(), tab.n));
    }
    let distinct: BTreeSet<u32> = map.iter().copied().collect();
    if distinct.len() != tab.n {
        return Err("map is not injective".into());
    }
    if map[tab.one as usize] != lib.one() {
        return Err("identity not preserved".into());
    }
    for a in tab.elems() {
        for b in tab.elems() {
            let (x, y) = (map[a as usize], map[b as usize]);
            if map[tab.add(a, b) as usize] != lib.add(x, y) {
                return Err(format!("sum of #{a} and #{b}"));
            }
            if map[tab.mul(a, b) as usize] != lib.mul(x, y) {
                return Err(format!("product of #{a} and #{b}"));
            }
        }
    }
    Ok(())
}

pub fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}
