use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Elem, FiniteRing, AXIOM_CAP};

/// The first failing instance of a ring axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub elements: Vec<Elem>,
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.elements)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    /// False when triples were sampled.
    pub exhaustive: bool,
    pub instances_checked: u64,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Number of sampled triples per axiom above the exhaustive cap.
const SAMPLES: u64 = 20_000;

pub fn validate_ring_axioms(ring: &FiniteRing) -> AxiomReport {
    validate_ring_axioms_with(ring, AXIOM_CAP, 0)
}

/// Exhaustive for order ≤ `cap`, otherwise sampled with a seeded generator.
pub fn validate_ring_axioms_with(ring: &FiniteRing, cap: usize, seed: u64) -> AxiomReport {
    let mut checker = Checker {
        ring,
        exhaustive: ring.order() <= cap,
        rng: ChaCha8Rng::seed_from_u64(seed),
        count: 0,
    };
    let violation = checker.run().err();
    AxiomReport {
        exhaustive: checker.exhaustive,
        instances_checked: checker.count,
        violation,
    }
}

struct Checker<'a> {
    ring: &'a FiniteRing,
    exhaustive: bool,
    rng: ChaCha8Rng,
    count: u64,
}

type Check = Result<(), AxiomViolation>;

impl Checker<'_> {
    fn run(&mut self) -> Check {
        let r = self.ring.clone();
        let z = r.zero();
        self.for_each1("additive identity", |a| {
            r.add(a, z) == a && r.add(z, a) == a
        })?;
        self.for_each2("additive commutativity", |a, b| r.add(a, b) == r.add(b, a))?;
        self.for_each1("additive inverse", |a| r.add(a, r.neg(a)) == z)?;
        self.for_each3("additive associativity", |a, b, c| {
            r.add(r.add(a, b), c) == r.add(a, r.add(b, c))
        })?;
        let one = r.one();
        self.for_each1("one is identity", |a| {
            r.mul(one, a) == a && r.mul(a, one) == a
        })?;
        if z == one {
            return Err(AxiomViolation {
                axiom: "zero differs from one",
                elements: vec![z],
            });
        }
        self.for_each3("multiplicative associativity", |a, b, c| {
            r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))
        })?;
        self.for_each3("left distributivity", |a, b, c| {
            r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
        })?;
        self.for_each3("right distributivity", |a, b, c| {
            r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c))
        })
    }

    fn pick(&mut self) -> Elem {
        self.rng.gen_range(0..self.ring.order() as Elem)
    }

    fn for_each1(&mut self, axiom: &'static str, ok: impl Fn(Elem) -> bool) -> Check {
        // unary checks are always exhaustive
        for a in self.ring.elements() {
            self.count += 1;
            if !ok(a) {
                return Err(AxiomViolation {
                    axiom,
                    elements: vec![a],
                });
            }
        }
        Ok(())
    }

    fn for_each2(&mut self, axiom: &'static str, ok: impl Fn(Elem, Elem) -> bool) -> Check {
        let fail = |a, b| AxiomViolation {
            axiom,
            elements: vec![a, b],
        };
        if self.exhaustive {
            for a in self.ring.elements() {
                for b in self.ring.elements() {
                    self.count += 1;
                    if !ok(a, b) {
                        return Err(fail(a, b));
                    }
                }
            }
        } else {
            for _ in 0..SAMPLES {
                let (a, b) = (self.pick(), self.pick());
                self.count += 1;
                if !ok(a, b) {
                    return Err(fail(a, b));
                }
            }
        }
        Ok(())
    }

    fn for_each3(&mut self, axiom: &'static str, ok: impl Fn(Elem, Elem, Elem) -> bool) -> Check {
        let fail = |a, b, c| AxiomViolation {
            axiom,
            elements: vec![a, b, c],
        };
        if self.exhaustive {
            for a in self.ring.elements() {
                for b in self.ring.elements() {
                    for c in self.ring.elements() {
                        self.count += 1;
                        if !ok(a, b, c) {
                            return Err(fail(a, b, c));
                        }
                    }
                }
            }
        } else {
            for _ in 0..SAMPLES {
                let (a, b, c) = (self.pick(), self.pick(), self.pick());
                self.count += 1;
                if !ok(a, b, c) {
                    return Err(fail(a, b, c));
                }
            }
        }
        Ok(())
    }
}
