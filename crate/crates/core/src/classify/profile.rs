use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::ring::{CharData, Elem, FiniteRing, PeriodData, DEFAULT_CAP};

use super::nil_clean::{is_strongly_m_nil_clean_element, m_potents, nil_clean_split};
use super::uniform_period;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "true")]
    True,
    #[serde(rename = "false")]
    False,
    /// Holds for every finite ring; not searched.
    #[serde(rename = "trivially_true_finite")]
    TriviallyTrue,
    /// Not evaluated because the ring is above the search cap.
    #[serde(rename = "skipped")]
    Skipped,
}

impl Status {
    pub fn holds(self) -> Option<bool> {
        match self {
            Status::True | Status::TriviallyTrue => Some(true),
            Status::False => Some(false),
            Status::Skipped => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub element: Elem,
    pub label: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlagEntry {
    #[serde(skip)]
    pub name: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Flags reported as true without search on finite carriers.
pub const TRIVIAL_FLAGS: [&str; 5] = [
    "periodic",
    "weakly_periodic",
    "pi_UU",
    "semi_clean",
    "strongly_pi_regular",
];

#[derive(Clone, Copy, Debug)]
pub struct ProfileOptions {
    /// Exponent for the `m_nil_clean` and `strongly_m_nil_clean` flags.
    pub m: u64,
    /// Largest order on which the searching flags run.
    pub cap: usize,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            m: 3,
            cap: DEFAULT_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RingProfile {
    pub expr: String,
    pub order: usize,
    pub characteristic: CharData,
    pub uniform: PeriodData,
    pub m: u64,
    pub radical_size: usize,
    pub flags: Vec<FlagEntry>,
}

impl RingProfile {
    pub fn flag(&self, name: &str) -> &FlagEntry {
        self.flags
            .iter()
            .find(|f| f.name == name)
            .unwrap_or_else(|| panic!("no flag `{name}`"))
    }

    /// `Some(verdict)` unless the flag was skipped.
    pub fn holds(&self, name: &str) -> Option<bool> {
        self.flag(name).status.holds()
    }
}

struct FlagMap<'a>(&'a [FlagEntry]);

impl Serialize for FlagMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for f in self.0 {
            map.serialize_entry(f.name, f)?;
        }
        map.end()
    }
}

impl Serialize for RingProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            ring: &'a str,
            order: usize,
            characteristic: &'a CharData,
            period: &'a PeriodData,
            m: u64,
            radical_size: usize,
            flags: FlagMap<'a>,
        }
        Repr {
            ring: &self.expr,
            order: self.order,
            characteristic: &self.characteristic,
            period: &self.uniform,
            m: self.m,
            radical_size: self.radical_size,
            flags: FlagMap(&self.flags),
        }
        .serialize(s)
    }
}

struct Builder<'a> {
    ring: &'a FiniteRing,
    flags: Vec<FlagEntry>,
}

impl Builder<'_> {
    fn push(
        &mut self,
        name: &'static str,
        status: Status,
        witness: Option<Witness>,
        reason: Option<String>,
    ) {
        self.flags.push(FlagEntry {
            name,
            status,
            witness,
            reason,
        });
    }

    /// True unless `counter` is set, in which case it is the counterwitness.
    fn verdict(
        &mut self,
        name: &'static str,
        counter: Option<(Elem, String)>,
        reason: Option<String>,
    ) {
        match counter {
            None => self.push(name, Status::True, None, reason),
            Some((x, detail)) => {
                let w = Witness {
                    element: x,
                    label: self.ring.label(x),
                    detail,
                };
                self.push(name, Status::False, Some(w), None)
            }
        }
    }

    fn trivial(&mut self, name: &'static str, reason: &str) {
        self.push(
            name,
            Status::TriviallyTrue,
            None,
            Some(format!("finite carrier: {reason}")),
        );
    }

    fn skipped(&mut self, name: &'static str, cap: usize) {
        let reason = format!("order {} above search cap {cap}", self.ring.order());
        self.push(name, Status::Skipped, None, Some(reason));
    }
}

/// Evaluates every predicate of the profile by exhaustive search.
/// Counterwitnesses are the largest failing element.
pub fn classify_ring(ring: &FiniteRing, opts: ProfileOptions) -> RingProfile {
    let m = opts.m.max(2);
    let data = ring.element_data();
    let rad = ring.jacobson_radical();
    let j = &rad.set;
    let center = ring.center();
    let uniform = uniform_period(ring);
    let zero = ring.zero();
    let searchable = ring.order() <= opts.cap;
    let first_rev = |pred: &dyn Fn(Elem) -> bool| ring.elements().rev().find(|&x| pred(x));
    let mut b = Builder {
        ring,
        flags: Vec::with_capacity(21),
    };

    let not_potent = first_rev(&|x| data.periods[x as usize].index != 1);
    b.verdict(
        "potent",
        not_potent.map(|x| {
            (x, {
                let p = data.periods[x as usize];
                format!(
                    "period (n, k) = ({}, {}), so x^m ≠ x for every m ≥ 2",
                    p.index, p.period
                )
            })
        }),
        None,
    );
    b.verdict(
        "boolean",
        first_rev(&|x| ring.mul(x, x) != x).map(|x| (x, "x² ≠ x".to_string())),
        None,
    );
    b.verdict(
        "m_potent_uniform",
        not_potent.map(|x| (x, "not potent".to_string())),
        (uniform.index == 1).then(|| format!("x^{} = x for every x", uniform.period + 1)),
    );

    let idem = data.idempotents.members();
    let split_flag = |b: &mut Builder,
                      name: &'static str,
                      cands: &[Elem],
                      commuting: bool,
                      weak: bool,
                      what: &str| {
        if !searchable {
            return b.skipped(name, opts.cap);
        }
        let counter = first_rev(&|x| nil_clean_split(ring, x, cands, commuting, weak).is_none());
        b.verdict(name, counter.map(|x| (x, what.to_string())), None);
    };
    split_flag(
        &mut b,
        "nil_clean",
        idem,
        false,
        false,
        "no idempotent e with x − e nilpotent",
    );
    split_flag(
        &mut b,
        "strongly_nil_clean",
        idem,
        true,
        false,
        "no idempotent e commuting with x and x − e nilpotent",
    );
    let mpot = m_potents(ring, m);
    split_flag(
        &mut b,
        "m_nil_clean",
        &mpot,
        false,
        false,
        &format!("no b with b^{m} = b and x − b nilpotent"),
    );
    b.verdict(
        "strongly_m_nil_clean",
        first_rev(&|x| !is_strongly_m_nil_clean_element(ring, x, m))
            .map(|x| (x, format!("x^{m} − x is not nilpotent"))),
        Some(format!("m = {m}")),
    );
    split_flag(
        &mut b,
        "weakly_nil_clean",
        idem,
        false,
        true,
        "no idempotent e with x − e or x + e nilpotent",
    );
    b.trivial(
        "weakly_periodic",
        "x = x^(N+1) + (x − x^(N+1)) splits every element",
    );
    b.trivial("periodic", "powers of x repeat");

    let one = ring.one();
    b.verdict(
        "UU",
        first_rev(&|x| data.units.contains(x) && !data.nilpotents.contains(ring.sub(x, one)))
            .map(|x| (x, "unit with u − 1 not nilpotent".to_string())),
        None,
    );
    b.trivial("pi_UU", "u^i = 1 for i the order of u");

    let noncentral_idem = idem.iter().rev().copied().find(|&e| !center.contains(e));
    b.verdict(
        "abelian",
        noncentral_idem.map(|e| (e, "idempotent outside the center".to_string())),
        None,
    );
    b.verdict(
        "local",
        first_rev(&|x| !data.units.contains(x) && !j.contains(x))
            .map(|x| (x, "non-unit outside J".to_string())),
        None,
    );
    let nil_outside_j = first_rev(&|x| data.nilpotents.contains(x) && !j.contains(x));
    b.verdict(
        "NI",
        nil_outside_j.map(|x| (x, "nilpotent outside J, so Nil is not an ideal".to_string())),
        None,
    );
    b.verdict(
        "two_primal",
        nil_outside_j.map(|x| (x, "nilpotent outside the prime radical J".to_string())),
        None,
    );
    b.verdict(
        "quasi_duo",
        first_rev(&|x| !j.contains(x) && j.contains(ring.mul(x, x)))
            .map(|x| (x, "x ∉ J but x² ∈ J, so R/J is not reduced".to_string())),
        Some("R/J reduced".to_string()),
    );
    b.verdict(
        "reduced",
        first_rev(&|x| x != zero && data.nilpotents.contains(x))
            .map(|x| (x, "nonzero nilpotent".to_string())),
        None,
    );
    b.verdict(
        "commutative",
        ring.first_noncommuting_pair()
            .map(|(x, y)| (x, format!("x·y ≠ y·x for y = {}", ring.label(y)))),
        None,
    );
    b.trivial("semi_clean", "x = (x − 1) + 1 with x − 1 periodic");
    b.trivial("strongly_pi_regular", "x^n = x^(n+k) lies in x^(n+1)R");

    RingProfile {
        expr: ring.expr().to_string(),
        order: ring.order(),
        characteristic: ring.characteristic(),
        uniform,
        m,
        radical_size: j.len(),
        flags: b.flags,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cyclic_ring;

    #[test]
    fn z4_and_z6() {
        let p = classify_ring(&cyclic_ring(4).unwrap(), ProfileOptions::default());
        assert_eq!(p.holds("strongly_nil_clean"), Some(true));
        assert_eq!(p.holds("local"), Some(true));
        assert_eq!(p.holds("potent"), Some(false));
        assert_eq!(p.flags.len(), 21);
        let p = classify_ring(&cyclic_ring(6).unwrap(), ProfileOptions::default());
        assert_eq!(p.holds("potent"), Some(true));
        assert_eq!(p.flag("nil_clean").witness.as_ref().unwrap().element, 5);
        assert_eq!(p.holds("m_nil_clean"), Some(true));
    }

    #[test]
    fn trivial_flags_are_exactly_the_listed_ones() {
        let p = classify_ring(&cyclic_ring(12).unwrap(), ProfileOptions::default());
        let trivial: Vec<&str> = p
            .flags
            .iter()
            .filter(|f| f.status == Status::TriviallyTrue)
            .map(|f| f.name)
            .collect();
        let mut want = TRIVIAL_FLAGS.to_vec();
        want.sort();
        let mut got = trivial.clone();
        got.sort();
        assert_eq!(got, want);
    }
}
