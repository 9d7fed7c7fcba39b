use std::fmt;

use super::{Elem, FiniteRing};

/// What a subset is known to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetKind {
    Plain,
    Ideal,
    Radical,
    Nilpotents,
    Units,
    Idempotents,
    Center,
}

impl fmt::Display for SubsetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SubsetKind::Plain => "plain",
            SubsetKind::Ideal => "ideal",
            SubsetKind::Radical => "radical",
            SubsetKind::Nilpotents => "nilpotents",
            SubsetKind::Units => "units",
            SubsetKind::Idempotents => "idempotents",
            SubsetKind::Center => "center",
        };
        f.write_str(s)
    }
}

/// A set of elements of one particular ring, as a bitmap plus the sorted
/// member list.
#[derive(Clone)]
pub struct Subset {
    ring_id: u64,
    bits: Vec<u64>,
    members: Vec<Elem>,
    kind: SubsetKind,
}

impl Subset {
    pub fn from_members<I: IntoIterator<Item = Elem>>(
        ring: &FiniteRing,
        members: I,
        kind: SubsetKind,
    ) -> Subset {
        let mut bits = vec![0u64; ring.order().div_ceil(64)];
        for x in members {
            assert!((x as usize) < ring.order(), "element {x} out of range");
            bits[x as usize / 64] |= 1 << (x % 64);
        }
        Self::from_bits(ring.id(), bits, kind)
    }

    pub fn from_mask(ring: &FiniteRing, mask: &[bool], kind: SubsetKind) -> Subset {
        assert_eq!(mask.len(), ring.order());
        Self::from_members(
            ring,
            mask.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i as Elem),
            kind,
        )
    }

    pub fn singleton_zero(ring: &FiniteRing, kind: SubsetKind) -> Subset {
        Self::from_members(ring, [ring.zero()], kind)
    }

    pub fn full(ring: &FiniteRing, kind: SubsetKind) -> Subset {
        Self::from_members(ring, ring.elements(), kind)
    }

    fn from_bits(ring_id: u64, bits: Vec<u64>, kind: SubsetKind) -> Subset {
        let mut members = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            let mut word = word;
            while word != 0 {
                let b = word.trailing_zeros();
                members.push((w * 64) as Elem + b);
                word &= word - 1;
            }
        }
        Subset {
            ring_id,
            bits,
            members,
            kind,
        }
    }

    pub fn ring_id(&self) -> u64 {
        self.ring_id
    }

    pub fn kind(&self) -> SubsetKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: SubsetKind) -> Subset {
        self.kind = kind;
        self
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.bits
            .get(x as usize / 64)
            .is_some_and(|w| w >> (x % 64) & 1 == 1)
    }

    /// Members in ascending index order.
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn belongs_to(&self, ring: &FiniteRing) -> bool {
        self.ring_id == ring.id()
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.ring_id == other.ring_id && self.members == other.members
    }
}

impl Eq for Subset {}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset<{}>{:?}", self.kind, self.members)
    }
}
