use serde::Serialize;

use super::{Elem, FiniteRing, Subset, SubsetKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalSource {
    /// Predicted by the construction.
    Structural,
    /// Quasi-regularity scan over the nilpotents.
    BruteForce,
}

/// The Jacobson radical with its nilpotency index as an ideal.
#[derive(Clone, Debug)]
pub struct Radical {
    pub set: Subset,
    /// Least l with `J^l = 0`.
    pub nilpotency_index: u32,
    pub source: RadicalSource,
}

impl FiniteRing {
    /// `J(R)`, from the construction's structural description when it has
    /// one and from the brute-force scan otherwise.
    ///
    /// In a finite ring J is nilpotent, so the lower nilradical, the
    /// Levitzki radical and the upper nilradical all coincide with it.
    pub fn jacobson_radical(&self) -> Radical {
        self.inner
            .cache
            .radical
            .get_or_init(|| {
                self.jacobson_radical_structural()
                    .unwrap_or_else(|| self.jacobson_radical_brute())
            })
            .clone()
    }

    /// The structural prediction alone, if the construction provides one
    /// and it is a nilpotent set.
    pub fn jacobson_radical_structural(&self) -> Option<Radical> {
        let members = self.structural_radical_members()?;
        self.radical_from(
            Subset::from_members(self, members, SubsetKind::Radical),
            RadicalSource::Structural,
        )
    }

    /// `{x : 1 - rx is a unit for every r}`, searched among the nilpotents.
    pub fn jacobson_radical_brute(&self) -> Radical {
        let data = self.element_data();
        let one = self.one();
        let members: Vec<Elem> = data
            .nilpotents
            .members()
            .iter()
            .copied()
            .filter(|&x| {
                self.elements()
                    .all(|r| data.units.contains(self.sub(one, self.mul(r, x))))
            })
            .collect();
        self.radical_from(
            Subset::from_members(self, members, SubsetKind::Radical),
            RadicalSource::BruteForce,
        )
        .expect("Jacobson radical of a finite ring is nilpotent")
    }

    fn radical_from(&self, set: Subset, source: RadicalSource) -> Option<Radical> {
        let nilpotency_index = self.ideal_nilpotency_index(&set)?;
        Some(Radical {
            set,
            nilpotency_index,
            source,
        })
    }
}
