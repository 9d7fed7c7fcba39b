use super::checks::{context, endo, group, periodic, weak, Ctx};
use super::InstanceRecord;

/// A registered result. `run` is `None` for statements with no finite
/// content to check.
pub struct Entry {
    pub id: &'static str,
    pub statement: &'static str,
    pub checks: &'static str,
    pub run: Option<fn(&Ctx) -> Vec<InstanceRecord>>,
}

const fn check(
    id: &'static str,
    statement: &'static str,
    checks: &'static str,
    run: fn(&Ctx) -> Vec<InstanceRecord>,
) -> Entry {
    Entry {
        id,
        statement,
        checks,
        run: Some(run),
    }
}

const fn vacuous(id: &'static str, statement: &'static str, why: &'static str) -> Entry {
    Entry {
        id,
        statement,
        checks: why,
        run: None,
    }
}

const FINITE_MATRIX: &str =
    "every hypothesis and conclusion holds for all finite rings, so no finite instance can separate them";

static REGISTRY: &[Entry] = &[
    check(
        "thm-3.4",
        "R periodic with Nil(R) an ideal and G locally finite imply RG periodic.",
        "Nil(R)G is a two-sided ideal of RG and every element of it is nilpotent.",
        group::nil_coefficients,
    ),
    check(
        "thm-groupring-potent",
        "RG is potent iff R is potent, G is torsion abelian, and no prime of char R divides the order of a finite subgroup of G.",
        "the criterion against an exhaustive potency scan of RG; any disagreement fails with both verdicts.",
        group::potency_criterion,
    ),
    check(
        "thm-3.7",
        "R perfect periodic and G locally finite imply RG periodic.",
        "J(R)G is a nil ideal and RG → (R/J(R))G is onto with kernel J(R)G.",
        group::radical_coefficients,
    ),
    check(
        "prop-2.2",
        "If x^m = x^n for all x (m > n), every x is a sum of an (m−n+1)-potent and a nilpotent of index ≤ n that annihilate each other.",
        "uniform period (n, k) and the split of every element with b^(k+1) = b, a^n = 0, ab = ba = 0.",
        periodic::uniform_split,
    ),
    check(
        "rem-2.2",
        "With a uniform law x^(n+2) = x^n the characteristic divides 2^n·3; a uniform law x^m = x^n of opposite parities forces R potent.",
        "both parts on the uniform period of each instance.",
        periodic::remark,
    ),
    check(
        "prop-2.1",
        "For weakly periodic R: J(R) nil with R/J(R) potent, R quasi-duo, and R NI are equivalent.",
        "the three conditions computed independently (R/J potent, no x ∉ J with x² ∈ J, Nil ⊆ J) agree.",
        periodic::quasi_duo,
    ),
    check(
        "thm-2.3",
        "R periodic with Nil(R) an ideal implies M_n(R) periodic.",
        "J(M_n(R)) = M_n(J(R)) by brute force, and |M_n(R)/J| = |R/J|^(n²).",
        periodic::matrix_radical,
    ),
    check(
        "rem-s3-split",
        "In characteristic 2, R·S3 ≅ R·C2 ⊕ M_2(R).",
        "equal invariants: order, |J|, unit, idempotent, nilpotent and center counts, uniform period.",
        group::s3_split,
    ),
    check(
        "prop-sumpotents",
        "Over a potent ring every matrix is a tripotent plus a potent, and an idempotent plus a potent when 3 is a unit.",
        "a split of every matrix, found by search and re-verified.",
        periodic::sum_potents,
    ),
    vacuous(
        "conj-1",
        "Periodic semiperfect R implies M_n(R) periodic.",
        FINITE_MATRIX,
    ),
    check(
        "thm-2.9",
        "For a Morita context with MN and NM nilpotent, R is periodic iff A and B are.",
        "J(R) = [[J(A), M], [N, J(B)]] by brute force, |R/J| = |A/J(A)|·|B/J(B)|, and K^(2l) has the predicted blocks.",
        context::morita_radical,
    ),
    check(
        "cor-2.9-triangular",
        "T_n(R) is periodic iff R is.",
        "structural and brute-force J(T_n(R)) agree and |T_n(R)/J| = |R/J|^n.",
        context::triangular,
    ),
    check(
        "cor-2.10",
        "For s central nilpotent, K_s(R) is periodic iff R is.",
        "MN = NM = sR in the corners, MN nilpotent iff s ∈ J(R), and the Morita radical structure when s is nilpotent.",
        context::formal_k,
    ),
    check(
        "thm-2.11",
        "For s central nilpotent, M_n(R; s) is periodic iff R is.",
        "M_2(R; s) = K_(s²)(R) elementwise, the two product formulas for column/row blocks of M_n(R; s), MN ⊆ sA and NM = s²R.",
        context::formal_ms,
    ),
    check(
        "cor-k2-nil-clean",
        "K_2(R) is nil-clean iff R is.",
        "exhaustive nil-clean verdicts of R and K_2(R) agree.",
        context::k2_nil_clean,
    ),
    check(
        "lem-2.1",
        "R abelian periodic with J(M_n(R)) nil implies M_n(R) periodic.",
        "q = lcm{|F|^i − 1} + 1 over the fields F of R/J, with A^q − A nilpotent for every matrix A.",
        periodic::q_exponent,
    ),
    check(
        "thm-3.11",
        "E(G) is periodic iff G is finite.",
        "E(G)/J ≅ ∏ M_(n_j)(F_p): |E/J| = ∏ p^(n_j²) and In(E/J) = max n_j; the matrix model agrees with the generator-image oracle.",
        endo::semisimple_part,
    ),
    check(
        "thm-3.12",
        "E(G) is strongly m-nil clean iff G is finite and (p^i − 1) | (m − 1) for every prime p and i ≤ In(E(G_p)/J).",
        "the divisibility criterion against the brute-force strongly m-nil clean oracle on every (G, m).",
        endo::divisibility,
    ),
    check(
        "cor-3.13",
        "For m ≢ 1 mod 3 and mod 8, E(G) is strongly m-nil clean iff each p-component has pairwise distinct cyclic exponents and (p − 1) | (m − 1).",
        "the criterion against the oracle for every admissible m in range.",
        endo::distinct_exponents,
    ),
    check(
        "cor-3.13-even",
        "For m even with m ≢ 1 mod 3, E(G) is strongly m-nil clean iff G ≅ ⊕_(j=1..t) Z_(2^j).",
        "the oracle against three readings: consecutive exponents 1..t (literal), a 2-group with distinct exponents, and, at m = 2, a cyclic 2-group. Disagreement with a reading other than the distinct one is a finding.",
        endo::even_m,
    ),
    check(
        "lem-5.1",
        "The tensor product of commutative periodic algebras is periodic.",
        "(u⊗v)^l = u⊗v with l = (n−1)(m−1)+1 on pure potent tensors, and x⊗y − e⊗f nilpotent for the potent parts e, f.",
        weak::tensor_exponents,
    ),
    check(
        "thm-5.2",
        "The tensor product of periodic algebras with Nil an ideal is periodic.",
        "the ideal generated by Nil(A)⊗B and A⊗Nil(B) is nil and the quotient by it is potent.",
        weak::tensor_nil_ideal,
    ),
    check(
        "prop-1.6",
        "A weakly periodic ring has positive characteristic ∏ p_i^(n_i), splits as ∏ R/(p_i^(n_i)R), and finite products of weakly periodic rings are weakly periodic.",
        "the CRT map is an isomorphism; on products, (e1, e2)^l = (e1, e2) with l = (n1−1)(n2−1)+1 and the nilpotent part has index max(m1, m2).",
        weak::crt_and_products,
    ),
    check(
        "prop-1.7",
        "For a nil ideal I, R is weakly periodic iff R/I is.",
        "for I = J and I = pR (p nilpotent): the potent part of every x̄ lifts to a potent f with x − f nilpotent.",
        weak::lift_mod_nil,
    ),
    check(
        "lem-5.4",
        "T = S + K with S a weakly periodic subring and K a nil ideal implies T weakly periodic.",
        "with S the diagonal blocks and K the trace ideal: t = s + k, s = a + b, and c = b + k is nilpotent for every t.",
        context::split_s_plus_k,
    ),
    check(
        "thm-5.5",
        "For a Morita context with MN and NM nilpotent, R is weakly periodic iff A and B are.",
        "K = [[MN, M], [N, NM]] is a nilpotent ideal with K^(2l) = [[(MN)^l, (MN)^l M], [(NM)^l N, (NM)^l]].",
        context::block_law,
    ),
    check(
        "lem-3.9",
        "RG weakly periodic implies R weakly periodic and Z(G) torsion.",
        "for R of prime characteristic p and central g: with g^n − g nilpotent of index k and p^l ≥ k, g^((n−1)p^l) = 1.",
        group::central_torsion,
    ),
    check(
        "thm-3.10",
        "R weakly periodic with p nilpotent and G a locally finite p-group imply RG weakly periodic.",
        "Δ is nil, augmentation is onto R with kernel Δ, and every x splits as f + nilpotent with f the potent part of ε(x).",
        group::augmentation_lift,
    ),
    check(
        "cor-3.11",
        "R periodic with p nilpotent and G a locally finite p-group imply RG periodic; RG periodic implies R periodic.",
        "Δ is nilpotent as an ideal, no element of Δ exceeds its ideal index, and ε is a ring map.",
        group::augmentation_nilpotent,
    ),
    check(
        "conj-2",
        "M_n(D) is weakly periodic iff D is a finite field.",
        "both sides hold for finite D; the probe re-verifies a potent plus nilpotent split of every matrix and logs the exponents used.",
        periodic::weakly_periodic_probe,
    ),
    vacuous("q-1", "Is M_n(R) periodic for periodic R?", FINITE_MATRIX),
    vacuous("q-2", "Is M_n(R) weakly periodic for periodic R?", FINITE_MATRIX),
    vacuous("q-3", "Is M_n(R) π-UU for periodic R?", FINITE_MATRIX),
    vacuous(
        "q-4",
        "Is M_n(R) π-UU for UU rings R?",
        "π-UU holds for every finite ring",
    ),
    vacuous(
        "q-5",
        "Is J(R) nil for π-UU rings R?",
        "J is nilpotent in every finite ring",
    ),
    vacuous(
        "q-6",
        "Is FG π-UU for F of prime characteristic with torsion units and G torsion?",
        "π-UU holds for every finite ring",
    ),
];

/// Registered checks in report order.
pub fn registry() -> &'static [Entry] {
    REGISTRY
}

pub fn entry(id: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.id == id)
}
