//! Restriction of wreath-product characters to `G(r,q,n)`.
//!
//! The quotient `G(r,1,n)/G(r,q,n) ≅ Z_q` twists irreducibles of the full
//! group: tensoring `χ^λ` with the linear character `ω^(t·m·colorsum)`
//! (`m = r/q`) permutes the index multipartitions by shifting component
//! indices, `λ_j -> λ_{(j - t·m) mod r}`. Restrictions of `χ^λ` and `χ^μ`
//! to the subgroup coincide exactly when `λ` and `μ` lie in one shift
//! orbit, and `Res χ^λ` breaks into `s` distinct irreducibles of equal
//! degree, where `s` is the orbit stabilizer order. Irreducibles of
//! `G(r,q,n)` are therefore labelled by a canonical necklace (the orbit)
//! plus an index `δ ∈ 0..s`.
//!
//! On a subgroup class that does not split, the `s` components all take the
//! same value, namely `χ^λ` at that class divided by `s` — still a
//! cyclotomic integer, computed here exactly. Values on split classes are
//! not determined by exact combinatorics in this module; the floating-point
//! oracle recovers them for small groups.

use serde::Serialize;

use crate::cyclotomic::CycloInt;
use crate::error::{Error, Result};
use crate::group::{splitting_number, type_in_subgroup, GroupKey};
use crate::mn::{character_value, degree};
use crate::necklace::{necklace_of, Necklace};
use crate::partition::MultiPartition;

/// The index shift induced on `λ` by tensoring with the `t`-th power of the
/// generating linear character of the quotient: `λ'_j = λ_{(j - t·m) mod r}`
/// with `m = r/q`.
pub fn h_shift(lambda: &MultiPartition, t: usize, q: usize) -> MultiPartition {
    let r = lambda.r();
    assert!(q >= 1 && r.is_multiple_of(q), "q must divide r");
    let m = r / q;
    let shift = (t % q) * m;
    let components = (0..r)
        .map(|j| lambda.component((j + r - shift) % r).clone())
        .collect();
    MultiPartition::new(components)
}

/// The distinct multipartitions in the shift orbit of `lambda`, in the
/// order first reached as `t` increases from 0.
pub fn orbit(lambda: &MultiPartition, q: usize) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    for t in 0..q {
        let shifted = h_shift(lambda, t, q);
        if !out.contains(&shifted) {
            out.push(shifted);
        }
    }
    out
}

/// The number of shifts fixing `lambda`; always divides `q`.
pub fn stabilizer_order(lambda: &MultiPartition, q: usize) -> usize {
    q / orbit(lambda, q).len()
}

/// A label for one irreducible character of `G(r,q,n)`: the canonical
/// necklace of a shift orbit together with a component index `delta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NecklaceLabel {
    pub necklace: Necklace,
    pub delta: usize,
    pub stab: usize,
}

impl NecklaceLabel {
    /// The canonical multipartition whose restriction this label refines.
    pub fn source(&self) -> MultiPartition {
        self.necklace.to_multipartition()
    }

    /// The degree of the labelled irreducible: `deg χ^λ / stab`.
    pub fn component_degree(&self) -> u64 {
        let d = degree(&self.source());
        assert!(
            d.is_multiple_of(self.stab as u64),
            "degree {d} not divisible by stabilizer order {}",
            self.stab
        );
        d / self.stab as u64
    }
}

/// Labels for all irreducible characters of `G(r,q,n)`, grouped by orbit.
/// Orbits appear by their first representative in `MultiPartition`
/// enumeration order; within an orbit, `delta` runs over `0..stab`.
pub fn irreducible_labels(key: &GroupKey) -> Vec<NecklaceLabel> {
    let q = key.q();
    let mut seen: Vec<Necklace> = Vec::new();
    let mut out = Vec::new();
    for lambda in MultiPartition::enumerate(key.r(), key.n()) {
        let canon = necklace_of(&lambda, q)
            .expect("enumeration matches key")
            .canonical();
        if seen.contains(&canon) {
            continue;
        }
        let stab = canon.stabilizer_order();
        for delta in 0..stab {
            out.push(NecklaceLabel {
                necklace: canon.clone(),
                delta,
                stab,
            });
        }
        seen.push(canon);
    }
    out
}

/// The exact value of any single component of `Res χ^λ` on a subgroup class
/// that does not split: `χ^λ(class) / stab`. Fails if the class lies
/// outside the subgroup or splits (its component values then differ and are
/// not determined here).
pub fn restricted_value_nonsplit(
    lambda: &MultiPartition,
    class_type: &MultiPartition,
    q: usize,
) -> Result<CycloInt> {
    if !type_in_subgroup(class_type, q) {
        return Err(Error::InvalidInput(format!(
            "class {class_type} lies outside the index-{q} subgroup"
        )));
    }
    if splitting_number(class_type, q) != 1 {
        return Err(Error::InvalidInput(format!(
            "class {class_type} splits in the index-{q} subgroup"
        )));
    }
    let s = stabilizer_order(lambda, q);
    let full = character_value(lambda, class_type);
    full.div_exact(s as i64).ok_or_else(|| {
        Error::ValidationFailure(format!(
            "value of χ^{lambda} at {class_type} is not divisible by {s}"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugacy_classes_brute, type_color_sum};
    use crate::partition::Partition;

    fn mp(lists: &[&[usize]]) -> MultiPartition {
        MultiPartition::new(lists.iter().map(|l| Partition::new(l.to_vec())).collect())
    }

    #[test]
    fn test_h_shift_layout() {
        let lambda = mp(&[&[2], &[1], &[], &[]]);
        assert_eq!(h_shift(&lambda, 0, 2), lambda);
        assert_eq!(h_shift(&lambda, 1, 2), mp(&[&[], &[], &[2], &[1]]));
        assert_eq!(h_shift(&h_shift(&lambda, 1, 2), 1, 2), lambda);
        // q = r shifts by single steps
        assert_eq!(h_shift(&lambda, 1, 4), mp(&[&[], &[2], &[1], &[]]));
    }

    #[test]
    fn test_shift_matches_linear_twist() {
        // χ^(shifted λ) = ω^(t·m·colorsum) · χ^λ, exactly.
        let r = 6;
        let q = 3;
        let m = r / q;
        let lambdas = MultiPartition::enumerate(r, 2);
        let types = MultiPartition::enumerate(r, 2);
        for lambda in &lambdas {
            for t in 0..q {
                let shifted = h_shift(lambda, t, q);
                for class in &types {
                    let twist =
                        CycloInt::root_of_unity(r, (t * m * type_color_sum(class)) % r);
                    assert_eq!(
                        character_value(&shifted, class),
                        &twist * &character_value(lambda, class),
                        "λ={lambda} t={t} class={class}"
                    );
                }
            }
        }
    }

    #[test]
    fn test_orbit_and_stabilizer() {
        assert_eq!(orbit(&mp(&[&[2], &[]]), 2).len(), 2);
        assert_eq!(stabilizer_order(&mp(&[&[2], &[]]), 2), 1);
        assert_eq!(stabilizer_order(&mp(&[&[1], &[1]]), 2), 2);
        assert_eq!(stabilizer_order(&mp(&[&[1], &[1], &[1]]), 3), 3);
        assert_eq!(stabilizer_order(&mp(&[&[1], &[], &[1], &[]]), 4), 2);
        // stabilizer computed on λ agrees with the necklace's
        for lambda in MultiPartition::enumerate(4, 3) {
            for q in [1, 2, 4] {
                assert_eq!(
                    stabilizer_order(&lambda, q),
                    necklace_of(&lambda, q).unwrap().stabilizer_order(),
                    "λ={lambda} q={q}"
                );
            }
        }
    }

    #[test]
    fn test_restrictions_agree_on_orbit() {
        // Characters in one shift orbit restrict identically: equal values
        // on every member class.
        let q = 2;
        for lambda in MultiPartition::enumerate(4, 2) {
            let shifted = h_shift(&lambda, 1, q);
            for class in MultiPartition::enumerate(4, 2) {
                if !type_in_subgroup(&class, q) {
                    continue;
                }
                assert_eq!(
                    character_value(&lambda, &class),
                    character_value(&shifted, &class),
                    "λ={lambda} class={class}"
                );
            }
        }
    }

    #[test]
    fn test_label_count_matches_class_count() {
        for (r, q, n) in [
            (2, 2, 2),
            (2, 2, 3),
            (2, 2, 4),
            (3, 3, 2),
            (3, 3, 3),
            (4, 2, 2),
            (4, 4, 2),
            (6, 3, 2),
        ] {
            let key = GroupKey::new(r, q, n).unwrap();
            let labels = irreducible_labels(&key);
            let classes = conjugacy_classes_brute(&key, 50_000).unwrap();
            assert_eq!(labels.len(), classes.len(), "{key}");
        }
    }

    #[test]
    fn test_component_degree_sum_of_squares() {
        for (r, q, n) in [
            (2, 2, 2),
            (2, 2, 4),
            (3, 3, 3),
            (4, 2, 2),
            (4, 4, 2),
            (6, 3, 2),
        ] {
            let key = GroupKey::new(r, q, n).unwrap();
            let total: u128 = irreducible_labels(&key)
                .iter()
                .map(|l| {
                    let d = l.component_degree() as u128;
                    d * d
                })
                .sum();
            assert_eq!(total, key.order(), "{key}");
        }
    }

    #[test]
    fn test_three_two_dimensional_components() {
        // ([1],[1],[1]) in G(3,3,3): fully symmetric orbit, three
        // components of degree 2 each.
        let nu = mp(&[&[1], &[1], &[1]]);
        assert_eq!(degree(&nu), 6);
        assert_eq!(stabilizer_order(&nu, 3), 3);
        let key = GroupKey::new(3, 3, 3).unwrap();
        let labels = irreducible_labels(&key);
        let nu_labels: Vec<_> = labels.iter().filter(|l| l.source() == nu).collect();
        assert_eq!(nu_labels.len(), 3);
        assert!(nu_labels.iter().all(|l| l.component_degree() == 2));
    }

    #[test]
    fn test_restriction_norm_counts_components() {
        // ⟨Res χ^λ, Res χ^λ⟩ over the subgroup equals the number of
        // components s: Σ_C |C| · |χ^λ(C)|² = |G(r,q,n)| · s, summed over
        // brute-forced subgroup classes with exact character values.
        for (r, q, n) in [(2, 2, 3), (2, 2, 4), (3, 3, 3), (4, 2, 2), (6, 3, 2)] {
            let key = GroupKey::new(r, q, n).unwrap();
            let classes = conjugacy_classes_brute(&key, 50_000).unwrap();
            for lambda in MultiPartition::enumerate(r, n) {
                let s = stabilizer_order(&lambda, q);
                let mut acc = CycloInt::zero(r);
                for class in &classes {
                    let v = character_value(&lambda, &class.rep.type_of());
                    acc = &acc + &(&v * &v.conjugate()).scale(class.size() as i64);
                }
                assert_eq!(
                    acc,
                    CycloInt::from_int(r, (key.order() as i64) * (s as i64)),
                    "norm of Res χ^{lambda} in {key}"
                );
            }
        }
    }

    #[test]
    fn test_restricted_value_nonsplit() {
        // Symmetric λ = ([2],[2]) in G(2,2,4): stab 2, so each component
        // has degree 6/2 = 3 at the (non-split) identity class.
        let lambda = mp(&[&[2], &[2]]);
        let id = crate::mn::identity_type(2, 4);
        assert_eq!(
            restricted_value_nonsplit(&lambda, &id, 2).unwrap(),
            CycloInt::from_int(2, 3)
        );
        // Classes outside the subgroup or split classes are rejected.
        let outside = mp(&[&[1, 1, 1], &[1]]);
        assert!(restricted_value_nonsplit(&lambda, &outside, 2).is_err());
        let split = mp(&[&[4], &[]]);
        assert!(restricted_value_nonsplit(&lambda, &split, 2).is_err());
    }

    #[test]
    fn test_labels_are_deterministic_and_canonical() {
        let key = GroupKey::new(2, 2, 4).unwrap();
        let labels = irreducible_labels(&key);
        assert_eq!(labels.len(), 13);
        // First orbit comes from ([4],[]); its canonical rotation puts the
        // empty component first. Asymmetric: one label.
        assert_eq!(labels[0].source(), mp(&[&[], &[4]]));
        assert_eq!(labels[0].stab, 1);
        assert_eq!(labels[0].delta, 0);
        // Symmetric orbits contribute consecutive deltas.
        let sym: Vec<_> = labels.iter().filter(|l| l.stab == 2).collect();
        assert_eq!(sym.len(), 4);
        assert_eq!(
            sym.iter().map(|l| l.delta).collect::<Vec<_>>(),
            vec![0, 1, 0, 1]
        );
        // Canonical necklaces are fixed points of canonicalization.
        for l in &labels {
            assert_eq!(l.necklace.canonical(), l.necklace);
        }
    }
}
