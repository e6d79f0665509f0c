//! Quasi Steinberg detection two independent ways: brute-force scans of
//! exact character values over p-regular classes, and closed-form lookup
//! tables, each written so the other can audit it.
//!
//! A character `χ` of a finite group is *quasi p-Steinberg* when
//! `χ(g) ≠ 0` for every p-regular element `g` (order coprime to `p`).
//! Linear characters qualify trivially. For the full wreath products
//! `G(r,1,n)` the non-linear positives reduce to a short list of shapes;
//! the index-`q` subgroups `G(r,q,n)` contribute two further families at
//! `n = 3` and `n = 4`, visible only after restriction splits. The
//! stronger Feit condition — `|χ(g)| = |C(g)|_p` at every p-regular `g`
//! — is checked alongside the brute-force scan for the wreath groups.

use std::collections::HashMap;

use serde::Serialize;

use crate::clifford::{
    irreducible_labels, restricted_value_nonsplit, stabilizer_order, NecklaceLabel,
};
use crate::cyclotomic::CycloInt;
use crate::error::{Error, Result};
use crate::group::{
    centralizer_order_full, is_p_regular_type, p_part, splitting_number, type_in_subgroup,
    GroupKey,
};
use crate::mn::{character_value, degree};
use crate::oracle::{brute_table, match_restriction, split_class_values, BruteTable, OracleConfig};
use crate::partition::{multipartition_count, MultiPartition, Partition};

/// Every `(n, μ, p)` with `μ ⊢ n` non-linear for which the symmetric-group
/// character `ϰ^μ` is nonzero on all p-regular classes. The list is
/// complete: no non-linear positives exist for `n ∈ {2, 7}` or `n ≥ 9`.
pub const SN_QUASI_TABLE: &[(usize, &[usize], u64)] = &[
    (3, &[2, 1], 2),
    (4, &[2, 2], 2),
    (4, &[3, 1], 3),
    (4, &[2, 1, 1], 3),
    (5, &[4, 1], 2),
    (5, &[2, 1, 1, 1], 2),
    (5, &[3, 2], 5),
    (5, &[2, 2, 1], 5),
    (6, &[3, 2, 1], 2),
    (6, &[4, 2], 3),
    (6, &[2, 2, 1, 1], 3),
    (8, &[5, 2, 1], 2),
    (8, &[3, 2, 1, 1, 1], 2),
];

/// The `(n, μ, degree, p)` rows of [`SN_QUASI_TABLE`] where nonvanishing
/// is automatic from the degree alone: an irreducible of degree `d ∈ {2,3}`
/// of any finite group cannot vanish on a d-regular element, nor one of
/// degree 4 on a 2-regular element. Kept separately so that the general
/// scan can be cross-checked against this a-priori sublist.
pub const SMALL_DEGREE_QUASI: &[(usize, &[usize], u64, u64)] = &[
    (3, &[2, 1], 2, 2),
    (4, &[3, 1], 3, 3),
    (4, &[2, 1, 1], 3, 3),
    (4, &[2, 2], 2, 2),
    (5, &[4, 1], 4, 2),
    (5, &[2, 1, 1, 1], 4, 2),
];

/// For shapes with one component of size `n−1` plus a detached single box:
/// the unique prime at which every such character is quasi p-Steinberg.
/// None exists once `n ≥ 5`.
pub fn detached_box_prime(n: usize) -> Option<u64> {
    match n {
        2 | 4 => Some(2),
        3 => Some(3),
        _ => None,
    }
}

/// Where the boxes of a multipartition sit, as coarse as the closed-form
/// tables need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharShape<'a> {
    /// All of `n` in a single component.
    Concentrated { slot: usize, mu: &'a Partition },
    /// A component of size `n−1` plus a single box in another slot.
    MainPlusBox {
        main: usize,
        mu: &'a Partition,
        box_slot: usize,
    },
    /// Anything else.
    Spread,
}

/// Classifies the support of `lambda`. For `n = 2` with two single boxes,
/// the lower slot is reported as the main component.
pub fn shape_of(lambda: &MultiPartition) -> CharShape<'_> {
    let nonempty: Vec<(usize, &Partition)> = lambda
        .components()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .collect();
    match nonempty.as_slice() {
        [(slot, mu)] => CharShape::Concentrated { slot: *slot, mu },
        [(a, pa), (b, pb)] => {
            if pb.size() == 1 {
                CharShape::MainPlusBox {
                    main: *a,
                    mu: pa,
                    box_slot: *b,
                }
            } else if pa.size() == 1 {
                CharShape::MainPlusBox {
                    main: *b,
                    mu: pb,
                    box_slot: *a,
                }
            } else {
                CharShape::Spread
            }
        }
        _ => CharShape::Spread,
    }
}

/// Whether `χ^λ` is one-dimensional: all of `n` in one component shaped
/// `(n)` or `(1,…,1)`.
pub fn is_linear(lambda: &MultiPartition) -> bool {
    if lambda.total() == 0 {
        return true;
    }
    match lambda.single_nonempty() {
        Some((_, mu)) => mu.len() == 1 || mu.parts().iter().all(|&x| x == 1),
        None => false,
    }
}

/// Closed-form quasi p-Steinberg test for `G(r,1,n)`, valid for every
/// `r ≥ 1`: linear shapes always qualify; a concentrated shape qualifies
/// exactly on the [`SN_QUASI_TABLE`] rows; a main-component-plus-box shape
/// exactly at [`detached_box_prime`]; nothing else ever does.
pub fn closed_form_r1(lambda: &MultiPartition, p: u64) -> bool {
    if is_linear(lambda) {
        return true;
    }
    match shape_of(lambda) {
        CharShape::Concentrated { mu, .. } => SN_QUASI_TABLE
            .iter()
            .any(|&(n, parts, tp)| n == lambda.total() && tp == p && mu.parts() == parts),
        CharShape::MainPlusBox { .. } => detached_box_prime(lambda.total()) == Some(p),
        CharShape::Spread => false,
    }
}

/// The outcome of one quasi Steinberg decision.
#[derive(Clone, Debug, Serialize)]
pub struct QSVerdict {
    pub group: GroupKey,
    /// Shape labelling the character; for `q > 1` the character is a
    /// component of `Res χ^λ`.
    pub lambda: MultiPartition,
    /// Which component of the restriction, when `q > 1`.
    pub delta: Option<usize>,
    /// Number of components `Res χ^λ` splits into (1 when `q = 1`).
    pub stab: usize,
    pub prime: u64,
    pub degree: u64,
    pub linear: bool,
    pub quasi: bool,
    /// First p-regular class type carrying a zero, when `quasi` is false.
    pub witness: Option<MultiPartition>,
    /// Whether the Feit condition also holds; computed only when the scan
    /// ran to completion on a non-linear character with `q = 1`.
    pub feit: Option<bool>,
}

fn check_membership(key: &GroupKey, lambda: &MultiPartition) -> Result<()> {
    if lambda.r() != key.r() || lambda.total() != key.n() {
        return Err(Error::InvalidInput(format!(
            "shape {lambda} does not label a character of {key}"
        )));
    }
    Ok(())
}

fn check_prime(key: &GroupKey, p: u64) -> Result<()> {
    if !key.primes().contains(&p) {
        return Err(Error::InvalidInput(format!(
            "{p} is not a prime divisor of |{key}|"
        )));
    }
    Ok(())
}

fn feit_holds_at(value: &CycloInt, t: &MultiPartition, p: u64) -> bool {
    match value.as_int() {
        Some(x) => x.unsigned_abs() as u128 == p_part(centralizer_order_full(t), p),
        None => false,
    }
}

/// Scans every p-regular class type of `G(r,1,n)` and reports the first
/// zero of `χ^λ`, or quasi = true with the Feit condition evaluated along
/// the way. Class types are visited in `MultiPartition::enumerate` order,
/// so witnesses are stable.
pub fn quasi_bruteforce_r1(key: &GroupKey, lambda: &MultiPartition, p: u64) -> Result<QSVerdict> {
    if key.q() != 1 {
        return Err(Error::InvalidInput(format!(
            "{key} is a proper subgroup; use a SubgroupClassifier"
        )));
    }
    check_membership(key, lambda)?;
    check_prime(key, p)?;
    let mut verdict = QSVerdict {
        group: *key,
        lambda: lambda.clone(),
        delta: None,
        stab: 1,
        prime: p,
        degree: degree(lambda),
        linear: is_linear(lambda),
        quasi: true,
        witness: None,
        feit: None,
    };
    if verdict.linear {
        return Ok(verdict);
    }
    let mut feit = true;
    for t in MultiPartition::enumerate(key.r(), key.n()) {
        if !is_p_regular_type(&t, p) {
            continue;
        }
        let value = character_value(lambda, &t);
        if value.is_zero() {
            verdict.quasi = false;
            verdict.witness = Some(t);
            return Ok(verdict);
        }
        feit = feit && feit_holds_at(&value, &t, p);
    }
    verdict.feit = Some(feit);
    Ok(verdict)
}

/// The Feit condition alone: `χ^λ(t)` is a rational integer with
/// `|χ^λ(t)| = |C(t)|_p` on every p-regular class type of `G(r,1,n)`.
pub fn feit_check_r1(key: &GroupKey, lambda: &MultiPartition, p: u64) -> Result<bool> {
    if key.q() != 1 {
        return Err(Error::InvalidInput(format!(
            "the Feit check is implemented for full wreath products, not {key}"
        )));
    }
    check_membership(key, lambda)?;
    check_prime(key, p)?;
    Ok(MultiPartition::enumerate(key.r(), key.n())
        .iter()
        .filter(|t| is_p_regular_type(t, p))
        .all(|t| feit_holds_at(&character_value(lambda, t), t, p)))
}

/// Brute-force verdicts for every non-linear shape of `G(r,1,n)` at every
/// prime dividing the group order, in enumeration order with primes
/// ascending. Refuses to start when `Y(r,n)` is larger than `max_shapes`.
pub fn classify_r1(key: &GroupKey, max_shapes: u128) -> Result<Vec<QSVerdict>> {
    if key.q() != 1 {
        return Err(Error::InvalidInput(format!(
            "{key} is a proper subgroup; use a SubgroupClassifier"
        )));
    }
    let count = multipartition_count(key.r(), key.n());
    if count > max_shapes {
        return Err(Error::ResourceLimit(format!(
            "{key} has {count} character shapes, more than the bound {max_shapes}"
        )));
    }
    let primes = key.primes();
    let mut out = Vec::new();
    for lambda in MultiPartition::enumerate(key.r(), key.n()) {
        if is_linear(&lambda) {
            continue;
        }
        for &p in &primes {
            out.push(quasi_bruteforce_r1(key, &lambda, p)?);
        }
    }
    Ok(out)
}

/// Whether the nonzero components are exactly three single boxes in slots
/// `j, j + r/3, j + 2r/3`.
fn equally_spaced_boxes(lambda: &MultiPartition) -> bool {
    let r = lambda.r();
    if !r.is_multiple_of(3) {
        return false;
    }
    let slots: Vec<usize> = (0..r).filter(|&j| !lambda.component(j).is_empty()).collect();
    slots.len() == 3
        && slots.iter().all(|&j| lambda.component(j).size() == 1)
        && slots[1] - slots[0] == r / 3
        && slots[2] - slots[1] == r / 3
}

/// Whether the nonzero components are exactly two equal partitions of 2 in
/// slots `j` and `j + r/2`.
fn opposite_equal_pairs(lambda: &MultiPartition) -> bool {
    let r = lambda.r();
    if !r.is_multiple_of(2) {
        return false;
    }
    let slots: Vec<usize> = (0..r).filter(|&j| !lambda.component(j).is_empty()).collect();
    slots.len() == 2
        && slots[1] - slots[0] == r / 2
        && lambda.component(slots[0]).size() == 2
        && lambda.component(slots[0]) == lambda.component(slots[1])
}

/// Closed-form quasi p-Steinberg test for the components of `Res χ^λ` in
/// `G(r,q,n)`. The verdict is the same for every component, so only the
/// source shape is needed. Linear components always qualify. A non-linear
/// component qualifies exactly when one of three things happens: the
/// restriction stays irreducible and the full-group closed form accepts
/// `(λ, p)`; or `n = 3`, `p = 2`, `3 | q` and the shape is three single
/// boxes spaced `r/3` apart (each component then has degree 2); or
/// `n = 4`, `p = 3`, `2 | q` and the shape is two equal two-box components
/// spaced `r/2` apart (components of degree 3).
pub fn closed_form_rqn(key: &GroupKey, lambda: &MultiPartition, p: u64) -> bool {
    let s = stabilizer_order(lambda, key.q()) as u64;
    if degree(lambda) / s == 1 {
        return true;
    }
    if s == 1 && closed_form_r1(lambda, p) {
        return true;
    }
    if key.n() == 3 && p == 2 && key.q().is_multiple_of(3) && equally_spaced_boxes(lambda) {
        return true;
    }
    if key.n() == 4 && p == 3 && key.q().is_multiple_of(2) && opposite_equal_pairs(lambda) {
        return true;
    }
    false
}

/// Brute-force quasi Steinberg decisions inside one subgroup `G(r,q,n)`.
///
/// Exact values decide every class when the restriction is irreducible,
/// and every non-split class otherwise. Values of individual components on
/// split classes come from the independently computed numerical table,
/// built once per classifier when the group order fits the configured
/// bound. Without a table, verdicts that would need split-class values
/// fall back to a scan of the exactly decidable classes: a zero there
/// still settles the verdict, otherwise the call reports a resource limit
/// rather than guessing.
pub struct SubgroupClassifier {
    key: GroupKey,
    tol: f64,
    oracle: Option<BruteTable>,
    matched_rows: HashMap<MultiPartition, Vec<usize>>,
    component_values: HashMap<MultiPartition, HashMap<(usize, usize), crate::cyclotomic::Complex64>>,
}

impl SubgroupClassifier {
    pub fn new(key: &GroupKey, cfg: &OracleConfig) -> Result<Self> {
        let oracle = if key.order() <= cfg.max_order {
            Some(brute_table(key, cfg)?)
        } else {
            None
        };
        Ok(SubgroupClassifier {
            key: *key,
            tol: cfg.tol,
            oracle,
            matched_rows: HashMap::new(),
            component_values: HashMap::new(),
        })
    }

    pub fn key(&self) -> &GroupKey {
        &self.key
    }

    pub fn oracle(&self) -> Option<&BruteTable> {
        self.oracle.as_ref()
    }

    fn ensure_component_values(&mut self, lambda: &MultiPartition) -> Result<()> {
        if self.component_values.contains_key(lambda) {
            return Ok(());
        }
        let table = self
            .oracle
            .as_ref()
            .expect("component values are only requested with a table present");
        let rows = match_restriction(lambda, table)?;
        let values = split_class_values(lambda, table, self.tol)?;
        self.matched_rows.insert(lambda.clone(), rows);
        self.component_values.insert(lambda.clone(), values);
        Ok(())
    }

    /// Scans every p-regular class of the subgroup for a zero of the
    /// component labelled by `label`. The verdict is identical for all
    /// components of one restriction, and the scan order is deterministic.
    pub fn quasi_bruteforce_rqn(&mut self, label: &NecklaceLabel, p: u64) -> Result<QSVerdict> {
        check_prime(&self.key, p)?;
        let lambda = label.source();
        check_membership(&self.key, &lambda)?;
        let deg = label.component_degree();
        let verdict = QSVerdict {
            group: self.key,
            lambda: lambda.clone(),
            delta: Some(label.delta),
            stab: label.stab,
            prime: p,
            degree: deg,
            linear: deg == 1,
            quasi: true,
            witness: None,
            feit: None,
        };
        if verdict.linear {
            return Ok(verdict);
        }
        if self.oracle.is_some() {
            self.scan_with_table(&lambda, label.stab, p, verdict)
        } else {
            self.scan_exact_only(&lambda, label.stab, p, verdict)
        }
    }

    fn scan_with_table(
        &mut self,
        lambda: &MultiPartition,
        stab: usize,
        p: u64,
        mut verdict: QSVerdict,
    ) -> Result<QSVerdict> {
        if stab > 1 {
            self.ensure_component_values(lambda)?;
        }
        let q = self.key.q();
        let table = self.oracle.as_ref().expect("checked by the caller");
        for (col, t) in table.class_types.iter().enumerate() {
            if !is_p_regular_type(t, p) {
                continue;
            }
            let zero_here = if stab == 1 {
                character_value(lambda, t).is_zero()
            } else if splitting_number(t, q) == 1 {
                restricted_value_nonsplit(lambda, t, q)?.is_zero()
            } else {
                // Component values on a split class come from the table.
                // The zero test is uniform across components: the outer
                // action that permutes them also permutes the pieces of
                // the class, so one component vanishing somewhere on this
                // type forces every component to vanish somewhere on it.
                let rows = &self.matched_rows[lambda];
                let values = &self.component_values[lambda];
                let mut zero = false;
                for &row in rows {
                    let magnitude = values[&(row, col)].norm();
                    if magnitude < self.tol {
                        zero = true;
                    } else if magnitude <= 10.0 * self.tol {
                        return Err(Error::ValidationFailure(format!(
                            "component value of magnitude {magnitude:.3e} on split class \
                             {t} of {} falls between the zero and nonzero thresholds",
                            self.key
                        )));
                    }
                }
                zero
            };
            if zero_here {
                verdict.quasi = false;
                verdict.witness = Some(t.clone());
                return Ok(verdict);
            }
        }
        Ok(verdict)
    }

    fn scan_exact_only(
        &self,
        lambda: &MultiPartition,
        stab: usize,
        p: u64,
        mut verdict: QSVerdict,
    ) -> Result<QSVerdict> {
        let q = self.key.q();
        let mut deferred: Option<MultiPartition> = None;
        for t in MultiPartition::enumerate(self.key.r(), self.key.n()) {
            if !type_in_subgroup(&t, q) || !is_p_regular_type(&t, p) {
                continue;
            }
            let zero_here = if stab == 1 {
                character_value(lambda, &t).is_zero()
            } else if splitting_number(&t, q) == 1 {
                restricted_value_nonsplit(lambda, &t, q)?.is_zero()
            } else {
                if deferred.is_none() {
                    deferred = Some(t);
                }
                continue;
            };
            if zero_here {
                verdict.quasi = false;
                verdict.witness = Some(t);
                return Ok(verdict);
            }
        }
        match deferred {
            Some(t) => Err(Error::ResourceLimit(format!(
                "|{}| exceeds the table bound and Res χ^{lambda} has {stab} components \
                 whose values on the split class {t} are not exactly determined",
                self.key
            ))),
            None => Ok(verdict),
        }
    }

    /// Verdicts for every character label of the subgroup at every prime
    /// dividing the group order, in label order with primes ascending.
    /// Verdicts are computed once per restriction and shared across its
    /// components.
    pub fn classify_all(&mut self, max_shapes: u128) -> Result<Vec<QSVerdict>> {
        let count = multipartition_count(self.key.r(), self.key.n());
        if count > max_shapes {
            return Err(Error::ResourceLimit(format!(
                "{} has {count} restriction shapes, more than the bound {max_shapes}",
                self.key
            )));
        }
        let labels = irreducible_labels(&self.key);
        let primes = self.key.primes();
        let mut cache: HashMap<(MultiPartition, u64), QSVerdict> = HashMap::new();
        let mut out = Vec::new();
        for label in &labels {
            let source = label.source();
            for &p in &primes {
                let cache_key = (source.clone(), p);
                let verdict = match cache.get(&cache_key) {
                    Some(shared) => {
                        let mut v = shared.clone();
                        v.delta = Some(label.delta);
                        v
                    }
                    None => {
                        let v = self.quasi_bruteforce_rqn(label, p)?;
                        cache.insert(cache_key, v.clone());
                        v
                    }
                };
                out.push(verdict);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(lists: &[&[usize]]) -> MultiPartition {
        MultiPartition::new(lists.iter().map(|l| Partition::new(l.to_vec())).collect())
    }

    fn key(r: usize, q: usize, n: usize) -> GroupKey {
        GroupKey::new(r, q, n).unwrap()
    }

    #[test]
    fn test_steinberg_of_s3() {
        let v = quasi_bruteforce_r1(&key(1, 1, 3), &mp(&[&[2, 1]]), 2).unwrap();
        assert!(v.quasi);
        assert!(!v.linear);
        assert_eq!(v.degree, 2);
        assert_eq!(v.feit, Some(true));
        assert!(feit_check_r1(&key(1, 1, 3), &mp(&[&[2, 1]]), 2).unwrap());
    }

    #[test]
    fn test_hooked_wreath_shape_quasi_but_not_feit() {
        // Concentrated (5,2,1) in slot 0 for r = 2, n = 8 at p = 2: the
        // scan over all 2-regular types finds no zero, but the values do
        // not all match the 2-part of the centralizer orders.
        let lambda = mp(&[&[5, 2, 1], &[]]);
        let v = quasi_bruteforce_r1(&key(2, 1, 8), &lambda, 2).unwrap();
        assert!(v.quasi);
        assert_eq!(v.feit, Some(false));
    }

    #[test]
    fn test_detached_box_fails_for_n_five() {
        // Main component of size 4 plus a box in the other slot: no prime
        // works at n = 5.
        let k = key(2, 1, 5);
        for mu in Partition::enumerate(4) {
            let lambda = MultiPartition::new(vec![mu.clone(), Partition::new(vec![1])]);
            let v = quasi_bruteforce_r1(&k, &lambda, 5).unwrap();
            assert!(!v.quasi, "{lambda} should fail at p = 5");
            let witness = v.witness.expect("failure carries a witness");
            assert!(is_p_regular_type(&witness, 5));
            assert!(character_value(&lambda, &witness).is_zero());
            assert!(!closed_form_r1(&lambda, 5));
        }
    }

    #[test]
    fn test_linear_shapes_short_circuit() {
        let k = key(3, 1, 4);
        for lambda in [mp(&[&[], &[], &[4]]), mp(&[&[], &[1, 1, 1, 1], &[]])] {
            for p in [2, 3] {
                let v = quasi_bruteforce_r1(&k, &lambda, p).unwrap();
                assert!(v.linear);
                assert!(v.quasi);
                assert_eq!(v.witness, None);
                assert_eq!(v.feit, None);
            }
        }
    }

    #[test]
    fn test_closed_form_r1_shapes() {
        // Concentrated table rows hold in any slot for any r.
        assert!(closed_form_r1(&mp(&[&[], &[], &[], &[3, 2, 1], &[]]), 2));
        assert!(!closed_form_r1(&mp(&[&[], &[], &[], &[3, 2, 1], &[]]), 3));
        // Main component plus detached box at n = 4: p = 2 only.
        assert!(closed_form_r1(&mp(&[&[], &[2, 1], &[], &[1]]), 2));
        assert!(!closed_form_r1(&mp(&[&[], &[2, 1], &[], &[1]]), 3));
        // n = 7 has no non-linear positives of any shape.
        for p in [2, 3, 5, 7] {
            assert!(!closed_form_r1(&mp(&[&[4, 3], &[]]), p));
            assert!(!closed_form_r1(&mp(&[&[3, 2, 1], &[1]]), p));
            assert!(!closed_form_r1(&mp(&[&[5], &[2]]), p));
        }
        // Linear shapes always pass.
        assert!(closed_form_r1(&mp(&[&[], &[7]]), 5));
    }

    #[test]
    fn test_classify_r1_symmetric_group_four() {
        let verdicts = classify_r1(&key(1, 1, 4), 1000).unwrap();
        // Three non-linear shapes, primes 2 and 3 each.
        assert_eq!(verdicts.len(), 6);
        let positives: Vec<(String, u64)> = verdicts
            .iter()
            .filter(|v| v.quasi)
            .map(|v| (v.lambda.to_string(), v.prime))
            .collect();
        assert_eq!(
            positives,
            vec![
                ("[[3,1]]".to_string(), 3),
                ("[[2,2]]".to_string(), 2),
                ("[[2,1,1]]".to_string(), 3),
            ]
        );
    }

    #[test]
    fn test_classify_r1_agrees_with_closed_form() {
        let k = key(2, 1, 4);
        for v in classify_r1(&k, 1000).unwrap() {
            assert_eq!(
                v.quasi,
                closed_form_r1(&v.lambda, v.prime),
                "{} at p = {}",
                v.lambda,
                v.prime
            );
        }
    }

    #[test]
    fn test_small_degree_rows_are_subsumed() {
        for &(n, mu, dim, p) in SMALL_DEGREE_QUASI {
            assert!(SN_QUASI_TABLE
                .iter()
                .any(|&(tn, tmu, tp)| tn == n && tmu == mu && tp == p));
            let lambda = MultiPartition::new(vec![Partition::new(mu.to_vec())]);
            assert_eq!(degree(&lambda), dim);
            assert_eq!(dim % p, 0, "the degree rule requires p | degree");
            let v = quasi_bruteforce_r1(&key(1, 1, n), &lambda, p).unwrap();
            assert!(v.quasi);
        }
    }

    #[test]
    fn test_three_spaced_boxes_in_g333() {
        let k = key(3, 3, 3);
        let mut classifier = SubgroupClassifier::new(&k, &OracleConfig::default()).unwrap();
        let nu = mp(&[&[1], &[1], &[1]]);
        let labels: Vec<NecklaceLabel> = irreducible_labels(&k)
            .into_iter()
            .filter(|l| l.source() == nu)
            .collect();
        assert_eq!(labels.len(), 3);
        for label in &labels {
            assert_eq!(label.component_degree(), 2);
            let at_two = classifier.quasi_bruteforce_rqn(label, 2).unwrap();
            assert!(at_two.quasi);
            let at_three = classifier.quasi_bruteforce_rqn(label, 3).unwrap();
            assert_eq!(at_three.quasi, closed_form_rqn(&k, &nu, 3));
        }
        assert!(closed_form_rqn(&k, &nu, 2));
        assert!(!closed_form_rqn(&k, &nu, 3));
    }

    #[test]
    fn test_opposite_pairs_in_g224() {
        let k = key(2, 2, 4);
        let mut classifier = SubgroupClassifier::new(&k, &OracleConfig::default()).unwrap();
        for pair in [mp(&[&[2], &[2]]), mp(&[&[1, 1], &[1, 1]])] {
            let labels: Vec<NecklaceLabel> = irreducible_labels(&k)
                .into_iter()
                .filter(|l| l.source() == pair)
                .collect();
            assert_eq!(labels.len(), 2);
            for label in &labels {
                assert_eq!(label.component_degree(), 3);
                assert!(classifier.quasi_bruteforce_rqn(label, 3).unwrap().quasi);
                let at_two = classifier.quasi_bruteforce_rqn(label, 2).unwrap();
                assert_eq!(at_two.quasi, closed_form_rqn(&k, &pair, 2));
            }
            assert!(closed_form_rqn(&k, &pair, 3));
            assert!(!closed_form_rqn(&k, &pair, 2));
        }
    }

    #[test]
    fn test_closed_form_rqn_spacing() {
        // Spacing r/3 is what matters, not adjacency.
        let k6 = key(6, 3, 3);
        assert!(closed_form_rqn(&k6, &mp(&[&[1], &[], &[1], &[], &[1], &[]]), 2));
        assert!(!closed_form_rqn(&k6, &mp(&[&[1], &[1], &[1], &[], &[], &[]]), 2));
        // Without the subgroup there is no splitting and no extra family.
        let wreath = key(2, 1, 4);
        assert!(!closed_form_rqn(&wreath, &mp(&[&[2], &[2]]), 3));
        // Unequal pairs or wrong spacing fail.
        let k = key(2, 2, 4);
        assert!(!closed_form_rqn(&k, &mp(&[&[2], &[1, 1]]), 3));
        let k4 = key(4, 2, 4);
        assert!(closed_form_rqn(&k4, &mp(&[&[2], &[], &[2], &[]]), 3));
        assert!(!closed_form_rqn(&k4, &mp(&[&[2], &[2], &[], &[]]), 3));
    }

    #[test]
    fn test_verdicts_uniform_across_components() {
        let k = key(2, 2, 4);
        let mut classifier = SubgroupClassifier::new(&k, &OracleConfig::default()).unwrap();
        let verdicts = classifier.classify_all(1000).unwrap();
        let mut by_source: HashMap<(String, u64), Vec<bool>> = HashMap::new();
        for v in &verdicts {
            by_source
                .entry((v.lambda.to_string(), v.prime))
                .or_default()
                .push(v.quasi);
        }
        for (source, outcomes) in by_source {
            assert!(
                outcomes.iter().all(|&b| b == outcomes[0]),
                "verdicts differ across components of {source:?}"
            );
        }
        // 13 labels, primes {2, 3}.
        assert_eq!(verdicts.len(), 26);
    }

    #[test]
    fn test_exact_only_fallback() {
        let k = key(2, 2, 4);
        let tiny = OracleConfig {
            max_order: 1,
            ..OracleConfig::default()
        };
        let mut classifier = SubgroupClassifier::new(&k, &tiny).unwrap();
        assert!(classifier.oracle().is_none());
        let labels = irreducible_labels(&k);
        // A split restriction that needs table values at p = 3 is refused…
        let pair = labels
            .iter()
            .find(|l| l.source() == mp(&[&[2], &[2]]))
            .unwrap();
        match classifier.quasi_bruteforce_rqn(pair, 3) {
            Err(Error::ResourceLimit(_)) => {}
            other => panic!("expected a resource-limit refusal, got {other:?}"),
        }
        // …but at p = 2 every 2-regular class is non-split (a split class
        // has all cycle lengths even, hence even element order), so the
        // verdict is exact even without a table.
        let at_two = classifier.quasi_bruteforce_rqn(pair, 2).unwrap();
        assert!(!at_two.quasi);
        // Irreducible restrictions are fully decided without a table, in
        // both directions. Label sources are canonically rotated, so the
        // concentrated (3,1) is listed as (∅,(3,1)).
        let standard = labels
            .iter()
            .find(|l| l.source() == mp(&[&[], &[3, 1]]))
            .unwrap();
        assert_eq!(standard.component_degree(), 3);
        let v = classifier.quasi_bruteforce_rqn(standard, 3).unwrap();
        assert!(v.quasi, "degree-3 component must be quasi 3-Steinberg");
        let boxy = labels
            .iter()
            .find(|l| l.source() == mp(&[&[1], &[3]]))
            .unwrap();
        let v = classifier.quasi_bruteforce_rqn(boxy, 3).unwrap();
        assert!(!v.quasi);
        assert!(v.witness.is_some());
    }

    #[test]
    fn test_classifier_handles_full_wreath_keys() {
        // q = 1 is a legal subgroup key: nothing splits, everything exact.
        let k = key(2, 1, 3);
        let mut classifier = SubgroupClassifier::new(&k, &OracleConfig::default()).unwrap();
        let verdicts = classifier.classify_all(1000).unwrap();
        for v in &verdicts {
            assert_eq!(v.stab, 1);
            let direct = quasi_bruteforce_r1(&k, &v.lambda, v.prime).unwrap();
            assert_eq!(v.quasi, direct.quasi);
            assert_eq!(v.witness, direct.witness);
        }
    }

    #[test]
    fn test_rejects_bad_inputs() {
        let k = key(2, 1, 3);
        assert!(matches!(
            quasi_bruteforce_r1(&k, &mp(&[&[2, 1], &[]]), 5),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            quasi_bruteforce_r1(&k, &mp(&[&[2, 1]]), 2),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            quasi_bruteforce_r1(&key(2, 2, 3), &mp(&[&[2, 1], &[]]), 2),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            classify_r1(&key(1, 1, 8), 5),
            Err(Error::ResourceLimit(_))
        ));
    }
}
