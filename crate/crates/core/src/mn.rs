//! Exact irreducible character values for the wreath products `G(r,1,n)`.
//!
//! Irreducible characters are indexed by `r`-multipartitions `λ` of `n`,
//! conjugacy classes by the `r`-multipartition recording cycle lengths per
//! color. The value `χ^λ` on a class is computed by peeling border strips:
//! process the cycles of the class one at a time, and for each cycle of
//! length `l` and color `z`, sum over every way to remove an `l`-strip from
//! one component `j` of the current shape tuple, weighting the branch by
//! `(-1)^height · ω^(j·z)` with `ω = exp(2πi/r)`. When all cycles are
//! consumed the empty shape contributes `1`. The result is an exact
//! cyclotomic integer.
//!
//! The branch value depends only on the remaining shapes and the remaining
//! cycle suffix, so evaluations are memoized on that pair. The total is
//! independent of the order in which cycles are processed; the canonical
//! order used for [`CycleSpec::from_type`] (decreasing length, ties broken
//! by increasing color) simply tends to prune early.

use serde::Serialize;
use std::collections::HashMap;

use crate::cyclotomic::CycloInt;
use crate::error::{Error, Result};
use crate::group::{class_size_full, GroupKey};
use crate::partition::{MultiPartition, Partition};
use crate::ribbon::remove_border_strips;

/// The cycles of a conjugacy class as `(length, color)` pairs in the order
/// the evaluator will process them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSpec {
    cycles: Vec<(usize, usize)>,
}

impl CycleSpec {
    /// Canonical processing order for a class type: decreasing length,
    /// ties broken by increasing color.
    pub fn from_type(class_type: &MultiPartition) -> Self {
        let mut cycles = Vec::new();
        for (color, comp) in class_type.components().iter().enumerate() {
            for &len in comp.parts() {
                cycles.push((len, color));
            }
        }
        cycles.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        CycleSpec { cycles }
    }

    /// An explicit cycle order; used to exercise order-independence.
    pub fn from_cycles(cycles: Vec<(usize, usize)>) -> Self {
        CycleSpec { cycles }
    }

    pub fn cycles(&self) -> &[(usize, usize)] {
        &self.cycles
    }

    pub fn total(&self) -> usize {
        self.cycles.iter().map(|&(len, _)| len).sum()
    }
}

struct Evaluator<'a> {
    r: usize,
    cycles: &'a [(usize, usize)],
    memo: HashMap<(Vec<Partition>, usize), CycloInt>,
}

impl Evaluator<'_> {
    fn eval(&mut self, shapes: &[Partition], idx: usize) -> CycloInt {
        if idx == self.cycles.len() {
            return CycloInt::one(self.r);
        }
        let key = (shapes.to_vec(), idx);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (len, color) = self.cycles[idx];
        let mut acc = CycloInt::zero(self.r);
        for j in 0..self.r {
            let removals = remove_border_strips(&shapes[j], len);
            if removals.is_empty() {
                continue;
            }
            let phase = CycloInt::root_of_unity(self.r, (j * color) % self.r);
            for removal in removals {
                let mut next = shapes.to_vec();
                next[j] = removal.remaining;
                let sub = self.eval(&next, idx + 1);
                let signed = if removal.height % 2 == 1 {
                    sub.scale(-1)
                } else {
                    sub
                };
                acc = &acc + &(&signed * &phase);
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// `χ^λ` evaluated on the class of the given type, as an exact cyclotomic
/// integer of order `r`. Panics if the two multipartitions disagree on `r`
/// or total size — mixing groups is a caller bug.
pub fn character_value(lambda: &MultiPartition, class_type: &MultiPartition) -> CycloInt {
    character_value_spec(lambda, &CycleSpec::from_type(class_type))
}

/// `χ^λ` on an explicitly ordered cycle list.
pub fn character_value_spec(lambda: &MultiPartition, spec: &CycleSpec) -> CycloInt {
    let r = lambda.r();
    assert!(r >= 1);
    assert_eq!(
        lambda.total(),
        spec.total(),
        "character index and class must partition the same n"
    );
    assert!(
        spec.cycles().iter().all(|&(len, color)| len >= 1 && color < r),
        "cycle colors must lie in 0..r"
    );
    let mut ev = Evaluator {
        r,
        cycles: spec.cycles(),
        memo: HashMap::new(),
    };
    ev.eval(lambda.components(), 0)
}

/// The type of the identity of `G(r,·,n)`: `n` fixed points of color 0.
pub fn identity_type(r: usize, n: usize) -> MultiPartition {
    let mut comps = vec![Partition::empty(); r];
    comps[0] = Partition::new(vec![1; n]);
    MultiPartition::new(comps)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// The number of standard Young tableaux of shape `mu`, by the hook-length
/// formula.
fn hook_count(mu: &Partition) -> u128 {
    if mu.is_empty() {
        return 1;
    }
    let conj = mu.conjugate();
    let mut denom: u128 = 1;
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conj.parts()[j] - i) - 1;
            denom = denom.checked_mul(hook as u128).expect("hook overflow");
        }
    }
    factorial(mu.size()) / denom
}

/// The degree of `χ^λ`, computed two genuinely different ways (the
/// multinomial-times-hook-lengths product, and the strip evaluator at the
/// identity) and cross-checked; a mismatch would mean a bug in one of the
/// two paths and panics.
pub fn degree(lambda: &MultiPartition) -> u64 {
    let n = lambda.total();
    let mut formula: u128 = factorial(n);
    for comp in lambda.components() {
        formula /= factorial(comp.size());
        formula = formula
            .checked_mul(hook_count(comp))
            .expect("degree overflow");
    }
    let at_identity = character_value(lambda, &identity_type(lambda.r(), n))
        .as_int()
        .expect("degree must be a rational integer");
    assert!(
        at_identity >= 0 && at_identity as u128 == formula,
        "degree of {lambda}: evaluator gives {at_identity}, formula gives {formula}"
    );
    formula.try_into().expect("degree exceeds u64")
}

/// Symmetric-group character `ϰ^mu` on the class of cycle type `shape`
/// (the `r = 1` specialization, always a rational integer).
pub fn sym_character(mu: &Partition, shape: &Partition) -> i64 {
    let lam = MultiPartition::new(vec![mu.clone()]);
    let cls = MultiPartition::new(vec![shape.clone()]);
    character_value(&lam, &cls)
        .as_int()
        .expect("order-1 values are integers")
}

/// The full exact character table of a wreath product `G(r,1,n)`: rows and
/// columns both run over `MultiPartition::enumerate(r, n)` in order.
#[derive(Clone, Serialize)]
pub struct CharTable {
    pub key: GroupKey,
    pub class_types: Vec<MultiPartition>,
    pub class_sizes: Vec<u128>,
    pub irreducibles: Vec<MultiPartition>,
    pub degrees: Vec<u64>,
    /// `values[i][j]` = value of character `i` on class `j`.
    pub values: Vec<Vec<CycloInt>>,
}

/// Computes the exact table of `G(r,1,n)`, refusing if the number of
/// irreducibles exceeds `max_chars`.
pub fn character_table_full(r: usize, n: usize, max_chars: usize) -> Result<CharTable> {
    let key = GroupKey::new(r, 1, n)?;
    let labels = MultiPartition::enumerate(r, n);
    if labels.len() > max_chars {
        return Err(Error::ResourceLimit(format!(
            "{key} has {} irreducible characters, above the table limit {max_chars}",
            labels.len()
        )));
    }
    let class_sizes = labels.iter().map(class_size_full).collect();
    let degrees = labels.iter().map(degree).collect();
    let values = labels
        .iter()
        .map(|lam| labels.iter().map(|t| character_value(lam, t)).collect())
        .collect();
    Ok(CharTable {
        key,
        class_types: labels.clone(),
        class_sizes,
        irreducibles: labels,
        degrees,
        values,
    })
}
