//! Verification suites: every end-to-end check the project promises,
//! expressed as data so the test harness and the command line can share
//! them. Each suite returns a [`SuiteReport`] whose checks carry enough
//! detail to act on a failure without rerunning anything.

use std::collections::{HashMap, HashSet};

use crate::classify::{
    classify_r1, closed_form_r1, closed_form_rqn, detached_box_prime, SubgroupClassifier,
    SN_QUASI_TABLE,
};
use crate::clifford::irreducible_labels;
use crate::cyclotomic::CycloInt;
use crate::error::Result;
use crate::group::{
    conjugacy_classes_brute, splitting_number, type_in_subgroup, GroupKey,
};
use crate::mn::{character_table_full, character_value, degree, identity_type};
use crate::oracle::{brute_table, match_restriction, split_class_values, BruteTable, OracleConfig};
use crate::partition::{MultiPartition, Partition};

/// One named pass/fail observation.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// A group of related checks.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Failures first, for terse reporting.
    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// `"name: 12 checks, all passing"` or a list of failure names.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: {} checks, all passing", self.name, self.checks.len())
        } else {
            let names: Vec<&str> = self
                .failures()
                .iter()
                .map(|c| c.name.as_str())
                .collect();
            format!(
                "{}: {} of {} checks failed: {}",
                self.name,
                names.len(),
                self.checks.len(),
                names.join(", ")
            )
        }
    }
}

/// The ten subgroup keys every subgroup-level suite runs over.
pub const SUBGROUP_SAMPLE: &[(usize, usize, usize)] = &[
    (2, 2, 2),
    (2, 2, 3),
    (2, 2, 4),
    (3, 3, 2),
    (3, 3, 3),
    (4, 2, 2),
    (4, 4, 2),
    (6, 3, 2),
    (2, 1, 3),
    (2, 1, 4),
];

fn concentrated(r: usize, slot: usize, mu: &[usize]) -> MultiPartition {
    let mut comps = vec![Partition::empty(); r];
    comps[slot] = Partition::new(mu.to_vec());
    MultiPartition::new(comps)
}

/// Every non-linear quasi positive shape of `G(r,1,n)` according to the
/// closed-form tables: concentrated table rows in every slot, plus the
/// detached-box family at its prime when one exists.
pub fn closed_form_positives(r: usize, n: usize) -> HashSet<(MultiPartition, u64)> {
    let mut out = HashSet::new();
    for &(tn, mu, p) in SN_QUASI_TABLE {
        if tn != n {
            continue;
        }
        for slot in 0..r {
            out.insert((concentrated(r, slot, mu), p));
        }
    }
    if n >= 2 {
        if let Some(p) = detached_box_prime(n) {
            for mu in Partition::enumerate(n - 1) {
                for main in 0..r {
                    for box_slot in 0..r {
                        if main == box_slot {
                            continue;
                        }
                        let mut comps = vec![Partition::empty(); r];
                        comps[main] = mu.clone();
                        comps[box_slot] = Partition::new(vec![1]);
                        let lambda = MultiPartition::new(comps);
                        if crate::classify::is_linear(&lambda) {
                            continue;
                        }
                        out.insert((lambda, p));
                    }
                }
            }
        }
    }
    out
}

/// Brute-force classification of `S_n` for `2 ≤ n ≤ 8` reproduces the
/// symmetric-group table exactly.
pub fn sn_table_reproduction() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("table2");
    for n in 2..=8 {
        let key = GroupKey::new(1, 1, n)?;
        let verdicts = classify_r1(&key, 100_000)?;
        let got: HashSet<(MultiPartition, u64)> = verdicts
            .iter()
            .filter(|v| v.quasi)
            .map(|v| (v.lambda.clone(), v.prime))
            .collect();
        let expected: HashSet<(MultiPartition, u64)> = SN_QUASI_TABLE
            .iter()
            .filter(|&&(tn, _, _)| tn == n)
            .map(|&(_, mu, p)| (concentrated(1, 0, mu), p))
            .collect();
        let pass = got == expected;
        report.push(
            format!("S_{n} positives"),
            pass,
            format!(
                "{} brute-force positives, {} table rows, {} verdicts scanned",
                got.len(),
                expected.len(),
                verdicts.len()
            ),
        );
    }
    Ok(report)
}

/// Brute-force classification of `G(r,1,n)` for `r ∈ {2,3}`, `2 ≤ n ≤ 8`
/// reproduces the wreath-product table exactly: concentrated rows in every
/// slot and detached-box rows for every ordered slot pair.
pub fn wreath_table_reproduction() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("table1");
    for r in [2, 3] {
        for n in 2..=8 {
            let key = GroupKey::new(r, 1, n)?;
            let verdicts = classify_r1(&key, 100_000)?;
            let got: HashSet<(MultiPartition, u64)> = verdicts
                .iter()
                .filter(|v| v.quasi)
                .map(|v| (v.lambda.clone(), v.prime))
                .collect();
            let expected = closed_form_positives(r, n);
            let pass = got == expected;
            report.push(
                format!("G({r},1,{n}) positives"),
                pass,
                format!(
                    "{} brute-force positives, {} expected",
                    got.len(),
                    expected.len()
                ),
            );
        }
    }
    Ok(report)
}

/// The closed form and the brute force agree on every non-linear shape and
/// every prime divisor, for `r ∈ {2,3}`, `2 ≤ n ≤ 8`.
pub fn closed_form_agreement_r1() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("closed-form-r1");
    for r in [2, 3] {
        for n in 2..=8 {
            let key = GroupKey::new(r, 1, n)?;
            let verdicts = classify_r1(&key, 100_000)?;
            let disagreements: Vec<String> = verdicts
                .iter()
                .filter(|v| v.quasi != closed_form_r1(&v.lambda, v.prime))
                .map(|v| format!("{} at p={}", v.lambda, v.prime))
                .collect();
            report.push(
                format!("G({r},1,{n}) agreement"),
                disagreements.is_empty(),
                if disagreements.is_empty() {
                    format!("{} (shape, prime) pairs compared", verdicts.len())
                } else {
                    disagreements.join("; ")
                },
            );
        }
    }
    Ok(report)
}

/// Two pinned character values of `G(3,1,6)`, checked exactly.
pub fn worked_examples() -> SuiteReport {
    let mut report = SuiteReport::new("worked-examples");
    let lambda = MultiPartition::new(vec![
        Partition::new(vec![2, 1]),
        Partition::empty(),
        Partition::new(vec![1, 1, 1]),
    ]);
    let first = MultiPartition::new(vec![
        Partition::new(vec![1]),
        Partition::new(vec![2]),
        Partition::new(vec![3]),
    ]);
    let value = character_value(&lambda, &first);
    let omega_sq = CycloInt::root_of_unity(3, 2);
    report.push(
        "value ω²",
        value == omega_sq,
        format!("χ^{lambda}({first}) = {value}"),
    );
    let second = MultiPartition::new(vec![
        Partition::new(vec![2]),
        Partition::new(vec![2]),
        Partition::new(vec![2]),
    ]);
    let value = character_value(&lambda, &second);
    report.push(
        "value 0",
        value.is_zero(),
        format!("χ^{lambda}({second}) = {value}"),
    );
    report
}

/// Brute force versus closed form on every component of every sampled
/// subgroup, plus the two pinned exceptional families.
pub fn subgroup_classification() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("subgroup-classification");
    for &(r, q, n) in SUBGROUP_SAMPLE {
        let key = GroupKey::new(r, q, n)?;
        let mut classifier = SubgroupClassifier::new(&key, &OracleConfig::default())?;
        let verdicts = classifier.classify_all(100_000)?;
        let disagreements: Vec<String> = verdicts
            .iter()
            .filter(|v| !v.linear)
            .filter(|v| v.quasi != closed_form_rqn(&key, &v.lambda, v.prime))
            .map(|v| format!("{} δ={:?} at p={}", v.lambda, v.delta, v.prime))
            .collect();
        let compared = verdicts.iter().filter(|v| !v.linear).count();
        report.push(
            format!("{key} agreement"),
            disagreements.is_empty(),
            if disagreements.is_empty() {
                format!("{compared} non-linear (component, prime) pairs compared")
            } else {
                disagreements.join("; ")
            },
        );
        if (r, q, n) == (3, 3, 3) {
            let boxes = MultiPartition::new(vec![Partition::new(vec![1]); 3]);
            let positives: Vec<_> = verdicts
                .iter()
                .filter(|v| v.lambda == boxes && v.prime == 2 && v.quasi)
                .collect();
            report.push(
                "G(3,3,3) three spaced boxes",
                positives.len() == 3 && positives.iter().all(|v| v.degree == 2),
                format!("{} quasi components at p=2", positives.len()),
            );
        }
        if (r, q, n) == (2, 2, 4) {
            for pair in [vec![2], vec![1, 1]] {
                let shape = MultiPartition::new(vec![Partition::new(pair.clone()); 2]);
                let positives: Vec<_> = verdicts
                    .iter()
                    .filter(|v| v.lambda == shape && v.prime == 3 && v.quasi)
                    .collect();
                report.push(
                    format!("G(2,2,4) opposite pair {shape}"),
                    positives.len() == 2 && positives.iter().all(|v| v.degree == 3),
                    format!("{} quasi components at p=3", positives.len()),
                );
            }
        }
    }
    Ok(report)
}

/// For `r = 2`, `q ∈ {1,2}`, `n ∈ {9,10}`: every non-linear character is
/// rejected at every prime, and every non-linear degree is at least 5.
pub fn large_n_negative() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("corollary-n9");
    for n in [9, 10] {
        let key = GroupKey::new(2, 1, n)?;
        let verdicts = classify_r1(&key, 100_000)?;
        let positives = verdicts.iter().filter(|v| v.quasi).count();
        let min_degree = verdicts.iter().map(|v| v.degree).min().unwrap_or(0);
        report.push(
            format!("G(2,1,{n}) all rejected"),
            positives == 0,
            format!("{} verdicts, {} positives", verdicts.len(), positives),
        );
        report.push(
            format!("G(2,1,{n}) degrees"),
            min_degree >= 5,
            format!("smallest non-linear degree {min_degree}"),
        );
    }
    for n in [9, 10] {
        let key = GroupKey::new(2, 2, n)?;
        let mut classifier = SubgroupClassifier::new(&key, &OracleConfig::default())?;
        let verdicts = classifier.classify_all(100_000)?;
        let nonlinear: Vec<_> = verdicts.iter().filter(|v| !v.linear).collect();
        let positives = nonlinear.iter().filter(|v| v.quasi).count();
        let min_degree = nonlinear.iter().map(|v| v.degree).min().unwrap_or(0);
        report.push(
            format!("G(2,2,{n}) all rejected"),
            positives == 0,
            format!(
                "{} non-linear component verdicts, {} positives",
                nonlinear.len(),
                positives
            ),
        );
        report.push(
            format!("G(2,2,{n}) degrees"),
            min_degree >= 5,
            format!("smallest non-linear component degree {min_degree}"),
        );
    }
    Ok(report)
}

/// Class count of each sampled subgroup computed three independent ways:
/// explicit conjugacy orbits, splitting numbers summed over member types,
/// and the character-label count.
pub fn splitting_counts() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("splitting");
    for &(r, q, n) in SUBGROUP_SAMPLE {
        let key = GroupKey::new(r, q, n)?;
        let by_conjugation = conjugacy_classes_brute(&key, 100_000)?.len();
        let by_splitting: usize = MultiPartition::enumerate(r, n)
            .iter()
            .filter(|t| type_in_subgroup(t, q))
            .map(|t| splitting_number(t, q))
            .sum();
        let by_labels = irreducible_labels(&key).len();
        let pass = by_conjugation == by_splitting && by_splitting == by_labels;
        report.push(
            format!("{key} class count"),
            pass,
            format!(
                "conjugation {by_conjugation}, splitting sum {by_splitting}, labels {by_labels}"
            ),
        );
        if (r, q, n) == (2, 2, 4) {
            report.push(
                "G(2,2,4) has 13 classes",
                by_conjugation == 13,
                format!("found {by_conjugation}"),
            );
        }
    }
    Ok(report)
}

fn exact_orthogonality(r: usize, n: usize) -> Result<(bool, String)> {
    let table = character_table_full(r, n, 100_000)?;
    let order = GroupKey::new(r, 1, n)?.order() as i64;
    let chars = table.values.len();
    // First kind: rows weighted by class sizes.
    for i in 0..chars {
        for j in i..chars {
            let mut acc = CycloInt::zero(r.max(1));
            for (t, size) in table.class_sizes.iter().enumerate() {
                let term = &table.values[i][t] * &table.values[j][t].conjugate();
                acc = &acc + &term.scale(*size as i64);
            }
            let expected = if i == j { order } else { 0 };
            if acc != CycloInt::from_int(r.max(1), expected) {
                return Ok((
                    false,
                    format!("row pair ({i},{j}) sums to {acc}, expected {expected}"),
                ));
            }
        }
    }
    // Second kind: columns against centralizer orders.
    for s in 0..table.class_types.len() {
        for t in s..table.class_types.len() {
            let mut acc = CycloInt::zero(r.max(1));
            for row in &table.values {
                acc = &acc + &(&row[s] * &row[t].conjugate());
            }
            let expected = if s == t {
                order / table.class_sizes[s] as i64
            } else {
                0
            };
            if acc != CycloInt::from_int(r.max(1), expected) {
                return Ok((
                    false,
                    format!("column pair ({s},{t}) sums to {acc}, expected {expected}"),
                ));
            }
        }
    }
    Ok((true, format!("{chars} characters, both kinds exact")))
}

fn float_orthogonality_residual(table: &BruteTable) -> f64 {
    let order = table.key.order() as f64;
    let chars = table.values.len();
    let mut worst: f64 = 0.0;
    for i in 0..chars {
        for j in 0..chars {
            let mut acc = nalgebra::Complex::new(0.0, 0.0);
            for (t, size) in table.class_sizes.iter().enumerate() {
                acc += table.values[i][t] * table.values[j][t].conj() * *size as f64;
            }
            let expected = if i == j { order } else { 0.0 };
            worst = worst.max((acc - nalgebra::Complex::new(expected, 0.0)).norm() / order);
        }
    }
    worst
}

/// Orthogonality three ways: exact for the full wreath products with
/// `r ≤ 3`, `n ≤ 5`; floating-point for every sampled numerical table; and
/// exact-versus-numerical value agreement on the full wreath products the
/// tables cover.
pub fn orthogonality() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("orthogonality");
    for r in 1..=3 {
        for n in 1..=5 {
            let (pass, detail) = exact_orthogonality(r, n)?;
            report.push(format!("G({r},1,{n}) exact"), pass, detail);
        }
    }
    for &(r, q, n) in SUBGROUP_SAMPLE {
        let key = GroupKey::new(r, q, n)?;
        let table = brute_table(&key, &OracleConfig::default())?;
        let residual = float_orthogonality_residual(&table);
        report.push(
            format!("{key} numerical"),
            residual <= 1e-6,
            format!("relative residual {residual:.2e}"),
        );
    }
    for (r, n) in [(2, 3), (2, 4), (3, 2)] {
        let key = GroupKey::new(r, 1, n)?;
        let table = brute_table(&key, &OracleConfig::default())?;
        let mut worst: f64 = 0.0;
        let mut matched = vec![false; table.values.len()];
        for lambda in MultiPartition::enumerate(r, n) {
            let exact: Vec<_> = table
                .class_types
                .iter()
                .map(|t| character_value(&lambda, t).to_complex())
                .collect();
            let row = table.values.iter().position(|row| {
                row.iter()
                    .zip(&exact)
                    .all(|(a, b)| (a - b).norm() <= 1e-6)
            });
            match row {
                Some(i) if !matched[i] => {
                    matched[i] = true;
                    for (a, b) in table.values[i].iter().zip(&exact) {
                        worst = worst.max((a - b).norm());
                    }
                }
                _ => {
                    report.push(
                        format!("{key} exact-vs-numerical"),
                        false,
                        format!("no fresh table row matches χ^{lambda}"),
                    );
                    return Ok(report);
                }
            }
        }
        report.push(
            format!("{key} exact-vs-numerical"),
            matched.iter().all(|&m| m),
            format!("bijective row match, worst deviation {worst:.2e}"),
        );
    }
    Ok(report)
}

/// The two independent degree computations agree for every shape with
/// `r ≤ 4`, `n ≤ 8`.
pub fn degree_consistency() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("degrees");
    for r in 1..=4 {
        for n in 1..=8 {
            let identity = identity_type(r, n);
            let mut compared = 0usize;
            let mut failures = Vec::new();
            for lambda in MultiPartition::enumerate(r, n) {
                let by_recursion = character_value(&lambda, &identity).as_int();
                let by_formula = degree(&lambda) as i64;
                compared += 1;
                if by_recursion != Some(by_formula) {
                    failures.push(format!("{lambda}: {by_recursion:?} vs {by_formula}"));
                }
            }
            report.push(
                format!("G({r},1,{n}) degrees"),
                failures.is_empty(),
                if failures.is_empty() {
                    format!("{compared} shapes")
                } else {
                    failures.join("; ")
                },
            );
        }
    }
    Ok(report)
}

/// In every sampled numerical table, irreducibles of degree 2, 3 or 4 are
/// nonvanishing on all p-regular classes for each prime p dividing both
/// the degree and the group order.
pub fn small_degree_nonvanishing() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("p23");
    for &(r, q, n) in SUBGROUP_SAMPLE {
        let key = GroupKey::new(r, q, n)?;
        let table = brute_table(&key, &OracleConfig::default())?;
        let mut rows_checked = 0usize;
        let mut violations = Vec::new();
        for (row, deg) in table.degrees.iter().enumerate() {
            if !(2..=4).contains(deg) {
                continue;
            }
            for p in key.primes() {
                if deg % p != 0 {
                    continue;
                }
                rows_checked += 1;
                for col in 0..table.num_classes() {
                    if !table.is_p_regular_class(col, p) {
                        continue;
                    }
                    let magnitude = table.values[row][col].norm();
                    if magnitude <= 1e-5 {
                        violations.push(format!(
                            "degree-{deg} row {row} vanishes on class {} at p={p}",
                            table.class_types[col]
                        ));
                    }
                }
            }
        }
        report.push(
            format!("{key} small degrees"),
            violations.is_empty(),
            if violations.is_empty() {
                format!("{rows_checked} (row, prime) pairs clean")
            } else {
                violations.join("; ")
            },
        );
    }
    Ok(report)
}

/// Restriction decompositions against the numerical tables: component
/// counts match stabilizer orders, the matched rows partition each table,
/// and split-class component values pass their non-split certification.
pub fn restriction_matching() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("restriction");
    for &(r, q, n) in SUBGROUP_SAMPLE {
        let key = GroupKey::new(r, q, n)?;
        let table = brute_table(&key, &OracleConfig::default())?;
        let mut claimed: HashMap<usize, MultiPartition> = HashMap::new();
        let mut seen_orbits: HashSet<MultiPartition> = HashSet::new();
        let mut ok = true;
        let mut detail = String::new();
        for lambda in MultiPartition::enumerate(r, n) {
            let canonical = crate::necklace::necklace_of(&lambda, q)?
                .canonical()
                .to_multipartition();
            if !seen_orbits.insert(canonical.clone()) {
                continue;
            }
            let rows = match_restriction(&canonical, &table)?;
            let stab = crate::clifford::stabilizer_order(&canonical, q);
            if rows.len() != stab {
                ok = false;
                detail = format!("{canonical}: {} rows for stabilizer {stab}", rows.len());
                break;
            }
            if stab > 1 {
                split_class_values(&canonical, &table, 1e-6)?;
            }
            for row in rows {
                if let Some(prev) = claimed.insert(row, canonical.clone()) {
                    ok = false;
                    detail = format!("table row {row} claimed by {prev} and {canonical}");
                    break;
                }
            }
            if !ok {
                break;
            }
        }
        if ok && claimed.len() != table.values.len() {
            ok = false;
            detail = format!(
                "{} of {} table rows claimed",
                claimed.len(),
                table.values.len()
            );
        }
        if ok {
            detail = format!(
                "{} orbits cover all {} rows",
                seen_orbits.len(),
                table.values.len()
            );
        }
        report.push(format!("{key} restrictions"), ok, detail);
    }
    Ok(report)
}

/// Runs the named suite; names follow the command-line interface.
pub fn run_suite(name: &str) -> Result<SuiteReport> {
    match name {
        "orthogonality" => orthogonality(),
        "splitting" => splitting_counts(),
        "restriction" => restriction_matching(),
        "table1" => wreath_table_reproduction(),
        "table2" => sn_table_reproduction(),
        "corollary-n9" => large_n_negative(),
        "p23" => small_degree_nonvanishing(),
        other => Err(crate::error::Error::InvalidInput(format!(
            "unknown suite {other:?}; expected one of orthogonality, splitting, \
             restriction, table1, table2, corollary-n9, p23"
        ))),
    }
}

/// All suite names accepted by [`run_suite`], in reporting order.
pub const SUITE_NAMES: &[&str] = &[
    "orthogonality",
    "splitting",
    "restriction",
    "table1",
    "table2",
    "corollary-n9",
    "p23",
];
