//! Integer partitions and `r`-component multipartitions.
//!
//! Partitions index the irreducible characters of symmetric groups and the
//! conjugacy classes attached to a single color; `r`-tuples of partitions do
//! the same for the wreath product `Z_r ≀ S_n`. Enumeration order matters
//! downstream (witness selection scans classes in this order), so both
//! `Partition::enumerate` and `MultiPartition::enumerate` promise a fixed
//! deterministic order, documented on each method.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// A partition of a nonnegative integer: a weakly decreasing list of
/// positive parts. The empty list is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, panicking if `parts` is not weakly decreasing
    /// or contains a zero. Use [`Partition::try_new`] for untrusted input.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("invalid partition")
    }

    /// Builds a partition from untrusted data.
    pub fn try_new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned (sum of the parts).
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True iff the shape is `(a, 1, 1, ..., 1)` for some `a >= 1`.
    /// The empty partition is not considered a hook.
    pub fn is_hook(&self) -> bool {
        !self.parts.is_empty() && self.parts[1..].iter().all(|&p| p == 1)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// True iff the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(&small, &big)| small <= big)
    }

    /// All partitions of `n` in descending lexicographic order, so `(n)`
    /// comes first and `(1, 1, ..., 1)` last.
    pub fn enumerate(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                go(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// An `r`-tuple of partitions. The component index doubles as a color
/// in `Z_r`, so the tuple length is always the `r` of the ambient group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    /// Parses `[[2,1],[],[1,1,1]]`-style nested lists.
    pub fn try_from_parts(lists: Vec<Vec<usize>>) -> Result<Self> {
        let components = lists
            .into_iter()
            .map(Partition::try_new)
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiPartition { components })
    }

    /// The number of components (the `r` of the ambient group).
    pub fn r(&self) -> usize {
        self.components.len()
    }

    /// The total number of boxes across all components.
    pub fn total(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &Partition {
        &self.components[j]
    }

    /// If exactly one component is nonempty, returns `(index, component)`.
    pub fn single_nonempty(&self) -> Option<(usize, &Partition)> {
        let mut found = None;
        for (j, c) in self.components.iter().enumerate() {
            if !c.is_empty() {
                if found.is_some() {
                    return None;
                }
                found = Some((j, c));
            }
        }
        found
    }

    /// All `r`-multipartitions of `n`, ordered by: component-size vectors in
    /// descending lexicographic order; within a fixed size vector, each
    /// component runs through `Partition::enumerate` order with the rightmost
    /// component varying fastest.
    ///
    /// For `r = 2, n = 2` this yields
    /// `([2],[]), ([1,1],[]), ([1],[1]), ([],[2]), ([],[1,1])`.
    pub fn enumerate(r: usize, n: usize) -> Vec<MultiPartition> {
        assert!(r >= 1, "need at least one component");
        fn go(
            r_left: usize,
            n_left: usize,
            prefix: &mut Vec<Partition>,
            out: &mut Vec<MultiPartition>,
        ) {
            if r_left == 0 {
                if n_left == 0 {
                    out.push(MultiPartition {
                        components: prefix.clone(),
                    });
                }
                return;
            }
            if r_left == 1 {
                for p in Partition::enumerate(n_left) {
                    prefix.push(p);
                    go(0, 0, prefix, out);
                    prefix.pop();
                }
                return;
            }
            for mass in (0..=n_left).rev() {
                for p in Partition::enumerate(mass) {
                    prefix.push(p);
                    go(r_left - 1, n_left - mass, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(r, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, c) in self.components.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The number of `r`-multipartitions of `n`, computed by convolving the
/// ordinary partition-count sequence with itself `r` times. Serves as an
/// independent check on `MultiPartition::enumerate`.
pub fn multipartition_count(r: usize, n: usize) -> u128 {
    let p: Vec<u128> = (0..=n)
        .map(|k| Partition::enumerate(k).len() as u128)
        .collect();
    let mut acc = vec![0u128; n + 1];
    acc[0] = 1;
    for _ in 0..r {
        let mut next = vec![0u128; n + 1];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (k, &pk) in p.iter().enumerate().take(n + 1 - i) {
                next[i + k] += a * pk;
            }
        }
        acc = next;
    }
    acc[n]
}
