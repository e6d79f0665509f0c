//! Border-strip (ribbon) removal.
//!
//! A border strip of length `l` is an edge-connected skew shape of `l` boxes
//! containing no 2x2 block; its height is the number of rows it occupies
//! minus one. Removals are computed on the beta-set (first-column hook
//! lengths) of the shape: with `B = { parts[i] + k - 1 - i }` for a shape
//! with `k` rows, removing an `l`-strip corresponds to replacing some
//! `b ∈ B` by `b - l`, which must be nonnegative and not already in `B`.
//! The height of the strip is the number of elements of `B` strictly
//! between `b - l` and `b`.

use crate::partition::Partition;

/// One way of removing a border strip: what remains, and the strip height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripRemoval {
    pub remaining: Partition,
    pub height: usize,
}

/// All ways to remove a border strip of `length` boxes from `shape`,
/// ordered by the row in which the strip starts (topmost first).
///
/// `length = 0` and strips longer than the shape yield no removals.
pub fn remove_border_strips(shape: &Partition, length: usize) -> Vec<StripRemoval> {
    if length == 0 || length > shape.size() {
        return Vec::new();
    }
    let k = shape.len();
    let betas: Vec<usize> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (k - 1 - i))
        .collect();
    let mut out = Vec::new();
    for (i, &b) in betas.iter().enumerate() {
        if b < length {
            continue;
        }
        let target = b - length;
        if betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&c| target < c && c < b).count();
        let mut new_betas: Vec<usize> = betas
            .iter()
            .enumerate()
            .map(|(j, &c)| if j == i { target } else { c })
            .collect();
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (k - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        out.push(StripRemoval {
            remaining: Partition::new(parts),
            height,
        });
    }
    out
}
