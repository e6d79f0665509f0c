//! Necklace presentation of multipartitions.
//!
//! For `r = m·q`, an `r`-multipartition `λ` can be arranged as an `m × q`
//! array `nodes[i][j] = λ_{j·m + i}`: each row collects the components whose
//! indices are congruent mod `m`, listed by increasing multiple of `m`.
//! The shift `λ_j -> λ_{(j - t·m) mod r}` — the twist that governs which
//! characters of the wreath product restrict equally to `G(r,q,n)` — acts on
//! this array by cyclically rotating every row in lockstep. Orbits of that
//! action are "necklaces"; the lexicographically least rotation is the
//! canonical representative used to label them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{MultiPartition, Partition};

/// An `m × q` arrangement of an `r = m·q` multipartition, compared and
/// canonicalized up to simultaneous rotation of the rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Necklace {
    m: usize,
    q: usize,
    /// `nodes[i][j]` with `i` in `0..m`, `j` in `0..q`.
    nodes: Vec<Vec<Partition>>,
}

/// Arranges `lambda` as a necklace for the subgroup parameter `q`;
/// fails unless `q` divides the number of components.
pub fn necklace_of(lambda: &MultiPartition, q: usize) -> Result<Necklace> {
    let r = lambda.r();
    if q == 0 || !r.is_multiple_of(q) {
        return Err(Error::InvalidInput(format!(
            "q = {q} must divide the number of components r = {r}"
        )));
    }
    let m = r / q;
    let nodes = (0..m)
        .map(|i| (0..q).map(|j| lambda.component(j * m + i).clone()).collect())
        .collect();
    Ok(Necklace { m, q, nodes })
}

impl Necklace {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn nodes(&self) -> &[Vec<Partition>] {
        &self.nodes
    }

    /// The necklace with every row rotated left by `t` positions
    /// (`nodes'[i][j] = nodes[i][(j + t) % q]`).
    pub fn rotated(&self, t: usize) -> Necklace {
        let nodes = self
            .nodes
            .iter()
            .map(|row| (0..self.q).map(|j| row[(j + t) % self.q].clone()).collect())
            .collect();
        Necklace {
            m: self.m,
            q: self.q,
            nodes,
        }
    }

    /// The lexicographically least rotation.
    pub fn canonical(&self) -> Necklace {
        (0..self.q)
            .map(|t| self.rotated(t))
            .min()
            .expect("q >= 1")
    }

    /// The number of rotations fixing the necklace.
    pub fn stabilizer_order(&self) -> usize {
        (0..self.q).filter(|&t| self.rotated(t) == *self).count()
    }

    /// The number of distinct rotations, `q / stabilizer_order`.
    pub fn orbit_size(&self) -> usize {
        self.q / self.stabilizer_order()
    }

    /// Reassembles the multipartition this necklace arranges.
    pub fn to_multipartition(&self) -> MultiPartition {
        let r = self.m * self.q;
        let components = (0..r)
            .map(|idx| self.nodes[idx % self.m][idx / self.m].clone())
            .collect();
        MultiPartition::new(components)
    }
}
