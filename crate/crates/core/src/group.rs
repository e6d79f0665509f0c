//! The groups `G(r,q,n)` and their conjugacy data.
//!
//! `G(r,1,n)` is the wreath product `Z_r ≀ S_n`: pairs `(a; σ)` of a color
//! vector `a ∈ (Z_r)^n` and a permutation `σ ∈ S_n`, with
//!
//! ```text
//! (a; σ)(b; τ) = (a + σ·b; στ),   (σ·b)_i = b_{σ⁻¹(i)},   (στ)(i) = σ(τ(i)).
//! ```
//!
//! For `q | r`, `G(r,q,n)` is the subgroup where the colors sum to `0`
//! mod `q`; it has index `q`.
//!
//! Conjugacy classes of the full wreath product are indexed by the type of
//! an element: the `r`-multipartition whose component `j` lists the lengths
//! of the cycles of color `j` (the color of a cycle is the sum of the colors
//! it visits). Inside `G(r,q,n)` a full class either stays one class or
//! splits; the number of pieces is the gcd recorded by
//! [`splitting_number`]. Everything in this module is exact integer
//! arithmetic; the brute-force enumeration functions are gated by an
//! explicit size limit so callers can't accidentally materialize a huge
//! group.

use itertools::Itertools;
use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{MultiPartition, Partition};

/// Identifies a group `G(r,q,n)`; construction checks `q | r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupKey {
    r: usize,
    q: usize,
    n: usize,
}

impl GroupKey {
    pub fn new(r: usize, q: usize, n: usize) -> Result<Self> {
        if r == 0 || q == 0 || n == 0 {
            return Err(Error::InvalidInput(format!(
                "parameters must be positive: r={r}, q={q}, n={n}"
            )));
        }
        if !r.is_multiple_of(q) {
            return Err(Error::InvalidInput(format!(
                "q = {q} must divide r = {r}"
            )));
        }
        Ok(GroupKey { r, q, n })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r / q`, the modulus of the color character cutting out the subgroup.
    pub fn m(&self) -> usize {
        self.r / self.q
    }

    /// The key of the ambient wreath product `G(r,1,n)`.
    pub fn wreath(&self) -> GroupKey {
        GroupKey {
            r: self.r,
            q: 1,
            n: self.n,
        }
    }

    /// `|G(r,q,n)| = rⁿ · n! / q`.
    pub fn order(&self) -> u128 {
        let mut acc: u128 = 1;
        for _ in 0..self.n {
            acc = acc.checked_mul(self.r as u128).expect("group order overflow");
        }
        for k in 1..=self.n {
            acc = acc.checked_mul(k as u128).expect("group order overflow");
        }
        acc / self.q as u128
    }

    /// The distinct primes dividing the group order, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps = Vec::new();
        let mut r = self.r as u64;
        let mut d = 2;
        while d * d <= r {
            if r.is_multiple_of(d) {
                ps.push(d);
                while r.is_multiple_of(d) {
                    r /= d;
                }
            }
            d += 1;
        }
        if r > 1 {
            ps.push(r);
        }
        for p in 2..=self.n as u64 {
            if (2..p).all(|k| p % k != 0) && !ps.contains(&p) {
                ps.push(p);
            }
        }
        ps.sort_unstable();
        ps
    }
}

impl fmt::Debug for GroupKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.r, self.q, self.n)
    }
}

impl fmt::Display for GroupKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.r, self.q, self.n)
    }
}

/// An element `(a; σ)` of a wreath product `Z_r ≀ S_n`, stored with its `r`.
///
/// `perm[i]` is the 0-based image of point `i`; `colors[i]` is the color
/// attached to point `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    r: usize,
    colors: Vec<usize>,
    perm: Vec<usize>,
}

impl GroupElement {
    pub fn new(r: usize, colors: Vec<usize>, perm: Vec<usize>) -> Self {
        assert!(r >= 1);
        assert_eq!(colors.len(), perm.len(), "colors and permutation disagree on n");
        assert!(colors.iter().all(|&c| c < r), "color out of range");
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(p < perm.len() && !seen[p], "not a permutation: {perm:?}");
            seen[p] = true;
        }
        GroupElement { r, colors, perm }
    }

    pub fn identity(r: usize, n: usize) -> Self {
        GroupElement {
            r,
            colors: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    fn perm_inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        inv
    }

    /// Group multiplication `(a; σ)(b; τ) = (a + σ·b; στ)`.
    pub fn multiply(&self, rhs: &GroupElement) -> GroupElement {
        assert_eq!(self.r, rhs.r, "mixed color moduli");
        assert_eq!(self.n(), rhs.n(), "mixed degrees");
        let inv = self.perm_inverse();
        let colors = (0..self.n())
            .map(|i| (self.colors[i] + rhs.colors[inv[i]]) % self.r)
            .collect();
        let perm = (0..self.n()).map(|i| self.perm[rhs.perm[i]]).collect();
        GroupElement {
            r: self.r,
            colors,
            perm,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let inv = self.perm_inverse();
        let colors = (0..self.n())
            .map(|i| (self.r - self.colors[self.perm[i]] % self.r) % self.r)
            .collect();
        GroupElement {
            r: self.r,
            colors,
            perm: inv,
        }
    }

    /// `h g h⁻¹` for `g = self`.
    pub fn conjugated_by(&self, h: &GroupElement) -> GroupElement {
        h.multiply(self).multiply(&h.inverse())
    }

    /// The cycles of the underlying permutation as `(length, color)` pairs,
    /// by increasing smallest moved point; the color of a cycle is the sum
    /// of the colors it visits, mod `r`.
    pub fn cycles(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut color = 0;
            let mut i = start;
            loop {
                seen[i] = true;
                len += 1;
                color = (color + self.colors[i]) % self.r;
                i = self.perm[i];
                if i == start {
                    break;
                }
            }
            out.push((len, color));
        }
        out
    }

    /// The conjugacy type in the full wreath product: component `j` of the
    /// result lists the lengths of the cycles of color `j`.
    pub fn type_of(&self) -> MultiPartition {
        let mut comps: Vec<Vec<usize>> = vec![Vec::new(); self.r];
        for (len, color) in self.cycles() {
            comps[color].push(len);
        }
        MultiPartition::new(
            comps
                .into_iter()
                .map(|mut lens| {
                    lens.sort_unstable_by(|a, b| b.cmp(a));
                    Partition::new(lens)
                })
                .collect(),
        )
    }

    /// Element order, via cycle structure: an `l`-cycle of color `z` has
    /// order `l · r/gcd(r,z)`, and orders of disjoint cycles lcm.
    pub fn order(&self) -> u128 {
        self.cycles()
            .into_iter()
            .map(|(len, color)| {
                let ord_color = if color == 0 {
                    1
                } else {
                    (self.r / self.r.gcd(&color)) as u128
                };
                len as u128 * ord_color
            })
            .fold(1u128, |acc, o| acc.lcm(&o))
    }

    /// The sum of all colors mod `r`; an element lies in `G(r,q,n)` iff this
    /// is `0` mod `q`.
    pub fn color_sum(&self) -> usize {
        self.colors.iter().sum::<usize>() % self.r
    }

    pub fn is_member(&self, q: usize) -> bool {
        self.color_sum().is_multiple_of(q)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; {:?})", self.colors, self.perm)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GroupElement", 2)?;
        s.serialize_field("colors", &self.colors)?;
        s.serialize_field("perm", &self.perm)?;
        s.end()
    }
}

/// Sum over components of `j · (number of parts of component j)`, mod `r`:
/// the color sum of any element of this type.
pub fn type_color_sum(t: &MultiPartition) -> usize {
    let r = t.r();
    t.components()
        .iter()
        .enumerate()
        .map(|(j, c)| j * c.len())
        .sum::<usize>()
        % r
}

/// Whether elements of type `t` lie in the index-`q` subgroup.
pub fn type_in_subgroup(t: &MultiPartition, q: usize) -> bool {
    type_color_sum(t).is_multiple_of(q)
}

/// `∏_j z(λ_j) · r^(number of parts of λ_j)` where `z(μ) = ∏ kᵐᵏ·mₖ!` —
/// the centralizer order of an element of type `t` in the full wreath
/// product.
pub fn centralizer_order_full(t: &MultiPartition) -> u128 {
    let r = t.r() as u128;
    let mut acc: u128 = 1;
    for comp in t.components() {
        let mut mult: HashMap<usize, u32> = HashMap::new();
        for &part in comp.parts() {
            *mult.entry(part).or_insert(0) += 1;
        }
        for (k, m) in mult {
            for _ in 0..m {
                acc = acc.checked_mul(k as u128).expect("centralizer overflow");
            }
            for f in 1..=m as u128 {
                acc = acc.checked_mul(f).expect("centralizer overflow");
            }
        }
        for _ in 0..comp.len() {
            acc = acc.checked_mul(r).expect("centralizer overflow");
        }
    }
    acc
}

/// Class size of type `t` in the full wreath product `G(r,1,n)`.
pub fn class_size_full(t: &MultiPartition) -> u128 {
    let key = GroupKey::new(t.r(), 1, t.total().max(1)).expect("valid key");
    if t.total() == 0 {
        return 1;
    }
    key.order() / centralizer_order_full(t)
}

/// The number of `G(r,q,n)`-classes the full class of type `t` breaks into:
/// `gcd` of `q`, all cycle lengths, and the gcd of the nonzero cycle colors
/// (the latter taken as `0` — i.e. absorbed — when every color is zero).
pub fn splitting_number(t: &MultiPartition, q: usize) -> usize {
    let mut g = 0usize;
    for (j, comp) in t.components().iter().enumerate() {
        if j > 0 && !comp.is_empty() {
            g = g.gcd(&j);
        }
    }
    for comp in t.components() {
        for &part in comp.parts() {
            g = g.gcd(&part);
        }
    }
    g.gcd(&q)
}

/// Whether every element of type `t` has order coprime to `p`: each cycle of
/// length `l` and color `j` has order `l · r/gcd(r,j)`, and `t` is
/// `p`-regular iff none of these is divisible by `p`.
pub fn is_p_regular_type(t: &MultiPartition, p: u64) -> bool {
    let r = t.r();
    for (j, comp) in t.components().iter().enumerate() {
        if comp.is_empty() {
            continue;
        }
        let ord_color = if j == 0 { 1 } else { (r / r.gcd(&j)) as u64 };
        for &part in comp.parts() {
            if (part as u64 * ord_color).is_multiple_of(p) {
                return false;
            }
        }
    }
    true
}

/// The largest power of `p` dividing `x` (with `p_part(0, p)` undefined and
/// asserted against).
pub fn p_part(x: u128, p: u64) -> u128 {
    assert!(x > 0, "p-part of zero");
    let mut acc: u128 = 1;
    let mut x = x;
    while x.is_multiple_of(p as u128) {
        acc *= p as u128;
        x /= p as u128;
    }
    acc
}

/// All elements of `G(r,q,n)` in a fixed deterministic order (color vectors
/// as ascending base-`r` odometers, most significant digit first; within a
/// color vector, permutations in lexicographic order). Refuses groups
/// larger than `limit`.
pub fn enumerate_elements(key: &GroupKey, limit: u128) -> Result<Vec<GroupElement>> {
    if key.order() > limit {
        return Err(Error::ResourceLimit(format!(
            "{key} has order {}, above the enumeration limit {limit}",
            key.order()
        )));
    }
    let (r, q, n) = (key.r(), key.q(), key.n());
    let mut out = Vec::with_capacity(key.order() as usize);
    let mut colors = vec![0usize; n];
    loop {
        if colors.iter().sum::<usize>() % q == 0 {
            for perm in (0..n).permutations(n) {
                out.push(GroupElement {
                    r,
                    colors: colors.clone(),
                    perm,
                });
            }
        }
        // advance odometer; most significant digit is colors[0]
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            colors[i] += 1;
            if colors[i] < r {
                break;
            }
            colors[i] = 0;
        }
    }
}

/// A conjugacy class of `G(r,q,n)` computed by brute force.
#[derive(Clone, Debug)]
pub struct BruteClass {
    /// The least member in enumeration order.
    pub rep: GroupElement,
    /// All members, sorted.
    pub members: Vec<GroupElement>,
}

impl BruteClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// All conjugacy classes of `G(r,q,n)`, ordered by their minimal member in
/// the element enumeration order. Classes are computed by closing each
/// unassigned element under conjugation by the whole group.
pub fn conjugacy_classes_brute(key: &GroupKey, limit: u128) -> Result<Vec<BruteClass>> {
    let elements = enumerate_elements(key, limit)?;
    let index: HashMap<&GroupElement, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut assigned = vec![false; elements.len()];
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if assigned[start] {
            continue;
        }
        let mut member_ids = vec![start];
        assigned[start] = true;
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for h in &elements {
                let conj = elements[i].conjugated_by(h);
                let j = *index.get(&conj).expect("conjugate left the subgroup");
                if !assigned[j] {
                    assigned[j] = true;
                    member_ids.push(j);
                    frontier.push(j);
                }
            }
        }
        member_ids.sort_unstable();
        let members: Vec<GroupElement> = member_ids
            .into_iter()
            .map(|i| elements[i].clone())
            .collect();
        classes.push(BruteClass {
            rep: members[0].clone(),
            members,
        });
    }
    Ok(classes)
}
