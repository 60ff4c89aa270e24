//! Deciding whether a digraph has two distinct 2-walks with the same ends.
//!
//! Two routes are provided and kept deliberately unrelated:
//!
//! * [`is_f_free`] works on successor bitsets. For a fixed source `a` it folds
//!   the rows `N+(c)` for `c in N+(a)` into "reached once" and "reached twice"
//!   sets; any bit in the second set is a target with two intermediates.
//! * [`check_matrix_route`] squares the adjacency matrix with plain integer
//!   arithmetic and looks for an entry above 1.
//!
//! The diagonal needs no special case: a closed pair `a -> c1 -> a`,
//! `a -> c2 -> a` is just a target equal to its source.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::{vertex_set, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::matrix::{NatMatrix, ZeroOneMatrix};

/// Two 2-walks `source -> via.0 -> target` and `source -> via.1 -> target`
/// with `via.0 < via.1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub source: usize,
    pub target: usize,
    pub via: (usize, usize),
}

impl Witness {
    /// `true` for the closed shape (two closed 2-walks at one vertex).
    pub fn is_closed(&self) -> bool {
        self.source == self.target
    }
}

impl fmt::Display for Witness {
    /// `a→{c1,c2}→b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{{{},{}}}→{}", self.source, self.via.0, self.via.1, self.target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub ok: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    fn from_witness(witness: Option<Witness>) -> Self {
        Self {
            ok: witness.is_none(),
            witness,
        }
    }
}

/// Integer square of a 0-1 matrix. Entry `(i, j)` counts the 2-walks `i -> k -> j`.
pub fn square(m: &ZeroOneMatrix) -> NatMatrix {
    let n = m.order();
    let mut out = NatMatrix::zeros(n);
    for i in 0..n {
        for k in 0..n {
            if !m.get(i, k) {
                continue;
            }
            for j in 0..n {
                if m.get(k, j) {
                    out.set(i, j, out.get(i, j) + 1);
                }
            }
        }
    }
    out
}

/// Returns the lexicographically smallest violating `(a, b, c1, c2)` when the
/// digraph is not F-free.
pub fn is_f_free(d: &Digraph) -> CheckReport {
    let n = d.order();
    let words = n.div_ceil(usize::BITS as usize).max(1);
    let mut seen = vec![0usize; words];
    let mut twice = vec![0usize; words];
    for a in 0..n {
        seen.fill(0);
        twice.fill(0);
        for c in d.successors(a).ones() {
            let row = d.successors(c).as_slice();
            for ((s, t), &r) in seen.iter_mut().zip(twice.iter_mut()).zip(row) {
                *t |= *s & r;
                *s |= r;
            }
        }
        let Some(b) = first_bit(&twice) else {
            continue;
        };
        let mut via = d
            .successors(a)
            .ones()
            .filter(|&c| d.successors(c).contains(b));
        let c1 = via.next().expect("two intermediates recorded");
        let c2 = via.next().expect("two intermediates recorded");
        return CheckReport::from_witness(Some(Witness {
            source: a,
            target: b,
            via: (c1, c2),
        }));
    }
    CheckReport::from_witness(None)
}

fn first_bit(words: &[usize]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * usize::BITS as usize + w.trailing_zeros() as usize)
}

/// `true` iff every entry of `A^2` is at most 1.
pub fn check_matrix_route(d: &Digraph) -> bool {
    square(&d.to_matrix()).max_entry() <= 1
}

/// Some `(v, u)` with `e(N+(v), u) >= 2`, if any exists. On F-free digraphs
/// this never fires: two successors of a vertex share no common successor.
pub fn common_successor_violation(d: &Digraph) -> Option<(usize, usize)> {
    let n = d.order();
    for v in 0..n {
        let out = d.successors(v);
        for u in 0..n {
            let single = vertex_set(n, [u]);
            if d.e_between(out, &single) > 1 {
                return Some((v, u));
            }
        }
    }
    None
}

/// The partition `V1(v) = N+(v)`, `V2 = V \ V1`, `V3 = {u in V2 : N+(u) = V1}`,
/// `V4 = V2 \ V3` around a pivot `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexContext {
    pub pivot: usize,
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub v3: VertexSet,
    pub v4: VertexSet,
}

impl VertexContext {
    /// `u'`: the unique vertex of `V1` missed by `u`, defined only when `u`
    /// reaches exactly `|V1| - 1` vertices of `V1`.
    pub fn u_prime(&self, d: &Digraph, u: usize) -> Result<Option<usize>> {
        if u >= self.v2.len() || !self.v2.contains(u) {
            return Err(Error::NotInComplement(u));
        }
        let size = self.v1.count_ones(..);
        let hit = d.successors(u).intersection_count(&self.v1);
        if size == 0 || hit + 1 != size {
            return Ok(None);
        }
        Ok(self.v1.ones().find(|&t| !d.has_arc(u, t)))
    }
}

pub fn context(d: &Digraph, v: usize) -> Result<VertexContext> {
    let n = d.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    let v1 = d.successors(v).clone();
    let mut v2 = vertex_set(n, 0..n);
    v2.difference_with(&v1);
    let v3 = vertex_set(n, v2.ones().filter(|&u| *d.successors(u) == v1));
    let mut v4 = v2.clone();
    v4.difference_with(&v3);
    Ok(VertexContext {
        pivot: v,
        v1,
        v2,
        v3,
        v4,
    })
}

/// `alpha`: the largest number of successors any vertex has inside `V2(v)`,
/// over all pivots `v` of maximum out-degree. Zero for the empty digraph.
pub fn alpha(d: &Digraph) -> usize {
    let n = d.order();
    let max_out = (0..n).map(|v| d.out_degree(v)).max().unwrap_or(0);
    if max_out == 0 {
        return 0;
    }
    let mut best = 0;
    for v in (0..n).filter(|&v| d.out_degree(v) == max_out) {
        let mut v2 = vertex_set(n, 0..n);
        v2.difference_with(d.successors(v));
        for u in 0..n {
            best = best.max(d.successors(u).intersection_count(&v2));
        }
    }
    best
}
