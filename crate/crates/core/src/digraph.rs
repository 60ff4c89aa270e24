//! Strict digraphs on dense vertex labels `0..n`.
//!
//! Every vertex owns one successor row stored as a bitset, so the set
//! operations used by the checkers run a machine word at a time. Loops are unrepresentable through the public API: every
//! constructor and mutator rejects `u == w`.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::matrix::ZeroOneMatrix;

/// A set of vertex labels, sized to the order of the digraph it refers to.
pub type VertexSet = FixedBitSet;

/// Builds a vertex set of capacity `n` from the given members.
///
/// Members `>= n` panic, as with [`FixedBitSet::insert`].
pub fn vertex_set<I: IntoIterator<Item = usize>>(n: usize, members: I) -> VertexSet {
    let mut set = FixedBitSet::with_capacity(n);
    for v in members {
        set.insert(v);
    }
    set
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    succ: Vec<FixedBitSet>,
}

/// Out- and in-degree profile of a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees {
    pub out: Vec<usize>,
    pub inn: Vec<usize>,
    pub max_out: usize,
    pub max_in: usize,
}

impl Digraph {
    pub fn new_empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        Ok(Self {
            succ: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Result<Self> {
        let mut d = Self::new_empty(n)?;
        for (u, w) in arcs {
            d.add_arc(u, w)?;
        }
        Ok(d)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.succ.len()
    }

    /// Number of arcs, `e(D)`.
    pub fn size(&self) -> usize {
        self.succ.iter().map(|row| row.count_ones(..)).sum()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Inserts the arc `u -> w`. Inserting an existing arc is a no-op.
    pub fn add_arc(&mut self, u: usize, w: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if u == w {
            return Err(Error::Loop(u));
        }
        self.succ[u].insert(w);
        Ok(())
    }

    /// Consuming variant of [`Digraph::add_arc`].
    pub fn with_arc(mut self, u: usize, w: usize) -> Result<Self> {
        self.add_arc(u, w)?;
        Ok(self)
    }

    pub fn remove_arc(&mut self, u: usize, w: usize) {
        if u < self.order() && w < self.order() {
            self.succ[u].set(w, false);
        }
    }

    #[inline]
    pub fn has_arc(&self, u: usize, w: usize) -> bool {
        u < self.order() && self.succ[u].contains(w)
    }

    /// `N+(u)`.
    #[inline]
    pub fn successors(&self, u: usize) -> &VertexSet {
        &self.succ[u]
    }

    /// `N-(u)`, computed by scanning every row.
    pub fn predecessors(&self, u: usize) -> VertexSet {
        let n = self.order();
        vertex_set(n, (0..n).filter(|&x| self.succ[x].contains(u)))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.succ[u].count_ones(..)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().map(move |w| (u, w)))
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Self {
        let n = self.order();
        let mut succ = vec![FixedBitSet::with_capacity(n); n];
        for (u, w) in self.arcs() {
            succ[w].insert(u);
        }
        Self { succ }
    }

    /// `D + H`: vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Self {
        let shift = self.order();
        let n = shift + other.order();
        let mut succ = Vec::with_capacity(n);
        for row in &self.succ {
            succ.push(vertex_set(n, row.ones()));
        }
        for row in &other.succ {
            succ.push(vertex_set(n, row.ones().map(|w| w + shift)));
        }
        Self { succ }
    }

    /// `D(X)`, relabelled by increasing original index.
    pub fn induced(&self, members: &VertexSet) -> Result<Self> {
        if let Some(bad) = members.ones().find(|&v| v >= self.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                order: self.order(),
            });
        }
        let keep: Vec<usize> = members.ones().collect();
        if keep.is_empty() {
            return Err(Error::EmptyOrder);
        }
        let mut index = vec![usize::MAX; self.order()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let m = keep.len();
        let succ = keep
            .iter()
            .map(|&old| {
                vertex_set(
                    m,
                    self.succ[old]
                        .ones()
                        .filter(|&w| members.contains(w))
                        .map(|w| index[w]),
                )
            })
            .collect();
        Ok(Self { succ })
    }

    pub fn degrees(&self) -> Degrees {
        let n = self.order();
        let out: Vec<usize> = self.succ.iter().map(|r| r.count_ones(..)).collect();
        let mut inn = vec![0; n];
        for (_, w) in self.arcs() {
            inn[w] += 1;
        }
        Degrees {
            max_out: out.iter().copied().max().unwrap_or(0),
            max_in: inn.iter().copied().max().unwrap_or(0),
            out,
            inn,
        }
    }

    /// `e(S, T)`: arcs with tail in `tails` and head in `heads`.
    pub fn e_between(&self, tails: &VertexSet, heads: &VertexSet) -> usize {
        tails
            .ones()
            .filter(|&u| u < self.order())
            .map(|u| self.succ[u].intersection_count(heads))
            .sum()
    }

    /// Applies a relabelling: arc `(u, w)` becomes `(perm[u], perm[w])`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::OrderMismatch(perm.len(), n));
        }
        let mut seen = FixedBitSet::with_capacity(n);
        for &p in perm {
            if p >= n || seen.put(p) {
                return Err(Error::MalformedSpec(format!(
                    "relabelling {perm:?} is not a permutation"
                )));
            }
        }
        let mut succ = vec![FixedBitSet::with_capacity(n); n];
        for (u, w) in self.arcs() {
            succ[perm[u]].insert(perm[w]);
        }
        Ok(Self { succ })
    }

    pub fn to_matrix(&self) -> ZeroOneMatrix {
        let n = self.order();
        let mut m = ZeroOneMatrix::zeros(n);
        for (u, w) in self.arcs() {
            m.set(u, w, true);
        }
        m
    }

    /// `D(A)`; rejects any 1 on the diagonal.
    pub fn from_matrix(m: &ZeroOneMatrix) -> Result<Self> {
        let n = m.order();
        let mut d = Self::new_empty(n)?;
        for i in 0..n {
            if m.get(i, i) {
                return Err(Error::NonzeroTrace(i));
            }
            for j in 0..n {
                if m.get(i, j) {
                    d.succ[i].insert(j);
                }
            }
        }
        Ok(d)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<(usize, usize)> = self.arcs().collect();
        write!(f, "Digraph::from_arcs({}, {:?})", self.order(), arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p22() -> Digraph {
        Digraph::from_arcs(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn empty_orders() {
        assert_eq!(Digraph::new_empty(1).unwrap().size(), 0);
        let d = Digraph::new_empty(5).unwrap();
        assert_eq!((d.order(), d.size()), (5, 0));
        assert_eq!(Digraph::new_empty(0), Err(Error::EmptyOrder));
    }

    #[test]
    fn add_arc_is_idempotent_and_strict() {
        let mut d = Digraph::new_empty(2).unwrap();
        d.add_arc(0, 1).unwrap();
        assert_eq!(d.size(), 1);
        d.add_arc(0, 1).unwrap();
        assert_eq!(d.size(), 1);
        assert_eq!(d.add_arc(0, 0), Err(Error::Loop(0)));
        assert!(matches!(
            d.add_arc(0, 2),
            Err(Error::VertexOutOfRange { vertex: 2, order: 2 })
        ));
    }

    #[test]
    fn reverse_path_and_star() {
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            path.reverse(),
            Digraph::from_arcs(3, [(2, 1), (1, 0)]).unwrap()
        );
        let star = Digraph::from_arcs(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let in_star = star.reverse();
        assert!((1..4).all(|u| in_star.has_arc(u, 0)));
        assert_eq!(in_star.size(), 3);
        assert_eq!(in_star.reverse(), star);
    }

    #[test]
    fn disjoint_unions() {
        let c1 = Digraph::new_empty(1).unwrap();
        let two = c1.disjoint_union(&c1);
        assert_eq!((two.order(), two.size()), (2, 0));

        let cycle = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let both = cycle.disjoint_union(&cycle);
        assert_eq!((both.order(), both.size()), (4, 4));
        assert!(both.has_arc(2, 3) && both.has_arc(3, 2) && !both.has_arc(1, 2));

        let padded = p22().disjoint_union(&Digraph::new_empty(3).unwrap());
        assert_eq!(padded.order(), 7);
        assert_eq!(padded.induced(&vertex_set(7, 0..4)).unwrap(), p22());
    }

    #[test]
    fn induced_subdigraphs() {
        let d = p22();
        assert_eq!(d.induced(&vertex_set(4, 0..4)).unwrap(), d);
        // {0,1,3} keeps 0->1 and 1->3, relabelled to 0->1->2.
        let sub = d.induced(&vertex_set(4, [0, 1, 3])).unwrap();
        assert_eq!(sub, Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(
            d.induced(&FixedBitSet::with_capacity(4)),
            Err(Error::EmptyOrder)
        );
        assert!(d.induced(&vertex_set(9, [8])).is_err());
    }

    #[test]
    fn degree_profiles() {
        let star = Digraph::from_arcs(5, (1..5).map(|w| (0, w))).unwrap();
        let deg = star.degrees();
        assert_eq!((deg.max_out, deg.max_in), (4, 1));
        let cycle = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(cycle.degrees().out, vec![1, 1]);
        assert_eq!(cycle.degrees().inn, vec![1, 1]);
    }

    #[test]
    fn arc_counts_between_sets() {
        let d = p22();
        let all = vertex_set(4, 0..4);
        assert_eq!(d.e_between(&all, &all), d.size());
        assert_eq!(d.e_between(&vertex_set(4, [0]), &vertex_set(4, [1, 2])), 2);
        let empty = Digraph::new_empty(4).unwrap();
        assert_eq!(empty.e_between(&all, &all), 0);
    }

    #[test]
    fn matrix_conversions() {
        let cycle = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let m = cycle.to_matrix();
        assert_eq!(m.rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(Digraph::from_matrix(&m).unwrap(), cycle);
        let identity = ZeroOneMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(Digraph::from_matrix(&identity), Err(Error::NonzeroTrace(0)));
        assert_eq!(p22().to_matrix().trace(), 0);
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let d = p22();
        assert!(d.relabel(&[0, 0, 1, 2]).is_err());
        assert_eq!(d.relabel(&[0, 1, 2, 3]).unwrap(), d);
        let swapped = d.relabel(&[3, 2, 1, 0]).unwrap();
        assert!(swapped.has_arc(3, 2) && swapped.has_arc(1, 0));
    }
}
