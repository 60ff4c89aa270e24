//! Exact maximum size of F-free digraphs at small orders.
//!
//! Depth-first search over the ordered pairs `(u, w)`, `u != w`, in
//! lexicographic order; each pair is first tried as an arc, then as a
//! non-arc. The state keeps, for every source `a`, the set `reach[a]` of
//! targets already reached by a 2-walk from `a`. Since the state is F-free at
//! every node, each bit of `reach[a]` stands for exactly one 2-walk, so the
//! set can be undone exactly when an arc is removed.
//!
//! Adding `u -> w` creates the walks `x -> u -> w` for `x in N-(u)` and
//! `u -> w -> y` for `y in N+(w)`; the arc is admissible iff none of those
//! targets is already reached.
//!
//! The witness is the first maximum digraph met in this order, which is the
//! maximum digraph whose arc-indicator string (pairs in lexicographic order,
//! arc = 1) is lexicographically greatest. Improvements must be strict, so
//! the witness does not depend on pruning.

use std::fmt;
use std::time::{Duration, Instant};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::walk::is_f_free;

/// Largest order the search accepts (one machine word per row).
pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: Budget,
    /// Bound each node by the undecided pairs that are still individually
    /// admissible, capped by `n + (n - Δ+)Δ+ <= ⌊(n² + 4n)/4⌋`.
    pub lemma2_bound: bool,
    /// Only explore digraphs in which vertex 0 has maximum out-degree.
    pub symmetry: bool,
    /// Recount the 2-walk state from scratch at every node.
    pub audit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub max_size: usize,
    pub witness: Digraph,
    pub nodes_explored: u64,
    pub nodes_pruned: u64,
    pub complete: bool,
    pub elapsed: Duration,
}

/// One line per event, `key=value` fields separated by spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProgressEvent {
    Improved { size: usize, nodes: u64, depth: usize },
    Heartbeat { nodes: u64, pruned: u64, incumbent: usize, depth: usize },
    Finished { size: usize, nodes: u64, pruned: u64, complete: bool },
}

impl fmt::Display for ProgressEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProgressEvent::Improved { size, nodes, depth } => {
                write!(f, "improved size={size} nodes={nodes} depth={depth}")
            }
            ProgressEvent::Heartbeat { nodes, pruned, incumbent, depth } => write!(
                f,
                "progress nodes={nodes} pruned={pruned} incumbent={incumbent} depth={depth}"
            ),
            ProgressEvent::Finished { size, nodes, pruned, complete } => write!(
                f,
                "finished size={size} nodes={nodes} pruned={pruned} complete={complete}"
            ),
        }
    }
}

const HEARTBEAT_MASK: u64 = (1 << 22) - 1;

struct Search<'a> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    succ: Vec<u64>,
    pred: Vec<u64>,
    reach: Vec<u64>,
    arcs: usize,
    best: Option<(usize, Vec<u64>)>,
    nodes: u64,
    pruned: u64,
    aborted: bool,
    cap: usize,
    config: SearchConfig,
    start: Instant,
    progress: Option<&'a mut dyn FnMut(&ProgressEvent)>,
}

#[inline]
fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}

impl Search<'_> {
    #[inline]
    fn admissible(&self, u: usize, w: usize) -> bool {
        if self.reach[u] & self.succ[w] != 0 {
            return false;
        }
        bits(self.pred[u]).all(|x| self.reach[x] & (1 << w) == 0)
    }

    fn add(&mut self, u: usize, w: usize) {
        for x in bits(self.pred[u]) {
            self.reach[x] |= 1 << w;
        }
        self.reach[u] |= self.succ[w];
        self.succ[u] |= 1 << w;
        self.pred[w] |= 1 << u;
        self.arcs += 1;
    }

    fn remove(&mut self, u: usize, w: usize) {
        self.succ[u] &= !(1 << w);
        self.pred[w] &= !(1 << u);
        self.reach[u] &= !self.succ[w];
        for x in bits(self.pred[u]) {
            self.reach[x] &= !(1 << w);
        }
        self.arcs -= 1;
    }

    fn recount(&self) {
        for a in 0..self.n {
            let mut once = 0u64;
            for c in bits(self.succ[a]) {
                assert_eq!(once & self.succ[c], 0, "search state is not F-free at source {a}");
                once |= self.succ[c];
            }
            assert_eq!(once, self.reach[a], "incremental 2-walk state drifted at source {a}");
        }
        for w in 0..self.n {
            let col = (0..self.n).filter(|&u| self.succ[u] & (1 << w) != 0);
            assert_eq!(col.fold(0u64, |acc, u| acc | 1 << u), self.pred[w]);
        }
    }

    fn bound(&self, idx: usize) -> usize {
        if !self.config.lemma2_bound {
            return self.arcs + (self.pairs.len() - idx);
        }
        let open = self.pairs[idx..]
            .iter()
            .filter(|&&(u, w)| self.admissible(u, w))
            .count();
        (self.arcs + open).min(self.cap)
    }

    fn incumbent(&self) -> Option<usize> {
        self.best.as_ref().map(|(s, _)| *s)
    }

    fn emit(&mut self, event: ProgressEvent) {
        if let Some(cb) = self.progress.as_mut() {
            cb(&event);
        }
    }

    fn out_of_budget(&self) -> bool {
        if let Some(max) = self.config.budget.max_nodes {
            if self.nodes >= max {
                return true;
            }
        }
        if let Some(limit) = self.config.budget.max_time {
            if self.nodes & 0xfff == 0 && self.start.elapsed() >= limit {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, idx: usize) {
        if self.aborted {
            return;
        }
        if self.out_of_budget() {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        if self.config.audit {
            self.recount();
        }
        if self.nodes & HEARTBEAT_MASK == 0 {
            let event = ProgressEvent::Heartbeat {
                nodes: self.nodes,
                pruned: self.pruned,
                incumbent: self.incumbent().unwrap_or(0),
                depth: idx,
            };
            self.emit(event);
        }

        if idx == self.pairs.len() {
            if self.incumbent().is_none_or(|b| self.arcs > b) {
                self.best = Some((self.arcs, self.succ.clone()));
                let event = ProgressEvent::Improved {
                    size: self.arcs,
                    nodes: self.nodes,
                    depth: idx,
                };
                self.emit(event);
            }
            return;
        }
        if let Some(best) = self.incumbent() {
            if self.bound(idx) <= best {
                self.pruned += 1;
                return;
            }
        }

        let (u, w) = self.pairs[idx];
        let symmetric_ok = !self.config.symmetry
            || u == 0
            || self.succ[u].count_ones() < self.succ[0].count_ones();
        if symmetric_ok && self.admissible(u, w) {
            self.add(u, w);
            self.dfs(idx + 1);
            self.remove(u, w);
        }
        self.dfs(idx + 1);
    }
}

pub fn brute_force_max(n: usize, config: &SearchConfig) -> Result<SearchResult> {
    search(n, config, None)
}

/// As [`brute_force_max`], reporting [`ProgressEvent`]s to `progress`.
pub fn brute_force_max_with_progress(
    n: usize,
    config: &SearchConfig,
    progress: &mut dyn FnMut(&ProgressEvent),
) -> Result<SearchResult> {
    search(n, config, Some(progress))
}

fn search(n: usize, config: &SearchConfig, progress: Option<&mut dyn FnMut(&ProgressEvent)>) -> Result<SearchResult> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    if n > MAX_SEARCH_ORDER {
        return Err(Error::OutOfScope {
            n,
            min: 1,
            what: "the exhaustive search (at most 64 vertices)",
        });
    }
    let pairs = (0..n)
        .flat_map(|u| (0..n).filter(move |&w| w != u).map(move |w| (u, w)))
        .collect();
    let mut s = Search {
        n,
        pairs,
        succ: vec![0; n],
        pred: vec![0; n],
        reach: vec![0; n],
        arcs: 0,
        best: None,
        nodes: 0,
        pruned: 0,
        aborted: false,
        cap: (n * n + 4 * n) / 4,
        config: *config,
        start: Instant::now(),
        progress,
    };
    s.dfs(0);

    let (max_size, rows) = s.best.clone().unwrap_or((0, vec![0; n]));
    let witness = Digraph::from_arcs(
        n,
        rows.iter()
            .enumerate()
            .flat_map(|(u, &row)| bits(row).map(move |w| (u, w))),
    )?;
    let finished = ProgressEvent::Finished {
        size: max_size,
        nodes: s.nodes,
        pruned: s.pruned,
        complete: !s.aborted,
    };
    s.emit(finished);
    Ok(SearchResult {
        n,
        max_size,
        witness,
        nodes_explored: s.nodes,
        nodes_pruned: s.pruned,
        complete: !s.aborted,
        elapsed: s.start.elapsed(),
    })
}

/// `true` iff no absent arc can be added without creating a violation.
pub fn is_arc_maximal(d: &Digraph) -> Result<bool> {
    if let Some(w) = is_f_free(d).witness {
        return Err(Error::NotFFree(w.to_string()));
    }
    let n = d.order();
    let mut probe = d.clone();
    for u in 0..n {
        for w in 0..n {
            if u == w || d.has_arc(u, w) {
                continue;
            }
            probe.add_arc(u, w)?;
            let still_free = is_f_free(&probe).ok;
            probe.remove_arc(u, w);
            if still_free {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
