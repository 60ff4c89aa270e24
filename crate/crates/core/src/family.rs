//! The six extremal families and their parametrisation.
//!
//! Every instance has vertex partition `V1 ∪ V2` with `|V1| = ⌊n/2⌋ + 1` and
//! `|V2| = ⌈n/2⌉ - 1`. [`construct`] lays vertices out in a fixed order:
//! `V1 = 0..p`, `V2 = p..n`, with the named vertices first inside each part:
//!
//! | family | `V1` head        | `V2` head | `V1` structure        | `V2` structure                      |
//! |--------|------------------|-----------|-----------------------|-------------------------------------|
//! | D1     | `y1 = 0, y2 = 1` |           | `T(y1, y2)`           | empty                               |
//! | D2     | `x = 0, y = 1`   | `w = p`   | `S_y(x)`              | `T'(w)` + isolated                  |
//! | D3     | `y = 0`          |           | `T(y)`                | empty                               |
//! | D4     | `x = 0`          | `w = p`   | `S(x)`                | `T'(w)` + in-stars + isolated       |
//! | D5     | `y1 = 0, y2 = 1` |           | `T(y1, y2)`           | empty, one unmatched vertex         |
//! | D6     | `x = 0, y = 1`   | `w = p, z = p + 1` | `S_y(x)`     | `T'(w, z)` + isolated               |
//!
//! Trees are laid out in preorder: a child gets the next free label and its
//! own children follow it immediately.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::D1,
        Family::D2,
        Family::D3,
        Family::D4,
        Family::D5,
        Family::D6,
    ];

    /// D1 lives on even orders, every other family on odd orders.
    pub fn wants_even(self) -> bool {
        self == Family::D1
    }

    pub fn accepts_parity(self, n: usize) -> bool {
        n.is_multiple_of(2) == self.wants_even()
    }

    /// Smallest order of the right parity at which the mandatory pieces fit.
    pub fn min_order(self) -> usize {
        match self {
            Family::D1 => 4,
            Family::D2 => 5,
            Family::D3 | Family::D4 | Family::D5 => 3,
            Family::D6 => 7,
        }
    }

    pub fn check_order(self, n: usize) -> Result<()> {
        if !self.accepts_parity(n) {
            return Err(Error::Parity { family: self, n });
        }
        if n < self.min_order() {
            return Err(Error::BelowMinimum {
                family: self,
                n,
                min: self.min_order(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::MalformedSpec(format!("unknown family {s:?}")))
    }
}

/// `(|V1|, |V2|)` for order `n`.
pub fn parts(n: usize) -> (usize, usize) {
    let p = n / 2 + 1;
    (p, n.saturating_sub(p))
}

/// Closed form `⌊(n² + 4n)/4⌋ - 1`, valid for `n >= 8`.
pub fn ex_formula(n: usize) -> Result<usize> {
    if n < 8 {
        return Err(Error::OutOfScope {
            n,
            min: 8,
            what: "the closed form for ex(n)",
        });
    }
    Ok((n * n + 4 * n) / 4 - 1)
}

/// The constructive lower bound: `(n² + 4n - 5)/4` for odd `n`,
/// `(n² + 4n - 4)/4` for even `n`, valid for `n >= 3`.
pub fn lower_bound(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::OutOfScope {
            n,
            min: 3,
            what: "the constructive lower bound",
        });
    }
    Ok(if n % 2 == 1 {
        (n * n + 4 * n - 5) / 4
    } else {
        (n * n + 4 * n - 4) / 4
    })
}

/// A rooted tree of depth at most two.
///
/// The root has `branches.len()` children and child `i` has `branches[i]`
/// children of its own. An empty `branches` is the lone root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arborescence {
    pub branches: Vec<usize>,
}

impl Arborescence {
    pub fn trivial() -> Self {
        Self { branches: Vec::new() }
    }

    /// Out-star with `leaves` children.
    pub fn star(leaves: usize) -> Self {
        Self {
            branches: vec![0; leaves],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.branches.len() + self.branches.iter().sum::<usize>()
    }

    pub fn arc_count(&self) -> usize {
        self.size() - 1
    }

    pub fn depth(&self) -> usize {
        match self.branches.iter().max() {
            None => 0,
            Some(0) => 1,
            Some(_) => 2,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.branches.is_empty()
    }

    /// Every shape of size `m` up to isomorphism, stars first.
    pub fn all_of_size(m: usize) -> Vec<Arborescence> {
        if m == 0 {
            return Vec::new();
        }
        if m == 1 {
            return vec![Self::trivial()];
        }
        let mut out = Vec::new();
        for children in (1..m).rev() {
            let rest = m - 1 - children;
            for mut part in partitions(rest, children, rest) {
                part.resize(children, 0);
                out.push(Self { branches: part });
            }
        }
        out
    }

    /// Lays the tree out from `root`, taking fresh labels from `next`.
    /// Arcs point away from the root unless `toward_root` is set.
    fn lay_out(&self, root: usize, next: &mut usize, toward_root: bool, arcs: &mut Vec<(usize, usize)>) -> Vec<usize> {
        let mut members = vec![root];
        let push = |a: usize, b: usize, arcs: &mut Vec<(usize, usize)>| {
            arcs.push(if toward_root { (b, a) } else { (a, b) });
        };
        for &grand in &self.branches {
            let child = *next;
            *next += 1;
            push(root, child, arcs);
            members.push(child);
            for _ in 0..grand {
                let leaf = *next;
                *next += 1;
                push(child, leaf, arcs);
                members.push(leaf);
            }
        }
        members
    }
}

impl fmt::Display for Arborescence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.branches.iter().map(usize::to_string).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

impl FromStr for Arborescence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::MalformedSpec(format!("arborescence {s:?} is not [..]")))?;
        let branches = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::MalformedSpec(format!("bad branch size {t:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(Self { branches })
    }
}

/// Partitions of `total` into at most `max_parts` parts each `<= max_part`,
/// parts in non-increasing order.
fn partitions(total: usize, max_parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    if max_parts == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(total)).rev() {
        for mut rest in partitions(total - first, max_parts - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Multisets of in-star sizes (each `>= 2`) with total at most `budget`.
fn in_star_lists(budget: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for total in 0..=budget {
        for part in partitions(total, total, total) {
            if part.iter().all(|&s| s >= 2) {
                out.push(part);
            }
        }
    }
    out
}

/// A fully parametrised member of one family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    /// Structure inside `V1`: the trees hanging from `y1` and `y2` (D1, D5)
    /// or `T(y)` (D3). Empty for the star-shaped families.
    #[serde(default)]
    pub inside: Vec<Arborescence>,
    /// Reversed trees inside `V2`: `[T'(w)]` for D2 and D4 (a lone root means
    /// the tree vanishes), `[w side, z side]` for D6.
    #[serde(default)]
    pub tail: Vec<Arborescence>,
    /// In-star sizes for D4.
    #[serde(default)]
    pub in_stars: Vec<usize>,
    /// `matching[i] = j` pairs the `i`-th matched vertex of `V1` with the
    /// `j`-th matched vertex of `V2`, both in increasing label order.
    pub matching: Vec<usize>,
    /// The family's free choice: `y` in D4 (index into `V1 \ {x}`), the
    /// unmatched vertex of `V2` in D5, `y'` in D6 (index into `V1 \ {x, y}`).
    #[serde(default)]
    pub pick: usize,
}

/// Labels of the named vertices of a constructed instance.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Roles {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub v3: Vec<usize>,
    pub v4: Vec<usize>,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub y1: Option<usize>,
    pub y2: Option<usize>,
    pub y_prime: Option<usize>,
    pub w: Option<usize>,
    pub z: Option<usize>,
    /// The vertex of `V2` without a predecessor in `V1` (D5 only).
    pub unmatched: Option<usize>,
}

fn malformed<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::MalformedSpec(msg.into()))
}

impl FamilySpec {
    /// Number of `V1 -> V2` matching arcs, not counting `x -> w`.
    pub fn matched_count(&self) -> usize {
        let (p, _) = parts(self.n);
        match self.family {
            Family::D1 | Family::D2 | Family::D4 | Family::D5 => p.saturating_sub(2),
            Family::D3 => p.saturating_sub(1),
            Family::D6 => p.saturating_sub(3),
        }
    }

    /// Labels of the matched vertices in `V1` and in `V2`, increasing; the
    /// matching pairs the `i`-th of the first list with `matching[i]`-th of
    /// the second.
    pub fn matched_ends(&self) -> (Vec<usize>, Vec<usize>) {
        let (p, _) = parts(self.n);
        let (skip_v1, skip_v2): (Vec<usize>, Vec<usize>) = match self.family {
            Family::D1 => (vec![0, 1], vec![]),
            Family::D3 => (vec![0], vec![]),
            Family::D5 => (vec![0, 1], vec![p + self.pick]),
            Family::D2 => (vec![0, 1], vec![p]),
            Family::D4 => (vec![0, 1 + self.pick], vec![p]),
            Family::D6 => (vec![0, 1, 2 + self.pick], vec![p, p + 1]),
        };
        (
            (0..p).filter(|t| !skip_v1.contains(t)).collect(),
            (p..self.n).filter(|t| !skip_v2.contains(t)).collect(),
        )
    }

    pub(crate) fn pick_range(&self) -> usize {
        let (p, q) = parts(self.n);
        match self.family {
            Family::D4 => p - 1,
            Family::D5 => q,
            Family::D6 => p - 2,
            _ => 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.family.check_order(self.n)?;
        let (p, q) = parts(self.n);
        let sizes = |v: &[Arborescence]| v.iter().map(Arborescence::size).collect::<Vec<_>>();
        let fam = self.family;
        let (inside_len, tail_len) = match fam {
            Family::D1 | Family::D5 => (2, 0),
            Family::D3 => (1, 0),
            Family::D2 | Family::D4 => (0, 1),
            Family::D6 => (0, 2),
        };
        if self.inside.len() != inside_len {
            return malformed(format!("{fam} takes {inside_len} inside trees, got {}", self.inside.len()));
        }
        if self.tail.len() != tail_len {
            return malformed(format!("{fam} takes {tail_len} V2 trees, got {}", self.tail.len()));
        }
        if fam != Family::D4 && !self.in_stars.is_empty() {
            return malformed(format!("{fam} has no in-stars"));
        }
        let inside_total: usize = sizes(&self.inside).iter().sum();
        if inside_len > 0 && inside_total != p {
            return malformed(format!("inside trees cover {inside_total} vertices, |V1| = {p}"));
        }
        if fam == Family::D3 && self.inside[0].is_trivial() {
            return malformed("T(y) needs more than one vertex");
        }
        let tail_total: usize = sizes(&self.tail).iter().sum();
        match fam {
            Family::D2 | Family::D6 => {
                if tail_total + 1 > q {
                    return malformed(format!("V2 trees use {tail_total} of {q} vertices, leaving no isolated vertex"));
                }
            }
            Family::D4 => {
                if let Some(s) = self.in_stars.iter().find(|&&s| s < 2) {
                    return malformed(format!("in-star of size {s}"));
                }
                let used = tail_total + self.in_stars.iter().sum::<usize>();
                if used > q {
                    return malformed(format!("V2 pieces use {used} of {q} vertices"));
                }
            }
            _ => {}
        }
        let k = self.matched_count();
        if self.matching.len() != k {
            return malformed(format!("matching has {} entries, expected {k}", self.matching.len()));
        }
        let mut seen = vec![false; k];
        for &j in &self.matching {
            if j >= k || std::mem::replace(&mut seen[j], true) {
                return malformed(format!("matching {:?} is not a permutation", self.matching));
            }
        }
        if self.pick >= self.pick_range() {
            return malformed(format!("pick {} out of range 0..{}", self.pick, self.pick_range()));
        }
        Ok(())
    }

    /// Predicted size: `(n² + 4n - 4)/4` for D1, `(n² + 4n - 5)/4` otherwise.
    pub fn family_size(&self) -> Result<usize> {
        self.validate()?;
        let n = self.n;
        Ok(if self.family == Family::D1 {
            (n * n + 4 * n - 4) / 4
        } else {
            (n * n + 4 * n - 5) / 4
        })
    }
}

pub fn family_size(spec: &FamilySpec) -> Result<usize> {
    spec.family_size()
}

/// The canonical instance: star-shaped trees (D1 and D5 split the non-root
/// vertices of `V1` as evenly as possible, larger half under `y1`), vanishing
/// optional pieces, identity matching, smallest free choice.
pub fn default_spec(family: Family, n: usize) -> Result<FamilySpec> {
    family.check_order(n)?;
    let (p, _) = parts(n);
    let (inside, tail) = match family {
        Family::D1 | Family::D5 => {
            let rest = p - 2;
            (
                vec![Arborescence::star(rest.div_ceil(2)), Arborescence::star(rest / 2)],
                vec![],
            )
        }
        Family::D3 => (vec![Arborescence::star(p - 1)], vec![]),
        Family::D2 | Family::D4 => (vec![], vec![Arborescence::trivial()]),
        Family::D6 => (vec![], vec![Arborescence::trivial(), Arborescence::trivial()]),
    };
    let mut spec = FamilySpec {
        family,
        n,
        inside,
        tail,
        in_stars: vec![],
        matching: vec![],
        pick: 0,
    };
    spec.matching = (0..spec.matched_count()).collect();
    spec.validate()?;
    Ok(spec)
}

pub fn construct(spec: &FamilySpec) -> Result<Digraph> {
    construct_with_roles(spec).map(|(d, _)| d)
}

pub fn construct_with_roles(spec: &FamilySpec) -> Result<(Digraph, Roles)> {
    spec.validate()?;
    let n = spec.n;
    let (p, _) = parts(n);
    let mut arcs = Vec::new();
    let mut roles = Roles {
        v1: (0..p).collect(),
        v2: (p..n).collect(),
        ..Roles::default()
    };

    // Inside V1.
    match spec.family {
        Family::D1 | Family::D5 => {
            arcs.extend([(0, 1), (1, 0)]);
            let mut next = 2;
            spec.inside[0].lay_out(0, &mut next, false, &mut arcs);
            spec.inside[1].lay_out(1, &mut next, false, &mut arcs);
            roles.y1 = Some(0);
            roles.y2 = Some(1);
        }
        Family::D3 => {
            let mut next = 1;
            spec.inside[0].lay_out(0, &mut next, false, &mut arcs);
            roles.y = Some(0);
        }
        Family::D2 | Family::D6 => {
            arcs.extend([(0, 1), (1, 0)]);
            arcs.extend((2..p).map(|t| (0, t)));
            roles.x = Some(0);
            roles.y = Some(1);
            if spec.family == Family::D6 {
                let y_prime = 2 + spec.pick;
                roles.y_prime = Some(y_prime);
            }
        }
        Family::D4 => {
            arcs.extend((1..p).map(|t| (0, t)));
            roles.x = Some(0);
            let y = 1 + spec.pick;
            roles.y = Some(y);
        }
    }

    // Inside V2.
    let mut v4 = Vec::new();
    match spec.family {
        Family::D1 | Family::D3 => {}
        Family::D5 => {
            let lone = p + spec.pick;
            roles.unmatched = Some(lone);
        }
        Family::D2 => {
            let w = p;
            let mut next = p + 1;
            v4 = spec.tail[0].lay_out(w, &mut next, true, &mut arcs);
            roles.w = Some(w);
        }
        Family::D4 => {
            let w = p;
            let mut next = p + 1;
            let tree = spec.tail[0].lay_out(w, &mut next, true, &mut arcs);
            v4.extend(&tree[1..]);
            for &s in &spec.in_stars {
                let root = next;
                next += 1;
                let star = Arborescence::star(s - 1).lay_out(root, &mut next, true, &mut arcs);
                v4.extend(&star[1..]);
            }
            roles.w = Some(w);
        }
        Family::D6 => {
            let (w, z) = (p, p + 1);
            arcs.extend([(w, z), (z, w)]);
            let mut next = p + 2;
            v4 = spec.tail[0].lay_out(w, &mut next, true, &mut arcs);
            v4.extend(spec.tail[1].lay_out(z, &mut next, true, &mut arcs));
            roles.w = Some(w);
            roles.z = Some(z);
        }
    }
    v4.sort_unstable();
    roles.v3 = (p..n).filter(|u| v4.binary_search(u).is_err()).collect();
    roles.v4 = v4;

    // f: matching plus x -> w.
    let (sources, targets) = spec.matched_ends();
    for (i, &j) in spec.matching.iter().enumerate() {
        arcs.push((sources[i], targets[j]));
    }
    if let (Some(x), Some(w)) = (roles.x, roles.w) {
        arcs.push((x, w));
    }

    // g: V3 -> all of V1, V4 -> V1 \ {x}.
    for &u in &roles.v3 {
        arcs.extend((0..p).map(|t| (u, t)));
    }
    let x = roles.x;
    for &u in &roles.v4 {
        arcs.extend((0..p).filter(|&t| Some(t) != x).map(|t| (u, t)));
    }

    let d = Digraph::from_arcs(n, arcs)?;
    Ok((d, roles))
}

/// A deterministic sweep over tree shapes and free choices, each tried with
/// the identity matching, a cyclic shift and the reversal, truncated at
/// `limit`. Yields nothing when `n` does not suit `family`.
pub fn enumerate_specs(family: Family, n: usize, limit: usize) -> impl Iterator<Item = FamilySpec> {
    let valid = family.check_order(n).is_ok();
    let (p, q) = parts(n);
    let insides: Vec<Vec<Arborescence>> = if !valid {
        Vec::new()
    } else {
        match family {
            Family::D1 | Family::D5 => two_rooted(p),
            Family::D3 => Arborescence::all_of_size(p).into_iter().map(|a| vec![a]).collect(),
            _ => vec![vec![]],
        }
    };
    let tails: Vec<(Vec<Arborescence>, Vec<usize>)> = if !valid {
        Vec::new()
    } else {
        match family {
            Family::D2 => (1..q)
                .flat_map(Arborescence::all_of_size)
                .map(|a| (vec![a], vec![]))
                .collect(),
            Family::D4 => (1..=q)
                .flat_map(|m| {
                    Arborescence::all_of_size(m).into_iter().flat_map(move |a| {
                        in_star_lists(q - m).into_iter().map(move |s| (vec![a.clone()], s))
                    })
                })
                .collect(),
            Family::D6 => (2..q).flat_map(two_rooted).map(|t| (t, vec![])).collect(),
            _ => vec![(vec![], vec![])],
        }
    };
    let template = FamilySpec {
        family,
        n,
        inside: vec![],
        tail: vec![],
        in_stars: vec![],
        matching: vec![],
        pick: 0,
    };
    let k = template.matched_count();
    let picks = template.pick_range();
    let mut matchings = vec![(0..k).collect::<Vec<_>>()];
    if k >= 2 {
        matchings.push((0..k).map(|i| (i + 1) % k).collect());
    }
    if k >= 3 {
        matchings.push((0..k).rev().collect());
    }

    insides
        .into_iter()
        .flat_map(move |inside| {
            let tails = tails.clone();
            let matchings = matchings.clone();
            tails.into_iter().flat_map(move |(tail, in_stars)| {
                let inside = inside.clone();
                let matchings = matchings.clone();
                (0..picks).flat_map(move |pick| {
                    let inside = inside.clone();
                    let tail = tail.clone();
                    let in_stars = in_stars.clone();
                    matchings.clone().into_iter().map(move |matching| FamilySpec {
                        family,
                        n,
                        inside: inside.clone(),
                        tail: tail.clone(),
                        in_stars: in_stars.clone(),
                        matching,
                        pick,
                    })
                })
            })
        })
        .take(limit)
}

/// Ordered pairs of trees with total size `m`, each side possibly a lone root.
fn two_rooted(m: usize) -> Vec<Vec<Arborescence>> {
    let mut out = Vec::new();
    for a in 1..m {
        for first in Arborescence::all_of_size(a) {
            for second in Arborescence::all_of_size(m - a) {
                out.push(vec![first.clone(), second]);
            }
        }
    }
    out
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for FamilySpec {
    /// The key-value text block read back by [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "inside: {}", join(&self.inside))?;
        writeln!(f, "tail: {}", join(&self.tail))?;
        writeln!(f, "in_stars: {}", join(&self.in_stars))?;
        writeln!(f, "matching: {}", join(&self.matching))?;
        writeln!(f, "pick: {}", self.pick)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut family = None;
        let mut n = None;
        let mut inside = Vec::new();
        let mut tail = Vec::new();
        let mut in_stars = Vec::new();
        let mut matching = Vec::new();
        let mut pick = 0;
        let num = |t: &str| -> Result<usize> {
            t.parse()
                .map_err(|_| Error::MalformedSpec(format!("expected a number, got {t:?}")))
        };
        for line in s.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::MalformedSpec(format!("line {line:?} is not key: value")))?;
            let value = value.trim();
            let words = || value.split_whitespace();
            match key.trim() {
                "family" => family = Some(value.parse()?),
                "n" => n = Some(num(value)?),
                "inside" => inside = words().map(str::parse).collect::<Result<_>>()?,
                "tail" => tail = words().map(str::parse).collect::<Result<_>>()?,
                "in_stars" => in_stars = words().map(num).collect::<Result<_>>()?,
                "matching" => matching = words().map(num).collect::<Result<_>>()?,
                "pick" => pick = num(value)?,
                other => return malformed(format!("unknown key {other:?}")),
            }
        }
        let spec = FamilySpec {
            family: family.ok_or_else(|| Error::MalformedSpec("missing family".into()))?,
            n: n.ok_or_else(|| Error::MalformedSpec("missing n".into()))?,
            inside,
            tail,
            in_stars,
            matching,
            pick,
        };
        spec.validate()?;
        Ok(spec)
    }
}
