//! Classifying maximum F-free digraphs of order `n >= 8` into the families
//! D1 to D6 (or their reverses), plus a check of the necessary degree
//! conditions every maximum digraph satisfies.
//!
//! Matching is structural. For a pivot `v` of maximum out-degree the
//! successors `V1 = N+(v)` must carry the family's inside pattern, found by
//! local signatures (the unique 2-cycle, the vertex sending arcs to the rest
//! of `V1`, the vertex without a parent). From those roles the matcher writes
//! down a [`FamilySpec`] and a relabelling, then rebuilds the instance and
//! compares it with the input arc for arc. Nothing is reported that this
//! comparison does not confirm.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::family::{construct, ex_formula, parts, Arborescence, Family, FamilySpec};
use crate::walk::{alpha, common_successor_violation, is_f_free, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    AsIs,
    Reversed,
}

/// One confirmed classification.
///
/// `mapping[i]` is the input vertex playing vertex `i` of
/// `construct(&spec)`; for [`Direction::Reversed`] the input is the reverse
/// of that instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Match {
    pub family: Family,
    pub direction: Direction,
    pub mapping: Vec<usize>,
    pub spec: FamilySpec,
}

impl Match {
    /// The family instance moved onto the input's labels.
    pub fn rebuild(&self) -> Result<Digraph> {
        let d = construct(&self.spec)?;
        let d = match self.direction {
            Direction::AsIs => d,
            Direction::Reversed => d.reverse(),
        };
        d.relabel(&self.mapping)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Extremal { families: Vec<Match> },
    NotExtremalSize { size: usize, expected: usize },
    NotFFree { witness: Witness },
    Unrecognized { message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    /// Checks ran on the reverse because it has the larger maximum out-degree.
    pub reversed: bool,
    pub delta_plus: usize,
    pub delta_minus: usize,
    pub alpha: usize,
    pub delta_plus_ok: bool,
    pub alpha_ok: bool,
    pub lemma2_ok: bool,
    pub details: Vec<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.delta_plus_ok && self.alpha_ok && self.lemma2_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    pub n: usize,
    pub size: usize,
    pub verdict: Verdict,
    pub audit: AuditReport,
}

impl RecognitionReport {
    pub fn is_extremal(&self) -> bool {
        matches!(self.verdict, Verdict::Extremal { .. })
    }

    pub fn matches(&self) -> &[Match] {
        match &self.verdict {
            Verdict::Extremal { families } => families,
            _ => &[],
        }
    }
}

const UNRECOGNIZED: &str = "no family template matched, although the input is F-free \
with ex(n) arcs; every such digraph is an isomorphic copy of a family member or of its \
reverse, so this points to a defect in the recognizer";

fn check_scope(n: usize) -> Result<()> {
    if n < 8 {
        return Err(Error::OutOfScope {
            n,
            min: 8,
            what: "recognition of maximum digraphs",
        });
    }
    Ok(())
}

/// Evaluates the degree conditions without checking that `d` is maximum.
pub fn necessary_conditions(d: &Digraph) -> AuditReport {
    let n = d.order();
    let deg = d.degrees();
    let reversed = deg.max_in > deg.max_out;
    let oriented = if reversed { d.reverse() } else { d.clone() };
    let (delta_plus, delta_minus) = if reversed {
        (deg.max_in, deg.max_out)
    } else {
        (deg.max_out, deg.max_in)
    };
    let mut details = Vec::new();

    let range: Vec<usize> = if n % 2 == 1 {
        vec![n / 2, n.div_ceil(2)]
    } else {
        vec![n / 2 - 1, n / 2, n / 2 + 1]
    };
    let required = (n + 2) / 2;
    let delta_plus_ok = range.contains(&delta_plus) && range.contains(&delta_minus) && delta_plus == required;
    details.push(format!(
        "max out-degree {delta_plus}, max in-degree {delta_minus}; both must lie in {range:?} \
         and the larger must equal {required}"
    ));

    let alpha_here = alpha(&oriented);
    let alpha_back = alpha(&oriented.reverse());
    let alpha_ok = alpha_here <= 1 && alpha_back <= 1;
    details.push(format!("alpha = {alpha_here} (reverse: {alpha_back}); must be at most 1"));

    let forward = common_successor_violation(d);
    let backward = common_successor_violation(&d.reverse());
    let lemma2_ok = forward.is_none() && backward.is_none();
    details.push(match (forward, backward) {
        (None, None) => "no two successors (or predecessors) of a vertex share a neighbour".into(),
        (Some((v, u)), _) => format!("successors of {v} share the successor {u}"),
        (None, Some((v, u))) => format!("predecessors of {v} share the predecessor {u}"),
    });

    AuditReport {
        reversed,
        delta_plus,
        delta_minus,
        alpha: alpha_here,
        delta_plus_ok,
        alpha_ok,
        lemma2_ok,
        details,
    }
}

/// [`necessary_conditions`] on a digraph that must be F-free with exactly ex(n) arcs.
pub fn audit(d: &Digraph) -> Result<AuditReport> {
    let n = d.order();
    check_scope(n)?;
    if let Some(w) = is_f_free(d).witness {
        return Err(Error::NotFFree(w.to_string()));
    }
    let expected = ex_formula(n)?;
    if d.size() != expected {
        return Err(Error::WrongSize {
            n,
            size: d.size(),
            expected,
        });
    }
    Ok(necessary_conditions(d))
}

pub fn recognize(d: &Digraph) -> Result<RecognitionReport> {
    let n = d.order();
    check_scope(n)?;
    let size = d.size();
    let expected = ex_formula(n)?;
    let audit = necessary_conditions(d);
    let verdict = if size != expected {
        Verdict::NotExtremalSize { size, expected }
    } else if let Some(witness) = is_f_free(d).witness {
        Verdict::NotFFree { witness }
    } else {
        let reversed = d.reverse();
        let mut families = Vec::new();
        for family in Family::ALL {
            for (direction, oriented) in [(Direction::AsIs, d), (Direction::Reversed, &reversed)] {
                if let Some((mapping, spec)) = match_family(oriented, family) {
                    families.push(Match {
                        family,
                        direction,
                        mapping,
                        spec,
                    });
                }
            }
        }
        if families.is_empty() {
            Verdict::Unrecognized {
                message: UNRECOGNIZED.to_string(),
            }
        } else {
            Verdict::Extremal { families }
        }
    };
    Ok(RecognitionReport {
        n,
        size,
        verdict,
        audit,
    })
}

/// A relabelling `mapping` and spec with
/// `construct(&spec).relabel(&mapping) == *d`, if `d` is a copy of a member
/// of `family` as given (not reversed).
pub fn match_family(d: &Digraph, family: Family) -> Option<(Vec<usize>, FamilySpec)> {
    let n = d.order();
    family.check_order(n).ok()?;
    let (p, _) = parts(n);
    if d.degrees().max_out != p {
        return None;
    }
    (0..n)
        .filter(|&v| d.out_degree(v) == p)
        .find_map(|v| Frame::new(d, v).try_family(family))
}

/// The split `V1 = N+(v)`, `V2 = V \ V1` around one pivot.
struct Frame<'a> {
    d: &'a Digraph,
    n: usize,
    p: usize,
    in_v1: Vec<bool>,
    v1: Vec<usize>,
    v2: Vec<usize>,
}

/// Which neighbours a tree walk follows.
#[derive(Clone, Copy)]
enum Step {
    Out,
    In,
}

impl<'a> Frame<'a> {
    fn new(d: &'a Digraph, pivot: usize) -> Self {
        let n = d.order();
        let mut in_v1 = vec![false; n];
        for t in d.successors(pivot).ones() {
            in_v1[t] = true;
        }
        Self {
            d,
            n,
            p: d.out_degree(pivot),
            v1: (0..n).filter(|&t| in_v1[t]).collect(),
            v2: (0..n).filter(|&t| !in_v1[t]).collect(),
            in_v1,
        }
    }

    fn succ_in(&self, u: usize, side_v1: bool) -> Vec<usize> {
        self.d
            .successors(u)
            .ones()
            .filter(|&t| self.in_v1[t] == side_v1)
            .collect()
    }

    fn pred_in(&self, u: usize, side_v1: bool) -> Vec<usize> {
        (0..self.n)
            .filter(|&t| self.in_v1[t] == side_v1 && self.d.has_arc(t, u))
            .collect()
    }

    /// The depth-two tree at `root` inside one side, children and grandchildren
    /// in increasing label order; members in preorder.
    fn grow(&self, root: usize, side_v1: bool, step: Step, avoid: &[usize]) -> (Arborescence, Vec<usize>) {
        let next = |u: usize| -> Vec<usize> {
            let raw = match step {
                Step::Out => self.succ_in(u, side_v1),
                Step::In => self.pred_in(u, side_v1),
            };
            raw.into_iter().filter(|t| *t != root && !avoid.contains(t)).collect()
        };
        let mut members = vec![root];
        let mut branches = Vec::new();
        for child in next(root) {
            let grand = next(child);
            branches.push(grand.len());
            members.push(child);
            members.extend(grand);
        }
        (Arborescence { branches }, members)
    }

    fn only<T: Copy>(items: &[T]) -> Option<T> {
        match items {
            [one] => Some(*one),
            _ => None,
        }
    }

    fn try_family(&self, family: Family) -> Option<(Vec<usize>, FamilySpec)> {
        let p = self.p;
        let mut spec = FamilySpec {
            family,
            n: self.n,
            inside: vec![],
            tail: vec![],
            in_stars: vec![],
            matching: vec![],
            pick: 0,
        };
        let (order1, order2) = match family {
            Family::D1 | Family::D5 => {
                let cycles: Vec<(usize, usize)> = self
                    .v1
                    .iter()
                    .flat_map(|&a| self.succ_in(a, true).into_iter().map(move |b| (a, b)))
                    .filter(|&(a, b)| a < b && self.d.has_arc(b, a))
                    .collect();
                let (y1, y2) = Self::only(&cycles)?;
                let (t1, m1) = self.grow(y1, true, Step::Out, &[y2]);
                let (t2, m2) = self.grow(y2, true, Step::Out, &[y1]);
                spec.inside = vec![t1, t2];
                let order1 = [vec![y1, y2], m1[1..].to_vec(), m2[1..].to_vec()].concat();
                if family == Family::D5 {
                    let lone: Vec<usize> = (0..self.v2.len())
                        .filter(|&i| self.pred_in(self.v2[i], true).is_empty())
                        .collect();
                    spec.pick = Self::only(&lone)?;
                }
                (order1, self.v2.clone())
            }
            Family::D3 => {
                let roots: Vec<usize> = self
                    .v1
                    .iter()
                    .copied()
                    .filter(|&u| self.pred_in(u, true).is_empty())
                    .collect();
                let (tree, members) = self.grow(Self::only(&roots)?, true, Step::Out, &[]);
                spec.inside = vec![tree];
                (members, self.v2.clone())
            }
            Family::D2 | Family::D4 | Family::D6 => {
                let hubs: Vec<usize> = self
                    .v1
                    .iter()
                    .copied()
                    .filter(|&u| self.succ_in(u, true).len() == p - 1)
                    .collect();
                let x = Self::only(&hubs)?;
                let w = Self::only(&self.succ_in(x, false))?;
                let no_v2_successor = |u: &usize| self.succ_in(*u, false).is_empty();
                match family {
                    Family::D4 => {
                        let rest: Vec<usize> = self.v1.iter().copied().filter(|&u| u != x).collect();
                        let ys: Vec<usize> = (0..rest.len()).filter(|&i| no_v2_successor(&rest[i])).collect();
                        spec.pick = Self::only(&ys)?;
                        let (tree, mut order2) = self.grow(w, false, Step::In, &[]);
                        spec.tail = vec![tree];
                        let left: Vec<usize> = self.v2.iter().copied().filter(|u| !order2.contains(u)).collect();
                        let mut isolated = Vec::new();
                        for &r in &left {
                            let leaves = self.pred_in(r, false);
                            if leaves.is_empty() {
                                if !self.succ_in(r, false).is_empty() {
                                    continue;
                                }
                                isolated.push(r);
                            } else {
                                spec.in_stars.push(1 + leaves.len());
                                order2.push(r);
                                order2.extend(leaves);
                            }
                        }
                        order2.extend(isolated);
                        ([vec![x], rest].concat(), order2)
                    }
                    _ => {
                        let y = Self::only(&self.pred_in(x, true))?;
                        let rest: Vec<usize> = self.v1.iter().copied().filter(|&u| u != x && u != y).collect();
                        let mut order2;
                        if family == Family::D2 {
                            let (tree, members) = self.grow(w, false, Step::In, &[]);
                            spec.tail = vec![tree];
                            order2 = members;
                        } else {
                            let ys: Vec<usize> = (0..rest.len()).filter(|&i| no_v2_successor(&rest[i])).collect();
                            spec.pick = Self::only(&ys)?;
                            let z = Self::only(&self.succ_in(w, false))?;
                            let (tw, mw) = self.grow(w, false, Step::In, &[z]);
                            let (tz, mz) = self.grow(z, false, Step::In, &[w]);
                            spec.tail = vec![tw, tz];
                            order2 = [vec![w, z], mw[1..].to_vec(), mz[1..].to_vec()].concat();
                        }
                        let isolated: Vec<usize> = self.v2.iter().copied().filter(|u| !order2.contains(u)).collect();
                        order2.extend(isolated);
                        ([vec![x, y], rest].concat(), order2)
                    }
                }
            }
        };

        let mapping = [order1, order2].concat();
        let mut inverse = vec![usize::MAX; self.n];
        for (label, &u) in mapping.iter().enumerate() {
            if u >= self.n || inverse[u] != usize::MAX {
                return None;
            }
            inverse[u] = label;
        }
        if mapping.len() != self.n {
            return None;
        }
        let (sources, targets) = spec.matched_ends();
        for &s in &sources {
            let t = Self::only(&self.succ_in(mapping[s], false))?;
            spec.matching.push(targets.iter().position(|&l| l == inverse[t])?);
        }
        let rebuilt = construct(&spec).ok()?.relabel(&mapping).ok()?;
        (rebuilt == *self.d).then_some((mapping, spec))
    }
}

/// A bijection `f` with `u -> w` in `d` iff `f(u) -> f(w)` in `h`, found by
/// backtracking over vertices of equal (out, in) degree. Meant for small
/// orders.
pub fn is_isomorphic(d: &Digraph, h: &Digraph) -> Result<Option<Vec<usize>>> {
    let n = d.order();
    if h.order() != n {
        return Err(Error::OrderMismatch(n, h.order()));
    }
    let (dd, hd) = (d.degrees(), h.degrees());
    let sig = |g: &crate::digraph::Degrees, u: usize| (g.out[u], g.inn[u]);
    let mut ds: Vec<_> = (0..n).map(|u| sig(&dd, u)).collect();
    let mut hs: Vec<_> = (0..n).map(|u| sig(&hd, u)).collect();
    ds.sort_unstable();
    hs.sort_unstable();
    if ds != hs {
        return Ok(None);
    }

    // Rarest signature classes first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (ds.iter().filter(|&&s| s == sig(&dd, u)).count(), u));

    fn extend(
        k: usize,
        order: &[usize],
        d: &Digraph,
        h: &Digraph,
        fits: &dyn Fn(usize, usize) -> bool,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&u) = order.get(k) else {
            return true;
        };
        for c in 0..h.order() {
            if used[c] || !fits(u, c) {
                continue;
            }
            let consistent = order[..k].iter().all(|&a| {
                let b = image[a];
                d.has_arc(u, a) == h.has_arc(c, b) && d.has_arc(a, u) == h.has_arc(b, c)
            });
            if !consistent {
                continue;
            }
            image[u] = c;
            used[c] = true;
            if extend(k + 1, order, d, h, fits, image, used) {
                return true;
            }
            used[c] = false;
        }
        false
    }

    let fits = |u: usize, c: usize| sig(&dd, u) == sig(&hd, c);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(0, &order, d, h, &fits, &mut image, &mut used).then_some(image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{default_spec, enumerate_specs};

    fn instance(family: Family, n: usize) -> Digraph {
        construct(&default_spec(family, n).unwrap()).unwrap()
    }

    #[test]
    fn round_trip_d1() {
        let d = instance(Family::D1, 8);
        let report = recognize(&d).unwrap();
        let found = report.matches();
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].family, found[0].direction), (Family::D1, Direction::AsIs));
        assert_eq!(found[0].rebuild().unwrap(), d);
        assert!(report.audit.passed());
    }

    #[test]
    fn reversed_d3() {
        let d = instance(Family::D3, 9).reverse();
        let report = recognize(&d).unwrap();
        let hit = report
            .matches()
            .iter()
            .find(|m| m.family == Family::D3 && m.direction == Direction::Reversed)
            .expect("reversed D3");
        assert_eq!(hit.rebuild().unwrap(), d);
    }

    #[test]
    fn rejections() {
        let path = Digraph::from_arcs(8, (0..7).map(|i| (i, i + 1))).unwrap();
        let report = recognize(&path).unwrap();
        assert_eq!(report.verdict, Verdict::NotExtremalSize { size: 7, expected: 23 });
        assert!(recognize(&Digraph::new_empty(7).unwrap()).is_err());
    }

    #[test]
    fn not_f_free_verdict() {
        // 23 arcs, but with a doubled 2-walk: take D1 at n = 8 and move one arc.
        let mut d = instance(Family::D1, 8);
        let (u, w) = d.arcs().next().unwrap();
        d.remove_arc(u, w);
        let extra = (0..8)
            .flat_map(|a| (0..8).map(move |b| (a, b)))
            .find(|&(a, b)| a != b && !d.has_arc(a, b) && (a, b) != (u, w))
            .unwrap();
        d.add_arc(extra.0, extra.1).unwrap();
        assert_eq!(d.size(), 23);
        let report = recognize(&d).unwrap();
        assert!(matches!(report.verdict, Verdict::NotFFree { .. }));
    }

    #[test]
    fn match_family_respects_parity() {
        let d = instance(Family::D2, 9);
        let (mapping, spec) = match_family(&d, Family::D2).unwrap();
        assert_eq!(construct(&spec).unwrap().relabel(&mapping).unwrap(), d);
        assert_eq!(match_family(&d, Family::D1), None);
    }

    #[test]
    fn relabelled_copies_are_recognized() {
        for family in Family::ALL {
            let n = if family == Family::D1 { 10 } else { 11 };
            for spec in enumerate_specs(family, n, 40) {
                let d = construct(&spec).unwrap();
                let perm: Vec<usize> = (0..n).map(|i| (i * 3 + 5) % n).collect();
                let moved = d.relabel(&perm).unwrap();
                let report = recognize(&moved).unwrap();
                assert!(
                    report.matches().iter().any(|m| m.family == family),
                    "{spec}"
                );
                for m in report.matches() {
                    assert_eq!(m.rebuild().unwrap(), moved);
                }
            }
        }
    }

    #[test]
    fn audit_examples() {
        let a = audit(&instance(Family::D1, 8)).unwrap();
        assert!(a.passed());
        assert_eq!(a.delta_plus, 5);
        let b = audit(&instance(Family::D3, 9)).unwrap();
        assert!(b.passed());
        assert_eq!(b.delta_plus, 5);
        let path = Digraph::from_arcs(8, (0..7).map(|i| (i, i + 1))).unwrap();
        assert!(matches!(audit(&path), Err(Error::WrongSize { .. })));
    }

    #[test]
    fn isomorphism() {
        let d = instance(Family::D1, 8);
        let id = is_isomorphic(&d, &d).unwrap().unwrap();
        assert_eq!(d.relabel(&id).unwrap(), d);
        let perm = vec![3, 7, 0, 5, 1, 6, 2, 4];
        let moved = d.relabel(&perm).unwrap();
        let f = is_isomorphic(&d, &moved).unwrap().unwrap();
        assert_eq!(d.relabel(&f).unwrap(), moved);

        let cycle = Digraph::from_arcs(3, [(0, 1), (1, 0)]).unwrap();
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_isomorphic(&cycle, &path).unwrap(), None);
        assert!(is_isomorphic(&cycle, &d).is_err());
    }
}
