use serde::Serialize;

use super::{canonical_separation, loosely_non_crossing, CliquePair, Separation};
use crate::error::{Error, Result};
use crate::graph::{components, connecting_path, induced_subgraph, EmbeddedPath, Graph, InducedSubgraph, VertexSet};
use crate::patterns::is_claw_center;
use crate::weights::{is_balanced_separator, Rational, Weighting};

/// One core member with the deleted components assigned to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreRecord {
    pub pair: CliquePair,
    pub separation: Separation,
    /// Components `D` of `G \ β` with `X(D)` equal to this member.
    pub deleted: Vec<VertexSet>,
    pub marker: Option<Vec<usize>>,
    pub anchor: Option<usize>,
}

impl CoreRecord {
    /// `D(X)`: the union of the assigned components.
    pub fn deleted_union(&self) -> VertexSet {
        self.deleted.iter().fold(VertexSet::new(), |acc, d| acc | *d)
    }

    fn marker_interior(&self) -> VertexSet {
        match &self.marker {
            Some(p) => p[1..p.len() - 1].iter().collect(),
            None => VertexSet::new(),
        }
    }
}

/// A central bag `β`, optionally extended by marker paths to `β*` with the
/// moved weighting `w*` (both in host vertex ids).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedBag {
    pub beta: VertexSet,
    pub records: Vec<CoreRecord>,
    /// Components of `G \ β` inside no `A`-side.
    pub unassigned: Vec<VertexSet>,
    /// Whether every two core separations are loosely non-crossing.
    pub non_crossing: bool,
    pub beta_star: Option<VertexSet>,
    pub w_star: Option<Weighting>,
}

impl ExtendedBag {
    pub fn is_extended(&self) -> bool {
        self.beta_star.is_some()
    }

    /// `G[β*]`, or `G[β]` before extension.
    pub fn graph(&self, g: &Graph) -> InducedSubgraph {
        induced_subgraph(g, self.beta_star.unwrap_or(self.beta)).expect("bag lies in V(G)")
    }

    /// `w*` restricted to `β*` and renumbered as in [`ExtendedBag::graph`].
    pub fn local_weighting(&self) -> Option<Weighting> {
        let star = self.beta_star?;
        let w = self.w_star.as_ref()?;
        let values: Vec<Rational> = star.iter().map(|v| w.get(v)).collect();
        Weighting::from_ratios(&values).ok()
    }
}

/// `β = ⋂ (B ∪ C)` over the core (all of `V(G)` for an empty core), with
/// each component of `G \ β` assigned to the first core member whose
/// `A`-side contains it.
pub fn central_bag(g: &Graph, w: &Weighting, core: &[CliquePair]) -> Result<ExtendedBag> {
    let seps = core.iter().map(|p| canonical_separation(g, w, p.x)).collect::<Result<Vec<_>>>()?;
    let beta = seps.iter().fold(g.vertices(), |acc, s| acc & (s.b | s.c));
    let mut records: Vec<CoreRecord> = core
        .iter()
        .zip(&seps)
        .map(|(p, s)| CoreRecord { pair: *p, separation: *s, deleted: Vec::new(), marker: None, anchor: None })
        .collect();
    let mut unassigned = Vec::new();
    for d in components(g, g.vertices() - beta) {
        match records.iter_mut().find(|r| d.is_subset(&r.separation.a)) {
            Some(r) => r.deleted.push(d),
            None => unassigned.push(d),
        }
    }
    let non_crossing =
        seps.iter().enumerate().all(|(i, s)| seps[i + 1..].iter().all(|t| loosely_non_crossing(g, s, t)));
    Ok(ExtendedBag { beta, records, unassigned, non_crossing, beta_star: None, w_star: None })
}

/// A shortest path with non-adjacent ends in `N(D)` and interior in `D`,
/// checked to have its interior of degree 2 in `G[P ∪ X]`.
pub fn marker_path(g: &Graph, w: &Weighting, x: &CliquePair, d: VertexSet) -> Result<EmbeddedPath> {
    let sep = canonical_separation(g, w, x.x)?;
    if d.is_empty() || !d.is_subset(&sep.a) || !components(g, sep.a).contains(&d) {
        return Err(Error::InvalidParameter(format!("{d:?} is not a component of the A-side of {:?}", x.x)));
    }
    let nd = g.neighborhood_of(d) - d;
    if g.is_clique(nd) {
        return Err(Error::Hypothesis(format!("N({d:?}) = {nd:?} is a clique cutset")));
    }
    let mut best: Option<Vec<usize>> = None;
    for a in nd {
        for b in nd.iter().filter(|&b| b > a && !g.adjacent(a, b)) {
            if let Some(p) = connecting_path(g, g.neighbors(a) & d, g.neighbors(b) & d, d) {
                let mut seq = vec![a];
                seq.extend_from_slice(p.vertices());
                seq.push(b);
                if best.as_ref().is_none_or(|q| seq.len() < q.len()) {
                    best = Some(seq);
                }
            }
        }
    }
    let seq = best.ok_or_else(|| Error::Hypothesis(format!("no path through {d:?} joins non-adjacent ends")))?;
    let span: VertexSet = seq.iter().collect::<VertexSet>() | x.x;
    for &v in &seq[1..seq.len() - 1] {
        if g.neighbors_in(v, span).len() != 2 {
            return Err(Error::Hypothesis(format!(
                "marker path {seq:?}: interior vertex {v} does not have degree 2 next to {:?}",
                x.x
            )));
        }
    }
    EmbeddedPath::new(g, seq, true)
}

/// Adds one marker path per core member with deleted components (through
/// the component holding the smallest vertex) and moves the weight of
/// `D(X)` onto the smallest interior vertex `a_X` of its path.
pub fn extend_bag(g: &Graph, w: &Weighting, bag: ExtendedBag) -> Result<ExtendedBag> {
    if !bag.unassigned.is_empty() {
        return Err(Error::Hypothesis(format!("components {:?} lie in no A-side", bag.unassigned)));
    }
    let mut bag = bag;
    let mut star = bag.beta;
    let mut values: Vec<Rational> = (0..g.n())
        .map(|v| if bag.beta.contains(v) { w.get(v) } else { Rational::from_integer(0) })
        .collect();
    for r in &mut bag.records {
        let Some(first) = r.deleted.iter().min_by_key(|d| d.min()) else {
            continue;
        };
        let path = marker_path(g, w, &r.pair, *first)?;
        let interior = path.interior();
        let anchor = interior.min().expect("marker path has an interior");
        star |= path.vertex_set();
        values[anchor] = w.weight(r.deleted_union());
        r.marker = Some(path.vertices().to_vec());
        r.anchor = Some(anchor);
    }
    let w_star = Weighting::from_ratios(&values)?;
    for r in &bag.records {
        for v in r.marker_interior() {
            let nb = g.neighbors_in(v, star);
            if nb.len() != 2 || nb.iter().collect::<Vec<_>>().windows(2).any(|p| g.adjacent(p[0], p[1])) {
                return Err(Error::Hypothesis(format!("marker vertex {v} has degree other than 2 or lies in a triangle")));
            }
        }
    }
    bag.beta_star = Some(star);
    bag.w_star = Some(w_star);
    Ok(bag)
}

/// A lifted separator and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lift {
    #[serde(rename = "Y")]
    pub y: VertexSet,
    /// `Y` passes the balance check in `G`.
    pub verified: bool,
    /// Some claw center fell back to its full neighbourhood.
    pub fallback: bool,
    /// `|Y| <= |S| (2t + 1)`.
    pub within_bound: bool,
    pub violations: Vec<String>,
}

fn simplicial_without(g: &Graph, y: usize, x: usize) -> bool {
    g.is_clique(g.neighbors(y) - VertexSet::singleton(x))
}

/// The `K ∪ {x', x''}` neighbourhood part for a claw center `x` of `β*`.
fn claw_center_part(g: &Graph, star: VertexSet, beta: VertexSet, x: usize) -> std::result::Result<VertexSet, String> {
    let nb = g.neighbors_in(x, star);
    let big: Vec<VertexSet> = components(g, nb).into_iter().filter(|c| c.len() > 1).collect();
    if big.len() > 1 {
        return Err(format!("N(β*, {x}) has {} components with more than one vertex", big.len()));
    }
    let k = big.first().copied().unwrap_or_default();
    if !g.is_clique(k) {
        return Err(format!("neighbourhood component {k:?} of {x} is not a clique"));
    }
    let high: Vec<usize> = (nb - k).iter().filter(|&v| g.neighbors_in(v, star).len() > 2).collect();
    if high.len() > 1 {
        return Err(format!("{x} has neighbours {high:?} of degree above 2 outside its clique"));
    }
    let x1 = high.first().copied().or_else(|| (nb - k).min()).or_else(|| nb.min()).expect("claw center has neighbours");
    let z1 = k | VertexSet::singleton(x1);
    let rough: Vec<usize> = (nb & (beta - z1)).iter().filter(|&y| !simplicial_without(g, y, x)).collect();
    if rough.len() > 1 {
        return Err(format!("{x} has neighbours {rough:?} that are not simplicial once {x} is removed"));
    }
    let x2 = rough.first().copied().unwrap_or(x1);
    Ok(z1 | VertexSet::singleton(x2))
}

/// Lifts a balanced separator `S` of `β*` to `Y = S ∪ ⋃ Y(v)`: a marker
/// vertex contributes its cutset, a non-claw-center its `β*`
/// neighbourhood and a claw center `K ∪ {x', x''}`. When the claw-center
/// structure is not as expected the full neighbourhood is used instead and
/// a violation is recorded. `Y` is always re-checked in `G`.
pub fn lift_separator(g: &Graph, w: &Weighting, bag: &ExtendedBag, s: VertexSet, t: usize) -> Result<Lift> {
    let star = bag.beta_star.ok_or_else(|| Error::InvalidParameter("bag has not been extended".into()))?;
    if !s.is_subset(&star) {
        return Err(Error::InvalidParameter(format!("{s:?} is not inside β*")));
    }
    let sub = bag.graph(g);
    let local_w = bag.local_weighting().expect("extended bag has w*");
    let local_s = sub.local_set(s);
    if !is_balanced_separator(&sub.graph, &local_w, local_s, Rational::new(1, 2)) {
        return Err(Error::InvalidParameter(format!("{s:?} is not a (w*, 1/2)-balanced separator of β*")));
    }
    let mut y = s;
    let mut violations = Vec::new();
    let mut fallback = false;
    for v in s {
        if let Some(r) = bag.records.iter().find(|r| r.marker_interior().contains(v)) {
            y |= r.pair.x;
            continue;
        }
        let local_v = sub.local_of(v).expect("v in β*");
        if is_claw_center(&sub.graph, local_v).is_none() {
            y |= g.neighbors_in(v, star);
            continue;
        }
        match claw_center_part(g, star, bag.beta, v) {
            Ok(z2) => y |= z2,
            Err(msg) => {
                violations.push(msg);
                fallback = true;
                y |= g.neighbors_in(v, star);
            }
        }
    }
    Ok(Lift {
        y,
        verified: is_balanced_separator(g, w, y, Rational::new(1, 2)),
        fallback,
        within_bound: y.len() <= s.len() * (2 * t + 1),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::separations::{core_of, family_x};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn w6() -> (Graph, Weighting) {
        (named::cycle(6), Weighting::from_integers(&[2, 2, 2, 15, 2, 2]).unwrap())
    }

    #[test]
    fn running_example() {
        let (g, w) = w6();
        let core = core_of(&g, &w, &family_x(&g, &w).unwrap()).unwrap();
        let bag = central_bag(&g, &w, &core).unwrap();
        assert_eq!(bag.beta, set(&[2, 3, 4]));
        assert_eq!(bag.records[0].deleted, vec![set(&[0, 1, 5])]);
        let bag = extend_bag(&g, &w, bag).unwrap();
        assert_eq!(bag.records[0].marker, Some(vec![2, 1, 0, 5, 4]));
        assert_eq!(bag.records[0].anchor, Some(0));
        assert_eq!(bag.beta_star, Some(g.vertices()));
        let ws = bag.w_star.as_ref().unwrap();
        let expected = [(0, 6, 25), (1, 0, 1), (2, 2, 25), (3, 3, 5), (4, 2, 25), (5, 0, 1)];
        for (v, p, q) in expected {
            assert_eq!(ws.get(v), Rational::new(p, q));
        }
        let lift = lift_separator(&g, &w, &bag, set(&[3]), 2).unwrap();
        assert_eq!(lift.y, set(&[2, 3, 4]));
        assert!(lift.verified && !lift.fallback && lift.within_bound);
        let lift = lift_separator(&g, &w, &bag, set(&[0, 3]), 2).unwrap();
        assert_eq!(lift.y, set(&[0, 2, 3, 4]));
        assert!(lift.verified);
    }

    #[test]
    fn empty_core_is_everything() {
        let (g, w) = w6();
        let bag = central_bag(&g, &w, &[]).unwrap();
        assert_eq!(bag.beta, g.vertices());
        let bag = extend_bag(&g, &w, bag).unwrap();
        assert_eq!(bag.beta_star, Some(g.vertices()));
        assert_eq!(bag.w_star.as_ref(), Some(&w));
    }

    #[test]
    fn path_core() {
        let g = named::path(7);
        let w = Weighting::from_integers(&[1, 1, 1, 1, 1, 1, 9]).unwrap();
        let core = core_of(&g, &w, &family_x(&g, &w).unwrap()).unwrap();
        assert_eq!(central_bag(&g, &w, &core).unwrap().beta, set(&[5, 6]));
    }

    #[test]
    fn marker_on_c8() {
        let g = named::cycle(8);
        let w = Weighting::point(8, 6).unwrap();
        let x = CliquePair { k1: set(&[0]), k2: set(&[4]), x: set(&[0, 4]), closed: true };
        let p = marker_path(&g, &w, &x, set(&[1, 2, 3])).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3, 4]);
        // a pendant component has a one-vertex neighbourhood
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let w = Weighting::point(4, 2).unwrap();
        let x = CliquePair { k1: set(&[1]), k2: VertexSet::new(), x: set(&[1]), closed: true };
        assert!(matches!(marker_path(&g, &w, &x, set(&[0])), Err(Error::Hypothesis(_))));
    }
}
