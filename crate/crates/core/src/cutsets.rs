//! Star and clique cutsets, clique-cutset atoms, and the separating-clique
//! witness searches for paws and seagulls.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::cliques::for_each_clique;
use crate::error::{Error, Result};
use crate::graph::{component_of, components, Graph, VertexSet};
use crate::patterns::paths::{search_paths, PathSpec};
use crate::patterns::{find_pattern, validate_witness, PatternKind, PatternWitness};
use crate::cliques::triangles;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "flavour", rename_all = "kebab-case")]
pub enum CutsetFlavour {
    Star { center: usize },
    Clique,
    TwoClique { k1: VertexSet, k2: VertexSet },
}

/// A cutset with a certified split: two nonempty vertex sets lying in
/// different components of `G \ X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cutset {
    #[serde(rename = "X")]
    pub x: VertexSet,
    #[serde(flatten)]
    pub flavour: CutsetFlavour,
    pub split: [VertexSet; 2],
}

impl Cutset {
    fn certify(g: &Graph, x: VertexSet, flavour: CutsetFlavour) -> Option<Cutset> {
        let comps = components(g, g.vertices() - x);
        if comps.len() < 2 {
            return None;
        }
        let rest = comps[1..].iter().fold(VertexSet::new(), |a, &c| a | c);
        Some(Cutset { x, flavour, split: [comps[0], rest] })
    }

    pub fn center(&self) -> Option<usize> {
        match self.flavour {
            CutsetFlavour::Star { center } => Some(center),
            _ => None,
        }
    }

    /// Re-checks the flavour and that the split really is separated.
    pub fn verify(&self, g: &Graph) -> bool {
        let [s, t] = self.split;
        let rest = g.vertices() - self.x;
        let shape = match &self.flavour {
            CutsetFlavour::Star { center } => self.x.contains(*center) && self.x.is_subset(&g.closed_neighbors(*center)),
            CutsetFlavour::Clique => g.is_clique(self.x),
            CutsetFlavour::TwoClique { k1, k2 } => g.is_clique(*k1) && g.is_clique(*k2) && (*k1 | *k2) == self.x,
        };
        shape
            && !s.is_empty()
            && !t.is_empty()
            && s.is_subset(&rest)
            && t.is_subset(&rest)
            && !s.intersects(&t)
            && separates(g, self.x, s, t)
    }
}

/// True when every path from `y` to `z` meets `x`.
pub fn separates(g: &Graph, x: VertexSet, y: VertexSet, z: VertexSet) -> bool {
    let rest = g.vertices() - x;
    let mut reach = VertexSet::new();
    for s in y & rest {
        if !reach.contains(s) {
            reach |= component_of(g, s, rest);
        }
    }
    !reach.intersects(&z)
}

fn is_cutset(g: &Graph, x: VertexSet) -> bool {
    components(g, g.vertices() - x).len() >= 2
}

/// The maximal star cutset centred at `x`, if there is one.
fn star_candidate(g: &Graph, x: usize) -> Option<VertexSet> {
    let nb = g.neighbors(x);
    let d = g.vertices() - g.closed_neighbors(x);
    if d.is_empty() {
        // only vertices of N(x) survive; keep a non-adjacent pair
        for u in nb {
            if let Some(w) = (nb - g.closed_neighbors(u)).min() {
                return Some(g.closed_neighbors(x) - VertexSet::singleton(u) - VertexSet::singleton(w));
            }
        }
        return None;
    }
    if components(g, d).len() >= 2 {
        return Some(g.closed_neighbors(x));
    }
    let y = (nb - g.neighborhood_of(d)).min()?;
    Some(g.closed_neighbors(x) - VertexSet::singleton(y))
}

/// Some star cutset, or `None` when the graph has none. Centres are tried
/// in ascending order; the cutset found is then shrunk by dropping
/// non-centre vertices in ascending order while it still disconnects.
pub fn find_star_cutset(g: &Graph) -> Option<Cutset> {
    for x in 0..g.n() {
        if let Some(mut cut) = star_candidate(g, x) {
            for v in cut - VertexSet::singleton(x) {
                let smaller = cut - VertexSet::singleton(v);
                if is_cutset(g, smaller) {
                    cut = smaller;
                }
            }
            return Cutset::certify(g, cut, CutsetFlavour::Star { center: x });
        }
    }
    None
}

/// Star cutset search over every subset of every closed neighbourhood.
/// Exponential in the maximum degree; used to cross-check
/// [`find_star_cutset`].
pub fn find_star_cutset_exhaustive(g: &Graph) -> Result<Option<Cutset>> {
    const CAP: usize = 20;
    if g.max_degree() > CAP {
        return Err(Error::ScaleCap { what: "exhaustive star cutset", size: g.max_degree(), cap: CAP });
    }
    for x in 0..g.n() {
        let nb = g.neighbors(x).to_vec();
        for mask in 0u32..(1 << nb.len()) {
            let mut cut = VertexSet::singleton(x);
            for (i, &u) in nb.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    cut.insert(u);
                }
            }
            if let Some(c) = Cutset::certify(g, cut, CutsetFlavour::Star { center: x }) {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// The smallest clique cutset: fewest vertices first, then
/// lexicographically (the empty set for disconnected graphs).
pub fn find_clique_cutset(g: &Graph) -> Option<Cutset> {
    if let Some(c) = Cutset::certify(g, VertexSet::new(), CutsetFlavour::Clique) {
        return Some(c);
    }
    let mut all = crate::cliques::cliques(g, g.n());
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(b)));
    all.into_iter().find_map(|k| Cutset::certify(g, k, CutsetFlavour::Clique))
}

/// Decomposition along clique cutsets. Vertex sets are host ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum AtomTree {
    Atom { atom: VertexSet },
    Split { cutset: VertexSet, children: Vec<AtomTree> },
}

impl AtomTree {
    /// Leaves in left-to-right order.
    pub fn atoms(&self) -> Vec<VertexSet> {
        match self {
            AtomTree::Atom { atom } => vec![*atom],
            AtomTree::Split { children, .. } => children.iter().flat_map(AtomTree::atoms).collect(),
        }
    }
}

/// Splits on the lexicographically smallest clique cutset of each piece
/// until no piece has one. The children of a split along `K` are
/// `G[C ∪ K]` for the components `C` of the piece minus `K`.
pub fn clique_atoms(g: &Graph) -> AtomTree {
    fn go(g: &Graph, s: VertexSet) -> AtomTree {
        let sub = crate::graph::induced_subgraph(g, s).expect("subset of V(G)");
        match find_clique_cutset(&sub.graph) {
            None => AtomTree::Atom { atom: s },
            Some(c) => {
                let k = sub.host_set(c.x);
                let children = components(g, s - k).into_iter().map(|comp| go(g, comp | k)).collect();
                AtomTree::Split { cutset: k, children }
            }
        }
    }
    go(g, g.vertices())
}

/// `b`, a clique `K ⊆ N[b]`, and `X = {v} ∪ K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingClique {
    pub b: usize,
    #[serde(rename = "K")]
    pub k: VertexSet,
    #[serde(rename = "X")]
    pub x: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum HypothesisViolation {
    Clock { witness: PatternWitness },
    Diamond { witness: PatternWitness },
    StarCutset { cutset: Cutset },
    NotClawCenter { vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CutsetSearch {
    Found(SeparatingClique),
    HypothesisViolated(HypothesisViolation),
    /// Every hypothesis holds yet no `(b, K)` works: a counterexample.
    NotFound,
}

impl CutsetSearch {
    pub fn found(&self) -> Option<&SeparatingClique> {
        match self {
            CutsetSearch::Found(s) => Some(s),
            _ => None,
        }
    }
}

/// Checks clock-freeness, diamond-freeness and absence of star cutsets.
pub fn structural_hypotheses(g: &Graph) -> Result<Option<HypothesisViolation>> {
    if let Some(witness) = find_pattern(g, PatternKind::Clock)? {
        return Ok(Some(HypothesisViolation::Clock { witness }));
    }
    if let Some(witness) = find_pattern(g, PatternKind::Diamond)? {
        return Ok(Some(HypothesisViolation::Diamond { witness }));
    }
    if let Some(cutset) = find_star_cutset(g) {
        return Ok(Some(HypothesisViolation::StarCutset { cutset }));
    }
    Ok(None)
}

fn role(w: &PatternWitness, name: &str) -> Result<usize> {
    w.vertex(name).ok_or_else(|| Error::InvalidParameter(format!("witness lacks role `{name}`")))
}

/// Exhaustive search over `b` (ascending, outside `N[a]`, not `u`) and
/// cliques `K ⊆ N[b]` avoiding `excluded` (lexicographic), for
/// `{v} ∪ K` separating `from` and `to`.
fn search(g: &Graph, a: usize, u: usize, v: usize, excluded: VertexSet, from: VertexSet, to: VertexSet) -> CutsetSearch {
    for b in g.vertices() - g.closed_neighbors(a) - VertexSet::singleton(u) {
        let mut hit = None;
        for_each_clique(g, g.closed_neighbors(b) - excluded, g.n(), |k| {
            let x = k | VertexSet::singleton(v);
            if separates(g, x, from, to) {
                hit = Some(k);
                false
            } else {
                true
            }
        });
        if let Some(k) = hit {
            return CutsetSearch::Found(SeparatingClique { b, k, x: k | VertexSet::singleton(v) });
        }
    }
    CutsetSearch::NotFound
}

/// For a paw `a a' v` + `u` in a (clock, diamond)-free graph with no star
/// cutset, finds `b ∉ N[a]` and a clique `K ⊆ N[b]` with `{v} ∪ K`
/// separating `u` from `{a, a'}`.
pub fn paw_cutset_witness(g: &Graph, paw: &PatternWitness) -> Result<CutsetSearch> {
    if paw.kind != PatternKind::Paw {
        return Err(Error::InvalidParameter(format!("expected a paw, got {}", paw.kind)));
    }
    paw.validate(g)?;
    let (a, a2, u, v) = (role(paw, "a")?, role(paw, "a_prime")?, role(paw, "u")?, role(paw, "v")?);
    if let Some(viol) = structural_hypotheses(g)? {
        return Ok(CutsetSearch::HypothesisViolated(viol));
    }
    let excluded: VertexSet = [a, a2, u, v].iter().collect();
    let from = VertexSet::singleton(u);
    let to: VertexSet = [a, a2].iter().collect();
    Ok(search(g, a, u, v, excluded, from, to))
}

/// For a seagull `a - v - u` whose leaf `a` is a claw centre, in a (clock,
/// diamond)-free graph with no star cutset, finds `b` non-adjacent to `a`
/// and a clique `K ⊆ N[b]` with `{v} ∪ K` separating `a` from `u`.
pub fn seagull_cutset_witness(g: &Graph, seagull: &PatternWitness) -> Result<CutsetSearch> {
    if seagull.kind != PatternKind::Seagull {
        return Err(Error::InvalidParameter(format!("expected a seagull, got {}", seagull.kind)));
    }
    seagull.validate(g)?;
    let (a, u, v) = (role(seagull, "a")?, role(seagull, "u")?, role(seagull, "v")?);
    if crate::patterns::is_claw_center(g, a).is_none() {
        return Ok(CutsetSearch::HypothesisViolated(HypothesisViolation::NotClawCenter { vertex: a }));
    }
    if let Some(viol) = structural_hypotheses(g)? {
        return Ok(CutsetSearch::HypothesisViolated(viol));
    }
    let excluded: VertexSet = [a, u, v].iter().collect();
    Ok(search(g, a, u, v, excluded, VertexSet::singleton(a), VertexSet::singleton(u)))
}

/// A theta or pyramid containing the seagull in which its leaf `a` is a
/// claw centre (a theta end or the pyramid apex); exhaustive.
pub fn seagull_three_path_config(g: &Graph, seagull: &PatternWitness) -> Result<Option<PatternWitness>> {
    if seagull.kind != PatternKind::Seagull {
        return Err(Error::InvalidParameter(format!("expected a seagull, got {}", seagull.kind)));
    }
    seagull.validate(g)?;
    let (a, u, v) = (role(seagull, "a")?, role(seagull, "u")?, role(seagull, "v")?);
    let need: VertexSet = [a, u, v].iter().collect();
    let contains_all = |ps: &[Vec<usize>]| need.is_subset(&ps.iter().flatten().collect());
    for b in g.vertices() - g.closed_neighbors(a) {
        let spec = PathSpec { start: a, end: b, min_len: 2 };
        let mut found = None;
        let _ = search_paths(g, &[spec; 3], VertexSet::new(), true, &mut |ps| {
            if contains_all(ps) {
                found = Some(ps.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(paths) = found {
            let w = PatternWitness::new(PatternKind::Theta).with_role("ends", vec![a, b]).with_paths(paths);
            validate_witness(g, &w).map_err(Error::Hypothesis)?;
            return Ok(Some(w));
        }
    }
    for t in triangles(g) {
        if t.contains(&a) || t.iter().filter(|&&x| g.adjacent(a, x)).count() > 1 {
            continue;
        }
        let specs: Vec<PathSpec> = t.iter().map(|&x| PathSpec { start: a, end: x, min_len: 1 }).collect();
        let mut found = None;
        let _ = search_paths(g, &specs, VertexSet::new(), false, &mut |ps| {
            if contains_all(ps) {
                found = Some(ps.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(paths) = found {
            let short = paths.iter().any(|p| p.len() == 2);
            let kind = if short { PatternKind::ShortPyramid } else { PatternKind::Pyramid };
            let w = PatternWitness::new(kind).with_role("apex", vec![a]).with_role("base", t.to_vec()).with_paths(paths);
            validate_witness(g, &w).map_err(Error::Hypothesis)?;
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn star_cutset_examples() {
        let c = find_star_cutset(&named::path(4)).unwrap();
        assert_eq!(c.x, set(&[1]));
        assert!(c.verify(&named::path(4)));
        assert!(find_star_cutset(&named::cycle(6)).is_none());
        assert!(find_star_cutset(&named::prism()).is_none());
        assert!(find_star_cutset_exhaustive(&named::cycle(6)).unwrap().is_none());
        assert!(find_star_cutset_exhaustive(&named::prism()).unwrap().is_none());
    }

    #[test]
    fn clique_cutset_examples() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(find_clique_cutset(&bowtie).unwrap().x, set(&[2]));
        // diamond: spine is 1, 2
        assert_eq!(find_clique_cutset(&named::diamond()).unwrap().x, set(&[1, 2]));
        assert!(find_clique_cutset(&named::cycle(5)).is_none());
    }

    #[test]
    fn atom_examples() {
        let atoms = clique_atoms(&named::diamond()).atoms();
        assert_eq!(atoms, vec![set(&[0, 1, 2]), set(&[1, 2, 3])]);
        let tree = named::star(3);
        assert!(clique_atoms(&tree).atoms().iter().all(|a| a.len() == 2));
        assert_eq!(clique_atoms(&named::cycle(6)).atoms(), vec![named::cycle(6).vertices()]);
    }

    #[test]
    fn paw_on_prism() {
        let g = named::prism();
        let paw = PatternWitness::new(PatternKind::Paw)
            .with_role("v", vec![0])
            .with_role("u", vec![3])
            .with_role("a", vec![1])
            .with_role("a_prime", vec![2]);
        let s = paw_cutset_witness(&g, &paw).unwrap();
        let found = s.found().unwrap();
        assert_eq!(found.b, 5);
        assert_eq!(found.k, set(&[4, 5]));
        assert_eq!(found.x, set(&[0, 4, 5]));
    }

    #[test]
    fn seagull_on_theta() {
        // theta ends p=0, q=1; paths 0-2-3-1, 0-4-5-1, 0-6-7-1
        let g = named::theta([3, 3, 3]);
        let gull = PatternWitness::new(PatternKind::Seagull)
            .with_role("a", vec![0])
            .with_role("v", vec![2])
            .with_role("u", vec![3]);
        let s = seagull_cutset_witness(&g, &gull).unwrap();
        let found = s.found().unwrap();
        assert_eq!((found.b, found.k, found.x), (1, set(&[1]), set(&[1, 2])));
        let q = seagull_three_path_config(&g, &gull).unwrap().unwrap();
        assert_eq!(q.vertices(), g.vertices());
        assert!(crate::patterns::is_claw_center(&g, 0).is_some());
    }

    #[test]
    fn hypothesis_paths() {
        let mut g = named::prism().disjoint_union(&Graph::empty(1)).unwrap();
        g.add_edge(6, 3);
        let paw = PatternWitness::new(PatternKind::Paw)
            .with_role("v", vec![0])
            .with_role("u", vec![3])
            .with_role("a", vec![1])
            .with_role("a_prime", vec![2]);
        assert!(matches!(
            paw_cutset_witness(&g, &paw).unwrap(),
            CutsetSearch::HypothesisViolated(HypothesisViolation::StarCutset { .. })
        ));
        let mut d = named::diamond().disjoint_union(&Graph::empty(1)).unwrap();
        d.add_edge(4, 3);
        let paw = PatternWitness::new(PatternKind::Paw)
            .with_role("v", vec![3])
            .with_role("u", vec![4])
            .with_role("a", vec![1])
            .with_role("a_prime", vec![2]);
        assert!(matches!(
            paw_cutset_witness(&d, &paw).unwrap(),
            CutsetSearch::HypothesisViolated(HypothesisViolation::Diamond { .. })
        ));
        assert!(paw_cutset_witness(&d, &PatternWitness::new(PatternKind::Paw)).is_err());
        let gull = PatternWitness::new(PatternKind::Seagull)
            .with_role("a", vec![2])
            .with_role("v", vec![0])
            .with_role("u", vec![4]);
        let th = named::theta([3, 3, 3]);
        assert!(matches!(
            seagull_cutset_witness(&th, &gull).unwrap(),
            CutsetSearch::HypothesisViolated(HypothesisViolation::NotClawCenter { vertex: 2 })
        ));
    }
}
