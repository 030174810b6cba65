//! Canonical separations, 2-clique closures, shields and cores, central
//! bags with marker paths, separator lifting and the separator pipeline.

mod bag;
mod pipeline;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cliques::cliques;
use crate::error::{Error, Result};
use crate::graph::{component_of, components, Graph, VertexSet};
use crate::patterns::{PatternKind, PatternWitness};
use crate::weights::{Rational, Weighting};

pub use bag::{central_bag, extend_bag, lift_separator, marker_path, CoreRecord, ExtendedBag, Lift};
pub use pipeline::{find_small_separator, SeparatorTrace, Tier};

/// Largest clique count `family_x` will pair up.
pub const FAMILY_CLIQUE_CAP: usize = 2048;

/// A partition `(A, C, B)` of the vertices with `A` anticomplete to `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Separation {
    #[serde(rename = "A")]
    pub a: VertexSet,
    #[serde(rename = "C")]
    pub c: VertexSet,
    #[serde(rename = "B")]
    pub b: VertexSet,
}

impl Separation {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        !a.intersects(&b)
            && !a.intersects(&c)
            && !b.intersects(&c)
            && (a | b | c) == g.vertices()
            && g.anticomplete(a, b)
    }
}

/// `(A, X, B)` where `B` is the unique component of `G \ x` weighing more
/// than 1/2. Fails with [`Error::BalancedSet`] when there is none.
pub fn canonical_separation(g: &Graph, w: &Weighting, x: VertexSet) -> Result<Separation> {
    w.check_graph(g)?;
    g.check_set(x)?;
    let b = components(g, g.vertices() - x)
        .into_iter()
        .find(|d| w.is_heavy(*d))
        .ok_or(Error::BalancedSet)?;
    Ok(Separation { a: g.vertices() - x - b, c: x, b })
}

fn diamond_in(g: &Graph, x: usize, y: usize, ext: VertexSet) -> PatternWitness {
    let rest = ext - VertexSet::singleton(x) - VertexSet::singleton(y);
    let (p, q) = rest
        .iter()
        .flat_map(|p| rest.iter().filter(move |&q| q > p).map(move |q| (p, q)))
        .find(|&(p, q)| !g.adjacent(p, q))
        .expect("extension is not a clique");
    PatternWitness::new(PatternKind::Diamond).with_role("spine", vec![x, y]).with_role("tips", vec![p, q])
}

/// `K` plus the common neighbours in `a` of the two smallest vertices of
/// `K`; just `K` when `|K| <= 1`. A non-clique result means `G` has a
/// diamond, which is returned as the error.
pub fn clique_extension(g: &Graph, k: VertexSet, a: VertexSet) -> Result<VertexSet> {
    g.check_set(k)?;
    if !g.is_clique(k) {
        return Err(Error::InvalidParameter(format!("{k:?} is not a clique")));
    }
    if k.len() <= 1 {
        return Ok(k);
    }
    let mut it = k.iter();
    let (x, y) = (it.next().unwrap(), it.next().unwrap());
    let ext = k | (g.neighbors(x) & g.neighbors(y) & a);
    if !g.is_clique(ext) {
        return Err(Error::DiamondDetected(Box::new(diamond_in(g, x, y, ext))));
    }
    if cfg!(debug_assertions) {
        for p in k {
            for q in k.iter().filter(|&q| q > p) {
                let other = k | (g.neighbors(p) & g.neighbors(q) & a);
                if other != ext {
                    return Err(Error::Hypothesis(format!(
                        "clique extension of {k:?} depends on the chosen pair, so G has a diamond"
                    )));
                }
            }
        }
    }
    Ok(ext)
}

/// Two cliques and their union; `closed` records whether the pair is its
/// own closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePair {
    #[serde(rename = "K1")]
    pub k1: VertexSet,
    #[serde(rename = "K2")]
    pub k2: VertexSet,
    #[serde(rename = "X")]
    pub x: VertexSet,
    pub closed: bool,
}

fn closure_step(g: &Graph, w: &Weighting, k1: VertexSet, k2: VertexSet) -> Result<(VertexSet, VertexSet, Separation)> {
    let sep = canonical_separation(g, w, k1 | k2)?;
    let nb = g.neighborhood_of(sep.b);
    let ac = sep.a | sep.c;
    let r1 = clique_extension(g, k1 & nb, ac)?;
    let r2 = clique_extension(g, k2 & nb, ac)?;
    Ok((r1, r2, sep))
}

/// The closure of `K1 ∪ K2`: each clique is trimmed to its vertices with a
/// neighbour in the heavy component and then extended inside `A ∪ C`.
///
/// The result is checked to keep the same heavy component, and its
/// `closed` flag reports whether closing it again changes nothing.
pub fn closure(g: &Graph, w: &Weighting, k1: VertexSet, k2: VertexSet) -> Result<CliquePair> {
    for k in [k1, k2] {
        g.check_set(k)?;
        if !g.is_clique(k) {
            return Err(Error::InvalidParameter(format!("{k:?} is not a clique")));
        }
    }
    let (r1, r2, sep) = closure_step(g, w, k1, k2)?;
    let x = r1 | r2;
    let after = canonical_separation(g, w, x)?;
    if after.b != sep.b {
        return Err(Error::Hypothesis(format!(
            "closure {x:?} changed the heavy component from {:?} to {:?}",
            sep.b, after.b
        )));
    }
    let (s1, s2, _) = closure_step(g, w, r1, r2)?;
    Ok(CliquePair { k1: r1, k2: r2, x, closed: (s1 | s2) == x })
}

/// Closures of every pair of cliques (the empty clique included) whose union
/// is not balanced, deduplicated by vertex set and sorted
/// lexicographically. The empty set is left out.
pub fn family_x(g: &Graph, w: &Weighting) -> Result<Vec<CliquePair>> {
    w.check_graph(g)?;
    let mut all = vec![VertexSet::new()];
    all.extend(cliques(g, g.n()));
    if all.len() > FAMILY_CLIQUE_CAP {
        return Err(Error::ScaleCap { what: "clique pairs", size: all.len(), cap: FAMILY_CLIQUE_CAP });
    }
    let found: Vec<Result<Vec<CliquePair>>> = (0..all.len())
        .into_par_iter()
        .map(|i| {
            let mut out = Vec::new();
            for j in i..all.len() {
                match closure(g, w, all[i], all[j]) {
                    Ok(p) if !p.x.is_empty() => out.push(p),
                    Ok(_) | Err(Error::BalancedSet) => {}
                    Err(e) => return Err(e),
                }
            }
            Ok(out)
        })
        .collect();
    let mut family: Vec<CliquePair> = Vec::new();
    for chunk in found {
        family.extend(chunk?);
    }
    family.sort_by(|p, q| p.x.lex_cmp(&q.x));
    family.dedup_by(|p, q| p.x == q.x);
    Ok(family)
}

fn shields(s: &Separation, s_prime: &Separation) -> bool {
    let bc = s.b | s.c;
    let bc_prime = s_prime.b | s_prime.c;
    (bc != bc_prime && bc.is_subset(&bc_prime)) || (bc == bc_prime && s_prime.b != s.b && s_prime.b.is_subset(&s.b))
}

/// Whether `x` is a shield for `x_prime`: its heavy side with separator is
/// strictly smaller, or equal with a strictly larger heavy component.
pub fn is_shield(g: &Graph, w: &Weighting, x: VertexSet, x_prime: VertexSet) -> Result<bool> {
    Ok(shields(&canonical_separation(g, w, x)?, &canonical_separation(g, w, x_prime)?))
}

/// Members of `family` that no member shields.
pub fn core_of(g: &Graph, w: &Weighting, family: &[CliquePair]) -> Result<Vec<CliquePair>> {
    let seps = family.iter().map(|p| canonical_separation(g, w, p.x)).collect::<Result<Vec<_>>>()?;
    Ok(family
        .iter()
        .enumerate()
        .filter(|&(i, _)| !seps.iter().any(|s| shields(s, &seps[i])))
        .map(|(_, p)| *p)
        .collect())
}

/// No path has one end in `A1 ∩ C2`, the other in `A2 ∩ C1` and its
/// interior in `A1 ∩ A2`.
pub fn loosely_non_crossing(g: &Graph, s1: &Separation, s2: &Separation) -> bool {
    let from = s1.a & s2.c;
    let to = s2.a & s1.c;
    if from.is_empty() || to.is_empty() {
        return true;
    }
    let inner = s1.a & s2.a;
    let mut reach = from;
    for v in g.neighborhood_of(from) & inner {
        if !reach.contains(v) {
            reach |= component_of(g, v, inner);
        }
    }
    !g.neighborhood_of(reach).intersects(&to) && !from.intersects(&to)
}

/// `1/2` as a rational.
pub fn half() -> Rational {
    Rational::new(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    /// C6 on 0..5 with vertex 3 weighing 3/5 and the rest 2/25.
    fn w6() -> (Graph, Weighting) {
        (named::cycle(6), Weighting::from_integers(&[2, 2, 2, 15, 2, 2]).unwrap())
    }

    /// P7 on 0..6 with vertex 6 weighing 3/5 and the rest 1/15.
    fn p7() -> (Graph, Weighting) {
        (named::path(7), Weighting::from_integers(&[1, 1, 1, 1, 1, 1, 9]).unwrap())
    }

    #[test]
    fn canonical_examples() {
        let (g, w) = w6();
        let s = canonical_separation(&g, &w, set(&[2, 4])).unwrap();
        assert_eq!((s.a, s.c, s.b), (set(&[0, 1, 5]), set(&[2, 4]), set(&[3])));
        let s = canonical_separation(&g, &w, set(&[1, 5])).unwrap();
        assert_eq!((s.a, s.b), (set(&[0]), set(&[2, 3, 4])));
        assert!(s.is_valid(&g));
        let u = Weighting::uniform(6).unwrap();
        assert!(matches!(canonical_separation(&g, &u, set(&[0, 3])), Err(Error::BalancedSet)));
    }

    #[test]
    fn extension_examples() {
        // triangle 0,1,2 with pendants 3 on 0 and 4 on 2
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (2, 4)]).unwrap();
        assert_eq!(clique_extension(&g, set(&[1]), g.vertices()).unwrap(), set(&[1]));
        assert_eq!(clique_extension(&g, set(&[0, 1]), set(&[2, 3])).unwrap(), set(&[0, 1, 2]));
        let c6 = named::cycle(6);
        assert_eq!(clique_extension(&c6, set(&[0, 1]), set(&[2, 3, 4, 5])).unwrap(), set(&[0, 1]));
        let d = named::diamond();
        let spine: Vec<usize> = (0..4).filter(|&v| d.degree(v) == 3).collect();
        let err = clique_extension(&d, spine.iter().collect(), d.vertices()).unwrap_err();
        assert!(matches!(err, Error::DiamondDetected(_)));
    }

    #[test]
    fn closure_examples() {
        let (g, w) = w6();
        let p = closure(&g, &w, set(&[2]), set(&[4])).unwrap();
        assert_eq!(p.x, set(&[2, 4]));
        assert!(p.closed);
        // K4 on 0..3 with the path 3-4-5, vertex 5 heavy
        let mut g = named::complete(4).disjoint_union(&named::path(2)).unwrap();
        g.add_edge(3, 4);
        let w = Weighting::from_integers(&[1, 1, 1, 1, 1, 10]).unwrap();
        assert_eq!(closure(&g, &w, set(&[0, 1]), VertexSet::new()).unwrap().x, set(&[0, 1]));
        // triangle x=0,y=1,z=2; 0-3, 1-4, 3-4, 2-5; heavy side {3,4}
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (3, 4), (2, 5)]).unwrap();
        let w = Weighting::from_integers(&[0, 0, 0, 5, 5, 1]).unwrap();
        assert_eq!(closure(&g, &w, set(&[0, 1]), VertexSet::new()).unwrap().x, set(&[0, 1, 2]));
    }

    #[test]
    fn family_and_core_examples() {
        let (g, w) = p7();
        let fam = family_x(&g, &w).unwrap();
        let xs: Vec<VertexSet> = fam.iter().map(|p| p.x).collect();
        assert_eq!(xs, (0..6).map(VertexSet::singleton).collect::<Vec<_>>());
        let core = core_of(&g, &w, &fam).unwrap();
        assert_eq!(core.iter().map(|p| p.x).collect::<Vec<_>>(), vec![set(&[5])]);
        assert!(is_shield(&g, &w, set(&[2]), set(&[1])).unwrap());
        assert!(!is_shield(&g, &w, set(&[1]), set(&[2])).unwrap());
        assert!(!is_shield(&g, &w, set(&[2]), set(&[2])).unwrap());

        let (g, w) = w6();
        let fam = family_x(&g, &w).unwrap();
        assert!(fam.iter().any(|p| p.x == set(&[2, 4])));
        let core = core_of(&g, &w, &fam).unwrap();
        assert_eq!(core.iter().map(|p| p.x).collect::<Vec<_>>(), vec![set(&[2, 4])]);
        assert_eq!(core_of(&g, &w, &core).unwrap(), core);
    }

    #[test]
    fn crossing_examples() {
        let g = named::path(9);
        let w = Weighting::point(9, 4).unwrap();
        let s1 = canonical_separation(&g, &w, set(&[1])).unwrap();
        let s2 = canonical_separation(&g, &w, set(&[7])).unwrap();
        assert!(loosely_non_crossing(&g, &s1, &s2));
        assert!(loosely_non_crossing(&g, &s1, &s1));
        let c8 = named::cycle(8);
        let s1 = Separation { a: set(&[0, 1, 7]), c: set(&[2, 6]), b: set(&[3, 4, 5]) };
        let s2 = Separation { a: set(&[1, 2, 3]), c: set(&[0, 4]), b: set(&[5, 6, 7]) };
        assert!(s1.is_valid(&c8) && s2.is_valid(&c8));
        assert!(!loosely_non_crossing(&c8, &s1, &s2));
        assert!(!loosely_non_crossing(&c8, &s2, &s1));
    }
}
