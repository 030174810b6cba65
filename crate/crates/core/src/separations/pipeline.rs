use std::collections::BTreeMap;

use serde::Serialize;

use super::bag::{central_bag, extend_bag, lift_separator, ExtendedBag, Lift};
use super::{core_of, family_x, half};
use crate::cliques::clique_number;
use crate::cutsets::find_star_cutset;
use crate::error::{Error, Result};
use crate::graph::{components, Graph, VertexSet};
use crate::patterns::{find_pattern, PatternKind};
use crate::treewidth::{decomposition_along_clique_cutsets, exact_treewidth, separator_from_decomposition, EXACT_CAP};
use crate::weights::{for_each_subset, is_balanced_separator, smallest_balanced_separator, Weighting};

/// Subsets the direct search may examine.
const DIRECT_BUDGET: u64 = 4_000_000;

/// Which stage produced the separator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    /// A diamond or star cutset was present; the separator is a bag of a
    /// decomposition glued along clique cutsets.
    CliqueAtoms,
    /// Direct search for a separator of at most `4ω` vertices.
    Direct,
    /// Lifted from a separator of the extended central bag.
    CentralBag,
    /// Exhaustive or greedy search after the other stages gave nothing.
    Fallback,
}

impl Tier {
    pub fn number(self) -> u8 {
        match self {
            Tier::CliqueAtoms => 1,
            Tier::Direct => 2,
            Tier::CentralBag => 3,
            Tier::Fallback => 4,
        }
    }
}

/// Summary of a central-bag attempt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BagSummary {
    pub family_size: usize,
    pub core: Vec<VertexSet>,
    pub beta: VertexSet,
    pub beta_star: Option<VertexSet>,
    pub non_crossing: bool,
    pub unassigned: usize,
    /// Separator of `β*` before lifting.
    pub bag_separator: Option<VertexSet>,
}

impl BagSummary {
    fn new(family_size: usize, bag: &ExtendedBag) -> Self {
        BagSummary {
            family_size,
            core: bag.records.iter().map(|r| r.pair.x).collect(),
            beta: bag.beta,
            beta_star: bag.beta_star,
            non_crossing: bag.non_crossing,
            unassigned: bag.unassigned.len(),
            bag_separator: None,
        }
    }
}

/// Everything `find_small_separator` checked and tried.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatorTrace {
    pub tier: Tier,
    pub separator: VertexSet,
    pub size: usize,
    pub verified: bool,
    pub t: usize,
    pub clock_free: bool,
    pub diamond_free: bool,
    pub star_cutset: Option<VertexSet>,
    pub omega: usize,
    /// `4ω`, the size the direct search looks for.
    pub direct_bound: usize,
    /// Whether the direct search ran to completion and found nothing.
    pub no_small_separator: Option<bool>,
    pub bag: Option<BagSummary>,
    pub lift: Option<Lift>,
    pub notes: Vec<String>,
    /// Constants with no computable value, kept by name.
    pub symbolic: BTreeMap<String, String>,
}

fn symbolic() -> BTreeMap<String, String> {
    [("q", "q(t, gamma_3)"), ("n", "q + 1"), ("c", "max(4t, n(2t+1))"), ("f", "f(t)")]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn binomial_sum(n: usize, k: usize) -> u64 {
    let mut total = 0u64;
    let mut term = 1u64;
    for i in 0..=k.min(n) {
        total = total.saturating_add(term);
        term = term.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    total
}

/// Among separators of minimum size (at most `max_size`), one whose heaviest
/// component is lightest; ties go to the lexicographically first.
fn most_balanced_small_separator(g: &Graph, w: &Weighting, max_size: usize) -> Option<VertexSet> {
    let verts = g.vertices().to_vec();
    for size in 0..=max_size.min(verts.len()) {
        let mut best: Option<(crate::weights::Rational, VertexSet)> = None;
        for_each_subset(&verts, size, &mut |x| {
            if is_balanced_separator(g, w, x, half()) {
                let heaviest = components(g, g.vertices() - x).into_iter().map(|d| w.weight(d)).max().unwrap_or_default();
                if best.as_ref().is_none_or(|(h, _)| heaviest < *h) {
                    best = Some((heaviest, x));
                }
            }
            false
        });
        if let Some((_, x)) = best {
            return Some(x);
        }
    }
    None
}

/// Drops vertices from `V(G)` in ascending order while the rest stays
/// balanced.
fn greedy_separator(g: &Graph, w: &Weighting) -> VertexSet {
    let mut y = g.vertices();
    for v in g.vertices() {
        let smaller = y - VertexSet::singleton(v);
        if is_balanced_separator(g, w, smaller, half()) {
            y = smaller;
        }
    }
    y
}

fn central_bag_attempt(g: &Graph, w: &Weighting, t: usize, trace: &mut SeparatorTrace) -> Result<Option<VertexSet>> {
    let family = family_x(g, w)?;
    let core = core_of(g, w, &family)?;
    let bag = central_bag(g, w, &core)?;
    trace.bag = Some(BagSummary::new(family.len(), &bag));
    if !bag.non_crossing {
        trace.notes.push("core separations cross".into());
    }
    let bag = extend_bag(g, w, bag)?;
    let summary = BagSummary::new(family.len(), &bag);
    let sub = bag.graph(g);
    if sub.graph.n() > EXACT_CAP {
        trace.bag = Some(summary);
        return Err(Error::ScaleCap { what: "extended central bag", size: sub.graph.n(), cap: EXACT_CAP });
    }
    let local_w = bag.local_weighting().expect("extended");
    let (_, td) = exact_treewidth(&sub.graph)?;
    let s = sub.host_set(separator_from_decomposition(&sub.graph, &td, &local_w, half())?);
    trace.bag = Some(BagSummary { bag_separator: Some(s), ..summary });
    let lift = lift_separator(g, w, &bag, s, t)?;
    let y = lift.y;
    let ok = lift.verified;
    trace.lift = Some(lift);
    Ok(ok.then_some(y))
}

/// A `(w, 1/2)`-balanced separator of a clock-free graph, with a trace of
/// the stages tried and the structural checks made.
///
/// Stages: clique-atom recomposition when a diamond or star cutset is
/// present; direct search up to `4ω` vertices; the central-bag route; and
/// finally exhaustive or greedy search. Every returned set is re-checked.
pub fn find_small_separator(g: &Graph, w: &Weighting, t: usize) -> Result<(VertexSet, SeparatorTrace)> {
    w.check_graph(g)?;
    if let Some(clock) = find_pattern(g, PatternKind::Clock)? {
        return Err(Error::ClockFound(Box::new(clock)));
    }
    let diamond_free = find_pattern(g, PatternKind::Diamond)?.is_none();
    let star_cutset = find_star_cutset(g).map(|c| c.x);
    let omega = clique_number(g);
    let mut trace = SeparatorTrace {
        tier: Tier::Fallback,
        separator: VertexSet::new(),
        size: 0,
        verified: false,
        t,
        clock_free: true,
        diamond_free,
        star_cutset,
        omega,
        direct_bound: 4 * omega,
        no_small_separator: None,
        bag: None,
        lift: None,
        notes: Vec::new(),
        symbolic: symbolic(),
    };
    let finish = |mut trace: SeparatorTrace, tier: Tier, s: VertexSet| {
        trace.tier = tier;
        trace.separator = s;
        trace.size = s.len();
        trace.verified = is_balanced_separator(g, w, s, half());
        (s, trace)
    };

    if !diamond_free || star_cutset.is_some() {
        match decomposition_along_clique_cutsets(g).and_then(|td| separator_from_decomposition(g, &td, w, half())) {
            Ok(s) if is_balanced_separator(g, w, s, half()) => return Ok(finish(trace, Tier::CliqueAtoms, s)),
            Ok(s) => trace.notes.push(format!("atom decomposition gave unbalanced bag {s:?}")),
            Err(e) => trace.notes.push(format!("clique-atom stage skipped: {e}")),
        }
    }

    if binomial_sum(g.n(), trace.direct_bound) <= DIRECT_BUDGET {
        match most_balanced_small_separator(g, w, trace.direct_bound) {
            Some(s) => {
                trace.no_small_separator = Some(false);
                return Ok(finish(trace, Tier::Direct, s));
            }
            None => trace.no_small_separator = Some(true),
        }
    } else {
        trace.notes.push("direct search exceeds its budget".into());
    }

    if diamond_free && star_cutset.is_none() {
        match central_bag_attempt(g, w, t, &mut trace) {
            Ok(Some(y)) => return Ok(finish(trace, Tier::CentralBag, y)),
            Ok(None) => trace.notes.push("lifted set failed the balance check".into()),
            Err(e) => trace.notes.push(format!("central-bag stage failed: {e}")),
        }
    }

    let s = if binomial_sum(g.n(), g.n()) <= DIRECT_BUDGET {
        smallest_balanced_separator(g, w, half(), g.n()).expect("V(G) is balanced")
    } else {
        greedy_separator(g, w)
    };
    Ok(finish(trace, Tier::Fallback, s))
}
