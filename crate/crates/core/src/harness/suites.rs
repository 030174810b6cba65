use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use super::check;
use super::random::{grow, instance_rng, random_weighting, InstanceRng};
use super::{enumerate_hereditary, SuiteId, SuiteParams, SuiteReport, SweepRow, Tally};
use crate::cliques::{cliques, triangles};
use crate::cutsets::{find_clique_cutset, find_star_cutset_exhaustive, paw_cutset_witness, seagull_cutset_witness, seagull_three_path_config, CutsetSearch};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, is_connected, line_graph, named, Graph, VertexSet};
use crate::obstructions::{is_subdivision_of, is_t_clean, line_of_wall, pohoata_davies, recover_root_graph, wall};
use crate::patterns::{find_pattern, three_path_config_through, validate_witness, PatternKind, PatternWitness};
use crate::separations::{central_bag, closure, core_of, family_x, find_small_separator, Tier};
use crate::treewidth::{exact_treewidth, gamma_d, validate_decomposition};
use crate::weights::{for_each_subset, Weighting};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Corpus {
    ClockFree,
    ClockDiamondFree,
}

impl Corpus {
    fn admits(self, g: &Graph) -> bool {
        !check::has_clock(g) && (self == Corpus::ClockFree || !check::has_diamond(g))
    }
}

type CorpusCache = Mutex<BTreeMap<(Corpus, usize), Arc<Vec<Graph>>>>;

fn cache() -> &'static CorpusCache {
    static CACHE: OnceLock<CorpusCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Connected graphs of order `1..=nmax` in the class, from the internal
/// enumeration or the caller's corpus.
fn corpus(kind: Corpus, nmax: usize, params: &SuiteParams, notes: &mut Vec<String>) -> Result<Arc<Vec<Graph>>> {
    if let Some(external) = &params.corpus {
        let too_big = external.iter().filter(|g| g.n() > check::BRUTE_CAP).count();
        if too_big > 0 {
            notes.push(format!("{too_big} corpus graphs above {} vertices skipped", check::BRUTE_CAP));
        }
        let kept: Vec<Graph> = external
            .par_iter()
            .filter(|g| g.n() >= 1 && g.n() <= check::BRUTE_CAP && is_connected(g, g.vertices()) && kind.admits(g))
            .cloned()
            .collect();
        return Ok(Arc::new(kept));
    }
    if let Some(hit) = cache().lock().expect("cache lock").get(&(kind, nmax)) {
        return Ok(hit.clone());
    }
    let levels = enumerate_hereditary(nmax, |g| kind.admits(g))?;
    let graphs: Vec<Graph> = levels.into_iter().skip(1).flatten().filter(|g| is_connected(g, g.vertices())).collect();
    let graphs = Arc::new(graphs);
    cache().lock().expect("cache lock").insert((kind, nmax), graphs.clone());
    Ok(graphs)
}

fn tally_over<T, F>(items: &[T], f: F) -> Result<Tally>
where
    T: Sync,
    F: Fn(&T) -> Result<Tally> + Sync + Send,
{
    let parts: Vec<Result<Tally>> = items.par_iter().map(f).collect();
    parts.into_iter().try_fold(Tally::default(), |acc, t| Ok(acc.merge(t?)))
}

fn tally_samples<F>(samples: usize, f: F) -> Result<Tally>
where
    F: Fn(u64) -> Result<Tally> + Sync + Send,
{
    let idx: Vec<u64> = (0..samples as u64).collect();
    tally_over(&idx, |&i| f(i))
}

fn set(v: &[usize]) -> VertexSet {
    v.iter().collect()
}

/// Thetas, prisms and pyramids with short paths.
fn fixtures() -> Vec<Graph> {
    let mut out = Vec::new();
    for a in 2..=4 {
        for b in a..=4 {
            for c in b..=4 {
                out.push(named::theta([a, b, c]));
            }
        }
    }
    for a in 1..=3 {
        for b in a..=3 {
            for c in b..=3 {
                out.push(named::long_prism([a, b, c]));
            }
        }
    }
    for a in 1..=3 {
        for b in a.max(2)..=3 {
            for c in b..=3 {
                out.push(named::pyramid([a, b, c]));
            }
        }
    }
    out
}

pub(super) fn run(id: SuiteId, params: &SuiteParams, report: &mut SuiteReport) -> Result<(Tally, BTreeMap<String, String>)> {
    let mut config = BTreeMap::new();
    let mut echo = |k: &str, v: String| {
        config.insert(k.to_string(), v);
    };
    echo("corpus", if params.corpus.is_some() { "external" } else { "internal" }.to_string());
    let notes = &mut report.notes;
    let tally = match id {
        SuiteId::S1 | SuiteId::S2 => {
            let nmax = params.nmax.unwrap_or(8);
            echo("nmax", nmax.to_string());
            let graphs = corpus(Corpus::ClockFree, nmax, params, notes)?;
            if id == SuiteId::S1 {
                s1(&graphs)?
            } else {
                s2(&graphs)?
            }
        }
        SuiteId::S3 => {
            let max = params.path_len_max.unwrap_or(4);
            echo("path_len_max", max.to_string());
            s3(max)?
        }
        SuiteId::S4 => {
            let nmax = params.nmax.unwrap_or(8);
            echo("nmax", nmax.to_string());
            let mut graphs = corpus(Corpus::ClockDiamondFree, nmax, params, notes)?.as_ref().clone();
            graphs.extend(fixtures().into_iter().filter(|g| Corpus::ClockDiamondFree.admits(g)));
            s4(&graphs)?
        }
        SuiteId::S5 | SuiteId::S6 => {
            let nmax = params.nmax.unwrap_or(9);
            echo("nmax", nmax.to_string());
            let graphs = corpus(Corpus::ClockDiamondFree, nmax, params, notes)?;
            if id == SuiteId::S5 {
                s5(&graphs)?
            } else {
                s6(&graphs)?
            }
        }
        SuiteId::S7 => {
            let samples = params.samples.unwrap_or(1000);
            let nmax = params.nmax.unwrap_or(12);
            echo("samples", samples.to_string());
            echo("nmax", nmax.to_string());
            s7(samples, nmax, params.seed)?
        }
        SuiteId::S8 => {
            let samples = params.samples.unwrap_or(200);
            let nmax = params.nmax.unwrap_or(16);
            echo("samples", samples.to_string());
            echo("nmax", nmax.to_string());
            s8(samples, nmax, params.seed)?
        }
        SuiteId::S9 => {
            let nmax = params.nmax.unwrap_or(8);
            let t = params.t.unwrap_or(3);
            echo("nmax", nmax.to_string());
            echo("t", t.to_string());
            let graphs = corpus(Corpus::ClockFree, nmax, params, notes)?;
            let (tally, table) = s9(&graphs, t)?;
            report.table = table;
            tally
        }
        SuiteId::S10 => s10()?,
        SuiteId::S11 => {
            let nmax = params.nmax.unwrap_or(8);
            echo("nmax", nmax.to_string());
            let graphs = corpus(Corpus::ClockFree, nmax, params, notes)?;
            s11(&graphs)?
        }
        SuiteId::S12 => {
            let samples = params.samples.unwrap_or(1000);
            let nmax = params.nmax.unwrap_or(12);
            echo("samples", samples.to_string());
            echo("nmax", nmax.to_string());
            s12(samples, nmax, params.seed)?
        }
    };
    Ok((tally, config))
}

fn s1(graphs: &[Graph]) -> Result<Tally> {
    tally_over(graphs, |g| {
        let mut t = Tally::default();
        let star = check::has_star_cutset(g);
        if find_star_cutset_exhaustive(g)?.is_some() != star {
            t.fail(g, json!({"mismatch": "star cutset", "brute_force": star}));
        } else if star {
            t.skip();
        } else {
            t.record(!check::has_diamond(g), g, || json!({"diamond": find_pattern(g, PatternKind::Diamond).ok().flatten()}));
        }
        Ok(t)
    })
}

fn s2(graphs: &[Graph]) -> Result<Tally> {
    tally_over(graphs, |g| {
        let mut t = Tally::default();
        if !check::has_star_cutset(g) {
            t.skip();
            return Ok(t);
        }
        let cut = find_clique_cutset(g);
        let ok = cut.as_ref().is_some_and(|c| check::is_clique(g, c.x) && check::components(g, g.vertices() - c.x).len() >= 2);
        t.record(ok, g, || json!({"clique_cutset": cut.map(|c| c.x)}));
        Ok(t)
    })
}

fn s3(max: usize) -> Result<Tally> {
    let mut shapes = Vec::new();
    for short in 0..3 {
        for a in 2..=max {
            for b in 2..=max {
                let mut l = [a, a, a];
                l[short] = 1;
                l[(short + 1) % 3] = a;
                l[(short + 2) % 3] = b;
                shapes.push(l);
            }
        }
    }
    tally_over(&shapes, |&l| {
        let mut t = Tally::default();
        let g = named::pyramid(l);
        let w = find_pattern(&g, PatternKind::Clock)?;
        let ok = check::has_clock(&g) && w.as_ref().is_some_and(|w| validate_witness(&g, w).is_ok());
        t.record(ok, &g, || json!({"lengths": l, "clock": w}));
        Ok(t)
    })
}

fn s4(graphs: &[Graph]) -> Result<Tally> {
    tally_over(graphs, |g| {
        let mut t = Tally::default();
        let hyp = !check::has_star_cutset(g);
        for v in g.vertices() {
            let nb = g.neighbors(v).to_vec();
            for_each_subset(&nb, 3, &mut |xs| {
                if check::is_clique(g, xs) {
                    return false;
                }
                if !hyp {
                    t.skip();
                    return false;
                }
                let x = xs.to_vec();
                let result = three_path_config_through(g, v, [x[0], x[1], x[2]]);
                let ok = match &result {
                    Ok(w) => validate_witness(g, w).is_ok() && (xs | VertexSet::singleton(v)).is_subset(&w.vertices()),
                    Err(_) => false,
                };
                t.record(ok, g, || match &result {
                    Ok(w) => json!({"v": v, "x": x, "witness": w}),
                    Err(e) => json!({"v": v, "x": x, "error": e.to_string()}),
                });
                false
            });
        }
        Ok(t)
    })
}

fn check_separating_clique(g: &Graph, a: usize, v: usize, s: &CutsetSearch, from: VertexSet, to: VertexSet) -> bool {
    match s.found() {
        Some(sc) => {
            sc.b != a
                && !g.adjacent(a, sc.b)
                && check::is_clique(g, sc.k)
                && sc.k.is_subset(&g.closed_neighbors(sc.b))
                && sc.x == sc.k | VertexSet::singleton(v)
                && check::separates(g, sc.x, from, to)
        }
        None => false,
    }
}

fn paw(a: usize, a2: usize, v: usize, u: usize) -> PatternWitness {
    PatternWitness::new(PatternKind::Paw)
        .with_role("a", vec![a])
        .with_role("a_prime", vec![a2])
        .with_role("v", vec![v])
        .with_role("u", vec![u])
}

fn seagull(a: usize, v: usize, u: usize) -> PatternWitness {
    PatternWitness::new(PatternKind::Seagull).with_role("a", vec![a]).with_role("v", vec![v]).with_role("u", vec![u])
}

fn s5(graphs: &[Graph]) -> Result<Tally> {
    let mut tally = tally_over(graphs, |g| {
        let mut t = Tally::default();
        let hyp = !check::has_star_cutset(g);
        for tri in triangles(g) {
            for i in 0..3 {
                let v = tri[i];
                let (a, a2) = (tri[(i + 1) % 3].min(tri[(i + 2) % 3]), tri[(i + 1) % 3].max(tri[(i + 2) % 3]));
                for u in g.neighbors(v) - g.closed_neighbors(a) - g.closed_neighbors(a2) {
                    if !hyp {
                        t.skip();
                        continue;
                    }
                    let s = paw_cutset_witness(g, &paw(a, a2, v, u))?;
                    let ok = check_separating_clique(g, a, v, &s, VertexSet::singleton(u), set(&[a, a2]));
                    t.record(ok, g, || json!({"paw": {"a": a, "a_prime": a2, "v": v, "u": u}, "search": s}));
                }
            }
        }
        Ok(t)
    })?;
    // Prism: a = {0,1,2}, b = {3,4,5}; paw v = a1, u = b1, a = a2, a' = a3.
    let g = named::prism();
    let s = paw_cutset_witness(&g, &paw(1, 2, 0, 3))?;
    let ok = check_separating_clique(&g, 1, 0, &s, set(&[3]), set(&[1, 2]))
        && s.found().is_some_and(|sc| sc.b == 5 && sc.k == set(&[4, 5]));
    let mut fixture = Tally::default();
    fixture.record(ok, &g, || json!({"fixture": "prism", "search": s}));
    tally = tally.merge(fixture);
    Ok(tally)
}

fn s6(graphs: &[Graph]) -> Result<Tally> {
    let instance = |g: &Graph, a: usize, v: usize, u: usize, t: &mut Tally| -> Result<bool> {
        let sg = seagull(a, v, u);
        let s = seagull_cutset_witness(g, &sg)?;
        let q = seagull_three_path_config(g, &sg)?;
        let q_ok = q.as_ref().is_some_and(|q| {
            validate_witness(g, q).is_ok() && set(&[a, u, v]).is_subset(&q.vertices()) && {
                let qv = q.vertices();
                let nb = (g.neighbors(a) & qv).to_vec();
                (0..nb.len()).any(|i| {
                    (i + 1..nb.len()).any(|j| (j + 1..nb.len()).any(|k| check::is_stable(g, set(&[nb[i], nb[j], nb[k]]))))
                })
            }
        });
        let ok = check_separating_clique(g, a, v, &s, set(&[a]), set(&[u])) && q_ok;
        t.record(ok, g, || json!({"seagull": {"a": a, "v": v, "u": u}, "search": s, "configuration": q}));
        Ok(s.found().is_some())
    };
    let mut tally = tally_over(graphs, |g| {
        let mut t = Tally::default();
        let hyp = !check::has_star_cutset(g);
        for v in g.vertices() {
            for a in g.neighbors(v) {
                if !check::is_claw_center(g, a) {
                    continue;
                }
                for u in g.neighbors(v) - g.closed_neighbors(a) {
                    if hyp {
                        instance(g, a, v, u, &mut t)?;
                    } else {
                        t.skip();
                    }
                }
            }
        }
        Ok(t)
    })?;
    // Theta with ends 0 and 1 and paths 0-2-3-1, 0-4-5-1, 0-6-7-1.
    let g = named::theta([3, 3, 3]);
    let mut fixture = Tally::default();
    instance(&g, 0, 2, 3, &mut fixture)?;
    let s = seagull_cutset_witness(&g, &seagull(0, 2, 3))?;
    let exact = s.found().is_some_and(|sc| sc.b == 1 && sc.k == set(&[1]));
    fixture.record(exact, &g, || json!({"fixture": "theta", "search": s}));
    tally = tally.merge(fixture);
    Ok(tally)
}

/// `(A, C, B)` for a non-balanced `x`, computed from scratch.
fn separation_of(g: &Graph, w: &Weighting, x: VertexSet) -> Option<(VertexSet, VertexSet, VertexSet)> {
    let b = check::heavy_component(g, w, x)?;
    Some((g.vertices() - b - x, x, b))
}

fn crossing(g: &Graph, s1: (VertexSet, VertexSet, VertexSet), s2: (VertexSet, VertexSet, VertexSet)) -> bool {
    let from = s1.0 & s2.1;
    let to = s2.0 & s1.1;
    let inner = s1.0 & s2.0;
    let mut reached = VertexSet::new();
    let mut stack: Vec<usize> = from.to_vec();
    let mut seen = from;
    while let Some(x) = stack.pop() {
        if g.neighbors(x).intersects(&to) {
            return true;
        }
        for y in g.neighbors(x) & inner {
            if !seen.contains(y) {
                seen.insert(y);
                reached.insert(y);
                stack.push(y);
            }
        }
    }
    false
}

/// A random diamond-free graph, or a planted structure.
fn structured_instance(rng: &mut InstanceRng, nmax: usize) -> (Graph, Weighting) {
    let kind = rng.gen_range(0..5);
    let g = match kind {
        0 => named::cycle(rng.gen_range(4..=nmax.max(4))),
        1 => named::theta([rng.gen_range(2..=4), rng.gen_range(2..=4), rng.gen_range(2..=4)]),
        2 => named::long_prism([rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3)]),
        _ => {
            let n = rng.gen_range(3..=nmax.max(3));
            let p = rng.gen_range(0.15..0.55);
            grow(n, p, rng, |g| !check::has_diamond(g))
        }
    };
    let w = random_weighting(g.n(), rng);
    (g, w)
}

fn s7(samples: usize, nmax: usize, seed: u64) -> Result<Tally> {
    tally_samples(samples, |i| {
        let mut rng = instance_rng(seed, i);
        let (g, w) = structured_instance(&mut rng, nmax);
        let mut t = Tally::default();
        let family = match family_x(&g, &w) {
            Ok(f) => f,
            Err(e) if e.is_scale_cap() => {
                t.skip();
                return Ok(t);
            }
            Err(e) => {
                t.fail(&g, json!({"error": e.to_string()}));
                return Ok(t);
            }
        };
        let core = core_of(&g, &w, &family)?;
        let seps: Vec<_> = core.iter().map(|p| separation_of(&g, &w, p.x).expect("family sets are not balanced")).collect();
        let non_crossing = (0..seps.len()).all(|i| (0..seps.len()).all(|j| !crossing(&g, seps[i], seps[j])));
        let beta = seps.iter().fold(g.vertices(), |acc, s| acc & (s.1 | s.2));
        let bag = central_bag(&g, &w, &core)?;
        if bag.beta != beta || bag.non_crossing != non_crossing {
            t.fail(&g, json!({"mismatch": "central bag", "beta": beta, "library_beta": bag.beta, "non_crossing": non_crossing}));
            return Ok(t);
        }
        if !non_crossing {
            t.skip();
            return Ok(t);
        }
        let comps = check::components(&g, g.vertices() - beta);
        let uncovered: Vec<VertexSet> = comps.into_iter().filter(|d| !seps.iter().any(|s| d.is_subset(&s.0))).collect();
        let ok = uncovered.is_empty() && bag.unassigned.is_empty();
        t.record(ok, &g, || json!({"weights": w, "uncovered": uncovered, "core": core.iter().map(|p| p.x).collect::<Vec<_>>()}));
        Ok(t)
    })
}

fn s8(samples: usize, nmax: usize, seed: u64) -> Result<Tally> {
    tally_samples(samples, |i| {
        let mut rng = instance_rng(seed, i);
        let n = rng.gen_range(1..=nmax.max(1));
        let p = rng.gen_range(0.1..0.5);
        // Cycles, prisms and thetas without a path of length 2 are clock-free.
        let g = if rng.gen_range(0..6) == 0 {
            match rng.gen_range(0..3) {
                0 => named::cycle(rng.gen_range(4..=nmax.max(4))),
                1 => named::long_prism([rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3)]),
                _ => named::theta([rng.gen_range(3..=4), rng.gen_range(3..=4), rng.gen_range(3..=4)]),
            }
        } else {
            grow(n, p, &mut rng, |g| matches!(find_pattern(g, PatternKind::Clock), Ok(None)))
        };
        let w = random_weighting(g.n(), &mut rng);
        let mut t = Tally::default();
        let clock = check::has_clock(&g);
        match find_small_separator(&g, &w, 3) {
            Err(Error::ClockFound(_)) if clock => t.skip(),
            Err(e) => t.fail(&g, json!({"weights": w, "error": e.to_string()})),
            Ok((s, trace)) => {
                let omega = check::clique_number(&g);
                let lift_ok = trace.tier != Tier::CentralBag || trace.lift.as_ref().is_some_and(|l| l.y == s && l.verified);
                let ok = !clock
                    && check::is_balanced(&g, &w, s)
                    && trace.separator == s
                    && trace.size == s.len()
                    && trace.verified
                    && trace.clock_free
                    && trace.omega == omega
                    && trace.direct_bound == 4 * omega
                    && trace.diamond_free == !check::has_diamond(&g)
                    && trace.star_cutset.is_some() == check::has_star_cutset(&g)
                    && (1..=4).contains(&trace.tier.number())
                    && lift_ok;
                t.record(ok, &g, || json!({"weights": w, "separator": s, "trace": trace}));
            }
        }
        Ok(t)
    })
}

fn s9(graphs: &[Graph], t: usize) -> Result<(Tally, Vec<SweepRow>)> {
    let results: Vec<Result<Option<(usize, usize)>>> = graphs
        .par_iter()
        .map(|g| {
            if !is_t_clean(g, t)?.clean {
                return Ok(None);
            }
            let (tw, td) = exact_treewidth(g)?;
            if validate_decomposition(g, &td).ok() != Some(tw) {
                return Err(Error::InvalidDecomposition(format!("width {tw} not certified")));
            }
            Ok(Some((tw, gamma_d(g, 3))))
        })
        .collect();
    let mut tally = Tally::default();
    let mut rows: BTreeMap<usize, SweepRow> = BTreeMap::new();
    for (g, r) in graphs.iter().zip(results) {
        let row = rows.entry(g.n()).or_insert(SweepRow { n: g.n(), graphs: 0, clean: 0, max_treewidth: 0, max_gamma3: 0 });
        row.graphs += 1;
        match r {
            Ok(Some((tw, gamma))) => {
                row.clean += 1;
                row.max_treewidth = row.max_treewidth.max(tw);
                row.max_gamma3 = row.max_gamma3.max(gamma);
                tally.pass();
            }
            Ok(None) => tally.skip(),
            Err(e) => tally.fail(g, json!({"error": e.to_string()})),
        }
    }
    Ok((tally, rows.into_values().collect()))
}

fn s10() -> Result<Tally> {
    let mut t = Tally::default();
    let mut tw_check = |g: &Graph, want: usize, what: String| -> Result<()> {
        let (tw, td) = exact_treewidth(g)?;
        let ok = tw == want && validate_decomposition(g, &td).ok() == Some(tw);
        t.record(ok, g, || json!({"property": what, "expected": want, "treewidth": tw}));
        Ok(())
    };
    for k in 1..=4 {
        tw_check(&named::complete(k + 1), k, format!("treewidth of K_{}", k + 1))?;
    }
    for k in 1..=3 {
        tw_check(&named::complete_bipartite(k, k), k, format!("treewidth of K_{k},{k}"))?;
    }
    for k in 2..=3 {
        tw_check(&wall(k)?, k, format!("treewidth of wall({k})"))?;
    }
    for k in 2..=3 {
        for s in 0..=1 {
            let h = line_of_wall(k, s)?;
            let root = recover_root_graph(&h)?;
            let ok = match &root {
                Some(r) => are_isomorphic(&line_graph(r), &h)?.is_some() && is_subdivision_of(r, &wall(k)?)?.is_some(),
                None => false,
            };
            t.record(ok, &h, || json!({"property": format!("root of line-of-wall({k}, {s})")}));
        }
    }
    let mut previous = 0;
    for h in 1..=3 {
        let g = pohoata_davies(h)?;
        let wheel = find_pattern(&g, PatternKind::Wheel)?;
        let wheel_free = wheel.is_none() && !check::has_wheel(&g);
        t.record(wheel_free, &g, || json!({"property": format!("PD({h}) is wheel-free"), "wheel": wheel}));
        let clock = find_pattern(&g, PatternKind::Clock)?;
        let has_clock = clock.as_ref().is_some_and(|c| validate_witness(&g, c).is_ok()) && check::has_clock(&g);
        t.record(has_clock, &g, || json!({"property": format!("PD({h}) contains a clock")}));
        let clean = is_t_clean(&g, 3)?;
        t.record(clean.clean, &g, || json!({"property": format!("PD({h}) is 3-clean"), "check": clean}));
        let (tw, _) = exact_treewidth(&g)?;
        t.record(tw >= previous, &g, || json!({"property": format!("treewidth of PD({h}) is at least that of PD({})", h - 1), "treewidth": tw, "previous": previous}));
        previous = tw;
    }
    Ok(t)
}

/// Calls `visit` on every induced path with at least two vertices starting
/// at `a`.
fn induced_paths_from(g: &Graph, a: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(g: &Graph, path: &mut Vec<usize>, inside: VertexSet, visit: &mut dyn FnMut(&[usize])) {
        let last = *path.last().expect("nonempty");
        let earlier = inside - VertexSet::singleton(last);
        for u in g.neighbors(last) - inside {
            if g.neighbors(u).intersects(&earlier) {
                continue;
            }
            path.push(u);
            visit(path);
            go(g, path, inside | VertexSet::singleton(u), visit);
            path.pop();
        }
    }
    go(g, &mut vec![a], VertexSet::singleton(a), visit);
}

fn s11(graphs: &[Graph]) -> Result<Tally> {
    tally_over(graphs, |g| {
        let mut t = Tally::default();
        for a in g.vertices() {
            induced_paths_from(g, a, &mut |p| {
                let y = p[1];
                let rest: VertexSet = p[1..].iter().collect();
                let cands = (g.neighbors(a) - g.neighbors(y) - VertexSet::singleton(y)).to_vec();
                for (i, &x) in cands.iter().enumerate() {
                    for &v in &cands[i + 1..] {
                        if g.adjacent(x, v) {
                            continue;
                        }
                        let ok = !g.neighbors(x).intersects(&rest) || !g.neighbors(v).intersects(&rest);
                        t.record(ok, g, || json!({"path": p, "x": x, "v": v}));
                    }
                }
            });
        }
        Ok(t)
    })
}

fn shields(s: &(VertexSet, VertexSet, VertexSet), s2: &(VertexSet, VertexSet, VertexSet)) -> bool {
    let bc = s.1 | s.2;
    let bc2 = s2.1 | s2.2;
    if bc == bc2 {
        s.2 != s2.2 && s2.2.is_subset(&s.2)
    } else {
        bc.is_subset(&bc2)
    }
}

/// Pairs of cliques checked for heavy-side preservation per instance.
const PAIR_SAMPLE: usize = 300;

fn s12(samples: usize, nmax: usize, seed: u64) -> Result<Tally> {
    tally_samples(samples, |i| {
        let mut rng = instance_rng(seed, i);
        let (g, w) = structured_instance(&mut rng, nmax);
        let mut t = Tally::default();
        let family = match family_x(&g, &w) {
            Ok(f) => f,
            Err(e) if e.is_scale_cap() => {
                t.skip();
                return Ok(t);
            }
            Err(e) => {
                t.fail(&g, json!({"error": e.to_string()}));
                return Ok(t);
            }
        };
        if family.is_empty() {
            t.skip();
            return Ok(t);
        }
        let mut broken: Vec<String> = Vec::new();
        for p in &family {
            match closure(&g, &w, p.k1, p.k2) {
                Ok(q) if q.x == p.x => {}
                other => broken.push(format!("closure of {:?} is not idempotent: {other:?}", p.x)),
            }
        }
        let mut all = vec![VertexSet::new()];
        all.extend(cliques(&g, g.n()));
        let mut pairs = 0;
        'pairs: for i in 0..all.len() {
            for j in i..all.len() {
                if pairs == PAIR_SAMPLE {
                    break 'pairs;
                }
                let Some(b) = check::heavy_component(&g, &w, all[i] | all[j]) else {
                    continue;
                };
                pairs += 1;
                match closure(&g, &w, all[i], all[j]) {
                    Ok(q) if check::heavy_component(&g, &w, q.x) == Some(b) => {}
                    other => broken.push(format!("closure of {:?}, {:?} moved the heavy side: {other:?}", all[i], all[j])),
                }
            }
        }
        let seps: Vec<_> = family.iter().map(|p| separation_of(&g, &w, p.x).expect("not balanced")).collect();
        let m = seps.len();
        for a in 0..m {
            if shields(&seps[a], &seps[a]) {
                broken.push(format!("{:?} shields itself", family[a].x));
            }
            for b in 0..m {
                if a != b && shields(&seps[a], &seps[b]) && shields(&seps[b], &seps[a]) {
                    broken.push(format!("{:?} and {:?} shield each other", family[a].x, family[b].x));
                }
                for c in 0..m {
                    if shields(&seps[a], &seps[b]) && shields(&seps[b], &seps[c]) && !shields(&seps[a], &seps[c]) {
                        broken.push(format!("shielding is not transitive on {:?}", [family[a].x, family[b].x, family[c].x]));
                    }
                }
            }
        }
        let minimal: Vec<VertexSet> = (0..m).filter(|&b| !(0..m).any(|a| shields(&seps[a], &seps[b]))).map(|b| family[b].x).collect();
        let core: Vec<VertexSet> = core_of(&g, &w, &family)?.iter().map(|p| p.x).collect();
        if core != minimal {
            broken.push(format!("core {core:?} differs from the shield-minimal members {minimal:?}"));
        }
        for b in 0..m {
            if !minimal.contains(&family[b].x) && !(0..m).any(|a| minimal.contains(&family[a].x) && shields(&seps[a], &seps[b])) {
                broken.push(format!("{:?} has no shield in the core", family[b].x));
            }
        }
        t.record(broken.is_empty(), &g, || json!({"weights": w, "violations": broken}));
        Ok(t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{run_suite, SuiteParams};

    fn small(id: SuiteId) -> SuiteReport {
        let params = SuiteParams { nmax: Some(6), samples: Some(30), ..SuiteParams::with_seed(1) };
        run_suite(id, &params).unwrap()
    }

    #[test]
    fn small_runs_pass() {
        for id in [SuiteId::S1, SuiteId::S2, SuiteId::S3, SuiteId::S4, SuiteId::S5, SuiteId::S6, SuiteId::S11] {
            let r = small(id);
            assert_eq!(r.failed, 0, "{id}: {:?}", r.counterexamples);
            assert!(r.total > 0, "{id}");
        }
    }

    #[test]
    fn random_suites_are_reproducible() {
        for id in [SuiteId::S7, SuiteId::S8, SuiteId::S12] {
            let mut a = small(id);
            let mut b = small(id);
            a.wall_clock_ms = 0;
            b.wall_clock_ms = 0;
            assert_eq!(a, b, "{id}");
            assert_eq!(a.failed, 0, "{id}: {:?}", a.counterexamples);
        }
    }

    #[test]
    fn sweep_table() {
        let r = small(SuiteId::S9);
        assert_eq!(r.table.len(), 6);
        assert_eq!(r.table[0].max_treewidth, 0);
        assert_eq!(r.failed, 0);
    }

    #[test]
    fn fixtures_are_valid() {
        assert!(fixtures().iter().any(|g| Corpus::ClockDiamondFree.admits(g) && !check::has_star_cutset(g)));
    }
}
