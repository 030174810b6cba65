//! Acceptance criteria. Runs as a plain binary so every criterion prints
//! one line whether it passes or not.
//!
//! Criterion 11 has a known red outcome: the three Pohoata-Davies
//! properties that fail are listed in `KNOWN_PD_FAILURES`, and the run
//! only succeeds if exactly those fail.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clockfree::graph::named;
use clockfree::harness::random::{erdos_renyi, instance_rng, random_weighting};
use clockfree::harness::{check, run_suite, SuiteId, SuiteParams, SuiteReport};
use clockfree::obstructions::{is_t_clean, pohoata_davies, wall};
use clockfree::separations::{central_bag, core_of, extend_bag, family_x, lift_separator};
use clockfree::treewidth::{decomposition_from_separators, exact_treewidth, validate_decomposition};
use clockfree::weights::{smallest_balanced_separator, Rational, Weighting};
use clockfree::{Error, Graph, VertexSet};
use rand::Rng;

const SEED: u64 = 20240611;

/// PD properties expected to fail, as recorded by the S10 suite.
const KNOWN_PD_FAILURES: [&str; 3] = ["PD(1) contains a clock", "PD(2) contains a clock", "PD(3) is wheel-free"];

/// Treewidth of PD(1), PD(2), PD(3).
const PD_TREEWIDTH: [usize; 3] = [2, 2, 3];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u)).collect()
}

/// Treewidth by the subset recurrence over elimination prefixes:
/// `TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|)` where `Q` is
/// the set of vertices outside `S` reachable from `v` through `S - v`.
fn oracle_treewidth(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    if n == 0 {
        return 0;
    }
    let adj = adjacency(g);
    let full: u32 = (1u32 << n) - 1;
    let q = |s: u32, v: usize| -> u32 {
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        let mut out = 0u32;
        while let Some(x) = stack.pop() {
            let mut nb = adj[x] & !seen;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << u;
                if s >> u & 1 == 1 {
                    stack.push(u);
                } else {
                    out |= 1 << u;
                }
            }
        }
        out.count_ones()
    };
    let mut tw = vec![u8::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let rest = s & !(1 << v);
            best = best.min(tw[rest as usize].max(q(rest, v) as u8));
        }
        tw[s as usize] = best;
    }
    tw[full as usize] as usize
}

fn suite(id: SuiteId, params: SuiteParams) -> Result<SuiteReport, Error> {
    run_suite(id, &params)
}

fn summary(r: &SuiteReport) -> String {
    format!("{} instances, {} meet the hypotheses, {} failed", r.total, r.hypothesis, r.failed)
}

fn timed(limit: Duration, r: Result<Outcome, Error>, spent: Duration) -> Outcome {
    match r {
        Ok(o) if spent > limit => outcome(false, format!("{} but took {spent:.1?} (limit {limit:?})", o.detail)),
        Ok(o) => o,
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn criterion_1() -> Result<Outcome, Error> {
    let mut bad = Vec::new();
    let mut graphs: Vec<(String, Graph, usize)> =
        (1..=4).map(|t| (format!("K{}", t + 1), named::complete(t + 1), t)).collect();
    for t in 2..=3 {
        graphs.push((format!("wall({t})"), wall(t)?, t));
    }
    for (name, g, t) in &graphs {
        let (tw, td) = exact_treewidth(g)?;
        let oracle = oracle_treewidth(g);
        if tw != *t || oracle != *t || validate_decomposition(g, &td) != Ok(tw) {
            bad.push(format!("{name}: library {tw}, oracle {oracle}, expected {t}"));
        }
    }
    Ok(if bad.is_empty() {
        outcome(true, format!("{} obstructions have treewidth t", graphs.len()))
    } else {
        outcome(false, bad.join("; "))
    })
}

fn suite_outcome(r: &SuiteReport, need_hypothesis: bool) -> Outcome {
    let pass = r.ok() && r.total > 0 && (!need_hypothesis || r.hypothesis > 0);
    outcome(pass, summary(r))
}

fn criterion_2() -> Result<Outcome, Error> {
    let r = suite(SuiteId::S1, SuiteParams { nmax: Some(8), ..SuiteParams::with_seed(SEED) })?;
    Ok(suite_outcome(&r, true))
}

fn criterion_3() -> Result<Outcome, Error> {
    let r = suite(SuiteId::S2, SuiteParams { nmax: Some(8), ..SuiteParams::with_seed(SEED) })?;
    Ok(suite_outcome(&r, true))
}

fn criterion_4() -> Result<Outcome, Error> {
    let r = suite(SuiteId::S3, SuiteParams { path_len_max: Some(4), ..SuiteParams::with_seed(SEED) })?;
    Ok(suite_outcome(&r, true))
}

fn criterion_5() -> Result<Outcome, Error> {
    let r = suite(SuiteId::S4, SuiteParams { nmax: Some(8), ..SuiteParams::with_seed(SEED) })?;
    Ok(suite_outcome(&r, true))
}

fn criterion_6() -> Result<Outcome, Error> {
    use clockfree::cutsets::{paw_cutset_witness, seagull_cutset_witness};
    use clockfree::{PatternKind, PatternWitness};

    let s5 = suite(SuiteId::S5, SuiteParams { nmax: Some(9), ..SuiteParams::with_seed(SEED) })?;
    let s6 = suite(SuiteId::S6, SuiteParams { nmax: Some(9), ..SuiteParams::with_seed(SEED) })?;
    let set = |v: &[usize]| v.iter().collect::<VertexSet>();

    // Prism triangles {0,1,2} and {3,4,5} with matching i <-> i+3.
    let prism = named::prism();
    let paw = PatternWitness::new(PatternKind::Paw)
        .with_role("a", vec![1])
        .with_role("a_prime", vec![2])
        .with_role("v", vec![0])
        .with_role("u", vec![3]);
    let p = paw_cutset_witness(&prism, &paw)?;
    let prism_ok = p.found().is_some_and(|s| {
        s.b == 5 && s.k == set(&[4, 5]) && check::separates(&prism, s.x, set(&[3]), set(&[1, 2]))
    });

    // Theta with ends 0, 1 and paths 0-2-3-1, 0-4-5-1, 0-6-7-1.
    let theta = named::theta([3, 3, 3]);
    let gull = PatternWitness::new(PatternKind::Seagull).with_role("a", vec![0]).with_role("v", vec![2]).with_role("u", vec![3]);
    let q = seagull_cutset_witness(&theta, &gull)?;
    let theta_ok = q
        .found()
        .is_some_and(|s| s.b == 1 && s.k == set(&[1]) && check::separates(&theta, s.x, set(&[0]), set(&[3])));

    let pass = s5.ok() && s6.ok() && s5.hypothesis > 0 && s6.hypothesis > 0 && prism_ok && theta_ok;
    Ok(outcome(
        pass,
        format!(
            "paw: {}; seagull: {}; prism fixture {}; theta fixture {}",
            summary(&s5),
            summary(&s6),
            if prism_ok { "ok" } else { "wrong" },
            if theta_ok { "ok" } else { "wrong" }
        ),
    ))
}

/// Everything computed from adjacency masks and integer weights.
struct BruteFamily {
    family: Vec<u32>,
    core: Vec<u32>,
    beta: u32,
}

fn brute_family(g: &Graph, weights: &[u64]) -> BruteFamily {
    let n = g.n();
    let adj = adjacency(g);
    let full: u32 = (1u32 << n) - 1;
    let total: u64 = weights.iter().sum();
    let weight = |s: u32| (0..n).filter(|&v| s >> v & 1 == 1).map(|v| weights[v]).sum::<u64>();
    let comps = |within: u32| {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = comp | (0..n).filter(|&v| comp >> v & 1 == 1).fold(0, |m, v| m | adj[v]) & within;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    };
    let heavy = |x: u32| comps(full & !x).into_iter().find(|&d| 2 * weight(d) > total);
    let nbhd = |s: u32| (0..n).filter(|&v| s >> v & 1 == 1).fold(0, |m, v| m | adj[v]) & !s;
    let is_clique = |s: u32| (0..n).filter(|&v| s >> v & 1 == 1).all(|v| adj[v] | 1 << v | !s == u32::MAX);
    let extend = |k: u32, a: u32| {
        if k.count_ones() <= 1 {
            return k;
        }
        let x = k.trailing_zeros() as usize;
        let y = (k & !(1 << x)).trailing_zeros() as usize;
        k | adj[x] & adj[y] & a
    };
    let cliques: Vec<u32> = (0..=full).filter(|&s| is_clique(s)).collect();
    let mut family = Vec::new();
    for (i, &k1) in cliques.iter().enumerate() {
        for &k2 in &cliques[i..] {
            let x = k1 | k2;
            let Some(b) = heavy(x) else { continue };
            let ac = full & !b;
            let nb = nbhd(b);
            let closed = extend(k1 & nb, ac) | extend(k2 & nb, ac);
            if closed != 0 && !family.contains(&closed) {
                family.push(closed);
            }
        }
    }
    family.sort_unstable();
    let side = |x: u32| {
        let b = heavy(x).expect("closures stay unbalanced");
        (b | x, b)
    };
    let shields = |x: u32, y: u32| {
        let (bc, b) = side(x);
        let (bc2, b2) = side(y);
        (bc != bc2 && bc & !bc2 == 0) || (bc == bc2 && b2 != b && b2 & !b == 0)
    };
    let core: Vec<u32> = family.iter().copied().filter(|&y| !family.iter().any(|&x| shields(x, y))).collect();
    let beta = core.iter().fold(full, |acc, &x| acc & side(x).0);
    BruteFamily { family, core, beta }
}

fn mask(s: VertexSet) -> u32 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

fn criterion_7() -> Result<Outcome, Error> {
    // v1..v6 are 0..5; v4 carries 15/25 and every other vertex 2/25.
    let g = named::cycle(6);
    let ints = [2, 2, 2, 15, 2, 2];
    let w = Weighting::from_integers(&ints)?;
    let set = |v: &[usize]| v.iter().collect::<VertexSet>();
    let mut bad = Vec::new();
    let mut expect = |what: &str, ok: bool| {
        if !ok {
            bad.push(what.to_string());
        }
    };

    let oracle = brute_family(&g, &ints);
    let family = family_x(&g, &w)?;
    let mut lib_family: Vec<u32> = family.iter().map(|p| mask(p.x)).collect();
    lib_family.sort_unstable();
    expect("family contains {v3,v5}", lib_family.contains(&mask(set(&[2, 4]))));
    expect("family matches the oracle", lib_family == oracle.family);
    let core = core_of(&g, &w, &family)?;
    let lib_core: Vec<u32> = core.iter().map(|p| mask(p.x)).collect();
    expect("core is {{v3,v5}}", lib_core == vec![mask(set(&[2, 4]))]);
    expect("core matches the oracle", lib_core == oracle.core);

    let bag = central_bag(&g, &w, &core)?;
    expect("beta is {v3,v4,v5}", bag.beta == set(&[2, 3, 4]));
    expect("beta matches the oracle", mask(bag.beta) == oracle.beta);

    let bag = extend_bag(&g, &w, bag)?;
    let marker = bag.records.first().and_then(|r| r.marker.clone());
    expect("marker path v3-v2-v1-v6-v5", marker == Some(vec![2, 1, 0, 5, 4]));
    let anchor = bag.records.first().and_then(|r| r.anchor);
    expect("anchor is v1", anchor == Some(0));
    let moved = bag.w_star.as_ref().map(|ws| ws.get(0));
    let deleted = check::weight(&w, g.vertices() - oracle_set(oracle.beta));
    expect("w*(v1) is 6/25", moved == Some(Rational::new(6, 25)) && deleted == Rational::new(6, 25));

    let lift = lift_separator(&g, &w, &bag, set(&[3]), 2)?;
    expect("lift of {v4}", lift.y == set(&[2, 3, 4]) && check::is_balanced(&g, &w, lift.y));
    let lift = lift_separator(&g, &w, &bag, set(&[0, 3]), 2)?;
    expect("lift of {v1,v4}", lift.y == set(&[0, 2, 3, 4]) && check::is_balanced(&g, &w, lift.y));

    Ok(if bad.is_empty() {
        outcome(true, format!("all values match; oracle family has {} members", oracle.family.len()))
    } else {
        outcome(false, format!("mismatch: {}", bad.join(", ")))
    })
}

fn oracle_set(m: u32) -> VertexSet {
    (0..32).filter(|&v| m >> v & 1 == 1).collect()
}

fn criterion_8() -> Result<Outcome, Error> {
    let r = suite(SuiteId::S12, SuiteParams { samples: Some(1000), nmax: Some(12), ..SuiteParams::with_seed(SEED) })?;
    Ok(suite_outcome(&r, true))
}

fn criterion_9() -> Result<Outcome, Error> {
    let r = suite(SuiteId::S7, SuiteParams { samples: Some(1000), nmax: Some(12), ..SuiteParams::with_seed(SEED) })?;
    Ok(suite_outcome(&r, true))
}

/// Whether some set of `size` vertices is balanced, by brute force.
fn balanced_of_size(g: &Graph, w: &Weighting, size: usize) -> bool {
    let n = g.n();
    (0u32..1 << n).filter(|s| s.count_ones() as usize == size).any(|s| check::is_balanced(g, w, oracle_set(s)))
}

fn criterion_10() -> Result<Outcome, Error> {
    let half = Rational::new(1, 2);
    let mut violations = Vec::new();
    let mut checked = 0;
    for i in 0..500u64 {
        let mut rng = instance_rng(SEED, i);
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.15..0.7);
        let g = erdos_renyi(n, p, &mut rng);
        let tw = oracle_treewidth(&g);
        for _ in 0..20 {
            let w = random_weighting(n, &mut rng);
            checked += 1;
            match smallest_balanced_separator(&g, &w, half, n) {
                Some(s) if s.len() <= tw + 1 && check::is_balanced(&g, &w, s) => {
                    if !s.is_empty() && balanced_of_size(&g, &w, s.len() - 1) {
                        violations.push(format!("instance {i}: separator of size {} is not minimum", s.len()));
                    }
                }
                other => violations.push(format!("instance {i}: separator {other:?} against treewidth {tw}")),
            }
        }
        let k = tw + 1;
        let oracle = |w: &Weighting| smallest_balanced_separator(&g, w, half, k).ok_or(Error::Oracle("none".into()));
        match decomposition_from_separators(&g, oracle, k, half) {
            Ok(td) => match validate_decomposition(&g, &td) {
                Ok(width) if width <= 3 * k + 2 => {}
                other => violations.push(format!("instance {i}: decomposition {other:?} with k = {k}")),
            },
            Err(e) => violations.push(format!("instance {i}: {e}")),
        }
    }
    Ok(if violations.is_empty() {
        outcome(true, format!("500 graphs, {checked} weightings, no violations"))
    } else {
        outcome(false, format!("{} violations, first: {}", violations.len(), violations[0]))
    })
}

fn criterion_11() -> Result<Outcome, Error> {
    let r = suite(SuiteId::S10, SuiteParams::with_seed(SEED))?;
    let failed: Vec<String> = r
        .counterexamples
        .iter()
        .filter_map(|c| c.witness.get("property").and_then(|p| p.as_str()).map(str::to_string))
        .collect();
    let mut tws = Vec::new();
    let mut clean = true;
    for h in 1..=3 {
        let g = pohoata_davies(h)?;
        tws.push(oracle_treewidth(&g));
        clean &= is_t_clean(&g, 3)?.clean;
    }
    let expected: Vec<String> = KNOWN_PD_FAILURES.iter().map(|s| s.to_string()).collect();
    let documented = failed == expected && tws == PD_TREEWIDTH && clean;
    let detail = format!("{}; treewidth {tws:?}; 3-clean {clean}; failing: {}", summary(&r), failed.join(", "));
    if !documented {
        return Err(Error::Hypothesis(format!("outcome differs from the recorded one: {detail}")));
    }
    Ok(outcome(r.ok(), detail))
}

fn criterion_12() -> Result<Outcome, Error> {
    let r = suite(SuiteId::S8, SuiteParams { samples: Some(200), nmax: Some(16), ..SuiteParams::with_seed(SEED) })?;
    Ok(suite_outcome(&r, true))
}

fn main() -> ExitCode {
    let minute = Duration::from_secs(60);
    type Criterion = (&'static str, fn() -> Result<Outcome, Error>, Duration);
    let criteria: [Criterion; 12] = [
        ("obstruction treewidth", criterion_1, minute),
        ("clock-free without star cutset is diamond-free", criterion_2, 15 * minute),
        ("star cutset implies clique cutset", criterion_3, 15 * minute),
        ("short pyramids contain a clock", criterion_4, minute),
        ("three-path configuration exists", criterion_5, 30 * minute),
        ("paw and seagull cutsets", criterion_6, 30 * minute),
        ("worked six-cycle pipeline", criterion_7, minute),
        ("closure, shield and core algebra", criterion_8, 30 * minute),
        ("non-crossing core cover", criterion_9, 30 * minute),
        ("separator and treewidth consistency", criterion_10, 30 * minute),
        ("Pohoata-Davies graphs", criterion_11, 10 * minute),
        ("separator pipeline soundness", criterion_12, 30 * minute),
    ];
    let mut unexpected = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let spent = start.elapsed();
        let o = timed(*limit, result, spent);
        let known_red = i == 10 && !o.pass && !o.detail.starts_with("error") && spent <= *limit;
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if known_red { " (known, outcome matches the recorded counterexamples)" } else { "" };
        println!("criterion {:>2} {tag} [{spent:.1?}] {name}: {}{note}", i + 1, o.detail);
        if !o.pass && !known_red {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
