//! Witness checking from the definitions alone. Deliberately written with
//! plain adjacency queries so it shares nothing with the searches.

use std::collections::BTreeSet;

use super::{PatternKind, PatternWitness};
use crate::graph::Graph;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn in_range(g: &Graph, vs: &[usize]) -> Check {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(v) => Err(format!("vertex {v} out of range")),
        None => Ok(()),
    }
}

fn distinct(vs: &[usize]) -> Check {
    let set: BTreeSet<_> = vs.iter().collect();
    ensure(set.len() == vs.len(), || format!("{vs:?} repeats a vertex"))
}

fn one(w: &PatternWitness, role: &str) -> Result<usize, String> {
    match w.roles.get(role).map(Vec::as_slice) {
        Some([v]) => Ok(*v),
        _ => Err(format!("role `{role}` must hold exactly one vertex")),
    }
}

fn many<'a>(w: &'a PatternWitness, role: &str, len: usize) -> Result<&'a [usize], String> {
    match w.roles.get(role) {
        Some(v) if v.len() == len => Ok(v),
        _ => Err(format!("role `{role}` must hold exactly {len} vertices")),
    }
}

fn check_hole(g: &Graph, c: &[usize]) -> Check {
    in_range(g, c)?;
    distinct(c)?;
    let k = c.len();
    ensure(k >= 4, || format!("hole has {k} < 4 vertices"))?;
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            ensure(g.adjacent(c[i], c[j]) == consecutive, || {
                format!("cycle {c:?} is not induced at {}-{}", c[i], c[j])
            })?;
        }
    }
    Ok(())
}

/// An induced path, given as a vertex sequence.
fn check_induced_path(g: &Graph, p: &[usize]) -> Check {
    in_range(g, p)?;
    distinct(p)?;
    ensure(!p.is_empty(), || "empty path".into())?;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            ensure(g.adjacent(p[i], p[j]) == (j == i + 1), || {
                format!("{p:?} is not an induced path at {}-{}", p[i], p[j])
            })?;
        }
    }
    Ok(())
}

fn check_clock_like(g: &Graph, w: &PatternWitness) -> Check {
    let c = w.roles.get("hole").ok_or("missing role `hole`")?;
    check_hole(g, c)?;
    let v = one(w, "center")?;
    in_range(g, &[v])?;
    ensure(!c.contains(&v), || "center lies on the hole".into())?;
    let nbrs: Vec<usize> = (0..c.len()).filter(|&i| g.adjacent(v, c[i])).collect();
    match w.kind {
        PatternKind::Wheel => ensure(nbrs.len() >= 3, || "center has fewer than three neighbours".into()),
        PatternKind::Clock | PatternKind::TClock(_) => {
            let need = match w.kind {
                PatternKind::TClock(t) => t.max(2),
                _ => 2,
            };
            let k = c.len();
            let far = nbrs.iter().any(|&i| {
                nbrs.iter().any(|&j| {
                    let d = i.abs_diff(j);
                    d.min(k - d) >= need
                })
            });
            ensure(far, || format!("no two neighbours of the center at distance >= {need} on the hole"))
        }
        _ => unreachable!(),
    }
}

fn check_local(g: &Graph, w: &PatternWitness) -> Check {
    match w.kind {
        PatternKind::Diamond => {
            let s = many(w, "spine", 2)?;
            let t = many(w, "tips", 2)?;
            let all = [s[0], s[1], t[0], t[1]];
            in_range(g, &all)?;
            distinct(&all)?;
            ensure(g.adjacent(s[0], s[1]), || "spine not adjacent".into())?;
            ensure(!g.adjacent(t[0], t[1]), || "tips adjacent".into())?;
            for &x in s {
                for &y in t {
                    ensure(g.adjacent(x, y), || format!("missing edge {x}-{y}"))?;
                }
            }
            Ok(())
        }
        PatternKind::Paw => {
            let (a, a2, v, u) = (one(w, "a")?, one(w, "a_prime")?, one(w, "v")?, one(w, "u")?);
            let all = [a, a2, v, u];
            in_range(g, &all)?;
            distinct(&all)?;
            for (x, y) in [(a, a2), (a, v), (a2, v), (u, v)] {
                ensure(g.adjacent(x, y), || format!("missing edge {x}-{y}"))?;
            }
            for (x, y) in [(a, u), (a2, u)] {
                ensure(!g.adjacent(x, y), || format!("unexpected edge {x}-{y}"))?;
            }
            Ok(())
        }
        PatternKind::Seagull => {
            let (v, a, u) = (one(w, "v")?, one(w, "a")?, one(w, "u")?);
            in_range(g, &[v, a, u])?;
            distinct(&[v, a, u])?;
            ensure(g.adjacent(v, a) && g.adjacent(v, u), || "center misses a leaf".into())?;
            ensure(!g.adjacent(a, u), || "leaves adjacent".into())
        }
        PatternKind::Claw => {
            let c = one(w, "center")?;
            let l = many(w, "leaves", 3)?;
            let all = [c, l[0], l[1], l[2]];
            in_range(g, &all)?;
            distinct(&all)?;
            for i in 0..3 {
                ensure(g.adjacent(c, l[i]), || format!("center misses leaf {}", l[i]))?;
                for j in i + 1..3 {
                    ensure(!g.adjacent(l[i], l[j]), || "leaves adjacent".into())?;
                }
            }
            Ok(())
        }
        _ => unreachable!(),
    }
}

/// The union of the paths must induce exactly the path edges plus the
/// listed extra edges.
fn check_union(g: &Graph, paths: &[Vec<usize>], extra: &[(usize, usize)]) -> Check {
    let mut allowed = BTreeSet::new();
    for p in paths {
        for e in p.windows(2) {
            allowed.insert((e[0].min(e[1]), e[0].max(e[1])));
        }
    }
    for &(x, y) in extra {
        allowed.insert((x.min(y), x.max(y)));
    }
    let verts: BTreeSet<usize> = paths.iter().flatten().copied().collect();
    let verts: Vec<usize> = verts.into_iter().collect();
    for (i, &x) in verts.iter().enumerate() {
        for &y in &verts[i + 1..] {
            ensure(g.adjacent(x, y) == allowed.contains(&(x, y)), || {
                format!("edge status of {x}-{y} breaks the configuration")
            })?;
        }
    }
    Ok(())
}

fn check_three_path(g: &Graph, w: &PatternWitness) -> Check {
    ensure(w.paths.len() == 3, || "expected three paths".into())?;
    for p in &w.paths {
        check_induced_path(g, p)?;
    }
    let p = &w.paths;
    match w.kind {
        PatternKind::Theta => {
            let e = many(w, "ends", 2)?;
            let (a, b) = (e[0], e[1]);
            ensure(a != b && !g.adjacent(a, b), || "theta ends must be distinct and non-adjacent".into())?;
            for q in p {
                ensure(q[0] == a && *q.last().unwrap() == b, || format!("path {q:?} does not join the ends"))?;
            }
            let interiors: Vec<usize> = p.iter().flat_map(|q| q[1..q.len() - 1].iter().copied()).collect();
            distinct(&interiors)?;
            ensure(!interiors.contains(&a) && !interiors.contains(&b), || "ends inside a path".into())?;
            check_union(g, p, &[])
        }
        PatternKind::Pyramid | PatternKind::ShortPyramid => {
            let a = one(w, "apex")?;
            let base = many(w, "base", 3)?;
            distinct(&[a, base[0], base[1], base[2]])?;
            for (i, q) in p.iter().enumerate() {
                ensure(q[0] == a && *q.last().unwrap() == base[i], || format!("path {i} does not join apex to base"))?;
            }
            let rest: Vec<usize> = p.iter().flat_map(|q| q[1..].iter().copied()).collect();
            distinct(&rest)?;
            let short = p.iter().filter(|q| q.len() == 2).count();
            ensure(short <= 1, || "more than one path of length one".into())?;
            if w.kind == PatternKind::ShortPyramid {
                ensure(short == 1, || "no path of length one".into())?;
            }
            let tri = [(base[0], base[1]), (base[0], base[2]), (base[1], base[2])];
            check_union(g, p, &tri)
        }
        PatternKind::Prism => {
            let ta = many(w, "triangle_a", 3)?;
            let tb = many(w, "triangle_b", 3)?;
            for (i, q) in p.iter().enumerate() {
                ensure(q[0] == ta[i] && *q.last().unwrap() == tb[i], || {
                    format!("path {i} does not join the triangles")
                })?;
            }
            let all: Vec<usize> = p.iter().flatten().copied().collect();
            distinct(&all)?;
            let mut tri = Vec::new();
            for t in [ta, tb] {
                tri.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
            }
            check_union(g, p, &tri)
        }
        _ => unreachable!(),
    }
}

/// Checks a witness against the definition of its kind.
pub fn validate_witness(g: &Graph, w: &PatternWitness) -> Result<(), String> {
    match w.kind {
        PatternKind::Hole => {
            let c = w.roles.get("cycle").ok_or("missing role `cycle`")?;
            check_hole(g, c)
        }
        PatternKind::Wheel | PatternKind::Clock | PatternKind::TClock(_) => check_clock_like(g, w),
        PatternKind::Diamond | PatternKind::Paw | PatternKind::Seagull | PatternKind::Claw => check_local(g, w),
        PatternKind::Prism | PatternKind::Pyramid | PatternKind::ShortPyramid | PatternKind::Theta => {
            check_three_path(g, w)
        }
        PatternKind::ThreePathConfig => Err("witnesses carry a concrete configuration kind".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn accepts_and_rejects() {
        let g = named::theta([2, 2, 3]);
        let ok = PatternWitness::new(PatternKind::Theta)
            .with_role("ends", vec![0, 1])
            .with_paths(vec![vec![0, 2, 1], vec![0, 3, 1], vec![0, 4, 5, 1]]);
        assert!(validate_witness(&g, &ok).is_ok());
        let mut bad = ok.clone();
        bad.paths[2] = vec![0, 2, 1];
        assert!(validate_witness(&g, &bad).is_err());

        let c5 = named::cycle(5);
        let hole = PatternWitness::new(PatternKind::Hole).with_role("cycle", vec![0, 1, 2, 3, 4]);
        assert!(validate_witness(&c5, &hole).is_ok());
        let wrong = PatternWitness::new(PatternKind::Hole).with_role("cycle", vec![0, 2, 1, 3, 4]);
        assert!(validate_witness(&c5, &wrong).is_err());
    }

    #[test]
    fn t_clock_distance() {
        // C6 plus a vertex adjacent to 0 and 2 (distance 2) only
        let mut g = named::cycle(6).disjoint_union(&Graph::empty(1)).unwrap();
        g.add_edge(6, 0);
        g.add_edge(6, 2);
        let w = |k| {
            PatternWitness::new(k).with_role("hole", vec![0, 1, 2, 3, 4, 5]).with_role("center", vec![6])
        };
        assert!(validate_witness(&g, &w(PatternKind::Clock)).is_ok());
        assert!(validate_witness(&g, &w(PatternKind::TClock(2))).is_ok());
        assert!(validate_witness(&g, &w(PatternKind::TClock(3))).is_err());
        assert!(validate_witness(&g, &w(PatternKind::Wheel)).is_err());
    }
}
