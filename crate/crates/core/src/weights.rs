//! Exact rational vertex weightings summing to one.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{components, Graph, VertexSet};

pub type Rational = Ratio<u64>;

/// Vertex weights stored as numerators over one common denominator, so set
/// weights are integer sums and comparisons are exact.
#[derive(Clone, Debug)]
pub struct Weighting {
    num: Vec<u64>,
    den: u64,
}

impl PartialEq for Weighting {
    fn eq(&self, other: &Self) -> bool {
        self.num.len() == other.num.len()
            && self
                .num
                .iter()
                .zip(&other.num)
                .all(|(&a, &b)| a as u128 * other.den as u128 == b as u128 * self.den as u128)
    }
}

impl Eq for Weighting {}

impl Weighting {
    /// Weights from per-vertex rationals; they must be non-negative and sum
    /// to exactly 1.
    pub fn from_ratios(values: &[Rational]) -> Result<Self> {
        let mut den = 1u64;
        for r in values {
            den = den.lcm(r.denom());
            if den > u64::MAX >> 8 {
                return Err(Error::InvalidWeighting("common denominator too large".into()));
            }
        }
        let num: Vec<u64> = values.iter().map(|r| r.numer() * (den / r.denom())).collect();
        let total: u128 = num.iter().map(|&x| x as u128).sum();
        if total != den as u128 {
            return Err(Error::InvalidWeighting(format!(
                "weights sum to {}/{den}, not 1",
                total
            )));
        }
        Ok(Weighting { num, den })
    }

    /// Integer weights normalised by their sum.
    pub fn from_integers(values: &[u64]) -> Result<Self> {
        let den: u64 = values.iter().sum();
        if den == 0 {
            return Err(Error::InvalidWeighting("all weights are zero".into()));
        }
        Ok(Weighting { num: values.to_vec(), den })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::uniform_on(n, VertexSet::full(n))
    }

    /// Uniform on `support`, zero elsewhere.
    pub fn uniform_on(n: usize, support: VertexSet) -> Result<Self> {
        let num = (0..n).map(|v| support.contains(v) as u64).collect::<Vec<_>>();
        Self::from_integers(&num)
    }

    /// All weight on `v`.
    pub fn point(n: usize, v: usize) -> Result<Self> {
        Self::uniform_on(n, VertexSet::singleton(v))
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn get(&self, v: usize) -> Rational {
        Ratio::new(self.num[v], self.den)
    }

    pub fn weight(&self, x: VertexSet) -> Rational {
        Ratio::new(self.raw(x), self.den)
    }

    fn raw(&self, x: VertexSet) -> u64 {
        x.iter().filter(|&v| v < self.num.len()).map(|v| self.num[v]).sum()
    }

    /// `w(x) <= c`, exactly.
    pub fn at_most(&self, x: VertexSet, c: Rational) -> bool {
        (self.raw(x) as u128) * (*c.denom() as u128) <= (*c.numer() as u128) * (self.den as u128)
    }

    /// `w(x) > 1/2`.
    pub fn is_heavy(&self, x: VertexSet) -> bool {
        2 * (self.raw(x) as u128) > self.den as u128
    }

    /// Per-vertex values.
    pub fn values(&self) -> Vec<Rational> {
        (0..self.num.len()).map(|v| self.get(v)).collect()
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.num.len() != g.n() {
            return Err(Error::InvalidWeighting(format!(
                "weighting covers {} vertices, graph has {}",
                self.num.len(),
                g.n()
            )));
        }
        Ok(())
    }

    /// Parses `{"vertex": "p/q", ...}`; absent vertices weigh zero.
    pub fn from_json(text: &str, n: usize) -> Result<Self> {
        let map: BTreeMap<String, String> = serde_json::from_str(text)?;
        let mut values = vec![Rational::from_integer(0); n];
        for (k, v) in map {
            let vertex: usize = k
                .parse()
                .map_err(|_| Error::InvalidWeighting(format!("bad vertex key `{k}`")))?;
            if vertex >= n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            values[vertex] = parse_ratio(&v)?;
        }
        Self::from_ratios(&values)
    }

    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        (0..self.num.len()).map(|v| (v.to_string(), self.get(v).to_string())).collect()
    }
}

/// Parses `p/q` or an integer.
pub fn parse_ratio(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidWeighting(format!("bad rational `{s}`"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1u64),
    };
    if q == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(p, q))
}

/// Serialises a rational as `"p/q"` (or `"p"` for integers).
pub fn ratio_string(r: &Rational) -> String {
    r.to_string()
}

impl Serialize for Weighting {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_map().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weighting {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
        let n = map.keys().filter_map(|k| k.parse::<usize>().ok()).max().map_or(0, |m| m + 1);
        let text = serde_json::to_string(&map).map_err(serde::de::Error::custom)?;
        Weighting::from_json(&text, n).map_err(serde::de::Error::custom)
    }
}

/// Every component of `G \ x` weighs at most `c`.
pub fn is_balanced_separator(g: &Graph, w: &Weighting, x: VertexSet, c: Rational) -> bool {
    components(g, g.vertices() - x).into_iter().all(|d| w.at_most(d, c))
}

/// A smallest `(w, c)`-balanced separator with at most `max_size` vertices;
/// among equal sizes the lexicographically first.
pub fn smallest_balanced_separator(g: &Graph, w: &Weighting, c: Rational, max_size: usize) -> Option<VertexSet> {
    let verts = g.vertices().to_vec();
    (0..=max_size.min(verts.len())).find_map(|size| {
        let mut found = None;
        for_each_subset(&verts, size, &mut |x| {
            if is_balanced_separator(g, w, x, c) {
                found = Some(x);
                true
            } else {
                false
            }
        });
        found
    })
}

/// Calls `f` on every `size`-subset of `items` in lexicographic order until
/// it returns true.
pub(crate) fn for_each_subset(items: &[usize], size: usize, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
    fn rec(items: &[usize], size: usize, cur: VertexSet, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if size == 0 {
            return f(cur);
        }
        for i in 0..=items.len().saturating_sub(size) {
            if items.len() < size {
                break;
            }
            let mut next = cur;
            next.insert(items[i]);
            if rec(&items[i + 1..], size - 1, next, f) {
                return true;
            }
        }
        false
    }
    rec(items, size, VertexSet::new(), f)
}
