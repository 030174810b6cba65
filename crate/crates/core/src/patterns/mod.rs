//! Detectors for holes, clocks, wheels, the small local patterns and the
//! three-path configurations, plus minimal connectors.

mod connector;
mod detect;
mod holes;
pub(crate) mod paths;
mod threepath;
mod validate;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use connector::{
    is_minimal_connector, minimal_connector, minimal_connector_within, MinimalConnector, MinimalConnectorOutcome,
    NeighbourPattern,
};
pub use detect::{find_pattern, is_chordal, is_claw_center, near_simplicial_witness, DETECT_CAP};
pub use holes::{for_each_hole, holes_enumerate};
pub use threepath::three_path_config_through;
pub use validate::validate_witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    Hole,
    Wheel,
    Clock,
    TClock(usize),
    Diamond,
    Paw,
    Seagull,
    Claw,
    Prism,
    Pyramid,
    ShortPyramid,
    Theta,
    ThreePathConfig,
}

impl PatternKind {
    pub const ALL_NAMES: [&'static str; 13] = [
        "hole",
        "wheel",
        "clock",
        "t-clock",
        "diamond",
        "paw",
        "seagull",
        "claw",
        "prism",
        "pyramid",
        "short-pyramid",
        "theta",
        "three-path-config",
    ];

    pub fn is_three_path_config(self) -> bool {
        matches!(self, PatternKind::Prism | PatternKind::Pyramid | PatternKind::ShortPyramid | PatternKind::Theta)
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatternKind::Hole => "hole",
            PatternKind::Wheel => "wheel",
            PatternKind::Clock => "clock",
            PatternKind::TClock(t) => return write!(f, "t-clock:{t}"),
            PatternKind::Diamond => "diamond",
            PatternKind::Paw => "paw",
            PatternKind::Seagull => "seagull",
            PatternKind::Claw => "claw",
            PatternKind::Prism => "prism",
            PatternKind::Pyramid => "pyramid",
            PatternKind::ShortPyramid => "short-pyramid",
            PatternKind::Theta => "theta",
            PatternKind::ThreePathConfig => "three-path-config",
        };
        f.write_str(s)
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    /// Accepts the names in [`PatternKind::ALL_NAMES`]; a t-clock is written
    /// `t-clock:3`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(t) = s.strip_prefix("t-clock:") {
            let t: usize = t
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad t in `{s}`")))?;
            if t == 0 {
                return Err(Error::InvalidParameter("t-clock needs t >= 1".into()));
            }
            return Ok(PatternKind::TClock(t));
        }
        Ok(match s {
            "hole" => PatternKind::Hole,
            "wheel" => PatternKind::Wheel,
            "clock" => PatternKind::Clock,
            "diamond" => PatternKind::Diamond,
            "paw" => PatternKind::Paw,
            "seagull" => PatternKind::Seagull,
            "claw" => PatternKind::Claw,
            "prism" => PatternKind::Prism,
            "pyramid" => PatternKind::Pyramid,
            "short-pyramid" => PatternKind::ShortPyramid,
            "theta" => PatternKind::Theta,
            "three-path-config" | "3pc" => PatternKind::ThreePathConfig,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown pattern `{s}` (expected one of {}, t-clock as t-clock:T)",
                    Self::ALL_NAMES.join(", ")
                )))
            }
        })
    }
}

impl Serialize for PatternKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternKind {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An occurrence of a pattern with role-labelled vertices.
///
/// Role names per kind:
/// * hole: `cycle` (in cyclic order);
/// * clock, t-clock, wheel: `hole` (cyclic order) and `center`;
/// * diamond: `spine` (the adjacent degree-3 pair) and `tips`;
/// * paw: `a`, `a_prime`, `v`, `u` (triangle `a a' v`, pendant `u` on `v`);
/// * seagull: `v` (center), `a`, `u`;
/// * claw: `center`, `leaves`;
/// * theta: `ends`, with three paths from the first end to the second;
/// * pyramid and short pyramid: `apex`, `base`; path `i` joins the apex to
///   `base[i]`;
/// * prism: `triangle_a`, `triangle_b`; path `i` joins `triangle_a[i]` to
///   `triangle_b[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub roles: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    pub paths: Vec<Vec<usize>>,
}

impl PatternWitness {
    pub fn new(kind: PatternKind) -> Self {
        PatternWitness { kind, roles: BTreeMap::new(), paths: Vec::new() }
    }

    pub fn with_role(mut self, name: &str, vertices: Vec<usize>) -> Self {
        self.roles.insert(name.to_string(), vertices);
        self
    }

    pub fn with_paths(mut self, paths: Vec<Vec<usize>>) -> Self {
        self.paths = paths;
        self
    }

    /// Vertices of a role; empty when the role is absent.
    pub fn role(&self, name: &str) -> &[usize] {
        self.roles.get(name).map_or(&[], |v| v.as_slice())
    }

    /// The single vertex of a one-vertex role.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        match self.role(name) {
            [v] => Some(*v),
            _ => None,
        }
    }

    /// Every vertex mentioned by the witness.
    pub fn vertices(&self) -> VertexSet {
        self.roles.values().chain(self.paths.iter()).flatten().collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        validate_witness(g, self).map_err(|m| Error::InvalidParameter(format!("invalid {} witness: {m}", self.kind)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_round_trip() {
        for name in PatternKind::ALL_NAMES {
            let name = if name == "t-clock" { "t-clock:3" } else { name };
            let k: PatternKind = name.parse().unwrap();
            assert_eq!(k.to_string(), name);
        }
        assert!("t-clock:0".parse::<PatternKind>().is_err());
        assert!("spider".parse::<PatternKind>().is_err());
    }

    #[test]
    fn witness_json_shape() {
        let w = PatternWitness::new(PatternKind::Clock)
            .with_role("hole", vec![0, 1, 2, 3])
            .with_role("center", vec![4]);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"kind":"clock","roles":{"center":[4],"hole":[0,1,2,3]},"paths":[]}"#);
        let back: PatternWitness = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }
}
