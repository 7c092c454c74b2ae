//! Named graph families and a seeded random generator.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("family `{family}`: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

/// SplitMix64 (Steele, Lea & Flood), used so that random corpora are
/// reproducible bit for bit from a 64-bit seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// A named graph family with its parameters.
///
/// Labelings are fixed: hubs and centers come first, then the remaining
/// vertices in order.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `K_{1,n-1}`, hub 0.
    Star(usize),
    /// Hub 0 joined to the cycle `1..n`.
    Wheel(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// Triangle `0,1,2` with a pendant vertex 3 attached to 0.
    K13Plus,
    /// d-regular circulant on n vertices.
    Circulant { n: usize, degree: usize },
    /// Two copies of `K_{1,k}` whose centers (0 and 1) are joined.
    DoubleStar(usize),
    /// Erdős–Rényi `G(n, p)` driven by [`SplitMix64`].
    Random { n: usize, p: f64, seed: u64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Star(_) => "star",
            Family::Wheel(_) => "wheel",
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Empty(_) => "empty",
            Family::CompleteBipartite(..) => "kbip",
            Family::CompleteMultipartite(_) => "multipartite",
            Family::K13Plus => "k13plus",
            Family::Circulant { .. } => "circulant",
            Family::DoubleStar(_) => "double-star",
            Family::Random { .. } => "random",
        }
    }

    /// Parses `name` and its positional parameters, e.g. `("kbip", ["3", "4"])`.
    pub fn parse(name: &str, params: &[&str]) -> Result<Self, FamilyError> {
        fn int(family: &'static str, s: &str) -> Result<usize, FamilyError> {
            s.parse()
                .map_err(|_| invalid(family, format!("`{s}` is not a non-negative integer")))
        }
        fn arity(family: &'static str, params: &[&str], k: usize) -> Result<(), FamilyError> {
            if params.len() != k {
                return Err(invalid(
                    family,
                    format!("expected {k} parameter(s), got {}", params.len()),
                ));
            }
            Ok(())
        }
        macro_rules! one {
            ($tag:literal, $ctor:expr) => {{
                arity($tag, params, 1)?;
                $ctor(int($tag, params[0])?)
            }};
        }
        let family = match name {
            "star" => one!("star", Family::Star),
            "wheel" => one!("wheel", Family::Wheel),
            "path" => one!("path", Family::Path),
            "cycle" => one!("cycle", Family::Cycle),
            "complete" => one!("complete", Family::Complete),
            "empty" => one!("empty", Family::Empty),
            "double-star" => one!("double-star", Family::DoubleStar),
            "kbip" | "complete-bipartite" => {
                arity("kbip", params, 2)?;
                Family::CompleteBipartite(int("kbip", params[0])?, int("kbip", params[1])?)
            }
            "multipartite" | "complete-multipartite" => Family::CompleteMultipartite(
                params
                    .iter()
                    .map(|s| int("multipartite", s))
                    .collect::<Result<_, _>>()?,
            ),
            "k13plus" => {
                arity("k13plus", params, 0)?;
                Family::K13Plus
            }
            "circulant" | "regular" => {
                arity("circulant", params, 2)?;
                Family::Circulant {
                    n: int("circulant", params[0])?,
                    degree: int("circulant", params[1])?,
                }
            }
            "random" => {
                arity("random", params, 3)?;
                let p: f64 = params[1]
                    .parse()
                    .map_err(|_| invalid("random", format!("`{}` is not a probability", params[1])))?;
                let seed = params[2]
                    .parse()
                    .map_err(|_| invalid("random", format!("`{}` is not a u64 seed", params[2])))?;
                Family::Random {
                    n: int("random", params[0])?,
                    p,
                    seed,
                }
            }
            other => return Err(FamilyError::Unknown(other.to_string())),
        };
        Ok(family)
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        let g = match *self {
            Family::Star(n) => {
                if n < 2 {
                    return Err(invalid("star", "needs n >= 2"));
                }
                Graph::new(n, (1..n).map(|v| (0, v)))?
            }
            Family::Wheel(n) => {
                if n < 4 {
                    return Err(invalid("wheel", "needs n >= 4"));
                }
                let rim = n - 1;
                let spokes = (1..n).map(|v| (0, v));
                let cycle = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
                Graph::new(n, spokes.chain(cycle))?
            }
            Family::Path(n) => {
                if n < 1 {
                    return Err(invalid("path", "needs n >= 1"));
                }
                Graph::new(n, (1..n).map(|v| (v - 1, v)))?
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(invalid("cycle", "needs n >= 3"));
                }
                Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))?
            }
            Family::Complete(n) => {
                if n < 1 {
                    return Err(invalid("complete", "needs n >= 1"));
                }
                Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?
            }
            Family::Empty(n) => {
                if n < 1 {
                    return Err(invalid("empty", "needs n >= 1"));
                }
                Graph::empty(n)?
            }
            Family::CompleteBipartite(s, t) => {
                if s < 1 || t < 1 {
                    return Err(invalid("kbip", "needs s, t >= 1"));
                }
                return multipartite(&[s, t]);
            }
            Family::CompleteMultipartite(ref parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(invalid("multipartite", "needs at least one part, all non-empty"));
                }
                return multipartite(parts);
            }
            Family::K13Plus => Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)])?,
            Family::Circulant { n, degree } => {
                if degree >= n || (n * degree) % 2 != 0 {
                    return Err(invalid(
                        "circulant",
                        "needs degree < n and n * degree even",
                    ));
                }
                let mut edges = Vec::new();
                for v in 0..n {
                    for offset in 1..=degree / 2 {
                        edges.push((v, (v + offset) % n));
                    }
                    if degree % 2 == 1 && v < n / 2 {
                        edges.push((v, v + n / 2));
                    }
                }
                Graph::new(n, edges)?
            }
            Family::DoubleStar(k) => {
                let n = 2 * k + 2;
                let left = (0..k).map(|i| (0, 2 + i));
                let right = (0..k).map(|i| (1, 2 + k + i));
                Graph::new(n, std::iter::once((0, 1)).chain(left).chain(right))?
            }
            Family::Random { n, p, seed } => {
                if n < 1 {
                    return Err(invalid("random", "needs n >= 1"));
                }
                if !(0.0..=1.0).contains(&p) {
                    return Err(invalid("random", "p must lie in [0, 1]"));
                }
                random_graph(n, p, &mut SplitMix64::new(seed))?
            }
        };
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Star(n)
            | Family::Wheel(n)
            | Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Empty(n)
            | Family::DoubleStar(n) => write!(f, "{}:{n}", self.name()),
            Family::CompleteBipartite(s, t) => write!(f, "kbip:{s}:{t}"),
            Family::CompleteMultipartite(parts) => {
                write!(f, "multipartite")?;
                for p in parts {
                    write!(f, ":{p}")?;
                }
                Ok(())
            }
            Family::K13Plus => write!(f, "k13plus"),
            Family::Circulant { n, degree } => write!(f, "circulant:{n}:{degree}"),
            Family::Random { n, p, seed } => write!(f, "random:{n}:{p}:{seed}"),
        }
    }
}

/// Accepts the colon form produced by `Display`, e.g. `kbip:3:4`.
impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        Family::parse(name, &params)
    }
}

/// Complete multipartite graph; part `i` occupies a contiguous vertex block.
pub fn multipartite(parts: &[usize]) -> Result<Graph, FamilyError> {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let edges = (0..n).flat_map(|u| {
        let part_of = &part_of;
        (u + 1..n).filter(move |&v| part_of[u] != part_of[v]).map(move |v| (u, v))
    });
    Ok(Graph::new(n, edges.collect::<Vec<_>>())?)
}

/// `G(n, p)`: pairs `(i, j)`, `i < j`, are visited in lexicographic order and
/// each is kept when the next uniform draw is below `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(f: Family) -> Vec<usize> {
        f.build().unwrap().degree_sequence().as_slice().to_vec()
    }

    #[test]
    fn named_degree_sequences() {
        assert_eq!(degrees(Family::Star(5)), vec![4, 1, 1, 1, 1]);
        assert_eq!(degrees(Family::Wheel(5)), vec![4, 3, 3, 3, 3]);
        assert_eq!(degrees(Family::K13Plus), vec![3, 2, 2, 1]);
        assert_eq!(degrees(Family::DoubleStar(2)), vec![3, 3, 1, 1, 1, 1]);
        let mut expected = vec![9; 7];
        expected.extend(vec![7; 9]);
        assert_eq!(degrees(Family::CompleteBipartite(7, 9)), expected);
        assert_eq!(degrees(Family::Circulant { n: 8, degree: 3 }), vec![3; 8]);
        assert_eq!(degrees(Family::Circulant { n: 7, degree: 4 }), vec![4; 7]);
    }

    #[test]
    fn k13plus_has_four_edges() {
        let g = Family::K13Plus.build().unwrap();
        assert_eq!((g.order(), g.size()), (4, 4));
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(Family::Wheel(3).build().is_err());
        assert!(Family::CompleteBipartite(0, 3).build().is_err());
        assert!(Family::Circulant { n: 5, degree: 3 }.build().is_err());
        assert!(matches!(
            Family::parse("petersen", &[]),
            Err(FamilyError::Unknown(_))
        ));
        assert!(Family::parse("star", &["x"]).is_err());
        assert!(Family::parse("kbip", &["3"]).is_err());
    }

    #[test]
    fn display_round_trips_through_from_str() {
        for f in [
            Family::Star(10),
            Family::CompleteBipartite(3, 4),
            Family::CompleteMultipartite(vec![3, 3, 4]),
            Family::K13Plus,
            Family::Circulant { n: 6, degree: 3 },
            Family::Random {
                n: 12,
                p: 0.5,
                seed: 42,
            },
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0, from the reference C implementation.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn random_is_deterministic() {
        let f = Family::Random {
            n: 12,
            p: 0.5,
            seed: 42,
        };
        assert_eq!(f.build().unwrap(), f.build().unwrap());
        let other = Family::Random {
            n: 12,
            p: 0.5,
            seed: 43,
        };
        assert_ne!(f.build().unwrap(), other.build().unwrap());
    }
}
