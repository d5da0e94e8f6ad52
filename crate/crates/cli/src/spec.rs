//! Graph descriptors such as `kneser:7,3` or `product:cycle:5*complete:2`,
//! and vertex references resolved against a built graph.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use monophonic_core::generators::{
    basic_graph, cartesian_product, generalized_johnson, hamming, johnson, kneser, BasicKind,
};
use monophonic_core::{Graph, Labels, SubsetVertex, VertexId};

use crate::error::{CliError, Result};
use crate::format::{parse_elements, read_graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Kneser { n: usize, r: usize },
    Johnson { n: usize, r: usize },
    GeneralizedJohnson { n: usize, r: usize, i: usize },
    Hamming(Vec<usize>),
    Complete(usize),
    Path(usize),
    Cycle(usize),
    CompleteMinusMatching { n: usize, m: usize },
    Product(Box<GraphSpec>, Box<GraphSpec>),
    File(PathBuf),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl GraphSpec {
    /// A family name with its numeric parameters, e.g. `("kneser", [7, 3])`.
    pub fn from_family(family: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(usage(format!("{family} takes {k} parameter(s), got {}", params.len())))
            }
        };
        Ok(match family {
            "kneser" => {
                want(2)?;
                GraphSpec::Kneser { n: params[0], r: params[1] }
            }
            "johnson" => {
                want(2)?;
                GraphSpec::Johnson { n: params[0], r: params[1] }
            }
            "generalized-johnson" | "gj" => {
                want(3)?;
                GraphSpec::GeneralizedJohnson { n: params[0], r: params[1], i: params[2] }
            }
            "hamming" => {
                if params.is_empty() {
                    return Err(usage("hamming needs at least one dimension"));
                }
                GraphSpec::Hamming(params.to_vec())
            }
            "complete" => {
                want(1)?;
                GraphSpec::Complete(params[0])
            }
            "path" => {
                want(1)?;
                GraphSpec::Path(params[0])
            }
            "cycle" => {
                want(1)?;
                GraphSpec::Cycle(params[0])
            }
            "complete-minus-matching" | "kmm" => {
                want(2)?;
                GraphSpec::CompleteMinusMatching { n: params[0], m: params[1] }
            }
            other => return Err(usage(format!("unknown graph family {other:?}"))),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        let basic = |k, n, m| basic_graph(k, n, m).map_err(CliError::from);
        match self {
            GraphSpec::Kneser { n, r } => Ok(kneser(*n, *r)?),
            GraphSpec::Johnson { n, r } => Ok(johnson(*n, *r)?),
            GraphSpec::GeneralizedJohnson { n, r, i } => Ok(generalized_johnson(*n, *r, *i)?),
            GraphSpec::Hamming(dims) => Ok(hamming(dims)?),
            GraphSpec::Complete(n) => basic(BasicKind::Complete, *n, 0),
            GraphSpec::Path(n) => basic(BasicKind::Path, *n, 0),
            GraphSpec::Cycle(n) => basic(BasicKind::Cycle, *n, 0),
            GraphSpec::CompleteMinusMatching { n, m } => basic(BasicKind::CompleteMinusMatching, *n, *m),
            GraphSpec::Product(g, h) => Ok(cartesian_product(&g.build()?, &h.build()?)?),
            GraphSpec::File(path) => read_graph(path),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        match family {
            "product" => {
                let (g, h) =
                    rest.rsplit_once('*').ok_or_else(|| usage(format!("product spec {s:?} must read product:G*H")))?;
                Ok(GraphSpec::Product(Box::new(g.parse()?), Box::new(h.parse()?)))
            }
            "file" if !rest.is_empty() => Ok(GraphSpec::File(PathBuf::from(rest))),
            _ => {
                let params = rest
                    .split(',')
                    .filter(|p| !p.trim().is_empty())
                    .map(|p| p.trim().parse::<usize>().map_err(|_| usage(format!("bad parameter {p:?} in {s:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                GraphSpec::from_family(family, &params)
            }
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Kneser { n, r } => write!(f, "kneser:{n},{r}"),
            GraphSpec::Johnson { n, r } => write!(f, "johnson:{n},{r}"),
            GraphSpec::GeneralizedJohnson { n, r, i } => write!(f, "generalized-johnson:{n},{r},{i}"),
            GraphSpec::Hamming(dims) => {
                let dims: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                write!(f, "hamming:{}", dims.join(","))
            }
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::CompleteMinusMatching { n, m } => write!(f, "complete-minus-matching:{n},{m}"),
            GraphSpec::Product(g, h) => write!(f, "product:{g}*{h}"),
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// Resolves `text` to a vertex: a subset such as `1,2,3` on subset-labelled
/// graphs, a pair `g,h` on products, a plain id otherwise.
pub fn parse_vertex(g: &Graph, text: &str) -> Result<VertexId> {
    let text = text.trim().trim_start_matches(['{', '(']).trim_end_matches(['}', ')']);
    match g.labels() {
        Some(Labels::Subsets(labels)) => {
            let ground = labels.as_slice().first().map_or(0, |s| s.ground());
            let elems = parse_elements(text).map_err(usage)?;
            let v = SubsetVertex::from_elements(&elems, ground)?;
            labels.vertex_of(v).ok_or_else(|| usage(format!("{v} is not a vertex of this graph")))
        }
        Some(Labels::Pairs(pairs)) => {
            let parts: Vec<usize> = text
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| usage(format!("{text:?} is not a vertex pair g,h"))))
                .collect::<Result<_>>()?;
            let [a, b] = parts[..] else {
                return Err(usage(format!("{text:?} is not a vertex pair g,h")));
            };
            pairs
                .iter()
                .position(|&p| p == (a, b))
                .ok_or_else(|| usage(format!("({a},{b}) is not a vertex of this product")))
        }
        None => {
            let v: VertexId = text.parse().map_err(|_| usage(format!("{text:?} is not a vertex id")))?;
            g.check_vertex(v)?;
            Ok(v)
        }
    }
}

/// The printed name of a vertex: its subset, its pair, or its id.
pub fn vertex_label(g: &Graph, v: VertexId) -> String {
    match g.labels() {
        Some(Labels::Subsets(labels)) => labels.get(v).map_or_else(|| v.to_string(), |s| s.to_string()),
        Some(Labels::Pairs(pairs)) => pairs.get(v).map_or_else(|| v.to_string(), |(a, b)| format!("({a},{b})")),
        None => v.to_string(),
    }
}

pub fn labels_of(g: &Graph, vs: impl IntoIterator<Item = VertexId>) -> Vec<String> {
    vs.into_iter().map(|v| vertex_label(g, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_round_trip_through_display() {
        for s in [
            "kneser:7,3",
            "johnson:6,3",
            "generalized-johnson:6,4,2",
            "hamming:2,2,2",
            "complete:3",
            "path:3",
            "cycle:5",
            "complete-minus-matching:6,1",
            "product:cycle:5*complete:2",
            "product:product:path:3*path:3*complete:2",
        ] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("gj:6,4,2".parse::<GraphSpec>().unwrap().to_string(), "generalized-johnson:6,4,2");
        assert!("kneser:7".parse::<GraphSpec>().is_err());
        assert!("petersen".parse::<GraphSpec>().is_err());
        assert!("kneser:7,x".parse::<GraphSpec>().is_err());
    }

    #[test]
    fn vertex_references() {
        let k = GraphSpec::Kneser { n: 5, r: 2 }.build().unwrap();
        let v = parse_vertex(&k, "2,3").unwrap();
        assert_eq!(vertex_label(&k, v), "{2,3}");
        assert_eq!(parse_vertex(&k, "{3,2}").unwrap(), v);
        assert!(parse_vertex(&k, "1,2,3").is_err());

        let p: GraphSpec = "product:complete:3*complete:2".parse().unwrap();
        let p = p.build().unwrap();
        assert_eq!(parse_vertex(&p, "2,1").unwrap(), 5);
        assert_eq!(vertex_label(&p, 5), "(2,1)");

        let c = GraphSpec::Cycle(5).build().unwrap();
        assert_eq!(parse_vertex(&c, "4").unwrap(), 4);
        assert!(parse_vertex(&c, "5").is_err());
    }
}
