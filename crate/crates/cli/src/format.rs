//! The plain-text graph format: a header line `n m`, then `m` edge lines
//! `u v` with 0-based ids, then optional label lines `# v : e1,e2,...,er`.

use std::fmt::Write as _;
use std::path::Path;

use monophonic_core::graph::SubsetLabels;
use monophonic_core::{Graph, Labels, SubsetVertex};

use crate::error::{CliError, Result};

fn numbers<const K: usize>(line: &str, lineno: usize, what: &str) -> Result<[usize; K]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != K {
        return Err(CliError::parse(lineno, format!("expected {what}, found {line:?}")));
    }
    let mut out = [0; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| CliError::parse(lineno, format!("{f:?} is not a nonnegative integer")))?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, header) = lines.next().ok_or_else(|| CliError::parse(1, "empty input"))?;
    let [n, m] = numbers::<2>(header, 1, "header `n m`")?;
    Graph::empty(n).map_err(|e| CliError::parse(1, e.to_string()))?;

    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let Some((lineno, line)) = lines.next() else {
            return Err(CliError::parse(k + 2, format!("header promises {m} edges, found {k}")));
        };
        let [u, v] = numbers::<2>(line, lineno, "edge `u v`")?;
        if u >= n || v >= n {
            return Err(CliError::parse(lineno, format!("edge {u} {v} uses an id outside 0..{n}")));
        }
        if u == v {
            return Err(CliError::parse(lineno, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    let g = Graph::from_edges(n, edges)?;

    let mut labels: Vec<Option<Vec<u8>>> = vec![None; n];
    let mut first_label_line = None;
    for (lineno, line) in lines {
        if line.is_empty() {
            continue;
        }
        let body = line
            .strip_prefix('#')
            .ok_or_else(|| CliError::parse(lineno, format!("unexpected line {line:?} after the edge list")))?;
        let (vertex, elems) =
            body.split_once(':').ok_or_else(|| CliError::parse(lineno, "label line must read `# v : e1,e2,...`"))?;
        let v: usize = vertex
            .trim()
            .parse()
            .map_err(|_| CliError::parse(lineno, format!("{:?} is not a vertex id", vertex.trim())))?;
        if v >= n {
            return Err(CliError::parse(lineno, format!("label for vertex {v} outside 0..{n}")));
        }
        let elems = parse_elements(elems).map_err(|m| CliError::parse(lineno, m))?;
        if labels[v].replace(elems).is_some() {
            return Err(CliError::parse(lineno, format!("vertex {v} is labelled twice")));
        }
        first_label_line.get_or_insert(lineno);
    }

    let Some(first) = first_label_line else {
        return Ok(g);
    };
    let labelled = labels.iter().filter(|l| l.is_some()).count();
    if labelled != n {
        return Err(CliError::parse(first, format!("labels given for {labelled} of {n} vertices")));
    }
    let ground = labels.iter().flatten().flatten().copied().max().unwrap_or(0) as usize;
    let sets = labels
        .into_iter()
        .map(|l| SubsetVertex::from_elements(&l.expect("all labelled"), ground))
        .collect::<monophonic_core::Result<Vec<_>>>()
        .map_err(|e| CliError::parse(first, e.to_string()))?;
    let labels = SubsetLabels::new(sets).map_err(|e| CliError::parse(first, e.to_string()))?;
    Ok(g.with_labels(Labels::Subsets(labels))?)
}

/// Comma-separated ground elements, e.g. `1,2,3`.
pub fn parse_elements(text: &str) -> std::result::Result<Vec<u8>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|e| {
            let e = e.trim();
            e.parse::<u8>()
                .ok()
                .filter(|&x| (1..=64).contains(&x))
                .ok_or_else(|| format!("{e:?} is not a ground element in 1..=64"))
        })
        .collect()
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_graph(&text)
}

/// Subset labels are written out; pair labels of products are not part of
/// the format and are dropped.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(labels) = g.subset_labels() {
        for (v, s) in labels.as_slice().iter().enumerate() {
            let _ = writeln!(out, "# {v} : {}", s.set());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use monophonic_core::generators::{hamming, kneser};

    #[test]
    fn k2() {
        let g = parse_graph("2 1\n0 1\n").unwrap();
        assert_eq!((g.order(), g.size()), (2, 1));
    }

    #[test]
    fn kneser_round_trip() {
        let g = kneser(5, 2).unwrap();
        let text = emit_graph(&g);
        assert!(text.starts_with("10 15\n"));
        assert!(text.contains("# 0 : 1,2\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn products_lose_pair_labels() {
        let q = hamming(&[2, 2]).unwrap();
        assert_eq!(parse_graph(&emit_graph(&q)).unwrap(), q.without_labels());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_graph("3 3\n0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(g.size(), 2);
    }

    fn line_of(text: &str) -> usize {
        match parse_graph(text) {
            Err(CliError::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("3 1\n0 3\n"), 2);
        assert_eq!(line_of("3 2\n0 1\n1 1\n"), 3);
        assert_eq!(line_of("3\n"), 1);
        assert_eq!(line_of("3 2\n0 1\n"), 3);
        assert_eq!(line_of("2 1\n0 1\nstray\n"), 3);
        assert_eq!(line_of("2 1\n0 x\n"), 2);
        assert_eq!(line_of("2 1\n0 1\n# 0 : 1\n"), 3);
        assert_eq!(line_of("2 1\n0 1\n# 0 : 1\n# 0 : 2\n"), 4);
        assert_eq!(line_of(""), 1);
    }
}
