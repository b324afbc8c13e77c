//! Text formats: PACE `.gr` graphs and `.td` decompositions, the label
//! sidecar and the landmark atlas. Files use 1-based vertex and bag ids.

use std::fmt::Write as _;

use thiserror::Error;

use crate::decomp::{DecompError, TreeDecomposition};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::zoo::LandmarkAtlas;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; 0 for problems detected at end of input.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("expected {expected} {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("bag {0} defined twice")]
    DuplicateBag(usize),
    #[error("bag {0} never defined")]
    MissingBag(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Non-comment, non-blank lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !(*l == "c" || l.starts_with("c ")))
}

fn parse_num(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| {
        err(
            line,
            ParseErrorKind::Malformed(format!("not a number: {tok:?}")),
        )
    })
}

fn parse_index(line: usize, tok: &str, max: usize) -> Result<usize, ParseError> {
    let index = parse_num(line, tok)?;
    if index == 0 || index > max {
        return Err(err(line, ParseErrorKind::IndexOutOfRange { index, max }));
    }
    Ok(index - 1)
}

pub fn parse_gr(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, l) in content_lines(text) {
        last_line = line;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks[0] == "p" {
            if header.is_some() {
                return Err(err(line, ParseErrorKind::DuplicateHeader));
            }
            if toks.len() != 4 || toks[1] != "tw" {
                return Err(err(line, ParseErrorKind::MalformedHeader(l.to_string())));
            }
            header = Some((parse_num(line, toks[2])?, parse_num(line, toks[3])?));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(err(line, ParseErrorKind::MissingHeader));
        };
        if toks.len() != 2 {
            return Err(err(line, ParseErrorKind::Malformed(l.to_string())));
        }
        let u = parse_index(line, toks[0], n)?;
        let v = parse_index(line, toks[1], n)?;
        if u == v {
            return Err(err(line, GraphError::SelfLoop(u).into()));
        }
        edges.push((u, v));
    }
    let (n, m) = header.ok_or(err(0, ParseErrorKind::MissingHeader))?;
    if edges.len() != m {
        return Err(err(
            last_line,
            ParseErrorKind::CountMismatch {
                what: "edges",
                expected: m,
                found: edges.len(),
            },
        ));
    }
    Graph::new(n, &edges).map_err(|e| err(0, e.into()))
}

pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Reads a label sidecar for a graph on `n` vertices.
pub fn parse_labels(text: &str, n: usize) -> Result<Vec<String>, ParseError> {
    let mut labels: Vec<Option<String>> = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let (id, label) = raw
            .split_once('\t')
            .ok_or_else(|| err(line, ParseErrorKind::Malformed(raw.to_string())))?;
        let v = parse_index(line, id.trim(), n)?;
        if labels[v].replace(label.to_string()).is_some() {
            return Err(err(
                line,
                GraphError::DuplicateLabel(label.to_string()).into(),
            ));
        }
    }
    let found = labels.iter().filter(|l| l.is_some()).count();
    if found != n {
        return Err(err(
            0,
            ParseErrorKind::CountMismatch {
                what: "labels",
                expected: n,
                found,
            },
        ));
    }
    Ok(labels.into_iter().flatten().collect())
}

pub fn write_labels(labels: &[String]) -> String {
    let mut out = String::new();
    for (v, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "{}\t{}", v + 1, l);
    }
    out
}

pub fn parse_td(text: &str) -> Result<TreeDecomposition, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, l) in content_lines(text) {
        last_line = line;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks[0] == "s" {
            if header.is_some() {
                return Err(err(line, ParseErrorKind::DuplicateHeader));
            }
            if toks.len() != 5 || toks[1] != "td" {
                return Err(err(line, ParseErrorKind::MalformedHeader(l.to_string())));
            }
            let h = (
                parse_num(line, toks[2])?,
                parse_num(line, toks[3])?,
                parse_num(line, toks[4])?,
            );
            bags = vec![None; h.0];
            header = Some(h);
            continue;
        }
        let Some((count, _, n)) = header else {
            return Err(err(line, ParseErrorKind::MissingHeader));
        };
        if toks[0] == "b" {
            if toks.len() < 2 {
                return Err(err(line, ParseErrorKind::Malformed(l.to_string())));
            }
            let id = parse_index(line, toks[1], count)?;
            let bag = toks[2..]
                .iter()
                .map(|t| parse_index(line, t, n))
                .collect::<Result<VertexSet, _>>()?;
            if bags[id].replace(bag).is_some() {
                return Err(err(line, ParseErrorKind::DuplicateBag(id + 1)));
            }
            continue;
        }
        if toks.len() != 2 {
            return Err(err(line, ParseErrorKind::Malformed(l.to_string())));
        }
        edges.push((
            parse_index(line, toks[0], count)?,
            parse_index(line, toks[1], count)?,
        ));
    }
    let (count, max_bag, n) = header.ok_or(err(0, ParseErrorKind::MissingHeader))?;
    if edges.len() + 1 != count {
        return Err(err(
            last_line,
            ParseErrorKind::CountMismatch {
                what: "tree edges",
                expected: count.saturating_sub(1),
                found: edges.len(),
            },
        ));
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or(err(0, ParseErrorKind::MissingBag(i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    let td = TreeDecomposition::new(n, bags, &edges).map_err(|e| err(0, e.into()))?;
    if td.max_bag_size() != max_bag {
        return Err(err(
            0,
            ParseErrorKind::CountMismatch {
                what: "as maximum bag size",
                expected: max_bag,
                found: td.max_bag_size(),
            },
        ));
    }
    Ok(td)
}

pub fn write_td(td: &TreeDecomposition) -> String {
    let mut out = format!(
        "s td {} {} {}\n",
        td.node_count(),
        td.max_bag_size(),
        td.vertex_count()
    );
    for (i, bag) in td.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for (s, t) in td.edges() {
        let _ = writeln!(out, "{} {}", s + 1, t + 1);
    }
    out
}

/// Reads an atlas for a graph on `n` vertices.
pub fn parse_atlas(text: &str, n: usize) -> Result<LandmarkAtlas, ParseError> {
    let mut atlas = LandmarkAtlas::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let (name, ids) = raw
            .split_once('\t')
            .ok_or_else(|| err(line, ParseErrorKind::Malformed(raw.to_string())))?;
        let ids = ids
            .split_whitespace()
            .map(|t| parse_index(line, t, n))
            .collect::<Result<Vec<_>, _>>()?;
        if atlas.insert(name, ids).is_some() {
            return Err(err(
                line,
                ParseErrorKind::Malformed(format!("duplicate landmark {name}")),
            ));
        }
    }
    Ok(atlas)
}

pub fn write_atlas(atlas: &LandmarkAtlas) -> String {
    let mut out = String::new();
    for (name, ids) in atlas.iter() {
        out.push_str(name);
        out.push('\t');
        let ids: Vec<String> = ids.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}
