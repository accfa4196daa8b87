//! Line-oriented text formats for posets and bipartite graphs.
//!
//! ```text
//! poset v1 n=3
//! note gen chain n=3
//! elem 0 a
//! elem 1 b
//! elem 2 c
//! cover 0 1
//! cover 1 2
//! weight 2 5
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Missing weights
//! default to 1; a document either carries no weights or all of them.

use std::fmt::Write as _;

use ledlab::gadget::BipartiteGraph;
use ledlab::{Poset, WeightedPoset64};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetDocument {
    pub labels: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub weights: Option<Vec<u64>>,
    pub note: Option<String>,
}

fn malformed(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Malformed(format!("line {line}: {msg}"))
}

fn parse_index(tok: Option<&str>, line: usize, what: &str) -> Result<usize, CliError> {
    tok.ok_or_else(|| malformed(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| malformed(line, format!("{what} is not a non-negative integer")))
}

fn header_value(tok: Option<&str>, key: &str, line: usize) -> Result<usize, CliError> {
    let tok = tok.ok_or_else(|| malformed(line, format!("header lacks {key}=")))?;
    let v = tok
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| malformed(line, format!("expected {key}=<count>, found {tok:?}")))?;
    v.parse().map_err(|_| malformed(line, format!("{key} is not a count")))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

impl PosetDocument {
    pub fn from_poset(p: &Poset, note: Option<String>) -> Self {
        PosetDocument {
            labels: p.labels().to_vec(),
            covers: p.covers(),
            weights: None,
            note,
        }
    }

    pub fn from_weighted(wp: &WeightedPoset64, note: Option<String>) -> Self {
        let mut doc = Self::from_poset(wp.poset(), note);
        if !wp.is_unit() {
            doc.weights = Some(wp.weights().to_vec());
        }
        doc
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn to_poset(&self) -> Result<Poset, CliError> {
        let p = Poset::from_cover_relations(self.len(), &self.covers).map_err(|e| CliError::Malformed(e.to_string()))?;
        p.with_labels(self.labels.iter().cloned()).map_err(|e| CliError::Malformed(e.to_string()))
    }

    pub fn to_weighted(&self) -> Result<WeightedPoset64, CliError> {
        let p = self.to_poset()?;
        match &self.weights {
            Some(w) => WeightedPoset64::new(p, w.clone()).map_err(|e| CliError::Malformed(e.to_string())),
            None => Ok(WeightedPoset64::unit(p)),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = content_lines(text);
        let (hl, header) = lines.next().ok_or_else(|| CliError::Malformed("empty document".into()))?;
        let mut toks = header.split_whitespace();
        if toks.next() != Some("poset") || toks.next() != Some("v1") {
            return Err(malformed(hl, "expected header \"poset v1 n=<count>\""));
        }
        let n = header_value(toks.next(), "n", hl)?;
        if toks.next().is_some() {
            return Err(malformed(hl, "trailing tokens in header"));
        }
        let mut labels: Vec<Option<String>> = vec![None; n];
        let mut covers = Vec::new();
        let mut weights: Vec<Option<u64>> = vec![None; n];
        let mut note = None;
        for (ln, line) in lines {
            let (kw, rest) = line.split_once(' ').unwrap_or((line, ""));
            match kw {
                "note" => {
                    if note.is_some() {
                        return Err(malformed(ln, "more than one note"));
                    }
                    note = Some(rest.to_string());
                }
                "elem" => {
                    let mut t = rest.split_whitespace();
                    let i = parse_index(t.next(), ln, "element index")?;
                    let label = t.next().ok_or_else(|| malformed(ln, "missing label"))?;
                    if t.next().is_some() {
                        return Err(malformed(ln, "labels may not contain whitespace"));
                    }
                    let slot = labels.get_mut(i).ok_or_else(|| malformed(ln, format!("element {i} out of range")))?;
                    if slot.is_some() {
                        return Err(malformed(ln, format!("element {i} declared twice")));
                    }
                    *slot = Some(label.to_string());
                }
                "cover" => {
                    let mut t = rest.split_whitespace();
                    let a = parse_index(t.next(), ln, "lower element")?;
                    let b = parse_index(t.next(), ln, "upper element")?;
                    if t.next().is_some() {
                        return Err(malformed(ln, "trailing tokens"));
                    }
                    if a >= n || b >= n {
                        return Err(malformed(ln, "cover endpoint out of range"));
                    }
                    covers.push((a, b));
                }
                "weight" => {
                    let mut t = rest.split_whitespace();
                    let i = parse_index(t.next(), ln, "element index")?;
                    let w: u64 = t
                        .next()
                        .ok_or_else(|| malformed(ln, "missing weight"))?
                        .parse()
                        .map_err(|_| malformed(ln, "weight is not a positive integer"))?;
                    if w == 0 {
                        return Err(malformed(ln, "weights must be at least 1"));
                    }
                    let slot = weights.get_mut(i).ok_or_else(|| malformed(ln, format!("element {i} out of range")))?;
                    if slot.replace(w).is_some() {
                        return Err(malformed(ln, format!("weight of {i} given twice")));
                    }
                }
                other => return Err(malformed(ln, format!("unknown keyword {other:?}"))),
            }
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.ok_or_else(|| CliError::Malformed(format!("element {i} has no elem line"))))
            .collect::<Result<Vec<_>, _>>()?;
        let weights = if weights.iter().all(Option::is_none) {
            None
        } else {
            Some(weights.into_iter().map(|w| w.unwrap_or(1)).collect())
        };
        let doc = PosetDocument {
            labels,
            covers,
            weights,
            note,
        };
        doc.to_weighted()?;
        Ok(doc)
    }

    pub fn emit(&self) -> String {
        let mut out = format!("poset v1 n={}\n", self.len());
        if let Some(note) = &self.note {
            writeln!(out, "note {}", note.replace(['\n', '\r'], " ")).unwrap();
        }
        for (i, l) in self.labels.iter().enumerate() {
            writeln!(out, "elem {i} {l}").unwrap();
        }
        for (a, b) in &self.covers {
            writeln!(out, "cover {a} {b}").unwrap();
        }
        if let Some(w) = &self.weights {
            for (i, w) in w.iter().enumerate() {
                writeln!(out, "weight {i} {w}").unwrap();
            }
        }
        out
    }
}

/// `bipartite v1 a=<|A|> b=<|B|>` followed by `edge <i> <j>` lines.
pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, CliError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| CliError::Malformed("empty graph file".into()))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("bipartite") || toks.next() != Some("v1") {
        return Err(malformed(hl, "expected header \"bipartite v1 a=<count> b=<count>\""));
    }
    let a = header_value(toks.next(), "a", hl)?;
    let b = header_value(toks.next(), "b", hl)?;
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let mut t = line.split_whitespace();
        if t.next() != Some("edge") {
            return Err(malformed(ln, "expected \"edge <i> <j>\""));
        }
        let i = parse_index(t.next(), ln, "A-side vertex")?;
        let j = parse_index(t.next(), ln, "B-side vertex")?;
        if t.next().is_some() {
            return Err(malformed(ln, "trailing tokens"));
        }
        edges.push((i, j));
    }
    BipartiteGraph::new(a, b, edges).map_err(|e| CliError::Malformed(e.to_string()))
}

pub fn emit_bipartite(g: &BipartiteGraph) -> String {
    let mut out = format!("bipartite v1 a={} b={}\n", g.a_size(), g.b_size());
    for (i, j) in g.edges() {
        writeln!(out, "edge {i} {j}").unwrap();
    }
    out
}
