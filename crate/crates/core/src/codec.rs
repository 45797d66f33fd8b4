//! Graph serialization: graph6, a JSON schema with labels, and a DOT emitter.
//!
//! graph6 is the compact ASCII interchange format (bias-63 six-bit groups,
//! upper triangle in column order). The JSON form is
//! `{"n": …, "edges": [[u,v], …], "labels": {"0": "v", …}}` with edges in
//! canonical `u < v` lexicographic order; `labels`, when present, covers
//! exactly the vertex range. DOT is emit-only, for rendering figures.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: byte {byte:#04x} at offset {index} outside the 63..=126 range")]
    Graph6InvalidByte { index: usize, byte: u8 },
    #[error("graph6: input ends before the declared {n}-vertex adjacency data")]
    Graph6Truncated { n: usize },
    #[error("graph6: {extra} unexpected trailing bytes")]
    Graph6TrailingData { extra: usize },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("json: labels must cover exactly the vertex range 0..{n}; {reason}")]
    JsonLabels { n: usize, reason: String },
    #[error("json: coloring must map a contiguous vertex range to colors; {reason}")]
    ColoringJson { reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

// ----- graph6 ----------------------------------------------------------------

/// Encode in graph6 (no `>>graph6<<` header). Labels are not representable
/// and are dropped.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut groups = vec![0u8; total_bits.div_ceil(6)];
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.adjacent(i, j) {
                groups[pos / 6] |= 1 << (5 - pos % 6);
            }
            pos += 1;
        }
    }
    bytes.extend(groups.into_iter().map(|b| b + 63));
    String::from_utf8(bytes).expect("graph6 bytes are ASCII")
}

/// Decode one graph6 record. An optional `>>graph6<<` header and surrounding
/// whitespace are tolerated; anything else trailing is an error.
pub fn from_graph6(text: &str) -> Result<Graph, CodecError> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(GRAPH6_HEADER) {
        s = rest.trim_start();
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::Graph6Empty);
    }
    let check = |index: usize| -> Result<u64, CodecError> {
        let byte = *bytes.get(index).ok_or(CodecError::Graph6Truncated { n: 0 })?;
        if !(63..=126).contains(&byte) {
            return Err(CodecError::Graph6InvalidByte { index, byte });
        }
        Ok((byte - 63) as u64)
    };
    let (n, mut pos): (usize, usize) = if bytes[0] != 126 {
        (check(0)? as usize, 1)
    } else if bytes.len() > 1 && bytes[1] != 126 {
        let mut n = 0u64;
        for k in 1..4 {
            n = n << 6 | check(k)?;
        }
        (n as usize, 4)
    } else {
        let mut n = 0u64;
        for k in 2..8 {
            n = n << 6 | check(k)?;
        }
        (n as usize, 8)
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let ngroups = total_bits.div_ceil(6);
    if bytes.len() < pos + ngroups {
        return Err(CodecError::Graph6Truncated { n });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let group_base = pos;
    for j in 1..n {
        for i in 0..j {
            let b = check(group_base + bit / 6)?;
            if b >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    pos += ngroups;
    if pos != bytes.len() {
        return Err(CodecError::Graph6TrailingData {
            extra: bytes.len() - pos,
        });
    }
    Ok(Graph::build(n, &edges)?)
}

// ----- JSON ------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<usize, String>>,
}

/// Encode as the JSON graph schema; label keys are stringified vertex indices.
pub fn to_json(g: &Graph) -> String {
    let labels = g.labels().map(|ls| {
        ls.iter()
            .enumerate()
            .map(|(v, l)| (v, l.clone()))
            .collect::<BTreeMap<_, _>>()
    });
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges(),
        labels,
    };
    serde_json::to_string(&doc).expect("graph JSON serialization cannot fail")
}

/// Decode the JSON graph schema, validating edge range, loop-freeness, and
/// that labels (when present) cover exactly the vertex range.
pub fn from_json(text: &str) -> Result<Graph, CodecError> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let mut g = Graph::build(doc.n, &doc.edges)?;
    if let Some(map) = doc.labels {
        if map.len() != doc.n {
            return Err(CodecError::JsonLabels {
                n: doc.n,
                reason: format!("got {} labels", map.len()),
            });
        }
        if let Some((&k, _)) = map.iter().find(|(&k, _)| k >= doc.n) {
            return Err(CodecError::JsonLabels {
                n: doc.n,
                reason: format!("label key {k} out of range"),
            });
        }
        let labels: Vec<String> = map.into_values().collect();
        g.set_labels(labels)?;
    }
    Ok(g)
}

// ----- DOT -------------------------------------------------------------------

/// Emit DOT for rendering; vertex labels are included when present.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph oddsum {\n");
    for v in 0..g.n() {
        match g.label(v) {
            Some(l) => out.push_str(&format!("  {v} [label=\"{}\"];\n", escape(l))),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

// ----- colorings ---------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    colors: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
}

/// Encode a coloring as `{"colors": {"0": c0, …}, "k": distinct}`.
pub fn coloring_to_json(colors: &[usize]) -> String {
    let distinct = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
    let doc = ColoringJson {
        colors: colors.iter().copied().enumerate().collect(),
        k: Some(distinct),
    };
    serde_json::to_string(&doc).expect("coloring JSON serialization cannot fail")
}

/// Decode any JSON object carrying a `"colors"` map over a contiguous vertex
/// range (extra fields such as a certificate's `"chios"` and `"D"` are
/// ignored). Color values are returned as-is; semantic checks belong to the
/// validator.
pub fn coloring_from_json(text: &str) -> Result<Vec<usize>, CodecError> {
    let doc: ColoringJson = serde_json::from_str(text)?;
    let n = doc.colors.len();
    if let Some((&k, _)) = doc.colors.iter().find(|(&k, _)| k >= n) {
        return Err(CodecError::ColoringJson {
            reason: format!("vertex key {k} outside 0..{n}"),
        });
    }
    Ok(doc.colors.into_values().collect())
}
