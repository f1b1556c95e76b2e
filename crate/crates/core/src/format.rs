//! Network files, DOT export and atomic output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::asyncdyn::AsyncGraph;
use crate::config::MAX_COMPONENTS;
use crate::error::{Error, Result};
use crate::igraph::{Sign, SignedDigraph};
use crate::network::BooleanNetwork;

/// JSON form of a network: character `k` of `tables[i]` is `f_i` at the
/// state whose little-endian encoding is `k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NetworkFile {
    pub n: usize,
    pub tables: Vec<String>,
}

impl From<&BooleanNetwork> for NetworkFile {
    fn from(f: &BooleanNetwork) -> Self {
        let tables = (0..f.n())
            .map(|i| {
                f.images()
                    .iter()
                    .map(|&y| if y >> i & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect();
        NetworkFile { n: f.n(), tables }
    }
}

impl TryFrom<NetworkFile> for BooleanNetwork {
    type Error = Error;

    fn try_from(file: NetworkFile) -> Result<Self> {
        if file.n == 0 || file.n > MAX_COMPONENTS {
            return Err(Error::SizeLimit {
                what: "network file",
                n: file.n,
                max: MAX_COMPONENTS,
            });
        }
        if file.tables.len() != file.n {
            return Err(Error::InvalidNetwork(format!(
                "n = {} but {} tables given",
                file.n,
                file.tables.len()
            )));
        }
        let tables = file
            .tables
            .iter()
            .enumerate()
            .map(|(i, t)| {
                t.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::InvalidNetwork(format!(
                            "table {} contains {other:?}",
                            i + 1
                        ))),
                    })
                    .collect::<Result<Vec<bool>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BooleanNetwork::from_tables(&tables)
    }
}

pub fn network_to_json(f: &BooleanNetwork) -> String {
    let mut s = serde_json::to_string_pretty(&NetworkFile::from(f)).expect("plain data");
    s.push('\n');
    s
}

pub fn network_from_json(text: &str) -> Result<BooleanNetwork> {
    let file: NetworkFile = serde_json::from_str(text)?;
    file.try_into()
}

pub fn read_network(path: &Path) -> Result<BooleanNetwork> {
    network_from_json(&std::fs::read_to_string(path)?)
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

/// Interaction graph in DOT. Vertices are 1-based; arcs are sorted by
/// (source, target, sign) and labelled `+` or `-`.
pub fn interaction_graph_dot(g: &SignedDigraph) -> String {
    let mut out = String::from("digraph interaction {\n");
    for v in 1..=g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for arc in g.arcs() {
        let style = match arc.sign {
            Sign::Positive => "",
            Sign::Negative => ", arrowhead=tee",
        };
        writeln!(
            out,
            "  {} -> {} [label=\"{}\"{style}];",
            arc.source + 1,
            arc.target + 1,
            arc.sign
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Asynchronous graph in DOT. Nodes are configuration literals in integer
/// order, fixed points drawn double; transitions are labelled with the
/// 1-based updated component.
pub fn async_graph_dot(g: &AsyncGraph) -> String {
    let mut out = String::from("digraph async {\n");
    for x in crate::config::configurations(g.n()) {
        if g.out_degree(&x) == 0 {
            writeln!(out, "  \"{x}\" [shape=doublecircle];").unwrap();
        } else {
            writeln!(out, "  \"{x}\";").unwrap();
        }
    }
    for (x, i, y) in g.transitions() {
        writeln!(out, "  \"{x}\" -> \"{y}\" [label=\"{}\"];", i + 1).unwrap();
    }
    out.push_str("}\n");
    out
}
