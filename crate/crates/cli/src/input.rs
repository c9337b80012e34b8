use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use tupledom::io::{parse_dimacs, parse_graph6, write_graph6};
use tupledom::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Dimacs,
}

/// One input item. A graph6 line that fails to parse still gets an index so
/// the batch can report it in place.
pub struct Item {
    pub index: usize,
    pub graph6: String,
    pub graph: Result<Graph, String>,
}

pub fn sniff(path: Option<&Path>) -> InputFormat {
    let ext = path
        .and_then(Path::extension)
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("dimacs" | "col" | "dim") => InputFormat::Dimacs,
        _ => InputFormat::Graph6,
    }
}

/// Reads every graph from `path` (standard input for `None` or `-`).
/// A DIMACS file holds a single graph and a parse failure is fatal; graph6
/// input holds one graph per non-blank line.
pub fn read_items(
    path: Option<&PathBuf>,
    format: Option<InputFormat>,
) -> Result<Vec<Item>, String> {
    let path = path.filter(|p| p.as_os_str() != "-");
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("standard input: {e}"))?;
            buf
        }
    };
    let format = format.unwrap_or_else(|| sniff(path.map(PathBuf::as_path)));
    match format {
        InputFormat::Dimacs => {
            let g = parse_dimacs(&text).map_err(|e| e.to_string())?;
            Ok(vec![Item {
                index: 0,
                graph6: write_graph6(&g),
                graph: Ok(g),
            }])
        }
        InputFormat::Graph6 => Ok(text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .enumerate()
            .map(|(index, line)| {
                let graph = parse_graph6(line).map_err(|e| e.to_string());
                let graph6 = graph
                    .as_ref()
                    .map_or_else(|_| line.to_string(), write_graph6);
                Item {
                    index,
                    graph6,
                    graph,
                }
            })
            .collect()),
    }
}
