//! Graph arguments: builtin names or files.
//!
//! | spec               | graph                                              |
//! |--------------------|----------------------------------------------------|
//! | `p3`               | the path `z - x - y - w`                           |
//! | `p<k>`             | path with `k` edges on `v0..vk`                    |
//! | `c<t>`             | cycle on `v0..v(t-1)`                              |
//! | `k2`, `edge`       | the single edge `x - y`                            |
//! | `triangle`         | triangle on `a, b, c`                              |
//! | `k<n>`             | complete graph                                     |
//! | `k<m>,<n>`         | complete bipartite graph on `a1..am`, `b1..bn`     |
//! | `doublestar:<s>,<t>` | double star with centers `x0`, `y0`              |
//! | `whisker:<spec>`   | whiskered graph over another spec or a file        |
//! | `stars`            | the six-vertex example with several stars          |
//! | `g6:<string>`      | graph6                                             |
//!
//! Anything else is read as a file: `*.g6` files hold graph6 on the first
//! nonempty line, other files are edge lists.

use std::path::Path;

use edgesquare_core::Graph;

use crate::error::CliError;
use crate::io::{from_graph6, parse_edge_list};

fn number(s: &str, spec: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| CliError::Spec(format!("bad number {s:?} in graph spec {spec:?}")))
}

fn pair(s: &str, spec: &str) -> Result<(usize, usize), CliError> {
    let (a, b) = s.split_once(',').ok_or_else(|| CliError::Spec(format!("expected <a>,<b> in {spec:?}")))?;
    Ok((number(a, spec)?, number(b, spec)?))
}

/// Resolves a graph argument.
pub fn resolve_graph(spec: &str) -> Result<Graph, CliError> {
    let lower = spec.to_ascii_lowercase();
    let core = |r: edgesquare_core::Result<Graph>| r.map_err(CliError::from);
    if let Some(rest) = spec.strip_prefix("g6:") {
        return from_graph6(rest).map_err(|e| CliError::Parse { source_name: spec.into(), error: e });
    }
    if let Some(rest) = spec.strip_prefix("whisker:") {
        return core(Graph::whisker(&resolve_graph(rest)?));
    }
    if let Some(rest) = lower.strip_prefix("doublestar:") {
        let (s, t) = pair(rest, spec)?;
        return core(Graph::double_star(s, t));
    }
    match lower.as_str() {
        "p3" => return Ok(Graph::labeled_p3()),
        "k2" | "edge" => return Ok(Graph::single_edge()),
        "triangle" => return Ok(Graph::triangle()),
        "stars" => return Ok(Graph::stars_example()),
        _ => {}
    }
    let is_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if let Some(rest) = lower.strip_prefix('p').filter(|r| is_digits(r)) {
        return core(Graph::path_graph(number(rest, spec)?));
    }
    if let Some(rest) = lower.strip_prefix('c').filter(|r| is_digits(r)) {
        return core(Graph::cycle(number(rest, spec)?));
    }
    if let Some(rest) = lower.strip_prefix('k') {
        if is_digits(rest) {
            return core(Graph::complete(number(rest, spec)?));
        }
        if rest.split_once(',').is_some_and(|(a, b)| is_digits(a) && is_digits(b)) {
            let (m, n) = pair(rest, spec)?;
            return core(Graph::complete_bipartite(m, n));
        }
    }
    read_graph_file(Path::new(spec))
}

/// Reads an edge-list file, or a graph6 file when the extension is `g6`.
pub fn read_graph_file(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), error: e })?;
    let source_name = path.display().to_string();
    if path.extension().is_some_and(|e| e == "g6") {
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        return from_graph6(line).map_err(|error| CliError::Parse { source_name, error });
    }
    parse_edge_list(&text).map_err(|error| CliError::Parse { source_name, error })
}
