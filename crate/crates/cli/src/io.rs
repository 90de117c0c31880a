//! Graph sources: named generators, graph6 streams and edge-list files.

use std::fs;
use std::io::Read;
use std::path::Path;

use indeplab_core::generators::{complete, complete_bipartite, cycle, figure1, gnp, path, star};
use indeplab_core::{graph6, Graph};

use crate::error::{CliError, Result};

/// Reads a file, or standard input when `path` is `None` or `-`.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn number<T: std::str::FromStr>(spec: &str, field: &str) -> Result<T> {
    field
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("bad generator spec {spec:?}: cannot parse {field:?}")))
}

/// `figure1`, `path:n`, `cycle:n`, `complete:n`, `complete_bipartite:a,b`,
/// `star:k` or `gnp:n,p,seed`.
pub fn parse_gen(spec: &str) -> Result<Graph> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let args: Vec<&str> = if args.is_empty() { Vec::new() } else { args.split(',').collect() };
    let arity = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(CliError::Input(format!("generator {name:?} takes {k} argument(s), got {}", args.len())))
        }
    };
    let g = match name {
        "figure1" => {
            arity(0)?;
            figure1()
        }
        "path" => {
            arity(1)?;
            path(number(spec, args[0])?)
        }
        "cycle" => {
            arity(1)?;
            cycle(number(spec, args[0])?)?
        }
        "complete" => {
            arity(1)?;
            complete(number(spec, args[0])?)
        }
        "complete_bipartite" => {
            arity(2)?;
            complete_bipartite(number(spec, args[0])?, number(spec, args[1])?)
        }
        "star" => {
            arity(1)?;
            star(number(spec, args[0])?)
        }
        "gnp" => {
            arity(3)?;
            gnp(number(spec, args[0])?, number(spec, args[1])?, number(spec, args[2])?)?
        }
        _ => {
            return Err(CliError::Input(format!(
                "unknown generator {name:?}; expected figure1, path:n, cycle:n, complete:n, \
                 complete_bipartite:a,b, star:k or gnp:n,p,seed"
            )))
        }
    };
    Ok(g)
}

fn meaningful(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Parses graph6 lines, or one edge list: an `n m` header followed by `m`
/// lines `u v`. Blank lines and lines starting with `#` are ignored.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let mut lines = meaningful(text).peekable();
    let Some(&(_, first)) = lines.peek() else {
        return Ok(Vec::new());
    };
    if let Some((n, m)) = pair(first) {
        lines.next();
        let mut edges = Vec::with_capacity(m);
        for (no, line) in lines {
            edges.push(pair(line).ok_or_else(|| CliError::Input(format!("line {no}: expected `u v`, got {line:?}")))?);
        }
        if edges.len() != m {
            return Err(CliError::Input(format!("edge list header announces {m} edges, found {}", edges.len())));
        }
        return Ok(vec![Graph::new(n, &edges)?]);
    }
    lines
        .map(|(no, line)| graph6::decode(line).map_err(|e| CliError::Input(format!("line {no}: {e}"))))
        .collect()
}

/// Exactly one graph from a generator spec, an inline graph6 string or a
/// file (standard input by default).
pub fn single_graph(gen: Option<&str>, graph6: Option<&str>, path: Option<&Path>) -> Result<Graph> {
    let graphs = match (gen, graph6) {
        (Some(spec), None) => return parse_gen(spec),
        (None, Some(text)) => vec![graph6::decode(text.trim()).map_err(|e| CliError::Input(e.to_string()))?],
        (None, None) => parse_graphs(&read_text(path)?)?,
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --gen or --graph6, not both".into())),
    };
    let count = graphs.len();
    let mut graphs = graphs.into_iter();
    match (graphs.next(), count) {
        (Some(g), 1) => Ok(g),
        _ => Err(CliError::Input(format!("expected exactly one graph, found {count}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(graph6::encode(&parse_gen("path:3").unwrap()), "Bg");
        assert_eq!(graph6::encode(&parse_gen("complete:3").unwrap()), "Bw");
        assert_eq!(parse_gen("complete_bipartite:2,3").unwrap().size(), 6);
        assert_eq!(parse_gen("gnp:8,0.5,3").unwrap(), parse_gen("gnp:8,0.5,3").unwrap());
        assert!(parse_gen("cycle:2").is_err());
        assert!(parse_gen("path").is_err());
        assert!(parse_gen("wheel:5").is_err());
        assert!(parse_gen("gnp:5,1.5,0").is_err());
    }

    #[test]
    fn edge_lists_and_graph6() {
        let g = &parse_graphs("# fig\n5 5\n0 1\n0 2\n1 2\n2 3\n3 4\n").unwrap()[0];
        assert_eq!(*g, figure1());
        let many = parse_graphs("Bw\n\nBg\n").unwrap();
        assert_eq!(many.len(), 2);
        assert!(parse_graphs("3 2\n0 1\n").is_err());
        assert!(parse_graphs("B!\n").is_err());
        assert!(parse_graphs("").unwrap().is_empty());
    }
}
