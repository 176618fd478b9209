//! Line-oriented graph text format:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>
//! ```

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut graph: Option<Graph> = None;
        let mut declared_edges = 0usize;
        let mut last_line = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let tag = fields.next().unwrap_or_default();
            let nums = fields
                .map(|f| {
                    f.parse::<usize>()
                        .map_err(|_| Error::parse(line_no, format!("not a non-negative integer: {f:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            match (tag, graph.as_mut()) {
                ("p", None) => {
                    if nums.len() != 2 {
                        return Err(Error::parse(line_no, "header must be `p <n> <m>`"));
                    }
                    graph = Some(Graph::empty(nums[0]));
                    declared_edges = nums[1];
                }
                ("p", Some(_)) => return Err(Error::parse(line_no, "duplicate header")),
                ("e", Some(g)) => {
                    if nums.len() != 2 {
                        return Err(Error::parse(line_no, "edge line must be `e <u> <v>`"));
                    }
                    g.push_edge(nums[0], nums[1]).map_err(|e| match e {
                        Error::Input(msg) => Error::parse(line_no, msg),
                        other => other,
                    })?;
                }
                ("e", None) => return Err(Error::parse(line_no, "edge before `p` header")),
                (other, _) => return Err(Error::parse(line_no, format!("unknown line tag {other:?}"))),
            }
        }
        let graph = graph.ok_or_else(|| Error::parse(last_line.max(1), "missing `p <n> <m>` header"))?;
        if graph.edge_count() != declared_edges {
            return Err(Error::parse(
                last_line.max(1),
                format!("header declares {declared_edges} edges, found {}", graph.edge_count()),
            ));
        }
        Ok(graph)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p {} {}", self.vertex_count(), self.edge_count())?;
        for &(u, v) in self.edges() {
            writeln!(f, "e {u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_whitespace() {
        let g: Graph = "# triangle\n  p 3   3\ne 0 1\n\ne\t1 2\ne 2 0\n".parse().unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edge(2), (2, 0));
    }

    #[test]
    fn reports_line_numbers() {
        let err = "p 3 2\ne 0 1\ne 1 1\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = "p 3 1\ne 0 x\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = "e 0 1\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!("p 3 2\ne 0 1\n".parse::<Graph>().is_err());
        assert!("p 2 1\ne 0 2\n".parse::<Graph>().is_err());
    }

    #[test]
    fn display_reparses() {
        let g = Graph::new(5, &[(0, 1), (3, 4), (1, 4)]).unwrap();
        let back: Graph = g.to_string().parse().unwrap();
        assert_eq!(g, back);
    }
}
