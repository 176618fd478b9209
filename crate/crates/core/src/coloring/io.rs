//! `l <edge> <c1> <c2> ...` list files and `c <edge> <color>` coloring files.

use std::fmt;

use super::{ListAssignment, StrongColoring};
use crate::error::{Error, Result};

fn numbers(line_no: usize, fields: std::str::SplitWhitespace<'_>) -> Result<Vec<u32>> {
    fields
        .map(|f| {
            f.parse::<u32>()
                .map_err(|_| Error::parse(line_no, format!("not a non-negative integer: {f:?}")))
        })
        .collect()
}

/// Records of the form `<tag> <edge> <values...>`, each edge exactly once.
fn parse_records(text: &str, tag: &str, edges: usize) -> Result<Vec<Vec<u32>>> {
    let mut seen: Vec<Option<Vec<u32>>> = vec![None; edges];
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let t = fields.next().unwrap_or_default();
        if t != tag {
            return Err(Error::parse(line_no, format!("expected a `{tag}` line, found {t:?}")));
        }
        let nums = numbers(line_no, fields)?;
        let (&e, values) = nums
            .split_first()
            .ok_or_else(|| Error::parse(line_no, "missing edge id"))?;
        let e = e as usize;
        let slot = seen
            .get_mut(e)
            .ok_or_else(|| Error::parse(line_no, format!("edge id {e} out of range 0..{edges}")))?;
        if slot.is_some() {
            return Err(Error::parse(line_no, format!("edge {e} listed twice")));
        }
        *slot = Some(values.to_vec());
    }
    seen.into_iter()
        .enumerate()
        .map(|(e, v)| v.ok_or_else(|| Error::parse(last.max(1), format!("edge {e} missing"))))
        .collect()
}

/// Parses a list file for a graph with `edges` edges.
pub fn parse_lists(text: &str, edges: usize) -> Result<ListAssignment> {
    let records = parse_records(text, "l", edges)?;
    for (idx, raw) in text.lines().enumerate() {
        let mut f = raw.split_whitespace();
        if f.next() == Some("l") {
            let mut vals: Vec<&str> = f.skip(1).collect();
            let before = vals.len();
            vals.sort_unstable();
            vals.dedup();
            if vals.len() != before {
                return Err(Error::parse(idx + 1, "duplicate color in list"));
            }
        }
    }
    Ok(ListAssignment::new(records))
}

/// Parses a (possibly partial) coloring file.
pub fn parse_coloring(text: &str, edges: usize) -> Result<StrongColoring> {
    let mut colors = vec![None; edges];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        if fields.next() != Some("c") {
            return Err(Error::parse(line_no, "expected `c <edge> <color>`"));
        }
        let nums = numbers(line_no, fields)?;
        let [e, c] = nums[..] else {
            return Err(Error::parse(line_no, "expected `c <edge> <color>`"));
        };
        let slot = colors
            .get_mut(e as usize)
            .ok_or_else(|| Error::parse(line_no, format!("edge id {e} out of range")))?;
        if slot.replace(c).is_some() {
            return Err(Error::parse(line_no, format!("edge {e} colored twice")));
        }
    }
    Ok(StrongColoring::from_partial(colors))
}

impl fmt::Display for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, l) in self.lists().iter().enumerate() {
            write!(f, "l {e}")?;
            for c in l {
                write!(f, " {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Display for StrongColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.colors().iter().enumerate() {
            if let Some(c) = c {
                writeln!(f, "c {e} {c}")?;
            }
        }
        Ok(())
    }
}
