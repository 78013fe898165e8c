//! Plain-text set and pair files.
//!
//! ```text
//! # comment
//! 3 2
//! 0 0
//! 1 0
//! 2 0
//! ```
//!
//! A pair file is two set files separated by a line `---`. The second section
//! may repeat the `p d` header, which must then equal the first.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::space::{Ambient, PointSet};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| parse_err(line_no, format!("not a base-10 integer: {tok:?}")))
        })
        .collect()
}

/// Data lines (1-based line number, content), skipping comments and blanks.
fn data_lines(text: &str, first_line: usize) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(move |(i, l)| (first_line + i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line_no: usize, header: &str) -> Result<Ambient> {
    let hd = numbers(line_no, header)?;
    let [p, d] = hd[..] else {
        return Err(parse_err(line_no, "header must be exactly two integers \"p d\""));
    };
    Ambient::of(p, d as usize).map_err(|e| parse_err(line_no, e.to_string()))
}

/// With `inherited`, the section may omit its header; a leading two-number
/// line that is not a point of the inherited ambient is read as a header.
fn parse_section(text: &str, first_line: usize, inherited: Option<Ambient>) -> Result<PointSet> {
    let mut lines = data_lines(text, first_line).peekable();
    let ambient = match (inherited, lines.peek()) {
        (None, None) => return Err(parse_err(first_line, "missing \"p d\" header")),
        (None, Some(&(hl, header))) => {
            lines.next();
            parse_header(hl, header)?
        }
        (Some(a), Some(&(hl, line))) => {
            let nums = numbers(hl, line)?;
            if nums.len() == 2 && a.vector(&nums).is_err() {
                lines.next();
                let own = parse_header(hl, line)?;
                a.check_same(&own)?;
                own
            } else {
                a
            }
        }
        (Some(a), None) => a,
    };
    let mut set = PointSet::empty(ambient).map_err(|e| parse_err(first_line, e.to_string()))?;
    for (ln, line) in lines {
        let coords = numbers(ln, line)?;
        let v = ambient.vector(&coords).map_err(|e| parse_err(ln, e.to_string()))?;
        if !set.insert_cell(ambient.index(&v)) {
            return Err(parse_err(ln, format!("duplicate element {v}")));
        }
    }
    Ok(set)
}

pub fn parse_set(text: &str) -> Result<PointSet> {
    if text.lines().any(|l| l.trim() == "---") {
        return Err(parse_err(0, "unexpected pair separator in a set file"));
    }
    parse_section(text, 1, None)
}

pub fn parse_pair(text: &str) -> Result<(PointSet, PointSet)> {
    let lines: Vec<&str> = text.lines().collect();
    let seps: Vec<usize> = lines.iter().enumerate().filter(|(_, l)| l.trim() == "---").map(|(i, _)| i).collect();
    let [sep] = seps[..] else {
        return Err(parse_err(0, format!("pair file needs exactly one \"---\" line, found {}", seps.len())));
    };
    let first = parse_section(&lines[..sep].join("\n"), 1, None)?;
    let second = parse_section(&lines[sep + 1..].join("\n"), sep + 2, Some(*first.ambient()))?;
    Ok((first, second))
}

pub fn read_set(path: impl AsRef<Path>) -> Result<PointSet> {
    let text = fs::read_to_string(path.as_ref()).map_err(|e| parse_err(0, e.to_string()))?;
    parse_set(&text)
}

pub fn read_pair(path: impl AsRef<Path>) -> Result<(PointSet, PointSet)> {
    let text = fs::read_to_string(path.as_ref()).map_err(|e| parse_err(0, e.to_string()))?;
    parse_pair(&text)
}

pub(crate) fn write_set(f: &mut impl fmt::Write, set: &PointSet) -> fmt::Result {
    let a = set.ambient();
    writeln!(f, "{} {}", a.p(), a.dim())?;
    for v in set.vectors() {
        let mut first = true;
        for c in v.coords() {
            if !first {
                f.write_char(' ')?;
            }
            first = false;
            write!(f, "{c}")?;
        }
        f.write_char('\n')?;
    }
    Ok(())
}

pub fn format_set(set: &PointSet) -> String {
    set.to_string()
}

pub fn format_pair(first: &PointSet, second: &PointSet) -> String {
    format!("{first}---\n{second}")
}
