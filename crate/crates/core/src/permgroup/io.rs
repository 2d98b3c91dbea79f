//! Plain-text group files:
//!
//! ```text
//! name S3
//! degree 3
//! gen (1,2)
//! gen (1,2,3)
//! ```

use std::path::Path;

use crate::error::{Error, Result};

use super::group::{Group, GroupRef};
use super::perm::Permutation;

/// Parses cycle notation such as `(1,2)(3, 4)` or `()` into a permutation.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = compact.as_str();
    if rest.is_empty() {
        return Err(Error::input("empty permutation"));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::input(format!("expected '(' at {rest:?}")))?;
        let close = body.find(')').ok_or_else(|| Error::input("unclosed cycle"))?;
        let inner = &body[..close];
        if !inner.is_empty() {
            let pts = inner
                .split(',')
                .map(|s| s.parse::<usize>().map_err(|_| Error::input(format!("bad point {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(pts);
        }
        rest = &body[close + 1..];
    }
    Permutation::from_cycles(degree, &cycles)
}

/// A group read from a file, with its declared name.
#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub name: String,
    pub group: GroupRef,
}

pub fn parse_group_text(text: &str) -> Result<NamedGroup> {
    let syntax = |line: usize, message: String| Error::Syntax { line, message };
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(char::is_whitespace)
            .map(|(k, v)| (k, v.trim()))
            .unwrap_or((line, ""));
        match key {
            "name" => {
                if name.is_some() {
                    return Err(syntax(line_no, "duplicate name".into()));
                }
                if value.is_empty() || value.contains(char::is_whitespace) {
                    return Err(syntax(line_no, "name must be a single identifier".into()));
                }
                name = Some(value.to_string());
            }
            "degree" => {
                if name.is_none() {
                    return Err(syntax(line_no, "degree before name".into()));
                }
                if degree.is_some() {
                    return Err(syntax(line_no, "duplicate degree".into()));
                }
                let d: usize = value
                    .parse()
                    .map_err(|_| syntax(line_no, format!("invalid degree {value:?}")))?;
                if d == 0 {
                    return Err(syntax(line_no, "degree must be positive".into()));
                }
                degree = Some(d);
            }
            "gen" => {
                let d = degree.ok_or_else(|| syntax(line_no, "gen before degree".into()))?;
                let g = parse_cycles(d, value).map_err(|e| {
                    let message = match e {
                        Error::Input(m) => m,
                        other => other.to_string(),
                    };
                    syntax(line_no, message)
                })?;
                gens.push(g);
            }
            other => return Err(syntax(line_no, format!("unknown directive {other:?}"))),
        }
    }
    let name = name.ok_or_else(|| syntax(1, "missing name".into()))?;
    let degree = degree.ok_or_else(|| syntax(2, "missing degree".into()))?;
    let group = Group::from_generators(degree, &gens)?;
    Ok(NamedGroup { name, group })
}

pub fn parse_group_file(path: impl AsRef<Path>) -> Result<NamedGroup> {
    let text =
        std::fs::read_to_string(path.as_ref()).map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_group_text(&text)
}

/// Serializes a group in the file format, using its canonical generators.
pub fn write_group_text(name: &str, group: &Group) -> String {
    let mut out = format!("name {name}\ndegree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&format!("gen {g}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_s3() {
        let g = parse_group_text("name S3\ndegree 3\ngen (1,2)\ngen ( 1, 2 ,3 )\n").unwrap();
        assert_eq!(g.name, "S3");
        assert_eq!(g.group.order(), 6);
    }

    #[test]
    fn empty_generator_list_is_trivial() {
        let g = parse_group_text("name C1\ndegree 1\n").unwrap();
        assert_eq!(g.group.order(), 1);
    }

    #[test]
    fn repeated_point_reports_line() {
        let err = parse_group_text("name X\ndegree 3\ngen (1,2)\ngen (1,2,2)\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 4, .. }), "{err:?}");
    }

    #[test]
    fn other_syntax_errors() {
        assert!(matches!(
            parse_group_text("name X\ndegree 3\ngen (1,4)\n").unwrap_err(),
            Error::Syntax { line: 3, .. }
        ));
        assert!(matches!(
            parse_group_text("name X\ndegree 0\n").unwrap_err(),
            Error::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            parse_group_text("name X\ngen (1,2)\n").unwrap_err(),
            Error::Syntax { line: 2, .. }
        ));
        assert!(parse_group_text("name X\ndegree 3\ngen (1,2\n").is_err());
    }

    #[test]
    fn round_trip() {
        let g = parse_group_text("name D4\ndegree 4\ngen (1,2,3,4)\ngen (1,3)\n").unwrap();
        let again = parse_group_text(&write_group_text("D4", &g.group)).unwrap();
        assert!(std::sync::Arc::ptr_eq(&g.group, &again.group));
    }
}
