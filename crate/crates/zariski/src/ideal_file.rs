//! The plain-text input format of the command-line tools.
//!
//! ```text
//! # comments run to end of line
//! field 4
//! vars x1 x2 x3
//!
//! ideal I
//! x1*x2^2+x1^2*x2
//! end
//!
//! points X
//! [1:0:g]
//! end
//! ```
//!
//! A file declares one field and one variable list, then any number of
//! named `ideal` and `points` blocks. Parsing a canonical file and
//! printing it back is the identity.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{parse_element, Field};
use crate::ideal::Ideal;
use crate::poly::{parse_polynomial, MonomialOrder, Ring};
use crate::projective::{PointSet, ProjectivePoint};

/// Parsed contents of an ideal file.
#[derive(Debug, Clone)]
pub struct IdealFile {
    ring: Ring,
    ideals: Vec<(String, Ideal)>,
    point_sets: Vec<(String, PointSet)>,
}

impl IdealFile {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ideals(&self) -> impl Iterator<Item = (&str, &Ideal)> {
        self.ideals.iter().map(|(n, i)| (n.as_str(), i))
    }

    pub fn point_sets(&self) -> impl Iterator<Item = (&str, &PointSet)> {
        self.point_sets.iter().map(|(n, p)| (n.as_str(), p))
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| i)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn point_set(&self, name: &str) -> Result<&PointSet> {
        self.point_sets
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn parse(text: &str) -> Result<IdealFile> {
        Parser::new(text).run()
    }

    /// Canonical text: declarations first, then the blocks in input
    /// order, generators in canonical grevlex form, points sorted.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "field {}", self.ring.field().q()).unwrap();
        writeln!(out, "vars {}", self.ring.var_names().join(" ")).unwrap();
        for (name, ideal) in &self.ideals {
            writeln!(out).unwrap();
            writeln!(out, "ideal {name}").unwrap();
            for g in ideal.generators() {
                writeln!(out, "{}", g.format_with_order(MonomialOrder::Grevlex)).unwrap();
            }
            writeln!(out, "end").unwrap();
        }
        for (name, set) in &self.point_sets {
            writeln!(out).unwrap();
            writeln!(out, "points {name}").unwrap();
            for p in set.iter() {
                writeln!(out, "{p}").unwrap();
            }
            writeln!(out, "end").unwrap();
        }
        out
    }
}

struct Parser<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, raw)| {
                let content = raw.split('#').next().unwrap_or("").trim();
                (i + 1, content)
            })
            .filter(|(_, c)| !c.is_empty())
            .collect();
        Parser { lines, pos: 0 }
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let line = self.lines.get(self.pos).copied();
        self.pos += 1;
        line
    }

    fn run(mut self) -> Result<IdealFile> {
        let (line_no, field_line) = self
            .next_line()
            .ok_or_else(|| Error::parse(1, 1, "empty file: expected `field <q>`"))?;
        let q = field_line
            .strip_prefix("field")
            .map(str::trim)
            .filter(|rest| !rest.is_empty())
            .ok_or_else(|| Error::parse(line_no, 1, "expected `field <q>`"))?
            .parse::<u64>()
            .map_err(|_| Error::parse(line_no, 7, "field size must be an integer"))?;
        let field = Field::new(q)?;

        let (line_no, vars_line) = self
            .next_line()
            .ok_or_else(|| Error::parse(line_no + 1, 1, "expected `vars <name>...`"))?;
        let names: Vec<String> = vars_line
            .strip_prefix("vars")
            .ok_or_else(|| Error::parse(line_no, 1, "expected `vars <name>...`"))?
            .split_whitespace()
            .map(str::to_string)
            .collect();
        if names.is_empty() {
            return Err(Error::parse(line_no, 5, "at least one variable is required"));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n
                .chars()
                .enumerate()
                .all(|(k, c)| (c.is_alphanumeric() || c == '_') && (k > 0 || !c.is_numeric()));
            if !valid {
                return Err(Error::parse(line_no, 1, format!("invalid variable name `{n}`")));
            }
            if n == "g" && field.extension_degree() > 1 {
                return Err(Error::parse(
                    line_no,
                    1,
                    "`g` denotes the field generator and cannot name a variable",
                ));
            }
            if names[..i].contains(n) {
                return Err(Error::parse(line_no, 1, format!("duplicate variable `{n}`")));
            }
        }
        let ring = Ring::with_names(field, names);

        let mut ideals: Vec<(String, Ideal)> = Vec::new();
        let mut point_sets: Vec<(String, PointSet)> = Vec::new();
        while let Some((line_no, line)) = self.next_line() {
            if let Some(name) = line.strip_prefix("ideal ") {
                let name = name.trim().to_string();
                if ideals.iter().any(|(n, _)| *n == name) {
                    return Err(Error::parse(line_no, 1, format!("duplicate ideal `{name}`")));
                }
                let gens = self.block(line_no, |text, ln| parse_polynomial(&ring, text, ln))?;
                ideals.push((name, Ideal::new(&ring, gens)?));
            } else if let Some(name) = line.strip_prefix("points ") {
                let name = name.trim().to_string();
                if point_sets.iter().any(|(n, _)| *n == name) {
                    return Err(Error::parse(
                        line_no,
                        1,
                        format!("duplicate point set `{name}`"),
                    ));
                }
                let pts =
                    self.block(line_no, |text, ln| parse_point(&ring, text, ln))?;
                point_sets.push((name, PointSet::from_points(pts)));
            } else {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("expected `ideal <name>`, `points <name>`, or `end`, found `{line}`"),
                ));
            }
        }
        Ok(IdealFile {
            ring,
            ideals,
            point_sets,
        })
    }

    fn block<T>(
        &mut self,
        start_line: usize,
        mut parse_item: impl FnMut(&str, usize) -> Result<T>,
    ) -> Result<Vec<T>> {
        let mut items = Vec::new();
        loop {
            let (line_no, line) = self.next_line().ok_or_else(|| {
                Error::parse(start_line, 1, "unterminated block: expected `end`")
            })?;
            if line == "end" {
                return Ok(items);
            }
            items.push(parse_item(line, line_no)?);
        }
    }
}

fn parse_point(ring: &Ring, text: &str, line: usize) -> Result<ProjectivePoint> {
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::parse(line, 1, "expected a point of the form [a:b:c]"))?;
    let chunks: Vec<&str> = inner.split(':').collect();
    if chunks.len() != ring.nvars() {
        return Err(Error::parse(
            line,
            1,
            format!(
                "point has {} coordinates but the ring has {} variables",
                chunks.len(),
                ring.nvars()
            ),
        ));
    }
    let coords = chunks
        .iter()
        .map(|c| parse_element(ring.field(), c.trim()))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| match e {
            Error::Parse { column, message, .. } => Error::Parse {
                line,
                column,
                message,
            },
            other => other,
        })?;
    ProjectivePoint::new(&coords)
        .map_err(|_| Error::parse(line, 1, "projective point must have a nonzero coordinate"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# cartesian product example over F_4
field 4
vars x1 x2 x3

ideal IX
x1*x2^2+x1^2*x2
x1*x3^4+x1^4*x3
x2*x3^4+x2^4*x3
end

points X
[1:0:g]
[0:1:1]
end
";

    #[test]
    fn parses_the_sample() {
        let file = IdealFile::parse(SAMPLE).unwrap();
        assert_eq!(file.ring().field().q(), 4);
        assert_eq!(file.ring().nvars(), 3);
        assert_eq!(file.ideal("IX").unwrap().generators().len(), 3);
        assert_eq!(file.point_set("X").unwrap().len(), 2);
        assert!(matches!(
            file.ideal("missing"),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn canonical_round_trip_is_identity() {
        let file = IdealFile::parse(SAMPLE).unwrap();
        let canonical = file.canonical_text();
        let reparsed = IdealFile::parse(&canonical).unwrap();
        assert_eq!(reparsed.canonical_text(), canonical);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "field 4\nvars x1 x2\nideal I\nx1 + y\nend\n";
        match IdealFile::parse(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }

        let unterminated = "field 4\nvars x1 x2\nideal I\nx1\n";
        assert!(matches!(
            IdealFile::parse(unterminated),
            Err(Error::Parse { .. })
        ));

        let not_prime_power = "field 12\nvars x1\n";
        assert!(matches!(
            IdealFile::parse(not_prime_power),
            Err(Error::NotPrimePower(12))
        ));

        let zero_point = "field 2\nvars x1 x2\npoints P\n[0:0]\nend\n";
        match IdealFile::parse(zero_point) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }

        let g_var = "field 4\nvars g x2\n";
        assert!(matches!(IdealFile::parse(g_var), Err(Error::Parse { .. })));
    }

    #[test]
    fn custom_variable_names() {
        let text = "field 9\nvars y z\nideal I\ny^2-z^2\nend\n";
        let file = IdealFile::parse(text).unwrap();
        let ideal = file.ideal("I").unwrap();
        assert_eq!(ideal.generators()[0].to_string(), "y^2+2*z^2");
    }
}
