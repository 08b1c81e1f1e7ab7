//! The flat table formats.
//!
//! ```text
//! monoid <order> <identity>
//! <order rows of order indices>
//! [semigroup-adjoined]
//! ```
//!
//! and `hom <src-order> <tgt-order>` followed by one line of images. Parsing
//! tolerates runs of blanks, `\r\n` and a missing final newline; rendering
//! always produces single spaces and a trailing newline, so `render(parse(f))`
//! is the canonical form of `f`.

use std::fmt::Write as _;
use std::path::Path;

use mlab::{FiniteMonoid, FiniteSemigroup};

use crate::CliError;

pub const ADJOINED_MARKER: &str = "semigroup-adjoined";

/// A homomorphism file before it is checked against a source and target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomFile {
    pub source_order: usize,
    pub target_order: usize,
    pub map: Vec<usize>,
}

/// Either kind of file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableFile {
    Semigroup(FiniteSemigroup),
    Hom(HomFile),
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines: Vec<(usize, &str)> = text
            .split('\n')
            .enumerate()
            .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
            .collect();
        while lines.last().is_some_and(|(_, l)| l.trim().is_empty()) {
            lines.pop();
        }
        Lines { lines, pos: 0 }
    }

    fn next(&mut self, expected: &str) -> Result<(usize, &'a str), CliError> {
        let last = self.lines.last().map_or(1, |l| l.0 + 1);
        let line = self
            .lines
            .get(self.pos)
            .copied()
            .ok_or_else(|| parse_err(last, 1, expected))?;
        self.pos += 1;
        Ok(line)
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }
}

fn parse_err(line: usize, column: usize, expected: &str) -> CliError {
    CliError::Parse {
        line,
        column,
        expected: expected.to_string(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c == ' ' || c == '\t', start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn numbers(
    line_no: usize,
    line: &str,
    count: usize,
    bound: usize,
    what: &str,
) -> Result<Vec<usize>, CliError> {
    let toks = tokens(line);
    let mut out = Vec::with_capacity(count);
    for (i, &(col, tok)) in toks.iter().enumerate() {
        if i == count {
            return Err(parse_err(line_no, col, "end of line"));
        }
        match tok.parse::<usize>() {
            Ok(v) if v < bound => out.push(v),
            _ => return Err(parse_err(line_no, col, &format!("{what} below {bound}"))),
        }
    }
    if out.len() < count {
        let col = line.trim_end().len() + 1;
        return Err(parse_err(line_no, col, &format!("{count} {what}s")));
    }
    Ok(out)
}

fn header(line_no: usize, line: &str, keyword: &str) -> Result<(usize, usize), CliError> {
    let toks = tokens(line);
    match toks.as_slice() {
        [(_, k), ..] if *k != keyword => Err(parse_err(line_no, 1, &format!("`{keyword}`"))),
        [] => Err(parse_err(line_no, 1, &format!("`{keyword}`"))),
        [_, (c1, a), (c2, b)] => {
            let a = a
                .parse::<usize>()
                .map_err(|_| parse_err(line_no, *c1, "a non-negative integer"))?;
            let b = b
                .parse::<usize>()
                .map_err(|_| parse_err(line_no, *c2, "a non-negative integer"))?;
            Ok((a, b))
        }
        [_, .., (c, _)] if toks.len() > 3 => Err(parse_err(line_no, *c, "end of line")),
        _ => Err(parse_err(
            line_no,
            line.trim_end().len() + 1,
            "two integers",
        )),
    }
}

/// Parses either a monoid file or a homomorphism file.
pub fn parse(text: &str) -> Result<TableFile, CliError> {
    let mut lines = Lines::new(text);
    let (no, first) = lines.next("a header line")?;
    match tokens(first).first().map(|t| t.1) {
        Some("hom") => parse_hom_body(&mut lines, no, first).map(TableFile::Hom),
        _ => parse_monoid_body(&mut lines, no, first).map(TableFile::Semigroup),
    }
}

pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup, CliError> {
    let mut lines = Lines::new(text);
    let (no, first) = lines.next("a header line")?;
    parse_monoid_body(&mut lines, no, first)
}

pub fn parse_hom(text: &str) -> Result<HomFile, CliError> {
    let mut lines = Lines::new(text);
    let (no, first) = lines.next("a header line")?;
    parse_hom_body(&mut lines, no, first)
}

fn parse_monoid_body(
    lines: &mut Lines<'_>,
    no: usize,
    first: &str,
) -> Result<FiniteSemigroup, CliError> {
    let (order, identity) = header(no, first, "monoid")?;
    if order == 0 {
        return Err(parse_err(no, tokens(first)[1].0, "a positive order"));
    }
    if identity >= order {
        return Err(parse_err(
            no,
            tokens(first)[2].0,
            &format!("an identity below {order}"),
        ));
    }
    let mut flat = Vec::with_capacity(order * order);
    for _ in 0..order {
        let (n, line) = lines.next("a table row")?;
        flat.extend(numbers(n, line, order, order, "index")?);
    }
    let adjoined = match lines.peek() {
        Some((n, line)) => {
            if line.trim() != ADJOINED_MARKER {
                return Err(parse_err(
                    n,
                    1,
                    &format!("`{ADJOINED_MARKER}` or end of file"),
                ));
            }
            lines.pos += 1;
            if let Some((n, _)) = lines.peek() {
                return Err(parse_err(n, 1, "end of file"));
            }
            true
        }
        None => false,
    };
    let monoid = FiniteMonoid::from_flat(order, flat, identity)?;
    Ok(FiniteSemigroup::from_carrier(monoid, adjoined)?)
}

fn parse_hom_body(lines: &mut Lines<'_>, no: usize, first: &str) -> Result<HomFile, CliError> {
    let (source_order, target_order) = header(no, first, "hom")?;
    let (n, line) = lines.next("a line of images")?;
    let map = numbers(n, line, source_order, target_order, "image")?;
    if let Some((n, _)) = lines.peek() {
        return Err(parse_err(n, 1, "end of file"));
    }
    Ok(HomFile {
        source_order,
        target_order,
        map,
    })
}

fn join(xs: impl IntoIterator<Item = usize>) -> String {
    let mut s = String::new();
    for (i, x) in xs.into_iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x}");
    }
    s
}

pub fn render_semigroup(s: &FiniteSemigroup) -> String {
    let m = s.monoid();
    let mut out = format!("monoid {} {}\n", m.order(), m.identity());
    for a in m.elements() {
        out.push_str(&join(m.row(a).iter().copied()));
        out.push('\n');
    }
    if s.identity_adjoined() {
        out.push_str(ADJOINED_MARKER);
        out.push('\n');
    }
    out
}

pub fn render_hom(h: &HomFile) -> String {
    format!(
        "hom {} {}\n{}\n",
        h.source_order,
        h.target_order,
        join(h.map.iter().copied())
    )
}

pub fn render(f: &TableFile) -> String {
    match f {
        TableFile::Semigroup(s) => render_semigroup(s),
        TableFile::Hom(h) => render_hom(h),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path) -> Result<TableFile, CliError> {
    parse(&read(path)?)
}

pub fn save(path: &Path, f: &TableFile) -> Result<(), CliError> {
    std::fs::write(path, render(f)).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_z2() {
        let t = parse_semigroup("monoid 1 0\n0\n").unwrap();
        assert_eq!(t.monoid().order(), 1);
        let z2 = parse_semigroup("monoid 2 0\n0 1\n1 0\n").unwrap();
        assert_eq!(z2.monoid().mul(1, 1), 0);
        assert_eq!(render_semigroup(&z2), "monoid 2 0\n0 1\n1 0\n");
    }

    #[test]
    fn canonicalises_whitespace() {
        let s = parse_semigroup("monoid  2 0\r\n0\t1\n1 0").unwrap();
        assert_eq!(render_semigroup(&s), "monoid 2 0\n0 1\n1 0\n");
    }

    #[test]
    fn adjoined_marker() {
        let text = "monoid 3 2\n0 0 0\n1 1 1\n0 1 2\nsemigroup-adjoined\n";
        let s = parse_semigroup(text).unwrap();
        assert!(s.identity_adjoined());
        assert_eq!(render_semigroup(&s), text);
    }

    #[test]
    fn positions_of_errors() {
        let e = parse_semigroup("monoid 2 0\n0 1\n1 x\n").unwrap_err();
        assert!(
            matches!(
                e,
                CliError::Parse {
                    line: 3,
                    column: 3,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_semigroup("monoid 2 0\n0 1\n").unwrap_err();
        assert!(
            matches!(
                e,
                CliError::Parse {
                    line: 3,
                    column: 1,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_semigroup("monoid 2 0\n0 1 0\n1 0\n").unwrap_err();
        assert!(
            matches!(
                e,
                CliError::Parse {
                    line: 2,
                    column: 5,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_semigroup("group 2 0\n").unwrap_err();
        assert!(
            matches!(
                e,
                CliError::Parse {
                    line: 1,
                    column: 1,
                    ..
                }
            ),
            "{e:?}"
        );
    }

    #[test]
    fn validation_errors_are_not_parse_errors() {
        let e = parse_semigroup("monoid 2 1\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(e, CliError::Validation(_)), "{e:?}");
    }

    #[test]
    fn hom_round_trip() {
        let text = "hom 4 2\n0 1 0 1\n";
        let h = parse_hom(text).unwrap();
        assert_eq!(h.map, vec![0, 1, 0, 1]);
        assert_eq!(render_hom(&h), text);
        assert!(matches!(
            parse_hom("hom 2 2\n0 2\n"),
            Err(CliError::Parse {
                line: 2,
                column: 3,
                ..
            })
        ));
    }
}
