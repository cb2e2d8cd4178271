//! Plain-text forms for boxes and paths.
//!
//! A box is either a list of signed letters (`1 1 3 -4 -2`, negative = barred)
//! or a multiplicity vector in parentheses (`(2,0,1,0,0,1,0,1)`).  A path joins
//! boxes with `|`.

use crate::boxstate::{BoxState, Letter, Path};
use crate::error::{Error, Result};

pub fn format_box(b: &BoxState) -> String {
    if b.capacity() == 0 {
        return format_box_zeta(b);
    }
    let parts: Vec<String> = b.letters().iter().map(|l| l.0.to_string()).collect();
    parts.join(" ")
}

pub fn format_box_zeta(b: &BoxState) -> String {
    let parts: Vec<String> = b.zeta().iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn format_path(p: &Path) -> String {
    let parts: Vec<String> = p.boxes().iter().map(format_box).collect();
    parts.join(" | ")
}

pub fn parse_box(n: usize, s: &str) -> Result<BoxState> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(') {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unclosed '(' in {s:?}")))?;
        let mut zeta = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let c: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity {tok:?}")))?;
            zeta.push(c);
        }
        return BoxState::new(n, zeta);
    }
    if s.is_empty() {
        return Err(Error::Parse("empty box".into()));
    }
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        let v: i32 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
        let lt = Letter(v);
        lt.validate(n)?;
        letters.push(lt);
    }
    BoxState::from_letters(n, &letters)
}

pub fn parse_path(n: usize, s: &str) -> Result<Path> {
    let s = s.trim();
    if s.is_empty() {
        return Path::new(n, Vec::new());
    }
    let boxes: Result<Vec<BoxState>> = s.split('|').map(|seg| parse_box(n, seg)).collect();
    Path::new(n, boxes?)
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a trace: a `n <rank>` header followed by one path per line.
/// Blank lines and `#` comments are skipped.
pub fn parse_trace(text: &str) -> Result<(usize, Vec<Path>)> {
    let mut lines = content_lines(text);
    let head = lines
        .next()
        .ok_or_else(|| Error::Parse("empty trace".into()))?;
    let n: usize = head
        .strip_prefix("n ")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected 'n <rank>' header, got {head:?}")))?;
    let rows: Result<Vec<Path>> = lines.map(|l| parse_path(n, l)).collect();
    let rows = rows?;
    if rows.is_empty() {
        return Err(Error::Parse("trace holds no rows".into()));
    }
    Ok((n, rows))
}

/// Parses a state together with its rigged configuration: lines
/// `n <rank>`, `state <path>` and `rc <triples>` in any order after the
/// header, comments allowed.
pub fn parse_pair(text: &str) -> Result<(Path, crate::rigged::RiggedConfig)> {
    let mut n = None;
    let mut state = None;
    let mut rc = None;
    for line in content_lines(text) {
        if let Some(v) = line.strip_prefix("n ") {
            n = Some(
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad rank {v:?}")))?,
            );
        } else if let Some(v) = line.strip_prefix("state ") {
            let n = n.ok_or_else(|| Error::Parse("state before 'n' header".into()))?;
            state = Some(parse_path(n, v)?);
        } else if line == "rc" || line.starts_with("rc ") {
            let n = n.ok_or_else(|| Error::Parse("rc before 'n' header".into()))?;
            rc = Some(crate::rigged::parse_rc(n, line.strip_prefix("rc").unwrap())?);
        } else {
            return Err(Error::Parse(format!("unrecognized line {line:?}")));
        }
    }
    match (state, rc) {
        (Some(p), Some(rc)) => Ok((p, rc)),
        _ => Err(Error::Parse("need both 'state' and 'rc' lines".into())),
    }
}

/// Reads a checked-in data file next to this crate.
#[cfg(test)]
pub(crate) fn load_trace(name: &str) -> (usize, Vec<Path>) {
    let text = std::fs::read_to_string(format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR")))
        .unwrap();
    parse_trace(&text).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn box_text_forms() {
        let b = parse_box(4, "1 1 1 3 -4 -4 -2").unwrap();
        assert_eq!(b.zeta(), &[3, 0, 1, 0, 2, 0, 1, 0]);
        assert_eq!(format_box(&b), "1 1 1 3 -4 -4 -2");
        assert_eq!(format_box_zeta(&b), "(3,0,1,0,2,0,1,0)");
        assert_eq!(parse_box(4, "(3,0,1,0,2,0,1,0)").unwrap(), b);
        assert_eq!(parse_box(4, " ( 3, 0,1,0,2,0,1,0 ) ").unwrap(), b);
    }

    #[test]
    fn path_text_form() {
        let p = parse_path(3, "1 1 | 2 -3 | (0,0,1,0,1,0)").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.shape(), vec![2, 2, 2]);
        assert_eq!(format_path(&p), "1 1 | 2 -3 | 3 -2");
        assert_eq!(parse_path(3, &format_path(&p)).unwrap(), p);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_box(3, "").is_err());
        assert!(parse_box(3, "0").is_err());
        assert!(parse_box(3, "4").is_err());
        assert!(parse_box(3, "-4").is_err());
        assert!(parse_box(3, "1 x").is_err());
        assert!(parse_box(3, "(1,2").is_err());
        assert!(parse_box(3, "(1,2,3)").is_err());
        assert!(parse_box(3, "(1,0,1,1,0,0)").is_err());
        assert!(parse_path(3, "1 | | 2").is_err());
    }

    proptest! {
        #[test]
        fn roundtrip_random_boxes(n in 3usize..=5, raw in proptest::collection::vec(0i64..=3, 10), kill_bar in proptest::bool::ANY) {
            let mut zeta = raw[..2 * n].to_vec();
            if kill_bar { zeta[n] = 0 } else { zeta[n - 1] = 0 }
            let b = BoxState::new(n, zeta).unwrap();
            prop_assert_eq!(parse_box(n, &format_box(&b)).unwrap(), b.clone());
            prop_assert_eq!(parse_box(n, &format_box_zeta(&b)).unwrap(), b);
        }
    }
}
