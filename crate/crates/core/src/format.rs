//! The plain-text quiver file format.
//!
//! ```text
//! # the 2-cycle
//! vertices: 1 2
//! arrows: a: 1 -> 2, b: 2 -> 1
//! relations: a b, b a
//! char: 0
//! ```
//!
//! Sections may appear in any order and may continue over following lines.
//! Entries are separated by commas or newlines (vertices also by spaces).
//! `#` starts a comment that runs to the end of the line.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::linalg::{Field, FieldError};
use crate::quiver::BoundQuiver;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: unknown vertex `{label}`")]
    UnknownVertex { line: usize, column: usize, label: String },
    #[error("{line}:{column}: unknown arrow `{label}`")]
    UnknownArrow { line: usize, column: usize, label: String },
    #[error("{line}:{column}: relation `{first} {second}` is not composable")]
    NotComposable { line: usize, column: usize, first: String, second: String },
    #[error("{line}:{column}: duplicate label `{label}`")]
    Duplicate { line: usize, column: usize, label: String },
    #[error("{line}:{column}: {source}")]
    Characteristic { line: usize, column: usize, source: FieldError },
    #[error("no vertices declared")]
    NoVertices,
}

/// A parsed quiver file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverFile {
    pub quiver: BoundQuiver,
    /// `None` when the file has no `char:` line (characteristic 0).
    pub characteristic: Option<Field>,
}

impl QuiverFile {
    pub fn field(&self) -> Field {
        self.characteristic.unwrap_or(Field::Rational)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Vertices,
    Arrows,
    Relations,
    Char,
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || matches!(c, ',' | ':' | '#')) && !s.contains("->")
}

/// Splits `text` (starting at 1-based `column`) on commas, trimming each
/// piece and recording where it starts.
fn split_entries(text: &str, line: usize, column: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let trimmed = piece.trim();
        if !trimmed.is_empty() {
            let col = column + text[..start + lead].chars().count();
            out.push(Token { text: trimmed, line, column: col });
        }
        start += piece.len() + 1;
    }
    out
}

fn split_words<'a>(tok: &Token<'a>) -> Vec<Token<'a>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for w in tok.text.split_whitespace() {
        let at = tok.text[offset..].find(w).unwrap() + offset;
        out.push(Token { text: w, line: tok.line, column: tok.column + tok.text[..at].chars().count() });
        offset = at + w.len();
    }
    out
}

/// The trimmed sub-slice `part` of `tok`, with its own position.
fn piece<'a>(tok: &Token<'a>, part: &'a str) -> Token<'a> {
    let offset = part.as_ptr() as usize - tok.text.as_ptr() as usize;
    let text = part.trim();
    let lead = part.len() - part.trim_start().len();
    Token { text, line: tok.line, column: tok.column + tok.text[..offset + lead].chars().count() }
}

fn syntax(tok: &Token<'_>, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line: tok.line, column: tok.column, message: message.into() }
}

/// Parses a quiver file.
pub fn parse_quiver(text: &str) -> Result<QuiverFile, FormatError> {
    let mut section: Option<Section> = None;
    let mut vertices: Vec<Token<'_>> = Vec::new();
    let mut arrows: Vec<(Token<'_>, Token<'_>, Token<'_>)> = Vec::new();
    let mut relations: Vec<(Token<'_>, Token<'_>)> = Vec::new();
    let mut characteristic: Option<(Field, Token<'_>)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap();
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let trimmed = content.trim_start();
        let mut body = trimmed;
        let mut body_col = lead + 1;
        for (name, sec) in [
            ("vertices:", Section::Vertices),
            ("arrows:", Section::Arrows),
            ("relations:", Section::Relations),
            ("char:", Section::Char),
        ] {
            if let Some(rest) = trimmed.strip_prefix(name) {
                section = Some(sec);
                body = rest;
                body_col = lead + name.len() + 1;
                break;
            }
        }
        let Some(sec) = section else {
            let tok = Token { text: trimmed, line, column: lead + 1 };
            return Err(syntax(&tok, "expected a section header (vertices:, arrows:, relations:, char:)"));
        };
        for entry in split_entries(body, line, body_col) {
            match sec {
                Section::Vertices => vertices.extend(split_words(&entry)),
                Section::Arrows => {
                    let (label, rest) = entry
                        .text
                        .split_once(':')
                        .ok_or_else(|| syntax(&entry, "arrow entry must look like `label: source -> target`"))?;
                    let (src, tgt) = rest
                        .split_once("->")
                        .ok_or_else(|| syntax(&entry, "arrow entry must look like `label: source -> target`"))?;
                    let (l, s, t) = (piece(&entry, label), piece(&entry, src), piece(&entry, tgt));
                    for tok in [&l, &s, &t] {
                        if !valid_label(tok.text) {
                            return Err(syntax(tok, format!("invalid label `{}`", tok.text)));
                        }
                    }
                    arrows.push((l, s, t));
                }
                Section::Relations => {
                    let words = split_words(&entry);
                    let mut words = words.into_iter();
                    match (words.next(), words.next(), words.next()) {
                        (Some(a), Some(b), None) => relations.push((a, b)),
                        _ => return Err(syntax(&entry, "relation entry must be two arrow labels")),
                    }
                }
                Section::Char => {
                    if characteristic.is_some() {
                        return Err(syntax(&entry, "characteristic given twice"));
                    }
                    let p: u64 = entry
                        .text
                        .parse()
                        .map_err(|_| syntax(&entry, format!("invalid characteristic `{}`", entry.text)))?;
                    let field = Field::from_characteristic(p).map_err(|source| FormatError::Characteristic {
                        line: entry.line,
                        column: entry.column,
                        source,
                    })?;
                    characteristic = Some((field, entry));
                }
            }
        }
    }

    if vertices.is_empty() {
        return Err(FormatError::NoVertices);
    }
    let mut seen = HashSet::new();
    for v in &vertices {
        if !valid_label(v.text) {
            return Err(syntax(v, format!("invalid label `{}`", v.text)));
        }
        if !seen.insert(v.text) {
            return Err(FormatError::Duplicate { line: v.line, column: v.column, label: v.text.to_string() });
        }
    }
    let mut ends: HashMap<&str, (&str, &str)> = HashMap::new();
    for (l, s, t) in &arrows {
        for v in [s, t] {
            if !seen.contains(v.text) {
                return Err(FormatError::UnknownVertex { line: v.line, column: v.column, label: v.text.to_string() });
            }
        }
        if ends.insert(l.text, (s.text, t.text)).is_some() {
            return Err(FormatError::Duplicate { line: l.line, column: l.column, label: l.text.to_string() });
        }
    }
    for (a, b) in &relations {
        for x in [a, b] {
            if !ends.contains_key(x.text) {
                return Err(FormatError::UnknownArrow { line: x.line, column: x.column, label: x.text.to_string() });
            }
        }
        if ends[a.text].1 != ends[b.text].0 {
            return Err(FormatError::NotComposable {
                line: a.line,
                column: a.column,
                first: a.text.to_string(),
                second: b.text.to_string(),
            });
        }
    }

    let mut builder = BoundQuiver::builder();
    for v in &vertices {
        builder = builder.vertex(v.text);
    }
    for (l, s, t) in &arrows {
        builder = builder.arrow(l.text, s.text, t.text);
    }
    for (a, b) in &relations {
        builder = builder.relation(a.text, b.text);
    }
    let quiver = builder.build().expect("input was checked above").normalized();
    Ok(QuiverFile { quiver, characteristic: characteristic.map(|(f, _)| f) })
}

/// Renders a quiver file in canonical form; `parse_quiver` inverts it.
pub fn emit_quiver(file: &QuiverFile) -> String {
    let q = &file.quiver;
    let mut out = String::new();
    let labels: Vec<&str> = q.vertices().map(|v| q.vertex_label(v)).collect();
    let _ = writeln!(out, "vertices: {}", labels.join(" "));
    out.push_str("arrows:\n");
    for a in q.arrows() {
        let _ = writeln!(out, "  {}: {} -> {}", a.label, q.vertex_label(a.source), q.vertex_label(a.target));
    }
    out.push_str("relations:\n");
    for &(x, y) in q.relations() {
        let _ = writeln!(out, "  {} {}", q.arrow(x).label, q.arrow(y).label);
    }
    if let Some(f) = file.characteristic {
        let _ = writeln!(out, "char: {}", f.characteristic());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_loop_algebra() {
        let f = parse_quiver("vertices: v\narrows: a: v -> v\nrelations: a a\n").unwrap();
        assert_eq!(f.quiver.vertex_count(), 1);
        assert_eq!(f.quiver.relations().len(), 1);
        assert_eq!(f.field(), Field::Rational);
        assert_eq!(f.characteristic, None);
    }

    #[test]
    fn parses_two_cycle_with_comments_and_char() {
        let text = "# two cycle\nvertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1  # arrows\nrelations: a b, b a\nchar: 2\n";
        let f = parse_quiver(text).unwrap();
        assert_eq!(f.quiver.arrow_count(), 2);
        assert_eq!(f.quiver.relations().len(), 2);
        assert_eq!(f.field(), Field::Prime(2));
    }

    #[test]
    fn multiline_sections() {
        let text = "vertices:\n  1\n  2\n  3\narrows:\n  a: 1 -> 2\n  b: 2 -> 3\nrelations:\n  a b\n";
        let f = parse_quiver(text).unwrap();
        assert_eq!(f.quiver.vertex_count(), 3);
        assert_eq!(f.quiver.relations().len(), 1);
    }

    #[test]
    fn unknown_arrow_names_label_and_position() {
        let err = parse_quiver("vertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1\nrelations: a c\n").unwrap_err();
        assert_eq!(err, FormatError::UnknownArrow { line: 3, column: 14, label: "c".into() });
        assert!(err.to_string().contains("`c`"));
    }

    #[test]
    fn other_errors() {
        assert!(matches!(
            parse_quiver("vertices: 1 2\narrows: a: 1 -> 3\n").unwrap_err(),
            FormatError::UnknownVertex { line: 2, column: 17, .. }
        ));
        assert!(matches!(
            parse_quiver("vertices: 1 2\narrows: a: 1 -> 2\nrelations: a a\n").unwrap_err(),
            FormatError::NotComposable { .. }
        ));
        assert!(matches!(
            parse_quiver("vertices: 1\nchar: 4\n").unwrap_err(),
            FormatError::Characteristic { line: 2, column: 7, .. }
        ));
        assert!(matches!(parse_quiver("hello\n").unwrap_err(), FormatError::Syntax { line: 1, column: 1, .. }));
        assert!(matches!(
            parse_quiver("vertices: 1\narrows: a 1 2\n").unwrap_err(),
            FormatError::Syntax { line: 2, .. }
        ));
        assert!(matches!(parse_quiver("vertices: 1 1\n").unwrap_err(), FormatError::Duplicate { .. }));
        assert_eq!(parse_quiver("# nothing\n").unwrap_err(), FormatError::NoVertices);
    }

    #[test]
    fn duplicate_relations_are_merged() {
        let f = parse_quiver("vertices: v\narrows: a: v -> v\nrelations: a a, a a\n").unwrap();
        assert_eq!(f.quiver.relations().len(), 1);
    }

    #[test]
    fn round_trip() {
        for text in [
            "vertices: v\narrows: a: v -> v\nrelations: a a\n",
            "vertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1\nrelations: b a, a b\nchar: 3\n",
            "vertices: x y z\narrows: p: x -> y\n",
        ] {
            let f = parse_quiver(text).unwrap();
            let emitted = emit_quiver(&f);
            let g = parse_quiver(&emitted).unwrap();
            assert_eq!(f, g);
            assert_eq!(emit_quiver(&g), emitted);
        }
    }
}
