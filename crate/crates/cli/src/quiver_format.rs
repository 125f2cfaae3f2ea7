//! Text format for quiver presentations.
//!
//! ```text
//! field Q
//! vertex x y
//! arrow d: x -> x
//! arrow a: x -> y
//! rel a*d
//! rel d*d
//! order x < y
//! ```
//!
//! Words compose right to left. A relation is a signed sum of terms
//! `[<int>] a1*...*am`. `#` starts a comment.

use dircat::exactlin::FieldSpec;
use dircat::presentation::{LinearOrder, PathWord, Presentation, Quiver};
use dircat::Error;

use crate::error::ParseError;

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(s, t)| (line[..s].chars().count() + 1, t)).collect()
}

fn parse_field(text: &str) -> Option<FieldSpec> {
    if text == "Q" {
        return Some(FieldSpec::Rationals);
    }
    let p = text.strip_prefix('F')?.parse().ok()?;
    FieldSpec::Prime(p).validate().ok()
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut field = None;
    let mut quiver = Quiver::new::<&str>(&[], &[]).expect("empty quiver");
    let mut relations: Vec<Vec<(i64, PathWord)>> = Vec::new();
    let mut relation_lines = Vec::new();
    let mut order: Option<(usize, String)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        let err = |c: usize, m: String| ParseError::new(line_no, c, m);
        match keyword {
            "field" => {
                if toks.len() != 2 {
                    return Err(err(col, "expected `field Q` or `field F<p>`".into()));
                }
                if field.is_some() {
                    return Err(err(col, "field declared twice".into()));
                }
                let (c, t) = toks[1];
                field = Some(parse_field(t).ok_or_else(|| err(c, format!("unknown field `{t}`")))?);
            }
            "vertex" => {
                if toks.len() < 2 {
                    return Err(err(col, "expected at least one vertex name".into()));
                }
                for &(c, name) in &toks[1..] {
                    quiver.add_vertex(name).map_err(|e| err(c, e.to_string()))?;
                }
            }
            "arrow" => {
                let rest = toks.get(1).map_or(line.len(), |t| t.0 - 1);
                let spec = &line[rest..];
                let (name, ends) = spec
                    .split_once(':')
                    .ok_or_else(|| err(col, "expected `arrow <name>: <src> -> <tgt>`".into()))?;
                let (src, tgt) = ends
                    .split_once("->")
                    .ok_or_else(|| err(col, "expected `->` between source and target".into()))?;
                let (name, src, tgt) = (name.trim(), src.trim(), tgt.trim());
                if name.is_empty() || src.is_empty() || tgt.is_empty() || name.contains(char::is_whitespace) {
                    return Err(err(col, "expected `arrow <name>: <src> -> <tgt>`".into()));
                }
                let at = |needle: &str| line.find(needle).map_or(col, |i| line[..i].chars().count() + 1);
                quiver.add_arrow(name, src, tgt).map_err(|e| {
                    let c = match &e {
                        Error::UnknownVertex(v) => at(v),
                        _ => at(name),
                    };
                    err(c, e.to_string())
                })?;
            }
            "rel" => {
                relations.push(parse_relation(&quiver, &toks[1..], line_no, col)?);
                relation_lines.push((line_no, col));
            }
            "order" => {
                if order.is_some() {
                    return Err(err(col, "order declared twice".into()));
                }
                let start = toks.get(1).map_or(line.len(), |t| t.0 - 1);
                order = Some((line_no, line[start..].trim().to_string()));
            }
            other => return Err(err(col, format!("unknown declaration `{other}`"))),
        }
    }
    let declared = match order {
        Some((line_no, text)) => Some(
            LinearOrder::parse(&text, quiver.vertices()).map_err(|e| ParseError::new(line_no, 7, e.to_string()))?,
        ),
        None => None,
    };
    Presentation::new(field.unwrap_or(FieldSpec::Rationals), quiver, relations, declared).map_err(|e| {
        let (line, column) = match &e {
            Error::EmptyRelation { index } | Error::NonParallelTerms { index } | Error::ShortRelationTerm { index, .. } => {
                relation_lines[*index]
            }
            _ => (1, 1),
        };
        ParseError::new(line, column, e.to_string())
    })
}

fn parse_relation(quiver: &Quiver, toks: &[(usize, &str)], line: usize, col: usize) -> Result<Vec<(i64, PathWord)>, ParseError> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut signed = false;
    let mut coeff: Option<i64> = None;
    let mut expecting_term = true;
    for &(c, tok) in toks {
        match tok {
            "+" | "-" => {
                if coeff.is_some() {
                    return Err(ParseError::new(line, c, "a coefficient must be followed by a word"));
                }
                if signed {
                    return Err(ParseError::new(line, c, "repeated sign"));
                }
                if tok == "-" {
                    sign = -1;
                }
                signed = true;
                expecting_term = true;
            }
            _ => {
                if !expecting_term {
                    return Err(ParseError::new(line, c, "expected `+` or `-` between terms"));
                }
                if let Ok(n) = tok.parse::<i64>() {
                    if coeff.is_some() {
                        return Err(ParseError::new(line, c, "two coefficients in a row"));
                    }
                    coeff = Some(n);
                    continue;
                }
                let (s, word) = match tok.strip_prefix('-') {
                    Some(w) => (-1, w),
                    None => (1, tok),
                };
                let w = quiver.parse_word(word).map_err(|e| ParseError::new(line, c, e.to_string()))?;
                terms.push((sign * s * coeff.take().unwrap_or(1), w));
                sign = 1;
                signed = false;
                expecting_term = false;
            }
        }
    }
    if terms.is_empty() || expecting_term {
        let c = toks.last().map_or(col, |t| t.0);
        return Err(ParseError::new(line, c, "relation ends without a term"));
    }
    Ok(terms)
}

/// Canonical text; `parse_presentation` inverts it exactly.
pub fn serialize_presentation(p: &Presentation) -> String {
    let q = p.quiver();
    let mut out = format!("field {}\n", p.field());
    if !q.vertices().is_empty() {
        out += &format!("vertex {}\n", q.vertices().join(" "));
    }
    for a in q.arrows() {
        out += &format!("arrow {}: {} -> {}\n", a.name, q.vertices()[a.src], q.vertices()[a.tgt]);
    }
    for r in p.relations() {
        out += "rel";
        for (k, (c, w)) in r.terms().iter().enumerate() {
            let word = w.display(q);
            out += &match (k, *c) {
                (0, 1) => format!(" {word}"),
                (0, c) => format!(" {c} {word}"),
                (_, 1) => format!(" + {word}"),
                (_, -1) => format!(" - {word}"),
                (_, c) if c < 0 => format!(" - {} {word}", c.unsigned_abs()),
                (_, c) => format!(" + {c} {word}"),
            };
        }
        out += "\n";
    }
    if let Some(o) = p.declared_order() {
        out += &format!("order {}\n", o.display(q.vertices()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SECOND: &str = "field Q\nvertex x y\narrow d: x -> x\narrow a: x -> y\nrel a*d\nrel d*d\norder x < y\n";

    #[test]
    fn loop_and_arrow_with_two_relations() {
        let p = parse_presentation(SECOND).unwrap();
        assert_eq!(p.quiver().vertex_count(), 2);
        assert_eq!(p.quiver().arrows().len(), 2);
        assert_eq!(p.relations().len(), 2);
        assert_eq!(serialize_presentation(&p), SECOND);
    }

    #[test]
    fn hereditary_without_relations() {
        let p = parse_presentation("vertex x y\narrow a: x -> y\n").unwrap();
        assert!(p.relations().is_empty());
        assert_eq!(p.field(), FieldSpec::Rationals);
    }

    #[test]
    fn signed_terms_and_comments() {
        let text = "field F3 # small field\nvertex x y z\narrow a: x -> y\narrow b: y -> z\narrow c: x -> z\narrow e: z -> z\nrel 2 b*a - e*c\nrel -b*a + -1 e*c\n";
        let p = parse_presentation(text).unwrap();
        let terms: Vec<i64> = p.relations().iter().flat_map(|r| r.terms().iter().map(|t| t.0)).collect();
        assert_eq!(terms, [2, -1, -1, -1]);
        let again = serialize_presentation(&p);
        assert_eq!(parse_presentation(&again).unwrap(), p);
        assert_eq!(serialize_presentation(&parse_presentation(&again).unwrap()), again);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_presentation("vertex x y z\narrow a: x -> y\narrow b: x -> z\nrel a*a").unwrap_err();
        assert_eq!((e.line, e.column), (4, 5));
        let e = parse_presentation("vertex x y z\narrow a: x -> y\narrow b: x -> z\narrow c: y -> y\narrow d: z -> z\nrel c*a - d*b\n")
            .unwrap_err();
        assert_eq!(e.line, 6);
        assert!(e.message.contains("non-parallel"), "{}", e.message);
        let e = parse_presentation("vertex x\narrow a: x -> q\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 15));
        let e = parse_presentation("vertex x\narrow d: x -> x\nrel d\n").unwrap_err();
        assert!(e.message.contains("length < 2"));
        let e = parse_presentation("vertex x\n  bogus\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_presentation("field F4\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        assert!(parse_presentation("vertex x\narrow d: x -> x\nrel d*d +\n").is_err());
        assert!(parse_presentation("vertex x\narrow d: x -> x\nrel d*d d*d\n").is_err());
        assert!(parse_presentation("vertex x\narrow d: x -> x\nrel d*d + - d*d\n").is_err());
    }
}
