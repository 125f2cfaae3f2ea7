//! Text format for modules given by arrow matrices.
//!
//! ```text
//! module
//! dim x=2 y=1
//! map a = [[1,0]]
//! map d = [[0,1],[0,0]]
//! ```
//!
//! Matrices act on column vectors: `dim tgt` rows, `dim src` columns. Entries are
//! integers or fractions `p/q`. Vertices left out of `dim` are zero and arrows left
//! out of `map` act by zero.

use std::sync::Arc;

use dircat::exactlin::{Field, Matrix};
use dircat::modcat::Representation;
use dircat::presentation::AlgebraTable;
use num_bigint::BigInt;

use crate::error::ParseError;

pub fn parse_module<F: Field>(a: &Arc<AlgebraTable<F>>, text: &str) -> Result<Representation<F>, ParseError> {
    let f = a.field();
    let mut header = false;
    let mut dims: Option<Vec<usize>> = None;
    let mut maps: Vec<Option<(usize, Vec<Vec<F::Elem>>)>> = vec![None; a.arrows().len()];
    let mut last = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        last = line_no;
        let col = line.len() - trimmed.len() + 1;
        let err = |c: usize, m: String| ParseError::new(line_no, c, m);
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_col = col + keyword.len() + 1;
        match keyword {
            "module" if !header && rest.trim().is_empty() => header = true,
            _ if !header => return Err(err(col, "expected `module`".into())),
            "dim" => {
                if dims.is_some() {
                    return Err(err(col, "dimensions declared twice".into()));
                }
                let mut d = vec![0; a.vertex_count()];
                let mut offset = 0;
                for item in rest.split_whitespace() {
                    let at = rest_col + rest[offset..].find(item).unwrap() + offset;
                    offset = at - rest_col + item.len();
                    let (name, n) = item
                        .split_once('=')
                        .ok_or_else(|| err(at, format!("expected `<vertex>=<n>`, found `{item}`")))?;
                    let v = a.vertex_index(name).map_err(|e| err(at, e.to_string()))?;
                    d[v] = n.parse().map_err(|_| err(at + name.len() + 1, format!("bad dimension `{n}`")))?;
                }
                dims = Some(d);
            }
            "map" => {
                let (name, matrix) = rest
                    .split_once('=')
                    .ok_or_else(|| err(col, "expected `map <arrow> = [[...]]`".into()))?;
                let name = name.trim();
                let arrow = a
                    .arrows()
                    .iter()
                    .position(|ar| ar.name == name)
                    .ok_or_else(|| err(rest_col, format!("unknown arrow `{name}`")))?;
                if maps[arrow].is_some() {
                    return Err(err(rest_col, format!("arrow `{name}` mapped twice")));
                }
                let mcol = rest_col + rest.find('=').unwrap() + 1;
                maps[arrow] = Some((line_no, parse_matrix(f, matrix, line_no, mcol)?));
            }
            other => return Err(err(col, format!("unknown declaration `{other}`"))),
        }
    }
    if !header {
        return Err(ParseError::new(1, 1, "expected `module`"));
    }
    let dims = dims.unwrap_or_else(|| vec![0; a.vertex_count()]);
    let mut mats = Vec::with_capacity(maps.len());
    for (arrow, entry) in maps.into_iter().enumerate() {
        let info = &a.arrows()[arrow];
        let (rows, cols) = (dims[info.tgt], dims[info.src]);
        let m = match entry {
            None => Matrix::zeros(f, rows, cols),
            Some((line_no, rs)) => {
                let shape_ok = if rows == 0 { rs.is_empty() } else { rs.len() == rows && rs.iter().all(|r| r.len() == cols) };
                if !shape_ok {
                    return Err(ParseError::new(line_no, 1, format!("map `{}` must be {rows} x {cols}", info.name)));
                }
                Matrix::from_rows(f, cols, rs).map_err(|e| ParseError::new(line_no, 1, e.to_string()))?
            }
        };
        mats.push(m);
    }
    Representation::from_arrow_maps(a, dims, mats).map_err(|e| ParseError::new(last, 1, e.to_string()))
}

fn parse_entry<F: Field>(f: &F, s: &str) -> Option<F::Elem> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    f.from_ratio(&n, &d)
}

fn parse_matrix<F: Field>(f: &F, text: &str, line: usize, col: usize) -> Result<Vec<Vec<F::Elem>>, ParseError> {
    let inner_start = text.find('[').ok_or_else(|| ParseError::new(line, col, "expected `[`"))?;
    let body = text.trim_end();
    if !body.ends_with(']') {
        return Err(ParseError::new(line, col + body.len(), "expected `]`"));
    }
    let body = &body[inner_start + 1..body.len() - 1];
    let base = col + inner_start + 1;
    let mut rows = Vec::new();
    let mut pos = 0;
    let bytes = body.as_bytes();
    while pos < body.len() {
        match bytes[pos] {
            b' ' | b'\t' | b',' => pos += 1,
            b'[' => {
                let close = body[pos..]
                    .find(']')
                    .map(|i| i + pos)
                    .ok_or_else(|| ParseError::new(line, base + pos, "unclosed row"))?;
                let row_text = &body[pos + 1..close];
                let mut row = Vec::new();
                let mut off = pos + 1;
                for item in row_text.split(',') {
                    let at = base + off + item.len() - item.trim_start().len();
                    off += item.len() + 1;
                    if item.trim().is_empty() {
                        if row_text.trim().is_empty() {
                            break;
                        }
                        return Err(ParseError::new(line, at, "empty entry"));
                    }
                    let e = parse_entry(f, item.trim())
                        .ok_or_else(|| ParseError::new(line, at, format!("bad entry `{}`", item.trim())))?;
                    row.push(e);
                }
                rows.push(row);
                pos = close + 1;
            }
            _ => return Err(ParseError::new(line, base + pos, "expected `[` to start a row")),
        }
    }
    Ok(rows)
}

pub fn serialize_module<F: Field>(m: &Representation<F>) -> String {
    let a = m.algebra();
    let f = m.field();
    let mut out = String::from("module\ndim");
    for (v, name) in a.vertices().iter().enumerate() {
        out += &format!(" {name}={}", m.dim(v));
    }
    out += "\n";
    for (k, info) in a.arrows().iter().enumerate() {
        let mat = m.arrow_map(k);
        if mat.is_zero() {
            continue;
        }
        let rows: Vec<String> = (0..mat.rows())
            .map(|i| format!("[{}]", mat.row(i).iter().map(|e| f.format(e)).collect::<Vec<_>>().join(",")))
            .collect();
        out += &format!("map {} = [{}]\n", info.name, rows.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver_format::parse_presentation;
    use dircat::exactlin::{PrimeField, Rationals};
    use dircat::modcat::{injective, projective};
    use dircat::presentation::build_algebra;

    fn second() -> Arc<AlgebraTable<Rationals>> {
        let p = parse_presentation("vertex x y\narrow d: x -> x\narrow a: x -> y\nrel a*d\nrel d*d\n").unwrap();
        Arc::new(build_algebra(&p, &Rationals, None).unwrap())
    }

    #[test]
    fn projective_at_x() {
        let a = second();
        let m = parse_module(&a, "module\ndim x=2 y=1\nmap d = [[0,0],[1,0]]\nmap a = [[1,0]]\n").unwrap();
        assert!(dircat::modcat::is_isomorphic(&m, &projective(&a, 0), 0).unwrap().is_some());
    }

    #[test]
    fn round_trips() {
        let a = second();
        for m in [projective(&a, 0), injective(&a, 0), injective(&a, 1)] {
            let text = serialize_module(&m);
            assert_eq!(parse_module(&a, &text).unwrap(), m);
        }
        let half = parse_module(&a, "module\ndim y=1 x=1\nmap a = [[1/2]]\n").unwrap();
        assert_eq!(serialize_module(&half), "module\ndim x=1 y=1\nmap a = [[1/2]]\n");
    }

    #[test]
    fn fractions_over_prime_fields() {
        let p = parse_presentation("vertex x y\narrow a: x -> y\n").unwrap();
        let a = Arc::new(build_algebra(&p, &PrimeField::new(5).unwrap(), None).unwrap());
        let m = parse_module(&a, "module\ndim x=1 y=1\nmap a = [[1/2]]\n").unwrap();
        assert_eq!(m.arrow_map(0).get(0, 0), &3);
        assert!(parse_module(&a, "module\ndim x=1 y=1\nmap a = [[1/5]]\n").is_err());
    }

    #[test]
    fn rejects_non_modules_and_bad_shapes() {
        let a = second();
        let e = parse_module(&a, "module\ndim x=1\nmap d = [[1]]\n").unwrap_err();
        assert!(e.message.contains("not a module"), "{}", e.message);
        let e = parse_module(&a, "module\ndim x=1 y=1\nmap a = [[1,2]]\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_module(&a, "module\ndim x=1 q=1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));
        let e = parse_module(&a, "module\ndim x=1 y=1\nmap a = [[z]]\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 11));
        assert!(parse_module(&a, "dim x=1\n").is_err());
    }
}
