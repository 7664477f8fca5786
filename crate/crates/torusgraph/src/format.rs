use crate::graph::{Color, Edge, TorusGraph, ValidationError};
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("SyntaxError at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("ValidationError {0}")]
    Invalid(#[from] ValidationError),
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
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

struct Cursor {
    line: usize,
}

impl Cursor {
    fn err<T>(&self, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { line: self.line, col, msg: msg.into() })
    }

    fn int<T: std::str::FromStr>(&self, t: (usize, &str), what: &str) -> Result<T, ParseError> {
        t.1.parse().or_else(|_| self.err(t.0, format!("expected {what}, found `{}`", t.1)))
    }

    /// A vertex id, bare or with a colour prefix.
    fn vertex(&self, t: (usize, &str)) -> Result<(Option<Color>, usize), ParseError> {
        let (c, rest) = match t.1.as_bytes().first() {
            Some(b'b') => (Some(Color::Black), &t.1[1..]),
            Some(b'w') => (Some(Color::White), &t.1[1..]),
            _ => (None, t.1),
        };
        Ok((c, self.int((t.0, rest), "vertex id")?))
    }
}

/// Parses and validates a `.tg` document.
pub fn parse_graph(text: &str) -> Result<TorusGraph, ParseError> {
    let mut header = false;
    let mut black: Option<usize> = None;
    let mut white: Option<usize> = None;
    let mut edges = Vec::new();
    let mut rb: Vec<Option<Vec<usize>>> = Vec::new();
    let mut rw: Vec<Option<Vec<usize>>> = Vec::new();
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let cur = Cursor { line: n + 1 };
        last_line = n + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body);
        let Some(&(col, kw)) = toks.first() else { continue };
        if !header {
            if toks.iter().map(|t| t.1).collect::<Vec<_>>() != ["torus-graph", "v1"] {
                return cur.err(col, "expected header `torus-graph v1`");
            }
            header = true;
            continue;
        }
        match kw {
            "black" | "white" => {
                if toks.len() != 2 {
                    return cur.err(col, format!("`{kw}` takes one count"));
                }
                let slot = if kw == "black" { &mut black } else { &mut white };
                if slot.is_some() {
                    return cur.err(col, format!("duplicate `{kw}` line"));
                }
                if !edges.is_empty() {
                    return cur.err(col, "vertex counts must precede edges");
                }
                let k: usize = cur.int(toks[1], "vertex count")?;
                if k == 0 {
                    return cur.err(toks[1].0, "vertex count must be positive");
                }
                *slot = Some(k);
                if kw == "black" {
                    rb = vec![None; k];
                } else {
                    rw = vec![None; k];
                }
            }
            "edge" => {
                let (Some(nb), Some(nw)) = (black, white) else {
                    return cur.err(col, "edge before `black`/`white` counts");
                };
                if toks.len() != 5 {
                    return cur.err(col, "expected `edge <black> <white> <dx> <dy>`");
                }
                let id = edges.len();
                let (cb, b) = cur.vertex(toks[1])?;
                let (cw, w) = cur.vertex(toks[2])?;
                if cb == Some(Color::White) {
                    return Err(ValidationError::NotBipartite { edge: id, color: Color::White }.into());
                }
                if cw == Some(Color::Black) {
                    return Err(ValidationError::NotBipartite { edge: id, color: Color::Black }.into());
                }
                if b >= nb {
                    return cur.err(toks[1].0, format!("black id {b} out of range"));
                }
                if w >= nw {
                    return cur.err(toks[2].0, format!("white id {w} out of range"));
                }
                let dx = cur.int(toks[3], "integer offset")?;
                let dy = cur.int(toks[4], "integer offset")?;
                edges.push(Edge { black: b, white: w, offset: (dx, dy) });
            }
            "rot" => {
                let Some(&(vcol, vt)) = toks.get(1) else {
                    return cur.err(col, "expected `rot b<i>: <edges>`");
                };
                let Some(name) = vt.strip_suffix(':') else {
                    return cur.err(vcol, "expected `:` after the vertex");
                };
                let (c, v) = cur.vertex((vcol, name))?;
                let table = match c {
                    Some(Color::Black) => &mut rb,
                    Some(Color::White) => &mut rw,
                    None => return cur.err(vcol, "rotation vertex needs a `b` or `w` prefix"),
                };
                if v >= table.len() {
                    return cur.err(vcol, format!("vertex {name} out of range"));
                }
                if table[v].is_some() {
                    return cur.err(vcol, format!("duplicate rotation for {name}"));
                }
                let ids = toks[2..]
                    .iter()
                    .map(|&t| {
                        let e: usize = cur.int(t, "edge id")?;
                        if e >= edges.len() {
                            return cur.err(t.0, format!("edge {e} not declared"));
                        }
                        Ok(e)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                table[v] = Some(ids);
            }
            other => return cur.err(col, format!("unknown directive `{other}`")),
        }
    }
    let cur = Cursor { line: last_line.max(1) };
    if !header {
        return cur.err(1, "missing header");
    }
    if black.is_none() || white.is_none() {
        return cur.err(1, "missing `black` or `white` count");
    }
    let rb = rb.into_iter().map(Option::unwrap_or_default).collect();
    let rw = rw.into_iter().map(Option::unwrap_or_default).collect();
    Ok(TorusGraph::new(edges, rb, rw)?)
}

/// Canonical text: fixed line order, rotations starting at their least id.
pub fn serialize_graph(g: &TorusGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "torus-graph v1");
    let _ = writeln!(s, "black {}", g.black_count());
    let _ = writeln!(s, "white {}", g.white_count());
    for e in g.edges() {
        let _ = writeln!(s, "edge {} {} {} {}", e.black, e.white, e.offset.0, e.offset.1);
    }
    for (prefix, rots) in [("b", g.black_rotations()), ("w", g.white_rotations())] {
        for (i, r) in rots.iter().enumerate() {
            let ids: Vec<String> = r.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "rot {prefix}{i}: {}", ids.join(" "));
        }
    }
    s
}
