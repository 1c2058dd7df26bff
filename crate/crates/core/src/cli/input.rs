//! Quiver text format: `vertices <n>`, then `arrow <s> <t>` lines with
//! 1-based vertices. `#` starts a comment. Inline sources may separate
//! lines with `;`.

use crate::error::{Error, Result};
use crate::quiverrep::Quiver;

pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let mut vertices: Option<usize> = None;
    let mut arrows = Vec::new();
    for (no, raw) in text.split(['\n', ';']).enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let num = |w: &str| -> Result<usize> {
            w.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: expected a nonnegative integer, got {w:?}", no + 1)))
        };
        match words.as_slice() {
            ["vertices", n] => {
                if vertices.is_some() {
                    return Err(Error::Parse(format!("line {}: repeated vertices line", no + 1)));
                }
                vertices = Some(num(n)?);
            }
            ["arrow", s, t] => {
                let Some(n) = vertices else {
                    return Err(Error::Parse(format!("line {}: arrow before the vertices line", no + 1)));
                };
                let (s, t) = (num(s)?, num(t)?);
                for v in [s, t] {
                    if v == 0 || v > n {
                        return Err(Error::InvalidVertex(v));
                    }
                }
                arrows.push((s - 1, t - 1));
            }
            _ => return Err(Error::Parse(format!("line {}: cannot read {line:?}", no + 1))),
        }
    }
    let n = vertices.ok_or_else(|| Error::Parse("missing vertices line".into()))?;
    if n == 0 {
        return Err(Error::Parse("a quiver needs at least one vertex".into()));
    }
    Quiver::new(n, arrows)
}

/// The inverse of [`parse_quiver`].
pub fn format_quiver(q: &Quiver) -> String {
    let mut s = format!("vertices {}\n", q.vertex_count());
    for &(a, b) in q.arrows() {
        s.push_str(&format!("arrow {} {}\n", a + 1, b + 1));
    }
    s
}
