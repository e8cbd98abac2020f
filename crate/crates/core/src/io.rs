//! Line-oriented instance files:
//!
//! ```text
//! n m t variant        # variant is `restricted` or `kpq`
//! p q                  # kpq only
//! u v [w]              # m lines, 0-based; all weights present or none
//! ```
//!
//! Blank lines and `#` comments are ignored.

use crate::detect::Variant;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub variant: Variant,
    /// False when the file carries no weights.
    pub weighted: bool,
}

fn malformed(line: usize, message: impl Into<String>) -> Error {
    Error::Malformed {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<i64>> {
    fields
        .iter()
        .map(|f| f.parse::<i64>().map_err(|_| malformed(line, format!("not an integer: {f:?}"))))
        .collect()
}

fn index(line: usize, x: i64) -> Result<usize> {
    usize::try_from(x).map_err(|_| malformed(line, format!("negative count or vertex {x}")))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| malformed(1, "empty instance"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(malformed(hl, "header must be `n m t variant`"));
    }
    let nums = numbers(hl, &fields[..3])?;
    let (n, m, t) = (index(hl, nums[0])?, index(hl, nums[1])?, index(hl, nums[2])?);
    let variant = match fields[3] {
        "restricted" => Variant::Restricted,
        "kpq" => {
            let (pl, line) = lines.next().ok_or_else(|| malformed(hl, "missing `p q` line"))?;
            let pq: Vec<&str> = line.split_whitespace().collect();
            if pq.len() != 2 {
                return Err(malformed(pl, "expected `p q`"));
            }
            let v = numbers(pl, &pq)?;
            Variant::KpqFree {
                p: index(pl, v[0])?,
                q: index(pl, v[1])?,
            }
        }
        other => return Err(malformed(hl, format!("unknown variant {other:?}"))),
    };
    variant.validate(t)?;
    let mut edges = Vec::with_capacity(m);
    let mut weighted = None;
    for (ln, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        let has_weight = match f.len() {
            2 => false,
            3 => true,
            _ => return Err(malformed(ln, "edge line must be `u v` or `u v w`")),
        };
        if *weighted.get_or_insert(has_weight) != has_weight {
            return Err(malformed(ln, "either every edge has a weight or none does"));
        }
        let v = numbers(ln, &f)?;
        let w = if has_weight { v[2] } else { 1 };
        edges.push((index(ln, v[0])?, index(ln, v[1])?, w));
    }
    if edges.len() != m {
        return Err(malformed(hl, format!("header says {m} edges, found {}", edges.len())));
    }
    Ok(Instance {
        graph: Graph::new(n, t, &edges)?,
        variant,
        weighted: weighted.unwrap_or(false),
    })
}

pub fn write_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    match inst.variant {
        Variant::Restricted => out.push_str(&format!("{} {} {} restricted\n", g.n(), g.m(), g.t())),
        Variant::KpqFree { p, q } => out.push_str(&format!("{} {} {} kpq\n{p} {q}\n", g.n(), g.m(), g.t())),
    }
    for e in g.edges() {
        if inst.weighted {
            out.push_str(&format!("{} {} {}\n", e.u, e.v, e.weight / 2));
        } else {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
    }
    out
}
