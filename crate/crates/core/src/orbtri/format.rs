//! The `.orb` text format.
//!
//! ```text
//! # comment
//! tets 1
//! glue 0 0 -> 0 1 perm 1230
//! glue 0 2 -> 0 3 perm 0132
//! order 1 3
//! ```
//!
//! `order e p` refers to edge classes numbered by first appearance over
//! `(tet, edge)`; classes not listed have order 1.

use super::{Gluing, GluingTable, OrbifoldTriangulation};
use crate::error::{OrbError, Result};
use crate::perm::Perm4;

fn perr(line: usize, msg: impl Into<String>) -> OrbError {
    OrbError::Parse { line, msg: msg.into() }
}

pub fn parse(text: &str) -> Result<OrbifoldTriangulation> {
    let mut table: Option<GluingTable> = None;
    let mut orders: Vec<(usize, u32, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| -> Result<usize> {
            s.parse::<usize>().map_err(|_| perr(lineno, format!("expected integer, got {s:?}")))
        };
        match words[0] {
            "tets" => {
                if words.len() != 2 {
                    return Err(perr(lineno, "usage: tets N"));
                }
                if table.is_some() {
                    return Err(perr(lineno, "duplicate tets line"));
                }
                table = Some(GluingTable::new(num(words[1])?));
            }
            "glue" => {
                let tab = table.as_mut().ok_or_else(|| perr(lineno, "glue before tets"))?;
                if words.len() != 8 || words[3] != "->" || words[6] != "perm" {
                    return Err(perr(lineno, "usage: glue t f -> t' f' perm abcd"));
                }
                let (t, f, t2, f2) = (num(words[1])?, num(words[2])?, num(words[4])?, num(words[5])?);
                let n = tab.tet_count();
                if t >= n || t2 >= n || f > 3 || f2 > 3 {
                    return Err(perr(lineno, "tetrahedron or face out of range"));
                }
                let perm = Perm4::parse(words[7])
                    .ok_or(OrbError::MalformedPermutation { tet: t, face: f })?;
                if perm.apply(f) != f2 {
                    return Err(OrbError::MalformedPermutation { tet: t, face: f });
                }
                if tab.get(t, f).is_some() || tab.get(t2, f2).is_some() {
                    return Err(perr(lineno, format!("face ({t},{f}) or ({t2},{f2}) glued twice")));
                }
                tab.set_raw(t, f, Some(Gluing { tet: t2, perm }));
                tab.set_raw(t2, f2, Some(Gluing { tet: t, perm: perm.inverse() }));
            }
            "order" => {
                if words.len() != 3 {
                    return Err(perr(lineno, "usage: order e p"));
                }
                let p = num(words[2])? as u32;
                if p == 0 {
                    return Err(OrbError::InvalidOrder(0));
                }
                orders.push((num(words[1])?, p, lineno));
            }
            w => return Err(perr(lineno, format!("unknown keyword {w:?}"))),
        }
    }
    let table = table.ok_or_else(|| perr(0, "missing tets line"))?;
    let base = OrbifoldTriangulation::new(table);
    let mut ords = base.orders().to_vec();
    for (e, p, lineno) in orders {
        if e >= ords.len() {
            return Err(perr(lineno, format!("edge class {e} out of range")));
        }
        ords[e] = p;
    }
    OrbifoldTriangulation::with_orders(base.table().clone(), ords)
}

pub fn serialize(tri: &OrbifoldTriangulation) -> String {
    let mut out = format!("tets {}\n", tri.tet_count());
    for t in 0..tri.tet_count() {
        for f in 0..4 {
            if let Some(g) = tri.table().get(t, f) {
                let f2 = g.perm.apply(f);
                if (t, f) <= (g.tet, f2) {
                    out.push_str(&format!("glue {t} {f} -> {} {f2} perm {}\n", g.tet, g.perm));
                }
            }
        }
    }
    for (c, &p) in tri.orders().iter().enumerate() {
        if p != 1 {
            out.push_str(&format!("order {c} {p}\n"));
        }
    }
    out
}
