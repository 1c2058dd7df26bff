//! The polygon model of type A: diagonals of an `(n+3)`-gon, crossings and
//! triangulations, matched against the cluster category by structure.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbitcat::{OrbitCategory, OrbitObj};

/// Largest rank accepted by the brute-force enumerations.
pub const MAX_RANK: usize = 5;

/// A diagonal `(i, j)` of the `(n+3)`-gon with vertices `0..n+3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Diagonal {
    rank: usize,
    pub i: usize,
    pub j: usize,
}

impl Diagonal {
    pub fn new(rank: usize, i: usize, j: usize) -> Result<Diagonal> {
        let m = rank + 3;
        if rank == 0 || i >= j || j >= m || j - i < 2 || (i == 0 && j == m - 1) {
            return Err(Error::OutOfRange(format!("({i}, {j}) is not a diagonal of a {m}-gon")));
        }
        Ok(Diagonal { rank, i, j })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

pub fn diagonals(rank: usize) -> Result<Vec<Diagonal>> {
    if rank < 1 {
        return Err(Error::OutOfRange("rank must be at least 1".into()));
    }
    let m = rank + 3;
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 2)..m {
            if !(i == 0 && j == m - 1) {
                out.push(Diagonal { rank, i, j });
            }
        }
    }
    Ok(out)
}

/// True iff the endpoints strictly interleave.
pub fn crossing(a: Diagonal, b: Diagonal) -> Result<bool> {
    if a.rank != b.rank {
        return Err(Error::OutOfRange("diagonals of different polygons".into()));
    }
    let inside = |x: usize, d: Diagonal| d.i < x && x < d.j;
    let shared = a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j;
    Ok(!shared && inside(b.i, a) != inside(b.j, a))
}

/// A maximal set of pairwise non-crossing diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triangulation {
    pub diagonals: BTreeSet<Diagonal>,
}

pub fn triangulations(rank: usize) -> Result<Vec<Triangulation>> {
    let all = diagonals(rank)?;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(&all, 0, rank, &mut chosen, &mut out)?;
    Ok(out)
}

fn extend(
    all: &[Diagonal],
    from: usize,
    rank: usize,
    chosen: &mut Vec<Diagonal>,
    out: &mut Vec<Triangulation>,
) -> Result<()> {
    if chosen.len() == rank {
        out.push(Triangulation {
            diagonals: chosen.iter().copied().collect(),
        });
        return Ok(());
    }
    if all.len() - from < rank - chosen.len() {
        return Ok(());
    }
    for k in from..all.len() {
        let d = all[k];
        let mut ok = true;
        for &c in chosen.iter() {
            if crossing(c, d)? {
                ok = false;
                break;
            }
        }
        if ok {
            chosen.push(d);
            extend(all, k + 1, rank, chosen, out)?;
            chosen.pop();
        }
    }
    Ok(())
}

fn check_rank(cat: &OrbitCategory) -> Result<usize> {
    let rank = cat.db().rank();
    if rank > MAX_RANK {
        return Err(Error::OutOfRange(format!("rank {rank} exceeds {MAX_RANK}")));
    }
    Ok(rank)
}

/// `dim Ext¹(X, Y)` for all pairs of orbit indecomposables.
fn ext_table(cat: &OrbitCategory, objs: &[OrbitObj]) -> Result<Vec<Vec<usize>>> {
    objs.iter()
        .map(|&x| objs.iter().map(|&y| cat.ext1(x, y)).collect())
        .collect()
}

/// Diagonals matched to orbit indecomposables so that crossing corresponds
/// to a one-dimensional `Ext¹`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeomBijection {
    pub map: BTreeMap<Diagonal, OrbitObj>,
}

impl GeomBijection {
    pub fn get(&self, d: Diagonal) -> Option<OrbitObj> {
        self.map.get(&d).copied()
    }

    pub fn transport(&self, t: &Triangulation) -> BTreeSet<OrbitObj> {
        t.diagonals.iter().map(|d| self.map[d]).collect()
    }

    /// Re-check the defining property pair by pair.
    pub fn check(&self, cat: &OrbitCategory) -> Result<bool> {
        for (&a, &x) in &self.map {
            for (&b, &y) in &self.map {
                let expect = usize::from(crossing(a, b)?);
                if cat.ext1(x, y)? != expect {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn geom_bijection(cat: &OrbitCategory) -> Result<GeomBijection> {
    let rank = check_rank(cat)?;
    let diags = diagonals(rank)?;
    let objs = cat.indecomposables();
    if diags.len() != objs.len() {
        return Err(Error::NoBijection);
    }
    let ext = ext_table(cat, &objs)?;
    let left: Vec<Vec<bool>> = diags
        .iter()
        .map(|&a| diags.iter().map(|&b| crossing(a, b)).collect())
        .collect::<Result<_>>()?;
    let right: Vec<Vec<bool>> = ext.iter().map(|row| row.iter().map(|&e| e > 0).collect()).collect();
    let m = graph_isomorphism(&left, &right).ok_or(Error::NoBijection)?;
    let bij = GeomBijection {
        map: diags.iter().zip(&m).map(|(&d, &k)| (d, objs[k])).collect(),
    };
    if !bij.check(cat)? {
        return Err(Error::NoBijection);
    }
    Ok(bij)
}

// vertex colors refined by neighbour colors; the hash only depends on
// structure, so colors are comparable across graphs
fn refine(adj: &[Vec<bool>]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = (0..n).map(|v| adj[v].iter().filter(|&&e| e).count()).collect();
    for _ in 0..n {
        let next: Vec<usize> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v][u]).map(|u| colors[u]).collect();
                nb.sort_unstable();
                nb.iter()
                    .fold(colors[v].wrapping_add(1), |h, &x| h.wrapping_mul(1_000_003).wrapping_add(x + 1))
            })
            .collect();
        colors = next;
    }
    colors
}

/// An isomorphism `left -> right` of simple graphs, if one exists.
pub fn graph_isomorphism(left: &[Vec<bool>], right: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = left.len();
    if right.len() != n {
        return None;
    }
    let (cl, cr) = (refine(left), refine(right));
    let mut order: Vec<usize> = (0..n).collect();
    // most constrained first: rare colors, then high degree
    order.sort_by_key(|&v| {
        let rarity = (0..n).filter(|&u| cl[u] == cl[v]).count();
        (rarity, std::cmp::Reverse(left[v].iter().filter(|&&e| e).count()))
    });
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if place(0, &order, left, right, &cl, &cr, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn place(
    k: usize,
    order: &[usize],
    left: &[Vec<bool>],
    right: &[Vec<bool>],
    cl: &[usize],
    cr: &[usize],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in 0..right.len() {
        if used[w] || cl[v] != cr[w] || left[v][v] != right[w][w] {
            continue;
        }
        let consistent = order[..k].iter().all(|&u| left[v][u] == right[w][image[u]]);
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if place(k + 1, order, left, right, cl, cr, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}

/// All maximal sets of orbit indecomposables with vanishing `Ext¹` between
/// (and on) their members.
pub fn cluster_tilting_objects(cat: &OrbitCategory) -> Result<Vec<BTreeSet<OrbitObj>>> {
    check_rank(cat)?;
    let objs = cat.indecomposables();
    let ext = ext_table(cat, &objs)?;
    let rigid: Vec<usize> = (0..objs.len()).filter(|&i| ext[i][i] == 0).collect();
    let compatible = |a: usize, b: usize| ext[a][b] == 0 && ext[b][a] == 0;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    // enumerate independent sets in increasing order, keep the maximal ones
    fn walk(
        k: usize,
        rigid: &[usize],
        chosen: &mut Vec<usize>,
        compatible: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == rigid.len() {
            let maximal = rigid
                .iter()
                .all(|&c| chosen.contains(&c) || !chosen.iter().all(|&s| compatible(s, c)));
            if maximal {
                out.push(chosen.clone());
            }
            return;
        }
        let v = rigid[k];
        if chosen.iter().all(|&s| compatible(s, v)) {
            chosen.push(v);
            walk(k + 1, rigid, chosen, compatible, out);
            chosen.pop();
        }
        walk(k + 1, rigid, chosen, compatible, out);
    }
    walk(0, &rigid, &mut chosen, &compatible, &mut out);
    Ok(out
        .into_iter()
        .map(|s| s.into_iter().map(|i| objs[i]).collect())
        .collect())
}

/// The crossing graph of the `(n+3)`-gon in DOT format.
pub fn crossing_graph_dot(rank: usize) -> Result<String> {
    let diags = diagonals(rank)?;
    let mut s = String::from("graph crossings {\n");
    for d in &diags {
        let _ = writeln!(s, "  \"{d}\";");
    }
    for (k, &a) in diags.iter().enumerate() {
        for &b in &diags[k + 1..] {
            if crossing(a, b)? {
                let _ = writeln!(s, "  \"{a}\" -- \"{b}\";");
            }
        }
    }
    s.push_str("}\n");
    Ok(s)
}

#[cfg(test)]
mod tests;
