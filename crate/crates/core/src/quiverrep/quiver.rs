use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite quiver with vertices `0..n` (shown to users as `1..=n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
    // reach[v][w]: there is a directed path v -> w (including the trivial one)
    reach: Vec<Vec<bool>>,
}

/// Dynkin type of the underlying graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinClass {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinClass {
    pub fn rank(self) -> usize {
        match self {
            DynkinClass::A(n) | DynkinClass::D(n) | DynkinClass::E(n) => n,
        }
    }

    /// The Coxeter number h.
    pub fn coxeter_number(self) -> usize {
        match self {
            DynkinClass::A(n) => n + 1,
            DynkinClass::D(n) => 2 * n - 2,
            DynkinClass::E(6) => 12,
            DynkinClass::E(7) => 18,
            DynkinClass::E(_) => 30,
        }
    }
}

impl fmt::Display for DynkinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinClass::A(n) => write!(f, "A_{n}"),
            DynkinClass::D(n) => write!(f, "D_{n}"),
            DynkinClass::E(n) => write!(f, "E_{n}"),
        }
    }
}

impl Quiver {
    /// Arrows are `(source, target)` pairs of 0-based vertices.
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Quiver> {
        for &(s, t) in &arrows {
            for v in [s, t] {
                if v >= vertices {
                    return Err(Error::InvalidVertex(v + 1));
                }
            }
        }
        let mut reach = vec![vec![false; vertices]; vertices];
        for (v, row) in reach.iter_mut().enumerate() {
            let mut queue = VecDeque::from([v]);
            row[v] = true;
            while let Some(x) = queue.pop_front() {
                for &(s, t) in &arrows {
                    if s == x && !row[t] {
                        row[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        Ok(Quiver {
            vertices,
            arrows,
            reach,
        })
    }

    /// The linearly oriented A_n quiver 1 → 2 → ⋯ → n.
    pub fn linear_a(n: usize) -> Quiver {
        Quiver::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("valid vertices")
    }

    /// The one-vertex quiver; representations are plain vector spaces.
    pub fn point() -> Quiver {
        Quiver::linear_a(1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Is there a directed path `from -> to` (length zero allowed)?
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        self.reach[from][to]
    }

    /// Arrow indices of a directed path `from -> to`, if one exists. For the
    /// tree-shaped quivers used here the path is unique.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if !self.reach[from][to] {
            return None;
        }
        let mut path = Vec::new();
        let mut x = from;
        while x != to {
            let (idx, &(_, t)) = self
                .arrows
                .iter()
                .enumerate()
                .find(|(_, &(s, t))| s == x && self.reach[t][to])?;
            path.push(idx);
            x = t;
        }
        Some(path)
    }

    /// Number of directed paths `from -> to`; acyclic quivers only.
    pub fn path_count(&self, from: usize, to: usize) -> u64 {
        if !self.reach[from][to] {
            return 0;
        }
        if from == to {
            return 1;
        }
        self.arrows
            .iter()
            .filter(|&&(s, _)| s == from)
            .map(|&(_, t)| self.path_count(t, to))
            .sum()
    }

    pub fn opposite(&self) -> Quiver {
        Quiver::new(self.vertices, self.arrows.iter().map(|&(s, t)| (t, s)).collect())
            .expect("same vertices")
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    fn find_cycle(&self) -> Option<usize> {
        if let Some(&(s, _)) = self.arrows.iter().find(|&&(s, t)| s == t) {
            return Some(s);
        }
        (0..self.vertices).find(|&v| {
            self.arrows
                .iter()
                .any(|&(s, t)| s == v && t != v && self.reach[t][v])
        })
    }

    /// Classify the quiver as a Dynkin quiver.
    pub fn validate(&self) -> Result<DynkinClass> {
        if let Some(v) = self.find_cycle() {
            return Err(Error::OrientedCycle(v + 1));
        }
        let n = self.vertices;
        if n == 0 {
            return Err(Error::NotDynkin("empty quiver".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(s, t) in &self.arrows {
            if adj[s].contains(&t) {
                return Err(Error::NotDynkin(format!(
                    "multiple edges between {} and {}",
                    s + 1,
                    t + 1
                )));
            }
            adj[s].push(t);
            adj[t].push(s);
        }
        if self.arrows.len() != n - 1 || !connected(&adj) {
            return Err(Error::NotDynkin("underlying graph is not a tree".into()));
        }
        let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
        if branch.is_empty() {
            return Ok(DynkinClass::A(n));
        }
        if branch.len() > 1 || adj[branch[0]].len() > 3 {
            return Err(Error::NotDynkin("branching is not of type D or E".into()));
        }
        let centre = branch[0];
        let mut arms: Vec<usize> = adj[centre]
            .iter()
            .map(|&start| arm_length(&adj, centre, start))
            .collect();
        arms.sort_unstable();
        match (arms[0], arms[1], arms[2]) {
            (1, 1, _) => Ok(DynkinClass::D(n)),
            (1, 2, 2) => Ok(DynkinClass::E(6)),
            (1, 2, 3) => Ok(DynkinClass::E(7)),
            (1, 2, 4) => Ok(DynkinClass::E(8)),
            (a, b, c) => Err(Error::NotDynkin(format!("T-shaped tree with arms {a},{b},{c}"))),
        }
    }

    /// Vertices of a type-A quiver listed along the underlying path, starting
    /// from the end point with the smaller label.
    pub fn path_order(&self) -> Result<Vec<usize>> {
        match self.validate()? {
            DynkinClass::A(_) => {}
            other => return Err(Error::NotTypeA(other)),
        }
        let n = self.vertices;
        let mut adj = vec![Vec::new(); n];
        for &(s, t) in &self.arrows {
            adj[s].push(t);
            adj[t].push(s);
        }
        let start = (0..n).find(|&v| adj[v].len() <= 1).expect("paths have end points");
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        Ok(order)
    }
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn arm_length(adj: &[Vec<usize>], centre: usize, start: usize) -> usize {
    let mut len = 1;
    let (mut prev, mut cur) = (centre, start);
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(Quiver::linear_a(3).validate().unwrap(), DynkinClass::A(3));
        assert_eq!(Quiver::point().validate().unwrap(), DynkinClass::A(1));
        let cyc = Quiver::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(cyc.validate(), Err(Error::OrientedCycle(_))));
    }

    #[test]
    fn classify_d_and_e() {
        let d4 = Quiver::new(4, vec![(0, 1), (2, 1), (3, 1)]).unwrap();
        assert_eq!(d4.validate().unwrap(), DynkinClass::D(4));
        let d5 = Quiver::new(5, vec![(0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(d5.validate().unwrap(), DynkinClass::D(5));
        // E6: arms 1, 2, 2 around vertex 2
        let e6 = Quiver::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (5, 2)]).unwrap();
        assert_eq!(e6.validate().unwrap(), DynkinClass::E(6));
        let e7 = Quiver::new(7, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 2)]).unwrap();
        assert_eq!(e7.validate().unwrap(), DynkinClass::E(7));
        let e8 =
            Quiver::new(8, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (7, 2)]).unwrap();
        assert_eq!(e8.validate().unwrap(), DynkinClass::E(8));
    }

    #[test]
    fn reject_non_dynkin() {
        // affine D4~ : star with four arms
        let star = Quiver::new(5, vec![(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(matches!(star.validate(), Err(Error::NotDynkin(_))));
        let kronecker = Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(matches!(kronecker.validate(), Err(Error::NotDynkin(_))));
        let disconnected = Quiver::new(3, vec![(0, 1)]).unwrap();
        assert!(matches!(disconnected.validate(), Err(Error::NotDynkin(_))));
        // non-oriented triangle: acyclic but not a tree
        let tri = Quiver::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(tri.validate(), Err(Error::NotDynkin(_))));
        assert!(matches!(Quiver::new(2, vec![(0, 2)]), Err(Error::InvalidVertex(3))));
    }

    #[test]
    fn path_order_follows_underlying_graph() {
        let q = Quiver::new(4, vec![(1, 0), (1, 3), (2, 3)]).unwrap();
        assert_eq!(q.path_order().unwrap(), vec![0, 1, 3, 2]);
        assert_eq!(q.path(1, 3), Some(vec![1]));
        assert_eq!(q.path(0, 1), None);
        assert_eq!(q.path_count(1, 3), 1);
    }
}
