//! Finite simple undirected graphs with bitset adjacency rows.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::vecspace::Vect;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<Vect>>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(order); order],
            labels: None,
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order() });
        }
        Ok(())
    }

    /// Adds the undirected edge `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[Vect]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&Vect> {
        self.labels.as_ref().map(|l| &l[v])
    }

    pub fn set_labels(&mut self, labels: Vec<Vect>) -> Result<()> {
        if labels.len() != self.order() {
            return Err(Error::LengthMismatch { expected: self.order(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for w in self.adj[u].iter() {
                    if seen.insert(w) {
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }

    /// True when `u` and `v` are twins: `N(u) \ {v} = N(v) \ {u}`.
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let mut a = self.adj[u].clone();
        a.remove(v);
        let mut b = self.adj[v].clone();
        b.remove(u);
        a == b
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// Cycle `0-1-…-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::OutOfRange("cycle needs at least 3 vertices"));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::OutOfRange("path needs at least 1 vertex"));
        }
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for l in 1..=leaves {
            g.adj[0].insert(l);
            g.adj[l].insert(0);
        }
        g
    }

    /// The smallest asymmetric tree: a spider with legs of length 1, 2 and 3.
    pub fn asymmetric_tree() -> Graph {
        Graph::from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])
            .expect("static edge list")
    }
}

/// Partition of the vertices into twin classes, each sorted, ordered by smallest member.
///
/// Twins are pairs with `N(u) \ {v} = N(v) \ {u}`; this relation is an equivalence, so the
/// classes are built greedily against each class representative.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.order() {
        match classes.iter_mut().find(|c| g.are_twins(c[0], v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
}

/// First twin pair in lexicographic order, if any.
pub fn find_twins(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| g.are_twins(u, v))
}
