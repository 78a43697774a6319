//! Permutations, full automorphism group enumeration, orbits and stabilizers.
//!
//! Composition convention: `(g ∘ h)(v) = g(h(v))`, i.e. `g.compose(&h)` applies `h` first.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vecspace::Space;
use crate::Limits;

/// A bijection on `0..len`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let mut seen = VertexSet::new(images.len());
        for &i in &images {
            if i as usize >= images.len() || !seen.insert(i as usize) {
                return Err(Error::NotBijection);
            }
        }
        Ok(Perm { images })
    }

    /// Transposition of `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v] as usize
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Perm { images: other.images.iter().map(|&v| self.images[v as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.len()];
        for (v, &w) in self.images.iter().enumerate() {
            inv[w as usize] = v as u32;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        is_identity(&self.images)
    }
}

fn is_identity(images: &[u32]) -> bool {
    images.iter().enumerate().all(|(v, &w)| v == w as usize)
}

fn fixed_set(images: &[u32]) -> VertexSet {
    VertexSet::from_iter_with_capacity(
        images.len(),
        images.iter().enumerate().filter(|(v, &w)| *v == w as usize).map(|(v, _)| v),
    )
}

/// `{v : p(v) = v}`.
pub fn fixed_points(p: &Perm) -> VertexSet {
    fixed_set(&p.images)
}

/// True iff `p` preserves both adjacency and non-adjacency.
pub fn is_automorphism(g: &Graph, p: &Perm) -> Result<bool> {
    if p.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: p.len() });
    }
    Ok(preserves_edges(g, &p.images))
}

fn preserves_edges(g: &Graph, images: &[u32]) -> bool {
    let n = g.order();
    (0..n).all(|u| {
        let pu = images[u] as usize;
        (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(pu, images[v] as usize))
    })
}

/// Iterated neighbour-colour refinement, starting from the unit partition.
///
/// Returns a colour per vertex. Colours are ranks of the refinement signatures, so they
/// depend only on the graph structure and vertex order is irrelevant to the colour values.
pub fn equitable_partition(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors = vec![0usize; n];
    let mut classes = usize::from(n > 0);
    loop {
        let signatures: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut sig = vec![0usize; classes + 1];
                sig[0] = colors[v];
                for w in g.neighbors(v) {
                    sig[1 + colors[w]] += 1;
                }
                sig
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for (v, sig) in signatures.iter().enumerate() {
            colors[v] = distinct.binary_search(sig).expect("signature present");
        }
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

/// The full automorphism group of a graph, elements sorted lexicographically by image list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    degree: usize,
    images: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: usize,
    pub members: VertexSet,
}

impl AutGroup {
    /// Wraps a list of permutations, sorting and deduplicating. The caller vouches for
    /// closure; this is used for subgroups carved out of an enumerated group.
    fn from_sorted_flat(degree: usize, images: Vec<u32>) -> AutGroup {
        AutGroup { degree, images }
    }

    pub fn from_perms(degree: usize, mut perms: Vec<Perm>) -> Result<AutGroup> {
        if let Some(p) = perms.iter().find(|p| p.len() != degree) {
            return Err(Error::LengthMismatch { expected: degree, got: p.len() });
        }
        perms.sort_unstable();
        perms.dedup();
        Ok(AutGroup {
            degree,
            images: perms.into_iter().flat_map(|p| p.images).collect(),
        })
    }

    pub fn trivial(degree: usize) -> AutGroup {
        AutGroup { degree, images: (0..degree as u32).collect() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        // the empty graph still has the empty permutation
        self.images.len().checked_div(self.degree).unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn element(&self, i: usize) -> &[u32] {
        &self.images[i * self.degree..(i + 1) * self.degree]
    }

    pub fn perm(&self, i: usize) -> Perm {
        Perm { images: self.element(i).to_vec() }
    }

    /// Image lists in canonical order; the identity comes first.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    /// Non-identity elements.
    pub fn nontrivial(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.elements().filter(|e| !is_identity(e))
    }

    pub fn contains(&self, images: &[u32]) -> bool {
        if images.len() != self.degree {
            return false;
        }
        let mut lo = 0;
        let mut hi = self.order();
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.element(mid).cmp(images) {
                core::cmp::Ordering::Equal => return true,
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
            }
        }
        false
    }

    /// Subgroup of elements satisfying `keep`, in the same canonical order.
    pub fn filter<F: Fn(&[u32]) -> bool>(&self, keep: F) -> AutGroup {
        let images = self.elements().filter(|e| keep(e)).flatten().copied().collect();
        AutGroup::from_sorted_flat(self.degree, images)
    }

    /// `Γ_v`.
    pub fn stabilizer(&self, v: usize) -> AutGroup {
        self.filter(|e| e[v] as usize == v)
    }

    /// `Γ_D = ⋂_{v ∈ D} Γ_v`.
    pub fn pointwise_stabilizer(&self, set: &[usize]) -> AutGroup {
        self.filter(|e| set.iter().all(|&v| e[v] as usize == v))
    }

    /// `{g(v) : g ∈ self}`.
    pub fn orbit(&self, v: usize) -> Orbit {
        let mut members = VertexSet::new(self.degree);
        for e in self.elements() {
            members.insert(e[v] as usize);
        }
        Orbit { representative: v, members }
    }

    /// Orbit of `u` under `Γ_w`.
    pub fn orbit_under_stabilizer(&self, w: usize, u: usize) -> VertexSet {
        let mut members = VertexSet::new(self.degree);
        for e in self.elements().filter(|e| e[w] as usize == w) {
            members.insert(e[u] as usize);
        }
        members
    }

    /// Orbit index of every vertex; orbits are numbered by their smallest member.
    pub fn orbit_partition(&self) -> Vec<usize> {
        let mut ids = vec![usize::MAX; self.degree];
        let mut next = 0;
        for v in 0..self.degree {
            if ids[v] != usize::MAX {
                continue;
            }
            for e in self.elements() {
                ids[e[v] as usize] = next;
            }
            next += 1;
        }
        ids
    }

    /// All orbits, each represented by its smallest member.
    pub fn orbits(&self) -> Vec<Orbit> {
        let ids = self.orbit_partition();
        let count = ids.iter().copied().max().map_or(0, |m| m + 1);
        let mut out: Vec<Orbit> = Vec::with_capacity(count);
        for (v, &id) in ids.iter().enumerate() {
            if id == out.len() {
                out.push(Orbit { representative: v, members: VertexSet::new(self.degree) });
            }
            out[id].members.insert(v);
        }
        out
    }
}

struct Search<'a> {
    graph: &'a Graph,
    colors: Vec<usize>,
    cells: Vec<Vec<usize>>,
    order: Vec<usize>,
    image: Vec<u32>,
    used: VertexSet,
    found: Vec<u32>,
    count: usize,
    limit: usize,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<()> {
        let n = self.graph.order();
        if depth == n {
            self.count += 1;
            if self.count > self.limit {
                return Err(Error::GroupLimit { limit: self.limit });
            }
            self.found.extend_from_slice(&self.image);
            return Ok(());
        }
        let v = self.order[depth];
        let cell = self.colors[v];
        for idx in 0..self.cells[cell].len() {
            let w = self.cells[cell][idx];
            if self.used.contains(w) {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                self.graph.has_edge(v, u) == self.graph.has_edge(w, self.image[u] as usize)
            });
            if !consistent {
                continue;
            }
            self.image[v] = w as u32;
            self.used.insert(w);
            let r = self.extend(depth + 1);
            self.used.remove(w);
            r?;
        }
        Ok(())
    }
}

/// Enumerates every automorphism of `g`.
///
/// Candidate images are restricted to the vertex's cell of the equitable partition and must
/// agree on adjacency with every vertex mapped so far; vertices are mapped smallest cell
/// first, then lowest id. Exceeding either limit is an error, never a truncated group.
pub fn automorphism_group(g: &Graph, limits: &Limits) -> Result<AutGroup> {
    let n = g.order();
    if n > limits.max_order {
        return Err(Error::OrderLimit { order: n, limit: limits.max_order });
    }
    let colors = equitable_partition(g);
    let cell_count = colors.iter().copied().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); cell_count];
    for (v, &c) in colors.iter().enumerate() {
        cells[c].push(v);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (cells[colors[v]].len(), colors[v], v));

    let mut search = Search {
        graph: g,
        colors,
        cells,
        order,
        image: vec![u32::MAX; n],
        used: VertexSet::new(n),
        found: Vec::new(),
        count: 0,
        limit: limits.max_group_order,
    };
    search.extend(0)?;
    if n == 0 {
        return Ok(AutGroup::trivial(0));
    }

    let found = search.found;
    let mut idx: Vec<usize> = (0..search.count).collect();
    idx.sort_unstable_by(|&a, &b| found[a * n..(a + 1) * n].cmp(&found[b * n..(b + 1) * n]));
    let mut images = Vec::with_capacity(found.len());
    for i in idx {
        images.extend_from_slice(&found[i * n..(i + 1) * n]);
    }
    Ok(AutGroup::from_sorted_flat(n, images))
}

/// Every bijection of the vertex set filtered by [`is_automorphism`]. Exponential; only
/// for cross-checking the pruned search on graphs of order at most 10.
pub fn brute_force_automorphisms(g: &Graph) -> Result<Vec<Perm>> {
    let n = g.order();
    if n > 10 {
        return Err(Error::OrderLimit { order: n, limit: 10 });
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = (0..n as u32).collect();
    // Heap's algorithm
    let mut c = vec![0usize; n];
    if preserves_edges(g, &current) {
        out.push(Perm { images: current.clone() });
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                current.swap(0, i);
            } else {
                current.swap(c[i], i);
            }
            if preserves_edges(g, &current) {
                out.push(Perm { images: current.clone() });
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Vertex permutation of the non-zero component graph induced by the linear map
/// `b_i ↦ scalars[i] · b_{sigma[i]}`.
pub fn lift_basis_map(space: Space, sigma: &[usize], scalars: &[u32]) -> Result<Perm> {
    let n = space.n();
    if sigma.len() != n || scalars.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: sigma.len().min(scalars.len()) });
    }
    let mut seen = VertexSet::new(n);
    if sigma.iter().any(|&s| s >= n || !seen.insert(s)) {
        return Err(Error::NotBijection);
    }
    if scalars.iter().any(|&a| a == 0 || a >= space.q()) {
        return Err(Error::OutOfRange("scalars must be non-zero residues"));
    }
    let q = space.q() as u64;
    let images = (0..space.vector_count())
        .map(|idx| {
            let v = space.vector(idx).expect("index in range");
            let mut coeffs = vec![0u32; n];
            for (i, &c) in v.coeffs().iter().enumerate() {
                coeffs[sigma[i]] = ((c as u64 * scalars[i] as u64) % q) as u32;
            }
            let image = space.vect(&coeffs).expect("invertible map keeps vectors non-zero");
            space.index_of(&image) as u32
        })
        .collect();
    Ok(Perm { images })
}
