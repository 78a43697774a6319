//! Vectors of an `n`-dimensional space over GF(q), their skeletons and tiers, and the
//! non-zero component graph built on them.
//!
//! Basis vectors are indexed from zero in the API (`b1` is index 0) and rendered one-based.
//! Vertices of the non-zero component graph are numbered in lexicographic order of the
//! coefficient string `c1 c2 … cn`, so vertex `i` is the base-q number `i + 1`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::math::{binomial, is_prime};

/// Upper bound on `q^n - 1` accepted by [`Space::new`].
pub const MAX_VECTORS: u64 = 1 << 16;

/// Largest field order; coefficient strings use one base-36 digit per coordinate.
pub const MAX_Q: u32 = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Space {
    n: usize,
    q: u32,
}

impl Space {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q > MAX_Q {
            return Err(Error::OutOfRange("field order above 36"));
        }
        if !(2..=64).contains(&n) {
            return Err(Error::BadDimension(n));
        }
        let count = (q as u64).checked_pow(n as u32).map(|c| c - 1);
        match count {
            Some(c) if c <= MAX_VECTORS => Ok(Space { n, q }),
            _ => Err(Error::SpaceTooLarge { n, q }),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `q^n - 1`.
    pub fn vector_count(&self) -> usize {
        (self.q as usize).pow(self.n as u32) - 1
    }

    /// Vector at position `index` of the canonical order.
    pub fn vector(&self, index: usize) -> Result<Vect> {
        if index >= self.vector_count() {
            return Err(Error::VertexOutOfRange { vertex: index, order: self.vector_count() });
        }
        let mut value = index + 1;
        let q = self.q as usize;
        let mut coeffs = vec![0u8; self.n];
        for c in coeffs.iter_mut().rev() {
            *c = (value % q) as u8;
            value /= q;
        }
        Ok(Vect::from_raw(coeffs))
    }

    /// Position of `v` in the canonical order.
    pub fn index_of(&self, v: &Vect) -> usize {
        let q = self.q as usize;
        v.coeffs.iter().fold(0usize, |acc, &c| acc * q + c as usize) - 1
    }

    pub fn basis(&self, i: usize) -> Result<Vect> {
        if i >= self.n {
            return Err(Error::OutOfRange("basis index"));
        }
        let mut coeffs = vec![0u8; self.n];
        coeffs[i] = 1;
        Ok(Vect::from_raw(coeffs))
    }

    /// Vertex id of basis vector `b_{i+1}`.
    pub fn basis_vertex(&self, i: usize) -> usize {
        (self.q as usize).pow((self.n - 1 - i) as u32) - 1
    }

    /// Vertex id of `b1 + … + bn`.
    pub fn all_ones_vertex(&self) -> usize {
        self.index_of(&Vect::from_raw(vec![1; self.n]))
    }

    /// Builds a vector from explicit coefficients.
    pub fn vect(&self, coeffs: &[u32]) -> Result<Vect> {
        if coeffs.len() != self.n {
            return Err(Error::InvalidVector("wrong number of coefficients"));
        }
        if coeffs.iter().any(|&c| c >= self.q) {
            return Err(Error::InvalidVector("coefficient not reduced modulo q"));
        }
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::InvalidVector("zero vector"));
        }
        Ok(Vect::from_raw(coeffs.iter().map(|&c| c as u8).collect()))
    }

    /// The vector of this space whose skeleton is `mask`, with every coefficient 1.
    pub fn vect_from_skeleton(&self, mask: u64) -> Result<Vect> {
        if mask == 0 || (self.n < 64 && mask >> self.n != 0) {
            return Err(Error::InvalidVector("skeleton mask out of range"));
        }
        Ok(Vect::from_raw((0..self.n).map(|i| (mask >> i & 1) as u8).collect()))
    }

    /// Parses a coefficient string such as `"0110"`.
    pub fn parse_coeffs(&self, s: &str) -> Result<Vect> {
        let coeffs: Option<Vec<u32>> = s.chars().map(|ch| ch.to_digit(36)).collect();
        let coeffs = coeffs.ok_or(Error::InvalidVector("non-digit in coefficient string"))?;
        self.vect(&coeffs)
    }

    /// `u - v` coordinatewise modulo q; `None` when the difference is the zero vector.
    pub fn sub(&self, u: &Vect, v: &Vect) -> Option<Vect> {
        let q = self.q as u16;
        let coeffs: Vec<u8> = u
            .coeffs
            .iter()
            .zip(&v.coeffs)
            .map(|(&a, &b)| ((a as u16 + q - b as u16) % q) as u8)
            .collect();
        if coeffs.iter().all(|&c| c == 0) {
            None
        } else {
            Some(Vect::from_raw(coeffs))
        }
    }
}

/// A non-zero vector, stored with its coefficients and its skeleton as a bitmask
/// (bit `i` set iff `b_{i+1}` has a non-zero coefficient).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vect {
    coeffs: Vec<u8>,
    skeleton: u64,
}

impl Vect {
    fn from_raw(coeffs: Vec<u8>) -> Self {
        let skeleton = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        debug_assert!(skeleton != 0);
        Vect { coeffs, skeleton }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn skeleton(&self) -> u64 {
        self.skeleton
    }

    pub fn in_skeleton(&self, basis: usize) -> bool {
        self.skeleton >> basis & 1 == 1
    }

    /// `|S_v|`, in `1..=n`.
    pub fn tier(&self) -> usize {
        self.skeleton.count_ones() as usize
    }

    pub fn coeff_string(&self) -> String {
        self.coeffs
            .iter()
            .map(|&c| char::from_digit(c as u32, 36).unwrap_or('?'))
            .collect()
    }
}

impl fmt::Display for Vect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{}", c)?;
            }
            write!(f, "b{}", i + 1)?;
        }
        Ok(())
    }
}

/// All `q^n - 1` non-zero vectors in canonical order.
pub fn enumerate_vectors(space: Space) -> Vec<Vect> {
    (0..space.vector_count())
        .map(|i| space.vector(i).expect("index in range"))
        .collect()
}

/// `|S_v|`.
pub fn tier(v: &Vect) -> usize {
    v.tier()
}

/// `|T_i| = C(n, i) (q-1)^i`.
pub fn tier_class_size(space: Space, i: usize) -> Result<u64> {
    if i == 0 || i > space.n {
        return Err(Error::OutOfRange("tier index must lie in 1..=n"));
    }
    Ok(binomial(space.n as u64, i as u64) * (space.q as u64 - 1).pow(i as u32))
}

/// Non-zero component graph: vertices are the non-zero vectors, adjacent iff their
/// skeletons meet.
pub fn build_nzc_graph(space: Space) -> Graph {
    let vectors = enumerate_vectors(space);
    let mut g = Graph::new(vectors.len());
    for (u, a) in vectors.iter().enumerate() {
        for (v, b) in vectors.iter().enumerate().skip(u + 1) {
            if a.skeleton & b.skeleton != 0 {
                g.add_edge(u, v).expect("distinct in-range vertices");
            }
        }
    }
    g.set_labels(vectors).expect("one label per vertex");
    g
}

/// Degree of a tier-`s` vertex of the binary non-zero component graph:
/// `(2^s - 1) 2^(n-s) - 1`.
pub fn degree_formula(n: usize, s: usize) -> Result<u64> {
    if s == 0 || s > n || n > 63 {
        return Err(Error::OutOfRange("degree formula needs 1 <= s <= n <= 63"));
    }
    Ok(((1u64 << s) - 1) * (1u64 << (n - s)) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn space(n: usize, q: u32) -> Space {
        Space::new(n, q).unwrap()
    }

    #[test]
    fn rejects_bad_spaces() {
        assert_eq!(Space::new(3, 4), Err(Error::NotPrime(4)));
        assert_eq!(Space::new(1, 2), Err(Error::BadDimension(1)));
        assert_eq!(Space::new(3, 1), Err(Error::NotPrime(1)));
        assert!(matches!(Space::new(20, 2), Err(Error::SpaceTooLarge { .. })));
    }

    #[test]
    fn vector_counts() {
        assert_eq!(enumerate_vectors(space(2, 2)).len(), 3);
        assert_eq!(enumerate_vectors(space(3, 2)).len(), 7);
        assert_eq!(enumerate_vectors(space(2, 3)).len(), 8);
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let vs = enumerate_vectors(space(3, 3));
        assert!(vs.windows(2).all(|w| w[0].coeffs() < w[1].coeffs()));
        let s = space(3, 2);
        let strings: Vec<_> = enumerate_vectors(s).iter().map(Vect::coeff_string).collect();
        assert_eq!(strings, ["001", "010", "011", "100", "101", "110", "111"]);
        for (i, v) in enumerate_vectors(s).iter().enumerate() {
            assert_eq!(s.index_of(v), i);
        }
        assert_eq!(s.basis_vertex(0), 3);
        assert_eq!(s.basis_vertex(2), 0);
        assert_eq!(s.all_ones_vertex(), 6);
    }

    #[test]
    fn tiers() {
        let s = space(4, 2);
        assert_eq!(tier(&s.basis(0).unwrap()), 1);
        assert_eq!(tier(&s.parse_coeffs("1110").unwrap()), 3);
        assert_eq!(tier(&space(5, 2).parse_coeffs("11111").unwrap()), 5);
        assert_eq!(s.parse_coeffs("1110").unwrap().to_string(), "b1+b2+b3");
        assert_eq!(space(2, 3).parse_coeffs("21").unwrap().to_string(), "2b1+b2");
    }

    #[test]
    fn tier_sizes() {
        assert_eq!(tier_class_size(space(4, 2), 3).unwrap(), 4);
        assert_eq!(tier_class_size(space(3, 3), 1).unwrap(), 6);
        assert!(tier_class_size(space(3, 3), 0).is_err());
        assert!(tier_class_size(space(3, 3), 4).is_err());
        // brute-force support count over all 31 vectors
        let brute = enumerate_vectors(space(5, 2)).iter().filter(|v| v.tier() == 2).count();
        assert_eq!(brute, 10);
        assert_eq!(tier_class_size(space(5, 2), 2).unwrap(), 10);
    }

    #[test]
    fn tier_sizes_sum_to_vector_count() {
        for (n, q) in [(2, 2), (3, 2), (6, 2), (2, 3), (3, 3), (2, 5), (4, 3)] {
            let s = space(n, q);
            let total: u64 = (1..=n).map(|i| tier_class_size(s, i).unwrap()).sum();
            assert_eq!(total as usize, s.vector_count());
        }
    }

    #[test]
    fn nzc_small_graphs() {
        // b1 and b2 have disjoint skeletons: the path b1 - (b1+b2) - b2
        let g = build_nzc_graph(space(2, 2));
        assert_eq!(g, Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap().tap_labels(&g));

        let s = space(3, 2);
        let g = build_nzc_graph(s);
        for i in 0..3 {
            assert_eq!(g.degree(s.basis_vertex(i)), 3);
        }
        assert_eq!(g.degree(s.all_ones_vertex()), 6);
    }

    #[test]
    fn degree_formula_values() {
        assert_eq!(degree_formula(4, 3).unwrap(), 13);
        assert_eq!(degree_formula(3, 1).unwrap(), 3);
        assert_eq!(degree_formula(5, 2).unwrap(), 23);
        assert!(degree_formula(3, 0).is_err());
        assert!(degree_formula(3, 4).is_err());
        let s = space(5, 2);
        let g = build_nzc_graph(s);
        assert_eq!(g.degree(s.index_of(&s.parse_coeffs("11000").unwrap())), 23);
    }

    #[test]
    fn degree_formula_matches_graph() {
        for n in 3..=6 {
            let g = build_nzc_graph(space(n, 2));
            for v in 0..g.order() {
                let s = g.label(v).unwrap().tier();
                assert_eq!(g.degree(v) as u64, degree_formula(n, s).unwrap());
            }
        }
    }

    #[test]
    fn sub_clears_shared_support_in_gf2() {
        let s = space(4, 2);
        let u = s.parse_coeffs("1010").unwrap();
        let w = s.parse_coeffs("0010").unwrap();
        assert_eq!(s.sub(&u, &w).unwrap().coeff_string(), "1000");
        assert!(s.sub(&u, &u).is_none());
    }

    impl Graph {
        fn tap_labels(mut self, other: &Graph) -> Graph {
            self.set_labels(other.labels().unwrap().to_vec()).unwrap();
            self
        }
    }
}
