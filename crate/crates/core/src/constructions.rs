//! A family of graphs whose fixed number exceeds the fixing number by `2k - 3`.
//!
//! For `k >= 3` the graph has vertices `u_1 … u_{2^k - 2}` and `w_1 … w_{k-1}`; `u_j` is
//! joined to `w_i` iff the binary weight of `j` is `i`. It is a disjoint union of `k - 1`
//! stars, the `i`-th having `C(k, i)` leaves.
//!
//! Vertex ids: `u_j` is `j - 1`, `w_i` is `2^k - 3 + i`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `k` accepted; the graph order is `2^k + k - 3`.
pub const MAX_K: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    k: usize,
}

impl FamilyParams {
    pub fn new(k: usize) -> Result<Self> {
        if !(3..=MAX_K).contains(&k) {
            return Err(Error::OutOfRange("family parameter k must lie in 3..=16"));
        }
        Ok(FamilyParams { k })
    }

    /// Smallest `k` whose gap `2k - 3` reaches `gap`: `k = max(3, ⌈(gap + 3) / 2⌉)`.
    pub fn for_gap(gap: usize) -> Result<Self> {
        FamilyParams::new(3.max((gap + 3).div_ceil(2)))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Guaranteed lower bound on `fxd - fix`.
    pub fn gap(&self) -> usize {
        2 * self.k - 3
    }

    pub fn order(&self) -> usize {
        (1 << self.k) + self.k - 3
    }

    pub fn u_vertex(&self, j: usize) -> usize {
        j - 1
    }

    pub fn w_vertex(&self, i: usize) -> usize {
        (1 << self.k) - 3 + i
    }
}

pub fn build_family_graph(k: usize) -> Result<Graph> {
    let params = FamilyParams::new(k)?;
    let mut g = Graph::new(params.order());
    for j in 1..=(1usize << k) - 2 {
        let weight = j.count_ones() as usize;
        g.add_edge(params.u_vertex(j), params.w_vertex(weight))?;
    }
    Ok(g)
}

/// `2^k - (k + 1)`.
pub fn predicted_fix(k: usize) -> Result<usize> {
    let p = FamilyParams::new(k)?;
    Ok((1 << p.k) - (p.k + 1))
}

/// `2^k + k - 4`.
pub fn predicted_fxd(k: usize) -> Result<usize> {
    let p = FamilyParams::new(k)?;
    Ok((1 << p.k) + p.k - 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::binomial;
    use alloc::vec::Vec;

    #[test]
    fn rejects_small_k() {
        assert!(build_family_graph(2).is_err());
        assert!(FamilyParams::new(2).is_err());
    }

    #[test]
    fn k3_is_two_three_leaf_stars() {
        let g = build_family_graph(3).unwrap();
        let p = FamilyParams::new(3).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.degree(p.w_vertex(1)), 3);
        assert_eq!(g.degree(p.w_vertex(2)), 3);
        assert!(g.neighbors(p.w_vertex(1)).is_disjoint(g.neighbors(p.w_vertex(2))));
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn k4_neighbourhood_sizes() {
        let g = build_family_graph(4).unwrap();
        let p = FamilyParams::new(4).unwrap();
        assert_eq!(g.order(), 17);
        let sizes: Vec<usize> = (1..4).map(|i| g.degree(p.w_vertex(i))).collect();
        assert_eq!(sizes, [4, 6, 4]);
        for i in 1..4 {
            assert_eq!(g.degree(p.w_vertex(i)) as u64, binomial(4, i as u64));
        }
        assert!((1..=14).all(|j| g.degree(p.u_vertex(j)) == 1));
    }

    #[test]
    fn predictions() {
        assert_eq!(predicted_fix(3).unwrap(), 4);
        assert_eq!(predicted_fix(4).unwrap(), 11);
        assert_eq!(predicted_fix(5).unwrap(), 26);
        assert_eq!(predicted_fxd(3).unwrap(), 7);
        assert_eq!(predicted_fxd(4).unwrap(), 16);
        assert_eq!(predicted_fxd(3).unwrap() - predicted_fix(3).unwrap(), 3);
        assert_eq!(FamilyParams::new(3).unwrap().gap(), 3);
    }

    #[test]
    fn parameter_for_requested_gap() {
        assert_eq!(FamilyParams::for_gap(1).unwrap().k(), 3);
        assert_eq!(FamilyParams::for_gap(3).unwrap().k(), 3);
        assert_eq!(FamilyParams::for_gap(4).unwrap().k(), 4);
        for gap in 1..20 {
            assert!(FamilyParams::for_gap(gap).unwrap().gap() >= gap);
        }
    }
}
