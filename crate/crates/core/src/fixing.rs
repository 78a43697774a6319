//! Fixing sets, fixing number, fixed number, fixing neighbourhoods and the fixing graph.
//!
//! Pairs of vertices are unordered and stored as `(u, v)` with `u < v`; `fix(u, v)` is
//! symmetric so nothing is lost, and fixing-graph edge counts follow the same convention.

use alloc::vec;
use alloc::vec::Vec;

use crate::autgroup::AutGroup;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{find_twins, Graph};
use crate::math::binomial_signed;
use crate::vecspace::{Space, Vect};

/// `S(G)`: vertices whose orbit has at least two elements.
pub fn moved_vertices(group: &AutGroup) -> VertexSet {
    let mut moved = VertexSet::new(group.degree());
    for e in group.nontrivial() {
        for (v, &w) in e.iter().enumerate() {
            if v != w as usize {
                moved.insert(v);
            }
        }
    }
    moved
}

/// Unordered pairs `{u, v}`, `u ≠ v`, lying in a common orbit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairSet {
    pairs: Vec<(usize, usize)>,
}

impl PairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn position(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.pairs.binary_search(&key).ok()
    }
}

/// `V_s(G)` as unordered pairs, sorted.
pub fn same_orbit_pairs(group: &AutGroup) -> PairSet {
    let ids = group.orbit_partition();
    let n = group.degree();
    let pairs = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| ids[u] == ids[v])
        .collect();
    PairSet { pairs }
}

/// `fix(u, v) = {x ∈ S(G) : O_x(u) ≠ O_x(v)}`, evaluated from the enumerated group.
///
/// `O_x(u) = O_x(v)` holds exactly when some `g ∈ Γ_x` sends `u` to `v`, so the result is
/// `S(G)` minus the fixed points of every automorphism mapping `u` to `v`. Empty when `u`
/// and `v` lie in different orbits.
pub fn fix_pair_definitional(group: &AutGroup, u: usize, v: usize) -> Result<VertexSet> {
    let n = group.degree();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, order: n });
        }
    }
    if u == v {
        return Err(Error::Precondition("fix(u, v) needs u ≠ v"));
    }
    Ok(fix_pair_unchecked(group, &moved_vertices(group), u, v))
}

fn fix_pair_unchecked(group: &AutGroup, moved: &VertexSet, u: usize, v: usize) -> VertexSet {
    let mut result = moved.clone();
    let mut same_orbit = false;
    for e in group.elements().filter(|e| e[u] as usize == v) {
        same_orbit = true;
        for (x, &w) in e.iter().enumerate() {
            if x == w as usize {
                result.remove(x);
            }
        }
    }
    if !same_orbit {
        result.clear();
    }
    result
}

fn require_binary(space: Space) -> Result<()> {
    if space.q() != 2 {
        return Err(Error::Precondition("skeleton criteria hold over GF(2) only"));
    }
    if space.n() < 3 {
        return Err(Error::Precondition("skeleton criteria need n >= 3"));
    }
    Ok(())
}

fn check_same_tier_pair(space: Space, u: &Vect, v: &Vect) -> Result<()> {
    if u.dim() != space.n() || v.dim() != space.n() {
        return Err(Error::InvalidVector("vector dimension differs from the space"));
    }
    if u.tier() != v.tier() {
        return Err(Error::Precondition("u and v must lie in the same tier"));
    }
    if u.tier() == space.n() {
        return Err(Error::Precondition("tier n holds a single fixed vertex"));
    }
    if u.skeleton() == v.skeleton() {
        return Err(Error::Precondition("u and v must be distinct"));
    }
    Ok(())
}

/// Vertices of the binary non-zero component graph that lie in `S(G)`: every tier below `n`.
fn binary_moved_skeletons(space: Space) -> impl Iterator<Item = (usize, u64)> {
    let n = space.n();
    (0..space.vector_count()).filter_map(move |id| {
        let mask = (id + 1) as u64;
        // vertex id + 1 is the coefficient string read as a binary number with b1 highest
        let skeleton = (0..n).filter(|&i| mask >> (n - 1 - i) & 1 == 1).fold(0, |m, i| m | 1 << i);
        (mask.count_ones() as usize != n).then_some((id, skeleton))
    })
}

/// `{w ∈ S(G) : |S_w ∩ S_u| ≠ |S_w ∩ S_v|}`, from skeletons alone.
pub fn fix_pair_skeleton(space: Space, u: &Vect, v: &Vect) -> Result<VertexSet> {
    require_binary(space)?;
    check_same_tier_pair(space, u, v)?;
    let (su, sv) = (u.skeleton(), v.skeleton());
    Ok(VertexSet::from_iter_with_capacity(
        space.vector_count(),
        binary_moved_skeletons(space)
            .filter(|&(_, sw)| (sw & su).count_ones() != (sw & sv).count_ones())
            .map(|(id, _)| id),
    ))
}

/// `fix(b_l, b_m)`: vertices of `S(G)` whose skeleton holds exactly one of `b_l`, `b_m`.
/// Basis indices are zero-based.
pub fn fix_pair_basis(space: Space, l: usize, m: usize) -> Result<VertexSet> {
    require_binary(space)?;
    if l == m {
        return Err(Error::Precondition("basis indices must differ"));
    }
    if l >= space.n() || m >= space.n() {
        return Err(Error::OutOfRange("basis index"));
    }
    Ok(VertexSet::from_iter_with_capacity(
        space.vector_count(),
        binary_moved_skeletons(space)
            .filter(|&(_, sw)| (sw >> l & 1) != (sw >> m & 1))
            .map(|(id, _)| id),
    ))
}

/// `C(n, i) - Σ C(i', j)^2 C(n-2i', k) - C(n-2i', i)`, summed over `j_min <= j <= i'`,
/// `0 <= k <= n - 2i'` with `i = 2j + k`.
///
/// The correct lower bound is `j_min = 1`: the `j = 0` case is the trailing term. Other
/// values exist so that tests can show the `j = 0` variant is wrong.
pub fn fix_count_formula(n: usize, i_prime: usize, i: usize, j_min: usize) -> Result<i64> {
    if n < 3 {
        return Err(Error::OutOfRange("counting formula needs n >= 3"));
    }
    if i_prime == 0 || 2 * i_prime > n || i_prime > n - 1 {
        return Err(Error::OutOfRange("disjoint same-tier pair needs 1 <= i' and 2i' <= n"));
    }
    if i == 0 || i > n - 1 {
        return Err(Error::OutOfRange("tier must lie in 1..=n-1"));
    }
    let (n, ip, i) = (n as i64, i_prime as i64, i as i64);
    let rest = n - 2 * ip;
    let mut sum: i64 = 0;
    for j in j_min as i64..=ip {
        let k = i - 2 * j;
        if (0..=rest).contains(&k) {
            let c = binomial_signed(ip, j) as i64;
            sum += c * c * binomial_signed(rest, k) as i64;
        }
    }
    Ok(binomial_signed(n, i) as i64 - sum - binomial_signed(rest, i) as i64)
}

/// `|fix(u, v) ∩ T_i|` for `u, v ∈ T_{i'}` with disjoint skeletons (binary field).
pub fn fix_count_in_tier(n: usize, i_prime: usize, i: usize) -> Result<u64> {
    let value = fix_count_formula(n, i_prime, i, 1)?;
    u64::try_from(value).map_err(|_| Error::OutOfRange("negative count"))
}

/// `|fix(u, v) ∩ T_i|` for `u, v ∈ T_{i'}` sharing `overlap` basis vectors: the disjoint
/// count with `r = i' - overlap` in place of `i'`.
pub fn fix_count_overlapping(n: usize, i_prime: usize, overlap: usize, i: usize) -> Result<u64> {
    if i_prime < 2 || i_prime + 1 > n {
        return Err(Error::OutOfRange("overlapping pairs need 2 <= i' <= n-1"));
    }
    if overlap == 0 || overlap >= i_prime {
        return Err(Error::OutOfRange("overlap must satisfy 0 < overlap < i'"));
    }
    let r = i_prime - overlap;
    if i_prime + r > n {
        return Err(Error::OutOfRange("skeleton union exceeds the dimension"));
    }
    fix_count_in_tier(n, r, i)
}

/// Removes the common skeleton from both vectors: `(u - Σ b, v - Σ b)` over `b ∈ S_u ∩ S_v`.
pub fn translate_pair(space: Space, u: &Vect, v: &Vect) -> Result<(Vect, Vect)> {
    require_binary(space)?;
    check_same_tier_pair(space, u, v)?;
    let common = u.skeleton() & v.skeleton();
    if common == 0 {
        return Ok((u.clone(), v.clone()));
    }
    let shared = space.vect_from_skeleton(common)?;
    let strip = |w: &Vect| space.sub(w, &shared).ok_or(Error::Precondition("translation hit zero"));
    Ok((strip(u)?, strip(v)?))
}

/// True iff the identity is the only automorphism fixing every vertex of `set`.
pub fn is_fixing_set(group: &AutGroup, set: &[usize]) -> bool {
    group.nontrivial().all(|e| set.iter().any(|&v| e[v] as usize != v))
}

/// Bipartite graph between `S(G)` and `V_s(G)`; `x` is joined to `{u, v}` iff
/// `x ∈ fix(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixingGraph {
    left: VertexSet,
    right: PairSet,
    coverers: Vec<VertexSet>,
}

impl FixingGraph {
    /// `S(G)`.
    pub fn left(&self) -> &VertexSet {
        &self.left
    }

    /// `V_s(G)`.
    pub fn right(&self) -> &PairSet {
        &self.right
    }

    /// `fix(u, v)` of the `index`-th pair.
    pub fn fixers(&self, index: usize) -> &VertexSet {
        &self.coverers[index]
    }

    pub fn edge_count(&self) -> usize {
        self.coverers.iter().map(VertexSet::len).sum()
    }

    /// Degree of `x` in the fixing graph.
    pub fn cover_degree(&self, x: usize) -> usize {
        self.coverers.iter().filter(|c| c.contains(x)).count()
    }

    /// Edges as `(x, pair index)`, ordered by pair then vertex.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.coverers.iter().enumerate().flat_map(|(p, c)| c.iter().map(move |x| (x, p)))
    }

    /// `|N_F(D)|`.
    pub fn covered_count(&self, set: &[usize]) -> usize {
        self.coverers.iter().filter(|c| set.iter().any(|&x| c.contains(x))).count()
    }

    /// `N_F(D) = V_s(G)`.
    pub fn covers_all(&self, set: &[usize]) -> bool {
        self.covered_count(set) == self.right.len()
    }
}

pub fn build_fixing_graph(group: &AutGroup) -> FixingGraph {
    let left = moved_vertices(group);
    let right = same_orbit_pairs(group);
    let coverers = right
        .pairs()
        .iter()
        .map(|&(u, v)| fix_pair_unchecked(group, &left, u, v))
        .collect();
    FixingGraph { left, right, coverers }
}

/// A minimum fixing set found by one of the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixingSolution {
    pub size: usize,
    pub witness: Vec<usize>,
}

/// Exact branch and bound over "choose one of these vertices" constraints.
///
/// Each constraint is a vertex set; a solution must meet every constraint. Branching picks
/// the open constraint with the fewest admissible vertices and tries them by descending
/// `priority`, ties by id; vertices tried earlier are excluded in later siblings so that no
/// set is visited twice.
struct HittingSet<'a> {
    capacity: usize,
    constraints: &'a [VertexSet],
    priority: &'a [usize],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl HittingSet<'_> {
    fn solve(mut self, upper: Vec<usize>) -> Vec<usize> {
        self.best = upper;
        let open: Vec<usize> = (0..self.constraints.len()).collect();
        self.branch(&open, &VertexSet::new(self.capacity));
        self.best
    }

    fn packing_bound(&self, open: &[usize], excluded: &VertexSet) -> usize {
        let mut used = excluded.clone();
        let mut count = 0;
        for &c in open {
            if self.constraints[c].is_subset(&used) {
                continue;
            }
            let mut free = self.constraints[c].clone();
            free.difference_with(excluded);
            if free.is_disjoint(&used) {
                used.union_with(&free);
                count += 1;
            }
        }
        count
    }

    fn branch(&mut self, open: &[usize], excluded: &VertexSet) {
        if open.is_empty() {
            if self.current.len() < self.best.len() {
                self.best = self.current.clone();
                self.best.sort_unstable();
            }
            return;
        }
        if self.current.len() + 1 >= self.best.len() {
            return;
        }
        if self.current.len() + self.packing_bound(open, excluded) >= self.best.len() {
            return;
        }
        let pick = open
            .iter()
            .copied()
            .min_by_key(|&c| {
                let mut free = self.constraints[c].clone();
                free.difference_with(excluded);
                (free.len(), c)
            })
            .expect("open is non-empty");
        let mut candidates = self.constraints[pick].clone();
        candidates.difference_with(excluded);
        if candidates.is_empty() {
            return;
        }
        let mut order = candidates.to_vec();
        order.sort_by_key(|&x| (core::cmp::Reverse(self.priority[x]), x));

        let mut excluded = excluded.clone();
        for x in order {
            let rest: Vec<usize> =
                open.iter().copied().filter(|&c| !self.constraints[c].contains(x)).collect();
            self.current.push(x);
            self.branch(&rest, &excluded);
            self.current.pop();
            excluded.insert(x);
        }
    }
}

fn cover_priorities(fg: &FixingGraph, degree: usize) -> Vec<usize> {
    let mut priority = vec![0usize; degree];
    for c in &fg.coverers {
        for x in c {
            priority[x] += 1;
        }
    }
    priority
}

fn trivial_upper_bound(group: &AutGroup) -> Vec<usize> {
    // all vertices but the last always form a fixing set
    (0..group.degree().saturating_sub(1)).collect()
}

/// Fixing number as a hitting set: every non-identity element must move some vertex of `D`.
pub fn fixing_number(group: &AutGroup) -> FixingSolution {
    fixing_number_with(group, &build_fixing_graph(group))
}

/// [`fixing_number`] reusing an already built fixing graph for the branching order.
pub fn fixing_number_with(group: &AutGroup, fg: &FixingGraph) -> FixingSolution {
    if group.is_trivial() {
        return FixingSolution { size: 0, witness: Vec::new() };
    }
    let n = group.degree();
    let mut moved: Vec<VertexSet> = group
        .nontrivial()
        .map(|e| {
            VertexSet::from_iter_with_capacity(
                n,
                e.iter().enumerate().filter(|(v, &w)| *v != w as usize).map(|(v, _)| v),
            )
        })
        .collect();
    // hitting a subset hits every superset: keep one copy of each support
    moved.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    moved.dedup();
    let priority = cover_priorities(fg, n);
    let witness = HittingSet {
        capacity: n,
        constraints: &moved,
        priority: &priority,
        best: Vec::new(),
        current: Vec::new(),
    }
    .solve(trivial_upper_bound(group));
    FixingSolution { size: witness.len(), witness }
}

/// Fixing number as the smallest `D ⊆ S(G)` with `N_F(D) = V_s(G)`.
pub fn fixing_number_by_cover(fg: &FixingGraph) -> FixingSolution {
    if fg.right.is_empty() {
        return FixingSolution { size: 0, witness: Vec::new() };
    }
    let n = fg.left.capacity();
    let priority = cover_priorities(fg, n);
    let upper: Vec<usize> = fg.left.to_vec();
    let witness = HittingSet {
        capacity: n,
        constraints: &fg.coverers,
        priority: &priority,
        best: Vec::new(),
        current: Vec::new(),
    }
    .solve(upper);
    FixingSolution { size: witness.len(), witness }
}

/// Fixed number with a largest non-fixing set as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSolution {
    pub value: usize,
    pub witness: Vec<usize>,
}

/// `fxd(G)`: one more than the largest non-fixing set.
///
/// A set is non-fixing iff some non-identity automorphism fixes it pointwise, so the largest
/// non-fixing sets are the largest fixed-point sets of non-identity elements; the
/// lexicographically least one is the witness. A rigid graph has `fxd = 0`.
pub fn fixed_number(group: &AutGroup) -> FixedSolution {
    let mut best: Option<Vec<usize>> = None;
    for e in group.nontrivial() {
        let fixed: Vec<usize> =
            e.iter().enumerate().filter(|(v, &w)| *v == w as usize).map(|(v, _)| v).collect();
        let better = match &best {
            None => true,
            Some(b) => fixed.len() > b.len() || (fixed.len() == b.len() && fixed < *b),
        };
        if better {
            best = Some(fixed);
        }
    }
    match best {
        None => FixedSolution { value: 0, witness: Vec::new() },
        Some(w) => FixedSolution { value: w.len() + 1, witness: w },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixReport {
    pub fixing_number: usize,
    pub fixed_number: usize,
    pub witness_min_fixing_set: Vec<usize>,
    pub witness_max_nonfixing_set: Vec<usize>,
    /// Fixing number recomputed as a cover of the fixing graph.
    pub fixing_number_via_cover: usize,
}

/// Runs both fixing-number solvers and the fixed-number computation.
pub fn fix_report(group: &AutGroup) -> FixReport {
    fix_report_with(group, &build_fixing_graph(group))
}

pub fn fix_report_with(group: &AutGroup, fg: &FixingGraph) -> FixReport {
    let fix = fixing_number_with(group, fg);
    let cover = fixing_number_by_cover(fg);
    let fxd = fixed_number(group);
    FixReport {
        fixing_number: fix.size,
        fixed_number: fxd.value,
        witness_min_fixing_set: fix.witness,
        witness_max_nonfixing_set: fxd.witness,
        fixing_number_via_cover: cover.size,
    }
}

/// Whether some pair of vertices are twins. The equivalence with `fxd(G) = |V(G)| - 1` is a
/// statement about connected graphs, so disconnected input is rejected.
pub fn check_twin_criterion(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(find_twins(g).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::automorphism_group;
    use crate::constructions::build_family_graph;
    use crate::vecspace::{build_nzc_graph, enumerate_vectors};
    use crate::Limits;

    fn aut(g: &Graph) -> AutGroup {
        automorphism_group(g, &Limits::default()).unwrap()
    }

    fn nzc(n: usize) -> (Space, AutGroup) {
        let s = Space::new(n, 2).unwrap();
        (s, aut(&build_nzc_graph(s)))
    }

    fn ids(s: Space, coeffs: &[&str]) -> Vec<usize> {
        let mut v: Vec<usize> =
            coeffs.iter().map(|c| s.index_of(&s.parse_coeffs(c).unwrap())).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn moved_vertices_examples() {
        assert!(moved_vertices(&aut(&Graph::asymmetric_tree())).is_empty());
        let (s, g) = nzc(3);
        let mut expected: Vec<usize> = (0..7).collect();
        expected.retain(|&v| v != s.all_ones_vertex());
        assert_eq!(moved_vertices(&g).to_vec(), expected);
        assert_eq!(moved_vertices(&aut(&Graph::complete(3))).len(), 3);
    }

    #[test]
    fn same_orbit_pair_examples() {
        assert!(same_orbit_pairs(&aut(&Graph::asymmetric_tree())).is_empty());
        assert_eq!(same_orbit_pairs(&nzc(3).1).len(), 6);
        assert_eq!(same_orbit_pairs(&aut(&Graph::complete(3))).len(), 3);
    }

    #[test]
    fn definitional_fixing_neighbourhoods() {
        let k3 = aut(&Graph::complete(3));
        assert_eq!(fix_pair_definitional(&k3, 0, 1).unwrap().to_vec(), [0, 1]);
        assert!(fix_pair_definitional(&k3, 1, 1).is_err());

        let (s, g) = nzc(3);
        let b1 = s.basis_vertex(0);
        let b2 = s.basis_vertex(1);
        let b12 = ids(s, &["110"])[0];
        assert!(fix_pair_definitional(&g, b1, b12).unwrap().is_empty());
        assert_eq!(
            fix_pair_definitional(&g, b1, b2).unwrap().to_vec(),
            ids(s, &["100", "010", "101", "011"])
        );
    }

    #[test]
    fn skeleton_fixing_neighbourhoods() {
        let s = Space::new(3, 2).unwrap();
        let (b1, b2) = (s.basis(0).unwrap(), s.basis(1).unwrap());
        assert_eq!(
            fix_pair_skeleton(s, &b1, &b2).unwrap().to_vec(),
            ids(s, &["100", "010", "101", "011"])
        );
        assert!(fix_pair_skeleton(s, &b1, &b1).is_err());
        assert!(fix_pair_skeleton(s, &b1, &s.parse_coeffs("110").unwrap()).is_err());
        let top = s.parse_coeffs("111").unwrap();
        assert!(fix_pair_skeleton(s, &top, &top).is_err());
        assert!(fix_pair_skeleton(Space::new(2, 3).unwrap(), &b1, &b2).is_err());

        let s4 = Space::new(4, 2).unwrap();
        let fix = fix_pair_skeleton(s4, &s4.basis(0).unwrap(), &s4.basis(1).unwrap()).unwrap();
        // brute-force skeleton scan: exactly one of b1, b2 in the skeleton, tier < 4
        let brute: Vec<usize> = enumerate_vectors(s4)
            .iter()
            .filter(|w| w.tier() < 4 && w.in_skeleton(0) != w.in_skeleton(1))
            .map(|w| s4.index_of(w))
            .collect();
        assert_eq!(fix.to_vec(), brute);
        let by_tier = |t| fix.iter().filter(|&w| s4.vector(w).unwrap().tier() == t).count();
        assert_eq!((fix.len(), by_tier(1), by_tier(2), by_tier(3)), (8, 2, 4, 2));
    }

    #[test]
    fn basis_pair_neighbourhoods() {
        let s = Space::new(3, 2).unwrap();
        assert_eq!(fix_pair_basis(s, 0, 1).unwrap().to_vec(), ids(s, &["100", "010", "101", "011"]));
        assert_eq!(fix_pair_basis(Space::new(4, 2).unwrap(), 0, 1).unwrap().len(), 8);
        assert!(fix_pair_basis(s, 0, 0).is_err());
    }

    #[test]
    fn counting_formula_values() {
        assert_eq!(fix_count_in_tier(4, 1, 1).unwrap(), 2);
        assert_eq!(fix_count_in_tier(4, 1, 2).unwrap(), 4);
        assert_eq!(fix_count_in_tier(4, 1, 3).unwrap(), 2);
        assert_eq!(fix_count_formula(4, 1, 1, 0).unwrap(), 0);
        assert!(fix_count_in_tier(4, 3, 1).is_err());
        assert!(fix_count_in_tier(4, 1, 4).is_err());

        assert_eq!(fix_count_overlapping(4, 2, 1, 1).unwrap(), 2);
        assert_eq!(fix_count_overlapping(5, 2, 1, 2).unwrap(), fix_count_in_tier(5, 1, 2).unwrap());
        assert!(fix_count_overlapping(4, 2, 2, 1).is_err());
        assert!(fix_count_overlapping(4, 2, 0, 1).is_err());
    }

    #[test]
    fn counting_brute_force_n4() {
        // oracle: tier counts of the definitional neighbourhood of b1, b2
        let (s, g) = nzc(4);
        let fix = fix_pair_definitional(&g, s.basis_vertex(0), s.basis_vertex(1)).unwrap();
        for i in 1..4 {
            let count = fix.iter().filter(|&w| s.vector(w).unwrap().tier() == i).count();
            assert_eq!(count as u64, fix_count_in_tier(4, 1, i).unwrap());
        }
        // overlapping pair b1+b3, b2+b3
        let fix = fix_pair_definitional(&g, ids(s, &["1010"])[0], ids(s, &["0110"])[0]).unwrap();
        let t1 = fix.iter().filter(|&w| s.vector(w).unwrap().tier() == 1).count();
        assert_eq!(t1, 2);
    }

    #[test]
    fn translation_examples() {
        let s = Space::new(4, 2).unwrap();
        let p = |c| s.parse_coeffs(c).unwrap();
        let (a, b) = translate_pair(s, &p("1010"), &p("0110")).unwrap();
        assert_eq!((a, b), (p("1000"), p("0100")));
        let (a, b) = translate_pair(s, &p("1000"), &p("0100")).unwrap();
        assert_eq!((a, b), (p("1000"), p("0100")));
        let (u, v) = (p("1110"), p("1101"));
        let (a, b) = translate_pair(s, &u, &v).unwrap();
        assert_eq!((a.clone(), b.clone()), (p("0010"), p("0001")));
        let g = aut(&build_nzc_graph(s));
        assert_eq!(
            fix_pair_definitional(&g, s.index_of(&u), s.index_of(&v)).unwrap(),
            fix_pair_definitional(&g, s.index_of(&a), s.index_of(&b)).unwrap()
        );
        assert!(translate_pair(s, &u, &u).is_err());
    }

    #[test]
    fn fixing_set_examples() {
        let (s, g) = nzc(3);
        assert!(is_fixing_set(&g, &(0..7).collect::<Vec<_>>()));
        assert!(!is_fixing_set(&g, &[s.basis_vertex(0)]));
        assert!(is_fixing_set(&g, &[s.basis_vertex(0), s.basis_vertex(1)]));
    }

    #[test]
    fn fixing_numbers() {
        let rigid = aut(&Graph::asymmetric_tree());
        assert_eq!(fixing_number(&rigid), FixingSolution { size: 0, witness: vec![] });
        let (_, g) = nzc(3);
        let sol = fixing_number(&g);
        assert_eq!(sol.size, 2);
        assert!(is_fixing_set(&g, &sol.witness));
        let fam = aut(&build_family_graph(3).unwrap());
        assert_eq!(fixing_number(&fam).size, 4);
        assert_eq!(fixing_number(&aut(&Graph::cycle(5).unwrap())).size, 2);
    }

    #[test]
    fn fixed_numbers() {
        assert_eq!(fixed_number(&aut(&Graph::asymmetric_tree())).value, 0);
        let (_, g) = nzc(3);
        let fxd = fixed_number(&g);
        assert_eq!(fxd.value, 4);
        assert_eq!(fxd.witness.len(), 3);
        assert!(!is_fixing_set(&g, &fxd.witness));
        assert_eq!(fixed_number(&aut(&Graph::star(3))).value, 3);
        assert_eq!(fixed_number(&aut(&Graph::cycle(5).unwrap())).value, 2);
    }

    #[test]
    fn fixing_graph_examples() {
        let rigid = build_fixing_graph(&aut(&Graph::asymmetric_tree()));
        assert_eq!(rigid.edge_count(), 0);
        assert!(rigid.right().is_empty());

        let k3 = build_fixing_graph(&aut(&Graph::complete(3)));
        assert_eq!(k3.right().len(), 3);
        assert_eq!(k3.edge_count(), 6);
        for (p, &(u, v)) in k3.right().pairs().iter().enumerate() {
            assert_eq!(k3.fixers(p).to_vec(), [u, v]);
        }

        // each pair of C5 is swapped by exactly one reflection, through the remaining vertex
        let c5 = build_fixing_graph(&aut(&Graph::cycle(5).unwrap()));
        assert_eq!(c5.right().len(), 10);
        assert_eq!(c5.edge_count(), 40);
        assert!(c5.edge_count() <= 45);
    }

    #[test]
    fn cover_solver_agrees_on_small_graphs() {
        for g in [
            build_nzc_graph(Space::new(3, 2).unwrap()),
            Graph::cycle(6).unwrap(),
            Graph::path(5).unwrap(),
            Graph::star(4),
            build_family_graph(3).unwrap(),
        ] {
            let group = aut(&g);
            let fg = build_fixing_graph(&group);
            let cover = fixing_number_by_cover(&fg);
            assert_eq!(cover.size, fixing_number(&group).size);
            assert!(fg.covers_all(&cover.witness));
            assert!(is_fixing_set(&group, &cover.witness));
        }
    }

    #[test]
    fn twin_criterion() {
        assert_eq!(check_twin_criterion(&Graph::complete(3)), Ok(true));
        assert_eq!(check_twin_criterion(&build_nzc_graph(Space::new(2, 3).unwrap())), Ok(true));
        assert_eq!(check_twin_criterion(&Graph::cycle(5).unwrap()), Ok(false));
        assert_eq!(check_twin_criterion(&Graph::new(2)), Err(Error::Disconnected));
    }
}
