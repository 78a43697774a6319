//! Named machine checks, one per structural claim about non-zero component graphs and
//! fixing parameters.
//!
//! A check is a [`Claim`] applied to a [`Subject`]; every check quantifies over all
//! instances in range (all automorphisms, all pairs, all tiers). Failures carry a concrete
//! counterexample that can be replayed through the public operations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::autgroup::{automorphism_group, brute_force_automorphisms, is_automorphism, AutGroup};
use crate::bitset::VertexSet;
use crate::constructions::{build_family_graph, predicted_fix, predicted_fxd, FamilyParams};
use crate::error::{Error, Result};
use crate::fixing::{
    build_fixing_graph, check_twin_criterion, fix_count_formula, fix_count_overlapping,
    fix_pair_basis, fix_pair_definitional, fix_pair_skeleton, fix_report_with, fixed_number,
    is_fixing_set, translate_pair,
};
use crate::graph::{find_twins, twin_classes, Graph};
use crate::math::{binomial, factorial};
use crate::vecspace::{build_nzc_graph, degree_formula, enumerate_vectors, tier_class_size, Space, Vect};
use crate::Limits;

macro_rules! claims {
    ($($variant:ident => $id:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Claim { $($variant),* }

        impl Claim {
            pub const ALL: &'static [Claim] = &[$(Claim::$variant),*];

            pub fn id(self) -> &'static str {
                match self { $(Claim::$variant => $id),* }
            }

            pub fn from_id(id: &str) -> Option<Claim> {
                match id { $($id => Some(Claim::$variant),)* _ => None }
            }
        }
    };
}

claims! {
    DegreeFormula => "deg-formula",
    TierSizes => "tier-sizes",
    AutOrder => "aut-order",
    BasisImage => "basis-image",
    TierPreservation => "tier-preservation",
    TopFixed => "top-fixed",
    TierOrbit => "tier-orbit",
    BasisMembership => "basis-membership",
    Transposition => "transposition",
    SkeletonDifference => "skeleton-difference",
    StabilizerSkeleton => "stabilizer-skeleton",
    SwapLemmaN4 => "n4-lemma",
    FixingNeighbourhood => "fixngh-theorem",
    BasisPair => "basis-pair",
    FnpLemma => "fnp-lemma",
    Translation => "translation",
    CountingTheorem => "counting-theorem",
    CountingCorollary => "counting-corollary",
    FixedNumberBinary => "fxd-q2",
    FixedNumberLargeField => "fxd-qge3",
    TwinCriterion => "twin-criterion",
    Family => "family",
    EdgeBound => "edge-bound",
    FixChain => "fix-chain",
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Small graphs used by the graph-generic checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedGraph {
    Cycle(usize),
    Path(usize),
    Star(usize),
    AsymmetricTree,
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph> {
        match self {
            NamedGraph::Cycle(n) => Graph::cycle(n),
            NamedGraph::Path(n) => Graph::path(n),
            NamedGraph::Star(l) => Ok(Graph::star(l)),
            NamedGraph::AsymmetricTree => Ok(Graph::asymmetric_tree()),
        }
    }

    pub fn name(self) -> String {
        match self {
            NamedGraph::Cycle(n) => format!("cycle-{n}"),
            NamedGraph::Path(n) => format!("path-{n}"),
            NamedGraph::Star(l) => format!("star-{l}"),
            NamedGraph::AsymmetricTree => "asymmetric-tree".to_string(),
        }
    }

    pub fn parse(name: &str) -> Option<NamedGraph> {
        if name == "asymmetric-tree" {
            return Some(NamedGraph::AsymmetricTree);
        }
        let (kind, size) = name.split_once('-')?;
        let size: usize = size.parse().ok()?;
        match kind {
            "cycle" => Some(NamedGraph::Cycle(size)),
            "path" => Some(NamedGraph::Path(size)),
            "star" => Some(NamedGraph::Star(size)),
            _ => None,
        }
    }
}

/// What a check runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subject {
    Nzc { n: usize, q: u32 },
    Family { k: usize },
    Named(NamedGraph),
}

impl Subject {
    /// Parameters as strings, for reports.
    pub fn params(&self) -> BTreeMap<&'static str, String> {
        let mut m = BTreeMap::new();
        match *self {
            Subject::Nzc { n, q } => {
                m.insert("n", n.to_string());
                m.insert("q", q.to_string());
            }
            Subject::Family { k } => {
                m.insert("k", k.to_string());
            }
            Subject::Named(g) => {
                m.insert("graph", g.name());
            }
        }
        m
    }

    /// Inverse of [`Subject::params`].
    pub fn from_params<'a, I>(params: I) -> Option<Subject>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut n = None;
        let mut q = None;
        let mut k = None;
        let mut graph = None;
        for (key, value) in params {
            match key {
                "n" => n = Some(value.parse().ok()?),
                "q" => q = Some(value.parse().ok()?),
                "k" => k = Some(value.parse().ok()?),
                "graph" => graph = Some(NamedGraph::parse(value)?),
                _ => return None,
            }
        }
        match (n, q, k, graph) {
            (Some(n), Some(q), None, None) => Some(Subject::Nzc { n, q }),
            (None, None, Some(k), None) => Some(Subject::Family { k }),
            (None, None, None, Some(g)) => Some(Subject::Named(g)),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Subject::Nzc { n, q } => Ok(build_nzc_graph(Space::new(n, q)?)),
            Subject::Family { k } => build_family_graph(k),
            Subject::Named(g) => g.build(),
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Subject::Nzc { n, q } => write!(f, "nzc(n={n}, q={q})"),
            Subject::Family { k } => write!(f, "family(k={k})"),
            Subject::Named(g) => f.write_str(&g.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckInstance {
    pub claim: Claim,
    pub subject: Subject,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    ResourceLimit,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ResourceLimit => "resource-limit",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub status: Status,
    /// Counterexamples on failure, confirming summaries on success.
    pub witnesses: Vec<String>,
}

impl CheckOutcome {
    fn pass(summary: String) -> Self {
        CheckOutcome { status: Status::Pass, witnesses: vec![summary] }
    }

    fn fail(witness: String) -> Self {
        CheckOutcome { status: Status::Fail, witnesses: vec![witness] }
    }

    fn resource(err: &Error) -> Self {
        CheckOutcome { status: Status::ResourceLimit, witnesses: vec![err.to_string()] }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Graphs every graph-generic check runs on, besides the non-zero component graphs and
/// family graphs of the requested range.
pub fn graph_corpus() -> Vec<Subject> {
    let mut out = Vec::new();
    out.extend((3..=8).map(|n| Subject::Named(NamedGraph::Cycle(n))));
    out.extend((2..=8).map(|n| Subject::Named(NamedGraph::Path(n))));
    out.extend((2..=4).map(|l| Subject::Named(NamedGraph::Star(l))));
    out.push(Subject::Named(NamedGraph::AsymmetricTree));
    out.push(Subject::Family { k: 3 });
    out.push(Subject::Family { k: 4 });
    out
}

const BINARY_CLAIMS: &[Claim] = &[
    Claim::DegreeFormula,
    Claim::TierSizes,
    Claim::AutOrder,
    Claim::BasisImage,
    Claim::TierPreservation,
    Claim::TopFixed,
    Claim::TierOrbit,
    Claim::BasisMembership,
    Claim::Transposition,
    Claim::SkeletonDifference,
    Claim::StabilizerSkeleton,
    Claim::SwapLemmaN4,
    Claim::FixingNeighbourhood,
    Claim::BasisPair,
    Claim::FnpLemma,
    Claim::Translation,
    Claim::CountingTheorem,
    Claim::CountingCorollary,
    Claim::FixedNumberBinary,
];

const LARGE_FIELD_CLAIMS: &[Claim] = &[Claim::TierSizes, Claim::BasisImage, Claim::FixedNumberLargeField];

const GRAPH_CLAIMS: &[Claim] = &[Claim::TwinCriterion, Claim::EdgeBound, Claim::FixChain];

/// Every check for `q ∈ q_list`, `n <= n_max`, plus the graph corpus, in canonical order.
///
/// Binary spaces start at `n = 3`, larger fields at `n = 2`.
pub fn suite(n_max: usize, q_list: &[u32]) -> Vec<CheckInstance> {
    let mut qs = q_list.to_vec();
    qs.sort_unstable();
    qs.dedup();
    let mut out = Vec::new();
    for q in qs {
        let (start, claims) = if q == 2 { (3, BINARY_CLAIMS) } else { (2, LARGE_FIELD_CLAIMS) };
        for n in start..=n_max {
            let subject = Subject::Nzc { n, q };
            for &claim in claims.iter().chain(GRAPH_CLAIMS) {
                if claim == Claim::SwapLemmaN4 && n < 4 {
                    continue;
                }
                out.push(CheckInstance { claim, subject });
            }
        }
    }
    for subject in graph_corpus() {
        if let Subject::Family { .. } = subject {
            out.push(CheckInstance { claim: Claim::Family, subject });
        }
        for &claim in GRAPH_CLAIMS {
            out.push(CheckInstance { claim, subject });
        }
    }
    out
}

/// Runs a single check. Resource caps become [`Status::ResourceLimit`]; a claim applied to a
/// subject it does not speak about is an error.
pub fn run_check(instance: &CheckInstance, limits: &Limits) -> Result<CheckOutcome> {
    match evaluate(instance, limits) {
        Err(e) if e.is_resource_limit() => Ok(CheckOutcome::resource(&e)),
        other => other,
    }
}

/// Runs every instance of [`suite`] in order.
pub fn run_suite(n_max: usize, q_list: &[u32], limits: &Limits) -> Vec<(CheckInstance, CheckOutcome)> {
    suite(n_max, q_list)
        .into_iter()
        .map(|inst| {
            let outcome = run_check(&inst, limits).unwrap_or_else(|e| CheckOutcome::fail(e.to_string()));
            (inst, outcome)
        })
        .collect()
}

fn evaluate(instance: &CheckInstance, limits: &Limits) -> Result<CheckOutcome> {
    use Claim::*;
    let subject = instance.subject;
    match instance.claim {
        TwinCriterion => return twin_criterion(subject, limits),
        EdgeBound => return edge_bound(subject, limits),
        FixChain => return fix_chain(subject, limits),
        Family => {
            return match subject {
                Subject::Family { k } => family(k, limits),
                _ => Err(Error::Precondition("family check needs a family subject")),
            }
        }
        _ => {}
    }
    let Subject::Nzc { n, q } = subject else {
        return Err(Error::Precondition("claim is about non-zero component graphs"));
    };
    let space = Space::new(n, q)?;
    match instance.claim {
        TierSizes => return tier_sizes(space),
        DegreeFormula => return degree_check(space),
        _ => {}
    }
    let ctx = NzcContext::new(space, limits)?;
    match instance.claim {
        BasisImage => return Ok(ctx.basis_image()),
        FixedNumberLargeField => return ctx.fixed_number_large_field(),
        _ => {}
    }
    if q != 2 || n < 3 {
        return Err(Error::Precondition("claim holds for binary spaces with n >= 3"));
    }
    match instance.claim {
        AutOrder => ctx.aut_order(),
        TierPreservation => Ok(ctx.tier_preservation()),
        TopFixed => Ok(ctx.top_fixed()),
        TierOrbit => Ok(ctx.tier_orbit()),
        BasisMembership => Ok(ctx.basis_membership()),
        Transposition => Ok(ctx.transposition()),
        SkeletonDifference => Ok(ctx.skeleton_difference()),
        StabilizerSkeleton => Ok(ctx.stabilizer_skeleton()),
        SwapLemmaN4 => ctx.swap_lemma_n4(),
        FixingNeighbourhood => ctx.fixing_neighbourhood(),
        BasisPair => ctx.basis_pair(),
        FnpLemma => ctx.fnp_lemma(),
        Translation => ctx.translation(),
        CountingTheorem => ctx.counting_theorem(1),
        CountingCorollary => ctx.counting_corollary(),
        FixedNumberBinary => Ok(ctx.fixed_number_binary()),
        _ => unreachable!("handled above"),
    }
}

/// The counting-theorem check with an arbitrary lower bound on `j`; `j_min = 1` is the
/// correct formula. Exists so the check can be shown to reject the `j >= 0` reading.
pub fn counting_check_with_lower_bound(n: usize, j_min: usize, limits: &Limits) -> Result<CheckOutcome> {
    let ctx = NzcContext::new(Space::new(n, 2)?, limits)?;
    ctx.counting_theorem(j_min)
}

fn tier_sizes(space: Space) -> Result<CheckOutcome> {
    let vectors = enumerate_vectors(space);
    let mut total = 0u64;
    for i in 1..=space.n() {
        let size = tier_class_size(space, i)?;
        let counted = vectors.iter().filter(|v| v.tier() == i).count() as u64;
        if size != counted {
            return Ok(CheckOutcome::fail(format!("tier {i}: formula {size}, enumerated {counted}")));
        }
        total += size;
    }
    if total as usize != space.vector_count() {
        return Ok(CheckOutcome::fail(format!("tier sizes sum to {total}")));
    }
    Ok(CheckOutcome::pass(format!("{} tiers sum to {}", space.n(), total)))
}

fn degree_check(space: Space) -> Result<CheckOutcome> {
    if space.q() != 2 {
        return Err(Error::Precondition("degree formula is for binary spaces"));
    }
    let g = build_nzc_graph(space);
    for v in 0..g.order() {
        let label = g.label(v).expect("labelled");
        let expected = degree_formula(space.n(), label.tier())?;
        if g.degree(v) as u64 != expected {
            return Ok(CheckOutcome::fail(format!(
                "v={label}: degree {}, formula {expected}",
                g.degree(v)
            )));
        }
    }
    Ok(CheckOutcome::pass(format!("{} vertices match", g.order())))
}

struct NzcContext {
    space: Space,
    graph: Graph,
    group: AutGroup,
    labels: Vec<Vect>,
    basis: Vec<usize>,
    top: usize,
}

impl NzcContext {
    fn new(space: Space, limits: &Limits) -> Result<Self> {
        let graph = build_nzc_graph(space);
        let group = automorphism_group(&graph, limits)?;
        let labels = graph.labels().expect("labelled").to_vec();
        Ok(NzcContext {
            space,
            basis: (0..space.n()).map(|i| space.basis_vertex(i)).collect(),
            top: space.all_ones_vertex(),
            graph,
            group,
            labels,
        })
    }

    fn n(&self) -> usize {
        self.space.n()
    }

    fn order(&self) -> usize {
        self.graph.order()
    }

    fn skel(&self, v: usize) -> u64 {
        self.labels[v].skeleton()
    }

    fn tier(&self, v: usize) -> usize {
        self.labels[v].tier()
    }

    fn show(&self, v: usize) -> String {
        self.labels[v].to_string()
    }

    fn show_set(&self, set: &VertexSet) -> String {
        let items: Vec<String> = set.iter().map(|v| self.show(v)).collect();
        format!("{{{}}}", items.join(", "))
    }

    fn show_perm(&self, e: &[u32]) -> String {
        format!("{e:?}")
    }

    /// Same-tier pairs `u < v` with tier at most `n - 1`.
    fn same_tier_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .filter(move |&(u, v)| self.tier(u) == self.tier(v) && self.tier(u) < self.n())
    }

    /// Automorphisms exchanging basis vectors `l` and `m`, `l < m`.
    fn basis_swaps(&self) -> impl Iterator<Item = (&[u32], usize, usize)> + '_ {
        self.group.nontrivial().flat_map(move |e| {
            (0..self.n()).flat_map(move |l| {
                (l + 1..self.n()).filter_map(move |m| {
                    let (bl, bm) = (self.basis[l], self.basis[m]);
                    (e[bl] as usize == bm && e[bm] as usize == bl).then_some((e, l, m))
                })
            })
        })
    }

    fn aut_order(&self) -> Result<CheckOutcome> {
        let expected = factorial(self.n() as u64) as usize;
        if self.group.order() != expected {
            return Ok(CheckOutcome::fail(format!(
                "|Aut| = {}, expected n! = {expected}",
                self.group.order()
            )));
        }
        for e in self.group.elements() {
            let p = crate::autgroup::Perm::from_images(e.to_vec())?;
            if !is_automorphism(&self.graph, &p)? {
                return Ok(CheckOutcome::fail(format!("{} is not an automorphism", self.show_perm(e))));
            }
        }
        if self.group.order() <= 1000 {
            for i in 0..self.group.order() {
                let a = self.group.perm(i);
                if !self.group.contains(a.inverse().images()) {
                    return Ok(CheckOutcome::fail(format!("inverse of {:?} missing", a.images())));
                }
                for j in 0..self.group.order() {
                    let c = a.compose(&self.group.perm(j));
                    if !self.group.contains(c.images()) {
                        return Ok(CheckOutcome::fail(format!("not closed: {:?}", c.images())));
                    }
                }
            }
        }
        let mut summary = format!("|Aut| = {expected}");
        if self.order() <= 7 {
            let brute = brute_force_automorphisms(&self.graph)?;
            let same = brute.len() == self.group.order()
                && brute.iter().zip(self.group.elements()).all(|(b, e)| b.images() == e);
            if !same {
                return Ok(CheckOutcome::fail(format!(
                    "unpruned enumeration found {} automorphisms, search found {}",
                    brute.len(),
                    self.group.order()
                )));
            }
            summary.push_str(&format!(
                ", matches unpruned enumeration of {} bijections",
                factorial(self.order() as u64)
            ));
        }
        Ok(CheckOutcome::pass(summary))
    }

    fn basis_image(&self) -> CheckOutcome {
        for e in self.group.elements() {
            let mut seen = 0u64;
            for &b in &self.basis {
                let img = e[b] as usize;
                let s = self.skel(img);
                if s.count_ones() != 1 || seen & s != 0 {
                    return CheckOutcome::fail(format!(
                        "g={} sends {} to {}",
                        self.show_perm(e),
                        self.show(b),
                        self.show(img)
                    ));
                }
                seen |= s;
            }
        }
        CheckOutcome::pass(format!(
            "all {} automorphisms send the basis to scaled permuted basis vectors",
            self.group.order()
        ))
    }

    fn tier_preservation(&self) -> CheckOutcome {
        for e in self.group.elements() {
            for v in 0..self.order() {
                if self.tier(e[v] as usize) != self.tier(v) {
                    return CheckOutcome::fail(format!(
                        "g={} sends {} to {}",
                        self.show_perm(e),
                        self.show(v),
                        self.show(e[v] as usize)
                    ));
                }
            }
        }
        CheckOutcome::pass(format!("{} automorphisms preserve tiers", self.group.order()))
    }

    fn top_fixed(&self) -> CheckOutcome {
        match self.group.elements().find(|e| e[self.top] as usize != self.top) {
            Some(e) => CheckOutcome::fail(format!("g={} moves {}", self.show_perm(e), self.show(self.top))),
            None => CheckOutcome::pass(format!("{} fixed by all {} automorphisms", self.show(self.top), self.group.order())),
        }
    }

    fn tier_orbit(&self) -> CheckOutcome {
        let ids = self.group.orbit_partition();
        let n = self.order();
        for u in 0..n {
            let moved = ids.iter().filter(|&&i| i == ids[u]).count() >= 2;
            if moved != (self.tier(u) < self.n()) {
                return CheckOutcome::fail(format!("{}: orbit size >= 2 is {moved}", self.show(u)));
            }
            for v in u + 1..n {
                let same_orbit = ids[u] == ids[v];
                let same_tier = self.tier(u) == self.tier(v) && self.tier(u) < self.n();
                if same_orbit != same_tier {
                    return CheckOutcome::fail(format!(
                        "{}, {}: same orbit {same_orbit}, same tier below n {same_tier}",
                        self.show(u),
                        self.show(v)
                    ));
                }
            }
        }
        CheckOutcome::pass("orbits are exactly the tiers T_1..T_{n-1} plus the top vertex".to_string())
    }

    fn basis_membership(&self) -> CheckOutcome {
        let mut checked = 0usize;
        for l in 0..self.n() {
            let bl = self.basis[l];
            for e in self.group.elements().filter(|e| e[bl] as usize == bl) {
                for u in 0..self.order() {
                    checked += 1;
                    let gu = e[u] as usize;
                    if self.labels[u].in_skeleton(l) != self.labels[gu].in_skeleton(l) {
                        return CheckOutcome::fail(format!(
                            "g={} fixes {} but u={} maps to {}",
                            self.show_perm(e),
                            self.show(bl),
                            self.show(u),
                            self.show(gu)
                        ));
                    }
                }
            }
        }
        CheckOutcome::pass(format!("{checked} (l, g, u) triples"))
    }

    fn transposition(&self) -> CheckOutcome {
        let mut checked = 0usize;
        for (e, l, m) in self.basis_swaps() {
            for u in 0..self.order() {
                checked += 1;
                let (a, b) = (&self.labels[u], &self.labels[e[u] as usize]);
                let part_one = !(a.in_skeleton(l) && !a.in_skeleton(m))
                    || (!b.in_skeleton(l) && b.in_skeleton(m));
                let both = |x: &Vect| x.in_skeleton(l) && x.in_skeleton(m);
                let part_two = both(a) == both(b);
                if !(part_one && part_two) {
                    return CheckOutcome::fail(format!(
                        "g={} swaps b{} and b{}; u={} maps to {b} (part {})",
                        self.show_perm(e),
                        l + 1,
                        m + 1,
                        a,
                        if part_one { "ii" } else { "i" }
                    ));
                }
            }
        }
        if checked == 0 {
            return CheckOutcome::fail("no automorphism exchanges two basis vectors".to_string());
        }
        CheckOutcome::pass(format!("{checked} (g, l, m, u) instances"))
    }

    fn skeleton_difference(&self) -> CheckOutcome {
        let mut checked = 0usize;
        for e in self.group.nontrivial() {
            for (u, v) in self.same_tier_pairs() {
                if e[u] as usize != v || e[v] as usize != u {
                    continue;
                }
                let (su, sv) = (self.skel(u), self.skel(v));
                for &b in &self.basis {
                    checked += 1;
                    let bit = self.skel(b);
                    let img = self.skel(e[b] as usize);
                    let ok_common = bit & su & sv == 0 || img & su & sv != 0;
                    let ok_diff = bit & su & !sv == 0 || img & sv & !su != 0;
                    if !(ok_common && ok_diff) {
                        return CheckOutcome::fail(format!(
                            "g={} exchanges {} and {}; b={} maps to {}",
                            self.show_perm(e),
                            self.show(u),
                            self.show(v),
                            self.show(b),
                            self.show(e[b] as usize)
                        ));
                    }
                }
            }
        }
        CheckOutcome::pass(format!("{checked} (g, u, v, b) instances"))
    }

    fn stabilizer_skeleton(&self) -> CheckOutcome {
        let mut checked = 0usize;
        for u in 0..self.order() {
            let su = self.skel(u);
            for e in self.group.elements().filter(|e| e[u] as usize == u) {
                for &b in &self.basis {
                    checked += 1;
                    let inside = self.skel(b) & su != 0;
                    let image_inside = self.skel(e[b] as usize) & su != 0;
                    if inside != image_inside {
                        return CheckOutcome::fail(format!(
                            "g={} fixes {} but sends {} to {}",
                            self.show_perm(e),
                            self.show(u),
                            self.show(b),
                            self.show(e[b] as usize)
                        ));
                    }
                }
            }
        }
        CheckOutcome::pass(format!("{checked} (u, g, b) instances"))
    }

    fn swap_lemma_n4(&self) -> Result<CheckOutcome> {
        let n = self.n();
        if n < 4 {
            return Err(Error::Precondition("lemma needs n >= 4"));
        }
        let all = (1u64 << n) - 1;
        let vertex = |mask: u64| -> Result<usize> { Ok(self.space.index_of(&self.space.vect_from_skeleton(mask)?)) };
        let mut checked = 0usize;
        for (e, l, m) in self.basis_swaps() {
            checked += 1;
            let pair = (1u64 << l) | (1u64 << m);
            let u2 = vertex(pair)?;
            let un2 = vertex(all & !pair)?;
            let ul = vertex(all & !(1 << l))?;
            let um = vertex(all & !(1 << m))?;
            let failures = [
                (e[u2] as usize != u2, "i", u2),
                (e[un2] as usize != un2, "ii", un2),
                (e[ul] as usize != um || e[um] as usize != ul, "iii", ul),
            ];
            if let Some((_, part, v)) = failures.iter().find(|f| f.0) {
                return Ok(CheckOutcome::fail(format!(
                    "g={} swaps b{} and b{}; part {part} fails at {}",
                    self.show_perm(e),
                    l + 1,
                    m + 1,
                    self.show(*v)
                )));
            }
        }
        if checked == 0 {
            return Ok(CheckOutcome::fail("no automorphism exchanges two basis vectors".to_string()));
        }
        Ok(CheckOutcome::pass(format!("{checked} basis-swapping automorphisms")))
    }

    fn fixing_neighbourhood(&self) -> Result<CheckOutcome> {
        let mut checked = 0usize;
        for (u, v) in self.same_tier_pairs() {
            checked += 1;
            let by_def = fix_pair_definitional(&self.group, u, v)?;
            let by_skel = fix_pair_skeleton(self.space, &self.labels[u], &self.labels[v])?;
            if by_def != by_skel {
                return Ok(CheckOutcome::fail(format!(
                    "u={}, v={}: definitional {} vs skeleton {}",
                    self.show(u),
                    self.show(v),
                    self.show_set(&by_def),
                    self.show_set(&by_skel)
                )));
            }
        }
        Ok(CheckOutcome::pass(format!("{checked} same-tier pairs agree")))
    }

    fn basis_pair(&self) -> Result<CheckOutcome> {
        let mut checked = 0usize;
        for l in 0..self.n() {
            for m in l + 1..self.n() {
                checked += 1;
                let by_def = fix_pair_definitional(&self.group, self.basis[l], self.basis[m])?;
                let by_basis = fix_pair_basis(self.space, l, m)?;
                if by_def != by_basis {
                    return Ok(CheckOutcome::fail(format!(
                        "b{}, b{}: definitional {} vs exclusive-or rule {}",
                        l + 1,
                        m + 1,
                        self.show_set(&by_def),
                        self.show_set(&by_basis)
                    )));
                }
            }
        }
        Ok(CheckOutcome::pass(format!("{checked} basis pairs agree")))
    }

    fn fnp_lemma(&self) -> Result<CheckOutcome> {
        let mut checked = 0usize;
        for (u, v) in self.same_tier_pairs() {
            checked += 1;
            let fix = fix_pair_definitional(&self.group, u, v)?;
            let (su, sv) = (self.skel(u), self.skel(v));
            for &b in &self.basis {
                let bit = self.skel(b);
                let common = bit & su & sv != 0;
                let symmetric = bit & (su ^ sv) != 0;
                if common && fix.contains(b) {
                    return Ok(CheckOutcome::fail(format!(
                        "part i: {} in fix({}, {}) and in both skeletons",
                        self.show(b),
                        self.show(u),
                        self.show(v)
                    )));
                }
                if fix.contains(b) != symmetric {
                    return Ok(CheckOutcome::fail(format!(
                        "part ii: fix({}, {}) ∩ T_1 disagrees with skeleton difference at {}",
                        self.show(u),
                        self.show(v),
                        self.show(b)
                    )));
                }
            }
        }
        Ok(CheckOutcome::pass(format!("{checked} same-tier pairs, both parts")))
    }

    fn translation(&self) -> Result<CheckOutcome> {
        let mut checked = 0usize;
        for (u, v) in self.same_tier_pairs() {
            checked += 1;
            let (a, b) = translate_pair(self.space, &self.labels[u], &self.labels[v])?;
            let (ia, ib) = (self.space.index_of(&a), self.space.index_of(&b));
            let before = fix_pair_definitional(&self.group, u, v)?;
            let after = fix_pair_definitional(&self.group, ia, ib)?;
            if before != after {
                return Ok(CheckOutcome::fail(format!(
                    "fix({}, {}) = {} but fix({a}, {b}) = {}",
                    self.show(u),
                    self.show(v),
                    self.show_set(&before),
                    self.show_set(&after)
                )));
            }
        }
        Ok(CheckOutcome::pass(format!("{checked} same-tier pairs")))
    }

    fn tier_count(&self, set: &VertexSet, i: usize) -> u64 {
        set.iter().filter(|&w| self.tier(w) == i).count() as u64
    }

    fn counting_theorem(&self, j_min: usize) -> Result<CheckOutcome> {
        let mut checked = 0usize;
        for (u, v) in self.same_tier_pairs() {
            if self.skel(u) & self.skel(v) != 0 {
                continue;
            }
            let ip = self.tier(u);
            let fix = fix_pair_definitional(&self.group, u, v)?;
            for i in 1..self.n() {
                checked += 1;
                let formula = fix_count_formula(self.n(), ip, i, j_min)?;
                let oracle = self.tier_count(&fix, i);
                if formula != oracle as i64 {
                    return Ok(CheckOutcome::fail(format!(
                        "n={}, i'={ip}, i={i}, u={}, v={}: formula {formula}, oracle {oracle}",
                        self.n(),
                        self.show(u),
                        self.show(v)
                    )));
                }
            }
        }
        Ok(CheckOutcome::pass(format!("{checked} (pair, tier) counts for disjoint pairs")))
    }

    fn counting_corollary(&self) -> Result<CheckOutcome> {
        let mut checked = 0usize;
        for (u, v) in self.same_tier_pairs() {
            let overlap = (self.skel(u) & self.skel(v)).count_ones() as usize;
            let ip = self.tier(u);
            if overlap == 0 {
                continue;
            }
            let fix = fix_pair_definitional(&self.group, u, v)?;
            for i in 1..self.n() {
                checked += 1;
                let formula = fix_count_overlapping(self.n(), ip, overlap, i)?;
                let oracle = self.tier_count(&fix, i);
                if formula != oracle {
                    return Ok(CheckOutcome::fail(format!(
                        "n={}, i'={ip}, overlap={overlap}, i={i}, u={}, v={}: formula {formula}, oracle {oracle}",
                        self.n(),
                        self.show(u),
                        self.show(v)
                    )));
                }
            }
        }
        Ok(CheckOutcome::pass(format!("{checked} (pair, tier) counts for overlapping pairs")))
    }

    fn fixed_number_binary(&self) -> CheckOutcome {
        let n = self.n();
        let expected = 1usize << (n - 1);
        let fxd = fixed_number(&self.group);
        if fxd.value != expected {
            return CheckOutcome::fail(format!("fxd = {}, expected 2^(n-1) = {expected}", fxd.value));
        }
        // the explicit largest non-fixing set: both or neither of b1, b2 in the skeleton
        let a: Vec<usize> = (0..self.order())
            .filter(|&x| self.labels[x].in_skeleton(0) == self.labels[x].in_skeleton(1))
            .collect();
        if a.len() != expected - 1 || is_fixing_set(&self.group, &a) {
            return CheckOutcome::fail(format!(
                "set A has {} elements and fixing = {}",
                a.len(),
                is_fixing_set(&self.group, &a)
            ));
        }
        for z in (0..self.order()).filter(|z| !a.contains(z)) {
            let mut bigger = a.clone();
            bigger.push(z);
            if !is_fixing_set(&self.group, &bigger) {
                return CheckOutcome::fail(format!("A ∪ {{{}}} is not fixing", self.show(z)));
            }
        }
        CheckOutcome::pass(format!(
            "fxd = {expected}; largest non-fixing set has {} vertices",
            expected - 1
        ))
    }

    fn fixed_number_large_field(&self) -> Result<CheckOutcome> {
        if self.space.q() < 3 {
            return Err(Error::Precondition("claim is about fields with q >= 3"));
        }
        let fxd = fixed_number(&self.group).value;
        let order = self.order();
        if fxd != order - 1 {
            return Ok(CheckOutcome::fail(format!("fxd = {fxd}, order - 1 = {}", order - 1)));
        }
        if !check_twin_criterion(&self.graph)? {
            return Ok(CheckOutcome::fail("no twin pair found".to_string()));
        }
        let q1 = self.space.q() as u64 - 1;
        for class in twin_classes(&self.graph) {
            let s = self.skel(class[0]);
            let same_skeleton = class.iter().all(|&v| self.skel(v) == s);
            let expected = q1.pow(s.count_ones());
            let full = (0..order).filter(|&v| self.skel(v) == s).count();
            if !same_skeleton || class.len() as u64 != expected || full != class.len() {
                return Ok(CheckOutcome::fail(format!(
                    "twin class of {} has {} members, expected {expected} sharing its skeleton",
                    self.show(class[0]),
                    class.len()
                )));
            }
        }
        Ok(CheckOutcome::pass(format!("fxd = {fxd} = order - 1; twin classes are skeleton classes")))
    }
}

fn twin_criterion(subject: Subject, limits: &Limits) -> Result<CheckOutcome> {
    let g = subject.build()?;
    let mut checked = 0usize;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let h = g.induced(&comp);
        let has_twins = check_twin_criterion(&h)?;
        let group = automorphism_group(&h, limits)?;
        let fxd = fixed_number(&group).value;
        checked += 1;
        if (fxd == h.order() - 1) != has_twins {
            return Ok(CheckOutcome::fail(format!(
                "component {comp:?}: fxd = {fxd}, order = {}, twins = {has_twins}",
                h.order()
            )));
        }
    }
    let twins = find_twins(&g);
    Ok(CheckOutcome::pass(format!("{checked} components; twins: {twins:?}")))
}

struct Analysis {
    order: usize,
    report: crate::fixing::FixReport,
    fixing_graph_edges: usize,
    pair_count: usize,
    group: AutGroup,
    /// First same-orbit pair that no single vertex of the minimum fixing set separates.
    uncovered_by_witness: Option<(usize, usize)>,
}

fn analyse(subject: Subject, limits: &Limits) -> Result<Analysis> {
    let g = subject.build()?;
    let group = automorphism_group(&g, limits)?;
    let fg = build_fixing_graph(&group);
    let report = fix_report_with(&group, &fg);
    let uncovered_by_witness = (0..fg.right().len())
        .find(|&i| !report.witness_min_fixing_set.iter().any(|&x| fg.fixers(i).contains(x)))
        .map(|i| fg.right().pairs()[i]);
    Ok(Analysis {
        uncovered_by_witness,
        order: g.order(),
        fixing_graph_edges: fg.edge_count(),
        pair_count: fg.right().len(),
        report,
        group,
    })
}

fn edge_bound(subject: Subject, limits: &Limits) -> Result<CheckOutcome> {
    let a = analyse(subject, limits)?;
    let (fix, fxd) = (a.report.fixing_number, a.report.fixed_number);
    if fix != fxd {
        return Ok(CheckOutcome::pass(format!("not applicable: fix = {fix}, fxd = {fxd}")));
    }
    let n = a.order as u64;
    let bound = n * (binomial(n, 2) + 1 - fix as u64);
    if a.fixing_graph_edges as u64 > bound {
        return Ok(CheckOutcome::fail(format!(
            "|E(F(G))| = {} exceeds {bound} (order {n}, k = {fix})",
            a.fixing_graph_edges
        )));
    }
    Ok(CheckOutcome::pass(format!(
        "|E(F(G))| = {} <= {bound} (order {n}, k = {fix}, {} pairs)",
        a.fixing_graph_edges, a.pair_count
    )))
}

fn fix_chain(subject: Subject, limits: &Limits) -> Result<CheckOutcome> {
    let a = analyse(subject, limits)?;
    let r = &a.report;
    let (fix, fxd) = (r.fixing_number, r.fixed_number);
    if !(fix <= fxd && fxd <= a.order.saturating_sub(1)) {
        return Ok(CheckOutcome::fail(format!("chain broken: fix = {fix}, fxd = {fxd}, order = {}", a.order)));
    }
    if r.fixing_number_via_cover != fix {
        let uncovered = a
            .uncovered_by_witness
            .map_or_else(|| "none".to_string(), |(u, v)| format!("({u}, {v})"));
        return Ok(CheckOutcome::fail(format!(
            "hitting-set fix = {fix}, fixing-graph cover fix = {}; fixing set {:?} leaves pair {uncovered} uncovered",
            r.fixing_number_via_cover, r.witness_min_fixing_set
        )));
    }
    let witness_ok = r.witness_min_fixing_set.len() == fix
        && is_fixing_set(&a.group, &r.witness_min_fixing_set);
    let nonfixing_ok = a.group.is_trivial()
        || (r.witness_max_nonfixing_set.len() + 1 == fxd
            && !is_fixing_set(&a.group, &r.witness_max_nonfixing_set));
    if !witness_ok || !nonfixing_ok {
        return Ok(CheckOutcome::fail(format!(
            "witness revalidation failed: fixing {:?}, non-fixing {:?}",
            r.witness_min_fixing_set, r.witness_max_nonfixing_set
        )));
    }
    Ok(CheckOutcome::pass(format!("0 <= fix = {fix} <= fxd = {fxd} <= {}", a.order.saturating_sub(1))))
}

fn family(k: usize, limits: &Limits) -> Result<CheckOutcome> {
    let params = FamilyParams::new(k)?;
    let a = analyse(Subject::Family { k }, limits)?;
    let (fix, fxd) = (a.report.fixing_number, a.report.fixed_number);
    let (pf, pd) = (predicted_fix(k)?, predicted_fxd(k)?);
    if a.order != params.order() || fix != pf || fxd != pd || a.report.fixing_number_via_cover != pf {
        return Ok(CheckOutcome::fail(format!(
            "order {} (expected {}), fix = {fix} (expected {pf}), fxd = {fxd} (expected {pd}), cover fix = {}",
            a.order,
            params.order(),
            a.report.fixing_number_via_cover
        )));
    }
    if fxd - fix != params.gap() {
        return Ok(CheckOutcome::fail(format!("gap {} differs from 2k - 3 = {}", fxd - fix, params.gap())));
    }
    Ok(CheckOutcome::pass(format!("fix = {fix}, fxd = {fxd}, gap = {}", params.gap())))
}
