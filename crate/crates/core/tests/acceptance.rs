//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Oracles here are deliberately naive (direct enumeration over group elements or subsets)
//! and do not go through the library's fixing-neighbourhood or solver code.

use std::time::{Duration, Instant};

use symforge_core::constructions::{build_family_graph, FamilyParams};
use symforge_core::fixing::{
    build_fixing_graph, check_twin_criterion, fix_count_formula, fix_count_in_tier, fix_count_overlapping,
    fix_pair_definitional, fix_pair_skeleton, fix_report, fixed_number,
};
use symforge_core::graph::Graph;
use symforge_core::vecspace::build_nzc_graph;
use symforge_core::verify::{
    counting_check_with_lower_bound, run_check, CheckInstance, Claim, NamedGraph, Status, Subject,
};
use symforge_core::{automorphism_group, AutGroup, Limits, Space};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn limits() -> Limits {
    Limits::default()
}

fn nzc(n: usize, q: u32) -> (Space, Graph, AutGroup) {
    let space = Space::new(n, q).unwrap();
    let g = build_nzc_graph(space);
    let group = automorphism_group(&g, &limits()).unwrap();
    (space, g, group)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_s), || {
        format!("took {:.2}s, limit {limit_s}s", elapsed.as_secs_f64())
    })
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `x` lies outside the fixing neighbourhood of `(u, v)` iff some automorphism fixes `x` and
/// sends `u` to `v`; `x` must also be moved by some automorphism.
fn naive_fix(group: &AutGroup, u: usize, v: usize) -> Vec<usize> {
    let n = group.degree();
    (0..n)
        .filter(|&x| group.elements().any(|e| e[x] as usize != x))
        .filter(|&x| !group.elements().any(|e| e[x] as usize == x && e[u] as usize == v))
        .collect()
}

fn orbit_mates(group: &AutGroup, u: usize, v: usize) -> bool {
    group.elements().any(|e| e[u] as usize == v)
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn is_pointwise_rigid(group: &AutGroup, set: &[usize]) -> bool {
    group
        .elements()
        .filter(|e| set.iter().all(|&x| e[x] as usize == x))
        .all(|e| e.iter().enumerate().all(|(i, &x)| x as usize == i))
}

fn lemma(claim: Claim, n: usize) -> Result<(), String> {
    let inst = CheckInstance { claim, subject: Subject::Nzc { n, q: 2 } };
    let out = run_check(&inst, &limits()).map_err(|e| format!("{claim} n={n}: {e}"))?;
    ensure(out.status == Status::Pass, || format!("{claim} n={n}: {:?}", out.witnesses))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut vertices = 0;
    for n in 3..=6 {
        let space = Space::new(n, 2).unwrap();
        let g = build_nzc_graph(space);
        for v in 0..g.order() {
            let s = g.label(v).unwrap().tier() as u32;
            let formula = ((1u64 << s) - 1) * (1u64 << (n as u32 - s)) - 1;
            // neighbours by direct skeleton intersection
            let sv = g.label(v).unwrap().skeleton();
            let direct = (0..g.order()).filter(|&w| w != v && g.label(w).unwrap().skeleton() & sv != 0).count();
            ensure(g.degree(v) as u64 == formula && direct as u64 == formula, || {
                format!("n={n} v={}: degree {} formula {formula}", g.label(v).unwrap(), g.degree(v))
            })?;
            vertices += 1;
        }
    }
    within(start.elapsed(), 1)?;
    Ok(format!("{vertices} vertices over n=3..6"))
}

fn criterion_2() -> Outcome {
    let mut summary = Vec::new();
    for n in 3..=5 {
        let start = Instant::now();
        let (_, g, group) = nzc(n, 2);
        let expected = (1..=n).product::<usize>();
        ensure(group.order() == expected, || format!("n={n}: |Aut| = {}, n! = {expected}", group.order()))?;
        within(start.elapsed(), 60)?;
        if n == 3 {
            let mut found: Vec<Vec<u32>> = perms(g.order())
                .into_iter()
                .filter(|p| g.edges().all(|(u, v)| g.has_edge(p[u], p[v])))
                .map(|p| p.into_iter().map(|x| x as u32).collect())
                .collect();
            found.sort();
            let listed: Vec<Vec<u32>> = group.elements().map(<[u32]>::to_vec).collect();
            ensure(found == listed, || "n=3 differs from enumeration of all 7! bijections".into())?;
        }
        summary.push(format!("n={n}: {expected}"));
    }
    Ok(format!("{}; n=3 matches all 5040 bijections", summary.join(", ")))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for n in 3..=5 {
        let (space, g, group) = nzc(n, 2);
        let labels = g.labels().unwrap();
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                if labels[u].tier() != labels[v].tier() || labels[u].tier() == n {
                    continue;
                }
                let skel = fix_pair_skeleton(space, &labels[u], &labels[v]).unwrap().to_vec();
                let def = fix_pair_definitional(&group, u, v).unwrap().to_vec();
                ensure(skel == def && def == naive_fix(&group, u, v), || {
                    format!("n={n} u={} v={}: skeleton {skel:?} definitional {def:?}", labels[u], labels[v])
                })?;
                pairs += 1;
            }
        }
    }
    within(start.elapsed(), 120)?;
    Ok(format!("{pairs} same-tier pairs over n=3..5"))
}

fn criterion_4() -> Outcome {
    let mut counts = 0;
    for n in 4..=5 {
        let (_, g, group) = nzc(n, 2);
        let labels = g.labels().unwrap();
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let ip = labels[u].tier();
                if labels[v].tier() != ip || ip == n {
                    continue;
                }
                let overlap = (labels[u].skeleton() & labels[v].skeleton()).count_ones() as usize;
                let fix = naive_fix(&group, u, v);
                for i in 1..n {
                    let oracle = fix.iter().filter(|&&x| labels[x].tier() == i).count() as u64;
                    let formula = if overlap == 0 {
                        fix_count_in_tier(n, ip, i).unwrap()
                    } else {
                        fix_count_overlapping(n, ip, overlap, i).unwrap()
                    };
                    ensure(formula == oracle, || {
                        format!("n={n} u={} v={} i={i}: formula {formula}, oracle {oracle}", labels[u], labels[v])
                    })?;
                    counts += 1;
                }
            }
        }
    }
    let mutant = fix_count_formula(4, 1, 1, 0).unwrap();
    ensure(mutant == 0, || format!("j>=0 formula at (4,1,1) gave {mutant}"))?;
    let (_, g4, group4) = nzc(4, 2);
    let l4 = g4.labels().unwrap();
    let (b1, b2) = (
        (0..g4.order()).find(|&x| l4[x].skeleton() == 1).unwrap(),
        (0..g4.order()).find(|&x| l4[x].skeleton() == 2).unwrap(),
    );
    let oracle = naive_fix(&group4, b1, b2).iter().filter(|&&x| l4[x].tier() == 1).count();
    ensure(oracle == 2, || format!("oracle at (4,1,1) gave {oracle}"))?;
    let check = counting_check_with_lower_bound(4, 0, &limits()).unwrap();
    ensure(check.status == Status::Fail && check.witnesses[0].contains("formula 0, oracle 2"), || {
        format!("mutant not rejected: {:?}", check.witnesses)
    })?;
    Ok(format!("{counts} (pair, tier) counts over n=4,5; j>=0 mutant rejected (0 vs 2)"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut values = Vec::new();
    for n in 3..=4 {
        let (_, g, group) = nzc(n, 2);
        let fxd = fixed_number(&group).value;
        // largest non-fixing subset, by enumeration
        let largest = (0u32..1 << g.order())
            .filter(|m| {
                let set: Vec<usize> = (0..g.order()).filter(|&i| m >> i & 1 == 1).collect();
                !is_pointwise_rigid(&group, &set)
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize;
        let expected = 1 << (n - 1);
        ensure(fxd == expected && largest + 1 == expected, || {
            format!("n={n}: fxd {fxd}, enumeration {}, expected {expected}", largest + 1)
        })?;
        values.push(fxd);
    }
    within(start.elapsed(), 5)?;
    Ok(format!("fxd = {values:?} for n = 3, 4"))
}

fn criterion_6() -> Outcome {
    let (_, g, group) = nzc(2, 3);
    let fxd = fixed_number(&group).value;
    let twins = check_twin_criterion(&g).unwrap();
    let witness = (0..g.order())
        .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
        .find(|&(u, v)| {
            let mut nu = g.neighbors(u).clone();
            let mut nv = g.neighbors(v).clone();
            nu.remove(v);
            nv.remove(u);
            nu == nv
        });
    ensure(fxd == 7 && g.order() == 8 && twins && witness.is_some(), || {
        format!("fxd {fxd}, order {}, twins {twins}", g.order())
    })?;
    Ok(format!("fxd = 7 = order - 1, twins {:?}", witness.unwrap()))
}

fn criterion_7() -> Outcome {
    let mut parts = Vec::new();
    for (k, fix, fxd, gap) in [(3, 4, 7, 3), (4, 11, 16, 5)] {
        let start = Instant::now();
        let g = build_family_graph(k).unwrap();
        let group = automorphism_group(&g, &limits()).unwrap();
        let r = fix_report(&group);
        ensure(
            r.fixing_number == fix
                && r.fixing_number_via_cover == fix
                && r.fixed_number == fxd
                && r.fixed_number - r.fixing_number == gap
                && FamilyParams::new(k).unwrap().gap() == gap,
            || format!("k={k}: fix {} (cover {}), fxd {}", r.fixing_number, r.fixing_number_via_cover, r.fixed_number),
        )?;
        ensure(is_pointwise_rigid(&group, &r.witness_min_fixing_set), || format!("k={k}: witness not fixing"))?;
        if k == 4 {
            within(start.elapsed(), 30)?;
        }
        parts.push(format!("k={k}: fix {fix}, fxd {fxd}, gap {gap}"));
    }
    Ok(parts.join("; "))
}

fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=5 {
        out.push((format!("G(V,2,{n})"), build_nzc_graph(Space::new(n, 2).unwrap())));
    }
    out.push(("G(V,3,2)".into(), build_nzc_graph(Space::new(2, 3).unwrap())));
    for k in 3..=4 {
        out.push((format!("family k={k}"), build_family_graph(k).unwrap()));
    }
    let named = (3..=8)
        .map(NamedGraph::Cycle)
        .chain((2..=8).map(NamedGraph::Path))
        .chain((2..=4).map(NamedGraph::Star))
        .chain([NamedGraph::AsymmetricTree]);
    out.extend(named.map(|g| (g.name(), g.build().unwrap())));
    out
}

fn criterion_8() -> Outcome {
    let mut checked = Vec::new();
    for (name, g) in corpus() {
        let group = automorphism_group(&g, &limits()).unwrap();
        let r = fix_report(&group);
        if r.fixing_number != r.fixed_number {
            continue;
        }
        let k = r.fixing_number as u64;
        let n = g.order() as u64;
        // unordered same-orbit pairs times vertices outside each pair's exchangers
        let mut edges = 0u64;
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                if orbit_mates(&group, u, v) {
                    edges += naive_fix(&group, u, v).len() as u64;
                }
            }
        }
        let fg = build_fixing_graph(&group);
        let bound = n * (binom(n, 2) + 1 - k);
        ensure(edges == fg.edge_count() as u64 && edges <= bound, || {
            format!("{name}: |E(F)| = {edges} (library {}), bound {bound}", fg.edge_count())
        })?;
        checked.push(format!("{name} {edges}<={bound}"));
    }
    for required in ["cycle-5", "path-4"] {
        ensure(checked.iter().any(|c| c.starts_with(&format!("{required} "))), || {
            format!("{required} missing")
        })?;
    }
    Ok(checked.join(", "))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let claims = [
        Claim::TierPreservation,
        Claim::TopFixed,
        Claim::BasisMembership,
        Claim::Transposition,
        Claim::SkeletonDifference,
        Claim::StabilizerSkeleton,
    ];
    for n in 3..=5 {
        for claim in claims {
            lemma(claim, n)?;
        }
    }
    for n in 4..=5 {
        lemma(Claim::SwapLemmaN4, n)?;
    }
    within(start.elapsed(), 60)?;
    Ok("six lemmas for n=3..5, three-part swap lemma for n=4,5".into())
}

fn criterion_10() -> Outcome {
    let mut disagreements = Vec::new();
    let mut count = 0;
    for (name, g) in corpus() {
        let group = automorphism_group(&g, &limits()).unwrap();
        let r = fix_report(&group);
        let order = g.order();
        ensure(r.fixing_number <= r.fixed_number && r.fixed_number < order, || {
            format!("{name}: fix {} fxd {} order {order}", r.fixing_number, r.fixed_number)
        })?;
        ensure(is_pointwise_rigid(&group, &r.witness_min_fixing_set), || format!("{name}: witness not fixing"))?;
        if order <= 16 {
            let brute = (0u32..1 << order)
                .filter(|m| {
                    let set: Vec<usize> = (0..order).filter(|&i| m >> i & 1 == 1).collect();
                    is_pointwise_rigid(&group, &set)
                })
                .map(u32::count_ones)
                .min()
                .unwrap() as usize;
            ensure(brute == r.fixing_number, || format!("{name}: enumeration gives fix {brute}"))?;
        }
        if r.fixing_number != r.fixing_number_via_cover {
            disagreements.push(format!(
                "{name}: hitting set {} vs cover {}",
                r.fixing_number, r.fixing_number_via_cover
            ));
        }
        count += 1;
    }
    ensure(disagreements.is_empty(), || {
        format!("chain holds on all {count} graphs; solvers disagree on {}", disagreements.join("; "))
    })?;
    Ok(format!("chain and solver agreement on {count} graphs"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("degree formula", criterion_1),
        ("automorphism group order", criterion_2),
        ("fixing neighbourhood by skeleton", criterion_3),
        ("tier counts of fixing neighbourhoods", criterion_4),
        ("fixed number, q = 2", criterion_5),
        ("fixed number, q = 3", criterion_6),
        ("star-union family", criterion_7),
        ("fixing-graph edge bound", criterion_8),
        ("automorphism lemmas", criterion_9),
        ("fix/fxd chain and solver agreement", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
