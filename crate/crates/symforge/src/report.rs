//! Serializable analysis and check reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use symforge_core::fixing::{build_fixing_graph, fix_report_with, moved_vertices};
use symforge_core::verify::{self, CheckInstance, Claim, Status};
use symforge_core::{automorphism_group, Graph, Limits};

/// Summary of the fixing graph F(G).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixingGraphStats {
    /// Vertices of S(G), the left side.
    pub vertices: usize,
    /// Unordered same-orbit pairs, the right side.
    pub pairs: usize,
    pub edges: usize,
}

/// Everything `analyze` reports about a graph. Only vertex ids appear, so the report does not
/// depend on which file format the graph came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub edges: usize,
    pub aut_order: usize,
    pub orbits: Vec<Vec<usize>>,
    /// S(G): vertices moved by some automorphism.
    pub moved_vertices: Vec<usize>,
    pub fixing_number: usize,
    pub fixed_number: usize,
    pub witness_min_fixing_set: Vec<usize>,
    pub witness_max_nonfixing_set: Vec<usize>,
    pub fixing_number_via_cover: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixing_graph: Option<FixingGraphStats>,
}

pub fn analyze(g: &Graph, limits: &Limits, with_fixing_graph: bool) -> symforge_core::Result<AnalysisReport> {
    let group = automorphism_group(g, limits)?;
    let fg = build_fixing_graph(&group);
    let r = fix_report_with(&group, &fg);
    Ok(AnalysisReport {
        order: g.order(),
        edges: g.edge_count(),
        aut_order: group.order(),
        orbits: group.orbits().into_iter().map(|o| o.members.to_vec()).collect(),
        moved_vertices: moved_vertices(&group).to_vec(),
        fixing_number: r.fixing_number,
        fixed_number: r.fixed_number,
        witness_min_fixing_set: r.witness_min_fixing_set,
        witness_max_nonfixing_set: r.witness_max_nonfixing_set,
        fixing_number_via_cover: r.fixing_number_via_cover,
        fixing_graph: with_fixing_graph.then(|| FixingGraphStats {
            vertices: fg.left().len(),
            pairs: fg.right().len(),
            edges: fg.edge_count(),
        }),
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        fn list(v: &[usize]) -> String {
            let items: Vec<String> = v.iter().map(ToString::to_string).collect();
            format!("{{{}}}", items.join(", "))
        }
        let mut rows: Vec<(&str, String)> = vec![
            ("order", self.order.to_string()),
            ("edges", self.edges.to_string()),
            ("|Aut|", self.aut_order.to_string()),
            ("orbits", self.orbits.iter().map(|o| list(o)).collect::<Vec<_>>().join(" ")),
            ("S(G)", list(&self.moved_vertices)),
            ("fix", self.fixing_number.to_string()),
            ("fix (cover)", self.fixing_number_via_cover.to_string()),
            ("fxd", self.fixed_number.to_string()),
            ("min fixing set", list(&self.witness_min_fixing_set)),
            ("max non-fixing set", list(&self.witness_max_nonfixing_set)),
        ];
        if let Some(f) = &self.fixing_graph {
            rows.push(("F(G) vertices", f.vertices.to_string()));
            rows.push(("F(G) pairs", f.pairs.to_string()));
            rows.push(("F(G) edges", f.edges.to_string()));
        }
        let width = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
        let mut s = String::new();
        for (k, v) in rows {
            let _ = writeln!(s, "{k:<width$}  {v}");
        }
        s
    }
}

/// One line of the verification stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub claim_id: String,
    pub params: BTreeMap<String, String>,
    /// `pass`, `fail` or `resource-limit`.
    pub status: String,
    pub witnesses: Vec<String>,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass.as_str()
    }

    pub fn to_json_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// Runs one check and times it. A claim applied to the wrong kind of subject is reported as
/// a failure carrying the reason.
pub fn run_instance(instance: &CheckInstance, limits: &Limits) -> CheckReport {
    let start = Instant::now();
    let (status, witnesses) = match verify::run_check(instance, limits) {
        Ok(out) => (out.status, out.witnesses),
        Err(e) => (Status::Fail, vec![e.to_string()]),
    };
    CheckReport {
        claim_id: instance.claim.id().to_string(),
        params: instance
            .subject
            .params()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        status: status.as_str().to_string(),
        witnesses,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// The suite for `n <= n_max` over `q_list`, optionally restricted to some claims.
pub fn run_verify(n_max: usize, q_list: &[u32], claims: Option<&[Claim]>, limits: &Limits) -> Vec<CheckReport> {
    verify::suite(n_max, q_list)
        .iter()
        .filter(|inst| claims.is_none_or(|c| c.contains(&inst.claim)))
        .map(|inst| run_instance(inst, limits))
        .collect()
}
