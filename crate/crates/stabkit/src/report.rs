//! Report assembly and the text formats consumed by the command-line tool.
//!
//! The JSON schema is pinned: fields serialize in declaration order, and
//! golden tests downstream depend on the exact layout. Qubit indices in
//! reports are 1-based.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ghz::is_lc_ghz;
use crate::graphstate::Graph;
use crate::minimal::{corollary1_from_parts, theorem1_from_table, MinimalAnalysis};
use crate::pauli::PauliOperator;
use crate::stabilizer::StabilizerGroup;

/// One minimal support with its element count and witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalSupportEntry {
    /// 1-based qubit indices, ascending.
    pub support: Vec<usize>,
    pub a_omega: u64,
    /// Pauli strings of the elements carried by the support (at most 3).
    pub witnesses: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corollary1Report {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
}

/// Invariants, criterion flags and classification outcomes for one state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub fully_entangled: bool,
    /// A splitting bipartition (1-based indices) when not fully entangled.
    pub entanglement_witness: Option<Vec<usize>>,
    pub minimal_supports: Vec<MinimalSupportEntry>,
    /// Letters occurring per qubit in the minimal subgroup, e.g. "XYZ".
    pub per_qubit_coverage: Vec<String>,
    pub theorem1: bool,
    pub corollary1: Corollary1Report,
    pub gf4_linear: bool,
    pub ghz_class: bool,
    /// True exactly when theorem1, ghz_class, or n <= 2 holds.
    pub lu_equals_lc_guaranteed: bool,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("invalid report JSON: {e}")))
    }
}

/// Runs every analysis on a group. `max_support_weight` truncates only the
/// minimal-support listing; all flags are still computed exactly.
pub fn analyze(g: &StabilizerGroup, max_support_weight: Option<usize>) -> Result<AnalysisReport> {
    let n = g.num_qubits();
    let entanglement = g.entanglement();
    let analysis = MinimalAnalysis::compute(g)?;
    let theorem1 = theorem1_from_table(&analysis.table);
    let corollary1 = corollary1_from_parts(g, &analysis, entanglement.fully_entangled);
    let gf4_linear = crate::gf4::is_gf4_linear(g);
    let ghz_class = is_lc_ghz(g);
    let lu_equals_lc_guaranteed = theorem1.holds || ghz_class || n <= 2;

    let mut minimal_supports: Vec<MinimalSupportEntry> = analysis
        .table
        .entries
        .iter()
        .map(|entry| MinimalSupportEntry {
            support: entry.omega.indices_1based(),
            a_omega: entry.a_omega,
            witnesses: entry.witnesses.iter().map(|w| w.to_string()).collect(),
        })
        .collect();

    let mut notes = Vec::new();
    if let Some(w) = max_support_weight {
        let before = minimal_supports.len();
        minimal_supports.retain(|e| e.support.len() <= w);
        if minimal_supports.len() < before {
            notes.push(format!(
                "minimal support listing truncated to weight <= {w} ({} of {before} shown)",
                minimal_supports.len()
            ));
        }
    }
    if n <= 2 {
        notes.push(
            "on at most 2 qubits, local unitary and local Clifford equivalence always coincide"
                .to_string(),
        );
    }
    if !entanglement.fully_entangled {
        notes.push(
            "state is not fully entangled; the coverage criterion and GHZ classification \
             presuppose full entanglement"
                .to_string(),
        );
    }

    Ok(AnalysisReport {
        n,
        fully_entangled: entanglement.fully_entangled,
        entanglement_witness: entanglement.witness.map(|w| w.indices_1based()),
        minimal_supports,
        per_qubit_coverage: analysis
            .table
            .per_qubit_coverage
            .iter()
            .map(|c| c.to_string())
            .collect(),
        theorem1: theorem1.holds,
        corollary1: Corollary1Report {
            i: corollary1.i,
            ii: corollary1.ii,
            iii: corollary1.iii,
            iv: corollary1.iv,
        },
        gf4_linear,
        ghz_class,
        lu_equals_lc_guaranteed,
        notes,
    })
}

/// Renders a report as human-readable text.
pub fn render_text(report: &AnalysisReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "qubits: {}", report.n);
    let _ = writeln!(
        out,
        "fully entangled: {}{}",
        report.fully_entangled,
        report
            .entanglement_witness
            .as_ref()
            .map(|w| format!(" (splits across {w:?})"))
            .unwrap_or_default()
    );
    let _ = writeln!(out, "minimal supports:");
    for entry in &report.minimal_supports {
        let _ = writeln!(
            out,
            "  {:?}  A = {}  witnesses: {}",
            entry.support,
            entry.a_omega,
            entry.witnesses.join(", ")
        );
    }
    let _ = writeln!(
        out,
        "per-qubit coverage: [{}]",
        report.per_qubit_coverage.join(", ")
    );
    let _ = writeln!(out, "theorem 1 criterion: {}", report.theorem1);
    let _ = writeln!(
        out,
        "corollary 1 conditions: i={} ii={} iii={} iv={}",
        report.corollary1.i, report.corollary1.ii, report.corollary1.iii, report.corollary1.iv
    );
    let _ = writeln!(out, "GF(4)-linear: {}", report.gf4_linear);
    let _ = writeln!(out, "GHZ class: {}", report.ghz_class);
    let _ = writeln!(
        out,
        "LU = LC guaranteed: {}",
        report.lu_equals_lc_guaranteed
    );
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

/// Parses generator-file text: one Pauli string per line, `#` comments and
/// blank lines ignored, n lines of common length n.
pub fn parse_generators(text: &str) -> Result<StabilizerGroup> {
    let mut gens: Vec<PauliOperator> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let op: PauliOperator = line.parse().map_err(|e: Error| Error::FileParse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        if let Some(first) = gens.first() {
            if op.num_qubits() != first.num_qubits() {
                return Err(Error::FileParse {
                    line: idx + 1,
                    message: format!(
                        "generator acts on {} qubits, earlier lines on {}",
                        op.num_qubits(),
                        first.num_qubits()
                    ),
                });
            }
        }
        gens.push(op);
    }
    StabilizerGroup::build(gens)
}

/// Reads and parses a generator file from disk.
pub fn parse_generator_file(path: &std::path::Path) -> Result<StabilizerGroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_generators(&text)
}

/// Parses graph-file text: first line the vertex count, then one
/// 1-indexed `u v` edge per line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());
    let (first_line, header) = lines.next().ok_or_else(|| Error::FileParse {
        line: 1,
        message: "missing vertex count".to_string(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::FileParse {
        line: first_line,
        message: format!("invalid vertex count '{header}'"),
    })?;
    let mut edges = Vec::new();
    for (line, body) in lines {
        let mut parts = body.split_whitespace();
        let (Some(u), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::FileParse {
                line,
                message: format!("expected 'u v', got '{body}'"),
            });
        };
        let parse = |s: &str| -> Result<usize> {
            let k: usize = s.parse().map_err(|_| Error::FileParse {
                line,
                message: format!("invalid vertex '{s}'"),
            })?;
            if k == 0 || k > n {
                return Err(Error::FileParse {
                    line,
                    message: format!("vertex {k} out of range 1..={n}"),
                });
            }
            Ok(k - 1)
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Graph::from_edges(n, &edges)
}

/// Reads and parses a graph file from disk.
pub fn parse_graph_file(path: &std::path::Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ghz::ghz_stabilizer;
    use crate::graphstate::graph_state;

    #[test]
    fn parse_generators_epr() {
        let g = parse_generators("XX\nZZ\n").unwrap();
        assert_eq!(g.num_qubits(), 2);
    }

    #[test]
    fn parse_generators_skips_comments_and_blanks() {
        let g = parse_generators("# EPR pair\n\nXX  # flips\nZZ\n").unwrap();
        assert_eq!(g.num_qubits(), 2);
    }

    #[test]
    fn parse_generators_arity_error() {
        let err = parse_generators("XXX\nZZI\n").unwrap_err();
        assert_eq!(
            err,
            Error::WrongGeneratorCount {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn parse_generators_anticommuting_error() {
        let err = parse_generators("XX\nZI\n").unwrap_err();
        assert_eq!(
            err,
            Error::NonCommutingGenerators {
                first: 1,
                second: 2
            }
        );
    }

    #[test]
    fn parse_generators_reports_line_numbers() {
        let err = parse_generators("XX\nXQ\n").unwrap_err();
        match err {
            Error::FileParse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("position 2"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_graph_round_trip() {
        let graph = parse_graph("5\n1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap();
        assert_eq!(graph.num_vertices(), 5);
        assert_eq!(graph.edges().len(), 5);
        assert!(graph.is_connected());
    }

    #[test]
    fn parse_graph_rejects_out_of_range() {
        assert!(parse_graph("3\n1 4\n").is_err());
        assert!(parse_graph("3\n0 2\n").is_err());
        assert!(parse_graph("x\n").is_err());
    }

    #[test]
    fn analyze_ghz4() {
        let report = analyze(&ghz_stabilizer(4).unwrap(), None).unwrap();
        assert_eq!(report.n, 4);
        assert!(report.fully_entangled);
        assert!(!report.theorem1);
        assert!(report.ghz_class);
        assert!(report.lu_equals_lc_guaranteed);
        assert!(!report.gf4_linear);
    }

    #[test]
    fn analyze_epr() {
        let report = analyze(&ghz_stabilizer(2).unwrap(), None).unwrap();
        assert!(report.gf4_linear);
        assert!(report.theorem1);
        assert!(report.ghz_class);
        assert!(report.lu_equals_lc_guaranteed);
        assert_eq!(report.minimal_supports.len(), 1);
        assert_eq!(report.minimal_supports[0].a_omega, 3);
        assert!(report.notes.iter().any(|n| n.contains("at most 2 qubits")));
    }

    #[test]
    fn analyze_c5_theorem1_via_generation() {
        let report = analyze(&graph_state(&Graph::cycle(5)), None).unwrap();
        assert!(report.theorem1);
        assert!(report.corollary1.i);
        assert!(!report.ghz_class);
    }

    #[test]
    fn lu_equals_lc_flag_formula() {
        for (group, _) in [
            (ghz_stabilizer(3).unwrap(), ()),
            (graph_state(&Graph::cycle(4)), ()),
            (graph_state(&Graph::cycle(5)), ()),
            (
                StabilizerGroup::from_strings(&["XXII", "ZZII", "IIXX", "IIZZ"]).unwrap(),
                (),
            ),
        ] {
            let report = analyze(&group, None).unwrap();
            assert_eq!(
                report.lu_equals_lc_guaranteed,
                report.theorem1 || report.ghz_class || report.n <= 2
            );
        }
    }

    #[test]
    fn max_weight_truncates_listing_only() {
        let c5 = graph_state(&Graph::cycle(5));
        let full = analyze(&c5, None).unwrap();
        let truncated = analyze(&c5, Some(2)).unwrap();
        assert!(truncated.minimal_supports.is_empty());
        assert_eq!(truncated.theorem1, full.theorem1);
        assert_eq!(truncated.corollary1, full.corollary1);
        assert!(truncated.notes.iter().any(|n| n.contains("truncated")));
    }

    #[test]
    fn report_json_round_trips() {
        let report = analyze(&ghz_stabilizer(3).unwrap(), None).unwrap();
        let json = report.to_json();
        let back = AnalysisReport::from_json(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn analyze_is_deterministic() {
        let c4 = graph_state(&Graph::cycle(4));
        let a = analyze(&c4, None).unwrap().to_json();
        let b = analyze(&c4, None).unwrap().to_json();
        assert_eq!(a, b);
    }
}
