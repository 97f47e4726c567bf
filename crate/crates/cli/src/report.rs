//! Machine-readable scan reports: one JSON document per run, with a TSV
//! summary alternative. Field order and member ordering are fixed so that
//! identical inputs produce byte-identical reports.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct InvariantDescriptor {
    pub kind: String,
    pub power: u32,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<u64>>,
    pub strict_paper: bool,
    pub streaming: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Group {
    pub signature: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_signature: Option<String>,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Collision {
    pub pair: (usize, usize),
    /// "isomorphic", "non-isomorphic", or "inconclusive".
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Whether exact-mode signatures confirmed the collision before the
    /// isomorphism check.
    pub escalated_to_exact: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexedError {
    pub index: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timing {
    pub parse_ms: u64,
    pub signatures_ms: u64,
    pub grouping_ms: u64,
    pub isomorphism_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub family_source: String,
    pub family_size: usize,
    pub invariant: InvariantDescriptor,
    pub groups: Vec<Group>,
    pub collisions: Vec<Collision>,
    pub errors: Vec<IndexedError>,
    /// "holds", "fails", or "undetermined" (inconclusive isomorphism).
    pub conjecture: String,
    pub timing_ms: Timing,
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Tab-separated summary: header, one line per group, then a verdict
    /// line. Collisions inline their isomorphism verdicts.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("group\tsize\tmembers\tsignature\n");
        for (i, g) in self.groups.iter().enumerate() {
            let members: Vec<String> = g.members.iter().map(|m| m.to_string()).collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                i,
                g.members.len(),
                members.join(","),
                g.signature
            ));
        }
        for c in &self.collisions {
            out.push_str(&format!(
                "collision\t{}\t{}\t{}\n",
                c.pair.0, c.pair.1, c.verdict
            ));
        }
        for e in &self.errors {
            out.push_str(&format!("error\t{}\t\t{}\n", e.index, e.message));
        }
        out.push_str(&format!("conjecture\t{}\n", self.conjecture));
        out
    }
}
