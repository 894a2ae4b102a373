//! Solve results, as text or JSON.

use std::fmt::Write as _;

use serde::Serialize;

use dmc_core::{diameter_stats, CompleteMatrix};

/// Value of the top-level "format" key of every JSON report.
pub const REPORT_FORMAT: &str = "dmc-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum VerdictKind {
    Yes,
    No,
    Inconclusive,
}

impl VerdictKind {
    pub fn exit_code(self) -> i32 {
        match self {
            VerdictKind::Yes => 0,
            VerdictKind::No => 1,
            VerdictKind::Inconclusive => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Yes => "YES",
            VerdictKind::No => "NO",
            VerdictKind::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResultReport {
    pub format: &'static str,
    pub file: String,
    pub verdict: VerdictKind,
    pub solver: String,
    /// Witness rows, only with `--witness`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// Min and max pair distance of the witness, offsets included.
    pub gamma: Option<usize>,
    pub delta: Option<usize>,
    pub wall_time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ResultReport {
    pub fn new(file: impl Into<String>, verdict: VerdictKind, solver: impl Into<String>, wall_time_ms: f64) -> Self {
        ResultReport {
            format: REPORT_FORMAT,
            file: file.into(),
            verdict,
            solver: solver.into(),
            witness: None,
            gamma: None,
            delta: None,
            wall_time_ms,
            note: None,
        }
    }

    pub fn with_witness(mut self, t: &CompleteMatrix, offsets: &dmc_core::PairOffsets, include_rows: bool) -> Self {
        let stats = diameter_stats(t, offsets);
        self.gamma = stats.gamma;
        self.delta = Some(stats.delta);
        if include_rows {
            self.witness = Some(t.rows().iter().map(|r| r.to_string()).collect());
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\nsolver {}\n", self.verdict.as_str(), self.solver);
        if let Some(g) = self.gamma {
            let _ = writeln!(out, "gamma {g}");
        }
        if let Some(d) = self.delta {
            let _ = writeln!(out, "delta {d}");
        }
        let _ = writeln!(out, "time_ms {:.3}", self.wall_time_ms);
        if let Some(note) = &self.note {
            let _ = writeln!(out, "note {note}");
        }
        if let Some(rows) = &self.witness {
            out.push_str("witness\n");
            for r in rows {
                let _ = writeln!(out, "{r}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dmc_core::PairOffsets;

    #[test]
    fn json_has_format_key_and_stats() {
        let t = CompleteMatrix::parse(&["011", "000", "110"]).unwrap();
        let r = ResultReport::new("x.dmc", VerdictKind::Yes, "d0b2", 0.5).with_witness(&t, &PairOffsets::zeros(3), true);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["format"], REPORT_FORMAT);
        assert_eq!(v["verdict"], "YES");
        assert_eq!(v["gamma"], 2);
        assert_eq!(v["delta"], 2);
        assert_eq!(v["witness"][2], "110");
        let no = ResultReport::new("x.dmc", VerdictKind::No, "d0b1", 0.1);
        let v: serde_json::Value = serde_json::from_str(&no.to_json()).unwrap();
        assert!(v.get("witness").is_none());
        assert!(v["gamma"].is_null());
    }
}
