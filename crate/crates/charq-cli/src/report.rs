//! Structured command reports with stable JSON, CSV and text renderings.
//!
//! Every command produces a [`Report`]: a schema version, the verb, a
//! verb-specific payload, and provenance describing which closed forms
//! and which counting kernel produced the numbers. JSON reports
//! round-trip losslessly; CSV carries the same numeric content for
//! tabular payloads and degenerates to key/value rows otherwise.

use charq::period::CollapseReport;
use charq::polyalg::QuasiPolynomial;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub verb: String,
    pub payload: Payload,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct Provenance {
    /// Closed forms consulted ("base", "restriction:diff0", ...).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub closed_forms: Vec<String>,
    /// Counting kernel that produced raw numbers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    /// Moduli covered.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_range: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountRow {
    pub q: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyCheck {
    pub check: String,
    pub subject: String,
    pub q_lo: u64,
    pub q_hi: u64,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch_q: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRow {
    pub hyperplane: String,
    pub min_valid_q: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Counts {
        source: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        hyperplane: Option<String>,
        rows: Vec<CountRow>,
    },
    Quasipoly {
        source: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        hyperplane: Option<String>,
        quasipoly: QuasiPolynomial,
        min_period: u64,
        monic: bool,
        gcd_property: bool,
        polynomial: bool,
    },
    Period {
        source: String,
        lcm_period: u64,
    },
    Collapse {
        source: String,
        #[serde(flatten)]
        report: CollapseReport,
    },
    Classify {
        hyperplanes: Vec<String>,
        polynomial: bool,
    },
    Verify {
        m: usize,
        checks: Vec<VerifyCheck>,
        failures: usize,
        passed: bool,
    },
    Audit {
        m: usize,
        horizon: u64,
        rows: Vec<AuditRow>,
    },
    BijectionDemo {
        m: usize,
        q: u64,
        tuple: Vec<u64>,
        rendering: String,
    },
}

impl Report {
    pub fn new(verb: &str, payload: Payload, provenance: Provenance) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            verb: verb.to_string(),
            payload,
            provenance,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Counts { rows, .. } => {
                out.push_str("q,count\n");
                for row in rows {
                    out.push_str(&format!("{},{}\n", row.q, row.count));
                }
            }
            Payload::Verify { checks, .. } => {
                out.push_str("check,subject,q_lo,q_hi,ok,mismatch_q\n");
                for c in checks {
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        c.check,
                        c.subject,
                        c.q_lo,
                        c.q_hi,
                        c.ok,
                        c.mismatch_q.map_or(String::new(), |q| q.to_string())
                    ));
                }
            }
            Payload::Audit { rows, .. } => {
                out.push_str("hyperplane,min_valid_q\n");
                for row in rows {
                    out.push_str(&format!("{},{}\n", row.hyperplane, row.min_valid_q));
                }
            }
            Payload::Quasipoly { quasipoly, min_period, monic, gcd_property, polynomial, .. } => {
                out.push_str("key,value\n");
                out.push_str(&format!("period,{}\n", quasipoly.period()));
                for (idx, c) in quasipoly.constituents().iter().enumerate() {
                    out.push_str(&format!("class_{},{}\n", idx + 1, c));
                }
                out.push_str(&format!("min_period,{min_period}\n"));
                out.push_str(&format!("monic,{monic}\n"));
                out.push_str(&format!("gcd_property,{gcd_property}\n"));
                out.push_str(&format!("polynomial,{polynomial}\n"));
            }
            Payload::Period { source, lcm_period } => {
                out.push_str("key,value\n");
                out.push_str(&format!("source,{source}\n"));
                out.push_str(&format!("lcm_period,{lcm_period}\n"));
            }
            Payload::Collapse { source, report } => {
                out.push_str("key,value\n");
                out.push_str(&format!("source,{source}\n"));
                out.push_str(&format!("lcm_period,{}\n", report.lcm_period));
                out.push_str(&format!("min_period,{}\n", report.min_period));
                out.push_str(&format!("collapses,{}\n", report.collapses));
            }
            Payload::Classify { hyperplanes, polynomial } => {
                out.push_str("key,value\n");
                out.push_str(&format!("hyperplanes,{}\n", hyperplanes.join(" ")));
                out.push_str(&format!("polynomial,{polynomial}\n"));
            }
            Payload::BijectionDemo { m, q, tuple, .. } => {
                out.push_str("key,value\n");
                out.push_str(&format!("m,{m}\n"));
                out.push_str(&format!("q,{q}\n"));
                let rendered: Vec<String> = tuple.iter().map(u64::to_string).collect();
                out.push_str(&format!("tuple,{}\n", rendered.join(" ")));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Counts { source, hyperplane, rows } => {
                match hyperplane {
                    Some(h) => out.push_str(&format!("{source}, restricted onto {h}\n")),
                    None => out.push_str(&format!("{source}\n")),
                }
                for row in rows {
                    out.push_str(&format!("q={} count={}\n", row.q, row.count));
                }
            }
            Payload::Quasipoly { source, hyperplane, quasipoly, min_period, monic, gcd_property, polynomial } => {
                match hyperplane {
                    Some(h) => out.push_str(&format!("{source}, restricted onto {h}\n")),
                    None => out.push_str(&format!("{source}\n")),
                }
                out.push_str(&format!("period {}\n", quasipoly.period()));
                let rho = quasipoly.period();
                for (idx, c) in quasipoly.constituents().iter().enumerate() {
                    out.push_str(&format!("class {} (q = {} mod {rho}): {c}\n", idx + 1, (idx + 1) % rho));
                }
                out.push_str(&format!(
                    "min_period={min_period} monic={monic} gcd_property={gcd_property} polynomial={polynomial}\n"
                ));
            }
            Payload::Period { source, lcm_period } => {
                out.push_str(&format!("{source}\nlcm_period={lcm_period}\n"));
            }
            Payload::Collapse { source, report } => {
                out.push_str(&format!("{source}\n"));
                out.push_str(&format!(
                    "lcm_period={} min_period={} collapses={}\n",
                    report.lcm_period, report.min_period, report.collapses
                ));
                let rho = report.quasipoly.period();
                for (idx, c) in report.quasipoly.constituents().iter().enumerate() {
                    out.push_str(&format!("class {} (q = {} mod {rho}): {c}\n", idx + 1, (idx + 1) % rho));
                }
            }
            Payload::Classify { hyperplanes, polynomial } => {
                out.push_str(&format!(
                    "{}: polynomial={polynomial}\n",
                    hyperplanes.join(" & ")
                ));
            }
            Payload::Verify { m, checks, failures, passed } => {
                for c in checks {
                    if c.ok {
                        out.push_str(&format!(
                            "ok   {} {} q={}..{}\n",
                            c.check, c.subject, c.q_lo, c.q_hi
                        ));
                    } else {
                        out.push_str(&format!(
                            "FAIL {} {} q={}..{} first mismatch at q={}\n",
                            c.check,
                            c.subject,
                            c.q_lo,
                            c.q_hi,
                            c.mismatch_q.unwrap_or(0)
                        ));
                    }
                }
                out.push_str(&format!(
                    "verify m={m}: {} ({} checks, {failures} failures)\n",
                    if *passed { "PASS" } else { "FAIL" },
                    checks.len()
                ));
            }
            Payload::Audit { m, horizon, rows } => {
                out.push_str(&format!(
                    "smallest q with formula = kernel for all q up to {horizon} (m={m})\n"
                ));
                for row in rows {
                    out.push_str(&format!("{:<12} {}\n", row.hyperplane, row.min_valid_q));
                }
            }
            Payload::BijectionDemo { rendering, .. } => {
                out.push_str(rendering);
            }
        }
        out
    }
}
