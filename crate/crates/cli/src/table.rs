//! CSV tables for sweeps and audits.
//!
//! Numbers use the shortest representation that parses back to the same `f64`
//! (`Debug` formatting, so tiny deltas print in exponent form).

use std::fmt::Write;

use xdiscord::families::SweepRow;
use xdiscord::oracle::OracleReport;

pub const SWEEP_HEADER: &str =
    "a,I,C,Q,concurrence,branch,expected_I,expected_C,expected_Q,expected_conc,delta_max";

pub const AUDIT_HEADER: &str =
    "index,numeric,analytic,discrepancy,flag,grid_spread,iterations,converged";

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for r in rows {
        let e = &r.expected;
        writeln!(
            out,
            "{:?},{:?},{:?},{:?},{:?},{},{:?},{:?},{:?},{:?},{:?}",
            r.a,
            r.mutual_information,
            r.classical_correlation,
            r.quantum_discord,
            r.concurrence,
            r.branch,
            e.mutual_information,
            e.classical_correlation,
            e.quantum_discord,
            e.concurrence,
            r.delta_max
        )
        .unwrap();
    }
    out
}

pub fn audit_csv(reports: &[OracleReport]) -> String {
    let mut out = String::new();
    out.push_str(AUDIT_HEADER);
    out.push('\n');
    for (i, r) in reports.iter().enumerate() {
        writeln!(
            out,
            "{i},{:?},{:?},{:?},{},{:?},{},{}",
            r.numeric, r.analytic, r.discrepancy, r.flag, r.grid_spread, r.iterations, r.converged
        )
        .unwrap();
    }
    out
}
