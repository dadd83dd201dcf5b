use std::io::Write;
use std::path::{Path, PathBuf};

use xdiscord::discord::{self, CorrelationReport};
use xdiscord::families::{self, Family, FamilySpec};
use xdiscord::oracle::{self, Flag, OracleConfig, OracleReport};
use xdiscord::XState;

use crate::{plot, state_file, table, write_atomic, CliError};

pub const EXIT_SUBOPTIMAL: u8 = 3;

const FLAT_NOTE: &str =
    "note: flat landscape, the conditional entropy does not depend on the measurement direction";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepOutput {
    Csv,
    Svg,
    Both,
}

fn out_err(e: std::io::Error) -> CliError {
    CliError::io(Path::new("<stdout>"), e)
}

fn load(path: &Path) -> Result<XState, CliError> {
    state_file::read(path)?.to_state()
}

pub fn validate(path: &Path, out: &mut impl Write) -> Result<u8, CliError> {
    let file = state_file::read(path)?;
    let state = file.to_state()?;
    let normalized = state_file::StateFile::from(&state);
    let lambda = state.spectrum().values();
    (|| {
        writeln!(out, "valid X-state")?;
        writeln!(
            out,
            "spectrum   {} {} {} {}",
            lambda[0], lambda[1], lambda[2], lambda[3]
        )?;
        writeln!(out, "entangled  {}", state.is_entangled())?;
        if normalized != file {
            writeln!(
                out,
                "normalized {}",
                normalized.to_json().replace('\n', " ").trim_end()
            )?;
        }
        Ok(())
    })()
    .map_err(out_err)?;
    Ok(0)
}

fn print_report(r: &CorrelationReport, out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "I          {}", r.mutual_information)?;
    writeln!(out, "C          {}", r.classical_correlation)?;
    writeln!(out, "Q          {}", r.quantum_discord)?;
    writeln!(out, "C'         {}", r.concurrence)?;
    writeln!(out, "branch     {}", r.branch.branch)?;
    for c in &r.candidates {
        match c.phi {
            Some(phi) => writeln!(out, "candidate  {} {} (phi {phi})", c.branch, c.value)?,
            None => writeln!(out, "candidate  {} {}", c.branch, c.value)?,
        }
    }
    match &r.thetas {
        Some(t) => {
            writeln!(out, "theta      {}", t.theta)?;
            writeln!(out, "theta'     {}", t.theta_prime)?;
        }
        None => writeln!(out, "theta      undefined (zero-probability outcome)")?,
    }
    Ok(())
}

fn print_oracle(o: &OracleReport, out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "numeric    {}", o.numeric)?;
    writeln!(out, "analytic   {}", o.analytic)?;
    writeln!(out, "discrepancy {:e}", o.discrepancy)?;
    writeln!(
        out,
        "direction  {} {} {}",
        o.direction[0], o.direction[1], o.direction[2]
    )?;
    writeln!(out, "flag       {}", o.flag)?;
    if o.is_flat() {
        writeln!(out, "{FLAT_NOTE}")?;
    }
    Ok(())
}

pub fn report(
    path: &Path,
    with_oracle: bool,
    strict: bool,
    out: &mut impl Write,
) -> Result<u8, CliError> {
    let state = load(path)?;
    let r = discord::report(&state)?;
    print_report(&r, out).map_err(out_err)?;
    if !with_oracle {
        return Ok(0);
    }
    let o = oracle::verify(&state, &OracleConfig::default())?;
    print_oracle(&o, out).map_err(out_err)?;
    Ok(strict_exit(o.flag, strict))
}

fn strict_exit(flag: Flag, strict: bool) -> u8 {
    if strict && flag == Flag::AnalyticSuboptimal {
        EXIT_SUBOPTIMAL
    } else {
        0
    }
}

pub fn sweep(
    family: &str,
    steps: usize,
    output: SweepOutput,
    dir: &Path,
    out: &mut impl Write,
) -> Result<u8, CliError> {
    let family: Family = family.parse()?;
    let rows = families::sweep(family, steps)?;
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;

    let mut written: Vec<PathBuf> = Vec::new();
    if matches!(output, SweepOutput::Csv | SweepOutput::Both) {
        let path = dir.join(format!("{}.csv", family.id()));
        write_atomic(&path, table::sweep_csv(&rows).as_bytes())?;
        written.push(path);
    }
    if matches!(output, SweepOutput::Svg | SweepOutput::Both) {
        let path = dir.join(format!("{}.svg", family.id()));
        write_atomic(&path, plot::sweep_svg(family, &rows).as_bytes())?;
        written.push(path);
    }

    let worst = rows.iter().map(|r| r.delta_max).fold(0.0, f64::max);
    (|| {
        for p in &written {
            writeln!(out, "wrote {} ({} rows)", p.display(), rows.len())?;
        }
        writeln!(out, "max |computed - closed form| {worst:e}")?;
        if family == Family::Werner {
            writeln!(out, "{FLAT_NOTE}")?;
        }
        Ok(())
    })()
    .map_err(out_err)?;
    Ok(0)
}

/// Options of the `audit` command.
#[derive(Debug, Clone)]
pub struct AuditOptions {
    pub count: usize,
    pub seed: u64,
    pub resolution: usize,
    /// Audit family members at the midpoints `(i + 1/2) / count` instead of random states.
    pub family: Option<String>,
    pub csv: Option<PathBuf>,
}

pub fn audit(opts: &AuditOptions, out: &mut impl Write) -> Result<u8, CliError> {
    if opts.count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let states = match &opts.family {
        Some(id) => {
            let family: Family = id.parse()?;
            (0..opts.count)
                .map(|i| FamilySpec::new(family, (i as f64 + 0.5) / opts.count as f64)?.build())
                .collect::<xdiscord::Result<Vec<_>>>()?
        }
        None => oracle::random_states(opts.count, opts.seed),
    };
    let config = OracleConfig {
        resolution: opts.resolution,
        ..OracleConfig::default()
    };
    let summary = oracle::audit(&states, &config)?;
    if let Some(path) = &opts.csv {
        write_atomic(path, table::audit_csv(&summary.reports).as_bytes())?;
    }

    (|| {
        for (i, r) in summary.reports.iter().enumerate() {
            writeln!(out, "{i:>6} discrepancy {:+.3e} {}", r.discrepancy, r.flag)?;
        }
        let flat = summary.reports.iter().filter(|r| r.is_flat()).count();
        if flat > 0 {
            writeln!(out, "{FLAT_NOTE} ({flat} of {} states)", summary.reports.len())?;
        }
        writeln!(
            out,
            "states {} resolution {} max discrepancy {:e} min discrepancy {:e} analytic_suboptimal {}",
            summary.reports.len(),
            config.resolution,
            summary.max_discrepancy,
            summary.min_discrepancy,
            summary.suboptimal
        )?;
        if let Some(p) = &opts.csv {
            writeln!(out, "wrote {}", p.display())?;
        }
        Ok(())
    })()
    .map_err(out_err)?;
    Ok(0)
}
