//! The `antipodal-atlas` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch or internal failure,
//! 2 usage error, 3 refusal of an excluded case.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::antipodal::{self, AntipodalError, AntipodalReport, ReportOptions, ReportRecord};
use crate::catalog::{self, Dims, Multiplicities, Params, SpaceDescriptor};
use crate::quotients;
use crate::rootsys::RootSystem;
use crate::tables::{self, sigma_symbol, space_symbol, sub_label, Evaluation, TableOptions};
use crate::verify::{self, Builder, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EXCLUDED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "antipodal-atlas",
    version,
    about = "Antipodal sets of compact symmetric spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every catalog row.
    List {
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        ascii: bool,
    },
    /// Show the catalog rows matching a name.
    Describe {
        name: String,
        /// Rank of Σ.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        ascii: bool,
    },
    /// Compute the antipodal set of one space.
    Antipodal {
        name: String,
        /// Rank of Σ.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
        /// Subgroup of the center, e.g. Z_2, Z_4 or {e,p_1}.
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Compute excluded subgroups of a_r anyway.
        #[arg(long)]
        allow_unvalidated: bool,
        #[arg(long)]
        ascii: bool,
    },
    /// Print one of the six tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=6))]
        n: u8,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Row-variable values, e.g. r=3 or r=3,q=2.
        #[arg(long)]
        evaluate: Option<Evaluation>,
        #[arg(long)]
        ascii: bool,
    },
    /// Check the engine against every table and property.
    Verify {
        /// Add the oracle cross-checks.
        #[arg(long)]
        deep: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        ascii: bool,
    },
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run(args: impl IntoIterator<Item = String>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        args,
        &mut stdout.lock(),
        &mut stderr.lock(),
        verify::standard_builder(),
    )
}

/// As [`run`], with explicit streams and root-system builder.
pub fn run_with(
    args: impl IntoIterator<Item = String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
    build: &Builder,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::List { format, ascii } => cmd_list(format, ascii, out),
        Command::Describe {
            name,
            r,
            q,
            format,
            ascii,
        } => cmd_describe(&name, r, q, format, ascii, out),
        Command::Antipodal {
            name,
            r,
            q,
            gamma,
            format,
            allow_unvalidated,
            ascii,
        } => cmd_antipodal(
            &name,
            r,
            q,
            gamma.as_deref(),
            format,
            ReportOptions { allow_unvalidated },
            ascii,
            build,
            out,
        ),
        Command::Table {
            n,
            format,
            evaluate,
            ascii,
        } => cmd_table(n, format, evaluate, ascii, build, out),
        Command::Verify {
            deep,
            format,
            ascii,
        } => cmd_verify(deep, format, ascii, build, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn internal(message: impl ToString) -> Self {
        Failure {
            code: EXIT_MISMATCH,
            message: message.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::internal(e)
    }
}

type CmdResult = Result<i32, Failure>;

/// The json shape of a catalog row.
#[derive(Debug, Clone, Serialize)]
pub struct DescriptorRecord {
    pub table: u8,
    pub name: String,
    pub cartan_label: String,
    pub condition: String,
    pub sigma: String,
    pub rank_expr: String,
    pub range: String,
    pub uses_q: bool,
    pub multiplicities: BTreeMap<String, String>,
    pub dim_m: String,
    pub gammas: Vec<String>,
    pub max_corners: Vec<String>,
    pub dims: Option<Vec<String>>,
    pub errata: Vec<String>,
}

impl From<&SpaceDescriptor> for DescriptorRecord {
    fn from(s: &SpaceDescriptor) -> Self {
        let multiplicities = match s.multiplicities {
            Multiplicities::Uniform(m) => [("all".to_string(), m.to_string())].into(),
            Multiplicities::ByClass(list) => list
                .iter()
                .map(|(c, m)| (c.to_string(), m.to_string()))
                .collect(),
        };
        DescriptorRecord {
            table: s.table,
            name: s.name.to_string(),
            cartan_label: s.cartan_label.to_string(),
            condition: s.condition.to_string(),
            sigma: s.sigma_label.to_string(),
            rank_expr: s.rank_expr(),
            range: s.range.to_string(),
            uses_q: s.uses_q,
            multiplicities,
            dim_m: s.dim_m.to_string(),
            gammas: if s.is_quotient() {
                vec![s.gamma_label.to_string()]
            } else {
                Vec::new()
            },
            max_corners: s.corners.iter().map(|c| c.symbolic()).collect(),
            dims: match s.dims {
                Dims::Known(d) => Some(d.iter().map(|x| x.to_string()).collect()),
                Dims::Unknown => None,
            },
            errata: s
                .errata
                .iter()
                .map(|e| format!("{}: {}", e.range, e.note))
                .collect(),
        }
    }
}

fn json(value: &impl Serialize) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(Failure::internal)
}

fn cmd_list(format: OutputFormat, ascii: bool, out: &mut dyn Write) -> CmdResult {
    let spaces = catalog::spaces();
    match format {
        OutputFormat::Text => {
            for s in spaces {
                let gamma = if s.is_quotient() {
                    format!(" | Γ = {}", sub_label(s.gamma_label, ascii))
                } else {
                    String::new()
                };
                let cond = match s.condition {
                    "" => String::new(),
                    c => format!(", {}", sub_label(c, ascii)),
                };
                writeln!(
                    out,
                    "Table {} | {} | {}{cond} | rank {} | {}{gamma}",
                    s.table,
                    s.cartan_label,
                    space_symbol(s.name, ascii),
                    s.rank_expr(),
                    sigma_symbol(s.sigma_label, ascii),
                )?;
            }
        }
        OutputFormat::Json => {
            let records: Vec<DescriptorRecord> =
                spaces.iter().map(DescriptorRecord::from).collect();
            writeln!(out, "{}", json(&records)?)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Failure::internal(e);
            w.write_record(["name", "cartan_label", "sigma", "rank_expr", "gammas"])
                .map_err(csv_err)?;
            for s in spaces {
                w.write_record([
                    s.name_with_condition(),
                    s.cartan_label.to_string(),
                    s.sigma_label.to_string(),
                    s.rank_expr(),
                    s.gamma_label.to_string(),
                ])
                .map_err(csv_err)?;
            }
            out.write_all(&w.into_inner().map_err(|e| Failure::internal(e.error()))?)?;
        }
    }
    Ok(EXIT_OK)
}

/// Row variable for a row given the rank of Σ.
fn row_params(s: &SpaceDescriptor, rank: usize, q: Option<u32>) -> Option<Params> {
    let r = match s.family.fixed_rank() {
        Some(n) => (n == rank).then_some(s.range.min)?,
        None => s.rank_form.row_var(rank)?,
    };
    let p = Params { r, q };
    s.check_params(p).is_ok().then_some(p)
}

#[derive(Debug, Serialize)]
struct Evaluated {
    params: Params,
    sigma: String,
    dim_m: u64,
    multiplicities: BTreeMap<String, u32>,
    subgroups: Vec<String>,
}

#[derive(Debug, Serialize)]
struct DescribeRecord {
    #[serde(flatten)]
    row: DescriptorRecord,
    evaluated: Option<Evaluated>,
}

fn evaluate_row(s: &SpaceDescriptor, p: Params) -> Result<Evaluated, Failure> {
    let id = s.sigma(p).map_err(Failure::usage)?;
    let rs = crate::rootsys::build(id).map_err(Failure::internal)?;
    let mut multiplicities = BTreeMap::new();
    for (class, _) in rs.length_classes() {
        let m = s.class_multiplicity(class, p).map_err(Failure::internal)?;
        multiplicities.insert(class.to_string(), m);
    }
    let subgroups = if s.is_quotient() {
        quotients::subgroups(&rs)
            .into_iter()
            .filter(|g| s.admits(g))
            .map(|g| g.label)
            .collect()
    } else {
        Vec::new()
    };
    Ok(Evaluated {
        params: p,
        sigma: id.to_string(),
        dim_m: catalog::classical_dim(s, p).map_err(Failure::internal)?,
        multiplicities,
        subgroups,
    })
}

fn cmd_describe(
    name: &str,
    rank: Option<usize>,
    q: Option<u32>,
    format: OutputFormat,
    ascii: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let rows = catalog::find_by_name(name);
    if rows.is_empty() {
        return Err(Failure::usage(format!("unknown space `{name}`")));
    }
    let mut records = Vec::new();
    for s in rows {
        let evaluated = match rank {
            Some(n) => match row_params(s, n, q) {
                Some(p) => Some(evaluate_row(s, p)?),
                None => continue,
            },
            None => None,
        };
        records.push((
            s,
            DescribeRecord {
                row: DescriptorRecord::from(s),
                evaluated,
            },
        ));
    }
    if records.is_empty() {
        return Err(Failure::usage(format!(
            "no row of `{name}` accepts these parameters"
        )));
    }
    match format {
        OutputFormat::Json => {
            let recs: Vec<&DescribeRecord> = records.iter().map(|(_, r)| r).collect();
            writeln!(out, "{}", json(&recs)?)?;
        }
        OutputFormat::Csv => return Err(Failure::usage("describe supports text and json output")),
        OutputFormat::Text => {
            for (s, rec) in &records {
                write_description(s, rec, ascii, out)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_description(
    s: &SpaceDescriptor,
    rec: &DescribeRecord,
    ascii: bool,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let row = &rec.row;
    let cond = if row.condition.is_empty() {
        String::new()
    } else {
        format!(", {}", sub_label(&row.condition, ascii))
    };
    writeln!(
        out,
        "{}: {}{cond} (table {})",
        row.cartan_label,
        space_symbol(s.name, ascii),
        row.table
    )?;
    writeln!(
        out,
        "  Σ: {}, rank {}, {}",
        sigma_symbol(&row.sigma, ascii),
        row.rank_expr,
        row.range
    )?;
    let m: Vec<String> = row
        .multiplicities
        .iter()
        .map(|(c, e)| format!("{c} {e}"))
        .collect();
    writeln!(out, "  multiplicities: {}", m.join(", "))?;
    writeln!(out, "  dim M: {}", row.dim_m)?;
    if !row.gammas.is_empty() {
        writeln!(out, "  Γ: {}", sub_label(s.gamma_label, ascii))?;
    }
    if !row.max_corners.is_empty() {
        let c: Vec<String> = row
            .max_corners
            .iter()
            .map(|c| sub_label(c, ascii))
            .collect();
        writeln!(out, "  max(Δ′): {}", c.join("; "))?;
    }
    match &row.dims {
        Some(d) => writeln!(out, "  dim A: {}", d.join("; "))?,
        None => writeln!(out, "  dim A: unknown")?,
    }
    for e in &row.errata {
        writeln!(out, "  erratum ({e})")?;
    }
    if let Some(ev) = &rec.evaluated {
        let m: Vec<String> = ev
            .multiplicities
            .iter()
            .map(|(c, v)| format!("{c} {v}"))
            .collect();
        writeln!(
            out,
            "  at {}: Σ = {}, dim M = {}, multiplicities {}",
            ev.params,
            sigma_symbol(&ev.sigma, ascii),
            ev.dim_m,
            m.join(", ")
        )?;
        if !ev.subgroups.is_empty() {
            let g: Vec<String> = ev.subgroups.iter().map(|g| sub_label(g, ascii)).collect();
            writeln!(out, "  subgroups: {}", g.join(", "))?;
        }
    }
    Ok(())
}

fn antipodal_failure(e: AntipodalError) -> Failure {
    match e {
        AntipodalError::Excluded { .. } => Failure {
            code: EXIT_EXCLUDED,
            message: format!("{e}; pass --allow-unvalidated to compute it anyway"),
        },
        AntipodalError::Inadmissible { .. }
        | AntipodalError::MissingGamma { .. }
        | AntipodalError::Catalog(_) => Failure::usage(e),
        _ => Failure::internal(e),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_antipodal(
    name: &str,
    rank: Option<usize>,
    q: Option<u32>,
    gamma: Option<&str>,
    format: OutputFormat,
    opts: ReportOptions,
    ascii: bool,
    build: &Builder,
    out: &mut dyn Write,
) -> CmdResult {
    let (space, params, g) = antipodal::resolve(name, rank, q, gamma).map_err(Failure::usage)?;
    let rs: RootSystem =
        build(space.sigma(params).map_err(Failure::usage)?).map_err(Failure::internal)?;
    let report = antipodal::antipodal_report_in(space, params, rs, g.as_ref(), opts)
        .map_err(antipodal_failure)?;
    match format {
        OutputFormat::Json => writeln!(out, "{}", json(&ReportRecord::from(&report))?)?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Failure::internal(e);
            w.write_record([
                "orbit",
                "form",
                "corner_indices",
                "j_set_size",
                "dimension",
                "status",
            ])
            .map_err(csv_err)?;
            let rec = ReportRecord::from(&report);
            for (i, o) in rec.orbits.iter().enumerate() {
                let idx: Vec<String> = o.base.corner_indices.iter().map(usize::to_string).collect();
                w.write_record([
                    (i + 1).to_string(),
                    o.base.form.clone(),
                    idx.join(" "),
                    o.j_set_size.to_string(),
                    o.dimension.to_string(),
                    rec.status.as_str().to_string(),
                ])
                .map_err(csv_err)?;
            }
            out.write_all(&w.into_inner().map_err(|e| Failure::internal(e.error()))?)?;
        }
        OutputFormat::Text => write_report(&report, ascii, out)?,
    }
    Ok(EXIT_OK)
}

fn write_report(report: &AntipodalReport, ascii: bool, out: &mut dyn Write) -> std::io::Result<()> {
    let s = report.space;
    let cond = if s.condition.is_empty() {
        String::new()
    } else {
        format!(", {}", sub_label(s.condition, ascii))
    };
    let label = if s.cartan_label == s.name {
        String::new()
    } else {
        format!("{}: ", s.cartan_label)
    };
    writeln!(out, "space:  {label}{}{cond}", space_symbol(s.name, ascii))?;
    writeln!(out, "params: {}", report.params)?;
    writeln!(
        out,
        "Σ:      {}",
        sigma_symbol(&report.root_system.id().to_string(), ascii)
    )?;
    if let Some(g) = &report.gamma {
        writeln!(out, "Γ:      {}", sub_label(&g.label, ascii))?;
    }
    writeln!(out, "status: {}", report.status.as_str())?;
    if report.orbits.is_empty() {
        writeln!(out, "orbits: unknown")?;
    }
    let cp = crate::polyhedron::cartan_polyhedron(&report.root_system);
    for (i, o) in report.orbits.iter().enumerate() {
        writeln!(
            out,
            "orbit {}: base {}, |J| = {}, |Σ_x⁺| = {}, dim = {}",
            i + 1,
            sub_label(&verify::describe_point(&cp, &o.base.scaled_vector), ascii),
            o.tangent_roots.len(),
            o.sigma_x.len(),
            o.dimension
        )?;
    }
    Ok(())
}

fn cmd_table(
    n: u8,
    format: OutputFormat,
    evaluate: Option<Evaluation>,
    ascii: bool,
    build: &Builder,
    out: &mut dyn Write,
) -> CmdResult {
    let opts = TableOptions {
        ascii: ascii || format != OutputFormat::Text,
        evaluate,
    };
    let table = tables::build_with(n, opts, build).map_err(Failure::usage)?;
    match format {
        OutputFormat::Text => write!(out, "{}", table.render_text())?,
        OutputFormat::Json => writeln!(out, "{}", table.render_json())?,
        OutputFormat::Csv => write!(out, "{}", table.render_csv().map_err(Failure::internal)?)?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    deep: bool,
    format: OutputFormat,
    ascii: bool,
    build: &Builder,
    out: &mut dyn Write,
) -> CmdResult {
    let opts = VerifyOptions {
        deep,
        ..VerifyOptions::default()
    };
    let report = verify::run_with(opts, build, ascii || format != OutputFormat::Text);
    match format {
        OutputFormat::Json => writeln!(out, "{}", json(&report)?)?,
        OutputFormat::Csv => return Err(Failure::usage("verify supports text and json output")),
        OutputFormat::Text => write!(out, "{}", report.render())?,
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
