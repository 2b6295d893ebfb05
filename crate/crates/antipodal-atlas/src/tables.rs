//! The six reference tables, rendered from the catalog and checked against the
//! engine at run time.
//!
//! Symbolic mode prints the catalog's template strings and appends a note for
//! every row where the engine disagrees on a sampled parameter. Evaluated mode
//! fills every cell from the engine at one choice of `r` and `q`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::antipodal::{self, ReportOptions, Status};
use crate::catalog::{
    self, corner_table, quotient_corner_table, Corner, CornerRow, Dims, Params, QuotientCornerRow,
    SpaceDescriptor,
};
use crate::polyhedron::{self, cartan_polyhedron, p_gamma};
use crate::quotients::{self, GammaSubgroup};
use crate::verify::{self, Builder, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("there is no table {0}; tables are numbered 1 to 6")]
    Number(u8),
    #[error("bad --evaluate value `{0}`; expected e.g. r=3 or r=3,q=2")]
    Evaluate(String),
}

/// Values substituted by `--evaluate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluation {
    pub r: u32,
    pub q: Option<u32>,
}

impl std::str::FromStr for Evaluation {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, TableError> {
        let bad = || TableError::Evaluate(s.to_string());
        let (mut r, mut q) = (None, None);
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: u32 = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "r" if r.is_none() => r = Some(value),
                "q" if q.is_none() => q = Some(value),
                _ => return Err(bad()),
            }
        }
        Ok(Evaluation {
            r: r.ok_or_else(bad)?,
            q,
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TableOptions {
    pub ascii: bool,
    pub evaluate: Option<Evaluation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub number: u8,
    pub caption: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
}

const CAPTIONS: [&str; 6] = [
    "Maximal corners of the Cartan polyhedron and the corresponding factors of the highest root",
    "Maximal corners of P_Γ for most non-simply connected G/K = M̃/Γ and the corresponding factors of the highest root",
    "Maximal corners of the Cartan polyhedron and the dimensions of the components of the antipodal set of irreducible compact simply connected symmetric spaces of type I",
    "Dimensions of the components of the antipodal set of irreducible symmetric spaces of compact type and type I",
    "Maximal corners of the Cartan polyhedron and the dimensions of the components of the antipodal set of irreducible compact simply connected symmetric spaces of type II",
    "Dimensions of the components of the antipodal set of irreducible symmetric spaces of compact type and type II",
];

const ASCII_CAPTION_2: &str =
    "Maximal corners of P_Gamma for most non-simply connected G/K = M/Gamma and the corresponding factors of the highest root";

fn columns(n: u8, ascii: bool) -> Vec<String> {
    let cols: &[&str] = match (n, ascii) {
        (1, false) => &["Σ", "max(Δ′)", "Factors d_j"],
        (1, true) => &["Sigma", "max(Delta')", "Factors d_j"],
        (2, false) => &["Σ", "Γ", "max(P_Γ′)", "Factors of ψ"],
        (2, true) => &["Sigma", "Gamma", "max(P_Gamma')", "Factors of psi"],
        (3, false) => &["Type", "M or (𝔤,𝔨)", "Σ", "max(Δ′)", "dim A"],
        (3, true) => &["Type", "M or (g,k)", "Sigma", "max(Delta')", "dim A"],
        (4, false) => &["Type", "M̃ or (𝔤,𝔨)", "Σ", "Γ", "dim A"],
        (4, true) => &["Type", "M or (g,k)", "Sigma", "Gamma", "dim A"],
        (5, false) => &["G", "Σ", "max(Δ′)", "dim A"],
        (5, true) => &["G", "Sigma", "max(Delta')", "dim A"],
        (6, false) => &["G̃", "Σ", "Γ", "dim A"],
        _ => &["G", "Sigma", "Gamma", "dim A"],
    };
    cols.iter().map(|c| c.to_string()).collect()
}

fn subscript(c: char) -> Option<char> {
    Some(match c {
        '0'..='9' => char::from_u32('₀' as u32 + c.to_digit(10)?)?,
        'r' => 'ᵣ',
        'i' => 'ᵢ',
        'j' => 'ⱼ',
        'k' => 'ₖ',
        '+' => '₊',
        '-' => '₋',
        '(' => '₍',
        ')' => '₎',
        _ => return None,
    })
}

/// Unicode rendering of an ascii label: `_x` and `_{…}` become subscripts
/// where every character has one, `-` becomes `−`, `>=` becomes `≥`, and a
/// leading `1/2(` becomes `½(`. With `ascii` the label is returned unchanged.
pub fn sub_label(label: &str, ascii: bool) -> String {
    if ascii {
        return label.to_string();
    }
    let label = label.replace("1/2(", "½(").replace("...", "…");
    let chars: Vec<char> = label.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '_' && i + 1 < chars.len() {
            let (body, next) = if chars[i + 1] == '{' {
                let close = chars[i + 2..]
                    .iter()
                    .position(|&c| c == '}')
                    .map(|p| p + i + 2);
                match close {
                    Some(close) => (&chars[i + 2..close], close + 1),
                    None => (&chars[i + 1..i + 2], i + 2),
                }
            } else if chars[i + 1].is_ascii_digit() {
                let end = chars[i + 1..]
                    .iter()
                    .position(|c| !c.is_ascii_digit())
                    .map_or(chars.len(), |p| p + i + 1);
                (&chars[i + 1..end], end)
            } else {
                (&chars[i + 1..i + 2], i + 2)
            };
            match body
                .iter()
                .map(|&c| subscript(c))
                .collect::<Option<String>>()
            {
                Some(s) if !body.is_empty() => out.push_str(&s),
                _ if chars[i + 1] == '{' => {
                    out.push_str("_{");
                    out.extend(body.iter().map(|&c| if c == '-' { '−' } else { c }));
                    out.push('}');
                }
                _ => {
                    out.push('_');
                    out.extend(body);
                }
            }
            i = next;
            continue;
        }
        out.push(if c == '-' { '−' } else { c });
        i += 1;
    }
    out.replace(">=", "≥").replace("<=", "≤")
}

fn fraktur(c: char) -> char {
    if c.is_ascii_lowercase() {
        char::from_u32(0x1D51E + (c as u32 - 'a' as u32)).unwrap_or(c)
    } else {
        c
    }
}

/// `a_{2r-1}` as `𝔞₂ᵣ₋₁`, keeping any trailing condition text.
pub fn sigma_symbol(label: &str, ascii: bool) -> String {
    if ascii {
        return label.to_string();
    }
    let stem_len = label.chars().take_while(|c| c.is_ascii_lowercase()).count();
    let stem: String = label.chars().take(stem_len).map(fraktur).collect();
    let rest = &label[stem_len..];
    let digits = rest.chars().take_while(char::is_ascii_digit).count();
    let index: String = rest[..digits].chars().filter_map(subscript).collect();
    format!("{stem}{index}{}", sub_label(&rest[digits..], false))
}

/// A space name with `ℂ`, `ℍ`, `ℝ` and fraktur Lie algebras.
pub fn space_symbol(name: &str, ascii: bool) -> String {
    if ascii {
        return name.to_string();
    }
    if !name.starts_with('(') {
        return sub_label(&name.replace("(C)", "(ℂ)").replace("(H)", "(ℍ)"), false);
    }
    let mut out = String::new();
    let mut prev_letter = false;
    for c in name.chars() {
        match c {
            'a'..='z' => {
                out.push(fraktur(c));
                prev_letter = true;
                continue;
            }
            '0'..='9' if prev_letter => out.push(subscript(c).unwrap_or(c)),
            '+' => out.push('⊕'),
            'R' => out.push('ℝ'),
            _ => out.push(c),
        }
        prev_letter = false;
    }
    out
}

fn gamma_symbol(label: &str, ascii: bool) -> String {
    if ascii {
        label.to_string()
    } else {
        sub_label(&label.replace("Z_2+Z_2", "Z_2⊕Z_2"), false)
    }
}

fn dims_symbol(dims: &[&str], ascii: bool) -> String {
    dims.iter()
        .map(|d| {
            if ascii {
                d.to_string()
            } else {
                crate::formula::pretty(d)
            }
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn corners_symbol(corners: &[Corner], ascii: bool) -> String {
    corners
        .iter()
        .map(|c| sub_label(&c.symbolic(), ascii))
        .collect::<Vec<_>>()
        .join("; ")
}

fn join_points(points: impl IntoIterator<Item = String>, ascii: bool) -> String {
    points
        .into_iter()
        .map(|p| sub_label(&p, ascii))
        .collect::<Vec<_>>()
        .join("; ")
}

fn wrap(s: &str) -> String {
    if s.chars().count() == 1 {
        s.to_string()
    } else {
        format!("{{{s}}}")
    }
}

fn factors_template(row: &CornerRow, ascii: bool) -> String {
    let parts: Vec<String> = row
        .corners
        .iter()
        .zip(row.factors)
        .map(|(c, f)| match c {
            Corner::E(j) => sub_label(&format!("d_{}={f}", wrap(j)), ascii),
            other => format!("{}={f}", other.symbolic()),
        })
        .collect();
    parts.join("; ")
}

/// Table 1 labels may list several systems, as in `b_2, b_3`.
fn corner_row_symbol(label: &str, ascii: bool) -> String {
    let is_system = |p: &str| {
        let stem = p.chars().take_while(|c| c.is_ascii_lowercase()).count();
        stem > 0 && p[stem..].starts_with('_')
    };
    label
        .split(", ")
        .map(|p| {
            if is_system(p) {
                sigma_symbol(p, ascii)
            } else {
                sub_label(p, ascii)
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Table 2 labels print the condition after a space, not a comma.
fn quotient_sigma(row: &QuotientCornerRow, ascii: bool) -> String {
    let label = row.label.replacen(", ", " ", 1);
    sigma_symbol(&label, ascii)
}

fn quotient_factors(s: &str, ascii: bool) -> String {
    if ascii {
        s.to_string()
    } else {
        s.replace("...", "…")
    }
}

/// Builds table `n` with the standard root systems.
pub fn build(n: u8, opts: TableOptions) -> Result<Table, TableError> {
    build_with(n, opts, verify::standard_builder())
}

pub fn build_with(n: u8, opts: TableOptions, build: &Builder) -> Result<Table, TableError> {
    let caption = match n {
        2 if opts.ascii => ASCII_CAPTION_2.to_string(),
        1..=6 => CAPTIONS[n as usize - 1].to_string(),
        _ => return Err(TableError::Number(n)),
    };
    let caption = match opts.evaluate {
        Some(e) => match e.q {
            Some(q) => format!("{caption}, evaluated at r={}, q={q}", e.r),
            None => format!("{caption}, evaluated at r={}", e.r),
        },
        None => caption,
    };
    let (rows, notes) = match (n, opts.evaluate) {
        (1, None) => table1_symbolic(opts.ascii, build),
        (1, Some(e)) => table1_evaluated(e, opts.ascii, build),
        (2, None) => table2_symbolic(opts.ascii, build),
        (2, Some(e)) => table2_evaluated(e, opts.ascii, build),
        (_, None) => spaces_symbolic(n, opts.ascii, build),
        (_, Some(e)) => spaces_evaluated(n, e, opts.ascii, build),
    };
    Ok(Table {
        number: n,
        caption,
        columns: columns(n, opts.ascii),
        rows,
        notes,
    })
}

const SAMPLE_RANK: u32 = 12;
const SAMPLE_R: u32 = 8;
const SAMPLE_Q: u32 = 2;

/// First disagreement over the samples, or the erratum note if that is all.
fn first_note(label: String, outcomes: impl Iterator<Item = (String, Outcome)>) -> Option<String> {
    let mut erratum = None;
    for (at, outcome) in outcomes {
        match outcome {
            Outcome::Match => {}
            Outcome::Mismatch(m) => return Some(format!("{label} at {at}: engine disagrees: {m}")),
            Outcome::Erratum(e) => {
                erratum.get_or_insert_with(|| format!("{label} at {at}: {e}"));
            }
        }
    }
    erratum
}

type Rows = (Vec<Vec<String>>, Vec<String>);

fn table1_symbolic(ascii: bool, build: &Builder) -> Rows {
    corner_table()
        .par_iter()
        .map(|row| {
            let cells = vec![
                corner_row_symbol(row.label, ascii),
                corners_symbol(row.corners, ascii),
                factors_template(row, ascii),
            ];
            let samples = row
                .range
                .values(SAMPLE_RANK)
                .filter(|&r| {
                    row.rank_form
                        .rank(r)
                        .is_some_and(|n| n as u32 <= SAMPLE_RANK)
                })
                .map(|r| (format!("r={r}"), verify::check_corner_row(row, r, build)));
            (
                cells,
                first_note(corner_row_symbol(row.label, ascii), samples),
            )
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((Vec::new(), Vec::new()), push_row)
}

fn push_row((mut rows, mut notes): Rows, (cells, note): (Vec<String>, Option<String>)) -> Rows {
    rows.push(cells);
    notes.extend(note);
    (rows, notes)
}

fn table1_evaluated(e: Evaluation, ascii: bool, build: &Builder) -> Rows {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for row in corner_table() {
        let r = match row.family.fixed_rank() {
            Some(n) => n as u32,
            None if row.range.contains(e.r) => e.r,
            None => continue,
        };
        let label = verify::corner_row_label(row, r);
        let rs = match row
            .rank_form
            .rank(r)
            .map(|n| (n, verify::system(row.family, n, build)))
        {
            Some((_, Ok(rs))) => rs,
            Some((_, Err(err))) => {
                notes.push(format!("{label}: {err}"));
                continue;
            }
            None => continue,
        };
        let corners = cartan_polyhedron(&rs).maximal_corners();
        rows.push(vec![
            sigma_symbol(&label, ascii),
            join_points(
                corners
                    .iter()
                    .map(|j| format!("e_{}", wrap(&j.to_string()))),
                ascii,
            ),
            join_points(
                corners
                    .iter()
                    .map(|&j| format!("d_{}={}", wrap(&j.to_string()), rs.d_j(j))),
                ascii,
            ),
        ]);
        if let Outcome::Mismatch(m) = verify::check_corner_row(row, r, build) {
            notes.push(format!(
                "{}: printed entry differs: {m}",
                sigma_symbol(&label, ascii)
            ));
        }
    }
    (rows, notes)
}

fn table2_symbolic(ascii: bool, build: &Builder) -> Rows {
    quotient_corner_table()
        .par_iter()
        .map(|row| {
            let cells = vec![
                quotient_sigma(row, ascii),
                gamma_symbol(&row.gamma.symbolic(), ascii),
                match row.corners {
                    Some(c) => corners_symbol(c, ascii),
                    None => "unknown".into(),
                },
                quotient_factors(row.factors, ascii),
            ];
            let samples = row
                .range
                .values(SAMPLE_RANK)
                .map(|r| (format!("r={r}"), verify::check_quotient_row(row, r, build)));
            let label = format!(
                "{} / {}",
                quotient_sigma(row, ascii),
                gamma_symbol(&row.gamma.symbolic(), ascii)
            );
            (cells, first_note(label, samples))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((Vec::new(), Vec::new()), push_row)
}

fn table2_evaluated(e: Evaluation, ascii: bool, build: &Builder) -> Rows {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for row in quotient_corner_table() {
        let r = match row.family.fixed_rank() {
            Some(n) => n as u32,
            None if row.range.contains(e.r) => e.r,
            None => continue,
        };
        let label = verify::quotient_row_label(row, r);
        let (rs, gamma) = match verify::quotient_maxima(row, r, build) {
            Ok(x) => x,
            Err(err) => {
                notes.push(format!("{label}: {err}"));
                continue;
            }
        };
        let sigma = sigma_symbol(&rs.id().to_string(), ascii);
        let Some(g) = gamma.filter(|g| !g.is_marker()) else {
            let gamma = if row.corners.is_none() {
                "otherwise".to_string()
            } else {
                row.gamma.symbolic()
            };
            rows.push(vec![
                sigma,
                gamma_symbol(&gamma, ascii),
                "unknown".into(),
                String::new(),
            ]);
            continue;
        };
        let cp = cartan_polyhedron(&rs);
        let (points, factors) = match p_gamma(&rs, &g) {
            Ok(poly) => {
                let maxima = polyhedron::max_prime(&poly);
                let points: Vec<String> = maxima
                    .iter()
                    .map(|b| verify::describe_point(&cp, &b.scaled_vector))
                    .collect();
                let factors: Vec<String> = maxima
                    .iter()
                    .map(|b| match b.form {
                        polyhedron::BaseForm::SingleCorner(j) => rs.d_j(j).to_string(),
                        polyhedron::BaseForm::HalfSum(j, k) => {
                            format!("({},{})", rs.d_j(j), rs.d_j(k))
                        }
                        polyhedron::BaseForm::FullSum => format!(
                            "({})",
                            rs.d()
                                .iter()
                                .map(u32::to_string)
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                        polyhedron::BaseForm::GeneralVertex => "-".into(),
                    })
                    .collect();
                (points, factors.join("; "))
            }
            Err(err) => {
                notes.push(format!("{label}: {err}"));
                continue;
            }
        };
        rows.push(vec![
            sigma,
            gamma_symbol(&g.label, ascii),
            join_points(points, ascii),
            factors,
        ]);
        match verify::check_quotient_row(row, r, build) {
            Outcome::Match => {}
            Outcome::Erratum(m) | Outcome::Mismatch(m) => {
                notes.push(format!("{}: {m}", sub_label(&label, ascii)))
            }
        }
    }
    (rows, notes)
}

fn space_name_cell(s: &SpaceDescriptor, ascii: bool) -> String {
    let name = space_symbol(s.name, ascii);
    if s.condition.is_empty() {
        name
    } else {
        format!("{name}, {}", sub_label(s.condition, ascii))
    }
}

fn type_ii(n: u8) -> bool {
    n >= 5
}

fn quotient_table(n: u8) -> bool {
    n == 4 || n == 6
}

fn space_cells(
    n: u8,
    s: &SpaceDescriptor,
    sigma: String,
    middle: String,
    dims: String,
    ascii: bool,
) -> Vec<String> {
    let mut cells = Vec::new();
    if type_ii(n) {
        cells.push(space_name_cell(s, ascii));
    } else {
        cells.push(s.cartan_label.to_string());
        cells.push(space_name_cell(s, ascii));
    }
    cells.extend([sigma, middle, dims]);
    cells
}

fn rows_of(n: u8) -> impl Iterator<Item = &'static SpaceDescriptor> {
    catalog::spaces().iter().filter(move |s| s.table == n)
}

fn spaces_symbolic(n: u8, ascii: bool, build: &Builder) -> Rows {
    rows_of(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|s| {
            let middle = if quotient_table(n) {
                gamma_symbol(s.gamma_label, ascii)
            } else {
                corners_symbol(s.corners, ascii)
            };
            let dims = match s.dims {
                Dims::Known(d) => dims_symbol(d, ascii),
                Dims::Unknown => "unknown".into(),
            };
            let cells = space_cells(
                n,
                s,
                sigma_symbol(s.sigma_label, ascii),
                middle,
                dims,
                ascii,
            );
            let samples = catalog::param_grid(s, SAMPLE_R, SAMPLE_Q)
                .into_iter()
                .map(|p| (p.to_string(), verify::check_space_row(s, p, build)));
            (cells, first_note(space_name_cell(s, ascii), samples))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((Vec::new(), Vec::new()), push_row)
}

fn spaces_evaluated(n: u8, e: Evaluation, ascii: bool, build: &Builder) -> Rows {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    let mut skipped_q = false;
    for s in rows_of(n) {
        let r = match s.family.fixed_rank() {
            Some(_) => s.range.min,
            None if s.range.contains(e.r) => e.r,
            None => continue,
        };
        let params = match (s.uses_q, e.q) {
            (true, Some(q)) => Params::rq(r, q),
            (true, None) => {
                skipped_q = true;
                continue;
            }
            (false, _) => Params::r(r),
        };
        match evaluated_row(n, s, params, ascii, build) {
            Ok((cells, note)) => {
                rows.push(cells);
                notes.extend(note);
            }
            Err(err) => notes.push(format!("{} [{params}]: {err}", space_name_cell(s, ascii))),
        }
    }
    if skipped_q {
        notes.push("rows in q are omitted; pass q=… to include them".into());
    }
    (rows, notes)
}

fn evaluated_row(
    n: u8,
    s: &'static SpaceDescriptor,
    params: Params,
    ascii: bool,
    build: &Builder,
) -> Result<(Vec<String>, Option<String>), String> {
    let id = s.sigma(params).map_err(|e| e.to_string())?;
    let sigma = sigma_symbol(&id.to_string(), ascii);
    let gammas: Vec<Option<GammaSubgroup>> = if s.is_quotient() {
        let rs = build(id).map_err(|e| e.to_string())?;
        quotients::subgroups(&rs)
            .into_iter()
            .filter(|g| s.gammas.contains(&g.kind))
            .map(Some)
            .collect()
    } else {
        vec![None]
    };
    let mut dims: BTreeSet<String> = BTreeSet::new();
    let mut corners = String::new();
    for g in &gammas {
        let rs = build(id).map_err(|e| e.to_string())?;
        let rep =
            antipodal::antipodal_report_in(s, params, rs, g.as_ref(), ReportOptions::default())
                .map_err(|e| e.to_string())?;
        if rep.status == Status::ExcludedUnknown {
            dims.insert("unknown".into());
            continue;
        }
        let cp = cartan_polyhedron(&rep.root_system);
        corners = join_points(
            rep.orbits
                .iter()
                .map(|o| verify::describe_point(&cp, &o.base.scaled_vector)),
            ascii,
        );
        dims.insert(
            rep.dimensions()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join("; "),
        );
    }
    let middle = if quotient_table(n) {
        let labels: Vec<String> = gammas
            .iter()
            .flatten()
            .map(|g| gamma_symbol(&g.label, ascii))
            .collect();
        labels.join(" or ")
    } else {
        corners
    };
    let dims = dims.into_iter().collect::<Vec<_>>().join(" | ");
    let cells = space_cells(n, s, sigma, middle, dims, ascii);
    let note = match verify::check_space_row(s, params, build) {
        Outcome::Match => None,
        Outcome::Erratum(m) | Outcome::Mismatch(m) => {
            Some(format!("{} [{params}]: {m}", space_name_cell(s, ascii)))
        }
    };
    Ok((cells, note))
}

impl Table {
    pub fn render_text(&self) -> String {
        let mut out = format!("Table {}. {}\n\n", self.number, self.caption);
        let _ = writeln!(out, "{}", self.columns.join(" | "));
        let _ = writeln!(out, "{}", vec!["---"; self.columns.len()].join(" | "));
        for row in &self.rows {
            let _ = writeln!(out, "{}", row.join(" | "));
        }
        if !self.notes.is_empty() {
            out.push_str("\nNotes:\n");
            for n in &self.notes {
                let _ = writeln!(out, "- {n}");
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    /// Header plus one record per row; notes are not part of the csv.
    pub fn render_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("utf-8 cells"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: u8, evaluate: Option<&str>) -> Table {
        let opts = TableOptions {
            ascii: false,
            evaluate: evaluate.map(|e| e.parse().unwrap()),
        };
        build(n, opts).unwrap()
    }

    fn has_row(t: &Table, row: &str) -> bool {
        t.rows.iter().any(|r| r.join(" | ") == row)
    }

    #[test]
    fn labels() {
        assert_eq!(sub_label("g_2", false), "g₂");
        assert_eq!(sub_label("e_{r+1}", false), "eᵣ₊₁");
        assert_eq!(
            sub_label("1/2(e_{(r-1)/2}+e_{(r+1)/2})", false),
            "½(e_{(r−1)/2}+e_{(r+1)/2})"
        );
        assert_eq!(sub_label("g_2", true), "g_2");
        assert_eq!(sub_label("a_17 / Z_18", false), "a₁₇ / Z₁₈");
        assert_eq!(sigma_symbol("bc_r", false), "𝔟𝔠ᵣ");
        assert_eq!(sigma_symbol("e6", false), "𝔢₆");
        assert_eq!(sigma_symbol("a_{2r-1}", false), "𝔞₂ᵣ₋₁");
        assert_eq!(space_symbol("(e6, so(10)+R)", false), "(𝔢₆, 𝔰𝔬(10)⊕ℝ)");
        assert_eq!(space_symbol("Gr_{r,r+q}(C)", false), "Gr_{r,r+q}(ℂ)");
    }

    #[test]
    fn table1_g2_row() {
        let t = table(1, None);
        assert!(has_row(&t, "𝔤₂ | e₁ | d₁=3"));
        assert!(has_row(&t, "𝔟₂, 𝔟₃ | e₁ | d₁=1"));
        assert!(t.notes.is_empty(), "{:?}", t.notes);
    }

    #[test]
    fn table2_c_odd_row() {
        let t = table(2, None);
        assert!(
            has_row(&t, "𝔠ᵣ r odd | Z₂ | ½(e_{(r−1)/2}+e_{(r+1)/2}) | (2,2)"),
            "{:#?}",
            t.rows
        );
        assert!(t.notes.iter().any(|n| n.contains("𝔡₈")), "{:#?}", t.notes);
    }

    #[test]
    fn table4_evaluated_c_ii() {
        let t = table(4, Some("r=3"));
        let row = t.rows.iter().find(|r| r[0] == "C II").unwrap();
        assert_eq!(row.last().unwrap(), "27");
    }

    #[test]
    fn evaluation_parsing() {
        assert_eq!(
            "r=3,q=2".parse::<Evaluation>().unwrap(),
            Evaluation { r: 3, q: Some(2) }
        );
        assert!("q=2".parse::<Evaluation>().is_err());
        assert!("r=x".parse::<Evaluation>().is_err());
        assert!(build(7, TableOptions::default()).is_err());
    }

    #[test]
    fn csv_header_is_ascii() {
        let t = build(
            5,
            TableOptions {
                ascii: true,
                evaluate: None,
            },
        )
        .unwrap();
        let csv = t.render_csv().unwrap();
        assert!(csv.starts_with("G,Sigma,max(Delta'),dim A\n"));
        assert!(csv.contains("E_8,e_8,e_1,128"));
    }
}
