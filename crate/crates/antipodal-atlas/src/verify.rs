//! Engine-versus-table checks behind `antipodal-atlas verify`.
//!
//! A printed entry passes when the engine reproduces it, or when the row
//! carries an erratum and the engine reproduces the erratum instead. The
//! latter is reported as a note so the disagreement stays visible.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::antipodal::{self, specialized_roots, tangent_roots, ReportOptions, Status};
use crate::catalog::{
    self, corner_table, quotient_corner_table, CornerAt, CornerRow, Dims, Params,
    QuotientCornerRow, SpaceDescriptor,
};
use crate::exact::Vector;
use crate::formula::{self, Env};
use crate::oracle;
use crate::polyhedron::{self, cartan_polyhedron, p_gamma, BaseForm, BasePoint};
use crate::quotients;
use crate::rootsys::{self, Family, RootSystem, RootSystemError, RootSystemId};
use crate::tables::sub_label;

/// Root-system constructor, swappable for fault injection.
pub type Builder = dyn Fn(RootSystemId) -> Result<RootSystem, RootSystemError> + Sync;

pub fn standard_builder() -> &'static Builder {
    &rootsys::build
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Match,
    /// Engine equals the documented erratum, not the printed entry.
    Erratum(String),
    Mismatch(String),
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub deep: bool,
    /// Largest rank for the corner tables and formula checks.
    pub rank_cap: u32,
    pub r_cap: u32,
    pub q_cap: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            deep: false,
            rank_cap: 12,
            r_cap: 10,
            q_cap: 5,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed() { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {} ({} cases)\n", c.name, c.cases));
            for f in &c.failures {
                out.push_str(&format!("     {f}\n"));
            }
            for n in &c.notes {
                out.push_str(&format!("     note: {n}\n"));
            }
        }
        out
    }
}

fn collect(name: &'static str, results: Vec<(String, Outcome)>) -> Check {
    let mut check = Check {
        name,
        cases: results.len(),
        ..Check::default()
    };
    let mut seen_notes = BTreeSet::new();
    for (label, outcome) in results {
        match outcome {
            Outcome::Match => {}
            Outcome::Erratum(note) => {
                if seen_notes.insert(note.clone()) {
                    check.notes.push(format!("{label}: {note}"));
                }
            }
            Outcome::Mismatch(m) => check.failures.push(format!("{label}: {m}")),
        }
    }
    check
}

fn fmt_set<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn eval_u(src: &str, r: u32) -> Option<u64> {
    formula::eval_natural(src, Env::r(r as i64)).ok().flatten()
}

pub(crate) fn system(family: Family, rank: usize, build: &Builder) -> Result<RootSystem, String> {
    let id = match family.fixed_rank() {
        Some(_) => RootSystemId::exceptional(family),
        None => RootSystemId::new(family, rank).map_err(|e| e.to_string())?,
    };
    build(id).map_err(|e| e.to_string())
}

/// Concrete label of a corner-table row, e.g. `a_6` for `a_{2r}` at `r = 3`.
pub fn corner_row_label(row: &CornerRow, r: u32) -> String {
    match row.family.fixed_rank() {
        Some(_) => row.label.to_string(),
        None => format!(
            "{}_{}",
            row.family.stem(),
            row.rank_form.rank(r).unwrap_or(0)
        ),
    }
}

pub fn check_corner_row(row: &CornerRow, r: u32, build: &Builder) -> Outcome {
    let Some(rank) = row.rank_form.rank(r) else {
        return Outcome::Mismatch("rank undefined".into());
    };
    let rs = match system(row.family, rank, build) {
        Ok(rs) => rs,
        Err(e) => return Outcome::Mismatch(e),
    };
    let engine = cartan_polyhedron(&rs).maximal_corners();
    let mut printed = BTreeSet::new();
    for c in row.corners {
        match c.at(r) {
            Ok(CornerAt::E(j)) => {
                printed.insert(j);
            }
            _ => return Outcome::Mismatch(format!("cannot evaluate {}", c.symbolic())),
        }
    }
    if engine != printed {
        return Outcome::Mismatch(format!(
            "max(Δ') = {}, printed {}",
            fmt_set(engine.iter().map(|j| format!("e_{j}"))),
            fmt_set(printed.iter().map(|j| format!("e_{j}")))
        ));
    }
    for (c, f) in row.corners.iter().zip(row.factors) {
        let Ok(CornerAt::E(j)) = c.at(r) else {
            unreachable!()
        };
        if j > rs.rank() {
            return Outcome::Mismatch(format!("corner e_{j} beyond rank"));
        }
        let d = rs.d_j(j) as u64;
        if eval_u(f, r) != Some(d) {
            return Outcome::Mismatch(format!("d_{j} = {d}, printed {f}"));
        }
    }
    Outcome::Match
}

fn corner_vectors(
    corners: &[catalog::Corner],
    r: u32,
    rs: &RootSystem,
) -> Result<BTreeSet<Vector>, String> {
    let cp = cartan_polyhedron(rs);
    corners
        .iter()
        .map(|c| {
            c.at(r)
                .ok()
                .and_then(|at| at.vector(&cp))
                .ok_or_else(|| format!("cannot evaluate {}", c.symbolic()))
        })
        .collect()
}

/// Factor string the engine assigns to a corner template.
fn engine_factors(corners: &[catalog::Corner], r: u32, rs: &RootSystem) -> Option<String> {
    let parts: Option<Vec<String>> = corners
        .iter()
        .map(|c| match c.at(r).ok()? {
            CornerAt::E(j) if j <= rs.rank() => Some(rs.d_j(j).to_string()),
            CornerAt::Half(j, k) | CornerAt::Pair(j, k) if j.max(k) <= rs.rank() => {
                Some(format!("({},{})", rs.d_j(j), rs.d_j(k)))
            }
            CornerAt::Full if rs.d().iter().all(|&d| d == 1) => Some("(1,...,1)".into()),
            _ => None,
        })
        .collect();
    parts.map(|p| p.join(";"))
}

pub fn quotient_row_label(row: &QuotientCornerRow, r: u32) -> String {
    match row.family.fixed_rank() {
        Some(_) => row.label.to_string(),
        None => format!("{}_{} / {}", row.family.stem(), r, row.gamma.symbolic()),
    }
}

/// Engine maxima of `P_Γ'` for a quotient-table row at rank `r`.
pub fn quotient_maxima(
    row: &QuotientCornerRow,
    r: u32,
    build: &Builder,
) -> Result<(RootSystem, Option<quotients::GammaSubgroup>), String> {
    let rs = system(row.family, r as usize, build)?;
    let g = quotients::subgroups(&rs)
        .into_iter()
        .find(|g| g.kind == row.gamma);
    Ok((rs, g))
}

pub fn check_quotient_row(row: &QuotientCornerRow, r: u32, build: &Builder) -> Outcome {
    let (rs, gamma) = match quotient_maxima(row, r, build) {
        Ok(x) => x,
        Err(e) => return Outcome::Mismatch(e),
    };
    let Some(corners) = row.corners else {
        return match gamma {
            Some(g) if g.is_marker() => Outcome::Match,
            _ => Outcome::Mismatch("expected the excluded-case marker".into()),
        };
    };
    let Some(gamma) = gamma else {
        return Outcome::Mismatch(format!("no subgroup {}", row.gamma.symbolic()));
    };
    let poly = match p_gamma(&rs, &gamma) {
        Ok(p) => p,
        Err(e) => return Outcome::Mismatch(e.to_string()),
    };
    let engine: BTreeSet<Vector> = polyhedron::max_prime(&poly)
        .into_iter()
        .map(|b| b.scaled_vector)
        .collect();
    let printed = match corner_vectors(corners, r, &rs) {
        Ok(p) => p,
        Err(e) => return Outcome::Mismatch(e),
    };
    let factors_ok = |cs: &[catalog::Corner]| {
        let norm = |s: &str| s.replace([' ', '…'], "").replace("...", "");
        engine_factors(cs, r, &rs).map(|f| norm(&f)) == Some(norm(row.factors))
    };
    if engine == printed {
        if !factors_ok(corners) {
            return Outcome::Mismatch(format!(
                "factors {}, printed {}",
                engine_factors(corners, r, &rs).unwrap_or_default(),
                row.factors
            ));
        }
        return Outcome::Match;
    }
    let describe = |set: &BTreeSet<Vector>| {
        let cp = cartan_polyhedron(&rs);
        let mut names: Vec<String> = set.iter().map(|v| describe_point(&cp, v)).collect();
        names.sort_by_key(|n| (n.starts_with("1/2"), n.clone()));
        fmt_set(names)
    };
    if let Some(e) = row.erratum(r) {
        if corner_vectors(e.corners, r, &rs).ok().as_ref() == Some(&engine) {
            return Outcome::Erratum(format!(
                "printed {}, engine {}; {}",
                describe(&printed),
                describe(&engine),
                e.note
            ));
        }
    }
    Outcome::Mismatch(format!(
        "max(P') = {}, printed {}",
        describe(&engine),
        describe(&printed)
    ))
}

/// Names a point as `e_j`, `1/2(e_j+e_k)` or the full sum where possible.
pub fn describe_point(cp: &polyhedron::CartanPolyhedron<'_>, v: &Vector) -> String {
    let r = cp.corners().len();
    match cp.tag(v) {
        BaseForm::GeneralVertex => {
            for j in 1..=r {
                for k in j + 1..=r {
                    if cp.half_sum(j, k) == *v {
                        return format!("1/2(e_{j}+e_{k})");
                    }
                }
            }
            v.to_string()
        }
        form => form.to_string(),
    }
}

pub fn space_label(space: &SpaceDescriptor, params: Params) -> String {
    format!(
        "Table {} / {} [{}]",
        space.table,
        space.name_with_condition(),
        params
    )
}

/// Dimension column, and the corner column where printed.
pub fn check_space_row(
    space: &'static SpaceDescriptor,
    params: Params,
    build: &Builder,
) -> Outcome {
    let id = match space.sigma(params) {
        Ok(id) => id,
        Err(e) => return Outcome::Mismatch(e.to_string()),
    };
    let gammas: Vec<Option<quotients::GammaSubgroup>> = if space.is_quotient() {
        let rs = match build(id) {
            Ok(rs) => rs,
            Err(e) => return Outcome::Mismatch(e.to_string()),
        };
        let subs = quotients::subgroups(&rs);
        let found: Vec<_> = space
            .gammas
            .iter()
            .map(|k| subs.iter().find(|g| g.kind == *k).cloned())
            .collect();
        if found.iter().any(Option::is_none) {
            return Outcome::Mismatch(format!("subgroup {} missing", space.gamma_label));
        }
        found
    } else {
        vec![None]
    };
    let mut notes = Vec::new();
    for gamma in gammas {
        let rs = match build(id) {
            Ok(rs) => rs,
            Err(e) => return Outcome::Mismatch(e.to_string()),
        };
        let report = match antipodal::antipodal_report_in(
            space,
            params,
            rs,
            gamma.as_ref(),
            ReportOptions::default(),
        ) {
            Ok(r) => r,
            Err(e) => return Outcome::Mismatch(e.to_string()),
        };
        let mut engine = report.dimensions();
        engine.sort_unstable();
        match space.dims {
            Dims::Unknown => {
                if report.status != Status::ExcludedUnknown {
                    return Outcome::Mismatch("expected the excluded-case status".into());
                }
                continue;
            }
            Dims::Known(_) => {}
        }
        if !space.corners.is_empty() {
            let r = params.r;
            let printed: Option<BTreeSet<usize>> = space
                .corners
                .iter()
                .map(|c| match c.at(r) {
                    Ok(CornerAt::E(j)) => Some(j),
                    _ => None,
                })
                .collect();
            let found: BTreeSet<usize> = report
                .orbits
                .iter()
                .filter_map(|o| match o.base.form {
                    BaseForm::SingleCorner(j) => Some(j),
                    _ => None,
                })
                .collect();
            if printed.as_ref() != Some(&found) || found.len() != report.orbits.len() {
                return Outcome::Mismatch(format!(
                    "max(Δ') = {}, printed {}",
                    fmt_set(found.iter().map(|j| format!("e_{j}"))),
                    fmt_set(space.corners.iter().map(|c| c.symbolic()))
                ));
            }
        }
        let printed = match space.printed_dims(params) {
            Ok(Some(mut d)) => {
                d.sort_unstable();
                d
            }
            Ok(None) => unreachable!("known dims"),
            Err(e) => return Outcome::Mismatch(e.to_string()),
        };
        if engine == printed {
            continue;
        }
        let erratum = space.erratum(params.r).and_then(|e| {
            let mut d = catalog::eval_dims(e.dims, params).ok()?;
            d.sort_unstable();
            (d == engine).then_some(e)
        });
        let gname = gamma
            .as_ref()
            .map(|g| format!(" with {}", g.label))
            .unwrap_or_default();
        match erratum {
            Some(e) => notes.push(format!(
                "printed {printed:?}, engine {engine:?}{gname}; {}",
                e.note
            )),
            None => {
                return Outcome::Mismatch(format!("dim A = {engine:?}{gname}, printed {printed:?}"))
            }
        }
    }
    if notes.is_empty() {
        Outcome::Match
    } else {
        Outcome::Erratum(notes.join(" | "))
    }
}

fn table1_cases(opts: &VerifyOptions) -> Vec<(&'static CornerRow, u32)> {
    corner_table()
        .iter()
        .flat_map(|row| {
            row.range
                .values(opts.rank_cap)
                .filter(|&r| {
                    row.rank_form
                        .rank(r)
                        .is_some_and(|n| n as u32 <= opts.rank_cap)
                })
                .map(move |r| (row, r))
        })
        .collect()
}

fn table2_cases(opts: &VerifyOptions) -> Vec<(&'static QuotientCornerRow, u32)> {
    quotient_corner_table()
        .iter()
        .flat_map(|row| row.range.values(opts.rank_cap).map(move |r| (row, r)))
        .collect()
}

fn space_cases(opts: &VerifyOptions) -> Vec<(&'static SpaceDescriptor, Params)> {
    catalog::spaces()
        .iter()
        .flat_map(|s| {
            catalog::param_grid(s, opts.r_cap, opts.q_cap)
                .into_iter()
                .map(move |p| (s, p))
        })
        .collect()
}

pub fn check_table1(opts: &VerifyOptions, build: &Builder, ascii: bool) -> Check {
    let results = table1_cases(opts)
        .into_par_iter()
        .map(|(row, r)| {
            let label = format!("Table 1 / {}", sub_label(&corner_row_label(row, r), ascii));
            (label, check_corner_row(row, r, build))
        })
        .collect();
    collect("table 1: maximal corners and factors", results)
}

pub fn check_table2(opts: &VerifyOptions, build: &Builder, ascii: bool) -> Check {
    let results = table2_cases(opts)
        .into_par_iter()
        .map(|(row, r)| {
            let label = format!(
                "Table 2 / {}",
                sub_label(&quotient_row_label(row, r), ascii)
            );
            (label, check_quotient_row(row, r, build))
        })
        .collect();
    collect("table 2: maximal points of P_Gamma'", results)
}

pub fn check_tables_3_to_6(opts: &VerifyOptions, build: &Builder) -> Check {
    let results = space_cases(opts)
        .into_par_iter()
        .map(|(s, p)| (space_label(s, p), check_space_row(s, p, build)))
        .collect();
    collect("tables 3-6: orbit dimensions", results)
}

pub fn check_dimensions(opts: &VerifyOptions) -> Check {
    let results = space_cases(opts)
        .into_par_iter()
        .map(|(s, p)| {
            let outcome = match (catalog::dim_space(s, p), catalog::classical_dim(s, p)) {
                (Ok(a), Ok(b)) if a == b => Outcome::Match,
                (Ok(a), Ok(b)) => Outcome::Mismatch(format!("rank + sum m = {a}, dim M = {b}")),
                (Err(e), _) | (_, Err(e)) => Outcome::Mismatch(e.to_string()),
            };
            (space_label(s, p), outcome)
        })
        .collect();
    collect("dimension consistency", results)
}

/// All systems in the catalog families up to `cap`.
pub fn systems_up_to(cap: u32) -> Vec<RootSystemId> {
    let mut out = Vec::new();
    for f in Family::ALL {
        match f.fixed_rank() {
            Some(_) => out.push(RootSystemId::exceptional(f)),
            None => out
                .extend((f.min_rank()..=cap as usize).filter_map(|r| RootSystemId::new(f, r).ok())),
        }
    }
    out
}

pub fn check_deng_liu(opts: &VerifyOptions, build: &Builder) -> Check {
    let mut results: Vec<(String, Outcome)> = systems_up_to(opts.rank_cap)
        .into_par_iter()
        .flat_map_iter(|id| {
            let rs = build(id).expect("systems build");
            let cp = cartan_polyhedron(&rs);
            (1..=rs.rank())
                .filter(|&j| rs.d_j(j) == 1)
                .map(|j| {
                    let base = BasePoint {
                        form: BaseForm::SingleCorner(j),
                        scaled_vector: cp.corner(j).clone(),
                    };
                    let n = tangent_roots(&rs, &base).len();
                    let outcome = if n == 0 {
                        Outcome::Match
                    } else {
                        Outcome::Mismatch(format!("{n} tangent roots at e_{j} with d_j = 1"))
                    };
                    (format!("{id} / e_{j}"), outcome)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let converse: Vec<(String, Outcome)> = space_cases(opts)
        .into_par_iter()
        .flat_map_iter(|(s, p)| positive_orbit_bases(s, p, build))
        .collect();
    results.extend(converse);
    collect("Deng-Liu: d_j = 1 gives a point orbit", results)
}

fn positive_orbit_bases(
    s: &'static SpaceDescriptor,
    p: Params,
    build: &Builder,
) -> Vec<(String, Outcome)> {
    let Ok(id) = s.sigma(p) else {
        return Vec::new();
    };
    let gammas: Vec<Option<quotients::GammaSubgroup>> = if s.is_quotient() {
        let Ok(rs) = build(id) else { return Vec::new() };
        quotients::subgroups(&rs)
            .into_iter()
            .filter(|g| s.admits(g) && !g.is_marker())
            .map(Some)
            .collect()
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    for g in gammas {
        let Ok(rs) = build(id) else { continue };
        let Ok(rep) =
            antipodal::antipodal_report_in(s, p, rs, g.as_ref(), ReportOptions::default())
        else {
            continue;
        };
        for o in rep.orbits.iter().filter(|o| o.dimension > 0) {
            let ok = match o.base.form {
                BaseForm::SingleCorner(j) => rep.root_system.d_j(j) >= 2,
                _ => true,
            };
            let outcome = if ok {
                Outcome::Match
            } else {
                Outcome::Mismatch(format!("positive orbit at {} with d_j = 1", o.base.form))
            };
            out.push((space_label(s, p), outcome));
        }
    }
    out
}

pub fn check_unified(opts: &VerifyOptions, build: &Builder) -> Check {
    let results = systems_up_to(opts.rank_cap)
        .into_par_iter()
        .flat_map_iter(|id| {
            let rs = build(id).expect("systems build");
            let cp = cartan_polyhedron(&rs);
            let r = rs.rank();
            let mut bases: Vec<BasePoint> = (1..=r)
                .map(|j| BasePoint {
                    form: BaseForm::SingleCorner(j),
                    scaled_vector: cp.corner(j).clone(),
                })
                .collect();
            bases.extend((1..r).map(|j| BasePoint {
                form: BaseForm::HalfSum(j, j + 1),
                scaled_vector: cp.half_sum(j, j + 1),
            }));
            if id.family() == Family::A {
                bases.push(BasePoint {
                    form: BaseForm::FullSum,
                    scaled_vector: cp.full_sum(),
                });
            }
            bases
                .into_iter()
                .map(|b| {
                    let unified: BTreeSet<&Vector> = tangent_roots(&rs, &b)
                        .into_iter()
                        .map(|a| &a.vector)
                        .collect();
                    let outcome = match specialized_roots(&rs, b.form) {
                        Ok(Some(s)) => {
                            let s: BTreeSet<&Vector> = s.into_iter().map(|a| &a.vector).collect();
                            if s == unified {
                                Outcome::Match
                            } else {
                                Outcome::Mismatch(format!(
                                    "unified {} roots, specialized {}",
                                    unified.len(),
                                    s.len()
                                ))
                            }
                        }
                        Ok(None) => Outcome::Match,
                        Err(e) => Outcome::Mismatch(e.to_string()),
                    };
                    (format!("{id} / {}", b.form), outcome)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    collect("unified tangent formula", results)
}

pub fn check_subgroups(opts: &VerifyOptions, build: &Builder) -> Check {
    let results = systems_up_to(opts.rank_cap)
        .into_iter()
        .flat_map(|id| {
            let rs = build(id).expect("systems build");
            quotients::subgroups(&rs)
                .into_iter()
                .map(|g| {
                    let bad: Vec<usize> = g
                        .corner_indices
                        .iter()
                        .copied()
                        .filter(|&i| rs.d_j(i) != 1)
                        .collect();
                    let outcome = if bad.is_empty() {
                        Outcome::Match
                    } else {
                        Outcome::Mismatch(format!("corners {bad:?} have d_i != 1"))
                    };
                    (format!("{id} / {}", g.label), outcome)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    collect("subgroup corners have d_i = 1", results)
}

pub fn check_oracle_roots(opts: &VerifyOptions) -> Check {
    let results = systems_up_to(opts.rank_cap)
        .into_par_iter()
        .map(|id| {
            let rep = oracle::roots_report(id);
            let outcome = if rep.agreed {
                Outcome::Match
            } else {
                Outcome::Mismatch(format!(
                    "{} mismatches, first {:?}",
                    rep.mismatches.len(),
                    rep.mismatches[0]
                ))
            };
            (format!("oracle / {id}"), outcome)
        })
        .collect();
    collect("oracle: positive roots by reflection closure", results)
}

pub fn check_oracle_polytopes(cap: u32, density: u32) -> Check {
    let results = systems_up_to(cap)
        .into_par_iter()
        .flat_map_iter(|id| {
            let rs = rootsys::build(id).expect("systems build");
            quotients::subgroups(&rs)
                .into_iter()
                .filter(|g| !g.is_marker())
                .map(|g| {
                    let outcome = match p_gamma(&rs, &g) {
                        Ok(poly) => {
                            let rep = oracle::vertex_check_oracle(&poly, density);
                            if rep.agreed {
                                Outcome::Match
                            } else {
                                Outcome::Mismatch(format!("{:?}", rep.mismatches[0]))
                            }
                        }
                        Err(e) => Outcome::Mismatch(e.to_string()),
                    };
                    (format!("oracle / {id} / {}", g.label), outcome)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    collect("oracle: P_Gamma sampling and brute-force vertices", results)
}

/// Every check, with `--deep` adding the oracle runs.
pub fn run_with(opts: VerifyOptions, build: &Builder, ascii: bool) -> VerifyReport {
    let mut checks = vec![
        check_table1(&opts, build, ascii),
        check_table2(&opts, build, ascii),
        check_tables_3_to_6(&opts, build),
        check_dimensions(&opts),
        check_deng_liu(&opts, build),
        check_unified(&opts, build),
        check_subgroups(&opts, build),
    ];
    if opts.deep {
        checks.push(check_oracle_roots(&opts));
        checks.push(check_oracle_polytopes(8, 3));
    }
    VerifyReport { checks }
}

pub fn run(opts: VerifyOptions) -> VerifyReport {
    run_with(opts, standard_builder(), false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_is_reproduced() {
        let c = check_table1(&VerifyOptions::default(), standard_builder(), true);
        assert!(c.passed(), "{:?}", c.failures);
    }

    #[test]
    fn tampered_g2_is_named() {
        let build = |id: RootSystemId| {
            let mut rs = rootsys::build(id)?;
            if id.family() == Family::G2 {
                rs.tamper_highest_coefficients(vec![4, 2]);
            }
            Ok(rs)
        };
        let c = check_table1(&VerifyOptions::default(), &build, true);
        assert!(!c.passed());
        assert!(
            c.failures.iter().any(|f| f.starts_with("Table 1 / g_2")),
            "{:?}",
            c.failures
        );
    }

    #[test]
    fn table2_passes_with_errata() {
        let c = check_table2(&VerifyOptions::default(), standard_builder(), true);
        assert!(c.passed(), "{:?}", c.failures);
        assert!(c.notes.iter().any(|n| n.contains("d_8")), "{:?}", c.notes);
    }
}
