//! Antipodal sets as unions of `K`-orbits.
//!
//! Each base point `x̂ = x/π` of `max(Δ')` (simply connected) or `max(P_Γ')`
//! (quotient) contributes one orbit. Its tangent space at `exp(x)` is spanned by
//! the root spaces `𝔭(α)` with `α(x̂) ∉ ℤ`, so the orbit dimension is the sum of
//! the multiplicities of those roots.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{self, CatalogError, Params, SpaceDescriptor};
use crate::exact::{self, Rational};
use crate::polyhedron::{self, BaseForm, BasePoint, PolyhedronError};
use crate::quotients::{self, GammaKind, GammaSubgroup};
use crate::rootsys::{self, Root, RootSubsystem, RootSystem};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AntipodalError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Polyhedron(#[from] PolyhedronError),
    #[error(transparent)]
    RootSystem(#[from] rootsys::RootSystemError),
    #[error("{gamma} is not an admissible subgroup for {space}")]
    Inadmissible { space: String, gamma: String },
    #[error("{space} is a quotient row and needs a subgroup")]
    MissingGamma { space: String },
    #[error("{space} / {gamma}: maximal points are not tabulated for this subgroup")]
    Excluded { space: String, gamma: String },
    #[error("corner index {index} out of range for rank {rank}")]
    Index { index: usize, rank: usize },
    #[error("root system {got} does not match {space} at {params}")]
    WrongSystem {
        space: String,
        params: Params,
        got: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    PaperValidated,
    ExcludedUnknown,
    ComputedNotValidated,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::PaperValidated => "paper-validated",
            Status::ExcludedUnknown => "excluded-unknown",
            Status::ComputedNotValidated => "computed-not-validated",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodalOrbit {
    pub base: BasePoint,
    pub tangent_roots: Vec<Root>,
    /// Indices into the positive roots of `Σ_x`.
    pub sigma_x: BTreeSet<usize>,
    pub dimension: u64,
}

impl AntipodalOrbit {
    pub fn isotropy<'a>(&self, rs: &'a RootSystem) -> RootSubsystem<'a> {
        RootSubsystem::new(rs, self.sigma_x.iter().copied())
    }
}

#[derive(Debug, Clone)]
pub struct AntipodalReport {
    pub space: &'static SpaceDescriptor,
    pub params: Params,
    pub root_system: RootSystem,
    pub gamma: Option<GammaSubgroup>,
    pub orbits: Vec<AntipodalOrbit>,
    pub status: Status,
}

impl AntipodalReport {
    pub fn dimensions(&self) -> Vec<u64> {
        self.orbits.iter().map(|o| o.dimension).collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    /// Compute the excluded `a_r` subgroups instead of refusing.
    pub allow_unvalidated: bool,
}

fn root_value(rs: &RootSystem, root: &Root, x: &crate::exact::Vector) -> Rational {
    rs.inner(&root.vector, x)
}

/// Positive roots vanishing on the base point.
pub fn sigma_x<'a>(rs: &'a RootSystem, base: &BasePoint) -> RootSubsystem<'a> {
    let members = rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, a)| exact::signum(&root_value(rs, a, &base.scaled_vector)) == 0)
        .map(|(i, _)| i);
    RootSubsystem::new(rs, members)
}

fn check_index(rs: &RootSystem, j: usize, max: usize) -> Result<(), AntipodalError> {
    if j == 0 || j > max {
        Err(AntipodalError::Index {
            index: j,
            rank: rs.rank(),
        })
    } else {
        Ok(())
    }
}

/// `J_j' = {α ∈ Σ⁺ : c_j(α) / d_j ∉ ℕ}`.
pub fn j_single(rs: &RootSystem, j: usize) -> Result<Vec<&Root>, AntipodalError> {
    check_index(rs, j, rs.rank())?;
    let d = rs.d_j(j);
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|a| a.c(j) % d != 0)
        .collect())
}

/// `J_{j,j+1}' = {α ∈ Σ⁺ : c_j/d_j + c_{j+1}/d_{j+1} ∉ 2ℕ}`.
pub fn j_pair(rs: &RootSystem, j: usize) -> Result<Vec<&Root>, AntipodalError> {
    check_index(rs, j, rs.rank().saturating_sub(1))?;
    let (dj, dk) = (rs.d_j(j) as i64, rs.d_j(j + 1) as i64);
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|a| {
            let s = exact::frac(a.c(j) as i64, dj) + exact::frac(a.c(j + 1) as i64, dk);
            !(exact::is_integer(&s) && s.to_integer().is_even())
        })
        .collect())
}

/// Positive roots with `α(x̂) ∉ ℤ`.
pub fn tangent_roots<'a>(rs: &'a RootSystem, base: &BasePoint) -> Vec<&'a Root> {
    rs.positive_roots()
        .iter()
        .filter(|a| !exact::is_integer(&root_value(rs, a, &base.scaled_vector)))
        .collect()
}

/// `Σ m_α` over the tangent roots of `base`.
pub fn orbit_dimension(
    space: &SpaceDescriptor,
    params: Params,
    rs: &RootSystem,
    base: &BasePoint,
) -> Result<u64, AntipodalError> {
    let mut total = 0u64;
    for root in tangent_roots(rs, base) {
        total += space.class_multiplicity(root.length_class, params)? as u64;
    }
    Ok(total)
}

fn orbit(
    space: &SpaceDescriptor,
    params: Params,
    rs: &RootSystem,
    base: BasePoint,
) -> Result<AntipodalOrbit, AntipodalError> {
    let dimension = orbit_dimension(space, params, rs, &base)?;
    Ok(AntipodalOrbit {
        tangent_roots: tangent_roots(rs, &base).into_iter().cloned().collect(),
        sigma_x: sigma_x(rs, &base).members,
        dimension,
        base,
    })
}

/// Report for `space` at `params`, built on the standard realization of Σ.
pub fn antipodal_report(
    space: &'static SpaceDescriptor,
    params: Params,
    gamma: Option<&GammaSubgroup>,
    opts: ReportOptions,
) -> Result<AntipodalReport, AntipodalError> {
    let rs = rootsys::build(space.sigma(params)?)?;
    antipodal_report_in(space, params, rs, gamma, opts)
}

/// Report on a caller-supplied realization of Σ, e.g. a rescaled one.
pub fn antipodal_report_in(
    space: &'static SpaceDescriptor,
    params: Params,
    rs: RootSystem,
    gamma: Option<&GammaSubgroup>,
    opts: ReportOptions,
) -> Result<AntipodalReport, AntipodalError> {
    let expected = space.sigma(params)?;
    if rs.id() != expected {
        return Err(AntipodalError::WrongSystem {
            space: space.display_name(),
            params,
            got: rs.id().to_string(),
        });
    }
    let inadmissible = |g: &GammaSubgroup| AntipodalError::Inadmissible {
        space: space.display_name(),
        gamma: g.label.clone(),
    };
    let status = match gamma {
        None if space.is_quotient() => {
            return Err(AntipodalError::MissingGamma {
                space: space.display_name(),
            })
        }
        None => Status::PaperValidated,
        Some(g) if !space.admits(g) || !belongs(&rs, g) => return Err(inadmissible(g)),
        Some(g) if g.is_marker() => Status::ExcludedUnknown,
        Some(g) if !g.supported && !opts.allow_unvalidated => {
            return Err(AntipodalError::Excluded {
                space: space.display_name(),
                gamma: g.label.clone(),
            })
        }
        Some(g) if !g.supported => Status::ComputedNotValidated,
        Some(_) => Status::PaperValidated,
    };
    let bases = match (gamma, status) {
        (_, Status::ExcludedUnknown) => Vec::new(),
        (None, _) => polyhedron::cartan_polyhedron(&rs).maximal_base_points(),
        (Some(g), _) => polyhedron::max_prime(&polyhedron::p_gamma(&rs, g)?),
    };
    let orbits = bases
        .into_iter()
        .map(|b| orbit(space, params, &rs, b))
        .collect::<Result<_, _>>()?;
    Ok(AntipodalReport {
        space,
        params,
        root_system: rs,
        gamma: gamma.cloned(),
        orbits,
        status,
    })
}

fn belongs(rs: &RootSystem, g: &GammaSubgroup) -> bool {
    match g.kind {
        GammaKind::Cyclic(k) => quotients::cyclic_subgroup(rs, k).as_ref() == Some(g),
        _ => quotients::subgroups(rs).contains(g),
    }
}

/// The stable json shape of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub space: String,
    pub params: ParamsRecord,
    pub gamma: Option<String>,
    pub status: Status,
    pub orbits: Vec<OrbitRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub r: u32,
    pub q: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub base: BaseRecord,
    pub j_set_size: usize,
    pub dimension: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseRecord {
    pub form: String,
    pub corner_indices: Vec<usize>,
    pub coords: Vec<[i64; 2]>,
}

impl From<&AntipodalReport> for ReportRecord {
    fn from(r: &AntipodalReport) -> Self {
        let rank = r.root_system.rank();
        ReportRecord {
            space: r.space.display_name(),
            params: ParamsRecord {
                r: r.params.r,
                q: r.params.q,
            },
            gamma: r.gamma.as_ref().map(|g| g.label.clone()),
            status: r.status,
            orbits: r
                .orbits
                .iter()
                .map(|o| OrbitRecord {
                    base: BaseRecord {
                        form: o.base.form.name().to_string(),
                        corner_indices: o.base.form.corner_indices(rank),
                        coords: o
                            .base
                            .scaled_vector
                            .coords()
                            .iter()
                            .map(|c| {
                                let (n, d) = exact::to_pair(c).expect("coordinates fit in i64");
                                [n, d]
                            })
                            .collect(),
                    },
                    j_set_size: o.tangent_roots.len(),
                    dimension: o.dimension,
                })
                .collect(),
        }
    }
}

/// Specialized J-set for a tagged form, `None` for general vertices.
pub fn specialized_roots<'a>(
    rs: &'a RootSystem,
    form: BaseForm,
) -> Result<Option<Vec<&'a Root>>, AntipodalError> {
    Ok(match form {
        BaseForm::SingleCorner(j) => Some(j_single(rs, j)?),
        BaseForm::HalfSum(j, _) => Some(j_pair(rs, j)?),
        BaseForm::FullSum => Some(rs.positive_roots().iter().collect()),
        BaseForm::GeneralVertex => None,
    })
}

/// Looks up a report by name, rank of Σ, `q` and subgroup label.
pub fn resolve(
    name: &str,
    rank: Option<usize>,
    q: Option<u32>,
    gamma: Option<&str>,
) -> Result<(&'static SpaceDescriptor, Params, Option<GammaSubgroup>), ResolveError> {
    let candidates = catalog::find_by_name(name);
    if candidates.is_empty() {
        return Err(ResolveError::UnknownSpace(name.to_string()));
    }
    let mut in_range = Vec::new();
    for s in candidates {
        let r = match rank {
            Some(n) if s.family.fixed_rank().is_some() => {
                (s.family.fixed_rank() == Some(n)).then(|| s.range.min)
            }
            Some(n) => s.rank_form.row_var(n),
            None => s.range.is_single(),
        };
        let Some(r) = r else { continue };
        let params = Params { r, q };
        if s.check_params(params).is_ok() {
            in_range.push((s, params));
        }
    }
    if in_range.is_empty() {
        return Err(ResolveError::BadParams(name.to_string()));
    }
    let mut hits = Vec::new();
    for (s, p) in &in_range {
        let rs = rootsys::build(s.sigma(*p).expect("checked")).expect("catalog systems build");
        match gamma {
            None if !s.is_quotient() => hits.push((*s, *p, None)),
            None => {}
            Some(label) => {
                if let Some(g) = quotients::resolve(&rs, label) {
                    if s.admits(&g) {
                        hits.push((*s, *p, Some(g)));
                    }
                }
            }
        }
    }
    match hits.len() {
        0 => Err(ResolveError::Inadmissible {
            space: name.to_string(),
            gamma: gamma.unwrap_or("none").to_string(),
        }),
        1 => Ok(hits.pop().expect("one hit")),
        _ => Err(ResolveError::Ambiguous(
            hits.iter()
                .map(|(s, _, _)| s.name_with_condition())
                .collect(),
        )),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("unknown space `{0}`")]
    UnknownSpace(String),
    #[error("no row of `{0}` accepts these parameters")]
    BadParams(String),
    #[error("subgroup `{gamma}` is not admissible for `{space}`")]
    Inadmissible { space: String, gamma: String },
    #[error("ambiguous: {}", .0.join(" | "))]
    Ambiguous(Vec<String>),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Vector;
    use crate::polyhedron::cartan_polyhedron;
    use crate::rootsys::build;

    fn sys(s: &str) -> RootSystem {
        build(s.parse().unwrap()).unwrap()
    }

    fn vecs(roots: &[&Root]) -> BTreeSet<Vector> {
        roots.iter().map(|r| r.vector.clone()).collect()
    }

    fn corner(rs: &RootSystem, j: usize) -> BasePoint {
        BasePoint {
            form: BaseForm::SingleCorner(j),
            scaled_vector: cartan_polyhedron(rs).corner(j).clone(),
        }
    }

    #[test]
    fn bc_top_corner() {
        let bc3 = sys("bc_3");
        let j = j_single(&bc3, 3).unwrap();
        let expect: BTreeSet<Vector> = (0..3).map(|i| Vector::unit(3, i)).collect();
        assert_eq!(vecs(&j), expect);
        let bc2 = sys("bc_2");
        let iso = sigma_x(&bc2, &corner(&bc2, 2));
        assert_eq!(
            iso.roots().map(|r| r.vector.clone()).collect::<Vec<_>>(),
            [Vector::from_ints(&[1, -1])]
        );
    }

    #[test]
    fn unit_coefficient_gives_empty_set() {
        let rs = sys("d_6");
        assert!(j_single(&rs, 6).unwrap().is_empty());
        assert!(tangent_roots(&rs, &corner(&rs, 6)).is_empty());
    }

    #[test]
    fn e6_middle_node() {
        assert_eq!(j_single(&sys("e6"), 4).unwrap().len(), 27);
    }

    #[test]
    fn pair_sets() {
        let c3 = sys("c_3");
        let pair = j_pair(&c3, 1).unwrap();
        assert_eq!(pair.len(), 7);
        let cp = cartan_polyhedron(&c3);
        let base = BasePoint {
            form: BaseForm::HalfSum(1, 2),
            scaled_vector: cp.half_sum(1, 2),
        };
        assert_eq!(vecs(&tangent_roots(&c3, &base)), vecs(&pair));
        assert_eq!(j_pair(&sys("a_5"), 1).unwrap().len(), 5);
        let d5_sys = sys("d_5");
        let d5 = j_pair(&d5_sys, 2).unwrap();
        let expect = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .filter(|&(i, j)| i <= 2 && j >= 2)
            .flat_map(|(i, j)| {
                let (a, b) = (Vector::unit(5, i), Vector::unit(5, j));
                [&a + &b, &a - &b]
            })
            .collect::<BTreeSet<_>>();
        assert_eq!(vecs(&d5), expect);
    }

    #[test]
    fn full_sum_on_a2() {
        let a2 = sys("a_2");
        let base = BasePoint {
            form: BaseForm::FullSum,
            scaled_vector: cartan_polyhedron(&a2).full_sum(),
        };
        assert_eq!(tangent_roots(&a2, &base).len(), 3);
        assert!(sigma_x(&a2, &base).is_empty());
    }

    #[test]
    fn index_errors() {
        let rs = sys("b_3");
        assert!(j_single(&rs, 0).is_err());
        assert!(j_single(&rs, 4).is_err());
        assert!(j_pair(&rs, 3).is_err());
    }

    fn report(
        name: &str,
        rank: Option<usize>,
        q: Option<u32>,
        gamma: Option<&str>,
    ) -> AntipodalReport {
        let (s, p, g) = resolve(name, rank, q, gamma).unwrap();
        antipodal_report(s, p, g.as_ref(), ReportOptions::default()).unwrap()
    }

    #[test]
    fn named_reports() {
        assert_eq!(report("E VIII", None, None, None).dimensions(), [64]);
        assert_eq!(report("E_8", None, None, None).dimensions(), [128]);
        assert_eq!(report("Spin(9)", None, None, None).dimensions(), [0, 8]);
        assert_eq!(report("Spin(2r+1)", Some(5), None, None).dimensions(), [10]);
        assert_eq!(report("BD I", Some(5), Some(3), None).dimensions(), [15]);
        assert_eq!(
            report("C II", Some(3), None, Some("Z_2")).dimensions(),
            [27]
        );
    }

    #[test]
    fn excluded_subgroup() {
        let (s, p, g) = resolve("A I", Some(7), None, Some("Z_4")).unwrap();
        let g = g.unwrap();
        assert!(matches!(
            antipodal_report(s, p, Some(&g), ReportOptions::default()),
            Err(AntipodalError::Excluded { .. })
        ));
        let forced = antipodal_report(
            s,
            p,
            Some(&g),
            ReportOptions {
                allow_unvalidated: true,
            },
        )
        .unwrap();
        assert_eq!(forced.status, Status::ComputedNotValidated);
        assert!(!forced.orbits.is_empty());
        let marker = report("A I", Some(7), None, Some("otherwise"));
        assert_eq!(marker.status, Status::ExcludedUnknown);
        assert!(marker.orbits.is_empty());
    }

    #[test]
    fn inadmissible_subgroup() {
        let s = catalog::find_by_name("E VIII")[0];
        let rs = sys("d_4");
        let g = quotients::subgroups(&rs).remove(0);
        assert!(matches!(
            antipodal_report(s, Params::r(8), Some(&g), ReportOptions::default()),
            Err(AntipodalError::Inadmissible { .. })
        ));
        assert!(resolve("E VIII", None, None, Some("Z_2")).is_err());
    }

    #[test]
    fn record_round_trip() {
        let rep = report("Spin(9)", None, None, None);
        let rec = ReportRecord::from(&rep);
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains("\"status\":\"paper-validated\""));
        assert_eq!(serde_json::from_str::<ReportRecord>(&json).unwrap(), rec);
    }
}
