//! Registry of irreducible compact symmetric spaces, one descriptor per row
//! of the four dimension tables, plus the two corner tables.
//!
//! Every symbolic entry is a formula string in the row variable `r` (and `q`
//! where the row has one). Rows whose Σ has a rank other than `r`, such as
//! `SU(2r)/SO(2r)` with Σ = `a_{2r-1}`, carry a [`RankForm`] mapping.

mod corners;
mod spaces;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::Vector;
use crate::formula::{self, Env, FormulaError};
use crate::polyhedron::CartanPolyhedron;
use crate::quotients::{GammaKind, GammaSubgroup};
use crate::rootsys::{Family, LengthClass, Root, RootSystem, RootSystemError, RootSystemId};

pub use corners::{corner_table, quotient_corner_table, CornerRow, QuotientCornerRow};
pub use spaces::spaces;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("{space}: parameters {params} are out of range")]
    Range { space: String, params: Params },
    #[error("root {0} is not in the system")]
    Membership(Vector),
    #[error("{space}: multiplicity `{expr}` is not a positive integer at {params}")]
    Multiplicity {
        space: String,
        expr: String,
        params: Params,
    },
    #[error("{space}: no multiplicity for the {class} class")]
    MissingClass { space: String, class: LengthClass },
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// Row variable `r` and, for the Grassmannian rows, `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    pub r: u32,
    pub q: Option<u32>,
}

impl Params {
    pub fn r(r: u32) -> Self {
        Params { r, q: None }
    }

    pub fn rq(r: u32, q: u32) -> Self {
        Params { r, q: Some(q) }
    }

    pub fn env(&self) -> Env {
        Env {
            r: Some(self.r as i64),
            q: self.q.map(i64::from),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            Some(q) => write!(f, "r={}, q={q}", self.r),
            None => write!(f, "r={}", self.r),
        }
    }
}

/// Admissible values of the row variable.
#[derive(Debug, Clone, Copy)]
pub struct RowRange {
    pub min: u32,
    pub max: Option<u32>,
    /// `(m, k)`: only `r ≡ k (mod m)`.
    pub residue: Option<(u32, u32)>,
    pub filter: Option<fn(u32) -> bool>,
}

impl RowRange {
    pub const fn from(min: u32) -> Self {
        RowRange {
            min,
            max: None,
            residue: None,
            filter: None,
        }
    }

    pub const fn only(n: u32) -> Self {
        RowRange {
            min: n,
            max: Some(n),
            residue: None,
            filter: None,
        }
    }

    pub const fn between(min: u32, max: u32) -> Self {
        RowRange {
            min,
            max: Some(max),
            residue: None,
            filter: None,
        }
    }

    pub const fn even(self) -> Self {
        self.residue(2, 0)
    }

    pub const fn odd(self) -> Self {
        self.residue(2, 1)
    }

    pub const fn residue(mut self, m: u32, k: u32) -> Self {
        self.residue = Some((m, k));
        self
    }

    pub const fn filtered(mut self, f: fn(u32) -> bool) -> Self {
        self.filter = Some(f);
        self
    }

    pub fn contains(&self, r: u32) -> bool {
        r >= self.min
            && self.max.is_none_or(|m| r <= m)
            && self.residue.is_none_or(|(m, k)| r % m == k)
            && self.filter.is_none_or(|f| f(r))
    }

    /// Admissible values up to `cap` inclusive.
    pub fn values(&self, cap: u32) -> impl Iterator<Item = u32> + '_ {
        (self.min..=cap.min(self.max.unwrap_or(cap))).filter(|&r| self.contains(r))
    }

    pub fn is_single(&self) -> Option<u32> {
        (self.max == Some(self.min)).then_some(self.min)
    }
}

impl fmt::Display for RowRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max {
            Some(max) if max == self.min => write!(f, "r={max}")?,
            Some(max) => write!(f, "{}<=r<={max}", self.min)?,
            None => write!(f, "r>={}", self.min)?,
        }
        match self.residue {
            Some((2, 0)) => f.write_str(", r even")?,
            Some((2, 1)) => f.write_str(", r odd")?,
            Some((m, k)) => write!(f, ", r={k} mod {m}")?,
            None => {}
        }
        if self.filter.is_some() {
            f.write_str(", where admissible")?;
        }
        Ok(())
    }
}

/// Rank of Σ as a function of the row variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankForm {
    Same,
    /// `rank = a·r + b`.
    Affine(u32, i32),
}

impl RankForm {
    pub fn rank(&self, r: u32) -> Option<usize> {
        match *self {
            RankForm::Same => Some(r as usize),
            RankForm::Affine(a, b) => usize::try_from(a as i64 * r as i64 + b as i64).ok(),
        }
    }

    /// The row variable giving `rank`, if any.
    pub fn row_var(&self, rank: usize) -> Option<u32> {
        match *self {
            RankForm::Same => u32::try_from(rank).ok(),
            RankForm::Affine(a, b) => {
                let t = rank as i64 - b as i64;
                (t >= 0 && t % a as i64 == 0).then(|| (t / a as i64) as u32)
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Multiplicities {
    Uniform(&'static str),
    ByClass(&'static [(LengthClass, &'static str)]),
}

/// A corner-table entry with indices given as formulas in `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    /// `e_j`.
    E(&'static str),
    /// `½(e_j + e_{j+1})`.
    Half(&'static str, &'static str),
    /// `½(e_j + e_k)` for non-adjacent `j, k`.
    Pair(&'static str, &'static str),
    /// `(e_1 + … + e_r) / (r + 1)`.
    Full,
}

/// A [`Corner`] evaluated at a concrete rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CornerAt {
    E(usize),
    Half(usize, usize),
    Pair(usize, usize),
    Full,
}

impl Corner {
    pub fn at(&self, r: u32) -> Result<CornerAt, FormulaError> {
        let idx = |s: &str| -> Result<usize, FormulaError> {
            let v = formula::eval_natural(s, Env::r(r as i64))?;
            v.map(|n| n as usize).ok_or(FormulaError::Parse {
                src: s.to_string(),
                at: 0,
            })
        };
        Ok(match *self {
            Corner::E(j) => CornerAt::E(idx(j)?),
            Corner::Half(j, k) => CornerAt::Half(idx(j)?, idx(k)?),
            Corner::Pair(j, k) => CornerAt::Pair(idx(j)?, idx(k)?),
            Corner::Full => CornerAt::Full,
        })
    }

    pub fn symbolic(&self) -> String {
        match self {
            Corner::E(j) => format!("e_{}", sub(j)),
            Corner::Half(j, k) | Corner::Pair(j, k) => format!("1/2(e_{}+e_{})", sub(j), sub(k)),
            Corner::Full => "1/(r+1)(e_1+...+e_r)".into(),
        }
    }
}

fn sub(s: &str) -> String {
    if s.len() == 1 {
        s.to_string()
    } else {
        format!("{{{s}}}")
    }
}

impl CornerAt {
    pub fn vector(&self, cp: &CartanPolyhedron<'_>) -> Option<Vector> {
        let r = cp.corners().len();
        let ok = |j: usize| (1..=r).contains(&j);
        match *self {
            CornerAt::E(j) if ok(j) => Some(cp.corner(j).clone()),
            CornerAt::Half(j, k) | CornerAt::Pair(j, k) if ok(j) && ok(k) => {
                Some(cp.half_sum(j, k))
            }
            CornerAt::Full => Some(cp.full_sum()),
            _ => None,
        }
    }
}

impl fmt::Display for CornerAt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CornerAt::E(j) => write!(f, "e_{}", sub(&j.to_string())),
            CornerAt::Half(j, k) | CornerAt::Pair(j, k) => {
                write!(
                    f,
                    "1/2(e_{}+e_{})",
                    sub(&j.to_string()),
                    sub(&k.to_string())
                )
            }
            CornerAt::Full => f.write_str("1/(r+1)(e_1+...+e_r)"),
        }
    }
}

/// A dimension entry as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dims {
    Known(&'static [&'static str]),
    Unknown,
}

/// A printed entry that the engine shows to be incomplete, with the complete
/// value on the sub-range where it differs.
#[derive(Debug, Clone, Copy)]
pub struct Erratum {
    pub range: RowRange,
    pub corners: &'static [Corner],
    pub dims: &'static [&'static str],
    pub note: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpaceType {
    I,
    II,
}

#[derive(Debug, Clone)]
pub struct SpaceDescriptor {
    /// Number of the table the row belongs to, 3 to 6.
    pub table: u8,
    /// `A I` … `G`, or the group family such as `Spin(2r+1)` for type II.
    pub cartan_label: &'static str,
    /// The space or group without its range condition.
    pub name: &'static str,
    /// Range condition as printed next to the name, possibly empty.
    pub condition: &'static str,
    pub family: Family,
    pub rank_form: RankForm,
    /// Σ as printed, e.g. `a_{2r-1}`.
    pub sigma_label: &'static str,
    pub range: RowRange,
    pub uses_q: bool,
    pub multiplicities: Multiplicities,
    /// Classical dimension formula.
    pub dim_m: &'static str,
    pub gammas: &'static [GammaKind],
    /// Γ column as printed; empty for simply connected rows.
    pub gamma_label: &'static str,
    /// `max(Δ')` column; empty for the quotient tables.
    pub corners: &'static [Corner],
    pub dims: Dims,
    pub errata: &'static [Erratum],
}

impl SpaceDescriptor {
    pub fn space_type(&self) -> SpaceType {
        if self.table <= 4 {
            SpaceType::I
        } else {
            SpaceType::II
        }
    }

    pub fn is_quotient(&self) -> bool {
        !self.gammas.is_empty()
    }

    /// Display name with its type label, e.g. `A I: SU(2r)/SO(2r)`.
    pub fn display_name(&self) -> String {
        if self.cartan_label == self.name {
            self.name.to_string()
        } else {
            format!("{}: {}", self.cartan_label, self.name)
        }
    }

    /// Name followed by the printed range condition.
    pub fn name_with_condition(&self) -> String {
        if self.condition.is_empty() {
            self.name.to_string()
        } else {
            format!("{}, {}", self.name, self.condition)
        }
    }

    pub fn rank_expr(&self) -> String {
        match self.rank_form {
            RankForm::Same => match self.range.is_single() {
                Some(n) => n.to_string(),
                None => "r".into(),
            },
            RankForm::Affine(a, b) => match b.signum() {
                0 => format!("{a}r"),
                1 => format!("{a}r+{b}"),
                _ => format!("{a}r{b}"),
            },
        }
    }

    pub fn check_params(&self, p: Params) -> Result<(), CatalogError> {
        let q_ok = match (self.uses_q, p.q) {
            (true, Some(q)) => q >= 1,
            (true, None) => false,
            (false, q) => q.is_none(),
        };
        if q_ok && self.range.contains(p.r) && self.rank_form.rank(p.r).is_some() {
            Ok(())
        } else {
            Err(CatalogError::Range {
                space: self.display_name(),
                params: p,
            })
        }
    }

    /// Restricted root system at `p`.
    pub fn sigma(&self, p: Params) -> Result<RootSystemId, CatalogError> {
        self.check_params(p)?;
        let rank = match self.family.fixed_rank() {
            Some(n) => n,
            None => self.rank_form.rank(p.r).expect("checked"),
        };
        Ok(RootSystemId::new(self.family, rank)?)
    }

    /// Multiplicity of the given length class at `p`.
    pub fn class_multiplicity(&self, class: LengthClass, p: Params) -> Result<u32, CatalogError> {
        let expr = match self.multiplicities {
            Multiplicities::Uniform(e) => e,
            Multiplicities::ByClass(list) => list
                .iter()
                .find(|(c, _)| *c == class)
                .map(|(_, e)| *e)
                .ok_or_else(|| CatalogError::MissingClass {
                    space: self.display_name(),
                    class,
                })?,
        };
        match formula::eval_natural(expr, p.env())? {
            Some(m) if m > 0 => Ok(m as u32),
            _ => Err(CatalogError::Multiplicity {
                space: self.display_name(),
                expr: expr.to_string(),
                params: p,
            }),
        }
    }

    /// Printed dimension entries at `p`, or `None` for "unknown".
    pub fn printed_dims(&self, p: Params) -> Result<Option<Vec<u64>>, CatalogError> {
        match self.dims {
            Dims::Unknown => Ok(None),
            Dims::Known(list) => eval_dims(list, p).map(Some),
        }
    }

    /// The erratum in force at `r`, if any.
    pub fn erratum(&self, r: u32) -> Option<&Erratum> {
        self.errata.iter().find(|e| e.range.contains(r))
    }

    /// Whether `g` may be used with this row.
    pub fn admits(&self, g: &GammaSubgroup) -> bool {
        self.gammas.contains(&g.kind)
            || (matches!(g.kind, GammaKind::Cyclic(_))
                && self.gammas.contains(&GammaKind::Otherwise))
    }

    /// Matches a user-supplied name against the label or the bare name.
    pub fn matches_name(&self, query: &str) -> bool {
        let q = normalize(query);
        q == normalize(self.cartan_label)
            || q == normalize(self.name)
            || q == normalize(&self.display_name())
    }
}

pub(crate) fn eval_dims(list: &[&str], p: Params) -> Result<Vec<u64>, CatalogError> {
    list.iter()
        .map(|e| {
            formula::eval_natural(e, p.env())?.ok_or_else(|| CatalogError::Multiplicity {
                space: String::new(),
                expr: e.to_string(),
                params: p,
            })
        })
        .collect()
}

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '_' && *c != '{' && *c != '}')
        .collect::<String>()
        .to_ascii_lowercase()
}

/// `m_α` for `root` in the space's restricted root system `rs`.
pub fn multiplicity(
    space: &SpaceDescriptor,
    params: Params,
    rs: &RootSystem,
    root: &Root,
) -> Result<u32, CatalogError> {
    if rs.id() != space.sigma(params)? || rs.root_index(&root.vector).is_none() {
        return Err(CatalogError::Membership(root.vector.clone()));
    }
    space.class_multiplicity(root.length_class, params)
}

/// `rank + Σ m_α`, cross-checked by callers against [`classical_dim`].
pub fn dim_space(space: &SpaceDescriptor, params: Params) -> Result<u64, CatalogError> {
    let rs = crate::rootsys::build(space.sigma(params)?)?;
    let mut total = rs.rank() as u64;
    for root in rs.positive_roots() {
        total += space.class_multiplicity(root.length_class, params)? as u64;
    }
    Ok(total)
}

/// The stored classical dimension formula evaluated at `params`.
pub fn classical_dim(space: &SpaceDescriptor, params: Params) -> Result<u64, CatalogError> {
    space.check_params(params)?;
    formula::eval_natural(space.dim_m, params.env())?.ok_or_else(|| CatalogError::Multiplicity {
        space: space.display_name(),
        expr: space.dim_m.to_string(),
        params,
    })
}

/// Every descriptor matching `name`.
pub fn find_by_name(name: &str) -> Vec<&'static SpaceDescriptor> {
    spaces().iter().filter(|s| s.matches_name(name)).collect()
}

/// Grid of parameters for a row: `r` up to `r_cap`, `q` from 1 to `q_cap`.
pub fn param_grid(space: &SpaceDescriptor, r_cap: u32, q_cap: u32) -> Vec<Params> {
    let mut out = Vec::new();
    for r in space.range.values(r_cap) {
        if space.uses_q {
            out.extend((1..=q_cap).map(|q| Params::rq(r, q)));
        } else {
            out.push(Params::r(r));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build;

    fn row(table: u8, label: &str, name: &str) -> &'static SpaceDescriptor {
        spaces()
            .iter()
            .find(|s| s.table == table && s.cartan_label == label && s.name == name)
            .unwrap_or_else(|| panic!("{table} {label} {name}"))
    }

    #[test]
    fn row_counts_per_table() {
        let count = |t| spaces().iter().filter(|s| s.table == t).count();
        assert_eq!(count(3), 29);
        assert_eq!(count(4), 27);
        assert_eq!(count(5), 13);
        assert_eq!(count(6), 14);
    }

    #[test]
    fn f_ii_multiplicity() {
        let s = row(3, "F II", "(f4, so(9))");
        let p = Params::r(1);
        assert_eq!(s.sigma(p).unwrap().to_string(), "bc_1");
        assert_eq!(s.class_multiplicity(LengthClass::Short, p).unwrap(), 8);
        assert_eq!(dim_space(s, p).unwrap(), 16);
    }

    #[test]
    fn quaternionic_grassmannian_multiplicity() {
        let s = row(3, "C II", "Gr_{r,r+q}(H)");
        assert_eq!(
            s.class_multiplicity(LengthClass::Short, Params::rq(3, 2))
                .unwrap(),
            8
        );
    }

    #[test]
    fn e_iii_roots() {
        let s = row(3, "E III", "(e6, so(10)+R)");
        let p = Params::r(2);
        let rs = build(s.sigma(p).unwrap()).unwrap();
        let find = |v: &[i64]| {
            let v = Vector::from_ints(v);
            rs.positive_roots()
                .iter()
                .find(|r| r.vector == v)
                .unwrap()
                .clone()
        };
        assert_eq!(multiplicity(s, p, &rs, &find(&[1, 0])).unwrap(), 8);
        assert_eq!(multiplicity(s, p, &rs, &find(&[2, 0])).unwrap(), 1);
        let stranger = Root {
            vector: Vector::from_ints(&[3, 0]),
            ..find(&[1, 0])
        };
        assert!(matches!(
            multiplicity(s, p, &rs, &stranger),
            Err(CatalogError::Membership(_))
        ));
    }

    #[test]
    fn group_rows_have_multiplicity_two() {
        let g2 = row(5, "G_2", "G_2");
        for class in [LengthClass::Short, LengthClass::Long] {
            assert_eq!(g2.class_multiplicity(class, Params::r(2)).unwrap(), 2);
        }
        let su = row(5, "SU(2r+1)", "SU(2r+1)");
        assert_eq!(dim_space(su, Params::r(2)).unwrap(), 24);
    }

    #[test]
    fn range_errors() {
        let s = row(3, "BD I", "Gr_{r,r+q}");
        assert!(s.check_params(Params::r(5)).is_err());
        assert!(dim_space(s, Params::rq(1, 1)).is_err());
    }

    #[test]
    fn rank_forms() {
        assert_eq!(RankForm::Affine(2, -1).rank(3), Some(5));
        assert_eq!(RankForm::Affine(2, -1).row_var(5), Some(3));
        assert_eq!(RankForm::Affine(2, 1).row_var(4), None);
    }
}
