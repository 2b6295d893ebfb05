//! Centers `Z_M̃(K̃)` and their subgroups, encoded by corner indices.
//!
//! The nontrivial central elements are `p_i = exp(π e_i)` for the corners with
//! `d_i = 1`. A subgroup `Γ` is stored as the set of `i` with `p_i ∈ Γ`, which
//! is all the quotient polytope needs.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rootsys::{Family, RootSystem, RootSystemId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GammaKind {
    /// The order-two subgroup.
    Z2,
    /// All of `Z_{r+1}` for `a_r`.
    FullCyclic,
    /// `Z_k` inside `Z_{r+1}` with `2 < k < r+1`.
    Cyclic(usize),
    /// Placeholder for the cyclic subgroups of `a_r` not covered above.
    Otherwise,
    /// Full center of `d_r`, `r` even.
    KleinFour,
    /// Full center of `d_r`, `r` odd.
    Z4,
    /// `{e, p_1}` in the center of `d_r`.
    VectorPair,
    /// `{e, p_{r-1}}` in the center of `d_r`, `r` even.
    HalfSpinMinus,
    /// `{e, p_r}` in the center of `d_r`, `r` even.
    HalfSpinPlus,
    Z3,
}

impl GammaKind {
    /// Label in terms of the rank variable `r`.
    pub fn symbolic(&self) -> String {
        match self {
            GammaKind::Z2 => "Z_2".into(),
            GammaKind::FullCyclic => "Z_{r+1}".into(),
            GammaKind::Cyclic(k) => format!("Z_{k}"),
            GammaKind::Otherwise => "otherwise".into(),
            GammaKind::KleinFour => "Z_2+Z_2".into(),
            GammaKind::Z4 => "Z_4".into(),
            GammaKind::VectorPair => "{e,p_1}".into(),
            GammaKind::HalfSpinMinus => "{e,p_{r-1}}".into(),
            GammaKind::HalfSpinPlus => "{e,p_r}".into(),
            GammaKind::Z3 => "Z_3".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSubgroup {
    /// Concrete display label, e.g. `Z_8` or `{e,p_5}`.
    pub label: String,
    pub kind: GammaKind,
    /// Indices `i` with `p_i ∈ Γ`, identity excluded.
    pub corner_indices: BTreeSet<usize>,
    /// False for the cyclic subgroups of `a_r` whose maxima are not tabulated.
    pub supported: bool,
}

impl GammaSubgroup {
    fn new(
        label: impl Into<String>,
        kind: GammaKind,
        corners: impl IntoIterator<Item = usize>,
    ) -> Self {
        GammaSubgroup {
            label: label.into(),
            kind,
            corner_indices: corners.into_iter().collect(),
            supported: !matches!(kind, GammaKind::Cyclic(_) | GammaKind::Otherwise),
        }
    }

    /// Whether `name` refers to this subgroup, by concrete or symbolic label.
    pub fn matches(&self, name: &str) -> bool {
        let norm = |s: &str| {
            s.chars()
                .filter(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | '_' | '(' | ')'))
                .collect::<String>()
                .replace('⊕', "+")
                .to_ascii_lowercase()
        };
        let n = norm(name);
        n == norm(&self.label) || n == norm(&self.kind.symbolic())
    }

    pub fn is_marker(&self) -> bool {
        self.kind == GammaKind::Otherwise
    }
}

impl fmt::Display for GammaSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterDescription {
    pub rs_id: RootSystemId,
    pub order_one_corners: BTreeSet<usize>,
    pub group_iso: String,
}

pub fn center(rs: &RootSystem) -> CenterDescription {
    let r = rs.rank();
    let order_one_corners = (1..=r).filter(|&i| rs.d_j(i) == 1).collect();
    let group_iso = match rs.id().family() {
        Family::A => format!("Z_{}", r + 1),
        Family::B | Family::C | Family::E7 => "Z_2".into(),
        Family::D if r % 2 == 0 => "Z_2+Z_2".into(),
        Family::D => "Z_4".into(),
        Family::E6 => "Z_3".into(),
        Family::BC | Family::E8 | Family::F4 | Family::G2 => "1".into(),
    };
    CenterDescription {
        rs_id: rs.id(),
        order_one_corners,
        group_iso,
    }
}

/// The cyclic subgroup `Z_k` of the center of `a_r`, if `k` divides `r + 1`.
pub fn cyclic_subgroup(rs: &RootSystem, k: usize) -> Option<GammaSubgroup> {
    let n = rs.rank() + 1;
    if rs.id().family() != Family::A || k < 2 || n % k != 0 {
        return None;
    }
    let step = n / k;
    let corners = (1..n).filter(|j| j % step == 0);
    let kind = if k == n {
        GammaKind::FullCyclic
    } else if k == 2 {
        GammaKind::Z2
    } else {
        GammaKind::Cyclic(k)
    };
    Some(GammaSubgroup::new(format!("Z_{k}"), kind, corners))
}

fn has_other_cyclic(n: usize) -> bool {
    (3..n).any(|k| n % k == 0)
}

/// The nontrivial subgroups of the center that the catalog distinguishes.
pub fn subgroups(rs: &RootSystem) -> Vec<GammaSubgroup> {
    let r = rs.rank();
    match rs.id().family() {
        Family::A => {
            let mut out = Vec::new();
            if r % 2 == 1 && r > 1 {
                out.extend(cyclic_subgroup(rs, 2));
            }
            out.extend(cyclic_subgroup(rs, r + 1));
            if has_other_cyclic(r + 1) {
                out.push(GammaSubgroup::new("otherwise", GammaKind::Otherwise, []));
            }
            out
        }
        Family::B => vec![GammaSubgroup::new("Z_2", GammaKind::Z2, [1])],
        Family::C => vec![GammaSubgroup::new("Z_2", GammaKind::Z2, [r])],
        Family::D if r % 2 == 0 => vec![
            GammaSubgroup::new("Z_2+Z_2", GammaKind::KleinFour, [1, r - 1, r]),
            GammaSubgroup::new("{e,p_1}", GammaKind::VectorPair, [1]),
            GammaSubgroup::new(
                format!("{{e,p_{}}}", r - 1),
                GammaKind::HalfSpinMinus,
                [r - 1],
            ),
            GammaSubgroup::new(format!("{{e,p_{r}}}"), GammaKind::HalfSpinPlus, [r]),
        ],
        Family::D => vec![
            GammaSubgroup::new("Z_4", GammaKind::Z4, [1, r - 1, r]),
            GammaSubgroup::new("{e,p_1}", GammaKind::VectorPair, [1]),
        ],
        Family::E6 => vec![GammaSubgroup::new("Z_3", GammaKind::Z3, [1, 6])],
        Family::E7 => vec![GammaSubgroup::new("Z_2", GammaKind::Z2, [7])],
        Family::BC | Family::E8 | Family::F4 | Family::G2 => Vec::new(),
    }
}

/// Resolves a subgroup by label, including the explicit cyclic subgroups of
/// `a_r` hidden behind the `otherwise` marker.
pub fn resolve(rs: &RootSystem, label: &str) -> Option<GammaSubgroup> {
    if let Some(g) = subgroups(rs).into_iter().find(|g| g.matches(label)) {
        return Some(g);
    }
    let t: String = label.chars().filter(|c| c.is_ascii_digit()).collect();
    let starts_z = label.trim_start().starts_with(['Z', 'z']);
    match t.parse::<usize>() {
        Ok(k) if starts_z => cyclic_subgroup(rs, k),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build;

    fn sys(s: &str) -> RootSystem {
        build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn trivial_centers() {
        for s in ["bc_3", "e8", "f4", "g2"] {
            assert!(center(&sys(s)).order_one_corners.is_empty(), "{s}");
            assert!(subgroups(&sys(s)).is_empty());
        }
    }

    #[test]
    fn center_corner_sets() {
        assert_eq!(center(&sys("a_4")).order_one_corners, (1..=4).collect());
        assert_eq!(center(&sys("e7")).order_one_corners, [7].into());
    }

    #[test]
    fn subgroup_examples() {
        let b5 = subgroups(&sys("b_5"));
        assert_eq!(b5.len(), 1);
        assert_eq!(b5[0].corner_indices, [1].into());
        assert_eq!(subgroups(&sys("d_6")).len(), 4);
        let a4 = sys("a_4");
        let z5 = resolve(&a4, "Z_5").unwrap();
        assert_eq!(z5.corner_indices, (1..=4).collect());
    }

    #[test]
    fn corners_have_unit_coefficient() {
        for s in ["a_7", "b_4", "c_5", "d_4", "d_5", "d_8", "e6", "e7"] {
            let rs = sys(s);
            for g in subgroups(&rs) {
                assert!(g.corner_indices.iter().all(|&i| rs.d_j(i) == 1), "{s} {g}");
            }
        }
    }

    #[test]
    fn excluded_cyclic_subgroup() {
        let a7 = sys("a_7");
        let z4 = resolve(&a7, "Z_4").unwrap();
        assert_eq!(z4.corner_indices, [2, 4, 6].into());
        assert!(!z4.supported);
        assert!(resolve(&a7, "Z_3").is_none());
        assert!(subgroups(&a7).iter().any(GammaSubgroup::is_marker));
        assert!(!subgroups(&sys("a_3")).iter().any(GammaSubgroup::is_marker));
    }

    #[test]
    fn order_two_only_for_odd_rank() {
        assert!(!subgroups(&sys("a_4"))
            .iter()
            .any(|g| g.kind == GammaKind::Z2));
        let z2 = resolve(&sys("a_5"), "Z_2").unwrap();
        assert_eq!(z2.corner_indices, [3].into());
    }
}
