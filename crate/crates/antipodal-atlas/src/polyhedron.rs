//! The Cartan polyhedron `Δ`, the quotient polytopes `P_Γ`, and their
//! maximal points.
//!
//! `Δ` is the simplex `{x : α_i(x) ≥ 0, ψ(x) ≤ 1}` with corners `0, e_1, …, e_r`.
//! A subgroup `Γ` of the center cuts it further by `(x, e_i) ≤ ½(e_i, e_i)` for
//! every `p_i ∈ Γ`. Vertices are enumerated exactly by the double description
//! method, starting from `Δ` and adding one cut at a time.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{self, frac, int, Rational, Vector};
use crate::quotients::GammaSubgroup;
use crate::rootsys::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyhedronError {
    #[error("the trivial subgroup has no quotient polytope; use the Cartan polyhedron")]
    TrivialGamma,
    #[error("corner index {0} is out of range")]
    CornerIndex(usize),
    #[error("unsupported half-space system: {0}")]
    Unsupported(&'static str),
}

/// Corners `e_1..e_r` of `Δ`, solved from `α_i(e_j) = δ_ij / d_j` within the
/// span of the simple roots.
#[derive(Debug, Clone)]
pub struct CartanPolyhedron<'a> {
    rs: &'a RootSystem,
    corners: Vec<Vector>,
    squared_norms: Vec<Rational>,
}

pub fn cartan_polyhedron(rs: &RootSystem) -> CartanPolyhedron<'_> {
    let r = rs.rank();
    let mut rows: Vec<Vector> = rs
        .simple_roots()
        .iter()
        .map(|a| a.vector.scale(rs.metric_scale()))
        .collect();
    rows.extend(rs.span_complement().iter().cloned());
    let corners: Vec<Vector> = (1..=r)
        .map(|j| {
            let mut rhs = vec![Rational::zero(); rows.len()];
            rhs[j - 1] = frac(1, rs.d_j(j) as i64);
            exact::solve_linear(&rows, &rhs).expect("simple roots are independent")
        })
        .collect();
    let squared_norms = corners.iter().map(|e| rs.inner(e, e)).collect();
    CartanPolyhedron {
        rs,
        corners,
        squared_norms,
    }
}

impl<'a> CartanPolyhedron<'a> {
    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn corners(&self) -> &[Vector] {
        &self.corners
    }

    /// Corner `e_j` for a 1-based index.
    pub fn corner(&self, j: usize) -> &Vector {
        &self.corners[j - 1]
    }

    pub fn squared_norms(&self) -> &[Rational] {
        &self.squared_norms
    }

    pub fn squared_norm(&self, j: usize) -> &Rational {
        &self.squared_norms[j - 1]
    }

    /// Indices of the corners of maximal norm.
    pub fn maximal_corners(&self) -> BTreeSet<usize> {
        maximal_corners(self)
    }

    /// The maximal corners as base points.
    pub fn maximal_base_points(&self) -> Vec<BasePoint> {
        self.maximal_corners()
            .into_iter()
            .map(|j| BasePoint {
                form: BaseForm::SingleCorner(j),
                scaled_vector: self.corner(j).clone(),
            })
            .collect()
    }

    /// `½(e_j + e_k)` for 1-based indices.
    pub fn half_sum(&self, j: usize, k: usize) -> Vector {
        (self.corner(j) + self.corner(k)).scale(&frac(1, 2))
    }

    /// `(e_1 + … + e_r) / (r + 1)`.
    pub fn full_sum(&self) -> Vector {
        let r = self.corners.len();
        let mut s = Vector::zero(self.rs.ambient_dim());
        for e in &self.corners {
            s = &s + e;
        }
        s.scale(&frac(1, r as i64 + 1))
    }

    /// Matches `x` against the three distinguished forms.
    pub fn tag(&self, x: &Vector) -> BaseForm {
        let r = self.corners.len();
        if let Some(j) = self.corners.iter().position(|e| e == x) {
            return BaseForm::SingleCorner(j + 1);
        }
        for j in 1..r {
            if self.half_sum(j, j + 1) == *x {
                return BaseForm::HalfSum(j, j + 1);
            }
        }
        if self.full_sum() == *x {
            return BaseForm::FullSum;
        }
        BaseForm::GeneralVertex
    }

    /// Half-spaces of `Δ`: the `r` simple-root walls, then `ψ(x) ≤ 1`.
    pub fn half_spaces(&self) -> Vec<HalfSpace> {
        let s = self.rs.metric_scale();
        let mut hs: Vec<HalfSpace> = self
            .rs
            .simple_roots()
            .iter()
            .enumerate()
            .map(|(i, a)| HalfSpace {
                normal: -&a.vector.scale(s),
                bound: Rational::zero(),
                kind: ConstraintKind::SimpleRoot(i + 1),
            })
            .collect();
        hs.push(HalfSpace {
            normal: self.rs.highest_root().vector.scale(s),
            bound: int(1),
            kind: ConstraintKind::HighestRoot,
        });
        hs
    }
}

/// Indices `j` with `(e_j, e_j)` equal to the exact maximum.
pub fn maximal_corners(cp: &CartanPolyhedron<'_>) -> BTreeSet<usize> {
    let max = cp.squared_norms.iter().max().expect("rank ≥ 1");
    (1..=cp.corners.len())
        .filter(|&j| cp.squared_norm(j) == max)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstraintKind {
    /// `α_i(x) ≥ 0`.
    SimpleRoot(usize),
    /// `ψ(x) ≤ 1`.
    HighestRoot,
    /// `(x, e_i) ≤ ½(e_i, e_i)`.
    GammaCut(usize),
}

/// The half-space `normal · x ≤ bound` in plain ambient coordinates; any
/// metric scale is already folded into `normal` and `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: Vector,
    pub bound: Rational,
    pub kind: ConstraintKind,
}

impl HalfSpace {
    /// `bound - normal · x`, nonnegative exactly on the half-space.
    pub fn slack(&self, x: &Vector) -> Rational {
        &self.bound - self.normal.dot(x).expect("same ambient dimension")
    }
}

/// A vertex with the set of constraints active at it, as a bitmask over the
/// half-space list it was enumerated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub point: Vector,
    pub active: u128,
}

impl Vertex {
    pub fn is_active(&self, k: usize) -> bool {
        self.active >> k & 1 == 1
    }
}

/// Enumerates the vertices of a bounded polytope.
///
/// The polytope lives in the span `W` of the normals. The first `dim W + 1`
/// half-spaces must cut out a simplex in `W`; the remaining ones are added by
/// the double description method. Adjacency is decided combinatorially: two
/// vertices span an edge iff no third vertex is active on every constraint
/// they share, and they share at least `dim W - 1`.
pub fn vertex_enumerate(half_spaces: &[HalfSpace]) -> Result<Vec<Vertex>, PolyhedronError> {
    let Some(n) = half_spaces.first().map(|h| h.normal.dim()) else {
        return Err(PolyhedronError::Unsupported("no half-spaces"));
    };
    if half_spaces.len() > 128 {
        return Err(PolyhedronError::Unsupported("more than 128 half-spaces"));
    }
    let normals: Vec<Vector> = half_spaces.iter().map(|h| h.normal.clone()).collect();
    let complement = exact::orthogonal_complement(&normals, n);
    let r = n - complement.len();
    if half_spaces.len() < r + 1 {
        return Err(PolyhedronError::Unsupported(
            "fewer than dim + 1 half-spaces",
        ));
    }

    let mut vertices = Vec::with_capacity(r + 1);
    for skip in 0..=r {
        let mut rows: Vec<Vector> = Vec::with_capacity(n);
        let mut rhs: Vec<Rational> = Vec::with_capacity(n);
        let mut active = 0u128;
        for (k, h) in half_spaces[..=r].iter().enumerate() {
            if k != skip {
                rows.push(h.normal.clone());
                rhs.push(h.bound.clone());
                active |= 1 << k;
            }
        }
        for c in &complement {
            rows.push(c.clone());
            rhs.push(Rational::zero());
        }
        let point = exact::solve_linear(&rows, &rhs)
            .map_err(|_| PolyhedronError::Unsupported("initial constraints are not a simplex"))?;
        if exact::signum(&half_spaces[skip].slack(&point)) <= 0 {
            return Err(PolyhedronError::Unsupported(
                "initial constraints are not a bounded simplex",
            ));
        }
        vertices.push(Vertex { point, active });
    }

    for (k, h) in half_spaces.iter().enumerate().skip(r + 1) {
        vertices = add_half_space(vertices, h, k, r);
    }
    Ok(vertices)
}

fn add_half_space(vertices: Vec<Vertex>, h: &HalfSpace, k: usize, r: usize) -> Vec<Vertex> {
    let slacks: Vec<Rational> = vertices.iter().map(|v| h.slack(&v.point)).collect();
    let signs: Vec<i8> = slacks.iter().map(exact::signum).collect();
    if signs.iter().all(|&s| s >= 0) {
        return vertices
            .into_iter()
            .zip(signs)
            .map(|(mut v, s)| {
                if s == 0 {
                    v.active |= 1 << k;
                }
                v
            })
            .collect();
    }
    let masks: Vec<u128> = vertices.iter().map(|v| v.active).collect();
    let plus: Vec<usize> = (0..vertices.len()).filter(|&i| signs[i] > 0).collect();
    let minus: Vec<usize> = (0..vertices.len()).filter(|&i| signs[i] < 0).collect();

    let mut next: Vec<Vertex> = Vec::new();
    for &u in &plus {
        for &w in &minus {
            let common = masks[u] & masks[w];
            if (common.count_ones() as usize) + 1 < r {
                continue;
            }
            let blocked = masks
                .iter()
                .enumerate()
                .any(|(i, &m)| i != u && i != w && m & common == common);
            if blocked {
                continue;
            }
            let t = &slacks[u] / (&slacks[u] - &slacks[w]);
            let dir = &vertices[w].point - &vertices[u].point;
            next.push(Vertex {
                point: vertices[u].point.add_scaled(&t, &dir),
                active: common | 1 << k,
            });
        }
    }
    for (i, v) in vertices.into_iter().enumerate() {
        match signs[i] {
            0 => next.push(Vertex {
                active: v.active | 1 << k,
                ..v
            }),
            s if s > 0 => next.push(v),
            _ => {}
        }
    }
    next
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseForm {
    SingleCorner(usize),
    HalfSum(usize, usize),
    FullSum,
    GeneralVertex,
}

impl BaseForm {
    /// Short ascii name used by the json and csv emitters.
    pub fn name(&self) -> &'static str {
        match self {
            BaseForm::SingleCorner(_) => "single_corner",
            BaseForm::HalfSum(..) => "half_sum",
            BaseForm::FullSum => "full_sum",
            BaseForm::GeneralVertex => "general_vertex",
        }
    }

    /// Corner indices appearing in the form; all of `1..=r` for the full sum.
    pub fn corner_indices(&self, rank: usize) -> Vec<usize> {
        match *self {
            BaseForm::SingleCorner(j) => vec![j],
            BaseForm::HalfSum(j, k) => vec![j, k],
            BaseForm::FullSum => (1..=rank).collect(),
            BaseForm::GeneralVertex => Vec::new(),
        }
    }
}

impl fmt::Display for BaseForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseForm::SingleCorner(j) => write!(f, "e_{j}"),
            BaseForm::HalfSum(j, k) => write!(f, "1/2(e_{j}+e_{k})"),
            BaseForm::FullSum => f.write_str("1/(r+1)(e_1+...+e_r)"),
            BaseForm::GeneralVertex => f.write_str("vertex"),
        }
    }
}

/// A point `x / π` of the closed Weyl chamber together with its form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePoint {
    pub form: BaseForm,
    pub scaled_vector: Vector,
}

impl BasePoint {
    fn order_key(&self) -> (usize, u8) {
        match self.form {
            BaseForm::SingleCorner(j) => (j, 0),
            BaseForm::HalfSum(j, _) => (j, 1),
            BaseForm::FullSum => (0, 2),
            BaseForm::GeneralVertex => (usize::MAX, 3),
        }
    }
}

fn cmp_base_points(a: &BasePoint, b: &BasePoint) -> Ordering {
    a.order_key()
        .cmp(&b.order_key())
        .then_with(|| a.scaled_vector.cmp(&b.scaled_vector))
}

/// `P_Γ` with its vertices and their membership in `P_Γ'`.
#[derive(Debug, Clone)]
pub struct PGammaPolytope<'a> {
    cp: CartanPolyhedron<'a>,
    gamma: GammaSubgroup,
    half_spaces: Vec<HalfSpace>,
    vertices: Vec<Vertex>,
    on_prime: Vec<bool>,
}

pub fn p_gamma<'a>(
    rs: &'a RootSystem,
    gamma: &GammaSubgroup,
) -> Result<PGammaPolytope<'a>, PolyhedronError> {
    if gamma.corner_indices.is_empty() {
        return Err(PolyhedronError::TrivialGamma);
    }
    let cp = cartan_polyhedron(rs);
    let mut half_spaces = cp.half_spaces();
    let s = rs.metric_scale();
    for &i in &gamma.corner_indices {
        if i == 0 || i > rs.rank() {
            return Err(PolyhedronError::CornerIndex(i));
        }
        let bound = cp.squared_norm(i) * frac(1, 2);
        assert!(bound > Rational::zero(), "a cut never passes through 0");
        half_spaces.push(HalfSpace {
            normal: cp.corner(i).scale(s),
            bound,
            kind: ConstraintKind::GammaCut(i),
        });
    }
    let vertices = vertex_enumerate(&half_spaces)?;
    let prime_mask: u128 = half_spaces
        .iter()
        .enumerate()
        .filter(|(_, h)| !matches!(h.kind, ConstraintKind::SimpleRoot(_)))
        .fold(0, |m, (k, _)| m | 1 << k);
    let on_prime = vertices
        .iter()
        .map(|v| v.active & prime_mask != 0)
        .collect();
    Ok(PGammaPolytope {
        cp,
        gamma: gamma.clone(),
        half_spaces,
        vertices,
        on_prime,
    })
}

impl<'a> PGammaPolytope<'a> {
    pub fn root_system(&self) -> &'a RootSystem {
        self.cp.rs
    }

    pub fn cartan(&self) -> &CartanPolyhedron<'a> {
        &self.cp
    }

    pub fn gamma(&self) -> &GammaSubgroup {
        &self.gamma
    }

    pub fn half_spaces(&self) -> &[HalfSpace] {
        &self.half_spaces
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn on_prime(&self) -> &[bool] {
        &self.on_prime
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.half_spaces
            .iter()
            .all(|h| exact::signum(&h.slack(x)) >= 0)
    }

    /// Whether `x ∈ P_Γ` lies on `P_Γ'`.
    pub fn is_prime_point(&self, x: &Vector) -> bool {
        self.half_spaces
            .iter()
            .any(|h| !matches!(h.kind, ConstraintKind::SimpleRoot(_)) && h.slack(x).is_zero())
    }

    /// The maximal squared norm over `P_Γ'`.
    pub fn max_prime_norm(&self) -> Rational {
        let rs = self.cp.rs;
        self.vertices
            .iter()
            .zip(&self.on_prime)
            .filter(|(_, &p)| p)
            .map(|(v, _)| rs.inner(&v.point, &v.point))
            .max()
            .expect("ψ(x) = 1 has vertices")
    }
}

/// Vertices of `P_Γ'` of maximal norm, tagged and ordered by corner index.
pub fn max_prime(poly: &PGammaPolytope<'_>) -> Vec<BasePoint> {
    let rs = poly.cp.rs;
    let max = poly.max_prime_norm();
    let mut out: Vec<BasePoint> = poly
        .vertices
        .iter()
        .zip(&poly.on_prime)
        .filter(|(v, &p)| p && rs.inner(&v.point, &v.point) == max)
        .map(|(v, _)| BasePoint {
            form: poly.cp.tag(&v.point),
            scaled_vector: v.point.clone(),
        })
        .collect();
    out.sort_by(cmp_base_points);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotients;
    use crate::rootsys::build;

    fn sys(s: &str) -> RootSystem {
        build(s.parse().unwrap()).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn a2_corners() {
        let rs = sys("a_2");
        let cp = cartan_polyhedron(&rs);
        assert_eq!(
            cp.corner(1),
            &Vector::new(vec![frac(2, 3), frac(-1, 3), frac(-1, 3)])
        );
        assert_eq!(
            cp.corner(2),
            &Vector::new(vec![frac(1, 3), frac(1, 3), frac(-2, 3)])
        );
    }

    #[test]
    fn a3_norm_ratio() {
        let rs = sys("a_3");
        let cp = cartan_polyhedron(&rs);
        assert_eq!(cp.squared_norm(1) / cp.squared_norm(2), frac(3, 4));
    }

    #[test]
    fn corners_lie_on_the_outer_face() {
        for s in [
            "a_4", "b_5", "c_3", "d_6", "bc_3", "e6", "e7", "e8", "f4", "g2",
        ] {
            let rs = sys(s);
            let cp = cartan_polyhedron(&rs);
            for e in cp.corners() {
                assert_eq!(rs.inner(&rs.highest_root().vector, e), int(1), "{s}");
            }
        }
    }

    #[test]
    fn maximal_corner_examples() {
        assert_eq!(
            cartan_polyhedron(&sys("a_4")).maximal_corners(),
            set(&[2, 3])
        );
        assert_eq!(
            cartan_polyhedron(&sys("b_4")).maximal_corners(),
            set(&[1, 4])
        );
        assert_eq!(
            cartan_polyhedron(&sys("d_4")).maximal_corners(),
            set(&[1, 3, 4])
        );
        assert_eq!(cartan_polyhedron(&sys("b_7")).maximal_corners(), set(&[7]));
    }

    #[test]
    fn simplex_vertices_of_a2() {
        let rs = sys("a_2");
        let cp = cartan_polyhedron(&rs);
        let vs = vertex_enumerate(&cp.half_spaces()).unwrap();
        let pts: BTreeSet<Vector> = vs.into_iter().map(|v| v.point).collect();
        let want: BTreeSet<Vector> =
            [Vector::zero(3), cp.corner(1).clone(), cp.corner(2).clone()].into();
        assert_eq!(pts, want);
    }

    fn gamma(rs: &RootSystem, label: &str) -> GammaSubgroup {
        quotients::subgroups(rs)
            .into_iter()
            .find(|g| g.label == label)
            .unwrap()
    }

    #[test]
    fn c3_half_sum_vertex() {
        let rs = sys("c_3");
        let poly = p_gamma(&rs, &gamma(&rs, "Z_2")).unwrap();
        let h = poly.cartan().half_sum(1, 2);
        assert!(poly.vertices().iter().any(|v| v.point == h));
        let m = max_prime(&poly);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].form, BaseForm::HalfSum(1, 2));
    }

    #[test]
    fn d_spin_vector_quotient() {
        let rs = sys("d_6");
        let poly = p_gamma(&rs, &gamma(&rs, "{e,p_1}")).unwrap();
        for j in 2..=6 {
            let e = poly.cartan().corner(j).clone();
            assert!(poly.vertices().iter().any(|v| v.point == e), "e_{j}");
        }
        let forms: Vec<BaseForm> = max_prime(&poly).iter().map(|b| b.form).collect();
        assert_eq!(
            forms,
            vec![BaseForm::SingleCorner(5), BaseForm::SingleCorner(6)]
        );
    }

    #[test]
    fn full_sum_for_full_center_of_a() {
        let rs = sys("a_4");
        let poly = p_gamma(&rs, &gamma(&rs, "Z_5")).unwrap();
        assert_eq!(poly.vertices().len(), 16);
        let forms: Vec<BaseForm> = max_prime(&poly).iter().map(|b| b.form).collect();
        assert_eq!(forms, vec![BaseForm::FullSum]);
    }

    #[test]
    fn zero_is_never_on_prime() {
        let rs = sys("b_3");
        let poly = p_gamma(&rs, &gamma(&rs, "Z_2")).unwrap();
        let zero = Vector::zero(3);
        let i = poly
            .vertices()
            .iter()
            .position(|v| v.point == zero)
            .unwrap();
        assert!(!poly.on_prime()[i]);
    }

    #[test]
    fn trivial_gamma_is_rejected() {
        let rs = sys("b_3");
        let mut g = gamma(&rs, "Z_2");
        g.corner_indices.clear();
        assert_eq!(p_gamma(&rs, &g).unwrap_err(), PolyhedronError::TrivialGamma);
    }
}
