//! Irreducible restricted root systems in explicit coordinates.
//!
//! Classical families use the standard orthonormal realizations. The
//! exceptional ones follow Bourbaki's plates, and so does the numbering of
//! simple roots throughout the crate. Simple-root and corner indices are
//! 1-based in every public signature, matching the `e_j` / `d_j` notation.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{self, frac, int, LinalgError, Rational, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("{family} does not admit rank {rank}")]
    InvalidRank { family: Family, rank: usize },
    #[error("vector {0} is not in the span of the simple roots")]
    OutsideSpan(Vector),
    #[error("{id}: expected {expected} positive roots, built {found}")]
    Count {
        id: RootSystemId,
        expected: usize,
        found: usize,
    },
    #[error("{id}: highest root coefficients {found:?} differ from {expected:?}")]
    Anchor {
        id: RootSystemId,
        expected: Vec<u32>,
        found: Vec<u32>,
    },
    #[error("{id}: root {root} has non-natural coefficients")]
    NotPositive { id: RootSystemId, root: Vector },
    #[error("{id}: root {root} exceeds the highest root coefficientwise")]
    CoefficientBound { id: RootSystemId, root: Vector },
    #[error("unknown root system `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::BC,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];

    /// Lowercase ascii stem, e.g. `bc` or `e6`.
    pub fn stem(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::D => "d",
            Family::BC => "bc",
            Family::E6 => "e6",
            Family::E7 => "e7",
            Family::E8 => "e8",
            Family::F4 => "f4",
            Family::G2 => "g2",
        }
    }

    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::BC => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            f => f.fixed_rank().unwrap(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.stem())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSystemId {
    family: Family,
    rank: usize,
}

impl RootSystemId {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match family.fixed_rank() {
            Some(n) => rank == n,
            None => rank >= family.min_rank(),
        };
        if ok {
            Ok(RootSystemId { family, rank })
        } else {
            Err(RootSystemError::InvalidRank { family, rank })
        }
    }

    /// Exceptional system by family alone.
    pub fn exceptional(family: Family) -> Self {
        let rank = family.fixed_rank().expect("exceptional family");
        RootSystemId { family, rank }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots by the classical formulas.
    pub fn positive_root_count(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
            Family::BC => r * (r + 1),
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
            Family::F4 => 24,
            Family::G2 => 6,
        }
    }
}

impl fmt::Display for RootSystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.fixed_rank().is_some() {
            f.write_str(self.family.stem())
        } else {
            write!(f, "{}_{}", self.family.stem(), self.rank)
        }
    }
}

impl FromStr for RootSystemId {
    type Err = RootSystemError;

    /// Parses `a_3`, `bc2`, `e6`, `g2` and similar.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase().replace('_', "");
        let err = || RootSystemError::Parse(s.to_string());
        for fam in Family::ALL.iter().filter(|f| f.fixed_rank().is_some()) {
            if t == fam.stem() {
                return Ok(RootSystemId::exceptional(*fam));
            }
        }
        let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(err)?;
        let (stem, digits) = t.split_at(split);
        let family = match stem {
            "a" => Family::A,
            "b" => Family::B,
            "c" => Family::C,
            "d" => Family::D,
            "bc" => Family::BC,
            _ => return Err(err()),
        };
        let rank = digits.parse().map_err(|_| err())?;
        RootSystemId::new(family, rank)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Short,
    Medium,
    Long,
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LengthClass::Short => "short",
            LengthClass::Medium => "medium",
            LengthClass::Long => "long",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub vector: Vector,
    pub coefficients: Vec<u32>,
    pub length_class: LengthClass,
}

impl Root {
    pub fn height(&self) -> u32 {
        self.coefficients.iter().sum()
    }

    /// Coefficient `c_j` for a 1-based index.
    pub fn c(&self, j: usize) -> u32 {
        self.coefficients[j - 1]
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    id: RootSystemId,
    ambient_dim: usize,
    simple: Vec<Root>,
    positive: Vec<Root>,
    highest: usize,
    d: Vec<u32>,
    scale: Rational,
    complement: Vec<Vector>,
    index: HashMap<Vector, usize>,
}

impl RootSystem {
    pub fn id(&self) -> RootSystemId {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.id.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    /// Simple root `alpha_i` for a 1-based index.
    pub fn simple_root(&self, i: usize) -> &Root {
        &self.simple[i - 1]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive[self.highest]
    }

    /// Coefficients `d_1..d_r` of the highest root.
    pub fn d(&self) -> &[u32] {
        &self.d
    }

    /// `d_j` for a 1-based index.
    pub fn d_j(&self, j: usize) -> u32 {
        self.d[j - 1]
    }

    /// Positive factor applied to every inner product.
    pub fn metric_scale(&self) -> &Rational {
        &self.scale
    }

    /// Basis of the orthogonal complement of the span of the simple roots.
    pub fn span_complement(&self) -> &[Vector] {
        &self.complement
    }

    /// Copy of this system whose inner product is multiplied by `s > 0`.
    pub fn with_metric_scale(&self, s: Rational) -> RootSystem {
        assert!(s.is_positive(), "metric scale must be positive");
        RootSystem {
            scale: s,
            ..self.clone()
        }
    }

    /// The inner product `(u, v)` of this system.
    pub fn inner(&self, u: &Vector, v: &Vector) -> Rational {
        let dot = u.dot(v).expect("vectors in the ambient space");
        if self.scale.is_one() {
            dot
        } else {
            dot * &self.scale
        }
    }

    /// Index into `positive_roots` of `v` or `-v`, whichever is a positive root.
    pub fn root_index(&self, v: &Vector) -> Option<usize> {
        self.index.get(v).or_else(|| self.index.get(&-v)).copied()
    }

    pub fn is_root(&self, v: &Vector) -> bool {
        self.root_index(v).is_some()
    }

    /// Coefficients of `v` in the basis of simple roots.
    pub fn coefficients(&self, v: &Vector) -> Result<Vec<Rational>, RootSystemError> {
        coefficients_in(&self.simple_vectors(), v)
    }

    pub fn simple_vectors(&self) -> Vec<Vector> {
        self.simple.iter().map(|r| r.vector.clone()).collect()
    }

    /// Positive roots grouped by length class, shortest first.
    pub fn length_classes(&self) -> Vec<(LengthClass, Vec<&Root>)> {
        let mut classes: Vec<(LengthClass, Vec<&Root>)> = Vec::new();
        for class in [LengthClass::Short, LengthClass::Medium, LengthClass::Long] {
            let members: Vec<&Root> = self
                .positive
                .iter()
                .filter(|r| r.length_class == class)
                .collect();
            if !members.is_empty() {
                classes.push((class, members));
            }
        }
        classes
    }

    /// Overrides the highest-root coefficients without touching the roots.
    ///
    /// Only meant for fault-injection tests of the verification report.
    #[doc(hidden)]
    pub fn tamper_highest_coefficients(&mut self, d: Vec<u32>) {
        assert_eq!(d.len(), self.rank());
        self.d = d;
    }
}

fn coefficients_in(simple: &[Vector], v: &Vector) -> Result<Vec<Rational>, RootSystemError> {
    let n = v.dim();
    let rows: Vec<Vector> = (0..n)
        .map(|i| Vector::new(simple.iter().map(|a| a[i].clone()).collect()))
        .collect();
    let rhs: Vec<Rational> = v.coords().to_vec();
    match exact::solve_linear(&rows, &rhs) {
        Ok(c) => Ok(c.coords().to_vec()),
        Err(LinalgError::Inconsistent) | Err(LinalgError::Dimension { .. }) => {
            Err(RootSystemError::OutsideSpan(v.clone()))
        }
        Err(LinalgError::Singular) => unreachable!("simple roots are independent"),
    }
}

/// A set of positive roots standing for `members ∪ -members`.
#[derive(Debug, Clone)]
pub struct RootSubsystem<'a> {
    pub parent: &'a RootSystem,
    pub members: BTreeSet<usize>,
}

impl<'a> RootSubsystem<'a> {
    pub fn new(parent: &'a RootSystem, members: impl IntoIterator<Item = usize>) -> Self {
        RootSubsystem {
            parent,
            members: members.into_iter().collect(),
        }
    }

    pub fn roots(&self) -> impl Iterator<Item = &'a Root> + '_ {
        self.members.iter().map(|&i| &self.parent.positive[i])
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Closure under sums: `a, b ∈ ±S` and `a + b ∈ Σ` imply `a + b ∈ ±S`.
    pub fn subsystem_check(&self) -> bool {
        let signed: Vec<Vector> = self
            .roots()
            .flat_map(|r| [r.vector.clone(), -&r.vector])
            .collect();
        for (i, a) in signed.iter().enumerate() {
            for b in &signed[i + 1..] {
                let s = a + b;
                if s.is_zero() {
                    continue;
                }
                if let Some(k) = self.parent.root_index(&s) {
                    if !self.members.contains(&k) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Builds `id` in its standard realization.
pub fn build(id: RootSystemId) -> Result<RootSystem, RootSystemError> {
    let (ambient_dim, simple, positive) = realization(id);
    let r = id.rank;
    debug_assert_eq!(simple.len(), r);

    let mut roots = Vec::with_capacity(positive.len());
    for v in positive {
        let c = coefficients_in(&simple, &v)?;
        let mut nat = Vec::with_capacity(r);
        for x in &c {
            if !exact::is_integer(x) || x.is_negative() {
                return Err(RootSystemError::NotPositive { id, root: v });
            }
            nat.push(x.to_integer().to_u32().expect("small coefficient"));
        }
        roots.push((v, nat));
    }
    if roots.len() != id.positive_root_count() {
        return Err(RootSystemError::Count {
            id,
            expected: id.positive_root_count(),
            found: roots.len(),
        });
    }
    roots.sort_by(|a, b| {
        let ha: u32 = a.1.iter().sum();
        let hb: u32 = b.1.iter().sum();
        ha.cmp(&hb).then_with(|| b.1.cmp(&a.1))
    });

    let norms: Vec<Rational> = roots
        .iter()
        .map(|(v, _)| v.dot(v).expect("same dim"))
        .collect();
    let classify = length_classifier(id.family, &norms);
    let positive: Vec<Root> = roots
        .into_iter()
        .zip(&norms)
        .map(|((vector, coefficients), n)| Root {
            vector,
            coefficients,
            length_class: classify(n),
        })
        .collect();

    let highest = positive.len() - 1;
    let d = positive[highest].coefficients.clone();
    if let Some(p) = positive
        .iter()
        .find(|p| p.coefficients.iter().zip(&d).any(|(c, dk)| c > dk))
    {
        return Err(RootSystemError::CoefficientBound {
            id,
            root: p.vector.clone(),
        });
    }
    if let Some(expected) = anchor(id.family) {
        if d != expected {
            return Err(RootSystemError::Anchor {
                id,
                expected: expected.to_vec(),
                found: d,
            });
        }
    }

    let index: HashMap<Vector, usize> = positive
        .iter()
        .enumerate()
        .map(|(i, p)| (p.vector.clone(), i))
        .collect();
    let simple_roots: Vec<Root> = simple.iter().map(|v| positive[index[v]].clone()).collect();
    let complement = exact::orthogonal_complement(&simple, ambient_dim);

    Ok(RootSystem {
        id,
        ambient_dim,
        simple: simple_roots,
        positive,
        highest,
        d,
        scale: Rational::one(),
        complement,
        index,
    })
}

/// Highest-root coefficients pinned for the exceptional systems.
fn anchor(family: Family) -> Option<&'static [u32]> {
    match family {
        Family::G2 => Some(&[3, 2]),
        Family::F4 => Some(&[2, 3, 4, 2]),
        Family::E6 => Some(&[1, 2, 2, 3, 2, 1]),
        Family::E7 => Some(&[2, 2, 3, 4, 3, 2, 1]),
        Family::E8 => Some(&[2, 3, 4, 6, 5, 4, 3, 2]),
        _ => None,
    }
}

fn length_classifier(family: Family, norms: &[Rational]) -> impl Fn(&Rational) -> LengthClass {
    let min = norms.iter().min().cloned().unwrap_or_else(Rational::one);
    let max = norms.iter().max().cloned().unwrap_or_else(Rational::one);
    move |n: &Rational| {
        if family == Family::BC {
            let ratio = n / &min;
            if ratio == int(1) {
                LengthClass::Short
            } else if ratio == int(2) {
                LengthClass::Medium
            } else {
                LengthClass::Long
            }
        } else if *n == max {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }
}

fn x(n: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = vec![Rational::zero(); n];
    for &(i, c) in terms {
        v[i - 1] += int(c);
    }
    Vector::new(v)
}

fn half(n: usize, signs: &[i64]) -> Vector {
    debug_assert_eq!(signs.len(), n);
    Vector::new(signs.iter().map(|&s| frac(s, 2)).collect())
}

/// `x_i ± x_j` for `1 ≤ i < j ≤ m` inside `R^n`.
fn plus_minus_pairs(n: usize, m: usize, out: &mut Vec<Vector>) {
    for i in 1..=m {
        for j in i + 1..=m {
            out.push(x(n, &[(i, 1), (j, -1)]));
            out.push(x(n, &[(i, 1), (j, 1)]));
        }
    }
}

/// Ambient dimension, simple roots and positive roots.
fn realization(id: RootSystemId) -> (usize, Vec<Vector>, Vec<Vector>) {
    let r = id.rank;
    match id.family {
        Family::A => {
            let n = r + 1;
            let simple = (1..=r).map(|i| x(n, &[(i, 1), (i + 1, -1)])).collect();
            let mut pos = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    pos.push(x(n, &[(i, 1), (j, -1)]));
                }
            }
            (n, simple, pos)
        }
        Family::B | Family::C | Family::D | Family::BC => {
            let n = r;
            let mut simple: Vec<Vector> = (1..r).map(|i| x(n, &[(i, 1), (i + 1, -1)])).collect();
            simple.push(match id.family {
                Family::B | Family::BC => x(n, &[(r, 1)]),
                Family::C => x(n, &[(r, 2)]),
                _ => x(n, &[(r - 1, 1), (r, 1)]),
            });
            let mut pos = Vec::new();
            plus_minus_pairs(n, r, &mut pos);
            for i in 1..=r {
                match id.family {
                    Family::B => pos.push(x(n, &[(i, 1)])),
                    Family::C => pos.push(x(n, &[(i, 2)])),
                    Family::BC => {
                        pos.push(x(n, &[(i, 1)]));
                        pos.push(x(n, &[(i, 2)]));
                    }
                    _ => {}
                }
            }
            (n, simple, pos)
        }
        Family::G2 => {
            let a1 = Vector::from_ints(&[1, -1, 0]);
            let a2 = Vector::from_ints(&[-2, 1, 1]);
            let pos = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
                .iter()
                .map(|&(p, q)| a1.scale(&int(p)).add_scaled(&int(q), &a2))
                .collect();
            (3, vec![a1, a2], pos)
        }
        Family::F4 => {
            let n = 4;
            let simple = vec![
                x(n, &[(2, 1), (3, -1)]),
                x(n, &[(3, 1), (4, -1)]),
                x(n, &[(4, 1)]),
                half(n, &[1, -1, -1, -1]),
            ];
            let mut pos: Vec<Vector> = (1..=4).map(|i| x(n, &[(i, 1)])).collect();
            plus_minus_pairs(n, 4, &mut pos);
            for mask in 0..8u32 {
                let s = |b: u32| if mask >> b & 1 == 1 { -1 } else { 1 };
                pos.push(half(n, &[1, s(0), s(1), s(2)]));
            }
            (n, simple, pos)
        }
        Family::E6 | Family::E7 | Family::E8 => {
            let n = 8;
            let mut simple = vec![
                half(n, &[1, -1, -1, -1, -1, -1, -1, 1]),
                x(n, &[(1, 1), (2, 1)]),
            ];
            for k in 3..=r {
                simple.push(x(n, &[(k - 1, 1), (k - 2, -1)]));
            }
            let mut pos = Vec::new();
            let (pairs, free, tail, parity): (usize, usize, &[i64], u32) = match id.family {
                Family::E6 => (5, 5, &[-1, -1, 1], 0),
                Family::E7 => (6, 6, &[-1, 1], 1),
                _ => (8, 7, &[1], 0),
            };
            for i in 1..=pairs {
                for j in i + 1..=pairs {
                    pos.push(x(n, &[(j, 1), (i, -1)]));
                    pos.push(x(n, &[(j, 1), (i, 1)]));
                }
            }
            if id.family == Family::E7 {
                pos.push(x(n, &[(8, 1), (7, -1)]));
            }
            for mask in 0..(1u32 << free) {
                if mask.count_ones() % 2 != parity {
                    continue;
                }
                let mut signs: Vec<i64> = (0..free)
                    .map(|b| if mask >> b & 1 == 1 { -1 } else { 1 })
                    .collect();
                signs.extend_from_slice(tail);
                pos.push(half(n, &signs));
            }
            (n, simple, pos)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn rank_constraints() {
        assert!(RootSystemId::new(Family::B, 1).is_err());
        assert!(RootSystemId::new(Family::C, 1).is_err());
        assert!(RootSystemId::new(Family::D, 2).is_err());
        assert!(RootSystemId::new(Family::E6, 7).is_err());
        assert!(RootSystemId::new(Family::BC, 1).is_ok());
    }

    #[test]
    fn bc2_positive_roots() {
        let rs = sys("bc_2");
        let mut got: Vec<Vector> = rs
            .positive_roots()
            .iter()
            .map(|r| r.vector.clone())
            .collect();
        got.sort();
        let mut want = vec![
            Vector::from_ints(&[1, -1]),
            Vector::from_ints(&[1, 1]),
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[0, 1]),
            Vector::from_ints(&[2, 0]),
            Vector::from_ints(&[0, 2]),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn exceptional_highest_roots() {
        assert_eq!(sys("g2").d(), &[3, 2]);
        assert_eq!(sys("e8").positive_roots().len(), 120);
        assert_eq!(sys("e8").d_j(1), 2);
        assert_eq!(sys("e6").d_j(4), 3);
        assert_eq!(sys("e7").d_j(7), 1);
        assert_eq!(sys("f4").d_j(4), 2);
    }

    #[test]
    fn coefficients_of_highest_roots() {
        let c3 = sys("c_3");
        let psi = c3.highest_root().vector.clone();
        assert_eq!(c3.coefficients(&psi).unwrap(), vec![int(2), int(2), int(1)]);
        let g2 = sys("g2");
        let psi = g2.highest_root().vector.clone();
        assert_eq!(g2.coefficients(&psi).unwrap(), vec![int(3), int(2)]);
        let a1 = c3.simple_root(1).vector.clone();
        assert_eq!(c3.coefficients(&a1).unwrap(), vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn coefficients_outside_span() {
        let a2 = sys("a_2");
        let v = Vector::from_ints(&[1, 0, 0]);
        assert!(matches!(
            a2.coefficients(&v),
            Err(RootSystemError::OutsideSpan(_))
        ));
    }

    #[test]
    fn length_class_shapes() {
        assert_eq!(sys("a_5").length_classes().len(), 1);
        let bc2 = sys("bc_2");
        let classes = bc2.length_classes();
        assert_eq!(classes.len(), 3);
        let short: Vec<_> = classes[0].1.iter().map(|r| r.vector.clone()).collect();
        assert!(short.contains(&Vector::from_ints(&[1, 0])));
        assert_eq!(classes[2].0, LengthClass::Long);
        let f4 = sys("f4");
        let sizes: Vec<usize> = f4.length_classes().iter().map(|c| c.1.len()).collect();
        assert_eq!(sizes, vec![12, 12]);
    }

    #[test]
    fn subsystem_examples() {
        let a2 = sys("a_2");
        assert!(RootSubsystem::new(&a2, []).subsystem_check());
        assert!(RootSubsystem::new(&a2, 0..3).subsystem_check());
        let a1 = a2.root_index(&a2.simple_root(1).vector).unwrap();
        let top = a2.root_index(&a2.highest_root().vector).unwrap();
        assert!(!RootSubsystem::new(&a2, [a1, top]).subsystem_check());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["a_3", "bc_2", "e6", "g2", "d_12"] {
            assert_eq!(s.parse::<RootSystemId>().unwrap().to_string(), s);
        }
        assert!("x_3".parse::<RootSystemId>().is_err());
    }
}
