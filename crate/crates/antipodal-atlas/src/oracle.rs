//! Brute-force cross-checks that share no algorithm with the primary paths.
//!
//! Roots come from a reflection closure over scaled integer vectors followed by
//! a coefficient scan. Polytopes are checked by sampling small-denominator
//! rational grids and by enumerating every `r`-subset of constraints.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exact::Vector;
use crate::polyhedron::{max_prime, ConstraintKind, PGammaPolytope};
use crate::rootsys::{self, Family, RootSystemId};

type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub item: String,
    pub in_primary: bool,
    pub in_oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub subject: String,
    pub agreed: bool,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    fn new(subject: impl Into<String>, mismatches: Vec<Mismatch>) -> Self {
        OracleReport {
            subject: subject.into(),
            agreed: mismatches.is_empty(),
            mismatches,
        }
    }
}

/// Closed-form `|Σ⁺|`, written out here rather than borrowed.
pub fn positive_count(id: RootSystemId) -> usize {
    let r = id.rank();
    match id.family() {
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

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All roots reachable from the simple roots by simple reflections.
fn reflection_closure(simple: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.iter().cloned().collect();
    while let Some(beta) = queue.pop_front() {
        for a in simple {
            let (num, den) = (2 * dot(&beta, a), dot(a, a));
            assert_eq!(num % den, 0, "Cartan integers are integers");
            let k = num / den;
            let image: Vec<i64> = beta.iter().zip(a).map(|(b, x)| b - k * x).collect();
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen
}

/// Positive roots of `id` by reflection closure and a coefficient scan with
/// bounds `d_k + 1`.
pub fn enumerate_roots_oracle(id: RootSystemId) -> BTreeSet<Vector> {
    let primary = rootsys::build(id).expect("catalog systems build");
    let simple: Vec<Vector> = primary.simple_vectors();
    let bounds: Vec<u32> = primary.d().iter().map(|d| d + 1).collect();
    let lcm = simple
        .iter()
        .flat_map(|v| v.coords().iter().map(|c| c.denom().clone()))
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let scale = lcm.to_i64().expect("small denominators");
    let ints: Vec<Vec<i64>> = simple
        .iter()
        .map(|v| {
            v.coords()
                .iter()
                .map(|c| {
                    (c * BigInt::from(scale))
                        .to_integer()
                        .to_i64()
                        .expect("fits")
                })
                .collect()
        })
        .collect();
    let mut roots = reflection_closure(&ints);
    if id.family() == Family::BC {
        let shortest = roots.iter().map(|v| dot(v, v)).min().expect("nonempty");
        let doubled: Vec<Vec<i64>> = roots
            .iter()
            .filter(|v| dot(v, v) == shortest)
            .map(|v| v.iter().map(|x| 2 * x).collect())
            .collect();
        roots.extend(doubled);
    }
    let n = ints[0].len();
    let r = ints.len();
    let mut out = BTreeSet::new();
    let mut coeff = vec![0u32; r];
    let mut sum = vec![0i64; n];
    loop {
        let mut k = 0;
        loop {
            if k == r {
                return out;
            }
            if coeff[k] < bounds[k] {
                coeff[k] += 1;
                for (s, x) in sum.iter_mut().zip(&ints[k]) {
                    *s += x;
                }
                break;
            }
            for (s, x) in sum.iter_mut().zip(&ints[k]) {
                *s -= coeff[k] as i64 * x;
            }
            coeff[k] = 0;
            k += 1;
        }
        if roots.contains(&sum) {
            out.insert(Vector::new(
                sum.iter()
                    .map(|&x| Q::new(x.into(), scale.into()))
                    .collect(),
            ));
        }
    }
}

/// Oracle versus primary positive roots, including the closed-form count.
pub fn roots_report(id: RootSystemId) -> OracleReport {
    let oracle = enumerate_roots_oracle(id);
    let primary: BTreeSet<Vector> = rootsys::build(id)
        .expect("catalog systems build")
        .positive_roots()
        .iter()
        .map(|r| r.vector.clone())
        .collect();
    let mut mismatches: Vec<Mismatch> = primary
        .symmetric_difference(&oracle)
        .map(|v| Mismatch {
            item: v.to_string(),
            in_primary: primary.contains(v),
            in_oracle: oracle.contains(v),
        })
        .collect();
    let expected = positive_count(id);
    if oracle.len() != expected {
        mismatches.push(Mismatch {
            item: format!(
                "|positive roots| = {}, closed form {expected}",
                oracle.len()
            ),
            in_primary: primary.len() == expected,
            in_oracle: false,
        });
    }
    OracleReport::new(id.to_string(), mismatches)
}

struct Constraints {
    normals: Vec<Vec<Q>>,
    bounds: Vec<Q>,
    prime: Vec<bool>,
    metric: Q,
}

impl Constraints {
    fn of(poly: &PGammaPolytope<'_>) -> Self {
        let hs = poly.half_spaces();
        Constraints {
            normals: hs.iter().map(|h| h.normal.coords().to_vec()).collect(),
            bounds: hs.iter().map(|h| h.bound.clone()).collect(),
            prime: hs
                .iter()
                .map(|h| !matches!(h.kind, ConstraintKind::SimpleRoot(_)))
                .collect(),
            metric: poly.root_system().metric_scale().clone(),
        }
    }

    fn feasible(&self, x: &[Q]) -> bool {
        self.normals
            .iter()
            .zip(&self.bounds)
            .all(|(n, b)| qdot(n, x) <= *b)
    }

    fn on_prime(&self, x: &[Q]) -> bool {
        self.normals
            .iter()
            .zip(&self.bounds)
            .zip(&self.prime)
            .any(|((n, b), &p)| p && qdot(n, x) == *b)
    }

    fn norm(&self, x: &[Q]) -> Q {
        &self.metric * qdot(x, x)
    }

    /// `t·x` with `t` the largest scalar keeping `x` feasible.
    fn project(&self, x: &[Q]) -> Option<Vec<Q>> {
        let t = self
            .normals
            .iter()
            .zip(&self.bounds)
            .zip(&self.prime)
            .filter(|(_, &p)| p)
            .filter_map(|((n, b), _)| {
                let v = qdot(n, x);
                v.is_positive().then(|| b / v)
            })
            .min()?;
        Some(x.iter().map(|c| c * &t).collect())
    }
}

fn qdot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

fn combos(n: usize, k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * (n as u128 - i) / (i + 1);
    }
    c
}

/// Row-reduces `rows | rhs` and returns the unique solution, if any.
fn unique_solution(mut rows: Vec<Vec<Q>>, mut rhs: Vec<Q>, n: usize) -> Option<Vec<Q>> {
    let m = rows.len();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        let Some(p) = (pivot_row..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(p, pivot_row);
        rhs.swap(p, pivot_row);
        let inv = rows[pivot_row][col].recip();
        for c in 0..n {
            rows[pivot_row][c] = &rows[pivot_row][c] * &inv;
        }
        rhs[pivot_row] = &rhs[pivot_row] * &inv;
        for i in 0..m {
            if i != pivot_row && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in 0..n {
                    let sub = &f * &rows[pivot_row][c];
                    rows[i][c] -= sub;
                }
                let sub = &f * &rhs[pivot_row];
                rhs[i] -= sub;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if pivots.len() < n || rhs[pivot_row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rhs[i].clone();
    }
    Some(x)
}

/// Basis of the orthogonal complement of `rows` in `Q^n`.
fn complement(rows: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let mut basis: Vec<Vec<Q>> = Vec::new();
    let mut reduced: Vec<(usize, Vec<Q>)> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for (p, b) in &reduced {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for c in 0..n {
                    let sub = &f * &b[c];
                    v[c] -= sub;
                }
            }
        }
        if let Some(p) = (0..n).find(|&c| !v[c].is_zero()) {
            let inv = v[p].recip();
            let v: Vec<Q> = v.iter().map(|x| x * &inv).collect();
            for (_, b) in reduced.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for c in 0..n {
                        let sub = &f * &v[c];
                        b[c] -= sub;
                    }
                }
            }
            reduced.push((p, v));
        }
    }
    let pivots: BTreeSet<usize> = reduced.iter().map(|(p, _)| *p).collect();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); n];
        v[free] = Q::one();
        for (p, b) in &reduced {
            v[*p] = -b[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Vertices from every `r`-subset of constraints, or `None` past `cap` subsets.
pub fn bruteforce_vertices(poly: &PGammaPolytope<'_>, cap: u128) -> Option<BTreeSet<Vector>> {
    let cons = Constraints::of(poly);
    let rs = poly.root_system();
    let r = rs.rank();
    let m = cons.normals.len();
    if combos(m, r) > cap {
        return None;
    }
    let n = rs.ambient_dim();
    let simple: Vec<Vec<Q>> = rs
        .simple_vectors()
        .iter()
        .map(|v| v.coords().to_vec())
        .collect();
    let comp = complement(&simple, n);
    let mut out = BTreeSet::new();
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let mut rows: Vec<Vec<Q>> = idx.iter().map(|&i| cons.normals[i].clone()).collect();
        let mut rhs: Vec<Q> = idx.iter().map(|&i| cons.bounds[i].clone()).collect();
        rows.extend(comp.iter().cloned());
        rhs.extend(comp.iter().map(|_| Q::zero()));
        if let Some(x) = unique_solution(rows, rhs, n) {
            if cons.feasible(&x) {
                out.insert(Vector::new(x));
            }
        }
        let Some(k) = (0..r).rev().find(|&k| idx[k] < m - r + k) else {
            return Some(out);
        };
        idx[k] += 1;
        for j in k + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Samples `P_Γ` on a grid of denominator `density` and checks the claimed
/// vertices and maximum.
pub fn vertex_check_oracle(poly: &PGammaPolytope<'_>, density: u32) -> OracleReport {
    let cons = Constraints::of(poly);
    let rs = poly.root_system();
    let subject = format!("{} / {}", rs.id(), poly.gamma());
    let mut mismatches = Vec::new();
    let mut flag = |item: String, in_primary: bool, in_oracle: bool| {
        mismatches.push(Mismatch {
            item,
            in_primary,
            in_oracle,
        })
    };
    let verts: Vec<Vec<Q>> = poly
        .vertices()
        .iter()
        .map(|v| v.point.coords().to_vec())
        .collect();
    let d = density.max(1) as i64;

    for v in &verts {
        if !cons.feasible(v) {
            flag(
                format!("vertex {} infeasible", Vector::new(v.clone())),
                true,
                false,
            );
        }
    }
    let n = verts.len();
    let stride = (n * n / 4000).max(1);
    for (k, (i, j)) in (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .enumerate()
    {
        if k % stride != 0 {
            continue;
        }
        for t in 1..d {
            let (a, b) = (Q::new(t.into(), d.into()), Q::new((d - t).into(), d.into()));
            let p: Vec<Q> = verts[i]
                .iter()
                .zip(&verts[j])
                .map(|(x, y)| x * &a + y * &b)
                .collect();
            if !cons.feasible(&p) {
                flag(
                    format!("combination {} infeasible", Vector::new(p)),
                    false,
                    true,
                );
            }
        }
    }

    let claimed = poly.max_prime_norm();
    let maxima = max_prime(poly);
    if maxima.is_empty() {
        flag("no maximal point".into(), false, true);
    }
    for b in &maxima {
        let x = b.scaled_vector.coords();
        if !cons.feasible(x) || !cons.on_prime(x) || cons.norm(x) != claimed {
            flag(
                format!("maximal point {} not on P'", b.scaled_vector),
                true,
                false,
            );
        }
    }

    let corners: Vec<Vec<Q>> = poly
        .cartan()
        .corners()
        .iter()
        .map(|e| e.coords().to_vec())
        .collect();
    let r = corners.len();
    let dim = corners[0].len();
    let mut counts = vec![0i64; r];
    'grid: loop {
        if counts.iter().any(|&c| c != 0) {
            let mut x = vec![Q::zero(); dim];
            for (c, e) in counts.iter().zip(&corners) {
                let w = Q::new((*c).into(), d.into());
                for (xi, ei) in x.iter_mut().zip(e) {
                    *xi += &w * ei;
                }
            }
            if let Some(y) = cons.project(&x) {
                if !cons.feasible(&y) {
                    flag(
                        format!("projection {} infeasible", Vector::new(y)),
                        false,
                        true,
                    );
                } else if cons.norm(&y) > claimed {
                    flag(
                        format!("point {} beats the maximum", Vector::new(y)),
                        false,
                        true,
                    );
                }
            }
        }
        let mut k = 0;
        loop {
            if k == r {
                break 'grid;
            }
            counts[k] += 1;
            if counts.iter().sum::<i64>() <= d {
                break;
            }
            counts[k] = 0;
            k += 1;
        }
    }

    if let Some(brute) = bruteforce_vertices(poly, 50_000) {
        let primary: BTreeSet<Vector> = poly.vertices().iter().map(|v| v.point.clone()).collect();
        for v in primary.symmetric_difference(&brute) {
            flag(
                format!("vertex {v}"),
                primary.contains(v),
                brute.contains(v),
            );
        }
    }
    OracleReport::new(subject, mismatches)
}
