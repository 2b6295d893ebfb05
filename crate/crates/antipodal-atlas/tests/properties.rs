use std::collections::BTreeSet;

use antipodal_atlas::antipodal::{
    antipodal_report, j_single, sigma_x, tangent_roots, ReportOptions, ReportRecord,
};
use antipodal_atlas::catalog::{self, Params, SpaceDescriptor};
use antipodal_atlas::exact::{frac, Vector};
use antipodal_atlas::polyhedron::{cartan_polyhedron, max_prime, p_gamma, BaseForm, BasePoint};
use antipodal_atlas::quotients::{subgroups, GammaSubgroup};
use antipodal_atlas::rootsys::{build, Family, RootSystem, RootSystemId};
use proptest::prelude::*;

fn system() -> impl Strategy<Value = RootSystem> {
    (0..Family::ALL.len(), 1usize..=8).prop_filter_map("valid rank", |(f, n)| {
        let family = Family::ALL[f];
        let n = family.fixed_rank().unwrap_or(n.max(family.min_rank()));
        RootSystemId::new(family, n)
            .ok()
            .map(|id| build(id).unwrap())
    })
}

fn corner(rs: &RootSystem, j: usize) -> BasePoint {
    BasePoint {
        form: BaseForm::SingleCorner(j),
        scaled_vector: cartan_polyhedron(rs).corner(j).clone(),
    }
}

fn vectors<'a>(
    roots: impl IntoIterator<Item = &'a antipodal_atlas::rootsys::Root>,
) -> BTreeSet<Vector> {
    roots.into_iter().map(|r| r.vector.clone()).collect()
}

fn cases() -> Vec<(&'static SpaceDescriptor, Params, Option<GammaSubgroup>)> {
    let mut out = Vec::new();
    for s in catalog::spaces() {
        for p in catalog::param_grid(s, 6, 2) {
            let rs = build(s.sigma(p).unwrap()).unwrap();
            if !s.is_quotient() {
                out.push((s, p, None));
                continue;
            }
            for g in subgroups(&rs)
                .into_iter()
                .filter(|g| s.admits(g) && !g.is_marker())
            {
                out.push((s, p, Some(g)));
            }
        }
    }
    out
}

fn case() -> impl Strategy<Value = (&'static SpaceDescriptor, Params, Option<GammaSubgroup>)> {
    let all = cases();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn maximal_corners_ignore_metric_scale(rs in system(), n in 1i64..7, d in 1i64..7) {
        let scaled = rs.with_metric_scale(frac(n, d));
        prop_assert_eq!(
            cartan_polyhedron(&rs).maximal_corners(),
            cartan_polyhedron(&scaled).maximal_corners()
        );
    }

    #[test]
    fn isotropy_and_tangent_roots_are_disjoint(rs in system(), j in 1usize..=8) {
        let j = 1 + (j - 1) % rs.rank();
        let base = corner(&rs, j);
        let iso: BTreeSet<Vector> = vectors(sigma_x(&rs, &base).roots());
        let tan = vectors(tangent_roots(&rs, &base));
        prop_assert!(iso.is_disjoint(&tan));
    }

    #[test]
    fn isotropy_is_a_subsystem(rs in system(), j in 1usize..=8) {
        let j = 1 + (j - 1) % rs.rank();
        prop_assert!(sigma_x(&rs, &corner(&rs, j)).subsystem_check());
    }

    #[test]
    fn single_corner_formula_matches_unified_test(rs in system(), j in 1usize..=8) {
        let j = 1 + (j - 1) % rs.rank();
        let unified = vectors(tangent_roots(&rs, &corner(&rs, j)));
        let single = vectors(j_single(&rs, j).unwrap());
        prop_assert_eq!(unified, single);
    }

    #[test]
    fn quotient_maxima_never_exceed_the_corners(rs in system()) {
        let cp = cartan_polyhedron(&rs);
        let top = cp.squared_norms().iter().max().unwrap().clone();
        for g in subgroups(&rs).into_iter().filter(|g| !g.is_marker()) {
            let poly = p_gamma(&rs, &g).unwrap();
            prop_assert!(poly.max_prime_norm() <= top);
            for b in max_prime(&poly) {
                prop_assert!(poly.is_prime_point(&b.scaled_vector));
            }
        }
    }

    #[test]
    fn report_json_round_trips((s, p, g) in case()) {
        let report = antipodal_report(s, p, g.as_ref(), ReportOptions::default()).unwrap();
        let record = ReportRecord::from(&report);
        let text = serde_json::to_string(&record).unwrap();
        let back: ReportRecord = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, record);
    }

    #[test]
    fn printed_formula_matches_engine_off_errata((s, p, g) in case()) {
        prop_assume!(s.erratum(p.r).is_none());
        let Some(printed) = s.printed_dims(p).unwrap() else { return Ok(()) };
        let report = antipodal_report(s, p, g.as_ref(), ReportOptions::default()).unwrap();
        prop_assert_eq!(report.dimensions(), printed, "{} at {:?}", s.display_name(), p);
    }

    #[test]
    fn orbit_dimension_is_bounded_by_dim_m((s, p, g) in case()) {
        let report = antipodal_report(s, p, g.as_ref(), ReportOptions::default()).unwrap();
        let dim = catalog::classical_dim(s, p).unwrap();
        for o in &report.orbits {
            prop_assert!(o.dimension < dim);
        }
    }
}
