//! Cuts the Cartan polyhedron by each central subgroup and reports `max(P_Γ')`.
//!
//! cargo run --example quotient_polytope -- d_8

use antipodal_atlas::polyhedron::{max_prime, p_gamma};
use antipodal_atlas::quotients::{center, subgroups};
use antipodal_atlas::rootsys::build;

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "d_8".into());
    let rs = build(label.parse().expect("a root system such as c_5")).expect("builds");
    let z = center(&rs);
    println!(
        "{}: center {} from corners {:?}",
        rs.id(),
        z.group_iso,
        z.order_one_corners
    );
    for g in subgroups(&rs).into_iter().filter(|g| !g.is_marker()) {
        let poly = p_gamma(&rs, &g).expect("nontrivial subgroup");
        let prime = poly.on_prime().iter().filter(|&&p| p).count();
        println!(
            "Γ = {g}: {} vertices, {prime} on P_Γ', max squared norm {}",
            poly.vertices().len(),
            poly.max_prime_norm()
        );
        for b in max_prime(&poly) {
            println!("    {} at {}", b.form, b.scaled_vector);
        }
    }
}
