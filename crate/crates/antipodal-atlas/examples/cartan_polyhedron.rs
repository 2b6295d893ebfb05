//! Corners of the Cartan polyhedron, their squared norms and the maximal ones.
//!
//! cargo run --example cartan_polyhedron -- b_4

use antipodal_atlas::polyhedron::cartan_polyhedron;
use antipodal_atlas::rootsys::build;

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "e8".into());
    let rs = build(label.parse().expect("a root system such as b_4 or e8")).expect("builds");
    let cp = cartan_polyhedron(&rs);
    let top = cp.maximal_corners();
    for j in 1..=rs.rank() {
        let mark = if top.contains(&j) { "  max" } else { "" };
        println!(
            "e_{j} = {}  |e_{j}|^2 = {}  d_{j} = {}{mark}",
            cp.corner(j),
            cp.squared_norm(j),
            rs.d_j(j)
        );
    }
    for b in cp.maximal_base_points() {
        println!("antipodal base point: {}", b.form);
    }
}
