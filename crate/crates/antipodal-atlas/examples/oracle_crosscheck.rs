//! Compares the engine with the independent oracles: root enumeration by
//! reflection closure and a grid sample of each quotient polytope.

use antipodal_atlas::oracle::{roots_report, vertex_check_oracle};
use antipodal_atlas::polyhedron::p_gamma;
use antipodal_atlas::quotients::subgroups;
use antipodal_atlas::rootsys::build;

fn main() {
    for label in [
        "a_5", "b_4", "c_5", "d_6", "e6", "e7", "e8", "f4", "g2", "bc_3",
    ] {
        let id = label.parse().expect("known system");
        let roots = roots_report(id);
        println!(
            "{:<5} roots: {}",
            roots.subject,
            if roots.agreed { "agree" } else { "DIFFER" }
        );
        let rs = build(id).expect("builds");
        for g in subgroups(&rs).into_iter().filter(|g| !g.is_marker()) {
            let poly = p_gamma(&rs, &g).expect("polytope");
            let r = vertex_check_oracle(&poly, 4);
            println!(
                "      Γ = {g}: {}",
                if r.agreed { "agree" } else { "DIFFER" }
            );
            for m in &r.mismatches {
                println!("        {}", m.item);
            }
        }
    }
}
