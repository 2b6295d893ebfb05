//! Antipodal orbits of one space, looked up by name, rank of Σ and subgroup.
//!
//! cargo run --example antipodal_report -- "Sp(r)" 5 Z_2

use antipodal_atlas::antipodal::{antipodal_report, resolve, ReportOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "E VIII".into());
    let rank = args.next().map(|r| r.parse().expect("rank of Σ"));
    let gamma = args.next();
    let (space, params, g) = match resolve(&name, rank, None, gamma.as_deref()) {
        Ok(hit) => hit,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let report =
        antipodal_report(space, params, g.as_ref(), ReportOptions::default()).expect("report");
    println!(
        "{} with Σ = {}",
        space.display_name(),
        report.root_system.id()
    );
    if let Some(g) = &report.gamma {
        println!("Γ = {g}");
    }
    for o in &report.orbits {
        println!(
            "  base {}: {} tangent roots, isotropy {} roots, dimension {}",
            o.base.form,
            o.tangent_roots.len(),
            o.sigma_x.len(),
            o.dimension
        );
    }
}
