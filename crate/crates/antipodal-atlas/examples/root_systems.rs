//! Builds a root system and prints its simple roots, highest root and size.
//!
//! cargo run --example root_systems -- d_6

use antipodal_atlas::rootsys::{build, RootSystemId};

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "f4".into());
    let id: RootSystemId = match label.parse() {
        Ok(id) => id,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let rs = build(id).expect("standard realization");
    println!(
        "{id}: rank {}, ambient dimension {}",
        rs.rank(),
        rs.ambient_dim()
    );
    for (i, a) in rs.simple_roots().iter().enumerate() {
        println!("  alpha_{} = {} ({})", i + 1, a.vector, a.length_class);
    }
    println!("  highest root = {}", rs.highest_root().vector);
    println!("  d = {:?}", rs.d());
    println!("  |positive roots| = {}", rs.positive_roots().len());
    for (class, roots) in rs.length_classes() {
        println!("  {class}: {} positive roots", roots.len());
    }
}
