//! Checks `rank + Σ m_α = dim M` for every catalog row on a small grid.

use antipodal_atlas::catalog::{classical_dim, dim_space, param_grid, spaces};

fn main() {
    let mut checked = 0;
    for s in spaces() {
        for p in param_grid(s, 6, 2) {
            let from_roots = dim_space(s, p).expect("multiplicities");
            let classical = classical_dim(s, p).expect("dimension formula");
            if from_roots != classical {
                println!("{} at {p:?}: {from_roots} != {classical}", s.display_name());
            }
            checked += 1;
        }
    }
    println!("{checked} (space, parameter) pairs checked");
}
