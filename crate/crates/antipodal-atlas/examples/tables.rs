//! Prints a table symbolically, or evaluated at `r` (and `q`).
//!
//! cargo run --example tables -- 6 r=4

use antipodal_atlas::tables::{build, TableOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u8 = args.next().map_or(1, |s| s.parse().expect("table number"));
    let evaluate = args.next().map(|s| s.parse().expect("r=…[,q=…]"));
    let table = build(
        n,
        TableOptions {
            ascii: false,
            evaluate,
        },
    )
    .expect("table");
    print!("{}", table.render_text());
}
