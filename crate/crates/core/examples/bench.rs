//! Timing the three engines side by side, as `rectchar bench` does.
//!
//! ```text
//! cargo run --release --example bench
//! ```

use rectchar::cli::{cmd_bench, Caps};

fn main() {
    let caps = Caps::default();
    for (p, q) in [(3, 4), (5, 5), (7, 8), (1000, 1001)] {
        let rows = cmd_bench(&[1, 3, 5, 7, 9], p, q, None, &caps).expect("engines agree");
        for r in rows {
            println!(
                "{:>5} x {:<5} k = {}  {:<8} {:>12} ns  {}",
                p,
                q,
                r.inputs.k,
                r.method.name(),
                r.elapsed_ns,
                r.value
            );
        }
    }
}
