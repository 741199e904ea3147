//! The closed product formula against the oracle, then on a huge rectangle.
//!
//! ```text
//! cargo run --release --example closed_form
//! ```

use std::time::Instant;

use rectchar::closed::{ch_rect_fast, CycleParity, DiffParity, Family, ParityCase};
use rectchar::mn_oracle::normalized_character;
use rectchar::young::{rectangle, Partition};

fn main() {
    println!("  k  p  q  family  value");
    for (k, p, q) in [
        (3, 2, 2),
        (3, 2, 5),
        (4, 3, 3),
        (4, 2, 5),
        (5, 4, 6),
        (6, 3, 6),
    ] {
        let fast = ch_rect_fast(k, p, q).unwrap();
        let oracle = normalized_character(
            &Partition::new(vec![k as usize]).unwrap(),
            &rectangle(p as usize, q as usize),
        );
        assert_eq!(fast, oracle);
        let family =
            ParityCase::new(CycleParity::of(k), DiffParity::of(q as i64 - p as i64)).family();
        println!("{k:>3}{p:>3}{q:>3}  {family}       {fast}");
    }

    let start = Instant::now();
    let v = ch_rect_fast(99, 1_000_001, 1_000_003).unwrap();
    println!("\nCh_99(1000001 x 1000003) = {v}");
    println!("computed in {:?} ({} family)", start.elapsed(), Family::G);
}
