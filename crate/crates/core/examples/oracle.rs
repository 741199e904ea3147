//! Characters from the Murnaghan–Nakayama rule.
//!
//! ```text
//! cargo run --example oracle
//! ```

use rectchar::mn_oracle::{character_mn, normalized_character};
use rectchar::young::{dim_f, partitions_of, rectangle, Partition};

fn main() {
    // the character table of S_4, rows are irreducibles, columns classes
    let classes = partitions_of(4);
    print!("{:>10}", "");
    for mu in &classes {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for lambda in &classes {
        print!("{:>10}", lambda.to_string());
        for mu in &classes {
            print!("{:>10}", character_mn(lambda, mu).unwrap());
        }
        println!();
    }

    let shape = rectangle(3, 4);
    println!("\nf^{shape} = {}", dim_f(&shape));
    for pi in ["1", "2", "3", "2,1", "2,2"] {
        let pi: Partition = pi.parse().unwrap();
        println!("Ch_{pi}({shape}) = {}", normalized_character(&pi, &shape));
    }
}
