//! Which regular n-gons each tool set reaches.
//!
//! Compass and straightedge: n = 2^s times distinct Fermat primes (Gauss).
//! Folding: n = 2^r 3^s times distinct Pierpont primes, every euclidean
//! polygon plus infinitely many more, starting with the 7-gon.

use origami::constructibility::{
    origami_ngon_constructible, zul_ngon_constructible, TriState,
};

fn main() {
    println!("  n  compass  origami  witness");
    for n in 3..=30u64 {
        let z = zul_ngon_constructible(n).unwrap();
        let o = origami_ngon_constructible(n).unwrap();
        println!(
            "{n:>3}  {:<7}  {:<7}  {}",
            z.zul.as_str(),
            o.origami.as_str(),
            o.witness
        );
    }

    let fold_only: Vec<u64> = (3..=100)
        .filter(|&n| {
            let r = origami_ngon_constructible(n).unwrap();
            r.origami == TriState::Yes && r.zul == TriState::No
        })
        .collect();
    println!("\nfoldable but not euclidean, n <= 100: {fold_only:?}");
}
