//! Discover the non-homogeneous tubes of several orientations and check the
//! census identity: the periods satisfy sum (p - 1) = N - 2.
//!
//! Run with `cargo run --example tube_discovery`.

use quiverlab::quiver::Quiver;
use quiverlab::tubes::find_tubes;
use std::sync::Arc;

fn main() {
    for (n, word) in
        [(1, "+-"), (2, "++-"), (3, "++--"), (3, "+++-"), (4, "++-+-"), (5, "+++---")]
    {
        let q = Arc::new(Quiver::affine_a(n, word).unwrap());
        let tubes = find_tubes(&q).unwrap();
        println!("A~{n} \"{word}\": {} non-homogeneous tube(s)", tubes.len());
        for (i, t) in tubes.iter().enumerate() {
            println!("  tube {i}: period {}", t.period());
            for r in 0..t.period() {
                let h = t.connecting_arrow(r);
                println!(
                    "    position {r}: support {:?}, source {}, sink {}, connecting {}->{}",
                    t.support(r),
                    t.source(r),
                    t.sink(r),
                    q.start(h),
                    q.end(h)
                );
            }
        }
        let census: usize = tubes.iter().map(|t| t.period() - 1).sum();
        println!("  census: sum (p - 1) = {census} = N - 2 = {}\n", n - 1);
    }
}
