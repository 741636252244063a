//! Reflection functors at sinks and sources, the standard projectives and
//! injectives they generate, and the Coxeter functor that strings them
//! together.
//!
//! Run with `cargo run --example reflection_functors`.

use quiverlab::quiver::Quiver;
use quiverlab::rep::{is_isomorphic, Rep};
use quiverlab::roots::{
    coxeter_functor, coxeter_transform, reflect, standard_rep, Direction, StandardKind,
};
use std::sync::Arc;

fn main() {
    let q = Arc::new(Quiver::affine_a(2, "++-").unwrap());
    println!("quiver: {q}");

    // reflecting the simple at a sink kills it
    let s2 = Rep::simple(q.clone(), 2);
    let dead = reflect(&s2, 2, Direction::Plus).unwrap();
    println!("reflect S_2 at the sink 2: dims {} (zero: {})", dead.dims(), dead.is_zero_rep());

    // projectives and injectives arise from reflection chains on simples
    for i in 0..q.vertex_count() {
        let p = standard_rep(&q, StandardKind::Projective, i).unwrap();
        let inj = standard_rep(&q, StandardKind::Injective, i).unwrap();
        println!("P({i}) has dims {:<8} I({i}) has dims {}", p.dims().to_string(), inj.dims());
    }

    // the Coxeter functor eventually kills every projective
    let mut rep = standard_rep(&q, StandardKind::Projective, 0).unwrap();
    let mut step = 0;
    while !rep.is_zero_rep() {
        println!("(Phi+)^{step} P(0) has dims {}", rep.dims());
        rep = coxeter_functor(&rep, Direction::Plus).unwrap();
        step += 1;
    }
    println!("(Phi+)^{step} P(0) = 0");

    // on non-projectives its dimension vector follows the Coxeter transform
    let i2 = standard_rep(&q, StandardKind::Injective, 2).unwrap();
    let moved = coxeter_functor(&i2, Direction::Plus).unwrap();
    let predicted = coxeter_transform(&q, i2.dims(), 1).unwrap();
    println!("\ndim Phi+(I(2)) = {} = c(dim I(2)) = {}", moved.dims(), predicted);

    // minus undoes plus away from the killed summands
    let back = coxeter_functor(&moved, Direction::Minus).unwrap();
    println!("Phi- Phi+ I(2) isomorphic to I(2): {}", is_isomorphic(&back, &i2).unwrap());
}
