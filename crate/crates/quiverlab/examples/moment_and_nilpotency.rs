//! The moment map on the doubled quiver and membership in the nilpotent
//! moment-zero locus, including the cyclic-quiver case where nilpotency is a
//! real constraint.
//!
//! Run with `cargo run --example moment_and_nilpotency`.

use quiverlab::linalg::{format_rat, Matrix};
use quiverlab::quiver::{DimVector, Quiver};
use quiverlab::rep::{lambda_membership, moment_map, FullRep, Rep};
use std::sync::Arc;

fn main() {
    let q = Arc::new(Quiver::affine_a(2, "++-").unwrap());

    // a point of the doubled space with both forward and backward components
    let mut x = FullRep::zero(q.clone(), DimVector::delta(3));
    let arrows = q.arrows();
    x.set_map(arrows[0], Matrix::identity(1)); // 0 -> 1
    x.set_map(arrows[1], Matrix::identity(1)); // 1 -> 2
    x.set_map(q.bar(arrows[0]), Matrix::identity(1)); // the reverse of 0 -> 1
    let psi = moment_map(&x);
    println!("moment blocks of a mixed point:");
    for (i, b) in psi.blocks().iter().enumerate() {
        println!("  Psi_{i} = {}", format_rat(b.get(0, 0)));
    }
    println!("report: {:?}", lambda_membership(&x));

    // zero-extensions over an acyclic orientation are always in the locus
    let rep = Rep::simple(q.clone(), 1);
    println!("\nzero-extension of S_1: {:?}", lambda_membership(&rep.extend_by_zero()));

    // over an oriented cycle, an invertible monodromy defeats nilpotency
    let c = Arc::new(Quiver::cyclic(3));
    let wheel = Rep::new(c.clone(), DimVector::delta(3), vec![Matrix::identity(1); 3]);
    println!(
        "\ninvertible cycle on the oriented 3-cycle: {:?}",
        lambda_membership(&wheel.extend_by_zero())
    );
    let nil = Rep::new(
        c.clone(),
        DimVector::delta(3),
        vec![Matrix::identity(1), Matrix::identity(1), Matrix::zeros(1, 1)],
    );
    println!(
        "breaking one map restores nilpotency: {:?}",
        lambda_membership(&nil.extend_by_zero())
    );
}
