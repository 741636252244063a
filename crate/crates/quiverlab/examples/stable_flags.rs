//! Exhaustive counting of stable flags over small prime fields, with the
//! Gaussian-binomial sanity case and base-change invariance.
//!
//! Run with `cargo run --example stable_flags`.

use quiverlab::linalg::{Fp, Matrix};
use quiverlab::param::{count_stable_flags, FlagType, FpRep};
use quiverlab::quiver::{DimVector, Quiver};
use quiverlab::rep::Rep;
use quiverlab::roots::{standard_rep, StandardKind};
use std::sync::Arc;

fn main() {
    let q = Arc::new(Quiver::affine_a(2, "++-").unwrap());

    // with the zero map, flags are unconstrained: lines in F_2^2
    let plane = Rep::zero(q.clone(), DimVector::new(vec![2, 0, 0]));
    let x = FpRep::from_rational(&plane, 2).unwrap();
    let ft = FlagType(vec![DimVector::unit(3, 0), DimVector::unit(3, 0)]);
    println!("flags of type (e0, e0) on F_2^2 at vertex 0: {}", count_stable_flags(&x, &ft).unwrap());

    // a full composition series type over each of two primes
    let p0 = standard_rep(&q, StandardKind::Projective, 0).unwrap();
    println!("P(0) has dims {}", p0.dims());
    let ft = FlagType(vec![
        DimVector::unit(3, 0),
        DimVector::unit(3, 1),
        DimVector::unit(3, 2),
        DimVector::unit(3, 2),
    ]);
    for p in [2u64, 3] {
        let x = FpRep::from_rational(&p0, p).unwrap();
        println!("stable flags of P(0) over F_{p}: {}", count_stable_flags(&x, &ft).unwrap());
    }

    // counts are invariant under base change
    let x = FpRep::from_rational(&p0, 3).unwrap();
    let g = vec![
        Matrix::from_rows(vec![vec![Fp::new(2, 3)]]),
        Matrix::from_rows(vec![vec![Fp::new(1, 3)]]),
        Matrix::from_rows(vec![
            vec![Fp::new(1, 3), Fp::new(2, 3)],
            vec![Fp::new(0, 3), Fp::new(1, 3)],
        ]),
    ];
    let moved = x.transported(&g);
    println!(
        "after a base change: {} (same count)",
        count_stable_flags(&moved, &ft).unwrap()
    );
}
