//! Enumerate the positive roots of an affine A-type orientation, classify
//! each one, and realize the catalog of indecomposables.
//!
//! Run with `cargo run --example roots_and_defect`.

use quiverlab::quiver::{DimVector, Quiver};
use quiverlab::roots::{classify_root, indecomposable_catalog, positive_roots_up_to, RootKind};
use std::sync::Arc;

fn main() {
    let q = Arc::new(Quiver::affine_a(2, "++-").unwrap());
    println!("quiver: {q}");
    println!("admissible sink sequence: {:?}", q.admissible_sink_sequence().unwrap());

    let bound = q.delta().scaled(2);
    println!("\npositive roots up to {bound}:");
    for record in positive_roots_up_to(&q, &bound).unwrap() {
        println!(
            "  {:<8} {:<10} defect {:>2}   {}",
            record.vector.to_string(),
            record.kind.to_string(),
            record.defect,
            record.class
        );
    }

    // dimension vectors that are not roots are recognized as such
    for d in [DimVector::new(vec![2, 0, 0]), DimVector::new(vec![2, 1, 0])] {
        println!("\nclassify {d}: {:?}", classify_root(&q, &d).unwrap().map(|r| r.class));
    }

    // the catalog realizes one indecomposable per real root, and for each
    // imaginary root one per tube position plus a homogeneous family marker
    let catalog = indecomposable_catalog(&q, &bound).unwrap();
    let reals = catalog
        .iter()
        .filter(|e| e.record.kind == RootKind::Real)
        .count();
    println!("\ncatalog up to {bound}: {} entries ({} real)", catalog.len(), reals);
    for entry in catalog.iter().take(4) {
        println!("  {} realized with dims {}", entry.record.class, entry.rep.dims());
    }
}
