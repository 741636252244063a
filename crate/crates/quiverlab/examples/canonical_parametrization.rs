//! Enumerate the parametrization pairs (sigma, lambda) for a dimension
//! vector, build stratum representatives, and compute stratum dimensions.
//!
//! Run with `cargo run --example canonical_parametrization`.

use quiverlab::param::{
    check_open_stratum, default_parameters, enumerate_phi, stratum_dim, stratum_representative,
    IndecLabel, SigmaLambda,
};
use quiverlab::quiver::Quiver;
use quiverlab::rep::ambient_dim;
use std::collections::BTreeMap;
use std::sync::Arc;

fn main() {
    let q = Arc::new(Quiver::affine_a(2, "++-").unwrap());
    let delta = q.delta();
    println!("quiver: {q}");

    let pairs = enumerate_phi(&q, &delta).unwrap();
    println!(
        "\nphi({delta}) has {} pairs; ambient dim E = {}:",
        pairs.len(),
        ambient_dim(&q, &delta)
    );
    for sl in &pairs {
        let dim = stratum_dim(&q, sl).unwrap();
        println!("  dim {:>2}  {}", dim, sl.describe());
    }

    // an explicit representative of the dense stratum, with the default
    // prime parameters
    let dense = SigmaLambda { sigma: BTreeMap::new(), lambda: vec![1] };
    let x = stratum_representative(&q, &dense, &default_parameters(1)).unwrap();
    println!("\ndense stratum representative has dims {} and maps:", x.dims());
    for (k, &h) in q.arrows().iter().enumerate() {
        println!(
            "  {}->{}: {}",
            q.start(h),
            q.end(h),
            quiverlab::linalg::format_rat(x.map(k).get(0, 0))
        );
    }

    // the openness criterion accepts single-class rigid strata and rejects
    // genuinely degenerate ones
    let rigid = SigmaLambda {
        sigma: BTreeMap::from([(IndecLabel::Preprojective { depth: 0, vertex: 0 }, 2)]),
        lambda: vec![],
    };
    println!(
        "\ntwo copies of P(0): open = {}",
        check_open_stratum(&q, &rigid).unwrap()
    );
    let mixed = SigmaLambda {
        sigma: BTreeMap::from([
            (IndecLabel::Preprojective { depth: 0, vertex: 2 }, 1),
            (IndecLabel::Preinjective { depth: 0, vertex: 1 }, 1),
        ]),
        lambda: vec![],
    };
    println!("S_2 + I(1): open = {}", check_open_stratum(&q, &mixed).unwrap());

    // a larger dimension vector for scale
    let two_delta = delta.scaled(2);
    let pairs = enumerate_phi(&q, &two_delta).unwrap();
    println!("\nphi({two_delta}) has {} pairs", pairs.len());
}
