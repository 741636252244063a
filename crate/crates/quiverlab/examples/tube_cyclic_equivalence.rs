//! The equivalence between a tube of period p and nilpotent representations
//! of the cyclic quiver on Z/pZ: the functors F and G, the exact identity
//! F(G(W)) = W, and the natural isomorphism exhibiting G(F(M)) ~ M.
//!
//! Run with `cargo run --example tube_cyclic_equivalence`.

use quiverlab::linalg::QMat;
use quiverlab::quiver::Quiver;
use quiverlab::rep::GradedMap;
use quiverlab::tubes::{
    cyclic_indec, f_map, find_tubes, g_map, natural_iso_alpha, tube_indec, SegmentMultiset,
};
use std::sync::Arc;

fn main() {
    let q = Arc::new(Quiver::affine_a(3, "+++-").unwrap());
    let tube = &find_tubes(&q).unwrap()[0];
    println!("quiver: {q}");
    println!("tube of period {} with supports {:?}", tube.period(), tube.supports());

    // uniserial members carry the cyclic uniserials through G
    for (r, m) in [(0, 1), (1, 2), (0, 3), (2, 4)] {
        let member = tube_indec(tube, r, m);
        println!("member (r={r}, m={m}) has dims {}", member.dims());
    }

    // F . G is the identity on cyclic representations, on the nose
    let w = SegmentMultiset::from_pairs(&[(0, 2), (1, 1), (2, 3)]).build_rep(tube.period());
    let image = g_map(tube, &w).unwrap();
    let back = f_map(tube, &image).unwrap();
    println!("\nF(G(W)) == W exactly: {}", back == w);

    // the natural isomorphism: on the image of G it is the identity, and on
    // a conjugated representative it is a nontrivial invertible morphism
    let member = g_map(tube, &cyclic_indec(tube.period(), 1, 3)).unwrap();
    let alpha = natural_iso_alpha(tube, &member).unwrap();
    println!("alpha on a G-image is the identity: {}", alpha == GradedMap::identity(member.dims()));

    let g = GradedMap {
        blocks: (0..q.vertex_count())
            .map(|i| {
                let d = member.dim_at(i);
                QMat::from_fn(d, d, |r, c| {
                    quiverlab::linalg::rat(if r == c { 2 } else if c > r { 1 } else { 0 })
                })
            })
            .collect(),
    };
    let conj = member.transported(&g);
    let alpha = natural_iso_alpha(tube, &conj).unwrap();
    let gf = g_map(tube, &f_map(tube, &conj).unwrap()).unwrap();
    let is_morphism = q.arrows().iter().enumerate().all(|(k, &h)| {
        conj.map(k).matmul(&alpha.blocks[q.start(h)]) == alpha.blocks[q.end(h)].matmul(gf.map(k))
    });
    println!(
        "on a conjugate, alpha: G(F(M)) -> M is invertible ({}) and a morphism ({})",
        alpha.is_invertible(),
        is_morphism
    );
}
