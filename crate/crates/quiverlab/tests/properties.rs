//! Property tests for the structural invariants.

use proptest::prelude::*;
use quiverlab::linalg::{rat_frac, Matrix, QMat};
use quiverlab::quiver::{DimVector, Quiver};
use quiverlab::rep::{euler_form, ext_dim, hom_dim, Rep};
use quiverlab::tubes::{f_map, find_tubes, g_map, SegmentMultiset};
use std::sync::Arc;

/// Orientation words that avoid the constant (cyclic) cases.
fn acyclic_word() -> impl Strategy<Value = (usize, String)> {
    (1usize..=5)
        .prop_flat_map(|n| {
            proptest::collection::vec(prop_oneof![Just('+'), Just('-')], n + 1)
                .prop_map(move |chars| (n, chars.into_iter().collect::<String>()))
        })
        .prop_filter("not an oriented cycle", |(_, w)| {
            w.contains('+') && w.contains('-')
        })
}

proptest! {
    #[test]
    fn sigma_reverse_is_involutive((n, word) in acyclic_word(), pick in 0usize..6) {
        let q = Quiver::affine_a(n, &word).unwrap();
        let i = pick % q.vertex_count();
        prop_assert_eq!(q.sigma_reverse(i).unwrap().sigma_reverse(i).unwrap(), q);
    }

    #[test]
    fn admissible_sequence_composes_to_identity((n, word) in acyclic_word()) {
        let q = Quiver::affine_a(n, &word).unwrap();
        let seq = q.admissible_sink_sequence().unwrap();
        prop_assert_eq!(seq.len(), q.vertex_count());
        let mut current = q.clone();
        for &i in &seq {
            prop_assert!(current.is_sink(i), "vertex {} is not a sink at its stage", i);
            current = current.sigma_reverse(i).unwrap();
        }
        prop_assert_eq!(current, q);
    }

    #[test]
    fn kernel_and_cokernel_shapes(
        rows in 0usize..5,
        cols in 0usize..5,
        entries in proptest::collection::vec((-6i64..=6, 1i64..=4), 25),
    ) {
        let m: QMat = Matrix::from_fn(rows, cols, |i, j| {
            let (n, d) = entries[i * 5 + j];
            rat_frac(n, d)
        });
        let rank = m.rank();
        prop_assert_eq!(m.kernel_matrix().cols(), cols - rank);
        let p = m.cokernel_projection();
        prop_assert_eq!(p.rows(), rows - rank);
        prop_assert!(p.matmul(&m).is_zero());
    }

    #[test]
    fn euler_identity_on_random_representations(
        dims in proptest::collection::vec(0i64..=2, 6),
        entries in proptest::collection::vec(-2i64..=2, 32),
    ) {
        let q = Arc::new(Quiver::affine_a(2, "++-").unwrap());
        let da = DimVector::new(dims[..3].to_vec());
        let db = DimVector::new(dims[3..].to_vec());
        let mut cursor = 0;
        let mut build = |d: &DimVector| {
            let maps = q
                .arrows()
                .iter()
                .map(|&h| {
                    Matrix::from_fn(d[q.end(h)] as usize, d[q.start(h)] as usize, |_, _| {
                        cursor += 1;
                        quiverlab::linalg::rat(entries[cursor % entries.len()])
                    })
                })
                .collect();
            Rep::new(q.clone(), d.clone(), maps)
        };
        let a = build(&da);
        let b = build(&db);
        let hom = hom_dim(&a, &b).unwrap() as i64;
        let ext = ext_dim(&a, &b).unwrap() as i64;
        prop_assert_eq!(hom - ext, euler_form(&q, &da, &db).unwrap());
    }

    #[test]
    fn tube_equivalence_round_trips(
        segs in proptest::collection::vec((0usize..2, 1usize..4), 1..4),
    ) {
        let q = Arc::new(Quiver::affine_a(2, "++-").unwrap());
        let tube = &find_tubes(&q).unwrap()[0];
        let w = SegmentMultiset::from_pairs(&segs).build_rep(tube.period());
        prop_assert!(w.is_nilpotent());
        let back = f_map(tube, &g_map(tube, &w).unwrap()).unwrap();
        prop_assert_eq!(back, w);
    }
}
