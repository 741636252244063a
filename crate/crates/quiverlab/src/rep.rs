//! Graded representations, morphism spaces, the four-term exact sequence,
//! the Euler form, isomorphism testing, nilpotency, and the moment map.

use crate::linalg::{generic_invertibility, Field, Matrix, QMat};
use crate::quiver::{DimVector, Quiver};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("dimension vector indexed by the wrong vertex set")]
    IndexMismatch,
}

/// A representation `(V, x)`: one matrix per arrow, with the matrix for `h`
/// of shape `dims(end(h)) x dims(start(h))` acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    quiver: Arc<Quiver>,
    dims: DimVector,
    maps: Vec<QMat>, // indexed parallel to quiver.arrows()
}

impl Rep {
    pub fn new(quiver: Arc<Quiver>, dims: DimVector, maps: Vec<QMat>) -> Rep {
        assert_eq!(dims.len(), quiver.vertex_count(), "dims indexed by vertex set");
        assert!(dims.is_nonnegative(), "representation dimensions are non-negative");
        let arrows = quiver.arrows();
        assert_eq!(maps.len(), arrows.len(), "one matrix per arrow");
        for (k, &h) in arrows.iter().enumerate() {
            assert_eq!(
                (maps[k].rows(), maps[k].cols()),
                (dims[quiver.end(h)] as usize, dims[quiver.start(h)] as usize),
                "arrow {} has a map of the wrong shape",
                k
            );
        }
        Rep { quiver, dims, maps }
    }

    /// The zero representation of the given dimension vector.
    pub fn zero(quiver: Arc<Quiver>, dims: DimVector) -> Rep {
        let maps = quiver
            .arrows()
            .iter()
            .map(|&h| Matrix::zeros(dims[quiver.end(h)] as usize, dims[quiver.start(h)] as usize))
            .collect();
        Rep::new(quiver, dims, maps)
    }

    /// The simple representation at vertex `i`.
    pub fn simple(quiver: Arc<Quiver>, i: usize) -> Rep {
        let dims = DimVector::unit(quiver.vertex_count(), i);
        Rep::zero(quiver, dims)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn dim_at(&self, i: usize) -> usize {
        self.dims[i] as usize
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total() as usize
    }

    pub fn is_zero_rep(&self) -> bool {
        self.dims.is_zero()
    }

    /// The map attached to the `k`-th arrow of the quiver.
    pub fn map(&self, k: usize) -> &QMat {
        &self.maps[k]
    }

    pub fn maps(&self) -> &[QMat] {
        &self.maps
    }

    /// The map attached to half-edge `h`, which must be an arrow.
    pub fn map_for_half_edge(&self, h: usize) -> &QMat {
        let k = self.quiver.arrow_index(h).expect("half-edge is an arrow");
        &self.maps[k]
    }

    /// Base change by an invertible graded map: `y_h = g_end . x_h . g_start^-1`.
    pub fn transported(&self, g: &GradedMap) -> Rep {
        let inverses: Vec<QMat> = g
            .blocks
            .iter()
            .map(|b| b.inverse().expect("graded map must be invertible"))
            .collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(&h, x)| {
                g.blocks[self.quiver.end(h)].matmul(x).matmul(&inverses[self.quiver.start(h)])
            })
            .collect();
        Rep::new(self.quiver.clone(), self.dims.clone(), maps)
    }

    /// View in `E_V` by placing zero maps on all reversed half-edges.
    pub fn extend_by_zero(&self) -> FullRep {
        let q = &self.quiver;
        let maps = (0..q.half_edge_count())
            .map(|h| {
                if q.is_arrow(h) {
                    self.map_for_half_edge(h).clone()
                } else {
                    Matrix::zeros(self.dim_at(q.end(h)), self.dim_at(q.start(h)))
                }
            })
            .collect();
        FullRep { quiver: q.clone(), dims: self.dims.clone(), maps }
    }
}

/// An element of `E_V`: one matrix per half-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRep {
    quiver: Arc<Quiver>,
    dims: DimVector,
    maps: Vec<QMat>, // indexed by half-edge id
}

impl FullRep {
    pub fn new(quiver: Arc<Quiver>, dims: DimVector, maps: Vec<QMat>) -> FullRep {
        assert_eq!(dims.len(), quiver.vertex_count());
        assert!(dims.is_nonnegative());
        assert_eq!(maps.len(), quiver.half_edge_count());
        for (h, m) in maps.iter().enumerate() {
            assert_eq!(
                (m.rows(), m.cols()),
                (dims[quiver.end(h)] as usize, dims[quiver.start(h)] as usize),
                "half-edge {} has a map of the wrong shape",
                h
            );
        }
        FullRep { quiver, dims, maps }
    }

    pub fn zero(quiver: Arc<Quiver>, dims: DimVector) -> FullRep {
        let maps = (0..quiver.half_edge_count())
            .map(|h| Matrix::zeros(dims[quiver.end(h)] as usize, dims[quiver.start(h)] as usize))
            .collect();
        FullRep::new(quiver, dims, maps)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn dim_at(&self, i: usize) -> usize {
        self.dims[i] as usize
    }

    pub fn map(&self, h: usize) -> &QMat {
        &self.maps[h]
    }

    pub fn set_map(&mut self, h: usize, m: QMat) {
        assert_eq!(
            (m.rows(), m.cols()),
            (self.dim_at(self.quiver.end(h)), self.dim_at(self.quiver.start(h)))
        );
        self.maps[h] = m;
    }
}

/// One square block per vertex, an element of `gl_V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentValue {
    blocks: Vec<QMat>,
}

impl MomentValue {
    pub fn blocks(&self) -> &[QMat] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &QMat {
        &self.blocks[i]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }
}

/// A graded linear map between two graded spaces, one block per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    pub blocks: Vec<QMat>,
}

impl GradedMap {
    pub fn identity(dims: &DimVector) -> GradedMap {
        GradedMap {
            blocks: dims.entries().iter().map(|&d| Matrix::identity(d as usize)).collect(),
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    pub fn to_block_diagonal(&self) -> QMat {
        Matrix::block_diagonal(&self.blocks)
    }

    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        GradedMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.matmul(b)).collect(),
        }
    }
}

fn check_same_quiver(m: &Rep, n: &Rep) -> Result<(), RepError> {
    if **m.quiver() == **n.quiver() {
        Ok(())
    } else {
        Err(RepError::QuiverMismatch)
    }
}

/// The intertwining map of the four-term exact sequence: it sends a graded
/// tuple `theta` to `(y_h . theta_start - theta_end . x_h)` over the arrows.
/// `Hom` is its kernel and `Ext^1` its cokernel.
pub fn intertwiner_matrix(m: &Rep, n: &Rep) -> Result<QMat, RepError> {
    check_same_quiver(m, n)?;
    let q = m.quiver();
    let nv = q.vertex_count();
    // unknowns: theta_i of shape n.dims[i] x m.dims[i], flattened row-major
    let mut offsets = Vec::with_capacity(nv);
    let mut cols = 0usize;
    for i in 0..nv {
        offsets.push(cols);
        cols += n.dim_at(i) * m.dim_at(i);
    }
    let arrows = q.arrows();
    let rows: usize = arrows.iter().map(|&h| n.dim_at(q.end(h)) * m.dim_at(q.start(h))).sum();
    let mut a: QMat = Matrix::zeros(rows, cols);
    let mut row0 = 0;
    for (k, &h) in arrows.iter().enumerate() {
        let (s, t) = (q.start(h), q.end(h));
        let x = m.map(k);
        let y = n.map(k);
        let (vs, vt, wt, ws) = (m.dim_at(s), m.dim_at(t), n.dim_at(t), n.dim_at(s));
        for r in 0..wt {
            for c in 0..vs {
                let row = row0 + r * vs + c;
                // + y[r, k2] on theta_s[k2, c]
                for k2 in 0..ws {
                    let col = offsets[s] + k2 * vs + c;
                    let v = a.get(row, col).add(y.get(r, k2));
                    a.set(row, col, v);
                }
                // - x[k2, c] on theta_t[r, k2]
                for k2 in 0..vt {
                    let col = offsets[t] + r * vt + k2;
                    let v = a.get(row, col).sub(x.get(k2, c));
                    a.set(row, col, v);
                }
            }
        }
        row0 += wt * vs;
    }
    Ok(a)
}

/// An exact basis of `Hom(M, N)` as graded map tuples.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<Vec<GradedMap>, RepError> {
    let a = intertwiner_matrix(m, n)?;
    let q = m.quiver();
    let nv = q.vertex_count();
    let kernel = a.kernel_basis();
    let mut out = Vec::with_capacity(kernel.len());
    for vec in kernel {
        let mut blocks = Vec::with_capacity(nv);
        let mut offset = 0;
        for i in 0..nv {
            let (r, c) = (n.dim_at(i), m.dim_at(i));
            let block = Matrix::from_fn(r, c, |rr, cc| vec[offset + rr * c + cc].clone());
            offset += r * c;
            blocks.push(block);
        }
        out.push(GradedMap { blocks });
    }
    Ok(out)
}

pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize, RepError> {
    let a = intertwiner_matrix(m, n)?;
    Ok(a.cols() - a.rank())
}

/// `dim Ext^1(M, N)` read off the exact sequence:
/// `dim Hom(M, N) - <dim M, dim N>`.
pub fn ext_dim(m: &Rep, n: &Rep) -> Result<usize, RepError> {
    check_same_quiver(m, n)?;
    let hom = hom_dim(m, n)? as i64;
    let euler = euler_form(m.quiver(), m.dims(), n.dims())?;
    let ext = hom - euler;
    debug_assert!(ext >= 0);
    Ok(ext as usize)
}

/// The Euler form `<a, b> = sum_i a_i b_i - sum_{h in Omega} a_start b_end`;
/// on dimension vectors it computes `dim Hom - dim Ext^1`.
pub fn euler_form(q: &Quiver, a: &DimVector, b: &DimVector) -> Result<i64, RepError> {
    if a.len() != q.vertex_count() || b.len() != q.vertex_count() {
        return Err(RepError::IndexMismatch);
    }
    let mut acc: i64 = (0..q.vertex_count()).map(|i| a[i] * b[i]).sum();
    for h in q.arrows() {
        acc -= a[q.start(h)] * b[q.end(h)];
    }
    Ok(acc)
}

/// The quadratic form `q(v) = <v, v>`; real roots have value 1 and imaginary
/// ones value 0.
pub fn tits_form(q: &Quiver, v: &DimVector) -> Result<i64, RepError> {
    euler_form(q, v, v)
}

/// Dimension of the representation space carrying the given dimension
/// vector: `sum over arrows of d_start * d_end`.
pub fn ambient_dim(q: &Quiver, dims: &DimVector) -> i64 {
    q.arrows().iter().map(|&h| dims[q.start(h)] * dims[q.end(h)]).sum()
}

/// Decides isomorphism: equal dimension vectors and an invertible element in
/// the span of `Hom(M, N)`, detected exactly over the rationals.
pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<bool, RepError> {
    check_same_quiver(m, n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.dims().is_zero() {
        return Ok(true);
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let blocks: Vec<QMat> = basis.iter().map(GradedMap::to_block_diagonal).collect();
    Ok(generic_invertibility(&blocks).expect("equal square shapes"))
}

/// The moment map: the block at `i` is
/// `sum_{h in Omega: end = i} x_h x_bar(h) - sum_{h not in Omega: end = i} x_h x_bar(h)`.
pub fn moment_map(x: &FullRep) -> MomentValue {
    let q = x.quiver();
    let blocks = (0..q.vertex_count())
        .map(|i| {
            let d = x.dim_at(i);
            let mut acc: QMat = Matrix::zeros(d, d);
            for h in 0..q.half_edge_count() {
                if q.end(h) != i {
                    continue;
                }
                let term = x.map(h).matmul(x.map(q.bar(h)));
                acc = if q.is_arrow(h) { acc.matadd(&term) } else { acc.matsub(&term) };
            }
            acc
        })
        .collect();
    MomentValue { blocks }
}

/// Outcome of the membership test for the nilpotent moment-zero locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaReport {
    pub nilpotent: bool,
    pub moment_zero: bool,
    pub in_lambda: bool,
}

/// Nilpotency: every composable product of half-edge maps of length
/// `total_dim + 1` vanishes. Nonzero products are grown one factor at a time
/// and deduplicated; a product surviving at the bound certifies failure.
pub fn is_nilpotent(x: &FullRep) -> bool {
    let q = x.quiver();
    let bound = x.dims().total() as usize + 1;
    // products tracked as (source vertex, target vertex, matrix), nonzero only
    let mut current: Vec<(usize, usize, QMat)> = Vec::new();
    for h in 0..q.half_edge_count() {
        let m = x.map(h).clone();
        let entry = (q.start(h), q.end(h), m);
        if !entry.2.is_zero() && !current.contains(&entry) {
            current.push(entry);
        }
    }
    for _ in 1..bound {
        if current.is_empty() {
            return true;
        }
        let mut next: Vec<(usize, usize, QMat)> = Vec::new();
        for (src, tgt, m) in &current {
            for h in 0..q.half_edge_count() {
                if q.start(h) != *tgt {
                    continue;
                }
                let prod = x.map(h).matmul(m);
                if prod.is_zero() {
                    continue;
                }
                let entry = (*src, q.end(h), prod);
                if !next.contains(&entry) {
                    next.push(entry);
                }
            }
        }
        current = next;
    }
    current.is_empty()
}

/// Membership in the nilpotent moment-zero locus.
pub fn lambda_membership(x: &FullRep) -> LambdaReport {
    let nilpotent = is_nilpotent(x);
    let moment_zero = moment_map(x).is_zero();
    LambdaReport { nilpotent, moment_zero, in_lambda: nilpotent && moment_zero }
}

/// Block-diagonal direct sum; the empty list yields the zero representation.
pub fn direct_sum(quiver: &Arc<Quiver>, parts: &[Rep]) -> Result<Rep, RepError> {
    for p in parts {
        if **p.quiver() != **quiver {
            return Err(RepError::QuiverMismatch);
        }
    }
    let nv = quiver.vertex_count();
    let mut dims = DimVector::zeros(nv);
    for p in parts {
        dims = &dims + p.dims();
    }
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &h)| {
            if parts.is_empty() {
                Matrix::zeros(dims[quiver.end(h)] as usize, dims[quiver.start(h)] as usize)
            } else {
                let blocks: Vec<QMat> = parts.iter().map(|p| p.map(k).clone()).collect();
                Matrix::block_diagonal(&blocks)
            }
        })
        .collect();
    Ok(Rep::new(quiver.clone(), dims, maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::affine_a(2, "++-").unwrap())
    }

    /// dim (0,1,1) with the identity on the arrow 1 -> 2.
    fn middle_rep(q: &Arc<Quiver>) -> Rep {
        let dims = DimVector::new(vec![0, 1, 1]);
        let maps = vec![
            Matrix::zeros(1, 0),  // 0 -> 1
            Matrix::identity(1),  // 1 -> 2
            Matrix::zeros(1, 0),  // 0 -> 2
        ];
        Rep::new(q.clone(), dims, maps)
    }

    #[test]
    fn hom_of_simples() {
        let q = a2();
        let s0 = Rep::simple(q.clone(), 0);
        let s1 = Rep::simple(q.clone(), 1);
        assert_eq!(hom_basis(&s0, &s0).unwrap().len(), 1);
        assert_eq!(hom_basis(&s0, &s1).unwrap().len(), 0);
    }

    #[test]
    fn hom_of_projective_into_middle() {
        let q = a2();
        let s2 = Rep::simple(q.clone(), 2); // the projective at the sink
        let m = middle_rep(&q);
        assert_eq!(hom_basis(&s2, &m).unwrap().len(), 1);
    }

    #[test]
    fn ext_of_simples() {
        let q = a2();
        let s0 = Rep::simple(q.clone(), 0);
        let s1 = Rep::simple(q.clone(), 1);
        assert_eq!(ext_dim(&s0, &s1).unwrap(), 1); // one arrow 0 -> 1
        assert_eq!(ext_dim(&s0, &s0).unwrap(), 0);
        assert_eq!(ext_dim(&s1, &s1).unwrap(), 0);
    }

    #[test]
    fn ext_vanishes_for_rigid_preinjective() {
        let q = a2();
        // dim (1,1,0) with identity on 0 -> 1
        let dims = DimVector::new(vec![1, 1, 0]);
        let maps = vec![Matrix::identity(1), Matrix::zeros(0, 1), Matrix::zeros(0, 1)];
        let m = Rep::new(q.clone(), dims, maps);
        assert_eq!(ext_dim(&m, &m).unwrap(), 0);
        assert_eq!(hom_dim(&m, &m).unwrap(), 1);
    }

    #[test]
    fn euler_form_values() {
        let q = a2();
        let delta = DimVector::delta(3);
        assert_eq!(euler_form(&q, &delta, &delta).unwrap(), 0);
        let e0 = DimVector::unit(3, 0);
        let e1 = DimVector::unit(3, 1);
        assert_eq!(euler_form(&q, &e0, &e1).unwrap(), -1);
        for i in 0..3 {
            let e = DimVector::unit(3, i);
            assert_eq!(euler_form(&q, &e, &e).unwrap(), 1);
        }
        assert_eq!(euler_form(&q, &DimVector::zeros(2), &delta), Err(RepError::IndexMismatch));
    }

    #[test]
    fn isomorphism_basics() {
        let q = a2();
        let m = middle_rep(&q);
        assert!(is_isomorphic(&m, &m).unwrap());
        let s0 = Rep::simple(q.clone(), 0);
        let s1 = Rep::simple(q.clone(), 1);
        assert!(!is_isomorphic(&s0, &s1).unwrap());
        // base change produces an isomorphic representation
        let g = GradedMap {
            blocks: vec![
                Matrix::identity(0),
                QMat::from_i64_rows(&[&[3]]),
                QMat::from_i64_rows(&[&[-2]]),
            ],
        };
        assert!(is_isomorphic(&m, &m.transported(&g)).unwrap());
        // same dims, non-isomorphic: zero maps versus identity map
        let z = Rep::zero(q.clone(), DimVector::new(vec![0, 1, 1]));
        assert!(!is_isomorphic(&m, &z).unwrap());
    }

    #[test]
    fn moment_map_of_zero_and_zero_extension() {
        let q = a2();
        let zero = FullRep::zero(q.clone(), DimVector::delta(3));
        assert!(moment_map(&zero).is_zero());
        let m = middle_rep(&q);
        assert!(moment_map(&m.extend_by_zero()).is_zero());
    }

    #[test]
    fn moment_map_hand_example() {
        let q = a2();
        // delta-dimensional; x(0->1) = x(1->2) = 1, bar map on 1->0 equal to 1
        let mut x = FullRep::zero(q.clone(), DimVector::delta(3));
        let arrows = q.arrows();
        x.set_map(arrows[0], Matrix::identity(1)); // 0 -> 1
        x.set_map(arrows[1], Matrix::identity(1)); // 1 -> 2
        x.set_map(q.bar(arrows[0]), Matrix::identity(1)); // 1 -> 0
        let psi = moment_map(&x);
        assert_eq!(psi.block(0).get(0, 0), &rat(-1));
        assert_eq!(psi.block(1).get(0, 0), &rat(1));
        assert_eq!(psi.block(2).get(0, 0), &rat(0));
    }

    #[test]
    fn lambda_membership_cases() {
        let q = a2();
        let zero = FullRep::zero(q.clone(), DimVector::delta(3));
        let r = lambda_membership(&zero);
        assert!(r.nilpotent && r.moment_zero && r.in_lambda);

        // any zero-extension over an acyclic orientation is nilpotent
        let m = middle_rep(&q);
        let r = lambda_membership(&m.extend_by_zero());
        assert!(r.in_lambda);

        // invertible monodromy around an oriented cycle is never nilpotent
        let c = Arc::new(Quiver::cyclic(3));
        let rep = Rep::new(c.clone(), DimVector::delta(3), vec![Matrix::identity(1); 3]);
        let r = lambda_membership(&rep.extend_by_zero());
        assert!(!r.nilpotent);
        assert!(r.moment_zero);
        assert!(!r.in_lambda);
    }

    #[test]
    fn direct_sum_examples() {
        let q = a2();
        let s0 = Rep::simple(q.clone(), 0);
        let s1 = Rep::simple(q.clone(), 1);
        let m = middle_rep(&q);
        assert_eq!(direct_sum(&q, std::slice::from_ref(&m)).unwrap(), m);
        let s = direct_sum(&q, &[s0.clone(), s1.clone()]).unwrap();
        assert_eq!(s.dims(), &DimVector::new(vec![1, 1, 0]));
        assert!(s.maps().iter().all(|m| m.is_zero()));
        let both = direct_sum(&q, &[m.clone(), s0]).unwrap();
        assert_eq!(both.dims(), &DimVector::new(vec![1, 1, 1]));
        let empty = direct_sum(&q, &[]).unwrap();
        assert!(empty.is_zero_rep());
        let other = Arc::new(Quiver::affine_a(2, "+-+").unwrap());
        assert_eq!(direct_sum(&q, &[Rep::simple(other, 0)]), Err(RepError::QuiverMismatch));
    }

    #[test]
    fn intertwiner_corank_equals_ext() {
        let q = a2();
        let m = middle_rep(&q);
        let s0 = Rep::simple(q.clone(), 0);
        for (a, b) in [(&m, &s0), (&s0, &m), (&m, &m)] {
            let mat = intertwiner_matrix(a, b).unwrap();
            let corank = mat.rows() - mat.rank();
            assert_eq!(corank, ext_dim(a, b).unwrap());
        }
    }
}
