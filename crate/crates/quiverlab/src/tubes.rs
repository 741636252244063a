//! Non-homogeneous tubes of an acyclic affine orientation, their regular
//! simples and uniserial members, the equivalence with nilpotent cyclic-quiver
//! representations, and homogeneous regular representations.

use crate::linalg::{Field, Matrix, QMat, Rat};
use crate::quiver::{DimVector, Quiver, QuiverError, Sign};
use crate::rep::{GradedMap, Rep};
use crate::roots;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TubeError {
    #[error("quiver has an oriented cycle")]
    CyclicOrientation,
    #[error("cyclic representation has period {found}, tube has period {expected}")]
    PeriodMismatch { expected: usize, found: usize },
    #[error("representation is not in the tube subcategory: an internal map is singular")]
    NotInRepT,
    #[error("homogeneous parameter must be nonzero")]
    ZeroParameter,
}

impl From<QuiverError> for TubeError {
    fn from(_: QuiverError) -> TubeError {
        TubeError::CyclicOrientation
    }
}

/// A non-homogeneous tube: period `p >= 2`, one support arc per position in
/// `Z/pZ`, each inducing a directed path with source `s(r)` and sink `t(r)`,
/// and the connecting arrow `h(r)` from `s(r)` to `t(r-1)`.
///
/// Positions are indexed along the connecting-arrow structure; the Coxeter
/// functor carries the regular simple at position `r` to the one at `r - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tube {
    quiver: Arc<Quiver>,
    period: usize,
    /// supports[r] lists the vertices of position r in path order, source first.
    supports: Vec<Vec<usize>>,
    /// connecting[r] = h(r), the arrow with start s(r) and end t(r-1).
    connecting: Vec<usize>,
    /// position[i] = the r with i in supports[r]; the supports partition I.
    position: Vec<usize>,
}

impl Tube {
    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Vertices of position `r` in path order (source first).
    pub fn support(&self, r: usize) -> &[usize] {
        &self.supports[r % self.period]
    }

    pub fn supports(&self) -> &[Vec<usize>] {
        &self.supports
    }

    /// The unique source of the path at position `r`.
    pub fn source(&self, r: usize) -> usize {
        *self.support(r).first().unwrap()
    }

    /// The unique sink of the path at position `r`.
    pub fn sink(&self, r: usize) -> usize {
        *self.support(r).last().unwrap()
    }

    /// The connecting arrow `h(r)`, from `source(r)` to `sink(r-1)`.
    pub fn connecting_arrow(&self, r: usize) -> usize {
        self.connecting[r % self.period]
    }

    /// The position of vertex `i`.
    pub fn position_of(&self, i: usize) -> usize {
        self.position[i]
    }

    /// Arrows along the internal path of position `r`, in traversal order.
    pub fn internal_arrows(&self, r: usize) -> Vec<usize> {
        let path = self.support(r);
        let q = &self.quiver;
        path.windows(2)
            .map(|w| {
                q.arrows()
                    .into_iter()
                    .find(|&h| q.start(h) == w[0] && q.end(h) == w[1])
                    .expect("consecutive path vertices joined by an arrow")
            })
            .collect()
    }

    /// Indicator dimension vector of the regular simple at position `r`.
    pub fn simple_dims(&self, r: usize) -> DimVector {
        let mut d = DimVector::zeros(self.quiver.vertex_count());
        for &i in self.support(r) {
            d.set(i, 1);
        }
        d
    }

    /// Dimension vector of the uniserial member at `(r, m)`: the sum of the
    /// regular-simple dimensions over positions `r, r+1, ..., r+m-1`.
    pub fn member_dims(&self, r: usize, m: usize) -> DimVector {
        let mut d = DimVector::zeros(self.quiver.vertex_count());
        for s in 0..m {
            d = &d + &self.simple_dims(r + s);
        }
        d
    }
}

/// Find the non-homogeneous tubes: defect-zero directed-path arc indicators
/// grouped into Coxeter-transform orbits; an orbit of size `>= 2` whose
/// members partition the vertex set is a tube. There are at most two, and
/// the periods satisfy `sum (p - 1) = N - 2`.
pub fn find_tubes(q: &Arc<Quiver>) -> Result<Vec<Tube>, TubeError> {
    if !q.is_acyclic() {
        return Err(TubeError::CyclicOrientation);
    }
    let n = q.vertex_count();
    let delta = q.delta();

    // candidate arcs: (start, len) inducing a directed path with defect 0,
    // keyed by their indicator vector; value = vertices in path order
    let mut candidates: BTreeMap<DimVector, Vec<usize>> = BTreeMap::new();
    for start in 0..n {
        for len in 1..n {
            let edge_signs: Vec<Sign> = (0..len - 1).map(|k| q.sign((start + k) % n)).collect();
            if !edge_signs.windows(2).all(|w| w[0] == w[1]) {
                continue;
            }
            let cycle_order: Vec<usize> = (0..len).map(|k| (start + k) % n).collect();
            let path = match edge_signs.first() {
                Some(Sign::Backward) => cycle_order.iter().rev().copied().collect(),
                _ => cycle_order,
            };
            let mut dims = DimVector::zeros(n);
            for &i in &path {
                dims.set(i, 1);
            }
            if roots::defect(q, &dims) != 0 {
                continue;
            }
            candidates.insert(dims, path);
        }
    }

    let mut used: Vec<DimVector> = Vec::new();
    let mut tubes = Vec::new();
    for start_dims in candidates.keys() {
        if used.contains(start_dims) {
            continue;
        }
        // follow the Coxeter orbit of the indicator vector; positions advance
        // against the Coxeter transform so that the connecting arrows run
        // from each source into the previous sink
        let mut orbit = vec![start_dims.clone()];
        let mut ok = true;
        loop {
            let next = roots::coxeter_transform(q, orbit.last().unwrap(), -1)?;
            if &next == start_dims {
                break;
            }
            if !candidates.contains_key(&next) || orbit.len() > 2 * n {
                ok = false;
                break;
            }
            orbit.push(next);
        }
        let total: DimVector = orbit.iter().fold(DimVector::zeros(n), |acc, v| &acc + v);
        if !ok || orbit.len() < 2 || total != delta {
            used.extend(orbit);
            continue;
        }
        used.extend(orbit.iter().cloned());

        // position 0 holds vertex 0; the supports partition the vertex set
        let origin = orbit.iter().position(|v| v[0] == 1).expect("vertex 0 lies in one support");
        let period = orbit.len();
        let supports: Vec<Vec<usize>> =
            (0..period).map(|k| candidates[&orbit[(origin + k) % period]].clone()).collect();
        let mut position = vec![usize::MAX; n];
        for (r, supp) in supports.iter().enumerate() {
            for &i in supp {
                position[i] = r;
            }
        }
        let connecting = (0..period)
            .map(|r| {
                let s = supports[r][0];
                let t_prev = *supports[(r + period - 1) % period].last().unwrap();
                q.arrows()
                    .into_iter()
                    .find(|&h| q.start(h) == s && q.end(h) == t_prev)
                    .expect("connecting arrow from source to previous sink")
            })
            .collect();
        tubes.push(Tube { quiver: q.clone(), period, supports, connecting, position });
    }
    tubes.sort_by_key(|t| (t.period, t.supports.clone()));

    let census: usize = tubes.iter().map(|t| t.period - 1).sum();
    assert_eq!(census, n - 2, "tube periods must satisfy the census identity");
    Ok(tubes)
}

/// The regular simple at position `r`: one-dimensional on its support arc,
/// identity on internal arrows, zero elsewhere.
pub fn regular_simple(tube: &Tube, r: usize) -> Rep {
    g_map(tube, &CyclicRep::simple(tube.period(), r)).expect("periods match")
}

/// A representation of the cyclic quiver on `Z/pZ`: `maps[r]` is the matrix
/// of the arrow `r -> r-1`. Tube members correspond to the nilpotent ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicRep {
    period: usize,
    dims: Vec<usize>,
    maps: Vec<QMat>,
}

impl CyclicRep {
    pub fn new(period: usize, dims: Vec<usize>, maps: Vec<QMat>) -> CyclicRep {
        assert!(period >= 1);
        assert_eq!(dims.len(), period);
        assert_eq!(maps.len(), period);
        for r in 0..period {
            let prev = (r + period - 1) % period;
            assert_eq!((maps[r].rows(), maps[r].cols()), (dims[prev], dims[r]));
        }
        CyclicRep { period, dims, maps }
    }

    pub fn zero(period: usize, dims: Vec<usize>) -> CyclicRep {
        let maps = (0..period)
            .map(|r| Matrix::zeros(dims[(r + period - 1) % period], dims[r]))
            .collect();
        CyclicRep::new(period, dims, maps)
    }

    /// The simple at vertex `r`.
    pub fn simple(period: usize, r: usize) -> CyclicRep {
        let mut dims = vec![0; period];
        dims[r % period] = 1;
        CyclicRep::zero(period, dims)
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Matrix of the arrow `r -> r-1`.
    pub fn map(&self, r: usize) -> &QMat {
        &self.maps[r % self.period]
    }

    pub fn set_map(&mut self, r: usize, m: QMat) {
        let idx = r % self.period;
        let prev = (idx + self.period - 1) % self.period;
        assert_eq!((m.rows(), m.cols()), (self.dims[prev], self.dims[idx]));
        self.maps[idx] = m;
    }

    /// Nilpotency: the transition operator on the total space vanishes at
    /// power `total_dim + 1`.
    pub fn is_nilpotent(&self) -> bool {
        let total = self.total_dim();
        if total == 0 {
            return true;
        }
        let offsets: Vec<usize> = self
            .dims
            .iter()
            .scan(0, |acc, &d| {
                let here = *acc;
                *acc += d;
                Some(here)
            })
            .collect();
        let mut big: QMat = Matrix::zeros(total, total);
        for r in 0..self.period {
            let prev = (r + self.period - 1) % self.period;
            let m = &self.maps[r];
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    big.set(offsets[prev] + i, offsets[r] + j, m.get(i, j).clone());
                }
            }
        }
        let mut power = big.clone();
        for _ in 0..total {
            if power.is_zero() {
                return true;
            }
            power = power.matmul(&big);
        }
        power.is_zero()
    }

    pub fn direct_sum(parts: &[CyclicRep]) -> CyclicRep {
        let period = parts.first().expect("nonempty sum").period;
        assert!(parts.iter().all(|p| p.period == period));
        let dims: Vec<usize> = (0..period).map(|r| parts.iter().map(|p| p.dims[r]).sum()).collect();
        let maps: Vec<QMat> = (0..period)
            .map(|r| {
                let blocks: Vec<QMat> = parts.iter().map(|p| p.maps[r].clone()).collect();
                Matrix::block_diagonal(&blocks)
            })
            .collect();
        CyclicRep::new(period, dims, maps)
    }

    /// Base change by invertible per-vertex blocks.
    pub fn transported(&self, g: &[QMat]) -> CyclicRep {
        assert_eq!(g.len(), self.period);
        let inv: Vec<QMat> =
            g.iter().map(|b| b.inverse().expect("blocks must be invertible")).collect();
        let maps = (0..self.period)
            .map(|r| {
                let prev = (r + self.period - 1) % self.period;
                g[prev].matmul(&self.maps[r]).matmul(&inv[r])
            })
            .collect();
        CyclicRep::new(self.period, self.dims.clone(), maps)
    }
}

/// The uniserial nilpotent indecomposable supported on the `m` consecutive
/// positions `r, r+1, ..., r+m-1`, with the transition sending each layer
/// down to the previous position. `p = 1` yields the nilpotent Jordan block
/// of size `m`.
pub fn cyclic_indec(p: usize, r: usize, m: usize) -> CyclicRep {
    assert!(p >= 1 && m >= 1);
    let layer_vertex = |l: usize| (r + l) % p;
    let mut dims = vec![0usize; p];
    for l in 0..m {
        dims[layer_vertex(l)] += 1;
    }
    // index of layer l within its vertex, counting lower layers there
    let index_of = |l: usize| (0..l).filter(|&k| layer_vertex(k) == layer_vertex(l)).count();
    let mut rep = CyclicRep::zero(p, dims);
    for l in 1..m {
        let v = layer_vertex(l);
        let mut m_v = rep.map(v).clone();
        m_v.set(index_of(l - 1), index_of(l), Field::one());
        rep.set_map(v, m_v);
    }
    rep
}

/// The representation `G(W)`: carry `W_r` onto every vertex of support `r`,
/// the identity on internal arrows, and the cyclic map `W_r -> W_{r-1}` on
/// the connecting arrow `h(r)`.
pub fn g_map(tube: &Tube, w: &CyclicRep) -> Result<Rep, TubeError> {
    if w.period() != tube.period() {
        return Err(TubeError::PeriodMismatch { expected: tube.period(), found: w.period() });
    }
    let q = tube.quiver();
    let n = q.vertex_count();
    let mut dims = DimVector::zeros(n);
    for i in 0..n {
        dims.set(i, w.dims()[tube.position_of(i)] as i64);
    }
    let maps = q
        .arrows()
        .iter()
        .map(|&h| {
            let (s, t) = (q.start(h), q.end(h));
            let (rs, rt) = (tube.position_of(s), tube.position_of(t));
            if rs == rt {
                Matrix::identity(w.dims()[rs])
            } else {
                // the only arrows between supports are the connecting ones
                debug_assert_eq!(h, tube.connecting_arrow(rs));
                w.map(rs).clone()
            }
        })
        .collect();
    Ok(Rep::new(q.clone(), dims, maps))
}

fn internal_path_composite(tube: &Tube, m: &Rep, r: usize) -> Result<QMat, TubeError> {
    let src = tube.source(r);
    let mut acc: QMat = Matrix::identity(m.dim_at(src));
    for h in tube.internal_arrows(r) {
        let x = m.map_for_half_edge(h);
        if !x.is_invertible() {
            return Err(TubeError::NotInRepT);
        }
        acc = x.matmul(&acc);
    }
    Ok(acc)
}

/// The cyclic representation `F(M)`: graded piece `M_{s(r)}` at position `r`
/// and transition `x_{rho(r-1)}^{-1} . x_{h(r)}`. Requires every internal map
/// of `M` to be invertible; the result is nilpotent exactly when `M` lies in
/// the tube subcategory.
pub fn f_map(tube: &Tube, m: &Rep) -> Result<CyclicRep, TubeError> {
    let p = tube.period();
    let dims: Vec<usize> = (0..p).map(|r| m.dim_at(tube.source(r))).collect();
    let mut path_inverses = Vec::with_capacity(p);
    for (r, dim_here) in dims.iter().enumerate() {
        for &i in tube.support(r) {
            if m.dim_at(i) != *dim_here {
                return Err(TubeError::NotInRepT);
            }
        }
        let comp = internal_path_composite(tube, m, r)?;
        path_inverses.push(comp.inverse().ok_or(TubeError::NotInRepT)?);
    }
    let maps: Vec<QMat> = (0..p)
        .map(|r| {
            let prev = (r + p - 1) % p;
            let xh = m.map_for_half_edge(tube.connecting_arrow(r));
            path_inverses[prev].matmul(xh)
        })
        .collect();
    Ok(CyclicRep::new(p, dims, maps))
}

/// The natural isomorphism `G(F(M)) -> M`: at vertex `i` it is the path
/// composite from the source of the support containing `i` into `i`.
pub fn natural_iso_alpha(tube: &Tube, m: &Rep) -> Result<GradedMap, TubeError> {
    let q = tube.quiver();
    let n = q.vertex_count();
    let mut blocks: Vec<QMat> = (0..n).map(|i| Matrix::identity(m.dim_at(i))).collect();
    for r in 0..tube.period() {
        let path = tube.support(r);
        if m.dim_at(path[0]) != m.dim_at(*path.last().unwrap()) {
            return Err(TubeError::NotInRepT);
        }
        let mut acc: QMat = Matrix::identity(m.dim_at(path[0]));
        for (k, h) in tube.internal_arrows(r).iter().enumerate() {
            let x = m.map_for_half_edge(*h);
            if !x.is_invertible() {
                return Err(TubeError::NotInRepT);
            }
            acc = x.matmul(&acc);
            blocks[path[k + 1]] = acc.clone();
        }
    }
    Ok(GradedMap { blocks })
}

/// The uniserial tube member `V(T, r, m)` obtained by carrying the cyclic
/// uniserial through `G`; its dimension vector is the sum of the simple
/// dimensions over positions `r, ..., r+m-1`.
pub fn tube_indec(tube: &Tube, r: usize, m: usize) -> Rep {
    let rep = g_map(tube, &cyclic_indec(tube.period(), r, m)).expect("periods match");
    debug_assert_eq!(rep.dims(), &tube.member_dims(r, m));
    rep
}

/// Finite multiset of uniserial segments `(r, m)` with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SegmentMultiset {
    counts: BTreeMap<(usize, usize), usize>,
}

impl SegmentMultiset {
    pub fn from_pairs(pairs: &[(usize, usize)]) -> SegmentMultiset {
        let mut counts = BTreeMap::new();
        for &(r, m) in pairs {
            assert!(m >= 1);
            *counts.entry((r, m)).or_insert(0) += 1;
        }
        SegmentMultiset { counts }
    }

    pub fn insert(&mut self, r: usize, m: usize, multiplicity: usize) {
        assert!(m >= 1 && multiplicity >= 1);
        *self.counts.entry((r, m)).or_insert(0) += multiplicity;
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &usize)> {
        self.counts.iter()
    }

    pub fn multiplicity(&self, r: usize, m: usize) -> usize {
        self.counts.get(&(r, m)).copied().unwrap_or(0)
    }

    /// Direct sum of the named uniserials over the cyclic quiver on `Z/pZ`.
    pub fn build_rep(&self, p: usize) -> CyclicRep {
        let mut parts = Vec::new();
        for (&(r, m), &mult) in &self.counts {
            for _ in 0..mult {
                parts.push(cyclic_indec(p, r, m));
            }
        }
        if parts.is_empty() {
            CyclicRep::zero(p, vec![0; p])
        } else {
            CyclicRep::direct_sum(&parts)
        }
    }
}

/// Aperiodicity: for every length `m`, at least one of the `p` uniserials of
/// that length is absent.
pub fn is_aperiodic(p: usize, segments: &SegmentMultiset) -> bool {
    let lengths: Vec<usize> = segments.iter().map(|(&(_, m), _)| m).collect();
    lengths.into_iter().all(|m| (0..p).any(|r| segments.multiplicity(r, m) == 0))
}

/// A regular indecomposable of dimension `m * delta` with invertible maps:
/// the identity on every arrow except a fixed reference arrow (on the
/// smallest counter-cyclic edge), which carries the Jordan block `J_m(t)`.
/// Distinct parameters land in distinct homogeneous tubes.
pub fn homogeneous_indec(q: &Arc<Quiver>, t: &Rat, m: usize) -> Result<Rep, TubeError> {
    if Field::is_zero(t) {
        return Err(TubeError::ZeroParameter);
    }
    if !q.is_acyclic() {
        return Err(TubeError::CyclicOrientation);
    }
    assert!(m >= 1);
    let reference = (0..q.edge_count())
        .find(|&e| q.sign(e) == Sign::Backward)
        .expect("an acyclic orientation has a counter-cyclic edge");
    let jordan = Matrix::from_fn(m, m, |i, j| {
        if i == j {
            t.clone()
        } else if j == i + 1 {
            Field::one()
        } else {
            Field::zero()
        }
    });
    let dims = q.delta().scaled(m as i64);
    let maps = q
        .arrows()
        .iter()
        .map(|&h| if h / 2 == reference { jordan.clone() } else { Matrix::identity(m) })
        .collect();
    Ok(Rep::new(q.clone(), dims, maps))
}

/// The composite around the whole cycle from vertex 0, inverting the maps of
/// counter-cyclic arrows. Defined when every traversed inverse exists; its
/// conjugacy class separates homogeneous tubes.
pub fn cycle_monodromy(m: &Rep) -> Option<QMat> {
    let q = m.quiver();
    let mut acc: QMat = Matrix::identity(m.dim_at(0));
    for e in 0..q.edge_count() {
        let h = 2 * e; // forward half-edge e -> e+1
        let step = if q.is_arrow(h) {
            m.map_for_half_edge(h).clone()
        } else {
            m.map_for_half_edge(q.bar(h)).inverse()?
        };
        if acc.rows() != step.cols() {
            return None;
        }
        acc = step.matmul(&acc);
    }
    Some(acc)
}
