//! The affine A-type root system, defect, Coxeter transformation, reflection
//! functors on representations, standard projectives and injectives, and the
//! catalog of indecomposables realizing each positive root.

use crate::linalg::{rat, Matrix, QMat};
use crate::quiver::{DimVector, Quiver, QuiverError};
use crate::rep::{euler_form, tits_form, Rep};
use crate::tubes::{self, Tube, TubeError};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("quiver has an oriented cycle")]
    CyclicOrientation,
    #[error("vertex {0} is not a sink")]
    NotSink(usize),
    #[error("vertex {0} is not a source")]
    NotSource(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("homogeneous parameter must be nonzero")]
    ZeroParameter,
}

impl From<QuiverError> for RootsError {
    fn from(e: QuiverError) -> RootsError {
        match e {
            QuiverError::UnknownVertex(i) => RootsError::UnknownVertex(i),
            _ => RootsError::CyclicOrientation,
        }
    }
}

impl From<TubeError> for RootsError {
    fn from(e: TubeError) -> RootsError {
        match e {
            TubeError::ZeroParameter => RootsError::ZeroParameter,
            _ => RootsError::CyclicOrientation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Projective,
    Injective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RootKind {
    Real,
    Imaginary,
}

/// Where a root sits in the trichotomy, with enough data to rebuild the
/// indecomposable realizing it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum RootClass {
    /// `(Phi^-)^depth P(vertex)`
    Preprojective { depth: usize, vertex: usize },
    /// `(Phi^+)^depth I(vertex)`
    Preinjective { depth: usize, vertex: usize },
    /// uniserial member of a non-homogeneous tube
    Regular { tube: usize, position: usize, length: usize },
    /// the family of regular indecomposables of dimension `multiple * delta`
    Homogeneous { multiple: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRecord {
    pub vector: DimVector,
    pub kind: RootKind,
    pub defect: i64,
    pub class: RootClass,
}

impl std::fmt::Display for RootKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootKind::Real => write!(f, "real"),
            RootKind::Imaginary => write!(f, "imaginary"),
        }
    }
}

impl std::fmt::Display for RootClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootClass::Preprojective { depth, vertex } => {
                write!(f, "preprojective(r={depth}, i={vertex})")
            }
            RootClass::Preinjective { depth, vertex } => {
                write!(f, "preinjective(r={depth}, i={vertex})")
            }
            RootClass::Regular { tube, position, length } => {
                write!(f, "regular(tube={tube}, r={position}, m={length})")
            }
            RootClass::Homogeneous { multiple } => write!(f, "homogeneous(r={multiple})"),
        }
    }
}

/// The defect `<delta, d>`; negative on preprojectives, zero on regulars,
/// positive on preinjectives.
pub fn defect(q: &Quiver, d: &DimVector) -> i64 {
    euler_form(q, &q.delta(), d).expect("delta is indexed by the vertex set")
}

/// The simple reflection at vertex `i` on dimension vectors:
/// `d_i` becomes `-d_i` plus the neighbor sum, counting edge multiplicity.
pub fn simple_reflection(q: &Quiver, d: &DimVector, i: usize) -> DimVector {
    let mut out = d.clone();
    let mut neighbor_sum = 0;
    for e in 0..q.edge_count() {
        let (u, v) = q.edge_endpoints(e);
        if u == i {
            neighbor_sum += d[v];
        } else if v == i {
            neighbor_sum += d[u];
        }
    }
    out.set(i, -d[i] + neighbor_sum);
    out
}

/// The Coxeter transformation `c = s_{i_N} ... s_{i_1}` over the admissible
/// sink sequence, or its inverse for negative powers.
pub fn coxeter_transform(q: &Quiver, d: &DimVector, power: i64) -> Result<DimVector, QuiverError> {
    let seq = q.admissible_sink_sequence()?;
    let mut v = d.clone();
    if power >= 0 {
        for _ in 0..power {
            for &i in &seq {
                v = simple_reflection(q, &v, i);
            }
        }
    } else {
        for _ in 0..(-power) {
            for &i in seq.iter().rev() {
                v = simple_reflection(q, &v, i);
            }
        }
    }
    Ok(v)
}

/// The reflection functor at a sink (`Plus`) or a source (`Minus`). The
/// result lives over the re-oriented quiver `sigma_i Q`.
pub fn reflect(m: &Rep, i: usize, direction: Direction) -> Result<Rep, RootsError> {
    let q = m.quiver();
    if i >= q.vertex_count() {
        return Err(RootsError::UnknownVertex(i));
    }
    let new_quiver = Arc::new(q.sigma_reverse(i)?);
    match direction {
        Direction::Plus => {
            if !q.is_sink(i) {
                return Err(RootsError::NotSink(i));
            }
            let incoming = q.arrows_into(i);
            let blocks: Vec<QMat> =
                incoming.iter().map(|&h| m.map_for_half_edge(h).clone()).collect();
            let stacked = Matrix::hstack(m.dim_at(i), &blocks);
            let kernel = stacked.kernel_matrix();
            let w = kernel.cols();

            let mut dims = m.dims().clone();
            dims.set(i, w as i64);
            // row offset of each reversed arrow's block inside the kernel
            let mut offsets = Vec::with_capacity(incoming.len());
            let mut off = 0;
            for &h in &incoming {
                offsets.push(off);
                off += m.dim_at(q.start(h));
            }
            let maps = new_quiver
                .arrows()
                .iter()
                .map(|&h| {
                    if new_quiver.start(h) == i {
                        let original = new_quiver.bar(h);
                        let pos = incoming.iter().position(|&g| g == original).unwrap();
                        kernel.submatrix(offsets[pos], m.dim_at(q.start(original)), 0, w)
                    } else {
                        m.map_for_half_edge(h).clone()
                    }
                })
                .collect();
            Ok(Rep::new(new_quiver, dims, maps))
        }
        Direction::Minus => {
            if !q.is_source(i) {
                return Err(RootsError::NotSource(i));
            }
            let outgoing = q.arrows_out_of(i);
            let blocks: Vec<QMat> =
                outgoing.iter().map(|&h| m.map_for_half_edge(h).clone()).collect();
            let stacked = Matrix::vstack(m.dim_at(i), &blocks);
            let proj = stacked.cokernel_projection();
            let w = proj.rows();

            let mut dims = m.dims().clone();
            dims.set(i, w as i64);
            let mut offsets = Vec::with_capacity(outgoing.len());
            let mut off = 0;
            for &h in &outgoing {
                offsets.push(off);
                off += m.dim_at(q.end(h));
            }
            let maps = new_quiver
                .arrows()
                .iter()
                .map(|&h| {
                    if new_quiver.end(h) == i {
                        let original = new_quiver.bar(h);
                        let pos = outgoing.iter().position(|&g| g == original).unwrap();
                        proj.submatrix(0, w, offsets[pos], m.dim_at(q.end(original)))
                    } else {
                        m.map_for_half_edge(h).clone()
                    }
                })
                .collect();
            Ok(Rep::new(new_quiver, dims, maps))
        }
    }
}

/// The full Coxeter functor: the composite of reflections over the
/// admissible sink sequence, returning to the original orientation.
pub fn coxeter_functor(m: &Rep, direction: Direction) -> Result<Rep, RootsError> {
    let q = m.quiver().clone();
    let seq = q.admissible_sink_sequence()?;
    let mut rep = m.clone();
    match direction {
        Direction::Plus => {
            for &i in &seq {
                rep = reflect(&rep, i, Direction::Plus)?;
            }
        }
        Direction::Minus => {
            for &i in seq.iter().rev() {
                rep = reflect(&rep, i, Direction::Minus)?;
            }
        }
    }
    debug_assert_eq!(**rep.quiver(), *q);
    Ok(rep)
}

/// The standard projective `P(i)` or injective `I(i)`, built by reflection
/// chains from simples over the intermediate orientations.
pub fn standard_rep(q: &Arc<Quiver>, kind: StandardKind, i: usize) -> Result<Rep, RootsError> {
    let seq = q.admissible_sink_sequence()?;
    let r = seq
        .iter()
        .position(|&v| v == i)
        .ok_or(RootsError::UnknownVertex(i))?;
    match kind {
        StandardKind::Projective => {
            let mut quiv = (**q).clone();
            for &v in &seq[..r] {
                quiv = quiv.sigma_reverse(v)?;
            }
            let mut rep = Rep::simple(Arc::new(quiv), i);
            for &v in seq[..r].iter().rev() {
                rep = reflect(&rep, v, Direction::Minus)?;
            }
            debug_assert_eq!(**rep.quiver(), **q);
            Ok(rep)
        }
        StandardKind::Injective => {
            let mut quiv = (**q).clone();
            for &v in &seq[..=r] {
                quiv = quiv.sigma_reverse(v)?;
            }
            let mut rep = Rep::simple(Arc::new(quiv), i);
            for &v in &seq[r + 1..] {
                rep = reflect(&rep, v, Direction::Plus)?;
            }
            debug_assert_eq!(**rep.quiver(), **q);
            Ok(rep)
        }
    }
}

/// Dimension vectors of the projectives, by reflection arithmetic.
pub fn projective_dims(q: &Quiver) -> Result<Vec<DimVector>, QuiverError> {
    let seq = q.admissible_sink_sequence()?;
    let n = q.vertex_count();
    let mut dims = vec![DimVector::zeros(n); n];
    for (r, &ir) in seq.iter().enumerate() {
        let mut v = DimVector::unit(n, ir);
        for &prev in seq[..r].iter().rev() {
            v = simple_reflection(q, &v, prev);
        }
        dims[ir] = v;
    }
    Ok(dims)
}

/// Dimension vectors of the injectives.
pub fn injective_dims(q: &Quiver) -> Result<Vec<DimVector>, QuiverError> {
    let seq = q.admissible_sink_sequence()?;
    let n = q.vertex_count();
    let mut dims = vec![DimVector::zeros(n); n];
    for (r, &ir) in seq.iter().enumerate() {
        let mut v = DimVector::unit(n, ir);
        for &next in &seq[r + 1..] {
            v = simple_reflection(q, &v, next);
        }
        dims[ir] = v;
    }
    Ok(dims)
}

// searching depth is capped; the preprojective and preinjective dimension
// vectors grow strictly, so a genuine root is found well before the cap
fn search_cap(d: &DimVector, n: usize) -> usize {
    d.total().unsigned_abs() as usize + n + 1
}

/// Decide root-hood and classify: real roots by the sign of the defect,
/// imaginary ones as homogeneous multiples of delta.
pub fn classify_root(q: &Arc<Quiver>, d: &DimVector) -> Result<Option<RootRecord>, RootsError> {
    if d.len() != q.vertex_count() || !d.is_nonnegative() || d.is_zero() {
        return Ok(None);
    }
    let tits = tits_form(q, d).expect("indexed by vertex set");
    let def = defect(q, d);
    if tits == 0 {
        return Ok(d.multiple_of_delta().map(|r| RootRecord {
                vector: d.clone(),
                kind: RootKind::Imaginary,
                defect: 0,
                class: RootClass::Homogeneous { multiple: r as usize },
            }));
    }
    if tits != 1 {
        return Ok(None);
    }
    let n = q.vertex_count();
    let class = if def < 0 {
        let proj = projective_dims(q)?;
        let mut found = None;
        'search: for depth in 0..search_cap(d, n) {
            for (vertex, p) in proj.iter().enumerate() {
                if &coxeter_transform(q, p, -(depth as i64))? == d {
                    found = Some(RootClass::Preprojective { depth, vertex });
                    break 'search;
                }
            }
        }
        found.unwrap_or_else(|| unreachable!("negative-defect real root must be preprojective"))
    } else if def > 0 {
        let inj = injective_dims(q)?;
        let mut found = None;
        'search: for depth in 0..search_cap(d, n) {
            for (vertex, p) in inj.iter().enumerate() {
                if &coxeter_transform(q, p, depth as i64)? == d {
                    found = Some(RootClass::Preinjective { depth, vertex });
                    break 'search;
                }
            }
        }
        found.unwrap_or_else(|| unreachable!("positive-defect real root must be preinjective"))
    } else {
        let tubes = tubes::find_tubes(q)?;
        let mut found = None;
        'tube_search: for (t, tube) in tubes.iter().enumerate() {
            for position in 0..tube.period() {
                let mut acc = DimVector::zeros(n);
                for length in 1..=(d.total().unsigned_abs() as usize) {
                    acc = &acc + &tube.simple_dims(position + length - 1);
                    if &acc == d {
                        found = Some(RootClass::Regular { tube: t, position, length });
                        break 'tube_search;
                    }
                    if acc.total() >= d.total() {
                        break;
                    }
                }
            }
        }
        found.unwrap_or_else(|| unreachable!("zero-defect real root must lie in a tube"))
    };
    Ok(Some(RootRecord { vector: d.clone(), kind: RootKind::Real, defect: def, class }))
}

/// All positive roots componentwise below `bound`: the arc family
/// `r*delta + chi(arc)` and the imaginary multiples of delta, each classified.
pub fn positive_roots_up_to(
    q: &Arc<Quiver>,
    bound: &DimVector,
) -> Result<Vec<RootRecord>, RootsError> {
    let n = q.vertex_count();
    assert_eq!(bound.len(), n);
    let mut out = Vec::new();
    if !bound.is_nonnegative() {
        return Ok(out);
    }
    let min_bound = bound.entries().iter().copied().min().unwrap_or(0);
    for r in 0..=min_bound {
        for start in 0..n {
            for len in 1..n {
                let mut v = DimVector::delta(n).scaled(r);
                for k in 0..len {
                    let i = (start + k) % n;
                    v.set(i, v[i] + 1);
                }
                if v.leq(bound) {
                    let rec = classify_root(q, &v)?.expect("arc vectors are real roots");
                    debug_assert_eq!(rec.kind, RootKind::Real);
                    out.push(rec);
                }
            }
        }
    }
    for r in 1..=min_bound {
        out.push(RootRecord {
            vector: DimVector::delta(n).scaled(r),
            kind: RootKind::Imaginary,
            defect: 0,
            class: RootClass::Homogeneous { multiple: r as usize },
        });
    }
    out.sort_by_key(|rec| (rec.vector.total(), rec.vector.clone()));
    Ok(out)
}

/// Build the indecomposable realizing a class label.
pub fn realize_class(q: &Arc<Quiver>, tubes: &[Tube], class: &RootClass) -> Result<Rep, RootsError> {
    match class {
        RootClass::Preprojective { depth, vertex } => {
            let mut rep = standard_rep(q, StandardKind::Projective, *vertex)?;
            for _ in 0..*depth {
                rep = coxeter_functor(&rep, Direction::Minus)?;
            }
            Ok(rep)
        }
        RootClass::Preinjective { depth, vertex } => {
            let mut rep = standard_rep(q, StandardKind::Injective, *vertex)?;
            for _ in 0..*depth {
                rep = coxeter_functor(&rep, Direction::Plus)?;
            }
            Ok(rep)
        }
        RootClass::Regular { tube, position, length } => {
            Ok(tubes::tube_indec(&tubes[*tube], *position, *length))
        }
        RootClass::Homogeneous { multiple } => {
            Ok(tubes::homogeneous_indec(q, &rat(1), *multiple)?)
        }
    }
}

/// One realized indecomposable per catalog label.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub record: RootRecord,
    pub rep: Rep,
}

/// The catalog below `bound`: one entry per real root; for each imaginary
/// root `r*delta`, one entry per tube position of length `r*p` plus a single
/// marker for the homogeneous family.
pub fn indecomposable_catalog(
    q: &Arc<Quiver>,
    bound: &DimVector,
) -> Result<Vec<CatalogEntry>, RootsError> {
    let tubes = tubes::find_tubes(q)?;
    let mut out = Vec::new();
    for record in positive_roots_up_to(q, bound)? {
        match record.kind {
            RootKind::Real => {
                let rep = realize_class(q, &tubes, &record.class)?;
                debug_assert_eq!(rep.dims(), &record.vector);
                out.push(CatalogEntry { record, rep });
            }
            RootKind::Imaginary => {
                let RootClass::Homogeneous { multiple } = record.class else { unreachable!() };
                for (t, tube) in tubes.iter().enumerate() {
                    for position in 0..tube.period() {
                        let class = RootClass::Regular {
                            tube: t,
                            position,
                            length: multiple * tube.period(),
                        };
                        let rep = realize_class(q, &tubes, &class)?;
                        debug_assert_eq!(rep.dims(), &record.vector);
                        out.push(CatalogEntry {
                            record: RootRecord { class, ..record.clone() },
                            rep,
                        });
                    }
                }
                let rep = realize_class(q, &tubes, &record.class)?;
                out.push(CatalogEntry { record, rep });
            }
        }
    }
    Ok(out)
}
