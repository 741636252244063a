//! The canonical parametrization: enumeration of the pairs `(sigma, lambda)`,
//! explicit stratum representatives, stratum dimensions, the openness
//! criterion, and exhaustive counting of stable flags over prime fields.

use crate::caps;
use crate::linalg::{rat, Field, Fp, FpMat, Matrix, QMat, Rat};
use crate::quiver::{DimVector, Quiver};
use crate::rep::{ambient_dim, direct_sum, ext_dim, hom_dim, Rep, RepError};
use crate::roots::{self, RootClass, RootsError};
use crate::tubes::{self, Tube, TubeError};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("quiver has an oriented cycle")]
    CyclicOrientation,
    #[error("homogeneous parameters must be pairwise distinct")]
    DuplicateParameter,
    #[error("homogeneous parameters must be nonzero")]
    ZeroParameter,
    #[error("dimension data does not match")]
    DimensionMismatch,
    #[error("instance exceeds the desk-scale cap")]
    TooLarge,
    #[error("stratum is outside the openness criterion's hypothesis classes")]
    UnsupportedStratum,
    #[error("an entry denominator is divisible by the prime")]
    DenominatorVanishes,
}

impl From<RootsError> for ParamError {
    fn from(_: RootsError) -> ParamError {
        ParamError::CyclicOrientation
    }
}

impl From<TubeError> for ParamError {
    fn from(e: TubeError) -> ParamError {
        match e {
            TubeError::ZeroParameter => ParamError::ZeroParameter,
            _ => ParamError::CyclicOrientation,
        }
    }
}

impl From<RepError> for ParamError {
    fn from(_: RepError) -> ParamError {
        ParamError::DimensionMismatch
    }
}

/// A label for an indecomposable that may carry multiplicity in `sigma`.
/// Homogeneous regulars are never labels; they enter through `lambda`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum IndecLabel {
    Preprojective { depth: usize, vertex: usize },
    Tube { tube: usize, position: usize, length: usize },
    Preinjective { depth: usize, vertex: usize },
}

impl IndecLabel {
    pub fn to_class(&self) -> RootClass {
        match *self {
            IndecLabel::Preprojective { depth, vertex } => {
                RootClass::Preprojective { depth, vertex }
            }
            IndecLabel::Tube { tube, position, length } => {
                RootClass::Regular { tube, position, length }
            }
            IndecLabel::Preinjective { depth, vertex } => {
                RootClass::Preinjective { depth, vertex }
            }
        }
    }
}

impl std::fmt::Display for IndecLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IndecLabel::Preprojective { depth, vertex } => write!(f, "pre({depth},{vertex})"),
            IndecLabel::Tube { tube, position, length } => {
                write!(f, "tube({tube},{position},{length})")
            }
            IndecLabel::Preinjective { depth, vertex } => write!(f, "inj({depth},{vertex})"),
        }
    }
}

/// A parametrization pair: a finite-support multiplicity function on labels
/// together with a weakly decreasing partition for the homogeneous block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SigmaLambda {
    pub sigma: BTreeMap<IndecLabel, usize>,
    pub lambda: Vec<usize>,
}

impl SigmaLambda {
    pub fn parts(&self) -> usize {
        self.lambda.len()
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .sigma
            .iter()
            .map(|(l, &m)| if m == 1 { l.to_string() } else { format!("{l}^{m}") })
            .collect();
        if !self.lambda.is_empty() {
            let lam: Vec<String> = self.lambda.iter().map(|x| x.to_string()).collect();
            parts.push(format!("lambda=({})", lam.join(",")));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// A flag type: the sequence of quotient dimension vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagType(pub Vec<DimVector>);

impl FlagType {
    pub fn total(&self) -> DimVector {
        let n = self.0.first().map_or(0, DimVector::len);
        self.0.iter().fold(DimVector::zeros(n), |acc, v| &acc + v)
    }

    /// Discrete: no arrow joins two vertices inside the same step.
    pub fn is_discrete(&self, q: &Quiver) -> bool {
        self.0
            .iter()
            .all(|step| q.arrows().iter().all(|&h| step[q.start(h)] == 0 || step[q.end(h)] == 0))
    }
}

/// All labels with dimension vector componentwise below `nu`, paired with
/// their dimension vectors.
pub fn label_pool(
    q: &Arc<Quiver>,
    tubes: &[Tube],
    nu: &DimVector,
) -> Result<Vec<(IndecLabel, DimVector)>, ParamError> {
    let n = q.vertex_count();
    let mut pool = Vec::new();
    let total = nu.total();

    let proj = roots::projective_dims(q).map_err(|_| ParamError::CyclicOrientation)?;
    let mut depth = 0usize;
    loop {
        let mut any_fits = false;
        for (vertex, p) in proj.iter().enumerate() {
            let d = roots::coxeter_transform(q, p, -(depth as i64))
                .map_err(|_| ParamError::CyclicOrientation)?;
            if d.total() <= total {
                any_fits = true;
                if d.leq(nu) {
                    pool.push((IndecLabel::Preprojective { depth, vertex }, d));
                }
            }
        }
        if !any_fits {
            break;
        }
        depth += 1;
    }

    let inj = roots::injective_dims(q).map_err(|_| ParamError::CyclicOrientation)?;
    let mut depth = 0usize;
    loop {
        let mut any_fits = false;
        for (vertex, p) in inj.iter().enumerate() {
            let d = roots::coxeter_transform(q, p, depth as i64)
                .map_err(|_| ParamError::CyclicOrientation)?;
            if d.total() <= total {
                any_fits = true;
                if d.leq(nu) {
                    pool.push((IndecLabel::Preinjective { depth, vertex }, d));
                }
            }
        }
        if !any_fits {
            break;
        }
        depth += 1;
    }

    for (t, tube) in tubes.iter().enumerate() {
        for position in 0..tube.period() {
            let mut acc = DimVector::zeros(n);
            for length in 1..=(total.max(0) as usize) {
                acc = &acc + &tube.simple_dims(position + length - 1);
                if acc.total() > total {
                    break;
                }
                if acc.leq(nu) {
                    pool.push((IndecLabel::Tube { tube: t, position, length }, acc.clone()));
                }
            }
        }
    }

    pool.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(pool)
}

fn partitions_of(r: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r.max(1), &mut Vec::new(), &mut out);
    out
}

fn violates_full_orbit(sigma: &BTreeMap<IndecLabel, usize>, tubes: &[Tube]) -> bool {
    for (t, tube) in tubes.iter().enumerate() {
        let lengths: Vec<usize> = sigma
            .keys()
            .filter_map(|l| match l {
                IndecLabel::Tube { tube: lt, length, .. } if *lt == t => Some(*length),
                _ => None,
            })
            .collect();
        for &m in &lengths {
            let all_positions = (0..tube.period()).all(|r| {
                sigma
                    .get(&IndecLabel::Tube { tube: t, position: r, length: m })
                    .copied()
                    .unwrap_or(0)
                    > 0
            });
            if all_positions {
                return true;
            }
        }
    }
    false
}

/// Enumerate the full parametrization set for dimension vector `nu`: all
/// multiplicity functions on the label pool whose weighted dimension sum
/// leaves a multiple of delta for the partition part, excluding functions
/// that cover a whole tube orbit in one length.
pub fn enumerate_phi(q: &Arc<Quiver>, nu: &DimVector) -> Result<Vec<SigmaLambda>, ParamError> {
    if nu.len() != q.vertex_count() || !nu.is_nonnegative() {
        return Err(ParamError::DimensionMismatch);
    }
    if !q.is_acyclic() {
        return Err(ParamError::CyclicOrientation);
    }
    let tubes = tubes::find_tubes(q)?;
    let pool = label_pool(q, &tubes, nu)?;
    let mut out = Vec::new();
    let mut sigma: BTreeMap<IndecLabel, usize> = BTreeMap::new();

    fn dfs(
        pool: &[(IndecLabel, DimVector)],
        idx: usize,
        remaining: DimVector,
        sigma: &mut BTreeMap<IndecLabel, usize>,
        tubes: &[Tube],
        out: &mut Vec<SigmaLambda>,
    ) {
        if idx == pool.len() {
            let r = if remaining.is_zero() {
                0usize
            } else {
                match remaining.multiple_of_delta() {
                    Some(r) => r as usize,
                    None => return,
                }
            };
            if violates_full_orbit(sigma, tubes) {
                return;
            }
            for lambda in partitions_of(r) {
                out.push(SigmaLambda { sigma: sigma.clone(), lambda });
            }
            return;
        }
        let (label, dims) = &pool[idx];
        dfs(pool, idx + 1, remaining.clone(), sigma, tubes, out);
        let mut rest = remaining;
        let mut mult = 0;
        while dims.leq(&rest) {
            rest = &rest - dims;
            mult += 1;
            sigma.insert(label.clone(), mult);
            dfs(pool, idx + 1, rest.clone(), sigma, tubes, out);
        }
        if mult > 0 {
            sigma.remove(label);
        }
    }

    dfs(&pool, 0, nu.clone(), &mut sigma, &tubes, &mut out);
    out.sort();
    Ok(out)
}

/// Default homogeneous parameters: the first `count` primes.
pub fn default_parameters(count: usize) -> Vec<Rat> {
    let mut primes = Vec::with_capacity(count);
    let mut candidate = 2i64;
    while primes.len() < count {
        if (2..candidate).all(|d| candidate % d != 0) {
            primes.push(rat(candidate));
        }
        candidate += 1;
    }
    primes
}

/// An explicit point of the stratum: the direct sum of the labeled
/// indecomposables and one homogeneous regular per partition part, with the
/// summands ordered so that morphisms only flow forward.
pub fn stratum_representative(
    q: &Arc<Quiver>,
    sl: &SigmaLambda,
    params: &[Rat],
) -> Result<Rep, ParamError> {
    if params.len() != sl.lambda.len() {
        return Err(ParamError::DimensionMismatch);
    }
    for (i, p) in params.iter().enumerate() {
        if Field::is_zero(p) {
            return Err(ParamError::ZeroParameter);
        }
        if params[..i].contains(p) {
            return Err(ParamError::DuplicateParameter);
        }
    }
    let tubes = tubes::find_tubes(q)?;

    // preprojectives by increasing depth, then the tube part, then the
    // homogeneous block, then preinjectives by decreasing depth
    let mut ordered: Vec<&IndecLabel> = sl.sigma.keys().collect();
    ordered.sort_by(|a, b| {
        use IndecLabel::*;
        match (a, b) {
            (Preinjective { depth: d1, vertex: v1 }, Preinjective { depth: d2, vertex: v2 }) => {
                d2.cmp(d1).then(v1.cmp(v2))
            }
            _ => a.cmp(b),
        }
    });

    let mut front: Vec<Rep> = Vec::new();
    let mut tail: Vec<Rep> = Vec::new();
    for label in ordered {
        let rep = roots::realize_class(q, &tubes, &label.to_class())?;
        let bucket = if matches!(label, IndecLabel::Preinjective { .. }) {
            &mut tail
        } else {
            &mut front
        };
        for _ in 0..sl.sigma[label] {
            bucket.push(rep.clone());
        }
    }
    for (lam, t) in sl.lambda.iter().zip(params) {
        front.push(tubes::homogeneous_indec(q, t, *lam)?);
    }
    front.append(&mut tail);
    Ok(direct_sum(q, &front)?)
}

/// `dim X(sigma, lambda) = q + dim G_V - dim End(x)`, independent of the
/// homogeneous parameters chosen.
pub fn stratum_dim(q: &Arc<Quiver>, sl: &SigmaLambda) -> Result<i64, ParamError> {
    let x = stratum_representative(q, sl, &default_parameters(sl.parts()))?;
    let group_dim: i64 = x.dims().entries().iter().map(|d| d * d).sum();
    let end_dim = hom_dim(&x, &x)? as i64;
    Ok(sl.parts() as i64 + group_dim - end_dim)
}

/// The openness criterion for partition-free strata of preprojective and
/// preinjective labels: open exactly when the representative is rigid,
/// equivalently when the stratum fills the whole representation space.
pub fn check_open_stratum(q: &Arc<Quiver>, sl: &SigmaLambda) -> Result<bool, ParamError> {
    if !sl.lambda.is_empty() || sl.sigma.keys().any(|l| matches!(l, IndecLabel::Tube { .. })) {
        return Err(ParamError::UnsupportedStratum);
    }
    let x = stratum_representative(q, sl, &[])?;
    let rigid = ext_dim(&x, &x)? == 0;
    let fills = stratum_dim(q, sl)? == ambient_dim(q, x.dims());
    debug_assert_eq!(rigid, fills);
    Ok(rigid)
}

/// A representation over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpRep {
    quiver: Arc<Quiver>,
    modulus: u64,
    dims: Vec<usize>,
    maps: Vec<FpMat>,
}

impl FpRep {
    pub fn new(quiver: Arc<Quiver>, modulus: u64, dims: Vec<usize>, maps: Vec<FpMat>) -> FpRep {
        assert_eq!(dims.len(), quiver.vertex_count());
        assert_eq!(maps.len(), quiver.arrows().len());
        for (k, &h) in quiver.arrows().iter().enumerate() {
            assert_eq!(
                (maps[k].rows(), maps[k].cols()),
                (dims[quiver.end(h)], dims[quiver.start(h)])
            );
        }
        FpRep { quiver, modulus, dims, maps }
    }

    /// Reduce a rational representation modulo `p`.
    pub fn from_rational(rep: &Rep, p: u64) -> Result<FpRep, ParamError> {
        let reduce_mat = |m: &QMat| -> Result<FpMat, ParamError> {
            let mut out = Matrix::zeros(m.rows(), m.cols());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    out.set(i, j, reduce_rat(m.get(i, j), p)?);
                }
            }
            Ok(out)
        };
        let maps = rep.maps().iter().map(reduce_mat).collect::<Result<Vec<_>, _>>()?;
        let dims = (0..rep.quiver().vertex_count()).map(|i| rep.dim_at(i)).collect();
        Ok(FpRep::new(rep.quiver().clone(), p, dims, maps))
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, k: usize) -> &FpMat {
        &self.maps[k]
    }

    /// Base change by invertible per-vertex blocks.
    pub fn transported(&self, g: &[FpMat]) -> FpRep {
        let inv: Vec<FpMat> =
            g.iter().map(|b| b.inverse().expect("blocks must be invertible")).collect();
        let q = &self.quiver;
        let maps = q
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(&h, x)| g[q.end(h)].matmul(x).matmul(&inv[q.start(h)]))
            .collect();
        FpRep::new(q.clone(), self.modulus, self.dims.clone(), maps)
    }
}

fn reduce_rat(x: &Rat, p: u64) -> Result<Fp, ParamError> {
    let to_fp = |b: &num_bigint::BigInt| -> Fp {
        let m = num_bigint::BigInt::from(p);
        let r = ((b % &m) + &m) % &m;
        let v: u64 = r.try_into().expect("residue fits in u64");
        Fp::new(v as i64, p)
    };
    let num = to_fp(x.numer());
    let den = to_fp(x.denom());
    let inv = den.inv().ok_or(ParamError::DenominatorVanishes)?;
    Ok(num.mul(&inv))
}

/// All `dim`-dimensional subspaces of `F_p^ambient` as column-basis matrices
/// in reduced echelon form, one per subspace.
fn subspaces(p: u64, ambient: usize, dim: usize) -> Vec<FpMat> {
    if dim > ambient {
        return Vec::new();
    }
    if dim == 0 {
        return vec![Matrix::zeros(ambient, 0)];
    }
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..dim).collect();
    loop {
        // free entries: (row, col) with row above... below the pivot of its
        // column and not itself a pivot row
        let free: Vec<(usize, usize)> = (0..dim)
            .flat_map(|c| {
                let pv = pivots.clone();
                (0..ambient).filter(move |&r| r > pv[c] && !pv.contains(&r)).map(move |r| (r, c))
            })
            .collect();
        let mut values = vec![0u64; free.len()];
        loop {
            let mut basis: FpMat = Matrix::zeros(ambient, dim);
            for (c, &pr) in pivots.iter().enumerate() {
                basis.set(pr, c, Fp::new(1, p));
            }
            for (k, &(r, c)) in free.iter().enumerate() {
                basis.set(r, c, Fp::new(values[k] as i64, p));
            }
            out.push(basis);
            let mut pos = 0;
            loop {
                if pos == values.len() {
                    break;
                }
                values[pos] += 1;
                if values[pos] < p {
                    break;
                }
                values[pos] = 0;
                pos += 1;
            }
            if values.iter().all(|&v| v == 0) {
                break;
            }
        }
        // next pivot combination in lexicographic order
        let mut i = dim;
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if pivots[i] + 1 + (dim - 1 - i) < ambient {
                pivots[i] += 1;
                for j in i + 1..dim {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break true;
            }
        };
        if !advanced {
            return out;
        }
    }
}

fn column_span_contains(basis: &FpMat, vectors: &FpMat) -> bool {
    if vectors.cols() == 0 || vectors.rows() == 0 {
        return true;
    }
    basis.solve(vectors).is_some()
}

fn count_flags_recursive(x: &FpRep, steps: &[DimVector]) -> u64 {
    let Some((first, rest)) = steps.split_first() else {
        return if x.total_dim() == 0 { 1 } else { 0 };
    };
    let q = x.quiver().clone();
    let n = q.vertex_count();
    let target: Vec<i64> = (0..n).map(|i| x.dims()[i] as i64 - first[i]).collect();
    if target.iter().any(|&d| d < 0) {
        return 0;
    }
    let per_vertex: Vec<Vec<FpMat>> =
        (0..n).map(|i| subspaces(x.modulus(), x.dims()[i], target[i] as usize)).collect();

    let mut count = 0u64;
    let mut choice = vec![0usize; n];
    'outer: loop {
        let bases: Vec<&FpMat> = (0..n).map(|i| &per_vertex[i][choice[i]]).collect();
        let stable = q.arrows().iter().enumerate().all(|(k, &h)| {
            let image = x.map(k).matmul(bases[q.start(h)]);
            column_span_contains(bases[q.end(h)], &image)
        });
        if stable {
            let maps = q
                .arrows()
                .iter()
                .enumerate()
                .map(|(k, &h)| {
                    let image = x.map(k).matmul(bases[q.start(h)]);
                    bases[q.end(h)].solve(&image).expect("stability gives a restriction")
                })
                .collect();
            let restricted = FpRep::new(
                q.clone(),
                x.modulus(),
                target.iter().map(|&d| d as usize).collect(),
                maps,
            );
            count += count_flags_recursive(&restricted, rest);
        }
        for i in 0..n {
            choice[i] += 1;
            if choice[i] < per_vertex[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    count
}

/// The exact number of `x`-stable flags of the given type, by exhaustive
/// enumeration of graded subspace chains.
pub fn count_stable_flags(x: &FpRep, ft: &FlagType) -> Result<u64, ParamError> {
    let n = x.quiver().vertex_count();
    let total = ft.total();
    if total.len() != n || (0..n).any(|i| total[i] != x.dims()[i] as i64) {
        return Err(ParamError::DimensionMismatch);
    }
    if x.total_dim() > caps::flag_cap() {
        return Err(ParamError::TooLarge);
    }
    Ok(count_flags_recursive(x, &ft.0))
}
