//! Power-series verification: the parametrization generating series, the
//! root-system product formula, graded dimensions by root-multiset counting,
//! and the count-equality check between the two.

use crate::caps;
use crate::param::{self, ParamError};
use crate::quiver::{DimVector, Quiver};
use crate::roots::{self, RootKind};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("degree exceeds the desk-scale cap")]
    TooLarge,
    #[error("quiver has an oriented cycle")]
    CyclicOrientation,
    #[error("dimension data does not match")]
    DimensionMismatch,
}

impl From<ParamError> for SeriesError {
    fn from(e: ParamError) -> SeriesError {
        match e {
            ParamError::DimensionMismatch => SeriesError::DimensionMismatch,
            ParamError::TooLarge => SeriesError::TooLarge,
            _ => SeriesError::CyclicOrientation,
        }
    }
}

impl From<crate::roots::RootsError> for SeriesError {
    fn from(_: crate::roots::RootsError) -> SeriesError {
        SeriesError::CyclicOrientation
    }
}

/// A truncated power series with integer coefficients by total degree,
/// optionally refined by dimension vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    coeffs: Vec<u64>,
    by_dim: Option<BTreeMap<DimVector, u64>>,
}

impl GradedSeries {
    pub fn degree_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, degree: usize) -> u64 {
        self.coeffs[degree]
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn refinement(&self) -> Option<&BTreeMap<DimVector, u64>> {
        self.by_dim.as_ref()
    }
}

/// All dimension vectors of length `n` with the given total.
pub fn compositions(total: i64, n: usize) -> Vec<DimVector> {
    fn go(rest: i64, slots: usize, prefix: &mut Vec<i64>, out: &mut Vec<DimVector>) {
        if slots == 1 {
            prefix.push(rest);
            out.push(DimVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for x in 0..=rest {
            prefix.push(x);
            go(rest - x, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && total >= 0 {
        go(total, n, &mut Vec::new(), &mut out);
    }
    out
}

/// The generating series of the parametrization count: the coefficient at
/// degree `d` is the sum of `|phi(nu)|` over all `nu` of total dimension `d`;
/// the refinement stores each summand.
pub fn phi_series(q: &Arc<Quiver>, degree: usize) -> Result<GradedSeries, SeriesError> {
    if degree > caps::series_cap() {
        return Err(SeriesError::TooLarge);
    }
    let n = q.vertex_count();
    let mut coeffs = vec![0u64; degree + 1];
    let mut by_dim = BTreeMap::new();
    for (d, slot) in coeffs.iter_mut().enumerate() {
        for nu in compositions(d as i64, n) {
            let count = param::enumerate_phi(q, &nu)?.len() as u64;
            *slot += count;
            by_dim.insert(nu, count);
        }
    }
    Ok(GradedSeries { coeffs, by_dim: Some(by_dim) })
}

// multiply in place by (1 - X^t)^{-1}, truncated
fn mul_geometric(coeffs: &mut [u64], t: usize) {
    for d in t..coeffs.len() {
        coeffs[d] += coeffs[d - t];
    }
}

/// The product formula: one geometric factor per positive real root and
/// `N - 1` geometric factors at every degree `s * N` for the imaginary
/// multiples of delta.
pub fn product_series(q: &Arc<Quiver>, degree: usize) -> Result<GradedSeries, SeriesError> {
    if degree > caps::series_cap() {
        return Err(SeriesError::TooLarge);
    }
    let n = q.vertex_count();
    let mut coeffs = vec![0u64; degree + 1];
    coeffs[0] = 1;
    let bound = DimVector::new(vec![degree as i64; n]);
    for record in roots::positive_roots_up_to(q, &bound)? {
        if record.kind == RootKind::Real {
            let t = record.vector.total() as usize;
            if t <= degree {
                mul_geometric(&mut coeffs, t);
            }
        }
    }
    let mut s = 1;
    while s * n <= degree {
        for _ in 0..n - 1 {
            mul_geometric(&mut coeffs, s * n);
        }
        s += 1;
    }
    Ok(GradedSeries { coeffs, by_dim: None })
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The graded dimension at `nu` by root-multiset counting: each positive
/// real root contributes one flavor and each imaginary root `r * delta`
/// contributes `N - 1` flavors. Computed by dynamic programming over the
/// root list, independently of the parametrization enumeration.
pub fn pbw_dim(q: &Arc<Quiver>, nu: &DimVector) -> Result<u64, SeriesError> {
    let n = q.vertex_count();
    if nu.len() != n || !nu.is_nonnegative() {
        return Err(SeriesError::DimensionMismatch);
    }
    if nu.total() as usize > caps::series_cap() {
        return Err(SeriesError::TooLarge);
    }
    // items: (dimension vector, flavor count)
    let mut items: Vec<(DimVector, u64)> = Vec::new();
    for record in roots::positive_roots_up_to(q, nu)? {
        let flavors = match record.kind {
            RootKind::Real => 1,
            RootKind::Imaginary => (n - 1) as u64,
        };
        items.push((record.vector, flavors));
    }

    // dense table over all vectors below nu, mixed-radix indexed
    let radices: Vec<usize> = nu.entries().iter().map(|&x| x as usize + 1).collect();
    let size: usize = radices.iter().product();
    let index = |v: &[usize]| -> usize {
        v.iter().zip(&radices).fold(0usize, |acc, (&x, &r)| acc * r + x)
    };
    let mut dp = vec![0u64; size];
    dp[0] = 1;
    let mut coords = vec![0usize; n];
    for (alpha, flavors) in items {
        let mut next = vec![0u64; size];
        coords.iter_mut().for_each(|c| *c = 0);
        'states: loop {
            let here = index(&coords);
            if dp[here] != 0 || next[here] != 0 {
                // add k copies of alpha with multiset-of-flavors weight
                let mut k = 0u64;
                let mut v: Vec<i64> = coords.iter().map(|&c| c as i64).collect();
                loop {
                    let fits = v.iter().zip(nu.entries()).all(|(a, b)| a <= b);
                    if !fits {
                        break;
                    }
                    let weight = binomial(k + flavors - 1, flavors - 1);
                    let vi = index(&v.iter().map(|&x| x as usize).collect::<Vec<_>>());
                    next[vi] += weight * dp[here];
                    k += 1;
                    for (slot, a) in v.iter_mut().zip(alpha.entries()) {
                        *slot += a;
                    }
                }
            }
            for i in 0..n {
                coords[i] += 1;
                if coords[i] < radices[i] {
                    continue 'states;
                }
                coords[i] = 0;
            }
            break;
        }
        dp = next;
    }
    let top: Vec<usize> = nu.entries().iter().map(|&x| x as usize).collect();
    Ok(dp[index(&top)])
}

/// One line of the count-equality report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountEntry {
    pub nu: DimVector,
    pub phi_count: u64,
    pub pbw_count: u64,
}

/// Outcome of checking the count equality for every `nu` below the
/// total-dimension cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub max_total: usize,
    pub entries: Vec<CountEntry>,
}

impl CountReport {
    pub fn mismatches(&self) -> Vec<&CountEntry> {
        self.entries.iter().filter(|e| e.phi_count != e.pbw_count).collect()
    }

    pub fn passed(&self) -> bool {
        self.mismatches().is_empty()
    }
}

/// Compare the parametrization count against the root-multiset dimension for
/// every dimension vector of total at most `max_total`.
pub fn check_count_equality(q: &Arc<Quiver>, max_total: usize) -> Result<CountReport, SeriesError> {
    if max_total > caps::series_cap() {
        return Err(SeriesError::TooLarge);
    }
    let n = q.vertex_count();
    let mut entries = Vec::new();
    for d in 0..=max_total {
        for nu in compositions(d as i64, n) {
            let phi_count = param::enumerate_phi(q, &nu)?.len() as u64;
            let pbw_count = pbw_dim(q, &nu)?;
            entries.push(CountEntry { nu, phi_count, pbw_count });
        }
    }
    Ok(CountReport { max_total, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::affine_a(2, "++-").unwrap())
    }

    #[test]
    fn phi_series_low_degrees() {
        let q = a2();
        let s = phi_series(&q, 3).unwrap();
        assert_eq!(s.coefficient(0), 1);
        assert_eq!(s.coefficient(1), 3); // one pair per simple root
        let refined = s.refinement().unwrap();
        assert_eq!(refined[&DimVector::delta(3)], 6);
    }

    #[test]
    fn product_series_matches_phi_series() {
        let q = a2();
        let degree = 5;
        let phi = phi_series(&q, degree).unwrap();
        let product = product_series(&q, degree).unwrap();
        assert_eq!(phi.coefficients(), product.coefficients());
    }

    #[test]
    fn product_series_degree_cap() {
        let q = a2();
        assert_eq!(product_series(&q, 900), Err(SeriesError::TooLarge));
    }

    #[test]
    fn pbw_dim_examples() {
        let q = a2();
        for i in 0..3 {
            assert_eq!(pbw_dim(&q, &DimVector::unit(3, i)).unwrap(), 1);
        }
        assert_eq!(pbw_dim(&q, &DimVector::delta(3)).unwrap(), 6);
        assert_eq!(pbw_dim(&q, &DimVector::zeros(3)).unwrap(), 1);
    }

    #[test]
    fn count_equality_on_small_quivers() {
        let q = a2();
        let report = check_count_equality(&q, 3).unwrap();
        assert!(report.passed());
        let delta_entry =
            report.entries.iter().find(|e| e.nu == DimVector::delta(3)).unwrap();
        assert_eq!((delta_entry.phi_count, delta_entry.pbw_count), (6, 6));

        let kronecker = Arc::new(Quiver::affine_a(1, "+-").unwrap());
        assert!(check_count_equality(&kronecker, 4).unwrap().passed());

        let trivial = check_count_equality(&q, 0).unwrap();
        assert!(trivial.passed());
        assert_eq!(trivial.entries.len(), 1);
    }

    #[test]
    fn pbw_dim_is_rotation_invariant() {
        // rotating the cycle labels and transporting the orientation gives
        // the same root system, hence the same graded dimensions
        let q = Arc::new(Quiver::affine_a(2, "++-").unwrap());
        let rotated = Arc::new(Quiver::affine_a(2, "+-+").unwrap());
        let rotate =
            |v: &DimVector| DimVector::new(vec![v[2], v[0], v[1]]);
        for nu in compositions(4, 3) {
            let a = pbw_dim(&q, &nu).unwrap();
            let b = pbw_dim(&rotated, &rotate(&nu)).unwrap();
            assert_eq!(a, b, "nu = {nu}");
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions(0, 3).len(), 1);
    }
}
