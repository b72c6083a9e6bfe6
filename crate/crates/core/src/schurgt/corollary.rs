//! Recursions for `s_{κ+lλ / ν+lμ}` in `l`.
//!
//! For `l ≥ r` the Gelfand-Tsetlin polytopes decompose as
//! `GL_{κ+lλ/ν+lμ} = GL_{κ+rλ/ν+rμ} + (l-r)·GL_{λ/μ}`, and the weight map
//! is linear, so the Schur polynomials satisfy the recursion whose roots are
//! the weights of the vertices of `GL_{λ/μ}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::gt::{gt_polytope, vertex_weights};
use super::schur::schur_via_gt;
use super::{Partition, SkewShape, WeightVector};
use crate::algebra::LaurentPoly;
use crate::polytope::{dilate, minkowski_sum};
use crate::transform::{char_poly_from_roots, recursion_residual, RecursionCertificate};
use crate::{Error, Result};

fn check_lengths(ps: [&Partition; 4]) -> Result<usize> {
    let n = ps[0].len();
    for p in &ps[1..] {
        if p.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.len() });
        }
    }
    Ok(n)
}

/// Smallest `l ≥ 0` with `ν + lμ ⊆ κ + lλ`; containment then persists for all
/// larger `l` because `μ ⊆ λ`.
fn containment_start(kappa: &Partition, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<usize> {
    if !lambda.contains(mu) {
        return Err(Error::Hypothesis(format!("{:?} does not contain {:?}", lambda.parts(), mu.parts())));
    }
    let mut start = 0i64;
    for i in 0..lambda.len() {
        let gap = kappa.parts()[i] - nu.parts()[i];
        let slope = lambda.parts()[i] - mu.parts()[i];
        if gap >= 0 {
            continue;
        }
        if slope == 0 {
            return Err(Error::Hypothesis("no l with ν + lμ ⊆ κ + lλ".into()));
        }
        start = start.max(Integer::div_ceil(&-gap, &slope));
    }
    Ok(start as usize)
}

/// Smallest `r` such that `f_i < f_j` implies `r f_i + g_i < r f_j + g_j` for
/// `f = (λ, μ)`, `g = (κ, ν)`.
fn sorting_start(kappa: &Partition, lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    let f: Vec<i64> = lambda.parts().iter().chain(mu.parts()).copied().collect();
    let g: Vec<i64> = kappa.parts().iter().chain(nu.parts()).copied().collect();
    let mut r = 0i64;
    for i in 0..f.len() {
        for j in 0..f.len() {
            if f[i] < f[j] {
                // r (f_j - f_i) > g_i - g_j
                r = r.max(Integer::div_floor(&(g[i] - g[j]), &(f[j] - f[i])) + 1);
            }
        }
    }
    r as usize
}

fn sorting_holds(kappa: &Partition, lambda: &Partition, mu: &Partition, nu: &Partition, r: usize) -> bool {
    sorting_start(kappa, lambda, mu, nu) <= r
}

/// The start index from which the Minkowski decomposition is guaranteed.
pub fn corollary_r(kappa: &Partition, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<usize> {
    check_lengths([kappa, lambda, mu, nu])?;
    let contain = containment_start(kappa, lambda, mu, nu)?;
    Ok(contain.max(sorting_start(kappa, lambda, mu, nu)))
}

fn shifted_shape(kappa: &Partition, lambda: &Partition, mu: &Partition, nu: &Partition, l: usize) -> Result<SkewShape> {
    SkewShape::new(kappa.add_scaled(lambda, l as i64), nu.add_scaled(mu, l as i64))
}

/// Compares the vertex sets of `GL_{κ+lλ/ν+lμ}` and
/// `GL_{κ+rλ/ν+rμ} + (l-r)·GL_{λ/μ}`.
pub fn gt_minkowski_check(
    kappa: &Partition,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    r: usize,
    l: usize,
) -> Result<bool> {
    check_lengths([kappa, lambda, mu, nu])?;
    if l < r {
        return Err(Error::Hypothesis(format!("l = {l} is smaller than r = {r}")));
    }
    if containment_start(kappa, lambda, mu, nu)? > r {
        return Err(Error::Hypothesis(format!("ν + {r}μ is not contained in κ + {r}λ")));
    }
    if !sorting_holds(kappa, lambda, mu, nu, r) {
        return Err(Error::Hypothesis(format!("r = {r} does not preserve the order of (λ, μ)")));
    }
    let direct = gt_polytope(&shifted_shape(kappa, lambda, mu, nu, l)?);
    let base = gt_polytope(&shifted_shape(kappa, lambda, mu, nu, r)?);
    let step = gt_polytope(&SkewShape::new(lambda.clone(), mu.clone())?);
    let sum = minkowski_sum(&base, &dilate(&step, (l - r) as i64)?)?;
    Ok(direct.vertex_set()? == sum.vertex_set()?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchurRecursionReport {
    /// Start index guaranteed by the Minkowski decomposition.
    pub r: usize,
    /// First index of the checked sequence.
    pub start: usize,
    pub certificate: RecursionCertificate,
    /// Weights of the vertices of `GL_{λ/μ}`, the roots of the recursion.
    pub vertex_weights: Vec<WeightVector>,
    /// Each vertex weight occurs at most as often among vertices as among the
    /// tableaux of `λ/μ`, i.e. the vertex polynomial divides the tableau
    /// polynomial.
    pub contained_in_tableau_factors: bool,
    pub sequence: Vec<LaurentPoly>,
}

/// Verifies the vertex-weight recursion on `s_{κ+lλ/ν+lμ}` for
/// `l = r..=l_max`.
pub fn schur_recursion_check(
    kappa: &Partition,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    l_max: usize,
) -> Result<SchurRecursionReport> {
    let r = corollary_r(kappa, lambda, mu, nu)?;
    schur_recursion_check_from(kappa, lambda, mu, nu, r, l_max)
}

/// As [`schur_recursion_check`], starting the sequence at `start`. Starting
/// below `r` is allowed; the identity is then checked, not guaranteed.
pub fn schur_recursion_check_from(
    kappa: &Partition,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    start: usize,
    l_max: usize,
) -> Result<SchurRecursionReport> {
    let n = check_lengths([kappa, lambda, mu, nu])?;
    let r = corollary_r(kappa, lambda, mu, nu)?;
    let base = SkewShape::new(lambda.clone(), mu.clone())?;
    let vw = vertex_weights(&base)?;
    if !vw.all_integral() {
        return Err(Error::Hypothesis("Gelfand-Tsetlin polytope of λ/μ has non-integral vertices".into()));
    }
    let order = vw.integral.len();
    if l_max < start + order {
        return Err(Error::Hypothesis(format!(
            "l_max = {l_max} leaves no window of length {} from {start}",
            order + 1
        )));
    }
    let coeffs = char_poly_from_roots(n, &vw.integral)?;
    let sequence = (start..=l_max)
        .map(|l| schur_via_gt(&shifted_shape(kappa, lambda, mu, nu, l)?))
        .collect::<Result<Vec<_>>>()?;
    for k in 0..sequence.len() - order {
        let difference = recursion_residual(&sequence, &coeffs, k);
        if !difference.is_zero() {
            return Err(Error::RecursionFailure { k: start + k, difference });
        }
    }

    let tableaux = schur_via_gt(&base)?;
    let mut counts: BTreeMap<&WeightVector, u64> = BTreeMap::new();
    for w in &vw.integral {
        *counts.entry(w).or_default() += 1;
    }
    let contained = counts
        .iter()
        .all(|(w, &c)| tableaux.coeff(w).to_u64().is_some_and(|k| k >= c));

    Ok(SchurRecursionReport {
        r,
        start,
        certificate: RecursionCertificate {
            char_poly_coeffs: coeffs,
            k_range: (start, l_max - order),
            minimality_residuals: BTreeMap::new(),
            minimal: None,
        },
        vertex_weights: vw.integral,
        contained_in_tableau_factors: contained,
        sequence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[i64], n: usize) -> Partition {
        Partition::new(p, n).unwrap()
    }

    #[test]
    fn complete_homogeneous_recursion() {
        let z = Partition::zero(2);
        let rep = schur_recursion_check_from(&z, &part(&[1], 2), &z, &z, 0, 8).unwrap();
        assert_eq!(rep.r, 1);
        assert_eq!(rep.certificate.order(), 2);
        assert_eq!(rep.vertex_weights, [WeightVector::from([1, 0]), WeightVector::from([0, 1])]);
        assert_eq!(rep.sequence[3].len(), 4);
        assert!(rep.contained_in_tableau_factors);
    }

    #[test]
    fn fixed_shape_gives_constant_sequence() {
        let lam = part(&[2, 1], 2);
        let kappa = part(&[1], 2);
        let rep = schur_recursion_check(&kappa, &lam, &lam, &Partition::zero(2), 5).unwrap();
        assert_eq!(rep.certificate.order(), 1);
        assert!(rep.sequence.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn r_from_sorting_condition() {
        let z = Partition::zero(2);
        let one = part(&[1], 2);
        assert_eq!(corollary_r(&z, &one, &z, &z).unwrap(), 1);
        // μ_1 = 1 < λ_2 = 2 but ν_1 = 5 > κ_2 = 0: needs r·2 > r·1 + 5
        let r = corollary_r(&part(&[5], 2), &part(&[2, 2], 2), &one, &part(&[5], 2)).unwrap();
        assert_eq!(r, 6);
        // λ_2 = μ_2 and κ_2 < ν_2: containment never holds
        let err = corollary_r(&z, &part(&[2, 1], 2), &part(&[1, 1], 2), &part(&[1, 1], 2));
        assert!(matches!(err, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn minkowski_dilation() {
        let z = Partition::zero(2);
        assert!(gt_minkowski_check(&z, &part(&[2, 1], 2), &part(&[1], 2), &z, 1, 2).unwrap());
        assert!(gt_minkowski_check(&z, &part(&[2, 1], 2), &part(&[1], 2), &z, 2, 2).unwrap());
        let kappa = part(&[1, 1], 2);
        let lam = part(&[2, 1], 2);
        let mu = part(&[1], 2);
        let r = corollary_r(&kappa, &lam, &mu, &z).unwrap();
        assert!(gt_minkowski_check(&kappa, &lam, &mu, &z, r, r + 2).unwrap());
        assert!(matches!(gt_minkowski_check(&z, &lam, &mu, &z, 2, 1), Err(Error::Hypothesis(_))));
    }
}
