//! Complex spectra as multisets, tolerance-based multiset comparison, and
//! the closed-form spectra that the walk machinery admits: the walk
//! operator's spectrum from the transition matrix, and the positive-support
//! spectra of regular graphs from the adjacency spectrum.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectrumError {
    #[error("transition eigenvalue {value} exceeds magnitude 1 beyond tolerance {tol}")]
    TransitionOutOfRange { value: f64, tol: f64 },
    #[error(
        "eigenvalue {value} has imaginary part beyond tolerance {tol}; expected a real spectrum"
    )]
    NotReal { value: Complex64, tol: f64 },
    #[error("expected {expected} eigenvalues, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("degree {k} below 3; the closed form applies to k-regular graphs with k >= 3")]
    DegreeTooSmall { k: usize },
    #[error("closed form requires at least as many edges as vertices (n = {n}, m = {m})")]
    TooFewEdges { n: usize, m: usize },
}

/// A multiset of complex values, stored flat (multiplicities as repeats).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum {
    values: Vec<Complex64>,
}

impl ComplexSpectrum {
    pub fn new(values: Vec<Complex64>) -> Self {
        ComplexSpectrum { values }
    }

    pub fn from_reals(values: &[f64]) -> Self {
        ComplexSpectrum {
            values: values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Lexicographically sorted copy by (real, imaginary).
    pub fn sorted(&self) -> Vec<Complex64> {
        let mut v = self.values.clone();
        v.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap()
                .then(a.im.partial_cmp(&b.im).unwrap())
        });
        v
    }

    /// Number of values within `tol` of `target`.
    pub fn count_near(&self, target: Complex64, tol: f64) -> usize {
        self.values
            .iter()
            .filter(|z| (*z - target).norm() <= tol)
            .count()
    }

    /// Checked extraction of a real spectrum.
    pub fn reals(&self, tol: f64) -> Result<Vec<f64>, SpectrumError> {
        self.values
            .iter()
            .map(|z| {
                if z.im.abs() > tol {
                    Err(SpectrumError::NotReal { value: *z, tol })
                } else {
                    Ok(z.re)
                }
            })
            .collect()
    }
}

/// True when the two multisets match one-to-one with pairwise distance at
/// most `tol`. The matching rule is deterministic: both lists are sorted
/// lexicographically by (real, imaginary), then each value of the first
/// list, in order, greedily claims the nearest unclaimed value of the
/// second (ties to the earlier position).
pub fn multiset_eq(a: &ComplexSpectrum, b: &ComplexSpectrum, tol: f64) -> bool {
    assert!(tol >= 0.0, "tolerance must be nonnegative");
    if a.len() != b.len() {
        return false;
    }
    let xs = a.sorted();
    let ys = b.sorted();
    let mut claimed = vec![false; ys.len()];
    for x in &xs {
        let best = ys
            .iter()
            .enumerate()
            .filter(|(i, _)| !claimed[*i])
            .min_by(|(_, p), (_, q)| (x - *p).norm().partial_cmp(&(x - *q).norm()).unwrap());
        match best {
            Some((i, y)) if (x - y).norm() <= tol => claimed[i] = true,
            _ => return false,
        }
    }
    true
}

/// Spectrum of the walk operator from the spectrum of the transition
/// matrix: each transition eigenvalue t contributes the conjugate pair
/// t ± i*sqrt(1 - t^2), and 2(m - n) further eigenvalues are ±1 with equal
/// multiplicities.
pub fn walk_spectrum_from_transition(
    transition_spectrum: &ComplexSpectrum,
    n: usize,
    m: usize,
    tol: f64,
) -> Result<ComplexSpectrum, SpectrumError> {
    if transition_spectrum.len() != n {
        return Err(SpectrumError::WrongCount {
            expected: n,
            got: transition_spectrum.len(),
        });
    }
    if m < n {
        return Err(SpectrumError::TooFewEdges { n, m });
    }
    let reals = transition_spectrum.reals(tol)?;
    let mut out = Vec::with_capacity(2 * m);
    for t in reals {
        if t.abs() > 1.0 + tol {
            return Err(SpectrumError::TransitionOutOfRange { value: t, tol });
        }
        let s = (1.0 - t * t).max(0.0).sqrt();
        out.push(Complex64::new(t, s));
        out.push(Complex64::new(t, -s));
    }
    for _ in 0..m - n {
        out.push(Complex64::new(1.0, 0.0));
        out.push(Complex64::new(-1.0, 0.0));
    }
    Ok(ComplexSpectrum::new(out))
}

/// Spectrum of the positive support of the walk operator of a k-regular
/// graph, from the adjacency spectrum: each adjacency eigenvalue a yields
/// the roots of z^2 - a z + (k - 1), and the remaining n(k-2) eigenvalues
/// are ±1 in equal halves.
///
/// The equal split follows from the determinant identity
/// det(I - zB) = (1 - z^2)^{m-n} det(I - zA + z^2 (k-1) I) for the
/// non-backtracking operator B, and is confirmed numerically by the
/// verification suite.
pub fn positive_support_spectrum(
    adjacency_spectrum: &ComplexSpectrum,
    n: usize,
    k: usize,
    tol: f64,
) -> Result<ComplexSpectrum, SpectrumError> {
    if k < 3 {
        return Err(SpectrumError::DegreeTooSmall { k });
    }
    if adjacency_spectrum.len() != n {
        return Err(SpectrumError::WrongCount {
            expected: n,
            got: adjacency_spectrum.len(),
        });
    }
    let reals = adjacency_spectrum.reals(tol)?;
    let mut out = Vec::with_capacity(n * k);
    for a in reals {
        let disc = (k - 1) as f64 - a * a / 4.0;
        if disc >= 0.0 {
            let s = disc.sqrt();
            out.push(Complex64::new(a / 2.0, s));
            out.push(Complex64::new(a / 2.0, -s));
        } else {
            let s = (-disc).sqrt();
            out.push(Complex64::new(a / 2.0 + s, 0.0));
            out.push(Complex64::new(a / 2.0 - s, 0.0));
        }
    }
    let half = n * (k - 2) / 2;
    for _ in 0..half {
        out.push(Complex64::new(1.0, 0.0));
        out.push(Complex64::new(-1.0, 0.0));
    }
    Ok(ComplexSpectrum::new(out))
}

/// Spectrum of the positive support of the squared walk operator of a
/// k-regular graph: each adjacency eigenvalue a yields the pair
/// a^2/2 + 2 - k ± i a sqrt(k - 1 - a^2/4), and the remaining n(k-2)
/// eigenvalues all equal 2.
pub fn positive_support_square_spectrum(
    adjacency_spectrum: &ComplexSpectrum,
    n: usize,
    k: usize,
    tol: f64,
) -> Result<ComplexSpectrum, SpectrumError> {
    if k < 3 {
        return Err(SpectrumError::DegreeTooSmall { k });
    }
    if adjacency_spectrum.len() != n {
        return Err(SpectrumError::WrongCount {
            expected: n,
            got: adjacency_spectrum.len(),
        });
    }
    let reals = adjacency_spectrum.reals(tol)?;
    let mut out = Vec::with_capacity(n * k);
    for a in reals {
        let base = a * a / 2.0 + 2.0 - k as f64;
        let disc = (k - 1) as f64 - a * a / 4.0;
        if disc >= 0.0 {
            let s = a * disc.sqrt();
            out.push(Complex64::new(base, s));
            out.push(Complex64::new(base, -s));
        } else {
            let s = a * (-disc).sqrt();
            out.push(Complex64::new(base - s, 0.0));
            out.push(Complex64::new(base + s, 0.0));
        }
    }
    for _ in 0..n * (k - 2) {
        out.push(Complex64::new(2.0, 0.0));
    }
    Ok(ComplexSpectrum::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn multiset_eq_basics() {
        let a = ComplexSpectrum::new(vec![c(1.0, 0.0), c(0.0, 1.0)]);
        assert!(multiset_eq(&a, &a, 0.0));
        let b = ComplexSpectrum::new(vec![c(0.0, 1.0), c(1.0, 0.0)]);
        assert!(multiset_eq(&a, &b, 0.0));
        let tol = 1e-6;
        let shifted = ComplexSpectrum::new(vec![c(1.0 + 2.0 * tol, 0.0), c(0.0, 1.0)]);
        assert!(!multiset_eq(&a, &shifted, tol));
        let short = ComplexSpectrum::new(vec![c(1.0, 0.0)]);
        assert!(!multiset_eq(&a, &short, 1.0));
    }

    #[test]
    fn transition_pairs() {
        // t = 1 collapses to a double 1; t = 0 gives ±i.
        let sp = ComplexSpectrum::from_reals(&[1.0, 0.0]);
        let out = walk_spectrum_from_transition(&sp, 2, 2, 1e-12).unwrap();
        let expected =
            ComplexSpectrum::new(vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)]);
        assert!(multiset_eq(&out, &expected, 1e-12));
    }

    #[test]
    fn transition_extra_pm_one_block() {
        let sp = ComplexSpectrum::from_reals(&[1.0, -0.5]);
        let out = walk_spectrum_from_transition(&sp, 2, 4, 1e-12).unwrap();
        assert_eq!(out.len(), 8);
        assert_eq!(out.count_near(c(1.0, 0.0), 1e-9), 4); // pair from t=1 plus two appended
        assert_eq!(out.count_near(c(-1.0, 0.0), 1e-9), 2);
    }

    #[test]
    fn transition_rejects_out_of_range() {
        let sp = ComplexSpectrum::from_reals(&[1.5]);
        assert!(matches!(
            walk_spectrum_from_transition(&sp, 1, 1, 1e-9),
            Err(SpectrumError::TransitionOutOfRange { .. })
        ));
    }

    #[test]
    fn positive_support_zero_eigenvalue() {
        // a = 0 contributes ± i sqrt(k-1).
        let sp = ComplexSpectrum::from_reals(&[0.0]);
        let out = positive_support_spectrum(&sp, 1, 5, 1e-12).unwrap();
        assert_eq!(out.count_near(c(0.0, 2.0), 1e-12), 1);
        assert_eq!(out.count_near(c(0.0, -2.0), 1e-12), 1);
    }

    #[test]
    fn positive_support_real_branch() {
        // a = k gives the real pair {k-1, 1}.
        let sp = ComplexSpectrum::from_reals(&[3.0]);
        let out = positive_support_spectrum(&sp, 1, 3, 1e-12).unwrap();
        assert_eq!(out.count_near(c(2.0, 0.0), 1e-12), 1);
        assert_eq!(out.count_near(c(1.0, 0.0), 1e-12), 1);
    }

    #[test]
    fn square_support_values() {
        // a = 0 doubles 2 - k; a = k = 3 gives {2, 5}.
        let sp = ComplexSpectrum::from_reals(&[0.0]);
        let out = positive_support_square_spectrum(&sp, 1, 4, 1e-12).unwrap();
        assert_eq!(out.count_near(c(-2.0, 0.0), 1e-12), 2);
        let sp = ComplexSpectrum::from_reals(&[3.0]);
        let out = positive_support_square_spectrum(&sp, 1, 3, 1e-12).unwrap();
        assert_eq!(out.count_near(c(2.0, 0.0), 1e-12), 2); // one formula root + n(k-2)=1 copy
        assert_eq!(out.count_near(c(5.0, 0.0), 1e-12), 1);
    }

    #[test]
    fn degree_guard() {
        let sp = ComplexSpectrum::from_reals(&[0.0]);
        assert!(matches!(
            positive_support_spectrum(&sp, 1, 2, 1e-12),
            Err(SpectrumError::DegreeTooSmall { k: 2 })
        ));
    }
}
