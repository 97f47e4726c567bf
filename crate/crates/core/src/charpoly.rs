//! Characteristic-polynomial signatures of integer matrices.
//!
//! Two backends share one comparable signature type: a division-free
//! (Berkowitz) computation over big integers for certainty at small scale,
//! and Hessenberg reduction over fixed prime fields for speed at family
//! scale. A difference modulo any prime already certifies different
//! spectra; equality across the prime set is escalated to the exact
//! backend by callers before anything is reported as a collision.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Fixed signature primes, all near 2^61. Published so that signatures are
/// reproducible across runs and machines.
pub const SIGNATURE_PRIMES: [u64; 4] = [
    2305843009213693951, // 2^61 - 1
    2305843009213693967,
    2305843009213693973,
    2305843009213694009,
];

/// Largest dimension the exact backend accepts by default. Above it the
/// big-integer coefficients make the division-free algorithm impractical;
/// callers are directed to the modular backend.
pub const EXACT_DIM_CUTOFF: usize = 600;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharPolyError {
    #[error("dimension {dim} exceeds the exact-mode cutoff {cutoff}; use modular signatures")]
    DimensionOverCutoff { dim: usize, cutoff: usize },
    #[error("modulus {prime} is not a valid prime (must be at least 2)")]
    BadPrime { prime: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignatureMode {
    Exact,
    Modular,
}

impl fmt::Display for SignatureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignatureMode::Exact => write!(f, "exact"),
            SignatureMode::Modular => write!(f, "modular"),
        }
    }
}

/// Canonical comparable encoding of an integer-matrix spectrum: the monic
/// characteristic polynomial, exactly or reduced modulo the fixed primes.
/// Equality of signatures is a pure data comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPolySignature {
    degree: usize,
    data: SignatureData,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum SignatureData {
    /// Coefficients of det(xI - M), leading (always 1) first.
    Exact(Vec<BigInt>),
    /// Per-prime coefficient lists, same order, one per signature prime.
    Modular(Vec<(u64, Vec<u64>)>),
}

impl CharPolySignature {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn mode(&self) -> SignatureMode {
        match self.data {
            SignatureData::Exact(_) => SignatureMode::Exact,
            SignatureData::Modular(_) => SignatureMode::Modular,
        }
    }

    pub fn exact_coefficients(&self) -> Option<&[BigInt]> {
        match &self.data {
            SignatureData::Exact(c) => Some(c),
            SignatureData::Modular(_) => None,
        }
    }

    /// Reduction of an exact signature to modular form over `primes`.
    pub fn reduce_mod(&self, primes: &[u64]) -> Option<CharPolySignature> {
        let coeffs = self.exact_coefficients()?;
        let data = primes
            .iter()
            .map(|&p| {
                let pm = BigInt::from(p);
                let reduced = coeffs
                    .iter()
                    .map(|c| {
                        let mut r = c % &pm;
                        if r.is_negative() {
                            r += &pm;
                        }
                        u64::try_from(r).expect("residue fits")
                    })
                    .collect();
                (p, reduced)
            })
            .collect();
        Some(CharPolySignature {
            degree: self.degree,
            data: SignatureData::Modular(data),
        })
    }

    /// Stable ascii form: `degree:mode:coeffs` for exact signatures and
    /// `degree:mode:prime=coeffs;...` for modular ones, coefficients
    /// leading-first and comma-separated.
    pub fn serialize(&self) -> String {
        match &self.data {
            SignatureData::Exact(coeffs) => {
                format!("{}:exact:{}", self.degree, join_big(coeffs))
            }
            SignatureData::Modular(per_prime) => {
                let body: Vec<String> = per_prime
                    .iter()
                    .map(|(p, cs)| format!("{p}={}", join_u64(cs)))
                    .collect();
                format!("{}:modular:{}", self.degree, body.join(";"))
            }
        }
    }

    pub fn parse(text: &str) -> Option<CharPolySignature> {
        let mut parts = text.splitn(3, ':');
        let degree: usize = parts.next()?.parse().ok()?;
        let mode = parts.next()?;
        let body = parts.next()?;
        let expected = degree + 1;
        let data = match mode {
            "exact" => {
                let coeffs: Option<Vec<BigInt>> = body.split(',').map(|t| t.parse().ok()).collect();
                let coeffs = coeffs?;
                if coeffs.len() != expected {
                    return None;
                }
                SignatureData::Exact(coeffs)
            }
            "modular" => {
                let mut per_prime = Vec::new();
                for chunk in body.split(';') {
                    let (p, cs) = chunk.split_once('=')?;
                    let prime: u64 = p.parse().ok()?;
                    let coeffs: Option<Vec<u64>> = cs.split(',').map(|t| t.parse().ok()).collect();
                    let coeffs = coeffs?;
                    if coeffs.len() != expected {
                        return None;
                    }
                    per_prime.push((prime, coeffs));
                }
                SignatureData::Modular(per_prime)
            }
            _ => return None,
        };
        Some(CharPolySignature { degree, data })
    }
}

fn join_big(v: &[BigInt]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn join_u64(v: &[u64]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Computes a signature in the requested mode. Modular mode evaluates the
/// characteristic polynomial over every prime in [`SIGNATURE_PRIMES`].
pub fn signature(m: &IntMatrix, mode: SignatureMode) -> Result<CharPolySignature, CharPolyError> {
    match mode {
        SignatureMode::Exact => Ok(CharPolySignature {
            degree: m.dim(),
            data: SignatureData::Exact(charpoly_exact(m)?),
        }),
        SignatureMode::Modular => modular_signature_with_primes(m, &SIGNATURE_PRIMES),
    }
}

/// Modular signature over a caller-chosen prime subset. The streaming scan
/// path groups by a single prime first and widens only on ties.
pub fn modular_signature_with_primes(
    m: &IntMatrix,
    primes: &[u64],
) -> Result<CharPolySignature, CharPolyError> {
    Ok(CharPolySignature {
        degree: m.dim(),
        data: SignatureData::Modular(
            primes
                .iter()
                .map(|&p| charpoly_mod_p(m, p).map(|cs| (p, cs)))
                .collect::<Result<_, _>>()?,
        ),
    })
}

/// Monic coefficients of det(xI - M), leading first, by the division-free
/// Berkowitz scheme: the coefficient vector of each leading principal
/// submatrix is pushed through a Toeplitz matrix built from closed walks
/// that leave and re-enter the new row.
pub fn charpoly_exact(m: &IntMatrix) -> Result<Vec<BigInt>, CharPolyError> {
    charpoly_exact_with_cutoff(m, EXACT_DIM_CUTOFF)
}

pub fn charpoly_exact_with_cutoff(
    m: &IntMatrix,
    cutoff: usize,
) -> Result<Vec<BigInt>, CharPolyError> {
    let n = m.dim();
    if n > cutoff {
        return Err(CharPolyError::DimensionOverCutoff { dim: n, cutoff });
    }
    if n == 0 {
        return Ok(vec![BigInt::one()]);
    }
    let mut coeffs = vec![BigInt::one(), BigInt::from(-m.get(0, 0))];
    for r in 1..n {
        // Toeplitz column for the (r+1)-th leading submatrix:
        // 1, -a_rr, -(R S), -(R M S), -(R M^2 S), ...
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(BigInt::from(-m.get(r, r)));
        let mut v: Vec<BigInt> = (0..r).map(|i| BigInt::from(m.get(i, r))).collect();
        for step in 0..r {
            let dot: BigInt = (0..r).map(|i| BigInt::from(m.get(r, i)) * &v[i]).sum();
            t.push(-dot);
            if step + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).map(|k| BigInt::from(m.get(i, k)) * &v[k]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (k, slot) in next.iter_mut().enumerate() {
            let lo = k.saturating_sub(t.len() - 1);
            for (j, c) in coeffs.iter().enumerate().take(k + 1).skip(lo) {
                *slot += &t[k - j] * c;
            }
        }
        coeffs = next;
    }
    Ok(coeffs)
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime in all callers.
    pow_mod(a, p - 2, p)
}

/// Characteristic polynomial over the field Z/p: similarity reduction to
/// Hessenberg form followed by the leading-minor recurrence, O(n^3) field
/// operations in total. Coefficients leading-first, reduced mod `p`.
pub fn charpoly_mod_p(m: &IntMatrix, p: u64) -> Result<Vec<u64>, CharPolyError> {
    if p <= 1 {
        return Err(CharPolyError::BadPrime { prime: p });
    }
    let n = m.dim();
    let mut h = vec![0u64; n * n];
    for r in 0..n {
        for c in 0..n {
            h[r * n + c] = (m.get(r, c) as i128).rem_euclid(p as i128) as u64;
        }
    }

    // Hessenberg reduction with column pivoting; every elimination is a
    // similarity, so the characteristic polynomial is preserved.
    for j in 0..n.saturating_sub(2) {
        let Some(pivot) = ((j + 1)..n).find(|&i| h[i * n + j] != 0) else {
            continue;
        };
        if pivot != j + 1 {
            for c in 0..n {
                h.swap(pivot * n + c, (j + 1) * n + c);
            }
            for r in 0..n {
                h.swap(r * n + pivot, r * n + j + 1);
            }
        }
        let inv = inv_mod(h[(j + 1) * n + j], p);
        for i in (j + 2)..n {
            if h[i * n + j] == 0 {
                continue;
            }
            let f = mul_mod(h[i * n + j], inv, p);
            for c in j..n {
                let delta = mul_mod(f, h[(j + 1) * n + c], p);
                h[i * n + c] = sub_mod(h[i * n + c], delta, p);
            }
            for r in 0..n {
                let delta = mul_mod(f, h[r * n + i], p);
                h[r * n + j + 1] = (h[r * n + j + 1] + delta) % p;
            }
        }
    }

    // phi_i = charpoly of the leading i x i block (ascending coefficients).
    let mut phis: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    phis.push(vec![1]);
    for i in 1..=n {
        let mut poly = shift_times_x_minus(&phis[i - 1], h[(i - 1) * n + (i - 1)], p);
        let mut subdiag = 1u64;
        for k in 1..i {
            subdiag = mul_mod(subdiag, h[(i - k) * n + (i - k - 1)], p);
            if subdiag == 0 {
                break;
            }
            let factor = mul_mod(h[(i - k - 1) * n + (i - 1)], subdiag, p);
            if factor == 0 {
                continue;
            }
            for (pos, &c) in phis[i - k - 1].iter().enumerate() {
                poly[pos] = sub_mod(poly[pos], mul_mod(factor, c, p), p);
            }
        }
        phis.push(poly);
    }
    let mut out = phis.pop().expect("n+1 entries");
    out.reverse();
    Ok(out)
}

/// (x - a) * poly, ascending coefficients.
fn shift_times_x_minus(poly: &[u64], a: u64, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; poly.len() + 1];
    for (i, &c) in poly.iter().enumerate() {
        out[i + 1] = (out[i + 1] + c) % p;
        out[i] = sub_mod(out[i], mul_mod(a, c, p), p);
    }
    out
}
