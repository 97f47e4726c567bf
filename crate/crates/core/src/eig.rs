//! Dense nonsymmetric eigenvalue solver: Householder reduction to upper
//! Hessenberg form followed by the implicitly shifted (Francis double-shift)
//! QR iteration, eigenvalues only. The classic EISPACK organization.

use num_complex::Complex64;
use thiserror::Error;

/// Hard cap on input dimension; QR on dense storage beyond this is outside
/// the solver's intended envelope.
pub const MAX_EIG_DIM: usize = 2000;

const MAX_ITER_PER_EIGENVALUE: usize = 100;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EigError {
    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("dimension {dim} exceeds the eigensolver limit {MAX_EIG_DIM}")]
    TooLarge { dim: usize },
    #[error("QR iteration failed to converge while {remaining} eigenvalues were outstanding")]
    NoConvergence { remaining: usize },
}

/// All eigenvalues of a real square matrix. Complex eigenvalues of real
/// input come out in conjugate pairs by construction.
pub fn eigenvalues(rows: &[Vec<f64>]) -> Result<Vec<Complex64>, EigError> {
    let n = rows.len();
    if n > MAX_EIG_DIM {
        return Err(EigError::TooLarge { dim: n });
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(EigError::NotSquare {
                row: r,
                found: row.len(),
                expected: n,
            });
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut h = vec![0.0f64; n * n];
    for (r, row) in rows.iter().enumerate() {
        h[r * n..(r + 1) * n].copy_from_slice(row);
    }
    hessenberg(&mut h, n);
    francis_qr(&mut h, n)
}

/// In-place Householder reduction to upper Hessenberg form.
fn hessenberg(h: &mut [f64], n: usize) {
    if n < 3 {
        return;
    }
    let mut ort = vec![0.0f64; n];
    let high = n - 1;
    for m in 1..high {
        let mut scale = 0.0;
        for i in m..=high {
            scale += h[i * n + m - 1].abs();
        }
        if scale == 0.0 {
            continue;
        }
        let mut hsum = 0.0;
        for i in (m..=high).rev() {
            ort[i] = h[i * n + m - 1] / scale;
            hsum += ort[i] * ort[i];
        }
        let mut g = hsum.sqrt();
        if ort[m] > 0.0 {
            g = -g;
        }
        hsum -= ort[m] * g;
        ort[m] -= g;

        // Apply the similarity H <- (I - uu'/h) H (I - uu'/h) in two sweeps.
        for j in m..n {
            let mut f = 0.0;
            for i in (m..=high).rev() {
                f += ort[i] * h[i * n + j];
            }
            f /= hsum;
            for i in m..=high {
                h[i * n + j] -= f * ort[i];
            }
        }
        for i in 0..=high {
            let mut f = 0.0;
            for j in (m..=high).rev() {
                f += ort[j] * h[i * n + j];
            }
            f /= hsum;
            for j in m..=high {
                h[i * n + j] -= f * ort[j];
            }
        }
        h[m * n + m - 1] = scale * g;
        for i in (m + 1)..=high {
            h[i * n + m - 1] = 0.0;
        }
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix; returns the
/// eigenvalue list or a convergence error.
fn francis_qr(h: &mut [f64], nn: usize) -> Result<Vec<Complex64>, EigError> {
    let eps = f64::EPSILON;
    let mut values = vec![Complex64::new(0.0, 0.0); nn];
    let idx = |i: isize, j: isize| (i as usize) * nn + (j as usize);

    let mut norm = 0.0f64;
    for i in 0..nn as isize {
        for j in (i - 1).max(0)..nn as isize {
            norm += h[idx(i, j)].abs();
        }
    }
    if norm == 0.0 {
        return Ok(values);
    }

    let low: isize = 0;
    let high: isize = nn as isize - 1;
    let mut n: isize = high;
    let mut exshift = 0.0f64;
    let (mut p, mut q, mut r, mut s, mut z): (f64, f64, f64, f64, f64);
    let (mut w, mut x, mut y): (f64, f64, f64);
    p = 0.0;
    q = 0.0;
    r = 0.0;
    let mut iter = 0usize;

    while n >= low {
        // Look for a single small subdiagonal element.
        let mut l = n;
        while l > low {
            s = h[idx(l - 1, l - 1)].abs() + h[idx(l, l)].abs();
            if s == 0.0 {
                s = norm;
            }
            if h[idx(l, l - 1)].abs() < eps * s {
                break;
            }
            l -= 1;
        }

        if l == n {
            // One root found.
            h[idx(n, n)] += exshift;
            values[n as usize] = Complex64::new(h[idx(n, n)], 0.0);
            n -= 1;
            iter = 0;
        } else if l == n - 1 {
            // Two roots found (real pair or complex conjugates).
            w = h[idx(n, n - 1)] * h[idx(n - 1, n)];
            p = (h[idx(n - 1, n - 1)] - h[idx(n, n)]) / 2.0;
            q = p * p + w;
            z = q.abs().sqrt();
            h[idx(n, n)] += exshift;
            h[idx(n - 1, n - 1)] += exshift;
            x = h[idx(n, n)];
            if q >= 0.0 {
                z = if p >= 0.0 { p + z } else { p - z };
                let first = x + z;
                let second = if z != 0.0 { x - w / z } else { first };
                values[(n - 1) as usize] = Complex64::new(first, 0.0);
                values[n as usize] = Complex64::new(second, 0.0);
            } else {
                values[(n - 1) as usize] = Complex64::new(x + p, z);
                values[n as usize] = Complex64::new(x + p, -z);
            }
            n -= 2;
            iter = 0;
        } else {
            // Form a shift.
            x = h[idx(n, n)];
            y = 0.0;
            w = 0.0;
            if l < n {
                y = h[idx(n - 1, n - 1)];
                w = h[idx(n, n - 1)] * h[idx(n - 1, n)];
            }

            // Occasional exceptional shifts to break limit cycles.
            if iter == 10 || iter == 20 {
                exshift += x;
                for i in low..=n {
                    h[idx(i, i)] -= x;
                }
                s = h[idx(n, n - 1)].abs() + h[idx(n - 1, n - 2)].abs();
                y = 0.75 * s;
                x = y;
                w = -0.4375 * s * s;
            }
            if iter == 30 {
                s = (y - x) / 2.0;
                s = s * s + w;
                if s > 0.0 {
                    s = s.sqrt();
                    if y < x {
                        s = -s;
                    }
                    s = x - w / ((y - x) / 2.0 + s);
                    for i in low..=n {
                        h[idx(i, i)] -= s;
                    }
                    exshift += s;
                    x = 0.964;
                    y = x;
                    w = x;
                }
            }

            iter += 1;
            if iter > MAX_ITER_PER_EIGENVALUE {
                return Err(EigError::NoConvergence {
                    remaining: (n - low + 1) as usize,
                });
            }

            // Two consecutive small subdiagonal elements.
            let mut m = n - 2;
            while m >= l {
                z = h[idx(m, m)];
                r = x - z;
                s = y - z;
                p = (r * s - w) / h[idx(m + 1, m)] + h[idx(m, m + 1)];
                q = h[idx(m + 1, m + 1)] - z - r - s;
                r = h[idx(m + 2, m + 1)];
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                if h[idx(m, m - 1)].abs() * (q.abs() + r.abs())
                    < eps
                        * (p.abs()
                            * (h[idx(m - 1, m - 1)].abs() + z.abs() + h[idx(m + 1, m + 1)].abs()))
                {
                    break;
                }
                m -= 1;
            }
            for i in (m + 2)..=n {
                h[idx(i, i - 2)] = 0.0;
                if i > m + 2 {
                    h[idx(i, i - 3)] = 0.0;
                }
            }

            // Double QR sweep on rows l..=n, columns m..=n.
            for k in m..n {
                let notlast = k != n - 1;
                if k != m {
                    p = h[idx(k, k - 1)];
                    q = h[idx(k + 1, k - 1)];
                    r = if notlast { h[idx(k + 2, k - 1)] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x == 0.0 {
                        continue;
                    }
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = (p * p + q * q + r * r).sqrt();
                if p < 0.0 {
                    s = -s;
                }
                if s == 0.0 {
                    continue;
                }
                if k != m {
                    h[idx(k, k - 1)] = -s * x;
                } else if l != m {
                    h[idx(k, k - 1)] = -h[idx(k, k - 1)];
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;

                for j in k..nn as isize {
                    p = h[idx(k, j)] + q * h[idx(k + 1, j)];
                    if notlast {
                        p += r * h[idx(k + 2, j)];
                        h[idx(k + 2, j)] -= p * z;
                    }
                    h[idx(k, j)] -= p * x;
                    h[idx(k + 1, j)] -= p * y;
                }
                let upper = n.min(k + 3);
                for i in 0..=upper {
                    p = x * h[idx(i, k)] + y * h[idx(i, k + 1)];
                    if notlast {
                        p += z * h[idx(i, k + 2)];
                        h[idx(i, k + 2)] -= p * r;
                    }
                    h[idx(i, k)] -= p;
                    h[idx(i, k + 1)] -= p * q;
                }
            }
        }
    }
    Ok(values)
}
