//! Minimal floating-point helpers for the order-theoretic checks:
//! positivity of restricted forms and distances between subspaces.
//! Everything here is advisory; algebraic identities are decided
//! exactly elsewhere.  Square roots are avoided throughout by working
//! with squared quantities.

use alloc::vec;
use alloc::vec::Vec;

/// Complex double.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

#[allow(clippy::should_implement_trait)]
impl C64 {
    pub fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }

    pub fn zero() -> Self {
        C64 { re: 0.0, im: 0.0 }
    }

    pub fn one() -> Self {
        C64 { re: 1.0, im: 0.0 }
    }

    pub fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }

    pub fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }

    pub fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }

    pub fn neg(self) -> C64 {
        C64::new(-self.re, -self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn inv(self) -> C64 {
        let n = self.norm_sqr();
        C64::new(self.re / n, -self.im / n)
    }
}

pub fn fabs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

/// 2x2 complex matrix operations for Moebius transforms.
pub type CMat2 = [[C64; 2]; 2];

pub fn cmat2_mul(a: &CMat2, b: &CMat2) -> CMat2 {
    let mut out = [[C64::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = C64::zero();
            for k in 0..2 {
                acc = acc.add(a[i][k].mul(b[k][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn cmat2_inv(a: &CMat2) -> Option<CMat2> {
    let det = a[0][0].mul(a[1][1]).sub(a[0][1].mul(a[1][0]));
    if det.norm_sqr() < 1e-300 {
        return None;
    }
    let di = det.inv();
    Some([
        [a[1][1].mul(di), a[0][1].neg().mul(di)],
        [a[1][0].neg().mul(di), a[0][0].mul(di)],
    ])
}

/// Is the symmetric 2x2 real matrix positive definite (within tol)?
pub fn sym2_positive_definite(a: f64, b: f64, c: f64, tol: f64) -> bool {
    a > tol && a * c - b * b > tol
}

/// Kernel of a real matrix (rows x 5), by Gauss elimination with
/// partial pivoting and a pivot tolerance.  Returns basis rows.
pub fn kernel_f64(rows: &[[f64; 5]], tol: f64) -> Vec<[f64; 5]> {
    let m = rows.len();
    let mut a: Vec<[f64; 5]> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..5 {
        if r == m {
            break;
        }
        // find pivot
        let mut best = r;
        for i in r..m {
            if fabs(a[i][c]) > fabs(a[best][c]) {
                best = i;
            }
        }
        if fabs(a[best][c]) <= tol {
            continue;
        }
        a.swap(r, best);
        let p = a[r][c];
        for j in 0..5 {
            a[r][j] /= p;
        }
        for i in 0..m {
            if i != r && fabs(a[i][c]) > 0.0 {
                let f = a[i][c];
                for j in 0..5 {
                    a[i][j] -= f * a[r][j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in 0..5 {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = [0.0f64; 5];
        v[free] = 1.0;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[i][free];
        }
        basis.push(v);
    }
    basis
}

/// Orthogonal projector onto the row span of `basis` (k x 5), via
/// P = A^t (A A^t)^{-1} A; no square roots needed.
pub fn projector(basis: &[[f64; 5]]) -> [[f64; 5]; 5] {
    let k = basis.len();
    // gram = A A^t (k x k)
    let mut gram = vec![vec![0.0f64; k]; k];
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            gram[i][j] = (0..5).map(|c| bi[c] * bj[c]).sum();
        }
    }
    let ginv = invert(&mut gram);
    // P = A^t ginv A
    let mut p = [[0.0f64; 5]; 5];
    for r in 0..5 {
        for c in 0..5 {
            let mut acc = 0.0;
            for i in 0..k {
                for j in 0..k {
                    acc += basis[i][r] * ginv[i][j] * basis[j][c];
                }
            }
            p[r][c] = acc;
        }
    }
    p
}

/// In-place Gauss-Jordan inverse of a small positive-definite matrix.
fn invert(a: &mut [Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut inv = vec![vec![0.0f64; n]; n];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for c in 0..n {
        let mut best = c;
        for r in c..n {
            if fabs(a[r][c]) > fabs(a[best][c]) {
                best = r;
            }
        }
        a.swap(c, best);
        inv.swap(c, best);
        let p = a[c][c];
        for j in 0..n {
            a[c][j] /= p;
            inv[c][j] /= p;
        }
        for r in 0..n {
            if r != c {
                let f = a[r][c];
                for j in 0..n {
                    a[r][j] -= f * a[c][j];
                    inv[r][j] -= f * inv[c][j];
                }
            }
        }
    }
    inv
}

/// Squared Frobenius distance between the projectors of two subspaces.
pub fn subspace_distance_sqr(a: &[[f64; 5]], b: &[[f64; 5]]) -> f64 {
    let pa = projector(a);
    let pb = projector(b);
    let mut d = 0.0;
    for r in 0..5 {
        for c in 0..5 {
            let x = pa[r][c] - pb[r][c];
            d += x * x;
        }
    }
    d
}

/// Squared relative distance of a vector from a subspace.
pub fn containment_defect_sqr(v: &[f64; 5], basis: &[[f64; 5]]) -> f64 {
    let p = projector(basis);
    let mut res = 0.0;
    let mut norm = 0.0;
    for r in 0..5 {
        let mut pv = 0.0;
        for c in 0..5 {
            pv += p[r][c] * v[c];
        }
        let diff = v[r] - pv;
        res += diff * diff;
        norm += v[r] * v[r];
    }
    if norm == 0.0 {
        0.0
    } else {
        res / norm
    }
}
