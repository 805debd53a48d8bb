//! Fixed-size linear algebra for the five-dimensional group representation.
//!
//! Homogeneous coordinates are ordered (u1, u2, u3, u4, u5) with the event
//! chart u = (x/R, y/R, z/R, ct/R, 1); the invariant quadratic form is
//! diagonal with signs (+, +, +, -, +).

pub(crate) type Vec5 = [f64; 5];
pub(crate) type Mat5 = [[f64; 5]; 5];

/// Diagonal of the signature form G.
pub(crate) const G_DIAG: [f64; 5] = [1.0, 1.0, 1.0, -1.0, 1.0];

pub(crate) fn identity() -> Mat5 {
    let mut m = [[0.0; 5]; 5];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

pub(crate) fn mat_mul(a: &Mat5, b: &Mat5) -> Mat5 {
    let mut out = [[0.0; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            let mut acc = 0.0;
            for k in 0..5 {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub(crate) fn mat_vec(a: &Mat5, v: &Vec5) -> Vec5 {
    let mut out = [0.0; 5];
    for i in 0..5 {
        let mut acc = 0.0;
        for k in 0..5 {
            acc += a[i][k] * v[k];
        }
        out[i] = acc;
    }
    out
}

/// Frobenius norm of M^T G M - G.
pub(crate) fn signature_defect(m: &Mat5) -> f64 {
    let mut acc = 0.0;
    for i in 0..5 {
        for j in 0..5 {
            let mut gram = 0.0;
            for k in 0..5 {
                gram += m[k][i] * G_DIAG[k] * m[k][j];
            }
            let target = if i == j { G_DIAG[i] } else { 0.0 };
            let d = gram - target;
            acc += d * d;
        }
    }
    acc.sqrt()
}

/// G M^T G, the inverse of a signature-orthogonal matrix. Entrywise exact:
/// only transposition and sign flips, no rounding.
pub(crate) fn signature_inverse(m: &Mat5) -> Mat5 {
    let mut out = [[0.0; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            out[i][j] = G_DIAG[i] * m[j][i] * G_DIAG[j];
        }
    }
    out
}

/// One Newton step toward the signature-orthogonal manifold,
/// M <- (3M - M G M^T G M) / 2. A fixed point for exactly orthogonal M;
/// contracts small defects quadratically.
pub(crate) fn refine_signature(m: &Mat5) -> Mat5 {
    let correction = mat_mul(m, &mat_mul(&signature_inverse(m), m));
    let mut out = [[0.0; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            out[i][j] = (3.0 * m[i][j] - correction[i][j]) / 2.0;
        }
    }
    out
}

/// Determinant by Gaussian elimination with partial pivoting.
pub(crate) fn det(m: &Mat5) -> f64 {
    let mut a = *m;
    let mut sign = 1.0;
    let mut prod = 1.0;
    for col in 0..5 {
        let mut piv = col;
        for row in col + 1..5 {
            if a[row][col].abs() > a[piv][col].abs() {
                piv = row;
            }
        }
        if a[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            a.swap(piv, col);
            sign = -sign;
        }
        prod *= a[col][col];
        let pivot_row = a[col];
        for row in a.iter_mut().skip(col + 1) {
            let f = row[col] / pivot_row[col];
            for (x, pv) in row.iter_mut().zip(pivot_row.iter()).skip(col) {
                *x -= f * pv;
            }
        }
    }
    sign * prod
}

/// Largest entrywise difference; test helper.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn max_abs_diff(a: &Mat5, b: &Mat5) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..5 {
        for j in 0..5 {
            worst = worst.max((a[i][j] - b[i][j]).abs());
        }
    }
    worst
}
