//! Row-vector linear algebra over a finite field, on packed element values.
//!
//! Matrices are `Vec<Vec<u8>>` of packed field values (see [`crate::gf`]),
//! rows first. Subspaces of the coordinate space are represented by their
//! reduced row-echelon form with zero rows dropped, which is a unique and
//! hashable canonical form: equal row spaces produce byte-identical bases.

use crate::gf::FieldSpec;

pub type Mat = Vec<Vec<u8>>;

/// Reduced row-echelon form with zero rows removed. Pivots are 1, pivot
/// columns are cleared elsewhere, rows sorted by pivot column.
pub fn rref(f: &FieldSpec, m: &Mat) -> Mat {
    let mut a: Mat = m.clone();
    let rows = a.len();
    if rows == 0 {
        return a;
    }
    let cols = a[0].len();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(pivot_row, src);
        let inv = f.inv_v(a[pivot_row][col]).expect("nonzero pivot");
        for c in col..cols {
            a[pivot_row][c] = f.mul_v(a[pivot_row][c], inv);
        }
        for r in 0..rows {
            if r != pivot_row && a[r][col] != 0 {
                let factor = a[r][col];
                for c in col..cols {
                    let sub = f.mul_v(factor, a[pivot_row][c]);
                    a[r][c] = f.sub_v(a[r][c], sub);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    a.truncate(pivot_row);
    a
}

pub fn rank(f: &FieldSpec, m: &Mat) -> usize {
    rref(f, m).len()
}

/// Does `v` lie in the row space of the RREF matrix `basis`?
pub fn in_row_space(f: &FieldSpec, basis: &Mat, v: &[u8]) -> bool {
    let mut v = v.to_vec();
    for row in basis {
        let pivot = row.iter().position(|&x| x != 0).expect("no zero rows");
        if v[pivot] != 0 {
            let factor = v[pivot];
            for c in 0..v.len() {
                let sub = f.mul_v(factor, row[c]);
                v[c] = f.sub_v(v[c], sub);
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

/// Row space of the stacked matrices: the span of the two subspaces.
pub fn span(f: &FieldSpec, a: &Mat, b: &Mat) -> Mat {
    let mut stacked = a.clone();
    stacked.extend(b.iter().cloned());
    rref(f, &stacked)
}

/// Intersection of two row spaces by the Zassenhaus block trick: rows
/// [a | a] and [b | 0]; after elimination, rows whose left block vanished
/// carry an intersection basis in the right block.
pub fn meet(f: &FieldSpec, a: &Mat, b: &Mat) -> Mat {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut block: Mat = Vec::new();
    for row in a {
        let mut r = row.clone();
        r.extend(row.iter().copied());
        block.push(r);
    }
    for row in b {
        let mut r = row.clone();
        r.extend(std::iter::repeat_n(0, cols));
        block.push(r);
    }
    let reduced = rref(f, &block);
    let mut out: Mat = Vec::new();
    for row in &reduced {
        if row[..cols].iter().all(|&x| x == 0) {
            out.push(row[cols..].to_vec());
        }
    }
    rref(f, &out)
}

/// Basis of the annihilator { y : x . y = 0 for all rows x } under the
/// standard dot pairing.
pub fn annihilator(f: &FieldSpec, m: &Mat, cols: usize) -> Mat {
    let red = rref(f, m);
    let pivots: Vec<usize> = red
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).unwrap())
        .collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Mat = Vec::new();
    for &fc in &free {
        let mut v = vec![0u8; cols];
        v[fc] = 1;
        // back-substitute pivot coordinates: pivot p of row r gives
        // v[p] = -sum_{c != p} red[r][c] * v[c]
        for (r, &p) in pivots.iter().enumerate() {
            let mut acc = 0u8;
            for c in 0..cols {
                if c != p {
                    acc = f.add_v(acc, f.mul_v(red[r][c], v[c]));
                }
            }
            v[p] = f.neg_v(acc);
        }
        basis.push(v);
    }
    rref(f, &basis)
}

/// Determinant by elimination; square matrices only.
pub fn det(f: &FieldSpec, m: &Mat) -> u8 {
    let n = m.len();
    let mut a = m.clone();
    let mut result = 1u8;
    for col in 0..n {
        let Some(src) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if src != col {
            a.swap(col, src);
            result = f.neg_v(result);
        }
        result = f.mul_v(result, a[col][col]);
        let inv = f.inv_v(a[col][col]).unwrap();
        for r in col + 1..n {
            if a[r][col] != 0 {
                let factor = f.mul_v(a[r][col], inv);
                for c in col..n {
                    let sub = f.mul_v(factor, a[col][c]);
                    a[r][c] = f.sub_v(a[r][c], sub);
                }
            }
        }
    }
    result
}

/// Matrix product.
pub fn matmul(f: &FieldSpec, a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let inner = b.len();
    let cols = b[0].len();
    let mut out = vec![vec![0u8; cols]; n];
    for i in 0..n {
        for j in 0..cols {
            let mut acc = 0u8;
            for t in 0..inner {
                acc = f.add_v(acc, f.mul_v(a[i][t], b[t][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Row vector times matrix.
pub fn vecmat(f: &FieldSpec, v: &[u8], m: &Mat) -> Vec<u8> {
    let cols = m[0].len();
    let mut out = vec![0u8; cols];
    for (vi, row) in v.iter().zip(m) {
        if *vi != 0 {
            for c in 0..cols {
                out[c] = f.add_v(out[c], f.mul_v(*vi, row[c]));
            }
        }
    }
    out
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            let mut row = vec![0u8; n];
            row[i] = 1;
            row
        })
        .collect()
}

pub fn transpose(m: &Mat) -> Mat {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols)
        .map(|c| (0..rows).map(|r| m[r][c]).collect())
        .collect()
}

/// Inverse of a square invertible matrix by Gauss-Jordan on [m | I].
pub fn inverse(f: &FieldSpec, m: &Mat) -> Option<Mat> {
    let n = m.len();
    let mut aug: Mat = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u8::from(j == i)));
            r
        })
        .collect();
    aug = rref(f, &aug);
    if aug.len() < n {
        return None;
    }
    for (i, row) in aug.iter().enumerate() {
        if row[i] != 1 || row[..i].iter().any(|&x| x != 0) {
            return None;
        }
    }
    Some(aug.iter().map(|r| r[n..].to_vec()).collect())
}
