//! Dense matrices over a [`Field`], with exact Gaussian elimination.
//!
//! Row reduction is deterministic (first nonzero pivot in column order), so
//! reduced row echelon forms are unique and reproducible. Over GF(2) the
//! elimination and multiplication kernels run on bit-packed rows; the packing
//! is invisible in the interface.

use crate::error::Error;
use crate::field::{Field, FieldElement};

/// Row-major matrix; every entry lives in the one owner field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

/// Result of row reduction: `mat = transform * original`, `transform`
/// invertible, `mat` in reduced row echelon form.
pub struct Rref {
    pub mat: Matrix,
    pub transform: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_raw_rows(field: &Field, rows: Vec<Vec<u32>>) -> Result<Matrix, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(Error::Shape("ragged rows".into()));
            }
            for &v in row {
                if v as u64 >= field.order() {
                    return Err(Error::BadField(format!("entry {v} out of range")));
                }
                data.push(v);
            }
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data })
    }

    /// Rows given as integers, reduced into the field through Z -> GF(p).
    pub fn from_int_rows(field: &Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            for &v in *row {
                data.push(field.from_int(v).value() as u32);
            }
        }
        Matrix { field: field.clone(), rows: r, cols: c, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn raw(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set_raw(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!((v as u64) < self.field.order());
        self.data[i * self.cols + j] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.elem(self.raw(i, j) as u64).unwrap()
    }

    pub fn set(&mut self, i: usize, j: usize, v: &FieldElement) -> Result<(), Error> {
        if v.field() != &self.field {
            return Err(Error::OwnerMismatch);
        }
        self.set_raw(i, j, v.value() as u32);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.raw(i, j);
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.field != other.field {
            return Err(Error::OwnerMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "add {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = self.field.radd(*a, b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.add(&other.scale_raw(self.field.rneg(1)))
    }

    pub fn scale_raw(&self, c: u32) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.rmul(*a, c);
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.field != other.field {
            return Err(Error::OwnerMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field.is_gf2() {
            return Ok(self.mul_gf2(other));
        }
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.raw(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.raw(k, j);
                    if b != 0 {
                        let t = f.radd(out.raw(i, j), f.rmul(a, b));
                        out.data[i * other.cols + j] = t;
                    }
                }
            }
        }
        Ok(out)
    }

    fn mul_gf2(&self, other: &Matrix) -> Matrix {
        let wc = words(other.cols);
        let b = pack_gf2(other);
        let mut out_bits = vec![0u64; self.rows * wc];
        for i in 0..self.rows {
            let dst = &mut out_bits[i * wc..(i + 1) * wc];
            for k in 0..self.cols {
                if self.raw(i, k) == 1 {
                    let src = &b[k * wc..(k + 1) * wc];
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d ^= s;
                    }
                }
            }
        }
        unpack_gf2(&self.field, self.rows, other.cols, &out_bits)
    }

    /// Reduced row echelon form with recorded transform.
    pub fn rref(&self) -> Rref {
        if self.field.is_gf2() {
            return self.rref_gf2();
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let mut t = Matrix::identity(&f, self.rows);
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..self.cols {
            let Some(pr) = (r..self.rows).find(|&i| m.raw(i, col) != 0) else {
                continue;
            };
            if pr != r {
                m.swap_rows(pr, r);
                t.swap_rows(pr, r);
            }
            let inv = f.rinv(m.raw(r, col)).unwrap();
            m.scale_row(r, inv);
            t.scale_row(r, inv);
            for i in 0..self.rows {
                if i != r {
                    let c = m.raw(i, col);
                    if c != 0 {
                        let nc = f.rneg(c);
                        m.add_multiple(i, r, nc);
                        t.add_multiple(i, r, nc);
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        Rref { mat: m, transform: t, rank: r, pivots }
    }

    fn rref_gf2(&self) -> Rref {
        let wc = words(self.cols);
        let wt = words(self.rows);
        let mut m = pack_gf2(self);
        let mut t = vec![0u64; self.rows * wt];
        for i in 0..self.rows {
            t[i * wt + i / 64] |= 1 << (i % 64);
        }
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..self.cols {
            let (w, b) = (col / 64, col % 64);
            let Some(pr) = (r..self.rows).find(|&i| m[i * wc + w] >> b & 1 == 1) else {
                continue;
            };
            if pr != r {
                for k in 0..wc {
                    m.swap(pr * wc + k, r * wc + k);
                }
                for k in 0..wt {
                    t.swap(pr * wt + k, r * wt + k);
                }
            }
            for i in 0..self.rows {
                if i != r && m[i * wc + w] >> b & 1 == 1 {
                    for k in 0..wc {
                        m[i * wc + k] ^= m[r * wc + k];
                    }
                    for k in 0..wt {
                        t[i * wt + k] ^= t[r * wt + k];
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        Rref {
            mat: unpack_gf2(&self.field, self.rows, self.cols, &m),
            transform: unpack_gf2(&self.field, self.rows, self.rows, &t),
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right nullspace {v : self * v = 0}, one vector per row,
    /// ordered by free column. Rows of the result are reproducible.
    pub fn nullspace(&self) -> Matrix {
        let Rref { mat, rank, pivots, .. } = self.rref();
        let f = &self.field;
        let free: Vec<usize> =
            (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zero(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set_raw(k, fc, 1);
            for (r, &pc) in pivots.iter().enumerate().take(rank) {
                let v = mat.raw(r, fc);
                if v != 0 {
                    out.set_raw(k, pc, f.rneg(v));
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Matrix, Error> {
        if self.rows != self.cols {
            return Err(Error::Shape("inverse of non-square".into()));
        }
        let r = self.rref();
        if r.rank < self.rows {
            return Err(Error::Shape("inverse of singular matrix".into()));
        }
        Ok(r.transform)
    }

    /// Coefficients expressing each row of `targets` in the rows of `self`
    /// (which need not be reduced but must have independent rows):
    /// returns C with C * self = targets.
    pub fn express_rows(&self, targets: &Matrix) -> Result<Matrix, Error> {
        if self.field != targets.field || self.cols != targets.cols {
            return Err(Error::Shape("express_rows shape".into()));
        }
        let Rref { mat, transform, rank, pivots } = self.rref();
        if rank < self.rows {
            return Err(Error::Shape("express_rows: dependent basis rows".into()));
        }
        let f = &self.field;
        let mut coeff = Matrix::zero(f, targets.rows, self.rows);
        for i in 0..targets.rows {
            let mut w: Vec<u32> = (0..self.cols).map(|j| targets.raw(i, j)).collect();
            for (k, &pc) in pivots.iter().enumerate() {
                let c = w[pc];
                if c != 0 {
                    coeff.set_raw(i, k, c);
                    let nc = f.rneg(c);
                    for j in 0..self.cols {
                        w[j] = f.radd(w[j], f.rmul(nc, mat.raw(k, j)));
                    }
                }
            }
            if w.iter().any(|&v| v != 0) {
                return Err(Error::NotInSpan);
            }
        }
        // coefficients are in terms of the reduced rows; translate back
        coeff.mul(&transform)
    }

    /// Matrix of `action` restricted to the invariant row space of `basis`:
    /// returns A' with action * basis^T = basis^T * A'. Errors when the row
    /// space is not invariant.
    pub fn restrict_action(basis: &Matrix, action: &Matrix) -> Result<Matrix, Error> {
        let imaged = basis.mul(&action.transpose())?;
        Ok(basis.express_rows(&imaged)?.transpose())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: u32) {
        for j in 0..self.cols {
            let v = self.field.rmul(self.raw(r, j), c);
            self.set_raw(r, j, v);
        }
    }

    /// row[dst] += c * row[src]
    fn add_multiple(&mut self, dst: usize, src: usize, c: u32) {
        for j in 0..self.cols {
            let v = self
                .field
                .radd(self.raw(dst, j), self.field.rmul(c, self.raw(src, j)));
            self.set_raw(dst, j, v);
        }
    }

    pub fn row(&self, i: usize) -> Matrix {
        let mut m = Matrix::zero(&self.field, 1, self.cols);
        m.data.copy_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::Shape("vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut m = Matrix::zero(&self.field, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m.set_raw(i - r0, j - c0, self.raw(i, j));
            }
        }
        m
    }

    /// Kronecker product; row index (i1, i2) maps to i1 * other.rows + i2.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.field != other.field {
            return Err(Error::OwnerMismatch);
        }
        let f = &self.field;
        let mut out =
            Matrix::zero(f, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.raw(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.raw(i2, j2);
                        if b != 0 {
                            out.set_raw(
                                i1 * other.rows + i2,
                                j1 * other.cols + j2,
                                f.rmul(a, b),
                            );
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entries mapped into `big` along a field embedding.
    pub fn map_field(&self, big: &Field) -> Result<Matrix, Error> {
        let powers = self.field.embedding(big)?;
        let mut out = Matrix::zero(big, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set_raw(i, j, self.field.map_raw(&powers, big, self.raw(i, j)));
            }
        }
        Ok(out)
    }
}

fn words(cols: usize) -> usize {
    cols.div_ceil(64).max(1)
}

fn pack_gf2(m: &Matrix) -> Vec<u64> {
    let wc = words(m.cols());
    let mut bits = vec![0u64; m.rows() * wc];
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.raw(i, j) == 1 {
                bits[i * wc + j / 64] |= 1 << (j % 64);
            }
        }
    }
    bits
}

fn unpack_gf2(f: &Field, rows: usize, cols: usize, bits: &[u64]) -> Matrix {
    let wc = words(cols);
    let mut m = Matrix::zero(f, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if bits[i * wc + j / 64] >> (j % 64) & 1 == 1 {
                m.set_raw(i, j, 1);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prng::XorShift;

    fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut XorShift) -> Matrix {
        let mut m = Matrix::zero(f, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set_raw(i, j, rng.below(f.order()) as u32);
            }
        }
        m
    }

    #[test]
    fn rref_unique_and_idempotent() {
        let mut rng = XorShift::new(7);
        for q in [2u64, 3, 4, 5] {
            let f = Field::of_order(q).unwrap();
            for _ in 0..40 {
                let m = random_matrix(&f, 5, 7, &mut rng);
                let r = m.rref();
                assert_eq!(r.transform.mul(&m).unwrap(), r.mat);
                let r2 = r.mat.rref();
                assert_eq!(r2.mat, r.mat);
                assert_eq!(r2.rank, r.rank);
                // row space is preserved: each reduced row lies in the span
                if r.rank > 0 {
                    let top = r.mat.submatrix(0, r.rank, 0, 7);
                    assert!(top.express_rows(&m).is_ok());
                }
            }
        }
    }

    #[test]
    fn nullspace_is_killed() {
        let mut rng = XorShift::new(11);
        for q in [2u64, 3, 5, 9] {
            let f = Field::of_order(q).unwrap();
            for _ in 0..30 {
                let m = random_matrix(&f, 4, 6, &mut rng);
                let ns = m.nullspace();
                assert_eq!(ns.rows(), 6 - m.rank());
                if ns.rows() > 0 {
                    assert!(m.mul(&ns.transpose()).unwrap().is_zero());
                    assert_eq!(ns.rank(), ns.rows());
                }
            }
        }
    }

    #[test]
    fn rank_nullity_exhaustive_gf2_3x3() {
        // every 3x3 matrix over GF(2)
        let f = Field::new(2, 1).unwrap();
        let mut by_rank = [0usize; 4];
        for mask in 0u32..512 {
            let rows: Vec<Vec<u32>> = (0..3)
                .map(|i| (0..3).map(|j| mask >> (3 * i + j) & 1).collect())
                .collect();
            let m = Matrix::from_raw_rows(&f, rows).unwrap();
            let rank = m.rank();
            assert_eq!(m.nullspace().rows(), 3 - rank);
            by_rank[rank] += 1;
        }
        // counts of 3x3 GF(2) matrices by rank: 1, 49, 294, 168
        assert_eq!(by_rank, [1, 49, 294, 168]);
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = XorShift::new(3);
        for q in [2u64, 3, 5, 7, 4] {
            let f = Field::of_order(q).unwrap();
            let mut found = 0;
            while found < 10 {
                let m = random_matrix(&f, 4, 4, &mut rng);
                if m.rank() == 4 {
                    found += 1;
                    let inv = m.inverse().unwrap();
                    assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&f, 4));
                    assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(&f, 4));
                }
            }
        }
    }

    #[test]
    fn express_rows_round_trip() {
        let mut rng = XorShift::new(19);
        let f = Field::new(3, 1).unwrap();
        for _ in 0..20 {
            let b = random_matrix(&f, 3, 6, &mut rng);
            if b.rank() < 3 {
                continue;
            }
            let c = random_matrix(&f, 5, 3, &mut rng);
            let targets = c.mul(&b).unwrap();
            let c2 = b.express_rows(&targets).unwrap();
            assert_eq!(c2, c);
        }
        // out-of-span detection
        let b = Matrix::from_int_rows(&f, &[&[1, 0, 0]]);
        let t = Matrix::from_int_rows(&f, &[&[0, 1, 0]]);
        assert!(matches!(b.express_rows(&t), Err(Error::NotInSpan)));
    }

    #[test]
    fn restrict_action_on_invariant_space() {
        let f = Field::new(2, 1).unwrap();
        // cyclic shift on 3 points; the all-ones vector spans an invariant line
        let a = Matrix::from_int_rows(&f, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let basis = Matrix::from_int_rows(&f, &[&[1, 1, 1]]);
        let r = Matrix::restrict_action(&basis, &a).unwrap();
        assert_eq!(r, Matrix::identity(&f, 1));
        // a non-invariant line errors
        let bad = Matrix::from_int_rows(&f, &[&[1, 0, 0]]);
        assert!(Matrix::restrict_action(&bad, &a).is_err());
    }

    #[test]
    fn kron_mixed_product() {
        let mut rng = XorShift::new(23);
        let f = Field::new(5, 1).unwrap();
        let a = random_matrix(&f, 3, 3, &mut rng);
        let b = random_matrix(&f, 2, 2, &mut rng);
        let c = random_matrix(&f, 3, 3, &mut rng);
        let d = random_matrix(&f, 2, 2, &mut rng);
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gf2_matches_generic_path() {
        // same computations over GF(2) through the packed kernels and over
        // GF(3)-style generic code paths must agree structurally
        let f = Field::new(2, 1).unwrap();
        let mut rng = XorShift::new(5);
        for _ in 0..50 {
            let a = random_matrix(&f, 6, 6, &mut rng);
            let b = random_matrix(&f, 6, 6, &mut rng);
            // reference multiplication
            let mut slow = Matrix::zero(&f, 6, 6);
            for i in 0..6 {
                for j in 0..6 {
                    let mut s = 0u32;
                    for k in 0..6 {
                        s ^= a.raw(i, k) & b.raw(k, j);
                    }
                    slow.set_raw(i, j, s);
                }
            }
            assert_eq!(a.mul(&b).unwrap(), slow);
        }
    }
}
