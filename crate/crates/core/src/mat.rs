//! Dense matrices over the Laurent ring. Everything on the quantum-group
//! side is small (a strand is 2-dimensional, identity checks stop at three
//! strands), so a row-major `Vec` with exact entries is all that's needed.
//! Wide diagram evaluation never materializes these; see `functor`.

use crate::laurent::{Coeff, Gauss, Laurent};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<C: Coeff> {
    rows: usize,
    cols: usize,
    data: Vec<Laurent<C>>,
}

pub type MatQ = Mat<i128>;
pub type MatQi = Mat<Gauss>;

impl<C: Coeff> Mat<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Laurent::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Laurent::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Laurent<C>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Laurent::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn scale(&self, s: &Laurent<C>) -> Self {
        self.map(|p| p * s)
    }

    pub fn map(&self, f: impl Fn(&Laurent<C>) -> Laurent<C>) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entrywise exact division; `None` if any entry fails to divide.
    pub fn div_exact(&self, d: &Laurent<C>) -> Option<Self> {
        let data = self
            .data
            .iter()
            .map(|p| p.div_exact(d))
            .collect::<Option<Vec<_>>>()?;
        Some(Mat { rows: self.rows, cols: self.cols, data })
    }

    /// Kronecker product; block `(i, j)` is `self[i][j] * rhs`.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a * &rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn convert<D: Coeff>(&self, f: impl Fn(&Laurent<C>) -> Laurent<D>) -> Mat<D> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl MatQ {
    pub fn to_gaussian(&self) -> MatQi {
        self.convert(Laurent::to_gaussian)
    }
}

impl<C: Coeff> std::ops::Index<(usize, usize)> for Mat<C> {
    type Output = Laurent<C>;
    fn index(&self, (i, j): (usize, usize)) -> &Laurent<C> {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of {}x{}", self.rows, self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<C: Coeff> std::ops::IndexMut<(usize, usize)> for Mat<C> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Laurent<C> {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of {}x{}", self.rows, self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<C: Coeff> std::ops::Mul for &Mat<C> {
    type Output = Mat<C>;
    fn mul(self, rhs: Self) -> Mat<C> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch {}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)].add_assign_ref(&prod);
                    }
                }
            }
        }
        out
    }
}

impl<C: Coeff> std::ops::Add for &Mat<C> {
    type Output = Mat<C>;
    fn add(self, rhs: Self) -> Mat<C> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(&rhs.data) {
            o.add_assign_ref(r);
        }
        out
    }
}

impl<C: Coeff> std::ops::Sub for &Mat<C> {
    type Output = Mat<C>;
    fn sub(self, rhs: Self) -> Mat<C> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(&rhs.data) {
            o.sub_assign_ref(r);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentQ;

    fn q(e: i64) -> LaurentQ {
        LaurentQ::q_pow(e)
    }

    #[test]
    fn multiply_and_kronecker() {
        let a = MatQ::from_rows(vec![
            vec![q(4), LaurentQ::zero()],
            vec![LaurentQ::one(), q(-4)],
        ]);
        let id = MatQ::identity(2);
        assert_eq!(&a * &id, a);
        assert_eq!(&id * &a, a);

        let k = a.kronecker(&id);
        assert_eq!(k.rows(), 4);
        assert_eq!(k[(0, 0)], q(4));
        assert_eq!(k[(2, 0)], LaurentQ::one());
        assert_eq!(k[(0, 1)], LaurentQ::zero());
        assert_eq!(k[(3, 3)], q(-4));

        // (A (x) I)(I (x) A) = A (x) A
        let lhs = &a.kronecker(&id) * &id.kronecker(&a);
        assert_eq!(lhs, a.kronecker(&a));
    }

    #[test]
    fn transpose_and_scale() {
        let a = MatQ::from_rows(vec![vec![q(1), q(2)]]);
        let t = a.transpose();
        assert_eq!((t.rows(), t.cols()), (2, 1));
        assert_eq!(t[(1, 0)], q(2));
        let s = a.scale(&q(3));
        assert_eq!(s[(0, 0)], q(4));
    }

    #[test]
    fn entrywise_division() {
        let two = LaurentQ::quantum_integer(2);
        let a = MatQ::from_rows(vec![vec![&two * &q(2), LaurentQ::zero()]]);
        let d = a.div_exact(&two).unwrap();
        assert_eq!(d[(0, 0)], q(2));
        let b = MatQ::from_rows(vec![vec![LaurentQ::one()]]);
        assert_eq!(b.div_exact(&two), None);
    }
}
