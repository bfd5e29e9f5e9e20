//! Dense exact linear algebra over a prime field `F_p`, `p < 2^32`.

use rand::Rng;

/// The prime field `Z/pZ`. Elements are canonical residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be an odd prime below `2^32`; callers validate primality.
    pub const fn new(p: u64) -> Self {
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, x: u64, y: u64) -> u64 {
        let s = x + y;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, x: u64, y: u64) -> u64 {
        if x >= y {
            x - y
        } else {
            x + self.p - y
        }
    }

    #[inline]
    pub fn neg(&self, x: u64) -> u64 {
        if x == 0 {
            0
        } else {
            self.p - x
        }
    }

    #[inline]
    pub fn mul(&self, x: u64, y: u64) -> u64 {
        x * y % self.p
    }

    pub fn pow(&self, mut x: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero element via Fermat.
    pub fn inv(&self, x: u64) -> u64 {
        debug_assert!(x != 0);
        self.pow(x, self.p - 2)
    }

    /// Reduce a signed integer into the field.
    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// Deterministic primality test for `n < 2^32` by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Row-major dense matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn random<R: Rng + ?Sized>(field: &PrimeField, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, field: &PrimeField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), field.mul(x, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, field: &PrimeField, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&x, &y)| field.sub(x, y))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn rank(&self, field: &PrimeField) -> usize {
        let mut m = self.clone();
        m.row_reduce(field).len()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn row_reduce(&mut self, field: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(self.get(r, c));
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = field.sub(self.get(i, j), field.mul(f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self, field: &PrimeField) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.row_reduce(field);
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Basis of the right kernel `{x : A x = 0}`, one vector per free column.
    pub fn kernel_basis(&self, field: &PrimeField) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.row_reduce(field);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = field.neg(m.get(r, free));
                }
                v
            })
            .collect()
    }
}

/// Sparse accumulator for a homogeneous linear system whose unknowns are
/// the entries of a list of matrix blocks.
#[derive(Debug, Clone)]
pub struct SystemBuilder {
    field: PrimeField,
    unknowns: usize,
    rows: Vec<Vec<(usize, u64)>>,
}

/// A block of unknowns: a `rows x cols` matrix stored row-major from `offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub offset: usize,
    pub rows: usize,
    pub cols: usize,
}

impl Block {
    #[inline]
    pub fn var(&self, r: usize, c: usize) -> usize {
        self.offset + r * self.cols + c
    }
}

impl SystemBuilder {
    pub fn new(field: PrimeField) -> Self {
        SystemBuilder { field, unknowns: 0, rows: Vec::new() }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn block(&mut self, rows: usize, cols: usize) -> Block {
        let b = Block { offset: self.unknowns, rows, cols };
        self.unknowns += rows * cols;
        b
    }

    /// Add the matrix equation `sum of terms = 0`, where every term is either
    /// `coef * L * X` or `coef * X * R` for an unknown block `X`. The shape of
    /// the equation is `rows x cols`.
    pub fn equation(&mut self, rows: usize, cols: usize, terms: &[Term<'_>]) {
        let f = self.field;
        for p in 0..rows {
            for q in 0..cols {
                let mut row: Vec<(usize, u64)> = Vec::new();
                for t in terms {
                    match *t {
                        Term::Left { sign, left, x } => {
                            // (left * x)[p][q] = sum_k left[p][k] x[k][q]
                            debug_assert_eq!(left.rows(), rows);
                            debug_assert_eq!(x.cols, cols);
                            for k in 0..left.cols() {
                                let c = left.get(p, k);
                                if c != 0 {
                                    row.push((x.var(k, q), signed(&f, sign, c)));
                                }
                            }
                        }
                        Term::Right { sign, x, right } => {
                            // (x * right)[p][q] = sum_k x[p][k] right[k][q]
                            debug_assert_eq!(right.cols(), cols);
                            debug_assert_eq!(x.rows, rows);
                            for k in 0..right.rows() {
                                let c = right.get(k, q);
                                if c != 0 {
                                    row.push((x.var(p, k), signed(&f, sign, c)));
                                }
                            }
                        }
                    }
                }
                if !row.is_empty() {
                    self.rows.push(row);
                }
            }
        }
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows.len(), self.unknowns);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                let cur = m.get(r, c);
                m.set(r, c, self.field.add(cur, v));
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank(&self.field)
    }

    /// Dimension of the solution space.
    pub fn nullity(&self) -> usize {
        self.unknowns - self.rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        self.to_matrix().kernel_basis(&self.field)
    }
}

fn signed(f: &PrimeField, sign: i8, c: u64) -> u64 {
    if sign < 0 {
        f.neg(c)
    } else {
        c
    }
}

/// One summand of a matrix equation built by [`SystemBuilder::equation`].
#[derive(Debug, Clone, Copy)]
pub enum Term<'a> {
    Left { sign: i8, left: &'a Matrix, x: Block },
    Right { sign: i8, x: Block, right: &'a Matrix },
}
