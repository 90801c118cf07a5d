//! Dense, word-packed vectors and matrices over F2.
//!
//! Layout is fixed for every matrix in the crate: row-major, one row per
//! `ceil(cols / 64)` consecutive `u64` words, bit `j` of a row stored in word
//! `j / 64` at position `j % 64` (least significant bit first). Bits past
//! `cols` are always zero, so whole-word comparisons and XORs are exact.

use std::fmt;

pub const WORD_BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    pub(crate) fn from_words(len: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        F2Vector {
            len,
            words: words.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn xor_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        xor_words(&mut self.words, &other.words);
    }

    /// XORs packed words of the same layout into `self`.
    pub(crate) fn xor_words(&mut self, words: &[u64]) {
        assert_eq!(self.words.len(), words.len(), "vector length mismatch");
        xor_words(&mut self.words, words);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        iter_ones(&self.words)
    }

    pub fn first_one(&self) -> Option<usize> {
        first_one(&self.words)
    }

    pub fn dot(&self, other: &F2Vector) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// `0`/`1` characters, index 0 first.
    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    pub fn parse_bitstring(s: &str) -> Option<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return None,
            }
        }
        Some(v)
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector[{}]", self.to_bitstring())
    }
}

#[inline]
fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + t)
            }
        })
    })
}

fn first_one(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Result of [`F2Matrix::solve`]: one particular solution and a basis of the
/// kernel, so the full solution set is `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: F2Vector,
    pub kernel: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        F2Matrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[F2Vector]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.set_row(i, r);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> F2Vector {
        assert!(i < self.rows, "row {i} out of range");
        F2Vector::from_words(self.cols, self.row_words(i))
    }

    pub fn set_row(&mut self, i: usize, v: &F2Vector) {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        self.row_words_mut(i).copy_from_slice(v.words());
    }

    pub fn xor_into_row(&mut self, i: usize, v: &F2Vector) {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        xor_words(self.row_words_mut(i), v.words());
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        let mask = 1u64 << (j % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        self.data[i * self.stride + j / WORD_BITS] ^= 1u64 << (j % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Column indices of the set bits of row `i`.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row_words(i))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (first, second) = self.data.split_at_mut(hi * s);
        first[lo * s..(lo + 1) * s].swap_with_slice(&mut second[..s]);
    }

    /// `self[dst] ^= self[src]`, touching only words from `from_word` on.
    fn xor_rows(&mut self, src: usize, dst: usize, from_word: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        if src < dst {
            let (a, b) = self.data.split_at_mut(dst * s);
            xor_words(&mut b[from_word..s], &a[src * s + from_word..(src + 1) * s]);
        } else {
            let (a, b) = self.data.split_at_mut(src * s);
            xor_words(&mut a[dst * s + from_word..(dst + 1) * s], &b[from_word..s]);
        }
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(
            self.cols,
            other.rows,
            "dimension mismatch in product: {:?} * {:?}",
            self.shape(),
            other.shape()
        );
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        let s = other.stride;
        for i in 0..self.rows {
            let dst = &mut out.data[i * s..(i + 1) * s];
            for k in iter_ones(&self.data[i * self.stride..(i + 1) * self.stride]) {
                xor_words(dst, &other.data[k * s..(k + 1) * s]);
            }
        }
        out
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.shape(), other.shape(), "dimension mismatch in sum");
        let mut out = self.clone();
        xor_words(&mut out.data, &other.data);
        out
    }

    pub fn add_assign(&mut self, other: &F2Matrix) {
        assert_eq!(self.shape(), other.shape(), "dimension mismatch in sum");
        xor_words(&mut self.data, &other.data);
    }

    /// Row vector times matrix: `v * self`, with `v.len() == rows`.
    pub fn left_mul(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.len(), self.rows, "dimension mismatch in vector product");
        let mut out = F2Vector::zeros(self.cols);
        for k in v.ones() {
            xor_words(&mut out.words, self.row_words(k));
        }
        out
    }

    /// Matrix times column vector: `self * v`, with `v.len() == cols`.
    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in vector product");
        let mut out = F2Vector::zeros(self.rows);
        for i in 0..self.rows {
            let parity = self
                .row_words(i)
                .iter()
                .zip(v.words())
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            if parity & 1 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    /// Side-by-side concatenation. All blocks must have `rows` rows.
    pub fn hstack(rows: usize, blocks: &[&F2Matrix]) -> F2Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = F2Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "row count mismatch in hstack");
            for i in 0..rows {
                for j in b.row_ones(i) {
                    out.set(i, offset + j, true);
                }
            }
            offset += b.cols;
        }
        out
    }

    /// Stacked concatenation. All blocks must have `cols` columns.
    pub fn vstack(cols: usize, blocks: &[&F2Matrix]) -> F2Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = F2Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "column count mismatch in vstack");
            out.data[offset * out.stride..(offset + b.rows) * out.stride].copy_from_slice(&b.data);
            offset += b.rows;
        }
        out
    }

    /// Reduces `self` in place to reduced row echelon form and returns the
    /// pivot columns (row `i` has its leading one in column `pivots[i]`).
    /// Every row operation is mirrored onto `companion`, if given.
    fn rref_mirrored(&mut self, mut companion: Option<&mut F2Matrix>) -> Vec<usize> {
        if let Some(c) = companion.as_deref() {
            assert_eq!(c.rows, self.rows, "companion row count mismatch");
        }
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let word = col / WORD_BITS;
            let mask = 1u64 << (col % WORD_BITS);
            let Some(p) =
                (rank..self.rows).find(|&r| self.data[r * self.stride + word] & mask != 0)
            else {
                continue;
            };
            self.swap_rows(p, rank);
            if let Some(c) = companion.as_deref_mut() {
                c.swap_rows(p, rank);
            }
            for r in 0..self.rows {
                if r != rank && self.data[r * self.stride + word] & mask != 0 {
                    self.xor_rows(rank, r, word);
                    if let Some(c) = companion.as_deref_mut() {
                        c.xor_rows(rank, r, 0);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        pivots
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_mirrored(None);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_mirrored(None).len()
    }

    /// Canonical basis of `{ v : self * v = 0 }`: one vector per non-pivot
    /// column `f` of the reduced echelon form, with a one in position `f`.
    pub fn kernel(&self) -> Vec<F2Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = F2Vector::unit(self.cols, f);
                for (i, &p) in pivots.iter().enumerate() {
                    if r.get(i, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = b`. Returns `None` when the system is inconsistent.
    pub fn solve(&self, b: &F2Vector) -> Option<AffineSolution> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut rhs = F2Matrix::zeros(self.rows, 1);
        for i in b.ones() {
            rhs.set(i, 0, true);
        }
        let x = self.solve_many(&rhs).ok()?;
        let particular = F2Vector::from_indices(self.cols, (0..self.cols).filter(|&i| x.get(i, 0)));
        Some(AffineSolution {
            particular,
            kernel: self.kernel(),
        })
    }

    /// Solves `self * X = rhs` column by column, setting free variables to
    /// zero. On inconsistency returns the index of the first offending
    /// column of `rhs`.
    pub fn solve_many(&self, rhs: &F2Matrix) -> Result<F2Matrix, usize> {
        assert_eq!(rhs.rows, self.rows, "right-hand side row count mismatch");
        let mut a = self.clone();
        let mut b = rhs.clone();
        let pivots = a.rref_mirrored(Some(&mut b));
        let rank = pivots.len();
        let mut bad: Option<usize> = None;
        for r in rank..b.rows {
            if let Some(c) = first_one(b.row_words(r)) {
                bad = Some(bad.map_or(c, |x| x.min(c)));
            }
        }
        if let Some(c) = bad {
            return Err(c);
        }
        let mut x = F2Matrix::zeros(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            let s = x.stride;
            x.data[p * s..(p + 1) * s].copy_from_slice(b.row_words(i));
        }
        Ok(x)
    }

    /// Solves `X * self = rhs` (row-vector convention).
    pub fn solve_left(&self, rhs: &F2Matrix) -> Result<F2Matrix, usize> {
        self.transpose()
            .solve_many(&rhs.transpose())
            .map(|x| x.transpose())
    }

    /// Each row rendered as a `0`/`1` string.
    pub fn to_bitstrings(&self) -> Vec<String> {
        (0..self.rows).map(|i| self.row(i).to_bitstring()).collect()
    }

    pub fn from_bitstrings(cols: usize, rows: &[&str]) -> Option<F2Matrix> {
        let mut m = F2Matrix::zeros(rows.len(), cols);
        for (i, s) in rows.iter().enumerate() {
            let v = F2Vector::parse_bitstring(s)?;
            if v.len() != cols {
                return None;
            }
            m.set_row(i, &v);
        }
        Some(m)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for s in self.to_bitstrings() {
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// Incrementally built span of vectors of a fixed length.
///
/// Each stored row has a distinct pivot (its first set bit at insertion
/// time), and every row is reduced against all earlier rows, so reducing in
/// insertion order is exact.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<F2Vector>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    pub fn reduce(&self, v: &F2Vector) -> F2Vector {
        let mut v = v.clone();
        self.reduce_in_place(&mut v);
        v
    }

    fn reduce_in_place(&self, v: &mut F2Vector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns `false` if it was already in it.
    pub fn insert(&mut self, v: &F2Vector) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut v = v.clone();
        self.reduce_in_place(&mut v);
        match v.first_one() {
            None => false,
            Some(p) => {
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
        }
    }

    /// First standard basis vector not in the span.
    pub fn first_missing_unit(&self) -> Option<usize> {
        (0..self.len).find(|&i| !self.contains(&F2Vector::unit(self.len, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> F2Matrix {
        F2Matrix::from_fn(rows, cols, |_, _| rng.gen_bool(density))
    }

    /// Plain Gaussian elimination on `Vec<Vec<bool>>`, one bit at a time.
    fn naive_rank(m: &F2Matrix) -> usize {
        let mut a: Vec<Vec<bool>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
            .collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            if let Some(p) = (rank..a.len()).find(|&r| a[r][c]) {
                a.swap(p, rank);
                for r in 0..a.len() {
                    if r != rank && a[r][c] {
                        let pivot = a[rank].clone();
                        for (x, y) in a[r].iter_mut().zip(pivot) {
                            *x ^= y;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn identity_and_zero() {
        let id = F2Matrix::identity(5);
        assert_eq!(id.rank(), 5);
        assert!(id.kernel().is_empty());
        let z = F2Matrix::zeros(3, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().len(), 4);
    }

    #[test]
    fn rank_matches_naive_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..40 {
            let density = [0.05, 0.3, 0.5][trial % 3];
            let m = random_matrix(&mut rng, 64, 64, density);
            assert_eq!(m.rank(), naive_rank(&m));
        }
        for _ in 0..20 {
            let (r, c) = (rng.gen_range(1..150), rng.gen_range(1..150));
            let m = random_matrix(&mut rng, r, c, 0.1);
            assert_eq!(m.rank(), naive_rank(&m), "{r}x{c}");
        }
    }

    #[test]
    fn low_rank_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_matrix(&mut rng, 70, 9, 0.5);
        let b = random_matrix(&mut rng, 9, 80, 0.5);
        let p = a.mul(&b);
        assert!(p.rank() <= 9);
        assert_eq!(p.rank(), naive_rank(&p));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 30, 90, 0.2);
            let k = m.kernel();
            assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                assert!(m.mul_vec(v).is_zero());
            }
            assert_eq!(F2Matrix::from_rows(90, &k).rank(), k.len());
        }
    }

    #[test]
    fn solve_returns_particular_plus_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&mut rng, 40, 50, 0.3);
        let x0 = F2Vector::from_indices(50, (0..50).filter(|i| i % 3 == 0));
        let b = m.mul_vec(&x0);
        let sol = m.solve(&b).expect("consistent");
        assert_eq!(m.mul_vec(&sol.particular), b);
        assert_eq!(sol.kernel.len(), 50 - m.rank());

        let rank_deficient = F2Matrix::from_bitstrings(2, &["10", "10"]).unwrap();
        let inconsistent = F2Vector::from_bools(&[true, false]);
        assert!(rank_deficient.solve(&inconsistent).is_none());
    }

    #[test]
    fn solve_many_and_left() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = random_matrix(&mut rng, 60, 20, 0.4);
        let x = random_matrix(&mut rng, 20, 7, 0.5);
        let b = a.mul(&x);
        let sol = a.solve_many(&b).unwrap();
        assert_eq!(a.mul(&sol), b);
        let y = random_matrix(&mut rng, 5, 60, 0.5);
        let c = y.mul(&a);
        let sol = a.solve_left(&c).unwrap();
        assert_eq!(sol.mul(&a), c);
    }

    #[test]
    fn rref_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let m = random_matrix(&mut rng, 33, 71, 0.2);
        let (r, p) = m.rref();
        let (r2, p2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(p, p2);
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let mut e = EchelonBasis::new(4);
        assert!(e.insert(&F2Vector::from_bools(&[true, true, false, false])));
        assert!(e.insert(&F2Vector::from_bools(&[false, true, true, false])));
        assert!(!e.insert(&F2Vector::from_bools(&[true, false, true, false])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.first_missing_unit(), Some(0));
        assert!(e.contains(&F2Vector::from_bools(&[true, false, true, false])));
    }

    #[test]
    fn bitstrings_round_trip() {
        let m = F2Matrix::from_bitstrings(3, &["101", "011"]).unwrap();
        assert_eq!(m.to_bitstrings(), vec!["101", "011"]);
        assert!(F2Matrix::from_bitstrings(3, &["10"]).is_none());
    }
}
