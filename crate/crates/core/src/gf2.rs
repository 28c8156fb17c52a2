//! Dense linear algebra over GF(2) on word-packed rows.
//!
//! Bit `i` of a vector lives in word `i / 64` at position `i % 64`. Padding
//! bits past the logical length are always zero, so word-level equality,
//! XOR and popcount need no masking.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A vector over GF(2). Serves as configuration, pattern and null pattern.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    /// Vectors of up to 64 coordinates stay inline.
    words: SmallVec<[u64; 1]>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: smallvec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVec {
            len,
            words: smallvec![!0; words_for(len)],
        };
        v.clear_padding();
        v
    }

    /// The vector with a single 1 at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from the low `len` bits of `mask` (bit 0 = coordinate 0).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(
            len <= WORD_BITS,
            "from_mask supports at most 64 coordinates"
        );
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = mask;
            v.clear_padding();
        }
        v
    }

    /// Low 64 coordinates packed into an integer, coordinate 0 in bit 0.
    pub fn to_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(
            index < self.len,
            "bit index {index} out of range for length {}",
            self.len
        );
        (self.words[index / WORD_BITS] >> (index % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(
            index < self.len,
            "bit index {index} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, index: usize) {
        assert!(
            index < self.len,
            "bit index {index} out of range for length {}",
            self.len
        );
        self.words[index / WORD_BITS] ^= 1u64 << (index % WORD_BITS);
    }

    /// In-place addition over GF(2).
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Dot product over GF(2): parity of the AND.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the set coordinates in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// Bitstring form: first character is coordinate 0.
impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = BitVec::zeros(s.chars().count());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("invalid bitstring character {other:?} at position {i}"),
                    })
                }
            }
        }
        Ok(v)
    }
}

impl Serialize for BitVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Row-major GF(2) matrix with each row packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Result of Gauss-Jordan reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: BitMatrix,
    /// Strictly increasing; `pivot_cols[i]` is the pivot of row `i`.
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
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

    /// Stacks rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(
                r.len(),
                cols,
                "row {i} has length {} but matrix has {cols} columns",
                r.len()
            );
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        m
    }

    /// Parses rows written as bitstrings, e.g. `["110", "111", "011"]`.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.parse())
            .collect::<Result<Vec<BitVec>>>()?;
        let cols = parsed.first().map_or(0, BitVec::len);
        if parsed.iter().any(|r| r.len() != cols) {
            return Err(Error::contract("rows of unequal length"));
        }
        Ok(Self::from_rows(cols, &parsed))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(
            r < self.rows && c < self.cols,
            "entry ({r},{c}) out of range"
        );
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "entry ({r},{c}) out of range"
        );
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec {
            len: self.cols,
            words: SmallVec::from_slice(self.row_words(r)),
        }
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return Err(Error::contract(format!(
                "vector length {} does not match {} columns",
                x.len(),
                self.cols
            )));
        }
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let parity: u32 = self
                .row_words(r)
                .iter()
                .zip(x.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if parity % 2 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Appends `b` as an extra column.
    pub fn augment(&self, b: &BitVec) -> Result<BitMatrix> {
        if b.len() != self.rows {
            return Err(Error::contract(format!(
                "right-hand side length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut m = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            m.row_words_mut(r)[..self.stride].copy_from_slice(self.row_words(r));
            if b.get(r) {
                m.set(r, self.cols, true);
            }
        }
        Ok(m)
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * self.stride);
        head[lo * self.stride..(lo + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    /// `row[dst] ^= row[src]`, touching only words from `from_word` on.
    fn xor_row_into(&mut self, src: usize, dst: usize, from_word: usize) {
        debug_assert_ne!(src, dst);
        let stride = self.stride;
        let (s, d) = (src * stride, dst * stride);
        for k in from_word..stride {
            let v = self.data[s + k];
            self.data[d + k] ^= v;
        }
    }

    /// Reduced row echelon form. The row space is preserved.
    pub fn rref(&self) -> Rref {
        self.rref_limited(self.cols)
    }

    /// Gauss-Jordan elimination that only pivots on the first `pivot_limit`
    /// columns; later columns are carried along (augmented systems).
    fn rref_limited(&self, pivot_limit: usize) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut rank = 0;
        for c in 0..pivot_limit {
            if rank == m.rows {
                break;
            }
            let (wi, bit) = (c / WORD_BITS, 1u64 << (c % WORD_BITS));
            let Some(p) = (rank..m.rows).find(|&r| m.data[r * m.stride + wi] & bit != 0) else {
                continue;
            };
            m.swap_rows(p, rank);
            for r in 0..m.rows {
                if r != rank && m.data[r * m.stride + wi] & bit != 0 {
                    m.xor_row_into(rank, r, wi);
                }
            }
            pivot_cols.push(c);
            rank += 1;
        }
        Rref {
            matrix: m,
            pivot_cols,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        if self.stride == 1 && self.rows <= WORD_BITS {
            let mut rows = [0u64; WORD_BITS];
            rows[..self.rows].copy_from_slice(&self.data);
            return rank_of_words(&mut rows[..self.rows]);
        }
        // Forward elimination only: rows above the pivot are left alone.
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let (wi, bit) = (c / WORD_BITS, 1u64 << (c % WORD_BITS));
            let Some(p) = (rank..m.rows).find(|&r| m.data[r * m.stride + wi] & bit != 0) else {
                continue;
            };
            m.swap_rows(p, rank);
            for r in rank + 1..m.rows {
                if m.data[r * m.stride + wi] & bit != 0 {
                    m.xor_row_into(rank, r, wi);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Canonical particular solution of `self * x = b` (free variables 0),
    /// or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>> {
        let aug = self.augment(b)?;
        let red = aug.rref_limited(self.cols);
        Ok(red.particular_solution(self.cols))
    }

    /// Kernel basis: one vector per free column, in ascending column order,
    /// each with its own free variable set to 1 and all other free variables 0.
    pub fn nullspace_basis(&self) -> Vec<BitVec> {
        self.rref().kernel_basis(self.cols)
    }
}

/// Rank of single-word rows, eliminating on each pivot's lowest set bit.
fn rank_of_words(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for r in &mut rows[i + 1..] {
            if *r & low != 0 {
                *r ^= pivot;
            }
        }
    }
    rank
}

impl Rref {
    /// Reads the canonical solution out of a reduced augmented matrix whose
    /// last column (index `cols`) is the right-hand side.
    pub(crate) fn particular_solution(&self, cols: usize) -> Option<BitVec> {
        let m = &self.matrix;
        // A zero row with a nonzero right-hand side is an inconsistency.
        if (self.rank..m.rows).any(|r| m.get(r, cols)) {
            return None;
        }
        let mut x = BitVec::zeros(cols);
        for (r, &pc) in self.pivot_cols.iter().enumerate() {
            if m.get(r, cols) {
                x.set(pc, true);
            }
        }
        Some(x)
    }

    /// Canonical kernel basis of the first `cols` columns.
    pub(crate) fn kernel_basis(&self, cols: usize) -> Vec<BitVec> {
        let mut is_pivot = vec![false; cols];
        for &pc in &self.pivot_cols {
            is_pivot[pc] = true;
        }
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVec::unit(cols, f);
                for (r, &pc) in self.pivot_cols.iter().enumerate() {
                    if self.matrix.get(r, f) {
                        v.set(pc, true);
                    }
                }
                v
            })
            .collect()
    }
}

/// Reduces `m` augmented with `b` in one pass, returning the canonical
/// particular solution (if any) and the kernel basis of `m`.
pub fn solve_with_kernel(m: &BitMatrix, b: &BitVec) -> Result<(Option<BitVec>, Vec<BitVec>)> {
    if m.cols < WORD_BITS && m.rows <= WORD_BITS && m.rows == b.len() {
        return Ok(solve_with_kernel_word(m, b));
    }
    let red = m.augment(b)?.rref_limited(m.cols());
    Ok((
        red.particular_solution(m.cols()),
        red.kernel_basis(m.cols()),
    ))
}

/// Same reduction as [`solve_with_kernel`] when `[m | b]` fits in one word
/// per row; the right-hand side sits in bit `cols`.
fn solve_with_kernel_word(m: &BitMatrix, b: &BitVec) -> (Option<BitVec>, Vec<BitVec>) {
    let cols = m.cols;
    let rhs = 1u64 << cols;
    let mut buf = [0u64; WORD_BITS];
    let rows = &mut buf[..m.rows];
    for (r, row) in rows.iter_mut().enumerate() {
        *row = m.data[r] | if b.get(r) { rhs } else { 0 };
    }
    let mut pivot_cols: SmallVec<[usize; WORD_BITS]> = SmallVec::new();
    for c in 0..cols {
        let rank = pivot_cols.len();
        if rank == rows.len() {
            break;
        }
        let bit = 1u64 << c;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(p, rank);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        pivot_cols.push(c);
    }
    let rank = pivot_cols.len();
    let solution = if rows[rank..].iter().any(|&row| row & rhs != 0) {
        None
    } else {
        let x = pivot_cols
            .iter()
            .enumerate()
            .filter(|&(r, _)| rows[r] & rhs != 0)
            .fold(0u64, |x, (_, &pc)| x | 1 << pc);
        Some(BitVec::from_mask(cols, x))
    };
    let pivots = pivot_cols.iter().fold(0u64, |acc, &pc| acc | 1 << pc);
    let kernel = (0..cols)
        .filter(|&f| pivots >> f & 1 == 0)
        .map(|f| {
            let v = pivot_cols
                .iter()
                .enumerate()
                .filter(|&(r, _)| rows[r] >> f & 1 == 1)
                .fold(1u64 << f, |v, (_, &pc)| v | 1 << pc);
            BitVec::from_mask(cols, v)
        })
        .collect();
    (solution, kernel)
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p3() -> BitMatrix {
        BitMatrix::from_strs(&["110", "111", "011"]).unwrap()
    }

    /// Brute-force kernel count by enumerating every vector.
    fn kernel_count(m: &BitMatrix) -> usize {
        (0..1u64 << m.cols())
            .filter(|&mask| {
                m.mul_vec(&BitVec::from_mask(m.cols(), mask))
                    .unwrap()
                    .is_zero()
            })
            .count()
    }

    #[test]
    fn rref_identity() {
        let red = BitMatrix::identity(3).rref();
        assert_eq!(red.matrix, BitMatrix::identity(3));
        assert_eq!(red.pivot_cols, vec![0, 1, 2]);
        assert_eq!(red.rank, 3);
    }

    #[test]
    fn rref_all_ones() {
        let j3 = BitMatrix::from_strs(&["111", "111", "111"]).unwrap();
        let red = j3.rref();
        assert_eq!(red.rank, 1);
        assert_eq!(red.matrix.row(0).to_string(), "111");
        assert!(red.matrix.row(1).is_zero() && red.matrix.row(2).is_zero());
    }

    #[test]
    fn rref_path_three_full_rank() {
        assert_eq!(p3().rref().rank, 3);
        assert_eq!(kernel_count(&p3()), 1);
    }

    #[test]
    fn solve_examples() {
        let b: BitVec = "101".parse().unwrap();
        assert_eq!(BitMatrix::identity(3).solve(&b).unwrap(), Some(b));
        let x = p3().solve(&"111".parse().unwrap()).unwrap().unwrap();
        assert_eq!(x.to_string(), "010");
        let p2 = BitMatrix::from_strs(&["11", "11"]).unwrap();
        assert_eq!(p2.solve(&"10".parse().unwrap()).unwrap(), None);
    }

    #[test]
    fn solve_dimension_mismatch() {
        assert!(matches!(
            p3().solve(&BitVec::zeros(2)),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn nullspace_examples() {
        assert!(BitMatrix::identity(4).nullspace_basis().is_empty());
        let p2 = BitMatrix::from_strs(&["11", "11"]).unwrap();
        let basis = p2.nullspace_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].to_string(), "11");
        let j3 = BitMatrix::from_strs(&["111", "111", "111"]).unwrap();
        let basis: Vec<String> = j3.nullspace_basis().iter().map(|v| v.to_string()).collect();
        assert_eq!(basis, vec!["110", "101"]);
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let n = 130;
        let mut m = BitMatrix::identity(n);
        m.set(0, 129, true);
        m.set(129, 0, true);
        // rows 0 and 129 now both contain {0, 129}: rank drops by one.
        assert_eq!(m.rank(), n - 1);
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].iter_ones().collect::<Vec<_>>(), vec![0, 129]);
        assert_eq!(BitVec::ones(n).count_ones(), n);
    }

    #[test]
    fn bitstring_round_trip_and_errors() {
        let v: BitVec = "0101".parse().unwrap();
        assert!(!v.get(0) && v.get(1) && !v.get(2) && v.get(3));
        assert_eq!(v.to_string(), "0101");
        assert!("01x".parse::<BitVec>().is_err());
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::bool::ANY, r * c).prop_map(move |bits| {
                let mut m = BitMatrix::zeros(r, c);
                for (i, b) in bits.into_iter().enumerate() {
                    m.set(i / c, i % c, b);
                }
                m
            })
        })
    }

    fn arb_symmetric(max: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::ANY, n * n).prop_map(move |bits| {
                let mut m = BitMatrix::zeros(n, n);
                for r in 0..n {
                    for c in r..n {
                        m.set(r, c, bits[r * n + c]);
                        m.set(c, r, bits[r * n + c]);
                    }
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn single_word_reduction_matches_general(m in arb_matrix(12), seed in any::<u64>()) {
            let b = BitVec::from_mask(m.rows(), seed);
            let (x, kernel) = solve_with_kernel(&m, &b).unwrap();
            prop_assert_eq!(x, m.solve(&b).unwrap());
            prop_assert_eq!(kernel, m.nullspace_basis());
        }

        #[test]
        fn solve_returns_exact_solution(m in arb_matrix(12), seed in any::<u64>()) {
            let b = BitVec::from_mask(m.rows(), seed);
            let brute = (0..1u64 << m.cols())
                .any(|x| m.mul_vec(&BitVec::from_mask(m.cols(), x)).unwrap() == b);
            match m.solve(&b).unwrap() {
                Some(x) => prop_assert_eq!(m.mul_vec(&x).unwrap(), b),
                None => prop_assert!(!brute),
            }
        }

        #[test]
        fn kernel_basis_is_a_basis(m in arb_matrix(12)) {
            let basis = m.nullspace_basis();
            for v in &basis {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
            // Independence: the basis has full rank as a row matrix.
            prop_assert_eq!(BitMatrix::from_rows(m.cols(), &basis).rank(), basis.len());
            prop_assert_eq!(1usize << basis.len(), kernel_count(&m));
            prop_assert_eq!(m.rank() + basis.len(), m.cols());
        }

        #[test]
        fn rref_is_idempotent(m in arb_matrix(16)) {
            let once = m.rref();
            let twice = once.matrix.rref();
            prop_assert_eq!(&twice.matrix, &once.matrix);
            prop_assert!(once.pivot_cols.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(once.rank, once.pivot_cols.len());
        }

        #[test]
        fn symmetric_solvable_iff_orthogonal_to_kernel(m in arb_symmetric(10)) {
            let basis = m.nullspace_basis();
            for mask in 0..1u64 << m.cols() {
                let b = BitVec::from_mask(m.rows(), mask);
                let orthogonal = basis.iter().all(|v| !v.dot(&b));
                prop_assert_eq!(orthogonal, m.solve(&b).unwrap().is_some());
            }
        }
    }
}
