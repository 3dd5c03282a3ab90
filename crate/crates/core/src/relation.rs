//! Homogeneous binary relations over a finite carrier `{0, .., n-1}`.
//!
//! A [`Relation`] is a square boolean matrix stored as packed `u64` rows.
//! Bit `j` of row `i` is set exactly when the pair `(i, j)` belongs to the
//! relation. Padding bits past column `n - 1` are always zero, so equality
//! and inclusion reduce to word-wise comparisons.
//!
//! Every operation is pure. Binary operations refuse operands over different
//! carriers with [`Error::SizeMismatch`].

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Largest carrier accepted by the constructors. A relation at this size
/// occupies 32 MiB.
pub const MAX_CARRIER: usize = 1 << 14;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    size: usize,
    stride: usize,
    words: Vec<u64>,
}

fn words_per_row(size: usize) -> usize {
    size.div_ceil(WORD_BITS)
}

impl Relation {
    fn empty(size: usize) -> Result<Self> {
        if size == 0 || size > MAX_CARRIER {
            return Err(Error::InvalidCarrier(size));
        }
        let stride = words_per_row(size);
        Ok(Relation {
            size,
            stride,
            words: vec![0; stride * size],
        })
    }

    /// The empty relation.
    pub fn bottom(size: usize) -> Result<Self> {
        Self::empty(size)
    }

    /// The universal relation containing all `n²` pairs.
    pub fn top(size: usize) -> Result<Self> {
        let mut r = Self::empty(size)?;
        r.words.fill(!0);
        r.clear_padding();
        Ok(r)
    }

    /// The identity relation `I`.
    pub fn identity(size: usize) -> Result<Self> {
        let mut r = Self::empty(size)?;
        for i in 0..size {
            r.set(i, i);
        }
        Ok(r)
    }

    pub fn from_pairs<I>(size: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(size)?;
        for (row, col) in pairs {
            if row >= size || col >= size {
                return Err(Error::PairOutOfRange { row, col, size });
            }
            r.set(row, col);
        }
        Ok(r)
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut r = Self::empty(size)?;
        for i in 0..size {
            for j in 0..size {
                if f(i, j) {
                    r.set(i, j);
                }
            }
        }
        Ok(r)
    }

    /// Decodes a relation from the bit pattern of its flattened matrix: bit
    /// `i * n + j` of `pattern` is the pair `(i, j)`. Requires `n² ≤ 64`.
    pub fn from_pattern(size: usize, pattern: u64) -> Result<Self> {
        if size == 0 || size * size > WORD_BITS {
            return Err(Error::InvalidCarrier(size));
        }
        let cells = size * size;
        if cells < WORD_BITS && pattern >> cells != 0 {
            return Err(Error::Config(format!(
                "bit pattern {pattern:#x} exceeds {cells} cells"
            )));
        }
        Self::from_fn(size, |i, j| pattern >> (i * size + j) & 1 == 1)
    }

    /// Inverse of [`Relation::from_pattern`]; `None` when `n² > 64`.
    pub fn pattern(&self) -> Option<u64> {
        if self.size * self.size > WORD_BITS {
            return None;
        }
        Some(
            self.pairs()
                .fold(0, |acc, (i, j)| acc | 1 << (i * self.size + j)),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row < self.size
            && col < self.size
            && self.row(row)[col / WORD_BITS] >> (col % WORD_BITS) & 1 == 1
    }

    /// Number of pairs in the relation.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |i| self.successors(i).map(move |j| (i, j)))
    }

    /// Columns set in row `row`, ascending.
    pub fn successors(&self, row: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(row)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| BitIter(word).map(move |b| w * WORD_BITS + b))
    }

    pub fn meet(&self, other: &Relation) -> Result<Relation> {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn join(&self, other: &Relation) -> Result<Relation> {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn complement(&self) -> Relation {
        let mut r = self.clone();
        for w in &mut r.words {
            *w = !*w;
        }
        r.clear_padding();
        r
    }

    /// The Heyting residual `S → T`, the upper adjoint of `· ∩ S`.
    ///
    /// Relations form a Boolean lattice, so the residual is `¬S ∪ T`.
    pub fn heyting(&self, target: &Relation) -> Result<Relation> {
        let mut r = self.zip_words(target, |s, t| !s | t)?;
        r.clear_padding();
        Ok(r)
    }

    /// Relational composition `self ; other`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        self.check_size(other)?;
        let mut out = Relation::empty(self.size)?;
        let stride = self.stride;
        for i in 0..self.size {
            let dst = &mut out.words[i * stride..(i + 1) * stride];
            for j in self.successors(i) {
                for (d, s) in dst.iter_mut().zip(other.row(j)) {
                    *d |= s;
                }
            }
        }
        Ok(out)
    }

    pub fn converse(&self) -> Relation {
        let mut out = Relation {
            size: self.size,
            stride: self.stride,
            words: vec![0; self.words.len()],
        };
        for (i, j) in self.pairs() {
            out.set(j, i);
        }
        out
    }

    /// Reflexive-transitive closure `R*`.
    ///
    /// Warshall's algorithm on packed rows: seed the diagonal, then for each
    /// pivot `k` OR row `k` into every row that has bit `k` set.
    pub fn star(&self) -> Relation {
        let mut r = self.clone();
        for i in 0..r.size {
            r.set(i, i);
        }
        let stride = r.stride;
        let mut pivot = vec![0u64; stride];
        for k in 0..r.size {
            pivot.copy_from_slice(r.row(k));
            let (word, bit) = (k / WORD_BITS, k % WORD_BITS);
            for row in r.words.chunks_exact_mut(stride) {
                if row[word] >> bit & 1 == 1 {
                    for (d, s) in row.iter_mut().zip(&pivot) {
                        *d |= s;
                    }
                }
            }
        }
        r
    }

    pub fn is_subset(&self, other: &Relation) -> Result<bool> {
        self.check_size(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0))
    }

    /// Extensional equality; fails only on a carrier mismatch.
    pub fn equals(&self, other: &Relation) -> Result<bool> {
        self.check_size(other)?;
        Ok(self.words == other.words)
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    fn set(&mut self, i: usize, j: usize) {
        self.words[i * self.stride + j / WORD_BITS] |= 1 << (j % WORD_BITS);
    }

    fn clear_padding(&mut self) {
        let tail = self.size % WORD_BITS;
        if tail == 0 {
            return;
        }
        let mask = (1u64 << tail) - 1;
        for row in self.words.chunks_exact_mut(self.stride) {
            row[self.stride - 1] &= mask;
        }
    }

    fn check_size(&self, other: &Relation) -> Result<()> {
        if self.size != other.size {
            return Err(Error::SizeMismatch {
                left: self.size,
                right: other.size,
            });
        }
        Ok(())
    }

    fn zip_words(&self, other: &Relation, f: impl Fn(u64, u64) -> u64) -> Result<Relation> {
        self.check_size(other)?;
        Ok(Relation {
            size: self.size,
            stride: self.stride,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({}){}", self.size, self)
    }
}

/// Set notation, e.g. `{(0,1), (1,0)}`.
impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (i, j)) in self.pairs().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        f.write_str("}")
    }
}
