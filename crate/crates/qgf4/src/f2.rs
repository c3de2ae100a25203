//! Dense linear algebra over F₂ on bit-packed rows.
//!
//! Rows are `Vec<u64>` with bit j of the row at word j/64, bit j%64. All
//! higher-level duality and membership computations in this crate reduce
//! to reduced row echelon form (RREF), kernels, and solving against a
//! basis, so those are the only primitives provided.

/// A matrix over F₂ with a fixed number of columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinMatrix {
    ncols: usize,
    rows: Vec<Vec<u64>>,
}

/// Number of 64-bit words needed for `ncols` bits.
#[inline]
pub(crate) fn words_for(ncols: usize) -> usize {
    ncols.div_ceil(64)
}

/// Reads bit `j` of a packed row.
#[inline]
pub fn get_bit(row: &[u64], j: usize) -> bool {
    row[j / 64] >> (j % 64) & 1 != 0
}

/// Sets bit `j` of a packed row.
#[inline]
pub fn set_bit(row: &mut [u64], j: usize, v: bool) {
    if v {
        row[j / 64] |= 1 << (j % 64);
    } else {
        row[j / 64] &= !(1 << (j % 64));
    }
}

/// XORs `src` into `dst`.
#[inline]
pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

impl BinMatrix {
    /// An empty matrix (no rows) with `ncols` columns.
    pub fn new(ncols: usize) -> BinMatrix {
        BinMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Builds a matrix from pre-packed rows.
    pub fn from_rows(ncols: usize, rows: Vec<Vec<u64>>) -> BinMatrix {
        for r in &rows {
            debug_assert_eq!(r.len(), words_for(ncols));
        }
        BinMatrix { ncols, rows }
    }

    /// The identity matrix of order `n`.
    pub fn identity(n: usize) -> BinMatrix {
        let mut m = BinMatrix::new(n);
        for i in 0..n {
            let mut row = vec![0u64; words_for(n)];
            set_bit(&mut row, i, true);
            m.push_row(row);
        }
        m
    }

    /// The number of columns.
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// The number of rows currently stored.
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// The packed rows.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Appends a packed row.
    pub fn push_row(&mut self, row: Vec<u64>) {
        debug_assert_eq!(row.len(), words_for(self.ncols));
        self.rows.push(row);
    }

    /// An all-zero packed row of the right width.
    pub fn zero_row(&self) -> Vec<u64> {
        vec![0u64; words_for(self.ncols)]
    }

    /// Entry (i, j).
    pub fn get(&self, i: usize, j: usize) -> bool {
        get_bit(&self.rows[i], j)
    }

    /// Sets entry (i, j).
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        set_bit(&mut self.rows[i], j, v);
    }

    /// Reduces to RREF in place (pivot columns strictly increasing, each
    /// pivot the only 1 in its column, zero rows dropped). Returns the
    /// pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            // Find a row at or below `row` with a 1 in this column.
            let Some(src) = (row..self.rows.len()).find(|&i| get_bit(&self.rows[i], col)) else {
                continue;
            };
            self.rows.swap(row, src);
            let pivot_row = self.rows[row].clone();
            for (i, r) in self.rows.iter_mut().enumerate() {
                if i != row && get_bit(r, col) {
                    xor_into(r, &pivot_row);
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows.len() {
                break;
            }
        }
        self.rows.truncate(row);
        pivots
    }

    /// The rank (leaves `self` unchanged).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the kernel {x : M·xᵀ = 0}, as packed rows of width
    /// `ncols`, in RREF with respect to the free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut x = vec![0u64; words_for(self.ncols)];
            set_bit(&mut x, free, true);
            // Back-substitute: pivot variable p must cancel row r's entry
            // at the free column.
            for (r, &p) in pivots.iter().enumerate() {
                if get_bit(&m.rows[r], free) {
                    set_bit(&mut x, p, true);
                }
            }
            basis.push(x);
        }
        basis
    }

    /// Expresses `target` as a combination of the rows, if possible.
    /// Returns the coefficient vector (bit i set ⟺ row i used).
    pub fn solve_combination(&self, target: &[u64]) -> Option<Vec<u64>> {
        // Row-reduce an augmented copy [rows | I] and reduce the target
        // alongside.
        let nr = self.rows.len();
        let mut work: Vec<(Vec<u64>, Vec<u64>)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut tag = vec![0u64; words_for(nr.max(1))];
                set_bit(&mut tag, i, true);
                (r.clone(), tag)
            })
            .collect();
        let mut t = target.to_vec();
        let mut t_tag = vec![0u64; words_for(nr.max(1))];
        let mut row = 0;
        for col in 0..self.ncols {
            let Some(src) = (row..work.len()).find(|&i| get_bit(&work[i].0, col)) else {
                if get_bit(&t, col) {
                    return None; // Target has support outside the row space.
                }
                continue;
            };
            work.swap(row, src);
            let (prow, ptag) = work[row].clone();
            for (i, (r, tag)) in work.iter_mut().enumerate() {
                if i != row && get_bit(r, col) {
                    xor_into(r, &prow);
                    xor_into(tag, &ptag);
                }
            }
            if get_bit(&t, col) {
                xor_into(&mut t, &prow);
                xor_into(&mut t_tag, &ptag);
            }
            row += 1;
        }
        if t.iter().any(|&w| w != 0) {
            None
        } else {
            Some(t_tag)
        }
    }

    /// Whether `target` lies in the row space.
    pub fn row_space_contains(&self, target: &[u64]) -> bool {
        let mut m = self.clone();
        m.rref();
        let mut t = target.to_vec();
        for r in m.rows() {
            let lead = r
                .iter()
                .enumerate()
                .find(|(_, &w)| w != 0)
                .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
                .expect("RREF rows are nonzero");
            if get_bit(&t, lead) {
                xor_into(&mut t, r);
            }
        }
        t.iter().all(|&w| w == 0)
    }
}

/// A binary linear code, stored as a canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinCode {
    n: usize,
    mat: BinMatrix,
}

impl BinCode {
    /// The span of the given packed rows of length `n`.
    pub fn from_rows(n: usize, rows: Vec<Vec<u64>>) -> BinCode {
        let mut mat = BinMatrix::from_rows(n, rows);
        mat.rref();
        BinCode { n, mat }
    }

    /// Parses rows of `0`/`1` characters.
    pub fn from_strs(rows: &[&str]) -> BinCode {
        let n = rows.first().map_or(0, |r| r.len());
        let packed = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), n);
                let mut row = vec![0u64; words_for(n)];
                for (j, c) in r.chars().enumerate() {
                    set_bit(&mut row, j, c == '1');
                }
                row
            })
            .collect();
        BinCode::from_rows(n, packed)
    }

    /// The zero code of length n.
    pub fn zero(n: usize) -> BinCode {
        BinCode {
            n,
            mat: BinMatrix::new(n),
        }
    }

    /// The full space F₂ⁿ.
    pub fn full(n: usize) -> BinCode {
        BinCode {
            n,
            mat: BinMatrix::identity(n),
        }
    }

    /// The length n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The dimension.
    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    /// The canonical basis rows.
    pub fn basis(&self) -> &[Vec<u64>] {
        self.mat.rows()
    }

    /// Membership.
    pub fn contains(&self, word: &[u64]) -> bool {
        self.mat.row_space_contains(word)
    }

    /// Whether `other` ⊆ `self`.
    pub fn contains_code(&self, other: &BinCode) -> bool {
        other.basis().iter().all(|r| self.contains(r))
    }

    /// The dual code under the standard dot product.
    pub fn dual(&self) -> BinCode {
        BinCode::from_rows(self.n, self.mat.kernel_basis())
    }

    /// Exact weight distribution by Gray-code traversal of the 2^dim
    /// span (dimension capped at 28).
    pub fn weight_distribution(&self) -> Vec<u64> {
        let dim = self.dim();
        assert!(dim <= 28, "binary enumeration capped at 2^28");
        let w = words_for(self.n);
        let rows = self.mat.rows();
        let mut counts = vec![0u64; self.n + 1];
        let mut cur = vec![0u64; w];
        counts[0] += 1;
        for t in 1u64..1 << dim {
            let g = t.trailing_zeros() as usize;
            let mut wt = 0u32;
            for j in 0..w {
                cur[j] ^= rows[g][j];
                wt += cur[j].count_ones();
            }
            counts[wt as usize] += 1;
        }
        counts
    }

    /// The least weight over codewords outside `sub` (None if the set is
    /// empty). `sub` must be a subcode.
    pub fn min_weight_excluding(&self, sub: &BinCode) -> Option<usize> {
        let dim = self.dim();
        assert!(dim <= 28, "binary enumeration capped at 2^28");
        let w = words_for(self.n);
        let rows = self.mat.rows();
        let mut cur = vec![0u64; w];
        let mut best: Option<usize> = None;
        if !sub.contains(&cur) {
            best = Some(0);
        }
        for t in 1u64..1 << dim {
            let g = t.trailing_zeros() as usize;
            xor_into(&mut cur, &rows[g]);
            let wt: usize = cur.iter().map(|&x| x.count_ones() as usize).sum();
            if best.is_some_and(|b| wt >= b) {
                continue;
            }
            if !sub.contains(&cur) {
                best = Some(wt);
            }
        }
        best
    }

    /// The least nonzero weight; `None` for the zero code.
    pub fn min_weight(&self) -> Option<usize> {
        self.weight_distribution()
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(j, _)| j)
    }
}

/// The exact dual weight distribution of a binary [n, dim] code from its
/// own distribution: A′ⱼ = 2^{-dim} Σᵢ Aᵢ·K²ⱼ(i) with the binary
/// Krawtchouk kernel K²ⱼ(x) = Σₛ (−1)ˢ C(x,s) C(n−x, j−s).
pub fn binary_dual_distribution(counts: &[u64], dim: u32) -> Vec<num_bigint::BigUint> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    let n = counts.len() - 1;
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, &a) in counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut kraw = BigInt::zero();
            for s in 0..=j {
                let term = crate::enumerator::binomial(i, s)
                    * crate::enumerator::binomial(n - i, j - s);
                if s % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            acc += BigInt::from(a) * kraw;
        }
        let denom = BigInt::from(1u32) << dim;
        assert!((&acc % &denom).is_zero(), "dual distribution must be integral");
        out.push((acc / denom).to_biguint().expect("counts are nonnegative"));
    }
    out
}
