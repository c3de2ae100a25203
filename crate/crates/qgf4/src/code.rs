//! Additive codes over GF(4): duality, distributions, distance, and the
//! quantum parameters they carry.
//!
//! An additive code C of length n is an F₂-linear subspace of GF(4)ⁿ; it
//! has 2^r elements where r is its F₂-rank. C is *self-orthogonal* when
//! C ⊆ C^⊥ under the trace inner product. A self-orthogonal (n, 2^{n-k})
//! code encodes an n-qubit, k-logical-qubit stabilizer code whose
//! distance is the least weight in C^⊥ \ C (least nonzero weight in C^⊥
//! for k = 0); errors of weight below that distance are correctable.
//!
//! The representation is a canonical reduced-row-echelon basis over F₂,
//! so two values compare equal exactly when they are the same code.

use std::collections::HashMap;

use crate::enumerator::{macwilliams, WeightEnumerator};
use crate::f2::{self, BinMatrix};
use crate::gf4::Gf4;
use crate::vector::{words_for, Gf4Vector};
use crate::{Budget, Error};

/// An additive (F₂-linear) code in GF(4)ⁿ, held as a canonical RREF
/// basis.
///
/// Basis rows live in F₂²ⁿ with the interleaved column order
/// (a₀, b₀, a₁, b₁, …): column 2i is the ω-part of coordinate i and
/// column 2i+1 the ω̄-part, so echelon pivots prefer earlier coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AdditiveCode {
    n: usize,
    mat: BinMatrix,
}

/// Packs a GF(4) vector into one interleaved F₂²ⁿ row.
fn row_of(v: &Gf4Vector) -> Vec<u64> {
    let n = v.len();
    let mut row = vec![0u64; words_for(2 * n)];
    for (i, (&aw, &bw)) in v.a_words().iter().zip(v.b_words()).enumerate() {
        for bit in 0..64 {
            let coord = i * 64 + bit;
            if coord >= n {
                break;
            }
            f2::set_bit(&mut row, 2 * coord, aw >> bit & 1 != 0);
            f2::set_bit(&mut row, 2 * coord + 1, bw >> bit & 1 != 0);
        }
    }
    row
}

/// Unpacks an interleaved F₂²ⁿ row into a GF(4) vector.
fn vec_of(n: usize, row: &[u64]) -> Gf4Vector {
    let mut a = vec![0u64; words_for(n)];
    let mut b = vec![0u64; words_for(n)];
    for coord in 0..n {
        if f2::get_bit(row, 2 * coord) {
            a[coord / 64] |= 1 << (coord % 64);
        }
        if f2::get_bit(row, 2 * coord + 1) {
            b[coord / 64] |= 1 << (coord % 64);
        }
    }
    Gf4Vector::from_raw(n, a, b)
}

impl AdditiveCode {
    /// The zero code {0} of length n.
    pub fn zero(n: usize) -> AdditiveCode {
        AdditiveCode {
            n,
            mat: BinMatrix::new(2 * n),
        }
    }

    /// The full code GF(4)ⁿ, of rank 2n.
    pub fn full(n: usize) -> AdditiveCode {
        let gens = (0..n).flat_map(|i| {
            [Gf4::Omega, Gf4::OmegaBar].into_iter().map(move |s| {
                let mut v = Gf4Vector::zero(n);
                v.set(i, s);
                v
            })
        });
        AdditiveCode::from_generators(n, gens)
    }

    /// The F₂-span of the given generators (which need not be
    /// independent; the stored basis is canonical RREF).
    pub fn from_generators(
        n: usize,
        gens: impl IntoIterator<Item = Gf4Vector>,
    ) -> AdditiveCode {
        let mut mat = BinMatrix::new(2 * n);
        for g in gens {
            assert_eq!(g.len(), n, "generator length must match code length");
            mat.push_row(row_of(&g));
        }
        mat.rref();
        AdditiveCode { n, mat }
    }

    /// Convenience constructor from generator strings over `{0,1,w,W}`.
    pub fn from_strs(gens: &[&str]) -> AdditiveCode {
        let vs: Vec<Gf4Vector> = gens
            .iter()
            .map(|s| s.parse().expect("valid generator string"))
            .collect();
        let n = vs.first().map_or(0, Gf4Vector::len);
        AdditiveCode::from_generators(n, vs)
    }

    /// The length n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The F₂-rank r, so that |C| = 2^r.
    pub fn rank(&self) -> usize {
        self.mat.nrows()
    }

    /// The canonical basis as GF(4) vectors.
    pub fn generators(&self) -> Vec<Gf4Vector> {
        self.mat.rows().iter().map(|r| vec_of(self.n, r)).collect()
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &Gf4Vector) -> bool {
        assert_eq!(v.len(), self.n);
        self.mat.row_space_contains(&row_of(v))
    }

    /// Whether `other` is a subcode of `self`.
    pub fn contains_code(&self, other: &AdditiveCode) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// The trace dual C^⊥ = {v : u ∗ v = 0 for all u ∈ C}, of rank 2n − r.
    ///
    /// In the interleaved representation the constraint row for a
    /// generator u swaps each (aᵢ, bᵢ) pair, after which duality is a
    /// plain F₂ kernel computation.
    pub fn dual(&self) -> AdditiveCode {
        let mut constraints = BinMatrix::new(2 * self.n);
        for g in self.generators() {
            constraints.push_row(row_of(&g.conj())); // conj swaps a and b parts
        }
        let kernel = constraints.kernel_basis();
        let gens = kernel.iter().map(|row| vec_of(self.n, row));
        AdditiveCode::from_generators(self.n, gens)
    }

    /// Whether C ⊆ C^⊥. Because the form is alternating and F₂-bilinear,
    /// this reduces to the pairwise basis check.
    pub fn is_self_orthogonal(&self) -> bool {
        let gens = self.generators();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if gens[i].trace_inner(&gens[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether C = C^⊥ (self-orthogonal with r = n).
    pub fn is_self_dual(&self) -> bool {
        self.rank() == self.n && self.is_self_orthogonal()
    }

    /// Whether C is GF(4)-linear, i.e. closed under multiplication by ω.
    pub fn is_linear(&self) -> bool {
        self.generators()
            .iter()
            .all(|g| self.contains(&g.scale(Gf4::Omega)))
    }

    /// For a linear code, whether it is self-orthogonal under the
    /// hermitian form Σ uᵢ v̄ᵢ. For linear codes this is equivalent to
    /// trace self-orthogonality; on a nonlinear code the hermitian
    /// criterion is not meaningful and an error is returned.
    pub fn is_hermitian_self_orthogonal(&self) -> Result<bool, Error> {
        if !self.is_linear() {
            return Err(Error::NotLinear);
        }
        let gens = self.generators();
        for i in 0..gens.len() {
            for j in i..gens.len() {
                if gens[i].hermitian_inner(&gens[j]) != Gf4::Zero {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether every codeword has even weight.
    ///
    /// Via wt(u+v) ≡ wt(u) + wt(v) + u∗v (mod 2), the code is even
    /// exactly when every basis vector is even and all pairwise trace
    /// inner products vanish — an O(r²) check with no enumeration.
    pub fn is_even(&self) -> bool {
        self.generators().iter().all(|g| g.weight() % 2 == 0) && self.is_self_orthogonal()
    }

    /// The largest even-weight subcode.
    ///
    /// For self-orthogonal C the weight parity u ↦ wt(u) mod 2 is
    /// F₂-linear, and its kernel — of index 1 or 2 — is returned exactly.
    /// Otherwise parity is not linear and a maximal even subgroup is
    /// grown greedily over the full codeword list (rank ≤ 16 only).
    pub fn even_subcode(&self) -> Result<AdditiveCode, Error> {
        let gens = self.generators();
        if self.is_self_orthogonal() {
            let odd: Vec<usize> = (0..gens.len())
                .filter(|&i| gens[i].weight() % 2 == 1)
                .collect();
            let Some(&pivot) = odd.first() else {
                return Ok(self.clone());
            };
            let mut new_gens = Vec::new();
            for (i, g) in gens.iter().enumerate() {
                if i == pivot {
                    continue;
                }
                if g.weight() % 2 == 1 {
                    new_gens.push(g.plus(&gens[pivot]));
                } else {
                    new_gens.push(g.clone());
                }
            }
            return Ok(AdditiveCode::from_generators(self.n, new_gens));
        }
        if self.rank() > 16 {
            return Err(Error::BudgetExceeded {
                log2_needed: self.rank() as u32,
                log2_budget: 16,
            });
        }
        let mut words: Vec<Gf4Vector> = self
            .codewords()
            .into_iter()
            .filter(|w| w.weight() % 2 == 0)
            .collect();
        words.sort_by(|x, y| x.lex_cmp(y));
        let even_set: std::collections::HashSet<Gf4Vector> = words.iter().cloned().collect();
        let mut subgroup: Vec<Gf4Vector> = vec![Gf4Vector::zero(self.n)];
        let mut basis = Vec::new();
        for w in words {
            if subgroup.contains(&w) {
                continue;
            }
            if subgroup.iter().all(|x| even_set.contains(&x.plus(&w))) {
                let shifted: Vec<Gf4Vector> =
                    subgroup.iter().map(|x| x.plus(&w)).collect();
                subgroup.extend(shifted);
                basis.push(w);
            }
        }
        Ok(AdditiveCode::from_generators(self.n, basis))
    }

    /// Materializes all 2^r codewords (small codes only; prefer
    /// [`AdditiveCode::weight_distribution`] when only counts matter).
    pub fn codewords(&self) -> Vec<Gf4Vector> {
        let gens = self.generators();
        let r = gens.len();
        assert!(r <= 24, "codeword list would be too large");
        let mut out = Vec::with_capacity(1 << r);
        let mut current = Gf4Vector::zero(self.n);
        out.push(current.clone());
        // Reflected Gray traversal: step t flips generator trailing_zeros(t).
        for t in 1u64..1 << r {
            current.add_assign(&gens[t.trailing_zeros() as usize]);
            out.push(current.clone());
        }
        out
    }

    /// The exact weight distribution, by Gray-code traversal of the 2^r
    /// span (each step XORs one generator into the running word). Errors
    /// if 2^r exceeds the budget.
    pub fn weight_distribution(&self, budget: Budget) -> Result<WeightEnumerator, Error> {
        budget.check(self.rank() as u32)?;
        let gens = self.generators();
        let r = gens.len();
        let w = words_for(self.n);
        // Flatten generators for cache-friendly XOR.
        let mut ga = vec![0u64; r * w];
        let mut gb = vec![0u64; r * w];
        for (i, g) in gens.iter().enumerate() {
            ga[i * w..(i + 1) * w].copy_from_slice(g.a_words());
            gb[i * w..(i + 1) * w].copy_from_slice(g.b_words());
        }
        let mut counts = vec![0u64; self.n + 1];
        let mut cur_a = vec![0u64; w];
        let mut cur_b = vec![0u64; w];
        counts[0] += 1;
        for t in 1u64..1u64 << r {
            let g = t.trailing_zeros() as usize * w;
            let mut wt = 0u32;
            for j in 0..w {
                cur_a[j] ^= ga[g + j];
                cur_b[j] ^= gb[g + j];
                wt += (cur_a[j] | cur_b[j]).count_ones();
            }
            counts[wt as usize] += 1;
        }
        Ok(WeightEnumerator::from_u64(&counts))
    }

    /// The least nonzero codeword weight (the classical minimum distance
    /// of C as a code in its own right); `None` for the zero code.
    pub fn min_weight(&self, budget: Budget) -> Result<Option<usize>, Error> {
        Ok(self.weight_distribution(budget)?.min_nonzero_weight())
    }

    /// The quantum parameters carried by a self-orthogonal code; see
    /// [`QuantumParams`].
    ///
    /// Both distributions come from enumerating C itself — always the
    /// smaller side, since r ≤ n — with the dual side produced by the
    /// exact transform; d is then the least j > 0 with A′ⱼ > Aⱼ. For
    /// k = 0 (self-dual), d is the least nonzero weight of C and the
    /// code counts as pure.
    pub fn quantum_params(&self, budget: Budget) -> Result<QuantumParams, Error> {
        if !self.is_self_orthogonal() {
            return Err(Error::NotSelfOrthogonal);
        }
        let r = self.rank();
        let own = self.weight_distribution(budget)?;
        let dual = macwilliams(&own, r as u32)?;
        let k = self.n - r;
        let (d, pure) = if k == 0 {
            let d = own
                .min_nonzero_weight()
                .expect("a self-dual code of positive length has nonzero words");
            (d, true)
        } else {
            let d = (1..=self.n)
                .find(|&j| dual.coeff(j) > own.coeff(j))
                .expect("the dual strictly contains the code");
            let dual_min = dual
                .min_nonzero_weight()
                .expect("dual contains nonzero words when k > 0");
            (d, dual_min == d)
        };
        Ok(QuantumParams {
            n: self.n,
            k,
            d,
            pure,
        })
    }

    /// Deletes a coordinate from every generator (truncation; the result
    /// is the image of C under dropping that position).
    pub fn delete_coord(&self, at: usize) -> AdditiveCode {
        let gens = self.generators().iter().map(|g| g.delete_coord(at)).collect::<Vec<_>>();
        AdditiveCode::from_generators(self.n - 1, gens)
    }

    /// Applies a coordinate permutation to the whole code.
    pub fn permute(&self, perm: &[usize]) -> AdditiveCode {
        let gens = self.generators().iter().map(|g| g.permute(perm)).collect::<Vec<_>>();
        AdditiveCode::from_generators(self.n, gens)
    }

    /// Brings a generator matrix to the standard three-block shape; see
    /// [`StandardForm`].
    pub fn standard_form(&self) -> StandardForm {
        standard_form(self)
    }
}

/// The parameters [[n, k, d]] of the stabilizer code attached to a
/// self-orthogonal additive code, plus its purity.
///
/// A code is *pure* when the dual has no nonzero word of weight below d,
/// i.e. even the stabilizer itself contains nothing lighter than d.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuantumParams {
    /// Number of coordinates (qubits).
    pub n: usize,
    /// Logical dimension exponent: k = n − r.
    pub k: usize,
    /// Minimum distance.
    pub d: usize,
    /// Whether the code is pure (nondegenerate).
    pub pure: bool,
}

impl std::fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[[{},{},{}]] {}",
            self.n,
            self.k,
            self.d,
            if self.pure { "pure" } else { "impure" }
        )
    }
}

/// A generator matrix in the standard three-block shape
///
/// ```text
/// [ I_{k0}   ωB₁     A₁ ]
/// [ ωI_{k0}  ωB₂     A₂ ]
/// [ 0        I_{k1}  B₃ ]
/// ```
///
/// (B binary, A arbitrary, r = 2k₀ + k₁), reached from the input code by
/// a recorded coordinate permutation and per-coordinate scaling by powers
/// of ω. The first k₀ columns each carry a hyperbolic pair of rows with
/// entries 1 and ω; the next k₁ columns carry single binary pivots.
#[derive(Clone, Debug)]
pub struct StandardForm {
    /// Number of hyperbolic column pairs.
    pub k0: usize,
    /// Number of single binary pivot columns.
    pub k1: usize,
    /// Column permutation: block column j is input column `perm[j]`.
    pub perm: Vec<usize>,
    /// Per-input-column scaling exponent s: the map multiplies that
    /// column by ω^s.
    pub scale_pow: Vec<u32>,
    /// The block-form generator matrix rows, in band order (k₀ rows with
    /// 1-pivots, k₀ rows with ω-pivots, k₁ binary rows).
    pub rows: Vec<Gf4Vector>,
}

impl StandardForm {
    /// Applies the recorded monomial map (permutation + scalings) to a
    /// vector in the original coordinates.
    pub fn apply_map(&self, v: &Gf4Vector) -> Gf4Vector {
        let n = self.perm.len();
        assert_eq!(v.len(), n);
        let mut out = Gf4Vector::zero(n);
        for (j, &src) in self.perm.iter().enumerate() {
            out.set(j, v.get(src) * Gf4::omega_pow(self.scale_pow[src]));
        }
        out
    }

    /// The code spanned by the block rows (the image of the input code
    /// under the recorded map).
    pub fn code(&self) -> AdditiveCode {
        AdditiveCode::from_generators(self.perm.len(), self.rows.clone())
    }
}

/// The elimination behind [`AdditiveCode::standard_form`].
///
/// Phase A scans columns left to right and extracts hyperbolic pairs: a
/// column whose value set spans GF(4) over F₂ yields two row
/// combinations with entries 1 (the ω-free pivot, preferred) and ω
/// there; the column is then cleared everywhere else. When no such
/// column remains, every residual column has value set {0, v} for a
/// single v — so scaling each by the power of ω sending v to 1 (phase
/// A′) leaves a binary residue, and phase B finishes with ordinary
/// pivoting. All block-shape claims are rechecked by a debug assertion.
fn standard_form(code: &AdditiveCode) -> StandardForm {
    let n = code.n();
    let mut pool: Vec<Gf4Vector> = code.generators();
    let mut pairs: Vec<(usize, Gf4Vector, Gf4Vector)> = Vec::new();
    let mut scale_pow = vec![0u32; n];

    // Phase A: hyperbolic pairs.
    'outer: loop {
        for c in 0..n {
            if pairs.iter().any(|&(pc, _, _)| pc == c) {
                continue;
            }
            // Two F₂-independent values at column c?
            let mut first: Option<usize> = None;
            let mut second: Option<usize> = None;
            for (i, row) in pool.iter().enumerate() {
                let v = row.get(c);
                if v == Gf4::Zero {
                    continue;
                }
                match first {
                    None => first = Some(i),
                    Some(f) if pool[f].get(c) != v => {
                        second = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let (Some(i), Some(j)) = (first, second) else {
                continue;
            };
            let u = pool[i].clone();
            let v = pool[j].clone();
            let s = u.plus(&v);
            // The three combinations carry the three nonzero values at c;
            // pick the 1-valued and ω-valued ones.
            let mut one_row = None;
            let mut omega_row = None;
            for cand in [&u, &v, &s] {
                match cand.get(c) {
                    Gf4::One => one_row = Some(cand.clone()),
                    Gf4::Omega => omega_row = Some(cand.clone()),
                    _ => {}
                }
            }
            let r1 = one_row.expect("two independent values generate all three");
            let r2 = omega_row.expect("two independent values generate all three");
            pool.remove(j);
            pool.remove(i);
            // Clear column c from every other row, assigned rows included.
            let clear = |w: &mut Gf4Vector| {
                let z = w.get(c);
                if z.b_part() {
                    w.add_assign(&r1);
                }
                if z.a_part() ^ z.b_part() {
                    w.add_assign(&r2);
                }
            };
            pool.iter_mut().for_each(clear);
            for (_, p1, p2) in pairs.iter_mut() {
                clear(p1);
                clear(p2);
            }
            pairs.push((c, r1, r2));
            continue 'outer;
        }
        break;
    }

    // Phase A′: per-column scaling so the residual pool is binary.
    let pair_cols: Vec<usize> = pairs.iter().map(|&(c, _, _)| c).collect();
    for c in 0..n {
        if pair_cols.contains(&c) {
            continue;
        }
        let mut val = Gf4::Zero;
        for row in &pool {
            let v = row.get(c);
            if v != Gf4::Zero {
                debug_assert!(
                    val == Gf4::Zero || val == v,
                    "pair extraction left a rank-2 column"
                );
                val = v;
            }
        }
        if let Some(e) = val.log_omega() {
            let s = (3 - e) % 3;
            if s != 0 {
                scale_pow[c] = s;
                let m = Gf4::omega_pow(s);
                for row in pool.iter_mut() {
                    let x = row.get(c);
                    row.set(c, x * m);
                }
                for (_, p1, p2) in pairs.iter_mut() {
                    let x1 = p1.get(c);
                    p1.set(c, x1 * m);
                    let x2 = p2.get(c);
                    p2.set(c, x2 * m);
                }
            }
        }
    }

    // Phase B: binary pivots on the residual pool.
    let mut band3: Vec<(usize, Gf4Vector)> = Vec::new();
    for c in 0..n {
        if pair_cols.contains(&c) {
            continue;
        }
        let Some(pi) = pool.iter().position(|row| row.get(c) != Gf4::Zero) else {
            continue;
        };
        let pivot = pool.remove(pi);
        debug_assert_eq!(pivot.get(c), Gf4::One, "scaling normalized the pivot");
        let clear = |w: &mut Gf4Vector| {
            if w.get(c).b_part() {
                w.add_assign(&pivot);
            }
        };
        pool.iter_mut().for_each(clear);
        for (_, p1, p2) in pairs.iter_mut() {
            clear(p1);
            clear(p2);
        }
        for (_, p) in band3.iter_mut() {
            clear(p);
        }
        band3.push((c, pivot));
    }
    debug_assert!(pool.is_empty(), "independent rows cannot vanish");

    // Assemble the permutation and the block rows.
    let band3_cols: Vec<usize> = band3.iter().map(|&(c, _)| c).collect();
    let mut perm: Vec<usize> = pair_cols.clone();
    perm.extend(&band3_cols);
    perm.extend((0..n).filter(|c| !pair_cols.contains(c) && !band3_cols.contains(c)));
    let remap = |v: &Gf4Vector| {
        let mut out = Gf4Vector::zero(n);
        for (j, &src) in perm.iter().enumerate() {
            out.set(j, v.get(src));
        }
        out
    };
    let mut rows: Vec<Gf4Vector> = Vec::new();
    rows.extend(pairs.iter().map(|(_, r1, _)| remap(r1)));
    rows.extend(pairs.iter().map(|(_, _, r2)| remap(r2)));
    rows.extend(band3.iter().map(|(_, p)| remap(p)));

    let form = StandardForm {
        k0: pairs.len(),
        k1: band3.len(),
        perm,
        scale_pow,
        rows,
    };
    assert!(
        block_shape_ok(&form),
        "elimination must reach block shape (k0={} k1={} rows={:?})",
        form.k0,
        form.k1,
        form.rows.iter().map(|r| r.to_string()).collect::<Vec<_>>()
    );
    form
}

/// Checks the literal block pattern of a [`StandardForm`] (used by debug
/// assertions and tests).
pub fn block_shape_ok(f: &StandardForm) -> bool {
    let (k0, k1) = (f.k0, f.k1);
    let n = f.perm.len();
    if f.rows.len() != 2 * k0 + k1 {
        return false;
    }
    for i in 0..k0 {
        for c in 0..k0 {
            let want1 = if c == i { Gf4::One } else { Gf4::Zero };
            let want2 = if c == i { Gf4::Omega } else { Gf4::Zero };
            if f.rows[i].get(c) != want1 || f.rows[k0 + i].get(c) != want2 {
                return false;
            }
        }
        for c in k0..k0 + k1 {
            // ωB₁ and ωB₂: entries in {0, ω}.
            if ![Gf4::Zero, Gf4::Omega].contains(&f.rows[i].get(c))
                || ![Gf4::Zero, Gf4::Omega].contains(&f.rows[k0 + i].get(c))
            {
                return false;
            }
        }
    }
    for i in 0..k1 {
        let row = &f.rows[2 * k0 + i];
        for c in 0..k0 {
            if row.get(c) != Gf4::Zero {
                return false;
            }
        }
        for c in k0..k0 + k1 {
            let want = if c == k0 + i { Gf4::One } else { Gf4::Zero };
            if row.get(c) != want {
                return false;
            }
        }
        for c in k0 + k1..n {
            // B₃ binary.
            if ![Gf4::Zero, Gf4::One].contains(&row.get(c)) {
                return false;
            }
        }
    }
    true
}

/// Pretty-prints a generator matrix for CLI output.
pub fn render_generators(code: &AdditiveCode) -> String {
    let mut out = String::new();
    for g in code.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// A histogram of coordinate-permutation-invariant data used as a cheap
/// equivalence prescreen: (weight distribution of C, per-coordinate
/// value-type multiset).
pub(crate) fn invariant_key(code: &AdditiveCode, budget: Budget) -> Result<Vec<u64>, Error> {
    let wd = code.weight_distribution(budget)?;
    let mut key: Vec<u64> = wd
        .coeffs()
        .iter()
        .map(|c| u64::try_from(c.clone()).unwrap_or(u64::MAX))
        .collect();
    // Column type histogram: how many coordinates see each subset of
    // nonzero values across the whole code — invariant under permutation
    // and under the local group (which permutes nonzero values), reduced
    // to the value-set size.
    let mut col_sizes: HashMap<usize, u64> = HashMap::new();
    let gens = code.generators();
    for c in 0..code.n() {
        let mut seen = [false; 4];
        for g in &gens {
            seen[g.get(c).bits() as usize] = true;
        }
        // F₂-rank of the value set at this column: 0, 1, or 2.
        let rank = match (seen[1], seen[2], seen[3]) {
            (false, false, false) => 0,
            (true, true, _) | (true, _, true) | (_, true, true) => 2,
            _ => 1,
        };
        *col_sizes.entry(rank).or_insert(0) += 1;
    }
    for rank in 0..=2 {
        key.push(*col_sizes.get(&rank).unwrap_or(&0));
    }
    Ok(key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf4::Gf4;

    fn c(gens: &[&str]) -> AdditiveCode {
        AdditiveCode::from_strs(gens)
    }

    #[test]
    fn rank_and_canonical_equality() {
        let a = c(&["w0", "0w", "ww"]); // third row dependent
        assert_eq!(a.rank(), 2);
        let b = c(&["0w", "w0"]);
        assert_eq!(a, b);
        assert_ne!(a, c(&["w0", "01"]));
    }

    #[test]
    fn contains_spans_combinations() {
        let a = c(&["w10", "01w"]);
        assert!(a.contains(&"w10".parse().unwrap()));
        assert!(a.contains(&"w0w".parse().unwrap())); // sum of the two
        assert!(a.contains(&"000".parse().unwrap()));
        assert!(!a.contains(&"100".parse().unwrap()));
    }

    #[test]
    fn dual_of_zero_is_full() {
        let z = AdditiveCode::zero(3);
        let f = z.dual();
        assert_eq!(f.rank(), 6);
        assert_eq!(f, AdditiveCode::full(3));
        assert_eq!(f.dual(), z);
    }

    #[test]
    fn dual_rank_and_orthogonality() {
        let a = c(&["w10w1", "01wW0", "11111"]);
        let d = a.dual();
        assert_eq!(a.rank() + d.rank(), 10);
        for g in a.generators() {
            for h in d.generators() {
                assert!(!g.trace_inner(&h));
            }
        }
        assert_eq!(d.dual(), a);
    }

    /// Brute-force dual oracle: scan all 4ⁿ vectors for orthogonality to
    /// every generator (n ≤ 6).
    fn dual_oracle(code: &AdditiveCode) -> AdditiveCode {
        let n = code.n();
        let gens = code.generators();
        let mut members = Vec::new();
        for packed in 0u64..1 << (2 * n) {
            let v = Gf4Vector::from_coords(
                &(0..n)
                    .map(|i| Gf4::from_bits((packed >> (2 * i)) as u8 & 3))
                    .collect::<Vec<_>>(),
            );
            if gens.iter().all(|g| !g.trace_inner(&v)) {
                members.push(v);
            }
        }
        AdditiveCode::from_generators(n, members)
    }

    #[test]
    fn dual_matches_brute_force() {
        for gens in [
            vec!["w10", "01w"],
            vec!["111"],
            vec!["wW1", "1wW", "00w"],
            vec!["10w1", "01wW"],
        ] {
            let code = c(&gens);
            assert_eq!(code.dual(), dual_oracle(&code), "gens {gens:?}");
        }
    }

    #[test]
    fn self_orthogonality_examples() {
        // ⟨11⟩: 1·conj(1)+1·conj(1) = 0 trace — self-orthogonal.
        assert!(c(&["11"]).is_self_orthogonal());
        assert!(!AdditiveCode::full(2).is_self_orthogonal());
        // A single vector is always self-orthogonal (alternating form).
        assert!(c(&["wW10"]).is_self_orthogonal());
    }

    #[test]
    fn weight_distribution_small() {
        let a = c(&["11", "w0"]);
        let wd = a.weight_distribution(Budget::default()).unwrap();
        // Words: 00, 11, w0, W1 → A_0=1, A_1=1, A_2=2.
        assert_eq!(wd.coeffs()[0], 1u32.into());
        assert_eq!(wd.coeffs()[1], 1u32.into());
        assert_eq!(wd.coeffs()[2], 2u32.into());
    }

    #[test]
    fn weight_distribution_matches_codeword_list() {
        let a = c(&["w10w1", "01wW0", "11111", "0W0w1"]);
        let wd = a.weight_distribution(Budget::default()).unwrap();
        let mut oracle = vec![0u64; 6];
        for w in a.codewords() {
            oracle[w.weight()] += 1;
        }
        assert_eq!(wd, WeightEnumerator::from_u64(&oracle));
    }

    #[test]
    fn budget_is_enforced() {
        let a = AdditiveCode::full(8); // rank 16
        assert!(matches!(
            a.weight_distribution(Budget::log2(10)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn quantum_params_requires_self_orthogonality() {
        assert!(matches!(
            AdditiveCode::full(2).quantum_params(Budget::default()),
            Err(Error::NotSelfOrthogonal)
        ));
    }

    #[test]
    fn standard_form_of_simple_codes() {
        // ⟨(1,0),(ω,0)⟩: one hyperbolic pair at column 0.
        let f = c(&["10", "w0"]).standard_form();
        assert_eq!((f.k0, f.k1), (1, 0));
        assert!(block_shape_ok(&f));
        // Zero code: empty everything.
        let z = AdditiveCode::zero(4).standard_form();
        assert_eq!((z.k0, z.k1), (0, 0));
        assert!(z.rows.is_empty());
        // ⟨(ω)⟩ needs a column scaling to reach the binary band.
        let s = c(&["w"]).standard_form();
        assert_eq!((s.k0, s.k1), (0, 1));
        assert!(block_shape_ok(&s));
    }

    #[test]
    fn standard_form_map_reproduces_code() {
        for gens in [
            vec!["w10w1", "01wW0", "11111", "0W0w1"],
            vec!["10w", "01W"],
            vec!["ww", "WW"],
            vec!["101w", "011W", "00w1"],
        ] {
            let code = c(&gens);
            let f = code.standard_form();
            assert!(block_shape_ok(&f), "gens {gens:?}");
            assert_eq!(2 * f.k0 + f.k1, code.rank());
            let mapped = AdditiveCode::from_generators(
                code.n(),
                code.generators().iter().map(|g| f.apply_map(g)),
            );
            assert_eq!(mapped, f.code(), "gens {gens:?}");
        }
    }

    #[test]
    fn even_subcode_of_self_orthogonal_has_index_one_or_two() {
        let a = c(&["11", "ww"]); // self-orthogonal, all even → index 1
        assert!(a.is_self_orthogonal());
        let e = a.even_subcode().unwrap();
        assert_eq!(e, a);
        let b = c(&["110", "001"]); // self-orthogonal, one odd generator
        assert!(b.is_self_orthogonal());
        let eb = b.even_subcode().unwrap();
        assert_eq!(eb.rank(), 1);
        assert!(eb.generators().iter().all(|g| g.weight() % 2 == 0));
    }

    #[test]
    fn even_subcode_of_full_line_is_zero() {
        // GF(4)¹: even words are {0} alone.
        let e = AdditiveCode::full(1).even_subcode().unwrap();
        assert_eq!(e.rank(), 0);
    }

    #[test]
    fn linearity_detection() {
        assert!(!c(&["1"]).is_linear());
        assert!(c(&["1", "w"]).is_linear());
        assert!(c(&["11", "ww"]).is_linear());
        assert!(!c(&["11", "w0"]).is_linear());
    }

    #[test]
    fn hermitian_requires_linearity() {
        assert!(matches!(
            c(&["1"]).is_hermitian_self_orthogonal(),
            Err(Error::NotLinear)
        ));
        // ⟨11, ww⟩ is linear; hermitian h(11,11) = 1+1 = 0 — self-orthogonal.
        assert_eq!(c(&["11", "ww"]).is_hermitian_self_orthogonal(), Ok(true));
        // The full plane is linear but not hermitian self-orthogonal.
        assert_eq!(
            AdditiveCode::full(2).is_hermitian_self_orthogonal(),
            Ok(false)
        );
    }

    #[test]
    fn evenness_shortcut_matches_enumeration() {
        for gens in [
            vec!["11", "ww"],
            vec!["110", "001"],
            vec!["1w", "w1"],
            vec!["wW10", "01w1"],
        ] {
            let code = c(&gens);
            let all_even = code.codewords().iter().all(|w| w.weight() % 2 == 0);
            assert_eq!(code.is_even(), all_even, "gens {gens:?}");
        }
    }
}
