//! Ways of building new self-orthogonal additive codes from old ones:
//! direct sums; the five classical modifications (lengthen, shorten a
//! pure code, grow the stabilizer, puncture, drop a weight-1
//! coordinate); support-based shortening of linear codes; pasting two
//! codes along a hyperbolic section of the second code's dual;
//! blockwise concatenation; the CSS construction from nested binary
//! codes; the simplex-based distance-3 family and its low-overhead
//! extension; the u|u+v sum; and the stock distance-1 and distance-2
//! codes.
//!
//! Every operation returns a code that is again self-orthogonal
//! whenever its preconditions hold, so outputs feed straight back into
//! [`AdditiveCode::quantum_params`] or further constructions. Outputs
//! are deterministic: wherever a choice is mathematically free (a coset
//! representative, a hyperbolic basis, an isomorphism), the first
//! candidate in canonical generator order is taken.

use crate::code::AdditiveCode;
use crate::f2::{self, BinCode, BinMatrix};
use crate::gf4::Gf4;
use crate::vector::Gf4Vector;
use crate::{Budget, Error};

/// The juxtaposition {uv : u ∈ C₁, v ∈ C₂}, with parameters
/// (n₁+n₂, k₁+k₂, min(d₁,d₂)) when both inputs are self-orthogonal.
pub fn direct_sum(c1: &AdditiveCode, c2: &AdditiveCode) -> AdditiveCode {
    let z1 = Gf4Vector::zero(c1.n());
    let z2 = Gf4Vector::zero(c2.n());
    let gens: Vec<Gf4Vector> = c1
        .generators()
        .iter()
        .map(|g| g.concat(&z2))
        .chain(c2.generators().iter().map(|g| z1.concat(g)))
        .collect();
    AdditiveCode::from_generators(c1.n() + c2.n(), gens)
}

/// Appends a coordinate restricted to {0, 1}: an [[n,k,d]] code with
/// k > 0 becomes an impure [[n+1, k, d]] code (the appended binary
/// coordinate supports a weight-1 dual word, but distance is measured
/// outside the stabilizer and is unchanged).
pub fn lengthen(c: &AdditiveCode) -> Result<AdditiveCode, Error> {
    if !c.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    if c.rank() == c.n() {
        return Err(Error::Precondition("lengthening requires k > 0"));
    }
    Ok(direct_sum(c, &AdditiveCode::from_strs(&["1"])))
}

/// The full-length words of C on which every one of the given F₂-linear
/// functionals vanishes.
fn functional_kernel(c: &AdditiveCode, functionals: &[&dyn Fn(&Gf4Vector) -> bool]) -> Vec<Gf4Vector> {
    let gens = c.generators();
    let r = gens.len();
    let mut m = BinMatrix::new(r);
    for f in functionals {
        let mut row = m.zero_row();
        for (i, g) in gens.iter().enumerate() {
            f2::set_bit(&mut row, i, f(g));
        }
        m.push_row(row);
    }
    m.kernel_basis()
        .iter()
        .map(|coeffs| {
            let mut w = Gf4Vector::zero(c.n());
            for (i, g) in gens.iter().enumerate() {
                if f2::get_bit(coeffs, i) {
                    w.add_assign(g);
                }
            }
            w
        })
        .collect()
}

/// Shortens a pure code at coordinate 0: keep the words vanishing
/// there, then delete the coordinate. A pure [[n,k,d]] with n ≥ 2 and
/// d ≥ 2 yields [[n−1, k+1, d−1]]: purity forces the coordinate image
/// of C to be all of GF(4) (otherwise a weight-1 dual word would exist
/// below d), so the rank drops by exactly 2.
pub fn shorten_pure(c: &AdditiveCode, budget: Budget) -> Result<AdditiveCode, Error> {
    if c.n() < 2 {
        return Err(Error::Precondition("pure shortening requires length at least 2"));
    }
    let params = c.quantum_params(budget)?;
    if !params.pure {
        return Err(Error::Precondition("pure shortening requires a pure code"));
    }
    if params.d < 2 {
        return Err(Error::Precondition("pure shortening requires distance at least 2"));
    }
    let sub = functional_kernel(
        c,
        &[&|g: &Gf4Vector| g.get(0).a_part(), &|g: &Gf4Vector| g.get(0).b_part()],
    );
    let out = AdditiveCode::from_generators(c.n() - 1, sub.iter().map(|w| w.delete_coord(0)));
    assert_eq!(
        out.rank(),
        c.rank() - 2,
        "a pure code of distance >= 2 has full coordinate image"
    );
    Ok(out)
}

/// Grows the stabilizer by one generator: [[n,k,d]] → [[n,k−1,d]],
/// valid for k > 1, or for k = 1 when the input is pure. The added
/// generator is the first canonical dual basis vector outside C, so the
/// result is reproducible; distance cannot drop because the new code's
/// dual-minus-code words form a subset of the old ones.
pub fn reduce_k(c: &AdditiveCode, budget: Budget) -> Result<AdditiveCode, Error> {
    if !c.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    let k = c.n() - c.rank();
    if k == 0 {
        return Err(Error::Precondition("stabilizer growth requires k >= 1"));
    }
    if k == 1 && !c.quantum_params(budget)?.pure {
        return Err(Error::Precondition("stabilizer growth at k = 1 requires a pure code"));
    }
    let v = c
        .dual()
        .generators()
        .into_iter()
        .find(|g| !c.contains(g))
        .expect("the dual of a self-orthogonal code with k > 0 strictly contains it");
    let mut gens = c.generators();
    gens.push(v);
    Ok(AdditiveCode::from_generators(c.n(), gens))
}

/// Punctures at coordinate 0: keep the words whose first coordinate is
/// 0 or 1 (the trace-zero values), then delete the coordinate. An
/// [[n,k,d]] code with n ≥ 2 and d ≥ 2 yields [[n−1, k, d−1]].
pub fn puncture(c: &AdditiveCode) -> Result<AdditiveCode, Error> {
    if !c.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    if c.n() < 2 {
        return Err(Error::Precondition("puncturing requires length at least 2"));
    }
    let sub = functional_kernel(c, &[&|g: &Gf4Vector| g.get(0).trace()]);
    Ok(AdditiveCode::from_generators(
        c.n() - 1,
        sub.iter().map(|w| w.delete_coord(0)),
    ))
}

/// Deletes the coordinate carrying a weight-1 codeword: [[n,k,d]] →
/// [[n−1, k, d]]. If e = α at coordinate i lies in C, every codeword's
/// i-th entry is 0 or α (orthogonality to e), so dropping the
/// coordinate preserves self-orthogonality and loses exactly the rank
/// of e itself.
pub fn drop_weight1(c: &AdditiveCode) -> Result<AdditiveCode, Error> {
    if !c.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    if c.n() < 2 {
        return Err(Error::Precondition("coordinate deletion requires length at least 2"));
    }
    let hit = (0..c.n()).find_map(|i| {
        crate::gf4::NONZERO.iter().find_map(|&x| {
            let mut v = Gf4Vector::zero(c.n());
            v.set(i, x);
            c.contains(&v).then_some(i)
        })
    });
    let Some(i) = hit else {
        return Err(Error::Precondition("no weight-1 codeword to delete"));
    };
    Ok(c.delete_coord(i))
}

/// The binary code generated by the supports of all codewords of C
/// (the support of a word is its set of nonzero coordinates, read as a
/// 0/1 vector).
pub fn support_code(c: &AdditiveCode, budget: Budget) -> Result<BinCode, Error> {
    budget.check(c.rank() as u32)?;
    let gens = c.generators();
    let r = gens.len();
    let nwords = c.n().div_ceil(64);
    let mut mat = BinMatrix::new(c.n());
    let mut cur_a = vec![0u64; nwords];
    let mut cur_b = vec![0u64; nwords];
    for t in 1u64..1 << r {
        let g = &gens[t.trailing_zeros() as usize];
        let mut row = vec![0u64; nwords];
        for j in 0..nwords {
            cur_a[j] ^= g.a_words()[j];
            cur_b[j] ^= g.b_words()[j];
            row[j] = cur_a[j] | cur_b[j];
        }
        if !mat.row_space_contains(&row) {
            mat.push_row(row);
            mat.rref();
            if mat.nrows() == c.n() {
                break;
            }
        }
    }
    Ok(BinCode::from_rows(c.n(), mat.rows().to_vec()))
}

/// Shortens a linear self-orthogonal code by deleting the support of a
/// weight-`target_m` word in the binary dual of its support code. Every
/// codeword meets that support in an even number of positions, so the
/// deleted code stays self-orthogonal (and linear); an [[n,k,d]] input
/// yields an [[n−m, k′, d′]] code with k′ ≥ k−m and d′ ≥ d.
pub fn shorten_by_support(
    c: &AdditiveCode,
    target_m: usize,
    budget: Budget,
) -> Result<AdditiveCode, Error> {
    if !c.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    if !c.is_linear() {
        return Err(Error::NotLinear);
    }
    let dual = support_code(c, budget)?.dual();
    budget.check(dual.dim() as u32)?;
    let rows = dual.basis();
    let nwords = c.n().div_ceil(64);
    let mut cur = vec![0u64; nwords];
    let mut found: Option<Vec<u64>> = None;
    if target_m == 0 {
        found = Some(cur.clone());
    } else {
        for t in 1u64..1 << dual.dim() {
            f2::xor_into(&mut cur, &rows[t.trailing_zeros() as usize]);
            let wt: usize = cur.iter().map(|w| w.count_ones() as usize).sum();
            if wt == target_m {
                found = Some(cur.clone());
                break;
            }
        }
    }
    let Some(word) = found else {
        return Err(Error::NoSuchWord(target_m));
    };
    let mut out = c.clone();
    for j in (0..c.n()).rev() {
        if f2::get_bit(&word, j) {
            out = out.delete_coord(j);
        }
    }
    Ok(out)
}

/// A hyperbolic basis of C^⊥/C: pairs (e, f) with e ∗ f = 1 and all
/// other pairings zero, extracted greedily in canonical dual-basis
/// order (the quotient form is non-degenerate, so extraction always
/// completes for self-orthogonal C).
fn hyperbolic_pairs(c: &AdditiveCode) -> Result<Vec<(Gf4Vector, Gf4Vector)>, Error> {
    let k = c.n() - c.rank();
    let mut pool: Vec<Gf4Vector> = c.dual().generators();
    let mut pairs: Vec<(Gf4Vector, Gf4Vector)> = Vec::with_capacity(k);
    while pairs.len() < k {
        let mut hit = None;
        'search: for i in 0..pool.len() {
            for j in 0..pool.len() {
                if j != i && pool[i].trace_inner(&pool[j]) {
                    hit = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = hit else {
            return Err(Error::Precondition("degenerate quotient pairing"));
        };
        let e = pool[i].clone();
        let f = pool[j].clone();
        pool.remove(i.max(j));
        pool.remove(i.min(j));
        for z in &mut pool {
            if z.trace_inner(&f) {
                z.add_assign(&e);
            }
            if z.trace_inner(&e) {
                z.add_assign(&f);
            }
        }
        pairs.push((e, f));
    }
    Ok(pairs)
}

/// Pastes C₂ into the last k₂ coordinates of C₁: with ρ the
/// form-preserving encoding map C₂^⊥ → GF(4)^{k₂} read off a
/// hyperbolic basis of C₂^⊥/C₂ (the e of pair t maps to ω at slot t,
/// the f to ω̄), the result is {uv : v ∈ C₂^⊥, uρ(v) ∈ C₁}, an
/// [[n₁+n₂−k₂, k₁, d]] code with d ≥ min(d₁, d₁+d₂−k₂).
pub fn paste(c1: &AdditiveCode, c2: &AdditiveCode) -> Result<AdditiveCode, Error> {
    if !c1.is_self_orthogonal() || !c2.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    let (n1, n2) = (c1.n(), c2.n());
    let k2 = n2 - c2.rank();
    if k2 > n1 {
        return Err(Error::Precondition("pasting requires k2 <= n1"));
    }
    let pairs = hyperbolic_pairs(c2)?;
    let keep = n1 - k2;
    let mut gens: Vec<Gf4Vector> = Vec::new();
    for g in c1.generators() {
        let mut w = Gf4Vector::zero(keep + n2);
        for i in 0..keep {
            w.set(i, g.get(i));
        }
        // Lift the suffix through ρ⁻¹: slot value aω + bω̄ pulls in
        // a·e_t + b·f_t.
        let mut v = Gf4Vector::zero(n2);
        for (t, (e, f)) in pairs.iter().enumerate() {
            let x = g.get(keep + t);
            if x.a_part() {
                v.add_assign(e);
            }
            if x.b_part() {
                v.add_assign(f);
            }
        }
        for i in 0..n2 {
            w.set(keep + i, v.get(i));
        }
        gens.push(w);
    }
    let zero_prefix = Gf4Vector::zero(keep);
    for g in c2.generators() {
        gens.push(zero_prefix.concat(&g));
    }
    Ok(AdditiveCode::from_generators(keep + n2, gens))
}

/// The blockwise minimum weight of C^⊥ ∖ C read over consecutive
/// blocks of `m` coordinates (for a self-dual code, of C ∖ {0}): the
/// multiplier in the concatenated-code distance bound.
pub fn block_weight(c: &AdditiveCode, m: usize, budget: Budget) -> Result<usize, Error> {
    assert!(m >= 1 && c.n() % m == 0);
    let self_dual = c.rank() == c.n();
    let side = if self_dual { c.clone() } else { c.dual() };
    budget.check(side.rank() as u32)?;
    let gens = side.generators();
    let r = gens.len();
    let blocks = c.n() / m;
    let mut cur = Gf4Vector::zero(c.n());
    let mut best = blocks + 1;
    for t in 1u64..1 << r {
        cur.add_assign(&gens[t.trailing_zeros() as usize]);
        if !self_dual && c.contains(&cur) {
            continue;
        }
        let mut wt = 0;
        for b in 0..blocks {
            if (0..m).any(|i| cur.get(b * m + i) != Gf4::Zero) {
                wt += 1;
            }
        }
        best = best.min(wt);
    }
    if best > blocks {
        return Err(Error::Precondition("no word outside the code to measure"));
    }
    Ok(best)
}

/// The result of [`concatenate`]: the assembled code plus the verified
/// blockwise distance of the outer code, when its dual was small enough
/// to enumerate (None means the blockwise hypothesis was not checked
/// and the caller's own distance claim must stand in).
pub struct Concatenated {
    /// The assembled code.
    pub code: AdditiveCode,
    /// Blockwise minimum weight of the outer dual-minus-code, if
    /// enumerable within budget.
    pub outer_block_weight: Option<usize>,
}

/// Concatenates: each block of m = k(inner) coordinates of the outer
/// code is re-encoded through the inner [[n₂, m, d₂]] code by pasting,
/// block by block in order. An outer code of blockwise distance d gives
/// an [[n·n₂/m, k, ≥ d·d₂]] code.
pub fn concatenate(
    outer: &AdditiveCode,
    inner: &AdditiveCode,
    budget: Budget,
) -> Result<Concatenated, Error> {
    if !outer.is_self_orthogonal() || !inner.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    let m = inner.n() - inner.rank();
    if m == 0 || outer.n() % m != 0 {
        return Err(Error::Precondition(
            "outer length must be a multiple of the inner code's k",
        ));
    }
    let blocks = outer.n() / m;
    let mut cur = outer.clone();
    for _ in 0..blocks {
        // Rotate the current leading block to the end, then paste the
        // inner code over it; finished blocks accumulate behind in
        // original order.
        let len = cur.n();
        let perm: Vec<usize> = (m..len).chain(0..m).collect();
        cur = paste(&cur.permute(&perm), inner)?;
    }
    let outer_block_weight = match block_weight(outer, m, budget) {
        Ok(w) => Some(w),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Concatenated {
        code: cur,
        outer_block_weight,
    })
}

/// The CSS code of a nested pair of binary codes C₁ ⊆ C₂: the additive
/// code ωC₁ + ω̄C₂^⊥, an [[n, k₂−k₁, d]] code with
/// d = min over C₂∖C₁ and C₁^⊥∖C₂^⊥ of the binary minimum weight.
pub fn css(c1: &BinCode, c2: &BinCode) -> Result<AdditiveCode, Error> {
    if c1.n() != c2.n() {
        return Err(Error::Precondition("CSS inputs must have equal length"));
    }
    if !c2.contains_code(c1) {
        return Err(Error::Precondition("CSS requires C1 to be contained in C2"));
    }
    let n = c1.n();
    let nwords = n.div_ceil(64);
    let mut gens: Vec<Gf4Vector> = Vec::new();
    for row in c1.basis() {
        gens.push(Gf4Vector::from_raw(n, row.clone(), vec![0; nwords]));
    }
    for row in c2.dual().basis() {
        gens.push(Gf4Vector::from_raw(n, vec![0; nwords], row.clone()));
    }
    let code = AdditiveCode::from_generators(n, gens);
    debug_assert!(code.is_self_orthogonal());
    Ok(code)
}

/// The distance of the CSS code of C₁ ⊆ C₂ computed on the binary side:
/// min(wt(C₂∖C₁), wt(C₁^⊥∖C₂^⊥)); None when k₂ = k₁ (both sets empty).
pub fn css_distance(c1: &BinCode, c2: &BinCode) -> Option<usize> {
    let a = c2.min_weight_excluding(c1)?;
    let b = c1.dual().min_weight_excluding(&c2.dual())?;
    Some(a.min(b))
}

/// The companion matrix of the monic binary polynomial
/// x^m + c_{m−1}x^{m−1} + … + c₀, given its low-order coefficients
/// [c₀, …, c_{m−1}]: multiplication by x on the basis 1, x, …, x^{m−1}.
pub fn companion_matrix(coeffs: &[bool]) -> BinMatrix {
    let m = coeffs.len();
    let mut f = BinMatrix::new(m);
    for (i, &c) in coeffs.iter().enumerate() {
        let mut row = f.zero_row();
        if i > 0 {
            f2::set_bit(&mut row, i - 1, true);
        }
        if c {
            let prev = f2::get_bit(&row, m - 1);
            f2::set_bit(&mut row, m - 1, !prev);
        }
        f.push_row(row);
    }
    f
}

/// The block-diagonal sum of square binary matrices.
pub fn block_diag(parts: &[&BinMatrix]) -> BinMatrix {
    let m: usize = parts.iter().map(|p| p.ncols()).sum();
    let mut f = BinMatrix::new(m);
    let mut off = 0;
    for p in parts {
        for i in 0..p.nrows() {
            let mut row = f.zero_row();
            for j in 0..p.ncols() {
                if p.get(i, j) {
                    f2::set_bit(&mut row, off + j, true);
                }
            }
            f.push_row(row);
        }
        off += p.ncols();
    }
    f
}

/// A constant vector x, x, …, x of length n.
fn uniform(n: usize, x: Gf4) -> Gf4Vector {
    let mut v = Gf4Vector::zero(n);
    for i in 0..n {
        v.set(i, x);
    }
    v
}

/// The simplex-based distance-3 family: for an invertible,
/// fixed-point-free m×m binary matrix f (m ≥ 2), the code of length
/// 2^m generated by the rows w_u + ω·w_{f(u)} (u over a basis, w the
/// simplex codeword map, one zero coordinate appended) together with
/// the all-1 and all-ω rows. The result is a (2^m, 2^{m+2}) code giving
/// [[2^m, 2^m−m−2, 3]].
pub fn gottesman_code(m: usize, f: &BinMatrix) -> Result<AdditiveCode, Error> {
    if m < 2 {
        return Err(Error::Precondition("the simplex family needs m >= 2"));
    }
    if f.nrows() != m || f.ncols() != m {
        return Err(Error::Precondition("f must be an m x m binary matrix"));
    }
    let mut fr = f.clone();
    if fr.rref().len() != m {
        return Err(Error::Precondition("f must be invertible"));
    }
    let mut fi = f.clone();
    for i in 0..m {
        let cur = fi.get(i, i);
        fi.set(i, i, !cur);
    }
    if fi.rref().len() != m {
        return Err(Error::Precondition("f must be fixed-point-free"));
    }
    let nn = 1usize << m;
    let mut gens: Vec<Gf4Vector> = Vec::new();
    for i in 0..m {
        // u = e_i; f(u) is column i of f.
        let fu: Vec<bool> = (0..m).map(|r| f.get(r, i)).collect();
        let mut g = Gf4Vector::zero(nn);
        for c in 1..nn {
            let uc = (c >> i) & 1 == 1;
            let fc = (0..m).fold(false, |acc, r| acc ^ (fu[r] && (c >> r) & 1 == 1));
            // Value (u·c)·1 + (f(u)·c)·ω at the coordinate for column c.
            g.set(c - 1, Gf4::from_parts(uc ^ fc, uc));
        }
        gens.push(g);
    }
    gens.push(uniform(nn, Gf4::One));
    gens.push(uniform(nn, Gf4::Omega));
    let code = AdditiveCode::from_generators(nn, gens);
    debug_assert_eq!(code.rank(), m + 2);
    Ok(code)
}

/// The low-overhead extension of the simplex family: distance-3 codes
/// [[n, n−m−2, 3]] with n = (4^{m/2+1}−1)/3 for even m and
/// n = (4^{(m+1)/2}−1)·2/3 for odd m. Built recursively: C₂ is the
/// five-coordinate code, C₃ the eight-coordinate one, and C_m glues
/// C_{m−2} to the length-2^m simplex-based code G along the quotient by
/// G's weight-2^m subcode, matching canonical bases.
pub fn extend_gottesman(m: usize) -> Result<AdditiveCode, Error> {
    if m < 2 {
        return Err(Error::Precondition("the extension family needs m >= 2"));
    }
    if m == 2 {
        return Ok(crate::catalog::five_one_three());
    }
    if m == 3 {
        return gottesman_code(3, &companion_matrix(&[true, true, false]));
    }
    let prev = extend_gottesman(m - 2)?;
    // x^m + x + 1 is always invertible and fixed-point-free as a
    // companion matrix (constant term 1; value at 1 is 1).
    let mut coeffs = vec![false; m];
    coeffs[0] = true;
    coeffs[1] = true;
    let g = gottesman_code(m, &companion_matrix(&coeffs))?;
    let nn = 1usize << m;
    // Quotient representatives of G over its weight-2^m subcode
    // {0, all-1, all-ω, all-ω̄}, greedily independent in canonical order.
    let mut span = AdditiveCode::from_generators(
        nn,
        [uniform(nn, Gf4::One), uniform(nn, Gf4::Omega)],
    );
    let mut reps: Vec<Gf4Vector> = Vec::new();
    for cand in g.generators() {
        if !span.contains(&cand) {
            let mut gs = span.generators();
            gs.push(cand.clone());
            span = AdditiveCode::from_generators(nn, gs);
            reps.push(cand);
        }
    }
    debug_assert_eq!(reps.len(), m);
    let pb = prev.generators();
    debug_assert_eq!(pb.len(), m);
    let z = Gf4Vector::zero(prev.n());
    let mut gens: Vec<Gf4Vector> = pb.iter().zip(&reps).map(|(v1, v2)| v1.concat(v2)).collect();
    gens.push(z.concat(&uniform(nn, Gf4::One)));
    gens.push(z.concat(&uniform(nn, Gf4::Omega)));
    Ok(AdditiveCode::from_generators(prev.n() + nn, gens))
}

/// The u|u+v sum of two pure codes C₁ ⊆ C₂ of the same length:
/// {u(u+v) : u ∈ C₂^⊥, v ∈ C₁}, a pure [[2n, k₁−k₂, min(2d₁, wt(C₂))]]
/// code, where wt(C₂) is the classical minimum weight of C₂ itself.
pub fn uuv(c1: &AdditiveCode, c2: &AdditiveCode, budget: Budget) -> Result<AdditiveCode, Error> {
    if c1.n() != c2.n() {
        return Err(Error::Precondition("u|u+v requires equal lengths"));
    }
    if !c2.contains_code(c1) {
        return Err(Error::Precondition("u|u+v requires C1 contained in C2"));
    }
    let p1 = c1.quantum_params(budget)?;
    let p2 = c2.quantum_params(budget)?;
    if !p1.pure || !p2.pure {
        return Err(Error::Precondition("u|u+v requires both codes pure"));
    }
    let n = c1.n();
    let z = Gf4Vector::zero(n);
    let gens: Vec<Gf4Vector> = c2
        .dual()
        .generators()
        .iter()
        .map(|g| g.concat(g))
        .chain(c1.generators().iter().map(|g| z.concat(g)))
        .collect();
    Ok(AdditiveCode::from_generators(2 * n, gens))
}

/// The binary even-weight code of length n ≥ 2 as an additive code:
/// rank n−1, all words 0/1-valued with an even number of 1s.
pub fn dn_code(n: usize) -> AdditiveCode {
    assert!(n >= 2);
    let gens = (0..n - 1).map(|i| {
        let mut v = Gf4Vector::zero(n);
        v.set(i, Gf4::One);
        v.set(i + 1, Gf4::One);
        v
    });
    AdditiveCode::from_generators(n, gens)
}

/// The even-weight code extended by the all-ω row: a self-dual
/// [[n, 0, 2]] code for every n ≥ 2.
pub fn dn_plus(n: usize) -> AdditiveCode {
    let mut gens = dn_code(n).generators();
    gens.push(uniform(n, Gf4::Omega));
    AdditiveCode::from_generators(n, gens)
}

/// The stock codes of distance 1 and 2.
///
/// d = 1 exists for all 0 ≤ k ≤ n (stabilizer spanned by weight-1
/// rows). d = 2 exists for even n with k ≤ n−2, and odd n ≥ 3 with
/// k ≤ n−3: the base ⟨all-1, all-ω⟩ plus binary pair rows, with one
/// appended binary coordinate when n is odd (k = 0 odd falls back to
/// the extended even-weight code).
pub fn trivial_code(n: usize, k: usize, d: usize) -> Result<AdditiveCode, Error> {
    match d {
        1 => {
            if k > n {
                return Err(Error::Precondition("distance 1 requires k <= n"));
            }
            let gens = (0..n - k).map(|i| {
                let mut v = Gf4Vector::zero(n);
                v.set(i, Gf4::One);
                v
            });
            Ok(AdditiveCode::from_generators(n, gens))
        }
        2 => {
            if n % 2 == 0 {
                if n < 2 || k > n - 2 {
                    return Err(Error::Precondition("distance 2 at even n requires k <= n-2"));
                }
                let mut gens = vec![uniform(n, Gf4::One), uniform(n, Gf4::Omega)];
                for i in 1..=(n - k - 2) {
                    let mut v = Gf4Vector::zero(n);
                    v.set(0, Gf4::One);
                    v.set(i, Gf4::One);
                    gens.push(v);
                }
                Ok(AdditiveCode::from_generators(n, gens))
            } else {
                if n < 3 || k > n - 3 {
                    return Err(Error::Precondition("distance 2 at odd n requires k <= n-3"));
                }
                if k == 0 {
                    return Ok(dn_plus(n));
                }
                let mut gens = vec![uniform(n - 1, Gf4::One).concat(&Gf4Vector::zero(1))];
                let mut all_omega = uniform(n, Gf4::Omega);
                all_omega.set(n - 1, Gf4::Zero);
                gens.push(all_omega);
                let mut last = Gf4Vector::zero(n);
                last.set(n - 1, Gf4::One);
                gens.push(last);
                for i in 1..=(n - k - 3) {
                    let mut v = Gf4Vector::zero(n);
                    v.set(0, Gf4::One);
                    v.set(i, Gf4::One);
                    gens.push(v);
                }
                Ok(AdditiveCode::from_generators(n, gens))
            }
        }
        _ => Err(Error::Precondition("stock codes cover d = 1 and d = 2 only")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{five_one_three, gf4_simplex, hexacode};
    use num_bigint::BigUint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn params(c: &AdditiveCode) -> (usize, usize, usize, bool) {
        let p = c.quantum_params(Budget::default()).unwrap();
        (p.n, p.k, p.d, p.pure)
    }

    #[test]
    fn direct_sum_of_two_five_qubit_codes() {
        let five = five_one_three();
        let sum = direct_sum(&five, &five);
        assert!(sum.is_self_orthogonal());
        assert_eq!(params(&sum), (10, 2, 3, true));
        // Zero-length neutral element.
        let same = direct_sum(&five, &AdditiveCode::zero(0));
        assert_eq!(same, five);
    }

    #[test]
    fn lengthen_gives_impure_code() {
        let six = lengthen(&five_one_three()).unwrap();
        assert_eq!(params(&six), (6, 1, 3, false));
        // Self-dual codes have k = 0 and cannot be lengthened.
        assert!(matches!(
            lengthen(&hexacode()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn shorten_pure_hexacode_to_five_qubit_params() {
        let five = shorten_pure(&hexacode(), Budget::default()).unwrap();
        assert_eq!(params(&five), (5, 1, 3, true));
        // Impure inputs are rejected.
        let impure = lengthen(&five_one_three()).unwrap();
        assert!(matches!(
            shorten_pure(&impure, Budget::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reduce_k_steps_down_through_valid_ranks() {
        let eight = gottesman_code(3, &companion_matrix(&[true, true, false])).unwrap();
        assert_eq!(params(&eight), (8, 3, 3, true));
        let reduced = reduce_k(&eight, Budget::default()).unwrap();
        assert_eq!(reduced.n(), 8);
        assert_eq!(reduced.rank(), 6);
        let p = reduced.quantum_params(Budget::default()).unwrap();
        assert_eq!((p.n, p.k), (8, 2));
        assert!(p.d >= 3);
        // k = 0 input is rejected.
        assert!(matches!(
            reduce_k(&hexacode(), Budget::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn puncture_loses_one_coordinate_and_one_distance() {
        let four = puncture(&five_one_three()).unwrap();
        assert_eq!(params(&four), (4, 1, 2, true));
    }

    #[test]
    fn drop_weight1_inverts_lengthening() {
        let five = five_one_three();
        let six = lengthen(&five).unwrap();
        let back = drop_weight1(&six).unwrap();
        assert_eq!(back, five);
        assert!(matches!(
            drop_weight1(&five),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn support_shortening_of_the_length_21_simplex() {
        // [[21,15,3]]; delete the support of a weight-9 binary word dual
        // to the support code, leaving a [[12, >=6, >=3]] code.
        let c = gf4_simplex(3);
        let out = shorten_by_support(&c, 9, Budget::default()).unwrap();
        assert_eq!(out.n(), 12);
        assert!(out.is_linear());
        assert!(out.is_self_orthogonal());
        let p = out.quantum_params(Budget::default()).unwrap();
        assert!(p.k >= 15 - 9, "k' = {} too small", p.k);
        assert!(p.d >= 3, "d' = {} too small", p.d);
        // Nonlinear input is rejected (a lengthened code has one
        // coordinate restricted to {0, 1}, breaking ω-closure).
        let nonlinear = lengthen(&five_one_three()).unwrap();
        assert!(matches!(
            shorten_by_support(&nonlinear, 3, Budget::default()),
            Err(Error::NotLinear)
        ));
    }

    #[test]
    fn paste_with_the_accepting_single_coordinate_is_lengthening() {
        let five = five_one_three();
        let one = AdditiveCode::from_strs(&["1"]);
        let pasted = paste(&five, &one).unwrap();
        assert_eq!(pasted, lengthen(&five).unwrap());
    }

    #[test]
    fn paste_five_qubit_with_repetition_pair() {
        let five = five_one_three();
        let rep = AdditiveCode::from_strs(&["11"]);
        let out = paste(&five, &rep).unwrap();
        assert_eq!(out.n(), 6);
        assert_eq!(out.rank(), 5);
        assert_eq!(params(&out), (6, 1, 3, false));
    }

    #[test]
    fn paste_dual_is_paste_of_the_dual() {
        // The dual of a pasted code is the same assembly applied to the
        // dual of the first input (with the identical hyperbolic lift).
        let five = five_one_three();
        let rep = AdditiveCode::from_strs(&["11"]);
        let out = paste(&five, &rep).unwrap();
        let pairs = hyperbolic_pairs(&rep).unwrap();
        let mut gens: Vec<Gf4Vector> = Vec::new();
        for g in five.dual().generators() {
            let mut w = Gf4Vector::zero(6);
            for i in 0..4 {
                w.set(i, g.get(i));
            }
            let x = g.get(4);
            let mut v = Gf4Vector::zero(2);
            if x.a_part() {
                v.add_assign(&pairs[0].0);
            }
            if x.b_part() {
                v.add_assign(&pairs[0].1);
            }
            for i in 0..2 {
                w.set(4 + i, v.get(i));
            }
            gens.push(w);
        }
        let z4 = Gf4Vector::zero(4);
        for g in rep.generators() {
            gens.push(z4.concat(&g));
        }
        let expected_dual = AdditiveCode::from_generators(6, gens);
        assert_eq!(out.dual(), expected_dual);
    }

    #[test]
    fn concatenation_with_identity_inner_is_identity() {
        let five = five_one_three();
        let identity_inner = AdditiveCode::zero(1);
        let out = concatenate(&five, &identity_inner, Budget::default()).unwrap();
        assert_eq!(out.code, five);
        assert_eq!(out.outer_block_weight, Some(3));
    }

    #[test]
    fn self_concatenation_of_the_five_qubit_code() {
        let five = five_one_three();
        let out = concatenate(&five, &five, Budget::default()).unwrap();
        assert_eq!(out.outer_block_weight, Some(3));
        assert_eq!(out.code.n(), 25);
        assert_eq!(out.code.rank(), 24);
        assert!(out.code.is_self_orthogonal());
        let p = out.code.quantum_params(Budget::default()).unwrap();
        assert_eq!((p.n, p.k, p.d), (25, 1, 9));
        assert!(!p.pure);
    }

    /// The [7,4] binary Hamming code and its dual, the [7,3] simplex.
    fn hamming7() -> (BinCode, BinCode) {
        let simplex = BinCode::from_strs(&["1010101", "0110011", "0001111"]);
        (simplex.dual(), simplex)
    }

    #[test]
    fn css_on_the_hamming_pair_gives_a_seven_qubit_code() {
        let (hamming, simplex) = hamming7();
        assert!(hamming.contains_code(&simplex));
        let code = css(&simplex, &hamming).unwrap();
        assert_eq!(params(&code), (7, 1, 3, true));
        assert_eq!(css_distance(&simplex, &hamming), Some(3));
    }

    #[test]
    fn css_edge_cases() {
        // C1 = {0}, C2 = everything: [[n, n, 1]].
        let zero = BinCode::zero(4);
        let full = BinCode::full(4);
        let c = css(&zero, &full).unwrap();
        assert_eq!(params(&c), (4, 4, 1, true));
        // C1 = C2 self-dual: [[2, 0, 2]].
        let rep = BinCode::from_strs(&["11"]);
        let c = css(&rep, &rep).unwrap();
        assert_eq!(params(&c), (2, 0, 2, true));
        // Containment violations are rejected.
        let e1 = BinCode::from_strs(&["10"]);
        let e2 = BinCode::from_strs(&["01"]);
        assert!(matches!(css(&e1, &e2), Err(Error::Precondition(_))));
    }

    #[test]
    fn simplex_family_enumerator_is_three_valued() {
        // Every valid companion choice at m = 3, 4 gives the enumerator
        // x^N + 4(N−1)·x^{N/4}y^{3N/4} + 3y^N, N = 2^m.
        let cases: [(usize, Vec<Vec<bool>>); 2] = [
            (
                3,
                vec![vec![true, true, false], vec![true, false, true]],
            ),
            (
                4,
                vec![
                    vec![true, true, false, false],
                    vec![true, false, true, false],
                    vec![true, false, false, true],
                    vec![true, true, true, true],
                ],
            ),
        ];
        for (m, polys) in cases {
            let nn = 1usize << m;
            for coeffs in polys {
                let code = gottesman_code(m, &companion_matrix(&coeffs)).unwrap();
                let w = code.weight_distribution(Budget::default()).unwrap();
                for j in 0..=nn {
                    let expect = if j == 0 {
                        BigUint::from(1u32)
                    } else if j == 3 * nn / 4 {
                        BigUint::from(4 * (nn - 1))
                    } else if j == nn {
                        BigUint::from(3u32)
                    } else {
                        BigUint::from(0u32)
                    };
                    assert_eq!(*w.coeff(j), expect, "m={m} weight {j}");
                }
                let p = code.quantum_params(Budget::default()).unwrap();
                assert_eq!((p.n, p.k, p.d), (nn, nn - m - 2, 3));
                assert!(p.pure);
            }
        }
    }

    #[test]
    fn simplex_family_linearity_matches_the_matrix_identity() {
        // Linear exactly when f² + f + I = 0; at m = 4 that separates
        // the double 2x2 block from the two 4x4 companion classes.
        let c22 = companion_matrix(&[true, true]);
        let choices = [
            block_diag(&[&c22, &c22]),
            companion_matrix(&[true, false, true, false]), // (x²+x+1)²
            companion_matrix(&[true, true, false, false]), // x⁴+x+1
        ];
        for f in &choices {
            let m = f.ncols();
            // f² + f + I over F₂.
            let mut sq = BinMatrix::new(m);
            for i in 0..m {
                let mut row = sq.zero_row();
                for j in 0..m {
                    let mut acc = (0..m).fold(false, |a, t| a ^ (f.get(i, t) && f.get(t, j)));
                    acc ^= f.get(i, j);
                    if i == j {
                        acc = !acc;
                    }
                    f2::set_bit(&mut row, j, acc);
                }
                sq.push_row(row);
            }
            let is_zero = sq.rows().iter().all(|r| r.iter().all(|&w| w == 0));
            let code = gottesman_code(m, f).unwrap();
            assert_eq!(code.is_linear(), is_zero);
        }
        let codes: Vec<AdditiveCode> = choices
            .iter()
            .map(|f| gottesman_code(4, f).unwrap())
            .collect();
        assert!(codes[0].is_linear());
        assert!(!codes[1].is_linear());
        assert!(!codes[2].is_linear());
    }

    #[test]
    fn simplex_family_rejects_bad_matrices() {
        // Singular f.
        let singular = BinMatrix::from_rows(2, vec![vec![0u64; 1], vec![0u64; 1]]);
        assert!(matches!(
            gottesman_code(2, &singular),
            Err(Error::Precondition(_))
        ));
        // The identity fixes everything.
        assert!(matches!(
            gottesman_code(2, &BinMatrix::identity(2)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            gottesman_code(1, &BinMatrix::identity(1)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn extension_family_small_members() {
        assert_eq!(extend_gottesman(2).unwrap(), five_one_three());
        assert_eq!(params(&extend_gottesman(3).unwrap()), (8, 3, 3, true));
        let c4 = extend_gottesman(4).unwrap();
        assert_eq!(params(&c4), (21, 15, 3, true));
        // Even members share the simplex family's weight distribution.
        let b = Budget::default();
        assert_eq!(
            c4.weight_distribution(b).unwrap().coeffs(),
            gf4_simplex(3).weight_distribution(b).unwrap().coeffs()
        );
    }

    #[test]
    fn extension_family_length_40_member() {
        let c5 = extend_gottesman(5).unwrap();
        assert_eq!(params(&c5), (40, 33, 3, true));
        // Distribution forced by the glue: 1 + 112·x^{10}y^{30} + 15·x^8y^{32}.
        let w = c5.weight_distribution(Budget::default()).unwrap();
        for j in 0..=40 {
            let expect = match j {
                0 => 1u32,
                30 => 112,
                32 => 15,
                _ => 0,
            };
            assert_eq!(*w.coeff(j), BigUint::from(expect), "weight {j}");
        }
    }

    #[test]
    fn extension_family_length_85_member() {
        let c6 = extend_gottesman(6).unwrap();
        assert_eq!(c6.n(), 85);
        assert_eq!(c6.rank(), 8);
        let p = c6.quantum_params(Budget::default()).unwrap();
        assert_eq!((p.n, p.k, p.d), (85, 77, 3));
    }

    #[test]
    fn uuv_on_a_hexacode_line() {
        // C1 = the line of the first weight-6 hexacode word; C2 = the
        // hexacode. The sum is a [[12, 4, 4]] code.
        let hexa = hexacode();
        let w = hexa
            .codewords()
            .into_iter()
            .filter(|v| v.weight() == 6)
            .min_by(|a, b| a.lex_cmp(b))
            .unwrap();
        let line = AdditiveCode::from_generators(6, [w.clone(), w.scale(Gf4::Omega)]);
        assert_eq!(params(&line), (6, 4, 2, true));
        assert!(hexa.contains_code(&line));
        let out = uuv(&line, &hexa, Budget::default()).unwrap();
        assert_eq!(params(&out), (12, 4, 4, true));
    }

    #[test]
    fn uuv_with_equal_arguments_is_self_dual() {
        let five = five_one_three();
        let out = uuv(&five, &five, Budget::default()).unwrap();
        // d = min(2·3, wt(C2)) = min(6, 4) = 4.
        assert_eq!(params(&out), (10, 0, 4, true));
        // Containment violations are rejected.
        let other = lengthen(&five).unwrap();
        assert!(matches!(
            uuv(&other, &other, Budget::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn stock_codes_cover_their_stated_ranges() {
        assert_eq!(params(&trivial_code(4, 2, 2).unwrap()), (4, 2, 2, true));
        assert_eq!(params(&trivial_code(5, 2, 2).unwrap()), (5, 2, 2, false));
        assert_eq!(params(&trivial_code(2, 0, 2).unwrap()), (2, 0, 2, true));
        assert_eq!(trivial_code(2, 0, 2).unwrap(), dn_plus(2));
        for n in 2..=8 {
            for k in 0..=n {
                let c = trivial_code(n, k, 1).unwrap();
                assert!(c.is_self_orthogonal());
                let p = c.quantum_params(Budget::default()).unwrap();
                assert_eq!((p.n, p.k, p.d), (n, k, 1), "d=1 case n={n} k={k}");
                let kmax = if n % 2 == 0 { n - 2 } else { n - 3 };
                if k <= kmax {
                    let c = trivial_code(n, k, 2).unwrap();
                    assert!(c.is_self_orthogonal());
                    let p = c.quantum_params(Budget::default()).unwrap();
                    assert_eq!((p.n, p.k, p.d), (n, k, 2), "d=2 case n={n} k={k}");
                }
            }
        }
        // Even self-dual base coincides with the extended even-weight code.
        assert_eq!(trivial_code(6, 0, 2).unwrap(), dn_plus(6));
        // Out-of-range parameters are rejected.
        assert!(trivial_code(4, 3, 2).is_err());
        assert!(trivial_code(5, 3, 2).is_err());
        assert!(trivial_code(3, 1, 2).is_err());
        assert!(trivial_code(4, 1, 3).is_err());
    }

    #[test]
    fn even_weight_family_is_self_dual_distance_2() {
        for n in 2..=9 {
            let d = dn_code(n);
            assert_eq!(d.rank(), n - 1);
            assert!(d.is_self_orthogonal());
            let plus = dn_plus(n);
            assert!(plus.is_self_dual());
            assert_eq!(params(&plus), (n, 0, 2, true));
        }
    }

    #[test]
    fn adding_one_generator_to_a_linear_code_never_beats_closure() {
        // For linear D and any word v outside it, ⟨D, v⟩ and the linear
        // closure ⟨D, v, ωv⟩ have the same classical minimum weight:
        // scaling by ω maps the coset v + D onto ωv + D, so all three
        // new cosets share one minimum.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut checked = 0;
        while checked < 40 {
            let n = rng.gen_range(3..=7);
            let dim = rng.gen_range(1..n);
            let mut gens: Vec<Gf4Vector> = Vec::new();
            for _ in 0..dim {
                let mut g = Gf4Vector::zero(n);
                for i in 0..n {
                    g.set(i, Gf4::from_bits(rng.gen_range(0..4)));
                }
                gens.push(g.scale(Gf4::Omega));
                gens.push(g);
            }
            let d_code = AdditiveCode::from_generators(n, gens.clone());
            assert!(d_code.is_linear());
            let mut v = Gf4Vector::zero(n);
            for i in 0..n {
                v.set(i, Gf4::from_bits(rng.gen_range(0..4)));
            }
            if d_code.contains(&v) {
                continue;
            }
            gens.push(v.clone());
            let b1 = AdditiveCode::from_generators(n, gens.clone());
            gens.push(v.scale(Gf4::Omega));
            let b2 = AdditiveCode::from_generators(n, gens);
            assert_eq!(b2.rank(), b1.rank() + 1);
            let b = Budget::default();
            assert_eq!(
                b1.min_weight(b).unwrap(),
                b2.min_weight(b).unwrap(),
                "n={n} v={v}"
            );
            checked += 1;
        }
    }
}
