//! Shift-invariant additive codes: constacyclic, cyclic, conjucyclic, and
//! quasicyclic structure.
//!
//! A constacyclic code is an ideal in GF(4)[x]/(x^n - kappa); it is spanned
//! by the shifts of one generator polynomial, and its dual is governed by
//! the [`dagger`] map, a conjugate-reciprocal twist under which the
//! irreducible factors of `x^n - kappa` either stand alone or swap in
//! pairs ([`factor_xn_minus_kappa`]).  Choosing a zero set that covers an
//! arithmetic progression of root exponents gives a designed minimum
//! distance, which [`bch_search`] exploits to find the cheapest generator
//! reaching a target ([`BchResult`]).
//!
//! Additive codes closed under the plain cyclic shift need not be ideals:
//! they are spanned by the shifts of two rows, `w*p(x) + q(x)` and a binary
//! polynomial `r(x)` ([`additive_cyclic`]), with self-orthogonality
//! equivalent to three binary congruences ([`ac_self_orthogonal`]).
//! [`to_cyclic_form`] recovers the canonical `(p, q, r)` triple from any
//! shift-closed code, and [`search_additive_cyclic`] scans the
//! parametrization of all self-orthogonal cyclic codes of a given odd
//! length for codes meeting a distance goal.
//!
//! Conjucyclic codes, closed under the shift that conjugates the wrapped
//! symbol, correspond exactly to binary cyclic codes of twice the length
//! through the coordinate planes ([`conjucyclic_to_binary`]).  Quasicyclic
//! codes come from simultaneous rotation of several seed blocks
//! ([`quasicyclic_code`]).

use std::collections::{BTreeSet, HashMap, HashSet};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::code::render_generators;
use crate::enumerator::krawtchouk;
use crate::f2::{get_bit, set_bit, BinCode, BinMatrix};
use crate::gf4::Gf4;
use crate::poly::{
    cyclotomic_cosets, factor_x_n_minus_1, multiplicative_order, CyclotomicCoset, F2Field,
    F2Poly, Gf4Poly,
};
use crate::vector::Gf4Vector;
use crate::{AdditiveCode, Budget, Error};

/// The conjugate-reciprocal twist on residues modulo `x^n - kappa`:
/// `kappa * conj(g0)` plus `conj(g_(n-j))` at each positive position `j`.
/// Requires a nonzero `kappa` and `deg g < n`; applying it twice gives the
/// argument back, and a constacyclic generator `g` spans a self-orthogonal
/// code exactly when `g * dagger(g)` vanishes modulo `x^n - kappa`.
pub fn dagger(g: &Gf4Poly, n: usize, kappa: Gf4) -> Result<Gf4Poly, Error> {
    if kappa == Gf4::Zero {
        return Err(Error::Precondition("the shift constant must be nonzero"));
    }
    if g.degree().map_or(false, |d| d >= n) {
        return Err(Error::Precondition(
            "the polynomial degree must be below the modulus length",
        ));
    }
    let mut coeffs = vec![Gf4::Zero; n];
    coeffs[0] = kappa * g.coeff(0).conj();
    for j in 1..n {
        coeffs[j] = g.coeff(n - j).conj();
    }
    Ok(Gf4Poly::from_coeffs(coeffs))
}

/// The irreducible factors of `x^n - kappa` over GF(4), split by how the
/// conjugate-reciprocal pairing acts on them.
#[derive(Clone, Debug)]
pub struct DaggerFactors {
    /// Factors that are their own conjugate reciprocal.
    pub self_paired: Vec<Gf4Poly>,
    /// Factor pairs swapped by the conjugate reciprocal, each listed once.
    pub swapped_pairs: Vec<(Gf4Poly, Gf4Poly)>,
}

impl DaggerFactors {
    /// Every irreducible factor, in a deterministic order.
    pub fn all(&self) -> Vec<Gf4Poly> {
        let mut out = self.self_paired.clone();
        for (a, b) in &self.swapped_pairs {
            out.push(a.clone());
            out.push(b.clone());
        }
        out
    }
}

/// Root bookkeeping for the factorization of `x^n - kappa`: which residues
/// index which factor, and which factor is each one's conjugate reciprocal.
struct Factored {
    kappa: Gf4,
    /// `n` for `kappa = 1`, otherwise `3n` (cube roots refine the residues).
    big_modulus: usize,
    /// Root-exponent orbits under multiplication by 4, aligned with
    /// `factors`.
    cosets: Vec<CyclotomicCoset>,
    /// The irreducible factor whose roots are each coset's exponents.
    factors: Vec<Gf4Poly>,
    /// `partner[i]` is the index of the conjugate reciprocal of factor `i`.
    partner: Vec<usize>,
}

impl Factored {
    /// Computes the factorization of `x^n - kappa` for odd `n` by building
    /// a field containing both GF(4) and the needed roots of unity.
    fn new(n: usize, kappa: Gf4) -> Result<Factored, Error> {
        if kappa == Gf4::Zero {
            return Err(Error::Precondition("the shift constant must be nonzero"));
        }
        if n == 0 || n % 2 == 0 {
            return Err(Error::Precondition("the length must be odd"));
        }
        let big_modulus = if kappa == Gf4::One { n } else { 3 * n };
        let residues: Vec<usize> = match kappa {
            Gf4::One => (0..n).collect(),
            Gf4::Omega => (0..big_modulus).filter(|t| t % 3 == 1).collect(),
            Gf4::OmegaBar => (0..big_modulus).filter(|t| t % 3 == 2).collect(),
            Gf4::Zero => unreachable!(),
        };
        let (field, xi, omega) = if big_modulus == 1 {
            // x - 1 needs no roots beyond the base field.
            let field = F2Field::new(2);
            let omega = field.root_of_unity(3);
            (field, 1, omega)
        } else {
            let s = 2 * multiplicative_order(4, big_modulus as u64);
            let field = F2Field::new(s);
            let xi = field.root_of_unity(big_modulus as u64);
            let omega = if kappa == Gf4::One {
                field.root_of_unity(3)
            } else {
                field.pow(xi, n as u64)
            };
            (field, xi, omega)
        };
        let mut symbol = HashMap::new();
        symbol.insert(0u64, Gf4::Zero);
        symbol.insert(1u64, Gf4::One);
        symbol.insert(omega, Gf4::Omega);
        symbol.insert(field.mul(omega, omega), Gf4::OmegaBar);
        let cosets = cyclotomic_cosets(big_modulus, 4, residues);
        let factors: Vec<Gf4Poly> = cosets
            .iter()
            .map(|coset| {
                let mut coeffs: Vec<u64> = vec![1];
                for &t in &coset.members {
                    let root = field.pow(xi, t as u64);
                    let mut next = vec![0u64; coeffs.len() + 1];
                    for (i, &cf) in coeffs.iter().enumerate() {
                        next[i + 1] ^= cf;
                        next[i] ^= field.mul(cf, root);
                    }
                    coeffs = next;
                }
                let mapped: Vec<Gf4> = coeffs
                    .iter()
                    .map(|cf| {
                        *symbol
                            .get(cf)
                            .expect("factor coefficient escaped the quartic subfield")
                    })
                    .collect();
                Gf4Poly::from_coeffs(mapped)
            })
            .collect();
        let product = factors
            .iter()
            .fold(Gf4Poly::one(), |acc, f| acc.mul(f));
        assert_eq!(
            product,
            Gf4Poly::x_n_minus_kappa(n, kappa),
            "factorization must multiply back"
        );
        let index: HashMap<&Gf4Poly, usize> =
            factors.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let partner: Vec<usize> = factors
            .iter()
            .map(|f| {
                *index
                    .get(&f.conj_reciprocal_monic())
                    .expect("conjugate reciprocal of a factor must be a factor")
            })
            .collect();
        Ok(Factored {
            kappa,
            big_modulus,
            cosets,
            factors,
            partner,
        })
    }

    /// The factor index whose roots include the `u`-th point of the root
    /// progression: exponent `u` itself when `kappa = 1`, else `c + 3u`
    /// with `c` fixed by `kappa`.
    fn coset_of_progression_point(&self, u: usize) -> usize {
        let t = match self.kappa {
            Gf4::One => u % self.big_modulus,
            Gf4::Omega => (1 + 3 * u) % self.big_modulus,
            Gf4::OmegaBar => (2 + 3 * u) % self.big_modulus,
            Gf4::Zero => unreachable!(),
        };
        self.cosets
            .iter()
            .position(|c| c.members.contains(&t))
            .expect("progression point lies in some orbit")
    }
}

/// Factors `x^n - kappa` over GF(4) for odd `n` and groups the irreducible
/// factors by the conjugate-reciprocal pairing: those fixed by it and
/// those swapped in pairs.  The product of all factors is checked to give
/// back `x^n - kappa` exactly.
pub fn factor_xn_minus_kappa(n: usize, kappa: Gf4) -> Result<DaggerFactors, Error> {
    let f = Factored::new(n, kappa)?;
    let mut self_paired = Vec::new();
    let mut swapped_pairs = Vec::new();
    for i in 0..f.factors.len() {
        let p = f.partner[i];
        if p == i {
            self_paired.push(f.factors[i].clone());
        } else if i < p {
            swapped_pairs.push((f.factors[i].clone(), f.factors[p].clone()));
        }
    }
    Ok(DaggerFactors {
        self_paired,
        swapped_pairs,
    })
}

/// One constacyclic step: multiply by `x` modulo `x^n - kappa`.
fn cc_shift(coords: &mut Vec<Gf4>, kappa: Gf4) {
    let last = coords.pop().expect("shift needs at least one coordinate");
    coords.insert(0, last * kappa);
}

/// The GF(4)-linear code spanned by the shifts of `g` in
/// GF(4)[x]/(x^n - kappa).  Requires `g` to divide `x^n - kappa`; the full
/// modulus gives the zero code.
pub fn constacyclic_code(g: &Gf4Poly, n: usize, kappa: Gf4) -> Result<AdditiveCode, Error> {
    if kappa == Gf4::Zero {
        return Err(Error::Precondition("the shift constant must be nonzero"));
    }
    if !g.divides(&Gf4Poly::x_n_minus_kappa(n, kappa)) {
        return Err(Error::Precondition(
            "the generator must divide x^n - kappa",
        ));
    }
    let dim = n - g.degree().expect("a divisor is nonzero");
    let mut coords: Vec<Gf4> = (0..n).map(|j| g.coeff(j)).collect();
    let mut gens = Vec::with_capacity(2 * dim);
    for _ in 0..dim {
        let v = Gf4Vector::from_coords(&coords);
        gens.push(v.scale(Gf4::Omega));
        gens.push(v);
        cc_shift(&mut coords, kappa);
    }
    Ok(AdditiveCode::from_generators(n, gens))
}

/// Whether the constacyclic code generated by `g` is self-orthogonal:
/// `g * dagger(g)` must vanish modulo `x^n - kappa`.  Requires `g` to
/// divide `x^n - kappa`.
pub fn is_cc_self_orthogonal(g: &Gf4Poly, n: usize, kappa: Gf4) -> Result<bool, Error> {
    if kappa == Gf4::Zero {
        return Err(Error::Precondition("the shift constant must be nonzero"));
    }
    let modulus = Gf4Poly::x_n_minus_kappa(n, kappa);
    if !g.divides(&modulus) {
        return Err(Error::Precondition(
            "the generator must divide x^n - kappa",
        ));
    }
    if g.degree() == Some(n) {
        return Ok(true); // The zero code is self-orthogonal.
    }
    let twisted = dagger(g, n, kappa)?;
    Ok(g.mul(&twisted).rem(&modulus).is_zero())
}

/// A generator found by [`bch_search`], with the self-orthogonal stabilizer
/// code it induces.
#[derive(Clone, Debug)]
pub struct BchResult {
    /// The product of the chosen irreducible factors.
    pub generator: Gf4Poly,
    /// The dual of the constacyclic code generated by `generator`; this is
    /// the self-orthogonal code whose quantum parameters carry the design
    /// guarantee.
    pub stabilizer: AdditiveCode,
    /// The logical dimension `n - 2 * deg(generator)`.
    pub k: usize,
    /// The designed distance the zero set guarantees.
    pub design_distance: usize,
    /// Representatives of the root-exponent orbits chosen as zeros.
    pub coset_representatives: Vec<usize>,
}

/// Searches the factors of `x^n - kappa` (odd `n`) for the cheapest zero
/// sets covering an arithmetic progression of `target_d - 1` root
/// exponents with step coprime to `n`, which guarantees minimum distance
/// at least `target_d` while keeping the dual inside the code.  Returns
/// every selection tied for the best cost — fewest factors, then smallest
/// total degree, then lexicographically earliest representatives — or an
/// error when no valid selection exists.
pub fn bch_search(n: usize, kappa: Gf4, target_d: usize) -> Result<Vec<BchResult>, Error> {
    if target_d < 2 {
        return Err(Error::Precondition(
            "the designed distance must be at least 2",
        ));
    }
    let f = Factored::new(n, kappa)?;
    if target_d - 1 > n {
        return Err(Error::Precondition(
            "no zero-set selection reaches the requested designed distance",
        ));
    }
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    let mut chosen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for step in 1..=n.max(1) {
        if gcd(step, n) != 1 {
            continue;
        }
        for start in 0..n {
            let mut hit: BTreeSet<usize> = BTreeSet::new();
            for i in 0..target_d - 1 {
                hit.insert(f.coset_of_progression_point((start + i * step) % n));
            }
            // The dual stays inside the code only when no zero orbit meets
            // its own conjugate-reciprocal image.
            let valid = hit.iter().all(|&i| {
                f.partner[i] != i && !hit.contains(&f.partner[i])
            });
            if !valid {
                continue;
            }
            let count = hit.len();
            let degree: usize = hit.iter().map(|&i| f.cosets[i].members.len()).sum();
            let reps: Vec<usize> = hit.iter().map(|&i| f.cosets[i].representative).collect();
            let score = (count, degree, reps);
            let selection: Vec<usize> = hit.into_iter().collect();
            match &best {
                Some(b) if *b < score => {}
                Some(b) if *b == score => {
                    chosen.insert(selection);
                }
                _ => {
                    best = Some(score);
                    chosen.clear();
                    chosen.insert(selection);
                }
            }
        }
    }
    if chosen.is_empty() {
        return Err(Error::Precondition(
            "no zero-set selection reaches the requested designed distance",
        ));
    }
    // Among tied scores keep every distinct selection, ordered by their
    // representatives.
    let mut out = Vec::new();
    for selection in chosen {
        let generator = selection
            .iter()
            .fold(Gf4Poly::one(), |acc, &i| acc.mul(&f.factors[i]));
        let code = constacyclic_code(&generator, n, kappa)?;
        let stabilizer = code.dual();
        debug_assert!(stabilizer.is_self_orthogonal());
        let deg = generator.degree().unwrap();
        out.push(BchResult {
            coset_representatives: selection
                .iter()
                .map(|&i| f.cosets[i].representative)
                .collect(),
            generator,
            stabilizer,
            k: n - 2 * deg,
            design_distance: target_d,
        });
    }
    Ok(out)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// One plain cyclic step on coordinates.
fn cyclic_rotate(v: &Gf4Vector) -> Gf4Vector {
    let n = v.len();
    let perm: Vec<usize> = (0..n).map(|j| (j + n - 1) % n).collect();
    v.permute(&perm)
}

/// The additive code generated by the given vectors together with all
/// their cyclic shifts.
pub fn cyclic_span(generators: &[Gf4Vector]) -> Result<AdditiveCode, Error> {
    let n = match generators.first() {
        Some(g) => g.len(),
        None => return Err(Error::Precondition("at least one generator is needed")),
    };
    if generators.iter().any(|g| g.len() != n) {
        return Err(Error::Precondition("generators must share one length"));
    }
    let mut gens = Vec::with_capacity(generators.len() * n);
    for g in generators {
        let mut v = g.clone();
        for _ in 0..n {
            gens.push(v.clone());
            v = cyclic_rotate(&v);
        }
    }
    Ok(AdditiveCode::from_generators(n, gens))
}

/// The vector of `w*p(x) + q(x)` read off coefficientwise.
fn two_poly_vector(p: F2Poly, q: F2Poly, n: usize) -> Gf4Vector {
    let coords: Vec<Gf4> = (0..n)
        .map(|j| {
            let pj = p.coeff(j);
            let qj = q.coeff(j);
            Gf4::from_parts(pj ^ qj, qj)
        })
        .collect();
    Gf4Vector::from_coords(&coords)
}

/// Checks the representation preconditions shared by [`additive_cyclic`]
/// and [`ac_self_orthogonal`] and returns the reduced residues of
/// `(p, q, r)` together with their divisor degrees.
fn check_cyclic_triple(
    p: F2Poly,
    q: F2Poly,
    r: F2Poly,
    n: usize,
) -> Result<(F2Poly, F2Poly, F2Poly, usize, usize), Error> {
    if n == 0 || n > 63 {
        return Err(Error::LengthTooLarge { n, limit: 63 });
    }
    let xn = F2Poly::x_n_minus_1(n);
    if !p.divides(xn) {
        return Err(Error::Precondition("p must divide x^n - 1"));
    }
    if !r.divides(xn) {
        return Err(Error::Precondition("r must divide x^n - 1"));
    }
    let q_red = q.rem(xn);
    let hp = xn.divmod(p).0;
    if !r.divides(q_red.mul(hp)) {
        return Err(Error::Precondition(
            "r must divide q(x) * (x^n - 1) / p(x)",
        ));
    }
    Ok((
        p.rem(xn),
        q_red,
        r.rem(xn),
        p.degree().unwrap(),
        r.degree().unwrap(),
    ))
}

/// The additive cyclic code spanned by the shifts of `w*p(x) + q(x)` and of
/// the binary row `r(x)`.  Requires `p` and `r` to divide `x^n - 1` and `r`
/// to divide `q (x^n - 1) / p`, which pins the size at
/// `2^(2n - deg p - deg r)`; the degree-`n` divisor `x^n - 1` itself is
/// allowed for either polynomial and contributes nothing.
pub fn additive_cyclic(p: F2Poly, q: F2Poly, r: F2Poly, n: usize) -> Result<AdditiveCode, Error> {
    let (p_red, q_red, r_red, dp, dr) = check_cyclic_triple(p, q, r, n)?;
    let mut gens = Vec::new();
    if !(p_red.is_zero() && q_red.is_zero()) {
        let mut v = two_poly_vector(p_red, q_red, n);
        for _ in 0..n {
            gens.push(v.clone());
            v = cyclic_rotate(&v);
        }
    }
    if !r_red.is_zero() {
        let mut v = two_poly_vector(F2Poly::zero(), r_red, n);
        for _ in 0..n {
            gens.push(v.clone());
            v = cyclic_rotate(&v);
        }
    }
    let code = AdditiveCode::from_generators(n, gens);
    assert_eq!(
        code.rank(),
        2 * n - dp - dr,
        "the two-polynomial representation fixes the size"
    );
    Ok(code)
}

/// Whether the additive cyclic code of [`additive_cyclic`] is
/// self-orthogonal, decided by three binary congruences modulo `x^n - 1`:
/// `p(x) r(x^(n-1))` and `p(x^(n-1)) r(x)` must vanish and
/// `p(x) q(x^(n-1))` must agree with `p(x^(n-1)) q(x)`.
pub fn ac_self_orthogonal(p: F2Poly, q: F2Poly, r: F2Poly, n: usize) -> Result<bool, Error> {
    let (p_red, q_red, r_red, _, _) = check_cyclic_triple(p, q, r, n)?;
    let xn = F2Poly::x_n_minus_1(n);
    let p_rev = p_red.reverse_mod(n);
    let q_rev = q_red.reverse_mod(n);
    let r_rev = r_red.reverse_mod(n);
    Ok(p_red.mul(r_rev).rem(xn).is_zero()
        && p_rev.mul(r_red).rem(xn).is_zero()
        && p_red.mul(q_rev).rem(xn) == p_rev.mul(q_red).rem(xn))
}

/// Recovers the canonical `(p, q, r)` triple of a shift-closed additive
/// code: `p` generates the binary image under the coordinate trace, `r`
/// generates the binary subcode, and `q`, reduced modulo `r`, completes
/// the row `w*p + q`.  Degenerate images are reported as the degree-`n`
/// divisor `x^n - 1`.  Errors when the code is not closed under the cyclic
/// shift.
pub fn to_cyclic_form(c: &AdditiveCode) -> Result<(F2Poly, F2Poly, F2Poly), Error> {
    let n = c.n();
    if n == 0 || n > 63 {
        return Err(Error::LengthTooLarge { n, limit: 63 });
    }
    let gens = c.generators();
    for g in &gens {
        if !c.contains(&cyclic_rotate(g)) {
            return Err(Error::Precondition(
                "the code is not closed under the cyclic shift",
            ));
        }
    }
    let xn = F2Poly::x_n_minus_1(n);
    let trace_bits = |g: &Gf4Vector| -> u128 {
        (0..n)
            .filter(|&j| g.get(j).trace())
            .fold(0u128, |acc, j| acc | 1 << j)
    };
    let plane_b_bits = |g: &Gf4Vector| -> u128 {
        (0..n)
            .filter(|&j| g.get(j).b_part())
            .fold(0u128, |acc, j| acc | 1 << j)
    };
    // p: the greatest common divisor of the trace rows with x^n - 1.
    let p = gens
        .iter()
        .fold(xn, |acc, g| acc.gcd(F2Poly::from_bits(trace_bits(g))));
    // r: combinations of generators with vanishing trace are the binary
    // words; fold their polynomials into a gcd the same way.
    let mut trace_cols = BinMatrix::new(gens.len().max(1));
    for j in 0..n {
        let mut row = trace_cols.zero_row();
        for (i, g) in gens.iter().enumerate() {
            if g.get(j).trace() {
                set_bit(&mut row, i, true);
            }
        }
        trace_cols.push_row(row);
    }
    let r = trace_cols.kernel_basis().iter().fold(xn, |acc, combo| {
        let mut word = Gf4Vector::zero(n);
        for (i, g) in gens.iter().enumerate() {
            if get_bit(combo, i) {
                word.add_assign(g);
            }
        }
        acc.gcd(F2Poly::from_bits(plane_b_bits(&word)))
    });
    // q: the second plane of any codeword whose trace row equals p, made
    // canonical by reduction modulo r.
    let q = if p == xn {
        F2Poly::zero()
    } else {
        let mut trace_rows = BinMatrix::new(n);
        for g in &gens {
            let mut row = trace_rows.zero_row();
            let bits = trace_bits(g);
            for j in 0..n {
                if (bits >> j) & 1 == 1 {
                    set_bit(&mut row, j, true);
                }
            }
            trace_rows.push_row(row);
        }
        let mut target = vec![0u64; crate::f2::words_for(n)];
        for j in 0..n {
            if p.coeff(j) {
                set_bit(&mut target, j, true);
            }
        }
        let combo = trace_rows
            .solve_combination(&target)
            .expect("the trace image contains its own generator");
        let mut word = Gf4Vector::zero(n);
        for (i, g) in gens.iter().enumerate() {
            if get_bit(&combo, i) {
                word.add_assign(g);
            }
        }
        let raw = F2Poly::from_bits(plane_b_bits(&word));
        if r == xn {
            raw
        } else {
            raw.rem(r)
        }
    };
    Ok((p, q, r))
}

/// True when every nonzero codeword weighs at least `bound`, walking the
/// codewords in Gray order and stopping at the first light one.
fn min_weight_at_least(code: &AdditiveCode, bound: usize) -> bool {
    let gens = code.generators();
    let r = gens.len();
    let mut acc = Gf4Vector::zero(code.n());
    for i in 1u64..(1u64 << r) {
        acc.add_assign(&gens[i.trailing_zeros() as usize]);
        if acc.weight() < bound {
            return false;
        }
    }
    true
}

/// The weight counts of a code by Gray-order enumeration.
fn weight_counts(code: &AdditiveCode) -> Vec<u64> {
    let gens = code.generators();
    let mut counts = vec![0u64; code.n() + 1];
    counts[0] = 1;
    let mut acc = Gf4Vector::zero(code.n());
    for i in 1u64..(1u64 << gens.len()) {
        acc.add_assign(&gens[i.trailing_zeros() as usize]);
        counts[acc.weight()] += 1;
    }
    counts
}

/// True when the first weight where the dual distribution exceeds the
/// code's own lies at or beyond `bound`, producing dual coefficients one at
/// a time so that bad candidates exit after a row or two.  Requires a
/// strictly self-orthogonal code (rank below `n`).
fn excess_weight_at_least(
    n: usize,
    rank: usize,
    counts: &[u64],
    bound: usize,
    ktable: &[Vec<BigInt>],
) -> bool {
    let size = BigInt::from(1u64) << rank;
    for j in 1..=n {
        let mut dual: BigInt = Zero::zero();
        for (i, &a) in counts.iter().enumerate() {
            if a != 0 {
                dual += BigInt::from(a) * &ktable[j][i];
            }
        }
        let (quot, rem) = num_integer::Integer::div_rem(&dual, &size);
        assert!(rem.is_zero(), "dual coefficients must be integers");
        let own = BigInt::from(counts[j]);
        if quot > own {
            return j >= bound;
        }
        assert!(quot == own, "dual distribution cannot dip below the code");
    }
    unreachable!("a strictly self-orthogonal code differs from its dual somewhere")
}

/// Searches every self-orthogonal additive cyclic code of odd length
/// `n <= 30` whose rank falls in `rank_range`, keeping those whose quantum
/// distance reaches `min_d`.  The scan runs over divisor pairs `(p, r)` of
/// `x^n - 1` — with `p` constrained to the multiples of
/// `(x^n - 1) / gcd(r(x^(n-1)), x^n - 1)`, which the self-orthogonality
/// congruences force — and over the symmetric-polynomial parametrization
/// of the compatible `q` rows.  Results are deduplicated and sorted by
/// rank, then by their printed generators.
pub fn search_additive_cyclic(
    n: usize,
    min_d: usize,
    rank_range: RangeInclusive<usize>,
    budget: Budget,
) -> Result<Vec<AdditiveCode>, Error> {
    if n > 30 {
        return Err(Error::LengthTooLarge { n, limit: 30 });
    }
    if n == 0 || n % 2 == 0 {
        return Err(Error::Precondition("the length must be odd"));
    }
    let xn = F2Poly::x_n_minus_1(n);
    let divisors = F2Poly::subset_products(&factor_x_n_minus_1(n));
    // Symmetric polynomials are spanned by 1 and the folded monomial pairs.
    let sym_dim = (n + 1) / 2;
    let sym_basis: Vec<F2Poly> = std::iter::once(F2Poly::one())
        .chain((1..=(n - 1) / 2).map(|j| F2Poly::monomial(j).add(F2Poly::monomial(n - j))))
        .collect();
    let mut ktable: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        ktable.push((0..=n).map(|i| krawtchouk(n, j, i)).collect());
    }
    let mut seen: HashSet<AdditiveCode> = HashSet::new();
    let mut out: Vec<AdditiveCode> = Vec::new();
    for &r in &divisors {
        let r_red = r.rem(xn);
        let forced = if r_red.is_zero() {
            F2Poly::one()
        } else {
            xn.divmod(xn.gcd(r_red.reverse_mod(n))).0
        };
        let dr = r.degree().unwrap();
        for &p in &divisors {
            let dp = p.degree().unwrap();
            let rank = 2 * n - dp - dr;
            if !rank_range.contains(&rank) || rank > n {
                continue;
            }
            if !forced.divides(p) {
                continue;
            }
            budget.check(rank as u32)?;
            let hp = xn.divmod(p).0;
            let sigma_bits = (dr + dp).saturating_sub(n);
            for sym_mask in 0u64..(1 << sym_dim) {
                let mut pi = F2Poly::zero();
                for (b, &basis) in sym_basis.iter().enumerate() {
                    if (sym_mask >> b) & 1 == 1 {
                        pi = pi.add(basis);
                    }
                }
                if !p.divides(pi) {
                    continue;
                }
                let pi_over_p = pi.divmod(p).0;
                for sigma_mask in 0u64..(1 << sigma_bits) {
                    let sigma = F2Poly::from_bits(sigma_mask as u128);
                    let q = pi_over_p.add(sigma.mul(hp)).reverse_mod(n);
                    let code = match additive_cyclic(p, q, r, n) {
                        Ok(c) => c,
                        Err(_) => continue,
                    };
                    debug_assert!(code.is_self_orthogonal());
                    debug_assert!(ac_self_orthogonal(p, q, r, n).unwrap());
                    if !seen.insert(code.clone()) {
                        continue;
                    }
                    let keep = if rank == n {
                        min_weight_at_least(&code, min_d)
                    } else {
                        excess_weight_at_least(n, rank, &weight_counts(&code), min_d, &ktable)
                    };
                    if keep {
                        out.push(code);
                    }
                }
            }
        }
    }
    out.sort_by_key(|c| (c.rank(), render_generators(c)));
    Ok(out)
}

/// The shift that rotates coordinates one step and conjugates the symbol
/// wrapping around the end.
pub fn conjucyclic_shift(v: &Gf4Vector) -> Gf4Vector {
    let n = v.len();
    let mut coords: Vec<Gf4> = (0..n).map(|j| v.get((j + n - 1) % n)).collect();
    coords[0] = coords[0].conj();
    Gf4Vector::from_coords(&coords)
}

/// Whether the code is closed under the conjugating shift.
pub fn is_conjucyclic(c: &AdditiveCode) -> bool {
    c.generators()
        .iter()
        .all(|g| c.contains(&conjucyclic_shift(g)))
}

/// The binary image of a conjucyclic code: each codeword maps to its two
/// coordinate planes laid side by side, giving a binary cyclic code of
/// twice the length and equal size.  Errors when the code is not closed
/// under the conjugating shift.
pub fn conjucyclic_to_binary(c: &AdditiveCode) -> Result<BinCode, Error> {
    if !is_conjucyclic(c) {
        return Err(Error::Precondition(
            "the code is not closed under the conjugating shift",
        ));
    }
    let n = c.n();
    let gens = c.generators();
    let rows: Vec<Vec<u64>> = gens
        .iter()
        .map(|g| {
            let mut row = vec![0u64; crate::f2::words_for(2 * n)];
            for j in 0..n {
                let x = g.get(j);
                set_bit(&mut row, j, x.a_part());
                set_bit(&mut row, n + j, x.b_part());
            }
            row
        })
        .collect();
    let image = BinCode::from_rows(2 * n, rows);
    assert_eq!(image.dim(), c.rank(), "the plane map is injective");
    debug_assert!(binary_is_cyclic(&image));
    Ok(image)
}

/// Rebuilds the conjucyclic code whose plane image is the given binary
/// cyclic code of even length.
pub fn conjucyclic_from_binary(b: &BinCode) -> Result<AdditiveCode, Error> {
    if b.n() % 2 != 0 {
        return Err(Error::Precondition("the binary image has even length"));
    }
    if !binary_is_cyclic(b) {
        return Err(Error::Precondition("the binary image must be cyclic"));
    }
    let n = b.n() / 2;
    let gens: Vec<Gf4Vector> = b
        .basis()
        .iter()
        .map(|row| {
            let coords: Vec<Gf4> = (0..n)
                .map(|j| Gf4::from_parts(get_bit(row, j), get_bit(row, n + j)))
                .collect();
            Gf4Vector::from_coords(&coords)
        })
        .collect();
    let code = AdditiveCode::from_generators(n, gens);
    debug_assert!(is_conjucyclic(&code));
    Ok(code)
}

/// Whether a binary code is closed under the cyclic shift.
fn binary_is_cyclic(b: &BinCode) -> bool {
    let n = b.n();
    b.basis().iter().all(|row| {
        let mut rotated = vec![0u64; row.len()];
        for j in 0..n {
            if get_bit(row, j) {
                set_bit(&mut rotated, (j + 1) % n, true);
            }
        }
        b.contains(&rotated)
    })
}

/// The code generated by simultaneous rotations of the given seed blocks:
/// each generator concatenates every block rotated by the same amount, and
/// the scalar multiples by `w` are included so rotation-invariance holds
/// for the full span.  All blocks must share one length.
pub fn quasicyclic_code(blocks: &[Gf4Vector]) -> Result<AdditiveCode, Error> {
    let b = match blocks.first() {
        Some(v) if !v.is_empty() => v.len(),
        _ => {
            return Err(Error::Precondition(
                "at least one nonempty seed block is needed",
            ))
        }
    };
    if blocks.iter().any(|v| v.len() != b) {
        return Err(Error::Precondition("seed blocks must share one length"));
    }
    let n = b * blocks.len();
    let mut gens = Vec::with_capacity(2 * b);
    for s in 0..b {
        let perm: Vec<usize> = (0..b).map(|j| (j + b - s) % b).collect();
        let mut row = Gf4Vector::zero(0);
        for block in blocks {
            row = row.concat(&block.permute(&perm));
        }
        gens.push(row.scale(Gf4::Omega));
        gens.push(row);
    }
    Ok(AdditiveCode::from_generators(n, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::five_one_three;
    use crate::constructions::uuv;
    use rand::{Rng, SeedableRng};

    fn gv(s: &str) -> Gf4Vector {
        let coords: Vec<Gf4> = s.chars().map(|c| Gf4::from_char(c).unwrap()).collect();
        Gf4Vector::from_coords(&coords)
    }

    fn gp(s: &str) -> Gf4Poly {
        s.parse().unwrap()
    }

    fn bp(s: &str) -> F2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn dagger_twists_constants_and_inverts_itself() {
        assert_eq!(dagger(&Gf4Poly::one(), 5, Gf4::Omega).unwrap(), gp("w"));
        assert_eq!(
            dagger(&gp("01"), 5, Gf4::One).unwrap(),
            Gf4Poly::monomial(4, Gf4::One)
        );
        for (n, kappa) in [(5usize, Gf4::One), (21, Gf4::Omega), (9, Gf4::OmegaBar)] {
            let factors = factor_xn_minus_kappa(n, kappa).unwrap().all();
            // Check involution on products of proper factor subsets.
            for mask in 0..(1u32 << factors.len()) - 1 {
                let g = factors
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (mask >> i) & 1 == 1)
                    .fold(Gf4Poly::one(), |acc, (_, f)| acc.mul(f));
                let twice = dagger(&dagger(&g, n, kappa).unwrap(), n, kappa).unwrap();
                assert_eq!(twice, g);
            }
        }
        assert!(dagger(&Gf4Poly::monomial(5, Gf4::One), 5, Gf4::One).is_err());
        assert!(dagger(&Gf4Poly::one(), 5, Gf4::Zero).is_err());
    }

    #[test]
    fn short_cyclic_moduli_factor_into_known_pieces() {
        // Length 3: all three linear factors are their own partners.
        let f3 = factor_xn_minus_kappa(3, Gf4::One).unwrap();
        assert_eq!(f3.self_paired.len(), 3);
        assert!(f3.swapped_pairs.is_empty());
        let set3: HashSet<Gf4Poly> = f3.self_paired.into_iter().collect();
        let expected3: HashSet<Gf4Poly> =
            [gp("11"), gp("w1"), gp("W1")].into_iter().collect();
        assert_eq!(set3, expected3);

        // Length 5: x + 1 stands alone and the two quadratics swap.
        let f5 = factor_xn_minus_kappa(5, Gf4::One).unwrap();
        assert_eq!(f5.self_paired, vec![gp("11")]);
        assert_eq!(f5.swapped_pairs.len(), 1);
        let (a, b) = &f5.swapped_pairs[0];
        let pair: HashSet<Gf4Poly> = [a.clone(), b.clone()].into_iter().collect();
        assert_eq!(pair, [gp("1w1"), gp("1W1")].into_iter().collect());

        // Length 7: x + 1 plus one swapped pair of cubics.
        let f7 = factor_xn_minus_kappa(7, Gf4::One).unwrap();
        assert_eq!(f7.self_paired, vec![gp("11")]);
        assert_eq!(f7.swapped_pairs.len(), 1);
        assert_eq!(f7.swapped_pairs[0].0.degree(), Some(3));

        // The twisted modulus of length 21 contains a known cubic factor.
        let f21 = factor_xn_minus_kappa(21, Gf4::Omega).unwrap();
        let all: Vec<Gf4Poly> = f21.all();
        assert!(all.contains(&gp("w111")));
        let total: usize = all.iter().map(|f| f.degree().unwrap()).sum();
        assert_eq!(total, 21);

        assert!(factor_xn_minus_kappa(6, Gf4::One).is_err());
    }

    #[test]
    fn partner_classification_matches_the_conjugate_reciprocal() {
        for (n, kappa) in [
            (5usize, Gf4::One),
            (9, Gf4::One),
            (15, Gf4::One),
            (21, Gf4::Omega),
            (9, Gf4::OmegaBar),
        ] {
            let f = factor_xn_minus_kappa(n, kappa).unwrap();
            for p in &f.self_paired {
                assert_eq!(p.conj_reciprocal_monic(), *p);
            }
            for (a, b) in &f.swapped_pairs {
                assert_eq!(a.conj_reciprocal_monic(), *b);
                assert_eq!(b.conj_reciprocal_monic(), *a);
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn hamming_generator_is_not_self_orthogonal_but_its_dual_is() {
        // The quadratic generator spans a [5,3] code that fails
        // self-orthogonality; its dual is the perfect single-error code.
        let g = gp("1w1");
        assert!(!is_cc_self_orthogonal(&g, 5, Gf4::One).unwrap());
        let h = constacyclic_code(&g, 5, Gf4::One).unwrap();
        assert_eq!(h.rank(), 6);
        let g_dual = gp("1WW1");
        assert!(is_cc_self_orthogonal(&g_dual, 5, Gf4::One).unwrap());
        let c = constacyclic_code(&g_dual, 5, Gf4::One).unwrap();
        assert_eq!(c, h.dual());
        let params = c.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d, params.pure), (5, 1, 3, true));
    }

    #[test]
    fn self_orthogonality_criterion_agrees_with_inner_products() {
        for (n, kappa) in [(5usize, Gf4::One), (9, Gf4::One), (15, Gf4::One), (21, Gf4::Omega)] {
            let factors = factor_xn_minus_kappa(n, kappa).unwrap().all();
            let modulus = Gf4Poly::x_n_minus_kappa(n, kappa);
            for mask in 0..(1u32 << factors.len()) {
                let g = factors
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (mask >> i) & 1 == 1)
                    .fold(Gf4Poly::one(), |acc, (_, f)| acc.mul(f));
                let code = constacyclic_code(&g, n, kappa).unwrap();
                assert_eq!(
                    is_cc_self_orthogonal(&g, n, kappa).unwrap(),
                    code.is_self_orthogonal(),
                    "criterion mismatch at n={n} g={g}"
                );
                // The dual generator is the conjugate reciprocal of the
                // complementary factor product.
                if !g.is_zero() && g.degree().unwrap() < n {
                    let h = modulus.divmod(&g).0;
                    let dual_gen = h.conj_reciprocal_monic();
                    assert_eq!(
                        code.dual(),
                        constacyclic_code(&dual_gen, n, kappa).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn twisted_length_21_generator_yields_a_perfect_single_error_code() {
        let g = gp("w111");
        let h = constacyclic_code(&g, 21, Gf4::Omega).unwrap();
        assert_eq!(h.rank(), 36);
        let c = h.dual();
        assert_eq!(c.rank(), 6);
        assert!(c.is_linear());
        let params = c.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d, params.pure), (21, 15, 3, true));
        let dual_gen = Gf4Poly::x_n_minus_kappa(21, Gf4::Omega)
            .divmod(&g)
            .0
            .conj_reciprocal_monic();
        assert_eq!(c, constacyclic_code(&dual_gen, 21, Gf4::Omega).unwrap());
    }

    #[test]
    fn designed_distance_search_on_the_short_perfect_code() {
        // Two swapped quadratics could serve; the lexicographic tie-break
        // settles on the orbit of exponent 1.
        let results = bch_search(5, Gf4::One, 3).unwrap();
        assert_eq!(results.len(), 1);
        let r = &results[0];
        assert_eq!(r.generator.degree(), Some(2));
        assert_eq!(r.k, 1);
        assert_eq!(r.coset_representatives, vec![1]);
        let params = r.stabilizer.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d, params.pure), (5, 1, 3, true));
    }

    #[test]
    fn designed_distance_search_on_the_twisted_length_21() {
        let results = bch_search(21, Gf4::Omega, 3).unwrap();
        assert!(!results.is_empty());
        let first = &results[0];
        assert_eq!(first.generator.degree(), Some(3));
        assert_eq!(first.k, 15);
        let params = first.stabilizer.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d), (21, 15, 3));
    }

    #[test]
    fn designed_distance_family_at_length_85() {
        for (target, expect_k, check_d) in
            [(3usize, 77usize, true), (4, 69, true), (5, 61, true), (7, 53, false)]
        {
            let results = bch_search(85, Gf4::One, target).unwrap();
            assert!(!results.is_empty());
            let first = &results[0];
            assert_eq!(first.k, expect_k, "k mismatch at designed distance {target}");
            assert!(first.stabilizer.is_self_orthogonal());
            assert_eq!(first.stabilizer.rank(), 85 - expect_k);
            if check_d {
                let params = first.stabilizer.quantum_params(Budget::default()).unwrap();
                assert_eq!((params.n, params.k, params.d), (85, expect_k, target));
            } else {
                // Rank 32 enumeration exceeds the default budget; the
                // designed distance stands as a promise.
                assert!(matches!(
                    first.stabilizer.quantum_params(Budget::default()),
                    Err(Error::BudgetExceeded { .. })
                ));
            }
        }
    }

    #[test]
    fn two_polynomial_form_reproduces_the_dodecacode() {
        let p = F2Poly::one();
        let q = bp("010100100101");
        let r = F2Poly::x_n_minus_1(12);
        let c = additive_cyclic(p, q, r, 12).unwrap();
        assert_eq!(c.rank(), 12);
        assert!(c.is_self_dual());
        let params = c.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d), (12, 0, 6));
        assert!(ac_self_orthogonal(p, q, r, 12).unwrap());
        let (p2, q2, r2) = to_cyclic_form(&c).unwrap();
        assert_eq!((p2, q2, r2), (p, q, r));
        assert_eq!(additive_cyclic(p2, q2, r2, 12).unwrap(), c);
    }

    #[test]
    fn published_cyclic_rows_give_their_stated_parameters() {
        // Length 15, trace row 1: a self-dual code of distance 6.
        let c15 = additive_cyclic(
            F2Poly::one(),
            bp("011010100101011"),
            F2Poly::x_n_minus_1(15),
            15,
        )
        .unwrap();
        assert_eq!(c15, cyclic_span(&[gv("w11010100101011")]).unwrap());
        let params = c15.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d), (15, 0, 6));

        // Length 23, the symmetric row gives distance 8.
        let q23 = bp("00101111000000001111010");
        assert!(q23.is_reverse_symmetric(23));
        let c23 = additive_cyclic(F2Poly::one(), q23, F2Poly::x_n_minus_1(23), 23).unwrap();
        let params = c23.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d), (23, 0, 8));
    }

    #[test]
    fn published_two_generator_cyclic_span_reaches_distance_8() {
        let c = cyclic_span(&[
            gv("WW1w00111101011011000"),
            gv("101110010111001011100"),
        ])
        .unwrap();
        assert_eq!(c.rank(), 21);
        assert!(c.is_self_dual());
        let params = c.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d), (21, 0, 8));
        let (p, q, r) = to_cyclic_form(&c).unwrap();
        assert_eq!(additive_cyclic(p, q, r, 21).unwrap(), c);
    }

    #[test]
    fn published_padded_row_of_length_25_reaches_distance_8() {
        let c = cyclic_span(&[gv("111010w010111000000000000")]).unwrap();
        assert_eq!(c.rank(), 25);
        let params = c.quantum_params(Budget::log2(25)).unwrap();
        assert_eq!((params.n, params.k, params.d), (25, 0, 8));
        let (p, q, r) = to_cyclic_form(&c).unwrap();
        assert_eq!(p, F2Poly::one());
        assert_eq!(additive_cyclic(p, q, r, 25).unwrap(), c);
    }

    #[test]
    fn published_row_of_length_23_with_large_dimension() {
        let row = gv("WWwWw11W11w1w1011000000");
        let c = cyclic_span(&[row]).unwrap();
        assert_eq!(c.rank(), 11);
        let params = c.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d), (23, 12, 4));
        let (p, q, r) = to_cyclic_form(&c).unwrap();
        assert_eq!(p, bp("1111100100101"));
        assert_eq!(q, bp("11010111110101011000000"));
        assert_eq!(r, F2Poly::x_n_minus_1(23));
        assert_eq!(additive_cyclic(p, q, r, 23).unwrap(), c);
    }

    #[test]
    fn congruence_criterion_agrees_with_inner_products_exhaustively() {
        for n in [3usize, 5, 7, 9] {
            let divisors = F2Poly::subset_products(&factor_x_n_minus_1(n));
            for &p in &divisors {
                for &r in &divisors {
                    for q_bits in 0u32..1 << n {
                        let q = F2Poly::from_bits(q_bits as u128);
                        let Ok(code) = additive_cyclic(p, q, r, n) else {
                            continue;
                        };
                        assert_eq!(
                            ac_self_orthogonal(p, q, r, n).unwrap(),
                            code.is_self_orthogonal(),
                            "criterion mismatch at n={n} p={p} q={q} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn repeated_factor_lengths_are_handled_by_the_two_polynomial_form() {
        // x^4 - 1 = (x + 1)^4 has repeated factors; divisors are its powers.
        let mut divisors = vec![F2Poly::one()];
        for _ in 0..4 {
            let last = *divisors.last().unwrap();
            divisors.push(last.mul(bp("11")));
        }
        for &p in &divisors {
            for &r in &divisors {
                for q_bits in 0u32..16 {
                    let q = F2Poly::from_bits(q_bits as u128);
                    let Ok(code) = additive_cyclic(p, q, r, 4) else {
                        continue;
                    };
                    assert_eq!(
                        code.rank(),
                        8 - p.degree().unwrap() - r.degree().unwrap()
                    );
                    assert_eq!(
                        ac_self_orthogonal(p, q, r, 4).unwrap(),
                        code.is_self_orthogonal()
                    );
                }
            }
        }
    }

    #[test]
    fn canonical_form_round_trips_on_random_cyclic_codes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        let mut tried = 0;
        while tried < 60 {
            let n = *[5usize, 7, 9, 15].iter().nth(rng.gen_range(0..4)).unwrap();
            let divisors = F2Poly::subset_products(&factor_x_n_minus_1(n));
            let p = divisors[rng.gen_range(0..divisors.len())];
            let r = divisors[rng.gen_range(0..divisors.len())];
            // Construct a compatible q directly: r/gcd(r, h) must divide
            // it, where h is the cofactor of p.
            let h = F2Poly::x_n_minus_1(n).divmod(p).0;
            let base = r.divmod(r.gcd(h)).0;
            let q = base
                .mul(F2Poly::from_bits(rng.gen::<u32>() as u128))
                .rem(F2Poly::x_n_minus_1(n));
            let Ok(code) = additive_cyclic(p, q, r, n) else {
                continue;
            };
            tried += 1;
            let (p2, q2, r2) = to_cyclic_form(&code).unwrap();
            assert_eq!(p2, p, "trace image generator");
            assert_eq!(r2, r, "binary subcode generator");
            let q_expected = if r == F2Poly::x_n_minus_1(n) {
                q
            } else {
                q.rem(r)
            };
            assert_eq!(q2, q_expected, "reduced second plane");
            assert_eq!(additive_cyclic(p2, q2, r2, n).unwrap(), code);
        }
    }

    #[test]
    fn canonical_form_handles_shift_closure_and_its_absence() {
        // The perfect single-error code is itself cyclic — its generators
        // are shifts of one row — so it round-trips through the form.
        let five = five_one_three();
        let (p, q, r) = to_cyclic_form(&five).unwrap();
        assert_eq!(additive_cyclic(p, q, r, 5).unwrap(), five);
        // A lone weight-1 row is not shift-closed.
        assert!(matches!(
            to_cyclic_form(&AdditiveCode::from_strs(&["1000"])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn cyclic_search_recovers_the_published_extremal_codes() {
        // Length 15: a self-dual distance-6 code exists and is found.
        let found = search_additive_cyclic(15, 6, 15..=15, Budget::default()).unwrap();
        assert!(!found.is_empty());
        let known = additive_cyclic(
            F2Poly::one(),
            bp("011010100101011"),
            F2Poly::x_n_minus_1(15),
            15,
        )
        .unwrap();
        assert!(found.contains(&known));
        for c in &found {
            assert!(c.is_self_dual());
            assert!(c.min_weight(Budget::default()).unwrap().unwrap() >= 6);
        }

        // Length 23, full rank: the symmetric row of distance 8 is found.
        let found = search_additive_cyclic(23, 8, 23..=23, Budget::default()).unwrap();
        assert!(!found.is_empty());
        let known = additive_cyclic(
            F2Poly::one(),
            bp("00101111000000001111010"),
            F2Poly::x_n_minus_1(23),
            23,
        )
        .unwrap();
        assert!(found.contains(&known));

        // Length 23, rank 11: the large-dimension distance-4 code is found.
        let found = search_additive_cyclic(23, 4, 11..=11, Budget::default()).unwrap();
        let known = cyclic_span(&[gv("WWwWw11W11w1w1011000000")]).unwrap();
        assert!(found.contains(&known));
        let params = known.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d), (23, 12, 4));

        assert!(matches!(
            search_additive_cyclic(24, 4, 1..=24, Budget::default()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            search_additive_cyclic(31, 4, 1..=31, Budget::default()),
            Err(Error::LengthTooLarge { .. })
        ));
    }

    #[test]
    fn conjucyclic_codes_round_trip_through_binary_cyclic_images() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(48);
        for _ in 0..40 {
            let n = rng.gen_range(2..9usize);
            let seed = Gf4Vector::from_coords(
                &(0..n)
                    .map(|_| Gf4::from_bits(rng.gen_range(0..4u8)))
                    .collect::<Vec<_>>(),
            );
            // Close the seed's orbit under the conjugating shift.
            let mut orbit = Vec::new();
            let mut v = seed.clone();
            for _ in 0..2 * n {
                orbit.push(v.clone());
                v = conjucyclic_shift(&v);
            }
            assert_eq!(v, seed, "the conjugating shift has order dividing 2n");
            let c = AdditiveCode::from_generators(n, orbit);
            assert!(is_conjucyclic(&c));
            let image = conjucyclic_to_binary(&c).unwrap();
            assert_eq!(image.n(), 2 * n);
            assert_eq!(image.dim(), c.rank());
            let back = conjucyclic_from_binary(&image).unwrap();
            assert_eq!(back, c);
            // Self-orthogonality transfers across the plane map.
            let binary_so = image.dual().contains_code(&image);
            assert_eq!(c.is_self_orthogonal(), binary_so);
        }
        assert!(conjucyclic_to_binary(&five_one_three()).is_err());
    }

    #[test]
    fn quasicyclic_rows_from_published_tables() {
        let cases: &[(&[&str], (usize, usize, usize))] = &[
            (&["1000000", "W1Ww00w"], (14, 0, 6)),
            (&["1011100", "1Www10W"], (14, 8, 3)),
            (&["10000", "11W00", "11ww0"], (15, 5, 4)),
            (&["110000", "101W00", "11w1w0"], (18, 6, 5)),
            (&["10000", "1W100", "1111w", "11WwW"], (20, 10, 4)),
            (&["10000", "1w1w0", "0101W", "1wWw1", "10ww0"], (25, 15, 4)),
            (&["wwW1000", "W0W1000", "1WW1wW0", "WwWww00"], (28, 14, 5)),
            (
                &["11100", "10w00", "11Ww0", "1w1wW", "10w10", "1w100"],
                (30, 20, 4),
            ),
            (
                &["001ww", "011w1", "0010W", "001w1", "00101", "1w1wW", "111Ww", "01w1W"],
                (40, 30, 4),
            ),
        ];
        for (blocks, (n, k, d)) in cases {
            let seeds: Vec<Gf4Vector> = blocks.iter().map(|s| gv(s)).collect();
            let c = quasicyclic_code(&seeds).unwrap();
            assert!(c.is_self_orthogonal(), "row for n={n} must be self-orthogonal");
            let params = c.quantum_params(Budget::default()).unwrap();
            assert_eq!(
                (params.n, params.k, params.d),
                (*n, *k, *d),
                "parameters for the length-{n} row"
            );
        }
        let zero = quasicyclic_code(&[Gf4Vector::zero(4)]).unwrap();
        assert_eq!(zero, AdditiveCode::zero(4));
        assert!(quasicyclic_code(&[]).is_err());
        assert!(quasicyclic_code(&[gv("10"), gv("100")]).is_err());
    }

    #[test]
    fn nested_quasicyclic_rows_combine_to_a_longer_code() {
        let small = quasicyclic_code(&[gv("1011100"), gv("1Www10W")]).unwrap();
        let large = quasicyclic_code(&[gv("1000000"), gv("W1Ww00w")]).unwrap();
        assert!(large.contains_code(&small));
        let combined = uuv(&small, &large, Budget::default()).unwrap();
        let params = combined.quantum_params(Budget::default()).unwrap();
        assert_eq!((params.n, params.k, params.d), (28, 8, 6));
    }
}
