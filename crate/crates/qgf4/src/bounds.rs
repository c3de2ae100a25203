//! Upper bounds on quantum code parameters, computed in exact arithmetic.
//!
//! The quick tests are counting bounds: [`sphere_packing_ok`] checks that
//! the error spheres of a nondegenerate distance-(2t+1) code fit inside
//! the state space, and [`singleton_ok`] checks the rate/distance
//! trade-offs `k ≤ n − 2d + 2` (for pure codes) and `n ≥ 4⌊(d−1)/2⌋ + k`
//! (for all codes).
//!
//! The sharpest tool is [`lp_feasible`]. An `[[n, k, d]]` code has an
//! associated additive code of size `2^{n−k}` that is self-orthogonal
//! under the trace inner product, and its weight distribution
//! `A_0, …, A_n` must satisfy a family of exact linear constraints:
//! nonnegativity, the known total, agreement with the dual distribution
//! (computed through Krawtchouk sums) below the distance and domination
//! by it at the distance and beyond, and a parity split — the
//! even-weight words form a subcode of index 1 or 2, and in the index-2
//! case the dual of that subcode dominates the transform row by row.
//! [`LpProblem`] instantiates these constraints over [`Rational`] for one
//! choice of the parity branch ([`EvenSplit`]); [`lp_feasible`] tries
//! both branches and reports [`Feasibility`]. The solver is a dense
//! phase-1 simplex over exact rationals with Bland's anti-cycling rule,
//! so every answer is a decision, not an estimate: feasible outcomes
//! carry a distribution satisfying every constraint, and infeasible
//! outcomes carry a multiplier vector that can be replayed against the
//! constraint matrix by [`LpProblem::certifies_infeasible`] without
//! trusting the solver.
//!
//! For self-dual codes the module offers structure results:
//! [`gleason_decompose`] writes a weight enumerator in the two-polynomial
//! basis available to self-dual (or even self-dual) codes and fails
//! exactly when no such expression exists, [`selfdual_distance_bound`]
//! caps the minimal distance by length, and [`divisibility_constant`]
//! returns the gcd of the nonzero codeword weights, which is always 1
//! or 2. [`shadow_enumerator`] applies the signed dual transform whose
//! coefficient-wise nonnegativity is the parity constraint used in the
//! linear program. [`clifford_orders`] gives the sizes of the local
//! symmetry groups under which all of these invariants are preserved.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::code::AdditiveCode;
use crate::enumerator::{binomial, krawtchouk, WeightEnumerator};
use crate::{Budget, Error};

/// Exact rational scalar used throughout the bounds machinery: an
/// arbitrary-precision fraction kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn rat_big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// Does a nondegenerate distance-d code on n qubits encoding k of them
/// pass the sphere-packing count? With d = 2t+1, the `Σ_{j≤t} 3^j C(n,j)`
/// correctable error patterns must fit in the `2^{n−k}` syndromes.
///
/// The perfect codes are exactly the ones meeting this with equality.
pub fn sphere_packing_ok(n: usize, k: usize, d: usize) -> bool {
    assert!(k <= n, "cannot encode more qubits than the length");
    assert!(d % 2 == 1, "sphere packing reads d as 2t+1, so d must be odd");
    let t = (d - 1) / 2;
    let mut spheres = BigInt::zero();
    for j in 0..=t.min(n) {
        spheres += BigInt::from(3u32).pow(j as u32) * binomial(n, j);
    }
    spheres <= (BigInt::one() << (n - k))
}

/// Rate/distance trade-off checks. Every code must satisfy
/// `n ≥ 4⌊(d−1)/2⌋ + k`; a pure code must additionally satisfy
/// `k ≤ n − 2d + 2`, which is stronger when d is even.
pub fn singleton_ok(n: usize, k: usize, d: usize, pure: bool) -> bool {
    let (n, k, d) = (n as i64, k as i64, d as i64);
    let everywhere = n >= 4 * ((d - 1) / 2) + k;
    if pure {
        everywhere && k <= n - 2 * d + 2
    } else {
        everywhere
    }
}

/// The signed dual transform `2^k W((x+3y)/2, (y−x)/2)` of a weight
/// enumerator, returned as the exact coefficient of `x^{n−j} y^j` for
/// j = 0..=n.
///
/// For the distribution of the additive code attached to an `[[n,k,d]]`
/// quantum code this polynomial counts a genuine set of vectors, so all
/// its coefficients are nonnegative — the constraint enforced in the
/// index-2 parity branch of [`LpProblem`]. For a self-dual code (k = 0)
/// whose weights are all even it coincides with the distribution itself.
pub fn shadow_enumerator(w: &WeightEnumerator, k: usize) -> Vec<Rational> {
    let n = w.n();
    let denom = BigInt::one() << n;
    (0..=n)
        .map(|j| {
            let mut acc = BigInt::zero();
            for r in 0..=n {
                if w.coeff(r).is_zero() {
                    continue;
                }
                let term = BigInt::from(w.coeff(r).clone()) * krawtchouk(n, j, r);
                if r % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            Rational::new(acc << k, denom.clone())
        })
        .collect()
}

/// Which share of a self-orthogonal code its even-weight words form.
///
/// The even-weight words of a trace self-orthogonal code always form an
/// additive subcode of index 1 or 2, so a weight distribution must place
/// either all of the code or exactly half of it on even weights. The two
/// cases give different linear constraints and are tried separately.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EvenSplit {
    /// The even-weight words are half the code. The dual of that
    /// subcode then dominates the dual distribution row by row, which
    /// is the signed-transform nonnegativity constraint.
    Half,
    /// Every word has even weight; the domination constraint is
    /// implied and is omitted.
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Sense {
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
struct Row {
    /// Coefficients over the free variables, in `free` order.
    coeffs: Vec<Rational>,
    rhs: Rational,
    sense: Sense,
}

/// The exact feasibility system a weight distribution `A_0..A_n` of the
/// additive code attached to an `[[n, k, d]]` quantum code must satisfy,
/// instantiated for one parity branch.
///
/// `A_0 = 1` and `A_1 = 0` are folded in as constants (as are
/// `A_2..A_{d−1}` when `pure` is set); the remaining coefficients are the
/// variables. With `S` the code size — `2^{n−k}` by default, or any
/// positive rational supplied through [`LpProblem::with_size`] to model
/// a code space of non-power-of-two dimension `K` via `S = 2^n/K` — the
/// rows are:
///
/// * `Σ_j A_j = S`;
/// * `S·A_j = Σ_r K_j(r) A_r` for `j < d` and
///   `S·A_j ≤ Σ_r K_j(r) A_r` for `j ≥ d`, where `K_j(r)` is the
///   Krawtchouk value [`krawtchouk`]`(n, j, r)` — i.e. the distribution
///   agrees with its dual transform below the distance and is dominated
///   by it from the distance on;
/// * `Σ_{j even} A_j = S/2` or `S` according to the [`EvenSplit`];
/// * in the [`EvenSplit::Half`] branch only,
///   `Σ_r (−1)^r K_j(r) A_r ≥ 0` for every j — nonnegativity of the
///   signed transform of [`shadow_enumerator`].
#[derive(Clone, Debug)]
pub struct LpProblem {
    /// Length of the code.
    pub n: usize,
    /// Number of encoded qubits the parameters refer to.
    pub k: usize,
    /// Claimed minimal distance.
    pub d: usize,
    /// Whether `A_2..A_{d−1}` are forced to zero.
    pub pure: bool,
    /// Which parity case this instance encodes.
    pub branch: EvenSplit,
    size: Rational,
    fixed: Vec<Option<Rational>>,
    free: Vec<usize>,
    rows: Vec<Row>,
}

/// Outcome of one [`LpProblem::solve`] call.
#[derive(Clone, Debug)]
pub enum LpOutcome {
    /// A distribution `A_0..A_n` (length n+1) satisfying every
    /// constraint, including the folded-in constants.
    Feasible(Vec<Rational>),
    /// A multiplier per constraint row proving no nonnegative solution
    /// exists; validate it with [`LpProblem::certifies_infeasible`].
    Infeasible(Vec<Rational>),
}

impl LpProblem {
    /// The system for an additive `[[n, k, d]]` code, of size `2^{n−k}`.
    pub fn new(n: usize, k: usize, d: usize, pure: bool, branch: EvenSplit) -> LpProblem {
        assert!(k <= n, "cannot encode more qubits than the length");
        LpProblem::with_size(n, k, d, pure, branch, rat_big(BigInt::one() << (n - k)))
    }

    /// The same system with the code size replaced by an arbitrary
    /// positive rational. Passing `2^n / K` models a code space of
    /// dimension `K` that need not be a power of two; passing `2^{n−k}`
    /// reproduces [`LpProblem::new`] exactly.
    pub fn with_size(
        n: usize,
        k: usize,
        d: usize,
        pure: bool,
        branch: EvenSplit,
        size: Rational,
    ) -> LpProblem {
        assert!(n >= 1, "length must be positive");
        assert!((2..=n).contains(&d), "distance must lie in 2..=n");
        assert!(size.is_positive(), "code size must be positive");

        let mut fixed: Vec<Option<Rational>> = vec![None; n + 1];
        fixed[0] = Some(Rational::one());
        fixed[1] = Some(Rational::zero());
        if pure {
            for slot in fixed.iter_mut().take(d).skip(2) {
                *slot = Some(Rational::zero());
            }
        }
        let free: Vec<usize> = (0..=n).filter(|&j| fixed[j].is_none()).collect();

        // kt[j][r] = K_j(r), the dual-transform kernel.
        let kt: Vec<Vec<BigInt>> = (0..=n)
            .map(|j| (0..=n).map(|r| krawtchouk(n, j, r)).collect())
            .collect();

        let mut rows = Vec::new();
        let mut push = |full: Vec<Rational>, rhs0: Rational, sense: Sense| {
            let coeffs = free.iter().map(|&j| full[j].clone()).collect();
            let mut rhs = rhs0;
            for (j, slot) in fixed.iter().enumerate() {
                if let Some(v) = slot {
                    rhs -= &full[j] * v;
                }
            }
            rows.push(Row { coeffs, rhs, sense });
        };

        // Known total.
        push(vec![Rational::one(); n + 1], size.clone(), Sense::Eq);

        // Dual-transform agreement below d, domination from d on.
        for j in 0..=n {
            if j < d {
                let mut full: Vec<Rational> = kt[j].iter().map(|v| rat_big(-v.clone())).collect();
                full[j] += &size;
                push(full, Rational::zero(), Sense::Eq);
            } else {
                let mut full: Vec<Rational> = kt[j].iter().map(|v| rat_big(v.clone())).collect();
                full[j] -= &size;
                push(full, Rational::zero(), Sense::Ge);
            }
        }

        // Parity split of the even-weight subcode.
        let even_total = match branch {
            EvenSplit::Half => &size / rat_int(2),
            EvenSplit::All => size.clone(),
        };
        let parity: Vec<Rational> = (0..=n)
            .map(|r| if r % 2 == 0 { Rational::one() } else { Rational::zero() })
            .collect();
        push(parity, even_total, Sense::Eq);

        // In the index-2 case the signed transform must be nonnegative.
        if branch == EvenSplit::Half {
            for j in 0..=n {
                let full: Vec<Rational> = kt[j]
                    .iter()
                    .enumerate()
                    .map(|(r, v)| {
                        if r % 2 == 0 {
                            rat_big(v.clone())
                        } else {
                            rat_big(-v.clone())
                        }
                    })
                    .collect();
                push(full, Rational::zero(), Sense::Ge);
            }
        }

        LpProblem {
            n,
            k,
            d,
            pure,
            branch,
            size,
            fixed,
            free,
            rows,
        }
    }

    /// The code size constant `S` this instance was built with.
    pub fn size(&self) -> &Rational {
        &self.size
    }

    /// Indices j whose `A_j` are genuine variables (not folded-in
    /// constants), in increasing order.
    pub fn variable_indices(&self) -> &[usize] {
        &self.free
    }

    /// Decides feasibility exactly.
    ///
    /// The system is put in equality form (one slack per inequality),
    /// and a phase-1 simplex with artificial variables is run entirely
    /// over [`Rational`], entering and leaving by Bland's least-index
    /// rule so the iteration cannot cycle. A zero phase-1 optimum yields
    /// a feasible distribution; a positive one yields the multiplier
    /// vector read off the final objective row.
    pub fn solve(&self) -> LpOutcome {
        let nfree = self.free.len();
        let nge = self.rows.iter().filter(|r| r.sense == Sense::Ge).count();
        let ncols = nfree + nge;
        let m = self.rows.len();
        let rhs_col = ncols + m;

        // Tableau rows: [variables | slacks | artificials | rhs], each
        // row sign-normalized so the right-hand side is nonnegative,
        // then given a unit artificial column.
        let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
        let mut flipped = vec![false; m];
        let mut slack = 0;
        for (i, row) in self.rows.iter().enumerate() {
            let mut line = vec![Rational::zero(); rhs_col + 1];
            for (c, v) in row.coeffs.iter().enumerate() {
                line[c] = v.clone();
            }
            if row.sense == Sense::Ge {
                line[nfree + slack] = -Rational::one();
                slack += 1;
            }
            line[rhs_col] = row.rhs.clone();
            if line[rhs_col].is_negative() {
                for v in line.iter_mut() {
                    *v = -std::mem::take(v);
                }
                flipped[i] = true;
            }
            line[ncols + i] = Rational::one();
            t.push(line);
        }

        // Reduced objective row for minimizing the artificial total: the
        // artificial columns start basic, so their reduced costs are 0
        // and each original column's is the negated column sum.
        let mut obj = vec![Rational::zero(); rhs_col + 1];
        for line in &t {
            for (c, slot) in obj.iter_mut().enumerate() {
                if c < ncols || c == rhs_col {
                    *slot -= &line[c];
                }
            }
        }
        let mut basis: Vec<usize> = (0..m).map(|i| ncols + i).collect();

        loop {
            // Entering column: least index with a negative reduced cost.
            // Artificial columns never re-enter once they leave.
            let Some(enter) = (0..ncols).find(|&c| obj[c].is_negative()) else {
                break;
            };
            // Leaving row: least ratio, ties broken by least basis index.
            let mut leave: Option<usize> = None;
            for i in 0..m {
                if !t[i][enter].is_positive() {
                    continue;
                }
                let better = match leave {
                    None => true,
                    Some(l) => {
                        match (&t[i][rhs_col] * &t[l][enter]).cmp(&(&t[l][rhs_col] * &t[i][enter]))
                        {
                            std::cmp::Ordering::Less => true,
                            std::cmp::Ordering::Equal => basis[i] < basis[l],
                            std::cmp::Ordering::Greater => false,
                        }
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
            let r = leave.expect("the artificial total is bounded below, so a pivot row exists");

            let pivot = t[r][enter].clone();
            for v in t[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &pivot;
                }
            }
            for i in 0..m {
                if i != r && !t[i][enter].is_zero() {
                    let f = t[i][enter].clone();
                    let (row_i, row_r) = if i < r {
                        let (a, b) = t.split_at_mut(r);
                        (&mut a[i], &b[0])
                    } else {
                        let (a, b) = t.split_at_mut(i);
                        (&mut b[0], &a[r])
                    };
                    axpy_neg(row_i, row_r, &f);
                }
            }
            if !obj[enter].is_zero() {
                let f = obj[enter].clone();
                axpy_neg(&mut obj, &t[r], &f);
            }
            basis[r] = enter;
        }

        let optimum = -obj[rhs_col].clone();
        if optimum.is_zero() {
            let mut full: Vec<Rational> = (0..=self.n)
                .map(|j| self.fixed[j].clone().unwrap_or_else(Rational::zero))
                .collect();
            for (i, &b) in basis.iter().enumerate() {
                if b < nfree {
                    full[self.free[b]] = t[i][rhs_col].clone();
                }
            }
            debug_assert!(self.witness_satisfies(&full));
            LpOutcome::Feasible(full)
        } else {
            let mut y = Vec::with_capacity(m);
            for i in 0..m {
                let yi = Rational::one() - obj[ncols + i].clone();
                y.push(if flipped[i] { -yi } else { yi });
            }
            debug_assert!(self.certifies_infeasible(&y));
            LpOutcome::Infeasible(y)
        }
    }

    /// Does a full distribution `A_0..A_n` satisfy every constraint of
    /// this instance, including nonnegativity and the folded constants?
    pub fn witness_satisfies(&self, a: &[Rational]) -> bool {
        if a.len() != self.n + 1 {
            return false;
        }
        if a.iter().any(|v| v.is_negative()) {
            return false;
        }
        for (j, slot) in self.fixed.iter().enumerate() {
            if let Some(v) = slot {
                if &a[j] != v {
                    return false;
                }
            }
        }
        self.rows.iter().all(|row| {
            let lhs: Rational = row
                .coeffs
                .iter()
                .zip(&self.free)
                .map(|(c, &j)| c * &a[j])
                .sum();
            match row.sense {
                Sense::Eq => lhs == row.rhs,
                Sense::Ge => lhs >= row.rhs,
            }
        })
    }

    /// Replays a multiplier vector against the constraint matrix.
    ///
    /// In equality form the system is `Ax = b, x ≥ 0` over the variable
    /// and slack columns; `y` proves it empty exactly when `yᵀA ≤ 0`
    /// in every column while `yᵀb > 0`. This check uses only the
    /// problem data, not the solver.
    pub fn certifies_infeasible(&self, y: &[Rational]) -> bool {
        if y.len() != self.rows.len() {
            return false;
        }
        // Variable columns.
        for c in 0..self.free.len() {
            let mut dot = Rational::zero();
            for (row, yi) in self.rows.iter().zip(y) {
                if !row.coeffs[c].is_zero() {
                    dot += &row.coeffs[c] * yi;
                }
            }
            if dot.is_positive() {
                return false;
            }
        }
        // Each slack column has a single −1 entry, in its own row.
        for (row, yi) in self.rows.iter().zip(y) {
            if row.sense == Sense::Ge && yi.is_negative() {
                return false;
            }
        }
        let total: Rational = self.rows.iter().zip(y).map(|(row, yi)| &row.rhs * yi).sum();
        total.is_positive()
    }
}

/// `dst -= f · src`, skipping zero source entries.
fn axpy_neg(dst: &mut [Rational], src: &[Rational], f: &Rational) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= f * s;
        }
    }
}

/// Joint verdict of the two parity branches for one `(n, k, d)` cell.
#[derive(Clone, Debug)]
pub enum Feasibility {
    /// Some branch admits a distribution; the first branch found is
    /// reported together with its witness.
    Feasible {
        /// The parity branch the witness belongs to.
        branch: EvenSplit,
        /// A distribution `A_0..A_n` satisfying that branch.
        distribution: Vec<Rational>,
    },
    /// Neither branch admits a distribution, so no `[[n, k, d]]` code
    /// exists; one replayable certificate per branch.
    Infeasible {
        /// Certificates in branch order ([`EvenSplit::Half`] first).
        certificates: Vec<(EvenSplit, Vec<Rational>)>,
    },
}

impl Feasibility {
    /// Whether some branch was feasible.
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }
}

/// Can any `[[n, k, d]]` code exist, as far as the exact linear
/// constraints on its weight distribution can tell?
///
/// Both parity branches are tried; the parameters are excluded only
/// when each branch carries an independently checkable infeasibility
/// certificate. `pure` forces `A_2..A_{d−1}` to zero, the extra
/// constraint available for pure codes. `size_override` replaces the
/// additive code size `2^{n−k}` by an arbitrary positive rational: to
/// ask about a code space of dimension `K` that is not a power of two,
/// pass `2^n / K`.
///
/// An infeasible verdict here is a genuine nonexistence proof; a
/// feasible verdict only means the distribution constraints cannot rule
/// the parameters out.
pub fn lp_feasible(
    n: usize,
    k: usize,
    d: usize,
    pure: bool,
    size_override: Option<Rational>,
) -> Feasibility {
    let mut certificates = Vec::new();
    for branch in [EvenSplit::Half, EvenSplit::All] {
        let problem = match &size_override {
            None => LpProblem::new(n, k, d, pure, branch),
            Some(s) => LpProblem::with_size(n, k, d, pure, branch, s.clone()),
        };
        match problem.solve() {
            LpOutcome::Feasible(distribution) => {
                return Feasibility::Feasible {
                    branch,
                    distribution,
                }
            }
            LpOutcome::Infeasible(y) => certificates.push((branch, y)),
        }
    }
    Feasibility::Infeasible { certificates }
}

/// Writes a homogeneous degree-n enumerator in the basis available to
/// self-dual codes: powers of `(x+y)` and `(x²+3y²)` in general, or of
/// `(x²+3y²)` and `y²(x²−y²)²` when `even` is set.
///
/// Returns the coefficient of each basis product
/// `(x+y)^{n−2i} (x²+3y²)^i` (respectively
/// `(x²+3y²)^{(n−6i)/2} (y²(x²−y²)²)^i`) for i = 0, 1, …, or `None` if
/// no exact expression exists. Every (even) self-dual code's enumerator
/// decomposes this way, so `None` certifies that the input is not the
/// enumerator of such a code.
pub fn gleason_decompose(w: &WeightEnumerator, even: bool) -> Option<Vec<Rational>> {
    let n = w.n();
    let basis: Vec<Vec<BigInt>> = if even {
        if n % 2 != 0 {
            return None;
        }
        let h1 = vec![BigInt::from(1), BigInt::zero(), BigInt::from(3)];
        let h2: Vec<BigInt> = [0i64, 0, 1, 0, -2, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
        (0..=n / 6)
            .map(|i| poly_mul(&poly_pow(&h1, (n - 6 * i) / 2), &poly_pow(&h2, i)))
            .collect()
    } else {
        let b1 = vec![BigInt::one(), BigInt::one()];
        let b2 = vec![BigInt::from(1), BigInt::zero(), BigInt::from(3)];
        (0..=n / 2)
            .map(|i| poly_mul(&poly_pow(&b1, n - 2 * i), &poly_pow(&b2, i)))
            .collect()
    };
    let target: Vec<Rational> = (0..=n)
        .map(|j| rat_big(BigInt::from(w.coeff(j).clone())))
        .collect();
    solve_exact(&basis, &target)
}

/// Convolution of homogeneous coefficient vectors (index = power of y).
fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_pow(a: &[BigInt], e: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for _ in 0..e {
        out = poly_mul(&out, a);
    }
    out
}

/// Solves `Σ_i c_i · basis[i] = target` exactly; the basis vectors are
/// linearly independent, so the solution is unique when it exists.
fn solve_exact(basis: &[Vec<BigInt>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let cols = basis.len();
    // Augmented matrix [basisᵀ | target].
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut line: Vec<Rational> = basis
                .iter()
                .map(|b| rat_big(b.get(r).cloned().unwrap_or_else(BigInt::zero)))
                .collect();
            line.push(target[r].clone());
            line
        })
        .collect();

    let mut pivot_row_of_col = vec![None; cols];
    let mut next_row = 0;
    for c in 0..cols {
        let Some(p) = (next_row..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(next_row, p);
        let inv = m[next_row][c].clone();
        for v in m[next_row].iter_mut() {
            if !v.is_zero() {
                *v /= &inv;
            }
        }
        for r in 0..rows {
            if r != next_row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let (row_r, row_p) = if r < next_row {
                    let (a, b) = m.split_at_mut(next_row);
                    (&mut a[r], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&mut b[0], &a[next_row])
                };
                axpy_neg(row_r, row_p, &f);
            }
        }
        pivot_row_of_col[c] = Some(next_row);
        next_row += 1;
    }
    // Any leftover row with a nonzero right-hand side is a contradiction.
    if m.iter().skip(next_row).any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(
        (0..cols)
            .map(|c| match pivot_row_of_col[c] {
                Some(r) => m[r][cols].clone(),
                None => Rational::zero(),
            })
            .collect(),
    )
}

/// The largest minimal distance a self-dual code of length n can have:
/// `⌊n/2⌋ + 1` in general, `2⌊n/6⌋ + 2` when all weights are even.
pub fn selfdual_distance_bound(n: usize, even: bool) -> usize {
    assert!(n >= 1, "length must be positive");
    if even {
        2 * (n / 6) + 2
    } else {
        n / 2 + 1
    }
}

/// The gcd of the nonzero codeword weights of a self-dual code, which
/// is always 1 (odd-weight words occur) or 2 (all weights even).
pub fn divisibility_constant(c: &AdditiveCode, budget: Budget) -> Result<usize, Error> {
    if !c.is_self_dual() {
        return Err(Error::Precondition("self-dual code required"));
    }
    let w = c.weight_distribution(budget)?;
    let mut g = 0usize;
    for (j, count) in w.coeffs().iter().enumerate().skip(1) {
        if !count.is_zero() {
            g = num_integer::gcd(g, j);
        }
    }
    Ok(g.max(1))
}

/// Orders of the local symmetry groups on n qubits: the full group of
/// symplectic-type local operations together with phases,
/// `2^{n²+2n+3} Π_{j=1..n} (4^j − 1)`, and its index-respecting real
/// subgroup `2^{n²+n+2} (2^n − 1) Π_{j=1..n−1} (4^j − 1)`.
pub fn clifford_orders(n: usize) -> (BigUint, BigUint) {
    assert!(n >= 1, "at least one qubit is required");
    let mut product_all = BigUint::one();
    let mut product_short = BigUint::one();
    for j in 1..=n {
        let factor = (BigUint::one() << (2 * j)) - BigUint::one();
        if j < n {
            product_short *= &factor;
        }
        product_all *= factor;
    }
    let full = (BigUint::one() << (n * n + 2 * n + 3)) * product_all;
    let real = (BigUint::one() << (n * n + n + 2))
        * ((BigUint::one() << n) - BigUint::one())
        * product_short;
    (full, real)
}
