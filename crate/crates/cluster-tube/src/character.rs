//! The cluster map: indices in the split Grothendieck group of the reference
//! object `T = (1, n-1) + ... + (1, 1)`, dimension vectors of
//! `Hom(T[-1], -)`, the Grassmannian-term expansion of the character, and
//! the closed forms per region.
//!
//! Two independent routes compute every character:
//!
//! * [`x_from_definition`] expands `x^{ind(M)} * sum_e chi(Gr_e) x^{-iota(e)}`
//!   from an explicit per-region table of admissible dimension vectors `e`,
//!   their Euler characteristics and representative submodule objects;
//! * [`x_closed_form`] evaluates the per-region closed formulas directly.
//!
//! The two must agree on every rigid indecomposable; the verification and
//! acceptance suites check this exhaustively at small ranks.
//!
//! Conventions: the class `[T_n]` and the variable `x_n` both collapse to the
//! identity (`0` in the index group, `1` as a variable), and `X[1] = tau X`
//! on objects.

use crate::laurent::{LaurentPoly, Monomial};
use crate::tube::{hom_c_dim, region, Region, RigidSum, TubeError, TubeObject};
use std::collections::BTreeMap;
use std::fmt;

/// Element of the split Grothendieck group of `add T` as an integer vector;
/// coordinate `i` (1-based) is the coefficient of `[T_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexVector {
    coeffs: Vec<i64>,
}

impl IndexVector {
    pub fn zero(len: usize) -> Self {
        IndexVector {
            coeffs: vec![0; len],
        }
    }

    /// The class `[T_s]` for a subscript `s in 1..=n`; `s = n` is the zero
    /// class (quasi-length-0 convention).
    pub fn t_class(n: usize, s: usize) -> Self {
        assert!(
            (1..=n).contains(&s),
            "class subscript {s} out of range 1..={n}"
        );
        let mut coeffs = vec![0; n - 1];
        if s < n {
            coeffs[s - 1] = 1;
        }
        IndexVector { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        IndexVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        IndexVector {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// The monomial `x^v` as a Laurent polynomial in `n - 1` variables.
    pub fn to_monomial(&self) -> LaurentPoly {
        let exps: Vec<i32> = self.coeffs.iter().map(|&c| c as i32).collect();
        LaurentPoly::monomial(Monomial::new(exps), 1)
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Index of a rigid object with respect to `T`:
/// `[T_1] - [T_{n-a+1}] - [T_{2n-a-b}]` when `a + b >= n + 1`, and
/// `[T_{n-a-b+1}] - [T_{n-a+1}]` when `a + b <= n`. The zero object has
/// index 0.
pub fn index(x: &TubeObject) -> Result<IndexVector, TubeError> {
    let n = x.rank();
    if x.is_zero() {
        return Ok(IndexVector::zero(n - 1));
    }
    if !x.is_rigid() {
        return Err(TubeError::NotRigid {
            object: x.to_string(),
        });
    }
    let (a, b) = (x.socle(), x.quasi_length());
    let t = |s: usize| IndexVector::t_class(n, s);
    if a + b > n {
        Ok(t(1).sub(&t(n - a + 1)).sub(&t(2 * n - a - b)))
    } else {
        Ok(t(n - a - b + 1).sub(&t(n - a + 1)))
    }
}

/// Index extended additively over a direct sum.
pub fn index_of_sum(rank: usize, objs: &[TubeObject]) -> Result<IndexVector, TubeError> {
    let mut acc = IndexVector::zero(rank - 1);
    for x in objs {
        acc = acc.add(&index(x)?);
    }
    Ok(acc)
}

/// Dimension vector of `Hom(T[-1], X)`: coordinate `i` is
/// `dim Hom_C(tau^{-1} T_i, X)` with `T_i = (1, n - i)`.
pub fn dim_vector(x: &TubeObject) -> Result<Vec<usize>, TubeError> {
    let n = x.rank();
    if !x.is_rigid() {
        return Err(TubeError::NotRigid {
            object: x.to_string(),
        });
    }
    Ok((1..n)
        .map(|i| hom_c_dim(&TubeObject::new(n, 2, n - i), x))
        .collect())
}

/// One summand of the character sum: a dimension vector `e`, the Euler
/// characteristic of `Gr_e`, and `iota(e) = ind(Y) + ind(Y[1])` computed from
/// a representative `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassTerm {
    pub e: Vec<usize>,
    pub chi: u32,
    pub iota: IndexVector,
}

/// `iota` of a representative: `ind(Y) + ind(tau Y)` summed over summands.
fn iota_of(rank: usize, reps: &[TubeObject]) -> Result<IndexVector, TubeError> {
    let mut acc = IndexVector::zero(rank - 1);
    for y in reps {
        acc = acc.add(&index(y)?);
        acc = acc.add(&index(&y.tau())?);
    }
    Ok(acc)
}

/// Indicator band: `e_i = 1` for `lo <= i <= hi` (1-based), length `n - 1`.
fn band(n: usize, lo: usize, hi: usize) -> Vec<usize> {
    let mut e = vec![0usize; n - 1];
    if lo <= hi {
        debug_assert!(lo >= 1 && hi < n, "band [{lo},{hi}] escapes 1..={}", n - 1);
        for slot in &mut e[lo - 1..hi] {
            *slot = 1;
        }
    }
    e
}

fn add_vec(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

struct TermTable {
    rank: usize,
    terms: BTreeMap<Vec<usize>, GrassTerm>,
}

impl TermTable {
    fn new(rank: usize) -> Self {
        TermTable {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// Inserts a term for `e` computed from representative objects `reps`.
    /// A dimension vector may be listed by several representative families;
    /// they must agree on `chi` and on `iota` (the well-definedness of
    /// `iota(e)` across representatives).
    fn push(&mut self, e: Vec<usize>, chi: u32, reps: &[TubeObject]) -> Result<(), TubeError> {
        assert_ne!(e.first(), Some(&1), "inadmissible dimension vector {e:?}");
        let iota = iota_of(self.rank, reps)?;
        match self.terms.get(&e) {
            None => {
                self.terms.insert(e.clone(), GrassTerm { e, chi, iota });
            }
            Some(existing) => {
                assert_eq!(existing.chi, chi, "chi conflict at e = {e:?}");
                assert_eq!(
                    existing.iota, iota,
                    "iota not well-defined at e = {e:?} (representatives {reps:?})"
                );
            }
        }
        Ok(())
    }

    fn into_terms(self) -> Vec<GrassTerm> {
        self.terms.into_values().collect()
    }
}

/// The admissible Grassmannian terms of a rigid object, one per dimension
/// vector, from the per-region case tables. Dimension vectors with
/// `dim Hom(T_1[-1], Y) = 1` never occur (`e_1` is 0 or 2 throughout).
///
/// The zero object yields the single term `(0, 1, 0)`, matching `X_0 = 1`.
pub fn grass_terms(x: &TubeObject) -> Result<Vec<GrassTerm>, TubeError> {
    let n = x.rank();
    if !x.is_rigid() {
        return Err(TubeError::NotRigid {
            object: x.to_string(),
        });
    }
    let mut table = TermTable::new(n);
    if x.is_zero() || region(x) == Region::O {
        table.push(vec![0; n - 1], 1, &[])?;
        return Ok(table.into_terms());
    }
    let (a, b) = (x.socle(), x.quasi_length());
    let obj = |a: i64, b: usize| TubeObject::new(n, a, b);

    match region(x) {
        Region::O => unreachable!(),
        Region::I => {
            // submodules are the bottom slices (a, b'), 0 <= b' <= b; chi = 1
            for bp in 0..=b {
                if bp == 0 {
                    table.push(vec![0; n - 1], 1, &[])?;
                } else {
                    let e = band(n, n - a - bp + 2, n - a + 1);
                    table.push(e, 1, &[obj(a as i64, bp)])?;
                }
            }
        }
        Region::II => {
            let a1 = n - a + 1;
            if b == n - 1 {
                // doubled wing: every Hom(T_i[-1], X) is 2-dimensional on the band
                table.push(add_vec(&band(n, 1, a1), &band(n, 1, a1)), 1, &[*x])?;
                for bp in 1..=n - a {
                    let i = n - a - bp + 2;
                    let y = obj(a as i64, bp);
                    table.push(add_vec(&band(n, i, a1), &band(n, i, a1)), 1, &[y, y])?;
                    table.push(band(n, i, a1), 2, &[y])?;
                }
                for bp in 1..=n - a {
                    for bpp in 1..bp {
                        let i = n - a - bp + 2;
                        let j = n - a - bpp + 2;
                        table.push(
                            add_vec(&band(n, i, a1), &band(n, j, a1)),
                            2,
                            &[obj(a as i64, bp), obj(a as i64, bpp)],
                        )?;
                    }
                }
                table.push(vec![0; n - 1], 1, &[])?;
            } else {
                let b1 = 2 * n - a - b;
                let s = a as i64 + b as i64 - n as i64 + 1; // socle of the second wing
                table.push(add_vec(&band(n, 1, a1), &band(n, 1, b1)), 1, &[*x])?;
                for bp in 1..=n - a {
                    let i = n - a - bp + 2;
                    table.push(band(n, i, a1), 1, &[obj(a as i64, bp)])?;
                }
                for bpp in 1..=n - b - 1 {
                    let j = b1 - bpp + 1;
                    table.push(band(n, j, b1), 1, &[obj(s, bpp)])?;
                }
                // two families share each of these dimension vectors
                for i in 2..=a1 {
                    let y_long = obj(s, b1 - i + 1);
                    let y_pair = [obj(a as i64, n + 2 - a - i), obj(s, n - b - 1)];
                    table.push(band(n, i, b1), 2, &[y_long])?;
                    table.push(band(n, i, b1), 2, &y_pair)?;
                }
                for bp in 1..=n - a {
                    for bpp in 1..=n.saturating_sub(b + 2) {
                        let i = n - a - bp + 2;
                        let j = b1 - bpp + 1;
                        table.push(
                            add_vec(&band(n, i, a1), &band(n, j, b1)),
                            1,
                            &[obj(a as i64, bp), obj(s, bpp)],
                        )?;
                    }
                }
                for bp in 1..=n - a {
                    let i = n - a - bp + 2;
                    table.push(
                        add_vec(&band(n, i, a1), &band(n, i, b1)),
                        1,
                        &[obj(a as i64, bp), obj(s, bp + n - b - 1)],
                    )?;
                }
                // unordered pairs i < j in the doubled band; the two
                // orientations realize the same dimension vector
                for i in 2..=a1 {
                    for j in i + 1..=a1 {
                        let e = add_vec(&band(n, i, a1), &band(n, j, b1));
                        table.push(
                            e.clone(),
                            2,
                            &[obj(a as i64, n + 2 - a - i), obj(s, b1 - j + 1)],
                        )?;
                        table.push(e, 2, &[obj(a as i64, n + 2 - a - j), obj(s, b1 - i + 1)])?;
                    }
                }
                table.push(vec![0; n - 1], 1, &[])?;
            }
        }
        Region::III | Region::IV | Region::Outside => unreachable!("rigid objects only"),
    }
    Ok(table.into_terms())
}

/// Character from the defining sum: `x^{ind(X)} * sum chi * x^{-iota}` over
/// the admissible Grassmannian terms. Equals [`x_closed_form`] on every
/// rigid object.
pub fn x_from_definition(x: &TubeObject) -> Result<LaurentPoly, TubeError> {
    let n = x.rank();
    let terms = grass_terms(x)?;
    let mut sum = LaurentPoly::zero(n - 1);
    for t in terms {
        sum = sum.add(&LaurentPoly::monomial(
            Monomial::new(t.iota.neg().coeffs().iter().map(|&c| c as i32).collect()),
            t.chi as i64,
        ));
    }
    let ind = index(x)?;
    let shift: Vec<i32> = ind.coeffs().iter().map(|&c| c as i32).collect();
    Ok(sum.mul_monomial(&shift))
}

/// Laurent monomial `prod pos_s / prod neg_s` over variable subscripts in
/// `1..=n`, with `x_n` collapsing to 1.
fn subscript_monomial(n: usize, pos: &[usize], neg: &[usize]) -> LaurentPoly {
    let mut exps = vec![0i32; n - 1];
    for &s in pos {
        assert!((1..=n).contains(&s), "subscript {s} out of range");
        if s < n {
            exps[s - 1] += 1;
        }
    }
    for &s in neg {
        assert!((1..=n).contains(&s), "subscript {s} out of range");
        if s < n {
            exps[s - 1] -= 1;
        }
    }
    LaurentPoly::monomial(Monomial::new(exps), 1)
}

/// Closed-form character of a rigid object, by region:
///
/// * region O: `x_{n-b}`;
/// * region I: `sum_{k=0}^{b} x_{n-a-b+1} x_{n-a+2} / (x_{n-a-k+1} x_{n-a-k+2})`;
/// * region II: `x_1 x_{n-a+2} x_{2n-a-b+1} (1/x_1^2 + S S')` where `S` and
///   `S'` are the two telescoping sums of inverse variable pairs.
///
/// Subscripts equal to `n` evaluate to 1; the zero object maps to 1.
pub fn x_closed_form(x: &TubeObject) -> Result<LaurentPoly, TubeError> {
    let n = x.rank();
    let d = n - 1;
    if x.is_zero() {
        return Ok(LaurentPoly::one(d));
    }
    if !x.is_rigid() {
        return Err(TubeError::NotRigid {
            object: x.to_string(),
        });
    }
    let (a, b) = (x.socle(), x.quasi_length());
    Ok(match region(x) {
        Region::O => subscript_monomial(n, &[n - b], &[]),
        Region::I => {
            let mut sum = LaurentPoly::zero(d);
            for k in 0..=b {
                sum = sum.add(&subscript_monomial(
                    n,
                    &[n - a - b + 1, n - a + 2],
                    &[n - a - k + 1, n - a - k + 2],
                ));
            }
            sum
        }
        Region::II => {
            let mut s1 = LaurentPoly::zero(d);
            for k in 0..=n - a {
                s1 = s1.add(&subscript_monomial(n, &[], &[n - a - k + 1, n - a - k + 2]));
            }
            let mut s2 = LaurentPoly::zero(d);
            for l in 0..2 * n - a - b {
                s2 = s2.add(&subscript_monomial(
                    n,
                    &[],
                    &[2 * n - a - b - l, 2 * n - a - b - l + 1],
                ));
            }
            let inner = subscript_monomial(n, &[], &[1, 1]).add(&s1.mul(&s2));
            subscript_monomial(n, &[1, n - a + 2, 2 * n - a - b + 1], &[]).mul(&inner)
        }
        _ => unreachable!("rigid objects only"),
    })
}

/// Character of a direct sum: the product over summands, with the empty sum
/// mapping to 1.
pub fn x_of_rigid_sum(sum: &RigidSum) -> Result<LaurentPoly, TubeError> {
    let d = sum.rank() - 1;
    let mut acc = LaurentPoly::one(d);
    for s in sum.summands() {
        acc = acc.mul(&x_closed_form(s)?);
    }
    Ok(acc)
}
