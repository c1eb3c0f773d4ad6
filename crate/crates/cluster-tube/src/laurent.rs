//! Sparse multivariate Laurent polynomials over arbitrary-precision integers.
//!
//! A [`LaurentPoly`] is a finite sum of terms `c * x1^e1 * ... * xm^em` with
//! nonzero `BigInt` coefficients and integer (possibly negative) exponents.
//! Terms are kept in a canonical order (graded-lexicographic, iterated in
//! descending order), which makes equality structural and printing
//! deterministic.
//!
//! The one nontrivial operation is [`LaurentPoly::exact_div`]: exact division
//! by leading-term cancellation. Cluster mutation divides a binomial exchange
//! sum by a cluster variable; the Laurent phenomenon guarantees the division
//! is exact, so a `NotDivisible` error from inside a mutation is a bug signal,
//! not a recoverable condition.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors from Laurent-polynomial arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Exponent vector of a single Laurent monomial. Negative entries allowed.
///
/// The `Ord` instance is graded-lexicographic ascending: first by total
/// degree, then lexicographically on the exponent vector. Canonical term
/// order elsewhere iterates this in reverse (descending).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<i32>,
}

impl Monomial {
    pub fn new(exps: Vec<i32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial (all exponents zero) in `vars` variables.
    pub fn one(vars: usize) -> Self {
        Monomial {
            exps: vec![0; vars],
        }
    }

    pub fn var_count(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[i32] {
        &self.exps
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Componentwise sum of exponents (monomial product).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference of exponents (always defined for Laurent monomials).
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial with `BigInt` coefficients.
///
/// Invariants: no stored zero coefficients, no duplicate monomials, every
/// monomial has length `vars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

/// Serialization form: `{"vars": m, "terms": [{"coeff": "...", "exps": [...]}]}`
/// with terms in canonical (graded-lex descending) order and coefficients as
/// decimal strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: usize,
    pub terms: Vec<PolyTermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyTermJson {
    pub coeff: String,
    pub exps: Vec<i32>,
}

impl LaurentPoly {
    pub fn zero(vars: usize) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(vars), c);
        }
        LaurentPoly { vars, terms }
    }

    /// The variable `x_i`, 1-indexed: `var(m, 1)` is `x1`.
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(
            i >= 1 && i <= vars,
            "variable index {i} out of range 1..={vars}"
        );
        let mut exps = vec![0; vars];
        exps[i - 1] = 1;
        Self::monomial(Monomial::new(exps), BigInt::one())
    }

    /// Single-term polynomial `c * x^exps`.
    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let vars = m.var_count();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { vars, terms }
    }

    pub fn from_terms(
        vars: usize,
        it: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self, LaurentError> {
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in it {
            if m.var_count() != vars {
                return Err(LaurentError::VarCountMismatch {
                    left: vars,
                    right: m.var_count(),
                });
            }
            if c.is_zero() {
                continue;
            }
            *terms.entry(m).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { vars, terms })
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.term_count() == 1 && {
            let (m, c) = self.terms.iter().next().unwrap();
            m.is_constant() && c.is_one()
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: graded-lexicographic descending.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Leading term under the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff_of(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "variable count mismatch: {} vs {}",
            self.vars, other.vars
        );
    }

    /// Coefficient-wise sum.
    ///
    /// Panics if the variable counts differ.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly {
            vars: self.vars,
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Distributive product.
    ///
    /// Panics if the variable counts differ.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let prod = c1 * c2;
                let entry = terms.entry(m).or_insert_with(BigInt::zero);
                *entry += prod;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly {
            vars: self.vars,
            terms,
        }
    }

    /// Multiply by the monomial `x^delta`.
    pub fn mul_monomial(&self, delta: &[i32]) -> Self {
        assert_eq!(delta.len(), self.vars);
        LaurentPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let exps = m.exps().iter().zip(delta).map(|(a, d)| a + d).collect();
                    (Monomial::new(exps), c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Componentwise minimum of the exponent vectors over all terms.
    /// `None` for the zero polynomial.
    pub fn min_exps(&self) -> Option<Vec<i32>> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut min = first.exps().to_vec();
        for m in it {
            for (lhs, &e) in min.iter_mut().zip(m.exps()) {
                if e < *lhs {
                    *lhs = e;
                }
            }
        }
        Some(min)
    }

    /// Exact division: the unique `r` with `r * q == self`, found by
    /// leading-term cancellation under the canonical monomial order.
    ///
    /// Returns `NotDivisible` if no such Laurent polynomial exists and
    /// `DivisionByZero` if `q` is zero.
    pub fn exact_div(&self, q: &Self) -> Result<Self, LaurentError> {
        if self.vars != q.vars {
            return Err(LaurentError::VarCountMismatch {
                left: self.vars,
                right: q.vars,
            });
        }
        if q.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.vars));
        }

        // Shift both operands into ordinary polynomials (all exponents >= 0).
        // Per-variable minimal exponents are additive under multiplication of
        // nonzero Laurent polynomials, so if the division is exact the shifted
        // quotient is again an ordinary polynomial and the true quotient is
        // recovered by shifting back.
        let p_min = self.min_exps().unwrap();
        let q_min = q.min_exps().unwrap();
        let neg = |v: &[i32]| v.iter().map(|e| -e).collect::<Vec<_>>();
        let p_hat = self.mul_monomial(&neg(&p_min));
        let q_hat = q.mul_monomial(&neg(&q_min));

        let (q_lm, q_lc) = q_hat.leading_term().unwrap();
        let q_lm = q_lm.clone();
        let q_lc = q_lc.clone();

        let mut rem = p_hat;
        let mut quo = Self::zero(self.vars);
        while !rem.is_zero() {
            let (r_lm, r_lc) = rem.leading_term().unwrap();
            let t_m = r_lm.div(&q_lm);
            if t_m.exps().iter().any(|&e| e < 0) {
                return Err(LaurentError::NotDivisible);
            }
            let (t_c, residue) = num_integer_div_rem(r_lc, &q_lc);
            if !residue.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            let t = Self::monomial(t_m, t_c);
            rem = rem.sub(&t.mul(&q_hat));
            quo = quo.add(&t);
        }

        let shift: Vec<i32> = p_min.iter().zip(&q_min).map(|(a, b)| a - b).collect();
        Ok(quo.mul_monomial(&shift))
    }

    /// True when every coefficient is positive.
    pub fn all_coeffs_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// True when some term carries a negative exponent (a denominator part).
    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|m| m.exps().iter().any(|&e| e < 0))
    }

    /// Deterministic text form: terms in canonical order joined by ` + `,
    /// each a signed integer coefficient times `x<i>^<e>` factors.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let rendered: Vec<String> = self.terms().map(|(m, c)| render_term(m, c)).collect();
        rendered.join(" + ")
    }

    /// Parses the output of [`canonical_text`](Self::canonical_text) (and any
    /// whitespace-relaxed variant of the same grammar) in `vars` variables.
    pub fn parse(input: &str, vars: usize) -> Result<Self, LaurentError> {
        parse_poly(input, vars)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars,
            terms: self
                .terms()
                .map(|(m, c)| PolyTermJson {
                    coeff: c.to_string(),
                    exps: m.exps().to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self, LaurentError> {
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| LaurentError::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            terms.push((Monomial::new(t.exps.clone()), c));
        }
        Self::from_terms(json.vars, terms)
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

/// Total order on polynomials (used to sort clusters canonically): variable
/// count, then the canonical term sequences compared lexicographically.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars.cmp(&other.vars).then_with(|| {
            let mut lhs = self.terms();
            let mut rhs = other.terms();
            loop {
                match (lhs.next(), rhs.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((m1, c1)), Some((m2, c2))) => {
                        let ord = m1.cmp(m2).then_with(|| c1.cmp(c2));
                        if ord != Ordering::Equal {
                            return ord;
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

fn render_term(m: &Monomial, c: &BigInt) -> String {
    if m.is_constant() {
        return c.to_string();
    }
    let factors: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    let mono = factors.join("*");
    if c.is_one() {
        mono
    } else if (-c).is_one() {
        format!("-{mono}")
    } else {
        format!("{c}*{mono}")
    }
}

// --- text parser -----------------------------------------------------------

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<String, LaurentError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(LaurentError::Parse(format!(
                "expected digits at byte {}",
                start
            )));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string())
    }
}

fn parse_poly(input: &str, vars: usize) -> Result<LaurentPoly, LaurentError> {
    let mut lx = Lexer::new(input);
    let mut terms: Vec<(Monomial, BigInt)> = Vec::new();
    loop {
        let (m, c) = parse_term(&mut lx, vars)?;
        terms.push((m, c));
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.bump();
            }
            Some(other) => {
                return Err(LaurentError::Parse(format!(
                    "unexpected character {:?}",
                    other as char
                )))
            }
        }
    }
    let p = LaurentPoly::from_terms(vars, terms)?;
    Ok(p)
}

fn parse_term(lx: &mut Lexer, vars: usize) -> Result<(Monomial, BigInt), LaurentError> {
    let negative = lx.eat(b'-');
    let mut coeff = match lx.peek() {
        Some(b) if b.is_ascii_digit() => {
            let d = lx.digits()?;
            let c: BigInt = d.parse().unwrap();
            // optional `*` then factors
            if lx.eat(b'*') {
                let m = parse_factors(lx, vars)?;
                let c = if negative { -c } else { c };
                return Ok((m, c));
            }
            let c = if negative { -c } else { c };
            return Ok((Monomial::one(vars), c));
        }
        Some(b'x') => BigInt::one(),
        other => {
            return Err(LaurentError::Parse(format!(
                "expected term, found {:?}",
                other.map(|b| b as char)
            )))
        }
    };
    if negative {
        coeff = -coeff;
    }
    let m = parse_factors(lx, vars)?;
    Ok((m, coeff))
}

fn parse_factors(lx: &mut Lexer, vars: usize) -> Result<Monomial, LaurentError> {
    let mut exps = vec![0i32; vars];
    loop {
        if !lx.eat(b'x') {
            return Err(LaurentError::Parse("expected variable factor".into()));
        }
        let idx: usize = lx
            .digits()?
            .parse()
            .map_err(|_| LaurentError::Parse("bad variable index".into()))?;
        if idx < 1 || idx > vars {
            return Err(LaurentError::Parse(format!(
                "variable x{idx} out of range 1..={vars}"
            )));
        }
        let exp: i32 = if lx.eat(b'^') {
            let neg = lx.eat(b'-');
            let d: i32 = lx
                .digits()?
                .parse()
                .map_err(|_| LaurentError::Parse("bad exponent".into()))?;
            if neg {
                -d
            } else {
                d
            }
        } else {
            1
        };
        exps[idx - 1] += exp;
        if !lx.eat(b'*') {
            break;
        }
        // a `*` may also precede a trailing numeric factor; reject that form
        if let Some(b) = lx.peek() {
            if b != b'x' {
                return Err(LaurentError::Parse(
                    "numeric factor must come first in a term".into(),
                ));
            }
        }
    }
    Ok(Monomial::new(exps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, vars: usize) -> LaurentPoly {
        LaurentPoly::parse(s, vars).unwrap()
    }

    #[test]
    fn test_add_inverse_is_zero() {
        let x1 = LaurentPoly::var(2, 1);
        let sum = x1.add(&x1.neg());
        assert!(sum.is_zero());
        assert_eq!(sum.term_count(), 0);
    }

    #[test]
    fn test_add_disjoint_supports() {
        let lhs = p("x1 + 1", 2).add(&p("x2^2", 2));
        assert_eq!(lhs, p("x2^2 + x1 + 1", 2));
    }

    #[test]
    fn test_binomial_square() {
        let b = p("x1 + 1", 1);
        assert_eq!(b.mul(&b), p("x1^2 + 2*x1 + 1", 1));
    }

    #[test]
    fn test_mul_inverse_monomial() {
        let x1 = LaurentPoly::var(1, 1);
        let x1_inv = LaurentPoly::monomial(Monomial::new(vec![-1]), 1);
        assert!(x1.mul(&x1_inv).is_one());
    }

    #[test]
    fn test_mul_clears_denominator() {
        // ((x1+1)/x2) * x2 = x1 + 1
        let lhs = p("x1*x2^-1 + x2^-1", 2);
        let x2 = LaurentPoly::var(2, 2);
        assert_eq!(lhs.mul(&x2), p("x1 + 1", 2));
    }

    #[test]
    fn test_mul_example_38_product() {
        // x1 * (x2^2+1)/x1 = x2^2 + 1
        let x1 = LaurentPoly::var(2, 1);
        let other = p("x1^-1*x2^2 + x1^-1", 2);
        assert_eq!(x1.mul(&other), p("x2^2 + 1", 2));
    }

    #[test]
    fn test_exact_div_basic() {
        let num = p("x1^2*x2 + x1*x2", 2);
        let den = p("x1*x2", 2);
        assert_eq!(num.exact_div(&den).unwrap(), p("x1 + 1", 2));
    }

    #[test]
    fn test_exact_div_laurent_shift() {
        let num = p("x1^-1 + 1", 1);
        let den = p("x1^-1", 1);
        assert_eq!(num.exact_div(&den).unwrap(), p("x1 + 1", 1));
    }

    #[test]
    fn test_exact_div_monomial_divisor_always_succeeds() {
        // division by a monomial cannot fail in the Laurent ring: the
        // "remainder" just picks up negative exponents
        let num = p("x1 + x2", 2);
        let den = p("x1", 2);
        assert_eq!(num.exact_div(&den).unwrap(), p("x1^-1*x2 + 1", 2));
    }

    #[test]
    fn test_exact_div_remainder_errors() {
        let num = p("x1", 1);
        let den = p("x1 + 1", 1);
        assert_eq!(num.exact_div(&den), Err(LaurentError::NotDivisible));
        let num = p("x1 + 1", 2);
        let den = p("x1 + x2", 2);
        assert_eq!(num.exact_div(&den), Err(LaurentError::NotDivisible));
    }

    #[test]
    fn test_exact_div_by_zero_errors() {
        let num = p("x1", 1);
        assert_eq!(
            num.exact_div(&LaurentPoly::zero(1)),
            Err(LaurentError::DivisionByZero)
        );
    }

    #[test]
    fn test_exact_div_coefficient_remainder() {
        let num = p("3*x1", 1);
        let den = p("2*x1", 1);
        assert_eq!(num.exact_div(&den), Err(LaurentError::NotDivisible));
    }

    #[test]
    fn test_canonical_text_zero_and_var() {
        assert_eq!(LaurentPoly::zero(2).canonical_text(), "0");
        assert_eq!(LaurentPoly::var(2, 1).canonical_text(), "x1");
    }

    #[test]
    fn test_canonical_text_example_38_value() {
        // (x2^2 + (x1+1)^2) / (x1*x2^2), expanded; graded-lex descending puts
        // the two grade -1 terms first.
        let numerator = p("x2^2", 2).add(&p("x1 + 1", 2).pow(2));
        let value = numerator
            .exact_div(&p("x1*x2^2", 2))
            .expect("clean denominator");
        assert_eq!(
            value.canonical_text(),
            "x1*x2^-2 + x1^-1 + 2*x2^-2 + x1^-1*x2^-2"
        );
        let back = LaurentPoly::parse(&value.canonical_text(), 2).unwrap();
        assert_eq!(back, value);
    }

    #[test]
    fn test_negative_coefficients_round_trip() {
        let q = p("x1^2 + -3*x1 + -1", 1);
        assert_eq!(q.canonical_text(), "x1^2 + -3*x1 + -1");
        assert_eq!(LaurentPoly::parse(&q.canonical_text(), 1).unwrap(), q);
        let neg_mono = p("-x1*x2", 2);
        assert_eq!(neg_mono.canonical_text(), "-x1*x2");
    }

    #[test]
    fn test_json_round_trip() {
        let q = p("2*x1*x2^-2 + x1^-1 + -7", 2);
        let json = q.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let parsed: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(LaurentPoly::from_json(&parsed).unwrap(), q);
        // canonical order: the constant has the largest total degree here
        assert_eq!(json.terms[0].exps, vec![0, 0]);
        assert_eq!(json.terms[0].coeff, "-7");
        assert_eq!(json.terms[1].exps, vec![1, -2]);
    }

    #[test]
    fn test_parser_accepts_relaxed_whitespace() {
        let canonical = p("-7 + 2*x1*x2^-2 + x1^-1", 2);
        assert_eq!(canonical.canonical_text(), "-7 + 2*x1*x2^-2 + x1^-1");
        assert_eq!(p(" -7+2 * x1 * x2^-2 + x1 ^ -1 ", 2), canonical);
        assert!(LaurentPoly::parse("x3", 2).is_err());
        assert!(LaurentPoly::parse("x1 * 2", 2).is_err());
        assert!(LaurentPoly::parse("", 2).is_err());
    }

    #[test]
    fn test_poly_total_order_is_deterministic() {
        let a = p("x1", 2);
        let b = p("x2", 2);
        assert_ne!(a.cmp(&b), Ordering::Equal);
        assert_eq!(a.cmp(&a), Ordering::Equal);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(vars: usize) -> impl Strategy<Value = LaurentPoly> {
            proptest::collection::vec(
                (proptest::collection::vec(-3i32..=3, vars), -9i64..=9),
                0..6,
            )
            .prop_map(move |raw| {
                LaurentPoly::from_terms(
                    vars,
                    raw.into_iter()
                        .map(|(exps, c)| (Monomial::new(exps), BigInt::from(c))),
                )
                .unwrap()
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                prop_assert_eq!(a.mul(&LaurentPoly::one(3)), a.clone());
            }

            #[test]
            fn exact_div_inverts_mul(a in arb_poly(3), b in arb_poly(3)) {
                prop_assume!(!b.is_zero());
                prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
            }

            #[test]
            fn parse_print_identity(a in arb_poly(3)) {
                let text = a.canonical_text();
                prop_assert_eq!(LaurentPoly::parse(&text, 3).unwrap(), a);
            }
        }
    }
}
