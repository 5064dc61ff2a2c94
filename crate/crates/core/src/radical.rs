//! Exact arithmetic on finite sums of rational multiples of square roots.
//!
//! Values have the shape `Σ cᵢ·√sᵢ` with rational `cᵢ` and squarefree
//! integer `sᵢ`. Square roots of distinct squarefree integers are linearly
//! independent over the rationals, so the term map is a canonical form:
//! two sums are equal as real numbers iff their maps are identical. This
//! is what lets equality checks be exact instead of floating-point.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RadicalError {
    /// Radicands must be positive; `√0` has no squarefree part.
    #[error("radicand must be a positive integer")]
    ZeroRadicand,
}

/// Splits `n ≥ 1` as `n = c²·s` with `s` squarefree, returning `(c, s)`.
///
/// Plain trial division; the radicands that show up here are degree
/// expressions (`d_u² + d_v²`), comfortably small.
pub fn squarefree_decompose(n: u64) -> Result<(u64, u64), RadicalError> {
    if n == 0 {
        return Err(RadicalError::ZeroRadicand);
    }
    let mut rest = n;
    let mut c = 1u64;
    let mut s = 1u64;
    let mut d = 2u64;
    while d * d <= rest {
        let mut e = 0u32;
        while rest % d == 0 {
            rest /= d;
            e += 1;
        }
        c *= d.pow(e / 2);
        if e % 2 == 1 {
            s *= d;
        }
        d += 1;
    }
    // Whatever survives trial division is 1 or a single prime.
    s *= rest;
    Ok((c, s))
}

/// A finite sum `Σ cᵢ·√sᵢ`, kept in canonical form: every stored radicand
/// is squarefree, every stored coefficient is nonzero, and the purely
/// rational part (if any) sits at radicand 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadicalSum {
    terms: BTreeMap<u64, BigRational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut sum = Self::zero();
        sum.add_term(1, r);
        sum
    }

    /// `√n` in canonical form, e.g. `√8 = 2√2`.
    pub fn sqrt_of(n: u64) -> Result<Self, RadicalError> {
        Self::multiple_of_sqrt(BigRational::from_integer(BigInt::from(1)), n)
    }

    /// `coeff·√n` in canonical form.
    pub fn multiple_of_sqrt(coeff: BigRational, n: u64) -> Result<Self, RadicalError> {
        let (c, s) = squarefree_decompose(n)?;
        let mut sum = Self::zero();
        sum.add_term(s, coeff * BigRational::from_integer(BigInt::from(c)));
        Ok(sum)
    }

    /// Adds `coeff·√radicand` assuming `radicand` is already squarefree.
    pub(crate) fn add_term(&mut self, radicand: u64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(radicand)
            .or_insert_with(|| BigRational::from_integer(BigInt::from(0)));
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn scale(&self, f: &BigRational) -> Self {
        if f.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            out.add_term(*s, c * f);
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// The coefficient attached to squarefree `radicand` (zero if absent).
    pub fn coefficient(&self, radicand: u64) -> BigRational {
        self.terms
            .get(&radicand)
            .cloned()
            .unwrap_or_else(|| BigRational::from_integer(BigInt::from(0)))
    }

    /// The purely rational part, i.e. the radicand-1 coefficient.
    pub fn rational_part(&self) -> BigRational {
        self.coefficient(1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Floating-point value; each term is rounded once and the terms are
    /// summed in increasing radicand order, so the result is deterministic.
    pub fn eval_f64(&self) -> f64 {
        let mut acc = 0.0f64;
        for (s, c) in &self.terms {
            let coeff = c.to_f64().unwrap_or(f64::NAN);
            acc += coeff * (*s as f64).sqrt();
        }
        acc
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        for (s, c) in &rhs.terms {
            self.add_term(*s, c.clone());
        }
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        self += &rhs;
        self
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (s, c) in &self.terms {
            out.add_term(*s, -c.clone());
        }
        out
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        -&self
    }
}

impl Sub<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(*s, -c.clone());
        }
        out
    }
}

impl Sub for RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: RadicalSum) -> RadicalSum {
        &self - &rhs
    }
}

/// Outcome of a numeric comparison with a separation margin.
///
/// `Equal` is only ever produced by exact (canonical-form) equality;
/// `Inconclusive` means the floating-point gap was below the margin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumericOrdering {
    Less,
    Equal,
    Greater,
    Inconclusive,
}

/// Margin used by default: `1e-9 · max(1, |a|, |b|)`.
pub fn default_margin(a: &RadicalSum, b: &RadicalSum) -> f64 {
    1e-9 * a.eval_f64().abs().max(b.eval_f64().abs()).max(1.0)
}

/// Compares two sums: exact equality first, then the float difference
/// against `±margin`.
pub fn cmp_numeric(a: &RadicalSum, b: &RadicalSum, margin: f64) -> NumericOrdering {
    if a == b {
        return NumericOrdering::Equal;
    }
    let diff = (a - b).eval_f64();
    if diff > margin {
        NumericOrdering::Greater
    } else if diff < -margin {
        NumericOrdering::Less
    } else {
        NumericOrdering::Inconclusive
    }
}

// Serializes as an array of `{"radicand": s, "num": p, "den": q}` objects in
// increasing radicand order. Coefficients in practice fit i64 easily; huge
// ones fall back to decimal strings rather than losing precision.
impl Serialize for RadicalSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Term<'a> {
            radicand: u64,
            coeff: &'a BigRational,
        }
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                fn field<S: SerializeStruct>(
                    st: &mut S,
                    name: &'static str,
                    v: &BigInt,
                ) -> Result<(), S::Error> {
                    match v.to_i64() {
                        Some(small) => st.serialize_field(name, &small),
                        None => st.serialize_field(name, &v.to_string()),
                    }
                }
                let mut st = serializer.serialize_struct("Term", 3)?;
                st.serialize_field("radicand", &self.radicand)?;
                field(&mut st, "num", self.coeff.numer())?;
                field(&mut st, "den", self.coeff.denom())?;
                st.end()
            }
        }

        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (s, c) in &self.terms {
            seq.serialize_element(&Term {
                radicand: *s,
                coeff: c,
            })?;
        }
        seq.end()
    }
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in &self.terms {
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let whole = a.is_integer();
            if *s == 1 {
                write!(f, "{a}")?;
            } else if a == BigRational::from_integer(BigInt::from(1)) {
                write!(f, "√{s}")?;
            } else if whole {
                write!(f, "{}√{s}", a.numer())?;
            } else {
                write!(f, "({a})√{s}")?;
            }
        }
        Ok(())
    }
}
