//! Exact arithmetic: arbitrary-precision rationals and integer matrices.
//!
//! Everything downstream (surgery formulas, slope normalization, the
//! classification tables) is exact; no floating point anywhere.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
///
/// Thin wrapper around `BigRational` so we control formatting and JSON
/// encoding: integers print bare, everything else as `p/q` with q > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    /// num/den, reduced. Errors on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn ratio(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    /// Numerator of the reduced form; sign lives here.
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the reduced form; always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True exactly for odd/2, i.e. the reduced denominator is 2.
    pub fn is_half_integer(&self) -> bool {
        *self.0.denom() == BigInt::from(2)
    }

    /// True when 2 * self is an integer.
    pub fn is_integer_or_half(&self) -> bool {
        self.is_integer() || self.is_half_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Parse("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// The value as an i64 if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

macro_rules! rational_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational((self.0).$m(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational((self.0).$m(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational((&self.0).$m(rhs.0))
            }
        }
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num: BigInt = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
        let den: BigInt = d
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_integer() {
            if let Some(v) = self.numer().to_i64() {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer or a \"p/q\" string")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_int(v))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_bigint(BigInt::from(v)))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// <x, y> with rational x against an integer vector.
pub fn dot(x: &[Rational], y: &[BigInt]) -> Rational {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = Rational::zero();
    for (a, b) in x.iter().zip(y) {
        acc = acc + a * &Rational::from_bigint(b.clone());
    }
    acc
}

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    e: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            e: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut e = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::BadParams(format!(
                    "matrix row has {} entries, want {n}",
                    r.len()
                )));
            }
            e.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Ok(IntMatrix { n, e })
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut e = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::BadParams(format!(
                    "matrix row has {} entries, want {n}",
                    r.len()
                )));
            }
            e.extend(r);
        }
        Ok(IntMatrix { n, e })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.e[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..i).all(|j| self.e[i * n + j] == self.e[j * n + i]))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.e[j * n + i] = self.e[i * n + j].clone();
            }
        }
        out
    }

    /// [[0, v^T], [v, M]]; the border trick turns v^T M^{-1} v into a
    /// determinant ratio and so certifies solve() results integrally.
    pub fn bordered(&self, v: &[BigInt]) -> Result<Self> {
        let n = self.n;
        if v.len() != n {
            return Err(Error::BadParams(format!(
                "border vector has {} entries, want {n}",
                v.len()
            )));
        }
        let m = n + 1;
        let mut out = IntMatrix::zero(m);
        for i in 0..n {
            out.e[(i + 1) * m] = v[i].clone();
            out.e[i + 1] = v[i].clone();
            for j in 0..n {
                out.e[(i + 1) * m + (j + 1)] = self.e[i * n + j].clone();
            }
        }
        Ok(out)
    }

    pub fn delete_row_col(&self, k: usize) -> Result<Self> {
        let n = self.n;
        if k >= n {
            return Err(Error::IndexOutOfRange(k));
        }
        let mut out = IntMatrix::zero(n - 1);
        let mut r = 0;
        for i in 0..n {
            if i == k {
                continue;
            }
            let mut c = 0;
            for j in 0..n {
                if j == k {
                    continue;
                }
                out.e[r * (n - 1) + c] = self.e[i * n + j].clone();
                c += 1;
            }
            r += 1;
        }
        Ok(out)
    }

    /// Determinant by the Bareiss fraction-free scheme. det of the 0x0
    /// matrix is 1, which makes the empty-diagram formulas come out right
    /// without special cases.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.e.clone();
        let mut neg = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let swap = (k + 1..n).find(|&r| !a[r * n + k].is_zero());
                match swap {
                    None => return BigInt::zero(),
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        neg = !neg;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    // exact division by the previous pivot
                    let t = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                    a[i * n + j] = t;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        if neg {
            -d
        } else {
            d
        }
    }

    /// Solve M x = b exactly. Errors if M is singular.
    pub fn solve(&self, b: &[BigInt]) -> Result<Vec<Rational>> {
        let n = self.n;
        if b.len() != n {
            return Err(Error::BadParams(format!(
                "rhs has {} entries, want {n}",
                b.len()
            )));
        }
        let w = n + 1;
        let mut a: Vec<BigRational> = Vec::with_capacity(n * w);
        for i in 0..n {
            for j in 0..n {
                a.push(BigRational::from_integer(self.e[i * n + j].clone()));
            }
            a.push(BigRational::from_integer(b[i].clone()));
        }
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r * w + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if piv != col {
                for c in 0..w {
                    a.swap(col * w + c, piv * w + c);
                }
            }
            let p = a[col * w + col].clone();
            for r in 0..n {
                if r == col || a[r * w + col].is_zero() {
                    continue;
                }
                let f = &a[r * w + col] / &p;
                for c in col..w {
                    let t = &a[r * w + c] - &f * &a[col * w + c];
                    a[r * w + c] = t;
                }
            }
        }
        Ok((0..n)
            .map(|i| Rational(&a[i * w + n] / &a[i * w + i]))
            .collect())
    }

    /// Row i of M^{-1}, i.e. the solution of M^T x = e_i.
    pub fn inverse_row(&self, i: usize) -> Result<Vec<Rational>> {
        let n = self.n;
        if i >= n {
            return Err(Error::IndexOutOfRange(i));
        }
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::one();
        self.transpose().solve(&e)
    }

    /// Signature of a symmetric matrix by congruence diagonalization.
    ///
    /// Prefers nonzero diagonal pivots; when every remaining diagonal entry
    /// is zero, splits off a hyperbolic pair (net contribution zero).
    pub fn signature(&self) -> Result<i64> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.n;
        let mut a: Vec<BigRational> = self
            .e
            .iter()
            .map(|v| BigRational::from_integer(v.clone()))
            .collect();
        let mut active: Vec<usize> = (0..n).collect();
        let mut sig = 0i64;
        while !active.is_empty() {
            if let Some(pos) = active.iter().position(|&p| !a[p * n + p].is_zero()) {
                let p = active.remove(pos);
                let c = a[p * n + p].clone();
                sig += if c.is_positive() { 1 } else { -1 };
                for &i in &active {
                    for &j in &active {
                        let t = &a[i * n + j] - &(&a[i * n + p] * &a[p * n + j]) / &c;
                        a[i * n + j] = t;
                    }
                }
                continue;
            }
            let mut pair = None;
            'scan: for (pi, &p) in active.iter().enumerate() {
                for (qi, &q) in active.iter().enumerate().skip(pi + 1) {
                    if !a[p * n + q].is_zero() {
                        pair = Some((pi, qi));
                        break 'scan;
                    }
                }
            }
            // remaining block is all zero: contributes nothing
            let Some((pi, qi)) = pair else { break };
            let q = active.remove(qi);
            let p = active.remove(pi);
            let c = a[p * n + q].clone();
            // hyperbolic block [[0,c],[c,0]]: +1 and -1, net zero
            for &i in &active {
                for &j in &active {
                    let t = &a[i * n + j]
                        - &(&a[i * n + p] * &a[q * n + j] + &a[i * n + q] * &a[p * n + j]) / &c;
                    a[i * n + j] = t;
                }
            }
        }
        Ok(sig)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.e[i * self.n + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
