//! Torus slopes, the SL(2,Z) action on them, negative continued fractions,
//! and the tight-structure counts on T^2 x I they encode.

use std::env;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Negative continued fraction [r0, r1, ..., rk] with every entry <= -2,
/// denoting r0 - 1/(r1 - 1/(... - 1/rk)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CFrac(Vec<BigInt>);

impl CFrac {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::BadCFrac("no entries".into()));
        }
        if let Some(bad) = entries.iter().find(|r| **r > BigInt::from(-2)) {
            return Err(Error::BadCFrac(format!("entry {bad} exceeds -2")));
        }
        Ok(CFrac(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&r| BigInt::from(r)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        // never empty by construction
        self.0.is_empty()
    }

    /// Value of the expansion; always < -1.
    pub fn eval(&self) -> Rational {
        let last = self.0.len() - 1;
        let mut t = Rational::from_bigint(self.0[last].clone());
        for r in self.0[..last].iter().rev() {
            // t < -1 throughout, so the reciprocal is always defined
            let rec = t.recip().expect("partial value is nonzero");
            t = Rational::from_bigint(r.clone()) - rec;
        }
        t
    }

    /// |(r0+1)(r1+1)...(r_{k-1}+1) rk|, the number of tight, minimally
    /// twisting structures a slope with this expansion supports.
    pub fn tight_count(&self) -> BigInt {
        let last = self.0.len() - 1;
        let mut n = BigInt::one();
        for r in &self.0[..last] {
            n *= r + BigInt::one();
        }
        n *= &self.0[last];
        n.abs()
    }
}

impl fmt::Display for CFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// Negative continued fraction expansion of s < -1.
///
/// Repeated floor division: s = q - 1/s' with q = floor(s) <= -2 and the
/// remainder re-entering the same domain, so every entry lands <= -2.
pub fn cfrac(s: &Rational) -> Result<CFrac> {
    if *s >= Rational::from_int(-1) {
        return Err(Error::OutOfRange(format!("cfrac needs a slope < -1, got {s}")));
    }
    let mut num = s.numer().clone();
    let mut den = s.denom().clone();
    let mut entries = Vec::new();
    loop {
        let (q, r) = num.div_mod_floor(&den);
        entries.push(q);
        if r.is_zero() {
            break;
        }
        num = -den;
        den = r;
    }
    CFrac::new(entries)
}

/// A slope on the torus: y/x for the curve class x*mu + y*lambda.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Slope {
    Finite(Rational),
    Infinity,
}

impl Slope {
    pub fn integer(n: i64) -> Self {
        Slope::Finite(Rational::from_int(n))
    }

    /// Representing vector (x, y); Infinity is (0, 1).
    pub fn vec(&self) -> (BigInt, BigInt) {
        match self {
            Slope::Finite(s) => (s.denom().clone(), s.numer().clone()),
            Slope::Infinity => (BigInt::zero(), BigInt::one()),
        }
    }

    pub fn from_vec(x: BigInt, y: BigInt) -> Result<Self> {
        if x.is_zero() {
            if y.is_zero() {
                return Err(Error::BadParams("zero vector has no slope".into()));
            }
            return Ok(Slope::Infinity);
        }
        Ok(Slope::Finite(Rational::ratio(y, x)?))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Slope::Finite(r) => Some(r),
            Slope::Infinity => None,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) => write!(f, "{r}"),
            Slope::Infinity => write!(f, "inf"),
        }
    }
}

/// Integer 2x2 matrix [[a,b],[c,d]]; everything built here has det 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sl2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Sl2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Sl2 {
            a: BigInt::from(a),
            b: BigInt::from(b),
            c: BigInt::from(c),
            d: BigInt::from(d),
        }
    }

    pub fn identity() -> Self {
        Sl2::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// self * rhs
    pub fn mul(&self, rhs: &Sl2) -> Sl2 {
        Sl2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    /// Action on slope vectors: (x, y) -> (ax + by, cx + dy).
    pub fn apply(&self, s: &Slope) -> Slope {
        let (x, y) = s.vec();
        let xp = &self.a * &x + &self.b * &y;
        let yp = &self.c * &x + &self.d * &y;
        Slope::from_vec(xp, yp).expect("image of a nonzero vector is nonzero")
    }
}

impl fmt::Display for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// Result of slope normalization: the image of t1, the matrix that
/// produced it, and how many stabilizer steps were needed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Normalized {
    pub s1: Rational,
    pub matrix: Sl2,
    pub iterations: usize,
}

fn max_iterations() -> usize {
    env::var("LEGHOPF_MAX_ITER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10_000)
}

/// Normal form for the boundary-slope pair of T^2 x I.
///
/// A0 = [[0,1],[-1,t0-1]] sends slope t0 to -1 exactly; the image of t1 is
/// then pushed into (-inf, -1] by powers of [[0,-1],[1,2]], the parabolic
/// stabilizer of slope -1. Terminates in O(|t1|) steps for integer input;
/// LEGHOPF_MAX_ITER caps the loop regardless.
pub fn normalize(t0: i64, t1: i64) -> Result<Normalized> {
    let a0 = Sl2::new(0, 1, -1, t0 - 1);
    let step = Sl2::new(0, -1, 1, 2);
    let mut matrix = a0.clone();
    let mut s = a0.apply(&Slope::integer(t1));
    let cap = max_iterations();
    let mut iterations = 0;
    let neg_one = Rational::from_int(-1);
    loop {
        if let Slope::Finite(v) = &s {
            if *v <= neg_one {
                return Ok(Normalized {
                    s1: v.clone(),
                    matrix,
                    iterations,
                });
            }
        }
        if iterations >= cap {
            return Err(Error::NoTermination(cap));
        }
        s = step.apply(&s);
        matrix = step.mul(&matrix);
        iterations += 1;
    }
}

/// Tight, minimally twisting contact structures on T^2 x I for a
/// boundary pair; one normalized slope value gives an integral family
/// instead of a finite count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TightCount {
    Finite(BigInt),
    IntegralFamily,
}

impl fmt::Display for TightCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TightCount::Finite(n) => write!(f, "{n}"),
            TightCount::IntegralFamily => write!(f, "integral family"),
        }
    }
}

/// Count tight minimally twisting structures for the pair (t0, t1).
pub fn count_tight(t0: i64, t1: i64) -> Result<TightCount> {
    let norm = normalize(t0, t1)?;
    if norm.s1 == Rational::from_int(-1) {
        return Ok(TightCount::IntegralFamily);
    }
    Ok(TightCount::Finite(cfrac(&norm.s1)?.tight_count()))
}

/// Legendrian representatives with twisting n >= 1: a +/- pair in general,
/// identified to one by a diffeomorphism exactly when the normalized slope
/// is -1.
pub fn count_twisting(t0: i64, t1: i64, n: i64, diffeo: bool) -> Result<u32> {
    if n < 1 {
        return Err(Error::OutOfRange(format!("twisting must be >= 1, got {n}")));
    }
    if !diffeo {
        return Ok(2);
    }
    let norm = normalize(t0, t1)?;
    Ok(if norm.s1 == Rational::from_int(-1) { 1 } else { 2 })
}
