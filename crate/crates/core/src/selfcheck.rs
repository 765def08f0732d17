//! Acceptance checks tying the modules together. Every criterion compares
//! machinery output against an independent reference: closed-form counts,
//! a Sturm-chain signature oracle, or frozen reference constants.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{
    strongly_exceptional, tight_realizations, twisting_realizations, ComponentType,
};
use crate::error::{Error, Result};
use crate::exact::{dot, IntMatrix, Rational};
use crate::families::{FamilyId, Side};
use crate::slopes::{cfrac, count_tight, count_twisting, CFrac, TightCount};
use crate::surgery::{ComponentKnot, SurgeryDiagram, SurgeryKnot};

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Run every criterion, collecting pass/fail with detail.
pub fn run_all() -> Vec<Criterion> {
    let checks: [(&'static str, fn() -> Result<String>); 8] = [
        ("tight counts match closed forms", c1_tight_counts),
        ("continued fraction identities", c2_cfrac_identities),
        ("d3 reference values", c3_d3_references),
        ("golden diagram constants", c4_golden_diagrams),
        ("family sweep verifies", c5_family_sweep),
        ("enumeration cardinalities and rows", c6_enumerations),
        ("twisting realization sizes", c7_twisting),
        ("algebraic self-checks", c8_algebraic),
    ];
    checks
        .into_iter()
        .map(|(name, f)| match f() {
            Ok(detail) => Criterion {
                name,
                passed: true,
                detail,
            },
            Err(e) => Criterion {
                name,
                passed: false,
                detail: e.to_string(),
            },
        })
        .collect()
}

fn mismatch(field: impl Into<String>, got: impl ToString, want: impl ToString) -> Error {
    Error::Mismatch {
        field: field.into(),
        got: got.to_string(),
        want: want.to_string(),
    }
}

/// Closed-form count of tight minimally twisting structures, by sign case.
/// Written directly from the case table; the pipeline must reproduce it.
pub fn closed_form_count(t0: i64, t1: i64) -> TightCount {
    if (t0, t1) == (1, 1) || (t0, t1) == (-1, -1) {
        return TightCount::IntegralFamily;
    }
    // role order: zero first, then negative first, then descending
    let (a, b) = if t0 == 0 || t1 == 0 {
        if t0 == 0 {
            (t0, t1)
        } else {
            (t1, t0)
        }
    } else if (t0 < 0) != (t1 < 0) {
        if t0 < 0 {
            (t0, t1)
        } else {
            (t1, t0)
        }
    } else {
        (t0.max(t1), t0.min(t1))
    };
    let count: i64 = if a == 0 {
        2
    } else if a < 0 && b < 0 {
        a * b
    } else if a < 0 {
        if b == 1 {
            (a - 2).abs()
        } else {
            2 * (a - 1).abs()
        }
    } else {
        // both positive, a >= b >= 1, (1,1) already handled
        match (a, b) {
            (2, 1) => 2,
            (3, 1) => 3,
            (_, 1) => 4,
            (2, 2) => 4,
            (_, 2) => 6,
            _ => 8,
        }
    };
    TightCount::Finite(BigInt::from(count))
}

// ---------------------------------------------------------------------------
// Sturm-chain signature oracle, independent of the congruence pivoting code.
// Polynomials are little-endian coefficient vectors over BigRational; the
// zero polynomial is the empty vector.

type Poly = Vec<BigRational>;

fn p_norm(mut p: Poly) -> Poly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn p_deg(p: &Poly) -> usize {
    p.len().saturating_sub(1)
}

fn p_add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    p_norm(out)
}

fn p_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    p_norm(out)
}

fn p_neg(a: &Poly) -> Poly {
    a.iter().map(|c| -c).collect()
}

fn p_deriv(a: &Poly) -> Poly {
    if a.len() <= 1 {
        return Vec::new();
    }
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

fn p_eval(a: &Poly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Remainder of a modulo b (b nonzero).
fn p_rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lb = b.last().expect("division by zero polynomial").clone();
    while !r.is_empty() && r.len() >= b.len() {
        let k = r.len() - b.len();
        let q = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            let v = &r[k + i] - &q * c;
            r[k + i] = v;
        }
        r = p_norm(r);
        if r.len() >= b.len() + k + 1 {
            unreachable!("degree must drop");
        }
        if r.len() == b.len() + k {
            // leading coefficient failed to cancel exactly
            r.pop();
            r = p_norm(r);
        }
    }
    r
}

/// Scale so the leading coefficient has absolute value 1 (sign preserved).
fn p_pos_normalize(a: &Poly) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(lc) => {
            let s = lc.abs();
            a.iter().map(|c| c / &s).collect()
        }
    }
}

fn p_monic(a: &Poly) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(lc) => {
            let lc = lc.clone();
            a.iter().map(|c| c / &lc).collect()
        }
    }
}

fn p_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (p_norm(a.clone()), p_norm(b.clone()));
    while !y.is_empty() {
        let r = p_rem(&x, &y);
        x = y;
        y = p_norm(r);
    }
    p_monic(&x)
}

/// det(xI - M) by the Leibniz sum; matrix order stays tiny here.
fn charpoly(m: &IntMatrix) -> Poly {
    let n = m.n();
    let mut acc: Poly = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        // parity by inversion count
        let mut inversions = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term: Poly = vec![BigRational::one()];
        for (i, &pi) in perm.iter().enumerate() {
            let entry: Poly = if pi == i {
                vec![
                    BigRational::from_integer(-m.get(i, i).clone()),
                    BigRational::one(),
                ]
            } else {
                vec![BigRational::from_integer(-m.get(i, pi).clone())]
            };
            term = p_mul(&term, &entry);
        }
        if inversions % 2 == 1 {
            term = p_neg(&term);
        }
        acc = p_add(&acc, &term);
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    if n == 0 {
        acc = vec![BigRational::one()];
    }
    acc
}

/// Count (distinct positive, distinct negative) real roots via a Sturm
/// chain. Works for non-square-free input; the constant term must be
/// nonzero.
fn sturm_pos_neg(f: &Poly) -> (i64, i64) {
    assert!(!f[0].is_zero(), "zero roots must be stripped first");
    if p_deg(f) == 0 {
        return (0, 0);
    }
    let f0 = p_pos_normalize(f);
    let mut chain = vec![f0.clone(), p_deriv(&f0)];
    while !chain.last().unwrap().is_empty() {
        let k = chain.len();
        let r = p_rem(&chain[k - 2], &chain[k - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(p_pos_normalize(&p_neg(&r)));
    }
    // Cauchy bound: every root has |x| < 1 + max |a_i| / |a_d|
    let lc = f0.last().unwrap().abs();
    let mx = f0
        .iter()
        .take(f0.len() - 1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    let bound = BigRational::one() + mx / lc;
    let variations = |x: &BigRational| -> i64 {
        let mut last = 0i8;
        let mut v = 0i64;
        for g in &chain {
            let val = p_eval(g, x);
            let s = if val.is_zero() {
                0
            } else if val.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    };
    let zero = BigRational::zero();
    let v_neg = variations(&-&bound);
    let v_zero = variations(&zero);
    let v_pos = variations(&bound);
    (v_zero - v_pos, v_neg - v_zero)
}

/// Signature of a symmetric integer matrix via the characteristic
/// polynomial: repeated gcd with the derivative peels multiplicities, and
/// each layer is counted by a Sturm chain.
pub fn sturm_signature(m: &IntMatrix) -> Result<i64> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if m.n() == 0 {
        return Ok(0);
    }
    let f = charpoly(m);
    let zeros = f.iter().take_while(|c| c.is_zero()).count();
    let mut h = p_norm(f[zeros..].to_vec());
    let mut sigma = 0i64;
    while p_deg(&h) >= 1 {
        let (pos, neg) = sturm_pos_neg(&h);
        sigma += pos - neg;
        h = p_gcd(&h, &p_deriv(&h));
    }
    Ok(sigma)
}

// ---------------------------------------------------------------------------
// Random generators shared by the criteria and the property tests.

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntMatrix {
    let mut m = IntMatrix::zero(n);
    for i in 0..n {
        for j in i..n {
            let v = BigInt::from(rng.gen_range(lo..=hi));
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

/// A random valid diagram with nonsingular linking matrix and two
/// components.
pub fn random_diagram(rng: &mut ChaCha8Rng) -> SurgeryDiagram {
    loop {
        let n = rng.gen_range(1..=5usize);
        let mut knots = Vec::with_capacity(n);
        for _ in 0..n {
            let mut tb = rng.gen_range(-6..=6i64);
            if tb == 0 {
                tb = -1;
            }
            let mut rot = rng.gen_range(-5..=5i64);
            if (tb + rot) % 2 == 0 {
                rot += 1;
            }
            let coeff = if rng.gen_bool(0.5) { 1 } else { -1 };
            knots.push(SurgeryKnot {
                tb_pre: tb,
                rot_pre: rot,
                coeff,
            });
        }
        let mut offdiag = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(-2..=2i64);
                offdiag[i][j] = v;
                offdiag[j][i] = v;
            }
        }
        let mut components = Vec::new();
        for _ in 0..2 {
            let tb = rng.gen_range(-5..=5i64);
            let mut rot = rng.gen_range(-5..=5i64);
            if (tb + rot) % 2 == 0 {
                rot += 1;
            }
            let lk_vec = (0..n).map(|_| rng.gen_range(-2..=2i64)).collect();
            components.push(ComponentKnot {
                tb_pre: tb,
                rot_pre: rot,
                lk_vec,
                orientation_label: String::new(),
            });
        }
        let v = Rational::from_int(rng.gen_range(-2..=2i64));
        let lk_pre = vec![
            vec![Rational::zero(), v.clone()],
            vec![v, Rational::zero()],
        ];
        let d = match SurgeryDiagram::new(knots, offdiag, components, lk_pre, false) {
            Ok(d) => d,
            Err(_) => continue,
        };
        if d.linking_matrix().det().is_zero() {
            continue;
        }
        return d;
    }
}

// ---------------------------------------------------------------------------
// Criteria.

/// Slope-count pipeline against the closed forms on a sign-complete grid.
pub fn c1_tight_counts() -> Result<String> {
    let start = Instant::now();
    let mut checked = 0u32;
    for t0 in -8..=8 {
        for t1 in -8..=8 {
            let got = count_tight(t0, t1)?;
            let want = closed_form_count(t0, t1);
            if got != want {
                return Err(mismatch(format!("count_tight({t0},{t1})"), got, want));
            }
            checked += 1;
        }
    }
    let dt = start.elapsed();
    if dt > Duration::from_secs(1) {
        return Err(mismatch("c1 runtime", format!("{dt:?}"), "under 1s"));
    }
    Ok(format!("{checked} slope pairs in {dt:?}"))
}

/// Continued-fraction identities, exact two-block composition with random
/// tails, and round-trips through large random slopes.
pub fn c2_cfrac_identities() -> Result<String> {
    // [-2 repeated p] evaluates to -(p+1)/p
    for p in 1..=12i64 {
        let want = Rational::new(-(p + 1), p)?;
        let c = CFrac::from_ints(&vec![-2; p as usize])?;
        if c.eval() != want {
            return Err(mismatch(format!("[-2 x {p}]"), c.eval(), want));
        }
        let back = cfrac(&want)?;
        if back.entries() != c.entries() {
            return Err(mismatch(format!("cfrac(-(p+1)/p), p={p}"), back, c));
        }
    }
    // [-2 x p, -3] evaluates to -(2p+3)/(2p+1)
    for p in 1..=12i64 {
        let mut entries = vec![-2i64; p as usize];
        entries.push(-3);
        let c = CFrac::from_ints(&entries)?;
        let want = Rational::new(-(2 * p + 3), 2 * p + 1)?;
        if c.eval() != want {
            return Err(mismatch(format!("[-2 x {p}, -3]"), c.eval(), want));
        }
    }
    // two-block composition against random tails: prepending p twos maps
    // a/b to -((p+1)a + pb) / (pa + (p-1)b)
    let mut rng = seeded_rng(0x1e9_40f1);
    for _ in 0..100 {
        let len = rng.gen_range(1..=5usize);
        let tail: Vec<i64> = (0..len).map(|_| rng.gen_range(-9..=-2i64)).collect();
        let tail_val = CFrac::from_ints(&tail)?.eval();
        let a = tail_val.numer().clone();
        let b = tail_val.denom().clone();
        for p in 1..=6i64 {
            let mut entries = vec![-2i64; p as usize];
            entries.extend_from_slice(&tail);
            let got = CFrac::from_ints(&entries)?.eval();
            let num = -(&a * (p + 1) + &b * p);
            let den = &a * p + &b * (p - 1);
            let want = Rational::ratio(num, den)?;
            if got != want {
                return Err(mismatch(
                    format!("[-2 x {p}] + tail {tail:?}"),
                    got,
                    want,
                ));
            }
        }
    }
    // round-trips on random slopes below -1 with numerators up to 10^6
    let mut max_len = 0usize;
    for _ in 0..1000 {
        let den = rng.gen_range(1..=999_999i64);
        let num = rng.gen_range(-1_000_000..=-(den + 1));
        let s = Rational::new(num, den)?;
        let c = cfrac(&s)?;
        if c.eval() != s {
            return Err(mismatch(format!("round-trip {s}"), c.eval(), s));
        }
        if c.tight_count() < BigInt::one() {
            return Err(mismatch(format!("tight count of {c}"), c.tight_count(), ">= 1"));
        }
        max_len = max_len.max(c.len());
    }
    Ok(format!(
        "24 fixed identities, 100 random tails x 6 prefixes, 1000 round-trips (max length {max_len})"
    ))
}

/// The three reference d3 values for the empty and Lutz-twist diagrams.
pub fn c3_d3_references() -> Result<String> {
    let empty = SurgeryDiagram::new(Vec::new(), Vec::new(), Vec::new(), Vec::new(), true)?;
    let d3 = empty.d3_after()?;
    if d3 != Rational::new(-1, 2)? {
        return Err(mismatch("empty diagram d3", d3, "-1/2"));
    }
    for (id, want) in [
        (FamilyId::LutzNeg, Rational::new(1, 2)?),
        (FamilyId::LutzPos, Rational::new(-3, 2)?),
    ] {
        let inst = id.instantiate()?;
        let d3 = inst.diagram.d3_after()?;
        if d3 != want {
            return Err(mismatch(format!("{id} d3"), d3, want));
        }
        inst.verify()?;
    }
    Ok("empty -1/2, negative twist 1/2, positive twist -3/2".into())
}

fn chern_square(d: &SurgeryDiagram) -> Result<Rational> {
    let m = d.linking_matrix();
    let rot: Vec<BigInt> = d.knots().iter().map(|k| BigInt::from(k.rot_pre)).collect();
    Ok(dot(&m.solve(&rot)?, &rot))
}

/// The worked mirror-pair diagrams at slopes (3,1) and the zero-slope
/// family, with every intermediate constant pinned.
pub fn c4_golden_diagrams() -> Result<String> {
    let left = FamilyId::C2_31 { side: Side::Left }.instantiate()?;
    let m = left.diagram.linking_matrix();
    if m.det() != BigInt::one() {
        return Err(mismatch("det M", m.det(), 1));
    }
    for (i, want) in [(0usize, 6i64), (1, 2)] {
        let ext = left.diagram.extended_matrix(i)?.det();
        if ext != BigInt::from(want) {
            return Err(mismatch(format!("det of bordered matrix {i}"), ext, want));
        }
    }
    if m.signature()? != 0 {
        return Err(mismatch("signature", m.signature()?, 0));
    }
    if chern_square(&left.diagram)? != Rational::from_int(-8) {
        return Err(mismatch("c^2", chern_square(&left.diagram)?, -8));
    }
    if left.diagram.d3_after()? != Rational::new(-1, 2)? {
        return Err(mismatch("left d3", left.diagram.d3_after()?, "-1/2"));
    }
    let row = (
        left.diagram.tb_after(0)?,
        left.diagram.rot_after(0)?,
        left.diagram.tb_after(1)?,
        left.diagram.rot_after(1)?,
    );
    let want = (
        Rational::from_int(3),
        Rational::from_int(4),
        Rational::from_int(1),
        Rational::from_int(2),
    );
    if row != want {
        return Err(mismatch("left canonical row", format!("{row:?}"), "(3,4,1,2)"));
    }
    left.verify()?;

    let right = FamilyId::C2_31 { side: Side::Right }.instantiate()?;
    if !right.diagram.rot_after(0)?.is_zero() || !right.diagram.rot_after(1)?.is_zero() {
        return Err(mismatch(
            "right rotation pair",
            format!("({},{})", right.diagram.rot_after(0)?, right.diagram.rot_after(1)?),
            "(0,0)",
        ));
    }
    if chern_square(&right.diagram)? != Rational::zero() {
        return Err(mismatch("right c^2", chern_square(&right.diagram)?, 0));
    }
    if right.diagram.d3_after()? != Rational::new(3, 2)? {
        return Err(mismatch("right d3", right.diagram.d3_after()?, "3/2"));
    }
    right.verify()?;

    for n in 2..=8i64 {
        let inst = FamilyId::D { n }.instantiate()?;
        let m = inst.diagram.linking_matrix();
        if m.signature()? != n - 1 {
            return Err(mismatch(format!("D(n={n}) signature"), m.signature()?, n - 1));
        }
        if chern_square(&inst.diagram)? != Rational::from_int(n - 1) {
            return Err(mismatch(
                format!("D(n={n}) c^2"),
                chern_square(&inst.diagram)?,
                n - 1,
            ));
        }
        if inst.diagram.d3_after()? != Rational::new(1, 2)? {
            return Err(mismatch(format!("D(n={n}) d3"), inst.diagram.d3_after()?, "1/2"));
        }
        // canonical orientation lands on (0,-1,2-n,n-1)
        let tb0 = inst.diagram.tb_after(0)?;
        let r0 = inst.diagram.rot_after(0)?;
        let tb1 = inst.diagram.tb_after(1)?;
        let r1 = inst.diagram.rot_after(1)?;
        let got = format!("({tb0},{r0},{tb1},{r1})");
        let want = format!("(0,-1,{},{})", 2 - n, n - 1);
        if got != want {
            return Err(mismatch(format!("D(n={n}) canonical row"), got, want));
        }
        inst.verify()?;
    }
    Ok("mirror pair at (3,1) and zero-slope chains n=2..8".into())
}

fn sweep_ids() -> Vec<FamilyId> {
    let mut ids = Vec::new();
    for k in 0..=4 {
        for l in 0..=4 {
            if k + l >= 1 {
                for n in 0..=5 {
                    ids.push(FamilyId::B1 { k, l, n });
                }
            }
        }
    }
    for k in 0..=6 {
        for l in 0..=(6 - k) {
            ids.push(FamilyId::B2 { k, l });
        }
    }
    for side in [Side::Left, Side::Right] {
        ids.push(FamilyId::C2_31 { side });
        ids.push(FamilyId::C2_22 { side });
        for n in 0..=5 {
            ids.push(FamilyId::C3T01 { side, n });
        }
    }
    for variant in 1..=3 {
        for n in 0..=5 {
            ids.push(FamilyId::C3T02 { variant, n });
        }
    }
    for variant in 1..=4 {
        for n in 0..=4 {
            for m in 0..=4 {
                ids.push(FamilyId::C4 { variant, n, m });
            }
        }
    }
    for n in 2..=8 {
        ids.push(FamilyId::D { n });
    }
    ids.push(FamilyId::LutzNeg);
    ids.push(FamilyId::LutzPos);
    ids
}

/// Instantiate and fully verify a parameter sweep across every family.
pub fn c5_family_sweep() -> Result<String> {
    let start = Instant::now();
    let ids = sweep_ids();
    for id in &ids {
        id.instantiate()?.verify().map_err(|e| {
            mismatch(format!("family {id}"), e, "verification to pass")
        })?;
    }
    let dt = start.elapsed();
    if dt > Duration::from_secs(5) {
        return Err(mismatch("c5 runtime", format!("{dt:?}"), "under 5s"));
    }
    Ok(format!("{} instances in {dt:?}", ids.len()))
}

type RowKey = (i64, i64, Rational, ComponentType, ComponentType);

/// Enumeration sizes against the count pipeline, and enumerator rows
/// against the union of family realizations on every covered slope pair.
pub fn c6_enumerations() -> Result<String> {
    // cardinalities across the sign grid
    for t0 in -8..=8 {
        for t1 in -8..=8 {
            let rows = strongly_exceptional(t0, t1);
            if t0 < 0 && t1 < 0 {
                if !rows.is_empty() {
                    return Err(mismatch(format!("se({t0},{t1})"), rows.len(), 0));
                }
                continue;
            }
            if (t0, t1) == (1, 1) {
                if rows.len() != 1 {
                    return Err(mismatch("se(1,1)", rows.len(), 1));
                }
                continue;
            }
            match count_tight(t0, t1)? {
                TightCount::Finite(n) => {
                    if BigInt::from(rows.len()) != n {
                        return Err(mismatch(format!("se({t0},{t1}) size"), rows.len(), n));
                    }
                }
                TightCount::IntegralFamily => {
                    return Err(mismatch(
                        format!("count_tight({t0},{t1})"),
                        "integral family",
                        "a finite count",
                    ))
                }
            }
        }
    }
    // tight grid sizes
    for t0 in -6..=-1 {
        for t1 in -6..=-1 {
            let rows = tight_realizations(t0, t1)?;
            if rows.len() as i64 != t0 * t1 {
                return Err(mismatch(
                    format!("tight({t0},{t1}) size"),
                    rows.len(),
                    t0 * t1,
                ));
            }
        }
    }
    // positive-quadrant rows against the four signed patterns, written out
    // independently of the enumerator internals
    for t0 in 1..=6i64 {
        for t1 in 1..=6i64 {
            let (a, b) = (t0.max(t1), t0.min(t1));
            let mut patterns: BTreeSet<(i64, i64, Rational)> = BTreeSet::new();
            let neg_half = Rational::new(-1, 2)?;
            let three_halves = Rational::new(3, 2)?;
            let mut put = |ra: i64, rb: i64, d3: &Rational| {
                let (r0, r1) = if t0 >= t1 { (ra, rb) } else { (rb, ra) };
                patterns.insert((r0, r1, d3.clone()));
                patterns.insert((-r0, -r1, d3.clone()));
            };
            put(a + 1, b + 1, &neg_half);
            if a >= 3 || (a, b) == (2, 2) {
                put(a - 3, -(b - 1), &three_halves);
            }
            if a >= 3 && b >= 2 {
                put(a - 1, -(b - 3), &three_halves);
            }
            if a >= 3 && b >= 3 {
                put(a - 1, b - 1, &three_halves);
            }
            if (t0, t1) == (1, 1) {
                // only the vanishing-rotation representative exists there
                patterns = [(0, 0, Rational::new(1, 2)?)].into_iter().collect();
            }
            let got: BTreeSet<(i64, i64, Rational)> = strongly_exceptional(t0, t1)
                .into_iter()
                .map(|r| (r.r0, r.r1, r.ambient_d3))
                .collect();
            if got != patterns {
                return Err(mismatch(
                    format!("summary patterns at ({t0},{t1})"),
                    format!("{got:?}"),
                    format!("{patterns:?}"),
                ));
            }
        }
    }
    // family rows exhaust the enumerator on covered slope pairs
    let mut cells: BTreeMap<(i64, i64), BTreeSet<RowKey>> = BTreeMap::new();
    let mut add = |id: FamilyId| -> Result<()> {
        let inst = id.instantiate()?;
        let slopes = id.slopes()?;
        let entry = cells.entry(slopes).or_default();
        for row in inst.expected()? {
            entry.insert((row.r0, row.r1, row.d3, row.type0, row.type1));
        }
        Ok(())
    };
    for s in 1..=4 {
        for k in 0..=s {
            for n in 0..=3 {
                add(FamilyId::B1 { k, l: s - k, n })?;
            }
        }
    }
    for s in 0..=4 {
        for k in 0..=s {
            add(FamilyId::B2 { k, l: s - k })?;
        }
    }
    for side in [Side::Left, Side::Right] {
        add(FamilyId::C2_31 { side })?;
        add(FamilyId::C2_22 { side })?;
        for n in 0..=2 {
            add(FamilyId::C3T01 { side, n })?;
        }
    }
    for variant in 1..=3 {
        for n in 0..=2 {
            add(FamilyId::C3T02 { variant, n })?;
        }
    }
    for variant in 1..=4 {
        for n in 0..=2 {
            for m in 0..=2 {
                add(FamilyId::C4 { variant, n, m })?;
            }
        }
    }
    for n in 2..=8 {
        add(FamilyId::D { n })?;
    }
    let covered = cells.len();
    for ((t0, t1), set) in cells {
        let want: BTreeSet<RowKey> = strongly_exceptional(t0, t1)
            .into_iter()
            .map(|r| (r.r0, r.r1, r.ambient_d3, r.type0, r.type1))
            .collect();
        if set != want {
            return Err(mismatch(
                format!("family rows at ({t0},{t1})"),
                format!("{set:?}"),
                format!("{want:?}"),
            ));
        }
    }
    Ok(format!(
        "sizes match counts on the 17x17 grid; family rows exhaust {covered} slope pairs"
    ))
}

/// Twisting realization list sizes against the twisting counts, including
/// the diffeomorphism collapse and the zero-twisting boundary pattern.
pub fn c7_twisting() -> Result<String> {
    for n in 1..=5 {
        for (t0, t1) in [(2i64, 1i64), (-3, 2), (0, 4)] {
            let rows = twisting_realizations(t0, t1, n)?;
            if rows.len() != 2 {
                return Err(mismatch(format!("twisting({t0},{t1},{n})"), rows.len(), 2));
            }
            for diffeo in [false, true] {
                if count_twisting(t0, t1, n, diffeo)? != 2 {
                    return Err(mismatch(
                        format!("count_twisting({t0},{t1},{n},{diffeo})"),
                        count_twisting(t0, t1, n, diffeo)?,
                        2,
                    ));
                }
            }
        }
        // the +/- pair collapses exactly when the rotation pattern vanishes
        for (t0, t1, collapse_when_odd_n) in [(1i64, 1i64, true), (-1, -1, false)] {
            if count_twisting(t0, t1, n, true)? != 1 {
                return Err(mismatch(
                    format!("count_twisting({t0},{t1},{n},diffeo)"),
                    count_twisting(t0, t1, n, true)?,
                    1,
                ));
            }
            let rows = twisting_realizations(t0, t1, n)?;
            let want = if (n % 2 == 1) == collapse_when_odd_n {
                1
            } else {
                2
            };
            if rows.len() != want {
                return Err(mismatch(
                    format!("twisting({t0},{t1},{n}) size"),
                    rows.len(),
                    want,
                ));
            }
        }
    }
    // even cut index reproduces the zero-twisting rows at (2,1)
    let boundary: BTreeSet<(i64, i64, Rational)> = twisting_realizations(2, 1, 2)?
        .into_iter()
        .map(|r| (r.r0, r.r1, r.ambient_d3))
        .collect();
    let want: BTreeSet<(i64, i64, Rational)> = strongly_exceptional(2, 1)
        .into_iter()
        .map(|r| (r.r0, r.r1, r.ambient_d3))
        .collect();
    if boundary != want {
        return Err(mismatch(
            "twisting boundary rows at (2,1)",
            format!("{boundary:?}"),
            format!("{want:?}"),
        ));
    }
    Ok("five sign cases for n=1..5, collapse parity, boundary rows".into())
}

/// Signature oracle agreement, diagram invariance under relabeling, and
/// parity plus d3-range sanity across the enumerators.
pub fn c8_algebraic() -> Result<String> {
    let mut rng = seeded_rng(0x5e1f_c4ec);
    for round in 0..200 {
        let n = rng.gen_range(1..=5usize);
        let m = random_symmetric(&mut rng, n, -4, 4);
        let fast = m.signature()?;
        let slow = sturm_signature(&m)?;
        if fast != slow {
            return Err(mismatch(
                format!("signature of {m} (round {round})"),
                fast,
                slow,
            ));
        }
    }
    for round in 0..100 {
        let d = random_diagram(&mut rng);
        let n = d.num_knots();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let j = rng.gen_range(0..n);
        let base: Vec<Rational> = vec![
            d.tb_after(0)?,
            d.rot_after(0)?,
            d.tb_after(1)?,
            d.rot_after(1)?,
            d.d3_after()?,
            d.lk_after(0, 1)?,
        ];
        for variant in [d.permuted(&perm)?, d.with_knot_reversed(j)?] {
            let got: Vec<Rational> = vec![
                variant.tb_after(0)?,
                variant.rot_after(0)?,
                variant.tb_after(1)?,
                variant.rot_after(1)?,
                variant.d3_after()?,
                variant.lk_after(0, 1)?,
            ];
            if got != base {
                return Err(mismatch(
                    format!("relabeled diagram invariants (round {round})"),
                    format!("{got:?}"),
                    format!("{base:?}"),
                ));
            }
        }
    }
    // parity and d3 range over the enumerators
    let allowed = [
        Rational::new(-1, 2)?,
        Rational::new(1, 2)?,
        Rational::new(3, 2)?,
    ];
    for t0 in -6..=6 {
        for t1 in -6..=6 {
            for r in strongly_exceptional(t0, t1) {
                if (r.t0 + r.r0).rem_euclid(2) != 1 || (r.t1 + r.r1).rem_euclid(2) != 1 {
                    return Err(mismatch(format!("parity of {r}"), "even", "odd"));
                }
                if !allowed.contains(&r.ambient_d3) {
                    return Err(mismatch(
                        format!("d3 of {r}"),
                        r.ambient_d3.clone(),
                        "-1/2, 1/2, or 3/2",
                    ));
                }
            }
            if t0 < 0 && t1 < 0 {
                for r in tight_realizations(t0, t1)? {
                    if (r.t0 + r.r0).rem_euclid(2) != 1 || (r.t1 + r.r1).rem_euclid(2) != 1 {
                        return Err(mismatch(format!("parity of {r}"), "even", "odd"));
                    }
                }
            }
            for n in 1..=2 {
                for r in twisting_realizations(t0, t1, n)? {
                    if (r.t0 + r.r0).rem_euclid(2) != 1 || (r.t1 + r.r1).rem_euclid(2) != 1 {
                        return Err(mismatch(format!("parity of {r}"), "even", "odd"));
                    }
                }
            }
        }
    }
    Ok("200 signature oracles, 100 relabeled diagrams, grid parity and d3 range".into())
}
