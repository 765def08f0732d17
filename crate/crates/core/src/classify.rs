//! Enumerators for the Legendrian Hopf link classification: the tight
//! case, the strongly exceptional tables, the positive-twisting case, and
//! the loose case, together with the contact-cut closed forms they rest on.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Where a component's complement sits: tight ambient structure, loose
/// (overtwisted complement), or exceptional (tight complement).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentType {
    TightAmbient,
    Loose,
    Exceptional,
}

impl std::fmt::Display for ComponentType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ComponentType::TightAmbient => "tight",
            ComponentType::Loose => "loose",
            ComponentType::Exceptional => "exc",
        };
        write!(f, "{s}")
    }
}

/// One realized Hopf link: classical invariants of both components, the
/// ambient d3, and the twisting in the link complement.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Realization {
    pub t0: i64,
    pub r0: i64,
    pub t1: i64,
    pub r1: i64,
    pub ambient_d3: Rational,
    pub twisting: u32,
    pub type0: ComponentType,
    pub type1: ComponentType,
}

impl std::fmt::Display for Realization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{},{},{}) d3={} {}/{}",
            self.t0, self.r0, self.t1, self.r1, self.ambient_d3, self.type0, self.type1
        )?;
        if self.twisting > 0 {
            write!(f, " twist={}", self.twisting)?;
        }
        Ok(())
    }
}

fn half() -> Rational {
    Rational::new(1, 2).unwrap()
}

fn neg_half() -> Rational {
    Rational::new(-1, 2).unwrap()
}

fn three_halves() -> Rational {
    Rational::new(3, 2).unwrap()
}

/// Exceptional unknots exist exactly for tb = n >= 1 with rot = +/-(n-1).
pub fn exceptional_unknot_check(tb: i64, rot: i64) -> bool {
    tb >= 1 && rot.abs() == tb - 1
}

/// An unknot component is exceptional only in the d3 = 1/2 structure and
/// only with the invariants the unknot classification allows.
pub(crate) fn component_type(d3: &Rational, tb: i64, rot: i64) -> ComponentType {
    if *d3 == half() && exceptional_unknot_check(tb, rot) {
        ComponentType::Exceptional
    } else {
        ComponentType::Loose
    }
}

fn sorted_dedup(mut rows: Vec<Realization>) -> Vec<Realization> {
    rows.sort();
    rows.dedup();
    rows
}

/// Hopf links in the tight S^3: tb must be negative and every rotation
/// number in the stabilization range appears, independently per component.
pub fn tight_realizations(t0: i64, t1: i64) -> Result<Vec<Realization>> {
    if t0 >= 0 || t1 >= 0 {
        return Err(Error::OutOfRange(format!(
            "tight realizations need t0, t1 < 0, got ({t0},{t1})"
        )));
    }
    let mut out = Vec::new();
    let mut r0 = t0 + 1;
    while r0 <= -t0 - 1 {
        let mut r1 = t1 + 1;
        while r1 <= -t1 - 1 {
            out.push(Realization {
                t0,
                r0,
                t1,
                r1,
                ambient_d3: neg_half(),
                twisting: 0,
                type0: ComponentType::TightAmbient,
                type1: ComponentType::TightAmbient,
            });
            r1 += 2;
        }
        r0 += 2;
    }
    Ok(sorted_dedup(out))
}

/// The mixed-sign enumerator steps r0 through the values l-k-(-1)^t1 for
/// k+l = -t0, which keeps t0+r0 odd; a naive arithmetic range from t0 to
/// -t0 would break that parity.
pub const B1_RANGE_NOTE: &str =
    "r0 runs over l-k-(-1)^t1 for k+l = -t0 (parity-consistent coupling), \
     not over an arithmetic range from t0 to -t0";

/// Strongly exceptional realizations (overtwisted ambient structure, tight
/// link complement, zero twisting). Empty when both t's are negative:
/// those pairs live in the tight S^3 instead.
pub fn strongly_exceptional(t0_in: i64, t1_in: i64) -> Vec<Realization> {
    if t0_in < 0 && t1_in < 0 {
        return Vec::new();
    }
    // role order: a zero first, else the negative first, else descending
    let swapped = if t0_in == 0 || t1_in == 0 {
        t0_in != 0
    } else if t0_in < 0 || t1_in < 0 {
        t1_in < 0
    } else {
        t0_in < t1_in
    };
    let (t0, t1) = if swapped { (t1_in, t0_in) } else { (t0_in, t1_in) };

    // rows as (r0, r1, d3) in the normalized roles
    let mut rows: Vec<(i64, i64, Rational)> = Vec::new();
    if t0 == 0 {
        for e in [1i64, -1] {
            rows.push((e, e * (t1 - 1), half()));
        }
    } else if t0 < 0 {
        if t1 == 1 {
            let mut v = 1 - t0;
            while v >= t0 - 1 {
                rows.push((v, 0, half()));
                v -= 2;
            }
        } else {
            // t1 >= 2; r1 determines the overall sign choice
            let s = if t1 % 2 == 0 { 1i64 } else { -1 };
            let mut v = -t0;
            while v >= t0 {
                for e in [1i64, -1] {
                    rows.push((e * (v - s), -e * s * (t1 - 1), half()));
                }
                v -= 2;
            }
        }
    } else if (t0, t1) == (1, 1) {
        rows.push((0, 0, half()));
    } else {
        // both positive, t0 >= t1, not (1,1)
        for e in [1i64, -1] {
            rows.push((e * (t0 + 1), e * (t1 + 1), neg_half()));
        }
        if t0 >= 3 || (t0, t1) == (2, 2) {
            for e in [1i64, -1] {
                rows.push((e * (t0 - 3), e * (1 - t1), three_halves()));
            }
        }
        if t0 >= 3 && t1 >= 2 {
            for e in [1i64, -1] {
                rows.push((e * (t0 - 1), e * (3 - t1), three_halves()));
            }
        }
        if t0 >= 3 && t1 >= 3 {
            for e in [1i64, -1] {
                rows.push((e * (t0 - 1), e * (t1 - 1), three_halves()));
            }
        }
    }

    let out = rows
        .into_iter()
        .map(|(r0, r1, d3)| {
            let (r0, r1) = if swapped { (r1, r0) } else { (r0, r1) };
            Realization {
                t0: t0_in,
                r0,
                t1: t1_in,
                r1,
                type0: component_type(&d3, t0_in, r0),
                type1: component_type(&d3, t1_in, r1),
                ambient_d3: d3,
                twisting: 0,
            }
        })
        .collect();
    sorted_dedup(out)
}

/// Minimal cut index admitting a Hopf pairing for the given signs:
/// 2 when both arguments are positive, 0 when both are negative, 1 in
/// every mixed or zero case. Only the signs of a and b matter.
pub fn min_alpha_index(a: i64, b: i64) -> u32 {
    if a > 0 && b > 0 {
        2
    } else if a < 0 && b < 0 {
        0
    } else {
        1
    }
}

/// Hopf links with positive twisting n in the link complement. The cut
/// index is p = n + min_alpha_index; its parity picks the sign-coupled
/// rotation pattern and the ambient structure. Both components are loose.
pub fn twisting_realizations(t0: i64, t1: i64, n: i64) -> Result<Vec<Realization>> {
    if n < 1 {
        return Err(Error::OutOfRange(format!("twisting must be >= 1, got {n}")));
    }
    let p = n + i64::from(min_alpha_index(t0, t1));
    let (d3, pair) = if p % 2 == 0 {
        (neg_half(), (t0 + 1, t1 + 1))
    } else {
        (half(), (t0 - 1, -(t1 - 1)))
    };
    let mut out = Vec::new();
    for e in [1i64, -1] {
        out.push(Realization {
            t0,
            r0: e * pair.0,
            t1,
            r1: e * pair.1,
            ambient_d3: d3.clone(),
            twisting: n as u32,
            type0: ComponentType::Loose,
            type1: ComponentType::Loose,
        });
    }
    Ok(sorted_dedup(out))
}

/// Loose Hopf links are classified by their classical invariants and the
/// ambient d3 alone; existence needs only the parity condition.
pub fn loose_realization_exists(
    t0: i64,
    r0: i64,
    t1: i64,
    r1: i64,
    d: &Rational,
) -> Result<bool> {
    if !d.is_half_integer() {
        return Err(Error::NotHalfInteger(d.to_string()));
    }
    Ok((t0 + r0) % 2 != 0 && (t1 + r1) % 2 != 0)
}

/// Moves on the classical invariants of a loose knot.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LooseMove {
    /// positive stabilization: (tb, rot) -> (tb-1, rot+1)
    StabPos,
    /// negative stabilization: (tb, rot) -> (tb-1, rot-1)
    StabNeg,
    /// connected sum with the (1,0) exceptional unknot: (tb, rot) -> (tb+2, rot)
    SumK10,
}

impl std::fmt::Display for LooseMove {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LooseMove::StabPos => "stab+",
            LooseMove::StabNeg => "stab-",
            LooseMove::SumK10 => "sumK10",
        };
        write!(f, "{s}")
    }
}

pub fn apply_loose_move(state: (i64, i64), m: LooseMove) -> (i64, i64) {
    let (tb, rot) = state;
    match m {
        LooseMove::StabPos => (tb - 1, rot + 1),
        LooseMove::StabNeg => (tb - 1, rot - 1),
        LooseMove::SumK10 => (tb + 2, rot),
    }
}

/// A move sequence from start to target: stabilizations adjust rot, then
/// sums with the (1,0) unknot raise tb; a remaining tb deficit is burned
/// with cancelling stabilization pairs.
pub fn loose_plan(start: (i64, i64), target: (i64, i64)) -> Result<Vec<LooseMove>> {
    for (tb, rot) in [start, target] {
        if (tb + rot) % 2 == 0 {
            return Err(Error::ParityViolation(format!(
                "loose unknots need tb + rot odd, got ({tb},{rot})"
            )));
        }
    }
    let drot = target.1 - start.1;
    let mut moves = Vec::new();
    for _ in 0..drot.max(0) {
        moves.push(LooseMove::StabPos);
    }
    for _ in 0..(-drot).max(0) {
        moves.push(LooseMove::StabNeg);
    }
    // tb still to gain after the stabilizations above
    let need = target.0 - start.0 + drot.abs();
    debug_assert_eq!(need % 2, 0, "parity guaranteed above");
    if need >= 0 {
        for _ in 0..need / 2 {
            moves.push(LooseMove::SumK10);
        }
    } else {
        for _ in 0..(-need) / 2 {
            moves.push(LooseMove::StabPos);
            moves.push(LooseMove::StabNeg);
        }
    }
    Ok(moves)
}

/// A Legendrian (a, b)-torus knot on the Hopf-pairing torus at cut index p,
/// with a choice of orientation sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TorusKnotSpec {
    pub a: i64,
    pub b: i64,
    pub positive: bool,
    pub p: u32,
}

impl TorusKnotSpec {
    pub fn new(a: i64, b: i64, positive: bool, p: u32) -> Result<Self> {
        if a.gcd(&b) != 1 {
            return Err(Error::NotCoprime(a, b));
        }
        Ok(TorusKnotSpec { a, b, positive, p })
    }

    /// (tb, rot) = (ab, +/-(a + (-1)^p b)).
    pub fn invariants(&self) -> (i64, i64) {
        let mag = self.a + if self.p % 2 == 0 { self.b } else { -self.b };
        let rot = if self.positive { mag } else { -mag };
        (self.a * self.b, rot)
    }
}

/// Constants of the cut model at index p: the ambient d3, the self-linking
/// number of the binding circles, and the Hopf invariant h = -d3 - 1/2.
pub fn cut_model_constants(p: u32) -> (Rational, i64, i64) {
    if p % 2 == 0 {
        (neg_half(), -1, 0)
    } else {
        (half(), 1, -1)
    }
}

/// d3 of a connected sum: d + d' + 1/2.
pub fn d3_connected_sum(d: &Rational, dp: &Rational) -> Result<Rational> {
    for v in [d, dp] {
        if !v.is_half_integer() {
            return Err(Error::NotHalfInteger(v.to_string()));
        }
    }
    Ok(d + dp + half())
}

/// Self-linking number of the positive transverse push-off.
pub fn sl_pushoff(tb: i64, rot: i64) -> i64 {
    tb - rot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pairs(rows: &[Realization]) -> Vec<(i64, i64, Rational)> {
        rows.iter()
            .map(|r| (r.r0, r.r1, r.ambient_d3.clone()))
            .collect()
    }

    #[test]
    fn unique_exceptional_pair() {
        let rows = strongly_exceptional(1, 1);
        assert_eq!(rows.len(), 1);
        let r = &rows[0];
        assert_eq!((r.t0, r.r0, r.t1, r.r1), (1, 0, 1, 0));
        assert_eq!(r.ambient_d3, rat("1/2"));
        assert_eq!(r.type0, ComponentType::Exceptional);
        assert_eq!(r.type1, ComponentType::Exceptional);
        assert_eq!(r.to_string(), "(1,0,1,0) d3=1/2 exc/exc");
    }

    #[test]
    fn zero_negative_pair() {
        let rows = strongly_exceptional(0, -3);
        assert_eq!(
            pairs(&rows),
            vec![(-1, 4, rat("1/2")), (1, -4, rat("1/2"))]
        );
        for r in &rows {
            assert_eq!(r.type0, ComponentType::Loose);
            assert_eq!(r.type1, ComponentType::Loose);
        }
    }

    #[test]
    fn mixed_sign_six_rows() {
        let rows = strongly_exceptional(-2, 3);
        assert_eq!(rows.len(), 6);
        let mut got = pairs(&rows);
        got.sort();
        let mut want: Vec<(i64, i64, Rational)> = vec![
            (3, 2, rat("1/2")),
            (1, 2, rat("1/2")),
            (-1, 2, rat("1/2")),
            (-3, -2, rat("1/2")),
            (-1, -2, rat("1/2")),
            (1, -2, rat("1/2")),
        ];
        want.sort();
        assert_eq!(got, want);
        for r in &rows {
            assert_eq!(r.type0, ComponentType::Loose);
            assert_eq!(r.type1, ComponentType::Exceptional);
            assert!(exceptional_unknot_check(r.t1, r.r1));
        }
    }

    #[test]
    fn role_swap_mirrors_rows() {
        let a = strongly_exceptional(-2, 3);
        let b = strongly_exceptional(3, -2);
        let mut mirrored: Vec<(i64, i64)> = b.iter().map(|r| (r.r1, r.r0)).collect();
        mirrored.sort();
        let mut direct: Vec<(i64, i64)> = a.iter().map(|r| (r.r0, r.r1)).collect();
        direct.sort();
        assert_eq!(mirrored, direct);
    }

    #[test]
    fn both_negative_is_empty() {
        assert!(strongly_exceptional(-2, -3).is_empty());
        assert!(strongly_exceptional(-1, -1).is_empty());
    }

    #[test]
    fn positive_pairs_match_counts() {
        // (2,1): only the +/-(t+1) pattern
        let rows = strongly_exceptional(2, 1);
        assert_eq!(
            pairs(&rows),
            vec![(-3, -2, rat("-1/2")), (3, 2, rat("-1/2"))]
        );

        // (3,1): the degenerate (0,0) row collapses, leaving 3
        let rows = strongly_exceptional(3, 1);
        assert_eq!(rows.len(), 3);
        assert!(rows
            .iter()
            .any(|r| (r.r0, r.r1) == (0, 0) && r.ambient_d3 == rat("3/2")));

        // (2,2): 4 rows
        let rows = strongly_exceptional(2, 2);
        let mut got = pairs(&rows);
        got.sort();
        let mut want = vec![
            (3, 3, rat("-1/2")),
            (-3, -3, rat("-1/2")),
            (1, 1, rat("3/2")),
            (-1, -1, rat("3/2")),
        ];
        want.sort();
        assert_eq!(got, want);

        // all marked loose: no exceptional unknot lives outside d3 = 1/2
        for r in strongly_exceptional(3, 3) {
            assert_eq!(r.type0, ComponentType::Loose);
        }
    }

    #[test]
    fn negative_one_one_single_column() {
        // b2 case: rows (v, 0) for v in the parity range
        let rows = strongly_exceptional(-1, 1);
        assert_eq!(
            pairs(&rows),
            vec![(-2, 0, rat("1/2")), (0, 0, rat("1/2")), (2, 0, rat("1/2"))]
        );
        for r in &rows {
            assert_eq!(r.type1, ComponentType::Exceptional);
            assert_eq!(r.type0, ComponentType::Loose);
        }
    }

    #[test]
    fn tight_grid() {
        let rows = tight_realizations(-1, -1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].r0, rows[0].r1), (0, 0));
        assert_eq!(rows[0].ambient_d3, rat("-1/2"));
        assert_eq!(rows[0].type0, ComponentType::TightAmbient);

        let rows = tight_realizations(-2, -1).unwrap();
        let got: Vec<(i64, i64)> = rows.iter().map(|r| (r.r0, r.r1)).collect();
        assert_eq!(got, vec![(-1, 0), (1, 0)]);

        assert_eq!(tight_realizations(-2, -3).unwrap().len(), 6);
        assert!(tight_realizations(0, -1).is_err());
        assert!(tight_realizations(-1, 2).is_err());
    }

    #[test]
    fn twisting_cases() {
        // both positive, even cut index
        let rows = twisting_realizations(2, 1, 2).unwrap();
        let got: Vec<(i64, i64)> = rows.iter().map(|r| (r.r0, r.r1)).collect();
        assert_eq!(got, vec![(-3, -2), (3, 2)]);
        assert!(rows.iter().all(|r| r.ambient_d3 == rat("-1/2")));
        assert!(rows.iter().all(|r| r.twisting == 2));
        assert!(rows.iter().all(|r| r.type0 == ComponentType::Loose));

        // coincident sign choices collapse
        let rows = twisting_realizations(1, 1, 1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].r0, rows[0].r1), (0, 0));
        assert_eq!(rows[0].ambient_d3, rat("1/2"));
        assert_eq!(rows[0].to_string(), "(1,0,1,0) d3=1/2 loose/loose twist=1");

        let rows = twisting_realizations(-1, -1, 2).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].r0, rows[0].r1), (0, 0));
        assert_eq!(rows[0].ambient_d3, rat("-1/2"));

        // both negative, odd cut index
        let rows = twisting_realizations(-1, -1, 1).unwrap();
        let got: Vec<(i64, i64)> = rows.iter().map(|r| (r.r0, r.r1)).collect();
        assert_eq!(got, vec![(-2, 2), (2, -2)]);
        assert!(rows.iter().all(|r| r.ambient_d3 == rat("1/2")));

        // a zero slope shifts the index by one
        let rows = twisting_realizations(0, 4, 1).unwrap();
        let got: Vec<(i64, i64)> = rows.iter().map(|r| (r.r0, r.r1)).collect();
        assert_eq!(got, vec![(-1, -5), (1, 5)]);
        assert!(rows.iter().all(|r| r.ambient_d3 == rat("-1/2")));

        assert!(twisting_realizations(2, 1, 0).is_err());
        assert!(twisting_realizations(2, 1, -3).is_err());
    }

    #[test]
    fn twisting_swap_consistency() {
        for (t0, t1, n) in [(2, 1, 1), (2, 1, 2), (0, 4, 3), (-3, 2, 2), (-1, -1, 1)] {
            let a = twisting_realizations(t0, t1, n).unwrap();
            let b = twisting_realizations(t1, t0, n).unwrap();
            let mut swapped: Vec<(i64, i64)> = b.iter().map(|r| (r.r1, r.r0)).collect();
            swapped.sort();
            let mut direct: Vec<(i64, i64)> = a.iter().map(|r| (r.r0, r.r1)).collect();
            direct.sort();
            assert_eq!(swapped, direct, "({t0},{t1},{n})");
        }
    }

    #[test]
    fn loose_existence() {
        assert!(loose_realization_exists(0, 1, 0, 1, &rat("-1/2")).unwrap());
        assert!(!loose_realization_exists(0, 0, 1, 0, &rat("1/2")).unwrap());
        assert!(loose_realization_exists(-5, 2, 3, 0, &rat("3/2")).unwrap());
        assert!(!loose_realization_exists(-5, 1, 3, 0, &rat("3/2")).unwrap());
        assert!(matches!(
            loose_realization_exists(0, 1, 0, 1, &rat("1")),
            Err(Error::NotHalfInteger(_))
        ));
        assert!(matches!(
            loose_realization_exists(0, 1, 0, 1, &rat("1/4")),
            Err(Error::NotHalfInteger(_))
        ));
    }

    #[test]
    fn loose_plans() {
        use LooseMove::*;
        assert_eq!(loose_plan((-1, 0), (-3, 0)).unwrap(), vec![StabPos, StabNeg]);
        assert_eq!(loose_plan((-1, 0), (1, 0)).unwrap(), vec![SumK10]);
        assert_eq!(loose_plan((-1, 0), (0, 1)).unwrap(), vec![StabPos, SumK10]);
        assert!(matches!(loose_plan((0, 0), (1, 0)), Err(Error::ParityViolation(_))));
        assert!(matches!(loose_plan((1, 0), (1, 1)), Err(Error::ParityViolation(_))));
    }

    #[test]
    fn loose_plan_replays_to_target() {
        let cases = [
            ((-1, 0), (7, -4)),
            ((4, 1), (-6, 3)),
            ((3, 0), (3, 0)),
            ((-5, 2), (-5, -2)),
            ((0, 9), (2, -7)),
        ];
        for (start, target) in cases {
            let plan = loose_plan(start, target).unwrap();
            let mut state = start;
            for m in &plan {
                state = apply_loose_move(state, *m);
            }
            assert_eq!(state, target, "{start:?} -> {target:?} via {plan:?}");
        }
    }

    #[test]
    fn torus_knot_invariants() {
        assert_eq!(
            TorusKnotSpec::new(1, 1, true, 2).unwrap().invariants(),
            (1, 2)
        );
        assert_eq!(
            TorusKnotSpec::new(1, 1, false, 0).unwrap().invariants(),
            (1, -2)
        );
        assert_eq!(
            TorusKnotSpec::new(2, 3, true, 1).unwrap().invariants(),
            (6, -1)
        );
        assert!(matches!(
            TorusKnotSpec::new(2, 4, true, 0),
            Err(Error::NotCoprime(2, 4))
        ));
    }

    #[test]
    fn cut_constants_and_sl() {
        assert_eq!(cut_model_constants(0), (rat("-1/2"), -1, 0));
        assert_eq!(cut_model_constants(1), (rat("1/2"), 1, -1));
        assert_eq!(cut_model_constants(4), (rat("-1/2"), -1, 0));

        // transverse push-off of the p = 1 core circle has sl = (-1)^{p+1}
        let (tb, rot) = TorusKnotSpec::new(1, 1, true, 1).unwrap().invariants();
        assert_eq!(sl_pushoff(tb, rot), 1);
        assert_eq!(cut_model_constants(1).1, 1);

        assert_eq!(sl_pushoff(-1, 0), -1);
        assert_eq!(sl_pushoff(1, 0), 1);
        assert_eq!(sl_pushoff(0, 0), 0);
    }

    #[test]
    fn connected_sum_d3() {
        assert_eq!(
            d3_connected_sum(&rat("-1/2"), &rat("-1/2")).unwrap(),
            rat("-1/2")
        );
        assert_eq!(
            d3_connected_sum(&rat("1/2"), &rat("-3/2")).unwrap(),
            rat("-1/2")
        );
        // k copies of 1/2 sum to k - 1/2
        let mut acc = rat("1/2");
        for k in 2..=5 {
            acc = d3_connected_sum(&acc, &rat("1/2")).unwrap();
            assert_eq!(acc, Rational::new(2 * k - 1, 2).unwrap());
        }
        assert!(d3_connected_sum(&rat("1"), &rat("1/2")).is_err());
    }

    #[test]
    fn alpha_index() {
        assert_eq!(min_alpha_index(3, 5), 2);
        assert_eq!(min_alpha_index(-2, -7), 0);
        assert_eq!(min_alpha_index(0, 4), 1);
        assert_eq!(min_alpha_index(0, 0), 1);
        assert_eq!(min_alpha_index(-1, 3), 1);
        assert_eq!(min_alpha_index(0, -2), 1);
    }

    #[test]
    fn unknot_check() {
        assert!(exceptional_unknot_check(1, 0));
        assert!(!exceptional_unknot_check(-1, 0));
        assert!(exceptional_unknot_check(5, 4));
        assert!(exceptional_unknot_check(5, -4));
        assert!(!exceptional_unknot_check(0, 1));
        assert!(!exceptional_unknot_check(2, 2));
    }

    #[test]
    fn enumerated_rows_satisfy_parity_and_d3_range() {
        let allowed = [rat("-1/2"), rat("1/2"), rat("3/2")];
        for t0 in -4..=4 {
            for t1 in -4..=4 {
                for r in strongly_exceptional(t0, t1) {
                    assert_eq!((r.t0 + r.r0).rem_euclid(2), 1, "{r}");
                    assert_eq!((r.t1 + r.r1).rem_euclid(2), 1, "{r}");
                    assert!(allowed.contains(&r.ambient_d3), "{r}");
                }
                for n in 1..=3 {
                    for r in twisting_realizations(t0, t1, n).unwrap() {
                        assert_eq!((r.t0 + r.r0).rem_euclid(2), 1, "{r}");
                        assert_eq!((r.t1 + r.r1).rem_euclid(2), 1, "{r}");
                    }
                }
            }
        }
    }
}
