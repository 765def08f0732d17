//! Surgery-diagram families realizing the classified Hopf links, plus the
//! two component-free Lutz twist diagrams. Each family carries closed-form
//! expected invariants; `verify` recomputes everything from the diagram and
//! compares.

use serde::Serialize;

use crate::classify::{component_type, ComponentType, Realization};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::surgery::{ComponentKnot, SurgeryDiagram, SurgeryKnot};

/// Chirality parameter distinguishing the two members of a mirror pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", if *self == Side::Left { "L" } else { "R" })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "L" | "l" | "left" | "Left" => Ok(Side::Left),
            "R" | "r" | "right" | "Right" => Ok(Side::Right),
            other => Err(Error::Parse(format!("bad side {other:?}, want L or R"))),
        }
    }
}

/// A family of surgery presentations together with its parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum FamilyId {
    /// mixed-sign slopes: t0 = -(k+l) <= -1, t1 = n+2 >= 2
    B1 { k: i64, l: i64, n: i64 },
    /// second slope 1: t0 = 1-(k+l) <= 1, t1 = 1
    B2 { k: i64, l: i64 },
    /// slopes (3,1), mirror pair
    C2_31 { side: Side },
    /// slopes (2,2), mirror pair
    C2_22 { side: Side },
    /// slopes (n+4, 1), mirror pair
    C3T01 { side: Side, n: i64 },
    /// slopes (n+3, 2), three rotation variants
    C3T02 { variant: u8, n: i64 },
    /// slopes (n+3, m+3), four rotation variants
    C4 { variant: u8, n: i64, m: i64 },
    /// slopes (0, 2-n) for n >= 2
    D { n: i64 },
    /// negative Lutz twist on the unknot transverse push-off: d3 = 1/2
    LutzNeg,
    /// positive Lutz twist: d3 = -3/2
    LutzPos,
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyId::B1 { k, l, n } => write!(f, "B1(k={k},l={l},n={n})"),
            FamilyId::B2 { k, l } => write!(f, "B2(k={k},l={l})"),
            FamilyId::C2_31 { side } => write!(f, "C2_31({side})"),
            FamilyId::C2_22 { side } => write!(f, "C2_22({side})"),
            FamilyId::C3T01 { side, n } => write!(f, "C3_T01({side},n={n})"),
            FamilyId::C3T02 { variant, n } => write!(f, "C3_T02(v{variant},n={n})"),
            FamilyId::C4 { variant, n, m } => write!(f, "C4(v{variant},n={n},m={m})"),
            FamilyId::D { n } => write!(f, "D(n={n})"),
            FamilyId::LutzNeg => write!(f, "LUTZ_NEG"),
            FamilyId::LutzPos => write!(f, "LUTZ_POS"),
        }
    }
}

/// One closed-form row the family is expected to realize, up to the
/// simultaneous reversal of both components.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct ExpectedRow {
    pub r0: i64,
    pub r1: i64,
    pub d3: Rational,
    pub type0: ComponentType,
    pub type1: ComponentType,
}

/// An instantiated family: the diagram plus cancellation bookkeeping.
/// `cancelled_by[i]` names the component whose push-off cancels surgery
/// knot i after the link complement is cut out; every +1-framed knot in a
/// family with components must be cancelled.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub diagram: SurgeryDiagram,
    pub cancelled_by: Vec<Option<usize>>,
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

fn knot(tb_pre: i64, rot_pre: i64, coeff: i64) -> SurgeryKnot {
    SurgeryKnot {
        tb_pre,
        rot_pre,
        coeff,
    }
}

fn component(tb_pre: i64, rot_pre: i64, lk_vec: Vec<i64>, label: &str) -> ComponentKnot {
    ComponentKnot {
        tb_pre,
        rot_pre,
        lk_vec,
        orientation_label: label.to_string(),
    }
}

fn chain_offdiag(n: usize) -> Vec<Vec<i64>> {
    let mut off = vec![vec![0i64; n]; n];
    for i in 0..n.saturating_sub(1) {
        off[i][i + 1] = -1;
        off[i + 1][i] = -1;
    }
    off
}

fn complete_offdiag(n: usize) -> Vec<Vec<i64>> {
    let mut off = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off[i][j] = -1;
            }
        }
    }
    off
}

fn two_component_lk(v: i64) -> Vec<Vec<Rational>> {
    vec![
        vec![Rational::zero(), Rational::from(v)],
        vec![Rational::from(v), Rational::zero()],
    ]
}

impl FamilyId {
    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadParams(msg));
        match *self {
            FamilyId::B1 { k, l, n } => {
                if k < 0 || l < 0 || k + l < 1 {
                    return bad(format!("B1 needs k,l >= 0 with k+l >= 1, got k={k} l={l}"));
                }
                if n < 0 {
                    return bad(format!("B1 needs n >= 0, got n={n}"));
                }
            }
            FamilyId::B2 { k, l } => {
                if k < 0 || l < 0 {
                    return bad(format!("B2 needs k,l >= 0, got k={k} l={l}"));
                }
            }
            FamilyId::C2_31 { .. } | FamilyId::C2_22 { .. } => {}
            FamilyId::C3T01 { n, .. } => {
                if n < 0 {
                    return bad(format!("C3_T01 needs n >= 0, got n={n}"));
                }
            }
            FamilyId::C3T02 { variant, n } => {
                if !(1..=3).contains(&variant) {
                    return bad(format!("C3_T02 variant must be 1..=3, got {variant}"));
                }
                if n < 0 {
                    return bad(format!("C3_T02 needs n >= 0, got n={n}"));
                }
            }
            FamilyId::C4 { variant, n, m } => {
                if !(1..=4).contains(&variant) {
                    return bad(format!("C4 variant must be 1..=4, got {variant}"));
                }
                if n < 0 || m < 0 {
                    return bad(format!("C4 needs n,m >= 0, got n={n} m={m}"));
                }
            }
            FamilyId::D { n } => {
                if n < 2 {
                    return bad(format!("D needs n >= 2, got n={n}"));
                }
            }
            FamilyId::LutzNeg | FamilyId::LutzPos => {}
        }
        Ok(())
    }

    /// The slope pair (t0, t1) the instance realizes. The Lutz diagrams
    /// have no components and no slopes.
    pub fn slopes(&self) -> Result<(i64, i64)> {
        self.validate()?;
        match *self {
            FamilyId::B1 { k, l, n } => Ok((-(k + l), n + 2)),
            FamilyId::B2 { k, l } => Ok((1 - (k + l), 1)),
            FamilyId::C2_31 { .. } => Ok((3, 1)),
            FamilyId::C2_22 { .. } => Ok((2, 2)),
            FamilyId::C3T01 { n, .. } => Ok((n + 4, 1)),
            FamilyId::C3T02 { n, .. } => Ok((n + 3, 2)),
            FamilyId::C4 { n, m, .. } => Ok((n + 3, m + 3)),
            FamilyId::D { n } => Ok((0, 2 - n)),
            FamilyId::LutzNeg | FamilyId::LutzPos => Err(Error::BadParams(
                "Lutz twist diagrams have no link components".into(),
            )),
        }
    }

    pub fn instantiate(&self) -> Result<FamilyInstance> {
        self.validate()?;
        let (knots, offdiag, components, lk_pre, flip1, cancelled_by) = match *self {
            FamilyId::B1 { k, l, n } => {
                let mut knots_v = vec![knot(-2, 1, 1)];
                for _ in 0..n {
                    knots_v.push(knot(-1, 0, -1));
                }
                let nn = knots_v.len();
                let mut lk0 = vec![0i64; nn];
                lk0[nn - 1] = -1;
                let mut lk1 = vec![0i64; nn];
                lk1[0] = -2;
                if nn > 1 {
                    lk1[1] = -1;
                }
                let comps = vec![
                    component(-(k + l + 1), l - k, lk0, "clockwise"),
                    component(-2, 1, lk1, "clockwise"),
                ];
                let pre = two_component_lk(if n == 0 { -1 } else { 0 });
                let mut cb = vec![None; nn];
                cb[0] = Some(1);
                (knots_v, chain_offdiag(nn), comps, pre, n % 2 == 1, cb)
            }
            FamilyId::B2 { k, l } => {
                let knots_v = vec![knot(-1, 0, 1), knot(-1, 0, 1)];
                let comps = vec![
                    component(-1 - (k + l), l - k, vec![-1, -1], "clockwise"),
                    component(-1, 0, vec![-1, -1], "clockwise"),
                ];
                let pre = two_component_lk(-1);
                (
                    knots_v,
                    chain_offdiag(2),
                    comps,
                    pre,
                    false,
                    vec![Some(1), Some(1)],
                )
            }
            FamilyId::C2_31 { side } => {
                let rho = if side == Side::Left { 2 } else { 0 };
                let knots_v = vec![
                    knot(-3, rho, 1),
                    knot(-1, 0, 1),
                    knot(-1, 0, 1),
                    knot(-1, 0, 1),
                ];
                // component 0 is the reversed push-off of knot 0
                let comps = vec![
                    component(-3, -rho, vec![3, 1, 1, 1], "counterclockwise"),
                    component(-1, 0, vec![-1, -1, -1, -1], "clockwise"),
                ];
                let pre = two_component_lk(1);
                (
                    knots_v,
                    complete_offdiag(4),
                    comps,
                    pre,
                    false,
                    vec![Some(0), Some(1), Some(1), Some(1)],
                )
            }
            FamilyId::C2_22 { side } => {
                let rho = if side == Side::Left { 3 } else { 1 };
                let knots_v = vec![knot(-4, rho, 1), knot(-1, 0, 1), knot(-1, 0, 1)];
                // component 1 is the reversed push-off of a -1-framed knot
                let comps = vec![
                    component(-4, rho, vec![-4, -1, -1], "clockwise"),
                    component(-1, 0, vec![1, 1, 1], "counterclockwise"),
                ];
                let pre = two_component_lk(1);
                (
                    knots_v,
                    complete_offdiag(3),
                    comps,
                    pre,
                    false,
                    vec![Some(0), Some(1), Some(1)],
                )
            }
            FamilyId::C3T01 { side, n } => {
                let em = if side == Side::Left { -1 } else { 1 };
                let mut knots_v = vec![knot(-2, 1, 1)];
                for _ in 0..n {
                    knots_v.push(knot(-1, 0, -1));
                }
                knots_v.push(knot(-2, em, -1)); // middle knot of the chain
                let mid = knots_v.len() - 1;
                for _ in 0..3 {
                    knots_v.push(knot(-1, 0, 1));
                }
                let nn = knots_v.len();
                let mut off = vec![vec![0i64; nn]; nn];
                for i in 0..mid {
                    off[i][i + 1] = -1;
                    off[i + 1][i] = -1;
                }
                for i in mid..nn {
                    for j in mid..nn {
                        if i != j {
                            off[i][j] = -1;
                        }
                    }
                }
                let mut lk0 = vec![0i64; nn];
                lk0[0] = -2;
                lk0[1] = -1;
                let mut lk1 = vec![0i64; nn];
                for v in lk1.iter_mut().skip(mid) {
                    *v = -1;
                }
                let comps = vec![
                    component(-2, 1, lk0, "clockwise"),
                    component(-1, 0, lk1, "clockwise"),
                ];
                let pre = two_component_lk(0);
                let mut cb = vec![None; nn];
                cb[0] = Some(0);
                for c in cb.iter_mut().skip(mid + 1) {
                    *c = Some(1);
                }
                (knots_v, off, comps, pre, n % 2 == 1, cb)
            }
            FamilyId::C3T02 { variant, n } => {
                let rho = match variant {
                    1 => 0,
                    2 => 2,
                    _ => -2,
                };
                let mut knots_v = vec![knot(-2, 1, 1)];
                for _ in 0..n {
                    knots_v.push(knot(-1, 0, -1));
                }
                knots_v.push(knot(-3, rho, 1));
                let nn = knots_v.len();
                let mut lk0 = vec![0i64; nn];
                lk0[0] = -2;
                lk0[1] = -1;
                let mut lk1 = vec![0i64; nn];
                lk1[nn - 2] = -1;
                lk1[nn - 1] = -3;
                let comps = vec![
                    component(-2, 1, lk0, "clockwise"),
                    component(-3, rho, lk1, "clockwise"),
                ];
                let pre = two_component_lk(if n == 0 { -1 } else { 0 });
                let mut cb = vec![None; nn];
                cb[0] = Some(0);
                cb[nn - 1] = Some(1);
                (knots_v, chain_offdiag(nn), comps, pre, n % 2 == 0, cb)
            }
            FamilyId::C4 { variant, n, m } => {
                let (em, e1) = match variant {
                    1 => (-1, 1),
                    2 => (1, 1),
                    3 => (1, -1),
                    _ => (-1, -1),
                };
                let mut knots_v = vec![knot(-2, 1, 1)];
                for _ in 0..n {
                    knots_v.push(knot(-1, 0, -1));
                }
                knots_v.push(knot(-2, em, -1));
                for _ in 0..m {
                    knots_v.push(knot(-1, 0, -1));
                }
                knots_v.push(knot(-2, e1, 1));
                let nn = knots_v.len();
                let mut lk0 = vec![0i64; nn];
                lk0[0] = -2;
                lk0[1] = -1;
                let mut lk1 = vec![0i64; nn];
                lk1[nn - 2] = -1;
                lk1[nn - 1] = -2;
                let comps = vec![
                    component(-2, 1, lk0, "clockwise"),
                    component(-2, e1, lk1, "clockwise"),
                ];
                let pre = two_component_lk(0);
                let mut cb = vec![None; nn];
                cb[0] = Some(0);
                cb[nn - 1] = Some(1);
                (knots_v, chain_offdiag(nn), comps, pre, (n + m) % 2 == 1, cb)
            }
            FamilyId::D { n } => {
                let mut knots_v = vec![knot(-2, 1, 1)];
                for _ in 0..n {
                    knots_v.push(knot(-1, 0, 1));
                }
                let nn = knots_v.len();
                let mut lk1 = vec![-1i64; nn];
                lk1[0] = -2;
                let comps = vec![
                    component(-1, 0, vec![-1; nn], "clockwise"),
                    component(-2, 1, lk1, "clockwise"),
                ];
                let pre = two_component_lk(-1);
                let mut cb = vec![Some(0); nn];
                cb[0] = Some(1);
                (knots_v, complete_offdiag(nn), comps, pre, false, cb)
            }
            FamilyId::LutzNeg => {
                let knots_v = vec![knot(-1, 0, 1), knot(1, -2, 1)];
                (
                    knots_v,
                    chain_offdiag(2),
                    Vec::new(),
                    Vec::new(),
                    false,
                    vec![None, None],
                )
            }
            FamilyId::LutzPos => {
                let knots_v = vec![knot(1, 0, 1), knot(-1, -2, 1)];
                let mut off = vec![vec![0i64; 2]; 2];
                off[0][1] = 1;
                off[1][0] = 1;
                (knots_v, off, Vec::new(), Vec::new(), false, vec![None, None])
            }
        };
        let mut diagram = SurgeryDiagram::new(knots, offdiag, components, lk_pre, true)?;
        if flip1 {
            diagram = diagram.with_component_reversed(1)?;
        }
        Ok(FamilyInstance {
            id: *self,
            diagram,
            cancelled_by,
        })
    }
}

impl FamilyInstance {
    /// Closed-form rows this instance should realize (the canonical
    /// orientation and the simultaneous reversal of both components).
    pub fn expected(&self) -> Result<Vec<ExpectedRow>> {
        let (t0, t1) = self.id.slopes()?;
        // coupled +/- pair generated by (r0, r1) at the given d3
        let pair = |r0: i64, r1: i64, d3: Rational| -> Vec<(i64, i64, Rational)> {
            vec![(r0, r1, d3.clone()), (-r0, -r1, d3)]
        };
        let rows: Vec<(i64, i64, Rational)> = match self.id {
            FamilyId::B1 { k, l, n } => {
                let s = if n % 2 == 0 { 1 } else { -1 };
                pair(l - k - s, -s * (n + 1), half())
            }
            FamilyId::B2 { k, l } => pair(l - k, 0, half()),
            FamilyId::C2_31 { side } => match side {
                Side::Left => pair(4, 2, neg_half()),
                Side::Right => pair(0, 0, three_halves()),
            },
            FamilyId::C2_22 { side } => match side {
                Side::Left => pair(3, 3, neg_half()),
                Side::Right => pair(1, 1, three_halves()),
            },
            FamilyId::C3T01 { side, n } => {
                let outer = pair(t0 + 1, 2, neg_half());
                let inner = pair(t0 - 3, 0, three_halves());
                match (side, n % 2 == 0) {
                    (Side::Left, true) | (Side::Right, false) => outer,
                    _ => inner,
                }
            }
            FamilyId::C3T02 { variant, n } => {
                let outer = pair(t0 + 1, 3, neg_half());
                let inner = pair(t0 - 3, -1, three_halves());
                let middle = pair(t0 - 1, 1, three_halves());
                match (variant, n % 2 == 0) {
                    (1, _) => middle,
                    (2, true) | (3, false) => inner,
                    _ => outer,
                }
            }
            FamilyId::C4 { variant, n, m } => {
                let a = pair(t0 + 1, t1 + 1, neg_half());
                let b = pair(t0 - 1, t1 - 1, three_halves());
                let c = pair(t0 - 3, -(t1 - 1), three_halves());
                let d = pair(t0 - 1, -(t1 - 3), three_halves());
                // which variant lands on which row depends on the chain parities
                let order: [usize; 4] = match (n % 2, m % 2) {
                    (0, 0) => [0, 1, 2, 3],
                    (1, 0) => [2, 3, 0, 1],
                    (0, 1) => [3, 2, 1, 0],
                    _ => [1, 0, 3, 2],
                };
                let table = [a, b, c, d];
                table[order[variant as usize - 1]].clone()
            }
            FamilyId::D { n } => pair(-1, n - 1, half()),
            FamilyId::LutzNeg | FamilyId::LutzPos => {
                return Err(Error::BadParams(
                    "Lutz twist diagrams have no link components".into(),
                ))
            }
        };
        let mut out: Vec<ExpectedRow> = rows
            .into_iter()
            .map(|(r0, r1, d3)| ExpectedRow {
                r0,
                r1,
                type0: component_type(&d3, t0, r0),
                type1: component_type(&d3, t1, r1),
                d3,
            })
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Rows computed from the diagram itself: the built orientation and the
    /// simultaneous reversal of both components.
    pub fn computed_rows(&self) -> Result<Vec<Realization>> {
        let (t0, t1) = self.id.slopes()?;
        let mut out = Vec::new();
        for d in [self.diagram.clone(), self.diagram.with_all_components_reversed()?] {
            let d3 = d.d3_after()?;
            let tb0 = d.tb_after(0)?;
            let tb1 = d.tb_after(1)?;
            let r0 = d.rot_after(0)?;
            let r1 = d.rot_after(1)?;
            for (name, v) in [("tb0", &tb0), ("tb1", &tb1), ("rot0", &r0), ("rot1", &r1)] {
                if !v.is_integer() {
                    return Err(Error::Mismatch {
                        field: name.to_string(),
                        got: v.to_string(),
                        want: "an integer".to_string(),
                    });
                }
            }
            for (name, got, want) in [("t0", &tb0, t0), ("t1", &tb1, t1)] {
                if *got != Rational::from(want) {
                    return Err(Error::Mismatch {
                        field: name.to_string(),
                        got: got.to_string(),
                        want: want.to_string(),
                    });
                }
            }
            let (r0, r1) = (r0.to_i64().unwrap(), r1.to_i64().unwrap());
            out.push(Realization {
                t0,
                r0,
                t1,
                r1,
                type0: component_type(&d3, t0, r0),
                type1: component_type(&d3, t1, r1),
                ambient_d3: d3,
                twisting: 0,
            });
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Recompute every invariant from the diagram and compare with the
    /// closed forms; also checks the Hopf linking condition, parity, and
    /// the cancellation bookkeeping.
    pub fn verify(&self) -> Result<()> {
        self.diagram.parity_check()?;
        let d3 = self.diagram.d3_after()?;
        if !(&d3 + &d3).is_integer() {
            return Err(Error::Mismatch {
                field: "d3".into(),
                got: d3.to_string(),
                want: "a half-integer".into(),
            });
        }

        if matches!(self.id, FamilyId::LutzNeg | FamilyId::LutzPos) {
            let want = if self.id == FamilyId::LutzNeg {
                half()
            } else {
                -three_halves()
            };
            if d3 != want {
                return Err(Error::Mismatch {
                    field: "d3".into(),
                    got: d3.to_string(),
                    want: want.to_string(),
                });
            }
            return Ok(());
        }

        let lk = self.diagram.lk_after(0, 1)?;
        if lk != Rational::one() {
            return Err(Error::Mismatch {
                field: "lk".into(),
                got: lk.to_string(),
                want: "1".into(),
            });
        }

        let got: Vec<ExpectedRow> = self
            .computed_rows()?
            .into_iter()
            .map(|r| ExpectedRow {
                r0: r.r0,
                r1: r.r1,
                d3: r.ambient_d3,
                type0: r.type0,
                type1: r.type1,
            })
            .collect();
        let want = self.expected()?;
        if got != want {
            return Err(Error::Mismatch {
                field: "rows".into(),
                got: format!("{got:?}"),
                want: format!("{want:?}"),
            });
        }

        self.check_cancellation()
    }

    /// Every +1-framed surgery knot must cancel against a component
    /// push-off with matching tb and linking.
    fn check_cancellation(&self) -> Result<()> {
        let knots = self.diagram.knots();
        if self.cancelled_by.len() != knots.len() {
            return Err(Error::Mismatch {
                field: "cancellation".into(),
                got: format!("{} entries", self.cancelled_by.len()),
                want: format!("{} entries", knots.len()),
            });
        }
        for (i, slot) in self.cancelled_by.iter().enumerate() {
            match slot {
                None => {
                    if knots[i].coeff == 1 {
                        return Err(Error::Mismatch {
                            field: "cancellation".into(),
                            got: format!("+1-framed knot {i} left uncancelled"),
                            want: "a cancelling component".into(),
                        });
                    }
                }
                Some(c) => {
                    let comp = &self.diagram.components()[*c];
                    if comp.tb_pre != knots[i].tb_pre
                        || comp.lk_vec[i].abs() != knots[i].tb_pre.abs()
                    {
                        return Err(Error::Mismatch {
                            field: "cancellation".into(),
                            got: format!(
                                "knot {i} (tb {}) against component {c} (tb {}, lk {})",
                                knots[i].tb_pre, comp.tb_pre, comp.lk_vec[i]
                            ),
                            want: "matching tb and |lk| = |tb|".into(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rows_of(id: FamilyId) -> Vec<(i64, i64, Rational)> {
        id.instantiate()
            .unwrap()
            .expected()
            .unwrap()
            .into_iter()
            .map(|r| (r.r0, r.r1, r.d3))
            .collect()
    }

    #[test]
    fn b1_small_instances() {
        let inst = FamilyId::B1 { k: 1, l: 2, n: 0 }.instantiate().unwrap();
        assert_eq!(inst.id.slopes().unwrap(), (-3, 2));
        let mut rows = rows_of(inst.id);
        rows.sort();
        assert_eq!(rows, vec![(0, -1, rat("1/2")), (0, 1, rat("1/2"))]);
        inst.verify().unwrap();

        let inst = FamilyId::B1 { k: 1, l: 0, n: 1 }.instantiate().unwrap();
        assert_eq!(inst.id.slopes().unwrap(), (-1, 3));
        inst.verify().unwrap();

        for (k, l, n) in [(0, 1, 0), (2, 0, 2), (1, 1, 3), (0, 3, 1)] {
            FamilyId::B1 { k, l, n }.instantiate().unwrap().verify().unwrap();
        }
        assert!(FamilyId::B1 { k: 0, l: 0, n: 1 }.instantiate().is_err());
    }

    #[test]
    fn b2_instances() {
        let inst = FamilyId::B2 { k: 0, l: 0 }.instantiate().unwrap();
        assert_eq!(inst.id.slopes().unwrap(), (1, 1));
        let rows = inst.expected().unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].r0, rows[0].r1), (0, 0));
        assert_eq!(rows[0].type0, ComponentType::Exceptional);
        assert_eq!(rows[0].type1, ComponentType::Exceptional);
        inst.verify().unwrap();

        let inst = FamilyId::B2 { k: 2, l: 1 }.instantiate().unwrap();
        assert_eq!(inst.id.slopes().unwrap(), (-2, 1));
        let mut rows = rows_of(inst.id);
        rows.sort();
        assert_eq!(rows, vec![(-1, 0, rat("1/2")), (1, 0, rat("1/2"))]);
        inst.verify().unwrap();
    }

    #[test]
    fn golden_mirror_pair() {
        let left = FamilyId::C2_31 { side: Side::Left }.instantiate().unwrap();
        let mut rows = rows_of(left.id);
        rows.sort();
        assert_eq!(rows, vec![(-4, -2, rat("-1/2")), (4, 2, rat("-1/2"))]);
        left.verify().unwrap();

        let right = FamilyId::C2_31 { side: Side::Right }.instantiate().unwrap();
        let rows = right.expected().unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].r0, rows[0].r1), (0, 0));
        assert_eq!(rows[0].d3, rat("3/2"));
        right.verify().unwrap();
    }

    #[test]
    fn square_slope_mirror_pair() {
        for side in [Side::Left, Side::Right] {
            FamilyId::C2_22 { side }.instantiate().unwrap().verify().unwrap();
        }
        assert_eq!(
            rows_of(FamilyId::C2_22 { side: Side::Right }),
            vec![(-1, -1, rat("3/2")), (1, 1, rat("3/2"))]
        );
    }

    #[test]
    fn torsion_one_chains() {
        let inst = FamilyId::C3T01 {
            side: Side::Left,
            n: 0,
        }
        .instantiate()
        .unwrap();
        assert_eq!(inst.id.slopes().unwrap(), (4, 1));
        let mut rows = rows_of(inst.id);
        rows.sort();
        assert_eq!(rows, vec![(-5, -2, rat("-1/2")), (5, 2, rat("-1/2"))]);
        inst.verify().unwrap();

        // parity swaps the mirror roles
        let mut rows = rows_of(FamilyId::C3T01 {
            side: Side::Left,
            n: 1,
        });
        rows.sort();
        assert_eq!(rows, vec![(-2, 0, rat("3/2")), (2, 0, rat("3/2"))]);

        for n in 0..=3 {
            for side in [Side::Left, Side::Right] {
                FamilyId::C3T01 { side, n }.instantiate().unwrap().verify().unwrap();
            }
        }
    }

    #[test]
    fn torsion_two_chains() {
        let mut rows = rows_of(FamilyId::C3T02 { variant: 1, n: 0 });
        rows.sort();
        assert_eq!(rows, vec![(-2, -1, rat("3/2")), (2, 1, rat("3/2"))]);

        let mut rows = rows_of(FamilyId::C3T02 { variant: 2, n: 0 });
        rows.sort();
        assert_eq!(rows, vec![(0, -1, rat("3/2")), (0, 1, rat("3/2"))]);

        let mut rows = rows_of(FamilyId::C3T02 { variant: 2, n: 1 });
        rows.sort();
        assert_eq!(rows, vec![(-5, -3, rat("-1/2")), (5, 3, rat("-1/2"))]);

        for variant in 1..=3 {
            for n in 0..=3 {
                FamilyId::C3T02 { variant, n }
                    .instantiate()
                    .unwrap()
                    .verify()
                    .unwrap();
            }
        }
    }

    #[test]
    fn double_chain_variants() {
        let inst = FamilyId::C4 {
            variant: 1,
            n: 0,
            m: 0,
        }
        .instantiate()
        .unwrap();
        assert_eq!(inst.id.slopes().unwrap(), (3, 3));
        let mut rows = rows_of(inst.id);
        rows.sort();
        assert_eq!(rows, vec![(-4, -4, rat("-1/2")), (4, 4, rat("-1/2"))]);
        inst.verify().unwrap();

        for variant in 1..=4 {
            for n in 0..=2 {
                for m in 0..=2 {
                    FamilyId::C4 { variant, n, m }
                        .instantiate()
                        .unwrap()
                        .verify()
                        .unwrap();
                }
            }
        }
    }

    #[test]
    fn zero_slope_family() {
        let inst = FamilyId::D { n: 2 }.instantiate().unwrap();
        assert_eq!(inst.id.slopes().unwrap(), (0, 0));
        let mut rows = rows_of(inst.id);
        rows.sort();
        assert_eq!(rows, vec![(-1, 1, rat("1/2")), (1, -1, rat("1/2"))]);
        inst.verify().unwrap();

        // matches the zero-slope classification rows
        let inst = FamilyId::D { n: 5 }.instantiate().unwrap();
        assert_eq!(inst.id.slopes().unwrap(), (0, -3));
        inst.verify().unwrap();
        let fam: Vec<(i64, i64)> = inst
            .expected()
            .unwrap()
            .iter()
            .map(|r| (r.r0, r.r1))
            .collect();
        let cls: Vec<(i64, i64)> = crate::classify::strongly_exceptional(0, -3)
            .iter()
            .map(|r| (r.r0, r.r1))
            .collect();
        assert_eq!(fam, cls);

        assert!(FamilyId::D { n: 1 }.instantiate().is_err());
    }

    #[test]
    fn lutz_twists() {
        let neg = FamilyId::LutzNeg.instantiate().unwrap();
        assert_eq!(neg.diagram.d3_after().unwrap(), rat("1/2"));
        neg.verify().unwrap();
        assert!(matches!(neg.expected(), Err(Error::BadParams(_))));

        let pos = FamilyId::LutzPos.instantiate().unwrap();
        assert_eq!(pos.diagram.d3_after().unwrap(), rat("-3/2"));
        pos.verify().unwrap();
    }

    #[test]
    fn corrupted_instance_fails_verification() {
        // rows from B1(2,1,0) cannot pass as B1(1,2,0)
        let donor = FamilyId::B1 { k: 2, l: 1, n: 0 }.instantiate().unwrap();
        let fake = FamilyInstance {
            id: FamilyId::B1 { k: 1, l: 2, n: 0 },
            diagram: donor.diagram,
            cancelled_by: donor.cancelled_by,
        };
        assert!(matches!(
            fake.verify(),
            Err(Error::Mismatch { field, .. }) if field == "rows"
        ));

        // an uncancelled +1-framed knot is flagged
        let donor = FamilyId::B2 { k: 0, l: 0 }.instantiate().unwrap();
        let fake = FamilyInstance {
            id: donor.id,
            diagram: donor.diagram,
            cancelled_by: vec![None, Some(1)],
        };
        assert!(matches!(
            fake.verify(),
            Err(Error::Mismatch { field, .. }) if field == "cancellation"
        ));
    }

    #[test]
    fn orientation_labels_follow_flips() {
        // odd chain length reverses the second component
        let inst = FamilyId::B1 { k: 1, l: 0, n: 1 }.instantiate().unwrap();
        assert_eq!(inst.diagram.components()[0].orientation_label, "clockwise");
        assert_eq!(
            inst.diagram.components()[1].orientation_label,
            "counterclockwise"
        );
        let inst = FamilyId::B1 { k: 1, l: 0, n: 2 }.instantiate().unwrap();
        assert_eq!(inst.diagram.components()[1].orientation_label, "clockwise");
    }
}
