//! Contact surgery diagrams and the surgery formulas for the classical
//! invariants of the link components that are not surgered away.
//!
//! A diagram is a list of Legendrian knots with contact (+/-1)-surgery
//! coefficients, their pairwise linking numbers, and a list of passive
//! components tracked through the surgery.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{dot, IntMatrix, Rational};

/// A Legendrian knot with a contact surgery coefficient.
///
/// The topological surgery framing is tb_pre + coeff; that is what enters
/// the linking matrix diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryKnot {
    pub tb_pre: i64,
    pub rot_pre: i64,
    pub coeff: i64,
}

/// A link component that survives the surgery; lk_vec holds its linking
/// numbers with the surgery knots, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentKnot {
    pub tb_pre: i64,
    pub rot_pre: i64,
    pub lk_vec: Vec<i64>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub orientation_label: String,
}

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    knots: Vec<SurgeryKnot>,
    offdiag: Vec<Vec<i64>>,
    #[serde(default)]
    components: Vec<ComponentKnot>,
    #[serde(default)]
    lk_pre: Vec<Vec<Rational>>,
    #[serde(default)]
    s3: bool,
}

/// A contact surgery diagram, validated on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SurgeryDiagram {
    knots: Vec<SurgeryKnot>,
    offdiag: Vec<Vec<i64>>,
    components: Vec<ComponentKnot>,
    lk_pre: Vec<Vec<Rational>>,
    s3: bool,
}

impl SurgeryDiagram {
    /// Validates: coefficients are +/-1, tb+rot odd on every knot and
    /// component, offdiag and lk_pre symmetric with zero diagonal and the
    /// right shapes, and |det M| = 1 when the diagram claims to present S^3.
    pub fn new(
        knots: Vec<SurgeryKnot>,
        offdiag: Vec<Vec<i64>>,
        components: Vec<ComponentKnot>,
        lk_pre: Vec<Vec<Rational>>,
        s3: bool,
    ) -> Result<Self> {
        let n = knots.len();
        let c = components.len();
        for (i, k) in knots.iter().enumerate() {
            if k.coeff != 1 && k.coeff != -1 {
                return Err(Error::BadDiagram(format!(
                    "knot {i} has contact coefficient {}, want +1 or -1",
                    k.coeff
                )));
            }
            if (k.tb_pre + k.rot_pre) % 2 == 0 {
                return Err(Error::ParityViolation(format!(
                    "knot {i} has even tb+rot = {}",
                    k.tb_pre + k.rot_pre
                )));
            }
        }
        if offdiag.len() != n {
            return Err(Error::BadDiagram(format!(
                "offdiag has {} rows, want {n}",
                offdiag.len()
            )));
        }
        for (i, row) in offdiag.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadDiagram(format!(
                    "offdiag row {i} has {} entries, want {n}",
                    row.len()
                )));
            }
            if row[i] != 0 {
                return Err(Error::BadDiagram(format!(
                    "offdiag diagonal entry {i} must be 0"
                )));
            }
            for j in 0..n {
                if offdiag[i][j] != offdiag[j][i] {
                    return Err(Error::BadDiagram(format!(
                        "offdiag not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        for (i, comp) in components.iter().enumerate() {
            if comp.lk_vec.len() != n {
                return Err(Error::BadDiagram(format!(
                    "component {i} has lk_vec of length {}, want {n}",
                    comp.lk_vec.len()
                )));
            }
            if (comp.tb_pre + comp.rot_pre) % 2 == 0 {
                return Err(Error::ParityViolation(format!(
                    "component {i} has even tb+rot = {}",
                    comp.tb_pre + comp.rot_pre
                )));
            }
        }
        if lk_pre.len() != c {
            return Err(Error::BadDiagram(format!(
                "lk_pre has {} rows, want {c}",
                lk_pre.len()
            )));
        }
        for (i, row) in lk_pre.iter().enumerate() {
            if row.len() != c {
                return Err(Error::BadDiagram(format!(
                    "lk_pre row {i} has {} entries, want {c}",
                    row.len()
                )));
            }
            if !row[i].is_zero() {
                return Err(Error::BadDiagram(format!(
                    "lk_pre diagonal entry {i} must be 0"
                )));
            }
            for j in 0..c {
                if lk_pre[i][j] != lk_pre[j][i] {
                    return Err(Error::BadDiagram(format!(
                        "lk_pre not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let d = SurgeryDiagram {
            knots,
            offdiag,
            components,
            lk_pre,
            s3,
        };
        if s3 && d.linking_matrix().det().abs() != BigInt::one() {
            return Err(Error::BadDiagram(
                "diagram flagged as S^3 but |det M| != 1".into(),
            ));
        }
        Ok(d)
    }

    #[cfg(test)]
    fn unvalidated(
        knots: Vec<SurgeryKnot>,
        offdiag: Vec<Vec<i64>>,
        components: Vec<ComponentKnot>,
        lk_pre: Vec<Vec<Rational>>,
        s3: bool,
    ) -> Self {
        SurgeryDiagram {
            knots,
            offdiag,
            components,
            lk_pre,
            s3,
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawDiagram =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("diagram JSON: {e}")))?;
        Self::new(raw.knots, raw.offdiag, raw.components, raw.lk_pre, raw.s3)
    }

    pub fn to_json(&self) -> String {
        let raw = RawDiagram {
            knots: self.knots.clone(),
            offdiag: self.offdiag.clone(),
            components: self.components.clone(),
            lk_pre: self.lk_pre.clone(),
            s3: self.s3,
        };
        serde_json::to_string_pretty(&raw).expect("diagram serializes")
    }

    pub fn knots(&self) -> &[SurgeryKnot] {
        &self.knots
    }

    pub fn components(&self) -> &[ComponentKnot] {
        &self.components
    }

    pub fn lk_pre(&self, i: usize, j: usize) -> &Rational {
        &self.lk_pre[i][j]
    }

    pub fn is_s3(&self) -> bool {
        self.s3
    }

    pub fn num_knots(&self) -> usize {
        self.knots.len()
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Linking matrix M: topological framings tb+coeff on the diagonal,
    /// pairwise linking numbers off it.
    pub fn linking_matrix(&self) -> IntMatrix {
        let n = self.knots.len();
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, BigInt::from(self.knots[i].tb_pre + self.knots[i].coeff));
            for j in 0..n {
                if j != i {
                    m.set(i, j, BigInt::from(self.offdiag[i][j]));
                }
            }
        }
        m
    }

    fn rot_vector(&self) -> Vec<BigInt> {
        self.knots.iter().map(|k| BigInt::from(k.rot_pre)).collect()
    }

    fn lk_vec(&self, i: usize) -> Result<Vec<BigInt>> {
        let comp = self
            .components
            .get(i)
            .ok_or(Error::IndexOutOfRange(i))?;
        Ok(comp.lk_vec.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// M bordered by component i's linking vector: [[0, v^T], [v, M]].
    pub fn extended_matrix(&self, i: usize) -> Result<IntMatrix> {
        self.linking_matrix().bordered(&self.lk_vec(i)?)
    }

    fn det_checked(&self) -> Result<BigInt> {
        let d = self.linking_matrix().det();
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(d)
    }

    /// tb after surgery: tb_pre + det(M_i)/det(M).
    pub fn tb_after(&self, i: usize) -> Result<Rational> {
        let det_m = self.det_checked()?;
        let det_ext = self.extended_matrix(i)?.det();
        Ok(Rational::from_int(self.components[i].tb_pre) + Rational::ratio(det_ext, det_m)?)
    }

    /// rot after surgery: rot_pre - <rot, M^{-1} lk_i>.
    pub fn rot_after(&self, i: usize) -> Result<Rational> {
        let v = self.lk_vec(i)?;
        let x = self.linking_matrix().solve(&v)?;
        Ok(Rational::from_int(self.components[i].rot_pre) - dot(&x, &self.rot_vector()))
    }

    /// d3 of the surgered contact structure:
    /// (c^2 - 3*sigma - 2*chi)/4 + q, with c^2 = <M^{-1} rot, rot>,
    /// chi = 1 + #knots, q = #(+1)-surgeries. Needs every tb_pre nonzero.
    pub fn d3_after(&self) -> Result<Rational> {
        if let Some(i) = self.knots.iter().position(|k| k.tb_pre == 0) {
            return Err(Error::ZeroTbKnot(i));
        }
        let rot = self.rot_vector();
        let x = self.linking_matrix().solve(&rot)?;
        let c2 = dot(&x, &rot);
        let sigma = self.linking_matrix().signature()?;
        let chi = 1 + self.knots.len() as i64;
        let q = self.knots.iter().filter(|k| k.coeff == 1).count() as i64;
        let quarter = (c2 - Rational::from_int(3 * sigma) - Rational::from_int(2 * chi))
            / Rational::from_int(4);
        Ok(quarter + Rational::from_int(q))
    }

    /// Linking number of components i and j after surgery:
    /// lk_pre(i,j) - <lk_i, M^{-1} lk_j>.
    pub fn lk_after(&self, i: usize, j: usize) -> Result<Rational> {
        if i == j {
            return Err(Error::BadParams("lk_after needs two distinct components".into()));
        }
        let vi = self.lk_vec(i)?;
        let vj = self.lk_vec(j)?;
        let x = self.linking_matrix().solve(&vj)?;
        Ok(self.lk_pre[i][j].clone() - dot(&x, &vi))
    }

    /// tb + rot must come out an odd integer on every component whenever
    /// |det M| = 1; vacuously passes otherwise.
    pub fn parity_check(&self) -> Result<()> {
        if self.linking_matrix().det().abs() != BigInt::one() {
            return Ok(());
        }
        for i in 0..self.components.len() {
            let tb = self.tb_after(i)?;
            let rot = self.rot_after(i)?;
            let sum = &tb + &rot;
            if !sum.is_integer() {
                return Err(Error::ParityViolation(format!(
                    "component {i}: tb+rot = {sum} is not an integer"
                )));
            }
            if (sum.numer() % BigInt::from(2)).is_zero() {
                return Err(Error::ParityViolation(format!(
                    "component {i}: tb+rot = {sum} is even"
                )));
            }
        }
        Ok(())
    }

    /// Same diagram with surgery knots listed in the order perm.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.knots.len();
        if perm.len() != n {
            return Err(Error::BadParams(format!(
                "permutation has {} entries, want {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::BadParams("not a permutation".into()));
            }
            seen[p] = true;
        }
        let knots = perm.iter().map(|&p| self.knots[p].clone()).collect();
        let offdiag = perm
            .iter()
            .map(|&p| perm.iter().map(|&q| self.offdiag[p][q]).collect())
            .collect();
        let components = self
            .components
            .iter()
            .map(|comp| ComponentKnot {
                lk_vec: perm.iter().map(|&p| comp.lk_vec[p]).collect(),
                ..comp.clone()
            })
            .collect();
        SurgeryDiagram::new(knots, offdiag, components, self.lk_pre.clone(), self.s3)
    }

    /// Reverse the auxiliary orientation of surgery knot j: negates its
    /// rot, its offdiag row/column, and every component's linking with it.
    pub fn with_knot_reversed(&self, j: usize) -> Result<Self> {
        let n = self.knots.len();
        if j >= n {
            return Err(Error::IndexOutOfRange(j));
        }
        let mut knots = self.knots.clone();
        knots[j].rot_pre = -knots[j].rot_pre;
        let mut offdiag = self.offdiag.clone();
        for i in 0..n {
            if i != j {
                offdiag[i][j] = -offdiag[i][j];
                offdiag[j][i] = -offdiag[j][i];
            }
        }
        let mut components = self.components.clone();
        for comp in &mut components {
            comp.lk_vec[j] = -comp.lk_vec[j];
        }
        SurgeryDiagram::new(knots, offdiag, components, self.lk_pre.clone(), self.s3)
    }

    /// Reverse the orientation of component i: negates its rot, its
    /// linking vector, and its pre-surgery linking numbers.
    pub fn with_component_reversed(&self, i: usize) -> Result<Self> {
        let c = self.components.len();
        if i >= c {
            return Err(Error::IndexOutOfRange(i));
        }
        let mut components = self.components.clone();
        components[i].rot_pre = -components[i].rot_pre;
        for v in &mut components[i].lk_vec {
            *v = -*v;
        }
        components[i].orientation_label = match components[i].orientation_label.as_str() {
            "clockwise" => "counterclockwise".into(),
            "counterclockwise" => "clockwise".into(),
            _ => std::mem::take(&mut components[i].orientation_label),
        };
        let mut lk_pre = self.lk_pre.clone();
        for j in 0..c {
            if j != i {
                lk_pre[i][j] = -&lk_pre[i][j];
                lk_pre[j][i] = -&lk_pre[j][i];
            }
        }
        SurgeryDiagram::new(
            self.knots.clone(),
            self.offdiag.clone(),
            components,
            lk_pre,
            self.s3,
        )
    }

    /// Reverse every component at once; pairwise lk_pre values between two
    /// reversed components are unchanged.
    pub fn with_all_components_reversed(&self) -> Result<Self> {
        let mut d = self.clone();
        for i in 0..self.components.len() {
            d = d.with_component_reversed(i)?;
        }
        Ok(d)
    }
}
