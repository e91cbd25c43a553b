//! Curve arithmetic and the decision procedure for the torsion structure.

mod curve;
mod two;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::catalog::{torsion_leq, torsion_max, Catalog, TorsionError, TorsionStructure};
use crate::numkernel::{is_nth_power, RatFuncError, Rational};

pub use curve::{curve_invariants, CurveInvariants, SingularModel, WeierstrassModel};
pub use two::{
    has_rational_two_torsion, two_isogeny_square_class, two_torsion_roots, NoTwoTorsion, SquareClass, TwoIsogenyStep,
};

/// Why a structure was matched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A parameter value `t` with `j(t) = j0`.
    Parameter(Rational),
    /// `j0` is one of the row's isolated values, or the j = 0 rule applied.
    Constant,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Witness::Parameter(t) => t.serialize(s),
            Witness::Constant => s.serialize_str("constant"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Match {
    pub torsion: TorsionStructure,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifierReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ainvs: Option<[Rational; 5]>,
    pub j: Rational,
    #[serde(rename = "torsion")]
    pub chosen: TorsionStructure,
    pub matched: Vec<Match>,
    pub diagnostics: Vec<String>,
}

impl ClassifierReport {
    pub fn matched_structures(&self) -> impl Iterator<Item = TorsionStructure> + '_ {
        self.matched.iter().map(|m| m.torsion)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("j = 0 needs a Weierstrass model: the answer depends on the twist")]
    NeedsModel,
    #[error(transparent)]
    Singular(#[from] SingularModel),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl From<TorsionError> for ClassifyError {
    fn from(e: TorsionError) -> Self {
        ClassifyError::InternalInconsistency(e.to_string())
    }
}

impl From<RatFuncError> for ClassifyError {
    fn from(e: RatFuncError) -> Self {
        ClassifyError::InternalInconsistency(format!("fiber computation failed: {e}"))
    }
}

/// Every row whose maps or constants reach `j0`, and the largest of them.
pub fn classify_j(j0: &Rational, cat: &Catalog) -> Result<ClassifierReport, ClassifyError> {
    if j0.is_zero() {
        return Err(ClassifyError::NeedsModel);
    }
    let mut matched = vec![];
    for entry in cat.entries() {
        if entry.constants.contains(j0) {
            matched.push(Match {
                torsion: entry.torsion,
                witness: Witness::Constant,
            });
            continue;
        }
        for m in &entry.maps {
            let fiber = m.map.fiber(j0)?;
            // Smallest height first, so witnesses are stable and short.
            if let Some(t) = fiber.into_iter().min_by_key(|t| (t.height(), t.clone())) {
                matched.push(Match {
                    torsion: entry.torsion,
                    witness: Witness::Parameter(t),
                });
                break;
            }
        }
    }
    let chosen = torsion_max(matched.iter().map(|m| m.torsion))?;
    Ok(ClassifierReport {
        label: None,
        ainvs: None,
        j: j0.clone(),
        chosen,
        matched,
        diagnostics: vec![],
    })
}

/// Which of the three j = 0 cases a short model `y^2 = x^3 + s` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum JZeroCase {
    /// `4s` is a cube.
    FourSCube,
    /// `s` is a cube.
    SCube,
    Otherwise,
}

impl JZeroCase {
    pub fn of(s: &Rational) -> Self {
        let four_s = &Rational::from(4) * s;
        match (is_nth_power(&four_s, 3), is_nth_power(s, 3)) {
            (true, false) => JZeroCase::FourSCube,
            (false, true) => JZeroCase::SCube,
            (false, false) => JZeroCase::Otherwise,
            (true, true) => unreachable!("4 is not a cube"),
        }
    }

    pub fn torsion(self) -> TorsionStructure {
        let (a, b) = match self {
            JZeroCase::FourSCube => (3, 3),
            JZeroCase::SCube => (8, 24),
            JZeroCase::Otherwise => (1, 3),
        };
        TorsionStructure::new(a, b).unwrap()
    }
}

/// Classify a curve; j = 0 is settled by the cube test on `s = -c6/864`.
pub fn classify_model(m: &WeierstrassModel, cat: &Catalog) -> Result<ClassifierReport, ClassifyError> {
    let inv = m.invariants();
    if !inv.j.is_zero() {
        let mut r = classify_j(&inv.j, cat)?;
        r.ainvs = Some(m.ainvs());
        return Ok(r);
    }
    let s = &(-&inv.c6) / &Rational::from(864);
    let case = JZeroCase::of(&s);
    let chosen = case.torsion();
    let mut matched = vec![Match {
        torsion: TorsionStructure::trivial(),
        witness: Witness::Parameter(Rational::zero()),
    }];
    if chosen != TorsionStructure::trivial() {
        matched.push(Match {
            torsion: chosen,
            witness: Witness::Constant,
        });
    }
    Ok(ClassifierReport {
        label: None,
        ainvs: Some(m.ainvs()),
        j: inv.j,
        chosen,
        matched,
        diagnostics: vec![format!("j = 0 with s = {s}: {case:?}")],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// Rational 2-torsion without full 4-torsion in the answer, or the reverse.
    TwoTorsion {
        has_two_torsion: bool,
        chosen: TorsionStructure,
    },
    /// A prime outside {2, 3, 5, 7, 13} divides the answer.
    Prime { p: u32, chosen: TorsionStructure },
    /// The answer is not one of the 24 structures.
    NotAStructure(TorsionStructure),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TwoTorsion {
                has_two_torsion,
                chosen,
            } => write!(
                f,
                "rational 2-torsion is {has_two_torsion} but (4,4) <= {chosen:?} is {}",
                !has_two_torsion
            ),
            Violation::Prime { p, chosen } => write!(f, "prime {p} divides {chosen:?}"),
            Violation::NotAStructure(t) => write!(f, "{t:?} is not one of the 24 structures"),
        }
    }
}

/// Checks the answer against facts known independently of the j-maps.
pub fn consistency_audit(m: &WeierstrassModel, r: &ClassifierReport, cat: &Catalog) -> Vec<Violation> {
    let mut out = vec![];
    let two = has_rational_two_torsion(m);
    let four = TorsionStructure::new(4, 4).unwrap();
    if two != torsion_leq(four, r.chosen) {
        out.push(Violation::TwoTorsion {
            has_two_torsion: two,
            chosen: r.chosen,
        });
    }
    let mut n = r.chosen.order();
    let mut p = 2;
    while n > 1 {
        if n % p == 0 {
            if ![2, 3, 5, 7, 13].contains(&p) {
                out.push(Violation::Prime { p, chosen: r.chosen });
            }
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if !cat.keys().contains(&r.chosen) {
        out.push(Violation::NotAStructure(r.chosen));
    }
    out
}
