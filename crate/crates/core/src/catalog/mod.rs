//! The torsion lattice and the vendored table of j-maps.

mod torsion;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::numkernel::expr::{parse_poly, ExprError};
use crate::numkernel::{IntPoly, RatFunc, Rational};

pub use torsion::{p_primary, torsion_leq, torsion_max, TorsionError, TorsionStructure};

/// The 24 structures that occur, cyclic ones first.
pub const STRUCTURES: [(u32, u32); 24] = [
    (1, 1),
    (1, 3),
    (1, 5),
    (1, 7),
    (1, 9),
    (1, 13),
    (1, 15),
    (3, 3),
    (3, 15),
    (4, 4),
    (4, 8),
    (4, 12),
    (4, 16),
    (4, 20),
    (4, 24),
    (4, 32),
    (5, 5),
    (8, 8),
    (8, 16),
    (8, 24),
    (8, 32),
    (12, 12),
    (12, 24),
    (16, 16),
];

/// Degrees of rational cyclic isogenies over Q.
pub fn isogeny_whitelist() -> BTreeSet<u32> {
    (1..=19).chain([21, 25, 27, 37, 43, 67, 163]).collect()
}

pub fn structures() -> impl Iterator<Item = TorsionStructure> {
    STRUCTURES.iter().map(|&(a, b)| TorsionStructure::new(a, b).unwrap())
}

/// Factored source of a map, kept alongside the expanded coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factored {
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JMap {
    #[serde(flatten)]
    pub map: RatFunc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factored: Option<Factored>,
}

/// One row: the maps and isolated j-values that give a torsion structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JMapEntry {
    pub torsion: TorsionStructure,
    pub maps: Vec<JMap>,
    pub constants: BTreeSet<Rational>,
}

impl JMapEntry {
    pub fn is_function_type(&self) -> bool {
        !self.maps.is_empty()
    }
}

/// A printed form that was replaced in the canonical rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupersededMap {
    pub torsion: TorsionStructure,
    pub note: String,
    #[serde(flatten)]
    pub map: JMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmCurve {
    pub label: String,
    pub ainvs: [Rational; 5],
    pub torsion: TorsionStructure,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Catalog {
    entries: Vec<JMapEntry>,
    #[serde(default)]
    superseded: Vec<SupersededMap>,
    isogeny_whitelist: BTreeSet<u32>,
    cm_table: Vec<CmCurve>,
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("catalog JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("catalog keys differ from the 24 structures: missing {missing:?}, unexpected {extra:?}")]
    Keys {
        missing: Vec<TorsionStructure>,
        extra: Vec<TorsionStructure>,
    },
    #[error("row {0} is listed twice")]
    Duplicate(TorsionStructure),
    #[error("row {0} has neither maps nor constants")]
    EmptyRow(TorsionStructure),
    #[error("isogeny whitelist differs from the known degrees")]
    Whitelist,
    #[error("row {torsion}: factored form does not expand to the stored coefficients")]
    Checksum { torsion: TorsionStructure },
    #[error("row {torsion}: {source}")]
    Factored {
        torsion: TorsionStructure,
        source: ExprError,
    },
    #[error("row {0} not found")]
    MissingRow(TorsionStructure),
}

static BUILTIN: OnceLock<Catalog> = OnceLock::new();

/// Raw text of the vendored fixture.
pub const BUILTIN_JSON: &str = include_str!("../../data/catalog.json");

/// The vendored catalog. Validated once; a bad fixture is a build defect.
pub fn builtin_catalog() -> &'static Catalog {
    BUILTIN.get_or_init(|| Catalog::from_json(BUILTIN_JSON).expect("vendored catalog is valid"))
}

impl Catalog {
    pub fn from_json(text: &str) -> Result<Self, CatalogError> {
        let cat: Catalog = serde_json::from_str(text)?;
        cat.validate()?;
        Ok(cat)
    }

    fn validate(&self) -> Result<(), CatalogError> {
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            if !seen.insert(e.torsion) {
                return Err(CatalogError::Duplicate(e.torsion));
            }
            if e.maps.is_empty() && e.constants.is_empty() {
                return Err(CatalogError::EmptyRow(e.torsion));
            }
        }
        let want: BTreeSet<_> = structures().collect();
        if seen != want {
            return Err(CatalogError::Keys {
                missing: want.difference(&seen).copied().collect(),
                extra: seen.difference(&want).copied().collect(),
            });
        }
        if self.isogeny_whitelist != isogeny_whitelist() {
            return Err(CatalogError::Whitelist);
        }
        Ok(())
    }

    pub fn entries(&self) -> &[JMapEntry] {
        &self.entries
    }

    pub fn entry(&self, t: TorsionStructure) -> Option<&JMapEntry> {
        self.entries.iter().find(|e| e.torsion == t)
    }

    pub fn superseded(&self) -> &[SupersededMap] {
        &self.superseded
    }

    pub fn isogeny_whitelist(&self) -> &BTreeSet<u32> {
        &self.isogeny_whitelist
    }

    pub fn cm_table(&self) -> &[CmCurve] {
        &self.cm_table
    }

    pub fn keys(&self) -> BTreeSet<TorsionStructure> {
        self.entries.iter().map(|e| e.torsion).collect()
    }

    /// Every stored factored form expands to its coefficients.
    pub fn check_factored_forms(&self) -> Result<usize, CatalogError> {
        let rows = self
            .entries
            .iter()
            .flat_map(|e| e.maps.iter().map(move |m| (e.torsion, m)))
            .chain(self.superseded.iter().map(|s| (s.torsion, &s.map)));
        let mut n = 0;
        for (torsion, m) in rows {
            if let Some(f) = &m.factored {
                check_expansion(torsion, &m.map, &f.num, &f.den)?;
                n += 1;
            }
        }
        Ok(n)
    }

    /// Recompute three rows from factored forms held in code, independent of
    /// the fixture text.
    pub fn spot_check(&self) -> Result<(), CatalogError> {
        for (a, b, num, den) in SPOT_ROWS {
            let t = TorsionStructure::new(a, b).unwrap();
            let entry = self.entry(t).ok_or(CatalogError::MissingRow(t))?;
            let map = &entry.maps.first().ok_or(CatalogError::Checksum { torsion: t })?.map;
            check_expansion(t, map, num, den)?;
        }
        Ok(())
    }
}

const SPOT_ROWS: [(u32, u32, &str, &str); 3] = [
    (1, 5, "25*(t^2+10*t+5)^3", "t^5"),
    (
        1,
        13,
        "(t^2-t+1)^3*(t^12-9*t^11+29*t^10-40*t^9+22*t^8-16*t^7+40*t^6-22*t^5-23*t^4+25*t^3-4*t^2-3*t+1)^3",
        "(t-1)^13*t^13*(t^3-4*t^2+t+1)",
    ),
    (
        5,
        5,
        "(t^2+5*t+5)^3*(t^4+5*t^2+25)^3*(t^4+5*t^3+20*t^2+25*t+25)^3",
        "t^5*(t^4+5*t^3+15*t^2+25*t+25)^5",
    ),
];

fn check_expansion(torsion: TorsionStructure, map: &RatFunc, num: &str, den: &str) -> Result<(), CatalogError> {
    let parse = |s| parse_poly(s).map_err(|source| CatalogError::Factored { torsion, source });
    let (n, d): (IntPoly, IntPoly) = (parse(num)?, parse(den)?);
    let expected = RatFunc::new(n, d).map_err(|_| CatalogError::Checksum { torsion })?;
    if &expected != map {
        return Err(CatalogError::Checksum { torsion });
    }
    Ok(())
}

/// Map from structure to its row, for callers that want keyed access.
pub fn by_structure(cat: &Catalog) -> BTreeMap<TorsionStructure, &JMapEntry> {
    cat.entries.iter().map(|e| (e.torsion, e)).collect()
}
