//! Permutation groups, GL2(Z/NZ) matrix groups, and the generalized D4 criterion.

mod audit;
mod d4;
mod element;
mod gl2;
mod group;
mod perm;

pub use audit::{
    audit_qualifying_subgroups, gl2_subgroup, h25, h25_witness, h9, qualifies_as_image, satisfies_prop2,
    submodules_p_p2, AuditRow, Gl2Subgroup, MatGroup, ModuleSubgroup, SUPPORTED_MODULI,
};
pub use d4::{cyclic, dihedral, free_gd4_generators, free_gd4_order, sigma, tau, unitriangular_f2_4};
pub use element::GroupElement;
pub use gl2::{GL2Elem, GL2Error};
pub use group::{
    close, close_bounded, exponent, is_gen_d4_type, nilpotency_class, quotient_group, ElementSet, Group, Nilpotency,
};
pub use perm::{ParsePermError, Perm};

pub type PermGroup = Group<Perm>;

/// Default closure cap, 2^24 elements.
pub const DEFAULT_CAP: usize = 1 << 24;
pub const CAP_ENV: &str = "TORSION_ATLAS_MAX_CLOSURE";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group has more than {cap} elements")]
    CapExceeded { cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("unsupported modulus {0}")]
    UnsupportedModulus(u32),
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("generators act on different point sets or moduli")]
    MixedShapes,
    #[error("internal error: {0}")]
    Internal(&'static str),
}

/// Cap from the environment, falling back to the default.
pub fn cap_from_env() -> Result<usize, String> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| format!("{CAP_ENV} must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// Parse `;`-separated cycle-notation generators onto a common degree.
pub fn parse_perm_group(s: &str) -> Result<PermGroup, ParsePermError> {
    let parts: Vec<&str> = s.split(';').map(str::trim).filter(|p| !p.is_empty()).collect();
    if parts.is_empty() {
        return Err(ParsePermError {
            input: s.to_string(),
            reason: "no generators",
        });
    }
    let perms = parts.iter().map(|p| p.parse::<Perm>()).collect::<Result<Vec<_>, _>>()?;
    let degree = perms.iter().map(Perm::degree).max().unwrap();
    let perms = perms.into_iter().map(|p| p.extend_to(degree)).collect();
    Ok(Group::new(perms).expect("common degree"))
}
