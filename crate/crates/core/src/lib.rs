//! Exact-arithmetic invariants of polarized Hodge structure signatures.
//!
//! From a weight and a symmetric tuple of Hodge numbers this crate computes
//! the infinitesimal Hodge numbers of the adjoint decomposition, the level,
//! the period-domain dimension (by two independent routes), upper bounds on
//! period-image dimensions (Griffiths transversality, the Hodge-locus bound
//! with explicit subdatum witnesses, and the Carlson-Toledo bound), and the
//! primitive Hodge numbers of smooth projective hypersurfaces via the
//! Jacobian-ring Poincare series.
//!
//! All arithmetic is performed on arbitrary-precision integers; products of
//! Hodge numbers overflow machine words already in small classical examples.

pub mod bounds;
pub mod combinat;
pub mod hypersurface;
pub mod infinitesimal;
pub mod lie;
pub mod signature;

pub use bounds::{
    carlson_toledo, mhl_upper_orthogonal, mhl_upper_symplectic, report, AdmissibilityVerdict,
    BoundSource, BoundsError, BoundsReport, CarlsonToledo, CtMethod, Maximality, MaximalityStatus,
    MhlSuppression, SimplicityGuard, SimplicityStatus, SubdatumWitness, WitnessKind,
};
pub use hypersurface::{
    hypersurface_report, milnor_coefficient, moduli_dimension, primitive_hodge_numbers,
    universal_family_report, HypersurfaceError, HypersurfaceNote, HypersurfaceReport,
    SharpnessVerdict,
};
pub use infinitesimal::{InfinitesimalNumbers, LevelCase};
pub use lie::{
    cross_check_domain_dim, dim_so, dim_sp, dim_u, isotropy, orthogonal_codim_via_chain,
    symplectic_codim_via_chain, IsotropyDescription, LieError,
};
pub use signature::{
    HodgeSignature, NormalizedSignature, OrthogonalSignaturePair, Parity, SignatureError,
    ValidationIssue, ValidationReport,
};
