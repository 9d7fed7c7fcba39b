//! Builders for the ring families: cyclic rings, Galois fields, full and
//! triangular matrix rings, formal matrix rings `K_s(R)` and `M_n(R; s)`,
//! Morita context rings, group rings, endomorphism rings of finite abelian
//! groups, idealizations and tensor products of algebras.

pub mod cyclic;
pub mod endo;
pub mod files;
pub mod group;
pub mod idealization;
pub mod matrix;
pub mod morita;
pub mod peirce;
pub mod tensor;

pub use cyclic::{cyclic_ring, galois_field, CyclicCarrier, GaloisCarrier};
pub use endo::{abelian_p_groups, endo_oracle, endo_ring, AbelianGroupSpec, EndoCarrier};
pub use group::{
    augmentation_data, group_ring, group_table, AugmentationData, GroupRingCarrier, GroupSpec,
    GroupTable,
};
pub use idealization::{idealization, IdealizationCarrier};
pub use matrix::{formal_matrix_s, matrix_ring, FormalVariant, MatrixCarrier, Shape, Twist};
pub use morita::{morita_ring, Bimodule, MoritaCarrier, MoritaData};
pub use peirce::{peirce, trace_report, Peirce, TraceReport};
pub use tensor::{algebra_ring, tensor_product_algebra, AlgebraCarrier, AlgebraPresentation};
