mod expr;
mod manifest;

pub use expr::{parse_expr, parse_real_poly, parse_wpoly, ExprAst, Mode, VarKind};
pub use manifest::{
    load_manifest, parse_manifest, AlmostStructureInput, AmbientSpec, ConjugationFlavor,
    EmbeddedInput, HomogeneousInput, Manifest, ManifestKind, Payload, TubeInput,
};
