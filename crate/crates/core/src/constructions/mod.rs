//! Splicing, gluing, named graphs, the extremal families and exhaustive
//! generation of small cubic graphs.

mod families;
mod generate;
mod named;
mod ops;
mod witness;

pub use families::{
    gen_g, gen_k, gen_n, gen_negative_family, recognize_g, recognize_gprime, recognize_j,
    recognize_k, recognize_kprime, recognize_l, recognize_n, recognize_nprime, Recognizer,
};
pub use generate::{generate_all_cubic, MAX_GENERATED_ORDER};
pub use named::*;
pub use ops::{
    glue, splice, splice_identity, splice_many, Attachment, MultiSpliced, SpliceSpec, Spliced,
};
pub use witness::{Family, FamilyWitness, Part, Recipe};
