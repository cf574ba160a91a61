//! Ground sets, bit-encoded subsets, the rank oracle with its concrete
//! backends, and the fundamental derived operators (dual, minors, closure,
//! circuits, simplification).

mod circuits;
mod ground;
mod matroid;
mod simplify;
mod subset;

pub use circuits::{circuits, cocircuits};
pub use ground::{default_labels, GroundSet, ABSOLUTE_MAX_ELEMENTS, DEFAULT_MAX_ELEMENTS};
pub use matroid::{Backend, Glued, Matroid};
pub use simplify::{cosimplify, simplify, ElementMap};
pub use subset::{subsets_by_size, Subset};
