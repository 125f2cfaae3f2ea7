//! Quivers with relations and the algebras they present.

mod algebra;
mod orders;
mod quiver;

pub use algebra::{build_algebra, AlgebraTable, ArrowInfo, BasisElem, PATH_LIMIT};
pub use orders::{directed_orders, DirectedOrders, LinearExtensions};
pub use quiver::{Arrow, LinearOrder, PathWord, Presentation, Quiver, RelationElem};
