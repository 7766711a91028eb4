pub mod cli;
pub mod exact;
pub mod genfun;
pub mod multiset;
pub mod quiver;
pub mod report;
pub mod sl2rep;
pub mod symalg;
pub mod verify;
pub mod younglat;
