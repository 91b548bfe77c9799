pub mod array;
pub mod catalog;
pub mod exact;
pub mod feasibility;
pub mod graphs;
pub mod search;
pub mod spectral;
