//! Joint routing and rebalancing of an autonomous mobility-on-demand (AMoD)
//! fleet and a micromobility fleet over a three-layer intermodal network.
//!
//! The city is modeled as a supergraph of three digraph layers (walking,
//! micromobility, road) joined by zero-length switching arcs that carry the
//! boarding/alighting time. Travel demand is a set of origin-destination
//! request rates on the walking layer. Routing all requests while respecting
//! vehicle balance, fleet-size budgets, and capacity limits is a
//! multicommodity minimum-cost flow problem; we assemble it as a sparse LP
//! and solve it to optimality with a certified duality gap.
//!
//! Pipeline: [`ingest`] parses TNTP network/trips files into a
//! [`graph::Supergraph`] and [`ingest::DemandSet`]; [`model`] builds the LP;
//! [`solve`] produces a [`solve::FlowSolution`]; [`metrics`] reduces it to
//! average travel time, time-based modal shares, and rebalancing totals;
//! [`experiments`] runs single scenarios and parameter sweeps. [`oracle`]
//! provides independent shortest-path references used for validation.
//!
//! The `parallel` feature (on by default) enables rayon data-parallelism for
//! per-origin oracle runs and sweep points; without it every code path falls
//! back to sequential execution.

pub mod congestion;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod ingest;
pub mod metrics;
pub mod model;
pub mod oracle;
pub mod par;
pub mod solve;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
