//! Delay modeling and controller placement search for distributed SDN
//! control planes.
//!
//! The crate quantifies how east-west (controller-to-controller) traffic
//! affects the reactivity perceived by switches, and searches for
//! Pareto-optimal controller placements on ISP-style topologies, trading the
//! average switch-to-controller delay against the average inter-controller
//! delay.
//!
//! The main pieces:
//!
//! - [`topology`]: topology ingestion (GraphML / JSON / synthetic), geographic
//!   link latencies and the all-pairs shortest-path [`DelayMatrix`].
//! - [`placement`]: placement configurations, master assignment and the two
//!   aggregate delay objectives.
//! - [`reaction`]: closed-form reaction-time models for the single and
//!   multiple data-ownership consistency models, flow-setup predictions and
//!   data-owner sweeps.
//! - [`pareto`]: exhaustive, random and evolutionary frontier search plus
//!   frontier error metrics.
//! - [`sim`]: a message-level discrete-event replay of the control-plane
//!   exchanges, used as an independent cross-check of the closed forms.

pub mod error;
pub mod pareto;
pub mod placement;
pub mod reaction;
pub mod sim;
pub mod topology;

pub use error::{Error, Result};
pub use pareto::{ParetoSet, SearchBudget};
pub use placement::{DelayPoint, MasterAssignment, Placement};
pub use reaction::{ClusterView, FlowScenario, MajorityRule, Scenario};
pub use sim::{EventTrace, MessageKind, SimEvent};
pub use topology::{DelayMatrix, Node, Topology};
