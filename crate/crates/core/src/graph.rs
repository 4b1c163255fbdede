//! Three-layer supergraph: walking, micromobility, and road digraphs joined
//! by zero-length switching arcs.
//!
//! All types are immutable after construction and safe to share across
//! threads. Node identity is `(layer, local index)`; the supergraph assigns
//! every node and arc a dense index used by the LP builder and the oracle.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ingest::ScenarioConfig;
use crate::Result;

/// Transport layer of the supergraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Layer {
    Walking,
    Micromobility,
    Road,
}

impl Layer {
    pub const ALL: [Layer; 3] = [Layer::Walking, Layer::Micromobility, Layer::Road];

    fn ordinal(self) -> usize {
        match self {
            Layer::Walking => 0,
            Layer::Micromobility => 1,
            Layer::Road => 2,
        }
    }
}

/// Node identity: a layer plus the node's index within that layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NodeRef {
    pub layer: Layer,
    pub local: usize,
}

impl NodeRef {
    pub fn new(layer: Layer, local: usize) -> Self {
        NodeRef { layer, local }
    }

    pub fn walking(local: usize) -> Self {
        NodeRef::new(Layer::Walking, local)
    }
}

/// Arc classification. `Switch` arcs join co-located nodes of two layers and
/// carry the boarding/alighting time; all other kinds stay within one layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArcKind {
    Walk,
    Micro,
    Road,
    Switch,
}

impl ArcKind {
    fn intra_layer(layer: Layer) -> ArcKind {
        match layer {
            Layer::Walking => ArcKind::Walk,
            Layer::Micromobility => ArcKind::Micro,
            Layer::Road => ArcKind::Road,
        }
    }
}

/// A directed arc of the supergraph.
///
/// `capacity` is in flow units per hour, `f64::INFINITY` where unconstrained.
/// For switching arcs the length is zero, `speed_kmh` is unused (stored as
/// zero) and `free_flow_time_h` is the configured switching time.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Arc {
    pub tail: NodeRef,
    pub head: NodeRef,
    pub kind: ArcKind,
    pub length_km: f64,
    pub speed_kmh: f64,
    pub capacity: f64,
    pub free_flow_time_h: f64,
}

impl Arc {
    /// Intra-layer arc with free-flow time `length / speed` (Eq. of travel
    /// time under free flow).
    pub fn intra(layer: Layer, tail: usize, head: usize, length_km: f64, speed_kmh: f64, capacity: f64) -> Result<Self> {
        Ok(Arc {
            tail: NodeRef::new(layer, tail),
            head: NodeRef::new(layer, head),
            kind: ArcKind::intra_layer(layer),
            length_km,
            speed_kmh,
            capacity,
            free_flow_time_h: free_flow_time(length_km, speed_kmh)?,
        })
    }

    fn switch(tail: NodeRef, head: NodeRef, switching_time_h: f64, capacity: f64) -> Self {
        Arc {
            tail,
            head,
            kind: ArcKind::Switch,
            length_km: 0.0,
            speed_kmh: 0.0,
            capacity,
            free_flow_time_h: switching_time_h,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.tail == self.head {
            return Err(Error::Graph(format!("self-loop arc at {:?}", self.tail)));
        }
        let crosses_layers = self.tail.layer != self.head.layer;
        if crosses_layers != (self.kind == ArcKind::Switch) {
            return Err(Error::Graph(format!(
                "arc {:?} -> {:?} has kind {:?} inconsistent with its endpoints",
                self.tail, self.head, self.kind
            )));
        }
        if self.kind == ArcKind::Switch {
            let pair = (self.tail.layer, self.head.layer);
            let ok = matches!(
                pair,
                (Layer::Walking, Layer::Micromobility)
                    | (Layer::Micromobility, Layer::Walking)
                    | (Layer::Walking, Layer::Road)
                    | (Layer::Road, Layer::Walking)
            );
            if !ok {
                return Err(Error::Graph(format!(
                    "switching arc may not join {:?} and {:?}",
                    self.tail.layer, self.head.layer
                )));
            }
            if self.length_km != 0.0 {
                return Err(Error::Graph("switching arc must have zero length".into()));
            }
        } else if self.speed_kmh <= 0.0 {
            return Err(Error::Graph(format!(
                "arc {:?} -> {:?} has non-positive speed {}",
                self.tail, self.head, self.speed_kmh
            )));
        }
        if !(self.capacity > 0.0) {
            return Err(Error::Graph(format!(
                "arc {:?} -> {:?} has non-positive capacity {}",
                self.tail, self.head, self.capacity
            )));
        }
        if self.free_flow_time_h < 0.0 {
            return Err(Error::Graph("negative free-flow time".into()));
        }
        Ok(())
    }
}

/// Free-flow traversal time in hours: length divided by maximum speed.
pub fn free_flow_time(length_km: f64, speed_kmh: f64) -> Result<f64> {
    if speed_kmh <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "speed must be positive, got {speed_kmh} km/h"
        )));
    }
    if length_km < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "length must be nonnegative, got {length_km} km"
        )));
    }
    Ok(length_km / speed_kmh)
}

/// One mode's digraph: a node count and the arcs internal to the layer.
#[derive(Clone, Debug)]
pub struct LayeredNetwork {
    pub layer: Layer,
    pub node_count: usize,
    pub arcs: Vec<Arc>,
}

impl LayeredNetwork {
    /// Validates endpoints, speeds, and capacities. Strong connectivity is
    /// *not* required here so that connectivity checks can be exercised on
    /// arbitrary inputs; the supergraph constructors enforce it.
    pub fn new(layer: Layer, node_count: usize, arcs: Vec<Arc>) -> Result<Self> {
        for arc in &arcs {
            arc.validate()?;
            if arc.kind == ArcKind::Switch {
                return Err(Error::Graph("switching arc inside a layer".into()));
            }
            for end in [arc.tail, arc.head] {
                if end.layer != layer || end.local >= node_count {
                    return Err(Error::Graph(format!(
                        "arc endpoint {end:?} outside layer {layer:?} with {node_count} nodes"
                    )));
                }
            }
        }
        Ok(LayeredNetwork { layer, node_count, arcs })
    }

    /// Strong-connectivity check; on failure yields a witness pair `(u, v)`
    /// with no directed path from `u` to `v`.
    pub fn check_strong_connectivity(&self) -> Connectivity {
        let edges: Vec<(usize, usize)> =
            self.arcs.iter().map(|a| (a.tail.local, a.head.local)).collect();
        match strong_connectivity(self.node_count, &edges) {
            None => Connectivity::Connected,
            Some((u, v)) => Connectivity::Disconnected {
                from: NodeRef::new(self.layer, u),
                to: NodeRef::new(self.layer, v),
            },
        }
    }
}

/// Outcome of a strong-connectivity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connectivity {
    Connected,
    /// No directed path exists from `from` to `to`.
    Disconnected { from: NodeRef, to: NodeRef },
}

impl Connectivity {
    pub fn is_connected(&self) -> bool {
        matches!(self, Connectivity::Connected)
    }
}

/// Checks that every node reaches every other node, given `n` nodes and a
/// directed edge list. Returns `None` when strongly connected, otherwise a
/// witness `(u, v)` with no path u -> v.
///
/// Two breadth-first sweeps from node 0 (forward and on the reversed graph)
/// suffice: the graph is strongly connected iff node 0 reaches all nodes and
/// all nodes reach node 0.
fn strong_connectivity(n: usize, edges: &[(usize, usize)]) -> Option<(usize, usize)> {
    if n <= 1 {
        return None;
    }
    let mut fwd = vec![Vec::new(); n];
    let mut bwd = vec![Vec::new(); n];
    for &(u, v) in edges {
        fwd[u].push(v);
        bwd[v].push(u);
    }
    let reach = |adj: &Vec<Vec<usize>>| -> Vec<bool> {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    };
    let forward = reach(&fwd);
    if let Some(v) = forward.iter().position(|&s| !s) {
        return Some((0, v));
    }
    let backward = reach(&bwd);
    if let Some(v) = backward.iter().position(|&s| !s) {
        return Some((v, 0));
    }
    None
}

/// The full intermodal network: three layers plus switching arcs, with dense
/// node and arc indexing.
///
/// Arcs are stored in kind-major order (walking, micromobility, road,
/// switching); nodes in layer-major order. The signed incidence structure is
/// kept implicitly as per-node in/out arc lists; [`Supergraph::incidence_entries`]
/// materializes the +-1 entries for cross-checks.
#[derive(Clone, Debug)]
pub struct Supergraph {
    node_counts: [usize; 3],
    node_offsets: [usize; 3],
    arcs: Vec<Arc>,
    kind_ranges: [std::ops::Range<usize>; 4],
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
}

impl Supergraph {
    /// Assembles and validates a supergraph from its three layers and a set
    /// of switching arcs. Every layer and the union must be strongly
    /// connected, switching arcs may only join walking with another layer,
    /// and all arcs must pass per-arc validation.
    pub fn assemble(
        walking: LayeredNetwork,
        micromobility: LayeredNetwork,
        road: LayeredNetwork,
        switch_arcs: Vec<Arc>,
    ) -> Result<Self> {
        let layers = [&walking, &micromobility, &road];
        for (net, expect) in layers.iter().zip(Layer::ALL) {
            if net.layer != expect {
                return Err(Error::Graph(format!(
                    "layer slot {expect:?} holds a {:?} network",
                    net.layer
                )));
            }
            if let Connectivity::Disconnected { from, to } = net.check_strong_connectivity() {
                return Err(Error::NotStronglyConnected { from, to });
            }
        }
        let node_counts = [walking.node_count, micromobility.node_count, road.node_count];
        let node_offsets = [0, node_counts[0], node_counts[0] + node_counts[1]];
        let total_nodes: usize = node_counts.iter().sum();

        let mut arcs = Vec::with_capacity(
            walking.arcs.len() + micromobility.arcs.len() + road.arcs.len() + switch_arcs.len(),
        );
        let mut kind_ranges = std::array::from_fn::<_, 4, _>(|_| 0..0);
        for (slot, layer_arcs) in
            [walking.arcs, micromobility.arcs, road.arcs, switch_arcs].into_iter().enumerate()
        {
            let start = arcs.len();
            arcs.extend(layer_arcs);
            kind_ranges[slot] = start..arcs.len();
        }
        for (slot, range) in kind_ranges.iter().enumerate() {
            let expect = [ArcKind::Walk, ArcKind::Micro, ArcKind::Road, ArcKind::Switch][slot];
            for arc in &arcs[range.clone()] {
                arc.validate()?;
                if arc.kind != expect {
                    return Err(Error::Graph(format!(
                        "arc of kind {:?} in the {:?} slot",
                        arc.kind, expect
                    )));
                }
                for end in [arc.tail, arc.head] {
                    if end.local >= node_counts[end.layer.ordinal()] {
                        return Err(Error::Graph(format!("arc endpoint {end:?} out of range")));
                    }
                }
            }
        }

        let index_of = |n: NodeRef| node_offsets[n.layer.ordinal()] + n.local;
        let mut out_arcs = vec![Vec::new(); total_nodes];
        let mut in_arcs = vec![Vec::new(); total_nodes];
        for (id, arc) in arcs.iter().enumerate() {
            out_arcs[index_of(arc.tail)].push(id);
            in_arcs[index_of(arc.head)].push(id);
        }

        let g = Supergraph { node_counts, node_offsets, arcs, kind_ranges, out_arcs, in_arcs };
        if let Connectivity::Disconnected { from, to } = g.check_strong_connectivity() {
            return Err(Error::NotStronglyConnected { from, to });
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.node_counts.iter().sum()
    }

    pub fn layer_node_count(&self, layer: Layer) -> usize {
        self.node_counts[layer.ordinal()]
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> &Arc {
        &self.arcs[id]
    }

    /// Dense arc ids of one kind; kinds partition `0..arc_count()` in order
    /// walking, micromobility, road, switching.
    pub fn arc_ids(&self, kind: ArcKind) -> std::ops::Range<usize> {
        let slot = match kind {
            ArcKind::Walk => 0,
            ArcKind::Micro => 1,
            ArcKind::Road => 2,
            ArcKind::Switch => 3,
        };
        self.kind_ranges[slot].clone()
    }

    /// Dense index of a node; layer blocks are contiguous in the order
    /// walking, micromobility, road.
    pub fn node_index(&self, node: NodeRef) -> Result<usize> {
        if node.local >= self.node_counts[node.layer.ordinal()] {
            return Err(Error::InvalidNode(node));
        }
        Ok(self.node_offsets[node.layer.ordinal()] + node.local)
    }

    pub fn node_ref(&self, index: usize) -> NodeRef {
        for layer in Layer::ALL.into_iter().rev() {
            let off = self.node_offsets[layer.ordinal()];
            if index >= off {
                return NodeRef::new(layer, index - off);
            }
        }
        unreachable!("node index underflow")
    }

    /// Arc ids leaving `node`.
    pub fn out_arcs(&self, node: NodeRef) -> Result<&[usize]> {
        Ok(&self.out_arcs[self.node_index(node)?])
    }

    /// Arc ids entering `node`.
    pub fn in_arcs(&self, node: NodeRef) -> Result<&[usize]> {
        Ok(&self.in_arcs[self.node_index(node)?])
    }

    pub(crate) fn out_arcs_dense(&self, node_index: usize) -> &[usize] {
        &self.out_arcs[node_index]
    }

    pub(crate) fn in_arcs_dense(&self, node_index: usize) -> &[usize] {
        &self.in_arcs[node_index]
    }

    /// Signed incidence entries `(node index, arc id, sign)`: -1 at the tail,
    /// +1 at the head. Exists for cross-checking the adjacency-derived
    /// constraint rows; not used by the LP builder.
    pub fn incidence_entries(&self) -> Vec<(usize, usize, i8)> {
        let mut entries = Vec::with_capacity(2 * self.arcs.len());
        for (id, arc) in self.arcs.iter().enumerate() {
            entries.push((self.node_index(arc.tail).unwrap(), id, -1));
            entries.push((self.node_index(arc.head).unwrap(), id, 1));
        }
        entries
    }

    pub fn check_strong_connectivity(&self) -> Connectivity {
        let edges: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|a| (self.node_index(a.tail).unwrap(), self.node_index(a.head).unwrap()))
            .collect();
        match strong_connectivity(self.node_count(), &edges) {
            None => Connectivity::Connected,
            Some((u, v)) => Connectivity::Disconnected {
                from: self.node_ref(u),
                to: self.node_ref(v),
            },
        }
    }
}

/// A travel request: `rate` users per hour want to go from `origin` to
/// `destination`, both on the walking layer.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Request {
    pub origin: NodeRef,
    pub destination: NodeRef,
    pub rate: f64,
}

impl Request {
    pub fn new(origin: NodeRef, destination: NodeRef, rate: f64) -> Result<Self> {
        if origin.layer != Layer::Walking || destination.layer != Layer::Walking {
            return Err(Error::Graph("requests must originate and end on the walking layer".into()));
        }
        if origin == destination {
            return Err(Error::Graph("request origin equals destination".into()));
        }
        if !(rate > 0.0) {
            return Err(Error::Graph(format!("request rate must be positive, got {rate}")));
        }
        Ok(Request { origin, destination, rate })
    }
}

/// Builds the three-layer supergraph from a road network by replicating the
/// road topology into the walking and micromobility layers at their own
/// speeds, then adding switching arcs (walking <-> micromobility and
/// walking <-> road, both directions) at every geographic node, or at the
/// nodes selected in `config.switch_nodes`.
pub fn build_supergraph(road_net: &LayeredNetwork, config: &ScenarioConfig) -> Result<Supergraph> {
    if road_net.layer != Layer::Road {
        return Err(Error::Graph("build_supergraph expects a road-layer network".into()));
    }
    config.validate()?;
    if let Connectivity::Disconnected { from, to } = road_net.check_strong_connectivity() {
        return Err(Error::NotStronglyConnected { from, to });
    }

    let replicate = |layer: Layer, speed_kmh: f64| -> Result<LayeredNetwork> {
        let arcs = road_net
            .arcs
            .iter()
            .map(|a| {
                // Walking/micromobility arcs are uncapacitated; the road
                // layer keeps its per-arc capacity.
                let capacity =
                    if layer == Layer::Road { a.capacity } else { f64::INFINITY };
                Arc::intra(layer, a.tail.local, a.head.local, a.length_km, speed_kmh, capacity)
            })
            .collect::<Result<Vec<_>>>()?;
        LayeredNetwork::new(layer, road_net.node_count, arcs)
    };

    let walking = replicate(Layer::Walking, config.walking_speed_kmh)?;
    let micro = replicate(Layer::Micromobility, config.micromobility_speed_kmh)?;
    let road = replicate(Layer::Road, config.road_speed_kmh)?;

    let switch_here: Vec<bool> = match &config.switch_nodes {
        None => vec![true; road_net.node_count],
        Some(selected) => {
            let mut mask = vec![false; road_net.node_count];
            for &node in selected {
                if node == 0 || node > road_net.node_count {
                    return Err(Error::Config(format!(
                        "switch node {node} out of range 1..={}",
                        road_net.node_count
                    )));
                }
                mask[node - 1] = true;
            }
            mask
        }
    };

    let mut switch_arcs = Vec::new();
    for (local, enabled) in switch_here.iter().enumerate() {
        if !enabled {
            continue;
        }
        let w = NodeRef::new(Layer::Walking, local);
        for other_layer in [Layer::Micromobility, Layer::Road] {
            let o = NodeRef::new(other_layer, local);
            switch_arcs.push(Arc::switch(w, o, config.switching_time_h, config.switch_capacity));
            switch_arcs.push(Arc::switch(o, w, config.switching_time_h, config.switch_capacity));
        }
    }

    Supergraph::assemble(walking, micro, road, switch_arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::ScenarioConfig;

    pub(crate) fn road_loop(n: usize, length_km: f64, capacity: f64) -> LayeredNetwork {
        let mut arcs = Vec::new();
        for i in 0..n {
            let j = (i + 1) % n;
            arcs.push(Arc::intra(Layer::Road, i, j, length_km, 45.0, capacity).unwrap());
            arcs.push(Arc::intra(Layer::Road, j, i, length_km, 45.0, capacity).unwrap());
        }
        LayeredNetwork::new(Layer::Road, n, arcs).unwrap()
    }

    #[test]
    fn free_flow_time_examples() {
        assert_eq!(free_flow_time(3.0, 3.0).unwrap(), 1.0);
        assert!((free_flow_time(1.0, 45.0).unwrap() - 1.0 / 45.0).abs() < 1e-15);
        assert_eq!(free_flow_time(0.0, 15.0).unwrap(), 0.0);
        assert!(free_flow_time(1.0, 0.0).is_err());
        assert!(free_flow_time(1.0, -3.0).is_err());
        assert!(free_flow_time(-1.0, 3.0).is_err());
    }

    #[test]
    fn two_node_loop_counts() {
        let road = road_loop(2, 1.0, 100.0);
        let g = build_supergraph(&road, &ScenarioConfig::default()).unwrap();
        assert_eq!(g.node_count(), 6);
        let intra = g.arc_ids(ArcKind::Walk).len()
            + g.arc_ids(ArcKind::Micro).len()
            + g.arc_ids(ArcKind::Road).len();
        assert_eq!(intra, 6);
        assert_eq!(g.arc_ids(ArcKind::Switch).len(), 8);
        assert_eq!(g.arc_count(), 14);
    }

    #[test]
    fn zero_speed_rejected() {
        let mut cfg = ScenarioConfig::default();
        cfg.walking_speed_kmh = 0.0;
        let road = road_loop(2, 1.0, 100.0);
        assert!(build_supergraph(&road, &cfg).is_err());
    }

    #[test]
    fn disconnected_road_rejected() {
        let arcs = vec![Arc::intra(Layer::Road, 0, 1, 1.0, 45.0, 10.0).unwrap()];
        let net = LayeredNetwork::new(Layer::Road, 2, arcs).unwrap();
        let conn = net.check_strong_connectivity();
        assert_eq!(
            conn,
            Connectivity::Disconnected {
                from: NodeRef::new(Layer::Road, 1),
                to: NodeRef::new(Layer::Road, 0),
            }
        );
        assert!(build_supergraph(&net, &ScenarioConfig::default()).is_err());
    }

    #[test]
    fn self_loop_rejected() {
        assert!(Arc::intra(Layer::Road, 1, 1, 1.0, 45.0, 10.0).unwrap().validate().is_err());
    }

    #[test]
    fn switch_arcs_have_zero_length_and_switch_time() {
        let cfg = ScenarioConfig::default();
        let g = build_supergraph(&road_loop(3, 2.0, 100.0), &cfg).unwrap();
        for id in g.arc_ids(ArcKind::Switch) {
            let a = g.arc(id);
            assert_eq!(a.length_km, 0.0);
            assert_eq!(a.free_flow_time_h, cfg.switching_time_h);
            // every switching arc has its reverse companion
            assert!(g
                .arc_ids(ArcKind::Switch)
                .map(|i| g.arc(i))
                .any(|b| b.tail == a.head && b.head == a.tail));
        }
    }

    #[test]
    fn no_micro_road_switch() {
        let g = build_supergraph(&road_loop(3, 2.0, 100.0), &ScenarioConfig::default()).unwrap();
        for a in g.arcs() {
            if a.kind == ArcKind::Switch {
                assert!(a.tail.layer == Layer::Walking || a.head.layer == Layer::Walking);
            }
        }
    }

    #[test]
    fn handshake_identity() {
        let g = build_supergraph(&road_loop(4, 1.0, 50.0), &ScenarioConfig::default()).unwrap();
        let total_out: usize =
            (0..g.node_count()).map(|i| g.out_arcs(g.node_ref(i)).unwrap().len()).sum();
        let total_in: usize =
            (0..g.node_count()).map(|i| g.in_arcs(g.node_ref(i)).unwrap().len()).sum();
        assert_eq!(total_out, g.arc_count());
        assert_eq!(total_in, g.arc_count());
    }

    #[test]
    fn incidence_matches_adjacency() {
        let g = build_supergraph(&road_loop(3, 1.0, 50.0), &ScenarioConfig::default()).unwrap();
        let entries = g.incidence_entries();
        assert_eq!(entries.len(), 2 * g.arc_count());
        for (node, arc, sign) in entries {
            let n = g.node_ref(node);
            if sign < 0 {
                assert!(g.out_arcs(n).unwrap().contains(&arc));
            } else {
                assert!(g.in_arcs(n).unwrap().contains(&arc));
            }
        }
    }

    #[test]
    fn per_node_switching_config() {
        let mut cfg = ScenarioConfig::default();
        cfg.switch_nodes = Some(vec![1, 2, 3]);
        let g = build_supergraph(&road_loop(3, 1.0, 50.0), &cfg).unwrap();
        assert_eq!(g.arc_ids(ArcKind::Switch).len(), 12);
        // dropping all switching disconnects the supergraph
        cfg.switch_nodes = Some(vec![]);
        assert!(matches!(
            build_supergraph(&road_loop(3, 1.0, 50.0), &cfg),
            Err(Error::NotStronglyConnected { .. })
        ));
    }

    #[test]
    fn out_arcs_rejects_invalid_node() {
        let g = build_supergraph(&road_loop(2, 1.0, 50.0), &ScenarioConfig::default()).unwrap();
        assert!(g.out_arcs(NodeRef::new(Layer::Road, 99)).is_err());
    }

    #[test]
    fn request_validation() {
        let o = NodeRef::walking(0);
        let d = NodeRef::walking(1);
        assert!(Request::new(o, d, 5.0).is_ok());
        assert!(Request::new(o, o, 5.0).is_err());
        assert!(Request::new(o, d, 0.0).is_err());
        assert!(Request::new(NodeRef::new(Layer::Road, 0), d, 1.0).is_err());
    }
}
