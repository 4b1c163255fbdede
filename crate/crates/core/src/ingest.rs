//! TNTP network/trips parsing and scenario assembly.
//!
//! The network format: metadata tags (`<NUMBER OF NODES>`, `<NUMBER OF
//! LINKS>`, `<FIRST THRU NODE>`, `<END OF METADATA>`), then
//! whitespace-separated link rows terminated by `;`. The trips format:
//! `<NUMBER OF ZONES>`, `<TOTAL OD FLOW>`, `<END OF METADATA>`, then
//! `Origin k` blocks of `dest : flow;` entries. `~` starts a comment in both.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{self, Arc, Layer, LayeredNetwork, NodeRef, Request, Supergraph};
use crate::Result;

/// One link row of a TNTP network file. Numeric fields are kept verbatim;
/// only `init_node`/`term_node`, `capacity`, and `length` feed the model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TntpLink {
    pub init_node: usize,
    pub term_node: usize,
    pub capacity: f64,
    pub length: f64,
    pub free_flow_time: f64,
    pub b: f64,
    pub power: f64,
    pub speed: f64,
    pub toll: f64,
    pub link_type: f64,
}

/// Parsed network file: header metadata plus the link list in file order.
#[derive(Clone, Debug, PartialEq)]
pub struct TntpNetwork {
    pub node_count: usize,
    pub zone_count: Option<usize>,
    pub first_thru_node: Option<usize>,
    pub links: Vec<TntpLink>,
    /// Metadata tags we do not interpret, preserved verbatim.
    pub extra_metadata: BTreeMap<String, String>,
}

/// Parsed trips file: a dense origin-destination matrix with the diagonal
/// dropped (requests from a zone to itself are excluded by construction).
#[derive(Clone, Debug, PartialEq)]
pub struct TripsTable {
    pub zones: usize,
    /// The file's own `<TOTAL OD FLOW>` header value, if present.
    pub header_total: Option<f64>,
    /// Row-major `zones x zones` matrix; diagonal entries are zero.
    pub matrix: Vec<f64>,
    /// Sum of the diagonal entries that were dropped.
    pub dropped_diagonal: f64,
}

impl TripsTable {
    pub fn flow(&self, origin: usize, dest: usize) -> f64 {
        self.matrix[origin * self.zones + dest]
    }

    /// Total off-diagonal flow.
    pub fn total_flow(&self) -> f64 {
        self.matrix.iter().sum()
    }
}

/// Which congestion treatment the road layer gets in the LP.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CongestionModel {
    /// Constant free-flow times with hard road-capacity constraints.
    Threshold,
    /// Piecewise-linear convexification of BPR total latency in the
    /// objective; the hard capacity bound is dropped unless
    /// `pwl_keep_capacity` is set.
    PiecewiseBpr,
}

/// Scenario parameters: layer speeds, fleet sizes, rebalancing and switching
/// capacities, demand scaling, and the congestion model.
///
/// Deserializes from a flat JSON document; unknown keys are rejected.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    pub walking_speed_kmh: f64,
    pub micromobility_speed_kmh: f64,
    pub road_speed_kmh: f64,
    /// AMoD fleet size `n_R` in vehicles (vehicle-hours per hour).
    pub n_amod: f64,
    /// Micromobility fleet size `n_M` in vehicles.
    pub n_micromobility: f64,
    /// Per-node micromobility rebalancing cap (vehicles/hour).
    pub beta_node: f64,
    /// System-wide micromobility rebalancing cap (vehicles/hour).
    pub beta_total: f64,
    /// Capacity of each switching arc (flow/hour).
    pub switch_capacity: f64,
    /// Boarding/alighting time carried by each switching arc, in hours.
    pub switching_time_h: f64,
    /// Multiplier applied to raw trip-file rates to obtain requests/hour.
    pub demand_scale: f64,
    /// Multiplier from the net file's length unit to kilometers.
    pub length_unit_to_km: f64,
    pub congestion_model: CongestionModel,
    /// Number of tangent cuts per road arc in `PiecewiseBpr` mode.
    pub pwl_segments: usize,
    /// Keep the hard road-capacity bound in `PiecewiseBpr` mode.
    pub pwl_keep_capacity: bool,
    /// Charge rebalancing flow against the AMoD fleet budget in addition to
    /// user-carrying flow.
    pub include_rebalancing_in_fleet: bool,
    /// 1-based geographic nodes that carry switching arcs; `None` = all.
    pub switch_nodes: Option<Vec<usize>>,
    /// 1-based geographic nodes where the operator may feed/withdraw
    /// micromobility vehicles; `None` = all.
    pub rebalance_nodes: Option<Vec<usize>>,
    /// TNTP network file, resolved relative to the config file when loaded
    /// through [`ScenarioConfig::from_file`].
    pub net_file: Option<PathBuf>,
    /// TNTP trips file, resolved like `net_file`.
    pub trips_file: Option<PathBuf>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            walking_speed_kmh: 3.0,
            micromobility_speed_kmh: 15.0,
            road_speed_kmh: 45.0,
            n_amod: 4000.0,
            n_micromobility: 4000.0,
            beta_node: 10.0,
            beta_total: 240.0,
            switch_capacity: 500.0,
            switching_time_h: 1.0 / 60.0,
            demand_scale: 0.1,
            length_unit_to_km: 1.0,
            congestion_model: CongestionModel::Threshold,
            pwl_segments: 8,
            pwl_keep_capacity: false,
            include_rebalancing_in_fleet: false,
            switch_nodes: None,
            rebalance_nodes: None,
            net_file: None,
            trips_file: None,
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("walking_speed_kmh", self.walking_speed_kmh),
            ("micromobility_speed_kmh", self.micromobility_speed_kmh),
            ("road_speed_kmh", self.road_speed_kmh),
        ] {
            if !(v > 0.0) {
                return Err(Error::Config(format!("{name} must be positive, got {v}")));
            }
        }
        for (name, v) in [
            ("n_amod", self.n_amod),
            ("n_micromobility", self.n_micromobility),
            ("beta_node", self.beta_node),
            ("beta_total", self.beta_total),
            ("switch_capacity", self.switch_capacity),
            ("switching_time_h", self.switching_time_h),
        ] {
            if !(v >= 0.0) {
                return Err(Error::Config(format!("{name} must be nonnegative, got {v}")));
            }
        }
        if !(self.demand_scale > 0.0) {
            return Err(Error::Config("demand_scale must be positive".into()));
        }
        if !(self.length_unit_to_km > 0.0) {
            return Err(Error::Config("length_unit_to_km must be positive".into()));
        }
        if self.pwl_segments < 1 {
            return Err(Error::Config("pwl_segments must be at least 1".into()));
        }
        Ok(())
    }

    /// Loads a config from JSON, rejecting unknown keys, and resolves the
    /// data file paths relative to the config file's directory.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut cfg: ScenarioConfig = serde_json::from_str(&text)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        let base = path.parent().unwrap_or(Path::new("."));
        for file in [&mut cfg.net_file, &mut cfg.trips_file].into_iter().flatten() {
            if file.is_relative() {
                *file = base.join(&file);
            }
        }
        Ok(cfg)
    }
}

/// The travel demand: deduplicated requests and their total rate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DemandSet {
    requests: Vec<Request>,
    total_rate: f64,
}

impl DemandSet {
    /// Builds a demand set, merging duplicate (origin, destination) pairs by
    /// adding their rates.
    pub fn new(requests: impl IntoIterator<Item = Request>) -> Self {
        let mut merged: BTreeMap<(usize, usize), Request> = BTreeMap::new();
        for r in requests {
            merged
                .entry((r.origin.local, r.destination.local))
                .and_modify(|e| e.rate += r.rate)
                .or_insert(r);
        }
        let requests: Vec<Request> = merged.into_values().collect();
        let total_rate = requests.iter().map(|r| r.rate).sum();
        DemandSet { requests, total_rate }
    }

    pub fn requests(&self) -> &[Request] {
        &self.requests
    }

    pub fn total_rate(&self) -> f64 {
        self.total_rate
    }

    pub fn len(&self) -> usize {
        self.requests.len()
    }

    pub fn is_empty(&self) -> bool {
        self.requests.is_empty()
    }

    pub fn scaled(&self, factor: f64) -> DemandSet {
        DemandSet::new(self.requests.iter().map(|r| Request { rate: r.rate * factor, ..*r }))
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('~') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

/// Splits out `<TAG> value` metadata lines until `<END OF METADATA>`;
/// returns the tag map and the number of header lines consumed.
fn parse_metadata(text: &str) -> Result<(BTreeMap<String, String>, usize)> {
    let mut tags = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('<') {
            let Some(end) = rest.find('>') else {
                return Err(Error::parse(i + 1, "unterminated metadata tag"));
            };
            let tag = rest[..end].trim().to_uppercase();
            let value = rest[end + 1..].trim().to_string();
            if tag == "END OF METADATA" {
                return Ok((tags, i + 1));
            }
            tags.insert(tag, value);
        } else {
            return Err(Error::parse(
                i + 1,
                "data before <END OF METADATA>; missing metadata terminator",
            ));
        }
    }
    Err(Error::parse(text.lines().count(), "missing <END OF METADATA> tag"))
}

fn require_usize(tags: &BTreeMap<String, String>, tag: &str) -> Result<usize> {
    let value = tags
        .get(tag)
        .ok_or_else(|| Error::parse(0, format!("missing <{tag}> metadata tag")))?;
    value
        .parse::<usize>()
        .map_err(|_| Error::parse(0, format!("<{tag}> value {value:?} is not an integer")))
}

/// Parses a TNTP network file into its link list and node count.
pub fn parse_net(text: &str) -> Result<TntpNetwork> {
    let (mut tags, header_lines) = parse_metadata(text)?;
    let node_count = require_usize(&tags, "NUMBER OF NODES")?;
    let link_count = require_usize(&tags, "NUMBER OF LINKS")?;
    let zone_count = match tags.remove("NUMBER OF ZONES") {
        Some(v) => Some(v.parse::<usize>().map_err(|_| {
            Error::parse(0, format!("<NUMBER OF ZONES> value {v:?} is not an integer"))
        })?),
        None => None,
    };
    let first_thru_node = match tags.remove("FIRST THRU NODE") {
        Some(v) => Some(v.parse::<usize>().map_err(|_| {
            Error::parse(0, format!("<FIRST THRU NODE> value {v:?} is not an integer"))
        })?),
        None => None,
    };
    tags.remove("NUMBER OF NODES");
    tags.remove("NUMBER OF LINKS");

    let mut links = Vec::with_capacity(link_count);
    let mut fields: Vec<(usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate().skip(header_lines) {
        let line_no = i + 1;
        let line = strip_comment(raw);
        for token in line.split_whitespace() {
            // a terminator may be glued to the last field ("1;")
            let (token, terminated) = match token.strip_suffix(';') {
                Some(rest) => (rest, true),
                None => (token, false),
            };
            if !token.is_empty() {
                fields.push((line_no, token.to_string()));
            }
            if terminated {
                links.push(parse_link_row(&fields)?);
                fields.clear();
            }
        }
    }
    if !fields.is_empty() {
        return Err(Error::parse(fields[0].0, "trailing link fields without ';' terminator"));
    }
    if links.len() != link_count {
        return Err(Error::parse(
            0,
            format!("<NUMBER OF LINKS> says {link_count} but file has {} rows", links.len()),
        ));
    }
    for link in &links {
        if link.init_node == 0 || link.init_node > node_count {
            return Err(Error::parse(0, format!("link init node {} out of range", link.init_node)));
        }
        if link.term_node == 0 || link.term_node > node_count {
            return Err(Error::parse(0, format!("link term node {} out of range", link.term_node)));
        }
    }
    Ok(TntpNetwork { node_count, zone_count, first_thru_node, links, extra_metadata: tags })
}

fn parse_link_row(fields: &[(usize, String)]) -> Result<TntpLink> {
    let line = fields.first().map(|f| f.0).unwrap_or(0);
    if fields.len() != 10 {
        return Err(Error::parse(
            line,
            format!("link row has {} fields, expected 10", fields.len()),
        ));
    }
    let num = |idx: usize, name: &str| -> Result<f64> {
        let (line, tok) = &fields[idx];
        tok.parse::<f64>()
            .map_err(|_| Error::parse(*line, format!("field {name} is not numeric: {tok:?}")))
    };
    let int = |idx: usize, name: &str| -> Result<usize> {
        let (line, tok) = &fields[idx];
        tok.parse::<usize>()
            .map_err(|_| Error::parse(*line, format!("field {name} is not an integer: {tok:?}")))
    };
    let link = TntpLink {
        init_node: int(0, "init_node")?,
        term_node: int(1, "term_node")?,
        capacity: num(2, "capacity")?,
        length: num(3, "length")?,
        free_flow_time: num(4, "free_flow_time")?,
        b: num(5, "b")?,
        power: num(6, "power")?,
        speed: num(7, "speed")?,
        toll: num(8, "toll")?,
        link_type: num(9, "link_type")?,
    };
    if link.init_node == link.term_node {
        return Err(Error::parse(line, "link with equal init and term node"));
    }
    if !(link.capacity > 0.0) {
        return Err(Error::parse(line, format!("capacity must be positive, got {}", link.capacity)));
    }
    if link.length < 0.0 {
        return Err(Error::parse(line, format!("length must be nonnegative, got {}", link.length)));
    }
    Ok(link)
}

/// Serializes links back to TNTP rows (with a minimal metadata header), such
/// that reparsing yields an identical structure.
pub fn serialize_net(net: &TntpNetwork) -> String {
    let mut out = String::new();
    if let Some(z) = net.zone_count {
        out.push_str(&format!("<NUMBER OF ZONES> {z}\n"));
    }
    out.push_str(&format!("<NUMBER OF NODES> {}\n", net.node_count));
    if let Some(f) = net.first_thru_node {
        out.push_str(&format!("<FIRST THRU NODE> {f}\n"));
    }
    out.push_str(&format!("<NUMBER OF LINKS> {}\n", net.links.len()));
    for (tag, value) in &net.extra_metadata {
        out.push_str(&format!("<{tag}> {value}\n"));
    }
    out.push_str("<END OF METADATA>\n");
    for l in &net.links {
        out.push_str(&format!(
            "\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t;\n",
            l.init_node,
            l.term_node,
            l.capacity,
            l.length,
            l.free_flow_time,
            l.b,
            l.power,
            l.speed,
            l.toll,
            l.link_type,
        ));
    }
    out
}

/// Parses a TNTP trips file into a dense O-D matrix. Diagonal entries are
/// dropped; their sum is reported separately.
pub fn parse_trips(text: &str) -> Result<TripsTable> {
    let (tags, header_lines) = parse_metadata(text)?;
    let zones = require_usize(&tags, "NUMBER OF ZONES")?;
    let header_total = match tags.get("TOTAL OD FLOW") {
        Some(v) => Some(v.parse::<f64>().map_err(|_| {
            Error::parse(0, format!("<TOTAL OD FLOW> value {v:?} is not numeric"))
        })?),
        None => None,
    };

    let mut matrix = vec![0.0; zones * zones];
    let mut dropped_diagonal = 0.0;
    let mut origin: Option<usize> = None;
    for (i, raw) in text.lines().enumerate().skip(header_lines) {
        let line_no = i + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line_origin(line) {
            let id: usize = rest.trim().parse().map_err(|_| {
                Error::parse(line_no, format!("malformed Origin header: {line:?}"))
            })?;
            if id == 0 || id > zones {
                return Err(Error::parse(line_no, format!("origin zone {id} out of range 1..={zones}")));
            }
            origin = Some(id - 1);
            continue;
        }
        let Some(o) = origin else {
            return Err(Error::parse(line_no, "destination entries before any Origin header"));
        };
        for entry in line.split(';') {
            let entry = entry.trim();
            if entry.is_empty() {
                continue;
            }
            let Some((dest_str, flow_str)) = entry.split_once(':') else {
                return Err(Error::parse(line_no, format!("malformed `dest : flow;` entry: {entry:?}")));
            };
            let dest: usize = dest_str.trim().parse().map_err(|_| {
                Error::parse(line_no, format!("destination is not an integer: {:?}", dest_str.trim()))
            })?;
            let flow: f64 = flow_str.trim().parse().map_err(|_| {
                Error::parse(line_no, format!("flow is not numeric: {:?}", flow_str.trim()))
            })?;
            if dest == 0 || dest > zones {
                return Err(Error::parse(line_no, format!("destination zone {dest} out of range 1..={zones}")));
            }
            if flow < 0.0 {
                return Err(Error::parse(line_no, format!("negative flow {flow}")));
            }
            if dest - 1 == o {
                dropped_diagonal += flow;
            } else {
                matrix[o * zones + (dest - 1)] += flow;
            }
        }
    }
    Ok(TripsTable { zones, header_total, matrix, dropped_diagonal })
}

fn line_origin(line: &str) -> Option<&str> {
    let lower = line.to_lowercase();
    lower.starts_with("origin").then(|| &line["origin".len()..])
}

/// Serializes a trips table back to TNTP text; reparsing is lossless.
pub fn serialize_trips(trips: &TripsTable) -> String {
    let mut out = String::new();
    out.push_str(&format!("<NUMBER OF ZONES> {}\n", trips.zones));
    if let Some(t) = trips.header_total {
        out.push_str(&format!("<TOTAL OD FLOW> {t}\n"));
    }
    out.push_str("<END OF METADATA>\n\n");
    for o in 0..trips.zones {
        out.push_str(&format!("Origin {}\n", o + 1));
        for d in 0..trips.zones {
            let flow = trips.flow(o, d);
            if flow > 0.0 {
                out.push_str(&format!("    {} : {}; \n", d + 1, flow));
            }
        }
        out.push('\n');
    }
    out
}

/// Converts a parsed network into a road-layer [`LayeredNetwork`], applying
/// the configured length unit and road speed.
pub fn road_network(net: &TntpNetwork, config: &ScenarioConfig) -> Result<LayeredNetwork> {
    let arcs = net
        .links
        .iter()
        .map(|l| {
            Arc::intra(
                Layer::Road,
                l.init_node - 1,
                l.term_node - 1,
                l.length * config.length_unit_to_km,
                config.road_speed_kmh,
                l.capacity,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    LayeredNetwork::new(Layer::Road, net.node_count, arcs)
}

/// Assembles the supergraph and demand set for a scenario.
///
/// Zones must coincide with nodes (zone k maps to node k); each off-diagonal
/// O-D entry becomes a walking-layer request with rate `flow * demand_scale`.
pub fn build_scenario(
    net: &TntpNetwork,
    trips: &TripsTable,
    config: &ScenarioConfig,
) -> Result<(Supergraph, DemandSet)> {
    config.validate()?;
    if trips.zones != net.node_count {
        return Err(Error::Config(format!(
            "trips file has {} zones but network has {} nodes; \
             only zone-per-node networks are supported",
            trips.zones, net.node_count
        )));
    }
    let road = road_network(net, config)?;
    let supergraph = graph::build_supergraph(&road, config)?;
    let mut requests = Vec::new();
    for o in 0..trips.zones {
        for d in 0..trips.zones {
            let flow = trips.flow(o, d);
            if o != d && flow > 0.0 {
                requests.push(Request::new(
                    NodeRef::walking(o),
                    NodeRef::walking(d),
                    flow * config.demand_scale,
                )?);
            }
        }
    }
    Ok((supergraph, DemandSet::new(requests)))
}

/// Loads and assembles a scenario from the files named in the config.
pub fn load_scenario(config: &ScenarioConfig) -> Result<(Supergraph, DemandSet, TntpNetwork, TripsTable)> {
    let net_path = config
        .net_file
        .as_ref()
        .ok_or_else(|| Error::Config("config has no net_file".into()))?;
    let trips_path = config
        .trips_file
        .as_ref()
        .ok_or_else(|| Error::Config("config has no trips_file".into()))?;
    let net_text = std::fs::read_to_string(net_path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", net_path.display())))?;
    let trips_text = std::fs::read_to_string(trips_path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", trips_path.display())))?;
    let net = parse_net(&net_text)?;
    let trips = parse_trips(&trips_text)?;
    let (g, d) = build_scenario(&net, &trips, config)?;
    Ok((g, d, net, trips))
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINI_NET: &str = "<NUMBER OF NODES> 2\n<NUMBER OF LINKS> 2\n<FIRST THRU NODE> 1\n<END OF METADATA>\n\
        ~ comment line\n1 2 100 1 1 0.15 4 0 0 1 ;\n2 1 100 1 1 0.15 4 0 0 1 ;\n";

    #[test]
    fn parse_minimal_net() {
        let net = parse_net(MINI_NET).unwrap();
        assert_eq!(net.node_count, 2);
        assert_eq!(net.links.len(), 2);
        assert_eq!(net.links[0].init_node, 1);
        assert_eq!(net.links[0].term_node, 2);
        assert_eq!(net.links[0].capacity, 100.0);
    }

    #[test]
    fn missing_metadata_terminator() {
        let text = "<NUMBER OF NODES> 2\n<NUMBER OF LINKS> 1\n1 2 100 1 1 0.15 4 0 0 1 ;\n";
        let err = parse_net(text).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
    }

    #[test]
    fn field_count_mismatch_reports_line() {
        let text = "<NUMBER OF NODES> 2\n<NUMBER OF LINKS> 1\n<END OF METADATA>\n1 2 100 1 ;\n";
        match parse_net(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn non_numeric_field_rejected() {
        let text = "<NUMBER OF NODES> 2\n<NUMBER OF LINKS> 1\n<END OF METADATA>\n1 2 abc 1 1 0.15 4 0 0 1 ;\n";
        assert!(parse_net(text).is_err());
    }

    #[test]
    fn extra_trailing_fields_rejected() {
        let text = "<NUMBER OF NODES> 2\n<NUMBER OF LINKS> 1\n<END OF METADATA>\n1 2 100 1 1 0.15 4 0 0 1 9 ;\n";
        assert!(parse_net(text).is_err());
    }

    #[test]
    fn unknown_metadata_preserved() {
        let text = "<NUMBER OF NODES> 2\n<NUMBER OF LINKS> 1\n<MYSTERY TAG> hello\n<END OF METADATA>\n1 2 100 1 1 0.15 4 0 0 1 ;\n";
        let net = parse_net(text).unwrap();
        assert_eq!(net.extra_metadata.get("MYSTERY TAG").unwrap(), "hello");
        let round = parse_net(&serialize_net(&net)).unwrap();
        assert_eq!(round, net);
    }

    #[test]
    fn net_round_trip() {
        let net = parse_net(MINI_NET).unwrap();
        let text = serialize_net(&net);
        let reparsed = parse_net(&text).unwrap();
        assert_eq!(reparsed, net);
    }

    const MINI_TRIPS: &str = "<NUMBER OF ZONES> 2\n<TOTAL OD FLOW> 105.0\n<END OF METADATA>\n\n\
        Origin 1\n 1 : 5.0; 2 : 100.0;\n";

    #[test]
    fn parse_minimal_trips_drops_diagonal() {
        let trips = parse_trips(MINI_TRIPS).unwrap();
        assert_eq!(trips.zones, 2);
        assert_eq!(trips.flow(0, 1), 100.0);
        assert_eq!(trips.flow(0, 0), 0.0);
        assert_eq!(trips.dropped_diagonal, 5.0);
        assert_eq!(trips.total_flow(), 100.0);
    }

    #[test]
    fn trips_zone_out_of_range() {
        let text = "<NUMBER OF ZONES> 2\n<END OF METADATA>\nOrigin 1\n 3 : 1.0;\n";
        assert!(parse_trips(text).is_err());
        let text = "<NUMBER OF ZONES> 2\n<END OF METADATA>\nOrigin 9\n 1 : 1.0;\n";
        assert!(parse_trips(text).is_err());
    }

    #[test]
    fn trips_malformed_entry() {
        let text = "<NUMBER OF ZONES> 2\n<END OF METADATA>\nOrigin 1\n 2 = 1.0;\n";
        assert!(parse_trips(text).is_err());
    }

    #[test]
    fn trips_round_trip() {
        let trips = parse_trips(MINI_TRIPS).unwrap();
        let mut round = parse_trips(&serialize_trips(&trips)).unwrap();
        // the dropped diagonal is not re-serialized; compare the rest
        round.dropped_diagonal = trips.dropped_diagonal;
        round.header_total = trips.header_total;
        assert_eq!(round, trips);
    }

    #[test]
    fn build_scenario_scales_demand() {
        let net = parse_net(MINI_NET).unwrap();
        let trips = parse_trips(MINI_TRIPS).unwrap();
        let mut cfg = ScenarioConfig::default();
        cfg.demand_scale = 0.1;
        let (g, demand) = build_scenario(&net, &trips, &cfg).unwrap();
        assert_eq!(g.node_count(), 6);
        assert_eq!(demand.len(), 1);
        assert!((demand.total_rate() - 10.0).abs() < 1e-12);
        assert_eq!(demand.requests()[0].origin.layer, Layer::Walking);
        assert_eq!(demand.requests()[0].destination.layer, Layer::Walking);
    }

    #[test]
    fn walking_times_follow_config_speed() {
        let net = parse_net(MINI_NET).unwrap();
        let trips = parse_trips(MINI_TRIPS).unwrap();
        let cfg = ScenarioConfig::default();
        let (g, _) = build_scenario(&net, &trips, &cfg).unwrap();
        for id in g.arc_ids(crate::graph::ArcKind::Walk) {
            let a = g.arc(id);
            assert!((a.free_flow_time_h - a.length_km / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn zone_node_mismatch_rejected() {
        let net = parse_net(MINI_NET).unwrap();
        let trips_text = "<NUMBER OF ZONES> 3\n<END OF METADATA>\nOrigin 1\n 2 : 1.0;\n";
        let trips = parse_trips(trips_text).unwrap();
        assert!(build_scenario(&net, &trips, &ScenarioConfig::default()).is_err());
    }

    #[test]
    fn demand_merges_duplicates() {
        let o = NodeRef::walking(0);
        let d = NodeRef::walking(1);
        let set = DemandSet::new([
            Request::new(o, d, 2.0).unwrap(),
            Request::new(o, d, 3.0).unwrap(),
            Request::new(d, o, 1.0).unwrap(),
        ]);
        assert_eq!(set.len(), 2);
        assert!((set.total_rate() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn config_rejects_unknown_keys() {
        let err = serde_json::from_str::<ScenarioConfig>("{\"bogus_key\": 1}").unwrap_err();
        assert!(err.to_string().contains("bogus_key"));
    }
}
