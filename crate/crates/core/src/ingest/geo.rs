// SPDX-License-Identifier: Apache-2.0

//! Geographic-closeness conceptual networks from location check-ins.

use std::collections::HashMap;
use std::io::Read;

use super::PairingPolicy;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Mean Earth radius in kilometres.
pub const EARTH_RADIUS_KM: f64 = 6371.0;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckinRecord {
    pub user: String,
    pub latitude: f64,
    pub longitude: f64,
}

/// Great-circle distance in kilometres between two points given in degrees.
pub fn haversine_km(lat1: f64, lon1: f64, lat2: f64, lon2: f64) -> f64 {
    let (phi1, phi2) = (lat1.to_radians(), lat2.to_radians());
    let dphi = (lat2 - lat1).to_radians();
    let dlambda = (lon2 - lon1).to_radians();
    let a = (dphi / 2.0).sin().powi(2) + phi1.cos() * phi2.cos() * (dlambda / 2.0).sin().powi(2);
    2.0 * EARTH_RADIUS_KM * a.sqrt().min(1.0).asin()
}

/// Reads `user,lat,lon` CSV. A header row is detected and skipped when its
/// coordinate columns are not numeric.
pub fn parse_checkins(reader: impl Read) -> Result<Vec<CheckinRecord>> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut out = Vec::new();
    for (i, record) in csv.records().enumerate() {
        let line = i + 1;
        let record = record.map_err(|e| Error::parse(line, e.to_string()))?;
        if record.len() != 3 {
            return Err(Error::parse(line, format!("expected `user,lat,lon`, found {} field(s)", record.len())));
        }
        let (lat, lon) = (record[1].parse::<f64>(), record[2].parse::<f64>());
        let (latitude, longitude) = match (lat, lon) {
            (Ok(lat), Ok(lon)) => (lat, lon),
            _ if i == 0 => continue,
            _ => return Err(Error::parse(line, "latitude and longitude must be numbers")),
        };
        if !(-90.0..=90.0).contains(&latitude) || !(-180.0..=180.0).contains(&longitude) {
            return Err(Error::parse(line, format!("coordinates out of range: ({latitude}, {longitude})")));
        }
        out.push(CheckinRecord {
            user: record[0].to_owned(),
            latitude,
            longitude,
        });
    }
    Ok(out)
}

/// Conceptual network over the users of `friendship`.
///
/// Each user sits at the componentwise mean of their check-ins. Scored pairs
/// get weight `1 - d / d_max`, where `d_max` is the largest distance among
/// the scored pairs; pairs at `d_max` get no edge. Check-ins by users absent
/// from `friendship` are ignored.
pub fn geo_conceptual(checkins: &[CheckinRecord], friendship: &Graph, policy: PairingPolicy) -> Result<Graph> {
    let mut sums: HashMap<&str, (f64, f64, usize)> = HashMap::new();
    for c in checkins {
        let entry = sums.entry(c.user.as_str()).or_default();
        entry.0 += c.latitude;
        entry.1 += c.longitude;
        entry.2 += 1;
    }
    let mut missing = Vec::new();
    let positions: Vec<(f64, f64)> = friendship
        .labels()
        .iter()
        .map(|user| match sums.get(user.as_str()) {
            Some(&(lat, lon, k)) => (lat / k as f64, lon / k as f64),
            None => {
                missing.push(user.clone());
                (0.0, 0.0)
            }
        })
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingCheckins(missing));
    }

    let scored: Vec<_> = policy
        .pairs(friendship)
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (positions[u.index()], positions[v.index()]);
            (u, v, haversine_km(a.0, a.1, b.0, b.1))
        })
        .collect();
    let d_max = scored.iter().map(|&(_, _, d)| d).fold(0.0, f64::max);

    let mut builder = GraphBuilder::new();
    for label in friendship.labels() {
        builder.add_node(label);
    }
    for (u, v, d) in scored {
        let w = if d_max > 0.0 { 1.0 - d / d_max } else { 1.0 };
        if w > 0.0 {
            builder.add_edge_ids(u, v, w)?;
        }
    }
    Ok(builder.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(user: &str, latitude: f64, longitude: f64) -> CheckinRecord {
        CheckinRecord { user: user.into(), latitude, longitude }
    }

    fn friends(labels: &[&str]) -> Graph {
        let mut b = GraphBuilder::new();
        for l in labels {
            b.add_node(l);
        }
        b.build()
    }

    #[test]
    fn haversine_known_values() {
        assert_eq!(haversine_km(10.0, 20.0, 10.0, 20.0), 0.0);
        // one degree of latitude
        let d = haversine_km(0.0, 0.0, 1.0, 0.0);
        assert!((d - EARTH_RADIUS_KM * std::f64::consts::PI / 180.0).abs() < 1e-9);
        // antipodes
        let d = haversine_km(0.0, 0.0, 0.0, 180.0);
        assert!((d - EARTH_RADIUS_KM * std::f64::consts::PI).abs() < 1e-6);
    }

    #[test]
    fn colocated_users_get_unit_weight() {
        let g = friends(&["a", "b", "c"]);
        let cs = [at("a", 45.0, 7.0), at("b", 45.0, 7.0), at("c", 46.0, 7.0)];
        let out = geo_conceptual(&cs, &g, PairingPolicy::AllPairs).unwrap();
        assert_eq!(out.edge_weight(out.id("a").unwrap(), out.id("b").unwrap()), Some(1.0));
        // a-c and b-c are both at the maximum distance
        assert_eq!(out.edge_count(), 1);
    }

    #[test]
    fn weights_scale_with_distance() {
        // Points on the equator: b is halfway between a and c.
        let g = friends(&["a", "b", "c"]);
        let cs = [at("a", 0.0, 0.0), at("b", 0.0, 0.5), at("c", 0.0, 1.0)];
        let out = geo_conceptual(&cs, &g, PairingPolicy::AllPairs).unwrap();
        let w = |x: &str, y: &str| out.edge_weight(out.id(x).unwrap(), out.id(y).unwrap());
        assert!((w("a", "b").unwrap() - 0.5).abs() < 1e-9);
        assert!((w("b", "c").unwrap() - 0.5).abs() < 1e-9);
        assert_eq!(w("a", "c"), None);
    }

    #[test]
    fn users_are_placed_at_mean_position() {
        let g = friends(&["a", "b", "c"]);
        let cs = [at("a", 0.0, -1.0), at("a", 0.0, 1.0), at("b", 0.0, 0.0), at("c", 0.0, 2.0)];
        let out = geo_conceptual(&cs, &g, PairingPolicy::AllPairs).unwrap();
        assert_eq!(out.edge_weight(out.id("a").unwrap(), out.id("b").unwrap()), Some(1.0));
    }

    #[test]
    fn missing_checkins_are_listed() {
        let g = friends(&["a", "b", "c"]);
        match geo_conceptual(&[at("b", 0.0, 0.0)], &g, PairingPolicy::AllPairs) {
            Err(Error::MissingCheckins(users)) => assert_eq!(users, ["a", "c"]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn hop_policy_limits_pairs() {
        let mut b = GraphBuilder::new();
        for (u, v) in [("a", "b"), ("b", "c"), ("c", "d")] {
            b.add_edge(u, v, 1.0).unwrap();
        }
        let g = b.build();
        let cs = [at("a", 0.0, 0.0), at("b", 0.0, 1.0), at("c", 0.0, 2.0), at("d", 0.0, 3.0)];
        let out = geo_conceptual(&cs, &g, PairingPolicy::WithinHops(1)).unwrap();
        // scored: a-b, b-c, c-d; all equal distance, so all hit d_max
        assert_eq!(out.edge_count(), 0);
        let out = geo_conceptual(&cs, &g, PairingPolicy::WithinHops(2)).unwrap();
        assert_eq!(out.edge_count(), 3);
    }

    #[test]
    fn checkin_csv_with_and_without_header() {
        let with = parse_checkins("user,lat,lon\nu1, 45.0, 7.5\nu2,-10,170\n".as_bytes()).unwrap();
        assert_eq!(with.len(), 2);
        assert_eq!(with[0], at("u1", 45.0, 7.5));
        let without = parse_checkins("u1,45.0,7.5\n".as_bytes()).unwrap();
        assert_eq!(without, vec![at("u1", 45.0, 7.5)]);
        assert!(parse_checkins("u1,95.0,7.5\n".as_bytes()).is_err());
        assert!(parse_checkins("u1,45.0,7.5\nu2,x,y\n".as_bytes()).is_err());
    }
}
