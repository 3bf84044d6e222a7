//! Quick-action links and the resolver's JSON answer.

use serde::{Deserialize, Serialize};

use crate::geo::{coordinate_geo_uri, geo_decimal};
use crate::{GeoCoordinate, PingTimestamp, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionLinks {
    /// "Open in Maps": handled by the platform's default map app.
    pub geo: String,
    pub osm: String,
    /// "Get Directions" to the point.
    pub directions: String,
}

pub fn build_action_links<T: Scalar>(coordinate: &GeoCoordinate<T>) -> ActionLinks {
    let lat = geo_decimal(coordinate.latitude());
    let lon = geo_decimal(coordinate.longitude());
    ActionLinks {
        geo: coordinate_geo_uri(coordinate),
        osm: format!("https://www.openstreetmap.org/?mlat={lat}&mlon={lon}#map=16/{lat}/{lon}"),
        directions: format!("https://www.openstreetmap.org/directions?to={lat}%2C{lon}"),
    }
}

/// Canonical resolver answer, serialized with exactly the keys
/// `latitude`, `longitude`, `timestamp` and `links`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolveResponse {
    pub latitude: f64,
    pub longitude: f64,
    pub timestamp: Option<PingTimestamp>,
    pub links: ActionLinks,
}

impl ResolveResponse {
    pub fn new<T: Scalar>(coordinate: &GeoCoordinate<T>, timestamp: Option<PingTimestamp>) -> Self {
        let wide = coordinate.to_f64();
        Self {
            latitude: wide.latitude(),
            longitude: wide.longitude(),
            timestamp,
            links: build_action_links(coordinate),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coordinate;

    #[test]
    fn origin_links() {
        let links = build_action_links(&Coordinate::origin());
        assert_eq!(links.geo, "geo:0,0");
        assert_eq!(
            links.osm,
            "https://www.openstreetmap.org/?mlat=0&mlon=0#map=16/0/0"
        );
        assert_eq!(
            links.directions,
            "https://www.openstreetmap.org/directions?to=0%2C0"
        );
    }

    #[test]
    fn southern_hemisphere_directions() {
        let links = build_action_links(&Coordinate::new(-33.8568, 151.2153).unwrap());
        assert_eq!(
            links.directions,
            "https://www.openstreetmap.org/directions?to=-33.8568%2C151.2153"
        );
        assert_eq!(links.geo, "geo:-33.8568,151.2153");
    }

    #[test]
    fn response_json_shape() {
        let c = Coordinate::new(43.0757, 25.6172).unwrap();
        let r = ResolveResponse::new(&c, Some("20251101T120000Z".parse().unwrap()));
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["latitude"], 43.0757);
        assert_eq!(v["longitude"], 25.6172);
        assert_eq!(v["timestamp"], "2025-11-01T12:00:00Z");
        assert_eq!(v["links"]["geo"], "geo:43.0757,25.6172");
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 4);

        let none = serde_json::to_value(ResolveResponse::new(&Coordinate::origin(), None)).unwrap();
        assert!(none["timestamp"].is_null());
    }
}
