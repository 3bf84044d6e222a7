use crate::decimal::trimmed;
use crate::{GeoCoordinate, PingmarkLink, Scalar};

/// Fraction digits kept in `geo:` URIs and map links.
pub(crate) const GEO_PLACES: usize = 6;

pub(crate) fn geo_decimal<T: Scalar>(value: T) -> String {
    trimmed(value, GEO_PLACES)
}

pub(crate) fn coordinate_geo_uri<T: Scalar>(c: &GeoCoordinate<T>) -> String {
    format!(
        "geo:{},{}",
        geo_decimal(c.latitude()),
        geo_decimal(c.longitude())
    )
}

/// RFC 5870 `geo:<lat>,<lon>`. The timestamp has no place in a geo URI and
/// is dropped.
pub fn to_geo_uri<T: Scalar>(link: &PingmarkLink<T>) -> String {
    coordinate_geo_uri(&link.coordinate)
}
