use pps_core::Coordinate;

use crate::cli::CliError;

/// Where the client's location fix comes from.
///
/// There is no hardware access: a static fix is read from flags or the
/// `PINGMARK_LAT`/`PINGMARK_LON` environment variables.
#[derive(Debug, Clone, PartialEq)]
pub enum LocationProvider {
    Static(Coordinate),
    None,
}

impl LocationProvider {
    /// Builds a provider from raw latitude/longitude strings. Both absent
    /// means no provider; exactly one absent is an error.
    pub fn from_parts(lat: Option<&str>, lon: Option<&str>) -> Result<Self, CliError> {
        match (lat, lon) {
            (None, None) => Ok(LocationProvider::None),
            (Some(_), None) | (None, Some(_)) => Err(CliError::Validation(
                "latitude and longitude must be given together".to_owned(),
            )),
            (Some(lat), Some(lon)) => {
                let parse = |name: &str, raw: &str| {
                    raw.trim().parse::<f64>().map_err(|_| {
                        CliError::Validation(format!("{name} {raw:?} is not a number"))
                    })
                };
                let coordinate = Coordinate::new(parse("latitude", lat)?, parse("longitude", lon)?)
                    .map_err(|e| CliError::Validation(e.to_string()))?;
                Ok(LocationProvider::Static(coordinate))
            }
        }
    }

    /// The fix, or an error explaining that none is configured.
    pub fn coordinate(&self) -> Result<Coordinate, CliError> {
        match self {
            LocationProvider::Static(c) => Ok(*c),
            LocationProvider::None => Err(CliError::Validation(
                "no location configured: pass --lat/--lon or set PINGMARK_LAT/PINGMARK_LON"
                    .to_owned(),
            )),
        }
    }
}
