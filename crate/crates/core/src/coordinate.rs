use std::fmt;

use crate::{Error, Result, Scalar};

/// Latitude/longitude in decimal degrees (WGS84).
///
/// Construction validates: both components finite, latitude within
/// [-90, 90] and longitude within [-180, 180]. Out-of-range input is
/// rejected, never clamped or wrapped.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GeoCoordinate<T = f64> {
    latitude: T,
    longitude: T,
}

impl<T: Scalar> GeoCoordinate<T> {
    pub fn new(latitude: T, longitude: T) -> Result<Self> {
        if !latitude.is_finite() || !longitude.is_finite() {
            return Err(Error::InvalidCoordinate(format!(
                "non-finite value ({latitude}, {longitude})"
            )));
        }
        if !Self::latitude_in_range(latitude) {
            return Err(Error::InvalidCoordinate(format!(
                "latitude {latitude} outside [-90, 90]"
            )));
        }
        if !Self::longitude_in_range(longitude) {
            return Err(Error::InvalidCoordinate(format!(
                "longitude {longitude} outside [-180, 180]"
            )));
        }
        // fold -0.0 into 0.0 so equal points compare and render identically
        Ok(Self {
            latitude: latitude + T::zero(),
            longitude: longitude + T::zero(),
        })
    }

    /// The null island point (0, 0).
    pub fn origin() -> Self {
        Self {
            latitude: T::zero(),
            longitude: T::zero(),
        }
    }

    pub fn latitude(&self) -> T {
        self.latitude
    }

    pub fn longitude(&self) -> T {
        self.longitude
    }

    pub(crate) fn latitude_in_range(v: T) -> bool {
        let limit = T::from_f64(90.0).expect("90 is representable");
        v >= -limit && v <= limit
    }

    pub(crate) fn longitude_in_range(v: T) -> bool {
        let limit = T::from_f64(180.0).expect("180 is representable");
        v >= -limit && v <= limit
    }

    /// Largest component-wise distance to `other`, in degrees.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        (self.latitude - other.latitude)
            .abs()
            .max((self.longitude - other.longitude).abs())
    }

    /// Widens to double precision.
    pub fn to_f64(&self) -> GeoCoordinate<f64> {
        GeoCoordinate {
            latitude: self.latitude.to_f64().unwrap_or_default(),
            longitude: self.longitude.to_f64().unwrap_or_default(),
        }
    }
}

impl<T: Scalar> Default for GeoCoordinate<T> {
    fn default() -> Self {
        Self::origin()
    }
}

impl<T: Scalar> fmt::Display for GeoCoordinate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.latitude, self.longitude)
    }
}
