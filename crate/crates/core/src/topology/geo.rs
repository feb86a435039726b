//! Great-circle distances and the distance-to-delay conversion.

use crate::error::{Error, Result};
use crate::topology::Node;

/// Mean Earth radius in kilometers.
pub const EARTH_RADIUS_KM: f64 = 6371.0;

/// Default signal propagation speed in km/ms, roughly 2/3 of the speed of
/// light as typical for optical fiber.
pub const DEFAULT_SPEED_KM_PER_MS: f64 = 200.0;

/// Haversine great-circle distance in kilometers between two (latitude,
/// longitude) pairs given in degrees.
pub fn haversine_km(lat1: f64, lon1: f64, lat2: f64, lon2: f64) -> f64 {
    let phi1 = lat1.to_radians();
    let phi2 = lat2.to_radians();
    let half_dphi = (lat2 - lat1).to_radians() / 2.0;
    let half_dlam = (lon2 - lon1).to_radians() / 2.0;
    let a = half_dphi.sin().powi(2) + phi1.cos() * phi2.cos() * half_dlam.sin().powi(2);
    2.0 * EARTH_RADIUS_KM * a.sqrt().min(1.0).asin()
}

/// One-way propagation delay in milliseconds between two nodes, derived from
/// their coordinates.
///
/// Fails with [`Error::MissingCoordinates`] when either node has no
/// coordinates. Panics if `speed_km_per_ms` is not positive.
pub fn geo_latency(a: &Node, b: &Node, speed_km_per_ms: f64) -> Result<f64> {
    assert!(
        speed_km_per_ms > 0.0,
        "propagation speed must be positive, got {speed_km_per_ms}"
    );
    let (lat_a, lon_a) = a
        .coordinates()
        .ok_or_else(|| Error::MissingCoordinates(a.label.clone()))?;
    let (lat_b, lon_b) = b
        .coordinates()
        .ok_or_else(|| Error::MissingCoordinates(b.label.clone()))?;
    Ok(haversine_km(lat_a, lon_a, lat_b, lon_b) / speed_km_per_ms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn node(id: usize, lat: f64, lon: f64) -> Node {
        Node {
            id,
            label: format!("n{id}"),
            latitude: Some(lat),
            longitude: Some(lon),
        }
    }

    // Independent check: spherical law of cosines, a distinct formula from
    // the haversine used by the implementation.
    fn law_of_cosines_km(lat1: f64, lon1: f64, lat2: f64, lon2: f64) -> f64 {
        let (p1, p2) = (lat1.to_radians(), lat2.to_radians());
        let dl = (lon2 - lon1).to_radians();
        let c = (p1.sin() * p2.sin() + p1.cos() * p2.cos() * dl.cos()).clamp(-1.0, 1.0);
        EARTH_RADIUS_KM * c.acos()
    }

    #[test]
    fn identical_coordinates_are_zero_delay() {
        let a = node(0, 45.0, 7.0);
        let b = node(1, 45.0, 7.0);
        assert_eq!(geo_latency(&a, &b, 200.0).unwrap(), 0.0);
    }

    #[test]
    fn meridian_arc_of_200_km_is_one_millisecond() {
        // 200 km along a meridian: the haversine reduces to R * delta_phi,
        // so delta_phi = 200/R radians puts the nodes exactly 200 km apart.
        let dlat = (200.0_f64 / EARTH_RADIUS_KM).to_degrees();
        let a = node(0, 0.0, 0.0);
        let b = node(1, dlat, 0.0);
        let ms = geo_latency(&a, &b, 200.0).unwrap();
        assert!((ms - 1.0).abs() < 1e-9, "got {ms}");
    }

    #[test]
    fn turin_milan_is_about_point_63_ms() {
        let turin = node(0, 45.07, 7.68);
        let milan = node(1, 45.46, 9.19);
        let km = haversine_km(45.07, 7.68, 45.46, 9.19);
        let oracle_km = law_of_cosines_km(45.07, 7.68, 45.46, 9.19);
        assert!(
            (km - oracle_km).abs() < 1e-6,
            "haversine {km} vs oracle {oracle_km}"
        );
        assert!((km - 125.6).abs() < 1.0, "distance {km} km");
        let ms = geo_latency(&turin, &milan, 200.0).unwrap();
        assert!((ms - 0.63).abs() < 0.01, "delay {ms} ms");
    }

    #[test]
    fn symmetric_and_inverse_in_speed() {
        let a = node(0, 52.5, 13.4);
        let b = node(1, 48.9, 2.4);
        let ab = geo_latency(&a, &b, 200.0).unwrap();
        let ba = geo_latency(&b, &a, 200.0).unwrap();
        assert_eq!(ab, ba);
        let double_speed = geo_latency(&a, &b, 400.0).unwrap();
        assert!((double_speed - ab / 2.0).abs() < 1e-12);
    }

    #[test]
    fn missing_coordinates_is_an_error() {
        let a = node(0, 1.0, 2.0);
        let b = Node {
            id: 1,
            label: "bare".into(),
            latitude: None,
            longitude: None,
        };
        assert!(matches!(
            geo_latency(&a, &b, 200.0),
            Err(Error::MissingCoordinates(label)) if label == "bare"
        ));
    }
}
