#pragma once

#include <stdexcept>

namespace curvotex {

/// Point outside the chart domain 1 + lambda|z|^2 > 0, or an inverse map
/// evaluated outside its range.
struct chart_domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operation undefined at the chart origin (e.g. antipode of 0).
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operation requires a different sign of the curvature parameter.
struct unsupported_geometry_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Two vortices coincide, or a vortex hits the antipode of another.
struct collision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ring sits on the equator lambda r0^2 = 1 where the slice analysis breaks down.
struct equator_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Quartic form failed the isotropy check across probe directions.
struct anisotropy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace curvotex
