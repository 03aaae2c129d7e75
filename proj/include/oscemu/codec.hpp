#pragma once

#include <cstdint>

namespace oscemu {

// Result of encoding a state index. phi is NaN when the index is not
// representable on the requested curve ("unencodable"); callers filter
// rather than catch.
struct EncodeResult {
    double phi;
    double theta;
    bool valid() const;
};

// Maps (a, b, g) to the oscillation pair (phi, theta) for one maintained
// state on curve g. a is the radial state index, b the secondary-axis
// coordinate, g the curve parameter.
EncodeResult encode(std::int64_t a, double b, double g);

// Independent geometric reconstruction of phi: intersects the index-a
// sphere with the base surface via bisection and measures the angle
// between the reference and data vectors directly. Used as a cross-check
// oracle for encode; returns NaN in the same unencodable cases.
double geometric_phi_oracle(std::int64_t a, double b, double g);

// Inverse of the theta channel.
double decode_b(double theta);

// Inverse of the phi channel by nearest-integer search over the forward
// encoding; ties break toward the smaller index. Throws when no index in
// [1, a_max_hint] yields a finite phi.
std::int64_t decode_a(double phi, double g, std::int64_t a_max_hint);

// Worst-case analog-stage discrepancy model: |delta| <= x + 1/2 and the
// resulting index error is at most 2a.
struct ErrorBound {
    double delta_max;
    std::int64_t da_max;
};
ErrorBound error_bound(std::int64_t a, double x);

}  // namespace oscemu
