#include "oscemu/codec.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace oscemu {

bool EncodeResult::valid() const {
    return !std::isnan(phi);
}

// The operation order below is deliberate: the census totals are sensitive
// to the exact double-precision rounding sequence, so terms are combined
// exactly as in the original derivation. Do not refactor algebraically.
EncodeResult encode(std::int64_t a, double b, double g) {
    if (a < 1) throw std::domain_error("encode: a must be >= 1");
    if (g <= 0) throw std::domain_error("encode: g must be positive");
    if (!(std::fabs(b) <= 1.0)) throw std::domain_error("encode: |b| must be <= 1");

    const double ad = double(a);
    const double e = ad * ad + ad;
    const double radius = ad + ad / (2.0 * g);
    const double t1 = 2.0 * e - 1.0;
    const double disc = t1 * t1 - 4.0 * (e * e + 0.25 - radius * radius);
    const double sq = std::sqrt(std::fabs(disc));
    const double dz = std::fabs((t1 + sq) / 2.0 - (t1 - sq) / 2.0);
    const double inner = 1.0 - 4.0 * g * (t1 - sq) / 2.0;
    const double dx = std::fabs(ad - (-1.0 + std::sqrt(std::fabs(inner)) / (2.0 * g)));
    const double c = std::sqrt(dx * dx + dz * dz);
    const double phi = std::asin(c * std::sin(M_PI - std::asin(dx / c)) / radius);
    return {phi, std::asin(b)};
}

namespace {

template <typename F>
double bisect(F f, double lo, double hi, int iterations = 200) {
    double flo = f(lo);
    for (int i = 0; i < iterations; ++i) {
        double mid = 0.5 * (lo + hi);
        if ((flo <= 0) == (f(mid) <= 0)) {
            lo = mid;
            flo = f(mid);
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double geometric_phi_oracle(std::int64_t a, double b, double g) {
    if (a < 1) throw std::domain_error("geometric_phi_oracle: a must be >= 1");
    if (g <= 0) throw std::domain_error("geometric_phi_oracle: g must be positive");
    (void)b;  // the b axis separates; phi depends on (a, g) only

    const double ad = double(a);
    const double e = ad * ad + ad;
    const double r = ad + ad / (2.0 * g);

    // Lower intersection of the circle {center (-1/2, e), radius r} with the
    // unit parabola z = x^2 + x; on the parabola (x + 1/2)^2 = z + 1/4.
    auto f = [&](double z) { return (z + 0.25) + (z - e) * (z - e) - r * r; };
    const double zmin = e - 0.5;
    double zl;
    if (f(zmin) > 0) {
        // No real intersection; mirror the residual across the vertex.
        zl = zmin - std::sqrt(f(zmin));
    } else {
        double lo = zmin;
        double step = std::max(r, 1.0);
        while (f(lo) < 0) lo -= step;
        zl = bisect([&](double z) { return -f(z); }, lo, zmin);
    }

    // Right-branch solution of g (x + 1)^2 = |zl - 1/(4g)|.
    const double h = std::fabs(zl - 1.0 / (4.0 * g));
    auto gfun = [&](double x) { return g * (x + 1.0) * (x + 1.0) - h; };
    double hi = -1.0 + std::sqrt(h / g) + 1.0;
    while (gfun(hi) < 0) hi += 1.0;
    const double xt = bisect(gfun, -1.0, hi);

    const double dx = std::fabs(ad - xt);
    if (dx > r) return std::numeric_limits<double>::quiet_NaN();
    const double vy = std::sqrt(r * r - dx * dx);
    double cosang = (r * vy) / (r * r);
    cosang = std::max(-1.0, std::min(1.0, cosang));
    return std::acos(cosang);
}

double decode_b(double theta) {
    if (!(std::fabs(theta) <= M_PI / 2.0 + 1e-12))
        throw std::domain_error("decode_b: theta out of range");
    return std::sin(theta);
}

std::int64_t decode_a(double phi, double g, std::int64_t a_max_hint) {
    if (!std::isfinite(phi)) throw std::domain_error("decode_a: phi must be finite");
    if (g <= 0) throw std::domain_error("decode_a: g must be positive");
    if (a_max_hint < 1) throw std::domain_error("decode_a: empty search range");
    std::int64_t best = -1;
    double best_err = std::numeric_limits<double>::infinity();
    for (std::int64_t a = 1; a <= a_max_hint; ++a) {
        double cand = encode(a, 0.0, g).phi;
        if (std::isnan(cand)) continue;
        double err = std::fabs(cand - phi);
        if (err < best_err) {
            best_err = err;
            best = a;
        }
    }
    if (best < 0) throw std::runtime_error("decode_a: no decodable index in range");
    return best;
}

ErrorBound error_bound(std::int64_t a, double x) {
    if (a < 1) throw std::domain_error("error_bound: a must be >= 1");
    if (x < 0) throw std::domain_error("error_bound: x must be non-negative");
    return {x + 0.5, 2 * a};
}

}  // namespace oscemu
