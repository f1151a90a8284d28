#include "basinforge/sphere.hpp"

#include <cmath>

#include "basinforge/errors.hpp"

namespace basinforge {

namespace {

// sqrt(1+|a|^2) without overflowing |a|^2 for |a| near the cap.
double scale_factor(cplx a) {
    double m = std::hypot(a.real(), a.imag());
    if (m > 1e150) return m; // 1 + m^2 == m^2 to double precision
    return std::sqrt(1.0 + m * m);
}

} // namespace

double chordal_distance(cplx a, cplx b) {
    double sa = scale_factor(a);
    double sb = scale_factor(b);
    // divide early so the numerator can't overflow
    double num = std::hypot(a.real() - b.real(), a.imag() - b.imag());
    return 2.0 * (num / sa) / sb;
}

double chordal_to_infinity(cplx a) { return 2.0 / scale_factor(a); }

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
    if (a.inf && b.inf) return 0.0;
    if (a.inf) return chordal_to_infinity(b.z);
    if (b.inf) return chordal_to_infinity(a.z);
    return chordal_distance(a.z, b.z);
}

std::array<double, 3> embed_r3(const SpherePoint& p) {
    if (p.inf) return {0.0, 0.0, 1.0};
    double x = p.z.real(), y = p.z.imag();
    double m = std::hypot(x, y);
    if (m > 1e150) return {0.0, 0.0, 1.0};
    double d = 1.0 + m * m;
    return {2.0 * x / d, 2.0 * y / d, (m * m - 1.0) / d};
}

double euclidean_radius_of_infinity_disk(double r) {
    if (!(r > 0.0) || !(r < 2.0))
        throw UsageError("euclidean_radius_of_infinity_disk: radius must lie in (0,2)");
    return std::sqrt(4.0 / (r * r) - 1.0);
}

double chordal_point_to_cap(double dist_to_center, double r) {
    if (dist_to_center <= r) return 0.0;
    // chord -> arc half-angles, subtract, back to chord
    double beta = std::asin(std::min(1.0, dist_to_center / 2.0));
    double rho = std::asin(std::min(1.0, r / 2.0));
    return 2.0 * std::sin(beta - rho);
}

EuclidDisk sphere_disk_to_euclid(const SphereDisk& d) {
    EuclidDisk e;
    if (d.center.inf) {
        e.exterior = true;
        e.radius = euclidean_radius_of_infinity_disk(d.radius);
        return e;
    }
    cplx c = d.center.z;
    double c2 = std::norm(c);
    double s = d.radius * d.radius * (1.0 + c2) / 4.0;
    if (s >= 1.0) {
        // disk covers more than a hemisphere centered away from infinity;
        // not used by the pipeline, report as exterior of the complement
        throw ConstructionError("sphere_disk_to_euclid: disk contains infinity");
    }
    e.center = c / (1.0 - s);
    e.radius = std::sqrt(s * (1.0 + c2 - s)) / (1.0 - s);
    return e;
}

} // namespace basinforge
