#pragma once
#include <array>
#include <complex>

namespace basinforge {

using cplx = std::complex<double>;

// Finite values with |z| above this cap are normalized to the point at
// infinity. Keeps one extra squaring inside IEEE double range.
inline constexpr double kOverflowCap = 1e150;

// A point of the Riemann sphere: a finite complex value or infinity.
// Construction normalizes: non-finite coordinates and magnitudes above
// kOverflowCap collapse to the infinity marker, so finite points never
// carry NaN/Inf coordinates.
struct SpherePoint {
    cplx z{0.0, 0.0};
    bool inf = false;

    SpherePoint() = default;
    SpherePoint(double re, double im) : SpherePoint(cplx(re, im)) {}
    explicit SpherePoint(cplx v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
            std::abs(v.real()) > kOverflowCap || std::abs(v.imag()) > kOverflowCap) {
            inf = true;
            z = cplx(0.0, 0.0);
        } else {
            z = v;
        }
    }
    static SpherePoint infinity() {
        SpherePoint p;
        p.inf = true;
        return p;
    }
    bool is_inf() const { return inf; }
    bool operator==(const SpherePoint& o) const {
        if (inf || o.inf) return inf == o.inf;
        return z == o.z;
    }
};

// Chordal distance 2|a-b| / sqrt((1+|a|^2)(1+|b|^2)), extended to infinity
// by its limit. Range [0,2], symmetric, satisfies the triangle inequality.
double chordal_distance(const SpherePoint& a, const SpherePoint& b);
double chordal_distance(cplx a, cplx b);
double chordal_to_infinity(cplx a);

// Embedding of the sphere into R^3 (unit sphere); the chordal metric is the
// Euclidean chord length between embedded points. Used for nearest-neighbor
// searches where plane coordinates would distort distances.
std::array<double, 3> embed_r3(const SpherePoint& p);

// Threshold rho with D(inf, r) = { z : |z| > rho } (union the point at
// infinity itself), for chordal radius r in (0,2).
double euclidean_radius_of_infinity_disk(double r);

// Chordal distance from a point at chordal distance `dist` from a disk
// center to the disk of chordal radius r (0 if inside). Computed along the
// great circle, exact for the chord metric.
double chordal_point_to_cap(double dist_to_center, double r);

// Open chordal disk D(center, radius); radius in (0,2].
struct SphereDisk {
    SpherePoint center;
    double radius = 0.0;

    SphereDisk() = default;
    SphereDisk(SpherePoint c, double r) : center(c), radius(r) {}

    bool contains(const SpherePoint& p) const {
        return chordal_distance(center, p) < radius;
    }
    double distance_to(const SpherePoint& p) const {
        return chordal_point_to_cap(chordal_distance(center, p), radius);
    }
};

// Euclidean (plane) realization of a chordal disk with finite center:
// chordal balls are Euclidean disks, with a shifted center. For an
// infinity-centered disk the realization is the exterior |z| > rho.
struct EuclidDisk {
    cplx center{0.0, 0.0};
    double radius = 0.0;   // exterior threshold when `exterior` is set
    bool exterior = false;
};
EuclidDisk sphere_disk_to_euclid(const SphereDisk& d);

} // namespace basinforge
