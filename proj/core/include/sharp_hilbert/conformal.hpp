#pragma once

#include <complex>

namespace sharp_hilbert::conformal {

using Complex = std::complex<double>;

// Upper half-plane minus the vertical ray {i*a : a >= 1/c}.
struct SlitDomainSpec {
    double c;  // in (0, 1]
    explicit SlitDomainSpec(double c_);
    double slit_height() const { return 1.0 / c; }
};

// Horizontal strip {(x, y) : 0 <= y <= 1/c}.
struct StripSpec {
    double c;  // in (0, 1)
    explicit StripSpec(double c_);
    double height() const { return 1.0 / c; }
};

// Principal square root with the branch arg(z) in (-pi, pi]: a negative
// real argument lands on the positive imaginary axis regardless of the
// sign of its floating-point zero imaginary part.
Complex sqrt_principal(Complex z);

// K(z) = (sqrt(z) - 1/sqrt(z)) / 2. Maps the upper half-plane onto the
// half-plane slit along {i*a : a >= 1}. Throws DomainError at z = 0.
Complex map_K(Complex z);

// L(z) = 2 z^2 + 1 + 2 z sqrt(z^2 + 1), the inverse of K. The square root
// is sqrt_principal applied to z^2 + 1 directly; no branch stitching.
Complex map_L(Complex z);

// Homography z -> -2*((z - Re L(ci))/Im L(ci) + i)^(-1) - i, upper
// half-plane onto the unit disk, sending L(ci) to 0.
Complex halfplane_to_disk(Complex z, double c);

// Inverse of halfplane_to_disk (unit disk onto the upper half-plane).
Complex halfplane_from_disk(Complex zeta, double c);

// z -> L(c z): slit domain onto the upper half-plane. The slit maps into
// (-inf, 0], the real axis into (0, inf).
Complex slit_uniformizer(Complex w, const SlitDomainSpec& spec);

// Inverse of the composition N = halfplane_to_disk . slit_uniformizer;
// maps the open unit disk onto the slit domain with 0 -> (0, 1).
Complex disk_to_slitdomain(Complex zeta, const SlitDomainSpec& spec);

// Forward map N itself (slit domain onto the unit disk, (0,1) -> 0).
Complex slitdomain_to_disk(Complex w, const SlitDomainSpec& spec);

// Unit disk onto the strip {0 < Im < 1/c} with 0 -> (0, 1). Built as the
// Moebius map zeta -> (p - conj(p) zeta)/(1 - zeta) with p = exp(i pi c)
// (disk onto the half-plane, 0 -> p) followed by Log(.)/(pi c). The
// rotation freedom of the Moebius factor is fixed by this choice of p.
Complex disk_to_strip(Complex zeta, const StripSpec& spec);

// Minimum distance from the domain boundary at which map evaluation is
// accepted; closer points throw DomainError instead of returning noise.
inline constexpr double kBoundaryGuard = 1e-12;

}  // namespace sharp_hilbert::conformal
