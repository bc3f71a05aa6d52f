#include "sharp_hilbert/conformal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sharp_hilbert/errors.hpp"

namespace sharp_hilbert::conformal {

SlitDomainSpec::SlitDomainSpec(double c_) : c(c_) {
    if (!(c > 0.0 && c <= 1.0)) throw DomainError("SlitDomainSpec: c must lie in (0, 1]");
}

StripSpec::StripSpec(double c_) : c(c_) {
    if (!(c > 0.0 && c < 1.0)) throw DomainError("StripSpec: c must lie in (0, 1)");
}

Complex sqrt_principal(Complex z) {
    // std::sqrt follows the sign of a zero imaginary part; the (-pi, pi]
    // branch requires the cut itself to resolve upward.
    if (z.imag() == 0.0) return std::sqrt(Complex(z.real(), +0.0));
    return std::sqrt(z);
}

Complex map_K(Complex z) {
    if (z == Complex(0.0, 0.0)) throw DomainError("map_K: z = 0");
    const Complex s = sqrt_principal(z);
    return (s - 1.0 / s) * 0.5;
}

Complex map_L(Complex z) {
    return 2.0 * z * z + 1.0 + 2.0 * z * sqrt_principal(z * z + 1.0);
}

Complex halfplane_to_disk(Complex z, double c) {
    if (!(c > 0.0 && c < 1.0)) throw DomainError("halfplane_to_disk: c must lie in (0, 1)");
    if (z.imag() < -kBoundaryGuard)
        throw DomainError("halfplane_to_disk: point below the real axis");
    const Complex Lci = map_L(Complex(0.0, c));
    const double A = Lci.real(), B = Lci.imag();
    if (!(B > 0.0)) throw DomainError("halfplane_to_disk: Im L(ci) = 0");
    return -2.0 / ((z - A) / B + Complex(0.0, 1.0)) - Complex(0.0, 1.0);
}

Complex halfplane_from_disk(Complex zeta, double c) {
    if (!(c > 0.0 && c < 1.0)) throw DomainError("halfplane_from_disk: c must lie in (0, 1)");
    if (std::abs(zeta) >= 1.0 - kBoundaryGuard)
        throw DomainError("halfplane_from_disk: |zeta| >= 1");
    const Complex Lci = map_L(Complex(0.0, c));
    const double A = Lci.real(), B = Lci.imag();
    return A + B * (-2.0 / (zeta + Complex(0.0, 1.0)) - Complex(0.0, 1.0));
}

Complex slit_uniformizer(Complex w, const SlitDomainSpec& spec) {
    if (w.imag() < kBoundaryGuard)
        throw DomainError("slit_uniformizer: point not in the open upper half-plane");
    if (std::abs(w.real()) < kBoundaryGuard && w.imag() >= spec.slit_height() - kBoundaryGuard)
        throw DomainError("slit_uniformizer: point on the slit");
    return map_L(spec.c * w);
}

Complex disk_to_slitdomain(Complex zeta, const SlitDomainSpec& spec) {
    if (std::abs(zeta) >= 1.0 - kBoundaryGuard)
        throw DomainError("disk_to_slitdomain: |zeta| >= 1");
    if (!(spec.c < 1.0))
        throw DomainError("disk_to_slitdomain: c = 1 degenerates the homography");
    const Complex z = halfplane_from_disk(zeta, spec.c);
    return map_K(z) / spec.c;
}

Complex slitdomain_to_disk(Complex w, const SlitDomainSpec& spec) {
    if (!(spec.c < 1.0))
        throw DomainError("slitdomain_to_disk: c = 1 degenerates the homography");
    return halfplane_to_disk(slit_uniformizer(w, spec), spec.c);
}

Complex disk_to_strip(Complex zeta, const StripSpec& spec) {
    if (std::abs(zeta) >= 1.0 - kBoundaryGuard)
        throw DomainError("disk_to_strip: |zeta| >= 1");
    const Complex p = std::polar(1.0, std::numbers::pi * spec.c);
    const Complex eta = (p - std::conj(p) * zeta) / (1.0 - zeta);
    return std::log(eta) / (std::numbers::pi * spec.c);
}

}  // namespace sharp_hilbert::conformal
