#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharp_hilbert::special {

// Quadrature controls for the Poisson integral.
struct SpecialFnConfig {
    double abs_tol = 1e-8;          // in [1e-12, 1e-4]
    int max_subdivisions = 4096;    // >= 64; adaptive bisection depth = log2

    SpecialFnConfig() = default;
    SpecialFnConfig(double tol, int subdivisions);
    void validate() const;
};

// P(c) = 1 - (2/pi) arcsin c, E(c) = (2/pi) ln(1/c + sqrt(1/c^2 - 1)),
// and their combination U(0, c) = P(c) - c E(c).
struct ClosedFormConstants {
    double c;
    double P;
    double E;
    double U0c;
};

// Poisson integral over (0, inf) of the boundary data
// 1 - |sqrt(t) - 1/sqrt(t)|/2 at the point (alpha, beta), beta > 0.
// The arctan part is integrated in closed form; the |.| part is split at
// t = 1 with the substitutions t = u^2 on (0,1) and t = 1/u^2 on (1,inf),
// which render both halves smooth on [0, 1].
double poisson_U(double alpha, double beta, const SpecialFnConfig& cfg = {});

// Boundary data and arctan mass helpers, exposed for the quadrature
// cross-checks. half_line_mass = probability that half-plane Brownian
// motion from (alpha, beta) exits on (0, inf).
double poisson_boundary_data(double t);
double poisson_half_line_mass(double alpha, double beta);

// The two halves of the |sqrt(t)-1/sqrt(t)| integral, after substitution.
// When alpha^2 + beta^2 = 1 the two integrands coincide pointwise.
double poisson_singular_part_01(double alpha, double beta, const SpecialFnConfig& cfg = {});
double poisson_singular_part_1inf(double alpha, double beta, const SpecialFnConfig& cfg = {});

// The special function: piecewise 1 - |x| for y <= 0, 0 on the slit
// {x = 0, y >= 1}, and poisson_U(L(x, y)) elsewhere in the half-plane.
double U(double x, double y, const SpecialFnConfig& cfg = {});

// Closed form of U(0, c) for c in (0, 1].
double u0c_closed(double c);

// Scaled variants.
double u1c(double x, double y, double c, const SpecialFnConfig& cfg = {});
double u2(double x, double y);
double u2c(double x, double y, double c);

// The c minimizing c*x + U(0, c): c = 2 exp(pi x / 2)/(1 + exp(pi x)).
double optimal_c_p1(double x);

ClosedFormConstants closed_constants(double c);

// --- numerical certificate for the properties of U -----------------------

struct CertificateGridSpec {
    double x0 = -3.0, x1 = 3.0;
    double y0 = -1.0, y1 = 3.0;
    double h = 0.05;
};

struct CertificateEntry {
    std::string property;
    bool pass = true;
    double worst_slack = 0.0;   // most negative margin observed
    double worst_x = 0.0, worst_y = 0.0;
    std::size_t checked = 0;
    std::size_t violations = 0;
};

struct CertificateReport {
    CertificateGridSpec grid;
    std::vector<CertificateEntry> entries;
    double bounded_max = 0.0;   // max over the grid of |U + |x||
    bool all_pass() const;
    std::string to_json() const;
};

// Checks, on the grid and excluding an h-neighborhood of the non-smooth
// set {y = 0} union {(0, y) : y >= 1}:
//   majorization   U >= 1{y<=0} - |x|           (slack >= -1e-8)
//   level_one      U(x, 1) <= 0                 (slack 1e-8)
//   concavity_x    midpoint concavity in x      (slack 1e-8)
//   superharmonic  5-point Laplacian <= 1e-6/h^2 everywhere;
//                  |Laplacian| <= 1e-6/h^2 where U is harmonic
// and reports max |U + |x|| over the grid. Throws CertificateFailure
// (carrying the report) if any property fails.
CertificateReport certify_lemma31(const SpecialFnConfig& cfg, const CertificateGridSpec& grid);

struct CertificateFailure : std::runtime_error {
    explicit CertificateFailure(CertificateReport r);
    CertificateReport report;
};

}  // namespace sharp_hilbert::special
