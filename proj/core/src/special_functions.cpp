#include "sharp_hilbert/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <nlohmann/json.hpp>

#include "sharp_hilbert/conformal.hpp"
#include "sharp_hilbert/errors.hpp"
#include "sharp_hilbert/parallel.hpp"

namespace sharp_hilbert::special {

namespace {

constexpr double kPi = std::numbers::pi;

// Adaptive Gauss-Kronrod 7-15 on [0, 1]; depth chosen so the panel count
// stays within cfg.max_subdivisions.
template <typename F>
double integrate01(F&& f, const SpecialFnConfig& cfg) {
    const auto depth = static_cast<unsigned>(
        std::ceil(std::log2(static_cast<double>(cfg.max_subdivisions))));
    double err = 0.0;
    const double val = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, 0.0, 1.0, depth, cfg.abs_tol, &err);
    if (!(err <= cfg.abs_tol) && !(err <= std::abs(val) * cfg.abs_tol)) {
        std::ostringstream msg;
        msg << "quadrature error estimate " << err << " exceeds tolerance " << cfg.abs_tol;
        throw QuadratureFailure(msg.str());
    }
    return val;
}

}  // namespace

SpecialFnConfig::SpecialFnConfig(double tol, int subdivisions)
    : abs_tol(tol), max_subdivisions(subdivisions) {
    validate();
}

void SpecialFnConfig::validate() const {
    if (!(abs_tol >= 1e-12 && abs_tol <= 1e-4))
        throw DomainError("SpecialFnConfig: abs_tol must lie in [1e-12, 1e-4]");
    if (max_subdivisions < 64)
        throw DomainError("SpecialFnConfig: max_subdivisions must be >= 64");
}

double poisson_boundary_data(double t) {
    if (t <= 0.0) return 0.0;
    const double s = std::sqrt(t);
    return 1.0 - 0.5 * std::abs(s - 1.0 / s);
}

double poisson_half_line_mass(double alpha, double beta) {
    return 0.5 + std::atan(alpha / beta) / kPi;
}

double poisson_singular_part_01(double alpha, double beta, const SpecialFnConfig& cfg) {
    // int_0^1 (1/sqrt t - sqrt t) kernel dt with t = u^2.
    return 2.0 * integrate01(
                     [alpha, beta](double u) {
                         const double d = alpha - u * u;
                         return (1.0 - u * u) / (d * d + beta * beta);
                     },
                     cfg);
}

double poisson_singular_part_1inf(double alpha, double beta, const SpecialFnConfig& cfg) {
    // int_1^inf (sqrt t - 1/sqrt t) kernel dt with t = s^2 then s = 1/u.
    return 2.0 * integrate01(
                     [alpha, beta](double u) {
                         const double u2 = u * u;
                         const double d = alpha * u2 - 1.0;
                         return (1.0 - u2) / (d * d + beta * beta * u2 * u2);
                     },
                     cfg);
}

double poisson_U(double alpha, double beta, const SpecialFnConfig& cfg) {
    cfg.validate();
    if (!(beta > 0.0)) throw DomainError("poisson_U: beta must be positive");
    const double singular =
        poisson_singular_part_01(alpha, beta, cfg) + poisson_singular_part_1inf(alpha, beta, cfg);
    return poisson_half_line_mass(alpha, beta) - beta / (2.0 * kPi) * singular;
}

double U(double x, double y, const SpecialFnConfig& cfg) {
    if (y <= 0.0) return 1.0 - std::abs(x);
    if (x == 0.0 && y >= 1.0) return 0.0;
    if (y < conformal::kBoundaryGuard)
        throw DomainError("U: point within the boundary guard of {y = 0}");
    if (std::abs(x) < conformal::kBoundaryGuard && y > 1.0 - conformal::kBoundaryGuard)
        throw DomainError("U: point within the boundary guard of the slit");
    const auto w = conformal::map_L({x, y});
    return poisson_U(w.real(), w.imag(), cfg);
}

double u0c_closed(double c) {
    if (!(c > 0.0 && c <= 1.0)) throw DomainError("u0c_closed: c must lie in (0, 1]");
    const auto k = closed_constants(c);
    return k.U0c;
}

double u1c(double x, double y, double c, const SpecialFnConfig& cfg) {
    if (!(c > 0.0 && c <= 1.0)) throw DomainError("u1c: c must lie in (0, 1]");
    return U(c * x, c * y, cfg) / c;
}

double u2(double x, double y) {
    if (y <= 0.0) return 1.0 - x * x;
    if (y <= 1.0) return (1.0 - y) * (1.0 - y) - x * x;
    return -x * x;
}

double u2c(double x, double y, double c) {
    if (!(c > 0.0 && c <= 1.0)) throw DomainError("u2c: c must lie in (0, 1]");
    return u2(c * x, c * y) / (c * c);
}

double optimal_c_p1(double x) {
    if (!(x >= 0.0)) throw DomainError("optimal_c_p1: x must be >= 0");
    // 2 e^{pi x/2} / (1 + e^{pi x}) = sech(pi x / 2), written to avoid
    // overflow for large x.
    return 1.0 / std::cosh(kPi * x / 2.0);
}

ClosedFormConstants closed_constants(double c) {
    if (!(c > 0.0 && c <= 1.0)) throw DomainError("closed_constants: c must lie in (0, 1]");
    ClosedFormConstants k;
    k.c = c;
    k.P = 1.0 - 2.0 / kPi * std::asin(c);
    k.E = 2.0 / kPi * std::log(1.0 / c + std::sqrt(1.0 / (c * c) - 1.0));
    k.U0c = k.P - c * k.E;
    return k;
}

// --- certificate ----------------------------------------------------------

namespace {

struct GridEval {
    std::size_t nx = 0, ny = 0;
    std::vector<double> u;  // row-major, index = iy * nx + ix
    std::vector<double> xs, ys;
    double at(std::size_t ix, std::size_t iy) const { return u[iy * nx + ix]; }
};

GridEval evaluate_grid(const SpecialFnConfig& cfg, const CertificateGridSpec& g) {
    GridEval ev;
    ev.nx = static_cast<std::size_t>(std::llround((g.x1 - g.x0) / g.h)) + 1;
    ev.ny = static_cast<std::size_t>(std::llround((g.y1 - g.y0) / g.h)) + 1;
    ev.xs.resize(ev.nx);
    ev.ys.resize(ev.ny);
    for (std::size_t i = 0; i < ev.nx; ++i) ev.xs[i] = g.x0 + g.h * static_cast<double>(i);
    for (std::size_t j = 0; j < ev.ny; ++j) ev.ys[j] = g.y0 + g.h * static_cast<double>(j);
    ev.u.assign(ev.nx * ev.ny, 0.0);
    parallel_for_index(ev.nx * ev.ny, [&](std::size_t idx) {
        const std::size_t ix = idx % ev.nx, iy = idx / ev.nx;
        double x = ev.xs[ix], y = ev.ys[iy];
        // Snap coordinates that are slit points up to rounding; the exact
        // piecewise definition applies there.
        if (std::abs(x) < 1e-12) x = 0.0;
        ev.u[idx] = U(x, y, cfg);
    });
    return ev;
}

void observe(CertificateEntry& e, double slack, double x, double y, double tol) {
    ++e.checked;
    if (e.checked == 1 || slack < e.worst_slack) {
        e.worst_slack = slack;
        e.worst_x = x;
        e.worst_y = y;
    }
    if (slack < -tol) {
        e.pass = false;
        ++e.violations;
    }
}

}  // namespace

bool CertificateReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const CertificateEntry& e) { return e.pass; });
}

std::string CertificateReport::to_json() const {
    nlohmann::json j;
    j["grid"] = {{"x0", grid.x0}, {"x1", grid.x1}, {"y0", grid.y0},
                 {"y1", grid.y1}, {"h", grid.h}};
    j["bounded_max"] = bounded_max;
    j["all_pass"] = all_pass();
    j["properties"] = nlohmann::json::array();
    for (const auto& e : entries) {
        j["properties"].push_back({{"property", e.property},
                                   {"pass", e.pass},
                                   {"worst_slack", e.worst_slack},
                                   {"worst_point", {e.worst_x, e.worst_y}},
                                   {"checked", e.checked},
                                   {"violations", e.violations}});
    }
    return j.dump(2);
}

CertificateFailure::CertificateFailure(CertificateReport r)
    : std::runtime_error("certificate failed"), report(std::move(r)) {}

CertificateReport certify_lemma31(const SpecialFnConfig& cfg, const CertificateGridSpec& g) {
    if (!(g.h > 0.0 && g.x1 > g.x0 && g.y1 > g.y0))
        throw DomainError("certify_lemma31: malformed grid");
    const GridEval ev = evaluate_grid(cfg, g);

    // Pointwise Laplacian checks are meaningless across the non-smooth set
    // {y = 0} union {(0, y) : y >= 1}; exclude one grid spacing around it.
    const auto excluded = [&](double x, double y) {
        if (std::abs(y) <= g.h + 1e-12) return true;
        if (std::abs(x) <= g.h + 1e-12 && y >= 1.0 - g.h - 1e-12) return true;
        return false;
    };
    // Interior of the slit half-plane, whole stencil clear of the seams:
    // there U is harmonic and the discrete Laplacian must vanish.
    const auto harmonic_region = [&](double x, double y) {
        if (y - g.h <= g.h + 1e-12) return false;
        if (std::abs(x) <= 2.0 * g.h + 1e-12 && y + g.h >= 1.0 - 2.0 * g.h - 1e-12) return false;
        return true;
    };

    CertificateEntry maj{.property = "majorization"};
    CertificateEntry lvl{.property = "level_one"};
    CertificateEntry ccv{.property = "concavity_x"};
    CertificateEntry sup{.property = "superharmonic"};
    CertificateEntry hrm{.property = "harmonic_interior"};
    double bounded_max = 0.0;

    const double tol_pt = 1e-8;
    const double tol_lap = 1e-6 / (g.h * g.h);

    for (std::size_t iy = 0; iy < ev.ny; ++iy) {
        for (std::size_t ix = 0; ix < ev.nx; ++ix) {
            const double x = ev.xs[ix], y = ev.ys[iy];
            const double uxy = ev.at(ix, iy);
            bounded_max = std::max(bounded_max, std::abs(uxy + std::abs(x)));
            if (excluded(x, y)) continue;

            const double indicator = (y <= 0.0) ? 1.0 : 0.0;
            observe(maj, uxy - (indicator - std::abs(x)), x, y, tol_pt);

            if (std::abs(y - 1.0) < 1e-12) observe(lvl, -uxy, x, y, tol_pt);

            if (ix >= 1 && ix + 1 < ev.nx) {
                const double second = ev.at(ix - 1, iy) + ev.at(ix + 1, iy) - 2.0 * uxy;
                observe(ccv, -second, x, y, tol_pt);
            }
            if (ix >= 1 && ix + 1 < ev.nx && iy >= 1 && iy + 1 < ev.ny) {
                const double lap = (ev.at(ix - 1, iy) + ev.at(ix + 1, iy) + ev.at(ix, iy - 1) +
                                    ev.at(ix, iy + 1) - 4.0 * uxy) /
                                   (g.h * g.h);
                observe(sup, tol_lap - lap, x, y, 0.0);
                if (harmonic_region(x, y)) observe(hrm, tol_lap - std::abs(lap), x, y, 0.0);
            }
        }
    }

    CertificateReport report;
    report.grid = g;
    report.entries = {maj, lvl, ccv, sup, hrm};
    report.bounded_max = bounded_max;
    if (!report.all_pass()) throw CertificateFailure(std::move(report));
    return report;
}

}  // namespace sharp_hilbert::special
