#include "sharp_hilbert/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <nlohmann/json.hpp>

#include "sharp_hilbert/conformal.hpp"
#include "sharp_hilbert/errors.hpp"
#include "sharp_hilbert/parallel.hpp"
#include "sharp_hilbert/rng.hpp"
#include "sharp_hilbert/special_functions.hpp"

namespace sharp_hilbert::mc {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Outcome : std::uint8_t { Bottom, Side, Censored };

struct PathResult {
    Outcome outcome = Outcome::Censored;
    double value = 0.0;  // |x| (slit) or x^2 (strip) at the exit point
};

// One path. Coordinates are (x, y) = (X, 1 - Y); start (0, 1).
// Termination: bottom {y = 0}, the slit ray {x = 0, y >= 1/c} or the strip
// top {y = 1/c}, whichever the step segment crosses first.
PathResult run_path(const SimSpec& spec, std::uint64_t index) {
    NormalSampler normals(SplitMix64::for_stream(spec.seed, index));
    const double barrier = 1.0 / spec.c;
    const bool slit = spec.domain == DomainKind::Slit;
    const double sqdt = std::sqrt(spec.step);
    const auto steps = static_cast<std::uint64_t>(std::llround(spec.max_time / spec.step));

    double x = 0.0, y = 1.0;
    // Degenerate start on the boundary (c = 1): the path is killed at once.
    if (slit && x == 0.0 && y >= barrier) return {Outcome::Side, 0.0};
    if (!slit && y >= barrier) return {Outcome::Side, x * x};

    for (std::uint64_t s = 0; s < steps; ++s) {
        double g1, g2;
        normals.next_pair(g1, g2);
        const double nx = x + sqdt * g1;
        const double ny = y + sqdt * g2;

        double theta_bottom = 2.0, theta_side = 2.0;  // fractions in [0,1]
        if (ny <= 0.0) theta_bottom = y / (y - ny);
        if (slit) {
            const bool crosses_zero = (x > 0.0 && nx <= 0.0) || (x < 0.0 && nx >= 0.0) || x == 0.0;
            if (crosses_zero) {
                const double th = (x == nx) ? 0.0 : x / (x - nx);
                const double ys = y + th * (ny - y);
                if (ys >= barrier) theta_side = th;
            }
        } else if (ny >= barrier) {
            theta_side = (barrier - y) / (ny - y);
        }

        if (theta_bottom <= 1.0 || theta_side <= 1.0) {
            if (theta_bottom <= theta_side) {
                const double xe = x + theta_bottom * (nx - x);
                return {Outcome::Bottom, slit ? std::abs(xe) : xe * xe};
            }
            if (slit) return {Outcome::Side, 0.0};  // exit on {x = 0}
            const double xe = x + theta_side * (nx - x);
            return {Outcome::Side, xe * xe};
        }
        x = nx;
        y = ny;
    }
    return {Outcome::Censored, 0.0};
}

}  // namespace

void SimSpec::validate() const {
    if (paths < 1) throw ConfigError("SimSpec: paths must be >= 1");
    if (!(step > 0.0 && step <= 1e-2)) throw ConfigError("SimSpec: step must lie in (0, 1e-2]");
    if (!(max_time >= 10.0)) throw ConfigError("SimSpec: max_time must be >= 10");
    if (domain == DomainKind::Slit) {
        if (!(c > 0.0 && c <= 1.0)) throw ConfigError("SimSpec: slit c must lie in (0, 1]");
    } else {
        if (!(c > 0.0 && c <= 1.0)) throw ConfigError("SimSpec: strip c must lie in (0, 1]");
    }
}

std::string SimSpec::to_json() const {
    nlohmann::json j;
    j["domain"] = domain == DomainKind::Slit ? "slit" : "strip";
    j["c"] = c;
    j["paths"] = paths;
    j["step"] = step;
    j["seed"] = seed;
    j["max_time"] = max_time;
    return j.dump(2);
}

SimSpec SimSpec::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SimSpec s;
    const std::string d = j.at("domain").get<std::string>();
    if (d == "slit")
        s.domain = DomainKind::Slit;
    else if (d == "strip")
        s.domain = DomainKind::Strip;
    else
        throw ConfigError("SimSpec: domain must be \"slit\" or \"strip\"");
    s.c = j.at("c").get<double>();
    s.paths = j.at("paths").get<std::uint64_t>();
    s.step = j.at("step").get<double>();
    s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("max_time")) s.max_time = j.at("max_time").get<double>();
    s.validate();
    return s;
}

std::string SimResult::to_json() const {
    nlohmann::json j;
    j["p_hat"] = p_hat;
    j["p_se"] = p_se;
    j["m1_hat"] = m1_hat ? nlohmann::json(*m1_hat) : nlohmann::json(nullptr);
    j["m1_se"] = m1_se ? nlohmann::json(*m1_se) : nlohmann::json(nullptr);
    j["m2_hat"] = m2_hat ? nlohmann::json(*m2_hat) : nlohmann::json(nullptr);
    j["m2_se"] = m2_se ? nlohmann::json(*m2_se) : nlohmann::json(nullptr);
    j["censored_fraction"] = censored_fraction;
    j["paths"] = paths;
    j["exits"] = exits;
    return j.dump(2);
}

SimResult simulate(const SimSpec& spec, const ProgressFn& progress,
                   std::uint64_t progress_every) {
    spec.validate();
    const std::uint64_t n = spec.paths;
    const std::uint64_t chunk = std::min<std::uint64_t>(n, std::max<std::uint64_t>(progress_every, 1));

    // Fixed-order compensated reduction over path index; the parallel part
    // only fills per-path slots.
    std::uint64_t hits = 0, exits = 0, censored = 0, done = 0;
    KahanSum value_sum, value_sq;
    std::vector<PathResult> results(static_cast<std::size_t>(chunk));

    for (std::uint64_t base = 0; base < n; base += chunk) {
        const std::uint64_t m = std::min(chunk, n - base);
        parallel_for_index(static_cast<std::size_t>(m), [&](std::size_t i) {
            results[i] = run_path(spec, base + static_cast<std::uint64_t>(i));
        });
        for (std::uint64_t i = 0; i < m; ++i) {
            const PathResult& r = results[static_cast<std::size_t>(i)];
            switch (r.outcome) {
                case Outcome::Bottom:
                    ++hits;
                    [[fallthrough]];
                case Outcome::Side:
                    ++exits;
                    value_sum.add(r.value);
                    value_sq.add(r.value * r.value);
                    break;
                case Outcome::Censored:
                    ++censored;
                    break;
            }
        }
        done += m;
        if (progress) {
            const double p = static_cast<double>(hits) / static_cast<double>(done);
            const double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(done));
            progress(done, p, se);
        }
    }

    SimResult out;
    out.paths = n;
    out.exits = exits;
    out.censored_fraction = static_cast<double>(censored) / static_cast<double>(n);
    out.p_hat = static_cast<double>(hits) / static_cast<double>(n);
    out.p_se = std::sqrt(std::max(0.0, out.p_hat * (1.0 - out.p_hat)) / static_cast<double>(n));
    if (exits > 0) {
        const double mean = value_sum.value() / static_cast<double>(exits);
        const double var =
            std::max(0.0, value_sq.value() / static_cast<double>(exits) - mean * mean);
        const double se = std::sqrt(var / static_cast<double>(exits));
        if (spec.domain == DomainKind::Slit) {
            out.m1_hat = mean;
            out.m1_se = se;
        } else {
            out.m2_hat = mean;
            out.m2_se = se;
        }
    }
    return out;
}

OracleValues oracle_harmonic_measure(DomainKind domain, double c) {
    OracleValues out;
    const special::SpecialFnConfig cfg(1e-10, 1 << 15);
    if (domain == DomainKind::Slit) {
        if (!(c > 0.0 && c < 1.0))
            throw DomainError("oracle_harmonic_measure: slit c must lie in (0, 1)");
        const auto Lci = conformal::map_L({0.0, c});
        const double A = Lci.real(), B = Lci.imag();
        out.p = special::poisson_half_line_mass(A, B);
        // E|X| = (1/2c) int_0^inf |sqrt t - 1/sqrt t| kernel dt; the two
        // substituted halves are the same integrals used by poisson_U.
        const double I = special::poisson_singular_part_01(A, B, cfg) +
                         special::poisson_singular_part_1inf(A, B, cfg);
        out.moment = B / (2.0 * kPi) * I * 2.0 / (2.0 * c);
    } else {
        if (!(c > 0.0 && c < 1.0))
            throw DomainError("oracle_harmonic_measure: strip c must lie in (0, 1)");
        out.p = 1.0 - c;  // harmonic measure in a strip is linear in height
        // Map the strip to H by exp(pi c z); the start (0,1) lands on
        // exp(i pi c) and exits pull back as x = ln|s|/(pi c), both edges.
        const double cs = std::cos(kPi * c), sn = std::sin(kPi * c);
        const auto integrand = [cs, sn](double u) {
            const double eu = std::exp(u);
            const double d1 = cs - eu, d2 = cs + eu;
            return u * u * eu * (1.0 / (d1 * d1 + sn * sn) + 1.0 / (d2 * d2 + sn * sn));
        };
        double err = 0.0;
        const double I = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            integrand, -80.0, 80.0, 15, 1e-10, &err);
        if (!(err <= 1e-8))
            throw QuadratureFailure("strip oracle quadrature did not converge");
        out.moment = sn / kPi * I / (kPi * c * kPi * c);
    }
    return out;
}

report::VerificationReport verify_theorem(const SimSpec& spec, double step_bias_allowance) {
    spec.validate();
    const SimResult res = simulate(spec);
    report::VerificationReport rep;
    std::ostringstream params;
    params << "c=" << spec.c << ",paths=" << spec.paths << ",step=" << spec.step
           << ",seed=" << spec.seed;

    if (spec.domain == DomainKind::Slit) {
        const double m1 = res.m1_hat.value_or(0.0);
        const double se = 3.0 * (res.p_se + spec.c * res.m1_se.value_or(0.0));
        const double rhs = spec.c * m1 + special::u0c_closed(spec.c) + se;
        rep.append(report::VerificationEntry::make(
            "martingale_bound_p1", res.p_hat, rhs, 0.0, params.str(),
            "simulated exit probability vs c*E|X| + U(0,c) + 3SE"));
        rep.append(report::VerificationEntry::make(
            "martingale_sharpness_p1", std::abs(res.p_hat - (spec.c * m1 + special::u0c_closed(spec.c))),
            se + step_bias_allowance, 0.0, params.str(),
            "attainment: |lhs - rhs| within 3SE + step bias"));
    } else {
        const double m2 = res.m2_hat.value_or(0.0);
        const double se = 3.0 * (res.p_se + spec.c * spec.c * res.m2_se.value_or(0.0));
        const double rhs = spec.c * spec.c * m2 + (1.0 - spec.c) * (1.0 - spec.c) + se;
        rep.append(report::VerificationEntry::make(
            "martingale_bound_p2", res.p_hat, rhs, 0.0, params.str(),
            "simulated exit probability vs c^2*EX^2 + (1-c)^2 + 3SE"));
        if (spec.c < 1.0) {
            rep.append(report::VerificationEntry::make(
                "martingale_sharpness_p2",
                std::abs(res.p_hat - (spec.c * spec.c * m2 + (1.0 - spec.c) * (1.0 - spec.c))),
                se + step_bias_allowance, 0.0, params.str(),
                "attainment: |lhs - rhs| within 3SE + step bias"));
        }
    }
    return rep;
}

}  // namespace sharp_hilbert::mc
