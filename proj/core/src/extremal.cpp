#include "sharp_hilbert/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "sharp_hilbert/conformal.hpp"
#include "sharp_hilbert/errors.hpp"
#include "sharp_hilbert/parallel.hpp"
#include "sharp_hilbert/special_functions.hpp"

namespace sharp_hilbert::extremal {

namespace {

constexpr double kPi = std::numbers::pi;

void check_radius(double r) {
    if (!(r >= 1.0 - 1e-3 && r <= 1.0 - 1e-8))
        throw DomainError("eval_radius must lie in [1 - 1e-3, 1 - 1e-8]");
}

using MapFn = conformal::Complex (*)(conformal::Complex, double);

conformal::Complex slit_map(conformal::Complex zeta, double c) {
    return conformal::disk_to_slitdomain(zeta, conformal::SlitDomainSpec(c));
}

conformal::Complex strip_map(conformal::Complex zeta, double c) {
    return conformal::disk_to_strip(zeta, conformal::StripSpec(c));
}

ExtremalPair build(PairKind kind, double c, const circle::CircleGrid& grid, double r) {
    check_radius(r);
    const MapFn map = (kind == PairKind::P1Slit) ? slit_map : strip_map;
    const std::size_t n = grid.size();
    std::vector<double> fv(n), gv(n);
    parallel_for_index(n, [&](std::size_t k) {
        const auto w = map(std::polar(r, grid.node(k)), c);
        fv[k] = -w.real();
        gv[k] = 1.0 - w.imag();
    });
    ExtremalPair pair{circle::CircleFunction(grid, std::move(fv)),
                      circle::CircleFunction(grid, std::move(gv))};
    pair.c = c;
    pair.kind = kind;
    pair.eval_radius = r;
    if (kind == PairKind::P1Slit) {
        const auto k = special::closed_constants(c);
        pair.predicted_measure = k.P;
        pair.predicted_norm = k.E;
    } else {
        pair.predicted_measure = 1.0 - c;
        pair.predicted_norm = std::sqrt((1.0 - c) / c);
    }
    return pair;
}

}  // namespace

ExtremalPair build_p1(double c, const circle::CircleGrid& grid, double eval_radius) {
    if (!(c > 0.0 && c < 1.0))
        throw DomainError("build_p1: c must lie in (0, 1); c = 1 degenerates the slit");
    return build(PairKind::P1Slit, c, grid, eval_radius);
}

ExtremalPair build_p2(double c, const circle::CircleGrid& grid, double eval_radius) {
    if (!(c > 0.0 && c < 1.0)) throw DomainError("build_p2: c must lie in (0, 1)");
    return build(PairKind::P2Strip, c, grid, eval_radius);
}

std::vector<double> locate_singularities(const ExtremalPair& pair, double cap) {
    std::vector<double> out;
    const auto& f = pair.f;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (std::abs(f[k]) > cap) out.push_back(f.grid().node(k));
    return out;  // grid order is already sorted by angle
}

std::vector<std::vector<double>> cluster_angles(const std::vector<double>& angles, double gap) {
    std::vector<std::vector<double>> clusters;
    for (double a : angles) {
        if (clusters.empty() || a - clusters.back().back() > gap)
            clusters.push_back({a});
        else
            clusters.back().push_back(a);
    }
    // Merge across the -pi/pi seam.
    if (clusters.size() >= 2) {
        const double wrap = (clusters.front().front() + 2.0 * kPi) - clusters.back().back();
        if (wrap <= gap) {
            auto& first = clusters.front();
            auto& last = clusters.back();
            first.insert(first.begin(), last.begin(), last.end());
            clusters.pop_back();
        }
    }
    return clusters;
}

double measured_measure(const ExtremalPair& pair, double delta) {
    return circle::superlevel_measure(pair.g, 1.0 - delta);
}

double measured_norm(const ExtremalPair& pair) {
    return circle::norm_p(pair.f, pair.kind == PairKind::P1Slit ? 1.0 : 2.0);
}

RefinedNorm refined_norm1(const ExtremalPair& pair, double cap, std::size_t halfwidth) {
    const auto& f = pair.f;
    const std::size_t n = f.size();
    const double spacing = 2.0 * kPi / static_cast<double>(n);
    const auto clusters = cluster_angles(locate_singularities(pair, cap),
                                         spacing * static_cast<double>(2 * halfwidth));
    std::vector<bool> keep(n, true);
    for (const auto& cl : clusters) {
        for (double a : cl) {
            const std::size_t k = f.grid().index_of(a);
            for (std::size_t d = 0; d <= halfwidth; ++d) {
                keep[(k + d) % n] = false;
                keep[(k + n - d) % n] = false;
            }
        }
    }
    RefinedNorm out;
    KahanSum sum;
    for (std::size_t k = 0; k < n; ++k) {
        if (keep[k])
            sum.add(std::abs(f[k]));
        else
            ++out.excluded_nodes;
    }
    out.value = sum.value() / static_cast<double>(n);

    // Model |f| ~ a * d^(-1/2) (slit) or a * |ln d| (strip) on the excluded
    // arcs, calibrating a at the first kept node outside each window.
    double tail = 0.0;
    for (const auto& cl : clusters) {
        const std::size_t kc = f.grid().index_of(cl[cl.size() / 2]);
        const std::size_t edge = halfwidth + 1;
        const double w = spacing * static_cast<double>(edge);
        for (int side = -1; side <= 1; side += 2) {
            long idx = (static_cast<long>(kc) + side * static_cast<long>(edge)) %
                       static_cast<long>(n);
            if (idx < 0) idx += static_cast<long>(n);
            const double fe = std::abs(f[static_cast<std::size_t>(idx)]);
            if (pair.kind == PairKind::P1Slit) {
                const double a = fe * std::sqrt(w);
                tail += 2.0 * a * std::sqrt(w) / (2.0 * kPi);
            } else {
                const double a = fe / std::max(1.0, -std::log(w));
                tail += a * w * (1.0 - std::log(w)) / (2.0 * kPi);
            }
        }
    }
    out.tail_estimate = tail;
    out.tail_negligible = tail < 5e-3;
    return out;
}

double boundary_arc_measure(PairKind kind, double c) {
    if (!(c > 0.0 && c < 1.0)) throw DomainError("boundary_arc_measure: c must lie in (0, 1)");
    const double r = 1.0 - 1e-9;
    const MapFn map = (kind == PairKind::P1Slit) ? slit_map : strip_map;
    // The limit boundary value of Im W is 0 on the {g >= 1} arc and at
    // least 1/c on the complementary arcs; bisect the crossings of the
    // halfway level.
    const double level = 0.5 / c;
    const auto inside = [&](double theta) {
        return map(std::polar(r, theta), c).imag() < level;
    };
    const std::size_t samples = 1 << 12;
    std::vector<double> thetas(samples + 1);
    std::vector<bool> in(samples + 1);
    for (std::size_t i = 0; i <= samples; ++i) {
        thetas[i] = -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(samples);
        in[i] = inside(thetas[i]);
    }
    const auto bisect = [&](double lo, double hi) {
        // invariant: inside(lo) != inside(hi)
        const bool flo = inside(lo);
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (inside(mid) == flo)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    double arc = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        if (in[i] && in[i + 1]) {
            arc += thetas[i + 1] - thetas[i];
        } else if (in[i] != in[i + 1]) {
            const double cross = bisect(thetas[i], thetas[i + 1]);
            arc += in[i] ? (cross - thetas[i]) : (thetas[i + 1] - cross);
        }
    }
    return arc / (2.0 * kPi);
}

std::vector<ConvergenceRow> convergence_table(PairKind kind, double c,
                                              const std::vector<std::size_t>& sizes,
                                              const std::vector<double>& radii,
                                              double delta) {
    std::vector<ConvergenceRow> rows;
    for (std::size_t n : sizes) {
        for (double r : radii) {
            const circle::CircleGrid grid(n);
            const ExtremalPair pair = (kind == PairKind::P1Slit) ? build_p1(c, grid, r)
                                                                 : build_p2(c, grid, r);
            ConvergenceRow row;
            row.n = n;
            row.eval_radius = r;
            row.delta = delta;
            row.measure = measured_measure(pair, delta);
            row.norm = measured_norm(pair);
            row.measure_error = row.measure - pair.predicted_measure;
            row.norm_error = row.norm - pair.predicted_norm;
            rows.push_back(row);
        }
    }
    return rows;
}

void export_pair(const ExtremalPair& pair, const std::string& prefix, const std::string& format) {
    if (format != "csv" && format != "json")
        throw DomainError("export_pair: format must be \"csv\" or \"json\"");
    const std::string ext = "." + format;
    if (format == "csv") {
        circle::write_csv(pair.f, prefix + "_f" + ext);
        circle::write_csv(pair.g, prefix + "_g" + ext);
    } else {
        circle::write_json(pair.f, prefix + "_f" + ext);
        circle::write_json(pair.g, prefix + "_g" + ext);
    }
    nlohmann::json j;
    j["kind"] = pair.kind == PairKind::P1Slit ? "p1_slit" : "p2_strip";
    j["c"] = pair.c;
    j["eval_radius"] = pair.eval_radius;
    j["predicted_measure"] = pair.predicted_measure;
    j["predicted_norm"] = pair.predicted_norm;
    j["norm_kind"] = pair.kind == PairKind::P1Slit ? "L1" : "L2";
    std::ofstream out(prefix + "_meta.json");
    if (!out) throw IoError("cannot open for writing: " + prefix + "_meta.json");
    out << j.dump(2) << '\n';
}

}  // namespace sharp_hilbert::extremal
