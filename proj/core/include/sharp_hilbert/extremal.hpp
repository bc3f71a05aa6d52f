#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sharp_hilbert/circle.hpp"

namespace sharp_hilbert::extremal {

enum class PairKind { P1Slit, P2Strip };

// Boundary pair (f, g) sampled at radius eval_radius just inside the unit
// disk, with g the conjugate function of f up to its mean. For the slit
// construction the superlevel set {g >= 1} has measure P(c) and
// ||f||_1 = E(c); for the strip, measure 1 - c and ||f||_2^2 = (1-c)/c.
struct ExtremalPair {
    circle::CircleFunction f;
    circle::CircleFunction g;
    double c = 0.0;
    PairKind kind = PairKind::P1Slit;
    double predicted_measure = 0.0;
    double predicted_norm = 0.0;  // L1 for P1Slit, L2 for P2Strip
    double eval_radius = 0.0;

    // Superlevel threshold offset: {g >= 1 - delta}. g < 1 strictly off
    // the boundary, so counting at level 1 exactly would return 0.
    static constexpr double kDefaultDelta = 1e-3;
};

// Boundary pair induced by the disk -> slit-domain map (p = 1 witness):
// f = -Re W, g = 1 - Im W on |zeta| = eval_radius. The sign of f is fixed
// by the conjugate-function convention cos -> sin, under which
// hilbert_multiplier(f) = g - mean(g) away from the unbounded points.
ExtremalPair build_p1(double c, const circle::CircleGrid& grid, double eval_radius = 1.0 - 1e-6);

// Boundary pair induced by the disk -> strip map (p = 2 witness).
ExtremalPair build_p2(double c, const circle::CircleGrid& grid, double eval_radius = 1.0 - 1e-6);

// Node angles where |f| exceeds cap, sorted. f is unbounded at the
// boundary preimages of infinity, so pointwise comparisons must exclude
// neighborhoods of these angles.
std::vector<double> locate_singularities(const ExtremalPair& pair, double cap = 1e3);

// Groups sorted angles into clusters separated by more than gap.
std::vector<std::vector<double>> cluster_angles(const std::vector<double>& angles, double gap);

double measured_measure(const ExtremalPair& pair, double delta = ExtremalPair::kDefaultDelta);
double measured_norm(const ExtremalPair& pair);  // L1 or L2 according to kind

// ||f||_1 with the 16 nodes nearest each singularity excluded, plus an
// analytic estimate of the excluded arcs' contribution (inverse-sqrt model
// for the slit pair, logarithmic for the strip pair).
struct RefinedNorm {
    double value = 0.0;           // node average over the kept nodes
    double tail_estimate = 0.0;   // analytic estimate of the excluded mass
    std::size_t excluded_nodes = 0;
    bool tail_negligible = false;
};
RefinedNorm refined_norm1(const ExtremalPair& pair, double cap = 50.0, std::size_t halfwidth = 16);

// Arc-length measure of the limit set {g >= 1}, computed from the arc
// endpoints on the unit circle located by bisection of the boundary
// indicator at radius 1 - 1e-9. Independent of the node-counting route.
double boundary_arc_measure(PairKind kind, double c);

// Convergence of the sampled quantities toward the predictions as the grid
// refines and the evaluation radius approaches 1.
struct ConvergenceRow {
    std::size_t n;
    double eval_radius;
    double delta;
    double measure;
    double norm;
    double measure_error;
    double norm_error;
};
std::vector<ConvergenceRow> convergence_table(PairKind kind, double c,
                                              const std::vector<std::size_t>& sizes,
                                              const std::vector<double>& radii,
                                              double delta = ExtremalPair::kDefaultDelta);

// Writes f and g in the circle formats plus a JSON sidecar with c, kind,
// predictions and eval_radius. format is "csv" or "json".
void export_pair(const ExtremalPair& pair, const std::string& prefix, const std::string& format);

}  // namespace sharp_hilbert::extremal
