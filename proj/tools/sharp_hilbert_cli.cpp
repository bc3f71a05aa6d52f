// Command-line surface: transform circle functions, build the extremal
// boundary pairs, run the U-property certificate, Brownian-motion
// simulations, weak-type constants and the full inequality report.
//
// Exit codes: 0 on success, 1 when a verification/certificate entry fails,
// 2 on usage or I/O errors.

#include <cstdio>
#include <exception>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "sharp_hilbert/circle.hpp"
#include "sharp_hilbert/errors.hpp"
#include "sharp_hilbert/extremal.hpp"
#include "sharp_hilbert/mc.hpp"
#include "sharp_hilbert/parallel.hpp"
#include "sharp_hilbert/report.hpp"
#include "sharp_hilbert/special_functions.hpp"
#include "sharp_hilbert/verify.hpp"

namespace sh = sharp_hilbert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string detect_format(const std::string& path, const std::string& requested) {
    if (requested != "auto") return requested;
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return "json";
    return "csv";
}

sh::circle::CircleFunction read_function(const std::string& path, const std::string& format) {
    return detect_format(path, format) == "json" ? sh::circle::read_json(path)
                                                 : sh::circle::read_csv(path);
}

void write_function(const sh::circle::CircleFunction& f, const std::string& path,
                    const std::string& format) {
    if (detect_format(path, format) == "json")
        sh::circle::write_json(f, path);
    else
        sh::circle::write_csv(f, path);
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw sh::IoError("cannot open for writing: " + path);
    out << content;
    if (!out.good()) throw sh::IoError("write failed: " + path);
}

int cmd_transform(const std::string& input, const std::string& output, const std::string& format) {
    const auto f = read_function(input, format);
    const auto hf = sh::circle::hilbert_multiplier(f);
    write_function(hf, output, format);
    std::printf("n=%zu\n", f.size());
    std::printf("norm1=%.12g\n", sh::circle::norm_p(f, 1.0));
    std::printf("norm2=%.12g\n", sh::circle::norm_p(f, 2.0));
    std::printf("superlevel_measure_at_1=%.12g\n", sh::circle::superlevel_measure(hf, 1.0));
    return kExitOk;
}

int cmd_extremal(const std::string& kind, double c, std::size_t n, double radius, double delta,
                 const std::string& prefix, const std::string& format,
                 const std::string& plot_data) {
    const sh::circle::CircleGrid grid(n);
    const auto pair = kind == "p1" ? sh::extremal::build_p1(c, grid, radius)
                                   : sh::extremal::build_p2(c, grid, radius);
    sh::extremal::export_pair(pair, prefix, format);
    const double measure = sh::extremal::measured_measure(pair, delta);
    const double norm = sh::extremal::measured_norm(pair);
    std::printf("%-22s %-14s %-14s\n", "quantity", "measured", "predicted");
    std::printf("%-22s %-14.8f %-14.8f\n", "superlevel_measure", measure, pair.predicted_measure);
    std::printf("%-22s %-14.8f %-14.8f\n",
                pair.kind == sh::extremal::PairKind::P1Slit ? "norm1" : "norm2", norm,
                pair.predicted_norm);
    const double exact = sh::extremal::boundary_arc_measure(pair.kind, c);
    std::printf("%-22s %-14.8f %-14.8f\n", "arc_measure_bisection", exact, pair.predicted_measure);
    if (!plot_data.empty()) {
        std::string csv = "x,lhs,rhs\n";
        const auto rows = sh::extremal::convergence_table(
            pair.kind, c, {n / 4, n / 2, n}, {radius}, delta);
        for (const auto& r : rows)
            csv += std::to_string(r.n) + "," + std::to_string(r.measure) + "," +
                   std::to_string(pair.predicted_measure) + "\n";
        write_text(plot_data, csv);
    }
    return kExitOk;
}

int cmd_certify(double h, double x0, double x1, double y0, double y1, double abs_tol,
                const std::string& output) {
    const sh::special::SpecialFnConfig cfg(abs_tol, 4096);
    const sh::special::CertificateGridSpec grid{x0, x1, y0, y1, h};
    try {
        const auto report = sh::special::certify_lemma31(cfg, grid);
        if (!output.empty()) write_text(output, report.to_json() + "\n");
        std::printf("certificate: all properties pass; max |U + |x|| = %.6g\n",
                    report.bounded_max);
        return kExitOk;
    } catch (const sh::special::CertificateFailure& fail) {
        if (!output.empty()) write_text(output, fail.report.to_json() + "\n");
        std::fprintf(stderr, "certificate FAILED\n%s\n", fail.report.to_json().c_str());
        return kExitVerificationFailure;
    }
}

int cmd_simulate(const std::string& domain, double c, std::uint64_t paths, double step,
                 std::uint64_t seed, double max_time, const std::string& output) {
    sh::mc::SimSpec spec;
    spec.domain = domain == "slit" ? sh::mc::DomainKind::Slit : sh::mc::DomainKind::Strip;
    spec.c = c;
    spec.paths = paths;
    spec.step = step;
    spec.seed = seed;
    spec.max_time = max_time;
    spec.validate();
    const auto progress = [](std::uint64_t done, double p, double se) {
        std::fprintf(stderr, "%llu,%.8f,%.8f\n", static_cast<unsigned long long>(done), p, se);
    };
    const auto result = sh::mc::simulate(spec, progress);
    const std::string json = result.to_json();
    if (!output.empty())
        write_text(output, json + "\n");
    else
        std::printf("%s\n", json.c_str());
    const auto rep = sh::mc::verify_theorem(spec);
    std::printf("%s", rep.to_text().c_str());
    return rep.all_pass() ? kExitOk : kExitVerificationFailure;
}

int cmd_constants(int p, double q, const std::string& output, const std::string& plot_data) {
    const auto wc = p == 1 ? sh::verify::constant_c1q(q) : sh::verify::constant_c2q(q);
    std::printf("c(%d,%g) = %.10f  argmax_x = %.10f  attained = %s\n", p, q, wc.value,
                wc.argmax_x, wc.attained ? "true" : "false");
    if (!output.empty()) {
        std::string json = "{\n  \"p\": " + std::to_string(p) + ",\n  \"q\": " + std::to_string(q) +
                           ",\n  \"value\": " + std::to_string(wc.value) +
                           ",\n  \"argmax_x\": " + std::to_string(wc.argmax_x) +
                           ",\n  \"attained\": " + (wc.attained ? "true" : "false") + "\n}\n";
        write_text(output, json);
    }
    if (!plot_data.empty()) {
        std::string csv = "x,lhs,rhs\n";
        for (int i = 1; i <= 400; ++i) {
            const double x = 5.0 * i / 400.0;
            const double ratio = p == 1
                                     ? std::pow(sh::verify::rhs_corollary12(x), 1.0 / q) / x
                                     : std::pow(x * x / (1.0 + x * x), 1.0 / q) / x;
            csv += std::to_string(x) + "," + std::to_string(ratio) + "," +
                   std::to_string(wc.value) + "\n";
        }
        write_text(plot_data, csv);
    }
    return kExitOk;
}

int cmd_verify(std::size_t corpus, std::uint64_t seed, std::size_t n, const std::string& output,
               const std::string& plot_data) {
    const auto rep = sh::verify::run_inequality_suite(n, corpus, seed);
    if (!output.empty()) write_text(output, rep.to_json() + "\n");
    std::printf("%zu entries, %zu failures\n", rep.entries.size(), rep.failures());
    if (!rep.all_pass()) {
        for (const auto& e : rep.entries)
            if (!e.pass)
                std::fprintf(stderr, "FAIL %s [%s] lhs=%.12g rhs=%.12g\n", e.name.c_str(),
                             e.params.c_str(), e.lhs, e.rhs);
    }
    if (!plot_data.empty()) {
        // One row per corpus function: x = ||f||_1, lhs = measure, rhs = bound.
        std::string csv = "x,lhs,rhs\n";
        for (const auto& e : rep.entries) {
            if (e.name != "corollary_1_3") continue;
            const std::size_t eq = e.params.find('=');
            const std::size_t comma = e.params.find(',');
            const std::string x = e.params.substr(eq + 1, comma - eq - 1);
            csv += x + "," + std::to_string(e.lhs) + "," + std::to_string(e.rhs) + "\n";
        }
        write_text(plot_data, csv);
    }
    return rep.all_pass() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circle Hilbert transform, sharp one-sided weak-type bounds, extremal "
                 "constructions and Brownian-motion verification"};
    app.require_subcommand(1);
    app.footer("Worker threads are capped by the SHARP_HILBERT_THREADS environment variable\n"
               "(default: available parallelism).");

    // transform
    std::string in_path, out_path, format = "auto";
    auto* transform = app.add_subcommand("transform", "Apply the Hilbert transform to a sampled "
                                                      "function and print its norms");
    transform->add_option("-i,--input", in_path, "Input CSV/JSON file")->required();
    transform->add_option("-o,--output", out_path, "Output file")->required();
    transform->add_option("--format", format, "csv, json or auto (default: by extension)")
        ->check(CLI::IsMember({"csv", "json", "auto"}));

    // extremal
    std::string kind = "p1", prefix = "extremal", pair_format = "csv", plot_data;
    double c = 0.5, radius = 1.0 - 1e-6, delta = 1e-3;
    std::size_t n = 1 << 14;
    auto* extremal = app.add_subcommand("extremal", "Build a sharpness witness pair (f, g) and "
                                                    "compare measured vs predicted quantities");
    extremal->add_option("--kind", kind, "p1 (slit, L1) or p2 (strip, L2)")
        ->check(CLI::IsMember({"p1", "p2"}));
    extremal->add_option("--c", c, "parameter c in (0, 1)")->check(CLI::Range(1e-6, 1.0 - 1e-9));
    extremal->add_option("-n,--n", n, "grid size (power of two >= 8), default 2^14");
    extremal->add_option("--radius", radius, "evaluation radius in [1-1e-3, 1-1e-8]");
    extremal->add_option("--delta", delta, "superlevel threshold offset, default 1e-3");
    extremal->add_option("-o,--output-prefix", prefix, "output path prefix");
    extremal->add_option("--format", pair_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    extremal->add_option("--plot-data", plot_data, "write (x, lhs, rhs) CSV of the convergence");

    // certify
    double h = 0.05, x0 = -3.0, x1 = 3.0, y0 = -1.0, y1 = 3.0, abs_tol = 1e-8;
    std::string cert_out;
    auto* certify = app.add_subcommand("certify", "Run the numerical certificate for the "
                                                  "properties of the special function U");
    certify->add_option("--spacing", h, "grid spacing h, default 0.05");
    certify->add_option("--x0", x0)->capture_default_str();
    certify->add_option("--x1", x1)->capture_default_str();
    certify->add_option("--y0", y0)->capture_default_str();
    certify->add_option("--y1", y1)->capture_default_str();
    certify->add_option("--abs-tol", abs_tol, "quadrature tolerance, default 1e-8");
    certify->add_option("-o,--output", cert_out, "write the JSON report here");

    // simulate
    std::string domain = "slit", sim_out;
    std::uint64_t paths = 100000, seed = 0;
    double step = 1e-3, max_time = 100.0, sim_c = 0.5;
    auto* simulate = app.add_subcommand("simulate", "Brownian-motion exit experiment in the slit "
                                                    "domain or strip; verifies the martingale "
                                                    "bounds");
    simulate->add_option("--domain", domain, "slit or strip")
        ->check(CLI::IsMember({"slit", "strip"}));
    simulate->add_option("--c", sim_c, "domain parameter")->check(CLI::Range(1e-6, 1.0));
    simulate->add_option("--paths", paths, "number of paths, default 1e5");
    simulate->add_option("--step", step, "time step, default 1e-3");
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_option("--max-time", max_time, "per-path time cap, default 100");
    simulate->add_option("-o,--output", sim_out, "write the JSON result here");

    // constants
    int const_p = 2;
    double const_q = 1.0;
    std::string const_out, const_plot;
    auto* constants = app.add_subcommand("constants", "Weak-type constants c(1,q), c(2,q)");
    constants->add_option("--p", const_p, "1 or 2")->check(CLI::IsMember({1, 2}));
    constants->add_option("--q", const_q, "exponent q")->required();
    constants->add_option("-o,--output", const_out, "write JSON here");
    constants->add_option("--plot-data", const_plot, "write (x, lhs, rhs) CSV of the ratio");

    // verify
    std::size_t corpus = 200, verify_n = 1 << 14;
    std::uint64_t verify_seed = 1;
    std::string verify_out, verify_plot;
    auto* verify = app.add_subcommand("verify", "Check all implemented inequalities on a random "
                                                "corpus of trig polynomials");
    verify->add_option("--corpus", corpus, "number of functions, default 200");
    verify->add_option("--seed", verify_seed, "corpus seed, default 1");
    verify->add_option("-n,--n", verify_n, "grid size, default 2^14");
    verify->add_option("-o,--output", verify_out, "write the JSON report here");
    verify->add_option("--plot-data", verify_plot, "write (x, lhs, rhs) CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (transform->parsed()) return cmd_transform(in_path, out_path, format);
        if (extremal->parsed())
            return cmd_extremal(kind, c, n, radius, delta, prefix, pair_format, plot_data);
        if (certify->parsed()) return cmd_certify(h, x0, x1, y0, y1, abs_tol, cert_out);
        if (simulate->parsed())
            return cmd_simulate(domain, sim_c, paths, step, seed, max_time, sim_out);
        if (constants->parsed()) return cmd_constants(const_p, const_q, const_out, const_plot);
        if (verify->parsed())
            return cmd_verify(corpus, verify_seed, verify_n, verify_out, verify_plot);
    } catch (const sh::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitUsage;
    } catch (const sh::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitUsage;
    } catch (const sh::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitUsage;
    } catch (const sh::DomainError& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
