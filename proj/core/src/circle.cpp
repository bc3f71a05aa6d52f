#include "sharp_hilbert/circle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sharp_hilbert/errors.hpp"
#include "sharp_hilbert/parallel.hpp"

namespace sharp_hilbert::circle {

namespace {

constexpr double kPi = std::numbers::pi;

// Radix-2 decimation-in-time transform, in place.
// sign = -1: forward (unnormalized DFT), sign = +1: inverse (unnormalized).
void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> w =
                    std::polar(1.0, ang * static_cast<double>(k));
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

}  // namespace

CircleGrid::CircleGrid(std::size_t n) : n_(n) {
    if (!valid_size(n))
        throw DomainError("CircleGrid: n must be a power of two >= 8, got " + std::to_string(n));
}

bool CircleGrid::valid_size(std::size_t n) {
    return n >= 8 && (n & (n - 1)) == 0;
}

double CircleGrid::node(std::size_t k) const {
    return 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_) - kPi;
}

std::size_t CircleGrid::index_of(double t) const {
    const double x = (t + kPi) * static_cast<double>(n_) / (2.0 * kPi);
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-9 * static_cast<double>(n_))
        throw DomainError("CircleGrid::index_of: t is not a grid node");
    const long k = static_cast<long>(r) % static_cast<long>(n_);
    return static_cast<std::size_t>(k < 0 ? k + static_cast<long>(n_) : k);
}

CircleFunction::CircleFunction(CircleGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw DomainError("CircleFunction: values length does not match grid size");
    for (double v : values_)
        if (!std::isfinite(v)) throw DomainError("CircleFunction: non-finite sample");
}

double CircleFunction::mean() const {
    KahanSum s;
    for (double v : values_) s.add(v);
    return s.value() / static_cast<double>(values_.size());
}

SpectralCoeffs::SpectralCoeffs(std::vector<std::complex<double>> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (!CircleGrid::valid_size(coeffs_.size()))
        throw DomainError("SpectralCoeffs: length must be a power of two >= 8");
}

const std::complex<double>& SpectralCoeffs::at(long m) const {
    const long n = static_cast<long>(size());
    if (m <= -n / 2 || m > n / 2) throw DomainError("SpectralCoeffs::at: frequency out of range");
    return coeffs_[static_cast<std::size_t>((m % n + n) % n)];
}

std::complex<double>& SpectralCoeffs::at(long m) {
    return const_cast<std::complex<double>&>(std::as_const(*this).at(m));
}

SpectralCoeffs analyze(const CircleFunction& f) {
    const std::size_t n = f.size();
    std::vector<std::complex<double>> a(n);
    for (std::size_t k = 0; k < n; ++k) a[k] = f[k];
    fft_pow2(a, -1);
    // Nodes start at -pi, so c_m picks up the phase exp(i m pi) = (-1)^m
    // relative to the plain index-space DFT.
    for (std::size_t p = 0; p < n; ++p) {
        a[p] /= static_cast<double>(n);
        if (p & 1) a[p] = -a[p];
    }
    return SpectralCoeffs(std::move(a));
}

CircleFunction synthesize(const SpectralCoeffs& s, const CircleGrid& grid) {
    const std::size_t n = grid.size();
    if (s.size() != n)
        throw DomainError("synthesize: coefficient length does not match grid");
    std::vector<std::complex<double>> a = s.raw();
    double scale = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        scale = std::max(scale, std::abs(a[p]));
        if (p & 1) a[p] = -a[p];  // undo the node phase
    }
    fft_pow2(a, +1);
    double max_imag = 0.0;
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        max_imag = std::max(max_imag, std::abs(a[k].imag()));
        out[k] = a[k].real();
    }
    const double tol = 1e-10 * std::max(1.0, scale);
    if (max_imag > tol)
        throw NonRealResult("synthesize: imaginary residue " + std::to_string(max_imag) +
                            " exceeds tolerance");
    return CircleFunction(grid, std::move(out));
}

CircleFunction hilbert_multiplier(const CircleFunction& f) {
    SpectralCoeffs s = analyze(f);
    const long half = static_cast<long>(f.size() / 2);
    s.at(0) = 0.0;
    s.at(half) = 0.0;
    const std::complex<double> mi(0.0, -1.0);
    for (long m = 1; m < half; ++m) {
        s.at(m) *= mi;
        s.at(-m) *= -mi;
    }
    return synthesize(s, f.grid());
}

double hilbert_pv_direct(const CircleFunction& f, double t) {
    const std::size_t n = f.size();
    const std::size_t k = f.grid().index_of(t);
    // Odd offsets pair as (k - d, k + d); cot is pi-periodic, so index
    // wrap-around does not change the kernel value.
    KahanSum acc;
    for (std::size_t d = 1; d < n / 2; d += 2) {
        const double w = 1.0 / std::tan(kPi * static_cast<double>(d) / static_cast<double>(n));
        const double fm = f[(k + n - d) % n];
        const double fp = f[(k + d) % n];
        acc.add(w * (fm - fp));
    }
    return 2.0 * acc.value() / static_cast<double>(n);
}

double norm_p(const CircleFunction& f, double p) {
    if (!(p >= 1.0 && p <= 2.0)) throw DomainError("norm_p: p must lie in [1, 2]");
    KahanSum s;
    if (p == 1.0) {
        for (double v : f.values()) s.add(std::abs(v));
        return s.value() / static_cast<double>(f.size());
    }
    if (p == 2.0) {
        for (double v : f.values()) s.add(v * v);
        return std::sqrt(s.value() / static_cast<double>(f.size()));
    }
    for (double v : f.values()) s.add(std::pow(std::abs(v), p));
    return std::pow(s.value() / static_cast<double>(f.size()), 1.0 / p);
}

double superlevel_measure(const CircleFunction& f, double level) {
    std::size_t count = 0;
    for (double v : f.values())
        if (v >= level) ++count;
    return static_cast<double>(count) / static_cast<double>(f.size());
}

// --- serialization -------------------------------------------------------

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(const CircleFunction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "t,value\n";
    for (std::size_t k = 0; k < f.size(); ++k)
        out << fmt_double(f.grid().node(k)) << ',' << fmt_double(f[k]) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

CircleFunction read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::string line;
    long lineno = 0;
    if (!std::getline(in, line)) throw ParseError("empty file: " + path, 1);
    ++lineno;
    if (line != "t,value" && line != "t,value\r")
        throw ParseError("expected header 't,value' in " + path, lineno);
    std::vector<double> ts, vs;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("missing ',' in " + path, lineno);
        char* end = nullptr;
        const std::string a = line.substr(0, comma);
        const std::string b = line.substr(comma + 1);
        const double t = std::strtod(a.c_str(), &end);
        if (end == a.c_str()) throw ParseError("bad t field in " + path, lineno);
        const double v = std::strtod(b.c_str(), &end);
        if (end == b.c_str()) throw ParseError("bad value field in " + path, lineno);
        ts.push_back(t);
        vs.push_back(v);
    }
    if (!CircleGrid::valid_size(vs.size()))
        throw ParseError("row count " + std::to_string(vs.size()) +
                         " is not a power of two >= 8 in " + path);
    CircleGrid grid(vs.size());
    for (std::size_t k = 0; k < ts.size(); ++k)
        if (std::abs(ts[k] - grid.node(k)) > 1e-9)
            throw ParseError("t column does not match the uniform grid in " + path,
                             static_cast<long>(k) + 2);
    return CircleFunction(grid, std::move(vs));
}

void write_json(const CircleFunction& f, const std::string& path) {
    nlohmann::json j;
    j["n"] = f.size();
    j["values"] = f.values();
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

CircleFunction read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    if (!j.contains("n") || !j.contains("values"))
        throw ParseError("JSON must contain \"n\" and \"values\": " + path);
    const auto n = j["n"].get<std::size_t>();
    auto vals = j["values"].get<std::vector<double>>();
    if (vals.size() != n)
        throw ParseError("\"values\" length does not match \"n\" in " + path);
    return CircleFunction(CircleGrid(n), std::move(vals));
}

}  // namespace sharp_hilbert::circle
