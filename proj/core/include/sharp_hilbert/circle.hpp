#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace sharp_hilbert::circle {

// Uniform grid t_k = 2*pi*k/n - pi, k = 0..n-1, covering the circle once.
// n must be a power of two, n >= 8; other sizes are rejected rather than
// padded so that node counts stay exact fractions of n.
class CircleGrid {
  public:
    explicit CircleGrid(std::size_t n);

    std::size_t size() const { return n_; }
    double node(std::size_t k) const;
    // Index of the grid node equal to t (within 1e-9); throws DomainError
    // if t is not a node.
    std::size_t index_of(double t) const;

    static bool valid_size(std::size_t n);

    friend bool operator==(const CircleGrid& a, const CircleGrid& b) { return a.n_ == b.n_; }

  private:
    std::size_t n_;
};

// Real samples of a function on a CircleGrid. Immutable after construction;
// all samples must be finite.
class CircleFunction {
  public:
    CircleFunction(CircleGrid grid, std::vector<double> values);

    const CircleGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t k) const { return values_[k]; }
    double mean() const;

  private:
    CircleGrid grid_;
    std::vector<double> values_;
};

// Fourier coefficients c_m for -n/2 < m <= n/2, stored in transform order:
// slot p holds frequency p for p <= n/2 and p - n for p > n/2.
class SpectralCoeffs {
  public:
    explicit SpectralCoeffs(std::vector<std::complex<double>> coeffs);

    std::size_t size() const { return coeffs_.size(); }
    long min_freq() const { return -static_cast<long>(size() / 2) + 1; }
    long max_freq() const { return static_cast<long>(size() / 2); }
    const std::complex<double>& at(long m) const;
    std::complex<double>& at(long m);
    const std::vector<std::complex<double>>& raw() const { return coeffs_; }

  private:
    std::vector<std::complex<double>> coeffs_;
};

// Equal-weight (trapezoidal) discrete Fourier coefficients of f:
// c_m = (1/n) sum_k f(t_k) exp(-i m t_k).
SpectralCoeffs analyze(const CircleFunction& f);

// Inverse transform. The reconstruction must be real: an imaginary residue
// above 1e-10 (relative to the coefficient scale) throws NonRealResult.
CircleFunction synthesize(const SpectralCoeffs& s, const CircleGrid& grid);

// Conjugate-function multiplier c_m -> -i*sgn(m)*c_m. The m = 0 mode is
// dropped (mean-zero output). The Nyquist mode m = n/2 is dropped as well:
// its conjugate phase sin(n t / 2) vanishes at every node, so keeping it
// would only break the realness of the result.
CircleFunction hilbert_multiplier(const CircleFunction& f);

// Principal-value quadrature of (1/2pi) p.v. int f(s) cot((t-s)/2) ds at a
// grid node t. The singular node is excluded and the sum runs over the
// nodes at odd offsets from t, paired symmetrically about it with spacing
// 4pi/n and weight 2/n. On this subgrid the odd kernel cancels exactly and
// the rule reproduces every mode |m| < n/2; it is the independent oracle
// for hilbert_multiplier.
double hilbert_pv_direct(const CircleFunction& f, double t);

// ((1/n) sum |f(t_k)|^p)^(1/p) for p in [1, 2] (normalized Haar measure).
double norm_p(const CircleFunction& f, double p);

// Fraction of nodes with f(t_k) >= level (closed comparison).
double superlevel_measure(const CircleFunction& f, double level);

// --- serialization -------------------------------------------------------

// CSV with header "t,value", one row per node, doubles printed with
// round-trip precision.
void write_csv(const CircleFunction& f, const std::string& path);
CircleFunction read_csv(const std::string& path);

// JSON {"n": ..., "values": [...]}.
void write_json(const CircleFunction& f, const std::string& path);
CircleFunction read_json(const std::string& path);

}  // namespace sharp_hilbert::circle
