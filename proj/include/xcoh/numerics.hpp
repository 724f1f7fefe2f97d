#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>

namespace xcoh {

using Complex = std::complex<double>;

/// Hermitian 2x2 matrix [[a, b], [conj(b), d]]; only the upper off-diagonal
/// entry is stored. Used for the two 2x2 blocks of an X-state density matrix.
struct Herm2 {
  double a = 0.0;
  double d = 0.0;
  Complex b{0.0, 0.0};
};

/// Hermitian 4x4 matrix. set() keeps M[j][i] = conj(M[i][j]) and forces
/// diagonal entries to be real, so the Hermitian invariant holds by
/// construction.
class Herm4 {
 public:
  Complex operator()(int i, int j) const { return m_[i * 4 + j]; }
  double diag(int i) const { return m_[i * 4 + i].real(); }
  void set(int i, int j, Complex v);

 private:
  std::array<Complex, 16> m_{};
};

/// m * m (the product of a Hermitian matrix with itself is Hermitian).
Herm4 square(const Herm4& m);

// All entropies below are in bits (log base 2).

/// -sum p_i log2 p_i with the convention 0 log 0 = 0. Entries in
/// [-1e-12, 0) are clamped to zero; anything more negative, or a total
/// further than 1e-9 from 1, is a domain error.
double shannon_entropy(std::span<const double> p);

/// -p log2 p - (1-p) log2 (1-p) for p in [0, 1] (1e-12 slack).
double binary_entropy(double p);

/// Principal square root of a positive-semidefinite Herm2, computed in
/// closed form as (m + sqrt(det) I) / sqrt(tr + 2 sqrt(det)). A block with
/// tr + 2 sqrt(det) < 1e-15 maps to the zero matrix.
Herm2 sqrt_psd_2x2(const Herm2& m);

struct Eigensystem4 {
  std::array<double, 4> values;                   // descending
  std::array<std::array<Complex, 4>, 4> vectors;  // vectors[k] pairs with values[k]
  int sweeps = 0;
};

/// Eigen decomposition of a Hermitian 4x4 matrix by cyclic Jacobi sweeps on
/// the embedded real-symmetric 8x8 form. Deterministic for a given input;
/// throws after the sweep budget is exhausted without convergence.
Eigensystem4 eig_hermitian_4x4_full(const Herm4& m);

/// Eigenvalues only, sorted descending.
std::array<double, 4> eig_hermitian_4x4(const Herm4& m);

/// Inverts a nondecreasing function on [lo, hi] by bisection. Returns x with
/// interval width <= 1e-12 (or an exact hit). Throws if target lies outside
/// [f(lo), f(hi)] beyond 1e-12 slack.
double bisect_monotone(const std::function<double(double)>& f, double target,
                       double lo, double hi);

}  // namespace xcoh
