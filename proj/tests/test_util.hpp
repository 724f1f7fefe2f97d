#pragma once

// Shared generators and independent oracles for the test suites. The matrix
// helpers here deliberately avoid the library's Herm4 arithmetic so that
// square-and-compare checks do not share code with what they check.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "xcoh/numerics.hpp"

namespace xcoh::testutil {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

inline Herm2 random_psd_herm2(Rng& rng) {
  const double a = rng.uniform();
  const double d = rng.uniform();
  const double mag = rng.uniform() * std::sqrt(a * d);
  const double phase = rng.uniform(0.0, 6.283185307179586);
  return Herm2{a, d, std::polar(mag, phase)};
}

using Mat4 = std::array<std::array<Complex, 4>, 4>;

inline Mat4 to_mat(const Herm4& h) {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = h(i, j);
  return m;
}

inline Mat4 mul(const Mat4& x, const Mat4& y) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < 4; ++k) acc += x[i][k] * y[k][j];
      out[i][j] = acc;
    }
  return out;
}

inline double max_abs_diff(const Mat4& x, const Mat4& y) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(x[i][j] - y[i][j]));
  return worst;
}

// Random unitary from Gram-Schmidt on a random complex matrix. Not Haar,
// but plenty for spectrum-recovery tests.
inline Mat4 random_unitary4(Rng& rng) {
  Mat4 u;
  for (int col = 0; col < 4; ++col) {
    std::array<Complex, 4> v;
    for (auto& z : v) z = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    for (int prev = 0; prev < col; ++prev) {
      Complex overlap{0.0, 0.0};
      for (int i = 0; i < 4; ++i) overlap += std::conj(u[i][prev]) * v[i];
      for (int i = 0; i < 4; ++i) v[i] -= overlap * u[i][prev];
    }
    double norm2 = 0.0;
    for (const auto& z : v) norm2 += std::norm(z);
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < 4; ++i) u[i][col] = v[i] * inv;
  }
  return u;
}

// V diag(spectrum) V^dagger as a Herm4.
inline Herm4 herm4_with_spectrum(Rng& rng, const std::array<double, 4>& spectrum) {
  const Mat4 u = random_unitary4(rng);
  Herm4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < 4; ++k)
        acc += u[i][k] * spectrum[static_cast<std::size_t>(k)] * std::conj(u[j][k]);
      out.set(i, j, acc);
    }
  return out;
}

// Minimal XML well-formedness check: declaration, balanced tags, quoted
// attributes, single root.
inline bool xml_well_formed(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  int roots = 0;
  while (i < doc.size()) {
    if (doc[i] != '<') {
      if (doc[i] == '>') return false;
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    bool in_quote = false;
    while (j < doc.size() && (in_quote || doc[j] != '>')) {
      if (doc[j] == '"') in_quote = !in_quote;
      ++j;
    }
    if (j >= doc.size()) return false;
    std::string tag = doc.substr(i + 1, j - i - 1);
    if (!tag.empty() && tag.front() == '?') {
      if (tag.back() != '?') return false;
    } else if (!tag.empty() && tag.front() == '/') {
      if (stack.empty()) return false;
      const std::string name = tag.substr(1);
      if (stack.back() != name) return false;
      stack.pop_back();
    } else if (!tag.empty() && tag.back() == '/') {
      if (stack.empty() && roots > 0) return false;
    } else if (!tag.empty()) {
      std::size_t space = tag.find_first_of(" \t\n");
      const std::string name =
          space == std::string::npos ? tag : tag.substr(0, space);
      if (stack.empty() && roots == 1) return false;  // second root element
      if (stack.empty()) ++roots;
      stack.push_back(name);
    } else {
      return false;
    }
    i = j + 1;
  }
  return stack.empty() && roots == 1;
}

inline std::size_t count_occurrences(const std::string& text,
                                     const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace xcoh::testutil
