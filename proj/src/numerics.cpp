#include "xcoh/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace xcoh {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

void Herm4::set(int i, int j, Complex v) {
  if (i == j) {
    m_[i * 4 + i] = Complex(v.real(), 0.0);
    return;
  }
  m_[i * 4 + j] = v;
  m_[j * 4 + i] = std::conj(v);
}

Herm4 square(const Herm4& m) {
  Herm4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < 4; ++k) acc += m(i, k) * m(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (x < -1e-12)
      throw std::domain_error("shannon_entropy: negative probability " +
                              fmt_double(x));
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::domain_error("shannon_entropy: probabilities sum to " +
                            fmt_double(sum));
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double binary_entropy(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12)
    throw std::domain_error("binary_entropy: p = " + fmt_double(p) +
                            " outside [0, 1]");
  p = std::clamp(p, 0.0, 1.0);
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

Herm2 sqrt_psd_2x2(const Herm2& m) {
  constexpr double slack = 1e-12;
  const double det = m.a * m.d - std::norm(m.b);
  if (m.a < -slack || m.d < -slack || det < -slack)
    throw std::domain_error(
        "sqrt_psd_2x2: matrix not positive-semidefinite (a = " +
        fmt_double(m.a) + ", d = " + fmt_double(m.d) +
        ", det = " + fmt_double(det) + ")");
  const double s = std::sqrt(std::max(det, 0.0));
  const double tr = std::max(m.a, 0.0) + std::max(m.d, 0.0);
  const double denom2 = tr + 2.0 * s;
  if (denom2 < 1e-15) return Herm2{};  // zero block, by continuity
  const double inv = 1.0 / std::sqrt(denom2);
  return Herm2{(m.a + s) * inv, (m.d + s) * inv, m.b * inv};
}

Eigensystem4 eig_hermitian_4x4_full(const Herm4& m) {
  // Embed M = A + iB into the real symmetric 8x8 matrix [[A, -B], [B, A]],
  // whose spectrum is that of M with every eigenvalue doubled.
  double a[8][8];
  double v[8][8];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex z = m(i, j);
      a[i][j] = z.real();
      a[i + 4][j + 4] = z.real();
      a[i][j + 4] = -z.imag();
      a[i + 4][j] = z.imag();
    }
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) v[i][j] = (i == j) ? 1.0 : 0.0;

  double fro2 = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) fro2 += a[i][j] * a[i][j];
  const double off_tol = 1e-30 * std::max(1.0, fro2);

  auto off_diag2 = [&a]() {
    double off = 0.0;
    for (int p = 0; p < 8; ++p)
      for (int q = p + 1; q < 8; ++q) off += a[p][q] * a[p][q];
    return off;
  };

  constexpr int kMaxSweeps = 60;
  int sweep = 0;
  bool converged = false;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diag2() <= off_tol) {
      converged = true;
      break;
    }
    for (int p = 0; p < 8; ++p) {
      for (int q = p + 1; q < 8; ++q) {
        const double apq = a[p][q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = 0.5 * (a[q][q] - a[p][p]) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double delta = t * apq;
        a[p][p] -= delta;
        a[q][q] += delta;
        a[p][q] = 0.0;
        a[q][p] = 0.0;
        for (int r = 0; r < 8; ++r) {
          if (r != p && r != q) {
            const double arp = a[r][p];
            const double arq = a[r][q];
            a[r][p] = arp - s * (arq + tau * arp);
            a[p][r] = a[r][p];
            a[r][q] = arq + s * (arp - tau * arq);
            a[q][r] = a[r][q];
          }
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = vrp - s * (vrq + tau * vrp);
          v[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }
  if (!converged && off_diag2() > off_tol)
    throw std::runtime_error(
        "eig_hermitian_4x4: Jacobi did not converge after " +
        std::to_string(sweep) + " sweeps");

  std::array<int, 8> idx;
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&a](int x, int y) { return a[x][x] > a[y][y]; });

  // Eigenvalues come in duplicated pairs; keep one representative of each.
  Eigensystem4 out;
  out.sweeps = sweep;
  for (int k = 0; k < 4; ++k) {
    const int col = idx[2 * k];
    out.values[k] = a[col][col];
    for (int j = 0; j < 4; ++j)
      out.vectors[k][j] = Complex(v[j][col], v[j + 4][col]);
  }
  return out;
}

std::array<double, 4> eig_hermitian_4x4(const Herm4& m) {
  return eig_hermitian_4x4_full(m).values;
}

double bisect_monotone(const std::function<double(double)>& f, double target,
                       double lo, double hi) {
  if (!(lo <= hi))
    throw std::invalid_argument("bisect_monotone: lo > hi");
  constexpr double bracket_slack = 1e-12;
  const double flo = f(lo);
  const double fhi = f(hi);
  if (target < flo - bracket_slack || target > fhi + bracket_slack)
    throw std::domain_error("bisect_monotone: target " + fmt_double(target) +
                            " outside [" + fmt_double(flo) + ", " +
                            fmt_double(fhi) + "]");
  // Converge to the leftmost preimage: ties move the right bound, so a
  // numerically flat stretch of f resolves to its left edge.
  double a = lo;
  double b = hi;
  for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // interval no longer splittable
    if (f(mid) < target)
      a = mid;
    else
      b = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace xcoh
