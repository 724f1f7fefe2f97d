#include "xcoh/ensemble.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace xcoh {

EnsembleRecord make_record(const XState& s) {
  EnsembleRecord r;
  r.rho11 = s.r11();
  r.rho22 = s.r22();
  r.rho33 = s.r33();
  r.rho44 = s.r44();
  r.re_rho14 = s.r14().real();
  r.im_rho14 = s.r14().imag();
  r.re_rho23 = s.r23().real();
  r.im_rho23 = s.r23().imag();
  r.measures = measure_all(s);
  return r;
}

XState record_state(const EnsembleRecord& r) {
  return XState::make(r.rho11, r.rho22, r.rho33, r.rho44,
                      Complex(r.re_rho14, r.im_rho14),
                      Complex(r.re_rho23, r.im_rho23));
}

double record_value(const EnsembleRecord& r, Column c) {
  switch (c) {
    case Column::Rho11: return r.rho11;
    case Column::Rho22: return r.rho22;
    case Column::Rho33: return r.rho33;
    case Column::Rho44: return r.rho44;
    case Column::ReRho14: return r.re_rho14;
    case Column::ImRho14: return r.im_rho14;
    case Column::ReRho23: return r.re_rho23;
    case Column::ImRho23: return r.im_rho23;
    case Column::CRel: return r.measures.c_rel;
    case Column::CL1: return r.measures.c_l1;
    case Column::CSkew: return r.measures.c_skew;
    case Column::CTr: return r.measures.c_tr;
    case Column::CRob: return r.measures.c_rob;
    case Column::Concurrence: return r.measures.concurrence;
    case Column::D2: return r.measures.d2;
    case Column::D2Max: return r.measures.d2max;
  }
  throw std::logic_error("record_value: unknown column");
}

void set_record_value(EnsembleRecord& r, Column c, double value) {
  switch (c) {
    case Column::Rho11: r.rho11 = value; return;
    case Column::Rho22: r.rho22 = value; return;
    case Column::Rho33: r.rho33 = value; return;
    case Column::Rho44: r.rho44 = value; return;
    case Column::ReRho14: r.re_rho14 = value; return;
    case Column::ImRho14: r.im_rho14 = value; return;
    case Column::ReRho23: r.re_rho23 = value; return;
    case Column::ImRho23: r.im_rho23 = value; return;
    case Column::CRel: r.measures.c_rel = value; return;
    case Column::CL1: r.measures.c_l1 = value; return;
    case Column::CSkew: r.measures.c_skew = value; return;
    case Column::CTr: r.measures.c_tr = value; return;
    case Column::CRob: r.measures.c_rob = value; return;
    case Column::Concurrence: r.measures.concurrence = value; return;
    case Column::D2: r.measures.d2 = value; return;
    case Column::D2Max: r.measures.d2max = value; return;
  }
  throw std::logic_error("set_record_value: unknown column");
}

std::optional<Column> parse_column(std::string_view name) {
  for (std::size_t i = 0; i < kColumnNames.size(); ++i)
    if (kColumnNames[i] == name) return static_cast<Column>(i);
  return std::nullopt;
}

std::vector<EnsembleRecord> run_ensemble(std::uint64_t seed, std::size_t n,
                                         bool phases, unsigned workers) {
  if (n < 1) throw std::invalid_argument("run_ensemble: n must be >= 1");
  std::vector<EnsembleRecord> out(n);
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, n));

  auto fill_range = [&out, seed, phases](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      out[i] = make_record(sample_random(seed, i, phases));
  };

  if (workers == 1) {
    fill_range(0, n);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = static_cast<std::size_t>(w) * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fill_range, lo, hi);
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace xcoh
