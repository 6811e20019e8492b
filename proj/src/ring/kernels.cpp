#include "hamloc/kernels.hpp"

#include <omp.h>

#include <utility>
#include <vector>

namespace hamloc::kernels {

TermMap multiply_serial(const TermMap& a, const TermMap& b, int trunc_order) {
  TermMap out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      const int u = ma.u + mb.u;
      if (u > trunc_order) continue;
      out[Monomial{ma.t + mb.t, u}] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

using Row = std::vector<std::pair<int, const Rational*>>;

std::vector<Row> bucket_by_u(const TermMap& m, int trunc_order) {
  std::vector<Row> rows(static_cast<std::size_t>(trunc_order) + 1);
  for (const auto& [mono, c] : m)
    if (mono.u >= 0 && mono.u <= trunc_order) rows[static_cast<std::size_t>(mono.u)].emplace_back(mono.t, &c);
  return rows;
}

}  // namespace

TermMap multiply_parallel(const TermMap& a, const TermMap& b, int trunc_order) {
  const auto ra = bucket_by_u(a, trunc_order);
  const auto rb = bucket_by_u(b, trunc_order);
  const int rows = trunc_order + 1;
  std::vector<std::map<int, Rational>> out_rows(static_cast<std::size_t>(rows));

#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < rows; ++r) {
    auto& acc = out_rows[static_cast<std::size_t>(r)];
    Rational prod;
    for (int i = 0; i <= r; ++i) {
      for (const auto& [ta, ca] : ra[static_cast<std::size_t>(i)]) {
        for (const auto& [tb, cb] : rb[static_cast<std::size_t>(r - i)]) {
          mpq_mul(prod.get_mpq_t(), ca->get_mpq_t(), cb->get_mpq_t());
          acc[ta + tb] += prod;
        }
      }
    }
  }

  TermMap out;
  for (int r = 0; r < rows; ++r)
    for (auto& [t, c] : out_rows[static_cast<std::size_t>(r)])
      if (c != 0) out.emplace(Monomial{t, r}, std::move(c));
  return out;
}

TermMap multiply(const TermMap& a, const TermMap& b, int trunc_order) {
  if (a.size() * b.size() >= kParallelThreshold && omp_get_max_threads() > 1)
    return multiply_parallel(a, b, trunc_order);
  return multiply_serial(a, b, trunc_order);
}

}  // namespace hamloc::kernels
