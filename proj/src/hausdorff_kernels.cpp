#include "ballgeo/hausdorff_kernels.hpp"

#include <atomic>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ballgeo/errors.hpp"

namespace ballgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_nonempty(const std::vector<Point>& from, const std::vector<Point>& to) {
  if (from.empty() || to.empty()) throw DomainError("hausdorff of an empty point set");
}

bool better(double value, std::size_t index, const DirectedSup& current) {
  return value > current.value || (value == current.value && index < current.witness);
}

void raise_to(std::atomic<double>& target, double value) {
  double seen = target.load(std::memory_order_relaxed);
  while (value > seen && !target.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
  }
}

}  // namespace

std::vector<std::size_t> scatter_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  if (n == 0) return order;
  std::size_t stride = static_cast<std::size_t>(0.618 * static_cast<double>(n)) | 1;
  while (std::gcd(stride, n) != 1) ++stride;
  std::size_t at = 0;
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = at;
    at = (at + stride) % n;
  }
  return order;
}

DirectedSup directed_sup_serial(const std::vector<Point>& from, const std::vector<Point>& to,
                                const DistanceFn& d, const MembershipFn& in_target) {
  check_nonempty(from, to);
  DirectedSup best{-1.0, 0};
  for (std::size_t i = 0; i < from.size(); ++i) {
    double nearest = kInf;
    if (in_target && in_target(from[i])) {
      nearest = 0.0;
    } else {
      for (const auto& b : to) nearest = std::min(nearest, d(from[i], b));
    }
    if (better(nearest, i, best)) best = {nearest, i};
  }
  return best;
}

DirectedSup directed_sup_parallel(const std::vector<Point>& from, const std::vector<Point>& to,
                                  const DistanceFn& d, const MembershipFn& in_target) {
  check_nonempty(from, to);
  const auto outer = scatter_order(from.size());
  const auto inner = scatter_order(to.size());
  std::atomic<double> running{-1.0};
  DirectedSup best{-1.0, 0};
  const auto n = static_cast<std::ptrdiff_t>(outer.size());

#pragma omp parallel
  {
    DirectedSup local{-1.0, 0};
#pragma omp for schedule(dynamic, 64) nowait
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const std::size_t i = outer[static_cast<std::size_t>(k)];
      const Point& a = from[i];
      double nearest = kInf;
      bool pruned = false;
      if (in_target && in_target(a)) {
        nearest = 0.0;
      } else {
        for (std::size_t j : inner) {
          nearest = std::min(nearest, d(a, to[j]));
          // a cannot raise the maximum any more; ties must finish the scan
          if (nearest < running.load(std::memory_order_relaxed)) {
            pruned = true;
            break;
          }
        }
      }
      if (pruned) continue;
      raise_to(running, nearest);
      if (better(nearest, i, local)) local = {nearest, i};
    }
#pragma omp critical(ballgeo_directed_sup)
    {
      if (better(local.value, local.witness, best)) best = local;
    }
  }
  return best;
}

}  // namespace ballgeo
