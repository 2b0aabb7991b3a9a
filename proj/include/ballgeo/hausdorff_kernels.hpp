#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ballgeo/point.hpp"

namespace ballgeo {

using DistanceFn = std::function<double(const Point&, const Point&)>;
/// Optional exact membership of the target set; lets a source point that lies
/// in the target be skipped without a scan.
using MembershipFn = std::function<bool(const Point&)>;

struct DirectedSup {
  double value = 0.0;
  /// Index into the source points; smallest index among ties.
  std::size_t witness = 0;
};

/// sup_{a in from} min_{b in to} d(a, b), brute force. Reference kernel.
DirectedSup directed_sup_serial(const std::vector<Point>& from, const std::vector<Point>& to,
                                const DistanceFn& d, const MembershipFn& in_target = {});

/// Same quantity with an early-break inner loop and a shared running maximum,
/// parallel over source points with OpenMP. Bitwise identical to the serial
/// kernel: each reported value is an exact minimum of the same doubles.
DirectedSup directed_sup_parallel(const std::vector<Point>& from, const std::vector<Point>& to,
                                  const DistanceFn& d, const MembershipFn& in_target = {});

/// Visiting order used by both kernels: i -> (i * stride) mod n with stride
/// coprime to n, so nearby grid points are not scanned back to back.
std::vector<std::size_t> scatter_order(std::size_t n);

}  // namespace ballgeo
