#pragma once

#include "hamloc/poly.hpp"

// Product kernels behind Graded::multiply. Both compute the same exact
// product; the serial one is the reference the parallel one is tested against.
namespace hamloc::kernels {

/// Pairwise accumulation over all term pairs, single-threaded.
TermMap multiply_serial(const TermMap& a, const TermMap& b, int trunc_order);

/// Buckets both operands by g-power and computes each output g-row on its
/// own OpenMP thread. Rows are merged in order, so the result does not
/// depend on the thread count.
TermMap multiply_parallel(const TermMap& a, const TermMap& b, int trunc_order);

/// Work (|a|·|b| term pairs) above which multiply() takes the parallel path.
inline constexpr std::size_t kParallelThreshold = 4096;

TermMap multiply(const TermMap& a, const TermMap& b, int trunc_order);

}  // namespace hamloc::kernels
