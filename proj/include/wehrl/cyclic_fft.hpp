#pragma once

#include "wehrl/group.hpp"

#include <complex>
#include <memory>
#include <span>

namespace wehrl {

/// Unnormalized multidimensional DFT over Z_{n_1} x ... x Z_{n_k} in the
/// lexicographic element order. forward(x)[a] = sum_h conj(lambda_a(h)) x[h];
/// backward uses lambda_a(h). Plans are not thread-safe to create; each
/// instance owns its own buffers.
class CyclicFft {
 public:
  explicit CyclicFft(const GroupDescriptor& group);
  ~CyclicFft();
  CyclicFft(const CyclicFft&) = delete;
  CyclicFft& operator=(const CyclicFft&) = delete;

  std::size_t size() const { return size_; }

  /// Input is read from data(), result is written back to data().
  void forward();
  void backward();
  std::span<std::complex<double>> data();

 private:
  struct Plans;
  std::size_t size_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace wehrl
