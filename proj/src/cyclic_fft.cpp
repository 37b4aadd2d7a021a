#include "wehrl/cyclic_fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <vector>

namespace wehrl {

struct CyclicFft::Plans {
  fftw_complex* buffer = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

CyclicFft::CyclicFft(const GroupDescriptor& group) : size_(group.order()), plans_(std::make_unique<Plans>()) {
  const std::vector<int>& orders = group.cyclic_orders();
  plans_->buffer = fftw_alloc_complex(size_);
  if (plans_->buffer == nullptr) throw std::bad_alloc();
  const int rank = static_cast<int>(orders.size());
  plans_->forward = fftw_plan_dft(rank, orders.data(), plans_->buffer, plans_->buffer, FFTW_FORWARD, FFTW_ESTIMATE);
  plans_->backward = fftw_plan_dft(rank, orders.data(), plans_->buffer, plans_->buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
  std::fill_n(data().begin(), size_, std::complex<double>{});
}

CyclicFft::~CyclicFft() {
  if (plans_->forward) fftw_destroy_plan(plans_->forward);
  if (plans_->backward) fftw_destroy_plan(plans_->backward);
  fftw_free(plans_->buffer);
}

void CyclicFft::forward() { fftw_execute(plans_->forward); }

void CyclicFft::backward() { fftw_execute(plans_->backward); }

std::span<std::complex<double>> CyclicFft::data() {
  return {reinterpret_cast<std::complex<double>*>(plans_->buffer), size_};
}

}  // namespace wehrl
