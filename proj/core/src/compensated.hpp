#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace hlog::detail {

// Neumaier compensated summation, componentwise for complex values.
class CompensatedSum {
 public:
  void add(double v) { add_part(sum_re_, comp_re_, v); }
  void add(const std::complex<double>& v) {
    add_part(sum_re_, comp_re_, v.real());
    add_part(sum_im_, comp_im_, v.imag());
  }
  template <class T>
  T result() const {
    if constexpr (std::is_same_v<T, double>) {
      return sum_re_ + comp_re_;
    } else {
      return {sum_re_ + comp_re_, sum_im_ + comp_im_};
    }
  }

 private:
  static void add_part(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

}  // namespace hlog::detail
