#include "hlog/errors.hpp"

#include <algorithm>
#include <utility>

namespace hlog {

NonConvergenceError::NonConvergenceError(const std::string& what,
                                         std::complex<double> best_value,
                                         double error_estimate)
    : std::runtime_error(what), best_value_(best_value), error_estimate_(error_estimate) {}

UnboundedError::UnboundedError(const std::string& what, GrowthWitness witness)
    : std::runtime_error(what), witness_(std::move(witness)) {}

bool GrowthWitness::strictly_increasing(std::size_t from) const {
  for (std::size_t i = from + 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) return false;
  }
  return true;
}

double GrowthWitness::growth_factor(std::size_t first, std::size_t last) const {
  if (first >= values.size() || last >= values.size() || !(values[first] > 0.0)) return 0.0;
  return values[last] / values[first];
}

bool GrowthWitness::grows_by(std::size_t first, std::size_t last, double factor) const {
  if (last >= values.size() || first >= last) return false;
  for (std::size_t i = first + 1; i <= last; ++i) {
    if (!(values[i] > values[i - 1])) return false;
  }
  return growth_factor(first, last) > factor;
}

bool GrowthWitness::grows_linearly(std::size_t first) const {
  if (values.size() < first + 3 || !strictly_increasing(first)) return false;
  const double initial = values[first + 1] - values[first];
  for (std::size_t i = first + 2; i < values.size(); ++i) {
    if (values[i] - values[i - 1] < 0.5 * initial) return false;
  }
  return true;
}

}  // namespace hlog
