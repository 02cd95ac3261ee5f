#include "augloop/growth.hpp"

#include <algorithm>
#include <cmath>

namespace augloop {

std::vector<double> compounding_sizes(double seed_size,
                                      const std::vector<double>& wrong_rates) {
  std::vector<double> sizes{seed_size};
  for (double p : wrong_rates) {
    sizes.push_back(sizes.back() * (1.0 + p));
  }
  return sizes;
}

std::vector<double> seed_only_sizes(double seed_size,
                                    const std::vector<double>& wrong_rates) {
  std::vector<double> sizes{seed_size};
  for (double p : wrong_rates) {
    sizes.push_back(sizes.back() + seed_size * p);
  }
  return sizes;
}

double compounding_lower_bound(double seed_size,
                               const std::vector<double>& wrong_rates) {
  if (wrong_rates.empty()) return seed_size;
  double p_min = *std::min_element(wrong_rates.begin(), wrong_rates.end());
  return seed_size *
         std::pow(1.0 + p_min, static_cast<double>(wrong_rates.size()));
}

double seed_only_upper_bound(double seed_size,
                             const std::vector<double>& wrong_rates) {
  if (wrong_rates.empty()) return seed_size;
  double p_max = *std::max_element(wrong_rates.begin(), wrong_rates.end());
  return seed_size *
         (1.0 + static_cast<double>(wrong_rates.size()) * p_max);
}

}  // namespace augloop
