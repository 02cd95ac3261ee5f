#pragma once

#include <vector>

namespace augloop {

/// Closed-form dataset-size models for the two augmentation policies, given
/// the per-step wrong-answer rates p[0..T-1] (each in (0, 1)).

/// Sizes when every current example (seed + previous augmentations) is
/// eligible for augmentation: s[0] = n, s[t+1] = s[t] * (1 + p[t]).
/// Grows at least geometrically in (1 + min p).
std::vector<double> compounding_sizes(double seed_size,
                                      const std::vector<double>& wrong_rates);

/// Sizes when only seed examples are eligible: s[t+1] = s[t] + n * p[t],
/// i.e. s[T] = n * (1 + sum p). Bounded by n * (1 + T * max p).
std::vector<double> seed_only_sizes(double seed_size,
                                    const std::vector<double>& wrong_rates);

double compounding_lower_bound(double seed_size,
                               const std::vector<double>& wrong_rates);
double seed_only_upper_bound(double seed_size,
                             const std::vector<double>& wrong_rates);

}  // namespace augloop
