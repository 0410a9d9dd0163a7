#include "specdiff/filter.hpp"

#include <stdexcept>

namespace specdiff {

FilterMask lowpass_mask(std::size_t num_modes, std::size_t cutoff) {
  if (cutoff > num_modes)
    throw std::invalid_argument("lowpass_mask: cutoff exceeds the mode count");
  FilterMask mask;
  mask.gains.assign(num_modes + 1, 0.0);
  for (std::size_t k = 0; k <= cutoff; ++k) mask.gains[k] = 1.0;
  return mask;
}

std::vector<cplx> apply_mask(std::vector<cplx> spectrum, const FilterMask& mask) {
  const std::size_t m = spectrum.size();
  if (mask.gains.size() != m / 2 + 1)
    throw std::invalid_argument("apply_mask: mask length must be floor(M/2)+1");
  spectrum[0] *= mask.gains[0];
  for (std::size_t k = 1; 2 * k < m; ++k) {
    spectrum[k] *= mask.gains[k];
    spectrum[m - k] *= mask.gains[k];
  }
  if (m % 2 == 0 && m >= 2) spectrum[m / 2] *= mask.gains[m / 2];
  return spectrum;
}

}  // namespace specdiff
