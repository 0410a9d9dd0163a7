#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "specdiff/filter.hpp"
#include "specdiff/grid.hpp"

namespace specdiff {

enum class DerivMethod { Fourier, Chebyshev };

/// Immutable row-major multidimensional array with an optional grid
/// attached per axis. Operations return new tensors.
template <typename T>
class Tensor {
public:
  Tensor(std::vector<std::size_t> shape, std::vector<T> data);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  const std::vector<T>& data() const { return data_; }

  const std::optional<GridSpec>& grid(std::size_t axis) const;
  Tensor with_grid(std::size_t axis, GridSpec grid) const;

private:
  std::vector<std::size_t> shape_;
  std::vector<T> data_;
  std::vector<std::optional<GridSpec>> grids_;
};

using RealTensor = Tensor<double>;
using ComplexTensor = Tensor<std::complex<double>>;

/// Replaces every 1-D fiber along `axis` with op(fiber); op must preserve
/// the fiber length. All other axes are untouched.
template <typename T>
Tensor<T> apply_along_axis(const Tensor<T>& t, std::size_t axis,
                           const std::function<std::vector<T>(const std::vector<T>&)>& op);

/// One spectral derivative along one axis, using the grid attached there.
template <typename T>
Tensor<T> partial_derivative(const Tensor<T>& t, std::size_t axis, unsigned order,
                             DerivMethod method,
                             const std::optional<FilterMask>& mask = std::nullopt);

struct PartialSpec {
  std::size_t axis;
  unsigned order;
  DerivMethod method;
  std::optional<FilterMask> mask;
};

/// Folds partial_derivative over the specs, left to right.
template <typename T>
Tensor<T> mixed_partial(const Tensor<T>& t, const std::vector<PartialSpec>& specs);

}  // namespace specdiff
