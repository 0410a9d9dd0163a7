#include "specdiff/tensor.hpp"

#include <stdexcept>

#include "specdiff/chebyshev.hpp"
#include "specdiff/fourier.hpp"

namespace specdiff {
namespace {

std::size_t checked_product(const std::vector<std::size_t>& shape) {
  if (shape.empty()) throw std::invalid_argument("Tensor: rank must be >= 1");
  std::size_t n = 1;
  for (const std::size_t s : shape) {
    if (s == 0) throw std::invalid_argument("Tensor: zero-length axis");
    n *= s;
  }
  return n;
}

}  // namespace

template <typename T>
Tensor<T>::Tensor(std::vector<std::size_t> shape, std::vector<T> data)
    : shape_(std::move(shape)), data_(std::move(data)), grids_(shape_.size()) {
  if (checked_product(shape_) != data_.size())
    throw std::invalid_argument("Tensor: shape does not match the data length");
}

template <typename T>
const std::optional<GridSpec>& Tensor<T>::grid(std::size_t axis) const {
  if (axis >= rank()) throw std::invalid_argument("Tensor: axis out of range");
  return grids_[axis];
}

template <typename T>
Tensor<T> Tensor<T>::with_grid(std::size_t axis, GridSpec grid) const {
  if (axis >= rank()) throw std::invalid_argument("Tensor: axis out of range");
  if (grid.count != shape_[axis])
    throw std::invalid_argument("Tensor: grid count does not match the axis length");
  Tensor out = *this;
  out.grids_[axis] = grid;
  return out;
}

template <typename T>
Tensor<T> apply_along_axis(const Tensor<T>& t, std::size_t axis,
                           const std::function<std::vector<T>(const std::vector<T>&)>& op) {
  if (axis >= t.rank()) throw std::invalid_argument("apply_along_axis: axis out of range");
  const auto& shape = t.shape();
  const std::size_t len = shape[axis];

  std::size_t stride = 1;
  for (std::size_t d = axis + 1; d < shape.size(); ++d) stride *= shape[d];
  std::size_t outer = 1;
  for (std::size_t d = 0; d < axis; ++d) outer *= shape[d];
  const std::size_t block = stride * len;

  std::vector<T> result(t.data());
  std::vector<T> fiber(len);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < stride; ++i) {
      const std::size_t base = o * block + i;
      for (std::size_t n = 0; n < len; ++n) fiber[n] = t.data()[base + n * stride];
      const auto mapped = op(fiber);
      if (mapped.size() != len)
        throw std::invalid_argument("apply_along_axis: op changed the fiber length");
      for (std::size_t n = 0; n < len; ++n) result[base + n * stride] = mapped[n];
    }
  }
  return Tensor<T>(shape, std::move(result));
}

namespace {

template <typename T>
std::vector<T> fiber_derivative(const std::vector<T>& fiber, const GridSpec& grid,
                                unsigned order, DerivMethod method,
                                const std::optional<FilterMask>& mask) {
  if (method == DerivMethod::Fourier) return fourier_derivative(std::span<const T>(fiber), grid, order, mask);
  return cheb_derivative(std::span<const T>(fiber), grid, order, mask);
}

}  // namespace

template <typename T>
Tensor<T> partial_derivative(const Tensor<T>& t, std::size_t axis, unsigned order,
                             DerivMethod method, const std::optional<FilterMask>& mask) {
  if (axis >= t.rank()) throw std::invalid_argument("partial_derivative: axis out of range");
  const auto& maybe_grid = t.grid(axis);
  if (!maybe_grid) throw std::invalid_argument("partial_derivative: no grid on this axis");
  const GridSpec grid = *maybe_grid;
  const GridKind wanted = method == DerivMethod::Fourier ? GridKind::PeriodicEquispaced
                                                         : GridKind::ChebyshevCosine;
  if (grid.kind != wanted)
    throw std::invalid_argument("partial_derivative: grid kind does not match the method");

  auto deriv = apply_along_axis<T>(t, axis, [&](const std::vector<T>& fiber) {
    return fiber_derivative<T>(fiber, grid, order, method, mask);
  });
  // apply_along_axis drops grid attachments; restore them.
  Tensor<T> out = std::move(deriv);
  for (std::size_t d = 0; d < t.rank(); ++d)
    if (t.grid(d)) out = out.with_grid(d, *t.grid(d));
  return out;
}

template <typename T>
Tensor<T> mixed_partial(const Tensor<T>& t, const std::vector<PartialSpec>& specs) {
  Tensor<T> out = t;
  for (const auto& spec : specs)
    out = partial_derivative(out, spec.axis, spec.order, spec.method, spec.mask);
  return out;
}

template class Tensor<double>;
template class Tensor<std::complex<double>>;

template Tensor<double> apply_along_axis(
    const Tensor<double>&, std::size_t,
    const std::function<std::vector<double>(const std::vector<double>&)>&);
template Tensor<std::complex<double>> apply_along_axis(
    const Tensor<std::complex<double>>&, std::size_t,
    const std::function<std::vector<std::complex<double>>(
        const std::vector<std::complex<double>>&)>&);

template Tensor<double> partial_derivative(const Tensor<double>&, std::size_t, unsigned,
                                           DerivMethod, const std::optional<FilterMask>&);
template Tensor<std::complex<double>> partial_derivative(const Tensor<std::complex<double>>&,
                                                         std::size_t, unsigned, DerivMethod,
                                                         const std::optional<FilterMask>&);

template Tensor<double> mixed_partial(const Tensor<double>&, const std::vector<PartialSpec>&);
template Tensor<std::complex<double>> mixed_partial(const Tensor<std::complex<double>>&,
                                                    const std::vector<PartialSpec>&);

}  // namespace specdiff
