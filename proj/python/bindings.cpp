#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include <specdiff/chebfourier.hpp>
#include <specdiff/chebyshev.hpp>
#include <specdiff/fourier.hpp>
#include <specdiff/grid.hpp>
#include <specdiff/tensor.hpp>

namespace py = pybind11;
using namespace specdiff;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const DoubleArray& arr) {
  if (arr.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
  const auto view = arr.unchecked<1>();
  std::vector<double> out(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t i = 0; i < view.shape(0); ++i) out[std::size_t(i)] = view(i);
  return out;
}

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(py::ssize_t(v.size()));
  auto view = out.mutable_unchecked<1>();
  for (std::size_t i = 0; i < v.size(); ++i) view(py::ssize_t(i)) = v[i];
  return out;
}

std::optional<FilterMask> mask_from_cutoff(std::optional<std::size_t> cutoff, GridKind kind,
                                           std::size_t count) {
  if (!cutoff) return std::nullopt;
  const std::size_t num_modes =
      kind == GridKind::PeriodicEquispaced ? count / 2 : count - 1;
  return lowpass_mask(num_modes, *cutoff);
}

GridKind parse_method(const std::string& method) {
  if (method == "fourier") return GridKind::PeriodicEquispaced;
  if (method == "cheb" || method == "chebyshev") return GridKind::ChebyshevCosine;
  throw std::invalid_argument("method must be 'fourier' or 'cheb'");
}

py::array_t<double> py_fourier_derivative(const DoubleArray& y, double a, double b,
                                          unsigned order,
                                          std::optional<std::size_t> filter_cutoff) {
  const auto samples = to_vector(y);
  const GridSpec grid{GridKind::PeriodicEquispaced, a, b, samples.size()};
  const auto mask = mask_from_cutoff(filter_cutoff, grid.kind, samples.size());
  return to_array(fourier_derivative(std::span<const double>(samples), grid, order, mask));
}

py::array_t<double> py_cheb_derivative(const DoubleArray& y, double a, double b,
                                       unsigned order,
                                       std::optional<std::size_t> filter_cutoff) {
  const auto samples = to_vector(y);
  const GridSpec grid{GridKind::ChebyshevCosine, a, b, samples.size()};
  const auto mask = mask_from_cutoff(filter_cutoff, grid.kind, samples.size());
  return to_array(cheb_derivative(std::span<const double>(samples), grid, order, mask));
}

py::array_t<double> py_partial_derivative(const DoubleArray& field, std::size_t axis,
                                          unsigned order, const std::string& method,
                                          double a, double b,
                                          std::optional<std::size_t> filter_cutoff) {
  std::vector<std::size_t> shape(std::size_t(field.ndim()));
  std::size_t total = 1;
  for (py::ssize_t d = 0; d < field.ndim(); ++d) {
    shape[std::size_t(d)] = std::size_t(field.shape(d));
    total *= shape[std::size_t(d)];
  }
  std::vector<double> data(total);
  const double* raw = field.data();
  std::copy(raw, raw + total, data.begin());

  const GridKind kind = parse_method(method);
  if (axis >= shape.size()) throw std::invalid_argument("axis out of range");
  const GridSpec grid{kind, a, b, shape[axis]};
  const auto mask = mask_from_cutoff(filter_cutoff, kind, shape[axis]);

  const auto tensor = RealTensor(shape, std::move(data)).with_grid(axis, grid);
  const auto result = partial_derivative<double>(
      tensor, axis, order,
      kind == GridKind::PeriodicEquispaced ? DerivMethod::Fourier : DerivMethod::Chebyshev,
      mask);

  std::vector<py::ssize_t> py_shape(shape.begin(), shape.end());
  py::array_t<double> out(py_shape);
  std::copy(result.data().begin(), result.data().end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_specdiff, m) {
  m.doc() = "Spectral derivatives of smooth sampled signals: Fourier basis for "
            "periodic data, Chebyshev basis for aperiodic data.";

  m.def("fourier_points", [](std::size_t count, double a, double b) {
          return to_array(fourier_points(count, a, b));
        },
        py::arg("m"), py::arg("a") = 0.0, py::arg("b") = 6.283185307179586,
        "Equispaced sample locations on [a, b), endpoint excluded.");

  m.def("chebyshev_points", [](std::size_t order, double a, double b) {
          return to_array(chebyshev_points(order, a, b));
        },
        py::arg("n"), py::arg("a") = -1.0, py::arg("b") = 1.0,
        "Cosine-spaced sample locations on [a, b], descending; N+1 points.");

  m.def("fourier_derivative", &py_fourier_derivative, py::arg("y"), py::arg("a") = 0.0,
        py::arg("b") = 6.283185307179586, py::arg("order") = 1,
        py::arg("filter_cutoff") = py::none(),
        "Spectral derivative of a periodic signal sampled on fourier_points(len(y), a, b). "
        "order=0 applies the low-pass filter only.");

  m.def("cheb_derivative", &py_cheb_derivative, py::arg("y"), py::arg("a") = -1.0,
        py::arg("b") = 1.0, py::arg("order") = 1, py::arg("filter_cutoff") = py::none(),
        "Spectral derivative of a signal sampled on chebyshev_points(len(y)-1, a, b).");

  m.def("cheb_derivative_via_theta", [](const DoubleArray& y, unsigned order) {
          return to_array(cheb_derivative_via_theta(to_vector(y), order));
        },
        py::arg("y"), py::arg("order") = 1,
        "Reference Chebyshev derivative on the canonical [-1, 1] grid via the "
        "theta-domain route with L'Hopital endpoint limits.");

  m.def("cheb_coefficients", [](const DoubleArray& y) {
          return to_array(cheb_coefficients(to_vector(y)));
        },
        py::arg("y"), "Chebyshev series coefficients of cosine-grid samples.");

  m.def("cheb_series_derivative", [](const DoubleArray& a) {
          return to_array(cheb_series_derivative(to_vector(a)));
        },
        py::arg("a"), "Series coefficients of the derivative, same length, top entry zero.");

  m.def("partial_derivative", &py_partial_derivative, py::arg("field"), py::arg("axis"),
        py::arg("order") = 1, py::arg("method") = "fourier", py::arg("a") = 0.0,
        py::arg("b") = 6.283185307179586, py::arg("filter_cutoff") = py::none(),
        "Derivative of one axis of a multidimensional field; the grid on that axis "
        "spans [a, b).");

  m.def("factor_table", &format_factor_table, py::arg("order"),
        "Chain-rule factor pyramid as exact fractions (text).");

  m.def("endpoint_weights", &format_endpoint_weights, py::arg("order"),
        "L'Hopital endpoint weights as exact fractions (text).");
}
