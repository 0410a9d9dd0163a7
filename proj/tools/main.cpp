// specdiff: spectral derivatives of CSV-borne signals.
//
// Exit codes: 0 success, 2 bad flags or invalid sampling, 3 parse failure,
// 4 numeric contamination.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <specdiff/chebyshev.hpp>
#include <specdiff/errors.hpp>
#include <specdiff/fourier.hpp>
#include <specdiff/grid.hpp>
#include <specdiff/tensor.hpp>

#include "csv.hpp"

namespace {

using namespace specdiff;
using cli::CsvTable;

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitContamination = 4;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CsvTable read_input(const std::string& path) {
  if (path == "-") return cli::read_csv(std::cin);
  std::ifstream in(path);
  if (!in) throw cli::csv_parse_error("cannot open input file: " + path);
  return cli::read_csv(in);
}

void write_output(const std::string& path, const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& columns) {
  if (path.empty()) {
    cli::write_csv(std::cout, header, columns);
    return;
  }
  std::ofstream out(path);
  if (!out) throw usage_error("cannot open output file: " + path);
  cli::write_csv(out, header, columns);
}

GridKind kind_of(const std::string& method) {
  return method == "fourier" ? GridKind::PeriodicEquispaced : GridKind::ChebyshevCosine;
}

DerivMethod method_of(const std::string& method) {
  return method == "fourier" ? DerivMethod::Fourier : DerivMethod::Chebyshev;
}

std::optional<FilterMask> make_mask(std::int64_t cutoff, GridKind kind, std::size_t count) {
  if (cutoff < 0) return std::nullopt;
  const std::size_t num_modes = kind == GridKind::PeriodicEquispaced ? count / 2 : count - 1;
  if (std::size_t(cutoff) > num_modes)
    throw usage_error("--filter-cutoff " + std::to_string(cutoff) + " exceeds the top mode " +
                      std::to_string(num_modes));
  return lowpass_mask(num_modes, std::size_t(cutoff));
}

struct DerivOpts {
  std::string input = "-";
  std::string method;
  unsigned order = 1;
  std::size_t axis = 0;
  std::int64_t cutoff = -1;
  std::vector<double> a, b;
  bool matrix = false;
  std::string t0_path, t1_path;
  std::string output;
};

// Per-axis interval from repeated --a/--b: one pair applies to both axes,
// two pairs are axis 0 then axis 1.
std::pair<double, double> interval_for_axis(const DerivOpts& opts, std::size_t axis) {
  if (opts.a.empty() || opts.b.empty())
    throw usage_error("matrix mode needs --a/--b for both axes (or --t0/--t1 grids)");
  const double a = opts.a.size() == 1 ? opts.a[0] : opts.a.at(axis);
  const double b = opts.b.size() == 1 ? opts.b[0] : opts.b.at(axis);
  return {a, b};
}

GridSpec matrix_axis_grid(const DerivOpts& opts, std::size_t axis, std::size_t count,
                          GridKind kind) {
  const std::string& sidecar = axis == 0 ? opts.t0_path : opts.t1_path;
  if (!sidecar.empty()) {
    const auto table = read_input(sidecar);
    if (table.cols() != 1)
      throw usage_error("sidecar grid file must hold a single column: " + sidecar);
    const auto grid = infer_grid(table.columns[0], kind);
    if (grid.count != count)
      throw usage_error("sidecar grid length does not match the field on axis " +
                        std::to_string(axis));
    return grid;
  }
  const auto [a, b] = interval_for_axis(opts, axis);
  if (!(b > a)) throw usage_error("require b > a on axis " + std::to_string(axis));
  return {kind, a, b, count};
}

int cmd_deriv(const DerivOpts& opts) {
  const auto table = read_input(opts.input);
  const GridKind kind = kind_of(opts.method);

  if (opts.matrix) {
    if (opts.axis > 1) throw usage_error("--axis must be 0 or 1 in matrix mode");
    const std::size_t rows = table.rows();
    const std::size_t cols = table.cols();
    std::vector<double> data(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) data[i * cols + j] = table.columns[j][i];

    auto field = RealTensor({rows, cols}, std::move(data))
                     .with_grid(0, matrix_axis_grid(opts, 0, rows, kind))
                     .with_grid(1, matrix_axis_grid(opts, 1, cols, kind));
    const auto mask = make_mask(opts.cutoff, kind, opts.axis == 0 ? rows : cols);
    const auto result =
        partial_derivative<double>(field, opts.axis, opts.order, method_of(opts.method), mask);

    std::vector<std::vector<double>> out(cols, std::vector<double>(rows));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out[j][i] = result.data()[i * cols + j];
    write_output(opts.output, table.header, out);
    return 0;
  }

  std::size_t first_signal = 0;
  GridSpec grid{kind, 0.0, 1.0, table.rows()};
  if (table.cols() >= 2) {
    grid = infer_grid(table.columns[0], kind);
    first_signal = 1;
  } else {
    if (opts.a.size() != 1 || opts.b.size() != 1)
      throw usage_error("input has no t column; pass --a and --b");
    grid = {kind, opts.a[0], opts.b[0], table.rows()};
    if (!(grid.b > grid.a)) throw usage_error("require b > a");
  }

  const auto mask = make_mask(opts.cutoff, kind, table.rows());
  std::vector<std::vector<double>> out;
  if (first_signal == 1) out.push_back(table.columns[0]);
  for (std::size_t c = first_signal; c < table.cols(); ++c) {
    const auto& y = table.columns[c];
    out.push_back(kind == GridKind::PeriodicEquispaced
                      ? fourier_derivative(std::span<const double>(y), grid, opts.order, mask)
                      : cheb_derivative(std::span<const double>(y), grid, opts.order, mask));
  }
  write_output(opts.output, table.header, out);
  return 0;
}

struct SpectrumOpts {
  std::string input = "-";
  std::string method;
  std::vector<double> a, b;
  std::string output;
};

int cmd_spectrum(const SpectrumOpts& opts) {
  const auto table = read_input(opts.input);
  const GridKind kind = kind_of(opts.method);

  std::size_t first_signal = 0;
  if (table.cols() >= 2) {
    infer_grid(table.columns[0], kind);  // same validation contract as deriv
    first_signal = 1;
  } else if (opts.a.size() != 1 || opts.b.size() != 1) {
    throw usage_error("input has no t column; pass --a and --b");
  }

  const std::size_t count = table.rows();
  std::vector<std::vector<double>> out;
  if (kind == GridKind::PeriodicEquispaced) {
    const std::size_t top = count / 2;
    out.emplace_back();
    for (std::size_t k = 0; k <= top; ++k) out[0].push_back(double(k));
    for (std::size_t c = first_signal; c < table.cols(); ++c) {
      const auto spectrum =
          dft(std::span<const double>(table.columns[c]), Direction::Forward);
      std::vector<double> re(top + 1), im(top + 1);
      for (std::size_t k = 0; k <= top; ++k) {
        re[k] = spectrum[k].real();
        im[k] = spectrum[k].imag();
      }
      out.push_back(std::move(re));
      out.push_back(std::move(im));
    }
  } else {
    out.emplace_back();
    for (std::size_t k = 0; k < count; ++k) out[0].push_back(double(k));
    for (std::size_t c = first_signal; c < table.cols(); ++c)
      out.push_back(cheb_coefficients(table.columns[c]));
  }
  write_output(opts.output, {}, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral derivatives of smooth sampled signals"};
  app.require_subcommand(1);

  // points
  auto* points = app.add_subcommand("points", "print sample locations for a grid");
  std::string points_kind;
  std::size_t points_m = 0, points_n = 0;
  double points_a = 0.0, points_b = 0.0;
  points->add_option("--kind", points_kind, "grid kind")
      ->required()
      ->check(CLI::IsMember({"fourier", "cheb"}));
  points->add_option("--m", points_m, "sample count M (fourier)");
  points->add_option("--n", points_n, "polynomial order N (cheb; N+1 samples)");
  points->add_option("--a", points_a, "interval start")->required();
  points->add_option("--b", points_b, "interval end")->required();

  // deriv
  auto* deriv = app.add_subcommand("deriv", "differentiate CSV-borne signals");
  DerivOpts dopts;
  deriv->add_option("input", dopts.input, "input CSV path ('-' for stdin)");
  deriv->add_option("--method", dopts.method, "basis")
      ->required()
      ->check(CLI::IsMember({"fourier", "cheb"}));
  deriv->add_option("--order", dopts.order, "derivative order (0 = filter only)");
  deriv->add_option("--axis", dopts.axis, "axis to differentiate (matrix mode)");
  deriv->add_option("--filter-cutoff", dopts.cutoff, "zero modes above this index");
  deriv->add_option("--a", dopts.a, "interval start (repeat per axis in matrix mode)");
  deriv->add_option("--b", dopts.b, "interval end (repeat per axis in matrix mode)");
  deriv->add_flag("--matrix", dopts.matrix, "treat the numeric block as a 2-d field");
  deriv->add_option("--t0", dopts.t0_path, "sidecar CSV with axis-0 sample locations");
  deriv->add_option("--t1", dopts.t1_path, "sidecar CSV with axis-1 sample locations");
  deriv->add_option("--output", dopts.output, "output path (default stdout)");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "print transform-domain coefficients");
  SpectrumOpts sopts;
  spectrum->add_option("input", sopts.input, "input CSV path ('-' for stdin)");
  spectrum->add_option("--method", sopts.method, "basis")
      ->required()
      ->check(CLI::IsMember({"fourier", "cheb"}));
  spectrum->add_option("--a", sopts.a, "interval start");
  spectrum->add_option("--b", sopts.b, "interval end");
  spectrum->add_option("--output", sopts.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (points->parsed()) {
      std::vector<double> t;
      if (points_kind == "fourier") {
        if (points_m == 0) throw usage_error("points --kind fourier needs --m");
        t = fourier_points(points_m, points_a, points_b);
      } else {
        if (points_n == 0) throw usage_error("points --kind cheb needs --n");
        t = chebyshev_points(points_n, points_a, points_b);
      }
      char buf[64];
      for (const double v : t) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        std::cout << buf << "\n";
      }
      return 0;
    }
    if (deriv->parsed()) return cmd_deriv(dopts);
    if (spectrum->parsed()) return cmd_spectrum(sopts);
  } catch (const invalid_sampling& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const numeric_contamination& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContamination;
  } catch (const cli::csv_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
