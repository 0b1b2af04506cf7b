#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatwell/potential.hpp"
#include "flatwell/trial_energy.hpp"

namespace flatwell {

/// A table/CLI well selector: a power-law exponent or the literal `squarewell`.
struct WellSpec {
  std::optional<double> exponent;  // nullopt selects the infinite square well

  static WellSpec power(double exponent) { return WellSpec{exponent}; }
  static WellSpec square_well() { return WellSpec{std::nullopt}; }
  /// Throws DomainError for malformed tokens.
  static WellSpec parse(std::string_view token);

  bool is_square_well() const { return !exponent.has_value(); }
  std::string label() const;
  /// Reduced problem at the given mu_tilde (ignored for the square well).
  ReducedProblem reduced(double mu_tilde) const;
};

/// Splits a comma-separated --n-list value.
std::vector<WellSpec> parse_well_list(std::string_view list);

/// One row of the coefficient table. Quantities that do not apply
/// (trial columns of the square well) are NaN; c_known is absent when no value is registered.
struct TableRow {
  WellSpec well;
  double beta;
  double c_trial_gamma;
  double c_trial_quadrature;
  double c_optimized;
  double c_reference;
  std::optional<double> c_known;
  double rel_error_vs_reference;
};

inline constexpr std::string_view kTableHeader =
    "N,beta,C_trial_gamma,C_trial_quadrature,C_optimized,C_reference,C_known,rel_error_vs_reference";

TableRow compute_table_row(const WellSpec& well, double reference_tol);
std::vector<TableRow> compute_table(std::span<const WellSpec> wells, double reference_tol);

struct SweepRow {
  double beta;
  double c;
  double c_over_beta;
};

/// beta_i = from + i * step for all beta_i <= to (plus a 1e-9 step slack).
/// Throws DomainError unless 2 <= from < to and step > 0.
std::vector<SweepRow> sweep_beta(double beta_from, double beta_to, double step);

/// Trial samples span [-L_auto, L_auto] with `points` equally spaced values;
/// reference samples are the interior nodes of a `points`-node grid on the same domain.
WavefunctionSamples wavefunction_report(const WellSpec& well, double mu_tilde, WavefunctionSource source,
                                        std::size_t points);

/// 9 significant digits; NaN renders as an empty field.
std::string format_number(double value);

enum class Format { csv, json };
Format parse_format(std::string_view name);

void write_estimate(std::ostream& out, const EnergyEstimate& e, const WellSpec& well, Format format);
void write_table(std::ostream& out, std::span<const TableRow> rows, Format format);
void write_sweep(std::ostream& out, std::span<const SweepRow> rows, Format format);
void write_wavefunction(std::ostream& out, const WavefunctionSamples& samples);

}  // namespace flatwell
