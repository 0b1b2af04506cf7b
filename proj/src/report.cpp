#include "flatwell/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include <json.hpp>

#include "flatwell/errors.hpp"
#include "flatwell/known_results.hpp"
#include "flatwell/reference_solver.hpp"

namespace flatwell {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::string_view kSquareWellToken = "squarewell";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// JSON numbers carry the same 9 significant digits as the CSV output.
nlohmann::ordered_json json_number(double value) {
  if (std::isnan(value)) return nullptr;
  return std::stod(format_number(value));
}

nlohmann::ordered_json json_well(const WellSpec& well) {
  if (well.is_square_well()) return std::string(kSquareWellToken);
  return json_number(*well.exponent);
}

}  // namespace

WellSpec WellSpec::parse(std::string_view token) {
  token = trim(token);
  if (token == kSquareWellToken) return square_well();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw DomainError("cannot parse well exponent '" + std::string(token) + "'");
  }
  beta_for(value);  // validates N >= 2
  return power(value);
}

std::string WellSpec::label() const {
  return is_square_well() ? std::string(kSquareWellToken) : format_number(*exponent);
}

ReducedProblem WellSpec::reduced(double mu_tilde) const {
  if (is_square_well()) return ReducedProblem::square_well();
  return ReducedProblem::power(mu_tilde, *exponent);
}

std::vector<WellSpec> parse_well_list(std::string_view list) {
  std::vector<WellSpec> wells;
  while (true) {
    const auto comma = list.find(',');
    wells.push_back(WellSpec::parse(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return wells;
}

TableRow compute_table_row(const WellSpec& well, double reference_tol) {
  const ReducedProblem rp = well.reduced(1.0);
  const ReferenceSolution ref = solve_ground_state(rp, reference_tol);
  const auto known = lookup(rp);
  const std::optional<double> c_known = known ? std::optional<double>(known->coefficient_C) : std::nullopt;

  if (well.is_square_well()) {
    // E = C hbar^2 / (m a^2) and E = E_reduced hbar^2 / (2 m a^2).
    return TableRow{well, kNaN, kNaN, kNaN, kNaN, ref.reduced_energy / 2.0, c_known, kNaN};
  }
  const double beta = beta_for(*well.exponent);
  const double factor = reduced_to_coefficient_factor(beta);
  TableRow row{well, beta, coefficient(beta, Backend::gamma), coefficient(beta, Backend::quadrature),
               optimize_alpha(rp, beta).reduced_energy / factor, ref.reduced_energy / factor, c_known, 0.0};
  row.rel_error_vs_reference = relative_error(row.c_trial_gamma, row.c_reference);
  return row;
}

std::vector<TableRow> compute_table(std::span<const WellSpec> wells, double reference_tol) {
  std::vector<TableRow> rows;
  rows.reserve(wells.size());
  for (const WellSpec& w : wells) rows.push_back(compute_table_row(w, reference_tol));
  return rows;
}

std::vector<SweepRow> sweep_beta(double beta_from, double beta_to, double step) {
  if (!std::isfinite(beta_from) || !std::isfinite(beta_to) || !(beta_from >= 2.0) || !(beta_from < beta_to)) {
    throw DomainError("beta sweep needs 2 <= beta-from < beta-to");
  }
  if (!std::isfinite(step) || !(step > 0.0)) throw DomainError("beta sweep needs step > 0");
  const double span = (beta_to - beta_from) / step;
  if (span > 1e7) throw DomainError("beta sweep would produce more than 1e7 rows");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<SweepRow> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double beta = beta_from + static_cast<double>(i) * step;
    const double c = coefficient(beta, Backend::gamma);
    rows.push_back(SweepRow{beta, c, c / beta});
  }
  return rows;
}

WavefunctionSamples wavefunction_report(const WellSpec& well, double mu_tilde, WavefunctionSource source,
                                        std::size_t points) {
  if (points < 16) throw DomainError("wavefunction output needs at least 16 points");
  const ReducedProblem rp = well.reduced(mu_tilde);
  if (source == WavefunctionSource::reference) {
    const double half_width = rp.is_square_well() ? 1.0 : auto_domain(rp, domain_energy_guess(rp));
    return ground_wavefunction(rp, half_width, points);
  }
  if (rp.is_square_well()) throw DomainError("the trial wavefunction is not defined for the infinite square well");
  const double half_width = auto_domain(rp, domain_energy_guess(rp));
  std::vector<double> grid(points);
  const double spacing = 2.0 * half_width / static_cast<double>(points - 1);
  for (std::size_t j = 0; j < points; ++j) grid[j] = -half_width + static_cast<double>(j) * spacing;
  // Exact zero at the centre of odd grids keeps the profile symmetric.
  if (points % 2 == 1) grid[points / 2] = 0.0;
  const TrialParams trial = matched_trial(rp);
  return sample_trial(trial.alpha, trial.beta, rp.length_scale, grid);
}

std::string format_number(double value) {
  if (std::isnan(value)) return {};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

void write_estimate(std::ostream& out, const EnergyEstimate& e, const WellSpec& well, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["N"] = json_well(well);
    j["beta"] = json_number(e.beta);
    j["method"] = std::string(to_string(e.method));
    j["reduced_energy"] = json_number(e.reduced_energy);
    j["physical_energy"] = json_number(e.physical_energy);
    j["coefficient_C"] = json_number(e.coefficient_C);
    j["kinetic_exponent"] = json_number(e.kinetic_exponent);
    j["potential_exponent"] = json_number(e.potential_exponent);
    j["error_bound"] = json_number(e.error_bound);
    out << j.dump(2) << '\n';
    return;
  }
  out << "N,beta,method,reduced_energy,physical_energy,coefficient_C,kinetic_exponent,potential_exponent,"
         "error_bound\n";
  out << well.label() << ',' << format_number(e.beta) << ',' << to_string(e.method) << ','
      << format_number(e.reduced_energy) << ',' << format_number(e.physical_energy) << ','
      << format_number(e.coefficient_C) << ',' << format_number(e.kinetic_exponent) << ','
      << format_number(e.potential_exponent) << ',' << format_number(e.error_bound) << '\n';
}

void write_table(std::ostream& out, std::span<const TableRow> rows, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const TableRow& r : rows) {
      nlohmann::ordered_json j;
      j["N"] = json_well(r.well);
      j["beta"] = json_number(r.beta);
      j["C_trial_gamma"] = json_number(r.c_trial_gamma);
      j["C_trial_quadrature"] = json_number(r.c_trial_quadrature);
      j["C_optimized"] = json_number(r.c_optimized);
      j["C_reference"] = json_number(r.c_reference);
      j["C_known"] = json_number(r.c_known.value_or(kNaN));
      j["rel_error_vs_reference"] = json_number(r.rel_error_vs_reference);
      list.push_back(std::move(j));
    }
    out << list.dump(2) << '\n';
    return;
  }
  out << kTableHeader << '\n';
  for (const TableRow& r : rows) {
    out << r.well.label() << ',' << format_number(r.beta) << ',' << format_number(r.c_trial_gamma) << ','
        << format_number(r.c_trial_quadrature) << ',' << format_number(r.c_optimized) << ','
        << format_number(r.c_reference) << ',' << format_number(r.c_known.value_or(kNaN)) << ','
        << format_number(r.rel_error_vs_reference) << '\n';
  }
}

void write_sweep(std::ostream& out, std::span<const SweepRow> rows, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
      list.push_back({{"beta", json_number(r.beta)}, {"C", json_number(r.c)}, {"C_over_beta", json_number(r.c_over_beta)}});
    }
    out << list.dump(2) << '\n';
    return;
  }
  out << "beta,C,C_over_beta\n";
  for (const SweepRow& r : rows) {
    out << format_number(r.beta) << ',' << format_number(r.c) << ',' << format_number(r.c_over_beta) << '\n';
  }
}

void write_wavefunction(std::ostream& out, const WavefunctionSamples& samples) {
  out << "z,psi\n";
  for (std::size_t i = 0; i < samples.grid.size(); ++i) {
    out << format_number(samples.grid[i]) << ',' << format_number(samples.values[i]) << '\n';
  }
}

}  // namespace flatwell
