#ifndef ENTROBOUND_REPORT_HPP
#define ENTROBOUND_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "entrobound/angular.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/maxent_bounds.hpp"
#include "entrobound/states.hpp"

namespace entrobound {

// Everything the bound certification of one (state, chain, lambda) produces.
// bound_improved = bound_baseline + loss, and holds records whether
// slack_improved clears the numerical-noise floor of -1e-9.
struct BoundReport {
  std::string system;
  int d = 0;
  std::vector<int> mu;
  double lambda = 1.0;
  double r2 = 0.0;
  EntropyValue H;
  double bound_baseline = 0.0;
  double bound_improved = 0.0;
  double loss = 0.0;
  double slack_baseline = 0.0;
  double slack_improved = 0.0;
  bool holds = false;
  // Present only when requested: the bound constant, and its variant with
  // the power-term exponent as printed, side by side.
  std::optional<double> bd_value;
  std::optional<double> bd_printed;
};

BoundReport verify(const RadialState& state, const QuantumNumberChain& chain,
                   double lambda, const QuadratureSpec& spec = {},
                   bool paper_exact = false);

// One sweep cell: the inputs, plus either a report or an error message.
struct SweepCell {
  std::string system;
  int d = 0;
  std::vector<int> mu;
  double lambda = 1.0;
  std::optional<BoundReport> report;
  std::string error;
};

struct SweepCase {
  RadialState state;
  QuantumNumberChain chain;
};

// Runs verify over cases x lambdas in input order (cases outer).  Cell
// failures are recorded in place; only empty grids are fatal.
std::vector<SweepCell> sweep(const std::vector<SweepCase>& cases,
                             const std::vector<double>& lambdas,
                             const QuadratureSpec& spec = {},
                             bool paper_exact = false);

// The shipped catalog: oscillator n_r, l <= 2 and hydrogen n <= 3, each with
// the edge chains (l, 0, ..., 0) and (l, l, ..., l), over the given
// dimensions.  Case order is deterministic: systems, then dimensions, then
// quantum numbers ascending.
std::vector<SweepCase> catalog_sweep_cases(
    const std::vector<std::string>& systems, const std::vector<int>& dims);

// Canonical serializations.  Keys and columns appear in the fixed order
// system, d, mu, lambda, r2, H, H_method, H_est_error, bound_baseline,
// bound_improved, loss, slack_baseline, slack_improved, holds, with the two
// optional bound-constant fields appended last.  Floats carry 15 significant
// digits; parsing an emitted report and re-emitting reproduces the bytes.
std::string to_json(const BoundReport& report);
std::string to_json(const std::vector<SweepCell>& cells);
std::string csv_header(bool paper_exact);
std::string to_csv_row(const BoundReport& report);
std::string to_csv(const std::vector<SweepCell>& cells, bool paper_exact);

// Inverse of to_json(BoundReport).
BoundReport report_from_json(const std::string& text);

// 15-significant-digit float rendering used by every emitter.
std::string format_double(double value);

}  // namespace entrobound

#endif
