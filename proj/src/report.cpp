#include "entrobound/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace entrobound {
namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string mu_json(const std::vector<int>& mu) {
  std::string out = "[";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(mu[i]);
  }
  return out + "]";
}

std::string mu_text(const std::vector<int>& mu) {
  std::string out;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(mu[i]);
  }
  return out;
}

EntropyMethod method_from_string(const std::string& name) {
  if (name == "closed_form") return EntropyMethod::closed_form;
  if (name == "quadrature_1d") return EntropyMethod::quadrature_1d;
  if (name == "quadrature_tensor") return EntropyMethod::quadrature_tensor;
  if (name == "monte_carlo") return EntropyMethod::monte_carlo;
  throw std::invalid_argument("unknown entropy method: " + name);
}

std::string error_cell_json(const SweepCell& cell) {
  return "{\"system\":\"" + json_escape(cell.system) +
         "\",\"d\":" + std::to_string(cell.d) + ",\"mu\":" + mu_json(cell.mu) +
         ",\"lambda\":" + format_double(cell.lambda) + ",\"error\":\"" +
         json_escape(cell.error) + "\"}";
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

BoundReport verify(const RadialState& state, const QuantumNumberChain& chain,
                   double lambda, const QuadratureSpec& spec, bool paper_exact) {
  const RenyiOrder order{lambda, state.d};
  order.validate_bound();
  BoundReport rep;
  rep.system = state.label.text();
  rep.d = state.d;
  rep.mu = chain.mu;
  rep.lambda = lambda;
  rep.r2 = r2_expectation(state, spec);
  rep.H = renyi_total(state, chain, lambda, spec);
  rep.loss = entropy_loss(chain);
  rep.bound_baseline = baseline_renyi_bound(order, rep.r2);
  rep.bound_improved = rep.bound_baseline + rep.loss;
  rep.slack_baseline = rep.bound_baseline - rep.H.value;
  rep.slack_improved = rep.bound_improved - rep.H.value;
  rep.holds = rep.slack_improved >= -1e-9;
  if (paper_exact) {
    rep.bd_value = bd_lambda(order);
    rep.bd_printed = bd_lambda_paper_printed(order);
  }
  return rep;
}

std::vector<SweepCell> sweep(const std::vector<SweepCase>& cases,
                             const std::vector<double>& lambdas,
                             const QuadratureSpec& spec, bool paper_exact) {
  if (cases.empty()) throw std::invalid_argument("sweep: empty case list");
  if (lambdas.empty()) throw std::invalid_argument("sweep: empty lambda grid");
  std::vector<SweepCell> cells;
  cells.reserve(cases.size() * lambdas.size());
  for (const SweepCase& c : cases) {
    for (double lambda : lambdas) {
      SweepCell cell;
      cell.system = c.state.label.text();
      cell.d = c.state.d;
      cell.mu = c.chain.mu;
      cell.lambda = lambda;
      try {
        cell.report = verify(c.state, c.chain, lambda, spec, paper_exact);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::vector<SweepCase> catalog_sweep_cases(
    const std::vector<std::string>& systems, const std::vector<int>& dims) {
  if (systems.empty() || dims.empty())
    throw std::invalid_argument("catalog sweep: empty system or dimension list");
  const auto chains_for = [](int d, int l) {
    std::vector<std::vector<int>> patterns;
    std::vector<int> lowest(d - 1, 0);
    lowest[0] = l;
    patterns.push_back(lowest);
    const std::vector<int> stacked(d - 1, l);
    if (stacked != lowest) patterns.push_back(stacked);
    return patterns;
  };
  std::vector<SweepCase> cases;
  for (const std::string& system : systems) {
    if (system != "oscillator" && system != "hydrogen")
      throw std::invalid_argument("catalog sweep: unknown system '" + system +
                                  "' (expected oscillator or hydrogen)");
    for (int d : dims) {
      if (d < 2)
        throw std::invalid_argument(
            "catalog sweep: requires d >= 2 (no angular chain below d = 2)");
      if (system == "oscillator") {
        for (int n_r = 0; n_r <= 2; ++n_r)
          for (int l = 0; l <= 2; ++l)
            for (const auto& mu : chains_for(d, l))
              cases.push_back({oscillator_state(n_r, l, d),
                               QuantumNumberChain{d, mu}});
      } else {
        for (int n = 1; n <= 3; ++n)
          for (int l = 0; l < n; ++l)
            for (const auto& mu : chains_for(d, l))
              cases.push_back({hydrogen_state(n, l, d),
                               QuantumNumberChain{d, mu}});
      }
    }
  }
  return cases;
}

std::string to_json(const BoundReport& r) {
  std::string out = "{\"system\":\"" + json_escape(r.system) +
                    "\",\"d\":" + std::to_string(r.d) +
                    ",\"mu\":" + mu_json(r.mu) +
                    ",\"lambda\":" + format_double(r.lambda) +
                    ",\"r2\":" + format_double(r.r2) +
                    ",\"H\":" + format_double(r.H.value) +
                    ",\"H_method\":\"" + to_string(r.H.method) +
                    "\",\"H_est_error\":" + format_double(r.H.est_error) +
                    ",\"bound_baseline\":" + format_double(r.bound_baseline) +
                    ",\"bound_improved\":" + format_double(r.bound_improved) +
                    ",\"loss\":" + format_double(r.loss) +
                    ",\"slack_baseline\":" + format_double(r.slack_baseline) +
                    ",\"slack_improved\":" + format_double(r.slack_improved) +
                    ",\"holds\":" + (r.holds ? "true" : "false");
  if (r.bd_value) out += ",\"bd_lambda\":" + format_double(*r.bd_value);
  if (r.bd_printed) out += ",\"bd_lambda_printed\":" + format_double(*r.bd_printed);
  return out + "}";
}

std::string to_json(const std::vector<SweepCell>& cells) {
  std::string out = "[";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out += i ? ",\n " : "\n ";
    out += cells[i].report ? to_json(*cells[i].report) : error_cell_json(cells[i]);
  }
  return out + "\n]";
}

std::string csv_header(bool paper_exact) {
  std::string out =
      "system,d,mu,lambda,r2,H,H_method,H_est_error,bound_baseline,"
      "bound_improved,loss,slack_baseline,slack_improved,holds";
  if (paper_exact) out += ",bd_lambda,bd_lambda_printed";
  return out;
}

std::string to_csv_row(const BoundReport& r) {
  std::string out = r.system + "," + std::to_string(r.d) + "," + mu_text(r.mu) +
                    "," + format_double(r.lambda) + "," + format_double(r.r2) +
                    "," + format_double(r.H.value) + "," + to_string(r.H.method) +
                    "," + format_double(r.H.est_error) + "," +
                    format_double(r.bound_baseline) + "," +
                    format_double(r.bound_improved) + "," +
                    format_double(r.loss) + "," +
                    format_double(r.slack_baseline) + "," +
                    format_double(r.slack_improved) + "," +
                    (r.holds ? "true" : "false");
  if (r.bd_value) out += "," + format_double(*r.bd_value);
  if (r.bd_printed) out += "," + format_double(*r.bd_printed);
  return out;
}

std::string to_csv(const std::vector<SweepCell>& cells, bool paper_exact) {
  std::string out = csv_header(paper_exact) + "\n";
  for (const SweepCell& cell : cells) {
    if (cell.report) {
      out += to_csv_row(*cell.report) + "\n";
    } else {
      out += "# error: system=" + cell.system + " d=" + std::to_string(cell.d) +
             " mu=" + mu_text(cell.mu) + " lambda=" + format_double(cell.lambda) +
             ": " + cell.error + "\n";
    }
  }
  return out;
}

BoundReport report_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  BoundReport r;
  r.system = j.at("system").get<std::string>();
  r.d = j.at("d").get<int>();
  r.mu = j.at("mu").get<std::vector<int>>();
  r.lambda = j.at("lambda").get<double>();
  r.r2 = j.at("r2").get<double>();
  r.H.lambda = r.lambda;
  r.H.value = j.at("H").get<double>();
  r.H.method = method_from_string(j.at("H_method").get<std::string>());
  r.H.est_error = j.at("H_est_error").get<double>();
  r.bound_baseline = j.at("bound_baseline").get<double>();
  r.bound_improved = j.at("bound_improved").get<double>();
  r.loss = j.at("loss").get<double>();
  r.slack_baseline = j.at("slack_baseline").get<double>();
  r.slack_improved = j.at("slack_improved").get<double>();
  r.holds = j.at("holds").get<bool>();
  if (j.contains("bd_lambda")) r.bd_value = j.at("bd_lambda").get<double>();
  if (j.contains("bd_lambda_printed"))
    r.bd_printed = j.at("bd_lambda_printed").get<double>();
  return r;
}

}  // namespace entrobound
