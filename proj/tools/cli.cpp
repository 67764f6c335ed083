#include "cli.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreath_id/geometry.hpp"
#include "wreath_id/identity.hpp"
#include "wreath_id/wreath.hpp"

namespace wreath_id::cli {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

EnumerationBudget budget_of(const RunConfig& config) {
  return EnumerationBudget{config.budget};
}

std::string join(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string braced(const std::vector<int>& xs) { return "{" + join(xs, ",") + "}"; }

int require_k(const RunConfig& config) {
  if (!config.k) throw UsageError("--k is required for this command");
  return *config.k;
}

void write_reports(const std::vector<VerificationReport>& reports,
                   Format format, std::ostream& out) {
  if (format == Format::kJson) {
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(r.to_json());
    out << doc.dump(2) << "\n";
    return;
  }
  out << "claim\tstatus\telapsed_ms\tparams\tcounterexample\n";
  for (const auto& r : reports) {
    const json j = r.to_json();
    out << r.claim() << '\t' << j["status"].get<std::string>() << '\t'
        << j["elapsed_ms"].dump() << '\t' << r.params().dump() << '\t'
        << j["counterexample"].dump() << "\n";
  }
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const int r = config.r;
  const int n = config.n;
  const int cap = config.effective_t_cap();
  const EnumerationBudget budget = budget_of(config);
  budget.require(group_order(r, n), "Z_" + std::to_string(r) + " wr S_" + std::to_string(n));

  std::vector<VerificationReport> reports;
  if (config.all_steps) {
    reports.push_back(verify_lemma_same_support(r, n, cap, budget));
    // The two-color vectors (1^l, 0^{n-l}) live in Z_r^n only when r >= 2.
    const int max_l = r >= 2 ? n : 0;
    for (int l = 0; l <= max_l; ++l) {
      reports.push_back(descent_shift_check(l, n));
      reports.push_back(verify_composition_bijection(l, n, cap));
      reports.push_back(verify_prop_few_colors(l, n, cap, budget));
    }
    reports.push_back(verify_omega_pairs(r, n, RearrangementPairs::kSampled, budget));
    for (const auto& eps : all_epsilon_vectors(r, n, budget)) {
      reports.push_back(verify_corollary(eps, r, cap, budget));
    }
    reports.push_back(verify_regrouping(r, n, cap, budget));
  }
  reports.push_back(verify_theorem(r, n, cap, budget));

  write_reports(reports, config.format, out);
  for (const auto& rep : reports) {
    if (!rep.passed()) return kClaimFailed;
  }
  return kPass;
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  std::optional<EpsilonVector> filter;
  if (config.filter_eps) {
    if (static_cast<int>(config.filter_eps->size()) != config.n) {
      throw UsageError("--filter-eps needs exactly n colors");
    }
    filter = EpsilonVector(*config.filter_eps);
    filter->require_colors_below(config.r);
  }

  json rows = json::array();
  if (config.format == Format::kTsv) out << "window\tdes_set\tmaj\tdes\tcol\n";
  for_each_group_element(
      config.r, config.n, budget_of(config), [&](const ColoredPermutation& w) {
        if (filter && w.letter_colors() != *filter) return;
        const DescentSet d = descent_set(w);
        const Statistics s = statistics(w);
        if (config.format == Format::kTsv) {
          out << format_window(w) << '\t' << braced(d) << '\t' << s.maj << '\t'
              << s.des << '\t' << s.col << "\n";
        } else {
          rows.push_back({{"window", format_window(w)},
                          {"des_set", d},
                          {"maj", s.maj},
                          {"des", s.des},
                          {"col", s.col}});
        }
      });
  if (config.format == Format::kJson) out << rows.dump(2) << "\n";
  return kPass;
}

int cmd_figure(const RunConfig& config, std::ostream& out) {
  const int k = require_k(config);
  if (config.n != 2) throw UsageError("figure supports --n 2 only");
  const json grid = figure_grid(config.r, config.n, k, budget_of(config));
  if (config.format == Format::kJson) {
    out << grid.dump(2) << "\n";
  } else {
    out << "v1\tv2\tlabel\n";
    for (const auto& cell : grid) {
      out << cell["v"][0] << '\t' << cell["v"][1] << '\t'
          << cell["label"].get<std::string>() << "\n";
    }
  }
  return kPass;
}

int cmd_decompose(const RunConfig& config, std::ostream& out) {
  const int k = require_k(config);
  if (k < 0) throw UsageError("--k must be nonnegative");
  const EnumerationBudget budget = budget_of(config);
  const int r = config.r;
  const int n = config.n;

  json cells = json::array();
  std::set<std::vector<int>> seen;
  std::size_t total = 0;
  bool disjoint = true;
  for (const auto& eps : all_epsilon_vectors(r, n, budget)) {
    json points = json::array();
    for (const LatticePoint& p : enumerate_slice(CubeSliceSpec{eps, k, r}, budget)) {
      points.push_back(p.v());
      disjoint = seen.insert(p.v()).second && disjoint;
      ++total;
    }
    cells.push_back({{"eps", eps.colors()}, {"count", points.size()}, {"points", points}});
  }
  const std::uint64_t full = saturating_pow(static_cast<std::uint64_t>(k) * r + 1, n);
  const bool covers = disjoint && total == full;

  if (config.format == Format::kJson) {
    out << json{{"r", r}, {"n", n}, {"k", k}, {"cells", cells},
                {"total", total}, {"slice_size", full}, {"partition", covers}}
               .dump(2)
        << "\n";
  } else {
    out << "eps\tcount\tpoints\n";
    for (const auto& cell : cells) {
      std::string pts;
      for (const auto& p : cell["points"]) {
        if (!pts.empty()) pts += ' ';
        pts += "(" + join(p.get<std::vector<int>>(), ",") + ")";
      }
      out << "(" << join(cell["eps"].get<std::vector<int>>(), ",") << ")\t"
          << cell["count"] << '\t' << pts << "\n";
    }
  }
  return covers ? kPass : kClaimFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of a colored-permutation generating function identity"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string out_path;
  std::vector<int> filter;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", config.r, "number of colors")->check(CLI::PositiveNumber);
    sub->add_option("--n", config.n, "permutation size")->check(CLI::PositiveNumber);
    sub->add_option("--budget", config.budget, "max enumerated objects")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", out_path, "write output to PATH instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the identity exactly");
  add_common(verify);
  verify->add_option("--t-cap", config.t_cap, "truncation degree in t (default n + 3)")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--all-steps", config.all_steps, "also check every intermediate claim");

  CLI::App* table = app.add_subcommand("table", "descent statistics of every element");
  add_common(table);
  table->add_option("--filter-eps", filter, "letter colors c1,c2,... (restrict to G_eps)")
      ->delimiter(',');

  CLI::App* figure = app.add_subcommand("figure", "monomial grid of a height-k slice");
  add_common(figure);
  figure->add_option("--k", config.k, "height")->required()->check(CLI::NonNegativeNumber);

  CLI::App* decompose = app.add_subcommand("decompose", "cube decomposition of a slice");
  add_common(decompose);
  decompose->add_option("--k", config.k, "height")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  config.format = format == "tsv" ? Format::kTsv : Format::kJson;
  if (!out_path.empty()) config.out_path = out_path;
  if (!filter.empty()) config.filter_eps = filter;

  std::ostringstream buffer;
  int code = kPass;
  try {
    if (verify->parsed()) {
      code = cmd_verify(config, buffer);
    } else if (table->parsed()) {
      code = cmd_table(config, buffer);
    } else if (figure->parsed()) {
      code = cmd_figure(config, buffer);
    } else {
      code = cmd_decompose(config, buffer);
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetOrOverflow;
  } catch (const CoefficientOverflow& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetOrOverflow;
  } catch (const InternalError& e) {
    err << "error: " << e.what() << "\n";
    return kClaimFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.out_path << " for writing\n";
      return kUsageError;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace wreath_id::cli
