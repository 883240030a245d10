// Command-line front end: win-probability tables, reach-probability table,
// parameter sweeps, the verification suite, and Monte Carlo simulation.
#include <CLI11.hpp>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <vector>

#include "shootout/analysis.hpp"
#include "shootout/engine.hpp"
#include "shootout/monte_carlo.hpp"
#include "shootout/text.hpp"

namespace {

using namespace shootout;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidArguments = 2;

PressureModelId require_model(const std::string& text) {
  if (auto m = parse_model(text)) return *m;
  throw std::invalid_argument("unknown model '" + text + "' (use m1|m2|m3)");
}

MechanismId require_mechanism(const std::string& text) {
  if (auto m = parse_mechanism(text)) return *m;
  throw std::invalid_argument(
      "unknown mechanism '" + text +
      "' (use standard|alternating|double-alternating|catch-up|"
      "adjusted-catch-up|behind-first|adjusted-behind-first)");
}

Params<rational> require_params(const std::string& p_text,
                                const std::string& q_text) {
  return Params<rational>(parse_probability(p_text), parse_probability(q_text));
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

void print_matrix(const std::string& title,
                  const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& col_labels,
                  const std::vector<std::vector<std::string>>& cells,
                  const std::string& format) {
  if (format == "csv") {
    std::cout << "mechanism";
    for (const auto& c : col_labels) std::cout << ',' << c;
    std::cout << '\n';
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
      std::cout << row_labels[r];
      for (const auto& cell : cells[r]) std::cout << ',' << cell;
      std::cout << '\n';
    }
    return;
  }
  std::cout << title << '\n';
  std::size_t label_width = 9;
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  std::size_t cell_width = 1;
  for (const auto& row : cells)
    for (const auto& cell : row) cell_width = std::max(cell_width, cell.size());
  for (const auto& c : col_labels) cell_width = std::max(cell_width, c.size());
  std::cout << std::left << std::setw(static_cast<int>(label_width))
            << "Mechanism";
  for (const auto& c : col_labels)
    std::cout << "  " << std::right << std::setw(static_cast<int>(cell_width))
              << c;
  std::cout << '\n';
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    std::cout << std::left << std::setw(static_cast<int>(label_width))
              << row_labels[r];
    for (const auto& cell : cells[r])
      std::cout << "  " << std::right << std::setw(static_cast<int>(cell_width))
                << cell;
    std::cout << '\n';
  }
}

int cmd_table2(const std::string& model_text, const std::string& p_text,
               const std::string& q_text, int rounds_max, int digits,
               const std::string& format) {
  const PressureModelId model = require_model(model_text);
  const auto prm = require_params(p_text, q_text);
  const auto rows =
      table2<rational>(model, prm, rounds_max, EngineMode::DifferenceDp);
  std::vector<std::string> row_labels, col_labels;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < kAllMechanisms.size(); ++i) {
    row_labels.push_back(mechanism_label(kAllMechanisms[i]));
    std::vector<std::string> row;
    for (const rational& v : rows[i]) row.push_back(format_fixed(v, digits));
    cells.push_back(std::move(row));
  }
  for (int n = 1; n <= rounds_max; ++n) col_labels.push_back(std::to_string(n));
  print_matrix("Probability that A wins, model " +
                   std::string(model_label(model)) + " (p = " + p_text +
                   ", q = " + q_text + ")",
               row_labels, col_labels, cells, format);
  return 0;
}

int cmd_table3(const std::string& p_text, const std::string& q_text, int digits,
               const std::string& format) {
  const auto prm = require_params(p_text, q_text);
  // The adjustment leaves the regular phase untouched, so the adjusted
  // variants share their base rule's row.
  const std::vector<std::pair<std::string, MechanismId>> rows = {
      {"ABAB", MechanismId::Standard},
      {"ABBA", MechanismId::Alternating},
      {"ABBA|BAAB", MechanismId::DoubleAlternating},
      {"(Adjusted) Catch-up", MechanismId::CatchUp},
      {"(Adjusted) Behind-first", MechanismId::BehindFirst},
  };
  std::vector<std::string> row_labels, col_labels;
  std::vector<std::vector<std::string>> cells;
  for (PressureModelId model : kAllModels) col_labels.push_back(model_label(model));
  for (const auto& [label, mech] : rows) {
    row_labels.push_back(label);
    std::vector<std::string> row;
    for (PressureModelId model : kAllModels) {
      const rational reach =
          regular_phase_distribution(mech, model, prm, 5,
                                     EngineMode::DifferenceDp)
              .tie_total();
      row.push_back(format_fixed(reach, digits));
    }
    cells.push_back(std::move(row));
  }
  print_matrix("Probability of reaching sudden death (p = " + p_text +
                   ", q = " + q_text + ", 5 rounds)",
               row_labels, col_labels, cells, format);
  return 0;
}

int cmd_sweep(const std::string& model_text, const std::string& mech_text,
              const std::string& p_text, const std::string& qmin_text,
              const std::string& qmax_text, const std::string& qstep_text,
              int rounds, int digits) {
  const PressureModelId model = require_model(model_text);
  std::vector<MechanismId> mechs;
  for (const std::string& m : split_csv(mech_text))
    mechs.push_back(require_mechanism(m));
  const rational p = parse_probability(p_text);
  const rational qmin = parse_probability(qmin_text);
  const rational qmax = parse_probability(qmax_text);
  const rational qstep = parse_probability(qstep_text);
  if (qstep <= 0) throw std::invalid_argument("q-step must be positive");
  if (qmax > p) throw std::invalid_argument("q-max exceeds p");
  const bool multi = mechs.size() > 1;
  std::cout << (multi ? "mechanism,p,q,win_probability\n"
                      : "p,q,win_probability\n");
  for (MechanismId mech : mechs) {
    for (rational q = qmin; q <= qmax; q += qstep) {
      const Params<double> prm(to_double(p), to_double(q));
      const double win =
          total_win_probability(mech, model, prm, rounds,
                                EngineMode::DifferenceDp)
              .a_wins_total;
      if (multi) std::cout << mechanism_label(mech) << ',';
      std::cout << format_sig(to_double(p), digits) << ','
                << format_sig(to_double(q), digits) << ','
                << format_sig(win, digits) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const std::string& grid_name) {
  const std::vector<GridPoint> grid =
      grid_name == "fast" ? fast_grid() : default_grid();
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<PropositionReport> reports;
  reports.push_back(check_catchup_equals_behindfirst_m3(grid));
  reports.push_back(check_reach_invariance_m3(grid));
  reports.push_back(check_alternating_fairer(grid));
  reports.push_back(check_abab_m3_round_invariance(
      Params<double>(0.75, 2.0 / 3.0), 1, 8));
  reports.push_back(check_strategy_proofness(grid));
  bool all_ok = true;
  for (const PropositionReport& rep : reports) {
    all_ok = all_ok && rep.holds;
    std::cout << (rep.holds ? "[PASS] " : "[FAIL] ") << rep.id
              << "  max discrepancy " << format_sig(rep.max_discrepancy, 3);
    if (!rep.holds) std::cout << "  witness: " << rep.witness;
    std::cout << '\n';
  }
  const std::uint64_t trials = grid_name == "fast" ? 100'000 : 200'000;
  const auto checks =
      monte_carlo_crosscheck(Params<double>(0.75, 2.0 / 3.0), 5, trials, 20200923);
  bool mc_ok = true;
  for (const McCheck& c : checks) {
    if (c.ok) continue;
    mc_ok = false;
    std::cout << "[FAIL] MonteCarlo " << mechanism_label(c.mech) << '/'
              << model_label(c.model) << " exact " << format_sig(c.exact, 15)
              << " estimate " << format_sig(c.estimate, 15) << " se "
              << format_sig(c.std_error, 3) << '\n';
  }
  if (mc_ok)
    std::cout << "[PASS] MonteCarlo cross-check (" << checks.size()
              << " cells, " << trials << " trials each)\n";
  all_ok = all_ok && mc_ok;
  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  std::cout << (all_ok ? "verification passed" : "verification FAILED") << " in "
            << dt.count() << " ms\n";
  return all_ok ? 0 : kExitVerificationFailure;
}

int cmd_simulate(const std::string& mech_text, const std::string& model_text,
                 const std::string& p_text, const std::string& q_text,
                 int rounds, std::uint64_t trials, std::uint64_t seed,
                 int max_sd_rounds, const std::string& format) {
  const auto prm_exact = require_params(p_text, q_text);
  const SimConfig cfg{require_mechanism(mech_text), require_model(model_text),
                      Params<double>(to_double(prm_exact.p),
                                     to_double(prm_exact.q)),
                      rounds, trials, seed, max_sd_rounds};
  const SimResult res = estimate_win_probability(cfg);
  if (format == "csv") {
    std::cout << "estimate,std_error,a_wins,b_wins,unresolved\n"
              << format_sig(res.estimate, 15) << ','
              << format_sig(res.std_error, 6) << ',' << res.a_wins << ','
              << res.b_wins << ',' << res.unresolved << '\n';
  } else {
    std::cout << "estimate   " << format_sig(res.estimate, 15) << '\n'
              << "std_error  " << format_sig(res.std_error, 6) << '\n'
              << "a_wins     " << res.a_wins << '\n'
              << "b_wins     " << res.b_wins << '\n'
              << "unresolved " << res.unresolved << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact win-probability analysis of penalty shootout mechanisms"};
  app.require_subcommand(1);

  std::string model = "m1", mech = "alternating", p = "3/4", q = "2/3";
  std::string qmin = "1/2", qmax = "2/3", qstep = "1/100";
  std::string format = "pretty", grid = "default";
  int rounds_max = 8, rounds = 5, digits_table = 3, digits_sweep = 15;
  int max_sd_rounds = 1000;
  std::uint64_t trials = 1'000'000, seed = 0;

  auto* t2 = app.add_subcommand("table2", "A's win probability per mechanism and round count");
  t2->add_option("--model", model, "m1|m2|m3");
  t2->add_option("--p", p, "first/advantaged scoring probability (accepts 2/3)");
  t2->add_option("--q", q, "second/disadvantaged scoring probability");
  t2->add_option("--rounds-max", rounds_max, "largest regular-phase length")
      ->check(CLI::Range(1, 16));
  t2->add_option("--digits", digits_table, "decimals per cell");
  t2->add_option("--format", format)->check(CLI::IsMember({"pretty", "csv"}));

  auto* t3 = app.add_subcommand("table3", "probability of reaching sudden death (5 rounds)");
  t3->add_option("--p", p);
  t3->add_option("--q", q);
  t3->add_option("--digits", digits_table);
  t3->add_option("--format", format)->check(CLI::IsMember({"pretty", "csv"}));

  auto* sw = app.add_subcommand("sweep", "CSV sweep of the win probability over q");
  sw->add_option("--model", model, "m1|m2|m3");
  sw->add_option("--mechanism", mech, "mechanism name, or a comma-separated list");
  sw->add_option("--p", p);
  sw->add_option("--q-min", qmin);
  sw->add_option("--q-max", qmax);
  sw->add_option("--q-step", qstep);
  sw->add_option("--rounds", rounds)->check(CLI::Range(1, 16));
  sw->add_option("--digits", digits_sweep, "significant digits");

  auto* vf = app.add_subcommand("verify", "run the proposition and Monte Carlo checks");
  vf->add_option("--grid", grid)->check(CLI::IsMember({"default", "fast"}));

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of A's win probability");
  sim->add_option("--mechanism", mech);
  sim->add_option("--model", model);
  sim->add_option("--p", p);
  sim->add_option("--q", q);
  sim->add_option("--rounds", rounds)->check(CLI::Range(1, 16));
  sim->add_option("--trials", trials);
  sim->add_option("--seed", seed);
  sim->add_option("--max-sd-rounds", max_sd_rounds)->check(CLI::Range(1, 1000000));
  sim->add_option("--format", format)->check(CLI::IsMember({"text", "pretty", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalidArguments;
  }

  try {
    if (t2->parsed())
      return cmd_table2(model, p, q, rounds_max, digits_table, format);
    if (t3->parsed()) return cmd_table3(p, q, digits_table, format);
    if (sw->parsed())
      return cmd_sweep(model, mech, p, qmin, qmax, qstep, rounds, digits_sweep);
    if (vf->parsed()) return cmd_verify(grid);
    if (sim->parsed())
      return cmd_simulate(mech, model, p, q, rounds, trials, seed,
                          max_sd_rounds, format);
  } catch (const shootout::all_unresolved& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const shootout::degenerate_parameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  return 0;
}
