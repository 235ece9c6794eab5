// rowmotion: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "rowmotion/closed_form.hpp"
#include "rowmotion/rsk.hpp"
#include "rowmotion/serialization.hpp"
#include "rowmotion/st_words.hpp"
#include "rowmotion/suite.hpp"

namespace rowmotion::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Labeling load_labeling(const std::string& path, const ToggleAlgebra& alg) {
  Labeling x = labeling_from_json(read_json_file(path));
  x.validate(alg);
  return x;
}

Cell parse_cell(const std::string& text, const Rect& rect) {
  const auto [i, j] = parse_pair(text);
  if (!rect.contains({i, j})) throw UsageError("cell " + text + " is outside the rectangle");
  return {i, j};
}

int emit(const Json& json, bool ok) {
  std::cout << json.dump(2) << '\n';
  return ok ? 0 : 1;
}

int run_orbit(const std::string& labels, int power, const std::optional<std::string>& cell) {
  const auto alg = ToggleAlgebra::birational();
  const Labeling x = load_labeling(labels, alg);
  const ClosedForm closed(x);
  OrbitTable orbit(transfer_inverse(x, alg), alg);
  const Labeling& toggled = orbit.power(power);
  Json out{{"power", power}};
  bool agree = true;
  if (cell) {
    const Cell c = parse_cell(*cell, x.rect());
    const Rational formula = closed.rho_power_any(c, power);
    agree = formula == toggled[c];
    out["cell"] = c.to_string();
    out["closed_form"] = rational_to_json(formula);
    out["toggles"] = rational_to_json(toggled[c]);
  } else {
    const Labeling formula = closed.power(power);
    agree = formula == toggled;
    out["closed_form"] = labeling_to_json(formula);
    out["toggles"] = labeling_to_json(toggled);
  }
  out["agree"] = agree;
  return emit(out, agree);
}

int run_rsk(const std::string& labels, bool tropical, const std::string& ceiling) {
  const ToggleAlgebra alg =
      tropical ? ToggleAlgebra::tropical(Rational::parse(ceiling)) : ToggleAlgebra::birational();
  const Labeling x = load_labeling(labels, alg);
  const RskImage image = birational_rsk(x, alg);
  const bool agree = image == rsk_procedure(x, alg);
  const bool inverts = rsk_inverse(image, alg) == x;
  return emit(Json{{"algebra", alg.name},
                   {"rsk", labeling_to_json(image)},
                   {"procedure_agrees", agree},
                   {"inverse_round_trip", inverts}},
              agree && inverts);
}

int run_stword(const std::string& labels, const std::optional<int>& row,
               const std::optional<int>& col) {
  const Labeling x = load_labeling(labels, ToggleAlgebra::birational());
  if (row && col) throw UsageError("--row and --col are exclusive");
  const Rect& rect = x.rect();
  if (row && (*row < 1 || *row > rect.r)) throw UsageError("--row out of range");
  if (col && (*col < 1 || *col > rect.s)) throw UsageError("--col out of range");
  STWord word;
  if (row) {
    word = generalized_st(x, WordAxis::row(*row));
  } else if (col) {
    word = generalized_st(x, WordAxis::column(*col));
  } else {
    word = birational_st(x);
  }
  return emit(st_word_to_json(word), true);
}

int run_greene(const std::string& labels) {
  const Labeling x = load_labeling(labels, ToggleAlgebra::birational());
  const CheckReport report = greene_check(x);
  return emit(Json{{"rsk", labeling_to_json(birational_rsk(x))},
                   {"report", report_to_json(report)}},
              report.ok());
}

int run_shift(const std::string& labels) {
  const auto alg = ToggleAlgebra::birational();
  const Labeling x = load_labeling(labels, alg);
  const Labeling backward = transfer(rowmotion_inverse(transfer_inverse(x, alg), alg), alg);
  const Labeling forward = transfer(rowmotion(transfer_inverse(x, alg), alg), alg);
  const CheckReport chains = chain_shift_check(x);
  const CheckReport rsk = chain_shift_rsk_check(x);
  const CheckReport words = cyclic_shift_check(x);
  const CheckReport minors = array_shift_check(x);
  Json reports = Json::array();
  for (const auto* r : {&chains, &rsk, &words, &minors}) reports.push_back(report_to_json(*r));
  return emit(Json{{"phi_rho_inverse_phi_inverse", labeling_to_json(backward)},
                   {"phi_rho_phi_inverse", labeling_to_json(forward)},
                   {"reports", reports}},
              chains.ok() && rsk.ok() && words.ok() && minors.ok());
}

int run_profile(const std::string& labels) {
  const Labeling x = load_labeling(labels, ToggleAlgebra::birational());
  return emit(profile_to_json(chain_sum_profile(x)), true);
}

int run_reconstruct(const std::string& sums) {
  const ChainSumProfile profile = profile_from_json(read_json_file(sums));
  return emit(labeling_to_json(reconstruct_from_chain_sums(profile)), true);
}

int run_ideals(int r, int s) {
  const Rect rect = Rect::make(r, s);
  const auto ideals = enumerate_order_ideals(rect);
  std::set<std::uint64_t> seen;
  Json orbits = Json::array();
  for (const OrderIdeal& start : ideals) {
    if (seen.contains(start.cell_set().bits())) continue;
    Json members = Json::array();
    OrderIdeal current = start;
    do {
      seen.insert(current.cell_set().bits());
      const auto word = stanley_thomas_word(antichain_of_ideal(current));
      std::string letters;
      for (int bit : word) letters += static_cast<char>('0' + bit);
      members.push_back({{"ideal", ideal_to_json(current)}, {"word", letters}});
      current = rowmotion(current);
    } while (!(current == start));
    orbits.push_back({{"size", members.size()}, {"members", members}});
  }
  return emit(Json{{"r", r},
                   {"s", s},
                   {"ideals", ideals.size()},
                   {"orbit_count", orbits.size()},
                   {"orbits", orbits}},
              true);
}

int run_verify(SuiteConfig config, const std::vector<std::string>& suites,
               const std::string& mutation, bool timing) {
  config.suites = {suites.begin(), suites.end()};
  config.mutation = mutation_from_string(mutation);
  config.validate();
  const VerificationReport report = run_suite(config);
  for (const auto& c : report.checks) {
    if (!c.passed) std::cerr << "FAIL " << c.suite << "/" << c.check << '\n';
  }
  return emit(report.to_json(timing), report.passed());
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact rowmotion, minor arrays, Stanley-Thomas words and birational RSK "
               "on rectangles"};
  app.require_subcommand(1);

  std::string labels;
  std::string sums;
  int power = 0;
  std::optional<std::string> cell;
  bool tropical = false;
  std::string ceiling = "1";
  std::optional<int> row;
  std::optional<int> col;
  int r = 0;
  int s = 0;
  SuiteConfig config;
  std::vector<std::string> suites;
  std::string mutation = "none";
  bool timing = false;

  auto* orbit = app.add_subcommand("orbit", "rho^k(phi^-1(x)) by the closed form and by toggles");
  orbit->add_option("--labels", labels, "labeling JSON file")->required();
  orbit->add_option("--power", power, "exponent k (any sign)")->required();
  orbit->add_option("--cell", cell, "single cell i,j");

  auto* rsk = app.add_subcommand("rsk", "birational (or tropical) RSK of a labeling");
  rsk->add_option("--labels", labels, "labeling JSON file")->required();
  rsk->add_flag("--tropical", tropical, "use the (max, min, +, -) algebra");
  rsk->add_option("--ceiling", ceiling, "tropical empty-min value")->needs(
      rsk->get_option("--tropical"));

  auto* stword = app.add_subcommand("stword", "Stanley-Thomas words of a labeling");
  stword->add_option("--labels", labels, "labeling JSON file")->required();
  auto* row_opt = stword->add_option("--row", row, "generalized word ST_i");
  auto* col_opt = stword->add_option("--col", col, "generalized word STbar_j");
  row_opt->excludes(col_opt);

  auto* greene = app.add_subcommand("greene", "check the Greene identity for RSK(x)");
  greene->add_option("--labels", labels, "labeling JSON file")->required();

  auto* shift = app.add_subcommand("shift", "chain-shift, word-rotation and minor-shift checks");
  shift->add_option("--labels", labels, "labeling JSON file")->required();

  auto* profile = app.add_subcommand("profile", "chain sums over [r]x[u,v] and [u,v]x[s]");
  profile->add_option("--labels", labels, "labeling JSON file")->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "recover a labeling from its chain sums");
  reconstruct->add_option("--sums", sums, "profile JSON file")->required();

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--r-max", config.r_max, "largest row count")->check(CLI::PositiveNumber);
  verify->add_option("--s-max", config.s_max, "largest column count")->check(CLI::PositiveNumber);
  verify->add_option("--trials", config.trials, "labelings per size")->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "64-bit seed");
  verify->add_option("--bound", config.bound, "numerator/denominator bound")
      ->check(CLI::PositiveNumber);
  verify->add_option("--suite", suites, "restrict to these suites (repeatable)")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--mutation", mutation, "inject a defect")
      ->check(CLI::IsMember({"none", "parallel-sum-as-sum", "transposed-minor-index"}));
  verify->add_flag("--timing", timing, "include per-check seconds");

  auto* ideals = app.add_subcommand("ideals", "rowmotion orbits on order ideals");
  ideals->add_option("--r", r, "rows")->required()->check(CLI::PositiveNumber);
  ideals->add_option("--s", s, "columns")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*orbit) return run_orbit(labels, power, cell);
    if (*rsk) return run_rsk(labels, tropical, ceiling);
    if (*stword) return run_stword(labels, row, col);
    if (*greene) return run_greene(labels);
    if (*shift) return run_shift(labels);
    if (*profile) return run_profile(labels);
    if (*reconstruct) return run_reconstruct(sums);
    if (*verify) return run_verify(config, suites, mutation, timing);
    if (*ideals) return run_ideals(r, s);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace rowmotion::cli

int main(int argc, char** argv) { return rowmotion::cli::run(argc, argv); }
