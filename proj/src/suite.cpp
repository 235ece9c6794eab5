#include "rowmotion/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "rowmotion/closed_form.hpp"
#include "rowmotion/random.hpp"

namespace rowmotion {

std::string to_string(Mutation mutation) {
  switch (mutation) {
    case Mutation::none:
      return "none";
    case Mutation::parallel_sum_as_sum:
      return "parallel-sum-as-sum";
    case Mutation::transposed_minor_index:
      return "transposed-minor-index";
  }
  return "none";
}

Mutation mutation_from_string(const std::string& name) {
  for (Mutation m : {Mutation::none, Mutation::parallel_sum_as_sum,
                     Mutation::transposed_minor_index}) {
    if (to_string(m) == name) return m;
  }
  throw DomainError("unknown mutation \"" + name + "\"");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "periodicity",  "closed_form",    "worked_example", "lgv",
      "octahedron",   "dual_transfer",  "chain_shift",    "stanley_thomas",
      "rsk_greene",   "reconstruction"};
  return names;
}

void SuiteConfig::validate() const {
  if (r_max < 1 || s_max < 1) throw DomainError("size bounds must be positive");
  if (trials < 1) throw DomainError("trials must be positive");
  if (bound < 1) throw DomainError("rational bound must be positive");
  for (const auto& name : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) ==
        suite_names().end()) {
      throw DomainError("unknown suite \"" + name + "\"");
    }
  }
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckOutcome& c) { return c.passed; });
}

const CheckOutcome* VerificationReport::find(const std::string& check) const {
  for (const auto& c : checks) {
    if (c.check == check) return &c;
  }
  return nullptr;
}

Json VerificationReport::to_json(bool with_timing) const {
  Json suites = Json::array();
  for (const auto& name : config.suites) suites.push_back(name);
  Json out{{"status", passed() ? "pass" : "fail"},
           {"config",
            {{"r_max", config.r_max},
             {"s_max", config.s_max},
             {"trials", config.trials},
             {"seed", config.seed},
             {"bound", config.bound},
             {"suites", suites},
             {"mutation", rowmotion::to_string(config.mutation)}}}};
  Json list = Json::array();
  for (const auto& c : checks) {
    Json entry{{"suite", c.suite},
               {"check", c.check},
               {"status", c.passed ? "pass" : "fail"},
               {"instances", c.instances},
               {"skipped", c.skipped}};
    if (with_timing) entry["seconds"] = c.seconds;
    if (c.counterexample) entry["counterexample"] = *c.counterexample;
    list.push_back(entry);
  }
  out["checks"] = list;
  return out;
}

ToggleAlgebra suite_algebra(Mutation mutation) {
  ToggleAlgebra alg = ToggleAlgebra::birational();
  if (mutation == Mutation::parallel_sum_as_sum) {
    alg.name = "birational (parallel sum replaced by +)";
    alg.combine_above = [](const Rational& a, const Rational& b) { return a + b; };
  }
  return alg;
}

namespace {

struct Trial {
  Rect rect;
  std::uint64_t seed = 0;
  Labeling x;
};

class Runner {
 public:
  explicit Runner(const SuiteConfig& config)
      : config_(config), alg_(suite_algebra(config.mutation)) {
    report_.config = config;
  }

  VerificationReport finish() { return std::move(report_); }
  const SuiteConfig& config() const { return config_; }
  const ToggleAlgebra& alg() const { return alg_; }

  MinorArray minors(const Labeling& x) const {
    MinorArray w(x);
    return config_.mutation == Mutation::transposed_minor_index ? w.transposed() : w;
  }

  /// Rectangles up to the configured bounds, smallest first.
  std::vector<Rect> sizes(int r_cap = 1 << 20, int s_cap = 1 << 20) const {
    std::vector<Rect> out;
    for (int r = 1; r <= std::min(config_.r_max, r_cap); ++r) {
      for (int s = 1; s <= std::min(config_.s_max, s_cap); ++s) out.push_back({r, s});
    }
    std::stable_sort(out.begin(), out.end(), [](const Rect& a, const Rect& b) {
      return a.size() < b.size();
    });
    return out;
  }

  std::vector<Trial> trials(const Rect& rect, int count = -1) const {
    std::vector<Trial> out;
    const int n = count < 0 ? config_.trials : count;
    for (int t = 0; t < n; ++t) {
      const std::uint64_t seed = derive_seed(config_.seed, rect.r, rect.s, t);
      out.push_back({rect, seed, random_labeling(rect, seed, config_.bound)});
    }
    return out;
  }

  /// Runs one instance of `check`; the payload describes the input.
  void run(const std::string& suite, const std::string& check, const Json& payload,
           const std::function<CheckReport()>& body) {
    CheckOutcome& out = outcome(suite, check);
    const auto start = std::chrono::steady_clock::now();
    CheckReport result;
    try {
      result = body();
    } catch (const std::exception& e) {
      result.record(false, "exception", e.what());
    }
    out.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                       .count();
    out.instances += result.checked;
    out.skipped += result.skipped;
    if (!result.ok()) {
      if (out.passed) {
        Json ce = payload;
        ce["where"] = result.violations.front().where;
        ce["detail"] = result.violations.front().detail;
        ce["violations"] = result.violations.size();
        out.counterexample = ce;
      }
      out.passed = false;
    }
  }

  void run(const std::string& suite, const std::string& check, const Trial& trial,
           const std::function<CheckReport()>& body) {
    run(suite, check,
        Json{{"rect", {trial.rect.r, trial.rect.s}},
             {"seed", trial.seed},
             {"labeling", labeling_to_json(trial.x)}},
        body);
  }

 private:
  CheckOutcome& outcome(const std::string& suite, const std::string& check) {
    const auto key = suite + "/" + check;
    if (auto it = index_.find(key); it != index_.end()) return report_.checks[it->second];
    index_[key] = report_.checks.size();
    report_.checks.push_back({.suite = suite, .check = check});
    return report_.checks.back();
  }

  const SuiteConfig& config_;
  ToggleAlgebra alg_;
  VerificationReport report_;
  std::map<std::string, std::size_t> index_;
};

std::string at(const Cell& c) { return "(" + c.to_string() + ")"; }

std::string differ(const Rational& a, const Rational& b) {
  return a.to_string() + " != " + b.to_string();
}

Labeling primes_fixture() { return Labeling(Rect{2, 3}, {2, 5, 11, 3, 7, 13}); }

void periodicity_suite(Runner& run) {
  const char* suite = "periodicity";
  for (const Rect& rect : run.sizes()) {
    for (const Trial& t : run.trials(rect)) {
      run.run(suite, "birational_order", t, [&] {
        CheckReport rep;
        const Labeling y = transfer_inverse(t.x, ToggleAlgebra::birational());
        const Labeling back = rowmotion_power(y, rect.period(), run.alg());
        rep.record(back == y, "rho^" + std::to_string(rect.period()),
                   "rho^(r+s)(y) differs from y");
        return rep;
      });
      run.run(suite, "tropical_order", t, [&] {
        CheckReport rep;
        const auto trop = ToggleAlgebra::tropical();
        const Labeling y = random_order_point(rect, t.seed, run.config().bound);
        rep.record(rowmotion_power(y, rect.period(), trop) == y,
                   "rho^" + std::to_string(rect.period()),
                   "order-polytope point not fixed by rho^(r+s)");
        return rep;
      });
    }
  }
}

void closed_form_suite(Runner& run) {
  const char* suite = "closed_form";
  for (const Rect& rect : run.sizes()) {
    for (const Trial& t : run.trials(rect)) {
      run.run(suite, "closed_form_vs_toggles", t, [&] {
        CheckReport rep;
        const ClosedForm closed(rect, run.minors(t.x));
        OrbitTable orbit(transfer_inverse(t.x, ToggleAlgebra::birational()), run.alg());
        const int n = rect.period();
        for (int k = -n; k <= n; ++k) {
          const Labeling& toggled = orbit.power(k);
          for (int n_cell = 0; n_cell < rect.size(); ++n_cell) {
            const Cell c = rect.cell_at(n_cell);
            const Rational formula = closed.rho_power_any(c, k);
            rep.record(formula == toggled[c], at(c) + " k=" + std::to_string(k),
                       differ(formula, toggled[c]));
          }
        }
        return rep;
      });
      run.run(suite, "array_shift", t, [&] { return array_shift_check(t.x); });
    }
  }
}

void worked_example_suite(Runner& run) {
  const Labeling x = primes_fixture();
  const Json payload{{"rect", {2, 3}}, {"labeling", labeling_to_json(x)}};
  run.run("worked_example", "primes_cell_2_2", payload, [&] {
    CheckReport rep;
    const std::vector<Rational> expected = {112, 1170, Rational(1, 10), Rational(37, 385),
                                            Rational(1, 91)};
    const ClosedForm closed(x.rect(), run.minors(x));
    Labeling toggled = transfer_inverse(x, ToggleAlgebra::birational());
    for (int k = 0; k < 5; ++k) {
      const Rational formula = closed.rho_power_any({2, 2}, -k);
      rep.record(formula == expected[static_cast<std::size_t>(k)],
                 "closed form k=-" + std::to_string(k),
                 differ(formula, expected[static_cast<std::size_t>(k)]));
      rep.record(toggled[{2, 2}] == expected[static_cast<std::size_t>(k)],
                 "toggles k=-" + std::to_string(k),
                 differ(toggled[{2, 2}], expected[static_cast<std::size_t>(k)]));
      toggled = rowmotion_inverse(toggled, run.alg());
    }
    return rep;
  });
}

void lgv_suite(Runner& run) {
  const char* suite = "lgv";
  for (const Rect& rect : run.sizes()) {
    for (const Trial& t : run.trials(rect)) {
      if (rect.r + rect.s <= 7) {
        run.run(suite, "minors_vs_path_families", t, [&] {
          CheckReport rep;
          const MinorArray w = run.minors(t.x);
          const GRGraph graph(t.x);
          const int n = rect.r + rect.s;
          for (int k = 1; k <= std::min(3, n); ++k) {
            for (int i = 1; i <= n - k + 1; ++i) {
              for (int j = 1; j <= n - k + 1; ++j) {
                Rational total(0);
                for (const auto& family : enumerate_gr_paths(graph, i, j, k)) {
                  total += graph.weight(family);
                }
                rep.record(total == w.at(i, j, k),
                           std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k),
                           differ(total, w.at(i, j, k)));
              }
            }
          }
          return rep;
        });
      }
      if (rect.r <= 4 && rect.s <= 4) {
        run.run(suite, "interval_quotient_vs_oracle", t, [&] {
          CheckReport rep;
          const MinorArray w = run.minors(t.x);
          for (int i1 = 1; i1 <= rect.r; ++i1) {
            for (int i2 = i1; i2 <= rect.r; ++i2) {
              for (int j1 = 1; j1 <= rect.s; ++j1) {
                for (int j2 = j1; j2 <= rect.s; ++j2) {
                  const Interval interval{i1, i2, j1, j2};
                  if (!interval.corner_anchored(rect)) continue;
                  for (int k = 0; k <= interval.cols(); ++k) {
                    const auto families = enumerate_paths(interval, k);
                    if (families.empty()) {
                      ++rep.skipped;
                      continue;
                    }
                    const Rational quotient = w_interval(w, rect, interval, k);
                    const Rational brute = w_interval_oracle(t.x, interval, k);
                    rep.record(quotient == brute,
                               interval.to_string() + " k=" + std::to_string(k),
                               differ(quotient, brute));
                  }
                }
              }
            }
          }
          return rep;
        });
      }
    }
  }
}

CheckReport desnanot_jacobi(const IntegerMatrix& a) {
  CheckReport rep;
  const int n = a.rows();
  auto minor = [&](int i, int j, int k) {
    return bareiss_determinant(a.solid_submatrix(i, j, k));
  };
  for (int k = 1; k < n; ++k) {
    for (int i = 1; i + k <= n; ++i) {
      for (int j = 1; j + k <= n; ++j) {
        const mpz_class lhs = minor(i, j, k + 1) * minor(i + 1, j + 1, k - 1);
        const mpz_class rhs = minor(i, j, k) * minor(i + 1, j + 1, k) -
                              minor(i, j + 1, k) * minor(i + 1, j, k);
        rep.record(lhs == rhs,
                   std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k),
                   lhs.get_str() + " != " + rhs.get_str());
      }
    }
  }
  return rep;
}

void octahedron_suite(Runner& run) {
  const char* suite = "octahedron";
  for (const Rect& rect : run.sizes()) {
    for (const Trial& t : run.trials(rect)) {
      run.run(suite, "octahedron_recurrence", t,
              [&] { return octahedron_check(run.minors(t.x)); });
      run.run(suite, "array_toggle", t,
              [&] { return array_toggle_check(run.minors(t.x), rect); });
    }
  }
  const int matrices = 10 * run.config().trials;
  for (int m = 0; m < matrices; ++m) {
    const int n = 1 + m % 6;
    const std::uint64_t seed = derive_seed(run.config().seed, 0xD1, n, m);
    const IntegerMatrix a = random_integer_matrix(n, seed);
    Json rows = Json::array();
    for (int i = 0; i < n; ++i) {
      Json row = Json::array();
      for (int j = 0; j < n; ++j) row.push_back(a(i, j).get_str());
      rows.push_back(row);
    }
    run.run(suite, "desnanot_jacobi", Json{{"seed", seed}, {"matrix", rows}},
            [&] { return desnanot_jacobi(a); });
  }
}

void dual_transfer_suite(Runner& run) {
  const char* suite = "dual_transfer";
  for (const Rect& rect : run.sizes()) {
    for (const Trial& t : run.trials(rect)) {
      run.run(suite, "rowmotion_times_dual_inverse", t, [&] {
        CheckReport rep;
        const auto bir = ToggleAlgebra::birational();
        const Labeling lhs = rowmotion(transfer_inverse(t.x, bir), run.alg());
        const Labeling rhs = dual_transfer_inverse(t.x, bir);
        for (int n = 0; n < rect.size(); ++n) {
          const Cell c = rect.cell_at(n);
          const Rational product = lhs[c] * rhs[c];
          rep.record(product == Rational(1), at(c), differ(product, 1));
        }
        return rep;
      });
      run.run(suite, "dual_inverse_minor_quotient", t, [&] {
        CheckReport rep;
        const MinorArray w = run.minors(t.x);
        const Labeling z = dual_transfer_inverse(t.x, ToggleAlgebra::birational());
        for (int n = 0; n < rect.size(); ++n) {
          const auto [i, j] = rect.cell_at(n);
          const Rational denominator = w.at(i + j - 1, rect.r + j, rect.s - j + 1);
          if (denominator.is_zero()) {
            rep.record(false, at({i, j}), "vanishing minor");
            continue;
          }
          const Rational quotient =
              w.at(i + j, rect.r + j, rect.s - j) / denominator;
          rep.record(quotient == z[{i, j}], at({i, j}), differ(quotient, z[{i, j}]));
        }
        return rep;
      });
    }
  }
}

void chain_shift_suite(Runner& run) {
  const char* suite = "chain_shift";
  const Labeling primes = primes_fixture();
  run.run(suite, "printed_instance",
          Json{{"rect", {2, 3}}, {"labeling", labeling_to_json(primes)}}, [&] {
            CheckReport rep;
            const auto bir = ToggleAlgebra::birational();
            const Labeling z =
                transfer(rowmotion_inverse(transfer_inverse(primes, bir), bir), bir);
            const Rational before = chain_sum(primes, Interval{1, 2, 2, 3});
            const Rational after = chain_sum(z, Interval{1, 2, 1, 2});
            rep.record(before == 1170, "w([2]x[2,3])", differ(before, 1170));
            rep.record(after == 1170, "w'([2]x[1,2])", differ(after, 1170));
            const Rational z_pair = z[{1, 1}] * z[{2, 1}];
            rep.record(z_pair == 35, "z11*z21", differ(z_pair, 35));
            return rep;
          });
  for (const Rect& rect : run.sizes()) {
    for (const Trial& t : run.trials(rect)) {
      run.run(suite, "chain_shift", t, [&] { return chain_shift_check(t.x); });
      run.run(suite, "chain_shift_rsk", t, [&] { return chain_shift_rsk_check(t.x); });
    }
  }
}

void stanley_thomas_suite(Runner& run) {
  const char* suite = "stanley_thomas";
  for (const Rect& rect : run.sizes()) {
    if (rect.size() <= kMaxEnumeratedCells) {
      run.run(suite, "combinatorial_words", Json{{"rect", {rect.r, rect.s}}}, [&] {
        CheckReport rep;
        std::set<std::vector<int>> words;
        const auto ideals = enumerate_order_ideals(rect);
        for (const OrderIdeal& ideal : ideals) {
          const auto word = stanley_thomas_word(antichain_of_ideal(ideal));
          const int ones = static_cast<int>(std::count(word.begin(), word.end(), 1));
          rep.record(ones == rect.s, "ones", std::to_string(ones));
          words.insert(word);
          const OrderIdeal next = rowmotion(ideal);
          rep.record(next == rowmotion_by_toggles(ideal), "toggle route",
                     "generator and toggle rowmotion differ");
          rep.record(stanley_thomas_word(antichain_of_ideal(next)) == rotate_right(word),
                     "rotation", "word of rho(I) is not the right rotation");
          OrderIdeal orbit = ideal;
          for (int step = 0; step < rect.period(); ++step) orbit = rowmotion(orbit);
          rep.record(orbit == ideal, "order", "rho^(r+s)(I) != I");
        }
        rep.record(words.size() == ideals.size(), "injectivity",
                   std::to_string(words.size()) + " words for " +
                       std::to_string(ideals.size()) + " ideals");
        return rep;
      });
    }
    for (const Trial& t : run.trials(rect)) {
      run.run(suite, "cyclic_shift", t, [&] { return cyclic_shift_check(t.x); });
      run.run(suite, "classic_is_row_1", t, [&] {
        CheckReport rep;
        const auto classic = birational_st(t.x).entries;
        const auto first = generalized_st(t.x, WordAxis::row(1)).entries;
        rep.record(classic == first, "ST vs ST_1", "entries differ");
        return rep;
      });
    }
  }
}

void rsk_greene_suite(Runner& run) {
  const char* suite = "rsk_greene";
  const auto bir = ToggleAlgebra::birational();
  const auto trop = ToggleAlgebra::tropical();
  for (const Rect& rect : run.sizes()) {
    for (const Trial& t : run.trials(rect)) {
      run.run(suite, "rsk_equals_procedure", t, [&] {
        CheckReport rep;
        rep.record(birational_rsk(t.x, run.alg()) == rsk_procedure(t.x, run.alg()),
                   "birational", "RSK(x) != rsk(x)");
        const Labeling point = random_chain_point(rect, t.seed, run.config().bound);
        rep.record(birational_rsk(point, trop) == rsk_procedure(point, trop), "tropical",
                   "RSK != rsk at " + labeling_to_json(point).dump());
        return rep;
      });
      run.run(suite, "rsk_inverse", t, [&] {
        CheckReport rep;
        const RskImage image = birational_rsk(t.x, run.alg());
        rep.record(rsk_inverse(image, run.alg()) == t.x, "inverse after RSK",
                   "round trip differs");
        rep.record(birational_rsk(rsk_inverse(image, run.alg()), run.alg()) == image,
                   "RSK after inverse", "round trip differs");
        return rep;
      });
      run.run(suite, "rsk_as_rowmotion", t, [&] {
        CheckReport rep;
        const RskImage image = birational_rsk(t.x, run.alg());
        OrbitTable orbit(transfer_inverse(t.x, bir), run.alg());
        for (int n = 0; n < rect.size(); ++n) {
          const Cell c = rect.cell_at(n);
          const int depth = std::min(rect.r - c.i, rect.s - c.j);
          const Rational expected = orbit.power(-depth)[c];
          rep.record(image[c] == expected, at(c), differ(image[c], expected));
        }
        return rep;
      });
      run.run(suite, "greene", t, [&] {
        return greene_check(t.x, run.alg(), run.minors(t.x), rect.r <= 3 && rect.s <= 3);
      });
      if (rect.r <= 3 && rect.s <= 3) {
        const Labeling point = random_chain_point(rect, t.seed, run.config().bound);
        run.run(suite, "tropical_greene",
                Json{{"rect", {rect.r, rect.s}},
                     {"seed", t.seed},
                     {"labeling", labeling_to_json(point)}},
                [&] { return tropical_greene_check(point); });
      }
    }
  }
}

void reconstruction_suite(Runner& run) {
  const char* suite = "reconstruction";
  for (const Rect& rect : run.sizes()) {
    for (const Trial& t : run.trials(rect)) {
      if (rect.r <= 4 && rect.s <= 4) {
        run.run(suite, "family_determinants_vs_oracle", t, [&] {
          CheckReport rep;
          const ChainSumProfile profile = chain_sum_profile(t.x);
          for (int j = 1; j <= rect.s; ++j) {
            for (int k = 0; k <= std::min(j, rect.r + 1); ++k) {
              const Interval interval{1, rect.r, 1, j};
              if (enumerate_paths(interval, k).empty()) continue;
              const Rational det = column_family_weight(profile, j, k);
              const Rational brute = w_interval_oracle(t.x, interval, k);
              rep.record(det == brute, interval.to_string() + " k=" + std::to_string(k),
                         differ(det, brute));
            }
          }
          for (int i = 1; i <= rect.r; ++i) {
            for (int k = 0; k <= std::min(i, rect.s + 1); ++k) {
              const Interval interval{1, rect.s, 1, i};
              if (enumerate_paths(interval, k).empty()) continue;
              const Rational det = row_family_weight(profile, i, k);
              const Rational brute = w_interval_oracle(t.x.transposed(), interval, k);
              rep.record(det == brute,
                         "transposed " + interval.to_string() + " k=" + std::to_string(k),
                         differ(det, brute));
            }
          }
          return rep;
        });
      }
      run.run(suite, "round_trip", t, [&] {
        CheckReport rep;
        rep.record(reconstruct_from_chain_sums(chain_sum_profile(t.x)) == t.x, "profile",
                   "reconstruction differs from the labeling");
        return rep;
      });
    }
  }
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& config) {
  config.validate();
  Runner run(config);
  const std::vector<std::pair<std::string, void (*)(Runner&)>> suites = {
      {"periodicity", periodicity_suite},       {"closed_form", closed_form_suite},
      {"worked_example", worked_example_suite}, {"lgv", lgv_suite},
      {"octahedron", octahedron_suite},         {"dual_transfer", dual_transfer_suite},
      {"chain_shift", chain_shift_suite},       {"stanley_thomas", stanley_thomas_suite},
      {"rsk_greene", rsk_greene_suite},         {"reconstruction", reconstruction_suite}};
  for (const auto& [name, body] : suites) {
    if (config.selected(name)) body(run);
  }
  return run.finish();
}

}  // namespace rowmotion
