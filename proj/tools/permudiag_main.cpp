// permudiag: exact combinatorics of permutation diagrams at desk scale.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "permudiag/bruhat.hpp"
#include "permudiag/errors.hpp"
#include "permudiag/fillings.hpp"
#include "permudiag/invgraph.hpp"
#include "permudiag/matcount.hpp"
#include "permudiag/survey.hpp"
#include "permudiag/verify_suites.hpp"

using namespace permudiag;

namespace {

int cmd_info(const std::string& word, bool as_json) {
  Permutation w = Permutation::parse(word);
  auto stats = length_stats(w);
  auto flags = classify(w);
  Board e = se_diagram(w);
  Board o = sw_diagram(w);
  long long ao = count_acyclic_orientations(inversion_graph(w));
  long long rp = rp_avoiding(o);
  IntPolynomial p = poincare(w);
  long long interval = p.eval(1);

  if (as_json) {
    nlohmann::json j;
    j["w"] = w.to_string();
    j["n"] = w.size();
    j["ell"] = stats.ell;
    j["anti_inversions"] = stats.anti_inversions;
    j["se_diagram"] = nlohmann::json::parse(e.to_json());
    j["sw_diagram"] = nlohmann::json::parse(o.to_json());
    j["flags"] = {{"grassmannian", flags.grassmannian},
                  {"smooth", flags.smooth},
                  {"gasharov_reiner", flags.gasharov_reiner},
                  {"avoids_321", flags.avoids_321},
                  {"avoids_3412", flags.avoids_3412}};
    j["ao"] = ao;
    j["rp"] = rp;
    j["interval"] = interval;
    j["poincare"] = p.coeffs();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "w = " << w.to_string() << " (n = " << w.size() << ")\n";
  std::cout << "ell = " << stats.ell
            << ", anti-inversions = " << stats.anti_inversions << "\n";
  std::cout << "E_w = " << e.to_json() << "\n";
  std::cout << "O_w = " << o.to_json() << "\n";
  std::cout << "flags: grassmannian=" << flags.grassmannian
            << " smooth=" << flags.smooth
            << " gasharov_reiner=" << flags.gasharov_reiner
            << " avoids_321=" << flags.avoids_321
            << " avoids_3412=" << flags.avoids_3412 << "\n";
  std::cout << "AO(G_w) = " << ao << ", RP(O_w) = " << rp
            << ", #[iota,w] = " << interval << "\n";
  std::cout << "P_w(t) = " << p.to_string() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt,
               const std::string& out_path) {
  SuiteResult result = run_suite(suite, opt);
  std::ostringstream report;
  report << "suite " << result.id << "\n";
  for (const auto& line : result.lines) report << line << "\n";
  report << (result.ok ? "PASS" : (result.exit_code == 3 ? "REFUSED" : "FAIL"))
         << " " << result.id << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << report.str();
    std::cout << (result.ok ? "PASS " : "FAIL ") << result.id << " ("
              << result.lines.size() << " lines written to " << out_path
              << ")\n";
  } else {
    std::cout << report.str();
  }
  return result.exit_code;
}

int cmd_survey(const SurveyOptions& opt, const std::string& out_path,
               const std::string& format) {
  auto rows = build_survey(opt);
  std::string text = (format == "json") ? survey_to_json(rows, opt.primes)
                                        : survey_to_csv(rows, opt.primes);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    std::cout << rows.size() << " rows written to " << out_path << "\n";
  }
  return 0;
}

int cmd_matcount(const std::string& word, std::vector<int> primes,
                 int target_rank, long long budget, bool as_json) {
  Permutation w = Permutation::parse(word);
  if (primes.empty()) primes = {2};
  nlohmann::json j;
  j["w"] = w.to_string();
  for (int p : primes) {
    PrimeField field(p);
    int r = target_rank < 0 ? w.size() : target_rank;
    long long count =
        count_matrices(w.size(), sw_diagram(w), field, r, budget);
    auto key = "p" + std::to_string(p);
    j["rank"] = r;
    j["count"][key] = count;
    if (r == w.size()) {
      long long scale = 1;
      for (int t = 0; t < w.size(); ++t) scale *= (p - 1);
      j["M"][key] = count / scale;
    }
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "w = " << j["w"].get<std::string>()
              << ", rank = " << j["rank"].get<int>() << "\n";
    for (int p : primes) {
      auto key = "p" + std::to_string(p);
      std::cout << "  p = " << p << ": count = "
                << j["count"][key].get<long long>();
      if (j.contains("M") && j["M"].contains(key)) {
        std::cout << ", M = " << j["M"][key].get<long long>();
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_fillings(const std::string& word, const std::string& family_name,
                 bool as_json) {
  Permutation w = Permutation::parse(word);
  std::vector<FamilyName> families;
  if (family_name.empty()) {
    families.assign(kAllFamilies.begin(), kAllFamilies.end());
  } else {
    families.push_back(family_from_string(family_name));
  }
  nlohmann::json j;
  j["w"] = w.to_string();
  for (FamilyName f : families) {
    auto result = enumerate_fillings(w, f);
    j["families"][family_to_string(f)] = {
        {"count", result.count}, {"gf", result.gf.coeffs()}};
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fillings of E_" << w.to_string() << ":\n";
    for (FamilyName f : families) {
      auto& entry = j["families"][family_to_string(f)];
      std::cout << "  " << family_to_string(f) << ": "
                << entry["count"].get<long long>() << "\n";
    }
  }
  return 0;
}

int cmd_calibrate(const std::string& out_path, bool reduced) {
  AnchorOptions opt;
  if (reduced) {
    opt.counts_351624 = false;
    opt.pseudo_counts = false;
    opt.le_percentage = false;
    opt.pseudo_gf_small = false;
    opt.n_cap = 4;
  }
  CalibrationResult result = calibrate_families(opt);
  for (const auto& line : result.report) std::cout << line << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << result.table.to_json() << "\n";
    std::cout << "table written to " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of permutation diagrams"};
  app.require_subcommand(1);

  std::string word, out_path, format = "csv", family, suite;
  bool as_json = false, long_run = false, reduced = false;
  int n = 0, jobs = 1, target_rank = -1;
  long long budget = kDefaultNodeBudget;
  std::vector<int> primes;

  auto* info = app.add_subcommand("info", "per-permutation report");
  info->add_option("w", word)->required();
  info->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(
      std::vector<std::string>(kSuiteIds.begin(), kSuiteIds.end())));
  verify->add_option("--n", n);
  verify->add_option("--p", primes);
  verify->add_option("--jobs", jobs);
  verify->add_option("--budget", budget);
  verify->add_option("--out", out_path);
  verify->add_flag("--long", long_run);

  auto* survey = app.add_subcommand("survey", "table over all of S_n");
  survey->add_option("--n", n)->required();
  survey->add_option("--p", primes);
  survey->add_option("--jobs", jobs);
  survey->add_option("--budget", budget);
  survey->add_option("--out", out_path);
  survey->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));

  auto* matcount = app.add_subcommand("matcount", "matrix counts over F_p");
  matcount->add_option("w", word)->required();
  matcount->add_option("--p", primes);
  matcount->add_option("--rank", target_rank);
  matcount->add_option("--budget", budget);
  matcount->add_flag("--json", as_json);

  auto* fillings = app.add_subcommand("fillings", "restricted filling counts");
  fillings->add_option("w", word)->required();
  fillings->add_option("--family", family);
  fillings->add_flag("--json", as_json);

  auto* calibrate =
      app.add_subcommand("calibrate", "fix the pattern conventions");
  calibrate->add_option("--out", out_path);
  calibrate->add_flag("--reduced-anchors", reduced);

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(word, as_json);
    if (verify->parsed()) {
      SuiteOptions opt;
      opt.n_max = n;
      opt.primes = primes;
      opt.jobs = jobs;
      opt.long_run = long_run;
      opt.budget = budget;
      return cmd_verify(suite, opt, out_path);
    }
    if (survey->parsed()) {
      SurveyOptions opt;
      opt.n = n;
      opt.primes = primes;
      opt.jobs = jobs;
      opt.budget = budget;
      return cmd_survey(opt, out_path, format);
    }
    if (matcount->parsed()) {
      return cmd_matcount(word, primes, target_rank, budget, as_json);
    }
    if (fillings->parsed()) return cmd_fillings(word, family, as_json);
    if (calibrate->parsed()) return cmd_calibrate(out_path, reduced);
  } catch (const NotAPermutation& e) {
    std::cerr << "NotAPermutation: " << e.what() << "\n";
    return 2;
  } catch (const SearchTooLarge& e) {
    std::cerr << "SearchTooLarge: " << e.what() << "\n";
    return 3;
  } catch (const SizeBound& e) {
    std::cerr << "SizeBound: " << e.what() << "\n";
    return 3;
  } catch (const BoardTooLarge& e) {
    std::cerr << "BoardTooLarge: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
