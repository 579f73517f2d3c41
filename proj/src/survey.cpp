#include "permudiag/survey.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <sstream>
#include <thread>

#include "permudiag/bruhat.hpp"
#include "permudiag/errors.hpp"
#include "permudiag/invgraph.hpp"

namespace permudiag {

namespace {

std::string poly_brackets(const IntPolynomial& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.coeffs()[i]);
  }
  return out + "]";
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<SurveyRow> build_survey(const SurveyOptions& options) {
  if (options.n > 7) throw SizeBound("survey capped at n = 7");
  PoincareTable table(options.n);
  const ConventionTable& conventions = default_conventions();
  const auto& perms = table.perms();
  std::vector<SurveyRow> rows(perms.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < perms.size();
         i = next.fetch_add(1)) {
      const Permutation& w = perms[i];
      SurveyRow row;
      row.w = w.to_string();
      row.ell = w.length();
      row.flags = classify(w);
      row.ao = count_acyclic_orientations(inversion_graph(w));
      row.rp = rp_avoiding(sw_diagram(w));
      row.poincare = table.poly(w);
      row.interval_size = row.poincare.eval(1);
      if (row.ao != row.rp || row.interval_size != row.poincare.eval(1)) {
        throw Error("survey row inconsistent for w = " + row.w);
      }
      for (FamilyName f : kAllFamilies) {
        row.filling_counts.push_back(
            enumerate_fillings(w, f, conventions).count);
      }
      for (int p : options.primes) {
        try {
          row.m_evals.push_back(M_eval(w, PrimeField(p), options.budget));
        } catch (const SearchTooLarge&) {
          row.m_evals.push_back(std::nullopt);
        }
      }
      rows[i] = std::move(row);
    }
  };
  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string survey_to_csv(const std::vector<SurveyRow>& rows,
                          const std::vector<int>& primes) {
  std::ostringstream out;
  out << "w,ell,grassmannian,smooth,gasharov_reiner,avoids_321,avoids_3412,"
         "ao,rp,interval_size,poincare";
  for (FamilyName f : kAllFamilies) out << ",fill_" << family_to_string(f);
  for (int p : primes) out << ",M_p" << p;
  out << "\r\n";
  for (const auto& r : rows) {
    out << csv_quote(r.w) << "," << r.ell << "," << r.flags.grassmannian
        << "," << r.flags.smooth << "," << r.flags.gasharov_reiner << ","
        << r.flags.avoids_321 << "," << r.flags.avoids_3412 << "," << r.ao
        << "," << r.rp << "," << r.interval_size << ","
        << csv_quote(poly_brackets(r.poincare));
    for (long long c : r.filling_counts) out << "," << c;
    for (const auto& m : r.m_evals) {
      out << ",";
      if (m) {
        out << *m;
      } else {
        out << "skipped";
      }
    }
    out << "\r\n";
  }
  return out.str();
}

std::string survey_to_json(const std::vector<SurveyRow>& rows,
                           const std::vector<int>& primes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["w"] = r.w;
    j["ell"] = r.ell;
    j["flags"] = {{"grassmannian", r.flags.grassmannian},
                  {"smooth", r.flags.smooth},
                  {"gasharov_reiner", r.flags.gasharov_reiner},
                  {"avoids_321", r.flags.avoids_321},
                  {"avoids_3412", r.flags.avoids_3412}};
    j["ao"] = r.ao;
    j["rp"] = r.rp;
    j["interval_size"] = r.interval_size;
    j["poincare"] = r.poincare.coeffs();
    for (size_t i = 0; i < r.filling_counts.size(); ++i) {
      j["fillings"][family_to_string(kAllFamilies[i])] = r.filling_counts[i];
    }
    for (size_t i = 0; i < primes.size(); ++i) {
      auto key = "p" + std::to_string(primes[i]);
      if (r.m_evals[i]) {
        j["M"][key] = *r.m_evals[i];
      } else {
        j["M"][key] = "skipped";
      }
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace permudiag
