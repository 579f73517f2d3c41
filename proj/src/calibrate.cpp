#include <algorithm>
#include <set>
#include <sstream>

#include "permudiag/bruhat.hpp"
#include "permudiag/errors.hpp"
#include "permudiag/fillings.hpp"

namespace permudiag {

namespace {

PatternFamily percentage_family() {
  PatternFamily fam;
  fam.name = FamilyName::Percentage;
  fam.rect_patterns = {{1, 0, 0, 1}, {0, 1, 1, 0}};
  return fam;
}

PatternFamily pseudo_percentage_family() {
  PatternFamily fam = percentage_family();
  fam.name = FamilyName::PseudoPercentage;
  fam.dot_patterns = {{1, 0, 0}, {0, 1, 1}};
  return fam;
}

// Anchor data shared by all candidate evaluations.
struct AnchorData {
  // 321-avoiding permutations up to the cap, plus 351624.
  struct Entry {
    Permutation w;
    Board e;
    long long ao = 0;
    IntPolynomial rev_p;       // q^ell P_w(1/q)
    long long percentage = 0;  // percentage-avoiding filling count
  };
  std::vector<Entry> skew;
  int idx_351624 = -1;

  struct GrEntry {
    Permutation w;
    Board e;
    IntPolynomial rev_p;
  };
  std::vector<GrEntry> gr_small;

  Permutation w35241 = Permutation::parse("35241");
  Permutation w52341 = Permutation::parse("52341");
  Board e35241 = se_diagram(w35241);
  Board e52341 = se_diagram(w52341);
};

AnchorData build_anchor_data(const AnchorOptions& opt) {
  AnchorData data;
  PatternFamily perc = percentage_family();
  auto add_skew = [&](const Permutation& w) {
    AnchorData::Entry e{w, se_diagram(w), 0, IntPolynomial(), 0};
    e.ao = count_acyclic_orientations(inversion_graph(w));
    e.rev_p = poincare(w).reversed(static_cast<int>(w.length()));
    e.percentage = count_fillings(e.e, w, perc).count;
    data.skew.push_back(std::move(e));
  };
  for (int n = 2; n <= opt.n_cap; ++n) {
    for (const auto& w : all_permutations(n)) {
      if (classify(w).avoids_321) add_skew(w);
    }
  }
  add_skew(Permutation::parse("351624"));
  data.idx_351624 = static_cast<int>(data.skew.size()) - 1;

  for (int n = 2; n <= opt.pseudo_n_cap; ++n) {
    for (const auto& w : all_permutations(n)) {
      if (!classify(w).gasharov_reiner) continue;
      data.gr_small.push_back(
          {w, se_diagram(w),
           poincare(w).reversed(static_cast<int>(w.length()))});
    }
  }
  return data;
}

// Candidate corner-pattern sets for one family slot, in canonical preference
// order: preferred corner first, bend-0/arms-1 values first, single patterns
// before polarity-complement pairs.
std::vector<std::vector<CornerPattern>> base_candidates(CornerKind preferred) {
  std::vector<CornerKind> corners = {CornerKind::NW, CornerKind::NE,
                                     CornerKind::SW, CornerKind::SE};
  std::stable_sort(corners.begin(), corners.end(),
                   [&](CornerKind a, CornerKind b) {
                     return (a == preferred) > (b == preferred);
                   });
  const int value_order[8][3] = {{0, 1, 1}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0},
                                 {1, 1, 0}, {1, 0, 1}, {0, 0, 0}, {1, 1, 1}};
  std::vector<std::vector<CornerPattern>> out;
  for (CornerKind c : corners) {
    for (const auto& v : value_order) {
      out.push_back({CornerPattern{c, v[0], v[1], v[2]}});
    }
  }
  for (CornerKind c : corners) {
    for (const auto& v : value_order) {
      if (v[0] == 1) continue;  // complement pairs listed once
      out.push_back({CornerPattern{c, v[0], v[1], v[2]},
                     CornerPattern{c, 1 - v[0], 1 - v[1], 1 - v[2]}});
    }
  }
  return out;
}

// Dot-pattern sets in preference order: the fourth-corner pair matching the
// pseudo-percentage schema first, then the other complement pairs, all
// remaining pairs, and finally singletons.
std::vector<std::vector<DotPattern>> dot_candidates() {
  std::vector<DotPattern> all;
  for (int v = 0; v < 8; ++v) {
    all.push_back({v >> 2 & 1, v >> 1 & 1, v & 1});
  }
  auto code = [](const DotPattern& d) { return d.nw * 4 + d.ne * 2 + d.sw; };
  std::vector<std::vector<DotPattern>> out;
  out.push_back({DotPattern{1, 0, 0}, DotPattern{0, 1, 1}});
  for (int v = 0; v < 4; ++v) {
    if (v == 3) continue;  // {3, 4} is the percentage-style pair above
    out.push_back({all[v], all[7 - v]});
  }
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      if (b == 7 - a) continue;
      if (a == 3 && b == 4) continue;
      out.push_back({all[a], all[b]});
    }
  }
  for (int v = 0; v < 8; ++v) out.push_back({all[v]});
  (void)code;
  return out;
}

std::string describe(const PatternFamily& fam) {
  std::ostringstream os;
  const char* corner_names[] = {"NW", "NE", "SW", "SE"};
  os << family_to_string(fam.name) << ":";
  for (const auto& r : fam.rect_patterns) {
    os << " rect(" << r.nw << r.ne << "/" << r.sw << r.se << ")";
  }
  for (const auto& c : fam.corner_patterns) {
    os << " corner(" << corner_names[static_cast<int>(c.bend)] << " bend="
       << c.bend_value << " arms=" << c.row_arm_value << c.col_arm_value
       << ")";
  }
  for (const auto& d : fam.dot_patterns) {
    os << " dot(" << d.nw << d.ne << d.sw << ")";
  }
  return os.str();
}

bool injected_ok(const PatternFamily& fam, const AnchorOptions& opt) {
  for (const auto& inj : opt.injected) {
    if (inj.family != fam.name) continue;
    Permutation w = Permutation::parse(inj.w);
    if (count_fillings(se_diagram(w), w, fam).count != inj.expected) {
      return false;
    }
  }
  return true;
}

}  // namespace

CalibrationResult calibrate_families(const AnchorOptions& opt) {
  CalibrationResult result;
  AnchorData data = build_anchor_data(opt);

  PatternFamily perc = percentage_family();
  PatternFamily pperc = pseudo_percentage_family();
  if (!injected_ok(perc, opt) || !injected_ok(pperc, opt)) {
    throw NoConsistentConvention("percentage families fail injected anchors");
  }
  result.table.families[FamilyName::Percentage] = perc;
  result.table.families[FamilyName::PseudoPercentage] = pperc;

  auto eval_counts = [&](const PatternFamily& fam,
                         const AnchorData::Entry& entry) {
    return count_fillings(entry.e, entry.w, fam);
  };

  // --- Gamma: AO counts on skew shapes, 98 at 351624 -----------------------
  auto gamma_ok = [&](const PatternFamily& fam) {
    if (opt.counts_351624) {
      auto& special = data.skew[data.idx_351624];
      if (eval_counts(fam, special).count != 98) return false;
    }
    if (opt.ao_gamma) {
      for (const auto& entry : data.skew) {
        if (eval_counts(fam, entry).count != entry.ao) return false;
      }
    }
    return injected_ok(fam, opt);
  };

  // --- Le: percentage-equinumerous on skew shapes ---------------------------
  auto le_ok = [&](const PatternFamily& fam) {
    if (opt.le_percentage) {
      for (const auto& entry : data.skew) {
        if (eval_counts(fam, entry).count != entry.percentage) return false;
      }
    }
    return injected_ok(fam, opt);
  };

  // --- L and Ammag: Bruhat generating function on skew shapes ---------------
  auto gf_ok = [&](const PatternFamily& fam, bool also_100) {
    if (opt.counts_351624 && also_100) {
      auto& special = data.skew[data.idx_351624];
      if (eval_counts(fam, special).count != 100) return false;
    }
    if (opt.bruhat_gf) {
      for (const auto& entry : data.skew) {
        if (eval_counts(fam, entry).gf != entry.rev_p) return false;
      }
    }
    return injected_ok(fam, opt);
  };

  auto pick = [&](FamilyName name, CornerKind preferred, auto&& accept)
      -> std::vector<PatternFamily> {
    std::vector<PatternFamily> survivors;
    for (const auto& cand : base_candidates(preferred)) {
      PatternFamily fam;
      fam.name = name;
      fam.corner_patterns = cand;
      if (accept(fam)) survivors.push_back(fam);
    }
    if (survivors.empty()) {
      throw NoConsistentConvention("no candidate for " +
                                   family_to_string(name));
    }
    result.candidates_satisfying[name] = static_cast<int>(survivors.size());
    return survivors;
  };

  std::vector<PatternFamily> gamma =
      pick(FamilyName::Gamma, CornerKind::NW, gamma_ok);
  std::vector<PatternFamily> le = pick(FamilyName::Le, CornerKind::SE, le_ok);
  std::vector<PatternFamily> l_base =
      pick(FamilyName::L, CornerKind::SW,
           [&](const PatternFamily& f) { return gf_ok(f, true); });
  std::vector<PatternFamily> ammag_base =
      pick(FamilyName::Ammag, CornerKind::NE,
           [&](const PatternFamily& f) { return gf_ok(f, false); });

  result.table.families[FamilyName::Gamma] = gamma.front();
  result.table.families[FamilyName::Le] = le.front();

  // --- Pseudo families: joint choice of base patterns and dot patterns ------
  auto pseudo_ok = [&](const PatternFamily& fam, long long count_35241,
                       bool check_52341) {
    if (opt.pseudo_counts) {
      if (count_fillings(data.e35241, data.w35241, fam).count != count_35241) {
        return false;
      }
      if (check_52341 &&
          count_fillings(data.e52341, data.w52341, fam).count != 72) {
        return false;
      }
    }
    if (opt.pseudo_gf_small) {
      for (const auto& entry : data.gr_small) {
        if (count_fillings(entry.e, entry.w, fam).gf != entry.rev_p) {
          return false;
        }
      }
    }
    return injected_ok(fam, opt);
  };

  auto pick_pseudo = [&](FamilyName name,
                         const std::vector<PatternFamily>& bases,
                         long long count_35241, bool check_52341)
      -> std::pair<PatternFamily, PatternFamily> {
    std::optional<std::pair<PatternFamily, PatternFamily>> chosen;
    int satisfying = 0;
    for (const auto& base : bases) {
      for (const auto& dots : dot_candidates()) {
        PatternFamily fam;
        fam.name = name;
        fam.corner_patterns = base.corner_patterns;
        fam.dot_patterns = dots;
        if (pseudo_ok(fam, count_35241, check_52341)) {
          ++satisfying;
          if (!chosen) chosen = {base, fam};
        }
      }
    }
    if (!chosen) {
      throw NoConsistentConvention("no candidate for " +
                                   family_to_string(name));
    }
    result.candidates_satisfying[name] = satisfying;
    return *chosen;
  };

  auto [l_final, pseudo_l] =
      pick_pseudo(FamilyName::PseudoL, l_base, 56, true);
  auto [ammag_final, pseudo_ammag] =
      pick_pseudo(FamilyName::PseudoAmmag, ammag_base, 60, false);
  l_final.name = FamilyName::L;
  ammag_final.name = FamilyName::Ammag;
  result.table.families[FamilyName::L] = l_final;
  result.table.families[FamilyName::Ammag] = ammag_final;
  result.table.families[FamilyName::PseudoL] = pseudo_l;
  result.table.families[FamilyName::PseudoAmmag] = pseudo_ammag;

  for (const auto& [name, count] : result.candidates_satisfying) {
    if (count > 1) result.ambiguous = true;
    std::ostringstream os;
    os << family_to_string(name) << ": " << count
       << " candidate(s) satisfy all anchors";
    result.report.push_back(os.str());
  }
  for (FamilyName f : kAllFamilies) {
    result.report.push_back("chosen " + describe(result.table.at(f)));
  }
  if (result.ambiguous) {
    result.report.push_back(
        "ambiguity: several candidates satisfy the anchors; the first in "
        "canonical preference order was selected");
  }
  return result;
}

}  // namespace permudiag
