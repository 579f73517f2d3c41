#include "permudiag/fillings.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "permudiag/errors.hpp"

namespace permudiag {

std::string family_to_string(FamilyName f) {
  switch (f) {
    case FamilyName::Percentage: return "Percentage";
    case FamilyName::PseudoPercentage: return "PseudoPercentage";
    case FamilyName::Gamma: return "Gamma";
    case FamilyName::L: return "L";
    case FamilyName::Le: return "Le";
    case FamilyName::Ammag: return "Ammag";
    case FamilyName::PseudoL: return "PseudoL";
    case FamilyName::PseudoAmmag: return "PseudoAmmag";
  }
  throw Error("unknown family");
}

FamilyName family_from_string(const std::string& s) {
  for (FamilyName f : kAllFamilies) {
    if (family_to_string(f) == s) return f;
  }
  throw Error("unknown family name: " + s);
}

namespace {

std::string corner_to_string(CornerKind c) {
  switch (c) {
    case CornerKind::NW: return "nw";
    case CornerKind::NE: return "ne";
    case CornerKind::SW: return "sw";
    case CornerKind::SE: return "se";
  }
  throw Error("unknown corner");
}

CornerKind corner_from_string(const std::string& s) {
  if (s == "nw") return CornerKind::NW;
  if (s == "ne") return CornerKind::NE;
  if (s == "sw") return CornerKind::SW;
  if (s == "se") return CornerKind::SE;
  throw Error("unknown corner: " + s);
}

}  // namespace

std::string ConventionTable::to_json() const {
  nlohmann::json out;
  for (const auto& [name, fam] : families) {
    nlohmann::json jfam;
    jfam["rect_patterns"] = nlohmann::json::array();
    for (const auto& r : fam.rect_patterns) {
      jfam["rect_patterns"].push_back(
          {{"nw", r.nw}, {"ne", r.ne}, {"sw", r.sw}, {"se", r.se}});
    }
    jfam["corner_patterns"] = nlohmann::json::array();
    for (const auto& c : fam.corner_patterns) {
      jfam["corner_patterns"].push_back({{"bend", corner_to_string(c.bend)},
                                         {"bend_value", c.bend_value},
                                         {"row_arm_value", c.row_arm_value},
                                         {"col_arm_value", c.col_arm_value}});
    }
    jfam["dot_patterns"] = nlohmann::json::array();
    for (const auto& d : fam.dot_patterns) {
      jfam["dot_patterns"].push_back(
          {{"nw", d.nw}, {"ne", d.ne}, {"sw", d.sw}});
    }
    out["families"][family_to_string(name)] = std::move(jfam);
  }
  return out.dump(2);
}

ConventionTable ConventionTable::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ConventionTable table;
  for (const auto& [key, jfam] : j.at("families").items()) {
    PatternFamily fam;
    fam.name = family_from_string(key);
    for (const auto& r : jfam.at("rect_patterns")) {
      fam.rect_patterns.push_back({r.at("nw").get<int>(), r.at("ne").get<int>(),
                                   r.at("sw").get<int>(),
                                   r.at("se").get<int>()});
    }
    for (const auto& c : jfam.at("corner_patterns")) {
      fam.corner_patterns.push_back(
          {corner_from_string(c.at("bend").get<std::string>()),
           c.at("bend_value").get<int>(), c.at("row_arm_value").get<int>(),
           c.at("col_arm_value").get<int>()});
    }
    for (const auto& d : jfam.at("dot_patterns")) {
      fam.dot_patterns.push_back({d.at("nw").get<int>(), d.at("ne").get<int>(),
                                  d.at("sw").get<int>()});
    }
    table.families[fam.name] = std::move(fam);
  }
  return table;
}

int Filling::ones() const {
  int k = 0;
  for (uint8_t b : bits) k += b;
  return k;
}

// ---------------------------------------------------------------------------
// Pattern instance compilation and backtracking enumeration.
// ---------------------------------------------------------------------------

namespace {

struct Instance {
  // parallel arrays: cell indices into the board's sorted cell list and the
  // forbidden value at each
  std::array<int, 4> cell{};
  std::array<uint8_t, 4> value{};
  int arity = 0;
  int anchor = 0;  // max cell index; the instance is checked there
};

struct CompiledPatterns {
  std::vector<Instance> instances;
  std::vector<std::vector<int>> by_anchor;  // instance ids per cell index

  void finish(int cell_count) {
    by_anchor.assign(cell_count, {});
    for (size_t i = 0; i < instances.size(); ++i) {
      Instance& ins = instances[i];
      ins.anchor = *std::max_element(ins.cell.begin(),
                                     ins.cell.begin() + ins.arity);
      by_anchor[ins.anchor].push_back(static_cast<int>(i));
    }
  }
};

int cell_index(const Board& b, int row, int col) {
  Cell key{row, col};
  auto it = std::lower_bound(b.cells().begin(), b.cells().end(), key);
  if (it == b.cells().end() || !(*it == key)) return -1;
  return static_cast<int>(it - b.cells().begin());
}

void add_instance(CompiledPatterns& out, std::initializer_list<int> cells,
                  std::initializer_list<int> values) {
  Instance ins;
  ins.arity = static_cast<int>(cells.size());
  int i = 0;
  for (int c : cells) ins.cell[i++] = c;
  i = 0;
  for (int v : values) ins.value[i++] = static_cast<uint8_t>(v);
  out.instances.push_back(ins);
}

CompiledPatterns compile_patterns(const Board& board, const Permutation& w,
                                  const PatternFamily& family) {
  CompiledPatterns out;
  int n = board.n();

  if (!family.rect_patterns.empty()) {
    for (int i = 1; i <= n; ++i) {
      for (int i2 = i + 1; i2 <= n; ++i2) {
        for (int j = 1; j <= n; ++j) {
          if (!board.contains(i, j) || !board.contains(i2, j)) continue;
          for (int j2 = j + 1; j2 <= n; ++j2) {
            if (!board.contains(i, j2) || !board.contains(i2, j2)) continue;
            int nw = cell_index(board, i, j), ne = cell_index(board, i, j2);
            int sw = cell_index(board, i2, j), se = cell_index(board, i2, j2);
            for (const auto& r : family.rect_patterns) {
              add_instance(out, {nw, ne, sw, se}, {r.nw, r.ne, r.sw, r.se});
            }
          }
        }
      }
    }
  }

  for (const auto& c : family.corner_patterns) {
    bool row_arm_east =
        (c.bend == CornerKind::NW || c.bend == CornerKind::SW);
    bool col_arm_south =
        (c.bend == CornerKind::NW || c.bend == CornerKind::NE);
    for (const Cell& bend : board.cells()) {
      int b_idx = cell_index(board, bend.row, bend.col);
      for (int j2 = 1; j2 <= n; ++j2) {
        bool east = j2 > bend.col;
        if (j2 == bend.col || east != row_arm_east) continue;
        if (!board.contains(bend.row, j2)) continue;
        int row_arm = cell_index(board, bend.row, j2);
        for (int i2 = 1; i2 <= n; ++i2) {
          bool south = i2 > bend.row;
          if (i2 == bend.row || south != col_arm_south) continue;
          if (!board.contains(i2, bend.col)) continue;
          int col_arm = cell_index(board, i2, bend.col);
          add_instance(out, {b_idx, row_arm, col_arm},
                       {c.bend_value, c.row_arm_value, c.col_arm_value});
        }
      }
    }
  }

  if (!family.dot_patterns.empty()) {
    for (int i2 = 1; i2 <= n; ++i2) {
      int j2 = w(i2);  // permutation entry (i2, j2) plays the SE corner
      for (int i = 1; i < i2; ++i) {
        if (!board.contains(i, j2)) continue;
        int ne = cell_index(board, i, j2);
        for (int j = 1; j < j2; ++j) {
          if (!board.contains(i2, j) || !board.contains(i, j)) continue;
          int sw = cell_index(board, i2, j);
          int nw = cell_index(board, i, j);
          for (const auto& d : family.dot_patterns) {
            add_instance(out, {nw, ne, sw}, {d.nw, d.ne, d.sw});
          }
        }
      }
    }
  }

  out.finish(board.size());
  return out;
}

class FillingEnumerator {
 public:
  FillingEnumerator(const Board& board, const CompiledPatterns& patterns)
      : m_(board.size()), patterns_(patterns), bits_(m_, 0) {
    gf_.assign(m_ + 1, 0);
  }

  FillingCount run() {
    assign(0, 0);
    FillingCount out;
    out.gf = IntPolynomial(gf_);
    for (long long c : gf_) out.count += c;
    return out;
  }

 private:
  void assign(int t, int ones) {
    if (t == m_) {
      gf_[ones]++;
      return;
    }
    for (uint8_t v = 0; v <= 1; ++v) {
      bits_[t] = v;
      bool blocked = false;
      for (int id : patterns_.by_anchor[t]) {
        const Instance& ins = patterns_.instances[id];
        bool match = true;
        for (int k = 0; k < ins.arity; ++k) {
          if (bits_[ins.cell[k]] != ins.value[k]) {
            match = false;
            break;
          }
        }
        if (match) {
          blocked = true;
          break;
        }
      }
      if (!blocked) assign(t + 1, ones + v);
    }
  }

  int m_;
  const CompiledPatterns& patterns_;
  std::vector<uint8_t> bits_;
  std::vector<long long> gf_;
};

}  // namespace

FillingCount count_fillings(const Board& board, const Permutation& w,
                            const PatternFamily& family) {
  if (board.size() > 28) throw BoardTooLarge();
  CompiledPatterns patterns = compile_patterns(board, w, family);
  FillingEnumerator en(board, patterns);
  return en.run();
}

FillingCount enumerate_fillings(const Permutation& w, FamilyName family,
                                const ConventionTable& table) {
  return count_fillings(se_diagram(w), w, table.at(family));
}

FillingCount enumerate_fillings(const Permutation& w, FamilyName family) {
  return enumerate_fillings(w, family, default_conventions());
}

Orientation filling_to_orientation(const Permutation& w, const Filling& f) {
  Board e = se_diagram(w);
  if (!(f.board == e) || f.bits.size() != e.cells().size()) {
    throw BoardMismatch();
  }
  InversionGraph g = inversion_graph(w);
  Permutation winv = w.inverse();
  std::vector<bool> direction(g.edges().size());
  for (size_t t = 0; t < e.cells().size(); ++t) {
    const Cell& c = e.cells()[t];
    int i = c.row;
    int j = winv(c.col);
    std::pair<int, int> edge{std::min(i, j), std::max(i, j)};
    auto it = std::lower_bound(g.edges().begin(), g.edges().end(), edge);
    direction[it - g.edges().begin()] = (f.bits[t] != 0);
  }
  return Orientation{g, direction};
}

const ConventionTable& default_conventions() {
  static ConventionTable table = [] {
    if (const char* path = std::getenv("PERMUDIAG_CONVENTIONS")) {
      std::ifstream in(path);
      if (!in) throw Error(std::string("cannot open conventions: ") + path);
      std::stringstream buf;
      buf << in.rdbuf();
      return ConventionTable::from_json(buf.str());
    }
    std::ifstream in("data/conventions.json");
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      return ConventionTable::from_json(buf.str());
    }
    return calibrate_families().table;
  }();
  return table;
}

}  // namespace permudiag
