#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permudiag/diagram.hpp"
#include "permudiag/invgraph.hpp"
#include "permudiag/permutation.hpp"
#include "permudiag/polynomial.hpp"

namespace permudiag {

enum class FamilyName {
  Percentage,
  PseudoPercentage,
  Gamma,
  L,
  Le,
  Ammag,
  PseudoL,
  PseudoAmmag,
};

std::string family_to_string(FamilyName f);
FamilyName family_from_string(const std::string& s);
inline constexpr std::array<FamilyName, 8> kAllFamilies = {
    FamilyName::Percentage, FamilyName::PseudoPercentage, FamilyName::Gamma,
    FamilyName::L,          FamilyName::Le,               FamilyName::Ammag,
    FamilyName::PseudoL,    FamilyName::PseudoAmmag,
};

enum class CornerKind { NW, NE, SW, SE };

/// Forbidden 2x2 rectangle filling (rows i < i', columns j < j').
struct RectPattern {
  int nw, ne, sw, se;
  bool operator==(const RectPattern&) const = default;
};

/// Forbidden bend-plus-arms configuration. The bend sits at the named
/// rectangle corner; the row arm extends along the bend's row away from the
/// corner, the column arm along its column. Arms may have any positive
/// length.
struct CornerPattern {
  CornerKind bend;
  int bend_value;
  int row_arm_value;
  int col_arm_value;
  bool operator==(const CornerPattern&) const = default;
};

/// Forbidden 3-cell pattern completed by a permutation entry at the SE
/// corner of the rectangle (the only corner where an entry can close a
/// rectangle whose other corners are diagram cells).
struct DotPattern {
  int nw, ne, sw;
  bool operator==(const DotPattern&) const = default;
};

struct PatternFamily {
  FamilyName name = FamilyName::Percentage;
  std::vector<RectPattern> rect_patterns;
  std::vector<CornerPattern> corner_patterns;
  std::vector<DotPattern> dot_patterns;
  bool operator==(const PatternFamily&) const = default;
};

/// The family-name -> pattern-list map fixed by calibration.
struct ConventionTable {
  std::map<FamilyName, PatternFamily> families;

  const PatternFamily& at(FamilyName f) const { return families.at(f); }
  std::string to_json() const;
  static ConventionTable from_json(const std::string& text);
  bool operator==(const ConventionTable&) const = default;
};

/// Active conventions: PERMUDIAG_CONVENTIONS path if set, else
/// data/conventions.json next to the working directory, else a fresh
/// in-process calibration. Computed once.
const ConventionTable& default_conventions();

struct Filling {
  Board board;
  std::vector<uint8_t> bits;  // indexed like board.cells()

  int ones() const;
};

struct FillingCount {
  long long count = 0;
  IntPolynomial gf;  // coefficient of q^k = fillings with k ones
};

/// Fillings of E_w avoiding every pattern of the family; BoardTooLarge when
/// |E_w| > 28.
FillingCount enumerate_fillings(const Permutation& w, FamilyName family);
FillingCount enumerate_fillings(const Permutation& w, FamilyName family,
                                const ConventionTable& table);
/// Engine entry point: explicit board and pattern set. The permutation is
/// consulted only for dot patterns.
FillingCount count_fillings(const Board& board, const Permutation& w,
                            const PatternFamily& family);

/// Cell (i, w_j) of E_w corresponds to the edge {i, j} of G_w; a 1 directs
/// the edge toward the larger vertex. BoardMismatch when f.board != E_w.
Orientation filling_to_orientation(const Permutation& w, const Filling& f);

// --- calibration ---------------------------------------------------------

struct InjectedAnchor {
  FamilyName family;
  std::string w;       // one-line word
  long long expected;  // required count of avoiding fillings
};

struct AnchorOptions {
  bool ao_gamma = true;          // #Gamma(E_w) = AO(G_w), 321-avoiders
  bool bruhat_gf = true;         // F^L = F^Ammag = q^ell P_w(1/q), 321-avoiders
  bool counts_351624 = true;     // 98 Gamma- and 100 L-fillings
  bool pseudo_counts = true;     // 56/60 at 35241, PF^L_52341(1) = 72
  bool le_percentage = true;     // #Le = #Percentage on skew shapes
  bool pseudo_gf_small = true;   // PF^pi = q^ell P_w(1/q), GR w, small n
  int n_cap = 5;                 // sweep bound for the 321-avoiding anchors
  int pseudo_n_cap = 4;          // sweep bound for the pseudo GF anchor
  std::vector<InjectedAnchor> injected;
};

struct CalibrationResult {
  ConventionTable table;
  std::map<FamilyName, int> candidates_satisfying;  // searched families only
  bool ambiguous = false;
  std::vector<std::string> report;
};

/// Searches corner orientations, value polarities, and one-or-two-pattern
/// sets for each calibrated family, keeping the assignments consistent with
/// every enabled anchor. Throws NoConsistentConvention when a family has no
/// satisfying candidate; when several remain, the first in canonical
/// preference order is chosen and the result is flagged ambiguous.
CalibrationResult calibrate_families(const AnchorOptions& options = {});

}  // namespace permudiag
