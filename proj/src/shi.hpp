#pragma once

#include <string>
#include <vector>

#include "abacus.hpp"
#include "partition.hpp"

namespace simcore {

// One configuration of the m-Shi arrangement: type A_{n-1} (family TypeA,
// rank n >= 2) or C_n (rank n >= 1).
struct ShiConfig {
    Family family;
    int rank;  // n
    int m;

    ShiConfig(Family f, int n, int m_);
    AbacusKind kind() const { return AbacusKind(family, rank); }
    int runners() const { return kind().runners(); }
    int labels_per_row() const { return kind().labels_per_row(); }
};

// Positive roots: e_i - e_j and (type C only) e_i + e_j, 2e_i.
struct PositiveRoot {
    enum Kind { EiMinusEj, EiPlusEj, TwoEi } kind;
    int i, j;  // 1 <= i < j <= n; j unused for TwoEi

    std::string str() const;
    friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

// All positive roots of the configuration, in a fixed order: differences
// (lex by i, j), then sums, then 2e_i by increasing i.
std::vector<PositiveRoot> positive_roots(const ShiConfig& cfg);

// floor of the inner product of the alcove with the root, read off the
// window: e_i - e_j -> (w(j) - w(i))/N, e_i + e_j -> (w(2n+1-j) - w(i))/N,
// 2e_i -> (w(2n+1-i) - w(i))/N.  Defined for any window; nonnegative on
// dominant (sorted) ones.
i64 floor_coordinate(const AffineWindow& w, const PositiveRoot& r, const ShiConfig& cfg);

// A dominant alcove: strictly increasing window.  Validates the window
// (residues, type-A balance / type-C mirror).
struct DominantAlcove {
    AffineWindow window;

    static DominantAlcove from_window(AffineWindow w, const ShiConfig& cfg);
};

// Requires a dominant window.
i64 shi_coordinate(const DominantAlcove& a, const PositiveRoot& r, const ShiConfig& cfg);

// Right descents s_i read off the defining beads: s_i is a descent iff the
// defining bead of column i+1 sits at least N past the defining bead of
// column i (column 0 = column R).  Indices 0..n-1 in type A, 0..n in type C.
std::vector<int> right_descents(const AffineWindow& w, const ShiConfig& cfg);

// Window of the adjacent alcove across wall i (right multiplication by s_i).
AffineWindow apply_right_reflection(const AffineWindow& w, int i, const ShiConfig& cfg);

// Number of hyperplanes separating the alcove from the fundamental one.
i64 alcove_length(const AffineWindow& w, const ShiConfig& cfg);

// Flush characterizations: m-minimal <=> (Rm+1)-flush, m-bounded <=>
// (Rm-1)-flush.
bool is_m_minimal(const DominantAlcove& a, const ShiConfig& cfg);
bool is_m_bounded(const DominantAlcove& a, const ShiConfig& cfg);

enum class AlcoveSelection { Minimal, Bounded };

// The m-minimal (resp. m-bounded) dominant alcoves, produced by enumerating
// the matching core family — type A: (n, mn+1)- resp. (n, mn-1)-cores;
// type C: self-conjugate (2n, 2mn+1)- resp. (2n, 2mn-1)-cores — and
// converting each to its balanced window.  Asserts the flush predicate.
struct AlcoveRecord {
    AffineWindow window;
    Partition core;
};
std::vector<AlcoveRecord> enumerate_dominant(const ShiConfig& cfg, AlcoveSelection which);

// Independent geometric check: enumerates every dominant window whose
// coordinates stay <= m+1, groups alcoves into Shi regions by the clipped
// coordinate signature (min(k_alpha, m)), and selects the shortest alcove
// per region (Minimal) or, for regions that never reach the m+1 cap, the
// longest (Bounded).  Small ranks only: n <= 4 in type A, n <= 3 in type C,
// m <= 2.
std::vector<AffineWindow> oracle_alcoves(const ShiConfig& cfg, AlcoveSelection which);

// Core of a dominant alcove (partition of the balanced abacus).
Partition alcove_core(const DominantAlcove& a, const ShiConfig& cfg);

}  // namespace simcore
