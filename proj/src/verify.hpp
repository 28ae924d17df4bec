#pragma once

#include <optional>
#include <string>
#include <vector>

#include "checked.hpp"

namespace simcore {

// One checked claim over one parameter grid.  Conjectures report
// "EXPERIMENTAL-verified" when they hold; theorem regressions report
// "verified".  A counterexample never aborts the run; the first one (in
// lexicographic grid order) is recorded and checking continues.
struct Report {
    std::string claim;
    std::string params;   // rendered as compact JSON
    std::string status;   // "verified" | "EXPERIMENTAL-verified" | "counterexample"
    std::optional<std::string> witness;
    i64 elapsed_ms = 0;

    bool ok() const { return status != "counterexample"; }
};

// Eq-of-counts regression: enumerated (a,b)-core and self-conjugate counts
// against the closed formulas, coprime a < b <= max_ab.
std::vector<Report> verify_counts(int max_ab);
// Average-size conjecture, both families, coprime a < b <= max_ab.
std::vector<Report> verify_avg(int max_ab);
// Olsson-Stanton maximum: size (a^2-1)(b^2-1)/24, unique, self-conjugate.
std::vector<Report> verify_max(int max_ab);
// Major-index generating functions: type A for n <= max_n, type C likewise.
std::vector<Report> verify_maj(int max_n);
// Skew-length conjecture: sum q^(ell+sl) = Cat_q(a,b).
std::vector<Report> verify_skew(int max_ab);
// q,t-symmetry conjecture for (ell, sl') generating functions.
std::vector<Report> verify_qt_symmetry(int max_ab);
// Cat_q(a,b) at q = -1 equals the self-conjugate count.
std::vector<Report> verify_sieving(int max_ab);
// Flush characterization of m-minimal/m-bounded alcoves against the
// geometric oracle, plus region counts.
std::vector<Report> verify_shi(int max_rank, int max_m);

// claim in {all, counts, avg, max, maj, skew, qt, sieving, shi}; negative
// grid arguments select the default grids.
std::vector<Report> run_verification(const std::string& claim, int max_ab, int max_n, int max_m);

}  // namespace simcore
