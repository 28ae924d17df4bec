#pragma once

#include <functional>
#include <string>
#include <vector>

#include "partition.hpp"

namespace simcore {

enum class Step : char { N = 'N', E = 'E' };

// A finite N/E lattice path starting at the origin.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}
    static LatticePath parse(const std::string& s);

    const std::vector<Step>& steps() const { return steps_; }
    i64 east() const;
    i64 north() const;
    std::string str() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
        return a.steps_ <=> b.steps_;
    }

private:
    std::vector<Step> steps_;
};

// Major index: sum of the vertex indices i (origin = vertex 0) where step i
// is E and step i+1 is N, steps numbered from 1.
i64 maj(const LatticePath& p);

// Yields every N/E path (0,0) -> (b,a) exactly once, in lexicographic order
// of the step string with N < E; above_diagonal keeps only paths weakly
// above y = (a/b)x.
void enumerate_paths(i64 b, i64 a, bool above_diagonal,
                     const std::function<void(const LatticePath&)>& fn);
std::vector<LatticePath> list_paths(i64 b, i64 a, bool above_diagonal);

// Label of the grid box with corners (x,y), (x+1,y+1): right neighbors drop
// by a (a-flush read horizontally), upper neighbors grow by b (b-flush read
// vertically).
struct AndersonGrid {
    i64 a, b;
    i64 label(i64 x, i64 y) const { return -a * (x + 1) + b * y; }
};

// Same lattice with the constant chosen so the bead/gap antisymmetry of a
// self-conjugate core matches the grid's half-turn.
struct FmsGrid {
    i64 a, b;
    i64 offset() const { return a % 2 == 0 ? (1 + b - a) / 2 : (1 + 2 * b - a) / 2; }
    i64 label(i64 x, i64 y) const { return offset() - a * x + b * y; }
};

// Anderson bijection: (a,b)-cores <-> N/E paths (0,0) -> (b,a) weakly above
// y = (a/b)x.  Beads sit below-right of the path on the AndersonGrid.
LatticePath anderson_core_to_path(const Partition& p, i64 a, i64 b);
Partition anderson_path_to_core(const LatticePath& path, i64 a, i64 b);

// Ford-Mai-Sze bijection: self-conjugate (a,b)-cores <-> unrestricted N/E
// paths (0,0) -> (floor(b/2), floor(a/2)), the first half of the full
// dividing path on the FmsGrid.
LatticePath fms_core_to_path(const Partition& p, i64 a, i64 b);
Partition fms_path_to_core(const LatticePath& half, i64 a, i64 b);

// Drops the forced final E step of an above-diagonal path to (n+1, n),
// giving the classical Dyck path to (n, n).
LatticePath classical_dyck_from_rational(const LatticePath& path, i64 n);

}  // namespace simcore
