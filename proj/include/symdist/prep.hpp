#pragma once

#include <utility>
#include <vector>

#include "symdist/bitvec.hpp"
#include "symdist/gf4.hpp"

namespace symdist {

enum class WeightMode { symplectic, hamming };

// One or three rows sharing a pivot coordinate.  In a 3-package the rows
// carry the three distinct nonzero F4 symbols at the pivot and each row
// equals the sum of the other two, so a codeword never needs more than one
// member per package and pays at least one unit of weight at each pivot it
// uses.  pivot indexes a coordinate pair in symplectic mode and a plain
// column in hamming mode (-1 for hamming rows without a pivot of their own).
struct Package {
    int pivot = -1;
    std::vector<int> rows;
};

// A generator matrix prepared for enumeration: its package partition plus
// the counters the lower-bound formulas consume.
struct PackagedGamma {
    BitMatrix matrix;                // 2n columns (symplectic) or 3n (hamming)
    std::vector<Package> packages;
    WeightMode mode = WeightMode::symplectic;
    int pair_count = 0;              // n
    int n_pp = 0;                    // packages pivoted on principal columns
    int rank_deficit = 0;            // hamming mode: rows minus pivots found

    int n_p() const { return static_cast<int>(packages.size()); }
};

// Coordinate pairs left unpivoted by the first F4 diagonalization.
struct PrincipalColumns {
    std::vector<int> indices;
};

// Constrained F2 diagonalization of an (n+k) x 2n matrix: column moves are
// limited to paired permutations and half swaps, which preserve symplectic
// weights.  The result has shape (I_n | M1 over 0 | M2) with the k pivot
// columns of M2 fully cleared elsewhere, plus k appended rows completing the
// 3-packages.  Throws ValidationError if the rows are dependent or the form
// is unreachable (only possible for invalid stabilizer input).
PackagedGamma diagonalize_f2(const BitMatrix& a);

// Additive-code diagonalization over F4.  Columns are processed left to
// right; a column holding two distinct nonzero symbols among unprocessed
// rows yields a 3-package (all other rows cleared to zero there), a column
// holding a single nonzero symbol yields a 1-package (other rows reduced to
// {0, y} for one fixed y != pivot symbol).  Sum rows completing 3-packages
// are appended in a final pass.  No columns are physically moved, so the
// output shares the input frame.
std::pair<PackagedGamma, PrincipalColumns> diagonalize_f4(const F4Matrix& a4);

// Re-diagonalizes b4 pivoting on principal columns first, then the rest.
// Rows eliminated to zero are dropped and form no packages.  n_pp of the
// result counts packages whose pivot is a principal column.
PackagedGamma second_gamma(const F4Matrix& b4, const PrincipalColumns& pc);

// Row (a | b) -> (a | b | a+b); the Hamming weight of any F2 combination of
// image rows is exactly twice the symplectic weight of the source
// combination.
BitMatrix isometry_transform(const BitMatrix& a);

// Greedy systematic forms on pairwise-disjoint column sets for a full
// row-rank matrix.  The first matrix is systematic on a full information
// set; each following one pivots only on columns unused so far and records
// rank_deficit = n_rows - pivots found.  Stops before a matrix with no
// pivots.  Every returned matrix spans the same rowspace as b.
std::vector<PackagedGamma> information_sets(const BitMatrix& b);

// Every row as its own 1-package; the plain Brouwer-Zimmermann view of a
// matrix with no prepared structure.
PackagedGamma singleton_gamma(const BitMatrix& m, WeightMode mode);

}  // namespace symdist
