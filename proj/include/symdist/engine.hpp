#pragma once

#include <cstdint>
#include <vector>

#include "symdist/prep.hpp"

namespace symdist {

// Candidates are generated from rows of the normalizer, so they always lie
// in the dual code C_perp; a candidate lies outside the stabilizer code C
// itself iff it has nonzero symplectic product with some row spanning
// C_perp.  For k = 0 the code is self-dual and every nonzero codeword
// counts, so the filter is disabled.
struct AdmissibilityFilter {
    BitMatrix normalizer;  // rows spanning C_perp, in the Gamma frame
    bool enabled = false;

    static AdmissibilityFilter disabled();
    static AdmissibilityFilter for_rows(BitMatrix rows, int k);
};

// candidate is a 2n-column vector in the same frame as the filter rows.
bool admissible(const AdmissibilityFilter& f, const BitVector& candidate);

struct BoundsTraceEntry {
    int g;
    long lower;
    long upper;
};

struct BoundsState {
    long lower = 1;
    long upper = 0;     // sentinel (max weight + 1), set by run_bz
    BitVector best;     // best admissible codeword found, Gamma frame
    int generation = 0;
    std::uint64_t candidates_enumerated = 0;
    std::vector<BoundsTraceEntry> trace;
};

// Lower bound valid after generation g has been fully enumerated on every
// matrix in gammas.  One symplectic matrix: g + 1.  Two symplectic matrices
// (second one pivoted on principal columns): g + 1 + max(0, g + 1 + n_pp -
// n_p).  Hamming mode: sum over matrices of max(0, g + 1 - rank_deficit).
long lower_bound(int g, const std::vector<PackagedGamma>& gammas);

// Visits every codeword that is a sum of exactly g rows taken from g
// distinct packages, one member each, reusing prefix sums so a candidate
// costs O(1) row XORs.  Improving candidates must pass the filter before
// the upper bound moves (hamming mode filters the first-2n-column
// projection).  Splitting by the outermost package index across workers
// does not change the resulting bounds.
void enumerate_generation(const PackagedGamma& gamma, int g, BoundsState& state,
                          const AdmissibilityFilter& filter, int workers = 1);

// Generation loop: enumerate g on every matrix, raise the lower bound at
// the generation barrier, stop at L >= U or when some matrix has been
// enumerated through all its packages (the code is then exhausted and U is
// exact).  The returned bounds are independent of the worker count.
BoundsState run_bz(const std::vector<PackagedGamma>& gammas,
                   const AdmissibilityFilter& filter, int workers = 1);

}  // namespace symdist
