#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symdist/bitvec.hpp"
#include "symdist/engine.hpp"

namespace symdist {

// Normalizer matrix of a qubit stabilizer code: (n+k) x 2n over F2, rows
// spanning the dual code C_perp.  k may be negative for illustrative
// engine-level inputs; validation rejects such shapes.
struct StabilizerInstance {
    BitMatrix a;
    int n = 0;
    int k = 0;

    static StabilizerInstance from_matrix(BitMatrix m);
};

enum class Algorithm {
    auto_select,
    saved_1_gamma,
    saved_2_gamma,
    saved_isometry,
    brute_force,
};

const char* algorithm_name(Algorithm alg);

struct RunOptions {
    int workers = 1;
    bool validate = true;
    bool dual_filter = true;  // off: plain rowspace minimum symplectic weight
};

struct ValidationResult {
    bool ok = true;
    std::string message;
};

struct DistanceReport {
    int distance = 0;
    Algorithm algorithm = Algorithm::auto_select;
    int generations = 0;
    std::uint64_t candidates_enumerated = 0;
    double elapsed_seconds = 0.0;
    int workers = 1;
    std::vector<BoundsTraceEntry> bounds_trace;
};

// Checks full row rank and C subset of C_perp.  Returns the first
// violation found instead of throwing.
ValidationResult validate_normalizer(const StabilizerInstance& inst);

// Single-Gamma algorithm: constrained F2 diagonalization, then the
// modified Brouwer-Zimmermann loop in symplectic mode.
DistanceReport saved_1_gamma(const StabilizerInstance& inst, const RunOptions& opts = {});

// Two-Gamma algorithm: F4 conversion, packaged diagonalization, second
// diagonalization on principal columns, then the loop over both matrices.
DistanceReport saved_2_gamma(const StabilizerInstance& inst, const RunOptions& opts = {});

// Isometry algorithm: (a | b | a+b) image, disjoint information sets,
// Hamming-mode loop, result halved.
DistanceReport saved_isometry(const StabilizerInstance& inst, const RunOptions& opts = {});

// Exhaustive oracle over all 2^(n+k) - 1 row combinations via Gray-code
// incremental XOR; refuses n + k > 28.
DistanceReport brute_force_distance(const StabilizerInstance& inst, const RunOptions& opts = {});

DistanceReport compute_distance(const StabilizerInstance& inst, Algorithm alg,
                                const RunOptions& opts = {});

// Deterministic random instance: grows a self-orthogonal code of dimension
// n-k by rejection sampling, then takes a basis of its symplectic dual as
// the normalizer.  Always passes validate_normalizer.
StabilizerInstance random_stabilizer(int n, int k, std::uint64_t seed);

}  // namespace symdist
