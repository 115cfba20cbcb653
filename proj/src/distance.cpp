#include "symdist/distance.hpp"

#include <bit>
#include <chrono>
#include <limits>
#include <random>
#include <stdexcept>

#include "symdist/errors.hpp"
#include "symdist/prep.hpp"

namespace symdist {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void maybe_validate(const StabilizerInstance& inst, const RunOptions& opts) {
    if (!opts.validate) return;
    const ValidationResult res = validate_normalizer(inst);
    if (!res.ok) throw ValidationError(res.message);
}

AdmissibilityFilter make_filter(BitMatrix frame_rows, const StabilizerInstance& inst,
                                const RunOptions& opts) {
    if (!opts.dual_filter) return AdmissibilityFilter::disabled();
    return AdmissibilityFilter::for_rows(std::move(frame_rows), inst.k);
}

DistanceReport report_from_state(Algorithm alg, const BoundsState& state, int distance,
                                 int workers, double elapsed) {
    DistanceReport rep;
    rep.distance = distance;
    rep.algorithm = alg;
    rep.generations = state.generation;
    rep.candidates_enumerated = state.candidates_enumerated;
    rep.elapsed_seconds = elapsed;
    rep.workers = workers;
    rep.bounds_trace = state.trace;
    return rep;
}

}  // namespace

StabilizerInstance StabilizerInstance::from_matrix(BitMatrix m) {
    if (m.n_cols() == 0 || m.n_cols() % 2 != 0) {
        throw std::invalid_argument("StabilizerInstance: column count must be even and nonzero");
    }
    StabilizerInstance inst;
    inst.n = static_cast<int>(m.n_cols() / 2);
    inst.k = static_cast<int>(m.n_rows()) - inst.n;
    inst.a = std::move(m);
    return inst;
}

const char* algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::auto_select: return "auto";
        case Algorithm::saved_1_gamma: return "saved_1_gamma";
        case Algorithm::saved_2_gamma: return "saved_2_gamma";
        case Algorithm::saved_isometry: return "saved_isometry";
        case Algorithm::brute_force: return "brute_force";
    }
    return "?";
}

ValidationResult validate_normalizer(const StabilizerInstance& inst) {
    const std::size_t rows = inst.a.n_rows();
    if (rows == 0) return {false, "matrix has no rows"};
    if (inst.k < 0) {
        return {false, "matrix has fewer rows than n; a normalizer needs n+k >= n rows"};
    }
    if (rows > 2 * static_cast<std::size_t>(inst.n)) {
        return {false, "matrix has more rows than columns; rows cannot be independent"};
    }
    if (rank(inst.a) != rows) {
        return {false, "rows are linearly dependent (rank below n+k)"};
    }
    // C = symplectic dual of the rowspace; the stabilizer condition is that
    // C lies inside the rowspace itself.
    const BitMatrix dual = symplectic_dual_basis(inst.a);
    for (std::size_t r = 0; r < dual.n_rows(); ++r) {
        if (!in_rowspace(inst.a, dual.row(r))) {
            return {false, "not a stabilizer normalizer: dual vector " +
                               dual.row(r).to_string() + " lies outside the rowspace"};
        }
    }
    return {true, ""};
}

DistanceReport saved_1_gamma(const StabilizerInstance& inst, const RunOptions& opts) {
    const auto start = Clock::now();
    maybe_validate(inst, opts);

    PackagedGamma gamma = diagonalize_f2(inst.a);
    // The diagonalization permutes coordinate pairs, so the filter has to
    // test products in the permuted frame; the first n+k prepared rows span
    // the same code there.
    BitMatrix frame_rows(0, gamma.matrix.n_cols());
    for (std::size_t r = 0; r < inst.a.n_rows(); ++r) {
        frame_rows.append_row(gamma.matrix.row(r));
    }
    const AdmissibilityFilter filter = make_filter(std::move(frame_rows), inst, opts);
    std::vector<PackagedGamma> gammas;
    gammas.push_back(std::move(gamma));
    const BoundsState state = run_bz(gammas, filter, opts.workers);
    return report_from_state(Algorithm::saved_1_gamma, state, static_cast<int>(state.upper),
                             opts.workers, seconds_since(start));
}

DistanceReport saved_2_gamma(const StabilizerInstance& inst, const RunOptions& opts) {
    const auto start = Clock::now();
    maybe_validate(inst, opts);

    const F4Matrix a4 = to_gf4(inst.a);
    auto [b_gamma, principal] = diagonalize_f4(a4);
    const F4Matrix b4 = to_gf4(b_gamma.matrix);
    PackagedGamma d_gamma = second_gamma(b4, principal);

    // No column moves happen on the F4 path, so the original matrix is
    // already in the codeword frame.
    const AdmissibilityFilter filter = make_filter(inst.a, inst, opts);
    std::vector<PackagedGamma> gammas;
    gammas.push_back(std::move(b_gamma));
    gammas.push_back(std::move(d_gamma));
    const BoundsState state = run_bz(gammas, filter, opts.workers);
    return report_from_state(Algorithm::saved_2_gamma, state, static_cast<int>(state.upper),
                             opts.workers, seconds_since(start));
}

DistanceReport saved_isometry(const StabilizerInstance& inst, const RunOptions& opts) {
    const auto start = Clock::now();
    maybe_validate(inst, opts);

    const BitMatrix image = isometry_transform(inst.a);
    const std::vector<PackagedGamma> gammas = information_sets(image);
    const AdmissibilityFilter filter = make_filter(inst.a, inst, opts);
    const BoundsState state = run_bz(gammas, filter, opts.workers);
    if (state.upper % 2 != 0) {
        throw InternalError("saved_isometry: image Hamming distance must be even");
    }
    return report_from_state(Algorithm::saved_isometry, state,
                             static_cast<int>(state.upper / 2), opts.workers,
                             seconds_since(start));
}

DistanceReport brute_force_distance(const StabilizerInstance& inst, const RunOptions& opts) {
    const auto start = Clock::now();
    maybe_validate(inst, opts);

    const int rows = static_cast<int>(inst.a.n_rows());
    if (rows > 28) {
        throw std::invalid_argument(
            "brute_force_distance: 2^(n+k) enumeration is limited to n+k <= 28 rows");
    }
    if (rows == 0) throw std::invalid_argument("brute_force_distance: matrix has no rows");

    const bool filter_on = opts.dual_filter && inst.k >= 1;
    const std::size_t n = static_cast<std::size_t>(inst.n);
    const std::size_t wpb = (n + 63) / 64;

    // Split rows once; the Gray walk then flips one row per step.
    std::vector<std::uint64_t> row_a(static_cast<std::size_t>(rows) * wpb, 0);
    std::vector<std::uint64_t> row_b(static_cast<std::size_t>(rows) * wpb, 0);
    for (int r = 0; r < rows; ++r) {
        const SymplecticSplit split = SymplecticSplit::from_vector(inst.a.row(static_cast<std::size_t>(r)));
        std::copy(split.a_words.begin(), split.a_words.end(),
                  row_a.begin() + static_cast<std::size_t>(r) * wpb);
        std::copy(split.b_words.begin(), split.b_words.end(),
                  row_b.begin() + static_cast<std::size_t>(r) * wpb);
    }

    // syndrome[i] bit j = <row_i, row_j>; a combination lies in C iff its
    // accumulated syndrome is zero.
    std::vector<std::uint64_t> syndrome(static_cast<std::size_t>(rows), 0);
    if (filter_on) {
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < rows; ++j) {
                if (symplectic_inner_product(inst.a.row(static_cast<std::size_t>(i)),
                                             inst.a.row(static_cast<std::size_t>(j)))) {
                    syndrome[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                }
            }
        }
    }

    std::vector<std::uint64_t> acc_a(wpb, 0);
    std::vector<std::uint64_t> acc_b(wpb, 0);
    std::uint64_t acc_syndrome = 0;
    long best = std::numeric_limits<long>::max();
    const std::uint64_t total = (std::uint64_t{1} << rows) - 1;
    for (std::uint64_t m = 1; m <= total; ++m) {
        const int flip = std::countr_zero(m);
        const std::uint64_t* ra = row_a.data() + static_cast<std::size_t>(flip) * wpb;
        const std::uint64_t* rb = row_b.data() + static_cast<std::size_t>(flip) * wpb;
        for (std::size_t w = 0; w < wpb; ++w) {
            acc_a[w] ^= ra[w];
            acc_b[w] ^= rb[w];
        }
        acc_syndrome ^= syndrome[static_cast<std::size_t>(flip)];
        if (filter_on && acc_syndrome == 0) continue;
        long weight = 0;
        for (std::size_t w = 0; w < wpb; ++w) {
            weight += std::popcount(acc_a[w] | acc_b[w]);
        }
        if (weight < best) best = weight;
    }
    if (best == std::numeric_limits<long>::max()) {
        throw InternalError("brute_force_distance: no admissible codeword exists");
    }

    DistanceReport rep;
    rep.distance = static_cast<int>(best);
    rep.algorithm = Algorithm::brute_force;
    rep.generations = 0;
    rep.candidates_enumerated = total;
    rep.elapsed_seconds = seconds_since(start);
    rep.workers = 1;
    return rep;
}

DistanceReport compute_distance(const StabilizerInstance& inst, Algorithm alg,
                                const RunOptions& opts) {
    switch (alg) {
        case Algorithm::saved_1_gamma: return saved_1_gamma(inst, opts);
        case Algorithm::saved_2_gamma: return saved_2_gamma(inst, opts);
        case Algorithm::saved_isometry: return saved_isometry(inst, opts);
        case Algorithm::brute_force: return brute_force_distance(inst, opts);
        case Algorithm::auto_select:
            // The isometry route wins on most inputs; two matrices pay off
            // when k is small enough for the second one to raise the bound.
            if (inst.k <= 2) return saved_2_gamma(inst, opts);
            return saved_isometry(inst, opts);
    }
    throw std::invalid_argument("compute_distance: unknown algorithm");
}

StabilizerInstance random_stabilizer(int n, int k, std::uint64_t seed) {
    if (n <= 0 || k < 0 || k > n) {
        throw std::invalid_argument("random_stabilizer: need 0 <= k <= n, n >= 1");
    }
    std::mt19937_64 rng(seed);
    const std::size_t cols = 2 * static_cast<std::size_t>(n);
    const int dim_c = n - k;

    // Grow a self-orthogonal C one vector at a time.  Each draw is uniform
    // over the subspace orthogonal to the rows chosen so far (a random
    // combination of a kernel basis), so only dependence needs rejection;
    // plain rejection from the full space would succeed with probability
    // 2^-m at step m and never finish at useful sizes.
    BitMatrix c(0, cols);
    BitMatrix echelon(0, cols);
    std::vector<std::size_t> pivots;
    while (static_cast<int>(c.n_rows()) < dim_c) {
        BitMatrix swapped(0, cols);
        for (std::size_t r = 0; r < c.n_rows(); ++r) {
            swapped.append_row(swap_halves(c.row(r)));
        }
        const BitMatrix orth_basis = null_space(swapped);
        for (;;) {
            BitVector v(cols);
            const std::size_t dim = orth_basis.n_rows();
            const std::size_t words = (dim + 63) / 64;
            std::vector<std::uint64_t> draw(words);
            for (std::size_t w = 0; w < words; ++w) draw[w] = rng();
            for (std::size_t i = 0; i < dim; ++i) {
                if ((draw[i / 64] >> (i % 64)) & 1u) v ^= orth_basis.row(i);
            }
            // Independence: reduce against the echelon copy kept alongside.
            BitVector residue = v;
            for (std::size_t r = 0; r < echelon.n_rows(); ++r) {
                if (residue.get(pivots[r])) residue ^= echelon.row(r);
            }
            if (residue.is_zero()) continue;
            std::size_t pivot = 0;
            while (!residue.get(pivot)) ++pivot;
            c.append_row(std::move(v));
            echelon.append_row(std::move(residue));
            pivots.push_back(pivot);
            break;
        }
    }

    // A self-orthogonal C is inside its own symplectic dual, so a basis of
    // that dual is a valid normalizer matrix.
    BitMatrix swapped(0, cols);
    for (std::size_t r = 0; r < c.n_rows(); ++r) swapped.append_row(swap_halves(c.row(r)));
    BitMatrix a = null_space(swapped);
    return StabilizerInstance::from_matrix(std::move(a));
}

}  // namespace symdist
