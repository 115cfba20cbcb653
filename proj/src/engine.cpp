#include "symdist/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "symdist/errors.hpp"

namespace symdist {

AdmissibilityFilter AdmissibilityFilter::disabled() { return {}; }

AdmissibilityFilter AdmissibilityFilter::for_rows(BitMatrix rows, int k) {
    AdmissibilityFilter f;
    f.normalizer = std::move(rows);
    f.enabled = k >= 1;
    return f;
}

bool admissible(const AdmissibilityFilter& f, const BitVector& candidate) {
    if (!f.enabled) return true;
    for (std::size_t r = 0; r < f.normalizer.n_rows(); ++r) {
        if (symplectic_inner_product(candidate, f.normalizer.row(r)) != 0) return true;
    }
    return false;
}

long lower_bound(int g, const std::vector<PackagedGamma>& gammas) {
    if (gammas.empty()) throw std::invalid_argument("lower_bound: no generator matrices");
    if (gammas[0].mode == WeightMode::hamming) {
        long sum = 0;
        for (const PackagedGamma& gam : gammas) {
            sum += std::max(0L, static_cast<long>(g) + 1 - gam.rank_deficit);
        }
        return sum;
    }
    if (gammas.size() == 1) return static_cast<long>(g) + 1;
    if (gammas.size() == 2) {
        const PackagedGamma& d = gammas[1];
        return (static_cast<long>(g) + 1) +
               std::max(0L, static_cast<long>(g) + 1 + d.n_pp - d.n_p());
    }
    throw std::invalid_argument("lower_bound: symplectic mode takes one or two matrices");
}

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Row storage for the hot loop.  Symplectic rows keep their halves in two
// word blocks so the weight is popcount(a | b) word by word; hamming rows
// are kept packed as-is and weighed with a plain popcount.
struct EnumMatrix {
    WeightMode mode = WeightMode::symplectic;
    std::size_t n = 0;       // coordinate pairs; filter projects onto 2n columns
    std::size_t wpb = 0;     // words per block, symplectic layout
    std::size_t stride = 0;  // words per row
    std::size_t n_cols = 0;
    std::vector<std::uint64_t> rows;
    const PackagedGamma* gamma = nullptr;

    const std::uint64_t* row_ptr(int r) const {
        return rows.data() + static_cast<std::size_t>(r) * stride;
    }
};

EnumMatrix build_enum_matrix(const PackagedGamma& gamma) {
    EnumMatrix em;
    em.mode = gamma.mode;
    em.gamma = &gamma;
    em.n_cols = gamma.matrix.n_cols();
    em.n = static_cast<std::size_t>(gamma.pair_count);
    const std::size_t n_rows = gamma.matrix.n_rows();
    if (gamma.mode == WeightMode::symplectic) {
        em.wpb = words_for(em.n);
        em.stride = 2 * em.wpb;
        em.rows.assign(n_rows * em.stride, 0);
        for (std::size_t r = 0; r < n_rows; ++r) {
            std::uint64_t* dst = em.rows.data() + r * em.stride;
            copy_bit_range(gamma.matrix.row(r), 0, em.n, dst);
            copy_bit_range(gamma.matrix.row(r), em.n, em.n, dst + em.wpb);
        }
    } else {
        em.stride = words_for(em.n_cols);
        em.rows.assign(n_rows * em.stride, 0);
        for (std::size_t r = 0; r < n_rows; ++r) {
            const std::vector<std::uint64_t>& src = gamma.matrix.row(r).words();
            std::copy(src.begin(), src.end(), em.rows.begin() + r * em.stride);
        }
    }
    return em;
}

struct SharedBound {
    std::atomic<long> upper;
    std::mutex mtx;
    long best_weight = 0;
    BitVector best;
    bool has_best = false;
};

BitVector materialize(const EnumMatrix& em, const std::uint64_t* prefix,
                      const std::uint64_t* mrow) {
    std::vector<std::uint64_t> scratch(em.stride);
    for (std::size_t i = 0; i < em.stride; ++i) scratch[i] = prefix[i] ^ mrow[i];
    if (em.mode == WeightMode::symplectic) {
        SymplecticSplit split;
        split.n = em.n;
        split.a_words.assign(scratch.begin(), scratch.begin() + em.wpb);
        split.b_words.assign(scratch.begin() + em.wpb, scratch.end());
        return split.to_vector();
    }
    BitVector v(em.n_cols);
    for (std::size_t i = 0; i < em.n_cols; ++i) {
        if ((scratch[i / kWordBits] >> (i % kWordBits)) & 1u) v.set(i, true);
    }
    return v;
}

template <WeightMode Mode>
long leaf_weight(const EnumMatrix& em, const std::uint64_t* p, const std::uint64_t* m) {
    long w = 0;
    if constexpr (Mode == WeightMode::symplectic) {
        const std::size_t wpb = em.wpb;
        for (std::size_t i = 0; i < wpb; ++i) {
            w += std::popcount((p[i] ^ m[i]) | (p[i + wpb] ^ m[i + wpb]));
        }
    } else {
        for (std::size_t i = 0; i < em.stride; ++i) {
            w += std::popcount(p[i] ^ m[i]);
        }
    }
    return w;
}

template <WeightMode Mode>
struct Worker {
    const EnumMatrix& em;
    int g;
    const AdmissibilityFilter& filter;
    SharedBound& shared;
    std::vector<std::uint64_t> stack;  // prefix sums for depths 1..g-1
    std::vector<std::uint64_t> zeros;
    std::uint64_t candidates = 0;
    long local_upper = 0;

    Worker(const EnumMatrix& em_, int g_, const AdmissibilityFilter& filter_,
           SharedBound& shared_)
        : em(em_), g(g_), filter(filter_),
          shared(shared_),
          stack(static_cast<std::size_t>(g_ > 1 ? g_ - 1 : 0) * em_.stride, 0),
          zeros(em_.stride, 0),
          local_upper(shared_.upper.load(std::memory_order_relaxed)) {}

    // Improving candidate: re-check the live bound, apply the filter, then
    // publish with a compare-and-swap min-update.  A stale local bound only
    // costs wasted weight computations, never a wrong result.
    void offer(long w, const std::uint64_t* prefix, const std::uint64_t* mrow) {
        local_upper = shared.upper.load(std::memory_order_relaxed);
        if (w >= local_upper) return;
        const BitVector cand = materialize(em, prefix, mrow);
        if (filter.enabled) {
            if constexpr (Mode == WeightMode::hamming) {
                BitVector proj(2 * em.n);
                for (std::size_t i = 0; i < 2 * em.n; ++i) {
                    if (cand.get(i)) proj.set(i, true);
                }
                if (!admissible(filter, proj)) return;
            } else {
                if (!admissible(filter, cand)) return;
            }
        }
        long cur = shared.upper.load(std::memory_order_relaxed);
        while (w < cur &&
               !shared.upper.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
        }
        {
            std::lock_guard<std::mutex> lock(shared.mtx);
            if (!shared.has_best || w < shared.best_weight) {
                shared.best_weight = w;
                shared.best = cand;
                shared.has_best = true;
            }
        }
        local_upper = shared.upper.load(std::memory_order_relaxed);
    }

    void leaves(const Package& pkg, const std::uint64_t* prefix) {
        for (int r : pkg.rows) {
            const std::uint64_t* mrow = em.row_ptr(r);
            ++candidates;
            const long w = leaf_weight<Mode>(em, prefix, mrow);
            if (w < local_upper) offer(w, prefix, mrow);
        }
    }

    void descend(int depth, int first_pkg, const std::uint64_t* prefix) {
        const std::vector<Package>& pkgs = em.gamma->packages;
        const int np = static_cast<int>(pkgs.size());
        const int remaining = g - depth;
        for (int p = first_pkg; p <= np - remaining; ++p) {
            const Package& pkg = pkgs[p];
            if (remaining == 1) {
                leaves(pkg, prefix);
            } else {
                std::uint64_t* next = stack.data() + static_cast<std::size_t>(depth) * em.stride;
                for (int r : pkg.rows) {
                    const std::uint64_t* mrow = em.row_ptr(r);
                    for (std::size_t i = 0; i < em.stride; ++i) next[i] = prefix[i] ^ mrow[i];
                    descend(depth + 1, p + 1, next);
                }
            }
        }
    }

    // Contiguous blocks of the outermost package index are handed out
    // through a shared counter; each worker keeps its own prefix stack.
    void run(std::atomic<int>& dispenser) {
        const std::vector<Package>& pkgs = em.gamma->packages;
        const int np = static_cast<int>(pkgs.size());
        for (;;) {
            const int i1 = dispenser.fetch_add(1, std::memory_order_relaxed);
            if (i1 > np - g) break;
            const Package& pkg = pkgs[i1];
            if (g == 1) {
                leaves(pkg, zeros.data());
            } else {
                std::uint64_t* next = stack.data();
                for (int r : pkg.rows) {
                    const std::uint64_t* mrow = em.row_ptr(r);
                    std::copy(mrow, mrow + em.stride, next);
                    descend(1, i1 + 1, next);
                }
            }
        }
    }
};

template <WeightMode Mode>
void enumerate_built(const EnumMatrix& em, int g, BoundsState& state,
                     const AdmissibilityFilter& filter, int workers) {
    SharedBound shared;
    shared.upper.store(state.upper, std::memory_order_relaxed);
    shared.has_best = state.best.size() != 0;
    shared.best = state.best;
    shared.best_weight = shared.has_best ? state.upper : 0;

    std::atomic<int> dispenser{0};
    std::atomic<std::uint64_t> total{0};
    auto body = [&]() {
        Worker<Mode> worker(em, g, filter, shared);
        worker.run(dispenser);
        total.fetch_add(worker.candidates, std::memory_order_relaxed);
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(body);
        for (std::thread& t : pool) t.join();
    }
    state.upper = shared.upper.load(std::memory_order_relaxed);
    if (shared.has_best) state.best = shared.best;
    state.candidates_enumerated += total.load(std::memory_order_relaxed);
}

void enumerate_dispatch(const EnumMatrix& em, int g, BoundsState& state,
                        const AdmissibilityFilter& filter, int workers) {
    const int np = em.gamma->n_p();
    if (g < 1 || g > np) {
        throw std::invalid_argument("enumerate_generation: generation out of range");
    }
    if (filter.enabled && filter.normalizer.n_cols() != 2 * em.n) {
        throw std::invalid_argument("enumerate_generation: filter frame mismatch");
    }
    if (em.mode == WeightMode::symplectic) {
        enumerate_built<WeightMode::symplectic>(em, g, state, filter, workers);
    } else {
        enumerate_built<WeightMode::hamming>(em, g, state, filter, workers);
    }
}

long sentinel_upper(const PackagedGamma& gamma) {
    if (gamma.mode == WeightMode::symplectic) return gamma.pair_count + 1;
    return static_cast<long>(gamma.matrix.n_cols()) + 1;
}

}  // namespace

void enumerate_generation(const PackagedGamma& gamma, int g, BoundsState& state,
                          const AdmissibilityFilter& filter, int workers) {
    const EnumMatrix em = build_enum_matrix(gamma);
    if (state.upper == 0) state.upper = sentinel_upper(gamma);
    enumerate_dispatch(em, g, state, filter, workers);
}

BoundsState run_bz(const std::vector<PackagedGamma>& gammas,
                   const AdmissibilityFilter& filter, int workers) {
    if (gammas.empty()) throw std::invalid_argument("run_bz: need at least one generator matrix");
    for (const PackagedGamma& gam : gammas) {
        if (gam.mode != gammas[0].mode || gam.matrix.n_cols() != gammas[0].matrix.n_cols() ||
            gam.pair_count != gammas[0].pair_count) {
            throw std::invalid_argument("run_bz: generator matrices must share one codeword frame");
        }
        if (gam.n_p() == 0) throw std::invalid_argument("run_bz: matrix with no packages");
    }

    std::vector<EnumMatrix> ems;
    ems.reserve(gammas.size());
    for (const PackagedGamma& gam : gammas) ems.push_back(build_enum_matrix(gam));

    BoundsState state;
    state.upper = sentinel_upper(gammas[0]);
    state.lower = 1;

    // Every matrix generates the full code, so once the smallest package
    // count has been enumerated through, every codeword has been visited.
    int g_limit = gammas[0].n_p();
    for (const PackagedGamma& gam : gammas) g_limit = std::min(g_limit, gam.n_p());

    for (int g = 1; g <= g_limit; ++g) {
        for (const EnumMatrix& em : ems) {
            enumerate_dispatch(em, g, state, filter, workers);
        }
        state.generation = g;
        state.lower = lower_bound(g, gammas);
        state.trace.push_back({g, state.lower, state.upper});
        if (state.lower >= state.upper) break;
    }

    if (state.upper >= sentinel_upper(gammas[0])) {
        throw InternalError(
            "run_bz: no admissible codeword after complete enumeration; "
            "input is not a valid normalizer matrix");
    }
    return state;
}

}  // namespace symdist
