#include <random>
#include <set>

#include "doctest.h"
#include "symdist/distance.hpp"
#include "symdist/errors.hpp"
#include "symdist/prep.hpp"
#include "test_support.hpp"

using namespace symdist;
using namespace testsup;

namespace {

const BitMatrix kExampleA = BitMatrix::from_strings({"1001", "0110", "0011"});

// The 3x4 additive example matrix: rows (1,1,1,1), (a,0,a,a), (0,a2,a2,a2).
F4Matrix example_a4() {
    return to_gf4(BitMatrix::from_strings({"11110000", "00001011", "01110111"}));
}

}  // namespace

TEST_CASE("diagonalize_f2 on the 3x4 example") {
    const PackagedGamma gamma = diagonalize_f2(kExampleA);
    REQUIRE(gamma.matrix.n_rows() == 4);
    CHECK(gamma.mode == WeightMode::symplectic);
    CHECK(gamma.pair_count == 2);
    CHECK(gamma.n_p() == 2);

    // The appended row is row 1 plus row 3 of the input.
    CHECK(gamma.matrix.row(3) == BitVector::from_string("1010"));
    // Full clearing of the M2 pivot column also rewrites row 2, unlike the
    // echelon-only form; the packages need the pivot pair zero outside.
    CHECK(gamma.matrix == BitMatrix::from_strings({"1001", "0101", "0011", "1010"}));

    REQUIRE(gamma.packages.size() == 2);
    CHECK(gamma.packages[0].pivot == 0);
    CHECK(gamma.packages[0].rows == std::vector<int>{0, 2, 3});
    CHECK(gamma.packages[1].pivot == 1);
    CHECK(gamma.packages[1].rows == std::vector<int>{1});
    CHECK_FALSE(check_packages(gamma).has_value());

    // Same rowspace as the input (no column moves were needed here).
    CHECK(rowspace_set(to_int(gamma.matrix)) == rowspace_set(to_int(kExampleA)));
}

TEST_CASE("diagonalize_f2 of (I_n | 0) is itself") {
    for (std::size_t n : {2u, 6u}) {
        BitMatrix a(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) a.set(i, i, true);
        const PackagedGamma gamma = diagonalize_f2(a);
        CHECK(gamma.matrix == a);
        CHECK(gamma.n_p() == static_cast<int>(n));
        for (const Package& pkg : gamma.packages) CHECK(pkg.rows.size() == 1);
    }
}

TEST_CASE("diagonalize_f2 rejects bad input") {
    CHECK_THROWS_AS(diagonalize_f2(BitMatrix::from_strings({"1001", "1001", "0011"})),
                    ValidationError);
    // Fewer rows than n cannot reach the systematic form.
    CHECK_THROWS_AS(diagonalize_f2(BitMatrix::from_strings({"10010110"})), ValidationError);
}

TEST_CASE("diagonalize_f2 preserves the symplectic weight multiset") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 25; ++it) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int k = static_cast<int>(rng() % (n + 1));
        const StabilizerInstance inst = random_stabilizer(n, k, rng());
        const PackagedGamma gamma = diagonalize_f2(inst.a);
        CHECK_FALSE(check_packages(gamma).has_value());
        CHECK(gamma.n_p() == n);

        IntMat basis;
        for (std::size_t r = 0; r < inst.a.n_rows(); ++r) {
            basis.push_back(to_int(gamma.matrix.row(r)));
        }
        CHECK(naive_sym_weight_multiset(basis) == naive_sym_weight_multiset(to_int(inst.a)));
    }
}

TEST_CASE("diagonalize_f4 on the additive example") {
    auto [gamma, pc] = diagonalize_f4(example_a4());

    // One row is appended and it matches the displayed matrix exactly.
    REQUIRE(gamma.matrix.n_rows() == 4);
    CHECK(gamma.matrix == BitMatrix::from_strings(
                              {"11110000", "00001011", "01110111", "11111011"}));
    REQUIRE(gamma.packages.size() == 2);
    CHECK(gamma.packages[0].pivot == 0);
    CHECK(gamma.packages[0].rows == std::vector<int>{0, 1, 3});
    CHECK(gamma.packages[1].pivot == 1);
    CHECK(gamma.packages[1].rows == std::vector<int>{2});
    CHECK(gamma.n_p() == 2);
    CHECK(pc.indices == std::vector<int>{2, 3});
    CHECK_FALSE(check_packages(gamma).has_value());
}

TEST_CASE("diagonalize_f4 with disjoint single-symbol rows") {
    // Rows supported on disjoint columns pair with nobody.
    const BitMatrix a = BitMatrix::from_strings({"100000", "010010", "001000"});
    auto [gamma, pc] = diagonalize_f4(to_gf4(a));
    CHECK(gamma.matrix.n_rows() == 3);
    CHECK(gamma.n_p() == 3);
    for (const Package& pkg : gamma.packages) CHECK(pkg.rows.size() == 1);
    CHECK(pc.indices.empty());
}

TEST_CASE("diagonalize_f4 structural invariants on random instances") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int k = static_cast<int>(rng() % (n + 1));
        const StabilizerInstance inst = random_stabilizer(n, k, rng());
        auto [gamma, pc] = diagonalize_f4(to_gf4(inst.a));
        CHECK_FALSE(check_packages(gamma).has_value());

        // Principal columns are exactly the unpivoted ones.
        std::set<int> pivots;
        for (const Package& pkg : gamma.packages) pivots.insert(pkg.pivot);
        for (int c : pc.indices) CHECK_FALSE(pivots.count(c));
        CHECK(pivots.size() + pc.indices.size() == static_cast<std::size_t>(n));

        // Rowspace unchanged: the F4 path moves no columns.
        CHECK(rowspace_set(to_int(gamma.matrix)) == rowspace_set(to_int(inst.a)));
    }
}

TEST_CASE("second_gamma on the additive example") {
    auto [b_gamma, pc] = diagonalize_f4(example_a4());
    const PackagedGamma d_gamma = second_gamma(to_gf4(b_gamma.matrix), pc);

    CHECK(d_gamma.n_p() == 2);
    CHECK(d_gamma.n_pp == 1);  // only the 3-package pivots on a principal column
    CHECK_FALSE(check_packages(d_gamma).has_value());
    REQUIRE(d_gamma.packages.size() == 2);
    CHECK(d_gamma.packages[0].pivot == 2);
    CHECK(d_gamma.packages[0].rows.size() == 3);
    CHECK(d_gamma.packages[1].pivot == 0);
    CHECK(d_gamma.packages[1].rows.size() == 1);

    // Canonical output of this implementation (the displayed matrix keeps
    // an uncleared entry in a pivot column; ours clears it).
    CHECK(d_gamma.matrix == BitMatrix::from_strings({"11110000", "10000111",
                                                     "10001100", "01110111"}));

    // Same code as the input either way.
    CHECK(rowspace_set(to_int(d_gamma.matrix)) ==
          rowspace_set(to_int(to_gf2(example_a4()))));
}

TEST_CASE("second_gamma with no rows") {
    PrincipalColumns pc;
    pc.indices = {0, 1, 2};
    const PackagedGamma gamma = second_gamma(F4Matrix(0, 3), pc);
    CHECK(gamma.n_p() == 0);
    CHECK(gamma.n_pp == 0);
}

TEST_CASE("second_gamma counters on random instances") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int k = static_cast<int>(rng() % 3);
        const StabilizerInstance inst = random_stabilizer(std::max(n, k), k, rng());
        auto [b_gamma, pc] = diagonalize_f4(to_gf4(inst.a));
        const PackagedGamma d_gamma = second_gamma(to_gf4(b_gamma.matrix), pc);
        CHECK_FALSE(check_packages(d_gamma).has_value());

        // Recount the principal-pivot packages independently.
        const std::set<int> principal(pc.indices.begin(), pc.indices.end());
        int npp = 0;
        for (const Package& pkg : d_gamma.packages) npp += principal.count(pkg.pivot) ? 1 : 0;
        CHECK(npp == d_gamma.n_pp);
        CHECK(d_gamma.n_pp <= d_gamma.n_p());

        CHECK(rowspace_set(to_int(d_gamma.matrix)) == rowspace_set(to_int(inst.a)));
    }
}

TEST_CASE("isometry_transform") {
    const BitMatrix image = isometry_transform(BitMatrix::from_strings({"1001"}));
    CHECK(image == BitMatrix::from_strings({"100111"}));
    CHECK(isometry_transform(BitMatrix(1, 8)) == BitMatrix(1, 12));
    CHECK_THROWS_AS(isometry_transform(BitMatrix(1, 5)), std::invalid_argument);

    // Hamming weight of an image combination is twice the symplectic weight
    // of the source combination.
    std::mt19937_64 rng(53);
    for (int it = 0; it < 10000; ++it) {
        const std::size_t n = 1 + rng() % 40;
        const std::size_t rows = 1 + rng() % 5;
        BitMatrix a(rows, 2 * n);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < 2 * n; ++c) a.set(r, c, rng() & 1u);
        }
        const BitMatrix image = isometry_transform(a);
        BitVector comb(2 * n);
        BitVector img_comb(3 * n);
        for (std::size_t r = 0; r < rows; ++r) {
            if (rng() & 1u) {
                comb ^= a.row(r);
                img_comb ^= image.row(r);
            }
        }
        CHECK(hamming_weight(img_comb) == 2 * symplectic_weight(comb));
    }
}

TEST_CASE("information_sets on (I | I | I)") {
    const std::size_t n = 5;
    BitMatrix b(n, 3 * n);
    for (std::size_t i = 0; i < n; ++i) {
        b.set(i, i, true);
        b.set(i, n + i, true);
        b.set(i, 2 * n + i, true);
    }
    const std::vector<PackagedGamma> gammas = information_sets(b);
    REQUIRE(gammas.size() == 3);
    for (const PackagedGamma& g : gammas) {
        CHECK(g.rank_deficit == 0);
        CHECK(g.n_p() == static_cast<int>(n));
        CHECK(g.mode == WeightMode::hamming);
    }
}

TEST_CASE("information_sets on the image of (I_n | 0)") {
    const std::size_t n = 4;
    BitMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, i, true);
    const std::vector<PackagedGamma> gammas = information_sets(isometry_transform(a));
    REQUIRE(gammas.size() == 2);
    CHECK(gammas[0].rank_deficit == 0);
    CHECK(gammas[1].rank_deficit == 0);
}

TEST_CASE("information_sets invariants on random matrices") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 30; ++it) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const int k = static_cast<int>(rng() % (n + 1));
        const StabilizerInstance inst = random_stabilizer(n, k, rng());
        const BitMatrix image = isometry_transform(inst.a);
        const std::vector<PackagedGamma> gammas = information_sets(image);
        REQUIRE(!gammas.empty());
        CHECK(gammas[0].rank_deficit == 0);

        std::set<int> all_pivots;
        for (const PackagedGamma& g : gammas) {
            int pivoted = 0;
            for (const Package& pkg : g.packages) {
                CHECK(pkg.rows.size() == 1);
                if (pkg.pivot >= 0) {
                    ++pivoted;
                    CHECK(all_pivots.insert(pkg.pivot).second);  // disjoint across sets
                    // A pivot column carries a single one, in its own row.
                    int ones = 0;
                    for (std::size_t r = 0; r < g.matrix.n_rows(); ++r) {
                        ones += g.matrix.get(r, static_cast<std::size_t>(pkg.pivot));
                    }
                    CHECK(ones == 1);
                }
            }
            CHECK(g.rank_deficit == static_cast<int>(g.matrix.n_rows()) - pivoted);
            CHECK(rowspace_set(to_int(g.matrix)) == rowspace_set(to_int(image)));
        }
    }
}

TEST_CASE("one member per package costs at least one weight unit each") {
    // The property the lower-bound ladder stands on: a sum of g rows from g
    // distinct packages has symplectic weight >= g.
    std::mt19937_64 rng(101);
    for (int it = 0; it < 12; ++it) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int k = static_cast<int>(rng() % (n + 1));
        const StabilizerInstance inst = random_stabilizer(n, k, rng());

        std::vector<PackagedGamma> preps;
        preps.push_back(diagonalize_f2(inst.a));
        auto [b_gamma, pc] = diagonalize_f4(to_gf4(inst.a));
        preps.push_back(second_gamma(to_gf4(b_gamma.matrix), pc));
        preps.push_back(std::move(b_gamma));

        for (const PackagedGamma& gamma : preps) {
            const IntMat m = to_int(gamma.matrix);
            for (int g = 1; g <= gamma.n_p(); ++g) {
                for (const IntVec& c : naive_generation(m, gamma.packages, g)) {
                    CHECK(naive_symplectic_weight(c) >= g);
                }
            }
        }
    }
}

TEST_CASE("information_sets rejects dependent rows") {
    CHECK_THROWS_AS(information_sets(BitMatrix::from_strings({"111111", "111111"})),
                    ValidationError);
}

TEST_CASE("singleton_gamma") {
    const PackagedGamma gamma = singleton_gamma(kExampleA, WeightMode::symplectic);
    CHECK(gamma.n_p() == 3);
    CHECK(gamma.pair_count == 2);
    for (const Package& pkg : gamma.packages) CHECK(pkg.rows.size() == 1);
}
