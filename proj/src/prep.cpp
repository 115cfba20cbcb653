#include "symdist/prep.hpp"

#include <algorithm>
#include <stdexcept>

#include "symdist/errors.hpp"

namespace symdist {

namespace {

// Shared core of both F4 diagonalizations.  Columns are visited in the
// given order; each visited column either pivots (one or two rows) or is
// skipped because no unprocessed row is nonzero there.  Unprocessed rows
// stay zero on every visited column, so any row left unprocessed at the
// end is the zero row.  Sum rows completing 3-packages are appended in a
// second pass, after all clearing, so each appended row is the exact sum
// of its two final members.
struct F4Pivot {
    int col;
    int r1;
    int r2;  // -1 for a single-row pivot
};

struct F4DiagCore {
    F4Matrix matrix;
    std::vector<F4Pivot> pivots;
    std::vector<char> processed;
};

F4DiagCore f4_diagonalize_core(F4Matrix m, const std::vector<int>& col_order) {
    const std::size_t n_rows = m.n_rows();
    F4DiagCore out;
    out.processed.assign(n_rows, 0);
    std::size_t processed_count = 0;

    for (int c : col_order) {
        if (processed_count == n_rows) break;
        const std::size_t col = static_cast<std::size_t>(c);
        int i1 = -1;
        int i2 = -1;
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (out.processed[i]) continue;
            const F4 s = m.get(i, col);
            if (s == F4::zero) continue;
            if (i1 < 0) {
                i1 = static_cast<int>(i);
            } else if (s != m.get(static_cast<std::size_t>(i1), col)) {
                i2 = static_cast<int>(i);
                break;
            }
        }
        if (i1 < 0) continue;  // principal candidate

        if (i2 >= 0) {
            // Two distinct nonzero symbols: both rows pivot and every other
            // row can be cleared to zero here, since the two pivot symbols
            // span the nonzero symbols additively.
            const F4 s1 = m.get(static_cast<std::size_t>(i1), col);
            const F4 s2 = m.get(static_cast<std::size_t>(i2), col);
            for (std::size_t q = 0; q < n_rows; ++q) {
                if (static_cast<int>(q) == i1 || static_cast<int>(q) == i2) continue;
                const F4 e = m.get(q, col);
                if (e == F4::zero) continue;
                if (e == s1) {
                    m.add_row_into(static_cast<std::size_t>(i1), q);
                } else if (e == s2) {
                    m.add_row_into(static_cast<std::size_t>(i2), q);
                } else {
                    m.add_row_into(static_cast<std::size_t>(i1), q);
                    m.add_row_into(static_cast<std::size_t>(i2), q);
                }
            }
            out.processed[static_cast<std::size_t>(i1)] = 1;
            out.processed[static_cast<std::size_t>(i2)] = 1;
            processed_count += 2;
            out.pivots.push_back({c, i1, i2});
        } else {
            // Single symbol x among unprocessed rows: reduce the remaining
            // entries of the column to {0, y} for one fixed y != x.  Adding
            // the pivot row sends x to 0 and the third symbol to y.
            const F4 x = m.get(static_cast<std::size_t>(i1), col);
            F4 y = F4::zero;
            for (std::size_t q = 0; q < n_rows; ++q) {
                if (static_cast<int>(q) == i1) continue;
                const F4 e = m.get(q, col);
                if (e != F4::zero && e != x) {
                    y = e;
                    break;
                }
            }
            for (std::size_t q = 0; q < n_rows; ++q) {
                if (static_cast<int>(q) == i1) continue;
                const F4 e = m.get(q, col);
                if (e == F4::zero || e == y) continue;
                m.add_row_into(static_cast<std::size_t>(i1), q);
            }
            out.processed[static_cast<std::size_t>(i1)] = 1;
            processed_count += 1;
            out.pivots.push_back({c, i1, -1});
        }
    }

    out.matrix = std::move(m);
    return out;
}

// Drops zero rows, appends the package-completing sums, and assembles the
// PackagedGamma over F2.
PackagedGamma assemble_f4_gamma(F4DiagCore core) {
    const std::size_t n_rows = core.matrix.n_rows();
    for (std::size_t r = 0; r < n_rows; ++r) {
        if (!core.processed[r] && !core.matrix.row_is_zero(r)) {
            throw InternalError("f4 diagonalization left a nonzero unprocessed row");
        }
    }

    std::vector<int> remap(n_rows, -1);
    F4Matrix kept(0, core.matrix.n_cols());
    int next = 0;
    for (std::size_t r = 0; r < n_rows; ++r) {
        if (core.matrix.row_is_zero(r)) continue;
        kept.append_zero_row();
        for (std::size_t c = 0; c < core.matrix.n_cols(); ++c) {
            kept.set(static_cast<std::size_t>(next), c, core.matrix.get(r, c));
        }
        remap[r] = next++;
    }

    std::vector<Package> packages;
    packages.reserve(core.pivots.size());
    for (const F4Pivot& piv : core.pivots) {
        if (piv.r2 < 0) {
            packages.push_back(Package{piv.col, {remap[static_cast<std::size_t>(piv.r1)]}});
        } else {
            const int m1 = remap[static_cast<std::size_t>(piv.r1)];
            const int m2 = remap[static_cast<std::size_t>(piv.r2)];
            const int sum_idx = static_cast<int>(kept.n_rows());
            kept.append_row_sum(static_cast<std::size_t>(m1), static_cast<std::size_t>(m2));
            packages.push_back(Package{piv.col, {m1, m2, sum_idx}});
        }
    }

    PackagedGamma gamma;
    gamma.pair_count = static_cast<int>(kept.n_cols());
    gamma.matrix = to_gf2(kept);
    gamma.packages = std::move(packages);
    gamma.mode = WeightMode::symplectic;
    gamma.n_pp = gamma.n_p();
    return gamma;
}

}  // namespace

PackagedGamma diagonalize_f2(const BitMatrix& a) {
    if (a.n_cols() % 2 != 0) {
        throw std::invalid_argument("diagonalize_f2: column count must be even");
    }
    const std::size_t n = a.n_cols() / 2;
    const std::size_t n_rows = a.n_rows();
    if (n_rows < n || n_rows > 2 * n) {
        throw ValidationError("diagonalize_f2: row count must lie between n and 2n");
    }

    BitMatrix b = a;

    // Identity block on the first half.  Allowed moves: paired column
    // permutations, half swaps of one pair, and row operations; all of
    // them preserve symplectic weights.
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t pj = n;
        std::size_t ph = 0;
        std::size_t pi = n_rows;
        for (std::size_t j = p; j < n && pj == n; ++j) {
            for (std::size_t h = 0; h < 2 && pj == n; ++h) {
                const std::size_t col = (h == 0) ? j : n + j;
                for (std::size_t i = p; i < n_rows; ++i) {
                    if (b.get(i, col)) {
                        pj = j;
                        ph = h;
                        pi = i;
                        break;
                    }
                }
            }
        }
        if (pj == n) {
            // Unreachable for a full-rank matrix whose rowspace contains its
            // symplectic dual; reachable only for invalid input.
            throw ValidationError(
                "diagonalize_f2: systematic form unreachable; matrix is rank-deficient "
                "or not a valid normalizer");
        }
        if (pj != p) {
            b.swap_columns(p, pj);
            b.swap_columns(n + p, n + pj);
        }
        if (ph == 1) b.swap_columns(p, n + p);
        if (pi != p) b.swap_rows(p, pi);
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (i != p && b.get(i, p)) b.add_row_into(p, i);
        }
    }

    // Bottom rows now have a zero first half.  Echelonize them on the
    // second half and clear each pivot column in every other row, so each
    // pivot pair is zero outside its package.
    const std::size_t k = n_rows - n;
    std::vector<std::size_t> m2_pivots;
    std::size_t r = n;
    for (std::size_t c = 0; c < n && r < n_rows; ++c) {
        std::size_t sel = n_rows;
        for (std::size_t i = r; i < n_rows; ++i) {
            if (b.get(i, n + c)) {
                sel = i;
                break;
            }
        }
        if (sel == n_rows) continue;
        b.swap_rows(r, sel);
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (i != r && b.get(i, n + c)) b.add_row_into(r, i);
        }
        m2_pivots.push_back(c);
        ++r;
    }
    if (m2_pivots.size() != k) {
        throw ValidationError("diagonalize_f2: rows are linearly dependent");
    }

    std::vector<Package> packages(n);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = m2_pivots[i];
        BitVector sum = b.row(j);
        sum ^= b.row(n + i);
        b.append_row(std::move(sum));
        packages[j] = Package{static_cast<int>(j),
                              {static_cast<int>(j), static_cast<int>(n + i),
                               static_cast<int>(n_rows + i)}};
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (packages[j].rows.empty()) {
            packages[j] = Package{static_cast<int>(j), {static_cast<int>(j)}};
        }
    }

    PackagedGamma gamma;
    gamma.matrix = std::move(b);
    gamma.packages = std::move(packages);
    gamma.mode = WeightMode::symplectic;
    gamma.pair_count = static_cast<int>(n);
    gamma.n_pp = gamma.n_p();
    return gamma;
}

std::pair<PackagedGamma, PrincipalColumns> diagonalize_f4(const F4Matrix& a4) {
    const int n = static_cast<int>(a4.n_cols());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) order[static_cast<std::size_t>(c)] = c;

    F4DiagCore core = f4_diagonalize_core(a4, order);

    std::vector<char> pivoted(static_cast<std::size_t>(n), 0);
    for (const F4Pivot& piv : core.pivots) pivoted[static_cast<std::size_t>(piv.col)] = 1;
    PrincipalColumns pc;
    for (int c = 0; c < n; ++c) {
        if (!pivoted[static_cast<std::size_t>(c)]) pc.indices.push_back(c);
    }

    PackagedGamma gamma = assemble_f4_gamma(std::move(core));
    if (rank(gamma.matrix) != a4.n_rows()) {
        throw ValidationError("diagonalize_f4: rows are linearly dependent");
    }
    return {std::move(gamma), std::move(pc)};
}

PackagedGamma second_gamma(const F4Matrix& b4, const PrincipalColumns& pc) {
    const int n = static_cast<int>(b4.n_cols());
    std::vector<char> is_principal(static_cast<std::size_t>(n), 0);
    for (int c : pc.indices) is_principal[static_cast<std::size_t>(c)] = 1;

    // Principal columns first, remaining columns after, both ascending.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int c : pc.indices) order.push_back(c);
    for (int c = 0; c < n; ++c) {
        if (!is_principal[static_cast<std::size_t>(c)]) order.push_back(c);
    }

    F4DiagCore core = f4_diagonalize_core(b4, order);
    PackagedGamma gamma = assemble_f4_gamma(std::move(core));
    gamma.n_pp = 0;
    for (const Package& pkg : gamma.packages) {
        if (pkg.pivot >= 0 && is_principal[static_cast<std::size_t>(pkg.pivot)]) ++gamma.n_pp;
    }
    return gamma;
}

BitMatrix isometry_transform(const BitMatrix& a) {
    if (a.n_cols() % 2 != 0) {
        throw std::invalid_argument("isometry_transform: column count must be even");
    }
    const std::size_t n = a.n_cols() / 2;
    BitMatrix out(a.n_rows(), 3 * n);
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            const bool ai = a.get(r, i);
            const bool bi = a.get(r, n + i);
            out.set(r, i, ai);
            out.set(r, n + i, bi);
            out.set(r, 2 * n + i, ai != bi);
        }
    }
    return out;
}

std::vector<PackagedGamma> information_sets(const BitMatrix& b) {
    const std::size_t n_rows = b.n_rows();
    const std::size_t n_cols = b.n_cols();
    if (rank(b) != n_rows) {
        throw ValidationError("information_sets: rows are linearly dependent");
    }

    std::vector<char> used(n_cols, 0);
    std::vector<PackagedGamma> out;
    BitMatrix cur = b;
    for (;;) {
        std::vector<int> pivot_cols;
        std::size_t r = 0;
        for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
            if (used[c]) continue;
            std::size_t sel = n_rows;
            for (std::size_t i = r; i < n_rows; ++i) {
                if (cur.get(i, c)) {
                    sel = i;
                    break;
                }
            }
            if (sel == n_rows) continue;
            cur.swap_rows(r, sel);
            for (std::size_t i = 0; i < n_rows; ++i) {
                if (i != r && cur.get(i, c)) cur.add_row_into(r, i);
            }
            pivot_cols.push_back(static_cast<int>(c));
            ++r;
        }
        if (pivot_cols.empty()) break;

        PackagedGamma gamma;
        gamma.matrix = cur;
        gamma.mode = WeightMode::hamming;
        gamma.pair_count = static_cast<int>(n_cols % 3 == 0 ? n_cols / 3 : 0);
        gamma.rank_deficit = static_cast<int>(n_rows - pivot_cols.size());
        gamma.packages.reserve(n_rows);
        for (std::size_t i = 0; i < n_rows; ++i) {
            const int pivot = i < pivot_cols.size() ? pivot_cols[i] : -1;
            gamma.packages.push_back(Package{pivot, {static_cast<int>(i)}});
        }
        gamma.n_pp = gamma.n_p();
        for (int c : pivot_cols) used[static_cast<std::size_t>(c)] = 1;
        out.push_back(std::move(gamma));
    }
    return out;
}

PackagedGamma singleton_gamma(const BitMatrix& m, WeightMode mode) {
    PackagedGamma gamma;
    gamma.matrix = m;
    gamma.mode = mode;
    if (mode == WeightMode::symplectic) {
        if (m.n_cols() % 2 != 0) {
            throw std::invalid_argument("singleton_gamma: column count must be even");
        }
        gamma.pair_count = static_cast<int>(m.n_cols() / 2);
    } else {
        gamma.pair_count = static_cast<int>(m.n_cols() % 3 == 0 ? m.n_cols() / 3 : 0);
    }
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        gamma.packages.push_back(Package{-1, {static_cast<int>(r)}});
    }
    gamma.n_pp = gamma.n_p();
    return gamma;
}

}  // namespace symdist
