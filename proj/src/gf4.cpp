#include "symdist/gf4.hpp"

#include <bit>
#include <stdexcept>

namespace symdist {

F4Matrix::F4Matrix(std::size_t n_rows, std::size_t n_cols)
    : plane_a_(n_rows, n_cols), plane_b_(n_rows, n_cols) {}

void F4Matrix::add_row_into(std::size_t src, std::size_t dst) {
    plane_a_.add_row_into(src, dst);
    plane_b_.add_row_into(src, dst);
}

void F4Matrix::swap_rows(std::size_t r1, std::size_t r2) {
    plane_a_.swap_rows(r1, r2);
    plane_b_.swap_rows(r1, r2);
}

void F4Matrix::append_row_sum(std::size_t r1, std::size_t r2) {
    BitVector a = plane_a_.row(r1);
    a ^= plane_a_.row(r2);
    BitVector b = plane_b_.row(r1);
    b ^= plane_b_.row(r2);
    plane_a_.append_row(std::move(a));
    plane_b_.append_row(std::move(b));
}

void F4Matrix::append_zero_row() {
    plane_a_.append_row(BitVector(n_cols()));
    plane_b_.append_row(BitVector(n_cols()));
}

bool F4Matrix::row_is_zero(std::size_t r) const {
    return plane_a_.row(r).is_zero() && plane_b_.row(r).is_zero();
}

F4Matrix to_gf4(const BitMatrix& a) {
    if (a.n_cols() % 2 != 0) {
        throw std::invalid_argument("to_gf4: column count must be even");
    }
    const std::size_t n = a.n_cols() / 2;
    F4Matrix m(a.n_rows(), n);
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned s = static_cast<unsigned>(a.get(r, i)) |
                               (static_cast<unsigned>(a.get(r, n + i)) << 1);
            m.set(r, i, static_cast<F4>(s));
        }
    }
    return m;
}

BitMatrix to_gf2(const F4Matrix& m) {
    const std::size_t n = m.n_cols();
    BitMatrix out(m.n_rows(), 2 * n);
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            if (m.plane_a().get(r, i)) out.set(r, i, true);
            if (m.plane_b().get(r, i)) out.set(r, n + i, true);
        }
    }
    return out;
}

std::size_t gf4_row_weight(const F4Matrix& m, std::size_t r) {
    const std::vector<std::uint64_t>& wa = m.plane_a().row(r).words();
    const std::vector<std::uint64_t>& wb = m.plane_b().row(r).words();
    std::size_t total = 0;
    for (std::size_t w = 0; w < wa.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(wa[w] | wb[w]));
    }
    return total;
}

}  // namespace symdist
