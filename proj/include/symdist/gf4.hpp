#pragma once

#include "symdist/bitvec.hpp"

namespace symdist {

// F4 = {0, 1, a, a2} with a2 = a + 1.  A symbol is the bit pair
// (plane_a, plane_b) meaning plane_a + a * plane_b, so 1 = (1,0),
// a = (0,1), a2 = (1,1).  The codes handled here are additive (closed
// under F2 combinations only), so the sole arithmetic operation is
// symbol addition, which is plane-wise XOR; no multiplication table.
enum class F4 : unsigned { zero = 0, one = 1, alpha = 2, alpha2 = 3 };

constexpr F4 f4_add(F4 x, F4 y) {
    return static_cast<F4>(static_cast<unsigned>(x) ^ static_cast<unsigned>(y));
}

// Two-bitplane matrix over F4.
class F4Matrix {
public:
    F4Matrix() = default;
    F4Matrix(std::size_t n_rows, std::size_t n_cols);

    std::size_t n_rows() const { return plane_a_.n_rows(); }
    std::size_t n_cols() const { return plane_a_.n_cols(); }

    F4 get(std::size_t r, std::size_t c) const {
        return static_cast<F4>(static_cast<unsigned>(plane_a_.get(r, c)) |
                               (static_cast<unsigned>(plane_b_.get(r, c)) << 1));
    }
    void set(std::size_t r, std::size_t c, F4 s) {
        plane_a_.set(r, c, static_cast<unsigned>(s) & 1u);
        plane_b_.set(r, c, (static_cast<unsigned>(s) >> 1) & 1u);
    }

    // dst += src (plane-wise XOR).
    void add_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t r1, std::size_t r2);
    // Appends the row r1 + r2.
    void append_row_sum(std::size_t r1, std::size_t r2);
    void append_zero_row();
    bool row_is_zero(std::size_t r) const;

    const BitMatrix& plane_a() const { return plane_a_; }
    const BitMatrix& plane_b() const { return plane_b_; }

    friend bool operator==(const F4Matrix&, const F4Matrix&) = default;

private:
    BitMatrix plane_a_;
    BitMatrix plane_b_;
};

// Rows (a | b) of a 2n-column F2 matrix become rows a + alpha*b of an
// n-column F4 matrix.
F4Matrix to_gf4(const BitMatrix& a);

// Exact inverse of to_gf4.
BitMatrix to_gf2(const F4Matrix& m);

// Hamming weight of an F4 row; equals the symplectic weight of its F2
// preimage.
std::size_t gf4_row_weight(const F4Matrix& m, std::size_t r);

}  // namespace symdist
