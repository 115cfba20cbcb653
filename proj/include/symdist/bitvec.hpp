#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace symdist {

// Dense bit vector over F2, packed little-endian into 64-bit words.
// Bits past size() in the last word are kept at zero so that popcounts
// over whole words need no masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length);
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return length_; }
    std::size_t word_count() const { return words_.size(); }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    bool is_zero() const;
    std::size_t popcount() const;
    BitVector& operator^=(const BitVector& other);

    const std::uint64_t* word_data() const { return words_.data(); }
    const std::vector<std::uint64_t>& words() const { return words_; }
    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t length_ = 0;
};

// Copies bits [from, from+len) of src into dst starting at dst bit 0.
// dst must hold at least ceil(len/64) words and is overwritten.
void copy_bit_range(const BitVector& src, std::size_t from, std::size_t len,
                    std::uint64_t* dst);

// Row-major F2 matrix; every row shares one column count.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t n_rows, std::size_t n_cols);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix identity(std::size_t n);

    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return n_cols_; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
    void append_row(BitVector v);
    void swap_rows(std::size_t r1, std::size_t r2);
    // dst += src over F2.
    void add_row_into(std::size_t src, std::size_t dst);
    // Swaps columns c1 and c2 in every row.
    void swap_columns(std::size_t c1, std::size_t c2);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::vector<BitVector> rows_;
    std::size_t n_cols_ = 0;
};

// The two halves of a length-2n vector held as separate word arrays, so
// the symplectic weight is one OR plus one popcount per word pair.
struct SymplecticSplit {
    std::size_t n = 0;
    std::vector<std::uint64_t> a_words;
    std::vector<std::uint64_t> b_words;

    static SymplecticSplit from_vector(const BitVector& v);
    BitVector to_vector() const;
    std::size_t weight() const;
};

std::size_t hamming_weight(const BitVector& v);

// Number of coordinate pairs i with (a_i, b_i) != (0, 0); v = (a | b) must
// have even length.
std::size_t symplectic_weight(const BitVector& v);

// (a,b) . (c,d) = a.d + b.c over F2; u and v must share an even length.
int symplectic_inner_product(const BitVector& u, const BitVector& v);

// acc ^= row, word-wise; returns acc.
BitVector& xor_accumulate(BitVector& acc, const BitVector& row);

// (a | b) -> (b | a).
BitVector swap_halves(const BitVector& v);

std::size_t rank(const BitMatrix& m);

// Basis of the Euclidean kernel {v : m v^T = 0}; dimension n_cols - rank.
BitMatrix null_space(const BitMatrix& m);

// Basis of {v : v symplectically orthogonal to every row of a}.  For an
// (n+k) x 2n matrix of independent rows this is the stabilizer code C, of
// dimension n-k.  Throws ValidationError if the rows are dependent.
BitMatrix symplectic_dual_basis(const BitMatrix& a);

bool in_rowspace(const BitMatrix& m, const BitVector& v);

}  // namespace symdist
