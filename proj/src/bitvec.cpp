#include "symdist/bitvec.hpp"

#include <bit>
#include <stdexcept>

#include "symdist/errors.hpp"

namespace symdist {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t length)
    : words_(words_for(length), 0), length_(length) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVector::from_string: character is not 0 or 1");
        }
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

bool BitVector::is_zero() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.length_ != length_) {
        throw std::invalid_argument("BitVector xor: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

void copy_bit_range(const BitVector& src, std::size_t from, std::size_t len,
                    std::uint64_t* dst) {
    const std::size_t out_words = words_for(len);
    for (std::size_t w = 0; w < out_words; ++w) dst[w] = 0;
    const std::uint64_t* in = src.word_data();
    const std::size_t shift = from % kWordBits;
    const std::size_t first = from / kWordBits;
    const std::size_t src_words = src.word_count();
    for (std::size_t w = 0; w < out_words; ++w) {
        std::uint64_t lo = (first + w < src_words) ? in[first + w] : 0;
        std::uint64_t out = lo >> shift;
        if (shift != 0 && first + w + 1 < src_words) {
            out |= in[first + w + 1] << (kWordBits - shift);
        }
        dst[w] = out;
    }
    // Zero the padding above bit len in the last word.
    const std::size_t rem = len % kWordBits;
    if (rem != 0) dst[out_words - 1] &= (~std::uint64_t{0}) >> (kWordBits - rem);
}

BitMatrix::BitMatrix(std::size_t n_rows, std::size_t n_cols)
    : rows_(n_rows, BitVector(n_cols)), n_cols_(n_cols) {}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    BitMatrix m;
    for (std::string_view s : rows) m.append_row(BitVector::from_string(s));
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::append_row(BitVector v) {
    if (rows_.empty()) {
        n_cols_ = v.size();
    } else if (v.size() != n_cols_) {
        throw std::invalid_argument("BitMatrix::append_row: column count mismatch");
    }
    rows_.push_back(std::move(v));
}

void BitMatrix::swap_rows(std::size_t r1, std::size_t r2) {
    std::swap(rows_[r1], rows_[r2]);
}

void BitMatrix::add_row_into(std::size_t src, std::size_t dst) {
    rows_[dst] ^= rows_[src];
}

void BitMatrix::swap_columns(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (BitVector& r : rows_) {
        const bool b1 = r.get(c1);
        const bool b2 = r.get(c2);
        r.set(c1, b2);
        r.set(c2, b1);
    }
}

SymplecticSplit SymplecticSplit::from_vector(const BitVector& v) {
    if (v.size() % 2 != 0) {
        throw std::invalid_argument("SymplecticSplit: vector length must be even");
    }
    SymplecticSplit s;
    s.n = v.size() / 2;
    const std::size_t w = words_for(s.n);
    s.a_words.assign(w, 0);
    s.b_words.assign(w, 0);
    if (s.n != 0) {
        copy_bit_range(v, 0, s.n, s.a_words.data());
        copy_bit_range(v, s.n, s.n, s.b_words.data());
    }
    return s;
}

BitVector SymplecticSplit::to_vector() const {
    BitVector v(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if ((a_words[i / kWordBits] >> (i % kWordBits)) & 1u) v.set(i, true);
        if ((b_words[i / kWordBits] >> (i % kWordBits)) & 1u) v.set(n + i, true);
    }
    return v;
}

std::size_t SymplecticSplit::weight() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < a_words.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(a_words[w] | b_words[w]));
    }
    return total;
}

std::size_t hamming_weight(const BitVector& v) { return v.popcount(); }

std::size_t symplectic_weight(const BitVector& v) {
    if (v.size() % 2 != 0) {
        throw std::invalid_argument("symplectic_weight: vector length must be even");
    }
    return SymplecticSplit::from_vector(v).weight();
}

int symplectic_inner_product(const BitVector& u, const BitVector& v) {
    if (u.size() != v.size() || u.size() % 2 != 0) {
        throw std::invalid_argument("symplectic_inner_product: lengths must match and be even");
    }
    const SymplecticSplit su = SymplecticSplit::from_vector(u);
    const SymplecticSplit sv = SymplecticSplit::from_vector(v);
    std::uint64_t parity = 0;
    for (std::size_t w = 0; w < su.a_words.size(); ++w) {
        parity ^= static_cast<std::uint64_t>(
            std::popcount(su.a_words[w] & sv.b_words[w]) ^
            std::popcount(su.b_words[w] & sv.a_words[w]));
    }
    return static_cast<int>(parity & 1u);
}

BitVector& xor_accumulate(BitVector& acc, const BitVector& row) { return acc ^= row; }

BitVector swap_halves(const BitVector& v) {
    if (v.size() % 2 != 0) {
        throw std::invalid_argument("swap_halves: vector length must be even");
    }
    const std::size_t n = v.size() / 2;
    BitVector out(v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (v.get(n + i)) out.set(i, true);
        if (v.get(i)) out.set(n + i, true);
    }
    return out;
}

namespace {

// Row echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> echelonize(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.n_cols() && r < m.n_rows(); ++c) {
        std::size_t sel = m.n_rows();
        for (std::size_t i = r; i < m.n_rows(); ++i) {
            if (m.get(i, c)) {
                sel = i;
                break;
            }
        }
        if (sel == m.n_rows()) continue;
        m.swap_rows(r, sel);
        for (std::size_t i = 0; i < m.n_rows(); ++i) {
            if (i != r && m.get(i, c)) m.add_row_into(r, i);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    BitMatrix copy = m;
    return echelonize(copy).size();
}

BitMatrix null_space(const BitMatrix& m) {
    BitMatrix ech = m;
    const std::vector<std::size_t> pivots = echelonize(ech);
    std::vector<bool> is_pivot(m.n_cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    BitMatrix basis(0, m.n_cols());
    for (std::size_t f = 0; f < m.n_cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.n_cols());
        v.set(f, true);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (ech.get(r, f)) v.set(pivots[r], true);
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

BitMatrix symplectic_dual_basis(const BitMatrix& a) {
    if (a.n_cols() % 2 != 0) {
        throw std::invalid_argument("symplectic_dual_basis: column count must be even");
    }
    if (rank(a) != a.n_rows()) {
        throw ValidationError("symplectic_dual_basis: rows are linearly dependent");
    }
    // v is symplectically orthogonal to row r iff v . swap_halves(r) = 0, so
    // the dual is the Euclidean kernel of the half-swapped matrix.
    BitMatrix swapped(0, a.n_cols());
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
        swapped.append_row(swap_halves(a.row(r)));
    }
    return null_space(swapped);
}

bool in_rowspace(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.n_cols()) {
        throw std::invalid_argument("in_rowspace: length mismatch");
    }
    BitMatrix ech = m;
    const std::vector<std::size_t> pivots = echelonize(ech);
    BitVector residue = v;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (residue.get(pivots[r])) residue ^= ech.row(r);
    }
    return residue.is_zero();
}

}  // namespace symdist
