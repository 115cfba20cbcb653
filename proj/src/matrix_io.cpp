#include "symdist/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "symdist/errors.hpp"

namespace symdist {

namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
}

bool blank(const std::string& s) {
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

StabilizerInstance parse_matrix_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    // Header: two integers K N on the first nonblank line.
    long k_rows = -1;
    long n_cols = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        std::istringstream header(line);
        std::string extra;
        if (!(header >> k_rows >> n_cols) || (header >> extra)) {
            fail(origin, line_no, "bad header; expected two integers \"K N\"");
        }
        break;
    }
    if (k_rows < 0) fail(origin, line_no, "empty input; expected a \"K N\" header");
    if (k_rows == 0 || n_cols <= 0) fail(origin, line_no, "bad header; K and N must be positive");
    if (n_cols % 2 != 0) fail(origin, line_no, "N must be even (columns come in symplectic pairs)");
    if (k_rows > n_cols) fail(origin, line_no, "K exceeds N; rows cannot be independent");

    BitMatrix m(0, static_cast<std::size_t>(n_cols));
    long rows_read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        if (rows_read == k_rows) {
            fail(origin, line_no, "expected " + std::to_string(k_rows) + " rows, found more");
        }
        BitVector row(static_cast<std::size_t>(n_cols));
        long bits = 0;
        for (std::size_t col = 0; col < line.size(); ++col) {
            const char ch = line[col];
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch != '0' && ch != '1') {
                fail(origin, line_no,
                     "row " + std::to_string(rows_read + 1) + ", column " +
                         std::to_string(col + 1) + ": expected '0' or '1', found '" +
                         std::string(1, ch) + "'");
            }
            if (bits == n_cols) {
                fail(origin, line_no,
                     "row " + std::to_string(rows_read + 1) + " has more than " +
                         std::to_string(n_cols) + " bits");
            }
            if (ch == '1') row.set(static_cast<std::size_t>(bits), true);
            ++bits;
        }
        if (bits != n_cols) {
            fail(origin, line_no,
                 "row " + std::to_string(rows_read + 1) + " has " + std::to_string(bits) +
                     " bits, expected " + std::to_string(n_cols));
        }
        m.append_row(std::move(row));
        ++rows_read;
    }
    if (rows_read != k_rows) {
        fail(origin, line_no,
             "expected " + std::to_string(k_rows) + " rows, found " + std::to_string(rows_read));
    }
    return StabilizerInstance::from_matrix(std::move(m));
}

StabilizerInstance parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str(), path);
}

std::string format_matrix(const BitMatrix& m) {
    std::ostringstream out;
    out << m.n_rows() << ' ' << m.n_cols() << '\n';
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        out << m.row(r).to_string() << '\n';
    }
    return out.str();
}

}  // namespace symdist
