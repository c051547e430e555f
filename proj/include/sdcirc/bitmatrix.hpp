#pragma once

// Bit-packed linear algebra over GF(2) for lengths up to 128, plus the
// generator-matrix text format. Rows are stored as two 64-bit words.

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdcirc/circulant.hpp"
#include "sdcirc/gray.hpp"
#include "sdcirc/ring.hpp"

namespace sdcirc {

inline constexpr int kBitMatrixWords = 2;
inline constexpr int kBitMatrixMaxCols = 64 * kBitMatrixWords;

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), w_(static_cast<std::size_t>(rows) * kBitMatrixWords, 0) {
    if (rows < 0 || cols < 0 || cols > kBitMatrixMaxCols)
      throw std::invalid_argument("BitMatrix: bad dimensions (cols must be <= 128)");
  }

  static BitMatrix identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return (word(r, c >> 6) >> (c & 63)) & 1; }
  void set(int r, int c, bool v) {
    std::uint64_t& w = word(r, c >> 6);
    std::uint64_t m = std::uint64_t(1) << (c & 63);
    w = v ? (w | m) : (w & ~m);
  }

  std::uint64_t& word(int r, int k) { return w_[static_cast<std::size_t>(r) * kBitMatrixWords + k]; }
  std::uint64_t word(int r, int k) const { return w_[static_cast<std::size_t>(r) * kBitMatrixWords + k]; }
  const std::uint64_t* row_words(int r) const { return w_.data() + static_cast<std::size_t>(r) * kBitMatrixWords; }

  void xor_row(int dst, int src) {
    word(dst, 0) ^= word(src, 0);
    word(dst, 1) ^= word(src, 1);
  }
  void swap_rows(int a, int b) {
    std::swap(word(a, 0), word(b, 0));
    std::swap(word(a, 1), word(b, 1));
  }
  int row_weight(int r) const {
    return std::popcount(word(r, 0)) + std::popcount(word(r, 1));
  }
  bool row_is_zero(int r) const { return word(r, 0) == 0 && word(r, 1) == 0; }

  // Parity of <row r, row s>.
  bool dot_rows(int r, int s) const {
    std::uint64_t acc = (word(r, 0) & word(s, 0)) ^ (word(r, 1) & word(s, 1));
    return std::popcount(acc) & 1;
  }

  void append_row_bits(std::span<const std::uint8_t> bits) {
    if (static_cast<int>(bits.size()) != cols_) throw std::invalid_argument("append_row_bits: width mismatch");
    w_.insert(w_.end(), kBitMatrixWords, 0);
    ++rows_;
    for (int c = 0; c < cols_; ++c)
      if (bits[c]) set(rows_ - 1, c, true);
  }

  bool operator==(const BitMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> w_;
};

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref_in_place(BitMatrix& m) {
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.get(r, c)) { piv = r; break; }
    if (piv < 0) continue;
    m.swap_rows(rank, piv);
    for (int r = 0; r < m.rows(); ++r)
      if (r != rank && m.get(r, c)) m.xor_row(r, rank);
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

inline int rank(BitMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

// RREF with zero rows dropped.
inline BitMatrix row_basis(BitMatrix m) {
  int r = static_cast<int>(rref_in_place(m).size());
  BitMatrix out(r, m.cols());
  for (int i = 0; i < r; ++i) {
    out.word(i, 0) = m.word(i, 0);
    out.word(i, 1) = m.word(i, 1);
  }
  return out;
}

struct SystematicForm {
  BitMatrix mat;          // (I_k | A)
  std::vector<int> perm;  // column j of mat is column perm[j] of the input
};

// Column-permuted RREF (I_k | A). Throws if the input is rank deficient.
// Column permutations preserve weights, so distributions carry over.
inline SystematicForm systematic_form(const BitMatrix& g) {
  BitMatrix m = g;
  std::vector<int> pivots = rref_in_place(m);
  if (static_cast<int>(pivots.size()) != g.rows())
    throw std::invalid_argument("systematic_form: rank-deficient generator");
  std::vector<int> perm;
  perm.reserve(g.cols());
  std::vector<char> is_pivot(g.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  for (int c : pivots) perm.push_back(c);
  for (int c = 0; c < g.cols(); ++c)
    if (!is_pivot[c]) perm.push_back(c);
  BitMatrix out(g.rows(), g.cols());
  for (int r = 0; r < g.rows(); ++r)
    for (int j = 0; j < g.cols(); ++j)
      if (m.get(r, perm[j])) out.set(r, j, true);
  return {std::move(out), std::move(perm)};
}

// True iff the rows span a self-dual code: G*G^T = 0 and rank = n/2 with n even.
inline bool is_self_dual(const BitMatrix& g) {
  if (g.cols() % 2 != 0) return false;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = i; j < g.rows(); ++j)
      if (g.dot_rows(i, j)) return false;
  return rank(g) == g.cols() / 2;
}

// Binary generator of the Gray image of the ring code spanned by G.
// The Gray maps are additive, not R-linear, so each ring row contributes
// one binary row per module basis element (row, u*row, ... ); the result
// is the reduced row basis of those images. F2 input passes through bit
// for bit.
inline BitMatrix binary_generator(const RingMatrix& g) {
  const Ring& r = ring_info(g.ring());
  int bits = g.cols() * r.gray_width;
  if (bits > kBitMatrixMaxCols) throw std::invalid_argument("binary_generator: image wider than 128");
  if (g.ring() == RingId::F2) {
    BitMatrix out(0, bits);
    for (int i = 0; i < g.rows(); ++i) {
      std::vector<std::uint8_t> row(g.row(i).begin(), g.row(i).end());
      out.append_row_bits(row);
    }
    return out;
  }
  BitMatrix all(0, bits);
  for (int i = 0; i < g.rows(); ++i) {
    RingVector row = g.row_vector(i);
    for (std::uint8_t m : r.basis()) all.append_row_bits(gray_binary_image(scaled(row, m)));
  }
  return row_basis(std::move(all));
}

// ---- generator matrix text format ----
// Line 1: "k n" in ASCII decimals with a single space; then k lines of n
// characters from {0,1}; LF endings. Lines starting with '#' are comments
// and may appear anywhere.

inline std::string emit_generator_text(const BitMatrix& g,
                                       const std::vector<std::string>& header_comments = {},
                                       const std::vector<std::string>& footer_comments = {}) {
  std::string out;
  for (const std::string& c : header_comments) out += "# " + c + "\n";
  out += std::to_string(g.rows()) + " " + std::to_string(g.cols()) + "\n";
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) out.push_back(g.get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  for (const std::string& c : footer_comments) out += "# " + c + "\n";
  return out;
}

inline BitMatrix parse_generator_text(std::string_view text) {
  int line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) -> bool {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      line = text.substr(pos, eol - pos);
      pos = eol + (eol < text.size() ? 1 : 0);
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty() || line.front() == '#') continue;
      return true;
    }
    return false;
  };

  std::string_view header;
  if (!next_line(header)) throw std::invalid_argument("generator file: missing header line");
  int k = 0, n = 0;
  {
    std::size_t sp = header.find(' ');
    try {
      if (sp == std::string_view::npos) throw std::invalid_argument("");
      k = std::stoi(std::string(header.substr(0, sp)));
      n = std::stoi(std::string(header.substr(sp + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("generator file: bad header at line " + std::to_string(line_no));
    }
    if (k < 1 || n < 1 || n > kBitMatrixMaxCols)
      throw std::invalid_argument("generator file: bad dimensions at line " + std::to_string(line_no));
  }
  BitMatrix g(k, n);
  for (int i = 0; i < k; ++i) {
    std::string_view row;
    if (!next_line(row))
      throw std::invalid_argument("generator file: expected " + std::to_string(k) +
                                  " rows, file ends after " + std::to_string(i));
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("generator file: row of length " + std::to_string(row.size()) +
                                  " (expected " + std::to_string(n) + ") at line " + std::to_string(line_no));
    for (int j = 0; j < n; ++j) {
      if (row[j] == '1') g.set(i, j, true);
      else if (row[j] != '0')
        throw std::invalid_argument("generator file: invalid character at line " + std::to_string(line_no));
    }
  }
  return g;
}

}  // namespace sdcirc
