#include "pbent/linalg.hpp"

#include <utility>

#include "pbent/error.hpp"

namespace pbent {

namespace {

// Row-reduces `m` in place (cols [0, limit)); returns the rank.
std::size_t eliminate(ZpMatrix& m, std::size_t limit) {
  const std::uint32_t p = m.p();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < limit && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    }
    const std::uint32_t inv = inverse_mod(m.at(rank, col), p);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m.at(rank, c) = static_cast<std::uint32_t>(std::uint64_t{m.at(rank, c)} * inv % p);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const std::uint64_t factor = p - m.at(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.at(r, c) = static_cast<std::uint32_t>((m.at(r, c) + factor * m.at(rank, c)) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

ZpMatrix::ZpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ZpMatrix ZpMatrix::identity(std::uint32_t p, std::size_t size) {
  ZpMatrix m(p, size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

ZpMatrix ZpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ZpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(Errc::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c] % p;
  }
  return m;
}

std::vector<std::vector<std::uint32_t>> ZpMatrix::to_rows() const {
  std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
  return out;
}

void ZpMatrix::apply(std::span<const std::uint32_t> in, std::span<std::uint32_t> out) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{at(r, c)} * in[c];
    out[r] = static_cast<std::uint32_t>(acc % p_);
  }
}

ZpMatrix ZpMatrix::operator*(const ZpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) fail(Errc::SpecMismatch, "matrix shapes do not compose");
  ZpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += std::uint64_t{at(r, k)} * rhs.at(k, c);
      out.at(r, c) = static_cast<std::uint32_t>(acc % p_);
    }
  return out;
}

std::size_t ZpMatrix::rank() const {
  ZpMatrix copy = *this;
  return eliminate(copy, cols_);
}

std::optional<ZpMatrix> ZpMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  ZpMatrix aug(p_, rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  if (eliminate(aug, cols_) != rows_) return std::nullopt;
  ZpMatrix inv(p_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

std::size_t rank_mod_p(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& vectors) {
  if (vectors.empty()) return 0;
  return ZpMatrix::from_rows(p, vectors).rank();
}

}  // namespace pbent
