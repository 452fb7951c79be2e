#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pbent {

/// Dense matrix over Z_p, row-major.
class ZpMatrix {
 public:
  ZpMatrix() = default;
  ZpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static ZpMatrix identity(std::uint32_t p, std::size_t size);
  static ZpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& rows);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::vector<std::uint32_t>> to_rows() const;

  /// out = M * in (column vector).
  void apply(std::span<const std::uint32_t> in, std::span<std::uint32_t> out) const;

  ZpMatrix operator*(const ZpMatrix& rhs) const;
  bool operator==(const ZpMatrix& rhs) const = default;

  std::size_t rank() const;
  std::optional<ZpMatrix> inverse() const;

 private:
  std::uint32_t p_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Rank of a family of Z_p vectors (all of equal length).
std::size_t rank_mod_p(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& vectors);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace pbent
