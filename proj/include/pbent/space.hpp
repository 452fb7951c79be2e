#pragma once

// F_p-vector spaces built as products of finite fields, GF(p^k1) x ... x GF(p^kr).
//
// A point is addressed by its canonical index: the factors' digit vectors are
// concatenated (factor 0 lowest) and read as a little-endian base-p number.
// For a pair (x, y) of GF(p^m) elements that gives index(x) + p^m * index(y).
// The inner product is <a, x> = sum_f tr_{k_f}(a_f x_f); a factor of degree 1
// contributes the plain product, so Z_p^n is the product of n copies of GF(p).

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pbent/gf.hpp"
#include "pbent/linalg.hpp"

namespace pbent {

inline constexpr int kMaxSpaceDim = 32;

class Space {
 public:
  Space() = default;

  static Space product(std::vector<Field> factors);
  static Space field(Field f) { return product({std::move(f)}); }
  /// Z_p^n with the dot product.
  static Space vector(std::uint32_t p, int n);

  bool valid() const { return impl_ != nullptr; }
  std::uint32_t p() const;
  int dimension() const;
  std::uint64_t size() const;
  const std::vector<Field>& factors() const;
  /// The single field of a one-factor space; SpecMismatch otherwise.
  const Field& as_field() const;

  std::vector<std::uint32_t> digits(Index x) const;
  Index index(std::span<const std::uint32_t> digits) const;

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index scale(std::uint32_t c, Index a) const;

  /// <a, x> computed through the Gram matrix of the digit basis.
  std::uint32_t inner(Index a, Index x) const;

  FieldElem component(Index x, std::size_t factor) const;
  Index join(std::span<const FieldElem> parts) const;

  /// Gram matrix G with <a, x> = a^T G x over the digit basis.
  const ZpMatrix& gram() const;
  /// a -> index(G a); the permutation relating field and dot-product forms.
  const std::vector<Index>& gram_map() const;
  /// Full table of <a, x> (row a, column x) evaluated by field multiplication
  /// and trace sums. Reference data for the naive transform; TooLarge above 2^26 entries.
  const std::vector<std::uint8_t>& inner_product_table() const;

  bool operator==(const Space& other) const;
  bool operator!=(const Space& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Z_p^t viewed as GF(p) x ... x GF(p); shares the GF(p) field across calls for a given p.
Field prime_field(std::uint32_t p);

}  // namespace pbent
