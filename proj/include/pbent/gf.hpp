#pragma once

// Arithmetic in GF(p^k), p odd, in a polynomial basis over a caller-chosen
// irreducible modulus.
//
// Elements are enumerated canonically: the element with little-endian
// coordinates (d_0, ..., d_{k-1}) has index d_0 + d_1 p + ... + d_{k-1} p^{k-1}.
// Every truth table in this library is indexed in that order.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbent {

using Index = std::uint32_t;

inline constexpr int kMaxDegree = 16;

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

class FieldElem {
 public:
  FieldElem() = default;

  const FieldSpec& spec() const;
  bool valid() const { return spec_ != nullptr; }
  Index index() const;
  std::span<const std::uint32_t> digits() const;
  bool is_zero() const;
  /// Constant coordinate; the value of an element of the prime field.
  std::uint32_t scalar() const { return digits_[0]; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  friend class FieldSpec;
  const FieldSpec* spec_ = nullptr;
  std::array<std::uint32_t, kMaxDegree> digits_{};
};

/// GF(p^k) = F_p[x] / (modulus). Immutable once built; share through `Field`.
class FieldSpec {
 public:
  /// `modulus` holds k+1 coefficients, constant term first, and must be monic.
  /// Throws NotPrime (p not an odd prime) or ReducibleModulus.
  static Field make(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t size() const { return size_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem element(Index index) const;
  FieldElem from_digits(std::span<const std::uint32_t> digits) const;
  FieldElem zero() const { return element(0); }
  FieldElem one() const { return element(1); }
  FieldElem scalar(std::uint32_t c) const { return element(c % p_); }
  /// The class of x modulo the modulus.
  FieldElem generator() const;
  /// Least-index element of multiplicative order p^k - 1.
  FieldElem primitive() const { return element(primitive_); }

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  /// Throws DivisionByZero on 0.
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
  FieldElem pow(const FieldElem& a, std::uint64_t e) const;
  FieldElem frobenius(const FieldElem& a) const { return pow(a, p_); }

  /// tr_m^k(x) = sum_{j < k/m} x^(p^(m j)). Throws DegreeNotDividing unless m | k.
  FieldElem trace(const FieldElem& x, int to_degree) const;
  /// tr_1^k(x) as a scalar in [0, p).
  std::uint32_t absolute_trace(const FieldElem& x) const { return trace(x, 1).scalar(); }

  std::uint64_t order(const FieldElem& a) const;

  /// Same p and modulus.
  bool same_as(const FieldSpec& other) const;
  void check_member(const FieldElem& a) const;

  std::string describe() const;

 private:
  FieldSpec() = default;

  std::uint32_t p_ = 0;
  int k_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> order_factors_;
  Index primitive_ = 0;
};

FieldElem inv(const FieldElem& a);
FieldElem pow(const FieldElem& a, std::uint64_t e);

/// tr from GF(p^n) down to its degree-m subfield; the result stays in GF(p^n).
FieldElem trace(const FieldElem& x, int to_degree);

/// True iff no nontrivial Z_p-combination of `elems` vanishes.
/// Throws SpecMismatch if the elements live in different fields.
bool linearly_independent(std::span<const FieldElem> elems);

bool is_prime(std::uint64_t n);

/// Irreducibility of a monic polynomial over F_p (constant term first).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Least monic irreducible of degree k, ordering candidates by the canonical
/// index of their low k coefficients.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int k);

/// Minimal polynomial over F_p of `x`, monic, constant term first.
std::vector<std::uint32_t> minimal_polynomial(const FieldElem& x);

/// Fixed embedding GF(p^t) -> GF(p^m) for t | m. The generator of the small
/// field is sent to the least-index root of its minimal polynomial in the big field.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(Field sub, Field sup);

  const Field& sub() const { return sub_; }
  const Field& sup() const { return sup_; }

  FieldElem operator()(const FieldElem& x) const;
  /// Inverse on the image; nullopt for elements outside the subfield.
  std::optional<FieldElem> preimage(const FieldElem& y) const;

 private:
  Field sub_;
  Field sup_;
  std::vector<FieldElem> basis_images_;
  std::vector<std::int64_t> inverse_table_;
};

/// Cached embedding for the pair (sub, sup). Throws DegreeNotDividing unless
/// deg(sub) | deg(sup), SpecMismatch if the characteristics differ.
const SubfieldEmbedding& subfield_embedding(const Field& sub, const Field& sup);

FieldElem subfield_embed(const Field& sub, const Field& sup, const FieldElem& x);

/// Parses "c0,c1,...,ck" (constant term first).
std::vector<std::uint32_t> parse_coefficients(const std::string& text);
std::string format_coefficients(const std::vector<std::uint32_t>& coeffs);

}  // namespace pbent
