#pragma once

// Exact arithmetic in Z[xi_p], xi_p = exp(2 pi i / p).
//
// Elements are stored in the power basis {1, xi, ..., xi^(p-2)}; xi^(p-1) is
// rewritten as -(1 + xi + ... + xi^(p-2)) on every operation, so two values are
// equal iff their coordinate vectors are. Coordinates are checked 128-bit integers.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbent {

class CycInt {
 public:
  using Coord = __int128;

  CycInt() = default;
  /// Zero of Z[xi_p].
  explicit CycInt(std::uint32_t p);

  static CycInt scalar(std::uint32_t p, Coord value);
  /// xi^k for any integer k.
  static CycInt root_power(std::uint32_t p, std::int64_t k);
  /// Power-basis coordinates; must have length p - 1.
  static CycInt from_coords(std::uint32_t p, std::span<const std::int64_t> coords);
  /// Reduces a length-p vector over {1, xi, ..., xi^(p-1)}.
  static CycInt from_redundant(std::uint32_t p, std::span<const std::int64_t> coords);

  std::uint32_t p() const { return p_; }
  std::span<const Coord> coords() const { return coords_; }
  /// Coordinates narrowed to 64 bits; CoordinateOverflow if any does not fit.
  std::vector<std::int64_t> coords64() const;

  bool is_zero() const;
  /// The rational integer r when the value is r * 1.
  std::optional<Coord> as_integer() const;

  /// Complex conjugation, xi -> xi^(p-1).
  CycInt conj() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator-(const CycInt& a);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b) = default;

  /// "[c0,c1,...]"
  std::string to_string() const;

 private:
  void check_prime(const CycInt& other) const;

  std::uint32_t p_ = 0;
  std::vector<Coord> coords_;
};

/// z * conj(z), an element of the real subfield.
CycInt norm(const CycInt& z);

/// z * conj(z) as a rational integer; NotRationalInteger if it is not one.
/// For p >= 5 the Walsh values of a non-plateaued function can fail this.
CycInt::Coord sq_abs(const CycInt& z);

/// sum_{x in Z_p} xi^(x^2); its square is (-1)^((p-1)/2) p.
CycInt gauss_sum(std::uint32_t p);
CycInt gauss_power(std::uint32_t p, int n);

struct UnitDecomposition {
  int epsilon = 1;     // +1 or -1
  std::uint32_t c = 0;  // exponent of xi

  bool operator==(const UnitDecomposition&) const = default;
};

/// The unique (epsilon, c) with w = epsilon * g^n * xi^c, g the Gauss sum.
std::optional<UnitDecomposition> unit_decompose(const CycInt& w, std::uint32_t p, int n);

/// Precomputed candidates epsilon * g^n * xi^c for one (p, n); amortizes
/// unit_decompose across a whole spectrum.
class UnitTable {
 public:
  UnitTable(std::uint32_t p, int n);
  std::optional<UnitDecomposition> find(const CycInt& w) const;

 private:
  std::uint32_t p_;
  std::vector<std::pair<CycInt, UnitDecomposition>> candidates_;
};

/// The unit z with z p^(-n/2) W = xi^(f*), given W = epsilon g^n xi^(f*).
enum class ZLabel { PlusOne, MinusOne, PlusI, MinusI };

ZLabel z_label(int epsilon, std::uint32_t p, int n);
std::string to_string(ZLabel z);

std::string to_string(CycInt::Coord value);

}  // namespace pbent
