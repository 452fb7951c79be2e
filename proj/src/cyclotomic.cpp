#include "pbent/cyclotomic.hpp"

#include <algorithm>

#include "pbent/error.hpp"
#include "pbent/gf.hpp"

namespace pbent {

namespace {

using Coord = CycInt::Coord;

Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::CoordinateOverflow, "cyclotomic coordinate overflow (add)");
  return r;
}

Coord checked_sub(Coord a, Coord b) {
  Coord r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::CoordinateOverflow, "cyclotomic coordinate overflow (sub)");
  return r;
}

Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::CoordinateOverflow, "cyclotomic coordinate overflow (mul)");
  return r;
}

// Length-p redundant vector -> power basis.
std::vector<Coord> reduce(std::vector<Coord> full, std::uint32_t p) {
  const Coord top = full[p - 1];
  full.resize(p - 1);
  if (top != 0) {
    for (auto& c : full) c = checked_sub(c, top);
  }
  return full;
}

}  // namespace

std::string to_string(Coord value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1 : static_cast<unsigned __int128>(value);
  std::string out;
  while (mag > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

CycInt::CycInt(std::uint32_t p) : p_(p), coords_(p - 1, 0) {
  if (p < 3 || !is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
}

CycInt CycInt::scalar(std::uint32_t p, Coord value) {
  CycInt z(p);
  z.coords_[0] = value;
  return z;
}

CycInt CycInt::root_power(std::uint32_t p, std::int64_t k) {
  CycInt z(p);
  const auto r = static_cast<std::uint32_t>(((k % static_cast<std::int64_t>(p)) + p) % p);
  if (r == p - 1) {
    std::fill(z.coords_.begin(), z.coords_.end(), Coord{-1});
  } else {
    z.coords_[r] = 1;
  }
  return z;
}

CycInt CycInt::from_coords(std::uint32_t p, std::span<const std::int64_t> coords) {
  CycInt z(p);
  if (coords.size() != p - 1) fail(Errc::InvalidArgument, "expected p-1 coordinates");
  std::copy(coords.begin(), coords.end(), z.coords_.begin());
  return z;
}

CycInt CycInt::from_redundant(std::uint32_t p, std::span<const std::int64_t> coords) {
  CycInt z(p);
  if (coords.size() != p) fail(Errc::InvalidArgument, "expected p redundant coordinates");
  z.coords_ = reduce(std::vector<Coord>(coords.begin(), coords.end()), p);
  return z;
}

std::vector<std::int64_t> CycInt::coords64() const {
  std::vector<std::int64_t> out;
  out.reserve(coords_.size());
  for (Coord c : coords_) {
    if (c > INT64_MAX || c < INT64_MIN) fail(Errc::CoordinateOverflow, "coordinate does not fit in 64 bits");
    out.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

bool CycInt::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

std::optional<Coord> CycInt::as_integer() const {
  if (coords_.empty()) return std::nullopt;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return std::nullopt;
  return coords_[0];
}

void CycInt::check_prime(const CycInt& other) const {
  if (p_ != other.p_) {
    fail(Errc::PrimeMismatch, "Z[xi_" + std::to_string(p_) + "] vs Z[xi_" + std::to_string(other.p_) + "]");
  }
}

CycInt CycInt::conj() const {
  // xi^j -> xi^(p-j), computed on the redundant vector
  std::vector<Coord> full(p_, 0);
  for (std::uint32_t j = 0; j + 1 < p_; ++j) full[(p_ - j) % p_] = coords_[j];
  CycInt z(p_);
  z.coords_ = reduce(std::move(full), p_);
  return z;
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  check_prime(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], rhs.coords_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  check_prime(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], rhs.coords_[i]);
  return *this;
}

CycInt operator-(const CycInt& a) { return CycInt(a.p_) - a; }

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_prime(b);
  const std::uint32_t p = a.p_;
  std::vector<Coord> full(p, 0);
  for (std::uint32_t i = 0; i + 1 < p; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p; ++j) {
      if (b.coords_[j] == 0) continue;
      auto& cell = full[(i + j) % p];
      cell = checked_add(cell, checked_mul(a.coords_[i], b.coords_[j]));
    }
  }
  CycInt z(p);
  z.coords_ = reduce(std::move(full), p);
  return z;
}

std::string CycInt::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += pbent::to_string(coords_[i]);
  }
  out += ']';
  return out;
}

CycInt norm(const CycInt& z) { return z * z.conj(); }

Coord sq_abs(const CycInt& z) {
  const CycInt prod = z * z.conj();
  const auto r = prod.as_integer();
  if (!r) fail(Errc::NotRationalInteger, "z * conj(z) = " + prod.to_string() + " is not a rational integer");
  return *r;
}

CycInt gauss_sum(std::uint32_t p) {
  CycInt g(p);
  for (std::uint64_t x = 0; x < p; ++x) g += CycInt::root_power(p, static_cast<std::int64_t>(x * x % p));
  return g;
}

CycInt gauss_power(std::uint32_t p, int n) {
  if (n < 0) fail(Errc::InvalidArgument, "negative Gauss-sum power");
  const CycInt g = gauss_sum(p);
  CycInt acc = CycInt::scalar(p, 1);
  for (int i = 0; i < n; ++i) acc = acc * g;
  return acc;
}

UnitTable::UnitTable(std::uint32_t p, int n) : p_(p) {
  const CycInt gn = gauss_power(p, n);
  for (int eps : {1, -1}) {
    const CycInt base = eps == 1 ? gn : -gn;
    for (std::uint32_t c = 0; c < p; ++c) {
      candidates_.emplace_back(base * CycInt::root_power(p, c), UnitDecomposition{eps, c});
    }
  }
}

std::optional<UnitDecomposition> UnitTable::find(const CycInt& w) const {
  if (w.p() != p_) fail(Errc::PrimeMismatch, "unit table built for another prime");
  for (const auto& [value, dec] : candidates_)
    if (value == w) return dec;
  return std::nullopt;
}

std::optional<UnitDecomposition> unit_decompose(const CycInt& w, std::uint32_t p, int n) {
  return UnitTable(p, n).find(w);
}

ZLabel z_label(int epsilon, std::uint32_t p, int n) {
  // g = sqrt(p) for p = 1 (mod 4) and i sqrt(p) for p = 3 (mod 4), so
  // z = epsilon when p = 1 (mod 4) and z = epsilon * (-i)^n otherwise.
  int quarter_turns = 0;  // z = i^quarter_turns
  if (epsilon < 0) quarter_turns += 2;
  if (p % 4 == 3) quarter_turns += 3 * (n % 4);
  switch (quarter_turns % 4) {
    case 0: return ZLabel::PlusOne;
    case 1: return ZLabel::PlusI;
    case 2: return ZLabel::MinusOne;
    default: return ZLabel::MinusI;
  }
}

std::string to_string(ZLabel z) {
  switch (z) {
    case ZLabel::PlusOne: return "+1";
    case ZLabel::MinusOne: return "-1";
    case ZLabel::PlusI: return "+i";
    case ZLabel::MinusI: return "-i";
  }
  return "?";
}

}  // namespace pbent
