#pragma once

// Truth tables of p-ary functions f: D -> Z_p and vectorial functions F: D -> C,
// where D and C are `Space`s. Tables are indexed by canonical point index.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "pbent/space.hpp"

namespace pbent {

class PFunc {
 public:
  PFunc() = default;
  /// Zero function.
  explicit PFunc(Space domain);
  PFunc(Space domain, std::vector<std::uint8_t> values);

  static PFunc from(Space domain, const std::function<std::uint32_t(Index)>& fn);

  const Space& domain() const { return domain_; }
  std::uint32_t p() const { return domain_.p(); }
  std::uint64_t size() const { return values_.size(); }
  std::span<const std::uint8_t> values() const { return values_; }
  std::uint8_t operator()(Index x) const { return values_[x]; }
  void set(Index x, std::uint32_t v) { values_[x] = static_cast<std::uint8_t>(v % p()); }

  bool operator==(const PFunc& other) const { return domain_ == other.domain_ && values_ == other.values_; }

 private:
  Space domain_;
  std::vector<std::uint8_t> values_;
};

class VPFunc {
 public:
  VPFunc() = default;
  VPFunc(Space domain, Space codomain);
  VPFunc(Space domain, Space codomain, std::vector<Index> values);

  static VPFunc from(Space domain, Space codomain, const std::function<Index(Index)>& fn);

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  std::span<const Index> values() const { return values_; }
  Index operator()(Index x) const { return values_[x]; }

  bool operator==(const VPFunc& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && values_ == other.values_;
  }

 private:
  Space domain_;
  Space codomain_;
  std::vector<Index> values_;
};

/// x -> <lambda, F(x)> in the codomain; tr_m(lambda F(x)) for a field codomain.
/// Throws ZeroLambda for lambda = 0.
PFunc component(const VPFunc& F, Index lambda);

/// D_a f(x) = f(x + a) - f(x).
PFunc derivative(const PFunc& f, Index a);
PFunc second_derivative(const PFunc& f, Index a, Index b);

PFunc add(const PFunc& f, const PFunc& g);
PFunc negate(const PFunc& f);
PFunc scalar_mul(std::uint32_t c, const PFunc& f);
bool is_zero(const PFunc& f);

/// x -> f(-x)
PFunc reflect(const PFunc& f);

/// Algebraic normal form over the digit coordinates: coefficient of
/// prod_i x_i^(a_i) stored at the canonical index of the exponent tuple a.
class ANF {
 public:
  ANF(std::uint32_t p, int n, std::vector<std::uint8_t> coeffs);

  std::uint32_t p() const { return p_; }
  int variables() const { return n_; }
  std::span<const std::uint8_t> coefficients() const { return coeffs_; }
  std::uint32_t coefficient(std::span<const std::uint32_t> exponents) const;

  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

 private:
  std::uint32_t p_;
  int n_;
  std::vector<std::uint8_t> coeffs_;
};

ANF anf(const PFunc& f);

/// max wt(a) over nonzero coefficients, wt(a) = #{i : a_i != 0}; 0 for constants
/// (including the zero function).
int degree(const PFunc& f);

// --- .ptt text format -------------------------------------------------------
//   PTT v1 p=<p> n=<n> m=<m>
//   <p^n lines: canonical index of F(x), domain in canonical order>

struct TruthTable {
  std::uint32_t p = 0;
  int n = 0;
  int m = 0;
  std::vector<Index> values;
};

/// Throws ParseError naming the offending line.
TruthTable read_ptt(std::istream& in);
void write_ptt(std::ostream& out, const TruthTable& table);
TruthTable to_truth_table(const VPFunc& F);
TruthTable to_truth_table(const PFunc& f);
/// Reinterprets a table over the given spaces (dimensions must match the header).
VPFunc from_truth_table(const TruthTable& table, Space domain, Space codomain);

}  // namespace pbent
