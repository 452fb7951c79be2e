#pragma once

// Helpers and independent oracles shared by the test suites.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <doctest.h>

#include "pbent/construct.hpp"
#include "pbent/cyclotomic.hpp"
#include "pbent/error.hpp"
#include "pbent/pfunc.hpp"
#include "pbent/spectral.hpp"

namespace testing {

using namespace pbent;

/// Runs fn and returns the Errc it threw; fails the test if it threw nothing.
inline std::optional<Errc> error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::optional<Precondition> precondition_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const PreconditionError& e) {
    return e.which();
  }
  return std::nullopt;
}

inline PFunc random_pfunc(const Space& s, std::mt19937_64& gen) {
  std::vector<std::uint8_t> v(s.size());
  for (auto& x : v) x = static_cast<std::uint8_t>(gen() % s.p());
  return PFunc(s, std::move(v));
}

inline VPFunc random_vpfunc(const Space& d, const Space& c, std::mt19937_64& gen) {
  std::vector<Index> v(d.size());
  for (auto& x : v) x = static_cast<Index>(gen() % c.size());
  return VPFunc(d, c, std::move(v));
}

/// Schoolbook product of two digit vectors reduced by the modulus; no use of FieldSpec::mul.
inline std::vector<std::uint32_t> poly_mulmod(std::uint32_t p, const std::vector<std::uint32_t>& modulus,
                                              std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^(d-k) * x^k, x^k = -sum modulus[i] x^i
    for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - modulus[i]) * c) % p;
  }
  return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k)};
}

/// W(a) = sum_x xi^(f(x) - <a,x>) with <a,x> = sum_f tr(a_f x_f) evaluated by
/// field multiplication and repeated Frobenius, accumulated in Z[xi].
inline std::vector<CycInt> direct_walsh(const PFunc& f) {
  const Space& s = f.domain();
  const std::uint32_t p = s.p();
  std::vector<CycInt> out;
  for (std::uint64_t a = 0; a < s.size(); ++a) {
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint64_t x = 0; x < s.size(); ++x) {
      std::uint32_t ip = 0;
      for (std::size_t k = 0; k < s.factors().size(); ++k) {
        const Field& fld = s.factors()[k];
        FieldElem prod = s.component(static_cast<Index>(a), k) * s.component(static_cast<Index>(x), k);
        FieldElem tr = fld->zero();
        for (int j = 0; j < fld->degree(); ++j) {
          tr = tr + prod;
          prod = fld->pow(prod, p);
        }
        ip = (ip + tr.scalar()) % p;
      }
      ++counts[(f(static_cast<Index>(x)) + p - ip) % p];
    }
    out.push_back(CycInt::from_redundant(p, counts));
  }
  return out;
}

/// Every (eps, c) with w = eps * g^n * xi^c, by brute force over the 2p candidates.
inline std::vector<UnitDecomposition> brute_units(const CycInt& w, std::uint32_t p, int n) {
  std::vector<UnitDecomposition> out;
  const CycInt g = gauss_power(p, n);
  for (int eps : {1, -1})
    for (std::uint32_t c = 0; c < p; ++c)
      if (CycInt::scalar(p, eps) * g * CycInt::root_power(p, c) == w) out.push_back({eps, c});
  return out;
}

inline Field gf(std::uint32_t p, int k) { return FieldSpec::make(p, find_irreducible(p, k)); }

/// Random element set of size t that is F_p-independent.
inline std::vector<FieldElem> random_independent(const Field& f, int t, std::mt19937_64& gen) {
  for (;;) {
    std::vector<FieldElem> out;
    for (int i = 0; i < t; ++i) out.push_back(f->element(static_cast<Index>(gen() % f->size())));
    if (linearly_independent(out)) return out;
  }
}

}  // namespace testing
