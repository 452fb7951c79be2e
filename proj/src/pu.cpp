#include "pbent/pu.hpp"

#include <functional>

#include "pbent/error.hpp"
#include "pbent/parallel.hpp"

namespace pbent {

namespace {

void require_independent(const Space& domain, std::span<const Index> U) {
  if (U.empty()) fail(Errc::InvalidArgument, "U must contain at least one element");
  for (Index u : U)
    if (u >= domain.size()) fail(Errc::InvalidArgument, "element of U outside the domain");
  if (!independent(domain, U)) fail(Errc::DependentU, "U is not linearly independent over F_p");
}

std::vector<PFunc> duals_of(const VectorialReport& report, std::vector<Index>& lambdas) {
  std::vector<PFunc> duals;
  for (const auto& c : report.components) {
    if (!c.regularity.weakly_regular) {
      fail(Errc::NotWeaklyRegular, "component lambda=" + std::to_string(c.lambda) + " is not weakly regular bent");
    }
    if (!c.regularity.dual) fail(Errc::InvalidArgument, "classification was run without keeping duals");
    duals.push_back(*c.regularity.dual);
    lambdas.push_back(c.lambda);
  }
  return duals;
}

}  // namespace

bool independent(const Space& domain, std::span<const Index> U) {
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(U.size());
  for (Index u : U) rows.push_back(domain.digits(u));
  return rank_mod_p(domain.p(), rows) == U.size();
}

bool second_derivative_vanishes(const PFunc& g, Index u, Index v) {
  const Space& d = g.domain();
  const std::uint32_t p = g.p();
  const Index uv = d.add(u, v);
  for (std::uint64_t xi = 0; xi < g.size(); ++xi) {
    const auto x = static_cast<Index>(xi);
    const std::uint32_t lhs = g(d.add(x, uv)) + g(x);
    const std::uint32_t rhs = g(d.add(x, u)) + g(d.add(x, v));
    if ((lhs + 2 * p - rhs) % p != 0) return false;
  }
  return true;
}

std::optional<PUWitness> check_pu_definition(const PFunc& g, std::span<const Index> U) {
  const Space& d = g.domain();
  require_independent(d, U);
  const std::uint32_t p = g.p();
  const std::size_t t = U.size();

  PUWitness witness;
  witness.U.assign(U.begin(), U.end());
  for (Index u : U) witness.witnesses.push_back(derivative(g, u));

  std::vector<std::uint32_t> w(t, 0);
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < t; ++i) combos *= p;
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::uint64_t v = code;
    Index shift = 0;
    for (std::size_t i = 0; i < t; ++i) {
      w[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
      if (w[i] != 0) shift = d.add(shift, d.scale(w[i], U[i]));
    }
    for (std::uint64_t xi = 0; xi < g.size(); ++xi) {
      const auto x = static_cast<Index>(xi);
      std::uint64_t rhs = g(x);
      for (std::size_t i = 0; i < t; ++i) rhs += std::uint64_t{w[i]} * witness.witnesses[i](x);
      if (g(d.add(x, shift)) != rhs % p) return std::nullopt;
    }
  }
  return witness;
}

bool check_pu_derivatives(const PFunc& g, std::span<const Index> U) {
  require_independent(g.domain(), U);
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = i; j < U.size(); ++j)
      if (!second_derivative_vanishes(g, U[i], U[j])) return false;
  return true;
}

DualsPUResult duals_satisfy_pu(const VectorialReport& report, std::span<const Index> U) {
  std::vector<Index> lambdas;
  const std::vector<PFunc> duals = duals_of(report, lambdas);
  if (duals.empty()) fail(Errc::InvalidArgument, "no components to check");
  require_independent(duals.front().domain(), U);

  DualsPUResult result;
  result.per_lambda.resize(duals.size());
  parallel_for(duals.size(), [&](std::size_t i) {
    LambdaPU& entry = result.per_lambda[i];
    entry.lambda = lambdas[i];
    if (check_pu_derivatives(duals[i], U)) {
      PUWitness w;
      w.U.assign(U.begin(), U.end());
      for (Index u : U) w.witnesses.push_back(derivative(duals[i], u));
      entry.witness = std::move(w);
    }
  });
  result.satisfied = true;
  for (const auto& e : result.per_lambda) result.satisfied = result.satisfied && e.witness.has_value();
  return result;
}

DualsPUResult duals_satisfy_pu(const VPFunc& G, std::span<const Index> U) {
  require_independent(G.domain(), U);
  return duals_satisfy_pu(vectorial_classify(G), U);
}

std::vector<std::vector<Index>> search_u_sets(const std::vector<PFunc>& duals, int t, std::size_t limit) {
  if (duals.empty()) fail(Errc::InvalidArgument, "no functions to search against");
  if (t < 1) fail(Errc::InvalidArgument, "t must be >= 1");
  const Space& d = duals.front().domain();
  if (t >= 2 && d.size() > kPairSearchLimit) {
    fail(Errc::TooLarge, "U search with t >= 2 is limited to p^n <= " + std::to_string(kPairSearchLimit) + " points (got " +
                             std::to_string(d.size()) + ")");
  }
  std::vector<std::vector<Index>> found;
  if (limit == 0 || t > d.dimension()) return found;

  auto all_vanish = [&](Index u, Index v) {
    for (const PFunc& g : duals)
      if (!second_derivative_vanishes(g, u, v)) return false;
    return true;
  };

  // singleton screening
  std::vector<char> admissible(d.size(), 0);
  parallel_for(d.size() - 1, [&](std::size_t i) { admissible[i + 1] = all_vanish(static_cast<Index>(i + 1), static_cast<Index>(i + 1)); });
  std::vector<Index> candidates;
  for (std::uint64_t u = 1; u < d.size(); ++u)
    if (admissible[u]) candidates.push_back(static_cast<Index>(u));

  const auto ts = static_cast<std::size_t>(t);
  if (ts == 1) {
    for (Index u : candidates) {
      if (found.size() >= limit) break;
      found.push_back({u});
    }
    return found;
  }

  const std::size_t c = candidates.size();
  std::vector<char> compatible(c * c, 0);
  parallel_for(c, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      const bool ok = all_vanish(candidates[i], candidates[j]);
      compatible[i * c + j] = compatible[j * c + i] = ok;
    }
  });

  std::vector<std::size_t> chosen;
  std::vector<Index> current;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (found.size() >= limit) return;
    if (chosen.size() == ts) {
      found.push_back(current);
      return;
    }
    for (std::size_t i = start; i < c && found.size() < limit; ++i) {
      bool ok = true;
      for (std::size_t j : chosen) ok = ok && compatible[j * c + i];
      if (!ok) continue;
      current.push_back(candidates[i]);
      if (independent(d, current)) {
        chosen.push_back(i);
        extend(i + 1);
        chosen.pop_back();
      }
      current.pop_back();
    }
  };
  extend(0);
  return found;
}

std::vector<std::vector<Index>> search_u_sets(const VPFunc& G, int t, std::size_t limit) {
  if (t >= 2 && G.domain().size() > kPairSearchLimit) {
    fail(Errc::TooLarge, "U search with t >= 2 is limited to p^n <= " + std::to_string(kPairSearchLimit) + " points");
  }
  if (limit == 0) return {};
  std::vector<Index> lambdas;
  return search_u_sets(duals_of(vectorial_classify(G), lambdas), t, limit);
}

}  // namespace pbent
