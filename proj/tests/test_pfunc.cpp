#include <doctest.h>

#include <random>
#include <sstream>

#include "pbent/pfunc.hpp"
#include "support.hpp"

using namespace pbent;
using testing::error_code;

namespace {

Field gf9() { return FieldSpec::make(3, {1, 0, 1}); }

PFunc square3() {
  return PFunc::from(Space::vector(3, 1), [](Index x) { return x * x % 3; });
}

}  // namespace

TEST_CASE("components") {
  const Field f = gf9();
  const Space s = Space::field(f);
  const VPFunc id = VPFunc::from(s, s, [](Index x) { return x; });
  const PFunc c = component(id, 1);
  for (Index x = 0; x < 9; ++x) CHECK(c(x) == 2 * (x % 3) % 3);  // x = a + b alpha -> 2a

  const VPFunc zero(s, s);
  for (Index l = 1; l < 9; ++l) CHECK(is_zero(component(zero, l)));
  CHECK(error_code([&] { component(id, 0); }) == Errc::ZeroLambda);

  const Space line = Space::vector(5, 2);
  std::mt19937_64 gen(5);
  const VPFunc F = testing::random_vpfunc(line, Space::vector(5, 1), gen);
  for (Index l = 1; l < 5; ++l)
    for (Index x = 0; x < 25; ++x) CHECK(component(F, l)(x) == l * F(x) % 5);
}

TEST_CASE("component is additive in lambda") {
  std::mt19937_64 gen(6);
  const Field f = testing::gf(3, 3);
  const Space d = Space::vector(3, 4);
  const Space c = Space::field(f);
  const VPFunc F = testing::random_vpfunc(d, c, gen);
  for (int trial = 0; trial < 40; ++trial) {
    const Index a = 1 + static_cast<Index>(gen() % 26);
    const Index b = 1 + static_cast<Index>(gen() % 26);
    const Index ab = c.add(a, b);
    if (ab == 0) continue;
    CHECK(component(F, ab) == add(component(F, a), component(F, b)));
  }
}

TEST_CASE("derivatives") {
  const PFunc sq = square3();
  const PFunc d1 = derivative(sq, 1);
  for (Index x = 0; x < 3; ++x) CHECK(d1(x) == (2 * x + 1) % 3);
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b) {
      const PFunc dd = second_derivative(sq, a, b);
      for (Index x = 0; x < 3; ++x) CHECK(dd(x) == 2 * a * b % 3);
      CHECK(dd == derivative(derivative(sq, a), b));
    }

  const Field f = gf9();
  const Space s = Space::field(f);
  const FieldElem coeff = f->element(5);
  const PFunc affine = PFunc::from(s, [&](Index x) { return (f->absolute_trace(coeff * f->element(x)) + 1) % 3; });
  for (Index a = 0; a < 9; ++a) {
    const PFunc d = derivative(affine, a);
    for (Index x = 0; x < 9; ++x) CHECK(d(x) == f->absolute_trace(coeff * f->element(a)));
    for (Index b = 0; b < 9; ++b) CHECK(is_zero(second_derivative(affine, a, b)));
  }
}

TEST_CASE("second derivatives commute") {
  std::mt19937_64 gen(7);
  const Space s = Space::field(gf9());
  const PFunc f = testing::random_pfunc(s, gen);
  for (Index a = 0; a < 9; ++a)
    for (Index b = 0; b < 9; ++b) CHECK(second_derivative(f, a, b) == second_derivative(f, b, a));
  const Space big = Space::vector(5, 3);
  const PFunc g = testing::random_pfunc(big, gen);
  for (int trial = 0; trial < 30; ++trial) {
    const Index a = static_cast<Index>(gen() % 125), b = static_cast<Index>(gen() % 125);
    CHECK(second_derivative(g, a, b) == second_derivative(g, b, a));
  }
}

TEST_CASE("ANF and degree") {
  const Space s1 = Space::vector(3, 1);
  const PFunc c = PFunc::from(s1, [](Index) { return 2u; });
  const ANF ac = anf(c);
  CHECK(ac.coefficients()[0] == 2);
  CHECK(ac.coefficients()[1] == 0);
  CHECK(degree(c) == 0);

  const ANF asq = anf(square3());
  CHECK(std::vector<std::uint8_t>(asq.coefficients().begin(), asq.coefficients().end()) == std::vector<std::uint8_t>{0, 0, 1});
  CHECK(degree(square3()) == 1);

  const Space s2 = Space::vector(3, 2);
  const PFunc prod = PFunc::from(s2, [&](Index x) {
    const auto d = s2.digits(x);
    return d[0] * d[1] % 3;
  });
  CHECK(degree(prod) == 2);
  CHECK(degree(PFunc(s2)) == 0);
}

TEST_CASE("ANF evaluation reproduces the table") {
  std::mt19937_64 gen(8);
  for (const Space& s : {Space::vector(3, 1), Space::vector(3, 3), Space::vector(3, 5), Space::vector(5, 2),
                         Space::vector(7, 2), Space::field(gf9())}) {
    for (int trial = 0; trial < 3; ++trial) {
      const PFunc f = testing::random_pfunc(s, gen);
      const ANF a = anf(f);
      for (std::uint64_t x = 0; x < s.size(); ++x) CHECK(a.evaluate(s.digits(static_cast<Index>(x))) == f(static_cast<Index>(x)));
      for (Index u : {1u, 2u, static_cast<Index>(s.size() - 1)}) CHECK(degree(derivative(f, u)) <= degree(f));
    }
  }
}

TEST_CASE("pointwise operations") {
  std::mt19937_64 gen(9);
  const Space s = Space::vector(5, 2);
  const PFunc f = testing::random_pfunc(s, gen);
  CHECK(is_zero(add(f, negate(f))));
  CHECK(scalar_mul(1, f) == f);
  CHECK(add(f, PFunc(s)) == f);
  for (Index x = 0; x < 25; ++x) CHECK(scalar_mul(3, f)(x) == 3 * f(x) % 5);
  CHECK(error_code([&] { add(f, PFunc(Space::vector(5, 1))); }) == Errc::SpecMismatch);
  const PFunc r = reflect(f);
  for (Index x = 0; x < 25; ++x) CHECK(r(x) == f(s.neg(x)));
}

TEST_CASE(".ptt round trip") {
  std::mt19937_64 gen(10);
  const Field f = gf9();
  const Space d = Space::product({f, f});
  const VPFunc F = testing::random_vpfunc(d, Space::field(f), gen);
  std::stringstream ss;
  write_ptt(ss, to_truth_table(F));
  CHECK(ss.str().rfind("PTT v1 p=3 n=4 m=2\n", 0) == 0);
  const TruthTable t = read_ptt(ss);
  CHECK(t.p == 3);
  CHECK(t.n == 4);
  CHECK(t.m == 2);
  CHECK(from_truth_table(t, d, Space::field(f)) == F);

  const PFunc g = testing::random_pfunc(Space::vector(3, 2), gen);
  std::stringstream s2;
  write_ptt(s2, to_truth_table(g));
  const TruthTable tg = read_ptt(s2);
  CHECK(tg.m == 1);
  for (Index x = 0; x < 9; ++x) CHECK(tg.values[x] == g(x));
}

TEST_CASE(".ptt parse errors name the line") {
  auto message = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      read_ptt(in);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
      return e.what();
    }
    return "";
  };
  CHECK(message("PTT v2 p=3 n=1 m=1\n0\n1\n2\n").find("line 1") != std::string::npos);
  CHECK(message("PTT v1 p=4 n=1 m=1\n0\n1\n2\n3\n").find("line 1") != std::string::npos);
  CHECK(message("PTT v1 p=3 n=1 m=1\n0\n1\n").find("truncated") != std::string::npos);
  CHECK(message("PTT v1 p=3 n=1 m=1\n0\nx\n2\n").find("line 3") != std::string::npos);
  CHECK(message("PTT v1 p=3 n=1 m=1\n0\n3\n2\n").find("line 3") != std::string::npos);
  CHECK(message("PTT v1 p=3 n=1 m=1\n0\n1\n2\n0\n").find("line 5") != std::string::npos);
  CHECK(message("").find("line 1") != std::string::npos);
}
