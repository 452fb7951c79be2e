#include <doctest.h>

#include <random>
#include <set>

#include "pbent/gf.hpp"
#include "pbent/linalg.hpp"
#include "pbent/space.hpp"
#include "support.hpp"

using namespace pbent;
using testing::error_code;

namespace {

Field gf9() { return FieldSpec::make(3, {1, 0, 1}); }

Field octic() { return FieldSpec::make(3, {2, 2, 2, 0, 1, 2, 0, 0, 1}); }

// Brute-force irreducibility: no monic factor of degree <= k/2, by trial multiplication.
bool brute_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  const int k = static_cast<int>(poly.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> f(d + 1);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[d] = 1;
      // long division of poly by f
      std::vector<std::int64_t> r(poly.begin(), poly.end());
      for (int i = k; i >= d; --i) {
        const std::int64_t q = ((r[i] % p) + p) % p;
        for (int j = 0; j <= d; ++j) r[i - d + j] = ((r[i - d + j] - q * f[j]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] % p == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("make_field accepts irreducible moduli and rejects bad input") {
  const Field f = gf9();
  CHECK(f->size() == 9);
  CHECK(f->degree() == 2);
  const Field big = octic();
  CHECK(big->size() == 6561);
  CHECK(error_code([] { FieldSpec::make(3, {2, 0, 1}); }) == Errc::ReducibleModulus);
  CHECK(error_code([] { FieldSpec::make(4, {1, 1}); }) == Errc::NotPrime);
  CHECK(error_code([] { FieldSpec::make(2, {1, 1, 1}); }) == Errc::NotPrime);
  CHECK(error_code([] { FieldSpec::make(3, {1, 0, 2}); }) == Errc::InvalidArgument);  // not monic
  CHECK(error_code([] { FieldSpec::make(3, {1, 3}); }) == Errc::InvalidArgument);     // digit >= p
}

TEST_CASE("arithmetic in GF(9) mod x^2+1") {
  const Field f = gf9();
  const FieldElem a = f->generator();
  CHECK(a.index() == 3);
  CHECK((a * a) == f->scalar(2));
  CHECK(f->inv(a) == f->scalar(2) * a);
  for (Index i = 1; i < 9; ++i) CHECK(f->pow(f->element(i), 0) == f->one());
  CHECK(error_code([&] { f->inv(f->zero()); }) == Errc::DivisionByZero);
}

TEST_CASE("trace examples in GF(9)") {
  const Field f = gf9();
  const FieldElem a = f->generator();
  CHECK(f->absolute_trace(a) == 0);
  CHECK(f->absolute_trace(f->one()) == 2);
  for (Index i = 0; i < 9; ++i) CHECK(f->trace(f->element(i), 2) == f->element(i));
  CHECK(error_code([&] { f->trace(a, 3); }) == Errc::DegreeNotDividing);
}

TEST_CASE("canonical index round trip") {
  for (const Field& f : {gf9(), testing::gf(5, 3), testing::gf(3, 5)}) {
    for (std::uint64_t i = 0; i < f->size(); ++i) {
      const FieldElem e = f->element(static_cast<Index>(i));
      CHECK(e.index() == i);
      CHECK(f->from_digits(e.digits()).index() == i);
      std::uint64_t idx = 0;
      for (int j = f->degree() - 1; j >= 0; --j) idx = idx * f->p() + e.digits()[j];
      CHECK(idx == i);
    }
  }
}

TEST_CASE("field axioms and multiplication against schoolbook oracle") {
  std::mt19937_64 gen(1);
  for (const Field& f : {gf9(), testing::gf(3, 5), testing::gf(5, 2), testing::gf(7, 3), octic()}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const FieldElem a = f->element(static_cast<Index>(gen() % f->size()));
      const FieldElem b = f->element(static_cast<Index>(gen() % f->size()));
      const FieldElem c = f->element(static_cast<Index>(gen() % f->size()));
      REQUIRE((a * b).digits().size() == static_cast<std::size_t>(f->degree()));
      const auto oracle = testing::poly_mulmod(f->p(), f->modulus(), a.digits(), b.digits());
      CHECK(f->from_digits(oracle) == a * b);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == f->zero());
      if (!a.is_zero()) CHECK(a * f->inv(a) == f->one());
    }
  }
}

TEST_CASE("mixing fields is rejected") {
  const Field a = gf9();
  const Field b = testing::gf(3, 3);
  CHECK(error_code([&] { (void)(a->one() * b->one()); }) == Errc::SpecMismatch);
  const FieldElem mixed[] = {a->one(), b->one()};
  CHECK(error_code([&] { linearly_independent(mixed); }) == Errc::SpecMismatch);
}

TEST_CASE("absolute trace is F_p-linear (exhaustive up to 3^5) and transitive") {
  for (const Field& f : {gf9(), testing::gf(3, 4), testing::gf(3, 5), testing::gf(5, 2)}) {
    const std::uint32_t p = f->p();
    for (std::uint64_t i = 0; i < f->size(); ++i) {
      const FieldElem x = f->element(static_cast<Index>(i));
      for (std::uint32_t c = 0; c < p; ++c) CHECK(f->absolute_trace(f->scalar(c) * x) == c * f->absolute_trace(x) % p);
      const FieldElem y = f->element(static_cast<Index>((i * 7 + 3) % f->size()));
      CHECK(f->absolute_trace(x + y) == (f->absolute_trace(x) + f->absolute_trace(y)) % p);
    }
  }
  const Field big = octic();
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 300; ++trial) {
    const FieldElem x = big->element(static_cast<Index>(gen() % big->size()));
    for (int m : {1, 2, 4, 8}) {
      const FieldElem down = big->trace(x, m);
      // the partial trace lies in the degree-m subfield: fixed by x -> x^(p^m)
      std::uint64_t pm = 1;
      for (int i = 0; i < m; ++i) pm *= 3;
      CHECK(big->pow(down, pm) == down);
      // tr_1^m of the partial trace, summed by hand inside the big field
      FieldElem acc = big->zero();
      FieldElem term = down;
      for (int j = 0; j < m; ++j) {
        acc = acc + term;
        term = big->frobenius(term);
      }
      CHECK(acc == big->scalar(big->absolute_trace(x)));
    }
  }
}

TEST_CASE("linearly_independent") {
  const Field f = gf9();
  const FieldElem x = f->generator();
  const FieldElem pair[] = {x, f->scalar(2) * x};
  CHECK_FALSE(linearly_independent(pair));
  const FieldElem zero[] = {f->zero()};
  CHECK_FALSE(linearly_independent(zero));
  const FieldElem basis[] = {f->one(), x};
  CHECK(linearly_independent(basis));

  // beta = a^82 spans GF(3^4) inside GF(3^8); {1, b, b^3, b^9} is independent there
  const Field big = octic();
  const FieldElem beta = big->pow(big->generator(), 82);
  const FieldElem set[] = {big->one(), beta, big->pow(beta, 3), big->pow(beta, 9)};
  CHECK(linearly_independent(set));
  CHECK(big->pow(beta, 81) == beta);
}

TEST_CASE("primitive element is the least-index generator of the multiplicative group") {
  for (const Field& f : {gf9(), testing::gf(3, 3), testing::gf(5, 2), testing::gf(7, 2), octic()}) {
    const FieldElem g = f->primitive();
    CHECK(f->order(g) == f->size() - 1);
    for (Index i = 1; i < g.index(); ++i) CHECK(f->order(f->element(i)) < f->size() - 1);
    // orders by brute force on small fields
    if (f->size() <= 49) {
      for (Index i = 1; i < f->size(); ++i) {
        std::uint64_t k = 1;
        FieldElem e = f->element(i);
        while (!(e == f->one())) {
          e = e * f->element(i);
          ++k;
        }
        CHECK(f->order(f->element(i)) == k);
      }
    }
  }
  CHECK(octic()->order(octic()->generator()) == 6560);  // the example's modulus is primitive
}

TEST_CASE("irreducibility test against trial division") {
  for (std::uint32_t p : {3u, 5u}) {
    for (int k : {1, 2, 3, 4}) {
      std::uint64_t count = 1;
      for (int i = 0; i < k; ++i) count *= p;
      if (count > 700) continue;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> poly(k + 1);
        std::uint64_t c = code;
        for (int i = 0; i < k; ++i) {
          poly[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        poly[k] = 1;
        CHECK(is_irreducible(p, poly) == brute_irreducible(p, poly));
      }
    }
  }
  CHECK(is_irreducible(3, {2, 2, 2, 0, 1, 2, 0, 0, 1}));
  CHECK(find_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("minimal polynomial") {
  const Field big = octic();
  for (Index i : {1u, 3u, 10u, 82u, 1234u, 6560u}) {
    const FieldElem x = big->element(i);
    const auto mp = minimal_polynomial(x);
    CHECK(mp.back() == 1);
    CHECK(is_irreducible(3, mp));
    CHECK(8 % (mp.size() - 1) == 0);
    FieldElem acc = big->zero();
    for (std::size_t j = mp.size(); j-- > 0;) acc = acc * x + big->scalar(mp[j]);
    CHECK(acc.is_zero());
  }
  const FieldElem beta = big->pow(big->generator(), 82);
  CHECK(minimal_polynomial(beta).size() == 5);
}

TEST_CASE("subfield embeddings") {
  const Field f3 = FieldSpec::make(3, {0, 1});
  const Field f9 = gf9();
  CHECK(subfield_embed(f3, f9, f3->zero()) == f9->zero());
  CHECK(subfield_embed(f3, f9, f3->one()) == f9->one());
  CHECK(subfield_embed(f3, f9, f3->scalar(2)) == f9->scalar(2));

  const Field q = testing::gf(3, 4);
  for (Index i = 0; i < q->size(); ++i) CHECK(subfield_embed(q, q, q->element(i)) == q->element(i));

  const Field big = octic();
  const SubfieldEmbedding& emb = subfield_embedding(q, big);
  CHECK(&emb == &subfield_embedding(q, big));  // cached
  std::set<Index> image;
  for (Index i = 0; i < q->size(); ++i) {
    const FieldElem a = q->element(i);
    image.insert(emb(a).index());
    CHECK(emb.preimage(emb(a)) == a);
    for (Index j : {0u, 1u, 5u, 17u, 80u}) {
      const FieldElem b = q->element(j);
      CHECK(emb(a + b) == emb(a) + emb(b));
      CHECK(emb(a * b) == emb(a) * emb(b));
    }
  }
  CHECK(image.size() == 81);
  CHECK(big->order(emb(q->primitive())) == 80);
  CHECK_FALSE(emb.preimage(big->generator()).has_value());
  CHECK(error_code([&] { subfield_embedding(testing::gf(3, 3), big); }) == Errc::DegreeNotDividing);
  CHECK(error_code([&] { subfield_embedding(testing::gf(5, 1), big); }) == Errc::SpecMismatch);
}

TEST_CASE("coefficient lists") {
  CHECK(parse_coefficients("2,2,2,0,1,2,0,0,1") == std::vector<std::uint32_t>{2, 2, 2, 0, 1, 2, 0, 0, 1});
  CHECK(format_coefficients({1, 0, 1}) == "1,0,1");
  CHECK(error_code([] { parse_coefficients("1,x,1"); }) == Errc::InvalidArgument);
  CHECK(error_code([] { parse_coefficients(""); }) == Errc::InvalidArgument);
}

TEST_CASE("matrices over Z_p") {
  const ZpMatrix m = ZpMatrix::from_rows(3, {{1, 2}, {0, 1}});
  CHECK(m.rank() == 2);
  const auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m * *inv == ZpMatrix::identity(3, 2));
  CHECK_FALSE(ZpMatrix::from_rows(3, {{1, 2}, {2, 1}}).inverse().has_value());
  CHECK(rank_mod_p(5, {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}) == 2);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(a * inverse_mod(a, 7) % 7 == 1);
}

TEST_CASE("product spaces: indexing and the trace inner product") {
  const Field f = gf9();
  const Space pairs = Space::product({f, f});
  CHECK(pairs.size() == 81);
  CHECK(pairs.dimension() == 4);
  for (Index x = 0; x < 9; ++x) {
    for (Index y = 0; y < 9; ++y) {
      const FieldElem parts[] = {f->element(x), f->element(y)};
      CHECK(pairs.join(parts) == x + 9 * y);
      CHECK(pairs.component(x + 9 * y, 0) == f->element(x));
      CHECK(pairs.component(x + 9 * y, 1) == f->element(y));
    }
  }
  for (Index a = 0; a < 81; ++a) {
    for (Index x = 0; x < 81; ++x) {
      const std::uint32_t expect =
          (f->absolute_trace(pairs.component(a, 0) * pairs.component(x, 0)) +
           f->absolute_trace(pairs.component(a, 1) * pairs.component(x, 1))) % 3;
      CHECK(pairs.inner(a, x) == expect);
      CHECK(pairs.inner_product_table()[std::size_t{a} * 81 + x] == expect);
    }
    CHECK(pairs.add(a, pairs.neg(a)) == 0);
  }
  const Space v = Space::vector(5, 3);
  CHECK(v.inner(v.index(std::vector<std::uint32_t>{1, 2, 3}), v.index(std::vector<std::uint32_t>{4, 0, 2})) == (4 + 6) % 5);
  CHECK(v == Space::vector(5, 3));
  CHECK(v != Space::vector(5, 2));
}
