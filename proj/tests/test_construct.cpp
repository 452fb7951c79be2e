#include <doctest.h>

#include <random>

#include "pbent/construct.hpp"
#include "support.hpp"

using namespace pbent;
using testing::error_code;
using testing::precondition_of;

namespace {

Field gf3() { return FieldSpec::make(3, {0, 1}); }
Field gf9() { return FieldSpec::make(3, {1, 0, 1}); }

std::vector<Index> pair_indices(const Field& f, const std::vector<FieldElem>& alphas) {
  const Space s = pair_space(f);
  std::vector<Index> U;
  for (const FieldElem& a : alphas) {
    const FieldElem parts[] = {a, f->zero()};
    U.push_back(s.join(parts));
  }
  return U;
}

// f^ by direct evaluation: the dual read off the spectrum of each component.
PFunc spectral_dual(const PFunc& f) {
  const RegularityReport r = classify_weak_regular(f);
  REQUIRE(r.weakly_regular);
  return *r.dual;
}

}  // namespace

TEST_CASE("linear permutations") {
  const Field f = gf9();
  CHECK(error_code([&] { LinearPermutation(f, ZpMatrix(3, 2, 2)); }) == Errc::InvalidArgument);
  CHECK(error_code([&] { LinearPermutation(f, ZpMatrix(3, 3, 2)); }) == Errc::InvalidArgument);

  const LinearPermutation a = random_linear_permutation(f, 5);
  const LinearPermutation b = random_linear_permutation(f, 5);
  CHECK(a.matrix() == b.matrix());
  std::mt19937_64 gen(30);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldElem x = f->element(static_cast<Index>(gen() % 9));
    const FieldElem y = f->element(static_cast<Index>(gen() % 9));
    const std::uint32_t c = static_cast<std::uint32_t>(gen() % 3);
    CHECK(a(x + y) == a(x) + a(y));
    CHECK(a(f->scalar(c) * x) == f->scalar(c) * a(x));
    CHECK(a.inverse(a(x)) == x);
  }
  std::vector<bool> seen(9, false);
  for (Index x = 0; x < 9; ++x) seen[a.apply(x)] = true;
  CHECK(std::count(seen.begin(), seen.end(), true) == 9);

  const LinearPermutation one = random_linear_permutation(gf3(), 1);
  CHECK(one.apply(0) == 0);
  CHECK(one.apply(1) != 0);
  const LinearPermutation id = LinearPermutation::identity(f);
  for (Index x = 0; x < 9; ++x) CHECK(id.apply(x) == x);
}

TEST_CASE("Maiorana-McFarland functions and their duals") {
  std::mt19937_64 gen(31);
  for (const Field& f : {gf3(), gf9(), testing::gf(5, 1), testing::gf(3, 3)}) {
    for (int trial = 0; trial < 2; ++trial) {
      const LinearPermutation pi = random_linear_permutation(f, gen());
      const Space fs = Space::field(f);
      const VPFunc g = testing::random_vpfunc(fs, fs, gen);
      for (MMForm form : {MMForm::XPiY, MMForm::YPiX}) {
        for (const std::optional<VPFunc>& gg : {std::optional<VPFunc>{}, std::optional<VPFunc>{g}}) {
          const VPFunc F = mm_bent(pi, gg, form);
          const VectorialReport r = vectorial_classify(F);
          REQUIRE(r.vectorial_weakly_regular);
          for (const ComponentReport& c : r.components) {
            CHECK(c.regularity.regular());
            CHECK(*c.regularity.epsilon == ((f->degree() * (f->p() - 1) / 2) % 2 ? -1 : 1));
            CHECK(*c.regularity.dual == mm_dual_closed_form(pi, c.lambda, gg, form));
          }
        }
      }
      const PFunc small = testing::random_pfunc(fs, gen);
      const VPFunc F = mm_bent(pi, small, MMForm::YPiX);
      for (Index l = 1; l < f->size(); ++l)
        CHECK(spectral_dual(component(F, l)) == mm_dual_closed_form(pi, l, small, MMForm::YPiX));
    }
  }
}

TEST_CASE("the trace condition implies (P_U) for the duals") {
  std::mt19937_64 gen(32);
  const Field f = gf9();
  const Space s = pair_space(f);
  int holds = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const LinearPermutation pi = random_linear_permutation(f, gen());
    const int t = 1 + static_cast<int>(gen() % 2);
    std::vector<Index> U;
    do {
      U.clear();
      for (int i = 0; i < t; ++i) U.push_back(static_cast<Index>(gen() % s.size()));
    } while (!independent(s, U));
    if (mm_trace_condition(pi, U)) {
      ++holds;
      CHECK(duals_satisfy_pu(mm_bent(pi, std::nullopt, MMForm::YPiX), U).satisfied);
    }
  }
  CHECK(holds > 0);
  const LinearPermutation pi = random_linear_permutation(f, 3);
  CHECK(mm_trace_condition(pi, pair_indices(f, {f->element(1), f->element(3)})));
}

TEST_CASE("h functions") {
  const Field f = gf9();
  const HFunction x13 = HFunction::from_polynomial(f, {{13, 1}});
  const HFunction x5 = HFunction::from_polynomial(f, {{5, 1}});
  CHECK(x13.table == x5.table);  // 13 = 5 mod 8
  const HFunction c = HFunction::from_polynomial(f, {{0, 4}, {9, 1}});
  for (Index x = 0; x < 9; ++x) CHECK(c.table[x] == (f->element(4) + f->element(x)).index());
  CHECK(HFunction::random(f, Embedding::Field, 3).table == HFunction::random(f, Embedding::Field, 3).table);
  CHECK(error_code([&] { HFunction::from_table(f, Embedding::Field, {0, 1}); }) == Errc::InvalidArgument);
  CHECK(error_code([&] { HFunction::from_table(f, Embedding::Field, std::vector<Index>(9, 9)); }) == Errc::InvalidArgument);

  const std::uint32_t args[] = {2, 1};
  CHECK(HFunction::zero(f, Embedding::Tuple).argument(args) == 5);
  CHECK(HFunction::zero(f).argument(args) == (f->scalar(2) + f->primitive()).index());
  HFunction custom = HFunction::zero(f);
  custom.combiner = {f->element(4), f->element(1)};
  CHECK(custom.argument(args) == (f->scalar(2) * f->element(4) + f->one()).index());
  const std::uint32_t one_arg[] = {1};
  CHECK(error_code([&] { custom.argument(one_arg); }) == Errc::InvalidArgument);
}

TEST_CASE("construction with h = 0 returns G") {
  const Field f = gf9();
  const LinearPermutation pi = random_linear_permutation(f, 9);
  const VPFunc G = mm_bent(pi, std::nullopt, MMForm::YPiX);
  const ConstructionRecipe recipe{G, pair_indices(f, {f->element(1), f->element(3)}), HFunction::zero(f)};
  const BuildResult r = construction1(recipe);
  CHECK(r.F == G);
  REQUIRE(r.report.has_value());
  CHECK(r.report->vectorial_weakly_regular);
}

TEST_CASE("xy + x^2 over GF(3)") {
  const Field f = gf3();
  const VPFunc G = mm_bent(LinearPermutation::identity(f), std::nullopt, MMForm::YPiX);
  const HFunction sq = HFunction::from_polynomial(f, {{2, 1}});
  const BuildResult r = theorem3_family(LinearPermutation::identity(f), {f->one()}, sq);
  const Space s = pair_space(f);
  for (Index i = 0; i < 9; ++i) {
    const Index x = i % 3, y = i / 3;
    CHECK(r.F(i) == (x * y + x * x) % 3);
  }
  CHECK(r.report->vectorial_weakly_regular);
  CHECK(construction1({G, {1}, sq}).F == r.F);
}

TEST_CASE("preconditions are checked in order") {
  const Field f3 = gf3();
  const Field f9 = gf9();
  const VPFunc G3 = mm_bent(LinearPermutation::identity(f3), std::nullopt, MMForm::YPiX);
  // t = 2 does not divide m = 1; U is also dependent
  CHECK(precondition_of([&] { construction1({G3, {1, 2}, HFunction::zero(f9)}); }) == Precondition::Divisibility);
  const VPFunc G9 = mm_bent(LinearPermutation::identity(f9), std::nullopt, MMForm::YPiX);
  CHECK(precondition_of([&] { construction1({G9, {1, 2}, HFunction::zero(f9)}); }) == Precondition::Independence);
  const Space d = pair_space(f3);
  CHECK(precondition_of([&] { construction1({VPFunc(d, Space::field(f3)), {1}, HFunction::zero(f3)}); }) ==
        Precondition::NotWeaklyRegular);
  CHECK(precondition_of([&] { construction1({G3, {4}, HFunction::zero(f3)}); }) == Precondition::DualsLackPU);
  CHECK(error_code([&] { construction1({G3, {1, 3}, HFunction::zero(f3)}); }) == Errc::InvalidArgument);
  CHECK(error_code([&] { construction1({G3, {1}, HFunction::zero(testing::gf(5, 1))}); }) == Errc::PrimeMismatch);
  try {
    construction1({G9, {1, 2}, HFunction::zero(f9)});
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("(Independence)") != std::string::npos);
  }
}

TEST_CASE("random recipes yield weakly regular bent functions") {
  std::mt19937_64 gen(33);
  const Field f = gf9();
  for (int trial = 0; trial < 20; ++trial) {
    const LinearPermutation pi = random_linear_permutation(f, gen());
    const auto alphas = testing::random_independent(f, 2, gen);
    const HFunction h = HFunction::random(f, trial % 2 ? Embedding::Tuple : Embedding::Field, gen());
    const BuildResult r = theorem3_family(pi, alphas, h);
    REQUIRE(r.report.has_value());
    CHECK(r.report->vectorial_weakly_regular);
    CHECK(r.report->components.size() == 8);
  }
  // t = 1 into GF(9)
  const Field f3 = gf3();
  for (int trial = 0; trial < 5; ++trial) {
    const LinearPermutation pi = random_linear_permutation(f, gen());
    const HFunction h = HFunction::random(f3, Embedding::Field, gen());
    CHECK(theorem3_family(pi, {f->element(1 + static_cast<Index>(gen() % 8))}, h).report->vectorial_weakly_regular);
  }
}

TEST_CASE("duals of the constructed components") {
  // F*_lambda(b) = G*_lambda(b) + tr(lambda h(arg)) where arg is built from the witnesses -D_{u_i} G*_lambda(b)
  std::mt19937_64 gen(34);
  const Field f = gf9();
  const Space s = pair_space(f);
  for (int trial = 0; trial < 6; ++trial) {
    const LinearPermutation pi = random_linear_permutation(f, gen());
    const auto alphas = testing::random_independent(f, 2, gen);
    const HFunction h = HFunction::random(f, Embedding::Field, gen());
    const BuildResult r = theorem3_family(pi, alphas, h);
    const std::vector<Index> U = pair_indices(f, alphas);
    for (Index l = 1; l < 9; ++l) {
      const PFunc gd = mm_dual_closed_form(pi, l, std::nullopt, MMForm::YPiX);
      const PFunc fd = *r.report->at(l).regularity.dual;
      for (Index b = 0; b < s.size(); ++b) {
        std::uint32_t w[2];
        for (int i = 0; i < 2; ++i) w[i] = (3 - derivative(gd, U[i])(b)) % 3;
        const auto hl = [&](Index arg) { return f->absolute_trace(f->element(l) * f->element(h.table[arg])); };
        CHECK(fd(b) == (gd(b) + hl(h.argument(w))) % 3);
      }
    }
  }
}

TEST_CASE("plateaued functions with extra coordinates") {
  const Field f = gf3();
  const Space z = Space::vector(3, 1);
  const LinearPermutation id = LinearPermutation::identity(f);
  // every single-variable h on Z_3, l = 1 and l = 2: H depends on one trace, always plateaued
  for (Index code = 0; code < 27; ++code) {
    const PFunc h(z, {static_cast<std::uint8_t>(code % 3), static_cast<std::uint8_t>(code / 3 % 3),
                      static_cast<std::uint8_t>(code / 9)});
    const BuildResult r = theorem4_plateaued(id, {f->one()}, {h});
    CHECK(r.report->plateaued);
    CHECK(r.F.codomain().size() == 9);
    CHECK(r.report->components.size() == 8);
  }

  const Field f9 = gf9();
  const Space z2 = Space::vector(3, 2);
  const PFunc x1x2 = PFunc::from(z2, [&](Index x) { return z2.digits(x)[0] * z2.digits(x)[1] % 3; });
  const auto alphas = std::vector<FieldElem>{f9->element(1), f9->element(3)};
  const BuildResult bent_part = theorem4_plateaued(LinearPermutation::identity(f9), alphas, {x1x2});
  CHECK(bent_part.report->plateaued);
  // a cubic indicator mixes amplitudes
  const PFunc spike = PFunc::from(z2, [](Index x) { return x == 0 ? 1u : 0u; });
  CHECK(error_code([&] { theorem4_plateaued(LinearPermutation::identity(f9), alphas, {spike}); }) == Errc::HNotPlateaued);
  CHECK(precondition_of([&] { theorem4_plateaued(LinearPermutation::identity(f9), {f9->one(), f9->scalar(2)}, {x1x2}); }) ==
        Precondition::Independence);
  CHECK(precondition_of([&] {
          theorem4_plateaued(LinearPermutation::identity(testing::gf(3, 3)),
                             {testing::gf(3, 3)->element(1), testing::gf(3, 3)->element(3)}, {x1x2});
        }) == Precondition::Divisibility);
}

TEST_CASE("subfields") {
  const Field big = testing::gf(3, 4);
  const Field sub = subfield_of(big, 2);
  CHECK(sub->degree() == 2);
  CHECK(subfield_of(big, 4) == big);
  CHECK(error_code([&] { subfield_of(big, 3); }) == Errc::DegreeNotDividing);
  const SubfieldEmbedding& e = subfield_embedding(sub, big);
  for (Index x = 0; x < 9; ++x)
    for (Index y = 0; y < 9; ++y) CHECK(e(sub->element(x) * sub->element(y)) == e(sub->element(x)) * e(sub->element(y)));
}

TEST_CASE("monomial closed-form duals") {
  for (const Field& f : {gf9(), testing::gf(3, 3), testing::gf(5, 2)}) {
    const VectorialReport r = vectorial_classify(monomial_square(f));
    REQUIRE(r.vectorial_weakly_regular);
    for (const ComponentReport& c : r.components) CHECK(*c.regularity.dual == square_dual_closed_form(f, c.lambda));
  }
  for (int m : {1, 2}) {
    const Field big = testing::gf(3, 2 * m);
    const Field sub = subfield_of(big, m);
    const VectorialReport r = vectorial_classify(monomial_kasami(big, sub));
    REQUIRE(r.vectorial_weakly_regular);
    for (const ComponentReport& c : r.components) CHECK(*c.regularity.dual == kasami_dual_closed_form(big, sub, c.lambda));
  }
  CHECK(error_code([] { monomial_kasami(testing::gf(3, 3), gf3()); }) == Errc::BadDegreePair);
}

TEST_CASE("no admissible U for the monomials") {
  const NegativeReport sq = verify_no_pu_monomial(MonomialKind::Square, gf9());
  CHECK(sq.candidates.size() == 8);
  CHECK(sq.admissible.empty());
  CHECK(sq.rejected() == 8);
  for (const auto& c : sq.candidates) CHECK(c.failing_lambda.has_value());
  CHECK(verify_no_pu_monomial(MonomialKind::Square, testing::gf(3, 3)).admissible.empty());
  CHECK(verify_no_pu_monomial(MonomialKind::Square, testing::gf(5, 2)).admissible.empty());

  const Field big = testing::gf(3, 4);
  const Field sub = subfield_of(big, 2);
  const NegativeReport k = verify_no_pu_monomial(MonomialKind::Kasami, big, &sub);
  CHECK(k.candidates.size() == 80);
  CHECK(k.admissible.empty());
  const Field f9 = gf9();
  const Field f3 = gf3();
  CHECK(verify_no_pu_monomial(MonomialKind::Kasami, f9, &f3).admissible.empty());
  CHECK(error_code([] { verify_no_pu_monomial(MonomialKind::Square, testing::gf(3, 7)); }) == Errc::TooLarge);
}

TEST_CASE("the GF(3^8) example setup") {
  const Example1Setup s = example1_setup(Example1Reading::Consistent);
  CHECK(s.octic->degree() == 8);
  CHECK(s.octic->order(s.octic->generator()) == 6560);
  CHECK(s.quartic->degree() == 4);
  CHECK(s.quartic->order(s.beta) == 80);
  CHECK(s.alphas.size() == 4);
  CHECK(s.alphas[1] == s.beta);
  CHECK(s.alphas[2] == s.quartic->pow(s.beta, 3));
  CHECK(s.alphas[3] == s.quartic->pow(s.beta, 9));
  const FieldElem img = subfield_embedding(s.quartic, s.octic)(s.beta);
  CHECK(s.octic->order(img) == 80);
  const Example1Setup lit = example1_setup(Example1Reading::Literal);
  CHECK(lit.alphas[2] == s.quartic->pow(s.beta, 2));
  CHECK(lit.h.combiner.size() == 4);
}
