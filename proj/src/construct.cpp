#include "pbent/construct.hpp"

#include <random>

#include "pbent/error.hpp"

namespace pbent {

namespace {

const Field& single_field(const Space& s, const char* what) {
  if (s.factors().size() != 1) fail(Errc::InvalidArgument, std::string(what) + " must be a single field");
  return s.factors().front();
}

VPFunc lift(const Field& field, const PFunc& g) {
  const Space fs = Space::field(field);
  if (!(g.domain() == fs)) fail(Errc::SpecMismatch, "g must be defined on GF(p^m)");
  return VPFunc::from(fs, fs, [&](Index y) { return field->scalar(g(y)).index(); });
}

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

// --- LinearPermutation -----------------------------------------------------------

LinearPermutation::LinearPermutation(Field field, ZpMatrix matrix) : field_(std::move(field)), matrix_(std::move(matrix)) {
  const auto k = static_cast<std::size_t>(field_->degree());
  if (matrix_.rows() != k || matrix_.cols() != k || matrix_.p() != field_->p()) {
    fail(Errc::InvalidArgument, "permutation matrix must be k x k over F_p");
  }
  auto inv = matrix_.inverse();
  if (!inv) fail(Errc::InvalidArgument, "permutation matrix is singular");
  inverse_ = std::move(*inv);
  forward_.resize(field_->size());
  backward_.resize(field_->size());
  std::vector<std::uint32_t> out(k);
  for (std::uint64_t x = 0; x < field_->size(); ++x) {
    const FieldElem e = field_->element(static_cast<Index>(x));
    matrix_.apply(e.digits(), out);
    const Index y = field_->from_digits(out).index();
    forward_[x] = y;
    backward_[y] = static_cast<Index>(x);
  }
}

LinearPermutation LinearPermutation::identity(Field field) {
  const auto k = static_cast<std::size_t>(field->degree());
  const std::uint32_t p = field->p();
  return LinearPermutation(std::move(field), ZpMatrix::identity(p, k));
}

FieldElem LinearPermutation::operator()(const FieldElem& x) const {
  field_->check_member(x);
  return field_->element(apply(x.index()));
}

FieldElem LinearPermutation::inverse(const FieldElem& y) const {
  field_->check_member(y);
  return field_->element(apply_inverse(y.index()));
}

LinearPermutation random_linear_permutation(Field field, std::uint64_t seed) {
  const auto k = static_cast<std::size_t>(field->degree());
  const std::uint32_t p = field->p();
  std::mt19937_64 gen(seed);
  for (;;) {
    ZpMatrix m(p, k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) m.at(r, c) = static_cast<std::uint32_t>(gen() % p);
    if (m.rank() == k) return LinearPermutation(std::move(field), std::move(m));
  }
}

// --- Maiorana-McFarland ------------------------------------------------------------

Space pair_space(const Field& field) { return Space::product({field, field}); }

VPFunc mm_bent(const LinearPermutation& pi, const std::optional<VPFunc>& g, MMForm form) {
  const Field& f = pi.field();
  const Space domain = pair_space(f);
  const Space cod = Space::field(f);
  if (g && (!(g->domain() == cod) || !(g->codomain() == cod))) fail(Errc::SpecMismatch, "g must map GF(p^m) to GF(p^m)");
  const auto q = static_cast<Index>(f->size());
  return VPFunc::from(domain, cod, [&](Index idx) {
    const Index x = idx % q;
    const Index y = idx / q;
    // XPiY: x pi(y) + g(y); YPiX: y pi(x) + g(x)
    const Index lin = form == MMForm::XPiY ? x : y;
    const Index arg = form == MMForm::XPiY ? y : x;
    FieldElem value = f->element(lin) * f->element(pi.apply(arg));
    if (g) value = value + f->element((*g)(arg));
    return value.index();
  });
}

VPFunc mm_bent(const LinearPermutation& pi, const PFunc& g, MMForm form) {
  return mm_bent(pi, std::optional<VPFunc>(lift(pi.field(), g)), form);
}

PFunc mm_dual_closed_form(const LinearPermutation& pi, Index lambda, const std::optional<VPFunc>& g, MMForm form) {
  const Field& f = pi.field();
  if (lambda == 0) fail(Errc::ZeroLambda, "duals are defined for lambda != 0");
  const FieldElem lam = f->element(lambda);
  const FieldElem lam_inv = f->inv(lam);
  const auto q = static_cast<Index>(f->size());
  return PFunc::from(pair_space(f), [&](Index idx) {
    const FieldElem a = f->element(idx % q);
    const FieldElem b = f->element(idx / q);
    // XPiY pairs the slot of x with pi^-1(./lambda); YPiX swaps the roles.
    const FieldElem& scaled = form == MMForm::XPiY ? a : b;
    const FieldElem& other = form == MMForm::XPiY ? b : a;
    const FieldElem z = pi.inverse(scaled * lam_inv);
    FieldElem value = -(other * z);
    if (g) value = value + lam * f->element((*g)(z.index()));
    return f->absolute_trace(value);
  });
}

PFunc mm_dual_closed_form(const LinearPermutation& pi, Index lambda, const PFunc& g, MMForm form) {
  return mm_dual_closed_form(pi, lambda, std::optional<VPFunc>(lift(pi.field(), g)), form);
}

bool mm_trace_condition(const LinearPermutation& pi, std::span<const Index> U) {
  const Field& f = pi.field();
  const auto q = static_cast<Index>(f->size());
  for (Index l = 1; l < q; ++l) {
    const FieldElem lam_inv = f->inv(f->element(l));
    for (std::size_t i = 0; i < U.size(); ++i) {
      for (std::size_t j = i; j < U.size(); ++j) {
        const FieldElem ai = f->element(U[i] % q), bi = f->element(U[i] / q);
        const FieldElem aj = f->element(U[j] % q), bj = f->element(U[j] / q);
        const FieldElem s = bi * pi.inverse(aj * lam_inv) + bj * pi.inverse(ai * lam_inv);
        if (f->absolute_trace(s) != 0) return false;
      }
    }
  }
  return true;
}

// --- HFunction ------------------------------------------------------------------------

HFunction HFunction::from_table(Field field, Embedding embedding, std::vector<Index> table) {
  if (table.size() != field->size()) fail(Errc::InvalidArgument, "h table must have p^t entries");
  for (Index v : table)
    if (v >= field->size()) fail(Errc::InvalidArgument, "h value outside GF(p^t)");
  HFunction h;
  h.field = std::move(field);
  h.embedding = embedding;
  h.table = std::move(table);
  return h;
}

HFunction HFunction::from_polynomial(Field field, const std::vector<std::pair<std::uint64_t, Index>>& terms,
                                     Embedding embedding) {
  const std::uint64_t q = field->size();
  std::vector<std::pair<std::uint64_t, FieldElem>> reduced;
  for (const auto& [e, c] : terms) {
    // X^q = X on GF(q): exponents >= 1 reduce into [1, q-1]
    const std::uint64_t r = e == 0 ? 0 : (e - 1) % (q - 1) + 1;
    reduced.emplace_back(r, field->element(c));
  }
  std::vector<Index> table(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    const FieldElem X = field->element(static_cast<Index>(x));
    FieldElem acc = field->zero();
    for (const auto& [e, c] : reduced) acc = acc + c * field->pow(X, e);
    table[x] = acc.index();
  }
  return from_table(std::move(field), embedding, std::move(table));
}

HFunction HFunction::zero(Field field, Embedding embedding) {
  const std::uint64_t q = field->size();
  return from_table(std::move(field), embedding, std::vector<Index>(q, 0));
}

HFunction HFunction::random(Field field, Embedding embedding, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Index> table(field->size());
  for (auto& v : table) v = static_cast<Index>(gen() % field->size());
  return from_table(std::move(field), embedding, std::move(table));
}

Index HFunction::argument(std::span<const std::uint32_t> traces) const {
  const std::uint32_t p = field->p();
  if (traces.size() != static_cast<std::size_t>(t())) fail(Errc::InvalidArgument, "h expects t arguments");
  if (embedding == Embedding::Tuple) {
    std::uint64_t idx = 0;
    for (std::size_t i = traces.size(); i-- > 0;) idx = idx * p + traces[i];
    return static_cast<Index>(idx);
  }
  FieldElem acc = field->zero();
  if (combiner.empty()) {
    const FieldElem alpha = field->primitive();
    FieldElem coeff = field->one();
    for (std::uint32_t x : traces) {
      acc = acc + field->scalar(x) * coeff;
      coeff = coeff * alpha;
    }
  } else {
    if (combiner.size() != traces.size()) fail(Errc::InvalidArgument, "combiner needs t coefficients");
    for (std::size_t i = 0; i < traces.size(); ++i) acc = acc + field->scalar(traces[i]) * combiner[i];
  }
  return acc.index();
}

// --- shifted construction -----------------------------------------------------------

BuildResult construction1(const ConstructionRecipe& recipe) {
  const VPFunc& G = recipe.G;
  const HFunction& h = recipe.h;
  const Field& fm = single_field(G.codomain(), "the codomain of G");
  const int n = G.domain().dimension();
  const int m = fm->degree();
  const int t = h.t();
  if (h.field->p() != fm->p()) fail(Errc::PrimeMismatch, "h and G use different characteristics");
  if (recipe.U.size() != static_cast<std::size_t>(t)) {
    fail(Errc::InvalidArgument, "U has " + std::to_string(recipe.U.size()) + " elements but h takes t = " + std::to_string(t));
  }
  for (Index u : recipe.U)
    if (u >= G.domain().size()) fail(Errc::InvalidArgument, "element of U outside the domain");
  for (const FieldElem& c : h.combiner) h.field->check_member(c);

  if (m % t != 0 || n % m != 0) {
    throw PreconditionError(Precondition::Divisibility, "need t | m | n, got t=" + std::to_string(t) +
                                                            " m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  if (!independent(G.domain(), recipe.U)) {
    throw PreconditionError(Precondition::Independence, "U is not linearly independent over F_p");
  }
  const VectorialReport g_report = vectorial_classify(G);
  for (const auto& c : g_report.components) {
    if (!c.regularity.weakly_regular) {
      throw PreconditionError(Precondition::NotWeaklyRegular,
                              "component lambda=" + std::to_string(c.lambda) + " of G is not weakly regular bent");
    }
  }
  const DualsPUResult pu = duals_satisfy_pu(g_report, recipe.U);
  if (!pu.satisfied) {
    for (const auto& e : pu.per_lambda) {
      if (!e.witness) {
        throw PreconditionError(Precondition::DualsLackPU,
                                "dual of component lambda=" + std::to_string(e.lambda) + " lacks (P_U)");
      }
    }
  }

  const SubfieldEmbedding& embed = subfield_embedding(h.field, fm);
  const Space& domain = G.domain();
  std::vector<Index> embedded(h.table.size());
  for (std::size_t i = 0; i < h.table.size(); ++i) embedded[i] = embed(h.field->element(h.table[i])).index();

  std::vector<std::uint32_t> traces(static_cast<std::size_t>(t));
  VPFunc F = VPFunc::from(domain, G.codomain(), [&](Index x) {
    for (std::size_t i = 0; i < traces.size(); ++i) traces[i] = domain.inner(recipe.U[i], x);
    const FieldElem H = fm->element(embedded[h.argument(traces)]);
    return (fm->element(G(x)) + H).index();
  });

  BuildResult result{std::move(F), std::nullopt};
  if (recipe.verify) {
    result.report = vectorial_classify(result.F);
    if (!result.report->vectorial_weakly_regular) {
      fail(Errc::PostVerificationFailed, "constructed function is not vectorial weakly regular bent");
    }
  }
  return result;
}

BuildResult theorem3_family(const LinearPermutation& pi, const std::vector<FieldElem>& alphas, const HFunction& h,
                            bool verify) {
  const Field& f = pi.field();
  const Space domain = pair_space(f);
  ConstructionRecipe recipe{mm_bent(pi, std::nullopt, MMForm::YPiX), {}, h, verify};
  for (const FieldElem& a : alphas) {
    const FieldElem parts[] = {a, f->zero()};
    recipe.U.push_back(domain.join(parts));
  }
  return construction1(recipe);
}

VPFunc theorem4_h_part(const Field& field, const std::vector<FieldElem>& alphas, const std::vector<PFunc>& h_list) {
  if (h_list.empty()) fail(Errc::InvalidArgument, "need at least one h_j");
  const auto t = static_cast<int>(alphas.size());
  const Space tuple = Space::vector(field->p(), t);
  for (const PFunc& hj : h_list)
    if (!(hj.domain() == tuple)) fail(Errc::SpecMismatch, "each h_j must be a table on Z_p^t");
  const Space out = Space::vector(field->p(), static_cast<int>(h_list.size()));
  std::vector<std::uint32_t> traces(alphas.size());
  std::vector<std::uint32_t> values(h_list.size());
  return VPFunc::from(Space::field(field), out, [&](Index x) {
    const FieldElem ex = field->element(x);
    for (std::size_t i = 0; i < alphas.size(); ++i) traces[i] = field->absolute_trace(alphas[i] * ex);
    const Index arg = tuple.index(traces);
    for (std::size_t j = 0; j < h_list.size(); ++j) values[j] = h_list[j](arg);
    return out.index(values);
  });
}

BuildResult theorem4_plateaued(const LinearPermutation& pi, const std::vector<FieldElem>& alphas,
                               const std::vector<PFunc>& h_list, bool verify) {
  const Field& f = pi.field();
  const int m = f->degree();
  const auto t = static_cast<int>(alphas.size());
  if (t < 1 || m % t != 0) {
    throw PreconditionError(Precondition::Divisibility, "need t | m, got t=" + std::to_string(t) + " m=" + std::to_string(m));
  }
  for (const FieldElem& a : alphas) f->check_member(a);
  if (!linearly_independent(alphas)) {
    throw PreconditionError(Precondition::Independence, "alphas are not linearly independent over F_p");
  }
  const VPFunc H = theorem4_h_part(f, alphas, h_list);
  if (!vectorial_classify(H, {.lambdas = {}, .keep_duals = false}).plateaued) {
    fail(Errc::HNotPlateaued, "x -> (h_1(T(x)), ..., h_l(T(x))) is not plateaued");
  }

  const auto l = static_cast<int>(h_list.size());
  std::vector<Field> factors{f};
  for (int j = 0; j < l; ++j) factors.push_back(prime_field(f->p()));
  const Space cod = Space::product(factors);
  const VPFunc G = mm_bent(pi, std::nullopt, MMForm::YPiX);
  const auto q = static_cast<Index>(f->size());
  VPFunc F = VPFunc::from(pair_space(f), cod, [&](Index idx) { return G(idx) + q * H(idx % q); });

  BuildResult result{std::move(F), std::nullopt};
  if (verify) {
    result.report = vectorial_classify(result.F, {.lambdas = {}, .keep_duals = false});
    if (!result.report->plateaued) fail(Errc::PostVerificationFailed, "constructed function is not plateaued");
  }
  return result;
}

// --- monomials -------------------------------------------------------------------------

Field subfield_of(const Field& big, int m) {
  const int n = big->degree();
  if (m < 1 || n % m != 0) fail(Errc::DegreeNotDividing, std::to_string(m) + " does not divide " + std::to_string(n));
  if (m == n) return big;
  const std::uint64_t exponent = (big->size() - 1) / (ipow(big->p(), m) - 1);
  return FieldSpec::make(big->p(), minimal_polynomial(big->pow(big->primitive(), exponent)));
}

VPFunc monomial_square(const Field& field) {
  const Space s = Space::field(field);
  return VPFunc::from(s, s, [&](Index x) {
    const FieldElem e = field->element(x);
    return (e * e).index();
  });
}

VPFunc monomial_kasami(const Field& big, const Field& sub) {
  if (big->p() != sub->p() || big->degree() != 2 * sub->degree()) {
    fail(Errc::BadDegreePair, "Kasami exponent needs n = 2m, got n=" + std::to_string(big->degree()) +
                                  " m=" + std::to_string(sub->degree()));
  }
  const SubfieldEmbedding& emb = subfield_embedding(sub, big);
  const std::uint64_t e = sub->size() + 1;
  return VPFunc::from(Space::field(big), Space::field(sub), [&](Index x) {
    const auto y = emb.preimage(big->pow(big->element(x), e));
    if (!y) fail(Errc::InternalInvariant, "x^(p^m+1) left the subfield");
    return y->index();
  });
}

PFunc square_dual_closed_form(const Field& field, Index lambda) {
  if (lambda == 0) fail(Errc::ZeroLambda, "duals are defined for lambda != 0");
  const FieldElem denom_inv = field->inv(field->scalar(4) * field->element(lambda));
  return PFunc::from(Space::field(field), [&](Index x) {
    const FieldElem e = field->element(x);
    return field->absolute_trace(-(e * e * denom_inv));
  });
}

PFunc kasami_dual_closed_form(const Field& big, const Field& sub, Index lambda) {
  if (big->p() != sub->p() || big->degree() != 2 * sub->degree()) fail(Errc::BadDegreePair, "Kasami needs n = 2m");
  if (lambda == 0) fail(Errc::ZeroLambda, "duals are defined for lambda != 0");
  const SubfieldEmbedding& emb = subfield_embedding(sub, big);
  const std::uint64_t pm = sub->size();
  const FieldElem mu = emb(sub->element(lambda)) * big->inv(big->scalar(2));
  const FieldElem denom_inv = big->inv(big->pow(mu, pm) + mu);
  return PFunc::from(Space::field(big), [&](Index x) {
    const FieldElem v = big->pow(big->element(x), pm + 1) * denom_inv;
    const auto y = emb.preimage(v);
    if (!y) fail(Errc::InternalInvariant, "Kasami dual argument left the subfield");
    return sub->absolute_trace(-*y);
  });
}

NegativeReport verify_no_pu_monomial(MonomialKind kind, const Field& field, const Field* sub) {
  if (field->size() > kNegativeSearchLimit) {
    fail(Errc::TooLarge, "negative search is limited to p^n <= " + std::to_string(kNegativeSearchLimit) + " points (got " +
                             std::to_string(field->size()) + ")");
  }
  VPFunc G;
  if (kind == MonomialKind::Square) {
    G = monomial_square(field);
  } else {
    if (field->degree() % 2 != 0) fail(Errc::BadDegreePair, "Kasami needs an even extension degree");
    const Field small = sub ? Field(*sub) : subfield_of(field, field->degree() / 2);
    G = monomial_kasami(field, small);
  }
  const VectorialReport report = vectorial_classify(G);
  std::vector<const PFunc*> duals;
  for (const auto& c : report.components) {
    if (!c.regularity.weakly_regular) fail(Errc::NotWeaklyRegular, "component " + std::to_string(c.lambda) + " is not weakly regular");
    duals.push_back(&*c.regularity.dual);
  }

  NegativeReport out;
  out.p = field->p();
  out.n = G.domain().dimension();
  out.m = G.codomain().dimension();
  for (std::uint64_t u = 1; u < field->size(); ++u) {
    NegativeReport::Rejection r{static_cast<Index>(u), std::nullopt};
    for (std::size_t i = 0; i < duals.size(); ++i) {
      if (!second_derivative_vanishes(*duals[i], r.u, r.u)) {
        r.failing_lambda = report.components[i].lambda;
        break;
      }
    }
    if (!r.failing_lambda) out.admissible.push_back(r.u);
    out.candidates.push_back(r);
  }
  return out;
}

// --- worked example ----------------------------------------------------------------------

Example1Setup example1_setup(Example1Reading reading) {
  Field octic = FieldSpec::make(3, {2, 2, 2, 0, 1, 2, 0, 0, 1});
  const FieldElem beta_big = octic->pow(octic->generator(), 82);
  Field quartic = FieldSpec::make(3, minimal_polynomial(beta_big));
  const FieldElem beta = quartic->generator();

  std::vector<FieldElem> alphas;
  HFunction h = HFunction::from_polynomial(quartic, {{13, 1}});
  if (reading == Example1Reading::Consistent) {
    alphas = {quartic->one(), beta, quartic->pow(beta, 3), quartic->pow(beta, 9)};
  } else {
    alphas = {quartic->one(), beta, quartic->pow(beta, 2), quartic->pow(beta, 3)};
    h.combiner = alphas;
  }
  LinearPermutation pi = LinearPermutation::identity(quartic);
  return Example1Setup{std::move(octic), std::move(quartic), beta, std::move(alphas), std::move(h), std::move(pi)};
}

BuildResult reproduce_example1(Example1Reading reading, bool verify) {
  const Example1Setup setup = example1_setup(reading);
  return theorem3_family(setup.pi, setup.alphas, setup.h, verify);
}

}  // namespace pbent
