#pragma once

// Builders for vectorial p-ary weakly regular bent and plateaued functions:
// F(x) = G(x) + h(<u_1, x>, ..., <u_t, x>) over a G whose component duals have
// the (P_U) property, Maiorana-McFarland functions and their duals, and the
// monomials x^2 and x^(p^m+1), for which no admissible U exists.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pbent/linalg.hpp"
#include "pbent/pfunc.hpp"
#include "pbent/pu.hpp"
#include "pbent/spectral.hpp"

namespace pbent {

/// An invertible F_p-linear map of GF(p^k), as a k x k matrix on the digit basis.
class LinearPermutation {
 public:
  LinearPermutation() = default;
  /// InvalidArgument if the matrix is singular or has the wrong size.
  LinearPermutation(Field field, ZpMatrix matrix);

  static LinearPermutation identity(Field field);

  const Field& field() const { return field_; }
  const ZpMatrix& matrix() const { return matrix_; }
  const ZpMatrix& inverse_matrix() const { return inverse_; }

  Index apply(Index x) const { return forward_[x]; }
  Index apply_inverse(Index y) const { return backward_[y]; }
  FieldElem operator()(const FieldElem& x) const;
  FieldElem inverse(const FieldElem& y) const;

 private:
  Field field_;
  ZpMatrix matrix_;
  ZpMatrix inverse_;
  std::vector<Index> forward_;
  std::vector<Index> backward_;
};

/// Uniform invertible matrix by rejection sampling; a fixed seed gives a fixed matrix.
LinearPermutation random_linear_permutation(Field field, std::uint64_t seed);

// --- Maiorana-McFarland --------------------------------------------------------

/// XPiY: F(x, y) = x pi(y) + g(y).  YPiX: F(x, y) = y pi(x) + g(x).
enum class MMForm { XPiY, YPiX };

/// GF(p^m) x GF(p^m), the domain of the bivariate builders.
Space pair_space(const Field& field);

/// g maps GF(p^m) into GF(p^m); absent means g = 0.
VPFunc mm_bent(const LinearPermutation& pi, const std::optional<VPFunc>& g = std::nullopt,
               MMForm form = MMForm::XPiY);
/// Lifts a Z_p-valued g into the prime subfield.
VPFunc mm_bent(const LinearPermutation& pi, const PFunc& g, MMForm form = MMForm::XPiY);

/// Dual of the lambda component from the closed form:
///   XPiY: (a, b) -> tr(-b pi^-1(a / lambda) + lambda g(pi^-1(a / lambda)))
///   YPiX: (a, b) -> tr(-a pi^-1(b / lambda) + lambda g(pi^-1(b / lambda)))
PFunc mm_dual_closed_form(const LinearPermutation& pi, Index lambda, const std::optional<VPFunc>& g = std::nullopt,
                          MMForm form = MMForm::XPiY);
PFunc mm_dual_closed_form(const LinearPermutation& pi, Index lambda, const PFunc& g, MMForm form = MMForm::XPiY);

/// tr(beta_i pi^-1(alpha_j / lambda) + beta_j pi^-1(alpha_i / lambda)) = 0 for all
/// i, j and lambda != 0, for u_i = (alpha_i, beta_i) given as pair-space indices.
/// Sufficient for the duals of y pi(x) to have (P_U).
bool mm_trace_condition(const LinearPermutation& pi, std::span<const Index> U);

// --- shifted construction -------------------------------------------------------

enum class Embedding { Field, Tuple };

/// h: GF(p^t) -> GF(p^t) as a table. With Embedding::Field the argument is
/// sum_i c_i <u_i, x> for combiner coefficients c_i (default alpha^(i-1), alpha
/// the canonical primitive element); with Embedding::Tuple the argument is the
/// tuple (<u_1, x>, ..., <u_t, x>), read as the index sum_i X_i p^(i-1).
struct HFunction {
  Field field;
  Embedding embedding = Embedding::Field;
  std::vector<Index> table;
  std::vector<FieldElem> combiner;

  int t() const { return field->degree(); }

  static HFunction from_table(Field field, Embedding embedding, std::vector<Index> table);
  /// sum_k c_k X^(e_k), exponents reduced modulo X^(p^t) - X; coefficients are element indices.
  static HFunction from_polynomial(Field field, const std::vector<std::pair<std::uint64_t, Index>>& terms,
                                   Embedding embedding = Embedding::Field);
  static HFunction zero(Field field, Embedding embedding = Embedding::Field);
  static HFunction random(Field field, Embedding embedding, std::uint64_t seed);

  /// Index of h's argument for the given inner products <u_i, x>.
  Index argument(std::span<const std::uint32_t> traces) const;
};

struct ConstructionRecipe {
  VPFunc G;
  std::vector<Index> U;
  HFunction h;
  bool verify = true;
};

struct BuildResult {
  VPFunc F;
  /// Classification of F; absent when verification was switched off.
  std::optional<VectorialReport> report;
};

/// F = G + embed(h(...)). Throws PreconditionError for Divisibility,
/// Independence, NotWeaklyRegular or DualsLackPU (checked in that order) and
/// PostVerificationFailed if the result is not weakly regular bent.
BuildResult construction1(const ConstructionRecipe& recipe);

/// F(x, y) = y pi(x) + h(tr(alpha_1 x), ..., tr(alpha_t x)), i.e. construction1
/// over G = y pi(x) with u_i = (alpha_i, 0).
BuildResult theorem3_family(const LinearPermutation& pi, const std::vector<FieldElem>& alphas, const HFunction& h,
                            bool verify = true);

/// F(x, y) = (y pi(x), h_1(T(x)), ..., h_l(T(x))) into GF(p^m) x Z_p^l with
/// T(x) = (tr(alpha_1 x), ..., tr(alpha_t x)); each h_j is a table on Z_p^t.
/// Throws HNotPlateaued unless x -> (h_j(T(x)))_j is plateaued on GF(p^m).
BuildResult theorem4_plateaued(const LinearPermutation& pi, const std::vector<FieldElem>& alphas,
                               const std::vector<PFunc>& h_list, bool verify = true);

/// x -> (h_1(T(x)), ..., h_l(T(x))) on GF(p^m), the function theorem4_plateaued screens.
VPFunc theorem4_h_part(const Field& field, const std::vector<FieldElem>& alphas, const std::vector<PFunc>& h_list);

// --- monomials -------------------------------------------------------------------

/// Degree-m subfield of `big`, with the minimal polynomial of
/// primitive^((p^n - 1) / (p^m - 1)) as modulus. DegreeNotDividing unless m | n.
Field subfield_of(const Field& big, int m);

/// G(x) = x^2 on GF(p^n), an (n, n)-function.
VPFunc monomial_square(const Field& field);
/// G(x) = x^(p^m + 1), n = 2m, valued in the subfield `sub` of degree m.
/// BadDegreePair unless deg(big) = 2 deg(sub).
VPFunc monomial_kasami(const Field& big, const Field& sub);

/// -tr(x^2 / (4 lambda))
PFunc square_dual_closed_form(const Field& field, Index lambda);
/// Dual of x -> tr_m(lambda x^(p^m+1)). This component equals
/// tr_n(mu x^(p^m+1)) with mu = lambda / 2, whose dual is
/// -tr_m(x^(p^m+1) / (mu^(p^m) + mu)).
PFunc kasami_dual_closed_form(const Field& big, const Field& sub, Index lambda);

enum class MonomialKind { Square, Kasami };

struct NegativeReport {
  struct Rejection {
    Index u = 0;
    std::optional<Index> failing_lambda;  // first lambda whose dual has D_u D_u != 0
  };
  std::uint32_t p = 0;
  int n = 0;
  int m = 0;
  std::vector<Rejection> candidates;  // every u != 0
  std::vector<Index> admissible;       // u with no failing lambda

  std::size_t rejected() const { return candidates.size() - admissible.size(); }
};

inline constexpr std::uint64_t kNegativeSearchLimit = 729;  // 3^6

/// For G = x^2 on `field` (or the Kasami function into `sub`), finds for each
/// u != 0 a component whose dual has a nonvanishing D_u D_u. TooLarge above 3^6 points.
NegativeReport verify_no_pu_monomial(MonomialKind kind, const Field& field, const Field* sub = nullptr);

// --- the worked example over GF(3^8) ---------------------------------------

enum class Example1Reading {
  /// U = {1, b, b^3, b^9} with combiner alpha^(i-1).
  Consistent,
  /// The displayed formula: arguments {1, b, b^2, b^3} with coefficients {1, b, b^2, b^3}.
  Literal,
};

struct Example1Setup {
  Field octic;                      // GF(3^8) mod x^8 + 2x^5 + x^4 + 2x^2 + 2x + 2
  Field quartic;                    // GF(3^4) mod the minimal polynomial of b = x^82
  FieldElem beta;                   // b in `quartic`
  std::vector<FieldElem> alphas;    // u_i = (alpha_i, 0)
  HFunction h;                      // X^13
  LinearPermutation pi;             // identity: G(x, y) = xy
};

Example1Setup example1_setup(Example1Reading reading);
BuildResult reproduce_example1(Example1Reading reading, bool verify = true);

}  // namespace pbent
