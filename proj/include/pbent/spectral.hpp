#pragma once

// Generalized Walsh-Hadamard transform W_f(a) = sum_x xi^(f(x) - <a, x>) with
// exact values in Z[xi_p], and the classifications built on it.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pbent/cyclotomic.hpp"
#include "pbent/pfunc.hpp"

namespace pbent {

/// A transform table. Construction verifies Parseval, sum_a W(a) conj(W(a)) = p^(2n)
/// in Z[xi], and throws InternalInvariant if it fails.
class Spectrum {
 public:
  Spectrum(Space domain, std::vector<CycInt> values);
  /// No Parseval check; for tables that did not come out of a transform.
  static Spectrum unchecked(Space domain, std::vector<CycInt> values);

  const Space& domain() const { return domain_; }
  std::uint32_t p() const { return domain_.p(); }
  int n() const { return domain_.dimension(); }
  std::span<const CycInt> values() const { return values_; }
  const CycInt& operator[](Index a) const { return values_[a]; }
  /// W(a) conj(W(a)) for every a, exactly; rational integers only when the
  /// function is plateaued or p = 3.
  std::span<const CycInt> squared_magnitudes() const { return norms_; }
  /// |W(a)|^2 when it is a rational integer.
  std::optional<CycInt::Coord> squared_magnitude(Index a) const { return norms_[a].as_integer(); }

 private:
  Spectrum(Space domain, std::vector<CycInt> values, bool check);

  Space domain_;
  std::vector<CycInt> values_;
  std::vector<CycInt> norms_;
};

/// Number of spectra whose Parseval identity has been verified in this process.
std::uint64_t parseval_checks();

/// Direct double sum over the field inner-product table. Oracle for gwht_fast.
Spectrum gwht_naive(const PFunc& f);
/// n axis passes of p-point transforms, O(n p^(n+2)) integer additions.
Spectrum gwht_fast(const PFunc& f);
/// xi^(f(y)) = p^(-n) sum_a W(a) xi^(<a, y>). NotAFunctionSpectrum if the
/// division is inexact or a value is not a p-th root of unity.
PFunc inverse_gwht(const Spectrum& spectrum);

struct RegularityReport {
  bool bent = false;
  bool weakly_regular = false;
  std::optional<int> epsilon;
  std::optional<ZLabel> z;
  std::optional<PFunc> dual;

  /// Regular bent: z = +1.
  bool regular() const { return z == ZLabel::PlusOne; }
};

bool is_bent(const PFunc& f);
bool is_bent(const Spectrum& spectrum);
RegularityReport classify_weak_regular(const PFunc& f);
RegularityReport classify_weak_regular(const Spectrum& spectrum, bool keep_dual = true);

/// The s >= 0 with every |W|^2 in {0, p^(n+s)}, if one exists.
std::optional<int> plateau_amplitude(const PFunc& f);
std::optional<int> plateau_amplitude(const Spectrum& spectrum);

struct ComponentReport {
  Index lambda = 0;
  RegularityReport regularity;
  std::optional<int> amplitude;
};

struct VectorialReport {
  std::uint32_t p = 0;
  int n = 0;
  int m = 0;
  std::vector<ComponentReport> components;  // ascending lambda
  bool vectorial_bent = false;
  bool vectorial_weakly_regular = false;
  bool plateaued = false;
  std::optional<int> shared_amplitude;
  /// False when only some components were requested; the aggregate flags then cover those only.
  bool complete = true;

  const ComponentReport& at(Index lambda) const;
};

struct ClassifyOptions {
  /// Restrict to these nonzero lambdas; all components when empty.
  std::vector<Index> lambdas;
  bool keep_duals = true;
};

/// Classifies every nonzero component tr(lambda F). Components are processed
/// in parallel; the report is ordered by lambda regardless.
VectorialReport vectorial_classify(const VPFunc& F, const ClassifyOptions& options = {});

}  // namespace pbent
