#include "pbent/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>

#include "pbent/error.hpp"
#include "pbent/parallel.hpp"

namespace pbent {

namespace {

std::atomic<std::uint64_t> g_parseval_checks{0};

CycInt::Coord int_pow(std::uint64_t base, int e) {
  CycInt::Coord r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<CycInt::Coord>(base);
  return r;
}

// In-place transform over Z[xi] in the redundant basis {1, xi, ..., xi^(p-1)}:
// buf[x*p + r] is the coefficient of xi^r at point x. sign = -1 computes
// sum_x v(x) xi^(-c.x); sign = +1 computes sum_x v(x) xi^(c.x).
void butterfly(std::vector<std::int64_t>& buf, std::uint32_t p, int n, int sign) {
  std::int64_t max_abs = 0;
  for (std::int64_t v : buf) max_abs = std::max(max_abs, v < 0 ? -v : v);
  long double bound = static_cast<long double>(max_abs);
  for (int i = 0; i < n; ++i) bound *= p;
  if (bound >= static_cast<long double>(std::int64_t{1} << 62)) {
    fail(Errc::CoordinateOverflow, "transform coefficients would exceed 62 bits");
  }

  const std::uint64_t points = buf.size() / p;
  std::vector<std::int64_t> line(static_cast<std::size_t>(p) * p);
  std::vector<std::int64_t> out(static_cast<std::size_t>(p) * p);
  std::uint64_t stride = 1;
  for (int axis = 0; axis < n; ++axis) {
    const std::uint64_t block = stride * p;
    for (std::uint64_t base = 0; base < points; base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t j = 0; j < p; ++j) {
          const std::uint64_t pt = base + off + j * stride;
          std::copy_n(buf.begin() + static_cast<std::ptrdiff_t>(pt * p), p, line.begin() + static_cast<std::ptrdiff_t>(j * p));
        }
        std::fill(out.begin(), out.end(), 0);
        for (std::uint32_t k = 0; k < p; ++k) {
          std::int64_t* dst = out.data() + static_cast<std::size_t>(k) * p;
          for (std::uint32_t j = 0; j < p; ++j) {
            // multiply line j by xi^e, e = sign * j * k: coefficient r moves to r + e
            const std::uint64_t jk = std::uint64_t{j} * k % p;
            const std::uint32_t e = static_cast<std::uint32_t>(sign > 0 ? jk : (p - jk) % p);
            const std::int64_t* src = line.data() + static_cast<std::size_t>(j) * p;
            for (std::uint32_t r = 0; r < p; ++r) dst[(r + e) % p] += src[r];
          }
        }
        for (std::uint32_t k = 0; k < p; ++k) {
          const std::uint64_t pt = base + off + k * stride;
          std::copy_n(out.begin() + static_cast<std::ptrdiff_t>(k * p), p, buf.begin() + static_cast<std::ptrdiff_t>(pt * p));
        }
      }
    }
    stride = block;
  }
}

}  // namespace

Spectrum::Spectrum(Space domain, std::vector<CycInt> values) : Spectrum(std::move(domain), std::move(values), true) {}

Spectrum Spectrum::unchecked(Space domain, std::vector<CycInt> values) {
  return Spectrum(std::move(domain), std::move(values), false);
}

Spectrum::Spectrum(Space domain, std::vector<CycInt> values, bool check)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size()) fail(Errc::InvalidArgument, "spectrum length is not p^n");
  const std::uint32_t p = domain_.p();
  norms_.reserve(values_.size());
  CycInt total(p);
  for (const CycInt& w : values_) {
    if (w.p() != p) fail(Errc::PrimeMismatch, "spectrum value over the wrong cyclotomic ring");
    norms_.push_back(norm(w));
    total += norms_.back();
  }
  if (!check) return;
  const CycInt::Coord expected = int_pow(p, 2 * domain_.dimension());
  if (total != CycInt::scalar(p, expected)) {
    fail(Errc::InternalInvariant, "Parseval violated: sum |W|^2 = " + total.to_string() + ", expected " + to_string(expected));
  }
  ++g_parseval_checks;
}

std::uint64_t parseval_checks() { return g_parseval_checks.load(); }

Spectrum gwht_naive(const PFunc& f) {
  const Space& d = f.domain();
  const std::uint32_t p = d.p();
  const std::uint64_t size = d.size();
  const auto& table = d.inner_product_table();
  std::vector<CycInt> values;
  values.reserve(size);
  std::vector<std::int64_t> counts(p);
  for (std::uint64_t a = 0; a < size; ++a) {
    std::fill(counts.begin(), counts.end(), 0);
    const std::uint8_t* row = table.data() + a * size;
    for (std::uint64_t x = 0; x < size; ++x) {
      ++counts[(f(static_cast<Index>(x)) + p - row[x]) % p];
    }
    values.push_back(CycInt::from_redundant(p, counts));
  }
  return Spectrum(d, std::move(values));
}

Spectrum gwht_fast(const PFunc& f) {
  const Space& d = f.domain();
  const std::uint32_t p = d.p();
  const std::uint64_t size = d.size();
  std::vector<std::int64_t> buf(size * p, 0);
  for (std::uint64_t x = 0; x < size; ++x) buf[x * p + f(static_cast<Index>(x))] = 1;
  butterfly(buf, p, d.dimension(), -1);

  const auto& gmap = d.gram_map();
  std::vector<CycInt> values;
  values.reserve(size);
  for (std::uint64_t a = 0; a < size; ++a) {
    const std::uint64_t c = gmap[a];
    values.push_back(CycInt::from_redundant(p, std::span<const std::int64_t>(buf.data() + c * p, p)));
  }
  return Spectrum(d, std::move(values));
}

PFunc inverse_gwht(const Spectrum& spectrum) {
  const Space& d = spectrum.domain();
  const std::uint32_t p = d.p();
  const std::uint64_t size = d.size();
  const auto& gmap = d.gram_map();
  std::vector<std::int64_t> buf(size * p, 0);
  for (std::uint64_t a = 0; a < size; ++a) {
    const auto coords = spectrum[static_cast<Index>(a)].coords64();
    std::copy(coords.begin(), coords.end(), buf.begin() + static_cast<std::ptrdiff_t>(gmap[a] * p));
  }
  butterfly(buf, p, d.dimension(), +1);

  const std::int64_t scale = static_cast<std::int64_t>(int_pow(p, d.dimension()));
  PFunc f(d);
  std::vector<std::int64_t> reduced(p - 1);
  for (std::uint64_t y = 0; y < size; ++y) {
    const std::int64_t* cell = buf.data() + y * p;
    const std::int64_t top = cell[p - 1];
    for (std::uint32_t r = 0; r + 1 < p; ++r) {
      const std::int64_t v = cell[r] - top;
      if (v % scale != 0) fail(Errc::NotAFunctionSpectrum, "inverse transform is not divisible by p^n");
      reduced[r] = v / scale;
    }
    // xi^k is e_k for k < p-1 and (-1, ..., -1) for k = p-1
    std::optional<std::uint32_t> value;
    const auto ones = std::count(reduced.begin(), reduced.end(), 1);
    const auto zeros = std::count(reduced.begin(), reduced.end(), 0);
    if (ones == 1 && zeros == static_cast<std::ptrdiff_t>(p - 2)) {
      value = static_cast<std::uint32_t>(std::find(reduced.begin(), reduced.end(), 1) - reduced.begin());
    } else if (std::all_of(reduced.begin(), reduced.end(), [](std::int64_t v) { return v == -1; })) {
      value = p - 1;
    }
    if (!value) fail(Errc::NotAFunctionSpectrum, "inverse value at point " + std::to_string(y) + " is not a root of unity");
    f.set(static_cast<Index>(y), *value);
  }
  return f;
}

bool is_bent(const Spectrum& spectrum) {
  const CycInt target = CycInt::scalar(spectrum.p(), int_pow(spectrum.p(), spectrum.n()));
  const auto sq = spectrum.squared_magnitudes();
  return std::all_of(sq.begin(), sq.end(), [&](const CycInt& v) { return v == target; });
}

bool is_bent(const PFunc& f) { return is_bent(gwht_fast(f)); }

RegularityReport classify_weak_regular(const Spectrum& spectrum, bool keep_dual) {
  RegularityReport report;
  report.bent = is_bent(spectrum);
  if (!report.bent) return report;
  const UnitTable units(spectrum.p(), spectrum.n());
  PFunc dual(spectrum.domain());
  std::optional<int> epsilon;
  for (std::uint64_t b = 0; b < spectrum.values().size(); ++b) {
    const auto dec = units.find(spectrum[static_cast<Index>(b)]);
    if (!dec) return report;
    if (epsilon && *epsilon != dec->epsilon) return report;
    epsilon = dec->epsilon;
    dual.set(static_cast<Index>(b), dec->c);
  }
  report.weakly_regular = true;
  report.epsilon = epsilon;
  report.z = z_label(*epsilon, spectrum.p(), spectrum.n());
  if (keep_dual) report.dual = std::move(dual);
  return report;
}

RegularityReport classify_weak_regular(const PFunc& f) { return classify_weak_regular(gwht_fast(f)); }

std::optional<int> plateau_amplitude(const Spectrum& spectrum) {
  std::set<CycInt::Coord> nonzero;
  for (const CycInt& v : spectrum.squared_magnitudes()) {
    if (v.is_zero()) continue;
    const auto r = v.as_integer();
    if (!r) return std::nullopt;
    nonzero.insert(*r);
  }
  if (nonzero.size() != 1) return std::nullopt;
  CycInt::Coord v = *nonzero.begin();
  const std::uint32_t p = spectrum.p();
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1 || e < spectrum.n()) return std::nullopt;
  return e - spectrum.n();
}

std::optional<int> plateau_amplitude(const PFunc& f) { return plateau_amplitude(gwht_fast(f)); }

const ComponentReport& VectorialReport::at(Index lambda) const {
  for (const auto& c : components)
    if (c.lambda == lambda) return c;
  fail(Errc::InvalidArgument, "no component for lambda " + std::to_string(lambda));
}

VectorialReport vectorial_classify(const VPFunc& F, const ClassifyOptions& options) {
  VectorialReport report;
  report.p = F.domain().p();
  report.n = F.domain().dimension();
  report.m = F.codomain().dimension();

  std::vector<Index> lambdas = options.lambdas;
  if (lambdas.empty()) {
    for (std::uint64_t l = 1; l < F.codomain().size(); ++l) lambdas.push_back(static_cast<Index>(l));
  } else {
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
  }
  report.complete = lambdas.size() + 1 == F.codomain().size();
  report.components.resize(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    const Spectrum spectrum = gwht_fast(component(F, lambdas[i]));
    ComponentReport& c = report.components[i];
    c.lambda = lambdas[i];
    c.regularity = classify_weak_regular(spectrum, options.keep_duals);
    c.amplitude = plateau_amplitude(spectrum);
  });

  report.vectorial_bent = true;
  report.vectorial_weakly_regular = true;
  report.plateaued = true;
  std::set<int> amplitudes;
  for (const auto& c : report.components) {
    report.vectorial_bent = report.vectorial_bent && c.regularity.bent;
    report.vectorial_weakly_regular = report.vectorial_weakly_regular && c.regularity.weakly_regular;
    report.plateaued = report.plateaued && c.amplitude.has_value();
    if (c.amplitude) amplitudes.insert(*c.amplitude);
  }
  if (report.plateaued && amplitudes.size() == 1) report.shared_amplitude = *amplitudes.begin();
  return report;
}

}  // namespace pbent
