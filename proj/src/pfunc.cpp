#include "pbent/pfunc.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pbent/error.hpp"

namespace pbent {

namespace {

void check_same_domain(const PFunc& f, const PFunc& g) {
  if (!(f.domain() == g.domain())) fail(Errc::SpecMismatch, "functions live on different domains");
}

void check_p(const Space& s) {
  if (s.p() > 255) fail(Errc::InvalidArgument, "truth tables support p < 256");
}

}  // namespace

PFunc::PFunc(Space domain) : domain_(std::move(domain)) {
  check_p(domain_);
  values_.assign(domain_.size(), 0);
}

PFunc::PFunc(Space domain, std::vector<std::uint8_t> values) : domain_(std::move(domain)), values_(std::move(values)) {
  check_p(domain_);
  if (values_.size() != domain_.size()) fail(Errc::InvalidArgument, "table length is not p^n");
  for (auto v : values_)
    if (v >= domain_.p()) fail(Errc::InvalidArgument, "table value outside [0, p)");
}

PFunc PFunc::from(Space domain, const std::function<std::uint32_t(Index)>& fn) {
  PFunc f(std::move(domain));
  for (std::uint64_t x = 0; x < f.size(); ++x) f.set(static_cast<Index>(x), fn(static_cast<Index>(x)));
  return f;
}

VPFunc::VPFunc(Space domain, Space codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(domain_.size(), 0) {
  if (domain_.p() != codomain_.p()) fail(Errc::PrimeMismatch, "domain and codomain characteristics differ");
}

VPFunc::VPFunc(Space domain, Space codomain, std::vector<Index> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (domain_.p() != codomain_.p()) fail(Errc::PrimeMismatch, "domain and codomain characteristics differ");
  if (values_.size() != domain_.size()) fail(Errc::InvalidArgument, "table length is not p^n");
  for (Index v : values_)
    if (v >= codomain_.size()) fail(Errc::InvalidArgument, "table value outside the codomain");
}

VPFunc VPFunc::from(Space domain, Space codomain, const std::function<Index(Index)>& fn) {
  std::vector<Index> values(domain.size());
  for (std::uint64_t x = 0; x < values.size(); ++x) values[x] = fn(static_cast<Index>(x));
  return VPFunc(std::move(domain), std::move(codomain), std::move(values));
}

PFunc component(const VPFunc& F, Index lambda) {
  const Space& cod = F.codomain();
  if (lambda >= cod.size()) fail(Errc::InvalidArgument, "lambda outside the codomain");
  if (lambda == 0) fail(Errc::ZeroLambda, "components are defined for lambda != 0");
  const std::uint32_t p = cod.p();
  const auto m = static_cast<std::size_t>(cod.dimension());
  // row = lambda^T G, so that <lambda, y> = row . y
  const auto ld = cod.digits(lambda);
  std::vector<std::uint64_t> row(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) row[j] = (row[j] + std::uint64_t{ld[i]} * cod.gram().at(i, j)) % p;
  // value of the functional on each codomain point, tabulated once
  std::vector<std::uint8_t> functional(cod.size());
  for (std::uint64_t y = 0; y < cod.size(); ++y) {
    std::uint64_t v = y, acc = 0;
    for (std::size_t j = 0; j < m; ++j) {
      acc += row[j] * (v % p);
      v /= p;
    }
    functional[y] = static_cast<std::uint8_t>(acc % p);
  }
  PFunc f(F.domain());
  for (std::uint64_t x = 0; x < f.size(); ++x) f.set(static_cast<Index>(x), functional[F(static_cast<Index>(x))]);
  return f;
}

PFunc derivative(const PFunc& f, Index a) {
  const Space& d = f.domain();
  if (a >= d.size()) fail(Errc::SpecMismatch, "shift outside the domain");
  const std::uint32_t p = f.p();
  return PFunc::from(d, [&](Index x) { return (f(d.add(x, a)) + p - f(x)) % p; });
}

PFunc second_derivative(const PFunc& f, Index a, Index b) { return derivative(derivative(f, a), b); }

PFunc add(const PFunc& f, const PFunc& g) {
  check_same_domain(f, g);
  return PFunc::from(f.domain(), [&](Index x) { return f(x) + g(x); });
}

PFunc negate(const PFunc& f) {
  return PFunc::from(f.domain(), [&](Index x) { return f.p() - f(x); });
}

PFunc scalar_mul(std::uint32_t c, const PFunc& f) {
  c %= f.p();
  return PFunc::from(f.domain(), [&](Index x) { return c * f(x); });
}

bool is_zero(const PFunc& f) {
  for (auto v : f.values())
    if (v != 0) return false;
  return true;
}

PFunc reflect(const PFunc& f) {
  const Space& d = f.domain();
  return PFunc::from(d, [&](Index x) { return f(d.neg(x)); });
}

// --- ANF ----------------------------------------------------------------------

ANF::ANF(std::uint32_t p, int n, std::vector<std::uint8_t> coeffs) : p_(p), n_(n), coeffs_(std::move(coeffs)) {}

std::uint32_t ANF::coefficient(std::span<const std::uint32_t> exponents) const {
  std::uint64_t idx = 0;
  for (std::size_t j = exponents.size(); j-- > 0;) idx = idx * p_ + exponents[j];
  return coeffs_.at(idx);
}

std::uint32_t ANF::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != static_cast<std::size_t>(n_)) fail(Errc::InvalidArgument, "point has wrong arity");
  std::uint64_t acc = 0;
  for (std::uint64_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    std::uint64_t term = coeffs_[a];
    std::uint64_t v = a;
    for (int i = 0; i < n_; ++i) {
      const std::uint64_t e = v % p_;
      v /= p_;
      for (std::uint64_t k = 0; k < e; ++k) term = term * point[static_cast<std::size_t>(i)] % p_;
    }
    acc = (acc + term) % p_;
  }
  return static_cast<std::uint32_t>(acc);
}

ANF anf(const PFunc& f) {
  const std::uint32_t p = f.p();
  const int n = f.domain().dimension();
  // Vandermonde V[x][j] = x^j over F_p (0^0 = 1), inverted once.
  ZpMatrix vandermonde(p, p, p);
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t power = 1;
    for (std::uint32_t j = 0; j < p; ++j) {
      vandermonde.at(x, j) = static_cast<std::uint32_t>(power);
      power = power * x % p;
    }
  }
  const ZpMatrix vinv = *vandermonde.inverse();

  std::vector<std::uint8_t> coeffs(f.values().begin(), f.values().end());
  std::vector<std::uint32_t> line(p), out(p);
  std::uint64_t stride = 1;
  for (int axis = 0; axis < n; ++axis) {
    const std::uint64_t block = stride * p;
    for (std::uint64_t base = 0; base < coeffs.size(); base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t j = 0; j < p; ++j) line[j] = coeffs[base + off + j * stride];
        vinv.apply(line, out);
        for (std::uint32_t j = 0; j < p; ++j) coeffs[base + off + j * stride] = static_cast<std::uint8_t>(out[j]);
      }
    }
    stride = block;
  }
  return ANF(p, n, std::move(coeffs));
}

int degree(const PFunc& f) {
  const ANF form = anf(f);
  const std::uint32_t p = f.p();
  int best = 0;
  const auto coeffs = form.coefficients();
  for (std::uint64_t a = 0; a < coeffs.size(); ++a) {
    if (coeffs[a] == 0) continue;
    int wt = 0;
    for (std::uint64_t v = a; v > 0; v /= p)
      if (v % p != 0) ++wt;
    best = std::max(best, wt);
  }
  return best;
}

// --- .ptt -----------------------------------------------------------------------

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

bool parse_field(const std::string& token, const char* key, std::uint64_t& out) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) return false;
  const char* begin = token.data() + prefix.size();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && begin != end;
}

}  // namespace

TruthTable read_ptt(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) parse_fail(1, "missing header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream header(line);
  std::string magic, version, tp, tn, tm, extra;
  header >> magic >> version >> tp >> tn >> tm;
  std::uint64_t p = 0, n = 0, m = 0;
  if (magic != "PTT" || version != "v1" || !parse_field(tp, "p", p) || !parse_field(tn, "n", n) ||
      !parse_field(tm, "m", m) || (header >> extra)) {
    parse_fail(lineno, "expected header 'PTT v1 p=<p> n=<n> m=<m>'");
  }
  if (p < 3 || p > 255 || !is_prime(p)) parse_fail(lineno, "p must be an odd prime below 256");
  if (n < 1 || m < 1 || n > kMaxSpaceDim || m > kMaxSpaceDim) parse_fail(lineno, "n and m must be in [1, 32]");
  std::uint64_t count = 1, range = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    count *= p;
    if (count > (std::uint64_t{1} << 31)) parse_fail(lineno, "table too large");
  }
  for (std::uint64_t i = 0; i < m; ++i) {
    range *= p;
    if (range > (std::uint64_t{1} << 31)) parse_fail(lineno, "codomain too large");
  }

  TruthTable table;
  table.p = static_cast<std::uint32_t>(p);
  table.n = static_cast<int>(n);
  table.m = static_cast<int>(m);
  table.values.reserve(count);
  while (table.values.size() < count) {
    if (!std::getline(in, line)) {
      parse_fail(lineno + 1, "truncated table: expected " + std::to_string(count) + " values, found " +
                                 std::to_string(table.values.size()));
    }
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc() || ptr != line.data() + line.size() || line.empty()) {
      parse_fail(lineno, "expected a non-negative integer, got '" + line + "'");
    }
    if (v >= range) parse_fail(lineno, "value " + std::to_string(v) + " outside [0, p^m)");
    table.values.push_back(static_cast<Index>(v));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) parse_fail(lineno, "trailing data after the table");
  }
  return table;
}

void write_ptt(std::ostream& out, const TruthTable& table) {
  out << "PTT v1 p=" << table.p << " n=" << table.n << " m=" << table.m << '\n';
  for (Index v : table.values) out << v << '\n';
}

TruthTable to_truth_table(const VPFunc& F) {
  return {F.domain().p(), F.domain().dimension(), F.codomain().dimension(),
          std::vector<Index>(F.values().begin(), F.values().end())};
}

TruthTable to_truth_table(const PFunc& f) {
  return {f.p(), f.domain().dimension(), 1, std::vector<Index>(f.values().begin(), f.values().end())};
}

VPFunc from_truth_table(const TruthTable& table, Space domain, Space codomain) {
  if (domain.p() != table.p || domain.dimension() != table.n || codomain.dimension() != table.m) {
    fail(Errc::SpecMismatch, "spaces do not match the table header");
  }
  return VPFunc(std::move(domain), std::move(codomain), table.values);
}

}  // namespace pbent
