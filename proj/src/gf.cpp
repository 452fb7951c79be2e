#include "pbent/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

#include "pbent/error.hpp"
#include "pbent/linalg.hpp"

namespace pbent {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first, F_p coefficients

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inverse_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * f[j]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  Poly out(acc.begin(), acc.end());
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t evaluate_root_check(const Poly& f, std::uint32_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  if (k == 2) {
    for (std::uint32_t x = 0; x < p; ++x)
      if (evaluate_root_check(f, x, p) == 0) return false;
    return true;
  }
  // Rabin: x^(p^k) = x mod f, and gcd(x^(p^(k/q)) - x, f) = 1 for primes q | k.
  const Poly x{0, 1};
  auto frobenius_power = [&](int times) {
    Poly y = x;
    for (int i = 0; i < times; ++i) y = poly_powmod(y, p, f, p);
    return y;
  };
  if (!poly_sub(frobenius_power(k), x, p).empty()) return false;
  for (std::uint64_t q : prime_factors(static_cast<std::uint64_t>(k))) {
    Poly g = poly_gcd(f, poly_sub(frobenius_power(k / static_cast<int>(q)), x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int k) {
  if (k < 1) fail(Errc::InvalidArgument, "degree must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t v = idx;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f.back() = 1;
    if (is_irreducible(p, f)) return f;
  }
  fail(Errc::InternalInvariant, "no irreducible polynomial found");
}

// --- FieldElem ---------------------------------------------------------------

const FieldSpec& FieldElem::spec() const {
  if (spec_ == nullptr) fail(Errc::InvalidArgument, "use of an unbound field element");
  return *spec_;
}

Index FieldElem::index() const {
  const FieldSpec& s = spec();
  std::uint64_t idx = 0;
  for (int j = s.degree(); j-- > 0;) idx = idx * s.p() + digits_[static_cast<std::size_t>(j)];
  return static_cast<Index>(idx);
}

std::span<const std::uint32_t> FieldElem::digits() const {
  return {digits_.data(), static_cast<std::size_t>(spec().degree())};
}

bool FieldElem::is_zero() const {
  return std::all_of(digits_.begin(), digits_.end(), [](std::uint32_t d) { return d == 0; });
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) { return a.spec().add(a, b); }
FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a.spec().sub(a, b); }
FieldElem operator-(const FieldElem& a) { return a.spec().neg(a); }
FieldElem operator*(const FieldElem& a, const FieldElem& b) { return a.spec().mul(a, b); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.spec_ == nullptr || b.spec_ == nullptr) return a.spec_ == b.spec_;
  return a.spec_->same_as(*b.spec_) && a.digits_ == b.digits_;
}

FieldElem inv(const FieldElem& a) { return a.spec().inv(a); }
FieldElem pow(const FieldElem& a, std::uint64_t e) { return a.spec().pow(a, e); }
FieldElem trace(const FieldElem& x, int to_degree) { return x.spec().trace(x, to_degree); }

// --- FieldSpec ---------------------------------------------------------------

Field FieldSpec::make(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (p <= 2 || !is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  if (p > 65521) fail(Errc::InvalidArgument, "characteristic too large");
  if (modulus.size() < 2) fail(Errc::InvalidArgument, "modulus must have degree >= 1");
  for (std::uint32_t c : modulus)
    if (c >= p) fail(Errc::InvalidArgument, "modulus coefficient out of range [0, p)");
  if (modulus.back() != 1) fail(Errc::InvalidArgument, "modulus must be monic");
  const int k = static_cast<int>(modulus.size()) - 1;
  if (k > kMaxDegree) fail(Errc::TooLarge, "extension degree above " + std::to_string(kMaxDegree));
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= p;
    if (size > (std::uint64_t{1} << 31)) fail(Errc::TooLarge, "field has more than 2^31 elements");
  }
  if (!is_irreducible(p, modulus)) {
    fail(Errc::ReducibleModulus, format_coefficients(modulus) + " is reducible over F_" + std::to_string(p));
  }

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->k_ = k;
  spec->size_ = size;
  spec->modulus_ = std::move(modulus);
  spec->order_factors_ = prime_factors(size - 1);
  for (std::uint64_t idx = 1; idx < size; ++idx) {
    const FieldElem a = spec->element(static_cast<Index>(idx));
    bool primitive = true;
    for (std::uint64_t q : spec->order_factors_) {
      if (spec->pow(a, (size - 1) / q) == spec->one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      spec->primitive_ = static_cast<Index>(idx);
      break;
    }
  }
  return spec;
}

FieldElem FieldSpec::element(Index index) const {
  if (index >= size_) fail(Errc::InvalidArgument, "element index out of range for " + describe());
  FieldElem e;
  e.spec_ = this;
  std::uint32_t v = index;
  for (int j = 0; j < k_; ++j) {
    e.digits_[static_cast<std::size_t>(j)] = v % p_;
    v /= p_;
  }
  return e;
}

FieldElem FieldSpec::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != static_cast<std::size_t>(k_)) fail(Errc::InvalidArgument, "digit vector length mismatch");
  FieldElem e;
  e.spec_ = this;
  for (int j = 0; j < k_; ++j) e.digits_[static_cast<std::size_t>(j)] = digits[static_cast<std::size_t>(j)] % p_;
  return e;
}

FieldElem FieldSpec::generator() const {
  if (k_ == 1) return scalar((p_ - modulus_[0]) % p_);
  return element(p_);
}

bool FieldSpec::same_as(const FieldSpec& other) const {
  return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
}

void FieldSpec::check_member(const FieldElem& a) const {
  if (!a.valid() || !same_as(a.spec())) {
    fail(Errc::SpecMismatch, "element does not belong to " + describe());
  }
}

FieldElem FieldSpec::add(const FieldElem& a, const FieldElem& b) const {
  check_member(a);
  check_member(b);
  FieldElem r;
  r.spec_ = this;
  for (int j = 0; j < k_; ++j) {
    const auto i = static_cast<std::size_t>(j);
    r.digits_[i] = (a.digits_[i] + b.digits_[i]) % p_;
  }
  return r;
}

FieldElem FieldSpec::neg(const FieldElem& a) const {
  check_member(a);
  FieldElem r;
  r.spec_ = this;
  for (int j = 0; j < k_; ++j) {
    const auto i = static_cast<std::size_t>(j);
    r.digits_[i] = (p_ - a.digits_[i]) % p_;
  }
  return r;
}

FieldElem FieldSpec::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem FieldSpec::mul(const FieldElem& a, const FieldElem& b) const {
  check_member(a);
  check_member(b);
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (int i = 0; i < k_; ++i) {
    const std::uint64_t ai = a.digits_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < k_; ++j) {
      const auto ij = static_cast<std::size_t>(i + j);
      prod[ij] = (prod[ij] + ai * b.digits_[static_cast<std::size_t>(j)]) % p_;
    }
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    const std::uint64_t c = prod[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    prod[static_cast<std::size_t>(i)] = 0;
    for (int j = 0; j < k_; ++j) {
      const auto t = static_cast<std::size_t>(i - k_ + j);
      prod[t] = (prod[t] + (p_ - c) * modulus_[static_cast<std::size_t>(j)]) % p_;
    }
  }
  FieldElem r;
  r.spec_ = this;
  for (int j = 0; j < k_; ++j) r.digits_[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(prod[static_cast<std::size_t>(j)]);
  return r;
}

FieldElem FieldSpec::pow(const FieldElem& a, std::uint64_t e) const {
  check_member(a);
  FieldElem result = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem FieldSpec::inv(const FieldElem& a) const {
  check_member(a);
  if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero in " + describe());
  return pow(a, size_ - 2);
}

FieldElem FieldSpec::trace(const FieldElem& x, int to_degree) const {
  check_member(x);
  if (to_degree < 1 || k_ % to_degree != 0) {
    fail(Errc::DegreeNotDividing, std::to_string(to_degree) + " does not divide " + std::to_string(k_));
  }
  FieldElem acc = zero();
  FieldElem conj = x;
  for (int j = 0; j < k_ / to_degree; ++j) {
    acc = add(acc, conj);
    for (int s = 0; s < to_degree; ++s) conj = frobenius(conj);
  }
  return acc;
}

std::uint64_t FieldSpec::order(const FieldElem& a) const {
  check_member(a);
  if (a.is_zero()) fail(Errc::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t ord = size_ - 1;
  for (std::uint64_t q : order_factors_) {
    while (ord % q == 0 && pow(a, ord / q) == one()) ord /= q;
  }
  return ord;
}

std::string FieldSpec::describe() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ") mod [" + format_coefficients(modulus_) + "]";
}

// --- free helpers ------------------------------------------------------------

bool linearly_independent(std::span<const FieldElem> elems) {
  if (elems.empty()) fail(Errc::InvalidArgument, "empty element list");
  const FieldSpec& spec = elems.front().spec();
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(elems.size());
  for (const FieldElem& e : elems) {
    spec.check_member(e);
    rows.emplace_back(e.digits().begin(), e.digits().end());
  }
  return rank_mod_p(spec.p(), rows) == elems.size();
}

std::vector<std::uint32_t> minimal_polynomial(const FieldElem& x) {
  const FieldSpec& f = x.spec();
  std::vector<FieldElem> conjugates{x};
  for (FieldElem c = f.frobenius(x); !(c == x); c = f.frobenius(c)) conjugates.push_back(c);
  // prod (X - c), coefficients as field elements, constant term first
  std::vector<FieldElem> poly{f.one()};
  for (const FieldElem& c : conjugates) {
    std::vector<FieldElem> next(poly.size() + 1, f.zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * c;
    }
    poly = std::move(next);
  }
  std::vector<std::uint32_t> out;
  out.reserve(poly.size());
  for (const FieldElem& c : poly) {
    if (c.index() >= f.p()) fail(Errc::InternalInvariant, "minimal polynomial left the prime field");
    out.push_back(c.scalar());
  }
  return out;
}

SubfieldEmbedding::SubfieldEmbedding(Field sub, Field sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
  if (sub_->p() != sup_->p()) fail(Errc::SpecMismatch, "embedding between different characteristics");
  if (sup_->degree() % sub_->degree() != 0) {
    fail(Errc::DegreeNotDividing, std::to_string(sub_->degree()) + " does not divide " + std::to_string(sup_->degree()));
  }
  const auto& poly = sub_->modulus();
  std::optional<FieldElem> root;
  if (sub_->same_as(*sup_)) {
    root = sup_->generator();
  } else {
    for (std::uint64_t idx = 0; idx < sup_->size() && !root; ++idx) {
      const FieldElem y = sup_->element(static_cast<Index>(idx));
      FieldElem acc = sup_->zero();
      for (std::size_t i = poly.size(); i-- > 0;) acc = acc * y + sup_->scalar(poly[i]);
      if (acc.is_zero()) root = y;
    }
  }
  if (!root) fail(Errc::InternalInvariant, "subfield generator has no root in the extension");
  FieldElem power = sup_->one();
  for (int j = 0; j < sub_->degree(); ++j) {
    basis_images_.push_back(power);
    power = power * *root;
  }
  inverse_table_.assign(sup_->size(), -1);
  for (std::uint64_t idx = 0; idx < sub_->size(); ++idx) {
    const FieldElem x = sub_->element(static_cast<Index>(idx));
    inverse_table_[(*this)(x).index()] = static_cast<std::int64_t>(idx);
  }
}

FieldElem SubfieldEmbedding::operator()(const FieldElem& x) const {
  sub_->check_member(x);
  FieldElem acc = sup_->zero();
  const auto digits = x.digits();
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] != 0) acc = acc + sup_->scalar(digits[j]) * basis_images_[j];
  }
  return acc;
}

std::optional<FieldElem> SubfieldEmbedding::preimage(const FieldElem& y) const {
  sup_->check_member(y);
  const std::int64_t idx = inverse_table_[y.index()];
  if (idx < 0) return std::nullopt;
  return sub_->element(static_cast<Index>(idx));
}

const SubfieldEmbedding& subfield_embedding(const Field& sub, const Field& sup) {
  static std::mutex mutex;
  static std::map<std::vector<std::uint32_t>, std::unique_ptr<SubfieldEmbedding>> cache;
  std::vector<std::uint32_t> key{sub->p()};
  key.insert(key.end(), sub->modulus().begin(), sub->modulus().end());
  key.push_back(0xFFFFFFFFu);
  key.insert(key.end(), sup->modulus().begin(), sup->modulus().end());
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(std::move(key), std::make_unique<SubfieldEmbedding>(sub, sup)).first;
  }
  return *it->second;
}

FieldElem subfield_embed(const Field& sub, const Field& sup, const FieldElem& x) {
  return subfield_embedding(sub, sup)(x);
}

std::vector<std::uint32_t> parse_coefficients(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) fail(Errc::InvalidArgument, "empty coefficient in '" + text + "'");
    std::uint32_t value = 0;
    const char* begin = item.data() + first;
    const char* end = item.data() + last + 1;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) fail(Errc::InvalidArgument, "bad coefficient '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) fail(Errc::InvalidArgument, "no coefficients given");
  return out;
}

std::string format_coefficients(const std::vector<std::uint32_t>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

}  // namespace pbent
