#include "pbent/space.hpp"

#include <map>
#include <mutex>

#include "pbent/error.hpp"

namespace pbent {

struct Space::Impl {
  std::uint32_t p = 0;
  int n = 0;
  std::uint64_t size = 1;
  std::vector<Field> factors;
  std::vector<int> offsets;
  std::vector<std::uint64_t> powers;  // p^j
  ZpMatrix gram;

  mutable std::once_flag gram_map_once;
  mutable std::vector<Index> gram_map;
  mutable std::once_flag table_once;
  mutable std::vector<std::uint8_t> table;
};

Field prime_field(std::uint32_t p) {
  static std::mutex mutex;
  static std::map<std::uint32_t, Field> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, FieldSpec::make(p, {0, 1})).first;
  return it->second;
}

Space Space::product(std::vector<Field> factors) {
  if (factors.empty()) fail(Errc::InvalidArgument, "a space needs at least one factor");
  auto impl = std::make_shared<Impl>();
  impl->p = factors.front()->p();
  for (const Field& f : factors) {
    if (f->p() != impl->p) fail(Errc::PrimeMismatch, "factors of a space must share p");
    impl->offsets.push_back(impl->n);
    impl->n += f->degree();
  }
  if (impl->n > kMaxSpaceDim) fail(Errc::TooLarge, "space dimension above " + std::to_string(kMaxSpaceDim));
  for (int j = 0; j <= impl->n; ++j) {
    impl->powers.push_back(impl->size);
    if (j < impl->n) {
      impl->size *= impl->p;
      if (impl->size > (std::uint64_t{1} << 31)) fail(Errc::TooLarge, "space has more than 2^31 points");
    }
  }
  impl->factors = std::move(factors);

  impl->gram = ZpMatrix(impl->p, static_cast<std::size_t>(impl->n), static_cast<std::size_t>(impl->n));
  for (std::size_t fi = 0; fi < impl->factors.size(); ++fi) {
    const FieldSpec& f = *impl->factors[fi];
    const int k = f.degree();
    const auto off = static_cast<std::size_t>(impl->offsets[fi]);
    FieldElem xi = f.one();
    std::vector<FieldElem> basis;
    for (int i = 0; i < k; ++i) {
      basis.push_back(xi);
      if (k > 1) xi = xi * f.generator();
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        impl->gram.at(off + static_cast<std::size_t>(i), off + static_cast<std::size_t>(j)) =
            f.absolute_trace(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]);
  }
  Space s;
  s.impl_ = std::move(impl);
  return s;
}

Space Space::vector(std::uint32_t p, int n) {
  if (n < 1) fail(Errc::InvalidArgument, "dimension must be >= 1");
  return product(std::vector<Field>(static_cast<std::size_t>(n), prime_field(p)));
}

std::uint32_t Space::p() const { return impl_->p; }
int Space::dimension() const { return impl_->n; }
std::uint64_t Space::size() const { return impl_->size; }
const std::vector<Field>& Space::factors() const { return impl_->factors; }

const Field& Space::as_field() const {
  if (impl_->factors.size() != 1) fail(Errc::SpecMismatch, describe() + " is not a single field");
  return impl_->factors.front();
}

std::vector<std::uint32_t> Space::digits(Index x) const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(impl_->n));
  for (auto& d : out) {
    d = x % impl_->p;
    x /= impl_->p;
  }
  return out;
}

Index Space::index(std::span<const std::uint32_t> digits) const {
  if (digits.size() != static_cast<std::size_t>(impl_->n)) fail(Errc::InvalidArgument, "digit vector length mismatch");
  std::uint64_t idx = 0;
  for (std::size_t j = digits.size(); j-- > 0;) idx = idx * impl_->p + digits[j] % impl_->p;
  return static_cast<Index>(idx);
}

Index Space::add(Index a, Index b) const {
  const std::uint32_t p = impl_->p;
  std::uint64_t out = 0;
  for (int j = 0; j < impl_->n; ++j) {
    const std::uint32_t d = (a % p + b % p) % p;
    out += d * impl_->powers[static_cast<std::size_t>(j)];
    a /= p;
    b /= p;
  }
  return static_cast<Index>(out);
}

Index Space::scale(std::uint32_t c, Index a) const {
  const std::uint32_t p = impl_->p;
  c %= p;
  std::uint64_t out = 0;
  for (int j = 0; j < impl_->n; ++j) {
    const std::uint64_t d = std::uint64_t{a % p} * c % p;
    out += d * impl_->powers[static_cast<std::size_t>(j)];
    a /= p;
  }
  return static_cast<Index>(out);
}

Index Space::neg(Index a) const { return scale(impl_->p - 1, a); }
Index Space::sub(Index a, Index b) const { return add(a, neg(b)); }

std::uint32_t Space::inner(Index a, Index x) const {
  const auto ad = digits(a);
  const auto xd = digits(x);
  const std::uint32_t p = impl_->p;
  std::uint64_t acc = 0;
  const auto n = static_cast<std::size_t>(impl_->n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ad[i] == 0) continue;
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) row += std::uint64_t{impl_->gram.at(i, j)} * xd[j];
    acc = (acc + ad[i] * (row % p)) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

FieldElem Space::component(Index x, std::size_t factor) const {
  if (factor >= impl_->factors.size()) fail(Errc::InvalidArgument, "factor out of range");
  const auto all = digits(x);
  const FieldSpec& f = *impl_->factors[factor];
  const auto off = static_cast<std::size_t>(impl_->offsets[factor]);
  return f.from_digits(std::span<const std::uint32_t>(all).subspan(off, static_cast<std::size_t>(f.degree())));
}

Index Space::join(std::span<const FieldElem> parts) const {
  if (parts.size() != impl_->factors.size()) fail(Errc::InvalidArgument, "wrong number of factor components");
  std::vector<std::uint32_t> all;
  all.reserve(static_cast<std::size_t>(impl_->n));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    impl_->factors[i]->check_member(parts[i]);
    all.insert(all.end(), parts[i].digits().begin(), parts[i].digits().end());
  }
  return index(all);
}

const ZpMatrix& Space::gram() const { return impl_->gram; }

const std::vector<Index>& Space::gram_map() const {
  std::call_once(impl_->gram_map_once, [this] {
    const auto n = static_cast<std::size_t>(impl_->n);
    std::vector<std::uint32_t> in(n), out(n);
    impl_->gram_map.resize(impl_->size);
    for (std::uint64_t a = 0; a < impl_->size; ++a) {
      std::uint64_t v = a;
      for (auto& d : in) {
        d = static_cast<std::uint32_t>(v % impl_->p);
        v /= impl_->p;
      }
      impl_->gram.apply(in, out);
      impl_->gram_map[a] = index(out);
    }
  });
  return impl_->gram_map;
}

const std::vector<std::uint8_t>& Space::inner_product_table() const {
  if (impl_->size * impl_->size > (std::uint64_t{1} << 26)) {
    fail(Errc::TooLarge, "inner-product table for " + describe() + " exceeds 2^26 entries");
  }
  std::call_once(impl_->table_once, [this] {
    const std::uint64_t size = impl_->size;
    impl_->table.assign(size * size, 0);
    std::uint64_t stride = 1;
    for (const Field& f : impl_->factors) {
      const std::uint64_t q = f->size();
      std::vector<std::uint8_t> local(q * q);
      for (std::uint64_t a = 0; a < q; ++a) {
        const FieldElem ea = f->element(static_cast<Index>(a));
        for (std::uint64_t x = 0; x < q; ++x) {
          local[a * q + x] = static_cast<std::uint8_t>(f->absolute_trace(ea * f->element(static_cast<Index>(x))));
        }
      }
      for (std::uint64_t a = 0; a < size; ++a) {
        const std::uint64_t la = (a / stride) % q;
        for (std::uint64_t x = 0; x < size; ++x) {
          const std::uint64_t lx = (x / stride) % q;
          auto& cell = impl_->table[a * size + x];
          cell = static_cast<std::uint8_t>((cell + local[la * q + lx]) % impl_->p);
        }
      }
      stride *= q;
    }
  });
  return impl_->table;
}

bool Space::operator==(const Space& other) const {
  if (impl_ == other.impl_) return true;
  if (!impl_ || !other.impl_) return false;
  if (impl_->p != other.impl_->p || impl_->factors.size() != other.impl_->factors.size()) return false;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i)
    if (!impl_->factors[i]->same_as(*other.impl_->factors[i])) return false;
  return true;
}

std::string Space::describe() const {
  if (!impl_) return "<empty space>";
  std::string out;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
    if (i) out += " x ";
    out += impl_->factors[i]->describe();
  }
  return out;
}

}  // namespace pbent
