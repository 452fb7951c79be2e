#include "pbent/manifest.hpp"

#include "pbent/error.hpp"

namespace pbent {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { fail(Errc::ParseError, "manifest: " + what); }

std::vector<std::uint32_t> read_modulus(const json& v) {
  if (v.is_string()) return parse_coefficients(v.get<std::string>());
  if (v.is_array()) return v.get<std::vector<std::uint32_t>>();
  bad("modulus must be a coefficient string or array");
}

Index read_index(const json& v, std::uint64_t bound, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    bad(std::string(what) + " must be a non-negative integer");
  }
  const auto x = v.get<std::uint64_t>();
  if (x >= bound) bad(std::string(what) + " " + std::to_string(x) + " out of range (< " + std::to_string(bound) + ")");
  return static_cast<Index>(x);
}

std::vector<Index> read_indices(const json& v, std::uint64_t bound, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Index> out;
  for (const auto& e : v) out.push_back(read_index(e, bound, what));
  return out;
}

Embedding read_embedding(const json& m) {
  const std::string e = m.value("embedding", std::string("field"));
  if (e == "field") return Embedding::Field;
  if (e == "tuple") return Embedding::Tuple;
  bad("embedding must be \"field\" or \"tuple\"");
}

HFunction read_h(const json& spec, const Field& ft, Embedding embedding, std::uint64_t seed) {
  if (!spec.is_object()) bad("h must be an object");
  const std::string kind = spec.value("kind", std::string());
  const std::uint64_t q = ft->size();
  HFunction h;
  if (kind == "table") {
    h = HFunction::from_table(ft, embedding, read_indices(spec.at("data"), q, "h value"));
  } else if (kind == "poly") {
    std::vector<std::pair<std::uint64_t, Index>> terms;
    if (!spec.at("data").is_array()) bad("poly data must be a list of [exponent, coefficient]");
    for (const auto& term : spec.at("data")) {
      if (!term.is_array() || term.size() != 2) bad("poly term must be [exponent, coefficient]");
      terms.emplace_back(term[0].get<std::uint64_t>(), read_index(term[1], q, "poly coefficient"));
    }
    h = HFunction::from_polynomial(ft, terms, embedding);
  } else if (kind == "random") {
    h = HFunction::random(ft, embedding, spec.value("seed", seed));
  } else if (kind == "zero") {
    h = HFunction::zero(ft, embedding);
  } else {
    bad("h.kind must be table, poly, random or zero");
  }
  if (spec.contains("combiner")) {
    for (Index c : read_indices(spec["combiner"], q, "combiner")) h.combiner.push_back(ft->element(c));
  }
  return h;
}

}  // namespace

namespace {

void read_g_part(const json& m, Recipe& r) {
  if (!m.is_object()) bad("top level must be an object");
  const auto p = m.at("p").get<std::uint32_t>();
  const int deg = m.at("m").get<int>();
  if (deg < 1) bad("m must be >= 1");
  r.seed = m.value("seed", std::uint64_t{0});
  r.field_m = FieldSpec::make(p, m.contains("modulus_m") ? read_modulus(m["modulus_m"]) : find_irreducible(p, deg));
  if (r.field_m->degree() != deg) bad("modulus_m has degree " + std::to_string(r.field_m->degree()) + ", expected m");
  const Field& f = r.field_m;

  if (m.contains("pi")) {
    const auto rows = m["pi"].get<std::vector<std::vector<std::uint32_t>>>();
    if (rows.size() != static_cast<std::size_t>(deg)) bad("pi must have m rows");
    for (const auto& row : rows)
      if (row.size() != rows.size()) bad("pi must be square");
    r.pi = LinearPermutation(f, ZpMatrix::from_rows(p, rows));
  } else if (m.contains("seed")) {
    r.pi = random_linear_permutation(f, r.seed);
  } else {
    r.pi = LinearPermutation::identity(f);
  }

  const std::string family = m.value("family", std::string("shifted"));
  if (family == "shifted" || family == "construction1" || family == "theorem3") {
    r.family = Family::Shifted;
  } else if (family == "plateaued" || family == "theorem4") {
    r.family = Family::Plateaued;
  } else {
    bad("family must be shifted or plateaued");
  }

  if (m.contains("G")) {
    const json& G = m["G"];
    const std::string form = G.value("form", std::string("ypix"));
    if (form == "ypix") r.form = MMForm::YPiX;
    else if (form == "xpiy") r.form = MMForm::XPiY;
    else bad("G.form must be ypix or xpiy");
    if (G.contains("g")) {
      const Space s = Space::field(f);
      auto table = read_indices(G["g"], f->size(), "g value");
      if (table.size() != f->size()) bad("g table must have p^m entries");
      r.g = VPFunc(s, s, std::move(table));
    }
  }
}

}  // namespace

Recipe parse_g_recipe(const json& m) try {
  Recipe r;
  read_g_part(m, r);
  return r;
} catch (const nlohmann::json::exception& e) {
  bad(e.what());
}

Recipe parse_recipe(const json& m) try {
  Recipe r;
  read_g_part(m, r);
  const Field& f = r.field_m;
  const std::uint32_t p = f->p();
  const int deg = f->degree();
  const Space pairs = pair_space(f);
  if (m.contains("alphas")) {
    for (Index a : read_indices(m["alphas"], f->size(), "alpha")) {
      r.alphas.push_back(f->element(a));
      const FieldElem parts[] = {f->element(a), f->zero()};
      r.U.push_back(pairs.join(parts));
    }
  }
  if (m.contains("U")) {
    if (m.contains("alphas")) bad("give either U or alphas, not both");
    r.U = read_indices(m["U"], pairs.size(), "U element");
  }
  if (r.U.empty()) bad("U (or alphas) is required");
  const int t = m.value("t", static_cast<int>(r.U.size()));
  if (t != static_cast<int>(r.U.size())) bad("t = " + std::to_string(t) + " but U has " + std::to_string(r.U.size()) + " elements");

  if (r.family == Family::Plateaued) {
    if (r.alphas.empty()) bad("theorem4 recipes take alphas");
    if (r.g || r.form != MMForm::YPiX) bad("theorem4 recipes use G = y pi(x)");
    const Space tuple = Space::vector(p, t);
    if (!m.contains("h_list") || !m["h_list"].is_array() || m["h_list"].empty()) bad("theorem4 recipes need h_list");
    for (const auto& tab : m["h_list"]) {
      auto values = read_indices(tab, p, "h_list value");
      if (values.size() != tuple.size()) bad("each h_list table needs p^t entries");
      r.h_list.emplace_back(tuple, std::vector<std::uint8_t>(values.begin(), values.end()));
    }
    return r;
  }

  Field ft;
  if (m.contains("modulus_t")) {
    ft = FieldSpec::make(p, read_modulus(m["modulus_t"]));
    if (ft->degree() != t) bad("modulus_t must have degree t");
  } else if (t == deg) {
    ft = f;
  } else if (t < deg && deg % t == 0) {
    ft = subfield_of(f, t);
  } else {
    throw PreconditionError(Precondition::Divisibility, "need t | m, got t=" + std::to_string(t) + " m=" + std::to_string(deg));
  }
  if (!m.contains("h")) bad("h is required");
  r.h = read_h(m["h"], ft, read_embedding(m), r.seed);
  return r;
} catch (const nlohmann::json::exception& e) {
  bad(e.what());
}

Recipe parse_recipe_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
  return parse_recipe(j);
}

Recipe parse_g_recipe_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
  return parse_g_recipe(j);
}

VPFunc recipe_G(const Recipe& r) { return mm_bent(r.pi, r.g, r.form); }

BuildResult build_recipe(const Recipe& r, bool verify) {
  if (r.family == Family::Plateaued) return theorem4_plateaued(r.pi, r.alphas, r.h_list, verify);
  return construction1(ConstructionRecipe{recipe_G(r), r.U, *r.h, verify});
}

}  // namespace pbent
