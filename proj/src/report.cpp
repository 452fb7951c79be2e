#include "pbent/report.hpp"

#include <cstdio>
#include <sstream>

namespace pbent {

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const VectorialReport& report) {
  json components = json::array();
  for (const auto& c : report.components) {
    components.push_back({
        {"lambda_index", c.lambda},
        {"bent", c.regularity.bent},
        {"weakly_regular", c.regularity.weakly_regular},
        {"epsilon", opt(c.regularity.epsilon)},
        {"z", c.regularity.z ? json(to_string(*c.regularity.z)) : json(nullptr)},
        {"amplitude", opt(c.amplitude)},
    });
  }
  return {
      {"p", report.p},
      {"n", report.n},
      {"m", report.m},
      {"components", std::move(components)},
      {"vectorial_bent", report.vectorial_bent},
      {"vectorial_weakly_regular", report.vectorial_weakly_regular},
      {"plateaued", report.plateaued},
      {"shared_amplitude", opt(report.shared_amplitude)},
      {"complete", report.complete},
  };
}

json to_json(const NegativeReport& report) {
  json candidates = json::array();
  for (const auto& r : report.candidates) candidates.push_back({{"u", r.u}, {"failing_lambda", opt(r.failing_lambda)}});
  return {
      {"p", report.p},
      {"n", report.n},
      {"m", report.m},
      {"candidates", std::move(candidates)},
      {"admissible", report.admissible},
      {"rejected", report.rejected()},
  };
}

json u_sets_to_json(const std::vector<std::vector<Index>>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void add_provenance(json& report, const Provenance& prov) {
  report["tool_version"] = PBENT_VERSION;
  report["recipe_digest"] = prov.recipe_digest;
  report["seed"] = prov.seed;
  report["elapsed_ms"] = prov.elapsed_ms;
}

std::string format_report(const VectorialReport& report) {
  std::ostringstream out;
  std::size_t wr = 0;
  for (const auto& c : report.components) {
    const auto& r = c.regularity;
    out << "lambda=" << c.lambda << " ";
    if (r.weakly_regular) {
      out << "weakly regular bent eps=" << (*r.epsilon > 0 ? "+1" : "-1") << " z=" << to_string(*r.z)
          << (r.regular() ? " (regular)" : "");
      ++wr;
    } else if (r.bent) {
      out << "bent, not weakly regular";
    } else if (c.amplitude) {
      out << "plateaued s=" << *c.amplitude;
    } else {
      out << "not plateaued";
    }
    out << "\n";
  }
  out << wr << "/" << report.components.size() << " components weakly regular bent; ";
  if (report.vectorial_weakly_regular)
    out << "vectorial weakly regular bent (" << report.n << "," << report.m << ")";
  else if (report.vectorial_bent)
    out << "vectorial bent";
  else if (report.plateaued)
    out << "plateaued" << (report.shared_amplitude ? " s=" + std::to_string(*report.shared_amplitude) : "");
  else
    out << "not bent";
  if (!report.complete) out << " (selected components only)";
  out << "\n";
  return out.str();
}

}  // namespace pbent
