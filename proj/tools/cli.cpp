#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pbent/construct.hpp"
#include "pbent/error.hpp"
#include "pbent/manifest.hpp"
#include "pbent/report.hpp"

namespace pbent::cli {

namespace {

enum Exit { kHolds = 0, kFails = 1, kInputError = 2 };

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit_json(const json& j, const std::string& target, std::ostream& out) {
  if (target == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(target);
  if (!f) fail(Errc::InvalidArgument, "cannot write " + target);
  f << j.dump(2) << "\n";
}

Space space_from(std::uint32_t p, int dim, const std::vector<std::string>& moduli, const char* what) {
  if (moduli.empty()) return Space::vector(p, dim);
  std::vector<Field> factors;
  int total = 0;
  for (const auto& text : moduli) {
    factors.push_back(FieldSpec::make(p, parse_coefficients(text)));
    total += factors.back()->degree();
  }
  if (total != dim) {
    fail(Errc::InvalidArgument, std::string(what) + " moduli have total degree " + std::to_string(total) +
                                    " but the table has dimension " + std::to_string(dim));
  }
  return Space::product(std::move(factors));
}

std::vector<Index> parse_lambda_list(const std::string& text, std::uint64_t bound) {
  if (text == "all") return {};
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0 || v >= bound) {
      fail(Errc::InvalidArgument, "bad component index '" + item + "' (expected 1.." + std::to_string(bound - 1) + ")");
    }
    out.push_back(static_cast<Index>(v));
  }
  if (out.empty()) fail(Errc::InvalidArgument, "empty component list");
  return out;
}

std::string describe_point(const Space& s, Index x) {
  if (s.factors().size() == 1) return std::to_string(x);
  std::string out = "(";
  const auto q = static_cast<Index>(s.factors().front()->size());
  out += std::to_string(x % q) + "," + std::to_string(x / q) + ")";
  return out;
}

std::string moduli_hint(const VPFunc& F) {
  std::string hint;
  for (const Field& f : F.domain().factors()) hint += " --domain-modulus " + format_coefficients(f->modulus());
  if (F.codomain().factors().size() == 1) hint += " --codomain-modulus " + format_coefficients(F.codomain().factors()[0]->modulus());
  return hint;
}

// --- commands --------------------------------------------------------------------

struct AnalyzeArgs {
  std::string in;
  std::string components = "all";
  std::string json_out;
  std::vector<std::string> domain_moduli;
  std::string codomain_modulus;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  std::ifstream in(a.in);
  if (!in) fail(Errc::InvalidArgument, "cannot open " + a.in);
  const TruthTable table = read_ptt(in);
  const Space domain = space_from(table.p, table.n, a.domain_moduli, "domain");
  const Space codomain = space_from(table.p, table.m,
                                    a.codomain_modulus.empty() ? std::vector<std::string>{} : std::vector{a.codomain_modulus},
                                    "codomain");
  const VPFunc F = from_truth_table(table, domain, codomain);
  ClassifyOptions opts;
  opts.lambdas = parse_lambda_list(a.components, codomain.size());
  opts.keep_duals = false;
  const VectorialReport report = vectorial_classify(F, opts);

  if (!a.json_out.empty()) {
    json j = to_json(report);
    std::ostringstream bytes;
    write_ptt(bytes, table);
    add_provenance(j, {digest(bytes.str()), 0, ms_since(start)});
    emit_json(j, a.json_out, out);
  }
  if (a.json_out != "-") out << format_report(report);
  return report.vectorial_weakly_regular ? kHolds : kFails;
}

struct BuildArgs {
  std::string recipe;
  std::string out_path;
  bool no_verify = false;
  std::string json_out;
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const std::string text = read_file(a.recipe);
  const Recipe recipe = parse_recipe_text(text);
  const BuildResult built = build_recipe(recipe, !a.no_verify);
  {
    std::ofstream f(a.out_path);
    if (!f) fail(Errc::InvalidArgument, "cannot write " + a.out_path);
    write_ptt(f, to_truth_table(built.F));
  }
  const bool text_out = a.json_out != "-";
  if (text_out) out << "wrote " << a.out_path << " (p=" << built.F.domain().p() << " n=" << built.F.domain().dimension()
                    << " m=" << built.F.codomain().dimension() << ")\n";
  if (!built.report) {
    if (text_out) out << "verification skipped\n";
    return kHolds;
  }
  if (!a.json_out.empty()) {
    json j = to_json(*built.report);
    add_provenance(j, {digest(text), recipe.seed, ms_since(start)});
    emit_json(j, a.json_out, out);
  }
  if (text_out) {
    out << format_report(*built.report);
    out << "analyze with:" << moduli_hint(built.F) << "\n";
  }
  const bool ok = recipe.family == Family::Plateaued ? built.report->plateaued : built.report->vectorial_weakly_regular;
  return ok ? kHolds : kFails;
}

struct ReproduceArgs {
  std::string reading = "both";
  std::string json_out;
};

int cmd_reproduce(const ReproduceArgs& a, std::ostream& out) {
  std::vector<std::pair<std::string, Example1Reading>> readings;
  if (a.reading == "consistent" || a.reading == "both") readings.emplace_back("consistent", Example1Reading::Consistent);
  if (a.reading == "literal" || a.reading == "both") readings.emplace_back("literal", Example1Reading::Literal);

  const bool text_out = a.json_out != "-";
  json j = {{"readings", json::object()}};
  std::vector<BuildResult> results;
  bool ok = true;
  for (const auto& [name, reading] : readings) {
    const auto start = Clock::now();
    BuildResult b;
    try {
      b = reproduce_example1(reading);
    } catch (const Error& e) {
      if (e.code() != Errc::PostVerificationFailed) throw;
      b = reproduce_example1(reading, false);
      b.report = vectorial_classify(b.F, {.lambdas = {}, .keep_duals = false});
    }
    const double elapsed = ms_since(start);
    const VectorialReport& r = *b.report;
    std::size_t wr = 0;
    for (const auto& c : r.components) wr += c.regularity.weakly_regular;
    ok = ok && r.vectorial_weakly_regular;
    if (text_out) {
      out << "== " << name << " reading ==\n" << format_report(r);
      out << name << ": " << wr << "/" << r.components.size() << " components weakly regular bent, "
          << static_cast<long long>(elapsed) << " ms\n";
    }
    json rj = to_json(r);
    rj["elapsed_ms"] = elapsed;
    j["readings"][name] = std::move(rj);
    results.push_back(std::move(b));
  }
  if (results.size() == 2) {
    const VectorialReport& c = *results[0].report;
    const VectorialReport& l = *results[1].report;
    std::size_t differ = 0;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      const auto& x = c.components[i].regularity;
      const auto& y = l.components[i].regularity;
      differ += x.weakly_regular != y.weakly_regular || x.epsilon != y.epsilon || x.z != y.z;
    }
    const bool same_function = results[0].F == results[1].F;
    j["comparison"] = {{"same_function", same_function}, {"components_with_different_labels", differ}};
    if (text_out) {
      out << "readings " << (same_function ? "define the same function" : "define different functions") << "; "
          << (differ == 0 ? "classifications agree on every component"
                          : std::to_string(differ) + " components classified differently")
          << "\n";
    }
  }
  if (!a.json_out.empty()) {
    add_provenance(j, {digest("example1:" + a.reading), 0, 0});
    j.erase("elapsed_ms");
    emit_json(j, a.json_out, out);
  }
  return ok ? kHolds : kFails;
}

struct SearchArgs {
  std::string recipe;
  int t = 1;
  std::size_t limit = 10;
  std::string json_out;
};

int cmd_search_pu(const SearchArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const std::string text = read_file(a.recipe);
  const Recipe recipe = parse_g_recipe_text(text);
  const VPFunc G = recipe_G(recipe);
  const auto sets = search_u_sets(G, a.t, a.limit);
  if (a.json_out != "-") {
    out << sets.size() << " admissible U" << (a.limit == 0 ? " (limit 0)" : "") << "\n";
    for (const auto& s : sets) {
      out << "U =";
      for (Index u : s) out << " " << describe_point(G.domain(), u);
      out << "\n";
    }
  }
  if (!a.json_out.empty()) {
    json j = {{"t", a.t}, {"limit", a.limit}, {"sets", u_sets_to_json(sets)}};
    add_provenance(j, {digest(text), recipe.seed, ms_since(start)});
    emit_json(j, a.json_out, out);
  }
  return sets.empty() && a.limit > 0 ? kFails : kHolds;
}

struct NegativeArgs {
  std::string kind;
  std::uint32_t p = 3;
  int m = 1;
  std::string modulus;
  std::string json_out;
};

int cmd_negative(const NegativeArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const bool kasami = a.kind == "kasami";
  const int n = kasami ? 2 * a.m : a.m;
  const Field field = FieldSpec::make(a.p, a.modulus.empty() ? find_irreducible(a.p, n) : parse_coefficients(a.modulus));
  if (field->degree() != n) fail(Errc::InvalidArgument, "modulus must have degree " + std::to_string(n));
  const NegativeReport r = verify_no_pu_monomial(kasami ? MonomialKind::Kasami : MonomialKind::Square, field);
  if (a.json_out != "-") {
    out << (kasami ? "x^(p^m+1)" : "x^2") << " over GF(" << a.p << "^" << n << "): ";
    if (r.admissible.empty()) {
      out << "admissible set empty (" << r.rejected() << "/" << r.candidates.size() << " rejected)\n";
    } else {
      out << r.admissible.size() << " admissible u:";
      for (Index u : r.admissible) out << " " << u;
      out << "\n";
    }
  }
  if (!a.json_out.empty()) {
    json j = to_json(r);
    j["kind"] = a.kind;
    add_provenance(j, {digest(a.kind + ":" + std::to_string(a.p) + ":" + std::to_string(a.m) + ":" + a.modulus), 0,
                       ms_since(start)});
    emit_json(j, a.json_out, out);
  }
  return r.admissible.empty() ? kHolds : kFails;
}

void add_json_flag(CLI::App* cmd, std::string& target) {
  cmd->add_option("--json", target, "Write the JSON report to a file ('-' or no value: stdout)")
      ->expected(0, 1)
      ->default_str("-");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build and verify p-ary weakly regular bent and plateaued functions"};
  app.name("pbent");
  app.set_version_flag("--version", PBENT_VERSION);
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Classify every component of a .ptt truth table");
  c_analyze->add_option("--in", analyze.in, "Truth table file")->required();
  c_analyze->add_option("--components", analyze.components, "'all' or a comma-separated list of lambda indices");
  c_analyze->add_option("--domain-modulus", analyze.domain_moduli, "Modulus of a domain factor field (repeat per factor)");
  c_analyze->add_option("--codomain-modulus", analyze.codomain_modulus, "Modulus of the codomain field");
  add_json_flag(c_analyze, analyze.json_out);

  BuildArgs build;
  auto* c_build = app.add_subcommand("build", "Build a function from a recipe manifest");
  c_build->add_option("--recipe", build.recipe, "Recipe manifest (JSON)")->required();
  c_build->add_option("--out", build.out_path, "Output .ptt file")->required();
  c_build->add_flag("--no-verify", build.no_verify, "Skip the classification of the result");
  add_json_flag(c_build, build.json_out);

  ReproduceArgs repro;
  auto* c_repro = app.add_subcommand("reproduce-example", "Build and classify the (8,4) example over GF(3^8)");
  c_repro->add_option("--reading", repro.reading, "consistent, literal or both")
      ->check(CLI::IsMember({"consistent", "literal", "both"}));
  add_json_flag(c_repro, repro.json_out);

  SearchArgs search;
  auto* c_search = app.add_subcommand("search-pu", "List admissible U for the duals of a recipe's G");
  c_search->add_option("--recipe,--in", search.recipe, "Manifest describing G")->required();
  c_search->add_option("--t", search.t, "Size of U")->check(CLI::PositiveNumber);
  c_search->add_option("--limit", search.limit, "Maximum number of sets to list");
  add_json_flag(c_search, search.json_out);

  NegativeArgs neg;
  auto* c_neg = app.add_subcommand("negative", "Show that x^2 or x^(p^m+1) admits no u");
  c_neg->add_option("--kind", neg.kind, "square or kasami")->required()->check(CLI::IsMember({"square", "kasami"}));
  c_neg->add_option("--p", neg.p, "Odd prime");
  c_neg->add_option("--m", neg.m, "Extension degree (the field is GF(p^m) for square, GF(p^2m) for kasami)")
      ->check(CLI::PositiveNumber);
  c_neg->add_option("--modulus", neg.modulus, "Modulus of the big field");
  add_json_flag(c_neg, neg.json_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(PBENT_VERSION) + "\n" : app.help());
      return kHolds;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*c_analyze) return cmd_analyze(analyze, out);
    if (*c_build) return cmd_build(build, out);
    if (*c_repro) return cmd_reproduce(repro, out);
    if (*c_search) return cmd_search_pu(search, out);
    if (*c_neg) return cmd_negative(neg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::PostVerificationFailed ? kFails : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace pbent::cli
