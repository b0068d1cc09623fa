#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mobius/json_io.hpp"
#include "mobius/mobius.hpp"

using namespace mobius;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertificationFailed = 1;
constexpr int kExitInputError = 2;

struct Config {
  std::string poset = "div";
  std::string format = "auto";
  std::string ladder = "25,50,100";
  std::uint64_t seed = 0;
  std::optional<int> q;
  std::string out;
};

std::vector<std::int64_t> parse_ladder(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) throw InputError("empty entry in ladder '" + text + "'");
    out.push_back(detail::parse_int(item, text));
  }
  require_ladder(out);
  return out;
}

std::shared_ptr<const PosetView> open_poset(const Config& cfg) {
  auto poset = build(parse_family_spec(cfg.poset, cfg.q));
  if (const char* env = std::getenv("MOBIUS_POSETS_CACHE"); env && *env) {
    const auto entries = detail::parse_int(env, "MOBIUS_POSETS_CACHE");
    if (entries < 0) throw InputError("MOBIUS_POSETS_CACHE must be a nonnegative integer");
    poset->mobius_cache().set_capacity(static_cast<std::size_t>(entries));
  }
  return poset;
}

// Reads "<token> <rational>" lines; blank lines and '#' comments are skipped.
template <class Visit>
void read_pairs(const std::string& path, Visit&& visit) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    auto fail = [&](const std::string& msg) {
      throw InputError(path + " line " + std::to_string(line_no) + ": " + msg);
    };
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok.size() != 2) fail("expected '<element> <rational>', got '" + line + "'");
    try {
      visit(tok[0], parse_rational(tok[1]));
    } catch (const InputError& e) {
      fail(e.what());
    }
  }
}

SupportedFunction read_function(const PosetView& poset, const std::string& path) {
  SupportedFunction f;
  read_pairs(path, [&](const std::string& key, const Rational& v) {
    ElementKey k = poset.parse_element(key);
    if (f.at(k) != 0) throw InputError("element " + to_string(k) + " listed twice");
    f.set(k, v);
  });
  return f;
}

ReducedSequence read_sequence(const std::string& path) {
  ReducedSequence f;
  read_pairs(path, [&](const std::string& index, const Rational& v) {
    const auto n = detail::parse_int(index, index);
    if (n < 1) throw InputError("sequence index must be >= 1");
    if (f.at(n) != 0) throw InputError("index " + index + " listed twice");
    f.set(n, v);
  });
  return f;
}

// Flattens a JSON report into "path: value" lines.
void render_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

class Emitter {
 public:
  explicit Emitter(const Config& cfg) : cfg_(cfg) {
    if (cfg_.format != "auto" && cfg_.format != "json" && cfg_.format != "csv" && cfg_.format != "text")
      throw InputError("unknown format '" + cfg_.format + "' (auto|json|csv|text)");
  }

  // `scalar` is the plain answer printed under auto/text; `rows` is the CSV
  // table (header first). Reports without either fall back to JSON / flattened text.
  void emit(const Json& report, std::optional<std::string> scalar = std::nullopt,
            std::optional<std::vector<std::vector<std::string>>> rows = std::nullopt) {
    std::ostringstream os;
    const std::string& fmt = cfg_.format;
    if (fmt == "json" || (fmt == "auto" && !scalar)) {
      os << report.dump(2) << "\n";
    } else if (fmt == "csv") {
      if (!rows) throw InputError("csv output is not available for this command");
      for (const auto& row : *rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
      }
    } else if (scalar) {
      os << *scalar << "\n";
    } else {
      render_text(report, "", os);
    }
    if (cfg_.out.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream file(cfg_.out);
      if (!file) throw InputError("cannot write '" + cfg_.out + "'");
      file << os.str();
    }
  }

 private:
  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }

  const Config& cfg_;
};

std::vector<std::vector<std::string>> function_rows(const std::map<ElementKey, Rational>& g) {
  std::vector<std::vector<std::string>> rows{{"element", "value"}};
  for (const auto& [k, v] : g) rows.push_back({to_string(k), to_string(v)});
  return rows;
}

Json function_json(const std::map<ElementKey, Rational>& g) {
  Json a = Json::array();
  for (const auto& [k, v] : g) a.push_back({{"element", to_string(k)}, {"value", to_string(v)}});
  return a;
}

std::string compact_list(const ReducedSequence& s, std::int64_t N) {
  std::string out = "[";
  for (std::int64_t n = 1; n <= N; ++n) out += (n > 1 ? "," : "") + to_string(s.at(n));
  return out + "]";
}

std::vector<std::vector<std::string>> sequence_rows(const ReducedSequence& s, std::int64_t N) {
  std::vector<std::vector<std::string>> rows{{"n", "value"}};
  for (std::int64_t n = 1; n <= N; ++n) rows.push_back({std::to_string(n), to_string(s.at(n))});
  return rows;
}

std::vector<std::vector<std::string>> counts_rows(const std::vector<std::int64_t>& ladder,
                                                  const std::vector<std::size_t>& counts,
                                                  const std::string& label = "") {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    std::vector<std::string> r{std::to_string(ladder[i]), std::to_string(counts.at(i))};
    if (!label.empty()) r.insert(r.begin(), label);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::shared_ptr<const PosetView> typed_poset(const CoefficientFamily& fam) {
  switch (fam.kind) {
    case CoefficientFamily::Kind::Dirichlet: return std::make_shared<const DivisibilityPoset>();
    case CoefficientFamily::Kind::LinearOrder: return std::make_shared<const LinearOrderPoset>();
    case CoefficientFamily::Kind::Binomial: return std::make_shared<const FiniteSubsetsPoset>();
    case CoefficientFamily::Kind::QBinomial: return std::make_shared<const SubspacePoset>(fam.q);
  }
  throw InputError("unknown coefficient family");
}

// Default comparison range per family: every interval type up to n_max,
// inside a frontier small enough for brute force.
std::pair<std::int64_t, std::int64_t> verify_defaults(const CoefficientFamily& fam) {
  switch (fam.kind) {
    case CoefficientFamily::Kind::Dirichlet: return {60, 60};
    case CoefficientFamily::Kind::LinearOrder: return {20, 20};
    case CoefficientFamily::Kind::Binomial: return {6, 7};
    case CoefficientFamily::Kind::QBinomial: return {fam.q <= 3 ? 4 : 3, 5};
  }
  return {1, 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Möbius functions, zeta transforms and uncertainty checks on locally finite posets"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--poset", cfg.poset, "poset family spec, e.g. div, subspaces:q=2, prod(div,linear), file:PATH")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "auto|json|csv|text")->capture_default_str();
  app.add_option("--ladder", cfg.ladder, "comma-separated strictly increasing frontier bounds")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized batteries")->capture_default_str();
  app.add_option("--q", cfg.q, "field order for subspaces / qbinomial");
  app.add_option("--out", cfg.out, "write output to FILE instead of stdout");

  std::string x_text, y_text, file_a, file_b, theorem, op, family_text = "dirichlet";
  std::vector<std::string> s_texts;
  std::optional<std::int64_t> n_opt, nmax_opt, frontier_opt;

  auto* mobius_cmd = app.add_subcommand("mobius", "print mu(x, y)");
  mobius_cmd->add_option("x", x_text)->required();
  mobius_cmd->add_option("y", y_text)->required();

  auto* transform_cmd = app.add_subcommand("transform", "g = zeta * f on frontier(n)");
  transform_cmd->add_option("f-file", file_a)->required();
  transform_cmd->add_option("--n", n_opt, "frontier bound (default: top of the ladder)");

  auto* invert_cmd = app.add_subcommand("invert", "f = mu * g on frontier(n)");
  invert_cmd->add_option("g-file", file_a)->required();
  invert_cmd->add_option("--n", n_opt, "frontier bound (default: top of the ladder)");

  auto* witnesses_cmd = app.add_subcommand("witnesses", "H_k witness counts for S along the ladder");
  witnesses_cmd->add_option("S", s_texts)->required();

  auto* check_g_cmd = app.add_subcommand("check-g", "count y with mu(x, y) != 0 along the ladder");
  check_g_cmd->add_option("x", x_text)->required();

  auto* experiment_cmd = app.add_subcommand("experiment", "support of zeta * f along the ladder");
  experiment_cmd->add_option("f-file", file_a)->required();

  auto* certify_cmd = app.add_subcommand("certify", "certify a counterexample poset");
  certify_cmd->add_option("theorem", theorem)->required()->check(CLI::IsMember({"theorem4", "theorem5"}));
  certify_cmd->add_option("--n", n_opt, "use the ladder (n, 2n, 4n)");

  auto* reduced_cmd = app.add_subcommand("reduced", "reduced incidence algebras");
  reduced_cmd->add_option("op", op)->required()->check(
      CLI::IsMember({"conv", "mobius", "verify", "prop7", "prop8", "linear-pair"}));
  reduced_cmd->add_option("files", s_texts, "sequence files '<n> <rational>'");
  reduced_cmd->add_option("--family", family_text, "dirichlet|linear|binomial|qbinomial")->capture_default_str();
  reduced_cmd->add_option("--n", n_opt, "index bound");
  reduced_cmd->add_option("--nmax", nmax_opt, "largest interval type compared by verify");
  reduced_cmd->add_option("--frontier", frontier_opt, "frontier bound used by verify");

  auto* zoo_cmd = app.add_subcommand("zoo", "poset families");
  zoo_cmd->add_subcommand("list", "list the available families")->required(false);
  zoo_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    Emitter out(cfg);

    if (*mobius_cmd) {
      auto poset = open_poset(cfg);
      ElementKey x = poset->parse_element(x_text), y = poset->parse_element(y_text);
      Integer mu = mobius_value(*poset, x, y);
      Json report = {{"poset", poset->name()}, {"x", to_string(x)}, {"y", to_string(y)}, {"mu", to_string(mu)}};
      out.emit(report, to_string(mu),
               std::vector<std::vector<std::string>>{{"x", "y", "mu"}, {to_string(x), to_string(y), to_string(mu)}});
      return kExitOk;
    }

    if (*transform_cmd || *invert_cmd) {
      auto poset = open_poset(cfg);
      const std::int64_t n = n_opt ? *n_opt : parse_ladder(cfg.ladder).back();
      if (n < 0) throw InputError("--n must be nonnegative");
      SupportedFunction in = read_function(*poset, file_a);
      const auto elements = poset->frontier(n);
      std::map<ElementKey, Rational> result;
      if (*transform_cmd) {
        result = zeta_transform_on(*poset, in, elements);
      } else {
        for (const auto& x : elements)
          if (Rational v = mobius_invert(*poset, in, x); v != 0) result.emplace(x, v);
      }
      Json report = {{"operation", *transform_cmd ? "zeta-transform" : "mobius-invert"},
                     {"poset", poset->name()},
                     {"frontier", n},
                     {"input", to_json(in)},
                     {"output", function_json(result)},
                     {"support_size", result.size()}};
      out.emit(report, std::nullopt, function_rows(result));
      return kExitOk;
    }

    if (*witnesses_cmd) {
      auto poset = open_poset(cfg);
      std::vector<ElementKey> S;
      for (const auto& t : s_texts) S.push_back(poset->parse_element(t));
      auto ladder = parse_ladder(cfg.ladder);
      auto report = witness_ladder(*poset, S, ladder);
      std::vector<std::vector<std::string>> rows{{"z", "frontier", "count"}};
      for (const auto& c : report.per_candidate)
        for (auto& r : counts_rows(ladder, c.counts, to_string(c.z))) rows.push_back(r);
      out.emit(to_json(report), std::nullopt, rows);
      return kExitOk;
    }

    if (*check_g_cmd) {
      auto poset = open_poset(cfg);
      auto ladder = parse_ladder(cfg.ladder);
      auto report = check_G_ladder(*poset, poset->parse_element(x_text), ladder);
      std::vector<std::vector<std::string>> rows{{"frontier", "count"}};
      for (auto& r : counts_rows(ladder, report.counts)) rows.push_back(r);
      out.emit(to_json(report), std::nullopt, rows);
      return kExitOk;
    }

    if (*experiment_cmd) {
      auto poset = open_poset(cfg);
      auto ladder = parse_ladder(cfg.ladder);
      auto report = uncertainty_experiment(*poset, read_function(*poset, file_a), ladder);
      std::vector<std::vector<std::string>> rows{{"frontier", "g_support"}};
      for (auto& r : counts_rows(ladder, report.counts())) rows.push_back(r);
      out.emit(to_json(report), std::nullopt, rows);
      return kExitOk;
    }

    if (*certify_cmd) {
      auto ladder = n_opt ? geometric_ladder(*n_opt) : parse_ladder(cfg.ladder);
      auto report = theorem == "theorem4" ? certify_theorem4(ladder) : certify_theorem5(ladder, cfg.seed);
      out.emit(to_json(report));
      return report.pass ? kExitOk : kExitCertificationFailed;
    }

    if (*reduced_cmd) {
      const auto fam = parse_coefficient_family(family_text, cfg.q);
      auto need_files = [&](std::size_t k) {
        if (s_texts.size() != k)
          throw InputError("reduced " + op + " needs " + std::to_string(k) + " sequence file(s)");
      };
      if (op == "mobius") {
        need_files(0);
        const std::int64_t N = n_opt.value_or(12);
        auto mu = reduced_mobius(fam, N);
        Json report = {{"family", fam.to_string()}, {"N", N}, {"mu", dense_json(mu, N)}};
        out.emit(report, compact_list(mu, N), sequence_rows(mu, N));
        return kExitOk;
      }
      if (op == "conv") {
        need_files(2);
        const std::int64_t N = n_opt.value_or(12);
        if (N < 1) throw InputError("--n must be >= 1");
        auto f = read_sequence(s_texts[0]), g = read_sequence(s_texts[1]);
        ReducedSequence h;
        for (std::int64_t n = 1; n <= N; ++n) h.set(n, reduced_convolve(fam, f, g, n));
        Json report = {{"family", fam.to_string()}, {"N", N}, {"f", to_json(f)}, {"g", to_json(g)},
                       {"f_conv_g", dense_json(h, N)}};
        out.emit(report, compact_list(h, N), sequence_rows(h, N));
        return kExitOk;
      }
      if (op == "verify") {
        need_files(0);
        auto [frontier, n_max] = verify_defaults(fam);
        if (nmax_opt) n_max = *nmax_opt;
        if (frontier_opt) frontier = *frontier_opt;
        else if (nmax_opt && (fam.kind == CoefficientFamily::Kind::Dirichlet ||
                              fam.kind == CoefficientFamily::Kind::LinearOrder))
          frontier = *nmax_opt;
        auto poset = typed_poset(fam);
        auto report = verify_structure_coefficients(fam, *poset, frontier, n_max);
        out.emit(to_json(report), report.verdict());
        return report.all_match() ? kExitOk : kExitCertificationFailed;
      }
      if (op == "prop7") {
        need_files(1);
        auto report = prop7_check(read_sequence(s_texts[0]), n_opt.value_or(500));
        out.emit(to_json(report));
        return report.pass ? kExitOk : kExitCertificationFailed;
      }
      if (op == "prop8") {
        need_files(1);
        if (fam.kind != CoefficientFamily::Kind::QBinomial)
          throw InputError("prop8 runs in the qbinomial family (pass --family qbinomial --q Q)");
        auto report = prop8_check(read_sequence(s_texts[0]), fam.q, n_opt.value_or(40));
        out.emit(to_json(report));
        return report.pass ? kExitOk : kExitCertificationFailed;
      }
      need_files(0);
      auto report = linear_order_counterexample(n_opt.value_or(16));
      out.emit(to_json(report));
      return report.violates_R ? kExitOk : kExitCertificationFailed;
    }

    if (*zoo_cmd) {
      Json report = Json::array();
      std::vector<std::vector<std::string>> rows{{"spec", "description", "frontier"}};
      std::string text;
      for (const auto& e : zoo_entries()) {
        report.push_back({{"spec", e.spec}, {"description", e.description}, {"frontier", e.frontier}});
        rows.push_back({e.spec, e.description, e.frontier});
        if (!text.empty()) text += "\n";
        text += e.spec + std::string(e.spec.size() < 18 ? 18 - e.spec.size() : 1, ' ') + e.description +
                "  [frontier(n): " + e.frontier + "]";
      }
      out.emit(report, text, rows);
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
