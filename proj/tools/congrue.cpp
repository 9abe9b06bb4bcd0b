// congrue: batch CLI over the congruence-preservation pipelines.
//
// One input document per invocation, read from a positional file path or
// standard input. JSON results go to stdout; --verbose adds a summary on
// stderr. Exit codes: 0 success, 1 property-false, 2 invalid or
// unsolvable input, 3 internal tripwire.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "congrue/json_io.hpp"

namespace {

using congrue::Int;
using congrue::Json;

constexpr int kExitFalse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitTripwire = 3;

struct Options {
  std::string input = "-";
  bool verbose = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw congrue::ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw congrue::ParseError(std::string("invalid JSON input: ") + e.what());
  }
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

const Json& require_field(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw congrue::ParseError(std::string("missing field \"") + field + "\"");
  }
  return j.at(field);
}

std::pair<Int, Int> parse_window(const std::string& spec) {
  auto sep = spec.find("..", 1);  // allow a leading minus sign
  if (sep == std::string::npos) {
    throw congrue::ParseError("--window expects lo..hi");
  }
  Int lo = congrue::int_from_string(spec.substr(0, sep));
  Int hi = congrue::int_from_string(spec.substr(sep + 2));
  if (lo > hi) throw congrue::ParseError("--window bounds out of order");
  return {lo, hi};
}

// A polynomial document in any of the three bases, reduced to an
// evaluator plus whichever exact form it carries.
struct PolyDoc {
  std::optional<congrue::NewtonPoly> newton;
  std::optional<congrue::PnSeries> series;

  Int eval(const Int& x) const {
    return newton ? congrue::eval(*newton, x) : congrue::series_eval(*series, x);
  }
  bool certified() const {
    return newton ? congrue::certify_newton(*newton) : series->certified;
  }
  unsigned default_tower() const {
    if (newton) return static_cast<unsigned>(newton->degree() + 1);
    return static_cast<unsigned>(series->coeffs.size());
  }
};

PolyDoc poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.at("basis").is_string()) {
    throw congrue::ParseError("missing field \"basis\"");
  }
  const std::string basis = j.at("basis").get<std::string>();
  PolyDoc doc;
  if (basis == "binomial") {
    doc.newton = congrue::newton_from_json(j);
  } else if (basis == "monomial") {
    doc.newton = congrue::from_monomial(congrue::monomial_from_json(j));
  } else if (basis == "pn") {
    doc.series = congrue::series_from_json(j);
  } else {
    throw congrue::ParseError("field \"basis\" must be binomial, monomial or pn");
  }
  return doc;
}

int cmd_poly_check(const Options& opt, const std::string& window) {
  PolyDoc doc = poly_from_json(parse_json(read_input(opt.input)));
  bool ok;
  Json out;
  if (!window.empty()) {
    auto [lo, hi] = parse_window(window);
    ok = congrue::window_oracle([&doc](const Int& x) { return doc.eval(x); },
                                lo, hi);
    out = Json{{"window", Json::array({congrue::to_string(lo),
                                       congrue::to_string(hi)})},
               {"preserves", ok}};
  } else {
    ok = doc.certified();
    out = Json{{"certified", ok}};
  }
  emit(out);
  if (opt.verbose) {
    std::cerr << (ok ? "congruence preserving\n" : "not congruence preserving\n");
  }
  return ok ? 0 : kExitFalse;
}

int cmd_poly_decompose(const Options& opt, unsigned tower, bool tower_set) {
  PolyDoc doc = poly_from_json(parse_json(read_input(opt.input)));
  unsigned n = tower_set ? tower : doc.default_tower();
  congrue::PnSeries s =
      congrue::decompose([&doc](const Int& x) { return doc.eval(x); }, n);
  emit(congrue::to_json(s));
  if (opt.verbose) {
    std::cerr << "decomposed over A_" << n << ", " << s.coeffs.size()
              << " coefficients, certified=" << (s.certified ? "true" : "false")
              << "\n";
  }
  return 0;
}

int cmd_poly_eval(const Options& opt, const std::vector<std::string>& at) {
  PolyDoc doc = poly_from_json(parse_json(read_input(opt.input)));
  Json values = Json::array();
  for (const auto& s : at) {
    values.push_back(congrue::to_string(doc.eval(congrue::int_from_string(s))));
  }
  emit(Json{{"values", values}});
  return 0;
}

int cmd_crt_solve(const Options& opt) {
  std::istringstream in(read_input(opt.input));
  congrue::CrtSystem sys;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, kw, r;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> kw >> r) || kw != "mod") {
      throw congrue::ParseError("constraint must read \"a mod r\": " + line);
    }
    sys.constraints.emplace_back(congrue::int_from_string(a),
                                 congrue::int_from_string(r));
  }
  congrue::SolveResult res = congrue::solve(sys);
  if (!res.solvable()) {
    emit(Json{{"unsolvable", Json::array({res.conflict.first,
                                          res.conflict.second})}});
    return kExitInvalid;
  }
  emit(Json{{"residue", congrue::to_string(res.solution->residue)},
            {"modulus", congrue::to_string(res.solution->modulus)}});
  return 0;
}

int cmd_map_extend(const Options& opt) {
  congrue::PartialMap pm =
      congrue::partial_map_from_json(parse_json(read_input(opt.input)));
  congrue::PnSeries s = congrue::extend_to_polynomial(pm);
  emit(congrue::to_json(s));
  if (opt.verbose) {
    std::cerr << "extended " << pm.entries.size() << " points to a series of "
              << s.coeffs.size() << " coefficients\n";
  }
  return 0;
}

int cmd_lattice_analyze(const Options& opt) {
  auto parts = congrue::partitions_from_json(parse_json(read_input(opt.input)));
  if (parts.empty()) throw congrue::ParseError("no partitions in input");
  const int n = parts.front().n;
  congrue::SubLattice L = congrue::lattice_closure(n, parts, true);
  bool commuting = true;
  for (std::size_t i = 0; i < L.elems.size() && commuting; ++i) {
    for (std::size_t j = i + 1; j < L.elems.size(); ++j) {
      if (!congrue::commutes(L.elems[i], L.elems[j])) {
        commuting = false;
        break;
      }
    }
  }
  Json out{{"carrier", n},
           {"closure_size", L.elems.size()},
           {"distributive", congrue::is_distributive(L)},
           {"commuting", commuting},
           {"arithmetical", congrue::is_arithmetical(L)},
           {"crc", congrue::crc_holds(L)}};
  if (n <= congrue::kMaxCarrier) {
    out["dense"] = congrue::is_dense(L);
  } else {
    out["dense"] = nullptr;
  }
  emit(out);
  return 0;
}

int cmd_ultra_analyze(const Options& opt) {
  Json j = parse_json(read_input(opt.input));
  congrue::FiniteSemilattice V =
      congrue::semilattice_from_json(require_field(j, "semilattice"));
  congrue::UltraSpace S =
      congrue::space_from_json(require_field(j, "space"), V);
  congrue::AxiomReport rep = congrue::verify_axioms(S);
  Json out{{"violations", rep.violations}, {"separated", rep.separated}};
  if (rep.ok()) {
    out["convex"] = congrue::is_convex(S);
    out["hyperconvex"] = congrue::is_hyperconvex(S);
  } else {
    out["convex"] = nullptr;
    out["hyperconvex"] = nullptr;
  }
  emit(out);
  return rep.ok() ? 0 : kExitFalse;
}

int cmd_ultra_represent(const Options& opt) {
  Json j = parse_json(read_input(opt.input));
  congrue::FiniteSemilattice V =
      congrue::semilattice_from_json(require_field(j, "semilattice"));
  bool ok = congrue::representation_check(V);
  emit(Json{{"representable", ok}});
  return ok ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engines for congruence-preserving maps, equivalence "
               "lattices and semilattice ultrametrics"};
  app.require_subcommand(1);

  Options opt;
  std::string window;
  unsigned tower = 0;
  std::vector<std::string> at;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "input file (default: stdin)");
    cmd->add_flag("--verbose", opt.verbose, "summary on stderr");
  };

  CLI::App* poly = app.add_subcommand("poly", "polynomial certificates");
  poly->require_subcommand(1);
  CLI::App* poly_check =
      poly->add_subcommand("check", "congruence-preservation certificate");
  poly_check->add_option("--window", window,
                         "check by brute force on lo..hi instead");
  add_common(poly_check);
  CLI::App* poly_decompose =
      poly->add_subcommand("decompose", "P_n-basis coefficients");
  CLI::Option* tower_opt =
      poly_decompose->add_option("--tower", tower, "decomposition length N");
  add_common(poly_decompose);
  CLI::App* poly_eval = poly->add_subcommand("eval", "exact evaluation");
  poly_eval->add_option("--at", at, "evaluation points")->required();
  add_common(poly_eval);

  CLI::App* crt = app.add_subcommand("crt", "Chinese remainder solving");
  CLI::App* crt_solve =
      crt->add_subcommand("solve", "solve one \"a mod r\" constraint per line");
  add_common(crt_solve);

  CLI::App* map = app.add_subcommand("map", "partial-map extension");
  CLI::App* map_extend = map->add_subcommand(
      "extend", "extend a preserving partial map to a certified series");
  add_common(map_extend);

  CLI::App* lattice = app.add_subcommand("lattice", "equivalence lattices");
  CLI::App* lattice_analyze = lattice->add_subcommand(
      "analyze", "closure, distributivity, commutation, CRC, density");
  add_common(lattice_analyze);

  CLI::App* ultra = app.add_subcommand("ultra", "semilattice ultrametrics");
  CLI::App* ultra_analyze =
      ultra->add_subcommand("analyze", "axioms, convexity, hyperconvexity");
  add_common(ultra_analyze);
  CLI::App* ultra_represent = ultra->add_subcommand(
      "represent", "distributive-lattice representation check");
  add_common(ultra_represent);

  CLI11_PARSE(app, argc, argv);

  try {
    if (poly_check->parsed()) return cmd_poly_check(opt, window);
    if (poly_decompose->parsed()) {
      return cmd_poly_decompose(opt, tower, tower_opt->count() > 0);
    }
    if (poly_eval->parsed()) return cmd_poly_eval(opt, at);
    if (crt_solve->parsed()) return cmd_crt_solve(opt);
    if (map_extend->parsed()) return cmd_map_extend(opt);
    if (lattice_analyze->parsed()) return cmd_lattice_analyze(opt);
    if (ultra_analyze->parsed()) return cmd_ultra_analyze(opt);
    if (ultra_represent->parsed()) return cmd_ultra_represent(opt);
  } catch (const congrue::InternalUnsolvable& e) {
    emit(Json{{"error", "InternalUnsolvable"}, {"detail", e.what()}});
    return kExitTripwire;
  } catch (const congrue::CertificateViolation& e) {
    emit(Json{{"error", "CertificateViolation"}, {"detail", e.what()}});
    return kExitTripwire;
  } catch (const congrue::NotIsometric& e) {
    emit(Json{{"error", "NotIsometric"}, {"detail", e.what()}});
    return kExitTripwire;
  } catch (const congrue::ParseError& e) {
    emit(Json{{"error", "ParseError"}, {"detail", e.what()}});
    return kExitInvalid;
  } catch (const congrue::NotPreserving& e) {
    emit(Json{{"error", "NotPreserving"}, {"detail", e.what()}});
    return kExitInvalid;
  } catch (const congrue::Error& e) {
    emit(Json{{"error", "InvalidInput"}, {"detail", e.what()}});
    return kExitInvalid;
  }
  return 0;
}
