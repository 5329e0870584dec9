#include "frob/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "frob/acceptance.hpp"
#include "frob/json_io.hpp"

namespace frob::cli {

namespace {

using io::json;

constexpr std::array<std::string_view, 7> kSubcommands = {"trunc", "pn",       "toric",   "bott",
                                                          "cartier", "obstruct", "selftest"};

/// Raised by handlers for failures that still carry a result payload.
class Failure : public std::runtime_error {
 public:
  Failure(std::string message, json payload)
      : std::runtime_error(std::move(message)), payload_(std::move(payload)) {}
  const json& payload() const { return payload_; }

 private:
  json payload_;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse " + what + " from '" + text + "'");
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part, what));
  return out;
}

// --- human rendering -------------------------------------------------------

bool is_scalar_array(const json& j) {
  return j.is_array() &&
         std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
}

void render_human(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    std::size_t width = 0;
    for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : j.items()) {
      out << pad << key << std::string(width - key.size(), ' ') << " :";
      if (value.is_primitive() || is_scalar_array(value)) {
        out << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      } else {
        out << '\n';
        render_human(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto& item = j[i];
      if (item.is_primitive() || is_scalar_array(item)) {
        out << pad << "- " << item.dump() << '\n';
      } else {
        out << pad << "- [" << i << "]\n";
        render_human(item, out, indent + 2);
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

// --- handlers ---------------------------------------------------------------

struct Handler {
  CLI::App* app;
  std::function<json(json& params)> run;
};

Handler add_trunc(CLI::App& root) {
  auto* app = root.add_subcommand("trunc", "truncated symmetric powers T^l(V)");
  auto c = std::make_shared<std::int64_t>();
  auto p = std::make_shared<std::int64_t>();
  auto l = std::make_shared<std::optional<std::int64_t>>();
  auto n = std::make_shared<std::optional<std::int64_t>>();
  auto basis = std::make_shared<bool>(false);
  auto filtration = std::make_shared<bool>(false);
  app->add_option("--c", *c, "dimension of V")->required();
  app->add_option("--p", *p, "characteristic (prime)")->required();
  app->add_option("--l", *l, "power");
  app->add_option("--n", *n, "ambient dimension (with --filtration)");
  app->add_flag("--basis", *basis, "list the monomial basis");
  app->add_flag("--filtration", *filtration, "graded ranks of I/I^[p]");
  return {app, [=](json& params) -> json {
            params = {{"c", *c}, {"p", *p}};
            json result;
            if (*filtration) {
              if (*n) params["n"] = **n;
              result["filtration"] = io::to_json(filtration_ranks(*c, *p, *n));
            }
            if (*l) {
              params["l"] = **l;
              const TruncParams tp{*c, *p, **l};
              result["dim"] = io::to_json(trunc_dim(tp));
              if (*basis) result["basis"] = enumerate_basis(tp);
            }
            if (!*l && !*filtration) throw InvalidArgument("trunc needs --l or --filtration");
            return result;
          }};
}

Handler add_cartier(CLI::App& root) {
  auto* app = root.add_subcommand("cartier", "ranks of F_*Omega^i, Z^i, B^i on an n-fold");
  auto n = std::make_shared<std::int64_t>();
  auto p = std::make_shared<std::int64_t>();
  app->add_option("--n", *n, "dimension")->required();
  app->add_option("--p", *p, "characteristic (prime)")->required();
  return {app, [=](json& params) -> json {
            params = {{"n", *n}, {"p", *p}};
            const auto table = cartier_rank_table(*n, *p);
            json result = io::to_json(table);
            result.erase("n");
            result.erase("p");
            result["consistent"] = verify_cartier_consistency(table);
            result["frobenius_cokernel_rank"] = io::to_json(table.rows[1].b);
            return result;
          }};
}

toric::Fan read_fan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open fan file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument("fan file '" + path + "' is not valid JSON: " + e.what());
  }
  return io::fan_from_json(j);
}

Handler add_toric(CLI::App& root) {
  auto* app = root.add_subcommand("toric", "toric Frobenius pushforwards and B_X positivity");
  auto fan_path = std::make_shared<std::string>();
  auto p = std::make_shared<std::optional<std::int64_t>>();
  auto divisor = std::make_shared<std::optional<std::string>>();
  auto op = std::make_shared<std::string>();
  app->add_option("--fan", *fan_path, "fan JSON file")->required();
  app->add_option("--p", *p, "characteristic (prime)");
  app->add_option("--divisor", *divisor, "comma-separated ray coefficients");
  app->add_option("--op", *op, "operation")
      ->required()
      ->check(CLI::IsMember(
          {"validate", "positivity", "pushforward", "cokernel", "bx-dual-ample", "bx-ample"}));
  return {app, [=](json& params) -> json {
            params = {{"fan", *fan_path}, {"op", *op}};
            if (*p) params["p"] = **p;
            if (*divisor) params["divisor"] = **divisor;
            const toric::Fan raw = read_fan(*fan_path);
            if (*op == "validate") {
              json violations = json::array();
              for (const auto& v : toric::validate_fan(raw)) violations.push_back(io::to_json(v));
              return {{"valid", violations.empty()}, {"violations", violations}};
            }
            std::optional<toric::SmoothCompleteFan> fan;
            try {
              fan.emplace(raw);
            } catch (const toric::InvalidFan& e) {
              json violations = json::array();
              for (const auto& v : e.violations()) violations.push_back(io::to_json(v));
              throw Failure(e.what(), {{"valid", false}, {"violations", violations}});
            }
            toric::ToricDivisor d{toric::IntVec(fan->num_rays(), 0)};
            if (*divisor) d.coeffs = parse_int_list(**divisor, "divisor coefficient");
            auto need_p = [&]() {
              if (!*p) throw InvalidArgument("--op " + *op + " needs --p");
              return **p;
            };
            if (*op == "positivity") {
              if (!*divisor) throw InvalidArgument("--op positivity needs --divisor");
              return io::to_json(toric::divisor_positivity(*fan, d));
            }
            if (*op == "pushforward") {
              return {{"pushforward", io::to_json(toric::frobenius_pushforward(*fan, d, need_p()))}};
            }
            if (*op == "cokernel") {
              return {{"cokernel", io::to_json(toric::frobenius_cokernel(*fan, need_p()))}};
            }
            if (*op == "bx-dual-ample") return io::to_json(toric::bx_dual_ample(*fan, need_p()));
            return io::to_json(toric::bx_ample(*fan, need_p()));
          }};
}

Handler add_pn(CLI::App& root) {
  auto* app = root.add_subcommand("pn", "F_*O(d) on projective space");
  auto n = std::make_shared<std::int64_t>();
  auto p = std::make_shared<std::int64_t>();
  auto d = std::make_shared<std::optional<std::int64_t>>();
  auto scan = std::make_shared<std::optional<std::string>>();
  app->add_option("--n", *n, "dimension")->required();
  app->add_option("--p", *p, "characteristic (prime)")->required();
  app->add_option("--d", *d, "degree of the line bundle");
  app->add_option("--scan", *scan, "threshold scan range lo..hi");
  return {app, [=](json& params) -> json {
            params = {{"n", *n}, {"p", *p}};
            json result;
            if (*d) {
              params["d"] = **d;
              result["decomposition"] = io::to_json(projective::fstar_decompose_pn(*n, *p, **d));
              result["verdict"] = std::string(to_string(projective::fstar_positivity(*n, *p, **d)));
            }
            if (*scan) {
              params["scan"] = **scan;
              const auto dots = scan->value().find("..");
              if (dots == std::string::npos) throw InvalidArgument("--scan expects lo..hi");
              const auto lo = parse_int(scan->value().substr(0, dots), "scan start");
              const auto hi = parse_int(scan->value().substr(dots + 2), "scan end");
              const auto t = projective::threshold_scan(*n, *p, lo, hi);
              result["min_nef_d"] = t.min_nef_d;
              result["min_ample_d"] = t.min_ample_d;
            }
            if (!*d && !*scan) throw InvalidArgument("pn needs --d or --scan");
            return result;
          }};
}

Handler add_bott(CLI::App& root) {
  auto* app = root.add_subcommand("bott", "cohomology of Omega^k(j) on P^n and wedge T_X ranges");
  auto n = std::make_shared<std::optional<std::int64_t>>();
  auto k = std::make_shared<std::optional<std::int64_t>>();
  auto j = std::make_shared<std::optional<std::int64_t>>();
  auto i = std::make_shared<std::optional<std::int64_t>>();
  auto d = std::make_shared<std::optional<std::int64_t>>();
  auto dimx = std::make_shared<std::optional<std::int64_t>>();
  auto a = std::make_shared<std::optional<std::int64_t>>();
  auto regularity = std::make_shared<bool>(false);
  auto wedge = std::make_shared<std::optional<std::string>>();
  app->add_option("--n", *n, "dimension of P^n");
  app->add_option("--k", *k, "exterior power");
  app->add_option("--j", *j, "twist");
  app->add_option("--i", *i, "cohomological degree");
  app->add_option("--d", *d, "hypersurface degree (--wedge-range hypersurface)");
  app->add_option("--dimx", *dimx, "dimension of X (--wedge-range index)");
  app->add_option("--a", *a, "index (--wedge-range index)");
  app->add_flag("--regularity", *regularity, "check (k+1)-regularity of Omega^k");
  app->add_option("--wedge-range", *wedge, "hypersurface|index")
      ->check(CLI::IsMember({"hypersurface", "index"}));
  return {app, [=](json& params) -> json {
            auto need = [](const std::optional<std::int64_t>& v, const char* flag) {
              if (!v) throw InvalidArgument(std::string("missing ") + flag);
              return *v;
            };
            params = json::object();
            if (*wedge) {
              params["wedge_range"] = **wedge;
              bott::PositivityRange r{};
              if (**wedge == "hypersurface") {
                params["n"] = need(*n, "--n");
                params["d"] = need(*d, "--d");
                r = bott::wedge_t_range_hypersurface(**n, **d);
              } else {
                params["dimx"] = need(*dimx, "--dimx");
                params["a"] = need(*a, "--a");
                r = bott::wedge_t_range_index(**dimx, **a);
              }
              return {{"range", io::to_json(r)}};
            }
            params["n"] = need(*n, "--n");
            params["k"] = need(*k, "--k");
            if (*regularity) {
              return {{"regularity", io::to_json(bott::cm_regular(**n, **k))}};
            }
            params["j"] = need(*j, "--j");
            params["i"] = need(*i, "--i");
            return {{"dim", io::to_json(bott::bott_dim({**n, **k, **j, **i}))}};
          }};
}

Handler add_obstruct(CLI::App& root) {
  auto* app = root.add_subcommand("obstruct", "witness-driven verdicts on ampleness of B_X^dual");
  auto curve = std::make_shared<std::optional<std::int64_t>>();
  auto subspace = std::make_shared<std::optional<std::string>>();
  auto ci = std::make_shared<std::optional<std::string>>();
  auto fano3 = std::make_shared<std::optional<std::string>>();
  app->add_option("--curve-deg", *curve, "-K_X.C of a smooth rational curve");
  app->add_option("--subspace", *subspace, "r,deg for Z = P^r with -K_X^(n-r).Z = deg");
  app->add_option("--ci", *ci, "n:d1,d2,...:p complete intersection");
  app->add_option("--fano3", *fano3, "kind:p with kind in P3|Quadric|Other");
  return {app, [=](json& params) -> json {
            using namespace obstruction;
            params = json::object();
            json verdicts = json::array();
            auto emit = [&](const std::string& rule_set, json input, const Verdict& v) {
              json entry = io::to_json(v);
              entry["rule_set"] = rule_set;
              entry["input"] = std::move(input);
              verdicts.push_back(std::move(entry));
            };
            if (*curve) {
              params["curve_deg"] = **curve;
              if (!*fano3) {
                emit("curve", {{"anticanonical_degree", **curve}}, curve_obstruction({**curve}));
              }
            }
            if (*subspace) {
              params["subspace"] = **subspace;
              const auto parts = parse_int_list(**subspace, "subspace r,deg");
              if (parts.size() != 2) throw InvalidArgument("--subspace expects r,deg");
              emit("subspace", {{"r", parts[0]}, {"degree", parts[1]}},
                   subspace_obstruction({parts[0], parts[1]}));
            }
            if (*ci) {
              params["ci"] = **ci;
              const auto parts = split(**ci, ':');
              if (parts.size() != 3) throw InvalidArgument("--ci expects n:d1,d2,...:p");
              CompleteIntersectionInput input{parse_int(parts[0], "ambient n"),
                                              parse_int_list(parts[1], "degree"),
                                              parse_int(parts[2], "p")};
              const auto lines = ci_line_exists(input.n, input.degrees);
              emit("complete-intersection",
                   {{"n", input.n},
                    {"degrees", input.degrees},
                    {"p", input.p},
                    {"line_count",
                     {{"exists", lines.exists},
                      {"grassmannian_dim", lines.grassmannian_dim},
                      {"conditions", lines.conditions},
                      {"dim_x", lines.dim_x}}}},
                   ci_verdict(input));
            }
            if (*fano3) {
              params["fano3"] = **fano3;
              const auto parts = split(**fano3, ':');
              if (parts.size() != 2) throw InvalidArgument("--fano3 expects kind:p");
              const auto kind = parse_fano3_kind(parts[0]);
              const auto p = parse_int(parts[1], "p");
              std::optional<CurveWitness> witness;
              json input = {{"kind", std::string(to_string(kind))}, {"p", p}};
              if (*curve) {
                witness = CurveWitness{**curve};
                input["curve_deg"] = **curve;
              }
              emit("fano3", input, fano3_verdict(kind, p, witness));
            }
            if (verdicts.empty()) {
              throw InvalidArgument("obstruct needs --curve-deg, --subspace, --ci or --fano3");
            }
            return {{"verdicts", verdicts}};
          }};
}

Handler add_selftest(CLI::App& root) {
  auto* app = root.add_subcommand("selftest", "run every oracle check");
  return {app, [](json& params) -> json {
            params = json::object();
            json criteria = json::array();
            bool all = true;
            for (const auto& r : acceptance::run_all()) {
              all = all && r.passed;
              criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                                  {"detail", r.passed ? std::string("ok") : r.detail}});
            }
            json result = {{"criteria", criteria}, {"passed", all}};
            if (!all) throw Failure("selftest failed", result);
            return result;
          }};
}

}  // namespace

std::string usage() {
  std::string s = "usage: frob <subcommand> [options] [--human]\n\nsubcommands:\n";
  for (auto name : kSubcommands) s += "  " + std::string(name) + "\n";
  s += "\nrun `frob <subcommand> --help` for options\n";
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    err << usage();
    return args.empty() ? 2 : 0;
  }
  const std::string& name = args[0];
  if (std::find(kSubcommands.begin(), kSubcommands.end(), name) == kSubcommands.end()) {
    err << "unknown subcommand '" << name << "'\n" << usage();
    return 2;
  }

  CLI::App root("frob");
  root.require_subcommand(1);
  std::vector<Handler> handlers = {add_trunc(root),   add_cartier(root),  add_toric(root),
                                   add_pn(root),      add_bott(root),     add_obstruct(root),
                                   add_selftest(root)};
  bool human = false;
  for (auto& h : handlers) h.app->add_flag("--human", human, "aligned text instead of JSON");

  json response = {{"subcommand", name}, {"params", json::object()}, {"diagnostics", json::array()}};
  int code = 0;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    root.parse(reversed);
    auto handler = std::find_if(handlers.begin(), handlers.end(),
                                [&](const Handler& h) { return h.app->parsed(); });
    json params;
    try {
      json result = handler->run(params);
      for (auto& [key, value] : result.items()) response[key] = value;
    } catch (...) {
      if (!params.is_null()) response["params"] = params;
      throw;
    }
    response["params"] = params;
  } catch (const CLI::CallForHelp&) {
    out << root.get_subcommand(name)->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    response["diagnostics"].push_back({{"level", "error"}, {"message", e.what()}});
    code = 1;
  } catch (const Failure& e) {
    for (auto& [key, value] : e.payload().items()) response[key] = value;
    response["diagnostics"].push_back({{"level", "error"}, {"message", e.what()}});
    code = 1;
  } catch (const std::exception& e) {
    response["diagnostics"].push_back({{"level", "error"}, {"message", e.what()}});
    code = 1;
  }

  if (human) {
    render_human(response, out, 0);
  } else {
    out << response.dump() << '\n';
  }
  return code;
}

}  // namespace frob::cli
