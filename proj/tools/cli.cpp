#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_writer.hpp"

namespace menhir::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsed --k: an integer >= 1, or nullopt for "inf" when allowed.
std::optional<int> parse_k(const std::string& text, bool allow_inf) {
  if (text == "inf") {
    if (!allow_inf) throw UsageError("--k inf is only supported by compose");
    return std::nullopt;
  }
  int k = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, k);
  if (ec != std::errc() || ptr != end || k < 1) {
    throw UsageError("--k expects a positive integer" + std::string(allow_inf ? " or 'inf'" : "") + ", got '" +
                     text + "'");
  }
  return k;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_vector(std::span<const double> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_number(v[i]);
  }
  return s + ")";
}

json to_json(std::span<const double> v) {
  json arr = json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

json k_json(std::optional<int> k) { return k ? json(*k) : json("inf"); }

VelocityVector read_velocity(const std::string& text, std::optional<std::size_t> dim) {
  std::vector<double> comps;
  try {
    comps = parse_components(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (dim && comps.size() != *dim) {
    throw DimensionMismatch("vector '" + text + "' has " + std::to_string(comps.size()) +
                            " components but --dim is " + std::to_string(*dim));
  }
  return VelocityVector(std::move(comps));
}

void emit(std::ostream& out, const json& doc) {
  write_json(out, doc);
  out << '\n';
}

json document(const std::string& command) {
  json doc;
  doc["schema_version"] = json_schema_version;
  doc["command"] = command;
  doc["inputs"] = json::object();
  doc["parameters"] = json::object();
  doc["result"] = json::object();
  doc["diagnostics"] = json::object({{"warnings", json::array()}});
  return doc;
}

// ---------------------------------------------------------------------------

struct Options {
  std::optional<std::size_t> dim;
  std::string k = "2";
  std::string product_k = "1";  // identities: menhir product unless asked otherwise
  std::vector<std::string> velocities;
  std::string a;
  std::string b;
  std::string algebra;
  bool builtin = false;
  std::optional<std::size_t> survey;
  std::size_t samples = 10000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool json = false;
  bool inverse = false;
};

int cmd_compose(const Options& o, std::ostream& out) {
  const auto k = parse_k(o.k, true);
  if (o.velocities.size() < 2) throw UsageError("compose needs at least two --v velocities");
  std::vector<VelocityVector> vs;
  for (const auto& text : o.velocities) vs.push_back(read_velocity(text, o.dim));
  const auto r = compose(vs, k);

  if (o.json) {
    auto doc = document("compose");
    json inputs = json::array();
    for (const auto& v : r.inputs) inputs.push_back(to_json(v.components()));
    doc["inputs"]["velocities"] = inputs;
    doc["parameters"]["dim"] = r.dim;
    doc["parameters"]["k"] = k_json(r.k);
    doc["result"]["velocity"] = to_json(r.result.components());
    doc["result"]["speed"] = r.speed;
    doc["result"]["rapidity"] = r.rapidity;
    doc["result"]["fold_order"] = r.fold_order;
    if (!r.k) {
      doc["diagnostics"]["warnings"].push_back(
          "k=inf uses the rapidity-sum limit product, a derived extrapolation of the k-deformations");
    }
    emit(out, doc);
    return exit_ok;
  }

  out << "command   compose\n";
  out << "dim       " << r.dim << "\n";
  out << "k         " << (r.k ? std::to_string(*r.k) : std::string("inf")) << "\n";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    out << "v" << i + 1 << std::string(i + 1 < 10 ? 8 : 7, ' ') << format_vector(r.inputs[i].components()) << "\n";
  }
  out << "fold      " << r.fold_order << "\n";
  out << "result    " << format_vector(r.result.components()) << "\n";
  out << "speed     " << format_number(r.speed) << "\n";
  out << "rapidity  " << format_number(r.rapidity) << "\n";
  if (!r.k) out << "warning   k=inf uses the rapidity-sum limit product (derived extrapolation)\n";
  return exit_ok;
}

int cmd_menhir(const Options& o, std::ostream& out) {
  if (o.a.empty() || o.b.empty()) throw UsageError("menhir needs --a and --b");
  const auto a = read_velocity(o.a, o.dim);
  const auto b = read_velocity(o.b, o.dim);
  if (a.size() != b.size()) throw DimensionMismatch("--a and --b have different dimensions");
  const auto n = a.size();
  const auto r = project(boxplus(embed(a), embed(b)), n);

  if (o.json) {
    auto doc = document("menhir");
    doc["inputs"]["a"] = to_json(a.components());
    doc["inputs"]["b"] = to_json(b.components());
    doc["parameters"]["dim"] = n;
    doc["result"]["point"] = to_json(r.components());
    doc["result"]["norm"] = r.speed();
    emit(out, doc);
    return exit_ok;
  }
  out << "command   menhir\n";
  out << "dim       " << n << "\n";
  out << "a         " << format_vector(a.components()) << "\n";
  out << "b         " << format_vector(b.components()) << "\n";
  out << "a [+] b   " << format_vector(r.components()) << "\n";
  out << "norm      " << format_number(r.speed()) << "\n";
  return exit_ok;
}

int cmd_scale(const Options& o, std::ostream& out) {
  const int k = *parse_k(o.k, false);
  if (o.velocities.size() != 1) throw UsageError("scale needs exactly one --v");
  const auto v = read_velocity(o.velocities.front(), o.dim);
  const auto n = v.size();
  const auto p = embed(v);
  const auto r = project(o.inverse ? box_unscale(k, p) : box_scale(k, p), n);

  if (o.json) {
    auto doc = document("scale");
    doc["inputs"]["v"] = to_json(v.components());
    doc["parameters"]["dim"] = n;
    doc["parameters"]["k"] = k;
    doc["parameters"]["inverse"] = o.inverse;
    doc["result"]["point"] = to_json(r.components());
    doc["result"]["norm"] = r.speed();
    emit(out, doc);
    return exit_ok;
  }
  out << "command   scale\n";
  out << "dim       " << n << "\n";
  out << "map       " << (o.inverse ? "(1/" + std::to_string(k) + ")" : std::to_string(k)) << " [.] v\n";
  out << "v         " << format_vector(v.components()) << "\n";
  out << "result    " << format_vector(r.components()) << "\n";
  out << "norm      " << format_number(r.speed()) << "\n";
  return exit_ok;
}

json report_json(const IdentityCandidate& c, const TestReport& r) {
  json e;
  e["identity"] = render_text(c);
  e["name"] = c.name.empty() ? json(nullptr) : json(c.name);
  e["holds"] = r.holds;
  e["verdict"] = std::string(verdict_name(r.verdict));
  e["max_residual"] = r.max_residual;
  e["samples"] = r.samples;
  e["seed"] = r.seed;
  if (r.witness) {
    json w = json::array();
    for (const auto& p : *r.witness) w.push_back(to_json(p.value().coeffs()));
    e["witness"] = w;
    e["witness_residual"] = r.witness_residual;
  } else {
    e["witness"] = nullptr;
    e["witness_residual"] = nullptr;
  }
  return e;
}

void print_header(std::ostream& out, const char* last) {
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %-24s %-13s %-12s %s\n", "identity", "name", "verdict", "max_residual", last);
  out << line;
}

void print_row(std::ostream& out, const std::string& identity, const std::string& name, const TestReport& r,
               const std::string& extra = {}) {
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %-24s %-13s %-12.3e %s\n", identity.c_str(), name.c_str(),
                std::string(verdict_name(r.verdict)).c_str(), r.max_residual, extra.c_str());
  out << line;
}

int cmd_identities(const Options& o, std::ostream& out) {
  const auto alg = algebra_from_code(o.algebra);
  if (!alg) throw UsageError("--algebra must be one of r, c, h, o");
  if (o.survey && *o.survey != 3 && *o.survey != 4) throw UsageError("--survey takes 3 or 4");
  if (o.samples < 1) throw UsageError("--samples must be at least 1");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  const int k = *parse_k(o.product_k, false);
  const bool run_builtin = o.builtin || !o.survey;

  TestOptions t;
  t.algebra = *alg;
  t.product = k == 1 ? LoopProduct::menhir() : k == 2 ? LoopProduct::relativistic() : LoopProduct::deformed(k);
  t.samples = o.samples;
  t.tol = o.tol;
  t.seed = o.seed;

  std::vector<std::pair<IdentityCandidate, TestReport>> builtin;
  if (run_builtin) {
    for (auto& c : builtin_candidates()) {
      auto r = test_identity(c, t);
      builtin.emplace_back(std::move(c), std::move(r));
    }
  }
  std::optional<SurveyResult> survey;
  if (o.survey) survey = survey_identities(*o.survey, t);

  if (o.json) {
    auto doc = document("identities");
    doc["parameters"]["algebra"] = std::string(1, algebra_code(*alg));
    doc["parameters"]["product"] = t.product.label();
    doc["parameters"]["k"] = k;
    doc["parameters"]["samples"] = t.samples;
    doc["parameters"]["tol"] = t.tol;
    doc["parameters"]["fail_threshold"] = t.fail_threshold;
    doc["parameters"]["seed"] = t.seed;
    doc["parameters"]["max_radius"] = t.max_radius;
    if (run_builtin) {
      json arr = json::array();
      for (const auto& [c, r] : builtin) arr.push_back(report_json(c, r));
      doc["result"]["builtin"] = arr;
    }
    if (survey) {
      json s;
      s["leaves"] = survey->leaves;
      s["tested"] = survey->tested;
      json holders = json::array();
      for (const auto& h : survey->holders) {
        auto e = report_json(h.candidate, h.report);
        e["derivation"] = std::string(derivation_name(h.derivation));
        holders.push_back(e);
      }
      s["holders"] = holders;
      doc["result"]["survey"] = s;
      for (const auto& h : survey->holders) {
        if (h.derivation == Derivation::none) {
          doc["diagnostics"]["warnings"].push_back("holder not derivable from (ii) and (iii): " +
                                                   render_text(h.candidate));
        }
      }
    }
    emit(out, doc);
    return exit_ok;
  }

  out << "algebra " << algebra_name(*alg) << ", product " << t.product.label() << ", " << t.samples
      << " samples, tol " << t.tol << ", seed " << t.seed << "\n";
  if (run_builtin) {
    out << "\n";
    print_header(out, "");
    for (const auto& [c, r] : builtin) print_row(out, render_text(c), c.name, r);
  }
  if (survey) {
    out << "\nsurvey of " << survey->leaves << "-letter bracketings: " << survey->holders.size() << " of "
        << survey->tested << " candidates hold\n";
    print_header(out, "derivation");
    for (const auto& h : survey->holders) {
      print_row(out, render_text(h.candidate), h.candidate.name.empty() ? "-" : h.candidate.name, h.report,
                std::string(derivation_name(h.derivation)));
    }
  }
  return exit_ok;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--dim", o.dim, "Vector dimension")->check(CLI::IsMember({1, 2, 3, 4, 7, 8}));
  sub->add_flag("--json", o.json, "Emit JSON instead of a table");
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<double> parse_components(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double x = 0.0;
    const auto* first = piece.data();
    const auto* last = piece.data() + piece.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, x);
    if (piece.empty() || ec != std::errc() || ptr != last) {
      throw std::invalid_argument("cannot parse vector component '" + piece + "' in '" + text + "'");
    }
    out.push_back(x);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

CompositionResult compose(const std::vector<VelocityVector>& velocities, std::optional<int> k) {
  if (velocities.size() < 2) throw std::invalid_argument("compose needs at least two velocities");
  const auto n = velocities.front().size();
  for (const auto& v : velocities) {
    if (v.size() != n) throw DimensionMismatch("all velocities must have the same dimension");
  }

  auto acc = embed(velocities.front());
  std::string order = "v1";
  for (std::size_t i = 1; i < velocities.size(); ++i) {
    const auto next = embed(velocities[i]);
    acc = k ? k_add(*k, acc, next) : limit_add(acc, next);
    order = "(" + order + " (+) v" + std::to_string(i + 1) + ")";
  }

  auto result = project(acc, n);
  const double speed = result.speed();
  return CompositionResult{velocities, k, n, result, speed, std::atanh(speed), order};
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Menhir loop and relativistic velocity composition on R, C, H and O", "menhir"};
  app.require_subcommand(1);
  Options o;

  auto* compose_cmd = app.add_subcommand("compose", "Compose velocities left to right with the k-deformed product");
  add_common(compose_cmd, o);
  compose_cmd->add_option("--k", o.k, "Deformation index: positive integer or 'inf'")->capture_default_str();
  compose_cmd->add_option("--v", o.velocities, "Velocity x[,y,...] in units of c (repeatable)")->required();

  auto* menhir_cmd = app.add_subcommand("menhir", "Menhir product a [+] b");
  add_common(menhir_cmd, o);
  menhir_cmd->add_option("--a", o.a, "Left operand x[,y,...]")->required();
  menhir_cmd->add_option("--b", o.b, "Right operand x[,y,...]")->required();

  auto* scale_cmd = app.add_subcommand("scale", "Box scaling k [.] v, or its inverse");
  add_common(scale_cmd, o);
  scale_cmd->add_option("--k", o.k, "Positive integer scale")->capture_default_str();
  scale_cmd->add_option("--v", o.velocities, "Point x[,y,...]")->required();
  scale_cmd->add_flag("--inverse", o.inverse, "Apply (1/k) [.] v instead");

  auto* id_cmd = app.add_subcommand("identities", "Test bracketing identities by random sampling");
  id_cmd->add_flag("--json", o.json, "Emit JSON instead of a table");
  id_cmd->add_option("--algebra", o.algebra, "Algebra: r, c, h or o")->required();
  id_cmd->add_flag("--builtin", o.builtin, "Test the seven named identities (default when --survey is absent)");
  id_cmd->add_option("--survey", o.survey, "Survey all bracketing identities with 3 or 4 letters");
  id_cmd->add_option("--samples", o.samples, "Random samples per identity")->capture_default_str();
  id_cmd->add_option("--tol", o.tol, "Residual below which an identity holds")->capture_default_str();
  id_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  id_cmd->add_option("--k", o.product_k, "Loop product: 1 menhir, 2 relativistic, k >= 3 deformed")
      ->capture_default_str();

  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*compose_cmd) return cmd_compose(o, out);
    if (*menhir_cmd) return cmd_menhir(o, out);
    if (*scale_cmd) return cmd_scale(o, out);
    return cmd_identities(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace menhir::cli
