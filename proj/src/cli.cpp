#include "eisenbox/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>

#include "eisenbox/error.hpp"
#include "eisenbox/frontend.hpp"
#include "eisenbox/json_io.hpp"

namespace eisenbox {

namespace {

constexpr long kSizeGuard = 2000;
constexpr std::size_t kVarGuard = 6;

struct Options {
  std::string format = "json";
  bool allow_large = false;

  std::string poly, seed, ode, init, omega, beta, lambda, direction, f, g, a, p;
  std::string bound = "50";
  std::string cap = "20";  // --order / --cap
  long start = 0;
  long count = 20;
  long depth = 4;
  long q = 1;
  bool envelopes = false;
};

[[noreturn]] void bad(const std::string& code, const std::string& msg) { throw InputError(code, msg); }

void need(const std::string& value, const char* flag) {
  if (value.empty()) bad("missing_flag", std::string(flag) + " is required");
}

long guarded(long value, const char* flag, const Options& o) {
  if (value < 0) bad("bad_value", std::string(flag) + " must be nonnegative");
  if (value > kSizeGuard && !o.allow_large)
    bad("too_large", std::string(flag) + " " + std::to_string(value) + " exceeds " +
                         std::to_string(kSizeGuard) + "; pass --allow-large to override");
  return value;
}

Rational cap_rational(const Options& o) {
  Rational c;
  try {
    c = parse_rational(o.cap);
  } catch (const InputError&) {
    bad("bad_value", "--order/--cap expects a number, got \"" + o.cap + "\"");
  }
  if (c < 0) bad("bad_value", "--order/--cap must be nonnegative");
  if (c > kSizeGuard && !o.allow_large)
    bad("too_large", "--order/--cap " + o.cap + " exceeds " + std::to_string(kSizeGuard) +
                         "; pass --allow-large to override");
  return c;
}

int cap_int(const Options& o) {
  Rational c = cap_rational(o);
  if (!is_integral(c)) bad("bad_value", "--order/--cap must be an integer here");
  if (!c.get_num().fits_sint_p()) bad("too_large", "--order/--cap is out of range");
  return static_cast<int>(c.get_num().get_si());
}

std::uint64_t factor_cap() {
  const char* env = std::getenv("EISENBOX_FACTOR_CAP");
  if (!env || !*env) return kDefaultFactorCap;
  std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) || s.size() > 19)
    bad("bad_env", "EISENBOX_FACTOR_CAP must be a decimal integer, got \"" + s + "\"");
  return std::stoull(s);
}

std::vector<std::string> x_names(const std::vector<std::string>& names) {
  std::vector<std::string> r;
  for (const auto& n : names)
    if (n != "y") r.push_back(n);
  return r;
}

struct Equation {
  PolyInY p;
  std::vector<std::string> xs;
};

Equation read_equation(const Options& o) {
  need(o.poly, "--poly");
  ParsedPoly parsed = parse_poly_in_y(o.poly);
  Equation eq{PolyInY::from_mpoly(parsed.poly), x_names(parsed.names)};
  if (eq.xs.size() > kVarGuard && !o.allow_large)
    bad("too_large", std::to_string(eq.xs.size()) + " variables exceed " + std::to_string(kVarGuard) +
                         "; pass --allow-large to override");
  return eq;
}

MPoly read_seed(const Options& o, const Equation& eq) {
  need(o.seed, "--seed");
  return parse_poly(o.seed, eq.xs).poly;
}

Rational constant_seed(const Options& o, const Equation& eq) {
  MPoly s = read_seed(o, eq);
  for (const auto& [e, c] : s.terms())
    if (total_degree(e) > 0) bad("bad_seed", "the seed must be a constant in several variables");
  return s.coeff(Exponent(eq.xs.size(), 0));
}

PuiseuxSeries series_seed(const Options& o, const Equation& eq) {
  if (eq.xs.size() != 1) bad("not_univariate", "this command needs a single x variable");
  return to_series(read_seed(o, eq));
}

WeightVector read_omega(const Options& o, std::size_t n) {
  need(o.omega, "--omega");
  WeightVector w = make_weights(parse_rational_list(o.omega));
  if (w.size() != n)
    bad("bad_weights", "--omega has " + std::to_string(w.size()) + " entries for " + std::to_string(n) +
                           " variables");
  return w;
}

// f_0 .. f_{n-1} from --poly/--seed or --ode/--init.
std::vector<Rational> read_sequence(const Options& o, std::size_t n) {
  bool from_poly = !o.poly.empty(), from_ode = !o.ode.empty();
  if (from_poly && from_ode) bad("conflicting_flags", "give either --poly or --ode, not both");
  if (!from_poly && !from_ode) bad("missing_flag", "--poly with --seed, or --ode with --init, is required");
  if (from_poly) {
    if (!o.init.empty()) bad("conflicting_flags", "--init goes with --ode");
    Equation eq = read_equation(o);
    AlgebraicSeries f(eq.p, series_seed(o, eq));
    if (n == 0) return {};
    return f.coefficients(static_cast<int>(n) - 1);
  }
  need(o.init, "--init");
  PRecurrence rec = ode_to_recurrence(parse_ode(o.ode));
  rec = make_recurrence(rec.coeffs, parse_rational_list(o.init), o.start);
  return expand(rec, n);
}

std::vector<std::string> weierstrass_names(const std::vector<std::string>& texts) {
  std::set<std::string> names;
  for (const auto& t : texts)
    for (const auto& n : collect_variables(*parse_expr(t))) names.insert(n);
  if (names.empty()) names.insert("x");
  for (const auto& n : names)
    if (n[0] != 'x') bad("unknown_variable", "weierstrass expects x variables only, got " + n);
  std::vector<std::string> r(names.begin(), names.end());
  auto index = [](const std::string& n) { return n.size() == 1 ? 0 : std::stol(n.substr(1)); };
  std::sort(r.begin(), r.end(), [&](const auto& a, const auto& b) { return index(a) < index(b); });
  return r;
}

// ---- table rendering ------------------------------------------------------

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool scalar_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return is_scalar(x); });
}

void print_grid(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void render(const Json& j, const std::string& prefix, std::ostream& out);

void render_objects(const std::string& title, const Json& items, std::ostream& out) {
  std::vector<std::string> cols;
  for (const auto& it : items)
    for (const auto& [k, v] : it.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  out << title << ":\n";
  std::vector<std::vector<std::string>> rows{cols};
  for (const auto& it : items) {
    std::vector<std::string> r;
    for (const auto& c : cols) r.push_back(it.contains(c) ? cell(it.at(c)) : "");
    rows.push_back(r);
  }
  print_grid(rows, out);
}

// Objects print as key/value lines. Scalar arrays of a common length become
// one table indexed by l; arrays of objects become tables of their fields.
void render(const Json& j, const std::string& prefix, std::ostream& out) {
  std::vector<std::vector<std::string>> kv;
  std::map<std::size_t, std::vector<std::string>> columns;
  for (const auto& [k, v] : j.items())
    if (scalar_array(v) && v.size() > 1) columns[v.size()].push_back(k);
  for (const auto& [k, v] : j.items()) {
    if (k == "schema") continue;
    if (is_scalar(v)) kv.push_back({prefix + k, cell(v)});
    else if (scalar_array(v) && columns[v.size()].size() < 2) kv.push_back({prefix + k, cell(v)});
  }
  print_grid(kv, out);
  for (const auto& [len, keys] : columns) {
    if (keys.size() < 2) continue;
    std::vector<std::vector<std::string>> rows{{"l"}};
    for (const auto& k : keys) rows[0].push_back(prefix + k);
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::string> r{std::to_string(i)};
      for (const auto& k : keys) r.push_back(cell(j.at(k)[i]));
      rows.push_back(r);
    }
    print_grid(rows, out);
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      render(v, prefix + k + ".", out);
    } else if (v.is_array() && !scalar_array(v)) {
      if (std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); }))
        render_objects(prefix + k, v, out);
      else
        print_grid({{prefix + k, v.dump()}}, out);
    }
  }
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.format == "table")
    render(j, "", out);
  else
    out << j.dump(2) << "\n";
}

Json error_json(const std::string& code, const std::string& message, int exit) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "error";
  j["code"] = code;
  j["message"] = message;
  j["exit"] = exit;
  return j;
}

Json sequence_json(const std::vector<Rational>& coeffs) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "sequence";
  Json a = Json::array();
  for (const auto& c : coeffs) a.push_back(to_string(c));
  j["coefficients"] = a;
  return j;
}

Json strip(Json j) {
  j.erase("schema");
  return j;
}

// ---- commands -------------------------------------------------------------

Json cmd_parse(const Options& o) {
  need(o.poly, "--poly");
  ParsedPoly parsed = parse_poly(o.poly);
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "parsed";
  j["names"] = parsed.names;
  j["canonical"] = to_string(parsed.poly, parsed.names);
  j["polynomial"] = strip(to_json(parsed.poly));
  return j;
}

Json cmd_expand(const Options& o) {
  Equation eq = read_equation(o);
  int order = cap_int(o);
  if (eq.xs.size() > 1) return to_json(multivariate_root(eq.p, constant_seed(o, eq), order));
  return to_json(hensel_lift(eq.p, series_seed(o, eq), Rational(order)));
}

Json cmd_puiseux(const Options& o) {
  Equation eq = read_equation(o);
  return to_json(puiseux_expand(eq.p, cap_int(o)));
}

Json cmd_certify(const Options& o) {
  Equation eq = read_equation(o);
  int order = cap_int(o);
  if (eq.xs.size() > 1) return to_json(certify_multi(eq.p, constant_seed(o, eq), order));
  return to_json(certify(eq.p, series_seed(o, eq), order));
}

Integer read_integer(const std::string& text, const char* flag) {
  Rational v;
  try {
    v = parse_rational(text);
  } catch (const InputError&) {
    bad("bad_value", std::string(flag) + " expects an integer, got \"" + text + "\"");
  }
  if (!is_integral(v) || v <= 0) bad("bad_value", std::string(flag) + " expects a positive integer");
  return v.get_num();
}

Json cmd_verify(const Options& o) {
  need(o.a, "--a");
  Integer a = read_integer(o.a, "--a");
  int order = cap_int(o);
  if (!o.poly.empty() && o.ode.empty()) {
    Equation eq = read_equation(o);
    if (eq.xs.size() > 1) return to_json(verify_multi(multivariate_root(eq.p, constant_seed(o, eq), order), a));
  }
  return to_json(verify(read_sequence(o, static_cast<std::size_t>(order) + 1), a));
}

Json cmd_search(const Options& o) {
  Integer bound = read_integer(o.bound, "--bound");
  int order = cap_int(o);
  DenominatorProfile profile =
      denominator_profile(read_sequence(o, static_cast<std::size_t>(order) + 1), factor_cap());
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "search_report";
  j["bound"] = to_string(bound);
  j["search"] = strip(to_json(search(profile, bound)));
  j["weak"] = strip(to_json(weakly_eisenstein_check(profile)));
  return j;
}

GradedSeries graded_series(const Options& o) {
  Equation eq = read_equation(o);
  WeightVector w = read_omega(o, eq.xs.size());
  MPoly seed = read_seed(o, eq);
  Rational cap = cap_rational(o);
  if (o.q < 1) bad("bad_value", "--q must be positive");
  if (o.q == 1) return graded_root_lift(eq.p, w, seed, cap);
  return graded_puiseux(eq.p, w, static_cast<int>(guarded(o.q, "--q", o)), seed, cap);
}

Json cmd_cone(const Options& o) {
  GradedSeries g = graded_series(o);
  std::size_t n = g.a.nvars();
  std::vector<std::size_t> dir;
  if (o.direction.empty()) {
    for (std::size_t i = 0; i < n; ++i) dir.push_back(i);
  } else {
    for (const auto& v : parse_rational_list(o.direction)) {
      if (!is_integral(v) || v < 1 || v > static_cast<long>(n))
        bad("bad_direction", "--direction lists variable indices 1.." + std::to_string(n));
      dir.push_back(static_cast<std::size_t>(v.get_num().get_si() - 1));
    }
  }
  return to_json(support_cone(g, dir, static_cast<int>(guarded(o.depth, "--depth", o))));
}

Json cmd_psi(const Options& o) {
  need(o.lambda, "--lambda");
  need(o.omega, "--omega");
  need(o.beta, "--beta");
  std::vector<Rational> omega = parse_rational_list(o.omega), beta = parse_rational_list(o.beta);
  if (omega.size() != beta.size()) bad("bad_value", "--omega and --beta differ in length");
  return to_json(psi_lambda(parse_rational(o.lambda), omega, beta));
}

Json cmd_ode2rec(const Options& o) {
  need(o.ode, "--ode");
  PRecurrence rec = ode_to_recurrence(parse_ode(o.ode));
  if (!o.init.empty()) rec = make_recurrence(rec.coeffs, parse_rational_list(o.init), o.start);
  else if (o.start > rec.start) rec.start = o.start;
  return to_json(rec);
}

Json cmd_alg2ode(const Options& o) {
  Equation eq = read_equation(o);
  return to_json(algebraic_to_ode(eq.p, series_seed(o, eq)));
}

Json cmd_primes(const Options& o) {
  auto count = static_cast<std::size_t>(guarded(o.count, "--count", o));
  return to_json(prime_count_profile(read_sequence(o, count), factor_cap(), o.envelopes));
}

Json cmd_padic(const Options& o) {
  need(o.p, "--p");
  Integer p = read_integer(o.p, "--p");
  if (!is_prime(p)) bad("bad_value", "--p must be prime");
  auto count = static_cast<std::size_t>(guarded(o.count, "--count", o));
  return to_json(padic_profile(read_sequence(o, count), p));
}

Json cmd_weierstrass(const Options& o, bool with_g) {
  need(o.f, "--f");
  if (with_g) need(o.g, "--g");
  std::vector<std::string> texts{o.f};
  if (with_g) texts.push_back(o.g);
  std::vector<std::string> names = weierstrass_names(texts);
  if (names.size() > kVarGuard && !o.allow_large)
    bad("too_large", std::to_string(names.size()) + " variables exceed " + std::to_string(kVarGuard) +
                         "; pass --allow-large to override");
  int cap = cap_int(o);
  TSeries f(parse_poly(o.f, names).poly, cap);
  if (!with_g) return to_json(prepare(f, cap));
  TSeries g(parse_poly(o.g, names).poly, cap);
  return to_json(divide(g, f, cap));
}

// ---- option wiring --------------------------------------------------------

enum Flag : unsigned {
  kPoly = 1u << 0,
  kSeed = 1u << 1,
  kOrder = 1u << 2,
  kOde = 1u << 3,
  kInit = 1u << 4,
  kStart = 1u << 5,
  kCount = 1u << 6,
  kOmega = 1u << 7,
  kQ = 1u << 8,
  kDirection = 1u << 9,
  kDepth = 1u << 10,
  kBeta = 1u << 11,
  kLambda = 1u << 12,
  kA = 1u << 13,
  kBound = 1u << 14,
  kP = 1u << 15,
  kF = 1u << 16,
  kG = 1u << 17,
  kEnvelopes = 1u << 18,
  kSource = kPoly | kSeed | kOde | kInit | kStart,
};

void wire(CLI::App* app, unsigned flags, Options& o) {
  if (flags & kPoly) app->add_option("--poly", o.poly, "P(x, y), e.g. \"y^2-(1+x)\"");
  if (flags & kSeed) app->add_option("--seed", o.seed, "seed of the root, a polynomial in x");
  if (flags & kOrder) app->add_option("--order,--cap", o.cap, "truncation order (default 20)");
  if (flags & kOde) app->add_option("--ode", o.ode, "linear ODE, e.g. \"f' - f = 0\"");
  if (flags & kInit) app->add_option("--init", o.init, "initial values f_0, f_1, ...");
  if (flags & kStart) app->add_option("--start", o.start, "first index where the recurrence applies");
  if (flags & kCount) app->add_option("--count", o.count, "number of coefficients (default 20)");
  if (flags & kOmega) app->add_option("--omega", o.omega, "weights, e.g. \"1,1/2\"");
  if (flags & kQ) app->add_option("--q", o.q, "ramification: lift in x_i^(1/q)");
  if (flags & kDirection) app->add_option("--direction", o.direction, "variable ranks, e.g. \"2,1\"");
  if (flags & kDepth) app->add_option("--depth", o.depth, "Laurent expansion depth (default 4)");
  if (flags & kBeta) app->add_option("--beta", o.beta, "exponent vector beta");
  if (flags & kLambda) app->add_option("--lambda", o.lambda, "lambda");
  if (flags & kA) app->add_option("--a", o.a, "candidate Eisenstein base");
  if (flags & kBound) app->add_option("--bound", o.bound, "largest base tried (default 50)");
  if (flags & kP) app->add_option("--p", o.p, "prime");
  if (flags & kF) app->add_option("--f", o.f, "series f in x1..xn");
  if (flags & kG) app->add_option("--g", o.g, "dividend g");
  if (flags & kEnvelopes) app->add_flag("--envelopes", o.envelopes, "add p-adic envelope slopes");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Eisenstein denominators, Puiseux and graded expansions, D-finite profiles"};
  app.name("eisenbox");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--allow-large", o.allow_large, "lift the size guards on caps and variables");

  auto* parse = app.add_subcommand("parse", "echo the canonical form of a polynomial");
  wire(parse, kPoly, o);
  auto* expand_cmd = app.add_subcommand("expand", "power-series root from a seed");
  wire(expand_cmd, kPoly | kSeed | kOrder, o);
  auto* puiseux = app.add_subcommand("puiseux", "rational Puiseux branches");
  wire(puiseux, kPoly | kOrder, o);

  auto* eis = app.add_subcommand("eisenstein", "Eisenstein certificates (certify by default)");
  eis->require_subcommand(0, 1);
  wire(eis, kPoly | kSeed | kOrder, o);
  auto* certify_cmd = eis->add_subcommand("certify", "certificate for a root");
  wire(certify_cmd, kPoly | kSeed | kOrder, o);
  auto* verify_cmd = eis->add_subcommand("verify", "check a^(l+1) f_l in Z");
  wire(verify_cmd, kSource | kOrder | kA, o);
  auto* search_cmd = eis->add_subcommand("search", "search for a base and report the support");
  wire(search_cmd, kSource | kOrder | kBound, o);

  auto* graded = app.add_subcommand("graded", "graded expansions in several variables");
  graded->require_subcommand(1);
  auto* lift = graded->add_subcommand("lift", "graded root lift");
  wire(lift, kPoly | kSeed | kOrder | kOmega | kQ, o);
  auto* cone = graded->add_subcommand("cone", "support cone of a graded lift");
  wire(cone, kPoly | kSeed | kOrder | kOmega | kQ | kDirection | kDepth, o);
  auto* psi = graded->add_subcommand("psi", "monomial map psi_lambda");
  wire(psi, kLambda | kOmega | kBeta, o);

  auto* dfinite = app.add_subcommand("dfinite", "D-finite sequences");
  dfinite->require_subcommand(1);
  auto* dexpand = dfinite->add_subcommand("expand", "coefficients f_0 .. f_(count-1)");
  wire(dexpand, kSource | kCount, o);
  auto* ode2rec = dfinite->add_subcommand("ode2rec", "recurrence of a linear ODE");
  wire(ode2rec, kOde | kInit | kStart, o);
  auto* alg2ode = dfinite->add_subcommand("alg2ode", "linear ODE of an algebraic root");
  wire(alg2ode, kPoly | kSeed, o);
  auto* primes = dfinite->add_subcommand("primes", "prime counts of denominators");
  wire(primes, kSource | kCount | kEnvelopes, o);
  auto* padic = dfinite->add_subcommand("padic", "p-adic valuation profile");
  wire(padic, kSource | kCount | kP, o);

  auto* weier = app.add_subcommand("weierstrass", "Weierstrass preparation and division");
  weier->require_subcommand(1);
  auto* prep = weier->add_subcommand("prepare", "f = P u");
  wire(prep, kF | kOrder, o);
  auto* div = weier->add_subcommand("divide", "g = f q + r");
  wire(div, kF | kG | kOrder, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << error_json("usage", e.what(), 2).dump() << "\n";
    return 2;
  }

  try {
    Json result;
    if (parse->parsed()) result = cmd_parse(o);
    else if (expand_cmd->parsed()) result = cmd_expand(o);
    else if (puiseux->parsed()) {
      result = cmd_puiseux(o);
      if (!result.at("extensions").empty()) {
        // The rational part is still useful, so it is printed before failing.
        emit(result, o, out);
        err << error_json("extension_required",
                          "some branches need constants outside Q; see \"extensions\"", 3)
                   .dump()
            << "\n";
        return 3;
      }
    }
    else if (verify_cmd->parsed()) result = cmd_verify(o);
    else if (search_cmd->parsed()) result = cmd_search(o);
    else if (eis->parsed()) result = cmd_certify(o);
    else if (lift->parsed()) result = to_json(graded_series(o));
    else if (cone->parsed()) result = cmd_cone(o);
    else if (psi->parsed()) result = cmd_psi(o);
    else if (dexpand->parsed()) result = sequence_json(read_sequence(o, guarded(o.count, "--count", o)));
    else if (ode2rec->parsed()) result = cmd_ode2rec(o);
    else if (alg2ode->parsed()) result = cmd_alg2ode(o);
    else if (primes->parsed()) result = cmd_primes(o);
    else if (padic->parsed()) result = cmd_padic(o);
    else if (prep->parsed()) result = cmd_weierstrass(o, false);
    else if (div->parsed()) result = cmd_weierstrass(o, true);
    emit(result, o, out);
    return 0;
  } catch (const InputError& e) {
    err << error_json(e.code(), e.what(), 2).dump() << "\n";
    return 2;
  } catch (const UnfactoredResidue& e) {
    Json j = error_json(e.code(), e.what(), 3);
    j["residue"] = e.residue();
    err << j.dump() << "\n";
    return 3;
  } catch (const MathError& e) {
    err << error_json(e.code(), e.what(), 3).dump() << "\n";
    return 3;
  }
}

}  // namespace eisenbox
