#include "eisenbox/json_io.hpp"

#include <limits>

#include "eisenbox/error.hpp"

namespace eisenbox {

namespace {

Json document(const char* kind) {
  Json j = Json::object();
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

Json nested(Json j) {
  j.erase("schema");
  return j;
}

Json rat(const Rational& q) { return to_string(q); }

Json integer(const Integer& n) {
  if (n.fits_slong_p() && sizeof(long) >= 8) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Json opt_rat(const std::optional<Rational>& q) { return q ? rat(*q) : Json(nullptr); }

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rat(q));
  return a;
}

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& n : v) a.push_back(integer(n));
  return a;
}

Json upoly(const UPoly& p) { return rationals(p.coeffs()); }

Json terms(const MPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({{"e", e}, {"c", rat(c)}});
  return a;
}

// Read access with a JSON path for diagnostics.
class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("schema_error", path_ + ": " + msg);
  }

  Reader at(const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) fail(std::string("missing key \"") + key + "\"");
    return Reader(*it, path_ + "." + key);
  }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key) && !j_.at(key).is_null(); }

  std::vector<Reader> items() const {
    if (!j_.is_array()) fail("expected an array");
    std::vector<Reader> r;
    for (std::size_t i = 0; i < j_.size(); ++i)
      r.emplace_back(j_[i], path_ + "[" + std::to_string(i) + "]");
    return r;
  }

  Rational rational() const {
    if (j_.is_number_integer()) return Rational(integer());
    if (!j_.is_string()) fail("expected a rational string");
    try {
      return parse_rational(j_.get<std::string>());
    } catch (const InputError& e) {
      fail(e.what());
    }
  }

  Integer integer() const {
    if (j_.is_number_unsigned()) return Integer(std::to_string(j_.get<std::uint64_t>()));
    if (j_.is_number_integer()) return Integer(std::to_string(j_.get<std::int64_t>()));
    if (j_.is_string()) {
      Rational q = rational();
      if (!is_integral(q)) fail("expected an integer");
      return q.get_num();
    }
    fail("expected an integer");
  }

  long int64() const {
    Integer n = integer();
    if (!n.fits_slong_p()) fail("integer out of range");
    return n.get_si();
  }

  int int32() const {
    long v = int64();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      fail("integer out of range");
    return static_cast<int>(v);
  }

  bool boolean() const {
    if (!j_.is_boolean()) fail("expected a boolean");
    return j_.get<bool>();
  }

  void kind(const char* expected) const {
    if (!j_.is_object()) fail("expected an object");
    if (j_.contains("schema") && j_.at("schema") != kSchema)
      at("schema").fail(std::string("unsupported schema, expected \"") + kSchema + "\"");
    Reader k = at("kind");
    if (!k.j_.is_string() || k.j_.get<std::string>() != expected)
      k.fail(std::string("expected \"") + expected + "\"");
  }

  std::vector<Rational> rationals() const {
    std::vector<Rational> r;
    for (const auto& it : items()) r.push_back(it.rational());
    return r;
  }

  std::vector<long> longs() const {
    std::vector<long> r;
    for (const auto& it : items()) r.push_back(it.int64());
    return r;
  }

  Exponent exponent(std::size_t n) const {
    auto xs = items();
    if (xs.size() != n) fail("expected " + std::to_string(n) + " exponents");
    Exponent e;
    for (const auto& x : xs) {
      int v = x.int32();
      if (v < 0) x.fail("negative exponent");
      e.push_back(v);
    }
    return e;
  }

  const Json& raw() const { return j_; }
  const std::string& path() const { return path_; }

 private:
  const Json& j_;
  std::string path_;
};

MPoly read_terms(const Reader& r, std::size_t n) {
  MPoly p(n);
  for (const auto& t : r.items()) {
    Rational c = t.at("c").rational();
    if (c == 0) t.at("c").fail("zero coefficient");
    Exponent e = t.at("e").exponent(n);
    if (p.coeff(e) != 0) t.at("e").fail("duplicate exponent");
    p.add_term(e, c);
  }
  return p;
}

std::size_t read_nvars(const Reader& r) {
  long n = r.int64();
  if (n < 0) r.fail("nvars must be nonnegative");
  return static_cast<std::size_t>(n);
}

MPoly read_mpoly(const Reader& r) {
  r.kind("polynomial");
  return read_terms(r.at("terms"), read_nvars(r.at("nvars")));
}

WeightVector read_weights(const Reader& r) {
  r.kind("weights");
  WeightVector w;
  w.omega = r.at("omega").rationals();
  for (std::size_t i = 0; i < w.omega.size(); ++i)
    if (w.omega[i] <= 0) r.at("omega").fail("weights must be positive");
  w.cap = r.at("cap").int32();
  w.injective_on_cap = r.at("injective").boolean();
  return w;
}

UPoly read_upoly(const Reader& r) { return UPoly(r.rationals()); }

Json cone_body(const Cone& c) {
  Json j = document("cone");
  j["generators"] = c.generators;
  j["translate"] = c.translate;
  j["strongly_convex"] = c.strongly_convex;
  j["lambda"] = c.lambda;
  j["refined_omega"] = c.refined_omega;
  j["beta"] = c.beta;
  return j;
}

}  // namespace

Json to_json(const MPoly& p) {
  Json j = document("polynomial");
  j["nvars"] = p.nvars();
  j["terms"] = terms(p);
  return j;
}

Json to_json(const WeightVector& w) {
  Json j = document("weights");
  j["omega"] = rationals(w.omega);
  j["cap"] = w.cap;
  j["injective"] = w.injective_on_cap;
  return j;
}

Json to_json(const TSeries& f) {
  Json j = document("tseries");
  j["nvars"] = f.nvars();
  j["cap"] = f.cap();
  j["terms"] = terms(f.polynomial());
  return j;
}

Json to_json(const PuiseuxSeries& f) {
  Json j = document("puiseux_series");
  j["cap"] = opt_rat(f.cap());
  Json a = Json::array();
  for (const auto& [e, c] : f.terms()) a.push_back({{"e", rat(e)}, {"c", rat(c)}});
  j["terms"] = a;
  return j;
}

Json to_json(const GradedSeries& g) {
  Json j = document("graded_series");
  j["omega"] = nested(to_json(g.omega));
  j["a"] = nested(to_json(g.a));
  j["e"] = rat(g.e);
  j["lo"] = rat(g.lo);
  j["cap"] = rat(g.cap);
  j["base_power"] = g.base_power;
  j["ram"] = g.ram;
  Json pieces = Json::array();
  for (const auto& [w, p] : g.pieces)
    pieces.push_back({{"weight", rat(w)}, {"numerator", terms(p.numerator)}, {"power", p.power}});
  j["pieces"] = pieces;
  return j;
}

Json to_json(const EisensteinCertificate& c) {
  Json j = document("certificate");
  j["a_raw"] = integer(c.a_raw);
  j["e"] = rat(c.e);
  j["s_min"] = opt_rat(c.s_min);
  j["lambda"] = rat(c.lambda);
  j["clearing"] = integer(c.clearing);
  j["exponent"] = c.exponent;
  j["a_final"] = integer(c.a_final);
  j["verified_to"] = c.verified_to;
  j["verified"] = c.verified;
  j["escalated"] = c.escalated;
  return j;
}

Json to_json(const PRecurrence& r) {
  Json j = document("recurrence");
  Json cs = Json::array();
  for (const auto& p : r.coeffs) cs.push_back(upoly(p));
  j["coeffs"] = cs;
  j["start"] = r.start;
  j["initial"] = rationals(r.initial);
  return j;
}

Json to_json(const Cone& c) { return cone_body(c); }

Json to_json(const NewtonPolygon& p) {
  Json j = document("newton_polygon");
  Json pts = Json::array();
  for (const auto& [i, o] : p.points) pts.push_back({{"i", i}, {"ord", rat(o)}});
  j["points"] = pts;
  Json segs = Json::array();
  for (const auto& s : p.segments)
    segs.push_back({{"slope", rat(s.slope)},
                    {"i_start", s.i_start},
                    {"i_end", s.i_end},
                    {"lattice_length", s.lattice_length}});
  j["segments"] = segs;
  return j;
}

Json to_json(const PuiseuxResult& r) {
  Json j = document("puiseux_result");
  Json bs = Json::array();
  for (const auto& b : r.branches) {
    Json s = nested(to_json(b.series));
    bs.push_back({{"series", s}, {"ram", integer(b.ram)}, {"exact", b.exact}});
  }
  j["branches"] = bs;
  Json xs = Json::array();
  for (const auto& x : r.extensions)
    xs.push_back({{"prefix", nested(to_json(x.prefix))},
                  {"exponent", rat(x.exponent)},
                  {"polynomial", upoly(x.polynomial)},
                  {"degree", x.degree},
                  {"irreducible", x.irreducible}});
  j["extensions"] = xs;
  return j;
}

Json to_json(const VerifyResult& r) {
  Json j = document("verify");
  j["pass"] = r.pass;
  j["index"] = r.pass ? Json(nullptr) : Json(r.index);
  j["witness"] = r.pass ? Json(nullptr) : rat(r.witness);
  return j;
}

Json to_json(const VerifyMultiResult& r) {
  Json j = document("verify_multi");
  j["pass"] = r.pass;
  j["exponent"] = r.pass ? Json(nullptr) : Json(r.exponent);
  j["witness"] = r.pass ? Json(nullptr) : rat(r.witness);
  return j;
}

Json to_json(const MultiCertificate& c) {
  Json j = document("multi_certificate");
  j["omega"] = nested(to_json(c.omega));
  j["image"] = nested(to_json(c.image));
  j["b"] = integer(c.b);
  j["a_final"] = integer(c.a_final);
  j["expansion"] = nested(to_json(c.expansion));
  j["verified"] = c.verified;
  return j;
}

Json to_json(const DenominatorProfile& p) {
  Json j = document("denominator_profile");
  j["denominators"] = integers(p.denominators);
  j["running_lcm"] = integers(p.running_lcm);
  j["support"] = integers(p.support);
  j["support_size"] = p.support_size;
  return j;
}

Json to_json(const SearchResult& r) {
  Json j = document("search");
  j["found"] = r.found ? integer(*r.found) : Json(nullptr);
  j["tested"] = r.tested;
  Json rej = Json::array();
  for (const auto& [a, l] : r.rejected) rej.push_back({{"a", integer(a)}, {"index", l}});
  j["rejected"] = rej;
  return j;
}

Json to_json(const WeakEisensteinReport& r) {
  Json j = document("weak_eisenstein");
  j["support"] = integers(r.support);
  j["finite_on_range"] = r.finite_on_range;
  j["beta"] = r.beta;
  j["support_size"] = r.support_size;
  if (r.fit)
    j["fit"] = {{"lambda", r.fit->lambda}, {"mu", r.fit->mu}, {"slope", rat(r.fit->slope)}};
  else
    j["fit"] = nullptr;
  return j;
}

Json to_json(const MonomialMap& m) {
  Json j = document("monomial_map");
  j["lambda"] = rat(m.lambda);
  j["omega"] = rationals(m.omega);
  j["beta"] = rationals(m.beta);
  Json mat = Json::array(), inv = Json::array();
  for (const auto& row : m.matrix) mat.push_back(rationals(row));
  for (const auto& row : m.inverse) inv.push_back(rationals(row));
  j["matrix"] = mat;
  j["inverse"] = inv;
  j["chi"] = rat(m.chi);
  return j;
}

Json to_json(const LinearODE& ode) {
  Json j = document("linear_ode");
  Json cs = Json::array();
  for (const auto& p : ode.coeffs) cs.push_back(upoly(p));
  j["coeffs"] = cs;
  return j;
}

Json to_json(const GrowthReport& r) {
  Json j = document("growth_report");
  j["s"] = r.s;
  j["ratio"] = r.ratio;
  j["K"] = r.K;
  j["argmax"] = r.argmax;
  j["lcm"] = integer(r.lcm);
  Json env = Json::array();
  for (const auto& [p, slope] : r.envelope_slopes) env.push_back({{"p", integer(p)}, {"slope", rat(slope)}});
  j["envelope_slopes"] = env;
  return j;
}

Json to_json(const PadicProfile& p) {
  Json j = document("padic_profile");
  j["p"] = integer(p.p);
  Json vs = Json::array();
  for (const auto& v : p.valuations) vs.push_back(v ? Json(*v) : Json(nullptr));
  j["valuations"] = vs;
  j["anchor"] = p.anchor ? Json(*p.anchor) : Json(nullptr);
  j["slope"] = rat(p.slope);
  return j;
}

Json to_json(const Preparation& p) {
  Json j = document("preparation");
  j["d"] = p.poly.d;
  Json as = Json::array();
  for (const auto& a : p.poly.a) as.push_back(nested(to_json(a)));
  j["a"] = as;
  j["polynomial"] = nested(to_json(p.poly.as_series()));
  j["unit"] = nested(to_json(p.unit));
  return j;
}

Json to_json(const Division& d) {
  Json j = document("division");
  j["d"] = d.d;
  j["q"] = nested(to_json(d.q));
  j["r"] = nested(to_json(d.r));
  return j;
}

template <>
MPoly from_json<MPoly>(const Json& j) {
  return read_mpoly(Reader(j, "$"));
}

template <>
WeightVector from_json<WeightVector>(const Json& j) {
  return read_weights(Reader(j, "$"));
}

template <>
TSeries from_json<TSeries>(const Json& j) {
  Reader r(j, "$");
  r.kind("tseries");
  std::size_t n = read_nvars(r.at("nvars"));
  int cap = r.at("cap").int32();
  if (cap < 0) r.at("cap").fail("cap must be nonnegative");
  MPoly p = read_terms(r.at("terms"), n);
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) > cap) r.at("terms").fail("term above the cap");
  return TSeries(p, cap);
}

template <>
PuiseuxSeries from_json<PuiseuxSeries>(const Json& j) {
  Reader r(j, "$");
  r.kind("puiseux_series");
  std::optional<Rational> cap;
  if (r.has("cap")) cap = r.at("cap").rational();
  PuiseuxSeries f(cap);
  for (const auto& t : r.at("terms").items()) {
    Rational e = t.at("e").rational();
    Rational c = t.at("c").rational();
    if (c == 0) t.at("c").fail("zero coefficient");
    if (cap && e > *cap) t.at("e").fail("term above the cap");
    if (f.terms().count(e)) t.at("e").fail("duplicate exponent");
    f.add_term(e, c);
  }
  return f;
}

template <>
GradedSeries from_json<GradedSeries>(const Json& j) {
  Reader r(j, "$");
  r.kind("graded_series");
  GradedSeries g;
  g.omega = read_weights(r.at("omega"));
  g.a = read_mpoly(r.at("a"));
  if (g.a.nvars() != g.omega.size()) r.at("a").fail("nvars differs from the weight vector");
  g.e = r.at("e").rational();
  g.lo = r.at("lo").rational();
  g.cap = r.at("cap").rational();
  g.base_power = r.at("base_power").int32();
  g.ram = r.at("ram").int32();
  if (g.base_power < 1) r.at("base_power").fail("must be positive");
  if (g.ram < 1) r.at("ram").fail("must be positive");
  for (const auto& p : r.at("pieces").items()) {
    Rational w = p.at("weight").rational();
    if (g.pieces.count(w)) p.at("weight").fail("duplicate weight");
    int power = p.at("power").int32();
    if (power < 0) p.at("power").fail("must be nonnegative");
    g.pieces.emplace(w, GradedPiece{read_terms(p.at("numerator"), g.a.nvars()), power});
  }
  return g;
}

template <>
EisensteinCertificate from_json<EisensteinCertificate>(const Json& j) {
  Reader r(j, "$");
  r.kind("certificate");
  EisensteinCertificate c;
  c.a_raw = r.at("a_raw").integer();
  c.e = r.at("e").rational();
  if (r.has("s_min")) c.s_min = r.at("s_min").rational();
  else r.at("s_min");  // the key is required even when null
  c.lambda = r.at("lambda").rational();
  c.clearing = r.at("clearing").integer();
  c.exponent = r.at("exponent").int64();
  c.a_final = r.at("a_final").integer();
  c.verified_to = r.at("verified_to").int32();
  c.verified = r.at("verified").boolean();
  c.escalated = r.at("escalated").boolean();
  return c;
}

template <>
PRecurrence from_json<PRecurrence>(const Json& j) {
  Reader r(j, "$");
  r.kind("recurrence");
  PRecurrence rec;
  for (const auto& p : r.at("coeffs").items()) rec.coeffs.push_back(read_upoly(p));
  if (rec.coeffs.empty() || rec.coeffs.back().is_zero())
    r.at("coeffs").fail("leading coefficient must be nonzero");
  rec.start = r.at("start").int64();
  if (rec.start < 0) r.at("start").fail("must be nonnegative");
  rec.initial = r.at("initial").rationals();
  return rec;
}

template <>
Cone from_json<Cone>(const Json& j) {
  Reader r(j, "$");
  r.kind("cone");
  Cone c;
  c.translate = r.at("translate").longs();
  for (const auto& g : r.at("generators").items()) {
    c.generators.push_back(g.longs());
    if (c.generators.back().size() != c.translate.size()) g.fail("dimension differs from translate");
  }
  c.strongly_convex = r.at("strongly_convex").boolean();
  c.lambda = r.at("lambda").int64();
  c.refined_omega = r.at("refined_omega").longs();
  c.beta = r.at("beta").longs();
  return c;
}

template <>
LinearODE from_json<LinearODE>(const Json& j) {
  Reader r(j, "$");
  r.kind("linear_ode");
  LinearODE ode;
  for (const auto& p : r.at("coeffs").items()) ode.coeffs.push_back(read_upoly(p));
  if (ode.coeffs.empty() || ode.coeffs.back().is_zero())
    r.at("coeffs").fail("leading coefficient must be nonzero");
  return ode;
}

}  // namespace eisenbox
