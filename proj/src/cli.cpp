#include "abelian/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "abelian/covers.hpp"
#include "abelian/curve_algebra.hpp"
#include "abelian/realizability.hpp"
#include "abelian/symplectic_lattice.hpp"

namespace abelian::cli {

namespace {

using Json = nlohmann::ordered_json;

// Structurally invalid input (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// reading

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

Rational read_rational(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument&) {
  }
  throw InputError(where + ": expected a rational, got " + j.dump());
}

Integer read_integer(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Integer(j.dump());
    if (j.is_string()) return parse_integer(j.get<std::string>());
  } catch (const std::invalid_argument&) {
  }
  throw InputError(where + ": expected an integer, got " + j.dump());
}

int read_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected a small integer, got " + j.dump());
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw InputError(where + ": integer out of range");
  return static_cast<int>(v);
}

RatVector read_rationals(const Json& j, const std::string& where) {
  RatVector out;
  for (std::size_t i = 0; i < array_of(j, where).size(); ++i) {
    out.push_back(read_rational(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

IntVector read_integers(const Json& j, const std::string& where) {
  IntVector out;
  for (std::size_t i = 0; i < array_of(j, where).size(); ++i) {
    out.push_back(read_integer(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

GaussianRational read_gaussian(const Json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError(where + ": expected [re, im]");
    return {read_rational(j[0], where + "[0]"), read_rational(j[1], where + "[1]")};
  }
  return read_rational(j, where);
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_array()) {
    for (const auto& x : j) {
      if (has_float(x)) return true;
    }
  }
  return false;
}

CohomologyClass read_class(const Json& j, const std::string& where) {
  const int g = read_int(field(j, "genus", where), where + ".genus");
  const auto& ps = array_of(field(j, "periods", where), where + ".periods");
  std::vector<GaussianRational> periods;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    periods.push_back(read_gaussian(ps[i], where + ".periods[" + std::to_string(i) + "]"));
  }
  return CohomologyClass(g, std::move(periods));
}

Sublattice read_sublattice(const Json& j, const std::string& where) {
  const Json& basis = j.is_object() ? field(j, "basis", where) : j;
  std::vector<IntVector> vs;
  for (std::size_t i = 0; i < array_of(basis, where).size(); ++i) {
    vs.push_back(read_integers(basis[i], where + "[" + std::to_string(i) + "]"));
  }
  if (vs.empty()) throw InputError(where + ": empty basis");
  const std::size_t n = vs.front().size();
  for (const auto& v : vs) {
    if (v.size() != n) throw InputError(where + ": basis vectors of different lengths");
  }
  if (n == 0 || n % 2 != 0) throw InputError(where + ": vectors must have even positive length 2g");
  const int g = static_cast<int>(n / 2);
  if (j.is_object() && j.contains("genus") && read_int(j["genus"], where + ".genus") != g) {
    throw InputError(where + ": genus does not match the vector length");
  }
  return Sublattice(g, std::move(vs));
}

Permutation read_permutation(const Json& j, const std::string& where) {
  std::vector<int> images;
  for (std::size_t i = 0; i < array_of(j, where).size(); ++i) {
    images.push_back(read_int(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return Permutation(std::move(images));
}

BranchedTorusCover read_cover(const Json& j) {
  BranchedTorusCover c;
  c.degree = read_int(field(j, "degree", "cover"), "cover.degree");
  c.a = read_permutation(field(j, "a", "cover"), "cover.a");
  c.b = read_permutation(field(j, "b", "cover"), "cover.b");
  if (j.contains("branch")) {
    const auto& br = array_of(j["branch"], "cover.branch");
    for (std::size_t i = 0; i < br.size(); ++i) {
      c.branch.push_back(read_permutation(br[i], "cover.branch[" + std::to_string(i) + "]"));
    }
  }
  return c;
}

struct ParsedCurve {
  std::optional<HyperellipticCurve> hyperelliptic;
  std::optional<PlaneQuartic> quartic;

  const CanonicalCurve& base() const {
    if (hyperelliptic) return *hyperelliptic;
    return *quartic;
  }
  const HyperellipticCurve& need_hyperelliptic() const {
    if (!hyperelliptic) throw DomainError("unsupported_curve", "operation needs a hyperelliptic curve");
    return *hyperelliptic;
  }
  const PlaneQuartic& need_quartic() const {
    if (!quartic) throw DomainError("unsupported_curve", "operation needs a plane quartic");
    return *quartic;
  }
};

ParsedCurve read_curve(const Json& input) {
  const Json& j = field(input, "curve", "input");
  const auto& type = field(j, "type", "curve");
  ParsedCurve out;
  if (type == "hyperelliptic") {
    out.hyperelliptic.emplace(Polynomial(read_rationals(field(j, "f", "curve"), "curve.f")));
  } else if (type == "quartic") {
    std::map<TernaryForm::Exponent, Rational> terms;
    const auto& ts = array_of(field(j, "terms", "curve"), "curve.terms");
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::string where = "curve.terms[" + std::to_string(i) + "]";
      if (!ts[i].is_array() || ts[i].size() != 4) throw InputError(where + ": expected [i, j, k, c]");
      const TernaryForm::Exponent e{read_int(ts[i][0], where), read_int(ts[i][1], where), read_int(ts[i][2], where)};
      terms[e] += read_rational(ts[i][3], where + "[3]");
    }
    out.quartic.emplace(TernaryForm(std::move(terms)));
  } else {
    throw InputError("curve.type: expected \"hyperelliptic\" or \"quartic\"");
  }
  return out;
}

Differential read_differential(const ParsedCurve& c, const Json& input, const std::string& key) {
  Differential d{read_rationals(field(input, key, "input"), key)};
  c.base().check(d);
  return d;
}

std::vector<Differential> read_tau(const ParsedCurve& c, const Json& input) {
  const auto& ts = array_of(field(input, "tau", "input"), "tau");
  std::vector<Differential> out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Differential d{read_rationals(ts[i], "tau[" + std::to_string(i) + "]")};
    c.base().check(d);
    out.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// writing

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GaussianRational& z) { return Json::array({to_string(z.re), to_string(z.im)}); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(std::complex<long double> z) {
  return Json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
}

Json to_json(const Permutation& p) { return Json(p.images()); }

Json to_json(const PlanarLattice& l) {
  Json out = Json::array();
  for (const auto& b : l.basis) out.push_back(to_json(b));
  return out;
}

Json sublattice_json(const Sublattice& s) {
  Json basis = Json::array();
  for (const auto& v : s.hermite_basis()) basis.push_back(to_json(v));
  return Json{{"genus", s.genus()}, {"basis", std::move(basis)}};
}

Json cover_json(const BranchedTorusCover& c) {
  Json branch = Json::array();
  for (const auto& p : c.branch) branch.push_back(to_json(p));
  return Json{{"degree", c.degree}, {"a", to_json(c.a)}, {"b", to_json(c.b)}, {"branch", std::move(branch)}};
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (x.is_structured()) return false;
  }
  return true;
}

void render_table(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_table(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !is_flat_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    std::string text;
    if (j.is_array()) {
      for (const auto& x : j) text += (text.empty() ? "" : " ") + scalar_text(x);
    } else {
      text = scalar_text(j);
    }
    if (prefix.empty()) {
      out << text << "\n";
    } else {
      out << prefix << "\t" << text << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// commands

struct Options {
  std::string input_path;
  std::string inline_json;
  std::string format = "json";
  double tolerance = 1e-9;
  int height = 10;
  bool assume_simple = false;
  int genus = 0;
  int degree = 0;
  long g = 0;
  long k = 0;
  std::string det;
};

Json realizable_line(const Json& in, const Options& opt) {
  if (has_float(field(in, "periods", "input"))) {
    const int g = read_int(field(in, "genus", "input"), "genus");
    std::vector<std::complex<double>> periods;
    for (const auto& p : array_of(in["periods"], "periods")) {
      if (p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number()) {
        periods.emplace_back(p[0].get<double>(), p[1].get<double>());
      } else if (p.is_number()) {
        periods.emplace_back(p.get<double>(), 0.0);
      } else {
        throw InputError("periods: numeric mode needs [re, im] number pairs");
      }
    }
    const auto v = is_realizable_line_numeric(g, periods, opt.tolerance);
    Json out{{"realizable", v.realizable}, {"heuristic", v.heuristic}, {"reason", to_string(v.reason)},
             {"area", v.area}};
    out["covolume"] = v.covolume ? Json(*v.covolume) : Json();
    out["det"] = v.det ? Json(*v.det) : Json();
    return out;
  }
  const auto v = is_realizable_line(read_class(in, "input"));
  Json out{{"realizable", v.realizable},
           {"reason", to_string(v.reason)},
           {"area", to_json(v.area)},
           {"period_rank", v.period_rank}};
  out["covolume"] = v.covolume ? to_json(*v.covolume) : Json();
  out["det"] = v.det ? to_json(*v.det) : Json();
  return out;
}

Json realizable_pair(const Json& in, const Options& opt) {
  const auto a = read_class(field(in, "a", "input"), "a");
  const auto b = read_class(field(in, "b", "input"), "b");
  bool assume_simple = opt.assume_simple;
  if (in.contains("assume_simple")) {
    if (!in["assume_simple"].is_boolean()) throw InputError("assume_simple: expected a boolean");
    assume_simple = assume_simple || in["assume_simple"].get<bool>();
  }
  const auto v = is_realizable_elliptic_pair(a, b, assume_simple, opt.height);
  Json out{{"realizable", v.realizable}, {"reason", to_string(v.reason)}, {"pfaffian", to_json(v.pfaffian)},
           {"det", to_json(v.det)},       {"even", v.even},                 {"above_bound", v.above_bound}};
  out["witness"] = v.witness ? Json{{"xi", to_json(v.witness->xi)}, {"eta", to_json(v.witness->eta)}} : Json();
  return out;
}

Json lattice_det(const Json& in, const Options&) {
  const auto s = read_sublattice(in, "lattice");
  return Json{{"rank", s.rank()}, {"complete", is_complete(s)}, {"det", to_json(determinant(s))}};
}

Json lattice_saturate(const Json& in, const Options&) {
  const auto s = read_sublattice(in, "lattice");
  Json out = sublattice_json(saturate(s));
  out["was_complete"] = is_complete(s);
  return out;
}

Json lattice_normal_form(const Json& in, const Options&) {
  const auto nf = alternating_normal_form(read_sublattice(in, "lattice"));
  Json divisors = Json::array();
  for (const auto& d : nf.divisors) divisors.push_back(to_json(d));
  Json basis = Json::array();
  for (const auto& v : nf.basis) basis.push_back(to_json(v));
  return Json{{"divisors", std::move(divisors)}, {"basis", std::move(basis)}, {"change", to_json(nf.change)}};
}

Json lattice_map(const Json& in, bool rank4) {
  const auto u = read_sublattice(field(in, "source", "input"), "source");
  const auto u2 = read_sublattice(field(in, "target", "input"), "target");
  const auto a = rank4 ? map_rank4_sublattice(u, u2) : map_rank2_sublattice(u, u2);
  return Json{{"matrix", to_json(a.entries())}};
}

Json lattice_extend(const Json& in, const Options&) {
  const Json& v = in.is_object() ? field(in, "vector", "input") : in;
  const auto a = extend_to_symplectic_basis(read_integers(v, "vector"));
  return Json{{"matrix", to_json(a.entries())}};
}

Json cover_build(const Json&, const Options& opt) { return cover_json(construct_cover(opt.genus, opt.degree)); }

Json cover_analyze(const Json& in, const Options&) {
  const auto c = read_cover(in);
  validate(c);
  const auto inv = cover_class_invariants(c);
  return Json{{"degree", c.degree},
              {"connected", is_connected(c.generators())},
              {"genus", inv.genus},
              {"period_lattice", to_json(period_lattice_of_cover(c))},
              {"area", to_json(inv.area)},
              {"covolume", to_json(inv.covolume)},
              {"det", to_json(inv.det)}};
}

Json cover_origami_genus(const Json& in, const Options&) {
  const Origami o{read_permutation(field(in, "h", "origami"), "h"), read_permutation(field(in, "v", "origami"), "v")};
  return Json{{"degree", o.degree()}, {"genus", genus_of_origami(o)}};
}

Json curve_classify(const Json& in, const Options&) {
  const auto c = read_curve(in);
  const auto tau = read_tau(c, in);
  return Json{{"linkage", to_string(classify(c.base(), tau))}, {"obscurant_dim", obscurant_dim(c.base(), tau)}};
}

Json curve_obscurant(const Json& in, const Options&) {
  const auto c = read_curve(in);
  const auto tau = read_tau(c, in);
  return Json{{"obscurant_dim", obscurant_dim(c.base(), tau)},
              {"image_dim", multiplication_image_dim(c.base(), tau)},
              {"isoperiodic_deformation_dim", isoperiodic_deformation_dim(c.base(), tau)}};
}

Json curve_overlap(const Json& in, const Options&) {
  const auto c = read_curve(in);
  const auto& h = c.need_hyperelliptic();
  const auto o = overlap_degree(h, read_differential(c, in, "a"), read_differential(c, in, "b"));
  return Json{{"branch", o.branch}, {"non_branch", o.non_branch}, {"infinity", o.infinity}, {"total", o.total()}};
}

Json curve_noether(const Json& in, const Options&) {
  const auto c = read_curve(in);
  return Json{{"genus", c.base().genus()},
              {"quadratic_dim", c.base().quadratic_dim()},
              {"image_dim", noether_image_dim(c.base())}};
}

Json curve_residues(const Json& in, const Options&) {
  const auto c = read_curve(in);
  const auto& h = c.need_hyperelliptic();
  const auto alpha = read_differential(c, in, "alpha");
  QuadDifferential omega;
  if (in.contains("omega")) {
    const auto& w = in["omega"];
    omega.q = Polynomial(read_rationals(field(w, "q", "omega"), "omega.q"));
    omega.r = w.contains("r") ? Polynomial(read_rationals(w["r"], "omega.r")) : Polynomial();
  } else {
    omega = product(h, read_differential(c, in, "beta"), read_differential(c, in, "delta"));
  }
  const auto res = residues_of_quotient(h, omega, alpha);
  Json list = Json::array();
  for (const auto& r : res) {
    list.push_back(Json{{"x", to_json(r.x)},
                        {"sheet", r.sheet},
                        {"a", to_json(r.residue.a)},
                        {"b", to_json(r.residue.b)},
                        {"radicand", to_json(r.residue.radicand)}});
  }
  return Json{{"residues", std::move(list)}, {"sum_is_zero", residue_sum(res).is_zero()}};
}

Json curve_sections(const Json& in, const Options&) {
  const auto c = read_curve(in);
  const auto& h = c.need_hyperelliptic();
  const auto gamma = read_differential(c, in, "gamma");
  const auto beta = read_differential(c, in, "beta");
  const auto alpha = read_differential(c, in, "alpha");
  Json list = Json::array();
  try {
    const auto vals = section_values(h, gamma, beta, alpha);
    for (const auto& v : vals) list.push_back(Json{{"x", to_json(v.x)}, {"sheet", v.sheet}, {"value", to_json(v.value)}});
    return Json{{"exact", true}, {"values", std::move(list)}, {"skew_pairs_constant", skew_pairs_constant(vals)}};
  } catch (const DomainError& e) {
    if (e.tag() != "irrational_zero_locus") throw;
  }
  for (const auto& v : section_values_numeric(h, gamma, beta, alpha)) {
    list.push_back(Json{{"x", to_json(v.x)}, {"sheet", v.sheet}, {"value", to_json(v.value)}});
  }
  return Json{{"exact", false}, {"values", std::move(list)}};
}

Json curve_cross_ratio(const Json& in, const Options& opt) {
  const auto c = read_curve(in);
  const auto& q = c.need_quartic();
  const auto r = quartic_cross_ratio(q, read_differential(c, in, "alpha"), read_differential(c, in, "beta"),
                                     read_differential(c, in, "gamma"), opt.tolerance);
  Json params = Json::array(), values = Json::array();
  for (const auto& t : r.parameters) params.push_back(to_json(t));
  for (const auto& v : r.values) values.push_back(to_json(v));
  return Json{{"parameters", std::move(params)},
              {"values", std::move(values)},
              {"b_points", to_json(r.b_points)},
              {"b_forms", to_json(r.b_forms)},
              {"matches", r.matches}};
}

Json dims_gap(const Json&, const Options& opt) { return polyperiod_dimension_gap(opt.g, opt.k); }

Json severi(const Json& in, const Options& opt) {
  Integer det;
  if (!opt.det.empty()) {
    try {
      det = parse_integer(opt.det);
    } catch (const std::invalid_argument&) {
      throw InputError("--det: expected an integer");
    }
  } else {
    det = read_integer(field(in, "det", "input"), "det");
  }
  Json genera = Json::array();
  for (const auto& [g, nodes] : severi_range(det)) genera.push_back(Json{{"genus", g}, {"nodes", nodes}});
  return Json{{"det", to_json(det)}, {"genera", std::move(genera)}};
}

struct Action {
  std::function<Json(const Json&, const Options&)> fn;
  bool needs_input = true;
};

Json read_input(const Options& opt, std::istream& in) {
  std::string text;
  if (!opt.inline_json.empty()) {
    text = opt.inline_json;
  } else if (opt.input_path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!opt.input_path.empty()) {
    std::ifstream f(opt.input_path);
    if (!f) throw InputError("cannot open input file " + opt.input_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    throw InputError("no input: pass --input FILE, --input - or --json TEXT");
  }
  return Json::parse(text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with periods of abelian differentials", "abelian"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--input", opt.input_path, "JSON input file, - for stdin");
  app.add_option("--json", opt.inline_json, "inline JSON input");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--tolerance", opt.tolerance, "tolerance for numeric paths");
  app.add_option("--height", opt.height, "height bound of the simplicity refuter");

  const Action* selected = nullptr;
  std::vector<std::unique_ptr<Action>> actions;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Action a) {
    actions.push_back(std::make_unique<Action>(std::move(a)));
    const Action* ptr = actions.back().get();
    CLI::App* sub = parent->add_subcommand(name, help)->fallthrough();
    sub->parse_complete_callback([&selected, ptr] { selected = ptr; });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help)->fallthrough();
    g->require_subcommand(1);
    return g;
  };

  auto* realizable = group("realizable", "realizability of classes and pairs");
  leaf(realizable, "line", "single class", {realizable_line});
  leaf(realizable, "pair", "elliptic pair", {realizable_pair})
      ->add_flag("--assume-simple", opt.assume_simple, "skip the simplicity refuter");

  auto* lattice = group("lattice", "symplectic sublattices");
  leaf(lattice, "det", "determinant", {lattice_det});
  leaf(lattice, "saturate", "saturation", {lattice_saturate});
  leaf(lattice, "normal-form", "alternating normal form", {lattice_normal_form});
  leaf(lattice, "map2", "Sp(2g,Z) element between rank-2 sublattices",
       {[](const Json& j, const Options&) { return lattice_map(j, false); }});
  leaf(lattice, "map4", "Sp(2g,Z) element between rank-4 sublattices",
       {[](const Json& j, const Options&) { return lattice_map(j, true); }});
  leaf(lattice, "extend", "symplectic basis through a primitive vector", {lattice_extend});

  auto* cover = group("cover", "branched covers of the torus");
  auto* build = leaf(cover, "build", "construct a cover certificate", {cover_build, false});
  build->add_option("--genus", opt.genus, "genus")->required();
  build->add_option("--degree", opt.degree, "degree")->required();
  leaf(cover, "analyze", "check a cover certificate", {cover_analyze});
  leaf(cover, "origami-genus", "genus of a square-tiled surface", {cover_origami_genus});

  auto* curve = group("curve", "differentials on explicit curves");
  leaf(curve, "classify", "coprime or linked", {curve_classify});
  leaf(curve, "obscurant", "obscurant dimension", {curve_obscurant});
  leaf(curve, "overlap", "overlap divisor degree", {curve_overlap});
  leaf(curve, "noether", "image of Sym^2 H^0(K)", {curve_noether});
  leaf(curve, "residues", "residues of a quadratic differential over alpha", {curve_residues});
  leaf(curve, "cross-ratio", "cross-ratio reciprocity on a quartic", {curve_cross_ratio});
  leaf(curve, "sections", "values of gamma/beta at the zeroes of alpha", {curve_sections});

  auto* dims = group("dims", "dimension counts");
  auto* gap = leaf(dims, "gap", "polyperiod dimension gap", {dims_gap, false});
  gap->add_option("--g", opt.g, "genus")->required();
  gap->add_option("--k", opt.k, "number of differentials")->required();

  leaf(&app, "severi", "genera of elliptic pairs with a given determinant", {severi, false})
      ->add_option("--det", opt.det, "determinant");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }
  if (selected == nullptr) {
    err << app.help();
    return 2;
  }

  try {
    const bool has_input = !opt.inline_json.empty() || !opt.input_path.empty();
    const Json input = selected->needs_input || has_input ? read_input(opt, in) : Json::object();
    const Json result = selected->fn(input, opt);
    if (opt.format == "table") {
      render_table(result, "", out);
    } else {
      out << result.dump(2) << "\n";
    }
    return 0;
  } catch (const Json::parse_error& e) {
    err << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.tag() << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace abelian::cli
