// leibcoh command-line driver.
//
// Exit codes: 0 success, 1 usage or input error, 2 validation failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leibcoh/io.hpp"
#include "leibcoh/leibcoh.hpp"

namespace {

using leibcoh::io::Json;
using namespace leibcoh;

constexpr const char* kVersion = "0.1.0";

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "json";
  std::string out;
  unsigned threads = 1;
  bool force = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error("cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

Json load_json(const std::string& path) { return io::parse_json(read_input(path), path.empty() || path == "-" ? "<stdin>" : path); }

// Text mode: one "key: value" line per leaf, nested keys joined by '.'.
void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& e : j) scalars = scalars && !e.is_structured();
    if (scalars) {
      os << prefix << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      os << "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    }
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& doc, const Global& g, bool raw_document = false) {
  std::ostringstream os;
  if (g.format == "text" && !raw_document) {
    flatten(doc, "", os);
  } else {
    os << doc.dump(2) << "\n";
  }
  if (g.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(g.out);
    if (!f) throw Error("cannot write '" + g.out + "'");
    f << os.str();
  }
}

Json report_header(const std::string& command) {
  Json r;
  r["tool"] = Json{{"name", "leibcoh"}, {"version", kVersion}};
  r["command"] = command;
  return r;
}

Json algebra_section(const AlgebraSpec& g, const StructureReport& st) {
  Json a;
  a["dim"] = g.dim();
  a["kind"] = to_string(g.kind());
  a["basis"] = g.basis_names();
  a["is_antisymmetric"] = st.is_antisymmetric;
  a["is_jacobi"] = st.is_jacobi;
  a["is_leibniz"] = st.is_leibniz;
  a["satisfies_kind"] = st.satisfies(g.kind());
  a["center_dim"] = st.c;
  a["derived_dim"] = st.derived.dim();
  a["p"] = st.p;
  a["c"] = st.c;
  return a;
}

Json cochain_list(const std::vector<Cochain>& cs, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(io::cochain_to_json(c, names));
  return arr;
}

Coefficients parse_coeff(const std::string& s) { return s == "trivial" ? Coefficients::trivial : Coefficients::adjoint; }

struct Loaded {
  AlgebraSpec g;
  StructureReport st;
};

Loaded load_algebra(const std::string& path) {
  Loaded l;
  l.g = io::algebra_from_json(load_json(path));
  l.st = validate(l.g);
  return l;
}

void require_valid(const Loaded& l) {
  if (!l.st.satisfies(l.g.kind()))
    throw ValidationFailure(std::string("algebra does not satisfy the identities of a ") + to_string(l.g.kind()) +
                            " algebra (run 'validate' for details)");
}

void require_lie(const Loaded& l) {
  require_valid(l);
  if (l.g.kind() != AlgebraKind::lie) throw ValidationFailure("this command needs a Lie algebra");
}

Json symmetric_form_json(const Vector& pair_coords, const std::vector<std::string>& names) {
  SymmetricPairs sp(names.size());
  Json arr = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i; j < names.size(); ++j) {
      const Scalar& x = pair_coords[sp.index(i, j)];
      if (!x.is_zero()) arr.push_back(Json{{"left", names[i]}, {"right", names[j]}, {"coeff", x.to_string()}});
    }
  return arr;
}

Json wedge_json(const WedgeScheme& w, const Vector& v, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    std::size_t r = idx % w.basis.size();
    Json e;
    if (w.coeff == Coefficients::adjoint) e["out"] = names[idx / w.basis.size()];
    Json args = Json::array();
    for (std::size_t a : w.basis.tuple(r)) args.push_back(names[a]);
    e["args"] = std::move(args);
    e["coeff"] = v[idx].to_string();
    arr.push_back(std::move(e));
  }
  return arr;
}

Json defects_json(const std::vector<PolyDefect>& ds, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (const auto& d : ds)
    arr.push_back(Json{{"args", {names[d.i], names[d.j], names[d.l]}}, {"out", names[d.k]}, {"value", d.value.to_string()}});
  return arr;
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("--generators: '" + item + "' is not an integer");
    }
    if (pos != item.size() || v < 1) throw ParseError("--generators: '" + item + "' is not a positive integer");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || s == "i" || std::isalpha(static_cast<unsigned char>(s[0])) == 0) return false;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  return true;
}

// ---- commands -------------------------------------------------------------

int cmd_validate(const Global& g, const std::string& file) {
  Loaded l = load_algebra(file);
  Json r = report_header("validate");
  r["algebra"] = algebra_section(l.g, l.st);
  emit(r, g);
  return l.st.satisfies(l.g.kind()) ? 0 : 2;
}

int cmd_cohomology(const Global& g, const std::string& file, const std::string& coeff_s, int deg, bool lie, bool reps) {
  Loaded l = load_algebra(file);
  require_valid(l);
  const Coefficients coeff = parse_coeff(coeff_s);
  const Complex complex = lie ? Complex::lie : Complex::leibniz;
  if (lie && l.g.kind() != AlgebraKind::lie) throw ValidationFailure("--lie needs a Lie algebra");
  if (deg == 3 && coeff == Coefficients::adjoint && l.g.dim() > 9 && !g.force)
    throw Error("degree-3 adjoint cohomology for dim " + std::to_string(l.g.dim()) +
                " > 9 builds very large matrices; pass --force to proceed");
  CohomologyOptions opt;
  opt.threads = g.threads;
  if (g.force) opt.max_dim_degree3 = std::numeric_limits<std::size_t>::max();
  Cohomology h;
  try {
    h = cohomology(l.g, coeff, static_cast<std::size_t>(deg), complex, opt);
  } catch (const UnsupportedDegree& e) {
    throw Error(std::string(e.what()) + "; pass --force to proceed");
  }
  Json r = report_header("cohomology");
  r["algebra"] = algebra_section(l.g, l.st);
  Json c;
  c["complex"] = to_string(complex);
  c["coefficients"] = to_string(coeff);
  c["degree"] = deg;
  const std::string n = std::to_string(deg);
  const std::string z = lie ? "z" : "zl";
  const std::string b = lie ? "b" : "bl";
  const std::string hh = lie ? "h" : "hl";
  c[z + n + "_dim"] = h.z_dim();
  c[b + n + "_dim"] = h.b_dim();
  c[hh + n + "_dim"] = h.h_dim();
  if (!lie && deg == 2) c["zl2_0_dim"] = leibniz_spaces(l.g, coeff, g.threads).zl2_sym.dim();
  if (reps) c["representatives"] = cochain_list(h.representatives, l.g.basis_names());
  r["cohomology"] = std::move(c);
  emit(r, g);
  return 0;
}

int cmd_koszul(const Global& g, const std::string& file) {
  Loaded l = load_algebra(file);
  require_lie(l);
  KoszulReport kr = koszul_report(l.g);
  Json r = report_header("koszul");
  r["algebra"] = algebra_section(l.g, l.st);
  Json k;
  k["inv_forms_dim"] = kr.inv_forms.dim();
  k["ker_I_dim"] = kr.ker_I.dim();
  k["im_I_dim"] = kr.im_I.dim();
  k["im_I_cap_B3_trivial_dim"] = kr.im_I_cap_B3_trivial.dim();
  k["c_tensor_imI_cap_B3_adjoint_dim"] = kr.c_tensor_imI_cap_B3_adjoint.dim();
  k["is_I_null"] = kr.is_I_null;
  k["is_I_exact"] = kr.is_I_exact;
  k["adjoint_uncoupling"] = kr.adjoint_uncoupling;
  k["trivial_uncoupling"] = kr.trivial_uncoupling;
  k["p"] = kr.p;
  k["c"] = kr.c;
  Json checks;
  checks["images_alternating"] = kr.images_alternating;
  checks["dimension_identity"] = kr.dimension_identity;
  checks["restriction_is_minus_I"] = kr.restriction_is_minus_I;
  if (kr.c != 0) {
    checks["uncoupling_implication"] = kr.uncoupling_implication;
  } else {
    checks["uncoupling_implication"] = nullptr;
  }
  k["checks"] = std::move(checks);
  Json forms = Json::array();
  for (std::size_t i = 0; i < kr.inv_forms.dim(); ++i)
    forms.push_back(symmetric_form_json(kr.inv_forms.basis_vector(i), l.g.basis_names()));
  k["inv_forms"] = std::move(forms);
  WedgeScheme w3(l.g.dim(), 3, Coefficients::trivial);
  Json im = Json::array();
  for (std::size_t i = 0; i < kr.im_I.dim(); ++i) im.push_back(wedge_json(w3, kr.im_I.basis_vector(i), l.g.basis_names()));
  k["im_I"] = std::move(im);
  r["koszul"] = std::move(k);
  emit(r, g);
  return 0;
}

int cmd_decompose(const Global& g, const std::string& file, const std::string& coeff_s) {
  Loaded l = load_algebra(file);
  require_lie(l);
  HL2Decomposition dec = decompose_HL2(l.g, parse_coeff(coeff_s));
  Json r = report_header("decompose");
  r["algebra"] = algebra_section(l.g, l.st);
  Json d;
  d["coefficients"] = to_string(dec.coeff);
  d["h2_dim"] = dec.h2_part.size();
  d["symmetric_dim"] = dec.symmetric_part.size();
  d["coupled_dim"] = dec.coupled_part.size();
  d["hl2_dim"] = dec.hl2_dim;
  d["dims_consistent"] = dec.dims_consistent();
  d["symmetric_meets_bl2"] = dec.symmetric_meets_bl2;
  d["h2_part"] = cochain_list(dec.h2_part, l.g.basis_names());
  d["symmetric_part"] = cochain_list(dec.symmetric_part, l.g.basis_names());
  d["coupled_part"] = cochain_list(dec.coupled_part, l.g.basis_names());
  r["decomposition"] = std::move(d);
  emit(r, g);
  return 0;
}

int cmd_massey(const Global& g, const std::string& file, const std::string& gens_s, int order,
               const std::string& cochains_file, bool witnesses) {
  Loaded l = load_algebra(file);
  require_valid(l);
  const auto& names = l.g.basis_names();
  std::vector<std::pair<std::string, Cochain>> pool;
  if (!cochains_file.empty()) {
    pool = io::cochains_from_json(load_json(cochains_file), names);
  } else {
    auto reps = leibniz_spaces(l.g, Coefficients::adjoint, g.threads).hl2_reps;
    for (std::size_t i = 0; i < reps.size(); ++i) pool.emplace_back("h" + std::to_string(i + 1), std::move(reps[i]));
  }
  std::vector<std::size_t> idx = gens_s.empty() ? std::vector<std::size_t>{} : parse_index_list(gens_s);
  if (idx.empty())
    for (std::size_t i = 1; i <= pool.size(); ++i) idx.push_back(i);
  std::vector<Cochain> gens;
  std::vector<std::string> labels;
  std::vector<std::string> params;
  for (std::size_t i : idx) {
    if (i > pool.size())
      throw ParseError("--generators: index " + std::to_string(i) + " exceeds the " + std::to_string(pool.size()) +
                       " available cochains");
    gens.push_back(pool[i - 1].second);
    labels.push_back(pool[i - 1].first);
    params.push_back(is_identifier(pool[i - 1].first) ? pool[i - 1].first : "s" + std::to_string(params.size() + 1));
  }
  for (std::size_t a = 0; a < params.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (params[a] == params[b]) params[a] = "s" + std::to_string(a + 1);
  for (std::size_t a = 0; a < gens.size(); ++a)
    if (!apply_leibniz_coboundary(l.g, gens[a]).is_zero())
      throw ValidationFailure("generator '" + labels[a] + "' is not a Leibniz 2-cocycle");

  MasseyLedger ledger = massey_products(l.g, gens, static_cast<unsigned>(order), params);
  Json r = report_header("massey");
  r["algebra"] = algebra_section(l.g, l.st);
  Json m;
  Json gj = Json::array();
  for (std::size_t a = 0; a < gens.size(); ++a)
    gj.push_back(Json{{"name", labels[a]}, {"parameter", params[a]}, {"cochain", io::cochain_to_json(gens[a], names)}});
  m["generators"] = std::move(gj);
  m["order"] = order;
  Json entries = Json::array();
  for (const auto& e : ledger.entries) {
    Json ej;
    ej["monomial"] = e.monomial.to_string();
    Json gl = Json::array();
    for (std::size_t a : e.generators) gl.push_back(labels[a]);
    ej["generators"] = std::move(gl);
    ej["order"] = e.monomial.degree();
    ej["verdict"] = to_string(e.cls.verdict);
    ej["is_cocycle"] = e.cls.is_cocycle;
    ej["indeterminacy_dim"] = e.cls.indeterminacy_dim;
    ej["nontrivial_mod_indeterminacy"] = e.cls.nontrivial_mod_indeterminacy;
    if (witnesses && e.cls.verdict == Verdict::coboundary && e.cls.witness)
      ej["witness"] = io::cochain_to_json(*e.cls.witness, names);
    entries.push_back(std::move(ej));
  }
  m["entries"] = std::move(entries);
  Json obs = Json::array();
  for (const auto& o : ledger.obstructed) obs.push_back(o.to_string());
  m["obstructed"] = std::move(obs);
  r["massey"] = std::move(m);
  emit(r, g);
  return 0;
}

ParamAlgebra load_family(const std::string& file) { return io::param_algebra_from_json(load_json(file)); }

Json family_section(const ParamAlgebra& pa) {
  Json f;
  f["dim"] = pa.dim();
  f["kind"] = to_string(pa.kind());
  f["basis"] = pa.basis_names();
  f["params"] = pa.params();
  return f;
}

int cmd_versal(const Global& g, const std::string& file, const std::string& ideal_s) {
  ParamAlgebra pa = load_family(file);
  std::vector<Polynomial> ideal;
  for (const auto& s : split_list(ideal_s)) ideal.push_back(Polynomial::parse(s, &pa.params()));
  VersalCheck vc = verify_versal(pa, ideal);
  Json r = report_header("versal");
  r["family"] = family_section(pa);
  Json v;
  Json ij = Json::array();
  for (const auto& p : ideal) ij.push_back(p.to_string());
  v["ideal"] = std::move(ij);
  v["ok"] = vc.ok;
  Json viol = Json::array();
  for (const auto& m : vc.violating) viol.push_back(m.to_string());
  v["violating"] = std::move(viol);
  v["defect_components"] = vc.defect.size();
  v["defect"] = defects_json(vc.defect, pa.basis_names());
  r["versal"] = std::move(v);
  emit(r, g);
  return vc.ok ? 0 : 2;
}

int cmd_symbolic(const Global& g, const std::string& file) {
  ParamAlgebra pa = load_family(file);
  auto anti = antisymmetry_defect(pa);
  auto jac = jacobi_defect(pa);
  auto leib = leibniz_defect_sym(pa);
  Json r = report_header("symbolic");
  r["family"] = family_section(pa);
  Json s;
  s["antisymmetric"] = anti.empty();
  s["jacobi_holds"] = jac.empty();
  s["leibniz_holds"] = leib.empty();
  Json aj = Json::array();
  for (const auto& d : anti)
    aj.push_back(Json{{"left", pa.basis_names()[d.i]}, {"right", pa.basis_names()[d.j]}, {"out", pa.basis_names()[d.k]},
                      {"value", d.value.to_string()}});
  s["antisymmetry_defect"] = std::move(aj);
  s["jacobi_defect"] = defects_json(jac, pa.basis_names());
  s["leibniz_defect"] = defects_json(leib, pa.basis_names());
  r["symbolic"] = std::move(s);
  emit(r, g);
  const bool ok = pa.kind() == AlgebraKind::lie ? (anti.empty() && jac.empty()) : leib.empty();
  return ok ? 0 : 2;
}

int cmd_specialize(const Global& g, const std::string& file, const std::string& at) {
  ParamAlgebra pa = load_family(file);
  std::map<std::string, Scalar> values;
  for (const auto& item : split_list(at)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--at: expected name=value, got '" + item + "'");
    values[item.substr(0, eq)] = Scalar::parse(item.substr(eq + 1));
  }
  emit(io::to_json(specialize(pa, values)), g, true);
  return 0;
}

int cmd_catalog(const Global& g, const std::string& name, const std::vector<long>& params, bool list) {
  if (list) {
    Json j;
    j["algebras"] = catalog::names();
    j["families"] = families::names();
    emit(j, g, true);
    return 0;
  }
  if (name.empty()) throw ParseError("catalog: a name is required (or --list)");
  for (const auto& f : families::names())
    if (f.substr(0, f.find('(')) == name) {
      emit(io::to_json(families::lookup(name, params)), g, true);
      return 0;
    }
  emit(io::to_json(catalog::lookup(name, params)), g, true);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie and Leibniz cohomology, Koszul decomposition and deformation obstructions"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads for matrix assembly")->check(CLI::PositiveNumber);
  app.add_flag("--force", g.force, "Lift the size guards on degree-3 computations");

  std::string file = "-";
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Algebra document ('-' or omitted: stdin)"); };

  auto* validate_cmd = app.add_subcommand("validate", "Check the identities of an algebra and report its invariants");
  add_file(validate_cmd);

  std::string coeff = "adjoint";
  int deg = 2;
  bool lie = false;
  bool reps = false;
  auto* coh = app.add_subcommand("cohomology", "Cocycle, coboundary and cohomology dimensions");
  add_file(coh);
  coh->add_option("--coeff", coeff, "Coefficients")->check(CLI::IsMember({"adjoint", "trivial"}));
  coh->add_option("--deg", deg, "Degree")->check(CLI::Range(1, 3));
  auto* lie_flag = coh->add_flag("--lie", lie, "Chevalley-Eilenberg complex");
  coh->add_flag("--leibniz", "Leibniz complex (default)")->excludes(lie_flag);
  coh->add_flag("--reps", reps, "Include class representatives");

  auto* kos = app.add_subcommand("koszul", "Invariant forms, Koszul map and uncoupling predicates");
  add_file(kos);

  auto* dec = app.add_subcommand("decompose", "Split HL2 into H2, symmetric and coupled parts");
  add_file(dec);
  dec->add_option("--coeff", coeff, "Coefficients")->check(CLI::IsMember({"adjoint", "trivial"}));

  std::string gens;
  int order = 3;
  std::string cochains_file;
  bool witnesses = false;
  auto* mas = app.add_subcommand("massey", "Order-by-order obstruction ledger for a set of 2-cocycles");
  add_file(mas);
  mas->add_option("--generators", gens, "Comma-separated 1-based indices (default: all)");
  mas->add_option("--order", order, "Highest order")->check(CLI::Range(2, 8));
  mas->add_option("--cochains", cochains_file, "Cochain document to draw generators from (default: HL2 representatives)");
  mas->add_flag("--witnesses", witnesses, "Include coboundary witnesses");

  std::string ideal;
  auto* ver = app.add_subcommand("versal", "Check a parameterized bracket's defect against a monomial ideal");
  add_file(ver);
  ver->add_option("--ideal", ideal, "Comma-separated monomials, e.g. 't*u,s^2*w'");

  auto* sym = app.add_subcommand("symbolic", "Antisymmetry, Jacobi and Leibniz defects of a parameterized family");
  add_file(sym);

  std::string at;
  auto* spec = app.add_subcommand("specialize", "Evaluate a parameterized family at given parameter values");
  add_file(spec);
  spec->add_option("--at", at, "Comma-separated assignments, e.g. 'lambda=1,mu=-1'")->required();

  std::string name;
  std::vector<long> cat_params;
  bool list = false;
  auto* cat = app.add_subcommand("catalog", "Emit a built-in algebra or family document");
  cat->add_option("name", name, "Catalog name");
  cat->add_option("params", cat_params, "Integer parameters");
  cat->add_flag("--list", list, "List available names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*validate_cmd) return cmd_validate(g, file);
    if (*coh) return cmd_cohomology(g, file, coeff, deg, lie, reps);
    if (*kos) return cmd_koszul(g, file);
    if (*dec) return cmd_decompose(g, file, coeff);
    if (*mas) return cmd_massey(g, file, gens, order, cochains_file, witnesses);
    if (*ver) return cmd_versal(g, file, ideal);
    if (*sym) return cmd_symbolic(g, file);
    if (*spec) return cmd_specialize(g, file, at);
    if (*cat) return cmd_catalog(g, name, cat_params, list);
  } catch (const ValidationFailure& e) {
    std::cerr << "leibcoh: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "leibcoh: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
