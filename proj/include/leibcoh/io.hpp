#ifndef LEIBCOH_IO_HPP
#define LEIBCOH_IO_HPP

// JSON documents for algebras, parameterized families and cochains.
//
// Algebra document:
//   {"dim": 3, "kind": "lie", "basis": ["x1","x2","x3"],
//    "brackets": [{"left": "x1", "right": "x2",
//                  "value": [{"basis": "x3", "coeff": "1"}]}, ...]}
// Omitted brackets are zero; both orders of a Lie bracket are listed. A
// parameterized family adds "params": ["p", ...] and its coeff strings are
// polynomial expressions in those parameters.

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include "leibcoh/algebra.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/polyverify.hpp"

namespace leibcoh::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors name the source, line and column.
inline Json parse_json(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

namespace detail {

[[noreturn]] inline void field_error(const std::string& path, const std::string& why) {
  throw ParseError("field '" + path + "': " + why);
}

inline const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

inline std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

inline std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) field_error(path, "expected a string");
  return j.get<std::string>();
}

// Scalars may also be written as bare JSON integers.
inline std::string coeff_text(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  return as_string(j, path);
}

struct Header {
  std::size_t dim = 0;
  AlgebraKind kind = AlgebraKind::lie;
  std::vector<std::string> basis;
  std::vector<std::string> params;
};

inline Header read_header(const Json& doc) {
  Header h;
  if (!doc.is_object()) field_error("", "algebra document must be a JSON object");
  const Json& dim = require(doc, "dim", "");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) field_error("dim", "expected a positive integer");
  h.dim = dim.get<std::size_t>();
  if (auto it = doc.find("kind"); it != doc.end()) {
    std::string k = as_string(*it, "kind");
    if (k == "lie") {
      h.kind = AlgebraKind::lie;
    } else if (k == "leibniz") {
      h.kind = AlgebraKind::leibniz;
    } else {
      field_error("kind", "expected \"lie\" or \"leibniz\", got \"" + k + "\"");
    }
  }
  if (auto it = doc.find("basis"); it != doc.end()) {
    if (!it->is_array()) field_error("basis", "expected an array of names");
    for (std::size_t i = 0; i < it->size(); ++i) h.basis.push_back(as_string((*it)[i], "basis[" + std::to_string(i) + "]"));
    if (h.basis.size() != h.dim)
      field_error("basis", "has " + std::to_string(h.basis.size()) + " names but dim is " + std::to_string(h.dim));
    for (std::size_t i = 0; i < h.basis.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (h.basis[i] == h.basis[j]) field_error("basis", "duplicate name '" + h.basis[i] + "'");
  } else {
    for (std::size_t i = 0; i < h.dim; ++i) h.basis.push_back("x" + std::to_string(i + 1));
  }
  if (auto it = doc.find("params"); it != doc.end()) {
    if (!it->is_array()) field_error("params", "expected an array of names");
    for (std::size_t i = 0; i < it->size(); ++i) h.params.push_back(as_string((*it)[i], "params[" + std::to_string(i) + "]"));
  }
  return h;
}

inline std::size_t basis_index(const Header& h, const std::string& name, const std::string& path) {
  for (std::size_t i = 0; i < h.basis.size(); ++i)
    if (h.basis[i] == name) return i;
  field_error(path, "unknown basis element '" + name + "'");
}

// Calls set(i, j, k, coeff_text, path) for every bracket term.
template <class Set>
void read_brackets(const Json& doc, const Header& h, Set set) {
  auto it = doc.find("brackets");
  if (it == doc.end()) return;
  if (!it->is_array()) field_error("brackets", "expected an array");
  std::vector<bool> seen(h.dim * h.dim);
  for (std::size_t b = 0; b < it->size(); ++b) {
    const std::string path = "brackets[" + std::to_string(b) + "]";
    const Json& entry = (*it)[b];
    std::size_t i = basis_index(h, as_string(require(entry, "left", path), join(path, "left")), join(path, "left"));
    std::size_t j = basis_index(h, as_string(require(entry, "right", path), join(path, "right")), join(path, "right"));
    if (seen[i * h.dim + j]) field_error(path, "duplicate bracket [" + h.basis[i] + "," + h.basis[j] + "]");
    seen[i * h.dim + j] = true;
    const Json& value = require(entry, "value", path);
    if (!value.is_array()) field_error(join(path, "value"), "expected an array");
    for (std::size_t t = 0; t < value.size(); ++t) {
      const std::string tp = join(path, "value[" + std::to_string(t) + "]");
      std::size_t k = basis_index(h, as_string(require(value[t], "basis", tp), join(tp, "basis")), join(tp, "basis"));
      set(i, j, k, coeff_text(require(value[t], "coeff", tp), join(tp, "coeff")), join(tp, "coeff"));
    }
  }
}

template <class Coeff, class IsZero, class Text>
Json write_document(std::size_t d, AlgebraKind kind, const std::vector<std::string>& basis,
                    const std::vector<std::string>* params, Coeff coeff, IsZero is_zero, Text text) {
  Json doc;
  doc["dim"] = d;
  doc["kind"] = to_string(kind);
  doc["basis"] = basis;
  if (params != nullptr) doc["params"] = *params;
  Json brackets = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Json value = Json::array();
      for (std::size_t k = 0; k < d; ++k)
        if (!is_zero(coeff(i, j, k))) value.push_back(Json{{"basis", basis[k]}, {"coeff", text(coeff(i, j, k))}});
      if (!value.empty()) brackets.push_back(Json{{"left", basis[i]}, {"right", basis[j]}, {"value", std::move(value)}});
    }
  doc["brackets"] = std::move(brackets);
  return doc;
}

}  // namespace detail

inline bool is_parameterized(const Json& doc) {
  auto it = doc.find("params");
  return it != doc.end() && it->is_array() && !it->empty();
}

inline AlgebraSpec algebra_from_json(const Json& doc) {
  detail::Header h = detail::read_header(doc);
  if (!h.params.empty()) detail::field_error("params", "parameterized family given where a plain algebra is expected");
  AlgebraSpec g(h.dim, h.kind, h.basis);
  detail::read_brackets(doc, h, [&](std::size_t i, std::size_t j, std::size_t k, const std::string& text,
                                    const std::string& path) {
    try {
      g.c(i, j, k) += Scalar::parse(text);
    } catch (const Error& e) {
      detail::field_error(path, e.what());
    }
  });
  return g;
}

inline ParamAlgebra param_algebra_from_json(const Json& doc) {
  detail::Header h = detail::read_header(doc);
  ParamAlgebra pa(h.dim, h.params, h.kind, h.basis);
  detail::read_brackets(doc, h, [&](std::size_t i, std::size_t j, std::size_t k, const std::string& text,
                                    const std::string& path) {
    try {
      pa.c(i, j, k) += Polynomial::parse(text, &pa.params());
    } catch (const Error& e) {
      detail::field_error(path, e.what());
    }
  });
  return pa;
}

inline Json to_json(const AlgebraSpec& g) {
  return detail::write_document(
      g.dim(), g.kind(), g.basis_names(), nullptr, [&](auto i, auto j, auto k) -> const Scalar& { return g.c(i, j, k); },
      [](const Scalar& s) { return s.is_zero(); }, [](const Scalar& s) { return s.to_string(); });
}

inline Json to_json(const ParamAlgebra& pa) {
  return detail::write_document(
      pa.dim(), pa.kind(), pa.basis_names(), &pa.params(),
      [&](auto i, auto j, auto k) -> const Polynomial& { return pa.c(i, j, k); },
      [](const Polynomial& p) { return p.is_zero(); }, [](const Polynomial& p) { return p.to_string(); });
}

/// Sparse cochain: [{"out": name, "args": [names], "coeff": "..."}] over
/// nonzero coordinates in index order; "out" is omitted for trivial coefficients.
inline Json cochain_to_json(const Cochain& c, const std::vector<std::string>& names) {
  const CochainScheme& s = c.scheme();
  Json out = Json::array();
  for (std::size_t idx = 0; idx < s.total_dim(); ++idx) {
    const Scalar& x = c.coords()[idx];
    if (x.is_zero()) continue;
    std::vector<std::size_t> slots;
    const std::size_t k = s.decode(idx, slots);
    Json e;
    if (s.coeff == Coefficients::adjoint) e["out"] = names[k];
    Json args = Json::array();
    for (std::size_t a : slots) args.push_back(names[a]);
    e["args"] = std::move(args);
    e["coeff"] = x.to_string();
    out.push_back(std::move(e));
  }
  return out;
}

inline Cochain cochain_from_json(const Json& entries, const CochainScheme& s, const std::vector<std::string>& names,
                                 const std::string& path = "entries") {
  if (!entries.is_array()) detail::field_error(path, "expected an array");
  detail::Header h;
  h.dim = names.size();
  h.basis = names;
  Cochain c(s);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string ep = path + "[" + std::to_string(e) + "]";
    const Json& entry = entries[e];
    std::size_t k = 0;
    if (s.coeff == Coefficients::adjoint)
      k = detail::basis_index(h, detail::as_string(detail::require(entry, "out", ep), detail::join(ep, "out")),
                              detail::join(ep, "out"));
    const Json& args = detail::require(entry, "args", ep);
    if (!args.is_array() || args.size() != s.degree)
      detail::field_error(detail::join(ep, "args"), "expected " + std::to_string(s.degree) + " basis names");
    std::vector<std::size_t> slots;
    for (std::size_t a = 0; a < args.size(); ++a) {
      const std::string ap = detail::join(ep, "args[" + std::to_string(a) + "]");
      slots.push_back(detail::basis_index(h, detail::as_string(args[a], ap), ap));
    }
    const std::string cp = detail::join(ep, "coeff");
    try {
      c.at(k, slots) += Scalar::parse(detail::coeff_text(detail::require(entry, "coeff", ep), cp));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      detail::field_error(cp, err.what());
    }
  }
  return c;
}

/// Named cochain list: {"degree": 2, "coefficients": "adjoint",
/// "cochains": [{"name": "phi", "entries": [...]}, ...]}.
inline std::vector<std::pair<std::string, Cochain>> cochains_from_json(const Json& doc,
                                                                        const std::vector<std::string>& names) {
  const Json& deg = detail::require(doc, "degree", "");
  if (!deg.is_number_integer() || deg.get<long long>() < 1) detail::field_error("degree", "expected a positive integer");
  Coefficients coeff = Coefficients::adjoint;
  if (auto it = doc.find("coefficients"); it != doc.end()) {
    std::string c = detail::as_string(*it, "coefficients");
    if (c == "trivial") {
      coeff = Coefficients::trivial;
    } else if (c != "adjoint") {
      detail::field_error("coefficients", "expected \"adjoint\" or \"trivial\"");
    }
  }
  CochainScheme s{deg.get<std::size_t>(), coeff, names.size()};
  const Json& list = detail::require(doc, "cochains", "");
  if (!list.is_array()) detail::field_error("cochains", "expected an array");
  std::vector<std::pair<std::string, Cochain>> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = "cochains[" + std::to_string(i) + "]";
    std::string name = "c" + std::to_string(i + 1);
    if (auto it = list[i].find("name"); list[i].is_object() && it != list[i].end()) name = detail::as_string(*it, p + ".name");
    out.emplace_back(name, cochain_from_json(detail::require(list[i], "entries", p), s, names, p + ".entries"));
  }
  return out;
}

inline Json cochains_to_json(const std::vector<std::pair<std::string, Cochain>>& list,
                             const std::vector<std::string>& names) {
  Json doc;
  if (list.empty()) {
    doc["degree"] = 2;
    doc["coefficients"] = "adjoint";
  } else {
    doc["degree"] = list.front().second.scheme().degree;
    doc["coefficients"] = to_string(list.front().second.scheme().coeff);
  }
  Json arr = Json::array();
  for (const auto& [n, c] : list) arr.push_back(Json{{"name", n}, {"entries", cochain_to_json(c, names)}});
  doc["cochains"] = std::move(arr);
  return doc;
}

}  // namespace leibcoh::io

#endif
