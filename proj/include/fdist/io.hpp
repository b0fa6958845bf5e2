#pragma once

// Reading fuzzy-set input documents and writing result documents.
//
// An input document is a JSON object with a "sets" member mapping names to set
// descriptions of one of three kinds:
//
//   {"kind": "points", "points": [[1, 0], [3, 1], [5, 0]], "slices": 2}
//   {"kind": "discrete", "grades": {"a": 1.0, "b": 0.7, "c": "1/5"}}
//   {"kind": "mass", "focals": [{"intervals": [[1, 4]], "mass": 0.5},
//                               {"intervals": [], "mass": "1/2"}]}
//
// Mass focals may use "labels": ["a", "b"] instead of "intervals" for
// assignments over discrete elements. Numbers are read exactly: decimal
// literals keep their written value and strings may hold fractions.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fdist/errors.hpp"
#include "fdist/fuzzy.hpp"
#include "fdist/interval.hpp"
#include "fdist/labels.hpp"
#include "fdist/mass.hpp"
#include "fdist/rational.hpp"
#include "fdist/slicing.hpp"
#include "fdist/unification.hpp"

namespace fdist::io {

using Real = Rational;

// Syntax error in a document; the message carries line and column.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed document with invalid content; the message carries the field
// path, e.g. "sets.A.focals[1].mass".
class ValidationError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

struct ShapeSpec {
  PiecewiseShape<Real> shape;
  std::optional<std::size_t> slices;
};

using NamedSet = std::variant<ShapeSpec, DiscreteFuzzySet<Real>, NumericMass<Real>, LabelMass<Real>>;

struct SpecDocument {
  std::map<std::string, NamedSet> sets;

  const NamedSet& get(const std::string& name) const {
    auto it = sets.find(name);
    if (it == sets.end()) throw UnknownName("unknown set '" + name + "'");
    return it->second;
  }
};

namespace detail {

// DOM builder that keeps floating-point literals as their source text.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<nlohmann::json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<nlohmann::json>;
  using Base::Base;

  bool number_float(double, const std::string& text) {
    std::string copy = text;
    return Base::string(copy);
  }
};

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void invalid(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

inline Real read_number(const nlohmann::json& v, const std::string& path) {
  if (v.is_number_integer()) return Real(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Real::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      invalid(path, e.what());
    }
  }
  invalid(path, "expected a number");
}

inline const nlohmann::json& member(const nlohmann::json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(path, std::string("missing field '") + key + "'");
  return *it;
}

inline Interval<Real> read_interval(const nlohmann::json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) invalid(path, "expected [lo, hi]");
  Real lo = read_number(v[0], path + "[0]");
  Real hi = read_number(v[1], path + "[1]");
  if (hi < lo) invalid(path, "interval has lo > hi");
  return {lo, hi};
}

inline NamedSet read_set(const nlohmann::json& v, const std::string& path) {
  if (!v.is_object()) invalid(path, "expected an object");
  const auto& kind_v = member(v, "kind", path);
  if (!kind_v.is_string()) invalid(path + ".kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();

  try {
    if (kind == "points") {
      const auto& pts = member(v, "points", path);
      if (!pts.is_array() || pts.empty()) invalid(path + ".points", "expected a non-empty array");
      std::vector<PiecewiseShape<Real>::Vertex> vertices;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string at = path + ".points[" + std::to_string(i) + "]";
        if (!pts[i].is_array() || pts[i].size() != 2) invalid(at, "expected [x, mu]");
        vertices.push_back({read_number(pts[i][0], at + "[0]"), read_number(pts[i][1], at + "[1]")});
      }
      ShapeSpec spec{PiecewiseShape<Real>(std::move(vertices)), std::nullopt};
      if (auto it = v.find("slices"); it != v.end()) {
        if (!it->is_number_unsigned() || it->get<std::size_t>() == 0)
          invalid(path + ".slices", "expected a positive integer");
        spec.slices = it->get<std::size_t>();
      }
      return spec;
    }
    if (kind == "discrete") {
      const auto& grades = member(v, "grades", path);
      if (!grades.is_object()) invalid(path + ".grades", "expected an object");
      std::map<std::string, Real> out;
      for (const auto& [label, g] : grades.items()) out[label] = read_number(g, path + ".grades." + label);
      return DiscreteFuzzySet<Real>(std::move(out));
    }
    if (kind == "mass") {
      const auto& focals = member(v, "focals", path);
      if (!focals.is_array() || focals.empty()) invalid(path + ".focals", "expected a non-empty array");
      std::vector<NumericMass<Real>::Entry> numeric;
      std::vector<LabelMass<Real>::Entry> labelled;
      for (std::size_t i = 0; i < focals.size(); ++i) {
        std::string at = path + ".focals[" + std::to_string(i) + "]";
        const auto& f = focals[i];
        if (!f.is_object()) invalid(at, "expected an object");
        Real mass = read_number(member(f, "mass", at), at + ".mass");
        if (!(Real(0) < mass)) invalid(at + ".mass", "mass must be positive");
        if (auto it = f.find("labels"); it != f.end()) {
          if (!it->is_array()) invalid(at + ".labels", "expected an array of strings");
          std::vector<std::string> labels;
          for (const auto& l : *it) {
            if (!l.is_string()) invalid(at + ".labels", "expected an array of strings");
            labels.push_back(l.get<std::string>());
          }
          labelled.push_back({LabelSet(std::move(labels)), mass});
        } else {
          const auto& ivs = member(f, "intervals", at);
          if (!ivs.is_array()) invalid(at + ".intervals", "expected an array of [lo, hi]");
          std::vector<Interval<Real>> raw;
          for (std::size_t k = 0; k < ivs.size(); ++k)
            raw.push_back(read_interval(ivs[k], at + ".intervals[" + std::to_string(k) + "]"));
          numeric.push_back({IntervalUnion<Real>(std::move(raw)), mass});
        }
      }
      if (!numeric.empty() && !labelled.empty()) invalid(path + ".focals", "mixes intervals and labels");
      if (!labelled.empty()) return LabelMass<Real>::make(std::move(labelled));
      return NumericMass<Real>::make(std::move(numeric));
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const InvalidInput& e) {
    invalid(path, e.what());
  }
  invalid(path + ".kind", "unknown kind '" + kind + "' (expected points, discrete or mass)");
}

}  // namespace detail

inline SpecDocument parse_spec(std::string_view text) {
  nlohmann::json root;
  detail::ExactSax sax(root, true);
  try {
    nlohmann::json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("parse error at " + detail::line_col(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) detail::invalid("$", "expected a JSON object");
  const auto& sets = detail::member(root, "sets", "$");
  if (!sets.is_object()) detail::invalid("sets", "expected an object");
  SpecDocument doc;
  for (const auto& [name, value] : sets.items()) doc.sets.emplace(name, detail::read_set(value, "sets." + name));
  return doc;
}

// ---- output ---------------------------------------------------------------

using Document = nlohmann::ordered_json;

// A JSON number when the decimal form round-trips exactly, else a string
// holding the exact fraction.
inline Document number(const Real& r) {
  if (r.den() == 1) return r.num();
  if (r.is_terminating_decimal()) {
    Document d = r.to_double();
    try {
      if (Real::parse(d.dump()) == r) return d;
    } catch (const std::exception&) {
    }
  }
  return r.to_fraction_string();
}

// Exact decimal text where possible, otherwise 12 significant digits.
inline std::string decimal_text(const Real& r) {
  if (r.is_terminating_decimal()) return r.to_string();
  std::ostringstream os;
  os.precision(12);
  os << r.to_double();
  return os.str();
}

inline Document intervals(const IntervalUnion<Real>& u) {
  Document out = Document::array();
  for (const auto& p : u.parts()) out.push_back(Document::array({number(p.lo), number(p.hi)}));
  return out;
}

// A "mass"-kind set description; valid input for parse_spec.
inline Document mass_set(const NumericMass<Real>& m) {
  Document focals = Document::array();
  for (const auto& e : m.entries()) focals.push_back({{"intervals", intervals(e.focal)}, {"mass", number(e.mass)}});
  return {{"kind", "mass"}, {"focals", std::move(focals)}};
}

inline Document mass_set(const LabelMass<Real>& m) {
  Document focals = Document::array();
  for (const auto& e : m.entries()) {
    Document labels = Document::array();
    for (const auto& l : e.focal.labels()) labels.push_back(l);
    focals.push_back({{"labels", std::move(labels)}, {"mass", number(e.mass)}});
  }
  return {{"kind", "mass"}, {"focals", std::move(focals)}};
}

inline Document fuzzy_steps(const NumericFuzzySet<Real>& f) {
  Document out = Document::array();
  for (const auto& s : f.steps()) {
    out.push_back({{"lo", number(s.region.lo)},
                   {"hi", number(s.region.hi)},
                   {"lo_closed", s.lo_closed},
                   {"hi_closed", s.hi_closed},
                   {"mu", number(s.grade)}});
  }
  return out;
}

inline Document truth(const TruthAssignment<Real>& t) {
  Document out = Document::object();
  for (TruthLabel label : kTruthLabels) out[to_string(label)] = number(t[label]);
  return out;
}

// "x,mu" rows sampled every `step` from the support hull's left end.
inline std::string plot_csv(const NumericFuzzySet<Real>& f, const Real& step) {
  if (!(Real(0) < step)) throw InvalidInput("plot step must be positive");
  std::string out = "x,mu\n";
  auto hull = f.support_hull();
  if (!hull) return out;
  for (Real x = hull->lo; x <= hull->hi; x += step) out += decimal_text(x) + "," + decimal_text(f.membership(x)) + "\n";
  return out;
}

}  // namespace fdist::io
