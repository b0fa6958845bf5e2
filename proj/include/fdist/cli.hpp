#pragma once

// The commands behind the fdist executable, callable in-process.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fdist/defuzz.hpp"
#include "fdist/distance.hpp"
#include "fdist/io.hpp"
#include "fdist/restriction.hpp"
#include "fdist/unification.hpp"

namespace fdist::cli {

using io::Document;
using io::Real;

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::size_t slice_count(const io::ShapeSpec& s, std::optional<std::size_t> flag) {
  if (flag) return *flag;
  return s.slices.value_or(kDefaultSlices);
}

// Numeric view of a named set: shapes are sliced, masses pass through.
inline FuzzyInput<Real> numeric_input(const io::SpecDocument& doc, const std::string& name,
                                      std::optional<std::size_t> slices) {
  const auto& set = doc.get(name);
  if (const auto* s = std::get_if<io::ShapeSpec>(&set)) return slice_shape(s->shape, slice_count(*s, slices));
  if (const auto* m = std::get_if<NumericMass<Real>>(&set)) return *m;
  throw UsageError("set '" + name + "' is not numeric (expected kind points or interval mass)");
}

inline LabelMass<Real> label_input(const io::SpecDocument& doc, const std::string& name) {
  const auto& set = doc.get(name);
  if (const auto* d = std::get_if<DiscreteFuzzySet<Real>>(&set)) return mass_from_discrete(*d);
  if (const auto* m = std::get_if<LabelMass<Real>>(&set)) return *m;
  throw UsageError("set '" + name + "' is not discrete (expected kind discrete or labelled mass)");
}

inline NumericMass<Real> mass_input(const io::SpecDocument& doc, const std::string& name) {
  const auto& set = doc.get(name);
  if (const auto* m = std::get_if<NumericMass<Real>>(&set)) return *m;
  throw UsageError("set '" + name + "' is not an interval mass assignment");
}

}  // namespace detail

inline Document cmd_mass(const io::SpecDocument& doc, const std::string& name, std::optional<std::size_t> slices) {
  Document out{{"command", "mass"}, {"name", name}};
  const auto& set = doc.get(name);
  if (std::holds_alternative<DiscreteFuzzySet<Real>>(set) || std::holds_alternative<LabelMass<Real>>(set)) {
    out["sets"] = Document{{name, io::mass_set(detail::label_input(doc, name))}};
    return out;
  }
  NumericMass<Real> m = to_mass(detail::numeric_input(doc, name, slices));
  out["sets"] = Document{{name, io::mass_set(m)}};
  out["fuzzy"] = io::fuzzy_steps(fuzzy_from_mass(m));
  return out;
}

struct DistanceFlags {
  bool directional = false;
  std::optional<Strategy> strategy;
  std::optional<std::size_t> slices;
};

inline DistanceResult<Real> run_distance(const io::SpecDocument& doc, const std::string& a, const std::string& b,
                                         const DistanceFlags& flags, Strategy* used = nullptr) {
  FuzzyInput<Real> left = detail::numeric_input(doc, a, flags.slices);
  FuzzyInput<Real> right = detail::numeric_input(doc, b, flags.slices);
  DistanceOptions options;
  options.directional = flags.directional;
  options.strategy = flags.strategy.value_or(default_strategy(left, right));
  if (used) *used = options.strategy;
  return distance(left, right, options);
}

inline Document cmd_distance(const io::SpecDocument& doc, const std::string& a, const std::string& b,
                             const DistanceFlags& flags) {
  Strategy used{};
  DistanceResult<Real> result = run_distance(doc, a, b, flags, &used);
  const std::string label = "D(" + a + "," + b + ")";
  return Document{{"command", "distance"},
                  {"a", a},
                  {"b", b},
                  {"directional", flags.directional},
                  {"strategy", to_string(used)},
                  {"sets", Document{{label, io::mass_set(result.mass)}}},
                  {"fuzzy", io::fuzzy_steps(result.fuzzy)},
                  {"height", io::number(result.fuzzy.height())}};
}

enum class Routing { Product, Maximal, Both };

inline Document cmd_unify(const io::SpecDocument& doc, const std::string& claim, const std::string& evidence,
                          Routing routing) {
  LabelMass<Real> a = detail::label_input(doc, claim);
  LabelMass<Real> g = detail::label_input(doc, evidence);
  Document out{{"command", "unify"}, {"claim", claim}, {"evidence", evidence}};
  if (routing != Routing::Maximal) out["product"] = io::truth(unify_product(a, g));
  if (routing != Routing::Product) out["maximal"] = io::truth(unify_maximal(a, g));
  return out;
}

inline Document cmd_defuzz(const io::SpecDocument& doc, const std::string& name, std::optional<std::size_t> slices) {
  NumericMass<Real> m = to_mass(detail::numeric_input(doc, name, slices));
  return Document{{"command", "defuzz"},
                  {"name", name},
                  {"max_likelihood", io::intervals(max_likelihood_interval(m))},
                  {"centre_of_gravity", io::number(centre_of_gravity(fuzzy_from_mass(m)))}};
}

inline Document cmd_restrict_check(const io::SpecDocument& doc, const std::string& target,
                                   const std::vector<std::string>& basis) {
  if (basis.empty()) throw UsageError("restrict-check needs at least one basis set");
  NumericMass<Real> t = detail::mass_input(doc, target);
  std::vector<NumericMass<Real>> members;
  for (const auto& name : basis) members.push_back(detail::mass_input(doc, name));

  Document out{{"command", "restrict-check"}, {"target", target}, {"basis", basis}};
  if (auto coefficients = linear_combination(t, members)) {
    Document c = Document::object();
    for (std::size_t i = 0; i < basis.size(); ++i) c[basis[i]] = io::number((*coefficients)[i]);
    out["linear_combination"] = std::move(c);
  } else {
    out["linear_combination"] = nullptr;
  }
  Document reach = Document::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    reach.push_back({{"from", basis[i]}, {"to", target}, {"reachable", reachable_type1(members[i], t)}});
    reach.push_back({{"from", target}, {"to", basis[i]}, {"reachable", reachable_type1(t, members[i])}});
  }
  out["reachable_type1"] = std::move(reach);
  return out;
}

inline std::string cmd_plot(const io::SpecDocument& doc, const std::string& name, const Real& step,
                            std::optional<std::size_t> slices) {
  NumericMass<Real> m = to_mass(detail::numeric_input(doc, name, slices));
  return io::plot_csv(fuzzy_from_mass(m), step);
}

}  // namespace fdist::cli
