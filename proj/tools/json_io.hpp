// Copyright 2026 The Choquet Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON fixtures for the command line tool. Exact values are written as
// "p/q" strings next to a decimal rendering; loaders accept JSON numbers,
// "p/q" and decimal strings, and "inf".

#ifndef CHOQUET_TOOLS_JSON_IO_HPP
#define CHOQUET_TOOLS_JSON_IO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "choquet/convergence.hpp"
#include "choquet/duality.hpp"
#include "choquet/hausdorff.hpp"
#include "choquet/nesting.hpp"

namespace choquet::io {

using json = nlohmann::json;

/// A malformed document; the message starts with the JSON path.
class JsonError : public ValidationError {
 public:
  JsonError(const std::string& path, const std::string& what) : ValidationError(path + ": " + what) {}
};

inline std::string child(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
inline std::string child(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline json read_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open " + file);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(file + ": " + e.what());
  }
}

inline const json& member(const json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) throw JsonError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(path, "missing key \"" + std::string(key) + "\"");
  return *it;
}

inline long load_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw JsonError(path, "expected an integer");
  return j.get<long>();
}

// ---------------------------------------------------------------- loaders

/// A JSON number (read from its literal text, so 0.1 is 1/10), "p/q",
/// a decimal string, or "inf".
inline ExtReal load_value(const json& j, const std::string& path) {
  try {
    if (j.is_number()) return parse_rational(j.dump());
    if (j.is_string()) return parse_extended(j.get<std::string>());
  } catch (const ValidationError& e) {
    throw JsonError(path, e.what());
  }
  throw JsonError(path, "expected a number or a string");
}

inline Rational load_finite(const json& j, const std::string& path) {
  const ExtReal v = load_value(j, path);
  if (v.is_infinite()) throw JsonError(path, "expected a finite value");
  return v.value();
}

/// An array of values, or {"values": [...]}.
inline StepFunction load_function(const json& j, const std::string& path = "$") {
  const json& arr = j.is_object() ? member(j, "values", path) : j;
  const std::string apath = j.is_object() ? child(path, "values") : path;
  if (!arr.is_array() || arr.empty()) throw JsonError(apath, "expected a nonempty array of values");
  if (arr.size() > GroundSet::kMaxSize) throw JsonError(apath, "more than 24 points");
  std::vector<ExtReal> values;
  for (std::size_t i = 0; i < arr.size(); ++i) values.push_back(load_value(arr[i], child(apath, i)));
  try {
    return {GroundSet(static_cast<int>(values.size())), std::move(values)};
  } catch (const ValidationError& e) {
    throw JsonError(apath, e.what());
  }
}

/// An array of point indices, or {"mask": int}.
inline SubsetMask load_subset(const json& j, GroundSet u, const std::string& path) {
  if (j.is_object()) {
    const long m = load_integer(member(j, "mask", path), child(path, "mask"));
    if (m < 0 || static_cast<unsigned long>(m) > u.full_bits()) throw JsonError(child(path, "mask"), "mask out of range");
    return {u, static_cast<Mask>(m)};
  }
  if (!j.is_array()) throw JsonError(path, "expected an array of point indices");
  Mask bits = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const long x = load_integer(j[i], child(path, i));
    if (x < 0 || x >= u.size()) throw JsonError(child(path, i), "point " + std::to_string(x) + " outside the ground set");
    if ((bits >> x) & 1U) throw JsonError(child(path, i), "point " + std::to_string(x) + " listed twice");
    bits |= Mask{1} << x;
  }
  return {u, bits};
}

template <class T>
Extended<T> load_entry_value(const json& j, const std::string& path);

template <>
inline ExtReal load_entry_value<Rational>(const json& j, const std::string& path) {
  return load_value(j, path);
}

template <>
inline Extended<DyadicPowerSum> load_entry_value<DyadicPowerSum>(const json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return Extended<DyadicPowerSum>::infinity();
  if (j.is_number()) return DyadicPowerSum(load_finite(j, path));
  if (!j.is_string()) throw JsonError(path, "expected a number or a power sum string");
  try {
    return DyadicPowerSum::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw JsonError(path, e.what());
  }
}

template <class T>
struct Loaded {
  BasicCapacity<T> capacity;
  std::vector<std::string> warnings;
};

/// {"n": int, "entries": [{"set": [...] | "mask": int, "value": ...}]}.
/// Unlisted subsets get 0 with a warning; a subset listed twice is an error.
template <class T = Rational>
Loaded<T> load_capacity(const json& j, const std::string& path = "$") {
  const long n = load_integer(member(j, "n", path), child(path, "n"));
  if (n < 1 || n > GroundSet::kMaxSize) throw JsonError(child(path, "n"), "ground set size must be in [1, 24]");
  const GroundSet u(static_cast<int>(n));
  const json& entries = member(j, "entries", path);
  const std::string epath = child(path, "entries");
  if (!entries.is_array()) throw JsonError(epath, "expected an array");

  std::vector<Extended<T>> table(u.subset_count(), Extended<T>(T(0)));
  std::vector<char> seen(u.subset_count(), 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string ipath = child(epath, i);
    const json& e = entries[i];
    if (!e.is_object()) throw JsonError(ipath, "expected an object");
    const bool has_set = e.contains("set"), has_mask = e.contains("mask");
    if (has_set == has_mask) throw JsonError(ipath, "give exactly one of \"set\" and \"mask\"");
    const SubsetMask s = has_set ? load_subset(e["set"], u, child(ipath, "set"))
                                 : load_subset(json{{"mask", e["mask"]}}, u, ipath);
    if (seen[s.bits()]) throw JsonError(ipath, "duplicate entry for " + to_string(s));
    seen[s.bits()] = 1;
    table[s.bits()] = load_entry_value<T>(member(e, "value", ipath), child(ipath, "value"));
  }
  std::vector<std::string> warnings;
  const auto missing = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 0));
  if (missing > 0)
    warnings.push_back(std::to_string(missing) + " of " + std::to_string(u.subset_count()) +
                       " subsets not listed; they default to 0");
  try {
    return {BasicCapacity<T>(u, std::move(table)), std::move(warnings)};
  } catch (const ValidationError& e) {
    throw JsonError(epath, e.what());
  }
}

/// {"n": int, "sets": [[...], ...]}, or a bare array of sets whose ground
/// set is the smallest one containing every listed point.
inline std::vector<SubsetMask> load_sets(const json& j, const std::string& path = "$") {
  const json& arr = j.is_object() ? member(j, "sets", path) : j;
  const std::string apath = j.is_object() ? child(path, "sets") : path;
  if (!arr.is_array() || arr.empty()) throw JsonError(apath, "expected a nonempty array of sets");
  long n = 0;
  if (j.is_object()) {
    n = load_integer(member(j, "n", path), child(path, "n"));
  } else {
    for (const auto& s : arr)
      if (s.is_array())
        for (const auto& x : s)
          if (x.is_number_integer()) n = std::max(n, x.get<long>() + 1);
    n = std::max(n, 1L);
  }
  if (n < 1 || n > GroundSet::kMaxSize) throw JsonError(path, "ground set size must be in [1, 24]");
  const GroundSet u(static_cast<int>(n));
  std::vector<SubsetMask> sets;
  for (std::size_t i = 0; i < arr.size(); ++i) sets.push_back(load_subset(arr[i], u, child(apath, i)));
  return sets;
}

/// {"terms": [[...], ...], "limit": [...], "schedule": [{"eps": q, "set": [...]}]}.
inline FunctionSequence load_sequence(const json& j, const std::string& path = "$") {
  const json& terms = member(j, "terms", path);
  if (!terms.is_array() || terms.empty()) throw JsonError(child(path, "terms"), "expected a nonempty array");
  std::vector<StepFunction> fs;
  for (std::size_t i = 0; i < terms.size(); ++i) fs.push_back(load_function(terms[i], child(child(path, "terms"), i)));
  StepFunction limit = load_function(member(j, "limit", path), child(path, "limit"));
  std::vector<ScheduleEntry> schedule;
  if (j.contains("schedule")) {
    const json& sch = j["schedule"];
    const std::string spath = child(path, "schedule");
    if (!sch.is_array()) throw JsonError(spath, "expected an array");
    for (std::size_t i = 0; i < sch.size(); ++i) {
      const std::string ipath = child(spath, i);
      schedule.push_back({load_finite(member(sch[i], "eps", ipath), child(ipath, "eps")),
                          load_subset(member(sch[i], "set", ipath), limit.universe(), child(ipath, "set"))});
    }
  }
  try {
    return {std::move(fs), std::move(limit), std::move(schedule)};
  } catch (const ValidationError& e) {
    throw JsonError(path, e.what());
  }
}

/// An array of coordinate tuples; in dimension 1 bare integers also work.
inline DyadicCellSet load_cells(const json& j, const DyadicDomain& dom, const std::string& path = "$") {
  if (!j.is_array()) throw JsonError(path, "expected an array of coordinate tuples");
  DyadicCellSet cells(dom);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ipath = child(path, i);
    std::vector<long> coords;
    if (j[i].is_array()) {
      for (std::size_t c = 0; c < j[i].size(); ++c) coords.push_back(load_integer(j[i][c], child(ipath, c)));
    } else {
      coords.push_back(load_integer(j[i], ipath));
    }
    try {
      cells.insert(dom.morton(coords, dom.depth()));
    } catch (const ValidationError& e) {
      throw JsonError(ipath, e.what());
    }
  }
  return cells;
}

// ---------------------------------------------------------------- writers

inline json to_json(const Rational& q) { return to_string(q); }
inline json to_json(const ExtReal& x) { return to_string(x); }
inline json to_json(const Extended<DyadicPowerSum>& x) {
  return x.is_infinite() ? json("inf") : json(x.value().to_string());
}
inline json to_json(const Gap& g) { return to_string(g); }

inline json decimal(const ExtReal& x) { return x.is_infinite() ? json("inf") : json(to_decimal(x.value(), 12)); }
inline json decimal(const Extended<DyadicPowerSum>& x) {
  return x.is_infinite() ? json("inf") : json(x.value().to_decimal(30));
}

/// {"value": "p/q", "decimal": "..."}.
template <class V>
json valued(const V& v) {
  return {{"value", to_json(v)}, {"decimal", decimal(v)}};
}

inline json to_json(const SubsetMask& s) { return s.points(); }

inline json to_json(const StepFunction& f) {
  json out = json::array();
  for (const auto& v : f.values()) out.push_back(to_json(v));
  return out;
}

inline json to_json(const std::vector<SubsetMask>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(to_json(s));
  return out;
}

/// All 2^n entries, in mask order.
template <class T>
json to_json(const BasicCapacity<T>& h) {
  json entries = json::array();
  for (std::size_t a = 0; a < h.size(); ++a) {
    const SubsetMask s(h.universe(), static_cast<Mask>(a));
    entries.push_back({{"set", to_json(s)}, {"value", to_json(h.at(static_cast<Mask>(a)))},
                       {"decimal", decimal(h.at(static_cast<Mask>(a)))}});
  }
  return {{"n", h.universe().size()}, {"entries", entries}};
}

inline json sets_json(const std::vector<SubsetMask>& sets) {
  return {{"n", sets.empty() ? 1 : sets.front().universe().size()}, {"sets", to_json(sets)}};
}

inline json to_json(const FunctionSequence& seq) {
  json terms = json::array();
  for (const auto& t : seq.terms()) terms.push_back(to_json(t));
  json schedule = json::array();
  for (const auto& e : seq.schedule()) schedule.push_back({{"eps", to_json(e.eps)}, {"set", to_json(e.set)}});
  return {{"terms", terms}, {"limit", to_json(seq.limit())}, {"schedule", schedule}};
}

template <class T>
json to_json(const BasicAxiomReport<T>& r) {
  json out = {{"axiom", axiom_name(r.axiom)}, {"holds", r.holds}};
  if (r.witness) {
    json sets = json::array(), values = json::array();
    for (const auto& s : r.witness->sets) sets.push_back(to_json(s));
    for (const auto& v : r.witness->values) values.push_back(to_json(v));
    out["witness"] = {{"sets", sets}, {"values", values}};
  }
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline json to_json(const IntegralValue& v, bool breakdown) {
  json out = valued(v.value);
  if (breakdown) {
    json layers = json::array();
    for (const auto& l : v.breakdown)
      layers.push_back({{"level", to_json(l.level)}, {"gap", to_json(l.gap)}, {"capacity", to_json(l.capacity)}});
    out["breakdown"] = layers;
  }
  return out;
}

inline json to_json(const SublinearityReport& r) {
  return {{"max_gap", to_json(r.max_gap)},
          {"argmax_f", to_json(r.argmax_f)},
          {"argmax_g", to_json(r.argmax_g)},
          {"strongly_subadditive", r.strong_subadditivity.holds},
          {"strong_subadditivity", to_json(r.strong_subadditivity)},
          {"consistent", r.consistent},
          {"pairs", r.pairs},
          {"indeterminate_pairs", r.indeterminate_pairs}};
}

inline json to_json(const AdditiveMeasure& mu) {
  json out = json::array();
  for (const auto& m : mu.masses()) out.push_back(to_json(m));
  return out;
}

inline json to_json(const DualityReport& r) {
  json out = {{"choquet_value", to_json(r.choquet_value)},
              {"dual_value", to_json(r.dual_value)},
              {"decimal", decimal(r.dual_value)},
              {"gap", to_json(r.gap)},
              {"method", method_name(r.method)},
              {"approach", approach_name(r.approach)},
              {"measure_dominated", r.measure_dominated},
              {"pivots", r.pivots}};
  if (r.dual_value.is_finite()) out["optimal_measure"] = to_json(r.optimal_measure);
  if (r.greedy_value) out["greedy_value"] = to_json(*r.greedy_value);
  return out;
}

inline json to_json(const SemifiniteDemo& d) {
  json out = {{"delegated", d.delegated}, {"choquet_value", to_json(d.choquet_value)}};
  if (d.direct) out["direct"] = to_json(*d.direct);
  if (d.infinite_superlevel) {
    out["level"] = to_json(d.level);
    out["infinite_superlevel"] = to_json(*d.infinite_superlevel);
  }
  json steps = json::array();
  for (const auto& s : d.steps)
    steps.push_back({{"target", to_json(s.target)},
                     {"witness", to_json(s.witness)},
                     {"capacity", to_json(s.capacity)},
                     {"bound", to_json(s.bound)},
                     {"choquet_value", to_json(s.choquet_value)},
                     {"dual_value", to_json(s.dual_value)},
                     {"witnessed", s.witnessed}});
  out["steps"] = steps;
  return out;
}

inline json to_json(const NamedCheck& c) {
  return {{"name", c.name}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)},
          {"relation", c.equality ? "==" : "<="}, {"holds", c.holds}};
}

inline json to_json(const ConvergenceAudit& a) {
  json out = {{"verdict", verdict_name(a.qu_verdict)}, {"all_hold", a.all_hold()}};
  if (a.minimal_bad_set) out["minimal_bad_set"] = to_json(*a.minimal_bad_set);
  if (a.witness_point) out["witness_point"] = *a.witness_point;
  if (a.witness_index) out["witness_index"] = *a.witness_index;
  json checks = json::array();
  for (const auto& c : a.checks) checks.push_back(to_json(c));
  out["checks"] = checks;
  if (!a.values.empty()) {
    json values = json::array(), envelope = json::array();
    for (const auto& v : a.values) values.push_back(to_json(v));
    for (const auto& v : a.envelope) envelope.push_back(to_json(v));
    out["values"] = values;
    out["envelope"] = envelope;
    out["stalled"] = a.stalled;
  }
  if (!a.notes.empty()) out["notes"] = a.notes;
  return out;
}

inline json to_json(const DyadicCube& c) { return {{"level", c.level}, {"coords", c.coords}}; }

inline json to_json(const CoverSolution& s) {
  json cubes = json::array();
  for (const auto& c : s.cubes) cubes.push_back(to_json(c));
  return {{"value", s.value.to_string()},
          {"decimal", s.value.to_decimal(30)},
          {"exact_rational", s.exact_rational},
          {"beta_above_dimension", s.beta_above_dimension},
          {"cubes", cubes}};
}

// ---------------------------------------------------------------- tables

/// Plain-text rendering: one "path: value" line per scalar.
inline void render_table(const json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_table(v, out, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    if (flat) {
      out << prefix << ": " << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], out, prefix + "[" + std::to_string(i) + "]");
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace choquet::io

#endif  // CHOQUET_TOOLS_JSON_IO_HPP
