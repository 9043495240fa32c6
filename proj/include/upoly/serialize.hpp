#pragma once

// Theory specs (JSON in), character tables (CSV or JSON out).

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "upoly/chars.hpp"

namespace upoly {

struct TheorySpec {
  long q = 2;
  std::vector<int> beta;
  std::vector<std::pair<int, int>> poset;
  bool poset_is_chain = false;
  bool close = false;
  unsigned long long budget = kDefaultBudget;
  unsigned long long oracle_budget = 1ULL << 24;

  Poset make_poset() const {
    const int l = static_cast<int>(beta.size());
    if (poset_is_chain) return Poset::chain(l);
    return Poset::from_pairs(l, poset, close);
  }

  UnipotentPolytope polytope() const { return UnipotentPolytope(Composition(beta), make_poset()); }
};

/// Reads a poset given as "chain", "empty", or a JSON array of [i, j] pairs.
inline void read_poset(TheorySpec& spec, const nlohmann::json& j) {
  spec.poset.clear();
  spec.poset_is_chain = false;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "chain") {
      spec.poset_is_chain = true;
    } else if (s != "empty") {
      throw ValidationError("poset must be \"chain\", \"empty\" or a list of pairs, got \"" + s + "\"");
    }
    return;
  }
  if (!j.is_array()) throw ValidationError("poset must be a list of [i, j] pairs");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ValidationError("poset entry " + e.dump() + " is not an integer pair");
    }
    spec.poset.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
}

inline std::vector<int> read_beta(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("beta must be a list of positive integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ValidationError("beta entry " + e.dump() + " is not an integer");
    out.push_back(e.get<int>());
  }
  return out;
}

inline TheorySpec parse_spec(const nlohmann::json& j) {
  TheorySpec spec;
  if (!j.is_object()) throw ValidationError("spec must be a JSON object");
  if (j.contains("q")) spec.q = j.at("q").get<long>();
  if (!j.contains("beta")) throw ValidationError("spec is missing \"beta\"");
  spec.beta = read_beta(j.at("beta"));
  if (j.contains("close")) spec.close = j.at("close").get<bool>();
  if (j.contains("poset")) {
    read_poset(spec, j.at("poset"));
  } else {
    spec.poset_is_chain = true;
  }
  if (j.contains("budget")) spec.budget = j.at("budget").get<unsigned long long>();
  if (j.contains("oracle_budget")) spec.oracle_budget = j.at("oracle_budget").get<unsigned long long>();
  if (spec.q < 2) throw ValidationError("q must be at least 2");
  return spec;
}

inline TheorySpec parse_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("spec is not valid JSON: ") + e.what());
  }
  try {
    return parse_spec(j);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("spec has a field of the wrong type: ") + e.what());
  }
}

namespace detail {
inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }
}  // namespace detail

/// First row: the mu index; second row: class sizes; then one row per lambda
/// with its degree followed by the values.
inline void write_csv(std::ostream& os, const CharTable& t) {
  os << "lambda,degree";
  for (const Tableau& mu : t.index) os << ',' << detail::csv_quote(mu.to_text());
  os << "\nclass_size,";
  for (const ExactScalar& c : t.class_sizes) os << ',' << c.str();
  os << '\n';
  for (std::size_t r = 0; r < t.index.size(); ++r) {
    os << detail::csv_quote(t.index[r].to_text()) << ',' << t.degrees[r].str();
    for (const ExactScalar& v : t.values[r]) os << ',' << v.str();
    os << '\n';
  }
}

/// Integers are written as decimal strings so that large values survive any
/// JSON reader.
inline nlohmann::ordered_json to_json(const CharTable& t) {
  nlohmann::ordered_json j;
  j["beta"] = t.beta.parts();
  nlohmann::ordered_json rel = nlohmann::ordered_json::array();
  for (const Cell& c : t.poset.cells()) rel.push_back({c.row, c.col});
  j["poset"] = rel;
  j["q"] = t.q;
  nlohmann::ordered_json idx = nlohmann::ordered_json::array();
  for (const Tableau& x : t.index) idx.push_back(x.to_text());
  j["index"] = idx;
  auto strings = [](const std::vector<ExactScalar>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const ExactScalar& x : v) a.push_back(x.str());
    return a;
  };
  j["degrees"] = strings(t.degrees);
  j["class_sizes"] = strings(t.class_sizes);
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (const auto& row : t.values) vals.push_back(strings(row));
  j["values"] = vals;
  return j;
}

inline void write_json(std::ostream& os, const CharTable& t) { os << to_json(t).dump(2) << '\n'; }

}  // namespace upoly
