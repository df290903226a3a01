#include "tvindex/io.hpp"

#include <fstream>
#include <sstream>

#include "tvindex/errors.hpp"

namespace tvi::io {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json rational_json(const Rational& r) { return to_string(r); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key + ": missing");
  return *it;
}

Integer as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<Integer>();
}

int as_int(const Json& j, const std::string& where) { return static_cast<int>(as_integer(j, where)); }

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<Integer>());
  if (!j.is_string()) throw ParseError(where + ": expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

template <class T, class Fn>
std::vector<T> as_list(const Json& j, const std::string& where, Fn&& each) {
  std::vector<T> out;
  std::size_t i = 0;
  for (const auto& item : as_array(j, where)) {
    out.push_back(each(item, where + "[" + std::to_string(i) + "]"));
    ++i;
  }
  return out;
}

WeightVector as_weight(const Json& j, const std::string& where) { return as_list<Integer>(j, where, as_integer); }

std::string where_of(const std::string& base, const char* key) { return base + "." + key; }

}  // namespace

Json to_json(const OperatorSetup& setup) {
  Json j;
  j["m"] = setup.m;
  j["operator_kind"] = to_string(setup.kind);
  j["tau"] = Json::array();
  for (const auto& t : setup.tau.entries) j["tau"].push_back(rational_json(t));
  j["points"] = Json::array();
  for (const auto& pt : setup.points) {
    Json p;
    p["name"] = pt.name;
    // The stored weights are the current ones, so their orientation sign is orientation_sign.
    p["base_orientation"] = pt.orientation_sign;
    p["group_sign"] = pt.group_sign;
    p["tangent_weights"] = Json::array();
    for (const auto& k : pt.tangent_weights) p["tangent_weights"].push_back(k);
    p["lines"] = Json::array();
    for (const auto& line : pt.lines) {
      p["lines"].push_back({{"a", line.a}, {"grading", line.grading}, {"epsilon", line.epsilon}});
    }
    j["points"].push_back(std::move(p));
  }
  return j;
}

OperatorSetup setup_from_json(const Json& j) {
  const std::string root = "setup";
  OperatorSetup setup;
  setup.m = as_int(field(j, "m", root), "m");
  if (j.contains("operator_kind")) setup.kind = parse_operator_kind(as_string(j["operator_kind"], "operator_kind"));
  setup.tau.entries = as_list<Rational>(field(j, "tau", root), "tau", as_rational);
  setup.points = as_list<FixedPointDatum>(field(j, "points", root), "points", [](const Json& pj, const std::string& w) {
    FixedPointDatum pt;
    pt.name = as_string(field(pj, "name", w), where_of(w, "name"));
    pt.base_orientation = pj.contains("base_orientation")
                              ? as_int(pj["base_orientation"], where_of(w, "base_orientation"))
                              : 1;
    pt.orientation_sign = pt.base_orientation;
    pt.group_sign = pj.contains("group_sign") ? as_int(pj["group_sign"], where_of(w, "group_sign")) : 1;
    pt.tangent_weights = as_list<WeightVector>(field(pj, "tangent_weights", w), where_of(w, "tangent_weights"), as_weight);
    pt.lines = as_list<BundleWeightLine>(field(pj, "lines", w), where_of(w, "lines"), [](const Json& lj, const std::string& lw) {
      BundleWeightLine line;
      line.a = as_weight(field(lj, "a", lw), where_of(lw, "a"));
      line.grading = as_int(field(lj, "grading", lw), where_of(lw, "grading"));
      line.epsilon = as_list<int>(field(lj, "epsilon", lw), where_of(lw, "epsilon"), as_int);
      return line;
    });
    return pt;
  });
  return setup;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

OperatorSetup read_setup(const std::filesystem::path& path) {
  const Json j = read_json(path);
  try {
    return setup_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_setup(const std::filesystem::path& path, const OperatorSetup& setup) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot write");
  out << dump(to_json(setup));
}

Json to_json(const ValidationReport& report) {
  return {{"ok", report.ok()}, {"issues", report.issues}};
}

Json to_json(const IndexResult& result, const WeightVector& b) {
  Json per_point = Json::array();
  for (const auto& p : result.per_point) per_point.push_back({{"point", p.point}, {"value", p.value}});
  return {{"b", b}, {"value", result.value}, {"per_point", per_point}};
}

Json to_json(const SignatureSum& result, const WeightVector& b) {
  Json per_point = Json::array();
  for (const auto& p : result.per_point) {
    Json terms = Json::array();
    for (const auto& t : p.terms) terms.push_back({{"subset", t.subset}, {"weight", t.weight}, {"count", t.count}});
    per_point.push_back(
        {{"point", p.point}, {"orientation_sign", p.orientation_sign}, {"value", p.value}, {"terms", terms}});
  }
  return {{"b", b}, {"value", result.value}, {"per_point", per_point}};
}

Json to_json(const SpectrumTable& table) {
  Json entries = Json::array();
  for (const auto& e : table.entries) {
    Json row = {{"lambda", to_string(e.lambda)},
                {"multiplicity", e.multiplicity},
                {"plus", e.plus},
                {"minus", e.minus}};
    if (table.mode == SpectrumMode::generic) row["formal"] = e.formal;
    entries.push_back(std::move(row));
  }
  return {{"mode", to_string(table.mode)}, {"entries", entries}, {"total_multiplicity", table.total_multiplicity()}};
}

Json to_json(const BranchingTable& table) {
  Json out = Json::array();
  for (const auto& [b, beta] : table.coefficients) out.push_back({{"b", b}, {"beta", to_string(beta)}});
  return out;
}

Json failures_to_json(const std::vector<SweepFailure>& failures) {
  Json out = Json::array();
  for (const auto& f : failures) out.push_back({{"b", f.b}, {"residual", f.residual}});
  return out;
}

BranchingTable branching_from_json(const Json& j) {
  BranchingTable table;
  std::size_t i = 0;
  for (const auto& rec : as_array(j, "table")) {
    const std::string w = "table[" + std::to_string(i++) + "]";
    const WeightVector b = as_weight(field(rec, "b", w), where_of(w, "b"));
    table.coefficients[b] += as_rational(field(rec, "beta", w), where_of(w, "beta"));
  }
  return table;
}

TorusIndex torus_index_from_json(const Json& j) {
  auto values = std::make_shared<std::map<WeightVector, std::optional<Integer>>>();
  std::size_t i = 0;
  for (const auto& rec : as_array(j, "torus_index")) {
    const std::string w = "torus_index[" + std::to_string(i++) + "]";
    const WeightVector b = as_weight(field(rec, "b", w), where_of(w, "b"));
    const Json& v = field(rec, "index", w);
    if (v.is_string()) {
      if (v.get<std::string>() != "inf") throw ParseError(where_of(w, "index") + ": expected an integer or \"inf\"");
      (*values)[b] = std::nullopt;
    } else {
      (*values)[b] = as_integer(v, where_of(w, "index"));
    }
  }
  return [values](const WeightVector& b) -> std::optional<Integer> {
    auto it = values->find(b);
    return it == values->end() ? std::optional<Integer>(0) : it->second;
  };
}

namespace {

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? std::string() : item.substr(first, last - first + 1));
  }
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

WeightVector parse_weight_list(std::string_view text) {
  WeightVector out;
  if (text.empty()) return out;
  for (const auto& item : split_commas(text)) {
    const Rational r = parse_rational(item);
    if (r.denominator() != 1) throw ParseError("expected integers, got \"" + item + "\"");
    out.push_back(r.numerator());
  }
  return out;
}

SlopeVector parse_slope_list(std::string_view text) {
  SlopeVector out;
  for (const auto& item : split_commas(text)) out.entries.push_back(parse_rational(item));
  return out;
}

}  // namespace tvi::io
