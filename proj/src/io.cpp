#include "medianlab/io.hpp"

#include <fstream>

#include "medianlab/errors.hpp"

namespace medianlab::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw MedianError(ErrorCode::InvalidInput, what); }

}  // namespace

MedianAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) bad("algebra must be a JSON object");
  const bool has_table = j.contains("median");
  const bool has_embedding = j.contains("embedding");
  if (has_table == has_embedding) bad("exactly one of \"median\" and \"embedding\" is required");

  if (has_embedding) {
    const Json& e = j.at("embedding");
    if (!e.is_array() || e.empty()) bad("\"embedding\" must be a nonempty array of bit-strings");
    std::vector<PointSet> coords;
    for (const Json& row : e) {
      if (!row.is_string()) bad("embedding entries must be strings");
      const std::string bits = row.get<std::string>();
      if (bits.find_first_not_of("01") != std::string::npos) {
        bad("embedding entry '" + bits + "' is not a bit-string");
      }
      coords.push_back(from_bitstring(bits));
    }
    if (j.contains("n") && j.at("n") != coords.size()) bad("\"n\" disagrees with the embedding");
    return MedianAlgebra::from_embedding(std::move(coords));
  }

  if (!j.contains("n") || !j.at("n").is_number_unsigned()) bad("\"n\" must be a positive integer");
  const auto n = j.at("n").get<std::size_t>();
  const Json& t = j.at("median");
  if (!t.is_array()) bad("\"median\" must be an array");
  std::vector<Point> table;
  table.reserve(t.size());
  for (const Json& v : t) {
    if (!v.is_number_unsigned()) bad("median table entries must be nonnegative integers");
    table.push_back(v.get<Point>());
  }
  return MedianAlgebra::from_table(n, std::move(table));
}

Json algebra_to_json(const MedianAlgebra& m) {
  Json j;
  if (m.has_embedding()) {
    Json rows = Json::array();
    for (Point x = 0; x < m.size(); ++x) rows.push_back(to_bitstring(m.coordinates(x)));
    j["embedding"] = std::move(rows);
  } else {
    j["n"] = m.size();
    j["median"] = m.table();
  }
  return j;
}

ActionFile action_from_json(const MedianAlgebra& m, const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_object()) {
    bad("action file needs a \"generators\" object");
  }
  std::vector<std::string> names;
  std::vector<Permutation> gens;
  for (const auto& [name, perm] : j.at("generators").items()) {
    if (!perm.is_array()) bad("generator '" + name + "' must be a point array");
    Permutation p;
    for (const Json& v : perm) {
      if (!v.is_number_unsigned()) bad("generator '" + name + "' has a non-point entry");
      p.push_back(v.get<Point>());
    }
    names.push_back(name);
    gens.push_back(std::move(p));
  }
  ActionFile out{GroupAction::validated(m, std::move(names), std::move(gens)), std::nullopt};
  if (j.contains("mu")) {
    if (!j.at("mu").is_object()) bad("\"mu\" must map words to fractions");
    std::vector<std::pair<std::string, Rational>> entries;
    for (const auto& [word, w] : j.at("mu").items()) {
      if (!w.is_string()) bad("weight of '" + word + "' must be a \"p/q\" string");
      entries.emplace_back(word, parse_rational(w.get<std::string>()));
    }
    out.mu = GroupMeasure::from_words(out.action, entries);
  }
  return out;
}

Json action_to_json(const GroupAction& action, const GroupMeasure* mu) {
  Json j;
  Json gens = Json::object();
  for (std::size_t i = 0; i < action.generator_count(); ++i) {
    gens[action.name(i)] = action.generator(i);
  }
  j["generators"] = std::move(gens);
  if (mu) {
    Json weights = Json::object();
    for (std::size_t i = 0; i < mu->words().size(); ++i) {
      weights[mu->words()[i]] = format_rational(mu->weights()[i]);
    }
    j["mu"] = std::move(weights);
  }
  return j;
}

Json measure_to_json(const Measure& eta) {
  Json out = Json::array();
  for (const Rational& w : eta.weights()) out.push_back(format_rational(w));
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

namespace {

template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const MedianError& e) {
    throw MedianError(e.code(), path + ": " + e.detail());
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace

MedianAlgebra read_algebra(const std::string& path) {
  const Json j = read_json(path);
  return with_path(path, [&] { return algebra_from_json(j); });
}

ActionFile read_action(const MedianAlgebra& m, const std::string& path) {
  const Json j = read_json(path);
  return with_path(path, [&] { return action_from_json(m, j); });
}

}  // namespace medianlab::io
