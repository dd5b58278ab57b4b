#include "bbgroup/group_spec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bbgroup/error.hpp"

namespace bbgroup {

namespace {

using nlohmann::json;

std::uint32_t get_uint(const json& doc, const char* key) {
  if (!doc.contains(key))
    throw Error(ErrorKind::InvalidSpec, std::string("missing field '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw Error(ErrorKind::InvalidSpec,
                std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::uint32_t>();
}

std::vector<std::uint32_t> uint_list(const json& arr, const char* what) {
  if (!arr.is_array())
    throw Error(ErrorKind::InvalidSpec, std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw Error(ErrorKind::InvalidSpec,
                  std::string(what) + " entries must be nonnegative integers");
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

std::vector<std::vector<std::vector<std::uint32_t>>> perm_generators(const json& gens) {
  std::vector<std::vector<std::vector<std::uint32_t>>> out;
  for (const auto& g : gens) {
    if (!g.is_array())
      throw Error(ErrorKind::InvalidSpec, "permutation generator must be a list of cycles");
    auto& cycles = out.emplace_back();
    for (const auto& c : g) cycles.push_back(uint_list(c, "cycle"));
  }
  return out;
}

}  // namespace

BackendSpec parse_group_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("group spec is not JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorKind::InvalidSpec, "group spec must be a JSON object");
  if (!doc.contains("backend") || !doc["backend"].is_string())
    throw Error(ErrorKind::InvalidSpec, "missing string field 'backend'");

  BackendSpec spec;
  const std::string backend = doc["backend"].get<std::string>();
  const json gens = doc.value("generators", json::array());
  if (!gens.is_array())
    throw Error(ErrorKind::InvalidSpec, "'generators' must be an array");

  if (doc.contains("exponent")) {
    const auto e = doc["exponent"];
    if (!e.is_number_integer() || e.get<std::int64_t>() <= 0)
      throw Error(ErrorKind::InvalidSpec, "'exponent' must be a positive integer");
    spec.exponent = e.get<std::uint64_t>();
  }

  if (doc.contains("field")) {
    const auto& f = doc["field"];
    spec.field.p = get_uint(f, "p");
    spec.field.k = get_uint(f, "k");
    if (f.contains("poly")) spec.field.poly = uint_list(f["poly"], "poly");
  }

  if (backend == "perm") {
    spec.kind = BackendSpec::Kind::Perm;
    spec.degree = get_uint(doc, "degree");
    spec.perm_generators = perm_generators(gens);
  } else if (backend == "matrix") {
    spec.kind = BackendSpec::Kind::Matrix;
    spec.dim = get_uint(doc, "dim");
    if (!doc.contains("field")) throw Error(ErrorKind::InvalidSpec, "missing field 'field'");
    for (const auto& g : gens) {
      if (!g.is_array())
        throw Error(ErrorKind::InvalidSpec, "matrix generator must be an array");
      std::vector<std::uint32_t> entries;
      for (const auto& row : g) {
        if (row.is_array()) {
          auto r = uint_list(row, "matrix row");
          entries.insert(entries.end(), r.begin(), r.end());
        } else {
          entries.push_back(uint_list(json::array({row}), "matrix entry").front());
        }
      }
      spec.matrix_generators.push_back(std::move(entries));
    }
  } else if (backend == "moebius") {
    spec.kind = BackendSpec::Kind::Moebius;
    spec.n = get_uint(doc, "n");
    if (doc.contains("field") && (spec.field.p != 2 || spec.field.k != spec.n))
      throw Error(ErrorKind::InvalidSpec, "moebius field must be GF(2^n)");
    spec.perm_generators = perm_generators(gens);
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown backend '" + backend + "'");
  }
  return spec;
}

BackendSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open group spec " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_spec(buf.str());
}

}  // namespace bbgroup
