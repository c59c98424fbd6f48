#include "gme/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gme {

namespace {

using nlohmann::json;

Complex entry(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw StateParseError("complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json pair(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

AnyState parse_state(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateParseError(std::string("not a JSON document: ") + e.what());
  }
  if (!doc.is_object()) throw StateParseError("state document must be an object");
  for (const char* key : {"dims", "kind", "data"}) {
    if (!doc.contains(key)) throw StateParseError(std::string("missing field '") + key + "'");
  }
  if (!doc["dims"].is_array()) throw StateParseError("'dims' must be a list of integers");
  std::vector<int> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer()) throw StateParseError("'dims' must be a list of integers");
    dims.push_back(d.get<int>());
  }
  std::optional<Space> space;
  try {
    space.emplace(dims);
  } catch (const std::invalid_argument& e) {
    throw StateParseError(e.what());
  }
  const Index n = space->total_dim();
  const json& data = doc["data"];
  const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";

  try {
    if (kind == "pure") {
      if (!data.is_array() || static_cast<Index>(data.size()) != n) {
        throw StateParseError("pure data must hold " + std::to_string(n) + " entries");
      }
      Vector v(n);
      for (Index i = 0; i < n; ++i) v(i) = entry(data[static_cast<std::size_t>(i)]);
      return PureState(*space, v);
    }
    if (kind == "mixed") {
      if (!data.is_array() || static_cast<Index>(data.size()) != n) {
        throw StateParseError("mixed data must hold " + std::to_string(n) + " rows");
      }
      Matrix m(n, n);
      for (Index i = 0; i < n; ++i) {
        const json& row = data[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != n) {
          throw StateParseError("row " + std::to_string(i) + " must hold " + std::to_string(n) + " entries");
        }
        for (Index j = 0; j < n; ++j) m(i, j) = entry(row[static_cast<std::size_t>(j)]);
      }
      return DensityMatrix(*space, m);
    }
  } catch (const std::invalid_argument& e) {
    throw StateParseError(e.what());
  }
  throw StateParseError("'kind' must be \"pure\" or \"mixed\"");
}

AnyState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state(ss.str());
}

std::string serialize_state(const AnyState& state) {
  json doc;
  doc["dims"] = space_of(state).dims();
  json data = json::array();
  if (const auto* psi = std::get_if<PureState>(&state)) {
    doc["kind"] = "pure";
    for (Index i = 0; i < psi->amplitudes().size(); ++i) data.push_back(pair(psi->amplitudes()(i)));
  } else {
    const Matrix& m = std::get<DensityMatrix>(state).matrix();
    doc["kind"] = "mixed";
    for (Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Index j = 0; j < m.cols(); ++j) row.push_back(pair(m(i, j)));
      data.push_back(std::move(row));
    }
  }
  doc["data"] = std::move(data);
  return doc.dump() + "\n";
}

void write_state_file(const std::string& path, const AnyState& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_state(state);
}

DensityMatrix as_density(const AnyState& state) {
  if (const auto* psi = std::get_if<PureState>(&state)) return psi->projector();
  return std::get<DensityMatrix>(state);
}

const Space& space_of(const AnyState& state) {
  return std::visit([](const auto& s) -> const Space& { return s.space(); }, state);
}

}  // namespace gme
