#include "gframe/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "gframe/errors.hpp"

namespace gframe {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": non-finite number");
  return x;
}

}  // namespace

Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty list of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError(where + "[0]: expected a non-empty list of entries");
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ParseError(row_where + ": expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = j[r][c];
      const std::string entry_where = row_where + "[" + std::to_string(c) + "]";
      if (!e.is_array() || e.size() != 2) throw ParseError(entry_where + ": expected [re, im]");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(number_at(e[0], entry_where + "[0]"), number_at(e[1], entry_where + "[1]"));
    }
  }
  return m;
}

json system_to_json(const ReconstructionSystem& v) {
  json blocks = json::array();
  for (const auto& b : v.blocks()) blocks.push_back(matrix_to_json(b));
  json k = json::array();
  for (auto ki : v.signature().block_dims()) k.push_back(ki);
  return json{{"d", v.dim()}, {"k", std::move(k)}, {"blocks", std::move(blocks)}};
}

ReconstructionSystem system_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("$: expected an object");
  for (const char* key : {"d", "k", "blocks"}) {
    if (!j.contains(key)) throw ParseError(std::string("$: missing key \"") + key + "\"");
  }
  if (!j["d"].is_number_integer() || j["d"].get<long long>() < 1) throw ParseError("$.d: expected a positive integer");
  const auto d = static_cast<Eigen::Index>(j["d"].get<long long>());

  if (!j["k"].is_array() || j["k"].empty()) throw ParseError("$.k: expected a non-empty list of integers");
  std::vector<Eigen::Index> k;
  for (std::size_t i = 0; i < j["k"].size(); ++i) {
    const json& ki = j["k"][i];
    if (!ki.is_number_integer() || ki.get<long long>() < 1) {
      throw ParseError("$.k[" + std::to_string(i) + "]: expected a positive integer");
    }
    k.push_back(static_cast<Eigen::Index>(ki.get<long long>()));
  }

  const json& blocks_json = j["blocks"];
  if (!blocks_json.is_array() || blocks_json.size() != k.size()) {
    throw ParseError("$.blocks: expected " + std::to_string(k.size()) + " blocks");
  }
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const std::string where = "$.blocks[" + std::to_string(i) + "]";
    Matrix b = matrix_from_json(blocks_json[i], where);
    if (b.rows() != k[i] || b.cols() != d) {
      throw ParseError(where + ": shape " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                       " does not match k=" + std::to_string(k[i]) + ", d=" + std::to_string(d));
    }
    blocks.push_back(std::move(b));
  }
  return ReconstructionSystem(Signature(std::move(k), d), std::move(blocks));
}

namespace {

void dump_into(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map storage: keys already sorted
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        dump_into(value, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_into(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
      } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out += buf;
        // keep it a float on re-read (-0 would otherwise parse as integer 0)
        if (std::string_view(buf).find_first_of(".e") == std::string_view::npos) out += ".0";
      }
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_deterministic(const json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

ReconstructionSystem read_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return system_from_json(parse_json(buffer.str(), path.string()));
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind(path.string(), 0) == 0) throw;
    throw ParseError(path.string() + ": " + what);
  }
}

void write_system(const std::filesystem::path& path, const ReconstructionSystem& v) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot open file for writing");
  out << dump_deterministic(system_to_json(v)) << '\n';
}

}  // namespace gframe
