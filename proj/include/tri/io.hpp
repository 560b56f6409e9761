#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tri/chain.hpp"
#include "tri/matrix.hpp"
#include "tri/scalar.hpp"

namespace tri::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Entry strings kept verbatim so the file layer stays ring-agnostic;
// materialize<K> parses them under the declared scalar syntax.
using MatrixText = std::vector<std::vector<std::string>>;

struct FamilyFile {
  ScalarRing ring;
  int n = 0;
  std::vector<MatrixText> generators;
  std::string mode = "auto";
  std::vector<std::pair<MatrixText, MatrixText>> tn_pairs;
  std::optional<int> closure_bound;
  bool finite = false;

  bool operator==(const FamilyFile&) const = default;
};

namespace detail {

// line/column of a byte offset, 1-based
inline std::pair<int, int> line_col(const std::string& text, size_t pos) {
  int line = 1, col = 1;
  for (size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// best-effort source position of a quoted token, for semantic errors
inline std::string locate_token(const std::string& text, const std::string& token) {
  size_t pos = text.find("\"" + token + "\"");
  if (pos == std::string::npos) return "";
  auto [line, col] = line_col(text, pos + 1);
  return " at line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline ScalarRing parse_ring_name(const std::string& s) {
  if (s == "rational") return ScalarRing::rational();
  if (s == "quaternion") return ScalarRing::quaternion();
  if (s.rfind("gfp:", 0) == 0) {
    std::string rest = s.substr(4);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("scalar: malformed prime in '" + s + "'");
    return ScalarRing::prime_field(std::stoull(rest));
  }
  throw ParseError("scalar: unknown ring '" + s + "' (expected rational, gfp:<p>, quaternion)");
}

inline MatrixText parse_matrix_text(const json& j, int n, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(path + ": expected " + std::to_string(n) + " rows");
  MatrixText m;
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n)
      throw ParseError(path + "[" + std::to_string(r) + "]: expected " + std::to_string(n) +
                       " entries");
    std::vector<std::string> row;
    for (int c = 0; c < n; ++c) {
      if (!j[r][c].is_string())
        throw ParseError(path + "[" + std::to_string(r) + "][" + std::to_string(c) +
                         "]: entries must be strings");
      row.push_back(j[r][c].get<std::string>());
    }
    m.push_back(std::move(row));
  }
  return m;
}

inline json matrix_text_json(const MatrixText& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& e : r) row.push_back(e);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline const std::vector<std::string>& known_modes() {
  static const std::vector<std::string> modes{"auto",      "levitzki", "kolchin",
                                              "kaplansky", "tn",       "irreducible"};
  return modes;
}

inline FamilyFile parse_family_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; convert to line/column
    auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be a JSON object");
  FamilyFile f;
  if (!j.contains("scalar") || !j["scalar"].is_string())
    throw ParseError("missing string field 'scalar'");
  f.ring = detail::parse_ring_name(j["scalar"].get<std::string>());
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw ParseError("missing positive integer field 'n'");
  f.n = j["n"].get<int>();
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw ParseError("'mode' must be a string");
    f.mode = j["mode"].get<std::string>();
    bool ok = false;
    for (const auto& m : known_modes())
      if (m == f.mode) ok = true;
    if (!ok) throw ParseError("unknown mode '" + f.mode + "'" + detail::locate_token(text, f.mode));
  }
  if (j.contains("closure_bound")) {
    if (!j["closure_bound"].is_number_integer() || j["closure_bound"].get<int>() < 1)
      throw ParseError("'closure_bound' must be a positive integer");
    f.closure_bound = j["closure_bound"].get<int>();
  }
  if (j.contains("finite")) {
    if (!j["finite"].is_boolean()) throw ParseError("'finite' must be a boolean");
    f.finite = j["finite"].get<bool>();
  }
  if (f.mode == "tn") {
    if (!j.contains("tn_pairs") || !j["tn_pairs"].is_array() || j["tn_pairs"].empty())
      throw ParseError("mode 'tn' requires a nonempty 'tn_pairs' array");
    for (size_t i = 0; i < j["tn_pairs"].size(); ++i) {
      const json& p = j["tn_pairs"][i];
      std::string path = "tn_pairs[" + std::to_string(i) + "]";
      if (!p.is_array() || p.size() != 2) throw ParseError(path + ": expected a [T, N] pair");
      f.tn_pairs.push_back({detail::parse_matrix_text(p[0], f.n, path + "[0]"),
                            detail::parse_matrix_text(p[1], f.n, path + "[1]")});
    }
  } else {
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
      throw ParseError("missing nonempty array field 'generators'");
    for (size_t i = 0; i < j["generators"].size(); ++i)
      f.generators.push_back(detail::parse_matrix_text(
          j["generators"][i], f.n, "generators[" + std::to_string(i) + "]"));
  }
  return f;
}

inline std::string print_family_file(const FamilyFile& f) {
  json j;
  j["scalar"] = f.ring.name();
  j["n"] = f.n;
  j["mode"] = f.mode;
  if (f.mode == "tn") {
    json pairs = json::array();
    for (const auto& [t, nn] : f.tn_pairs)
      pairs.push_back(json::array({detail::matrix_text_json(t), detail::matrix_text_json(nn)}));
    j["tn_pairs"] = std::move(pairs);
  } else {
    json gens = json::array();
    for (const auto& g : f.generators) gens.push_back(detail::matrix_text_json(g));
    j["generators"] = std::move(gens);
  }
  if (f.closure_bound) j["closure_bound"] = *f.closure_bound;
  if (f.finite) j["finite"] = true;
  return j.dump(2) + "\n";
}

// Parses an entry-string matrix under K's scalar syntax. Errors carry the
// entry path and, when the raw file text is supplied, the source position
// of the offending token.
template <class K>
Matrix<K> materialize(const MatrixText& m, const std::string& path,
                      const std::string& raw_text = "") {
  const int n = static_cast<int>(m.size());
  Matrix<K> out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      try {
        out(r, c) = scalar_traits<K>::parse(m[r][c]);
      } catch (const std::exception& e) {
        throw ParseError(path + "[" + std::to_string(r) + "][" + std::to_string(c) +
                         "]: bad token '" + m[r][c] + "'" +
                         detail::locate_token(raw_text, m[r][c]) + " (" + e.what() + ")");
      }
    }
  return out;
}

template <class K>
std::vector<Matrix<K>> materialize_generators(const FamilyFile& f,
                                              const std::string& raw_text = "") {
  std::vector<Matrix<K>> out;
  for (size_t i = 0; i < f.generators.size(); ++i)
    out.push_back(
        materialize<K>(f.generators[i], "generators[" + std::to_string(i) + "]", raw_text));
  return out;
}

template <class K>
std::vector<std::pair<Matrix<K>, Matrix<K>>> materialize_tn_pairs(const FamilyFile& f,
                                                                  const std::string& raw_text = "") {
  std::vector<std::pair<Matrix<K>, Matrix<K>>> out;
  for (size_t i = 0; i < f.tn_pairs.size(); ++i) {
    std::string path = "tn_pairs[" + std::to_string(i) + "]";
    out.push_back({materialize<K>(f.tn_pairs[i].first, path + "[0]", raw_text),
                   materialize<K>(f.tn_pairs[i].second, path + "[1]", raw_text)});
  }
  return out;
}

template <class K>
MatrixText matrix_to_text(const Matrix<K>& m) {
  MatrixText out;
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_traits<K>::str(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class K>
FamilyFile family_file_from(const ScalarRing& ring, const std::vector<Matrix<K>>& gens,
                            const std::string& mode = "auto") {
  FamilyFile f;
  f.ring = ring;
  f.n = gens.empty() ? 0 : gens.front().rows();
  f.mode = mode;
  for (const auto& g : gens) f.generators.push_back(matrix_to_text(g));
  return f;
}

// Chain file: subspace bases as n x dim entry-string matrices, V_0..V_n.
template <class K>
std::string print_chain(const ScalarRing& ring, const Chain<K>& chain) {
  json j;
  j["scalar"] = ring.name();
  j["n"] = chain.ambient_dim();
  json spaces = json::array();
  for (const auto& s : chain.spaces) {
    json basis = json::array();
    for (int r = 0; r < s.ambient_dim(); ++r) {
      json row = json::array();
      for (const auto& col : s.basis()) row.push_back(scalar_traits<K>::str(col(r, 0)));
      basis.push_back(std::move(row));
    }
    spaces.push_back(std::move(basis));
  }
  j["spaces"] = std::move(spaces);
  return j.dump(2) + "\n";
}

template <class K>
Chain<K> parse_chain(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("chain: syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("spaces") || !j["spaces"].is_array())
    throw ParseError("chain: expected object with fields 'n' and 'spaces'");
  const int n = j["n"].get<int>();
  Chain<K> chain;
  for (size_t s = 0; s < j["spaces"].size(); ++s) {
    const json& basis = j["spaces"][s];
    std::string path = "spaces[" + std::to_string(s) + "]";
    if (!basis.is_array() || static_cast<int>(basis.size()) != n)
      throw ParseError(path + ": expected " + std::to_string(n) + " rows");
    size_t dim = basis.empty() ? 0 : basis[0].size();
    Subspace<K> sub(n);
    for (size_t c = 0; c < dim; ++c) {
      Matrix<K> col(n, 1);
      for (int r = 0; r < n; ++r) {
        if (!basis[r].is_array() || basis[r].size() != dim || !basis[r][c].is_string())
          throw ParseError(path + ": ragged or non-string basis matrix");
        try {
          col(r, 0) = scalar_traits<K>::parse(basis[r][c].get<std::string>());
        } catch (const std::exception& e) {
          throw ParseError(path + "[" + std::to_string(r) + "][" + std::to_string(c) +
                           "]: bad token '" + basis[r][c].get<std::string>() + "' (" + e.what() +
                           ")");
        }
      }
      sub.insert(col);
    }
    if (sub.dim() != static_cast<int>(dim))
      throw ParseError(path + ": basis columns are linearly dependent");
    chain.spaces.push_back(std::move(sub));
  }
  return chain;
}

}  // namespace tri::io
