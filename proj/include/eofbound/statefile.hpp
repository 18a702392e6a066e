// Copyright 2026 The eofbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EOFBOUND_STATEFILE_HPP
#define EOFBOUND_STATEFILE_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "eofbound/states.hpp"

namespace eofb {

/// Shortest decimal that parses back to the same binary64 value.
inline std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

/// A state as stored on disk: either a density matrix or a pure vector.
struct StateData {
  std::variant<DensityMatrix, PureState> state;

  BipartiteDims dims() const {
    return std::visit([](const auto& s) { return s.dims(); }, state);
  }
  bool is_pure() const { return std::holds_alternative<PureState>(state); }
  DensityMatrix density() const {
    if (const auto* p = std::get_if<PureState>(&state)) return p->density();
    return std::get<DensityMatrix>(state);
  }
};

// ---------------------------------------------------------------------------
// StateFile:
//   {"version":1,"kind":"density"|"pure","m":M,"n":N,"data":[[re,im],...]}
// with entries row-major under the i*n+k convention.

inline constexpr int kStateFileVersion = 1;

inline std::string write_state_file(const StateData& s) {
  const BipartiteDims d = s.dims();
  std::ostringstream os;
  os << "{\"version\":" << kStateFileVersion << ",\"kind\":\""
     << (s.is_pure() ? "pure" : "density") << "\",\"m\":" << d.dim_a << ",\"n\":" << d.dim_b
     << ",\"data\":[\n";
  auto pair = [&](Complex z, bool last) {
    os << '[' << format_double(z.real()) << ',' << format_double(z.imag()) << ']'
       << (last ? "\n" : ",\n");
  };
  if (const auto* p = std::get_if<PureState>(&s.state)) {
    const ComplexVector& a = p->amplitudes();
    for (Eigen::Index i = 0; i < a.size(); ++i) pair(a(i), i + 1 == a.size());
  } else {
    const ComplexMatrix& m = std::get<DensityMatrix>(s.state).matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        pair(m(i, j), i + 1 == m.rows() && j + 1 == m.cols());
  }
  os << "]}\n";
  return os.str();
}

namespace detail {

inline std::string line_and_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col) + " (byte " +
         std::to_string(offset) + ")";
}

inline int json_dim(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw Error(ErrorKind::ParseError, std::string("missing or non-integer \"") + key + "\"");
  }
  const auto v = doc[key].get<std::int64_t>();
  if (v < 1 || v > 4096) {
    throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" out of range");
  }
  return int(v);
}

}  // namespace detail

/// Parses a StateFile. `force_pure` requires kind "pure" (or a missing kind,
/// which otherwise means "density"). Throws ParseError with a position, or
/// the invariant errors of DensityMatrix / PureState.
inline StateData parse_state_file(std::string_view text, bool force_pure = false) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorKind::ParseError, "malformed JSON at " + detail::line_and_column(text, at));
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "top level must be an object");
  if (!doc.contains("version") || doc["version"] != kStateFileVersion) {
    throw Error(ErrorKind::ParseError, "unsupported or missing \"version\"");
  }
  std::string kind = force_pure ? "pure" : "density";
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw Error(ErrorKind::ParseError, "\"kind\" must be a string");
    kind = doc["kind"].get<std::string>();
    if (kind != "density" && kind != "pure") {
      throw Error(ErrorKind::ParseError, "unknown kind \"" + kind + "\"");
    }
    if (force_pure && kind != "pure") {
      throw Error(ErrorKind::ParseError, "--pure given but file has kind \"" + kind + "\"");
    }
  }
  const BipartiteDims dims(detail::json_dim(doc, "m"), detail::json_dim(doc, "n"));
  if (!doc.contains("data") || !doc["data"].is_array()) {
    throw Error(ErrorKind::ParseError, "missing \"data\" array");
  }
  const auto& data = doc["data"];
  const std::size_t dim = std::size_t(dims.total());
  const std::size_t expected = kind == "pure" ? dim : dim * dim;
  if (data.size() != expected) {
    throw Error(ErrorKind::ParseError, "declared dims " + std::to_string(dims.dim_a) + "x" +
                                           std::to_string(dims.dim_b) + " need " +
                                           std::to_string(expected) + " entries, found " +
                                           std::to_string(data.size()));
  }
  std::vector<Complex> values(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    const auto& e = data[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw Error(ErrorKind::ParseError, "data entry " + std::to_string(i) +
                                             " is not a [re, im] number pair");
    }
    values[i] = Complex(e[0].get<double>(), e[1].get<double>());
  }
  if (kind == "pure") {
    const ComplexVector a = Eigen::Map<const ComplexVector>(values.data(), Eigen::Index(dim));
    return StateData{PureState::from_amplitudes(dims, a)};
  }
  const auto side = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(side, side);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = values[i * dim + j];
    }
  return StateData{DensityMatrix::from_matrix(dims, m)};
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline StateData read_state_file(const std::string& path, bool force_pure = false) {
  return parse_state_file(read_text_file(path), force_pure);
}

// ---------------------------------------------------------------------------
// Generator specs: FAMILY:key=value,key=value

struct StateSpec {
  std::string family;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 1;
  bool pure = false;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

inline StateSpec parse_state_spec(std::string_view text, std::uint64_t default_seed = kDefaultSeed,
                                  bool pure = false) {
  StateSpec spec;
  spec.seed = default_seed;
  spec.pure = pure;
  const auto colon = text.find(':');
  spec.family = std::string(text.substr(0, colon));
  if (spec.family.empty()) throw Error(ErrorKind::ParseError, "empty generator family");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorKind::ParseError, "expected key=value in generator spec, got \"" +
                                             std::string(item) + "\"");
    }
    spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (auto it = spec.params.find("seed"); it != spec.params.end()) {
    std::uint64_t s = 0;
    const auto* end = it->second.data() + it->second.size();
    const auto res = std::from_chars(it->second.data(), end, s);
    if (res.ec != std::errc() || res.ptr != end) {
      throw Error(ErrorKind::ParameterOutOfRange, "seed must be a nonnegative integer");
    }
    spec.seed = s;
    spec.params.erase(it);
  }
  return spec;
}

namespace detail {

class SpecReader {
 public:
  explicit SpecReader(const StateSpec& spec) : spec_(spec) {}

  double real(const std::string& key) {
    used_.push_back(key);
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end()) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  spec_.family + " needs parameter \"" + key + "\"");
    }
    double v = 0.0;
    const auto* end = it->second.data() + it->second.size();
    const auto res = std::from_chars(it->second.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "parameter " + key + "=\"" + it->second + "\" is not a number");
    }
    return v;
  }

  int integer(const std::string& key, double max = 4096) {
    const double v = real(key);
    if (v != std::floor(v) || v < 1 || v > max) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "parameter " + key + " must be a positive integer");
    }
    return int(v);
  }

  int integer_or(const std::string& key, int fallback) {
    if (!spec_.params.count(key)) return fallback;
    return integer(key);
  }

  bool has(const std::string& key) const { return spec_.params.count(key) > 0; }

  void finish() const {
    for (const auto& [key, value] : spec_.params) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw Error(ErrorKind::ParameterOutOfRange,
                    "unknown parameter \"" + key + "\" for " + spec_.family);
      }
    }
  }

 private:
  const StateSpec& spec_;
  std::vector<std::string> used_;
};

inline void no_pure_form(const StateSpec& spec) {
  if (spec.pure) {
    throw Error(ErrorKind::ParameterOutOfRange, spec.family + " has no pure-state form");
  }
}

}  // namespace detail

/// Families: isotropic(d, F), werner2x2(p), maxent(m, n), product(m, n),
/// random(m, n, rank), horodecki_bes(a). `count` is reserved for batch
/// expansion and rejected here.
inline StateData generate_state(const StateSpec& spec) {
  detail::SpecReader r(spec);
  const std::string& f = spec.family;
  if (f == "isotropic") {
    detail::no_pure_form(spec);
    const int d = r.integer("d");
    const double fid = r.real("F");
    r.finish();
    return StateData{make_isotropic(d, fid)};
  }
  if (f == "werner2x2") {
    detail::no_pure_form(spec);
    const double p = r.real("p");
    r.finish();
    return StateData{make_werner_2x2(p)};
  }
  if (f == "maxent") {
    const int m = r.integer("m");
    const int n = r.integer_or("n", m);
    r.finish();
    return StateData{make_maximally_entangled(m, n)};
  }
  if (f == "product") {
    detail::no_pure_form(spec);
    const int m = r.integer("m");
    const int n = r.integer("n");
    r.finish();
    return StateData{make_random_product(BipartiteDims(m, n), spec.seed)};
  }
  if (f == "random") {
    const int m = r.integer("m");
    const int n = r.integer("n");
    const BipartiteDims dims(m, n);
    if (spec.pure) {
      if (r.has("rank") && r.integer("rank") != 1) {
        throw Error(ErrorKind::ParameterOutOfRange, "a pure random state has rank 1");
      }
      r.finish();
      return StateData{random_pure_state(dims, spec.seed)};
    }
    const int rank = r.integer_or("rank", int(dims.total()));
    r.finish();
    return StateData{random_density_matrix(dims, rank, spec.seed)};
  }
  if (f == "horodecki_bes") {
    detail::no_pure_form(spec);
    const double a = r.real("a");
    r.finish();
    return StateData{make_horodecki_3x3_bes(a)};
  }
  throw Error(ErrorKind::UnknownFamily, "unknown generator family \"" + f + "\"");
}

/// Splits a spec carrying count=N into N specs with seeds seed, seed+1, ...
inline std::vector<StateSpec> expand_batch(const StateSpec& spec) {
  auto it = spec.params.find("count");
  if (it == spec.params.end()) return {spec};
  StateSpec base = spec;
  base.params.erase("count");
  StateSpec probe = spec;
  probe.params = {{"count", it->second}};
  const int count = detail::SpecReader(probe).integer("count", 1e7);
  std::vector<StateSpec> out(std::size_t(count), base);
  for (int i = 0; i < count; ++i) out[std::size_t(i)].seed = base.seed + std::uint64_t(i);
  return out;
}

}  // namespace eofb

#endif  // EOFBOUND_STATEFILE_HPP
