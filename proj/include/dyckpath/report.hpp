// Copyright (c) dyckpath contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dyckpath/graph.hpp"

namespace dyckpath::report {

/// FNV-1a over the mode and the three layers; stable across runs and platforms.
inline std::uint64_t digest(const TriMatrix& t, Mode mode) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte & 0xff;
    h *= 0x100000001b3ull;
  };
  const std::uint64_t n = t.size();
  for (int shift = 0; shift < 64; shift += 8) mix(n >> shift);
  mix(mode == Mode::Dyck ? 0 : 1);
  for (const BoolMatrix* layer : {&t.neg, &t.zero, &t.pos})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mix(layer->at(i, j) ? 1 : 0);
  return h;
}

inline std::string digest_hex(const TriMatrix& t, Mode mode) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << digest(t, mode);
  return os.str();
}

/// One "i j class" line per true cell, rows first, classes in -1 0 +1 order.
inline void write_pairs(const TriMatrix& t, std::ostream& os) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t.neg.at(i, j)) os << i << ' ' << j << " -1\n";
      if (t.zero.at(i, j)) os << i << ' ' << j << " 0\n";
      if (t.pos.at(i, j)) os << i << ' ' << j << " 1\n";
    }
}

inline nlohmann::json layer_json(const BoolMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

// {"n": n, "mode": "dyck"|"semidyck", "neg": [[0/1...]...], "zero": ..., "pos": ...}
inline nlohmann::json to_json(const TriMatrix& t, Mode mode) {
  nlohmann::json j;
  j["n"] = t.size();
  j["mode"] = std::string(to_string(mode));
  j["neg"] = layer_json(t.neg);
  j["zero"] = layer_json(t.zero);
  j["pos"] = layer_json(t.pos);
  return j;
}

struct ParsedReach {
  Mode mode = Mode::Dyck;
  TriMatrix layers;
};

/// Inverse of to_json; throws std::invalid_argument on schema violations.
inline ParsedReach from_json(const nlohmann::json& j) {
  ParsedReach out;
  if (!j.is_object() || !j.contains("n") || !j.contains("mode"))
    throw std::invalid_argument("reach json: missing 'n' or 'mode'");
  const std::size_t n = j.at("n").get<std::size_t>();
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "dyck")
    out.mode = Mode::Dyck;
  else if (mode == "semidyck")
    out.mode = Mode::SemiDyck;
  else
    throw std::invalid_argument("reach json: unknown mode '" + mode + "'");
  out.layers = TriMatrix(n);
  auto read = [&](const char* key, BoolMatrix& m) {
    const auto& rows = j.at(key);
    if (!rows.is_array() || rows.size() != n)
      throw std::invalid_argument(std::string("reach json: layer '") + key + "' is not n rows");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || row.size() != n)
        throw std::invalid_argument(std::string("reach json: layer '") + key + "' row size");
      for (std::size_t c = 0; c < n; ++c) {
        const int v = row[c].get<int>();
        if (v != 0 && v != 1) throw std::invalid_argument("reach json: cells must be 0 or 1");
        m.set(i, c, v == 1);
      }
    }
  };
  read("neg", out.layers.neg);
  read("zero", out.layers.zero);
  read("pos", out.layers.pos);
  return out;
}

/// Provenance of one solver run.
struct RunReport {
  std::string input;
  Mode mode = Mode::Dyck;
  std::string solver;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t outer_iterations = 0;
  std::size_t inner_iterations = 0;
  double wall_ms = 0.0;
  std::string digest;

  nlohmann::json to_json() const {
    return {{"input", input},
            {"mode", std::string(dyckpath::to_string(mode))},
            {"solver", solver},
            {"n", n},
            {"edges", edges},
            {"outer_iterations", outer_iterations},
            {"inner_iterations", inner_iterations},
            {"wall_ms", wall_ms},
            {"digest", digest}};
  }
};

}  // namespace dyckpath::report
