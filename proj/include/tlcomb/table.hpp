/**
 * @file table.hpp
 * @brief Polynomial tables and their JSON-lines on-disk format.
 *
 * One record per line:
 *   {"sys":"A3","family":"P","x":"word:s1","w":"word:s1.s2.s1","poly":[[e,c],...]}
 * Exponents are in v-units (v^2 = q), coefficients are exact integers.
 * Records are emitted in deterministic order (shortlex x, then shortlex w)
 * and only for nonzero values.
 */

#pragma once

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlcomb/coxeter.hpp"
#include "tlcomb/laurent.hpp"

namespace tlcomb {

struct PolyRecord {
  std::string sys;
  std::string family;  // "r", "kl", "d", "a", "l"
  std::string x;       // canonical word form
  std::string w;
  LaurentPoly poly;
};

inline std::string record_to_json(const PolyRecord& rec) {
  // field values are canonical word forms / ids: no escaping needed,
  // but go through nlohmann for the string fields anyway
  nlohmann::json j;
  j["sys"] = rec.sys;
  j["family"] = rec.family;
  j["x"] = rec.x;
  j["w"] = rec.w;
  std::string out = j.dump();
  out.pop_back();  // strip the closing brace, splice the exact poly text
  out += ",\"poly\":" + rec.poly.to_text() + "}";
  return out;
}

inline PolyRecord record_from_json(const std::string& line) {
  const nlohmann::json j = nlohmann::json::parse(line);
  PolyRecord rec;
  rec.sys = j.at("sys").get<std::string>();
  rec.family = j.at("family").get<std::string>();
  rec.x = j.at("x").get<std::string>();
  rec.w = j.at("w").get<std::string>();
  std::vector<std::pair<int, Int>> terms;
  for (const auto& t : j.at("poly")) {
    const int e = t.at(0).get<int>();
    Int c;
    if (t.at(1).is_number_integer())
      c = Int(t.at(1).get<long long>());
    else
      c = Int(t.at(1).dump());  // arbitrary-precision fallback
    terms.emplace_back(e, std::move(c));
  }
  rec.poly = LaurentPoly::from_terms(std::move(terms));
  return rec;
}

inline void write_records(const std::string& path,
                          const std::vector<PolyRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& rec : records) out << record_to_json(rec) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::vector<PolyRecord> read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<PolyRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(record_from_json(line));
  }
  return records;
}

}  // namespace tlcomb
