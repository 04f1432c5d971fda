#pragma once

#include <string>

#include <json.hpp>

#include "braidhom/homs.hpp"

namespace braidhom {

/// {"images": [[letters...], ...], "source_strands": n, "target_strands": m}
inline nlohmann::json to_json(const Homomorphism& h) {
  nlohmann::json images = nlohmann::json::array();
  for (const auto& w : h.images()) images.push_back(std::vector<int>(w.letters().begin(), w.letters().end()));
  return {{"images", images}, {"source_strands", h.source_strands()}, {"target_strands", h.target_strands()}};
}

/// Images are freely reduced on the way in.
inline Homomorphism hom_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("source_strands").get<int>();
    const int m = j.at("target_strands").get<int>();
    std::vector<BraidWord> images;
    for (const auto& img : j.at("images")) images.emplace_back(m, img.get<std::vector<int>>());
    return Homomorphism(n, m, std::move(images));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed homomorphism JSON: ") + e.what());
  }
}

inline Homomorphism parse_hom(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed homomorphism JSON: ") + e.what());
  }
  return hom_from_json(j);
}

inline nlohmann::json to_json(const Fingerprint& f) {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : f.witnesses)
    ws.push_back({{"witness", w.witness},
                  {"identity_image", w.identity_image},
                  {"cycle_type", w.cycle_type},
                  {"pure_power", w.pure_power},
                  {"linking", w.linking}});
  nlohmann::json profiles = nlohmann::json::array();
  for (const auto& p : f.strand_profiles) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& [wi, lk] : p) row.push_back({wi, lk});
    profiles.push_back(row);
  }
  return {{"cyclic_image", f.cyclic_image},
          {"sign_bipartition", f.sign_bipartition},
          {"strand_profiles", profiles},
          {"witnesses", ws}};
}

}  // namespace braidhom
