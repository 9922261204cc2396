#pragma once

#include <string>
#include <vector>

#include "plic/incidence.hpp"

namespace plic {

struct CatalogEntry {
  std::string key;
  std::string note;  // provenance / derivation summary
  Realized data;
  bool has_coords = false;
  bool transcription = false;  // combinatorial stand-in, not coordinate-derived
  Signature expected_signature;
  long long expected_incidences = 0;
};

// Built once and verified: every entry must reproduce its expected signature
// and incidence count, and coordinate entries must verify faithful.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& key);
bool catalog_has(const std::string& key);

// The self-polar 13-element entry (3x3 grid plus four directions).
Realized build_13_entry();

// Lexicographically first deletion pattern of the 13-entry reaching an
// (n_{3|4}) with the expected incidence count. Variant filters restrict the
// removed elements (used for the two dual 10-element derivations).
enum class DeletionVariant { Any, PointsLowValent, LinesLowValent };
struct DeletionPattern {
  std::vector<std::string> points;
  std::vector<std::string> lines;
};
std::vector<DeletionPattern> deletion_patterns_from_13(int remove_count,
                                                       long long expected_incidences,
                                                       DeletionVariant variant,
                                                       std::size_t max_patterns);

}  // namespace plic
