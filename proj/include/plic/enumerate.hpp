#pragma once

#include <string>
#include <vector>

#include "plic/incidence.hpp"

namespace plic {

// Canonical serialization of a structure under bipartite canonical labeling
// (points and lines as separate color classes). Two structures are
// isomorphic by a point-to-point, line-to-line relabeling iff their
// canonical forms are bit-identical.
struct CanonicalForm {
  std::string bytes;

  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
  std::string hex() const;
};

CanonicalForm canonical_form(const IncidenceStructure& s);
bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b);

// Complete isomorph-free list of incidence structures with exactly the
// given signature. Levelwise generation: lines are added in non-increasing
// size order and partial structures are collapsed to canonical class
// representatives at every level, so each isomorphism class of partial
// structures is extended once. Output sorted by canonical form.
std::vector<IncidenceStructure> enumerate_structures(const Signature& sig,
                                                     bool connected_only);

struct Embedding {
  std::vector<std::pair<std::string, std::string>> point_map;  // pattern -> host
  std::vector<std::pair<std::string, std::string>> line_map;
};

// All injective incidence-preserving embeddings of pattern into host whose
// induced incidences match the pattern exactly on the image.
std::vector<Embedding> contains_subconfiguration(const IncidenceStructure& host,
                                                 const IncidenceStructure& pattern,
                                                 std::size_t max_embeddings = 0);

// Embeddings that only preserve incidences: the host may carry additional
// incidences between image elements. This is the sense in which a
// 3|4-configuration can contain a 3-regular configuration whose elements
// gained valence.
std::vector<Embedding> contains_subconfiguration_weak(const IncidenceStructure& host,
                                                      const IncidenceStructure& pattern,
                                                      std::size_t max_embeddings = 0);

}  // namespace plic
