#pragma once

#include <array>
#include <optional>
#include <variant>

#include "plic/incidence.hpp"

namespace plic {

// ---- deletion ----

struct ValenceChange {
  ElemRef elem;
  int old_valence = 0;
  int new_valence = 0;
};

struct DeleteResult {
  Realized result;
  // remaining elements whose valence dropped, in deterministic id order
  std::vector<ValenceChange> changed;
};

DeleteResult delete_elements(const Realized& s, const std::vector<ElemRef>& victims);

// ---- superposition ----

struct GlueSpec {
  // pairs (element of A, element of B) to identify; kinds must match
  std::vector<std::pair<ElemRef, ElemRef>> identify;
  // applied to B before merging
  std::optional<ProjMap> transform;
  // prefix for B ids that survive unidentified
  std::string b_prefix = "B:";
};

struct SuperposeResult {
  Realized result;
  FaithfulnessReport report;
};

SuperposeResult superpose(const Realized& a, const Realized& b, const GlueSpec& spec);

// ---- splitting ----

struct SplitSpec {
  std::vector<std::string> part_a_points;
  std::vector<std::string> part_a_lines;
};

struct SplitCheck {
  Signature part_a;
  Signature part_b;
  bool both_quasi = false;
};

SplitCheck check_split(const IncidenceStructure& s, const SplitSpec& spec);

// ---- set-to-set glue maps ----

using GeomElem = std::variant<ProjPoint, ProjLine>;

// All projective maps sending the first marked set onto the second
// elementwise as sets (points to points, lines to lines). Up to
// k!*(4-k)! orderings are solved exactly; every returned map is verified.
std::vector<ProjMap> find_set_glue_map(const std::array<GeomElem, 4>& from,
                                       const std::array<GeomElem, 4>& to);

// ---- recipes ----

struct TwoCopiesResult {
  Realized result;
  FaithfulnessReport report;
  std::array<std::string, 2> new_line_ids;
  std::vector<std::string> diagnostics;
};

// Two copies of a structure with exactly four 3-valent points (all other
// elements 4-valent), the second transformed, plus two lines each incident
// to two 3-valent points of each copy.
TwoCopiesResult recipe_two_copies_two_lines(const Realized& x, const ProjMap& transform);

struct PatchResult {
  Realized result;
  std::vector<ElemRef> marked;  // the four 2-valent elements
  std::vector<std::string> diagnostics;  // one entry per rejected matching
};

// Deletes two 4-valent points sharing no line from a 4-configuration and
// patches the eight 3-valent lines with four new 2-valent points, one per
// line pair, chosen by exhaustive matching search.
PatchResult recipe_delete2_patch4(const Realized& s, const std::string& p1,
                                  const std::string& p2);

// Deletes two 4-valent points sharing exactly one line; patches the six
// 3-valent lines with three new points. The shared line stays 2-valent.
PatchResult recipe_delete2_sameline_patch3(const Realized& s, const std::string& p1,
                                           const std::string& p2);

struct GlueResult {
  Realized result;
  ProjMap used;
  int candidate_index = -1;
  FaithfulnessReport report;
  std::vector<std::string> diagnostics;  // per-candidate failure reasons
};

class ExhaustedCandidatesError : public Error {
 public:
  explicit ExhaustedCandidatesError(std::vector<std::string> diag)
      : Error(Errc::ExhaustedCandidates, "no candidate map glues cleanly"),
        diagnostics(std::move(diag)) {}
  std::vector<std::string> diagnostics;
};

// Superposes the marked 2-valent elements of two deficient pieces along
// each candidate map in deterministic order; returns the first clean
// 4-configuration.
GlueResult glue_deficient_pair(const Realized& a, const std::vector<ElemRef>& marked_a,
                               const Realized& b, const std::vector<ElemRef>& marked_b);

struct Make4Result {
  Realized result;
  Signature input_signature;
  long long expected_size = 0;
  std::vector<std::string> notes;  // chosen chart maps and directions
};

// Turns any faithful 3|4-configuration into a 4-configuration:
// four translated copies with one new line per 3-valent point orbit,
// polar dual, then the same translation step again.
Make4Result recipe_34_to_4(const Realized& x);

// Expected output size 16a+16b+4c of the pipeline for a 3|4 signature.
long long make4_expected_size(const Signature& sig);

}  // namespace plic
