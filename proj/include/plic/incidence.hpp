#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plic/projective.hpp"

namespace plic {

enum class Kind { Point, Line };

struct ElemRef {
  Kind kind;
  std::string id;

  bool operator==(const ElemRef&) const = default;
};

// Valence-count polynomials (P(x), L(y)). Zero counts are never stored.
class Signature {
 public:
  Signature() = default;
  Signature(std::map<int, long long> point_counts,
            std::map<int, long long> line_counts);

  const std::map<int, long long>& point_counts() const { return pts_; }
  const std::map<int, long long>& line_counts() const { return lns_; }

  long long points_total() const;      // P(1)
  long long lines_total() const;       // L(1)
  long long point_incidences() const;  // P'(1)
  long long line_incidences() const;   // L'(1)
  long long p_second_derivative() const;  // P''(1) = sum i(i-1) p_i
  bool consistent() const { return point_incidences() == line_incidences(); }

  bool operator==(const Signature&) const = default;

  // "4*x^3+9*x^4|4*y^3+9*y^4"; a bare integer term counts 0-valent elements.
  static Signature parse(const std::string& text);
  std::string str() const;

 private:
  std::map<int, long long> pts_, lns_;
};

// Immutable bipartite incidence structure. Two points share at most one
// line and two lines share at most one point (checked on construction).
class IncidenceStructure {
 public:
  static IncidenceStructure make(
      std::vector<std::string> point_ids, std::vector<std::string> line_ids,
      const std::vector<std::pair<std::string, std::string>>& incidences);

  int num_points() const { return static_cast<int>(point_ids_.size()); }
  int num_lines() const { return static_cast<int>(line_ids_.size()); }
  long long num_incidences() const { return num_incidences_; }

  const std::vector<std::string>& point_ids() const { return point_ids_; }
  const std::vector<std::string>& line_ids() const { return line_ids_; }

  // Sorted index adjacency.
  const std::vector<int>& lines_of_point(int p) const { return point_adj_[p]; }
  const std::vector<int>& points_of_line(int l) const { return line_adj_[l]; }

  int point_index(const std::string& id) const;  // -1 when absent
  int line_index(const std::string& id) const;
  int require_point(const std::string& id) const;
  int require_line(const std::string& id) const;

  bool incident(int p, int l) const;
  bool incident(const std::string& p, const std::string& l) const;

  std::vector<std::pair<std::string, std::string>> incidence_pairs() const;

  bool operator==(const IncidenceStructure&) const = default;

 private:
  std::vector<std::string> point_ids_, line_ids_;
  std::vector<std::vector<int>> point_adj_, line_adj_;
  long long num_incidences_ = 0;
};

Signature signature_of(const IncidenceStructure& s);

bool is_quasi_configuration(const IncidenceStructure& s);
bool is_k_configuration(const IncidenceStructure& s, int k);
bool is_34_configuration(const IncidenceStructure& s);
bool is_n34_configuration(const IncidenceStructure& s);

// Connectivity of the bipartite incidence graph over all elements.
bool is_connected(const IncidenceStructure& s);

IncidenceStructure induced_substructure(const IncidenceStructure& s,
                                        const std::vector<std::string>& keep_points,
                                        const std::vector<std::string>& keep_lines);

// Combinatorial polarity: swaps the two sides and transposes incidence.
IncidenceStructure dual_structure(const IncidenceStructure& s);

// Coordinates for a structure. Stored separately; may be partial only while
// construction pipelines are rebuilding the combinatorial side.
class Realization {
 public:
  Realization() = default;

  void set_point(const std::string& id, const ProjPoint& p);
  void set_line(const std::string& id, const ProjLine& l);
  const ProjPoint* point(const std::string& id) const;
  const ProjLine* line(const std::string& id) const;
  const std::map<std::string, ProjPoint>& points() const { return pts_; }
  const std::map<std::string, ProjLine>& lines() const { return lns_; }

  Realization transformed(const ProjMap& m) const;
  Realization restricted(const std::vector<std::string>& point_ids,
                         const std::vector<std::string>& line_ids) const;
  Realization renamed(const std::map<std::string, std::string>& point_names,
                      const std::map<std::string, std::string>& line_names) const;

 private:
  std::map<std::string, ProjPoint> pts_;
  std::map<std::string, ProjLine> lns_;
};

Realization dual_realization(const Realization& r);

struct FaithfulnessReport {
  // Prescribed incidences whose coordinates are not geometrically incident.
  std::vector<std::pair<std::string, std::string>> missing;
  // Geometric incidences absent from the prescribed relation.
  std::vector<std::pair<std::string, std::string>> extra;
  // Distinct ids mapped to the same canonical coordinates.
  std::vector<std::pair<std::string, std::string>> point_collisions;
  std::vector<std::pair<std::string, std::string>> line_collisions;

  bool faithful() const {
    return missing.empty() && extra.empty() && point_collisions.empty() &&
           line_collisions.empty();
  }
  std::string summary() const;
};

FaithfulnessReport check_faithful(const IncidenceStructure& s,
                                  const Realization& r);

// Structure + coordinates travelling together through construction pipelines.
struct Realized {
  IncidenceStructure inc;
  Realization coords;
};

// Builds the incidence relation from coordinates: (p,l) prescribed iff the
// exact dot product vanishes.
Realized realized_from_coords(const std::vector<std::pair<std::string, ProjPoint>>& pts,
                              const std::vector<std::pair<std::string, ProjLine>>& lns);

}  // namespace plic
