#include "plic/incidence.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace plic {

Signature::Signature(std::map<int, long long> point_counts,
                     std::map<int, long long> line_counts)
    : pts_(std::move(point_counts)), lns_(std::move(line_counts)) {
  for (auto it = pts_.begin(); it != pts_.end();) {
    if (it->second < 0 || it->first < 0)
      fail(Errc::ValidationError, "negative signature entry");
    it = it->second == 0 ? pts_.erase(it) : std::next(it);
  }
  for (auto it = lns_.begin(); it != lns_.end();) {
    if (it->second < 0 || it->first < 0)
      fail(Errc::ValidationError, "negative signature entry");
    it = it->second == 0 ? lns_.erase(it) : std::next(it);
  }
}

static long long sum_counts(const std::map<int, long long>& m) {
  long long t = 0;
  for (auto& [v, c] : m) t += c;
  return t;
}
static long long sum_weighted(const std::map<int, long long>& m) {
  long long t = 0;
  for (auto& [v, c] : m) t += static_cast<long long>(v) * c;
  return t;
}

long long Signature::points_total() const { return sum_counts(pts_); }
long long Signature::lines_total() const { return sum_counts(lns_); }
long long Signature::point_incidences() const { return sum_weighted(pts_); }
long long Signature::line_incidences() const { return sum_weighted(lns_); }
long long Signature::p_second_derivative() const {
  long long t = 0;
  for (auto& [v, c] : pts_) t += static_cast<long long>(v) * (v - 1) * c;
  return t;
}

namespace {

// One side of "a*x^3+b*x^4": sum of terms  [count '*'] var ['^' exp],
// where a bare count denotes 0-valent elements.
std::map<int, long long> parse_side(const std::string& text) {
  std::map<int, long long> counts;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return counts;
  std::size_t i = 0;
  while (i < s.size()) {
    long long count = 1;
    bool saw_count = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      count = std::stoll(s.substr(i, j - i));
      saw_count = true;
      i = j;
    }
    if (i < s.size() && s[i] == '*') {
      if (!saw_count) fail(Errc::ParseError, "stray '*' in signature");
      ++i;
    }
    int valence = 0;
    if (i < s.size() && (s[i] == 'x' || s[i] == 'y')) {
      ++i;
      valence = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) fail(Errc::ParseError, "missing exponent in signature");
        valence = static_cast<int>(std::stoll(s.substr(i, k - i)));
        i = k;
      }
    } else if (!saw_count) {
      fail(Errc::ParseError, "unexpected character in signature term");
    }
    counts[valence] += count;
    if (i < s.size()) {
      if (s[i] != '+') fail(Errc::ParseError, "expected '+' in signature");
      ++i;
      if (i == s.size()) fail(Errc::ParseError, "trailing '+' in signature");
    }
  }
  return counts;
}

std::string side_str(const std::map<int, long long>& counts, char var) {
  if (counts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, c] : counts) {
    if (!first) os << "+";
    first = false;
    if (v == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << var;
    if (v != 1) os << "^" << v;
  }
  return os.str();
}

}  // namespace

Signature Signature::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    fail(Errc::ParseError, "signature needs 'points|lines' with a '|'");
  return Signature(parse_side(text.substr(0, bar)),
                   parse_side(text.substr(bar + 1)));
}

std::string Signature::str() const {
  return side_str(pts_, 'x') + "|" + side_str(lns_, 'y');
}

IncidenceStructure IncidenceStructure::make(
    std::vector<std::string> point_ids, std::vector<std::string> line_ids,
    const std::vector<std::pair<std::string, std::string>>& incidences) {
  IncidenceStructure s;
  s.point_ids_ = std::move(point_ids);
  s.line_ids_ = std::move(line_ids);

  std::unordered_map<std::string, int> pidx, lidx;
  for (int i = 0; i < s.num_points(); ++i) {
    if (!pidx.emplace(s.point_ids_[i], i).second)
      fail(Errc::ValidationError, "duplicate point id '" + s.point_ids_[i] + "'");
  }
  for (int i = 0; i < s.num_lines(); ++i) {
    if (!lidx.emplace(s.line_ids_[i], i).second)
      fail(Errc::ValidationError, "duplicate line id '" + s.line_ids_[i] + "'");
  }

  s.point_adj_.assign(s.num_points(), {});
  s.line_adj_.assign(s.num_lines(), {});
  std::unordered_set<long long> seen;
  for (const auto& [pid, lid] : incidences) {
    auto pi = pidx.find(pid);
    if (pi == pidx.end()) fail(Errc::ValidationError, "incidence names unknown point '" + pid + "'");
    auto li = lidx.find(lid);
    if (li == lidx.end()) fail(Errc::ValidationError, "incidence names unknown line '" + lid + "'");
    long long key = static_cast<long long>(pi->second) * s.num_lines() + li->second;
    if (!seen.insert(key).second)
      fail(Errc::ValidationError, "duplicate incidence (" + pid + ", " + lid + ")");
    s.point_adj_[pi->second].push_back(li->second);
    s.line_adj_[li->second].push_back(pi->second);
    ++s.num_incidences_;
  }
  for (auto& v : s.point_adj_) std::sort(v.begin(), v.end());
  for (auto& v : s.line_adj_) std::sort(v.begin(), v.end());

  // Girth >= 6: every point pair lies on at most one common line.
  std::unordered_set<long long> pairs;
  for (int l = 0; l < s.num_lines(); ++l) {
    const auto& pts = s.line_adj_[l];
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        long long key = static_cast<long long>(pts[i]) * s.num_points() + pts[j];
        if (!pairs.insert(key).second)
          fail(Errc::GirthViolation,
               "points '" + s.point_ids_[pts[i]] + "' and '" + s.point_ids_[pts[j]] +
                   "' share two lines");
      }
  }
  return s;
}

int IncidenceStructure::point_index(const std::string& id) const {
  for (int i = 0; i < num_points(); ++i)
    if (point_ids_[i] == id) return i;
  return -1;
}
int IncidenceStructure::line_index(const std::string& id) const {
  for (int i = 0; i < num_lines(); ++i)
    if (line_ids_[i] == id) return i;
  return -1;
}
int IncidenceStructure::require_point(const std::string& id) const {
  int i = point_index(id);
  if (i < 0) fail(Errc::UnknownId, "no point '" + id + "'");
  return i;
}
int IncidenceStructure::require_line(const std::string& id) const {
  int i = line_index(id);
  if (i < 0) fail(Errc::UnknownId, "no line '" + id + "'");
  return i;
}

bool IncidenceStructure::incident(int p, int l) const {
  const auto& v = point_adj_[p];
  return std::binary_search(v.begin(), v.end(), l);
}
bool IncidenceStructure::incident(const std::string& p, const std::string& l) const {
  return incident(require_point(p), require_line(l));
}

std::vector<std::pair<std::string, std::string>>
IncidenceStructure::incidence_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(static_cast<std::size_t>(num_incidences_));
  for (int p = 0; p < num_points(); ++p)
    for (int l : point_adj_[p]) out.emplace_back(point_ids_[p], line_ids_[l]);
  return out;
}

Signature signature_of(const IncidenceStructure& s) {
  std::map<int, long long> pc, lc;
  for (int p = 0; p < s.num_points(); ++p)
    ++pc[static_cast<int>(s.lines_of_point(p).size())];
  for (int l = 0; l < s.num_lines(); ++l)
    ++lc[static_cast<int>(s.points_of_line(l).size())];
  return Signature(std::move(pc), std::move(lc));
}

bool is_quasi_configuration(const IncidenceStructure& s) {
  Signature sig = signature_of(s);
  for (auto& [v, c] : sig.point_counts())
    if (v < 3) return false;
  for (auto& [v, c] : sig.line_counts())
    if (v < 3) return false;
  return true;
}

bool is_k_configuration(const IncidenceStructure& s, int k) {
  Signature sig = signature_of(s);
  for (auto& [v, c] : sig.point_counts())
    if (v != k) return false;
  for (auto& [v, c] : sig.line_counts())
    if (v != k) return false;
  return s.num_points() == s.num_lines();
}

bool is_34_configuration(const IncidenceStructure& s) {
  Signature sig = signature_of(s);
  for (auto& [v, c] : sig.point_counts())
    if (v != 3 && v != 4) return false;
  for (auto& [v, c] : sig.line_counts())
    if (v != 3 && v != 4) return false;
  return true;
}

bool is_n34_configuration(const IncidenceStructure& s) {
  return is_34_configuration(s) && s.num_points() == s.num_lines();
}

bool is_connected(const IncidenceStructure& s) {
  int n = s.num_points() + s.num_lines();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    if (v < s.num_points()) {
      for (int l : s.lines_of_point(v)) {
        int w = s.num_points() + l;
        if (!seen[w]) seen[w] = 1, stack.push_back(w);
      }
    } else {
      for (int p : s.points_of_line(v - s.num_points())) {
        if (!seen[p]) seen[p] = 1, stack.push_back(p);
      }
    }
  }
  return count == n;
}

IncidenceStructure induced_substructure(const IncidenceStructure& s,
                                        const std::vector<std::string>& keep_points,
                                        const std::vector<std::string>& keep_lines) {
  std::unordered_set<std::string> kp, kl;
  for (const auto& id : keep_points) {
    s.require_point(id);
    kp.insert(id);
  }
  for (const auto& id : keep_lines) {
    s.require_line(id);
    kl.insert(id);
  }
  std::vector<std::string> pts, lns;
  for (const auto& id : s.point_ids())
    if (kp.count(id)) pts.push_back(id);
  for (const auto& id : s.line_ids())
    if (kl.count(id)) lns.push_back(id);
  std::vector<std::pair<std::string, std::string>> inc;
  for (const auto& [p, l] : s.incidence_pairs())
    if (kp.count(p) && kl.count(l)) inc.emplace_back(p, l);
  return IncidenceStructure::make(std::move(pts), std::move(lns), inc);
}

IncidenceStructure dual_structure(const IncidenceStructure& s) {
  std::vector<std::pair<std::string, std::string>> inc;
  for (const auto& [p, l] : s.incidence_pairs()) inc.emplace_back(l, p);
  return IncidenceStructure::make(s.line_ids(), s.point_ids(), inc);
}

void Realization::set_point(const std::string& id, const ProjPoint& p) {
  pts_.insert_or_assign(id, p);
}
void Realization::set_line(const std::string& id, const ProjLine& l) {
  lns_.insert_or_assign(id, l);
}
const ProjPoint* Realization::point(const std::string& id) const {
  auto it = pts_.find(id);
  return it == pts_.end() ? nullptr : &it->second;
}
const ProjLine* Realization::line(const std::string& id) const {
  auto it = lns_.find(id);
  return it == lns_.end() ? nullptr : &it->second;
}

Realization Realization::transformed(const ProjMap& m) const {
  Realization out;
  for (const auto& [id, p] : pts_) out.set_point(id, m(p));
  for (const auto& [id, l] : lns_) out.set_line(id, m(l));
  return out;
}

Realization Realization::restricted(const std::vector<std::string>& point_ids,
                                    const std::vector<std::string>& line_ids) const {
  Realization out;
  for (const auto& id : point_ids) {
    const ProjPoint* p = point(id);
    if (p) out.set_point(id, *p);
  }
  for (const auto& id : line_ids) {
    const ProjLine* l = line(id);
    if (l) out.set_line(id, *l);
  }
  return out;
}

Realization Realization::renamed(
    const std::map<std::string, std::string>& point_names,
    const std::map<std::string, std::string>& line_names) const {
  Realization out;
  for (const auto& [id, p] : pts_) {
    auto it = point_names.find(id);
    out.set_point(it == point_names.end() ? id : it->second, p);
  }
  for (const auto& [id, l] : lns_) {
    auto it = line_names.find(id);
    out.set_line(it == line_names.end() ? id : it->second, l);
  }
  return out;
}

Realization dual_realization(const Realization& r) {
  Realization out;
  for (const auto& [id, p] : r.points()) out.set_line(id, polar_dual(p));
  for (const auto& [id, l] : r.lines()) out.set_point(id, polar_dual(l));
  return out;
}

std::string FaithfulnessReport::summary() const {
  if (faithful()) return "faithful";
  std::ostringstream os;
  os << "not faithful:";
  if (!missing.empty()) os << " missing=" << missing.size();
  if (!extra.empty()) os << " extra=" << extra.size();
  if (!point_collisions.empty()) os << " point_collisions=" << point_collisions.size();
  if (!line_collisions.empty()) os << " line_collisions=" << line_collisions.size();
  return os.str();
}

FaithfulnessReport check_faithful(const IncidenceStructure& s,
                                  const Realization& r) {
  for (const auto& id : s.point_ids())
    if (!r.point(id)) fail(Errc::UnmappedId, "realization misses point '" + id + "'");
  for (const auto& id : s.line_ids())
    if (!r.line(id)) fail(Errc::UnmappedId, "realization misses line '" + id + "'");
  if (static_cast<int>(r.points().size()) != s.num_points() ||
      static_cast<int>(r.lines().size()) != s.num_lines())
    fail(Errc::UnmappedId, "realization names ids outside the structure");

  FaithfulnessReport rep;
  const auto& pids = s.point_ids();
  const auto& lids = s.line_ids();
  std::vector<const ProjPoint*> P(pids.size());
  std::vector<const ProjLine*> L(lids.size());
  for (std::size_t i = 0; i < pids.size(); ++i) P[i] = r.point(pids[i]);
  for (std::size_t j = 0; j < lids.size(); ++j) L[j] = r.line(lids[j]);

  for (std::size_t i = 0; i < pids.size(); ++i)
    for (std::size_t j = i + 1; j < pids.size(); ++j)
      if (*P[i] == *P[j]) rep.point_collisions.emplace_back(pids[i], pids[j]);
  for (std::size_t i = 0; i < lids.size(); ++i)
    for (std::size_t j = i + 1; j < lids.size(); ++j)
      if (*L[i] == *L[j]) rep.line_collisions.emplace_back(lids[i], lids[j]);

  for (std::size_t i = 0; i < pids.size(); ++i)
    for (std::size_t j = 0; j < lids.size(); ++j) {
      bool geo = plic::incident(*P[i], *L[j]);
      bool com = s.incident(static_cast<int>(i), static_cast<int>(j));
      if (com && !geo) rep.missing.emplace_back(pids[i], lids[j]);
      if (!com && geo) rep.extra.emplace_back(pids[i], lids[j]);
    }
  return rep;
}

Realized realized_from_coords(
    const std::vector<std::pair<std::string, ProjPoint>>& pts,
    const std::vector<std::pair<std::string, ProjLine>>& lns) {
  std::vector<std::string> pids, lids;
  std::vector<std::pair<std::string, std::string>> inc;
  Realization r;
  for (const auto& [id, p] : pts) {
    pids.push_back(id);
    r.set_point(id, p);
  }
  for (const auto& [id, l] : lns) {
    lids.push_back(id);
    r.set_line(id, l);
  }
  for (const auto& [pid, p] : pts)
    for (const auto& [lid, l] : lns)
      if (incident(p, l)) inc.emplace_back(pid, lid);
  return Realized{IncidenceStructure::make(pids, lids, inc), std::move(r)};
}

}  // namespace plic
