#include "plic/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace plic {

namespace {

// ---- canonical labeling via refinement + individualization ----

struct Graph {
  // bipartite: vertices 0..P-1 points, P..P+L-1 lines
  int P = 0, L = 0;
  std::vector<std::vector<int>> adj;
};

Graph graph_of(const IncidenceStructure& s) {
  Graph g;
  g.P = s.num_points();
  g.L = s.num_lines();
  g.adj.assign(g.P + g.L, {});
  for (int p = 0; p < g.P; ++p)
    for (int l : s.lines_of_point(p)) {
      g.adj[p].push_back(g.P + l);
      g.adj[g.P + l].push_back(p);
    }
  return g;
}

using Partition = std::vector<std::vector<int>>;  // ordered cells

// Split cells by multiset of neighbor cell indices until stable.
void refine(const Graph& g, Partition& part) {
  bool changed = true;
  std::vector<int> cell_of(g.adj.size());
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < part.size(); ++c)
      for (int v : part[c]) cell_of[v] = static_cast<int>(c);
    Partition next;
    next.reserve(part.size());
    for (const auto& cell : part) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) {
        std::vector<int> key;
        key.reserve(g.adj[v].size());
        for (int w : g.adj[v]) key.push_back(cell_of[w]);
        std::sort(key.begin(), key.end());
        split[key].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [key, vs] : split) next.push_back(std::move(vs));
    }
    part = std::move(next);
  }
}

void append_u16(std::string& out, int v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

// Serialization under a complete labeling: point and line labels read off
// the discrete partition in order.
std::string serialize_labeled(const Graph& g, const Partition& part) {
  std::vector<int> label(g.adj.size());
  int next_point = 0, next_line = 0;
  for (const auto& cell : part) {
    int v = cell[0];
    label[v] = v < g.P ? next_point++ : next_line++;
  }
  std::vector<std::vector<int>> lines(g.L);
  for (int v = g.P; v < g.P + g.L; ++v) {
    auto& pts = lines[label[v]];
    for (int w : g.adj[v]) pts.push_back(label[w]);
    std::sort(pts.begin(), pts.end());
  }
  std::string out;
  append_u16(out, g.P);
  append_u16(out, g.L);
  for (const auto& pts : lines) {
    append_u16(out, static_cast<int>(pts.size()));
    for (int p : pts) append_u16(out, p);
  }
  return out;
}

void canon_search(const Graph& g, Partition part, std::string& best,
                  bool& have_best) {
  refine(g, part);
  int target = -1;
  for (std::size_t c = 0; c < part.size(); ++c) {
    if (part[c].size() > 1) {
      if (target < 0 || part[c].size() < part[target].size())
        target = static_cast<int>(c);
    }
  }
  if (target < 0) {
    std::string ser = serialize_labeled(g, part);
    if (!have_best || ser < best) {
      best = std::move(ser);
      have_best = true;
    }
    return;
  }
  for (int v : part[target]) {
    Partition child;
    child.reserve(part.size() + 1);
    for (std::size_t c = 0; c < part.size(); ++c) {
      if (static_cast<int>(c) == target) {
        child.push_back({v});
        std::vector<int> rest;
        for (int w : part[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      } else {
        child.push_back(part[c]);
      }
    }
    canon_search(g, std::move(child), best, have_best);
  }
}

std::string canonical_bytes(const Graph& g) {
  // initial colors: side, then degree
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int v = 0; v < g.P + g.L; ++v)
    cells[{v < g.P ? 0 : 1, static_cast<int>(g.adj[v].size())}].push_back(v);
  Partition part;
  for (auto& [key, vs] : cells) part.push_back(std::move(vs));
  std::string best;
  bool have_best = false;
  canon_search(g, std::move(part), best, have_best);
  return best;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

CanonicalForm canonical_form(const IncidenceStructure& s) {
  return CanonicalForm{canonical_bytes(graph_of(s))};
}

bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines() ||
      a.num_incidences() != b.num_incidences())
    return false;
  return canonical_form(a) == canonical_form(b);
}

// ---- exhaustive generation ----

namespace {

struct PartialState {
  std::vector<std::vector<int>> lines;  // point-index tuples, sorted
  std::vector<int> degree;
};

IncidenceStructure to_structure(int num_points, int num_zero_lines,
                                const std::vector<std::vector<int>>& lines) {
  std::vector<std::string> pids, lids;
  pids.reserve(num_points);
  for (int i = 0; i < num_points; ++i) pids.push_back("p" + std::to_string(i));
  int total_lines = static_cast<int>(lines.size()) + num_zero_lines;
  for (int i = 0; i < total_lines; ++i) lids.push_back("l" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> inc;
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (int p : lines[l]) inc.emplace_back(pids[p], lids[l]);
  return IncidenceStructure::make(std::move(pids), std::move(lids), inc);
}

// sorted-descending degree vector dominated by sorted-descending valences
bool degrees_feasible(std::vector<int> degrees, const std::vector<int>& valences_desc) {
  std::sort(degrees.rbegin(), degrees.rend());
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] > valences_desc[i]) return false;
  return true;
}

bool line_compatible(const PartialState& st, const std::vector<int>& cand) {
  for (const auto& line : st.lines) {
    int common = 0;
    std::size_t i = 0, j = 0;
    while (i < line.size() && j < cand.size()) {
      if (line[i] == cand[j]) {
        if (++common > 1) return false;
        ++i, ++j;
      } else if (line[i] < cand[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return true;
}

void gen_tuples(int num_points, int size, int start, std::vector<int>& acc,
                const std::vector<int>& degree, int degree_cap,
                const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(acc.size()) == size) {
    emit(acc);
    return;
  }
  int need = size - static_cast<int>(acc.size());
  for (int p = start; p + need <= num_points; ++p) {
    if (degree[p] >= degree_cap) continue;
    acc.push_back(p);
    gen_tuples(num_points, size, p + 1, acc, degree, degree_cap, emit);
    acc.pop_back();
  }
}

}  // namespace

std::vector<IncidenceStructure> enumerate_structures(const Signature& sig,
                                                     bool connected_only) {
  if (!sig.consistent())
    fail(Errc::InconsistentSignature,
         "signature " + sig.str() + " has unequal incidence sums");

  int num_points = static_cast<int>(sig.points_total());
  std::vector<int> valences_desc;
  for (auto& [v, c] : sig.point_counts())
    for (long long i = 0; i < c; ++i) valences_desc.push_back(v);
  std::sort(valences_desc.rbegin(), valences_desc.rend());

  std::vector<int> sizes;  // nonzero line sizes, descending
  int num_zero_lines = 0;
  for (auto& [v, c] : sig.line_counts()) {
    if (v == 0) {
      num_zero_lines = static_cast<int>(c);
      continue;
    }
    for (long long i = 0; i < c; ++i) sizes.push_back(v);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  for (int s : sizes)
    if (s > num_points) return {};  // a line cannot repeat a point

  std::map<int, long long> prescribed_points = sig.point_counts();

  // level 0: the empty partial structure
  std::vector<PartialState> level;
  level.push_back(PartialState{{}, std::vector<int>(num_points, 0)});

  for (int depth = 0; depth < static_cast<int>(sizes.size()); ++depth) {
    int size = sizes[depth];
    std::map<std::string, PartialState> next;
    int degree_cap = valences_desc.empty() ? 0 : valences_desc.front();
    for (const auto& st : level) {
      std::vector<int> acc;
      gen_tuples(num_points, size, 0, acc, st.degree, degree_cap,
                 [&](const std::vector<int>& cand) {
                   if (!line_compatible(st, cand)) return;
                   PartialState child = st;
                   child.lines.push_back(cand);
                   for (int p : cand) ++child.degree[p];
                   if (!degrees_feasible(child.degree, valences_desc)) return;
                   std::string key =
                       canonical_bytes(graph_of(to_structure(num_points, 0, child.lines)));
                   auto it = next.find(key);
                   if (it == next.end()) next.emplace(std::move(key), std::move(child));
                 });
    }
    level.clear();
    level.reserve(next.size());
    for (auto& [key, st] : next) level.push_back(std::move(st));
    if (level.empty()) return {};
  }

  std::map<std::string, IncidenceStructure> out;
  for (const auto& st : level) {
    std::map<int, long long> got;
    for (int p = 0; p < num_points; ++p) ++got[st.degree[p]];
    for (auto it = got.begin(); it != got.end();)
      it = it->second == 0 ? got.erase(it) : std::next(it);
    if (got != prescribed_points) continue;
    IncidenceStructure s = to_structure(num_points, num_zero_lines, st.lines);
    if (connected_only && !is_connected(s)) continue;
    out.emplace(canonical_form(s).bytes, std::move(s));
  }
  std::vector<IncidenceStructure> result;
  result.reserve(out.size());
  for (auto& [key, s] : out) result.push_back(std::move(s));
  return result;
}

// ---- subconfiguration search ----

namespace {

struct EmbedSearch {
  const IncidenceStructure& host;
  const IncidenceStructure& pattern;
  std::size_t max_embeddings;
  bool exact = true;
  std::vector<int> order;          // pattern point order
  std::vector<int> assign;         // pattern point -> host point (-1 unset)
  std::vector<char> host_used;
  std::vector<Embedding> found;

  bool full() const {
    return max_embeddings != 0 && found.size() >= max_embeddings;
  }

  // host line shared by two host points, -1 if none
  int common_line(int hp, int hq) const {
    const auto& a = host.lines_of_point(hp);
    const auto& b = host.lines_of_point(hq);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return a[i];
      if (a[i] < b[j])
        ++i;
      else
        ++j;
    }
    return -1;
  }

  bool finish_lines() {
    int PL = pattern.num_lines();
    std::vector<int> line_img(PL, -1);
    std::vector<char> host_line_used(host.num_lines(), 0);
    std::vector<int> deferred;
    for (int l = 0; l < PL; ++l) {
      const auto& pts = pattern.points_of_line(l);
      if (pts.size() >= 2) {
        int img = common_line(assign[pts[0]], assign[pts[1]]);
        if (img < 0) return false;
        for (std::size_t k = 2; k < pts.size(); ++k)
          if (!host.incident(assign[pts[k]], img)) return false;
        if (host_line_used[img]) return false;
        host_line_used[img] = 1;
        line_img[l] = img;
      } else {
        deferred.push_back(l);
      }
    }
    // exactness on lines already determined (skipped in weak mode)
    auto exact_ok = [&](int l, int img) {
      if (!exact) return true;
      for (int hp : host.points_of_line(img)) {
        for (int pp = 0; pp < pattern.num_points(); ++pp) {
          if (assign[pp] == hp && !pattern.incident(pp, l)) return false;
        }
      }
      return true;
    };
    for (int l = 0; l < PL; ++l)
      if (line_img[l] >= 0 && !exact_ok(l, line_img[l])) return false;

    // lines with fewer than two pattern points: brute-force choices
    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
      if (k == deferred.size()) {
        emit(line_img);
        return full();
      }
      int l = deferred[k];
      const auto& pts = pattern.points_of_line(l);
      for (int img = 0; img < host.num_lines(); ++img) {
        if (host_line_used[img]) continue;
        if (pts.size() == 1 && !host.incident(assign[pts[0]], img)) continue;
        if (!exact_ok(l, img)) continue;
        host_line_used[img] = 1;
        line_img[l] = img;
        bool stop = place(k + 1);
        host_line_used[img] = 0;
        line_img[l] = -1;
        if (stop) return true;
      }
      return false;
    };
    return place(0);
  }

  void emit(const std::vector<int>& line_img) {
    Embedding e;
    for (int p = 0; p < pattern.num_points(); ++p)
      e.point_map.emplace_back(pattern.point_ids()[p], host.point_ids()[assign[p]]);
    for (int l = 0; l < pattern.num_lines(); ++l)
      e.line_map.emplace_back(pattern.line_ids()[l], host.line_ids()[line_img[l]]);
    found.push_back(std::move(e));
  }

  bool consistent(int pp, int hp) {
    if (static_cast<int>(host.lines_of_point(hp).size()) <
        static_cast<int>(pattern.lines_of_point(pp).size()))
      return false;
    for (int qq = 0; qq < pattern.num_points(); ++qq) {
      if (assign[qq] < 0 || qq == pp) continue;
      bool pat_collinear = false;
      for (int l : pattern.lines_of_point(pp))
        if (pattern.incident(qq, l)) {
          pat_collinear = true;
          break;
        }
      if (pat_collinear && common_line(hp, assign[qq]) < 0) return false;
    }
    return true;
  }

  void search(std::size_t k) {
    if (full()) return;
    if (k == order.size()) {
      finish_lines();
      return;
    }
    int pp = order[k];
    for (int hp = 0; hp < host.num_points(); ++hp) {
      if (host_used[hp]) continue;
      if (!consistent(pp, hp)) continue;
      assign[pp] = hp;
      host_used[hp] = 1;
      search(k + 1);
      assign[pp] = -1;
      host_used[hp] = 0;
      if (full()) return;
    }
  }
};

}  // namespace

namespace {

std::vector<Embedding> run_embed_search(const IncidenceStructure& host,
                                        const IncidenceStructure& pattern,
                                        std::size_t max_embeddings, bool exact) {
  if (pattern.num_points() > host.num_points() ||
      pattern.num_lines() > host.num_lines())
    return {};
  EmbedSearch es{host, pattern, max_embeddings, exact};
  es.assign.assign(pattern.num_points(), -1);
  es.host_used.assign(host.num_points(), 0);
  es.order.resize(pattern.num_points());
  std::iota(es.order.begin(), es.order.end(), 0);
  // most-constrained first: descending valence
  std::stable_sort(es.order.begin(), es.order.end(), [&](int a, int b) {
    return pattern.lines_of_point(a).size() > pattern.lines_of_point(b).size();
  });
  es.search(0);
  return std::move(es.found);
}

}  // namespace

std::vector<Embedding> contains_subconfiguration(const IncidenceStructure& host,
                                                 const IncidenceStructure& pattern,
                                                 std::size_t max_embeddings) {
  return run_embed_search(host, pattern, max_embeddings, true);
}

std::vector<Embedding> contains_subconfiguration_weak(const IncidenceStructure& host,
                                                      const IncidenceStructure& pattern,
                                                      std::size_t max_embeddings) {
  return run_embed_search(host, pattern, max_embeddings, false);
}

}  // namespace plic
