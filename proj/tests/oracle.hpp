#pragma once

// Reference enumeration used only by the test suite. Independent of the
// library's generator and canonical labeling: plain ordered backtracking
// over labeled line systems followed by isomorphism classing via direct
// bijection search.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "plic/incidence.hpp"

namespace plic_oracle {

struct Labeled {
  int num_points = 0;
  std::vector<std::vector<int>> lines;  // sorted tuples, may include empties
  std::vector<int> degree;
};

inline bool oracle_isomorphic(const Labeled& a, const Labeled& b) {
  if (a.num_points != b.num_points || a.lines.size() != b.lines.size())
    return false;
  std::vector<int> da = a.degree, db = b.degree;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  std::multiset<std::vector<int>> b_lines(b.lines.begin(), b.lines.end());
  int n = a.num_points;
  std::vector<int> map_ab(n, -1);
  std::vector<char> used(n, 0);

  // order a's points by descending degree for earlier pruning
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a.degree[x] > a.degree[y]; });

  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == n) {
      std::multiset<std::vector<int>> mapped;
      for (const auto& l : a.lines) {
        std::vector<int> m;
        for (int p : l) m.push_back(map_ab[p]);
        std::sort(m.begin(), m.end());
        mapped.insert(std::move(m));
      }
      return mapped == b_lines;
    }
    int p = order[k];
    for (int q = 0; q < n; ++q) {
      if (used[q] || a.degree[p] != b.degree[q]) continue;
      map_ab[p] = q;
      used[q] = 1;
      // lines of a fully mapped so far must appear in b
      bool ok = true;
      for (const auto& l : a.lines) {
        bool full = true;
        for (int x : l)
          if (map_ab[x] < 0) {
            full = false;
            break;
          }
        if (!full) continue;
        std::vector<int> m;
        for (int x : l) m.push_back(map_ab[x]);
        std::sort(m.begin(), m.end());
        if (!b_lines.count(m)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(k + 1)) return true;
      map_ab[p] = -1;
      used[q] = 0;
    }
    return false;
  };
  return rec(0);
}

// All structures with the given signature, one labeled representative per
// isomorphism class.
inline std::vector<Labeled> oracle_enumerate(const plic::Signature& sig) {
  int num_points = static_cast<int>(sig.points_total());
  std::vector<int> valences_desc;
  for (auto& [v, c] : sig.point_counts())
    for (long long i = 0; i < c; ++i) valences_desc.push_back(v);
  std::sort(valences_desc.rbegin(), valences_desc.rend());
  int cap = valences_desc.empty() ? 0 : valences_desc[0];

  std::vector<int> sizes;
  for (auto& [v, c] : sig.line_counts())
    for (long long i = 0; i < c; ++i) sizes.push_back(v);
  std::sort(sizes.rbegin(), sizes.rend());
  for (int s : sizes)
    if (s > num_points) return {};

  std::map<int, long long> want = sig.point_counts();

  std::vector<Labeled> classes;
  Labeled cur;
  cur.num_points = num_points;
  cur.degree.assign(num_points, 0);

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == sizes.size()) {
      std::map<int, long long> got;
      for (int p = 0; p < num_points; ++p) ++got[cur.degree[p]];
      for (auto it = got.begin(); it != got.end();)
        it = it->second == 0 ? got.erase(it) : std::next(it);
      if (got != want) return;
      for (const auto& rep : classes)
        if (oracle_isomorphic(cur, rep)) return;
      classes.push_back(cur);
      return;
    }
    int size = sizes[k];
    // candidate tuples in lexicographic order; equal-size lines weakly
    // increasing (strictly when size >= 2, since they may not repeat)
    std::vector<int> tuple;
    std::function<void(int)> gen = [&](int start) {
      if (static_cast<int>(tuple.size()) == size) {
        if (k > 0 && sizes[k - 1] == size) {
          const auto& prev = cur.lines[k - 1];
          if (size >= 2 ? !(prev < tuple) : prev > tuple) return;
        }
        for (const auto& l : cur.lines) {
          int common = 0;
          for (int x : l)
            if (std::binary_search(tuple.begin(), tuple.end(), x)) ++common;
          if (common > 1) return;
        }
        cur.lines.push_back(tuple);
        for (int x : tuple) ++cur.degree[x];
        rec(k + 1);
        for (int x : tuple) --cur.degree[x];
        cur.lines.pop_back();
        return;
      }
      int need = size - static_cast<int>(tuple.size());
      for (int p = start; p + need <= num_points; ++p) {
        if (cur.degree[p] >= cap) continue;
        tuple.push_back(p);
        gen(p + 1);
        tuple.pop_back();
      }
    };
    if (size == 0) {
      cur.lines.push_back({});
      rec(k + 1);
      cur.lines.pop_back();
    } else {
      gen(0);
    }
  };
  rec(0);
  return classes;
}

inline plic::IncidenceStructure to_structure(const Labeled& l) {
  std::vector<std::string> pids, lids;
  for (int i = 0; i < l.num_points; ++i) pids.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < l.lines.size(); ++i)
    lids.push_back("l" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> inc;
  for (std::size_t i = 0; i < l.lines.size(); ++i)
    for (int p : l.lines[i]) inc.emplace_back(pids[p], lids[i]);
  return plic::IncidenceStructure::make(pids, lids, inc);
}

}  // namespace plic_oracle
