#include "plic/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

namespace plic {

namespace {

int valence_of(const IncidenceStructure& s, const ElemRef& e) {
  if (e.kind == Kind::Point)
    return static_cast<int>(s.lines_of_point(s.require_point(e.id)).size());
  return static_cast<int>(s.points_of_line(s.require_line(e.id)).size());
}

Realized renamed_with_prefix(const Realized& r, const std::string& prefix) {
  std::map<std::string, std::string> pn, ln;
  std::vector<std::string> pids, lids;
  for (const auto& id : r.inc.point_ids()) {
    pn[id] = prefix + id;
    pids.push_back(prefix + id);
  }
  for (const auto& id : r.inc.line_ids()) {
    ln[id] = prefix + id;
    lids.push_back(prefix + id);
  }
  std::vector<std::pair<std::string, std::string>> inc;
  for (const auto& [p, l] : r.inc.incidence_pairs())
    inc.emplace_back(pn[p], ln[l]);
  return Realized{IncidenceStructure::make(pids, lids, inc),
                  r.coords.renamed(pn, ln)};
}

}  // namespace

// ---- deletion ----

DeleteResult delete_elements(const Realized& s, const std::vector<ElemRef>& victims) {
  std::unordered_set<std::string> dp, dl;
  for (const auto& v : victims) {
    valence_of(s.inc, v);  // validates the id
    (v.kind == Kind::Point ? dp : dl).insert(v.id);
  }
  std::vector<std::string> kp, kl;
  for (const auto& id : s.inc.point_ids())
    if (!dp.count(id)) kp.push_back(id);
  for (const auto& id : s.inc.line_ids())
    if (!dl.count(id)) kl.push_back(id);
  IncidenceStructure sub = induced_substructure(s.inc, kp, kl);

  DeleteResult out{Realized{sub, s.coords.restricted(kp, kl)}, {}};
  for (const auto& id : kp) {
    int before = static_cast<int>(s.inc.lines_of_point(s.inc.require_point(id)).size());
    int after = static_cast<int>(sub.lines_of_point(sub.require_point(id)).size());
    if (after != before)
      out.changed.push_back({ElemRef{Kind::Point, id}, before, after});
  }
  for (const auto& id : kl) {
    int before = static_cast<int>(s.inc.points_of_line(s.inc.require_line(id)).size());
    int after = static_cast<int>(sub.points_of_line(sub.require_line(id)).size());
    if (after != before)
      out.changed.push_back({ElemRef{Kind::Line, id}, before, after});
  }
  return out;
}

// ---- superposition ----

SuperposeResult superpose(const Realized& a, const Realized& b, const GlueSpec& spec) {
  Realization b_coords = spec.transform ? b.coords.transformed(*spec.transform)
                                        : b.coords;

  std::map<std::string, std::string> b_point_names, b_line_names;
  std::unordered_set<std::string> a_pts(a.inc.point_ids().begin(), a.inc.point_ids().end());
  std::unordered_set<std::string> a_lns(a.inc.line_ids().begin(), a.inc.line_ids().end());
  std::unordered_set<std::string> ident_a;

  for (const auto& [ea, eb] : spec.identify) {
    if (ea.kind != eb.kind)
      fail(Errc::KindMismatch, "cannot identify '" + ea.id + "' with '" + eb.id + "'");
    valence_of(a.inc, ea);
    valence_of(b.inc, eb);
    if (!ident_a.insert((ea.kind == Kind::Point ? "p:" : "l:") + ea.id).second)
      fail(Errc::ValidationError, "element '" + ea.id + "' identified twice");
    if (ea.kind == Kind::Point) {
      const ProjPoint* pa = a.coords.point(ea.id);
      const ProjPoint* pb = b_coords.point(eb.id);
      if (!pa || !pb) fail(Errc::UnmappedId, "identified point lacks coordinates");
      if (*pa != *pb)
        fail(Errc::CoordinateMismatch, "points '" + ea.id + "' and '" + eb.id +
                                           "' differ after transform: " + pa->str() +
                                           " vs " + pb->str());
      if (!b_point_names.emplace(eb.id, ea.id).second)
        fail(Errc::ValidationError, "element '" + eb.id + "' identified twice");
    } else {
      const ProjLine* la = a.coords.line(ea.id);
      const ProjLine* lb = b_coords.line(eb.id);
      if (!la || !lb) fail(Errc::UnmappedId, "identified line lacks coordinates");
      if (*la != *lb)
        fail(Errc::CoordinateMismatch, "lines '" + ea.id + "' and '" + eb.id +
                                           "' differ after transform");
      if (!b_line_names.emplace(eb.id, ea.id).second)
        fail(Errc::ValidationError, "element '" + eb.id + "' identified twice");
    }
  }

  auto fresh = [&](const std::string& id, bool is_point) {
    std::string name = spec.b_prefix + id;
    while ((is_point ? a_pts : a_lns).count(name)) name = spec.b_prefix + name;
    return name;
  };
  for (const auto& id : b.inc.point_ids())
    if (!b_point_names.count(id)) b_point_names[id] = fresh(id, true);
  for (const auto& id : b.inc.line_ids())
    if (!b_line_names.count(id)) b_line_names[id] = fresh(id, false);

  std::vector<std::string> pids = a.inc.point_ids();
  std::vector<std::string> lids = a.inc.line_ids();
  for (const auto& id : b.inc.point_ids())
    if (!a_pts.count(b_point_names[id])) pids.push_back(b_point_names[id]);
  for (const auto& id : b.inc.line_ids())
    if (!a_lns.count(b_line_names[id])) lids.push_back(b_line_names[id]);

  std::set<std::pair<std::string, std::string>> inc;
  for (const auto& [p, l] : a.inc.incidence_pairs()) inc.emplace(p, l);
  for (const auto& [p, l] : b.inc.incidence_pairs())
    inc.emplace(b_point_names[p], b_line_names[l]);

  IncidenceStructure merged = IncidenceStructure::make(
      pids, lids, std::vector<std::pair<std::string, std::string>>(inc.begin(), inc.end()));

  Realization coords = a.coords;
  for (const auto& [id, name] : b_point_names) {
    const ProjPoint* p = b_coords.point(id);
    if (p) coords.set_point(name, *p);
  }
  for (const auto& [id, name] : b_line_names) {
    const ProjLine* l = b_coords.line(id);
    if (l) coords.set_line(name, *l);
  }

  Realized out{std::move(merged), std::move(coords)};
  FaithfulnessReport report = check_faithful(out.inc, out.coords);
  return SuperposeResult{std::move(out), std::move(report)};
}

// ---- splitting ----

SplitCheck check_split(const IncidenceStructure& s, const SplitSpec& spec) {
  std::unordered_set<std::string> ap, al;
  for (const auto& id : spec.part_a_points) {
    if (s.point_index(id) < 0) fail(Errc::NotAPartition, "unknown point '" + id + "'");
    if (!ap.insert(id).second) fail(Errc::NotAPartition, "point '" + id + "' listed twice");
  }
  for (const auto& id : spec.part_a_lines) {
    if (s.line_index(id) < 0) fail(Errc::NotAPartition, "unknown line '" + id + "'");
    if (!al.insert(id).second) fail(Errc::NotAPartition, "line '" + id + "' listed twice");
  }
  std::vector<std::string> bp, bl;
  for (const auto& id : s.point_ids())
    if (!ap.count(id)) bp.push_back(id);
  for (const auto& id : s.line_ids())
    if (!al.count(id)) bl.push_back(id);

  IncidenceStructure part_a = induced_substructure(s, spec.part_a_points, spec.part_a_lines);
  IncidenceStructure part_b = induced_substructure(s, bp, bl);
  SplitCheck out;
  out.part_a = signature_of(part_a);
  out.part_b = signature_of(part_b);
  out.both_quasi = is_quasi_configuration(part_a) && is_quasi_configuration(part_b);
  return out;
}

// ---- set-to-set glue maps ----

namespace {

// Kernel of the stacked constraint matrix, when it is one-dimensional.
// Rows have 9 entries (the unknown matrix, row-major).
std::optional<std::array<Rat, 9>> unique_kernel(std::vector<std::array<Rat, 9>> rows,
                                                bool* degenerate) {
  int pivot_row = 0;
  std::vector<int> pivot_cols;
  for (int col = 0; col < 9 && pivot_row < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[pivot_row], rows[sel]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[pivot_row][col];
      for (int c = col; c < 9; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  int rank = pivot_row;
  if (rank < 8) {
    *degenerate = true;
    return std::nullopt;
  }
  if (rank > 8) return std::nullopt;  // only the zero solution
  int free_col = 0;
  {
    std::vector<char> is_pivot(9, 0);
    for (int c : pivot_cols) is_pivot[c] = 1;
    while (is_pivot[free_col]) ++free_col;
  }
  std::array<Rat, 9> x{};
  x[free_col] = 1;
  for (int i = rank - 1; i >= 0; --i) {
    int pc = pivot_cols[i];
    Rat acc = 0;
    for (int c = pc + 1; c < 9; ++c) acc += rows[i][c] * x[c];
    x[pc] = -acc / rows[i][pc];
  }
  return x;
}

void add_point_rows(std::vector<std::array<Rat, 9>>& rows, const ProjPoint& from,
                    const ProjPoint& to) {
  // cross(M*p, q) = 0
  const auto& p = from.coords();
  const auto& q = to.coords();
  // component pairs of the cross product: (row of M used, sign)
  const int comp[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (auto [a, b] : comp) {
    std::array<Rat, 9> row{};
    for (int j = 0; j < 3; ++j) {
      row[3 * a + j] += Rat(q[b]) * Rat(p[j]);
      row[3 * b + j] -= Rat(q[a]) * Rat(p[j]);
    }
    rows.push_back(row);
  }
}

void add_line_rows(std::vector<std::array<Rat, 9>>& rows, const ProjLine& from,
                   const ProjLine& to) {
  // M maps line l to m iff M^T * m is parallel to l: cross(M^T m, l) = 0
  const auto& l = from.coeffs();
  const auto& m = to.coeffs();
  const int comp[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (auto [a, b] : comp) {
    std::array<Rat, 9> row{};
    for (int i = 0; i < 3; ++i) {
      row[3 * i + a] += Rat(l[b]) * Rat(m[i]);
      row[3 * i + b] -= Rat(l[a]) * Rat(m[i]);
    }
    rows.push_back(row);
  }
}

}  // namespace

std::vector<ProjMap> find_set_glue_map(const std::array<GeomElem, 4>& from,
                                       const std::array<GeomElem, 4>& to) {
  std::vector<int> from_pts, from_lns, to_pts, to_lns;
  for (int i = 0; i < 4; ++i) {
    (std::holds_alternative<ProjPoint>(from[i]) ? from_pts : from_lns).push_back(i);
    (std::holds_alternative<ProjPoint>(to[i]) ? to_pts : to_lns).push_back(i);
  }
  if (from_pts.size() != to_pts.size())
    fail(Errc::NoCompatibleOrdering,
         "marked sets carry different numbers of points and lines");

  std::vector<ProjMap> out;
  std::set<ProjMap> seen;
  bool any_degenerate = false;

  std::vector<int> pperm = to_pts, lperm = to_lns;
  std::sort(pperm.begin(), pperm.end());
  std::sort(lperm.begin(), lperm.end());
  do {
    std::vector<int> lp = lperm;
    std::sort(lp.begin(), lp.end());
    do {
      std::vector<std::array<Rat, 9>> rows;
      for (std::size_t i = 0; i < from_pts.size(); ++i)
        add_point_rows(rows, std::get<ProjPoint>(from[from_pts[i]]),
                       std::get<ProjPoint>(to[pperm[i]]));
      for (std::size_t i = 0; i < from_lns.size(); ++i)
        add_line_rows(rows, std::get<ProjLine>(from[from_lns[i]]),
                      std::get<ProjLine>(to[lp[i]]));
      bool degenerate = false;
      auto sol = unique_kernel(std::move(rows), &degenerate);
      any_degenerate = any_degenerate || degenerate;
      if (!sol) continue;
      ProjMap m = ProjMap::identity();
      try {
        m = ProjMap::from_rows({{{(*sol)[0], (*sol)[1], (*sol)[2]},
                                 {(*sol)[3], (*sol)[4], (*sol)[5]},
                                 {(*sol)[6], (*sol)[7], (*sol)[8]}}});
      } catch (const Error&) {
        continue;  // singular solution: no projectivity for this ordering
      }
      bool ok = true;
      for (std::size_t i = 0; i < from_pts.size() && ok; ++i)
        ok = m(std::get<ProjPoint>(from[from_pts[i]])) ==
             std::get<ProjPoint>(to[pperm[i]]);
      for (std::size_t i = 0; i < from_lns.size() && ok; ++i)
        ok = m(std::get<ProjLine>(from[from_lns[i]])) ==
             std::get<ProjLine>(to[lp[i]]);
      if (ok && seen.insert(m).second) out.push_back(m);
    } while (std::next_permutation(lp.begin(), lp.end()));
  } while (std::next_permutation(pperm.begin(), pperm.end()));

  if (out.empty() && any_degenerate)
    fail(Errc::DegenerateFrame, "marked sets are in degenerate position");
  return out;
}

// ---- recipes ----

TwoCopiesResult recipe_two_copies_two_lines(const Realized& x, const ProjMap& transform) {
  Signature sig = signature_of(x.inc);
  std::vector<std::string> low;
  for (const auto& id : x.inc.point_ids()) {
    int v = static_cast<int>(x.inc.lines_of_point(x.inc.require_point(id)).size());
    if (v == 3)
      low.push_back(id);
    else if (v != 4)
      fail(Errc::PreconditionViolated, "point '" + id + "' is neither 3- nor 4-valent");
  }
  for (const auto& id : x.inc.line_ids()) {
    int v = static_cast<int>(x.inc.points_of_line(x.inc.require_line(id)).size());
    if (v != 4) fail(Errc::PreconditionViolated, "line '" + id + "' is not 4-valent");
  }
  if (low.size() != 4)
    fail(Errc::PreconditionViolated, "input needs exactly four 3-valent points, found " +
                                         std::to_string(low.size()));

  Realized a = renamed_with_prefix(x, "A:");
  Realized b_src{x.inc, x.coords.transformed(transform)};
  Realized b = renamed_with_prefix(b_src, "B:");

  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  std::vector<std::string> diagnostics;
  bool saw_collision = false;

  for (const auto& pr : pairings) {
    std::ostringstream tag;
    tag << "pairing {" << low[pr[0]] << "," << low[pr[1]] << "}/{" << low[pr[2]]
        << "," << low[pr[3]] << "}: ";
    const ProjPoint* a0 = a.coords.point("A:" + low[pr[0]]);
    const ProjPoint* a1 = a.coords.point("A:" + low[pr[1]]);
    const ProjPoint* a2 = a.coords.point("A:" + low[pr[2]]);
    const ProjPoint* a3 = a.coords.point("A:" + low[pr[3]]);
    if (*a0 == *a1 || *a2 == *a3) {
      diagnostics.push_back(tag.str() + "coincident pair");
      continue;
    }
    ProjLine g1 = join(*a0, *a1);
    ProjLine g2 = join(*a2, *a3);
    std::vector<std::string> on_g1, on_g2;
    for (const auto& id : low) {
      const ProjPoint* pb = b.coords.point("B:" + id);
      if (incident(*pb, g1)) on_g1.push_back("B:" + id);
      if (incident(*pb, g2)) on_g2.push_back("B:" + id);
    }
    if (on_g1.size() != 2 || on_g2.size() != 2 || on_g1 == on_g2) {
      diagnostics.push_back(tag.str() + "transform does not place two copy-B points on each line");
      continue;
    }

    std::vector<std::string> pids = a.inc.point_ids();
    pids.insert(pids.end(), b.inc.point_ids().begin(), b.inc.point_ids().end());
    std::vector<std::string> lids = a.inc.line_ids();
    lids.insert(lids.end(), b.inc.line_ids().begin(), b.inc.line_ids().end());
    lids.push_back("g1");
    lids.push_back("g2");
    auto inc = a.inc.incidence_pairs();
    for (const auto& pl : b.inc.incidence_pairs()) inc.push_back(pl);
    inc.emplace_back("A:" + low[pr[0]], "g1");
    inc.emplace_back("A:" + low[pr[1]], "g1");
    inc.emplace_back(on_g1[0], "g1");
    inc.emplace_back(on_g1[1], "g1");
    inc.emplace_back("A:" + low[pr[2]], "g2");
    inc.emplace_back("A:" + low[pr[3]], "g2");
    inc.emplace_back(on_g2[0], "g2");
    inc.emplace_back(on_g2[1], "g2");

    Realized cand{IncidenceStructure::make(pids, lids, inc), a.coords};
    for (const auto& [id, p] : b.coords.points()) cand.coords.set_point(id, p);
    for (const auto& [id, l] : b.coords.lines()) cand.coords.set_line(id, l);
    cand.coords.set_line("g1", g1);
    cand.coords.set_line("g2", g2);

    FaithfulnessReport rep = check_faithful(cand.inc, cand.coords);
    if (rep.faithful() && is_k_configuration(cand.inc, 4)) {
      return TwoCopiesResult{std::move(cand), std::move(rep), {"g1", "g2"},
                             std::move(diagnostics)};
    }
    saw_collision = saw_collision || !rep.point_collisions.empty() ||
                    !rep.line_collisions.empty();
    diagnostics.push_back(tag.str() + rep.summary());
  }
  fail(saw_collision ? Errc::CoordinateMismatch : Errc::SearchExhausted,
       "no pairing yields a clean 4-configuration (" +
           std::to_string(diagnostics.size()) + " attempts)");
}

namespace {

// Patches the 3-valent lines left by deleting points: pairs them up, adds
// one new point at the meet of every pair, rejecting matchings that create
// collisions or unwanted incidences. Shared by the two deletion recipes.
PatchResult patch_deficient_lines(const Realized& reduced,
                                  const std::vector<std::string>& open_lines,
                                  const std::vector<ElemRef>& extra_marked,
                                  const std::string& new_prefix) {
  int n = static_cast<int>(open_lines.size());
  std::vector<std::string> diagnostics;

  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> acc;
  std::vector<char> used(n, 0);
  std::function<void()> gen = [&] {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      matchings.push_back(acc);
      return;
    }
    used[first] = 1;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      acc.emplace_back(first, j);
      gen();
      acc.pop_back();
      used[j] = 0;
    }
    used[first] = 0;
  };
  gen();

  for (const auto& matching : matchings) {
    std::ostringstream tag;
    tag << "matching";
    for (auto [i, j] : matching) tag << " (" << open_lines[i] << "," << open_lines[j] << ")";
    tag << ": ";

    std::vector<ProjPoint> fresh;
    bool ok = true;
    std::string why;
    for (auto [i, j] : matching) {
      const ProjLine* li = reduced.coords.line(open_lines[i]);
      const ProjLine* lj = reduced.coords.line(open_lines[j]);
      if (*li == *lj) {
        ok = false;
        why = "lines coincide";
        break;
      }
      fresh.push_back(meet(*li, *lj));
    }
    if (ok) {
      for (std::size_t i = 0; i < fresh.size() && ok; ++i)
        for (std::size_t j = i + 1; j < fresh.size() && ok; ++j)
          if (fresh[i] == fresh[j]) {
            ok = false;
            why = "two new points coincide";
          }
      for (std::size_t i = 0; i < fresh.size() && ok; ++i) {
        for (const auto& [id, p] : reduced.coords.points())
          if (p == fresh[i]) {
            ok = false;
            why = "new point collides with '" + id + "'";
            break;
          }
      }
    }
    if (ok) {
      // a new point may touch only its own two lines
      for (std::size_t k = 0; k < matching.size() && ok; ++k) {
        for (const auto& id : reduced.inc.line_ids()) {
          if (id == open_lines[matching[k].first] || id == open_lines[matching[k].second])
            continue;
          if (incident(fresh[k], *reduced.coords.line(id))) {
            ok = false;
            why = "new point lands on line '" + id + "'";
            break;
          }
        }
      }
    }
    if (!ok) {
      diagnostics.push_back(tag.str() + why);
      continue;
    }

    std::vector<std::string> pids = reduced.inc.point_ids();
    std::vector<ElemRef> marked;
    auto inc = reduced.inc.incidence_pairs();
    Realization coords = reduced.coords;
    for (std::size_t k = 0; k < matching.size(); ++k) {
      std::string id = new_prefix + std::to_string(k);
      pids.push_back(id);
      marked.push_back(ElemRef{Kind::Point, id});
      inc.emplace_back(id, open_lines[matching[k].first]);
      inc.emplace_back(id, open_lines[matching[k].second]);
      coords.set_point(id, fresh[k]);
    }
    for (const auto& e : extra_marked) marked.push_back(e);

    Realized patched{IncidenceStructure::make(pids, reduced.inc.line_ids(), inc),
                     std::move(coords)};
    FaithfulnessReport rep = check_faithful(patched.inc, patched.coords);
    if (!rep.faithful()) {
      diagnostics.push_back(tag.str() + rep.summary());
      continue;
    }
    diagnostics.push_back(tag.str() + "ok");
    return PatchResult{std::move(patched), std::move(marked), std::move(diagnostics)};
  }
  throw Error(Errc::NoValidMatching,
              "every pairing of the deficient lines creates collisions or extra incidences");
}

}  // namespace

PatchResult recipe_delete2_patch4(const Realized& s, const std::string& p1,
                                  const std::string& p2) {
  int i1 = s.inc.require_point(p1);
  int i2 = s.inc.require_point(p2);
  if (p1 == p2) fail(Errc::PreconditionViolated, "the two points must differ");
  if (s.inc.lines_of_point(i1).size() != 4 || s.inc.lines_of_point(i2).size() != 4)
    fail(Errc::PreconditionViolated, "both points must be 4-valent");
  for (int l : s.inc.lines_of_point(i1))
    if (s.inc.incident(i2, l))
      fail(Errc::PreconditionViolated,
           "points '" + p1 + "' and '" + p2 + "' share line '" + s.inc.line_ids()[l] + "'");

  std::vector<std::string> open_lines;
  for (int l : s.inc.lines_of_point(i1)) open_lines.push_back(s.inc.line_ids()[l]);
  for (int l : s.inc.lines_of_point(i2)) open_lines.push_back(s.inc.line_ids()[l]);
  std::sort(open_lines.begin(), open_lines.end());

  DeleteResult del = delete_elements(s, {ElemRef{Kind::Point, p1}, ElemRef{Kind::Point, p2}});
  return patch_deficient_lines(del.result, open_lines, {}, "n");
}

PatchResult recipe_delete2_sameline_patch3(const Realized& s, const std::string& p1,
                                           const std::string& p2) {
  int i1 = s.inc.require_point(p1);
  int i2 = s.inc.require_point(p2);
  if (p1 == p2) fail(Errc::PreconditionViolated, "the two points must differ");
  if (s.inc.lines_of_point(i1).size() != 4 || s.inc.lines_of_point(i2).size() != 4)
    fail(Errc::PreconditionViolated, "both points must be 4-valent");
  int shared = -1;
  for (int l : s.inc.lines_of_point(i1))
    if (s.inc.incident(i2, l)) shared = l;
  if (shared < 0)
    fail(Errc::NotCollinear, "points '" + p1 + "' and '" + p2 + "' share no line");

  std::vector<std::string> open_lines;
  for (int l : s.inc.lines_of_point(i1))
    if (l != shared) open_lines.push_back(s.inc.line_ids()[l]);
  for (int l : s.inc.lines_of_point(i2))
    if (l != shared) open_lines.push_back(s.inc.line_ids()[l]);
  std::sort(open_lines.begin(), open_lines.end());

  DeleteResult del = delete_elements(s, {ElemRef{Kind::Point, p1}, ElemRef{Kind::Point, p2}});
  return patch_deficient_lines(del.result, open_lines,
                               {ElemRef{Kind::Line, s.inc.line_ids()[shared]}}, "n");
}

GlueResult glue_deficient_pair(const Realized& a, const std::vector<ElemRef>& marked_a,
                               const Realized& b, const std::vector<ElemRef>& marked_b) {
  if (marked_a.size() != 4 || marked_b.size() != 4)
    fail(Errc::PreconditionViolated, "each piece needs exactly four marked elements");
  for (const auto& e : marked_a)
    if (valence_of(a.inc, e) != 2)
      fail(Errc::PreconditionViolated, "marked element '" + e.id + "' is not 2-valent");
  for (const auto& e : marked_b)
    if (valence_of(b.inc, e) != 2)
      fail(Errc::PreconditionViolated, "marked element '" + e.id + "' is not 2-valent");

  auto geom = [](const Realized& r, const ElemRef& e) -> GeomElem {
    if (e.kind == Kind::Point) {
      const ProjPoint* p = r.coords.point(e.id);
      if (!p) fail(Errc::UnmappedId, "marked point '" + e.id + "' lacks coordinates");
      return *p;
    }
    const ProjLine* l = r.coords.line(e.id);
    if (!l) fail(Errc::UnmappedId, "marked line '" + e.id + "' lacks coordinates");
    return *l;
  };
  std::array<GeomElem, 4> from{geom(b, marked_b[0]), geom(b, marked_b[1]),
                               geom(b, marked_b[2]), geom(b, marked_b[3])};
  std::array<GeomElem, 4> to{geom(a, marked_a[0]), geom(a, marked_a[1]),
                             geom(a, marked_a[2]), geom(a, marked_a[3])};

  std::vector<ProjMap> candidates = find_set_glue_map(from, to);
  std::vector<std::string> diagnostics;
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const ProjMap& m = candidates[ci];
    GlueSpec spec;
    spec.transform = m;
    bool pairing_ok = true;
    for (const auto& eb : marked_b) {
      // match each transformed B element to the A element it lands on
      bool matched = false;
      for (const auto& ea : marked_a) {
        if (ea.kind != eb.kind) continue;
        if (eb.kind == Kind::Point) {
          if (m(*b.coords.point(eb.id)) == *a.coords.point(ea.id)) {
            spec.identify.emplace_back(ea, eb);
            matched = true;
            break;
          }
        } else {
          if (m(*b.coords.line(eb.id)) == *a.coords.line(ea.id)) {
            spec.identify.emplace_back(ea, eb);
            matched = true;
            break;
          }
        }
      }
      if (!matched) pairing_ok = false;
    }
    if (!pairing_ok) {
      diagnostics.push_back("candidate " + std::to_string(ci) +
                            ": marked images do not align");
      continue;
    }
    try {
      SuperposeResult sup = superpose(a, b, spec);
      if (!sup.report.faithful()) {
        diagnostics.push_back("candidate " + std::to_string(ci) + ": " +
                              sup.report.summary());
        continue;
      }
      if (!is_k_configuration(sup.result.inc, 4)) {
        diagnostics.push_back("candidate " + std::to_string(ci) +
                              ": result is not a 4-configuration");
        continue;
      }
      if (!is_connected(sup.result.inc)) {
        diagnostics.push_back("candidate " + std::to_string(ci) + ": result disconnected");
        continue;
      }
      return GlueResult{std::move(sup.result), m, static_cast<int>(ci),
                        std::move(sup.report), std::move(diagnostics)};
    } catch (const Error& e) {
      diagnostics.push_back("candidate " + std::to_string(ci) + ": " + e.what());
    }
  }
  if (candidates.empty()) diagnostics.push_back("no candidate maps");
  throw ExhaustedCandidatesError(std::move(diagnostics));
}

// ---- 3|4 to 4-configuration pipeline ----

long long make4_expected_size(const Signature& sig) {
  long long a = 0, b = 0, c = 0;
  for (auto& [v, n] : sig.point_counts()) {
    if (v == 3)
      a = n;
    else if (v == 4)
      b = n;
    else
      fail(Errc::PreconditionViolated, "not a 3|4 signature");
  }
  for (auto& [v, n] : sig.line_counts()) {
    if (v == 3)
      c = n;
    else if (v != 4)
      fail(Errc::PreconditionViolated, "not a 3|4 signature");
  }
  return 16 * a + 16 * b + 4 * c;
}

namespace {

std::vector<ProjMap> chart_candidates() {
  std::vector<ProjMap> out;
  out.push_back(ProjMap::identity());
  const long ks[][2] = {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 5},
                        {5, 2}, {3, 7}, {7, 3}, {1, -2}, {-3, 1}};
  for (auto [k1, k2] : ks)
    out.push_back(ProjMap::from_rows({{{Rat(1), Rat(0), Rat(0)},
                                       {Rat(0), Rat(1), Rat(0)},
                                       {Rat(k1), Rat(k2), Rat(1)}}}));
  return out;
}

std::vector<std::pair<long, long>> direction_candidates() {
  return {{1, 1},  {1, -1}, {2, 1},  {1, 2},  {3, 1},  {1, 3},  {3, 2},
          {2, 3},  {5, 1},  {1, 5},  {5, 2},  {2, 5},  {4, 1},  {1, 4},
          {5, 3},  {3, 5},  {7, 2},  {2, 7},  {8, 3},  {3, 8},  {7, 5},
          {11, 3}, {13, 5}, {17, 3}, {19, 7}, {23, 9}, {29, 11}};
}

// One translation stage: four copies shifted by 0,t,2t,3t plus one new line
// per 3-valent point, in direction t. Needs an all-finite placement.
Realized quadruple_with_lines(const Realized& x, std::vector<std::string>& notes) {
  for (const ProjMap& w : chart_candidates()) {
    Realized xw{x.inc, x.coords.transformed(w)};
    bool finite = true;
    for (const auto& [id, p] : xw.coords.points())
      if (p.at_infinity()) {
        finite = false;
        break;
      }
    ProjLine infinity_line = ProjLine::of(0, 0, 1);
    if (finite)
      for (const auto& [id, l] : xw.coords.lines())
        if (l == infinity_line) {
          finite = false;
          break;
        }
    if (!finite) continue;

    for (auto [vx, vy] : direction_candidates()) {
      bool parallel = false;
      for (const auto& [id, l] : xw.coords.lines()) {
        if (l.coeffs()[0] * vx + l.coeffs()[1] * vy == 0) {
          parallel = true;
          break;
        }
      }
      if (parallel) continue;

      ProjMap t = translation(Rat(vx), Rat(vy));
      ProjPoint dir = ProjPoint::of(vx, vy, 0);

      std::vector<std::string> pids, lids;
      std::vector<std::pair<std::string, std::string>> inc;
      Realization coords;
      std::array<Realization, 4> shifted;
      shifted[0] = xw.coords;
      for (int c = 1; c < 4; ++c) shifted[c] = shifted[c - 1].transformed(t);
      for (int c = 0; c < 4; ++c) {
        std::string pre = "c" + std::to_string(c) + ".";
        for (const auto& id : xw.inc.point_ids()) {
          pids.push_back(pre + id);
          coords.set_point(pre + id, *shifted[c].point(id));
        }
        for (const auto& id : xw.inc.line_ids()) {
          lids.push_back(pre + id);
          coords.set_line(pre + id, *shifted[c].line(id));
        }
        for (const auto& [p, l] : xw.inc.incidence_pairs())
          inc.emplace_back(pre + p, pre + l);
      }
      int orbit = 0;
      for (const auto& id : xw.inc.point_ids()) {
        if (xw.inc.lines_of_point(xw.inc.require_point(id)).size() != 3) continue;
        std::string lid = "d" + std::to_string(orbit++);
        lids.push_back(lid);
        coords.set_line(lid, join(*xw.coords.point(id), dir));
        for (int c = 0; c < 4; ++c) inc.emplace_back("c" + std::to_string(c) + "." + id, lid);
      }

      Realized cand{IncidenceStructure::make(pids, lids, inc), std::move(coords)};
      if (!check_faithful(cand.inc, cand.coords).faithful()) continue;
      notes.push_back("chart " + w.str() + ", direction (" + std::to_string(vx) +
                      "," + std::to_string(vy) + ")");
      return cand;
    }
  }
  fail(Errc::SearchExhausted,
       "no chart/direction in the candidate grid gives a generic placement");
}

}  // namespace

Make4Result recipe_34_to_4(const Realized& x) {
  if (!is_34_configuration(x.inc))
    fail(Errc::PreconditionViolated, "input is not a 3|4-configuration");
  if (!check_faithful(x.inc, x.coords).faithful())
    fail(Errc::PreconditionViolated, "input realization is not faithful");

  Make4Result out;
  out.input_signature = signature_of(x.inc);
  out.expected_size = make4_expected_size(out.input_signature);

  Realized stage1 = quadruple_with_lines(x, out.notes);
  Realized stage2{dual_structure(stage1.inc), dual_realization(stage1.coords)};
  Realized stage3 = quadruple_with_lines(stage2, out.notes);

  if (!is_k_configuration(stage3.inc, 4))
    fail(Errc::ValidationError, "pipeline output is not a 4-configuration");
  if (stage3.inc.num_points() != out.expected_size ||
      stage3.inc.num_lines() != out.expected_size)
    fail(Errc::ValidationError, "pipeline output size mismatch");
  out.result = std::move(stage3);
  return out;
}

}  // namespace plic
