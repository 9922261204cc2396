#include "plic/catalog.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>

#include "plic/enumerate.hpp"

namespace plic {

namespace {

constexpr long kGridTriples[13][3] = {
    {-1, -1, 1}, {-1, 0, 1}, {-1, 1, 1}, {0, -1, 1}, {0, 0, 1},
    {0, 1, 1},   {1, -1, 1}, {1, 0, 1},  {1, 1, 1},  {1, 0, 0},
    {0, 1, 0},   {1, 1, 0},  {1, -1, 0},
};

}  // namespace

Realized build_13_entry() {
  std::vector<std::pair<std::string, ProjPoint>> pts;
  std::vector<std::pair<std::string, ProjLine>> lns;
  for (int i = 0; i < 13; ++i) {
    const auto& t = kGridTriples[i];
    pts.emplace_back("p" + std::to_string(i), ProjPoint::of(t[0], t[1], t[2]));
    lns.emplace_back("l" + std::to_string(i), ProjLine::of(t[0], t[1], t[2]));
  }
  return realized_from_coords(pts, lns);
}

std::vector<DeletionPattern> deletion_patterns_from_13(int remove_count,
                                                       long long expected_incidences,
                                                       DeletionVariant variant,
                                                       std::size_t max_patterns) {
  static const Realized thirteen = build_13_entry();
  const IncidenceStructure& s = thirteen.inc;

  std::array<unsigned, 13> point_mask{}, line_mask{};
  for (int p = 0; p < 13; ++p)
    for (int l : s.lines_of_point(p)) point_mask[p] |= 1u << l;
  for (int l = 0; l < 13; ++l)
    for (int p : s.points_of_line(l)) line_mask[l] |= 1u << p;

  auto valence_ok = [&](unsigned removed_pts, unsigned removed_lns) {
    long long inc = 0;
    int four_p = 0, four_l = 0;
    for (int p = 0; p < 13; ++p) {
      if (removed_pts & (1u << p)) continue;
      int d = __builtin_popcount(point_mask[p] & ~removed_lns);
      if (d != 3 && d != 4) return false;
      four_p += d == 4;
      inc += d;
    }
    if (inc != expected_incidences) return false;
    for (int l = 0; l < 13; ++l) {
      if (removed_lns & (1u << l)) continue;
      int d = __builtin_popcount(line_mask[l] & ~removed_pts);
      if (d != 3 && d != 4) return false;
      four_l += d == 4;
    }
    (void)four_p;
    (void)four_l;
    return true;
  };

  auto connected_ok = [&](unsigned removed_pts, unsigned removed_lns) {
    unsigned seen_p = 0, seen_l = 0, frontier_p = 0;
    for (int p = 0; p < 13; ++p)
      if (!(removed_pts & (1u << p))) {
        frontier_p = 1u << p;
        break;
      }
    if (frontier_p == 0) return false;
    seen_p = frontier_p;
    bool grew = true;
    while (grew) {
      grew = false;
      unsigned reach_l = 0;
      for (int p = 0; p < 13; ++p)
        if (seen_p & (1u << p)) reach_l |= point_mask[p];
      reach_l &= ~removed_lns;
      if (reach_l & ~seen_l) {
        seen_l |= reach_l;
        grew = true;
      }
      unsigned reach_p = 0;
      for (int l = 0; l < 13; ++l)
        if (seen_l & (1u << l)) reach_p |= line_mask[l];
      reach_p &= ~removed_pts;
      if (reach_p & ~seen_p) {
        seen_p |= reach_p;
        grew = true;
      }
    }
    return __builtin_popcount(seen_p) == 13 - remove_count &&
           __builtin_popcount(seen_l) == 13 - remove_count;
  };

  std::vector<int> low_points, low_lines;
  for (int p = 0; p < 13; ++p)
    if (s.lines_of_point(p).size() == 3) low_points.push_back(p);
  for (int l = 0; l < 13; ++l)
    if (s.points_of_line(l).size() == 3) low_lines.push_back(l);

  auto allowed_point = [&](int p) {
    return variant != DeletionVariant::PointsLowValent ||
           std::find(low_points.begin(), low_points.end(), p) != low_points.end();
  };
  auto allowed_line = [&](int l) {
    return variant != DeletionVariant::LinesLowValent ||
           std::find(low_lines.begin(), low_lines.end(), l) != low_lines.end();
  };

  std::vector<DeletionPattern> out;
  std::vector<int> rp(remove_count), rl(remove_count);
  std::function<void(int, int)> pick_lines = [&](int k, int start) {
    if (!out.empty() && out.size() >= max_patterns) return;
    if (k == remove_count) {
      unsigned pm = 0, lm = 0;
      for (int p : rp) pm |= 1u << p;
      for (int l : rl) lm |= 1u << l;
      if (!valence_ok(pm, lm) || !connected_ok(pm, lm)) return;
      DeletionPattern pat;
      for (int p : rp) pat.points.push_back(s.point_ids()[p]);
      for (int l : rl) pat.lines.push_back(s.line_ids()[l]);
      out.push_back(std::move(pat));
      return;
    }
    for (int l = start; l < 13; ++l) {
      if (!allowed_line(l)) continue;
      rl[k] = l;
      pick_lines(k + 1, l + 1);
      if (!out.empty() && out.size() >= max_patterns) return;
    }
  };
  std::function<void(int, int)> pick_points = [&](int k, int start) {
    if (!out.empty() && out.size() >= max_patterns) return;
    if (k == remove_count) {
      pick_lines(0, 0);
      return;
    }
    for (int p = start; p < 13; ++p) {
      if (!allowed_point(p)) continue;
      rp[k] = p;
      pick_points(k + 1, p + 1);
      if (!out.empty() && out.size() >= max_patterns) return;
    }
  };
  pick_points(0, 0);
  return out;
}

namespace {

Realized delete_from_13(const DeletionPattern& pat) {
  const Realized thirteen = build_13_entry();
  std::vector<std::string> kp, kl;
  for (const auto& id : thirteen.inc.point_ids())
    if (std::find(pat.points.begin(), pat.points.end(), id) == pat.points.end())
      kp.push_back(id);
  for (const auto& id : thirteen.inc.line_ids())
    if (std::find(pat.lines.begin(), pat.lines.end(), id) == pat.lines.end())
      kl.push_back(id);
  return Realized{induced_substructure(thirteen.inc, kp, kl),
                  thirteen.coords.restricted(kp, kl)};
}

IncidenceStructure make_combinatorial(
    int num_points, int num_lines,
    const std::vector<std::vector<int>>& lines,
    const std::string& ppre = "p", const std::string& lpre = "l") {
  std::vector<std::string> pids, lids;
  for (int i = 0; i < num_points; ++i) pids.push_back(ppre + std::to_string(i));
  for (int i = 0; i < num_lines; ++i) lids.push_back(lpre + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> inc;
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (int p : lines[l]) inc.emplace_back(pids[p], lids[l]);
  return IncidenceStructure::make(pids, lids, inc);
}

IncidenceStructure build_fano() {
  return make_combinatorial(7, 7,
                            {{0, 1, 3},
                             {1, 2, 4},
                             {2, 3, 5},
                             {3, 4, 6},
                             {4, 5, 0},
                             {5, 6, 1},
                             {6, 0, 2}});
}

IncidenceStructure build_8_3() {
  // the unique triple system on 8 points with two points on at most one
  // line and all valences 3 (Moebius-Kantor)
  return make_combinatorial(8, 8,
                            {{0, 1, 3},
                             {1, 2, 4},
                             {2, 3, 5},
                             {3, 4, 6},
                             {4, 5, 7},
                             {5, 6, 0},
                             {6, 7, 1},
                             {7, 0, 2}});
}

// The unique optimal nine-element 3|4-configuration: a 4-valent point on
// four 3-valent lines pairing the remaining eight points, a 4-valent line
// through one point of each pair, and a cyclic patching of the rest. It
// admits no rational realization: a realization forces the cross-ratio m of
// the four lines through the 4-valent point to satisfy m^2 - 3m + 1 = 0.
IncidenceStructure build_9_34() {
  // points: 0 = O, 1..4 = a1..a4, 5..8 = b1..b4
  // lines: 0..3 pencil through O, 4 = F, 5..8 cyclic patch lines
  return make_combinatorial(9, 9,
                            {{0, 1, 5},
                             {0, 2, 6},
                             {0, 3, 7},
                             {0, 4, 8},
                             {1, 2, 3, 4},
                             {1, 6, 7},
                             {2, 7, 8},
                             {3, 8, 5},
                             {4, 5, 6}});
}

// Desargues: points = 2-subsets of {0..4}, lines = 3-subsets.
void desargues_labels(std::vector<std::array<int, 2>>& pts,
                      std::vector<std::array<int, 3>>& lns) {
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pts.push_back({a, b});
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) lns.push_back({a, b, c});
}

IncidenceStructure build_desargues() {
  std::vector<std::array<int, 2>> pts;
  std::vector<std::array<int, 3>> lns;
  desargues_labels(pts, lns);
  std::vector<std::vector<int>> lines(10);
  for (int l = 0; l < 10; ++l)
    for (int p = 0; p < 10; ++p)
      if (std::includes(lns[l].begin(), lns[l].end(), pts[p].begin(), pts[p].end()))
        lines[l].push_back(p);
  return make_combinatorial(10, 10, lines);
}

// A ten-element 3|4-configuration with signature (8x^3+2x^4, 8y^3+2y^4):
// Desargues plus the two girth-safe incidences ({0,1} on {2,3,4}) and
// ({0,2} on {1,3,4}).
IncidenceStructure build_fig2_style_10() {
  std::vector<std::array<int, 2>> pts;
  std::vector<std::array<int, 3>> lns;
  desargues_labels(pts, lns);
  std::vector<std::vector<int>> lines(10);
  for (int l = 0; l < 10; ++l)
    for (int p = 0; p < 10; ++p)
      if (std::includes(lns[l].begin(), lns[l].end(), pts[p].begin(), pts[p].end()))
        lines[l].push_back(p);
  auto pt_index = [&](std::array<int, 2> q) {
    return static_cast<int>(std::find(pts.begin(), pts.end(), q) - pts.begin());
  };
  auto ln_index = [&](std::array<int, 3> q) {
    return static_cast<int>(std::find(lns.begin(), lns.end(), q) - lns.begin());
  };
  lines[ln_index({2, 3, 4})].push_back(pt_index({0, 1}));
  lines[ln_index({1, 3, 4})].push_back(pt_index({0, 2}));
  for (auto& l : lines) std::sort(l.begin(), l.end());
  return make_combinatorial(10, 10, lines);
}

// Optimal twelve-element 3|4-configuration built on the nine points of the
// affine plane of order three: the nine lines of three parallel classes,
// two new points completing two of the classes, and three new lines, each
// carrying one cell pair of the remaining direction and a common new point.
// It contains the nine-line affine structure exactly and the Desargues
// configuration in the incidence-preserving sense.
IncidenceStructure build_fig8_style_12() {
  std::vector<std::string> pids, lids;
  for (int i = 0; i < 9; ++i) pids.push_back("p" + std::to_string(i));
  pids.push_back("q0");
  pids.push_back("q1");
  pids.push_back("q2");
  for (int i = 0; i < 9; ++i) lids.push_back("l" + std::to_string(i));
  lids.push_back("m0");
  lids.push_back("m1");
  lids.push_back("m2");

  std::vector<std::pair<std::string, std::string>> inc;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 3; ++x)
        inc.emplace_back("p" + std::to_string(3 * x + (a * x + b) % 3),
                         "l" + std::to_string(3 * a + b));
  for (int b = 0; b < 3; ++b) inc.emplace_back("q0", "l" + std::to_string(b));
  for (int b = 0; b < 3; ++b) inc.emplace_back("q1", "l" + std::to_string(3 + b));
  for (int x = 0; x < 3; ++x) {
    inc.emplace_back("p" + std::to_string(3 * x), "m" + std::to_string(x));
    inc.emplace_back("p" + std::to_string(3 * x + 1), "m" + std::to_string(x));
    inc.emplace_back("q2", "m" + std::to_string(x));
  }
  return IncidenceStructure::make(pids, lids, inc);
}

CatalogEntry make_entry(std::string key, std::string note, Realized data,
                        bool has_coords, bool transcription, Signature sig,
                        long long inc) {
  CatalogEntry e;
  e.key = std::move(key);
  e.note = std::move(note);
  e.data = std::move(data);
  e.has_coords = has_coords;
  e.transcription = transcription;
  e.expected_signature = std::move(sig);
  e.expected_incidences = inc;
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  out.push_back(make_entry(
      "13_34", "self-polar: 3x3 grid points plus four directions, lines polar",
      build_13_entry(), true, false, Signature::parse("4*x^3+9*x^4|4*y^3+9*y^4"), 48));

  auto d12 = deletion_patterns_from_13(1, 42, DeletionVariant::Any, 1);
  if (d12.empty()) fail(Errc::ValidationError, "catalog: no 12-element deletion");
  out.push_back(make_entry("12_34",
                           "13_34 minus point " + d12[0].points[0] + " and line " +
                               d12[0].lines[0],
                           delete_from_13(d12[0]), true, false,
                           Signature::parse("6*x^3+6*x^4|6*y^3+6*y^4"), 42));

  auto d11 = deletion_patterns_from_13(2, 37, DeletionVariant::Any, 1);
  if (d11.empty()) fail(Errc::ValidationError, "catalog: no 11-element deletion");
  out.push_back(make_entry("11_34", "13_34 minus two points and two lines",
                           delete_from_13(d11[0]), true, false,
                           Signature::parse("7*x^3+4*x^4|7*y^3+4*y^4"), 37));

  auto d10a = deletion_patterns_from_13(3, 33, DeletionVariant::PointsLowValent, 1);
  if (d10a.empty()) fail(Errc::ValidationError, "catalog: no 10-element deletion (a)");
  out.push_back(make_entry("10_34a",
                           "13_34 minus three 3-valent points and the three lines "
                           "covering them pairwise",
                           delete_from_13(d10a[0]), true, false,
                           Signature::parse("7*x^3+3*x^4|7*y^3+3*y^4"), 33));

  auto d10b = deletion_patterns_from_13(3, 33, DeletionVariant::LinesLowValent, 1);
  if (d10b.empty()) fail(Errc::ValidationError, "catalog: no 10-element deletion (b)");
  out.push_back(make_entry("10_34b",
                           "dual deletion: 13_34 minus three 3-valent lines and "
                           "three 4-valent points",
                           delete_from_13(d10b[0]), true, false,
                           Signature::parse("7*x^3+3*x^4|7*y^3+3*y^4"), 33));

  // No deletion of the 13-element entry reaches nine elements with 28
  // incidences (exhaustive search below comes back empty), so the optimal
  // nine-element entry ships combinatorially. Its unique combinatorial type
  // has no rational realization.
  auto d9 = deletion_patterns_from_13(4, 28, DeletionVariant::Any, 1);
  if (!d9.empty()) {
    out.push_back(make_entry("9_34", "13_34 minus four points and four lines",
                             delete_from_13(d9[0]), true, false,
                             Signature::parse("8*x^3+1*x^4|8*y^3+1*y^4"), 28));
  } else {
    out.push_back(make_entry(
        "9_34",
        "unique optimal nine-element type (combinatorial; no rational "
        "realization: the pencil cross-ratio satisfies m^2-3m+1=0)",
        Realized{build_9_34(), {}}, false, false,
        Signature::parse("8*x^3+1*x^4|8*y^3+1*y^4"), 28));
  }

  out.push_back(make_entry("7_3", "Fano plane (combinatorial only)",
                           Realized{build_fano(), {}}, false, false,
                           Signature::parse("7*x^3|7*y^3"), 21));
  out.push_back(make_entry("8_3", "Moebius-Kantor configuration (combinatorial only)",
                           Realized{build_8_3(), {}}, false, false,
                           Signature::parse("8*x^3|8*y^3"), 24));
  out.push_back(make_entry("10_3", "Desargues configuration (combinatorial only)",
                           Realized{build_desargues(), {}}, false, false,
                           Signature::parse("10*x^3|10*y^3"), 30));
  out.push_back(make_entry(
      "10_34_fig2",
      "stand-in with the documented signature: Desargues plus two incidences",
      Realized{build_fig2_style_10(), {}}, false, true,
      Signature::parse("8*x^3+2*x^4|8*y^3+2*y^4"), 32));
  out.push_back(make_entry(
      "12_34_fig8",
      "stand-in: affine-plane extension containing Pappus exactly and "
      "Desargues in the incidence-preserving sense",
      Realized{build_fig8_style_12(), {}}, false, true,
      Signature::parse("6*x^3+6*x^4|6*y^3+6*y^4"), 42));

  // Pappus with a rational realization: triples on y=0 and y=1, the six
  // cross joins, and the guaranteed collinear meets. Also the smallest
  // realized (n_{3|4}) entry of the catalog.
  {
    std::vector<std::pair<std::string, ProjPoint>> pts = {
        {"A1", ProjPoint::of(0, 0, 1)}, {"A2", ProjPoint::of(1, 0, 1)},
        {"A3", ProjPoint::of(3, 0, 1)}, {"B1", ProjPoint::of(0, 1, 1)},
        {"B2", ProjPoint::of(2, 1, 1)}, {"B3", ProjPoint::of(5, 1, 1)},
        {"C12", ProjPoint::of(2, 1, 3)}, {"C13", ProjPoint::of(15, 3, 8)},
        {"C23", ProjPoint::of(13, 2, 5)}};
    auto pt = [&](const char* id) -> const ProjPoint& {
      for (auto& [k, v] : pts)
        if (k == id) return v;
      fail(Errc::UnknownId, id);
    };
    std::vector<std::pair<std::string, ProjLine>> lns = {
        {"base", join(pt("A1"), pt("A2"))}, {"top", join(pt("B1"), pt("B2"))},
        {"j12", join(pt("A1"), pt("B2"))},  {"j13", join(pt("A1"), pt("B3"))},
        {"j21", join(pt("A2"), pt("B1"))},  {"j23", join(pt("A2"), pt("B3"))},
        {"j31", join(pt("A3"), pt("B1"))},  {"j32", join(pt("A3"), pt("B2"))},
        {"pap", join(pt("C12"), pt("C13"))}};
    out.push_back(make_entry("9_3", "Pappus configuration, rational realization",
                             realized_from_coords(pts, lns), true, false,
                             Signature::parse("9*x^3|9*y^3"), 27));
  }

  // verification gate: every entry must reproduce its expectations
  for (const auto& e : out) {
    Signature sig = signature_of(e.data.inc);
    if (!(sig == e.expected_signature))
      fail(Errc::ValidationError, "catalog entry '" + e.key + "' has signature " +
                                      sig.str() + ", expected " +
                                      e.expected_signature.str());
    if (e.data.inc.num_incidences() != e.expected_incidences)
      fail(Errc::ValidationError, "catalog entry '" + e.key + "' incidence count");
    if (!is_connected(e.data.inc))
      fail(Errc::ValidationError, "catalog entry '" + e.key + "' disconnected");
    if (e.has_coords && !check_faithful(e.data.inc, e.data.coords).faithful())
      fail(Errc::ValidationError, "catalog entry '" + e.key + "' not faithful");
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& e : catalog())
    if (e.key == key) return e;
  fail(Errc::UnknownId, "no catalog entry '" + key + "'");
}

bool catalog_has(const std::string& key) {
  for (const auto& e : catalog())
    if (e.key == key) return true;
  return false;
}

}  // namespace plic
