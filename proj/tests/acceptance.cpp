// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracle.hpp"
#include "plic/catalog.hpp"
#include "plic/constructions.hpp"
#include "plic/enumerate.hpp"
#include "plic/io.hpp"
#include "plic/obstruction.hpp"
#include "plic/render.hpp"

using namespace plic;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

int failures = 0;

void run_criterion(int id, const std::string& title,
                   const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.notes.push_back(std::string("exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  char line[512];
  std::snprintf(line, sizeof(line), "[%s] criterion %d: %s (%.2fs)",
                out.pass ? "PASS" : "FAIL", id, title.c_str(), secs);
  std::cout << line << "\n";
  for (const auto& n : out.notes) std::cout << "         " << n << "\n";
  if (!out.pass) ++failures;
}

Signature n34_signature(long long a, long long b) {
  std::map<int, long long> pc, lc;
  if (a) pc[3] = a, lc[3] = a;
  if (b) pc[4] = b, lc[4] = b;
  return Signature(pc, lc);
}

// ---- criterion 4 helpers ----

long long pairs2(long long n) { return n * (n - 1) / 2; }

bool pair_count_feasible(const Signature& sig) {
  long long lhs_p = 0, lhs_l = 0;
  for (auto& [v, c] : sig.point_counts()) lhs_p += pairs2(v) * c;
  for (auto& [v, c] : sig.line_counts()) lhs_l += pairs2(v) * c;
  return lhs_p <= pairs2(sig.lines_total()) && lhs_l <= pairs2(sig.points_total());
}

void quasi_multisets(int size, int max_valence,
                     std::vector<std::map<int, long long>>& out) {
  std::map<int, long long> cur;
  std::function<void(int, int)> rec = [&](int left, int min_v) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int v = min_v; v <= max_valence; ++v) {
      ++cur[v];
      rec(left - 1, v);
      if (--cur[v] == 0) cur.erase(v);
    }
  };
  rec(size, 3);
}

bool signatures_agree(const Signature& sig, Outcome& out, long long* classes) {
  auto mine = enumerate_structures(sig, false);
  auto ref = plic_oracle::oracle_enumerate(sig);
  *classes = static_cast<long long>(ref.size());
  if (mine.size() != ref.size()) {
    out.require(false, "count mismatch on " + sig.str() + ": " +
                           std::to_string(mine.size()) + " vs oracle " +
                           std::to_string(ref.size()));
    return false;
  }
  std::set<std::string> a, b;
  for (const auto& s : mine) a.insert(canonical_form(s).bytes);
  for (const auto& l : ref)
    b.insert(canonical_form(plic_oracle::to_structure(l)).bytes);
  if (a != b) {
    out.require(false, "canonical set mismatch on " + sig.str());
    return false;
  }
  return true;
}

// ---- criterion 6 helpers ----

const Realized& pipeline_180() {
  static const Realized k = recipe_34_to_4(catalog_entry("9_3").data).result;
  return k;
}

std::pair<std::string, std::string> unjoined_pair(const IncidenceStructure& s) {
  for (int i = 0; i < s.num_points(); ++i)
    for (int j = i + 1; j < s.num_points(); ++j) {
      if (s.lines_of_point(i).size() != 4 || s.lines_of_point(j).size() != 4)
        continue;
      bool share = false;
      for (int l : s.lines_of_point(i)) share = share || s.incident(j, l);
      if (!share) return {s.point_ids()[i], s.point_ids()[j]};
    }
  throw Error(Errc::SearchExhausted, "no unjoined 4-valent pair");
}

// ---- criterion 9 helpers ----

std::string shell_capture(const std::string& cmd, const std::string& outfile) {
  std::string full = cmd + " > " + outfile + " 2>&1";
  int rc = std::system(full.c_str());
  (void)rc;
  std::ifstream in(outfile, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  run_criterion(1, "obstruction tables", [](Outcome& out) {
    const long long bmin[8] = {16, 14, 13, 11, 9, 8, 6, 3};
    for (long long a = 0; a <= 7; ++a)
      out.require(b_min(a) == bmin[a], "b_min(" + std::to_string(a) + ")");
    const long long imax[10] = {20, 24, 28, 33, 37, 42, 48, 53, 59, 64};
    for (long long n = 7; n <= 16; ++n)
      out.require(max_incidences(n) == imax[n - 7],
                  "max_incidences(" + std::to_string(n) + ")");
  });

  run_criterion(2, "obstruction verdicts", [](Outcome& out) {
    ObstructionVerdict v1 = euler_obstruction(Signature::parse("15*x^4|15*y^4"));
    out.require(v1.lhs_value == 6 && !v1.satisfiable, "(15x^4, 15y^4)");
    ObstructionVerdict v2 =
        euler_obstruction(Signature::parse("7*x^3+2*x^4|7*y^3+2*y^4"));
    out.require(v2.lhs_value == 4 && !v2.satisfiable, "(7x^3+2x^4, ...)");
    ObstructionVerdict v3 =
        euler_obstruction(Signature::parse("8*x^3+2*x^4|8*y^3+2*y^4"));
    out.require(v3.lhs_value == -8 && v3.satisfiable, "(8x^3+2x^4, ...)");
  });

  run_criterion(3, "catalog verification", [](Outcome& out) {
    const auto& e13 = catalog_entry("13_34");
    out.require(check_faithful(e13.data.inc, e13.data.coords).faithful(),
                "13_34 faithful");
    out.require(e13.data.inc.num_incidences() == 48, "13_34 incidences");
    out.require(signature_of(e13.data.inc).str() == "4*x^3+9*x^4|4*y^3+9*y^4",
                "13_34 signature");
    const long long want[4] = {42, 37, 33, 33};
    const char* keys[4] = {"12_34", "11_34", "10_34a", "10_34b"};
    for (int i = 0; i < 4; ++i) {
      const auto& e = catalog_entry(keys[i]);
      out.require(e.data.inc.num_incidences() == want[i],
                  std::string(keys[i]) + " incidences");
      out.require(e.has_coords &&
                      check_faithful(e.data.inc, e.data.coords).faithful(),
                  std::string(keys[i]) + " faithful");
    }
    out.require(catalog_entry("9_34").data.inc.num_incidences() == 28,
                "9_34 incidences");
    out.note("9_34 ships combinatorially: no deletion of 13_34 reaches nine "
             "elements with 28 incidences, and the unique optimal type has no "
             "rational realization");
  });

  run_criterion(4, "enumerator vs naive oracle (quasi signatures, |P|,|L| <= 8)",
                [](Outcome& out) {
    auto seven = enumerate_structures(Signature::parse("7*x^3|7*y^3"), false);
    out.require(seven.size() == 1, "exactly one (7_3)");
    auto eight = enumerate_structures(Signature::parse("8*x^3|8*y^3"), false);
    out.require(eight.size() == 1, "exactly one (8_3)");
    out.require(eight.size() == 1 &&
                    are_isomorphic(eight[0], catalog_entry("8_3").data.inc),
                "the (8_3) is the catalog one");

    long long swept = 0, skipped = 0, classes_total = 0, sampled_zero = 0;
    for (int P = 0; P <= 8; ++P)
      for (int L = 0; L <= 8; ++L) {
        std::vector<std::map<int, long long>> psets, lsets;
        quasi_multisets(P, L, psets);
        quasi_multisets(L, P, lsets);
        for (const auto& pc : psets)
          for (const auto& lc : lsets) {
            Signature sig(pc, lc);
            if (!sig.consistent()) continue;
            if (!pair_count_feasible(sig)) {
              // excluded by the exact pair-count bound implied by girth;
              // cross-check a deterministic sample on both engines
              if (++skipped % 97 == 0) {
                long long c = 0;
                if (signatures_agree(sig, out, &c)) {
                  ++sampled_zero;
                  out.require(c == 0, "pair-count-excluded signature " +
                                          sig.str() + " should be empty");
                }
              }
              continue;
            }
            long long c = 0;
            signatures_agree(sig, out, &c);
            classes_total += c;
            ++swept;
          }
      }
    out.note("swept " + std::to_string(swept) + " feasible quasi signatures (" +
             std::to_string(classes_total) + " classes), sampled " +
             std::to_string(sampled_zero) + " of " + std::to_string(skipped) +
             " pair-count-excluded ones");
  });

  run_criterion(5, "no small n34 passes the inequality except the (8_3)",
                [](Outcome& out) {
    for (long long n = 1; n <= 8; ++n) {
      for (long long a = 0; a <= n; ++a) {
        long long b = n - a;
        Signature sig = n34_signature(a, b);
        ObstructionVerdict v = euler_obstruction(sig);
        if (!v.satisfiable) continue;
        auto found = enumerate_structures(sig, false);
        for (const auto& s : found)
          out.require(are_isomorphic(s, catalog_entry("8_3").data.inc),
                      "unexpected structure with signature " + sig.str());
        out.require(a == 8 && b == 0,
                    "only (8x^3, 8y^3) may pass for n <= 8, got " + sig.str());
        out.require(found.size() == 1, "the (8_3) count");
      }
      out.require(infeasible_small_n34(n),
                  "infeasible_small_n34(" + std::to_string(n) + ")");
    }
  });

  run_criterion(6, "construction machinery at synthetic scale", [](Outcome& out) {
    // (a) patch4 census on a synthetic exact 4-configuration
    const Realized& k = pipeline_180();
    out.require(is_k_configuration(k.inc, 4) && k.inc.num_points() == 180,
                "pipeline 4-configuration of 180 elements");
    auto [p1, p2] = unjoined_pair(k.inc);
    PatchResult patched = recipe_delete2_patch4(k, p1, p2);
    Signature psig = signature_of(patched.result.inc);
    out.require(psig.point_counts() ==
                    std::map<int, long long>{{2, 4}, {4, 178}},
                "patch4 point census: four 2-valent, rest 4-valent");
    out.require(psig.line_counts() == std::map<int, long long>{{4, 180}},
                "patch4 line census: all 4-valent");
    out.require(check_faithful(patched.result.inc, patched.result.coords).faithful(),
                "patch4 output faithful");

    // (b) planted-map glue recovery
    bool glued = false;
    for (int li = 0; li < k.inc.num_lines() && !glued; ++li) {
      const auto& pts = k.inc.points_of_line(li);
      for (std::size_t i = 0; i < pts.size() && !glued; ++i)
        for (std::size_t j = i + 1; j < pts.size() && !glued; ++j) {
          std::string q1 = k.inc.point_ids()[pts[i]];
          std::string q2 = k.inc.point_ids()[pts[j]];
          if (q1 == p1 || q1 == p2 || q2 == p1 || q2 == p2) continue;
          PatchResult partner;
          try {
            partner = recipe_delete2_sameline_patch3(k, q1, q2);
          } catch (const Error&) {
            continue;
          }
          ProjMap planted = ProjMap::from_rows({{{Rat(3), Rat(1), Rat(-2)},
                                                 {Rat(0), Rat(2), Rat(1)},
                                                 {Rat(1), Rat(0), Rat(4)}}});
          Realized moved{partner.result.inc,
                         partner.result.coords.transformed(planted)};
          try {
            GlueResult g =
                glue_deficient_pair(patched.result, patched.marked, moved,
                                    partner.marked);
            out.require(is_k_configuration(g.result.inc, 4) && g.report.faithful(),
                        "glued result is a clean 4-configuration");
            out.note("glue succeeded with candidate " +
                     std::to_string(g.candidate_index) + " against a planted map");
            glued = true;
          } catch (const ExhaustedCandidatesError&) {
          } catch (const Error&) {
          }
        }
    }
    out.require(glued, "a planted transform yields a clean glued 4-configuration");

    // (c) superpose signature arithmetic on randomized disjoint unions
    std::mt19937 rng(424243);
    std::vector<std::string> realized_keys;
    for (const auto& e : catalog())
      if (e.has_coords) realized_keys.push_back(e.key);
    std::uniform_int_distribution<std::size_t> pick(0, realized_keys.size() - 1);
    std::uniform_int_distribution<long> off(101, 9999);
    for (int it = 0; it < 100; ++it) {
      const auto& ea = catalog_entry(realized_keys[pick(rng)]).data;
      const auto& eb = catalog_entry(realized_keys[pick(rng)]).data;
      Realized moved{eb.inc,
                     eb.coords.transformed(translation(Rat(off(rng)), Rat(off(rng))))};
      SuperposeResult res = superpose(ea, moved, {});
      Signature sa = signature_of(ea.inc), sb = signature_of(eb.inc),
                sm = signature_of(res.result.inc);
      bool counts_ok =
          sm.points_total() == sa.points_total() + sb.points_total() &&
          sm.lines_total() == sa.lines_total() + sb.lines_total() &&
          sm.point_incidences() == sa.point_incidences() + sb.point_incidences();
      out.require(counts_ok, "superpose signature arithmetic, iteration " +
                                 std::to_string(it));
      if (!counts_ok) break;
    }

    // (d) size identity for catalog 3|4 signatures + a full pipeline run on
    // a realized (n_{3|4}) catalog entry
    for (const auto& e : catalog()) {
      if (!is_34_configuration(e.data.inc)) continue;
      Signature sig = signature_of(e.data.inc);
      long long a = 0, b = 0, c = 0, d = 0;
      if (sig.point_counts().count(3)) a = sig.point_counts().at(3);
      if (sig.point_counts().count(4)) b = sig.point_counts().at(4);
      if (sig.line_counts().count(3)) c = sig.line_counts().at(3);
      if (sig.line_counts().count(4)) d = sig.line_counts().at(4);
      out.require(16 * a + 16 * b + 4 * c == 4 * a + 16 * c + 16 * d,
                  "size identity for " + e.key);
      out.require(make4_expected_size(sig) == 16 * a + 16 * b + 4 * c,
                  "expected size for " + e.key);
    }
    out.require(check_faithful(k.inc, k.coords).faithful(),
                "pipeline output on the realized (9_{3|4}) entry is faithful");
    out.note("pipeline input: catalog 9_3 (Pappus; a (9_{3|4}) configuration "
             "with 27 incidences). The optimal 9_34 entry admits no rational "
             "realization (its pencil cross-ratio satisfies m^2-3m+1=0), so "
             "it cannot feed the exact-rational pipeline.");
    Make4Result ten = recipe_34_to_4(catalog_entry("10_34a").data);
    out.require(ten.result.inc.num_points() == 188 &&
                    is_k_configuration(ten.result.inc, 4) &&
                    check_faithful(ten.result.inc, ten.result.coords).faithful(),
                "pipeline on 10_34a gives a faithful (188_4)");
  });

  run_criterion(7, "kernel properties, 10^4 randomized identities", [](Outcome& out) {
    std::mt19937 rng(99991);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    auto rat = [&] { return Rat(num(rng), den(rng)); };
    auto point = [&] {
      for (;;) {
        Rat x = rat(), y = rat(), z = rat();
        if (x == 0 && y == 0 && z == 0) continue;
        return ProjPoint(x, y, z);
      }
    };
    auto pmap = [&]() {
      for (;;) {
        std::array<std::array<Rat, 3>, 3> rows;
        for (auto& row : rows)
          for (auto& v : row) v = rat();
        try {
          return ProjMap::from_rows(rows);
        } catch (const Error&) {
        }
      }
    };
    int four_to_four_checked = 0;
    for (int it = 0; it < 10000; ++it) {
      ProjPoint p = point(), q = point();
      if (p == q) continue;
      ProjLine l = join(p, q);
      bool ok = incident(p, l) && incident(q, l);
      ProjLine m = polar_dual(point());
      if (l != m)
        ok = ok && polar_dual(meet(l, m)) == join(polar_dual(l), polar_dual(m));
      ProjMap g = pmap();
      ok = ok && incident(g(p), g(l)) && g(l) == join(g(p), g(q));
      ProjPoint r = point();
      ok = ok && (incident(r, l) == incident(g(r), g(l)));
      // canonicalization idempotence
      ProjPoint pp(Rat(p.coords()[0]), Rat(p.coords()[1]), Rat(p.coords()[2]));
      ok = ok && pp == p;
      if (!ok) {
        out.require(false, "kernel identity failed at iteration " +
                               std::to_string(it));
        return;
      }
      if (it % 100 == 0) {
        std::array<ProjPoint, 4> src{point(), point(), point(), point()};
        std::array<ProjPoint, 4> dst{point(), point(), point(), point()};
        try {
          ProjMap fwd = ProjMap::four_to_four(src, dst);
          ProjMap back = ProjMap::four_to_four(dst, src);
          out.require(back * fwd == ProjMap::identity(),
                      "four_to_four round trip");
          ++four_to_four_checked;
        } catch (const Error&) {
          // degenerate quadruple: skip
        }
      }
    }
    out.require(four_to_four_checked >= 50, "enough four_to_four round trips");
  });

  run_criterion(8, "subconfiguration searches", [](Outcome& out) {
    const auto& host = catalog_entry("12_34_fig8").data.inc;
    const auto& pappus = catalog_entry("9_3").data.inc;
    const auto& desargues = catalog_entry("10_3").data.inc;
    const auto& fano = catalog_entry("7_3").data.inc;
    const auto& mk = catalog_entry("8_3").data.inc;
    out.require(!contains_subconfiguration(host, pappus, 1).empty(),
                "Pappus embeds exactly into the twelve-element entry");
    out.require(!contains_subconfiguration_weak(host, desargues, 1).empty(),
                "Desargues embeds (incidence-preserving) into it");
    out.require(contains_subconfiguration(host, desargues, 1).empty(),
                "exact Desargues embedding is impossible (Petersen argument)");
    out.note("Desargues containment holds in the incidence-preserving sense; "
             "an induced-exact copy cannot exist in any twelve-element "
             "3|4-configuration because its non-collinearity graph (Petersen) "
             "has no triangle");
    out.require(contains_subconfiguration(mk, fano, 1).empty() &&
                    contains_subconfiguration_weak(mk, fano, 1).empty(),
                "no Fano inside the (8_3)");
  });

  run_criterion(9, "CLI determinism on catalog inputs", [](Outcome& out) {
    std::string cli = PLIC_CLI_PATH;
    std::vector<std::pair<std::string, std::string>> cmds = {
        {"catalog", cli + " catalog"},
        {"verify", cli + " verify catalog:13_34"},
        {"signature", cli + " --json signature catalog:10_34a"},
        {"obstruct", cli + " obstruct --signature \"15*x^4|15*y^4\""},
        {"tables", cli + " tables"},
        {"enumerate", cli + " enumerate --signature \"7*x^3|7*y^3\" --count-only"},
        {"render", cli + " render catalog:13_34"},
        {"dual", cli + " --json dual catalog:9_3"},
        {"split", cli + " split-check catalog:13_34 --points p0,p1 --lines l0"},
        {"embed", cli + " embed --pattern catalog:9_3 --host catalog:12_34_fig8 --max 1"},
    };
    for (const auto& [name, cmd] : cmds) {
      std::string a = shell_capture(cmd, "acc_out_a.txt");
      std::string b = shell_capture(cmd, "acc_out_b.txt");
      out.require(!a.empty() && a == b, "byte-identical reruns of " + name);
    }
    // determinism of emitted files
    std::string d1 = shell_capture(cli + " render catalog:12_34 --out acc_r1.svg",
                                   "acc_null.txt");
    std::string d2 = shell_capture(cli + " render catalog:12_34 --out acc_r2.svg",
                                   "acc_null.txt");
    (void)d1;
    (void)d2;
    std::ifstream f1("acc_r1.svg", std::ios::binary), f2("acc_r2.svg", std::ios::binary);
    std::ostringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    out.require(!s1.str().empty() && s1.str() == s2.str(),
                "byte-identical rendered SVG files");
    for (const char* f : {"acc_out_a.txt", "acc_out_b.txt", "acc_r1.svg",
                          "acc_r2.svg", "acc_null.txt"})
      std::remove(f);
  });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
