#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "plic/catalog.hpp"
#include "plic/constructions.hpp"
#include "plic/enumerate.hpp"
#include "plic/io.hpp"
#include "plic/obstruction.hpp"
#include "plic/render.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct Ctx {
  bool json = false;
  long long seed = 0;
  ordered_json out;
};

plic::StructureFile resolve_input(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) {
    const plic::CatalogEntry& e = plic::catalog_entry(ref.substr(8));
    return plic::StructureFile{e.key, e.data, e.has_coords};
  }
  return plic::load_structure(ref);
}

plic::ElemRef parse_ref(const std::string& text) {
  if (text.rfind("p:", 0) == 0) return {plic::Kind::Point, text.substr(2)};
  if (text.rfind("l:", 0) == 0) return {plic::Kind::Line, text.substr(2)};
  plic::fail(plic::Errc::ParseError, "element ref '" + text + "' needs p: or l: prefix");
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

plic::ProjMap parse_transform(const std::string& text) {
  auto parts = split_list(text, ',');
  if (parts.size() != 9)
    plic::fail(plic::Errc::ParseError, "transform needs 9 comma-separated rationals");
  std::array<std::array<plic::Rat, 3>, 3> rows;
  for (int i = 0; i < 9; ++i) rows[i / 3][i % 3] = plic::parse_rational(parts[i]);
  return plic::ProjMap::from_rows(rows);
}

void emit(Ctx& ctx) {
  if (ctx.json) std::cout << ctx.out.dump(2) << "\n";
}

void say(Ctx& ctx, const std::string& line) {
  if (!ctx.json) std::cout << line << "\n";
}

ordered_json signature_json(const plic::Signature& sig) {
  ordered_json j;
  j["text"] = sig.str();
  j["points"] = sig.points_total();
  j["lines"] = sig.lines_total();
  j["incidences"] = sig.point_incidences();
  return j;
}

ordered_json report_json(const plic::FaithfulnessReport& rep) {
  ordered_json j;
  j["faithful"] = rep.faithful();
  auto pairs = [](const std::vector<std::pair<std::string, std::string>>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& [x, y] : v) a.push_back({x, y});
    return a;
  };
  j["missing"] = pairs(rep.missing);
  j["extra"] = pairs(rep.extra);
  j["point_collisions"] = pairs(rep.point_collisions);
  j["line_collisions"] = pairs(rep.line_collisions);
  return j;
}

void write_result_file(const std::string& path, const std::string& name,
                       const plic::Realized& data, bool with_coords) {
  plic::StructureFile f{name, data, with_coords};
  plic::save_structure(path, f);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"plic: exact workbench for point-line incidence structures in the projective plane"};
  app.require_subcommand(1);
  Ctx ctx;
  app.add_flag("--json", ctx.json, "structured JSON output");
  app.add_option("--seed", ctx.seed,
                 "seed recorded in search outputs (searches are deterministic "
                 "grids; the seed only labels the run)");

  int rc = kExitOk;

  // ---- verify ----
  std::string verify_input;
  auto* cmd_verify = app.add_subcommand("verify", "check structure invariants and faithfulness");
  cmd_verify->add_option("input", verify_input, "path or catalog:KEY")->required();
  cmd_verify->callback([&] {
    plic::StructureFile f = resolve_input(verify_input);
    plic::Signature sig = signature_of(f.data.inc);
    ctx.out["name"] = f.name;
    ctx.out["signature"] = signature_json(sig);
    ctx.out["connected"] = plic::is_connected(f.data.inc);
    if (f.has_coords) {
      plic::FaithfulnessReport rep = plic::check_faithful(f.data.inc, f.data.coords);
      ctx.out["report"] = report_json(rep);
      say(ctx, (rep.faithful() ? "faithful, " : "NOT faithful, ") +
                   std::to_string(f.data.inc.num_incidences()) + " incidences");
      if (!rep.faithful()) {
        say(ctx, rep.summary());
        rc = kExitFalse;
      }
    } else {
      ctx.out["report"] = nullptr;
      say(ctx, "combinatorial (no coordinates), " +
                   std::to_string(f.data.inc.num_incidences()) + " incidences");
    }
  });

  // ---- signature ----
  std::string sig_input;
  auto* cmd_sig = app.add_subcommand("signature", "print the signature and predicates");
  cmd_sig->add_option("input", sig_input, "path or catalog:KEY")->required();
  cmd_sig->callback([&] {
    plic::StructureFile f = resolve_input(sig_input);
    plic::Signature sig = signature_of(f.data.inc);
    ctx.out["signature"] = signature_json(sig);
    ctx.out["quasi"] = plic::is_quasi_configuration(f.data.inc);
    ctx.out["three_four"] = plic::is_34_configuration(f.data.inc);
    ctx.out["n34"] = plic::is_n34_configuration(f.data.inc);
    ctx.out["k4"] = plic::is_k_configuration(f.data.inc, 4);
    say(ctx, sig.str());
    say(ctx, std::string("quasi-configuration: ") +
                 (plic::is_quasi_configuration(f.data.inc) ? "yes" : "no"));
    say(ctx, std::string("3|4-configuration:   ") +
                 (plic::is_34_configuration(f.data.inc) ? "yes" : "no"));
    say(ctx, std::string("(n_3|4):             ") +
                 (plic::is_n34_configuration(f.data.inc) ? "yes" : "no"));
  });

  // ---- obstruct ----
  std::string obstruct_sig, obstruct_input;
  auto* cmd_obs = app.add_subcommand("obstruct", "counting obstruction verdict");
  cmd_obs->add_option("--signature", obstruct_sig, "signature a*x^3+b*x^4|c*y^3+d*y^4");
  cmd_obs->add_option("input", obstruct_input, "path or catalog:KEY");
  cmd_obs->callback([&] {
    plic::Signature sig;
    if (!obstruct_sig.empty())
      sig = plic::Signature::parse(obstruct_sig);
    else if (!obstruct_input.empty())
      sig = signature_of(resolve_input(obstruct_input).data.inc);
    else
      plic::fail(plic::Errc::ParseError, "obstruct needs --signature or an input");
    plic::ObstructionVerdict v = plic::euler_obstruction(sig);
    ctx.out["signature"] = sig.str();
    ctx.out["lhs"] = v.lhs_value;
    ctx.out["satisfiable"] = v.satisfiable;
    say(ctx, "lhs " + std::to_string(v.lhs_value) +
                 (v.satisfiable ? " <= 0: not excluded" : " > 0: no topological structure"));
    if (!v.satisfiable) rc = kExitFalse;
  });

  // ---- tables ----
  auto* cmd_tables = app.add_subcommand("tables", "print the two obstruction tables");
  cmd_tables->callback([&] {
    ordered_json bmin = ordered_json::array(), imax = ordered_json::array();
    std::ostringstream l1, l2;
    l1 << "a    ";
    l2 << "bmin ";
    for (long long a = 0; a <= 7; ++a) {
      l1 << a << (a < 7 ? "  " : "");
      long long b = plic::b_min(a);
      l2 << b << (b >= 10 ? " " : "  ");
      bmin.push_back({a, b});
    }
    say(ctx, l1.str());
    say(ctx, l2.str());
    say(ctx, "");
    std::ostringstream l3, l4;
    l3 << "n    ";
    l4 << "Imax ";
    for (long long n = 7; n <= 16; ++n) {
      l3 << n << "  ";
      long long i = plic::max_incidences(n);
      l4 << i << " ";
      imax.push_back({n, i});
    }
    say(ctx, l3.str());
    say(ctx, l4.str());
    ctx.out["b_min"] = bmin;
    ctx.out["max_incidences"] = imax;
  });

  // ---- enumerate ----
  std::string enum_sig, enum_emit;
  bool enum_connected = false, enum_count_only = false;
  auto* cmd_enum = app.add_subcommand("enumerate", "isomorph-free structures with a signature");
  cmd_enum->add_option("--signature", enum_sig, "prescribed signature")->required();
  cmd_enum->add_flag("--connected", enum_connected, "connected structures only");
  cmd_enum->add_flag("--count-only", enum_count_only, "print only the count");
  cmd_enum->add_option("--emit", enum_emit, "directory for one file per structure");
  cmd_enum->callback([&] {
    plic::Signature sig = plic::Signature::parse(enum_sig);
    auto list = plic::enumerate_structures(sig, enum_connected);
    ctx.out["signature"] = sig.str();
    ctx.out["count"] = list.size();
    say(ctx, std::to_string(list.size()) + " structure(s) with signature " + sig.str());
    if (!enum_emit.empty()) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::ostringstream name;
        name << "enum_" << std::setw(4) << std::setfill('0') << i;
        write_result_file(enum_emit + "/" + name.str() + ".json", name.str(),
                          plic::Realized{list[i], {}}, false);
      }
      ctx.out["emitted"] = enum_emit;
    }
    if (!enum_count_only && !ctx.json)
      for (std::size_t i = 0; i < list.size(); ++i)
        say(ctx, "  [" + std::to_string(i) + "] " +
                     plic::canonical_form(list[i]).hex().substr(0, 24) + "...");
  });

  // ---- construct ----
  auto* cmd_con = app.add_subcommand("construct", "run a construction recipe");
  cmd_con->require_subcommand(1);
  std::string c_input, c_a, c_b, c_out, c_transform, c_identify, c_p1, c_p2;
  std::string c_marked_a, c_marked_b, c_points, c_lines;

  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", c_out, "write the result structure file here");
  };

  auto* con_delete = cmd_con->add_subcommand("delete", "delete elements, keep coordinates");
  con_delete->add_option("--input", c_input)->required();
  con_delete->add_option("--points", c_points, "comma-separated point ids");
  con_delete->add_option("--lines", c_lines, "comma-separated line ids");
  add_out(con_delete);
  con_delete->callback([&] {
    plic::StructureFile f = resolve_input(c_input);
    std::vector<plic::ElemRef> victims;
    for (const auto& id : split_list(c_points, ','))
      victims.push_back({plic::Kind::Point, id});
    for (const auto& id : split_list(c_lines, ','))
      victims.push_back({plic::Kind::Line, id});
    plic::DeleteResult res = plic::delete_elements(f.data, victims);
    ordered_json ch = ordered_json::array();
    for (const auto& c : res.changed)
      ch.push_back({{"kind", c.elem.kind == plic::Kind::Point ? "point" : "line"},
                    {"id", c.elem.id},
                    {"old", c.old_valence},
                    {"new", c.new_valence}});
    ctx.out["changed"] = ch;
    ctx.out["signature"] = signature_of(res.result.inc).str();
    say(ctx, "deleted " + std::to_string(victims.size()) + " element(s); signature now " +
                 signature_of(res.result.inc).str());
    if (!c_out.empty()) write_result_file(c_out, f.name + "-deleted", res.result, f.has_coords);
  });

  auto* con_super = cmd_con->add_subcommand("superpose", "merge two structures");
  con_super->add_option("--a", c_a)->required();
  con_super->add_option("--b", c_b)->required();
  con_super->add_option("--transform", c_transform, "9 rationals, row-major, applied to B");
  con_super->add_option("--identify", c_identify, "p:aid=bid;l:aid=bid;...");
  add_out(con_super);
  con_super->callback([&] {
    plic::StructureFile fa = resolve_input(c_a), fb = resolve_input(c_b);
    plic::GlueSpec spec;
    if (!c_transform.empty()) spec.transform = parse_transform(c_transform);
    for (const auto& pair : split_list(c_identify, ';')) {
      auto eq = pair.find('=');
      if (eq == std::string::npos)
        plic::fail(plic::Errc::ParseError, "identify entries look like p:aid=bid");
      plic::ElemRef ra = parse_ref(pair.substr(0, eq));
      spec.identify.emplace_back(
          ra, plic::ElemRef{ra.kind, pair.substr(eq + 1)});
    }
    plic::SuperposeResult res = plic::superpose(fa.data, fb.data, spec);
    ctx.out["signature"] = signature_of(res.result.inc).str();
    ctx.out["report"] = report_json(res.report);
    say(ctx, "superposed: signature " + signature_of(res.result.inc).str() + ", " +
                 res.report.summary());
    if (!c_out.empty())
      write_result_file(c_out, fa.name + "+" + fb.name, res.result, true);
    if (!res.report.faithful()) rc = kExitFalse;
  });

  auto add_patch = [&](const std::string& name, const std::string& help, bool same_line) {
    auto* c = cmd_con->add_subcommand(name, help);
    c->add_option("--input", c_input)->required();
    c->add_option("--p1", c_p1)->required();
    c->add_option("--p2", c_p2)->required();
    add_out(c);
    c->callback([&, same_line] {
      plic::StructureFile f = resolve_input(c_input);
      plic::PatchResult res =
          same_line ? plic::recipe_delete2_sameline_patch3(f.data, c_p1, c_p2)
                    : plic::recipe_delete2_patch4(f.data, c_p1, c_p2);
      ordered_json marked = ordered_json::array();
      for (const auto& m : res.marked)
        marked.push_back((m.kind == plic::Kind::Point ? "p:" : "l:") + m.id);
      ctx.out["marked"] = marked;
      ctx.out["signature"] = signature_of(res.result.inc).str();
      ctx.out["diagnostics"] = res.diagnostics;
      say(ctx, "patched: signature " + signature_of(res.result.inc).str());
      if (!c_out.empty()) write_result_file(c_out, f.name + "-" + name, res.result, true);
    });
  };
  add_patch("patch4", "delete two unjoined points, patch with four 2-valent points", false);
  add_patch("patch3", "delete two joined points, patch with three 2-valent points", true);

  auto* con_glue = cmd_con->add_subcommand("glue", "superpose two deficient pieces");
  con_glue->add_option("--a", c_a)->required();
  con_glue->add_option("--b", c_b)->required();
  con_glue->add_option("--marked-a", c_marked_a, "four marked elements p:id,l:id,...")->required();
  con_glue->add_option("--marked-b", c_marked_b)->required();
  add_out(con_glue);
  con_glue->callback([&] {
    plic::StructureFile fa = resolve_input(c_a), fb = resolve_input(c_b);
    std::vector<plic::ElemRef> ma, mb;
    for (const auto& r : split_list(c_marked_a, ',')) ma.push_back(parse_ref(r));
    for (const auto& r : split_list(c_marked_b, ',')) mb.push_back(parse_ref(r));
    try {
      plic::GlueResult res = plic::glue_deficient_pair(fa.data, ma, fb.data, mb);
      ctx.out["used_map"] = res.used.str();
      ctx.out["candidate_index"] = res.candidate_index;
      ctx.out["signature"] = signature_of(res.result.inc).str();
      ctx.out["diagnostics"] = res.diagnostics;
      say(ctx, "glued with candidate " + std::to_string(res.candidate_index) +
                   ": signature " + signature_of(res.result.inc).str());
      if (!c_out.empty()) write_result_file(c_out, fa.name + "+" + fb.name, res.result, true);
    } catch (const plic::ExhaustedCandidatesError& e) {
      ctx.out["error"] = "ExhaustedCandidates";
      ctx.out["diagnostics"] = e.diagnostics;
      say(ctx, std::string(e.what()));
      for (const auto& d : e.diagnostics) say(ctx, "  " + d);
      rc = kExitFalse;
    }
  });

  auto* con_two = cmd_con->add_subcommand("two-copies", "two copies plus two bridging lines");
  con_two->add_option("--input", c_input)->required();
  con_two->add_option("--transform", c_transform, "9 rationals for the second copy")->required();
  add_out(con_two);
  con_two->callback([&] {
    plic::StructureFile f = resolve_input(c_input);
    plic::TwoCopiesResult res =
        plic::recipe_two_copies_two_lines(f.data, parse_transform(c_transform));
    ctx.out["signature"] = signature_of(res.result.inc).str();
    ctx.out["diagnostics"] = res.diagnostics;
    say(ctx, "doubled: signature " + signature_of(res.result.inc).str());
    if (!c_out.empty()) write_result_file(c_out, f.name + "-doubled", res.result, true);
  });

  auto* con_make4 = cmd_con->add_subcommand("make4", "3|4-configuration to 4-configuration");
  con_make4->add_option("--input", c_input)->required();
  add_out(con_make4);
  con_make4->callback([&] {
    plic::StructureFile f = resolve_input(c_input);
    plic::Make4Result res = plic::recipe_34_to_4(f.data);
    ctx.out["input_signature"] = res.input_signature.str();
    ctx.out["size"] = res.result.inc.num_points();
    ctx.out["expected_size"] = res.expected_size;
    ctx.out["notes"] = res.notes;
    ctx.out["seed"] = ctx.seed;
    say(ctx, "built a (" + std::to_string(res.result.inc.num_points()) +
                 "_4) configuration from " + res.input_signature.str());
    for (const auto& n : res.notes) say(ctx, "  " + n);
    if (!c_out.empty()) write_result_file(c_out, f.name + "-make4", res.result, true);
  });

  // ---- dual ----
  std::string dual_input, dual_out;
  auto* cmd_dual = app.add_subcommand("dual", "polar dual structure");
  cmd_dual->add_option("input", dual_input)->required();
  cmd_dual->add_option("--out", dual_out);
  cmd_dual->callback([&] {
    plic::StructureFile f = resolve_input(dual_input);
    plic::Realized d{plic::dual_structure(f.data.inc),
                     f.has_coords ? plic::dual_realization(f.data.coords)
                                  : plic::Realization{}};
    ctx.out["signature"] = signature_of(d.inc).str();
    say(ctx, "dual signature " + signature_of(d.inc).str());
    if (!dual_out.empty()) write_result_file(dual_out, f.name + "-dual", d, f.has_coords);
  });

  // ---- split-check ----
  std::string split_input, split_points, split_lines;
  auto* cmd_split = app.add_subcommand("split-check", "signatures of a bipartition");
  cmd_split->add_option("input", split_input)->required();
  cmd_split->add_option("--points", split_points, "part A point ids (comma-separated)");
  cmd_split->add_option("--lines", split_lines, "part A line ids");
  cmd_split->callback([&] {
    plic::StructureFile f = resolve_input(split_input);
    plic::SplitSpec spec{split_list(split_points, ','), split_list(split_lines, ',')};
    plic::SplitCheck res = plic::check_split(f.data.inc, spec);
    ctx.out["part_a"] = res.part_a.str();
    ctx.out["part_b"] = res.part_b.str();
    ctx.out["both_quasi"] = res.both_quasi;
    say(ctx, "part A: " + res.part_a.str());
    say(ctx, "part B: " + res.part_b.str());
    say(ctx, std::string("both quasi-configurations: ") + (res.both_quasi ? "yes" : "no"));
    if (!res.both_quasi) rc = kExitFalse;
  });

  // ---- embed ----
  std::string embed_pattern, embed_host;
  bool embed_weak = false;
  std::size_t embed_max = 0;
  auto* cmd_embed = app.add_subcommand("embed", "search subconfiguration embeddings");
  cmd_embed->add_option("--pattern", embed_pattern)->required();
  cmd_embed->add_option("--host", embed_host)->required();
  cmd_embed->add_flag("--weak", embed_weak,
                      "incidence-preserving only (host may add incidences on the image)");
  cmd_embed->add_option("--max", embed_max, "stop after this many embeddings");
  cmd_embed->callback([&] {
    plic::StructureFile fp = resolve_input(embed_pattern);
    plic::StructureFile fh = resolve_input(embed_host);
    auto embeddings = embed_weak
                          ? plic::contains_subconfiguration_weak(fh.data.inc, fp.data.inc,
                                                                 embed_max)
                          : plic::contains_subconfiguration(fh.data.inc, fp.data.inc,
                                                            embed_max);
    ctx.out["count"] = embeddings.size();
    ctx.out["weak"] = embed_weak;
    say(ctx, std::to_string(embeddings.size()) + " embedding(s) found" +
                 (embed_max ? " (capped)" : ""));
    if (embeddings.empty()) rc = kExitFalse;
  });

  // ---- render ----
  std::string render_input, render_out, render_chart = "z", render_viewport, render_premap;
  int render_width = 640;
  bool render_strict = false;
  auto* cmd_render = app.add_subcommand("render", "SVG drawing of a realized structure");
  cmd_render->add_option("input", render_input)->required();
  cmd_render->add_option("--out", render_out, "output SVG path (stdout otherwise)");
  cmd_render->add_option("--chart", render_chart, "affine chart: x, y or z");
  cmd_render->add_option("--viewport", render_viewport, "xmin,ymin,xmax,ymax (rationals)");
  cmd_render->add_option("--pre-map", render_premap, "9 rationals applied before the chart");
  cmd_render->add_option("--width", render_width, "pixel width");
  cmd_render->add_flag("--strict-chart", render_strict,
                       "error out when a line sits at the chart's infinity");
  cmd_render->callback([&] {
    plic::StructureFile f = resolve_input(render_input);
    if (!f.has_coords)
      plic::fail(plic::Errc::ValidationError, "render needs coordinates");
    plic::RenderOptions opts;
    if (render_chart == "x")
      opts.chart = 0;
    else if (render_chart == "y")
      opts.chart = 1;
    else if (render_chart == "z")
      opts.chart = 2;
    else
      plic::fail(plic::Errc::ParseError, "chart must be x, y or z");
    if (!render_viewport.empty()) {
      auto parts = split_list(render_viewport, ',');
      if (parts.size() != 4)
        plic::fail(plic::Errc::ParseError, "viewport needs 4 rationals");
      opts.viewport = {plic::parse_rational(parts[0]), plic::parse_rational(parts[1]),
                       plic::parse_rational(parts[2]), plic::parse_rational(parts[3])};
    }
    if (!render_premap.empty()) opts.pre_map = parse_transform(render_premap);
    opts.width_px = render_width;
    opts.strict_chart = render_strict;
    std::string svg = plic::render_svg(f.data.inc, f.data.coords, opts);
    if (render_out.empty()) {
      std::cout << svg;
    } else {
      std::ofstream out(render_out, std::ios::binary | std::ios::trunc);
      if (!out) plic::fail(plic::Errc::ParseError, "cannot write '" + render_out + "'");
      out << svg;
      say(ctx, "wrote " + render_out);
    }
  });

  // ---- catalog ----
  std::string catalog_key, catalog_emit;
  auto* cmd_cat = app.add_subcommand("catalog", "list or export the built-in entries");
  cmd_cat->add_option("key", catalog_key, "single entry to show");
  cmd_cat->add_option("--emit", catalog_emit, "write entry files into this directory");
  cmd_cat->callback([&] {
    ordered_json list = ordered_json::array();
    for (const auto& e : plic::catalog()) {
      if (!catalog_key.empty() && e.key != catalog_key) continue;
      ordered_json j;
      j["key"] = e.key;
      j["signature"] = signature_of(e.data.inc).str();
      j["incidences"] = e.data.inc.num_incidences();
      j["coords"] = e.has_coords;
      j["transcription"] = e.transcription;
      j["note"] = e.note;
      list.push_back(j);
      std::ostringstream line;
      line << e.key << ": " << signature_of(e.data.inc).str() << ", "
           << e.data.inc.num_incidences() << " incidences"
           << (e.has_coords ? ", coordinates" : ", combinatorial")
           << (e.transcription ? " (transcription stand-in)" : "");
      say(ctx, line.str());
      say(ctx, "    " + e.note);
      if (!catalog_emit.empty())
        write_result_file(catalog_emit + "/" + e.key + ".json", e.key, e.data,
                          e.has_coords);
    }
    if (!catalog_key.empty() && list.empty())
      plic::fail(plic::Errc::UnknownId, "no catalog entry '" + catalog_key + "'");
    ctx.out["entries"] = list;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  emit(ctx);
  return rc;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const plic::Error& e) {
    std::cerr << e.what() << "\n";
    return (e.code() == plic::Errc::ParseError || e.code() == plic::Errc::ValidationError)
               ? kExitUsage
               : kExitFalse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalse;
  }
}
