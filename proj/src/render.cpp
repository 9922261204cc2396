#include "plic/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace plic {

namespace {

// exact decimal with two digits, round half away from zero
std::string dec2(const Rat& q) {
  Int num = q.get_num() * 100;
  Int den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  Int r = (num * 2 + den) / (2 * den);
  Int whole = r / 100, frac = r % 100;
  std::string f = frac.get_str();
  if (f.size() < 2) f.insert(0, 2 - f.size(), '0');
  return (neg && (whole != 0 || frac != 0) ? "-" : "") + whole.get_str() + "." + f;
}

struct ChartElems {
  int idx[3];
};

ChartElems chart_perm(int chart) {
  return ChartElems{{(chart + 1) % 3, (chart + 2) % 3, chart}};
}

std::string color_for(int valence) {
  if (valence == 3) return "#d62728";
  if (valence == 4) return "#1f77b4";
  return "#666666";
}

}  // namespace

std::string render_svg(const IncidenceStructure& s, const Realization& r,
                       const RenderOptions& opts) {
  if (opts.chart < 0 || opts.chart > 2)
    fail(Errc::ValidationError, "chart index must be 0, 1 or 2");
  ChartElems ch = chart_perm(opts.chart);

  struct PtView {
    std::string id;
    int valence;
    bool infinite;
    Rat x, y;    // affine chart coords (finite) or direction (infinite)
  };
  struct LnView {
    std::string id;
    int valence;
    bool at_infinity;
    Rat a, b, c;  // a X + b Y + c = 0 in chart coords
  };

  std::vector<PtView> pts;
  for (int i = 0; i < s.num_points(); ++i) {
    const std::string& id = s.point_ids()[i];
    const ProjPoint* raw = r.point(id);
    if (!raw) fail(Errc::UnmappedId, "render: point '" + id + "' lacks coordinates");
    ProjPoint p = opts.pre_map ? (*opts.pre_map)(*raw) : *raw;
    const auto& v = p.coords();
    PtView pv;
    pv.id = id;
    pv.valence = static_cast<int>(s.lines_of_point(i).size());
    if (v[ch.idx[2]] == 0) {
      pv.infinite = true;
      pv.x = Rat(v[ch.idx[0]]);
      pv.y = Rat(v[ch.idx[1]]);
    } else {
      pv.infinite = false;
      pv.x = Rat(v[ch.idx[0]]) / Rat(v[ch.idx[2]]);
      pv.y = Rat(v[ch.idx[1]]) / Rat(v[ch.idx[2]]);
    }
    pts.push_back(std::move(pv));
  }

  std::vector<LnView> lns;
  for (int i = 0; i < s.num_lines(); ++i) {
    const std::string& id = s.line_ids()[i];
    const ProjLine* raw = r.line(id);
    if (!raw) fail(Errc::UnmappedId, "render: line '" + id + "' lacks coordinates");
    ProjLine l = opts.pre_map ? (*opts.pre_map)(*raw) : *raw;
    const auto& v = l.coeffs();
    LnView lv;
    lv.id = id;
    lv.valence = static_cast<int>(s.points_of_line(i).size());
    lv.a = Rat(v[ch.idx[0]]);
    lv.b = Rat(v[ch.idx[1]]);
    lv.c = Rat(v[ch.idx[2]]);
    lv.at_infinity = lv.a == 0 && lv.b == 0;
    if (lv.at_infinity && opts.strict_chart)
      fail(Errc::ChartDegenerate,
           "line '" + id + "' is the chart's line at infinity");
    lns.push_back(std::move(lv));
  }

  // viewport
  Rat xmin, ymin, xmax, ymax;
  if (opts.viewport) {
    xmin = (*opts.viewport)[0];
    ymin = (*opts.viewport)[1];
    xmax = (*opts.viewport)[2];
    ymax = (*opts.viewport)[3];
    if (xmin >= xmax || ymin >= ymax)
      fail(Errc::ValidationError, "empty render viewport");
  } else {
    bool any = false;
    for (const auto& p : pts) {
      if (p.infinite) continue;
      if (!any) {
        xmin = xmax = p.x;
        ymin = ymax = p.y;
        any = true;
      } else {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
      }
    }
    if (!any) {
      xmin = ymin = Rat(-1);
      xmax = ymax = Rat(1);
    }
    Rat spanx = xmax - xmin, spany = ymax - ymin;
    if (spanx == 0) spanx = 2, xmin -= 1, xmax += 1;
    if (spany == 0) spany = 2, ymin -= 1, ymax += 1;
    xmin -= spanx / 5;
    xmax += spanx / 5;
    ymin -= spany / 5;
    ymax += spany / 5;
  }
  Rat spanx = xmax - xmin, spany = ymax - ymin;

  const int pad = 24;
  int content_w = opts.width_px - 2 * pad;
  if (content_w < 10) fail(Errc::ValidationError, "render width too small");
  Rat content_h_r = Rat(content_w) * spany / spanx;
  Int hq = content_h_r.get_num() / content_h_r.get_den();
  int content_h = static_cast<int>(hq.get_si()) + 1;
  int W = opts.width_px, H = content_h + 2 * pad;

  auto px = [&](const Rat& x) { return Rat(pad) + (x - xmin) / spanx * content_w; };
  auto py = [&](const Rat& y) { return Rat(pad) + (ymax - y) / spany * content_h_r; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
      << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H
      << "\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << content_w
      << "\" height=\"" << content_h
      << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  // lines first
  for (const auto& l : lns) {
    if (l.at_infinity) {
      svg << "<rect x=\"" << pad + 4 << "\" y=\"" << pad + 4 << "\" width=\""
          << content_w - 8 << "\" height=\"" << content_h - 8
          << "\" fill=\"none\" stroke=\"" << color_for(l.valence)
          << "\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"><title>" << l.id
          << " (line at infinity)</title></rect>\n";
      continue;
    }
    // clip a X + b Y + c = 0 to the viewport
    std::vector<std::pair<Rat, Rat>> hits;
    auto push = [&](const Rat& x, const Rat& y) {
      if (x < xmin || x > xmax || y < ymin || y > ymax) return;
      for (const auto& h : hits)
        if (h.first == x && h.second == y) return;
      hits.emplace_back(x, y);
    };
    if (l.b != 0) {
      push(xmin, (-l.c - l.a * xmin) / l.b);
      push(xmax, (-l.c - l.a * xmax) / l.b);
    }
    if (l.a != 0) {
      push((-l.c - l.b * ymin) / l.a, ymin);
      push((-l.c - l.b * ymax) / l.a, ymax);
    }
    if (hits.size() < 2) continue;  // outside the viewport
    std::sort(hits.begin(), hits.end());
    const auto& h0 = hits.front();
    const auto& h1 = hits.back();
    svg << "<line x1=\"" << dec2(px(h0.first)) << "\" y1=\"" << dec2(py(h0.second))
        << "\" x2=\"" << dec2(px(h1.first)) << "\" y2=\"" << dec2(py(h1.second))
        << "\" stroke=\"" << color_for(l.valence)
        << "\" stroke-width=\"1.5\"><title>" << l.id << "</title></line>\n";
  }

  // finite points
  for (const auto& p : pts) {
    if (p.infinite) continue;
    if (p.x < xmin || p.x > xmax || p.y < ymin || p.y > ymax) continue;
    svg << "<circle cx=\"" << dec2(px(p.x)) << "\" cy=\"" << dec2(py(p.y))
        << "\" r=\"4\" fill=\"" << color_for(p.valence)
        << "\" stroke=\"white\" stroke-width=\"1\"><title>" << p.id
        << "</title></circle>\n";
  }

  // points at infinity: boundary arrows in their direction
  Rat cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
  for (const auto& p : pts) {
    if (!p.infinite) continue;
    Rat dx = p.x, dy = p.y;
    // first exit of the ray center + t*(dx,dy) from the viewport
    Rat t(-1);
    auto consider = [&](const Rat& cand) {
      if (cand <= 0) return;
      Rat hx = cx + cand * dx, hy = cy + cand * dy;
      if (hx < xmin || hx > xmax || hy < ymin || hy > ymax) return;
      if (t < 0 || cand < t) t = cand;
    };
    if (dx != 0) {
      consider((xmax - cx) / dx);
      consider((xmin - cx) / dx);
    }
    if (dy != 0) {
      consider((ymax - cy) / dy);
      consider((ymin - cy) / dy);
    }
    if (t < 0) continue;
    Rat bx = cx + t * dx, by = cy + t * dy;          // boundary tip
    Rat ix = cx + t * dx * 8 / 10, iy = cy + t * dy * 8 / 10;  // shaft start
    Rat qx = cx + t * dx * 9 / 10, qy = cy + t * dy * 9 / 10;  // head base
    Rat wx = -(t * dy) / 25, wy = (t * dx) / 25;     // head half-width
    svg << "<line x1=\"" << dec2(px(ix)) << "\" y1=\"" << dec2(py(iy)) << "\" x2=\""
        << dec2(px(qx)) << "\" y2=\"" << dec2(py(qy)) << "\" stroke=\""
        << color_for(p.valence) << "\" stroke-width=\"1.5\"/>\n";
    svg << "<polygon points=\"" << dec2(px(bx)) << "," << dec2(py(by)) << " "
        << dec2(px(qx + wx)) << "," << dec2(py(qy + wy)) << " " << dec2(px(qx - wx))
        << "," << dec2(py(qy - wy)) << "\" fill=\"" << color_for(p.valence)
        << "\"><title>" << p.id << " (at infinity)</title></polygon>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace plic
