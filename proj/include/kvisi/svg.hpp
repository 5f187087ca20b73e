#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "kvisi/engine.hpp"
#include "kvisi/layout.hpp"
#include "kvisi/model.hpp"

// SVG rendering of representations and one-bend drawings. Rendering is
// documentation output only and never feeds back into any computation, so
// plain doubles are fine here.

namespace kvisi {

namespace svg_detail {

inline const char* palette(int i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    return colors[i % 8];
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(5);
    os << std::fixed << v;
    return os.str();
}

struct Canvas {
    std::ostringstream body;
    double w = 0, h = 0;

    void line(double x1, double y1, double x2, double y2, const char* color,
              double width, bool dashed = false) {
        body << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\""
             << fmt(x2) << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << color
             << "\" stroke-width=\"" << fmt(width) << "\""
             << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
    }
    void rect(double x, double y, double w_, double h_, const char* stroke) {
        body << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\""
             << fmt(w_) << "\" height=\"" << fmt(h_)
             << "\" fill=\"none\" stroke=\"" << stroke << "\"/>\n";
    }
    void dot(double x, double y, const char* fill) {
        body << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
             << "\" r=\"2.5\" fill=\"" << fill << "\"/>\n";
    }
    void arc_path(double cx, double cy, double r, double a0, double a1,
                  const char* color) {
        // a0..a1 in radians, counterclockwise, a1 > a0.
        double x0 = cx + r * std::cos(a0), y0 = cy - r * std::sin(a0);
        double x1 = cx + r * std::cos(a1), y1 = cy - r * std::sin(a1);
        int large = (a1 - a0 > M_PI) ? 1 : 0;
        body << "<path d=\"M " << fmt(x0) << " " << fmt(y0) << " A " << fmt(r)
             << " " << fmt(r) << " 0 " << large << " 0 " << fmt(x1) << " "
             << fmt(y1) << "\" fill=\"none\" stroke=\"" << color
             << "\" stroke-width=\"2\"/>\n";
    }
    void circle(double cx, double cy, double r, const char* color) {
        body << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\""
             << fmt(r) << "\" fill=\"none\" stroke=\"" << color
             << "\" stroke-width=\"2\"/>\n";
    }
    std::string finish() const {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w)
           << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " "
           << fmt(h) << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
           << body.str() << "</svg>\n";
        return os.str();
    }
};

}  // namespace svg_detail

// Representation drawing; optional sightline overlay draws one witness per
// engine edge.
inline std::string render_representation(const Representation& rep, bool sightlines) {
    using namespace svg_detail;
    Canvas cv;

    if (auto* sb = std::get_if<SemiBarRep>(&rep)) {
        int n = int(sb->lengths.size());
        double maxlen = 1;
        for (const Rational& len : sb->lengths) maxlen = std::max(maxlen, len.to_double());
        double scale = 420.0 / maxlen, row = 34;
        cv.w = 480;
        cv.h = row * (n + 1);
        for (int i = 0; i < n; ++i) {
            double y = row * (i + 1);
            cv.line(30, y, 30 + scale * sb->lengths[i].to_double(), y, palette(i), 4);
        }
        if (sightlines) {
            Graph g = semi_bar_graph(*sb);
            for (auto [a, b] : g.edges) {
                double x = 30 + scale * min(sb->lengths[a], sb->lengths[b]).to_double();
                cv.line(x, row * (a + 1), x, row * (b + 1), "#555555", 1, true);
            }
        }
        return cv.finish();
    }

    if (auto* br = std::get_if<BarRep>(&rep)) {
        int n = int(br->bars.size());
        double maxx = 1;
        for (const Bar& b : br->bars) maxx = std::max(maxx, b.x_right.to_double());
        double scale = 420.0 / maxx, row = 34;
        cv.w = 480;
        cv.h = row * (n + 1);
        for (int i = 0; i < n; ++i) {
            double y = row * (i + 1);
            cv.line(30 + scale * br->bars[i].x_left.to_double(), y,
                    30 + scale * br->bars[i].x_right.to_double(), y, palette(i), 4);
        }
        if (sightlines) {
            Graph g = bar_graph(*br);
            for (auto [a, b] : g.edges) {
                Rational lo = max(br->bars[a].x_left, br->bars[b].x_left);
                Rational hi = min(br->bars[a].x_right, br->bars[b].x_right);
                double x = 30 + scale * ((lo + hi) / Rational(2)).to_double();
                cv.line(x, row * (a + 1), x, row * (b + 1), "#555555", 1, true);
            }
        }
        return cv.finish();
    }

    // Arc-like families.
    std::vector<Arc> arcs;
    int k = 0;
    if (auto* a = std::get_if<ArcRep>(&rep)) { arcs = a->arcs; k = a->k; }
    if (auto* c = std::get_if<CircleRep>(&rep)) { arcs = c->arcs; k = c->k; }
    if (auto* s = std::get_if<SemiArcRep>(&rep)) {
        ArcRep ind = induced_arc_rep(*s);
        arcs = ind.arcs;
        k = s->k;
    }
    (void)k;
    int n = int(arcs.size());
    double unit = 26;
    double R = unit * (n + 1);
    cv.w = cv.h = 2 * R + 40;
    double cx = cv.w / 2, cy = cv.h / 2;
    int maxrank = 0;
    for (const Arc& a : arcs) maxrank = std::max(maxrank, a.rank);
    for (int i = 0; i < n; ++i) {
        const Arc& a = arcs[i];
        double r = unit * (maxrank - a.rank + 1);
        if (a.full_circle) {
            cv.circle(cx, cy, r, palette(i));
        } else {
            double a0 = a.start.to_double() * M_PI;
            double a1 = a0 + a.extent.to_double() * M_PI;
            if (a.extent.is_zero())
                cv.dot(cx + r * std::cos(a0), cy - r * std::sin(a0), palette(i));
            else
                cv.arc_path(cx, cy, r, a0, a1, palette(i));
        }
    }
    if (sightlines && n > 0) {
        ArcRep ar;
        ar.arcs = arcs;
        ar.k = rep_k(rep);
        Graph g = arc_graph(ar);
        detail::AngularSweep sw = detail::build_sweep(arcs);
        int m = sw.interval_count();
        for (auto [u, v] : g.edges) {
            for (int t = 0; t < m; ++t) {
                if (sw.present[u][t] && sw.present[v][t] &&
                    detail::between_present(sw, u, v, t) <= ar.k) {
                    double theta = angle_mod(sw.interval_mid(t)).to_double() * M_PI;
                    double r1 = unit * (maxrank - arcs[u].rank + 1);
                    double r2 = unit * (maxrank - arcs[v].rank + 1);
                    cv.line(cx + r1 * std::cos(theta), cy - r1 * std::sin(theta),
                            cx + r2 * std::cos(theta), cy - r2 * std::sin(theta),
                            "#555555", 1, true);
                    break;
                }
            }
        }
    }
    return cv.finish();
}

// One-bend drawing with per-class stroke colors when a decomposition is
// supplied.
inline std::string render_one_bend(const OneBendDrawing& d, const Decomposition* dec) {
    using namespace svg_detail;
    Canvas cv;
    double maxlen = 1;
    for (const Rational& len : d.rep.lengths) maxlen = std::max(maxlen, len.to_double());
    int n = int(d.rep.lengths.size());
    double scale = 420.0 / maxlen, row = 44, left = 460, top = 20;
    cv.w = 500;
    cv.h = row * n + 2 * top;

    auto X = [&](const Rational& x) { return left + scale * x.to_double(); };
    auto Y = [&](const Rational& y) { return top + row * (n - y.to_double()); };

    for (int i = 0; i < n; ++i) {
        const RectBox& r = d.rectangles[i];
        cv.rect(X(r.x0), Y(r.y1), scale * (r.x1 - r.x0).to_double(),
                row * (r.y1 - r.y0).to_double(), "#999999");
        cv.dot(X(d.vertex_points[i].x), Y(d.vertex_points[i].y), "#000000");
    }
    for (const DrawnEdge& e : d.edges) {
        int color_idx = 0;
        if (dec) {
            auto it = dec->class_of_edge.find({std::min(e.u, e.v), std::max(e.u, e.v)});
            if (it != dec->class_of_edge.end()) color_idx = it->second - 1;
        }
        const char* c = palette(color_idx);
        cv.line(X(d.vertex_points[e.u].x), Y(d.vertex_points[e.u].y), X(e.bend.x),
                Y(e.bend.y), c, 1.6);
        cv.line(X(e.bend.x), Y(e.bend.y), X(d.vertex_points[e.v].x),
                Y(d.vertex_points[e.v].y), c, 1.6);
    }
    return cv.finish();
}

}  // namespace kvisi
