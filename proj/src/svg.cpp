#include "tropquot/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tropquot/errors.hpp"

namespace tropquot {

namespace {

// Fixed two-decimal rendering of a rational, rounding half away from zero.
// Exact integer arithmetic keeps the output identical across platforms.
std::string fixed2(const Rat& r) {
    const Int n = r.get_num() * 100;
    const Int d = r.get_den();
    const Int sign = (n < 0) ? -1 : 1;
    const Int q = (2 * n + sign * d) / (2 * d);  // mpz '/' truncates toward zero
    const bool neg = q < 0;
    const Int a = abs(q);
    const Int whole = a / 100;
    const long frac = Int(a % 100).get_si();
    std::ostringstream out;
    if (neg) out << '-';
    out << whole.get_str() << '.' << (frac < 10 ? "0" : "") << frac;
    return out.str();
}

std::string fixed2(long v) { return fixed2(Rat(v)); }

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

struct SvgWriter {
    std::ostringstream body;
    long width = 0, height = 0;

    SvgWriter(long w, long h) : width(w), height(h) {}

    void line(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2,
              const std::string& stroke, const std::string& extra = "") {
        body << "<line x1=\"" << fixed2(x1) << "\" y1=\"" << fixed2(y1) << "\" x2=\""
             << fixed2(x2) << "\" y2=\"" << fixed2(y2) << "\" stroke=\"" << stroke << "\""
             << (extra.empty() ? "" : " ") << extra << "/>\n";
    }

    void circle(const Rat& cx, const Rat& cy, const std::string& r, const std::string& fill,
                const std::string& extra = "") {
        body << "<circle cx=\"" << fixed2(cx) << "\" cy=\"" << fixed2(cy) << "\" r=\"" << r
             << "\" fill=\"" << fill << "\"" << (extra.empty() ? "" : " ") << extra << "/>\n";
    }

    void text(const Rat& x, const Rat& y, const std::string& s, const std::string& extra = "") {
        body << "<text x=\"" << fixed2(x) << "\" y=\"" << fixed2(y)
             << "\" font-family=\"sans-serif\"" << (extra.empty() ? "" : " ") << extra << ">"
             << xml_escape(s) << "</text>\n";
    }

    void polygon(const std::vector<std::pair<Rat, Rat>>& pts, const std::string& fill) {
        body << "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body << ' ';
            body << fixed2(pts[i].first) << ',' << fixed2(pts[i].second);
        }
        body << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
    }

    std::string finish() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
            << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
            << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

const char* kPalette[] = {"#bfdbfe", "#bbf7d0", "#fde68a", "#fecaca", "#ddd6fe", "#a5f3fc"};
constexpr int kPaletteSize = 6;

std::string cone_label(const Fan& f, int cone_index) {
    const auto& idx = f.cones.at(cone_index).ray_indices;
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx[i]);
    }
    s += '}';
    return s;
}

// Endpoint of a ray drawn with sup-norm radius R about the center: exact, no
// square roots involved.
std::pair<Rat, Rat> ray_endpoint(const LatticeVec& ray, const Rat& cx, const Rat& cy, long R) {
    Int m = abs(ray[0]);
    if (ray.size() > 1) {
        const Int m2 = abs(ray[1]);
        if (m2 > m) m = m2;
    }
    Rat dx(Int(ray[0] * R), m);
    dx.canonicalize();
    Rat dy = 0;
    if (ray.size() > 1) {
        dy = Rat(Int(ray[1] * R), m);
        dy.canonicalize();
    }
    return {Rat(cx + dx), Rat(cy - dy)};
}

std::string render_fan_rank1(const Fan& f) {
    SvgWriter svg(340, 140);
    const Rat cx = 170, cy = 70;
    svg.line(30, cy, 310, cy, "#dddddd");
    svg.circle(cx, cy, "3", "#111111");
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const auto [x, y] = ray_endpoint(f.rays[i], cx, cy, 120);
        svg.line(cx, cy, x, y, "#333333", "stroke-width=\"2.5\"");
        svg.circle(x, y, "4", "#333333");
        svg.text(x, cy - 14, "(" + f.rays[i][0].get_str() + ")", "text-anchor=\"middle\" font-size=\"13\"");
    }
    svg.text(12, 24, xml_escape(f.name), "font-size=\"14\" fill=\"#555555\"");
    return svg.finish();
}

std::string render_fan_rank2(const Fan& f) {
    SvgWriter svg(340, 340);
    const Rat cx = 170, cy = 170;
    const long R = 120;

    // Shaded wedges for the two-dimensional cones, painted before rays.
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        const FanCone& fc = f.cones[c];
        if (fc.cone_dim != 2) continue;
        const IntMat& rays = fc.geom.rays;
        if (rays.size() != 2) continue;
        const auto p1 = ray_endpoint(rays[0], cx, cy, R);
        const auto p2 = ray_endpoint(rays[1], cx, cy, R);
        const LatticeVec mid = vec_add(rays[0], rays[1]);
        std::vector<std::pair<Rat, Rat>> pts{{cx, cy}, p1};
        if (!is_zero(mid)) pts.push_back(ray_endpoint(mid, cx, cy, R));
        pts.push_back(p2);
        svg.polygon(pts, kPalette[c % kPaletteSize]);
    }

    svg.line(20, cy, 320, cy, "#dddddd");
    svg.line(cx, 20, cx, 320, "#dddddd");

    for (const auto& ray : f.rays) {
        const auto [x, y] = ray_endpoint(ray, cx, cy, R);
        svg.line(cx, cy, x, y, "#333333", "stroke-width=\"2.5\"");
        const auto [lx, ly] = ray_endpoint(ray, cx, cy, R + 24);
        svg.text(lx, ly + 4, "(" + ray[0].get_str() + "," + ray[1].get_str() + ")",
                 "text-anchor=\"middle\" font-size=\"13\"");
    }
    svg.circle(cx, cy, "3", "#111111");
    svg.text(12, 24, xml_escape(f.name), "font-size=\"14\" fill=\"#555555\"");
    return svg.finish();
}

// Rank-1 skeletons are drawn as the classical segment: the "0" end on the
// left (the stratum of the positive ray), the Gauss point in the middle, the
// "infinity" end on the right. An end is a filled dot when its stratum exists
// in the fan and an open dot when it is only a limit direction.
std::string render_skeleton_rank1(const Fan& f) {
    SvgWriter svg(340, 120);
    const Rat y = 64;
    const Rat xl = 50, xm = 170, xr = 290;

    int pos_ray = -1, neg_ray = -1;  // cone indices of the two possible ray strata
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        const FanCone& fc = f.cones[c];
        if (fc.cone_dim != 1) continue;
        if (fc.geom.rays[0][0] > 0) pos_ray = static_cast<int>(c);
        else neg_ray = static_cast<int>(c);
    }

    svg.line(xl, y, xr, y, "#333333", "stroke-width=\"2\"");

    // Left end ("0"), the Gauss point, then the right end ("infinity"): the
    // text elements appear in this order along the segment.
    if (pos_ray >= 0) svg.circle(xl, y, "5", "#111111");
    else svg.circle(xl, y, "5", "white", "stroke=\"#111111\" stroke-width=\"1.5\"");
    svg.text(xl, y - 14, "0", "text-anchor=\"middle\" font-size=\"15\"");

    svg.circle(xm, y, "5", "#111111");
    svg.text(xm, y - 14, "η", "text-anchor=\"middle\" font-size=\"15\"");

    if (neg_ray >= 0) svg.circle(xr, y, "5", "#111111");
    else svg.circle(xr, y, "5", "white", "stroke=\"#111111\" stroke-width=\"1.5\"");
    svg.text(xr, y - 14, "∞", "text-anchor=\"middle\" font-size=\"15\"");

    svg.text(12, 24, xml_escape(f.name) + " skeleton", "font-size=\"14\" fill=\"#555555\"");
    return svg.finish();
}

}  // namespace

std::string render_fan_svg(const Fan& f) {
    if (f.rank == 1) return render_fan_rank1(f);
    if (f.rank == 2) return render_fan_rank2(f);
    throw input_error("fan rendering is implemented for rank 1 and 2 only");
}

std::string render_skeleton_svg(const Fan& f, const SkeletonGraph& g) {
    if (f.rank == 1) return render_skeleton_rank1(f);

    // Layered layout: one row per cone dimension, dense stratum on top.
    std::map<int, std::vector<int>> rows;  // cone_dim -> vertex indices
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        rows[f.cones[g.vertices[v].cone].cone_dim].push_back(static_cast<int>(v));
    std::size_t widest = 1;
    for (const auto& [d, verts] : rows) widest = std::max(widest, verts.size());

    const long width = std::max<long>(340, 110 * static_cast<long>(widest) + 60);
    const long height = 90 * static_cast<long>(rows.size()) + 50;
    SvgWriter svg(width, height);

    std::vector<std::pair<Rat, Rat>> at(g.vertices.size());
    long row_number = 0;
    for (const auto& [d, verts] : rows) {
        const Rat y = 70 + 90 * row_number;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            Rat slot(static_cast<long>(k) + 1, static_cast<long>(verts.size()) + 1);
            slot.canonicalize();
            at[verts[k]] = {Rat(Rat(width) * slot), y};
        }
        ++row_number;
    }

    for (const auto& [a, b] : g.edges)
        svg.line(at[a].first, at[a].second, at[b].first, at[b].second, "#999999",
                 "stroke-width=\"1.5\"");

    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        svg.circle(at[v].first, at[v].second, "5", "#111111");
        svg.text(at[v].first, at[v].second + 22, cone_label(f, g.vertices[v].cone),
                 "text-anchor=\"middle\" font-size=\"12\"");
    }
    for (const auto& m : g.marks) {
        const std::string glyph = (m.label == "eta") ? "η" : m.label;
        svg.text(at[m.vertex].first + 12, at[m.vertex].second - 10, glyph, "font-size=\"15\"");
    }
    svg.text(12, 24, xml_escape(f.name) + " skeleton", "font-size=\"14\" fill=\"#555555\"");
    return svg.finish();
}

}  // namespace tropquot
