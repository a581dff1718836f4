#include "crystalline/svg.hpp"

#include <algorithm>
#include <sstream>

#include "crystalline/error.hpp"

namespace crystalline {

std::string polygon_svg(const std::vector<Polygon>& polygons, std::vector<std::string> labels) {
    if (polygons.empty()) fail(Errc::param_mismatch, "polygon_svg needs at least one polygon");
    while (labels.size() < polygons.size())
        labels.push_back("nu_" + std::to_string(labels.size() + 1));

    static const char* colors[] = {"#1f6fb2", "#c0392b", "#27ae60", "#8e44ad", "#d68910", "#16a085"};
    const int ncolors = 6;
    const long long scale = 40, pad = 30;

    long long max_x = 1, max_y = 1;
    std::vector<std::vector<BreakPoint>> verts;
    verts.reserve(polygons.size());
    for (const auto& p : polygons) {
        verts.push_back(break_points(p));
        for (const auto& v : verts.back()) {
            max_x = std::max(max_x, v.x);
            max_y = std::max(max_y, v.y);
        }
    }
    const long long w = max_x * scale + 2 * pad, h = max_y * scale + 2 * pad;
    auto px = [&](long long x) { return pad + x * scale; };
    auto py = [&](long long y) { return h - pad - y * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
    for (long long x = 0; x <= max_x; ++x)
        out << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\""
            << py(max_y) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (long long y = 0; y <= max_y; ++y)
        out << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(max_x) << "\" y2=\""
            << py(y) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

    for (size_t i = 0; i < polygons.size(); ++i) {
        const char* color = colors[i % ncolors];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (size_t j = 0; j < verts[i].size(); ++j) {
            if (j) out << ' ';
            out << px(verts[i][j].x) << ',' << py(verts[i][j].y);
        }
        out << "\"/>\n";
        for (const auto& v : verts[i])
            out << "<circle cx=\"" << px(v.x) << "\" cy=\"" << py(v.y) << "\" r=\"4\" fill=\""
                << color << "\"/>\n";
        const auto& anchor = verts[i].back();
        out << "<text x=\"" << px(anchor.x) + 8 << "\" y=\"" << py(anchor.y) - 8 + 16 * static_cast<long long>(i)
            << "\" font-family=\"monospace\" font-size=\"14\" fill=\"" << color << "\">" << labels[i]
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace crystalline
