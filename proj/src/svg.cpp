#include "circadian/svg.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace circadian {

namespace {

struct Mapper {
    double u_max, y_max;
    static constexpr double kSize = 480.0;
    static constexpr double kMargin = 50.0;

    double x(double u) const {
        return kMargin + u / u_max * (kSize - 2 * kMargin);
    }
    double y(double v) const {
        return kSize - kMargin - v / y_max * (kSize - 2 * kMargin);
    }
};

void polyline(std::ostringstream& out,
              const std::vector<std::pair<double, double>>& pts,
              const Mapper& m, const char* style) {
    out << "<polyline fill=\"none\" " << style << " points=\"";
    for (const auto& [u, v] : pts) out << m.x(u) << ',' << m.y(v) << ' ';
    out << "\"/>\n";
}

}  // namespace

std::string render_cobweb_svg(const ModelParams& p,
                              const SpiderwebTrace& trace) {
    // Plot plane: x = nuclear PER fed to the mRNA system, y = u2 = ks*M.
    double u_max = 0.0;
    for (double u : trace.iterates) u_max = std::max(u_max, u);
    u_max = std::max(u_max * 1.3, 0.1);
    const double y_cap = p.ks * char_mrna(0.0, p);

    // mRNA characteristic: c = ks * k1(u).
    std::vector<std::pair<double, double>> mrna_curve;
    const int npts = 200;
    for (int i = 0; i <= npts; ++i) {
        const double u = u_max * i / npts;
        mrna_curve.emplace_back(u, p.ks * char_mrna(u, p));
    }
    // PER characteristic, drawn inverted: (PN equilibrium, input c).
    std::vector<std::pair<double, double>> per_curve;
    for (int i = 0; i <= npts; ++i) {
        const double c = y_cap * i / npts;
        per_curve.emplace_back(char_per(c, p).PN, c);
    }

    double y_max = y_cap;
    for (const auto& [u, v] : per_curve) y_max = std::max(y_max, v);
    y_max *= 1.1;

    Mapper m{u_max, y_max};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Mapper::kSize
        << "\" height=\"" << Mapper::kSize << "\">\n";
    // Axes.
    out << "<line x1=\"" << m.x(0) << "\" y1=\"" << m.y(0) << "\" x2=\""
        << m.x(u_max) << "\" y2=\"" << m.y(0)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << m.x(0) << "\" y1=\"" << m.y(0) << "\" x2=\""
        << m.x(0) << "\" y2=\"" << m.y(y_max)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << m.x(u_max) - 20 << "\" y=\"" << m.y(0) + 30
        << "\" font-size=\"12\">P_N</text>\n";
    out << "<text x=\"" << m.x(0) - 40 << "\" y=\"" << m.y(y_max) + 10
        << "\" font-size=\"12\">u2</text>\n";

    polyline(out, mrna_curve, m,
             "stroke=\"blue\" stroke-width=\"1.5\" stroke-dasharray=\"2,3\"");
    polyline(out, per_curve, m,
             "stroke=\"green\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"");

    // Iteration path: vertical onto the mRNA curve, horizontal onto the PER
    // curve, repeat.
    std::vector<std::pair<double, double>> path;
    if (!trace.iterates.empty()) {
        path.emplace_back(trace.iterates.front(), 0.0);
        for (std::size_t k = 0; k + 1 < trace.iterates.size(); ++k) {
            const double c = p.ks * char_mrna(trace.iterates[k], p);
            path.emplace_back(trace.iterates[k], c);
            path.emplace_back(trace.iterates[k + 1], c);
        }
    }
    polyline(out, path, m, "stroke=\"red\" stroke-width=\"1\"");
    out << "</svg>\n";
    return out.str();
}

}  // namespace circadian
