#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "chieb/sweep.hpp"

namespace chieb {

namespace {

// Sign-preserving log map: linear inside [-lin, lin], logarithmic outside.
double symlog(double v, double lin) {
    const double a = std::abs(v);
    if (a <= lin) return v / lin;
    const double s = v > 0 ? 1.0 : -1.0;
    return s * (1.0 + std::log10(a / lin));
}

} // namespace

void write_svg(const SweepResult& result, const std::filesystem::path& path) {
    if (result.rows.size() < 2) throw std::domain_error("write_svg: need at least two rows");
    const int width = 840, height = 560, margin = 60;

    double ymax = 0.0;
    for (const auto& r : result.rows) ymax = std::max(ymax, std::abs(r.chi12_dimless.real()));
    if (ymax == 0.0) ymax = 1.0;
    const double lin = ymax * 1e-12;

    const double axis_scale =
        result.axis == AxisConvention::hz ? 1.0 / (2.0 * 3.14159265358979323846) : 1.0;
    const double x0 = std::log10(result.rows.front().omega * axis_scale);
    const double x1 = std::log10(result.rows.back().omega * axis_scale);
    double s0 = 0.0, s1 = 0.0;
    for (const auto& r : result.rows) {
        const double s = symlog(r.chi12_dimless.real(), lin);
        s0 = std::min(s0, s);
        s1 = std::max(s1, s);
    }
    if (s1 == s0) s1 = s0 + 1.0;

    auto px = [&](double w) {
        return margin + (std::log10(w) - x0) / (x1 - x0) * (width - 2 * margin);
    };
    auto py = [&](double v) {
        return height - margin - (symlog(v, lin) - s0) / (s1 - s0) * (height - 2 * margin);
    };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
        << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
    svg << "<line x1='" << margin << "' y1='" << height - margin << "' x2='" << width - margin
        << "' y2='" << height - margin << "' stroke='black'/>\n";
    svg << "<line x1='" << margin << "' y1='" << margin << "' x2='" << margin << "' y2='"
        << height - margin << "' stroke='black'/>\n";
    for (int d = int(std::ceil(x0)); d <= int(std::floor(x1)); ++d) {
        const double w = std::pow(10.0, d);
        svg << "<line x1='" << px(w) << "' y1='" << height - margin << "' x2='" << px(w)
            << "' y2='" << height - margin + 6 << "' stroke='black'/>\n";
        svg << "<text x='" << px(w) << "' y='" << height - margin + 22
            << "' font-size='11' text-anchor='middle'>1e" << d << "</text>\n";
    }
    if (s0 < 0.0 && s1 > 0.0)
        svg << "<line x1='" << margin << "' y1='" << py(0.0) << "' x2='" << width - margin
            << "' y2='" << py(0.0) << "' stroke='#cccccc'/>\n";
    svg << "<text x='" << width / 2 << "' y='" << height - 14
        << "' font-size='12' text-anchor='middle'>omega ("
        << (result.axis == AxisConvention::hz ? "Hz" : "rad/s") << ", log)</text>\n";
    svg << "<text x='16' y='" << height / 2
        << "' font-size='12' text-anchor='middle' transform='rotate(-90 16 " << height / 2
        << ")'>Re chi12 / (eps0 c V) (symlog)</text>\n";

    svg << "<polyline fill='none' stroke='#1f4e9c' stroke-width='1.2' points='";
    for (const auto& r : result.rows)
        svg << px(r.omega * axis_scale) << ',' << py(r.chi12_dimless.real()) << ' ';
    svg << "'/>\n</svg>\n";

    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_svg: cannot open " + path.string());
    f << svg.str();
}

} // namespace chieb
