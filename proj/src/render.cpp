#include "braid/render.hpp"

#include <algorithm>
#include <sstream>

namespace braid {

namespace {

// one color per curve, cycling if n + 1 exceeds the palette
const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;
constexpr int kUnit = 24;    // pixels per axis step
constexpr int kMargin = 30;  // border around the drawing

}  // namespace

std::string render_svg(const Lamination& L) {
    const int items = static_cast<int>(L.axis.size());
    auto x = [](int pos) { return kMargin + kUnit * pos; };

    // tallest semicircle determines the vertical extent
    int max_span = 1;
    for (int id = 0; id < L.crossings(); ++id) {
        max_span = std::max(max_span, std::abs(crossing_pos(L, L.upper[id]) -
                                               crossing_pos(L, id)));
        max_span = std::max(max_span, std::abs(crossing_pos(L, L.lower[id]) -
                                               crossing_pos(L, id)));
    }
    const int mid = kMargin + kUnit * max_span / 2;
    const int width = 2 * kMargin + kUnit * std::max(items - 1, 1);
    const int height = 2 * mid;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <line x1=\"" << x(0) - kUnit / 2 << "\" y1=\"" << mid << "\" x2=\""
       << x(items - 1) + kUnit / 2 << "\" y2=\"" << mid
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

    auto semicircle = [&](int a, int b, bool up, int curve) {
        if (a > b) std::swap(a, b);
        double r = kUnit * (b - a) / 2.0;
        os << "  <path d=\"M " << x(a) << ' ' << mid << " A " << r << ' ' << r << " 0 0 "
           << (up ? 1 : 0) << ' ' << x(b) << ' ' << mid << "\" fill=\"none\" stroke=\""
           << kPalette[curve % kPaletteSize] << "\" stroke-width=\"1.5\"/>\n";
    };
    for (int id = 0; id < L.crossings(); ++id) {
        if (L.upper[id] > id)
            semicircle(crossing_pos(L, id), crossing_pos(L, L.upper[id]), true, L.curve[id]);
        if (L.lower[id] > id)
            semicircle(crossing_pos(L, id), crossing_pos(L, L.lower[id]), false, L.curve[id]);
    }
    for (int j = 0; j <= L.n; ++j)
        os << "  <circle cx=\"" << x(puncture_pos(L, j)) << "\" cy=\"" << mid
           << "\" r=\"3\" fill=\"" << (j == 0 ? "#000000" : "#444444") << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace braid
