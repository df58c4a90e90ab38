#include "svg.hpp"

#include <cstdio>
#include <fstream>

#include "nr/errors.hpp"

namespace nr::tools {

namespace {
constexpr double kExtent = 1.2;
constexpr double kSize = 720.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}
} // namespace

SvgCanvas::SvgCanvas() = default;

double SvgCanvas::px(double x) const { return (x + kExtent) / (2.0 * kExtent) * kSize; }
double SvgCanvas::py(double y) const { return (kExtent - y) / (2.0 * kExtent) * kSize; }

void SvgCanvas::circle(cx center, double radius, const std::string& stroke, double width,
                       const std::string& fill) {
    body_ << "  <circle cx=\"" << num(px(center.real())) << "\" cy=\"" << num(py(center.imag()))
          << "\" r=\"" << num(radius / (2.0 * kExtent) * kSize) << "\" stroke=\"" << stroke
          << "\" stroke-width=\"" << num(width) << "\" fill=\"" << fill << "\"/>\n";
}

void SvgCanvas::dot(cx center, double px_radius, const std::string& fill) {
    body_ << "  <circle cx=\"" << num(px(center.real())) << "\" cy=\"" << num(py(center.imag()))
          << "\" r=\"" << num(px_radius) << "\" fill=\"" << fill << "\"/>\n";
}

void SvgCanvas::polygon(std::span<const cx> vertices, const std::string& stroke, double width,
                        const std::string& fill, double fill_opacity) {
    body_ << "  <polygon points=\"";
    for (const cx& v : vertices)
        body_ << num(px(v.real())) << ',' << num(py(v.imag())) << ' ';
    body_ << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\" fill=\""
          << fill << "\" fill-opacity=\"" << num(fill_opacity) << "\"/>\n";
}

void SvgCanvas::polyline(std::span<const cx> points, const std::string& stroke, double width) {
    body_ << "  <polyline points=\"";
    for (const cx& p : points)
        body_ << num(px(p.real())) << ',' << num(py(p.imag())) << ' ';
    body_ << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
          << "\" fill=\"none\"/>\n";
}

void SvgCanvas::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kSize << ' ' << kSize
        << "\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n"
        << "  <rect width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
}

} // namespace nr::tools
