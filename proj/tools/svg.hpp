#ifndef NR_TOOLS_SVG_HPP
#define NR_TOOLS_SVG_HPP

#include <span>
#include <sstream>
#include <string>

#include "nr/complex_matrix.hpp"

namespace nr::tools {

// Minimal SVG writer over the fixed viewport [-1.2, 1.2]^2 (720 x 720 px).
// Geometry outside the viewport is clipped by the renderer.
class SvgCanvas {
public:
    SvgCanvas();

    void circle(cx center, double radius, const std::string& stroke, double width = 1.0,
                const std::string& fill = "none");
    void dot(cx center, double px_radius, const std::string& fill);
    void polygon(std::span<const cx> vertices, const std::string& stroke, double width = 1.0,
                 const std::string& fill = "none", double fill_opacity = 1.0);
    void polyline(std::span<const cx> points, const std::string& stroke, double width = 1.0);
    void unit_circle() { circle(cx(0.0), 1.0, "#888888"); }

    void write(const std::string& path) const;

private:
    double px(double x) const;
    double py(double y) const;
    std::ostringstream body_;
};

} // namespace nr::tools

#endif
