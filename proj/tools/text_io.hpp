#ifndef NR_TOOLS_TEXT_IO_HPP
#define NR_TOOLS_TEXT_IO_HPP

#include <string>
#include <vector>

#include "nr/complex_matrix.hpp"
#include "nr/numerical_range.hpp"

namespace nr::tools {

// Complex literal of the form `re+imi`, e.g. "0.3", "-0.5i", "0.3-0.4i".
cx parse_complex(const std::string& text);

// Comma-separated list of complex literals.
std::vector<cx> parse_complex_list(const std::string& text);

// Matrix from a JSON file {"n": int, "re": [[...]], "im": [[...]]}.
CMatrix load_matrix_json(const std::string& path);

// CSV with header `gamma,h,x,y`, one row per sample, %.17g fields
// (byte-stable and lossless for doubles).
void write_samples_csv(const std::string& path, const std::vector<SupportSample>& samples);

// The same schema for a polygon: support values over a uniform gamma grid
// with the attaining vertex as (x, y).
std::vector<SupportSample> polygon_samples(const ConvexPolygon& poly, int count);

std::string format_complex(cx z);

} // namespace nr::tools

#endif
