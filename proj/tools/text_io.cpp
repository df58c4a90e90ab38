#include "text_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "nr/errors.hpp"

namespace nr::tools {

namespace {

double parse_double(const std::string& text) {
    if (text.empty()) throw input_error("empty number in complex literal");
    if (text == "+") return 1.0;
    if (text == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw input_error("cannot parse number '" + text + "'");
    }
    if (used != text.size()) throw input_error("trailing characters in number '" + text + "'");
    return v;
}

} // namespace

cx parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw input_error("empty complex literal");

    if (s.back() != 'i' && s.back() != 'I') return {parse_double(s), 0.0};

    s.pop_back(); // drop the i
    if (s.empty()) return {0.0, 1.0};
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_double(s)};
    return {parse_double(s.substr(0, split)), parse_double(s.substr(split))};
}

std::vector<cx> parse_complex_list(const std::string& text) {
    std::vector<cx> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    if (out.empty()) throw input_error("empty list of complex values");
    return out;
}

CMatrix load_matrix_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open matrix file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in '" + path + "': " + e.what());
    }
    if (!j.contains("n") || !j.contains("re") || !j.contains("im"))
        throw input_error("matrix JSON requires fields n, re, im");
    const int n = j.at("n").get<int>();
    if (n < 1) throw input_error("matrix dimension must be positive");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
        throw input_error("matrix row count does not match n");
    std::vector<cx> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const auto& rrow = re.at(i);
        const auto& irow = im.at(i);
        if (static_cast<int>(rrow.size()) != n || static_cast<int>(irow.size()) != n)
            throw input_error("matrix column count does not match n");
        for (int k = 0; k < n; ++k)
            entries.emplace_back(rrow.at(k).get<double>(), irow.at(k).get<double>());
    }
    return CMatrix(n, std::move(entries));
}

void write_samples_csv(const std::string& path, const std::vector<SupportSample>& samples) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw input_error("cannot open '" + path + "' for writing");
    std::fputs("gamma,h,x,y\n", f);
    for (const SupportSample& s : samples)
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", s.gamma, s.h, s.boundary_point.real(),
                     s.boundary_point.imag());
    std::fclose(f);
}

std::vector<SupportSample> polygon_samples(const ConvexPolygon& poly, int count) {
    std::vector<SupportSample> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double gamma = 2.0 * std::numbers::pi * k / count;
        out.push_back({gamma, poly.support(gamma), poly.support_point(gamma)});
    }
    return out;
}

std::string format_complex(cx z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

} // namespace nr::tools
