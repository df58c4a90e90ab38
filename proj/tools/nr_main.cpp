#include <cstdio>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nr/bidisk.hpp"
#include "nr/blaschke.hpp"
#include "nr/envelope.hpp"
#include "nr/errors.hpp"
#include "nr/hermitian_eigen.hpp"
#include "nr/numerical_range.hpp"
#include "nr/polynomial.hpp"
#include "svg.hpp"
#include "text_io.hpp"

namespace {

using namespace nr;
using tools::SvgCanvas;

constexpr double two_pi = 2.0 * std::numbers::pi;

// splitmix64, for the seeded randomized commands
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    double next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * next(); }
    cx box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
};

double polygon_max_abs(const ConvexPolygon& poly) {
    double r = 0.0;
    for (const cx& v : poly.vertices()) r = std::max(r, std::abs(v));
    return r;
}

void maybe_write_csv(const std::string& path, const std::vector<SupportSample>& samples) {
    if (!path.empty()) tools::write_samples_csv(path, samples);
}

int run_matrix(const std::string& input, int samples, double tol, const std::string& csv,
               const std::string& svg) {
    const CMatrix a = tools::load_matrix_json(input);
    const NumericalRangeApprox range = numerical_range(a, samples);
    const BoundingRectangle rect = bounding_rectangle(a);

    std::printf("n: %d\n", a.dim());
    std::printf("samples: %d\n", samples);
    std::printf("numerical radius: %.12g\n", numerical_radius(a, samples));
    std::printf("bounding rectangle: [%.12g, %.12g] x [%.12g, %.12g]\n", rect.re_min,
                rect.re_max, rect.im_min, rect.im_max);
    std::printf("inner-outer Hausdorff: %.6g\n",
                hausdorff_distance(range.inner, range.outer));

    bool sandwich = true;
    for (const SupportSample& s : range.samples)
        if (range.inner.support(s.gamma) > s.h + tol) sandwich = false;
    std::printf("inner within outer (tol %.3g): %s\n", tol, sandwich ? "yes" : "NO");

    maybe_write_csv(csv, range.samples);
    if (!svg.empty()) {
        SvgCanvas canvas;
        canvas.polygon(range.outer.vertices(), "#bbbbbb");
        canvas.polygon(range.inner.vertices(), "#1f5fbf", 1.5, "#1f5fbf", 0.15);
        canvas.write(svg);
    }
    return 0;
}

int run_blaschke(const std::string& zeros_text, int samples, int overlay,
                 const std::string& csv, const std::string& svg) {
    const std::vector<cx> zeros = tools::parse_complex_list(zeros_text);
    const CMatrix sb = sb_matrix(zeros);
    const NumericalRangeApprox range = numerical_range(sb, samples);

    std::printf("degree: %d\n", static_cast<int>(zeros.size()));
    std::printf("samples: %d\n", samples);
    std::printf("numerical radius: %.12g\n", numerical_radius(sb, samples));
    if (zeros.size() == 2) {
        const Ellipse e = elliptical_range(sb);
        std::printf("foci: %s, %s\n", tools::format_complex(e.focus1).c_str(),
                    tools::format_complex(e.focus2).c_str());
        std::printf("minor axis: %.12g\n", e.minor_axis);
    }

    maybe_write_csv(csv, range.samples);
    if (!svg.empty()) {
        SvgCanvas canvas;
        canvas.unit_circle();
        for (int k = 0; k < overlay; ++k) {
            const ConvexPolygon gon =
                poncelet_polygon(zeros, std::polar(1.0, two_pi * k / overlay));
            canvas.polygon(gon.vertices(), "#cc7722", 0.8);
        }
        canvas.polygon(range.inner.vertices(), "#1f5fbf", 1.5, "#1f5fbf", 0.15);
        canvas.write(svg);
    }
    return 0;
}

int run_dilation(const std::string& zeros_text, const std::string& lambda_text, int samples,
                 const std::string& csv, const std::string& svg) {
    const std::vector<cx> zeros = tools::parse_complex_list(zeros_text);
    const cx lambda = tools::parse_complex(lambda_text);
    const UnitaryDilation dil = unitary_dilation(zeros, lambda);
    const std::vector<cx> eigs = dilation_eigenvalues(zeros, lambda);

    const int n1 = dil.matrix.dim();
    std::printf("dimension: %d\n", n1);
    std::printf("unitarity defect: %.6g\n",
                (dil.matrix.adjoint() * dil.matrix - CMatrix::identity(n1)).frobenius_norm());
    const BlaschkeProduct b{std::vector<cx>(zeros)};
    double max_residual = 0.0;
    for (const cx& mu : eigs) {
        max_residual = std::max(max_residual, std::abs(mu * blaschke_eval(b, mu) - lambda));
        std::printf("eigenvalue: %s\n", tools::format_complex(mu).c_str());
    }
    std::printf("max eigenvalue residual: %.6g\n", max_residual);

    const ConvexPolygon gon = ConvexPolygon::hull(eigs);
    maybe_write_csv(csv, tools::polygon_samples(gon, samples));
    if (!svg.empty()) {
        SvgCanvas canvas;
        canvas.unit_circle();
        canvas.polygon(gon.vertices(), "#1f5fbf", 1.5, "#1f5fbf", 0.12);
        for (const cx& mu : eigs) canvas.dot(mu, 4.0, "#cc2222");
        canvas.write(svg);
    }
    return 0;
}

int run_poncelet(const std::string& zeros_text, int lambda_count, int samples, double tol,
                 const std::string& csv, const std::string& svg) {
    const std::vector<cx> zeros = tools::parse_complex_list(zeros_text);
    const ConvexPolygon inter = numrange_via_dilations(zeros, lambda_count);
    const NumericalRangeApprox direct = numerical_range(sb_matrix(zeros), samples);

    std::printf("degree: %d\n", static_cast<int>(zeros.size()));
    std::printf("lambda count: %d\n", lambda_count);
    std::printf("Hausdorff(intersection, direct): %.6g\n",
                hausdorff_distance(inter, direct.inner));
    double min_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const double gamma = two_pi * k / samples;
        min_gap = std::min(min_gap, inter.support(gamma) - direct.inner.support(gamma));
    }
    std::printf("min support gap: %.6g\n", min_gap);
    std::printf("contains direct range (tol %.3g): %s\n", tol,
                min_gap >= -tol ? "yes" : "NO");

    maybe_write_csv(csv, tools::polygon_samples(inter, samples));
    if (!svg.empty()) {
        SvgCanvas canvas;
        canvas.unit_circle();
        for (int k = 0; k < 12; ++k) {
            const ConvexPolygon gon = poncelet_polygon(zeros, std::polar(1.0, two_pi * k / 12));
            canvas.polygon(gon.vertices(), "#cc7722", 0.8);
        }
        canvas.polygon(inter.vertices(), "#1f5fbf", 1.5, "#1f5fbf", 0.15);
        canvas.polygon(direct.inner.vertices(), "#22aa55", 1.0);
        canvas.write(svg);
    }
    return 0;
}

int run_envelope(double m, int samples, const std::string& csv, const std::string& svg) {
    const CurveFamily fam = circle_family(m);
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(samples) + 1);
    for (int k = 0; k <= samples; ++k) grid.push_back(static_cast<double>(k) / samples);
    const std::vector<EnvelopePoint> env = discriminant_envelope(fam, grid);

    double worst_f = 0.0, worst_ellipse = 0.0, worst_match = 0.0;
    int isolated = 0;
    for (const EnvelopePoint& e : env) {
        worst_f = std::max({worst_f, std::abs(family_F(m, e.x, e.y, e.t)),
                            std::abs(family_Ft(m, e.x, e.y, e.t))});
        if (e.isolated) { // e.g. the point (1,0): in the discriminant set, off the ellipse
            ++isolated;
            continue;
        }
        worst_ellipse = std::max(worst_ellipse, verify_on_ellipse(e.x, e.y, m));
        double best = std::numeric_limits<double>::infinity();
        for (const EnvelopePoint& c : ert_envelope(m, e.t))
            best = std::min(best, std::hypot(c.x - e.x, c.y - e.y));
        if (std::isfinite(best)) worst_match = std::max(worst_match, best);
    }
    std::printf("m: %.12g\n", m);
    std::printf("envelope points: %zu (%d isolated)\n", env.size(), isolated);
    std::printf("max |F|,|F_t| residual: %.6g\n", worst_f);
    std::printf("max ellipse-identity residual: %.6g\n", worst_ellipse);
    std::printf("max closed-form mismatch: %.6g\n", worst_match);

    if (!csv.empty()) {
        std::vector<SupportSample> rows;
        rows.reserve(env.size());
        for (const EnvelopePoint& e : env)
            rows.push_back({e.t, verify_on_ellipse(e.x, e.y, m), cx(e.x, e.y)});
        tools::write_samples_csv(csv, rows);
    }
    if (!svg.empty()) {
        SvgCanvas canvas;
        for (int k = 1; k < 40; ++k) {
            const double t = static_cast<double>(k) / 40.0;
            canvas.circle(cx(1.0 - t * t, 0.0), m * t * std::sqrt(1.0 - t * t), "#cccccc", 0.6);
        }
        const Ellipse e{cx(0.0), cx(1.0), m};
        canvas.polygon(e.boundary_polygon(256).vertices(), "#22aa55");
        for (const EnvelopePoint& p : env) canvas.dot(cx(p.x, p.y), 1.5, "#1f5fbf");
        canvas.write(svg);
    }
    return 0;
}

int run_bidisk(double a, double c, bool fixture, int tau_count, int samples,
               const std::string& csv, const std::string& svg) {
    RationalInnerFunction theta = fixture ? product_rif_22() : [&] {
        const RationalInnerFunction t1 = linear_rif(a, c);
        return t1 * t1;
    }();

    const BidiskRange range = bidisk_numrange(theta, tau_count, samples);
    std::printf("degree: (%d, %d)\n", theta.deg1(), theta.deg2());
    std::printf("tau grid: %d (used %d, excluded %d)\n", tau_count, range.used, range.excluded);
    std::printf("numerical radius: %.12g\n", polygon_max_abs(range.hull));

    ConvexPolygon reference;
    if (fixture) {
        reference = bidisk_numrange_via_mtheta(tau_count, samples);
        std::printf("Hausdorff(slice hull, symbol hull): %.6g\n",
                    hausdorff_distance(range.hull, reference));
    } else {
        std::vector<cx> curve;
        curve.reserve(720);
        for (int k = 0; k < 720; ++k) {
            const auto [x, y] = boundary_curve(a, c, two_pi * k / 720);
            curve.emplace_back(x, y);
        }
        reference = ConvexPolygon::hull(curve);
        std::printf("Hausdorff(slice hull, boundary curve): %.6g\n",
                    hausdorff_distance(range.hull, reference));
    }

    maybe_write_csv(csv, tools::polygon_samples(range.hull, samples));
    if (!svg.empty()) {
        SvgCanvas canvas;
        canvas.unit_circle();
        const int shown = std::min(tau_count, 72);
        for (int k = 0; k < shown; ++k) {
            const cx tau = std::polar(1.0, two_pi * k / shown);
            const SliceResult slice = slice_blaschke(theta, tau);
            if (slice.excluded) continue;
            const CMatrix sb = sb_matrix(slice.blaschke->zeros());
            if (sb.dim() == 2) {
                canvas.polygon(elliptical_range(sb).boundary_polygon(128).vertices(),
                               "#cccccc", 0.6);
            } else {
                canvas.polygon(numerical_range(sb, 128).inner.vertices(), "#cccccc", 0.6);
            }
        }
        canvas.polygon(range.hull.vertices(), "#1f5fbf", 1.5);
        canvas.polygon(reference.vertices(), "#22aa55", 0.8);
        canvas.write(svg);
    }
    return 0;
}

int run_crouzeix(const std::string& input, const std::string& poly_text, int random_count,
                 std::uint64_t seed, int max_degree, int max_dim, int samples, double tol,
                 const std::string& csv) {
    const double bound = 1.0 + std::sqrt(2.0);
    if (random_count > 0) {
        Rng rng(seed);
        double worst = 0.0;
        int worst_case = -1, violations = 0;
        for (int case_idx = 0; case_idx < random_count; ++case_idx) {
            const int n = 2 + static_cast<int>(rng.next() * (max_dim - 1));
            std::vector<cx> entries;
            entries.reserve(static_cast<std::size_t>(n) * n);
            for (int k = 0; k < n * n; ++k) entries.push_back(rng.box());
            const CMatrix a(n, std::move(entries));
            const int deg = 1 + static_cast<int>(rng.next() * max_degree);
            std::vector<cx> coeffs;
            for (int k = 0; k <= deg; ++k) coeffs.push_back(rng.box());
            const double ratio = crouzeix_ratio(Polynomial{std::move(coeffs)}, a, samples);
            if (ratio > worst) {
                worst = ratio;
                worst_case = case_idx;
            }
            if (ratio > bound + tol) ++violations;
        }
        std::printf("cases: %d\n", random_count);
        std::printf("max ratio: %.12g (case %d)\n", worst, worst_case);
        std::printf("bound 1+sqrt(2): %.12g\n", bound);
        std::printf("violations: %d\n", violations);
        return 0;
    }

    const CMatrix a = tools::load_matrix_json(input);
    const Polynomial p{tools::parse_complex_list(poly_text)};
    if (p.degree() < 1) throw input_error("polynomial must be nonconstant");
    const double ratio = crouzeix_ratio(p, a, samples);
    std::printf("||p(A)||: %.12g\n", operator_norm(mat_poly_eval(p, a)));
    std::printf("ratio: %.12g\n", ratio);
    std::printf("within 1+sqrt(2) (tol %.3g): %s\n", tol, ratio <= bound + tol ? "yes" : "NO");
    if (!csv.empty())
        tools::write_samples_csv(csv, numerical_range(a, samples).samples);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical ranges of matrices and compressed shifts"};
    app.require_subcommand(1);

    std::string input, zeros_text, lambda_text = "1", poly_text, csv, svg;
    int samples = 720, lambda_count = 360, tau_count = 360, overlay = 12;
    int random_count = 0, max_degree = 8, max_dim = 6;
    double tol = 1e-9, m_param = 1.0, a_param = 2.0, c_param = 1.0;
    std::uint64_t seed = 1;
    bool fixture = false;

    auto add_common = [&](CLI::App* cmd, bool with_samples = true) {
        if (with_samples) cmd->add_option("--samples", samples, "gamma grid size");
        cmd->add_option("--tol", tol, "validation tolerance");
        cmd->add_option("--csv", csv, "write per-sample CSV (gamma,h,x,y)");
        cmd->add_option("--svg", svg, "write SVG figure");
    };

    CLI::App* matrix = app.add_subcommand("matrix", "numerical range of a matrix");
    matrix->add_option("--input", input, "matrix JSON file")->required();
    add_common(matrix);

    CLI::App* blaschke = app.add_subcommand("blaschke", "numerical range of a compressed shift");
    blaschke->add_option("--zeros", zeros_text, "Blaschke zeros, e.g. 0.3,0.4i")->required();
    blaschke->add_option("--overlay", overlay, "inscribed polygons to draw");
    add_common(blaschke);

    CLI::App* dilation = app.add_subcommand("dilation", "unitary 1-dilation and its spectrum");
    dilation->add_option("--zeros", zeros_text, "Blaschke zeros")->required();
    dilation->add_option("--lambda", lambda_text, "unimodular parameter");
    add_common(dilation);

    CLI::App* poncelet =
        app.add_subcommand("poncelet", "numerical range as an intersection of polygons");
    poncelet->add_option("--zeros", zeros_text, "Blaschke zeros")->required();
    poncelet->add_option("--lambda-count", lambda_count, "size of the lambda grid");
    add_common(poncelet);

    CLI::App* envelope = app.add_subcommand("envelope", "discriminant envelope of circles");
    envelope->add_option("--m", m_param, "circle family parameter");
    add_common(envelope);

    CLI::App* bidisk = app.add_subcommand("bidisk", "two-variable slice numerical range");
    bidisk->add_option("--a", a_param, "denominator coefficient a");
    bidisk->add_option("--c", c_param, "denominator coefficient c");
    bidisk->add_flag("--fixture", fixture, "use the built-in degree (2,2) product");
    bidisk->add_option("--tau-count,--tau", tau_count, "size of the tau grid");
    add_common(bidisk);

    CLI::App* crouzeix = app.add_subcommand("crouzeix", "polynomial norm ratio on W(A)");
    crouzeix->add_option("--input", input, "matrix JSON file");
    crouzeix->add_option("--poly", poly_text, "polynomial coefficients, ascending");
    crouzeix->add_option("--random", random_count, "run seeded random cases");
    crouzeix->add_option("--seed", seed, "seed for --random");
    crouzeix->add_option("--max-degree", max_degree, "max polynomial degree for --random");
    crouzeix->add_option("--max-dim", max_dim, "max matrix dimension for --random");
    add_common(crouzeix);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (matrix->parsed()) return run_matrix(input, samples, tol, csv, svg);
        if (blaschke->parsed()) return run_blaschke(zeros_text, samples, overlay, csv, svg);
        if (dilation->parsed()) return run_dilation(zeros_text, lambda_text, samples, csv, svg);
        if (poncelet->parsed())
            return run_poncelet(zeros_text, lambda_count, samples, tol, csv, svg);
        if (envelope->parsed()) return run_envelope(m_param, samples, csv, svg);
        if (bidisk->parsed())
            return run_bidisk(a_param, c_param, fixture, tau_count, samples, csv, svg);
        if (crouzeix->parsed())
            return run_crouzeix(input, poly_text, random_count, seed, max_degree, max_dim,
                                samples, tol, csv);
    } catch (const nr::input_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const nr::numerical_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 2;
}
