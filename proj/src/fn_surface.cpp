#include "realsurf/fn_surface.hpp"

#include <cmath>

#include "realsurf/errors.hpp"

namespace realsurf {

ValidationReport validate(const FNSurface& surface) {
    ValidationReport report = validate(surface.graph);
    const int E = surface.graph.edge_count();
    if (static_cast<int>(surface.length.size()) != E)
        report.issues.push_back("length count " + std::to_string(surface.length.size()) +
                                " does not match edge count " + std::to_string(E));
    if (static_cast<int>(surface.twist.size()) != E)
        report.issues.push_back("twist count " + std::to_string(surface.twist.size()) +
                                " does not match edge count " + std::to_string(E));
    for (std::size_t e = 0; e < surface.length.size(); ++e) {
        const double l = surface.length[e];
        if (!std::isfinite(l) || l < kMinLength || l > kMaxLength)
            report.issues.push_back("edge " + std::to_string(e) + " length " + std::to_string(l) +
                                    " outside [" + std::to_string(kMinLength) + ", " +
                                    std::to_string(kMaxLength) + "]");
    }
    for (std::size_t e = 0; e < surface.twist.size(); ++e) {
        if (surface.twist[e] != surface.twist[e].mod1())
            report.issues.push_back("edge " + std::to_string(e) + " twist " + surface.twist[e].str() +
                                    " not normalized into [0,1)");
    }
    return report;
}

static void require_valid(const FNSurface& surface) {
    const ValidationReport report = validate(surface);
    if (!report.ok()) throw InvalidSurfaceError("invalid surface: " + report.issues.front());
}

bool is_real(const FNSurface& surface) {
    require_valid(surface);
    for (const Rational& t : surface.twist)
        if (!t.is_zero_or_half()) return false;
    return true;
}

double pants_seam_length(double opposite, double adjacent1, double adjacent2) {
    const double k = opposite / 2.0, i = adjacent1 / 2.0, j = adjacent2 / 2.0;
    // cosh(s) - 1 = (cosh k + cosh(i-j)) / (sinh i sinh j), since
    // cosh i cosh j - sinh i sinh j = cosh(i - j). acosh(1+u) via log1p keeps
    // full precision for both tiny and huge seams.
    const double u = (std::cosh(k) + std::cosh(i - j)) / (std::sinh(i) * std::sinh(j));
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

SeamSet seam_set(const FNSurface& surface) {
    require_valid(surface);
    SeamSet seams;
    seams.pants.resize(surface.graph.vertex_count);
    for (int v = 0; v < surface.graph.vertex_count; ++v) {
        auto& p = seams.pants[v];
        for (int s = 0; s < 3; ++s) {
            const PantsGraph::Slot slot = surface.graph.at(v, s);
            p.boundary_length[s] = surface.length[slot.edge];
        }
        for (int k = 0; k < 3; ++k)
            p.seam_length[k] = pants_seam_length(p.boundary_length[k], p.boundary_length[(k + 1) % 3],
                                                 p.boundary_length[(k + 2) % 3]);
    }
    return seams;
}

double SeamSet::total_seam_length() const {
    double total = 0.0;
    for (const auto& p : pants) total += p.seam_length[0] + p.seam_length[1] + p.seam_length[2];
    return total;
}

}  // namespace realsurf
