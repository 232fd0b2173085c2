// Lattice atlas of a quadratic ring: classify every point of a rectangular
// region in tau-coordinates (unit / prime / ideal class / other) and render
// the result as deterministic SVG or plain text. Square grid for even
// discriminants, staggered (near-equilateral) grid for odd ones.
#pragma once

#include "quadprime/character.hpp"
#include "quadprime/field.hpp"
#include "quadprime/ideals.hpp"
#include "quadprime/sieve.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace quadprime {

/// Inclusive bounds in tau-coordinates.
struct Region {
    int64_t x_min = 0;
    int64_t x_max = 0;
    int64_t y_min = 0;
    int64_t y_max = 0;
};

enum class PointClass { Unit, Prime, IdealClassI, IdealClassConjI, Other };

struct RenderConfig {
    double cell_size = 16.0;
    std::string unit_color = "#1f77b4";
    std::string prime_color = "#000000";
    std::string ideal_color = "#d62728";      // class of I, red
    std::string conj_ideal_color = "#2ca02c"; // conjugate class, green
    std::string other_color = "#cccccc";
    bool show_character_row = true;
    int64_t character_row_width = 40;
};

namespace detail {

inline void require_region(const Region& rg) {
    if (rg.x_min > rg.x_max || rg.y_min > rg.y_max)
        throw std::domain_error("region bounds out of order");
}

} // namespace detail

/// Class of one lattice point. An element is prime exactly when its norm is
/// a prime-ideal norm: the product members of T are never element norms, and
/// a norm p^2 in T forces the element to be an associate of the inert prime
/// p, hence prime. Zero is Other; everything else needs N(z) <= T.max.
inline PointClass classify_point(const FieldParams& f, const NormSet& T,
                                 const std::optional<IdealSpec>& I, RingElement z) {
    if (z.x == 0 && z.y == 0) return PointClass::Other;
    const int64_t n = norm(f, z);
    if (n == 1) return PointClass::Unit;
    if (is_prime_norm(T, n)) return PointClass::Prime;
    if (I) {
        switch (ideal_display_class(f, *I, T, z)) {
        case IdealClass::ClassI: return PointClass::IdealClassI;
        case IdealClass::ClassConjI: return PointClass::IdealClassConjI;
        case IdealClass::None: break;
        }
    }
    return PointClass::Other;
}

/// Exact maximum of the norm over the region. Per row the form is a convex
/// parabola in x, so |form| peaks at the row ends or at the clamped vertex
/// (x = 0 for the whole basis, x = -y/2 for the half basis).
inline int64_t region_max_norm(const FieldParams& f, const Region& rg) {
    detail::require_region(rg);
    int64_t best = 0;
    auto consider = [&](int64_t x, int64_t y) {
        best = std::max(best, norm(f, RingElement{x, y}));
    };
    for (int64_t y = rg.y_min; y <= rg.y_max; ++y) {
        consider(rg.x_min, y);
        consider(rg.x_max, y);
        const int64_t vertex_lo = f.half_basis ? -(y + (y > 0 ? 1 : 0)) / 2 : 0;
        for (int64_t x : {vertex_lo, vertex_lo + 1}) {
            const int64_t cx = std::clamp(x, rg.x_min, rg.x_max);
            consider(cx, y);
        }
    }
    return best;
}

/// Every lattice point of the region with its class, row-major: y ascending
/// outer, x ascending inner. T must cover region_max_norm(f, region).
inline std::vector<std::pair<RingElement, PointClass>>
enumerate_atlas(const FieldParams& f, const Region& rg, const NormSet& T,
                const std::optional<IdealSpec>& I = std::nullopt) {
    detail::require_region(rg);
    std::vector<std::pair<RingElement, PointClass>> out;
    for (int64_t y = rg.y_min; y <= rg.y_max; ++y)
        for (int64_t x = rg.x_min; x <= rg.x_max; ++x) {
            const RingElement z{x, y};
            out.emplace_back(z, classify_point(f, T, I, z));
        }
    return out;
}

namespace detail {

inline std::string fmt(double v) {
    if (v == 0) v = 0; // avoid "-0.000"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace detail

/// Plain-text grid: one character per point ('U' unit, 'P' prime, 'I'/'J'
/// the ideal classes, '.' other), rows from y_max down to y_min. For odd
/// discriminants cells are two columns wide and odd rows are indented one
/// column, the half-cell stagger of the triangular grid.
inline std::string render_text(const std::vector<std::pair<RingElement, PointClass>>& atlas,
                               const FieldParams& f) {
    if (atlas.empty()) return "";
    int64_t x_min = atlas.front().first.x, x_max = x_min;
    int64_t y_min = atlas.front().first.y, y_max = y_min;
    for (const auto& [z, cls] : atlas) {
        x_min = std::min(x_min, z.x);
        x_max = std::max(x_max, z.x);
        y_min = std::min(y_min, z.y);
        y_max = std::max(y_max, z.y);
    }
    const int64_t width = x_max - x_min + 1;
    const int64_t height = y_max - y_min + 1;
    std::vector<std::string> grid(static_cast<std::size_t>(height),
                                  std::string(static_cast<std::size_t>(width), '.'));
    auto glyph = [](PointClass c) {
        switch (c) {
        case PointClass::Unit: return 'U';
        case PointClass::Prime: return 'P';
        case PointClass::IdealClassI: return 'I';
        case PointClass::IdealClassConjI: return 'J';
        case PointClass::Other: return '.';
        }
        return '.';
    };
    for (const auto& [z, cls] : atlas)
        grid[static_cast<std::size_t>(z.y - y_min)][static_cast<std::size_t>(z.x - x_min)] =
            glyph(cls);

    const bool staggered = f.half_basis;
    std::string out;
    for (int64_t y = y_max; y >= y_min; --y) {
        const std::string& row = grid[static_cast<std::size_t>(y - y_min)];
        if (staggered) {
            if (mod_floor(y, 2) == 1) out += ' ';
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i > 0) out += ' ';
                out += row[i];
            }
        } else {
            out += row;
        }
        out += '\n';
    }
    return out;
}

/// SVG 1.1 document. Point (x, y) plots at (x, y) on a square grid for
/// d = 0 (mod 4) and at (x + y/2, y*sqrt(3)/2) on the staggered grid for odd
/// d, with the y-axis representing multiples of sqrt(r). Byte-deterministic
/// for identical inputs.
inline std::string render_svg(const std::vector<std::pair<RingElement, PointClass>>& atlas,
                              const FieldParams& f, const RenderConfig& cfg) {
    const bool staggered = f.half_basis;
    const double sqrt3_2 = 0.8660254037844386;
    auto plot_x = [&](RingElement z) {
        return staggered ? static_cast<double>(z.x) + 0.5 * static_cast<double>(z.y)
                         : static_cast<double>(z.x);
    };
    auto plot_y = [&](RingElement z) {
        return staggered ? sqrt3_2 * static_cast<double>(z.y) : static_cast<double>(z.y);
    };

    double px_min = 0, px_max = 0, py_min = 0, py_max = 0;
    bool first = true;
    for (const auto& [z, cls] : atlas) {
        const double px = plot_x(z), py = plot_y(z);
        if (first) {
            px_min = px_max = px;
            py_min = py_max = py;
            first = false;
        } else {
            px_min = std::min(px_min, px);
            px_max = std::max(px_max, px);
            py_min = std::min(py_min, py);
            py_max = std::max(py_max, py);
        }
    }

    const double cell = cfg.cell_size;
    const double margin = 1.5 * cell;
    const double header_h = (cfg.show_character_row ? 2.6 : 1.6) * cell;
    const double width = (px_max - px_min) * cell + 2 * margin;
    const double height = (py_max - py_min) * cell + 2 * margin + header_h;
    auto X = [&](double px) { return margin + (px - px_min) * cell; };
    auto Y = [&](double py) { return header_h + margin + (py_max - py) * cell; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << detail::fmt(width) << "\" height=\"" << detail::fmt(height) << "\">\n";
    svg << "<title>Q(√" << f.r << ")</title>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << detail::fmt(width) << "\" height=\""
        << detail::fmt(height) << "\" fill=\"#ffffff\"/>\n";

    const double font = 0.9 * cell;
    svg << "<text x=\"" << detail::fmt(margin) << "\" y=\"" << detail::fmt(1.1 * cell)
        << "\" font-family=\"monospace\" font-size=\"" << detail::fmt(font)
        << "\">Q(√" << f.r << "), d = " << f.d << "</text>\n";
    if (cfg.show_character_row) {
        const CharacterTable t = build_character(f);
        svg << "<text x=\"" << detail::fmt(margin) << "\" y=\"" << detail::fmt(2.2 * cell)
            << "\" font-family=\"monospace\" font-size=\"" << detail::fmt(font)
            << "\">χ = " << character_row(t, cfg.character_row_width) << "</text>\n";
    }

    // axes: the rational line y = 0 and the sqrt(r) direction x = 0
    if (py_min <= 0 && 0 <= py_max)
        svg << "<line x1=\"" << detail::fmt(X(px_min) - 0.5 * cell) << "\" y1=\""
            << detail::fmt(Y(0)) << "\" x2=\"" << detail::fmt(X(px_max) + 0.5 * cell)
            << "\" y2=\"" << detail::fmt(Y(0))
            << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    if (px_min <= 0 && 0 <= px_max) {
        svg << "<line x1=\"" << detail::fmt(X(0)) << "\" y1=\""
            << detail::fmt(Y(py_max) - 0.5 * cell) << "\" x2=\"" << detail::fmt(X(0))
            << "\" y2=\"" << detail::fmt(Y(py_min) + 0.5 * cell)
            << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << detail::fmt(X(0) + 0.3 * cell) << "\" y=\""
            << detail::fmt(Y(py_max) - 0.2 * cell)
            << "\" font-family=\"monospace\" font-size=\"" << detail::fmt(0.7 * cell)
            << "\" fill=\"#999999\">√" << f.r << "</text>\n";
    }

    for (const auto& [z, cls] : atlas) {
        const char* color;
        double radius;
        switch (cls) {
        case PointClass::Unit: color = cfg.unit_color.c_str(); radius = cell / 3; break;
        case PointClass::Prime: color = cfg.prime_color.c_str(); radius = cell / 3; break;
        case PointClass::IdealClassI: color = cfg.ideal_color.c_str(); radius = cell / 3; break;
        case PointClass::IdealClassConjI:
            color = cfg.conj_ideal_color.c_str();
            radius = cell / 3;
            break;
        default: color = cfg.other_color.c_str(); radius = cell / 10; break;
        }
        svg << "<circle cx=\"" << detail::fmt(X(plot_x(z))) << "\" cy=\""
            << detail::fmt(Y(plot_y(z))) << "\" r=\"" << detail::fmt(radius)
            << "\" fill=\"" << detail::xml_escape(color) << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace quadprime
