#include "q2d2/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace q2d2 {

namespace {

constexpr int kMinLevels = 2;
constexpr int kMaxLevels = 255;

void check_levels(int l, const char* axis) {
    if (l < kMinLevels || l > kMaxLevels) {
        throw std::invalid_argument(std::string("pair grid: level count on ") + axis +
                                    " axis must be in [2, 255], got " + std::to_string(l));
    }
}

// Coordinates are always formed as index*spacing - offset from exact integer
// indices; never by repeated addition. This keeps point lists bit-identical
// across platforms and build modes.
double coord(int index, double spacing, double offset) {
    return static_cast<double>(index) * spacing - offset;
}

void check_no_duplicates(const std::vector<GridPoint>& pts, const char* kind) {
    std::vector<GridPoint> sorted = pts;
    std::sort(sorted.begin(), sorted.end(), [](const GridPoint& a, const GridPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].x == sorted[i - 1].x && sorted[i].y == sorted[i - 1].y) {
            throw std::invalid_argument(std::string("pair grid: ") + kind +
                                        " construction produced coincident points");
        }
    }
}

}  // namespace

const char* to_string(TilingKind kind) {
    switch (kind) {
        case TilingKind::Rectangle: return "rectangle";
        case TilingKind::Hexagon: return "hexagon";
        case TilingKind::Rhombic: return "rhombic";
    }
    return "?";
}

TilingKind tiling_from_string(const std::string& name) {
    if (name == "rect" || name == "rectangle") return TilingKind::Rectangle;
    if (name == "hex" || name == "hexagon") return TilingKind::Hexagon;
    if (name == "rhombic" || name == "rhombus") return TilingKind::Rhombic;
    throw std::invalid_argument("unknown tiling kind: '" + name +
                                "' (expected rect, hex, or rhombic)");
}

double spread_from_levels(int levels) {
    if (levels < kMinLevels) {
        throw std::invalid_argument("spread_from_levels: level count must be >= 2, got " +
                                    std::to_string(levels));
    }
    return static_cast<double>(levels - 1) / 2.0;
}

PairGridSpec PairGridSpec::from_levels(TilingKind kind, int lx, int ly) {
    PairGridSpec spec;
    spec.kind = kind;
    spec.lx = lx;
    spec.ly = ly;
    spec.ex = spread_from_levels(lx);
    spec.ey = spread_from_levels(ly);
    spec.validate();
    return spec;
}

void PairGridSpec::validate() const {
    check_levels(lx, "x");
    check_levels(ly, "y");
    if (!std::isfinite(ex) || !std::isfinite(ey) || ex <= 0.0 || ey <= 0.0) {
        throw std::invalid_argument("pair grid: spread factors must be finite and positive");
    }
    if (kind == TilingKind::Hexagon && (lx != ly || ex != ey)) {
        throw std::invalid_argument(
            "pair grid: hexagon tiling takes a single level count and spread (lx == ly, ex == ey)");
    }
}

PairGrid::PairGrid(PairGridSpec spec, std::vector<GridPoint> points, double dx, double dy)
    : spec_(spec), points_(std::move(points)), dx_(dx), dy_(dy) {
    xs_.reserve(points_.size());
    ys_.reserve(points_.size());
    for (const GridPoint& p : points_) {
        xs_.push_back(p.x);
        ys_.push_back(p.y);
    }
}

PairGrid build_rectangle(const PairGridSpec& spec) {
    spec.validate();
    if (spec.kind != TilingKind::Rectangle) {
        throw std::invalid_argument("build_rectangle: spec kind is not Rectangle");
    }
    const double dx = 2.0 * spec.ex / static_cast<double>(spec.lx - 1);
    const double dy = 2.0 * spec.ey / static_cast<double>(spec.ly - 1);

    std::vector<GridPoint> pts;
    pts.reserve(static_cast<std::size_t>(spec.lx) * spec.ly);
    for (int iy = 0; iy < spec.ly; ++iy) {
        const double y = coord(iy, dy, spec.ey);
        for (int ix = 0; ix < spec.lx; ++ix) {
            pts.push_back({coord(ix, dx, spec.ex), y});
        }
    }
    check_no_duplicates(pts, "rectangle");
    return PairGrid(spec, std::move(pts), dx, dy);
}

PairGrid build_hexagon(const PairGridSpec& spec) {
    spec.validate();
    if (spec.kind != TilingKind::Hexagon) {
        throw std::invalid_argument("build_hexagon: spec kind is not Hexagon");
    }
    const int l = spec.lx;
    const double e = spec.ex;
    const double dx = 2.0 * e / static_cast<double>(l - 1);
    const double dy = dx * (std::sqrt(3.0) / 2.0);

    // Rows sit at multiples of dy centered on the origin. Using the nominal
    // [-e, e] extent for y would space rows dx apart and break the
    // six-equidistant-neighbors property, so the geometric row spacing wins.
    const double half = static_cast<double>(l - 1) / 2.0;
    const double quarter = dx / 4.0;

    std::vector<GridPoint> pts;
    pts.reserve(static_cast<std::size_t>(l) * l);
    for (int iy = 0; iy < l; ++iy) {
        const double y = (static_cast<double>(iy) - half) * dy;
        const double x_offset = (iy % 2 == 0) ? quarter : -quarter;
        for (int ix = 0; ix < l; ++ix) {
            pts.push_back({coord(ix, dx, e) + x_offset, y});
        }
    }
    check_no_duplicates(pts, "hexagon");
    return PairGrid(spec, std::move(pts), dx, dy);
}

PairGrid build_rhombic(const PairGridSpec& spec) {
    spec.validate();
    if (spec.kind != TilingKind::Rhombic) {
        throw std::invalid_argument("build_rhombic: spec kind is not Rhombic");
    }
    const double dx = 2.0 * spec.ex / static_cast<double>(spec.lx - 1);
    const double dy = 2.0 * spec.ey / static_cast<double>(spec.ly - 1);
    const std::size_t base = static_cast<std::size_t>(spec.lx) * spec.ly;

    std::vector<GridPoint> pts;
    pts.reserve(2 * base);
    for (int iy = 0; iy < spec.ly; ++iy) {
        const double y = coord(iy, dy, spec.ey);
        for (int ix = 0; ix < spec.lx; ++ix) {
            pts.push_back({coord(ix, dx, spec.ex), y});
        }
    }
    // Midpoint lattice: the base lattice translated by half a cell. Rows past
    // the base extent are kept so the point count stays at exactly 2*lx*ly.
    const double hx = dx / 2.0;
    const double hy = dy / 2.0;
    for (std::size_t i = 0; i < base; ++i) {
        pts.push_back({pts[i].x + hx, pts[i].y + hy});
    }
    check_no_duplicates(pts, "rhombic");
    return PairGrid(spec, std::move(pts), dx, dy);
}

PairGrid build_grid(const PairGridSpec& spec) {
    switch (spec.kind) {
        case TilingKind::Rectangle: return build_rectangle(spec);
        case TilingKind::Hexagon: return build_hexagon(spec);
        case TilingKind::Rhombic: return build_rhombic(spec);
    }
    throw std::invalid_argument("build_grid: unknown tiling kind");
}

}  // namespace q2d2
