#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace q2d2 {

enum class TilingKind : std::uint8_t {
    Rectangle = 0,
    Hexagon = 1,
    Rhombic = 2,
};

const char* to_string(TilingKind kind);

/// Parses "rect"/"rectangle", "hex"/"hexagon", "rhombic"/"rhombus".
/// Throws std::invalid_argument for anything else.
TilingKind tiling_from_string(const std::string& name);

/// Half-width of an axis carrying `levels` quantization values: (levels - 1) / 2.
/// With this spread, adjacent levels are unit distance apart.
double spread_from_levels(int levels);

struct GridPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Construction parameters for one feature pair's tiling.
///
/// Level counts are restricted to [2, 255] per axis so a pair code always
/// fits in 32 bits with room to spare. Hexagon tilings take a single level
/// count and spread: lx == ly and ex == ey are required.
struct PairGridSpec {
    TilingKind kind = TilingKind::Rectangle;
    int lx = 2;          // level count, x axis
    int ly = 2;          // level count, y axis
    double ex = 0.5;     // spread factor, x axis
    double ey = 0.5;     // spread factor, y axis

    /// Spec with spreads derived from the level counts, ex = (lx-1)/2 etc.
    static PairGridSpec from_levels(TilingKind kind, int lx, int ly);

    /// Throws std::invalid_argument if the spec violates its kind's rules.
    void validate() const;
};

/// A realized tiling: an immutable, canonically ordered 2D point set.
///
/// Point order is construction-canonical. Rectangle and Hexagon are listed
/// row-major (y rows outer, x inner). Rhombic lists the base lattice first,
/// then the midpoint lattice, each block row-major. The order is what makes
/// pair codes stable across runs and platforms, so it is load-bearing.
class PairGrid {
public:
    const PairGridSpec& spec() const { return spec_; }
    std::span<const GridPoint> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const GridPoint& point(std::size_t code) const { return points_[code]; }

    /// Lattice spacings. For Hexagon, dy = dx * sqrt(3)/2 (row spacing), not
    /// the nominal uniform spacing of the y axis.
    double dx() const { return dx_; }
    double dy() const { return dy_; }

    // Structure-of-arrays views consumed by the batch kernels.
    std::span<const double> xs() const { return xs_; }
    std::span<const double> ys() const { return ys_; }

private:
    PairGrid(PairGridSpec spec, std::vector<GridPoint> points, double dx, double dy);

    friend PairGrid build_rectangle(const PairGridSpec&);
    friend PairGrid build_hexagon(const PairGridSpec&);
    friend PairGrid build_rhombic(const PairGridSpec&);

    PairGridSpec spec_;
    std::vector<GridPoint> points_;
    std::vector<double> xs_;
    std::vector<double> ys_;
    double dx_ = 0.0;
    double dy_ = 0.0;
};

/// Cartesian product of lx uniform x values in [-ex, ex] and ly uniform
/// y values in [-ey, ey]; lx*ly points.
PairGrid build_rectangle(const PairGridSpec& spec);

/// Hexagonal tiling with lx == ly == l points per row. Row spacing is
/// dy = dx * sqrt(3)/2 and every other row is shifted by +dx/4 / -dx/4,
/// which gives each interior point six equidistant neighbors at distance dx.
PairGrid build_hexagon(const PairGridSpec& spec);

/// Centered (rhombic) tiling: the lx*ly base lattice plus a copy translated
/// by (dx/2, dy/2); 2*lx*ly points. Midpoints extending past [-e, e] are
/// kept, so the realized point count is always exactly double the base.
PairGrid build_rhombic(const PairGridSpec& spec);

/// Dispatch over spec.kind.
PairGrid build_grid(const PairGridSpec& spec);

}  // namespace q2d2
