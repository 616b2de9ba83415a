#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include "common/error.hpp"
#include "geom/mesh.hpp"

namespace cellflux::geom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

struct Ring {
    std::vector<int> ids;       // node ids, ccw by angle
    std::vector<double> theta;  // matching angles, strictly increasing after unwrap
};

// Stitch two concentric node rings with a merge over unwrapped angles.
// Inner ring at smaller radius; emits ccw triangles.
void zip_rings(const Ring& inner, const Ring& outer, std::vector<std::array<int, 3>>& tris) {
    const int p = static_cast<int>(inner.ids.size());
    const int q = static_cast<int>(outer.ids.size());
    if (p < 3 || q < 3) throw internal_error("zip_rings: ring too short");

    // Unwrapped angle of node k steps ahead of ring start.
    auto ang = [](const Ring& r, int k) {
        const int n = static_cast<int>(r.ids.size());
        return r.theta[k % n] + kTwoPi * (k / n);
    };

    // Align the outer ring so its first node sits within one turn after inner[0].
    int j0 = 0;
    double best = std::numeric_limits<double>::max();
    for (int j = 0; j < q; ++j) {
        double d = wrap_angle(outer.theta[j] - inner.theta[0]);
        if (d < best) {
            best = d;
            j0 = j;
        }
    }
    const double outer_shift = wrap_angle(outer.theta[j0] - inner.theta[0]);

    int i = 0, j = 0;
    while (i < p || j < q) {
        const bool can_inner = i < p;
        const bool can_outer = j < q;
        const double next_inner = ang(inner, i + 1) - inner.theta[0];
        const double next_outer = ang(outer, j0 + j + 1) - outer.theta[j0] + outer_shift;
        const int in_i = inner.ids[i % p];
        const int out_j = outer.ids[(j0 + j) % q];
        if (can_inner && (!can_outer || next_inner <= next_outer)) {
            tris.push_back({in_i, out_j, inner.ids[(i + 1) % p]});
            ++i;
        } else {
            tris.push_back({in_i, out_j, outer.ids[(j0 + j + 1) % q]});
            ++j;
        }
    }
}

}  // namespace

double norm(Point2 a) { return std::hypot(a.x, a.y); }

const char* to_string(EdgeMarker m) {
    return m == EdgeMarker::OuterWall ? "OuterWall" : "CellBoundary";
}

Mesh build_full_mesh(double half_width, const Circle& cell, int n_circle_points, double target_h) {
    const double W = half_width;
    const double R = cell.radius;
    if (W <= 0.0 || target_h <= 0.0) throw domain_error("build_full_mesh: non-positive size");
    if (R <= 0.0) throw domain_error("build_full_mesh: non-positive radius");
    if (n_circle_points < 16) throw domain_error("build_full_mesh: n_circle_points < 16");
    const double wall_gap = std::min(W - std::abs(cell.center.x), W - std::abs(cell.center.y));
    if (wall_gap <= R) throw domain_error("build_full_mesh: cell intersects the outer wall");

    Mesh m;
    m.cell = cell;
    m.half_width = W;

    // Uniform grid. Edge mix (g, g, g*sqrt(2)) averages 1.14 g, so g = target_h
    // keeps the mean within the 30% contract.
    const int nx = std::max(8, static_cast<int>(std::llround(2.0 * W / target_h)));
    const double g = 2.0 * W / nx;
    if (wall_gap - R < 3.0 * g)
        throw domain_error("build_full_mesh: too little room between cell and wall for this h");

    auto grid_pt = [&](int i, int j) { return Point2{-W + i * g, -W + j * g}; };

    // Remove cells whose rectangle comes within g of the circle; the kept
    // region's staircase then clears the polygon by at least one grid step.
    auto cell_removed = [&](int i, int j) {
        const Point2 lo = grid_pt(i, j), hi = grid_pt(i + 1, j + 1);
        const double dx = std::max({lo.x - cell.center.x, cell.center.x - hi.x, 0.0});
        const double dy = std::max({lo.y - cell.center.y, cell.center.y - hi.y, 0.0});
        return std::hypot(dx, dy) < R + g;
    };

    std::vector<int> node_id(static_cast<size_t>(nx + 1) * (nx + 1), -1);
    auto nid = [&](int i, int j) -> int& { return node_id[static_cast<size_t>(j) * (nx + 1) + i]; };
    auto get_node = [&](int i, int j) {
        int& id = nid(i, j);
        if (id < 0) {
            id = m.node_count();
            m.nodes.push_back(grid_pt(i, j));
        }
        return id;
    };

    std::vector<char> kept(static_cast<size_t>(nx) * nx, 0);
    for (int j = 0; j < nx; ++j)
        for (int i = 0; i < nx; ++i)
            if (!cell_removed(i, j)) {
                kept[static_cast<size_t>(j) * nx + i] = 1;
                const int a = get_node(i, j), b = get_node(i + 1, j);
                const int c = get_node(i + 1, j + 1), d = get_node(i, j + 1);
                m.triangles.push_back({a, b, c});
                m.triangles.push_back({a, c, d});
            }
    auto is_kept = [&](int i, int j) {
        return i >= 0 && j >= 0 && i < nx && j < nx && kept[static_cast<size_t>(j) * nx + i];
    };

    // Staircase: hole-boundary grid edges (kept cell on one side, removed on
    // the other). For a disk-shaped hole each staircase node has exactly two
    // such edges and the cycle is angularly monotone around the centre.
    std::set<EdgeKey> hole_edges;
    for (int j = 0; j < nx; ++j)
        for (int i = 0; i < nx; ++i) {
            if (!is_kept(i, j)) continue;
            if (!is_kept(i, j - 1)) hole_edges.emplace(nid(i, j), nid(i + 1, j));
            if (!is_kept(i, j + 1)) hole_edges.emplace(nid(i, j + 1), nid(i + 1, j + 1));
            if (!is_kept(i - 1, j)) hole_edges.emplace(nid(i, j), nid(i, j + 1));
            if (!is_kept(i + 1, j)) hole_edges.emplace(nid(i + 1, j), nid(i + 1, j + 1));
        }
    // Drop any that landed on the outer wall (cannot happen with the wall-gap
    // precondition, but cheap to guard).
    std::set<int> stair_nodes;
    for (const auto& e : hole_edges) {
        stair_nodes.insert(e.a);
        stair_nodes.insert(e.b);
    }
    if (stair_nodes.size() < 8) throw internal_error("build_full_mesh: degenerate staircase");

    Ring stair;
    for (int id : stair_nodes) stair.ids.push_back(id);
    std::sort(stair.ids.begin(), stair.ids.end(), [&](int a, int b) {
        const double ta = wrap_angle(std::atan2(m.nodes[a].y - cell.center.y, m.nodes[a].x - cell.center.x));
        const double tb = wrap_angle(std::atan2(m.nodes[b].y - cell.center.y, m.nodes[b].x - cell.center.x));
        return ta < tb;
    });
    double stair_rmin = std::numeric_limits<double>::max();
    for (int id : stair.ids) {
        stair.theta.push_back(wrap_angle(std::atan2(m.nodes[id].y - cell.center.y, m.nodes[id].x - cell.center.x)));
        stair_rmin = std::min(stair_rmin, norm(m.nodes[id] - cell.center));
    }

    // Cell polygon, nodes placed exactly on the circle.
    const int nc = n_circle_points;
    const double chord = 2.0 * R * std::sin(std::numbers::pi / nc);
    Ring polygon;
    for (int k = 0; k < nc; ++k) {
        const double th = kTwoPi * k / nc;
        polygon.ids.push_back(m.node_count());
        polygon.theta.push_back(th);
        m.nodes.push_back(cell.center + Point2{R * std::cos(th), R * std::sin(th)});
    }
    m.cell_polygon = polygon.ids;

    auto make_ring = [&](double radius, double spacing) {
        Ring r;
        const int n = std::max(16, static_cast<int>(std::llround(kTwoPi * radius / spacing)));
        for (int k = 0; k < n; ++k) {
            const double th = kTwoPi * k / n;
            r.ids.push_back(m.node_count());
            r.theta.push_back(th);
            m.nodes.push_back(cell.center + Point2{radius * std::cos(th), radius * std::sin(th)});
        }
        return r;
    };

    // Graded rings from the polygon out to the staircase: spacing blends from
    // the polygon chord to the grid step.
    const int band_tri_begin = m.tri_count();
    {
        std::vector<Ring> rings;
        rings.push_back(polygon);
        double r = R;
        const double band = std::max(stair_rmin - R, 1e-12);
        while (true) {
            const double s = chord + (g - chord) * std::clamp((r - R) / band, 0.0, 1.0);
            const double step = std::clamp(s, 0.35 * g, band);
            if (r + step > stair_rmin - 0.4 * g) break;
            r += step;
            rings.push_back(make_ring(r, chord + (g - chord) * std::clamp((r - R) / band, 0.0, 1.0)));
        }
        rings.push_back(stair);
        for (size_t k = 0; k + 1 < rings.size(); ++k) zip_rings(rings[k], rings[k + 1], m.triangles);
    }
    const int band_tri_end = m.tri_count();

    // Disk interior: rings of shrinking radius down to a central fan.
    {
        std::vector<Ring> rings;
        rings.push_back(polygon);
        double r = R;
        while (r - chord > 1.45 * chord) {
            r -= chord;
            rings.push_back(make_ring(r, chord));
        }
        for (size_t k = 0; k + 1 < rings.size(); ++k) zip_rings(rings[k + 1], rings[k], m.triangles);
        const int center_id = m.node_count();
        m.nodes.push_back(cell.center);
        const Ring& last = rings.back();
        const int n = static_cast<int>(last.ids.size());
        for (int k = 0; k < n; ++k)
            m.triangles.push_back({center_id, last.ids[k], last.ids[(k + 1) % n]});
    }

    // Region markers: inside the circle iff centroid within R of the centre
    // (band triangles span [R, staircase], disk triangles stay within R).
    m.tri_region.assign(m.tri_count(), 0);
    for (int t = 0; t < m.tri_count(); ++t) {
        const auto& tr = m.triangles[t];
        const Point2 c = (1.0 / 3.0) * (m.nodes[tr[0]] + m.nodes[tr[1]] + m.nodes[tr[2]]);
        m.tri_region[t] = norm(c - cell.center) < R ? 1 : 0;
    }
    for (int t = band_tri_begin; t < band_tri_end; ++t) m.tri_region[t] = 0;

    // Boundary markers.
    for (int k = 0; k < nc; ++k)
        m.edge_markers.emplace(EdgeKey(polygon.ids[k], polygon.ids[(k + 1) % nc]),
                               EdgeMarker::CellBoundary);
    auto on_wall = [&](int id) {
        const Point2 p = m.nodes[id];
        return std::abs(std::abs(p.x) - W) < 1e-12 * W || std::abs(std::abs(p.y) - W) < 1e-12 * W;
    };
    for (int j = 0; j < nx; ++j)
        for (int i = 0; i < nx; ++i) {
            if (!is_kept(i, j)) continue;
            if (j == 0) m.edge_markers.emplace(EdgeKey(nid(i, 0), nid(i + 1, 0)), EdgeMarker::OuterWall);
            if (j == nx - 1)
                m.edge_markers.emplace(EdgeKey(nid(i, nx), nid(i + 1, nx)), EdgeMarker::OuterWall);
            if (i == 0) m.edge_markers.emplace(EdgeKey(nid(0, j), nid(0, j + 1)), EdgeMarker::OuterWall);
            if (i == nx - 1)
                m.edge_markers.emplace(EdgeKey(nid(nx, j), nid(nx, j + 1)), EdgeMarker::OuterWall);
        }
    (void)on_wall;

    // Enforce ccw orientation, then audit.
    for (auto& tr : m.triangles) {
        const Point2 a = m.nodes[tr[0]], b = m.nodes[tr[1]], c = m.nodes[tr[2]];
        if (cross(b - a, c - a) < 0.0) std::swap(tr[1], tr[2]);
    }
    m.validate();
    return m;
}

double Mesh::tri_area(int t) const {
    const auto& tr = triangles[t];
    return 0.5 * cross(nodes[tr[1]] - nodes[tr[0]], nodes[tr[2]] - nodes[tr[0]]);
}

double Mesh::total_area() const {
    double a = 0.0;
    for (int t = 0; t < tri_count(); ++t) a += tri_area(t);
    return a;
}

double Mesh::mean_edge_length() const {
    std::set<EdgeKey> edges;
    for (const auto& tr : triangles)
        for (int e = 0; e < 3; ++e) edges.emplace(tr[e], tr[(e + 1) % 3]);
    double sum = 0.0;
    for (const auto& e : edges) sum += norm(nodes[e.a] - nodes[e.b]);
    return sum / static_cast<double>(edges.size());
}

double Mesh::polygon_perimeter() const {
    double p = 0.0;
    const int n = static_cast<int>(cell_polygon.size());
    for (int k = 0; k < n; ++k)
        p += norm(nodes[cell_polygon[(k + 1) % n]] - nodes[cell_polygon[k]]);
    return p;
}

void Mesh::validate() const {
    std::map<EdgeKey, int> edge_use;
    for (int t = 0; t < tri_count(); ++t) {
        if (tri_area(t) <= 0.0) throw internal_error("mesh: non-positive triangle area");
        const auto& tr = triangles[t];
        for (int e = 0; e < 3; ++e) ++edge_use[EdgeKey(tr[e], tr[(e + 1) % 3])];
    }
    for (const auto& [edge, uses] : edge_use) {
        if (uses > 2) throw internal_error("mesh: edge shared by more than two triangles");
        const bool marked = edge_markers.count(edge) > 0;
        if (uses == 1 && !marked && cell_polygon.empty() == false)
            throw internal_error("mesh: unmarked boundary edge");
    }
    for (const auto& [edge, marker] : edge_markers) {
        (void)marker;
        auto it = edge_use.find(edge);
        if (it == edge_use.end()) throw internal_error("mesh: marker on a non-edge");
    }
    // Polygon nodes must sit on the circle to tight tolerance.
    for (int id : cell_polygon) {
        const double d = std::abs(norm(nodes[id] - cell.center) - cell.radius);
        if (d > 1e-12 * std::max(1.0, cell.radius))
            throw internal_error("mesh: polygon node off the circle");
    }
}

}  // namespace cellflux::geom
