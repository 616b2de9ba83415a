#include <algorithm>
#include <cmath>
#include <numbers>

#include "common/error.hpp"
#include "geom/mesh.hpp"

namespace cellflux::geom {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}
}  // namespace

AnnulusMesh extract_annulus(const Mesh& full) {
    const int n = static_cast<int>(full.cell_polygon.size());
    if (n < 3) throw internal_error("extract_annulus: mesh carries no cell polygon");
    for (int k = 0; k < n; ++k) {
        EdgeKey e(full.cell_polygon[k], full.cell_polygon[(k + 1) % n]);
        auto it = full.edge_markers.find(e);
        if (it == full.edge_markers.end() || it->second != EdgeMarker::CellBoundary)
            throw internal_error("extract_annulus: cell polygon is not a closed marked edge cycle");
    }

    AnnulusMesh out;
    out.from_full.assign(full.node_count(), -1);
    out.mesh.cell = full.cell;
    out.mesh.half_width = full.half_width;

    auto map_node = [&](int full_id) {
        int& a = out.from_full[full_id];
        if (a < 0) {
            a = out.mesh.node_count();
            out.mesh.nodes.push_back(full.nodes[full_id]);
            out.to_full.push_back(full_id);
        }
        return a;
    };

    for (int t = 0; t < full.tri_count(); ++t) {
        if (full.tri_region[t] != 0) continue;
        const auto& tr = full.triangles[t];
        out.mesh.triangles.push_back({map_node(tr[0]), map_node(tr[1]), map_node(tr[2])});
        out.mesh.tri_region.push_back(0);
    }

    for (int id : full.cell_polygon) {
        if (out.from_full[id] < 0) throw internal_error("extract_annulus: polygon node lost");
        out.mesh.cell_polygon.push_back(out.from_full[id]);
    }
    for (const auto& [edge, marker] : full.edge_markers) {
        const int a = out.from_full[edge.a], b = out.from_full[edge.b];
        if (a >= 0 && b >= 0) out.mesh.edge_markers.emplace(EdgeKey(a, b), marker);
    }
    out.mesh.validate();
    return out;
}

std::vector<BoundaryArc> boundary_arcs(const Mesh& mesh, EdgeMarker marker) {
    std::vector<BoundaryArc> arcs;
    const Point2 c = mesh.cell.center;
    for (const auto& [edge, m] : mesh.edge_markers) {
        if (m != marker) continue;
        BoundaryArc arc;
        arc.node_a = edge.a;
        arc.node_b = edge.b;
        const Point2 pa = mesh.nodes[edge.a], pb = mesh.nodes[edge.b];
        const Point2 mid = 0.5 * (pa + pb);
        arc.theta_mid = wrap_angle(std::atan2(mid.y - c.y, mid.x - c.x));
        double ta = wrap_angle(std::atan2(pa.y - c.y, pa.x - c.x));
        double tb = wrap_angle(std::atan2(pb.y - c.y, pb.x - c.x));
        // Order the pair ccw across the (short) arc.
        if (wrap_angle(tb - ta) > std::numbers::pi) std::swap(ta, tb);
        arc.theta_begin = ta;
        arc.theta_end = tb;
        arc.length = norm(pb - pa);
        arcs.push_back(arc);
    }
    if (arcs.size() < 3) throw domain_error("boundary_arcs: fewer than 3 edges carry the marker");
    std::sort(arcs.begin(), arcs.end(),
              [](const BoundaryArc& a, const BoundaryArc& b) { return a.theta_mid < b.theta_mid; });
    return arcs;
}

}  // namespace cellflux::geom
