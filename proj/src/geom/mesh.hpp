#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cellflux::geom {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);

// Circular cell of radius R, strictly inside the square domain.
struct Circle {
    Point2 center;
    double radius = 1.0;
};

enum class EdgeMarker : std::uint8_t { OuterWall = 0, CellBoundary = 1 };

const char* to_string(EdgeMarker m);

// Edge key with ordered node indices so (i,j) and (j,i) coincide.
struct EdgeKey {
    int a, b;
    EdgeKey(int i, int j) : a(i < j ? i : j), b(i < j ? j : i) {}
    bool operator<(const EdgeKey& o) const { return a != o.a ? a < o.a : b < o.b; }
    bool operator==(const EdgeKey& o) const { return a == o.a && b == o.b; }
};

// Conforming triangulation of the square (optionally with the cell interior
// meshed as well). The cell boundary is a tagged polygon whose nodes sit
// exactly on the circle. Immutable after construction.
struct Mesh {
    std::vector<Point2> nodes;
    std::vector<std::array<int, 3>> triangles;   // counter-clockwise
    std::vector<int> tri_region;                 // 0 = outside cell, 1 = inside cell
    std::map<EdgeKey, EdgeMarker> edge_markers;  // boundary edges only
    std::vector<int> cell_polygon;               // ordered node ids on the circle
    Circle cell;
    double half_width = 0.0;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int tri_count() const { return static_cast<int>(triangles.size()); }

    double tri_area(int t) const;
    double total_area() const;
    double mean_edge_length() const;
    double polygon_perimeter() const;

    // Conformity audit: positive areas, every interior edge shared by exactly
    // two triangles, every boundary edge carrying exactly one marker.
    void validate() const;
};

// One polygon edge of the cell boundary seen as an arc in the angular
// coordinate around the cell centre.
struct BoundaryArc {
    int node_a = -1, node_b = -1;
    double theta_begin = 0.0;  // angles of the two nodes, ccw order
    double theta_end = 0.0;
    double theta_mid = 0.0;    // angle of the edge midpoint, in [0, 2pi)
    double length = 0.0;
};

// Deterministic structured-plus-graded-ring triangulation of the full square
// with the circular cell realized as an exactly-on-circle polygon.
Mesh build_full_mesh(double half_width, const Circle& cell, int n_circle_points, double target_h);

// Submesh of triangles outside the cell polygon plus index maps between the
// two meshes (shared nodes keep identical coordinates).
struct AnnulusMesh {
    Mesh mesh;
    std::vector<int> to_full;    // annulus node id -> full mesh node id
    std::vector<int> from_full;  // full mesh node id -> annulus node id or -1
};
AnnulusMesh extract_annulus(const Mesh& full);

// Arcs of the marked boundary sorted by midpoint angle; together they cover
// [0, 2pi) exactly once.
std::vector<BoundaryArc> boundary_arcs(const Mesh& mesh, EdgeMarker marker);

// Plain-text export ("nodes <N> triangles <T>" header, then nodes, triangles
// with region marker, boundary edges with marker name; >= 15 significant digits).
void write_mesh(const Mesh& mesh, std::ostream& out);
void write_mesh_file(const Mesh& mesh, const std::string& path);
Mesh read_mesh(std::istream& in);
Mesh read_mesh_file(const std::string& path);

}  // namespace cellflux::geom
