#include <fstream>
#include <iomanip>
#include <sstream>

#include "common/error.hpp"
#include "geom/mesh.hpp"

namespace cellflux::geom {

void write_mesh(const Mesh& mesh, std::ostream& out) {
    out << "nodes " << mesh.node_count() << " triangles " << mesh.tri_count() << "\n";
    out << std::setprecision(17);
    out << "cell " << mesh.cell.center.x << " " << mesh.cell.center.y << " " << mesh.cell.radius
        << " half_width " << mesh.half_width << "\n";
    for (const auto& p : mesh.nodes) out << p.x << " " << p.y << "\n";
    for (int t = 0; t < mesh.tri_count(); ++t) {
        const auto& tr = mesh.triangles[t];
        out << tr[0] << " " << tr[1] << " " << tr[2] << " " << mesh.tri_region[t] << "\n";
    }
    out << "polygon " << mesh.cell_polygon.size();
    for (int id : mesh.cell_polygon) out << " " << id;
    out << "\n";
    out << "boundary_edges " << mesh.edge_markers.size() << "\n";
    for (const auto& [edge, marker] : mesh.edge_markers)
        out << edge.a << " " << edge.b << " " << to_string(marker) << "\n";
}

void write_mesh_file(const Mesh& mesh, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw domain_error("write_mesh_file: cannot open " + path);
    write_mesh(mesh, f);
}

Mesh read_mesh(std::istream& in) {
    Mesh m;
    std::string tok;
    int n_nodes = 0, n_tris = 0;
    in >> tok >> n_nodes;
    if (tok != "nodes") throw domain_error("read_mesh: bad header");
    in >> tok >> n_tris;
    if (tok != "triangles") throw domain_error("read_mesh: bad header");
    in >> tok >> m.cell.center.x >> m.cell.center.y >> m.cell.radius;
    if (tok != "cell") throw domain_error("read_mesh: bad cell line");
    in >> tok >> m.half_width;
    if (tok != "half_width") throw domain_error("read_mesh: bad cell line");

    m.nodes.resize(n_nodes);
    for (auto& p : m.nodes) in >> p.x >> p.y;
    m.triangles.resize(n_tris);
    m.tri_region.resize(n_tris);
    for (int t = 0; t < n_tris; ++t)
        in >> m.triangles[t][0] >> m.triangles[t][1] >> m.triangles[t][2] >> m.tri_region[t];

    size_t n_poly = 0;
    in >> tok >> n_poly;
    if (tok != "polygon") throw domain_error("read_mesh: bad polygon line");
    m.cell_polygon.resize(n_poly);
    for (auto& id : m.cell_polygon) in >> id;

    size_t n_edges = 0;
    in >> tok >> n_edges;
    if (tok != "boundary_edges") throw domain_error("read_mesh: bad boundary line");
    for (size_t k = 0; k < n_edges; ++k) {
        int a = 0, b = 0;
        std::string name;
        in >> a >> b >> name;
        EdgeMarker marker;
        if (name == "OuterWall")
            marker = EdgeMarker::OuterWall;
        else if (name == "CellBoundary")
            marker = EdgeMarker::CellBoundary;
        else
            throw domain_error("read_mesh: unknown marker " + name);
        m.edge_markers.emplace(EdgeKey(a, b), marker);
    }
    if (!in) throw domain_error("read_mesh: truncated stream");
    m.validate();
    return m;
}

Mesh read_mesh_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw domain_error("read_mesh_file: cannot open " + path);
    return read_mesh(f);
}

}  // namespace cellflux::geom
