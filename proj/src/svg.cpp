#include "wsncov/svg.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "wsncov/verification.hpp"

namespace wsncov {

std::string render_svg(const Deployment& dep, std::optional<double> rc) {
    const SensingField& field = dep.field();
    const double pad = dep.sensing_radius();
    const double view_w = field.width() + 2.0 * pad;
    const double view_h = field.height() + 2.0 * pad;
    // Pixels per field unit so the longer side is 800 px.
    const double scale = 800.0 / std::max(view_w, view_h);

    // SVG y grows downward; flip so the field origin sits bottom-left.
    auto sx = [&](double x) { return (x - field.min_x() + pad) * scale; };
    auto sy = [&](double y) { return (field.max_y() + pad - y) * scale; };

    std::string out;
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.3f}\" height=\"{:.3f}\" "
        "viewBox=\"0 0 {:.3f} {:.3f}\">\n",
        view_w * scale, view_h * scale, view_w * scale, view_h * scale);
    out +=
        "<style>.field{fill:none;stroke:#333;stroke-width:1.5}"
        ".sensing-disk{fill:#2a7ab9;fill-opacity:0.25;stroke:#2a7ab9;stroke-width:0.5}"
        ".node{fill:#111}.link{stroke:#c0392b;stroke-width:0.8}"
        ".base-station{fill:#e67e22}</style>\n";
    out += fmt::format(
        "<rect class=\"field\" x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\"/>\n",
        sx(field.min_x()), sy(field.max_y()), field.width() * scale, field.height() * scale);

    out += "<g id=\"coverage\">\n";
    for (const Node& node : dep.nodes()) {
        out += fmt::format("<circle class=\"sensing-disk\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\"/>\n",
                           sx(node.position.x), sy(node.position.y), node.sensing_radius * scale);
    }
    out += "</g>\n";

    if (rc && !dep.empty()) {
        const CommGraph graph = build_comm_graph(dep, *rc);
        out += "<g id=\"links\">\n";
        const auto& nodes = dep.nodes();
        for (NodeId i = 0; i < graph.node_count(); ++i) {
            for (NodeId j : graph.adjacency()[i]) {
                if (j <= i) continue;
                out += fmt::format(
                    "<line class=\"link\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\"/>\n",
                    sx(nodes[i].position.x), sy(nodes[i].position.y), sx(nodes[j].position.x),
                    sy(nodes[j].position.y));
            }
        }
        out += "</g>\n";
    }

    const double dot = std::max(1.5, 0.06 * dep.sensing_radius() * scale);
    out += "<g id=\"nodes\">\n";
    for (const Node& node : dep.nodes()) {
        const bool base = dep.base_station() == node.id;
        out += fmt::format("<circle class=\"{}\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\"/>\n",
                           base ? "node base-station" : "node", sx(node.position.x),
                           sy(node.position.y), base ? 2.0 * dot : dot);
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace wsncov
