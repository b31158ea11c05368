#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "snr/boolmap.hpp"
#include "snr/core.hpp"
#include "snr/regions.hpp"

namespace snr {

enum class ColorBy { kRegions, kMap };

inline const char* region_color(Region region) {
    switch (region) {
        case Region::S1_PLUS: return "black";
        case Region::S1_PM: return "violet";
        case Region::S1_MINUS: return "red";
        case Region::S2_PLUS: return "blue";
        case Region::S2_PM: return "brown";
        case Region::S2_MINUS: return "green";
    }
    return "gray";
}

// Graphviz digraph of the Hasse diagram: node id "P:Q" from the two side
// bitmasks, nodes grouped per lattice rank, cover edges drawn upward.
inline void write_dot(std::ostream& out, const LatticeUniverse& universe, ColorBy color_by,
                      const BooleanMap* map = nullptr) {
    if (color_by == ColorBy::kMap && map == nullptr)
        throw std::invalid_argument("map coloring requires a boolean map");

    auto node_id = [](const LatticeString& w) {
        return '"' + std::to_string(w.pos_mask()) + ':' + std::to_string(w.neg_mask()) + '"';
    };

    out << "digraph lattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle style=filled fontsize=10];\n";

    std::map<int, std::vector<std::size_t>> by_rank;
    for (std::size_t i = 0; i < universe.size(); ++i)
        by_rank[rank(universe.at(i))].push_back(i);

    for (const auto& [lattice_rank, indices] : by_rank) {
        out << "  { rank=same;";
        for (std::size_t i : indices) out << ' ' << node_id(universe.at(i)) << ';';
        out << " }\n";
    }
    for (std::size_t i = 0; i < universe.size(); ++i) {
        const LatticeString w = universe.at(i);
        const char* color = color_by == ColorBy::kRegions
                                ? region_color(classify(w))
                                : (map->is_positive(i) ? "green" : "red");
        out << "  " << node_id(w) << " [label=\"" << render_string(w) << "\" fillcolor=" << color
            << "];\n";
    }
    for (const auto& [lo, hi] : universe.cover_edges())
        out << "  " << node_id(universe.at(lo)) << " -> " << node_id(universe.at(hi)) << ";\n";
    out << "}\n";
}

}  // namespace snr
