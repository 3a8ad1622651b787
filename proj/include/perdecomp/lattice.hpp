#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "perdecomp/subspaces.hpp"

namespace perdecomp {

/// A node of the periodicity diagram; ordered by (kind, param) with
/// P < AP < C.
using DiagramNode = SubspaceLabel;

struct DiagramEdge {
    /// The subspace.
    DiagramNode from;
    /// The covering superspace.
    DiagramNode to;

    friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
    friend auto operator<=>(const DiagramEdge& a, const DiagramEdge& b) {
        if (auto c = a.from <=> b.from; c != 0) return c;
        return a.to <=> b.to;
    }
};

/// Hasse diagram of the periodic, antiperiodic and cyclotomic-kernel
/// subspaces of P_p. Nodes and edges are kept sorted.
struct Diagram {
    std::int64_t p = 1;
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;

    bool has_node(std::string_view name) const;
    bool has_edge(std::string_view from, std::string_view to) const;
};

/// Nodes: P_d for d | p, AP_d for 2d | p, C_k for k | p that is neither 1
/// nor a power of two. Cover edges:
///   P_d  -> P_e   when e/d is prime
///   AP_d -> P_2d
///   AP_d -> AP_e  when e/d is an odd prime
///   C_k  -> P_k (k odd), C_k -> AP_{k/2} (k even)
Diagram build_diagram(std::int64_t p);

/// Deterministic Graphviz text; node statements first, then edges, both in
/// sorted order.
std::string to_dot(const Diagram& d);

/// {"p":..,"nodes":[{"kind","param","label"}..],"edges":[[from,to]..]}
std::string to_json(const Diagram& d);

}  // namespace perdecomp
