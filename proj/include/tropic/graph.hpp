#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropic/rational.hpp"

namespace tropic {

struct Edge {
    std::string id;
    std::string u, v; // endpoint vertex ids; u == v encodes a loop
    bool is_loop() const { return u == v; }
};

/// A finite connected multigraph with loops and nonnegative integer vertex
/// weights. Vertices and edges are identified by opaque strings; both lists
/// are kept sorted by id so iteration order is deterministic.
class WeightedGraph {
public:
    WeightedGraph(std::vector<std::pair<std::string, int>> vertices, std::vector<Edge> edges);

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t num_vertices() const { return vertex_ids_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_vertex(const std::string& id) const { return weights_.count(id) > 0; }
    bool has_edge(const std::string& id) const;
    int weight(const std::string& vertex) const;
    const Edge& edge(const std::string& id) const;

    /// Loops count twice.
    int valence(const std::string& vertex) const;
    int total_weight() const;
    /// First Betti number |E| - |V| + 1.
    int betti() const;

    bool operator==(const WeightedGraph& other) const;

private:
    std::vector<std::string> vertex_ids_;
    std::map<std::string, int> weights_;
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> edge_index_;
};

/// A weight-preserving multigraph isomorphism as a pair of bijections.
struct GraphMorphism {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
};

bool verify_morphism(const WeightedGraph& g1, const WeightedGraph& g2, const GraphMorphism& m);

int genus(const WeightedGraph& g);
bool is_stable(const WeightedGraph& g);

/// Contracts edge `e`: a non-loop merges its endpoints (weights add, fresh
/// merged vertex id), a loop disappears and bumps its vertex weight by one.
/// Genus is preserved by both rules.
WeightedGraph contract_edge(const WeightedGraph& g, const std::string& e);

/// Whether g2 is obtained from g1 by contracting some (possibly empty) set
/// of edges, up to isomorphism.
bool dominates(const WeightedGraph& g1, const WeightedGraph& g2);

/// Canonical label: equal strings exactly for isomorphic weighted graphs.
std::string canonical_key(const WeightedGraph& g);

/// Canonical vertex order realizing canonical_key.
std::vector<std::string> canonical_vertex_order(const WeightedGraph& g);

/// A relabeled copy with vertices v0..vn and edges e0..em in canonical order,
/// plus the morphism from g onto it.
std::pair<WeightedGraph, GraphMorphism> canonical_copy(const WeightedGraph& g);

std::optional<GraphMorphism> isomorphic(const WeightedGraph& g1, const WeightedGraph& g2);

/// Every (vertex bijection, edge bijection) pair preserving weights and
/// incidence. Loop half-edge flips are not modeled.
std::vector<GraphMorphism> automorphism_group(const WeightedGraph& g, std::size_t cap = 100000);

struct EnumerationOptions {
    // Upper bound on generation steps before a limit_error is raised.
    unsigned long long budget = 500000000ULL;
};

/// One representative per isomorphism class of stable weighted graphs of the
/// given genus (>= 2), sorted by canonical key.
std::vector<WeightedGraph> enumerate_stable_weighted_graphs(int genus,
                                                            const EnumerationOptions& opts = {});

/// Number of spanning trees by deletion/contraction; loops are ignored.
Int spanning_tree_count(const WeightedGraph& g);

// Convenience builders used throughout the tests and the CLI.
WeightedGraph make_graph(const std::vector<std::pair<std::string, int>>& vertices,
                         const std::vector<std::tuple<std::string, std::string, std::string>>& edges);

} // namespace tropic
