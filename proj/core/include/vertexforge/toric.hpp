#pragma once

#include "vertexforge/partitions.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vf {

/**
 * @brief Vertex of a generalized toric graph.  Univalent (leg) vertices carry
 *        no rotation; trivalent vertices list their three incident edge ids in
 *        counterclockwise order (any starting point).
 */
struct GTVertex {
    int id = 0;
    std::vector<int> rotation;
};

/**
 * @brief Directed framed edge.  The single stored framing belongs to the
 *        tail-to-head direction; the opposite direction carries its negative,
 *        so the antisymmetry of framings holds by encoding.
 */
struct GTEdge {
    int id = 0;
    int tail = 0;
    int head = 0;
    int framing = 0;
    bool internal = false; // both endpoints trivalent
};

/**
 * @brief Generalized toric graph: planar, every vertex univalent or trivalent,
 *        no self-loops.  Disconnected graphs are allowed; partition functions
 *        multiply over components, which the amplitude sums realize without
 *        special casing.
 */
class GTGraph {
public:
    GTGraph() = default;
    /// throws std::invalid_argument on duplicate ids or dangling endpoint references
    GTGraph(std::vector<GTVertex> vertices, std::vector<GTEdge> edges);

    const std::vector<GTVertex>& vertices() const { return v_; }
    const std::vector<GTEdge>& edges() const { return e_; }
    const GTVertex& vertex(int id) const;
    const GTEdge& edge(int id) const;
    bool has_vertex(int id) const { return vidx_.count(id) != 0; }

    int valence(int vertex_id) const;
    /// ids of edges incident to the vertex, ascending
    std::vector<int> incident_edges(int vertex_id) const;

    /// ascending ids of internal edges; fixes the coordinate order of degree vectors
    const std::vector<int>& internal_edge_ids() const { return internal_; }

    /// connected components as sorted lists of vertex ids
    std::vector<std::vector<int>> components() const;

    /// structural invariant violations; empty when the graph is well formed
    std::vector<std::string> validate() const;

private:
    std::vector<GTVertex> v_;
    std::vector<GTEdge> e_;
    std::map<int, std::size_t> vidx_, eidx_;
    std::vector<int> internal_;
};

/// reverse the stored direction of one edge and negate its framing; an involution
GTGraph flip_edge(const GTGraph& g, int edge_id);

/// degree assignment, one entry per internal edge in internal_edge_ids() order
using DegreeVector = std::vector<int>;
/// partition assignment, aligned the same way
using GammaPartition = std::vector<Partition>;

/**
 * @brief All assignments of partitions to internal edges with |partition_e| = d_e.
 *
 * Deterministic order: odometer over the internal edge list with each edge
 * running through partitions_of(d_e) in reverse-lexicographic order, the last
 * edge cycling fastest.
 */
std::vector<GammaPartition> gamma_partitions(const GTGraph& g, const DegreeVector& d);

/**
 * @brief The triple of partitions entering the vertex weight at each trivalent
 *        vertex: rotation order, with lambda_e for edges leaving the vertex,
 *        the conjugate for edges arriving, and the empty partition on legs.
 */
std::map<int, std::array<Partition, 3>> vertex_triples(const GTGraph& g, const GammaPartition& gamma);

// ---- JSON ----

std::string graph_to_json(const GTGraph& g);
/// throws std::runtime_error with origin context on parse errors
GTGraph graph_from_json(const std::string& text, const std::string& origin = "<string>");
GTGraph graph_from_file(const std::string& path);

// ---- fans ----

/// simplicial fan given by its 3-dimensional cones; generators as lattice points
struct Fan {
    std::vector<std::array<std::array<long, 3>, 3>> cones;
};

class FanError : public std::runtime_error {
public:
    enum class Kind {
        NotSmooth,       ///< a cone's generators are not a lattice basis
        NotCalabiYau,    ///< a generator is off the height-1 plane
        NonManifoldFace, ///< a 1-simplex shared by more than two cones
        ConesOverlap,    ///< two cones meet in more than a common face
    };

    FanError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

    Kind kind;
};

Fan fan_from_json(const std::string& text, const std::string& origin = "<string>");
Fan fan_from_file(const std::string& path);

/**
 * @brief Toric graph of a smooth Calabi-Yau fan: one trivalent vertex per
 *        cone, one edge per shared 1-simplex, legs on boundary 1-simplices.
 *
 * Framings solve the generator relation across each internal wall; the stored
 * direction is normalized so framings are nonnegative (ties: the lower cone
 * index is the tail).
 * @throws FanError when a fan invariant fails
 */
GTGraph from_fan(const Fan& fan);

// ---- presets ----

/// two vertices joined by one edge of framing n, four legs
GTGraph preset_conifold(int n);
/// r >= 2 trivalent vertices in a cycle, edge framings gamma_i + 1, one leg each
GTGraph preset_cycle(const std::vector<int>& gammas);
/// four-vertex graph with a triangle and a spur; framings b1..b4
GTGraph preset_flop_f1(const std::array<int, 4>& b);
/// the cycle graph with all gammas 1 (framings 2)
GTGraph preset_local_p2();

/// (name, parameter syntax, description) rows for the preset catalog
std::vector<std::array<std::string, 3>> preset_catalog();
/// "conifold:0", "cycle:1,1,1", "flopF1:2,2,2,0", "localP2"
GTGraph preset_by_name(const std::string& spec);

} // namespace vf
