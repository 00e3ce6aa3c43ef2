/**
 * Bicoloured labelled graphs of 2-stratifolds.
 *
 * White vertices are surface pieces (carrying a genus, negative for
 * nonorientable surfaces), black vertices are singular circles, and every
 * edge joins a white vertex to a black vertex. Edges carry a positive label
 * (the degree of the attaching map) and a sign, the per-edge value of the
 * orientation cocycle.
 *
 * Vertices are addressed by (colour, index) pairs; indices are positions in
 * the storage order, which is also the "lowest id" order used by every
 * deterministic traversal in the library.
 */
#ifndef STRATIFOLD_GRAPH_HPP
#define STRATIFOLD_GRAPH_HPP

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stratifold {

enum class ErrorCode
{
    NonBipartite,
    Disconnected,
    BlackDegreeSumBelow3,
    NonPositiveLabel,
    DuplicateId,
    InvalidSign,
    EmptyGraph,
    NotCircleHomotopy,
    NonzeroGenus,
    DegreeTooSmall,
    PreconditionFailed,
    NotLinear,
    SyntaxError,
    UnknownVertex,
    BadLabel,
    BoundsTooLarge,
};

std::string_view to_string(ErrorCode code);

class StratifoldError : public std::runtime_error
{
  public:
    StratifoldError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

enum class Colour
{
    White,
    Black
};

struct Vertex
{
    Colour colour;
    int index;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex white(int i) { return {Colour::White, i}; }
inline Vertex black(int i) { return {Colour::Black, i}; }

struct WhiteVertex
{
    std::string id;
    int genus = 0;
};

struct BlackVertex
{
    std::string id;
};

struct Edge
{
    std::string id;
    int white;
    int black;
    int label;
    int sign = +1;
};

class LabelledGraph
{
  public:
    int add_white(std::string id, int genus = 0);
    int add_black(std::string id);
    /// Edge ids default to "e<k>" with k the edge's position.
    int add_edge(int white, int black, int label, int sign = +1, std::string id = {});

    const std::vector<WhiteVertex>& whites() const { return whites_; }
    const std::vector<BlackVertex>& blacks() const { return blacks_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_.at(e); }

    int num_whites() const { return static_cast<int>(whites_.size()); }
    int num_blacks() const { return static_cast<int>(blacks_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_vertices() const { return num_whites() + num_blacks(); }

    const std::vector<int>& incident(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    Vertex white_end(int e) const { return white(edges_.at(e).white); }
    Vertex black_end(int e) const { return black(edges_.at(e).black); }
    Vertex other_end(int e, Vertex v) const;

    /// Flat vertex numbering: whites first, then blacks.
    int flat(Vertex v) const { return v.colour == Colour::White ? v.index : num_whites() + v.index; }
    Vertex from_flat(int f) const { return f < num_whites() ? white(f) : black(f - num_whites()); }

    const std::string& id(Vertex v) const;
    std::optional<Vertex> find(Colour colour, std::string_view id) const;

    void set_sign(int e, int sign) { edges_.at(e).sign = sign; }
    void set_genus(int w, int genus) { whites_.at(w).genus = genus; }

  private:
    std::vector<WhiteVertex> whites_;
    std::vector<BlackVertex> blacks_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> white_edges_;
    std::vector<std::vector<int>> black_edges_;
};

/// Keeps the vertices with keep[flat(v)] set and the edges between them
/// (optionally filtered by keep_edge). Ids and relative order are preserved.
LabelledGraph induced_subgraph(const LabelledGraph& g, const std::vector<bool>& keep_vertex,
                               const std::vector<bool>* keep_edge = nullptr);

/// Component number per flat vertex, restricted to the kept vertices/edges
/// (-1 for removed vertices). Components are numbered in order of their
/// lowest flat vertex.
std::vector<int> component_labels(const LabelledGraph& g, const std::vector<bool>* keep_vertex = nullptr,
                                  const std::vector<bool>* keep_edge = nullptr);

int count_components(const LabelledGraph& g);
int betti1(const LabelledGraph& g);

/// Breadth-first spanning forest from the lowest vertex, scanning incident
/// edges in index order. Returns in_tree[e].
std::vector<bool> spanning_tree(const LabelledGraph& g);

/// Edges of the fundamental cycle of a non-tree edge with respect to tree.
std::vector<int> fundamental_cycle(const LabelledGraph& g, const std::vector<bool>& tree, int edge);

struct Cycle
{
    std::vector<int> edges;        // in traversal order
    std::vector<Vertex> vertices;  // vertices[i] is where edges[i] starts
};

/// The unique simple cycle of a graph with betti1 = 1, starting at its
/// lowest white vertex and leaving along the lower-indexed cycle edge.
Cycle cycle_of(const LabelledGraph& g);

bool is_trivalent(const LabelledGraph& g);

/// Multi-source breadth-first distances (in edges) over flat vertices;
/// -1 where unreachable.
std::vector<int> distances_from(const LabelledGraph& g, std::span<const Vertex> targets);

int distance(const LabelledGraph& g, Vertex x, std::span<const Vertex> targets);
/// Number of edges strictly between the edge and the target set; an edge
/// incident to a target vertex has distance 0.
int edge_distance(const LabelledGraph& g, int edge, std::span<const Vertex> targets);
std::vector<Vertex> endpoints(const LabelledGraph& g, std::span<const int> edges);

std::vector<Vertex> terminal_vertices(const LabelledGraph& g);
std::vector<Vertex> cycle_vertices(const LabelledGraph& g);

struct StructureReport
{
    int betti1 = 0;
    bool is_tree = false;
    std::optional<std::vector<int>> cycle_edges;
    std::vector<Vertex> black_branch_vertices;
    std::vector<Vertex> white_branch_vertices;
    std::vector<Vertex> terminal_vertices;
    bool trivalent = false;
};

StructureReport structure_report(const LabelledGraph& g);

struct ValidationIssue
{
    ErrorCode code;
    std::string message;
};

struct ValidationResult
{
    std::vector<ValidationIssue> errors;
    std::vector<std::string> warnings;
    std::optional<StructureReport> report;

    bool ok() const { return errors.empty(); }
};

ValidationResult validate(const LabelledGraph& g);

/// Throws StratifoldError carrying the first violation if g is invalid.
void require_valid(const LabelledGraph& g);

}  // namespace stratifold

#endif
