#ifndef COMAX_GRAPH_HPP
#define COMAX_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "comax/config.hpp"

namespace comax {

/// Simple undirected graph with bit-packed adjacency rows.  Construction is
/// single-threaded; once built, graphs are treated as immutable and are safe
/// to share across threads.
class CompactGraph {
public:
    CompactGraph() = default;
    explicit CompactGraph(int order);

    int order() const { return order_; }
    int words_per_row() const { return words_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::size_t edge_count() const;

    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    template <typename F>
    void for_each_neighbor(int v, F&& fn) const {
        auto r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = r[static_cast<std::size_t>(w)];
            while (word) {
                const int bit = __builtin_ctzll(word);
                fn(w * 64 + bit);
                word &= word - 1;
            }
        }
    }

    /// Optional per-vertex annotation (ring element or divisor-class tag);
    /// empty when unused, otherwise one entry per vertex.
    std::vector<std::int64_t> labels;

    /// Edge-set equality on equally sized vertex sets (labels ignored).
    friend bool operator==(const CompactGraph& a, const CompactGraph& b) {
        return a.order_ == b.order_ && a.bits_ == b.bits_;
    }

private:
    void check_vertex(int v) const;

    int order_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

CompactGraph complete_graph(int k);
CompactGraph empty_graph(int k);
CompactGraph complement(const CompactGraph& g);
CompactGraph disjoint_union(const CompactGraph& a, const CompactGraph& b);

/// Join: disjoint union plus all edges between the two sides; a's vertices
/// come first in the result.
CompactGraph join(const CompactGraph& a, const CompactGraph& b);

/// Replaces quotient vertex i by an independent cell of sizes[i] vertices;
/// cells are fully joined exactly when their quotient vertices are adjacent.
/// Result labels carry the owning quotient vertex index.
CompactGraph blow_up(const CompactGraph& quotient, std::span<const std::int64_t> sizes);

CompactGraph induced_subgraph(const CompactGraph& g, std::span<const int> vertices);

/// Vertex partition of the comaximal graph of Z_n: units, {0}, and one class
/// A_d per proper divisor d (0 belongs to no A_d).
struct DivisorPartition {
    struct Cell {
        std::int64_t divisor;
        std::vector<std::int64_t> members;
    };

    std::int64_t n = 0;
    std::vector<std::int64_t> units;
    std::int64_t zero = 0;
    std::vector<Cell> classes;  // ascending divisor order
};

DivisorPartition divisor_partition(std::int64_t n);

struct ComaximalGraph {
    CompactGraph graph;
    DivisorPartition partition;
};

/// Vertices 0..n-1; distinct a, b adjacent iff gcd(gcd(a,n), gcd(b,n)) = 1,
/// the Z_n reading of "the ideals generated by a and b sum to the ring".
ComaximalGraph comaximal_graph_direct(std::int64_t n, const RunConfig& cfg = {});

/// Graph on the proper divisors of n (ascending), adjacent iff coprime.
/// Labels carry the divisor values.  Primes get the empty graph.
CompactGraph divisor_graph(std::int64_t n);

/// Assembles the comaximal graph as clique-over-units joined onto
/// ({0} plus the blown-up divisor graph), then relabels cells back to ring
/// elements so the result is vertex-for-vertex identical to the direct
/// construction, not merely isomorphic.
CompactGraph comaximal_graph_structured(std::int64_t n, const RunConfig& cfg = {});

}  // namespace comax

#endif
