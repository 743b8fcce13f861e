#ifndef PARCELFORGE_INSTANCE_HPP
#define PARCELFORGE_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include <parcelforge/graph.hpp>
#include <parcelforge/ints.hpp>

namespace parcelforge {

enum class Repr { GraphVertex, GraphCycle, TuMatrix, GfpMatrix };

/*
 * A ground-set instance: a coefficient matrix with columns indexed by E,
 * either derived from an oriented graph (vertex-edge or cycle-edge side),
 * supplied as a totally unimodular integer matrix, or supplied over GF(p).
 * Immutable after construction.
 */
struct Instance {
    std::string name;
    Repr repr = Repr::TuMatrix;
    int p = 0;  // prime, GfpMatrix only
    std::optional<OrientedGraph> graph;
    std::vector<std::vector<int>> rows;  // derived for graph sides
    int ground = 0;
    int rank_full = 0;

    bool is_gfp() const { return repr == Repr::GfpMatrix; }
    bool is_graph() const { return repr == Repr::GraphVertex || repr == Repr::GraphCycle; }
    int row_count() const { return static_cast<int>(rows.size()); }
};

Instance make_graph_instance(std::string name, const OrientedGraph& g, bool cycle_side);
Instance make_tu_instance(std::string name, std::vector<std::vector<int>> rows,
                          bool trust_tu = false);
Instance make_gfp_instance(std::string name, int p, std::vector<std::vector<int>> rows);

// JSON instance file; format documented in the CLI.
Instance parse_instance(const std::string& text, const std::string& name = "instance",
                        bool trust_tu = false);

// Exact rank of the column submatrix selected by mask: fraction-free
// (Bareiss) elimination over Z for TU/graph instances, mod-p elimination for
// GF(p) instances.
int subset_rank(const Instance& inst, std::uint32_t mask);

// Null-space basis instance of a GF(p) instance; M(dual) = M(inst)^perp.
Instance orthogonal_dual_gfp(const Instance& inst);

// Orthogonal dual within the TU world: the opposite side for graph
// instances, an integer null-space basis (unit-pivot elimination) for TU
// matrices.
Instance orthogonal_dual_tu(const Instance& inst);

// Reinterpret a TU/graph instance over GF(p) (entries reduced mod p); the
// column matroid is unchanged because TU subdeterminants are 0 or +-1.
Instance reduce_mod_p(const Instance& inst, int p);

// Exhaustive total-unimodularity check (all square minors in {-1,0,1}).
bool is_totally_unimodular(const std::vector<std::vector<int>>& rows);

// Ground-set symmetries used by the invariance tests.
Instance negate_column(const Instance& inst, int col);
Instance permute_columns(const Instance& inst, const std::vector<int>& perm);
Instance reorient_edge(const Instance& inst, int edge);  // graph instances

bool is_prime(int p);

} // namespace parcelforge

#endif
