#pragma once

#include <Eigen/Dense>

#include "lftrack/errors.hpp"

namespace lftrack {

/// Directed interconnection graph of one leader (vertex 0) and n followers.
///
/// adjacency(i,j) = 1 iff follower i+1 receives information from follower j+1
/// (arc (i,j) in the follower subgraph); leader_links(i) = 1 iff follower i+1
/// receives from the leader. Entries are binary, the diagonal is zero, and the
/// object is immutable after construction, so it can be shared freely across
/// concurrent trial workers.
class DirectedTopology {
public:
    DirectedTopology(Eigen::MatrixXi adjacency, Eigen::VectorXi leader_links);

    int follower_count() const noexcept { return static_cast<int>(adjacency_.rows()); }
    const Eigen::MatrixXi& adjacency() const noexcept { return adjacency_; }
    const Eigen::VectorXi& leader_links() const noexcept { return leader_links_; }

    /// a_ij for followers i,j (0-based).
    int arc(int i, int j) const { return adjacency_(i, j); }
    /// a_i0 (0-based follower index).
    int leader_arc(int i) const { return leader_links_(i); }

private:
    Eigen::MatrixXi adjacency_;
    Eigen::VectorXi leader_links_;
};

/// Degree matrix D, Laplacian L = D - A, and coupling matrix H = L + B.
/// Built with integer arithmetic so each row of L sums to zero exactly.
struct CouplingMatrices {
    Eigen::MatrixXd degree;
    Eigen::MatrixXd laplacian;
    Eigen::MatrixXd coupling;
};

CouplingMatrices build_coupling(const DirectedTopology& topo);

/// True iff every follower has a directed path to the leader vertex 0
/// (computed as a breadth-first search from vertex 0 over reversed arcs).
bool is_globally_reachable(const DirectedTopology& topo);

/// True iff the follower subgraph is balanced: row sums of A equal the
/// corresponding column sums. Leader links are excluded.
bool is_balanced(const DirectedTopology& topo);

} // namespace lftrack
