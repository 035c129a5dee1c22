#include "lftrack/topology.hpp"

#include <string>
#include <vector>

namespace lftrack {

DirectedTopology::DirectedTopology(Eigen::MatrixXi adjacency, Eigen::VectorXi leader_links)
    : adjacency_(std::move(adjacency)), leader_links_(std::move(leader_links)) {
    const auto n = adjacency_.rows();
    if (n == 0 || adjacency_.cols() != n) {
        throw ValidationError("adjacency must be a nonempty square matrix, got " +
                              std::to_string(adjacency_.rows()) + "x" +
                              std::to_string(adjacency_.cols()));
    }
    if (leader_links_.size() != n) {
        throw ValidationError("leader_links has length " + std::to_string(leader_links_.size()) +
                              ", expected " + std::to_string(n));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const int a = adjacency_(i, j);
            if (a != 0 && a != 1) {
                throw ValidationError("adjacency(" + std::to_string(i) + "," + std::to_string(j) +
                                      ") = " + std::to_string(a) + "; entries must be 0 or 1");
            }
            if (i == j && a != 0) {
                throw ValidationError("adjacency(" + std::to_string(i) + "," + std::to_string(i) +
                                      ") = " + std::to_string(a) + "; self-loops are not allowed");
            }
        }
        const int b = leader_links_(i);
        if (b != 0 && b != 1) {
            throw ValidationError("leader_links(" + std::to_string(i) + ") = " + std::to_string(b) +
                                  "; entries must be 0 or 1");
        }
    }
}

CouplingMatrices build_coupling(const DirectedTopology& topo) {
    const int n = topo.follower_count();
    const Eigen::MatrixXi& a = topo.adjacency();

    Eigen::MatrixXi degree = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i) degree(i, i) = a.row(i).sum();

    const Eigen::MatrixXi laplacian = degree - a;
    Eigen::MatrixXi coupling = laplacian;
    for (int i = 0; i < n; ++i) coupling(i, i) += topo.leader_arc(i);

    return CouplingMatrices{degree.cast<double>(), laplacian.cast<double>(),
                            coupling.cast<double>()};
}

bool is_globally_reachable(const DirectedTopology& topo) {
    const int n = topo.follower_count();
    // BFS from vertex 0 over reversed arcs: 0 -> i when a_i0 = 1, j -> i when a_ij = 1.
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> frontier;
    for (int i = 0; i < n; ++i) {
        if (topo.leader_arc(i) == 1) {
            seen[static_cast<size_t>(i)] = 1;
            frontier.push_back(i);
        }
    }
    while (!frontier.empty()) {
        const int j = frontier.back();
        frontier.pop_back();
        for (int i = 0; i < n; ++i) {
            if (!seen[static_cast<size_t>(i)] && topo.arc(i, j) == 1) {
                seen[static_cast<size_t>(i)] = 1;
                frontier.push_back(i);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!seen[static_cast<size_t>(i)]) return false;
    }
    return true;
}

bool is_balanced(const DirectedTopology& topo) {
    const Eigen::MatrixXi& a = topo.adjacency();
    const int n = topo.follower_count();
    for (int i = 0; i < n; ++i) {
        if (a.row(i).sum() != a.col(i).sum()) return false;
    }
    return true;
}

} // namespace lftrack
