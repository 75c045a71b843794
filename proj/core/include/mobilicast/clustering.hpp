#ifndef MOBILICAST_CLUSTERING_HPP
#define MOBILICAST_CLUSTERING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mobilicast/markov.hpp"

namespace mobilicast
{

// One agglomeration step. Node ids follow the usual convention: ids below n
// are input items in their original order, id n + i is the cluster created by
// merges[i]. cluster_a < cluster_b always.
struct Merge {
    std::size_t cluster_a = 0;
    std::size_t cluster_b = 0;
    double height = 0.0;   // Ward dissimilarity of the merged pair
    std::size_t new_size = 0;

    bool operator==(const Merge&) const = default;
};

// Full agglomeration history over n labeled items: exactly n - 1 merges with
// nondecreasing heights.
struct Dendrogram {
    std::vector<std::string> labels; // input order
    std::vector<Merge> merges;

    std::size_t size() const { return labels.size(); }

    // Partition after undoing the last k - 1 merges. Cluster ids are assigned
    // 0..k-1 in order of each cluster's smallest member index. Throws
    // InvalidK unless 1 <= k <= size().
    std::vector<int> labels_for_k(std::size_t k) const;
};

struct LabeledVector {
    std::string label;
    std::vector<double> values;
};

struct ClusterResult {
    Dendrogram dendrogram;
    std::vector<int> assignments; // labels_for_k(k) for the requested k
};

// Row-major flattening of a first-order model's probability matrix in
// canonical type order (cell (a, b) lands at a * n + b). Throws ShapeMismatch
// for any other order.
std::vector<double> flatten(const TransitionModel& model);

// Agglomerative clustering with Ward linkage, computed via the Lance-Williams
// update on squared Euclidean distances. Equal-distance candidate pairs are
// broken by the clusters' representative labels (lexicographically smallest
// member label), so the partition at every k is invariant under permutation
// of the input order. Throws ShapeMismatch on fewer than two vectors or
// unequal lengths, InvalidK unless 1 <= k <= n.
ClusterResult ward_cluster(const std::vector<LabeledVector>& vectors, std::size_t k);

} // namespace mobilicast

#endif
