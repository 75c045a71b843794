#include "mobilicast/clustering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "mobilicast/errors.hpp"

namespace mobilicast
{

namespace
{

double squared_distance(const std::vector<double>& a, const std::vector<double>& b)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

struct ActiveCluster {
    std::size_t node = 0;      // dendrogram node id
    std::size_t size = 0;
    std::string min_label;     // lexicographically smallest member label
    std::size_t min_index = 0; // smallest member input index
};

// Union-find over dendrogram node ids with path compression.
struct Forest {
    std::vector<std::size_t> parent;

    explicit Forest(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
};

} // namespace

std::vector<int> Dendrogram::labels_for_k(std::size_t k) const
{
    const std::size_t n = labels.size();
    if (k < 1 || k > n) {
        throw InvalidK("k must be in [1, " + std::to_string(n) + "], got " + std::to_string(k));
    }

    Forest forest(n + merges.size());
    for (std::size_t i = 0; i + k < n && i < merges.size(); ++i) {
        const std::size_t node = n + i;
        forest.parent[forest.find(merges[i].cluster_a)] = node;
        forest.parent[forest.find(merges[i].cluster_b)] = node;
    }

    // Number clusters by first appearance over ascending input index.
    std::vector<int> out(n, -1);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = forest.find(i);
        auto it = std::find(roots.begin(), roots.end(), root);
        if (it == roots.end()) {
            roots.push_back(root);
            it = roots.end() - 1;
        }
        out[i] = static_cast<int>(it - roots.begin());
    }
    return out;
}

std::vector<double> flatten(const TransitionModel& model)
{
    if (model.order != 1) {
        throw ShapeMismatch("flatten expects an order-1 model, got order " +
                            std::to_string(model.order));
    }
    const std::size_t n = model.n_types();
    std::vector<double> out;
    out.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            out.push_back(model.probs[a][b]);
        }
    }
    return out;
}

ClusterResult ward_cluster(const std::vector<LabeledVector>& vectors, std::size_t k)
{
    const std::size_t n = vectors.size();
    if (n < 2) {
        throw ShapeMismatch("ward_cluster needs at least 2 vectors, got " + std::to_string(n));
    }
    const std::size_t dim = vectors[0].values.size();
    for (const auto& v : vectors) {
        if (v.values.size() != dim) {
            throw ShapeMismatch("vector '" + v.label + "' has length " +
                                std::to_string(v.values.size()) + ", expected " +
                                std::to_string(dim));
        }
    }
    if (k < 1 || k > n) {
        throw InvalidK("k must be in [1, " + std::to_string(n) + "], got " + std::to_string(k));
    }

    ClusterResult result;
    result.dendrogram.labels.reserve(n);
    for (const auto& v : vectors) {
        result.dendrogram.labels.push_back(v.label);
    }

    // Dissimilarities between active clusters, keyed by position in `active`.
    std::vector<ActiveCluster> active;
    active.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        active.push_back({i, 1, vectors[i].label, i});
    }
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            dist[i][j] = dist[j][i] = squared_distance(vectors[i].values, vectors[j].values);
        }
    }

    result.dendrogram.merges.reserve(n - 1);
    for (std::size_t step = 0; step + 1 < n; ++step) {
        // Closest active pair; ties decided by the sorted representative
        // labels so the outcome ignores input order, then by member indices
        // in case of duplicate labels.
        std::size_t best_i = 0;
        std::size_t best_j = 1;
        double best = std::numeric_limits<double>::infinity();
        auto tie_key = [&](std::size_t i, std::size_t j) {
            const ActiveCluster& a = active[i];
            const ActiveCluster& b = active[j];
            const bool a_first =
                std::tie(a.min_label, a.min_index) < std::tie(b.min_label, b.min_index);
            const ActiveCluster& lo = a_first ? a : b;
            const ActiveCluster& hi = a_first ? b : a;
            return std::make_tuple(lo.min_label, lo.min_index, hi.min_label, hi.min_index);
        };
        for (std::size_t i = 0; i < active.size(); ++i) {
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                const double d = dist[i][j];
                if (d < best || (d == best && tie_key(i, j) < tie_key(best_i, best_j))) {
                    best = d;
                    best_i = i;
                    best_j = j;
                }
            }
        }

        const ActiveCluster a = active[best_i];
        const ActiveCluster b = active[best_j];
        const std::size_t merged_node = n + step;
        result.dendrogram.merges.push_back({std::min(a.node, b.node), std::max(a.node, b.node),
                                            best, a.size + b.size});

        // Lance-Williams (Ward): d(A∪B, C) =
        //   ((|A|+|C|) d(A,C) + (|B|+|C|) d(B,C) − |C| d(A,B)) / (|A|+|B|+|C|)
        for (std::size_t c = 0; c < active.size(); ++c) {
            if (c == best_i || c == best_j) {
                continue;
            }
            const double nc = static_cast<double>(active[c].size);
            const double na = static_cast<double>(a.size);
            const double nb = static_cast<double>(b.size);
            dist[best_i][c] = dist[c][best_i] =
                ((na + nc) * dist[best_i][c] + (nb + nc) * dist[best_j][c] - nc * best) /
                (na + nb + nc);
        }

        active[best_i].node = merged_node;
        active[best_i].size = a.size + b.size;
        active[best_i].min_label = std::min(a.min_label, b.min_label);
        active[best_i].min_index = std::min(a.min_index, b.min_index);

        // Drop slot best_j by swapping in the last active cluster.
        const std::size_t last = active.size() - 1;
        if (best_j != last) {
            active[best_j] = active[last];
            for (std::size_t c = 0; c < active.size(); ++c) {
                dist[best_j][c] = dist[c][best_j] = dist[last][c];
            }
            dist[best_j][best_j] = 0.0;
        }
        active.pop_back();
    }

    result.assignments = result.dendrogram.labels_for_k(k);
    return result;
}

} // namespace mobilicast
