#ifndef MOBILICAST_MARKOV_HPP
#define MOBILICAST_MARKOV_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mobilicast/taxonomy.hpp"

namespace mobilicast
{

// Row-stochastic transition matrix over collapsed location types.
//
// Rows are contexts, columns are successor types. For order 1 there is one
// row per type; for order 2 there is one row per ordered type pair (a, b)
// laid out at row a * n + b. Every context row is materialized even when its
// count is zero, so two models estimated from different corpora always align
// cell-for-cell.
struct TransitionModel {
    TypeScheme scheme = TypeScheme::Eleven;
    int order = 1; // 1 or 2
    std::vector<std::vector<std::uint64_t>> counts; // rows x n_types
    std::vector<std::vector<double>> probs; // counts normalized per row; zero rows stay zero

    std::size_t n_types() const
    {
        return scheme_size(scheme);
    }

    std::size_t row_count() const;

    // The context (1 or 2 type indices) that a row index encodes.
    std::vector<int> context_of_row(std::size_t row) const;

    // Inverse of context_of_row. Throws InvalidRange on bad indices.
    std::size_t row_of_context(std::span<const int> context) const;

    std::uint64_t total_transitions() const;
};

// All-zero model of the right shape.
TransitionModel make_empty_model(TypeScheme scheme, int order);

// Counts the transitions of one collapsed type sequence into the model.
// A sequence shorter than order+1 contributes nothing.
void add_sequence(TransitionModel& model, std::span<const int> sequence);

// Recomputes probs from counts (rows with zero observations stay all-zero).
void finalize_probabilities(TransitionModel& model);

// Shape/normalization sanity check; throws InvalidConfig on violations.
void validate_transition_model(const TransitionModel& model);

// Frobenius norm of the elementwise difference of the probability matrices.
// Throws SchemeMismatch when the schemes differ, ShapeMismatch on order.
double frobenius_diff(const TransitionModel& a, const TransitionModel& b);

} // namespace mobilicast

#endif // MOBILICAST_MARKOV_HPP
