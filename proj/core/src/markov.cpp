#include "mobilicast/markov.hpp"

#include <cmath>
#include <string>

#include "mobilicast/errors.hpp"

namespace mobilicast
{

std::size_t TransitionModel::row_count() const
{
    const std::size_t n = n_types();
    return order == 1 ? n : n * n;
}

std::vector<int> TransitionModel::context_of_row(std::size_t row) const
{
    const std::size_t n = n_types();
    if (order == 1) {
        return {static_cast<int>(row)};
    }
    return {static_cast<int>(row / n), static_cast<int>(row % n)};
}

std::size_t TransitionModel::row_of_context(std::span<const int> context) const
{
    const std::size_t n = n_types();
    if (context.size() != static_cast<std::size_t>(order)) {
        throw InvalidRange("context length " + std::to_string(context.size()) + " != order " +
                           std::to_string(order));
    }
    std::size_t row = 0;
    for (int t : context) {
        if (t < 0 || static_cast<std::size_t>(t) >= n) {
            throw InvalidRange("type index " + std::to_string(t) + " out of range");
        }
        row = row * n + static_cast<std::size_t>(t);
    }
    return row;
}

std::uint64_t TransitionModel::total_transitions() const
{
    std::uint64_t total = 0;
    for (const auto& row : counts) {
        for (std::uint64_t c : row) {
            total += c;
        }
    }
    return total;
}

TransitionModel make_empty_model(TypeScheme scheme, int order)
{
    if (order != 1 && order != 2) {
        throw InvalidConfig("transition model order must be 1 or 2, got " + std::to_string(order));
    }
    TransitionModel m;
    m.scheme = scheme;
    m.order = order;
    const std::size_t rows = m.row_count();
    const std::size_t n = m.n_types();
    m.counts.assign(rows, std::vector<std::uint64_t>(n, 0));
    m.probs.assign(rows, std::vector<double>(n, 0.0));
    return m;
}

void add_sequence(TransitionModel& model, std::span<const int> sequence)
{
    const std::size_t ord = static_cast<std::size_t>(model.order);
    if (sequence.size() < ord + 1) {
        return;
    }
    for (std::size_t i = 0; i + ord < sequence.size(); ++i) {
        const std::size_t row = model.row_of_context(sequence.subspan(i, ord));
        const int next = sequence[i + ord];
        if (next < 0 || static_cast<std::size_t>(next) >= model.n_types()) {
            throw InvalidRange("type index " + std::to_string(next) + " out of range");
        }
        ++model.counts[row][static_cast<std::size_t>(next)];
    }
}

void finalize_probabilities(TransitionModel& model)
{
    for (std::size_t r = 0; r < model.counts.size(); ++r) {
        std::uint64_t row_total = 0;
        for (std::uint64_t c : model.counts[r]) {
            row_total += c;
        }
        for (std::size_t j = 0; j < model.counts[r].size(); ++j) {
            model.probs[r][j] =
                row_total == 0 ? 0.0
                               : static_cast<double>(model.counts[r][j]) / static_cast<double>(row_total);
        }
    }
}

void validate_transition_model(const TransitionModel& model)
{
    if (model.order != 1 && model.order != 2) {
        throw InvalidConfig("transition model order must be 1 or 2");
    }
    const std::size_t rows = model.row_count();
    const std::size_t n = model.n_types();
    if (model.probs.size() != rows || model.counts.size() != rows) {
        throw InvalidConfig("transition model has wrong row count");
    }
    for (std::size_t r = 0; r < rows; ++r) {
        if (model.probs[r].size() != n || model.counts[r].size() != n) {
            throw InvalidConfig("transition model row " + std::to_string(r) + " has wrong width");
        }
        double sum = 0.0;
        for (double p : model.probs[r]) {
            if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
                throw InvalidConfig("transition probability out of [0, 1] in row " + std::to_string(r));
            }
            sum += p;
        }
        if (sum != 0.0 && std::abs(sum - 1.0) > 1e-9) {
            throw InvalidConfig("transition row " + std::to_string(r) + " sums to " + std::to_string(sum));
        }
    }
}

double frobenius_diff(const TransitionModel& a, const TransitionModel& b)
{
    if (a.scheme != b.scheme) {
        throw SchemeMismatch("frobenius_diff: models built under different type schemes");
    }
    if (a.order != b.order) {
        throw ShapeMismatch("frobenius_diff: models differ in order");
    }
    double sum_sq = 0.0;
    for (std::size_t r = 0; r < a.probs.size(); ++r) {
        for (std::size_t j = 0; j < a.probs[r].size(); ++j) {
            const double d = a.probs[r][j] - b.probs[r][j];
            sum_sq += d * d;
        }
    }
    return std::sqrt(sum_sq);
}

} // namespace mobilicast
