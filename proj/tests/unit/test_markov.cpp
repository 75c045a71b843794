#include "doctest.h"

#include <array>
#include <cmath>
#include <vector>

#include "mobilicast/errors.hpp"
#include "mobilicast/markov.hpp"
#include "mobilicast/taxonomy.hpp"

using mobilicast::make_empty_model;
using mobilicast::TransitionModel;
using mobilicast::TypeScheme;

namespace
{

constexpr int kHome = 0;
constexpr int kWork = 1;
constexpr int kShopping = 6;

TransitionModel home_work_shopping_model(int order)
{
    // Two Home-Work-Home days and one Home-Shopping-Home day.
    TransitionModel m = make_empty_model(TypeScheme::Eleven, order);
    const std::array<int, 3> hwh = {kHome, kWork, kHome};
    const std::array<int, 3> hsh = {kHome, kShopping, kHome};
    mobilicast::add_sequence(m, hwh);
    mobilicast::add_sequence(m, hwh);
    mobilicast::add_sequence(m, hsh);
    mobilicast::finalize_probabilities(m);
    return m;
}

} // namespace

TEST_CASE("empty models materialize every context row")
{
    const TransitionModel m1 = make_empty_model(TypeScheme::Eleven, 1);
    CHECK(m1.row_count() == 11);
    CHECK(m1.probs.size() == 11);
    CHECK(m1.counts.size() == 11);
    CHECK(m1.n_types() == 11);

    const TransitionModel m2 = make_empty_model(TypeScheme::Eleven, 2);
    CHECK(m2.row_count() == 121);

    CHECK(make_empty_model(TypeScheme::Six, 1).row_count() == 6);
    CHECK(make_empty_model(TypeScheme::Six, 2).row_count() == 36);
}

TEST_CASE("first-order probabilities from counted sequences")
{
    const TransitionModel m = home_work_shopping_model(1);
    CHECK(m.probs[kHome][kWork] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(m.probs[kHome][kShopping] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(m.probs[kWork][kHome] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.probs[kShopping][kHome] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.counts[kHome][kWork] == 2);
    CHECK(m.counts[kHome][kShopping] == 1);
    CHECK(m.total_transitions() == 6);

    // Never-observed context rows stay all-zero.
    for (double v : m.probs[2]) {
        CHECK(v == 0.0);
    }
    CHECK_NOTHROW(mobilicast::validate_transition_model(m));
}

TEST_CASE("second-order probabilities key on ordered context pairs")
{
    const TransitionModel m = home_work_shopping_model(2);
    const std::array<int, 2> home_work = {kHome, kWork};
    const std::size_t row = m.row_of_context(home_work);
    CHECK(row == static_cast<std::size_t>(kHome) * 11 + kWork);
    CHECK(m.probs[row][kHome] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.total_transitions() == 3);
}

TEST_CASE("context and row translation invert each other")
{
    const TransitionModel m1 = make_empty_model(TypeScheme::Eleven, 1);
    CHECK(m1.context_of_row(4) == std::vector<int>{4});
    const std::array<int, 1> four = {4};
    CHECK(m1.row_of_context(four) == 4);

    const TransitionModel m2 = make_empty_model(TypeScheme::Eleven, 2);
    for (std::size_t row : {std::size_t{0}, std::size_t{17}, std::size_t{120}}) {
        const auto ctx = m2.context_of_row(row);
        REQUIRE(ctx.size() == 2);
        CHECK(m2.row_of_context(ctx) == row);
    }

    const std::array<int, 2> bad = {11, 0};
    CHECK_THROWS_AS(m2.row_of_context(bad), mobilicast::InvalidRange);
    const std::array<int, 1> wrong_arity = {3};
    CHECK_THROWS_AS(m2.row_of_context(wrong_arity), mobilicast::InvalidRange);
}

TEST_CASE("sequences shorter than order plus one contribute nothing")
{
    TransitionModel m1 = make_empty_model(TypeScheme::Eleven, 1);
    const std::array<int, 1> single = {kHome};
    mobilicast::add_sequence(m1, single);
    mobilicast::finalize_probabilities(m1);
    CHECK(m1.total_transitions() == 0);

    TransitionModel m2 = make_empty_model(TypeScheme::Eleven, 2);
    const std::array<int, 2> pair = {kHome, kWork};
    mobilicast::add_sequence(m2, pair);
    mobilicast::finalize_probabilities(m2);
    CHECK(m2.total_transitions() == 0);
}

TEST_CASE("frobenius distance matches hand arithmetic")
{
    TransitionModel a = make_empty_model(TypeScheme::Eleven, 1);
    TransitionModel b = make_empty_model(TypeScheme::Eleven, 1);
    CHECK(mobilicast::frobenius_diff(a, b) == 0.0);

    a.probs[0][1] = 0.6;
    a.probs[0][2] = 0.4;
    b.probs[0][1] = 0.5;
    b.probs[0][2] = 0.5;
    // Two cells differ by +/- 0.1.
    CHECK(mobilicast::frobenius_diff(a, b) == doctest::Approx(std::sqrt(0.02)).epsilon(1e-12));
    CHECK(mobilicast::frobenius_diff(a, b) == mobilicast::frobenius_diff(b, a));

    const TransitionModel self = home_work_shopping_model(1);
    CHECK(mobilicast::frobenius_diff(self, self) == 0.0);
}

TEST_CASE("mismatched models are rejected by kind")
{
    const TransitionModel eleven = make_empty_model(TypeScheme::Eleven, 1);
    const TransitionModel six = make_empty_model(TypeScheme::Six, 1);
    const TransitionModel second = make_empty_model(TypeScheme::Eleven, 2);

    CHECK_THROWS_AS(mobilicast::frobenius_diff(eleven, six), mobilicast::SchemeMismatch);
    // A scheme mismatch is a shape mismatch, so callers handling shape
    // problems catch both.
    CHECK_THROWS_AS(mobilicast::frobenius_diff(eleven, six), mobilicast::ShapeMismatch);
    CHECK_THROWS_AS(mobilicast::frobenius_diff(eleven, second), mobilicast::ShapeMismatch);

    try {
        mobilicast::frobenius_diff(eleven, six);
        FAIL("expected a scheme mismatch");
    }
    catch (const mobilicast::Error& e) {
        CHECK(e.kind() == "SchemeMismatch");
    }
}

TEST_CASE("validation flags malformed probability rows")
{
    TransitionModel m = home_work_shopping_model(1);
    m.probs[kHome][kWork] = 0.9; // row no longer sums to 1
    CHECK_THROWS_AS(mobilicast::validate_transition_model(m), mobilicast::InvalidConfig);
}
