#include "doctest.h"

#include "mobilicast/date.hpp"
#include "mobilicast/errors.hpp"

using mobilicast::Date;

TEST_CASE("parse and format round-trip")
{
    const Date d = mobilicast::parse_date("2016-05-05");
    CHECK(d.year == 2016);
    CHECK(d.month == 5);
    CHECK(d.day == 5);
    CHECK(mobilicast::format_date(d) == "2016-05-05");
    CHECK(mobilicast::format_date(Date{9, 1, 2}) == "0009-01-02");
}

TEST_CASE("weekday names follow the civil calendar")
{
    CHECK(mobilicast::weekday_name(Date{2016, 5, 5}) == "Thursday");
    CHECK(mobilicast::weekday_name(Date{2017, 4, 25}) == "Tuesday");
    CHECK(mobilicast::weekday_name(Date{2016, 2, 29}) == "Monday");
    CHECK(mobilicast::weekday_name(Date{2016, 12, 31}) == "Saturday");
}

TEST_CASE("leap years are honored")
{
    CHECK(mobilicast::is_valid_date(Date{2016, 2, 29}));
    CHECK_FALSE(mobilicast::is_valid_date(Date{2017, 2, 29}));
    CHECK_THROWS_AS(mobilicast::parse_date("2017-02-29"), mobilicast::ParseFailure);
    CHECK_NOTHROW(mobilicast::parse_date("2016-02-29"));
}

TEST_CASE("malformed date text is rejected")
{
    CHECK_THROWS_AS(mobilicast::parse_date("2016-5-05"), mobilicast::ParseFailure);
    CHECK_THROWS_AS(mobilicast::parse_date("20160505"), mobilicast::ParseFailure);
    CHECK_THROWS_AS(mobilicast::parse_date("2016-13-01"), mobilicast::ParseFailure);
    CHECK_THROWS_AS(mobilicast::parse_date("2016-00-10"), mobilicast::ParseFailure);
    CHECK_THROWS_AS(mobilicast::parse_date("2016-01-32"), mobilicast::ParseFailure);
    CHECK_THROWS_AS(mobilicast::parse_date("2016-01-05x"), mobilicast::ParseFailure);
    CHECK_THROWS_AS(mobilicast::parse_date(""), mobilicast::ParseFailure);
    CHECK_THROWS_AS(mobilicast::parse_date("not a date"), mobilicast::ParseFailure);
}

TEST_CASE("day arithmetic crosses month and year boundaries")
{
    CHECK(mobilicast::days_between(Date{2016, 4, 19}, Date{2017, 4, 25}) == 371);
    CHECK(mobilicast::days_between(Date{2016, 2, 28}, Date{2016, 3, 1}) == 2);
    CHECK(mobilicast::days_between(Date{2016, 3, 1}, Date{2016, 2, 28}) == -2);
    CHECK(mobilicast::add_days(Date{2016, 12, 31}, 1) == Date{2017, 1, 1});
    CHECK(mobilicast::add_days(Date{2016, 2, 28}, 1) == Date{2016, 2, 29});
    CHECK(mobilicast::add_days(Date{2016, 1, 1}, 371) == Date{2017, 1, 6});
}

TEST_CASE("dates order chronologically")
{
    CHECK(Date{2016, 4, 19} < Date{2016, 4, 20});
    CHECK(Date{2016, 4, 19} < Date{2016, 5, 1});
    CHECK(Date{2016, 12, 31} < Date{2017, 1, 1});
    CHECK(Date{2016, 4, 19} == Date{2016, 4, 19});
}
