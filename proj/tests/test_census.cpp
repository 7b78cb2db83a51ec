#include <doctest.h>

#include <filesystem>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <twobridge/census.hpp>

#include "support.hpp"

using twobridge::census_report;
using twobridge::census_row;
using twobridge::census_to_csv;
using twobridge::census_to_json;
using twobridge::enumerate_links;
using twobridge::errc;
using twobridge::ingest_volumes;
using twobridge::integer;
using twobridge::validation_error;
using twobridge::volume_table;

namespace {

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const validation_error& e) {
        return e.code();
    }
    FAIL("expected a validation_error");
    return errc::overflow;
}

std::vector<std::pair<integer, integer>> pairs(const std::vector<twobridge::two_bridge_link>& links) {
    std::vector<std::pair<integer, integer>> out;
    for (const auto& l : links) out.emplace_back(l.p(), l.q());
    return out;
}

const census_row* find_row(const std::vector<census_row>& rows, integer p, integer q) {
    for (const auto& row : rows)
        if (row.link.p() == p && row.link.q() == q) return &row;
    return nullptr;
}

volume_table table_from(const std::string& csv) {
    std::istringstream in(csv);
    return ingest_volumes(in);
}

}  // namespace

TEST_CASE("enumerate_links lists one representative per class") {
    auto five = pairs(enumerate_links(5));
    CHECK(five == std::vector<std::pair<integer, integer>>{{2, 1}, {3, 1}, {4, 1}, {5, 1}, {5, 2}});

    auto eight = pairs(enumerate_links(8));
    CHECK(std::count(eight.begin(), eight.end(), std::pair<integer, integer>{8, 3}) == 1);
    CHECK(eight.size() == 10);

    CHECK(pairs(enumerate_links(2)) == std::vector<std::pair<integer, integer>>{{2, 1}});
    CHECK(code_of([] { enumerate_links(1); }) == errc::p_too_small);
}

TEST_CASE("class members partition the coprime residues") {
    auto links = enumerate_links(100);
    for (integer p = 2; p <= 100; ++p) {
        std::set<integer> covered;
        std::size_t total = 0;
        for (const auto& link : links) {
            if (link.p() != p) continue;
            auto cls = twobridge::equivalence_class(link);
            total += cls.size();
            covered.insert(cls.begin(), cls.end());
        }
        std::set<integer> expected;
        for (integer q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) expected.insert(q);
        REQUIRE(covered == expected);
        REQUIRE(total == expected.size());  // no overlaps between classes
    }
}

TEST_CASE("ingest_volumes reads and normalizes rows") {
    auto table = table_from("p,q,volume\n5,2,2.02988\n8,5,3.66386\n");
    CHECK(table.find(5, 2) == 2.02988);
    CHECK(table.find(8, 3) == 3.66386);  // q = 5 normalized into the class rep
    CHECK_FALSE(table.find(7, 2).has_value());

    CHECK(table_from("").entries().empty());
    CHECK(table_from("\n\n").entries().empty());
}

TEST_CASE("ingest_volumes failures carry line numbers") {
    auto check_message = [](const std::string& csv, errc code, const std::string& needle) {
        try {
            table_from(csv);
            FAIL("expected a validation_error");
        } catch (const validation_error& e) {
            CHECK(e.code() == code);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    check_message("x,y\n", errc::parse_error, "line 1");
    check_message("p,q,volume\n5,2\n", errc::parse_error, "line 2");
    check_message("p,q,volume\n5,2,2.0,9\n", errc::parse_error, "line 2");
    check_message("p,q,volume\n5,a,2.0\n", errc::parse_error, "line 2");
    check_message("p,q,volume\n5,2,abc\n", errc::parse_error, "line 2");
    check_message("p,q,volume\n6,4,2.0\n", errc::parse_error, "line 2");
    check_message("p,q,volume\n5,0,2.0\n", errc::parse_error, "line 2");
    // q = 3 is in the class of q = 2 mod 5, so this is a duplicate key
    check_message("p,q,volume\n5,2,2.0\n5,3,2.1\n", errc::duplicate_row, "line 3");

    CHECK(code_of([] { ingest_volumes(std::string{"/nonexistent/volumes.csv"}); }) ==
          errc::io_error);
}

TEST_CASE("volume quotients round with slack") {
    CHECK(twobridge::volume_lower_bound(2.02988) == 2);
    CHECK(twobridge::volume_lower_bound(3.66386) == 4);
    CHECK(twobridge::volume_lower_bound(2 * twobridge::v3) == 2);
}

TEST_CASE("census_report rows") {
    auto rows = census_report(13);
    const auto* whitehead = find_row(rows, 8, 3);
    REQUIRE(whitehead != nullptr);
    CHECK(whitehead->exact == 4);

    const auto* family4 = find_row(rows, 13, 5);
    REQUIRE(family4 != nullptr);
    CHECK(family4->exact == 6);
    CHECK(family4->report.upper_thm1 == 6);

    const auto* torus = find_row(rows, 5, 1);
    REQUIRE(torus != nullptr);
    CHECK_FALSE(torus->report.hyperbolic);
    CHECK(torus->report.lower == 0);
    CHECK(torus->effective_lower == 0);
    CHECK_FALSE(torus->exact.has_value());
}

TEST_CASE("census_report with volumes raises the effective lower bound") {
    auto table = table_from("p,q,volume\n5,2,2.02988\n8,3,3.66386\n");
    auto rows = census_report(8, &table);
    const auto* fig8 = find_row(rows, 5, 2);
    REQUIRE(fig8 != nullptr);
    CHECK(fig8->volume == 2.02988);
    CHECK(fig8->lower_from_volume == 2);
    CHECK(fig8->effective_lower == 2);
    const auto* whitehead = find_row(rows, 8, 3);
    REQUIRE(whitehead != nullptr);
    CHECK(whitehead->lower_from_volume == 4);
    CHECK(whitehead->effective_lower == 4);
    CHECK(whitehead->exact == 4);
}

TEST_CASE("census row for a larger link") {
    auto rows = census_report(121);
    const auto* row = find_row(rows, 121, 36);
    REQUIRE(row != nullptr);
    CHECK(row->report.upper_thm1 == 15);
    CHECK(row->report.lower == 8);
    CHECK(row->class_members == std::set<integer>{36, 37, 84, 85});
    CHECK_FALSE(row->exact.has_value());
}

TEST_CASE("serial and parallel census runs are byte-identical") {
    auto serial = census_report(60, nullptr, 1);
    auto parallel = census_report(60, nullptr, 4);
    CHECK(census_to_csv(serial) == census_to_csv(parallel));
    CHECK(census_to_json(serial).dump() == census_to_json(parallel).dump());
}

TEST_CASE("csv output") {
    auto rows = census_report(5);
    auto csv = census_to_csv(rows);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "p,q,cf,n,upper_thm1,upper_lemma1,upper_sw,lower,effective_lower,exact,hyperbolic");
    std::vector<std::string> body;
    while (std::getline(in, line)) body.push_back(line);
    REQUIRE(body.size() == 5);
    CHECK(body[3] == "5,1,\"[5]\",1,,,,0,0,,false");
    CHECK(body[4] == "5,2,\"[2,2]\",2,2,2,2,2,2,2,true");
}

TEST_CASE("json output structure") {
    auto rows = census_report(5);
    auto j = census_to_json(rows);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 5);
    const auto& fig8 = j.back();
    CHECK(fig8["p"] == 5);
    CHECK(fig8["q"] == 2);
    CHECK(fig8["class_members"] == nlohmann::ordered_json::array({2, 3}));
    CHECK(fig8["report"]["upper_thm1"] == 2);
    CHECK(fig8["volume"].is_null());
    CHECK(fig8["effective_lower"] == 2);
    CHECK(fig8["exact"] == 2);
}

TEST_CASE("every cor2 family member in range is marked exact") {
    auto rows = census_report(100);
    for (integer n = 2;; ++n) {
        auto [link, exact] = twobridge::cor2_family(n);
        if (link.p() > 100) break;
        const auto* row = find_row(rows, link.p(), link.q());
        REQUIRE(row != nullptr);
        REQUIRE(row->exact == exact);
    }
}
