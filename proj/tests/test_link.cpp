#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include <twobridge/link.hpp>

#include "support.hpp"

using twobridge::equivalence_class;
using twobridge::errc;
using twobridge::integer;
using twobridge::is_hyperbolic;
using twobridge::normalize;
using twobridge::normalize_step;
using twobridge::validation_error;

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

}  // namespace

TEST_CASE("normalize reduces, mirrors and expands") {
    auto a = normalize(5, 3);
    CHECK(a.p() == 5);
    CHECK(a.q() == 2);
    CHECK(a.cf().entries() == std::vector<integer>{2, 2});
    CHECK(a.trace() == std::vector<normalize_step>{normalize_step::mirror});

    auto b = normalize(8, 3);
    CHECK(b.q() == 3);
    CHECK(b.cf().entries() == std::vector<integer>{2, 1, 2});
    CHECK(b.trace().empty());

    auto c = normalize(121, 85);
    CHECK(c.q() == 36);
    CHECK(c.cf().entries() == std::vector<integer>{3, 2, 1, 3, 3});
    CHECK(c.trace() == std::vector<normalize_step>{normalize_step::mirror});
}

TEST_CASE("normalize handles q outside (0,p)") {
    auto a = normalize(5, 13);  // 13 = 3 mod 5, then mirrored to 2
    CHECK(a.q() == 2);
    CHECK(a.trace() ==
          std::vector<normalize_step>{normalize_step::reduce_mod_p, normalize_step::mirror});

    auto b = normalize(5, -2);  // -2 = 3 mod 5
    CHECK(b.q() == 2);
    CHECK(b.trace() ==
          std::vector<normalize_step>{normalize_step::reduce_mod_p, normalize_step::mirror});
}

TEST_CASE("normalize rejections") {
    CHECK(code_of([] { normalize(5, 10); }) == errc::q_divisible_by_p);
    CHECK(code_of([] { normalize(5, 0); }) == errc::q_divisible_by_p);
    CHECK(code_of([] { normalize(6, 3); }) == errc::not_coprime);
    CHECK(code_of([] { normalize(6, 9); }) == errc::not_coprime);
    CHECK(code_of([] { normalize(1, 1); }) == errc::p_too_small);
}

TEST_CASE("normalize is idempotent") {
    for (integer p = 2; p <= 100; ++p) {
        for (integer q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto link = normalize(p, q);
            auto again = normalize(link.p(), link.q());
            REQUIRE(again == link);
            REQUIRE(again.trace().empty());
        }
    }
}

TEST_CASE("equivalence_class") {
    CHECK(equivalence_class(normalize(121, 36)) == std::set<integer>{36, 37, 84, 85});
    CHECK(equivalence_class(normalize(5, 2)) == std::set<integer>{2, 3});
    CHECK(equivalence_class(normalize(2, 1)) == std::set<integer>{1});
}

TEST_CASE("equivalence_class matches a brute-force inverse and is closed") {
    for (integer p = 2; p <= 100; ++p) {
        for (integer q = 1; 2 * q <= p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto link = normalize(p, q);
            auto cls = equivalence_class(link);
            integer inv = support::brute_mod_inverse(q, p);
            REQUIRE(cls.count(inv) == 1);
            for (integer member : cls) {
                auto other = normalize(p, member);
                REQUIRE(equivalence_class(other) == cls);
            }
        }
    }
}

TEST_CASE("is_hyperbolic excludes torus links") {
    CHECK(is_hyperbolic(normalize(5, 2)));
    CHECK_FALSE(is_hyperbolic(normalize(7, 1)));
    CHECK(is_hyperbolic(normalize(8, 3)));
    CHECK_FALSE(is_hyperbolic(normalize(2, 1)));
    CHECK_FALSE(is_hyperbolic(normalize(7, 6)));  // mirrors to q = 1
}

TEST_CASE("link_from_cf requires canonical input") {
    CHECK(twobridge::link_from_cf(twobridge::continued_fraction({3, 2, 1, 3, 3})).p() == 121);
    CHECK(code_of([] {
              twobridge::link_from_cf(twobridge::continued_fraction({1, 2}));
          }) == errc::non_canonical);
    CHECK(code_of([] {
              twobridge::link_from_cf(twobridge::continued_fraction({2, 1}));
          }) == errc::non_canonical);
}
