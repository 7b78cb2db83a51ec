#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "link.hpp"

namespace twobridge {

// Volume of the regular ideal tetrahedron in hyperbolic 3-space.
inline constexpr double v3 = 1.0149416064096536;

namespace detail {

inline void require_bound_input(const continued_fraction& cf) {
    if (cf.length() < 2) fail(errc::length_too_short, "bound requires n >= 2");
    if (!cf.is_canonical()) fail(errc::non_canonical, "bound requires a_1 >= 2 and a_n >= 2");
}

}  // namespace detail

// sum a_i + 2(n-3): the true-vertex count of the glued-pillowcase spine.
inline integer lemma1_bound(const continued_fraction& cf) {
    detail::require_bound_input(cf);
    return checked_add(cf.sum(), 2 * (cf.length() - 3));
}

// sum a_i + 2(n-3) - #{a_i = 1}: each unit twist region admits one
// replacement move that removes a true vertex from the spine.
inline integer theorem1_bound(const continued_fraction& cf) {
    return lemma1_bound(cf) - cf.ones();
}

// 2 sum a_i - 6: the tetrahedron count of the Sakuma-Weeks canonical
// decomposition of the complement.
inline integer sakuma_weeks_bound(const continued_fraction& cf) {
    detail::require_bound_input(cf);
    return checked_mul(2, cf.sum()) - 6;
}

struct lower_bound_result {
    integer count;  // ceil(max{2, 2n - 2.6667}) = max{2, 2n - 2}
    double volume;  // v3 * max{2, 2n - 2.6667}, a hyperbolic volume bound
};

// Volume-based lower bound on the complexity of a hyperbolic two-bridge link
// complement: vol >= v3 * max{2, 2n - 2.6667}, and the minimal ideal
// triangulation needs at least vol / v3 tetrahedra. For hyperbolic links the
// minimal tetrahedron count equals the complexity, so taking the ceiling
// gives max{2, 2n - 2} <= c.
inline lower_bound_result lower_bound(const two_bridge_link& link) {
    if (!is_hyperbolic(link))
        fail(errc::not_hyperbolic, "lower bound unavailable: link is not hyperbolic");
    const integer n = link.cf().length();
    double raw = std::max(2.0, 2.0 * static_cast<double>(n) - 2.6667);
    return {std::max<integer>(2, 2 * n - 2), v3 * raw};
}

struct bound_report {
    two_bridge_link link;
    integer n;
    std::optional<integer> upper_thm1;
    std::optional<integer> upper_lemma1;
    std::optional<integer> upper_sw;
    integer lower = 0;
    double lower_volume = 0.0;
    std::optional<integer> exact;  // set when lower meets the best upper bound
    bool hyperbolic = false;
};

// Assembles every bound for one link. Torus links K(p,1) (n = 1) are kept
// reportable for census purposes: they get lower = 0, hyperbolic = false and
// no upper bounds, since the spine construction needs n >= 2.
inline bound_report complexity_interval(const two_bridge_link& link) {
    bound_report rep{link, link.cf().length(), {}, {}, {}, 0, 0.0, {}, false};
    if (rep.n >= 2) {
        rep.upper_lemma1 = lemma1_bound(link.cf());
        rep.upper_thm1 = theorem1_bound(link.cf());
        rep.upper_sw = sakuma_weeks_bound(link.cf());
        auto lb = lower_bound(link);
        rep.lower = lb.count;
        rep.lower_volume = lb.volume;
        rep.hyperbolic = true;
        if (rep.lower == *rep.upper_thm1) rep.exact = rep.lower;
    }
    return rep;
}

struct cover_report {
    two_bridge_link link;
    integer d;      // covering degree
    integer r;      // 1 if p is odd, 3 if p is even
    integer value;  // d * theorem1_bound + r * d
};

// Upper bound on the complexity of the meridian-cyclic branched covering of
// degree d along the link. M_1 is the 3-sphere itself, so d = 1 is rejected.
inline cover_report cover_bound(const two_bridge_link& link, integer d) {
    if (d < 2) fail(errc::cover_degree_too_small, "covering degree must be >= 2");
    integer upper = theorem1_bound(link.cf());
    integer r = (link.p() % 2 != 0) ? 1 : 3;
    integer value = checked_add(checked_mul(d, upper), checked_mul(r, d));
    return {link, d, r, value};
}

// The links [2,1,...,1,2] of length n, whose complement complexity is known
// exactly: the upper bound 2n-2 meets the volume lower bound.
inline std::pair<two_bridge_link, integer> cor2_family(integer n) {
    if (n < 2) fail(errc::length_too_short, "family needs n >= 2");
    std::vector<integer> entries(static_cast<std::size_t>(n), 1);
    entries.front() = 2;
    entries.back() = 2;
    return {link_from_cf(continued_fraction(std::move(entries))), 2 * n - 2};
}

// |a_1| + 2 sum |a_i| + |a_n| + n - 4: spine vertex count for the pretzel
// link P(a_1,...,a_n), built from n twist tangles joined by 2(n-1)+1 tubes.
inline integer pretzel_bound(const std::vector<integer>& twists) {
    if (twists.size() < 2)
        fail(errc::length_too_short, "pretzel bound needs n >= 2");
    for (integer a : twists)
        if (a == 0) fail(errc::pretzel_zero_entry, "pretzel twists must be nonzero");
    if (checked_abs(twists.front()) < 2 || checked_abs(twists.back()) < 2)
        fail(errc::pretzel_end_too_small, "pretzel bound needs |a_1| > 1 and |a_n| > 1");
    integer total = 0;
    for (integer a : twists) total = checked_add(total, checked_mul(2, checked_abs(a)));
    total = checked_add(total, checked_abs(twists.front()));
    total = checked_add(total, checked_abs(twists.back()));
    return checked_add(total, static_cast<integer>(twists.size()) - 4);
}

namespace detail {

inline nlohmann::ordered_json opt_json(const std::optional<integer>& v) {
    if (v) return *v;
    return nullptr;
}

}  // namespace detail

// Flat JSON form with stable field names.
inline nlohmann::ordered_json report_to_json(const bound_report& rep) {
    nlohmann::ordered_json j;
    j["p"] = rep.link.p();
    j["q"] = rep.link.q();
    j["cf"] = rep.link.cf().entries();
    j["n"] = rep.n;
    j["upper_thm1"] = detail::opt_json(rep.upper_thm1);
    j["upper_lemma1"] = detail::opt_json(rep.upper_lemma1);
    j["upper_sw"] = detail::opt_json(rep.upper_sw);
    j["lower"] = rep.lower;
    j["lower_volume"] = rep.lower_volume;
    j["exact"] = detail::opt_json(rep.exact);
    j["hyperbolic"] = rep.hyperbolic;
    return j;
}

inline nlohmann::ordered_json cover_to_json(const cover_report& cov) {
    nlohmann::ordered_json j;
    j["p"] = cov.link.p();
    j["q"] = cov.link.q();
    j["cf"] = cov.link.cf().entries();
    j["d"] = cov.d;
    j["r"] = cov.r;
    j["value"] = cov.value;
    return j;
}

}  // namespace twobridge
