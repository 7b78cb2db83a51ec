#pragma once

#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "continued_fraction.hpp"

namespace twobridge {

enum class normalize_step { reduce_mod_p, mirror, fold };

inline const char* to_string(normalize_step s) {
    switch (s) {
        case normalize_step::reduce_mod_p: return "reduce-mod-p";
        case normalize_step::mirror: return "mirror";
        case normalize_step::fold: return "fold";
    }
    return "?";
}

class two_bridge_link;
two_bridge_link normalize(integer p, integer q);
two_bridge_link link_from_cf(const continued_fraction& cf);

/**
 * Two-bridge link K(p,q), stored in normalized form:
 * gcd(p,q) = 1, 1 <= q <= p - q, and cf is the canonical expansion of p/q.
 * The trace records which normalization steps were applied to reach it.
 */
class two_bridge_link {
public:
    integer p() const noexcept { return p_; }
    integer q() const noexcept { return q_; }
    const continued_fraction& cf() const noexcept { return cf_; }
    const std::vector<normalize_step>& trace() const noexcept { return trace_; }

    // The trace is provenance, not identity.
    friend bool operator==(const two_bridge_link& a, const two_bridge_link& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.cf_ == b.cf_;
    }

private:
    two_bridge_link(integer p, integer q, continued_fraction cf,
                    std::vector<normalize_step> trace)
        : p_(p), q_(q), cf_(std::move(cf)), trace_(std::move(trace)) {}

    friend two_bridge_link normalize(integer p, integer q);
    friend two_bridge_link link_from_cf(const continued_fraction& cf);

    integer p_;
    integer q_;
    continued_fraction cf_;
    std::vector<normalize_step> trace_;
};

// Reduces q into (0,p), mirrors to q <= p - q (the mirror image has a
// homeomorphic complement), and expands. q may be negative or exceed p.
inline two_bridge_link normalize(integer p, integer q) {
    if (p < 2) fail(errc::p_too_small, "p must be >= 2");
    std::vector<normalize_step> trace;
    integer r = floor_mod(q, p);
    if (r == 0) fail(errc::q_divisible_by_p, "q must not be divisible by p");
    if (r != q) trace.push_back(normalize_step::reduce_mod_p);
    if (std::gcd(p, r) != 1) fail(errc::not_coprime, "p and q must be coprime");
    if (r > p - r) {
        r = p - r;
        trace.push_back(normalize_step::mirror);
    }
    auto ex = detail::cf_expand_impl(p, r);
    if (ex.folded) trace.push_back(normalize_step::fold);
    return two_bridge_link(p, r, std::move(ex.cf), std::move(trace));
}

// Builds the link whose canonical expansion is cf. Since a_1 >= 2 forces
// q < p/2, the result is already normalized and carries an empty trace.
inline two_bridge_link link_from_cf(const continued_fraction& cf) {
    if (!cf.is_canonical())
        fail(errc::non_canonical, "continued fraction must have a_1 >= 2 and a_n >= 2");
    auto [p, q] = cf_value(cf);
    return two_bridge_link(p, q, cf, {});
}

// The q-values whose links have homeomorphic complements up to mirror image:
// {q, p-q, q^{-1} mod p, p - q^{-1} mod p}. The canonical class
// representative is the minimum.
inline std::set<integer> equivalence_class(const two_bridge_link& link) {
    integer p = link.p();
    integer q = link.q();
    integer inv = mod_inverse(q, p);
    return {q, p - q, inv, p - inv};
}

// Torus links K(p,1) are the only non-hyperbolic two-bridge links; the
// criterion q != +-1 (mod p) comes from standard two-bridge theory, and
// after normalization it is equivalent to the expansion having n >= 2.
inline bool is_hyperbolic(const two_bridge_link& link) {
    return link.cf().length() >= 2;
}

}  // namespace twobridge
