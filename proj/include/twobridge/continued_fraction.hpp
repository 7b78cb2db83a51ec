#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace twobridge {

/**
 * Regular continued fraction [a_1,...,a_n] with every entry positive.
 *
 * Canonical form additionally has a_1 >= 2 and a_n >= 2, which makes the
 * expansion of a rational p/q unique. Link constructions require canonical
 * input; the type itself only enforces positivity so that arbitrary
 * expansions (e.g. a reversed fraction ending in 1) remain representable.
 */
class continued_fraction {
public:
    explicit continued_fraction(std::vector<integer> entries)
        : entries_(std::move(entries)) {
        if (entries_.empty())
            fail(errc::empty_sequence, "continued fraction must have at least one entry");
        for (integer a : entries_)
            if (a < 1)
                fail(errc::nonpositive_entry, "continued fraction entries must be >= 1");
    }

    const std::vector<integer>& entries() const noexcept { return entries_; }
    integer length() const noexcept { return static_cast<integer>(entries_.size()); }

    bool is_canonical() const noexcept {
        return entries_.front() >= 2 && entries_.back() >= 2;
    }

    integer sum() const {
        integer s = 0;
        for (integer a : entries_) s = checked_add(s, a);
        return s;
    }

    // #{a_i = 1}
    integer ones() const noexcept {
        return std::count(entries_.begin(), entries_.end(), integer{1});
    }

    friend bool operator==(const continued_fraction&, const continued_fraction&) = default;

private:
    std::vector<integer> entries_;
};

namespace detail {

struct expansion {
    continued_fraction cf;
    bool folded;
};

inline expansion cf_expand_impl(integer p, integer q) {
    if (p < 2) fail(errc::p_too_small, "p must be >= 2");
    if (q < 1 || q >= p) fail(errc::q_out_of_range, "q must satisfy 1 <= q < p");
    if (std::gcd(p, q) != 1) fail(errc::not_coprime, "p and q must be coprime");

    std::vector<integer> entries;
    integer a = p, b = q;
    while (b != 0) {
        entries.push_back(a / b);
        integer r = a % b;
        a = b;
        b = r;
    }
    bool folded = false;
    if (entries.size() > 1 && entries.back() == 1) {
        // [...,a,1] -> [...,a+1]
        entries.pop_back();
        entries.back() += 1;
        folded = true;
    }
    return {continued_fraction(std::move(entries)), folded};
}

}  // namespace detail

// Expansion of p/q with positive entries and last entry >= 2; a trailing 1 is
// folded into its predecessor so the result is unique.
inline continued_fraction cf_expand(integer p, integer q) {
    return detail::cf_expand_impl(p, q).cf;
}

// Evaluates a_1 + 1/(a_2 + 1/(... + 1/a_n)) as a reduced fraction (p, q).
// Consecutive convergents are coprime, so no reduction step is needed.
inline std::pair<integer, integer> cf_value(const continued_fraction& cf) {
    const auto& a = cf.entries();
    integer num = a.back();
    integer den = 1;
    for (auto it = std::next(a.rbegin()); it != a.rend(); ++it) {
        integer next = checked_add(checked_mul(*it, num), den);
        den = num;
        num = next;
    }
    return {num, den};
}

inline continued_fraction reverse(const continued_fraction& cf) {
    return continued_fraction({cf.entries().rbegin(), cf.entries().rend()});
}

inline std::string to_string(const continued_fraction& cf) {
    std::string out = "[";
    for (std::size_t i = 0; i < cf.entries().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(cf.entries()[i]);
    }
    out += ']';
    return out;
}

}  // namespace twobridge
