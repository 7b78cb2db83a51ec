#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "continued_fraction.hpp"

namespace twobridge {

// One true vertex on the boundary of the twisted disk D_i inside the
// pillowcase A_i. Labels start as y_k^(i); once a replacement move touches a
// pillowcase its labels switch to the z prefix.
struct vertex_label {
    char prefix;
    integer subscript;
    integer pillowcase;

    std::string str() const {
        return std::string(1, prefix) + "_" + std::to_string(subscript) + "^(" +
               std::to_string(pillowcase) + ")";
    }

    friend bool operator==(const vertex_label&, const vertex_label&) = default;
};

// Pillowcase A_i: a four-holed sphere with a disk twisted a_i times inside.
// It contributes count() true vertices to the spine.
struct pillowcase_record {
    integer index;  // 1-based position i
    integer twist;  // a_i
    std::vector<vertex_label> vertices;

    integer count() const noexcept { return static_cast<integer>(vertices.size()); }
};

enum class event_kind { initial, collapse, replacement };

inline const char* to_string(event_kind k) {
    switch (k) {
        case event_kind::initial: return "initial";
        case event_kind::collapse: return "collapse";
        case event_kind::replacement: return "replacement";
    }
    return "?";
}

struct ledger_event {
    event_kind kind;
    integer pillowcase;  // for replacements, the center index i
    std::string detail;  // collapse: boundary component; replacement: case tag
    std::vector<vertex_label> labels;  // assigned, removed, or post-move labels
    std::vector<integer> counts_after;
};

class spine_ledger;
spine_ledger initial_ledger(const continued_fraction& cf);
spine_ledger apply_replacement(const spine_ledger& ledger, integer i);

/**
 * Auditable vertex-count ledger for the spine built from glued pillowcases.
 *
 * The ledger tracks, per pillowcase, the labeled true vertices surviving on
 * the boundary of its disk, together with an append-only event log of every
 * count change. Replacement moves return a new ledger, so traces can be
 * branched without invalidating earlier states.
 */
class spine_ledger {
public:
    const std::vector<pillowcase_record>& pillowcases() const noexcept { return pillowcases_; }
    const std::vector<integer>& replacements_done() const noexcept { return replacements_done_; }
    const std::vector<ledger_event>& events() const noexcept { return events_; }

    integer size() const noexcept { return static_cast<integer>(pillowcases_.size()); }

    std::vector<integer> counts() const {
        std::vector<integer> c;
        c.reserve(pillowcases_.size());
        for (const auto& rec : pillowcases_) c.push_back(rec.count());
        return c;
    }

private:
    spine_ledger() = default;

    // Collapse removing the vertices with the given subscripts; boundary
    // names the component the collapse starts from.
    void collapse(integer index, std::vector<integer> subscripts, const std::string& boundary) {
        auto& rec = pillowcases_[static_cast<std::size_t>(index - 1)];
        std::vector<vertex_label> removed;
        std::erase_if(rec.vertices, [&](const vertex_label& v) {
            if (std::find(subscripts.begin(), subscripts.end(), v.subscript) == subscripts.end())
                return false;
            removed.push_back(v);
            return true;
        });
        events_.push_back({event_kind::collapse, index, boundary, std::move(removed), counts()});
    }

    friend spine_ledger initial_ledger(const continued_fraction& cf);
    friend spine_ledger apply_replacement(const spine_ledger& ledger, integer i);

    std::vector<pillowcase_record> pillowcases_;
    std::vector<integer> replacements_done_;
    std::vector<ledger_event> events_;
};

/**
 * Vertex counts of the spine obtained by gluing the pillowcases and
 * collapsing from the two ends:
 *
 *   x_1 = a_1 - 1,   x_i = a_i + 2 (1 < i < n),   x_n = a_n - 1
 *
 * The end pillowcases start with a_i + 1 vertices and lose two each: A_1 by
 * collapsing from its NW boundary component, A_n from its SW one. The total
 * comes to sum a_i + 2(n-3).
 */
inline spine_ledger initial_ledger(const continued_fraction& cf) {
    if (cf.length() < 2)
        fail(errc::length_too_short, "spine construction needs n >= 2");
    if (!cf.is_canonical())
        fail(errc::non_canonical, "spine construction needs a_1 >= 2 and a_n >= 2");

    spine_ledger led;
    const integer n = cf.length();
    for (integer i = 1; i <= n; ++i)
        led.pillowcases_.push_back({i, cf.entries()[static_cast<std::size_t>(i - 1)], {}});
    for (integer i = 1; i <= n; ++i) {
        auto& rec = led.pillowcases_[static_cast<std::size_t>(i - 1)];
        integer vertex_count = (i == 1 || i == n) ? rec.twist + 1 : rec.twist + 2;
        for (integer k = 1; k <= vertex_count; ++k)
            rec.vertices.push_back({'y', k, i});
        led.events_.push_back({event_kind::initial, i, "", rec.vertices, led.counts()});
    }
    integer an = cf.entries().back();
    led.collapse(1, {1, 2}, "NW");
    led.collapse(n, {an - 1, an}, "SW");
    return led;
}

/**
 * Replacement move at pillowcase i with a_i = 1, applied left to right.
 * Counts change by
 *
 *   x_{i-1} += 1,   x_i -= 1,   x_{i+1} -= 1
 *
 * so the total drops by exactly one. The move is case (i) when a_{i-1} > 1
 * and case (ii) when a_{i-1} = 1; the cases differ in which vertices survive
 * the subsequent collapse, not in the count deltas.
 */
inline spine_ledger apply_replacement(const spine_ledger& ledger, integer i) {
    const integer n = ledger.size();
    if (i < 1 || i > n)
        fail(errc::index_out_of_range, "pillowcase index out of range");
    if (i == 1 || i == n)
        fail(errc::boundary_index, "replacement index must be interior (1 < i < n)");
    if (ledger.pillowcases()[static_cast<std::size_t>(i - 1)].twist != 1)
        fail(errc::twist_not_one, "replacement requires a_i = 1");
    if (!ledger.replacements_done().empty() && ledger.replacements_done().back() >= i)
        fail(errc::out_of_order, "replacements must be applied at strictly increasing indices");

    spine_ledger next = ledger;
    auto& left = next.pillowcases_[static_cast<std::size_t>(i - 2)];
    auto& mid = next.pillowcases_[static_cast<std::size_t>(i - 1)];
    auto& right = next.pillowcases_[static_cast<std::size_t>(i)];
    const bool case_one = left.twist > 1;
    const integer cl = left.count();
    const integer cm = mid.count();
    const integer cr = right.count();

    auto z_range = [](integer pc, integer from, integer to) {
        std::vector<vertex_label> v;
        for (integer k = from; k <= to; ++k) v.push_back({'z', k, pc});
        return v;
    };

    if (case_one) {
        // z_1..z_{c+1} all survive on A_{i-1}.
        left.vertices = z_range(i - 1, 1, cl + 1);
    } else {
        // A single new vertex z^(i-1) appears next to the existing ones.
        integer top = 0;
        for (const auto& v : left.vertices) top = std::max(top, v.subscript);
        left.vertices.push_back({'z', top + 1, i - 1});
    }
    // Center: collapsing removes z_1, z_2 in case (i) and both extremes in
    // case (ii). Right neighbor: the top two vertices are removed either way.
    mid.vertices = case_one ? z_range(i, 3, cm + 1) : z_range(i, 2, cm);
    right.vertices = z_range(i + 1, 1, cr - 1);

    next.replacements_done_.push_back(i);
    ledger_event ev{event_kind::replacement, i, case_one ? "case (i)" : "case (ii)", {}, {}};
    ev.labels.insert(ev.labels.end(), left.vertices.begin(), left.vertices.end());
    ev.labels.insert(ev.labels.end(), mid.vertices.begin(), mid.vertices.end());
    ev.labels.insert(ev.labels.end(), right.vertices.begin(), right.vertices.end());
    ev.counts_after = next.counts();
    next.events_.push_back(std::move(ev));
    return next;
}

// Applies the replacement at every index with a_i = 1, in increasing order.
// The total drops by #{a_i = 1}.
inline spine_ledger run_all_replacements(const spine_ledger& ledger) {
    if (!ledger.replacements_done().empty())
        fail(errc::not_fresh, "expected a fresh ledger with no replacements applied");
    spine_ledger out = ledger;
    const integer n = out.size();
    for (integer i = 2; i <= n - 1; ++i)
        if (out.pillowcases()[static_cast<std::size_t>(i - 1)].twist == 1)
            out = apply_replacement(out, i);
    return out;
}

inline integer total_true_vertices(const spine_ledger& ledger) {
    integer total = 0;
    for (const auto& rec : ledger.pillowcases()) total += rec.count();
    return total;
}

namespace detail {

inline std::string counts_str(const std::vector<integer>& counts) {
    std::string out = "[";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(counts[i]);
    }
    out += ']';
    return out;
}

inline integer counts_total(const std::vector<integer>& counts) {
    integer t = 0;
    for (integer c : counts) t += c;
    return t;
}

}  // namespace detail

// Human-readable trace: construction events, an initial-count summary, one
// line per replacement, and a final total.
inline std::string trace_text(const spine_ledger& ledger) {
    std::string out;
    auto labels_str = [](const std::vector<vertex_label>& labels) {
        std::string s;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i > 0) s += ' ';
            s += labels[i].str();
        }
        return s;
    };

    const std::vector<integer>* before_replacements = nullptr;
    bool summary_done = false;
    for (const auto& ev : ledger.events()) {
        switch (ev.kind) {
            case event_kind::initial:
                out += "initial A_" + std::to_string(ev.pillowcase) + ": " +
                       labels_str(ev.labels) + "\n";
                before_replacements = &ev.counts_after;
                break;
            case event_kind::collapse:
                out += "collapse at A_" + std::to_string(ev.pillowcase) + " (" + ev.detail +
                       "): removed " + labels_str(ev.labels) + "\n";
                before_replacements = &ev.counts_after;
                break;
            case event_kind::replacement:
                if (!summary_done && before_replacements) {
                    out += "initial counts " + detail::counts_str(*before_replacements) +
                           ", total " + std::to_string(detail::counts_total(*before_replacements)) +
                           "\n";
                    summary_done = true;
                }
                out += "replacement at A_" + std::to_string(ev.pillowcase) + ", " + ev.detail +
                       ": counts " + detail::counts_str(ev.counts_after) + ", total " +
                       std::to_string(detail::counts_total(ev.counts_after)) + "\n";
                break;
        }
    }
    if (!summary_done && before_replacements)
        out += "initial counts " + detail::counts_str(*before_replacements) + ", total " +
               std::to_string(detail::counts_total(*before_replacements)) + "\n";
    out += "total = " + std::to_string(total_true_vertices(ledger)) + "\n";
    return out;
}

// Machine-readable trace: one JSON object per line with the event kind, the
// pillowcase index, the affected vertex labels, and the count vector after.
inline std::string trace_json_lines(const spine_ledger& ledger) {
    std::string out;
    for (const auto& ev : ledger.events()) {
        nlohmann::ordered_json j;
        j["kind"] = to_string(ev.kind);
        j["pillowcase"] = ev.pillowcase;
        j["detail"] = ev.detail;
        auto labels = nlohmann::ordered_json::array();
        for (const auto& v : ev.labels) labels.push_back(v.str());
        j["labels"] = std::move(labels);
        j["counts"] = ev.counts_after;
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace twobridge
