#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"

namespace twobridge {

struct census_row {
    two_bridge_link link;  // canonical class representative (p, q*)
    std::set<integer> class_members;
    bound_report report;
    std::optional<double> volume;            // externally supplied, if any
    std::optional<integer> lower_from_volume;
    integer effective_lower = 0;  // max of report.lower and lower_from_volume
    std::optional<integer> exact;
};

// Hyperbolic volumes keyed by canonical class representative (p, q*).
class volume_table {
public:
    std::optional<double> find(integer p, integer q) const {
        auto it = entries_.find({p, q});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<std::pair<integer, integer>, double>& entries() const noexcept {
        return entries_;
    }

    bool insert(integer p, integer q, double volume) {
        return entries_.emplace(std::make_pair(p, q), volume).second;
    }

private:
    std::map<std::pair<integer, integer>, double> entries_;
};

// ceil(volume / v3), with a small slack so an exact integer quotient does not
// round up from a floating-point representation landing epsilon above it.
inline integer volume_lower_bound(double volume) {
    return static_cast<integer>(std::ceil(volume / v3 - 1e-9));
}

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline integer parse_integer(const std::string& field, std::size_t line_no) {
    const std::string t = trim(field);
    integer value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": malformed integer \"" + field + "\"");
    return value;
}

inline double parse_volume(const std::string& field, std::size_t line_no) {
    const std::string t = trim(field);
    if (t.empty())
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": empty volume field");
    char* end = nullptr;
    double value = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": malformed volume \"" + field + "\"");
    return value;
}

}  // namespace detail

/**
 * Reads a volume CSV with header `p,q,volume`. q may be any member of the
 * equivalence class; keys are normalized to the canonical representative
 * (p, q*) on ingest. Malformed rows and duplicate keys are rejected with the
 * offending line number. An empty file yields an empty table.
 */
inline volume_table ingest_volumes(std::istream& in) {
    volume_table table;
    std::string line;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string row = detail::trim(line);
        if (row.empty()) continue;
        if (!seen_header) {
            if (row != "p,q,volume")
                fail(errc::parse_error,
                     "line " + std::to_string(line_no) + ": expected header \"p,q,volume\"");
            seen_header = true;
            continue;
        }
        auto fields = detail::split(row, ',');
        if (fields.size() != 3)
            fail(errc::parse_error,
                 "line " + std::to_string(line_no) + ": expected 3 comma-separated fields, got " +
                     std::to_string(fields.size()));
        integer p = detail::parse_integer(fields[0], line_no);
        integer q = detail::parse_integer(fields[1], line_no);
        double volume = detail::parse_volume(fields[2], line_no);
        integer canonical_q = 0;
        try {
            two_bridge_link link = normalize(p, q);
            canonical_q = *equivalence_class(link).begin();
        } catch (const validation_error& e) {
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!table.insert(p, canonical_q, volume))
            fail(errc::duplicate_row,
                 "line " + std::to_string(line_no) + ": duplicate volume for link (" +
                     std::to_string(p) + "," + std::to_string(canonical_q) + ")");
    }
    return table;
}

inline volume_table ingest_volumes(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open volume file: " + path);
    return ingest_volumes(in);
}

// One canonical representative per equivalence class with p <= max_p, in
// lexicographic (p, q*) order. Mirror normalization makes q > p/2 redundant,
// so only q <= p/2 is scanned.
inline std::vector<two_bridge_link> enumerate_links(integer max_p) {
    if (max_p < 2) fail(errc::p_too_small, "census cap must be >= 2");
    std::vector<two_bridge_link> reps;
    for (integer p = 2; p <= max_p; ++p) {
        for (integer q = 1; 2 * q <= p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            two_bridge_link link = normalize(p, q);
            if (*equivalence_class(link).begin() == q) reps.push_back(std::move(link));
        }
    }
    return reps;
}

namespace detail {

inline census_row make_census_row(const two_bridge_link& link, const volume_table* volumes) {
    census_row row{link, equivalence_class(link), complexity_interval(link),
                   std::nullopt, std::nullopt, 0, std::nullopt};
    if (volumes) {
        row.volume = volumes->find(link.p(), link.q());
        if (row.volume) row.lower_from_volume = volume_lower_bound(*row.volume);
    }
    row.effective_lower = std::max(row.report.lower, row.lower_from_volume.value_or(row.report.lower));
    if (row.report.upper_thm1 && row.effective_lower == *row.report.upper_thm1)
        row.exact = row.effective_lower;
    return row;
}

}  // namespace detail

/**
 * Full census up to max_p: one row per equivalence class, ordered by
 * (p, q*). Row computation is independent per class and runs on `threads`
 * workers (0 means hardware concurrency); results are merged by index, so
 * serial and parallel runs produce identical output.
 */
inline std::vector<census_row> census_report(integer max_p, const volume_table* volumes = nullptr,
                                             unsigned threads = 1) {
    const auto reps = enumerate_links(max_p);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, reps.empty() ? 1 : static_cast<unsigned>(reps.size()));

    std::vector<std::optional<census_row>> slots(reps.size());
    if (threads <= 1) {
        for (std::size_t j = 0; j < reps.size(); ++j)
            slots[j] = detail::make_census_row(reps[j], volumes);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t j = w; j < reps.size(); j += threads)
                    slots[j] = detail::make_census_row(reps[j], volumes);
            });
        }
        for (auto& t : workers) t.join();
    }

    std::vector<census_row> rows;
    rows.reserve(slots.size());
    for (auto& slot : slots) rows.push_back(std::move(*slot));
    return rows;
}

inline std::string census_csv_header() {
    return "p,q,cf,n,upper_thm1,upper_lemma1,upper_sw,lower,effective_lower,exact,hyperbolic";
}

inline std::string census_to_csv(const std::vector<census_row>& rows) {
    auto opt_field = [](const std::optional<integer>& v) {
        return v ? std::to_string(*v) : std::string{};
    };
    std::string out = census_csv_header() + "\n";
    for (const auto& row : rows) {
        const auto& rep = row.report;
        out += std::to_string(row.link.p()) + ',' + std::to_string(row.link.q()) + ',';
        out += '"' + to_string(row.link.cf()) + "\",";
        out += std::to_string(rep.n) + ',';
        out += opt_field(rep.upper_thm1) + ',';
        out += opt_field(rep.upper_lemma1) + ',';
        out += opt_field(rep.upper_sw) + ',';
        out += std::to_string(rep.lower) + ',';
        out += std::to_string(row.effective_lower) + ',';
        out += opt_field(row.exact) + ',';
        out += rep.hyperbolic ? "true" : "false";
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json census_to_json(const std::vector<census_row>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["p"] = row.link.p();
        j["q"] = row.link.q();
        j["class_members"] = row.class_members;
        j["report"] = report_to_json(row.report);
        j["volume"] = row.volume ? nlohmann::ordered_json(*row.volume) : nullptr;
        j["lower_from_volume"] = detail::opt_json(row.lower_from_volume);
        j["effective_lower"] = row.effective_lower;
        j["exact"] = detail::opt_json(row.exact);
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace twobridge
