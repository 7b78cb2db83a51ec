// Command-line front end: every subcommand prints a human-readable table by
// default and machine-readable JSON (or CSV for the census) on request.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <twobridge/twobridge.hpp>

namespace {

using twobridge::integer;
using ordered_json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<integer> parse_int_list(const std::string& text) {
    std::vector<integer> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto pos = text.find(',', start);
        std::string tok = text.substr(start, pos == std::string::npos ? pos : pos - start);
        integer value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
            throw usage_error("malformed integer list: \"" + text + "\"");
        out.push_back(value);
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void print_kv(const std::string& key, const std::string& value) {
    std::printf("%-13s %s\n", key.c_str(), value.c_str());
}

std::string opt_str(const std::optional<integer>& v) {
    return v ? std::to_string(*v) : "-";
}

std::string trace_phrase(const std::vector<twobridge::normalize_step>& steps) {
    std::string out;
    for (auto s : steps) {
        if (!out.empty()) out += ", ";
        switch (s) {
            case twobridge::normalize_step::reduce_mod_p: out += "reduced mod p"; break;
            case twobridge::normalize_step::mirror: out += "mirror applied"; break;
            case twobridge::normalize_step::fold: out += "trailing 1 folded"; break;
        }
    }
    return out;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void run_expand(integer p, integer q, const std::string& format) {
    auto link = twobridge::normalize(p, q);
    if (format == "json") {
        ordered_json j;
        j["p"] = link.p();
        j["q"] = link.q();
        j["cf"] = link.cf().entries();
        auto steps = ordered_json::array();
        for (auto s : link.trace()) steps.push_back(twobridge::to_string(s));
        j["trace"] = std::move(steps);
        emit_json(j);
        return;
    }
    std::string phrase = trace_phrase(link.trace());
    if (!phrase.empty()) phrase += "; ";
    std::cout << phrase << link.p() << "/" << link.q() << " = "
              << twobridge::to_string(link.cf()) << "\n";
}

void print_report_table(const twobridge::bound_report& rep) {
    print_kv("p/q", std::to_string(rep.link.p()) + "/" + std::to_string(rep.link.q()));
    print_kv("cf", twobridge::to_string(rep.link.cf()));
    print_kv("n", std::to_string(rep.n));
    print_kv("upper_thm1", opt_str(rep.upper_thm1));
    print_kv("upper_lemma1", opt_str(rep.upper_lemma1));
    print_kv("upper_sw", opt_str(rep.upper_sw));
    print_kv("lower", std::to_string(rep.lower));
    print_kv("lower_volume", format_double(rep.lower_volume));
    print_kv("exact", opt_str(rep.exact));
    print_kv("hyperbolic", rep.hyperbolic ? "true" : "false");
}

void run_bound(const twobridge::two_bridge_link& link, const std::string& format) {
    auto rep = twobridge::complexity_interval(link);
    if (format == "json") {
        emit_json(twobridge::report_to_json(rep));
        return;
    }
    print_report_table(rep);
}

void run_spine(const twobridge::continued_fraction& cf, const std::string& format) {
    auto ledger = twobridge::run_all_replacements(twobridge::initial_ledger(cf));
    if (format == "json") {
        std::cout << twobridge::trace_json_lines(ledger);
        return;
    }
    std::cout << twobridge::trace_text(ledger);
}

void run_cover(integer p, integer q, integer d, const std::string& format) {
    auto cov = twobridge::cover_bound(twobridge::normalize(p, q), d);
    if (format == "json") {
        emit_json(twobridge::cover_to_json(cov));
        return;
    }
    print_kv("p/q", std::to_string(cov.link.p()) + "/" + std::to_string(cov.link.q()));
    print_kv("d", std::to_string(cov.d));
    print_kv("r", std::to_string(cov.r));
    print_kv("upper_thm1", std::to_string(twobridge::theorem1_bound(cov.link.cf())));
    print_kv("value", std::to_string(cov.value));
}

void run_family(integer n, const std::string& format) {
    auto [link, exact] = twobridge::cor2_family(n);
    if (format == "json") {
        ordered_json j;
        j["n"] = n;
        j["p"] = link.p();
        j["q"] = link.q();
        j["cf"] = link.cf().entries();
        j["exact"] = exact;
        emit_json(j);
        return;
    }
    print_kv("n", std::to_string(n));
    print_kv("p/q", std::to_string(link.p()) + "/" + std::to_string(link.q()));
    print_kv("cf", twobridge::to_string(link.cf()));
    print_kv("exact", std::to_string(exact));
}

void run_pretzel(const std::string& list, const std::string& format) {
    auto twists = parse_int_list(list);
    integer upper = twobridge::pretzel_bound(twists);
    if (format == "json") {
        ordered_json j;
        j["pretzel"] = twists;
        j["upper"] = upper;
        emit_json(j);
        return;
    }
    std::string shown = "[";
    for (std::size_t i = 0; i < twists.size(); ++i) {
        if (i > 0) shown += ',';
        shown += std::to_string(twists[i]);
    }
    shown += ']';
    print_kv("pretzel", shown);
    print_kv("upper", std::to_string(upper));
}

void print_census_table(const std::vector<twobridge::census_row>& rows) {
    std::vector<std::string> headers;
    for (const auto& h : twobridge::detail::split(twobridge::census_csv_header(), ','))
        headers.push_back(h);
    std::vector<std::vector<std::string>> cells;
    auto opt_cell = [](const std::optional<integer>& v) { return v ? std::to_string(*v) : "-"; };
    for (const auto& row : rows) {
        const auto& rep = row.report;
        cells.push_back({std::to_string(row.link.p()), std::to_string(row.link.q()),
                         twobridge::to_string(row.link.cf()), std::to_string(rep.n),
                         opt_cell(rep.upper_thm1), opt_cell(rep.upper_lemma1),
                         opt_cell(rep.upper_sw), std::to_string(rep.lower),
                         std::to_string(row.effective_lower), opt_cell(row.exact),
                         rep.hyperbolic ? "true" : "false"});
    }
    std::vector<std::size_t> widths;
    for (std::size_t c = 0; c < headers.size(); ++c) {
        std::size_t w = headers[c].size();
        for (const auto& r : cells) w = std::max(w, r[c].size());
        widths.push_back(w);
    }
    auto print_row = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c)
            std::printf("%s%-*s", c == 0 ? "" : "  ", static_cast<int>(widths[c]), r[c].c_str());
        std::printf("\n");
    };
    print_row(headers);
    for (const auto& r : cells) print_row(r);
}

void run_census(integer max_p, const std::string& volume_path, const std::string& format,
                unsigned threads) {
    std::optional<twobridge::volume_table> volumes;
    if (!volume_path.empty()) volumes = twobridge::ingest_volumes(volume_path);
    auto rows = twobridge::census_report(max_p, volumes ? &*volumes : nullptr, threads);
    if (volumes) {
        std::size_t unmatched = 0;
        for (const auto& [key, vol] : volumes->entries()) {
            bool found = std::any_of(rows.begin(), rows.end(), [&](const auto& row) {
                return row.link.p() == key.first && row.link.q() == key.second;
            });
            if (!found) ++unmatched;
        }
        if (unmatched > 0)
            std::cerr << "note: " << unmatched << " volume row(s) matched no census row\n";
    }
    if (format == "json") {
        emit_json(twobridge::census_to_json(rows));
    } else if (format == "csv") {
        std::cout << twobridge::census_to_csv(rows);
    } else {
        print_census_table(rows);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complexity bounds for two-bridge link complements"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string census_format = "table";
    integer p = 0, q = 0, d = 0, family_n = 0, max_p = 0;
    std::string cf_list, pretzel_list, volume_path;
    unsigned threads = 0;

    auto add_format = [&](CLI::App* sub, std::string& target,
                          const std::vector<std::string>& choices) {
        sub->add_option("--format", target, "output format")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    };

    auto* expand = app.add_subcommand("expand", "normalize (p,q) and print its continued fraction");
    expand->add_option("p", p, "determinant p")->required();
    expand->add_option("q", q, "parameter q")->required();
    add_format(expand, format, {"table", "json"});

    auto* bound = app.add_subcommand("bound", "complexity bounds for one link");
    auto* bound_p = bound->add_option("p", p, "determinant p");
    auto* bound_q = bound->add_option("q", q, "parameter q");
    auto* bound_cf = bound->add_option("--cf", cf_list, "comma-separated continued fraction");
    add_format(bound, format, {"table", "json"});

    auto* spine = app.add_subcommand("spine", "print the spine vertex-count trace");
    spine->add_option("--cf", cf_list, "comma-separated continued fraction")->required();
    add_format(spine, format, {"table", "json"});

    auto* cover = app.add_subcommand("cover", "complexity bound for the d-fold branched covering");
    cover->add_option("p", p, "determinant p")->required();
    cover->add_option("q", q, "parameter q")->required();
    cover->add_option("d", d, "covering degree")->required();
    add_format(cover, format, {"table", "json"});

    auto* family = app.add_subcommand("family", "the [2,1,...,1,2] link of length n (exact complexity 2n-2)");
    family->add_option("--n", family_n, "continued fraction length")->required();
    add_format(family, format, {"table", "json"});

    auto* pretzel = app.add_subcommand("pretzel", "spine upper bound for a pretzel link");
    pretzel->add_option("twists", pretzel_list, "comma-separated twist counts (use -- before a leading negative)")
        ->required();
    add_format(pretzel, format, {"table", "json"});

    auto* census = app.add_subcommand("census", "bound table for all classes with p <= max-p");
    census->add_option("--max-p", max_p, "largest determinant to enumerate")->required();
    census->add_option("--volumes", volume_path, "CSV of known hyperbolic volumes (p,q,volume)");
    census->add_option("--threads", threads, "worker threads (0 = all cores)");
    add_format(census, census_format, {"table", "json", "csv"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) {
            run_expand(p, q, format);
        } else if (bound->parsed()) {
            const bool has_pq = bound_p->count() > 0 || bound_q->count() > 0;
            if (has_pq && bound_cf->count() > 0)
                throw usage_error("give either p q or --cf, not both");
            if (has_pq && (bound_p->count() == 0 || bound_q->count() == 0))
                throw usage_error("p and q must be given together");
            if (!has_pq && bound_cf->count() == 0)
                throw usage_error("give p q or --cf");
            auto link = has_pq
                            ? twobridge::normalize(p, q)
                            : twobridge::link_from_cf(
                                  twobridge::continued_fraction(parse_int_list(cf_list)));
            run_bound(link, format);
        } else if (spine->parsed()) {
            run_spine(twobridge::continued_fraction(parse_int_list(cf_list)), format);
        } else if (cover->parsed()) {
            run_cover(p, q, d, format);
        } else if (family->parsed()) {
            run_family(family_n, format);
        } else if (pretzel->parsed()) {
            run_pretzel(pretzel_list, format);
        } else if (census->parsed()) {
            run_census(max_p, volume_path, census_format, threads);
        }
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const twobridge::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
