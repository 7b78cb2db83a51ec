#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

// Reasons a value can be rejected. Every operation documents which codes it
// raises, and tests distinguish failures by code rather than by message.
enum class errc {
    p_too_small,
    q_out_of_range,
    q_divisible_by_p,
    not_coprime,
    empty_sequence,
    nonpositive_entry,
    non_canonical,
    length_too_short,
    index_out_of_range,
    boundary_index,
    twist_not_one,
    out_of_order,
    not_fresh,
    not_hyperbolic,
    cover_degree_too_small,
    pretzel_zero_entry,
    pretzel_end_too_small,
    overflow,
    io_error,
    parse_error,
    duplicate_row,
};

class validation_error : public std::invalid_argument {
public:
    validation_error(errc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw validation_error(code, what);
}

}  // namespace twobridge
