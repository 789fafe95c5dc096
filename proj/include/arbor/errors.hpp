#ifndef ARBOR_ERRORS_HPP
#define ARBOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arbor {

// Domain error codes, one per contract violation the library reports.
enum class errc {
    multiple_roots,
    cycle_detected,
    dangling_parent,
    invalid_node,
    param_out_of_range,
    too_many_chains,
    search_budget_exceeded,
    ambient_too_large,
    not_an_antichain,
    not_in_cone,
    budget_violated,
    invalid_color,
    not_specializing,
    not_a_permutation,
    incomparable_pair,
    search_space_too_large,
    no_homogeneous_chain,
    arity_mismatch,
    not_a_chain,
    color_not_in_range,
    pigeonhole_hypothesis_fails,
    node_not_in_level,
    parse_error,
    invalid_argument,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace arbor

#endif
