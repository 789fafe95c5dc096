#ifndef ARBOR_GUARDS_HPP
#define ARBOR_GUARDS_HPP

#include <cstdlib>
#include <string>

namespace arbor {

// Size guards keep the exact searches at desk scale.  The environment
// variable ARBOR_SEARCH_GUARD, when set to a positive integer, overrides
// every default guard value.
inline long search_guard(long default_value) {
    if (const char* env = std::getenv("ARBOR_SEARCH_GUARD")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return default_value;
}

namespace guard {
inline constexpr long regressive_search_nodes = 30;   // in_diag_ideal / ns_member
inline constexpr long diag_iterate_nodes = 12;        // extensional materialization
inline constexpr long arrow_pairs = 26;               // k^pairs colorings enumerated
inline constexpr long sigma_prime_chains = 1000000;   // chains of P materialized
inline constexpr long build_good_chain = 30;          // |X| in build_good
inline constexpr long coloring_nodes = 2048;          // dense pair storage
} // namespace guard

} // namespace arbor

#endif
