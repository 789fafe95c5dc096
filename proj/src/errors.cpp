#include "arbor/errors.hpp"

namespace arbor {

const char* errc_name(errc code) {
    switch (code) {
    case errc::multiple_roots: return "MultipleRoots";
    case errc::cycle_detected: return "CycleDetected";
    case errc::dangling_parent: return "DanglingParent";
    case errc::invalid_node: return "InvalidNode";
    case errc::param_out_of_range: return "ParamOutOfRange";
    case errc::too_many_chains: return "TooManyChains";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::ambient_too_large: return "AmbientTooLarge";
    case errc::not_an_antichain: return "NotAnAntichain";
    case errc::not_in_cone: return "NotInCone";
    case errc::budget_violated: return "BudgetViolated";
    case errc::invalid_color: return "InvalidColor";
    case errc::not_specializing: return "NotSpecializing";
    case errc::not_a_permutation: return "NotAPermutation";
    case errc::incomparable_pair: return "IncomparablePair";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::no_homogeneous_chain: return "NoHomogeneousChain";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::not_a_chain: return "NotAChain";
    case errc::color_not_in_range: return "ColorNotInRange";
    case errc::pigeonhole_hypothesis_fails: return "PigeonholeHypothesisFails";
    case errc::node_not_in_level: return "NodeNotInLevel";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace arbor
