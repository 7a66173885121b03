#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hbraces/braces.hpp"
#include "hbraces/checker.hpp"
#include "hbraces/series.hpp"

namespace hbraces {

enum class Suite { pullback_koszul, pullback_borjeson, pullback_general, linf, ainf, c_identity, series_inverse };

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// "phi2-sign[:k]", "b2-sign[:k]", "b3-drop-last", or the general
/// "flip:<arity>:<term>" / "drop:<arity>:<term>".
Mutation parse_mutation(std::string_view spec);

struct SuiteOptions {
    std::optional<std::size_t> n_max; // defaults per suite
    std::optional<std::size_t> r_max;
    std::size_t order = default_order;
    std::size_t samples = 20;
    std::uint64_t seed = 20130417;
    std::string family;               // linf: koszul|trivial, ainf: borjeson|trivial
    std::optional<Mutation> mutation; // linf / ainf only
};

/// Runs one verification sweep. Throws UsageError for options the suite
/// cannot honor (bounds beyond the truncation order, mutation on a suite
/// without a family, ...).
VerificationReport run_suite(Suite suite, const SuiteOptions& options);

} // namespace hbraces
