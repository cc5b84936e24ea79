#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "errors.hpp"

namespace hesslab {

enum class OutputFormat { human, json };

struct Config {
    std::size_t max_symbolic_det_size = 14;
    std::size_t witness_attempt_budget = 1000;
    std::size_t term_budget = 10'000'000;
    std::uint64_t seed = 0;
    OutputFormat output_format = OutputFormat::human;
    /// Wall-clock timings in reports; off by default so reports stay byte-stable.
    bool record_timings = false;

    void validate() const {
        require_input(max_symbolic_det_size > 0, "max_symbolic_det_size must be positive");
        require_input(witness_attempt_budget > 0, "witness_attempt_budget must be positive");
        require_input(term_budget > 0, "term_budget must be positive");
    }
};

/// Seed from HESSLAB_SEED, if set and well formed.
inline std::optional<std::uint64_t> seed_from_environment() {
    const char* v = std::getenv("HESSLAB_SEED");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    unsigned long long s = std::strtoull(v, &end, 10);
    if (*end != '\0') throw input_error(std::string("HESSLAB_SEED is not an unsigned integer: ") + v);
    return static_cast<std::uint64_t>(s);
}

} // namespace hesslab
