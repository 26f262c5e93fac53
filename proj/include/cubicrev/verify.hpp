// The cross-module certificate suite behind the `verify` command.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cubicrev {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;  // empty when there is nothing to report
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::uint64_t seed = 0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    nlohmann::json to_json() const;
};

/// Runs every certificate: factorization identities, parametrization residuals,
/// rotation orthogonality, singular catalogs, line certificates, and
/// rational-point roundtrips. Deterministic for a fixed seed.
VerificationReport run_full_verification(std::uint64_t seed = 42);

}  // namespace cubicrev
