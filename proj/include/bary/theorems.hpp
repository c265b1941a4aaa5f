#pragma once

#include "bary/rational.hpp"
#include "bary/shape.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bary/point.hpp"

namespace bary {

/// Outcome of one exact identity check. Every comparison is a rational
/// equality; passed holds iff lhs[i] == rhs[i] for all i. There is no
/// tolerance anywhere in this module.
struct TheoremReport {
    std::string name;
    TriangleShape shape_used;
    bool passed = false;
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
    std::string detail;  // names the first failing component; empty on pass
};

/// The catalog, in execution order. run_all covers exactly these names.
const std::vector<std::string>& theorem_names();

/// Runs one catalog entry. Identities quantified over an arbitrary point use
/// the supplied probes, or the fixed probes A, B, C, G plus a seeded batch
/// when none are given. Probes must be finite. Throws UnknownTheorem for a
/// name outside the catalog.
TheoremReport check(const std::string& name, const TriangleShape& shape,
                    std::span<const BaryPoint> probes = {});

/// Every catalog entry, with probe points drawn deterministically from the
/// seed (plus the fixed probes A, B, C, G).
std::vector<TheoremReport> run_all(const TriangleShape& shape, std::uint64_t seed);

}  // namespace bary
