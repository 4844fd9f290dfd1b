#pragma once

#include <optional>
#include <string>

#include "gradcon/structure.hpp"

namespace gradcon {

// Closed-form block predictions for the contraction of a classified set,
// driven by the K_i / J_i data of its S-part.
struct ExpectedStructure {
    enum class Part { None, D, M, Full };
    std::array<Part, 8> center{};   // per degree
    std::array<Part, 8> radical{};
    std::array<Part, 8> levi{};
    std::array<Part, 8> derived_alg{};
    std::optional<std::vector<int>> derived;        // full-algebra series
    std::optional<std::vector<int>> lower_central;
    std::optional<std::vector<int>> radical_derived;
    std::optional<std::vector<int>> radical_lower_central;
    bool reductive = false;
    bool solvable_all = false;  // radical is the whole algebra
    // descriptive label of the Levi factor; dimensions and semisimplicity are
    // what gets certified, the label itself is untested metadata
    std::string levi_label = "0";
};

ExpectedStructure expected_structure(Hurwitz c, const gns::NamedGns& g);

GradedSubspace realize_parts(const TitsContext& ctx, const std::array<ExpectedStructure::Part, 8>& parts);

// Contracts, computes the actual invariants and compares them with the
// closed-form prediction, including an explicit Levi verification. Empty
// string on success, otherwise the first mismatch.
std::string check_expected(Hurwitz c, const gns::NamedGns& g,
                           const JacobiOptions& recheck = {JacobiMode::Blocked});

}  // namespace gradcon
