#pragma once

#include <array>
#include <optional>
#include <string>

#include "gradcon/gns.hpp"
#include "gradcon/tits.hpp"

namespace gradcon {

// Scalar map on degree pairs; symmetry and genericity are checkable
// properties, not construction invariants.
struct ContractionMap {
    std::array<std::array<Q, 8>, 8> eps{};

    static ContractionMap ones();
    static ContractionMap zero();
};

// The 0/1 map of a generalised nice set; throws on non-gns input with the
// violating triple in the message.
ContractionMap epsilon_from_gns(gns::Mask t);

// eps(g, h*k) * eps(h, k)
Q ternary(const ContractionMap& e, int g, int h, int k);

struct GenericityWitness {
    bool symmetric_failure = false;  // (c1) vs (c2)
    int g = -1, h = -1, k = -1;
};

// (c1) over the 64 pairs and (c2) over the 512 triples.
bool is_generic(const ContractionMap& e, GenericityWitness* w = nullptr);

// delta-alpha(g,h) = alpha(g) alpha(h) / alpha(g*h); alpha nowhere zero.
ContractionMap coboundary(const std::array<Q, 8>& alpha);
ContractionMap pointwise_product(const ContractionMap& a, const ContractionMap& b);

// unordered pairs {g,h} with eps(g,h) != 0 or eps(h,g) != 0
gns::Mask support(const ContractionMap& e);

struct ContractionCheck {
    bool ok = true;
    std::string detail;  // failing condition and witness
};

// (a1): eps symmetric wherever a basis bracket is nonzero; (a2): the double
// bracket identity per basis triple, with a blocked fast path skipping degree
// triples whose coefficient differences vanish.
ContractionCheck is_graded_contraction(const ContractionMap& e, const LiePresentation& l);

// New presentation with c(i,j) scaled by eps(deg i, deg j). Checks
// is_graded_contraction first and re-verifies Jacobi with the given options
// (Sampled with samples = 0 skips the re-verification).
LiePresentation contract(const LiePresentation& l, const ContractionMap& e,
                         const JacobiOptions& recheck = {});

// The six witness triples in T(F) behind the genericity argument: each case
// produces linearly independent double brackets [x,[y,z]], [y,[z,x]], and the
// displayed intermediate values are compared exactly.
struct WitnessCase {
    std::string name;
    bool independent = false;
    bool intermediates_ok = false;
};
std::vector<WitnessCase> genericity_witnesses();

}  // namespace gradcon
