#pragma once

#include <string>
#include <vector>

#include "gradcon/structure.hpp"

namespace gradcon {

// All bijections of I0 fixing 0 that satisfy the two support obstructions:
// (i) ij in T iff sigma(i)sigma(j) in T', over all pairs; (ii) sigma(i*j) =
// sigma(i)*sigma(j) whenever ij in T. Emptiness certifies that no graded
// isomorphism between the contractions exists, for every Hurwitz algebra.
std::vector<fano::Perm> compatible_sigmas(gns::Mask t, gns::Mask t2);
bool compatible_sigmas_empty(gns::Mask t, gns::Mask t2);

enum class RecipeKind {
    Swap,    // unsigned block swap p1 <-> p2 via the RREF bases
    PermE,   // theta-hat re-tagging along the transposition (p1 p2)
    HatPhi,  // signed swap on the line through p1, p2 (p1 -> p2, p2 -> -p1)
};

struct MergeRecipe {
    std::string from, to;  // names in the classified list
    RecipeKind kind;
    int p1 = 0, p2 = 0;
};

// The 30 merges taking the 245 support classes to the 215 representatives.
const std::vector<MergeRecipe>& merge_table();

// One extra merge outside the classified list: the S1+E_137 class (absent
// from the tables, see the README note) collapses onto S1+E_134.
MergeRecipe extra_class_recipe();

BasisMap build_block_map(const TitsContext& ctx, const MergeRecipe& r);

struct IsoCheck {
    bool ok = false;
    std::string detail;
    fano::Perm sigma = fano::identity_perm();
};
// f invertible, block-permuting, and a bracket homomorphism from a to b,
// checked exactly on all basis pairs.
IsoCheck is_graded_isomorphism(const BasisMap& f, const LiePresentation& a, const LiePresentation& b);

struct ClassifyOptions {
    Hurwitz alg = Hurwitz::F;
    JacobiOptions recheck{JacobiMode::Sampled, 1, 0};  // inside contract()
    bool with_fingerprints = true;
    int workers = 0;
};

struct ClassRecord {
    std::string representative;
    std::vector<std::string> merged;  // other classified names in this class
    Fingerprint fp;
    int orbit_size = 0;
};

struct Classification {
    Hurwitz alg = Hurwitz::F;
    std::vector<ClassRecord> classes;
    int merges_verified = 0;  // out of 30
    std::vector<std::string> merge_failures;
    std::vector<std::pair<std::string, std::string>> undecided;  // compatible sigma, no recipe
    bool fingerprints_consistent = true;  // merged pairs agree
    bool extra_class_merges = false;      // S1+E_137 ~ S1+E_134 verified
};

// Starts from the 245 classified orbit representatives, applies the verified
// merge table, then certifies pairwise non-isomorphism of the remaining 215
// by empty compatible-sigma sets.
Classification classify(const ClassifyOptions& opts = {});

}  // namespace gradcon
