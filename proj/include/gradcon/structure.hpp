#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradcon/contraction.hpp"
#include "gradcon/tits.hpp"

namespace gradcon {

// span of [a, b] over all basis pairs of the two graded subspaces
GradedSubspace bracket_span(const LiePresentation& l, const GradedSubspace& a, const GradedSubspace& b);

GradedSubspace center(const LiePresentation& l);
GradedSubspace derived_subalgebra(const LiePresentation& l);

// dimension sequences (d_0, ..., d_m), truncated at stabilization
std::vector<int> derived_series_dims(const LiePresentation& l, const GradedSubspace& start);
std::vector<int> lower_central_series_dims(const LiePresentation& l, const GradedSubspace& start);
std::vector<int> derived_series_dims(const LiePresentation& l);
std::vector<int> lower_central_series_dims(const LiePresentation& l);

// Killing-orthogonal complement of [L, L]; post-verified to be a solvable
// ideal (throws std::logic_error otherwise).
GradedSubspace radical(const LiePresentation& l);

bool is_bracket_closed(const LiePresentation& l, const GradedSubspace& u);
// intrinsic Killing nondegeneracy of the subalgebra; throws when u is not
// bracket-closed
bool is_semisimple_subalgebra(const LiePresentation& l, const GradedSubspace& u);

struct LeviCheck {
    bool closed = false;
    bool semisimple = false;
    bool complements_radical = false;
    bool ok() const { return closed && semisimple && complements_radical; }
};
LeviCheck verify_levi(const LiePresentation& l, const GradedSubspace& claimed);

// Collineation-invariant structural record.
struct Fingerprint {
    Hurwitz alg = Hurwitz::F;
    int dim = 0;
    int center_dim = 0;
    int radical_dim = 0;
    int levi_dim = 0;
    std::vector<int> derived;
    std::vector<int> lower_central;
    std::vector<int> radical_derived;
    std::vector<int> radical_lower_central;
    bool reductive = false;
    int nilindex = -1;   // -1: not nilpotent
    int solvindex = -1;  // -1: not solvable
    std::array<int, 8> n_sorted{};  // n_(i,T) over I0, descending
    int t_x_size = 0;
    int t_diag_size = 0;
    bool has_00 = false;

    bool operator==(const Fingerprint&) const = default;
};

// Contract with epsilon^T and aggregate all invariants. `recheck` controls
// the Jacobi re-verification inside contract().
Fingerprint fingerprint(Hurwitz c, gns::Mask t, const JacobiOptions& recheck = {JacobiMode::Blocked});

struct StructureReport {
    Fingerprint fp;
    GradedSubspace center;
    GradedSubspace radical;
    GradedSubspace derived_alg;
};
StructureReport analyze(const LiePresentation& contracted, gns::Mask t);

}  // namespace gradcon
