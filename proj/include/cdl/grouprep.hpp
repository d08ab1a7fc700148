#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdl/design.hpp"
#include "cdl/pointset.hpp"

namespace cdl {

struct FiniteUnitaryGroup {
    int dim = 0;
    std::vector<Matrix> elements;
    std::string provenance;

    int order() const { return static_cast<int>(elements.size()); }
};

// BFS closure under products; elements deduplicated by rounded entries.
// Generators must be unitary within 1e-10; throws if the cap is exceeded.
FiniteUnitaryGroup close_group(const std::vector<Matrix>& generators, int cap = 100000);

// generated by the shift and clock matrices; order d^3 (phases included)
FiniteUnitaryGroup pauli_group(int d);

// orbit Gx, deduplicated at tolerance
PointSet orbit(const FiniteUnitaryGroup& G, const Vector& x, double tol = 1e-8);

struct MolienTable {
    int kmax = 0, lmax = 0;
    enum class Kind { HomInvariants, HarmInvariants } kind = Kind::HomInvariants;
    std::map<BiDegree, long> entries;

    long at(BiDegree d) const {
        auto it = entries.find(d);
        return it == entries.end() ? 0 : it->second;
    }
};

// dim Hom(k,l)^G via the two-variable Molien average; entries are rounded to
// integers with a drift guard (|entry - round| < 1e-6)
MolienTable molien_hom(const FiniteUnitaryGroup& G, int kmax, int lmax);

// dim Harm(k,l)^G computed both by the difference formula and by the
// (1 - xy)-weighted series; throws if the two routes disagree
MolienTable molien_harm(const FiniteUnitaryGroup& G, int kmax, int lmax);

// character-norm irreducibility test for Harm(k,l); cross-checked against the
// four-determinant coefficient (min(k,l)+1 when all diagonal shifts are irreducible)
bool harm_irreducible(const FiniteUnitaryGroup& G, BiDegree deg);

struct OrbitDesignStrength {
    LowerSet invariant_guarantee;        // U-design from vanishing invariants
    LowerSet irreducible_guarantee;      // cl(U'*U') from irreducibility over U'
    LowerSet empirical;                  // measured on a sample orbit
};

// both group-theoretic guarantees over U plus the measured strength of a
// deterministic sample orbit; no converse is asserted
OrbitDesignStrength orbit_design_strength(const FiniteUnitaryGroup& G, const LowerSet& U,
                                          int cutoff = 6, double tol = kDesignTol);

}  // namespace cdl
