#pragma once

// Brute-force reference computations.  Slow on purpose: each one avoids the
// parametrizations and shortcuts used by the library proper.

#include <map>
#include <optional>
#include <vector>

#include "brauer/cohomology.hpp"
#include "brauer/extensions.hpp"
#include "brauer/group.hpp"

namespace brauer::oracle {

// invariant factors of a finite abelian group from its k-torsion counts
std::vector<i64> factors_from_torsion(const std::vector<std::pair<i64, i64>>& killed_by, i64 order);

// H^2(G, Z/m), trivial action, by enumerating every normalized 2-cochain
std::vector<i64> h2_enumerate(const FiniteGroup& G, i64 m);
// H^1(G, M) by enumerating values on generators
std::vector<i64> h1_enumerate(const FiniteGroup& G, const AbelianModule& M);
// H^2 over the full bar complex (dense d1, d2); no generator parametrization
struct DenseH2 {
    AbelianStructure S;
    std::vector<Cochain> reps;
    ZVec coords(const Cochain& f) const;
    int n = 1;
};
DenseH2 h2_dense(const FiniteGroup& G, i64 m);

// b with beta = d(b) by exhaustive search over the values on generators
std::optional<ZVec> coboundary_search(const FiniteGroup& G, std::span<const i64> chi, const Cochain& beta, i64 m);
bool dies_in_QZ_search(const FiniteGroup& B, const Cochain& f, i64 N);
// Hom(G, Z/m) by exhaustive generator assignment
std::vector<ZVec> homs_to_cyclic(const FiniteGroup& G, i64 m);
// |B_0(G)| via dense H^2, exhaustive class enumeration and searched restrictions
i64 b0_order(const FiniteGroup& G);

// Galois condition for one triple by search in the extension with kernel Z/N^2
// (f, c pushed along Z/N -> Z/N^2): a lift x = (b, tau) of order ord(tau) and
// e = (mu, gamma) with e (delta.x) e^-1 = x^chi(delta)
bool galois_condition_search(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal, int d,
                             int tau, int gamma);

// groups up to isomorphism, in insertion order
struct GroupCollector {
    std::vector<FiniteGroup> groups;
    std::map<std::vector<i64>, std::vector<int>> buckets; // fingerprint -> indices
    bool add(FiniteGroup G);                               // false for a repeat
};
// every extension 1 -> K -> G -> Z/p -> 1 (automorphism alpha, t^p = k0)
void add_cyclic_extensions(const FiniteGroup& K, int p, GroupCollector& col);

// every group of order n up to isomorphism (n <= 32), built as cyclic extensions
std::vector<FiniteGroup> small_groups(int n);
bool isomorphic(const FiniteGroup& A, const FiniteGroup& B);

} // namespace brauer::oracle

namespace brauer::oracle {

// automorphisms of the abelian group with the given invariant factors, as matrices
std::vector<std::vector<i64>> module_automorphisms(const std::vector<i64>& nf);
// actions of abelian_group(qf) on nf: commuting automorphisms A_i with A_i^{q_i} = 1,
// in enumeration order, at most limit of them
std::vector<AbelianModule> module_actions(const std::vector<i64>& qf, const std::vector<i64>& nf,
                                          std::size_t limit);

} // namespace brauer::oracle

#include <random>

namespace brauer::oracle {

// Galois data of order <= 2 on every group of order in [2, maxn]: trivial, and Z/2 acting
// trivially or (abelian G) by inversion with up to `units` involutive characters mod N^2
struct GaloisCase {
    FiniteGroup G;
    GaloisDatum gal;
};
std::vector<GaloisCase> galois_cases(int maxn, int units = 3);
GaloisDatum z2_datum(const FiniteGroup& G, const std::vector<int>& sigma, i64 N, i64 chi);

// a random element of the class module, moved by a random coboundary pair
EquivariantExtension random_valid(const ClassModule& C, std::mt19937_64& rng);

} // namespace brauer::oracle

namespace brauer::oracle {

// a homomorphic section of E -> G over H commuting with Dsub, by backtracking
bool section_search(const ExtensionGroup& X, const FiniteGroup& G, const GaloisDatum& gal, const Subgroup& H,
                    const Subgroup& Dsub);

// does h: dv -> G (twisted by structure) lift to a twisted cocycle dv -> E?  Fiber values on the
// generators of dv are enumerated, propagated and checked on the full table.
bool lifts_to_extension(const ExtensionGroup& E, const FiniteGroup& dv, const std::vector<int>& structure,
                        const std::vector<i64>& h);

} // namespace brauer::oracle
