#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/caps.hpp"
#include "brauer/cohomology.hpp"
#include "brauer/extensions.hpp"

namespace brauer {

// G = N x| Q with N, Q abelian.  dual = Hom(N, Z/exp N), (q.phi)(n) = phi(q^-1 n).
struct SemidirectDatum {
    FiniteGroup Q;
    AbelianModule N;
    AbelianModule dual;
    i64 exponent() const { return N.exponent(); }
};
// throws InvalidDatum (Q not abelian, double dual differs) or InvalidAction
SemidirectDatum semidirect_datum(const FiniteGroup& Q, const AbelianModule& N);
SemidirectProduct semidirect_group(const SemidirectDatum& sd, i64 cap = 4096);

// Sha^1_bic(Q, dual); the ambient is H^1(Q, dual)
ShaGroup sha1_bic(const SemidirectDatum& sd);

// (f, c = 0) with f((n1,q1),(n2,q2)) = a(q1^-1)(n2), read in Z/gal.N through Z/e -> Z/N.
// The group is semidirect_group(sd); gal must act trivially on it.
EquivariantExtension extension_from_q_cocycle(const SemidirectDatum& sd, const Cochain& a, const GaloisDatum& gal);

// Q = (Z/p)^3, I = augmentation ideal of (Z/p^3)[Q], N = Hom(I, Z/p^3).
struct GroupRingExample {
    int p = 2;
    SemidirectDatum sd;
    Cochain a;                       // q -> [q] - [1], valued in dual = I
    std::vector<i64> expected_h1;    // [p^3]
    std::vector<i64> expected_sha;   // [p]
    i64 generator_multiple = 4;      // Sha is generated by p^2 [a]
};
GroupRingExample build_group_ring_example(int p, const Caps& caps = {});

enum class WitnessVerdict { ObstructionWitnessed, NoObstructionFromThisClass };
enum class PairVerdict { WitnessPairFound, NoneAtThisLevel, NotSearched };
const char* verdict_name(WitnessVerdict v);
const char* verdict_name(PairVerdict v);

struct LocalWitness {
    AbelianModule twisted_dual;  // dual with Delta_v acting through c_v
    AbelianModule twisted;       // N with Delta_v acting through c_v
    ZVec class_coords;           // [a] in H^1(Q, dual)
    Cochain inflated;            // c_v^* a
    ZVec inflated_coords;        // in H^1(Delta_v, twisted_dual)
    WitnessVerdict verdict = WitnessVerdict::NoObstructionFromThisClass;
    PairVerdict pair = PairVerdict::NotSearched;
    std::optional<Cochain> y;    // point class in H^1(Delta_v, twisted)
    std::optional<Cochain> cup;  // inflated cup y, not a coboundary mod exp N
};
// cv: surjective homomorphism Delta_v -> Q (NotSurjective otherwise).
// chi_v mod exp(N) must be trivial for the pair search; pass {} for trivial.
LocalWitness local_witness(const SemidirectDatum& sd, const Cochain& a, const FiniteGroup& dv,
                           const std::vector<int>& cv, const std::vector<i64>& chi_v = {}, bool search_pair = true);

// N x| Q without a multiplication table: (n, q) packed as module_index(n) + |N| q.
class CodedSemidirect {
public:
    explicit CodedSemidirect(const SemidirectDatum& sd);
    const SemidirectDatum& datum() const { return sd_; }
    i64 n_order() const { return nsize_; }
    i64 encode(std::span<const i64> n, int q) const;
    ZVec n_part(i64 x) const;
    int q_part(i64 x) const { return int(x / nsize_); }
    i64 mul(i64 x, i64 y) const;
    i64 inv(i64 x) const;
    // closure of gens; CapExceeded past cap
    std::vector<i64> closure(const std::vector<i64>& gens, i64 cap) const;
    // the subgroup as a table group; local index 0 is the identity
    struct Table {
        FiniteGroup group;
        std::vector<i64> codes;
    };
    Table table(const std::vector<i64>& gens, i64 cap) const;

private:
    SemidirectDatum sd_;
    i64 nsize_ = 1;
};

// value a(q1^-1)(n2) in Z/exp(N) for coded elements
i64 q_cocycle_value(const CodedSemidirect& G, const Cochain& a, i64 x, i64 y);

} // namespace brauer
