#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brauer/cohomology.hpp"
#include "brauer/group.hpp"

namespace brauer {

// Galois side: Delta acting on G and on the roots of unity through chi mod N^2.
struct GaloisDatum {
    FiniteGroup delta;
    std::vector<i64> chi; // mod N^2, indexed by delta elements
    GroupAction action;   // delta on G
    i64 N = 1;
    bool base_algebraically_closed = false;

    int nd() const { return delta.order(); }
    int act(int d, int g) const { return action.act(d, g); }
    i64 chi_mod(int d, i64 m) const { return md(chi[d], m); }
    std::vector<i64> chi_table(i64 m) const;

    // Delta trivial, N = |G| unless given
    static GaloisDatum trivial(const FiniteGroup& G, i64 N = 0);
};
void validate_galois(const FiniteGroup& G, const GaloisDatum& gal);

// Central extension of G by Z/N with a Delta-action:
//   (l, g)(m, h) = (l + m + f(g, h), gh),  d.(l, g) = (chi(d) l + c_d(g), d g).
struct EquivariantExtension {
    Cochain f;         // scalar, mod N
    std::vector<i64> c; // c[d * |G| + g] mod N
    i64 cval(int d, int g) const { return c[std::size_t(d) * f.n + g]; }
    static EquivariantExtension zero(int n, int nd);
    bool operator==(const EquivariantExtension&) const = default;
};

enum class Law { Normalization, C1, C2, C3 };
const char* law_name(Law l);
struct Violation {
    Law law;
    std::string witness;
};
std::optional<Violation> validate(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal);
// throws InvalidCocycle naming the law
void require_valid(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal);

struct ExtensionGroup {
    FiniteGroup group;   // element (l, g) has index l + N g
    GroupAction action;  // delta on the extension
    i64 N = 1;
    int index(i64 l, int g) const { return int(md(l, N) + N * g); }
    int base(int x) const { return int(x / N); }
    i64 fiber(int x) const { return x % N; }
};
ExtensionGroup extension_group(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal,
                               i64 cap = 4096);

// b on H (indexed by the view) with f(g,h) = b(gh) - b(g) - b(h) mod N
std::optional<ZVec> splits_over(const FiniteGroup& G, const EquivariantExtension& e, i64 N, const Subgroup& H);
// additionally chi(d) b(g) + c_d(g) = b(d g) for d in Dsub; H must be Dsub-stable.
// lift_to_N2 pushes (f, c) along Z/N -> Z/N^2 first.
std::optional<ZVec> splits_equivariantly(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal,
                                         const Subgroup& H, const Subgroup& Dsub, bool lift_to_N2 = false);

// Restriction along H <= G and Dsub <= Delta (H must be Dsub-stable).
struct Pullback {
    SubgroupView H, D;
    GaloisDatum gal;
    EquivariantExtension ext;
};
Pullback pullback(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal, const Subgroup& H,
                  const Subgroup& Dsub);

EquivariantExtension baer_sum(const EquivariantExtension& a, const EquivariantExtension& b, i64 N);
EquivariantExtension negate(const EquivariantExtension& a, i64 N);
// the pair (db, chi(d) b(g) - b(d g))
EquivariantExtension coboundary_pair(const FiniteGroup& G, const GaloisDatum& gal, std::span<const i64> b);

// Solutions of C1-C3 modulo coboundary pairs.
class ClassModule {
public:
    ClassModule(const FiniteGroup& G, const GaloisDatum& gal, i64 cap = 64);

    const FiniteGroup& group() const { return P_.group(); }
    const GaloisDatum& galois() const { return gal_; }
    i64 N() const { return gal_.N; }
    int width() const { return W_; }
    const AbelianStructure& structure() const { return S_; }
    const std::vector<i64>& factors() const { return S_.factors(); }
    const std::vector<EquivariantExtension>& reps() const { return reps_; }

    ZVec params(const EquivariantExtension& e) const;
    EquivariantExtension table(std::span<const i64> x) const;
    ZVec coords(const EquivariantExtension& e) const { return S_.coords(params(e)); }
    EquivariantExtension element(std::span<const i64> coords) const { return table(S_.element(coords)); }
    // the module divided further by extra parameter vectors
    AbelianStructure quotient(const std::vector<ZVec>& extra) const;

private:
    GaloisDatum gal_;
    CocycleParam P_;
    int Uf_ = 0, W_ = 0;
    std::vector<int> cidx_; // c[d * n + g] -> column or -1
    std::unique_ptr<RowReducer> R_;
    std::vector<ZVec> den_;
    AbelianStructure S_;
    std::vector<EquivariantExtension> reps_;
};

// Delta-equivariant characters G -> Z/N and the subgroup their Bocksteins generate
struct KummerKernel {
    std::vector<ZVec> characters;     // generating set
    std::vector<EquivariantExtension> pairs;
    std::vector<ZVec> coords;         // in class module coordinates
    std::vector<i64> factors;         // structure of the generated subgroup
};
// all phi with phi(d g) = chi(d) phi(g) mod N, as a generating set
std::vector<ZVec> equivariant_characters(const FiniteGroup& G, const GaloisDatum& gal);
EquivariantExtension kummer_pair(const FiniteGroup& G, const GaloisDatum& gal, std::span<const i64> phi);
KummerKernel kummer_kernel(const ClassModule& C);

// structure of the subgroup of sum Z/q_i generated by the given coordinate vectors
std::vector<i64> generated_subgroup(const std::vector<i64>& q, const std::vector<ZVec>& gens);

} // namespace brauer
