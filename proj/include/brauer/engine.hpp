#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/caps.hpp"
#include "brauer/extensions.hpp"

namespace brauer {

struct Witness {
    std::string condition; // "bogomolov" or "galois"
    std::string detail;
};

struct BrauerReport {
    std::vector<i64> factors;                  // the unramified group
    std::vector<EquivariantExtension> reps;    // one per factor
    std::vector<i64> ambient;                  // class module
    std::vector<i64> kummer;                   // Kummer subgroup
    std::vector<i64> quotient;                 // class module / Kummer
    std::string method;                        // "exhaustive" or "linear"
    i64 tested = 0, passed = 0;
    std::optional<Witness> first_failure;
    std::string str() const { return factors_str(factors); }
};

// (delta, tau, gamma) with gamma (delta tau) gamma^-1 = tau^chi(delta)
struct GaloisTriple {
    int d, tau, gamma;
    int t;  // order of tau
    i64 e;  // chi(delta) mod t
    i64 u;  // (chi(delta) - e) / t, chi taken in [0, N^2)
};
std::vector<GaloisTriple> galois_triples(const FiniteGroup& G, const GaloisDatum& gal);

// noncyclic bicyclic subgroups that are maximal among bicyclic subgroups
std::vector<Subgroup> maximal_bicyclic(const FiniteGroup& G);

std::optional<Witness> bogomolov_condition(const FiniteGroup& G, const EquivariantExtension& e, i64 N);
std::optional<Witness> bogomolov_condition(const FiniteGroup& G, const EquivariantExtension& e, i64 N,
                                           const std::vector<Subgroup>& subgroups);
// value that must vanish mod N for the triple to pass
i64 galois_defect(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal, const GaloisTriple& t);
bool galois_condition_single(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal, int d,
                             int tau, int gamma);
std::optional<Witness> is_unramified(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal);
// split cyclotomic case: (i) plus equivariant splitting over every cyclic subgroup for every delta
std::optional<Witness> is_unramified_split_cyclotomic(const FiniteGroup& G, const EquivariantExtension& e,
                                                      const GaloisDatum& gal);

BrauerReport b0(const FiniteGroup& G, const Caps& caps = {});
enum class Extraction { Auto, Exhaustive, Linear };
BrauerReport br_nr(const FiniteGroup& G, const GaloisDatum& gal, const Caps& caps = {},
                   Extraction how = Extraction::Auto);
BrauerReport algebraic_unramified(const FiniteGroup& G, const GaloisDatum& gal, const Caps& caps = {});
std::vector<i64> sha2_ab(const FiniteGroup& G, i64 m, const Caps& caps = {});

} // namespace brauer
