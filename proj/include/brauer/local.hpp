#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brauer/caps.hpp"
#include "brauer/extensions.hpp"
#include "brauer/semidirect.hpp"

namespace brauer {

// Evidence from local_witness that c_v^*[a] != 0 for the class named class_id.
struct WitnessCertificate {
    std::string class_id;
    std::vector<int> cv;      // Delta_v -> Q
    ZVec inflated_coords;
};

// Finite stand-in for a local Galois group.
struct LocalDatum {
    std::string label;
    FiniteGroup dv;
    std::vector<int> structure; // Delta_v -> Delta
    std::vector<WitnessCertificate> certificates;
};
// structure must be a homomorphism into gal.delta (InvalidDatum)
void validate_local(const LocalDatum& ld, const GaloisDatum& gal);
// chi on Delta_v mod m
std::vector<i64> local_chi(const LocalDatum& ld, const GaloisDatum& gal, i64 m);

// h: Delta_v -> G with h(1) = 1 and h(st) = h(s) . (s.h(t)); elements of G as codes
struct NonabelianCocycle {
    std::vector<i64> h;
    bool operator==(const NonabelianCocycle&) const = default;
};

// What the evaluation needs from G and the extension; elements are codes.
struct EvalModel {
    i64 N = 1;
    GaloisDatum gal;  // delta and chi; gal.action is unused when act is set
    std::function<i64(i64, i64)> mul;
    std::function<i64(int, i64)> act;  // delta on G
    std::function<i64(i64, i64)> f;
    std::function<i64(int, i64)> c;
    std::string class_id;                       // empty: no certificate can apply
    std::function<int(i64)> to_q;               // projection to Q, when G = N x| Q
};
EvalModel table_model(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal);
// the extension of a Q-cocycle on the coded product; Delta acts only on coefficients
EvalModel q_cocycle_model(const CodedSemidirect& G, const Cochain& a, const GaloisDatum& gal,
                          const std::string& class_id);

// all classes of nonabelian H^1(Delta_v, G), lexicographically least representatives, sorted
std::vector<NonabelianCocycle> nonabelian_h1(const LocalDatum& ld, const FiniteGroup& G, const GaloisDatum& gal,
                                             const Caps& caps = {});
bool is_nonabelian_cocycle(const EvalModel& m, const LocalDatum& ld, const NonabelianCocycle& h);

enum class Verdict { Zero, NonzeroCertified, Unknown };
const char* verdict_name(Verdict v);

struct Evaluation {
    Cochain beta;  // beta(s,t) = c_s(h_t) + f(h_s, s.h_t) mod N
    Verdict verdict = Verdict::Unknown;
    std::string reason;
};
Evaluation evaluate(const EvalModel& m, const LocalDatum& ld, const NonabelianCocycle& h);
Evaluation evaluate(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal,
                    const LocalDatum& ld, const NonabelianCocycle& h);

enum class RowStatus { Admissible, Excluded, Undetermined };
const char* status_name(RowStatus s);

struct LocalPoints {
    LocalDatum datum;
    std::vector<NonabelianCocycle> points;
};
struct BmRow {
    std::vector<int> choice;                   // point index per datum
    std::vector<std::vector<Verdict>> verdict; // [class][datum]
    RowStatus status = RowStatus::Admissible;
};
struct BmReport {
    std::vector<std::string> labels;
    std::vector<BmRow> rows;
};
// Excluded: some class is NonzeroCertified at exactly one place and Zero at all others.
// Admissible: every verdict Zero.  Undetermined otherwise.
BmReport bm_report(const std::vector<EvalModel>& classes, const std::vector<LocalPoints>& data, i64 row_cap = 100000);
// table form: every extension must pass is_unramified (PreconditionViolated), points from nonabelian_h1
BmReport bm_report(const FiniteGroup& G, const GaloisDatum& gal, const std::vector<EquivariantExtension>& classes,
                   const std::vector<LocalDatum>& data, const Caps& caps = {});

// The q-cocycle extension restricted to a subgroup of the coded product; codes are local indices.
EvalModel subgroup_model(const CodedSemidirect& G, const CodedSemidirect::Table& H, const Cochain& a,
                         const GaloisDatum& gal, const std::string& class_id);

// The group ring example at p = 2 with class p^2 [a].  Delta_v is a subgroup of N x| Q of order 2048
// mapping onto Q (not split over its intersection with N); the point is its inclusion.
struct GroupRingWitness {
    GroupRingExample example;
    Cochain class_cocycle;
    std::string class_id;
    CodedSemidirect::Table subgroup;
    LocalWitness witness;
    LocalDatum datum;       // structure map to the trivial Delta, certificate attached
    GaloisDatum gal;        // Delta trivial, N = exp(N)
    EvalModel model;        // subgroup_model for class_cocycle
    NonabelianCocycle point;
    NonabelianCocycle base_point;
};
GroupRingWitness group_ring_witness(const Caps& caps = {});
// the generators of Delta_v as codes in N x| Q
std::vector<i64> group_ring_witness_generators(const CodedSemidirect& G);

} // namespace brauer
