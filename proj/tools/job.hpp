#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauer/caps.hpp"
#include "brauer/extensions.hpp"
#include "brauer/local.hpp"
#include "brauer/semidirect.hpp"

namespace cli {

using brauer::i64;
using json = nlohmann::json;

enum class Task { B0, BrNr, Sha1Bic, Algebraic, Evaluate, BmReport, Sha2Ab };
const char* task_name(Task t);

struct GroupRecord {
    std::string kind;  // table | permutations | abelian | semidirect | group_ring
    json canon_json;   // canonical form of the record
    std::optional<brauer::SemidirectDatum> sd;
    std::optional<brauer::GroupRingExample> ring;
    std::optional<brauer::FiniteGroup> table;  // built lazily for the coded kinds
};

struct LocalRecord {
    std::string label;
    bool witness = false;           // group_ring only: the built-in witness subgroup
    brauer::FiniteGroup dv;
    std::vector<int> structure;
    json canon_json;
};

struct Job {
    GroupRecord group;
    std::optional<json> galois;     // canonical galois record, if given
    std::vector<LocalRecord> local;
    Task task = Task::B0;
    i64 m = 0;                      // sha2ab coefficient
    std::vector<i64> multiples;     // group_ring classes k [a]
    brauer::Caps caps;
};

// syntax errors become ParseError with line and column; shape errors ValidationError naming the field
Job parse_job(const std::string& text, const brauer::Caps& base);
json canonical(const Job& job);

brauer::FiniteGroup& group_table(Job& job);
// the Galois datum over the table group; trivial with N = |G| when absent
brauer::GaloisDatum galois_datum(Job& job);

} // namespace cli
