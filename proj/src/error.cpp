#include "brauer/caps.hpp"
#include "brauer/error.hpp"

namespace brauer {

const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::OrderBound: return "OrderBound";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::MismatchedBase: return "MismatchedBase";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "?";
}

bool Caps::set(const std::string& name, i64 value)
{
    if (name == "table_order") table_order = value;
    else if (name == "closure") closure = value;
    else if (name == "h2_base") h2_base = value;
    else if (name == "h1_enumeration") h1_enumeration = value;
    else if (name == "extension_order") extension_order = value;
    else if (name == "exhaustive_quotient") exhaustive_quotient = value;
    else if (name == "example_prime") example_prime = value;
    else if (name == "threads") threads = int(value);
    else return false;
    return true;
}

std::vector<std::pair<std::string, i64>> Caps::list() const
{
    return {{"table_order", table_order},
            {"closure", closure},
            {"h2_base", h2_base},
            {"h1_enumeration", h1_enumeration},
            {"extension_order", extension_order},
            {"exhaustive_quotient", exhaustive_quotient},
            {"example_prime", example_prime}};
}

void cap_exceeded(const std::string& cap, i64 measured, i64 limit)
{
    throw Error(ErrorKind::CapExceeded, "cap " + cap + " exceeded",
                cap + ": measured " + std::to_string(measured) + " > " + std::to_string(limit));
}

} // namespace brauer
