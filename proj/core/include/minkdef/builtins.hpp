#pragma once

#include "minkdef/formula.hpp"

#include <string>
#include <vector>

namespace minkdef {

/// Field hypothesis under which a named formula's defining theorem holds.
enum class FieldReq {
    AnyOrdered,         // works over every ordered field
    EuclideanOrN2,      // n = 2 over any ordered field, or any n over a Euclidean field
    EuclideanAndN3Plus, // needs n >= 3 and a Euclidean field
};

const char* field_req_name(FieldReq r);

/// One of the shipped defining formulas, together with its claimed
/// complexity and validity regime. The claims are recomputed and checked
/// against the formula at registry construction.
struct NamedFormula {
    std::string name;
    Formula formula;
    int claimed_vars;
    std::string claimed_prefix;
    RelKind source; // relation the formula is written over
    RelKind target; // relation it defines
    int min_n;      // smallest dimension the defining theorem covers
    int max_n;      // largest dimension (0 = unbounded)
    FieldReq field_req;
};

const std::vector<NamedFormula>& all_builtins();
const NamedFormula& builtin(const std::string& name); // UnknownName

} // namespace minkdef
