#pragma once

#include <array>
#include <string>
#include <vector>

namespace minkdef {

/// Definability status matrix: one row per quantifier-prefix class, one
/// column per direction between the three relations. Cell values are a
/// shipped formula name, "impossible", "open", or "not-machine-checked"
/// (definable by a derived argument for which no distinct formula ships).
struct StatusMatrix {
    std::string regime; // "n=2, any ordered field" or "n>2, Euclidean field"
    std::array<std::string, 6> columns;
    struct Row {
        std::string prefix;
        std::array<std::string, 6> cells;
    };
    std::vector<Row> rows;
    std::vector<std::string> notes;
};

/// The matrix for dimension n (n = 2 has its own table; n >= 3 uses the
/// Euclidean-field table).
StatusMatrix status_matrix(int n);

} // namespace minkdef
