#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpath/core.hpp"

namespace qpath {

// Known threshold values by signature.  Stars mark signatures that are
// impossible for every dimension (the balance condition can never hold);
// external entries are known exact values whose constructions are not
// part of this engine; open cells have no known value.
enum class CellKind { Value, Upper, Lower, Impossible, External, Open };

struct TableEntry {
    CellKind kind = CellKind::Open;
    int value = 0; // the value or bound; unused for Impossible/Open

    bool operator==(const TableEntry&) const = default;
};

struct KnownValueTable {
    std::vector<std::pair<int, int>> rows;       // (M, C)
    std::vector<std::pair<int, int>> cols;       // (N, O)
    std::vector<std::vector<TableEntry>> cells;  // [row][col]

    std::optional<TableEntry> lookup(const Signature& s) const;
};

const KnownValueTable& known_table();

// Constructive threshold used by the dispatcher: the dimension from which
// the engine can build a covering for the signature (bespoke builder or
// reduction chain).  Differs from the table value for external cells and
// for chains that overshoot the known bound.
std::optional<int> constructive_threshold(const Signature& s);

std::string render_table_markdown();
std::string render_table_csv();

} // namespace qpath
