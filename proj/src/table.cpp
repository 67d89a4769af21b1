#include "qpath/table.hpp"

#include <map>
#include <sstream>

namespace qpath {

namespace {

KnownValueTable build_table() {
    KnownValueTable t;
    t.rows = {{0, 0}, {1, 1}, {2, 0}, {2, 2}, {3, 1},
              {3, 3}, {4, 0}, {4, 2}, {4, 4}, {5, 1}};
    t.cols = {{0, 1}, {1, 0}, {2, 0}, {1, 1}, {0, 2},
              {3, 0}, {2, 1}, {1, 2}, {0, 3}};
    auto S = TableEntry{CellKind::Impossible, 0};
    auto O = TableEntry{CellKind::Open, 0};
    auto V = [](int v) { return TableEntry{CellKind::Value, v}; };
    auto U = [](int v) { return TableEntry{CellKind::Upper, v}; };
    auto L = [](int v) { return TableEntry{CellKind::Lower, v}; };
    auto X = [](int v) { return TableEntry{CellKind::External, v}; };
    t.cells = {
        {S, V(1), V(2), S, V(4), V(5), S, X(4), S},
        {V(2), S, S, V(4), S, S, X(5), S, X(5)},
        {S, V(4), V(4), S, V(5), O, S, O, S},
        {S, S, S, S, V(4), S, S, U(6), S},
        {V(4), S, S, V(5), S, S, O, S, O},
        {S, S, S, S, S, S, S, S, U(6)},
        {S, V(5), X(5), S, O, O, S, O, S},
        {S, S, S, S, V(5), S, S, O, S},
        {S, S, S, S, S, S, S, S, S},
        {V(5), S, S, L(5), S, S, O, S, O},
    };
    return t;
}

std::string cell_str(const TableEntry& e) {
    switch (e.kind) {
        case CellKind::Value: return std::to_string(e.value);
        case CellKind::Upper: return "<=" + std::to_string(e.value);
        case CellKind::Lower: return ">=" + std::to_string(e.value);
        case CellKind::Impossible: return "*";
        case CellKind::External: return std::to_string(e.value) + "*";
        case CellKind::Open: return "";
    }
    return "";
}

const char* cell_evidence(const Signature& s, const TableEntry& e) {
    if (e.kind == CellKind::Impossible) return "impossible (balance cannot hold)";
    if (e.kind == CellKind::Open) return "out of scope";
    if (e.kind == CellKind::Lower) return "counterexample family (lower bound only)";
    if (e.kind == CellKind::External)
        return constructive_threshold(s) ? "external result; reduction chain gives <= 6"
                                         : "external result";
    // bespoke builders vs reduction chains
    static const std::map<std::tuple<int, int, int, int>, const char*> kind{
        {{3, 1, 1, 1}, "reduction chain + oracle sweep"},
        {{2, 0, 0, 2}, "reduction chain + oracle sweep"},
        {{2, 2, 1, 2}, "reduction chain"},
    };
    auto it = kind.find({s.M, s.C, s.N, s.O});
    if (it != kind.end()) return it->second;
    return "constructive sweep + counterexample at the previous dimension";
}

} // namespace

const KnownValueTable& known_table() {
    static const KnownValueTable t = build_table();
    return t;
}

std::optional<TableEntry> KnownValueTable::lookup(const Signature& s) const {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] != std::pair<int, int>{s.M, s.C}) continue;
        for (size_t j = 0; j < cols.size(); ++j)
            if (cols[j] == std::pair<int, int>{s.N, s.O}) return cells[i][j];
    }
    return std::nullopt;
}

std::optional<int> constructive_threshold(const Signature& s) {
    static const std::map<std::tuple<int, int, int, int>, int> thr{
        {{0, 0, 1, 0}, 1}, {{0, 0, 2, 0}, 2}, {{1, 1, 0, 1}, 2}, {{2, 0, 1, 0}, 4},
        {{0, 0, 0, 2}, 4}, {{1, 1, 1, 1}, 4}, {{3, 1, 0, 1}, 4}, {{2, 2, 0, 2}, 4},
        {{2, 0, 2, 0}, 4}, {{4, 0, 1, 0}, 5}, {{0, 0, 3, 0}, 5}, {{4, 2, 0, 2}, 5},
        {{5, 1, 0, 1}, 5}, {{3, 3, 0, 3}, 6}, {{3, 1, 1, 1}, 5}, {{2, 0, 0, 2}, 5},
        {{1, 1, 2, 1}, 6}, {{2, 2, 1, 2}, 6}, {{0, 0, 1, 2}, 6}, {{1, 1, 0, 3}, 6},
    };
    auto it = thr.find({s.M, s.C, s.N, s.O});
    if (it == thr.end()) return std::nullopt;
    return it->second;
}

std::string render_table_markdown() {
    const auto& t = known_table();
    std::ostringstream out;
    out << "| M,C \\ N,O |";
    for (auto& [n, o] : t.cols) out << " " << n << "," << o << " |";
    out << "\n|---|";
    for (size_t j = 0; j < t.cols.size(); ++j) out << "---|";
    out << "\n";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        out << "| " << t.rows[i].first << "," << t.rows[i].second << " |";
        for (size_t j = 0; j < t.cols.size(); ++j) {
            std::string c = cell_str(t.cells[i][j]);
            out << " " << (c.empty() ? " " : c) << " |";
        }
        out << "\n";
    }
    out << "\nEvidence:\n";
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (size_t j = 0; j < t.cols.size(); ++j) {
            Signature s{t.rows[i].first, t.rows[i].second, t.cols[j].first,
                        t.cols[j].second};
            const auto& e = t.cells[i][j];
            std::string c = cell_str(e);
            out << "- [" << s.M << "," << s.C << "," << s.N << "," << s.O << "] "
                << (c.empty() ? "?" : c) << " — " << cell_evidence(s, e) << "\n";
        }
    return out.str();
}

std::string render_table_csv() {
    const auto& t = known_table();
    std::ostringstream out;
    out << "MC\\NO";
    for (auto& [n, o] : t.cols) out << "," << n << o;
    out << "\n";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        out << t.rows[i].first << t.rows[i].second;
        for (size_t j = 0; j < t.cols.size(); ++j)
            out << "," << cell_str(t.cells[i][j]);
        out << "\n";
    }
    return out.str();
}

} // namespace qpath
