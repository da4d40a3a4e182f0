// Square integer tables indexed by (p, q): e^{pq}, e_c^{pq} or h^{pq}.
#pragma once

#include "toric_hodge/core.hpp"

namespace toric {

struct EPQTable {
    enum class Tag { ordinary, compact, hodge };

    Tag tag = Tag::compact;
    IntMatrix cells;  // cells[p][q]; size 0 for the empty variety

    EPQTable() = default;
    EPQTable(std::size_t size, Tag t) : tag(t), cells(size, IntVector(size, Int(0))) {}

    std::size_t size() const { return cells.size(); }
    /// Top index n; -1 for the empty table.
    long n() const { return static_cast<long>(cells.size()) - 1; }
    Int& at(std::size_t p, std::size_t q) { return cells[p][q]; }
    const Int& at(std::size_t p, std::size_t q) const { return cells[p][q]; }

    bool is_zero() const {
        for (const auto& row : cells)
            for (const auto& x : row)
                if (x != 0) return false;
        return true;
    }
    bool operator==(const EPQTable&) const = default;
};

inline const char* tag_name(EPQTable::Tag t) {
    switch (t) {
        case EPQTable::Tag::ordinary: return "ordinary";
        case EPQTable::Tag::compact: return "compact";
        case EPQTable::Tag::hodge: return "hodge";
    }
    return "";
}

/// Kuenneth product: (a * b)^{pq} = sum a^{ij} b^{p-i, q-j}.
inline EPQTable convolve(const EPQTable& a, const EPQTable& b) {
    if (a.size() == 0 || b.size() == 0) return EPQTable(0, a.tag);
    EPQTable out(a.size() + b.size() - 1, a.tag);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (std::size_t u = 0; u < b.size(); ++u)
                for (std::size_t v = 0; v < b.size(); ++v) out.at(i + u, j + v) += a.at(i, j) * b.at(u, v);
        }
    return out;
}

}  // namespace toric
