#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bdi/quiver.hpp"

namespace bdi {

/// A set of lattice cells stored as a dense bit vector over the global cell
/// index. Since the index is the rank under the page/row/column order, the
/// sorted cell list is simply the sequence of set bits.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(int universe);

    static CellSet from_indices(int universe, const std::vector<int>& indices);
    static CellSet from_cells(const Instance& instance, const std::vector<Cell>& cells);
    static CellSet full(int universe);

    int universe() const { return universe_; }
    bool test(int index) const { return (words_[word(index)] >> bit(index)) & 1U; }
    void set(int index) { words_[word(index)] |= std::uint64_t{1} << bit(index); }
    void reset(int index) { words_[word(index)] &= ~(std::uint64_t{1} << bit(index)); }

    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<int> indices() const;
    std::vector<Cell> cells(const Instance& instance) const;

    bool is_subset_of(const CellSet& other) const;
    CellSet operator&(const CellSet& other) const;
    CellSet operator|(const CellSet& other) const;
    /// Set difference.
    CellSet operator-(const CellSet& other) const;
    CellSet with(int index) const;
    CellSet without(int index) const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::size_t hash() const;

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    static std::size_t word(int index) { return static_cast<std::size_t>(index) >> 6; }
    static unsigned bit(int index) { return static_cast<unsigned>(index) & 63U; }
    void check_universe(const CellSet& other) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct CellSetHash {
    std::size_t operator()(const CellSet& s) const { return s.hash(); }
};

/// Compares equal-size sets by their largest differing cell: the set that
/// holds it is the larger one. Throws PreconditionError on unequal sizes.
std::strong_ordering cmp_t_sets(const CellSet& lhs, const CellSet& rhs);

}  // namespace bdi
