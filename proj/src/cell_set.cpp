#include "bdi/cell_set.hpp"

#include <bit>

#include "bdi/error.hpp"

namespace bdi {

CellSet::CellSet(int universe) : universe_(universe)
{
    if (universe < 0) throw PreconditionError("negative universe size");
    words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

CellSet CellSet::from_indices(int universe, const std::vector<int>& indices)
{
    CellSet s(universe);
    for (int idx : indices) {
        if (idx < 0 || idx >= universe) throw PreconditionError("cell index out of range");
        s.set(idx);
    }
    return s;
}

CellSet CellSet::from_cells(const Instance& instance, const std::vector<Cell>& cells)
{
    CellSet s(instance.cell_count());
    for (const auto& c : cells) {
        int idx = instance.index(c);
        if (s.test(idx)) throw PreconditionError("duplicate cell in set");
        s.set(idx);
    }
    return s;
}

CellSet CellSet::full(int universe)
{
    CellSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
}

int CellSet::count() const
{
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::vector<int> CellSet::indices() const
{
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        for (auto bits = words_[w]; bits != 0; bits &= bits - 1)
            out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
    return out;
}

std::vector<Cell> CellSet::cells(const Instance& instance) const
{
    std::vector<Cell> out;
    for (int idx : indices()) out.push_back(instance.cell(idx));
    return out;
}

void CellSet::check_universe(const CellSet& other) const
{
    if (universe_ != other.universe_) throw PreconditionError("cell sets belong to different lattices");
}

bool CellSet::is_subset_of(const CellSet& other) const
{
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

CellSet CellSet::operator&(const CellSet& other) const
{
    check_universe(other);
    CellSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
    return out;
}

CellSet CellSet::operator|(const CellSet& other) const
{
    check_universe(other);
    CellSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
    return out;
}

CellSet CellSet::operator-(const CellSet& other) const
{
    check_universe(other);
    CellSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
    return out;
}

CellSet CellSet::with(int index) const
{
    CellSet out = *this;
    out.set(index);
    return out;
}

CellSet CellSet::without(int index) const
{
    CellSet out = *this;
    out.reset(index);
    return out;
}

std::size_t CellSet::hash() const
{
    // splitmix64 finalizer folded over the words
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(universe_);
    for (auto w : words_) {
        std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        h ^= z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

std::strong_ordering cmp_t_sets(const CellSet& lhs, const CellSet& rhs)
{
    if (lhs.universe() != rhs.universe()) throw PreconditionError("cell sets belong to different lattices");
    if (lhs.count() != rhs.count()) throw PreconditionError("set comparison needs equal cardinalities");
    const auto& a = lhs.words();
    const auto& b = rhs.words();
    for (std::size_t w = a.size(); w-- > 0;) {
        if (a[w] != b[w]) return a[w] <=> b[w];
    }
    return std::strong_ordering::equal;
}

}  // namespace bdi
