#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace forceps {

using Vertex = int;

/// Maximum number of vertices a graph may have; one machine word per set.
inline constexpr int max_vertices = 64;

/// A set of vertices in [0, 64), stored as a single bit word.
///
/// Iteration is always in ascending vertex order. Every witness the library
/// reports is built from these sets, so this ordering is what makes results
/// reproducible.
class VertexSet {
public:
    using word_type = std::uint64_t;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(word_type rest) : rest_(rest) {}

        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        word_type rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(word_type bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs) insert(v);
    }

    /// {0, 1, ..., n-1}.
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 64 ? ~word_type{0} : ((word_type{1} << n) - 1));
    }
    static constexpr VertexSet singleton(Vertex v) { return VertexSet(word_type{1} << v); }
    static VertexSet from_vector(const std::vector<Vertex>& vs)
    {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    constexpr word_type bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    /// Smallest member; undefined on an empty set.
    constexpr Vertex front() const { return std::countr_zero(bits_); }
    /// Largest member; undefined on an empty set.
    constexpr Vertex back() const { return 63 - std::countl_zero(bits_); }

    void insert(Vertex v)
    {
        if (v < 0 || v >= max_vertices) throw std::out_of_range("vertex index out of range");
        bits_ |= word_type{1} << v;
    }
    constexpr void erase(Vertex v) { bits_ &= ~(word_type{1} << v); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Complement within [0, n).
    constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & range(n).bits_); }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    constexpr VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

private:
    word_type bits_ = 0;
};

/// Lexicographic comparison of the ascending member lists, so {0,1} < {0,2} < {1}.
inline std::strong_ordering lex_compare(VertexSet a, VertexSet b)
{
    if (a == b) return std::strong_ordering::equal;
    const VertexSet diff(a.bits() ^ b.bits());
    const Vertex first = diff.front();
    // Both lists agree below `first`. The one holding `first` is smaller unless
    // the other has already run out of elements.
    const VertexSet above(~VertexSet::range(first).bits());
    if (a.contains(first)) {
        return (b & above).empty() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return (a & above).empty() ? std::strong_ordering::less : std::strong_ordering::greater;
}

inline bool lex_less(VertexSet a, VertexSet b) { return lex_compare(a, b) < 0; }

/// "[0,2,5]"
std::string to_string(VertexSet s);

/// Parses "0,2,5" (ascending, comma separated). An empty string is the empty set.
VertexSet parse_vertex_list(const std::string& text);

/// Visits every k-subset of `pool` in lexicographic order of the member lists.
/// The visitor returns false to stop early. Returns false iff stopped.
template <class Visitor>
bool for_each_subset_of_size(VertexSet pool, int k, Visitor&& visit)
{
    const std::vector<Vertex> items = pool.to_vector();
    const int m = static_cast<int>(items.size());
    if (k < 0 || k > m) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s |= VertexSet::singleton(items[i]);
        if (!visit(s)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace forceps
