#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubical/errors.hpp"
#include "cubical/integer.hpp"

namespace cubical {

enum class Convention
{
    simplicial,
    cubical
};

/**
 * Face numbers f_{-1}, f_0, ..., f_dim. The convention is part of the type:
 * a simplicial f-vector of a (d-1)-complex and a cubical f-vector of a
 * d-complex cannot be passed to each other's transforms.
 *
 * f_{-1} = 1 is stored for both conventions; cubical vectors are reported
 * from f_0 (first_index() == 0).
 */
template <Convention C>
class FVector
{
public:
    FVector(int dim, std::vector<Int> from_minus_one)
        : m_dim(dim)
        , m_entries(std::move(from_minus_one))
    {
        if (dim < -1 || m_entries.size() != static_cast<std::size_t>(dim + 2)) {
            throw InvalidArgument("f-vector length does not match dimension " + std::to_string(dim));
        }
        for (Int x : m_entries) {
            if (x < 0) {
                throw InvalidArgument("negative face number");
            }
        }
    }

    static constexpr Convention convention = C;
    static constexpr int first_index() { return C == Convention::simplicial ? -1 : 0; }

    int dim() const { return m_dim; }

    /// f_i, zero outside [-1, dim].
    Int operator[](int i) const
    {
        if (i < -1 || i > m_dim) {
            return 0;
        }
        return m_entries[static_cast<std::size_t>(i + 1)];
    }

    /// Entries from first_index() to dim.
    std::vector<Int> reported() const
    {
        return {m_entries.begin() + (first_index() + 1), m_entries.end()};
    }

    bool operator==(const FVector&) const = default;

private:
    int m_dim;
    std::vector<Int> m_entries;
};

using SimplicialFVector = FVector<Convention::simplicial>;
using CubicalFVector = FVector<Convention::cubical>;

enum class HKind
{
    simplicial,    ///< h_0..h_d of a (d-1)-dimensional simplicial complex
    short_cubical, ///< h^{sc}_0..h^{sc}_d of a d-dimensional cubical complex
    long_cubical   ///< h^{(c)}_0..h^{(c)}_{d+1} of a d-dimensional cubical complex
};

inline std::string to_string(HKind k)
{
    switch (k) {
    case HKind::simplicial: return "simplicial";
    case HKind::short_cubical: return "short_cubical";
    case HKind::long_cubical: return "long_cubical";
    }
    return "?";
}

/// Number of entries an h-vector of kind K has for parameter d.
constexpr std::size_t h_length(HKind k, int d)
{
    return static_cast<std::size_t>(k == HKind::long_cubical ? d + 2 : d + 1);
}

/**
 * An h-vector with its kind and parameter d carried along. For simplicial
 * vectors d is one more than the complex dimension; for the cubical kinds d
 * is the complex dimension.
 */
template <HKind K>
class HVector
{
public:
    HVector(int d, std::vector<Int> entries)
        : m_d(d)
        , m_entries(std::move(entries))
    {
        if (d < 0 || m_entries.size() != h_length(K, d)) {
            throw InvalidArgument(to_string(K) + " h-vector length does not match d = " + std::to_string(d));
        }
    }

    static constexpr HKind kind = K;

    int d() const { return m_d; }
    std::size_t size() const { return m_entries.size(); }

    /// h_j, zero outside the stored range (so h_{-1} = 0).
    Int operator[](int j) const
    {
        if (j < 0 || static_cast<std::size_t>(j) >= m_entries.size()) {
            return 0;
        }
        return m_entries[static_cast<std::size_t>(j)];
    }

    const std::vector<Int>& entries() const { return m_entries; }

    bool operator==(const HVector&) const = default;

private:
    int m_d;
    std::vector<Int> m_entries;
};

using SimplicialHVector = HVector<HKind::simplicial>;
using ShortCubicalHVector = HVector<HKind::short_cubical>;
using LongCubicalHVector = HVector<HKind::long_cubical>;

/// g_0..g_m: g_0 = h_0 and g_i = h_i - h_{i-1}.
template <HKind K>
class GVector
{
public:
    explicit GVector(std::vector<Int> entries)
        : m_entries(std::move(entries))
    {}

    static constexpr HKind kind = K;

    std::size_t size() const { return m_entries.size(); }

    Int operator[](int i) const
    {
        if (i < 0 || static_cast<std::size_t>(i) >= m_entries.size()) {
            return 0;
        }
        return m_entries[static_cast<std::size_t>(i)];
    }

    const std::vector<Int>& entries() const { return m_entries; }

    bool operator==(const GVector&) const = default;

private:
    std::vector<Int> m_entries;
};

} // namespace cubical
