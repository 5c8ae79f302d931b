#pragma once

// Fraction-free sparse row echelon form over the integers.
//
// Rows are primitive (content 1) integer vectors with a positive pivot
// coefficient at their smallest key. The basis is kept fully reduced: a
// pivot column is nonzero in exactly one stored row. Consequently two
// RowSpaces over the same span hold identical rows.

#include <map>
#include <numeric>
#include <optional>

#include "ramond/scalar.hpp"

namespace ramond {

template <class Key>
class RowSpace {
public:
    using Row = std::map<Key, Integer>;

    /// Clears denominators and content; returns an empty row for zero.
    static Row integral(const std::map<Key, Rational>& q)
    {
        Integer l = 1;
        for (const auto& [k, c] : q)
            if (c != 0)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        Row r;
        for (const auto& [k, c] : q)
            if (c != 0)
                r.emplace(k, Integer(c.get_num() * (l / c.get_den())));
        normalize(r);
        return r;
    }

    /// Inserts `r`; returns true when the rank grows.
    bool insert(Row r)
    {
        reduce_in_place(r);
        if (r.empty())
            return false;
        normalize(r);
        const Key pivot = r.begin()->first;
        const Integer a = r.begin()->second;
        for (auto& [k, row] : rows_) {
            auto it = row.find(pivot);
            if (it == row.end())
                continue;
            Integer c = it->second;
            eliminate(row, r, a, c);
            normalize(row);
        }
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    bool contains(Row r) const
    {
        reduce_in_place(r);
        return r.empty();
    }

    /// Remainder of `r` after full reduction, normalized.
    Row reduce(Row r) const
    {
        reduce_in_place(r);
        normalize(r);
        return r;
    }

    std::size_t rank() const { return rows_.size(); }
    bool has_pivot(const Key& k) const { return rows_.count(k) != 0; }
    const std::map<Key, Row>& rows() const { return rows_; }

    friend bool operator==(const RowSpace& a, const RowSpace& b) { return a.rows_ == b.rows_; }

private:
    // row <- a*row - c*piv, where a is piv's pivot coefficient and c row's.
    static void eliminate(Row& row, const Row& piv, const Integer& a, const Integer& c)
    {
        if (a != 1)
            for (auto& [k, x] : row)
                x *= a;
        for (const auto& [k, x] : piv) {
            auto [it, inserted] = row.try_emplace(k, 0);
            it->second -= c * x;
            if (it->second == 0)
                row.erase(it);
        }
    }

    void reduce_in_place(Row& r) const
    {
        auto it = r.begin();
        while (it != r.end()) {
            auto p = rows_.find(it->first);
            if (p == rows_.end()) {
                ++it;
                continue;
            }
            const Key k = it->first;
            Integer c = it->second;
            const Row& piv = p->second;
            eliminate(r, piv, piv.begin()->second, c);
            normalize(r);
            it = r.upper_bound(k);
        }
    }

    static void normalize(Row& r)
    {
        if (r.empty())
            return;
        Integer g = 0;
        for (const auto& [k, x] : r)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (r.begin()->second < 0)
            g = -g;
        if (g != 1)
            for (auto& [k, x] : r)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }

    std::map<Key, Row> rows_;
};

} // namespace ramond
