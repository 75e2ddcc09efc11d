#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiblie/errors.hpp"
#include "fiblie/fibonacci.hpp"
#include "fiblie/gf2.hpp"

// The Fibonacci Lie algebra L over GF(2): basis monomials are squarefree
// tails t_{i_1} ... t_{i_k} times a symbolic pivot v_n, with the closed-form
// bracket.  Pivots are never expanded into derivation sums; everything flows
// through four rules:
//   v_n(t_j) = 0 (j < n), 1 (j = n), t_{n-1}...t_{j-2} (j > n)
//   [v_i, v_j] = t_{i-1} t_i ... t_{j-3} v_{j+1}  for i < j
//   [r v_n, s v_m] = r v_n(s) v_m + r s [v_n, v_m]  for n <= m (char 2)
//   t_i^2 = 0

namespace fiblie {

/// Squarefree monomial in the truncated variables t_0, t_1, ...
/// Bit i of `bits` set = factor t_i present; the empty tail is the constant 1.
class Tail {
public:
    static constexpr int kMaxVar = 63;

    constexpr Tail() = default;

    static Tail from_bits(std::uint64_t b) {
        Tail t;
        t.bits_ = b;
        return t;
    }

    static Tail single(int i) { return from_bits(std::uint64_t(1) << i); }

    /// Consecutive run {t_lo, ..., t_hi}; empty when lo > hi.
    static Tail run(int lo, int hi) {
        if (lo > hi)
            return Tail{};
        std::uint64_t ones = (hi - lo + 1 == 64) ? ~std::uint64_t(0)
                                                 : ((std::uint64_t(1) << (hi - lo + 1)) - 1);
        return from_bits(ones << lo);
    }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int count() const { return std::popcount(bits_); }
    bool contains(int i) const { return (bits_ >> i) & 1u; }

    Tail without(int i) const { return from_bits(bits_ & ~(std::uint64_t(1) << i)); }

    int min_index() const { return bits_ ? std::countr_zero(bits_) : -1; }
    int max_index() const { return bits_ ? 63 - std::countl_zero(bits_) : -1; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    std::int64_t fib_sum() const {
        std::int64_t s = 0;
        for (std::uint64_t b = bits_; b; b &= b - 1)
            s += fibonacci(std::countr_zero(b));
        return s;
    }

    friend auto operator<=>(const Tail&, const Tail&) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Product in R = k[t_i]/(t_i^2): disjoint union, or zero when a factor repeats.
inline std::optional<Tail> multiply_tails(Tail a, Tail b) {
    if (a.bits() & b.bits())
        return std::nullopt;
    return Tail::from_bits(a.bits() | b.bits());
}

/// v_n(t_j): nullopt = 0; the empty tail = 1 (j = n); a run for j > n.
inline std::optional<Tail> pivot_on_variable(int n, int j) {
    if (j < n)
        return std::nullopt;
    if (j == n)
        return Tail{};
    return Tail::run(n - 1, j - 2);
}

/// Basis monomial r v_n of L.  Valid when the tail fits under the pivot:
/// empty for n <= 3, indices <= n-4 otherwise.
struct BasisMonomial {
    Tail tail;
    int pivot = 1;

    bool valid() const {
        if (pivot < 1)
            return false;
        if (pivot <= 3)
            return tail.empty();
        return tail.empty() || tail.max_index() <= pivot - 4;
    }

    std::int64_t weight() const { return fibonacci(pivot) - tail.fib_sum(); }

    friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

inline BasisMonomial pivot_monomial(int n) { return BasisMonomial{Tail{}, n}; }

/// Canonical order: (weight, pivot, tail bitmask), all ascending.
inline std::strong_ordering canonical_compare(const BasisMonomial& a, const BasisMonomial& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0)
        return c;
    if (auto c = a.pivot <=> b.pivot; c != 0)
        return c;
    return a.tail.bits() <=> b.tail.bits();
}

inline bool canonical_less(const BasisMonomial& a, const BasisMonomial& b) {
    return canonical_compare(a, b) < 0;
}

/// GF(2) linear combination of basis monomials; addition is symmetric
/// difference of the support.  Stored sorted in canonical order.
class Element {
public:
    Element() = default;

    explicit Element(BasisMonomial m) : ms_{std::move(m)} {}

    static Element from_monomials(std::vector<BasisMonomial> ms) {
        std::sort(ms.begin(), ms.end(), canonical_less);
        std::vector<BasisMonomial> out;
        for (std::size_t i = 0; i < ms.size();) {
            std::size_t j = i;
            while (j < ms.size() && ms[j] == ms[i])
                ++j;
            if ((j - i) % 2)
                out.push_back(ms[i]);
            i = j;
        }
        Element e;
        e.ms_ = std::move(out);
        return e;
    }

    const std::vector<BasisMonomial>& monomials() const { return ms_; }
    bool is_zero() const { return ms_.empty(); }

    /// Weight when homogeneous (or zero); nullopt for mixed weights.
    std::optional<std::int64_t> degree() const {
        if (ms_.empty())
            return std::nullopt;
        std::int64_t d = ms_.front().weight();
        for (const auto& m : ms_)
            if (m.weight() != d)
                return std::nullopt;
        return d;
    }

    Element& operator+=(const Element& o) {
        std::vector<BasisMonomial> out;
        std::set_symmetric_difference(ms_.begin(), ms_.end(), o.ms_.begin(), o.ms_.end(),
                                      std::back_inserter(out), canonical_less);
        ms_ = std::move(out);
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::vector<BasisMonomial> ms_;
};

/// v_n applied to a tail by the Leibniz rule; GF(2) sum of tails.
inline std::vector<Tail> apply_pivot_to_tail(int n, Tail r) {
    std::vector<Tail> acc;
    for (int j : r.indices()) {
        std::optional<Tail> image = pivot_on_variable(n, j);
        if (!image)
            continue;
        std::optional<Tail> term = multiply_tails(r.without(j), *image);
        if (!term)
            continue;
        auto it = std::find(acc.begin(), acc.end(), *term);
        if (it != acc.end())
            acc.erase(it);
        else
            acc.push_back(*term);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

/// [v_i, v_j] = t_{i-1} ... t_{j-3} v_{j+1}; zero for i = j.
inline Element bracket_pivots(int i, int j) {
    if (i == j)
        return Element{};
    if (i > j)
        std::swap(i, j);
    return Element{BasisMonomial{Tail::run(i - 1, j - 3), j + 1}};
}

inline Element bracket_monomials(const BasisMonomial& a, const BasisMonomial& b) {
    const BasisMonomial& lo = a.pivot <= b.pivot ? a : b;
    const BasisMonomial& hi = a.pivot <= b.pivot ? b : a;
    if (lo.pivot == hi.pivot)
        return Element{};
    std::vector<BasisMonomial> terms;
    for (const Tail& t : apply_pivot_to_tail(lo.pivot, hi.tail))
        if (std::optional<Tail> full = multiply_tails(lo.tail, t))
            terms.push_back(BasisMonomial{*full, hi.pivot});
    if (std::optional<Tail> rs = multiply_tails(lo.tail, hi.tail))
        if (std::optional<Tail> full = multiply_tails(*rs, Tail::run(lo.pivot - 1, hi.pivot - 3)))
            terms.push_back(BasisMonomial{*full, hi.pivot + 1});
    return Element::from_monomials(std::move(terms));
}

inline Element bracket(const Element& x, const Element& y) {
    Element out;
    for (const auto& a : x.monomials())
        for (const auto& b : y.monomials())
            out += bracket_monomials(a, b);
    return out;
}

inline std::int64_t weight(const BasisMonomial& m) { return m.weight(); }

/// All valid monomials of weight exactly d, canonical order.  Complete: a
/// monomial with pivot n >= 4 weighs at least F_n - (F_{n-2} - 1) = F_{n-1} + 1,
/// so only pivots with F_{n-1} < d contribute beyond v_1, v_2, v_3.
inline std::vector<BasisMonomial> enumerate_basis(std::int64_t d) {
    std::vector<BasisMonomial> out;
    if (d < 1)
        return out;
    for (int n = 1; n <= 3; ++n)
        if (fibonacci(n) == d)
            out.push_back(pivot_monomial(n));
    for (int n = 4; fibonacci(n - 1) + 1 <= d; ++n) {
        std::int64_t target = fibonacci(n) - d;
        if (target < 0)
            continue;
        int top = n - 4;
        // subsets of {0..n-4} with Fibonacci sum = target; descend from the
        // largest variable, pruning with sum_{l<=k} F_l = F_{k+2} - 1.
        // F_0 = 0, so t_0 is weight-free and monomials pair up S / S+{t_0}.
        std::vector<int> picked;
        auto dfs = [&](auto&& self, int k, std::int64_t remaining) -> void {
            if (k < 0) {
                if (remaining == 0) {
                    Tail t;
                    for (int i : picked)
                        t = Tail::from_bits(t.bits() | Tail::single(i).bits());
                    out.push_back(BasisMonomial{t, n});
                }
                return;
            }
            if (remaining > fibonacci(k + 2) - 1)
                return;
            if (fibonacci(k) <= remaining) {
                picked.push_back(k);
                self(self, k - 1, remaining - fibonacci(k));
                picked.pop_back();
            }
            self(self, k - 1, remaining);
        };
        dfs(dfs, top, target);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

/// Shift endomorphism tau: every index up by one.  A Lie monomorphism.
inline BasisMonomial shift(const BasisMonomial& m) {
    return BasisMonomial{Tail::from_bits(m.tail.bits() << 1), m.pivot + 1};
}

inline Element shift(const Element& x) {
    std::vector<BasisMonomial> out;
    out.reserve(x.monomials().size());
    for (const auto& m : x.monomials())
        out.push_back(shift(m));
    return Element::from_monomials(std::move(out));
}

// -- coordinates over an ordered monomial list --------------------------------

inline std::size_t monomial_index(const BasisMonomial& m,
                                  const std::vector<BasisMonomial>& basis) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m, canonical_less);
    if (it == basis.end() || !(*it == m))
        throw DimensionMismatch("monomial not present in coordinate basis");
    return static_cast<std::size_t>(it - basis.begin());
}

inline gf2::BitVec coordinates(const Element& e, const std::vector<BasisMonomial>& basis) {
    gf2::BitVec v(basis.size());
    for (const auto& m : e.monomials())
        v.set(monomial_index(m, basis));
    return v;
}

inline Element from_coordinates(const gf2::BitVec& v, const std::vector<BasisMonomial>& basis) {
    std::vector<BasisMonomial> ms;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v.get(i))
            ms.push_back(basis[i]);
    return Element::from_monomials(std::move(ms));
}

/// Echelonized span of homogeneous Elements over an explicit monomial
/// coordinate list (canonical order).
class ElementSpan {
public:
    explicit ElementSpan(std::vector<BasisMonomial> support)
        : support_(std::move(support)), span_(support_.size()) {}

    static ElementSpan over_degree(std::int64_t d) { return ElementSpan(enumerate_basis(d)); }

    /// Span of the given elements over the union of their supports.
    static ElementSpan spanning(const std::vector<Element>& elems) {
        std::vector<BasisMonomial> support;
        for (const Element& e : elems)
            for (const auto& m : e.monomials())
                support.push_back(m);
        std::sort(support.begin(), support.end(), canonical_less);
        support.erase(std::unique(support.begin(), support.end()), support.end());
        ElementSpan s(std::move(support));
        for (const Element& e : elems)
            s.insert(e);
        return s;
    }

    const std::vector<BasisMonomial>& support() const { return support_; }
    std::size_t dim() const { return span_.dim(); }

    bool insert(const Element& e) { return span_.insert(coordinates(e, support_)); }

    bool contains(const Element& e) const {
        for (const auto& m : e.monomials()) {
            auto it = std::lower_bound(support_.begin(), support_.end(), m, canonical_less);
            if (it == support_.end() || !(*it == m))
                return false;
        }
        return span_.contains(coordinates(e, support_));
    }

    std::vector<Element> basis() const {
        std::vector<Element> out;
        out.reserve(span_.dim());
        for (const gf2::BitVec& row : span_.basis())
            out.push_back(from_coordinates(row, support_));
        return out;
    }

private:
    std::vector<BasisMonomial> support_;
    gf2::SpanBuilder span_;
};

/// Brute-force grading check: V_1 = span{v_1, v_2}, V_d = sum of [V_i, V_j].
/// Validates the derived Fibonacci weights against degree-in-the-generators.
inline std::vector<ElementSpan> grading_oracle(int max_degree) {
    std::vector<std::vector<Element>> generated(static_cast<std::size_t>(max_degree) + 1);
    if (max_degree >= 1)
        generated[1] = {Element{pivot_monomial(1)}, Element{pivot_monomial(2)}};
    for (int d = 2; d <= max_degree; ++d) {
        std::vector<Element> brackets;
        for (int i = 1; i + i <= d; ++i)
            for (const Element& x : generated[static_cast<std::size_t>(i)])
                for (const Element& y : generated[static_cast<std::size_t>(d - i)])
                    if (Element b = bracket(x, y); !b.is_zero())
                        brackets.push_back(std::move(b));
        generated[static_cast<std::size_t>(d)] =
            ElementSpan::spanning(brackets).basis();
    }
    std::vector<ElementSpan> spans;
    spans.reserve(static_cast<std::size_t>(max_degree));
    for (int d = 1; d <= max_degree; ++d)
        spans.push_back(ElementSpan::spanning(generated[static_cast<std::size_t>(d)]));
    return spans;
}

// -- canonical text encoding ---------------------------------------------------

/// "t0.t1.v5" style: tail variables ascending, then the pivot.
inline std::string encode(const BasisMonomial& m) {
    std::string s;
    for (int i : m.tail.indices()) {
        s += 't';
        s += std::to_string(i);
        s += '.';
    }
    s += 'v';
    s += std::to_string(m.pivot);
    return s;
}

inline std::string encode(const Element& e) {
    if (e.is_zero())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < e.monomials().size(); ++i) {
        if (i)
            s += " + ";
        s += encode(e.monomials()[i]);
    }
    return s;
}

/// Parses the canonical encoding; rejects malformed text, unsorted tails and
/// invalid monomials (tail index above pivot-4).
inline BasisMonomial parse_monomial(std::string_view s) {
    auto fail = [&]() -> BasisMonomial {
        throw std::invalid_argument("bad monomial encoding: " + std::string(s));
    };
    std::vector<int> tail_indices;
    int pivot = -1;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t dot = s.find('.', pos);
        std::string_view part = s.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
        if (part.size() < 2 || (part[0] != 't' && part[0] != 'v'))
            return fail();
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data() + 1, part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || value < 0)
            return fail();
        if (part[0] == 't') {
            if (pivot != -1 || value > Tail::kMaxVar)
                return fail();
            if (!tail_indices.empty() && tail_indices.back() >= value)
                return fail();
            tail_indices.push_back(value);
        } else {
            if (pivot != -1)
                return fail();
            pivot = value;
        }
        pos = dot == std::string_view::npos ? s.size() : dot + 1;
        if (dot != std::string_view::npos && pos == s.size())
            return fail();  // trailing dot
    }
    if (pivot == -1)
        return fail();
    Tail t;
    for (int i : tail_indices)
        t = Tail::from_bits(t.bits() | Tail::single(i).bits());
    BasisMonomial m{t, pivot};
    if (!m.valid())
        return fail();
    return m;
}

}  // namespace fiblie
