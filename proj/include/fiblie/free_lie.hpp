#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fiblie/core.hpp"
#include "fiblie/errors.hpp"
#include "fiblie/gf2.hpp"
#include "fiblie/subquotients.hpp"

// Independent H_2 oracle via the Hopf formula H_2(L) = (R cap [F,F]) / [R,F]
// for the free presentation phi : F(v_1, v_2) ->> L, R = Ker(phi).
// Free Lie elements are carried by their expansions in the free associative
// algebra over GF(2): a word of length d over {v_1, v_2} is a bit index in
// [0, 2^d), letters packed big-endian, and [x, y] = xy + yx.  Bracketed Lyndon
// words form the homogeneous basis, counted by the Witt formula.

namespace fiblie {

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            result = -result;
        }
    }
    if (n > 1)
        result = -result;
    return result;
}

/// (1/d) sum_{e | d} mu(e) 2^{d/e}: dimension of the free Lie algebra on two
/// generators in degree d.
inline std::size_t witt_dim(int d) {
    if (d < 1)
        throw std::invalid_argument("witt_dim: d must be positive");
    std::int64_t sum = 0;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0)
            sum += mobius(e) * (std::int64_t(1) << (d / e));
    return static_cast<std::size_t>(sum / d);
}

/// Lyndon words of length exactly d over the alphabet {0, 1} (Duval).
inline std::vector<std::vector<std::uint8_t>> lyndon_words(int d) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> w{0};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == d)
            out.push_back(w);
        std::size_t len = w.size();
        while (static_cast<int>(w.size()) < d)
            w.push_back(w[w.size() - len]);
        while (!w.empty() && w.back() == 1)
            w.pop_back();
        if (!w.empty())
            w.back() = 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A bracketed Lyndon word: its associative expansion and its image in L.
struct FreeLieElement {
    std::vector<std::uint8_t> word;
    gf2::BitVec expansion;  // over words of length |word|, 2^|word| coordinates
    Element image;          // phi(bracketing) in L
};

namespace detail {

/// Concatenation product of word-span vectors: (p letters) x (q letters).
inline gf2::BitVec word_concat(const gf2::BitVec& x, int p, const gf2::BitVec& y, int q) {
    gf2::BitVec out(std::size_t(1) << (p + q));
    for (std::size_t i = 0; i < (std::size_t(1) << p); ++i) {
        if (!x.get(i))
            continue;
        for (std::size_t j = 0; j < (std::size_t(1) << q); ++j)
            if (y.get(j))
                out.flip((i << q) | j);
    }
    return out;
}

}  // namespace detail

/// [x, y] = xy + yx on associative expansions.
inline gf2::BitVec free_bracket(const gf2::BitVec& x, int p, const gf2::BitVec& y, int q) {
    gf2::BitVec out = detail::word_concat(x, p, y, q);
    out ^= detail::word_concat(y, q, x, p);
    return out;
}

/// Bracketed Lyndon basis of the free Lie algebra on two weight-one
/// generators, via the standard factorization w = uv with v the longest
/// proper Lyndon suffix.  Images are evaluated in a target algebra through
/// its own bracket; the default target is L with letters v_1, v_2.
class FreeLieBasis {
public:
    explicit FreeLieBasis(int degree, AlgebraId target = AlgebraId::full(),
                          std::array<BasisMonomial, 2> letters = {pivot_monomial(1),
                                                                  pivot_monomial(2)})
        : degree_(degree), target_(target), letters_(letters) {
        for (int d = 1; d <= degree; ++d)
            by_degree_.push_back(build_degree(d));
    }

    int degree() const { return degree_; }

    const std::vector<FreeLieElement>& at(int d) const {
        return by_degree_.at(static_cast<std::size_t>(d - 1));
    }

private:
    std::vector<FreeLieElement> build_degree(int d) {
        std::vector<FreeLieElement> out;
        for (const auto& w : lyndon_words(d)) {
            auto [exp, img] = eval(w);
            out.push_back(FreeLieElement{w, exp, img});
        }
        return out;
    }

    std::pair<gf2::BitVec, Element> eval(const std::vector<std::uint8_t>& w) {
        auto it = memo_.find(w);
        if (it != memo_.end())
            return it->second;
        std::pair<gf2::BitVec, Element> result;
        if (w.size() == 1) {
            result = {gf2::BitVec::unit(2, w[0]), Element{letters_[w[0]]}};
        } else {
            // longest proper Lyndon suffix
            std::size_t split = 1;
            for (std::size_t s = 1; s < w.size(); ++s) {
                std::vector<std::uint8_t> suffix(w.begin() + static_cast<std::ptrdiff_t>(s),
                                                 w.end());
                if (is_lyndon(suffix)) {
                    split = s;
                    break;
                }
            }
            std::vector<std::uint8_t> u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
            std::vector<std::uint8_t> v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
            auto [ue, ui] = eval(u);
            auto [ve, vi] = eval(v);
            result = {free_bracket(ue, static_cast<int>(u.size()), ve, static_cast<int>(v.size())),
                      algebra_bracket(target_, ui, vi)};
        }
        memo_.emplace(w, result);
        return result;
    }

    static bool is_lyndon(const std::vector<std::uint8_t>& w) {
        for (std::size_t s = 1; s < w.size(); ++s) {
            std::vector<std::uint8_t> rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
            if (!(w < rot))
                return false;
        }
        return !w.empty();
    }

    int degree_;
    AlgebraId target_;
    std::array<BasisMonomial, 2> letters_;
    std::vector<std::vector<FreeLieElement>> by_degree_;
    std::map<std::vector<std::uint8_t>, std::pair<gf2::BitVec, Element>> memo_;
};

inline constexpr int kHopfDegreeGuard = 12;  // free Lie pieces grow as 2^d/d

/// Graded Hopf-formula data: dim R_d, dim [R,F]_d and the resulting H_2 count.
/// Works for any target algebra generated by two weight-one basis monomials.
class HopfOracle {
public:
    explicit HopfOracle(int max_degree, AlgebraId target = AlgebraId::full(),
                        std::array<BasisMonomial, 2> letters = {pivot_monomial(1),
                                                                pivot_monomial(2)})
        : max_degree_(checked(max_degree)), target_(target),
          basis_(max_degree, target, letters) {
        r_basis_.resize(static_cast<std::size_t>(max_degree) + 1);
        dim_rf_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
        for (int d = 1; d <= max_degree; ++d) {
            const auto& elems = basis_.at(d);
            std::vector<BasisMonomial> lb = member_basis(target_, d);
            gf2::BitMatrix phi(lb.size(), elems.size());
            for (std::size_t j = 0; j < elems.size(); ++j) {
                gf2::BitVec col = coordinates(elems[j].image, lb);
                for (std::size_t i = 0; i < lb.size(); ++i)
                    if (col.get(i))
                        phi.set(i, j);
            }
            for (const gf2::BitVec& combo : gf2::kernel_basis(phi)) {
                gf2::BitVec expansion(std::size_t(1) << d);
                for (std::size_t j = 0; j < elems.size(); ++j)
                    if (combo.get(j))
                        expansion ^= elems[j].expansion;
                r_basis_[static_cast<std::size_t>(d)].push_back(std::move(expansion));
            }
            gf2::SpanBuilder rf(std::size_t(1) << d);
            for (int d1 = 2; d1 < d; ++d1) {
                int d2 = d - d1;
                for (const gf2::BitVec& r : r_basis_[static_cast<std::size_t>(d1)])
                    for (const FreeLieElement& f : basis_.at(d2))
                        rf.insert(free_bracket(r, d1, f.expansion, d2));
            }
            dim_rf_[static_cast<std::size_t>(d)] = rf.dim();
        }
    }

    int max_degree() const { return max_degree_; }
    const FreeLieBasis& basis() const { return basis_; }

    std::size_t dim_r(int d) const { return r_basis_.at(static_cast<std::size_t>(d)).size(); }
    std::size_t dim_rf(int d) const { return dim_rf_.at(static_cast<std::size_t>(d)); }

    /// dim H_2(L)_d by the Hopf formula; R_1 = 0 and R_d = (R cap [F,F])_d
    /// for d >= 2 since phi is an isomorphism in degree one.
    std::size_t h2(int d) const {
        if (d < 2 || d > max_degree_)
            throw DegreeTooLarge("hopf h2: degree outside 2.." + std::to_string(max_degree_));
        return dim_r(d) - dim_rf(d);
    }

private:
    static int checked(int max_degree) {
        if (max_degree < 1 || max_degree > kHopfDegreeGuard)
            throw DegreeTooLarge("hopf oracle: max degree exceeds the desk guard of " +
                                 std::to_string(kHopfDegreeGuard));
        return max_degree;
    }

    int max_degree_;
    AlgebraId target_;
    FreeLieBasis basis_;
    std::vector<std::vector<gf2::BitVec>> r_basis_;  // R_d expansions
    std::vector<std::size_t> dim_rf_;
};

/// One-shot form of the oracle.
inline std::size_t hopf_h2(int d, int max_degree = kHopfDegreeGuard) {
    if (d < 2 || d > max_degree)
        throw DegreeTooLarge("hopf_h2: degree outside 2.." + std::to_string(max_degree));
    return HopfOracle(d).h2(d);
}

}  // namespace fiblie
