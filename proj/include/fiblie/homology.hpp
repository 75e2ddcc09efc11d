#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fiblie/core.hpp"
#include "fiblie/errors.hpp"
#include "fiblie/gf2.hpp"
#include "fiblie/subquotients.hpp"

// Graded Chevalley-Eilenberg homology in degrees <= 2 over GF(2).  Signs are
// dropped throughout (characteristic 2) and wedge monomials are strictly
// increasing tuples in the canonical monomial order:
//   d_2(x ^ y)     = [x, y]
//   d_3(x ^ y ^ z) = [x,y] ^ z + [x,z] ^ y + [y,z] ^ x

namespace fiblie {

/// Strictly increasing tuple of basis monomials; arity 1, 2 or 3.
struct ChainMonomial {
    std::vector<BasisMonomial> entries;

    /// Sorts the entries; nullopt when two coincide (x ^ x = 0).
    static std::optional<ChainMonomial> wedge(std::vector<BasisMonomial> es) {
        std::sort(es.begin(), es.end(), canonical_less);
        for (std::size_t i = 0; i + 1 < es.size(); ++i)
            if (es[i] == es[i + 1])
                return std::nullopt;
        return ChainMonomial{std::move(es)};
    }

    int arity() const { return static_cast<int>(entries.size()); }

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (const auto& m : entries)
            d += m.weight();
        return d;
    }

    friend bool operator==(const ChainMonomial&, const ChainMonomial&) = default;
};

inline bool chain_monomial_less(const ChainMonomial& a, const ChainMonomial& b) {
    if (a.entries.size() != b.entries.size())
        return a.entries.size() < b.entries.size();
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        auto c = canonical_compare(a.entries[i], b.entries[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

/// GF(2) combination of chain monomials of one arity and degree.
class Chain {
public:
    Chain() = default;

    explicit Chain(ChainMonomial m) : ms_{std::move(m)} {}

    static Chain from_monomials(std::vector<ChainMonomial> ms) {
        std::sort(ms.begin(), ms.end(), chain_monomial_less);
        std::vector<ChainMonomial> out;
        for (std::size_t i = 0; i < ms.size();) {
            std::size_t j = i;
            while (j < ms.size() && ms[j] == ms[i])
                ++j;
            if ((j - i) % 2)
                out.push_back(ms[i]);
            i = j;
        }
        for (const ChainMonomial& m : out)
            if (m.arity() != out.front().arity() || m.degree() != out.front().degree())
                throw std::invalid_argument("chain mixes arities or degrees");
        Chain c;
        c.ms_ = std::move(out);
        return c;
    }

    static Chain from_element(const Element& e) {
        std::vector<ChainMonomial> ms;
        for (const auto& m : e.monomials())
            ms.push_back(ChainMonomial{{m}});
        return from_monomials(std::move(ms));
    }

    Element to_element() const {
        std::vector<BasisMonomial> ms;
        for (const auto& c : ms_) {
            if (c.arity() != 1)
                throw std::invalid_argument("to_element: arity is not 1");
            ms.push_back(c.entries.front());
        }
        return Element::from_monomials(std::move(ms));
    }

    const std::vector<ChainMonomial>& monomials() const { return ms_; }
    bool is_zero() const { return ms_.empty(); }

    Chain& operator+=(const Chain& o) {
        if (!ms_.empty() && !o.ms_.empty() &&
            (ms_.front().arity() != o.ms_.front().arity() ||
             ms_.front().degree() != o.ms_.front().degree()))
            throw std::invalid_argument("chain sum mixes arities or degrees");
        std::vector<ChainMonomial> out;
        std::set_symmetric_difference(ms_.begin(), ms_.end(), o.ms_.begin(), o.ms_.end(),
                                      std::back_inserter(out), chain_monomial_less);
        ms_ = std::move(out);
        return *this;
    }

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<ChainMonomial> ms_;
};

inline std::string encode(const ChainMonomial& c) {
    std::string s;
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        if (i)
            s += '^';
        s += encode(c.entries[i]);
    }
    return s;
}

inline std::string encode(const Chain& c) {
    if (c.is_zero())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < c.monomials().size(); ++i) {
        if (i)
            s += " + ";
        s += encode(c.monomials()[i]);
    }
    return s;
}

/// All strictly increasing tuples from member_basis(a, *) of total weight d.
inline std::vector<ChainMonomial> chain_basis(const AlgebraId& a, int arity, std::int64_t d) {
    std::vector<BasisMonomial> pool;
    for (std::int64_t w = 1; w <= d - (arity - 1); ++w)
        for (const BasisMonomial& m : member_basis(a, w))
            pool.push_back(m);
    std::sort(pool.begin(), pool.end(), canonical_less);
    std::vector<ChainMonomial> out;
    std::vector<BasisMonomial> current;
    auto dfs = [&](auto&& self, std::size_t start, int left, std::int64_t remaining) -> void {
        if (left == 0) {
            if (remaining == 0)
                out.push_back(ChainMonomial{current});
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            std::int64_t w = pool[i].weight();
            if (w > remaining - (left - 1))
                break;  // pool is weight-sorted; nothing later fits
            current.push_back(pool[i]);
            self(self, i + 1, left - 1, remaining - w);
            current.pop_back();
        }
    };
    dfs(dfs, 0, arity, d);
    std::sort(out.begin(), out.end(), chain_monomial_less);
    return out;
}

inline Chain d2(const AlgebraId& a, const Chain& c) {
    Chain out;
    for (const ChainMonomial& w : c.monomials()) {
        if (w.arity() != 2)
            throw std::invalid_argument("d2: arity is not 2");
        out += Chain::from_element(
            algebra_bracket(a, Element{w.entries[0]}, Element{w.entries[1]}));
    }
    return out;
}

inline Chain d3(const AlgebraId& a, const Chain& c) {
    Chain out;
    for (const ChainMonomial& t : c.monomials()) {
        if (t.arity() != 3)
            throw std::invalid_argument("d3: arity is not 3");
        const BasisMonomial& x = t.entries[0];
        const BasisMonomial& y = t.entries[1];
        const BasisMonomial& z = t.entries[2];
        struct Part {
            Element bracket;
            const BasisMonomial* rest;
        };
        Part parts[3] = {{algebra_bracket(a, Element{x}, Element{y}), &z},
                         {algebra_bracket(a, Element{x}, Element{z}), &y},
                         {algebra_bracket(a, Element{y}, Element{z}), &x}};
        std::vector<ChainMonomial> terms;
        for (const Part& p : parts)
            for (const BasisMonomial& m : p.bracket.monomials())
                if (auto w = ChainMonomial::wedge({m, *p.rest}))
                    terms.push_back(std::move(*w));
        out += Chain::from_monomials(std::move(terms));
    }
    return out;
}

inline std::size_t chain_index(const ChainMonomial& m, const std::vector<ChainMonomial>& basis) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m, chain_monomial_less);
    if (it == basis.end() || !(*it == m))
        throw DimensionMismatch("chain monomial not present in coordinate basis");
    return static_cast<std::size_t>(it - basis.begin());
}

inline gf2::BitVec chain_coordinates(const Chain& c, const std::vector<ChainMonomial>& basis) {
    gf2::BitVec v(basis.size());
    for (const auto& m : c.monomials())
        v.set(chain_index(m, basis));
    return v;
}

inline Chain chain_from_coordinates(const gf2::BitVec& v,
                                    const std::vector<ChainMonomial>& basis) {
    std::vector<ChainMonomial> ms;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v.get(i))
            ms.push_back(basis[i]);
    return Chain::from_monomials(std::move(ms));
}

/// One weight slice of the complex wedge^3 -> wedge^2 -> wedge^1 for a fixed
/// algebra: bases, differentials, cycle and boundary spans.
struct ComplexSlice {
    AlgebraId algebra;
    std::int64_t degree = 0;
    std::vector<BasisMonomial> b1;
    std::vector<ChainMonomial> b2;
    std::vector<ChainMonomial> b3;
    gf2::BitMatrix d2_map;                 // |b1| x |b2|, column per wedge
    std::vector<gf2::BitVec> cycles;       // kernel of d2_map, over b2
    gf2::SpanBuilder boundaries2;          // image of d3, over b2
    gf2::SpanBuilder image1;               // image of d2, over b1
    std::vector<gf2::BitVec> h2_reps;      // cycles completing boundaries2
    std::vector<std::size_t> h1_rep_cols;  // b1 indices completing image1

    ComplexSlice(const AlgebraId& a, std::int64_t d)
        : algebra(a),
          degree(d),
          b1(member_basis(a, d)),
          b2(chain_basis(a, 2, d)),
          b3(chain_basis(a, 3, d)),
          d2_map(b1.size(), b2.size()),
          boundaries2(b2.size()),
          image1(b1.size()) {
        for (std::size_t j = 0; j < b2.size(); ++j) {
            Element br = algebra_bracket(algebra, Element{b2[j].entries[0]},
                                         Element{b2[j].entries[1]});
            gf2::BitVec col = coordinates(br, b1);
            for (std::size_t i = 0; i < b1.size(); ++i)
                if (col.get(i))
                    d2_map.set(i, j);
            image1.insert(col);
        }
        cycles = gf2::kernel_basis(d2_map);
        for (const ChainMonomial& t : b3) {
            gf2::BitVec row = chain_coordinates(d3(algebra, Chain{t}), b2);
            if (gf2::multiply(d2_map, row).any())
                throw std::logic_error("d2 after d3 is nonzero");
            boundaries2.insert(row);
        }
        gf2::SpanBuilder acc = boundaries2;
        for (const gf2::BitVec& k : cycles)
            if (acc.insert(k))
                h2_reps.push_back(k);
        gf2::SpanBuilder acc1 = image1;
        for (std::size_t i = 0; i < b1.size(); ++i)
            if (acc1.insert(gf2::BitVec::unit(b1.size(), i)))
                h1_rep_cols.push_back(i);
    }

    std::size_t h1_dim() const { return b1.size() - image1.dim(); }
    std::size_t h2_dim() const { return cycles.size() - boundaries2.dim(); }

    /// Class coordinates of a cycle over h2_reps; nullopt when not a cycle.
    std::optional<gf2::BitVec> h2_class(const gf2::BitVec& cycle) const {
        if (gf2::multiply(d2_map, cycle).any())
            return std::nullopt;
        std::vector<gf2::BitVec> gens = h2_reps;
        for (const gf2::BitVec& b : boundaries2.basis())
            gens.push_back(b);
        auto combo = gf2::LinearSolver(gens, b2.size()).express(cycle);
        if (!combo)
            return std::nullopt;
        gf2::BitVec cls(h2_reps.size());
        for (std::size_t i = 0; i < h2_reps.size(); ++i)
            if (combo->get(i))
                cls.set(i);
        return cls;
    }

    /// Class coordinates of an element of the algebra slice over h1 reps.
    gf2::BitVec h1_class(const Element& e) const {
        std::vector<gf2::BitVec> gens;
        for (std::size_t c : h1_rep_cols)
            gens.push_back(gf2::BitVec::unit(b1.size(), c));
        for (const gf2::BitVec& b : image1.basis())
            gens.push_back(b);
        auto combo = gf2::LinearSolver(gens, b1.size()).express(coordinates(e, b1));
        if (!combo)
            throw std::logic_error("element outside its own degree slice");
        gf2::BitVec cls(h1_rep_cols.size());
        for (std::size_t i = 0; i < h1_rep_cols.size(); ++i)
            if (combo->get(i))
                cls.set(i);
        return cls;
    }
};

struct HomologySpace {
    AlgebraId algebra;
    int n = 1;
    std::int64_t d = 1;
    std::size_t dim = 0;
    std::vector<Chain> representatives;
};

/// H_n(a, k) at weight d, with cycle representatives.  H_1 is computed both as
/// coker(d_2) and as dim minus image rank; the two routes must agree.
inline HomologySpace homology(const AlgebraId& a, int n, std::int64_t d) {
    if (n != 1 && n != 2)
        throw std::invalid_argument("homology: n must be 1 or 2");
    ComplexSlice slice(a, d);
    HomologySpace out{a, n, d, 0, {}};
    if (n == 1) {
        std::size_t via_coker =
            gf2::quotient_dim(slice.image1.basis(),
                              gf2::identity_matrix(slice.b1.size()).rows());
        std::size_t via_rank = slice.b1.size() - gf2::rank(slice.d2_map);
        if (via_coker != via_rank)
            throw std::logic_error("H_1 routes disagree");
        out.dim = via_coker;
        for (std::size_t c : slice.h1_rep_cols)
            out.representatives.push_back(Chain{ChainMonomial{{slice.b1[c]}}});
    } else {
        out.dim = slice.h2_dim();
        for (const gf2::BitVec& r : slice.h2_reps)
            out.representatives.push_back(chain_from_coordinates(r, slice.b2));
    }
    return out;
}

/// A homogeneous derivation given by its values on basis monomials.
struct Derivation {
    std::int64_t weight = 1;
    std::function<Element(const BasisMonomial&)> image;

    Element apply(const Element& x) const {
        Element out;
        for (const auto& m : x.monomials())
            out += image(m);
        return out;
    }
};

/// Leibniz check over all basis pairs of a with weight sum <= max_degree.
inline void verify_derivation(const AlgebraId& a, const Derivation& der,
                              std::int64_t max_degree) {
    for (std::int64_t d1 = 1; d1 < max_degree; ++d1) {
        for (std::int64_t d2v = d1; d1 + d2v <= max_degree; ++d2v) {
            for (const BasisMonomial& x : member_basis(a, d1)) {
                for (const BasisMonomial& y : member_basis(a, d2v)) {
                    Element ex{x}, ey{y};
                    Element lhs = der.apply(algebra_bracket(a, ex, ey));
                    Element rhs = algebra_bracket(a, der.apply(ex), ey) +
                                  algebra_bracket(a, ex, der.apply(ey));
                    if (lhs != rhs)
                        throw NotADerivation("Leibniz fails on " + encode(x) + ", " + encode(y));
                }
            }
        }
    }
}

/// Diagonal extension of a derivation to chains.
inline Chain extend_derivation(const Derivation& der, const Chain& c) {
    std::vector<ChainMonomial> terms;
    for (const ChainMonomial& w : c.monomials()) {
        for (std::size_t i = 0; i < w.entries.size(); ++i) {
            Element img = der.image(w.entries[i]);
            for (const BasisMonomial& m : img.monomials()) {
                std::vector<BasisMonomial> es = w.entries;
                es[i] = m;
                if (auto wedge = ChainMonomial::wedge(std::move(es)))
                    terms.push_back(std::move(*wedge));
            }
        }
    }
    return Chain::from_monomials(std::move(terms));
}

/// Matrix of the map H_2(a)_d -> H_2(a)_{d+w} induced by a derivation.
/// Column j = class of the image of the j-th representative; the derivation
/// and its chain extension are verified (Leibniz, chain map) up to verify_degree.
inline gf2::BitMatrix induced_action_on_h2(const AlgebraId& a, const Derivation& der,
                                           std::int64_t d, std::int64_t verify_degree) {
    verify_derivation(a, der, verify_degree);
    for (std::int64_t dd = 2; dd <= verify_degree - der.weight; ++dd) {
        for (const ChainMonomial& w : chain_basis(a, 2, dd)) {
            Chain cw{w};
            if (d2(a, extend_derivation(der, cw)) !=
                Chain::from_element(der.apply(d2(a, cw).to_element())))
                throw NotADerivation("chain map fails against d2 at " + encode(w));
        }
        for (const ChainMonomial& t : chain_basis(a, 3, dd)) {
            Chain ct{t};
            if (d3(a, extend_derivation(der, ct)) != extend_derivation(der, d3(a, ct)))
                throw NotADerivation("chain map fails against d3 at " + encode(t));
        }
    }
    ComplexSlice src(a, d);
    ComplexSlice dst(a, d + der.weight);
    gf2::BitMatrix out(dst.h2_dim(), src.h2_dim());
    for (std::size_t j = 0; j < src.h2_reps.size(); ++j) {
        Chain image = extend_derivation(der, chain_from_coordinates(src.h2_reps[j], src.b2));
        auto cls = dst.h2_class(chain_coordinates(image, dst.b2));
        if (!cls)
            throw std::logic_error("derivation image of a cycle is not a cycle");
        for (std::size_t i = 0; i < dst.h2_dim(); ++i)
            if (cls->get(i))
                out.set(i, j);
    }
    return out;
}

/// Graded action of a one-dimensional algebra: block at degree d maps V_d to
/// V_{d+weight}, one column per source basis vector.  Missing block = zero map.
struct GradedAction {
    std::int64_t weight = 1;
    std::map<std::int64_t, std::size_t> dims;
    std::map<std::int64_t, gf2::BitMatrix> blocks;

    std::size_t dim(std::int64_t d) const {
        auto it = dims.find(d);
        return it == dims.end() ? 0 : it->second;
    }

    std::size_t block_rank(std::int64_t d) const {
        auto it = blocks.find(d);
        return it == blocks.end() ? 0 : gf2::rank(it->second);
    }
};

struct ActionSpaces {
    std::map<std::int64_t, std::size_t> invariants;    // dim Ker(mu_d)
    std::map<std::int64_t, std::size_t> coinvariants;  // dim V_d - rank(mu_{d-w})
};

/// Per-degree invariants H^0 = Ker(mu) and coinvariants H_0 = Coker(mu).
/// By duality H_1(Q, V) of the one-dimensional Q equals the invariants.
inline ActionSpaces one_dim_action_spaces(const GradedAction& mu, std::int64_t max_degree) {
    ActionSpaces out;
    for (std::int64_t d = 1; d <= max_degree; ++d) {
        out.invariants[d] = mu.dim(d) - mu.block_rank(d);
        out.coinvariants[d] = mu.dim(d) - mu.block_rank(d - mu.weight);
    }
    return out;
}

namespace detail {

/// The unique basis monomial of a one-dimensional algebra, scanning degrees up
/// to the bound.
inline BasisMonomial one_dim_generator(const AlgebraId& c, std::int64_t max_degree) {
    std::vector<BasisMonomial> found;
    for (std::int64_t d = 1; d <= max_degree; ++d)
        for (const BasisMonomial& m : member_basis(c, d))
            found.push_back(m);
    if (found.size() != 1)
        throw NotSemidirect(c.name() + " is not one-dimensional below degree " +
                            std::to_string(max_degree));
    return found.front();
}

inline void check_semidirect(const AlgebraId& b, const AlgebraId& c, const AlgebraId& m,
                             const BasisMonomial& gen, std::int64_t max_degree) {
    for (std::int64_t d = 1; d <= max_degree; ++d) {
        std::vector<BasisMonomial> mb = member_basis(m, d);
        std::vector<BasisMonomial> parts;
        for (const BasisMonomial& x : member_basis(b, d))
            parts.push_back(x);
        for (const BasisMonomial& x : member_basis(c, d))
            parts.push_back(x);
        std::sort(parts.begin(), parts.end(), canonical_less);
        if (parts != mb)
            throw NotSemidirect(m.name() + " is not " + b.name() + " + " + c.name() +
                                " at degree " + std::to_string(d));
        for (const BasisMonomial& x : member_basis(b, d)) {
            Element br = algebra_bracket(m, Element{x}, Element{gen});
            if (!supported_on(b, br))
                throw NotSemidirect("[" + b.name() + ", " + c.name() + "] leaves " + b.name());
        }
    }
}

}  // namespace detail

/// Adjoint action of the basis element c (bracketed inside m) on a derivation
/// of the subalgebra b.
inline Derivation adjoint_derivation(const AlgebraId& m, const BasisMonomial& c) {
    return Derivation{c.weight(), [m, c](const BasisMonomial& x) {
                          return algebra_bracket(m, Element{x}, Element{c});
                      }};
}

/// C = k c acting on H_1(b) = b/[b,b] through the given derivation, blocks for
/// all source degrees whose target stays within max_degree.
inline GradedAction h1_action(const AlgebraId& b, const Derivation& der,
                              std::int64_t max_degree) {
    GradedAction action;
    action.weight = der.weight;
    std::map<std::int64_t, ComplexSlice> slices;
    for (std::int64_t d = 1; d <= max_degree; ++d) {
        slices.emplace(d, ComplexSlice(b, d));
        action.dims[d] = slices.at(d).h1_dim();
    }
    for (std::int64_t d = 1; d + der.weight <= max_degree; ++d) {
        const ComplexSlice& src = slices.at(d);
        const ComplexSlice& dst = slices.at(d + der.weight);
        gf2::BitMatrix block(dst.h1_rep_cols.size(), src.h1_rep_cols.size());
        for (std::size_t j = 0; j < src.h1_rep_cols.size(); ++j) {
            gf2::BitVec cls = dst.h1_class(der.image(src.b1[src.h1_rep_cols[j]]));
            for (std::size_t i = 0; i < dst.h1_rep_cols.size(); ++i)
                if (cls.get(i))
                    block.set(i, j);
        }
        action.blocks.emplace(d, std::move(block));
    }
    return action;
}

/// Same for H_2(b), through the chain-level diagonal extension.
inline GradedAction h2_action(const AlgebraId& b, const Derivation& der,
                              std::int64_t max_degree) {
    GradedAction action;
    action.weight = der.weight;
    for (std::int64_t d = 1; d <= max_degree; ++d)
        action.dims[d] = ComplexSlice(b, d).h2_dim();
    for (std::int64_t d = 2; d + der.weight <= max_degree; ++d)
        action.blocks.emplace(d, induced_action_on_h2(b, der, d, /*verify_degree=*/d));
    return action;
}

/// Actions of the one-dimensional C on H_2(B) and H_1(B), packaged for the
/// split short exact sequence count.
struct SplitSesData {
    BasisMonomial c_generator;
    std::int64_t c_weight = 1;
    GradedAction on_h2;  // C acting on H_2(B), blocks for degrees <= max_degree
    GradedAction on_h1;  // C acting on H_1(B)
    std::map<std::int64_t, std::size_t> h2_m_dims;  // dim H_2(M)_d
};

inline SplitSesData split_ses_data(const AlgebraId& b, const AlgebraId& c, const AlgebraId& m,
                                   std::int64_t max_degree) {
    SplitSesData data;
    data.c_generator = detail::one_dim_generator(c, max_degree);
    data.c_weight = data.c_generator.weight();
    detail::check_semidirect(b, c, m, data.c_generator, max_degree);
    Derivation ad_c = adjoint_derivation(m, data.c_generator);
    data.on_h2 = h2_action(b, ad_c, max_degree);
    data.on_h1 = h1_action(b, ad_c, max_degree);
    for (std::int64_t d = 1; d <= max_degree; ++d)
        data.h2_m_dims[d] = ComplexSlice(m, d).h2_dim();
    return data;
}

inline bool split_ses_holds(const SplitSesData& data, std::int64_t d) {
    ActionSpaces h2_spaces = one_dim_action_spaces(data.on_h2, d);
    ActionSpaces h1_spaces = one_dim_action_spaces(data.on_h1, d);
    std::size_t coinv = h2_spaces.coinvariants.at(d);
    std::size_t inv = d - data.c_weight >= 1 ? h1_spaces.invariants.at(d - data.c_weight) : 0;
    return data.h2_m_dims.at(d) == coinv + inv;
}

/// Dimension identity of the split extension M = B x| C at weight d:
///   dim H_2(M)_d = dim H_0(C, H_2(B))_d + dim H_1(C, H_1(B))_d
/// where the right side is coinvariants of H_2(B) at d plus invariants of
/// H_1(B) at d - wt(C).
inline bool split_ses_check(const AlgebraId& b, const AlgebraId& c, const AlgebraId& m,
                            std::int64_t d) {
    return split_ses_holds(split_ses_data(b, c, m, d), d);
}

}  // namespace fiblie
