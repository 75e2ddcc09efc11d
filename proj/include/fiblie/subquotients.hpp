#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiblie/core.hpp"
#include "fiblie/errors.hpp"

// Named pieces of L and the quotient Ltilde = L/A, all sharing the ambient
// monomial basis and grading:
//   A_i   monomials with factor t_{i-1}, all indices >= i-1   (abelian ideal, shifted)
//   L_i   = tau^i(L): pivot >= i+1, tail indices >= i
//   Q_i   = k v_i
//   M_i   = A_i (+) L_i, so L_{i-1} = M_i (+) Q_i
//   Ltilde = L/A with transversal basis {class(v_1)} + X_0; the class of v_1
//            is carried by the monomial v_1 itself.

namespace fiblie {

enum class AlgebraKind { L, A, Lsub, Q, M, Ltilde };

struct AlgebraId {
    AlgebraKind kind = AlgebraKind::L;
    int index = 0;  // for A/Lsub/Q/M

    static AlgebraId full() { return {AlgebraKind::L, 0}; }
    static AlgebraId A(int i) { return {AlgebraKind::A, i}; }
    static AlgebraId Lsub(int i) { return {AlgebraKind::Lsub, i}; }
    static AlgebraId Q(int i) { return {AlgebraKind::Q, i}; }
    static AlgebraId M(int i) { return {AlgebraKind::M, i}; }
    static AlgebraId Ltilde() { return {AlgebraKind::Ltilde, 0}; }

    std::string name() const {
        switch (kind) {
            case AlgebraKind::L: return "L";
            case AlgebraKind::A: return "A" + std::to_string(index);
            case AlgebraKind::Lsub: return "L" + std::to_string(index);
            case AlgebraKind::Q: return "Q" + std::to_string(index);
            case AlgebraKind::M: return "M" + std::to_string(index);
            case AlgebraKind::Ltilde: return "Ltilde";
        }
        return "?";
    }

    friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

/// Parses "L", "Ltilde", or one of A<i>/L<i>/Q<i>/M<i> with i >= 1.
inline AlgebraId parse_algebra(std::string_view s) {
    if (s == "L")
        return AlgebraId::full();
    if (s == "Ltilde")
        return AlgebraId::Ltilde();
    if (s.size() >= 2) {
        int i = 0;
        auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), i);
        if (ec == std::errc{} && ptr == s.data() + s.size() && i >= 1) {
            switch (s[0]) {
                case 'A': return AlgebraId::A(i);
                case 'L': return AlgebraId::Lsub(i);
                case 'Q': return AlgebraId::Q(i);
                case 'M': return AlgebraId::M(i);
                default: break;
            }
        }
    }
    throw UnknownAlgebra("unknown algebra: " + std::string(s));
}

inline bool member_monomial(const AlgebraId& a, const BasisMonomial& m) {
    switch (a.kind) {
        case AlgebraKind::L:
            return true;
        case AlgebraKind::A:
            return m.tail.contains(a.index - 1) && m.tail.min_index() >= a.index - 1;
        case AlgebraKind::Lsub:
            return m.pivot >= a.index + 1 && (m.tail.empty() || m.tail.min_index() >= a.index);
        case AlgebraKind::Q:
            return m == pivot_monomial(a.index);
        case AlgebraKind::M:
            return member_monomial(AlgebraId::A(a.index), m) ||
                   member_monomial(AlgebraId::Lsub(a.index), m);
        case AlgebraKind::Ltilde:
            return !m.tail.contains(0);
    }
    return false;
}

inline bool supported_on(const AlgebraId& a, const Element& x) {
    for (const auto& m : x.monomials())
        if (!member_monomial(a, m))
            return false;
    return true;
}

/// Degree-d monomial basis of the named algebra (canonical order).
inline std::vector<BasisMonomial> member_basis(const AlgebraId& a, std::int64_t d) {
    std::vector<BasisMonomial> out;
    for (const BasisMonomial& m : enumerate_basis(d))
        if (member_monomial(a, m))
            out.push_back(m);
    return out;
}

struct Decomposition {
    Element a;   // X_A part
    Element l1;  // X_0 part
    Element q1;  // v_1 part
};

/// Split along the basis partition X_A + X_0 + {v_1} of L.
inline Decomposition decompose(const Element& x) {
    std::vector<BasisMonomial> pa, pl, pq;
    for (const auto& m : x.monomials()) {
        if (m.tail.contains(0))
            pa.push_back(m);
        else if (m.pivot == 1)
            pq.push_back(m);
        else
            pl.push_back(m);
    }
    return Decomposition{Element::from_monomials(std::move(pa)),
                         Element::from_monomials(std::move(pl)),
                         Element::from_monomials(std::move(pq))};
}

/// Quotient map L -> Ltilde = L/A: kills every monomial with factor t_0;
/// the class of v_1 is written as the monomial v_1.
inline Element project_mod_A(const Element& x) {
    std::vector<BasisMonomial> kept;
    for (const auto& m : x.monomials())
        if (!m.tail.contains(0))
            kept.push_back(m);
    return Element::from_monomials(std::move(kept));
}

/// Bracket of Ltilde: bracket representatives in L, then project mod A.
/// Well defined since A is an ideal.
inline Element bracket_ltilde(const Element& x, const Element& y) {
    if (!supported_on(AlgebraId::Ltilde(), x) || !supported_on(AlgebraId::Ltilde(), y))
        throw InvalidSupport("bracket_ltilde: operand has a t_0 monomial");
    return project_mod_A(bracket(x, y));
}

/// The bracket belonging to an AlgebraId: every named subalgebra of L uses the
/// ambient bracket; Ltilde uses the projected one.
inline Element algebra_bracket(const AlgebraId& a, const Element& x, const Element& y) {
    return a.kind == AlgebraKind::Ltilde ? bracket_ltilde(x, y) : bracket(x, y);
}

/// theta in Der(L_1), induced by ad(v_1) modulo A: the X_0 component of [x, v_1].
inline Element theta(const Element& x) {
    if (!supported_on(AlgebraId::Lsub(1), x))
        throw InvalidSupport("theta: argument not supported on X_0");
    return decompose(bracket(x, Element{pivot_monomial(1)})).l1;
}

/// Per-degree echelonized spans for a named algebra, degrees 1..max_degree.
class GradedBasis {
public:
    GradedBasis(AlgebraId algebra, int max_degree)
        : algebra_(algebra), max_degree_(max_degree) {
        levels_.reserve(static_cast<std::size_t>(max_degree));
        for (int d = 1; d <= max_degree; ++d)
            levels_.push_back(ElementSpan::over_degree(d));
    }

    const AlgebraId& algebra() const { return algebra_; }
    int max_degree() const { return max_degree_; }

    ElementSpan& level(std::int64_t d) { return levels_.at(static_cast<std::size_t>(d - 1)); }
    const ElementSpan& level(std::int64_t d) const {
        return levels_.at(static_cast<std::size_t>(d - 1));
    }

    std::size_t dim(std::int64_t d) const {
        return (d >= 1 && d <= max_degree_) ? level(d).dim() : 0;
    }

    bool contains(std::int64_t d, const Element& e) const {
        return d >= 1 && d <= max_degree_ && level(d).contains(e);
    }

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        out.reserve(levels_.size());
        for (const auto& lvl : levels_)
            out.push_back(lvl.dim());
        return out;
    }

private:
    AlgebraId algebra_;
    int max_degree_;
    std::vector<ElementSpan> levels_;
};

/// The algebra's own graded monomial basis as a GradedBasis.
inline GradedBasis graded_member_basis(const AlgebraId& a, int max_degree) {
    GradedBasis g(a, max_degree);
    for (int d = 1; d <= max_degree; ++d)
        for (const BasisMonomial& m : member_basis(a, d))
            g.level(d).insert(Element{m});
    return g;
}

namespace detail {
inline std::int64_t homogeneous_degree(const Element& e) {
    std::optional<std::int64_t> d = e.degree();
    if (!d)
        throw std::invalid_argument("generator is not homogeneous");
    return *d;
}
}  // namespace detail

/// Smallest degree-wise span containing gens and closed under bracketing with
/// the ambient monomial basis, truncated at max_degree.  Degrees are filled in
/// increasing order; brackets raise degree, so one sweep reaches the fixed point.
inline GradedBasis ideal_closure(const std::vector<Element>& gens, const AlgebraId& ambient,
                                 int max_degree) {
    GradedBasis g(ambient, max_degree);
    for (const Element& x : gens) {
        if (x.is_zero())
            continue;
        std::int64_t d = detail::homogeneous_degree(x);
        if (d <= max_degree)
            g.level(d).insert(x);
    }
    for (int d = 1; d <= max_degree; ++d) {
        for (int lower = 1; lower < d; ++lower) {
            for (const Element& x : g.level(lower).basis()) {
                for (const BasisMonomial& b : member_basis(ambient, d - lower)) {
                    Element br = algebra_bracket(ambient, x, Element{b});
                    if (!br.is_zero())
                        g.level(d).insert(br);
                }
            }
        }
    }
    return g;
}

/// Degree-wise span of the subalgebra generated by gens (brackets within the
/// closure itself), truncated at max_degree.
inline GradedBasis subalgebra_closure(const std::vector<Element>& gens, const AlgebraId& ambient,
                                      int max_degree) {
    GradedBasis g(ambient, max_degree);
    for (const Element& x : gens) {
        if (x.is_zero())
            continue;
        std::int64_t d = detail::homogeneous_degree(x);
        if (d <= max_degree)
            g.level(d).insert(x);
    }
    for (int d = 2; d <= max_degree; ++d) {
        for (int i = 1; i + i <= d; ++i) {
            for (const Element& x : g.level(i).basis())
                for (const Element& y : g.level(d - i).basis()) {
                    Element br = algebra_bracket(ambient, x, y);
                    if (!br.is_zero())
                        g.level(d).insert(br);
                }
        }
    }
    return g;
}

/// Degree-wise span of all brackets of basis monomials of a.
inline GradedBasis derived_subalgebra(const AlgebraId& a, int max_degree) {
    GradedBasis g(a, max_degree);
    for (int d = 2; d <= max_degree; ++d) {
        for (int i = 1; i + i <= d; ++i) {
            for (const BasisMonomial& x : member_basis(a, i))
                for (const BasisMonomial& y : member_basis(a, d - i)) {
                    Element br = algebra_bracket(a, Element{x}, Element{y});
                    if (!br.is_zero())
                        g.level(d).insert(br);
                }
        }
    }
    return g;
}

}  // namespace fiblie
