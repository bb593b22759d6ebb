#pragma once

#include "conjclass/matrix.hpp"

#include <optional>
#include <variant>

namespace conjclass {

template <ExactScalar T>
struct EmptySet {
    friend bool operator==(const EmptySet&, const EmptySet&) = default;
};

template <ExactScalar T>
struct UniquePoint {
    Vector<T> point;
    friend bool operator==(const UniquePoint&, const UniquePoint&) = default;
};

/// base + span(basis), a proper affine subspace of positive dimension.
template <ExactScalar T>
struct Coset {
    Vector<T> base;
    std::vector<Vector<T>> basis;
    friend bool operator==(const Coset&, const Coset&) = default;
};

template <ExactScalar T>
struct WholeSpace {
    friend bool operator==(const WholeSpace&, const WholeSpace&) = default;
};

template <ExactScalar T>
using SolutionSet = std::variant<EmptySet<T>, UniquePoint<T>, Coset<T>, WholeSpace<T>>;

/// Solves M x = rhs exactly. The base point sets every free variable to 0.
template <ExactScalar T>
SolutionSet<T> solve_linear_system(const Matrix<T>& m, const Vector<T>& rhs) {
    if (m.rows() != rhs.size()) throw Error(ErrorCode::DimensionMismatch, "system shape");
    const std::size_t n = m.cols();
    Matrix<T> aug(m.rows(), n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n) = rhs[r];
    }
    const EchelonForm<T> e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == n) return EmptySet<T>{};

    Vector<T> base(n, T::zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) base[e.pivots[r]] = e.reduced(r, n);
    if (e.pivots.size() == n) return UniquePoint<T>{std::move(base)};

    std::vector<Vector<T>> basis = kernel_basis(m);
    if (basis.size() == n) return WholeSpace<T>{};
    return Coset<T>{std::move(base), std::move(basis)};
}

/// Fixed points of x -> A x + b, i.e. the solutions of (A - E) x = -b.
template <ExactScalar T>
SolutionSet<T> solve_affine_system(const Matrix<T>& a, const Vector<T>& b) {
    if (!a.is_square() || a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "affine system shape");
    Vector<T> neg_b = b;
    for (auto& x : neg_b) x = -x;
    return solve_linear_system(a - Matrix<T>::identity(a.rows()), neg_b);
}

template <ExactScalar T>
bool is_empty(const SolutionSet<T>& s) {
    return std::holds_alternative<EmptySet<T>>(s);
}

/// Dimension of the solution set; nullopt when empty.
template <ExactScalar T>
std::optional<std::size_t> solution_dimension(const SolutionSet<T>& s, std::size_t ambient) {
    if (std::holds_alternative<EmptySet<T>>(s)) return std::nullopt;
    if (std::holds_alternative<UniquePoint<T>>(s)) return 0;
    if (const auto* c = std::get_if<Coset<T>>(&s)) return c->basis.size();
    return ambient;
}

/// A distinguished member: the unique point, the coset base point, or the origin.
template <ExactScalar T>
std::optional<Vector<T>> representative_point(const SolutionSet<T>& s, std::size_t ambient) {
    if (const auto* u = std::get_if<UniquePoint<T>>(&s)) return u->point;
    if (const auto* c = std::get_if<Coset<T>>(&s)) return c->base;
    if (std::holds_alternative<WholeSpace<T>>(s)) return Vector<T>(ambient, T::zero());
    return std::nullopt;
}

}  // namespace conjclass
