#pragma once

/**
 * Exact spectral data for 1x1 and 2x2 matrices over Q and Q(i).
 *
 * Eigenvalues are never extracted numerically. Modulus comparisons against 0
 * and 1 are decided from (trace, det, disc) alone:
 *
 *  - real, disc >= 0: sign of the characteristic polynomial at -1, 0, 1
 *    locates each root relative to those points;
 *  - real, disc < 0: |lambda|^2 = det;
 *  - complex, eigenvalues in Q(i): direct norm comparison;
 *  - complex otherwise: the squared moduli r1, r2 are the roots of
 *    y^2 - s*y + p with p = |det|^2 and, by the parallelogram law,
 *    s = (|trace|^2 + |disc|)/2, which lies in Q(sqrt(|disc|^2)).
 *
 * Unit-modulus eigenvalues are keyed by their real part: for |lambda| = 1 the
 * pair {lambda, conj(lambda)} is determined by Re(lambda) alone.
 */

#include "conjclass/matrix.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conjclass {

template <ExactScalar T>
struct EigenPair {
    T trace;
    T det;
    T disc;
    std::size_t n = 2;
    friend bool operator==(const EigenPair&, const EigenPair&) = default;
};

template <ExactScalar T>
EigenPair<T> char_pair(const Matrix<T>& a) {
    if (!a.is_square() || a.rows() == 0 || a.rows() > 2)
        throw Error(ErrorCode::UnsupportedDimension, "char_pair expects a 1x1 or 2x2 matrix");
    if (a.rows() == 1) return EigenPair<T>{a(0, 0), a(0, 0), T::zero(), 1};
    const T tr = a(0, 0) + a(1, 1);
    const T det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    return EigenPair<T>{tr, det, tr * tr - T(4) * det, 2};
}

enum class ModulusClass { Zero, InOpenUnit, UnitModulus, OutsideUnit };

std::string to_string(ModulusClass c);

/// One class per eigenvalue (with multiplicity), ordered by non-increasing modulus.
std::vector<ModulusClass> modulus_classes(const EigenPair<Rational>& p);
std::vector<ModulusClass> modulus_classes(const EigenPair<Gaussian>& p);

/// Eigenvalues in Q(i), with multiplicity, when they exist ((t + s)/2 first).
std::optional<std::vector<Gaussian>> gaussian_eigenvalues(const EigenPair<Gaussian>& p);

/// A modulus-1 Jordan block. Real field uses the first five kinds; complex
/// field always uses Kind::Complex keyed by (size, Re lambda).
struct UnitBlock {
    enum class Kind { One, MinusOne, Jordan2One, Jordan2MinusOne, Rotation, Complex };

    Kind kind = Kind::One;
    int size = 1;
    /// Rotation: cosine of the angle; Complex: Re(lambda). Zero otherwise.
    QuadraticNumber re;
    /// Complex kind only: the eigenvalue itself (Im >= 0) when it lies in Q(i).
    /// Informational; not part of equality.
    std::optional<Gaussian> lambda;

    static UnitBlock real(Kind k);
    static UnitBlock rotation(const Rational& cos);
    static UnitBlock complex(int size, QuadraticNumber re, std::optional<Gaussian> lambda = std::nullopt);

    friend bool operator==(const UnitBlock& a, const UnitBlock& b) {
        return a.kind == b.kind && a.size == b.size && a.re == b.re;
    }
    friend std::strong_ordering operator<=>(const UnitBlock& a, const UnitBlock& b);
};

std::string to_string(UnitBlock::Kind k);

/// The A+ / A- / A_inf / A_0 data of a canonical form.
struct BlockSignature {
    int rank_plus = 0;
    std::optional<int> det_sign_plus;
    int rank_minus = 0;
    std::optional<int> det_sign_minus;
    std::vector<int> nilpotent_blocks;
    std::vector<UnitBlock> unit_blocks;
    /// Complex field only: (trace, det) of a matrix realising the unit
    /// eigenvalues when they lie outside Q(i). Not part of equality.
    std::optional<std::pair<Gaussian, Gaussian>> unit_realizer;

    int dimension() const;

    friend bool operator==(const BlockSignature& a, const BlockSignature& b) {
        return a.rank_plus == b.rank_plus && a.det_sign_plus == b.det_sign_plus && a.rank_minus == b.rank_minus &&
               a.det_sign_minus == b.det_sign_minus && a.nilpotent_blocks == b.nilpotent_blocks &&
               a.unit_blocks == b.unit_blocks;
    }
};

/// Real field: determinant signs included.
BlockSignature block_decompose(const Matrix<Rational>& a);
/// Complex field: determinant signs omitted (the realified blocks always have positive determinant).
BlockSignature block_decompose(const Matrix<Gaussian>& a);

/// Equality of unit-block lists up to conjugating each eigenvalue independently.
bool star_equal(std::vector<UnitBlock> u, std::vector<UnitBlock> v);

/// A Jordan block J_size(lambda) with an eigenvalue in Q(i).
struct JordanBlock {
    int size = 1;
    Gaussian lambda;
    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Jordan forms equal up to conjugating each block's eigenvalue, compared as multisets.
bool star_equal(const std::vector<JordanBlock>& a, const std::vector<JordanBlock>& b);

/// transform * A * transform_inverse == form.
template <ExactScalar T>
struct CanonicalFormResult {
    Matrix<T> form;
    std::optional<Matrix<T>> transform;
    std::optional<Matrix<T>> transform_inverse;
};

/// Real canonical form of a 1x1 or 2x2 rational matrix: diagonal, a single
/// Jordan block with superdiagonal +1, or [[a, -b], [b, a]] with b > 0.
/// Entries lie in Q(sqrt D) for a single D.
CanonicalFormResult<QuadraticNumber> real_canonical_form(const Matrix<Rational>& a);

struct JordanFormResult {
    /// Block structure, always exact. Eigenvalues outside Q(i) leave `lambda` unset.
    struct Block {
        int size = 1;
        std::optional<Gaussian> lambda;
    };
    std::vector<Block> blocks;
    EigenPair<Gaussian> eigen;
    /// Present when every eigenvalue lies in Q(i).
    std::optional<CanonicalFormResult<Gaussian>> form;
};

JordanFormResult jordan_form(const Matrix<Gaussian>& a);

enum class SpectralPart { Plus, Minus, Nilpotent, Unit };

/// Size of the given part of the real canonical form of realify(A), computed
/// on the 2n x 2n real matrix as dim ker q(realify(A)) where q vanishes to
/// sufficient order exactly on that part's eigenvalues (taken from A).
/// Requires the eigenvalues of A to lie in Q(i).
std::size_t realified_part_size(const Matrix<Gaussian>& a, SpectralPart part);

/// Complex-side count of eigenvalues (with multiplicity) in the given part.
std::size_t part_size(const Matrix<Gaussian>& a, SpectralPart part);

}  // namespace conjclass
