#pragma once

#include <span>
#include <vector>

#include "padeguard/types.hpp"

namespace padeguard {

/// Polynomial in the monomial basis, ascending powers.
///
/// The formal degree is part of the value: trailing zeros are kept, since the
/// defect of a Padé approximant is measured against the formal degrees (m, n).
class Polynomial {
public:
    /// Zero polynomial of formal degree 0.
    Polynomial() : coeffs_(1, Complex{0.0, 0.0}) {}

    /// Takes ownership of `coeffs`; formal degree is coeffs.size() - 1.
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs)
        : Polynomial(std::vector<Complex>(coeffs)) {}

    static Polynomial from_vector(const Vector& v);
    /// Zero padded (or truncated, only if the dropped entries are zero) to `degree`.
    Polynomial with_formal_degree(int degree) const;

    int formal_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Index of the highest coefficient with modulus > `tol`; -1 for the zero polynomial.
    int degree(double tol = 0.0) const;

    bool is_zero() const { return degree() < 0; }

    std::span<const Complex> coeffs() const { return coeffs_; }
    const Complex& operator[](std::size_t j) const { return coeffs_[j]; }

    Vector to_vector() const;
    Polynomial derivative() const;
    /// Coefficient 2-norm.
    double norm() const;

    Polynomial operator*(Complex s) const;

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation.
Complex eval_poly(const Polynomial& p, Complex z);

/// A point of the extended complex plane, with a marker for 0/0.
struct ExtendedComplex {
    enum class Kind { Finite, Infinity, Indeterminate };

    Kind kind = Kind::Finite;
    Complex value{};

    static ExtendedComplex finite(Complex z) { return {Kind::Finite, z}; }
    static ExtendedComplex infinity() { return {Kind::Infinity, {}}; }
    static ExtendedComplex indeterminate() { return {Kind::Indeterminate, {}}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinity; }
    bool is_indeterminate() const { return kind == Kind::Indeterminate; }
};

/// r = p / q with formal degrees (m, n) taken from p and q.
class RationalFunction {
public:
    /// Throws InvalidInput when q is the zero polynomial.
    RationalFunction(Polynomial p, Polynomial q);

    const Polynomial& p() const { return p_; }
    const Polynomial& q() const { return q_; }
    int m() const { return p_.formal_degree(); }
    int n() const { return q_.formal_degree(); }

private:
    Polynomial p_;
    Polynomial q_;
};

ExtendedComplex eval_rational(const RationalFunction& r, Complex z);

/// Stacked coefficients (p_0..p_m, q_0..q_n).
struct CoefficientVector {
    Vector entries;
    int m = 0;
    int n = 0;

    static CoefficientVector from_rational(const RationalFunction& r);

    Polynomial p() const;
    Polynomial q() const;
    RationalFunction rational() const;
    double norm() const { return entries.norm(); }
};

/// First `count` Taylor coefficients of p/q at the origin.
///
/// Triangular recurrence c_k = (p_k - sum_{j=1}^{min(k,n)} q_j c_{k-j}) / q_0,
/// i.e. the local inverse of the Padé map. Throws PoleAtOrigin when q(0) = 0.
std::vector<Complex> taylor_of_rational(const RationalFunction& r, int count);

}  // namespace padeguard
