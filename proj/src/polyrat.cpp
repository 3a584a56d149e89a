#include "padeguard/polyrat.hpp"

#include <algorithm>
#include <cmath>

namespace padeguard {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw InvalidInput("polynomial needs at least one coefficient");
    }
}

Polynomial Polynomial::from_vector(const Vector& v) {
    return Polynomial(std::vector<Complex>(v.data(), v.data() + v.size()));
}

Polynomial Polynomial::with_formal_degree(int degree) const {
    if (degree < 0) {
        throw InvalidInput("formal degree must be nonnegative");
    }
    if (degree < this->degree()) {
        throw InvalidInput("cannot truncate nonzero leading coefficients");
    }
    std::vector<Complex> out(static_cast<std::size_t>(degree) + 1, Complex{});
    const auto keep = std::min(out.size(), coeffs_.size());
    std::copy_n(coeffs_.begin(), keep, out.begin());
    return Polynomial(std::move(out));
}

int Polynomial::degree(double tol) const {
    for (int j = formal_degree(); j >= 0; --j) {
        if (std::abs(coeffs_[j]) > tol) {
            return j;
        }
    }
    return -1;
}

Vector Polynomial::to_vector() const {
    return Eigen::Map<const Vector>(coeffs_.data(), static_cast<Eigen::Index>(coeffs_.size()));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) {
        return Polynomial();
    }
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        d[j - 1] = static_cast<double>(j) * coeffs_[j];
    }
    return Polynomial(std::move(d));
}

double Polynomial::norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

Polynomial Polynomial::operator*(Complex s) const {
    std::vector<Complex> out(coeffs_);
    for (auto& c : out) {
        c *= s;
    }
    return Polynomial(std::move(out));
}

Complex eval_poly(const Polynomial& p, Complex z) {
    const auto c = p.coeffs();
    Complex acc = c.back();
    for (auto j = static_cast<std::ptrdiff_t>(c.size()) - 2; j >= 0; --j) {
        acc = acc * z + c[static_cast<std::size_t>(j)];
    }
    return acc;
}

RationalFunction::RationalFunction(Polynomial p, Polynomial q) : p_(std::move(p)), q_(std::move(q)) {
    if (q_.is_zero()) {
        throw InvalidInput("denominator is the zero polynomial");
    }
}

ExtendedComplex eval_rational(const RationalFunction& r, Complex z) {
    const Complex num = eval_poly(r.p(), z);
    const Complex den = eval_poly(r.q(), z);
    if (den == Complex{}) {
        return num == Complex{} ? ExtendedComplex::indeterminate() : ExtendedComplex::infinity();
    }
    return ExtendedComplex::finite(num / den);
}

CoefficientVector CoefficientVector::from_rational(const RationalFunction& r) {
    CoefficientVector x;
    x.m = r.m();
    x.n = r.n();
    x.entries.resize(x.m + x.n + 2);
    x.entries << r.p().to_vector(), r.q().to_vector();
    return x;
}

Polynomial CoefficientVector::p() const {
    return Polynomial::from_vector(entries.head(m + 1));
}

Polynomial CoefficientVector::q() const {
    return Polynomial::from_vector(entries.tail(n + 1));
}

RationalFunction CoefficientVector::rational() const {
    return RationalFunction(p(), q());
}

std::vector<Complex> taylor_of_rational(const RationalFunction& r, int count) {
    if (count < 0) {
        throw InvalidInput("negative coefficient count");
    }
    const auto p = r.p().coeffs();
    const auto q = r.q().coeffs();
    if (q[0] == Complex{}) {
        throw PoleAtOrigin();
    }
    const int n = r.n();
    std::vector<Complex> c(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        Complex acc = k <= r.m() ? p[k] : Complex{};
        for (int j = 1; j <= std::min(k, n); ++j) {
            acc -= q[j] * c[k - j];
        }
        c[k] = acc / q[0];
    }
    return c;
}

}  // namespace padeguard
