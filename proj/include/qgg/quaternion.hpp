#pragma once

#include <array>
#include <cassert>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qgg/rational.hpp"

namespace qgg {

/// Quaternion a0 + a1*i + a2*j + a3*k with exact rational coefficients.
/// Multiplication follows i^2 = j^2 = k^2 = ijk = -1, ij = k = -ji,
/// jk = i = -kj, ki = j = -ik. Non-commutative: keep factor order in mind.
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(Rational a0) : c_{std::move(a0), 0, 0, 0} {}  // NOLINT: reals embed
    Quaternion(Rational a0, Rational a1, Rational a2, Rational a3)
        : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    static Quaternion zero() { return {}; }
    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    const Rational& a0() const { return c_[0]; }
    const Rational& a1() const { return c_[1]; }
    const Rational& a2() const { return c_[2]; }
    const Rational& a3() const { return c_[3]; }
    const Rational& coeff(int idx) const { return c_.at(idx); }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_real() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    bool is_unit() const { return norm_squared().is_one(); }

    Quaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.c_[0] + q.c_[0], p.c_[1] + q.c_[1], p.c_[2] + q.c_[2], p.c_[3] + q.c_[3]};
    }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {p.c_[0] - q.c_[0], p.c_[1] - q.c_[1], p.c_[2] - q.c_[2], p.c_[3] - q.c_[3]};
    }

    // Hamilton product; the coefficient expansion of the basis rules above.
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        const Rational& a = p.c_[0];
        const Rational& b = p.c_[1];
        const Rational& c = p.c_[2];
        const Rational& d = p.c_[3];
        const Rational& e = q.c_[0];
        const Rational& f = q.c_[1];
        const Rational& g = q.c_[2];
        const Rational& h = q.c_[3];
        return {a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g - b * h + c * e + d * f,
                a * h + b * g - c * f + d * e};
    }

    friend Quaternion operator*(const Rational& s, const Quaternion& q) {
        return {s * q.c_[0], s * q.c_[1], s * q.c_[2], s * q.c_[3]};
    }
    friend Quaternion operator*(const Quaternion& q, const Rational& s) { return s * q; }

    friend bool operator==(const Quaternion& p, const Quaternion& q) { return p.c_ == q.c_; }
    friend bool operator!=(const Quaternion& p, const Quaternion& q) { return p.c_ != q.c_; }

    /// q* = a0 - a1*i - a2*j - a3*k.
    Quaternion conjugate() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

    /// q q* = a0^2 + a1^2 + a2^2 + a3^2. The squared form is kept because the
    /// modulus itself is generally irrational.
    Rational norm_squared() const {
        return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
    }

    /// q^-1 = q* / |q|^2. Throws on zero input.
    Quaternion inverse() const {
        Rational n2 = norm_squared();
        if (n2.is_zero()) throw std::domain_error("Quaternion: inverse of zero");
        Quaternion c = conjugate();
        return {c.c_[0] / n2, c.c_[1] / n2, c.c_[2] / n2, c.c_[3] / n2};
    }

    Rational real_part() const { return c_[0]; }
    Quaternion imag_part() const { return {0, c_[1], c_[2], c_[3]}; }

    /// Renders as "a0 a1 a2 a3" with each coefficient an integer or "p/q".
    std::string str() const {
        return c_[0].str() + " " + c_[1].str() + " " + c_[2].str() + " " + c_[3].str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << q.str();
    }

private:
    std::array<Rational, 4> c_{};
};

/// Quaternion constrained to |q| = 1 exactly. The gain alphabet of a gain
/// graph; closed under multiplication and conjugation.
class UnitQuaternion {
public:
    explicit UnitQuaternion(Quaternion q) : q_(std::move(q)) {
        if (!q_.is_unit()) throw std::invalid_argument("UnitQuaternion: |q|^2 != 1");
    }

    static UnitQuaternion one() { return UnitQuaternion(unchecked_tag{}, Quaternion::one()); }

    /// Trusted constructor for values already known to be unit (products,
    /// conjugates, table entries). Checked in debug builds only.
    static UnitQuaternion unchecked(Quaternion q) {
        return UnitQuaternion(unchecked_tag{}, std::move(q));
    }

    const Quaternion& value() const { return q_; }

    UnitQuaternion conjugate() const {
        return UnitQuaternion(unchecked_tag{}, q_.conjugate());
    }

    UnitQuaternion operator-() const { return UnitQuaternion(unchecked_tag{}, -q_); }

    friend UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q) {
        return UnitQuaternion(unchecked_tag{}, p.q_ * q.q_);
    }

    friend bool operator==(const UnitQuaternion& p, const UnitQuaternion& q) {
        return p.q_ == q.q_;
    }
    friend bool operator!=(const UnitQuaternion& p, const UnitQuaternion& q) {
        return p.q_ != q.q_;
    }

    std::string str() const { return q_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const UnitQuaternion& q) {
        return os << q.str();
    }

private:
    struct unchecked_tag {};
    UnitQuaternion(unchecked_tag, Quaternion q) : q_(std::move(q)) {
        assert(q_.is_unit());
    }
    Quaternion q_;
};

/// The split q = z + w*j exhibiting H as a 2-dimensional vector space over C.
/// z = a0 + a1*i and w = a2 + a3*i, each held as an exact (re, im) pair.
struct ComplexPair {
    Rational z_re, z_im;
    Rational w_re, w_im;

    friend bool operator==(const ComplexPair&, const ComplexPair&) = default;
};

inline ComplexPair to_complex_pair(const Quaternion& q) {
    return {q.a0(), q.a1(), q.a2(), q.a3()};
}

inline Quaternion from_complex_pair(const ComplexPair& p) {
    return {p.z_re, p.z_im, p.w_re, p.w_im};
}

/// Exact unit quaternion from a rational 3-vector:
///   ((1-s) + 2x*i + 2y*j + 2z*k) / (1+s)  with  s = x^2 + y^2 + z^2.
/// Unit by the identity (1-s)^2 + 4s = (1+s)^2.
UnitQuaternion rational_unit_from_vector(const Rational& x, const Rational& y,
                                         const Rational& z);

/// The Lipschitz units {1, -1, i, -i, j, -j, k, -k}, in that index order.
const std::array<UnitQuaternion, 8>& q8_units();

/// Index into q8_units() when q is one of the eight, nullopt otherwise.
std::optional<int> q8_index(const Quaternion& q);

}  // namespace qgg
