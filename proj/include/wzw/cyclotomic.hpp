#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "wzw/rational.hpp"

namespace wzw {

/// Element of the cyclotomic field Q(eps_N), eps_N = exp(2*pi*i/N), stored in
/// the power basis 1, eps, ..., eps^{d-1} where d = deg Phi_N and every value
/// is kept fully reduced modulo the N-th cyclotomic polynomial Phi_N.
/// Equality is therefore coefficientwise.
class Cyc {
public:
    Cyc() : n_(0) {}  // unusable sentinel; every real value carries its N
    Cyc(int n, const Rat& rational_value);

    static Cyc zero(int n);
    static Cyc one(int n);
    static Cyc from_rat(int n, const Rat& r) { return Cyc(n, r); }
    /// eps_N^j for any integer j (reduced mod N).
    static Cyc eps_pow(int n, long j);

    int field_n() const { return n_; }
    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational(); returns coefficient of 1.
    Rat rational_part() const;

    Cyc operator-() const;
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    Cyc operator*(const Rat& r) const;

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    /// Multiplicative inverse via extended gcd against Phi_N. Throws on zero.
    Cyc inverse() const;
    Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }

    Cplx to_complex() const;
    std::string str() const;

    const std::vector<Rat>& coeffs() const { return c_; }

    /// deg Phi_N (= Euler phi of N).
    static int degree(int n);
    /// Coefficients of Phi_N (integer, monic), ascending.
    static const std::vector<Rat>& cyclotomic_poly(int n);

private:
    Cyc(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
    void require_same_field(const Cyc& o) const;

    int n_;
    std::vector<Rat> c_;
};

inline Cyc operator*(const Rat& r, const Cyc& c) { return c * r; }

std::ostream& operator<<(std::ostream& os, const Cyc& c);

}  // namespace wzw
