#pragma once

#include <string>
#include <vector>

#include "wzw/cyclotomic.hpp"

namespace wzw {

/// Dense univariate polynomial over Q(eps_N), ascending coefficients.
/// The zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() : n_(0) {}
    explicit Poly(int field_n) : n_(field_n) {}
    Poly(int field_n, std::vector<Cyc> coeffs);

    static Poly constant(const Cyc& c);
    static Poly monomial(const Cyc& c, int deg);
    /// u^1 over Q(eps_N).
    static Poly var(int field_n);

    int field_n() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Cyc coeff(int k) const;
    const std::vector<Cyc>& coeffs() const { return c_; }
    Cyc leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Cyc& s) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    Poly derivative() const;
    /// p(c*u)
    Poly scale_var(const Cyc& c) const;
    /// p(u + c)
    Poly shift_var(const Cyc& c) const;
    /// u^deg * p(1/u)
    Poly reverse() const;
    /// Multiplicity of root u0 (0 if not a root).
    int root_multiplicity(const Cyc& u0) const;

    Cyc eval(const Cyc& u) const;
    Cplx eval(const Cplx& u) const;

    std::string str(const std::string& var = "u") const;

private:
    void trim();
    int n_;
    std::vector<Cyc> c_;
};

}  // namespace wzw
