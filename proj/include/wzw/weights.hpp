#pragma once

#include <string>
#include <vector>

#include "wzw/gmat.hpp"

namespace wzw {

/// Level-k functional on the diagonal Cartan of sl_N, stored as N rational
/// values on E_11..E_NN summing to zero. Ad beta acts as a cyclic shift of
/// the values, which makes the tilde maps explicit linear solves.
class AffineWeight {
public:
    AffineWeight() : n_(0) {}
    AffineWeight(int n, Rat level, std::vector<Rat> values);
    static AffineWeight zero(int n, const Rat& level);
    /// Weight from the N-1 values on H_{i,i+1}, i = 1..N-1.
    static AffineWeight from_cartan_values(int n, const Rat& level,
                                           const std::vector<Rat>& h_values);

    int mat_n() const { return n_; }
    const Rat& level() const { return k_; }
    const std::vector<Rat>& values() const { return v_; }

    /// Value on H_{i,i+1} (1-based; i = N wraps to H_{N,1}).
    Rat on_cartan(int i) const;
    /// Value on a diagonal matrix over Q(eps_N).
    Cyc on_diag(const GMat& d) const;

    /// mu composed with Ad beta^{pow}.
    AffineWeight compose_ad_beta(int pow = 1) const;

    AffineWeight operator-() const;
    AffineWeight operator+(const AffineWeight& o) const;
    bool operator==(const AffineWeight& o) const;

    /// Affine coroot pairing through the phi_0 identification:
    /// <mu, alpha_i^vee> = mu(H_{i,i+1}) + k/N, indices mod N (i = 0 uses
    /// H_{N,1}).
    Rat coroot_pairing(int i) const;

    bool is_dominant_integral() const;

    std::string str() const;

private:
    int n_;
    Rat k_;
    std::vector<Rat> v_;
};

/// The factorisation weight map: returns (lambda-tilde, lambda-tilde') as
/// level-k weights, lambda-tilde = -lambda (1 - Ad beta^{-1})^{-1} and
/// lambda-tilde' = lambda (1 - Ad beta)^{-1} (the infinity-side weight
/// transported through the Chevalley flip so one dominance test serves both).
/// Also cross-checks the equivalent expression
/// lambda (1 - Ad beta)^{-1} Ad beta for lambda-tilde.
std::pair<AffineWeight, AffineWeight> weight_tilde(const AffineWeight& lambda, const Rat& k);

/// Weights (with multiplicity) of the defining representation C^N.
std::vector<AffineWeight> weights_of_defining(int n);

/// Multiset of weights of a tensor product of copies of C^N / trivial.
/// `dims` entries must be 1 (trivial) or N (defining).
std::vector<AffineWeight> weights_of_tensor(int n, const std::vector<int>& dims);

}  // namespace wzw
