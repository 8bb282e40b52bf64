#pragma once

#include <string>
#include <vector>

#include "wzw/gmat.hpp"

namespace wzw {

/// Which affine algebra a loop element lives in. Node algebras carry the 1/N
/// cocycle normalization and (for the infinity node) expand in s = t^{-1}.
enum class AlgTag { node0, nodeInf, marked };

/// Finite sum of X (x) t^n terms plus a central multiple of k-hat. For node
/// tags the J_ab component of the coefficient at t^n must vanish unless
/// n == a (mod N).
class LoopElement {
public:
    LoopElement() : n_(0), tag_(AlgTag::marked) {}
    LoopElement(int n, AlgTag tag) : n_(n), tag_(tag), central_(Cyc::zero(n)) {}

    static LoopElement term(AlgTag tag, const GMat& x, int mode);
    static LoopElement central(int n, AlgTag tag, const Cyc& c);

    int mat_n() const { return n_; }
    AlgTag tag() const { return tag_; }
    const std::vector<std::pair<GMat, int>>& terms() const { return t_; }
    const Cyc& central_part() const { return central_; }

    bool is_zero() const { return t_.empty() && central_.is_zero(); }

    void add_term(const GMat& x, int mode);
    void add_central(const Cyc& c) { central_ += c; }

    LoopElement operator-() const;
    LoopElement operator+(const LoopElement& o) const;
    LoopElement operator-(const LoopElement& o) const;
    LoopElement operator*(const Cyc& s) const;
    bool operator==(const LoopElement& o) const;

    /// Check the node-grading constraint (trivially true for marked tag).
    bool grading_ok() const;

    std::string str() const;

private:
    void normalize();
    int n_;
    AlgTag tag_;
    std::vector<std::pair<GMat, int>> t_;  // sorted by mode, combined
    Cyc central_;
};

/// Cocycle value: (1/N) Res (dA|B) at a node, plain residue at a marked
/// point. Throws on mismatched tags.
Cyc cocycle(const LoopElement& a, const LoopElement& b);

/// [A, B] with central term cocycle(A,B) k-hat; k-hat itself is central.
LoopElement alg_bracket(const LoopElement& a, const LoopElement& b);

enum class ChevKind { e, f, coroot };

/// Preimage under phi_0 of the Chevalley generator / coroot of the affine
/// algebra in g-hat^(0); i runs over 0..N-1 with i = 0 the affine index.
LoopElement phi0(int n, int i, ChevKind kind);
/// Same for phi_infinity in g-hat^(infinity), modes in s = t^{-1}.
LoopElement phiinf(int n, int i, ChevKind kind);

}  // namespace wzw
