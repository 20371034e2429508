#pragma once
// Exact model of the surgery exact sequence for a product of spheres
// S^p x S^q (p, q >= 2): normal invariants split into three L-group summands,
// structures into two, and the interesting arithmetic is which of the two
// additions on normal invariants one uses.
#include "lchain/intmat.hpp"
#include "lchain/poincare.hpp"

namespace lchain {

// An element of the four-periodic L-groups of Z, normalized: Z/2 slots are
// reduced mod 2 and a nonzero value in a trivial group is rejected outright.
class SphereLClass {
public:
    SphereLClass(Flavor f, int degree, Int value);

    Flavor flavor() const { return flavor_; }
    int degree() const { return degree_; }
    const Int& value() const { return value_; }
    std::string group() const { return l_group_name(flavor_, degree_); }
    bool is_zero() const { return value_ == 0; }

    SphereLClass operator+(const SphereLClass& other) const;
    SphereLClass operator-() const;
    bool operator==(const SphereLClass&) const = default;
    std::string to_string() const;

private:
    Flavor flavor_;
    int degree_;
    Int value_;
};

// intersection product L_p x L_q -> L_{p+q}; nonzero only when both degrees
// are divisible by four, where it is plain integer multiplication (the
// symmetrized factor carries no 8: this is the normal-invariant pairing, not
// the product of quadratic complexes)
SphereLClass lproduct(const SphereLClass& a, const SphereLClass& b);

// normal invariant of a degree-one normal map of S^p x S^q in the splitting
// H_{p+q} = L_p + L_q + L_{p+q}
class TElem {
public:
    TElem(int p, int q, Int x, Int y, Int z);
    static TElem zero(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    const SphereLClass& x() const { return x_; }
    const SphereLClass& y() const { return y_; }
    const SphereLClass& z() const { return z_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero() && z_.is_zero(); }
    bool operator==(const TElem&) const = default;
    std::string to_string() const;

private:
    int p_, q_;
    SphereLClass x_, y_, z_;
};

// a structure on S^p x S^q, i.e. a kernel-of-assembly element with the z
// slot already gone
class SElem {
public:
    SElem(int p, int q, Int x, Int y);
    static SElem zero(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    const SphereLClass& x() const { return x_; }
    const SphereLClass& y() const { return y_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    bool operator==(const SElem&) const = default;
    std::string to_string() const;

private:
    int p_, q_;
    SphereLClass x_, y_;
};

// the homotopy-theoretic (componentwise) addition
TElem add(const TElem& t, const TElem& u);
TElem negated(const TElem& t);
// intersection pairing (x,y,z)(x',y',z') = (0, 0, xy' + x'y)
TElem pairing(const TElem& t, const TElem& u);
// Whitney sum a # b = a + b + ab; equals add(add(a,b), pairing(a,b))
TElem whitney(const TElem& t, const TElem& u);
// inverse for the Whitney sum: (-x, -y, 2xy - z)
TElem whitney_inverse(const TElem& t);
// assembly A(x,y,z) = z in L_{p+q}; additive for +, not for the Whitney sum
SphereLClass assembly(const TElem& t);
// normal invariant of a structure: (x, y, 0)
TElem eta(const SElem& s);

// composition s(fg) = s(f) + f_* s(g); the pushforward f_* s(g) is the
// caller's input
SElem compose_structures(const SElem& s_f, const SElem& s_g_pushed);

// normal invariant of the inverse-pulled-back structure:
// (x_g, y_g, -(x_f y_g + x_g y_f))
TElem inverse_pullback_invariant(const SElem& s_f, const SElem& s_g_pushed);

// eta(s_f) + eta(s_g) versus eta(s_f) # inverse_pullback_invariant: the two
// composition formulas must agree
struct ReconcileReport {
    TElem lhs, rhs;
    bool ok = false;
};
ReconcileReport reconcile_check(const SElem& s_f, const SElem& s_g_pushed);

// For p = q = 4 and the structure pair (x,y), (-x,-y): assembly of the
// Whitney sum of the two normal invariants versus the sum of their assembled
// obstructions, i.e. (0, 2xy)
std::pair<SphereLClass, SphereLClass> nonadditivity_demo(const Int& x, const Int& y);

// The obstruction of a composite split against the formula
// total = first + second + cross, with cross the assembled pairing; for the
// inverse pair this reads 0 = 0 + 2xy - 2xy
struct ObstructionDecomposition {
    SphereLClass first, second, cross, total;
};
ObstructionDecomposition composite_obstruction_demo(const Int& x, const Int& y);

} // namespace lchain
