#pragma once
// Quadratic and symmetric Poincaré complexes over Z: duality verification,
// direct sums, products, and extraction of the surgery invariant (signature,
// Arf) as an element of the L-group of the integers.
#include "lchain/qstruct.hpp"

namespace lchain {

// A chain complex with a structure cycle of matching degree. Construction
// checks the cycle condition only; duality is a separate, failable check, so
// non-Poincaré pairs (useful as counterexamples) are representable.
class PoincareComplex {
public:
    PoincareComplex(ChainComplex c, int n, StructureCycle structure);

    const ChainComplex& complex() const { return c_; }
    int dimension() const { return n_; }
    const StructureCycle& structure() const { return structure_; }
    Flavor flavor() const { return structure_.flavor; }

    // degree-0 component of the symmetrized structure, sized for (C⊗C)_n
    IntVec duality_chain() const;

private:
    ChainComplex c_;
    int n_ = 0;
    StructureCycle structure_;
};

// true iff the slant of the (symmetrized) structure is a chain map and a
// quasi-isomorphism dual(C, n) -> C
bool verify_poincare(const PoincareComplex& p);

// Exact signature of a symmetric integer matrix by rational congruence
// reduction. Throws on non-symmetric input; a degenerate (singular) form
// raises an error rather than silently contributing zeros.
Int signature(const IntMatrix& s);

// Arf invariant of q(x) = x^T psi x mod 2 with symplectic pairing
// psi + psi^T mod 2; throws if the pairing is degenerate mod 2.
int arf_invariant(const IntMatrix& psi);

// Gram matrix G[i][j] = <u_j, slant(u_i)> of the middle-dimensional pairing
// on free generators u of H_{n/2} of the dual complex. Symmetric when
// n ≡ 0 (mod 4), antisymmetric when n ≡ 2 (mod 4); violations throw, since
// they can only come from a broken sign convention.
IntMatrix middle_pairing(const PoincareComplex& p);

Int signature(const PoincareComplex& p); // n ≡ 0 (mod 4) only

struct LClass {
    Flavor flavor = Flavor::quadratic;
    int residue = 0;   // n mod 4
    std::string group; // "Z", "Z/2", "0"
    Int value;         // integer, 0/1 bit, or 0

    bool operator==(const LClass&) const = default;
    std::string to_string() const;
};

// name of L_n(Z) (quadratic) or L^n(Z) (symmetric)
std::string l_group_name(Flavor f, int n);

// The class of a verified complex in the L-group of Z:
//   quadratic: n ≡ 0 -> signature/8, n ≡ 2 -> Arf (middle-concentrated
//   complexes only), n odd -> 0
//   symmetric: n ≡ 0 -> signature, n ≡ 1 -> unsupported, n ≡ 2, 3 -> 0
LClass l_class(const PoincareComplex& p);

// block sum of complexes and structures; same flavor and dimension required
PoincareComplex direct_sum(const PoincareComplex& a, const PoincareComplex& b);

// structure with negated components on the same complex
PoincareComplex negated(const PoincareComplex& p);

// Tensor product of Poincaré complexes. Supported flavor combinations:
// sym⊗sym -> sym, sym⊗quad -> quad, and quad⊗quad -> quad, the last defined
// by symmetrizing the left factor. The output structure is assembled through
// the equivariant coproduct on W and re-checked: a failed cycle test, or
// failed duality when both inputs verify, aborts (it would mean the sign
// conventions are inconsistent).
PoincareComplex product(const PoincareComplex& a, const PoincareComplex& b);

// ---- fixture library ----

IntMatrix e8_matrix(); // Cartan matrix of E8, the canonical signature-8 form

// form of rank k as a complex concentrated in degree n/2 (n even) with the
// matrix as the single structure component
PoincareComplex quadratic_form_complex(const IntMatrix& psi, int n);
PoincareComplex symmetric_form_complex(const IntMatrix& s, int n);

PoincareComplex e8_quadratic();             // generator of L_0(Z)
PoincareComplex hyperbolic_quadratic();     // rank-2 hyperbolic, n = 0
PoincareComplex arf_quadratic();            // q(e)=q(f)=1, n = 2, Arf 1
PoincareComplex hyperbolic_arf_quadratic(); // n = 2, Arf 0
PoincareComplex point_symmetric();          // unit: Z in degree 0, form (1)
PoincareComplex det2_symmetric();           // cycle but duality fails
PoincareComplex circle_symmetric();         // n = 1
PoincareComplex circle_quadratic();         // n = 1, trivial L-class slot

} // namespace lchain
