#pragma once
// Structures on the tensor square of a chain complex over the group ring
// Z[Z2]: the involution, the two W-hypercomplexes and their homology groups,
// symmetrization, and the slant pairing against the dual complex.
//
// W is the free Z[Z2]-resolution of Z with d_s = 1 + (-1)^s T, so the arrows
// alternate 1-T, 1+T, 1-T, ... from degree 1 upward. The two structure
// complexes, written out in slot coordinates (slot s of total degree m):
//
//   quadratic,  W ⊗_{Z[Z2]} (C⊗C):   slot s holds (C⊗C)_{m-s}
//       (Dψ)_s = (1 + (-1)^{s+1} T) ψ_{s+1} + (-1)^s d ψ_s
//   symmetric,  Hom_{Z[Z2]}(W, C⊗C): slot s holds (C⊗C)_{m+s}
//       (Dφ)_s = d φ_s - (-1)^m (1 + (-1)^s T) φ_{s-1}
//
// Both squares to zero because (1+(-1)^s T)(1+(-1)^{s-1} T) = 0 and T is a
// chain involution. The W-degree is truncated; the defaults are exact for
// the degree being computed because C⊗C is bounded.
#include "lchain/chain.hpp"

#include <cstdint>

namespace lchain {

enum class Flavor { quadratic, symmetric };

const char* flavor_name(Flavor f);

// C⊗C with its layout and the involution T(x⊗y) = (-1)^{pq} y⊗x
class TensorSquare {
public:
    explicit TensorSquare(ChainComplex c);

    const ChainComplex& base() const { return base_; }
    const ChainComplex& complex() const { return tt_; }
    const TensorLayout& layout() const { return layout_; }
    const IntMatrix& transposition(int m) const;
    // T applied through the index bijection; avoids materializing the matrix,
    // which matters for large tensor squares
    IntVec transpose_apply(int m, const IntVec& v) const;

private:
    ChainComplex base_, tt_;
    TensorLayout layout_;
    mutable std::map<int, IntMatrix> tmat_;
};

struct StructureCycle {
    Flavor flavor = Flavor::quadratic;
    int degree = 0;
    std::map<int, IntVec> components; // slot -> coefficients; missing = zero

    bool operator==(const StructureCycle&) const = default;
};

struct HyperSlot {
    int s = 0;
    int tensor_degree = 0;
    int offset = 0;
    int dim = 0;
};

class Hypercomplex {
public:
    Hypercomplex(const ChainComplex& c, Flavor f, int smax);

    const ChainComplex& total() const { return total_; }
    const TensorSquare& square() const { return square_; }
    Flavor flavor() const { return flavor_; }
    int smax() const { return smax_; }
    const std::vector<HyperSlot>& slots(int m) const;

    IntVec pack(const StructureCycle& z) const;
    StructureCycle unpack(const IntVec& v, int degree) const;

private:
    TensorSquare square_;
    Flavor flavor_;
    int smax_;
    std::map<int, std::vector<HyperSlot>> slots_;
    ChainComplex total_;
    static const std::vector<HyperSlot> empty_;
};

// smallest truncation that computes the structure group in degree n exactly
int default_smax(const ChainComplex& c, Flavor f, int n);

AbelianGroup q_group(const ChainComplex& c, int n, Flavor f);
AbelianGroup q_group(const ChainComplex& c, int n, Flavor f, int smax);

IntVec t_action(const ChainComplex& c, const IntVec& z, int m);

bool is_structure_cycle(const ChainComplex& c, const StructureCycle& z);

// same structure group element, i.e. the difference bounds
bool classes_equal(const ChainComplex& c, const StructureCycle& a, const StructureCycle& b);

// seeded sample from the kernel of the hypercomplex differential
StructureCycle random_cycle(const ChainComplex& c, int n, Flavor f, std::uint64_t seed);

// (1+T)ψ_0 in slot 0; input must be a quadratic cycle, and the output failing
// the symmetric cycle test would mean the sign conventions are broken, which
// aborts loudly
StructureCycle symmetrize(const ChainComplex& c, const StructureCycle& psi);

// slant of z ∈ (C⊗C)_n against the dual: degree-r component sends the dual
// basis of C_{n-r} through the (n-r, r) block of z, scaled by the sign below
int slant_sign(int n, int r); // (-1)^{r(n+1)}
std::map<int, IntMatrix> slant_components(const ChainComplex& c, const IntVec& z, int n);
ChainMap slant(const ChainComplex& c, const IntVec& z, int n); // dual(c,n) -> c

// Equivariant coproduct on W: Δ(e_s) = Σ_{i+j=s} (-1)^{ij} e_i ⊗ T^i e_j.
// verify_w_coproduct replays the chain-map equation and both counits on the
// 4(s+1)-dimensional integral model of (W⊗W)_s and throws on any mismatch.
struct WCoproductTerm {
    int left = 0;
    int right = 0;
    bool twist = false; // T on the right tensor leg
    int coeff = 1;
};

std::vector<WCoproductTerm> w_coproduct(int s);
void verify_w_coproduct(int smax);

} // namespace lchain
