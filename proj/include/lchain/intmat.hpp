#pragma once
// Exact linear algebra over Z: matrices of unbounded integers, Smith normal
// form with transforms, integer linear solving, and homology of a pair of
// composable differentials in canonical invariant-factor form.
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lchain {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const IntVec& entries);
    // row-major literal, for tests and fixtures
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transposed() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const Int& c) const;
    IntMatrix operator-() const;

    IntVec apply(const IntVec& v) const; // this * v

    IntMatrix block(int i0, int j0, int r, int c) const;
    void insert_block(int i0, int j0, const IntMatrix& b);

    IntVec column(int j) const;
    void set_column(int j, const IntVec& v);

    // exact determinant (Bareiss fraction-free elimination); square only
    Int determinant() const;

    std::string to_string() const; // small human-readable dump

private:
    int rows_ = 0, cols_ = 0;
    IntVec data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

// u * m * v = d with u, v unimodular and d diagonal, d_1 | d_2 | ... >= 0.
// Pivot choice: smallest nonzero absolute value in the working submatrix,
// row-major on ties. Deterministic down to the bit.
struct SmithDecomposition {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv; // tracked alongside, so callers never invert
    int rank = 0;           // nonzero diagonal entries

    IntVec invariant_factors() const; // the nonzero d_i, in order
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

int rank_of(const IntMatrix& m);

// integer solution of a x = b, if one exists
std::optional<IntVec> solve(const IntMatrix& a, const IntVec& b);

// columns form a basis of ker(a) as a direct summand of Z^cols
IntMatrix kernel_basis(const IntMatrix& a);

// finitely generated abelian group in canonical form
struct AbelianGroup {
    int free_rank = 0;
    IntVec torsion; // invariant factors, each >= 2, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const = default;
    std::string to_string() const;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// H = ker(d_out) / im(d_in) together with enough change-of-basis data to
// express cycles in canonical generator coordinates and to lift generators
// back to cycles.
class HomologyData {
public:
    AbelianGroup group;

    int generator_count() const { return static_cast<int>(generator_coords_.size()); }

    // canonical-coordinate class of a cycle (torsion coordinates reduced into
    // [0, order)); throws if z is not a cycle
    IntVec class_of(const IntVec& z) const;

    // a chain-level representative of canonical generator g
    IntVec generator_cycle(int g) const;

    // order of generator g: 0 for free generators, else the invariant factor
    const Int& generator_order(int g) const { return orders_[generator_coords_[g]]; }

    friend HomologyData homology_at(const IntMatrix& d_out, const IntMatrix& d_in);

private:
    IntMatrix kernel_basis_;     // chains x kernel-rank
    IntMatrix kernel_coords_;    // kernel-rank x chains, rows of v^{-1}
    IntMatrix pres_from_kernel_; // kernel coords -> presentation coords
    IntMatrix kernel_from_pres_;
    IntVec orders_;              // per presentation coordinate; 0 = free
    std::vector<int> generator_coords_;
};

// requires d_out * d_in = 0 (throws otherwise: the data is not a complex)
HomologyData homology_at(const IntMatrix& d_out, const IntMatrix& d_in);

struct InducedMap {
    IntMatrix matrix; // target generators x source generators
    AbelianGroup source, target;
    bool is_iso = false;
};

// Map induced on homology by one degree component f of a chain map. Checks
// that f carries cycles to cycles and boundaries to boundaries for the given
// differentials and throws if not; full chain-map checking is the caller's
// business (it needs the neighbouring components).
InducedMap induced_map_on_homology(const IntMatrix& f,
                                   const IntMatrix& src_out, const IntMatrix& src_in,
                                   const IntMatrix& tgt_out, const IntMatrix& tgt_in);

} // namespace lchain
