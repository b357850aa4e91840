#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqp/combinatorics.hpp"
#include "eqp/linalg.hpp"
#include "eqp/sparse.hpp"
#include "eqp/tensor.hpp"

namespace eqp {

enum class FormKind { symplectic, orthogonal };

// Invariant form on the natural representation. The symplectic form pairs
// consecutive basis vectors: omega = e1^e2 + e3^e4 + ...
struct BilinearFormSpec {
    FormKind kind = FormKind::orthogonal;
    int dim = 0;
    Matrix<int> matrix;

    static BilinearFormSpec symplectic(int two_n);
    static BilinearFormSpec orthogonal(int m);

    int operator()(int a, int b) const { return matrix(a, b); }
    // Invariant 2-tensor used to generate the trace part; its contraction
    // against the form is nonzero.
    int dual(int a, int b) const;
};

using GradeKey = std::vector<int>;

struct ModuleBlock {
    GradeKey key;
    // Ambient word indices for GL modules, parent coordinates otherwise.
    std::vector<std::uint64_t> columns;
    Matrix<Rational> basis;  // RREF rows over columns
    std::vector<std::size_t> pivots;
    std::size_t offset = 0;

    std::size_t dim() const { return basis.rows(); }
    // local column index or -1
    long find(std::uint64_t column) const;
};

// A representation realized inside a tensor power of its natural module.
// GL modules hold their basis directly over tensor words; Sp and SO
// modules are subspaces of the GL module of the same shape, cut out by all
// contractions with the invariant form, and carry the projection along
// the trace part.
class RealizedModule {
public:
    const GroupSpec& group() const { return group_; }
    const Partition& weight() const { return weight_; }
    const TensorSpace& ambient() const { return ambient_; }
    std::size_t dim() const { return dim_; }
    const std::vector<ModuleBlock>& blocks() const { return blocks_; }
    const RealizedModule* parent() const { return parent_.get(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const YoungSymmetrizer& symmetrizer() const { return *symmetrizer_; }
    const std::optional<BilinearFormSpec>& form() const { return form_; }

    GradeKey grade(WordIndex w) const;
    GradeKey grade_of_content(const std::vector<int>& content) const;
    const ModuleBlock* block(const GradeKey& key) const;
    std::pair<const ModuleBlock*, std::size_t> locate(std::size_t row) const;

    TensorVector ambient_vector(std::size_t i) const;
    TensorVector ambient_vector(const std::vector<Rational>& coords) const;
    std::optional<std::vector<Rational>> try_coordinates(const TensorVector& v) const;
    std::vector<Rational> coordinates(const TensorVector& v) const;
    bool contains(const TensorVector& v) const { return try_coordinates(v).has_value(); }

    // Sp/SO only: basis rows as vectors in parent coordinates.
    SparseMatrix<Rational> inclusion() const;
    std::optional<std::vector<Rational>> try_coordinates_from_parent(const std::vector<Rational>& p) const;
    // Sp/SO only: equivariant projection parent -> this along the trace part.
    SparseMatrix<Rational> projection() const;

    // Matrix of X acting as a derivation, in this module's basis; throws
    // if the module is not stable.
    SparseMatrix<Rational> lie_matrix(const Matrix<Rational>& X) const;

    // Full ambient subspace; only sensible for small ambient spaces.
    Subspace<RationalField> subspace() const;

    static std::shared_ptr<const RealizedModule> make_schur(const Partition& lam, int v);
    static std::shared_ptr<const RealizedModule> make_form_module(const Partition& lam, const BilinearFormSpec& form);

private:
    void finalize();
    void build_trace_projection();

    GroupSpec group_;
    Partition weight_;
    TensorSpace ambient_;
    std::size_t dim_ = 0;
    std::vector<ModuleBlock> blocks_;
    std::vector<std::size_t> block_of_row_;
    std::shared_ptr<const RealizedModule> parent_;
    std::vector<std::string> labels_;
    std::shared_ptr<const YoungSymmetrizer> symmetrizer_;
    std::optional<BilinearFormSpec> form_;
    // per block: inverse of [module rows; trace rows] in local parent coordinates
    std::vector<Matrix<Rational>> projectors_;
};

using ModulePtr = std::shared_ptr<const RealizedModule>;

ModulePtr schur_module(const Partition& lam, int v);
ModulePtr symplectic_module(const Partition& lam, int two_n);
ModulePtr orthogonal_module(const Partition& lam, int m);

// Derivation action of X on a tensor.
TensorVector lie_action_tensor(const Matrix<Rational>& X, const TensorSpace& space, const TensorVector& u);

bool in_lie_algebra(const GroupSpec& group, const Matrix<Rational>& X);

// Lie algebra of the group in the natural representation, as a basis.
std::vector<Matrix<Rational>> lie_algebra_basis(const GroupSpec& group);

// X acting on module coordinates u; throws if X is not in the Lie algebra
// or the image leaves the module.
std::vector<Rational> lie_action(const GroupSpec& group, const Matrix<Rational>& X, const RealizedModule& mod,
                                 const std::vector<Rational>& u);

// Contraction of tensor slots a < b with the form.
TensorVector contract(const BilinearFormSpec& form, const TensorSpace& space, const TensorVector& u, int a, int b);

}  // namespace eqp
