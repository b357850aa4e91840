#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqp/combinatorics.hpp"
#include "eqp/linalg.hpp"
#include "eqp/modules.hpp"
#include "eqp/sparse.hpp"
#include "eqp/spin.hpp"

namespace eqp {

enum class PencilKind { generic, gl, sp, so, spin, koszul, adjoint, fixture };

std::string to_string(PencilKind k);
PencilKind pencil_kind_from_string(const std::string& s);

struct Certificate {
    bool valid = false;
    std::string group;
    std::size_t generators = 0;
};

// Builder invocation that reproduces a pencil.
struct BuildSpec {
    PencilKind kind = PencilKind::generic;
    Partition mu, nu;
    int dim = 0;  // v, 2n, m, n, a
    int k = 0;    // exterior degree for Koszul pencils

    friend bool operator==(const BuildSpec&, const BuildSpec&) = default;
};

// x -> sum_i x_i A_i / denominator, each A_i a target x source integer matrix.
struct Pencil {
    std::size_t nvars = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::vector<SparseMatrix<Integer>> coeffs;
    Integer denominator = 1;
    std::string source_label;
    std::string target_label;
    std::vector<std::string> var_labels;
    PencilKind kind = PencilKind::generic;
    // dimension of the natural module for group-built pencils (v, 2n, m, n for spin)
    int natural_dim = 0;
    Certificate certificate;
    std::optional<BuildSpec> spec;

    static Pencil from_rational(const std::vector<SparseMatrix<Rational>>& mats, std::size_t target_dim,
                                std::size_t source_dim);

    SparseMatrix<Rational> matrix(std::size_t i) const;
    Matrix<Rational> evaluate(const std::vector<Rational>& x) const;
    // Evaluation of the integer numerator; its rank is the pencil's rank.
    Matrix<Integer> evaluate_integer(const std::vector<Integer>& x) const;
    Matrix<std::uint32_t> evaluate_mod(const PrimeField& f, const std::vector<std::uint32_t>& x) const;
    bool is_zero() const;
    void validate() const;
};

bool same_coefficients(const Pencil& a, const Pencil& b);

// Representation matrices of one Lie algebra element on the parameter
// space, the source and the target.
struct LieTriple {
    SparseMatrix<Rational> var;
    SparseMatrix<Rational> source;
    SparseMatrix<Rational> target;
};

// rho_target(X) A_i - A_i rho_source(X) = sum_j rho_var(X)_{ji} A_j for all i.
bool check_equivariance(const Pencil& p, const std::vector<LieTriple>& generators);

struct BuildOptions {
    bool certify = true;
};

Pencil build_gl_pencil(const Partition& mu, const Partition& nu, int v, const BuildOptions& opt = {});
Pencil build_koszul_pencil(int k, int v, const BuildOptions& opt = {});
Pencil build_sp_pencil(const Partition& mu, const Partition& nu, int two_n, const BuildOptions& opt = {});
Pencil build_so_pencil(const Partition& mu, const Partition& nu, int m, const BuildOptions& opt = {});
Pencil build_spin_pencil(int n, const BuildOptions& opt = {});
Pencil build_adjoint_pencil(int a, const BuildOptions& opt = {});
Pencil build_from_spec(const BuildSpec& spec, const BuildOptions& opt = {});

// Rebuilds p from its spec and, when the coefficients agree exactly, attaches
// the rebuilt equivariance certificate. Returns whether p is now certified.
bool recertify(Pencil& p);

// Matrices of the one-box multiplication V (x) S_mu -> S_nu on realized
// GL bases, one per basis vector of V.
std::vector<SparseMatrix<Rational>> gl_multiplication_matrices(const RealizedModule& src, const RealizedModule& dst);

// Exterior power bases: increasing index tuples in lex order.
std::vector<std::vector<int>> exterior_basis(int v, int k);
SparseMatrix<Rational> exterior_lie_matrix(const Matrix<Rational>& X, int k);

// Theta_X : S_lam A (x) S_mu B -> S_lam' A (x) S_mu' B, X in A^v (x) B.
class ThetaOperator {
public:
    ThetaOperator(int a, int b, const Partition& lam, const Partition& lam_p, const Partition& mu, const Partition& mu_p);

    std::size_t source_dim() const { return src_lam_ * src_mu_; }
    std::size_t target_dim() const { return dst_lam_ * dst_mu_; }
    Matrix<Rational> evaluate(const Matrix<Rational>& X) const;
    Matrix<std::uint32_t> evaluate_mod(const PrimeField& f, const Matrix<std::uint32_t>& X) const;

private:
    int a_, b_;
    std::size_t src_lam_, src_mu_, dst_lam_, dst_mu_;
    std::vector<SparseMatrix<Rational>> contract_;  // per letter of A
    std::vector<SparseMatrix<Rational>> multiply_;  // per letter of B
};

Matrix<Rational> theta_map(const Matrix<Rational>& X, const Partition& lam, const Partition& lam_p, const Partition& mu,
                           const Partition& mu_p);

struct HyperplaneBound {
    bool certified = false;
    Integer kernel_bound;  // s_lam(2p) - s_mu(2p) when certified, else 0
    Integer even_difference;
    Integer odd_difference;
};

HyperplaneBound hyperplane_bound_criterion(const Partition& lam, const Partition& mu, int p);

}  // namespace eqp
