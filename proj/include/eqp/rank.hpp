#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eqp/pencil.hpp"

namespace eqp {

enum class PointClass { generic, coordinate, isotropic, non_isotropic, pure_spinor };
enum class Verdict { constant, bounded, non_constant, inconclusive };
enum class Method { exhaustive, sampled, transitivity };

std::string to_string(PointClass c);
std::string to_string(Verdict v);
std::string to_string(Method m);
PointClass point_class_from_string(const std::string& s);
Verdict verdict_from_string(const std::string& s);
Method method_from_string(const std::string& s);

struct Stratum {
    std::size_t rank = 0;
    std::vector<std::uint32_t> witness;  // over F_prime
    PointClass point_class = PointClass::generic;
    std::size_t count = 0;

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct PredictedTerm {
    Partition alpha;
    int k = 0;
    Integer dim;
    std::string part;  // kernel, image or cokernel

    friend bool operator==(const PredictedTerm&, const PredictedTerm&) = default;
};

struct PredictedDecomposition {
    Integer kernel_dim, image_dim, cokernel_dim;
    std::vector<PredictedTerm> terms;

    friend bool operator==(const PredictedDecomposition&, const PredictedDecomposition&) = default;
};

struct RankReport {
    std::size_t generic_rank = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    // strata in order of first appearance, one per (rank, point class)
    std::vector<Stratum> strata;
    Verdict verdict = Verdict::inconclusive;
    Method method = Method::sampled;
    std::uint32_t prime = default_prime;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t points = 0;
    std::string certificate;  // group of the equivariance certificate
    std::optional<PredictedDecomposition> predicted;

    std::size_t min_rank() const;
    friend bool operator==(const RankReport&, const RankReport&) = default;
};

struct VerdictMode {
    Method method = Method::sampled;
    std::uint32_t prime = default_prime;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1000000;

    static VerdictMode exhaustive(std::uint32_t prime, std::uint64_t budget = 1000000);
    static VerdictMode sampled(std::uint32_t prime, std::size_t trials, std::uint64_t seed);
    static VerdictMode transitivity(std::uint32_t prime = default_prime);
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedMode : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Checks that the prime is usable for the pencil; throws std::domain_error.
PrimeField pencil_field(const Pencil& p, std::uint32_t prime);

std::size_t rank_at(const Pencil& p, const PrimeField& f, const std::vector<std::uint32_t>& x);
std::size_t generic_rank(const Pencil& p, std::uint32_t prime, std::size_t trials, std::uint64_t seed);
RankReport constant_rank_verdict(const Pencil& p, const VerdictMode& mode);

// Structured points of a pencil: coordinate points plus isotropic and
// non-isotropic points (SO) or pure spinors (Spin).
using ClassifiedPoint = std::pair<std::vector<std::uint32_t>, PointClass>;
std::vector<ClassifiedPoint> structured_points(const Pencil& p, const PrimeField& f, std::mt19937_64& rng,
                                               std::size_t random_count);
std::vector<std::uint32_t> random_point(const PrimeField& f, std::size_t n, std::mt19937_64& rng);
// Nonzero x with sum x_i^2 = 0; needs p = 1 mod 4.
std::vector<std::uint32_t> random_isotropic_point(const PrimeField& f, int m, std::mt19937_64& rng);
// Coordinates on the even half-spin basis of a random pure spinor.
std::vector<std::uint32_t> random_pure_spinor(const PrimeField& f, int n, std::mt19937_64& rng);

PredictedDecomposition predict_gl_decomposition(const Partition& mu, const Partition& nu, int v);
PredictedDecomposition predict_so_nonisotropic(const Partition& mu, const Partition& nu, int m);

enum class RndVerdict { rank_critical_certified, strictly_larger, inconclusive };
std::string to_string(RndVerdict v);

struct RndResult {
    std::size_t dim = 0;         // dimension of the sampled constraint kernel
    std::size_t pencil_span = 0;  // dimension of L
    RndVerdict verdict = RndVerdict::inconclusive;
    std::size_t samples = 0;
    std::vector<std::size_t> history;  // kernel dimension after each round
    std::uint32_t prime = default_prime;
    std::uint64_t seed = 0;
    std::size_t generic_rank = 0;
    // basis of the constraint kernel in row-major Hom(source, target) coordinates
    Matrix<std::uint32_t> basis;
};

RndResult rnd(const Pencil& p, std::uint32_t prime, std::size_t max_samples, std::uint64_t seed);

// V^v (x) S_mu -> L2 V^v (x) S_nu induced by the pencil tensor.
Matrix<Integer> koszul_flattening(const Pencil& p);
std::size_t koszul_flattening_rank(const Pencil& p);
std::size_t koszul_flattening_rank(const Partition& mu, const Partition& nu, int v);

Integer theta_rank_formula(int a, int b, int r);

}  // namespace eqp
