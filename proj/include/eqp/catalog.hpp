#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "eqp/fixture.hpp"
#include "eqp/pencil.hpp"
#include "eqp/rank.hpp"

namespace eqp {

enum class Status { pass, fail, erratum, skipped, error };
std::string to_string(Status s);

struct Check {
    std::string name;
    std::string expected;
    std::string measured;
    bool ok = false;
    // a failure here is a suspected misprint in the source claim rather
    // than a defect of the construction
    bool erratum = false;
};

struct CatalogOptions {
    std::uint32_t prime = default_prime;
    std::uint64_t seed = 0;
    std::size_t trials = 200;
    std::uint64_t max_ambient = 4096;
    unsigned threads = 0;  // 0: hardware concurrency
};

class Checker {
public:
    explicit Checker(const CatalogOptions& opt) : opt_(opt) {}

    const CatalogOptions& options() const { return opt_; }

    bool expect(const std::string& name, const std::string& expected, const std::string& measured, bool ok);
    template <class A, class B>
    bool expect_eq(const std::string& name, const A& expected, const B& measured)
    {
        return expect(name, str(expected), str(measured), expected == measured);
    }
    // Compares against a printed claim; a mismatch is reported as an erratum.
    template <class A, class B>
    bool printed_eq(const std::string& name, const A& expected, const B& measured)
    {
        bool ok = expected == measured;
        checks_.push_back({name, str(expected), str(measured), ok, true});
        return ok;
    }
    void note(const std::string& name, const std::string& measured);

    const std::vector<Check>& checks() const { return checks_; }

private:
    template <class T>
    static std::string str(const T& x)
    {
        if constexpr (std::is_convertible_v<T, std::string>)
            return std::string(x);
        else if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
            return x.get_str();
        else if constexpr (!std::is_arithmetic_v<T> && std::is_constructible_v<Integer, T>)
            return Integer(x).get_str();
        else if constexpr (std::is_same_v<T, bool>)
            return x ? "true" : "false";
        else
            return std::to_string(x);
    }

    CatalogOptions opt_;
    std::vector<Check> checks_;
};

struct CatalogEntry {
    std::string id;
    std::string claim;
    std::vector<std::string> topics;
    // largest tensor ambient dimension the entry touches
    std::uint64_t ambient = 0;
    std::function<void(Checker&)> run;
};

struct EntryResult {
    std::string id;
    Status status = Status::error;
    std::vector<Check> checks;
    std::string error;
    double seconds = 0;
};

const std::vector<CatalogEntry>& catalog();
// Every in-scope claim the catalog must cover, by topic key.
const std::vector<std::string>& catalog_topics();

bool glob_match(const std::string& pattern, const std::string& text);

EntryResult run_entry(const CatalogEntry& e, const CatalogOptions& opt);
// Results in catalog order.
std::vector<EntryResult> run_catalog(const std::string& filter, const CatalogOptions& opt);

// v^2 - (q(v)/m) qhat in W (x) W with qhat = sum e_i (x) e_i; the trace-free
// representative of the kernel line of the SO one-box pencil (2) -> (2,1).
TensorVector so_kernel_line(const std::vector<Rational>& v);

// Vector h in W (e_1..e_5, f_1..f_5) orthogonal to the image of M_delta,
// with the sign of the Pfaffian term either as printed or alternating.
std::vector<std::uint32_t> spin_h_vector(const PrimeField& f, const std::vector<std::uint32_t>& delta, bool printed);

// Matrix with r leading ones on the diagonal.
Matrix<Rational> rank_representative(int a, int b, int r);

}  // namespace eqp
