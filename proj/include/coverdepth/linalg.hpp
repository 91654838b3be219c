#ifndef COVERDEPTH_LINALG_HPP
#define COVERDEPTH_LINALG_HPP

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace coverdepth
{

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;

/// Coefficient field: the rationals (characteristic 0) or GF(p).
class FieldSpec
{
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws InputError unless p is prime and below 2^31.
    static FieldSpec prime_field(std::int64_t p);
    /// Accepts "q", "Q", "gf:<p>", "GF(<p>)".
    static FieldSpec parse(std::string_view text);

    std::int64_t characteristic() const { return characteristic_; }
    bool is_rational() const { return characteristic_ == 0; }
    /// "Q" or "GF(p)".
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::int64_t c) : characteristic_(c) {}
    std::int64_t characteristic_;
};

bool is_prime(std::int64_t n);

/// Fraction-free (Bareiss) row echelon rank. Every intermediate entry is a minor
/// of the input, so each division is exact.
template <typename Integer>
Eigen::Index bareiss_rank(DenseMatrix<Integer> a)
{
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index rank = 0;
    Integer previous = 1;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col)
    {
        Eigen::Index pivot = rank;
        while (pivot < rows && a(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            a.row(pivot).swap(a.row(rank));
        for (Eigen::Index i = rank + 1; i < rows; ++i)
        {
            for (Eigen::Index j = col + 1; j < cols; ++j)
                a(i, j) = Integer(a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / previous;
            a(i, col) = 0;
        }
        previous = a(rank, col);
        ++rank;
    }
    return rank;
}

/// Bareiss on machine integers; empty if any intermediate product overflows.
std::optional<Eigen::Index> checked_bareiss_rank(IntMatrix a);

/// Exact rank over the rationals: checked 64-bit Bareiss, falling back to
/// arbitrary precision on overflow.
Eigen::Index rational_rank(const IntMatrix& a);

/// Rank over GF(p) by ordinary Gaussian elimination.
Eigen::Index modular_rank(IntMatrix a, std::int64_t p);

Eigen::Index rank_over(const IntMatrix& a, const FieldSpec& field);

} // namespace coverdepth

#endif // COVERDEPTH_LINALG_HPP
