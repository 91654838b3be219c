#include "catch_amalgamated.hpp"

#include "coverdepth/errors.hpp"
#include "coverdepth/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

using namespace coverdepth;
using boost::multiprecision::cpp_rational;

namespace
{

// Textbook elimination with exact rationals; independent of Bareiss.
int naive_rational_rank(const IntMatrix& a)
{
    std::vector<std::vector<cpp_rational>> m(a.rows(), std::vector<cpp_rational>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            m[i][j] = a(i, j);
    int rank = 0;
    for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c)
    {
        Eigen::Index p = rank;
        while (p < a.rows() && m[p][c] == 0)
            ++p;
        if (p == a.rows())
            continue;
        std::swap(m[p], m[rank]);
        for (Eigen::Index i = rank + 1; i < a.rows(); ++i)
        {
            cpp_rational f = m[i][c] / m[rank][c];
            for (Eigen::Index j = c; j < a.cols(); ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Gauss-Jordan on residues with inverses found by trial.
int naive_mod_rank(const IntMatrix& a, int p)
{
    std::vector<std::vector<long>> m(a.rows(), std::vector<long>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            m[i][j] = ((a(i, j) % p) + p) % p;
    int rank = 0;
    for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c)
    {
        Eigen::Index piv = rank;
        while (piv < a.rows() && m[piv][c] == 0)
            ++piv;
        if (piv == a.rows())
            continue;
        std::swap(m[piv], m[rank]);
        long inv = 1;
        while (m[rank][c] * inv % p != 1)
            ++inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i)
        {
            if (i == rank || m[i][c] == 0)
                continue;
            long f = m[i][c] * inv % p;
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a(i, j) = d(rng);
    return a;
}

} // namespace

TEST_CASE("field specifications")
{
    CHECK(FieldSpec::parse("q").is_rational());
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("gf:2").characteristic() == 2);
    CHECK(FieldSpec::parse("GF(7)").name() == "GF(7)");
    CHECK(FieldSpec::rationals().name() == "Q");
    CHECK_THROWS_AS(FieldSpec::parse("gf:4"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("gf:x"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("r"), InputError);
    CHECK(is_prime(2));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("rational rank matches a naive eliminator")
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t)
    {
        const int rows = 1 + t % 7, cols = 1 + (t / 7) % 7;
        auto a = random_matrix(rng, rows, cols, -2, 2);
        if (t % 3 == 0 && rows > 1)
            a.row(rows - 1) = a.row(0) * 2 - a.row(rows / 2); // force dependence
        INFO(a);
        CHECK(rational_rank(a) == naive_rational_rank(a));
        CHECK(rank_over(a, FieldSpec::rationals()) == naive_rational_rank(a));
    }
}

TEST_CASE("modular rank matches a naive eliminator")
{
    std::mt19937_64 rng(2);
    for (int p : {2, 3, 5, 7})
        for (int t = 0; t < 150; ++t)
        {
            const auto a = random_matrix(rng, 1 + t % 6, 1 + (t / 6) % 6, -3, 3);
            INFO(a << "\np = " << p);
            CHECK(modular_rank(a, p) == naive_mod_rank(a, p));
            CHECK(rank_over(a, FieldSpec::prime_field(p)) == naive_mod_rank(a, p));
        }
}

TEST_CASE("characteristic matters")
{
    IntMatrix a(2, 2);
    a << 1, 1, 1, -1; // determinant -2
    CHECK(rank_over(a, FieldSpec::rationals()) == 2);
    CHECK(rank_over(a, FieldSpec::prime_field(2)) == 1);
    CHECK(rank_over(a, FieldSpec::prime_field(3)) == 2);
}

TEST_CASE("overflow falls back to arbitrary precision")
{
    std::mt19937_64 rng(9);
    IntMatrix a = random_matrix(rng, 8, 8, -2000000000, 2000000000);
    CHECK_FALSE(checked_bareiss_rank(a).has_value());
    CHECK(rational_rank(a) == naive_rational_rank(a));
    a.row(7) = a.row(0) - a.row(3);
    CHECK(rational_rank(a) == 7);
    CHECK(bareiss_rank<BigInt>(a.cast<BigInt>()) == 7);
}

TEST_CASE("degenerate shapes")
{
    CHECK(rank_over(IntMatrix(0, 3), FieldSpec::rationals()) == 0);
    CHECK(rank_over(IntMatrix::Zero(3, 4), FieldSpec::prime_field(5)) == 0);
    CHECK(rank_over(IntMatrix::Identity(4, 4), FieldSpec::rationals()) == 4);
}
