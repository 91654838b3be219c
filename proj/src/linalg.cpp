#include "coverdepth/linalg.hpp"

#include "coverdepth/errors.hpp"

#include <cctype>
#include <charconv>

namespace coverdepth
{

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::int64_t p)
{
    if (p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    std::string t;
    for (char c : text)
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "q" || t == "qq" || t == "rationals")
        return rationals();
    std::string_view digits;
    if (t.starts_with("gf:"))
        digits = std::string_view(t).substr(3);
    else if (t.starts_with("gf(") && t.ends_with(")"))
        digits = std::string_view(t).substr(3, t.size() - 4);
    else
        throw InputError("unknown field '" + std::string(text) + "' (expected q or gf:<p>)");
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw InputError("malformed field characteristic in '" + std::string(text) + "'");
    return prime_field(p);
}

std::string FieldSpec::name() const
{
    return is_rational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")";
}

std::optional<Eigen::Index> checked_bareiss_rank(IntMatrix a)
{
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index rank = 0;
    std::int64_t previous = 1;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col)
    {
        Eigen::Index pivot = rank;
        while (pivot < rows && a(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            a.row(pivot).swap(a.row(rank));
        const std::int64_t p = a(rank, col);
        for (Eigen::Index i = rank + 1; i < rows; ++i)
        {
            const std::int64_t lead = a(i, col);
            for (Eigen::Index j = col + 1; j < cols; ++j)
            {
                std::int64_t x = 0, y = 0, diff = 0;
                if (__builtin_mul_overflow(p, a(i, j), &x) || __builtin_mul_overflow(lead, a(rank, j), &y) ||
                    __builtin_sub_overflow(x, y, &diff))
                    return std::nullopt;
                a(i, j) = diff / previous;
            }
            a(i, col) = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

Eigen::Index rational_rank(const IntMatrix& a)
{
    if (auto fast = checked_bareiss_rank(a))
        return *fast;
    return bareiss_rank<BigInt>(a.cast<BigInt>());
}

Eigen::Index modular_rank(IntMatrix a, std::int64_t p)
{
    auto reduce = [p](std::int64_t x) { return ((x % p) + p) % p; };
    auto inverse = [p](std::int64_t x) {
        // p is prime: x^(p-2)
        __int128 result = 1, base = x, e = p - 2;
        while (e > 0)
        {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::int64_t>(result);
    };
    a = a.unaryExpr(reduce);
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col)
    {
        Eigen::Index pivot = rank;
        while (pivot < rows && a(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            a.row(pivot).swap(a.row(rank));
        const std::int64_t inv = inverse(a(rank, col));
        for (Eigen::Index i = rank + 1; i < rows; ++i)
        {
            if (a(i, col) == 0)
                continue;
            const std::int64_t factor = static_cast<std::int64_t>(static_cast<__int128>(a(i, col)) * inv % p);
            for (Eigen::Index j = col; j < cols; ++j)
                a(i, j) = reduce(a(i, j) - static_cast<std::int64_t>(static_cast<__int128>(factor) * a(rank, j) % p));
        }
        ++rank;
    }
    return rank;
}

Eigen::Index rank_over(const IntMatrix& a, const FieldSpec& field)
{
    if (a.size() == 0)
        return 0;
    return field.is_rational() ? rational_rank(a) : modular_rank(a, field.characteristic());
}

} // namespace coverdepth
