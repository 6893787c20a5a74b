#include "hvb/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace hvb {

Scalar make_scalar(long num, long den)
{
    if (den == 0)
        throw std::domain_error("make_scalar: zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

Scalar parse_scalar(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
    if (text.empty())
        throw bad();
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-')
        ++pos;
    const auto slash = text.find('/');
    auto all_digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    const std::string_view num = text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
    if (!all_digits(num))
        throw bad();
    mpz_class n(std::string(num), 10);
    if (text[0] == '-')
        n = -n;
    mpz_class d = 1;
    if (slash != std::string_view::npos) {
        const std::string_view den = text.substr(slash + 1);
        if (!all_digits(den))
            throw bad();
        d = mpz_class(std::string(den), 10);
        if (d == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Scalar s(n, d);
    s.canonicalize();
    return s;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

}  // namespace hvb
