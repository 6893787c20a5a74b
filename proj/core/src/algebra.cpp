#include "hvb/algebra.hpp"

#include "hvb/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hvb {

namespace {

bool in(Family f, std::initializer_list<Family> fs) { return std::find(fs.begin(), fs.end(), f) != fs.end(); }

Scalar binom(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(r);
}

Scalar ipow(int base, int e)
{
    mpz_class r;
    mpz_class b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return Scalar(r);
}

// Virasoro-type central term delta_{m+n,0} (m^3 - m)/12.
Scalar virasoro_cocycle(int m, int n)
{
    if (m + n != 0)
        return 0;
    const long mm = m;
    return make_scalar(mm * mm * mm - mm, 12);
}

}  // namespace

AlgebraSpec AlgebraSpec::wab(const Scalar& a, const Scalar& b)
{
    AlgebraSpec s(AlgebraKind::Wab);
    s.a_ = a;
    s.b_ = b;
    return s;
}

AlgebraSpec AlgebraSpec::diffops(int max_order)
{
    if (max_order < 0)
        throw std::invalid_argument("diffops: order must be nonnegative");
    AlgebraSpec s(AlgebraKind::DiffOps);
    s.max_order_ = max_order;
    return s;
}

AlgebraSpec AlgebraSpec::parse(std::string_view text)
{
    const std::string t(text);
    if (t == "witt") return witt();
    if (t == "virasoro") return virasoro();
    if (t == "heisenberg") return heisenberg();
    if (t == "twisted-hv") return twisted_hv();
    if (t == "g1") return g1();
    if (t == "sv") return sv();
    auto fail = [&] { return std::invalid_argument("unknown algebra '" + t + "'"); };
    if (t.rfind("wab:", 0) == 0) {
        const std::string rest = t.substr(4);
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw fail();
        const std::string pa = rest.substr(0, comma), pb = rest.substr(comma + 1);
        if (pa.rfind("a=", 0) != 0 || pb.rfind("b=", 0) != 0)
            throw fail();
        return wab(parse_scalar(pa.substr(2)), parse_scalar(pb.substr(2)));
    }
    if (t.rfind("diffops:order=", 0) == 0) {
        const std::string n = t.substr(14);
        if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
            throw fail();
        return diffops(std::stoi(n));
    }
    throw fail();
}

std::string AlgebraSpec::id() const
{
    switch (kind_) {
    case AlgebraKind::Witt: return "witt";
    case AlgebraKind::Virasoro: return "virasoro";
    case AlgebraKind::Heisenberg: return "heisenberg";
    case AlgebraKind::TwistedHV: return "twisted-hv";
    case AlgebraKind::G1: return "g1";
    case AlgebraKind::SV: return "sv";
    case AlgebraKind::Wab: return "wab:a=" + to_string(a_) + ",b=" + to_string(b_);
    case AlgebraKind::DiffOps: return "diffops:order=" + std::to_string(max_order_);
    }
    return "?";
}

bool AlgebraSpec::admits(const BasisVector& b) const
{
    using F = Family;
    switch (kind_) {
    case AlgebraKind::Witt: return b.family == F::L;
    case AlgebraKind::Virasoro: return in(b.family, {F::L, F::C});
    case AlgebraKind::Heisenberg: return in(b.family, {F::I, F::CI});
    case AlgebraKind::TwistedHV: return in(b.family, {F::L, F::I, F::CL, F::CI, F::CLI});
    case AlgebraKind::G1:
    case AlgebraKind::Wab: return in(b.family, {F::L, F::I});
    case AlgebraKind::SV: return in(b.family, {F::L, F::I, F::Y, F::C});
    case AlgebraKind::DiffOps: return b.family == F::E && b.j >= 0;
    }
    return false;
}

void AlgebraSpec::require_admissible(const BasisVector& b) const
{
    if (!admits(b))
        throw InadmissibleBasis(to_string(b) + " is not a basis vector of " + id());
}

void AlgebraSpec::require_admissible(const Element& x) const
{
    for (const auto& [b, c] : x)
        require_admissible(b);
}

Element AlgebraSpec::bracket(const BasisVector& x, const BasisVector& y) const
{
    require_admissible(x);
    require_admissible(y);
    using F = Family;
    Element out;
    if (x.is_central_symbol() || y.is_central_symbol())
        return out;

    if (kind_ == AlgebraKind::DiffOps) {
        const int m = x.i, n = x.j, m1 = y.i, n1 = y.j;
        for (int i = 1; i <= n; ++i)
            out.add_term(BasisVector::E(m + m1, n + n1 - i), binom(n, i) * ipow(m1, i));
        for (int j = 1; j <= n1; ++j)
            out.add_term(BasisVector::E(m + m1, n + n1 - j), -binom(n1, j) * ipow(m, j));
        return out;
    }

    // Reduce to x.family <= y.family by antisymmetry.
    if (y.family < x.family)
        return -bracket(y, x);

    const int m = x.i, n = y.i;
    if (x.family == F::L && y.family == F::L) {
        out.add_term(BasisVector::L(m + n), n - m);
        if (kind_ == AlgebraKind::Virasoro || kind_ == AlgebraKind::SV)
            out.add_term(BasisVector::C(), virasoro_cocycle(m, n));
        else if (kind_ == AlgebraKind::TwistedHV)
            out.add_term(BasisVector::CL(), virasoro_cocycle(m, n));
        return out;
    }
    if (x.family == F::L && y.family == F::I) {
        if (kind_ == AlgebraKind::Wab) {
            out.add_term(BasisVector::I(m + n), a_ + b_ * m + n);
            return out;
        }
        out.add_term(BasisVector::I(m + n), n);
        if (kind_ == AlgebraKind::TwistedHV && m + n == 0)
            out.add_term(BasisVector::CLI(), static_cast<long>(m) * m - m);
        return out;
    }
    if (x.family == F::I && y.family == F::I) {
        if ((kind_ == AlgebraKind::TwistedHV || kind_ == AlgebraKind::Heisenberg) && m + n == 0)
            out.add_term(BasisVector::CI(), n);
        return out;
    }
    if (x.family == F::L && y.family == F::Y) {
        // [L_m, Y_r] = (r - m/2) Y_{m+r}, r = k + 1/2
        out.add_term(BasisVector::Y(m + n), make_scalar(2L * n + 1 - m, 2));
        return out;
    }
    if (x.family == F::Y && y.family == F::Y) {
        // [Y_r, Y_s] = (s - r) I_{r+s}; r + s = k + j + 1
        out.add_term(BasisVector::I(m + n + 1), n - m);
        return out;
    }
    // [I, Y] = 0
    return out;
}

Element AlgebraSpec::bracket(const Element& x, const Element& y) const
{
    Element out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            out.add_scaled(bracket(a, b), ca * cb);
    return out;
}

Scalar AlgebraSpec::degree(const BasisVector& b) const
{
    require_admissible(b);
    switch (b.family) {
    case Family::L:
    case Family::I:
    case Family::E: return b.i;
    case Family::Y: return make_scalar(2L * b.i + 1, 2);
    default: return 0;
    }
}

std::vector<BasisVector> AlgebraSpec::center_basis() const
{
    using B = BasisVector;
    switch (kind_) {
    case AlgebraKind::Witt: return {};
    case AlgebraKind::Virasoro: return {B::C()};
    case AlgebraKind::Heisenberg: return {B::I(0), B::CI()};
    case AlgebraKind::TwistedHV: return {B::I(0), B::CLI(), B::CL(), B::CI()};
    case AlgebraKind::G1: return {B::I(0)};
    case AlgebraKind::SV: return {B::I(0), B::C()};
    case AlgebraKind::DiffOps: return {B::E(0, 0)};
    case AlgebraKind::Wab:
        // I_n is central iff a + bm + n = 0 for every m.
        if (is_zero(b_) && a_.get_den() == 1 && mpz_fits_sint_p(a_.get_num_mpz_t()))
            return {B::I(-static_cast<int>(a_.get_num().get_si()))};
        return {};
    }
    return {};
}

std::vector<BasisVector> AlgebraSpec::generators(int window) const
{
    std::vector<BasisVector> out;
    if (window < 0)
        return out;
    for (int d = -window; d <= window; ++d)
        for (const auto& b : homogeneous_basis(d))
            out.push_back(b);
    // Y[k] has degree k + 1/2; |k + 1/2| <= window  <=>  -window <= k <= window - 1.
    if (kind_ == AlgebraKind::SV)
        for (int k = -window; k <= window - 1; ++k)
            out.push_back(BasisVector::Y(k));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BasisVector> AlgebraSpec::homogeneous_basis(const Scalar& degree) const
{
    std::vector<BasisVector> out;
    using B = BasisVector;
    if (degree.get_den() == 2) {
        if (kind_ == AlgebraKind::SV) {
            // k + 1/2 = degree
            const Scalar k = degree - Scalar(1, 2);
            out.push_back(B::Y(static_cast<int>(k.get_num().get_si())));
        }
        return out;
    }
    if (degree.get_den() != 1)
        return out;
    const int d = static_cast<int>(degree.get_num().get_si());
    switch (kind_) {
    case AlgebraKind::Witt: out = {B::L(d)}; break;
    case AlgebraKind::Virasoro: out = {B::L(d)}; if (d == 0) out.push_back(B::C()); break;
    case AlgebraKind::Heisenberg: out = {B::I(d)}; if (d == 0) out.push_back(B::CI()); break;
    case AlgebraKind::TwistedHV:
        out = {B::L(d), B::I(d)};
        if (d == 0)
            out.insert(out.end(), {B::CL(), B::CI(), B::CLI()});
        break;
    case AlgebraKind::G1:
    case AlgebraKind::Wab: out = {B::L(d), B::I(d)}; break;
    case AlgebraKind::SV: out = {B::L(d), B::I(d)}; if (d == 0) out.push_back(B::C()); break;
    case AlgebraKind::DiffOps:
        for (int n = 0; n <= max_order_; ++n)
            out.push_back(B::E(d, n));
        break;
    }
    return out;
}

}  // namespace hvb
