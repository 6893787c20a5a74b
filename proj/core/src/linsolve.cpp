#include "hvb/linsolve.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace hvb {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x)
{
    if (is_zero(a) || x.empty())
        return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
            out.push_back(std::move(*iy++));
        } else if (iy == y.end() || ix->first < iy->first) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else {
            Scalar v = iy->second + a * ix->second;
            if (!is_zero(v))
                out.emplace_back(iy->first, std::move(v));
            ++iy, ++ix;
        }
    }
    y = std::move(out);
}

SparseVec normalize(SparseVec v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, std::move(c));
    }
    std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
    return out;
}

Scalar dot(const SparseVec& v, const std::vector<Scalar>& dense)
{
    Scalar s = 0;
    for (const auto& [i, c] : v)
        s += c * dense.at(static_cast<std::size_t>(i));
    return s;
}

int LinearSystem::add_unknown(std::string name)
{
    unknowns_.push_back(std::move(name));
    return static_cast<int>(unknowns_.size()) - 1;
}

void LinearSystem::add_row(SparseVec coeffs, const Scalar& rhs)
{
    coeffs = normalize(std::move(coeffs));
    for (const auto& [i, c] : coeffs)
        if (i < 0 || i >= num_unknowns())
            throw std::out_of_range("row references undeclared unknown " + std::to_string(i));
    rows_.push_back({std::move(coeffs), rhs});
}

bool LinearSystem::homogeneous() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const LinearEquation& r) { return is_zero(r.rhs); });
}

namespace {

struct PivotRow {
    SparseVec coeffs;  // leading entry is 1
    Scalar rhs;
    SparseVec combo;   // multipliers of original rows
};

// Arithmetic modulo the Mersenne prime 2^61 - 1, used only to pick out a
// maximal independent set of rows before the exact elimination.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b)
{
    const u128 p = static_cast<u128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1)
            r = mul_mod(r, a);
    return r;
}

std::optional<std::uint64_t> to_mod(const Scalar& q)
{
    const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (den == 0)
        return std::nullopt;
    const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
    return mul_mod(num, pow_mod(den, kPrime - 2));
}

using ModVec = std::vector<std::pair<int, std::uint64_t>>;

// y += a * x modulo the prime
void axpy_mod(ModVec& y, std::uint64_t a, const ModVec& x)
{
    ModVec out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
            out.push_back(*iy++);
        } else if (iy == y.end() || ix->first < iy->first) {
            out.emplace_back(ix->first, mul_mod(a, ix->second));
            ++ix;
        } else {
            std::uint64_t v = iy->second + mul_mod(a, ix->second);
            if (v >= kPrime)
                v -= kPrime;
            if (v)
                out.emplace_back(iy->first, v);
            ++iy, ++ix;
        }
    }
    y = std::move(out);
}

// Rows that are independent modulo the prime, with the right-hand side as an
// extra last column. Returns nullopt when some coefficient has no image mod p.
std::optional<std::vector<std::size_t>> independent_rows_mod_p(const LinearSystem& system,
                                                              const std::vector<std::size_t>& order)
{
    const int n = system.num_unknowns();
    std::vector<std::optional<ModVec>> pivot(static_cast<std::size_t>(n) + 1);
    std::vector<std::size_t> keep;
    for (std::size_t r : order) {
        const auto& eq = system.rows()[r];
        ModVec row;
        row.reserve(eq.coeffs.size() + 1);
        for (const auto& [c, v] : eq.coeffs) {
            auto m = to_mod(v);
            if (!m)
                return std::nullopt;
            if (*m)
                row.emplace_back(c, *m);
        }
        if (!is_zero(eq.rhs)) {
            auto m = to_mod(eq.rhs);
            if (!m)
                return std::nullopt;
            if (*m)
                row.emplace_back(n, *m);
        }
        while (!row.empty() && pivot[static_cast<std::size_t>(row.front().first)])
            axpy_mod(row, kPrime - row.front().second, *pivot[static_cast<std::size_t>(row.front().first)]);
        if (row.empty())
            continue;
        const std::uint64_t inv = pow_mod(row.front().second, kPrime - 2);
        for (auto& e : row)
            e.second = mul_mod(e.second, inv);
        const auto lead = static_cast<std::size_t>(row.front().first);
        pivot[lead] = std::move(row);
        keep.push_back(r);
    }
    return keep;
}

SolveReport solve_rows(const LinearSystem& system, const std::vector<std::size_t>& row_ids)
{
    const int n = system.num_unknowns();
    const bool track = !system.homogeneous();
    std::vector<std::optional<PivotRow>> pivot(static_cast<std::size_t>(n));
    SolveReport report;

    for (std::size_t r : row_ids) {
        const auto& eq = system.rows()[r];
        SparseVec row = eq.coeffs;
        Scalar rhs = eq.rhs;
        SparseVec combo;
        if (track)
            combo.emplace_back(static_cast<int>(r), Scalar(1));
        while (!row.empty()) {
            auto& p = pivot[static_cast<std::size_t>(row.front().first)];
            if (!p)
                break;
            const Scalar f = -row.front().second;
            axpy(row, f, p->coeffs);
            rhs += f * p->rhs;
            if (track)
                axpy(combo, f, p->combo);
        }
        if (row.empty()) {
            if (!is_zero(rhs) && report.solvable()) {
                report.status = SolveReport::Status::Infeasible;
                report.certificate = std::move(combo);
            }
            continue;
        }
        const Scalar inv = 1 / row.front().second;
        for (auto& e : row)
            e.second *= inv;
        rhs *= inv;
        if (track)
            for (auto& e : combo)
                e.second *= inv;
        const int lead = row.front().first;
        pivot[static_cast<std::size_t>(lead)] = PivotRow{std::move(row), std::move(rhs), std::move(combo)};
    }

    for (int c = 0; c < n; ++c)
        if (pivot[static_cast<std::size_t>(c)])
            report.pivot_columns.push_back(c);
    report.rank = report.pivot_columns.size();
    report.nullity = static_cast<std::size_t>(n) - report.rank;
    if (!report.solvable())
        return report;

    // Back substitution to reduced row echelon form, highest pivot first.
    for (auto it = report.pivot_columns.rbegin(); it != report.pivot_columns.rend(); ++it) {
        PivotRow& p = *pivot[static_cast<std::size_t>(*it)];
        SparseVec reduced{p.coeffs.front()};
        SparseVec tail(p.coeffs.begin() + 1, p.coeffs.end());
        SparseVec acc;
        for (auto& [col, v] : tail) {
            const auto& q = pivot[static_cast<std::size_t>(col)];
            if (q) {
                SparseVec qtail(q->coeffs.begin() + 1, q->coeffs.end());
                axpy(acc, -v, qtail);
                p.rhs -= v * q->rhs;
            } else {
                axpy(acc, 1, SparseVec{{col, v}});
            }
        }
        reduced.insert(reduced.end(), acc.begin(), acc.end());
        p.coeffs = std::move(reduced);
    }

    report.particular.assign(static_cast<std::size_t>(n), Scalar(0));
    std::vector<SparseVec> kernel_of_col(static_cast<std::size_t>(n));
    for (int c : report.pivot_columns) {
        const PivotRow& p = *pivot[static_cast<std::size_t>(c)];
        report.particular[static_cast<std::size_t>(c)] = p.rhs;
        for (std::size_t k = 1; k < p.coeffs.size(); ++k)
            kernel_of_col[static_cast<std::size_t>(p.coeffs[k].first)].emplace_back(c, -p.coeffs[k].second);
    }
    for (int c = 0; c < n; ++c) {
        if (pivot[static_cast<std::size_t>(c)])
            continue;
        SparseVec v = std::move(kernel_of_col[static_cast<std::size_t>(c)]);
        v.emplace_back(c, Scalar(1));
        report.kernel.push_back(normalize(std::move(v)));
    }
    return report;
}

bool satisfies_all(const LinearSystem& system, const SolveReport& rep)
{
    for (const auto& eq : system.rows()) {
        if (dot(eq.coeffs, rep.particular) != eq.rhs)
            return false;
        for (const auto& k : rep.kernel) {
            Scalar s = 0;
            auto ik = k.begin();
            for (const auto& [c, v] : eq.coeffs) {
                while (ik != k.end() && ik->first < c)
                    ++ik;
                if (ik != k.end() && ik->first == c)
                    s += v * ik->second;
            }
            if (!is_zero(s))
                return false;
        }
    }
    return true;
}

}  // namespace

SolveReport solve_exact(const LinearSystem& system)
{
    // Rows whose first entry sits far right are eliminated first; this keeps
    // fill-in low on the banded systems built by the cohomology solvers and does
    // not change the reduced row echelon form.
    std::vector<std::size_t> all(system.rows().size());
    for (std::size_t r = 0; r < all.size(); ++r)
        all[r] = r;
    auto lead = [&](std::size_t r) {
        const auto& c = system.rows()[r].coeffs;
        return c.empty() ? system.num_unknowns() : c.front().first;
    };
    std::stable_sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) { return lead(a) > lead(b); });
    if (auto keep = independent_rows_mod_p(system, all); keep && keep->size() < all.size()) {
        SolveReport rep = solve_rows(system, *keep);
        // The kernel and particular solution only depend on the row space, so
        // they agree with the full elimination whenever no dropped row is violated.
        if (rep.solvable() && satisfies_all(system, rep))
            return rep;
    }
    return solve_rows(system, all);
}

bool verify_certificate(const LinearSystem& system, const SparseVec& certificate)
{
    if (certificate.empty())
        return false;
    SparseVec lhs;
    Scalar rhs = 0;
    for (const auto& [r, c] : certificate) {
        if (r < 0 || static_cast<std::size_t>(r) >= system.rows().size())
            return false;
        const auto& eq = system.rows()[static_cast<std::size_t>(r)];
        axpy(lhs, c, eq.coeffs);
        rhs += c * eq.rhs;
    }
    return lhs.empty() && !is_zero(rhs);
}

bool verify_solution(const LinearSystem& system, const std::vector<Scalar>& x)
{
    if (x.size() != static_cast<std::size_t>(system.num_unknowns()))
        return false;
    return std::all_of(system.rows().begin(), system.rows().end(),
                       [&](const LinearEquation& eq) { return dot(eq.coeffs, x) == eq.rhs; });
}

SparseVec EchelonBasis::reduce(SparseVec v) const
{
    // Eliminate every pivot column present in v, in increasing column order.
    std::size_t k = 0;
    while (k < v.size()) {
        const int col = v[k].first;
        if (col < static_cast<int>(lead_of_col_.size()) && lead_of_col_[static_cast<std::size_t>(col)] >= 0) {
            const Scalar f = -v[k].second;
            axpy(v, f, rows_[static_cast<std::size_t>(lead_of_col_[static_cast<std::size_t>(col)])]);
            // Entries before k are untouched: pivot rows start at their lead column.
            k = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), col,
                                                          [](const auto& e, int c) { return e.first < c; }) -
                                         v.begin());
        } else {
            ++k;
        }
    }
    return v;
}

bool EchelonBasis::insert(SparseVec v)
{
    v = reduce(normalize(std::move(v)));
    if (v.empty())
        return false;
    // Pick the first remaining entry as pivot; earlier pivot columns are absent from v.
    const Scalar inv = 1 / v.front().second;
    for (auto& e : v)
        e.second *= inv;
    const int lead = v.front().first;
    if (lead >= static_cast<int>(lead_of_col_.size()))
        lead_of_col_.resize(static_cast<std::size_t>(lead) + 1, -1);
    lead_of_col_[static_cast<std::size_t>(lead)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors)
{
    EchelonBasis b;
    for (const auto& v : vectors)
        b.insert(v);
    return b.rank();
}

}  // namespace hvb
