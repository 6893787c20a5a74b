#pragma once

#include "hvb/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hvb {

/// Sparse vector as (index, value) pairs sorted by index with no zero values.
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// y += a * x
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec normalize(SparseVec v);  // sorts, merges duplicates, drops zeros
Scalar dot(const SparseVec& v, const std::vector<Scalar>& dense);

struct LinearEquation {
    SparseVec coeffs;
    Scalar rhs = 0;
};

/// Exact linear system over Q with named unknowns.
class LinearSystem {
public:
    LinearSystem() = default;
    explicit LinearSystem(std::vector<std::string> unknowns) : unknowns_(std::move(unknowns)) {}

    int add_unknown(std::string name);
    int num_unknowns() const { return static_cast<int>(unknowns_.size()); }
    const std::vector<std::string>& unknowns() const { return unknowns_; }

    /// Throws std::out_of_range for an undeclared unknown. Empty rows with zero
    /// right-hand side are kept so row indices stay stable for certificates.
    void add_row(SparseVec coeffs, const Scalar& rhs = 0);
    const std::vector<LinearEquation>& rows() const { return rows_; }
    bool homogeneous() const;

private:
    std::vector<std::string> unknowns_;
    std::vector<LinearEquation> rows_;
};

struct SolveReport {
    enum class Status { Solvable, Infeasible };

    Status status = Status::Solvable;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::vector<int> pivot_columns;
    /// Dense particular solution (free unknowns set to zero). Empty when infeasible.
    std::vector<Scalar> particular;
    /// Kernel basis, one vector per free column, in column order.
    std::vector<SparseVec> kernel;
    /// Row multipliers whose combination reads 0 = nonzero. Empty when solvable.
    SparseVec certificate;

    bool solvable() const { return status == Status::Solvable; }
};

/// Gaussian elimination over Q. The pivot of a row is its first nonzero column
/// after reduction, so pivots, the particular solution and the kernel basis are
/// those of the reduced row echelon form and depend only on the column order.
/// Redundant rows are screened out modulo a large prime first; the exact result
/// is re-checked against every row and recomputed in full on any mismatch.
SolveReport solve_exact(const LinearSystem& system);

/// Recomputes sum(c_i * row_i) and checks that it reads 0 = nonzero.
bool verify_certificate(const LinearSystem& system, const SparseVec& certificate);
bool verify_solution(const LinearSystem& system, const std::vector<Scalar>& x);

/// Incremental row-echelon basis of a subspace of Q^n.
class EchelonBasis {
public:
    /// Returns true when v was independent of the vectors inserted so far.
    bool insert(SparseVec v);
    /// Reduces v against the basis; zero iff v lies in the span.
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<SparseVec> rows_;      // leading coefficient 1
    std::vector<int> lead_of_col_;     // column -> index into rows_, or -1
};

std::size_t rank_of(const std::vector<SparseVec>& vectors);

}  // namespace hvb
