#pragma once

#include "hvb/basis.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hvb {

enum class AlgebraKind { Witt, Virasoro, Heisenberg, TwistedHV, G1, Wab, SV, DiffOps };

/// A graded Lie algebra given by a basis alphabet and structure constants on
/// basis pairs. Immutable; all member functions are pure.
///
///   witt        [L_m,L_n] = (n-m)L_{m+n}
///   virasoro    Witt + delta_{m+n,0} (m^3-m)/12 C
///   heisenberg  [I_m,I_n] = n delta_{m+n,0} CI
///   twisted-hv  Virasoro (charge CL) + Heisenberg (charge CI)
///               + [L_m,I_n] = n I_{m+n} + delta_{m+n,0} (m^2-m) CLI
///   g1          twisted-hv with all central charges dropped
///   wab(a,b)    Witt + [L_m,I_n] = (a+bm+n) I_{m+n}, [I,I] = 0
///   sv          Virasoro (charge C) + [L_m,I_n] = n I_{m+n},
///               [L_n,Y_r] = (r-n/2) Y_{n+r}, [Y_r,Y_s] = (s-r) I_{r+s}
///   diffops(p)  t^m D^n with the commutator of differential operators;
///               p caps the order used when enumerating generators
class AlgebraSpec {
public:
    static AlgebraSpec witt() { return AlgebraSpec(AlgebraKind::Witt); }
    static AlgebraSpec virasoro() { return AlgebraSpec(AlgebraKind::Virasoro); }
    static AlgebraSpec heisenberg() { return AlgebraSpec(AlgebraKind::Heisenberg); }
    static AlgebraSpec twisted_hv() { return AlgebraSpec(AlgebraKind::TwistedHV); }
    static AlgebraSpec g1() { return AlgebraSpec(AlgebraKind::G1); }
    static AlgebraSpec sv() { return AlgebraSpec(AlgebraKind::SV); }
    static AlgebraSpec wab(const Scalar& a, const Scalar& b);
    static AlgebraSpec diffops(int max_order);

    /// `witt | virasoro | heisenberg | twisted-hv | g1 | sv |
    ///  wab:a=<rat>,b=<rat> | diffops:order=<int>`
    static AlgebraSpec parse(std::string_view text);

    AlgebraKind kind() const { return kind_; }
    /// Canonical selection string; parse(id()) reproduces the algebra.
    std::string id() const;
    const Scalar& wab_a() const { return a_; }
    const Scalar& wab_b() const { return b_; }
    int max_order() const { return max_order_; }

    bool admits(const BasisVector& b) const;
    /// Throws InadmissibleBasis.
    void require_admissible(const BasisVector& b) const;
    void require_admissible(const Element& x) const;

    Element bracket(const BasisVector& x, const BasisVector& y) const;
    Element bracket(const Element& x, const Element& y) const;

    Scalar degree(const BasisVector& b) const;

    std::vector<BasisVector> center_basis() const;

    /// All admissible basis vectors with |degree| <= window (and order <= max_order
    /// for diffops), in canonical order.
    std::vector<BasisVector> generators(int window) const;

    /// Admissible basis vectors of exactly the given degree.
    std::vector<BasisVector> homogeneous_basis(const Scalar& degree) const;

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

private:
    explicit AlgebraSpec(AlgebraKind k) : kind_(k) {}

    AlgebraKind kind_;
    Scalar a_ = 0;
    Scalar b_ = 0;
    int max_order_ = 0;
};

inline Element bracket(const AlgebraSpec& alg, const Element& x, const Element& y) { return alg.bracket(x, y); }

}  // namespace hvb
