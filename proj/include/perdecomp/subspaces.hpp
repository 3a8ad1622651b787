#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "perdecomp/shift_poly.hpp"
#include "perdecomp/signal.hpp"

namespace perdecomp {

/// P(d): d-periodic, AP(d): d-antiperiodic, C(k): kernel of Phi_k(E).
enum class SubspaceKind { periodic, antiperiodic, cyclotomic };

struct SubspaceLabel {
    SubspaceKind kind = SubspaceKind::periodic;
    std::int64_t param = 1;
    /// "P_3", "AP_2", "C_5", or the names S, T, U used for P_12.
    std::string name;

    friend bool operator==(const SubspaceLabel& a, const SubspaceLabel& b) {
        return a.kind == b.kind && a.param == b.param;
    }
    friend auto operator<=>(const SubspaceLabel& a, const SubspaceLabel& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.param <=> b.param;
    }
};

SubspaceLabel periodic_label(std::int64_t d);
SubspaceLabel antiperiodic_label(std::int64_t d);

/// Label of ker Phi_k(E) inside P_p. k = 1 is P_1, k = 2^j is AP_{2^{j-1}};
/// for p = 12 the kernels k = 3, 6, 12 are named S, T, U; otherwise C_k.
SubspaceLabel cyclotomic_label(std::int64_t k, std::int64_t p);

/// Membership with tolerance relative to the signal size:
/// defect <= tol * (1 + sup |f|).
bool is_member(const Signal& f, const SubspaceLabel& label, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Folds

/// I + E^d + E^{2d} + ... + E^{(m-1)d}
ShiftPoly fold_operator(std::int64_t d, std::int64_t m);
/// I - E^d + E^{2d} - ... + (-1)^{m-1} E^{(m-1)d}
ShiftPoly alternating_fold_operator(std::int64_t d, std::int64_t m);

/// Maps P_p into P_d (p = m d). p defaults to the grid period, which must then
/// be an integer. Throws NotADivisor, IncommensurateShift.
Signal fold(const Signal& f, std::int64_t d);
Signal fold(const Signal& f, std::int64_t d, std::int64_t p);

/// fold / m: the averaging projector of P_p onto P_d.
Signal normalized_fold(const Signal& f, std::int64_t d, std::int64_t p);

/// The canonical preimage f_d / m, whose fold is f_d. Preimages are not
/// unique: adding anything from the null space of the fold (see
/// fold_null_component) gives another one. Throws NotInSubspace unless f_d is
/// d-periodic.
Signal fold_preimage(const Signal& f_d, std::int64_t d, std::int64_t p,
                     double tol = kDefaultTol);

/// g - normalized_fold(g): the part of g the fold annihilates.
Signal fold_null_component(const Signal& g, std::int64_t d, std::int64_t p);

/// Alternating sum over m = p/d odd copies. Maps AP_p into AP_d.
/// Throws NotADivisor, EvenQuotient, IncommensurateShift.
Signal antifold(const Signal& f, std::int64_t d, std::int64_t p);

/// f~_d / m, whose antifold is f~_d. Throws NotInSubspace unless f~_d is
/// d-antiperiodic.
Signal antifold_preimage(const Signal& f_d, std::int64_t d, std::int64_t p,
                         double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Rational-operator projections

struct RationalProjection {
    /// P_1, AP_1 or AP_2 part.
    Signal base;
    /// S, T or U part.
    Signal kernel;
};

/// P_3 = P_1 + S with g = (I+E+E^2)/(2I+E^2) f and h = (I-E)/(2I+E^2) f.
RationalProjection project_P3(const Signal& f, double tol = kDefaultTol);
/// AP_3 = AP_1 + T with g = (E^2-E+I)/(2I+E^2) f and h = (I+E)/(2I+E^2) f.
RationalProjection project_AP3(const Signal& f, double tol = kDefaultTol);
/// AP_6 = AP_2 + U with g = (E^4-E^2+I)/(2I+E^4) f and h = (I+E^2)/(2I+E^4) f.
RationalProjection project_AP6(const Signal& f, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Cyclotomic decomposition

/// Component of f on the DFT bins where the eigenvalue of E (unit shift) is a
/// primitive k-th root of unity. The grid period P must be an integer, N a
/// multiple of P, and k a divisor of P.
Signal cyclotomic_project(const Signal& f, std::int64_t k);

struct DecompositionPart {
    SubspaceLabel label;
    std::int64_t cyclotomic_index = 1;
    Signal signal;
};

class Decomposition {
public:
    Decomposition(Signal source, std::int64_t period, std::vector<DecompositionPart> parts);

    const Signal& source() const noexcept { return source_; }
    std::int64_t period() const noexcept { return period_; }
    const std::vector<DecompositionPart>& parts() const noexcept { return parts_; }

    /// Lookup by label name ("S", "AP_1", "C_5", ...). Throws InvalidParameter.
    const Signal& part(std::string_view name) const;

    Signal sum() const;

private:
    Signal source_;
    std::int64_t period_;
    std::vector<DecompositionPart> parts_;
};

/// P_p as the direct sum of ker Phi_k(E) over k | p. p must divide the grid
/// period and f must be p-periodic (NotInSubspace otherwise).
Decomposition cyclotomic_decompose(const Signal& f, std::int64_t p, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Explicit forms inside P_6 and P_12

struct SubspaceForm {
    SubspaceLabel label;
    /// The shift polynomial that produced the form.
    ShiftPoly op;
    Signal signal;
};

/// f_1, f_2, f_3, f~_1, f~_2, f~_3 for a 6-periodic f.
///
/// AP_2 and P_6 only share the zero function, so f~_2 = (I - E^2 + E^4) g
/// needs g in AP_6; it is evaluated on the 6-antiperiodic part (I - E^6)/2 f,
/// which vanishes for 6-periodic input.
std::vector<SubspaceForm> p6_forms(const Signal& f, double tol = kDefaultTol);

/// f_1, f_2, f_3, f_4, f_6, f~_1, f~_2, f~_3, f~_6 for a 12-periodic f.
std::vector<SubspaceForm> p12_forms(const Signal& f, double tol = kDefaultTol);

}  // namespace perdecomp
