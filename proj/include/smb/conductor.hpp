#ifndef SMB_CONDUCTOR_HPP
#define SMB_CONDUCTOR_HPP

#include "smb/drinfeld.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smb {

enum class ConductorCase { C1Wild, C2Tame, HypothesisFailed };

std::string to_string(ConductorCase c);

struct ConductorReport {
    std::string place;
    int degree = 1;
    Valuation w_j;
    ConductorCase conductor_case = ConductorCase::C2Tame;
    std::optional<Rational> exponent;  // f_w; absent when the hypotheses fail
    std::string reason;
};

// Valuation-level local conductor; w0 = w(t) of the base ring generator.
ConductorReport local_conductor(unsigned q, const Valuation& w_j, PlaceKind kind, const Rational& w0);
ConductorReport conductor_local(const DrinfeldModule& phi, const Place& w);

// sum over places of deg(w) max(-w(j), 0)
Rational j_height(const DrinfeldModule& phi);

// Infinite place and every place in the support of j, in report order.
std::vector<Place> j_support(const DrinfeldModule& phi);

struct GlobalConductor {
    std::vector<ConductorReport> places;
    bool complete = true;
    Rational total; // sum of deg(w) f_w over places where it is defined
};
GlobalConductor global_conductor(const DrinfeldModule& phi);

struct SzpiroReport {
    Rational h_j;
    GlobalConductor conductor;
    std::optional<Rational> bound;
    std::optional<bool> holds;
};
SzpiroReport szpiro_report(const DrinfeldModule& phi);

} // namespace smb

#endif
