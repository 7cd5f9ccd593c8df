#pragma once

// Report records: every run documents the labelling choices (xi, sigma, psi)
// it was made under, since the character digits depend on them.

#include "sweeps.hpp"

#include <string>
#include <vector>

namespace gl2 {
namespace report {

inline constexpr const char* kToolVersion = "gl2tv 0.1.0";

struct Context {
    int p = 0;
    int xi = 0;
    std::string sigma; // "a+b*theta"
    std::string psi;   // additive character convention
};

Context make_context(const ff::FieldCtx& F);

struct SweepReport {
    std::string version = kToolVersion;
    std::vector<Context> contexts;
    std::vector<tori::Verdict> verdicts;
    long long checked = 0;
    long long mismatches = 0;
    std::vector<std::string> witnesses;
    double wall_seconds = 0;
};

// {version, context:{p,xi,sigma,psi}, verdicts:[...], summary:{checked,mismatches}}
std::string to_json(const SweepReport& r);

// fixed columns:
// p,nu_a,nu_b,chi_a,chi_b,mu_weight,type,t_chi,eps_chi,eps_nu,predicted,char0_nonzero,modp_nonzero
std::string to_csv(const SweepReport& r);

} // namespace report
} // namespace gl2
