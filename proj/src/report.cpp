#include "report.hpp"

#include <json.hpp>

#include <sstream>

namespace gl2 {
namespace report {

Context make_context(const ff::FieldCtx& F) {
    Context c;
    c.p = F.p();
    c.xi = F.xi();
    std::ostringstream os;
    os << F.sigma().a << "+" << F.sigma().b << "*theta";
    c.sigma = os.str();
    c.psi = "zeta_p^(x mod p)";
    return c;
}

std::string to_json(const SweepReport& r) {
    nlohmann::ordered_json j;
    j["version"] = r.version;
    nlohmann::ordered_json ctx;
    if (r.contexts.size() == 1) {
        ctx["p"] = r.contexts[0].p;
        ctx["xi"] = r.contexts[0].xi;
        ctx["sigma"] = r.contexts[0].sigma;
        ctx["psi"] = r.contexts[0].psi;
    } else {
        for (const auto& c : r.contexts) {
            ctx["p"].push_back(c.p);
            ctx["xi"].push_back(c.xi);
            ctx["sigma"].push_back(c.sigma);
            ctx["psi"] = c.psi;
        }
    }
    j["context"] = ctx;
    j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::ordered_json jv;
        jv["p"] = v.p;
        jv["nu"] = {v.nu_a, v.nu_b};
        jv["chi"] = {v.chi_a, v.chi_b};
        jv["mu_weight"] = v.mu_weight;
        jv["type"] = v.type;
        jv["t_chi"] = v.t_chi;
        jv["eps_chi"] = v.eps_chi;
        jv["eps_nu"] = v.eps_nu;
        jv["predicted"] = v.predicted;
        jv["char0_nonzero"] = v.char0_nonzero;
        jv["modp_nonzero"] = v.modp_nonzero;
        jv["mismatch"] = v.mismatch;
        if (!v.note.empty()) jv["note"] = v.note;
        j["verdicts"].push_back(jv);
    }
    j["summary"] = {{"checked", r.checked}, {"mismatches", r.mismatches}};
    if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
    j["wall_seconds"] = r.wall_seconds;
    return j.dump(2) + "\n";
}

std::string to_csv(const SweepReport& r) {
    std::ostringstream os;
    os << "p,nu_a,nu_b,chi_a,chi_b,mu_weight,type,t_chi,eps_chi,eps_nu,predicted,char0_nonzero,"
          "modp_nonzero\n";
    for (const auto& v : r.verdicts) {
        os << v.p << ',' << v.nu_a << ',' << v.nu_b << ',' << v.chi_a << ',' << v.chi_b << ','
           << v.mu_weight << ',' << v.type << ',' << v.t_chi << ',' << v.eps_chi << ',' << v.eps_nu
           << ',' << v.predicted << ',' << v.char0_nonzero << ',' << v.modp_nonzero << '\n';
    }
    return os.str();
}

} // namespace report
} // namespace gl2
