#include <doctest.h>

#include "report.hpp"

#include <json.hpp>

using namespace gl2;

TEST_CASE("reports are deterministic and carry the full context") {
    sweeps::Options opt;
    opt.jobs = 2;
    auto make = [&]() {
        report::SweepReport r;
        auto res = sweeps::gauss_theorem_sweep(5, opt);
        r.checked = res.checked;
        r.mismatches = res.mismatches;
        r.verdicts = res.verdicts;
        r.contexts.push_back(report::make_context(ff::FieldCtx(5)));
        return r;
    };
    report::SweepReport r1 = make(), r2 = make();
    CHECK(report::to_csv(r1) == report::to_csv(r2));
    // wall time aside, the JSON payload is identical; both runs carry zero wall time here
    CHECK(report::to_json(r1) == report::to_json(r2));
}

TEST_CASE("csv header is pinned") {
    report::SweepReport r;
    CHECK(report::to_csv(r) ==
          "p,nu_a,nu_b,chi_a,chi_b,mu_weight,type,t_chi,eps_chi,eps_nu,predicted,char0_nonzero,"
          "modp_nonzero\n");
}

TEST_CASE("json document has the pinned schema") {
    report::SweepReport r;
    auto res = sweeps::gauss_theorem_sweep(3, sweeps::Options{});
    r.checked = res.checked;
    r.mismatches = res.mismatches;
    r.verdicts = res.verdicts;
    r.contexts.push_back(report::make_context(ff::FieldCtx(3)));
    auto j = nlohmann::json::parse(report::to_json(r));
    CHECK(j.contains("version"));
    CHECK(j["context"].contains("p"));
    CHECK(j["context"].contains("xi"));
    CHECK(j["context"].contains("sigma"));
    CHECK(j["context"].contains("psi"));
    CHECK(j["context"]["p"] == 3);
    CHECK(j["context"]["xi"] == 2);
    CHECK(j.contains("verdicts"));
    CHECK(j["summary"]["mismatches"] == 0);
    CHECK(j["summary"]["checked"] == r.checked);
    // one verdict row per (nu, chi, mu in {triv, quad}): p=3 has one nu, two chi
    CHECK(j["verdicts"].size() == 4);
}
