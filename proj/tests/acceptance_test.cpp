// Acceptance gate: runs the full reconciliation suite at a fixed seed and
// grades each criterion from the check records. One line per criterion;
// nonzero exit if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "lueq/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char* description;
};

const Criterion kCriteria[] = {
    {1, "canonical form collapses the phase/swap orbit, witnesses verified"},
    {2, "closed-form equivalence agrees with direct unitary search and invariants"},
    {3, "conjugation entries match the independent term-by-term expansion"},
    {4, "pure-state invariants constant on orbits; planted/distinct pairs decided"},
    {5, "tensor factor extraction round-trips; phase search recovers witnesses"},
    {6, "discriminant entropy equals eigenvalue entropy"},
    {7, "relative-entropy discord routes agree"},
    {8, "SC separability coincides with positive partial transpose"},
    {9, "measured discord sanity: classical zero, Bell one bit"},
    {10, "stated closed forms reconciled, deltas pinned as expected mismatches"},
    {11, "separable Monte Carlo never undercuts the relative-entropy discord"},
};

}  // namespace

int main() {
    const lueq::VerifyReport report = lueq::run_verify_suite(42);

    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        int checks = 0;
        int expected_gaps = 0;
        bool ok = true;
        for (const lueq::VerifyCheck& chk : report.checks) {
            if (chk.criterion != c.id) continue;
            ++checks;
            if (chk.status == lueq::VerifyStatus::PropertyFail) ok = false;
            if (chk.status == lueq::VerifyStatus::Mismatch) {
                if (chk.expected_mismatch) {
                    ++expected_gaps;
                } else {
                    ok = false;
                }
            }
        }
        if (checks == 0) ok = false;
        // the reconciliation criterion must actually contain the four
        // documented closed-form gaps
        if (c.id == 10 && expected_gaps != 4) ok = false;
        all_pass = all_pass && ok;
        std::printf("criterion %2d: %s  %s (%d checks)\n", c.id, ok ? "PASS" : "FAIL",
                    c.description, checks);
    }

    {
        const lueq::VerifyReport second = lueq::run_verify_suite(42);
        const bool ok = lueq::verify_to_json(report) == lueq::verify_to_json(second);
        all_pass = all_pass && ok;
        std::printf("criterion 12: %s  same-seed runs produce byte-identical reports\n",
                    ok ? "PASS" : "FAIL");
    }

    if (!lueq::verify_passed(report)) {
        std::printf("suite-level failure: unexpected mismatch or property failure present\n");
        all_pass = false;
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
    return all_pass ? 0 : 1;
}
