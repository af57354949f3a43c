#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace zagier {

/// One verified claim, aggregated over the swept range. The witness holds
/// the first counterexample found (empty while the claim passes).
struct Check {
    std::string anchor;
    bool passed = true;
    std::string witness;
    long tested = 0;
};

/// Structured outcome of a verification sweep.
struct VerifyReport {
    std::string suite;
    std::string range;
    std::vector<Check> checks;
    long failures = 0;
    long elapsed_ms = 0;

    bool ok() const { return failures == 0; }

    /// Records one instance of a claim; same-anchor records aggregate.
    void record(const std::string& anchor, bool pass, const std::string& witness = "") {
        Check* c = nullptr;
        for (auto& existing : checks)
            if (existing.anchor == anchor) {
                c = &existing;
                break;
            }
        if (!c) {
            checks.push_back(Check{anchor, true, "", 0});
            c = &checks.back();
        }
        ++c->tested;
        if (!pass) {
            ++failures;
            if (c->passed) {
                c->passed = false;
                c->witness = witness;
            }
        }
    }

    void merge(const VerifyReport& o) {
        for (const auto& c : o.checks) checks.push_back(c);
        failures += o.failures;
        elapsed_ms += o.elapsed_ms;
    }

    std::string summary() const {
        std::string s = suite + " [" + range + "]: ";
        s += ok() ? "ok" : (std::to_string(failures) + " failure(s)");
        for (const auto& c : checks)
            if (!c.passed) s += "\n  FAIL " + c.anchor + ": " + c.witness;
        return s;
    }
};

/// Wall-clock helper for filling VerifyReport::elapsed_ms.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace zagier
